//! Writes the library webs, foams and a seeded block complex as JSON documents.

use std::fs;
use std::path::PathBuf;

use webfloer::floerblocks::synth::{unknot_pattern, validated_complexes};
use webfloer::library;

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("data"));
    fs::create_dir_all(&dir)?;
    let webs = [
        ("theta", library::theta()),
        ("unknot", library::unknot()),
        ("l2", library::prism(2)),
        ("l3", library::prism(3)),
        ("l5", library::prism(5)),
        ("tetrahedron", library::tetrahedron()),
        ("unlink3", library::unlink(3)),
        ("theta_plus_unknot", library::theta_plus_unknot()),
        ("handcuff", library::handcuff()),
        ("petersen", library::petersen()),
    ];
    for (name, w) in webs {
        fs::write(dir.join(format!("{name}.json")), w.to_json() + "\n")?;
    }
    let foams = [("product_theta_foam", library::product_theta_foam()), ("cone_foam", library::cone_foam())];
    for (name, f) in foams {
        let text = serde_json::to_string_pretty(&f.to_document()).expect("foam serializes");
        fs::write(dir.join(format!("{name}.json")), text + "\n")?;
    }
    let unknot = serde_json::to_string_pretty(&unknot_pattern(-6, 6).to_document()).expect("complex serializes");
    fs::write(dir.join("unknot_blocks.json"), unknot + "\n")?;
    let synth = serde_json::to_string_pretty(&validated_complexes(7, 1, 8)[0].to_document()).expect("complex serializes");
    fs::write(dir.join("synth_blocks.json"), synth + "\n")?;
    println!("wrote fixtures to {}", dir.display());
    Ok(())
}
