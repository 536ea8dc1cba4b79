//! Catalogued Floer groups for each library web, all flavours, first 1-set.

use webfloer::catalogue::{homology, recognize, CatalogueFlavour};
use webfloer::library;
use webfloer::onesets::enumerate_onesets;

fn main() {
    let webs = [
        ("unknot", library::unknot()),
        ("theta", library::theta()),
        ("tetrahedron", library::tetrahedron()),
        ("L2", library::prism(2)),
        ("handcuff", library::handcuff()),
        ("Hopf handcuff", library::hopf_handcuff()),
    ];
    for (name, web) in webs {
        let family = recognize(&web).map(|f| f.to_string()).unwrap_or_else(|e| e.to_string());
        let s = &enumerate_onesets(&web)[0];
        println!("{name} ({family}), c = {:?}", s.c_edge_ids(&web));
        for f in CatalogueFlavour::ALL {
            match homology(&web, s, f) {
                Ok(a) => {
                    let groups: Vec<&str> = a.entries.iter().map(|e| e.group.as_str()).collect();
                    println!("  {f}: {:?} {groups:?} total rank {:?}", a.status, a.total_rank);
                }
                Err(e) => println!("  {f}: {e}"),
            }
        }
    }
}
