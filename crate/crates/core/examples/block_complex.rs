//! Builds the three flavours of the unknot block pattern and checks the i/j/p sequence.

use webfloer::floerblocks::synth::unknot_pattern;
use webfloer::floerblocks::{build_ijp, flavour_homologies, validate_identities};

fn main() {
    let bc = unknot_pattern(-8, 8);
    let report = validate_identities(&bc).expect("well-shaped blocks");
    println!("identities hold: {}", report.ok());
    for (flavour, dims) in flavour_homologies(&bc, (-4, 4)).expect("validated") {
        let row: Vec<String> = dims.iter().map(|(g, d)| format!("{g}:{d}")).collect();
        println!("{flavour:?}: {}", row.join(" "));
    }
    let ijp = build_ijp(&bc).expect("validated");
    println!("chain map failures: {:?}", ijp.chain_map_failures());
    println!("exactness: {:?}", ijp.exactness());
}
