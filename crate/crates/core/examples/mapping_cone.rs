//! The cone of υ on the check complex of the unknot pattern.

use webfloer::floerblocks::synth::{unknot_pattern, unknot_upsilon};
use webfloer::floerblocks::{build_flavour, Flavour};

fn main() {
    let bc = unknot_pattern(-15, 15);
    let fc = build_flavour(&bc, Flavour::Check).expect("validated");
    let upsilon = unknot_upsilon(&fc);
    let cone = fc.complex.cone(&fc.complex, &upsilon, -1).expect("υ is a chain map");
    let dims = cone.homology((-10, 9)).expect("complex");
    let nonzero: Vec<_> = dims.iter().filter(|(_, d)| **d > 0).collect();
    println!("cone homology away from truncation: {nonzero:?}");
}
