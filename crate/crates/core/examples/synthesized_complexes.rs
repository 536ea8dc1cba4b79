//! Generates seeded validated block complexes and runs the flavour checks on each.

use webfloer::floerblocks::build_ijp;
use webfloer::floerblocks::synth::validated_complexes;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for (k, bc) in validated_complexes(seed, 10, 40).iter().enumerate() {
        let ijp = build_ijp(bc).expect("validated");
        let h: Vec<usize> = [&ijp.check, &ijp.hat, &ijp.bar]
            .iter()
            .map(|fc| fc.complex.total_homology().expect("complex"))
            .collect();
        println!(
            "#{k}: {} generators, total homology check/hat/bar = {h:?}, exact = {}",
            bc.len(),
            ijp.exactness().all()
        );
    }
}
