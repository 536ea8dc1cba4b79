//! Vanishing and nonvanishing verdicts on the handcuff family, prisms and the Petersen embedding.

use webfloer::catalogue::{distinguished_oneset, vanishing_check};
use webfloer::library;
use webfloer::onesets::enumerate_onesets;

fn main() {
    let webs = [
        ("L1", library::prism(1)),
        ("twisted handcuff", library::twisted_handcuff()),
        ("L3", library::prism(3)),
        ("L5", library::prism(5)),
        ("Petersen", library::petersen()),
    ];
    for (name, web) in webs {
        let s = distinguished_oneset(&web).ok().flatten().unwrap_or_else(|| enumerate_onesets(&web).remove(0));
        let v = vanishing_check(&web, &s);
        println!("{name} c = {:?}: {:?} by {:?}, total rank {:?}", s.c_edge_ids(&web), v.verdict, v.rule, v.total_rank);
    }
}
