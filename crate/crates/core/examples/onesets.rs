//! Enumerates the 1-sets of the theta web and the L₂ prism with their r-cycles and cover data.

use webfloer::library;
use webfloer::onesets::{cover_shadow, enumerate_onesets, is_even, r_cycles};

fn main() {
    for (name, web) in [("theta", library::theta()), ("L2", library::prism(2))] {
        println!("{name}:");
        for (k, s) in enumerate_onesets(&web).iter().enumerate() {
            let cycles = r_cycles(&web, s);
            let shadow = cover_shadow(&web, s).expect("planar web");
            println!(
                "  #{k} c = {:?}, n = {}, even = {}, naive spin-c count = {}",
                s.c_edge_ids(&web),
                cycles.n(),
                is_even(&web, s),
                shadow.naive_spinc_count
            );
        }
    }
}
