//! Framed ranks of unlinks by summation over based 1-sets.

use webfloer::catalogue::framed_rank;
use webfloer::library;

fn main() {
    for n in 1..=6 {
        let web = library::unlink(n);
        let full = framed_rank(&web, "c01", false).expect("unlink");
        let restricted = framed_rank(&web, "c01", true).expect("unlink");
        println!("U{n}: rank {} over {} based 1-sets, restricted {}", full.rank, full.based_onesets, restricted.rank);
    }
}
