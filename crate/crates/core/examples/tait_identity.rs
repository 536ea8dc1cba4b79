//! Tait counts and the even 1-set identity on named webs and random cubic multigraphs.

use webfloer::library;
use webfloer::tait::{count_tait, random_cubic_multigraphs, verify_identity};

fn main() {
    for (name, web) in [
        ("theta", library::theta()),
        ("K4", library::tetrahedron()),
        ("L3", library::prism(3)),
        ("Petersen", library::petersen()),
        ("U3", library::unlink(3)),
    ] {
        let r = verify_identity(&web);
        println!("{name}: Tait = {}, even 1-set sum = {}, ok = {}", count_tait(&web), r.identity_rhs, r.ok);
    }
    let graphs = random_cubic_multigraphs(8, 1, 100).expect("valid parameters");
    let ok = graphs.iter().filter(|w| verify_identity(w).ok).count();
    println!("random cubic multigraphs: {ok}/{} satisfy the identity", graphs.len());
}
