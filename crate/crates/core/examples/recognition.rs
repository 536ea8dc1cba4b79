//! Family recognition of tagged and untagged webs, including ladder alignment.

use webfloer::catalogue::{ladders, recognize};
use webfloer::library;
use webfloer::webmodel::WebGraph;

fn untagged(w: &WebGraph) -> WebGraph {
    w.clone().with_spatial(None)
}

fn main() {
    let webs = [
        ("prism 5", untagged(&library::prism(5))),
        ("Petersen", library::petersen()),
        ("abstract Petersen", library::petersen_abstract()),
        ("braid closure", library::braid_closure(&[1, 2, 3, 4, -2], 5)),
        ("theta", untagged(&library::theta())),
    ];
    for (name, web) in webs {
        let family = recognize(&web).map(|f| f.to_string()).unwrap_or_else(|e| e.to_string());
        println!("{name}: {family}, {} ladder readings", ladders(&web).len());
    }
}
