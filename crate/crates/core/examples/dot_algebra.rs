//! Normal forms and vertex relations in the dot-operator algebra of the tetrahedron.

use webfloer::dotalgebra::DotAlgebra;
use webfloer::library;
use webfloer::onesets::enumerate_onesets;

fn main() {
    let web = library::tetrahedron();
    let s = &enumerate_onesets(&web)[0];
    let alg = DotAlgebra::new(&web, s).expect("algebra");
    println!("1-set c = {:?}, {} cycle generators", s.c_edge_ids(&web), alg.generator_count());
    for expr in ["e12*e12", "e12*e13 + e13*e12", "U*e13*e14", "e12 + e34", "e12*e13*e14"] {
        match alg.parse(expr) {
            Ok(x) => println!("  {expr} = {x}"),
            Err(e) => println!("  {expr}: {e}"),
        }
    }
    let report = alg.vertex_relations();
    println!("vertex relations hold at {} vertices: {}", report.vertices_checked, report.ok());
    println!("rank over F2[U]: {}", alg.rank_over_u());
}
