//! Dirac index calibration, b⁺, admissibility, adjunction, Picard membership and vortex moduli.

use webfloer::foamcalc::{
    adjunction_degree, admissible_foam, b_plus, dirac_index_bifold, surface_picard_member, vortex_moduli,
};
use webfloer::rational::{int, q, to_text};

fn main() {
    println!("CP2 degree 2: {}", to_text(&dirac_index_bifold(int(4), int(1), int(4), int(4))));
    println!("CP2 degree 4: {}", to_text(&dirac_index_bifold(int(1), int(1), int(4), int(16))));
    for g in 0..=4 {
        let bp = b_plus(2 * g, int(0));
        println!("genus {g}: b+ = {}, admissible = {}", to_text(&bp), admissible_foam(2 * g, int(0)));
    }
    println!("adjunction degree, genus 0 with 5 points: {}", to_text(&adjunction_degree(0, 5)));
    println!("c = 1/2 with one odd point: {:?}", surface_picard_member(q(1, 2), &[1]));
    println!("vortex moduli deg L = 1, deg K = 4, e = 2: {:?}", vortex_moduli(int(1), int(4), 2));
}
