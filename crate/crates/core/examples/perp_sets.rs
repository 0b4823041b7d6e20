//! Perp sets over the discretization TΦ_k and the poset they form.
//!
//! cargo run --example perp_sets

use tphi::models::{build_perp_poset, DISCRETIZATION_CAVEAT};
use tphi::phased::{perp_enumerate, PhasedVector};
use tphi::poset::format_mirrored;

fn main() {
    let v: PhasedVector = "0/1,0/1".parse().unwrap();
    for k in [2, 4, 8] {
        let members = perp_enumerate(std::slice::from_ref(&v), k).unwrap();
        let shown: Vec<String> = members.iter().map(|m| format!("({m})")).collect();
        println!("k={k}: {}", shown.join(" "));
    }
    println!("# {DISCRETIZATION_CAVEAT}");

    let w: PhasedVector = "0/1,0/1,0/1".parse().unwrap();
    let model = build_perp_poset(&[w], 2).unwrap();
    println!("(1,1,1)⊥ in TΦ_2³ has {} elements", model.mirrored.poset.len());
    print!("{}", format_mirrored(&model.mirrored));
}
