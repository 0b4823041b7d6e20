//! Order complexes, joins, Euler characteristics and collapse certificates.
//!
//! cargo run --example order_complexes

use tphi::complex::{collapse_certify, discrete_complex, euler_characteristic, join, order_complex, CollapseCertificate};
use tphi::models::build_tphi_power;

fn main() {
    let p = build_tphi_power(2, 2, 100).unwrap().poset;
    let delta = order_complex(&p, 1000).unwrap();
    println!("Δ(TΦ_2² − 0): faces per dimension {:?}, χ = {}", delta.face_counts(), euler_characteristic(&delta));
    print!("{delta}");

    let pair = |tag: &str| discrete_complex([format!("{tag}+"), format!("{tag}-")]);
    let octahedron = join(&join(&pair("x"), &pair("y")), &pair("z"));
    println!("octahedron: {:?}, χ = {}", octahedron.face_counts(), euler_characteristic(&octahedron));

    let cone = join(&delta, &discrete_complex(["apex"]));
    for (name, c) in [("8-cycle", &delta), ("cone over it", &cone)] {
        match collapse_certify(c) {
            CollapseCertificate::Collapsible { cone_apex, steps } => {
                println!("{name}: collapsible in {} steps (cone: {})", steps.len(), cone_apex.is_some())
            }
            CollapseCertificate::Inconclusive { remaining } => println!("{name}: inconclusive, {remaining} simplices left"),
        }
    }
}
