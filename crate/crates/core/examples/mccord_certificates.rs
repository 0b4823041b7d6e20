//! Contractibility certificates for basic opens and CW type reports.
//!
//! cargo run --example mccord_certificates

use tphi::complex::DEFAULT_SIMPLEX_CAP;
use tphi::mccord::{basis_certificates, cw_type_report, finite_space_homology};
use tphi::models::{build_perp_poset, build_tphi_power};

fn main() {
    let p = build_tphi_power(2, 2, 100).unwrap().poset;
    for line in basis_certificates(&p, DEFAULT_SIMPLEX_CAP).lines() {
        println!("{line}");
    }
    for line in cw_type_report(&p, DEFAULT_SIMPLEX_CAP).lines() {
        println!("{line}");
    }
    let circle = build_perp_poset(&["0/1,0/1,0/1".parse().unwrap()], 2).unwrap();
    print!("{}", finite_space_homology(&circle.mirrored.poset, DEFAULT_SIMPLEX_CAP).unwrap());
}
