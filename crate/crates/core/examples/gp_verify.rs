//! Checking the strong Grassmann–Plücker relations on a hand-written function.
//!
//! cargo run --example gp_verify

use tphi::phased::{gp_normalize, gp_verify_all, GPFunction, GPVerdict};

fn main() {
    // a rank-2 function on [4] with phases in eighths of a turn
    let text = "4 2\n1 2 : 0/1\n1 3 : 1/8\n1 4 : 1/4\n2 3 : 3/8\n2 4 : 1/2\n3 4 : 5/8\n";
    let phi: GPFunction = text.parse().unwrap();
    report("sample", &phi);

    let broken: GPFunction = "4 2\n1 2 : 0/1\n1 3 : 0/1\n1 4 : 0/1\n2 3 : 1/4\n2 4 : 5/8\n3 4 : 0/1\n".parse().unwrap();
    report("broken", &broken);

    report("zero", &GPFunction::zero(3, 2).unwrap());

    let scaled = phi.scale(&"1/3".parse().unwrap());
    println!("normalizing a rotated copy recovers the original: {}", gp_normalize(&scaled).unwrap() == phi);
}

fn report(name: &str, phi: &GPFunction) {
    match gp_verify_all(phi) {
        GPVerdict::Pass => println!("{name}: pass"),
        GPVerdict::Fail(why) => println!("{name}: fail ({why})"),
    }
}
