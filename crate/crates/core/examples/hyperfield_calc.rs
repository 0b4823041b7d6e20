//! Hyperaddition in TΦ: sums of values are sets of arcs, possibly with zero.
//!
//! cargo run --example hyperfield_calc

use tphi::hyperfield::{boxplus_fold, boxplus_pair, contains_zero, TPhiValue};

fn v(s: &str) -> TPhiValue {
    s.parse().unwrap()
}

fn main() {
    let pairs = [("1/4", "0"), ("0/1", "1/2"), ("0/1", "1/4"), ("7/8", "1/8"), ("1/3", "1/3")];
    for (a, b) in pairs {
        println!("{a} ⊞ {b} = {}", boxplus_pair(&v(a), &v(b)));
    }
    let terms = [v("0/1"), v("1/3"), v("2/3")];
    println!("0/1 ⊞ 1/3 ⊞ 2/3 = {}", boxplus_fold(&terms).unwrap());
    println!("contains zero: {}", contains_zero(&terms).unwrap());
    println!("1/3 · 1/2 = {}", v("1/3").mul(&v("1/2")));
    println!("−1/4 = {}", v("1/4").neg());
}
