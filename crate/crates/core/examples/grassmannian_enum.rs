//! Enumerating strong phased matroids with phases in TΦ_k, up to scalars.
//!
//! cargo run --release --example grassmannian_enum -- 4 2 2

use tphi::models::enum_grassmannian;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (n, r, k) = match args[..] {
        [n, r, k] => (n, r, k as u64),
        _ => (3, 2, 2),
    };
    let found = enum_grassmannian(n, r, k, 1 << 32, true).unwrap();
    for phi in &found {
        println!("{phi:?}");
    }
    println!("{} functions for n={n} r={r} k={k}", found.len());
}
