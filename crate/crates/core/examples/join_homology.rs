//! Reduced homology of the order complex of `(TΦ_k)ⁿ − {0}` against the
//! join prediction, for every (n, k) with at most `max` elements.
//!
//! cargo run --release --example join_homology -- 2000

use std::time::Instant;

use tphi::complex::{order_complex, DEFAULT_SIMPLEX_CAP};
use tphi::homology::homology_groups;
use tphi::mccord::core_reduced_homology;
use tphi::models::{build_tphi_power, expected_join_betti};

fn main() {
    let max: u128 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(200);
    for n in 1..=12usize {
        for k in 1..=max as u64 {
            let count = u128::from(k + 1).pow(n as u32) - 1;
            if count > max {
                break;
            }
            let start = Instant::now();
            let p = build_tphi_power(n, k, max).unwrap().poset;
            let chains = p.chain_count();
            let (h, route) = if chains <= DEFAULT_SIMPLEX_CAP {
                (homology_groups(&order_complex(&p, DEFAULT_SIMPLEX_CAP).unwrap(), true), "direct")
            } else {
                (core_reduced_homology(&p, DEFAULT_SIMPLEX_CAP, true).unwrap(), "core")
            };
            let ok = h == expected_join_betti(n, k);
            println!(
                "n={n} k={k} elements={count} simplices={chains} route={route} {} {:.2}s",
                if ok { "match" } else { "MISMATCH" },
                start.elapsed().as_secs_f64()
            );
        }
    }
}
