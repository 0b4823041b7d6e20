//! Transversals of distinct-entry tuples under transpositions.
//!
//! cargo run --example transversal

use tphi::phased::{check_transversal, transversal};

fn main() {
    for (n, r) in [(3, 2), (3, 3), (4, 2), (5, 3)] {
        let t = transversal(n, r).unwrap();
        let ok = check_transversal(&t).is_ok();
        println!("n={n} r={r}: |T|={} properties hold: {ok}", t.d());
        if t.d() <= 6 {
            println!("  {:?}", t.tuples);
        }
    }
}
