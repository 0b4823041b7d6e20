//! Integral homology through Smith normal forms, with torsion.
//!
//! cargo run --example homology_snf

use tphi::complex::SimplicialComplex;
use tphi::homology::{boundary_matrix, homology_groups, smith_normal_form, IntegerMatrix};

fn main() {
    let m = IntegerMatrix::from_rows(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let factors: Vec<String> = smith_normal_form(&m).iter().map(ToString::to_string).collect();
    println!("invariant factors: {}", factors.join(" | "));

    // six-vertex triangulation of the real projective plane
    let rp2 = SimplicialComplex::parse(
        "0 1 2\n0 2 3\n0 3 4\n0 4 5\n0 5 1\n1 2 4\n2 3 5\n3 4 1\n4 5 2\n5 1 3\n",
    )
    .unwrap();
    let d2 = boundary_matrix(&rp2, 2).unwrap();
    println!("∂₂ is {}×{} with {} nonzeros", d2.rows(), d2.cols(), d2.nnz());
    print!("{}", homology_groups(&rp2, false));
}
