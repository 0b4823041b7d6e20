#![allow(dead_code)]

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use tphi::complex::SimplicialComplex;
use tphi::hyperfield::{PhaseAngle, TPhiValue};
use tphi::poset::{build_poset, FinitePoset};

/// Poset on `e00, e01, …` with `i < j` whenever `bits` says so for `i < j`
/// (index order is a linear extension, so the relation is acyclic).
pub fn poset_from_bits(n: usize, bits: &[bool]) -> FinitePoset {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i:02}")).collect();
    let mut pairs = Vec::new();
    let mut b = bits.iter().cycle();
    for i in 0..n {
        for j in i + 1..n {
            if *b.next().unwrap() {
                pairs.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    build_poset(labels, pairs).unwrap()
}

pub fn arb_poset(max: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max, prop::collection::vec(prop::bool::weighted(0.35), 1..64))
        .prop_map(|(n, bits)| poset_from_bits(n, &bits))
}

/// A complex generated by up to `faces` random vertex sets on `verts` vertices.
pub fn arb_complex(verts: usize, faces: usize, max_size: usize) -> impl Strategy<Value = SimplicialComplex> {
    (2..=verts)
        .prop_flat_map(move |n| {
            (Just(n), prop::collection::vec(prop::collection::btree_set(0..n, 1..=max_size.min(n)), 1..=faces))
        })
        .prop_map(|(n, sets)| {
            let sets: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
            SimplicialComplex::from_simplices((0..n).map(|i| format!("v{i:02}")), sets).unwrap()
        })
}

pub fn arb_value(max_den: i64) -> impl Strategy<Value = TPhiValue> {
    prop_oneof![
        1 => Just(TPhiValue::Zero),
        6 => (1..=max_den).prop_flat_map(|q| (0..q, Just(q)))
            .prop_map(|(p, q)| TPhiValue::Unit(PhaseAngle::new(p, q).unwrap())),
    ]
}

pub fn rp2() -> SimplicialComplex {
    let tris = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]];
    SimplicialComplex::from_simplices((0..6).map(|i| i.to_string()), tris).unwrap()
}

/// Value `j/k` of a discretization as `Some(j)`, zero as `None`.
pub fn grid(v: &TPhiValue, k: u64) -> Option<u64> {
    v.angle().map(|a| {
        let t = a.turns() * num_rational::BigRational::from_integer(k.into());
        assert!(t.is_integer());
        u64::try_from(t.to_integer()).unwrap()
    })
}

pub fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
        let term = BigInt::from(m[0][j]) * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        for i in rank + 1..a.len() {
            let f = &a[i][c] / &a[rank][c];
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[rank][c..]) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// gcd of all `t × t` minors.
pub fn minor_gcd(m: &[Vec<i64>], t: usize) -> BigInt {
    let cols = m[0].len();
    let mut g = BigInt::zero();
    for rows in (0..m.len()).combinations(t) {
        for cs in (0..cols).combinations(t) {
            let sub: Vec<Vec<i64>> = rows.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
            g = g.gcd(&cofactor_det(&sub));
        }
    }
    g
}

/// The boundary of an `n`-gon.
pub fn cycle_complex(n: usize) -> SimplicialComplex {
    let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    SimplicialComplex::from_simplices((0..n).map(|i| format!("c{i:02}")), edges).unwrap()
}
