//! Integral simplicial homology through Smith normal forms of boundary maps.

mod matrix;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::complex::{facets, SimplicialComplex};

pub use matrix::IntegerMatrix;
pub use snf::{dense_invariant_factors, dense_rank, rational_rank, smith_normal_form};

use snf::{densify, eliminate_units, factors_from_lines, SparseLine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("boundary dimension {dim} out of range 0..={max}")]
    DimOutOfRange { dim: usize, max: usize },
}

/// Boundary columns of `∂_dim` in small-integer form, one per `dim`-simplex.
fn boundary_lines(c: &SimplicialComplex, dim: usize) -> Vec<SparseLine> {
    if dim == 0 {
        return vec![Vec::new(); c.faces(0).len()];
    }
    c.faces(dim)
        .iter()
        .map(|s| {
            let mut col: SparseLine = facets(s)
                .enumerate()
                .map(|(i, f)| {
                    let row = c.face_index(&f).expect("complex is closed") as u32;
                    (row, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect()
}

/// The matrix of `∂_dim : C_dim → C_{dim−1}` in the bases of sorted simplices,
/// with `∂[v₀…v_d] = Σ (−1)^i [v₀…v̂_i…v_d]`. Valid for `0 ≤ dim ≤ dim(c)+1`.
pub fn boundary_matrix(c: &SimplicialComplex, dim: usize) -> Result<IntegerMatrix, HomologyError> {
    let max = c.dim().map_or(0, |d| d + 1);
    if dim > max {
        return Err(HomologyError::DimOutOfRange { dim, max });
    }
    let rows = if dim == 0 { 0 } else { c.faces(dim - 1).len() };
    let columns = boundary_lines(c, dim)
        .into_iter()
        .map(|col| col.into_iter().map(|(r, v)| (r, BigInt::from(v))).collect())
        .collect();
    Ok(IntegerMatrix::from_columns(rows, columns))
}

/// The augmentation `ε : C_0 → ℤ`, a single row of ones.
pub fn augmentation_matrix(c: &SimplicialComplex) -> IntegerMatrix {
    let n = c.faces(0).len();
    IntegerMatrix::from_columns(1, (0..n).map(|_| vec![(0, BigInt::one())]).collect())
}

/// One homology group `ℤ^betti ⊕ ⨁ ℤ/t`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Invariant factors `≥ 2` in divisibility order.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.betti > 0 {
            parts.push(format!("Z^{}", self.betti));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Homology in dimensions `0..groups.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummary {
    pub reduced: bool,
    pub groups: Vec<HomologyGroup>,
}

impl HomologySummary {
    pub fn betti(&self, k: usize) -> usize {
        self.groups.get(k).map_or(0, |g| g.betti)
    }

    pub fn bettis(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    pub fn torsion(&self, k: usize) -> &[BigInt] {
        self.groups.get(k).map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// All groups vanish.
    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_trivial)
    }

    /// `Σ (−1)^k betti_k`; for reduced homology this is `χ − 1`.
    pub fn alternating_sum(&self) -> i64 {
        self.groups.iter().enumerate().map(|(k, g)| if k % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum()
    }

    /// Switches between reduced and unreduced form (only `H_0` changes).
    pub fn with_reduced(&self, reduced: bool) -> HomologySummary {
        let mut out = self.clone();
        if reduced != self.reduced {
            if let Some(h0) = out.groups.first_mut() {
                if reduced {
                    h0.betti -= 1;
                } else {
                    h0.betti += 1;
                }
            }
            out.reduced = reduced;
        }
        out
    }

    /// Pads with trivial groups up to dimension `dim`.
    pub fn padded(mut self, dim: usize) -> HomologySummary {
        if self.groups.len() < dim + 1 {
            self.groups.resize_with(dim + 1, HomologyGroup::default);
        }
        self
    }

    pub fn lines(&self) -> Vec<String> {
        let h = if self.reduced { "H~" } else { "H" };
        self.groups.iter().enumerate().map(|(k, g)| format!("{h}_{k} = {g}")).collect()
    }
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// How boundary maps are reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HomologyMethod {
    /// Sparse unit elimination, then dense Smith form of what is left.
    #[default]
    Integral,
    /// Dense Smith form of every boundary matrix; slow, used as a cross-check.
    Direct,
    /// Ranks over ℚ only; torsion is not reported.
    Rational,
}

/// Rank and non-unit invariant factors of one boundary map.
struct MapData {
    rank: usize,
    torsion: Vec<BigInt>,
}

fn map_data(c: &SimplicialComplex, dim: usize, method: HomologyMethod) -> MapData {
    let lines = boundary_lines(c, dim);
    let width = if dim == 0 { 0 } else { c.faces(dim - 1).len() };
    let factors = match method {
        HomologyMethod::Integral => factors_from_lines(lines, width).ok(),
        HomologyMethod::Direct => None,
        HomologyMethod::Rational => {
            let rank = match eliminate_units(lines, width) {
                Ok(red) => red.units + dense_rank(densify(&red.residual)),
                Err(_) => rational_rank(&boundary_matrix(c, dim).unwrap()),
            };
            return MapData { rank, torsion: Vec::new() };
        }
    };
    let factors = factors.unwrap_or_else(|| dense_invariant_factors(boundary_matrix(c, dim).unwrap().to_dense()));
    MapData { rank: factors.len(), torsion: factors.into_iter().filter(|f| !f.is_one()).collect() }
}

/// Integral homology of `c`; reduced homology augments by `ε : C_0 → ℤ`.
pub fn homology_groups(c: &SimplicialComplex, reduced: bool) -> HomologySummary {
    homology_with(c, reduced, HomologyMethod::Integral)
}

pub fn homology_with(c: &SimplicialComplex, reduced: bool, method: HomologyMethod) -> HomologySummary {
    let Some(top) = c.dim() else {
        return HomologySummary { reduced, groups: Vec::new() };
    };
    // maps[d] describes ∂_d for d in 1..=top
    let maps: Vec<MapData> = (0..=top)
        .into_par_iter()
        .map(|d| if d == 0 { MapData { rank: 0, torsion: Vec::new() } } else { map_data(c, d, method) })
        .collect();
    let groups = (0..=top)
        .map(|d| {
            let n = c.faces(d).len();
            let rank_in = if d == 0 { usize::from(reduced && n > 0) } else { maps[d].rank };
            let (rank_out, torsion) = match maps.get(d + 1) {
                Some(m) => (m.rank, m.torsion.clone()),
                None => (0, Vec::new()),
            };
            HomologyGroup { betti: n - rank_in - rank_out, torsion }
        })
        .collect();
    HomologySummary { reduced, groups }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{discrete_complex, join};

    fn cycle(n: usize) -> SimplicialComplex {
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        SimplicialComplex::from_simplices((0..n).map(|i| format!("v{i:02}")), edges).unwrap()
    }

    fn rp2() -> SimplicialComplex {
        let tris = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]];
        SimplicialComplex::from_simplices((0..6).map(|i| i.to_string()), tris).unwrap()
    }

    #[test]
    fn edge_boundary() {
        let edge = SimplicialComplex::from_simplices(["v0", "v1"], [[0, 1]]).unwrap();
        let d1 = boundary_matrix(&edge, 1).unwrap();
        assert_eq!(d1, IntegerMatrix::from_rows(1, &[vec![-1], vec![1]]));
        let d2 = boundary_matrix(&edge, 2).unwrap();
        assert_eq!((d2.rows(), d2.cols()), (1, 0));
        assert_eq!(boundary_matrix(&edge, 3), Err(HomologyError::DimOutOfRange { dim: 3, max: 2 }));
    }

    #[test]
    fn triangle_boundary_rank() {
        assert_eq!(rational_rank(&boundary_matrix(&cycle(3), 1).unwrap()), 2);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = rp2();
        for d in 1..=2 {
            let a = boundary_matrix(&c, d).unwrap();
            let b = boundary_matrix(&c, d + 1).unwrap();
            assert!(a.mul(&b).is_zero());
        }
    }

    #[test]
    fn cycle_and_octahedron() {
        let h = homology_groups(&cycle(8), false);
        assert_eq!(h.lines(), ["H_0 = Z^1", "H_1 = Z^1"]);
        let pts = |p: &str| discrete_complex([format!("{p}0"), format!("{p}1")]);
        let octa = join(&join(&pts("a"), &pts("b")), &pts("c"));
        let h = homology_groups(&octa, false);
        assert_eq!(h.bettis(), [1, 0, 1]);
        assert_eq!(homology_groups(&octa, true).bettis(), [0, 0, 1]);
    }

    #[test]
    fn projective_plane_torsion() {
        let h = homology_groups(&rp2(), false);
        assert_eq!(h.lines(), ["H_0 = Z^1", "H_1 = Z/2", "H_2 = 0"]);
        assert_eq!(homology_with(&rp2(), false, HomologyMethod::Direct), h);
        assert_eq!(homology_with(&rp2(), false, HomologyMethod::Rational).bettis(), [1, 0, 0]);
    }

    #[test]
    fn reduced_toggle() {
        let h = homology_groups(&cycle(5), false);
        assert_eq!(h.with_reduced(true), homology_groups(&cycle(5), true));
        assert_eq!(homology_groups(&cycle(5), true).with_reduced(false), h);
    }
}
