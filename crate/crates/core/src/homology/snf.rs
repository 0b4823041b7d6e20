//! Smith normal form over the integers.
//!
//! Large sparse matrices are first shrunk by eliminating unit pivots, which is
//! a unimodular change of basis and contributes a `1` per pivot. What is left
//! goes through a dense exact elimination with minimal-absolute-value
//! pivoting, followed by a gcd/lcm pass that restores divisibility.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

/// A sparse vector: sorted `(index, value)` pairs without zeros.
pub(crate) type SparseLine = Vec<(u32, i64)>;

#[derive(Debug)]
pub(crate) struct Overflow;

/// Outcome of unit-pivot elimination.
pub(crate) struct UnitReduction {
    pub units: usize,
    pub residual: Vec<SparseLine>,
}

/// Eliminates unit pivots from a family of sparse lines (rows or columns; the
/// result is transpose-invariant). Shortest lines are pivoted first, and
/// within a line the unit whose index occurs in the fewest other lines.
pub(crate) fn eliminate_units(mut lines: Vec<SparseLine>, width: usize) -> Result<UnitReduction, Overflow> {
    let mut occurs: Vec<Vec<u32>> = vec![Vec::new(); width];
    for (r, line) in lines.iter().enumerate() {
        for &(c, _) in line {
            occurs[c as usize].push(r as u32);
        }
    }
    let mut alive = vec![true; lines.len()];
    let mut version = vec![0u32; lines.len()];
    let mut heap: BinaryHeap<Reverse<(usize, u32, u32)>> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(r, l)| Reverse((l.len(), r as u32, 0)))
        .collect();
    let mut units = 0;
    let mut scratch: SparseLine = Vec::new();
    while let Some(Reverse((_, r, ver))) = heap.pop() {
        let r = r as usize;
        if !alive[r] || version[r] != ver || lines[r].is_empty() {
            continue;
        }
        let Some(&(c, a)) = lines[r]
            .iter()
            .filter(|(_, v)| v.abs() == 1)
            .min_by_key(|(c, _)| occurs[*c as usize].len())
        else {
            continue;
        };
        alive[r] = false;
        units += 1;
        let pivot = std::mem::take(&mut lines[r]);
        let users = std::mem::take(&mut occurs[c as usize]);
        for &i in &users {
            let i = i as usize;
            if !alive[i] {
                continue;
            }
            let Ok(pos) = lines[i].binary_search_by_key(&c, |&(k, _)| k) else {
                continue;
            };
            // a⁻¹ = a for a unit
            let f = lines[i][pos].1.checked_mul(a).ok_or(Overflow)?;
            subtract_multiple(&lines[i], &pivot, f, &mut scratch, |k| occurs[k as usize].push(i as u32))?;
            std::mem::swap(&mut lines[i], &mut scratch);
            version[i] += 1;
            if !lines[i].is_empty() {
                heap.push(Reverse((lines[i].len(), i as u32, version[i])));
            }
        }
    }
    let residual = lines.into_iter().zip(alive).filter(|(l, a)| *a && !l.is_empty()).map(|(l, _)| l).collect();
    Ok(UnitReduction { units, residual })
}

/// `out = x − f·p`, calling `fresh` for indices present in `p` but not in `x`.
fn subtract_multiple(
    x: &[(u32, i64)],
    p: &[(u32, i64)],
    f: i64,
    out: &mut SparseLine,
    mut fresh: impl FnMut(u32),
) -> Result<(), Overflow> {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < p.len() {
        let take_x = j == p.len() || (i < x.len() && x[i].0 < p[j].0);
        let take_p = i == x.len() || (j < p.len() && p[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_p {
            let v = p[j].1.checked_mul(f).and_then(i64::checked_neg).ok_or(Overflow)?;
            out.push((p[j].0, v));
            fresh(p[j].0);
            j += 1;
        } else {
            let v = p[j].1.checked_mul(f).and_then(|m| x[i].1.checked_sub(m)).ok_or(Overflow)?;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(())
}

/// Densifies sparse lines over the indices that actually occur.
pub(crate) fn densify(lines: &[SparseLine]) -> Vec<Vec<BigInt>> {
    let mut used: Vec<u32> = lines.iter().flatten().map(|&(c, _)| c).collect();
    used.sort_unstable();
    used.dedup();
    lines
        .iter()
        .map(|l| {
            let mut row = vec![BigInt::zero(); used.len()];
            for &(c, v) in l {
                row[used.binary_search(&c).unwrap()] = BigInt::from(v);
            }
            row
        })
        .collect()
}

/// Nonzero diagonal of a diagonalization of a dense matrix, not yet in
/// divisibility order.
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&a, t..m, t..n) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                    *x -= &q * y;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a[t..].iter_mut() {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            // a remainder is smaller than the pivot: promote the smallest
            let in_col = min_abs_entry(&a, t..m, t..t + 1);
            let in_row = min_abs_entry(&a, t..t + 1, t..n);
            let (pi, pj) = match (in_col, in_row) {
                (Some(c), Some(r)) if a[r.0][r.1].abs() < a[c.0][c.1].abs() => r,
                (Some(c), _) => c,
                (None, Some(r)) => r,
                (None, None) => unreachable!("pivot is nonzero"),
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn min_abs_entry(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = &a[i][j];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                if v.is_one() || (-v).is_one() {
                    return Some((i, j));
                }
                best = Some((i, j));
            }
        }
    }
    best
}

/// Rewrites nonzero diagonal entries into invariant factors `d₁ | d₂ | …`.
fn divisibility_order(mut d: Vec<BigInt>) -> Vec<BigInt> {
    d.sort();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if d[j].is_multiple_of(&d[i]) {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Invariant factors of a dense matrix, by exact elimination only.
pub fn dense_invariant_factors(a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    divisibility_order(dense_diagonal(a))
}

/// Nonzero invariant factors from the residual after unit elimination, with
/// the eliminated units prepended.
pub(crate) fn factors_from_lines(lines: Vec<SparseLine>, width: usize) -> Result<Vec<BigInt>, Overflow> {
    let red = eliminate_units(lines, width)?;
    let mut out = vec![BigInt::one(); red.units];
    out.extend(dense_invariant_factors(densify(&red.residual)));
    Ok(out)
}

/// The nonzero invariant factors `d₁ | d₂ | … | d_rank` of `m`.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    if let Some(cols) = m.to_small_columns() {
        if let Ok(f) = factors_from_lines(cols, m.rows()) {
            return f;
        }
    }
    dense_invariant_factors(m.to_dense())
}

/// Rank of a dense matrix over ℚ by fraction-free elimination.
pub fn dense_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n {
        let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..m {
            for j in col + 1..n {
                let v = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == m {
            break;
        }
    }
    rank
}

/// Rank over ℚ.
pub fn rational_rank(m: &IntegerMatrix) -> usize {
    if let Some(cols) = m.to_small_columns() {
        if let Ok(red) = eliminate_units(cols, m.rows()) {
            return red.units + dense_rank(densify(&red.residual));
        }
    }
    dense_rank(m.to_dense())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(cols: usize, rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntegerMatrix::from_rows(cols, rows)).iter().map(|v| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(snf(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(snf(2, &[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(snf(3, &[vec![0, 0, 0], vec![0, 0, 0]]), Vec::<i64>::new());
        assert_eq!(snf(2, &[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(snf(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
    }

    #[test]
    fn dense_route_agrees() {
        let rows = vec![vec![4, 6, 0], vec![6, 9, 3], vec![0, 3, 5]];
        let m = IntegerMatrix::from_rows(3, &rows);
        assert_eq!(smith_normal_form(&m), dense_invariant_factors(m.to_dense()));
    }

    #[test]
    fn rational_rank_examples() {
        let m = IntegerMatrix::from_rows(3, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rational_rank(&m), 2);
        assert_eq!(dense_rank(m.to_dense()), 2);
        assert_eq!(rational_rank(&IntegerMatrix::zeros(2, 2)), 0);
    }

    #[test]
    fn unit_elimination_counts_units() {
        // path graph incidence: rank 2, all units
        let lines = vec![vec![(0, -1), (1, 1)], vec![(1, -1), (2, 1)]];
        let red = eliminate_units(lines, 3).unwrap();
        assert_eq!(red.units, 2);
        assert!(red.residual.is_empty());
    }
}
