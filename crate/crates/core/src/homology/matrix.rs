use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

/// A sparse integer matrix with exact entries. Stored by column; each
/// column is sorted by row index and holds no explicit zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(u32, BigInt)>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntegerMatrix {
        IntegerMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m.columns[i].push((i as u32, BigInt::from(1)));
        }
        m
    }

    /// From row-major dense data; all rows must have `cols` entries.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, data: &[Vec<T>]) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(data.len(), cols);
        for (i, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, v) in row.iter().enumerate() {
                let v: BigInt = v.clone().into();
                if !v.is_zero() {
                    m.columns[j].push((i as u32, v));
                }
            }
        }
        m
    }

    /// From sparse columns; entries are sorted and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, BigInt)>>) -> IntegerMatrix {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.retain(|(_, v)| !v.is_zero());
                c.sort_by_key(|&(r, _)| r);
                assert!(c.iter().all(|&(r, _)| (r as usize) < rows), "row index out of range");
                c
            })
            .collect();
        IntegerMatrix { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(u32, BigInt)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        match self.columns[j].binary_search_by_key(&(i as u32), |&(r, _)| r) {
            Ok(p) => self.columns[j][p].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                out[*i as usize][j] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                columns[*i as usize].push((j as u32, v.clone()));
            }
        }
        IntegerMatrix { rows: self.cols, cols: self.rows, columns }
    }

    /// `self · other`.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut columns = Vec::with_capacity(other.cols);
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); self.rows];
        let mut touched: Vec<u32> = Vec::new();
        for col in &other.columns {
            for (k, b) in col {
                for (i, a) in &self.columns[*k as usize] {
                    if acc[*i as usize].is_zero() {
                        touched.push(*i);
                    }
                    acc[*i as usize] += a * b;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out = Vec::new();
            for &i in &touched {
                let v = std::mem::take(&mut acc[i as usize]);
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
            touched.clear();
            columns.push(out);
        }
        IntegerMatrix { rows: self.rows, cols: other.cols, columns }
    }

    /// Small-integer rows (the transpose of the column store), or `None` if
    /// some entry does not fit in an `i64`.
    pub(crate) fn to_small_columns(&self) -> Option<Vec<Vec<(u32, i64)>>> {
        self.columns
            .iter()
            .map(|c| c.iter().map(|(r, v)| i64::try_from(v).ok().map(|v| (*r, v))).collect())
            .collect()
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(f, "  [{}]", cells.join(" "))?;
            }
        }
        Ok(())
    }
}
