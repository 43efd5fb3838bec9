//! Exact determinants and Pfaffians.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArity("entry count must equal rows * cols"));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArity("ragged rows"));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// The submatrix on the given 0-based rows and columns, in the order listed.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact determinant.
    ///
    /// Each row is scaled to integers by the lcm of its denominators and the
    /// resulting integer matrix is reduced by Bareiss elimination, where every
    /// intermediate division is exact.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::InvalidArity("determinant of a non-square matrix"));
        }
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            work.push(row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect());
            scale *= lcm;
        }
        let det = bareiss(&mut work);
        Ok(Rational::new(det, scale))
    }
}

fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Even-dimensional skew-symmetric rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    inner: Matrix,
}

impl SkewMatrix {
    /// Builds from the strict upper triangle; `upper(i, j)` is queried for `i < j`.
    pub fn from_upper(dim: usize, mut upper: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        if !dim.is_multiple_of(2) {
            return Err(Error::InvalidArity("skew matrix dimension must be even"));
        }
        let mut entries = alloc::vec![Rational::zero(); dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let v = upper(i, j);
                entries[j * dim + i] = -&v;
                entries[i * dim + j] = v;
            }
        }
        Ok(SkewMatrix {
            inner: Matrix {
                rows: dim,
                cols: dim,
                entries,
            },
        })
    }

    pub fn from_matrix(m: Matrix) -> Result<Self> {
        if !m.is_square() || !m.rows.is_multiple_of(2) {
            return Err(Error::InvalidArity(
                "skew matrix must be square of even dimension",
            ));
        }
        let n = m.rows;
        for i in 0..n {
            for j in i..n {
                if *m.get(i, j) != -m.get(j, i) {
                    return Err(Error::InvalidArgument("matrix is not skew-symmetric"));
                }
            }
        }
        Ok(SkewMatrix { inner: m })
    }

    pub fn dim(&self) -> usize {
        self.inner.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.inner.get(i, j)
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.inner
    }

    /// Exact Pfaffian by expansion along the lowest remaining index, memoized
    /// on the set of remaining indices.
    pub fn pfaffian(&self) -> Rational {
        let dim = self.dim();
        assert!(dim <= 64, "pfaffian expansion supports at most 64 rows");
        let full: u64 = if dim == 64 {
            u64::MAX
        } else {
            (1u64 << dim) - 1
        };
        let mut memo = BTreeMap::new();
        self.pf_rec(full, &mut memo)
    }

    fn pf_rec(&self, set: u64, memo: &mut BTreeMap<u64, Rational>) -> Rational {
        if set == 0 {
            return Rational::one();
        }
        if let Some(v) = memo.get(&set) {
            return v.clone();
        }
        let first = set.trailing_zeros() as usize;
        let rest = set & !(1u64 << first);
        let mut acc = Rational::zero();
        let mut position = 0usize;
        let mut scan = rest;
        while scan != 0 {
            let j = scan.trailing_zeros() as usize;
            scan &= !(1u64 << j);
            let a = self.get(first, j);
            if !a.is_zero() {
                let minor = self.pf_rec(rest & !(1u64 << j), memo);
                if position.is_multiple_of(2) {
                    acc += a * minor;
                } else {
                    acc -= a * minor;
                }
            }
            position += 1;
        }
        memo.insert(set, acc.clone());
        acc
    }
}
