//! Monic orthogonal polynomials of a discrete measure and the one-variable
//! Christoffel–Darboux kernel.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::measure::Measure;
use crate::poly::{var_names, MultiPoly};
use crate::rational::{int, Rational};
use crate::subset::Subset;

/// `p_0, ..., p_n` monic and orthogonal for `μ`, with the norms `⟨p_k, p_k⟩`
/// for `k < n`. `⟨p_n, p_n⟩` may vanish.
#[derive(Debug, Clone)]
pub struct OrthoSystem {
    measure: Measure,
    n: usize,
    // ascending coefficients of p_0..p_n
    coeffs: Vec<Vec<Rational>>,
    polys: Vec<MultiPoly>,
    norms: Vec<Rational>,
}

/// How [`OrthoSystem::cd_kernel`] evaluates `K(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CdMode {
    /// `Σ_{k<n} p_k(x) p_k(y) / ⟨p_k, p_k⟩`.
    Sum,
    /// `(p_n(x) p_{n-1}(y) - p_{n-1}(x) p_n(y)) / (⟨p_{n-1}, p_{n-1}⟩ (x - y))`.
    Quotient,
}

fn horner(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Gram–Schmidt on `1, x, ..., x^n` against the pairing of `mu`.
pub fn build_system(mu: &Measure, n: usize) -> Result<OrthoSystem> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree bound n must be at least 1"));
    }
    if n > mu.support_size() {
        return Err(Error::DegenerateMeasure);
    }
    let pts = mu.points();
    let wts = mu.weights();
    let inner = |a: &[Rational], b: &[Rational]| -> Rational {
        a.iter().zip(b).zip(wts).map(|((u, v), w)| u * v * w).sum()
    };

    let mut coeffs: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
    // values of p_j on the support
    let mut values: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
    let mut norms: Vec<Rational> = Vec::with_capacity(n);
    for k in 0..=n {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        let monomial: Vec<Rational> = pts
            .iter()
            .map(|x| crate::rational::pow(x, k as u32))
            .collect();
        for j in 0..k {
            let proj = inner(&monomial, &values[j]) / &norms[j];
            for (ci, cj) in c.iter_mut().zip(&coeffs[j]) {
                *ci -= &proj * cj;
            }
        }
        let vals: Vec<Rational> = pts.iter().map(|x| horner(&c, x)).collect();
        if k < n {
            let h = inner(&vals, &vals);
            if h.is_zero() {
                return Err(Error::DegenerateMeasure);
            }
            norms.push(h);
        }
        coeffs.push(c);
        values.push(vals);
    }
    let vars = var_names("x", 1);
    let polys = coeffs
        .iter()
        .map(|c| MultiPoly::from_univariate(vars.clone(), 0, c))
        .collect();
    Ok(OrthoSystem {
        measure: mu.clone(),
        n,
        coeffs,
        polys,
        norms,
    })
}

impl OrthoSystem {
    pub fn measure(&self) -> &Measure {
        &self.measure
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `p_0, ..., p_n` as polynomials in `x1`.
    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    /// Ascending coefficients of `p_k`, `k ≤ n`.
    pub fn coefficients(&self, k: usize) -> &[Rational] {
        &self.coeffs[k]
    }

    /// `⟨p_0,p_0⟩, ..., ⟨p_{n-1},p_{n-1}⟩`.
    pub fn norms(&self) -> &[Rational] {
        &self.norms
    }

    pub fn norm(&self, k: usize) -> &Rational {
        &self.norms[k]
    }

    /// `Π_{i=1}^{n} ⟨p_{i-1}, p_{i-1}⟩`.
    pub fn norm_product(&self) -> Rational {
        self.norms.iter().product()
    }

    /// `p_k(x)`. Beyond `n` this continues the basis as `x^{k-n} p_n(x)`, which
    /// is monic of degree `k` and orthogonal to every `p_j` with `j < 2n - k`.
    pub fn eval(&self, k: usize, x: &Rational) -> Rational {
        if k <= self.n {
            horner(&self.coeffs[k], x)
        } else {
            crate::rational::pow(x, (k - self.n) as u32) * horner(&self.coeffs[self.n], x)
        }
    }

    /// `p_k'(x)`, with the same continuation past `n` as [`OrthoSystem::eval`].
    pub fn eval_derivative(&self, k: usize, x: &Rational) -> Rational {
        let deriv = |c: &[Rational]| -> Vec<Rational> {
            c.iter()
                .enumerate()
                .skip(1)
                .map(|(i, v)| v * int(i as i64))
                .collect()
        };
        if k <= self.n {
            horner(&deriv(&self.coeffs[k]), x)
        } else {
            let r = (k - self.n) as u32;
            let pn = &self.coeffs[self.n];
            let lead = int(r as i64) * crate::rational::pow(x, r - 1) * horner(pn, x);
            lead + crate::rational::pow(x, r) * horner(&deriv(pn), x)
        }
    }

    /// The one-variable Christoffel–Darboux kernel `K(x, y)`.
    pub fn cd_kernel(&self, x: &Rational, y: &Rational, mode: CdMode) -> Result<Rational> {
        match mode {
            CdMode::Sum => Ok((0..self.n)
                .map(|k| self.eval(k, x) * self.eval(k, y) / &self.norms[k])
                .sum()),
            CdMode::Quotient => {
                if x == y {
                    return Err(Error::CoincidentPoints);
                }
                let n = self.n;
                let num =
                    self.eval(n, x) * self.eval(n - 1, y) - self.eval(n - 1, x) * self.eval(n, y);
                Ok(num / (&self.norms[n - 1] * (x - y)))
            }
        }
    }

    /// `K(x, y)` by the sum form.
    pub fn kernel(&self, x: &Rational, y: &Rational) -> Rational {
        self.cd_kernel(x, y, CdMode::Sum)
            .expect("sum form is always defined")
    }

    /// `p_S(x) = det_{i ≤ m, j ∈ S} p_{j-1}(x_i)`.
    pub fn basis_minor(&self, s: &Subset, x: &[Rational]) -> Result<Rational> {
        if s.len() != x.len() {
            return Err(Error::InvalidArity("|S| must equal the number of points"));
        }
        if s.max() > self.n {
            return Err(Error::InvalidArity("S must lie in [n]"));
        }
        let cols: Vec<usize> = s.indices().collect();
        Matrix::from_fn(x.len(), cols.len(), |i, j| self.eval(cols[j], &x[i])).determinant()
    }

    /// `Π_{i ∈ S} ⟨p_{i-1}, p_{i-1}⟩ = ⟨p_S, p_S⟩`.
    pub fn subset_norm(&self, s: &Subset) -> Rational {
        s.indices().map(|i| &self.norms[i]).product()
    }
}
