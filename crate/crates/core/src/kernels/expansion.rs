//! Expansions of `Δ(x)Δ(y)K_m(x, y)` in product bases, and `K_m` as a polynomial.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ortho::OrthoSystem;
use crate::poly::{
    partitions_in_box, poly_det, schur_polynomial_in, var_names, MultiPoly, Partition,
};
use crate::rational::{sign, Rational};
use crate::subset::{subsets, Subset};

use super::check_m;

/// Variables `x1..xm, y1..ym`.
pub fn kernel_vars(m: usize) -> Vec<alloc::string::String> {
    let mut vars = var_names("x", m);
    vars.extend(var_names("y", m));
    vars
}

/// `det_{i ≤ m, j ∈ S} e_j(v_i)` over the variables at `offset..offset+m`.
fn basis_det(
    vars: &[alloc::string::String],
    basis: &[Vec<Rational>],
    s: &Subset,
    offset: usize,
) -> MultiPoly {
    let m = s.len();
    let cols: Vec<usize> = s.indices().collect();
    let entries: Vec<Vec<MultiPoly>> = (0..m)
        .map(|i| {
            cols.iter()
                .map(|&j| MultiPoly::from_univariate(vars.to_vec(), offset + i, &basis[j]))
                .collect()
        })
        .collect();
    poly_det(vars, &entries)
}

fn univariate_coeffs(p: &MultiPoly) -> Vec<Rational> {
    let deg = p.degree_in(0) as usize;
    let mut out = alloc::vec![Rational::zero(); deg + 1];
    for (e, c) in p.terms() {
        out[e[0] as usize] = c.clone();
    }
    out
}

/// `K_m(x, y)` as a polynomial in `x1..xm, y1..ym`, from the orthogonal sum
/// and exact division by `Δ(x)` and `Δ(y)`.
pub fn kernel_poly(sys: &OrthoSystem, m: usize) -> Result<MultiPoly> {
    check_m(sys, m)?;
    let vars = kernel_vars(m);
    let basis: Vec<Vec<Rational>> = (0..sys.n()).map(|k| sys.coefficients(k).to_vec()).collect();
    let mut acc = MultiPoly::zero(vars.clone());
    for s in subsets(sys.n(), m) {
        let px = basis_det(&vars, &basis, &s, 0);
        let py = basis_det(&vars, &basis, &s, m);
        acc = acc + (&px * &py).scale(&sys.subset_norm(&s).recip());
    }
    let xs: Vec<usize> = (0..m).collect();
    let ys: Vec<usize> = (m..2 * m).collect();
    acc.divide_by_vandermonde_in(&xs)?
        .divide_by_vandermonde_in(&ys)
}

/// `S = {λ_k + m + 1 - k}`.
pub fn subset_of_partition(lambda: &Partition, m: usize) -> Subset {
    let parts = lambda.padded(m);
    let mut elems: Vec<usize> = (0..m).map(|k| parts[k] as usize + m - k).collect();
    elems.reverse();
    Subset::new(elems).expect("strictly increasing by construction")
}

/// Inverse of [`subset_of_partition`]: `λ_k = s_{m+1-k} - (m + 1 - k)`.
pub fn partition_of_subset(s: &Subset, m: usize) -> Partition {
    let e = s.elements();
    let parts = (1..=m).map(|k| (e[m - k] - (m + 1 - k)) as u32).collect();
    Partition::new(parts).expect("weakly decreasing by construction")
}

/// Coefficients of `K_m(x, y) = Σ_{λ,μ} coeff(λ, μ) s_λ(x) s_μ(y)`, with all
/// partitions in the `m × (n - m)` box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    pub n: usize,
    pub m: usize,
    pub coefficients: BTreeMap<(Partition, Partition), Rational>,
}

impl SchurExpansion {
    pub fn coefficient(&self, lambda: &Partition, mu: &Partition) -> Option<&Rational> {
        self.coefficients.get(&(lambda.clone(), mu.clone()))
    }

    /// `Σ coeff(λ, μ) s_λ(x) s_μ(y)` in `x1..xm, y1..ym`.
    pub fn to_poly(&self) -> MultiPoly {
        let m = self.m;
        let vars = kernel_vars(m);
        let xs: Vec<usize> = (0..m).collect();
        let ys: Vec<usize> = (m..2 * m).collect();
        let mut cache_x = BTreeMap::new();
        let mut cache_y = BTreeMap::new();
        let mut acc = MultiPoly::zero(vars.clone());
        for ((lambda, mu), c) in &self.coefficients {
            if c.is_zero() {
                continue;
            }
            let sx = cache_x
                .entry(lambda.clone())
                .or_insert_with(|| schur_polynomial_in(lambda, &vars, &xs).expect("fits the box"))
                .clone();
            let sy = cache_y
                .entry(mu.clone())
                .or_insert_with(|| schur_polynomial_in(mu, &vars, &ys).expect("fits the box"));
            acc = acc + (&sx * &*sy).scale(c);
        }
        acc
    }
}

/// Schur coefficients from Hankel minors of the moments:
/// `(-1)^{|λ|+|μ|} det_{i∈[n]∖S, j∈[n]∖T}(c_{i+j-2}) / Π⟨p_{i-1},p_{i-1}⟩`.
pub fn schur_expansion(sys: &OrthoSystem, m: usize) -> Result<SchurExpansion> {
    check_m(sys, m)?;
    let n = sys.n();
    let moments: Vec<Rational> = (0..2 * n - 1)
        .map(|k| sys.measure().moment(k as u32))
        .collect();
    let hankel = Matrix::from_fn(n, n, |i, j| moments[i + j].clone());
    let norm = sys.norm_product();
    let box_parts = partitions_in_box(m, (n - m) as u32);
    let mut coefficients = BTreeMap::new();
    for lambda in &box_parts {
        let rows: Vec<usize> = subset_of_partition(lambda, m)
            .complement(n)
            .indices()
            .collect();
        for mu in &box_parts {
            let cols: Vec<usize> = subset_of_partition(mu, m).complement(n).indices().collect();
            let minor = hankel.submatrix(&rows, &cols).determinant()?;
            let s = sign((lambda.weight() + mu.weight()) as usize);
            coefficients.insert((lambda.clone(), mu.clone()), s * minor / &norm);
        }
    }
    Ok(SchurExpansion { n, m, coefficients })
}

/// Coefficients of `Δ(x)Δ(y)K_m(x, y) = Σ_{S,T} coeff(S, T) e_S(x) f_T(y)` for
/// two bases `e`, `f` of the polynomials of degree `< n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralExpansion {
    pub n: usize,
    pub m: usize,
    pub coefficients: BTreeMap<(Subset, Subset), Rational>,
    basis_e: Vec<Vec<Rational>>,
    basis_f: Vec<Vec<Rational>>,
}

impl GeneralExpansion {
    pub fn coefficient(&self, s: &Subset, t: &Subset) -> Option<&Rational> {
        self.coefficients.get(&(s.clone(), t.clone()))
    }

    /// `Σ coeff(S, T) e_S(x) f_T(y)` in `x1..xm, y1..ym`.
    pub fn to_poly(&self) -> MultiPoly {
        let m = self.m;
        let vars = kernel_vars(m);
        let all = subsets(self.n, m);
        let es: BTreeMap<Subset, MultiPoly> = all
            .iter()
            .map(|s| (s.clone(), basis_det(&vars, &self.basis_e, s, 0)))
            .collect();
        let fs: BTreeMap<Subset, MultiPoly> = all
            .iter()
            .map(|t| (t.clone(), basis_det(&vars, &self.basis_f, t, m)))
            .collect();
        let mut acc = MultiPoly::zero(vars);
        for ((s, t), c) in &self.coefficients {
            if c.is_zero() {
                continue;
            }
            acc = acc + (&es[s] * &fs[t]).scale(c);
        }
        acc
    }
}

/// Expansion coefficients `(-1)^{Σs+Σt} det_{S^c×T^c}⟨e_i,f_j⟩ / det⟨e_i,f_j⟩`.
pub fn general_expansion(
    sys: &OrthoSystem,
    m: usize,
    basis_e: &[MultiPoly],
    basis_f: &[MultiPoly],
) -> Result<GeneralExpansion> {
    check_m(sys, m)?;
    let n = sys.n();
    if basis_e.len() != n || basis_f.len() != n {
        return Err(Error::InvalidArity("each basis must have n elements"));
    }
    for p in basis_e.iter().chain(basis_f) {
        if p.nvars() != 1 {
            return Err(Error::InvalidArity("basis elements must be univariate"));
        }
        if !p.is_zero() && p.total_degree() as usize >= n {
            return Err(Error::InvalidArgument(
                "basis elements must have degree < n",
            ));
        }
    }
    let mu = sys.measure();
    let mut gram = Vec::with_capacity(n * n);
    for e in basis_e {
        for f in basis_f {
            gram.push(mu.pair(e, f)?);
        }
    }
    let gram = Matrix::new(n, n, gram)?;
    let full = gram.determinant()?;
    if full.is_zero() {
        return Err(Error::DegenerateBasis);
    }
    let all = subsets(n, m);
    let mut coefficients = BTreeMap::new();
    for s in &all {
        let rows: Vec<usize> = s.complement(n).indices().collect();
        for t in &all {
            let cols: Vec<usize> = t.complement(n).indices().collect();
            let minor = gram.submatrix(&rows, &cols).determinant()?;
            coefficients.insert(
                (s.clone(), t.clone()),
                sign(s.sum() + t.sum()) * minor / &full,
            );
        }
    }
    Ok(GeneralExpansion {
        n,
        m,
        coefficients,
        basis_e: basis_e.iter().map(univariate_coeffs).collect(),
        basis_f: basis_f.iter().map(univariate_coeffs).collect(),
    })
}
