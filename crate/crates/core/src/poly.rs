//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`MultiPoly`] carries its own ordered variable list; arithmetic is only
//! defined between polynomials over the same list. Terms live in a map from
//! exponent vectors to nonzero coefficients, so structural equality is
//! mathematical equality.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, pow, Rational};

type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

/// `prefix1, ..., prefixN`.
pub fn var_names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        let n = p.vars.len();
        p.insert(vec![0; n], c);
        p
    }

    pub fn one(vars: Vec<String>) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The variable at position `idx`.
    pub fn var(vars: Vec<String>, idx: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Self::monomial(vars, exps, Rational::one())
    }

    pub fn monomial(vars: Vec<String>, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.insert(exps, c);
        p
    }

    /// Embeds `Σ coeffs[k] t^k` into the variable at `idx`.
    pub fn from_univariate(vars: Vec<String>, idx: usize, coeffs: &[Rational]) -> Self {
        let n = vars.len();
        let mut p = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            let mut exps = vec![0; n];
            exps[idx] = k as u32;
            p.insert(exps, c.clone());
        }
        p
    }

    /// Builds from raw `(exponents, coefficient)` pairs; zero coefficients are dropped
    /// and repeated exponents are summed.
    pub fn from_terms(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.insert(e, c);
        }
        p
    }

    fn insert(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|e| e[idx]).max().unwrap_or(0)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Exact value at `point`.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::InvalidArity("evaluation point length"));
        }
        let mut acc = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term *= pow(x, e);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the variable at `idx`.
    pub fn mul_var(&self, idx: usize) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[idx] += 1;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative in the named variable.
    pub fn derivative(&self, var: &str) -> Result<Self> {
        let idx = self
            .var_index(var)
            .ok_or(Error::InvalidArity("unknown variable"))?;
        Ok(self.derivative_at(idx))
    }

    pub fn derivative_at(&self, idx: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (exps, c) in &self.terms {
            if exps[idx] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[idx] -= 1;
            out.insert(e, c * int(exps[idx] as i64));
        }
        out
    }

    /// `q(x) = p(x_{perm[0]}, x_{perm[1]}, ...)`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vars.len(), "permutation length");
        let mut out = Self::zero(self.vars.clone());
        for (exps, c) in &self.terms {
            let mut e = vec![0; exps.len()];
            for (slot, &target) in perm.iter().enumerate() {
                e[target] += exps[slot];
            }
            out.insert(e, c.clone());
        }
        out
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.vars.len()).collect();
        perm.swap(i, j);
        self.permute_vars(&perm)
    }

    /// Invariant under every transposition of the listed variables.
    pub fn is_symmetric_in(&self, idx: &[usize]) -> bool {
        idx.windows(2).all(|w| self.swap_vars(w[0], w[1]) == *self)
    }

    /// Negated by every transposition of the listed variables.
    pub fn is_antisymmetric_in(&self, idx: &[usize]) -> bool {
        idx.windows(2).all(|w| self.swap_vars(w[0], w[1]) == -self)
    }

    /// Divides by `x_hi - x_lo`, returning `None` when the division leaves a remainder.
    pub fn div_linear(&self, hi: usize, lo: usize) -> Option<Self> {
        let top = self.degree_in(hi);
        // coefficients of powers of x_hi
        let mut slices: Vec<MultiPoly> = (0..=top).map(|_| Self::zero(self.vars.clone())).collect();
        for (exps, c) in &self.terms {
            let mut e = exps.clone();
            let d = e[hi] as usize;
            e[hi] = 0;
            slices[d].insert(e, c.clone());
        }
        if top == 0 {
            return if self.is_zero() {
                Some(self.clone())
            } else {
                None
            };
        }
        let mut quotient = vec![Self::zero(self.vars.clone()); top as usize];
        quotient[top as usize - 1] = slices[top as usize].clone();
        for d in (1..top as usize).rev() {
            quotient[d - 1] = &slices[d] + &quotient[d].mul_var(lo);
        }
        let remainder = &slices[0] + &quotient[0].mul_var(lo);
        if !remainder.is_zero() {
            return None;
        }
        let mut out = Self::zero(self.vars.clone());
        for (d, q) in quotient.into_iter().enumerate() {
            for (exps, c) in q.terms {
                let mut e = exps;
                e[hi] = d as u32;
                out.insert(e, c);
            }
        }
        Some(out)
    }

    /// Divides by the Vandermonde product in the listed variables (in that order).
    pub fn divide_by_vandermonde_in(&self, idx: &[usize]) -> Result<Self> {
        if !self.is_antisymmetric_in(idx) {
            return Err(Error::NotAntisymmetric);
        }
        let mut q = self.clone();
        for j in 0..idx.len() {
            for i in 0..j {
                q = q
                    .div_linear(idx[j], idx[i])
                    .expect("antisymmetric polynomial is divisible by every Vandermonde factor");
            }
        }
        Ok(q)
    }

    fn graded_lex_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| graded_lex_desc(a, b));
        terms
    }
}

fn graded_lex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

fn assert_same_vars(a: &MultiPoly, b: &MultiPoly) {
    assert_eq!(a.vars, b.vars, "polynomials over different variable lists");
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_same_vars(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_same_vars(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), -c);
        }
        out
    }
}

fn monomial_product(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_same_vars(self, rhs);
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert(monomial_product(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.graded_lex_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (exps, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = exps
                .iter()
                .zip(&self.vars)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| {
                    if e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `Π_{i<j} (x_j - x_i)` over the listed variables of the ring `vars`.
pub fn vandermonde_in(vars: &[String], idx: &[usize]) -> MultiPoly {
    let mut acc = MultiPoly::one(vars.to_vec());
    for j in 0..idx.len() {
        for i in 0..j {
            let factor =
                MultiPoly::var(vars.to_vec(), idx[j]) - MultiPoly::var(vars.to_vec(), idx[i]);
            acc = &acc * &factor;
        }
    }
    acc
}

/// `Δ(x_1, ..., x_m)` over variables `x1..xm`.
pub fn vandermonde_poly(m: usize) -> MultiPoly {
    let vars = var_names("x", m);
    let idx: Vec<usize> = (0..m).collect();
    vandermonde_in(&vars, &idx)
}

/// `p / Δ(x_1, ..., x_m)` for a polynomial antisymmetric in its `m` variables.
pub fn divide_by_vandermonde(p: &MultiPoly, m: usize) -> Result<MultiPoly> {
    if p.nvars() != m {
        return Err(Error::InvalidArity(
            "polynomial must have exactly m variables",
        ));
    }
    let idx: Vec<usize> = (0..m).collect();
    p.divide_by_vandermonde_in(&idx)
}

/// Determinant of a square matrix of polynomials by first-row Laplace expansion.
/// Meant for the small sizes used here.
pub fn poly_det(vars: &[String], entries: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = entries.len();
    let cols: Vec<usize> = (0..n).collect();
    det_rec(vars, entries, 0, &cols)
}

fn det_rec(vars: &[String], entries: &[Vec<MultiPoly>], row: usize, cols: &[usize]) -> MultiPoly {
    if cols.is_empty() {
        return MultiPoly::one(vars.to_vec());
    }
    let mut acc = MultiPoly::zero(vars.to_vec());
    for (k, &c) in cols.iter().enumerate() {
        let entry = &entries[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(vars, entries, row + 1, &rest);
        let term = entry * &minor;
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// A weakly decreasing list of nonnegative parts, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "partition parts must be weakly decreasing",
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `m`.
    pub fn padded(&self, m: usize) -> Vec<u32> {
        let mut parts = self.0.clone();
        parts.resize(m.max(parts.len()), 0);
        parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions with at most `rows` parts, each at most `cols`, in
/// lexicographic order of their padded part lists.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn rec(rows: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if prefix.len() == rows {
            out.push(Partition::new(prefix.clone()).expect("generated weakly decreasing"));
            return;
        }
        for p in 0..=cap {
            prefix.push(p);
            rec(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// The bialternant `s_λ` in the listed variables of `vars`.
///
/// The alternant columns are taken in increasing exponent order,
/// `det(x_i^{λ_{m+1-j} + j - 1})`, matching `Δ(x) = det(x_i^{j-1})`.
pub fn schur_polynomial_in(
    lambda: &Partition,
    vars: &[String],
    idx: &[usize],
) -> Result<MultiPoly> {
    let m = idx.len();
    if lambda.len() > m {
        return Err(Error::InvalidPartition);
    }
    let parts = lambda.padded(m);
    let entries: Vec<Vec<MultiPoly>> = idx
        .iter()
        .map(|&v| {
            (0..m)
                .map(|j| {
                    let mut e = vec![0; vars.len()];
                    e[v] = parts[m - 1 - j] + j as u32;
                    MultiPoly::monomial(vars.to_vec(), e, Rational::one())
                })
                .collect()
        })
        .collect();
    poly_det(vars, &entries).divide_by_vandermonde_in(idx)
}

/// `s_λ(x_1, ..., x_m)`.
pub fn schur_polynomial(lambda: &Partition, m: usize) -> Result<MultiPoly> {
    let vars = var_names("x", m);
    let idx: Vec<usize> = (0..m).collect();
    schur_polynomial_in(lambda, &vars, &idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use alloc::string::ToString;

    fn x(m: usize, i: usize) -> MultiPoly {
        MultiPoly::var(var_names("x", m), i)
    }

    fn c(m: usize, v: Rational) -> MultiPoly {
        MultiPoly::constant(var_names("x", m), v)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(c(1, int(1)).eval(&[int(7)]).unwrap(), int(1));
        let p = x(1, 0).pow(2) - c(1, frac(2, 3));
        assert_eq!(p.eval(&[int(1)]).unwrap(), frac(1, 3));
        assert_eq!(vandermonde_poly(2).eval(&[int(0), int(1)]).unwrap(), int(1));
        assert_eq!(
            p.eval(&[int(1), int(2)]),
            Err(Error::InvalidArity("evaluation point length"))
        );
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde_poly(1), c(1, int(1)));
        assert_eq!(vandermonde_poly(0), MultiPoly::one(Vec::new()));
        assert_eq!(vandermonde_poly(2), x(2, 1) - x(2, 0));
        let d3 = vandermonde_poly(3);
        assert_eq!(d3.len(), 6);
        let by_hand = (x(3, 1) - x(3, 0)) * (x(3, 2) - x(3, 0)) * (x(3, 2) - x(3, 1));
        assert_eq!(d3, by_hand);
    }

    #[test]
    fn divide_examples() {
        assert_eq!(
            divide_by_vandermonde(&vandermonde_poly(2), 2).unwrap(),
            c(2, int(1))
        );
        let diff_sq = x(2, 1).pow(2) - x(2, 0).pow(2);
        assert_eq!(
            divide_by_vandermonde(&diff_sq, 2).unwrap(),
            x(2, 0) + x(2, 1)
        );
        // alternant for λ = (2,1) with columns in increasing exponent order:
        // det [[x1, x1^3], [x2, x2^3]] = x1 x2^3 - x1^3 x2
        let alt = x(2, 0) * x(2, 1).pow(3) - x(2, 0).pow(3) * x(2, 1);
        let q = divide_by_vandermonde(&alt, 2).unwrap();
        assert_eq!(q, x(2, 0) * x(2, 1) * (x(2, 0) + x(2, 1)));
        // decreasing column order flips the sign for m = 2
        let q = divide_by_vandermonde(&-alt, 2).unwrap();
        assert_eq!(q, -(x(2, 0) * x(2, 1) * (x(2, 0) + x(2, 1))));
    }

    #[test]
    fn divide_rejects_non_antisymmetric() {
        let p = x(2, 0);
        assert_eq!(divide_by_vandermonde(&p, 2), Err(Error::NotAntisymmetric));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(
            schur_polynomial(&Partition::empty(), 2).unwrap(),
            c(2, int(1))
        );
        let s1 = schur_polynomial(&Partition::new(vec![1]).unwrap(), 2).unwrap();
        assert_eq!(s1, x(2, 0) + x(2, 1));
        let s21 = schur_polynomial(&Partition::new(vec![2, 1]).unwrap(), 2).unwrap();
        assert_eq!(s21, x(2, 0).pow(2) * x(2, 1) + x(2, 0) * x(2, 1).pow(2));
        assert_eq!(
            schur_polynomial(&Partition::new(vec![1, 1, 1]).unwrap(), 2),
            Err(Error::InvalidPartition)
        );
    }

    #[test]
    fn schur_at_ones_counts_tableaux() {
        let s = schur_polynomial(&Partition::new(vec![1]).unwrap(), 3).unwrap();
        assert_eq!(s.eval(&[int(1), int(1), int(1)]).unwrap(), int(3));
        // s_(2,1)(1,1,1) = 8 semistandard tableaux
        let s = schur_polynomial(&Partition::new(vec![2, 1]).unwrap(), 3).unwrap();
        assert_eq!(s.eval(&[int(1), int(1), int(1)]).unwrap(), int(8));
    }

    #[test]
    fn schur_is_symmetric_with_nonnegative_integer_coefficients() {
        for lambda in partitions_in_box(3, 2) {
            let s = schur_polynomial(&lambda, 3).unwrap();
            assert!(s.is_symmetric_in(&[0, 1, 2]), "{lambda}");
            assert!(s.terms().all(|(_, c)| c.is_integer() && !c.is_negative()));
        }
    }

    #[test]
    fn derivative_examples() {
        let p = x(1, 0).pow(2) - c(1, frac(2, 3));
        assert_eq!(p.derivative("x1").unwrap(), x(1, 0).scale(&int(2)));
        assert!(c(1, int(5)).derivative("x1").unwrap().is_zero());
        let q = x(2, 0) * x(2, 1) * (x(2, 0) + x(2, 1));
        let expected = (x(2, 0) * x(2, 1)).scale(&int(2)) + x(2, 1).pow(2);
        assert_eq!(q.derivative("x1").unwrap(), expected);
        assert_eq!(
            q.derivative("z"),
            Err(Error::InvalidArity("unknown variable"))
        );
    }

    #[test]
    fn partitions_strip_trailing_zeros() {
        let p = Partition::new(vec![2, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[2, 1]);
        assert_eq!(p.to_string(), "(2,1)");
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(partitions_in_box(2, 2).len(), 6);
    }

    #[test]
    fn canonical_text_form() {
        let vars = alloc::vec![String::from("x1"), String::from("y1")];
        let p = MultiPoly::monomial(vars.clone(), vec![1, 1], frac(1, 2))
            + MultiPoly::constant(vars.clone(), frac(1, 3));
        assert_eq!(p.to_string(), "1/2*x1*y1 + 1/3");
        let q = x(2, 0).pow(2) - x(2, 1) - c(2, frac(2, 3));
        assert_eq!(q.to_string(), "x1^2 - x2 - 2/3");
        assert_eq!((-x(2, 1)).to_string(), "-x2");
        assert_eq!(MultiPoly::zero(var_names("x", 1)).to_string(), "0");
    }
}
