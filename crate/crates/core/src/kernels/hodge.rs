//! The Hodge star `φ: V_n^m → V_n^{n-m}`,
//! `(φf)(x) = ∫ f(y) Δ(y, x) dμ_m(y)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ortho::OrthoSystem;
use crate::rational::{sign, vandermonde, Rational};
use crate::subset::Subset;

/// `φ p_S = sign · ⟨p_S, p_S⟩ · p_target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeImage {
    pub sign: i32,
    pub target: Subset,
}

/// Predicted image of the basis element `p_S` with `|S| = m`.
pub fn hodge_star(sys: &OrthoSystem, m: usize, s: &Subset) -> Result<HodgeImage> {
    if s.len() != m {
        return Err(Error::InvalidArity("|S| must equal m"));
    }
    if s.max() > sys.n() {
        return Err(Error::InvalidArity("S must lie in [n]"));
    }
    let exponent = m * (m + 1) / 2 + s.sum();
    Ok(HodgeImage {
        sign: if exponent.is_multiple_of(2) { 1 } else { -1 },
        target: s.complement(sys.n()),
    })
}

fn concat(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().chain(b).cloned().collect()
}

fn check_point(sys: &OrthoSystem, s: &Subset, x: &[Rational]) -> Result<()> {
    if s.max() > sys.n() {
        return Err(Error::InvalidArity("S must lie in [n]"));
    }
    if x.len() + s.len() != sys.n() {
        return Err(Error::InvalidArity("point must have n - |S| coordinates"));
    }
    Ok(())
}

/// `(φ p_S)(x)` evaluated from its defining integral.
pub fn hodge_apply(sys: &OrthoSystem, s: &Subset, x: &[Rational]) -> Result<Rational> {
    check_point(sys, s, x)?;
    Ok(sys.measure().integrate_sym_with(s.len(), |y| {
        let d = vandermonde(&concat(y, x));
        if num_traits::Zero::is_zero(&d) {
            return d;
        }
        sys.basis_minor(s, y).expect("sizes checked") * d
    }))
}

/// `sign · Π_{i∈S}⟨p_{i-1},p_{i-1}⟩ · p_{S^c}(x)`.
pub fn hodge_predicted(sys: &OrthoSystem, s: &Subset, x: &[Rational]) -> Result<Rational> {
    check_point(sys, s, x)?;
    let image = hodge_star(sys, s.len(), s)?;
    let value = sys.subset_norm(s) * sys.basis_minor(&image.target, x)?;
    Ok(sign(usize::from(image.sign < 0)) * value)
}

/// `(φ(φ p_S))(x)` by nesting the defining integral twice; `x` has `|S|` coordinates.
pub fn hodge_apply_twice(sys: &OrthoSystem, s: &Subset, x: &[Rational]) -> Result<Rational> {
    if s.max() > sys.n() || x.len() != s.len() {
        return Err(Error::InvalidArity("point must have |S| coordinates"));
    }
    let n = sys.n();
    let m = s.len();
    Ok(sys.measure().integrate_sym_with(n - m, |y| {
        let d = vandermonde(&concat(y, x));
        if num_traits::Zero::is_zero(&d) {
            return d;
        }
        hodge_apply(sys, s, y).expect("sizes checked") * d
    }))
}
