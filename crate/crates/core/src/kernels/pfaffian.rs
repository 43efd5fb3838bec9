//! Pfaffian formulas for `K_m(z)`.
//!
//! The square roots and the `ζ` parameters are the primary data: `z_i = t_i²`
//! and `z_i = ζ_i + ζ_i⁻¹ - 2`, so everything stays rational.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::SkewMatrix;
use crate::ortho::OrthoSystem;
use crate::rational::{all_distinct, pow, vandermonde, Rational};

use super::check_m;

/// Square roots `t_i` of the coordinates, `z_i = t_i²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtChoice {
    t: Vec<Rational>,
}

impl SqrtChoice {
    pub fn new(t: Vec<Rational>) -> Result<Self> {
        if !t.len().is_multiple_of(2) {
            return Err(Error::InvalidArity("need 2m square roots"));
        }
        if !all_distinct(&t) {
            return Err(Error::CoincidentPoints);
        }
        Ok(SqrtChoice { t })
    }

    pub fn roots(&self) -> &[Rational] {
        &self.t
    }

    pub fn z(&self) -> Vec<Rational> {
        self.t.iter().map(|t| t * t).collect()
    }
}

/// Parameters with `ζ_i + ζ_i⁻¹ = z_i + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaChoice {
    zeta: Vec<Rational>,
}

impl ZetaChoice {
    pub fn new(zeta: Vec<Rational>) -> Result<Self> {
        if !zeta.len().is_multiple_of(2) {
            return Err(Error::InvalidArity("need 2m zeta values"));
        }
        if zeta.iter().any(Zero::is_zero) {
            return Err(Error::InvalidArgument("zeta values must be nonzero"));
        }
        if !all_distinct(&zeta) {
            return Err(Error::CoincidentPoints);
        }
        Ok(ZetaChoice { zeta })
    }

    pub fn zeta(&self) -> &[Rational] {
        &self.zeta
    }

    pub fn z(&self) -> Vec<Rational> {
        self.zeta.iter().map(zeta_to_z).collect()
    }
}

/// `ζ + ζ⁻¹ - 2`.
pub fn zeta_to_z(zeta: &Rational) -> Rational {
    zeta + zeta.recip() - Rational::from_integer(2.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PfaffianChoice {
    Sqrt(SqrtChoice),
    Zeta(ZetaChoice),
}

impl PfaffianChoice {
    pub fn z(&self) -> Vec<Rational> {
        match self {
            PfaffianChoice::Sqrt(c) => c.z(),
            PfaffianChoice::Zeta(c) => c.z(),
        }
    }

    fn params(&self) -> &[Rational] {
        match self {
            PfaffianChoice::Sqrt(c) => &c.t,
            PfaffianChoice::Zeta(c) => &c.zeta,
        }
    }
}

/// `K_m(z)` from `pfaff((a_j - a_i) K(z_i, z_j)) / Π_{i<j}(a_j - a_i)`, with
/// `a = t`, or with `a = ζ` and an extra factor `Π ζ_i^{m-1}`.
pub fn km_pfaffian(sys: &OrthoSystem, choice: &PfaffianChoice) -> Result<Rational> {
    let a = choice.params();
    let m = a.len() / 2;
    check_m(sys, m)?;
    let z = choice.z();
    let pf = SkewMatrix::from_upper(2 * m, |i, j| (&a[j] - &a[i]) * sys.kernel(&z[i], &z[j]))?
        .pfaffian();
    let denom = vandermonde(a);
    if denom.is_zero() {
        return Err(Error::CoincidentPoints);
    }
    let value = pf / denom;
    Ok(match choice {
        PfaffianChoice::Sqrt(_) => value,
        PfaffianChoice::Zeta(_) => {
            let scale: Rational = a
                .iter()
                .map(|zeta| pow(zeta, m.saturating_sub(1) as u32))
                .product();
            value * scale
        }
    })
}
