//! The m-variable kernel `K_m(x, y)`.
//!
//! `Δ(x)Δ(y)K_m(x, y)` is the reproducing kernel of the antisymmetric
//! polynomials of degree `< n` in each of `m` variables. It can be evaluated
//! by several independent formulas; [`km_eval`] exposes four of them and
//! [`km_pfaffian`] two more. All agree exactly.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ortho::OrthoSystem;
use crate::rational::{factorial, sign, vandermonde, Rational};
use crate::subset::subsets;

mod expansion;
mod hodge;
mod pfaffian;

pub use expansion::{
    general_expansion, kernel_poly, kernel_vars, partition_of_subset, schur_expansion,
    subset_of_partition, GeneralExpansion, SchurExpansion,
};
pub use hodge::{hodge_apply, hodge_apply_twice, hodge_predicted, hodge_star, HodgeImage};
pub use pfaffian::{km_pfaffian, zeta_to_z, PfaffianChoice, SqrtChoice, ZetaChoice};

/// Evaluation route for [`km_eval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// `Σ_S p_S(x) p_S(y) / ⟨p_S, p_S⟩`, divided by `Δ(x)Δ(y)`.
    Sum,
    /// `det K(x_i, y_j)`, divided by `Δ(x)Δ(y)`.
    TwoPointDet,
    /// Integral of `Π_{j,k}(z_j - w_k) Δ(w)²` over `n - m` variables.
    Integral,
    /// `det p_{n-m+j-1}(z_i)` over the `2m` concatenated coordinates.
    OnePointDet,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::Sum,
        Route::TwoPointDet,
        Route::Integral,
        Route::OnePointDet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Sum => "sum",
            Route::TwoPointDet => "two_point_det",
            Route::Integral => "integral",
            Route::OnePointDet => "one_point_det",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or(Error::InvalidArgument("unknown route"))
    }
}

/// The pair `(x, y)` of `m`-vectors; `z = (x_1..x_m, y_1..y_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelPoint {
    x: Vec<Rational>,
    y: Vec<Rational>,
}

impl KernelPoint {
    pub fn new(x: Vec<Rational>, y: Vec<Rational>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::InvalidArity("x and y must have the same length"));
        }
        Ok(KernelPoint { x, y })
    }

    /// Splits `z` into its two halves.
    pub fn from_z(z: &[Rational]) -> Result<Self> {
        if !z.len().is_multiple_of(2) {
            return Err(Error::InvalidArity("z must have even length"));
        }
        let m = z.len() / 2;
        Ok(KernelPoint {
            x: z[..m].to_vec(),
            y: z[m..].to_vec(),
        })
    }

    pub fn m(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }

    pub fn z(&self) -> Vec<Rational> {
        self.x.iter().chain(&self.y).cloned().collect()
    }
}

pub(crate) fn check_m(sys: &OrthoSystem, m: usize) -> Result<()> {
    if m > sys.n() {
        Err(Error::InvalidArgument("m must not exceed n"))
    } else {
        Ok(())
    }
}

fn concat(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().chain(b).cloned().collect()
}

/// `K_m(x, y)` by the chosen route.
pub fn km_eval(sys: &OrthoSystem, pt: &KernelPoint, route: Route) -> Result<Rational> {
    check_m(sys, pt.m())?;
    match route {
        Route::Sum => {
            let (dx, dy) = vandermonde_pair(pt)?;
            Ok(delta_km_sum(sys, pt.x(), pt.y())? / (dx * dy))
        }
        Route::TwoPointDet => {
            let (dx, dy) = vandermonde_pair(pt)?;
            let m = pt.m();
            let det = Matrix::from_fn(m, m, |i, j| sys.kernel(&pt.x[i], &pt.y[j])).determinant()?;
            Ok(det / (dx * dy))
        }
        Route::Integral => km_integral(sys, &pt.z()),
        Route::OnePointDet => km_one_point(sys, &pt.z()),
    }
}

fn vandermonde_pair(pt: &KernelPoint) -> Result<(Rational, Rational)> {
    let dx = vandermonde(pt.x());
    let dy = vandermonde(pt.y());
    if dx.is_zero() || dy.is_zero() {
        return Err(Error::CoincidentPoints);
    }
    Ok((dx, dy))
}

/// `Δ(x)Δ(y)K_m(x, y) = Σ_{|S| = m} p_S(x) p_S(y) / ⟨p_S, p_S⟩`, defined at every point.
pub fn delta_km_sum(sys: &OrthoSystem, x: &[Rational], y: &[Rational]) -> Result<Rational> {
    if x.len() != y.len() {
        return Err(Error::InvalidArity("x and y must have the same length"));
    }
    let m = x.len();
    check_m(sys, m)?;
    let mut acc = Rational::zero();
    for s in subsets(sys.n(), m) {
        let px = sys.basis_minor(&s, x)?;
        if px.is_zero() {
            continue;
        }
        acc += px * sys.basis_minor(&s, y)? / sys.subset_norm(&s);
    }
    Ok(acc)
}

/// `K_m(z)` for `z` of length `2m`, as
/// `(1/Π⟨p_{i-1},p_{i-1}⟩) ∫ Π_{j,k}(z_j - w_k) Δ(w)² dμ_{n-m}(w)`.
/// Needs no distinctness.
pub fn km_integral(sys: &OrthoSystem, z: &[Rational]) -> Result<Rational> {
    if !z.len().is_multiple_of(2) {
        return Err(Error::InvalidArity("z must have even length"));
    }
    let m = z.len() / 2;
    check_m(sys, m)?;
    let integral = sys.measure().integrate_sym_with(sys.n() - m, |w| {
        let dw = vandermonde(w);
        if dw.is_zero() {
            return dw;
        }
        let mut prod = &dw * &dw;
        for zj in z {
            for wk in w {
                prod *= zj - wk;
            }
        }
        prod
    });
    Ok(integral / sys.norm_product())
}

/// `K_m(z) = det p_{n-m+j-1}(z_i) / (Π_{i=1}^m ⟨p_{n-i},p_{n-i}⟩ Δ(z))`.
///
/// Columns past `p_n` use the continuation `x^{k-n} p_n`, which differs from
/// any other admissible choice only by multiples of columns already present.
pub fn km_one_point(sys: &OrthoSystem, z: &[Rational]) -> Result<Rational> {
    if !z.len().is_multiple_of(2) {
        return Err(Error::InvalidArity("z must have even length"));
    }
    let m = z.len() / 2;
    check_m(sys, m)?;
    let dz = vandermonde(z);
    if dz.is_zero() {
        return Err(Error::CoincidentPoints);
    }
    let n = sys.n();
    let det = Matrix::from_fn(2 * m, 2 * m, |i, j| sys.eval(n - m + j, &z[i])).determinant()?;
    let norms: Rational = (1..=m).map(|i| sys.norm(n - i)).product();
    Ok(det / (norms * dz))
}

/// `K_m(x, x)` from the confluent determinant with rows `p_{n-m+j-1}(x_i)` and
/// `p'_{n-m+j-1}(x_i)`.
pub fn km_confluent(sys: &OrthoSystem, x: &[Rational]) -> Result<Rational> {
    let m = x.len();
    check_m(sys, m)?;
    let dx = vandermonde(x);
    if dx.is_zero() {
        return Err(Error::CoincidentPoints);
    }
    let n = sys.n();
    let det = Matrix::from_fn(2 * m, 2 * m, |i, j| {
        if i < m {
            sys.eval(n - m + j, &x[i])
        } else {
            sys.eval_derivative(n - m + j, &x[i - m])
        }
    })
    .determinant()?;
    let norms: Rational = (1..=m).map(|i| sys.norm(n - i)).product();
    let d2 = &dx * &dx;
    Ok(sign(m * m.saturating_sub(1) / 2) * det / (norms * &d2 * &d2))
}

/// Both sides of the contraction identity
/// `Δ(x)Δ(y)K_m(x,y) = ((n-l)!(l-m)!/(n-m)!) ∫ Δ(x,w)Δ(y,w)K_l((x,w),(y,w)) dμ_{l-m}(w)`.
pub fn contraction_check(
    sys: &OrthoSystem,
    m: usize,
    l: usize,
    pt: &KernelPoint,
) -> Result<(Rational, Rational)> {
    let n = sys.n();
    if m > l || l > n {
        return Err(Error::InvalidArgument("need 0 <= m <= l <= n"));
    }
    if pt.m() != m {
        return Err(Error::InvalidArity(
            "point must have m coordinates per side",
        ));
    }
    let lhs = vandermonde(pt.x()) * vandermonde(pt.y()) * km_integral(sys, &pt.z())?;
    let mut failure = None;
    let integral = sys.measure().integrate_sym_with(l - m, |w| {
        let xw = concat(pt.x(), w);
        let yw = concat(pt.y(), w);
        let dxw = vandermonde(&xw);
        if dxw.is_zero() {
            return dxw;
        }
        let dyw = vandermonde(&yw);
        if dyw.is_zero() {
            return dyw;
        }
        match km_integral(sys, &concat(&xw, &yw)) {
            Ok(k) => dxw * dyw * k,
            Err(e) => {
                failure.get_or_insert(e);
                Rational::zero()
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let coefficient = factorial(n - l) * factorial(l - m) / factorial(n - m);
    Ok((lhs, coefficient * integral))
}

/// `Π_{i=1}^{n}⟨p_{i-1},p_{i-1}⟩` with the sign `(-1)^{m(n-m)}`: the scalar by
/// which the Hodge star squares to the identity.
pub fn hodge_square_scalar(sys: &OrthoSystem, m: usize) -> Rational {
    sign(m * (sys.n() - m)) * sys.norm_product()
}
