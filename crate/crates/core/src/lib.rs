//! Exact multivariable Christoffel–Darboux kernels.
//!
//! Everything here runs over arbitrary-precision rationals and finite discrete
//! measures, so every integral is a finite sum and every identity can be
//! checked by exact equality. The crate is `no_std` and only needs `alloc`.
//!
//! The pieces, bottom-up:
//!
//! - [`rational`]: the scalar type and its canonical text form.
//! - [`poly`]: sparse multivariate polynomials, Vandermonde products, Schur
//!   polynomials and exact division by the Vandermonde factor.
//! - [`measure`]: discrete measures, moments, the bilinear pairing and the
//!   symmetrized m-fold integral.
//! - [`ortho`]: monic orthogonal polynomial systems and the one-variable
//!   kernel.
//! - [`linalg`]: fraction-free determinants and Pfaffians.
//! - [`kernels`]: the m-variable kernel through every route, plus the Hodge
//!   star, contraction and Schur expansions.
//! - [`identities`]: the Pfaffian/determinant identities behind the Pfaffian
//!   kernel formulas.
//!
//! ```
//! use cdkernel::rational::int;
//! use cdkernel::{build_system, km_eval, KernelPoint, Measure, Route};
//!
//! let mu = Measure::new(vec![int(-1), int(0), int(1)], vec![int(1), int(1), int(1)])?;
//! let sys = build_system(&mu, 2)?; // p0 = 1, p1 = x, p2 = x² - 2/3
//! let pt = KernelPoint::new(vec![int(0)], vec![int(1)])?;
//! for route in Route::ALL {
//!     assert_eq!(km_eval(&sys, &pt, route)?.to_string(), "1/3");
//! }
//! # Ok::<(), cdkernel::Error>(())
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod identities;
pub mod kernels;
pub mod linalg;
pub mod measure;
pub mod ortho;
pub mod poly;
pub mod rational;
pub mod subset;

pub use error::{Error, Result};
pub use identities::{FreeInput, Quadratic, Sides, TripleSides};
pub use kernels::{
    contraction_check, general_expansion, hodge_star, kernel_poly, km_confluent, km_eval,
    km_pfaffian, schur_expansion, GeneralExpansion, HodgeImage, KernelPoint, PfaffianChoice, Route,
    SchurExpansion, SqrtChoice, ZetaChoice,
};
pub use linalg::{Matrix, SkewMatrix};
pub use measure::Measure;
pub use ortho::{build_system, CdMode, OrthoSystem};
pub use poly::{MultiPoly, Partition};
pub use rational::Rational;
pub use subset::Subset;
