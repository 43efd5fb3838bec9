//! Finite discrete measures and the integrals built on them.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::{factorial, pow, Rational};

/// `Σ_i weights[i] · δ(points[i])`. Weights may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    points: Vec<Rational>,
    weights: Vec<Rational>,
}

impl Measure {
    pub fn new(points: Vec<Rational>, weights: Vec<Rational>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidMeasure("empty support"));
        }
        if points.len() != weights.len() {
            return Err(Error::InvalidMeasure("points and weights differ in length"));
        }
        if weights.iter().any(Zero::is_zero) {
            return Err(Error::InvalidMeasure("zero weight"));
        }
        if !crate::rational::all_distinct(&points) {
            return Err(Error::InvalidMeasure("duplicate support point"));
        }
        Ok(Measure { points, weights })
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn support_size(&self) -> usize {
        self.points.len()
    }

    pub fn is_positive(&self) -> bool {
        self.weights.iter().all(Signed::is_positive)
    }

    /// `∫ f dμ` for an arbitrary function of one variable.
    pub fn integrate(&self, mut f: impl FnMut(&Rational) -> Rational) -> Rational {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(x))
            .sum()
    }

    /// `c_k = ∫ x^k dμ`.
    pub fn moment(&self, k: u32) -> Rational {
        self.integrate(|x| pow(x, k))
    }

    /// `⟨f, g⟩ = ∫ f g dμ` for univariate polynomials.
    pub fn pair(&self, f: &MultiPoly, g: &MultiPoly) -> Result<Rational> {
        if f.nvars() != 1 || g.nvars() != 1 {
            return Err(Error::InvalidArity("pairing takes univariate polynomials"));
        }
        let mut acc = Rational::zero();
        for (x, w) in self.points.iter().zip(&self.weights) {
            let at = core::slice::from_ref(x);
            acc += w * f.eval(at)? * g.eval(at)?;
        }
        Ok(acc)
    }

    /// `∫ f dμ_m = (1/m!) Σ_{ordered m-tuples} w_{i1}⋯w_{im} f(x_{i1}, …, x_{im})`,
    /// for any function of `m` arguments. With `m = 0` this is `f(())`.
    pub fn integrate_sym_with(
        &self,
        m: usize,
        mut f: impl FnMut(&[Rational]) -> Rational,
    ) -> Rational {
        let k = self.points.len();
        let mut idx = vec![0usize; m];
        let mut tuple: Vec<Rational> = vec![self.points[0].clone(); m];
        let mut acc = Rational::zero();
        loop {
            let mut weight = Rational::one();
            for (slot, &i) in idx.iter().enumerate() {
                tuple[slot] = self.points[i].clone();
                weight *= &self.weights[i];
            }
            acc += weight * f(&tuple);
            // odometer increment
            let mut pos = m;
            loop {
                if pos == 0 {
                    return acc / factorial(m);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < k {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// [`Measure::integrate_sym_with`] applied to a polynomial in `m` variables.
    pub fn integrate_sym(&self, f: &MultiPoly, m: usize) -> Result<Rational> {
        if f.nvars() != m {
            return Err(Error::InvalidArity(
                "integrand must have exactly m variables",
            ));
        }
        Ok(self.integrate_sym_with(m, |pt| f.eval(pt).expect("arity checked above")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{vandermonde_poly, var_names};
    use crate::rational::{frac, int};

    fn m3() -> Measure {
        Measure::new(vec![int(-1), int(0), int(1)], vec![int(1); 3]).unwrap()
    }

    fn xpoly() -> MultiPoly {
        MultiPoly::var(var_names("x", 1), 0)
    }

    fn cpoly(v: Rational) -> MultiPoly {
        MultiPoly::constant(var_names("x", 1), v)
    }

    #[test]
    fn construction_checks() {
        assert!(Measure::new(vec![], vec![]).is_err());
        assert!(Measure::new(vec![int(1), int(1)], vec![int(1), int(1)]).is_err());
        assert!(Measure::new(vec![int(1)], vec![int(0)]).is_err());
        assert!(Measure::new(vec![int(1)], vec![int(1), int(2)]).is_err());
        let signed = Measure::new(vec![frac(1, 2)], vec![frac(-2, 3)]).unwrap();
        assert!(!signed.is_positive());
        assert!(m3().is_positive());
    }

    #[test]
    fn moments() {
        assert_eq!(m3().moment(1), int(0));
        assert_eq!(m3().moment(0), int(3));
        assert_eq!(m3().moment(2), int(2));
    }

    #[test]
    fn pairings() {
        let mu = m3();
        assert_eq!(mu.pair(&cpoly(int(1)), &cpoly(int(1))).unwrap(), int(3));
        assert_eq!(mu.pair(&xpoly(), &xpoly()).unwrap(), int(2));
        let p2 = xpoly().pow(2) - cpoly(frac(2, 3));
        assert_eq!(mu.pair(&p2, &p2).unwrap(), frac(2, 3));
        let two = MultiPoly::var(var_names("x", 2), 0);
        assert!(matches!(
            mu.pair(&two, &xpoly()),
            Err(Error::InvalidArity(_))
        ));
    }

    #[test]
    fn moment_matches_pairing_against_one() {
        let mu = Measure::new(
            vec![frac(-3, 2), int(0), int(2), frac(1, 3)],
            vec![int(2), int(-1), frac(1, 2), int(5)],
        )
        .unwrap();
        for k in 0..=8 {
            assert_eq!(
                mu.moment(k),
                mu.pair(&xpoly().pow(k), &cpoly(int(1))).unwrap()
            );
        }
    }

    #[test]
    fn symmetric_integrals() {
        let mu = m3();
        let one = MultiPoly::one(var_names("x", 2));
        assert_eq!(mu.integrate_sym(&one, 2).unwrap(), frac(9, 2));
        let d = vandermonde_poly(2);
        assert_eq!(mu.integrate_sym(&(&d * &d), 2).unwrap(), int(6));
        let anti = MultiPoly::var(var_names("x", 2), 0) - MultiPoly::var(var_names("x", 2), 1);
        assert_eq!(mu.integrate_sym(&anti, 2).unwrap(), int(0));
        assert_eq!(
            mu.integrate_sym(&MultiPoly::constant(vec![], int(4)), 0)
                .unwrap(),
            int(4)
        );
        assert!(matches!(
            mu.integrate_sym(&one, 3),
            Err(Error::InvalidArity(_))
        ));
    }
}
