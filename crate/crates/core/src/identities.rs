//! Evaluators for the Pfaffian and determinant identities behind the Pfaffian
//! kernel formulas. Each returns both sides so callers can compare them.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SkewMatrix};
use crate::rational::{pow, sign, vandermonde, Rational};
use crate::subset::{subsets, Subset};

/// Left and right side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sides {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `a + b(u + v) + c·u·v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadratic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Quadratic {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        Quadratic { a, b, c }
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        &self.a + &self.b * (u + v) + &self.c * u * v
    }

    /// `b² - ac`.
    pub fn discriminant(&self) -> Rational {
        &self.b * &self.b - &self.a * &self.c
    }

    /// `(ac - b² + (c u + b)(c v + b)) / c`, the form that reduces the
    /// general case to `1 - u v`. `None` when `c = 0`.
    pub fn reduced_form(&self, u: &Rational, v: &Rational) -> Option<Rational> {
        if self.c.is_zero() {
            return None;
        }
        let shifted = (&self.c * u + &self.b) * (&self.c * v + &self.b);
        Some((-self.discriminant() + shifted) / &self.c)
    }
}

/// Inputs of the triple identity: free `a_i`, coordinates `z_i`, and optional `ζ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeInput {
    pub a: Vec<Rational>,
    pub z: Vec<Rational>,
    pub zeta: Option<Vec<Rational>>,
}

/// Values of the three expressions; `dpib` is present only when `ζ` was given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSides {
    pub dpi: Rational,
    pub dpia: Rational,
    pub dpib: Option<Rational>,
}

impl TripleSides {
    pub fn holds(&self) -> bool {
        self.dpi == self.dpia && self.dpib.as_ref().is_none_or(|v| *v == self.dpi)
    }
}

fn half(dim: usize) -> Result<usize> {
    if !dim.is_multiple_of(2) {
        Err(Error::InvalidArity("dimension must be even"))
    } else {
        Ok(dim / 2)
    }
}

fn rows_cols(s: &Subset, dim: usize) -> (Vec<usize>, Vec<usize>) {
    (s.indices().collect(), s.complement(dim).indices().collect())
}

/// Rains' expansion: `pfaff(a_ij - a_ji) = Σ_{|S|=m} (-1)^{χ(S)} det_{i∈S, j∉S}(a_ij)`
/// with `χ(S)` the number of even elements of `S`.
pub fn rains_sides(a: &Matrix) -> Result<Sides> {
    if !a.is_square() {
        return Err(Error::InvalidArity("matrix must be square"));
    }
    let dim = a.rows();
    let m = half(dim)?;
    let lhs = SkewMatrix::from_upper(dim, |i, j| a.get(i, j) - a.get(j, i))?.pfaffian();
    let mut rhs = Rational::zero();
    for s in subsets(dim, m) {
        let (rows, cols) = rows_cols(&s, dim);
        rhs += sign(s.even_count()) * a.submatrix(&rows, &cols).determinant()?;
    }
    Ok(Sides { lhs, rhs })
}

/// The three expressions of the Sundquist-type identity for the subset `s` of `[2m]`.
///
/// `t` are square roots of `z`; `input.zeta`, when present, must satisfy
/// `ζ_i + ζ_i⁻¹ = z_i + 2`.
pub fn sundquist_sides(input: &FreeInput, s: &Subset, t: &[Rational]) -> Result<TripleSides> {
    let dim = input.z.len();
    let m = half(dim)?;
    if input.a.len() != dim || t.len() != dim || s.len() != m || s.max() > dim {
        return Err(Error::InvalidArity("need 2m values each and |S| = m"));
    }
    if t.iter().zip(&input.z).any(|(ti, zi)| ti * ti != *zi) {
        return Err(Error::InvalidArgument("t_i² must equal z_i"));
    }
    let a = &input.a;
    let z = &input.z;

    let (rows, cols) = rows_cols(s, dim);
    let mut cross = Rational::one();
    let mut entries = Vec::with_capacity(m * m);
    for &i in &rows {
        for &j in &cols {
            let dz = &z[j] - &z[i];
            if dz.is_zero() {
                return Err(Error::SingularInput);
            }
            entries.push((&a[j] - &a[i]) / &dz);
            cross *= dz;
        }
    }
    let det = Matrix::new(m, m, entries)?.determinant()?;
    let dpi = sign(m * (m + 1) / 2 + s.sum()) * cross * det;

    let dpia = scaled_pfaffian(dim, |i, j| &t[i] + &t[j], a)?;

    let dpib = match &input.zeta {
        None => None,
        Some(zeta) => {
            if zeta.len() != dim {
                return Err(Error::InvalidArity("need 2m zeta values"));
            }
            if zeta.iter().any(Zero::is_zero) {
                return Err(Error::SingularInput);
            }
            let two = Rational::from_integer(2.into());
            if zeta.iter().zip(z).any(|(q, zi)| q + q.recip() != zi + &two) {
                return Err(Error::InvalidArgument("zeta must satisfy ζ + 1/ζ = z + 2"));
            }
            let pf = scaled_pfaffian(dim, |i, j| Rational::one() - &zeta[i] * &zeta[j], a)?;
            let prefactor: Rational = zeta
                .iter()
                .map(|q| pow(&q.recip(), (m as u32).saturating_sub(1)))
                .product();
            Some(prefactor * pf)
        }
    };
    Ok(TripleSides { dpi, dpia, dpib })
}

/// `Π_{i<j} d(i,j) · pfaff((a_j - a_i) / d(i,j))`.
fn scaled_pfaffian(
    dim: usize,
    d: impl Fn(usize, usize) -> Rational,
    a: &[Rational],
) -> Result<Rational> {
    let mut prod = Rational::one();
    for j in 0..dim {
        for i in 0..j {
            let v = d(i, j);
            if v.is_zero() {
                return Err(Error::SingularInput);
            }
            prod *= v;
        }
    }
    let pf = SkewMatrix::from_upper(dim, |i, j| (&a[j] - &a[i]) / d(i, j))?.pfaffian();
    Ok(prod * pf)
}

/// `Σ_{|S|=m} (-1)^{χ(S)} Π_{j∉S} z_j Π_{i<j, same side} (x_j - x_i) q(x_i, x_j)`.
fn signed_subset_sum(x: &[Rational], z: &[Rational], q: &Quadratic) -> Rational {
    let dim = x.len();
    let m = dim / 2;
    let mut acc = Rational::zero();
    for s in subsets(dim, m) {
        let mut term = sign(s.even_count());
        for j in (1..=dim).filter(|&j| !s.contains(j)) {
            term *= &z[j - 1];
        }
        for j in 0..dim {
            for i in 0..j {
                if s.contains(i + 1) == s.contains(j + 1) {
                    term *= (&x[j] - &x[i]) * q.eval(&x[i], &x[j]);
                }
            }
        }
        acc += term;
    }
    acc
}

/// Ishikawa–Wakayama: `pfaff((z_j - z_i)/q(x_i, x_j))` against
/// `(b²-ac)^{m(m-1)/2} Π_{i<j} q(x_i,x_j)⁻¹ · Σ_S (…)`.
pub fn iw_sides(x: &[Rational], z: &[Rational], q: &Quadratic) -> Result<Sides> {
    let dim = x.len();
    let m = half(dim)?;
    if z.len() != dim {
        return Err(Error::InvalidArity("x and z must have the same length"));
    }
    let mut denominators = Rational::one();
    for j in 0..dim {
        for i in 0..j {
            let v = q.eval(&x[i], &x[j]);
            if v.is_zero() {
                return Err(Error::SingularInput);
            }
            denominators *= v;
        }
    }
    let lhs =
        SkewMatrix::from_upper(dim, |i, j| (&z[j] - &z[i]) / q.eval(&x[i], &x[j]))?.pfaffian();
    let rhs = pow(&q.discriminant(), (m * m.saturating_sub(1) / 2) as u32)
        * signed_subset_sum(x, z, q)
        / denominators;
    Ok(Sides { lhs, rhs })
}

/// The closed form of the Ishikawa–Wakayama Pfaffian when `z = x`:
/// `(b²-ac)^{m(m-1)} Π_{i<j} (x_j - x_i)/q(x_i, x_j)`.
pub fn iw_diagonal_closed_form(x: &[Rational], q: &Quadratic) -> Result<Rational> {
    let m = half(x.len())?;
    let mut acc = pow(&q.discriminant(), (m * m.saturating_sub(1)) as u32);
    for j in 0..x.len() {
        for i in 0..j {
            let v = q.eval(&x[i], &x[j]);
            if v.is_zero() {
                return Err(Error::SingularInput);
            }
            acc *= (&x[j] - &x[i]) / v;
        }
    }
    Ok(acc)
}

/// The subset-sum evaluation
/// `Σ_S (-1)^{χ(S)} Π_{j∉S} x_j Π_{same side}(x_j - x_i) q(x_i,x_j) = (b²-ac)^{m(m-1)/2} Δ(x)`.
pub fn ssc_sides(x: &[Rational], q: &Quadratic) -> Result<Sides> {
    let m = half(x.len())?;
    let lhs = signed_subset_sum(x, x, q);
    let rhs = pow(&q.discriminant(), (m * m.saturating_sub(1) / 2) as u32) * vandermonde(x);
    Ok(Sides { lhs, rhs })
}

/// Cauchy-type determinant
/// `det(1/q(x_i, y_j)) = (b²-ac)^{m(m-1)/2} Π_{i<j}(x_j-x_i)(y_j-y_i) / Π_{i,j} q(x_i, y_j)`.
pub fn cauchy_sides(x: &[Rational], y: &[Rational], q: &Quadratic) -> Result<Sides> {
    let m = x.len();
    if y.len() != m {
        return Err(Error::InvalidArity("x and y must have the same length"));
    }
    let mut denominators = Rational::one();
    let mut entries = Vec::with_capacity(m * m);
    for xi in x {
        for yj in y {
            let v = q.eval(xi, yj);
            if v.is_zero() {
                return Err(Error::SingularInput);
            }
            entries.push(v.recip());
            denominators *= v;
        }
    }
    let lhs = Matrix::new(m, m, entries)?.determinant()?;
    let rhs = pow(&q.discriminant(), (m * m.saturating_sub(1) / 2) as u32)
        * vandermonde(x)
        * vandermonde(y)
        / denominators;
    Ok(Sides { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rains_two_by_two() {
        let a = Matrix::from_rows(vec![ints(&[5, 3]), ints(&[-7, 2])]).unwrap();
        let sides = rains_sides(&a).unwrap();
        assert_eq!(sides.lhs, int(10));
        assert_eq!(sides.rhs, int(3) - int(-7));
    }

    #[test]
    fn rains_on_skew_input_doubles() {
        let skew = SkewMatrix::from_upper(4, |i, j| int((i * 4 + j) as i64 - 3)).unwrap();
        let sides = rains_sides(skew.as_matrix()).unwrap();
        assert_eq!(sides.lhs, int(4) * skew.pfaffian());
        assert!(sides.holds());
    }

    #[test]
    fn rains_rejects_odd() {
        let a = Matrix::identity(3);
        assert!(matches!(rains_sides(&a), Err(Error::InvalidArity(_))));
    }

    #[test]
    fn sundquist_m1_collapses() {
        let input = FreeInput {
            a: vec![int(3), frac(1, 2)],
            z: vec![int(4), int(9)],
            zeta: None,
        };
        let t = ints(&[2, 3]);
        for s in [vec![1], vec![2]] {
            let sides = sundquist_sides(&input, &Subset::new(s).unwrap(), &t).unwrap();
            assert_eq!(sides.dpi, frac(1, 2) - int(3));
            assert_eq!(sides.dpia, sides.dpi);
        }
    }

    #[test]
    fn sundquist_m1_zeta() {
        // ζ = s², t = s - 1/s, z = t² for s = 2, 3
        let input = FreeInput {
            a: vec![int(1), int(7)],
            z: vec![frac(9, 4), frac(64, 9)],
            zeta: Some(vec![int(4), int(9)]),
        };
        let t = vec![frac(3, 2), frac(8, 3)];
        let sides = sundquist_sides(&input, &Subset::new(vec![2]).unwrap(), &t).unwrap();
        assert_eq!(sides.dpib, Some(int(6)));
        assert!(sides.holds());
        let bad_t = ints(&[1, 1]);
        assert!(sundquist_sides(&input, &Subset::new(vec![1]).unwrap(), &bad_t).is_err());
        let bad_zeta = FreeInput {
            zeta: Some(vec![int(4), int(8)]),
            ..input
        };
        assert!(matches!(
            sundquist_sides(&bad_zeta, &Subset::new(vec![1]).unwrap(), &t),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn sundquist_m2_example() {
        let input = FreeInput {
            a: ints(&[1, 2, 3, 4]),
            z: ints(&[1, 4, 9, 25]),
            zeta: None,
        };
        let sides = sundquist_sides(&input, &Subset::range(2), &ints(&[1, 2, 3, 5])).unwrap();
        assert!(sides.holds());
        assert_eq!(sides.dpi, sides.dpia);
    }

    #[test]
    fn sundquist_singular() {
        let input = FreeInput {
            a: ints(&[1, 2]),
            z: ints(&[4, 4]),
            zeta: None,
        };
        let r = sundquist_sides(&input, &Subset::new(vec![1]).unwrap(), &ints(&[2, -2]));
        assert_eq!(r, Err(Error::SingularInput));
    }

    #[test]
    fn iw_m1() {
        let q = Quadratic::new(int(1), int(2), int(3));
        let x = ints(&[1, 2]);
        let z = vec![frac(1, 3), int(4)];
        let sides = iw_sides(&x, &z, &q).unwrap();
        let expected = (int(4) - frac(1, 3)) / q.eval(&x[0], &x[1]);
        assert_eq!(sides.lhs, expected);
        assert_eq!(sides.rhs, expected);
    }

    #[test]
    fn iw_diagonal_m2() {
        let q = Quadratic::new(int(1), int(0), int(-1));
        let x = vec![int(2), frac(1, 3), int(-3), frac(5, 3)];
        let sides = iw_sides(&x, &x, &q).unwrap();
        assert!(sides.holds());
        assert_eq!(sides.lhs, iw_diagonal_closed_form(&x, &q).unwrap());
    }

    #[test]
    fn ssc_examples() {
        let q = Quadratic::new(int(0), int(1), int(0));
        let sides = ssc_sides(&ints(&[1, 2, 3, 4]), &q).unwrap();
        assert_eq!(sides.lhs, int(12));
        assert_eq!(sides.rhs, int(12));
        let sides = ssc_sides(&ints(&[5, 9]), &Quadratic::new(int(2), int(7), int(-1))).unwrap();
        assert_eq!(sides.lhs, int(4));
        assert!(sides.holds());
        let sides = ssc_sides(
            &ints(&[1, 3, 3, 2]),
            &Quadratic::new(int(1), int(2), int(3)),
        )
        .unwrap();
        assert_eq!(sides.lhs, int(0));
        assert_eq!(sides.rhs, int(0));
    }

    #[test]
    fn cauchy_classical_case() {
        // a = 1, b = 0, c = -1: det 1/(1 - x_i y_j)
        let q = Quadratic::new(int(1), int(0), int(-1));
        let sides =
            cauchy_sides(&ints(&[2, 3, 5]), &[frac(1, 7), int(-1), frac(2, 3)], &q).unwrap();
        assert!(sides.holds());
    }

    #[test]
    fn elementary_reduction() {
        let q = Quadratic::new(frac(3, 2), int(-2), int(5));
        let (u, v) = (frac(1, 3), int(-4));
        assert_eq!(q.reduced_form(&u, &v).unwrap(), q.eval(&u, &v));
        assert!(Quadratic::new(int(1), int(1), int(0))
            .reduced_form(&u, &v)
            .is_none());
    }
}
