mod common;

use cdkernel::poly::{
    divide_by_vandermonde, partitions_in_box, schur_polynomial, vandermonde_poly, var_names,
    MultiPoly,
};
use cdkernel::rational::Rational;
use cdkernel::subset::{permutation_sign, permutations};
use common::rational;
use proptest::prelude::*;

fn poly(m: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, m), rational()), 1..5)
        .prop_map(move |terms| MultiPoly::from_terms(var_names("x", m), terms))
}

fn antisymmetrize(p: &MultiPoly) -> MultiPoly {
    let m = p.nvars();
    permutations(m)
        .into_iter()
        .fold(MultiPoly::zero(p.vars().to_vec()), |acc, perm| {
            let q = p.permute_vars(&perm);
            if permutation_sign(&perm) > 0 {
                acc + q
            } else {
                acc - q
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vandermonde_division_round_trips((m, p) in (1usize..=4).prop_flat_map(|m| (Just(m), poly(m)))) {
        let anti = antisymmetrize(&p);
        let q = divide_by_vandermonde(&anti, m).unwrap();
        prop_assert_eq!(&q * &vandermonde_poly(m), anti);
        let idx: Vec<usize> = (0..m).collect();
        prop_assert!(q.is_symmetric_in(&idx));
    }

    #[test]
    fn eval_is_a_ring_homomorphism(
        (p, q, pt) in (1usize..=3).prop_flat_map(|m| (poly(m), poly(m), prop::collection::vec(rational(), m)))
    ) {
        let ep = p.eval(&pt).unwrap();
        let eq = q.eval(&pt).unwrap();
        prop_assert_eq!((&p * &q).eval(&pt).unwrap(), &ep * &eq);
        prop_assert_eq!((&p + &q).eval(&pt).unwrap(), &ep + &eq);
    }
}

#[test]
fn schur_polynomials_are_symmetric() {
    for m in 1..=3 {
        let idx: Vec<usize> = (0..m).collect();
        for lambda in partitions_in_box(m, 3) {
            assert!(
                schur_polynomial(&lambda, m).unwrap().is_symmetric_in(&idx),
                "{lambda}"
            );
        }
    }
}

/// Schur polynomials via the bialternant match the count of semistandard tableaux at (1, ..., 1),
/// computed by the hook-content formula.
#[test]
fn schur_at_ones_matches_hook_content() {
    for m in 1..=3usize {
        for lambda in partitions_in_box(m, 3) {
            let parts = lambda.parts();
            let mut num = Rational::from_integer(1.into());
            for (i, &row) in parts.iter().enumerate() {
                for j in 0..row as usize {
                    let content = m as i64 + j as i64 - i as i64;
                    let arm = row as i64 - j as i64 - 1;
                    let leg = parts
                        .iter()
                        .skip(i + 1)
                        .filter(|&&r| r as usize > j)
                        .count() as i64;
                    num *= Rational::new(content.into(), (arm + leg + 1).into());
                }
            }
            let ones = vec![Rational::from_integer(1.into()); m];
            assert_eq!(
                schur_polynomial(&lambda, m).unwrap().eval(&ones).unwrap(),
                num,
                "{lambda}, m={m}"
            );
        }
    }
}
