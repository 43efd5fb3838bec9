#![allow(dead_code)]

use std::collections::BTreeSet;

use cdkernel::measure::Measure;
use cdkernel::ortho::{build_system, OrthoSystem};
use cdkernel::rational::{frac, Rational};
use proptest::prelude::*;

/// Numerator in [-9, 9], denominator in {1, 2, 3}.
pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

pub fn distinct_rationals(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), len)
        .prop_filter("distinct", |v| cdkernel::rational::all_distinct(v))
}

/// A measure with `min_support..=6` points and small nonzero integer weights.
pub fn measure(min_support: usize, positive: bool) -> impl Strategy<Value = Measure> {
    let weights = if positive {
        (1i64..=5).boxed()
    } else {
        prop_oneof![-5i64..=-1, 1i64..=5].boxed()
    };
    (min_support..=6usize)
        .prop_flat_map(move |k| {
            (
                prop::collection::btree_set(-9i64..=9, k),
                1i64..=3,
                prop::collection::vec(weights.clone(), k),
            )
        })
        .prop_map(|(pts, den, w): (BTreeSet<i64>, i64, Vec<i64>)| {
            let points = pts.into_iter().map(|p| frac(p, den)).collect();
            let weights = w.into_iter().map(|x| frac(x, 1)).collect();
            Measure::new(points, weights).unwrap()
        })
}

/// A nondegenerate system with `n` in `1..=max_n`.
pub fn system(max_n: usize, positive: bool) -> impl Strategy<Value = OrthoSystem> {
    (1..=max_n).prop_flat_map(move |n| {
        measure(n, positive).prop_filter_map("degenerate", move |mu| build_system(&mu, n).ok())
    })
}

pub fn m3() -> Measure {
    Measure::new(
        vec![frac(-1, 1), frac(0, 1), frac(1, 1)],
        vec![frac(1, 1); 3],
    )
    .unwrap()
}
