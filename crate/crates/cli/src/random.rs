//! Seeded generation of small random rationals, measures and orthogonal systems.

use cdkernel::rational::{all_distinct, frac};
use cdkernel::{build_system, Measure, OrthoSystem, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Resampling attempts allowed per generated instance.
pub const RETRY_CAP: usize = 100;

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    /// Independent stream for one trial of one suite.
    pub fn for_trial(seed: u64, suite_index: usize, trial: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(((suite_index as u64) << 32) | trial as u64);
        Gen { rng }
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Numerator in [-9, 9], denominator in {1, 2, 3}.
    pub fn rational(&mut self) -> Rational {
        let n = self.int(-9, 9);
        let d = self.int(1, 3);
        frac(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if r != Rational::from_integer(0.into()) {
                return r;
            }
        }
    }

    pub fn rationals(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rational()).collect()
    }

    pub fn nonzero_rationals(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.nonzero_rational()).collect()
    }

    pub fn distinct_rationals(&mut self, len: usize) -> Option<Vec<Rational>> {
        self.retry(|g| Some(g.rationals(len)).filter(|v| all_distinct(v)))
    }

    /// Runs `f` until it yields a value, at most [`RETRY_CAP`] times.
    pub fn retry<T>(&mut self, mut f: impl FnMut(&mut Gen) -> Option<T>) -> Option<T> {
        (0..RETRY_CAP).find_map(|_| f(self))
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        items.shuffle(&mut self.rng);
    }

    /// A measure with `support` distinct points and nonzero integer weights in [-5, 5]
    /// (in [1, 5] when `positive`).
    pub fn measure(&mut self, support: usize, positive: bool) -> Option<Measure> {
        let points = self.distinct_rationals(support)?;
        let weights = (0..support)
            .map(|_| {
                let w = self.int(1, 5);
                if positive || self.rng.gen_bool(0.5) {
                    Rational::from_integer(w.into())
                } else {
                    Rational::from_integer((-w).into())
                }
            })
            .collect();
        Measure::new(points, weights).ok()
    }

    /// An orthogonal system of degree `n` over a measure of `n..=max_support` points.
    pub fn system(&mut self, n: usize, max_support: usize, positive: bool) -> Option<OrthoSystem> {
        self.retry(|g| {
            let support = g.range(n, max_support.max(n));
            let mu = g.measure(support, positive)?;
            build_system(&mu, n).ok()
        })
    }
}
