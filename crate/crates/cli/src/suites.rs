//! Seeded randomized verification suites.
//!
//! Every trial draws its own instance from an independent random stream, so
//! results do not depend on thread scheduling or on which other suites run.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use cdkernel::identities::{
    cauchy_sides, iw_diagonal_closed_form, iw_sides, rains_sides, ssc_sides, sundquist_sides,
};
use cdkernel::kernels::{
    contraction_check, delta_km_sum, general_expansion, hodge_apply, hodge_apply_twice,
    hodge_predicted, hodge_square_scalar, kernel_poly, kernel_vars, km_confluent, km_integral,
    partition_of_subset, schur_expansion, zeta_to_z,
};
use cdkernel::poly::{vandermonde_in, var_names};
use cdkernel::rational::{all_distinct, format_list, pow, vandermonde};
use cdkernel::subset::subsets;
use cdkernel::{
    km_eval, km_pfaffian, CdMode, FreeInput, KernelPoint, Matrix, MultiPoly, OrthoSystem,
    PfaffianChoice, Quadratic, Rational, Route, SkewMatrix, SqrtChoice, Subset, ZetaChoice,
};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{CliError, CliResult};
use crate::random::Gen;

/// Largest support drawn for random measures.
const MAX_SUPPORT: usize = 6;
pub const MAX_N_LIMIT: usize = 6;
pub const MAX_M_LIMIT: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    RouteAgreement,
    Symmetry,
    ChoiceIndependence,
    ZetaRelation,
    CdFormula,
    Hodge,
    Reproducing,
    Dsp,
    Contraction,
    Confluent,
    Specialization,
    Schur,
    GeneralExpansion,
    Rains,
    Triple,
    Iw,
    Ssc,
    Cauchy,
    PfaffianSquared,
}

impl Suite {
    pub const ALL: [Suite; 19] = [
        Suite::RouteAgreement,
        Suite::Symmetry,
        Suite::ChoiceIndependence,
        Suite::ZetaRelation,
        Suite::CdFormula,
        Suite::Hodge,
        Suite::Reproducing,
        Suite::Dsp,
        Suite::Contraction,
        Suite::Confluent,
        Suite::Specialization,
        Suite::Schur,
        Suite::GeneralExpansion,
        Suite::Rains,
        Suite::Triple,
        Suite::Iw,
        Suite::Ssc,
        Suite::Cauchy,
        Suite::PfaffianSquared,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RouteAgreement => "route-agreement",
            Suite::Symmetry => "symmetry",
            Suite::ChoiceIndependence => "choice-independence",
            Suite::ZetaRelation => "zeta-relation",
            Suite::CdFormula => "cd-formula",
            Suite::Hodge => "hodge",
            Suite::Reproducing => "reproducing",
            Suite::Dsp => "dsp",
            Suite::Contraction => "contraction",
            Suite::Confluent => "confluent",
            Suite::Specialization => "specialization",
            Suite::Schur => "schur",
            Suite::GeneralExpansion => "general-expansion",
            Suite::Rains => "rains",
            Suite::Triple => "triple",
            Suite::Iw => "iw",
            Suite::Ssc => "ssc",
            Suite::Cauchy => "cauchy",
            Suite::PfaffianSquared => "pfaffian-squared",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Suites that build orthogonal systems and therefore need `max_n ≥ 1`.
    pub fn needs_system(self) -> bool {
        !matches!(
            self,
            Suite::ZetaRelation
                | Suite::Rains
                | Suite::Triple
                | Suite::Iw
                | Suite::Ssc
                | Suite::Cauchy
                | Suite::PfaffianSquared
        )
    }

    fn index(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).expect("listed")
    }

    fn trial(self, g: &mut Gen, trial: usize, p: &Params) -> Option<Check> {
        match self {
            Suite::RouteAgreement => route_agreement(g, p),
            Suite::Symmetry => symmetry(g, p),
            Suite::ChoiceIndependence => choice_independence(g, p),
            Suite::ZetaRelation => zeta_relation(g),
            Suite::CdFormula => cd_formula(g, p),
            Suite::Hodge => hodge(g, sweep_n(trial, p), p),
            Suite::Reproducing => reproducing(g, sweep_n(trial, p), p),
            Suite::Dsp => dsp(g, p),
            Suite::Contraction => contraction(g, sweep_n(trial, p)),
            Suite::Confluent => confluent(g, p),
            Suite::Specialization => specialization(g, p),
            Suite::Schur => schur(g, sweep_n(trial, p), p),
            Suite::GeneralExpansion => general(g, sweep_n(trial, p), p),
            Suite::Rains => rains(g, p),
            Suite::Triple => triple(g, p),
            Suite::Iw => iw(g, p),
            Suite::Ssc => ssc(g, p),
            Suite::Cauchy => cauchy(g, p),
            Suite::PfaffianSquared => pfaffian_squared(g, p),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Resolves `name` (or `"all"`) against the bounds, rejecting invalid combinations.
pub fn select(name: &str, max_n: usize, max_m: usize) -> CliResult<Vec<Suite>> {
    if max_n > MAX_N_LIMIT {
        return Err(CliError::Usage(format!(
            "--max-n must be at most {MAX_N_LIMIT}"
        )));
    }
    if !(1..=MAX_M_LIMIT).contains(&max_m) {
        return Err(CliError::Usage(format!(
            "--max-m must be between 1 and {MAX_M_LIMIT}"
        )));
    }
    let suites = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        let suite = Suite::from_name(name)
            .ok_or_else(|| CliError::Usage(format!("unknown suite {name:?}")))?;
        vec![suite]
    };
    if max_n == 0 {
        if let Some(s) = suites.iter().find(|s| s.needs_system()) {
            return Err(CliError::Usage(format!(
                "suite {s} needs --max-n of at least 1"
            )));
        }
    }
    Ok(suites)
}

#[derive(Debug, Clone, Copy)]
pub struct Params {
    pub max_n: usize,
    pub max_m: usize,
}

/// A failed comparison with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: usize,
    pub check: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub attempted: usize,
    pub passed: usize,
    /// Trials whose instance could not be drawn within the retry cap.
    pub skipped: usize,
    pub counterexample: Option<Counterexample>,
    pub duration: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// The deterministic stdout lines for this report.
    pub fn lines(&self) -> Vec<String> {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut lines = vec![format!(
            "suite={} trials={} status={}",
            self.suite, self.attempted, status
        )];
        if self.skipped > 0 {
            lines.push(format!("suite={} skipped={}", self.suite, self.skipped));
        }
        if let Some(c) = &self.counterexample {
            lines.push(format!(
                "suite={} passed={} trial={} check={} inputs={} lhs={} rhs={}",
                self.suite, self.passed, c.trial, c.check, c.inputs, c.lhs, c.rhs
            ));
        }
        lines
    }
}

pub fn run_suite(suite: Suite, trials: usize, seed: u64, params: Params) -> SuiteReport {
    let start = Instant::now();
    let outcomes: Vec<Option<Check>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut g = Gen::for_trial(seed, suite.index(), t);
            suite.trial(&mut g, t, &params)
        })
        .collect();
    let mut report = SuiteReport {
        suite,
        attempted: 0,
        passed: 0,
        skipped: 0,
        counterexample: None,
        duration: Duration::ZERO,
    };
    for (trial, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            None => report.skipped += 1,
            Some(Ok(())) => {
                report.attempted += 1;
                report.passed += 1;
            }
            Some(Err(failure)) => {
                report.attempted += 1;
                if report.counterexample.is_none() {
                    report.counterexample = Some(Counterexample {
                        trial,
                        check: failure.check,
                        inputs: failure.inputs,
                        lhs: failure.lhs,
                        rhs: failure.rhs,
                    });
                }
            }
        }
    }
    report.duration = start.elapsed();
    report
}

#[derive(Debug)]
struct Failure {
    check: String,
    inputs: String,
    lhs: String,
    rhs: String,
}

type Check = Result<(), Failure>;

/// Accumulates a description of the instance for counterexample reports.
#[derive(Default)]
struct Ctx {
    inputs: String,
}

impl Ctx {
    fn with_system(sys: &OrthoSystem) -> Ctx {
        let mut ctx = Ctx::default();
        ctx.add("points", format_list(sys.measure().points()));
        ctx.add("weights", format_list(sys.measure().weights()));
        ctx.add("n", sys.n());
        ctx
    }

    fn add(&mut self, key: &str, value: impl fmt::Display) -> &mut Ctx {
        if !self.inputs.is_empty() {
            self.inputs.push(';');
        }
        let _ = write!(self.inputs, "{key}:{value}");
        self
    }

    fn fail(&self, check: &str, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Failure {
        Failure {
            check: check.to_string(),
            inputs: if self.inputs.is_empty() {
                "-".to_string()
            } else {
                self.inputs.clone()
            },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn eq(&self, check: &str, lhs: &Rational, rhs: &Rational) -> Check {
        if lhs == rhs {
            Ok(())
        } else {
            Err(self.fail(check, lhs, rhs))
        }
    }

    fn ok<T>(&self, check: &str, r: cdkernel::Result<T>) -> Result<T, Failure> {
        r.map_err(|e| {
            self.fail(
                check,
                format!("error:{}", e.to_string().replace(' ', "_")),
                "value",
            )
        })
    }
}

fn list(v: &[Rational]) -> String {
    format_list(v)
}

/// Degrees cycle with the trial index so every `n ≤ max_n` is covered.
fn sweep_n(trial: usize, p: &Params) -> usize {
    1 + trial % p.max_n
}

fn random_n(g: &mut Gen, p: &Params) -> usize {
    g.range(1, p.max_n)
}

fn random_m(g: &mut Gen, n: usize, p: &Params, min_m: usize) -> Option<usize> {
    let top = n.min(p.max_m);
    (top >= min_m).then(|| g.range(min_m, top))
}

fn system_with_m(
    g: &mut Gen,
    p: &Params,
    min_m: usize,
    positive: bool,
) -> Option<(OrthoSystem, usize)> {
    g.retry(|g| {
        let n = random_n(g, p);
        let m = random_m(g, n, p, min_m)?;
        Some((g.system(n, MAX_SUPPORT, positive)?, m))
    })
}

/// `s ↦ (ζ = s², t = s - 1/s, z = t²)`, the common parametrization of both Pfaffian forms.
fn zeta_family(g: &mut Gen, len: usize) -> Option<(Vec<Rational>, Vec<Rational>, Vec<Rational>)> {
    g.retry(|g| {
        let s = g.nonzero_rationals(len);
        let zeta: Vec<Rational> = s.iter().map(|v| v * v).collect();
        let t: Vec<Rational> = s.iter().map(|v| v - v.recip()).collect();
        let z: Vec<Rational> = t.iter().map(|v| v * v).collect();
        all_distinct(&z).then_some((zeta, t, z))
    })
}

/// Distinct roots with distinct squares.
fn sqrt_family(g: &mut Gen, len: usize) -> Option<Vec<Rational>> {
    g.retry(|g| {
        let t = g.rationals(len);
        let z: Vec<Rational> = t.iter().map(|v| v * v).collect();
        all_distinct(&z).then_some(t)
    })
}

fn all_routes(
    ctx: &Ctx,
    sys: &OrthoSystem,
    z: &[Rational],
) -> Result<Vec<(Route, Rational)>, Failure> {
    let pt = ctx.ok("kernel_point", KernelPoint::from_z(z))?;
    Route::ALL
        .iter()
        .map(|&r| Ok((r, ctx.ok(r.name(), km_eval(sys, &pt, r))?)))
        .collect()
}

fn route_agreement(g: &mut Gen, p: &Params) -> Option<Check> {
    let (sys, m) = system_with_m(g, p, 0, false)?;
    let t = sqrt_family(g, 2 * m)?;
    let (zeta, t2, z2) = zeta_family(g, 2 * m)?;
    let generic = g.distinct_rationals(2 * m)?;
    let mut ctx = Ctx::with_system(&sys);
    ctx.add("m", m)
        .add("t", list(&t))
        .add("zeta", list(&zeta))
        .add("z", list(&generic));
    Some((|| {
        let z: Vec<Rational> = t.iter().map(|v| v * v).collect();
        let sqrt = ctx.ok("pfaffian_sqrt", SqrtChoice::new(t.clone()))?;
        let pf = ctx.ok(
            "pfaffian_sqrt",
            km_pfaffian(&sys, &PfaffianChoice::Sqrt(sqrt)),
        )?;
        for (route, v) in all_routes(&ctx, &sys, &z)? {
            ctx.eq(&format!("{}_vs_pfaffian_sqrt", route.name()), &v, &pf)?;
        }

        let zc = ctx.ok("pfaffian_zeta", ZetaChoice::new(zeta.clone()))?;
        let pz = ctx.ok(
            "pfaffian_zeta",
            km_pfaffian(&sys, &PfaffianChoice::Zeta(zc)),
        )?;
        let ps = ctx.ok(
            "pfaffian_sqrt",
            km_pfaffian(
                &sys,
                &PfaffianChoice::Sqrt(ctx.ok("roots", SqrtChoice::new(t2.clone()))?),
            ),
        )?;
        ctx.eq("pfaffian_zeta_vs_pfaffian_sqrt", &pz, &ps)?;
        for (route, v) in all_routes(&ctx, &sys, &z2)? {
            ctx.eq(&format!("{}_vs_pfaffian_zeta", route.name()), &v, &pz)?;
        }

        let values = all_routes(&ctx, &sys, &generic)?;
        for (route, v) in &values[1..] {
            ctx.eq(&format!("{}_vs_sum", route.name()), v, &values[0].1)?;
        }
        Ok(())
    })())
}

fn symmetry(g: &mut Gen, p: &Params) -> Option<Check> {
    let (sys, m) = system_with_m(g, p, 1, false)?;
    let z = g.rationals(2 * m);
    let perms: Vec<Vec<Rational>> = (0..10)
        .map(|_| {
            let mut w = z.clone();
            g.shuffle(&mut w);
            w
        })
        .collect();
    let mut ctx = Ctx::with_system(&sys);
    ctx.add("z", list(&z));
    Some((|| {
        let base = ctx.ok("integral", km_integral(&sys, &z))?;
        for w in &perms {
            let v = ctx.ok("integral", km_integral(&sys, w))?;
            ctx.eq(&format!("permuted:{}", list(w)), &v, &base)?;
        }
        Ok(())
    })())
}

fn choice_independence(g: &mut Gen, p: &Params) -> Option<Check> {
    let (sys, m) = system_with_m(g, p, 1, false)?;
    let t = sqrt_family(g, 2 * m)?;
    let (zeta, _, _) = zeta_family(g, 2 * m)?;
    let mut ctx = Ctx::with_system(&sys);
    ctx.add("m", m).add("t", list(&t)).add("zeta", list(&zeta));
    let sqrt = |t: &[Rational]| -> cdkernel::Result<Rational> {
        km_pfaffian(&sys, &PfaffianChoice::Sqrt(SqrtChoice::new(t.to_vec())?))
    };
    let zeta_form = |q: &[Rational]| -> cdkernel::Result<Rational> {
        km_pfaffian(&sys, &PfaffianChoice::Zeta(ZetaChoice::new(q.to_vec())?))
    };
    Some((|| {
        let base = ctx.ok("pfaffian_sqrt", sqrt(&t))?;
        for i in 0..t.len() {
            let mut flipped = t.clone();
            flipped[i] = -&flipped[i];
            let v = ctx.ok("pfaffian_sqrt", sqrt(&flipped))?;
            ctx.eq(&format!("flip_t{}", i + 1), &v, &base)?;
        }
        let base = ctx.ok("pfaffian_zeta", zeta_form(&zeta))?;
        for i in 0..zeta.len() {
            let mut inverted = zeta.clone();
            inverted[i] = inverted[i].recip();
            if !all_distinct(&inverted) {
                continue;
            }
            let v = ctx.ok("pfaffian_zeta", zeta_form(&inverted))?;
            ctx.eq(&format!("invert_zeta{}", i + 1), &v, &base)?;
        }
        Ok(())
    })())
}

fn zeta_relation(g: &mut Gen) -> Option<Check> {
    let zi = g.nonzero_rational();
    let zj = g.nonzero_rational();
    let mut ctx = Ctx::default();
    ctx.add("zeta_i", &zi).add("zeta_j", &zj);
    let lhs = zeta_to_z(&zj) - zeta_to_z(&zi);
    let rhs = -(&zj - &zi) * (Rational::one() - &zi * &zj) / (&zi * &zj);
    Some(ctx.eq("z_difference", &lhs, &rhs))
}

fn cd_formula(g: &mut Gen, p: &Params) -> Option<Check> {
    let n = random_n(g, p);
    let sys = g.system(n, MAX_SUPPORT, false)?;
    let pts = g.distinct_rationals(4)?;
    let mut ctx = Ctx::with_system(&sys);
    ctx.add("pts", list(&pts));
    Some((|| {
        for x in &pts {
            for y in &pts {
                let sum = ctx.ok("sum", sys.cd_kernel(x, y, CdMode::Sum))?;
                if x != y {
                    let quotient = ctx.ok("quotient", sys.cd_kernel(x, y, CdMode::Quotient))?;
                    ctx.eq(&format!("sum_vs_quotient@{x},{y}"), &sum, &quotient)?;
                }
                let pt = ctx.ok("point", KernelPoint::new(vec![x.clone()], vec![y.clone()]))?;
                let k1 = ctx.ok("integral", km_eval(&sys, &pt, Route::Integral))?;
                ctx.eq(&format!("k1_vs_cd@{x},{y}"), &k1, &sum)?;
            }
        }
        Ok(())
    })())
}

fn hodge(g: &mut Gen, n: usize, p: &Params) -> Option<Check> {
    let sys = g.system(n, MAX_SUPPORT, false)?;
    let points: Vec<Vec<Rational>> = (0..3).map(|_| g.rationals(n)).collect();
    let ctx = Ctx::with_system(&sys);
    Some((|| {
        for m in 0..=n.min(p.max_m) {
            let scalar = hodge_square_scalar(&sys, m);
            for s in subsets(n, m) {
                for x in &points {
                    let tag = format!("S={s};m={m};x={}", list(x));
                    let applied = ctx.ok("hodge", hodge_apply(&sys, &s, &x[..n - m]))?;
                    let predicted = ctx.ok("hodge", hodge_predicted(&sys, &s, &x[..n - m]))?;
                    ctx.eq(&format!("star:{tag}"), &applied, &predicted)?;
                    let twice = ctx.ok("hodge_twice", hodge_apply_twice(&sys, &s, &x[..m]))?;
                    let basis = ctx.ok("basis", sys.basis_minor(&s, &x[..m]))?;
                    ctx.eq(&format!("star_squared:{tag}"), &twice, &(&scalar * basis))?;
                }
            }
        }
        Ok(())
    })())
}

fn reproducing(g: &mut Gen, n: usize, p: &Params) -> Option<Check> {
    let sys = g.system(n, MAX_SUPPORT, false)?;
    let points: Vec<Vec<Rational>> = (0..5).map(|_| g.rationals(p.max_m)).collect();
    let ctx = Ctx::with_system(&sys);
    let mu = sys.measure();
    Some((|| {
        for m in 1..=n.min(p.max_m) {
            let basis = subsets(n, m);
            for u in &basis {
                for x in &points {
                    let x = &x[..m];
                    let mut err = None;
                    let value = mu.integrate_sym_with(m, |y| {
                        let r = sys
                            .basis_minor(u, y)
                            .and_then(|f| Ok(f * delta_km_sum(&sys, x, y)?));
                        r.unwrap_or_else(|e| {
                            err.get_or_insert(e);
                            Rational::zero()
                        })
                    });
                    if let Some(e) = err {
                        return Err(ctx.fail("reproducing", e, "value"));
                    }
                    let expected = ctx.ok("basis", sys.basis_minor(u, x))?;
                    ctx.eq(&format!("reproduce:U={u};x={}", list(x)), &value, &expected)?;
                }
                for v in &basis {
                    let ip = mu.integrate_sym_with(m, |y| {
                        let a = sys.basis_minor(u, y).unwrap_or_else(|_| Rational::zero());
                        let b = sys.basis_minor(v, y).unwrap_or_else(|_| Rational::zero());
                        a * b
                    });
                    let expected = if u == v {
                        sys.subset_norm(u)
                    } else {
                        Rational::zero()
                    };
                    ctx.eq(&format!("orthogonality:S={u};T={v}"), &ip, &expected)?;
                }
            }
        }
        Ok(())
    })())
}

fn horner(c: &[Rational], x: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |acc, v| acc * x + v)
}

fn det_at(funcs: &[Vec<Rational>], pts: &[Rational]) -> Rational {
    let m = funcs.len();
    Matrix::from_fn(m, m, |i, j| horner(&funcs[j], &pts[i]))
        .determinant()
        .expect("square")
}

fn dsp(g: &mut Gen, p: &Params) -> Option<Check> {
    let (sys, m) = system_with_m(g, p, 1, false)?;
    let n = sys.n();
    let f: Vec<Vec<Rational>> = (0..m).map(|_| g.rationals(n)).collect();
    let h: Vec<Vec<Rational>> = (0..m).map(|_| g.rationals(n)).collect();
    let mut ctx = Ctx::with_system(&sys);
    let fmt_funcs = |v: &[Vec<Rational>]| v.iter().map(|c| list(c)).collect::<Vec<_>>().join("|");
    ctx.add("m", m)
        .add("f", fmt_funcs(&f))
        .add("g", fmt_funcs(&h));
    let mu = sys.measure();
    let lhs = mu.integrate_sym_with(m, |y| det_at(&f, y) * det_at(&h, y));
    let gram = Matrix::from_fn(m, m, |i, j| {
        mu.integrate(|x| horner(&f[i], x) * horner(&h[j], x))
    });
    Some((|| {
        let rhs = ctx.ok("gram", gram.determinant())?;
        ctx.eq("determinant_pairing", &lhs, &rhs)
    })())
}

fn contraction(g: &mut Gen, n: usize) -> Option<Check> {
    let sys = g.system(n, MAX_SUPPORT, false)?;
    let points: Vec<(Vec<Rational>, Vec<Rational>)> =
        (0..3).map(|_| (g.rationals(n), g.rationals(n))).collect();
    let ctx = Ctx::with_system(&sys);
    Some((|| {
        for m in 0..=n {
            for (x, y) in &points {
                let pt = ctx.ok("point", KernelPoint::new(x[..m].to_vec(), y[..m].to_vec()))?;
                for l in m..=n {
                    let (lhs, rhs) = ctx.ok("contraction", contraction_check(&sys, m, l, &pt))?;
                    let tag = format!("m={m};l={l};x={};y={}", list(pt.x()), list(pt.y()));
                    ctx.eq(&format!("contraction:{tag}"), &lhs, &rhs)?;
                }
            }
        }
        Ok(())
    })())
}

fn confluent(g: &mut Gen, p: &Params) -> Option<Check> {
    let (sys, m) = system_with_m(g, p, 1, true)?;
    let x = g.distinct_rationals(m)?;
    let mut ctx = Ctx::with_system(&sys);
    ctx.add("m", m).add("x", list(&x));
    let n = sys.n();
    Some((|| {
        let value = ctx.ok("confluent", km_confluent(&sys, &x))?;
        let pt = ctx.ok("point", KernelPoint::new(x.clone(), x.clone()))?;
        let integral = ctx.ok("integral", km_eval(&sys, &pt, Route::Integral))?;
        ctx.eq("confluent_vs_integral", &value, &integral)?;
        let dx = vandermonde(&x);
        let weighted = &dx * &dx * &value;
        let marginal = sys.measure().integrate_sym_with(n - m, |w| {
            let full: Vec<Rational> = x.iter().chain(w).cloned().collect();
            let d = vandermonde(&full);
            &d * &d
        }) / sys.norm_product();
        ctx.eq("correlation_marginal", &weighted, &marginal)?;
        if weighted.is_negative() {
            return Err(ctx.fail("nonnegative", weighted, ">=0"));
        }
        Ok(())
    })())
}

fn specialization(g: &mut Gen, p: &Params) -> Option<Check> {
    let (sys, m, zeta, t, z, a, below) = g.retry(|g| {
        let (sys, m) = system_with_m(g, p, 1, false)?;
        let n = sys.n();
        let (zeta, t, z) = zeta_family(g, 2 * m)?;
        let below: Vec<Rational> = z.iter().map(|zi| sys.eval(n - 1, zi)).collect();
        if below.iter().any(Zero::is_zero) {
            return None;
        }
        let a: Vec<Rational> = z
            .iter()
            .zip(&below)
            .map(|(zi, b)| sys.eval(n, zi) / b)
            .collect();
        Some((sys, m, zeta, t, z, a, below))
    })?;
    let n = sys.n();
    let mut ctx = Ctx::with_system(&sys);
    ctx.add("m", m).add("zeta", list(&zeta));
    let input = FreeInput {
        a,
        z: z.clone(),
        zeta: Some(zeta),
    };
    Some((|| {
        let sides = ctx.ok("triple", sundquist_sides(&input, &Subset::range(m), &t))?;
        ctx.eq("dpi_vs_dpia", &sides.dpi, &sides.dpia)?;
        if let Some(b) = &sides.dpib {
            ctx.eq("dpi_vs_dpib", &sides.dpi, b)?;
        }
        let scale: Rational =
            below.iter().product::<Rational>() / (pow(sys.norm(n - 1), m as u32) * vandermonde(&z));
        let pf = ctx.ok(
            "pfaffian",
            km_pfaffian(
                &sys,
                &PfaffianChoice::Sqrt(ctx.ok("roots", SqrtChoice::new(t.clone()))?),
            ),
        )?;
        ctx.eq("specialized_dpi_vs_pfaffian", &(sides.dpi * scale), &pf)
    })())
}

fn schur(g: &mut Gen, n: usize, p: &Params) -> Option<Check> {
    let sys = g.system(n, MAX_SUPPORT, false)?;
    let ctx = Ctx::with_system(&sys);
    Some((|| {
        for m in 1..=n.min(p.max_m) {
            let expansion = ctx.ok("schur", schur_expansion(&sys, m))?;
            let direct = ctx.ok("kernel_poly", kernel_poly(&sys, m))?;
            let rebuilt = expansion.to_poly();
            if rebuilt != direct {
                return Err(ctx.fail(
                    &format!("reconstruction:m={m}"),
                    compact(&rebuilt),
                    compact(&direct),
                ));
            }
        }
        Ok(())
    })())
}

fn compact(p: &MultiPoly) -> String {
    p.to_string().replace(' ', "")
}

fn general(g: &mut Gen, n: usize, p: &Params) -> Option<Check> {
    let sys = g.system(n, MAX_SUPPORT, false)?;
    let x = var_names("x", 1);
    let monomials: Vec<MultiPoly> = (0..n)
        .map(|k| MultiPoly::var(x.clone(), 0).pow(k as u32))
        .collect();
    let orthogonal: Vec<MultiPoly> = sys.polys()[..n].to_vec();
    let random_basis = |g: &mut Gen| -> Vec<MultiPoly> {
        (0..n)
            .map(|_| MultiPoly::from_univariate(x.clone(), 0, &g.rationals(n)))
            .collect()
    };
    let e = random_basis(g);
    let f = random_basis(g);
    let mut ctx = Ctx::with_system(&sys);
    let fmt_basis = |b: &[MultiPoly]| b.iter().map(compact).collect::<Vec<_>>().join("|");
    ctx.add("e", fmt_basis(&e)).add("f", fmt_basis(&f));
    Some((|| {
        for m in 1..=n.min(p.max_m) {
            let vars = kernel_vars(m);
            let xs: Vec<usize> = (0..m).collect();
            let ys: Vec<usize> = (m..2 * m).collect();
            let target = ctx.ok("kernel_poly", kernel_poly(&sys, m))?
                * vandermonde_in(&vars, &xs)
                * vandermonde_in(&vars, &ys);

            let orth = ctx.ok(
                "orthogonal_basis",
                general_expansion(&sys, m, &orthogonal, &orthogonal),
            )?;
            for ((s, t), c) in &orth.coefficients {
                let expected = if s == t {
                    sys.subset_norm(s).recip()
                } else {
                    Rational::zero()
                };
                ctx.eq(&format!("orthogonal:m={m};S={s};T={t}"), c, &expected)?;
            }

            let mono = ctx.ok(
                "monomial_basis",
                general_expansion(&sys, m, &monomials, &monomials),
            )?;
            let schur = ctx.ok("schur", schur_expansion(&sys, m))?;
            for ((s, t), c) in &mono.coefficients {
                let key = (partition_of_subset(s, m), partition_of_subset(t, m));
                let expected = schur
                    .coefficients
                    .get(&key)
                    .cloned()
                    .unwrap_or_else(Rational::zero);
                ctx.eq(
                    &format!("monomial_vs_schur:m={m};S={s};T={t}"),
                    c,
                    &expected,
                )?;
            }

            let mut expansions = vec![("orthogonal", orth), ("monomial", mono)];
            match general_expansion(&sys, m, &e, &f) {
                Ok(exp) => expansions.push(("random", exp)),
                Err(cdkernel::Error::DegenerateBasis) => {}
                Err(err) => return Err(ctx.fail("random_basis", err, "value")),
            }
            for (label, exp) in expansions {
                let rebuilt = exp.to_poly();
                if rebuilt != target {
                    return Err(ctx.fail(
                        &format!("{label}_reconstruction:m={m}"),
                        compact(&rebuilt),
                        compact(&target),
                    ));
                }
            }
        }
        Ok(())
    })())
}

fn random_m_identity(g: &mut Gen, p: &Params) -> usize {
    g.range(1, p.max_m)
}

fn rains(g: &mut Gen, p: &Params) -> Option<Check> {
    let dim = 2 * random_m_identity(g, p);
    let entries: Vec<Rational> = (0..dim * dim)
        .map(|_| Rational::from_integer(g.int(-9, 9).into()))
        .collect();
    let mut ctx = Ctx::default();
    ctx.add("dim", dim).add("a", list(&entries));
    Some((|| {
        let a = ctx.ok("matrix", Matrix::new(dim, dim, entries.clone()))?;
        let sides = ctx.ok("rains", rains_sides(&a))?;
        ctx.eq("pfaffian_vs_minor_sum", &sides.lhs, &sides.rhs)
    })())
}

fn triple(g: &mut Gen, p: &Params) -> Option<Check> {
    let m = random_m_identity(g, p);
    let a = g.rationals(2 * m);
    let (zeta, t, z) = zeta_family(g, 2 * m)?;
    let mut ctx = Ctx::default();
    ctx.add("a", list(&a)).add("zeta", list(&zeta));
    let input = FreeInput {
        a,
        z,
        zeta: Some(zeta),
    };
    Some((|| {
        for s in subsets(2 * m, m) {
            let sides = ctx.ok("triple", sundquist_sides(&input, &s, &t))?;
            ctx.eq(&format!("dpi_vs_dpia:S={s}"), &sides.dpi, &sides.dpia)?;
            let dpib = sides.dpib.clone().unwrap_or_else(Rational::zero);
            ctx.eq(&format!("dpi_vs_dpib:S={s}"), &sides.dpi, &dpib)?;
        }
        Ok(())
    })())
}

fn quadratic(g: &mut Gen) -> Quadratic {
    Quadratic::new(g.rational(), g.rational(), g.rational())
}

fn fmt_quadratic(q: &Quadratic) -> String {
    format!("{},{},{}", q.a, q.b, q.c)
}

fn iw(g: &mut Gen, p: &Params) -> Option<Check> {
    let m = random_m_identity(g, p);
    let (x, z, q) = g.retry(|g| {
        let x = g.rationals(2 * m);
        let z = g.rationals(2 * m);
        let q = quadratic(g);
        let nonsingular = (0..2 * m).all(|j| (0..j).all(|i| !q.eval(&x[i], &x[j]).is_zero()));
        nonsingular.then_some((x, z, q))
    })?;
    let mut ctx = Ctx::default();
    ctx.add("x", list(&x))
        .add("z", list(&z))
        .add("abc", fmt_quadratic(&q));
    let dim = 2 * m;
    Some((|| {
        let sides = ctx.ok("iw", iw_sides(&x, &z, &q))?;
        ctx.eq("pfaffian_vs_subset_sum", &sides.lhs, &sides.rhs)?;
        let a = Matrix::from_fn(dim, dim, |i, j| {
            if i == j {
                Rational::zero()
            } else {
                &z[j] / q.eval(&x[i], &x[j])
            }
        });
        let via_rains = ctx.ok("rains", rains_sides(&a))?;
        ctx.eq("subset_sum_vs_rains", &sides.rhs, &via_rains.rhs)?;
        let diagonal = ctx.ok("iw_diagonal", iw_sides(&x, &x, &q))?;
        let closed = ctx.ok("closed_form", iw_diagonal_closed_form(&x, &q))?;
        ctx.eq("diagonal_closed_form", &diagonal.lhs, &closed)
    })())
}

fn ssc(g: &mut Gen, p: &Params) -> Option<Check> {
    let m = random_m_identity(g, p);
    let x = g.rationals(2 * m);
    let q = quadratic(g);
    let k = g.rational();
    // q(u + k, v + k) has the same b² - ac
    let shifted = Quadratic::new(
        &q.a + Rational::from_integer(2.into()) * &q.b * &k + &q.c * &k * &k,
        &q.b + &q.c * &k,
        q.c.clone(),
    );
    let mut ctx = Ctx::default();
    ctx.add("x", list(&x))
        .add("abc", fmt_quadratic(&q))
        .add("shift", &k);
    Some((|| {
        let sides = ctx.ok("ssc", ssc_sides(&x, &q))?;
        ctx.eq("subset_sum_vs_vandermonde", &sides.lhs, &sides.rhs)?;
        ctx.eq(
            "equal_discriminant",
            &shifted.discriminant(),
            &q.discriminant(),
        )?;
        let other = ctx.ok("ssc", ssc_sides(&x, &shifted))?;
        ctx.eq("equal_discriminant_lhs", &other.lhs, &sides.lhs)
    })())
}

fn cauchy(g: &mut Gen, p: &Params) -> Option<Check> {
    let m = random_m_identity(g, p);
    let (x, y, q) = g.retry(|g| {
        let x = g.rationals(m);
        let y = g.rationals(m);
        let q = quadratic(g);
        let ok = x
            .iter()
            .all(|xi| y.iter().all(|yj| !q.eval(xi, yj).is_zero()));
        ok.then_some((x, y, q))
    })?;
    let mut ctx = Ctx::default();
    ctx.add("x", list(&x))
        .add("y", list(&y))
        .add("abc", fmt_quadratic(&q));
    Some((|| {
        let sides = ctx.ok("cauchy", cauchy_sides(&x, &y, &q))?;
        ctx.eq("determinant_vs_closed_form", &sides.lhs, &sides.rhs)?;
        if let Some(c) = (!q.c.is_zero()).then_some(&q.c) {
            for xi in &x {
                for yj in &y {
                    let reduced = q.reduced_form(xi, yj).expect("c nonzero");
                    ctx.eq(&format!("reduced_form:c={c}"), &reduced, &q.eval(xi, yj))?;
                }
            }
        }
        Ok(())
    })())
}

fn pfaffian_squared(g: &mut Gen, p: &Params) -> Option<Check> {
    let dim = 2 * random_m_identity(g, p);
    let upper = g.rationals(dim * (dim - 1) / 2);
    let mut ctx = Ctx::default();
    ctx.add("dim", dim).add("upper", list(&upper));
    Some((|| {
        let mut it = upper.iter();
        let mut table = vec![vec![Rational::zero(); dim]; dim];
        for (i, row) in table.iter_mut().enumerate() {
            for cell in row.iter_mut().skip(i + 1) {
                *cell = it.next().expect("sized").clone();
            }
        }
        let skew = ctx.ok(
            "skew",
            SkewMatrix::from_upper(dim, |i, j| table[i][j].clone()),
        )?;
        let pf = skew.pfaffian();
        let det = ctx.ok("det", skew.as_matrix().determinant())?;
        ctx.eq("pfaffian_squared_vs_det", &(&pf * &pf), &det)
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nonsense"), None);
    }

    #[test]
    fn selection_rules() {
        assert!(select("rains", 0, 2).is_ok());
        assert!(select("route-agreement", 0, 2).is_err());
        assert!(select("all", 0, 2).is_err());
        assert!(select("nonsense", 1, 1).is_err());
        assert!(select("rains", 7, 2).is_err());
        assert!(select("rains", 1, 4).is_err());
        assert!(select("rains", 1, 0).is_err());
        assert_eq!(select("all", 2, 1).unwrap().len(), Suite::ALL.len());
    }

    #[test]
    fn every_suite_passes_small_runs() {
        let params = Params { max_n: 3, max_m: 2 };
        for s in Suite::ALL {
            let report = run_suite(s, 4, 11, params);
            assert!(report.passed(), "{:?}", report.lines());
            assert_eq!(report.attempted + report.skipped, 4);
            assert_eq!(report.passed, report.attempted);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let params = Params { max_n: 3, max_m: 2 };
        let a = run_suite(Suite::RouteAgreement, 6, 5, params);
        let b = run_suite(Suite::RouteAgreement, 6, 5, params);
        assert_eq!(a.lines(), b.lines());
    }

    #[test]
    fn failure_lines_carry_counterexample() {
        let report = SuiteReport {
            suite: Suite::Rains,
            attempted: 3,
            passed: 2,
            skipped: 0,
            counterexample: Some(Counterexample {
                trial: 1,
                check: "c".into(),
                inputs: "dim:2".into(),
                lhs: "1".into(),
                rhs: "2".into(),
            }),
            duration: Duration::ZERO,
        };
        assert_eq!(
            report.lines(),
            vec![
                "suite=rains trials=3 status=FAIL".to_string(),
                "suite=rains passed=2 trial=1 check=c inputs=dim:2 lhs=1 rhs=2".to_string(),
            ]
        );
    }
}
