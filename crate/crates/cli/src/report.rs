//! Text reports for the `ortho`, `kernel` and `schur` subcommands.

use cdkernel::kernels::kernel_poly;
use cdkernel::poly::partitions_in_box;
use cdkernel::rational::{all_distinct, format_list, sqrt};
use cdkernel::{
    build_system, km_confluent, km_eval, km_pfaffian, schur_expansion, CdMode, Error, KernelPoint,
    Measure, OrthoSystem, PfaffianChoice, Rational, Route, SqrtChoice, ZetaChoice,
};
use num_traits::Zero;

use crate::error::{CliError, CliResult};

/// Output lines plus whether every internal comparison agreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<String>,
    pub agreement: bool,
}

/// Every evaluator the kernel report can run, in output order.
pub const KERNEL_ROUTES: [&str; 7] = [
    "sum",
    "two_point_det",
    "integral",
    "one_point_det",
    "pfaffian_sqrt",
    "pfaffian_zeta",
    "confluent",
];

fn system(mu: &Measure, n: usize) -> CliResult<OrthoSystem> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    Ok(build_system(mu, n)?)
}

pub fn ortho_report(mu: &Measure, n: usize, xy: Option<(Rational, Rational)>) -> CliResult<Report> {
    let sys = system(mu, n)?;
    let mut lines = Vec::new();
    for k in 0..n {
        lines.push(format!(
            "k={k} coefficients={} norm={}",
            format_list(sys.coefficients(k)),
            sys.norm(k)
        ));
    }
    lines.push(format!(
        "k={n} coefficients={}",
        format_list(sys.coefficients(n))
    ));
    let mut agreement = true;
    if let Some((x, y)) = xy {
        let sum = sys.cd_kernel(&x, &y, CdMode::Sum)?;
        lines.push(format!("cd_mode=sum value={sum}"));
        match sys.cd_kernel(&x, &y, CdMode::Quotient) {
            Ok(q) => {
                agreement = q == sum;
                lines.push(format!("cd_mode=quotient value={q}"));
            }
            Err(Error::CoincidentPoints) => {
                lines.push("cd_mode=quotient skipped=coincident".into())
            }
            Err(e) => return Err(e.into()),
        }
        lines.push(format!("agreement={agreement}"));
    }
    Ok(Report { lines, agreement })
}

/// Rational `t` with `t² = z` for every coordinate, if one exists.
fn rational_roots(z: &[Rational]) -> Option<Vec<Rational>> {
    z.iter().map(sqrt).collect()
}

/// Rational `ζ` with `ζ + 1/ζ - 2 = z`, i.e. `ζ = (z + 2 + √(z(z + 4))) / 2`.
fn rational_zetas(z: &[Rational]) -> Option<Vec<Rational>> {
    let two = Rational::from_integer(2.into());
    let four = Rational::from_integer(4.into());
    z.iter()
        .map(|zi| {
            let root = sqrt(&(zi * (zi + &four)))?;
            Some((zi + &two + root) / &two)
        })
        .collect()
}

enum RouteValue {
    Value(Rational),
    Skipped(&'static str),
}

fn evaluate(sys: &OrthoSystem, route: &str, pt: &KernelPoint) -> CliResult<RouteValue> {
    let z = pt.z();
    let x_ok = all_distinct(pt.x()) && all_distinct(pt.y());
    let z_ok = all_distinct(&z);
    let value = match route {
        "sum" | "two_point_det" | "integral" | "one_point_det" => {
            let r: Route = route.parse()?;
            let needs = match r {
                Route::Integral => true,
                Route::OnePointDet => z_ok,
                _ => x_ok,
            };
            if !needs {
                return Ok(RouteValue::Skipped("coincident"));
            }
            km_eval(sys, pt, r)?
        }
        "pfaffian_sqrt" | "pfaffian_zeta" => {
            if !z_ok {
                return Ok(RouteValue::Skipped("coincident"));
            }
            let choice = if route == "pfaffian_sqrt" {
                rational_roots(&z).map(|t| SqrtChoice::new(t).map(PfaffianChoice::Sqrt))
            } else {
                rational_zetas(&z).map(|q| ZetaChoice::new(q).map(PfaffianChoice::Zeta))
            };
            match choice {
                None => return Ok(RouteValue::Skipped("irrational")),
                Some(c) => km_pfaffian(sys, &c?)?,
            }
        }
        "confluent" => {
            if pt.x() != pt.y() {
                return Ok(RouteValue::Skipped("off_diagonal"));
            }
            if !all_distinct(pt.x()) {
                return Ok(RouteValue::Skipped("coincident"));
            }
            km_confluent(sys, pt.x())?
        }
        other => return Err(CliError::Usage(format!("unknown route {other:?}"))),
    };
    Ok(RouteValue::Value(value))
}

/// Parses `--routes`; `None` selects every route.
pub fn parse_routes(names: Option<&str>) -> CliResult<Vec<&'static str>> {
    let Some(names) = names else {
        return Ok(KERNEL_ROUTES.to_vec());
    };
    let mut out = Vec::new();
    for name in names.split(',') {
        let route = KERNEL_ROUTES
            .iter()
            .find(|r| **r == name.trim())
            .ok_or_else(|| CliError::Usage(format!("unknown route {name:?}")))?;
        if !out.contains(route) {
            out.push(*route);
        }
    }
    Ok(out)
}

pub fn kernel_report(
    mu: &Measure,
    n: usize,
    m: usize,
    x: Vec<Rational>,
    y: Vec<Rational>,
    routes: &[&str],
) -> CliResult<Report> {
    if m > n {
        return Err(CliError::Usage(format!(
            "--m ({m}) must not exceed --n ({n})"
        )));
    }
    if x.len() != m || y.len() != m {
        return Err(CliError::Usage(format!(
            "--x and --y need exactly {m} values each"
        )));
    }
    let sys = system(mu, n)?;
    let pt = KernelPoint::new(x, y)?;
    let mut lines = Vec::new();
    let mut values: Vec<Rational> = Vec::new();
    for &route in routes {
        match evaluate(&sys, route, &pt)? {
            RouteValue::Value(v) => {
                lines.push(format!("route={route} value={v}"));
                values.push(v);
            }
            RouteValue::Skipped(why) => lines.push(format!("route={route} skipped={why}")),
        }
    }
    let agreement = values.windows(2).all(|w| w[0] == w[1]);
    lines.push(format!("agreement={agreement}"));
    Ok(Report { lines, agreement })
}

pub fn schur_report(mu: &Measure, n: usize, m: usize) -> CliResult<Report> {
    if m == 0 || m > n {
        return Err(CliError::Usage(format!(
            "--m must be between 1 and --n ({n})"
        )));
    }
    let sys = system(mu, n)?;
    let expansion = schur_expansion(&sys, m)?;
    let box_parts = partitions_in_box(m, (n - m) as u32);
    let mut lines = Vec::new();
    let zero = Rational::zero();
    for lambda in &box_parts {
        for mu in &box_parts {
            let c = expansion.coefficient(lambda, mu).unwrap_or(&zero);
            lines.push(format!("lambda={lambda} mu={mu} coefficient={c}"));
        }
    }
    let agreement = expansion.to_poly() == kernel_poly(&sys, m)?;
    lines.push(format!("reconstruction={agreement}"));
    Ok(Report { lines, agreement })
}
