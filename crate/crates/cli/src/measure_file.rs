//! Measure files: `{"points": [...], "weights": [...]}` with rational strings.

use std::path::Path;

use cdkernel::rational::parse_rational;
use cdkernel::{Error, Measure, Rational};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMeasure {
    points: Vec<String>,
    weights: Vec<String>,
}

fn parse_values(key: &str, values: &[String]) -> CliResult<Vec<Rational>> {
    values
        .iter()
        .map(|v| {
            parse_rational(v).map_err(|_| CliError::Parse(format!("{key}: not a rational: {v:?}")))
        })
        .collect()
}

pub fn parse_measure_str(text: &str) -> CliResult<Measure> {
    let raw: RawMeasure = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let points = parse_values("points", &raw.points)?;
    let weights = parse_values("weights", &raw.weights)?;
    Measure::new(points, weights).map_err(|e| match e {
        Error::InvalidMeasure(msg) => CliError::InvalidMeasure(msg.to_string()),
        other => CliError::Math(other),
    })
}

pub fn parse_measure(path: &Path) -> CliResult<Measure> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_measure_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cdkernel::rational::{frac, int};

    #[test]
    fn canonical_fixture() {
        let mu = parse_measure_str(r#"{"points":["-1","0","1"],"weights":["1","1","1"]}"#).unwrap();
        assert_eq!(mu.points(), &[int(-1), int(0), int(1)]);
        assert_eq!(mu.weights(), &[int(1), int(1), int(1)]);
    }

    #[test]
    fn negative_weight_single_point() {
        let mu = parse_measure_str(r#"{"points":["1/2"],"weights":["-2/3"]}"#).unwrap();
        assert_eq!(mu.points(), &[frac(1, 2)]);
        assert_eq!(mu.weights(), &[frac(-2, 3)]);
        assert!(!mu.is_positive());
    }

    #[test]
    fn rejections() {
        let cases = [
            (r#"{"points":["1","1"],"weights":["1","1"]}"#, "invalid"),
            (r#"{"points":["1","2"],"weights":["1","0"]}"#, "invalid"),
            (r#"{"points":[],"weights":[]}"#, "invalid"),
            (r#"{"points":["1"],"weights":["1","2"]}"#, "invalid"),
            (r#"{"points":["1.5"],"weights":["1"]}"#, "parse"),
            (r#"{"points":[1.5],"weights":["1"]}"#, "parse"),
            (r#"{"points":[1],"weights":["1"]}"#, "parse"),
            (r#"{"points":["1"],"weights":["1"],"extra":[]}"#, "parse"),
            (r#"{"points":["1"]}"#, "parse"),
            (r#"{"points":["1/0"],"weights":["1"]}"#, "parse"),
            (r#"{"points":["1"],"weights":["1"]"#, "parse"),
            ("[]", "parse"),
        ];
        for (text, kind) in cases {
            let err = parse_measure_str(text).unwrap_err();
            let ok = match kind {
                "invalid" => matches!(err, CliError::InvalidMeasure(_)),
                _ => matches!(err, CliError::Parse(_)),
            };
            assert!(ok, "{text}: {err:?}");
            assert_eq!(err.exit_code(), 2);
        }
    }
}
