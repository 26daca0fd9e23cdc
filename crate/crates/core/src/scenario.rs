//! JSON scenario files.
//!
//! A scenario names a pre-selected state, a post-selected state and an
//! observable, plus the optional parameters the superoscillation and
//! spectrum runs need:
//!
//! ```json
//! {
//!   "pre_state":  { "kind": "lens" },
//!   "post_state": { "kind": "lens", "a_param": 3.0 },
//!   "observable": { "kind": "pauli", "a": [0, 0, 1], "scale": 0.5 },
//!   "copies": 20,
//!   "theta_grid": { "min": -0.2, "max": 0.2, "count": 400 },
//!   "spectrum_check": { "period": 6.283185307179586, "samples": 256 }
//! }
//! ```
//!
//! States are `lens`, `amplitudes` (`re`, optional `im`) or `bloch`
//! (`theta`, `phi`). A `lens` pre-state is `|+x⟩`; a `lens` post-state is
//! `(|+x⟩ + a|−x⟩)/√(1+a²)`. Operators are `pauli` (`a`, optional `scale`)
//! or `dense` (`re`, optional `im`, as row arrays). Unknown keys are errors.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bloch::{state_from_angles, BlochPoint, PauliAxis};
use crate::error::{Error, Result};
use crate::linalg::{normalize, CMatrix, HermitianObservable, PureState};
use crate::superosc::ThetaGrid;
use crate::weak::lens_pair;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StateSpec {
    Amplitudes {
        re: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        im: Option<Vec<f64>>,
    },
    Bloch {
        theta: f64,
        phi: f64,
    },
    Lens {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        a_param: Option<f64>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum OperatorSpec {
    Pauli {
        a: [f64; 3],
        #[serde(default = "unit_scale")]
        scale: f64,
    },
    Dense {
        re: Vec<Vec<f64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        im: Option<Vec<Vec<f64>>>,
    },
}

fn unit_scale() -> f64 {
    1.0
}

fn one_copy() -> u32 {
    1
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumCheck {
    pub period: f64,
    pub samples: usize,
}

/// The scenario file exactly as written, defaults applied.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub pre_state: StateSpec,
    pub post_state: StateSpec,
    pub observable: OperatorSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observable2: Option<OperatorSpec>,
    #[serde(default = "one_copy")]
    pub copies: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta_grid: Option<GridSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum_check: Option<SpectrumCheck>,
}

/// A validated scenario with every state and operator resolved.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub spec: ScenarioSpec,
    pub pre: PureState,
    pub post: PureState,
    pub observable: HermitianObservable,
    pub observable2: Option<HermitianObservable>,
    pub copies: u32,
    pub theta_grid: Option<ThetaGrid>,
    pub spectrum_check: Option<SpectrumCheck>,
}

impl Scenario {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let spec: ScenarioSpec = serde_json::from_str(text).map_err(classify_json_error)?;
        Self::resolve(spec)
    }

    pub fn resolve(spec: ScenarioSpec) -> Result<Self> {
        let pre = resolve_state(&spec.pre_state, Role::Pre, "pre_state")?;
        let post = resolve_state(&spec.post_state, Role::Post, "post_state")?;
        if pre.dim() != post.dim() {
            return Err(schema(
                "post_state",
                format!(
                    "dimension {} differs from pre_state dimension {}",
                    post.dim(),
                    pre.dim()
                ),
            ));
        }
        let observable = resolve_operator(&spec.observable, pre.dim(), "observable")?;
        let observable2 = spec
            .observable2
            .as_ref()
            .map(|op| resolve_operator(op, pre.dim(), "observable2"))
            .transpose()?;
        if spec.copies == 0 {
            return Err(schema("copies", "must be at least 1"));
        }
        let theta_grid = spec
            .theta_grid
            .map(|g| {
                ThetaGrid::new(g.min, g.max, g.count)
                    .map_err(|e| schema("theta_grid", e.to_string()))
            })
            .transpose()?;
        Ok(Self {
            pre,
            post,
            observable,
            observable2,
            copies: spec.copies,
            theta_grid,
            spectrum_check: spec.spectrum_check,
            spec,
        })
    }

    /// The `a` of `A = a·σ` including the scale, when the observable is a Pauli combination.
    pub fn pauli_axis(&self) -> Option<PauliAxis> {
        match self.spec.observable {
            OperatorSpec::Pauli { a, scale } => Some(PauliAxis(a).scaled(scale)),
            OperatorSpec::Dense { .. } => None,
        }
    }
}

/// Reads and resolves a scenario file.
pub fn parse_scenario(path: impl AsRef<Path>) -> Result<Scenario> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound {
            path: path.to_path_buf(),
        },
        std::io::ErrorKind::InvalidData => Error::MalformedInput {
            line: 0,
            column: 0,
            message: "file is not valid UTF-8".into(),
        },
        _ => Error::Io(e),
    })?;
    Scenario::from_json_str(&text)
}

fn schema(field: &str, reason: impl Into<String>) -> Error {
    Error::SchemaViolation {
        field: field.into(),
        reason: reason.into(),
    }
}

fn classify_json_error(e: serde_json::Error) -> Error {
    use serde_json::error::Category;
    match e.classify() {
        Category::Io | Category::Syntax | Category::Eof => Error::MalformedInput {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        },
        Category::Data => {
            let message = e.to_string();
            // serde names the offending key in backticks, e.g. "missing field `observable`".
            let field = message
                .split('`')
                .nth(1)
                .filter(|_| {
                    message.starts_with("missing field") || message.starts_with("unknown field")
                })
                .unwrap_or("scenario")
                .to_string();
            Error::SchemaViolation {
                field,
                reason: message,
            }
        }
    }
}

#[derive(Clone, Copy)]
enum Role {
    Pre,
    Post,
}

fn resolve_state(spec: &StateSpec, role: Role, field: &str) -> Result<PureState> {
    match spec {
        StateSpec::Amplitudes { re, im } => {
            let im = im.clone().unwrap_or_else(|| vec![0.0; re.len()]);
            if im.len() != re.len() {
                return Err(schema(
                    field,
                    format!("re has {} entries but im has {}", re.len(), im.len()),
                ));
            }
            let v: Vec<Complex64> = re
                .iter()
                .zip(&im)
                .map(|(&r, &i)| Complex64::new(r, i))
                .collect();
            normalize(&v).map_err(|e| schema(field, e.to_string()))
        }
        StateSpec::Bloch { theta, phi } => {
            let p = BlochPoint::new(*theta, *phi).map_err(|e| schema(field, e.to_string()))?;
            Ok(state_from_angles(p))
        }
        StateSpec::Lens { a_param } => {
            let a = match (role, a_param) {
                (_, Some(a)) if !(a.is_finite() && *a >= 0.0) => {
                    return Err(schema(
                        field,
                        format!("a_param {a} must be finite and non-negative"),
                    ));
                }
                (_, Some(a)) => *a,
                (Role::Pre, None) => 0.0,
                (Role::Post, None) => {
                    return Err(schema(field, "lens post-selection requires a_param"))
                }
            };
            let (pre, post) = lens_pair(a).map_err(|e| schema(field, e.to_string()))?;
            Ok(match role {
                Role::Pre => pre,
                Role::Post => post,
            })
        }
    }
}

fn resolve_operator(spec: &OperatorSpec, dim: usize, field: &str) -> Result<HermitianObservable> {
    let obs = match spec {
        OperatorSpec::Pauli { a, scale } => HermitianObservable::pauli(*a, *scale),
        OperatorSpec::Dense { re, im } => {
            let im = im
                .clone()
                .unwrap_or_else(|| re.iter().map(|row| vec![0.0; row.len()]).collect());
            CMatrix::from_parts(re, &im).and_then(HermitianObservable::new)
        }
    }
    .map_err(|e| schema(field, e.to_string()))?;
    if obs.dim() != dim {
        return Err(schema(
            field,
            format!(
                "operator dimension {} does not match state dimension {dim}",
                obs.dim()
            ),
        ));
    }
    Ok(obs)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LENS_SCENARIO: &str = r#"{
        "pre_state": {"kind": "lens"},
        "post_state": {"kind": "lens", "a_param": 3.0},
        "observable": {"kind": "pauli", "a": [0, 0, 1], "scale": 0.5}
    }"#;

    #[test]
    fn lens_single_resolves() {
        let s = Scenario::from_json_str(LENS_SCENARIO).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let r5 = 5f64.sqrt();
        assert!((s.pre.amplitudes()[0].re - h).abs() < 1e-15);
        assert!((s.pre.amplitudes()[1].re - h).abs() < 1e-15);
        assert!((s.post.amplitudes()[0].re - 2.0 / r5).abs() < 1e-15);
        assert!((s.post.amplitudes()[1].re + 1.0 / r5).abs() < 1e-15);
        assert_eq!(s.observable.eigenvalues(), &[-0.5, 0.5]);
        assert_eq!(s.copies, 1);
        assert!(s.theta_grid.is_none());
        assert_eq!(s.pauli_axis(), Some(PauliAxis([0.0, 0.0, 0.5])));
    }

    #[test]
    fn missing_observable_is_named() {
        let text =
            r#"{"pre_state": {"kind": "lens"}, "post_state": {"kind": "lens", "a_param": 1}}"#;
        match Scenario::from_json_str(text) {
            Err(Error::SchemaViolation { field, .. }) => assert_eq!(field, "observable"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = LENS_SCENARIO.replacen('{', "{\"colour\": 1,", 1);
        match Scenario::from_json_str(&text) {
            Err(Error::SchemaViolation { field, .. }) => assert_eq!(field, "colour"),
            other => panic!("unexpected {other:?}"),
        }
        let text = LENS_SCENARIO.replace("\"scale\": 0.5", "\"scale\": 0.5, \"b\": 2");
        assert!(matches!(
            Scenario::from_json_str(&text),
            Err(Error::SchemaViolation { .. })
        ));
    }

    #[test]
    fn non_hermitian_dense_operator() {
        let text = r#"{
            "pre_state": {"kind": "amplitudes", "re": [1, 0]},
            "post_state": {"kind": "amplitudes", "re": [1, 1]},
            "observable": {"kind": "dense", "re": [[1, 2], [0, 1]]}
        }"#;
        match Scenario::from_json_str(text) {
            Err(Error::SchemaViolation { field, reason }) => {
                assert_eq!(field, "observable");
                assert!(reason.contains("not Hermitian"), "{reason}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_norm_state() {
        let text = r#"{
            "pre_state": {"kind": "amplitudes", "re": [0, 0]},
            "post_state": {"kind": "amplitudes", "re": [1, 1]},
            "observable": {"kind": "pauli", "a": [1, 0, 0]}
        }"#;
        match Scenario::from_json_str(text) {
            Err(Error::SchemaViolation { field, .. }) => assert_eq!(field, "pre_state"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_json_reports_position() {
        let text = "{\n  \"pre_state\": {\"kind\": \"lens\"},\n  oops\n}";
        match Scenario::from_json_str(text) {
            Err(Error::MalformedInput { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dimension_and_value_checks() {
        let text = r#"{
            "pre_state": {"kind": "amplitudes", "re": [1, 0, 0]},
            "post_state": {"kind": "amplitudes", "re": [1, 1, 0]},
            "observable": {"kind": "pauli", "a": [1, 0, 0]}
        }"#;
        assert!(matches!(
            Scenario::from_json_str(text),
            Err(Error::SchemaViolation { field, .. }) if field == "observable"
        ));

        let bad_copies = LENS_SCENARIO.replacen('{', "{\"copies\": 0,", 1);
        assert!(matches!(
            Scenario::from_json_str(&bad_copies),
            Err(Error::SchemaViolation { field, .. }) if field == "copies"
        ));

        let no_a = LENS_SCENARIO.replace(", \"a_param\": 3.0", "");
        assert!(matches!(
            Scenario::from_json_str(&no_a),
            Err(Error::SchemaViolation { field, .. }) if field == "post_state"
        ));

        let bad_grid = LENS_SCENARIO.replacen(
            '{',
            "{\"theta_grid\": {\"min\": 1, \"max\": 0, \"count\": 5},",
            1,
        );
        assert!(matches!(
            Scenario::from_json_str(&bad_grid),
            Err(Error::SchemaViolation { field, .. }) if field == "theta_grid"
        ));
    }

    #[test]
    fn bloch_and_complex_amplitudes() {
        let text = r#"{
            "pre_state": {"kind": "bloch", "theta": 1.5707963267948966, "phi": 0},
            "post_state": {"kind": "amplitudes", "re": [1, 0], "im": [0, 1]},
            "observable": {"kind": "dense", "re": [[0, 0], [0, 0]], "im": [[0, -1], [1, 0]]},
            "observable2": {"kind": "pauli", "a": [0, 1, 0]}
        }"#;
        let s = Scenario::from_json_str(text).unwrap();
        assert!(s.pauli_axis().is_none());
        assert!(
            s.observable
                .matrix()
                .max_abs_diff(s.observable2.as_ref().unwrap().matrix())
                < 1e-15
        );
        assert!(
            (s.post.amplitudes()[1] - Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2)).norm()
                < 1e-15
        );
    }

    #[test]
    fn missing_file() {
        assert!(matches!(
            parse_scenario("/nonexistent/scenario.json"),
            Err(Error::FileNotFound { .. })
        ));
    }
}
