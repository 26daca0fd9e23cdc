//! Scenario runners and their CSV / JSON artifacts.
//!
//! Floats are written in shortest round-trip form so that repeated runs of
//! the same scenario produce byte-identical files.

use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;

use crate::bloch::{sample_field_grid, FieldGridRow};
use crate::error::{Error, Result};
use crate::scenario::{Scenario, ScenarioSpec};
use crate::superosc::{bandlimit_spectrum, trace_scan, BandlimitReport, SuperoscillationTrace};
use crate::weak::{
    bargmann_invariant, pole_proximity, weak_ratio, weak_value, BargmannTriple, WeakContext,
};

pub const TRACE_HEADER: [&str; 9] = [
    "theta",
    "f_re",
    "f_im",
    "f_abs",
    "f_phase_unwrapped",
    "g_re",
    "g_im",
    "local_freq",
    "phase_valid",
];
pub const SPECTRUM_HEADER: [&str; 5] = ["frequency", "coeff_re", "coeff_im", "energy", "in_band"];
pub const FIELD_HEADER: [&str; 11] = [
    "theta",
    "phi",
    "g",
    "dg_dtheta",
    "dg_dphi",
    "ind_tt",
    "ind_tp",
    "ind_pp",
    "fs_tt",
    "fs_tp",
    "fs_pp",
];

#[derive(Clone, Debug)]
pub struct RunReport {
    pub scenario: ScenarioSpec,
    pub weak_value: Complex64,
    pub weak_ratio: Option<Complex64>,
    pub pole_proximity: f64,
    pub spectral_bound: f64,
    pub copies: u32,
    /// `copies · Re A_w`.
    pub omega: f64,
    /// `copies · Λ`.
    pub bandlimit: f64,
    /// Triangle `(ψ, e^{iθA}ψ, φ)` at the grid midpoint (`θ = 0` without a grid).
    pub bargmann: BargmannTriple,
    pub bargmann_theta: f64,
    pub output_paths: Vec<std::path::PathBuf>,
}

#[derive(Serialize)]
struct ComplexJson {
    re: f64,
    im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
struct BargmannJson {
    delta_re: f64,
    delta_im: f64,
    phase: Option<f64>,
    phase_defined: bool,
}

#[derive(Serialize)]
struct ReportJson {
    weak_value: ComplexJson,
    pole_proximity: f64,
    spectral_bound: f64,
    copies: u32,
    omega: f64,
    bandlimit: f64,
    bargmann: BargmannJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    weak_ratio: Option<ComplexJson>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let json = ReportJson {
            weak_value: self.weak_value.into(),
            pole_proximity: self.pole_proximity,
            spectral_bound: self.spectral_bound,
            copies: self.copies,
            omega: self.omega,
            bandlimit: self.bandlimit,
            bargmann: BargmannJson {
                delta_re: self.bargmann.delta.re,
                delta_im: self.bargmann.delta.im,
                phase: self.bargmann.phase,
                phase_defined: self.bargmann.phase.is_some(),
            },
            weak_ratio: self.weak_ratio.map(Into::into),
        };
        let mut out = serde_json::to_string_pretty(&json).expect("report is serializable");
        out.push('\n');
        out
    }
}

fn context(s: &Scenario) -> Result<WeakContext> {
    WeakContext::new(s.pre.clone(), s.post.clone())
}

/// Weak value, optional weak ratio, pole proximity and the Bargmann triangle.
pub fn run_weakvalue(s: &Scenario) -> Result<RunReport> {
    let ctx = context(s)?;
    let aw = weak_value(&ctx, &s.observable)?.value;
    let ratio = s
        .observable2
        .as_ref()
        .map(|a2| weak_ratio(&ctx, &s.observable, a2))
        .transpose()?;
    let theta = s.theta_grid.map_or(0.0, |g| g.midpoint());
    let evolved = s.observable.evolve(theta, &s.pre)?;
    let bargmann = bargmann_invariant(&s.pre, &evolved, &s.post)?;
    let n = s.copies as f64;
    Ok(RunReport {
        scenario: s.spec.clone(),
        weak_value: aw,
        weak_ratio: ratio,
        pole_proximity: pole_proximity(&ctx),
        spectral_bound: s.observable.spectral_bound(),
        copies: s.copies,
        omega: n * aw.re,
        bandlimit: n * s.observable.spectral_bound(),
        bargmann,
        bargmann_theta: theta,
        output_paths: Vec::new(),
    })
}

pub struct SuperoscRun {
    pub report: RunReport,
    pub trace: SuperoscillationTrace,
    pub spectrum: Option<BandlimitReport>,
}

/// Trace scan over the scenario grid, plus the spectrum check when requested.
pub fn run_superosc(s: &Scenario) -> Result<SuperoscRun> {
    let grid = s.theta_grid.ok_or_else(|| Error::SchemaViolation {
        field: "theta_grid".into(),
        reason: "superosc requires a theta_grid".into(),
    })?;
    let report = run_weakvalue(s)?;
    let ctx = context(s)?;
    let trace = trace_scan(&ctx, &s.observable, s.copies, grid)?;
    let spectrum = s
        .spectrum_check
        .map(|c| bandlimit_spectrum(&ctx, &s.observable, s.copies, c.period, c.samples))
        .transpose()?;
    Ok(SuperoscRun {
        report,
        trace,
        spectrum,
    })
}

/// Field grid for a Pauli-combination observable.
pub fn run_bloch(s: &Scenario, n_theta: usize, n_phi: usize) -> Result<Vec<FieldGridRow>> {
    let axis = s.pauli_axis().ok_or_else(|| Error::SchemaViolation {
        field: "observable".into(),
        reason: "bloch requires a pauli observable".into(),
    })?;
    sample_field_grid(axis, n_theta, n_phi)
}

/// Shortest round-trip decimal.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        ryu::Buffer::new().format_finite(x).to_string()
    } else {
        x.to_string()
    }
}

fn flag(b: bool) -> String {
    if b { "1" } else { "0" }.to_string()
}

fn opt(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

pub fn write_trace_csv<W: Write>(trace: &SuperoscillationTrace, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TRACE_HEADER)?;
    for (k, theta) in trace.grid.points().enumerate() {
        let f = trace.f[k];
        let g = trace.g[k];
        w.write_record([
            format_float(theta),
            format_float(f.re),
            format_float(f.im),
            format_float(f.norm()),
            opt(trace.phase_unwrapped[k]),
            format_float(g.re),
            format_float(g.im),
            opt(trace.local_freq[k]),
            flag(trace.phase_valid(k)),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_spectrum_csv<W: Write>(report: &BandlimitReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SPECTRUM_HEADER)?;
    for (k, (freq, c)) in report
        .frequencies
        .iter()
        .zip(&report.coefficients)
        .enumerate()
    {
        w.write_record([
            format_float(*freq),
            format_float(c.re),
            format_float(c.im),
            format_float(c.norm_sqr()),
            flag(report.in_band(k)),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_field_csv<W: Write>(rows: &[FieldGridRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(FIELD_HEADER)?;
    for r in rows {
        w.write_record(
            [
                r.theta,
                r.phi,
                r.g,
                r.dg_dtheta,
                r.dg_dphi,
                r.induced.m_tt,
                r.induced.m_tp,
                r.induced.m_pp,
                r.fubini_study.m_tt,
                r.fubini_study.m_tp,
                r.fubini_study.m_pp,
            ]
            .map(format_float),
        )?;
    }
    w.flush()?;
    Ok(())
}
