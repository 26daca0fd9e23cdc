//! Observable-induced geometry on the Bloch sphere.
//!
//! A qubit observable `A = a·σ` defines the scalar field
//! `g_A(θ, φ) = ⟨ψ(θ,φ)|A|ψ(θ,φ)⟩ = a·n(θ, φ)`. Squaring its differential gives
//! the quadratic form `ds_A² = (dg_A)²`, which is compared with the
//! Fubini–Study metric `¼(dθ² + sin²θ dφ²)`. `ds_A²` is an outer product of a
//! single covector and therefore always has rank at most one.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::PureState;

/// Margin keeping exported grids off the chart's coordinate poles.
pub const POLE_MARGIN: f64 = 1e-3;

/// Polar angle `theta ∈ [0, π]` and azimuth `phi ∈ [0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochPoint {
    theta: f64,
    phi: f64,
}

impl BlochPoint {
    /// Canonicalizes arbitrary finite angles onto the chart.
    ///
    /// A polar angle outside `[0, π]` is reflected through the pole, which
    /// shifts the azimuth by `π`.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::InvalidAngle);
        }
        let mut theta = theta.rem_euclid(TAU);
        let mut phi = phi;
        if theta > PI {
            theta = TAU - theta;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// The coefficient vector `a` of `A = a·σ`; not normalized.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliAxis(pub [f64; 3]);

impl PauliAxis {
    pub fn scaled(&self, c: f64) -> Self {
        Self(self.0.map(|x| x * c))
    }
}

/// Symmetric 2×2 tensor in `(θ, φ)` coordinates; `m_tp` is the symmetrized
/// off-diagonal entry, so `ds² = m_tt dθ² + 2 m_tp dθdφ + m_pp dφ²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricTensor {
    pub m_tt: f64,
    pub m_tp: f64,
    pub m_pp: f64,
}

impl MetricTensor {
    pub fn determinant(&self) -> f64 {
        self.m_tt * self.m_pp - self.m_tp * self.m_tp
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldGridRow {
    pub theta: f64,
    pub phi: f64,
    pub g: f64,
    pub dg_dtheta: f64,
    pub dg_dphi: f64,
    pub induced: MetricTensor,
    pub fubini_study: MetricTensor,
}

/// `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
pub fn state_from_angles(p: BlochPoint) -> PureState {
    let (s, c) = (p.theta / 2.0).sin_cos();
    PureState::from_unit(vec![
        Complex64::new(c, 0.0),
        Complex64::from_polar(s, p.phi),
    ])
}

/// Unit vector `n = (sinθ cosφ, sinθ sinφ, cosθ)`.
pub fn bloch_vector(p: BlochPoint) -> [f64; 3] {
    let (st, ct) = p.theta.sin_cos();
    let (sp, cp) = p.phi.sin_cos();
    [st * cp, st * sp, ct]
}

/// `g_A = a·n`.
pub fn scalar_field(a: PauliAxis, p: BlochPoint) -> f64 {
    let n = bloch_vector(p);
    a.0.iter().zip(n).map(|(x, y)| x * y).sum()
}

/// Analytic `(∂g/∂θ, ∂g/∂φ)`.
pub fn field_gradient(a: PauliAxis, p: BlochPoint) -> (f64, f64) {
    let [ax, ay, az] = a.0;
    let (st, ct) = p.theta.sin_cos();
    let (sp, cp) = p.phi.sin_cos();
    let d_theta = ax * ct * cp + ay * ct * sp - az * st;
    let d_phi = -ax * st * sp + ay * st * cp;
    (d_theta, d_phi)
}

/// `ds_A² = (∂θ g)² dθ² + 2 (∂θ g)(∂φ g) dθdφ + (∂φ g)² dφ²`.
pub fn induced_metric(a: PauliAxis, p: BlochPoint) -> MetricTensor {
    let (gt, gp) = field_gradient(a, p);
    MetricTensor {
        m_tt: gt * gt,
        m_tp: gt * gp,
        m_pp: gp * gp,
    }
}

/// `¼(dθ² + sin²θ dφ²)`.
pub fn fubini_study_metric(p: BlochPoint) -> MetricTensor {
    let s = p.theta.sin();
    MetricTensor {
        m_tt: 0.25,
        m_tp: 0.0,
        m_pp: 0.25 * s * s,
    }
}

/// Samples the field on `θ ∈ [ε, π-ε]` (inclusive, `n_theta` points) by
/// `φ ∈ [0, 2π)` (`n_phi` points), θ-major.
pub fn sample_field_grid(a: PauliAxis, n_theta: usize, n_phi: usize) -> Result<Vec<FieldGridRow>> {
    if n_theta < 2 || n_phi < 2 {
        return Err(Error::InvalidResolution { n_theta, n_phi });
    }
    let theta_step = (PI - 2.0 * POLE_MARGIN) / (n_theta - 1) as f64;
    let phi_step = TAU / n_phi as f64;
    let mut rows = Vec::with_capacity(n_theta * n_phi);
    for i in 0..n_theta {
        let theta = if i + 1 == n_theta {
            PI - POLE_MARGIN
        } else {
            POLE_MARGIN + i as f64 * theta_step
        };
        for j in 0..n_phi {
            let p = BlochPoint::new(theta, j as f64 * phi_step)?;
            let (dg_dtheta, dg_dphi) = field_gradient(a, p);
            rows.push(FieldGridRow {
                theta: p.theta,
                phi: p.phi,
                g: scalar_field(a, p),
                dg_dtheta,
                dg_dphi,
                induced: induced_metric(a, p),
                fubini_study: fubini_study_metric(p),
            });
        }
    }
    Ok(rows)
}
