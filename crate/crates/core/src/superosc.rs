//! Weak evolution amplitudes and the superoscillations they carry.
//!
//! The central object is `F(θ) = ⟨φ|e^{iθA}ψ⟩ / ⟨φ|ψ⟩`. Near `θ = 0` it
//! behaves like `e^{iA_wθ}`, so its phase winds at rate `Re A_w`, which can
//! exceed the spectral bound `Λ`. Its Fourier support nevertheless stays in
//! `[-Λ, Λ]`.
//!
//! N-copy amplitudes are computed as `F(θ)^N`. This is exact for product
//! pre- and post-selected states evolving under the sum of N single-copy
//! observables, since `e^{iθ ΣA_k}` factorizes over the copies; no
//! `2^N`-dimensional operator is ever formed.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::linalg::{inner, HermitianObservable};
use crate::weak::{weak_moment, weak_value, WeakContext};

/// `|F|` at or below this has no usable phase.
pub const PHASE_FLOOR: f64 = 1e-9;
/// Default central-difference step for [`local_frequency`].
pub const DEFAULT_STEP: f64 = 1e-5;
/// Slack allowed when classifying a frequency as in-band.
pub const BAND_SLACK: f64 = 1e-9;
/// Tolerance on the integrality of scaled eigenvalue differences.
pub const COMMENSURABILITY_TOLERANCE: f64 = 1e-9;

/// Uniform grid on `[min, max]`, endpoints included.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaGrid {
    min: f64,
    max: f64,
    count: usize,
}

impl ThetaGrid {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(Error::InvalidGrid {
                reason: "bounds must be finite".into(),
            });
        }
        if min >= max {
            return Err(Error::InvalidGrid {
                reason: format!("min {min} must be below max {max}"),
            });
        }
        if count < 2 {
            return Err(Error::InvalidGrid {
                reason: format!("count {count} must be at least 2"),
            });
        }
        Ok(Self { min, max, count })
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn spacing(&self) -> f64 {
        (self.max - self.min) / (self.count - 1) as f64
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.min + self.max)
    }

    pub fn point(&self, k: usize) -> f64 {
        if k + 1 == self.count {
            self.max
        } else {
            self.min + k as f64 * self.spacing()
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(|k| self.point(k))
    }
}

#[derive(Clone, Debug)]
pub struct SuperoscillationTrace {
    pub grid: ThetaGrid,
    pub copies: u32,
    /// `F_N(θ_k)`.
    pub f: Vec<Complex64>,
    /// `e^{i N A_w θ_k}`.
    pub g: Vec<Complex64>,
    /// Continuous phase of `F_N`; `None` where `|F_N| ≤ 1e-9`.
    pub phase_unwrapped: Vec<Option<f64>>,
    /// Central difference of the unwrapped phase; `None` at the endpoints
    /// and wherever a neighbour lacks a phase.
    pub local_freq: Vec<Option<f64>>,
    /// Single-copy weak value `A_w`.
    pub weak_value: Complex64,
    /// `N · Re A_w`.
    pub omega: f64,
    /// `N · Λ`.
    pub bandlimit: f64,
}

impl SuperoscillationTrace {
    pub fn phase_valid(&self, k: usize) -> bool {
        self.phase_unwrapped[k].is_some()
    }

    /// Index of the grid point closest to `theta`.
    pub fn nearest_index(&self, theta: f64) -> usize {
        let k = ((theta - self.grid.min) / self.grid.spacing()).round();
        k.clamp(0.0, (self.grid.count - 1) as f64) as usize
    }
}

#[derive(Clone, Debug)]
pub struct BandlimitReport {
    pub sample_count: usize,
    pub period: f64,
    /// Ascending frequencies of the coefficients.
    pub frequencies: Vec<f64>,
    /// `F_N(θ) = Σ_k c_k e^{i ω_k θ}` on the sampling grid.
    pub coefficients: Vec<Complex64>,
    pub in_band_energy: f64,
    pub out_band_energy: f64,
    /// Mean of `|F_N|²` over the samples.
    pub total_energy: f64,
    pub bandlimit: f64,
}

impl BandlimitReport {
    pub fn in_band(&self, k: usize) -> bool {
        self.frequencies[k].abs() <= self.bandlimit + BAND_SLACK
    }

    /// Share of the energy outside `[-bandlimit, bandlimit]`.
    pub fn out_band_fraction(&self) -> f64 {
        self.out_band_energy / (self.in_band_energy + self.out_band_energy)
    }
}

/// `F(θ) = ⟨φ|e^{iθA}ψ⟩ / ⟨φ|ψ⟩`.
pub fn weak_amplitude(ctx: &WeakContext, a: &HermitianObservable, theta: f64) -> Result<Complex64> {
    let overlap = ctx.checked_overlap()?;
    let evolved = a.evolve(theta, ctx.pre())?;
    Ok(inner(ctx.post(), &evolved)? / overlap)
}

/// `e^{i A_w θ}`; an imaginary part of `A_w` shows up as growth or decay.
pub fn predicted_amplitude(weak_value: Complex64, theta: f64) -> Complex64 {
    (Complex64::i() * weak_value * theta).exp()
}

/// `F(θ)^N` for N identically prepared copies.
pub fn amplified_amplitude(
    ctx: &WeakContext,
    a: &HermitianObservable,
    copies: u32,
    theta: f64,
) -> Result<Complex64> {
    Ok(weak_amplitude(ctx, a, theta)?.powu(copies))
}

/// Wraps an angle difference onto `(-π, π]`.
fn wrap(d: f64) -> f64 {
    let w = d - TAU * ((d + PI) / TAU).floor();
    if w <= -PI {
        w + TAU
    } else {
        w
    }
}

/// Central-difference estimate of `d arg F_N / dθ` at `theta0`.
pub fn local_frequency(
    ctx: &WeakContext,
    a: &HermitianObservable,
    copies: u32,
    theta0: f64,
    step: f64,
) -> Result<f64> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidStep { step });
    }
    let mut args = [0.0; 3];
    for (slot, theta) in args.iter_mut().zip([theta0 - step, theta0, theta0 + step]) {
        let f = amplified_amplitude(ctx, a, copies, theta)?;
        if f.norm() <= PHASE_FLOOR {
            return Err(Error::PhaseUndefined {
                theta,
                modulus: f.norm(),
            });
        }
        *slot = f.arg();
    }
    let left = wrap(args[1] - args[0]);
    let right = wrap(args[2] - args[1]);
    Ok((left + right) / (2.0 * step))
}

/// `|F(θ) - Σ_{n ≤ order} (iθ)^n/n! (A^n)_w|` for `order` 1 or 2.
pub fn taylor_residual(
    ctx: &WeakContext,
    a: &HermitianObservable,
    theta: f64,
    order: u32,
) -> Result<f64> {
    if !(1..=2).contains(&order) {
        return Err(Error::InvalidTaylorOrder { order });
    }
    let f = weak_amplitude(ctx, a, theta)?;
    let mut partial = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for n in 0..=order {
        if n > 0 {
            term *= Complex64::new(0.0, theta) / n as f64;
        }
        partial += term * weak_moment(ctx, a, n)?;
    }
    Ok((f - partial).norm())
}

/// Evaluates `F_N` over a grid, unwraps its phase and differentiates it.
///
/// Unwrapping is a left-to-right accumulation of neighbour differences
/// reduced to `(-π, π]`, anchored at the principal argument of the first
/// valid point of each segment. A point with `|F_N| ≤ 1e-9` has no phase and
/// starts a new segment.
pub fn trace_scan(
    ctx: &WeakContext,
    a: &HermitianObservable,
    copies: u32,
    grid: ThetaGrid,
) -> Result<SuperoscillationTrace> {
    let aw = weak_value(ctx, a)?.value;
    let n = copies as f64;

    let f = grid
        .points()
        .map(|theta| amplified_amplitude(ctx, a, copies, theta))
        .collect::<Result<Vec<_>>>()?;
    let g = grid
        .points()
        .map(|theta| predicted_amplitude(aw * n, theta))
        .collect();

    let mut phase_unwrapped = Vec::with_capacity(f.len());
    let mut prev: Option<(f64, f64)> = None; // (principal arg, unwrapped)
    for z in &f {
        if z.norm() <= PHASE_FLOOR {
            phase_unwrapped.push(None);
            prev = None;
            continue;
        }
        let arg = z.arg();
        let unwrapped = match prev {
            Some((prev_arg, prev_unwrapped)) => prev_unwrapped + wrap(arg - prev_arg),
            None => arg,
        };
        phase_unwrapped.push(Some(unwrapped));
        prev = Some((arg, unwrapped));
    }

    let h = grid.spacing();
    let local_freq = (0..f.len())
        .map(|k| {
            if k == 0 || k + 1 == f.len() {
                return None;
            }
            match (
                phase_unwrapped[k - 1],
                phase_unwrapped[k],
                phase_unwrapped[k + 1],
            ) {
                (Some(lo), Some(_), Some(hi)) => Some((hi - lo) / (2.0 * h)),
                _ => None,
            }
        })
        .collect();

    Ok(SuperoscillationTrace {
        grid,
        copies,
        f,
        g,
        phase_unwrapped,
        local_freq,
        weak_value: aw,
        omega: n * aw.re,
        bandlimit: n * a.spectral_bound(),
    })
}

/// Discrete Fourier analysis of `F_N` over one period.
///
/// The samples are first demodulated by `e^{-i N λ_min θ}` so that every
/// frequency of `F_N`, a sum of N eigenvalues, lands on a DFT bin
/// `N λ_min + 2πk/period`. Spectra whose eigenvalue gaps are not integer
/// multiples of `2π/period` are refused with [`Error::NotPeriodic`].
pub fn bandlimit_spectrum(
    ctx: &WeakContext,
    a: &HermitianObservable,
    copies: u32,
    period: f64,
    samples: usize,
) -> Result<BandlimitReport> {
    if !(period > 0.0 && period.is_finite()) {
        return Err(Error::InvalidSampling {
            reason: format!("period {period} must be positive and finite"),
        });
    }
    let eigenvalues = a.eigenvalues();
    let lambda_min = eigenvalues[0];
    let unit = TAU / period;
    for &l in &eigenvalues[1..] {
        let scaled = (l - lambda_min) / unit;
        if (scaled - scaled.round()).abs() > COMMENSURABILITY_TOLERANCE {
            return Err(Error::NotPeriodic {
                reason: format!(
                    "eigenvalue gap {} is {scaled} units of 2π/period",
                    l - lambda_min
                ),
            });
        }
    }

    let n = copies as f64;
    let bandlimit = n * a.spectral_bound();
    let required = 8.0 * bandlimit * period / TAU;
    if !samples.is_power_of_two() || samples < 2 || (samples as f64) < required {
        return Err(Error::InvalidSampling {
            reason: format!(
                "samples {samples} must be a power of two of at least {}",
                required.ceil().max(2.0)
            ),
        });
    }

    let offset = n * lambda_min;
    let dtheta = period / samples as f64;
    let mut buf = Vec::with_capacity(samples);
    let mut total_energy = 0.0;
    for j in 0..samples {
        let theta = j as f64 * dtheta;
        let f = amplified_amplitude(ctx, a, copies, theta)?;
        total_energy += f.norm_sqr();
        buf.push(f * Complex64::from_polar(1.0, -offset * theta));
    }
    total_energy /= samples as f64;

    FftPlanner::new()
        .plan_fft_forward(samples)
        .process(&mut buf);

    let scale = 1.0 / samples as f64;
    let half = samples / 2;
    // Signed bin order: -half..half.
    let (frequencies, coefficients): (Vec<f64>, Vec<Complex64>) = (half..samples)
        .chain(0..half)
        .map(|k| {
            let signed = if k >= half {
                k as f64 - samples as f64
            } else {
                k as f64
            };
            (offset + signed * unit, buf[k] * scale)
        })
        .unzip();

    let mut in_band_energy = 0.0;
    let mut out_band_energy = 0.0;
    for (freq, c) in frequencies.iter().zip(&coefficients) {
        if freq.abs() <= bandlimit + BAND_SLACK {
            in_band_energy += c.norm_sqr();
        } else {
            out_band_energy += c.norm_sqr();
        }
    }

    Ok(BandlimitReport {
        sample_count: samples,
        period,
        frequencies,
        coefficients,
        in_band_energy,
        out_band_energy,
        total_energy,
        bandlimit,
    })
}
