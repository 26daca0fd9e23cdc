//! Weak values as ratios of sesquilinear forms.
//!
//! For a pre-selected `|ψ⟩` and post-selected `⟨φ|` the weak value of `A` is
//! `⟨φ|A|ψ⟩ / ⟨φ|ψ⟩`. It is a rational function of the pair of rays with a
//! pole on `⟨φ|ψ⟩ = 0`, so every ratio here checks its denominator first.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{braket, inner, HermitianObservable, PureState};

/// Overlaps at or below this magnitude are treated as lying on the pole.
pub const POLE_THRESHOLD: f64 = 1e-12;
/// Overlaps below this magnitude set [`WeakValueResult::near_pole`].
pub const NEAR_POLE_THRESHOLD: f64 = 1e-6;
/// Highest weak moment order accepted by [`weak_moment`].
pub const MAX_MOMENT_ORDER: u32 = 32;
/// Bargmann invariants smaller than this have no meaningful phase.
pub const PHASE_THRESHOLD: f64 = 1e-14;

/// A pre/post-selected pair with its cached overlap `⟨φ|ψ⟩`.
#[derive(Clone, Debug)]
pub struct WeakContext {
    pre: PureState,
    post: PureState,
    overlap: Complex64,
}

impl WeakContext {
    /// Fails with [`Error::Pole`] only when the states are exactly orthogonal;
    /// the numerical pole threshold is enforced by each operation.
    pub fn new(pre: PureState, post: PureState) -> Result<Self> {
        let overlap = inner(&post, &pre)?;
        if overlap.norm() == 0.0 {
            return Err(Error::Pole { overlap: 0.0 });
        }
        Ok(Self { pre, post, overlap })
    }

    pub fn pre(&self) -> &PureState {
        &self.pre
    }

    pub fn post(&self) -> &PureState {
        &self.post
    }

    /// `⟨φ|ψ⟩`.
    pub fn overlap(&self) -> Complex64 {
        self.overlap
    }

    pub(crate) fn checked_overlap(&self) -> Result<Complex64> {
        let mag = self.overlap.norm();
        if mag <= POLE_THRESHOLD {
            return Err(Error::Pole { overlap: mag });
        }
        Ok(self.overlap)
    }

    fn check_dim(&self, a: &HermitianObservable) -> Result<()> {
        if a.dim() != self.pre.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.pre.dim(),
                found: a.dim(),
            });
        }
        Ok(())
    }

    /// `⟨φ|A|ψ⟩`.
    pub fn sandwich(&self, a: &HermitianObservable) -> Result<Complex64> {
        self.check_dim(a)?;
        braket(self.post.amplitudes(), &a.apply(&self.pre)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeakValueResult {
    pub value: Complex64,
    pub overlap_magnitude: f64,
    pub near_pole: bool,
}

pub fn weak_value(ctx: &WeakContext, a: &HermitianObservable) -> Result<WeakValueResult> {
    let overlap = ctx.checked_overlap()?;
    let value = ctx.sandwich(a)? / overlap;
    let overlap_magnitude = overlap.norm();
    Ok(WeakValueResult {
        value,
        overlap_magnitude,
        near_pole: overlap_magnitude < NEAR_POLE_THRESHOLD,
    })
}

/// `(A^n)_w = ⟨φ|A^n|ψ⟩ / ⟨φ|ψ⟩`, using `n` matrix-vector products.
pub fn weak_moment(ctx: &WeakContext, a: &HermitianObservable, n: u32) -> Result<Complex64> {
    if n > MAX_MOMENT_ORDER {
        return Err(Error::MomentOrderTooLarge {
            order: n,
            max: MAX_MOMENT_ORDER,
        });
    }
    let overlap = ctx.checked_overlap()?;
    ctx.check_dim(a)?;
    let mut v = ctx.pre.amplitudes().to_vec();
    for _ in 0..n {
        v = a.apply_vec(&v)?;
    }
    Ok(braket(ctx.post.amplitudes(), &v)? / overlap)
}

/// `W = ⟨φ|A1|ψ⟩ / ⟨φ|A2|ψ⟩`; reduces to the weak value of `A1` when `A2 = I`.
pub fn weak_ratio(
    ctx: &WeakContext,
    a1: &HermitianObservable,
    a2: &HermitianObservable,
) -> Result<Complex64> {
    let denominator = ctx.sandwich(a2)?;
    if denominator.norm() <= POLE_THRESHOLD {
        return Err(Error::RatioPole {
            denominator: denominator.norm(),
        });
    }
    Ok(ctx.sandwich(a1)? / denominator)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BargmannTriple {
    pub delta: Complex64,
    /// Principal argument in `(-π, π]`, or `None` when `|Δ| ≤ 1e-14`.
    pub phase: Option<f64>,
}

/// `Δ = ⟨s1|s2⟩⟨s2|s3⟩⟨s3|s1⟩`.
///
/// With `(s1, s2, s3) = (ψ, ψ_θ, φ)` this is the triangle invariant
/// `⟨ψ|ψ_θ⟩⟨ψ_θ|φ⟩⟨φ|ψ⟩`. Each state enters once as a bra and once as a ket,
/// so `Δ` does not depend on the global phase of any vertex.
pub fn bargmann_invariant(
    s1: &PureState,
    s2: &PureState,
    s3: &PureState,
) -> Result<BargmannTriple> {
    let delta = inner(s1, s2)? * inner(s2, s3)? * inner(s3, s1)?;
    let phase = (delta.norm() > PHASE_THRESHOLD).then(|| principal_arg(delta));
    Ok(BargmannTriple { delta, phase })
}

/// Argument on `(-π, π]`, with `-0` folded into `0`.
pub(crate) fn principal_arg(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    if a <= -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        a + 0.0
    }
}

/// `|⟨φ|ψ⟩|`, the distance-to-pole diagnostic.
pub fn pole_proximity(ctx: &WeakContext) -> f64 {
    ctx.overlap.norm()
}

/// The post-selection family `(|+x⟩ + a|−x⟩)/√(1+a²)` paired with `|+x⟩`.
///
/// Larger `a` tilts the post-selection towards `|−x⟩`, shrinking the overlap
/// to `1/√(1+a²)` while the weak value of `σ_z/2` grows as `a/2`.
pub fn lens_pair(a_param: f64) -> Result<(PureState, PureState)> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let pre = PureState::from_reals(&[1.0, 1.0])?;
    let post = PureState::from_reals(&[h + a_param * h, h - a_param * h])?;
    Ok((pre, post))
}
