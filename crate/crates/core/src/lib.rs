//! Weak values as ratios of geometric deformation, and the superoscillations
//! they produce.
//!
//! - [`linalg`]: states, Hermitian observables, Jacobi eigensolver, `e^{iθA}`.
//! - [`weak`]: weak values, weak moments, weak ratios, Bargmann invariants.
//! - [`superosc`]: weak evolution amplitude, local frequency, Taylor residuals,
//!   Fourier bandlimit checks.
//! - [`bloch`]: the observable-induced field and metrics on the Bloch sphere.
//! - [`scenario`], [`run`], [`cli`]: JSON scenarios and CSV/JSON artifacts.

pub mod bloch;
pub mod cli;
mod error;
pub mod linalg;
pub mod run;
pub mod scenario;
pub mod superosc;
pub mod weak;

pub use error::{Error, Result};
pub use linalg::{CMatrix, HermitianObservable, PureState};
pub use num_complex::Complex64;
pub use weak::WeakContext;
