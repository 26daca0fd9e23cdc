//! Small dense complex linear algebra: pure states, Hermitian observables,
//! a cyclic Jacobi eigensolver and unitary evolution `e^{iθA}`.
//!
//! Everything here is dense and sized for qubit-scale problems. N-copy
//! systems are never built as tensor products; see [`crate::superosc`].

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on `| ||ψ|| - 1 |` accepted by [`PureState::new`].
pub const NORM_TOLERANCE: f64 = 1e-10;
/// Largest elementwise `|M - M^H|` accepted as Hermitian.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;
/// Vectors with norm at or below this cannot be normalized.
pub const ZERO_NORM: f64 = 1e-12;
/// Largest dimension handled by the Jacobi eigensolver.
pub const MAX_DIM: usize = 64;

const JACOBI_TOLERANCE: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 100;

/// A normalized state vector `|ψ⟩` of dimension at least 2.
#[derive(Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps amplitudes that are already unit-norm (within [`NORM_TOLERANCE`]).
    ///
    /// Use [`normalize`] for arbitrary nonzero vectors.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        check_state_shape(&amplitudes)?;
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { amplitudes })
    }

    /// Computational basis state `|k⟩`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: k + 1,
            });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[k] = Complex64::new(1.0, 0.0);
        Self::new(amplitudes)
    }

    /// Real-amplitude convenience constructor; normalizes its input.
    pub fn from_reals(re: &[f64]) -> Result<Self> {
        let v: Vec<Complex64> = re.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        normalize(&v)
    }

    pub(crate) fn from_unit(amplitudes: Vec<Complex64>) -> Self {
        debug_assert!((norm(&amplitudes) - 1.0).abs() < 1e-9);
        Self { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// The same ray with a global phase `e^{iα}` applied.
    pub fn with_phase(&self, alpha: f64) -> Self {
        let phase = Complex64::from_polar(1.0, alpha);
        Self {
            amplitudes: self.amplitudes.iter().map(|a| a * phase).collect(),
        }
    }
}

impl fmt::Debug for PureState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("PureState").field(&self.amplitudes).finish()
    }
}

fn check_state_shape(v: &[Complex64]) -> Result<()> {
    if v.len() < 2 {
        return Err(Error::DimensionTooSmall { dim: v.len() });
    }
    if v.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// Returns `v / ||v||` as a [`PureState`].
pub fn normalize(v: &[Complex64]) -> Result<PureState> {
    check_state_shape(v)?;
    let n = norm(v);
    if n <= ZERO_NORM {
        return Err(Error::ZeroVector { norm: n });
    }
    Ok(PureState {
        amplitudes: v.iter().map(|a| a / n).collect(),
    })
}

/// `⟨bra|ket⟩`, conjugate-linear in `bra`.
pub fn inner(bra: &PureState, ket: &PureState) -> Result<Complex64> {
    braket(bra.amplitudes(), ket.amplitudes())
}

/// `Σ conj(bra_k) ket_k` on raw, unnormalized vectors.
pub fn braket(bra: &[Complex64], ket: &[Complex64]) -> Result<Complex64> {
    if bra.len() != ket.len() {
        return Err(Error::DimensionMismatch {
            expected: bra.len(),
            found: ket.len(),
        });
    }
    Ok(bra.iter().zip(ket).map(|(b, k)| b.conj() * k).sum())
}

/// Dense square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m[(k, k)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from rows; every row must have as many entries as there are rows.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { dim, data })
    }

    /// Builds a matrix from separate real and imaginary row arrays.
    pub fn from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::DimensionMismatch {
                expected: re.len(),
                found: im.len(),
            });
        }
        let rows = re
            .iter()
            .zip(im)
            .map(|(r, i)| {
                if r.len() != i.len() {
                    return Err(Error::DimensionMismatch {
                        expected: r.len(),
                        found: i.len(),
                    });
                }
                Ok(r.iter()
                    .zip(i)
                    .map(|(&a, &b)| Complex64::new(a, b))
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Elementwise sum; panics on a dimension mismatch.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..n {
                    out[(r, c)] += a * other[(k, c)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(self
            .data
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
            .collect())
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for r in 0..self.dim {
            for c in r..self.dim {
                dev = dev.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        dev
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.dim + c]
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.data.chunks_exact(self.dim.max(1)).collect();
        f.debug_struct("CMatrix")
            .field("dim", &self.dim)
            .field("rows", &rows)
            .finish()
    }
}

/// Eigenpairs of a Hermitian matrix: ascending real eigenvalues and the
/// matching orthonormal eigenvectors stored as columns.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl Eigen {
    /// `V diag(λ) V†`.
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.vectors.dim();
        let mut out = CMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = (0..n)
                    .map(|k| self.vectors[(r, k)] * self.values[k] * self.vectors[(c, k)].conj())
                    .sum();
            }
        }
        out
    }
}

/// Diagonalizes a Hermitian matrix with cyclic complex Jacobi rotations.
///
/// Each rotation first removes the phase of the pivot `a_pq` and then applies
/// the classical real symmetric Jacobi rotation to the `(p, q)` block.
/// Sweeps stop once the off-diagonal Frobenius norm falls to `1e-14` relative
/// to the full norm, or fail after 100 sweeps.
pub fn hermitian_eigendecomposition(m: &CMatrix) -> Result<Eigen> {
    let n = m.dim();
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge {
            dim: n,
            max: MAX_DIM,
        });
    }
    if m.data
        .iter()
        .any(|a| !a.re.is_finite() || !a.im.is_finite())
    {
        return Err(Error::NonFinite);
    }
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitian { deviation });
    }

    // Work on the exactly Hermitian part.
    let mut a = m.add(&m.adjoint()).scale(0.5);
    for k in 0..n {
        a[(k, k)].im = 0.0;
    }
    let mut v = CMatrix::identity(n);

    let scale = a.data.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let threshold = JACOBI_TOLERANCE * scale;

    let mut converged = false;
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        let off = off_diagonal_norm(&a);
        if off > threshold {
            return Err(Error::NoConvergence {
                sweeps: JACOBI_MAX_SWEEPS,
                off,
            });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = CMatrix::zeros(n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, dst)] = v[(r, src)];
        }
    }
    Ok(Eigen { values, vectors })
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += a[(r, c)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One two-sided rotation `A ← U† A U`, `V ← V U` annihilating `a_pq`.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // After conjugating by diag(1, e^{-iα}) the pivot is the real number r.
    let dephase = (apq / r).conj();

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + theta.hypot(1.0))
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    // U restricted to the (p, q) block.
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = -s * dephase;
    let u_qq = c * dephase;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * u_pp + vkq * u_qp;
        v[(k, q)] = vkp * u_pq + vkq * u_qq;
    }
}

/// A Hermitian operator together with its spectral data.
#[derive(Clone, Debug)]
pub struct HermitianObservable {
    matrix: CMatrix,
    eigen: Eigen,
    spectral_bound: f64,
}

impl HermitianObservable {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if matrix.dim() < 2 {
            return Err(Error::DimensionTooSmall { dim: matrix.dim() });
        }
        let eigen = hermitian_eigendecomposition(&matrix)?;
        let spectral_bound = eigen.values.iter().fold(0.0_f64, |m, l| m.max(l.abs()));
        Ok(Self {
            matrix,
            eigen,
            spectral_bound,
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::new(CMatrix::identity(dim))
    }

    /// `scale · (a_x σ_x + a_y σ_y + a_z σ_z)`.
    pub fn pauli(a: [f64; 3], scale: f64) -> Result<Self> {
        let [x, y, z] = a.map(|c| c * scale);
        let m = CMatrix::from_rows(vec![
            vec![Complex64::new(z, 0.0), Complex64::new(x, -y)],
            vec![Complex64::new(x, y), Complex64::new(-z, 0.0)],
        ])?;
        Self::new(m)
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigen.values
    }

    /// Orthonormal eigenvectors as columns, in eigenvalue order.
    pub fn eigenvectors(&self) -> &CMatrix {
        &self.eigen.vectors
    }

    /// `Λ = max_k |λ_k|`.
    pub fn spectral_bound(&self) -> f64 {
        self.spectral_bound
    }

    /// `A|ψ⟩`, deliberately left unnormalized.
    pub fn apply(&self, state: &PureState) -> Result<Vec<Complex64>> {
        self.apply_vec(state.amplitudes())
    }

    pub fn apply_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        self.matrix.mul_vec(v)
    }

    /// `e^{iθA}|ψ⟩ = V diag(e^{iθλ_k}) V† |ψ⟩`.
    pub fn evolve(&self, theta: f64, state: &PureState) -> Result<PureState> {
        let n = self.dim();
        if state.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: state.dim(),
            });
        }
        let vecs = &self.eigen.vectors;
        let psi = state.amplitudes();
        let coeffs: Vec<Complex64> = (0..n)
            .map(|k| {
                let c: Complex64 = (0..n).map(|r| vecs[(r, k)].conj() * psi[r]).sum();
                c * Complex64::from_polar(1.0, theta * self.eigen.values[k])
            })
            .collect();
        let out = (0..n)
            .map(|r| (0..n).map(|k| vecs[(r, k)] * coeffs[k]).sum())
            .collect();
        Ok(PureState::from_unit(out))
    }
}
