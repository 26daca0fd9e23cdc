#![allow(dead_code)]

use rand::Rng;
use weaklens::superosc::ThetaGrid;
use weaklens::weak::lens_pair;
use weaklens::{CMatrix, Complex64, HermitianObservable, PureState, WeakContext};

pub fn lens() -> (WeakContext, HermitianObservable) {
    let (pre, post) = lens_pair(3.0).unwrap();
    (
        WeakContext::new(pre, post).unwrap(),
        HermitianObservable::pauli([0.0, 0.0, 1.0], 0.5).unwrap(),
    )
}

pub fn lens_grid() -> ThetaGrid {
    ThetaGrid::new(-0.2, 0.2, 400).unwrap()
}

/// Single-copy weak evolution amplitude of the lens scenario, by hand:
/// φ = (2, -1)/√5, ψ = (1, 1)/√2, e^{iθσ_z/2} = diag(e^{iθ/2}, e^{-iθ/2}),
/// ⟨φ|ψ⟩ = 1/√10, so F(θ) = 2e^{iθ/2} - e^{-iθ/2}.
pub fn lens_closed_form(theta: f64) -> Complex64 {
    2.0 * Complex64::from_polar(1.0, theta / 2.0) - Complex64::from_polar(1.0, -theta / 2.0)
}

pub fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_state<R: Rng>(rng: &mut R, dim: usize) -> PureState {
    let v: Vec<Complex64> = (0..dim).map(|_| random_complex(rng)).collect();
    weaklens::linalg::normalize(&v).unwrap()
}

pub fn random_hermitian_matrix<R: Rng>(rng: &mut R, dim: usize) -> CMatrix {
    let mut m = CMatrix::zeros(dim);
    for r in 0..dim {
        m[(r, r)] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for c in (r + 1)..dim {
            let z = random_complex(rng);
            m[(r, c)] = z;
            m[(c, r)] = z.conj();
        }
    }
    m
}

pub fn random_observable<R: Rng>(rng: &mut R, dim: usize) -> HermitianObservable {
    HermitianObservable::new(random_hermitian_matrix(rng, dim)).unwrap()
}

/// Direct O(n²) DFT, `c_k = (1/n) Σ_j x_j e^{-2πi jk/n}`.
pub fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    (0..n)
        .map(|k| {
            x.iter()
                .enumerate()
                .map(|(j, v)| {
                    v * Complex64::from_polar(
                        1.0,
                        -std::f64::consts::TAU * (j * k) as f64 / n as f64,
                    )
                })
                .sum::<Complex64>()
                / n as f64
        })
        .collect()
}

/// Fourier coefficients of `(2e^{iθ/2} - e^{-iθ/2})^n` from the binomial
/// theorem: the term `k` is `C(n,k) 2^{n-k} (-1)^k e^{i(n/2 - k)θ}`.
pub fn binomial_spectrum(n: u32) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut binom = 1.0_f64;
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n - k + 1) as f64 / k as f64;
        }
        let coeff = binom * 2f64.powi((n - k) as i32) * if k % 2 == 0 { 1.0 } else { -1.0 };
        out.push((n as f64 / 2.0 - k as f64, coeff));
    }
    out
}
