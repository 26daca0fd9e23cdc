// Weak moments (A^n)_w as Taylor coefficients of F(θ), and the residual of
// the truncated series shrinking as θ^{order+1}.
//
// Run with `cargo run --example taylor_expansion`.

use weaklens::superosc::taylor_residual;
use weaklens::weak::{lens_pair, weak_moment};
use weaklens::{HermitianObservable, WeakContext};

pub fn run_example() -> weaklens::Result<[f64; 2]> {
    let a = HermitianObservable::pauli([0.0, 0.0, 1.0], 0.5)?;
    let (pre, post) = lens_pair(3.0)?;
    let ctx = WeakContext::new(pre, post)?;

    for n in 0..=4 {
        let m = weak_moment(&ctx, &a, n)?;
        println!("(A^{n})_w = {:.6}{:+.6}i", m.re, m.im);
    }

    println!("\n{:>8} {:>14} {:>14}", "theta", "order 1", "order 2");
    let mut ratios = [0.0; 2];
    for theta in [1e-3, 2e-3, 1e-2, 2e-2] {
        let r1 = taylor_residual(&ctx, &a, theta, 1)?;
        let r2 = taylor_residual(&ctx, &a, theta, 2)?;
        println!("{theta:>8} {r1:>14.6e} {r2:>14.6e}");
    }
    for (slot, order) in ratios.iter_mut().zip([1, 2]) {
        *slot = taylor_residual(&ctx, &a, 2e-3, order)? / taylor_residual(&ctx, &a, 1e-3, order)?;
    }
    println!(
        "\nresidual(2h)/residual(h): order 1 {:.4}, order 2 {:.4}",
        ratios[0], ratios[1]
    );
    Ok(ratios)
}

#[allow(dead_code)]
fn main() -> weaklens::Result<()> {
    run_example().map(|_| ())
}
