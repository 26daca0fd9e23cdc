// The weak ratio of two observables and Bargmann triangles
// (ψ, e^{iθA}ψ, φ) along the evolution.
//
// Run with `cargo run --example weak_ratio_bargmann`.

use weaklens::weak::{bargmann_invariant, lens_pair, weak_ratio, weak_value};
use weaklens::{Complex64, HermitianObservable, WeakContext};

pub fn run_example() -> weaklens::Result<Complex64> {
    let a = HermitianObservable::pauli([0.0, 0.0, 1.0], 0.5)?;
    let sx = HermitianObservable::pauli([1.0, 0.0, 0.0], 1.0)?;
    let sy = HermitianObservable::pauli([0.0, 1.0, 0.0], 1.0)?;
    let id = HermitianObservable::identity(2)?;
    let (pre, post) = lens_pair(3.0)?;
    let ctx = WeakContext::new(pre.clone(), post.clone())?;

    let w = weak_value(&ctx, &a)?.value;
    println!("A_w              = {:.6}{:+.6}i", w.re, w.im);
    for (name, other) in [("I", &id), ("sigma_x", &sx), ("sigma_y", &sy)] {
        match weak_ratio(&ctx, &a, other) {
            Ok(r) => println!("W(A, {name:<7})   = {:.6}{:+.6}i", r.re, r.im),
            Err(e) => println!("W(A, {name:<7})   : {e}"),
        }
    }

    println!(
        "\n{:>6} {:>12} {:>12} {:>10}",
        "theta", "Re Delta", "Im Delta", "arg"
    );
    for k in 0..=6 {
        let theta = 0.5 * k as f64;
        let evolved = a.evolve(theta, &pre)?;
        let b = bargmann_invariant(&pre, &evolved, &post)?;
        println!(
            "{theta:>6.2} {:>12.6} {:>12.6} {:>10}",
            b.delta.re,
            b.delta.im,
            b.phase.map_or("undefined".into(), |p| format!("{p:.6}"))
        );
    }
    weak_ratio(&ctx, &a, &sx)
}

#[allow(dead_code)]
fn main() -> weaklens::Result<()> {
    run_example().map(|_| ())
}
