// The weak value of σ_z/2 for |+x⟩ post-selected on the tilted lens state,
// and how it grows as the post-selection approaches |−x⟩.
//
// Run with `cargo run --example weak_value`.

use weaklens::weak::{lens_pair, pole_proximity, weak_value};
use weaklens::{Complex64, HermitianObservable, WeakContext};

pub fn run_example() -> weaklens::Result<Complex64> {
    let a = HermitianObservable::pauli([0.0, 0.0, 1.0], 0.5)?;
    let (pre, post) = lens_pair(3.0)?;
    let ctx = WeakContext::new(pre, post)?;
    let w = weak_value(&ctx, &a)?;
    println!(
        "A_w = {:.4}{:+.4}i, |A_w| = {:.2}, |<phi|psi>| = {:.6}, spectral bound {}",
        w.value.re,
        w.value.im,
        w.value.norm(),
        w.overlap_magnitude,
        a.spectral_bound()
    );

    println!(
        "\n{:>8} {:>12} {:>14} {:>16}",
        "a_param", "Re A_w", "|<phi|psi>|", "<phi|A|psi>"
    );
    for lens in [0.5, 1.0, 2.0, 3.0, 10.0, 100.0, 1e4] {
        let (pre, post) = lens_pair(lens)?;
        let ctx = WeakContext::new(pre, post)?;
        let wl = weak_value(&ctx, &a)?;
        let proximity = pole_proximity(&ctx);
        println!(
            "{lens:>8} {:>12.4} {:>14.3e} {:>16.6}",
            wl.value.re,
            proximity,
            wl.value.re * proximity
        );
    }
    Ok(w.value)
}

#[allow(dead_code)]
fn main() -> weaklens::Result<()> {
    run_example().map(|_| ())
}
