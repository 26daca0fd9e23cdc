// The Fourier support of F_N stays inside [-N Λ, N Λ] even though its local
// frequency does not.
//
// Run with `cargo run --example bandlimit`.

use std::f64::consts::TAU;

use weaklens::superosc::{bandlimit_spectrum, local_frequency, DEFAULT_STEP};
use weaklens::weak::lens_pair;
use weaklens::{HermitianObservable, WeakContext};

pub fn run_example() -> weaklens::Result<f64> {
    let copies = 20;
    let a = HermitianObservable::pauli([0.0, 0.0, 1.0], 0.5)?;
    let (pre, post) = lens_pair(3.0)?;
    let ctx = WeakContext::new(pre, post)?;

    let report = bandlimit_spectrum(&ctx, &a, copies, TAU, 256)?;
    let lf = local_frequency(&ctx, &a, copies, 0.0, DEFAULT_STEP)?;

    println!("{:>6} {:>18}", "freq", "coefficient");
    for (freq, c) in report.frequencies.iter().zip(&report.coefficients) {
        if c.norm() > 1e-6 {
            println!("{freq:>6} {:>18.1}", c.re);
        }
    }
    println!(
        "\nbandlimit {}, local frequency at 0 {:.4}, out-of-band energy fraction {:.2e}",
        report.bandlimit,
        lf,
        report.out_band_fraction()
    );
    Ok(report.out_band_fraction())
}

#[allow(dead_code)]
fn main() -> weaklens::Result<()> {
    run_example().map(|_| ())
}
