// Twenty copies of the lens scenario: F_20(θ) against the lens prediction
// e^{i 20 A_w θ}, with the local frequency far above the bandlimit N·Λ.
//
// Run with `cargo run --example superoscillation [trace.csv]`.

use weaklens::run::write_trace_csv;
use weaklens::superosc::{local_frequency, trace_scan, ThetaGrid, DEFAULT_STEP};
use weaklens::weak::lens_pair;
use weaklens::{HermitianObservable, WeakContext};

pub struct Summary {
    pub omega: f64,
    pub bandlimit: f64,
    pub local_frequency: f64,
    pub max_small_theta_gap: f64,
}

pub fn run_example() -> weaklens::Result<Summary> {
    let copies = 20;
    let a = HermitianObservable::pauli([0.0, 0.0, 1.0], 0.5)?;
    let (pre, post) = lens_pair(3.0)?;
    let ctx = WeakContext::new(pre, post)?;
    let grid = ThetaGrid::new(-0.2, 0.2, 400)?;
    let trace = trace_scan(&ctx, &a, copies, grid)?;
    let lf = local_frequency(&ctx, &a, copies, 0.0, DEFAULT_STEP)?;

    println!(
        "omega = N Re A_w = {}, bandlimit = N Lambda = {}",
        trace.omega, trace.bandlimit
    );
    println!("d/dtheta arg F_20 at 0 = {lf:.6}");

    println!(
        "\n{:>9} {:>10} {:>10} {:>10} {:>10}",
        "theta", "Re F", "Re G", "|F|", "freq"
    );
    for k in (0..grid.count()).step_by(40) {
        println!(
            "{:>9.4} {:>10.4} {:>10.4} {:>10.4} {:>10}",
            grid.point(k),
            trace.f[k].re,
            trace.g[k].re,
            trace.f[k].norm(),
            trace.local_freq[k].map_or("-".to_string(), |w| format!("{w:.3}"))
        );
    }

    let max_small_theta_gap = grid
        .points()
        .enumerate()
        .filter(|(_, t)| t.abs() <= 0.02)
        .map(|(k, _)| (trace.f[k] - trace.g[k]).norm())
        .fold(0.0, f64::max);
    println!("\nmax |F - G| for |theta| <= 0.02: {max_small_theta_gap:.3e}");

    if let Some(path) = std::env::args().nth(1) {
        write_trace_csv(&trace, std::fs::File::create(&path)?)?;
        println!("trace written to {path}");
    }

    Ok(Summary {
        omega: trace.omega,
        bandlimit: trace.bandlimit,
        local_frequency: lf,
        max_small_theta_gap,
    })
}

#[allow(dead_code)]
fn main() -> weaklens::Result<()> {
    run_example().map(|_| ())
}
