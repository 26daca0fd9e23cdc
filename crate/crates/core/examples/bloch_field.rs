// The scalar field g_A = a·n on the Bloch sphere, its rank-one induced
// quadratic form and the Fubini–Study metric, side by side.
//
// Run with `cargo run --example bloch_field`.

use weaklens::bloch::{sample_field_grid, PauliAxis};

pub fn run_example() -> weaklens::Result<usize> {
    let a = PauliAxis([0.5, 0.0, 0.866]);
    let rows = sample_field_grid(a, 7, 4)?;
    println!(
        "{:>7} {:>7} {:>8} {:>9} {:>9} {:>9} {:>9} {:>9}",
        "theta", "phi", "g", "ind_tt", "ind_tp", "ind_pp", "fs_pp", "det"
    );
    for r in &rows {
        println!(
            "{:>7.3} {:>7.3} {:>8.4} {:>9.4} {:>9.4} {:>9.4} {:>9.4} {:>9.1e}",
            r.theta,
            r.phi,
            r.g,
            r.induced.m_tt,
            r.induced.m_tp,
            r.induced.m_pp,
            r.fubini_study.m_pp,
            r.induced.determinant()
        );
    }
    Ok(rows.len())
}

#[allow(dead_code)]
fn main() -> weaklens::Result<()> {
    run_example().map(|_| ())
}
