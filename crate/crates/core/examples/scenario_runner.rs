// Load a JSON scenario and print its report, as the `weakvalue` command does.
//
// Run with `cargo run --example scenario_runner [scenario.json]`; defaults to
// the bundled lens scenario.

use std::path::PathBuf;

use weaklens::run::{run_weakvalue, RunReport};
use weaklens::scenario::parse_scenario;

pub fn run_example() -> weaklens::Result<RunReport> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios/lens_single.json")
        });
    let scenario = parse_scenario(&path)?;
    let report = run_weakvalue(&scenario)?;
    print!("{}", report.to_json());
    Ok(report)
}

#[allow(dead_code)]
fn main() -> weaklens::Result<()> {
    run_example().map(|_| ())
}
