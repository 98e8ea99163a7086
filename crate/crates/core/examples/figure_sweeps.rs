//! Write the distance surface and the difference surface at phi = pi/3 as CSV.
//!
//!     cargo run -p pauli-approx --example figure_sweeps -- [output-dir]

use std::path::PathBuf;

use pauli_approx::frontend::{run_sweep, SweepMode, SweepSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    for (mode, name) in [
        (SweepMode::Comment, "distance.csv"),
        (SweepMode::Sacchi, "reference.csv"),
        (SweepMode::Diff, "difference.csv"),
    ] {
        let spec = SweepSpec { mode, ..SweepSpec::default() };
        let path = dir.join(name);
        let rows = run_sweep(&spec, &path)?;
        println!("{:<15} {rows} rows -> {}", name, path.display());
    }
    Ok(())
}
