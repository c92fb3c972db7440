//! Cross-checking the closed-form spectra against the finite-difference
//! eigensolver, with auto-chosen truncation and grid.
//!
//! ```bash
//! cargo run --release -p pdmwell --example verify_against_oracle
//! ```

use pdmwell::{verify_model, HarmonicPdmWell, PdmWell, SechPdmWell, SolverConfig};

fn report_for(name: &str, well: &dyn PdmWell, k: usize) -> pdmwell::Result<()> {
    let config = SolverConfig::auto(well, k)?;
    println!(
        "{name}: domain ({:.6}, {}), {} points, spacing {:.2e}",
        well.wall() + config.delta,
        config.x_max,
        config.n_points,
        (config.x_max - well.wall() - config.delta) / (config.n_points - 1) as f64,
    );
    let report = verify_model(well, &config, k)?;
    println!(
        "{:>3} {:>18} {:>18} {:>10} {:>12} {:>6}",
        "n", "E_analytic", "E_numeric", "|dE|", "overlap", "nodes"
    );
    for lvl in &report.levels {
        println!(
            "{:>3} {:>18.12} {:>18.12} {:>10.2e} {:>12.9} {:>6} {}",
            lvl.n,
            lvl.energy_analytic,
            lvl.energy_numeric,
            lvl.energy_abs_error,
            lvl.overlap,
            lvl.node_count,
            if lvl.energy_pass && lvl.overlap_pass { "ok" } else { "FAIL" },
        );
    }
    println!("all levels pass: {}\n", report.all_pass);
    Ok(())
}

fn main() -> pdmwell::Result<()> {
    let sech = SechPdmWell::new(1.0, 48.0)?;
    report_for("sech well (a=1, V0=48)", &sech, 3)?;

    let harmonic = HarmonicPdmWell::new(1.0, 3.0)?;
    report_for("harmonic-like well (omega=1, a=3)", &harmonic, 4)?;
    Ok(())
}
