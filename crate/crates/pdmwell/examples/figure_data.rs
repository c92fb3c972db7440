//! Emit plot-ready CSV for the sech well: the potential profile over
//! (-a, -a+10] and the three bound-state wavefunctions (a = 1, V0 = 48).
//! Point gnuplot or a notebook at the two files this writes.
//!
//! ```bash
//! cargo run --release -p pdmwell --example figure_data
//! ```

use std::fs::File;
use std::io::{BufWriter, Write};

use pdmwell::{PdmWell, SechPdmWell};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let well = SechPdmWell::new(1.0, 48.0)?;
    let samples = 1001;

    let path = "sech_well_potential.csv";
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "x,v_eff,mass")?;
    for i in 0..samples {
        let x = -1.0 + 10.0 * i as f64 / (samples - 1) as f64;
        let v = well.potential(x);
        let m = well.mass(x);
        if v.is_finite() {
            writeln!(out, "{x:.16e},{v:.16e},{m:.16e}")?;
        } else {
            writeln!(out, "{x:.16e},inf,inf")?;
        }
    }
    println!("wrote {path}");

    let path = "sech_well_wavefunctions.csv";
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "x,psi_0,psi_1,psi_2")?;
    for i in 1..samples {
        let x = -1.0 + 10.0 * i as f64 / (samples - 1) as f64;
        writeln!(
            out,
            "{x:.16e},{:.16e},{:.16e},{:.16e}",
            well.psi(0, x)?,
            well.psi(1, x)?,
            well.psi(2, x)?
        )?;
    }
    println!("wrote {path}");
    println!(
        "energies: {:?}  (threshold {})",
        well.energies(),
        well.continuum_threshold()
    );
    Ok(())
}
