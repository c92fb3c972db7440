//! The harmonic-like semi-infinite well: spectrum below the finite barrier
//! and the approach to the constant-mass oscillator as the wall recedes.
//!
//! ```bash
//! cargo run --release -p pdmwell --example harmonic_well
//! ```

use pdmwell::{HarmonicPdmWell, PdmWell};

fn main() -> pdmwell::Result<()> {
    let well = HarmonicPdmWell::new(1.0, 3.0)?;
    println!(
        "harmonic-like well: omega = {}, a = {}, barrier = {}",
        well.omega(),
        well.a(),
        well.continuum_threshold()
    );
    println!("bound states: {}\n", well.bound_count());

    println!("{:>3} {:>20} {:>20}", "n", "E_n", "omega*(n+1/2) - E_n");
    for (n, e) in well.energies().iter().enumerate() {
        let oscillator = well.omega() * (n as f64 + 0.5);
        println!("{n:>3} {e:>20.15} {:>20.15}", oscillator - e);
    }

    println!("\nwall recession: E_0 and E_2 against the oscillator ladder");
    println!("{:>8} {:>14} {:>14}", "a", "E_0 - w/2", "E_2 - 5w/2");
    for &a in &[3.0, 10.0, 30.0, 100.0] {
        let w = HarmonicPdmWell::new(1.0, a)?;
        println!(
            "{a:>8} {:>14.3e} {:>14.3e}",
            w.energy(0)? - 0.5,
            if w.bound_count() > 2 {
                w.energy(2)? - 2.5
            } else {
                f64::NAN
            }
        );
    }

    // the single node of the first excited state sits at x + a = wa^3/(wa^2-2)
    let x_node = 27.0 / 7.0 - 3.0;
    println!(
        "\nfirst excited state near its node x = {x_node:.6}: psi_1 = {:+.3e}",
        well.psi(1, x_node)?
    );
    Ok(())
}
