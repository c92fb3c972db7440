//! The sech-type semi-infinite well: spectrum, explicit wavefunction values,
//! and the closed forms of its three bound states for a = 1, V0 = 48.
//!
//! ```bash
//! cargo run --release -p pdmwell --example sech_well
//! ```

use pdmwell::{PdmWell, SechPdmWell};

fn main() -> pdmwell::Result<()> {
    let well = SechPdmWell::new(1.0, 48.0)?;

    println!("sech well: a = {}, V0 = {}, nu = {}", well.a(), well.v0(), well.nu());
    println!(
        "domain ({}, +inf), potential minimum {} at x = {}",
        well.wall(),
        -well.v0() / 4.0,
        well.x_min()
    );
    println!("bound states: {}\n", well.bound_count());

    println!("{:>3} {:>22} {:>22}", "n", "E_n", "E_n * a^2");
    for (n, e) in well.energies().iter().enumerate() {
        println!("{n:>3} {e:>22.15} {:>22.15}", e * well.a() * well.a());
    }

    println!("\nwavefunction values at the potential minimum x = 0:");
    for n in 0..well.bound_count() {
        println!("  psi_{n}(0) = {:+.15}", well.psi(n, 0.0)?);
    }

    // the analytic peak coefficients: 2*sqrt(15), 2*sqrt(15), 2*sqrt(3)
    let s = 2.0_f64;
    let d = (s * s + 1.0).powi(3);
    println!("\nleading coefficients recovered at x = 1:");
    println!("  psi_0: {:+.12}", well.psi(0, 1.0)? * d / s.powf(2.5));
    println!(
        "  psi_1: {:+.12}",
        well.psi(1, 1.0)? * d / (s.powf(1.5) * (s * s - 1.0))
    );
    println!(
        "  psi_2: {:+.12}",
        well.psi(2, 1.0)? * d / (s.sqrt() * (s.powi(4) - 3.0 * s * s + 1.0))
    );
    Ok(())
}
