//! Exactly solvable semi-infinite quantum wells for a position-dependent
//! mass, built by point canonical transformation, with closed-form spectra
//! and wavefunctions and an independent finite-difference eigensolver to
//! verify them.
//!
//! The mass family is M(x) = (1 + x/a)⁻² on (−a, +∞): infinite at the wall
//! x = −a, vanishing at large x. Two wells are provided in closed form,
//! both solving (−d/dx (1/M) d/dx + V_eff)ψ = Eψ in units ħ = 2m₀ = 1:
//!
//! * [`HarmonicPdmWell`] — V_eff = ¼ a²ω²x²/(x+a)², mapped from the Morse
//!   potential; E_n = ω(n+½) − n(n+1)/a².
//! * [`SechPdmWell`] — V_eff = V₀(1/[(x+a)²+1]² − 1/[(x+a)²+1]), mapped from
//!   the Rosen–Morse II potential at B = 0; E_n = −(ν−n)(ν−n−1)/a² with
//!   ν = ½√(1+a²V₀).
//!
//! The [`pct`] module exposes the transformation engine itself, so the same
//! wells can be rebuilt from their source models ([`MorseSource`],
//! [`RosenMorse2Source`]) and compared pointwise, and [`numsolve`] solves
//! the discretized equation directly as a third, independent route.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release -p pdmwell --example sech_well
//! cargo run --release -p pdmwell --example harmonic_well
//! cargo run --release -p pdmwell --example pct_pipeline
//! cargo run --release -p pdmwell --example verify_against_oracle
//! cargo run --release -p pdmwell --example figure_data
//! ```
//!
//! A thin CLI binary (`pdmwell`) wraps the same functionality as
//! `spectrum | potential | wavefunctions | verify` subcommands; see
//! [`cli`].
//!
//! ```
//! use pdmwell::{PdmWell, SechPdmWell};
//!
//! let well = SechPdmWell::new(1.0, 48.0)?;
//! assert_eq!(well.energies(), vec![-8.75, -3.75, -0.75]);
//! let ground = well.psi(0, 0.0)?;
//! assert!((ground - 0.9682458365518542).abs() < 1e-12);
//! # Ok::<(), pdmwell::Error>(())
//! ```

pub mod cli;
mod error;
pub mod models;
pub mod numsolve;
pub mod pct;
pub mod specfun;

pub use error::{Error, Result};
pub use models::{HarmonicPdmWell, MorseSource, RosenMorse2Source, SechPdmWell};
pub use numsolve::{verify_model, SolverConfig, VerificationReport};
pub use pct::{MassProfile, PctMap, PctWell, PdmWell, SourcePotential};
