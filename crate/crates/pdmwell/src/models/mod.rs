//! Concrete solvable models: the Morse and Rosen–Morse II source potentials
//! and the two semi-infinite position-dependent-mass wells derived from them.
//!
//! Units are ħ = 2m₀ = 1 throughout the crate.

mod harmonic;
mod morse;
mod rosen_morse;
mod sech;

pub use harmonic::HarmonicPdmWell;
pub use morse::MorseSource;
pub use rosen_morse::RosenMorse2Source;
pub use sech::SechPdmWell;

/// Number of integers n ≥ 0 with n < limit. Strict inequality: a limit that
/// lands exactly on an integer admits no state at the threshold (there the
/// normalization constants degenerate).
pub(crate) fn count_levels_below(limit: f64) -> usize {
    if limit.is_nan() || limit <= 0.0 {
        return 0;
    }
    limit.ceil() as usize
}
