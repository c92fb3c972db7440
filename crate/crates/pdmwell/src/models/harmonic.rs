//! Semi-infinite well with the harmonic-like profile
//! V_eff(x) = ¼ a²ω²x²/(x+a)², derived from the Morse source.

use crate::error::{Error, Result};
use crate::models::{count_levels_below, MorseSource};
use crate::pct::{MassProfile, PctMap, PdmWell};
use crate::specfun::{laguerre_scaled, log_gamma};

/// Harmonic-like well for mass M(x) = (1+x/a)⁻²: an infinite wall at x = −a,
/// a finite barrier ¼ω²a² on the right, and bound states
///
/// ```text
/// E_n = ω(n + 1/2) − n(n+1)/a²,   n = 0, 1, …, N < (ωa² − 1)/2.
/// ```
///
/// Requires ωa² > 1; otherwise no state is bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicPdmWell {
    omega: f64,
    a: f64,
}

impl HarmonicPdmWell {
    pub fn new(omega: f64, a: f64) -> Result<Self> {
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "omega must be positive, got {omega}"
            )));
        }
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "a must be positive, got {a}"
            )));
        }
        if omega * a * a <= 1.0 {
            return Err(Error::NoBoundState("omega*a^2 <= 1".to_string()));
        }
        Ok(Self { omega, a })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// The Morse source this well maps onto: A = (ωa²−1)/2, B = ωa³/2.
    pub fn morse_source(&self) -> MorseSource {
        let depth = 0.5 * (self.omega * self.a * self.a - 1.0);
        let strength = 0.5 * self.omega * self.a.powi(3);
        MorseSource::new(depth, strength).expect("positive by construction")
    }

    pub fn mass_profile(&self) -> MassProfile {
        MassProfile::new(self.a).expect("a > 0")
    }

    /// Canonical transformation map with c̄ = ω²a²/4 + 1/(4a²).
    pub fn pct_map(&self) -> PctMap {
        let c_bar = 0.25 * self.omega * self.omega * self.a * self.a
            + 0.25 / (self.a * self.a);
        PctMap::canonical(&self.mass_profile(), c_bar)
    }

    fn check_level(&self, n: usize) -> Result<()> {
        if n >= self.bound_count() {
            return Err(Error::LevelOutOfRange {
                n,
                bound_count: self.bound_count(),
            });
        }
        Ok(())
    }

    fn check_inside(&self, x: f64) -> Result<()> {
        if !x.is_finite() || x <= -self.a {
            return Err(Error::Domain(format!(
                "x = {x} is at or below the infinite wall at x = {}",
                -self.a
            )));
        }
        Ok(())
    }

    /// ln N_n of the normalization constant
    /// (ωa³)^{(ωa²−1)/2 − n} √( n!(ωa²−1−2n)/Γ(ωa²−n) ); the raw power
    /// overflows f64 for wide wells, so it is only ever formed in log space.
    pub fn log_norm(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let nf = n as f64;
        let wa2 = self.omega * self.a * self.a;
        let wa3 = self.omega * self.a.powi(3);
        Ok((0.5 * (wa2 - 1.0) - nf) * wa3.ln()
            + 0.5
                * (log_gamma(nf + 1.0)? + (wa2 - 1.0 - 2.0 * nf).ln()
                    - log_gamma(wa2 - nf)?))
    }
}

impl PdmWell for HarmonicPdmWell {
    fn wall(&self) -> f64 {
        -self.a
    }

    fn mass(&self, x: f64) -> f64 {
        if x <= -self.a {
            return f64::INFINITY;
        }
        let r = 1.0 + x / self.a;
        1.0 / (r * r)
    }

    fn potential(&self, x: f64) -> f64 {
        if x <= -self.a {
            return f64::INFINITY;
        }
        let num = self.a * self.omega * x;
        0.25 * num * num / ((x + self.a) * (x + self.a))
    }

    fn continuum_threshold(&self) -> f64 {
        0.25 * self.omega * self.omega * self.a * self.a
    }

    fn bound_count(&self) -> usize {
        count_levels_below(0.5 * (self.omega * self.a * self.a - 1.0))
    }

    fn energy(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let nf = n as f64;
        Ok(self.omega * (nf + 0.5) - nf * (nf + 1.0) / (self.a * self.a))
    }

    /// ψ_n(x) = N_n (x+a)^{−ωa²/2 + n} exp(−ωa³/(2(x+a))) L_n^{(ωa²−2n−1)}(ωa³/(x+a)),
    /// evaluated in log space; underflow near the wall flushes to 0, matching
    /// the analytic limit.
    fn psi(&self, n: usize, x: f64) -> Result<f64> {
        self.check_level(n)?;
        self.check_inside(x)?;
        let nf = n as f64;
        let wa2 = self.omega * self.a * self.a;
        let z = self.omega * self.a.powi(3) / (x + self.a);
        if !z.is_finite() || z > 1e300 {
            return Ok(0.0);
        }
        let (sign, ln_lag) = laguerre_scaled(n, wa2 - 2.0 * nf - 1.0, z);
        if sign == 0.0 {
            return Ok(0.0);
        }
        let exponent =
            self.log_norm(n)? + (nf - 0.5 * wa2) * (x + self.a).ln() - 0.5 * z + ln_lag;
        Ok(sign * exponent.exp())
    }
}
