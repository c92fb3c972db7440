//! Semi-infinite sech-type well
//! V_eff(x) = V₀ (1/[(x+a)²+1]² − 1/[(x+a)²+1]), derived from the
//! Rosen–Morse II source at B = 0.

use crate::error::{Error, Result};
use crate::models::{count_levels_below, RosenMorse2Source};
use crate::pct::{MassProfile, PctMap, PdmWell};
use crate::specfun::{gegenbauer, log_gamma};

/// Sech-type well for mass M(x) = (1+x/a)⁻²: V_eff vanishes both at the wall
/// and at infinity, is negative in between with minimum −V₀/4 at x = −a + 1,
/// and binds the states
///
/// ```text
/// E_n = −(ν−n)(ν−n−1)/a²,   ν = ½√(1 + a²V₀),   n = 0, 1, …, N < ν − 1.
/// ```
///
/// Requires ν > 1 (i.e. a²V₀ > 3); otherwise no state is bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SechPdmWell {
    a: f64,
    v0: f64,
    nu: f64,
}

impl SechPdmWell {
    pub fn new(a: f64, v0: f64) -> Result<Self> {
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "a must be positive, got {a}"
            )));
        }
        if !v0.is_finite() || v0 <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "v0 must be positive, got {v0}"
            )));
        }
        let nu = 0.5 * (1.0 + a * a * v0).sqrt();
        if nu <= 1.0 {
            return Err(Error::NoBoundState(format!(
                "a^2*v0 <= 3 (nu = {nu} <= 1)"
            )));
        }
        Ok(Self { a, v0, nu })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    /// ν = ½√(1 + a²V₀).
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Location of the potential minimum, x = −a + 1, where V_eff = −V₀/4.
    pub fn x_min(&self) -> f64 {
        -self.a + 1.0
    }

    /// The Rosen–Morse II source this well maps onto: A = ν − ½, B = 0.
    pub fn rm2_source(&self) -> RosenMorse2Source {
        RosenMorse2Source::new(self.nu - 0.5, 0.0).expect("nu > 1")
    }

    pub fn mass_profile(&self) -> MassProfile {
        MassProfile::new(self.a).expect("a > 0")
    }

    /// Canonical transformation map with c̄ = 1/(4a²).
    pub fn pct_map(&self) -> PctMap {
        PctMap::canonical(&self.mass_profile(), 0.25 / (self.a * self.a))
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

    /// ln N_n with N_n = Γ(2ν−2n)/Γ(ν−n−½) · √( n!/((ν−n−½) Γ(2ν−n)) ).
    pub fn log_norm(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let nf = n as f64;
        let lam = self.nu - nf;
        Ok(log_gamma(2.0 * lam)? - log_gamma(lam - 0.5)?
            + 0.5 * (log_gamma(nf + 1.0)? - (lam - 0.5).ln() - log_gamma(2.0 * self.nu - nf)?))
    }
}

impl PdmWell for SechPdmWell {
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

    /// V_eff for x > −a; +∞ at and below the wall so that tables and the
    /// discretizer see the wall uniformly.
    fn potential(&self, x: f64) -> f64 {
        if x <= -self.a {
            return f64::INFINITY;
        }
        let d = (x + self.a) * (x + self.a) + 1.0;
        self.v0 * (1.0 / (d * d) - 1.0 / d)
    }

    fn continuum_threshold(&self) -> f64 {
        0.0
    }

    fn bound_count(&self) -> usize {
        count_levels_below(self.nu - 1.0)
    }

    fn energy(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let lam = self.nu - n as f64;
        Ok(-lam * (lam - 1.0) / (self.a * self.a))
    }

    /// ψ_n(x) = N_n (x+a)^{ν−n−1} / [(x+a)²+1]^{ν−n−½} · C_n^{(ν−n)}(t) with
    /// t = ((x+a)²−1)/((x+a)²+1), i.e. tanh u under e^u = x+a, evaluated
    /// without the u round-trip to avoid exp/log cancellation near the wall.
    fn psi(&self, n: usize, x: f64) -> Result<f64> {
        self.check_level(n)?;
        if !x.is_finite() || x <= -self.a {
            return Err(Error::Domain(format!(
                "x = {x} is at or below the infinite wall at x = {}",
                -self.a
            )));
        }
        let s = x + self.a;
        let s2 = s * s;
        let t = if s2.is_finite() {
            (s2 - 1.0) / (s2 + 1.0)
        } else {
            1.0
        };
        let lam = self.nu - n as f64;
        let poly = gegenbauer(n, lam, t)?;
        if poly == 0.0 {
            return Ok(0.0);
        }
        let ln_d = if s2.is_finite() {
            (s2 + 1.0).ln()
        } else {
            2.0 * s.ln()
        };
        let exponent =
            self.log_norm(n)? + (lam - 1.0) * s.ln() - (lam - 0.5) * ln_d + poly.abs().ln();
        Ok(poly.signum() * exponent.exp())
    }
}
