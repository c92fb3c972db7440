//! Rosen–Morse II potential U(u) = −A(A+1) sech²u + 2B tanh u, with the
//! B = 0 reduction to the pure sech² well handled through Gegenbauer
//! polynomials instead of the general Jacobi form.

use crate::error::{Error, Result};
use crate::models::count_levels_below;
use crate::pct::SourcePotential;
use crate::specfun::{gegenbauer, jacobi, log_gamma};

/// Rosen–Morse II source with depth A > 0 and tilt B, |B| < A².
///
/// Bound states exist for integer 0 ≤ n < A − √|B|, with
/// ε_n = −(A−n)² − B²/(A−n)².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RosenMorse2Source {
    depth: f64,
    tilt: f64,
}

impl RosenMorse2Source {
    pub fn new(depth: f64, tilt: f64) -> Result<Self> {
        if !depth.is_finite() || depth <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "Rosen-Morse II depth must be positive, got {depth}"
            )));
        }
        if !tilt.is_finite() || tilt.abs() >= depth * depth {
            return Err(Error::InvalidParameter(format!(
                "Rosen-Morse II requires |B| < A^2, got A={depth}, B={tilt}"
            )));
        }
        Ok(Self { depth, tilt })
    }

    /// Depth parameter A.
    pub fn depth(&self) -> f64 {
        self.depth
    }

    /// Tilt parameter B.
    pub fn tilt(&self) -> f64 {
        self.tilt
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

    /// ln(1 − tanh u) and ln(1 + tanh u), stable for large |u|.
    fn ln_one_mp_tanh(u: f64) -> (f64, f64) {
        let ln2 = std::f64::consts::LN_2;
        if u >= 0.0 {
            let t = (-2.0 * u).exp();
            (ln2 - 2.0 * u - t.ln_1p(), ln2 - t.ln_1p())
        } else {
            let t = (2.0 * u).exp();
            (ln2 - t.ln_1p(), ln2 + 2.0 * u - t.ln_1p())
        }
    }
}

impl SourcePotential for RosenMorse2Source {
    fn potential(&self, u: f64) -> f64 {
        let s = 1.0 / u.cosh();
        -self.depth * (self.depth + 1.0) * s * s + 2.0 * self.tilt * u.tanh()
    }

    fn asymptote(&self) -> f64 {
        2.0 * self.tilt
    }

    fn bound_count(&self) -> usize {
        count_levels_below(self.depth - self.tilt.abs().sqrt())
    }

    fn epsilon(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let d = self.depth - n as f64;
        Ok(-d * d - self.tilt * self.tilt / (d * d))
    }

    fn phi(&self, n: usize, u: f64) -> Result<f64> {
        self.check_level(n)?;
        let nf = n as f64;
        let d = self.depth - nf;
        if self.tilt == 0.0 {
            // sech^{A−n} C_n^{(A−n+1/2)}(tanh u)
            let poly = gegenbauer(n, d + 0.5, u.tanh())?;
            if poly == 0.0 {
                return Ok(0.0);
            }
            let ln_sech = -u.abs() + std::f64::consts::LN_2 - (-2.0 * u.abs()).exp().ln_1p();
            let exponent = self.log_norm(n)? + d * ln_sech + poly.abs().ln();
            return Ok(poly.signum() * exponent.exp());
        }
        let b_over_d = self.tilt / d;
        let (ln_minus, ln_plus) = Self::ln_one_mp_tanh(u);
        let poly = jacobi(n, d + b_over_d, d - b_over_d, u.tanh())?;
        if poly == 0.0 {
            return Ok(0.0);
        }
        let exponent = self.log_norm(n)?
            + 0.5 * (d + b_over_d) * ln_minus
            + 0.5 * (d - b_over_d) * ln_plus
            + poly.abs().ln();
        Ok(poly.signum() * exponent.exp())
    }

    fn log_norm(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let nf = n as f64;
        let d = self.depth - nf;
        let ln2 = std::f64::consts::LN_2;
        if self.tilt == 0.0 {
            // Γ(2A−2n+1) / (2^{A−n} Γ(A−n+1)) · sqrt( (A−n) n! / Γ(2A−n+1) )
            return Ok(log_gamma(2.0 * d + 1.0)? - d * ln2 - log_gamma(d + 1.0)?
                + 0.5 * (d.ln() + log_gamma(nf + 1.0)? - log_gamma(2.0 * self.depth - nf + 1.0)?));
        }
        let b_over_d = self.tilt / d;
        // 2^{n−A} sqrt( n! Γ(2A−n+1) (d² − B²/d²) / (d Γ(A+1+B/d) Γ(A+1−B/d)) )
        Ok((nf - self.depth) * ln2
            + 0.5
                * (log_gamma(nf + 1.0)?
                    + log_gamma(2.0 * self.depth - nf + 1.0)?
                    + (d * d - b_over_d * b_over_d).ln()
                    - d.ln()
                    - log_gamma(self.depth + 1.0 + b_over_d)?
                    - log_gamma(self.depth + 1.0 - b_over_d)?))
    }
}
