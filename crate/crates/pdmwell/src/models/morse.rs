//! Morse potential in the exponential form used by supersymmetric quantum
//! mechanics, U(u) = B² e^{−2u} − B(2A+1) e^{−u}.

use crate::error::{Error, Result};
use crate::models::count_levels_below;
use crate::pct::SourcePotential;
use crate::specfun::{laguerre_scaled, log_gamma};

/// Morse source with depth parameter A > 0 and strength B > 0.
///
/// Bound states: ε_n = −(A−n)² for integer 0 ≤ n < A, with eigenfunctions
/// 𝒩_n exp[−(A−n)u − B e^{−u}] L_n^{(2A−2n)}(2B e^{−u}).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseSource {
    depth: f64,
    strength: f64,
}

impl MorseSource {
    /// Depth A ≥ 0 and strength B > 0. A = 0 is the threshold case with no
    /// bound states but a perfectly good potential (it arises when mapping a
    /// well at the ωa² = 1 margin).
    pub fn new(depth: f64, strength: f64) -> Result<Self> {
        if !depth.is_finite() || depth < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "Morse depth must be non-negative, got {depth}"
            )));
        }
        if !strength.is_finite() || strength <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "Morse strength must be positive, got {strength}"
            )));
        }
        Ok(Self { depth, strength })
    }

    /// Depth parameter A.
    pub fn depth(&self) -> f64 {
        self.depth
    }

    /// Strength parameter B.
    pub fn strength(&self) -> f64 {
        self.strength
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
}

impl SourcePotential for MorseSource {
    fn potential(&self, u: f64) -> f64 {
        let y = (-u).exp();
        self.strength * self.strength * y * y - self.strength * (2.0 * self.depth + 1.0) * y
    }

    fn asymptote(&self) -> f64 {
        0.0
    }

    fn bound_count(&self) -> usize {
        count_levels_below(self.depth)
    }

    fn epsilon(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let d = self.depth - n as f64;
        Ok(-d * d)
    }

    fn phi(&self, n: usize, u: f64) -> Result<f64> {
        self.check_level(n)?;
        let z = 2.0 * self.strength * (-u).exp();
        if !z.is_finite() || z > 1e300 {
            // deep into the e^{−B e^{−u}} tail
            return Ok(0.0);
        }
        let nf = n as f64;
        let (sign, ln_lag) = laguerre_scaled(n, 2.0 * (self.depth - nf), z);
        if sign == 0.0 {
            return Ok(0.0);
        }
        let exponent = self.log_norm(n)? - (self.depth - nf) * u - 0.5 * z + ln_lag;
        Ok(sign * exponent.exp())
    }

    fn log_norm(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let nf = n as f64;
        let two_d = 2.0 * (self.depth - nf);
        // 𝒩_n = (2B)^{A−n} sqrt( n! (2A−2n) / Γ(2A+1−n) ), in log space
        Ok((self.depth - nf) * (2.0 * self.strength).ln()
            + 0.5
                * (log_gamma(nf + 1.0)? + two_d.ln()
                    - log_gamma(2.0 * self.depth + 1.0 - nf)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn potential_values() {
        let src = MorseSource::new(1.0, 1.0).unwrap();
        assert_eq!(src.potential(0.0), 1.0 - 3.0);
        let far = MorseSource::new(3.5, 13.5).unwrap();
        assert!(far.potential(500.0).abs() < 1e-200);
    }

    #[test]
    fn potential_minimum_matches_grid_search() {
        // dU/du = 0 gives e^{−u} = (2A+1)/(2B) and U_min = −(2A+1)²/4
        let src = MorseSource::new(1.0, 1.0).unwrap();
        let mut best = f64::INFINITY;
        let mut at = 0.0;
        let mut u = -2.0;
        while u <= 4.0 {
            let v = src.potential(u);
            if v < best {
                best = v;
                at = u;
            }
            u += 1e-4;
        }
        assert!((best - (-2.25)).abs() < 1e-7, "min {best} at u={at}");
        assert!(((-at).exp() - 1.5).abs() < 1e-3);
    }

    #[test]
    fn spectrum_and_counting() {
        let src = MorseSource::new(4.0, 10.0).unwrap();
        assert_eq!(src.epsilon(0).unwrap(), -16.0);

        let frac = MorseSource::new(3.5, 13.5).unwrap();
        assert_eq!(frac.bound_count(), 4);
        let expected = [-12.25, -6.25, -2.25, -0.25];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(frac.epsilon(n).unwrap(), *e);
        }
        assert!(matches!(
            frac.epsilon(4),
            Err(Error::LevelOutOfRange { n: 4, bound_count: 4 })
        ));

        let single = MorseSource::new(0.5, 1.0).unwrap();
        assert_eq!(single.bound_count(), 1);
        assert_eq!(single.epsilon(0).unwrap(), -0.25);
    }

    #[test]
    fn epsilon_strictly_increasing() {
        let src = MorseSource::new(6.3, 9.0).unwrap();
        let eps: Vec<f64> = (0..src.bound_count())
            .map(|n| src.epsilon(n).unwrap())
            .collect();
        for w in eps.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn phi_vanishes_at_infinity() {
        let src = MorseSource::new(1.0, 1.0).unwrap();
        assert_eq!(src.phi(0, 800.0).unwrap(), 0.0);
        assert_eq!(src.phi(0, -800.0).unwrap(), 0.0);
        assert!(src.phi(0, 40.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn phi_ground_state_normalized() {
        // Simpson quadrature of φ₀² over u ∈ [−40, 40]
        let src = MorseSource::new(1.0, 1.0).unwrap();
        let n_pts = 16001;
        let (lo, hi) = (-40.0, 40.0);
        let h = (hi - lo) / (n_pts - 1) as f64;
        let mut sum = 0.0;
        for i in 0..n_pts {
            let u = lo + i as f64 * h;
            let f = src.phi(0, u).unwrap().powi(2);
            let w = if i == 0 || i == n_pts - 1 {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            sum += w * f;
        }
        let integral = sum * h / 3.0;
        assert!(
            (integral - 1.0).abs() < 1e-8,
            "∫φ₀² du = {integral}"
        );
    }

    #[test]
    fn phi_node_count() {
        // first excited state has exactly one sign change
        let src = MorseSource::new(2.5, 3.0).unwrap();
        let mut changes = 0;
        let mut last = 0.0_f64;
        for i in 0..4000 {
            let u = -10.0 + 20.0 * i as f64 / 3999.0;
            let v = src.phi(1, u).unwrap();
            if v.abs() > 1e-12 {
                if last != 0.0 && v.signum() != last.signum() {
                    changes += 1;
                }
                last = v;
            }
        }
        assert_eq!(changes, 1);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(MorseSource::new(-0.5, 1.0).is_err());
        assert!(MorseSource::new(1.0, -2.0).is_err());
        assert!(MorseSource::new(1.0, 0.0).is_err());
        // threshold depth: valid potential, empty spectrum
        let marginal = MorseSource::new(0.0, 1.0).unwrap();
        assert_eq!(marginal.bound_count(), 0);
        assert!(marginal.epsilon(0).is_err());
    }
}
