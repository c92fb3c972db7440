//! Independent numerical oracle: flux-conservative finite differences for
//! the position-dependent-mass equation on a truncated domain, a symmetric
//! tridiagonal Sturm-bisection eigensolver, and quadrature utilities.
//!
//! The discretization works directly in x with Dirichlet cutoffs at both
//! ends; it never uses the change of variable that produced the closed
//! forms, so agreement is a genuine cross-check.

mod tridiag;
mod verify;

pub use tridiag::{discretize, eigenvector, lowest_eigenvalues, TridiagonalOperator};
pub use verify::{
    count_sign_changes, verify_model, LevelReport, SolverConfig, VerificationReport,
    ENERGY_TOL_FACTOR, OVERLAP_TOL, TRUNCATION_ERROR_RATIO, TRUNCATION_FLAG_RATIO,
};

use crate::error::{Error, Result};

/// Uniform grid on [x_lo, x_hi] with n_points ≥ 3 nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    x_lo: f64,
    x_hi: f64,
    n_points: usize,
}

impl Grid {
    pub fn new(x_lo: f64, x_hi: f64, n_points: usize) -> Result<Self> {
        if !x_lo.is_finite() || !x_hi.is_finite() || x_hi <= x_lo {
            return Err(Error::InvalidParameter(format!(
                "grid requires finite x_lo < x_hi, got [{x_lo}, {x_hi}]"
            )));
        }
        if n_points < 3 {
            return Err(Error::InvalidParameter(format!(
                "grid requires at least 3 points, got {n_points}"
            )));
        }
        Ok(Self {
            x_lo,
            x_hi,
            n_points,
        })
    }

    pub fn x_lo(&self) -> f64 {
        self.x_lo
    }

    pub fn x_hi(&self) -> f64 {
        self.x_hi
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        (self.x_hi - self.x_lo) / (self.n_points - 1) as f64
    }

    /// i-th node, i < n_points.
    pub fn point(&self, i: usize) -> f64 {
        self.x_lo + i as f64 * self.spacing()
    }

    /// Midpoint between nodes i and i+1.
    pub fn midpoint(&self, i: usize) -> f64 {
        self.x_lo + (i as f64 + 0.5) * self.spacing()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }
}

/// Integrate samples on the grid: composite Simpson for an odd number of
/// points (O(h⁴) for smooth integrands), with a trapezoid on the last panel
/// when the count is even.
pub fn integrate(samples: &[f64], grid: &Grid) -> Result<f64> {
    let n = grid.n_points();
    if samples.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} samples on a grid of {} points",
            samples.len(),
            n
        )));
    }
    let h = grid.spacing();
    let simpson_end = if n % 2 == 1 { n - 1 } else { n - 2 };
    let mut sum = samples[0] + samples[simpson_end];
    let mut i = 1;
    while i < simpson_end {
        sum += 4.0 * samples[i];
        if i + 1 < simpson_end {
            sum += 2.0 * samples[i + 1];
        }
        i += 2;
    }
    // width·S/(3(n−1)) rather than h·S/3 keeps constant integrands exact
    let simpson_width = grid.point(simpson_end) - grid.x_lo();
    let mut total = simpson_width * sum / (3.0 * simpson_end as f64);
    if n.is_multiple_of(2) {
        total += 0.5 * h * (samples[n - 2] + samples[n - 1]);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_basics() {
        let g = Grid::new(0.0, 1.0, 101).unwrap();
        assert_eq!(g.spacing(), 0.01);
        assert_eq!(g.point(0), 0.0);
        assert!((g.point(100) - 1.0).abs() < 1e-15);
        assert!(Grid::new(1.0, 0.0, 11).is_err());
        assert!(Grid::new(0.0, 1.0, 2).is_err());
    }

    #[test]
    fn integrate_constant_exactly() {
        let g = Grid::new(0.0, 1.0, 101).unwrap();
        let ones = vec![1.0; 101];
        assert_eq!(integrate(&ones, &g).unwrap(), 1.0);
    }

    #[test]
    fn integrate_sine() {
        let g = Grid::new(0.0, std::f64::consts::PI, 1001).unwrap();
        let samples: Vec<f64> = g.points().iter().map(|&x| x.sin()).collect();
        let got = integrate(&samples, &g).unwrap();
        assert!((got - 2.0).abs() < 1e-10, "∫sin = {got}");
    }

    #[test]
    fn integrate_even_point_count_falls_back() {
        let g = Grid::new(0.0, 1.0, 100).unwrap();
        let samples: Vec<f64> = g.points().iter().map(|&x| x * x).collect();
        let got = integrate(&samples, &g).unwrap();
        assert!((got - 1.0 / 3.0).abs() < 1e-4, "∫x² = {got}");
    }

    #[test]
    fn integrate_length_mismatch() {
        let g = Grid::new(0.0, 1.0, 101).unwrap();
        assert!(matches!(
            integrate(&[1.0; 50], &g),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn integrate_normalized_ground_state() {
        // ψ₀ of the sech well (a=1, V0=48) integrates to 1 over (−1+1e−6, 80)
        use crate::models::SechPdmWell;
        use crate::pct::PdmWell;
        let well = SechPdmWell::new(1.0, 48.0).unwrap();
        let g = Grid::new(-1.0 + 1e-6, 80.0, 80001).unwrap();
        let samples: Vec<f64> = g
            .points()
            .iter()
            .map(|&x| well.psi(0, x).unwrap().powi(2))
            .collect();
        let got = integrate(&samples, &g).unwrap();
        assert!((got - 1.0).abs() < 1e-6, "∫ψ₀² = {got}");
    }
}
