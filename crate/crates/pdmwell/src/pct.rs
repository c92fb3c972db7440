//! Point-canonical-transformation engine.
//!
//! A constant-mass problem −φ″ + U(u)φ = εφ is mapped onto the
//! position-dependent-mass equation
//!
//! ```text
//! (−d/dx (1/M(x)) d/dx + V_eff(x)) ψ(x) = E ψ(x)
//! ```
//!
//! through the change of variable u(x) = ā v(x) + b̄ with v = ∫√M dx′ and the
//! change of function ψ = λ M^{1/4} φ(u). The effective potential, energies,
//! and wavefunctions of the derived well follow as
//!
//! ```text
//! V_eff = ā² U(u(x)) + M″/4M² − 7M′²/16M³ + c̄,    E_n = ā² ε_n + c̄.
//! ```
//!
//! The engine sees a source model only through the [`SourcePotential`]
//! contract and never inspects its internals.

use crate::error::{Error, Result};

/// The mass family M(x) = (1 + x/a)⁻² on (−a, +∞), with an infinite wall at
/// x = −a: M → +∞ as x → −a⁺ and M → 0 as x → +∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassProfile {
    a: f64,
}

impl MassProfile {
    pub fn new(a: f64) -> Result<Self> {
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "mass profile requires a > 0, got {a}"
            )));
        }
        Ok(Self { a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// Position of the infinite wall, x = −a.
    pub fn wall(&self) -> f64 {
        -self.a
    }

    /// M(x) = (1 + x/a)⁻² for x > −a.
    pub fn mass(&self, x: f64) -> Result<f64> {
        self.check_inside(x)?;
        let r = 1.0 + x / self.a;
        Ok(1.0 / (r * r))
    }

    /// The mass-dependent correction term M″/4M² − 7M′²/16M³, which for this
    /// family is the constant −1/(4a²).
    pub fn mass_correction(&self) -> f64 {
        -1.0 / (4.0 * self.a * self.a)
    }

    /// v(x) = ∫√M dx′ in closed form, with the integration constant absorbed
    /// into the map offset: v = a ln(x + a).
    pub fn sqrt_mass_integral(&self, x: f64) -> Result<f64> {
        self.check_inside(x)?;
        Ok(self.a * (x + self.a).ln())
    }

    fn check_inside(&self, x: f64) -> Result<()> {
        if !x.is_finite() || x <= self.wall() {
            return Err(Error::Domain(format!(
                "x = {x} is at or below the infinite wall at x = {}",
                self.wall()
            )));
        }
        Ok(())
    }
}

/// Transformation data (ā, b̄, c̄, λ) tying a source potential to a derived
/// well. The canonical choice for this mass family is ā = 1/a, b̄ = 0,
/// λ = 1/√a, under which u(x) = ln(x + a).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PctMap {
    a_bar: f64,
    b_bar: f64,
    c_bar: f64,
    lambda: f64,
}

impl PctMap {
    pub fn new(a_bar: f64, b_bar: f64, c_bar: f64, lambda: f64) -> Result<Self> {
        if !a_bar.is_finite() || a_bar == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "map requires a nonzero finite scale, got a_bar={a_bar}"
            )));
        }
        if !b_bar.is_finite() || !c_bar.is_finite() {
            return Err(Error::InvalidParameter(
                "map offsets must be finite".to_string(),
            ));
        }
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "map requires lambda > 0, got {lambda}"
            )));
        }
        Ok(Self {
            a_bar,
            b_bar,
            c_bar,
            lambda,
        })
    }

    /// Canonical map for the given profile: ā = 1/a, b̄ = 0, λ = 1/√a, with
    /// the energy offset c̄ chosen by the model.
    pub fn canonical(profile: &MassProfile, c_bar: f64) -> Self {
        Self {
            a_bar: 1.0 / profile.a(),
            b_bar: 0.0,
            c_bar,
            lambda: 1.0 / profile.a().sqrt(),
        }
    }

    pub fn a_bar(&self) -> f64 {
        self.a_bar
    }

    pub fn b_bar(&self) -> f64 {
        self.b_bar
    }

    pub fn c_bar(&self) -> f64 {
        self.c_bar
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// u(x) = ā a ln(x + a) + b̄.
    pub fn u_of_x(&self, profile: &MassProfile, x: f64) -> Result<f64> {
        Ok(self.a_bar * profile.sqrt_mass_integral(x)? + self.b_bar)
    }
}

/// Contract a constant-mass solvable model exposes to the engine: the
/// potential U(u), its bound-state energies ε_n, normalized eigenfunctions
/// φ_n, normalization constants, and the bound-state count.
pub trait SourcePotential {
    /// U(u) on (−∞, +∞).
    fn potential(&self, u: f64) -> f64;

    /// Value U approaches as u → +∞ (the continuum edge of the source).
    fn asymptote(&self) -> f64;

    /// Number of bound states.
    fn bound_count(&self) -> usize;

    /// ε_n for n < bound_count, strictly increasing in n.
    fn epsilon(&self, n: usize) -> Result<f64>;

    /// Normalized eigenfunction φ_n(u).
    fn phi(&self, n: usize, u: f64) -> Result<f64>;

    /// ln 𝒩_n of the normalization constant (log space: the raw constants
    /// overflow f64 for wide wells).
    fn log_norm(&self, n: usize) -> Result<f64>;

    /// Normalization constant 𝒩_n.
    fn norm(&self, n: usize) -> Result<f64> {
        Ok(self.log_norm(n)?.exp())
    }
}

/// A derived position-dependent-mass well: domain (−a, +∞) behind an
/// infinite wall, finitely many bound states below a continuum threshold.
///
/// `mass` and `potential` return `+∞` at and below the wall so that plotting
/// and discretization code can treat the wall uniformly; `psi` and `energy`
/// report domain and index violations as hard errors.
pub trait PdmWell {
    /// Wall position (−a).
    fn wall(&self) -> f64;

    /// M(x); +∞ for x ≤ wall.
    fn mass(&self, x: f64) -> f64;

    /// V_eff(x); +∞ for x ≤ wall.
    fn potential(&self, x: f64) -> f64;

    /// Asymptotic value of V_eff as x → +∞, above which the spectrum is
    /// continuous.
    fn continuum_threshold(&self) -> f64;

    fn bound_count(&self) -> usize;

    fn energy(&self, n: usize) -> Result<f64>;

    /// Normalized bound-state wavefunction ψ_n(x) for x > wall.
    fn psi(&self, n: usize, x: f64) -> Result<f64>;

    /// All bound-state energies, ascending.
    fn energies(&self) -> Vec<f64> {
        (0..self.bound_count())
            .map(|n| self.energy(n).expect("n < bound_count"))
            .collect()
    }
}

/// A well derived from a source potential by the transformation maps.
#[derive(Debug, Clone)]
pub struct PctWell<S> {
    source: S,
    profile: MassProfile,
    map: PctMap,
}

impl<S: SourcePotential> PctWell<S> {
    pub fn new(source: S, profile: MassProfile, map: PctMap) -> Self {
        Self {
            source,
            profile,
            map,
        }
    }

    pub fn source(&self) -> &S {
        &self.source
    }

    pub fn profile(&self) -> &MassProfile {
        &self.profile
    }

    pub fn map(&self) -> &PctMap {
        &self.map
    }

    /// V_eff(x) = ā² U(u(x)) + M″/4M² − 7M′²/16M³ + c̄ for x > −a.
    pub fn map_potential(&self, x: f64) -> Result<f64> {
        let u = self.map.u_of_x(&self.profile, x)?;
        Ok(self.map.a_bar() * self.map.a_bar() * self.source.potential(u)
            + self.profile.mass_correction()
            + self.map.c_bar())
    }

    /// E_n = ā² ε_n + c̄.
    pub fn map_energy(&self, n: usize) -> Result<f64> {
        Ok(self.map.a_bar() * self.map.a_bar() * self.source.epsilon(n)? + self.map.c_bar())
    }

    /// ψ_n(x) = λ M(x)^{1/4} φ_n(u(x)).
    pub fn map_wavefunction(&self, n: usize, x: f64) -> Result<f64> {
        if n >= self.source.bound_count() {
            return Err(Error::LevelOutOfRange {
                n,
                bound_count: self.source.bound_count(),
            });
        }
        let u = self.map.u_of_x(&self.profile, x)?;
        let m = self.profile.mass(x)?;
        Ok(self.map.lambda() * m.powf(0.25) * self.source.phi(n, u)?)
    }
}

impl<S: SourcePotential> PdmWell for PctWell<S> {
    fn wall(&self) -> f64 {
        self.profile.wall()
    }

    fn mass(&self, x: f64) -> f64 {
        self.profile.mass(x).unwrap_or(f64::INFINITY)
    }

    fn potential(&self, x: f64) -> f64 {
        self.map_potential(x).unwrap_or(f64::INFINITY)
    }

    fn continuum_threshold(&self) -> f64 {
        self.map.a_bar() * self.map.a_bar() * self.source.asymptote()
            + self.profile.mass_correction()
            + self.map.c_bar()
    }

    fn bound_count(&self) -> usize {
        self.source.bound_count()
    }

    fn energy(&self, n: usize) -> Result<f64> {
        if n >= self.source.bound_count() {
            return Err(Error::LevelOutOfRange {
                n,
                bound_count: self.source.bound_count(),
            });
        }
        self.map_energy(n)
    }

    fn psi(&self, n: usize, x: f64) -> Result<f64> {
        self.map_wavefunction(n, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mass_values() {
        let p1 = MassProfile::new(1.0).unwrap();
        assert_eq!(p1.mass(0.0).unwrap(), 1.0);
        assert_eq!(p1.mass(1.0).unwrap(), 0.25);
        let p2 = MassProfile::new(2.0).unwrap();
        assert_eq!(p2.mass(-1.0).unwrap(), 4.0);
    }

    #[test]
    fn mass_limits() {
        let p = MassProfile::new(1.5).unwrap();
        assert!(p.mass(1e12).unwrap() < 1e-20);
        assert!(p.mass(p.wall() + 1e-12).unwrap() > 1e20);
    }

    #[test]
    fn mass_outside_wall_is_domain_error() {
        let p = MassProfile::new(1.0).unwrap();
        assert!(matches!(p.mass(-1.0), Err(Error::Domain(_))));
        assert!(matches!(p.mass(-2.5), Err(Error::Domain(_))));
    }

    #[test]
    fn mass_correction_closed_form() {
        assert_eq!(MassProfile::new(1.0).unwrap().mass_correction(), -0.25);
        assert_eq!(MassProfile::new(2.0).unwrap().mass_correction(), -0.0625);
    }

    #[test]
    fn mass_correction_matches_finite_differences() {
        // M″/4M² − 7M′²/16M³ by central differences must be x-independent
        let p = MassProfile::new(1.0).unwrap();
        let h = 1e-4;
        for &x in &[-0.5, 0.0, 3.0] {
            let m = p.mass(x).unwrap();
            let mp = (p.mass(x + h).unwrap() - p.mass(x - h).unwrap()) / (2.0 * h);
            let mpp = (p.mass(x + h).unwrap() - 2.0 * m + p.mass(x - h).unwrap()) / (h * h);
            let combo = mpp / (4.0 * m * m) - 7.0 * mp * mp / (16.0 * m * m * m);
            assert!(
                (combo - p.mass_correction()).abs() < 1e-6,
                "x={x}: finite difference {combo} vs closed form {}",
                p.mass_correction()
            );
        }
    }

    #[test]
    fn u_of_x_examples() {
        let p = MassProfile::new(1.0).unwrap();
        let map = PctMap::new(1.0, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(map.u_of_x(&p, 0.0).unwrap(), 0.0);
        let e = std::f64::consts::E;
        assert!((map.u_of_x(&p, e - 1.0).unwrap() - 1.0).abs() < 1e-14);

        let p2 = MassProfile::new(2.0).unwrap();
        let shifted = PctMap::new(3.0, 5.0, 0.0, 1.0).unwrap();
        assert_eq!(shifted.u_of_x(&p2, -1.0).unwrap(), 5.0);
    }

    #[test]
    fn canonical_map_parameters() {
        let p = MassProfile::new(4.0).unwrap();
        let map = PctMap::canonical(&p, 0.3);
        assert_eq!(map.a_bar(), 0.25);
        assert_eq!(map.b_bar(), 0.0);
        assert_eq!(map.lambda(), 0.5);
        assert_eq!(map.c_bar(), 0.3);
    }

    #[test]
    fn map_energy_identity_case() {
        struct Flat;
        impl SourcePotential for Flat {
            fn potential(&self, _u: f64) -> f64 {
                0.0
            }
            fn asymptote(&self) -> f64 {
                0.0
            }
            fn bound_count(&self) -> usize {
                1
            }
            fn epsilon(&self, _n: usize) -> Result<f64> {
                Ok(0.0)
            }
            fn phi(&self, _n: usize, _u: f64) -> Result<f64> {
                Ok(0.0)
            }
            fn log_norm(&self, _n: usize) -> Result<f64> {
                Ok(0.0)
            }
        }
        let p = MassProfile::new(1.0).unwrap();
        let well = PctWell::new(Flat, p, PctMap::new(7.0, 0.0, 0.3, 1.0).unwrap());
        assert_eq!(well.map_energy(0).unwrap(), 0.3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(MassProfile::new(0.0).is_err());
        assert!(MassProfile::new(-1.0).is_err());
        assert!(PctMap::new(0.0, 0.0, 0.0, 1.0).is_err());
        assert!(PctMap::new(1.0, 0.0, 0.0, 0.0).is_err());
    }
}
