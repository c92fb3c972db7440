//! Symmetric tridiagonal operator, Sturm-sequence bisection for the lowest
//! eigenvalues, and inverse iteration for eigenvectors.

use super::Grid;
use crate::error::{Error, Result};

/// Absolute bisection tolerance on eigenvalues.
const EIGENVALUE_TOL: f64 = 1e-10;
const MAX_BISECTIONS: usize = 220;
const MAX_INVERSE_ITERATIONS: usize = 50;

/// Symmetric tridiagonal operator over the interior nodes of a grid, with
/// Dirichlet conditions folded in. Symmetry is exact by representation: one
/// stored off-diagonal. All off-diagonal entries are ≤ 0 (negative flux
/// coupling), which keeps Sturm counts applicable.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
    spacing: f64,
}

impl TridiagonalOperator {
    /// Build from raw diagonals (unit spacing). `offdiag` must be one
    /// shorter than `diag` with entries ≤ 0.
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        Self::with_spacing(diag, offdiag, 1.0)
    }

    pub fn with_spacing(diag: Vec<f64>, offdiag: Vec<f64>, spacing: f64) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(Error::DimensionMismatch(format!(
                "diag length {} needs offdiag length {}, got {}",
                diag.len(),
                diag.len().saturating_sub(1),
                offdiag.len()
            )));
        }
        if diag.iter().chain(offdiag.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "operator entries must be finite".to_string(),
            ));
        }
        if offdiag.iter().any(|&e| e > 0.0) {
            return Err(Error::InvalidParameter(
                "off-diagonal entries must be <= 0".to_string(),
            ));
        }
        if !spacing.is_finite() || spacing <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "spacing must be positive, got {spacing}"
            )));
        }
        Ok(Self {
            diag,
            offdiag,
            spacing,
        })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Grid spacing behind the discrete inner product ⟨v, w⟩ = h Σ vᵢwᵢ.
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Apply the operator to a vector.
    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        let n = self.dim();
        if v.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} vs dimension {n}",
                v.len()
            )));
        }
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut acc = self.diag[i] * v[i];
            if i > 0 {
                acc += self.offdiag[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                acc += self.offdiag[i] * v[i + 1];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Number of eigenvalues strictly below `lambda`, from the signs of the
    /// LDLᵀ pivots (Sturm sequence).
    pub fn count_below(&self, lambda: f64) -> usize {
        let pivot_guard = self.pivot_guard();
        let mut count = 0;
        let mut q = self.diag[0] - lambda;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.dim() {
            let q_safe = if q.abs() < pivot_guard {
                if q >= 0.0 {
                    pivot_guard
                } else {
                    -pivot_guard
                }
            } else {
                q
            };
            let e = self.offdiag[i - 1];
            q = (self.diag[i] - lambda) - e * e / q_safe;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin bounds on the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    fn pivot_guard(&self) -> f64 {
        let max_off = self
            .offdiag
            .iter()
            .fold(0.0_f64, |acc, &e| acc.max(e.abs()));
        f64::MIN_POSITIVE.max(f64::EPSILON * f64::EPSILON * max_off * max_off)
    }
}

/// Flux-conservative discretization of −d/dx (1/M) d/dx + V on the interior
/// nodes of `grid`, Dirichlet at both ends. The coefficient g = 1/M is
/// evaluated at panel midpoints, which keeps the operator symmetric and
/// second-order accurate for variable coefficients.
pub fn discretize<M, V>(mass: M, potential: V, grid: &Grid) -> Result<TridiagonalOperator>
where
    M: Fn(f64) -> f64,
    V: Fn(f64) -> f64,
{
    let n = grid.n_points();
    let h = grid.spacing();
    let mut g_mid = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let xm = grid.midpoint(i);
        let m = mass(xm);
        if m.is_nan() || m <= 0.0 {
            return Err(Error::Domain(format!(
                "mass must be positive and finite at x = {xm}, got {m}"
            )));
        }
        let g = 1.0 / m;
        // g vanishes only where M blows up, i.e. at the wall itself;
        // a grid that starts strictly inside keeps every g positive
        if !g.is_finite() || g <= 0.0 {
            return Err(Error::Domain(format!(
                "flux coefficient 1/M degenerate at x = {xm} (inside the wall?)"
            )));
        }
        g_mid.push(g);
    }
    let mut diag = Vec::with_capacity(n - 2);
    let mut offdiag = Vec::with_capacity(n - 3);
    let h2 = h * h;
    for i in 1..n - 1 {
        let x = grid.point(i);
        let v = potential(x);
        if !v.is_finite() {
            return Err(Error::Domain(format!(
                "potential not finite at grid point x = {x} (at or below the wall?)"
            )));
        }
        diag.push((g_mid[i - 1] + g_mid[i]) / h2 + v);
        if i < n - 2 {
            offdiag.push(-g_mid[i] / h2);
        }
    }
    TridiagonalOperator::with_spacing(diag, offdiag, h)
}

/// The k smallest eigenvalues in ascending order, each bisected to absolute
/// tolerance 1e−10 using Sturm counts.
pub fn lowest_eigenvalues(op: &TridiagonalOperator, k: usize) -> Result<Vec<f64>> {
    let n = op.dim();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "requested {k} eigenvalues of a dimension-{n} operator"
        )));
    }
    let (mut glo, mut ghi) = op.gershgorin();
    glo -= 1.0;
    ghi += 1.0;
    let mut out = Vec::with_capacity(k);
    let mut lower = glo;
    for j in 0..k {
        let mut a = lower;
        let mut b = ghi;
        for _ in 0..MAX_BISECTIONS {
            if b - a <= EIGENVALUE_TOL {
                break;
            }
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break; // spacing exhausted
            }
            if op.count_below(mid) <= j {
                a = mid;
            } else {
                b = mid;
            }
        }
        let ev = 0.5 * (a + b);
        out.push(ev);
        // the next eigenvalue cannot lie below this bracket's floor
        lower = a;
    }
    Ok(out)
}

/// Eigenvector by inverse iteration at an isolated eigenvalue, unit-normalized
/// in the operator's discrete inner product (h Σ w²) with the sign fixed so
/// the first component of noticeable size is positive.
pub fn eigenvector(op: &TridiagonalOperator, eigenvalue: f64) -> Result<Vec<f64>> {
    let n = op.dim();
    let lu = ShiftedLu::factor(op, eigenvalue);
    // fixed-seed start vector keeps results deterministic
    let mut rng = SplitMix64::new(0x9E37_79B9_7F4A_7C15);
    let mut v: Vec<f64> = (0..n).map(|_| rng.next_unit() - 0.5).collect();
    normalize_euclid(&mut v);
    let mut prev = v.clone();
    let mut converged = false;
    for _ in 0..MAX_INVERSE_ITERATIONS {
        let mut w = v.clone();
        lu.solve(&mut w);
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::NoConvergence(
                "inverse iteration produced a degenerate vector".to_string(),
            ));
        }
        for x in &mut w {
            *x /= norm;
        }
        let mut same = 0.0;
        let mut flip = 0.0;
        for i in 0..n {
            same += (w[i] - prev[i]).powi(2);
            flip += (w[i] + prev[i]).powi(2);
        }
        let delta = same.min(flip).sqrt();
        prev.clone_from(&w);
        v = w;
        if delta < 1e-12 * (n as f64).sqrt() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(format!(
            "inverse iteration at eigenvalue {eigenvalue} did not settle in {MAX_INVERSE_ITERATIONS} iterations"
        )));
    }
    // quadrature normalization and sign convention
    let h = op.spacing();
    let norm2: f64 = v.iter().map(|x| x * x).sum::<f64>() * h;
    let scale = 1.0 / norm2.sqrt();
    for x in &mut v {
        *x *= scale;
    }
    let max_abs = v.iter().fold(0.0_f64, |acc, &x| acc.max(x.abs()));
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-8 * max_abs) {
        if *first < 0.0 {
            for x in &mut v {
                *x = -*x;
            }
        }
    }
    Ok(v)
}

fn normalize_euclid(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in v {
        *x /= norm;
    }
}

/// LU factorization of T − λI with partial pivoting (tridiagonal, with the
/// one extra superdiagonal the row swaps fill in).
struct ShiftedLu {
    lower: Vec<f64>,
    diag: Vec<f64>,
    upper1: Vec<f64>,
    upper2: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn factor(op: &TridiagonalOperator, lambda: f64) -> Self {
        let n = op.dim();
        let mut dl: Vec<f64> = op.offdiag().to_vec();
        let mut d: Vec<f64> = op.diag().iter().map(|x| x - lambda).collect();
        let mut du: Vec<f64> = op.offdiag().to_vec();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        let tiny = op.pivot_guard();
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i].abs() < tiny {
                    d[i] = if d[i] >= 0.0 { tiny } else { -tiny };
                }
                let factor = dl[i] / d[i];
                dl[i] = factor;
                d[i + 1] -= factor * du[i];
            } else {
                let factor = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = factor;
                let tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - factor * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -factor;
                }
                swapped[i] = true;
            }
        }
        if let Some(last) = d.last_mut() {
            if last.abs() < tiny {
                *last = if *last >= 0.0 { tiny } else { -tiny };
            }
        }
        Self {
            lower: dl,
            diag: d,
            upper1: du,
            upper2: du2,
            swapped,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = b.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let tmp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tmp - self.lower[i] * b[i];
            } else {
                b[i + 1] -= self.lower[i] * b[i];
            }
        }
        b[n - 1] /= self.diag[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.upper1[n - 2] * b[n - 1]) / self.diag[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] =
                (b[i] - self.upper1[i] * b[i + 1] - self.upper2[i] * b[i + 2]) / self.diag[i];
        }
    }
}

/// SplitMix64: tiny deterministic generator for start vectors.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    fn next_unit(&mut self) -> f64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        (z >> 11) as f64 / (1u64 << 53) as f64
    }
}
