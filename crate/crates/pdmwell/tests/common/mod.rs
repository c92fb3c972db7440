//! Shared oracles for the integration tests: closure quadrature, the
//! exponential-substitution inner product for the slowly decaying tails, and
//! node counting.

#![allow(dead_code)]

use pdmwell::PdmWell;

/// Composite Simpson over a closure; `n_pts` must be odd.
pub fn simpson<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, n_pts: usize) -> f64 {
    assert!(n_pts >= 3 && n_pts % 2 == 1);
    let h = (hi - lo) / (n_pts - 1) as f64;
    let mut sum = 0.0;
    for i in 0..n_pts {
        let x = lo + i as f64 * h;
        let w = if i == 0 || i == n_pts - 1 {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        sum += w * f(x);
    }
    sum * h / 3.0
}

/// ⟨ψ_m, ψ_n⟩ over (−a, ∞) computed under the substitution x + a = e^u, so
/// the polynomial tails become exponentially decaying integrands in u.
pub fn well_inner_product(
    well: &dyn PdmWell,
    m: usize,
    n: usize,
    u_lo: f64,
    u_hi: f64,
    n_pts: usize,
) -> f64 {
    let a = -well.wall();
    simpson(
        |u| {
            let x = u.exp() - a;
            let pm = well.psi(m, x).expect("inside domain");
            let pn = well.psi(n, x).expect("inside domain");
            pm * pn * u.exp()
        },
        u_lo,
        u_hi,
        n_pts,
    )
}

/// Largest |ψ_m ψ_n e^u| at the two quadrature endpoints; used to check that
/// the truncation honors the "integrand below 1e−12" rule.
pub fn endpoint_integrand(well: &dyn PdmWell, count: usize, u: f64) -> f64 {
    let a = -well.wall();
    let x = u.exp() - a;
    let mut worst = 0.0_f64;
    for m in 0..count {
        let pm = well.psi(m, x).expect("inside domain").abs();
        worst = worst.max(pm * pm * u.exp());
    }
    worst
}

/// Sign changes of ψ_n sampled on `n_pts` points of (lo, hi).
pub fn node_count(well: &dyn PdmWell, n: usize, lo: f64, hi: f64, n_pts: usize) -> usize {
    let h = (hi - lo) / (n_pts - 1) as f64;
    let mut changes = 0;
    let mut last = 0.0_f64;
    for i in 0..n_pts {
        let x = lo + i as f64 * h;
        let v = well.psi(n, x).expect("inside domain");
        if v.abs() > 1e-12 {
            if last != 0.0 && v.signum() != last.signum() {
                changes += 1;
            }
            last = v;
        }
    }
    changes
}

/// Residual of the continuous equation at one point by high-order central
/// differences: (−g ψ″ − g′ ψ′ + V ψ − E ψ) with g = 1/M.
pub fn equation_residual(well: &dyn PdmWell, n: usize, energy: f64, x: f64) -> f64 {
    let a = -well.wall();
    let g = |x: f64| {
        let r = 1.0 + x / a;
        r * r
    };
    let g_prime = |x: f64| 2.0 * (1.0 + x / a) / a;
    let f = |x: f64| well.psi(n, x).expect("inside domain");
    // fourth-order five-point stencils, step scaled to the local feature size
    let h = 2e-3 * (1.0 + (x + a) / 4.0);
    let d2 = (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h)
        - f(x + 2.0 * h))
        / (12.0 * h * h);
    let d1 = (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
    -g(x) * d2 - g_prime(x) * d1 + well.potential(x) * f(x) - energy * f(x)
}
