use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Largest accepted integration step.
pub const MAX_STEP: f64 = 0.1;

/// How far `P` may overshoot `[0, 1]` before the run is rejected; smaller
/// excursions are clamped. The equilibrium at `P = 1` has an unbounded
/// derivative, so an RK4 step with `h = 1e-3` can land a few `1e-8` above it.
pub const DOMAIN_ESCAPE_TOL: f64 = 1e-6;

/// Integrates `dP/dk = 4 phi sqrt(P (1 - P))` from `P(0) = A0^2` with
/// `phi = arcsin(A0)` using classical RK4, and returns `P` at `k = 0..=k_max`.
///
/// The step is shrunk to `1/ceil(1/h)` so integer `k` fall on the grid.
/// Past the first maximum the numeric solution sticks at 1 (the ODE loses
/// uniqueness there) while `sin^2((2k+1) phi)` turns back down.
pub fn speedup_condition_integrate(a0: f64, k_max: u64, h: f64) -> Result<Vec<f64>> {
    if !(a0 > 0.0 && a0 < 1.0) {
        return Err(Error::InvalidAmplitude { a0 });
    }
    if !(h > 0.0 && h <= MAX_STEP) {
        return Err(Error::StepTooLarge { h });
    }
    let phi = a0.asin();
    let rate = |p: f64| {
        let p = p.clamp(0.0, 1.0);
        4.0 * phi * (p * (1.0 - p)).sqrt()
    };
    let steps = (1.0 / h - 1e-9).ceil() as u64;
    let dk = 1.0 / steps as f64;

    let mut p = a0 * a0;
    let mut out = Vec::with_capacity(k_max as usize + 1);
    out.push(p);
    for k in 0..k_max {
        for step in 0..steps {
            let k1 = rate(p);
            let k2 = rate(p + 0.5 * dk * k1);
            let k3 = rate(p + 0.5 * dk * k2);
            let k4 = rate(p + dk * k3);
            p += dk / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if !(-DOMAIN_ESCAPE_TOL..=1.0 + DOMAIN_ESCAPE_TOL).contains(&p) {
                return Err(Error::DomainEscape {
                    k: k as f64 + (step + 1) as f64 * dk,
                    value: p,
                });
            }
            p = p.clamp(0.0, 1.0);
        }
        out.push(p);
    }
    Ok(out)
}

/// Last integer `k` with `(2k+1) phi <= pi/2`, `phi = arcsin(A0)`.
pub fn first_maximum(a0: f64) -> u64 {
    let phi = a0.asin();
    let mut k = ((FRAC_PI_2 / phi - 1.0) / 2.0).floor().max(0.0) as u64;
    while ((2 * k + 3) as f64) * phi <= FRAC_PI_2 + 1e-12 {
        k += 1;
    }
    while k > 0 && ((2 * k + 1) as f64) * phi > FRAC_PI_2 + 1e-12 {
        k -= 1;
    }
    k
}
