//! Closed-form exponential map.
//!
//! With `a = τ·η·h̄3` the geodesic from the identity is
//!
//! ```text
//! q0 = cos τ·cos a − h̄3·sin τ·sin a
//! (q1, q2) = sin τ · R(−a)·(h̄1, h̄2)
//! q3 = cos τ·sin a + h̄3·sin τ·cos a
//! ```
//!
//! i.e. the product `exp(τ·n̂) · exp(a·ê3)` of two one-parameter subgroups.
//! No integrator is involved; every sample is evaluated from scratch.

use crate::algebra::{canonicalize, LensPoint, SpherePoint};
use crate::error::{Error, Result};
use crate::metric::{tau_of_t, InitialCovector, MetricParams};
use crate::parallel::{map_indexed, Execution};

/// Endpoint on `S³` for a unit direction `(h̄1, h̄2, h̄3)`.
pub fn exp_su2_dir(dir: &[f64; 3], tau: f64, eta: f64) -> SpherePoint {
    let [h1, h2, h3] = *dir;
    let a = tau * eta * h3;
    let (s, c) = tau.sin_cos();
    let (sa, ca) = a.sin_cos();
    SpherePoint {
        q0: c * ca - h3 * s * sa,
        q1: s * (h1 * ca + h2 * sa),
        q2: s * (h2 * ca - h1 * sa),
        q3: c * sa + h3 * s * ca,
    }
}

pub fn exp_su2(c: &InitialCovector, tau: f64, eta: f64) -> SpherePoint {
    exp_su2_dir(&c.direction(), tau, eta)
}

/// Endpoint in `L(p;q)` after arclength `t`.
pub fn exp_lens(c: &InitialCovector, t: f64, params: &MetricParams) -> LensPoint {
    let tau = tau_of_t(t, c.h3bar, params);
    canonicalize(&exp_su2(c, tau, params.eta()), params.p, params.q)
}

/// `n` equally spaced samples of the geodesic on `[0, t_max]`.
pub fn geodesic_trace(
    c: &InitialCovector,
    t_max: f64,
    n: usize,
    params: &MetricParams,
    exec: Execution,
) -> Result<Vec<(f64, LensPoint)>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("trace needs n >= 2, got {n}")));
    }
    if t_max.is_nan() || t_max <= 0.0 {
        return Err(Error::InvalidArgument(format!("t_max must be positive, got {t_max}")));
    }
    let last = (n - 1) as f64;
    Ok(map_indexed(exec, n, |i| {
        let t = t_max * i as f64 / last;
        (t, exp_lens(c, t, params))
    }))
}
