//! Metric parameters, initial covectors and the `τ ↔ t` time change.
//!
//! An arclength geodesic from the identity is fixed by a covector `h` on the
//! level set `H(h) = ½`, `H = (h1² + h2²)/(2·I1) + h3²/(2·I3)`. Writing
//! `h = |h|·(h̄1, h̄2, h̄3)` the level condition gives
//! `|h| = √I1 / √(1 + η·h̄3²)`, and the geodesic formulas are trigonometric in
//! `τ = |h|·t / (2·I1)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Lens space `L(p;q)` with the Berger metric of moments `(I1, I1, I3)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricParams {
    pub p: i64,
    pub q: i64,
    pub i1: f64,
    pub i3: f64,
}

impl MetricParams {
    pub fn new(p: i64, q: i64, i1: f64, i3: f64) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidParams(format!("p must be >= 1, got {p}")));
        }
        if q == 0 || gcd(p, q) != 1 {
            return Err(Error::InvalidParams(format!("p = {p} and q = {q} must be coprime")));
        }
        if !(i1.is_finite() && i1 > 0.0 && i3.is_finite() && i3 > 0.0) {
            return Err(Error::InvalidParams(format!(
                "moments must be positive and finite, got I1 = {i1}, I3 = {i3}"
            )));
        }
        Ok(MetricParams { p, q, i1, i3 })
    }

    /// Builds the parameters from `I1` and the oblateness, `I3 = I1/(1 + η)`.
    pub fn with_eta(p: i64, q: i64, i1: f64, eta: f64) -> Result<Self> {
        if !(eta.is_finite() && eta > -1.0) {
            return Err(Error::InvalidParams(format!("eta must be > -1, got {eta}")));
        }
        Self::new(p, q, i1, i1 / (1.0 + eta))
    }

    /// Oblateness `η = I1/I3 − 1`.
    pub fn eta(&self) -> f64 {
        self.i1 / self.i3 - 1.0
    }

    /// `−(p−1)/p`: below it the cut locus gains the segment on the `q3` axis.
    pub fn oblate_threshold(&self) -> f64 {
        oblate_threshold(self.p)
    }
}

pub fn oblate_threshold(p: i64) -> f64 {
    -((p - 1) as f64) / p as f64
}

/// Direction of an initial covector: `h̄3 ∈ [−1, 1]` and the azimuth `φ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InitialCovector {
    pub h3bar: f64,
    pub phi: f64,
}

impl InitialCovector {
    pub fn new(h3bar: f64, phi: f64) -> Result<Self> {
        if !(h3bar.is_finite() && h3bar.abs() <= 1.0) {
            return Err(Error::InvalidArgument(format!("h3bar must lie in [-1, 1], got {h3bar}")));
        }
        if !phi.is_finite() {
            return Err(Error::InvalidArgument(format!("phi must be finite, got {phi}")));
        }
        Ok(InitialCovector { h3bar, phi: phi.rem_euclid(2.0 * PI) })
    }

    /// Unit direction `(h̄1, h̄2, h̄3)`.
    pub fn direction(&self) -> [f64; 3] {
        let r = (1.0 - self.h3bar * self.h3bar).max(0.0).sqrt();
        let (s, c) = self.phi.sin_cos();
        [r * c, r * s, self.h3bar]
    }

    /// The covector `h = |h|·h̄` on the level set `H = ½`.
    pub fn covector(&self, params: &MetricParams) -> [f64; 3] {
        let n = covector_norm(self.h3bar, params);
        self.direction().map(|x| n * x)
    }

    /// Mirror image under the reflection in the `(h1, h2)` plane.
    pub fn reflected(&self) -> Self {
        InitialCovector { h3bar: -self.h3bar, phi: self.phi }
    }
}

/// `H(h) = ½·((h1² + h2²)/I1 + h3²/I3)`.
pub fn hamiltonian(h: &[f64; 3], params: &MetricParams) -> f64 {
    0.5 * ((h[0] * h[0] + h[1] * h[1]) / params.i1 + h[2] * h[2] / params.i3)
}

/// `|h| = √I1 / √(1 + η·h̄3²)`.
pub fn covector_norm(h3bar: f64, params: &MetricParams) -> f64 {
    (params.i1 / (1.0 + params.eta() * h3bar * h3bar)).sqrt()
}

/// `τ = |h|·t / (2·I1)`.
pub fn tau_of_t(t: f64, h3bar: f64, params: &MetricParams) -> f64 {
    covector_norm(h3bar, params) * t / (2.0 * params.i1)
}

/// `t = 2·I1·τ / |h|`.
pub fn t_of_tau(tau: f64, h3bar: f64, params: &MetricParams) -> f64 {
    2.0 * params.i1 * tau / covector_norm(h3bar, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(MetricParams::new(0, 1, 1.0, 1.0).is_err());
        assert!(MetricParams::new(4, 2, 1.0, 1.0).is_err());
        assert!(MetricParams::new(3, 0, 1.0, 1.0).is_err());
        assert!(MetricParams::new(3, 1, -1.0, 1.0).is_err());
        assert!(MetricParams::new(3, 1, 1.0, 0.0).is_err());
        assert!(MetricParams::with_eta(3, 1, 1.0, -1.0).is_err());
        assert!(MetricParams::new(1, 7, 1.0, 2.0).is_ok());
        assert!(MetricParams::new(5, -2, 1.0, 2.0).is_ok());
        assert!(InitialCovector::new(1.0 + 1e-9, 0.0).is_err());
    }

    #[test]
    fn norm_examples() {
        let m = MetricParams::with_eta(2, 1, 1.0, 0.7).unwrap();
        assert_eq!(covector_norm(0.0, &m), 1.0);
        let m = MetricParams::with_eta(2, 1, 1.0, 3.0).unwrap();
        assert!((covector_norm(1.0, &m) - m.i3.sqrt()).abs() < 1e-15);
        let m = MetricParams::with_eta(2, 1, 4.0, 3.0).unwrap();
        assert!((covector_norm(0.5, &m) - 1.511858).abs() < 1e-6);
    }

    /// Solve `H(s·h̄) = ½` for `s` by bisection and compare with the closed form.
    #[test]
    fn norm_matches_level_set_bisection() {
        let m = MetricParams::new(3, 1, 4.0, 1.0).unwrap();
        for &h3 in &[-1.0, -0.3, 0.0, 0.5, 0.99] {
            let c = InitialCovector::new(h3, 1.1).unwrap();
            let d = c.direction();
            let (mut lo, mut hi) = (0.0, 100.0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if hamiltonian(&d.map(|x| mid * x), &m) < 0.5 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            assert!((lo - covector_norm(h3, &m)).abs() < 1e-12);
        }
    }

    #[test]
    fn time_change_examples() {
        let m = MetricParams::with_eta(2, 1, 1.0, 0.0).unwrap();
        assert_eq!(tau_of_t(0.0, 0.3, &m), 0.0);
        assert_eq!(tau_of_t(2.0, 0.0, &m), 1.0);
        let m = MetricParams::with_eta(2, 1, 1.0, 3.0).unwrap();
        // |h| = 1/2 at h̄3 = 1
        assert!((t_of_tau(PI, 1.0, &m) - 4.0 * PI).abs() < 1e-14);
    }

    proptest! {
        #[test]
        fn covector_lies_on_level_set(h3 in -1.0f64..=1.0, phi in 0.0f64..6.3, i1 in 0.1f64..10.0, i3 in 0.1f64..10.0) {
            let m = MetricParams::new(2, 1, i1, i3).unwrap();
            let c = InitialCovector::new(h3, phi).unwrap();
            let d = c.direction();
            prop_assert!((d.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-14);
            prop_assert!((hamiltonian(&c.covector(&m), &m) - 0.5).abs() < 1e-12);
            prop_assert_eq!(covector_norm(-h3, &m), covector_norm(h3, &m));
        }

        #[test]
        fn time_change_round_trips(tau in 0.0f64..50.0, h3 in -1.0f64..=1.0, eta in -0.99f64..5.0) {
            let m = MetricParams::with_eta(3, 1, 1.7, eta).unwrap();
            let back = tau_of_t(t_of_tau(tau, h3, &m), h3, &m);
            prop_assert!((back - tau).abs() <= 1e-12 * tau.max(1.0));
        }
    }
}
