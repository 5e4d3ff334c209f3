//! Points of `S³ ≅ SU₂`, the cyclic deck action and the fundamental domain.
//!
//! A point is stored as `(q0, q1, q2, q3)` with `z = q0 + i·q3` and
//! `w = q1 + i·q2`. The matrix it stands for is `[[z, w], [−w̄, z̄]]`.
//!
//! The model domain of `L(p;q)` (`p ≥ 2`) is the lens
//! `q1² + q2² + q3²/sin²(π/p) ≤ 1, q0 ≥ 0`, which is the same as
//! `|arg z| ≤ π/p` together with the circle `z = 0`. [`canonicalize`] picks the
//! unique orbit representative in the half-open sector
//! `arg z ∈ [−π/p, π/p)`; on the circle `z = 0` it picks `arg w ∈ [0, 2π/p)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Absolute tolerance for orbit-membership and boundary tests.
pub const BOUNDARY_TOL: f64 = 1e-10;

/// Angular window used to resolve the two glued faces of the lens.
const TIE_TOL: f64 = 1e-12;

/// Below this `|z|` a point is treated as lying on the circle `z = 0`.
const FIBER_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
}

impl SpherePoint {
    pub const IDENTITY: SpherePoint = SpherePoint { q0: 1.0, q1: 0.0, q2: 0.0, q3: 0.0 };

    pub const fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        SpherePoint { q0, q1, q2, q3 }
    }

    /// Builds the point from `z = z.0 + i·z.1` and `w = w.0 + i·w.1`.
    pub const fn from_zw(z: (f64, f64), w: (f64, f64)) -> Self {
        SpherePoint { q0: z.0, q1: w.0, q2: w.1, q3: z.1 }
    }

    pub fn z(&self) -> (f64, f64) {
        (self.q0, self.q3)
    }

    pub fn w(&self) -> (f64, f64) {
        (self.q1, self.q2)
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.q0, self.q1, self.q2, self.q3]
    }

    pub fn norm(&self) -> f64 {
        self.to_array().iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        SpherePoint::new(self.q0 / n, self.q1 / n, self.q2 / n, self.q3 / n)
    }

    /// Euclidean distance in ℝ⁴.
    pub fn chordal(&self, other: &SpherePoint) -> f64 {
        let a = self.to_array();
        let b = other.to_array();
        a.iter().zip(b.iter()).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
    }
}

/// An orbit of the deck action, stored through its canonical representative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LensPoint {
    pub rep: SpherePoint,
    pub p: i64,
    pub q: i64,
}

impl LensPoint {
    /// The base point `o`, image of the identity.
    pub fn origin(p: i64, q: i64) -> Self {
        LensPoint { rep: SpherePoint::IDENTITY, p, q }
    }

    /// Distance to another lens point, see [`lens_chordal_distance`].
    pub fn chordal(&self, other: &LensPoint) -> f64 {
        lens_chordal_distance(&self.rep, &other.rep, self.p, self.q)
    }
}

fn rotate((a, b): (f64, f64), angle: f64) -> (f64, f64) {
    let (s, c) = angle.sin_cos();
    (a * c - b * s, a * s + b * c)
}

/// Applies `[k]`: `(z, w) ↦ (εᵏ z, ε^{kq} w)` with `ε = e^{2πi/p}`.
///
/// `k` is reduced modulo `p`; `k ≡ 0` returns `x` unchanged.
pub fn deck_transform(x: &SpherePoint, k: i64, p: i64, q: i64) -> SpherePoint {
    let k = k.rem_euclid(p);
    if k == 0 {
        return *x;
    }
    let kq = (k * q.rem_euclid(p)).rem_euclid(p);
    let step = 2.0 * PI / p as f64;
    let z = rotate(x.z(), step * k as f64);
    let w = if kq == 0 { x.w() } else { rotate(x.w(), step * kq as f64) };
    SpherePoint::from_zw(z, w)
}

/// Inverse of `q` modulo `p`; `p` and `q` must be coprime.
fn inverse_mod(q: i64, p: i64) -> i64 {
    let q = q.rem_euclid(p);
    (0..p).find(|k| (k * q).rem_euclid(p) == 1 % p).unwrap_or(0)
}

/// Deck index taking `x` into the canonical sector.
fn canonical_index(x: &SpherePoint, p: i64, q: i64) -> i64 {
    let sector = 2.0 * PI / p as f64;
    if x.q0.hypot(x.q3) > FIBER_TOL {
        let theta = x.q3.atan2(x.q0);
        ((-PI / p as f64 - TIE_TOL - theta) / sector).ceil() as i64
    } else {
        // circle z = 0: rotate w by ε^{kq} into arg w ∈ [0, 2π/p)
        let phi = x.q2.atan2(x.q1);
        let j = ((-TIE_TOL - phi) / sector).ceil() as i64;
        j * inverse_mod(q, p)
    }
}

/// Canonical representative of the orbit of `x` inside the model domain.
///
/// Ties on the glued faces `arg z = ±π/p` resolve to `arg z = −π/p`
/// (`q3 ≤ 0`); on the circle `z = 0` the representative has
/// `arg w ∈ [0, 2π/p)`. For `p = 1` this is the identity.
pub fn canonicalize(x: &SpherePoint, p: i64, q: i64) -> LensPoint {
    if p == 1 {
        return LensPoint { rep: *x, p, q };
    }
    let k = canonical_index(x, p, q);
    LensPoint { rep: deck_transform(x, k, p, q), p, q }
}

/// True when `x` lies in the closed model domain up to `tol`.
pub fn in_model_domain(x: &SpherePoint, p: i64, tol: f64) -> bool {
    if p == 1 {
        return true;
    }
    let s = (PI / p as f64).sin();
    x.q1 * x.q1 + x.q2 * x.q2 + x.q3 * x.q3 / (s * s) <= 1.0 + tol && x.q0 >= -tol
}

/// `min_k |a − [k]·b|` over the `p` deck images of `b`.
///
/// Symmetric, zero exactly on a common orbit, and a metric on the quotient.
pub fn lens_chordal_distance(a: &SpherePoint, b: &SpherePoint, p: i64, q: i64) -> f64 {
    (0..p)
        .map(|k| a.chordal(&deck_transform(b, k, p, q)))
        .fold(f64::INFINITY, f64::min)
}

/// The two linear forms cutting out the lens boundary:
/// `ℓ₋ = q3·cos(π/p) − q0·sin(π/p)` and `ℓ₊ = q3·cos(π/p) + q0·sin(π/p)`.
///
/// `x` is on the boundary when `ℓ₋·ℓ₊ = 0` and `q0 ≥ 0`. Requires `p ≥ 2`;
/// for `p = 1` both forms collapse onto `q3` and the boundary is the sphere
/// `q3 = 0`, handled in [`crate::times`].
pub fn boundary_defect(x: &SpherePoint, p: i64) -> Result<(f64, f64)> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!(
            "boundary_defect needs p >= 2, got {p}"
        )));
    }
    let (s, c) = (PI / p as f64).sin_cos();
    Ok((x.q3 * c - x.q0 * s, x.q3 * c + x.q0 * s))
}

/// Product `ℓ₋·ℓ₊`; vanishes on the boundary surface. For `p = 1` returns `q3²`.
pub fn boundary_product(x: &SpherePoint, p: i64) -> f64 {
    match boundary_defect(x, p) {
        Ok((m, pl)) => m * pl,
        Err(_) => x.q3 * x.q3,
    }
}
