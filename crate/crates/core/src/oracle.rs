//! Brute-force checks that do not use the closed-form cut time: shooting
//! distance, cut-point optimality and Maxwell-partner search.
//!
//! [`brute_distance`] marches every geodesic of a `(h̄3, φ)` grid in `τ`,
//! keeps the local minima of the quotient chordal distance to the target as
//! seeds and polishes each seed with a damped Gauss–Newton solve for the
//! direction and time that hit the target exactly. The reported distance is
//! the least arclength among polished hits.
//!
//! All grids are deterministic and every reduction runs in a fixed order, so
//! results are bit-identical in sequential and parallel mode.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Vector3};

use crate::algebra::{deck_transform, LensPoint, SpherePoint};
use crate::diameter::diameter_bound;
use crate::error::{Error, Result};
use crate::geodesic::{exp_lens, exp_su2, exp_su2_dir};
use crate::metric::{t_of_tau, tau_of_t, InitialCovector, MetricParams};
use crate::parallel::{map_indexed, map_slice, Execution};
use crate::times::maxwell_tau;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    pub n_h3: usize,
    pub n_phi: usize,
    /// Steps per `π` of rescaled time (divided further by `max(1, |η|)`).
    pub n_t: usize,
    /// Matching radius in quotient chordal distance.
    pub eps_match: f64,
    pub t_horizon: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { n_h3: 181, n_phi: 256, n_t: 512, eps_match: 1e-3, t_horizon: 4.0 * PI }
    }
}

impl OracleConfig {
    /// Default grids with the horizon at twice the diameter bound.
    pub fn for_params(params: &MetricParams) -> Self {
        OracleConfig { t_horizon: 2.0 * diameter_bound(params).value, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_h3 < 2 || self.n_phi < 2 || self.n_t < 2 {
            return Err(Error::InvalidArgument(format!("oracle grid sizes must be >= 2: {self:?}")));
        }
        if !(self.eps_match > 0.0 && self.t_horizon > 0.0 && self.t_horizon.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "eps_match and t_horizon must be positive: {self:?}"
            )));
        }
        Ok(())
    }
}

fn orbit(x: &SpherePoint, p: i64, q: i64) -> Vec<SpherePoint> {
    (0..p).map(|k| deck_transform(x, k, p, q)).collect()
}

/// Distance to the nearest lift and its index.
fn nearest_lift(x: &SpherePoint, lifts: &[SpherePoint]) -> (f64, usize) {
    let mut best = (f64::INFINITY, 0);
    for (k, l) in lifts.iter().enumerate() {
        let d = x.chordal(l);
        if d < best.0 {
            best = (d, k);
        }
    }
    best
}

fn unit_dir(h3: f64, phi: f64) -> [f64; 3] {
    let r = (1.0 - h3 * h3).max(0.0).sqrt();
    let (s, c) = phi.sin_cos();
    [r * c, r * s, h3]
}

#[derive(Clone, Copy, Debug)]
struct Seed {
    dir: [f64; 3],
    tau: f64,
    lift: usize,
}

/// Orthonormal pair spanning the tangent plane of `S²` at `d`.
fn tangent_basis(d: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    let v = Vector3::from(*d);
    let axis = if d[2].abs() < 0.9 { Vector3::z() } else { Vector3::x() };
    let e1 = v.cross(&axis).normalize();
    let e2 = v.cross(&e1);
    (e1.into(), e2.into())
}

struct Shot<'a> {
    d0: [f64; 3],
    e1: [f64; 3],
    e2: [f64; 3],
    eta: f64,
    target: &'a SpherePoint,
}

impl Shot<'_> {
    fn dir(&self, a: f64, b: f64) -> [f64; 3] {
        let v = [0, 1, 2].map(|i| self.d0[i] + a * self.e1[i] + b * self.e2[i]);
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        v.map(|x| x / n)
    }

    fn residual(&self, x: &Vector3<f64>) -> [f64; 4] {
        let y = exp_su2_dir(&self.dir(x[0], x[1]), x[2], self.eta);
        let t = self.target;
        [y.q0 - t.q0, y.q1 - t.q1, y.q2 - t.q2, y.q3 - t.q3]
    }
}

fn norm4(r: &[f64; 4]) -> f64 {
    r.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Damped Gauss–Newton on `(a, b, τ)`; returns the final direction, `τ`
/// and residual.
fn polish(seed: &Seed, lifts: &[SpherePoint], eta: f64) -> ([f64; 3], f64, f64) {
    let (e1, e2) = tangent_basis(&seed.dir);
    let shot = Shot { d0: seed.dir, e1, e2, eta, target: &lifts[seed.lift] };
    let mut x = Vector3::new(0.0, 0.0, seed.tau);
    let mut r = shot.residual(&x);
    let mut rn = norm4(&r);
    let mut lambda = 1e-3;
    let h = 1e-7;
    for _ in 0..100 {
        if rn < 1e-14 {
            break;
        }
        let mut jac = [[0.0; 3]; 4];
        for j in 0..3 {
            let mut xp = x;
            let mut xm = x;
            xp[j] += h;
            xm[j] -= h;
            let rp = shot.residual(&xp);
            let rm = shot.residual(&xm);
            for i in 0..4 {
                jac[i][j] = (rp[i] - rm[i]) / (2.0 * h);
            }
        }
        let mut jtj = Matrix3::zeros();
        let mut jtr = Vector3::zeros();
        for i in 0..4 {
            for a in 0..3 {
                jtr[a] += jac[i][a] * r[i];
                for b in 0..3 {
                    jtj[(a, b)] += jac[i][a] * jac[i][b];
                }
            }
        }
        let mut improved = false;
        for _ in 0..20 {
            let mut m = jtj;
            for a in 0..3 {
                m[(a, a)] += lambda * (jtj[(a, a)] + 1e-12);
            }
            let Some(step) = m.lu().solve(&(-jtr)) else {
                lambda *= 10.0;
                continue;
            };
            let mut xn = x + step;
            xn[2] = xn[2].max(0.0);
            let rnew = shot.residual(&xn);
            let rnn = norm4(&rnew);
            if rnn < rn {
                let small = (xn - x).norm() < 1e-15;
                x = xn;
                r = rnew;
                rn = rnn;
                lambda = (lambda / 3.0).max(1e-12);
                improved = !small;
                break;
            }
            lambda *= 4.0;
        }
        if !improved {
            break;
        }
    }
    (shot.dir(x[0], x[1]), x[2], rn)
}

/// Shooting estimate of the distance from `o` to `target`.
///
/// Returns the least arclength `t` among grid-seeded geodesics whose
/// polished endpoint lies within `cfg.eps_match` of the target orbit, or
/// [`Error::NotReached`] if no geodesic up to `cfg.t_horizon` gets there.
pub fn brute_distance(
    target: &LensPoint,
    params: &MetricParams,
    cfg: &OracleConfig,
    exec: Execution,
) -> Result<f64> {
    cfg.validate()?;
    let (p, q) = (params.p, params.q);
    let lifts = orbit(&target.rep.normalized(), p, q);
    if nearest_lift(&SpherePoint::IDENTITY, &lifts).0 < 1e-12 {
        return Ok(0.0);
    }
    let eta = params.eta();
    let dtau = PI / cfg.n_t as f64 / eta.abs().max(1.0);
    let seed_radius = 0.25;
    let n_h3 = cfg.n_h3;
    let rows = map_indexed(exec, n_h3, |i| {
        let h3 = if i == n_h3 - 1 { 1.0 } else { -1.0 + 2.0 * i as f64 / (n_h3 - 1) as f64 };
        let n_phi = if h3.abs() == 1.0 { 1 } else { cfg.n_phi };
        let tau_max = tau_of_t(cfg.t_horizon, h3, params);
        let steps = (tau_max / dtau).ceil() as usize;
        let mut seeds = Vec::new();
        for j in 0..n_phi {
            let dir = unit_dir(h3, 2.0 * PI * j as f64 / cfg.n_phi as f64);
            let mut prev2 = f64::INFINITY;
            let mut prev = nearest_lift(&exp_su2_dir(&dir, 0.0, eta), &lifts);
            for k in 1..=steps + 1 {
                let cur = nearest_lift(&exp_su2_dir(&dir, k as f64 * dtau, eta), &lifts);
                if prev.0 < seed_radius && prev.0 <= prev2 && prev.0 < cur.0 && k >= 2 {
                    seeds.push(Seed { dir, tau: (k - 1) as f64 * dtau, lift: prev.1 });
                }
                prev2 = prev.0;
                prev = cur;
            }
        }
        seeds
    });
    let seeds: Vec<Seed> = rows.into_iter().flatten().collect();
    let hits = map_slice(exec, &seeds, |s| {
        let (dir, tau, res) = polish(s, &lifts, eta);
        (res < cfg.eps_match).then(|| t_of_tau(tau, dir[2].clamp(-1.0, 1.0), params))
    });
    hits.into_iter()
        .flatten()
        .fold(None, |acc: Option<f64>, t| Some(acc.map_or(t, |a| a.min(t))))
        .ok_or(Error::NotReached { horizon: cfg.t_horizon })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutPointReport {
    pub t_cut: f64,
    pub t_before: f64,
    pub t_after: f64,
    pub d_before: f64,
    pub d_after: f64,
    /// Nothing reaches the endpoint at `(1−δ)·t_cut` noticeably faster.
    pub optimal_before: bool,
    /// Something reaches the endpoint at `(1+δ)·t_cut` noticeably faster.
    pub beaten_after: bool,
    /// Smallest distance to flipping either verdict; positive when both hold.
    pub margin: f64,
}

/// Checks that the geodesic of `c` is minimizing slightly before its cut
/// time and not minimizing slightly after it.
///
/// The search horizon for each target is `1.1` times the target time.
/// Comparisons use the slack `2·√max(I1, I3)·eps_match + 1e−9·t`.
pub fn verify_cut_point(
    c: &InitialCovector,
    params: &MetricParams,
    delta: f64,
    cfg: &OracleConfig,
    exec: Execution,
) -> Result<CutPointReport> {
    if !(delta > 0.0 && delta < 0.2) {
        return Err(Error::InvalidArgument(format!("delta must lie in (0, 0.2), got {delta}")));
    }
    let t_cut = t_of_tau(maxwell_tau(c.h3bar, params)?.0, c.h3bar, params);
    let t_before = (1.0 - delta) * t_cut;
    let t_after = (1.0 + delta) * t_cut;
    let dist = |t: f64| {
        let target = exp_lens(c, t, params);
        let sub = OracleConfig { t_horizon: 1.1 * t, ..*cfg };
        brute_distance(&target, params, &sub, exec)
    };
    let d_before = dist(t_before)?;
    let d_after = dist(t_after)?;
    let unit = 2.0 * params.i1.max(params.i3).sqrt() * cfg.eps_match;
    let slack_b = unit + 1e-9 * t_before;
    let slack_a = unit + 1e-9 * t_after;
    Ok(CutPointReport {
        t_cut,
        t_before,
        t_after,
        d_before,
        d_after,
        optimal_before: d_before >= t_before - slack_b,
        beaten_after: d_after < t_after - slack_a,
        margin: (d_before - (t_before - slack_b)).min((t_after - slack_a) - d_after),
    })
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

fn golden_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (f(x), x)
}

/// Chord between covector directions below which a candidate counts as
/// the geodesic itself.
const SAME_COVECTOR: f64 = 0.05;

/// Grid values closer than this count as ties when locating minima; on the
/// rotation stratum the whole circle of endpoints coincides up to rounding.
const FLAT: f64 = 1e-14;

/// [`find_maxwell_partner_at`] at the first Maxwell time of `c`.
pub fn find_maxwell_partner(
    c: &InitialCovector,
    params: &MetricParams,
    cfg: &OracleConfig,
) -> Result<(InitialCovector, f64)> {
    let (tau, _) = maxwell_tau(c.h3bar, params)?;
    find_maxwell_partner_at(c, tau, params, cfg)
}

/// Best covector `(±h̄3, φ′)`, distinct from `c`, whose geodesic reaches the
/// same lens point as `c` at rescaled time `tau`.
///
/// Candidates within a direction chord of `0.05` of `c` are skipped. Fails
/// with [`Error::NoPartner`] when the best mismatch exceeds `cfg.eps_match`.
pub fn find_maxwell_partner_at(
    c: &InitialCovector,
    tau: f64,
    params: &MetricParams,
    cfg: &OracleConfig,
) -> Result<(InitialCovector, f64)> {
    cfg.validate()?;
    if params.p < 2 {
        return Err(Error::InvalidParams("Maxwell partner search needs p >= 2".into()));
    }
    let eta = params.eta();
    let lifts = orbit(&exp_su2(c, tau, eta), params.p, params.q);
    let own = c.direction();
    let same = |d: &[f64; 3]| {
        let s: f64 = (0..3).map(|i| (d[i] - own[i]).powi(2)).sum();
        s.sqrt() < SAME_COVECTOR
    };
    let mut best: Option<(f64, InitialCovector)> = None;
    let mut consider = |m: f64, cand: InitialCovector| {
        if best.is_none_or(|(b, _)| m < b) {
            best = Some((m, cand));
        }
    };
    let mut branches = vec![c.h3bar];
    if c.h3bar != 0.0 {
        branches.push(-c.h3bar);
    }
    let n = cfg.n_phi;
    let step = 2.0 * PI / n as f64;
    for h3 in branches {
        let f = |phi: f64| nearest_lift(&exp_su2_dir(&unit_dir(h3, phi), tau, eta), &lifts).0;
        if h3.abs() == 1.0 {
            if !same(&unit_dir(h3, 0.0)) {
                consider(f(0.0), InitialCovector::new(h3, 0.0)?);
            }
            continue;
        }
        let vals: Vec<f64> = (0..n).map(|j| f(step * j as f64)).collect();
        for j in 0..n {
            let phi = step * j as f64;
            let (l, r) = (vals[(j + n - 1) % n], vals[(j + 1) % n]);
            if same(&unit_dir(h3, phi)) || vals[j] > l + FLAT || vals[j] > r + FLAT {
                continue;
            }
            let (m, x) = golden_min(f, phi - step, phi + step, 1e-13);
            let (m, x) = if m <= vals[j] { (m, x) } else { (vals[j], phi) };
            if !same(&unit_dir(h3, x)) {
                consider(m, InitialCovector::new(h3, x)?);
            }
        }
    }
    match best {
        Some((m, cand)) if m <= cfg.eps_match => Ok((cand, m)),
        Some((m, _)) => Err(Error::NoPartner { mismatch: m }),
        None => Err(Error::NoPartner { mismatch: f64::INFINITY }),
    }
}
