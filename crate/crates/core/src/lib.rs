//! Geodesics, conjugate times, Maxwell times, cut times, cut loci and diameter
//! bounds for axisymmetric (Berger) Riemannian metrics on lens spaces `L(p;q)`.
//!
//! The lens space is modelled as `S³ ≅ SU₂` divided by the cyclic action
//! `[k]·(z, w) = (εᵏ z, ε^{kq} w)`, `ε = e^{2πi/p}`, with `z = q0 + i·q3` and
//! `w = q1 + i·q2`. The metric is left-invariant on `SU₂` with moments
//! `(I1, I1, I3)`; its oblateness is `η = I1/I3 − 1 ∈ (−1, ∞)`.
//!
//! Geodesics from the identity are parametrized by a unit covector direction
//! `(h̄1, h̄2, h̄3)` and the rescaled time `τ = |h|·t / (2·I1)`, in which the
//! exponential map is a closed trigonometric expression. Everything measured
//! in arclength (`t`) is converted through [`metric::t_of_tau`].
//!
//! Modules, bottom-up:
//!
//! | module | contents |
//! |--------|----------|
//! | [`algebra`] | points of `S³`, the deck action, canonical representatives, quotient chordal distance |
//! | [`metric`] | metric parameters, initial covectors, `τ ↔ t` |
//! | [`geodesic`] | closed-form exponential map on `SU₂` and on the lens space |
//! | [`roots`] | first-positive-root scanning with bisection refinement |
//! | [`times`] | boundary functions `ℓ±`, Maxwell, conjugate and cut times |
//! | [`locus`] | cut-locus sampling, the sub-Riemannian limit sweep, CSV export |
//! | [`diameter`] | closed-form diameter bounds and a numeric maximizer |
//! | [`oracle`] | brute-force shooting distance, cut-point and Maxwell-partner checks |
//! | [`validate`] | the self-check report behind `berger-lens validate` |
//! | [`cli`] | command-line front end |
//!
//! Grid sweeps run on rayon when the `parallel` feature is enabled (default);
//! see [`parallel::Execution`].

pub mod algebra;
pub mod cli;
pub mod diameter;
pub mod error;
pub mod geodesic;
pub mod locus;
pub mod metric;
pub mod numfmt;
pub mod oracle;
pub mod parallel;
pub mod roots;
pub mod times;
pub mod validate;

pub use algebra::{LensPoint, SpherePoint};
pub use error::{Error, Result};
pub use metric::{InitialCovector, MetricParams};
pub use parallel::Execution;
