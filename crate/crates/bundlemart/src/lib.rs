//! Stochastic differential geometry lab.
//!
//! `bundlemart` simulates Brownian motion on chart-based Riemannian manifolds
//! and on principal/associated fiber bundles, evaluates geometric path
//! integrals (Itô with Christoffel correction, Stratonovich, quadratic), and
//! runs Monte-Carlo martingale tests that decide whether a section of an
//! associated bundle is harmonic.
//!
//! The library is organized around a handful of desk-scale models: the round
//! sphere, the flat torus, their orthonormal frame bundles, tangent bundles
//! with Sasaki / complete-lift / horizontal-lift connections, and the Hopf
//! bundle with its associated complex-line fibers.
//!
//! Entry points:
//! - [`geometry`] — charts, metrics, Christoffel symbols, geodesics, distances.
//! - [`stochastic`] — path simulation, the three geometric integrals, drift tests.
//! - [`bundles`] — matrix groups, connection forms, horizontal lifts, Kaluza–Klein metrics.
//! - [`sections`] — sections, equivariant lifts, tension fields, martingale tests.
//! - [`coupling`] — reflection coupling, coalesced processes, Liouville scans.
//! - [`models`] — the concrete model zoo.
//! - [`cli`] — experiment configs, reports, and the command-line front end.
//!
//! Every operation is a pure function of immutable model data; ensembles are
//! simulated with per-path counter-derived RNG streams so results are
//! reproducible regardless of thread count (`BUNDLEMART_THREADS`).

pub mod bundles;
pub mod cli;
pub mod config;
pub mod coupling;
pub mod error;
pub mod geometry;
pub mod models;
pub mod report;
pub mod sections;
pub mod stats;
pub mod stochastic;

pub use error::{Error, Result};
