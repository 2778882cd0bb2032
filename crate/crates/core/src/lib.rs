//! Simulation and analysis toolkit for sampling invariant measures of
//! mean-field (distribution-dependent) diffusions through self-interacting,
//! path-dependent dynamics.
//!
//! The crate is organised around the pipeline used by the experiment runner:
//!
//! * [`model`] — drift models with a dissipativity profile `kappa`, the
//!   auxiliary comparison function built from it, and statistical checkers
//!   for the structural assumptions (dissipativity, weak interaction).
//! * [`measures`] — weighted empirical (occupation) measures and the weight
//!   families that generate them, together with the singular-moment
//!   integrals used to classify admissible families.
//! * [`integrator`] — tamed Euler–Maruyama simulation of Markovian,
//!   self-interacting and mean-field particle systems, plus a reflection
//!   coupling of two diffusions; all randomness is counter-based so runs
//!   are reproducible at any thread count.
//! * [`metrics`] — exact 1-D Wasserstein-1 distances between empirical
//!   measures and against reference densities.
//! * [`analysis`] — reference stationary densities, contraction and rate
//!   bound calculators, and log-log slope regression.

pub mod analysis;
pub mod error;
pub mod integrator;
pub mod measures;
pub mod metrics;
pub mod model;
pub mod quad;

pub use error::{Error, Result};
