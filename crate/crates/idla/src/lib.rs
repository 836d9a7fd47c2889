//! One-dimensional internal diffusion-limited aggregation (IDLA), exactly
//! and by simulation.
//!
//! Particles drop one at a time onto the origin of the integer line and
//! random-walk until they first reach an unoccupied site, which they occupy.
//! This crate computes the resulting combinatorics without rounding — the
//! law of the final shape is an Eulerian-number distribution, expected toss
//! counts have cubic closed forms, and a biased coin refines everything by
//! the major-index q-analog — and pairs every closed form with an
//! independent route: permutation enumeration, first-step linear solves,
//! generating-function expansion, and seeded Monte Carlo.
//!
//! Modules:
//! - [`algebra`]: arbitrary-precision rationals, polynomials, truncated
//!   series. No floating point.
//! - [`eulerian`]: Eulerian triangle by recurrence and by brute force;
//!   bivariate polynomials; major-index q-analogs.
//! - [`chain`]: the exact Markov engine for the game itself.
//! - [`runtime`]: closed-form run times and generating-function checks.
//! - [`montecarlo`]: seeded, reproducible simulation.
//! - [`stats`]: goodness-of-fit metrics for simulator output.
//! - [`verify`]: one-shot identity suites wiring the routes together.
//! - [`cli`]: stable CSV/JSON envelopes for the `idla` binary.

pub mod algebra;
pub mod chain;
pub mod cli;
pub mod eulerian;
pub mod montecarlo;
pub mod runtime;
pub mod stats;
pub mod verify;
