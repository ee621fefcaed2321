//! Numerical certification of integrability structure for geodesic flows on
//! compact matrix Lie groups and their bi-quotients.
//!
//! The crate is organised bottom-up:
//!
//! * [`liealg`]: su(n), so(n), sp(n), their groups, centralizers and
//!   invariant polynomials.
//! * [`metrics`]: bi-invariant and sectional-operator Hamiltonians on the
//!   left-trivialized cotangent bundle.
//! * [`dynamics`]: Lie-group RK4 integration and conservation drift.
//! * [`actions`]: two-sided subgroup actions, moment maps and the built-in
//!   scenarios.
//! * [`verify`]: Poisson brackets, ddim/dind, completeness, horizontal
//!   regularity and torus dimensions.

pub mod actions;
pub mod dynamics;
pub mod error;
pub mod format;
pub mod liealg;
pub mod linalg;
pub mod metrics;
pub mod sampling;
pub mod verify;

pub use actions::{TwoSidedAction, VerticalData};
pub use dynamics::{CotangentState, IntegratorConfig, Trajectory};
pub use error::{Error, Result};
pub use liealg::{AlgebraElement, AlgebraSpec, Family, GroupElement, Subspace};
pub use linalg::RankPolicy;
pub use metrics::{MetricSide, MetricSpec, SectionalOperator};

/// Library version recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
