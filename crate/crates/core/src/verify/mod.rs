//! Certification engine: Poisson brackets, ddim/dind, completeness,
//! horizontal regularity, torus dimension and conservation certificates.

mod bracket;
mod completeness;
mod conservation;
mod integrals;
mod regularity;

use serde::{Deserialize, Serialize};

pub use bracket::{bracket_of_differentials, ddim_dind, differential_matrix, poisson_bracket, poisson_matrix, PointRank};
pub use completeness::{completeness_at, completeness_check, mode, sample_state, CompletenessReport, PointOutcome};
pub use conservation::{
    conservation_certificate, conservation_from, moment_levels, ConservationReport, QuantityDrift, TrajectoryCertificate,
};
pub use integrals::{numerical_differential, Integral, IntegralFamily, Side, DEFAULT_LAMBDAS, FD_STEP};
pub use regularity::{horizontal_regularity, torus_dimension, torus_dimension_over, RegularityReport, TorusReport};

use crate::linalg::{RankPolicy, DEFAULT_TOL_RANK};

/// Thresholds used by the checks; all are recorded in reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    /// Relative singular-value cutoff for every rank decision.
    pub tol_rank: f64,
    /// Relative drift of conserved quantities.
    pub drift: f64,
    /// Absolute drift of moment components.
    pub moment: f64,
    /// Closed-form or spatial reconstruction error.
    pub reconstruction: f64,
    /// Bracket identities.
    pub bracket: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            tol_rank: DEFAULT_TOL_RANK,
            drift: 1e-7,
            moment: 1e-7,
            reconstruction: 1e-6,
            bracket: 1e-6,
        }
    }
}

impl Tolerances {
    pub fn rank_policy(&self) -> RankPolicy {
        RankPolicy::new(self.tol_rank)
    }
}
