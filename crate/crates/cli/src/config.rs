//! Run configuration (JSON). Unknown keys are rejected everywhere; every
//! omitted field takes the default recorded in the emitted report.

use std::path::Path;

use geoflow_core::actions::Scenario;
use geoflow_core::verify::{Tolerances, DEFAULT_LAMBDAS};
use geoflow_core::{AlgebraSpec, IntegratorConfig, MetricSide, MetricSpec, SectionalOperator};
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub scenario: Scenario,
    #[serde(default)]
    pub metric: MetricConfig,
    #[serde(default)]
    pub integrator: IntegratorConfig,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default = "default_lambdas")]
    pub lambdas: Vec<f64>,
    #[serde(default)]
    pub checks: ChecksConfig,
    #[serde(default)]
    pub simulate: SimulateConfig,
    /// Not echoed: reports must not depend on where they are written.
    #[serde(default, skip_serializing)]
    pub output: OutputConfig,
}

fn default_lambdas() -> Vec<f64> {
    DEFAULT_LAMBDAS.to_vec()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MetricConfig {
    pub left: SideConfig,
    pub right: SideConfig,
}

impl Default for MetricConfig {
    fn default() -> Self {
        Self {
            left: SideConfig::Identity {},
            right: SideConfig::None {},
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SideConfig {
    // empty struct variants so that stray keys are rejected
    None {},
    Identity {},
    /// Cartan data for `a`, `b`; `d` defaults to the identity on `t`.
    Sectional {
        a: Vec<f64>,
        b: Vec<f64>,
        #[serde(default)]
        d: Option<Vec<Vec<f64>>>,
    },
}

impl SideConfig {
    fn build(&self, spec: &std::sync::Arc<AlgebraSpec>) -> Result<MetricSide, CliError> {
        Ok(match self {
            SideConfig::None {} => MetricSide::None,
            SideConfig::Identity {} => MetricSide::Identity,
            SideConfig::Sectional { a, b, d } => {
                let r = spec.rank();
                let d = match d {
                    None => DMatrix::identity(r, r),
                    Some(rows) => {
                        if rows.len() != r || rows.iter().any(|row| row.len() != r) {
                            return Err(CliError::Config(format!("metric d must be {r}x{r}")));
                        }
                        DMatrix::from_fn(r, r, |i, j| rows[i][j])
                    }
                };
                MetricSide::Sectional(std::sync::Arc::new(SectionalOperator::standard(spec, a, b, &d)?))
            }
        })
    }
}

impl MetricConfig {
    pub fn build(&self, spec: &std::sync::Arc<AlgebraSpec>) -> Result<MetricSpec, CliError> {
        Ok(MetricSpec::new(self.left.build(spec)?, self.right.build(spec)?)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ChecksConfig {
    pub completeness: Option<SamplesConfig>,
    pub regularity: Option<SamplesConfig>,
    pub torus: Option<TorusConfig>,
    pub conservation: Option<SamplesConfig>,
}

impl Default for ChecksConfig {
    fn default() -> Self {
        Self {
            completeness: Some(SamplesConfig { samples: 20 }),
            regularity: Some(SamplesConfig { samples: 100 }),
            torus: Some(TorusConfig {
                samples: 100,
                expect: None,
            }),
            conservation: Some(SamplesConfig { samples: 2 }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplesConfig {
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusConfig {
    pub samples: usize,
    /// Fail the check unless the computed dimension equals this.
    #[serde(default)]
    pub expect: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum InitialKind {
    /// Unit horizontal vector at the identity.
    #[default]
    Horizontal,
    /// Random group element and Gaussian momentum.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SimulateConfig {
    pub initial: InitialKind,
    pub momentum_scale: f64,
}

impl Default for SimulateConfig {
    fn default() -> Self {
        Self {
            initial: InitialKind::Horizontal,
            momentum_scale: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputConfig {
    pub dir: String,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self {
            dir: "geoflow-out".into(),
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.integrator.validate()?;
        let t = &self.tolerances;
        for (name, v) in [
            ("tol_rank", t.tol_rank),
            ("drift", t.drift),
            ("moment", t.moment),
            ("reconstruction", t.reconstruction),
            ("bracket", t.bracket),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Config(format!("tolerance {name} must be positive")));
            }
        }
        if !(self.simulate.momentum_scale > 0.0 && self.simulate.momentum_scale.is_finite()) {
            return Err(CliError::Config("momentum_scale must be positive".into()));
        }
        if self.lambdas.iter().any(|l| !l.is_finite()) {
            return Err(CliError::Config("lambdas must be finite".into()));
        }
        Ok(())
    }
}
