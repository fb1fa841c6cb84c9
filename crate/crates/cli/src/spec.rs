use std::collections::BTreeSet;
use std::path::Path;
use std::str::FromStr;

use qgeom::gas::{GasModel, Statistics};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::grid::Grid;

/// Groups of quantities that can be requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    /// `g11, g12, g22`
    Metric,
    /// `det_g`
    Det,
    /// `R`
    Curvature,
    /// `g_bar`
    Gbar,
    /// `R_bar`
    Rbar,
    /// `U, N`
    Averages,
}

impl Output {
    pub const ALL: [Output; 6] = [
        Output::Metric,
        Output::Det,
        Output::Curvature,
        Output::Gbar,
        Output::Rbar,
        Output::Averages,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Output::Metric => "metric",
            Output::Det => "det",
            Output::Curvature => "curvature",
            Output::Gbar => "gbar",
            Output::Rbar => "rbar",
            Output::Averages => "averages",
        }
    }

    pub fn all() -> BTreeSet<Output> {
        Output::ALL.into_iter().collect()
    }
}

impl FromStr for Output {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Output::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| CliError::usage(format!("unknown output '{s}' (metric, det, curvature, gbar, rbar, averages)")))
    }
}

/// Parses a comma-separated output list; the empty string is the empty set.
pub fn parse_outputs(s: &str) -> CliResult<BTreeSet<Output>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::parse)
        .collect()
}

/// Density-of-states exponent used when none is given.
pub const DEFAULT_ETA: f64 = 0.5;

/// A validated grid sweep over `(β, ξ)` for one gas model.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub model: GasModel,
    pub beta_grid: Grid,
    pub xi_grid: Grid,
    pub outputs: BTreeSet<Output>,
}

impl SweepSpec {
    pub fn new(model: GasModel, beta_grid: Grid, xi_grid: Grid, outputs: BTreeSet<Output>) -> CliResult<Self> {
        beta_grid.validate("β")?;
        xi_grid.validate("ξ")?;
        if beta_grid.min() <= 0.0 {
            return Err(CliError::usage(format!("β must be > 0, grid starts at {}", beta_grid.min())));
        }
        if xi_grid.min() <= 0.0 {
            return Err(CliError::usage(format!("ξ must be > 0, grid starts at {}", xi_grid.min())));
        }
        if model.statistics().is_bosonic() && xi_grid.max() >= 1.0 {
            return Err(CliError::usage(format!(
                "{} statistics need ξ < 1, grid reaches {}",
                model.statistics(),
                xi_grid.max()
            )));
        }
        Ok(SweepSpec {
            model,
            beta_grid,
            xi_grid,
            outputs,
        })
    }

    /// Grid points in row-major order: `β` outer, `ξ` inner.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let xis = self.xi_grid.values();
        self.beta_grid
            .values()
            .into_iter()
            .flat_map(|b| xis.iter().map(move |&x| (b, x)))
            .collect()
    }
}

/// JSON form of a sweep; every field is optional so command-line flags can
/// fill in or override it.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub stat: Option<String>,
    pub eta: Option<f64>,
    pub kappa: Option<f64>,
    pub beta_grid: Option<Grid>,
    pub xi_grid: Option<Grid>,
    pub outputs: Option<BTreeSet<Output>>,
}

impl SweepConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Fields set in `over` replace those in `self`.
    pub fn merged(self, over: SweepConfig) -> SweepConfig {
        SweepConfig {
            stat: over.stat.or(self.stat),
            eta: over.eta.or(self.eta),
            kappa: over.kappa.or(self.kappa),
            beta_grid: over.beta_grid.or(self.beta_grid),
            xi_grid: over.xi_grid.or(self.xi_grid),
            outputs: over.outputs.or(self.outputs),
        }
    }

    /// `η` defaults to 1/2 (three-dimensional box), `κ` to 1 and the outputs to
    /// all of them; the statistics and both grids are required.
    pub fn into_spec(self) -> CliResult<SweepSpec> {
        let stat: Statistics = self
            .stat
            .ok_or_else(|| CliError::usage("missing --stat"))?
            .parse()?;
        let eta = self.eta.unwrap_or(DEFAULT_ETA);
        let model = GasModel::new(stat, eta, self.kappa.unwrap_or(1.0))?;
        let beta_grid = self.beta_grid.ok_or_else(|| CliError::usage("missing --beta-grid or --beta"))?;
        let xi_grid = self.xi_grid.ok_or_else(|| CliError::usage("missing --xi-grid or --xi"))?;
        SweepSpec::new(model, beta_grid, xi_grid, self.outputs.unwrap_or_else(Output::all))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn output_lists() {
        assert!(parse_outputs("").unwrap().is_empty());
        let o = parse_outputs("metric, rbar").unwrap();
        assert_eq!(o.into_iter().collect::<Vec<_>>(), vec![Output::Metric, Output::Rbar]);
        assert!(parse_outputs("metric,entropy").is_err());
    }

    #[test]
    fn flags_override_file() {
        let file: SweepConfig = serde_json::from_str(
            r#"{"stat": "fd", "eta": 0.5, "beta_grid": [1.0], "xi_grid": {"min": 0.1, "max": 1, "count": 3}}"#,
        )
        .unwrap();
        let flags = SweepConfig {
            eta: Some(2.0),
            ..Default::default()
        };
        let spec = file.merged(flags).into_spec().unwrap();
        assert_eq!(spec.model.eta(), 2.0);
        assert_eq!(spec.model.kappa(), 1.0);
        assert_eq!(spec.points().len(), 3);
        assert_eq!(spec.outputs, Output::all());
    }

    #[test]
    fn bosonic_grids_stay_below_one() {
        let m = GasModel::new(Statistics::BoseEinstein, 0.5, 1.0).unwrap();
        let xi: Grid = "0.1:1:4".parse().unwrap();
        assert!(SweepSpec::new(m, Grid::single(1.0), xi, Output::all()).is_err());
        let xi: Grid = "0.1:0.9:4".parse().unwrap();
        assert!(SweepSpec::new(m, Grid::single(1.0), xi, Output::all()).is_ok());
    }

    #[test]
    fn unknown_config_fields_are_rejected() {
        assert!(serde_json::from_str::<SweepConfig>(r#"{"stat": "fd", "colour": 3}"#).is_err());
    }
}
