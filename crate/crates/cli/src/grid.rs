use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

/// A one-dimensional sample grid: an evenly spaced range or explicit values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Grid {
    Range {
        min: f64,
        max: f64,
        count: usize,
        #[serde(default)]
        spacing: Spacing,
    },
    Values(Vec<f64>),
}

impl Grid {
    pub fn single(v: f64) -> Self {
        Grid::Values(vec![v])
    }

    pub fn validate(&self, what: &str) -> CliResult<()> {
        match *self {
            Grid::Range {
                min,
                max,
                count,
                spacing,
            } => {
                if !(min.is_finite() && max.is_finite()) || min >= max {
                    return Err(CliError::usage(format!("{what} grid needs min < max, got {min}:{max}")));
                }
                if count < 2 {
                    return Err(CliError::usage(format!("{what} grid needs at least 2 points, got {count}")));
                }
                if spacing == Spacing::Log && min <= 0.0 {
                    return Err(CliError::usage(format!("{what} log grid needs min > 0, got {min}")));
                }
            }
            Grid::Values(ref v) => {
                if v.is_empty() || v.iter().any(|x| !x.is_finite()) {
                    return Err(CliError::usage(format!("{what} grid needs finite values")));
                }
            }
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        match *self {
            Grid::Values(ref v) => v.clone(),
            Grid::Range {
                min,
                max,
                count,
                spacing,
            } => {
                let (lo, hi) = match spacing {
                    Spacing::Linear => (min, max),
                    Spacing::Log => (min.ln(), max.ln()),
                };
                (0..count)
                    .map(|i| {
                        // pin the end points so they are exactly min and max
                        if i == 0 {
                            return min;
                        }
                        if i == count - 1 {
                            return max;
                        }
                        let t = lo + (hi - lo) * i as f64 / (count - 1) as f64;
                        match spacing {
                            Spacing::Linear => t,
                            Spacing::Log => t.exp(),
                        }
                    })
                    .collect()
            }
        }
    }

    pub fn min(&self) -> f64 {
        self.values().into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values().into_iter().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Parses `min:max:count` or `min:max:count:log`.
impl FromStr for Grid {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || CliError::usage(format!("expected min:max:count[:log|:linear], got '{s}'"));
        if !(3..=4).contains(&parts.len()) {
            return Err(bad());
        }
        let min = parts[0].trim().parse::<f64>().map_err(|_| bad())?;
        let max = parts[1].trim().parse::<f64>().map_err(|_| bad())?;
        let count = parts[2].trim().parse::<usize>().map_err(|_| bad())?;
        let spacing = match parts.get(3).map(|p| p.trim()) {
            None | Some("linear") | Some("lin") => Spacing::Linear,
            Some("log") => Spacing::Log,
            Some(_) => return Err(bad()),
        };
        Ok(Grid::Range {
            min,
            max,
            count,
            spacing,
        })
    }
}
