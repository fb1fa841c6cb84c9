//! Grids behind the published figures. The ranges of the contour plots are not
//! stated with the figures; these presets use `β ∈ [0.1, 5]` (log) and
//! `ξ ∈ [0.01, 5]` for fermions, `ξ ∈ [0.01, 0.99]` for bosons, in `κ = 1` units.

use qgeom::gas::{GasModel, Statistics};

use crate::error::{CliError, CliResult};
use crate::grid::{Grid, Spacing};
use crate::spec::{Output, SweepSpec};

pub const FIGURES: std::ops::RangeInclusive<u32> = 1..=6;

const ETAS: [f64; 2] = [0.5, 2.0];

fn range(min: f64, max: f64, count: usize, spacing: Spacing) -> Grid {
    Grid::Range {
        min,
        max,
        count,
        spacing,
    }
}

fn fd_xi(count: usize) -> Grid {
    range(0.01, 5.0, count, Spacing::Linear)
}

fn be_xi(count: usize) -> Grid {
    range(0.01, 0.99, count, Spacing::Linear)
}

fn contour_beta() -> Grid {
    range(0.1, 5.0, 40, Spacing::Log)
}

/// `β` values of the line plots for bosons.
fn beta_family() -> Grid {
    range(0.1, 10.0, 5, Spacing::Log)
}

pub fn figure_specs(n: u32) -> CliResult<Vec<SweepSpec>> {
    let plan: Vec<(Statistics, Grid, Grid)> = match n {
        // ḡ_f and R̄_f depend on ξ only
        1 | 2 => vec![(Statistics::FermiDirac, Grid::single(1.0), fd_xi(200))],
        3 => vec![(Statistics::FermiDirac, contour_beta(), fd_xi(40))],
        4 => vec![(Statistics::BoseEinstein, beta_family(), be_xi(99))],
        5 => vec![
            (Statistics::BoseEinstein, beta_family(), be_xi(99)),
            (Statistics::BoseEinsteinNoGround, beta_family(), be_xi(99)),
        ],
        6 => vec![
            (Statistics::BoseEinstein, contour_beta(), be_xi(40)),
            (Statistics::BoseEinsteinNoGround, contour_beta(), be_xi(40)),
        ],
        _ => return Err(CliError::usage(format!("figure must be 1 to 6, got {n}"))),
    };
    let mut specs = Vec::new();
    for (stat, beta, xi) in plan {
        for eta in ETAS {
            let model = GasModel::new(stat, eta, 1.0)?;
            specs.push(SweepSpec::new(model, beta.clone(), xi.clone(), Output::all())?);
        }
    }
    Ok(specs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_figure_has_a_valid_preset() {
        for n in FIGURES {
            let specs = figure_specs(n).unwrap();
            assert!(!specs.is_empty());
        }
        assert!(figure_specs(0).is_err());
        assert!(figure_specs(7).is_err());
    }
}
