//! Library side of the `qgeom` command: sweep specifications, record
//! formatting and figure presets.

pub mod error;
pub mod figure;
pub mod grid;
pub mod record;
pub mod spec;

pub use error::{exit, CliError, CliResult};
pub use grid::{Grid, Spacing};
pub use record::{fmt_num, run_sweep, write_csv, Record, SweepRow, COLUMNS};
pub use spec::{parse_outputs, Output, SweepConfig, SweepSpec, DEFAULT_ETA};
