use std::collections::BTreeSet;
use std::io::Write;

use qgeom::gas::{averages, geometry_sample, GasModel, ThermoPoint};
use rayon::prelude::*;

use crate::error::CliResult;
use crate::spec::{Output, SweepSpec};

/// Sweep CSV header; an `error` column is appended when any point failed.
pub const COLUMNS: [&str; 14] = [
    "beta", "xi", "eta", "kappa", "stat", "g11", "g12", "g22", "det_g", "g_bar", "R", "R_bar", "U", "N",
];

/// Quantities at one point. Fields not requested are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub model: GasModel,
    pub beta: f64,
    pub xi: f64,
    pub g11: Option<f64>,
    pub g12: Option<f64>,
    pub g22: Option<f64>,
    pub det_g: Option<f64>,
    pub g_bar: Option<f64>,
    pub r: Option<f64>,
    pub r_bar: Option<f64>,
    pub energy: Option<f64>,
    pub particles: Option<f64>,
    pub warning: Option<String>,
}

/// 17 significant digits: enough to read back the identical `f64`.
pub fn fmt_num(v: f64) -> String {
    format!("{v:.16e}")
}

impl Record {
    pub fn evaluate(model: &GasModel, beta: f64, xi: f64, outputs: &BTreeSet<Output>) -> qgeom::Result<Record> {
        let p = ThermoPoint::new(beta, xi)?;
        let mut rec = Record {
            model: *model,
            beta,
            xi,
            g11: None,
            g12: None,
            g22: None,
            det_g: None,
            g_bar: None,
            r: None,
            r_bar: None,
            energy: None,
            particles: None,
            warning: None,
        };
        let geometric = [Output::Metric, Output::Det, Output::Curvature, Output::Gbar, Output::Rbar];
        if geometric.iter().any(|o| outputs.contains(o)) {
            let s = geometry_sample(model, p)?;
            if outputs.contains(&Output::Metric) {
                rec.g11 = Some(s.metric.g11);
                rec.g12 = Some(s.metric.g12);
                rec.g22 = Some(s.metric.g22);
            }
            if outputs.contains(&Output::Det) {
                rec.det_g = Some(s.det_g);
            }
            if outputs.contains(&Output::Gbar) {
                rec.g_bar = Some(s.g_bar);
            }
            if outputs.contains(&Output::Curvature) {
                rec.r = Some(s.r);
            }
            if outputs.contains(&Output::Rbar) {
                rec.r_bar = Some(s.r_bar);
            }
            rec.warning = s.warning.map(|w| format!("{w:?}"));
        }
        if outputs.contains(&Output::Averages) {
            let a = averages(model, p)?;
            rec.energy = Some(a.energy);
            rec.particles = Some(a.particles);
        }
        Ok(rec)
    }

    fn quantities(&self) -> [(&'static str, Option<f64>); 9] {
        [
            ("g11", self.g11),
            ("g12", self.g12),
            ("g22", self.g22),
            ("det_g", self.det_g),
            ("g_bar", self.g_bar),
            ("R", self.r),
            ("R_bar", self.r_bar),
            ("U", self.energy),
            ("N", self.particles),
        ]
    }

    /// `key=value` lines, requested quantities only.
    pub fn write_key_values(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "stat={}", self.model.statistics())?;
        writeln!(out, "eta={}", fmt_num(self.model.eta()))?;
        writeln!(out, "kappa={}", fmt_num(self.model.kappa()))?;
        writeln!(out, "beta={}", fmt_num(self.beta))?;
        writeln!(out, "xi={}", fmt_num(self.xi))?;
        for (key, v) in self.quantities() {
            if let Some(v) = v {
                writeln!(out, "{key}={}", fmt_num(v))?;
            }
        }
        if let Some(w) = &self.warning {
            writeln!(out, "warning={w}")?;
        }
        Ok(())
    }
}

/// One sweep row: the record or the reason the point failed.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub model: GasModel,
    pub beta: f64,
    pub xi: f64,
    pub result: Result<Record, String>,
}

/// Evaluates every grid point in parallel; rows come back in grid order.
pub fn run_sweep(spec: &SweepSpec) -> Vec<SweepRow> {
    if spec.outputs.is_empty() {
        return Vec::new();
    }
    spec.points()
        .into_par_iter()
        .map(|(beta, xi)| SweepRow {
            model: spec.model,
            beta,
            xi,
            result: Record::evaluate(&spec.model, beta, xi, &spec.outputs).map_err(|e| e.to_string()),
        })
        .collect()
}

/// Writes rows as CSV. Quantities not requested are left empty.
pub fn write_csv(rows: &[SweepRow], out: impl Write) -> CliResult<()> {
    let with_error = rows.iter().any(|r| r.result.is_err());
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = COLUMNS.to_vec();
    if with_error {
        header.push("error");
    }
    w.write_record(&header)?;
    for row in rows {
        let mut fields = vec![
            fmt_num(row.beta),
            fmt_num(row.xi),
            fmt_num(row.model.eta()),
            fmt_num(row.model.kappa()),
            row.model.statistics().to_string(),
        ];
        match &row.result {
            Ok(rec) => {
                fields.extend(rec.quantities().iter().map(|(_, v)| v.map(fmt_num).unwrap_or_default()));
                if with_error {
                    fields.push(String::new());
                }
            }
            Err(msg) => {
                fields.extend(std::iter::repeat_n(String::new(), 9));
                fields.push(msg.clone());
            }
        }
        w.write_record(&fields)?;
    }
    w.flush().map_err(|source| crate::error::CliError::Io {
        path: "output".into(),
        source,
    })?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use qgeom::gas::Statistics;

    fn spec(outputs: BTreeSet<Output>) -> SweepSpec {
        let m = GasModel::new(Statistics::FermiDirac, 0.5, 1.0).unwrap();
        SweepSpec::new(m, "0.5:2:3".parse().unwrap(), Grid::Values(vec![0.2, 0.9]), outputs).unwrap()
    }

    #[test]
    fn rows_follow_grid_order() {
        let rows = run_sweep(&spec(Output::all()));
        let order: Vec<(f64, f64)> = rows.iter().map(|r| (r.beta, r.xi)).collect();
        assert_eq!(order, spec(Output::all()).points());
        assert!(rows.iter().all(|r| r.result.is_ok()));
    }

    #[test]
    fn empty_output_set_gives_header_only() {
        let rows = run_sweep(&spec(BTreeSet::new()));
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), format!("{}\n", COLUMNS.join(",")));
    }

    #[test]
    fn failed_points_get_an_error_column() {
        let m = GasModel::new(Statistics::FermiDirac, 0.5, 1.0).unwrap();
        let ok = SweepRow {
            model: m,
            beta: 1.0,
            xi: 0.5,
            result: Record::evaluate(&m, 1.0, 0.5, &Output::all()).map_err(|e| e.to_string()),
        };
        let bad = SweepRow {
            model: m,
            beta: 1.0,
            xi: 0.5,
            result: Err("domain error in test: no, really".into()),
        };
        let mut buf = Vec::new();
        write_csv(&[ok, bad], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].ends_with(",N,error"));
        assert!(lines[1].ends_with(','));
        assert!(lines[2].ends_with("\"domain error in test: no, really\""));
    }

    #[test]
    fn numbers_round_trip() {
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 6.02e23, f64::MIN_POSITIVE] {
            assert_eq!(fmt_num(v).parse::<f64>().unwrap(), v);
        }
    }
}
