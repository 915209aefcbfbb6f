use std::path::Path;

use serde_json::{json, Value};

use super::experiment::{ExperimentReport, ReportRow};
use crate::error::{Error, Result};

/// Column order of the CSV report. `time_s` is the mean wall-clock time of
/// the forward plus inverse transform per mixture; it is the only column
/// that varies between identical runs.
pub const COLUMNS: [&str; 10] =
    ["decomposition", "params", "STOI", "SI-SDR", "SNR", "MSE", "time_s", "n_mixtures", "seed", "error"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            _ => Err(Error::invalid(format!("unknown report format '{s}' (csv or json)"))),
        }
    }
}

impl ReportFormat {
    /// Guesses the format from a file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> ReportFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => ReportFormat::Json,
            _ => ReportFormat::Csv,
        }
    }
}

/// Shortest round-trip decimal; infinities as `inf` / `-inf`; missing as an empty cell.
fn cell(v: Option<f64>) -> String {
    match v {
        None => String::new(),
        Some(x) if x == f64::INFINITY => "inf".into(),
        Some(x) if x == f64::NEG_INFINITY => "-inf".into(),
        Some(x) => format!("{x}"),
    }
}

fn json_number(v: Option<f64>) -> Value {
    match v {
        Some(x) if x.is_finite() => json!(x),
        Some(x) if x.is_nan() => Value::Null,
        Some(_) => Value::String(cell(v)),
        None => Value::Null,
    }
}

fn row_json(r: &ReportRow) -> Value {
    json!({
        "decomposition": r.decomposition,
        "params": r.params,
        "STOI": json_number(r.scores.stoi),
        "SI-SDR": json_number(r.scores.si_sdr),
        "SNR": json_number(r.scores.snr),
        "MSE": json_number(r.scores.mse),
        "time_s": json_number(Some(r.scores.decomposition_time)),
        "n_mixtures": r.n_mixtures,
        "seed": r.seed,
        "error": r.error,
    })
}

pub fn render_report(report: &ExperimentReport, format: ReportFormat) -> Result<String> {
    if report.rows.is_empty() {
        return Err(Error::invalid("report has no rows"));
    }
    match format {
        ReportFormat::Json => {
            let rows: Vec<Value> = report.rows.iter().map(row_json).collect();
            let mut text = serde_json::to_string_pretty(&rows)?;
            text.push('\n');
            Ok(text)
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(COLUMNS)?;
            for r in &report.rows {
                w.write_record([
                    r.decomposition.clone(),
                    r.params.clone(),
                    cell(r.scores.stoi),
                    cell(r.scores.si_sdr),
                    cell(r.scores.snr),
                    cell(r.scores.mse),
                    cell(Some(r.scores.decomposition_time)),
                    r.n_mixtures.to_string(),
                    r.seed.to_string(),
                    r.error.clone().unwrap_or_default(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            String::from_utf8(bytes).map_err(|e| Error::invalid(e.to_string()))
        }
    }
}

pub fn emit_report(report: &ExperimentReport, format: ReportFormat, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, render_report(report, format)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::MetricScores;

    fn report() -> ExperimentReport {
        let row = ReportRow {
            decomposition: "stft".into(),
            params: "hann win=800 hop=400 fft=1024".into(),
            scores: MetricScores {
                stoi: Some(0.957),
                si_sdr: Some(f64::INFINITY),
                snr: Some(-3.25),
                mse: None,
                decomposition_time: 0.0125,
            },
            n_mixtures: 10,
            seed: 7,
            error: None,
        };
        ExperimentReport { rows: vec![row], n_mixtures: 10, speakers: 2, seed: 7 }
    }

    #[test]
    fn csv_round_trip() {
        let text = render_report(&report(), ReportFormat::Csv).unwrap();
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        assert_eq!(rd.headers().unwrap().iter().collect::<Vec<_>>(), COLUMNS);
        let recs: Vec<csv::StringRecord> = rd.records().collect::<std::result::Result<_, _>>().unwrap();
        assert_eq!(recs.len(), 1);
        let r = &recs[0];
        assert_eq!(&r[1], "hann win=800 hop=400 fft=1024");
        assert_eq!(r[2].parse::<f64>().unwrap(), 0.957);
        assert_eq!(&r[3], "inf");
        assert_eq!(r[3].parse::<f64>().unwrap(), f64::INFINITY);
        assert_eq!(r[4].parse::<f64>().unwrap(), -3.25);
        assert_eq!(&r[5], "");
        assert_eq!(r[6].parse::<f64>().unwrap(), 0.0125);
        assert_eq!(&r[7], "10");
    }

    #[test]
    fn json_is_array_of_rows() {
        let text = render_report(&report(), ReportFormat::Json).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0]["SI-SDR"], "inf");
        assert_eq!(rows[0]["STOI"], 0.957);
        assert!(rows[0]["MSE"].is_null());
        assert_eq!(rows[0]["n_mixtures"], 10);
    }

    #[test]
    fn writes_file_and_rejects_empty() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("r.json");
        emit_report(&report(), ReportFormat::from_path(&p), &p).unwrap();
        assert!(std::fs::read_to_string(&p).unwrap().starts_with('['));
        let empty = ExperimentReport { rows: vec![], ..report() };
        assert!(render_report(&empty, ReportFormat::Csv).is_err());
        assert!(emit_report(&report(), ReportFormat::Csv, dir.path().join("no/such/dir.csv")).is_err());
        assert_eq!("JSON".parse::<ReportFormat>().unwrap(), ReportFormat::Json);
    }
}
