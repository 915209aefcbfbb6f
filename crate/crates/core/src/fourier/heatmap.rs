//! CSV and binary PGM export of real-valued time-frequency matrices.
//!
//! Matrices are indexed `[row][column]` with row 0 the lowest frequency.
//! CSV keeps that order; the image is flipped so low frequencies sit at the
//! bottom.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Dynamic range kept by the image, in dB below the maximum magnitude.
const DYNAMIC_RANGE_DB: f64 = 120.0;

fn check_rectangular(matrix: &[Vec<f64>]) -> Result<usize> {
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::ShapeMismatch("heat map rows differ in length".into()));
    }
    if matrix.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::invalid("heat map contains non-finite values"));
    }
    Ok(cols)
}

/// 8-bit pixels in image order (top row first): log magnitude, min-max normalized.
pub fn heatmap_pixels(matrix: &[Vec<f64>]) -> Result<Vec<u8>> {
    check_rectangular(matrix)?;
    let max = matrix.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
    let cells = matrix.iter().map(Vec::len).sum();
    if max == 0.0 {
        return Ok(vec![0; cells]);
    }
    let floor = max * 10f64.powf(-DYNAMIC_RANGE_DB / 20.0);
    let db: Vec<Vec<f64>> = matrix
        .iter()
        .rev()
        .map(|row| row.iter().map(|v| 20.0 * v.abs().max(floor).log10()).collect())
        .collect();
    let lo = db.iter().flatten().fold(f64::INFINITY, |m, &v| m.min(v));
    let hi = db.iter().flatten().fold(f64::NEG_INFINITY, |m, &v| m.max(v));
    let range = hi - lo;
    Ok(db
        .iter()
        .flatten()
        .map(|&v| if range > 0.0 { ((v - lo) / range * 255.0).round() as u8 } else { 0 })
        .collect())
}

pub fn write_pgm(matrix: &[Vec<f64>], path: &Path) -> Result<()> {
    let cols = check_rectangular(matrix)?;
    let pixels = heatmap_pixels(matrix)?;
    let mut out = BufWriter::new(File::create(path)?);
    write!(out, "P5\n{} {}\n255\n", cols, matrix.len())?;
    out.write_all(&pixels)?;
    out.flush()?;
    Ok(())
}

pub fn write_csv(matrix: &[Vec<f64>], path: &Path) -> Result<()> {
    check_rectangular(matrix)?;
    let mut w = csv::WriterBuilder::new().has_headers(false).from_path(path)?;
    for row in matrix {
        w.write_record(row.iter().map(|v| format!("{v:e}")))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv_matrix(path: &Path) -> Result<Vec<Vec<f64>>> {
    let mut r = csv::ReaderBuilder::new().has_headers(false).from_path(path)?;
    r.records()
        .map(|rec| {
            rec?.iter()
                .map(|field| {
                    field
                        .trim()
                        .parse::<f64>()
                        .map_err(|e| Error::invalid(format!("bad CSV number '{field}': {e}")))
                })
                .collect()
        })
        .collect()
}

/// Writes the image and, optionally, the raw values as CSV.
pub fn export_heatmap(matrix: &[Vec<f64>], pgm: &Path, csv: Option<&Path>) -> Result<()> {
    write_pgm(matrix, pgm)?;
    if let Some(csv) = csv {
        write_csv(matrix, csv)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_normalization() {
        let m = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        // row 1 is drawn on top
        assert_eq!(heatmap_pixels(&m).unwrap(), vec![255, 0, 0, 255]);
    }

    #[test]
    fn zeros_stay_black() {
        let m = vec![vec![0.0; 3]; 2];
        assert_eq!(heatmap_pixels(&m).unwrap(), vec![0; 6]);
    }

    #[test]
    fn pgm_header_and_csv_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let m = vec![vec![0.125, 3.5e-7, 2.0], vec![-1.0 / 3.0, 1e9, 0.0]];
        let pgm = dir.path().join("a.pgm");
        let csv = dir.path().join("a.csv");
        export_heatmap(&m, &pgm, Some(&csv)).unwrap();
        let bytes = std::fs::read(&pgm).unwrap();
        assert!(bytes.starts_with(b"P5\n3 2\n255\n"));
        assert_eq!(bytes.len(), b"P5\n3 2\n255\n".len() + 6);
        let back = read_csv_matrix(&csv).unwrap();
        for (r, s) in m.iter().zip(&back) {
            for (a, b) in r.iter().zip(s) {
                assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
            }
        }
    }

    #[test]
    fn ragged_and_non_finite_rejected() {
        assert!(heatmap_pixels(&[vec![1.0], vec![1.0, 2.0]]).is_err());
        assert!(heatmap_pixels(&[vec![f64::NAN]]).is_err());
    }
}
