use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WindowKind {
    #[serde(alias = "rect")]
    Rectangular,
    Hann,
}

impl std::fmt::Display for WindowKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            WindowKind::Rectangular => "rectangular",
            WindowKind::Hann => "hann",
        })
    }
}

impl std::str::FromStr for WindowKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hann" | "hanning" => Ok(WindowKind::Hann),
            "rect" | "rectangular" | "boxcar" => Ok(WindowKind::Rectangular),
            other => Err(Error::invalid(format!("unknown window '{other}' (expected hann or rect)"))),
        }
    }
}

/// Periodic (DFT-even) window of length `n`: Hann is `0.5 - 0.5 cos(2 pi k / n)`.
pub fn make_window(kind: WindowKind, n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::invalid(format!("window length {n} < 2")));
    }
    Ok(match kind {
        WindowKind::Rectangular => vec![1.0; n],
        WindowKind::Hann => (0..n)
            .map(|k| 0.5 - 0.5 * (2.0 * PI * k as f64 / n as f64).cos())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hann_four_points() {
        let w = make_window(WindowKind::Hann, 4).unwrap();
        let expected = [0.0, 0.5, 1.0, 0.5];
        for (a, b) in w.iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn hann_peak_and_rectangular() {
        for n in [2, 8, 512] {
            let w = make_window(WindowKind::Hann, n).unwrap();
            assert_eq!(w[0], 0.0);
            assert!((w[n / 2] - 1.0).abs() < 1e-15);
            assert!(make_window(WindowKind::Rectangular, n).unwrap().iter().all(|&v| v == 1.0));
        }
        assert!(make_window(WindowKind::Hann, 1).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("rect".parse::<WindowKind>().unwrap(), WindowKind::Rectangular);
        assert_eq!("Hann".parse::<WindowKind>().unwrap(), WindowKind::Hann);
        assert!("hamming".parse::<WindowKind>().is_err());
    }
}
