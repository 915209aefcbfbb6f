//! Orthogonal wavelet filter banks and the transforms built on them.

mod cwt;
mod dwt;
mod moments;
mod tables;
mod wpt;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::signal::{convolve, ConvMode};

pub use cwt::{cwt_ricker, ricker_scale_to_frequency, RICKER_CENTRAL_FREQUENCY};
pub use dwt::{coeff_len, dwt_scaleogram, dwt_step, flatten, idwt_step, wavedec, waverec, DwtCoeffs};
pub use moments::{central_frequency, count_vanishing_moments, level_scale, scale_to_frequency};
pub use wpt::{gray_permutation, inverse_permutation, iwpt, wpt, WptLeaves};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Haar,
    Daubechies,
    Symlets,
    Coiflets,
    Custom,
}

/// Two-channel FIR filter bank.
///
/// Analysis filters are applied by convolution followed by keeping every
/// second output; `rec_lo` is the scaling filter, `rec_hi` its conjugate
/// quadrature mirror, and the analysis filters are their time reverses.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveletFilterBank {
    pub name: String,
    pub family: Family,
    pub dec_lo: Vec<f64>,
    pub dec_hi: Vec<f64>,
    pub rec_lo: Vec<f64>,
    pub rec_hi: Vec<f64>,
    pub vanishing_moments: usize,
}

impl WaveletFilterBank {
    /// Builds the orthogonal bank generated by scaling filter `h`.
    pub fn from_scaling(name: &str, family: Family, h: &[f64], vanishing_moments: usize) -> Result<Self> {
        if h.is_empty() || h.len() % 2 != 0 {
            return Err(Error::invalid("scaling filter must have a non-zero even length"));
        }
        let rec_hi = cqf_highpass(h);
        Ok(WaveletFilterBank {
            name: name.to_string(),
            family,
            dec_lo: h.iter().rev().copied().collect(),
            dec_hi: rec_hi.iter().rev().copied().collect(),
            rec_lo: h.to_vec(),
            rec_hi,
            vanishing_moments,
        })
    }

    pub fn filter_len(&self) -> usize {
        self.rec_lo.len()
    }
}

fn registry() -> &'static [WaveletFilterBank] {
    static REGISTRY: OnceLock<Vec<WaveletFilterBank>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        tables::TABLES
            .iter()
            .map(|(name, h, family, vm)| {
                WaveletFilterBank::from_scaling(name, *family, h, *vm).expect("bundled tables have even length")
            })
            .collect()
    })
}

/// Names of every bundled bank, in registry order.
pub fn wavelet_names() -> Vec<&'static str> {
    tables::TABLES.iter().map(|t| t.0).collect()
}

pub fn lookup(name: &str) -> Result<WaveletFilterBank> {
    let key = name.trim().to_ascii_lowercase();
    registry().iter().find(|b| b.name == key).cloned().ok_or_else(|| Error::UnknownWavelet {
        name: name.to_string(),
        available: "haar, db1-db20, sym2-sym20, coif1-coif17".to_string(),
    })
}

/// All bundled banks.
pub fn all_banks() -> &'static [WaveletFilterBank] {
    registry()
}

/// Quadrature mirror high-pass: `g[i] = (-1)^i h[i]`.
pub fn qmf_highpass(h: &[f64]) -> Vec<f64> {
    h.iter().enumerate().map(|(i, &v)| if i % 2 == 0 { v } else { -v }).collect()
}

/// Conjugate quadrature high-pass: `g[i] = (-1)^i h[N-1-i]`.
pub fn cqf_highpass(h: &[f64]) -> Vec<f64> {
    let n = h.len();
    (0..n).map(|i| if i % 2 == 0 { h[n - 1 - i] } else { -h[n - 1 - i] }).collect()
}

/// Outcome of the perfect-reconstruction test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrCheck {
    pub ok: bool,
    /// Power of `z^{-1}` carried by the distortion product.
    pub delay: usize,
}

/// Checks the no-distortion and alias-cancellation conditions of a bank:
///
/// `F0(z) H0(z) + F1(z) H1(z) = 2 z^{-l}` and `F0(z) H0(-z) + F1(z) H1(-z) = 0`,
///
/// with `H` the analysis and `F` the synthesis filters, by multiplying
/// coefficient sequences.
pub fn verify_pr(bank: &WaveletFilterBank, tol: f64) -> PrCheck {
    let poly = |a: &[f64], b: &[f64]| convolve(a, b, ConvMode::Full).unwrap_or_default();
    let add = |a: Vec<f64>, b: Vec<f64>| -> Vec<f64> {
        let n = a.len().max(b.len());
        (0..n).map(|i| a.get(i).unwrap_or(&0.0) + b.get(i).unwrap_or(&0.0)).collect()
    };
    if [&bank.dec_lo, &bank.dec_hi, &bank.rec_lo, &bank.rec_hi].iter().any(|f| f.is_empty()) {
        return PrCheck { ok: false, delay: 0 };
    }
    let distortion = add(poly(&bank.rec_lo, &bank.dec_lo), poly(&bank.rec_hi, &bank.dec_hi));
    let alias = add(
        poly(&bank.rec_lo, &qmf_highpass(&bank.dec_lo)),
        poly(&bank.rec_hi, &qmf_highpass(&bank.dec_hi)),
    );
    let (delay, peak) = distortion
        .iter()
        .enumerate()
        .fold((0, 0.0f64), |best, (i, &v)| if v.abs() > best.1.abs() { (i, v) } else { best });
    let distortion_ok = (peak - 2.0).abs() <= tol
        && distortion.iter().enumerate().all(|(i, v)| i == delay || v.abs() <= tol);
    let alias_ok = alias.iter().all(|v| v.abs() <= tol);
    PrCheck { ok: distortion_ok && alias_ok, delay }
}
