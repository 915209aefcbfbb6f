//! Single-tree discrete wavelet transform.
//!
//! One analysis step correlates the input with the scaling filter `h` and
//! the wavelet filter `g` (equivalently: convolution with the reversed
//! analysis filters) and keeps every second output:
//!
//! ```text
//! a[i] = sum_j h[j] x[2i + j - shift]      d[i] = sum_j g[j] x[2i + j - shift]
//! ```
//!
//! Out-of-range samples come from the boundary mode. With periodization there
//! are `ceil(n/2)` coefficients per band and `shift = N/2 - 1`; otherwise
//! there are `floor((n + N - 1)/2)` and `shift = N - 2`, which is enough to
//! rebuild every input sample. Synthesis is the transpose of analysis, so an
//! orthogonal bank reconstructs with zero delay.

use super::WaveletFilterBank;
use crate::error::{Error, Result};
use crate::signal::{PadMode, Signal};

/// Coefficients per band produced by one step on `n` samples.
pub fn coeff_len(n: usize, filter_len: usize, mode: PadMode) -> usize {
    match mode {
        PadMode::Periodic => n.div_ceil(2),
        PadMode::Zero | PadMode::Symmetric => (n + filter_len - 1) / 2,
    }
}

fn shift(filter_len: usize, mode: PadMode) -> usize {
    match mode {
        PadMode::Periodic => filter_len / 2 - 1,
        PadMode::Zero | PadMode::Symmetric => filter_len - 2,
    }
}

pub(crate) fn analyze(x: &[f64], lo: &[f64], hi: &[f64], mode: PadMode) -> (Vec<f64>, Vec<f64>) {
    let f = lo.len();
    let count = coeff_len(x.len(), f, mode);
    let sh = shift(f, mode) as isize;
    let mut approx = Vec::with_capacity(count);
    let mut detail = Vec::with_capacity(count);
    // periodization of an odd-length input runs on a zero-extended copy
    let ext;
    let x = if mode == PadMode::Periodic && x.len() % 2 == 1 {
        ext = [x, &[0.0]].concat();
        &ext[..]
    } else {
        x
    };
    let n = x.len() as isize;
    for i in 0..count {
        let start = 2 * i as isize - sh;
        let (mut a, mut d) = (0.0, 0.0);
        if start >= 0 && start + f as isize <= n {
            let win = &x[start as usize..start as usize + f];
            for ((&v, &l), &h) in win.iter().zip(lo).zip(hi) {
                a += l * v;
                d += h * v;
            }
        } else {
            for j in 0..f {
                let v = mode.extend_at(x, start + j as isize);
                a += lo[j] * v;
                d += hi[j] * v;
            }
        }
        approx.push(a);
        detail.push(d);
    }
    (approx, detail)
}

pub(crate) fn synthesize(
    approx: &[f64],
    detail: &[f64],
    lo: &[f64],
    hi: &[f64],
    mode: PadMode,
    out_len: usize,
) -> Result<Vec<f64>> {
    if approx.len() != detail.len() {
        return Err(Error::LengthMismatch { left: approx.len(), right: detail.len() });
    }
    let f = lo.len();
    if coeff_len(out_len, f, mode) != approx.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} coefficients per band cannot rebuild {out_len} samples with a {f}-tap filter in {mode} mode",
            approx.len()
        )));
    }
    let sh = shift(f, mode) as isize;
    let (len, wrap) = match mode {
        PadMode::Periodic => (2 * approx.len(), true),
        _ => (out_len, false),
    };
    let n = len as isize;
    let mut y = vec![0.0; len];
    for (i, (&a, &d)) in approx.iter().zip(detail).enumerate() {
        let start = 2 * i as isize - sh;
        if start >= 0 && start + f as isize <= n {
            let win = &mut y[start as usize..start as usize + f];
            for ((out, &l), &h) in win.iter_mut().zip(lo).zip(hi) {
                *out += a * l + d * h;
            }
        } else {
            for j in 0..f {
                let idx = start + j as isize;
                if wrap {
                    y[idx.rem_euclid(n) as usize] += a * lo[j] + d * hi[j];
                } else if (0..n).contains(&idx) {
                    y[idx as usize] += a * lo[j] + d * hi[j];
                }
            }
        }
    }
    y.truncate(out_len);
    Ok(y)
}

/// One analysis step: `(approximation, detail)`.
pub fn dwt_step(x: &[f64], bank: &WaveletFilterBank, mode: PadMode) -> Result<(Vec<f64>, Vec<f64>)> {
    if x.is_empty() {
        return Err(Error::invalid("cannot transform an empty vector"));
    }
    Ok(analyze(x, &bank.rec_lo, &bank.rec_hi, mode))
}

/// One synthesis step, rebuilding `out_len` samples.
pub fn idwt_step(
    approx: &[f64],
    detail: &[f64],
    bank: &WaveletFilterBank,
    mode: PadMode,
    out_len: usize,
) -> Result<Vec<f64>> {
    if approx.is_empty() {
        return Err(Error::invalid("cannot invert an empty coefficient band"));
    }
    synthesize(approx, detail, &bank.rec_lo, &bank.rec_hi, mode, out_len)
}

/// Multi-level DWT output.
#[derive(Debug, Clone, PartialEq)]
pub struct DwtCoeffs {
    /// Level-`levels` approximation.
    pub approx: Vec<f64>,
    /// `details[0]` is level 1 (finest, highest frequencies).
    pub details: Vec<Vec<f64>>,
    pub levels: usize,
    pub mode: PadMode,
    pub original_len: usize,
    /// Input length after zero-padding to a multiple of `2^levels`.
    pub padded_len: usize,
    pub rate: u32,
    pub wavelet: String,
}

impl DwtCoeffs {
    /// Band lengths in flattening order `[approx, detail_L, ..., detail_1]`.
    pub fn band_lengths(&self) -> Vec<usize> {
        std::iter::once(self.approx.len()).chain(self.details.iter().rev().map(Vec::len)).collect()
    }

    /// Bands in flattening order.
    pub fn bands(&self) -> Vec<&[f64]> {
        std::iter::once(&self.approx[..]).chain(self.details.iter().rev().map(|d| &d[..])).collect()
    }

    /// Same metadata, coefficients replaced by `flat` (in flattening order).
    pub fn with_flat(&self, flat: &[f64]) -> Result<DwtCoeffs> {
        let lengths = self.band_lengths();
        let total: usize = lengths.iter().sum();
        if flat.len() != total {
            return Err(Error::LengthMismatch { left: flat.len(), right: total });
        }
        let mut offset = 0;
        let mut bands = lengths.iter().map(|&len| {
            let band = flat[offset..offset + len].to_vec();
            offset += len;
            band
        });
        let approx = bands.next().unwrap_or_default();
        let mut details: Vec<Vec<f64>> = bands.collect();
        details.reverse();
        Ok(DwtCoeffs { approx, details, ..self.clone() })
    }
}

/// Concatenation `[approx, detail_L, ..., detail_1]`.
pub fn flatten(c: &DwtCoeffs) -> Vec<f64> {
    c.bands().concat()
}

pub(crate) fn max_levels(len: usize) -> usize {
    if len < 2 {
        0
    } else {
        (usize::BITS - 1 - len.leading_zeros()) as usize
    }
}

pub(crate) fn check_levels(len: usize, levels: usize) -> Result<()> {
    let max = max_levels(len);
    if levels == 0 || levels > max {
        return Err(Error::invalid(format!(
            "decomposition level {levels} outside 1..={max} for {len} samples"
        )));
    }
    Ok(())
}

/// Cascaded DWT over `levels` levels. The input is zero-padded to a multiple
/// of `2^levels` first.
pub fn wavedec(s: &Signal, bank: &WaveletFilterBank, levels: usize, mode: PadMode) -> Result<DwtCoeffs> {
    check_levels(s.len(), levels)?;
    let padded_len = s.len().next_multiple_of(1 << levels);
    let mut current = s.samples().to_vec();
    current.resize(padded_len, 0.0);
    let mut details = Vec::with_capacity(levels);
    for _ in 0..levels {
        let (a, d) = dwt_step(&current, bank, mode)?;
        details.push(d);
        current = a;
    }
    Ok(DwtCoeffs {
        approx: current,
        details,
        levels,
        mode,
        original_len: s.len(),
        padded_len,
        rate: s.rate(),
        wavelet: bank.name.clone(),
    })
}

/// Inverse of [`wavedec`], trimmed to the original length.
pub fn waverec(c: &DwtCoeffs, bank: &WaveletFilterBank) -> Result<Signal> {
    if c.details.len() != c.levels || c.levels == 0 {
        return Err(Error::ShapeMismatch(format!(
            "{} detail bands for {} levels",
            c.details.len(),
            c.levels
        )));
    }
    let mut current = c.approx.clone();
    for level in (0..c.levels).rev() {
        let out_len = if level == 0 { c.padded_len } else { c.details[level - 1].len() };
        current = idwt_step(&current, &c.details[level], bank, c.mode, out_len)?;
    }
    current.truncate(c.original_len);
    Signal::new(current, c.rate)
}

/// Rectangular matrix for display: row 0 is the approximation, then
/// `detail_L` up to `detail_1`. Magnitudes of coarser bands are repeated to
/// the length of the finest band.
pub fn dwt_scaleogram(c: &DwtCoeffs) -> Vec<Vec<f64>> {
    let width = c.details.first().map_or(c.approx.len(), Vec::len);
    c.bands()
        .iter()
        .map(|band| {
            (0..width)
                .map(|col| {
                    let idx = (col * band.len() / width.max(1)).min(band.len().saturating_sub(1));
                    band.get(idx).map_or(0.0, |v| v.abs())
                })
                .collect()
        })
        .collect()
}
