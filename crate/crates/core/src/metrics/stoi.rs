//! Short-time objective intelligibility.
//!
//! Pipeline: resample to 10 kHz, 256-sample Hann frames at 50% overlap,
//! drop frames more than 40 dB below the loudest clean frame, group
//! 512-point DFT bins into 15 one-third octave bands from 150 Hz, form
//! 30-frame (384 ms) envelopes, normalize and clip the degraded envelope,
//! and average the per-envelope correlation coefficients.

use crate::error::{Error, Result};
use crate::fourier::{make_window, RealFftPlan, WindowKind};
use crate::signal::{l2_norm, resample, Signal};

pub const STOI_RATE: u32 = 10_000;
const FRAME: usize = 256;
const HOP: usize = FRAME / 2;
const NFFT: usize = 512;
const BANDS: usize = 15;
const LOWEST_CENTER_HZ: f64 = 150.0;
const SEGMENT: usize = 30;
const CLIP_BETA_DB: f64 = -15.0;
const DYNAMIC_RANGE_DB: f64 = 40.0;

/// `(first_bin, end_bin)` of each band. Both edges, `cf * 2^(-1/6)` and
/// `cf * 2^(1/6)`, are snapped to the nearest DFT bin (the lower bin on a
/// tie), as in the reference STOI implementation.
fn band_bins() -> Vec<(usize, usize)> {
    let bin_hz = STOI_RATE as f64 / NFFT as f64;
    let nearest = |hz: f64| {
        (0..=NFFT / 2)
            .min_by(|&a, &b| (a as f64 * bin_hz - hz).abs().total_cmp(&(b as f64 * bin_hz - hz).abs()))
            .unwrap_or(0)
    };
    (0..BANDS)
        .map(|j| {
            let cf = LOWEST_CENTER_HZ * 2f64.powf(j as f64 / 3.0);
            (nearest(cf * 2f64.powf(-1.0 / 6.0)), nearest(cf * 2f64.powf(1.0 / 6.0)))
        })
        .collect()
}

/// Band envelopes `[band][frame]` over the frames listed in `keep`.
fn band_envelopes(x: &[f64], starts: &[usize], window: &[f64], plan: &RealFftPlan) -> Vec<Vec<f64>> {
    let bands = band_bins();
    let mut env = vec![Vec::with_capacity(starts.len()); BANDS];
    let mut frame = vec![0.0; NFFT];
    let mut spec = vec![Default::default(); plan.bins()];
    for &start in starts {
        frame.fill(0.0);
        for (j, w) in window.iter().enumerate() {
            frame[j] = x[start + j] * w;
        }
        plan.forward(&frame, &mut spec);
        for (b, &(first, end)) in bands.iter().enumerate() {
            let e: f64 = spec[first..end].iter().map(|c: &num_complex::Complex64| c.norm_sqr()).sum();
            env[b].push(e.sqrt());
        }
    }
    env
}

fn correlation(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return 0.0;
    }
    sxy / (sxx.sqrt() * syy.sqrt())
}

/// Intelligibility score in `[0, 1]` of `degraded` against `clean`.
pub fn stoi(clean: &[f64], degraded: &[f64], rate: u32) -> Result<f64> {
    if clean.len() != degraded.len() {
        return Err(Error::LengthMismatch { left: clean.len(), right: degraded.len() });
    }
    let x = resample(&Signal::new(clean.to_vec(), rate)?, STOI_RATE)?.into_samples();
    let y = resample(&Signal::new(degraded.to_vec(), rate)?, STOI_RATE)?.into_samples();
    if x.len() < FRAME {
        return Err(Error::TooShort(format!("{} samples at 10 kHz, need at least {FRAME}", x.len())));
    }

    let window = make_window(WindowKind::Hann, FRAME)?;
    let starts: Vec<usize> = (0..=x.len() - FRAME).step_by(HOP).collect();
    let energies: Vec<f64> = starts
        .iter()
        .map(|&s| {
            let e: f64 = window.iter().enumerate().map(|(j, w)| (x[s + j] * w).powi(2)).sum();
            e.sqrt()
        })
        .collect();
    let max = energies.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return Err(Error::Degenerate("STOI clean signal is silent".into()));
    }
    let floor = max * 10f64.powf(-DYNAMIC_RANGE_DB / 20.0);
    let kept: Vec<usize> = starts.iter().zip(&energies).filter(|(_, &e)| e >= floor).map(|(&s, _)| s).collect();
    if kept.len() < SEGMENT {
        return Err(Error::TooShort(format!(
            "{} speech frames after silence removal, need {SEGMENT} (384 ms)",
            kept.len()
        )));
    }

    let plan = RealFftPlan::new(NFFT)?;
    let clean_env = band_envelopes(&x, &kept, &window, &plan);
    let degraded_env = band_envelopes(&y, &kept, &window, &plan);
    let clip = 1.0 + 10f64.powf(-CLIP_BETA_DB / 20.0);

    let mut total = 0.0;
    let mut count = 0usize;
    let mut y_seg = vec![0.0; SEGMENT];
    for (xb, yb) in clean_env.iter().zip(&degraded_env) {
        for end in SEGMENT..=xb.len() {
            let xs = &xb[end - SEGMENT..end];
            let ys = &yb[end - SEGMENT..end];
            let ny = l2_norm(ys);
            let gain = if ny > 0.0 { l2_norm(xs) / ny } else { 0.0 };
            for ((out, &a), &b) in y_seg.iter_mut().zip(xs).zip(ys) {
                *out = (gain * b).min(clip * a);
            }
            total += correlation(xs, &y_seg);
            count += 1;
        }
    }
    Ok((total / count as f64).clamp(0.0, 1.0))
}
