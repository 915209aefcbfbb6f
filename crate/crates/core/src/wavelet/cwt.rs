use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::signal::{PadMode, Signal};

/// Frequency (cycles per sample at scale 1) at which the `1/sqrt(a)`
/// normalized Ricker response to a sinusoid peaks: `sqrt(5/2) / (2 pi)`.
pub const RICKER_CENTRAL_FREQUENCY: f64 = 0.251_646_060_522_435_2;

/// Unit-energy Ricker ("Mexican hat") wavelet.
fn ricker(t: f64) -> f64 {
    let norm = 2.0 / (3f64.sqrt() * PI.powf(0.25));
    norm * (1.0 - t * t) * (-t * t / 2.0).exp()
}

pub fn ricker_scale_to_frequency(scale: f64, rate: u32) -> f64 {
    RICKER_CENTRAL_FREQUENCY * rate as f64 / scale
}

/// Sampled `psi_a(t) = psi(t / a) / sqrt(a)` on `|t| <= 8a`, shifted to zero sum.
fn dilated_kernel(scale: f64) -> Vec<f64> {
    let half = (8.0 * scale).ceil() as isize;
    let mut k: Vec<f64> = (-half..=half).map(|t| ricker(t as f64 / scale) / scale.sqrt()).collect();
    // sampling breaks the exact zero mean slightly; restore it
    let mean = k.iter().sum::<f64>() / k.len() as f64;
    for v in &mut k {
        *v -= mean;
    }
    k
}

/// Continuous wavelet transform with the Ricker wavelet, one row per scale.
///
/// Each row is the centered, input-length convolution of the signal with the
/// time-reversed dilated wavelet. The signal is extended by half-sample
/// mirroring beyond its ends.
pub fn cwt_ricker(s: &Signal, scales: &[f64]) -> Result<Vec<Vec<f64>>> {
    if let Some(bad) = scales.iter().find(|&&a| !(a > 0.0) || !a.is_finite()) {
        return Err(Error::invalid(format!("scale {bad} must be positive")));
    }
    if s.is_empty() {
        return Err(Error::invalid("cannot transform an empty signal"));
    }
    let x = s.samples();
    Ok(scales
        .iter()
        .map(|&a| {
            let kernel: Vec<f64> = dilated_kernel(a).into_iter().rev().collect();
            let half = (kernel.len() / 2) as isize;
            (0..x.len() as isize)
                .map(|t| {
                    kernel
                        .iter()
                        .enumerate()
                        .map(|(j, k)| k * PadMode::Symmetric.extend_at(x, t + half - j as isize))
                        .sum()
                })
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_signal_has_no_response() {
        let s = Signal::new(vec![0.7; 300], 1000).unwrap();
        let m = cwt_ricker(&s, &[1.0, 2.5, 8.0, 20.0]).unwrap();
        assert!(m.iter().flatten().all(|v| v.abs() <= 1e-8));
    }

    #[test]
    fn linear_in_signal() {
        let x: Vec<f64> = (0..200).map(|t| (t as f64 * 0.3).sin()).collect();
        let y: Vec<f64> = (0..200).map(|t| ((t * t) as f64 * 0.01).cos()).collect();
        let xy: Vec<f64> = x.iter().zip(&y).map(|(a, b)| 2.0 * a - 0.5 * b).collect();
        let scales = [1.0, 3.0, 7.0];
        let f = |v: Vec<f64>| cwt_ricker(&Signal::new(v, 100).unwrap(), &scales).unwrap();
        let (mx, my, mxy) = (f(x), f(y), f(xy));
        for r in 0..3 {
            for t in 0..200 {
                assert!((mxy[r][t] - (2.0 * mx[r][t] - 0.5 * my[r][t])).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn central_frequency_value() {
        assert!((RICKER_CENTRAL_FREQUENCY - 2.5f64.sqrt() / (2.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_scales() {
        let s = Signal::new(vec![0.0; 10], 100).unwrap();
        assert!(cwt_ricker(&s, &[1.0, 0.0]).is_err());
        assert!(cwt_ricker(&s, &[-2.0]).is_err());
    }
}
