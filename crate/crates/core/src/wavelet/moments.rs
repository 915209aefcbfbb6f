use std::f64::consts::PI;

use num_complex::Complex64;

use super::WaveletFilterBank;
use crate::error::{Error, Result};
use crate::signal::upsample2;

/// Largest `p <= max_p` such that the discrete moments
/// `sum_n (n - c)^k g[n]` of the analysis high-pass vanish for every `k < p`.
///
/// `c` is the filter midpoint and each moment is compared against
/// `tol * sum_n |n - c|^k |g[n]|`, so the test is scale-free.
pub fn count_vanishing_moments(bank: &WaveletFilterBank, max_p: usize, tol: f64) -> usize {
    let g = &bank.dec_hi;
    let center = (g.len() as f64 - 1.0) / 2.0;
    for k in 0..max_p {
        let (moment, scale) = g.iter().enumerate().fold((0.0, 0.0), |(m, s), (n, &v)| {
            let t = (n as f64 - center).powi(k as i32);
            (m + t * v, s + t.abs() * v.abs())
        });
        if scale == 0.0 || moment.abs() > tol * scale {
            return k;
        }
    }
    max_p
}

/// Refinement-equation iterations used to approximate the wavelet function.
const CASCADE_ITERATIONS: u32 = 8;

/// Samples of the wavelet function on a grid of spacing `2^-iterations`,
/// obtained by iterating the two-scale relation from a unit impulse.
pub(crate) fn cascade_wavelet(bank: &WaveletFilterBank, iterations: u32) -> Vec<f64> {
    let mut v = bank.rec_hi.clone();
    for _ in 1..iterations {
        let mut up = upsample2(&v);
        up.pop();
        v = crate::signal::convolve(&up, &bank.rec_lo, crate::signal::ConvMode::Full)
            .expect("non-empty filters");
    }
    let gain = 2f64.powf(iterations as f64 / 2.0);
    v.iter().map(|x| x * gain).collect()
}

/// Dominant oscillation frequency of the wavelet function, in cycles per
/// sample at scale 1.
///
/// The wavelet is approximated by the cascade algorithm; its DFT is taken
/// over the approximation's own length, so bin `k` corresponds to `k`
/// cycles across the support and the estimate is `k_peak / support`.
pub fn central_frequency(bank: &WaveletFilterBank) -> f64 {
    let psi = cascade_wavelet(bank, CASCADE_ITERATIONS);
    let len = psi.len();
    let support = (len - 1) as f64 / 2f64.powi(CASCADE_ITERATIONS as i32);
    // a wavelet's peak never lies above 4 cycles per sample
    let max_bin = ((4.0 * support).ceil() as usize).min(len / 2).max(1);
    let mut best = (1, f64::NEG_INFINITY);
    for k in 1..=max_bin {
        let step = Complex64::from_polar(1.0, -2.0 * PI * k as f64 / len as f64);
        let mut phasor = Complex64::new(1.0, 0.0);
        let mut acc = Complex64::default();
        for &v in &psi {
            acc += phasor * v;
            phasor *= step;
        }
        if acc.norm() > best.1 {
            best = (k, acc.norm());
        }
    }
    best.0 as f64 / support
}

/// Dyadic dilation of decomposition level `level` (>= 1): `2^(level - 1)`.
pub fn level_scale(level: usize) -> f64 {
    2f64.powi(level.saturating_sub(1) as i32)
}

/// Frequency in Hz associated with dilation `scale` at sampling rate `rate`.
pub fn scale_to_frequency(bank: &WaveletFilterBank, scale: f64, rate: u32) -> Result<f64> {
    if !(scale >= 1.0) || rate == 0 {
        return Err(Error::invalid(format!("scale {scale} must be >= 1 and rate positive")));
    }
    Ok(central_frequency(bank) * rate as f64 / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavelet::{lookup, Family};

    #[test]
    fn level_scales() {
        assert_eq!(level_scale(1), 1.0);
        assert_eq!(level_scale(5), 16.0);
        assert_eq!(level_scale(6), 32.0);
    }

    #[test]
    fn haar_and_daubechies_moments() {
        assert_eq!(count_vanishing_moments(&lookup("haar").unwrap(), 20, 1e-8), 1);
        assert_eq!(count_vanishing_moments(&lookup("db4").unwrap(), 20, 1e-8), 4);
        assert_eq!(count_vanishing_moments(&lookup("sym8").unwrap(), 20, 1e-8), 8);
        // capped by max_p
        assert_eq!(count_vanishing_moments(&lookup("sym8").unwrap(), 3, 1e-8), 3);
    }

    #[test]
    fn non_zero_mean_highpass_has_no_moments() {
        let mut b = WaveletFilterBank::from_scaling("x", Family::Custom, &[0.5, 0.5], 0).unwrap();
        b.dec_hi = vec![0.55, -0.45];
        assert_eq!(count_vanishing_moments(&b, 10, 1e-8), 0);
    }

    #[test]
    fn sym8_central_frequency() {
        let b = lookup("sym8").unwrap();
        let cf = central_frequency(&b);
        assert!((cf - 0.666).abs() <= 0.01, "{cf}");
        let f5 = scale_to_frequency(&b, 16.0, 16000).unwrap();
        let f6 = scale_to_frequency(&b, 32.0, 16000).unwrap();
        assert!((f5 - 666.0).abs() <= 10.0, "{f5}");
        assert!((f6 - 333.0).abs() <= 5.0, "{f6}");
        assert_eq!(f5, 2.0 * f6);
        assert!(scale_to_frequency(&b, 0.5, 16000).is_err());
        assert!(scale_to_frequency(&b, 2.0, 0).is_err());
    }

    #[test]
    fn cascade_support_length() {
        let b = lookup("db2").unwrap();
        let psi = cascade_wavelet(&b, 8);
        // (N - 1)(2^J - 1) + 1 samples
        assert_eq!(psi.len(), 3 * 255 + 1);
    }
}
