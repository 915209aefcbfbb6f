//! Reference-based quality metrics.

mod stoi;

pub use stoi::{stoi, STOI_RATE};

use crate::error::{Error, Result};
use crate::signal::{dot, l2_norm};

/// Per-trial (or averaged) scores. `None` marks a metric that could not be computed.
#[derive(Debug, Clone, Copy, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct MetricScores {
    pub stoi: Option<f64>,
    pub si_sdr: Option<f64>,
    pub snr: Option<f64>,
    pub mse: Option<f64>,
    /// Seconds spent in forward and inverse transforms.
    pub decomposition_time: f64,
}

fn check_lengths(s: &[f64], est: &[f64]) -> Result<()> {
    if s.len() != est.len() {
        return Err(Error::LengthMismatch { left: s.len(), right: est.len() });
    }
    Ok(())
}

/// `||s - est||^2 / n`.
pub fn mse(s: &[f64], est: &[f64]) -> Result<f64> {
    check_lengths(s, est)?;
    if s.is_empty() {
        return Err(Error::invalid("MSE of empty signals"));
    }
    Ok(s.iter().zip(est).map(|(a, b)| (a - b).powi(2)).sum::<f64>() / s.len() as f64)
}

/// `10 log10(||s||^2 / ||s - est||^2)`; `+inf` when the signals are identical.
pub fn snr(s: &[f64], est: &[f64]) -> Result<f64> {
    check_lengths(s, est)?;
    let noise: f64 = s.iter().zip(est).map(|(a, b)| (a - b).powi(2)).sum();
    let signal: f64 = s.iter().map(|v| v * v).sum();
    if noise == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (signal / noise).log10())
}

/// Scaled reference `alpha * s` and residual `alpha * s - est`, with
/// `alpha = (s . est) / ||s||^2` making the residual orthogonal to `s`.
pub fn si_sdr_components(s: &[f64], est: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    check_lengths(s, est)?;
    let energy = dot(s, s)?;
    if energy == 0.0 {
        return Err(Error::Degenerate("SI-SDR reference is all zeros".into()));
    }
    let alpha = dot(s, est)? / energy;
    let target: Vec<f64> = s.iter().map(|v| alpha * v).collect();
    let residual = target.iter().zip(est).map(|(t, e)| t - e).collect();
    Ok((target, residual))
}

/// Scale-invariant signal-to-distortion ratio in dB.
///
/// `+inf` when `est` is an exact multiple of `s`, `-inf` when it is orthogonal to `s`.
pub fn si_sdr(s: &[f64], est: &[f64]) -> Result<f64> {
    let (target, residual) = si_sdr_components(s, est)?;
    let t = l2_norm(&target);
    let r = l2_norm(&residual);
    if r == 0.0 {
        return Ok(f64::INFINITY);
    }
    if t == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(20.0 * (t / r).log10())
}

#[cfg(test)]
mod tests {
    use super::*;

    const S: [f64; 6] = [0.3, -0.1, 0.8, 0.05, -0.6, 0.2];

    #[test]
    fn mse_and_snr_under_gain() {
        assert_eq!(mse(&S, &S).unwrap(), 0.0);
        assert_eq!(snr(&S, &S).unwrap(), f64::INFINITY);
        let energy: f64 = S.iter().map(|v| v * v).sum();
        for alpha in [0.5, 0.9, 1.1, 2.0] {
            let est: Vec<f64> = S.iter().map(|v| alpha * v).collect();
            let expected = -20.0 * (1.0f64 - alpha).abs().log10();
            assert!((snr(&S, &est).unwrap() - expected).abs() < 1e-9);
            let expected_mse = (1.0 - alpha) * (1.0 - alpha) * energy / S.len() as f64;
            assert!((mse(&S, &est).unwrap() - expected_mse).abs() < 1e-15);
        }
        assert!((snr(&S, &S.map(|v| 1.1 * v)).unwrap() - 20.0).abs() < 1e-9);
        assert!(mse(&S, &S[1..]).is_err());
        assert!(snr(&S, &S[1..]).is_err());
    }

    #[test]
    fn si_sdr_hand_value() {
        assert!(si_sdr(&[1.0, 0.0], &[1.0, 1.0]).unwrap().abs() < 1e-12);
    }

    #[test]
    fn si_sdr_scale_invariance() {
        let est = [0.2, 0.1, 0.7, -0.3, -0.5, 0.4];
        let base = si_sdr(&S, &est).unwrap();
        for beta in [-3.0, -0.01, 0.5, 7.0] {
            let scaled: Vec<f64> = est.iter().map(|v| beta * v).collect();
            assert!((si_sdr(&S, &scaled).unwrap() - base).abs() < 1e-9);
        }
    }

    #[test]
    fn si_sdr_degenerate_cases() {
        assert!(si_sdr(&[0.0, 0.0], &[1.0, 1.0]).is_err());
        assert_eq!(si_sdr(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), f64::NEG_INFINITY);
        assert_eq!(si_sdr(&[1.0, 2.0], &[2.0, 4.0]).unwrap(), f64::INFINITY);
    }

    #[test]
    fn residual_is_orthogonal() {
        let est = [0.2, 0.1, 0.7, -0.3, -0.5, 0.4];
        let (_, r) = si_sdr_components(&S, &est).unwrap();
        let d = dot(&S, &r).unwrap();
        assert!(d.abs() <= 1e-9 * l2_norm(&S) * l2_norm(&r));
    }
}
