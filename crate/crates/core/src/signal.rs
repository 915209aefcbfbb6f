//! Discrete signals and the elementary operators built on them.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// A finite, real-valued, uniformly sampled signal.
///
/// Samples are nominally normalized to `[-1, 1]` (integer PCM is scaled on
/// ingestion) but sums of sources may exceed that range. Every sample is
/// finite and the rate is positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<f64>,
    rate: u32,
}

impl Signal {
    pub fn new(samples: Vec<f64>, rate: u32) -> Result<Self> {
        if rate == 0 {
            return Err(Error::invalid("sampling rate must be positive"));
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(Error::invalid(format!("sample {i} is not finite")));
        }
        Ok(Signal { samples, rate })
    }

    pub fn zeros(len: usize, rate: u32) -> Result<Self> {
        Signal::new(vec![0.0; len], rate)
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn rate(&self) -> u32 {
        self.rate
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Duration in seconds.
    pub fn duration(&self) -> f64 {
        self.samples.len() as f64 / self.rate as f64
    }
}

/// Boundary extension used by padding and by the non-periodic wavelet modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PadMode {
    Zero,
    /// Cyclic repetition; for wavelet transforms this is periodization.
    Periodic,
    /// Half-sample mirroring: `[1, 2, 3]` continues as `3, 2, 1, 1, 2, ...`.
    Symmetric,
}

impl PadMode {
    /// Value of the infinitely extended `x` at index `i` (which may be negative).
    pub(crate) fn extend_at(self, x: &[f64], i: isize) -> f64 {
        let n = x.len() as isize;
        if (0..n).contains(&i) {
            return x[i as usize];
        }
        match self {
            PadMode::Zero => 0.0,
            PadMode::Periodic => x[i.rem_euclid(n) as usize],
            PadMode::Symmetric => {
                let j = i.rem_euclid(2 * n);
                if j < n {
                    x[j as usize]
                } else {
                    x[(2 * n - 1 - j) as usize]
                }
            }
        }
    }
}

impl std::fmt::Display for PadMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PadMode::Zero => "zero",
            PadMode::Periodic => "periodization",
            PadMode::Symmetric => "symmetric",
        })
    }
}

impl std::str::FromStr for PadMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "zero" | "zpd" => Ok(PadMode::Zero),
            "periodic" | "periodization" | "per" => Ok(PadMode::Periodic),
            "symmetric" | "sym" => Ok(PadMode::Symmetric),
            other => Err(Error::invalid(format!(
                "unknown mode '{other}' (expected zero, periodization or symmetric)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvMode {
    /// Length `|x| + |h| - 1`.
    Full,
    /// The centered `|x|`-length slice of the full result.
    Same,
}

/// Linear convolution `y[t] = sum_n x[n] h[t - n]`.
pub fn convolve(x: &[f64], h: &[f64], mode: ConvMode) -> Result<Vec<f64>> {
    if x.is_empty() || h.is_empty() {
        return Err(Error::invalid("convolution of an empty vector"));
    }
    let mut full = vec![0.0; x.len() + h.len() - 1];
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0.0 {
            continue;
        }
        for (acc, &hj) in full[i..i + h.len()].iter_mut().zip(h) {
            *acc += xi * hj;
        }
    }
    Ok(match mode {
        ConvMode::Full => full,
        ConvMode::Same => {
            let start = (h.len() - 1) / 2;
            full.drain(start..start + x.len()).collect()
        }
    })
}

/// Keeps the even-indexed samples.
pub fn downsample2(x: &[f64]) -> Vec<f64> {
    x.iter().step_by(2).copied().collect()
}

/// Interleaves zeros after every sample.
pub fn upsample2(x: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; 2 * x.len()];
    for (k, &v) in x.iter().enumerate() {
        out[2 * k] = v;
    }
    out
}

/// Extends `x` to `target_len` samples; the first `|x|` samples are unchanged.
pub fn pad(x: &[f64], target_len: usize, mode: PadMode) -> Result<Vec<f64>> {
    if target_len < x.len() {
        return Err(Error::invalid(format!(
            "pad target {target_len} is shorter than the input ({})",
            x.len()
        )));
    }
    if x.is_empty() && target_len > 0 && mode != PadMode::Zero {
        return Err(Error::invalid("cannot extend an empty vector by repetition"));
    }
    Ok((0..target_len as isize).map(|i| mode.extend_at(x, i)).collect())
}

pub fn dot(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok(x.iter().zip(y).map(|(a, b)| a * b).sum())
}

pub fn l2_norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// One-sided width of the resampling kernel; the kernel spans 64 input samples.
const RESAMPLE_HALF_TAPS: isize = 32;

/// Windowed-sinc rational resampling.
///
/// Each output sample is a 64-tap Hann-windowed sinc interpolation of the
/// input, low-passed at the lower of the two Nyquist frequencies. Weights are
/// normalized to unit sum so DC passes unchanged, including at the edges.
pub fn resample(s: &Signal, to_rate: u32) -> Result<Signal> {
    if to_rate == 0 {
        return Err(Error::invalid("target rate must be positive"));
    }
    let from = s.rate() as u64;
    let to = to_rate as u64;
    if from == to {
        return Ok(s.clone());
    }
    let x = s.samples();
    let out_len = ((x.len() as u64 * to + from / 2) / from) as usize;
    let cutoff = (to as f64 / from as f64).min(1.0);

    let phases = (to / gcd(from, to)) as usize;
    let table: Option<Vec<[f64; 64]>> = (phases <= 4096).then(|| {
        (0..phases)
            .map(|p| kernel(((p as u64 * from) % to) as f64 / to as f64, cutoff))
            .collect()
    });

    let mut out = Vec::with_capacity(out_len);
    for n in 0..out_len {
        let pos = n as u64 * from;
        let base = (pos / to) as isize;
        let weights = match &table {
            Some(t) => t[n % phases],
            None => kernel((pos % to) as f64 / to as f64, cutoff),
        };
        let mut acc = 0.0;
        let mut wsum = 0.0;
        for (j, w) in weights.iter().enumerate() {
            let k = base - RESAMPLE_HALF_TAPS + 1 + j as isize;
            if k >= 0 && (k as usize) < x.len() {
                acc += w * x[k as usize];
                wsum += w;
            }
        }
        out.push(if wsum.abs() > 1e-12 { acc / wsum } else { 0.0 });
    }
    Signal::new(out, to_rate)
}

/// Kernel taps for input offsets `1 - 32 ..= 32` around `base`, at fractional position `frac`.
fn kernel(frac: f64, cutoff: f64) -> [f64; 64] {
    let mut w = [0.0; 64];
    for (j, wj) in w.iter_mut().enumerate() {
        let d = frac - (j as f64 - (RESAMPLE_HALF_TAPS - 1) as f64);
        let taper = if d.abs() < RESAMPLE_HALF_TAPS as f64 {
            0.5 + 0.5 * (PI * d / RESAMPLE_HALF_TAPS as f64).cos()
        } else {
            0.0
        };
        *wj = cutoff * sinc(cutoff * d) * taper;
    }
    w
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        1.0
    } else {
        (PI * x).sin() / (PI * x)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn convolve_examples() {
        assert_eq!(convolve(&[1.0, 0.0, 0.0], &[1.0, 2.0], ConvMode::Full).unwrap(), vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(convolve(&[1.0, 2.0, 3.0], &[1.0, 1.0], ConvMode::Full).unwrap(), vec![1.0, 3.0, 5.0, 3.0]);
        let h = [0.3, -1.2, 4.0, 0.5];
        assert_eq!(convolve(&[1.0], &h, ConvMode::Full).unwrap(), h.to_vec());
        assert!(convolve(&[], &h, ConvMode::Full).is_err());
        assert!(convolve(&h, &[], ConvMode::Same).is_err());
    }

    #[test]
    fn convolve_same_is_centered() {
        let y = convolve(&[0.0, 0.0, 1.0, 0.0, 0.0], &[1.0, 2.0, 3.0], ConvMode::Same).unwrap();
        assert_eq!(y, vec![0.0, 1.0, 2.0, 3.0, 0.0]);
    }

    #[test]
    fn rate_changers() {
        assert_eq!(downsample2(&[1.0, 2.0, 3.0, 4.0]), vec![1.0, 3.0]);
        assert_eq!(downsample2(&[5.0]), vec![5.0]);
        assert_eq!(upsample2(&[1.0, 3.0]), vec![1.0, 0.0, 3.0, 0.0]);
        assert!(upsample2(&[]).is_empty());
        let x = [1.0, 2.0, 3.0, 4.0, 5.0];
        assert_eq!(upsample2(&downsample2(&x)), vec![1.0, 0.0, 3.0, 0.0, 5.0, 0.0]);
    }

    #[test]
    fn pad_modes() {
        assert_eq!(pad(&[1.0, 2.0], 4, PadMode::Zero).unwrap(), vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(pad(&[1.0, 2.0], 4, PadMode::Periodic).unwrap(), vec![1.0, 2.0, 1.0, 2.0]);
        assert_eq!(pad(&[1.0, 2.0, 3.0], 5, PadMode::Symmetric).unwrap(), vec![1.0, 2.0, 3.0, 3.0, 2.0]);
        assert_eq!(
            pad(&[1.0, 2.0], 7, PadMode::Symmetric).unwrap(),
            vec![1.0, 2.0, 2.0, 1.0, 1.0, 2.0, 2.0]
        );
        assert!(pad(&[1.0, 2.0], 1, PadMode::Zero).is_err());
        assert!(pad(&[], 3, PadMode::Periodic).is_err());
        assert_eq!(pad(&[], 2, PadMode::Zero).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn norms() {
        assert_eq!(l2_norm(&[3.0, 4.0]), 5.0);
        assert_eq!(dot(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 0.0);
        assert!(matches!(dot(&[1.0], &[1.0, 2.0]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn signal_validation() {
        assert!(Signal::new(vec![0.0, f64::NAN], 8000).is_err());
        assert!(Signal::new(vec![0.0], 0).is_err());
        let s = Signal::new(vec![0.0; 16000], 16000).unwrap();
        assert_eq!(s.duration(), 1.0);
    }

    #[test]
    fn resample_identity_is_exact() {
        let s = Signal::new((0..1000).map(|i| (i as f64 * 0.37).sin()).collect(), 10000).unwrap();
        assert_eq!(resample(&s, 10000).unwrap(), s);
        assert!(resample(&s, 0).is_err());
    }

    #[test]
    fn resample_preserves_dc_and_duration() {
        for (from, to) in [(16000, 10000), (10000, 16000), (44100, 16000), (8000, 22050)] {
            let s = Signal::new(vec![0.25; 3001], from).unwrap();
            let r = resample(&s, to).unwrap();
            assert_eq!(r.rate(), to);
            assert!((r.duration() - s.duration()).abs() <= 1.0 / to as f64);
            for v in r.samples() {
                assert!((v - 0.25).abs() < 1e-6);
            }
        }
    }

    proptest! {
        #[test]
        fn convolution_commutes_and_is_linear(
            x in prop::collection::vec(-1.0f64..1.0, 1..40),
            y in prop::collection::vec(-1.0f64..1.0, 1..40),
            h in prop::collection::vec(-1.0f64..1.0, 1..12),
            a in -3.0f64..3.0,
            b in -3.0f64..3.0,
        ) {
            let xh = convolve(&x, &h, ConvMode::Full).unwrap();
            let hx = convolve(&h, &x, ConvMode::Full).unwrap();
            for (p, q) in xh.iter().zip(&hx) {
                prop_assert!((p - q).abs() < 1e-12);
            }
            let n = x.len().min(y.len());
            let mix: Vec<f64> = (0..n).map(|i| a * x[i] + b * y[i]).collect();
            let lhs = convolve(&mix, &h, ConvMode::Full).unwrap();
            let cx = convolve(&x[..n], &h, ConvMode::Full).unwrap();
            let cy = convolve(&y[..n], &h, ConvMode::Full).unwrap();
            for i in 0..lhs.len() {
                prop_assert!((lhs[i] - (a * cx[i] + b * cy[i])).abs() < 1e-12);
            }
        }

        #[test]
        fn rate_changer_identities(x in prop::collection::vec(-1.0f64..1.0, 0..64)) {
            prop_assert_eq!(downsample2(&upsample2(&x)), x.clone());
            let z = upsample2(&downsample2(&x));
            for (i, v) in x.iter().enumerate() {
                prop_assert_eq!(z[i], if i % 2 == 0 { *v } else { 0.0 });
            }
        }

        #[test]
        fn pad_is_prefix_preserving(
            x in prop::collection::vec(-1.0f64..1.0, 1..20),
            extra in 0usize..50,
            mode in prop_oneof![Just(PadMode::Zero), Just(PadMode::Periodic), Just(PadMode::Symmetric)],
        ) {
            let y = pad(&x, x.len() + extra, mode).unwrap();
            prop_assert_eq!(y.len(), x.len() + extra);
            prop_assert_eq!(&y[..x.len()], &x[..]);
        }

        #[test]
        fn squared_norm_is_self_dot(x in prop::collection::vec(-10.0f64..10.0, 0..50)) {
            let n = l2_norm(&x);
            prop_assert!((n * n - dot(&x, &x).unwrap()).abs() <= 1e-9 * (1.0 + n * n));
        }
    }
}
