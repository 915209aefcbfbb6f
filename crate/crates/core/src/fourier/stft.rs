use num_complex::Complex64;

use super::fft::RealFftPlan;
use super::window::{make_window, WindowKind};
use crate::error::{Error, Result};
use crate::signal::Signal;

/// Framing parameters of a short-time Fourier transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct StftConfig {
    pub window: WindowKind,
    pub win_size: usize,
    pub hop: usize,
    pub fft_size: usize,
}

/// `floor(ms * rate / 1000)` samples.
pub fn ms_to_samples(ms: f64, rate: u32) -> usize {
    // the epsilon absorbs representation error in values such as 0.032 * 16000
    (ms * rate as f64 / 1000.0 + 1e-9).floor().max(0.0) as usize
}

impl StftConfig {
    /// FFT size is the next power of two at or above `win_size`.
    pub fn new(window: WindowKind, win_size: usize, hop: usize) -> Result<Self> {
        let cfg = StftConfig { window, win_size, hop, fft_size: win_size.next_power_of_two() };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Window given in milliseconds, hop as a fraction of the window (`round(fraction * win)`).
    pub fn from_millis(window: WindowKind, win_ms: f64, hop_fraction: f64, rate: u32) -> Result<Self> {
        let win = ms_to_samples(win_ms, rate);
        let hop = (hop_fraction * win as f64).round() as usize;
        StftConfig::new(window, win, hop)
    }

    pub fn with_fft_size(mut self, fft_size: usize) -> Result<Self> {
        self.fft_size = fft_size;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.hop == 0 || self.hop > self.win_size || self.win_size > self.fft_size {
            return Err(Error::invalid(format!(
                "STFT requires 0 < hop ({}) <= window ({}) <= fft size ({})",
                self.hop, self.win_size, self.fft_size
            )));
        }
        if self.win_size < 2 {
            return Err(Error::invalid("STFT window must have at least 2 samples"));
        }
        if !self.fft_size.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(self.fft_size));
        }
        Ok(())
    }

    pub fn bins(&self) -> usize {
        self.fft_size / 2 + 1
    }

    fn edge_pad(&self) -> usize {
        self.win_size / 2
    }

    /// Number of frames produced for a signal of `len` samples.
    pub fn frame_count(&self, len: usize) -> usize {
        let padded = len + 2 * self.edge_pad();
        1 + (padded.saturating_sub(self.win_size)).div_ceil(self.hop)
    }
}

/// STFT coefficients, `coeffs[frequency][frame]`, row 0 being DC.
#[derive(Debug, Clone, PartialEq)]
pub struct StftMatrix {
    pub coeffs: Vec<Vec<Complex64>>,
    pub config: StftConfig,
    pub rate: u32,
    pub original_len: usize,
}

impl StftMatrix {
    pub fn rows(&self) -> usize {
        self.coeffs.len()
    }

    pub fn cols(&self) -> usize {
        self.coeffs.first().map_or(0, Vec::len)
    }

    pub fn magnitude(&self) -> Vec<Vec<f64>> {
        self.coeffs.iter().map(|row| row.iter().map(|c| c.norm()).collect()).collect()
    }

    pub fn frequencies(&self) -> Vec<f64> {
        bin_frequencies(self.config.fft_size, self.rate)
    }
}

/// Analyzed frequencies `k * rate / fft_size` for `k = 0..=fft_size/2`.
pub fn stft_frequencies(fft_size: usize, rate: u32) -> Result<Vec<f64>> {
    if !fft_size.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(fft_size));
    }
    Ok(bin_frequencies(fft_size, rate))
}

fn bin_frequencies(fft_size: usize, rate: u32) -> Vec<f64> {
    (0..=fft_size / 2).map(|k| k as f64 * rate as f64 / fft_size as f64).collect()
}

/// Forward STFT. The signal is zero-padded by `win/2` on both sides and
/// framed at stride `hop` until every padded sample is covered.
pub fn stft(s: &Signal, cfg: &StftConfig) -> Result<StftMatrix> {
    cfg.validate()?;
    if s.is_empty() {
        return Err(Error::TooShort("cannot frame an empty signal".into()));
    }
    let window = make_window(cfg.window, cfg.win_size)?;
    let plan = RealFftPlan::new(cfg.fft_size)?;
    let pad = cfg.edge_pad() as isize;
    let x = s.samples();
    let frames = cfg.frame_count(x.len());

    let mut coeffs = vec![vec![Complex64::default(); frames]; cfg.bins()];
    let mut frame = vec![0.0; cfg.fft_size];
    let mut spectrum = vec![Complex64::default(); cfg.bins()];
    for m in 0..frames {
        let start = (m * cfg.hop) as isize - pad;
        frame.fill(0.0);
        for (j, w) in window.iter().enumerate() {
            let i = start + j as isize;
            if i >= 0 && (i as usize) < x.len() {
                frame[j] = x[i as usize] * w;
            }
        }
        plan.forward(&frame, &mut spectrum);
        for (row, v) in coeffs.iter_mut().zip(&spectrum) {
            row[m] = *v;
        }
    }
    Ok(StftMatrix { coeffs, config: *cfg, rate: s.rate(), original_len: x.len() })
}

/// Weighted overlap-add inverse with window-square normalization.
pub fn istft(m: &StftMatrix) -> Result<Signal> {
    let cfg = &m.config;
    cfg.validate()?;
    if m.rows() != cfg.bins() {
        return Err(Error::ShapeMismatch(format!(
            "STFT matrix has {} rows, expected {}",
            m.rows(),
            cfg.bins()
        )));
    }
    let frames = m.cols();
    if m.coeffs.iter().any(|r| r.len() != frames) {
        return Err(Error::ShapeMismatch("ragged STFT matrix".into()));
    }
    let window = make_window(cfg.window, cfg.win_size)?;
    let plan = RealFftPlan::new(cfg.fft_size)?;
    let span = if frames == 0 { 0 } else { (frames - 1) * cfg.hop + cfg.win_size };
    let mut num = vec![0.0; span];
    let mut den = vec![0.0; span];
    let mut spectrum = vec![Complex64::default(); cfg.bins()];
    let mut frame = vec![0.0; cfg.fft_size];
    for t in 0..frames {
        for (s, row) in spectrum.iter_mut().zip(&m.coeffs) {
            *s = row[t];
        }
        plan.inverse(&spectrum, &mut frame);
        let start = t * cfg.hop;
        for (j, w) in window.iter().enumerate() {
            num[start + j] += w * frame[j];
            den[start + j] += w * w;
        }
    }
    let pad = cfg.edge_pad();
    let mut out = Vec::with_capacity(m.original_len);
    for i in 0..m.original_len {
        let p = i + pad;
        let d = den.get(p).copied().unwrap_or(0.0);
        if d < 1e-12 {
            return Err(Error::NotInvertible { index: i });
        }
        out.push(num[p] / d);
    }
    Signal::new(out, m.rate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::fft::dft_naive;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn noise(len: usize, seed: u64) -> Signal {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Signal::new((0..len).map(|_| rng.gen_range(-1.0..1.0)).collect(), 16000).unwrap()
    }

    fn rel_err(a: &[f64], b: &[f64]) -> f64 {
        let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum();
        let den: f64 = a.iter().map(|x| x * x).sum();
        (num / den).sqrt()
    }

    #[test]
    fn config_invariants() {
        assert!(StftConfig::new(WindowKind::Hann, 512, 0).is_err());
        assert!(StftConfig::new(WindowKind::Hann, 512, 513).is_err());
        assert!(StftConfig::new(WindowKind::Hann, 512, 256).unwrap().with_fft_size(256).is_err());
        assert!(StftConfig::new(WindowKind::Hann, 300, 100).unwrap().with_fft_size(768).is_err());
        let c = StftConfig::new(WindowKind::Hann, 400, 200).unwrap();
        assert_eq!(c.fft_size, 512);
        assert_eq!(ms_to_samples(32.0, 16000), 512);
        assert_eq!(ms_to_samples(5.0, 16000), 80);
        let c = StftConfig::from_millis(WindowKind::Hann, 50.0, 0.5, 16000).unwrap();
        assert_eq!((c.win_size, c.hop, c.fft_size), (800, 400, 1024));
    }

    #[test]
    fn frequency_axis() {
        let f = stft_frequencies(512, 16000).unwrap();
        assert_eq!(f.len(), 257);
        assert_eq!(f[0], 0.0);
        assert_eq!(f[1], 31.25);
        assert_eq!(f[256], 8000.0);
        let f = stft_frequencies(128, 4000).unwrap();
        assert_eq!(f.len(), 65);
        assert_eq!(f[64], 2000.0);
        assert!(stft_frequencies(100, 4000).is_err());
    }

    #[test]
    fn listing_dimensions() {
        let cfg = StftConfig::new(WindowKind::Hann, ms_to_samples(32.0, 16000), 256).unwrap();
        assert_eq!(cfg.bins(), 257);
        let cols = cfg.frame_count(959_669) as i64;
        assert!((cols - 3750).abs() <= 2, "{cols}");
    }

    #[test]
    fn exact_bin_sinusoid_rectangular() {
        // frequency of bin 8 at N = 64; one frame covers whole periods
        let n = 64;
        let x: Vec<f64> = (0..4 * n).map(|t| (2.0 * PI * 8.0 * t as f64 / n as f64).cos()).collect();
        let s = Signal::new(x, 6400).unwrap();
        let cfg = StftConfig::new(WindowKind::Rectangular, n, n).unwrap();
        let m = stft(&s, &cfg).unwrap();
        // frame 1 starts at sample 32 and lies fully inside the signal
        let col: Vec<f64> = (0..m.rows()).map(|k| m.coeffs[k][1].norm()).collect();
        let total: f64 = col.iter().map(|v| v * v).sum();
        assert!((col[8] * col[8] / total - 1.0).abs() < 1e-12);
        let frame: Vec<Complex64> =
            s.samples()[32..32 + n].iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let oracle = dft_naive(&frame);
        for k in 0..m.rows() {
            assert!((m.coeffs[k][1] - oracle[k]).norm() < 1e-9);
        }
    }

    #[test]
    fn round_trips() {
        let s = noise(5000, 1);
        for (kind, win, hop) in [
            (WindowKind::Hann, 512, 256),
            (WindowKind::Hann, 512, 128),
            (WindowKind::Hann, 400, 300),
            (WindowKind::Rectangular, 256, 256),
            (WindowKind::Rectangular, 80, 60),
        ] {
            let cfg = StftConfig::new(kind, win, hop).unwrap();
            let back = istft(&stft(&s, &cfg).unwrap()).unwrap();
            assert_eq!(back.len(), s.len());
            assert!(rel_err(s.samples(), back.samples()) < 1e-6, "{cfg:?}");
        }
    }

    #[test]
    fn non_overlapping_hann_is_rejected() {
        let s = noise(1000, 2);
        let cfg = StftConfig::new(WindowKind::Hann, 128, 128).unwrap();
        assert!(matches!(istft(&stft(&s, &cfg).unwrap()), Err(Error::NotInvertible { .. })));
    }

    #[test]
    fn frame_parseval() {
        let s = noise(2048, 4);
        let cfg = StftConfig::new(WindowKind::Hann, 300, 150).unwrap();
        let m = stft(&s, &cfg).unwrap();
        let w = make_window(WindowKind::Hann, 300).unwrap();
        let t = 5;
        let start = t * 150 - 150;
        let time_energy: f64 = (0..300).map(|j| (s.samples()[start + j] * w[j]).powi(2)).sum();
        // one-sided spectrum: interior bins count twice
        let n = cfg.fft_size;
        let freq_energy: f64 = (0..m.rows())
            .map(|k| {
                let e = m.coeffs[k][t].norm_sqr();
                if k == 0 || k == n / 2 { e } else { 2.0 * e }
            })
            .sum::<f64>()
            / n as f64;
        assert!((time_energy - freq_energy).abs() <= 1e-9 * time_energy);
    }

    #[test]
    fn empty_signal_is_rejected() {
        let s = Signal::new(vec![], 8000).unwrap();
        let cfg = StftConfig::new(WindowKind::Hann, 64, 32).unwrap();
        assert!(stft(&s, &cfg).is_err());
    }
}
