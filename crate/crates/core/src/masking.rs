//! One front end over STFT, DWT and WPT, plus ideal time-frequency masks.
//!
//! A [`TFRepresentation`] is viewed as a list of bands: frequency rows for
//! the STFT, `[approx, detail_L, ..., detail_1]` for the DWT and
//! frequency-ordered leaves for the WPT. Masks carry one weight per
//! coefficient in the same layout.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::{istft, stft, StftConfig, StftMatrix};
use crate::signal::{PadMode, Signal};
use crate::wavelet::{iwpt, lookup, wavedec, waverec, wpt, DwtCoeffs, WptLeaves};

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "method", rename_all = "lowercase")]
pub enum DecompositionConfig {
    Stft(StftConfig),
    Dwt { wavelet: String, levels: usize, mode: PadMode },
    Wpt { wavelet: String, levels: usize, mode: PadMode },
}

impl DecompositionConfig {
    pub fn method(&self) -> &'static str {
        match self {
            DecompositionConfig::Stft(_) => "stft",
            DecompositionConfig::Dwt { .. } => "dwt",
            DecompositionConfig::Wpt { .. } => "wpt",
        }
    }

    /// Parameter summary, e.g. `hann win=800 hop=400 fft=1024` or `sym8 levels=6 periodization`.
    pub fn params(&self) -> String {
        match self {
            DecompositionConfig::Stft(c) => {
                format!("{} win={} hop={} fft={}", c.window, c.win_size, c.hop, c.fft_size)
            }
            DecompositionConfig::Dwt { wavelet, levels, mode }
            | DecompositionConfig::Wpt { wavelet, levels, mode } => {
                format!("{wavelet} levels={levels} {mode}")
            }
        }
    }
}

impl std::fmt::Display for DecompositionConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {}", self.method(), self.params())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    Rectangular,
    Ragged,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TfData {
    Stft(StftMatrix),
    Dwt(DwtCoeffs),
    Wpt(WptLeaves),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TFRepresentation {
    pub data: TfData,
    pub config: DecompositionConfig,
}

impl TFRepresentation {
    pub fn layout(&self) -> Layout {
        match self.data {
            TfData::Dwt(_) => Layout::Ragged,
            _ => Layout::Rectangular,
        }
    }

    pub fn rate(&self) -> u32 {
        match &self.data {
            TfData::Stft(m) => m.rate,
            TfData::Dwt(c) => c.rate,
            TfData::Wpt(l) => l.rate,
        }
    }

    pub fn original_len(&self) -> usize {
        match &self.data {
            TfData::Stft(m) => m.original_len,
            TfData::Dwt(c) => c.original_len,
            TfData::Wpt(l) => l.original_len,
        }
    }

    pub fn band_lengths(&self) -> Vec<usize> {
        match &self.data {
            TfData::Stft(m) => m.coeffs.iter().map(Vec::len).collect(),
            TfData::Dwt(c) => c.band_lengths(),
            TfData::Wpt(l) => l.matrix.iter().map(Vec::len).collect(),
        }
    }

    /// Coefficient magnitudes, band by band.
    pub fn magnitudes(&self) -> Vec<Vec<f64>> {
        match &self.data {
            TfData::Stft(m) => m.magnitude(),
            TfData::Dwt(c) => c.bands().iter().map(|b| b.iter().map(|v| v.abs()).collect()).collect(),
            TfData::Wpt(l) => l.matrix.iter().map(|b| b.iter().map(|v| v.abs()).collect()).collect(),
        }
    }

    fn check_congruent(&self, lengths: &[usize]) -> Result<()> {
        let own = self.band_lengths();
        if own != lengths {
            return Err(Error::ShapeMismatch(format!(
                "{} bands {:?}... vs {} bands {:?}...",
                own.len(),
                &own[..own.len().min(4)],
                lengths.len(),
                &lengths[..lengths.len().min(4)]
            )));
        }
        Ok(())
    }

    /// Element-wise combination of two congruent representations.
    fn zip_with(
        &self,
        other: &TFRepresentation,
        complex: impl Fn(Complex64, Complex64) -> Complex64,
        real: impl Fn(f64, f64) -> f64,
    ) -> Result<TFRepresentation> {
        self.check_congruent(&other.band_lengths())?;
        let zip_rows = |a: &[Vec<f64>], b: &[Vec<f64>]| -> Vec<Vec<f64>> {
            a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(&p, &q)| real(p, q)).collect()).collect()
        };
        let data = match (&self.data, &other.data) {
            (TfData::Stft(a), TfData::Stft(b)) => TfData::Stft(StftMatrix {
                coeffs: a
                    .coeffs
                    .iter()
                    .zip(&b.coeffs)
                    .map(|(x, y)| x.iter().zip(y).map(|(&p, &q)| complex(p, q)).collect())
                    .collect(),
                ..a.clone()
            }),
            (TfData::Dwt(a), TfData::Dwt(b)) => {
                let flat: Vec<f64> = crate::wavelet::flatten(a)
                    .iter()
                    .zip(crate::wavelet::flatten(b))
                    .map(|(&p, q)| real(p, q))
                    .collect();
                TfData::Dwt(a.with_flat(&flat)?)
            }
            (TfData::Wpt(a), TfData::Wpt(b)) => {
                TfData::Wpt(WptLeaves { matrix: zip_rows(&a.matrix, &b.matrix), ..a.clone() })
            }
            _ => return Err(Error::ShapeMismatch("different decomposition methods".into())),
        };
        Ok(TFRepresentation { data, config: self.config.clone() })
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &TFRepresentation) -> Result<TFRepresentation> {
        self.zip_with(other, |a, b| a + b, |a, b| a + b)
    }

    /// Coefficient-wise sum of a non-empty list.
    pub fn sum<'a>(mut reps: impl Iterator<Item = &'a TFRepresentation>) -> Result<TFRepresentation> {
        let first = reps.next().ok_or_else(|| Error::invalid("sum of no representations"))?;
        reps.try_fold(first.clone(), |acc, r| acc.add(r))
    }
}

pub fn decompose(s: &Signal, cfg: &DecompositionConfig) -> Result<TFRepresentation> {
    let data = match cfg {
        DecompositionConfig::Stft(c) => TfData::Stft(stft(s, c)?),
        DecompositionConfig::Dwt { wavelet, levels, mode } => {
            TfData::Dwt(wavedec(s, &lookup(wavelet)?, *levels, *mode)?)
        }
        DecompositionConfig::Wpt { wavelet, levels, mode } => {
            TfData::Wpt(wpt(s, &lookup(wavelet)?, *levels, *mode)?)
        }
    };
    Ok(TFRepresentation { data, config: cfg.clone() })
}

pub fn reconstruct(tf: &TFRepresentation) -> Result<Signal> {
    match (&tf.data, &tf.config) {
        (TfData::Stft(m), _) => istft(m),
        (TfData::Dwt(c), DecompositionConfig::Dwt { wavelet, .. }) => waverec(c, &lookup(wavelet)?),
        (TfData::Wpt(l), DecompositionConfig::Wpt { wavelet, .. }) => iwpt(l, &lookup(wavelet)?),
        _ => Err(Error::ShapeMismatch("coefficients do not match their configuration".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaskKind {
    Binary,
    Ratio,
}

/// Per-coefficient weights in `[0, 1]`, laid out like the representation they came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Mask {
    pub weights: Vec<Vec<f64>>,
    pub kind: MaskKind,
}

impl Mask {
    /// Constant mask congruent with `tf`.
    pub fn filled(tf: &TFRepresentation, value: f64, kind: MaskKind) -> Mask {
        Mask { weights: tf.band_lengths().iter().map(|&n| vec![value; n]).collect(), kind }
    }

    pub fn band_lengths(&self) -> Vec<usize> {
        self.weights.iter().map(Vec::len).collect()
    }
}

fn bin_magnitudes(target: &TFRepresentation, interference: &TFRepresentation) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>)> {
    if std::mem::discriminant(&target.data) != std::mem::discriminant(&interference.data) {
        return Err(Error::ShapeMismatch("different decomposition methods".into()));
    }
    target.check_congruent(&interference.band_lengths())?;
    Ok((target.magnitudes(), interference.magnitudes()))
}

/// 1 where `|S| - |N| >= threshold`, else 0.
pub fn ideal_binary_mask(target: &TFRepresentation, interference: &TFRepresentation, threshold: f64) -> Result<Mask> {
    let (s, n) = bin_magnitudes(target, interference)?;
    let weights = s
        .iter()
        .zip(&n)
        .map(|(sb, nb)| sb.iter().zip(nb).map(|(a, b)| if a - b >= threshold { 1.0 } else { 0.0 }).collect())
        .collect();
    Ok(Mask { weights, kind: MaskKind::Binary })
}

/// Energy below which a bin counts as empty for the ratio mask.
const EMPTY_BIN_ENERGY: f64 = 1e-30;

/// `|S|^2 / (|S|^2 + |N|^2)`, or 0 where both energies are negligible.
pub fn ideal_ratio_mask(target: &TFRepresentation, interference: &TFRepresentation) -> Result<Mask> {
    let (s, n) = bin_magnitudes(target, interference)?;
    let weights = s
        .iter()
        .zip(&n)
        .map(|(sb, nb)| {
            sb.iter()
                .zip(nb)
                .map(|(a, b)| {
                    let (es, en) = (a * a, b * b);
                    if es < EMPTY_BIN_ENERGY && en < EMPTY_BIN_ENERGY {
                        0.0
                    } else {
                        es / (es + en)
                    }
                })
                .collect()
        })
        .collect();
    Ok(Mask { weights, kind: MaskKind::Ratio })
}

/// Scales every coefficient by its weight; complex phases are kept.
pub fn apply_mask(tf: &TFRepresentation, mask: &Mask) -> Result<TFRepresentation> {
    tf.check_congruent(&mask.band_lengths())?;
    let scale_rows = |rows: &[Vec<f64>]| -> Vec<Vec<f64>> {
        rows.iter().zip(&mask.weights).map(|(r, w)| r.iter().zip(w).map(|(v, g)| v * g).collect()).collect()
    };
    let data = match &tf.data {
        TfData::Stft(m) => TfData::Stft(StftMatrix {
            coeffs: m
                .coeffs
                .iter()
                .zip(&mask.weights)
                .map(|(r, w)| r.iter().zip(w).map(|(v, g)| v * g).collect())
                .collect(),
            ..m.clone()
        }),
        TfData::Dwt(c) => {
            let bands: Vec<Vec<f64>> = c.bands().iter().map(|b| b.to_vec()).collect();
            TfData::Dwt(c.with_flat(&scale_rows(&bands).concat())?)
        }
        TfData::Wpt(l) => TfData::Wpt(WptLeaves { matrix: scale_rows(&l.matrix), ..l.clone() }),
    };
    Ok(TFRepresentation { data, config: tf.config.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::WindowKind;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn noise(len: usize, seed: u64) -> Signal {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Signal::new((0..len).map(|_| rng.gen_range(-0.5..0.5)).collect(), 16000).unwrap()
    }

    fn configs() -> Vec<DecompositionConfig> {
        vec![
            DecompositionConfig::Stft(StftConfig::from_millis(WindowKind::Hann, 32.0, 0.5, 16000).unwrap()),
            DecompositionConfig::Dwt { wavelet: "db4".into(), levels: 5, mode: PadMode::Periodic },
            DecompositionConfig::Wpt { wavelet: "sym8".into(), levels: 6, mode: PadMode::Periodic },
        ]
    }

    fn rel_err(a: &Signal, b: &Signal) -> f64 {
        let num: f64 = a.samples().iter().zip(b.samples()).map(|(x, y)| (x - y).powi(2)).sum();
        let den: f64 = a.samples().iter().map(|x| x * x).sum();
        (num / den).sqrt()
    }

    #[test]
    fn round_trips() {
        let s = noise(5000, 1);
        for cfg in configs() {
            let back = reconstruct(&decompose(&s, &cfg).unwrap()).unwrap();
            assert!(rel_err(&s, &back) < 1e-8, "{cfg}");
        }
    }

    #[test]
    fn decomposition_is_linear() {
        let (s, n) = (noise(3000, 2), noise(3000, 3));
        let sum = Signal::new(s.samples().iter().zip(n.samples()).map(|(a, b)| a + b).collect(), 16000).unwrap();
        for cfg in configs() {
            let lhs = decompose(&sum, &cfg).unwrap();
            let rhs = decompose(&s, &cfg).unwrap().add(&decompose(&n, &cfg).unwrap()).unwrap();
            let diff = lhs.zip_with(&rhs, |a, b| a - b, |a, b| a - b).unwrap();
            assert!(diff.magnitudes().iter().flatten().all(|v| *v < 1e-9), "{cfg}");
        }
    }

    #[test]
    fn binary_mask_rules() {
        let s = decompose(&noise(1024, 4), &configs()[1]).unwrap();
        let triple = apply_mask(&s, &Mask::filled(&s, 3.0, MaskKind::Ratio)).unwrap();
        assert!(ideal_binary_mask(&triple, &s, 0.0).unwrap().weights.iter().flatten().all(|&w| w == 1.0));
        // ties go to the target
        assert!(ideal_binary_mask(&s, &s, 0.0).unwrap().weights.iter().flatten().all(|&w| w == 1.0));
        assert!(ideal_binary_mask(&s, &s, f64::INFINITY).unwrap().weights.iter().flatten().all(|&w| w == 0.0));
        assert!(ideal_binary_mask(&s, &triple, f64::NEG_INFINITY)
            .unwrap()
            .weights
            .iter()
            .flatten()
            .all(|&w| w == 1.0));
    }

    #[test]
    fn ratio_mask_values() {
        let s = decompose(&noise(1024, 5), &configs()[2]).unwrap();
        let triple = apply_mask(&s, &Mask::filled(&s, 3.0, MaskKind::Ratio)).unwrap();
        for w in ideal_ratio_mask(&s, &s).unwrap().weights.iter().flatten() {
            assert!((w - 0.5).abs() < 1e-15);
        }
        for w in ideal_ratio_mask(&s, &triple).unwrap().weights.iter().flatten() {
            assert!((w - 0.1).abs() < 1e-12);
        }
        let zero = apply_mask(&s, &Mask::filled(&s, 0.0, MaskKind::Binary)).unwrap();
        assert!(ideal_ratio_mask(&zero, &zero).unwrap().weights.iter().flatten().all(|&w| w == 0.0));
        assert!(ideal_binary_mask(&zero, &zero, 0.0).unwrap().weights.iter().flatten().all(|&w| w == 1.0));
    }

    #[test]
    fn noiseless_ratio_mask_recovers_target() {
        let x = noise(4000, 6);
        for cfg in configs() {
            let s = decompose(&x, &cfg).unwrap();
            let zero = apply_mask(&s, &Mask::filled(&s, 0.0, MaskKind::Binary)).unwrap();
            let m = ideal_ratio_mask(&s, &zero).unwrap();
            assert!(m.weights.iter().flatten().all(|&w| w == 1.0 || w == 0.0));
            let back = reconstruct(&apply_mask(&s, &m).unwrap()).unwrap();
            assert!(rel_err(&x, &back) < 1e-8, "{cfg}");
        }
    }

    #[test]
    fn mask_application() {
        let x = noise(2048, 7);
        let cfg = &configs()[0];
        let tf = decompose(&x, cfg).unwrap();
        assert_eq!(apply_mask(&tf, &Mask::filled(&tf, 1.0, MaskKind::Binary)).unwrap(), tf);
        let silent = reconstruct(&apply_mask(&tf, &Mask::filled(&tf, 0.0, MaskKind::Binary)).unwrap()).unwrap();
        assert!(silent.samples().iter().all(|&v| v == 0.0));
        let other = decompose(&noise(2048, 8), cfg).unwrap();
        let ibm = ideal_binary_mask(&tf, &other, 0.0).unwrap();
        let once = apply_mask(&tf, &ibm).unwrap();
        assert_eq!(apply_mask(&once, &ibm).unwrap(), once);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = decompose(&noise(2048, 9), &configs()[0]).unwrap();
        let b = decompose(&noise(4096, 9), &configs()[0]).unwrap();
        let c = decompose(&noise(2048, 9), &configs()[1]).unwrap();
        assert!(ideal_binary_mask(&a, &b, 0.0).is_err());
        assert!(ideal_ratio_mask(&a, &c).is_err());
        assert!(apply_mask(&a, &Mask::filled(&c, 1.0, MaskKind::Binary)).is_err());
    }
}
