use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tfsep::fourier::rfft;
use tfsep::signal::resample;
use tfsep::wavelet::{
    count_vanishing_moments, cwt_ricker, dwt_step, lookup, ricker_scale_to_frequency, wpt, RICKER_CENTRAL_FREQUENCY,
};
use tfsep::{PadMode, Signal};

fn tone(freq: f64, rate: u32, len: usize) -> Signal {
    Signal::new((0..len).map(|t| (2.0 * PI * freq * t as f64 / rate as f64).sin()).collect(), rate).unwrap()
}

#[test]
fn resampled_tone_keeps_its_frequency() {
    let s = tone(440.0, 44100, 50_000);
    let r = resample(&s, 16000).unwrap();
    assert_eq!(r.len(), (50_000.0f64 * 16000.0 / 44100.0).round() as usize);
    let n = 16384;
    let spec = rfft(&r.samples()[..n]).unwrap();
    let peak = (0..spec.len()).max_by(|&a, &b| spec[a].norm().total_cmp(&spec[b].norm())).unwrap();
    let expected = 440.0 * n as f64 / 16000.0;
    assert!((peak as f64 - expected).abs() <= 1.0, "peak bin {peak}, expected {expected:.2}");
}

#[test]
fn polynomials_vanish_in_interior_details() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let n = 1024;
    for p in 1..=8 {
        let names = if p == 1 { vec!["db1".to_string()] } else { vec![format!("db{p}"), format!("sym{p}")] };
        for name in names {
            let bank = lookup(&name).unwrap();
            assert_eq!(count_vanishing_moments(&bank, 12, 1e-8), p, "{name}");
            let coeffs: Vec<f64> = (0..p).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let x: Vec<f64> = (0..n)
                .map(|t| {
                    let u = t as f64 / n as f64;
                    coeffs.iter().rev().fold(0.0, |acc, c| acc * u + c)
                })
                .collect();
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            let (_, detail) = dwt_step(&x, &bank, PadMode::Periodic).unwrap();
            let edge = bank.filter_len();
            let worst = detail[edge..detail.len() - edge].iter().fold(0.0f64, |m, v| m.max(v.abs()));
            assert!(worst <= 1e-6 * norm, "{name}: {worst:e} vs {norm}");
        }
    }
}

/// Energy-weighted mean time of each frequency-ordered leaf for a chirp
/// sweeping 0 Hz to Nyquist. Symmetric extension keeps the Nyquist end of
/// the sweep from wrapping into the first samples of the top leaves.
fn chirp_ridge(wavelet: &str, levels: usize) -> Vec<f64> {
    let rate = 16000;
    let n = 1 << 15;
    let duration = n as f64 / rate as f64;
    let (f_start, f_end) = (0.0, rate as f64 / 2.0);
    let k = (f_end - f_start) / duration;
    let x: Vec<f64> = (0..n)
        .map(|t| {
            let tt = t as f64 / rate as f64;
            (2.0 * PI * (f_start * tt + 0.5 * k * tt * tt)).sin()
        })
        .collect();
    let leaves = wpt(&Signal::new(x, rate).unwrap(), &lookup(wavelet).unwrap(), levels, PadMode::Symmetric).unwrap();
    leaves
        .matrix
        .iter()
        .map(|row| {
            let e: f64 = row.iter().map(|v| v * v).sum();
            row.iter().enumerate().map(|(i, v)| i as f64 * v * v).sum::<f64>() / e
        })
        .collect()
}

#[test]
fn chirp_ridge_rises_through_frequency_ordered_leaves() {
    for (wavelet, levels) in [("sym8", 3), ("sym8", 4), ("db10", 5)] {
        let ridge = chirp_ridge(wavelet, levels);
        assert!(ridge.windows(2).all(|w| w[0] < w[1]), "{wavelet} L={levels}: {ridge:?}");
    }
}

#[test]
fn ricker_response_peaks_at_matching_scale() {
    let rate = 1000;
    let scales: Vec<f64> = (1..=64).map(f64::from).collect();
    for f0 in [8.0, 12.5, 25.0, 60.0] {
        let s = tone(f0, rate, 4000);
        let rows = cwt_ricker(&s, &scales).unwrap();
        let power: Vec<f64> = rows.iter().map(|r| r[600..3400].iter().map(|v| v * v).sum()).collect();
        let best = (0..power.len()).max_by(|&a, &b| power[a].total_cmp(&power[b])).unwrap();
        let expected = RICKER_CENTRAL_FREQUENCY * rate as f64 / f0;
        assert!((scales[best] - expected).abs() <= 1.0, "f0 {f0}: scale {} vs {expected:.2}", scales[best]);
        assert!((ricker_scale_to_frequency(expected, rate) - f0).abs() < 1e-9);
    }
}

