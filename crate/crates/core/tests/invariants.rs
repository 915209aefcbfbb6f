use proptest::prelude::*;

use tfsep::fourier::{fft, ifft, istft, rfft, stft, Complex64, StftConfig, WindowKind};
use tfsep::masking::{apply_mask, decompose, ideal_binary_mask, ideal_ratio_mask, reconstruct, DecompositionConfig, Mask, MaskKind};
use tfsep::metrics::{mse, si_sdr, snr, stoi};
use tfsep::wavelet::{gray_permutation, inverse_permutation, iwpt, lookup, wavedec, waverec, wpt};
use tfsep::{PadMode, Signal};

const BANKS: [&str; 6] = ["haar", "db2", "db4", "sym5", "sym8", "coif3"];

fn samples(lo: usize, hi: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, lo..hi)
}

fn mode() -> impl Strategy<Value = PadMode> {
    prop_oneof![Just(PadMode::Zero), Just(PadMode::Periodic), Just(PadMode::Symmetric)]
}

fn rel_err(a: &[f64], b: &[f64]) -> f64 {
    let diff: f64 = a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
    let norm: f64 = b.iter().map(|v| v * v).sum::<f64>().sqrt();
    diff / norm.max(1e-300)
}

fn energy(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn config() -> impl Strategy<Value = DecompositionConfig> {
    prop_oneof![
        (prop::sample::select(vec![16usize, 32, 64]), prop::sample::select(vec![2usize, 4])).prop_map(|(w, d)| {
            DecompositionConfig::Stft(StftConfig::new(WindowKind::Hann, w, w / d).unwrap())
        }),
        (prop::sample::select(BANKS.to_vec()), 1usize..5, mode())
            .prop_map(|(b, levels, mode)| DecompositionConfig::Dwt { wavelet: b.into(), levels, mode }),
        (prop::sample::select(BANKS.to_vec()), 1usize..5, mode())
            .prop_map(|(b, levels, mode)| DecompositionConfig::Wpt { wavelet: b.into(), levels, mode }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fft_inverts_and_keeps_energy(log_n in 0u32..10, seed in prop::collection::vec(-1.0f64..1.0, 2048)) {
        let n = 1usize << log_n;
        let x: Vec<Complex64> = (0..n).map(|i| Complex64::new(seed[2 * i], seed[2 * i + 1])).collect();
        let spectrum = fft(&x).unwrap();
        let back = ifft(&spectrum).unwrap();
        for (a, b) in back.iter().zip(&x) {
            prop_assert!((a - b).norm() < 1e-12);
        }
        let e_time: f64 = x.iter().map(|v| v.norm_sqr()).sum();
        let e_freq: f64 = spectrum.iter().map(|v| v.norm_sqr()).sum::<f64>() / n as f64;
        prop_assert!((e_time - e_freq).abs() <= 1e-10 * e_time.max(1.0));
    }

    #[test]
    fn rfft_is_half_of_complex_fft(log_n in 1u32..10, seed in samples(512, 513)) {
        let x = &seed[..1usize << log_n];
        let half = rfft(x).unwrap();
        let full = fft(&x.iter().map(|&v| Complex64::new(v, 0.0)).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(half.len(), x.len() / 2 + 1);
        for (a, b) in half.iter().zip(&full) {
            prop_assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn stft_round_trip(x in samples(1, 600), win in prop::sample::select(vec![8usize, 32, 100]), frac in 1usize..5, hann in any::<bool>()) {
        // Hann needs at least 50% overlap to stay invertible
        let hop = if hann { (win / 2).max(1) / frac.min(2) } else { (win / frac).max(1) };
        let kind = if hann { WindowKind::Hann } else { WindowKind::Rectangular };
        let cfg = StftConfig::new(kind, win, hop).unwrap();
        let s = Signal::new(x.clone(), 16000).unwrap();
        let y = istft(&stft(&s, &cfg).unwrap()).unwrap();
        prop_assert_eq!(y.len(), x.len());
        prop_assert!(rel_err(y.samples(), &x) < 1e-9);
    }

    #[test]
    fn dwt_round_trip(x in samples(64, 700), bank in prop::sample::select(BANKS.to_vec()), levels in 1usize..7, mode in mode()) {
        let bank = lookup(bank).unwrap();
        let s = Signal::new(x.clone(), 8000).unwrap();
        let y = waverec(&wavedec(&s, &bank, levels, mode).unwrap(), &bank).unwrap();
        prop_assert_eq!(y.len(), x.len());
        prop_assert!(rel_err(y.samples(), &x) < 1e-10);
    }

    #[test]
    fn wpt_round_trip(x in samples(32, 500), bank in prop::sample::select(BANKS.to_vec()), levels in 1usize..6, mode in mode()) {
        let bank = lookup(bank).unwrap();
        let s = Signal::new(x.clone(), 8000).unwrap();
        let y = iwpt(&wpt(&s, &bank, levels, mode).unwrap(), &bank).unwrap();
        prop_assert_eq!(y.len(), x.len());
        prop_assert!(rel_err(y.samples(), &x) < 1e-10);
    }

    #[test]
    fn periodized_transforms_are_orthogonal(blocks in 1usize..8, seed in samples(256, 257), bank in prop::sample::select(BANKS.to_vec()), levels in 1usize..5) {
        let x = &seed[..(blocks << levels).min(256)];
        let bank = lookup(bank).unwrap();
        let s = Signal::new(x.to_vec(), 8000).unwrap();
        let e = energy(x);
        let dwt_e: f64 = wavedec(&s, &bank, levels, PadMode::Periodic).unwrap().bands().iter().map(|b| energy(b)).sum();
        let wpt_e: f64 = wpt(&s, &bank, levels, PadMode::Periodic).unwrap().matrix.iter().map(|b| energy(b)).sum();
        prop_assert!((dwt_e - e).abs() <= 1e-10 * e.max(1.0));
        prop_assert!((wpt_e - e).abs() <= 1e-10 * e.max(1.0));
    }

    #[test]
    fn gray_order_is_a_reflected_code(levels in 0usize..11) {
        let p = gray_permutation(levels);
        let n = 1usize << levels;
        let mut sorted = p.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..n).collect::<Vec<_>>());
        let inv = inverse_permutation(&p);
        prop_assert!((0..n).all(|i| inv[p[i]] == i));
        // listed by frequency, the filter paths form the binary reflected Gray code
        prop_assert!((0..n).all(|i| inv[i] == i ^ (i >> 1)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn masks_are_bounded_and_complementary(a in samples(600, 601), b in samples(600, 601), cfg in config()) {
        let s = decompose(&Signal::new(a, 16000).unwrap(), &cfg).unwrap();
        let n = decompose(&Signal::new(b, 16000).unwrap(), &cfg).unwrap();
        let ibm = ideal_binary_mask(&s, &n, 0.0).unwrap();
        let ibm_rev = ideal_binary_mask(&n, &s, 0.0).unwrap();
        let irm = ideal_ratio_mask(&s, &n).unwrap();
        let irm_rev = ideal_ratio_mask(&n, &s).unwrap();
        for (band, weights) in ibm.weights.iter().enumerate() {
            for (k, &w) in weights.iter().enumerate() {
                prop_assert!(w == 0.0 || w == 1.0);
                prop_assert!(w + ibm_rev.weights[band][k] >= 1.0);
                let r = irm.weights[band][k];
                prop_assert!((0.0..=1.0).contains(&r));
                let both = r + irm_rev.weights[band][k];
                // bins empty in both inputs get weight 0 on each side
                prop_assert!((both - 1.0).abs() < 1e-12 || both == 0.0);
            }
        }
    }

    #[test]
    fn masking_is_linear_in_the_coefficients(a in samples(600, 601), b in samples(600, 601), cfg in config()) {
        let sa = Signal::new(a.clone(), 16000).unwrap();
        let sb = Signal::new(b.clone(), 16000).unwrap();
        let ta = decompose(&sa, &cfg).unwrap();
        let tb = decompose(&sb, &cfg).unwrap();
        let ones = Mask::filled(&ta, 1.0, MaskKind::Binary);
        let zeros = Mask::filled(&ta, 0.0, MaskKind::Binary);
        let kept = reconstruct(&apply_mask(&ta, &ones).unwrap()).unwrap();
        prop_assert!(rel_err(kept.samples(), &a) < 1e-9);
        prop_assert!(reconstruct(&apply_mask(&ta, &zeros).unwrap()).unwrap().samples().iter().all(|v| v.abs() < 1e-12));
        // the binary mask and its complement split the mixture into two parts that add back up
        let mix: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let tm = decompose(&Signal::new(mix.clone(), 16000).unwrap(), &cfg).unwrap();
        let ibm = ideal_binary_mask(&ta, &tb, 0.0).unwrap();
        let complement = Mask { weights: ibm.weights.iter().map(|r| r.iter().map(|w| 1.0 - w).collect()).collect(), kind: MaskKind::Binary };
        let p = reconstruct(&apply_mask(&tm, &ibm).unwrap()).unwrap();
        let q = reconstruct(&apply_mask(&tm, &complement).unwrap()).unwrap();
        let sum: Vec<f64> = p.samples().iter().zip(q.samples()).map(|(x, y)| x + y).collect();
        prop_assert!(rel_err(&sum, &mix) < 1e-9);
    }

    #[test]
    fn metric_identities(s in samples(64, 400), noise in samples(400, 401), gain in 0.05f64..20.0, alpha in -3.0f64..3.0) {
        prop_assume!(energy(&s) > 1e-3);
        let e: Vec<f64> = noise[..s.len()].iter().map(|v| 0.1 * v).collect();
        let est: Vec<f64> = s.iter().zip(&e).map(|(a, b)| a + b).collect();
        let scaled: Vec<f64> = est.iter().map(|v| gain * v).collect();
        prop_assert!((si_sdr(&s, &est).unwrap() - si_sdr(&s, &scaled).unwrap()).abs() < 1e-9);

        let m = mse(&s, &est).unwrap();
        prop_assert!(m >= 0.0);
        prop_assert!((m - mse(&est, &s).unwrap()).abs() < 1e-15);

        prop_assume!((alpha - 1.0).abs() > 1e-3);
        let as_: Vec<f64> = s.iter().map(|v| alpha * v).collect();
        let expected = -20.0 * (1.0 - alpha).abs().log10();
        prop_assert!((snr(&s, &as_).unwrap() - expected).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn stoi_stays_in_unit_interval(clean in samples(8000, 8001), noise in samples(8000, 8001), level in 0.0f64..3.0) {
        let deg: Vec<f64> = clean.iter().zip(&noise).map(|(c, n)| c + level * n).collect();
        let d = stoi(&clean, &deg, 16000).unwrap();
        prop_assert!((0.0..=1.0).contains(&d));
        prop_assert!((stoi(&clean, &clean, 16000).unwrap() - 1.0).abs() < 1e-9);
    }
}
