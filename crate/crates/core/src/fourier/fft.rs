use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Precomputed twiddles and bit-reversal order for an in-place radix-2 FFT.
#[derive(Debug, Clone)]
pub struct FftPlan {
    n: usize,
    twiddles: Vec<Complex64>,
    bitrev: Vec<usize>,
}

impl FftPlan {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(n));
        }
        let twiddles = (0..n / 2)
            .map(|k| Complex64::from_polar(1.0, -2.0 * PI * k as f64 / n as f64))
            .collect();
        let bits = n.trailing_zeros();
        let bitrev = (0..n)
            .map(|i| if bits == 0 { 0 } else { i.reverse_bits() >> (usize::BITS - bits) })
            .collect();
        Ok(FftPlan { n, twiddles, bitrev })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Unnormalized forward transform `X[k] = sum_n x[n] e^{-2 pi i k n / N}`.
    pub fn forward(&self, buf: &mut [Complex64]) {
        self.run(buf, false);
    }

    /// Inverse transform including the `1/N` factor.
    pub fn inverse(&self, buf: &mut [Complex64]) {
        self.run(buf, true);
        let scale = 1.0 / self.n as f64;
        for v in buf.iter_mut() {
            *v *= scale;
        }
    }

    fn run(&self, buf: &mut [Complex64], inverse: bool) {
        assert_eq!(buf.len(), self.n, "buffer length does not match the plan");
        for i in 0..self.n {
            let j = self.bitrev[i];
            if i < j {
                buf.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= self.n {
            let half = len / 2;
            let stride = self.n / len;
            for start in (0..self.n).step_by(len) {
                for j in 0..half {
                    let w = self.twiddles[j * stride];
                    let w = if inverse { w.conj() } else { w };
                    let a = buf[start + j];
                    let b = buf[start + j + half] * w;
                    buf[start + j] = a + b;
                    buf[start + j + half] = a - b;
                }
            }
            len <<= 1;
        }
    }
}

/// Real-input FFT of even power-of-two length `N`, computed through one
/// complex FFT of length `N/2`. Only bins `0..=N/2` are produced.
#[derive(Debug, Clone)]
pub struct RealFftPlan {
    n: usize,
    half: FftPlan,
    // e^{-2 pi i k / N} for k in 0..N/2
    twiddles: Vec<Complex64>,
}

impl RealFftPlan {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(n));
        }
        let twiddles = (0..n / 2)
            .map(|k| Complex64::from_polar(1.0, -2.0 * PI * k as f64 / n as f64))
            .collect();
        Ok(RealFftPlan { n, half: FftPlan::new(n / 2)?, twiddles })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn bins(&self) -> usize {
        self.n / 2 + 1
    }

    /// `input.len() == N`, `out.len() == N/2 + 1`.
    pub fn forward(&self, input: &[f64], out: &mut [Complex64]) {
        assert_eq!(input.len(), self.n);
        assert_eq!(out.len(), self.bins());
        let m = self.n / 2;
        let mut z: Vec<Complex64> =
            (0..m).map(|i| Complex64::new(input[2 * i], input[2 * i + 1])).collect();
        self.half.forward(&mut z);
        for k in 0..=m {
            let zk = z[k % m];
            let zc = z[(m - k) % m].conj();
            let even = (zk + zc) * 0.5;
            let odd = (zk - zc) * Complex64::new(0.0, -0.5);
            let w = if k < m { self.twiddles[k] } else { Complex64::new(-1.0, 0.0) };
            out[k] = even + w * odd;
        }
    }

    /// Inverse of [`RealFftPlan::forward`]; assumes a Hermitian spectrum.
    pub fn inverse(&self, spectrum: &[Complex64], out: &mut [f64]) {
        assert_eq!(spectrum.len(), self.bins());
        assert_eq!(out.len(), self.n);
        let m = self.n / 2;
        let mut z: Vec<Complex64> = (0..m)
            .map(|k| {
                let xk = spectrum[k];
                let xc = spectrum[m - k].conj();
                let even = (xk + xc) * 0.5;
                let odd = (xk - xc) * 0.5 * self.twiddles[k].conj();
                even + Complex64::new(0.0, 1.0) * odd
            })
            .collect();
        self.half.inverse(&mut z);
        for (i, v) in z.iter().enumerate() {
            out[2 * i] = v.re;
            out[2 * i + 1] = v.im;
        }
    }
}

pub fn fft(x: &[Complex64]) -> Result<Vec<Complex64>> {
    let plan = FftPlan::new(x.len())?;
    let mut buf = x.to_vec();
    plan.forward(&mut buf);
    Ok(buf)
}

pub fn ifft(x: &[Complex64]) -> Result<Vec<Complex64>> {
    let plan = FftPlan::new(x.len())?;
    let mut buf = x.to_vec();
    plan.inverse(&mut buf);
    Ok(buf)
}

/// Bins `0..=N/2` of the DFT of a real vector.
pub fn rfft(x: &[f64]) -> Result<Vec<Complex64>> {
    let plan = RealFftPlan::new(x.len())?;
    let mut out = vec![Complex64::default(); plan.bins()];
    plan.forward(x, &mut out);
    Ok(out)
}

/// Inverse of [`rfft`] for an output length of `n`.
pub fn irfft(spectrum: &[Complex64], n: usize) -> Result<Vec<f64>> {
    let plan = RealFftPlan::new(n)?;
    if spectrum.len() != plan.bins() {
        return Err(Error::LengthMismatch { left: spectrum.len(), right: plan.bins() });
    }
    let mut out = vec![0.0; n];
    plan.inverse(spectrum, &mut out);
    Ok(out)
}

/// Direct `O(N^2)` DFT, any length. Used as a reference.
pub fn dft_naive(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    (0..n)
        .map(|k| {
            x.iter()
                .enumerate()
                .map(|(t, v)| {
                    let phase = -2.0 * PI * ((k * t) % n) as f64 / n as f64;
                    v * Complex64::from_polar(1.0, phase)
                })
                .sum()
        })
        .collect()
}
