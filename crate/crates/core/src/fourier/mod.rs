//! Fourier analysis: FFT, windows, STFT and spectrogram export.

mod fft;
mod heatmap;
mod stft;
mod window;

pub use fft::{dft_naive, fft, ifft, irfft, rfft, FftPlan, RealFftPlan};
pub use heatmap::{export_heatmap, heatmap_pixels, read_csv_matrix, write_csv, write_pgm};
pub use num_complex::Complex64;
pub use stft::{istft, stft, stft_frequencies, ms_to_samples, StftConfig, StftMatrix};
pub use window::{make_window, WindowKind};
