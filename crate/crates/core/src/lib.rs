//! Time-frequency decompositions and speech separation evaluation.
//!
//! The crate is organised bottom-up:
//!
//! * [`signal`]: the [`Signal`] type, convolution, rate changers, padding and resampling.
//! * [`fourier`]: radix-2 FFT, windows, forward/inverse STFT and heat-map export.
//! * [`wavelet`]: orthogonal filter banks, perfect-reconstruction checks, DWT, WPT and the
//!   Ricker CWT.
//! * [`masking`]: a common decompose/reconstruct front end plus ideal binary and ratio masks.
//! * [`metrics`]: MSE, SNR, SI-SDR and STOI.
//! * [`harness`]: WAV I/O, mixture synthesis, IBM trials, grid search and reports.

pub mod error;
pub mod fourier;
pub mod harness;
pub mod masking;
pub mod metrics;
pub mod signal;
pub mod wavelet;

pub use error::{Error, Result};
pub use signal::{PadMode, Signal};
