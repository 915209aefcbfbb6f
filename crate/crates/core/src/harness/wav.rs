use std::path::Path;

use hound::{SampleFormat, WavReader, WavSpec, WavWriter};

use crate::error::{Error, Result};
use crate::signal::Signal;

const FULL_SCALE: f64 = 32768.0;

/// Reads a 16-bit PCM WAV file into samples in `[-1, 1)`. Multi-channel
/// files are down-mixed by averaging the channels of each frame.
pub fn load_wav(path: impl AsRef<Path>) -> Result<Signal> {
    let path = path.as_ref();
    let wav_err = |cause| Error::Wav { path: path.to_path_buf(), cause };
    let mut reader = WavReader::open(path).map_err(wav_err)?;
    let spec = reader.spec();
    if spec.sample_format != SampleFormat::Int {
        return Err(Error::UnsupportedFormat {
            path: path.to_path_buf(),
            reason: "floating-point samples; only 16-bit PCM is supported".into(),
        });
    }
    if spec.bits_per_sample != 16 {
        return Err(Error::UnsupportedFormat {
            path: path.to_path_buf(),
            reason: format!("{}-bit samples; only 16-bit PCM is supported", spec.bits_per_sample),
        });
    }
    let channels = spec.channels.max(1) as usize;
    let raw = reader.samples::<i16>().collect::<std::result::Result<Vec<_>, _>>().map_err(wav_err)?;
    let samples = raw
        .chunks(channels)
        .map(|frame| frame.iter().map(|&v| v as f64).sum::<f64>() / (channels as f64 * FULL_SCALE))
        .collect();
    Signal::new(samples, spec.sample_rate)
}

/// Writes a mono 16-bit PCM WAV file. Samples outside `[-1, 1)` are clipped.
pub fn save_wav(s: &Signal, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let wav_err = |cause| Error::Wav { path: path.to_path_buf(), cause };
    let spec = WavSpec { channels: 1, sample_rate: s.rate(), bits_per_sample: 16, sample_format: SampleFormat::Int };
    let mut writer = WavWriter::create(path, spec).map_err(wav_err)?;
    for &v in s.samples() {
        let q = (v * FULL_SCALE).round().clamp(i16::MIN as f64, i16::MAX as f64) as i16;
        writer.write_sample(q).map_err(wav_err)?;
    }
    writer.finalize().map_err(wav_err)
}
