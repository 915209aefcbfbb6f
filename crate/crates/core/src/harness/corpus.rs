use std::path::{Path, PathBuf};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::wav::load_wav;
use crate::error::{Error, Result};
use crate::signal::{pad, resample, PadMode, Signal};

const SPEAKER_STREAM: u64 = 0;
const RECORDING_STREAM: u64 = 1;

#[derive(Debug, Clone)]
pub enum Recording {
    File(PathBuf),
    Memory(Signal),
}

impl Recording {
    pub fn load(&self) -> Result<Signal> {
        match self {
            Recording::File(p) => load_wav(p),
            Recording::Memory(s) => Ok(s.clone()),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Recording::File(p) => p.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
            Recording::Memory(_) => "<memory>".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Speaker {
    pub id: String,
    pub recordings: Vec<Recording>,
}

/// Recordings grouped by speaker. Files are only decoded when a mixture
/// needs them.
#[derive(Debug, Clone, Default)]
pub struct SpeakerCorpus {
    pub speakers: Vec<Speaker>,
}

fn is_wav(p: &Path) -> bool {
    p.is_file() && p.extension().is_some_and(|e| e.eq_ignore_ascii_case("wav"))
}

impl SpeakerCorpus {
    /// One subdirectory per speaker, each holding `.wav` files. Speakers and
    /// files are sorted by name so that seeds select the same recordings on
    /// every platform.
    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        let mut speakers = Vec::new();
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            if !path.is_dir() {
                continue;
            }
            let mut files: Vec<PathBuf> =
                std::fs::read_dir(&path)?.map(|e| e.map(|e| e.path())).collect::<std::io::Result<_>>()?;
            files.retain(|p| is_wav(p));
            files.sort();
            if files.is_empty() {
                continue;
            }
            let id = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
            speakers.push(Speaker { id, recordings: files.into_iter().map(Recording::File).collect() });
        }
        if speakers.is_empty() {
            return Err(Error::invalid(format!("no speaker directories with WAV files under {}", dir.display())));
        }
        speakers.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(SpeakerCorpus { speakers })
    }

    pub fn from_signals(speakers: Vec<(String, Vec<Signal>)>) -> Self {
        let speakers = speakers
            .into_iter()
            .map(|(id, sigs)| Speaker { id, recordings: sigs.into_iter().map(Recording::Memory).collect() })
            .collect();
        SpeakerCorpus { speakers }
    }

    pub fn len(&self) -> usize {
        self.speakers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.speakers.is_empty()
    }

    pub fn recording_count(&self) -> usize {
        self.speakers.iter().map(|s| s.recordings.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mixture {
    pub mixture: Signal,
    /// Zero-padded to the mixture length; `sources[target_index]` is the target.
    pub sources: Vec<Signal>,
    pub target_index: usize,
    pub speaker_ids: Vec<String>,
    pub recordings: Vec<String>,
    pub seed: u64,
}

impl Mixture {
    /// Pads `sources` with trailing zeros to a common length and sums them.
    /// The first source is the target.
    pub fn from_sources(sources: Vec<Signal>, speaker_ids: Vec<String>, seed: u64) -> Result<Self> {
        let first = sources.first().ok_or_else(|| Error::invalid("mixture needs at least one source"))?;
        let rate = first.rate();
        if let Some(s) = sources.iter().find(|s| s.rate() != rate) {
            return Err(Error::invalid(format!(
                "sources have different sample rates ({rate} Hz and {} Hz); enable resampling",
                s.rate()
            )));
        }
        let len = sources.iter().map(Signal::len).max().unwrap_or(0);
        let sources = sources
            .iter()
            .map(|s| Signal::new(pad(s.samples(), len, PadMode::Zero)?, rate))
            .collect::<Result<Vec<_>>>()?;
        let mut sum = vec![0.0; len];
        for s in &sources {
            for (acc, v) in sum.iter_mut().zip(s.samples()) {
                *acc += v;
            }
        }
        let recordings = vec![String::new(); sources.len()];
        Ok(Mixture { mixture: Signal::new(sum, rate)?, sources, target_index: 0, speaker_ids, recordings, seed })
    }

    pub fn target(&self) -> &Signal {
        &self.sources[self.target_index]
    }

    pub fn rate(&self) -> u32 {
        self.mixture.rate()
    }

    pub fn len(&self) -> usize {
        self.mixture.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mixture.is_empty()
    }
}

/// Draws `n` distinct speakers and one recording from each, then mixes them.
///
/// Speaker and recording choices come from separate ChaCha streams of the
/// same seed. With `resample_to` set every recording is converted to that
/// rate; otherwise differing rates are an error.
pub fn make_mixture(corpus: &SpeakerCorpus, n: usize, seed: u64, resample_to: Option<u32>) -> Result<Mixture> {
    if n < 2 {
        return Err(Error::invalid(format!("a mixture needs at least 2 speakers, got {n}")));
    }
    if corpus.len() < n {
        return Err(Error::invalid(format!("corpus has {} speakers, {n} requested", corpus.len())));
    }
    let mut speaker_rng = ChaCha8Rng::seed_from_u64(seed);
    speaker_rng.set_stream(SPEAKER_STREAM);
    let mut recording_rng = ChaCha8Rng::seed_from_u64(seed);
    recording_rng.set_stream(RECORDING_STREAM);

    let chosen = sample(&mut speaker_rng, corpus.len(), n);
    let mut sources = Vec::with_capacity(n);
    let mut ids = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for idx in chosen.iter() {
        let speaker = &corpus.speakers[idx];
        if speaker.recordings.is_empty() {
            return Err(Error::invalid(format!("speaker {} has no recordings", speaker.id)));
        }
        let rec = &speaker.recordings[recording_rng.gen_range(0..speaker.recordings.len())];
        let mut s = rec.load()?;
        if let Some(rate) = resample_to {
            s = resample(&s, rate)?;
        }
        sources.push(s);
        ids.push(speaker.id.clone());
        labels.push(rec.label());
    }
    let mut mix = Mixture::from_sources(sources, ids, seed)?;
    mix.recordings = labels;
    Ok(mix)
}
