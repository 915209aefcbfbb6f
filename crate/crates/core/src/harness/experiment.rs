use std::path::Path;
use std::time::Instant;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::corpus::{make_mixture, Mixture, SpeakerCorpus};
use crate::error::{Error, Result};
use crate::fourier::{StftConfig, WindowKind};
use crate::masking::{apply_mask, decompose, ideal_binary_mask, reconstruct, DecompositionConfig, TFRepresentation};
use crate::metrics::{mse, si_sdr, snr, stoi, MetricScores};
use crate::signal::{PadMode, Signal};
use crate::wavelet::wavelet_names;

const MIXTURE_SEED_STREAM: u64 = 2;
const DEFAULT_LEVEL_CAP: usize = 12;

/// Separates the target of `mix` with its ideal binary mask (threshold 0)
/// and scores the estimate against the clean target.
///
/// The interference representation is the coefficient-wise sum of the
/// other sources' representations. `decomposition_time` covers the forward
/// transform of the mixture and the inverse transform of the masked
/// coefficients; mask construction is not timed. A metric that cannot be
/// computed is left as `None`.
pub fn run_ibm_trial(mix: &Mixture, cfg: &DecompositionConfig) -> Result<MetricScores> {
    let target = mix.target();
    let start = Instant::now();
    let m = decompose(&mix.mixture, cfg)?;
    let mut elapsed = start.elapsed();

    let s0 = decompose(target, cfg)?;
    let others: Vec<TFRepresentation> = mix
        .sources
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != mix.target_index)
        .map(|(_, s)| decompose(s, cfg))
        .collect::<Result<_>>()?;
    let interference = if others.is_empty() {
        decompose(&Signal::zeros(target.len(), target.rate())?, cfg)?
    } else {
        TFRepresentation::sum(others.iter())?
    };
    let mask = ideal_binary_mask(&s0, &interference, 0.0)?;
    let masked = apply_mask(&m, &mask)?;

    let start = Instant::now();
    let estimate = reconstruct(&masked)?;
    elapsed += start.elapsed();

    let (s, e) = (target.samples(), estimate.samples());
    Ok(MetricScores {
        stoi: stoi(s, e, target.rate()).ok(),
        si_sdr: si_sdr(s, e).ok(),
        snr: snr(s, e).ok(),
        mse: mse(s, e).ok(),
        decomposition_time: elapsed.as_secs_f64(),
    })
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StftGrid {
    pub windows: Vec<WindowKind>,
    pub sizes_ms: Vec<f64>,
    pub hop_fractions: Vec<f64>,
}

fn default_mode() -> PadMode {
    PadMode::Periodic
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct WaveletGrid {
    pub families: Vec<String>,
    /// Explicit levels; when absent, 1 up to the level cap for the mixture length.
    #[serde(default)]
    pub levels: Option<Vec<usize>>,
    #[serde(default = "default_mode")]
    pub mode: PadMode,
}

/// The configurations to evaluate. Stored as a JSON object with optional
/// `stft`, `wavelet` (single-tree DWT) and `wpt` sections.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GridSpec {
    #[serde(default)]
    pub stft: Option<StftGrid>,
    #[serde(default, alias = "dwt")]
    pub wavelet: Option<WaveletGrid>,
    #[serde(default)]
    pub wpt: Option<WaveletGrid>,
    /// Lift the cap of 12 levels on the automatic level range.
    #[serde(default)]
    pub full_levels: bool,
}

impl Default for GridSpec {
    fn default() -> Self {
        let families = default_families();
        let wavelets = WaveletGrid { families, levels: None, mode: default_mode() };
        GridSpec {
            stft: Some(StftGrid {
                windows: vec![WindowKind::Hann, WindowKind::Rectangular],
                sizes_ms: vec![5.0, 10.0, 16.0, 25.0, 32.0, 50.0, 100.0, 120.0],
                hop_fractions: vec![0.25, 0.5, 0.75],
            }),
            wavelet: Some(wavelets.clone()),
            wpt: Some(wavelets),
            full_levels: false,
        }
    }
}

/// `haar`, `db2`-`db20`, `sym2`-`sym20` and `coif1`-`coif17`.
pub fn default_families() -> Vec<String> {
    wavelet_names().into_iter().filter(|n| *n != "db1").map(String::from).collect()
}

/// A grid row: either a valid configuration or the reason it could not be built.
#[derive(Debug, Clone, PartialEq)]
pub struct GridEntry {
    pub decomposition: String,
    pub params: String,
    pub config: std::result::Result<DecompositionConfig, String>,
}

impl GridEntry {
    fn valid(cfg: DecompositionConfig) -> Self {
        GridEntry { decomposition: cfg.method().into(), params: cfg.params(), config: Ok(cfg) }
    }
}

impl GridSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let grid: GridSpec = serde_json::from_str(text)?;
        if grid.stft.is_none() && grid.wavelet.is_none() && grid.wpt.is_none() {
            return Err(Error::invalid("grid has no stft, wavelet or wpt section"));
        }
        Ok(grid)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        GridSpec::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn stft_only(&self) -> GridSpec {
        GridSpec { stft: self.stft.clone(), wavelet: None, wpt: None, full_levels: self.full_levels }
    }

    /// Automatic level range for signals of `len` samples.
    pub fn level_range(&self, len: usize) -> Vec<usize> {
        let max = if len < 2 { 0 } else { len.ilog2() as usize };
        let cap = if self.full_levels { max } else { max.min(DEFAULT_LEVEL_CAP) };
        (1..=cap).collect()
    }

    /// Expands the grid for mixtures at `rate` Hz whose shortest member has
    /// `min_len` samples. Order: STFT (window, size, hop), then DWT and WPT
    /// (family, level).
    pub fn entries(&self, rate: u32, min_len: usize) -> Vec<GridEntry> {
        let mut out = Vec::new();
        if let Some(g) = &self.stft {
            for &window in &g.windows {
                for &ms in &g.sizes_ms {
                    for &frac in &g.hop_fractions {
                        out.push(match StftConfig::from_millis(window, ms, frac, rate) {
                            Ok(c) => GridEntry::valid(DecompositionConfig::Stft(c)),
                            Err(e) => GridEntry {
                                decomposition: "stft".into(),
                                params: format!("{window} {ms}ms hop={frac}"),
                                config: Err(e.to_string()),
                            },
                        });
                    }
                }
            }
        }
        let trees: [(&Option<WaveletGrid>, bool); 2] = [(&self.wavelet, false), (&self.wpt, true)];
        for (grid, packet) in trees {
            let Some(g) = grid else { continue };
            let levels = g.levels.clone().unwrap_or_else(|| self.level_range(min_len));
            for family in &g.families {
                for &level in &levels {
                    let (wavelet, mode) = (family.clone(), g.mode);
                    out.push(GridEntry::valid(if packet {
                        DecompositionConfig::Wpt { wavelet, levels: level, mode }
                    } else {
                        DecompositionConfig::Dwt { wavelet, levels: level, mode }
                    }));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SortKey {
    #[default]
    Stoi,
    SiSdr,
    Snr,
    Mse,
    Time,
}

impl std::str::FromStr for SortKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "stoi" => Ok(SortKey::Stoi),
            "si-sdr" | "sisdr" => Ok(SortKey::SiSdr),
            "snr" => Ok(SortKey::Snr),
            "mse" => Ok(SortKey::Mse),
            "time" | "time-s" => Ok(SortKey::Time),
            _ => Err(Error::invalid(format!("unknown sort key '{s}' (stoi, si-sdr, snr, mse, time)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub decomposition: String,
    pub params: String,
    /// Means over the mixtures. A metric is `None` if it failed on any mixture.
    pub scores: MetricScores,
    pub n_mixtures: usize,
    pub seed: u64,
    /// Set when the configuration could not be evaluated.
    pub error: Option<String>,
}

impl ReportRow {
    fn sort_value(&self, key: SortKey) -> Option<f64> {
        if self.error.is_some() {
            return None;
        }
        match key {
            SortKey::Stoi => self.scores.stoi,
            SortKey::SiSdr => self.scores.si_sdr,
            SortKey::Snr => self.scores.snr,
            SortKey::Mse => self.scores.mse.map(|v| -v),
            SortKey::Time => Some(-self.scores.decomposition_time),
        }
        .filter(|v| !v.is_nan())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub rows: Vec<ReportRow>,
    pub n_mixtures: usize,
    pub speakers: usize,
    pub seed: u64,
}

impl ExperimentReport {
    /// Best first; rows without a value (including failed rows) go last.
    /// Ties keep grid order.
    pub fn sort_by(&mut self, key: SortKey) {
        self.rows.sort_by(|a, b| match (a.sort_value(key), b.sort_value(key)) {
            (Some(x), Some(y)) => y.total_cmp(&x),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => std::cmp::Ordering::Equal,
        });
    }

    pub fn best(&self, decomposition: &str) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.decomposition == decomposition && r.error.is_none())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOptions {
    pub n_mixtures: usize,
    /// Speakers per mixture.
    pub speakers: usize,
    pub seed: u64,
    /// Worker threads; 0 lets the thread pool decide.
    pub jobs: usize,
    pub resample_to: Option<u32>,
    pub sort_by: SortKey,
}

impl Default for ExperimentOptions {
    fn default() -> Self {
        ExperimentOptions { n_mixtures: 10, speakers: 2, seed: 0, jobs: 0, resample_to: None, sort_by: SortKey::Stoi }
    }
}

/// The mixture set used by [`grid_search`]: mixture `i` is built from the
/// `i`-th seed drawn from a dedicated stream of `seed`.
pub fn make_mixtures(corpus: &SpeakerCorpus, opts: &ExperimentOptions) -> Result<Vec<Mixture>> {
    if opts.n_mixtures == 0 {
        return Err(Error::invalid("at least one mixture is required"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(MIXTURE_SEED_STREAM);
    let seeds: Vec<u64> = (0..opts.n_mixtures).map(|_| rng.next_u64()).collect();
    let mixtures: Vec<Mixture> =
        seeds.into_iter().map(|s| make_mixture(corpus, opts.speakers, s, opts.resample_to)).collect::<Result<_>>()?;
    let rate = mixtures[0].rate();
    if mixtures.iter().any(|m| m.rate() != rate) {
        return Err(Error::invalid("mixtures have different sample rates; enable resampling"));
    }
    Ok(mixtures)
}

fn mean_of(values: impl Iterator<Item = Option<f64>>) -> Option<f64> {
    let mut sum = 0.0;
    let mut n = 0usize;
    for v in values {
        sum += v?;
        n += 1;
    }
    (n > 0).then(|| sum / n as f64)
}

fn evaluate(entry: &GridEntry, mixtures: &[Mixture], seed: u64) -> ReportRow {
    let mut row = ReportRow {
        decomposition: entry.decomposition.clone(),
        params: entry.params.clone(),
        scores: MetricScores::default(),
        n_mixtures: mixtures.len(),
        seed,
        error: None,
    };
    let cfg = match &entry.config {
        Ok(c) => c,
        Err(e) => {
            row.error = Some(e.clone());
            return row;
        }
    };
    let trials: Result<Vec<MetricScores>> = mixtures.iter().map(|m| run_ibm_trial(m, cfg)).collect();
    match trials {
        Ok(t) => {
            row.scores = MetricScores {
                stoi: mean_of(t.iter().map(|s| s.stoi)),
                si_sdr: mean_of(t.iter().map(|s| s.si_sdr)),
                snr: mean_of(t.iter().map(|s| s.snr)),
                mse: mean_of(t.iter().map(|s| s.mse)),
                decomposition_time: t.iter().map(|s| s.decomposition_time).sum::<f64>() / t.len() as f64,
            };
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// Evaluates every grid configuration on the same seeded mixture set.
///
/// Rows are evaluated in parallel on `opts.jobs` threads; every row is
/// computed by the same sequential code, so the report (apart from
/// timings) does not depend on the thread count.
pub fn grid_search(corpus: &SpeakerCorpus, grid: &GridSpec, opts: &ExperimentOptions) -> Result<ExperimentReport> {
    let mixtures = make_mixtures(corpus, opts)?;
    run_grid(&mixtures, grid, opts)
}

/// [`grid_search`] over an already generated mixture set.
pub fn run_grid(mixtures: &[Mixture], grid: &GridSpec, opts: &ExperimentOptions) -> Result<ExperimentReport> {
    let first = mixtures.first().ok_or_else(|| Error::invalid("at least one mixture is required"))?;
    let min_len = mixtures.iter().map(Mixture::len).min().unwrap_or(0);
    let entries = grid.entries(first.rate(), min_len);
    if entries.is_empty() {
        return Err(Error::invalid("grid expands to no configurations"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::invalid(format!("cannot start worker threads: {e}")))?;
    let rows: Vec<ReportRow> =
        pool.install(|| entries.par_iter().map(|e| evaluate(e, mixtures, opts.seed)).collect());
    let mut report =
        ExperimentReport { rows, n_mixtures: mixtures.len(), speakers: first.sources.len(), seed: opts.seed };
    report.sort_by(opts.sort_by);
    Ok(report)
}
