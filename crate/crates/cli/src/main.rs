use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use tfsep::fourier::{export_heatmap, ms_to_samples, StftConfig, WindowKind};
use tfsep::harness::{
    emit_report, grid_search, load_wav, make_mixture, save_wav, ExperimentOptions, GridSpec, ReportFormat, SortKey,
    SpeakerCorpus,
};
use tfsep::masking::{decompose, DecompositionConfig, TfData};
use tfsep::metrics::{mse, si_sdr, snr, stoi};
use tfsep::wavelet::{cwt_ricker, dwt_scaleogram, lookup};
use tfsep::{PadMode, Signal};

#[derive(Parser)]
#[command(name = "tfsep", version, about = "Time-frequency decompositions and ideal-mask speech separation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a WAV file and write the coefficients as CSV
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        decomposition: DecompositionArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render an STFT magnitude heatmap as PGM
    Spectrogram {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        stft: StftArgs,
        #[arg(long)]
        out: PathBuf,
        /// Also write the magnitudes as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Render a wavelet coefficient heatmap as PGM
    Scaleogram {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ScaleogramMethod::Dwt)]
        method: ScaleogramMethod,
        #[command(flatten)]
        wavelet: WaveletArgs,
        /// Number of Ricker scales (1, 2, ...) for `--method cwt`
        #[arg(long, default_value_t = 64)]
        scales: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Score a degraded recording against its clean reference; prints JSON
    Metrics {
        #[arg(long = "ref")]
        reference: PathBuf,
        #[arg(long = "deg")]
        degraded: PathBuf,
        #[arg(long)]
        stoi: bool,
        #[arg(long = "si-sdr")]
        si_sdr: bool,
        #[arg(long)]
        snr: bool,
        #[arg(long)]
        mse: bool,
    },
    /// Mix recordings of randomly chosen speakers
    Mix {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = 2)]
        speakers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Also write the padded sources, target first
        #[arg(long)]
        sources_dir: Option<PathBuf>,
        /// Resample every recording to this rate
        #[arg(long)]
        resample: Option<u32>,
    },
    /// Grid search of ideal-binary-mask separation over decompositions
    Experiment {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = 10)]
        mixtures: usize,
        #[arg(long, default_value_t = 2)]
        speakers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `default` or a JSON grid file
        #[arg(long, default_value = "default")]
        grid: String,
        /// Allow more than 12 levels in automatic level ranges
        #[arg(long)]
        full_levels: bool,
        #[arg(long)]
        out: PathBuf,
        /// csv or json; guessed from the output extension when absent
        #[arg(long)]
        format: Option<String>,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// stoi, si-sdr, snr, mse or time
        #[arg(long, default_value = "stoi")]
        sort_by: String,
        #[arg(long)]
        resample: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Stft,
    Dwt,
    Wpt,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleogramMethod {
    Dwt,
    Wpt,
    Cwt,
}

#[derive(Args)]
struct StftArgs {
    /// hann or rect
    #[arg(long, default_value = "hann")]
    window: String,
    #[arg(long, default_value_t = 50.0)]
    win_ms: f64,
    #[arg(long, default_value_t = 25.0)]
    hop_ms: f64,
    /// Defaults to the next power of two at or above the window
    #[arg(long)]
    fft_size: Option<usize>,
}

#[derive(Args)]
struct WaveletArgs {
    #[arg(long, default_value = "sym8")]
    wavelet: String,
    #[arg(long, default_value_t = 6)]
    levels: usize,
    /// zero, periodization or symmetric
    #[arg(long, default_value = "periodization")]
    mode: String,
}

#[derive(Args)]
struct DecompositionArgs {
    #[arg(long, value_enum)]
    method: Method,
    #[command(flatten)]
    stft: StftArgs,
    #[command(flatten)]
    wavelet: WaveletArgs,
}

/// Bad arguments exit with 1, failures while processing data with 2.
enum Failure {
    Usage(anyhow::Error),
    Data(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Data(e)
    }
}

impl From<tfsep::Error> for Failure {
    fn from(e: tfsep::Error) -> Self {
        Failure::Data(e.into())
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

impl StftArgs {
    fn config(&self, rate: u32) -> Result<StftConfig, Failure> {
        let window: WindowKind = self.window.parse().map_err(usage)?;
        let win = ms_to_samples(self.win_ms, rate);
        let hop = ms_to_samples(self.hop_ms, rate);
        let cfg = StftConfig::new(window, win, hop).map_err(usage)?;
        match self.fft_size {
            Some(n) => cfg.with_fft_size(n).map_err(usage),
            None => Ok(cfg),
        }
    }
}

impl WaveletArgs {
    fn mode(&self) -> Result<PadMode, Failure> {
        self.mode.parse().map_err(usage)
    }

    fn check(&self) -> Result<(), Failure> {
        lookup(&self.wavelet).map_err(usage)?;
        self.mode()?;
        Ok(())
    }
}

impl DecompositionArgs {
    fn config(&self, rate: u32) -> Result<DecompositionConfig, Failure> {
        let w = &self.wavelet;
        Ok(match self.method {
            Method::Stft => DecompositionConfig::Stft(self.stft.config(rate)?),
            Method::Dwt => {
                w.check()?;
                DecompositionConfig::Dwt { wavelet: w.wavelet.clone(), levels: w.levels, mode: w.mode()? }
            }
            Method::Wpt => {
                w.check()?;
                DecompositionConfig::Wpt { wavelet: w.wavelet.clone(), levels: w.levels, mode: w.mode()? }
            }
        })
    }
}

fn read(path: &Path) -> Result<Signal, Failure> {
    Ok(load_wav(path)?)
}

fn write_rows<'a>(rows: impl Iterator<Item = &'a [f64]>, path: &Path) -> Result<usize, Failure> {
    let mut text = String::new();
    let mut count = 0;
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| format!("{v:e}")).collect();
        writeln!(text, "{}", line.join(",")).expect("writing to a String");
        count += 1;
    }
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(count)
}

/// STFT magnitudes (one frequency per line), DWT bands
/// `[approx, detail_L, ..., detail_1]` (one band per line, ragged) or
/// frequency-ordered WPT leaves.
fn cmd_decompose(input: &Path, args: &DecompositionArgs, out: &Path) -> Result<(), Failure> {
    let s = read(input)?;
    let cfg = args.config(s.rate())?;
    let tf = decompose(&s, &cfg)?;
    let rows = match &tf.data {
        TfData::Stft(m) => {
            let mag = m.magnitude();
            write_rows(mag.iter().map(|r| &r[..]), out)?
        }
        TfData::Dwt(c) => write_rows(c.bands().into_iter(), out)?,
        TfData::Wpt(l) => write_rows(l.matrix.iter().map(|r| &r[..]), out)?,
    };
    println!("{cfg}: wrote {rows} rows to {}", out.display());
    Ok(())
}

fn cmd_spectrogram(input: &Path, args: &StftArgs, out: &Path, csv: Option<&Path>) -> Result<(), Failure> {
    let s = read(input)?;
    let cfg = DecompositionConfig::Stft(args.config(s.rate())?);
    let TfData::Stft(m) = decompose(&s, &cfg)?.data else { unreachable!("STFT config yields STFT data") };
    export_heatmap(&m.magnitude(), out, csv)?;
    println!("{cfg}: {}x{} spectrogram written to {}", m.rows(), m.cols(), out.display());
    Ok(())
}

fn cmd_scaleogram(
    input: &Path,
    method: ScaleogramMethod,
    w: &WaveletArgs,
    scales: usize,
    out: &Path,
    csv: Option<&Path>,
) -> Result<(), Failure> {
    let s = read(input)?;
    let matrix = match method {
        ScaleogramMethod::Cwt => {
            if scales == 0 {
                return Err(usage(anyhow::anyhow!("--scales must be positive")));
            }
            let scales: Vec<f64> = (1..=scales).map(|a| a as f64).collect();
            cwt_ricker(&s, &scales)?.into_iter().map(|r| r.into_iter().map(f64::abs).collect()).collect()
        }
        ScaleogramMethod::Dwt => {
            w.check()?;
            let cfg = DecompositionConfig::Dwt { wavelet: w.wavelet.clone(), levels: w.levels, mode: w.mode()? };
            match decompose(&s, &cfg)?.data {
                TfData::Dwt(c) => dwt_scaleogram(&c),
                _ => unreachable!("DWT config yields DWT data"),
            }
        }
        ScaleogramMethod::Wpt => {
            w.check()?;
            let cfg = DecompositionConfig::Wpt { wavelet: w.wavelet.clone(), levels: w.levels, mode: w.mode()? };
            match decompose(&s, &cfg)?.data {
                TfData::Wpt(l) => l.matrix.iter().map(|r| r.iter().map(|v| v.abs()).collect()).collect(),
                _ => unreachable!("WPT config yields WPT data"),
            }
        }
    };
    export_heatmap(&matrix, out, csv)?;
    let cols = matrix.first().map_or(0, Vec::len);
    println!("{}x{cols} scaleogram written to {}", matrix.len(), out.display());
    Ok(())
}

fn score(v: tfsep::Result<f64>, name: &str) -> Value {
    match v {
        Ok(x) if x.is_finite() => json!(x),
        Ok(x) if x > 0.0 => json!("inf"),
        Ok(x) if x < 0.0 => json!("-inf"),
        Ok(_) => Value::Null,
        Err(e) => {
            eprintln!("{name}: {e}");
            Value::Null
        }
    }
}

fn cmd_metrics(reference: &Path, degraded: &Path, pick: [bool; 4]) -> Result<(), Failure> {
    let r = read(reference)?;
    let d = read(degraded)?;
    if r.rate() != d.rate() {
        return Err(Failure::Data(anyhow::anyhow!(
            "sample rates differ: {} Hz reference, {} Hz degraded",
            r.rate(),
            d.rate()
        )));
    }
    if r.len() != d.len() {
        return Err(Failure::Data(anyhow::anyhow!(
            "lengths differ: {} reference samples, {} degraded samples",
            r.len(),
            d.len()
        )));
    }
    let all = !pick.iter().any(|&p| p);
    let (x, y) = (r.samples(), d.samples());
    let mut obj = Map::new();
    if all || pick[0] {
        obj.insert("STOI".into(), score(stoi(x, y, r.rate()), "STOI"));
    }
    if all || pick[1] {
        obj.insert("SI-SDR".into(), score(si_sdr(x, y), "SI-SDR"));
    }
    if all || pick[2] {
        obj.insert("SNR".into(), score(snr(x, y), "SNR"));
    }
    if all || pick[3] {
        obj.insert("MSE".into(), score(mse(x, y), "MSE"));
    }
    println!("{}", Value::Object(obj));
    Ok(())
}

fn corpus(dir: &Path) -> Result<SpeakerCorpus, Failure> {
    Ok(SpeakerCorpus::from_dir(dir).with_context(|| format!("reading corpus {}", dir.display()))?)
}

fn cmd_mix(
    dir: &Path,
    speakers: usize,
    seed: u64,
    out: &Path,
    sources_dir: Option<&Path>,
    resample: Option<u32>,
) -> Result<(), Failure> {
    if speakers < 2 {
        return Err(usage(anyhow::anyhow!("--speakers must be at least 2")));
    }
    let mix = make_mixture(&corpus(dir)?, speakers, seed, resample)?;
    let peak = mix.mixture.samples().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if peak >= 1.0 {
        eprintln!("warning: mixture peak {peak:.3} clips in 16-bit output");
    }
    save_wav(&mix.mixture, out)?;
    if let Some(dir) = sources_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, (s, id)) in mix.sources.iter().zip(&mix.speaker_ids).enumerate() {
            save_wav(s, dir.join(format!("source{i}_{id}.wav")))?;
        }
    }
    let summary = json!({
        "out": out.display().to_string(),
        "rate": mix.rate(),
        "samples": mix.len(),
        "seed": seed,
        "speakers": mix.speaker_ids,
        "recordings": mix.recordings,
    });
    println!("{summary}");
    Ok(())
}

struct ExperimentArgs<'a> {
    corpus: &'a Path,
    grid: &'a str,
    full_levels: bool,
    out: &'a Path,
    format: Option<&'a str>,
    sort_by: &'a str,
    opts: ExperimentOptions,
}

fn cmd_experiment(a: ExperimentArgs) -> Result<(), Failure> {
    let mut grid = if a.grid == "default" {
        GridSpec::default()
    } else {
        GridSpec::from_file(a.grid).with_context(|| format!("reading grid {}", a.grid)).map_err(usage)?
    };
    grid.full_levels |= a.full_levels;
    let format = match a.format {
        Some(f) => f.parse::<ReportFormat>().map_err(usage)?,
        None => ReportFormat::from_path(a.out),
    };
    let sort_by: SortKey = a.sort_by.parse().map_err(usage)?;
    if a.opts.speakers < 2 || a.opts.n_mixtures == 0 {
        return Err(usage(anyhow::anyhow!("need --speakers >= 2 and --mixtures >= 1")));
    }
    let opts = ExperimentOptions { sort_by, ..a.opts };
    let report = grid_search(&corpus(a.corpus)?, &grid, &opts)?;
    emit_report(&report, format, a.out)?;
    let failed = report.rows.iter().filter(|r| r.error.is_some()).count();
    println!("{} configurations ({failed} failed) on {} mixtures -> {}", report.rows.len(), report.n_mixtures, a.out.display());
    for method in ["stft", "dwt", "wpt"] {
        if let Some(r) = report.best(method) {
            let fmt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.3}"));
            println!(
                "  best {method}: {} STOI {} SI-SDR {} dB",
                r.params,
                fmt(r.scores.stoi),
                fmt(r.scores.si_sdr)
            );
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Decompose { input, decomposition, out } => cmd_decompose(&input, &decomposition, &out),
        Command::Spectrogram { input, stft, out, csv } => cmd_spectrogram(&input, &stft, &out, csv.as_deref()),
        Command::Scaleogram { input, method, wavelet, scales, out, csv } => {
            cmd_scaleogram(&input, method, &wavelet, scales, &out, csv.as_deref())
        }
        Command::Metrics { reference, degraded, stoi, si_sdr, snr, mse } => {
            cmd_metrics(&reference, &degraded, [stoi, si_sdr, snr, mse])
        }
        Command::Mix { corpus, speakers, seed, out, sources_dir, resample } => {
            cmd_mix(&corpus, speakers, seed, &out, sources_dir.as_deref(), resample)
        }
        Command::Experiment {
            corpus,
            mixtures,
            speakers,
            seed,
            grid,
            full_levels,
            out,
            format,
            jobs,
            sort_by,
            resample,
        } => cmd_experiment(ExperimentArgs {
            corpus: &corpus,
            grid: &grid,
            full_levels,
            out: &out,
            format: format.as_deref(),
            sort_by: &sort_by,
            opts: ExperimentOptions {
                n_mixtures: mixtures,
                speakers,
                seed,
                jobs,
                resample_to: resample,
                ..Default::default()
            },
        }),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Data(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
