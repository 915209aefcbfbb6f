//! Experiment plumbing: WAV files, speaker corpora, mixtures, IBM trials,
//! grid search and reports.

mod corpus;
mod experiment;
mod report;
mod wav;

pub use corpus::{make_mixture, Mixture, Recording, Speaker, SpeakerCorpus};
pub use experiment::{
    default_families, grid_search, make_mixtures, run_grid, run_ibm_trial, ExperimentOptions, ExperimentReport,
    GridEntry, GridSpec, ReportRow, SortKey, StftGrid, WaveletGrid,
};
pub use report::{emit_report, render_report, ReportFormat, COLUMNS};
pub use wav::{load_wav, save_wav};
