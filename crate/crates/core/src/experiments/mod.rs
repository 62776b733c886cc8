//! Seeded, reproducible drivers for the numerical studies.
//!
//! Every sample draws from its own RNG stream, addressed by the run seed and
//! the sample's position in the study (see [`SeedTree`]). Samples may run on
//! any number of rayon workers; results are collected in index order and
//! reduced sequentially, so output never depends on the thread count.

mod config;
mod greedy;
mod kalmost;
mod mn;
pub mod output;
mod overlay;
mod partitions;
mod qft_compare;
mod rng;
mod spectra;
mod stats;
mod sweep;

pub use config::{default_samples, ExperimentConfig, MGrid, PartitionMode};
pub use greedy::{greedy_best_sample, GreedyResult, GreedyScore};
pub use kalmost::{kalmost_curve, KAlmostPoint};
pub use mn::{find_mn, predicted_mn, scaling_study, MnDiagnostics, MnResult, MnSearch, ScalingStudy};
pub use overlay::{approximation_overlay, OverlayRow};
pub use partitions::{distinct_partition_count, partition_entropies, partition_histogram, sample_partitions, PartitionEntropies};
pub use qft_compare::{qft_comparison, qft_comparison_random, QftPair};
pub use rng::SeedTree;
pub use spectra::{dominant_eigenvalue_study, spectrum_histogram, DominantStudy, Histogram, SpectrumHistogram, ZERO_EIGENVALUE};
pub use stats::{mean_and_std_err, NeumaierSum};
pub use sweep::{average_entropy, haar_average, mode_concentration_check, sweep, ConcentrationCheck, SweepRecord};

use rayon::prelude::*;

use crate::Result;

/// Evaluates `f(0..count)` on the current rayon pool, preserving index order.
pub(crate) fn par_samples<T, F>(count: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    (0..count).into_par_iter().map(f).collect()
}
