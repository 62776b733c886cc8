use serde::Serialize;

use super::{mean_and_std_err, par_samples, SeedTree};
use crate::sequences::random_sequence;
use crate::{encode_sequence, reduced_spectrum, Bipartition, Error, Result};

/// Bulk eigenvalues at or below this are reported as zeros, not binned.
pub const ZERO_EIGENVALUE: f64 = 1e-12;

/// Uniform-bin histogram. `edges` has one more entry than `counts`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

impl Histogram {
    /// `bins` equal bins spanning `[min, max]` of the data. The top edge is
    /// inclusive. Empty data gives an empty histogram.
    pub fn uniform(values: &[f64], bins: usize) -> Self {
        if values.is_empty() || bins == 0 {
            return Self { edges: Vec::new(), counts: Vec::new() };
        }
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let width = (hi - lo) / bins as f64;
        let edges = (0..=bins).map(|i| if i == bins { hi } else { lo + width * i as f64 }).collect();
        let mut counts = vec![0u64; bins];
        for &v in values {
            let bin = if width > 0.0 { (((v - lo) / width) as usize).min(bins - 1) } else { 0 };
            counts[bin] += 1;
        }
        Self { edges, counts }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `(bin_left, count)` pairs.
    pub fn rows(&self) -> impl Iterator<Item = (f64, u64)> + '_ {
        self.edges.iter().copied().zip(self.counts.iter().copied())
    }
}

/// Spectrum of one random sequence state, split into the dominant
/// eigenvalue and a histogram of the rest.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumHistogram {
    pub n: usize,
    pub m: usize,
    pub lambda0: f64,
    /// `M / N`, the row-sum estimate of `lambda0`.
    pub predicted_lambda0: f64,
    pub max_bulk: f64,
    /// Bulk eigenvalues at or below [`ZERO_EIGENVALUE`].
    pub zeros: usize,
    pub histogram: Histogram,
}

impl SpectrumHistogram {
    pub fn relative_error(&self) -> f64 {
        (self.lambda0 - self.predicted_lambda0).abs() / self.predicted_lambda0
    }
}

fn check_even(n: usize) -> Result<()> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("spectrum studies need an even qubit count, got {n}")));
    }
    Ok(())
}

/// Natural-cut spectrum of the sequence drawn from stream 0 of `tree`.
pub fn spectrum_histogram(n: usize, m: usize, bins: usize, tree: &SeedTree) -> Result<SpectrumHistogram> {
    check_even(n)?;
    let seq = random_sequence(n, m, &mut tree.rng(0))?;
    let spec = reduced_spectrum(&encode_sequence(&seq), &Bipartition::natural(n)?)?;
    let bulk: Vec<f64> = spec.bulk().iter().copied().filter(|&v| v > ZERO_EIGENVALUE).collect();
    Ok(SpectrumHistogram {
        n,
        m,
        lambda0: spec.dominant(),
        predicted_lambda0: m as f64 / seq.dim() as f64,
        max_bulk: bulk.first().copied().unwrap_or(0.0),
        zeros: spec.bulk().len() - bulk.len(),
        histogram: Histogram::uniform(&bulk, bins),
    })
}

/// Dominant-eigenvalue statistics over many random sequences.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DominantStudy {
    pub n: usize,
    pub m: usize,
    pub samples: usize,
    pub predicted_lambda0: f64,
    pub mean_lambda0: f64,
    pub std_err_lambda0: f64,
    /// Mean of `max_bulk / lambda0`.
    pub mean_bulk_ratio: f64,
    pub max_bulk_ratio: f64,
    /// Fraction of samples with `max_bulk < lambda0 / 2`.
    pub separated_fraction: f64,
}

impl DominantStudy {
    pub fn relative_error(&self) -> f64 {
        (self.mean_lambda0 - self.predicted_lambda0).abs() / self.predicted_lambda0
    }
}

pub fn dominant_eigenvalue_study(n: usize, m: usize, samples: usize, tree: &SeedTree) -> Result<DominantStudy> {
    check_even(n)?;
    if samples == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1".into()));
    }
    let part = Bipartition::natural(n)?;
    let pairs = par_samples(samples, |i| {
        let seq = random_sequence(n, m, &mut tree.rng(i as u64))?;
        let spec = reduced_spectrum(&encode_sequence(&seq), &part)?;
        let bulk = spec.bulk().first().copied().unwrap_or(0.0);
        Ok((spec.dominant(), bulk / spec.dominant()))
    })?;
    let lambdas: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let ratios: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    let (mean_lambda0, std_err_lambda0) = mean_and_std_err(&lambdas);
    Ok(DominantStudy {
        n,
        m,
        samples,
        predicted_lambda0: m as f64 / (1usize << n) as f64,
        mean_lambda0,
        std_err_lambda0,
        mean_bulk_ratio: mean_and_std_err(&ratios).0,
        max_bulk_ratio: ratios.iter().copied().fold(0.0, f64::max),
        separated_fraction: ratios.iter().filter(|&&r| r < 0.5).count() as f64 / samples as f64,
    })
}
