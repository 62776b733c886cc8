use serde::Serialize;

use super::partitions::random_balanced;
use super::{mean_and_std_err, par_samples, ExperimentConfig, PartitionMode, SeedTree};
use crate::entropy::entanglement_entropy;
use crate::sequences::random_sequence;
use crate::{balanced_partitions, encode_sequence, haar_state, Bipartition, Error, Result};

/// Averaged natural-cut or balanced-cut entropy at one `(n, M)` point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRecord {
    pub n: usize,
    pub m: usize,
    /// Mean entropy in bits.
    pub mean: f64,
    pub std_err: f64,
    pub samples: usize,
    pub mode: PartitionMode,
    pub seed: u64,
}

// Branch tags. Stable values keep old seeds meaningful.
const TAG_STATE: u64 = 1;
const TAG_CUT: u64 = 2;

/// Average entropy of random length-`m` sequence states.
///
/// * `Natural`: `samples` independent sequences, each cut at the natural
///   bipartition. Sample `i` uses stream `i` of `tree`.
/// * `RandomBalanced`: one sequence, cut at `samples` uniformly drawn
///   balanced bipartitions (with replacement).
/// * `AllBalanced`: one sequence, cut once at each balanced bipartition;
///   `samples` is ignored and the record reports the number of cuts.
pub fn average_entropy(n: usize, m: usize, samples: usize, mode: PartitionMode, tree: &SeedTree) -> Result<SweepRecord> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("entropy sweeps need an even qubit count, got {n}")));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1".into()));
    }
    let values = match mode {
        PartitionMode::Natural => {
            let part = Bipartition::natural(n)?;
            par_samples(samples, |i| {
                let seq = random_sequence(n, m, &mut tree.rng(i as u64))?;
                entanglement_entropy(&encode_sequence(&seq), &part)
            })?
        }
        PartitionMode::RandomBalanced => {
            let state = encode_sequence(&random_sequence(n, m, &mut tree.branch(TAG_STATE).rng(0))?);
            let cuts = tree.branch(TAG_CUT);
            par_samples(samples, |i| {
                let part = random_balanced(n, &mut cuts.rng(i as u64))?;
                entanglement_entropy(&state, &part)
            })?
        }
        PartitionMode::AllBalanced => {
            let state = encode_sequence(&random_sequence(n, m, &mut tree.branch(TAG_STATE).rng(0))?);
            let parts = balanced_partitions(n)?;
            par_samples(parts.len(), |i| entanglement_entropy(&state, &parts[i]))?
        }
    };
    let (mean, std_err) = mean_and_std_err(&values);
    Ok(SweepRecord { n, m, mean, std_err, samples: values.len(), mode, seed: tree.seed() })
}

/// Mean natural-cut entropy of `samples` Haar-random states, with its
/// standard error.
pub fn haar_average(n: usize, samples: usize, tree: &SeedTree) -> Result<(f64, f64)> {
    if samples == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1".into()));
    }
    let part = Bipartition::natural(n)?;
    let values = par_samples(samples, |i| {
        let state = haar_state(n, &mut tree.rng(i as u64))?;
        entanglement_entropy(&state, &part)
    })?;
    Ok(mean_and_std_err(&values))
}

/// Both averaging modes at one `(n, M)` point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConcentrationCheck {
    pub natural: SweepRecord,
    pub random_balanced: SweepRecord,
    pub gap: f64,
}

/// Compares the average over many states at the natural cut with the
/// average over random balanced cuts of a single state.
pub fn mode_concentration_check(n: usize, m: usize, samples: usize, tree: &SeedTree) -> Result<ConcentrationCheck> {
    let natural = average_entropy(n, m, samples, PartitionMode::Natural, &tree.branch(1))?;
    let random_balanced = average_entropy(n, m, samples, PartitionMode::RandomBalanced, &tree.branch(2))?;
    let gap = (natural.mean - random_balanced.mean).abs();
    Ok(ConcentrationCheck { natural, random_balanced, gap })
}

/// One record per grid point. Each point draws from a branch keyed by its
/// `M`, so a point's value does not depend on the rest of the grid.
pub fn sweep(config: &ExperimentConfig) -> Result<Vec<SweepRecord>> {
    config.validate()?;
    let tree = SeedTree::new(config.seed);
    config
        .m_grid
        .iter()
        .map(|&m| average_entropy(config.n, m, config.samples, config.mode, &tree.branch(m as u64)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_lengths_have_zero_entropy() {
        let tree = SeedTree::new(5);
        for mode in [PartitionMode::Natural, PartitionMode::RandomBalanced, PartitionMode::AllBalanced] {
            for m in [1, 64] {
                let r = average_entropy(6, m, 20, mode, &tree).unwrap();
                assert!(r.mean.abs() < 1e-10, "{mode} M={m}: {}", r.mean);
                assert!(r.std_err < 1e-10);
            }
        }
    }

    #[test]
    fn all_balanced_reports_cut_count() {
        let r = average_entropy(10, 107, 1, PartitionMode::AllBalanced, &SeedTree::new(0)).unwrap();
        assert_eq!(r.samples, 126);
        assert!(r.mean > 3.5 && r.mean < 5.0);
    }

    #[test]
    fn modes_agree_at_small_register() {
        let c = mode_concentration_check(10, 107, 200, &SeedTree::new(11)).unwrap();
        assert!(c.gap < 0.05, "{c:?}");
        assert!((c.natural.mean - 4.077).abs() < 0.03);
    }

    #[test]
    fn sweep_is_reproducible_and_bounded() {
        let config = ExperimentConfig {
            n: 8,
            m_grid: vec![1, 4, 16, 64, 256],
            samples: 30,
            mode: PartitionMode::Natural,
            seed: 9,
            out: None,
        };
        let a = sweep(&config).unwrap();
        assert_eq!(a, sweep(&config).unwrap());
        assert_eq!(a.len(), 5);
        for r in &a {
            assert!(r.mean >= 0.0 && r.mean <= 4.0 && r.std_err >= 0.0);
            assert_eq!(r.seed, 9);
        }
        let other = sweep(&ExperimentConfig { m_grid: vec![16], ..config.clone() }).unwrap();
        assert_eq!(other[0], a[2]);
    }

    #[test]
    fn std_err_shrinks_with_budget() {
        let small = average_entropy(8, 40, 400, PartitionMode::Natural, &SeedTree::new(1)).unwrap();
        let large = average_entropy(8, 40, 1600, PartitionMode::Natural, &SeedTree::new(2)).unwrap();
        let ratio = small.std_err / large.std_err;
        assert!((ratio - 2.0).abs() < 0.4, "ratio {ratio}");
    }

    #[test]
    fn haar_matches_page_value_at_small_register() {
        let (mean, se) = haar_average(6, 400, &SeedTree::new(3)).unwrap();
        // exact finite-size Page mean for 8x8 blocks, in bits
        let page: f64 = (9..=64).map(|k| 1.0 / k as f64).sum::<f64>() - 7.0 / 16.0;
        let page = page / std::f64::consts::LN_2;
        assert!((mean - page).abs() < 4.0 * se + 1e-3, "{mean} vs {page}");
    }
}
