use std::collections::HashSet;

use rand::seq::index;
use rand::Rng;

use super::spectra::Histogram;
use super::{mean_and_std_err, par_samples, SeedTree};
use crate::entropy::entanglement_entropy;
use crate::partition::full_mask;
use crate::{check_qubits, Bipartition, Error, PureState, Result};

/// Uniformly drawn balanced bipartition, in canonical form.
pub(crate) fn random_balanced<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Bipartition> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidBipartition(format!("balanced cuts need an even qubit count, got {n}")));
    }
    let a: Vec<usize> = index::sample(rng, n, n / 2).into_vec();
    Ok(Bipartition::new(n, &a)?.canonical())
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Number of distinct cuts with `size_a` qubits in A, complements identified.
pub fn distinct_partition_count(n: usize, size_a: usize) -> u64 {
    if size_a == 0 || size_a >= n {
        return 0;
    }
    let c = binomial(n, size_a);
    if 2 * size_a == n {
        c / 2
    } else {
        c
    }
}

fn representative(n: usize, mask: u32, size_a: usize) -> u32 {
    if 2 * size_a == n && mask & 1 != 0 {
        full_mask(n) & !mask
    } else {
        mask
    }
}

/// `count` distinct bipartitions with `size_a` qubits in subsystem A
/// (default `n/2`), drawn uniformly without replacement. A cut and its
/// complement count once; balanced cuts come back in canonical form.
pub fn sample_partitions<R: Rng + ?Sized>(
    n: usize,
    count: usize,
    size_a: Option<usize>,
    rng: &mut R,
) -> Result<Vec<Bipartition>> {
    check_qubits(n)?;
    let size_a = size_a.unwrap_or(n / 2);
    let total = distinct_partition_count(n, size_a);
    if count == 0 || count as u64 > total {
        return Err(Error::InvalidArgument(format!(
            "requested {count} partitions with |A| = {size_a}, but {n} qubits admit {total} distinct ones"
        )));
    }
    let masks: Vec<u32> = if 2 * count as u64 >= total {
        let all: Vec<u32> = (1..full_mask(n))
            .filter(|m| m.count_ones() as usize == size_a && representative(n, *m, size_a) == *m)
            .collect();
        index::sample(rng, all.len(), count).into_iter().map(|i| all[i]).collect()
    } else {
        let mut seen = HashSet::with_capacity(count);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let mask = index::sample(rng, n, size_a).into_iter().fold(0u32, |m, q| m | (1 << q));
            let mask = representative(n, mask, size_a);
            if seen.insert(mask) {
                out.push(mask);
            }
        }
        out
    };
    masks.into_iter().map(|m| Bipartition::from_mask(n, m)).collect()
}

/// Entropies of one state across a set of cuts.
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionEntropies {
    pub partitions: Vec<Bipartition>,
    pub entropies: Vec<f64>,
}

impl PartitionEntropies {
    pub fn min(&self) -> f64 {
        self.entropies.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.entropies.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// `max - min`.
    pub fn spread(&self) -> f64 {
        self.max() - self.min()
    }

    pub fn mean_and_std_err(&self) -> (f64, f64) {
        mean_and_std_err(&self.entropies)
    }

    pub fn histogram(&self, bins: usize) -> Histogram {
        Histogram::uniform(&self.entropies, bins)
    }
}

/// Von Neumann entropies of `state` over explicit cuts.
pub fn partition_entropies(state: &PureState, partitions: Vec<Bipartition>) -> Result<PartitionEntropies> {
    let entropies = par_samples(partitions.len(), |i| entanglement_entropy(state, &partitions[i]))?;
    Ok(PartitionEntropies { partitions, entropies })
}

/// Entropies of `state` over `count` distinct cuts sampled from stream 0 of
/// `tree`. `size_a` defaults to a balanced split.
pub fn partition_histogram(
    state: &PureState,
    count: usize,
    size_a: Option<usize>,
    tree: &SeedTree,
) -> Result<PartitionEntropies> {
    let partitions = sample_partitions(state.n(), count, size_a, &mut tree.rng(0))?;
    partition_entropies(state, partitions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{encode_sequence, rainbow_state, Sequence};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn distinct_counts() {
        assert_eq!(distinct_partition_count(4, 2), 3);
        assert_eq!(distinct_partition_count(10, 5), 126);
        assert_eq!(distinct_partition_count(14, 7), 1716);
        assert_eq!(distinct_partition_count(20, 10), 92378);
        assert_eq!(distinct_partition_count(5, 2), 10);
        assert_eq!(distinct_partition_count(4, 0), 0);
    }

    #[test]
    fn samples_are_distinct_canonical_and_sized() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (n, count) in [(10, 126), (10, 40), (14, 300), (20, 50)] {
            let parts = sample_partitions(n, count, None, &mut rng).unwrap();
            assert_eq!(parts.len(), count);
            let set: HashSet<u32> = parts.iter().map(|p| p.mask()).collect();
            assert_eq!(set.len(), count);
            assert!(parts.iter().all(|p| p.is_balanced() && p.canonical() == *p));
        }
        let parts = sample_partitions(6, 20, Some(2), &mut rng).unwrap_or_default();
        assert!(parts.is_empty(), "only 15 cuts of size 2 exist");
        let parts = sample_partitions(6, 15, Some(2), &mut rng).unwrap();
        assert!(parts.iter().all(|p| p.size_a() == 2));
        assert!(sample_partitions(10, 127, None, &mut rng).is_err());
    }

    #[test]
    fn random_balanced_is_canonical() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let p = random_balanced(8, &mut rng).unwrap();
            assert!(p.is_balanced());
            assert_eq!(p.mask() & 1, 0);
        }
        assert!(random_balanced(7, &mut rng).is_err());
    }

    #[test]
    fn rainbow_over_all_cuts() {
        let state = rainbow_state(4).unwrap();
        let all = partition_histogram(&state, 3, None, &SeedTree::new(0)).unwrap();
        assert!(all.entropies.iter().all(|&s| s <= 2.0 + 1e-12));
        let natural = Bipartition::natural(4).unwrap();
        let i = all.partitions.iter().position(|p| *p == natural).unwrap();
        assert!((all.entropies[i] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn product_state_is_unentangled_everywhere() {
        let state = encode_sequence(&Sequence::full(8).unwrap());
        let all = partition_histogram(&state, 35, None, &SeedTree::new(0)).unwrap();
        assert!(all.entropies.iter().all(|&s| s.abs() < 1e-10));
        assert_eq!(all.histogram(4).counts.iter().sum::<u64>(), 35);
    }
}
