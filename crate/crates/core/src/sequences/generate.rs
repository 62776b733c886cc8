use rand::seq::index;
use rand::Rng;

use super::sieve_omega;
use crate::{check_qubits, Error, Result, Sequence};

/// Uniformly distributed `M`-subset of `[0, 2^n)`, sorted.
pub fn random_sequence<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<Sequence> {
    check_qubits(n)?;
    let dim = 1usize << n;
    if m == 0 || m > dim {
        return Err(Error::InvalidArgument(format!("sequence length {m} outside 1..={dim}")));
    }
    let elements = if m == dim {
        (0..dim).collect()
    } else if m <= dim / 2 {
        let mut chosen = index::sample(rng, dim, m).into_vec();
        chosen.sort_unstable();
        chosen
    } else {
        // draw the excluded elements instead
        let mut excluded = index::sample(rng, dim, dim - m).into_vec();
        excluded.sort_unstable();
        let mut skip = excluded.into_iter().peekable();
        (0..dim)
            .filter(|&x| {
                if skip.peek() == Some(&x) {
                    skip.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    };
    Sequence::new(n, elements)
}

/// Union of the integers below `2^n` with between 1 and `k` prime factors.
#[derive(Clone, Debug, PartialEq)]
pub struct KAlmostUnion {
    pub n: usize,
    pub k: usize,
    /// `counts[i]` is the number of `(i + 1)`-almost primes below `2^n`.
    pub counts: Vec<usize>,
    pub sequence: Sequence,
}

pub fn k_almost_union(n: usize, k: usize) -> Result<KAlmostUnion> {
    check_qubits(n)?;
    if n < 2 || k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={} for {n} qubits", n.saturating_sub(1))));
    }
    let omega = sieve_omega(1 << n)?;
    let mut counts = vec![0usize; k];
    let mut elements = Vec::new();
    for (x, &w) in omega.iter().enumerate() {
        let w = w as usize;
        if (1..=k).contains(&w) {
            counts[w - 1] += 1;
            elements.push(x);
        }
    }
    Ok(KAlmostUnion { n, k, counts, sequence: Sequence::new(n, elements)? })
}

/// Primes below `2^n`.
pub fn prime_state(n: usize) -> Result<Sequence> {
    k_almost_union(n, 1).map(|u| u.sequence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn full_length_is_whole_register() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(random_sequence(5, 32, &mut rng).unwrap(), Sequence::full(5).unwrap());
        assert!(random_sequence(5, 0, &mut rng).is_err());
        assert!(random_sequence(5, 33, &mut rng).is_err());
    }

    #[test]
    fn complement_branch_has_requested_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for m in [17, 30, 31] {
            let s = random_sequence(5, m, &mut rng).unwrap();
            assert_eq!(s.len(), m);
        }
    }

    #[test]
    fn singletons_are_uniform() {
        // chi-square over 16 cells with 10^5 draws; the 0.999 quantile of
        // chi-square with 15 degrees of freedom is 37.7
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let draws = 100_000;
        let mut counts = [0usize; 16];
        for _ in 0..draws {
            counts[random_sequence(4, 1, &mut rng).unwrap().elements()[0]] += 1;
        }
        let expected = draws as f64 / 16.0;
        let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        assert!(chi2 < 37.7, "chi2 = {chi2}");
        let sigma = (draws as f64 * (1.0 / 16.0) * (15.0 / 16.0)).sqrt();
        assert!(counts.iter().all(|&c| (c as f64 - expected).abs() < 3.0 * sigma + 1.0));
    }

    #[test]
    fn inclusion_frequency_is_half() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let draws = 100_000;
        let mut counts = [0usize; 16];
        for _ in 0..draws {
            for &x in random_sequence(4, 8, &mut rng).unwrap().elements() {
                counts[x] += 1;
            }
        }
        let se = (draws as f64 * 0.25).sqrt();
        for c in counts {
            assert!((c as f64 - draws as f64 / 2.0).abs() < 4.0 * se, "{c}");
        }
    }

    #[test]
    fn small_unions() {
        let u1 = k_almost_union(5, 1).unwrap();
        assert_eq!(u1.sequence.elements(), &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
        let u2 = k_almost_union(5, 2).unwrap();
        assert_eq!(u2.counts, vec![11, 10]);
        let semiprimes: Vec<usize> = u2.sequence.elements().iter().copied().filter(|x| !u1.sequence.contains(*x)).collect();
        assert_eq!(semiprimes, vec![4, 6, 9, 10, 14, 15, 21, 22, 25, 26]);
        assert!(k_almost_union(5, 0).is_err());
        assert!(k_almost_union(5, 5).is_err());
    }

    #[test]
    fn unions_nest_and_cover() {
        for n in 2..=12 {
            let mut prev: Option<Sequence> = None;
            for k in 1..n {
                let u = k_almost_union(n, k).unwrap();
                assert_eq!(u.sequence.len(), u.counts.iter().sum::<usize>());
                if let Some(p) = &prev {
                    assert!(p.is_subset_of(&u.sequence));
                }
                prev = Some(u.sequence);
            }
            let top = k_almost_union(n, n - 1).unwrap();
            assert_eq!(top.sequence.elements(), (2..1usize << n).collect::<Vec<_>>().as_slice());
            assert_eq!(top.counts.iter().sum::<usize>(), (1 << n) - 2);
        }
    }

    #[test]
    fn prime_states() {
        assert_eq!(prime_state(2).unwrap().elements(), &[2, 3]);
        assert_eq!(prime_state(3).unwrap().elements(), &[2, 3, 5, 7]);
        assert_eq!(prime_state(5).unwrap().len(), 11);
    }
}
