use serde::Serialize;

use super::{mean_and_std_err, par_samples, SeedTree};
use crate::entropy::entanglement_entropy;
use crate::sequences::random_sequence;
use crate::{encode_sequence, qft, Bipartition, Error, Result, Sequence};

/// Natural-cut entropy of a sequence state before and after the QFT.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QftPair {
    pub position: f64,
    pub momentum: f64,
}

impl QftPair {
    pub fn gap(&self) -> f64 {
        (self.position - self.momentum).abs()
    }
}

fn pair(seq: &Sequence, part: &Bipartition) -> Result<QftPair> {
    let state = encode_sequence(seq);
    Ok(QftPair {
        position: entanglement_entropy(&state, part)?,
        momentum: entanglement_entropy(&qft(&state), part)?,
    })
}

pub fn qft_comparison(n: usize, inputs: &[Sequence]) -> Result<Vec<QftPair>> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("QFT comparison needs an even qubit count, got {n}")));
    }
    let part = Bipartition::natural(n)?;
    if let Some(s) = inputs.iter().find(|s| s.n() != n) {
        return Err(Error::InvalidSequence(format!("sequence on {} qubits in a {n}-qubit comparison", s.n())));
    }
    par_samples(inputs.len(), |i| pair(&inputs[i], &part))
}

/// Pairs for `draws` random length-`m` sequences, and the mean gap with its
/// standard error.
pub fn qft_comparison_random(n: usize, m: usize, draws: usize, tree: &SeedTree) -> Result<(Vec<QftPair>, f64, f64)> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("QFT comparison needs an even qubit count, got {n}")));
    }
    let part = Bipartition::natural(n)?;
    let pairs = par_samples(draws, |i| pair(&random_sequence(n, m, &mut tree.rng(i as u64))?, &part))?;
    let gaps: Vec<f64> = pairs.iter().map(QftPair::gap).collect();
    let (mean, se) = mean_and_std_err(&gaps);
    Ok((pairs, mean, se))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_pair_is_not_preserved() {
        let p = qft_comparison(2, &[Sequence::new(2, vec![0, 3]).unwrap()]).unwrap()[0];
        assert!((p.position - 1.0).abs() < 1e-12);
        // momentum amplitudes (1/sqrt2, (1-i)/(2 sqrt2), 0, (1+i)/(2 sqrt2))
        // give reduced eigenvalues (2 +- sqrt2)/4
        let l = (2.0 + 2f64.sqrt()) / 4.0;
        let expected = -l * l.log2() - (1.0 - l) * (1.0 - l).log2();
        assert!((p.momentum - expected).abs() < 1e-12);
        assert!((p.momentum - 0.6009).abs() < 1e-3);
    }

    #[test]
    fn full_superposition_stays_unentangled() {
        for n in [2, 4, 8] {
            let p = qft_comparison(n, &[Sequence::full(n).unwrap()]).unwrap()[0];
            assert!(p.position.abs() < 1e-10 && p.momentum.abs() < 1e-10);
        }
    }

    #[test]
    fn random_sequences_roughly_preserve_entropy() {
        let (pairs, mean, _) = qft_comparison_random(10, 107, 30, &SeedTree::new(2)).unwrap();
        assert_eq!(pairs.len(), 30);
        assert!(mean < 0.15, "{mean}");
        assert!(qft_comparison(4, &[Sequence::full(2).unwrap()]).is_err());
    }
}
