use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{par_samples, SeedTree};
use crate::entropy::entanglement_entropy;
use crate::sequences::random_sequence;
use crate::{balanced_partitions, encode_sequence, Bipartition, Error, PureState, Result, Sequence};

/// How a candidate's per-partition entropies are reduced to one score.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GreedyScore {
    #[default]
    Mean,
    Min,
}

impl fmt::Display for GreedyScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Mean => "mean",
            Self::Min => "min",
        })
    }
}

impl FromStr for GreedyScore {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mean" => Ok(Self::Mean),
            "min" => Ok(Self::Min),
            _ => Err(Error::InvalidArgument(format!("unknown score {s:?}, expected mean or min"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GreedyResult {
    pub best: Sequence,
    pub best_index: usize,
    pub best_score: f64,
    /// Entropies of the best candidate, in the order of [`balanced_partitions`].
    pub entropies: Vec<f64>,
    /// Score of every candidate, in stream order.
    pub scores: Vec<f64>,
    /// Running maximum of `scores`.
    pub trace: Vec<f64>,
}

fn all_entropies(state: &PureState, parts: &[Bipartition]) -> Result<Vec<f64>> {
    parts.iter().map(|p| entanglement_entropy(state, p)).collect()
}

fn reduce(entropies: &[f64], score: GreedyScore) -> f64 {
    match score {
        GreedyScore::Mean => entropies.iter().sum::<f64>() / entropies.len() as f64,
        GreedyScore::Min => entropies.iter().copied().fold(f64::INFINITY, f64::min),
    }
}

/// Best of `candidates` random length-`m` sequences, scored over every
/// balanced bipartition. Candidate `i` is drawn from stream `i` of `tree`;
/// ties keep the earliest candidate.
pub fn greedy_best_sample(
    n: usize,
    m: usize,
    candidates: usize,
    score: GreedyScore,
    tree: &SeedTree,
) -> Result<GreedyResult> {
    if candidates == 0 {
        return Err(Error::InvalidArgument("need at least one candidate".into()));
    }
    let parts = balanced_partitions(n)?;
    let draw = |i: usize| random_sequence(n, m, &mut tree.rng(i as u64));
    let scores = par_samples(candidates, |i| {
        let state = encode_sequence(&draw(i)?);
        Ok(reduce(&all_entropies(&state, &parts)?, score))
    })?;
    let mut trace = Vec::with_capacity(candidates);
    let mut best_index = 0;
    for (i, &s) in scores.iter().enumerate() {
        if s > scores[best_index] {
            best_index = i;
        }
        trace.push(scores[best_index]);
    }
    let best = draw(best_index)?;
    let entropies = all_entropies(&encode_sequence(&best), &parts)?;
    Ok(GreedyResult { best, best_index, best_score: scores[best_index], entropies, scores, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::mean_and_std_err;

    #[test]
    fn single_candidate_is_returned() {
        let tree = SeedTree::new(4);
        let r = greedy_best_sample(6, 10, 1, GreedyScore::Mean, &tree).unwrap();
        assert_eq!(r.best, random_sequence(6, 10, &mut tree.rng(0)).unwrap());
        assert_eq!(r.trace, vec![r.best_score]);
        assert_eq!(r.entropies.len(), 10);
    }

    #[test]
    fn trace_is_running_maximum() {
        let r = greedy_best_sample(8, 30, 200, GreedyScore::Mean, &SeedTree::new(5)).unwrap();
        assert!(r.trace.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(*r.trace.last().unwrap(), r.best_score);
        let max = r.scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(r.best_score, max);
        assert!((reduce(&r.entropies, GreedyScore::Mean) - r.best_score).abs() < 1e-12);
        let (mean, se) = mean_and_std_err(&r.scores);
        assert!(r.best_score > mean + 3.0 * se);
    }

    #[test]
    fn min_score() {
        let r = greedy_best_sample(6, 12, 50, GreedyScore::Min, &SeedTree::new(6)).unwrap();
        let min = r.entropies.iter().copied().fold(f64::INFINITY, f64::min);
        assert_eq!(r.best_score, min);
        assert_eq!("min".parse::<GreedyScore>().unwrap(), GreedyScore::Min);
        assert!("median".parse::<GreedyScore>().is_err());
    }
}
