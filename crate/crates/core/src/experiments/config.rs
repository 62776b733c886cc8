use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// How entropy samples are drawn at a fixed `(n, M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionMode {
    /// Many random sequences, each cut at the natural bipartition.
    Natural,
    /// One random sequence, cut at uniformly drawn balanced bipartitions.
    RandomBalanced,
    /// One random sequence, cut at every balanced bipartition once.
    AllBalanced,
}

impl PartitionMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Natural => "natural",
            Self::RandomBalanced => "random-balanced",
            Self::AllBalanced => "all-balanced",
        }
    }
}

impl fmt::Display for PartitionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PartitionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "natural" => Ok(Self::Natural),
            "random-balanced" | "random" => Ok(Self::RandomBalanced),
            "all-balanced" | "all" => Ok(Self::AllBalanced),
            _ => Err(Error::InvalidArgument(format!("unknown partition mode {s:?}"))),
        }
    }
}

/// States per `(n, M)` point: 200 up to 14 qubits, 50 up to 20, 10 beyond.
pub fn default_samples(n: usize) -> usize {
    match n {
        0..=14 => 200,
        15..=20 => 50,
        _ => 10,
    }
}

/// Grid of sequence lengths.
///
/// Textual forms: `log:LO:HI:COUNT`, `lin:LO:HI:COUNT`, or a comma list.
/// Generated grids are strictly increasing and hit both endpoints; a log
/// grid whose rounded values collide at the low end advances by one instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MGrid(pub Vec<usize>);

impl MGrid {
    pub fn log(lo: usize, hi: usize, count: usize) -> Result<Self> {
        Self::spaced(lo, hi, count, |t| ((lo as f64).ln() * (1.0 - t) + (hi as f64).ln() * t).exp())
    }

    pub fn linear(lo: usize, hi: usize, count: usize) -> Result<Self> {
        Self::spaced(lo, hi, count, |t| lo as f64 * (1.0 - t) + hi as f64 * t)
    }

    fn spaced(lo: usize, hi: usize, count: usize, at: impl Fn(f64) -> f64) -> Result<Self> {
        if lo == 0 || lo > hi || count == 0 || count > hi - lo + 1 {
            return Err(Error::InvalidArgument(format!(
                "cannot place {count} distinct lengths in [{lo}, {hi}]"
            )));
        }
        if count == 1 {
            return Ok(Self(vec![lo]));
        }
        let mut out: Vec<usize> = Vec::with_capacity(count);
        for i in 0..count {
            let remaining = count - 1 - i;
            let target = at(i as f64 / (count - 1) as f64).round() as usize;
            let floor = out.last().map_or(lo, |&p| p + 1);
            out.push(target.max(floor).min(hi - remaining));
        }
        Ok(Self(out))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }
}

impl FromStr for MGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse M grid {s:?}"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["log", lo, hi, count] => Self::log(num(lo)?, num(hi)?, num(count)?),
            ["lin", lo, hi, count] => Self::linear(num(lo)?, num(hi)?, num(count)?),
            [list] => {
                let values = list.split(',').map(num).collect::<Result<Vec<_>>>()?;
                if values.is_empty() || values.contains(&0) {
                    return Err(bad());
                }
                Ok(Self(values))
            }
            _ => Err(bad()),
        }
    }
}

/// Complete description of a sweep run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub m_grid: Vec<usize>,
    pub samples: usize,
    pub mode: PartitionMode,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        crate::check_qubits(self.n)?;
        if self.samples == 0 {
            return Err(Error::InvalidArgument("sample count must be at least 1".into()));
        }
        if self.m_grid.is_empty() {
            return Err(Error::InvalidArgument("M grid is empty".into()));
        }
        let dim = 1usize << self.n;
        if let Some(m) = self.m_grid.iter().find(|&&m| m == 0 || m > dim) {
            return Err(Error::InvalidArgument(format!("M = {m} outside 1..={dim}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_grid_is_distinct_and_hits_endpoints() {
        let g: MGrid = "log:1:16384:64".parse().unwrap();
        assert_eq!(g.values().len(), 64);
        assert_eq!(g.values()[0], 1);
        assert_eq!(*g.values().last().unwrap(), 16384);
        assert!(g.values().windows(2).all(|w| w[0] < w[1]));
        let tight = MGrid::log(1, 5, 5).unwrap();
        assert_eq!(tight.values(), &[1, 2, 3, 4, 5]);
        assert!(MGrid::log(1, 5, 6).is_err());
    }

    #[test]
    fn other_grid_forms() {
        assert_eq!("lin:10:20:3".parse::<MGrid>().unwrap().values(), &[10, 15, 20]);
        assert_eq!("5,9,100".parse::<MGrid>().unwrap().values(), &[5, 9, 100]);
        assert!("log:0:10:3".parse::<MGrid>().is_err());
        assert!("cubic:1:2:3".parse::<MGrid>().is_err());
        assert!("1,0".parse::<MGrid>().is_err());
    }

    #[test]
    fn modes_parse() {
        for m in [PartitionMode::Natural, PartitionMode::RandomBalanced, PartitionMode::AllBalanced] {
            assert_eq!(m.as_str().parse::<PartitionMode>().unwrap(), m);
        }
        assert!("diagonal".parse::<PartitionMode>().is_err());
    }

    #[test]
    fn config_validation() {
        let mut c = ExperimentConfig { n: 4, m_grid: vec![1, 16], samples: 1, mode: PartitionMode::Natural, seed: 0, out: None };
        assert!(c.validate().is_ok());
        c.m_grid.push(17);
        assert!(c.validate().is_err());
        c.m_grid.clear();
        assert!(c.validate().is_err());
        c.m_grid.push(3);
        c.samples = 0;
        assert!(c.validate().is_err());
    }
}
