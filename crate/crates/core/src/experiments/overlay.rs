use serde::Serialize;

use super::{average_entropy, PartitionMode, SeedTree};
use crate::analytics::{d_approx, t_approx};
use crate::Result;

/// Monte-Carlo average next to the dense and sparse closed forms, in bits.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OverlayRow {
    pub m: usize,
    pub e_mc: f64,
    pub std_err: f64,
    pub t: f64,
    pub d: f64,
}

/// Natural-cut averages over `grid`, each point on the branch keyed by its
/// `M` as in [`super::sweep`].
pub fn approximation_overlay(n: usize, grid: &[usize], samples: usize, tree: &SeedTree) -> Result<Vec<OverlayRow>> {
    grid.iter()
        .map(|&m| {
            let r = average_entropy(n, m, samples, PartitionMode::Natural, &tree.branch(m as u64))?;
            Ok(OverlayRow {
                m,
                e_mc: r.mean,
                std_err: r.std_err,
                t: t_approx(n as u32, m as u64)?,
                d: d_approx(n as u32, m as u64)?,
            })
        })
        .collect()
}
