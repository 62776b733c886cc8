use rand::seq::index;
use serde::Serialize;

use super::{average_entropy, default_samples, mean_and_std_err, par_samples, MGrid, PartitionMode, SeedTree, SweepRecord};
use crate::analytics::{ols_fit, quadratic_peak, FitResult, Peak};
use crate::entropy::entanglement_entropy;
use crate::{encode_sequence, Bipartition, Error, Result, Sequence};

/// Budgets and grid shapes for [`find_mn`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MnSearch {
    /// Coarse log-spaced sweep over `[1, N]`. When false the bracket is
    /// centred on [`predicted_mn`] instead.
    pub coarse: bool,
    pub coarse_points: usize,
    pub bracket_points: usize,
    pub window_points: usize,
    /// Half-width of the refinement window relative to its centre.
    pub window_fraction: f64,
    pub max_recenter: usize,
    /// States per coarse and bracket point.
    pub samples: usize,
    /// States per refinement point.
    pub refine_samples: usize,
    /// States for the final estimate of `E_n`.
    pub final_samples: usize,
}

impl MnSearch {
    /// Defaults: refinement at five times the default budget and never
    /// below 500, final estimate at twice that.
    pub fn for_n(n: usize) -> Self {
        let samples = default_samples(n);
        let refine_samples = (5 * samples).max(500);
        Self {
            coarse: n <= 16,
            coarse_points: 25,
            bracket_points: 9,
            window_points: 11,
            window_fraction: 0.15,
            max_recenter: 3,
            samples,
            refine_samples,
            final_samples: 2 * refine_samples,
        }
    }
}

/// Every sweep behind one [`find_mn`] result.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MnDiagnostics {
    pub coarse: Vec<SweepRecord>,
    pub bracket: Vec<SweepRecord>,
    pub windows: Vec<Vec<SweepRecord>>,
    /// Fitted vertex of each window, when it had one.
    pub vertices: Vec<Option<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MnResult {
    pub n: usize,
    pub m_n: usize,
    /// Unrounded vertex of the last fit.
    pub m_star: f64,
    pub e_n: f64,
    pub e_n_std_err: f64,
    pub final_samples: usize,
    pub seed: u64,
    pub diagnostics: MnDiagnostics,
}

/// Length suggested by the reference regression `log2 M_n = 0.703 n - 0.357`.
pub fn predicted_mn(n: usize) -> usize {
    (0.703 * n as f64 - 0.357).exp2().round() as usize
}

fn run_grid(n: usize, grid: &[usize], samples: usize, tree: &SeedTree) -> Result<Vec<SweepRecord>> {
    grid.iter()
        .map(|&m| average_entropy(n, m, samples, PartitionMode::Natural, &tree.branch(m as u64)))
        .collect()
}

/// Window sweep with common random numbers: sample `i` draws one shuffled
/// subset of size `max(grid)` and every grid point uses a prefix of it. Each
/// prefix is a uniform subset of its length, so every record is an unbiased
/// average, while the noise shared across neighbouring points cancels in the
/// fitted curvature and vertex.
fn nested_grid(n: usize, grid: &[usize], samples: usize, tree: &SeedTree) -> Result<Vec<SweepRecord>> {
    let dim = 1usize << n;
    let top = *grid.iter().max().expect("nonempty grid");
    let part = Bipartition::natural(n)?;
    let per_sample = par_samples(samples, |i| {
        let order = index::sample(&mut tree.rng(i as u64), dim, top).into_vec();
        grid.iter()
            .map(|&m| {
                let seq = Sequence::from_unsorted(n, order[..m].to_vec())?;
                entanglement_entropy(&encode_sequence(&seq), &part)
            })
            .collect::<Result<Vec<f64>>>()
    })?;
    Ok(grid
        .iter()
        .enumerate()
        .map(|(j, &m)| {
            let column: Vec<f64> = per_sample.iter().map(|row| row[j]).collect();
            let (mean, std_err) = mean_and_std_err(&column);
            SweepRecord { n, m, mean, std_err, samples, mode: PartitionMode::Natural, seed: tree.seed() }
        })
        .collect())
}

fn argmax(records: &[SweepRecord]) -> usize {
    records
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.mean.total_cmp(&b.1.mean))
        .map(|(i, _)| i)
        .expect("nonempty sweep")
}

fn log_grid(lo: usize, hi: usize, points: usize) -> Result<Vec<usize>> {
    Ok(MGrid::log(lo, hi, points.min(hi - lo + 1))?.0)
}

fn points(records: &[SweepRecord]) -> Vec<(f64, f64)> {
    records.iter().map(|r| (r.m as f64, r.mean)).collect()
}

/// Length `M_n` maximizing the average natural-cut entropy, and `E_n`.
///
/// A log-spaced sweep over `[1, N]` locates the peak to within one grid
/// step, a second log sweep between its neighbours narrows it, and a linear
/// window of relative half-width `window_fraction`, evaluated on nested
/// subsets, is fitted with a parabola. The window moves onto the vertex whenever the vertex falls in
/// its outer quarters or outside it, at most `max_recenter` times. `E_n` is
/// then re-estimated at `M_n = round(M*)` with the final budget.
pub fn find_mn(n: usize, search: &MnSearch, tree: &SeedTree) -> Result<MnResult> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("M_n search needs an even qubit count >= 4, got {n}")));
    }
    crate::check_qubits(n)?;
    let dim = 1usize << n;
    let (coarse, (lo, hi)) = if search.coarse {
        let records = run_grid(n, &log_grid(1, dim, search.coarse_points)?, search.samples, &tree.branch(10))?;
        let i = argmax(&records);
        let lo = records[i.saturating_sub(1)].m;
        let hi = records[(i + 1).min(records.len() - 1)].m;
        (records, (lo, hi))
    } else {
        let c = predicted_mn(n) as f64;
        (Vec::new(), ((c / 1.5) as usize, ((c * 1.5) as usize).min(dim)))
    };
    let bracket = run_grid(n, &log_grid(lo.max(1), hi, search.bracket_points)?, search.samples, &tree.branch(11))?;
    let mut center = bracket[argmax(&bracket)].m as f64;

    let mut windows = Vec::new();
    let mut vertices = Vec::new();
    let mut last_error = None;
    let mut peak: Option<Peak> = None;
    for attempt in 0..=search.max_recenter {
        let half = (center * search.window_fraction).max(search.window_points as f64 / 2.0);
        let w_lo = ((center - half).round() as usize).max(1);
        let w_hi = ((center + half).round() as usize).min(dim);
        let grid = MGrid::linear(w_lo, w_hi, search.window_points.min(w_hi - w_lo + 1))?.0;
        let records = nested_grid(n, &grid, search.refine_samples, &tree.branch(20 + attempt as u64))?;
        let fitted = quadratic_peak(&points(&records));
        vertices.push(fitted.as_ref().ok().map(|p| p.x));
        let inner = (w_lo as f64 + 0.25 * (w_hi - w_lo) as f64, w_hi as f64 - 0.25 * (w_hi - w_lo) as f64);
        match fitted {
            Ok(p) if p.x >= inner.0 && p.x <= inner.1 => {
                peak = Some(p);
                windows.push(records);
                break;
            }
            Ok(p) => {
                center = p.x;
                peak = Some(p);
            }
            Err(e) => {
                center = records[argmax(&records)].m as f64;
                peak = None;
                last_error = Some(e);
            }
        }
        windows.push(records);
    }
    let diagnostics = MnDiagnostics { coarse, bracket, windows, vertices };
    let peak = match peak {
        Some(p) => p,
        None => {
            let reason = match last_error {
                Some(Error::NoInteriorPeak { reason, .. }) => reason,
                _ => "no concave fit found".into(),
            };
            let dump = diagnostics.windows.iter().flat_map(|w| points(w)).collect();
            return Err(Error::NoInteriorPeak { reason, points: dump });
        }
    };
    let m_n = peak.x.round().clamp(1.0, dim as f64) as usize;
    let last = average_entropy(n, m_n, search.final_samples, PartitionMode::Natural, &tree.branch(30))?;
    Ok(MnResult {
        n,
        m_n,
        m_star: peak.x,
        e_n: last.mean,
        e_n_std_err: last.std_err,
        final_samples: last.samples,
        seed: tree.seed(),
        diagnostics,
    })
}

/// [`find_mn`] over several register sizes with line fits of `E_n` and
/// `log2 M_n` against `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalingStudy {
    pub results: Vec<MnResult>,
    pub entropy_fit: FitResult,
    pub log_m_fit: FitResult,
}

impl ScalingStudy {
    pub fn from_results(results: Vec<MnResult>) -> Result<Self> {
        if results.len() < 3 {
            return Err(Error::InvalidArgument(format!("scaling fits need at least 3 sizes, got {}", results.len())));
        }
        let entropy_fit = ols_fit(&results.iter().map(|r| (r.n as f64, r.e_n)).collect::<Vec<_>>())?;
        let log_m_fit = ols_fit(&results.iter().map(|r| (r.n as f64, (r.m_n as f64).log2())).collect::<Vec<_>>())?;
        Ok(Self { results, entropy_fit, log_m_fit })
    }
}

/// Each size searches on its own branch of `tree`, so a size's result does
/// not depend on which other sizes are in the list.
pub fn scaling_study(ns: &[usize], tree: &SeedTree) -> Result<ScalingStudy> {
    if ns.len() < 3 {
        return Err(Error::InvalidArgument(format!("scaling fits need at least 3 sizes, got {}", ns.len())));
    }
    let results = ns
        .iter()
        .map(|&n| find_mn(n, &MnSearch::for_n(n), &tree.branch(n as u64)))
        .collect::<Result<Vec<_>>>()?;
    ScalingStudy::from_results(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicted_lengths_track_reference_rows() {
        assert!((predicted_mn(14) as f64 / 716.0 - 1.0).abs() < 0.1);
        assert!((predicted_mn(20) as f64 / 13091.0 - 1.0).abs() < 0.1);
    }

    #[test]
    fn small_register_search() {
        let r = find_mn(8, &MnSearch::for_n(8), &SeedTree::new(1)).unwrap();
        // log2 M_n = 0.703 n - 0.357 puts the peak near 39 at n = 8
        assert!(r.m_n > 25 && r.m_n < 60, "{}", r.m_n);
        assert!(r.e_n > 2.8 && r.e_n < 3.3, "{}", r.e_n);
        assert_eq!(r.final_samples, 2000);
        assert!(!r.diagnostics.coarse.is_empty());
    }

    fn synthetic(n: usize, e_n: f64, m_n: usize) -> MnResult {
        MnResult {
            n,
            m_n,
            m_star: m_n as f64,
            e_n,
            e_n_std_err: 0.0,
            final_samples: 1,
            seed: 0,
            diagnostics: MnDiagnostics { coarse: vec![], bracket: vec![], windows: vec![], vertices: vec![] },
        }
    }

    #[test]
    fn collinear_results_recover_the_line() {
        let results = [10, 12, 14, 16].map(|n| synthetic(n, 0.5 * n as f64 - 1.0, 1 << (n - 3))).to_vec();
        let s = ScalingStudy::from_results(results).unwrap();
        assert!((s.entropy_fit.slope - 0.5).abs() < 1e-12 && (s.entropy_fit.intercept + 1.0).abs() < 1e-12);
        assert!((s.log_m_fit.slope - 1.0).abs() < 1e-12 && (s.log_m_fit.intercept + 3.0).abs() < 1e-12);
        assert!(ScalingStudy::from_results(vec![synthetic(10, 4.0, 100)]).is_err());
    }
}
