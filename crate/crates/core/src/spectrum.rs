//! Spectra of reduced density matrices.
//!
//! The reduced state of subsystem A is `rho_A = Psi Psi^dagger`, where `Psi`
//! is the reshaped amplitude matrix. Its nonzero eigenvalues coincide with
//! those of `Psi^dagger Psi`, so the spectrum is always computed on the
//! smaller side of the cut and has length `2^min(|A|, |B|)`.

use faer::linalg::matmul::triangular::{matmul, BlockStructure};
use faer::traits::ComplexField;
use faer::{Accum, Mat, MatRef, Par, Side};
use num_complex::Complex64;
use std::ops::{AddAssign, Mul};

use crate::partition::IndexSplit;
use crate::{Bipartition, Error, PureState, Result};

/// Eigenvalues in `[NEGATIVE_FLOOR, 0)` are roundoff and clamp to zero.
pub const NEGATIVE_FLOOR: f64 = -1e-10;

/// Accepted deviation of the eigenvalue sum from one.
pub const SUM_TOLERANCE: f64 = 1e-8;

/// How the reduced spectrum is obtained from the amplitude matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SpectralMethod {
    /// Hermitian eigenvalues of the Gram matrix on the smaller side. Sparse
    /// amplitude matrices accumulate the Gram matrix entry by entry.
    #[default]
    Gram,
    /// Squared singular values of the amplitude matrix.
    Svd,
}

/// Eigenvalues of a reduced density matrix, sorted in nonincreasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Validates raw eigenvalues: roundoff negatives are clamped, values
    /// above one are clamped, and the sum must be one within
    /// [`SUM_TOLERANCE`].
    pub fn from_eigenvalues(raw: Vec<f64>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidArgument("empty spectrum".into()));
        }
        let mut values = Vec::with_capacity(raw.len());
        for v in raw {
            if !v.is_finite() {
                return Err(Error::Decomposition(format!("non-finite eigenvalue {v}")));
            }
            if v < NEGATIVE_FLOOR {
                return Err(Error::NegativeEigenvalue(v));
            }
            values.push(v.clamp(0.0, 1.0));
        }
        values.sort_unstable_by(|a, b| b.total_cmp(a));
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::Unnormalized(sum));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue.
    pub fn dominant(&self) -> f64 {
        self.values[0]
    }

    /// Every eigenvalue except the dominant one.
    pub fn bulk(&self) -> &[f64] {
        &self.values[1..]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Nonzero eigenvalues only.
    pub fn support(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().copied().filter(|&v| v > 0.0)
    }
}

/// Reduced spectrum of `state` across `part`, using [`SpectralMethod::Gram`].
pub fn reduced_spectrum(state: &PureState, part: &Bipartition) -> Result<Spectrum> {
    reduced_spectrum_with(state, part, SpectralMethod::Gram)
}

pub fn reduced_spectrum_with(state: &PureState, part: &Bipartition, method: SpectralMethod) -> Result<Spectrum> {
    if state.n() != part.n() {
        return Err(Error::InvalidBipartition(format!(
            "partition of {} qubits applied to a {}-qubit state",
            part.n(),
            state.n()
        )));
    }
    let layout = Layout::new(state, part);
    let raw = match (method, state.is_real()) {
        (SpectralMethod::Gram, true) => layout.gram_eigenvalues(|a| a.re)?,
        (SpectralMethod::Gram, false) => layout.gram_eigenvalues(|a| a)?,
        (SpectralMethod::Svd, true) => layout.svd_eigenvalues(|a| a.re)?,
        (SpectralMethod::Svd, false) => layout.svd_eigenvalues(|a| a)?,
    };
    Spectrum::from_eigenvalues(raw)
}

/// Nonzero amplitudes addressed by `(kept, summed)` coordinates, where the
/// kept side is the smaller subsystem and indexes the Gram matrix.
struct Layout {
    kept_dim: usize,
    summed_dim: usize,
    /// Entries grouped by summed coordinate; `offsets[s]..offsets[s + 1]`
    /// delimits group `s`.
    entries: Vec<(u32, Complex64)>,
    offsets: Vec<usize>,
}

impl Layout {
    fn new(state: &PureState, part: &Bipartition) -> Self {
        let swap = part.size_a() > part.size_b();
        let kept_dim = 1usize << part.size_a().min(part.size_b());
        let summed_dim = 1usize << part.size_a().max(part.size_b());
        let split = IndexSplit::new(part);

        let coords: Vec<(u32, u32, Complex64)> = state
            .amplitudes()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.re != 0.0 || a.im != 0.0)
            .map(|(x, a)| {
                let (r, c) = split.split(x);
                let (k, s) = if swap { (c, r) } else { (r, c) };
                (k as u32, s as u32, *a)
            })
            .collect();

        // counting sort on the summed coordinate
        let mut offsets = vec![0usize; summed_dim + 1];
        for &(_, s, _) in &coords {
            offsets[s as usize + 1] += 1;
        }
        for i in 0..summed_dim {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut entries = vec![(0u32, Complex64::new(0.0, 0.0)); coords.len()];
        for (k, s, a) in coords {
            entries[cursor[s as usize]] = (k, a);
            cursor[s as usize] += 1;
        }
        Self { kept_dim, summed_dim, entries, offsets }
    }

    fn groups(&self) -> impl Iterator<Item = &[(u32, Complex64)]> {
        self.offsets.windows(2).map(|w| &self.entries[w[0]..w[1]])
    }

    /// Pair count of the entry-wise accumulation versus the flop count of a
    /// dense triangular product, weighted for the SIMD advantage of the
    /// latter.
    fn prefer_sparse(&self) -> bool {
        let pairs: usize = self.groups().map(|g| g.len() * (g.len() + 1) / 2).sum();
        let dense = self.kept_dim * self.kept_dim * self.summed_dim / 2;
        pairs.saturating_mul(16) < dense
    }

    fn dense<T: ComplexField>(&self, cast: impl Fn(Complex64) -> T) -> Mat<T> {
        let mut psi = Mat::<T>::zeros(self.kept_dim, self.summed_dim);
        for (s, group) in self.groups().enumerate() {
            for &(k, a) in group {
                psi[(k as usize, s)] = cast(a);
            }
        }
        psi
    }

    fn gram_eigenvalues<T: Entry>(&self, cast: impl Fn(Complex64) -> T) -> Result<Vec<f64>> {
        let gram = if self.prefer_sparse() {
            let mut g = Mat::<T>::zeros(self.kept_dim, self.kept_dim);
            for group in self.groups() {
                for (i, &(ki, ai)) in group.iter().enumerate() {
                    let ai = cast(ai);
                    for &(kj, aj) in &group[..=i] {
                        let aj = cast(aj);
                        let (hi, lo, v) = if ki >= kj {
                            (ki, kj, ai * aj.conjugate())
                        } else {
                            (kj, ki, aj * ai.conjugate())
                        };
                        g[(hi as usize, lo as usize)] += v;
                    }
                }
            }
            g
        } else {
            lower_gram(self.dense(cast).as_ref())
        };
        gram.self_adjoint_eigenvalues(Side::Lower)
            .map_err(|e| Error::Decomposition(format!("{e:?}")))
    }

    fn svd_eigenvalues<T: Entry>(&self, cast: impl Fn(Complex64) -> T) -> Result<Vec<f64>> {
        let singular = self
            .dense(cast)
            .singular_values()
            .map_err(|e| Error::Decomposition(format!("{e:?}")))?;
        Ok(singular.into_iter().map(|s| s * s).collect())
    }
}

/// Matrix scalar: `f64` for real states, `Complex64` otherwise.
trait Entry: ComplexField<Real = f64> + Copy + AddAssign + Mul<Output = Self> {
    fn conjugate(self) -> Self;
}

impl Entry for f64 {
    fn conjugate(self) -> Self {
        self
    }
}

impl Entry for Complex64 {
    fn conjugate(self) -> Self {
        self.conj()
    }
}

/// Lower triangle of `psi * psi^dagger`.
fn lower_gram<T: ComplexField>(psi: MatRef<'_, T>) -> Mat<T> {
    let mut gram = Mat::<T>::zeros(psi.nrows(), psi.nrows());
    matmul(
        gram.as_mut(),
        BlockStructure::TriangularLower,
        Accum::Replace,
        psi,
        BlockStructure::Rectangular,
        psi.adjoint(),
        BlockStructure::Rectangular,
        T::one_impl(),
        Par::Seq,
    );
    gram
}
