//! I.i.d. Bernoulli surrogate for the amplitude matrix of a random sequence.

use faer::{Mat, Side};
use rand::Rng;
use rand_distr::{Bernoulli, Distribution};

use crate::{check_qubits, Error, Result, Spectrum};

/// `sqrt(N) x sqrt(N)` matrix with entries that are 1 with probability
/// `M / N` and 0 otherwise.
pub fn bernoulli_matrix<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<Mat<f64>> {
    if n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("Bernoulli model needs an even qubit count, got {n}")));
    }
    check_qubits(n)?;
    let dim = 1usize << n;
    if m == 0 || m > dim {
        return Err(Error::InvalidArgument(format!("M = {m} outside 1..={dim}")));
    }
    let side = 1usize << (n / 2);
    let coin = Bernoulli::from_ratio(m as u32, dim as u32)
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(Mat::from_fn(side, side, |_, _| if coin.sample(rng) { 1.0 } else { 0.0 }))
}

/// Spectrum of `Omega^T Omega / Tr(Omega^T Omega)`.
pub fn gram_model_spectrum(omega: &Mat<f64>) -> Result<Spectrum> {
    let trace: f64 = omega.col_iter().flat_map(|c| c.iter().map(|v| v * v).collect::<Vec<_>>()).sum();
    if trace == 0.0 {
        return Err(Error::InvalidArgument("all-zero Bernoulli matrix has no normalized Gram matrix".into()));
    }
    let gram = omega.transpose() * omega / faer::Scale(trace);
    let eig = gram
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::Decomposition(format!("{e:?}")))?;
    Spectrum::from_eigenvalues(eig)
}
