//! Entanglement entropy of finite integer sequences.
//!
//! A strictly increasing list of integers in `[0, 2^n)` is encoded as the
//! uniform superposition of the matching computational-basis states of an
//! `n`-qubit register. The crate computes bipartite entanglement spectra of
//! such states exactly, evaluates the closed-form approximations of the
//! average entropy, and drives seeded Monte-Carlo studies over sequence
//! families (uniform random subsets, primes, unions of k-almost primes).
//!
//! Qubit `j` is bit `j` of the basis integer, bit 0 least significant. The
//! natural bipartition places the high-order half of the register in
//! subsystem A.

pub mod analytics;
pub mod bernoulli;
pub mod cli;
pub mod entropy;
mod error;
pub mod experiments;
pub mod partition;
pub mod qft;
pub mod sequence;
pub mod sequences;
pub mod spectrum;
pub mod state;

pub use bernoulli::{bernoulli_matrix, gram_model_spectrum};
pub use entropy::{renyi, von_neumann};
pub use error::{Error, Result};
pub use partition::{balanced_partitions, reshape, Bipartition};
pub use qft::qft;
pub use sequence::Sequence;
pub use spectrum::{reduced_spectrum, reduced_spectrum_with, SpectralMethod, Spectrum};
pub use state::{encode_sequence, haar_state, rainbow_sequence, rainbow_state, PureState};

/// Largest register handled by the exact spectral routines.
pub const MAX_QUBITS: usize = 24;

pub(crate) fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::UnsupportedQubits(n));
    }
    Ok(())
}
