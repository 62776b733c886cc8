use serde::Serialize;

use crate::entropy::entanglement_entropy;
use crate::sequences::sieve_omega;
use crate::{check_qubits, encode_sequence, Bipartition, Error, Result, Sequence};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KAlmostPoint {
    pub k: usize,
    /// Size of the union of `j`-almost primes for `1 <= j <= k`.
    pub m_k: usize,
    /// Natural-cut entropy of the union state, in bits.
    pub u: f64,
}

/// Entropy of the nested unions of `1..=k`-almost primes below `2^n`, for
/// `k = 1, ..., n-1`. The register is sieved once.
pub fn kalmost_curve(n: usize) -> Result<Vec<KAlmostPoint>> {
    check_qubits(n)?;
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("k-almost curve needs an even qubit count, got {n}")));
    }
    let omega = sieve_omega(1 << n)?;
    let part = Bipartition::natural(n)?;
    (1..n)
        .map(|k| {
            let elements: Vec<usize> = (0..omega.len()).filter(|&x| (1..=k).contains(&(omega[x] as usize))).collect();
            let m_k = elements.len();
            let u = entanglement_entropy(&encode_sequence(&Sequence::new(n, elements)?), &part)?;
            Ok(KAlmostPoint { k, m_k, u })
        })
        .collect()
}
