//! Bipartitions of the qubit register and the amplitude reshape they induce.

use faer::Mat;
use num_complex::Complex64;

use crate::{check_qubits, Error, PureState, Result};

/// Subsystem A of a split of `n` qubits, stored as a bit mask over qubit
/// indices. Subsystem B is the complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    n: usize,
    mask: u32,
}

impl Bipartition {
    pub fn new(n: usize, subset_a: &[usize]) -> Result<Self> {
        check_qubits(n)?;
        let mut mask = 0u32;
        for &q in subset_a {
            if q >= n {
                return Err(Error::InvalidBipartition(format!("qubit {q} out of range for {n} qubits")));
            }
            if mask & (1 << q) != 0 {
                return Err(Error::InvalidBipartition(format!("qubit {q} listed twice")));
            }
            mask |= 1 << q;
        }
        Self::from_mask(n, mask)
    }

    pub fn from_mask(n: usize, mask: u32) -> Result<Self> {
        check_qubits(n)?;
        let full = full_mask(n);
        if mask & !full != 0 {
            return Err(Error::InvalidBipartition(format!("mask {mask:#b} exceeds {n} qubits")));
        }
        if mask == 0 || mask == full {
            return Err(Error::InvalidBipartition("subsystem A must be a nonempty proper subset".into()));
        }
        Ok(Self { n, mask })
    }

    /// High-order half `{n/2, ..., n-1}` in subsystem A.
    pub fn natural(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidBipartition(format!("cannot split {n} qubits")));
        }
        check_qubits(n)?;
        Self::from_mask(n, full_mask(n) & !full_mask(n / 2))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn size_a(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn size_b(&self) -> usize {
        self.n - self.size_a()
    }

    pub fn is_balanced(&self) -> bool {
        self.size_a() == self.size_b()
    }

    /// Qubits of subsystem A in ascending order.
    pub fn subset_a(&self) -> Vec<usize> {
        (0..self.n).filter(|&q| self.mask & (1 << q) != 0).collect()
    }

    pub fn subset_b(&self) -> Vec<usize> {
        (0..self.n).filter(|&q| self.mask & (1 << q) == 0).collect()
    }

    pub fn complement(&self) -> Self {
        Self { n: self.n, mask: full_mask(self.n) & !self.mask }
    }

    /// Representative of `{self, complement}`: the member that leaves qubit 0
    /// in subsystem B. The natural bipartition is its own representative.
    pub fn canonical(&self) -> Self {
        if self.mask & 1 == 0 {
            *self
        } else {
            self.complement()
        }
    }

    /// Largest entropy a state can carry across this cut, in bits.
    pub fn max_entropy(&self) -> f64 {
        self.size_a().min(self.size_b()) as f64
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Every balanced bipartition of an even register, one per complement pair,
/// in increasing mask order.
pub fn balanced_partitions(n: usize) -> Result<Vec<Bipartition>> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidBipartition(format!("balanced cuts need an even qubit count, got {n}")));
    }
    check_qubits(n)?;
    let half = (n / 2) as u32;
    Ok((0..=full_mask(n))
        .filter(|m| m & 1 == 0 && m.count_ones() == half)
        .map(|mask| Bipartition { n, mask })
        .collect())
}

/// Splits a basis index into its subsystem-A and subsystem-B coordinates.
///
/// Lookup tables are kept per input byte, so a split costs three table reads
/// for registers up to 24 qubits.
pub(crate) struct IndexSplit {
    tables: Vec<[(u32, u32); 256]>,
}

impl IndexSplit {
    pub(crate) fn new(part: &Bipartition) -> Self {
        let a = part.subset_a();
        let b = part.subset_b();
        let bytes = part.n.div_ceil(8);
        let tables = (0..bytes)
            .map(|byte| {
                let mut table = [(0u32, 0u32); 256];
                for (v, slot) in table.iter_mut().enumerate() {
                    for bit in 0..8 {
                        let q = byte * 8 + bit;
                        if q >= part.n || (v >> bit) & 1 == 0 {
                            continue;
                        }
                        if let Ok(pos) = a.binary_search(&q) {
                            slot.0 |= 1 << pos;
                        } else if let Ok(pos) = b.binary_search(&q) {
                            slot.1 |= 1 << pos;
                        }
                    }
                }
                table
            })
            .collect();
        Self { tables }
    }

    #[inline]
    pub(crate) fn split(&self, x: usize) -> (usize, usize) {
        let mut r = 0u32;
        let mut c = 0u32;
        for (i, table) in self.tables.iter().enumerate() {
            let (tr, tc) = table[(x >> (8 * i)) & 0xff];
            r |= tr;
            c |= tc;
        }
        (r as usize, c as usize)
    }
}

/// Amplitude matrix `Psi` with rows indexed by the bits of subsystem A and
/// columns by the bits of subsystem B, each in ascending qubit order.
pub fn reshape(state: &PureState, part: &Bipartition) -> Result<Mat<Complex64>> {
    if state.n() != part.n() {
        return Err(Error::InvalidBipartition(format!(
            "partition of {} qubits applied to a {}-qubit state",
            part.n(),
            state.n()
        )));
    }
    let split = IndexSplit::new(part);
    let mut psi = Mat::<Complex64>::zeros(1 << part.size_a(), 1 << part.size_b());
    for (x, a) in state.amplitudes().iter().enumerate() {
        let (r, c) = split.split(x);
        psi[(r, c)] = *a;
    }
    Ok(psi)
}
