use std::fmt;

use crate::{check_qubits, Error, Result};

/// A strictly increasing list of distinct integers in `[0, 2^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequence {
    n: usize,
    elements: Vec<usize>,
}

impl Sequence {
    /// Builds a sequence from elements that are already strictly increasing.
    pub fn new(n: usize, elements: Vec<usize>) -> Result<Self> {
        check_qubits(n)?;
        let dim = 1usize << n;
        if elements.is_empty() {
            return Err(Error::InvalidSequence("a sequence needs at least one element".into()));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(format!(
                "elements must be strictly increasing, found {} followed by {}",
                w[0], w[1]
            )));
        }
        let last = *elements.last().unwrap();
        if last >= dim {
            return Err(Error::InvalidSequence(format!(
                "element {last} does not fit in {n} qubits (limit {})",
                dim - 1
            )));
        }
        Ok(Self { n, elements })
    }

    /// Sorts the elements first. Duplicates are still rejected.
    pub fn from_unsorted(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSequence(format!("duplicate element {}", w[0])));
        }
        Self::new(n, elements)
    }

    /// The full sequence `{0, 1, ..., 2^n - 1}`.
    pub fn full(n: usize) -> Result<Self> {
        check_qubits(n)?;
        Ok(Self { n, elements: (0..1usize << n).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Register dimension `N = 2^n`.
    pub fn dim(&self) -> usize {
        1 << self.n
    }

    /// Number of elements `M`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false: sequences hold at least one element.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn into_elements(self) -> Vec<usize> {
        self.elements
    }

    /// True when every element of `self` also belongs to `other`.
    pub fn is_subset_of(&self, other: &Sequence) -> bool {
        self.n == other.n && self.elements.iter().all(|&x| other.contains(x))
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
