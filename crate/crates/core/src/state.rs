//! Pure states of an `n`-qubit register and the constructors used throughout
//! the crate: sequence encodings, the rainbow state and Haar-random states.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::{check_qubits, Error, Result, Sequence};

/// Maximum deviation of the squared norm from one accepted for a state.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Dense amplitude vector indexed by the basis integer `x = sum_j x_j 2^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps amplitudes that are already normalized.
    pub fn from_amplitudes(n: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_qubits(n)?;
        if amplitudes.len() != 1 << n {
            return Err(Error::InvalidState(format!(
                "expected {} amplitudes for {n} qubits, got {}",
                1usize << n,
                amplitudes.len()
            )));
        }
        let norm_sqr = norm_sqr(&amplitudes);
        if (norm_sqr - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::InvalidState(format!("squared norm is {norm_sqr}, expected 1")));
        }
        Ok(Self { n, amplitudes })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(n: usize, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = norm_sqr(&amplitudes).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidState("cannot normalize a zero or non-finite vector".into()));
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Self::from_amplitudes(n, amplitudes)
    }

    /// Computational basis state `|x>`.
    pub fn basis(n: usize, x: usize) -> Result<Self> {
        check_qubits(n)?;
        if x >= 1 << n {
            return Err(Error::InvalidState(format!("basis index {x} out of range for {n} qubits")));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
        amplitudes[x] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amplitudes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, x: usize) -> Complex64 {
        self.amplitudes[x]
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm_sqr(&self.amplitudes).sqrt()
    }

    /// True when no amplitude carries an imaginary part.
    pub fn is_real(&self) -> bool {
        self.amplitudes.iter().all(|a| a.im == 0.0)
    }

    /// Basis indices with a nonzero amplitude, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.re != 0.0 || a.im != 0.0)
            .map(|(x, _)| x)
            .collect()
    }

    pub fn nonzero_count(&self) -> usize {
        self.amplitudes.iter().filter(|a| a.re != 0.0 || a.im != 0.0).count()
    }

    /// Largest entrywise distance to another state of the same size.
    pub fn max_abs_diff(&self, other: &PureState) -> f64 {
        assert_eq!(self.n, other.n, "states live on different registers");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn norm_sqr(amplitudes: &[Complex64]) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum()
}

/// Uniform superposition `M^{-1/2} sum_j |a_j>` over the sequence elements.
pub fn encode_sequence(seq: &Sequence) -> PureState {
    let weight = Complex64::new(1.0 / (seq.len() as f64).sqrt(), 0.0);
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); seq.dim()];
    for &x in seq.elements() {
        amplitudes[x] = weight;
    }
    PureState { n: seq.n(), amplitudes }
}

/// Elements of the rainbow state: integers whose bits `k` and `n-1-k` differ
/// for every `k < n/2`.
pub fn rainbow_sequence(n: usize) -> Result<Sequence> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("rainbow state needs an even qubit count >= 2, got {n}")));
    }
    check_qubits(n)?;
    let half = n / 2;
    let elements = (0..1usize << n)
        .filter(|&x| (0..half).all(|k| ((x >> k) & 1) != ((x >> (n - 1 - k)) & 1)))
        .collect();
    Sequence::new(n, elements)
}

/// Product of `n/2` Bell pairs `|psi+>` on qubits `(n-1-k, k)`.
pub fn rainbow_state(n: usize) -> Result<PureState> {
    rainbow_sequence(n).map(|s| encode_sequence(&s))
}

/// Haar-random state: independent standard complex Gaussian amplitudes,
/// normalized by their computed norm.
pub fn haar_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<PureState> {
    check_qubits(n)?;
    let amplitudes = (0..1usize << n)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    PureState::normalized(n, amplitudes)
}
