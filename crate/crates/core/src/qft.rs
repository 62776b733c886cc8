//! Quantum Fourier transform of a register state.
//!
//! `out(y) = N^{-1/2} sum_x in(x) exp(2 pi i x y / N)`. Dense inputs go
//! through an iterative radix-2 FFT. Inputs with fewer than `log2 N` nonzero
//! amplitudes are summed directly, which costs `O(N M)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::PureState;

pub fn qft(state: &PureState) -> PureState {
    let n = state.n();
    let dim = state.dim();
    let scale = 1.0 / (dim as f64).sqrt();
    let support = state.support();
    let mut out = if support.len() < n {
        direct_sum(state, &support)
    } else {
        let mut buf = state.amplitudes().to_vec();
        fft_in_place(&mut buf);
        buf
    };
    out.iter_mut().for_each(|a| *a *= scale);
    PureState::from_amplitudes(n, out).expect("the transform is unitary")
}

/// Phase `exp(2 pi i k / dim)` for `k < dim`.
#[inline]
fn phase(k: usize, dim: usize) -> Complex64 {
    let (s, c) = (2.0 * PI * k as f64 / dim as f64).sin_cos();
    Complex64::new(c, s)
}

fn direct_sum(state: &PureState, support: &[usize]) -> Vec<Complex64> {
    let dim = state.dim();
    (0..dim)
        .map(|y| {
            support
                .iter()
                .map(|&x| state.amplitude(x) * phase((x * y) & (dim - 1), dim))
                .sum()
        })
        .collect()
}

/// Unnormalized transform with the positive exponent.
fn fft_in_place(buf: &mut [Complex64]) {
    let dim = buf.len();
    debug_assert!(dim.is_power_of_two());
    let bits = dim.trailing_zeros();
    if bits == 0 {
        return;
    }
    for i in 0..dim {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if i < j {
            buf.swap(i, j);
        }
    }
    let twiddles: Vec<Complex64> = (0..dim / 2).map(|k| phase(k, dim)).collect();
    let mut len = 2;
    while len <= dim {
        let half = len / 2;
        let stride = dim / len;
        for chunk in buf.chunks_exact_mut(len) {
            let (lo, hi) = chunk.split_at_mut(half);
            for k in 0..half {
                let t = hi[k] * twiddles[k * stride];
                hi[k] = lo[k] - t;
                lo[k] += t;
            }
        }
        len <<= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{encode_sequence, Sequence};
    use std::f64::consts::SQRT_2;

    /// O(N^2) transform straight from the definition.
    fn dft_oracle(state: &PureState) -> Vec<Complex64> {
        let dim = state.dim();
        (0..dim)
            .map(|y| {
                (0..dim)
                    .map(|x| {
                        let angle = 2.0 * PI * (x as f64) * (y as f64) / dim as f64;
                        state.amplitude(x) * Complex64::new(angle.cos(), angle.sin())
                    })
                    .sum::<Complex64>()
                    / (dim as f64).sqrt()
            })
            .collect()
    }

    fn assert_close(a: &[Complex64], b: &[Complex64], tol: f64) {
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).norm() < tol, "{x} vs {y}");
        }
    }

    #[test]
    fn delta_maps_to_uniform() {
        let out = qft(&PureState::basis(2, 0).unwrap());
        assert_close(out.amplitudes(), &[Complex64::new(0.5, 0.0); 4], 1e-15);
    }

    #[test]
    fn bell_sequence_transform() {
        let bell = encode_sequence(&Sequence::new(2, vec![0, 3]).unwrap());
        let expected = [
            Complex64::new(1.0 / SQRT_2, 0.0),
            Complex64::new(1.0, -1.0) / (2.0 * SQRT_2),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 1.0) / (2.0 * SQRT_2),
        ];
        assert_close(&dft_oracle(&bell), &expected, 1e-15);
        assert_close(qft(&bell).amplitudes(), &expected, 1e-15);
    }

    #[test]
    fn sparse_and_fft_paths_match_oracle() {
        // 2 nonzeros < log2(256) takes the direct sum; 40 takes the FFT.
        let sparse = encode_sequence(&Sequence::new(8, vec![17, 200]).unwrap());
        let dense = encode_sequence(&Sequence::new(8, (0..200).step_by(5).collect()).unwrap());
        for s in [sparse, dense] {
            assert_close(qft(&s).amplitudes(), &dft_oracle(&s), 1e-12);
        }
    }

    #[test]
    fn four_applications_are_identity() {
        let s = encode_sequence(&Sequence::new(6, vec![1, 4, 9, 16, 25, 36, 49]).unwrap());
        let back = qft(&qft(&qft(&qft(&s))));
        assert!(back.max_abs_diff(&s) < 1e-9);
    }

    #[test]
    fn full_superposition_maps_to_zero_state() {
        let s = encode_sequence(&Sequence::full(6).unwrap());
        assert!(qft(&s).max_abs_diff(&PureState::basis(6, 0).unwrap()) < 1e-12);
    }
}
