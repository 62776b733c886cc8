use std::f64::consts::LOG2_E;

use crate::{Error, Result};

/// `c = log2(e) / 2`, the gap between `n/2` and the mean entropy of a
/// Haar-random state at a balanced cut.
pub const PAGE_OFFSET: f64 = LOG2_E / 2.0;

fn check_even(n: u32) -> Result<()> {
    if n == 0 || n % 2 != 0 || n > 62 {
        return Err(Error::InvalidArgument(format!("expected an even qubit count in 2..=62, got {n}")));
    }
    Ok(())
}

/// Closed-form average entropy
/// `T = [(N-M)(3n/2 - log2(N-M) - c) + M(n - log2 M)] / N`.
///
/// Defined for `0 <= M <= N`; a vanishing factor drops its term.
pub fn t_approx(n: u32, m: u64) -> Result<f64> {
    check_even(n)?;
    let dim = 1u64 << n;
    if m > dim {
        return Err(Error::InvalidArgument(format!("M = {m} exceeds N = {dim}")));
    }
    let nf = n as f64;
    let rest = (dim - m) as f64;
    let mf = m as f64;
    let dense = if m == dim { 0.0 } else { rest * (1.5 * nf - rest.log2() - PAGE_OFFSET) };
    let sparse = if m == 0 { 0.0 } else { mf * (nf - mf.log2()) };
    Ok((dense + sparse) / dim as f64)
}

/// Mean entropy, in nats, of a random reduced state of dimension `alpha`
/// (complement `beta`) conditioned on its dominant eigenvalue `lambda0`:
/// `(1 - l)(ln alpha - ln(1 - l) - alpha / (2 beta)) - l ln l`.
pub fn conditioned_entropy(lambda0: f64, alpha: f64, beta: f64) -> Result<f64> {
    if !(lambda0 > 0.0 && lambda0 <= 1.0) {
        return Err(Error::InvalidArgument(format!("dominant eigenvalue {lambda0} outside (0, 1]")));
    }
    if !(alpha > 0.0 && beta > 0.0 && alpha <= beta) {
        return Err(Error::InvalidArgument(format!("need 0 < alpha <= beta, got {alpha}, {beta}")));
    }
    if lambda0 == 1.0 {
        return Ok(0.0);
    }
    let rest = 1.0 - lambda0;
    Ok(rest * (alpha.ln() - rest.ln() - alpha / (2.0 * beta)) - lambda0 * lambda0.ln())
}

/// `n/2 - c`, the mean balanced-cut entropy of Haar-random states.
pub fn page_value(n: u32) -> Result<f64> {
    check_even(n)?;
    Ok(n as f64 / 2.0 - PAGE_OFFSET)
}

/// Binomial probabilities `q_W = C(M, W) p^W (1-p)^(M-W)` for `W = 0..=M`,
/// evaluated in log space.
pub fn binomial_weights(m: u64, p: f64) -> Vec<f64> {
    assert!((0.0..=1.0).contains(&p), "probability {p} outside [0, 1]");
    if p == 0.0 || p == 1.0 {
        let mut out = vec![0.0; m as usize + 1];
        out[if p == 0.0 { 0 } else { m as usize }] = 1.0;
        return out;
    }
    let mut ln_q = LogBinomial::new(m, p);
    (0..=m)
        .map(|w| {
            let q = ln_q.current.exp();
            ln_q.advance(w);
            q
        })
        .collect()
}

/// Running `ln q_W` for `0 < p < 1`, stepped with
/// `q_{W+1} / q_W = (M - W) p / ((W + 1)(1 - p))`.
struct LogBinomial {
    m: u64,
    ln_odds: f64,
    current: f64,
}

impl LogBinomial {
    fn new(m: u64, p: f64) -> Self {
        Self { m, ln_odds: p.ln() - (-p).ln_1p(), current: m as f64 * (-p).ln_1p() }
    }

    fn advance(&mut self, w: u64) {
        if w < self.m {
            self.current += ((self.m - w) as f64).ln() - ((w + 1) as f64).ln() + self.ln_odds;
        }
    }
}

/// Sparse-regime approximation from a balls-in-boxes model of the diagonal
/// of the reduced state: `-sqrt(N) sum_W q_W (W/M) log2(W/M)` with
/// `p = 1/sqrt(N)`. Terms past the mode smaller than `1e-15` end the sum.
pub fn d_approx(n: u32, m: u64) -> Result<f64> {
    check_even(n)?;
    if m == 0 {
        return Err(Error::InvalidArgument("M must be at least 1".into()));
    }
    let boxes = (1u64 << (n / 2)) as f64;
    let p = 1.0 / boxes;
    let mode = ((m + 1) as f64 * p).floor() as u64;
    let mf = m as f64;
    let mut ln_q = LogBinomial::new(m, p);
    ln_q.advance(0);
    let mut sum = 0.0;
    // W = M contributes log2(1) = 0
    for w in 1..m {
        let frac = w as f64 / mf;
        let term = ln_q.current.exp() * frac * frac.log2();
        sum += term;
        if w > mode && term.abs() < 1e-15 {
            break;
        }
        ln_q.advance(w);
    }
    Ok(-boxes * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn to_bits(nats: f64) -> f64 {
        nats / LN_2
    }

    #[test]
    fn t_approx_reference_values() {
        // 40-digit evaluations of the closed form
        assert!((t_approx(14, 0).unwrap() - 6.278_652_479_555_518).abs() < 1e-12);
        assert!((t_approx(14, 716).unwrap() - 6.263_279_872_988_425).abs() < 1e-12);
        assert!((t_approx(10, 107).unwrap() - 4.314_642_578_389_475).abs() < 1e-12);
        assert_eq!(t_approx(14, 1 << 14).unwrap(), 0.0);
        assert!(t_approx(13, 1).is_err());
        assert!(t_approx(4, 17).is_err());
    }

    #[test]
    fn t_approx_zero_limit_and_interior_maximum() {
        // T(n, 0) is the Haar value. The grid maximum sits at the stationary
        // point M = N r / (1 + r), r = 2^c / sqrt(N), and exceeds the M = 0
        // value by at most 2^c / (sqrt(N) ln 2), which vanishes as n grows.
        for n in [2u32, 4, 8, 10, 14] {
            let top = t_approx(n, 0).unwrap();
            assert!((top - page_value(n).unwrap()).abs() < 1e-12);
            let root = (1u64 << (n / 2)) as f64;
            let (arg, max) = (0..=(1u64 << n))
                .map(|m| (m, t_approx(n, m).unwrap()))
                .fold((0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best });
            let r = PAGE_OFFSET.exp2() / root;
            let predicted = (1u64 << n) as f64 * r / (1.0 + r);
            assert!((arg as f64 - predicted).abs() <= 2.0, "n={n}: argmax {arg}, predicted {predicted}");
            assert!(max - top <= PAGE_OFFSET.exp2() / (root * LN_2), "n={n}");
        }
    }

    #[test]
    fn conditioned_entropy_limits() {
        assert_eq!(conditioned_entropy(1.0, 8.0, 8.0).unwrap(), 0.0);
        let alpha = 32.0;
        let near_zero = conditioned_entropy(1e-8, alpha, alpha).unwrap();
        assert!((near_zero - (alpha.ln() - 0.5)).abs() < 1e-6);
        assert!((to_bits(near_zero) - page_value(10).unwrap()).abs() < 1e-6);
        assert!(conditioned_entropy(0.0, 2.0, 2.0).is_err());
        assert!(conditioned_entropy(1.5, 2.0, 2.0).is_err());
        assert!(conditioned_entropy(0.5, 4.0, 2.0).is_err());
    }

    #[test]
    fn conditioned_entropy_reproduces_t_approx() {
        for n in (2u32..=16).step_by(2) {
            let dim = 1u64 << n;
            let alpha = (1u64 << (n / 2)) as f64;
            let step = (dim / 512).max(1);
            for m in (1..dim).step_by(step as usize).chain([dim - 1]) {
                let lhs = t_approx(n, m).unwrap() * LN_2;
                let rhs = conditioned_entropy(m as f64 / dim as f64, alpha, alpha).unwrap();
                assert!((lhs - rhs).abs() < 1e-10, "n={n} m={m}: {lhs} vs {rhs}");
            }
        }
    }

    #[test]
    fn page_values() {
        assert!((page_value(10).unwrap() - 4.278_652_479_555_518).abs() < 1e-12);
        assert!((page_value(2).unwrap() - 0.278_652_479_555_518_3).abs() < 1e-12);
        assert!(page_value(3).is_err());
    }

    #[test]
    fn d_approx_reference_values() {
        assert_eq!(d_approx(8, 1).unwrap(), 0.0);
        assert_eq!(d_approx(14, 1).unwrap(), 0.0);
        assert!((d_approx(2, 2).unwrap() - 0.5).abs() < 1e-15);
        // exact binomial sums at 40 digits
        assert!((d_approx(14, 16).unwrap() - 3.885_420_012_344_417).abs() < 1e-12);
        assert!((d_approx(14, 64).unwrap() - 5.552_993_482_953_073).abs() < 1e-12);
        assert!((d_approx(14, 2048).unwrap() - 6.954_765_009_301_161).abs() < 1e-12);
        assert!((d_approx(10, 107).unwrap() - 4.773_412_862_903_932).abs() < 1e-12);
        assert!(d_approx(14, 0).is_err());
    }

    #[test]
    fn d_approx_converges_to_half_register() {
        let d = d_approx(14, 1 << 14).unwrap();
        assert!((d - 7.0).abs() < 0.05, "{d}");
        // a million balls stays finite and below n/2
        let big = d_approx(20, 1_000_000).unwrap();
        assert!(big.is_finite() && big < 10.0 && big > 9.0, "{big}");
    }

    #[test]
    fn d_approx_monotone_and_bounded() {
        for n in [2u32, 6, 10] {
            let mut prev = 0.0;
            for m in 1..=(1u64 << n) {
                let d = d_approx(n, m).unwrap();
                assert!(d >= prev - 1e-12, "n={n} m={m}");
                assert!(d <= n as f64 / 2.0 + 1e-12);
                prev = d;
            }
        }
    }

    #[test]
    fn binomial_weights_sum_to_one() {
        for (m, p) in [(1u64, 0.5), (10, 0.3), (716, 1.0 / 128.0), (16384, 1.0 / 128.0), (100_000, 1.0 / 1024.0)] {
            let s: f64 = binomial_weights(m, p).iter().sum();
            assert!((s - 1.0).abs() < 1e-12, "m={m}: {s}");
        }
        assert_eq!(binomial_weights(3, 1.0), vec![0.0, 0.0, 0.0, 1.0]);
    }
}
