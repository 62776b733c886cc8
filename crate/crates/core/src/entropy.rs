//! Entropy functionals of a reduced spectrum, in bits.

use crate::{reduced_spectrum, Bipartition, Error, PureState, Result, Spectrum};

/// `-sum_j l_j log2 l_j`, with zero eigenvalues contributing nothing.
pub fn von_neumann(spectrum: &Spectrum) -> f64 {
    let h: f64 = spectrum
        .values()
        .iter()
        .map(|&l| if l == 0.0 { 0.0 } else { -l * l.log2() })
        .sum();
    // the sum of nonnegative terms can only dip below zero through roundoff
    h.max(0.0)
}

/// Renyi entropy of order `d`: `log2(sum_j l_j^d) / (1 - d)`.
///
/// Order 1 is the von Neumann entropy. Order 0 counts the support only, so a
/// zero eigenvalue never contributes `0^0`.
pub fn renyi(spectrum: &Spectrum, d: f64) -> Result<f64> {
    if !(d >= 0.0) || d.is_infinite() {
        return Err(Error::InvalidArgument(format!("Renyi order must be finite and nonnegative, got {d}")));
    }
    if d == 1.0 {
        return Ok(von_neumann(spectrum));
    }
    let power_sum: f64 = spectrum.support().map(|l| l.powf(d)).sum();
    Ok((power_sum.log2() / (1.0 - d)).max(0.0))
}

/// Von Neumann entropy of `state` across `part`.
pub fn entanglement_entropy(state: &PureState, part: &Bipartition) -> Result<f64> {
    reduced_spectrum(state, part).map(|s| von_neumann(&s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(v: &[f64]) -> Spectrum {
        Spectrum::from_eigenvalues(v.to_vec()).unwrap()
    }

    #[test]
    fn von_neumann_small_cases() {
        assert_eq!(von_neumann(&spec(&[1.0, 0.0])), 0.0);
        assert_eq!(von_neumann(&spec(&[0.5, 0.5])), 1.0);
        assert_eq!(von_neumann(&spec(&[0.25; 4])), 2.0);
    }

    #[test]
    fn renyi_small_cases() {
        assert_eq!(renyi(&spec(&[0.5, 0.5]), 2.0).unwrap(), 1.0);
        assert_eq!(renyi(&spec(&[0.5, 0.5]), 0.0).unwrap(), 1.0);
        for d in [0.0, 0.5, 2.0, 7.0] {
            assert_eq!(renyi(&spec(&[1.0, 0.0]), d).unwrap(), 0.0);
        }
        // log2(1 / (9/16 + 1/16)) = log2(1.6)
        let r = renyi(&spec(&[0.75, 0.25]), 2.0).unwrap();
        assert!((r - 0.678_071_905_112_638).abs() < 1e-12, "{r}");
        assert_eq!(renyi(&spec(&[0.75, 0.25]), 1.0).unwrap(), von_neumann(&spec(&[0.75, 0.25])));
    }

    #[test]
    fn renyi_rejects_negative_order() {
        assert!(renyi(&spec(&[1.0]), -0.5).is_err());
        assert!(renyi(&spec(&[1.0]), f64::NAN).is_err());
    }
}
