use crate::{Error, Result, MAX_QUBITS};

/// Smallest prime factor of every `x < limit`; entries for 0 and 1 are 0.
pub fn smallest_prime_factors(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit];
    for p in 2..limit {
        if spf[p] != 0 {
            continue;
        }
        spf[p] = p as u32;
        let mut multiple = p * p;
        while multiple < limit {
            if spf[multiple] == 0 {
                spf[multiple] = p as u32;
            }
            multiple += p;
        }
    }
    spf
}

/// Number of prime factors of every `x < limit`, counted with multiplicity.
/// 0 and 1 get the sentinel 0 and belong to no k-class.
pub fn sieve_omega(limit: usize) -> Result<Vec<u8>> {
    if limit > 1 << MAX_QUBITS {
        return Err(Error::InvalidArgument(format!("sieve limit {limit} exceeds 2^{MAX_QUBITS}")));
    }
    let spf = smallest_prime_factors(limit);
    let mut omega = vec![0u8; limit];
    for x in 2..limit {
        // x / spf(x) < x, so its count is already known
        omega[x] = omega[x / spf[x] as usize] + 1;
    }
    Ok(omega)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega_by_trial_division(mut x: usize) -> u8 {
        let mut count = 0;
        let mut d = 2;
        while d * d <= x {
            while x % d == 0 {
                x /= d;
                count += 1;
            }
            d += 1;
        }
        if x > 1 {
            count += 1;
        }
        count
    }

    #[test]
    fn small_values() {
        let omega = sieve_omega(32).unwrap();
        assert_eq!(omega[12], 3);
        assert_eq!(omega[31], 1);
        assert_eq!(omega[0], 0);
        assert_eq!(omega[1], 0);
        assert_eq!(omega.iter().filter(|&&w| w == 1).count(), 11);
    }

    #[test]
    fn agrees_with_trial_division_below_2_16() {
        let omega = sieve_omega(1 << 16).unwrap();
        for (x, &w) in omega.iter().enumerate().skip(2) {
            assert_eq!(w, omega_by_trial_division(x), "x = {x}");
        }
    }

    #[test]
    fn rejects_oversized_limit() {
        assert!(sieve_omega((1 << 24) + 1).is_err());
    }
}
