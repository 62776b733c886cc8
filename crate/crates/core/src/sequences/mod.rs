//! Sequence families: uniform random subsets, primes, unions of k-almost
//! primes, and their on-disk formats.

mod generate;
pub mod io;
mod sieve;

pub use generate::{k_almost_union, prime_state, random_sequence, KAlmostUnion};
pub use sieve::{sieve_omega, smallest_prime_factors};
