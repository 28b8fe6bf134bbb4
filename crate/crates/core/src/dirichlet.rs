//! Deterministic search for primes in an arithmetic progression.

use std::collections::BTreeSet;

use crate::arith::{gcd, is_prime};
use crate::error::{Error, Result};

/// Default search ceiling for [`find_primes_in_ap`].
pub const DEFAULT_PRIME_BOUND: u64 = 1_000_000_000;

/// `count` distinct primes `≡ residue (mod modulus)`, avoiding `exclude`,
/// no larger than `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeRequest {
    pub count: usize,
    pub modulus: u64,
    pub residue: u64,
    pub exclude: BTreeSet<u64>,
    pub bound: u64,
}

impl PrimeRequest {
    pub fn new(count: usize, modulus: u64, residue: u64) -> Self {
        Self { count, modulus, residue, exclude: BTreeSet::new(), bound: DEFAULT_PRIME_BOUND }
    }

    pub fn excluding<I: IntoIterator<Item = u64>>(mut self, primes: I) -> Self {
        self.exclude.extend(primes);
        self
    }

    pub fn with_bound(mut self, bound: u64) -> Self {
        self.bound = bound;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidRequest("count must be positive".into()));
        }
        if self.modulus == 0 {
            return Err(Error::InvalidRequest("modulus must be positive".into()));
        }
        if gcd(self.residue % self.modulus, self.modulus) != 1 {
            return Err(Error::InvalidRequest(format!("gcd({}, {}) != 1", self.residue, self.modulus)));
        }
        if self.bound <= self.modulus {
            return Err(Error::InvalidRequest(format!(
                "bound {} must exceed the modulus {}",
                self.bound, self.modulus
            )));
        }
        Ok(())
    }
}

/// The smallest `count` qualifying primes, ascending. Primality is decided
/// by deterministic Miller-Rabin, exact on all 64-bit integers.
pub fn find_primes_in_ap(req: &PrimeRequest) -> Result<Vec<u64>> {
    req.validate()?;
    let mut out = Vec::with_capacity(req.count);
    let mut candidate = req.residue % req.modulus;
    while candidate <= req.bound {
        if is_prime(candidate) && !req.exclude.contains(&candidate) {
            out.push(candidate);
            if out.len() == req.count {
                return Ok(out);
            }
        }
        candidate = match candidate.checked_add(req.modulus) {
            Some(c) => c,
            None => break,
        };
    }
    Err(Error::BoundExhausted {
        count: req.count,
        modulus: req.modulus,
        residue: req.residue % req.modulus,
        bound: req.bound,
    })
}
