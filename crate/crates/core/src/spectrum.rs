use std::collections::BTreeMap;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multiset of conjugacy class sizes, stored as `size -> multiplicity`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<(u64, u64)>", into = "Vec<(u64, u64)>")]
pub struct Spectrum {
    counts: BTreeMap<u64, u64>,
}

impl Spectrum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Spectrum of an abelian group of the given order.
    pub fn abelian(order: u64) -> Self {
        let mut s = Self::new();
        s.add(1, order);
        s
    }

    pub fn from_sizes<I: IntoIterator<Item = u64>>(sizes: I) -> Self {
        let mut s = Self::new();
        for size in sizes {
            s.add(size, 1);
        }
        s
    }

    pub fn add(&mut self, size: u64, multiplicity: u64) {
        if multiplicity > 0 {
            *self.counts.entry(size).or_default() += multiplicity;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Ascending `(size, multiplicity)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&s, &m)| (s, m))
    }

    pub fn sizes(&self) -> BTreeSet<u64> {
        self.counts.keys().copied().collect()
    }

    pub fn multiplicity(&self, size: u64) -> u64 {
        self.counts.get(&size).copied().unwrap_or(0)
    }

    /// Number of conjugacy classes.
    pub fn class_count(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Σ size · multiplicity, i.e. the group order for a real spectrum.
    pub fn total(&self) -> Result<u64> {
        self.counts.iter().try_fold(0u64, |acc, (&s, &m)| {
            s.checked_mul(m).and_then(|v| acc.checked_add(v)).ok_or(Error::Overflow("spectrum total"))
        })
    }

    /// Flat ascending list with repetitions; only sensible for small spectra.
    pub fn to_sorted_vec(&self) -> Vec<u64> {
        self.counts.iter().flat_map(|(&s, &m)| std::iter::repeat_n(s, m as usize)).collect()
    }

    /// Spectrum of a direct product: pairwise products with multiplied
    /// multiplicities.
    pub fn product(&self, other: &Spectrum) -> Result<Spectrum> {
        let mut out = Spectrum::new();
        for (&s1, &m1) in &self.counts {
            for (&s2, &m2) in &other.counts {
                let size = s1.checked_mul(s2).ok_or(Error::Overflow("product spectrum"))?;
                let mult = m1.checked_mul(m2).ok_or(Error::Overflow("product spectrum"))?;
                out.add(size, mult);
            }
        }
        Ok(out)
    }

    /// Union as multisets.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut out = self.clone();
        for (s, m) in other.iter() {
            out.add(s, m);
        }
        out
    }
}

impl From<Vec<(u64, u64)>> for Spectrum {
    fn from(pairs: Vec<(u64, u64)>) -> Self {
        let mut s = Spectrum::new();
        for (size, mult) in pairs {
            s.add(size, mult);
        }
        s
    }
}

impl From<Spectrum> for Vec<(u64, u64)> {
    fn from(s: Spectrum) -> Self {
        s.counts.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_s3_and_z2() {
        let s3 = Spectrum::from_sizes([1, 2, 3]);
        let z2 = Spectrum::abelian(2);
        let p = s3.product(&z2).unwrap();
        assert_eq!(p.to_sorted_vec(), vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(p.total().unwrap(), 12);
    }

    #[test]
    fn serializes_as_pairs() {
        let s = Spectrum::from_sizes([1, 3, 3, 7, 7]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[[1,1],[3,2],[7,2]]");
    }
}
