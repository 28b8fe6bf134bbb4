//! Brute-force finite group computations from permutation generators.
//!
//! Everything here works on explicitly enumerated element lists. It is slow
//! but simple, and serves as the trusted oracle for the structured
//! computations in [`crate::structured`].

pub(crate) mod group;
mod perm;
mod subgroup;

pub use group::{closure, direct_product, ClassTable, ConjugacyClass, PermGroup, DEFAULT_ENUMERATION_CAP};
pub use perm::Permutation;
pub use subgroup::{PiElements, SubgroupWitness};

/// Small named groups used by tests, examples and the bundled corpus.
pub mod named {
    use super::{PermGroup, Permutation};

    fn group(degree: usize, cycles: &[&[&[u32]]]) -> PermGroup {
        let gens = cycles.iter().map(|c| Permutation::from_cycles(degree, c).expect("valid cycles")).collect();
        PermGroup::new(degree, gens).expect("valid generators")
    }

    pub fn trivial() -> PermGroup {
        group(1, &[&[]])
    }

    pub fn cyclic(n: u32) -> PermGroup {
        let cycle: Vec<u32> = (0..n).collect();
        group(n as usize, &[&[&cycle]])
    }

    pub fn symmetric3() -> PermGroup {
        group(3, &[&[&[0, 1, 2]], &[&[0, 1]]])
    }

    pub fn symmetric4() -> PermGroup {
        group(4, &[&[&[0, 1, 2, 3]], &[&[0, 1]]])
    }

    pub fn alternating4() -> PermGroup {
        group(4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]])
    }

    /// Quaternion group of order 8 in its regular representation.
    pub fn quaternion8() -> PermGroup {
        // i and j acting on {±1, ±i, ±j, ±k} labelled 1,i,j,k,-1,-i,-j,-k.
        group(8, &[&[&[0, 1, 4, 5], &[2, 7, 6, 3]], &[&[0, 2, 4, 6], &[1, 3, 5, 7]]])
    }

    /// The Frobenius group of order 21: x ↦ x+1 and x ↦ 2x on Z7.
    pub fn frobenius21() -> PermGroup {
        group(7, &[&[&[0, 1, 2, 3, 4, 5, 6]], &[&[1, 2, 4], &[3, 6, 5]]])
    }
}
