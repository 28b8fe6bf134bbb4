use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, …, degree-1}` stored as its image list.
///
/// Ordering is lexicographic on the image list, which fixes the element
/// order used everywhere downstream.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection on 0..{n}")));
            }
            seen[i] = true;
        }
        Ok(Self { images: images.into_boxed_slice() })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images: images.into_boxed_slice() }
    }

    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let q = cycle[(i + 1) % cycle.len()];
                if p as usize >= degree || q as usize >= degree {
                    return Err(Error::InvalidPermutation(format!("point out of range in {cycle:?}")));
                }
                images[p as usize] = q;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// Product `self · rhs`, acting left to right: first `self`, then `rhs`.
    pub fn mul(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation { images: self.images.iter().map(|&p| rhs.images[p as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Permutation { images: inv.into_boxed_slice() }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // (g⁻¹ x g)(g(i)) = g(x(i))
        let mut out = vec![0u32; self.images.len()];
        for (i, &xi) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[xi as usize];
        }
        Permutation { images: out.into_boxed_slice() }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images.iter().zip(other.images.iter()).all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = order / crate::arith::gcd(order, len) * len;
        }
        order
    }

    /// Points moved by this permutation.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.images.iter().enumerate().filter(|(i, &p)| *i as u32 != p).map(|(i, _)| i as u32)
    }

    /// Extends to `degree + extra` points, fixing the new ones, optionally
    /// shifting the existing points up by `offset`.
    pub fn embed(&self, offset: usize, total_degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total_degree as u32).collect();
        for (i, &p) in self.images.iter().enumerate() {
            images[i + offset] = p + offset as u32;
        }
        Permutation { images: images.into_boxed_slice() }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
    }

    #[test]
    fn product_is_left_to_right() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(a.mul(&b).order(), 3);
    }

    #[test]
    fn conjugation_matches_products() {
        let x = Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        let g = Permutation::from_cycles(5, &[&[2, 3, 4], &[0, 1]]).unwrap();
        assert_eq!(x.conjugate_by(&g), g.inverse().mul(&x).mul(&g));
    }

    #[test]
    fn display_cycles() {
        let x = Permutation::from_cycles(6, &[&[0, 1, 2], &[4, 5]]).unwrap();
        assert_eq!(x.to_string(), "(0 1 2)(4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(x.order(), 6);
    }
}
