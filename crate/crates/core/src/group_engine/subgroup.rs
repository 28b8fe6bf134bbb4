use super::perm::Permutation;

/// A subgroup stored as its explicit, lexicographically sorted element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupWitness {
    elements: Vec<Permutation>,
    pub is_normal: bool,
}

impl SubgroupWitness {
    pub(crate) fn from_sorted(elements: Vec<Permutation>, is_normal: bool) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { elements, is_normal }
    }

    /// Wraps an arbitrary element list (sorted and deduplicated here).
    /// Closure is not checked; see [`Self::is_closed`].
    pub fn from_elements(mut elements: Vec<Permutation>, is_normal: bool) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self { elements, is_normal }
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        match super::group::greedy_generators(&self.elements) {
            Some(gens) => gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b))),
            None => false,
        }
    }

    pub fn is_closed(&self) -> bool {
        super::group::is_closed(&self.elements)
    }

    pub fn is_subset_of(&self, other: &SubgroupWitness) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    pub fn intersection(&self, other: &SubgroupWitness) -> SubgroupWitness {
        let elements = self.elements.iter().filter(|e| other.contains(e)).cloned().collect();
        SubgroupWitness::from_sorted(elements, self.is_normal && other.is_normal)
    }
}

/// Result of [`super::PermGroup::pi_elements`].
#[derive(Debug, Clone)]
pub struct PiElements {
    pub elements: Vec<Permutation>,
    /// When true the set is a subgroup, and since it is closed under
    /// conjugation, a normal one.
    pub is_subgroup: bool,
}

impl PiElements {
    pub fn into_subgroup(self) -> Option<SubgroupWitness> {
        self.is_subgroup.then(|| SubgroupWitness::from_sorted(self.elements, true))
    }
}
