use std::collections::{BTreeSet, HashMap, HashSet};

use once_cell::sync::OnceCell;

use super::perm::Permutation;
use super::subgroup::{PiElements, SubgroupWitness};
use crate::arith;
use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

/// Default bound on the number of elements an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Breadth-first closure of `generators` under right multiplication.
/// Returns the elements sorted lexicographically.
pub fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = vec![id.clone()];
    seen.insert(id);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for s in generators {
            let y = x.mul(s);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    Ok(queue)
}

#[derive(Debug)]
struct ElementTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

/// Conjugacy classes as a labelling of the element table.
#[derive(Debug, Clone)]
pub struct ClassTable {
    /// Class id of each element, indexed like [`PermGroup::elements`].
    pub class_of: Vec<u32>,
    /// Index of the (lexicographically least) representative of each class.
    pub representatives: Vec<u32>,
    pub sizes: Vec<u64>,
}

impl ClassTable {
    pub fn class_size_of(&self, element: usize) -> u64 {
        self.sizes[self.class_of[element] as usize]
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: u64,
    pub members: Option<Vec<Permutation>>,
}

/// A finite group given by permutation generators.
///
/// The element list is computed once (on first query) and then shared
/// read-only, so a `PermGroup` can be queried from several threads.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
    table: OnceCell<ElementTable>,
    classes: OnceCell<ClassTable>,
    orders: OnceCell<Vec<u64>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        Self {
            degree: self.degree,
            generators: self.generators.clone(),
            cap: self.cap,
            table: OnceCell::new(),
            classes: OnceCell::new(),
            orders: OnceCell::new(),
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidPermutation("generator list is empty".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        Ok(Self {
            degree,
            generators,
            cap: DEFAULT_ENUMERATION_CAP,
            table: OnceCell::new(),
            classes: OnceCell::new(),
            orders: OnceCell::new(),
        })
    }

    /// Sets the cap used by lazy enumeration.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Enumerates all elements (sorted), failing with `CapExceeded` if the
    /// closure grows past `cap`. The result is cached.
    pub fn enumerate(&self, cap: usize) -> Result<&[Permutation]> {
        let table = self.table.get_or_try_init(|| {
            let elements = closure(self.degree, &self.generators, cap)?;
            let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
            Ok::<_, Error>(ElementTable { elements, index })
        })?;
        Ok(&table.elements)
    }

    /// All elements, enumerating with the group's own cap if needed.
    pub fn elements(&self) -> Result<&[Permutation]> {
        self.enumerate(self.cap)
    }

    fn table(&self) -> Result<&ElementTable> {
        self.elements()?;
        Ok(self.table.get().expect("enumerated"))
    }

    pub fn order(&self) -> Result<u64> {
        Ok(self.elements()?.len() as u64)
    }

    pub fn index_of(&self, g: &Permutation) -> Result<Option<usize>> {
        Ok(self.table()?.index.get(g).map(|&i| i as usize))
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        Ok(self.index_of(g)?.is_some())
    }

    /// Orders of all elements, indexed like [`Self::elements`].
    pub fn element_orders(&self) -> Result<&[u64]> {
        let elements = self.elements()?;
        Ok(self.orders.get_or_init(|| elements.iter().map(Permutation::order).collect()))
    }

    /// `{h : hg = gh}`.
    pub fn centralizer(&self, g: &Permutation) -> Result<SubgroupWitness> {
        if !self.contains(g)? {
            return Err(Error::ElementNotInGroup);
        }
        let elements = self.elements()?.iter().filter(|h| h.commutes_with(g)).cloned().collect();
        Ok(SubgroupWitness::from_sorted(elements, false))
    }

    /// Conjugacy classes by orbit closure under conjugation by the generators.
    pub fn class_table(&self) -> Result<&ClassTable> {
        let table = self.table()?;
        Ok(self.classes.get_or_init(|| {
            let n = table.elements.len();
            let mut class_of = vec![u32::MAX; n];
            let mut representatives = Vec::new();
            let mut sizes = Vec::new();
            let mut stack = Vec::new();
            for start in 0..n {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let id = representatives.len() as u32;
                representatives.push(start as u32);
                class_of[start] = id;
                stack.push(start);
                let mut size = 0u64;
                while let Some(x) = stack.pop() {
                    size += 1;
                    for g in &self.generators {
                        let y = table.elements[x].conjugate_by(g);
                        let j = table.index[&y] as usize;
                        if class_of[j] == u32::MAX {
                            class_of[j] = id;
                            stack.push(j);
                        }
                    }
                }
                sizes.push(size);
            }
            ClassTable { class_of, representatives, sizes }
        }))
    }

    pub fn conjugacy_classes(&self, with_members: bool) -> Result<Vec<ConjugacyClass>> {
        let elements = self.elements()?;
        let ct = self.class_table()?;
        let mut members: Vec<Vec<Permutation>> = vec![Vec::new(); ct.sizes.len()];
        if with_members {
            for (i, &c) in ct.class_of.iter().enumerate() {
                members[c as usize].push(elements[i].clone());
            }
        }
        Ok(ct
            .representatives
            .iter()
            .zip(&ct.sizes)
            .zip(members)
            .map(|((&r, &size), m)| ConjugacyClass {
                representative: elements[r as usize].clone(),
                size,
                members: with_members.then_some(m),
            })
            .collect())
    }

    pub fn conjugacy_class_sizes(&self) -> Result<Spectrum> {
        Ok(Spectrum::from_sizes(self.class_table()?.sizes.iter().copied()))
    }

    /// Class size of a given element.
    pub fn class_size(&self, g: &Permutation) -> Result<u64> {
        let i = self.index_of(g)?.ok_or(Error::ElementNotInGroup)?;
        Ok(self.class_table()?.class_size_of(i))
    }

    /// Z(G): elements commuting with every generator.
    pub fn center(&self) -> Result<SubgroupWitness> {
        let elements =
            self.elements()?.iter().filter(|h| self.generators.iter().all(|g| h.commutes_with(g))).cloned().collect();
        Ok(SubgroupWitness::from_sorted(elements, true))
    }

    /// Normal closure of `seeds`: the smallest normal subgroup containing them.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<SubgroupWitness> {
        let mut gens: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        loop {
            let elements = closure(self.degree, &gens, self.cap)?;
            let set: HashSet<&Permutation> = elements.iter().collect();
            let fresh: BTreeSet<Permutation> = gens
                .iter()
                .flat_map(|s| self.generators.iter().map(move |g| s.conjugate_by(g)))
                .filter(|c| !set.contains(c))
                .collect();
            if fresh.is_empty() {
                return Ok(SubgroupWitness::from_sorted(elements, true));
            }
            gens.extend(fresh);
        }
    }

    /// G′ as the normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Result<SubgroupWitness> {
        let mut commutators = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.inverse().mul(&b.inverse()).mul(a).mul(b);
                if !c.is_identity() {
                    commutators.push(c);
                }
            }
        }
        self.normal_closure(&commutators)
    }

    /// Whether the Sylow `p`-subgroup is central, decided arithmetically as
    /// `ν_p(|Z(G)|) = ν_p(|G|)`.
    pub fn sylow_is_central(&self, p: u64) -> Result<bool> {
        let order = self.order()?;
        let center = self.center()?.order();
        Ok(arith::valuation(center, p) == arith::valuation(order, p))
    }

    /// Elements whose order is a π-number, plus whether they form a subgroup.
    pub fn pi_elements(&self, pi: &BTreeSet<u64>) -> Result<PiElements> {
        let elements = self.elements()?;
        let orders = self.element_orders()?;
        let chosen: Vec<Permutation> = elements
            .iter()
            .zip(orders)
            .filter(|(_, &o)| arith::prime_divisors(o).is_subset(pi))
            .map(|(e, _)| e.clone())
            .collect();
        let is_subgroup = is_closed(&chosen);
        Ok(PiElements { elements: chosen, is_subgroup })
    }

    /// Whether `n` is invariant under conjugation by the generators.
    pub fn is_normal(&self, n: &SubgroupWitness) -> bool {
        n.elements().iter().all(|x| self.generators.iter().all(|g| n.contains(&x.conjugate_by(g))))
    }

    /// Checks that `g` is a Frobenius group with kernel `n` and complement
    /// `c`: `n` normal, `n ∩ c = 1`, `|n|·|c| = |G|`, and no nontrivial
    /// element of `c` fixes a nontrivial element of `n` under conjugation.
    pub fn frobenius_pair_check(&self, n: &SubgroupWitness, c: &SubgroupWitness) -> Result<bool> {
        if !n.is_closed() || !c.is_closed() {
            return Err(Error::NotSubgroup);
        }
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let order = self.order()?;
        if n.order().checked_mul(c.order()) != Some(order) {
            return Ok(false);
        }
        if c.elements().iter().any(|x| !x.is_identity() && n.contains(x)) {
            return Ok(false);
        }
        for x in c.elements().iter().filter(|x| !x.is_identity()) {
            if n.elements().iter().any(|k| !k.is_identity() && k.commutes_with(x)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Restricts a subgroup to the points it moves and returns it as a
    /// standalone group on a small generating set.
    pub fn subgroup_as_group(&self, h: &SubgroupWitness) -> Result<PermGroup> {
        let support: BTreeSet<u32> = h.elements().iter().flat_map(|e| e.support()).collect();
        let relabel: HashMap<u32, u32> = support.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
        let degree = support.len().max(1);
        let restrict = |g: &Permutation| {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for &p in &support {
                images[relabel[&p] as usize] = relabel[&g.apply(p)];
            }
            Permutation::from_images_unchecked(images)
        };
        let gens = greedy_generators(h.elements()).ok_or(Error::NotSubgroup)?;
        let mut restricted: Vec<Permutation> = gens.iter().map(restrict).collect();
        if restricted.is_empty() {
            restricted.push(Permutation::identity(degree));
        }
        Ok(PermGroup::new(degree, restricted)?.with_cap(self.cap))
    }
}

/// Picks generators greedily (each one outside the span of the previous
/// ones) and returns them if the element set is a subgroup, `None` otherwise.
/// The span at least doubles with each pick, so only O(log n) closures run.
pub(crate) fn greedy_generators(elements: &[Permutation]) -> Option<Vec<Permutation>> {
    let first = elements.first()?;
    let degree = first.degree();
    let members: HashSet<&Permutation> = elements.iter().collect();
    if !members.contains(&Permutation::identity(degree)) {
        return None;
    }
    let mut gens = Vec::new();
    let mut span: HashSet<Permutation> = [Permutation::identity(degree)].into();
    for e in elements {
        if span.contains(e) {
            continue;
        }
        gens.push(e.clone());
        let generated = closure(degree, &gens, elements.len()).ok()?;
        if generated.iter().any(|g| !members.contains(g)) {
            return None;
        }
        span = generated.into_iter().collect();
    }
    Some(gens)
}

/// Whether a finite element set is closed under multiplication (and so,
/// being finite, a subgroup).
pub(crate) fn is_closed(elements: &[Permutation]) -> bool {
    greedy_generators(elements).is_some()
}

/// `g1 × g2` acting on the disjoint union of the two point sets.
pub fn direct_product(g1: &PermGroup, g2: &PermGroup) -> PermGroup {
    let degree = g1.degree + g2.degree;
    let mut gens: Vec<Permutation> = g1.generators.iter().map(|g| g.embed(0, degree)).collect();
    gens.extend(g2.generators.iter().map(|g| g.embed(g1.degree, degree)));
    PermGroup::new(degree, gens).expect("factor generators are valid").with_cap(g1.cap.max(g2.cap))
}
