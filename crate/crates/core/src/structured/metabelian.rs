use std::collections::{BTreeSet, HashSet};
use std::ops::Range;

use crate::arith::{self, gcd, mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::group_engine::{PermGroup, Permutation};
use crate::spectrum::Spectrum;

/// Default bound on the element count for orbit-partition spectra.
pub const DEFAULT_SPECTRUM_CAP: u64 = 10_000_000;

/// Finite abelian group `Z_{n_1} ⊕ … ⊕ Z_{n_r}`; elements are residue tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factor_orders: Vec<u64>,
}

impl AbelianGroup {
    /// Factors of order 1 are dropped.
    pub fn new(factor_orders: Vec<u64>) -> Result<Self> {
        if factor_orders.contains(&0) {
            return Err(Error::MalformedExpr("cyclic factor of order 0".into()));
        }
        Ok(Self { factor_orders: factor_orders.into_iter().filter(|&n| n > 1).collect() })
    }

    pub fn trivial() -> Self {
        Self { factor_orders: Vec::new() }
    }

    pub fn factor_orders(&self) -> &[u64] {
        &self.factor_orders
    }

    pub fn rank(&self) -> usize {
        self.factor_orders.len()
    }

    pub fn order(&self) -> Result<u64> {
        self.factor_orders
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
            .ok_or(Error::Overflow("abelian group order"))
    }

    /// All elements in mixed-radix order (first coordinate fastest).
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let total: u64 = self.factor_orders.iter().product();
        (0..total).map(move |mut idx| {
            self.factor_orders
                .iter()
                .map(|&n| {
                    let r = idx % n;
                    idx /= n;
                    r
                })
                .collect()
        })
    }
}

/// Action of the top group on the kernel by unit multipliers: top generator
/// `i` multiplies kernel factor `j` by `multipliers[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierAction {
    multipliers: Vec<Vec<u64>>,
}

impl MultiplierAction {
    pub fn multiplier(&self, top: usize, kernel: usize) -> u64 {
        self.multipliers[top][kernel]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.multipliers
    }
}

/// A direct factor recorded when groups are folded together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub kernel: Range<usize>,
    pub top: Range<usize>,
}

/// An element `(k, l)` of `K ⋊ L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MetaElement {
    pub kernel: Vec<u64>,
    pub top: Vec<u64>,
}

/// `K ⋊ L` with `K`, `L` abelian and `L` acting by unit multipliers.
///
/// Multiplication is `(k1, l1)·(k2, l2) = (k1 + φ_{l1}(k2), l1 + l2)`, which
/// is associative because each multiplier's order divides the order of the
/// top generator carrying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetabelianGroup {
    kernel: AbelianGroup,
    top: AbelianGroup,
    action: MultiplierAction,
    components: Vec<Component>,
}

impl MetabelianGroup {
    /// Validates multipliers: each must be a unit modulo its kernel factor
    /// with multiplicative order dividing the order of its top factor.
    pub fn new(kernel_orders: Vec<u64>, top_orders: Vec<u64>, multipliers: Vec<Vec<u64>>) -> Result<Self> {
        if multipliers.len() != top_orders.len() {
            return Err(Error::MalformedExpr(format!(
                "{} multiplier rows for {} top factors",
                multipliers.len(),
                top_orders.len()
            )));
        }
        if kernel_orders.contains(&0) || top_orders.contains(&0) {
            return Err(Error::MalformedExpr("cyclic factor of order 0".into()));
        }
        let keep_k: Vec<usize> = (0..kernel_orders.len()).filter(|&j| kernel_orders[j] > 1).collect();
        let keep_t: Vec<usize> = (0..top_orders.len()).filter(|&i| top_orders[i] > 1).collect();
        let mut rows = Vec::with_capacity(keep_t.len());
        for (i, row) in multipliers.iter().enumerate() {
            if row.len() != kernel_orders.len() {
                return Err(Error::MalformedExpr(format!(
                    "multiplier row {i} has {} entries for {} kernel factors",
                    row.len(),
                    kernel_orders.len()
                )));
            }
            for (j, &u) in row.iter().enumerate() {
                let n = kernel_orders[j];
                let order = arith::multiplicative_order(u, n)
                    .ok_or_else(|| Error::InvalidMultiplier(format!("{u} is not a unit modulo {n}")))?;
                if top_orders[i] % order != 0 {
                    return Err(Error::InvalidMultiplier(format!(
                        "{u} has order {order} modulo {n}, which does not divide {}",
                        top_orders[i]
                    )));
                }
            }
            if top_orders[i] > 1 {
                rows.push(keep_k.iter().map(|&j| row[j] % kernel_orders[j]).collect());
            }
        }
        let kernel = AbelianGroup::new(kernel_orders)?;
        let top = AbelianGroup::new(keep_t.iter().map(|&i| top_orders[i]).collect())?;
        let components = vec![Component { kernel: 0..kernel.rank(), top: 0..top.rank() }];
        let g = Self { kernel, top, action: MultiplierAction { multipliers: rows }, components };
        g.order()?;
        Ok(g)
    }

    pub fn abelian(orders: Vec<u64>) -> Result<Self> {
        Self::new(orders, Vec::new(), Vec::new())
    }

    /// `(Z_{p_1} ⊕ … ⊕ Z_{p_r}) ⋊ Z_n` for distinct primes `p_j` coprime to
    /// `n`. Without explicit multipliers, each `p_j` gets the smallest unit
    /// of multiplicative order exactly `n`.
    pub fn frobenius(kernel_primes: &[u64], complement: u64, multipliers: Option<&[u64]>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &p in kernel_primes {
            if !arith::is_prime(p) {
                return Err(Error::MalformedExpr(format!("kernel order {p} is not prime")));
            }
            if !seen.insert(p) {
                return Err(Error::MalformedExpr(format!("kernel prime {p} repeated")));
            }
            if gcd(p, complement) != 1 {
                return Err(Error::CoprimalityViolation(format!(
                    "complement order {complement} shares the prime {p} with the kernel"
                )));
            }
        }
        if complement == 0 {
            return Err(Error::MalformedExpr("complement order 0".into()));
        }
        let row = match multipliers {
            Some(m) if m.len() != kernel_primes.len() => {
                return Err(Error::MalformedExpr(format!(
                    "{} multipliers for {} kernel primes",
                    m.len(),
                    kernel_primes.len()
                )))
            }
            Some(m) => m.to_vec(),
            None => kernel_primes
                .iter()
                .map(|&p| {
                    smallest_unit_of_order(complement, p).ok_or_else(|| {
                        Error::InvalidMultiplier(format!(
                            "no unit of order {complement} modulo {p} ({complement} does not divide {})",
                            p - 1
                        ))
                    })
                })
                .collect::<Result<_>>()?,
        };
        Self::new(kernel_primes.to_vec(), vec![complement], vec![row])
    }

    /// Folds direct factors into one group with block-diagonal action,
    /// remembering the factors as components.
    pub fn direct(parts: &[MetabelianGroup]) -> Result<Self> {
        let mut kernel = Vec::new();
        let mut top = Vec::new();
        let mut comps = Vec::new();
        for p in parts {
            let (k0, t0) = (kernel.len(), top.len());
            for c in &p.components {
                comps.push(Component {
                    kernel: c.kernel.start + k0..c.kernel.end + k0,
                    top: c.top.start + t0..c.top.end + t0,
                });
            }
            kernel.extend_from_slice(p.kernel.factor_orders());
            top.extend_from_slice(p.top.factor_orders());
        }
        let mut rows = Vec::with_capacity(top.len());
        let mut k0 = 0;
        for p in parts {
            for r in &p.action.multipliers {
                let mut row = vec![1u64; kernel.len()];
                row[k0..k0 + r.len()].copy_from_slice(r);
                rows.push(row);
            }
            k0 += p.kernel.rank();
        }
        let g = Self {
            kernel: AbelianGroup { factor_orders: kernel },
            top: AbelianGroup { factor_orders: top },
            action: MultiplierAction { multipliers: rows },
            components: comps,
        };
        g.order()?;
        Ok(g)
    }

    pub fn kernel(&self) -> &AbelianGroup {
        &self.kernel
    }

    pub fn top(&self) -> &AbelianGroup {
        &self.top
    }

    pub fn action(&self) -> &MultiplierAction {
        &self.action
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn order(&self) -> Result<u64> {
        self.kernel.order()?.checked_mul(self.top.order()?).ok_or(Error::Overflow("group order"))
    }

    pub fn is_abelian(&self) -> bool {
        self.action.multipliers.iter().all(|r| r.iter().all(|&u| u == 1))
    }

    /// A standalone copy of component `c`.
    pub fn component(&self, c: usize) -> MetabelianGroup {
        let Component { kernel, top } = self.components[c].clone();
        let rows = self.action.multipliers[top.clone()].iter().map(|r| r[kernel.clone()].to_vec()).collect();
        MetabelianGroup {
            kernel: AbelianGroup { factor_orders: self.kernel.factor_orders[kernel.clone()].to_vec() },
            top: AbelianGroup { factor_orders: self.top.factor_orders[top.clone()].to_vec() },
            action: MultiplierAction { multipliers: rows },
            components: vec![Component { kernel: 0..kernel.len(), top: 0..top.len() }],
        }
    }

    /// Multiplier of the top element `l` on each kernel factor.
    pub fn multipliers_of(&self, l: &[u64]) -> Vec<u64> {
        self.kernel
            .factor_orders
            .iter()
            .enumerate()
            .map(|(j, &n)| {
                l.iter()
                    .enumerate()
                    .fold(1 % n, |acc, (i, &e)| mul_mod(acc, pow_mod(self.action.multipliers[i][j], e, n), n))
            })
            .collect()
    }

    /// `φ_l(k)`.
    pub fn act(&self, l: &[u64], k: &[u64]) -> Vec<u64> {
        let u = self.multipliers_of(l);
        k.iter().zip(&u).zip(&self.kernel.factor_orders).map(|((&x, &u), &n)| mul_mod(x, u, n)).collect()
    }

    pub fn identity(&self) -> MetaElement {
        MetaElement { kernel: vec![0; self.kernel.rank()], top: vec![0; self.top.rank()] }
    }

    pub fn contains(&self, x: &MetaElement) -> bool {
        x.kernel.len() == self.kernel.rank()
            && x.top.len() == self.top.rank()
            && x.kernel.iter().zip(&self.kernel.factor_orders).all(|(&a, &n)| a < n)
            && x.top.iter().zip(&self.top.factor_orders).all(|(&a, &n)| a < n)
    }

    pub fn mul(&self, x: &MetaElement, y: &MetaElement) -> MetaElement {
        let moved = self.act(&x.top, &y.kernel);
        MetaElement {
            kernel: add_mod(&x.kernel, &moved, &self.kernel.factor_orders),
            top: add_mod(&x.top, &y.top, &self.top.factor_orders),
        }
    }

    pub fn inverse(&self, x: &MetaElement) -> MetaElement {
        let neg_top: Vec<u64> = x.top.iter().zip(&self.top.factor_orders).map(|(&a, &n)| (n - a) % n).collect();
        let neg_k: Vec<u64> = x.kernel.iter().zip(&self.kernel.factor_orders).map(|(&a, &n)| (n - a) % n).collect();
        MetaElement { kernel: self.act(&neg_top, &neg_k), top: neg_top }
    }

    /// Kernel generators `e_j` followed by top generators `f_i`.
    pub fn standard_generators(&self) -> Vec<MetaElement> {
        let mut gens = Vec::new();
        for j in 0..self.kernel.rank() {
            let mut x = self.identity();
            x.kernel[j] = 1;
            gens.push(x);
        }
        for i in 0..self.top.rank() {
            let mut x = self.identity();
            x.top[i] = 1;
            gens.push(x);
        }
        gens
    }

    fn encode(&self, x: &MetaElement) -> u64 {
        let mut idx = 0u64;
        let mut radix = 1u64;
        for (&a, &n) in x.kernel.iter().zip(&self.kernel.factor_orders).chain(x.top.iter().zip(&self.top.factor_orders))
        {
            idx += a * radix;
            radix *= n;
        }
        idx
    }

    fn decode(&self, mut idx: u64) -> MetaElement {
        let mut split = |orders: &[u64]| -> Vec<u64> {
            orders
                .iter()
                .map(|&n| {
                    let r = idx % n;
                    idx /= n;
                    r
                })
                .collect()
        };
        let kernel = split(&self.kernel.factor_orders);
        let top = split(&self.top.factor_orders);
        MetaElement { kernel, top }
    }

    /// Images of `x` under conjugation by each standard generator.
    fn conjugates_by_generators(&self, x: &MetaElement) -> Vec<MetaElement> {
        let u = self.multipliers_of(&x.top);
        let orders = &self.kernel.factor_orders;
        let mut out = Vec::with_capacity(self.kernel.rank() + self.top.rank());
        // (e_j) x (e_j)^{-1} = (k + e_j - φ_l(e_j), l)
        for j in 0..orders.len() {
            let mut y = x.clone();
            y.kernel[j] = (y.kernel[j] + 1 + orders[j] - u[j]) % orders[j];
            out.push(y);
        }
        // (f_i) x (f_i)^{-1} = (φ_{f_i}(k), l)
        for row in &self.action.multipliers {
            let kernel = x.kernel.iter().zip(row).zip(orders).map(|((&a, &m), &n)| mul_mod(a, m, n)).collect();
            out.push(MetaElement { kernel, top: x.top.clone() });
        }
        out
    }

    /// True iff every nontrivial top element fixes only `0` in the kernel.
    pub fn is_frobenius_action(&self) -> bool {
        let orders = &self.kernel.factor_orders;
        self.top
            .elements()
            .skip(1)
            .all(|l| self.multipliers_of(&l).iter().zip(orders).all(|(&u, &n)| gcd((u + n - 1) % n, n) == 1))
    }

    /// Size of the conjugacy class of `x`. Kernel elements use the fast
    /// path `|L| / |Stab_L(k)|`; other elements use orbit closure.
    pub fn class_size(&self, x: &MetaElement) -> Result<u64> {
        if !self.contains(x) {
            return Err(Error::ElementNotInGroup);
        }
        if x.top.iter().all(|&a| a == 0) {
            let orbit: HashSet<Vec<u64>> = self.top.elements().map(|l| self.act(&l, &x.kernel)).collect();
            return Ok(orbit.len() as u64);
        }
        let mut seen: HashSet<MetaElement> = [x.clone()].into();
        let mut stack = vec![x.clone()];
        while let Some(y) = stack.pop() {
            for z in self.conjugates_by_generators(&y) {
                if seen.insert(z.clone()) {
                    stack.push(z);
                }
            }
        }
        Ok(seen.len() as u64)
    }

    /// Class-size spectrum by partitioning all elements into conjugation
    /// orbits. No structural shortcuts.
    pub fn orbit_spectrum(&self, cap: u64) -> Result<Spectrum> {
        let n = self.order()?;
        if n > cap {
            return Err(Error::CapExceeded { cap: cap as usize });
        }
        let mut visited = vec![false; n as usize];
        let mut spectrum = Spectrum::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if visited[start as usize] {
                continue;
            }
            visited[start as usize] = true;
            stack.push(start);
            let mut size = 0u64;
            while let Some(idx) = stack.pop() {
                size += 1;
                for z in self.conjugates_by_generators(&self.decode(idx)) {
                    let k = self.encode(&z);
                    if !visited[k as usize] {
                        visited[k as usize] = true;
                        stack.push(k);
                    }
                }
            }
            spectrum.add(size, 1);
        }
        Ok(spectrum)
    }

    /// Three-class-size law for a fixed-point-free action with trivial
    /// center: `{1}`, `(|K|-1)/|L|` classes of size `|L|`, and `|L|-1`
    /// classes of size `|K|`.
    fn frobenius_spectrum(&self) -> Result<Spectrum> {
        let k = self.kernel.order()?;
        let l = self.top.order()?;
        let mut s = Spectrum::new();
        s.add(1, 1);
        s.add(l, (k - 1) / l);
        s.add(k, l - 1);
        Ok(s)
    }

    /// Full class-size multiset. Each component uses the three-class law when
    /// its action is Frobenius, the all-ones spectrum when abelian, and
    /// orbit partition (bounded by `cap`) otherwise; components combine by
    /// the direct-product formula.
    pub fn class_size_spectrum(&self, cap: u64) -> Result<Spectrum> {
        let mut total = Spectrum::abelian(1);
        for c in 0..self.components.len() {
            let part = self.component(c);
            let s = if part.is_abelian() {
                Spectrum::abelian(part.order()?)
            } else if part.is_frobenius_action() {
                part.frobenius_spectrum()?
            } else {
                part.orbit_spectrum(cap)?
            };
            total = total.product(&s)?;
        }
        debug_assert_eq!(total.total().ok(), self.order().ok());
        if total.total()? != self.order()? {
            return Err(Error::DecompositionFailure("class sizes do not sum to the group order".into()));
        }
        Ok(total)
    }

    /// Faithful permutation representation: one block of points per cyclic
    /// factor of the kernel and of the top. `(k, l)` acts on kernel block `j`
    /// by `x ↦ u_j(l)·x + k_j` and on top block `i` by `y ↦ y + l_i`;
    /// composing these maps reproduces the multiplication law, and the
    /// element is recovered from the images of 0 on every block, so the
    /// representation is faithful. Enumeration re-checks the order.
    pub fn to_permutation(&self, cap: usize) -> Result<PermGroup> {
        let korders = &self.kernel.factor_orders;
        let torders = &self.top.factor_orders;
        let degree_sum: u64 = korders.iter().chain(torders).sum();
        let degree = (degree_sum as usize).max(1);
        let mut k_offsets = Vec::new();
        let mut off = 0u32;
        for &n in korders {
            k_offsets.push(off);
            off += n as u32;
        }
        let mut t_offsets = Vec::new();
        for &m in torders {
            t_offsets.push(off);
            off += m as u32;
        }
        let mut gens = Vec::new();
        for (j, &n) in korders.iter().enumerate() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for x in 0..n as u32 {
                images[(k_offsets[j] + x) as usize] = k_offsets[j] + (x + 1) % n as u32;
            }
            gens.push(Permutation::from_images_unchecked(images));
        }
        for (i, &m) in torders.iter().enumerate() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (j, &n) in korders.iter().enumerate() {
                let u = self.action.multipliers[i][j];
                for x in 0..n {
                    images[(k_offsets[j] as u64 + x) as usize] = k_offsets[j] + mul_mod(x, u, n) as u32;
                }
            }
            for y in 0..m as u32 {
                images[(t_offsets[i] + y) as usize] = t_offsets[i] + (y + 1) % m as u32;
            }
            gens.push(Permutation::from_images_unchecked(images));
        }
        if gens.is_empty() {
            gens.push(Permutation::identity(degree));
        }
        let group = PermGroup::new(degree, gens)?.with_cap(cap);
        let expected = self.order()?;
        let got = group.order()?;
        if got != expected {
            return Err(Error::FaithfulnessFailure { expected, got });
        }
        Ok(group)
    }

    /// The Hall σ-part `K_σ ⋊ L_σ` as a standalone group: each cyclic factor
    /// is replaced by its σ-primary part, with multipliers raised to match
    /// the new top generators. Components are kept.
    pub fn hall_part(&self, sigma: &BTreeSet<u64>) -> MetabelianGroup {
        let korders = &self.kernel.factor_orders;
        let torders = &self.top.factor_orders;
        let kparts: Vec<u64> = korders.iter().map(|&n| arith::pi_part(n, sigma)).collect();
        let tparts: Vec<u64> = torders.iter().map(|&m| arith::pi_part(m, sigma)).collect();
        let keep_k: Vec<usize> = (0..korders.len()).filter(|&j| kparts[j] > 1).collect();
        let keep_t: Vec<usize> = (0..torders.len()).filter(|&i| tparts[i] > 1).collect();
        let rows = keep_t
            .iter()
            .map(|&i| {
                let e = torders[i] / tparts[i];
                keep_k.iter().map(|&j| pow_mod(self.action.multipliers[i][j], e, kparts[j])).collect()
            })
            .collect();
        let remap = |kept: &[usize], r: &Range<usize>| {
            let start = kept.iter().filter(|&&x| x < r.start).count();
            let len = kept.iter().filter(|&&x| r.contains(&x)).count();
            start..start + len
        };
        let components = self
            .components
            .iter()
            .map(|c| Component { kernel: remap(&keep_k, &c.kernel), top: remap(&keep_t, &c.top) })
            .filter(|c| !c.kernel.is_empty() || !c.top.is_empty())
            .collect::<Vec<_>>();
        MetabelianGroup {
            kernel: AbelianGroup { factor_orders: keep_k.iter().map(|&j| kparts[j]).collect() },
            top: AbelianGroup { factor_orders: keep_t.iter().map(|&i| tparts[i]).collect() },
            action: MultiplierAction { multipliers: rows },
            components: if components.is_empty() { vec![Component { kernel: 0..0, top: 0..0 }] } else { components },
        }
    }

    /// Whether the Hall σ-part is normal: `L_σ` must centralize `K_{σ'}`.
    pub fn hall_part_is_normal(&self, sigma: &BTreeSet<u64>) -> bool {
        let korders = &self.kernel.factor_orders;
        self.top.factor_orders.iter().enumerate().all(|(i, &m)| {
            let e = m / arith::pi_part(m, sigma);
            korders.iter().enumerate().all(|(j, &n)| {
                let np = arith::pi_part(n, sigma);
                let rest = n / np;
                rest == 1 || pow_mod(self.action.multipliers[i][j], e, rest) == 1
            })
        })
    }
}

fn add_mod(a: &[u64], b: &[u64], orders: &[u64]) -> Vec<u64> {
    a.iter().zip(b).zip(orders).map(|((&x, &y), &n)| (x + y) % n).collect()
}

/// Smallest `u` with multiplicative order exactly `n` modulo the prime `p`.
pub fn smallest_unit_of_order(n: u64, p: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    if (p - 1) % n != 0 {
        return None;
    }
    let qs = arith::prime_divisors(n);
    (2..p).find(|&u| pow_mod(u, n, p) == 1 && qs.iter().all(|&q| pow_mod(u, n / q, p) != 1))
}
