//! D-group recognition, central-Sylow stripping and the instance-level check
//! that a block-square Δ(G) comes from a product of two coprime D-groups.
//!
//! Two routes exist for every structural question: the permutation route
//! works on explicit element sets and serves as the oracle; the structured
//! route reads the answer off a [`MetabelianGroup`] with coprime kernel and
//! top orders, and is the only option for large constructed groups.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::arith::{self, gcd, pow_mod};
use crate::block_square::{find_block_partitions_bounded, BlockPartition, WitnessReading, DEFAULT_VERTEX_BOUND};
use crate::error::{Error, Result};
use crate::group_engine::group::greedy_generators;
use crate::group_engine::{closure, PermGroup, Permutation, SubgroupWitness, DEFAULT_ENUMERATION_CAP};
use crate::prime_graph::{delta_of, PrimeGraph};
use crate::spectrum::Spectrum;
use crate::structured::{EvalOptions, EvaluatedGroup, GroupExpr, MetabelianGroup, DEFAULT_SPECTRUM_CAP};

#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    /// Element cap for permutation enumeration.
    pub cap: usize,
    /// Element cap for structured orbit-partition spectra.
    pub spectrum_cap: u64,
    pub reading: WitnessReading,
    pub vertex_bound: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ENUMERATION_CAP,
            spectrum_cap: DEFAULT_SPECTRUM_CAP,
            reading: WitnessReading::Strict,
            vertex_bound: DEFAULT_VERTEX_BOUND,
        }
    }
}

impl AnalysisOptions {
    pub fn eval(&self) -> EvalOptions {
        EvalOptions { cap: self.cap }
    }
}

/// `G = AB` with `A = G′` normal abelian, `B` an abelian complement of
/// coprime order containing `Z(G)`, and `C_B(a) ≤ Z(G)` for all `a ≠ 1` in `A`.
#[derive(Debug, Clone)]
pub struct DGroupWitness {
    pub a: SubgroupWitness,
    pub b: SubgroupWitness,
    pub center_order: u64,
    pub class_size_set: BTreeSet<u64>,
}

/// Orders-only view of a D-group decomposition, shared by both routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DGroupSummary {
    pub a_order: u64,
    pub b_order: u64,
    pub center_order: u64,
    pub class_size_set: BTreeSet<u64>,
}

impl DGroupSummary {
    /// `{1, |A|, |B|/|Z(G)|}`.
    pub fn predicted_class_sizes(&self) -> BTreeSet<u64> {
        [1, self.a_order, self.b_order / self.center_order].into()
    }
}

impl DGroupWitness {
    pub fn summary(&self) -> DGroupSummary {
        DGroupSummary {
            a_order: self.a.order(),
            b_order: self.b.order(),
            center_order: self.center_order,
            class_size_set: self.class_size_set.clone(),
        }
    }
}

/// A group is a D-group iff its prime graph has at least two components.
pub fn is_dgroup_spectral(spectrum: &Spectrum) -> Result<bool> {
    Ok(delta_of(spectrum)?.components().len() >= 2)
}

/// Structural D-group recognition on explicit element sets.
pub fn dgroup_witness(group: &PermGroup) -> Result<Option<DGroupWitness>> {
    let order = group.order()?;
    let a = group.derived_subgroup()?;
    if a.is_trivial() || !a.is_abelian() {
        return Ok(None);
    }
    let complement = order / a.order();
    if gcd(a.order(), complement) != 1 {
        return Ok(None);
    }
    let z = group.center()?;
    let b = match find_abelian_complement(group, &a, &z, complement)? {
        Some(b) => b,
        None => return Ok(None),
    };
    if !z.is_subset_of(&b) || !a.intersection(&b).is_trivial() {
        return Ok(None);
    }
    // C_B(a) ≤ Z for every nontrivial a ∈ A.
    for x in a.elements().iter().filter(|x| !x.is_identity()) {
        if b.elements().iter().any(|y| y.commutes_with(x) && !z.contains(y)) {
            return Ok(None);
        }
    }
    Ok(Some(DGroupWitness { a, b, center_order: z.order(), class_size_set: group.conjugacy_class_sizes()?.sizes() }))
}

/// First abelian subgroup `⟨Z, g⟩` of order `target`, trying seeds `g` of
/// order coprime to `|A|` in element order.
fn find_abelian_complement(
    group: &PermGroup,
    a: &SubgroupWitness,
    z: &SubgroupWitness,
    target: u64,
) -> Result<Option<SubgroupWitness>> {
    let elements = group.elements()?;
    let orders = group.element_orders()?;
    let z_gens = greedy_generators(z.elements()).unwrap_or_default();
    let mut failed: HashSet<&Permutation> = HashSet::new();
    for (g, &o) in elements.iter().zip(orders) {
        if gcd(o, a.order()) != 1 || failed.contains(g) {
            continue;
        }
        let mut gens = z_gens.clone();
        gens.push(g.clone());
        let span = closure(group.degree(), &gens, group.cap())?;
        let candidate = SubgroupWitness::from_elements(span, false);
        if candidate.order() == target && candidate.is_abelian() {
            return Ok(Some(candidate));
        }
        if candidate.order() <= target {
            for e in candidate.elements() {
                if let Some(i) = group.index_of(e)? {
                    failed.insert(&elements[i]);
                }
            }
        }
    }
    Ok(None)
}

/// Central primes (those with a central Sylow subgroup) and the normal Hall
/// subgroup for the remaining primes of `|G|`.
#[derive(Debug, Clone)]
pub struct CentralStrip {
    pub central_primes: BTreeSet<u64>,
    pub core: SubgroupWitness,
}

pub fn strip_central_sylows(group: &PermGroup) -> Result<CentralStrip> {
    let order = group.order()?;
    let primes = arith::prime_divisors(order);
    let mut central_primes = BTreeSet::new();
    for &p in &primes {
        if group.sylow_is_central(p)? {
            central_primes.insert(p);
        }
    }
    let rest: BTreeSet<u64> = primes.difference(&central_primes).copied().collect();
    let core = group.pi_elements(&rest)?.into_subgroup().ok_or_else(|| {
        Error::DecompositionFailure(format!("elements of order divisible only by {rest:?} do not form a subgroup"))
    })?;
    if core.order() * arith::pi_part(order, &central_primes) != order {
        return Err(Error::DecompositionFailure("core and central part do not multiply to |G|".into()));
    }
    Ok(CentralStrip { central_primes, core })
}

/// D-group check on a structured group with `gcd(|K|, |L|) = 1`.
///
/// Under coprime action `K = C_K(L) × [K, L]`, `G′ = [K, L]`,
/// `Z(G) = C_K(L) × ker φ`, and the complement is `B = C_K(L) × L`. The
/// Frobenius condition becomes: every `l ∉ ker φ` acts fixed-point-freely
/// on `[K, L]`.
pub fn structured_dgroup(g: &MetabelianGroup, spectrum_cap: u64) -> Result<Option<DGroupSummary>> {
    let k_order = g.kernel().order()?;
    let l_order = g.top().order()?;
    if gcd(k_order, l_order) != 1 {
        return Err(Error::Unsupported(format!("kernel order {k_order} and top order {l_order} are not coprime")));
    }
    let korders = g.kernel().factor_orders();
    // |C_{K_j}(L)| = gcd(n_j, u_{1j} - 1, …, u_{rj} - 1)
    let fixed: Vec<u64> = korders
        .iter()
        .enumerate()
        .map(|(j, &n)| g.action().rows().iter().fold(n, |acc, row| gcd(acc, (row[j] + n - 1) % n)))
        .collect();
    let moved: Vec<u64> = korders.iter().zip(&fixed).map(|(&n, &c)| n / c).collect();
    let a_order: u64 = moved.iter().product();
    let c_order: u64 = fixed.iter().product();
    if a_order == 1 || gcd(a_order, c_order * l_order) != 1 {
        return Ok(None);
    }
    let mut kernel_of_action = 0u64;
    for l in g.top().elements() {
        let u = g.multipliers_of(&l);
        if u.iter().zip(korders).all(|(&x, &n)| x % n == 1 % n) {
            kernel_of_action += 1;
            continue;
        }
        let has_fixed_point = u.iter().zip(&moved).any(|(&x, &a)| a > 1 && gcd((x % a + a - 1) % a, a) != 1);
        if has_fixed_point {
            return Ok(None);
        }
    }
    Ok(Some(DGroupSummary {
        a_order,
        b_order: c_order * l_order,
        center_order: c_order * kernel_of_action,
        class_size_set: g.class_size_spectrum(spectrum_cap)?.sizes(),
    }))
}

/// Whether the σ′-Hall part of a structured group is central, where σ′ is
/// the complement of `sigma` in π(G).
fn complement_hall_is_central(g: &MetabelianGroup, sigma: &BTreeSet<u64>) -> bool {
    let korders = g.kernel().factor_orders();
    g.action().rows().iter().zip(g.top().factor_orders()).all(|(row, &m)| {
        let m_sigma = arith::pi_part(m, sigma);
        row.iter().zip(korders).all(|(&u, &n)| {
            let n_sigma = arith::pi_part(n, sigma);
            let n_rest = n / n_sigma;
            // L_σ′ acts trivially on K, and L fixes K_σ′.
            pow_mod(u, m_sigma, n) == 1 % n && (n_rest == 1 || u % n_rest == 1)
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DecompositionStatus {
    Verified,
    NotBlockSquare,
    CounterexampleCandidate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartWitness {
    pub order: u64,
    pub primes: BTreeSet<u64>,
    pub dgroup: DGroupSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionWitness {
    pub central_factor_primes: BTreeSet<u64>,
    pub a: PartWitness,
    pub b: PartWitness,
    pub partition: BlockPartition,
}

/// Forward direction for inputs declared as a direct product: two coprime
/// nonabelian D-group factors (plus abelian factors) must give a block square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForwardCheck {
    pub a_order: u64,
    pub b_order: u64,
    pub block_square_found: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub status: DecompositionStatus,
    pub route: Route,
    pub witness: Option<DecompositionWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forward: Option<ForwardCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Structured,
    Permutation,
}

/// Spectrum, graph and block partitions of an evaluated group.
#[derive(Debug, Clone)]
pub struct GraphData {
    pub order: u64,
    pub spectrum: Spectrum,
    pub graph: PrimeGraph,
    pub partitions: Vec<BlockPartition>,
}

pub fn spectrum_of(group: &EvaluatedGroup, opts: &AnalysisOptions) -> Result<Spectrum> {
    match group {
        EvaluatedGroup::Structured(g) => g.class_size_spectrum(opts.spectrum_cap),
        EvaluatedGroup::Perm(g) => g.conjugacy_class_sizes(),
    }
}

pub fn graph_data(group: &EvaluatedGroup, opts: &AnalysisOptions) -> Result<GraphData> {
    let spectrum = spectrum_of(group, opts)?;
    let graph = delta_of(&spectrum)?;
    let partitions = find_block_partitions_bounded(&graph, opts.reading, opts.vertex_bound)?;
    Ok(GraphData { order: group.order()?, spectrum, graph, partitions })
}

fn outcome(route: Route, found: Option<DecompositionWitness>, notes: Vec<String>) -> DecompositionReport {
    DecompositionReport {
        status: if found.is_some() {
            DecompositionStatus::Verified
        } else {
            DecompositionStatus::CounterexampleCandidate
        },
        route,
        witness: found,
        forward: None,
        notes,
    }
}

fn not_block_square(route: Route) -> DecompositionReport {
    DecompositionReport {
        status: DecompositionStatus::NotBlockSquare,
        route,
        witness: None,
        forward: None,
        notes: Vec::new(),
    }
}

/// Decomposition check on explicit element sets.
pub fn verify_decomposition_perm(group: &PermGroup, data: &GraphData) -> Result<DecompositionReport> {
    if data.partitions.is_empty() {
        return Ok(not_block_square(Route::Permutation));
    }
    let strip = strip_central_sylows(group)?;
    let core = group.subgroup_as_group(&strip.core)?;
    let mut notes = Vec::new();
    for partition in &data.partitions {
        match perm_parts(&core, partition, &strip.central_primes)? {
            Ok(w) => return Ok(outcome(Route::Permutation, Some(w), notes)),
            Err(why) => notes.push(why),
        }
    }
    Ok(outcome(Route::Permutation, None, notes))
}

fn perm_part(core: &PermGroup, sigma: &BTreeSet<u64>) -> Result<Result<(PermGroup, PartWitness), String>> {
    let Some(h) = core.pi_elements(sigma)?.into_subgroup() else {
        return Ok(Err(format!("{sigma:?}-elements do not form a subgroup")));
    };
    let part = core.subgroup_as_group(&h)?;
    let Some(w) = dgroup_witness(&part)? else {
        return Ok(Err(format!("{sigma:?}-part is not a D-group")));
    };
    let order = h.order();
    Ok(Ok((part, PartWitness { order, primes: arith::prime_divisors(order), dgroup: w.summary() })))
}

fn perm_parts(
    core: &PermGroup,
    partition: &BlockPartition,
    central: &BTreeSet<u64>,
) -> Result<Result<DecompositionWitness, String>> {
    let (sigma_a, sigma_b) = (partition.outer(), partition.inner());
    let (_, a) = match perm_part(core, &sigma_a)? {
        Ok(x) => x,
        Err(e) => return Ok(Err(e)),
    };
    let (_, b) = match perm_part(core, &sigma_b)? {
        Ok(x) => x,
        Err(e) => return Ok(Err(e)),
    };
    check_parts(core.order()?, central, a, b, partition)
}

fn check_parts(
    core_order: u64,
    central: &BTreeSet<u64>,
    a: PartWitness,
    b: PartWitness,
    partition: &BlockPartition,
) -> Result<Result<DecompositionWitness, String>> {
    if a.order.checked_mul(b.order) != Some(core_order) {
        return Ok(Err(format!("|A|·|B| = {}·{} differs from the core order {core_order}", a.order, b.order)));
    }
    if gcd(a.order, b.order) != 1 {
        return Ok(Err("A and B have non-coprime orders".into()));
    }
    if a.primes != partition.outer() || b.primes != partition.inner() {
        return Ok(Err("part orders do not match the partition's prime sets".into()));
    }
    Ok(Ok(DecompositionWitness { central_factor_primes: central.clone(), a, b, partition: partition.clone() }))
}

/// Decomposition check on a structured group with coprime kernel and top.
pub fn verify_decomposition_structured(
    g: &MetabelianGroup,
    data: &GraphData,
    opts: &AnalysisOptions,
) -> Result<DecompositionReport> {
    if data.partitions.is_empty() {
        return Ok(not_block_square(Route::Structured));
    }
    let k = g.kernel().order()?;
    let l = g.top().order()?;
    if gcd(k, l) != 1 {
        return Err(Error::Unsupported(format!("kernel order {k} and top order {l} are not coprime")));
    }
    let primes = arith::prime_divisors(data.order);
    let vertices = data.graph.vertices().clone();
    let central: BTreeSet<u64> = primes.difference(&vertices).copied().collect();
    if !g.hall_part_is_normal(&vertices) || !complement_hall_is_central(g, &vertices) {
        return Err(Error::DecompositionFailure(format!(
            "G does not split as a Hall {vertices:?}-subgroup times a central subgroup"
        )));
    }
    let core = g.hall_part(&vertices);
    let mut notes = Vec::new();
    for partition in &data.partitions {
        let mut parts = Vec::new();
        for sigma in [partition.outer(), partition.inner()] {
            if !core.hall_part_is_normal(&sigma) {
                parts.push(Err(format!("Hall {sigma:?}-part is not normal")));
                continue;
            }
            let h = core.hall_part(&sigma);
            match structured_dgroup(&h, opts.spectrum_cap)? {
                Some(d) => {
                    let order = h.order()?;
                    parts.push(Ok(PartWitness { order, primes: arith::prime_divisors(order), dgroup: d }));
                }
                None => parts.push(Err(format!("Hall {sigma:?}-part is not a D-group"))),
            }
        }
        let b = parts.pop().expect("two parts");
        let a = parts.pop().expect("two parts");
        match (a, b) {
            (Ok(a), Ok(b)) => match check_parts(core.order()?, &central, a, b, partition)? {
                Ok(w) => return Ok(outcome(Route::Structured, Some(w), notes)),
                Err(e) => notes.push(e),
            },
            (Err(e), _) | (_, Err(e)) => notes.push(e),
        }
    }
    Ok(outcome(Route::Structured, None, notes))
}

/// D-group summary of any evaluated group: structured when possible,
/// otherwise through the permutation oracle.
pub fn dgroup_summary(group: &EvaluatedGroup, opts: &AnalysisOptions) -> Result<Option<DGroupSummary>> {
    if let EvaluatedGroup::Structured(g) = group {
        match structured_dgroup(g, opts.spectrum_cap) {
            Err(Error::Unsupported(_)) => {}
            other => return other,
        }
    }
    let perm = group.to_perm(opts.cap)?;
    Ok(dgroup_witness(&perm)?.map(|w| w.summary()))
}

fn is_abelian(group: &EvaluatedGroup) -> Result<bool> {
    Ok(match group {
        EvaluatedGroup::Structured(g) => g.is_abelian(),
        EvaluatedGroup::Perm(g) => {
            let gens = g.generators();
            gens.iter().all(|a| gens.iter().all(|b| a.commutes_with(b)))
        }
    })
}

/// Block-square decomposition check on a group expression, in both
/// directions: a block-square Δ must decompose into two coprime D-groups, and
/// a declared product of two coprime nonabelian D-groups (with abelian
/// extras) must give a block square.
pub fn verify_decomposition(expr: &GroupExpr, opts: &AnalysisOptions) -> Result<DecompositionReport> {
    let group = expr.evaluate_with(opts.eval())?;
    let data = graph_data(&group, opts)?;
    verify_decomposition_evaluated(expr, &group, &data, opts)
}

pub fn verify_decomposition_evaluated(
    expr: &GroupExpr,
    group: &EvaluatedGroup,
    data: &GraphData,
    opts: &AnalysisOptions,
) -> Result<DecompositionReport> {
    let mut report = match group {
        EvaluatedGroup::Structured(g) => match verify_decomposition_structured(g, data, opts) {
            Err(Error::Unsupported(_)) => verify_decomposition_perm(&g.to_permutation(opts.cap)?, data)?,
            other => other?,
        },
        EvaluatedGroup::Perm(g) => verify_decomposition_perm(g, data)?,
    };
    if let Some(factors) = expr.direct_factors() {
        report.forward = forward_check(factors, data, opts)?;
        if report.forward.as_ref().is_some_and(|f| !f.block_square_found) {
            report.status = DecompositionStatus::CounterexampleCandidate;
            report.notes.push("declared product of coprime D-groups has no block partition".into());
        }
    }
    Ok(report)
}

fn forward_check(factors: &[GroupExpr], data: &GraphData, opts: &AnalysisOptions) -> Result<Option<ForwardCheck>> {
    let mut dgroups = Vec::new();
    for f in factors {
        let g = f.evaluate_with(opts.eval())?;
        if is_abelian(&g)? {
            continue;
        }
        match dgroup_summary(&g, opts)? {
            Some(_) => dgroups.push(g.order()?),
            None => return Ok(None),
        }
    }
    match dgroups[..] {
        [a, b] if gcd(a, b) == 1 => {
            Ok(Some(ForwardCheck { a_order: a, b_order: b, block_square_found: !data.partitions.is_empty() }))
        }
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_engine::{direct_product, named};

    fn expr_f21_f55() -> GroupExpr {
        GroupExpr::direct(vec![GroupExpr::frobenius(vec![7], 3), GroupExpr::frobenius(vec![11], 5)])
    }

    #[test]
    fn spectral_recognition() {
        assert!(is_dgroup_spectral(&Spectrum::from_sizes([1, 3, 3, 7, 7])).unwrap());
        assert!(!is_dgroup_spectral(&Spectrum::abelian(6)).unwrap());
        assert!(!is_dgroup_spectral(&Spectrum::from_sizes([1, 6, 8, 3, 6])).unwrap());
    }

    #[test]
    fn perm_dgroup_witnesses() {
        let w = dgroup_witness(&named::symmetric3()).unwrap().unwrap();
        assert_eq!((w.a.order(), w.b.order()), (3, 2));
        assert_eq!(w.class_size_set, [1, 2, 3].into());
        let w = dgroup_witness(&named::frobenius21()).unwrap().unwrap();
        assert_eq!((w.a.order(), w.b.order()), (7, 3));
        assert!(dgroup_witness(&named::cyclic(6)).unwrap().is_none());
        assert!(dgroup_witness(&named::symmetric4()).unwrap().is_none());
        assert!(dgroup_witness(&named::quaternion8()).unwrap().is_none());
        let w = dgroup_witness(&named::alternating4()).unwrap().unwrap();
        assert_eq!((w.a.order(), w.b.order()), (4, 3));
    }

    #[test]
    fn dgroup_with_center_in_b() {
        // S3 × Z2: Z = Z2 lies in B = Klein four.
        let g = direct_product(&named::symmetric3(), &named::cyclic(2));
        let w = dgroup_witness(&g).unwrap().unwrap();
        assert_eq!((w.a.order(), w.b.order(), w.center_order), (3, 4, 2));
        assert_eq!(w.summary().predicted_class_sizes(), w.class_size_set);
    }

    #[test]
    fn structured_matches_perm_on_small_groups() {
        for e in [
            GroupExpr::frobenius(vec![7], 3),
            GroupExpr::frobenius(vec![7, 13], 3),
            GroupExpr::Semidirect { kernel: vec![3], top: vec![4], multipliers: vec![vec![2]] },
            GroupExpr::Semidirect { kernel: vec![7, 13], top: vec![3], multipliers: vec![vec![2, 1]] },
            GroupExpr::cyclic(6),
            expr_f21_f55(),
        ] {
            let g = e.evaluate().unwrap();
            let EvaluatedGroup::Structured(s) = &g else { unreachable!() };
            let structured = structured_dgroup(s, DEFAULT_SPECTRUM_CAP).unwrap();
            let perm = dgroup_witness(&s.to_permutation(DEFAULT_ENUMERATION_CAP).unwrap()).unwrap();
            assert_eq!(structured, perm.map(|w| w.summary()), "{e:?}");
        }
    }

    #[test]
    fn central_strip() {
        let g = direct_product(&named::frobenius21(), &named::cyclic(5));
        let s = strip_central_sylows(&g).unwrap();
        assert_eq!(s.central_primes, [5].into());
        assert_eq!(s.core.order(), 21);
        let s = strip_central_sylows(&named::symmetric3()).unwrap();
        assert!(s.central_primes.is_empty());
        assert_eq!(s.core.order(), 6);
        let s = strip_central_sylows(&named::cyclic(6)).unwrap();
        assert_eq!(s.central_primes, [2, 3].into());
        assert!(s.core.is_trivial());
    }

    #[test]
    fn decomposition_on_f21_x_f55_both_routes() {
        let opts = AnalysisOptions::default();
        let report = verify_decomposition(&expr_f21_f55(), &opts).unwrap();
        assert_eq!(report.status, DecompositionStatus::Verified);
        assert_eq!(report.route, Route::Structured);
        let w = report.witness.unwrap();
        assert_eq!((w.a.order, w.b.order), (21, 55));
        assert!(report.forward.unwrap().block_square_found);

        let g = expr_f21_f55().evaluate().unwrap();
        let data = graph_data(&g, &opts).unwrap();
        let perm = g.to_perm(opts.cap).unwrap();
        let report = verify_decomposition_perm(&perm, &data).unwrap();
        assert_eq!(report.status, DecompositionStatus::Verified);
        let w = report.witness.unwrap();
        assert_eq!((w.a.order, w.b.order), (21, 55));
    }

    #[test]
    fn decomposition_not_block_square() {
        let opts = AnalysisOptions::default();
        let s4 = GroupExpr::Perm { degree: 4, generators: vec![vec![1, 2, 3, 0], vec![1, 0, 2, 3]] };
        assert_eq!(verify_decomposition(&s4, &opts).unwrap().status, DecompositionStatus::NotBlockSquare);
        assert_eq!(
            verify_decomposition(&GroupExpr::cyclic(6), &opts).unwrap().status,
            DecompositionStatus::NotBlockSquare
        );
    }

    #[test]
    fn decomposition_strips_abelian_factor() {
        let opts = AnalysisOptions::default();
        let e = GroupExpr::direct(vec![expr_f21_f55(), GroupExpr::cyclic(4)]);
        let report = verify_decomposition(&e, &opts).unwrap();
        assert_eq!(report.status, DecompositionStatus::Verified);
        assert_eq!(report.witness.unwrap().central_factor_primes, [2].into());
    }
}
