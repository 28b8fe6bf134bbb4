//! Realizing admissible block squares as `Δ(A × B)` for coprime Frobenius
//! groups `A` and `B`.
//!
//! Complement primes are chosen first and kernel primes are then taken from
//! the progression `1 mod (complement order)`: this is what makes the
//! multiplier action fixed-point-free, so both factors are genuinely
//! Frobenius. Every construction is re-analyzed before it is returned.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::analysis::{graph_data, verify_decomposition_evaluated, AnalysisOptions, DecompositionStatus};
use crate::arith;
use crate::block_square::{is_admissible_block_square, BlockPartition};
use crate::dirichlet::{find_primes_in_ap, PrimeRequest, DEFAULT_PRIME_BOUND};
use crate::error::{Error, Result};
use crate::prime_graph::PrimeGraph;
use crate::structured::{EvaluatedGroup, GroupExpr};

/// Recorded alongside every prediction so readers know which congruence
/// condition was used.
pub const CONGRUENCE_NOTE: &str =
    "kernel primes are chosen congruent to 1 modulo the complement order, which makes the complement act fixed-point-freely";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructOptions {
    /// Primes never used.
    pub avoid: BTreeSet<u64>,
    /// Smallest prime eligible as a complement prime.
    pub min_prime: u64,
    /// Initial ceiling for the prime progression search; doubled once on failure.
    pub bound: u64,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        Self { avoid: BTreeSet::new(), min_prime: 3, bound: DEFAULT_PRIME_BOUND }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub blocks: [usize; 4],
    pub expr: GroupExpr,
    pub predicted: PrimeGraph,
    pub partition: BlockPartition,
    pub a_order: u64,
    pub b_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub order: u64,
    pub graph_matches: bool,
    pub partition_found: bool,
    pub admissible: bool,
    pub decomposition: DecompositionStatus,
}

/// Predicted `Δ` of an admissible block square with the given blocks.
pub fn admissible_graph(partition: &BlockPartition) -> PrimeGraph {
    let mut g = PrimeGraph::from_parts(partition.blocks().into_iter().flatten().copied(), []);
    for b in partition.blocks() {
        for &p in b {
            for &q in b {
                g.add_edge(p, q);
            }
        }
    }
    for p in partition.outer() {
        for q in partition.inner() {
            g.add_edge(p, q);
        }
    }
    g
}

fn kernel_primes(count: usize, modulus: u64, used: &BTreeSet<u64>, opts: &ConstructOptions) -> Result<Vec<u64>> {
    let req = PrimeRequest::new(count, modulus, 1)
        .excluding(used.iter().chain(&opts.avoid).copied())
        .with_bound(opts.bound.max(modulus + 1));
    match find_primes_in_ap(&req) {
        Err(Error::BoundExhausted { .. }) => {
            let doubled = req.bound.saturating_mul(2);
            find_primes_in_ap(&req.with_bound(doubled))
        }
        other => other,
    }
}

fn complement_primes(count: usize, used: &BTreeSet<u64>, opts: &ConstructOptions) -> Vec<u64> {
    let exclude: BTreeSet<u64> = used.union(&opts.avoid).copied().collect();
    arith::primes_from(opts.min_prime, &exclude).take(count).collect()
}

fn checked_product(primes: &[u64]) -> Result<u64> {
    primes.iter().try_fold(1u64, |acc, &p| acc.checked_mul(p)).ok_or(Error::Overflow("complement order"))
}

/// Builds `G = Frobenius(π1, ∏π4) × Frobenius(π2, ∏π3)` without verifying it.
pub fn build(blocks: [usize; 4], opts: &ConstructOptions) -> Result<Construction> {
    let [m1, m2, m3, m4] = blocks;
    if blocks.contains(&0) {
        return Err(Error::InvalidRequest(format!("block sizes must be positive, got {m1},{m2},{m3},{m4}")));
    }
    let mut used = BTreeSet::new();
    let pi4 = complement_primes(m4, &used, opts);
    used.extend(&pi4);
    let n4 = checked_product(&pi4)?;
    let pi1 = kernel_primes(m1, n4, &used, opts)?;
    used.extend(&pi1);
    let pi3 = complement_primes(m3, &used, opts);
    used.extend(&pi3);
    let n3 = checked_product(&pi3)?;
    let pi2 = kernel_primes(m2, n3, &used, opts)?;

    let a_order = checked_product(&pi1)?.checked_mul(n4).ok_or(Error::Overflow("order of A"))?;
    let b_order = checked_product(&pi2)?.checked_mul(n3).ok_or(Error::Overflow("order of B"))?;
    a_order.checked_mul(b_order).ok_or(Error::Overflow("group order"))?;

    let expr = GroupExpr::direct(vec![GroupExpr::frobenius(pi1.clone(), n4), GroupExpr::frobenius(pi2.clone(), n3)]);
    let partition = BlockPartition::new(pi1, pi2, pi3, pi4);
    Ok(Construction { blocks, expr, predicted: admissible_graph(&partition), partition, a_order, b_order })
}

/// Re-analyzes a construction from its class-size spectrum. Any disagreement
/// with the prediction is a [`Error::PredictionMismatch`].
pub fn verify(c: &Construction, opts: &AnalysisOptions) -> Result<Verification> {
    let group = c.expr.evaluate_with(opts.eval())?;
    if let EvaluatedGroup::Structured(g) = &group {
        for i in 0..g.components().len() {
            if !g.component(i).is_frobenius_action() {
                return Err(Error::PredictionMismatch(format!("factor {i} does not act fixed-point-freely")));
            }
        }
    }
    let data = graph_data(&group, opts)?;
    if data.graph != c.predicted {
        return Err(Error::PredictionMismatch(format!(
            "computed graph {:?} differs from predicted {:?}",
            data.graph.edges(),
            c.predicted.edges()
        )));
    }
    let partition_found = data.partitions.iter().any(|p| p.symmetric_images().contains(&c.partition));
    if !partition_found {
        return Err(Error::PredictionMismatch("detector did not find the predicted partition".into()));
    }
    if !is_admissible_block_square(&data.graph, &c.partition)? {
        return Err(Error::PredictionMismatch("predicted partition is not admissible".into()));
    }
    let report = verify_decomposition_evaluated(&c.expr, &group, &data, opts)?;
    if report.status != DecompositionStatus::Verified {
        return Err(Error::PredictionMismatch(format!("decomposition check returned {:?}", report.status)));
    }
    Ok(Verification {
        order: data.order,
        graph_matches: true,
        partition_found,
        admissible: true,
        decomposition: report.status,
    })
}

/// Builds and verifies a group whose prime graph is the admissible block
/// square with block sizes `(m1, m2, m3, m4)`.
pub fn construct_block_square_group(
    blocks: [usize; 4],
    opts: &ConstructOptions,
    analysis: &AnalysisOptions,
) -> Result<(Construction, Verification)> {
    let c = build(blocks, opts)?;
    let v = verify(&c, analysis)?;
    Ok((c, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(blocks: [usize; 4]) -> (Construction, Verification) {
        construct_block_square_group(blocks, &ConstructOptions::default(), &AnalysisOptions::default()).unwrap()
    }

    #[test]
    fn smallest_square() {
        let (c, v) = run([1, 1, 1, 1]);
        assert_eq!(
            c.expr,
            GroupExpr::direct(vec![GroupExpr::frobenius(vec![7], 3), GroupExpr::frobenius(vec![11], 5)])
        );
        assert_eq!((c.a_order, c.b_order, v.order), (21, 55, 1155));
        assert_eq!(c.predicted.edges(), &[(3, 5), (3, 11), (5, 7), (7, 11)].into());
        assert!(is_admissible_block_square(&c.predicted, &c.partition).unwrap());
    }

    #[test]
    fn two_kernel_primes() {
        let (c, _) = run([2, 1, 1, 1]);
        assert_eq!(c.partition.pi1, [7, 13].into());
        assert_eq!(c.a_order, 273);
        assert!(c.predicted.adjacent(7, 13));
    }

    #[test]
    fn avoid_and_min_prime() {
        let opts = ConstructOptions { avoid: [3].into(), ..Default::default() };
        let c = build([1, 1, 1, 1], &opts).unwrap();
        assert!(!c.partition.blocks().iter().any(|b| b.contains(&3)));
        let opts = ConstructOptions { min_prime: 2, ..Default::default() };
        let c = build([1, 1, 1, 1], &opts).unwrap();
        assert_eq!(c.partition.pi4, [2].into());
        assert_eq!(c.partition.pi1, [3].into());
    }

    #[test]
    fn zero_block_rejected() {
        assert!(matches!(build([0, 1, 1, 1], &ConstructOptions::default()), Err(Error::InvalidRequest(_))));
    }

    #[test]
    fn bound_exhausted_after_retry() {
        let opts = ConstructOptions { bound: 5, ..Default::default() };
        // The retry at 10 finds 7 but not 13.
        let err = build([2, 1, 1, 1], &opts).unwrap_err();
        assert_eq!(err, Error::BoundExhausted { count: 2, modulus: 3, residue: 1, bound: 10 });
        assert!(build([1, 1, 1, 1], &opts).is_ok());
    }

    #[test]
    fn blocks_are_disjoint_and_orders_coprime() {
        for blocks in [[1, 2, 1, 1], [1, 1, 2, 1], [1, 1, 1, 2], [2, 2, 2, 2]] {
            let (c, v) = run(blocks);
            let all: Vec<u64> = c.partition.blocks().into_iter().flatten().copied().collect();
            let set: BTreeSet<u64> = all.iter().copied().collect();
            assert_eq!(all.len(), set.len());
            assert_eq!(arith::gcd(c.a_order, c.b_order), 1);
            assert_eq!(v.decomposition, DecompositionStatus::Verified);
        }
    }
}
