//! Block-square detection.
//!
//! A block partition splits the vertex set into four nonempty blocks
//! `π1, π2, π3, π4` with no edges between `π1` and `π4` nor between `π2` and
//! `π3`, plus a witness condition tying `π1` and `π4` to both middle blocks.
//! Picture the blocks as the corners of a square `π1 – π2 – π4 – π3 – π1`:
//! the forbidden pairs are the diagonals.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime_graph::PrimeGraph;

/// Default bound on the vertex count accepted by [`find_block_partitions`].
pub const DEFAULT_VERTEX_BOUND: usize = 20;

/// How to read the witness clause of the block-square definition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessReading {
    /// A single vertex of `π1` is adjacent into both `π2` and `π3`, and
    /// likewise a single vertex of `π4`.
    #[default]
    Strict,
    /// `π1` has some edge into `π2` and some edge into `π3` (possibly from
    /// different vertices), and likewise `π4`.
    Weak,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockPartition {
    pub pi1: BTreeSet<u64>,
    pub pi2: BTreeSet<u64>,
    pub pi3: BTreeSet<u64>,
    pub pi4: BTreeSet<u64>,
}

/// The eight symmetries of the square, as block relabellings `new[i] = old[map[i]]`.
const SQUARE_SYMMETRIES: [[usize; 4]; 8] = [
    [0, 1, 2, 3],
    [3, 1, 2, 0], // π1 ↔ π4
    [0, 2, 1, 3], // π2 ↔ π3
    [3, 2, 1, 0],
    [1, 0, 3, 2], // (π1, π4) ↔ (π2, π3)
    [2, 0, 3, 1],
    [1, 3, 0, 2],
    [2, 3, 0, 1],
];

impl BlockPartition {
    pub fn new<I: IntoIterator<Item = u64>>(pi1: I, pi2: I, pi3: I, pi4: I) -> Self {
        Self {
            pi1: pi1.into_iter().collect(),
            pi2: pi2.into_iter().collect(),
            pi3: pi3.into_iter().collect(),
            pi4: pi4.into_iter().collect(),
        }
    }

    pub fn blocks(&self) -> [&BTreeSet<u64>; 4] {
        [&self.pi1, &self.pi2, &self.pi3, &self.pi4]
    }

    fn from_blocks(blocks: [BTreeSet<u64>; 4]) -> Self {
        let [pi1, pi2, pi3, pi4] = blocks;
        Self { pi1, pi2, pi3, pi4 }
    }

    /// `π1 ∪ π4`.
    pub fn outer(&self) -> BTreeSet<u64> {
        self.pi1.union(&self.pi4).copied().collect()
    }

    /// `π2 ∪ π3`.
    pub fn inner(&self) -> BTreeSet<u64> {
        self.pi2.union(&self.pi3).copied().collect()
    }

    /// All eight images under the symmetries of the square (identity first).
    pub fn symmetric_images(&self) -> Vec<BlockPartition> {
        let b = self.blocks();
        SQUARE_SYMMETRIES.iter().map(|m| Self::from_blocks(m.map(|i| b[i].clone()))).collect()
    }

    /// Checks disjointness, nonemptiness and exact coverage of `vertices`.
    pub fn validate(&self, vertices: &BTreeSet<u64>) -> Result<()> {
        let blocks = self.blocks();
        if let Some(i) = blocks.iter().position(|b| b.is_empty()) {
            return Err(Error::BadPartition(format!("block pi{} is empty", i + 1)));
        }
        let mut union = BTreeSet::new();
        for b in blocks {
            for &v in b {
                if !union.insert(v) {
                    return Err(Error::BadPartition(format!("vertex {v} lies in two blocks")));
                }
            }
        }
        if &union != vertices {
            return Err(Error::BadPartition("blocks do not cover exactly the vertex set".into()));
        }
        Ok(())
    }
}

fn no_edges_between(g: &PrimeGraph, a: &BTreeSet<u64>, b: &BTreeSet<u64>) -> bool {
    a.iter().all(|&p| b.iter().all(|&q| !g.adjacent(p, q)))
}

fn has_edge_into(g: &PrimeGraph, v: u64, b: &BTreeSet<u64>) -> bool {
    b.iter().any(|&q| g.adjacent(v, q))
}

fn witness_holds(
    g: &PrimeGraph,
    side: &BTreeSet<u64>,
    b2: &BTreeSet<u64>,
    b3: &BTreeSet<u64>,
    reading: WitnessReading,
) -> bool {
    match reading {
        WitnessReading::Strict => side.iter().any(|&v| has_edge_into(g, v, b2) && has_edge_into(g, v, b3)),
        WitnessReading::Weak => {
            side.iter().any(|&v| has_edge_into(g, v, b2)) && side.iter().any(|&v| has_edge_into(g, v, b3))
        }
    }
}

/// Whether `part` exhibits `g` as a block square.
pub fn is_block_square_partition(g: &PrimeGraph, part: &BlockPartition, reading: WitnessReading) -> Result<bool> {
    part.validate(g.vertices())?;
    Ok(no_edges_between(g, &part.pi1, &part.pi4)
        && no_edges_between(g, &part.pi2, &part.pi3)
        && witness_holds(g, &part.pi1, &part.pi2, &part.pi3, reading)
        && witness_holds(g, &part.pi4, &part.pi2, &part.pi3, reading))
}

/// Whether a block square is realizable by a group: every block is a clique
/// and every vertex of `π1 ∪ π4` is adjacent to every vertex of `π2 ∪ π3`.
pub fn is_admissible_block_square(g: &PrimeGraph, part: &BlockPartition) -> Result<bool> {
    part.validate(g.vertices())?;
    for b in part.blocks() {
        if !g.is_clique(b)? {
            return Ok(false);
        }
    }
    let inner = part.inner();
    Ok(part.outer().iter().all(|&p| inner.iter().all(|&q| g.adjacent(p, q))))
}

/// Bitmask view of a graph for the exhaustive search.
struct MaskGraph {
    vertices: Vec<u64>,
    adj: Vec<u64>,
}

impl MaskGraph {
    fn new(g: &PrimeGraph) -> Self {
        let vertices: Vec<u64> = g.vertices().iter().copied().collect();
        let adj = vertices
            .iter()
            .map(|&p| vertices.iter().enumerate().filter(|(_, &q)| g.adjacent(p, q)).fold(0u64, |m, (i, _)| m | 1 << i))
            .collect();
        Self { vertices, adj }
    }

    fn edge_between(&self, a: u64, b: u64) -> bool {
        bits(a).any(|v| self.adj[v] & b != 0)
    }

    fn witness(&self, side: u64, b2: u64, b3: u64, reading: WitnessReading) -> bool {
        match reading {
            WitnessReading::Strict => bits(side).any(|v| self.adj[v] & b2 != 0 && self.adj[v] & b3 != 0),
            WitnessReading::Weak => self.edge_between(side, b2) && self.edge_between(side, b3),
        }
    }

    fn valid(&self, masks: &[u64; 4], reading: WitnessReading) -> bool {
        masks.iter().all(|&m| m != 0)
            && !self.edge_between(masks[0], masks[3])
            && !self.edge_between(masks[1], masks[2])
            && self.witness(masks[0], masks[1], masks[2], reading)
            && self.witness(masks[3], masks[1], masks[2], reading)
    }

    fn partition(&self, labels: &[u8]) -> BlockPartition {
        let mut blocks: [BTreeSet<u64>; 4] = Default::default();
        for (i, &l) in labels.iter().enumerate() {
            blocks[l as usize].insert(self.vertices[i]);
        }
        BlockPartition::from_blocks(blocks)
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

/// Labels under symmetry `map`: a vertex in old block `map[i]` moves to block `i`.
fn relabel(labels: &[u8], map: &[usize; 4]) -> Vec<u8> {
    let mut inv = [0u8; 4];
    for (new, &old) in map.iter().enumerate() {
        inv[old] = new as u8;
    }
    labels.iter().map(|&l| inv[l as usize]).collect()
}

fn masks_of(labels: &[u8]) -> [u64; 4] {
    let mut m = [0u64; 4];
    for (i, &l) in labels.iter().enumerate() {
        m[l as usize] |= 1 << i;
    }
    m
}

struct Search<'a> {
    graph: &'a MaskGraph,
    reading: WitnessReading,
    labels: Vec<u8>,
    masks: [u64; 4],
    found: BTreeSet<Vec<u8>>,
}

impl Search<'_> {
    // Diagonal partner of each block.
    const OPPOSITE: [usize; 4] = [3, 2, 1, 0];

    fn run(&mut self, v: usize) {
        let n = self.graph.vertices.len();
        if v == n {
            self.leaf();
            return;
        }
        let middle_used = self.masks[1] | self.masks[2] != 0;
        for label in 0..4usize {
            // Orbit representatives: vertex 0 sits in π1, and the first
            // vertex placed in a middle block goes to π2.
            if v == 0 && label != 0 {
                continue;
            }
            if label == 2 && !middle_used {
                continue;
            }
            if self.graph.adj[v] & self.masks[Self::OPPOSITE[label]] != 0 {
                continue;
            }
            self.labels.push(label as u8);
            self.masks[label] |= 1 << v;
            self.run(v + 1);
            self.masks[label] &= !(1 << v);
            self.labels.pop();
        }
    }

    fn leaf(&mut self) {
        if self.masks.contains(&0) {
            return;
        }
        let best = SQUARE_SYMMETRIES
            .iter()
            .map(|m| relabel(&self.labels, m))
            .filter(|l| self.graph.valid(&masks_of(l), self.reading))
            .min();
        if let Some(best) = best {
            self.found.insert(best);
        }
    }
}

/// All block partitions of `g`, one per orbit of the square's symmetry
/// group. Each is the lexicographically least valid member of its orbit,
/// encoded as the block label of every vertex in ascending vertex order.
/// Empty iff `g` is not a block square.
pub fn find_block_partitions(g: &PrimeGraph, reading: WitnessReading) -> Result<Vec<BlockPartition>> {
    find_block_partitions_bounded(g, reading, DEFAULT_VERTEX_BOUND)
}

pub fn find_block_partitions_bounded(
    g: &PrimeGraph,
    reading: WitnessReading,
    bound: usize,
) -> Result<Vec<BlockPartition>> {
    let n = g.vertices().len();
    if n > bound.min(64) {
        return Err(Error::TooManyVertices { vertices: n, bound: bound.min(64) });
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    let graph = MaskGraph::new(g);
    let mut search =
        Search { graph: &graph, reading, labels: Vec::with_capacity(n), masks: [0; 4], found: BTreeSet::new() };
    search.run(0);
    Ok(search.found.iter().map(|l| graph.partition(l)).collect())
}
