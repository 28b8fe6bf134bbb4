//! The prime graph Δ(G) on conjugacy class sizes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

/// Simple undirected graph on primes. Edges are stored as `(p, q)` with
/// `p < q`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeGraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph, adding edge endpoints to the vertex set.
    pub fn from_parts<V, E>(vertices: V, edges: E) -> Self
    where
        V: IntoIterator<Item = u64>,
        E: IntoIterator<Item = (u64, u64)>,
    {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (p, q) in edges {
            g.add_edge(p, q);
        }
        g
    }

    pub fn add_vertex(&mut self, v: u64) {
        self.vertices.insert(v);
    }

    /// Loops are ignored.
    pub fn add_edge(&mut self, p: u64, q: u64) {
        if p == q {
            return;
        }
        self.vertices.insert(p);
        self.vertices.insert(q);
        self.edges.insert((p.min(q), p.max(q)));
    }

    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn adjacent(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }

    pub fn neighbors(&self, p: u64) -> BTreeSet<u64> {
        self.vertices.iter().copied().filter(|&q| self.adjacent(p, q)).collect()
    }

    /// Vertices other than `p` that are not adjacent to `p`.
    pub fn non_neighbors(&self, p: u64) -> BTreeSet<u64> {
        self.vertices.iter().copied().filter(|&q| q != p && !self.adjacent(p, q)).collect()
    }

    /// Connected components, each ascending, ordered by least vertex.
    pub fn components(&self) -> Vec<BTreeSet<u64>> {
        let mut remaining = self.vertices.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            remaining.remove(&start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.neighbors(v) {
                    if remaining.remove(&w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_clique(&self, set: &BTreeSet<u64>) -> Result<bool> {
        if let Some(&v) = set.iter().find(|v| !self.vertices.contains(v)) {
            return Err(Error::VertexNotInGraph(v));
        }
        Ok(set.iter().all(|&p| set.iter().all(|&q| p == q || self.adjacent(p, q))))
    }

    /// Vertices adjacent to every other vertex.
    pub fn complete_vertices(&self) -> BTreeSet<u64> {
        self.vertices.iter().copied().filter(|&p| self.non_neighbors(p).is_empty()).collect()
    }

    /// Induced subgraph on `set` (vertices outside the graph are ignored).
    pub fn induced(&self, set: &BTreeSet<u64>) -> PrimeGraph {
        PrimeGraph {
            vertices: self.vertices.intersection(set).copied().collect(),
            edges: self.edges.iter().filter(|(p, q)| set.contains(p) && set.contains(q)).copied().collect(),
        }
    }

    /// DOT text: vertices ascending, then edges in lexicographic order.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("graph delta {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  {v};");
        }
        for (p, q) in &self.edges {
            let _ = writeln!(out, "  {p} -- {q};");
        }
        out.push_str("}\n");
        out
    }
}

/// Δ of a class-size spectrum: primes dividing some class size, with `p–q`
/// adjacent when `pq` divides some class size.
pub fn delta_of(spectrum: &Spectrum) -> Result<PrimeGraph> {
    if spectrum.is_empty() {
        return Err(Error::MalformedExpr("empty class-size spectrum".into()));
    }
    let mut cache: BTreeMap<u64, BTreeSet<u64>> = BTreeMap::new();
    let mut g = PrimeGraph::new();
    for (size, _) in spectrum.iter() {
        let primes = cache.entry(size).or_insert_with(|| arith::prime_divisors(size));
        for &p in primes.iter() {
            g.add_vertex(p);
        }
        for &p in primes.iter() {
            for &q in primes.iter().filter(|&&q| q > p) {
                g.add_edge(p, q);
            }
        }
    }
    Ok(g)
}
