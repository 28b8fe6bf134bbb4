//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use classgraph_core::block_square::{BlockPartition, WitnessReading};
use classgraph_core::group_engine::PermGroup;
use classgraph_core::prime_graph::PrimeGraph;
use classgraph_core::spec_file::GroupSpecFile;
use rand::Rng;

pub const VERTEX_POOL: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every spec in the bundled corpus, sorted by file name.
pub fn corpus() -> Vec<(String, GroupSpecFile, String)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let spec = GroupSpecFile::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            (p.file_name().unwrap().to_string_lossy().into_owned(), spec, text)
        })
        .collect()
}

fn prime_factors(mut n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut d = 2;
    while d * d <= n {
        while n % d == 0 {
            out.insert(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

pub fn primes_of(n: u64) -> BTreeSet<u64> {
    prime_factors(n)
}

/// Class sizes as `|G| / |C_G(x)|`, counting centralizers by brute force.
pub fn class_size_multiset(group: &PermGroup) -> BTreeMap<u64, u64> {
    let elems = group.elements().unwrap();
    let n = elems.len() as u64;
    let mut sizes = BTreeMap::new();
    for x in elems {
        let c = elems.iter().filter(|y| x.mul(y) == y.mul(x)).count() as u64;
        *sizes.entry(n / c).or_insert(0) += 1;
    }
    // Each class of size s contributes s elements.
    sizes.into_iter().map(|(s, count)| (s, count / s)).collect()
}

/// Δ from a list of class sizes, by trial division.
pub fn naive_delta(sizes: impl IntoIterator<Item = u64>) -> PrimeGraph {
    let mut g = PrimeGraph::new();
    for s in sizes {
        let ps: Vec<u64> = prime_factors(s).into_iter().collect();
        for &p in &ps {
            g.add_vertex(p);
        }
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                g.add_edge(ps[i], ps[j]);
            }
        }
    }
    g
}

/// Relabellings of the four blocks that keep the diagonal pairs
/// `{π1, π4}` and `{π2, π3}` as pairs.
pub fn square_symmetries() -> Vec<[u8; 4]> {
    let diag = |a: u8, b: u8| matches!((a.min(b), a.max(b)), (0, 3) | (1, 2));
    let mut out = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let m = [a, b, c, d];
                    let distinct = (0..4).all(|i| (0..i).all(|j| m[i] != m[j]));
                    if distinct && diag(m[0], m[3]) && diag(m[1], m[2]) {
                        out.push(m);
                    }
                }
            }
        }
    }
    assert_eq!(out.len(), 8);
    out
}

fn valid_labelling(adj: &[u32], labels: &[u8], reading: WitnessReading) -> bool {
    let mut b = [0u32; 4];
    for (i, &l) in labels.iter().enumerate() {
        b[l as usize] |= 1 << i;
    }
    if b.contains(&0) {
        return false;
    }
    let members = |m: u32| (0..adj.len()).filter(move |&i| m >> i & 1 == 1);
    if members(b[0]).any(|i| adj[i] & b[3] != 0) || members(b[1]).any(|i| adj[i] & b[2] != 0) {
        return false;
    }
    let side = |s: u32| match reading {
        WitnessReading::Strict => members(s).any(|i| adj[i] & b[1] != 0 && adj[i] & b[2] != 0),
        WitnessReading::Weak => members(s).any(|i| adj[i] & b[1] != 0) && members(s).any(|i| adj[i] & b[2] != 0),
    };
    side(b[0]) && side(b[3])
}

/// All valid labellings (vertex `i` in block `labels[i]`), reduced to the
/// least valid member of each symmetry orbit.
pub fn naive_block_partitions(g: &PrimeGraph, reading: WitnessReading) -> BTreeSet<Vec<u8>> {
    let vs: Vec<u64> = g.vertices().iter().copied().collect();
    let n = vs.len();
    let adj: Vec<u32> = vs
        .iter()
        .map(|&p| vs.iter().enumerate().filter(|(_, &q)| g.adjacent(p, q)).fold(0, |m, (j, _)| m | 1 << j))
        .collect();
    let mut valid = BTreeSet::new();
    let mut labels = vec![0u8; n];
    for code in 0..4usize.pow(n as u32) {
        let mut c = code;
        for l in labels.iter_mut() {
            *l = (c % 4) as u8;
            c /= 4;
        }
        if valid_labelling(&adj, &labels, reading) {
            valid.insert(labels.clone());
        }
    }
    let syms = square_symmetries();
    valid
        .iter()
        .map(|l| {
            syms.iter()
                .map(|m| {
                    // vertex in old block m[i] moves to new block i
                    l.iter().map(|&x| m.iter().position(|&y| y == x).unwrap() as u8).collect::<Vec<u8>>()
                })
                .filter(|img| valid.contains(img))
                .min()
                .unwrap()
        })
        .collect()
}

pub fn labels_of(g: &PrimeGraph, p: &BlockPartition) -> Vec<u8> {
    g.vertices()
        .iter()
        .map(|v| p.blocks().iter().position(|b| b.contains(v)).expect("vertex in some block") as u8)
        .collect()
}

pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> PrimeGraph {
    let vs = &VERTEX_POOL[..n];
    let density: f64 = rng.gen_range(0.2..0.9);
    let mut g = PrimeGraph::from_parts(vs.iter().copied(), []);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(vs[i], vs[j]);
            }
        }
    }
    g
}

/// The graph on the first `n` pool vertices whose edges are the set bits of `mask`.
pub fn graph_from_mask(n: usize, mask: u32) -> PrimeGraph {
    let vs = &VERTEX_POOL[..n];
    let mut g = PrimeGraph::from_parts(vs.iter().copied(), []);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(vs[i], vs[j]);
            }
            bit += 1;
        }
    }
    g
}
