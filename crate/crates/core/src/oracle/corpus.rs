//! Exhaustive families of small graphs for sweeping theorems.
//!
//! Underlying graphs are listed once per isomorphism class. Signatures are
//! listed once per switching class: the edges of a fixed spanning forest are
//! kept positive and the remaining edges take every sign pattern.

use std::collections::BTreeSet;

use crate::balance::spanning_forest;
use crate::error::{Error, Result};
use crate::graph::{Graph, Mode, Sign, SignedGraph, SwitchingFunction};

/// Vertex limit for [`underlying_graphs`].
pub const UNDERLYING_LIMIT: usize = 7;
/// Vertex limit for [`simply_signed_graphs`].
pub const MULTIGRAPH_LIMIT: usize = 4;
/// Vertex limit for [`simply_signed_classes`].
pub const MULTIGRAPH_CLASS_LIMIT: usize = 5;

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push((a, b));
        }
    }
    out
}

/// Least edge mask over all relabelings that list vertices by a refined
/// degree key, so isomorphic graphs get the same value.
fn canonical(n: usize, mask: u64) -> u64 {
    let all = pairs(n);
    let edges: Vec<(usize, usize)> = all
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    let mut degree = vec![0usize; n];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut neighbour_degrees = vec![Vec::new(); n];
    for &(a, b) in &edges {
        neighbour_degrees[a].push(degree[b]);
        neighbour_degrees[b].push(degree[a]);
    }
    let keys: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut d = neighbour_degrees[v].clone();
            d.sort_unstable();
            (degree[v], d)
        })
        .collect();
    let mut distinct: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
    distinct.sort();
    distinct.dedup();
    // positions are handed out class by class
    let mut slots: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for k in &distinct {
        let size = keys.iter().filter(|x| x == k).count();
        slots.push((next..next + size).collect());
        next += size;
    }
    let class_of: Vec<usize> = keys
        .iter()
        .map(|k| distinct.iter().position(|d| *d == k).expect("key listed"))
        .collect();

    struct Search<'a> {
        n: usize,
        edges: &'a [(usize, usize)],
        class_of: &'a [usize],
        slots: &'a [Vec<usize>],
        used: Vec<bool>,
        image: Vec<usize>,
        best: u64,
    }

    impl Search<'_> {
        fn go(&mut self, v: usize) {
            if v == self.n {
                let mut m = 0u64;
                for &(a, b) in self.edges {
                    m |= 1 << pair_index(self.n, self.image[a], self.image[b]);
                }
                self.best = self.best.min(m);
                return;
            }
            for i in 0..self.slots[self.class_of[v]].len() {
                let p = self.slots[self.class_of[v]][i];
                if self.used[p] {
                    continue;
                }
                self.used[p] = true;
                self.image[v] = p;
                self.go(v + 1);
                self.used[p] = false;
            }
        }
    }

    let mut s = Search {
        n,
        edges: &edges,
        class_of: &class_of,
        slots: &slots,
        used: vec![false; n],
        image: vec![0; n],
        best: u64::MAX,
    };
    s.go(0);
    s.best
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    Graph::new(
        n,
        pairs(n)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, (a, b))| (a + 1, b + 1)),
    )
    .expect("mask encodes a simple graph")
}

fn class_masks(n: usize) -> BTreeSet<u64> {
    if n <= 6 {
        let m = n * n.saturating_sub(1) / 2;
        return (0..1u64 << m).map(|mask| canonical(n, mask)).collect();
    }
    // a graph on n vertices is a graph on n - 1 vertices plus a new vertex
    let smaller = class_masks(n - 1);
    let old_pairs = pairs(n - 1);
    let mut out = BTreeSet::new();
    for &mask in &smaller {
        let mut base = 0u64;
        for (i, &(a, b)) in old_pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                base |= 1 << pair_index(n, a, b);
            }
        }
        for nbrs in 0..1u64 << (n - 1) {
            let mut full = base;
            for a in 0..n - 1 {
                if nbrs >> a & 1 == 1 {
                    full |= 1 << pair_index(n, a, n - 1);
                }
            }
            out.insert(canonical(n, full));
        }
    }
    out
}

/// One graph per isomorphism class on `n` vertices, ordered by edge count.
pub fn underlying_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > UNDERLYING_LIMIT {
        return Err(Error::too_large("graph enumeration (vertices)", UNDERLYING_LIMIT, n));
    }
    let mut masks: Vec<u64> = class_masks(n).into_iter().collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    Ok(masks.into_iter().map(|m| graph_from_mask(n, m)).collect())
}

/// One signature per switching class on `gamma`: `2^(m - n + c)` graphs.
pub fn signatures(gamma: &Graph) -> Vec<SignedGraph> {
    let plus = SignedGraph::homogeneous(gamma, Sign::Plus);
    let forest = spanning_forest(&plus);
    let free: Vec<usize> = (1..=plus.m()).filter(|&id| !forest.in_tree[id]).collect();
    (0..1u64 << free.len())
        .map(|index| {
            let flips = SwitchingFunction::from_bits(free.len(), index);
            let mut signs = vec![Sign::Plus; plus.m()];
            for (k, &id) in free.iter().enumerate() {
                signs[id - 1] = flips.get(k + 1);
            }
            plus.with_signs(&signs).expect("same edge count")
        })
        .collect()
}

/// Every signed simple graph on `n` vertices up to isomorphism of the
/// underlying graph and switching.
pub fn signed_simple_graphs(n: usize) -> Result<Vec<SignedGraph>> {
    Ok(underlying_graphs(n)?.iter().flat_map(signatures).collect())
}

/// Every simply signed graph on the labeled vertex set `1..=n`: each pair
/// has no edge, a positive edge, a negative edge, or both.
pub fn simply_signed_graphs(n: usize) -> Result<Vec<SignedGraph>> {
    if n > MULTIGRAPH_LIMIT {
        return Err(Error::too_large("multigraph enumeration (vertices)", MULTIGRAPH_LIMIT, n));
    }
    let all = pairs(n);
    let count = 1u64 << (2 * all.len());
    Ok((0..count)
        .map(|code| {
            let mut edges = Vec::new();
            for (i, &(a, b)) in all.iter().enumerate() {
                let state = code >> (2 * i) & 3;
                if state & 1 == 1 {
                    edges.push((a + 1, b + 1, Sign::Plus));
                }
                if state & 2 == 2 {
                    edges.push((a + 1, b + 1, Sign::Minus));
                }
            }
            SignedGraph::new(n, Mode::SimplySigned, edges).expect("opposite-sign pairs only")
        })
        .collect())
}

/// Simply signed graphs on `n` vertices, one per switching class on each
/// choice of digons over each underlying graph from [`underlying_graphs`].
/// Digons are fixed by switching, so only the single edges vary. Isomorphic
/// graphs can still repeat.
pub fn simply_signed_classes(n: usize) -> Result<Vec<SignedGraph>> {
    if n > MULTIGRAPH_CLASS_LIMIT {
        return Err(Error::too_large("multigraph class enumeration (vertices)", MULTIGRAPH_CLASS_LIMIT, n));
    }
    let mut out = Vec::new();
    for gamma in underlying_graphs(n)? {
        let all = gamma.edges();
        for digons in 0..1u64 << all.len() {
            let single = Graph::new(
                n,
                all.iter().enumerate().filter(|(i, _)| digons >> i & 1 == 0).map(|(_, &p)| p),
            )
            .expect("subgraph of a simple graph");
            let doubled: Vec<(usize, usize)> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| digons >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let mode = if doubled.is_empty() { Mode::Simple } else { Mode::SimplySigned };
            for sig in signatures(&single) {
                let mut edges: Vec<_> = sig.edges().iter().map(|e| (e.u, e.v, e.sign)).collect();
                for &(u, v) in &doubled {
                    edges.push((u, v, Sign::Plus));
                    edges.push((u, v, Sign::Minus));
                }
                out.push(SignedGraph::new(n, mode, edges).expect("opposite-sign pairs only"));
            }
        }
    }
    Ok(out)
}
