//! The signed-graph data model.
//!
//! Vertices are the integers `1..=n` and edges are numbered `1..=m` in
//! insertion order. The edge numbering fixes the column order of every
//! incidence matrix, so it is never permuted behind the caller's back.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A vertex, numbered from 1.
pub type Vertex = usize;

/// An edge id, numbered from 1 in insertion order.
pub type EdgeId = usize;

/// An element of the sign group `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }

    /// Product of a sequence of signs; the empty product is `+`.
    pub fn product<I: IntoIterator<Item = Sign>>(signs: I) -> Sign {
        signs.into_iter().fold(Sign::Plus, |acc, s| acc * s)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Sign, String> {
        match s {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            _ => Err(format!("expected a sign, found `{s}`")),
        }
    }
}

/// Which parallel edges a graph may carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// At most one edge per vertex pair.
    Simple,
    /// At most two edges per vertex pair, and then of opposite sign.
    SimplySigned,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Simple => "simple",
            Mode::SimplySigned => "simply-signed",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Mode, String> {
        match s {
            "simple" => Ok(Mode::Simple),
            "simply-signed" => Ok(Mode::SimplySigned),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
    pub sign: Sign,
}

impl Edge {
    /// The endpoint opposite `x`, if `x` is an endpoint.
    pub fn other(&self, x: Vertex) -> Option<Vertex> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn has(&self, x: Vertex) -> bool {
        x == self.u || x == self.v
    }

    /// Endpoints as an ordered pair `(min, max)`.
    pub fn key(&self) -> (Vertex, Vertex) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v == 0 || v > n {
        Err(Error::UnknownVertex { vertex: v, n })
    } else {
        Ok(())
    }
}

/// An unsigned simple graph on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        let mut seen: HashMap<(Vertex, Vertex), EdgeId> = HashMap::new();
        let mut list = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if let Some(&first) = seen.get(&(u.min(v), u.max(v))) {
                return Err(Error::Parallel {
                    first,
                    second: i + 1,
                    mode: Mode::Simple,
                });
            }
            seen.insert((u.min(v), u.max(v)), i + 1);
            list.push((u, v));
        }
        Ok(Graph { n, edges: list })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn path(n: usize) -> Graph {
        Graph {
            n,
            edges: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph { n, edges }
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        Graph { n, edges }
    }

    /// Complete multipartite graph with the given part sizes, parts numbered
    /// consecutively.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let mut part_of = Vec::new();
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(p).take(size));
        }
        let n = part_of.len();
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if part_of[u - 1] != part_of[v - 1] {
                    edges.push((u, v));
                }
            }
        }
        Graph { n, edges }
    }

    /// The Petersen graph: outer 5-cycle `1..=5`, inner pentagram `6..=10`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i + 1, (i + 1) % 5 + 1));
            edges.push((i + 1, i + 6));
            edges.push((i + 6, (i + 2) % 5 + 6));
        }
        Graph { n: 10, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u - 1] += 1;
            d[v - 1] += 1;
        }
        d
    }

    pub fn complement(&self) -> Graph {
        let mut adj = vec![vec![false; self.n + 1]; self.n + 1];
        for &(u, v) in &self.edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let mut edges = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if !adj[u][v] {
                    edges.push((u, v));
                }
            }
        }
        Graph { n: self.n, edges }
    }
}

/// A signed graph: vertices `1..=n` and an ordered list of signed edges.
///
/// Opposite-sign parallel edges are kept as two separate edges even though
/// they cancel in the adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    mode: Mode,
    edges: Vec<Edge>,
    incident: Vec<Vec<EdgeId>>,
}

impl SignedGraph {
    pub fn new(
        n: usize,
        mode: Mode,
        edges: impl IntoIterator<Item = (Vertex, Vertex, Sign)>,
    ) -> Result<SignedGraph> {
        let mut list: Vec<Edge> = Vec::new();
        let mut by_pair: HashMap<(Vertex, Vertex), Vec<EdgeId>> = HashMap::new();
        let mut incident = vec![Vec::new(); n];
        for (i, (u, v, sign)) in edges.into_iter().enumerate() {
            let id = i + 1;
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            let edge = Edge { id, u, v, sign };
            let same_pair = by_pair.entry(edge.key()).or_default();
            if let Some(&first) = same_pair.first() {
                let clash = match mode {
                    Mode::Simple => true,
                    Mode::SimplySigned => {
                        same_pair.len() >= 2 || list[first - 1].sign == sign
                    }
                };
                if clash {
                    let first = *same_pair
                        .iter()
                        .find(|&&e| mode == Mode::Simple || list[e - 1].sign == sign)
                        .unwrap_or(&first);
                    return Err(Error::Parallel {
                        first,
                        second: id,
                        mode,
                    });
                }
            }
            same_pair.push(id);
            incident[u - 1].push(id);
            incident[v - 1].push(id);
            list.push(edge);
        }
        Ok(SignedGraph {
            n,
            mode,
            edges: list,
            incident,
        })
    }

    /// A signed simple graph.
    pub fn simple(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex, Sign)>,
    ) -> Result<SignedGraph> {
        SignedGraph::new(n, Mode::Simple, edges)
    }

    /// `+Γ` or `-Γ`.
    pub fn homogeneous(gamma: &Graph, sign: Sign) -> SignedGraph {
        SignedGraph::simple(gamma.n, gamma.edges.iter().map(|&(u, v)| (u, v, sign)))
            .expect("a simple graph is a valid signed simple graph")
    }

    /// The signed complete graph whose negative edges are the edges of `gamma`;
    /// its adjacency matrix is the Seidel matrix of `gamma`.
    pub fn complete_from(gamma: &Graph) -> SignedGraph {
        let n = gamma.n;
        let mut neg = vec![vec![false; n + 1]; n + 1];
        for &(u, v) in &gamma.edges {
            neg[u][v] = true;
            neg[v][u] = true;
        }
        let edges = Graph::complete(n).edges.into_iter().map(|(u, v)| {
            let s = if neg[u][v] { Sign::Minus } else { Sign::Plus };
            (u, v, s)
        });
        SignedGraph::simple(n, edges).expect("complete graph is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        if id == 0 {
            return Err(Error::UnknownEdge(id));
        }
        self.edges.get(id - 1).ok_or(Error::UnknownEdge(id))
    }

    /// Edge ids incident with `v`, in increasing order.
    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incident[v - 1]
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.edges.iter().map(|e| e.sign).collect()
    }

    pub fn sign(&self, id: EdgeId) -> Result<Sign> {
        self.edge(id).map(|e| e.sign)
    }

    /// True when every pair carries at most one edge.
    pub fn has_parallel_edges(&self) -> bool {
        let mut keys: Vec<_> = self.edges.iter().map(Edge::key).collect();
        keys.sort_unstable();
        keys.windows(2).any(|w| w[0] == w[1])
    }

    /// All edges have the same sign (vacuously true without edges).
    pub fn is_homogeneous(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].sign == w[1].sign)
    }

    /// The underlying simple graph; parallel edges collapse to one.
    pub fn underlying(&self) -> Graph {
        let mut seen = std::collections::HashSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|e| seen.insert(e.key()))
            .map(|e| (e.u, e.v))
            .collect();
        Graph { n: self.n, edges }
    }

    /// Same underlying graph and edge numbering, new signs.
    pub fn with_signs(&self, signs: &[Sign]) -> Result<SignedGraph> {
        if signs.len() != self.m() {
            return Err(Error::Dimension(format!(
                "{} signs for {} edges",
                signs.len(),
                self.m()
            )));
        }
        SignedGraph::new(
            self.n,
            self.mode,
            self.edges.iter().zip(signs).map(|(e, &s)| (e.u, e.v, s)),
        )
    }

    /// `-Σ`: every sign reversed.
    pub fn negate(&self) -> SignedGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.sign = -e.sign;
        }
        g
    }

    /// `Σ^θ`: edge `uv` gets sign `θ(u) σ(uv) θ(v)`.
    pub fn switch(&self, theta: &SwitchingFunction) -> Result<SignedGraph> {
        theta.check_len(self.n)?;
        let mut g = self.clone();
        for e in &mut g.edges {
            e.sign = theta.get(e.u) * e.sign * theta.get(e.v);
        }
        Ok(g)
    }

    /// Switch the vertex set `set`: reverse every edge between `set` and its
    /// complement.
    pub fn switch_set(&self, set: &[Vertex]) -> Result<SignedGraph> {
        let theta = SwitchingFunction::from_set(self.n, set)?;
        self.switch(&theta)
    }

    /// True when `other` has the same vertex count and the same endpoints for
    /// every edge id.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self.m() == other.m()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.key() == b.key())
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for root in 1..=self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &id in self.incident(x) {
                    let y = self.edges[id - 1].other(x).expect("incident edge");
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `Σ \ e`: the edge removed, later edge ids shifted down by one.
    pub fn delete_edge(&self, id: EdgeId) -> Result<SignedGraph> {
        self.edge(id)?;
        SignedGraph::new(
            self.n,
            self.mode,
            self.edges
                .iter()
                .filter(|e| e.id != id)
                .map(|e| (e.u, e.v, e.sign)),
        )
    }

    /// The subgraph induced by `vertices`; vertex `vertices[i]` becomes
    /// `i + 1`.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<SignedGraph> {
        let mut pos = vec![0; self.n + 1];
        for (i, &v) in vertices.iter().enumerate() {
            check_vertex(v, self.n)?;
            pos[v] = i + 1;
        }
        SignedGraph::new(
            vertices.len(),
            self.mode,
            self.edges
                .iter()
                .filter(|e| pos[e.u] != 0 && pos[e.v] != 0)
                .map(|e| (pos[e.u], pos[e.v], e.sign)),
        )
    }

    /// Rename vertex `v` to `image[v - 1]`; `image` must be a permutation.
    pub fn relabel(&self, image: &[Vertex]) -> Result<SignedGraph> {
        if image.len() != self.n {
            return Err(Error::Dimension(format!(
                "relabeling of {} vertices for a graph on {}",
                image.len(),
                self.n
            )));
        }
        let mut hit = vec![false; self.n + 1];
        for &v in image {
            check_vertex(v, self.n)?;
            if std::mem::replace(&mut hit[v], true) {
                return Err(Error::Dimension(format!("vertex {v} repeated in relabeling")));
            }
        }
        SignedGraph::new(
            self.n,
            self.mode,
            self.edges
                .iter()
                .map(|e| (image[e.u - 1], image[e.v - 1], e.sign)),
        )
    }

    /// The spanning subgraph of edges with sign `sign` (`Σ⁺` or `Σ⁻`).
    pub fn part(&self, sign: Sign) -> SignedGraph {
        SignedGraph::new(
            self.n,
            self.mode,
            self.edges
                .iter()
                .filter(|e| e.sign == sign)
                .map(|e| (e.u, e.v, e.sign)),
        )
        .expect("subgraph of a valid graph")
    }

    /// Disjoint union; the vertices and edges of `other` follow those of
    /// `self`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let mode = if self.mode == Mode::Simple && other.mode == Mode::Simple {
            Mode::Simple
        } else {
            Mode::SimplySigned
        };
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.sign))
            .chain(other.edges.iter().map(|e| (e.u + shift, e.v + shift, e.sign)));
        SignedGraph::new(self.n + other.n, mode, edges).expect("disjoint union of valid graphs")
    }
}

/// A map `V → {+1, -1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SwitchingFunction(Vec<Sign>);

impl SwitchingFunction {
    pub fn from_signs(signs: Vec<Sign>) -> SwitchingFunction {
        SwitchingFunction(signs)
    }

    pub fn identity(n: usize) -> SwitchingFunction {
        SwitchingFunction(vec![Sign::Plus; n])
    }

    pub fn constant(n: usize, sign: Sign) -> SwitchingFunction {
        SwitchingFunction(vec![sign; n])
    }

    /// `-1` on `set`, `+1` elsewhere.
    pub fn from_set(n: usize, set: &[Vertex]) -> Result<SwitchingFunction> {
        let mut signs = vec![Sign::Plus; n];
        for &v in set {
            check_vertex(v, n)?;
            signs[v - 1] = Sign::Minus;
        }
        Ok(SwitchingFunction(signs))
    }

    /// The `index`-th of the `2^n` switching functions: bit `i` set means
    /// vertex `i + 1` is switched.
    pub fn from_bits(n: usize, index: u64) -> SwitchingFunction {
        SwitchingFunction(
            (0..n)
                .map(|i| {
                    if index >> i & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect(),
        )
    }

    pub fn get(&self, v: Vertex) -> Sign {
        self.0[v - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// Vertices mapped to `-1`.
    pub fn switched_set(&self) -> Vec<Vertex> {
        (1..=self.0.len())
            .filter(|&v| self.0[v - 1] == Sign::Minus)
            .collect()
    }

    /// Pointwise product.
    pub fn compose(&self, other: &SwitchingFunction) -> SwitchingFunction {
        SwitchingFunction(self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).collect())
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            Err(Error::SwitchingSize {
                expected: n,
                got: self.0.len(),
            })
        } else {
            Ok(())
        }
    }
}

/// A bidirection of the edges of a signed graph, consistent with its signs:
/// `σ(e) = -η(u, e) η(v, e)` for every edge `e = uv`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    ends: Vec<(Vertex, Vertex)>,
    eta: Vec<(Sign, Sign)>,
}

impl Orientation {
    /// `eta[i]` holds `(η(u, e), η(v, e))` for edge `e = i + 1`, in the order
    /// the endpoints were given when the edge was created.
    pub fn new(g: &SignedGraph, eta: Vec<(Sign, Sign)>) -> Result<Orientation> {
        if eta.len() != g.m() {
            return Err(Error::Orientation(format!(
                "{} edge ends given for {} edges",
                eta.len(),
                g.m()
            )));
        }
        let o = Orientation {
            ends: g.edges.iter().map(|e| (e.u, e.v)).collect(),
            eta,
        };
        o.check(g)?;
        Ok(o)
    }

    /// The canonical orientation: for `e = uv` with `u < v`, `η(u, e) = -1`,
    /// and `η(v, e) = +1` if `e` is positive, `-1` if negative.
    pub fn default_for(g: &SignedGraph) -> Orientation {
        let eta = g
            .edges
            .iter()
            .map(|e| {
                let low = Sign::Minus;
                let high = -(e.sign * low);
                if e.u < e.v {
                    (low, high)
                } else {
                    (high, low)
                }
            })
            .collect();
        Orientation {
            ends: g.edges.iter().map(|e| (e.u, e.v)).collect(),
            eta,
        }
    }

    /// `η(v, e)`, or `None` when `v` is not an endpoint of `e`.
    pub fn eta(&self, v: Vertex, e: EdgeId) -> Option<Sign> {
        let (a, b) = *self.ends.get(e.checked_sub(1)?)?;
        let (ea, eb) = self.eta[e - 1];
        if v == a {
            Some(ea)
        } else if v == b {
            Some(eb)
        } else {
            None
        }
    }

    /// Raw per-edge pairs, aligned with the edge endpoints.
    pub fn pairs(&self) -> &[(Sign, Sign)] {
        &self.eta
    }

    pub fn m(&self) -> usize {
        self.eta.len()
    }

    /// The sign each edge gets from the sign formula.
    pub fn edge_sign(&self, e: EdgeId) -> Sign {
        let (a, b) = self.eta[e - 1];
        -(a * b)
    }

    /// Errors unless this orientation fits `g` edge for edge.
    pub fn check(&self, g: &SignedGraph) -> Result<()> {
        if self.eta.len() != g.m() {
            return Err(Error::Orientation(format!(
                "orientation has {} edges, graph has {}",
                self.eta.len(),
                g.m()
            )));
        }
        for (i, e) in g.edges.iter().enumerate() {
            if self.ends[i] != (e.u, e.v) {
                return Err(Error::Orientation(format!(
                    "edge {} has different endpoints",
                    e.id
                )));
            }
            if self.edge_sign(e.id) != e.sign {
                return Err(Error::Orientation(format!(
                    "edge {} has sign {} but its ends give {}",
                    e.id,
                    e.sign,
                    self.edge_sign(e.id)
                )));
            }
        }
        Ok(())
    }

    /// `η^θ(v, e) = θ(v) η(v, e)`.
    pub fn switch(&self, theta: &SwitchingFunction) -> Result<Orientation> {
        let n = self
            .ends
            .iter()
            .map(|&(a, b)| a.max(b))
            .max()
            .unwrap_or(0);
        if theta.len() < n {
            return Err(Error::SwitchingSize {
                expected: n,
                got: theta.len(),
            });
        }
        let eta = self
            .ends
            .iter()
            .zip(&self.eta)
            .map(|(&(a, b), &(ea, eb))| (theta.get(a) * ea, theta.get(b) * eb))
            .collect();
        Ok(Orientation {
            ends: self.ends.clone(),
            eta,
        })
    }

    /// Reverse both arrows of edge `e`; its sign is unchanged.
    pub fn reorient(&self, e: EdgeId) -> Result<Orientation> {
        if e == 0 || e > self.eta.len() {
            return Err(Error::UnknownEdge(e));
        }
        let mut o = self.clone();
        let (a, b) = o.eta[e - 1];
        o.eta[e - 1] = (-a, -b);
        Ok(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::sigma4;
    use Sign::{Minus, Plus};

    fn signs_by_pair(g: &SignedGraph) -> Vec<((Vertex, Vertex), Sign)> {
        let mut v: Vec<_> = g.edges().iter().map(|e| (e.key(), e.sign)).collect();
        v.sort();
        v
    }

    #[test]
    fn rejects_loops_and_bad_parallels() {
        assert_eq!(
            SignedGraph::simple(2, [(1, 1, Plus)]),
            Err(Error::Loop(1))
        );
        assert!(matches!(
            SignedGraph::simple(2, [(1, 2, Plus), (2, 1, Minus)]),
            Err(Error::Parallel { first: 1, second: 2, .. })
        ));
        assert!(SignedGraph::new(2, Mode::SimplySigned, [(1, 2, Plus), (2, 1, Minus)]).is_ok());
        assert!(matches!(
            SignedGraph::new(2, Mode::SimplySigned, [(1, 2, Plus), (2, 1, Plus)]),
            Err(Error::Parallel { .. })
        ));
        assert!(matches!(
            SignedGraph::new(2, Mode::SimplySigned, [(1, 2, Plus), (1, 2, Minus), (1, 2, Minus)]),
            Err(Error::Parallel { first: 2, second: 3, .. })
        ));
        assert!(matches!(
            SignedGraph::simple(2, [(1, 3, Plus)]),
            Err(Error::UnknownVertex { vertex: 3, n: 2 })
        ));
    }

    #[test]
    fn identity_switching_and_full_switching_fix_sigma4() {
        let g = sigma4();
        assert_eq!(g.switch(&SwitchingFunction::identity(4)).unwrap(), g);
        assert_eq!(g.switch(&SwitchingFunction::constant(4, Minus)).unwrap(), g);
        assert_eq!(g.switch_set(&[]).unwrap(), g);
        assert_eq!(g.switch_set(&[1, 2, 3, 4]).unwrap(), g);
    }

    #[test]
    fn switching_vertex_one_of_sigma4() {
        let g = sigma4();
        let theta = SwitchingFunction::from_signs(vec![Minus, Plus, Plus, Plus]);
        let expected = vec![
            ((1, 2), Minus),
            ((1, 3), Plus),
            ((1, 4), Minus),
            ((2, 3), Minus),
            ((3, 4), Plus),
        ];
        assert_eq!(signs_by_pair(&g.switch(&theta).unwrap()), expected);
        assert_eq!(signs_by_pair(&g.switch_set(&[1]).unwrap()), expected);
    }

    #[test]
    fn switching_errors() {
        let g = sigma4();
        assert_eq!(
            g.switch(&SwitchingFunction::identity(3)),
            Err(Error::SwitchingSize { expected: 4, got: 3 })
        );
        assert!(matches!(g.switch_set(&[5]), Err(Error::UnknownVertex { .. })));
    }

    #[test]
    fn negation() {
        let c5 = SignedGraph::homogeneous(&Graph::cycle(5), Plus);
        assert_eq!(c5.negate(), SignedGraph::homogeneous(&Graph::cycle(5), Minus));
        assert_eq!(c5.negate().negate(), c5);
        let expected = vec![
            ((1, 2), Minus),
            ((1, 3), Plus),
            ((1, 4), Minus),
            ((2, 3), Plus),
            ((3, 4), Minus),
        ];
        assert_eq!(signs_by_pair(&sigma4().negate()), expected);
    }

    #[test]
    fn default_orientation_is_consistent() {
        let g = sigma4();
        let o = Orientation::default_for(&g);
        o.check(&g).unwrap();
        // positive edge 12 gets (-1, +1), negative edge 23 gets (-1, -1)
        assert_eq!(o.eta(1, 1), Some(Minus));
        assert_eq!(o.eta(2, 1), Some(Plus));
        assert_eq!(o.eta(2, 2), Some(Minus));
        assert_eq!(o.eta(3, 2), Some(Minus));
        assert_eq!(o.eta(4, 1), None);
    }

    #[test]
    fn orientation_switching_and_reorientation() {
        let g = sigma4();
        let o = crate::fixtures::sigma4_orientation();
        assert_eq!(o.switch(&SwitchingFunction::identity(4)).unwrap(), o);
        let all = o.switch(&SwitchingFunction::constant(4, Minus)).unwrap();
        for (a, b) in o.pairs().iter().zip(all.pairs()) {
            assert_eq!((-a.0, -a.1), *b);
        }
        let theta = SwitchingFunction::from_set(4, &[1]).unwrap();
        let switched = o.switch(&theta).unwrap();
        switched.check(&g.switch(&theta).unwrap()).unwrap();
        for e in 1..=5 {
            assert_eq!(switched.eta(1, e), o.eta(1, e).map(|s| -s));
            for v in 2..=4 {
                assert_eq!(switched.eta(v, e), o.eta(v, e));
            }
        }
        let r = o.reorient(5).unwrap();
        r.check(&g).unwrap();
        assert_eq!(r.reorient(5).unwrap(), o);
        assert_eq!(o.reorient(6), Err(Error::UnknownEdge(6)));
    }

    #[test]
    fn inconsistent_orientation_is_rejected() {
        let g = sigma4();
        // e12 is positive, so equal ends are wrong
        let mut eta = Orientation::default_for(&g).pairs().to_vec();
        eta[0] = (Plus, Plus);
        assert!(matches!(Orientation::new(&g, eta), Err(Error::Orientation(_))));
    }

    #[test]
    fn components_and_union() {
        let g = sigma4().disjoint_union(&SignedGraph::homogeneous(&Graph::complete(3), Plus));
        assert_eq!(g.components(), vec![vec![1, 2, 3, 4], vec![5, 6, 7]]);
        assert_eq!(g.m(), 8);
        assert_eq!(Graph::petersen().degrees(), vec![3; 10]);
        assert_eq!(Graph::petersen().m(), 15);
    }

    #[test]
    fn induced_and_relabel() {
        let g = sigma4();
        let h = g.induced(&[1, 3, 4]).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        let r = g.relabel(&[4, 3, 2, 1]).unwrap();
        assert_eq!(r.edge(1).unwrap().key(), (3, 4));
        assert!(g.relabel(&[1, 1, 2, 3]).is_err());
    }
}
