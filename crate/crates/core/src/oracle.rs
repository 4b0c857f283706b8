//! Brute-force enumerations used as ground truth.
//!
//! Nothing in this module relies on linear algebra or on the balance
//! machinery; each routine simply lists the objects a theorem talks about.
//! Every routine has a hard size limit and errors beyond it.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, SwitchingFunction, Vertex};
use crate::matrix::kirchhoff;
use crate::spectra::determinant;

pub mod corpus;

/// Vertex limit for [`enumerate_circles`].
pub const CIRCLE_LIMIT: usize = 8;
/// Vertex limit for [`verify_theta_parity`].
pub const THETA_LIMIT: usize = 7;
/// Length limit for [`count_signed_walks`].
pub const WALK_LIMIT: u32 = 6;
/// Vertex limit for [`enumerate_unbalanced_pseudoforests`].
pub const PSEUDOFOREST_LIMIT: usize = 7;
/// Vertex limit for [`enumerate_switchings`].
pub const SWITCHING_LIMIT: usize = 12;

/// A circle, listed as a closed path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circle {
    /// Edges in path order; edge `edges[i]` joins `vertices[i]` to
    /// `vertices[i + 1]` (cyclically).
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<Vertex>,
    pub sign: Sign,
}

impl Circle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edge ids in increasing order.
    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }
}

/// Every circle of `g`, digons included, ordered by length and then by
/// sorted edge ids.
pub fn enumerate_circles(g: &SignedGraph) -> Result<Vec<Circle>> {
    if g.n() > CIRCLE_LIMIT {
        return Err(Error::too_large("circle enumeration (vertices)", CIRCLE_LIMIT, g.n()));
    }
    Ok(circles_up_to(g, usize::MAX).expect("no cap"))
}

/// Circle enumeration without a vertex limit, giving up once more than `cap`
/// circles have been found.
pub(crate) fn circles_up_to(g: &SignedGraph, cap: usize) -> Option<Vec<Circle>> {
    struct Dfs<'a> {
        g: &'a SignedGraph,
        start: Vertex,
        on_path: Vec<bool>,
        vertices: Vec<Vertex>,
        edges: Vec<EdgeId>,
        out: Vec<Circle>,
        cap: usize,
    }

    impl Dfs<'_> {
        fn walk(&mut self, x: Vertex) -> bool {
            for &id in self.g.incident(x) {
                if self.edges.last() == Some(&id) {
                    continue;
                }
                let y = self.g.edges()[id - 1].other(x).expect("incident edge");
                if y == self.start {
                    // each circle is found once per direction; keep one
                    if !self.edges.is_empty() && self.edges[0] < id {
                        let mut edges = self.edges.clone();
                        edges.push(id);
                        let sign = Sign::product(edges.iter().map(|&e| self.g.edges()[e - 1].sign));
                        self.out.push(Circle {
                            edges,
                            vertices: self.vertices.clone(),
                            sign,
                        });
                        if self.out.len() > self.cap {
                            return false;
                        }
                    }
                    continue;
                }
                if y < self.start || self.on_path[y] {
                    continue;
                }
                self.on_path[y] = true;
                self.vertices.push(y);
                self.edges.push(id);
                let go_on = self.walk(y);
                self.edges.pop();
                self.vertices.pop();
                self.on_path[y] = false;
                if !go_on {
                    return false;
                }
            }
            true
        }
    }

    let mut dfs = Dfs {
        g,
        start: 0,
        on_path: vec![false; g.n() + 1],
        vertices: Vec::new(),
        edges: Vec::new(),
        out: Vec::new(),
        cap,
    };
    for s in 1..=g.n() {
        dfs.start = s;
        dfs.on_path[s] = true;
        dfs.vertices = vec![s];
        if !dfs.walk(s) {
            return None;
        }
        dfs.on_path[s] = false;
    }
    let mut out = dfs.out;
    out.sort_by_cached_key(|c| (c.len(), c.edge_set()));
    Some(out)
}

/// A theta subgraph: three internally disjoint paths between two vertices,
/// with the three circles they form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theta {
    pub edges: Vec<EdgeId>,
    pub circles: [Vec<EdgeId>; 3],
    pub signs: [Sign; 3],
}

impl Theta {
    pub fn negative_circles(&self) -> usize {
        self.signs.iter().filter(|s| **s == Sign::Minus).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    pub thetas: Vec<Theta>,
}

impl ThetaReport {
    /// Thetas with an odd number of negative circles.
    pub fn violations(&self) -> impl Iterator<Item = &Theta> {
        self.thetas.iter().filter(|t| t.negative_circles() % 2 == 1)
    }

    pub fn holds(&self) -> bool {
        self.violations().next().is_none()
    }
}

/// List every theta subgraph and count its negative circles.
///
/// Thetas are found as unions of two circles that share a path: such a
/// union has exactly two vertices of degree 3, all others of degree 2, and
/// one more edge than vertices. The third circle is the symmetric
/// difference of the first two.
pub fn verify_theta_parity(g: &SignedGraph) -> Result<ThetaReport> {
    if g.n() > THETA_LIMIT {
        return Err(Error::too_large("theta enumeration (vertices)", THETA_LIMIT, g.n()));
    }
    let circles = circles_up_to(g, usize::MAX).expect("no cap");
    let sets: Vec<BTreeSet<EdgeId>> = circles.iter().map(|c| c.edges.iter().copied().collect()).collect();
    let edge_sign = |id: EdgeId| g.edges()[id - 1].sign;
    let mut seen = BTreeSet::new();
    let mut thetas = Vec::new();
    for i in 0..circles.len() {
        for j in i + 1..circles.len() {
            if sets[i].is_disjoint(&sets[j]) {
                continue;
            }
            let union: BTreeSet<EdgeId> = sets[i].union(&sets[j]).copied().collect();
            let mut degree = vec![0usize; g.n() + 1];
            for &id in &union {
                let e = &g.edges()[id - 1];
                degree[e.u] += 1;
                degree[e.v] += 1;
            }
            let vertices = degree.iter().filter(|&&d| d > 0).count();
            let branch = degree.iter().filter(|&&d| d == 3).count();
            let others_two = degree.iter().all(|&d| d == 0 || d == 2 || d == 3);
            if branch != 2 || !others_two || union.len() != vertices + 1 {
                continue;
            }
            let key: Vec<EdgeId> = union.iter().copied().collect();
            if !seen.insert(key.clone()) {
                continue;
            }
            let third: Vec<EdgeId> = sets[i].symmetric_difference(&sets[j]).copied().collect();
            let sign_of = |s: &[EdgeId]| Sign::product(s.iter().map(|&e| edge_sign(e)));
            let a: Vec<EdgeId> = sets[i].iter().copied().collect();
            let b: Vec<EdgeId> = sets[j].iter().copied().collect();
            let signs = [sign_of(&a), sign_of(&b), sign_of(&third)];
            thetas.push(Theta {
                edges: key,
                circles: [a, b, third],
                signs,
            });
        }
    }
    thetas.sort_by(|x, y| (x.edges.len(), &x.edges).cmp(&(y.edges.len(), &y.edges)));
    Ok(ThetaReport { thetas })
}

/// `(w⁺, w⁻)`: the numbers of positive and negative walks of length `l`
/// from `i` to `j`, counting parallel edges as distinct steps.
pub fn count_signed_walks(g: &SignedGraph, i: Vertex, j: Vertex, l: u32) -> Result<(u64, u64)> {
    for v in [i, j] {
        if v == 0 || v > g.n() {
            return Err(Error::UnknownVertex { vertex: v, n: g.n() });
        }
    }
    if l == 0 {
        return Err(Error::ZeroLength);
    }
    if l > WALK_LIMIT {
        return Err(Error::too_large("walk length", WALK_LIMIT as usize, l as usize));
    }

    fn step(g: &SignedGraph, x: Vertex, j: Vertex, left: u32, sign: Sign, counts: &mut (u64, u64)) {
        if left == 0 {
            if x == j {
                match sign {
                    Sign::Plus => counts.0 += 1,
                    Sign::Minus => counts.1 += 1,
                }
            }
            return;
        }
        for &id in g.incident(x) {
            let e = &g.edges()[id - 1];
            let y = e.other(x).expect("incident edge");
            step(g, y, j, left - 1, sign * e.sign, counts);
        }
    }

    let mut counts = (0, 0);
    step(g, i, j, l, Sign::Plus, &mut counts);
    Ok(counts)
}

/// One component of a pseudoforest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoforestComponent {
    pub vertices: Vec<Vertex>,
    /// The circle of a 1-tree and its sign; `None` for a tree.
    pub circle: Option<(Vec<EdgeId>, Sign)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pseudoforest {
    pub edges: Vec<EdgeId>,
    pub components: Vec<PseudoforestComponent>,
}

impl Pseudoforest {
    /// `c(F)`, the number of components.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_tree_free(&self) -> bool {
        self.components.iter().all(|c| c.circle.is_some())
    }
}

/// Classify the spanning subgraph with the given edges, or `None` if it is
/// not a pseudoforest.
pub fn classify_pseudoforest(g: &SignedGraph, edges: &[EdgeId]) -> Result<Option<Pseudoforest>> {
    for &id in edges {
        g.edge(id)?;
    }
    let n = g.n();
    let mut parent: Vec<Vertex> = (0..=n).collect();
    fn find(parent: &mut [Vertex], mut x: Vertex) -> Vertex {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &id in edges {
        let e = &g.edges()[id - 1];
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let roots: Vec<Vertex> = (1..=n).map(|v| find(&mut parent, v)).collect();
    let mut components = Vec::new();
    for root in 1..=n {
        if roots[root - 1] != root {
            continue;
        }
        let vertices: Vec<Vertex> = (1..=n).filter(|&v| roots[v - 1] == root).collect();
        let comp_edges: Vec<EdgeId> = edges
            .iter()
            .copied()
            .filter(|&id| roots[g.edges()[id - 1].u - 1] == root)
            .collect();
        if comp_edges.len() > vertices.len() {
            return Ok(None);
        }
        let circle = if comp_edges.len() == vertices.len() {
            Some(prune_to_circle(g, &comp_edges))
        } else {
            None
        };
        components.push(PseudoforestComponent { vertices, circle });
    }
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    Ok(Some(Pseudoforest {
        edges: sorted,
        components,
    }))
}

/// Strip leaves from a connected 1-tree until only its circle is left.
fn prune_to_circle(g: &SignedGraph, edges: &[EdgeId]) -> (Vec<EdgeId>, Sign) {
    let mut alive: Vec<EdgeId> = edges.to_vec();
    loop {
        let mut degree = vec![0usize; g.n() + 1];
        for &id in &alive {
            let e = &g.edges()[id - 1];
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        let before = alive.len();
        alive.retain(|&id| {
            let e = &g.edges()[id - 1];
            degree[e.u] > 1 && degree[e.v] > 1
        });
        if alive.len() == before {
            break;
        }
    }
    alive.sort_unstable();
    let sign = Sign::product(alive.iter().map(|&id| g.edges()[id - 1].sign));
    (alive, sign)
}

/// All spanning pseudoforests with `n` edges whose components are 1-trees
/// with negative circles.
pub fn enumerate_unbalanced_pseudoforests(g: &SignedGraph) -> Result<Vec<Pseudoforest>> {
    let n = g.n();
    if n > PSEUDOFOREST_LIMIT {
        return Err(Error::too_large("pseudoforest enumeration (vertices)", PSEUDOFOREST_LIMIT, n));
    }
    let m = g.m();
    let mut out = Vec::new();
    if n > m {
        return Ok(out);
    }
    // lexicographic n-subsets of 1..=m
    let mut pick: Vec<EdgeId> = (1..=n).collect();
    loop {
        if let Some(f) = classify_pseudoforest(g, &pick)? {
            let negative = f
                .components
                .iter()
                .all(|c| matches!(c.circle, Some((_, Sign::Minus))));
            if negative {
                out.push(f);
            }
        }
        let Some(i) = (0..n).rev().find(|&i| pick[i] < m - (n - 1 - i)) else {
            break;
        };
        pick[i] += 1;
        for k in i + 1..n {
            pick[k] = pick[k - 1] + 1;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTreeReport {
    pub determinant: BigInt,
    pub pseudoforest_sum: BigInt,
    pub pseudoforests: usize,
}

impl MatrixTreeReport {
    pub fn holds(&self) -> bool {
        self.determinant == self.pseudoforest_sum
    }
}

/// Compare `det K` with the sum of `4^c(F)` over the unbalanced
/// pseudoforests.
pub fn matrix_tree_check(g: &SignedGraph) -> Result<MatrixTreeReport> {
    let forests = enumerate_unbalanced_pseudoforests(g)?;
    let pseudoforest_sum = forests
        .iter()
        .map(|f| BigInt::from(4).pow(f.component_count() as u32))
        .sum();
    Ok(MatrixTreeReport {
        determinant: determinant(&kirchhoff(g))?,
        pseudoforest_sum,
        pseudoforests: forests.len(),
    })
}

/// Every signature reachable from `g` by switching, without repeats, sorted
/// by edge signs (`+` before `-`).
pub fn enumerate_switchings(g: &SignedGraph) -> Result<Vec<SignedGraph>> {
    let n = g.n();
    if n > SWITCHING_LIMIT {
        return Err(Error::too_large("switching enumeration (vertices)", SWITCHING_LIMIT, n));
    }
    let mut seen = BTreeSet::new();
    for index in 0..1u64 << n {
        let h = g.switch(&SwitchingFunction::from_bits(n, index))?;
        seen.insert(h.signs());
    }
    seen.into_iter().map(|s| g.with_signs(&s)).collect()
}
