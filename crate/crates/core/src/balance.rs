//! Balance, antibalance and switching equivalence.
//!
//! Everything here rests on one construction: grow a breadth-first spanning
//! forest from the least vertex of each component and switch so the forest
//! is all positive. A graph is balanced exactly when every other edge is then
//! positive too, and two signatures on the same graph are switching
//! equivalent exactly when they agree after this normalization.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, SwitchingFunction, Vertex};

/// Outcome of a balance test.
///
/// For a balanced graph `bipartition` is a Harary bipartition `(X, Y)`: the
/// negative edges are exactly those joining `X` to `Y`. For an unbalanced
/// graph `witness` is a negative circle, as a closed sequence of edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceCertificate {
    pub balanced: bool,
    pub bipartition: Option<(Vec<Vertex>, Vec<Vertex>)>,
    pub witness: Option<Vec<EdgeId>>,
}

impl BalanceCertificate {
    /// A potential function `μ` with `σ(vw) = μ(v) μ(w)` on every edge:
    /// `-1` on `X`, `+1` on `Y`.
    pub fn potential(&self, n: usize) -> Option<SwitchingFunction> {
        let (x, _) = self.bipartition.as_ref()?;
        SwitchingFunction::from_set(n, x).ok()
    }
}

/// Breadth-first spanning forest, roots at the least vertex per component,
/// edges scanned by increasing id.
pub(crate) struct SpanningForest {
    pub parent_edge: Vec<Option<EdgeId>>,
    pub depth: Vec<usize>,
    pub in_tree: Vec<bool>,
    /// Switching that makes every forest edge positive, `+1` at each root.
    pub theta: SwitchingFunction,
}

pub(crate) fn spanning_forest(g: &SignedGraph) -> SpanningForest {
    let n = g.n();
    let mut parent_edge = vec![None; n + 1];
    let mut depth = vec![0; n + 1];
    let mut seen = vec![false; n + 1];
    let mut in_tree = vec![false; g.m() + 1];
    let mut theta = vec![Sign::Plus; n];
    for root in 1..=n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &id in g.incident(x) {
                let e = &g.edges()[id - 1];
                let y = e.other(x).expect("incident edge");
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                in_tree[id] = true;
                parent_edge[y] = Some(id);
                depth[y] = depth[x] + 1;
                theta[y - 1] = theta[x - 1] * e.sign;
                queue.push_back(y);
            }
        }
    }
    SpanningForest {
        parent_edge,
        depth,
        in_tree,
        theta: SwitchingFunction::from_signs(theta),
    }
}

impl SpanningForest {
    /// The circle formed by non-forest edge `id` and the forest path between
    /// its ends, starting at `u` and closing with `id`.
    pub fn fundamental_circle(&self, g: &SignedGraph, id: EdgeId) -> Vec<EdgeId> {
        let e = &g.edges()[id - 1];
        let (mut a, mut b) = (e.u, e.v);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while a != b {
            if self.depth[a] >= self.depth[b] {
                let pe = self.parent_edge[a].expect("non-root has a parent");
                up.push(pe);
                a = g.edges()[pe - 1].other(a).expect("tree edge");
            } else {
                let pe = self.parent_edge[b].expect("non-root has a parent");
                down.push(pe);
                b = g.edges()[pe - 1].other(b).expect("tree edge");
            }
        }
        up.extend(down.into_iter().rev());
        up.push(id);
        up
    }
}

/// Sign of a walk given as a sequence of edge ids; repeated edges count with
/// multiplicity and the empty walk is positive.
pub fn walk_sign(g: &SignedGraph, walk: &[EdgeId]) -> Result<Sign> {
    let Some((&first, rest)) = walk.split_first() else {
        return Ok(Sign::Plus);
    };
    let e = g.edge(first)?;
    let mut sign = e.sign;
    // the walk may start at either end of its first edge
    let mut ends = vec![e.u, e.v];
    let mut prev = first;
    for &id in rest {
        let next = g.edge(id)?;
        let moved: Vec<Vertex> = ends.iter().filter_map(|&x| next.other(x)).collect();
        if moved.is_empty() {
            return Err(Error::NotAWalk { prev, next: id });
        }
        ends = moved;
        sign = sign * next.sign;
        prev = id;
    }
    Ok(sign)
}

/// Decide balance in `O(n + m)` with a certificate either way.
pub fn is_balanced(g: &SignedGraph) -> BalanceCertificate {
    let forest = spanning_forest(g);
    let theta = &forest.theta;
    let bad = g
        .edges()
        .iter()
        .find(|e| theta.get(e.u) * e.sign * theta.get(e.v) == Sign::Minus);
    match bad {
        None => {
            let x = theta.switched_set();
            let y = (1..=g.n()).filter(|&v| theta.get(v) == Sign::Plus).collect();
            BalanceCertificate {
                balanced: true,
                bipartition: Some((x, y)),
                witness: None,
            }
        }
        Some(e) => BalanceCertificate {
            balanced: false,
            bipartition: None,
            witness: Some(forest.fundamental_circle(g, e.id)),
        },
    }
}

/// Antibalance: `-Σ` is balanced.
pub fn is_antibalanced(g: &SignedGraph) -> BalanceCertificate {
    is_balanced(&g.negate())
}

/// `(b, c)`: balanced components and all components.
pub fn balanced_component_count(g: &SignedGraph) -> (usize, usize) {
    let comps = g.components();
    let c = comps.len();
    let b = comps
        .iter()
        .filter(|comp| {
            is_balanced(&g.induced(comp).expect("component vertices are valid")).balanced
        })
        .count();
    (b, c)
}

/// A switching `θ` with `g1^θ = g2`, if there is one. Both graphs must have
/// the same vertices and the same edge list up to signs.
pub fn switching_equivalent(
    g1: &SignedGraph,
    g2: &SignedGraph,
) -> Result<Option<SwitchingFunction>> {
    if !g1.same_underlying(g2) {
        return Err(Error::UnderlyingMismatch(format!(
            "{} vertices / {} edges against {} / {}",
            g1.n(),
            g1.m(),
            g2.n(),
            g2.m()
        )));
    }
    // same edge list, so both get the same forest
    let t1 = spanning_forest(g1).theta;
    let t2 = spanning_forest(g2).theta;
    let h1 = g1.switch(&t1)?;
    let h2 = g2.switch(&t2)?;
    if h1.signs() == h2.signs() {
        Ok(Some(t1.compose(&t2)))
    } else {
        Ok(None)
    }
}

/// Largest vertex count accepted by [`switching_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 8;

/// Adjacency state of each vertex pair: 0 none, ±1 one edge, 2 a digon.
pub(crate) fn pair_states(g: &SignedGraph) -> Vec<Vec<i8>> {
    let n = g.n();
    let mut s = vec![vec![0i8; n + 1]; n + 1];
    for e in g.edges() {
        let cur = s[e.u][e.v];
        let next = if cur == 0 { e.sign.value() as i8 } else { 2 };
        s[e.u][e.v] = next;
        s[e.v][e.u] = next;
    }
    s
}

/// A vertex bijection `f` (vertex `v` of `g1` goes to `f[v - 1]`) and a
/// switching `θ` on the image such that `g1` relabeled by `f` and then
/// switched by `θ` has the same signed edges as `g2`.
pub fn switching_isomorphic(
    g1: &SignedGraph,
    g2: &SignedGraph,
) -> Result<Option<(Vec<Vertex>, SwitchingFunction)>> {
    let n = g1.n();
    for g in [g1, g2] {
        if g.n() > ISOMORPHISM_LIMIT {
            return Err(Error::too_large("switching isomorphism search (vertices)", ISOMORPHISM_LIMIT, g.n()));
        }
    }
    if g2.n() != n || g2.m() != g1.m() {
        return Ok(None);
    }
    let s1 = pair_states(g1);
    let s2 = pair_states(g2);
    let mult = |s: i8| match s {
        0 => 0,
        2 => 2,
        _ => 1,
    };
    let degree = |s: &Vec<Vec<i8>>, v: usize| (1..=n).map(|w| mult(s[v][w])).sum::<usize>();
    let d1: Vec<usize> = (1..=n).map(|v| degree(&s1, v)).collect();
    let d2: Vec<usize> = (1..=n).map(|v| degree(&s2, v)).collect();
    {
        let (mut a, mut b) = (d1.clone(), d2.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(None);
        }
    }

    struct Search<'a> {
        n: usize,
        s1: &'a [Vec<i8>],
        s2: &'a [Vec<i8>],
        d1: &'a [usize],
        d2: &'a [usize],
        image: Vec<Vertex>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn mult(s: i8) -> i8 {
            if s == 2 {
                2
            } else {
                s.abs()
            }
        }

        fn extend(&mut self, v: usize) -> Option<(Vec<Vertex>, SwitchingFunction)> {
            if v > self.n {
                return self.solve_switching().map(|t| (self.image.clone(), t));
            }
            for w in 1..=self.n {
                if self.used[w] || self.d1[v - 1] != self.d2[w - 1] {
                    continue;
                }
                let fits = (1..v).all(|u| {
                    Self::mult(self.s1[u][v]) == Self::mult(self.s2[self.image[u - 1]][w])
                });
                if !fits {
                    continue;
                }
                self.used[w] = true;
                self.image.push(w);
                if let Some(found) = self.extend(v + 1) {
                    return Some(found);
                }
                self.image.pop();
                self.used[w] = false;
            }
            None
        }

        /// θ on the image labels making single-edge signs agree.
        fn solve_switching(&self) -> Option<SwitchingFunction> {
            let n = self.n;
            // relabeled states of g1
            let mut r = vec![vec![0i8; n + 1]; n + 1];
            for a in 1..=n {
                for b in 1..=n {
                    r[self.image[a - 1]][self.image[b - 1]] = self.s1[a][b];
                }
            }
            let mut theta: Vec<Option<i8>> = vec![None; n + 1];
            for root in 1..=n {
                if theta[root].is_some() {
                    continue;
                }
                theta[root] = Some(1);
                let mut queue = VecDeque::from([root]);
                while let Some(x) = queue.pop_front() {
                    let tx = theta[x].expect("assigned");
                    for y in 1..=n {
                        let a = r[x][y];
                        if a != 1 && a != -1 {
                            continue;
                        }
                        // need θ(x) a θ(y) = b
                        let want = tx * a * self.s2[x][y];
                        match theta[y] {
                            None => {
                                theta[y] = Some(want);
                                queue.push_back(y);
                            }
                            Some(t) if t != want => return None,
                            Some(_) => {}
                        }
                    }
                }
            }
            Some(SwitchingFunction::from_signs(
                (1..=n)
                    .map(|v| if theta[v] == Some(1) { Sign::Plus } else { Sign::Minus })
                    .collect(),
            ))
        }
    }

    let mut search = Search {
        n,
        s1: &s1,
        s2: &s2,
        d1: &d1,
        d2: &d2,
        image: Vec::with_capacity(n),
        used: vec![false; n + 1],
    };
    Ok(search.extend(1))
}
