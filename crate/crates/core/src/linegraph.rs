//! Signed line graphs.
//!
//! The line graph is built from an orientation: two edges meeting at `v`
//! become adjacent, and the new edge inherits the arrows the two old edges
//! have at `v`. Different orientations give switching-equivalent results,
//! so line graphs should be compared with
//! [`switching_equivalent`](crate::balance::switching_equivalent), not by
//! their signs.

use crate::balance::{balanced_component_count, spanning_forest};
use crate::error::{Error, Result};
use crate::gf2::{Bits, TrackedBasis};
use crate::graph::{EdgeId, Graph, Mode, Orientation, Sign, SignedGraph, Vertex};
use crate::matrix::{adjacency, incidence, IntMatrix};
use crate::oracle::{circles_up_to, enumerate_circles, Circle};
use crate::spectra::eig_sym;

/// Source vertex limit for [`validate_circle_signs`].
pub const CIRCLE_CHECK_LIMIT: usize = 6;
/// Above this many line-graph circles only a cycle basis is checked.
pub const CIRCLE_CAP: usize = 20_000;
/// Vertex limit for [`check_eigenvalue_two_subgraph`].
pub const SUBGRAPH_LIMIT: usize = 8;

/// A line graph together with the orientation it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedLineGraph {
    /// Vertex `e` is edge `e` of the source. Line edges are listed by
    /// source vertex, then by the pair of source edges.
    pub graph: SignedGraph,
    pub orientation: Orientation,
    /// The source vertex each line edge was generated at.
    pub via: Vec<Vertex>,
    pub source: SignedGraph,
    pub source_orientation: Orientation,
}

/// `Λ(Σ)` under the orientation `o`.
pub fn line_graph(g: &SignedGraph, o: &Orientation) -> Result<OrientedLineGraph> {
    o.check(g)?;
    let mut edges = Vec::new();
    let mut eta = Vec::new();
    let mut via = Vec::new();
    for v in 1..=g.n() {
        let at = g.incident(v);
        for (i, &e) in at.iter().enumerate() {
            for &f in &at[i + 1..] {
                let (he, hf) = (o.eta(v, e).expect("incident"), o.eta(v, f).expect("incident"));
                edges.push((e, f, -(he * hf)));
                eta.push((he, hf));
                via.push(v);
            }
        }
    }
    let mode = if g.has_parallel_edges() {
        Mode::SimplySigned
    } else {
        Mode::Simple
    };
    let graph = SignedGraph::new(g.m(), mode, edges)?;
    let orientation = Orientation::new(&graph, eta)?;
    Ok(OrientedLineGraph {
        graph,
        orientation,
        via,
        source: g.clone(),
        source_orientation: o.clone(),
    })
}

/// `Λ̄(Σ)`: the line graph with every opposite-sign parallel pair deleted.
/// Edge order is kept otherwise.
pub fn reduce(lg: &OrientedLineGraph) -> SignedGraph {
    reduce_graph(&lg.graph)
}

fn reduce_graph(g: &SignedGraph) -> SignedGraph {
    let mut count = std::collections::HashMap::new();
    for e in g.edges() {
        *count.entry(e.key()).or_insert(0) += 1;
    }
    SignedGraph::simple(
        g.n(),
        g.edges()
            .iter()
            .filter(|e| count[&e.key()] == 1)
            .map(|e| (e.u, e.v, e.sign)),
    )
    .expect("parallel pairs removed")
}

/// `-Γ` with `m[i]` negative digons hanging from vertex `i + 1`. Each digon
/// gets a new vertex `w` and the edges `vw+`, `vw-`.
pub fn with_negative_digons(gamma: &Graph, m: &[usize]) -> Result<SignedGraph> {
    if m.len() != gamma.n() {
        return Err(Error::Dimension(format!(
            "{} digon counts for {} vertices",
            m.len(),
            gamma.n()
        )));
    }
    let mut edges: Vec<(Vertex, Vertex, Sign)> =
        gamma.edges().iter().map(|&(u, v)| (u, v, Sign::Minus)).collect();
    let mut n = gamma.n();
    for (i, &count) in m.iter().enumerate() {
        for _ in 0..count {
            n += 1;
            edges.push((i + 1, n, Sign::Plus));
            edges.push((i + 1, n, Sign::Minus));
        }
    }
    SignedGraph::new(n, Mode::SimplySigned, edges)
}

/// The generalized line graph `L(Γ; m)`, all negative: the reduced line
/// graph of [`with_negative_digons`] under the default orientation.
pub fn generalized_line_graph(gamma: &Graph, m: &[usize]) -> Result<SignedGraph> {
    let g = with_negative_digons(gamma, m)?;
    Ok(reduce(&line_graph(&g, &Orientation::default_for(&g))?))
}

/// Outcome of validating line-graph signs against circle signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleSignReport {
    pub vertex_triangles: usize,
    pub derived_circles: usize,
    /// Line-graph circles checked against the sum rule.
    pub checked: usize,
    /// Whether every circle was checked, rather than a cycle basis.
    pub exhaustive: bool,
    pub failures: Vec<String>,
}

impl CircleSignReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check the orientation-built line graph against the circle definition:
/// vertex triangles are negative, each derived circle has the sign of the
/// circle it comes from, and every other circle has the product sign of any
/// vertex triangles and derived circles it is the sum of.
pub fn validate_circle_signs(lg: &OrientedLineGraph) -> Result<CircleSignReport> {
    let src = &lg.source;
    if src.n() > CIRCLE_CHECK_LIMIT {
        return Err(Error::too_large("circle-sign validation (source vertices)", CIRCLE_CHECK_LIMIT, src.n()));
    }
    let l = &lg.graph;
    let at_vertex = |v, e, f| line_edge(lg, v, e, f).expect("edges meet at v");
    let sign_of = |ids: &[EdgeId]| Sign::product(ids.iter().map(|&id| l.edges()[id - 1].sign));
    let mut failures = Vec::new();
    let mut generators: Vec<(Vec<EdgeId>, Sign)> = Vec::new();

    let mut vertex_triangles = 0;
    for v in 1..=src.n() {
        let at = src.incident(v);
        for a in 0..at.len() {
            for b in a + 1..at.len() {
                for c in b + 1..at.len() {
                    let (e, f, g) = (at[a], at[b], at[c]);
                    let tri = vec![at_vertex(v, e, f), at_vertex(v, f, g), at_vertex(v, e, g)];
                    if sign_of(&tri) != Sign::Minus {
                        failures.push(format!("vertex triangle {e} {f} {g} at {v} is positive"));
                    }
                    generators.push((tri, Sign::Minus));
                    vertex_triangles += 1;
                }
            }
        }
    }

    let source_circles = enumerate_circles(src)?;
    for c in &source_circles {
        let derived = derived_circle(lg, c);
        if sign_of(&derived) != c.sign {
            failures.push(format!(
                "circle {:?} has sign {} but its derived circle has {}",
                c.edges,
                c.sign,
                sign_of(&derived)
            ));
        }
        generators.push((derived, c.sign));
    }

    let mut basis = TrackedBasis::new(generators.len());
    for (i, (edges, _)) in generators.iter().enumerate() {
        basis.insert(i, &Bits::from_indices(l.m(), edges.iter().map(|&id| id - 1)));
    }

    let (targets, exhaustive) = match circles_up_to(l, CIRCLE_CAP) {
        Some(all) => (all.into_iter().map(|c| c.edges).collect(), true),
        None => (fundamental_circles(l), false),
    };
    for target in &targets {
        let v = Bits::from_indices(l.m(), target.iter().map(|&id| id - 1));
        let combo = basis.express(&v).ok_or_else(|| {
            Error::Decomposition(format!("line-graph circle {target:?} is not a sum of generators"))
        })?;
        let predicted = Sign::product(combo.ones().map(|i| generators[i].1));
        if predicted != sign_of(target) {
            failures.push(format!(
                "circle {target:?} has sign {} but the sum rule gives {predicted}",
                sign_of(target)
            ));
        }
    }

    Ok(CircleSignReport {
        vertex_triangles,
        derived_circles: source_circles.len(),
        checked: targets.len(),
        exhaustive,
        failures,
    })
}

fn fundamental_circles(g: &SignedGraph) -> Vec<Vec<EdgeId>> {
    let forest = spanning_forest(g);
    (1..=g.m())
        .filter(|&id| !forest.in_tree[id])
        .map(|id| forest.fundamental_circle(g, id))
        .collect()
}

/// Both sides of `A(Λ(Σ)) = 2I - ΗᵀΗ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineAdjacencyReport {
    pub line_adjacency: IntMatrix,
    pub from_incidence: IntMatrix,
}

impl LineAdjacencyReport {
    pub fn holds(&self) -> bool {
        self.line_adjacency == self.from_incidence
    }
}

pub fn line_adjacency_identity(g: &SignedGraph, o: &Orientation) -> Result<LineAdjacencyReport> {
    let lg = line_graph(g, o)?;
    let h = incidence(g, o)?;
    let gram = &h.transpose() * &h;
    Ok(LineAdjacencyReport {
        line_adjacency: adjacency(&lg.graph),
        from_incidence: &IntMatrix::identity(g.m()).scale(2) - &gram,
    })
}

/// Eigenvalue 2 of the reduced line graph.
#[derive(Clone, Debug, PartialEq)]
pub struct LineEigenvalueReport {
    pub largest: Option<f64>,
    pub multiplicity_of_two: usize,
    /// `|E| - n + b(Σ)`.
    pub expected_multiplicity: usize,
    /// Some component is neither a tree nor an unbalanced 1-tree.
    pub has_other_component: bool,
    pub tol: f64,
}

impl LineEigenvalueReport {
    pub fn bounded(&self) -> bool {
        self.largest.map_or(true, |x| x <= 2.0 + self.tol)
    }

    pub fn holds(&self) -> bool {
        self.bounded()
            && self.multiplicity_of_two == self.expected_multiplicity
            && (self.multiplicity_of_two > 0) == self.has_other_component
    }
}

/// Largest eigenvalue and multiplicity of 2 for `Λ̄(Σ)`; eigenvalues within
/// `width` of 2 are counted as 2.
pub fn check_line_eigenvalues(g: &SignedGraph, tol: f64, width: f64) -> Result<LineEigenvalueReport> {
    let lg = line_graph(g, &Orientation::default_for(g))?;
    let spectrum = eig_sym(&adjacency(&reduce(&lg)), tol)?;
    let (b, _) = balanced_component_count(g);
    let has_other_component = g.components().iter().any(|comp| {
        let h = g.induced(comp).expect("component vertices are valid");
        let tree = h.m() + 1 == h.n();
        let unbalanced_one_tree =
            h.m() == h.n() && !crate::balance::is_balanced(&h).balanced;
        !tree && !unbalanced_one_tree
    });
    Ok(LineEigenvalueReport {
        largest: spectrum.largest(),
        multiplicity_of_two: spectrum.multiplicity(2.0, width),
        expected_multiplicity: g.m() + b - g.n(),
        has_other_component,
        tol,
    })
}

/// Incidence columns as vectors of the root system `D_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVectorSet {
    pub n: usize,
    /// Vector `i` belongs to edge `i + 1`.
    pub vectors: Vec<Vec<i64>>,
}

impl RootVectorSet {
    /// Every vector is `±bᵢ ± bⱼ` with `i ≠ j`.
    pub fn in_root_system(&self) -> bool {
        self.vectors.iter().all(|v| {
            v.len() == self.n
                && v.iter().filter(|&&x| x != 0).count() == 2
                && v.iter().all(|&x| x.abs() <= 1)
        })
    }

    pub fn gram(&self) -> IntMatrix {
        let k = self.vectors.len();
        let mut g = IntMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                g[(i, j)] = self.vectors[i].iter().zip(&self.vectors[j]).map(|(a, b)| a * b).sum();
            }
        }
        g
    }

    /// Whether `f(v)·f(w) = σ(vw)` on edges and `0` on non-edges, i.e. the
    /// Gram matrix is `2I + A(target)`.
    pub fn represents(&self, target: &SignedGraph) -> bool {
        target.n() == self.vectors.len()
            && self.gram() == &IntMatrix::identity(target.n()).scale(2) + &adjacency(target)
    }
}

/// The incidence columns of `(Σ, o)`. Their Gram matrix is
/// `2I - A(Λ̄(Σ))`, so they represent `-Λ̄(Σ)`.
pub fn dn_representation(g: &SignedGraph, o: &Orientation) -> Result<RootVectorSet> {
    let h = incidence(g, o)?;
    Ok(RootVectorSet {
        n: g.n(),
        vectors: (0..h.cols()).map(|j| h.column(j)).collect(),
    })
}

/// Search for an induced subgraph with largest eigenvalue exactly 2.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueTwoReport {
    pub largest: f64,
    /// `λ¹ ≥ 2`, so a witness must exist.
    pub applicable: bool,
    /// First witness by size, then lexicographically.
    pub witness: Option<Vec<Vertex>>,
    pub witness_largest: Option<f64>,
}

impl EigenvalueTwoReport {
    /// A witness exists exactly when `λ¹ ≥ 2`.
    pub fn holds(&self) -> bool {
        self.applicable == self.witness.is_some()
    }
}

pub fn check_eigenvalue_two_subgraph(g: &SignedGraph, tol: f64) -> Result<EigenvalueTwoReport> {
    let n = g.n();
    if n > SUBGRAPH_LIMIT {
        return Err(Error::too_large("induced subgraph search (vertices)", SUBGRAPH_LIMIT, n));
    }
    if g.has_parallel_edges() {
        return Err(Error::NotSimple);
    }
    let largest = eig_sym(&adjacency(g), tol)?.largest().unwrap_or(0.0);
    let mut subsets: Vec<Vec<Vertex>> = (1u32..1 << n)
        .map(|bits| (1..=n).filter(|v| bits >> (v - 1) & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a: &Vec<Vertex>, b| (a.len(), a).cmp(&(b.len(), b)));
    let mut witness = None;
    let mut witness_largest = None;
    for s in subsets {
        let l = eig_sym(&adjacency(&g.induced(&s)?), tol)?.largest().unwrap_or(0.0);
        if (l - 2.0).abs() <= tol {
            witness = Some(s);
            witness_largest = Some(l);
            break;
        }
    }
    Ok(EigenvalueTwoReport {
        largest,
        applicable: largest >= 2.0 - tol,
        witness,
        witness_largest,
    })
}

/// The line edge generated at `v` by source edges `e` and `f`.
fn line_edge(lg: &OrientedLineGraph, v: Vertex, e: EdgeId, f: EdgeId) -> Option<EdgeId> {
    let (e, f) = (e.min(f), e.max(f));
    lg.graph
        .edges()
        .iter()
        .zip(&lg.via)
        .find(|(x, &w)| w == v && x.u == e && x.v == f)
        .map(|(x, _)| x.id)
}

/// The circle of `Λ(Σ)` derived from the source circle `c`.
pub fn derived_circle(lg: &OrientedLineGraph, c: &Circle) -> Vec<EdgeId> {
    let k = c.len();
    (0..k)
        .map(|i| {
            line_edge(lg, c.vertices[(i + 1) % k], c.edges[i], c.edges[(i + 1) % k])
                .expect("consecutive circle edges meet")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::switching_equivalent;
    use crate::fixtures::{sigma4, sigma4_orientation, sigma5};
    use Sign::{Minus, Plus};

    fn default_line(g: &SignedGraph) -> OrientedLineGraph {
        line_graph(g, &Orientation::default_for(g)).unwrap()
    }

    #[test]
    fn path_gives_a_single_edge() {
        let p3 = SignedGraph::homogeneous(&Graph::path(3), Plus);
        let lg = default_line(&p3);
        assert_eq!(lg.graph.n(), 2);
        assert_eq!(lg.graph.m(), 1);
        assert_eq!(lg.via, vec![2]);
    }

    #[test]
    fn triangle_vertex_triangle_is_negative() {
        let star = SignedGraph::homogeneous(&Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap(), Plus);
        let lg = default_line(&star);
        assert_eq!(lg.graph.m(), 3);
        let r = validate_circle_signs(&lg).unwrap();
        assert_eq!(r.vertex_triangles, 1);
        assert!(r.holds());
        assert_eq!(Sign::product(lg.graph.signs()), Minus);
    }

    #[test]
    fn derived_circles_keep_their_sign() {
        // the circle sign is the sign of the last edge
        for sign in [Plus, Minus] {
            let c4 = SignedGraph::homogeneous(&Graph::cycle(4), Plus)
                .with_signs(&[Plus, Plus, Plus, sign])
                .unwrap();
            let lg = default_line(&c4);
            assert_eq!(Sign::product(lg.graph.signs()), sign);
            let r = validate_circle_signs(&lg).unwrap();
            assert_eq!(r.derived_circles, 1);
            assert!(r.holds() && r.exhaustive);
        }
        let k3 = SignedGraph::homogeneous(&Graph::complete(3), Plus);
        let lg = default_line(&k3);
        let c = &enumerate_circles(&k3).unwrap()[0];
        assert_eq!(derived_circle(&lg, c).len(), 3);
    }

    #[test]
    fn sigma4_circle_signs() {
        let lg = line_graph(&sigma4(), &sigma4_orientation()).unwrap();
        let r = validate_circle_signs(&lg).unwrap();
        assert_eq!(r.vertex_triangles, 2);
        assert_eq!(r.derived_circles, 3);
        assert!(r.holds());
    }

    #[test]
    fn digon_line_graph_cancels() {
        let g = with_negative_digons(&Graph::empty(1), &[1]).unwrap();
        let lg = default_line(&g);
        assert_eq!(lg.graph.m(), 2);
        assert_ne!(lg.graph.edges()[0].sign, lg.graph.edges()[1].sign);
        let r = reduce(&lg);
        assert_eq!((r.n(), r.m()), (2, 0));
        assert_eq!(generalized_line_graph(&Graph::empty(1), &[1]).unwrap().m(), 0);
    }

    #[test]
    fn simple_sources_reduce_to_themselves() {
        let lg = line_graph(&sigma4(), &sigma4_orientation()).unwrap();
        assert_eq!(reduce(&lg).signs(), lg.graph.signs());
        assert_eq!(reduce(&lg).m(), lg.graph.m());
    }

    #[test]
    fn sigma5_reduction_has_a_claw() {
        let lg = default_line(&sigma5());
        let r = reduce(&lg);
        assert_eq!(lg.graph.m(), r.m() + 2);
        let claw = r.induced(&[4, 1, 2, 6]).unwrap();
        let mut degree = vec![0; 5];
        for e in claw.edges() {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        assert_eq!(&degree[1..], &[3, 1, 1, 1]);
        assert!(validate_circle_signs(&lg).unwrap().holds());
    }

    #[test]
    fn adjacency_identity() {
        let r = line_adjacency_identity(&sigma4(), &sigma4_orientation()).unwrap();
        assert!(r.holds());
        let k2 = SignedGraph::simple(2, [(1, 2, Plus)]).unwrap();
        let r = line_adjacency_identity(&k2, &Orientation::default_for(&k2)).unwrap();
        assert_eq!(r.line_adjacency, IntMatrix::zeros(1, 1));
        assert!(r.holds());
        let s5 = sigma5();
        assert!(line_adjacency_identity(&s5, &Orientation::default_for(&s5)).unwrap().holds());
    }

    #[test]
    fn eigenvalue_two() {
        let tree = SignedGraph::homogeneous(&Graph::path(5), Plus);
        let r = check_line_eigenvalues(&tree, 1e-10, 1e-7).unwrap();
        assert_eq!(r.multiplicity_of_two, 0);
        assert!(r.holds());
        let c5 = SignedGraph::homogeneous(&Graph::cycle(5), Minus);
        let r = check_line_eigenvalues(&c5, 1e-10, 1e-7).unwrap();
        assert_eq!(r.expected_multiplicity, 0);
        assert!(r.holds());
        let c4 = SignedGraph::homogeneous(&Graph::cycle(4), Plus);
        let r = check_line_eigenvalues(&c4, 1e-10, 1e-7).unwrap();
        assert_eq!(r.multiplicity_of_two, 1);
        assert!(r.holds());
        assert!(check_line_eigenvalues(&sigma5(), 1e-10, 1e-7).unwrap().holds());
    }

    #[test]
    fn root_vectors() {
        let pos = SignedGraph::simple(2, [(1, 2, Plus)]).unwrap();
        let v = dn_representation(&pos, &Orientation::default_for(&pos)).unwrap();
        assert_eq!(v.vectors, vec![vec![-1, 1]]);
        let neg = SignedGraph::simple(2, [(1, 2, Minus)]).unwrap();
        let v = dn_representation(&neg, &Orientation::default_for(&neg)).unwrap();
        assert_eq!(v.vectors, vec![vec![-1, -1]]);

        let s = dn_representation(&sigma4(), &sigma4_orientation()).unwrap();
        assert!(s.in_root_system());
        assert_eq!(s.vectors[0], vec![-1, 1, 0, 0]);
        let lg = line_graph(&sigma4(), &sigma4_orientation()).unwrap();
        assert!(s.represents(&reduce(&lg).negate()));
        assert!(!s.represents(&reduce(&lg)));
    }

    #[test]
    fn generalized_line_graphs_are_all_negative_classes() {
        let glg = generalized_line_graph(&Graph::complete(3), &[0, 1, 2]).unwrap();
        assert_eq!(glg.n(), 9);
        let all_negative = glg.with_signs(&vec![Minus; glg.m()]).unwrap();
        assert!(switching_equivalent(&glg, &all_negative).unwrap().is_some());

        let plain = generalized_line_graph(&Graph::cycle(5), &[0; 5]).unwrap();
        let minus = plain.with_signs(&vec![Minus; plain.m()]).unwrap();
        assert!(switching_equivalent(&plain, &minus).unwrap().is_some());
        assert!(with_negative_digons(&Graph::complete(3), &[1]).is_err());
    }

    #[test]
    fn induced_subgraph_with_eigenvalue_two() {
        let c4 = SignedGraph::homogeneous(&Graph::cycle(4), Plus);
        let r = check_eigenvalue_two_subgraph(&c4, 1e-9).unwrap();
        assert_eq!(r.witness, Some(vec![1, 2, 3, 4]));

        let pendant = SignedGraph::homogeneous(
            &Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5)]).unwrap(),
            Plus,
        );
        let r = check_eigenvalue_two_subgraph(&pendant, 1e-9).unwrap();
        assert!(r.largest > 2.0 && r.applicable);
        assert_eq!(r.witness, Some(vec![1, 2, 3, 4]));

        let p3 = SignedGraph::homogeneous(&Graph::path(3), Plus);
        let r = check_eigenvalue_two_subgraph(&p3, 1e-9).unwrap();
        assert!(!r.applicable && r.witness.is_none() && r.holds());
    }
}
