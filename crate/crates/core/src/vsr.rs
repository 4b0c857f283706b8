//! Very strong regularity.
//!
//! A signed simple graph is very strongly regular when
//! `A² - tA - kI = pĀ` and `Aj = ρ₀j` for integers `t, k, p, ρ₀`, where `Ā`
//! is the adjacency matrix of the complement of `|Σ|`. All arithmetic here
//! is exact.

use crate::error::{Error, Result};
use crate::graph::{Graph, Sign, SignedGraph};
use crate::matrix::{adjacency, complement_adjacency, IntMatrix};

/// Which of the four cases a very strongly regular signature falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VsrCase {
    /// All edges have one sign; `|Σ|` is strongly regular.
    HomogeneousSrg,
    /// Not homogeneous, `p = t = 0`: `A² = kI`.
    P0T0,
    /// Not homogeneous, `p = 0`, `t ≠ 0`.
    P0,
    /// Not homogeneous, `p ≠ 0`.
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VsrParameters {
    pub n: usize,
    pub t: i64,
    pub k: i64,
    pub p: i64,
    pub rho0: i64,
    pub case: VsrCase,
    /// `|Σ|` has no edges, so nothing constrains `t`; it is reported as 0.
    pub t_free: bool,
    /// `|Σ|` is complete, so nothing constrains `p`; it is reported as 0.
    pub p_free: bool,
}

impl VsrParameters {
    /// `p(n - 1 - k) = ρ₀(ρ₀ - t) - k`, from applying the first equation to
    /// the all-ones vector.
    pub fn eigenvector_identity(&self) -> bool {
        self.p * (self.n as i64 - 1 - self.k) == self.rho0 * (self.rho0 - self.t) - self.k
    }

    /// For `p = t = 0`, `√k`.
    pub fn sqrt_k(&self) -> Option<i64> {
        if self.p != 0 || self.t != 0 || self.k < 0 {
            return None;
        }
        let r = (self.k as f64).sqrt().round() as i64;
        (r * r == self.k).then_some(r)
    }

    /// For `p = 0`, the integer `s ≡ t (mod 2)` with
    /// `k = ((s - t)/2)((s + t)/2)` and `ρ₀ = (s + t)/2`.
    pub fn s(&self) -> Option<i64> {
        if self.p != 0 {
            return None;
        }
        let s = 2 * self.rho0 - self.t;
        ((s - self.t) / 2 * ((s + self.t) / 2) == self.k).then_some(s)
    }
}

/// Solve for `(t, k, p, ρ₀)` and verify both equations entrywise.
pub fn check_vsr(g: &SignedGraph) -> Result<Option<VsrParameters>> {
    if g.has_parallel_edges() {
        return Err(Error::NotSimple);
    }
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    let a = adjacency(g);
    let a2 = &a * &a;
    let abs = a.abs();

    let k = a2[(0, 0)];
    if (0..n).any(|i| a2[(i, i)] != k) {
        return Ok(None);
    }
    let rho0: i64 = a.row(0).iter().sum();
    if (0..n).any(|i| a.row(i).iter().sum::<i64>() != rho0) {
        return Ok(None);
    }
    let mut t = None;
    let mut p = None;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (slot, value) = if abs[(i, j)] == 1 {
                (&mut t, a2[(i, j)] * a[(i, j)])
            } else {
                (&mut p, a2[(i, j)])
            };
            match *slot {
                None => *slot = Some(value),
                Some(x) if x != value => return Ok(None),
                Some(_) => {}
            }
        }
    }
    let (t_free, p_free) = (t.is_none(), p.is_none());
    let (t, p) = (t.unwrap_or(0), p.unwrap_or(0));

    let lhs = &(&a2 - &a.scale(t)) - &IntMatrix::identity(n).scale(k);
    if lhs != complement_adjacency(g).scale(p) {
        return Ok(None);
    }

    let case = if g.is_homogeneous() {
        VsrCase::HomogeneousSrg
    } else if p != 0 {
        VsrCase::General
    } else if t != 0 {
        VsrCase::P0
    } else {
        VsrCase::P0T0
    };
    Ok(Some(VsrParameters {
        n,
        t,
        k,
        p,
        rho0,
        case,
        t_free,
        p_free,
    }))
}

/// A pair of vertices whose signed count disagrees with the parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairViolation {
    pub i: usize,
    pub j: usize,
    pub adjacent: bool,
    pub expected: i64,
    pub found: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VsrCountReport {
    pub pairs_checked: usize,
    /// Vertices whose degree is not `k` or net degree not `ρ₀`.
    pub degree_violations: Vec<usize>,
    pub violations: Vec<PairViolation>,
}

impl VsrCountReport {
    pub fn holds(&self) -> bool {
        self.degree_violations.is_empty() && self.violations.is_empty()
    }
}

/// Count by hand: for each edge `ij`, positive minus negative triangles on
/// it must be `t`; for each non-adjacent pair, positive minus negative
/// 2-paths must be `p`.
pub fn vsr_combinatorial_check(g: &SignedGraph, params: &VsrParameters) -> Result<VsrCountReport> {
    if g.has_parallel_edges() {
        return Err(Error::NotSimple);
    }
    let n = g.n();
    let mut sign: Vec<Vec<Option<Sign>>> = vec![vec![None; n + 1]; n + 1];
    for e in g.edges() {
        sign[e.u][e.v] = Some(e.sign);
        sign[e.v][e.u] = Some(e.sign);
    }
    let degree_violations = (1..=n)
        .filter(|&v| {
            let d = (1..=n).filter(|&w| sign[v][w].is_some()).count() as i64;
            let net: i64 = (1..=n).filter_map(|w| sign[v][w]).map(Sign::value).sum();
            d != params.k || net != params.rho0
        })
        .collect();
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            // signed 2-paths i - w - j
            let paths: i64 = (1..=n)
                .filter_map(|w| Some((sign[i][w]? * sign[w][j]?).value()))
                .sum();
            let (adjacent, expected, found) = match sign[i][j] {
                // each 2-path closes a triangle whose sign is its sign times σ(ij)
                Some(s) => (true, params.t, paths * s.value()),
                None => (false, params.p, paths),
            };
            let constrained = if adjacent { !params.t_free } else { !params.p_free };
            pairs_checked += 1;
            if constrained && expected != found {
                violations.push(PairViolation {
                    i,
                    j,
                    adjacent,
                    expected,
                    found,
                });
            }
        }
    }
    Ok(VsrCountReport {
        pairs_checked,
        degree_violations,
        violations,
    })
}

/// `c` when `WᵀW = cI` and every entry is `0` or `±1`.
pub fn is_weighing_matrix(m: &IntMatrix) -> Option<i64> {
    if m.entries().iter().any(|x| x.abs() > 1) {
        return None;
    }
    let w = &m.transpose() * m;
    let c = if w.rows() == 0 { 0 } else { w[(0, 0)] };
    (w == IntMatrix::identity(w.rows()).scale(c)).then_some(c)
}

/// Classical strong regularity parameters `(k, λ, μ)`; `λ` or `μ` is
/// `None` when there are no adjacent or no non-adjacent pairs.
pub fn srg_parameters(gamma: &Graph) -> Option<(usize, Option<usize>, Option<usize>)> {
    let n = gamma.n();
    let mut adj = vec![vec![false; n + 1]; n + 1];
    for &(u, v) in gamma.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let degrees = gamma.degrees();
    let k = *degrees.first()?;
    if degrees.iter().any(|&d| d != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 1..=n {
        for v in u + 1..=n {
            let common = (1..=n).filter(|&w| adj[u][w] && adj[v][w]).count();
            let slot = if adj[u][v] { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(x) if x != common => return None,
                Some(_) => {}
            }
        }
    }
    Some((k, lambda, mu))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrgReport {
    pub vsr: Option<VsrParameters>,
    pub classical: Option<(usize, Option<usize>, Option<usize>)>,
}

impl SrgReport {
    /// Both tests give the same verdict and the same parameters, with
    /// `t = λ` and `p = μ`.
    pub fn agree(&self) -> bool {
        match (&self.vsr, &self.classical) {
            (None, None) => true,
            (Some(v), Some((k, lambda, mu))) => {
                v.k == *k as i64
                    && v.t == lambda.unwrap_or(0) as i64
                    && v.p == mu.unwrap_or(0) as i64
                    && v.t_free == lambda.is_none()
                    && v.p_free == mu.is_none()
            }
            _ => false,
        }
    }
}

/// `+Γ` is very strongly regular exactly when `Γ` is strongly regular.
pub fn check_srg_equivalence(gamma: &Graph) -> Result<SrgReport> {
    Ok(SrgReport {
        vsr: check_vsr(&SignedGraph::homogeneous(gamma, Sign::Plus))?,
        classical: srg_parameters(gamma),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{sigma4, sigma4_digon};
    use crate::matrix::adjacency;
    use Sign::{Minus, Plus};

    fn params(g: &SignedGraph) -> Option<(i64, i64, i64, i64)> {
        check_vsr(g).unwrap().map(|v| (v.t, v.k, v.p, v.rho0))
    }

    #[test]
    fn five_cycles() {
        let c5 = SignedGraph::homogeneous(&Graph::cycle(5), Plus);
        assert_eq!(params(&c5), Some((0, 2, 1, 2)));
        assert_eq!(params(&c5.negate()), Some((0, 2, 1, -2)));
        let v = check_vsr(&c5).unwrap().unwrap();
        assert_eq!(v.case, VsrCase::HomogeneousSrg);
        assert!(v.eigenvector_identity());
        assert!(vsr_combinatorial_check(&c5, &v).unwrap().holds());
    }

    #[test]
    fn non_regular_is_rejected() {
        assert_eq!(params(&SignedGraph::homogeneous(&Graph::path(3), Plus)), None);
        assert_eq!(params(&sigma4()), None);
        assert_eq!(check_vsr(&sigma4_digon()), Err(Error::NotSimple));
    }

    #[test]
    fn complete_graph_leaves_p_free() {
        let k4 = SignedGraph::homogeneous(&Graph::complete(4), Plus);
        let v = check_vsr(&k4).unwrap().unwrap();
        assert_eq!((v.t, v.k, v.p, v.rho0), (2, 3, 0, 3));
        assert!(v.p_free && !v.t_free);
        let r = vsr_combinatorial_check(&k4, &v).unwrap();
        assert!(r.holds());
        assert_eq!(r.pairs_checked, 6);
    }

    #[test]
    fn octahedron() {
        let g = SignedGraph::homogeneous(&Graph::complete_multipartite(&[2, 2, 2]), Plus);
        let v = check_vsr(&g).unwrap().unwrap();
        assert_eq!((v.t, v.k, v.p, v.rho0), (2, 4, 4, 4));
        assert!(v.eigenvector_identity());
    }

    #[test]
    fn weighing_matrices_give_p0t0() {
        // K4,4 with a negative perfect matching: the blocks are J - 2I
        let gamma = Graph::complete_multipartite(&[4, 4]);
        let signs: Vec<Sign> = gamma
            .edges()
            .iter()
            .map(|&(u, v)| if v == u + 4 { Minus } else { Plus })
            .collect();
        let g = SignedGraph::homogeneous(&gamma, Plus).with_signs(&signs).unwrap();
        let v = check_vsr(&g).unwrap().unwrap();
        assert_eq!(v.case, VsrCase::P0T0);
        assert_eq!((v.t, v.k, v.p, v.rho0), (0, 4, 0, 2));
        assert_eq!(is_weighing_matrix(&adjacency(&g)), Some(4));
        assert_eq!(v.sqrt_k(), Some(2));
        assert_eq!(v.s(), Some(4));
        assert!(v.eigenvector_identity());
    }

    #[test]
    fn weighing() {
        assert_eq!(is_weighing_matrix(&IntMatrix::identity(3)), Some(1));
        assert_eq!(is_weighing_matrix(&IntMatrix::from_rows(&[[1, 1], [1, -1]])), Some(2));
        assert_eq!(is_weighing_matrix(&adjacency(&sigma4())), None);
        assert_eq!(is_weighing_matrix(&IntMatrix::from_rows(&[[2]])), None);
    }

    #[test]
    fn violations_are_listed() {
        let g = SignedGraph::homogeneous(&Graph::cycle(6), Plus);
        let v = VsrParameters {
            n: 6,
            t: 0,
            k: 2,
            p: 1,
            rho0: 2,
            case: VsrCase::HomogeneousSrg,
            t_free: false,
            p_free: false,
        };
        let r = vsr_combinatorial_check(&g, &v).unwrap();
        assert!(!r.holds());
        // antipodal pairs have no common neighbour
        assert!(r.violations.iter().any(|x| (x.i, x.j) == (1, 4) && x.found == 0));
    }

    #[test]
    fn strongly_regular_graphs() {
        for (g, srg) in [
            (Graph::cycle(5), true),
            (Graph::path(4), false),
            (Graph::petersen(), true),
            (Graph::cycle(6), false),
            (Graph::complete_multipartite(&[3, 3]), true),
        ] {
            let r = check_srg_equivalence(&g).unwrap();
            assert!(r.agree());
            assert_eq!(r.vsr.is_some(), srg);
        }
        let r = check_srg_equivalence(&Graph::petersen()).unwrap();
        assert_eq!(r.classical, Some((3, Some(0), Some(1))));
    }
}
