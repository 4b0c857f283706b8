//! Eigenvalues, exact ranks, and the spectral theorems built on them.
//!
//! Eigenvalues come from a cyclic Jacobi iteration on dense symmetric
//! matrices. Ranks and determinants are exact: fraction-free elimination
//! over the integers, or plain elimination over GF(2).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::balance::{balanced_component_count, is_antibalanced, switching_equivalent};
use crate::error::{Error, Result};
use crate::gf2::Bits;
use crate::graph::{EdgeId, Sign, SignedGraph, Vertex};
use crate::matrix::{adjacency, degrees, kirchhoff, underlying_adjacency, IntMatrix};

/// Default absolute tolerance for eigenvalue comparisons.
pub const DEFAULT_TOL: f64 = 1e-7;

/// Width used to group numerically equal eigenvalues.
pub const CLUSTER_WIDTH: f64 = 1e-7;

const MAX_SWEEPS: usize = 100;

/// Real eigenvalues in descending order, with multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ¹`, the largest eigenvalue.
    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Number of eigenvalues within `width` of `target`.
    pub fn multiplicity(&self, target: f64, width: f64) -> usize {
        self.values
            .iter()
            .filter(|&&x| (x - target).abs() <= width)
            .count()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Elementwise comparison of two sorted spectra.
    pub fn agrees_with(&self, other: &Spectrum, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| (a - b).abs() <= tol)
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Tolerance(format!("{tol} is not a positive finite number")))
    }
}

/// Eigenvalues of a symmetric integer matrix.
pub fn eig_sym(m: &IntMatrix, tol: f64) -> Result<Spectrum> {
    check_tol(tol)?;
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let a: Vec<f64> = m.entries().iter().map(|&x| x as f64).collect();
    Ok(Spectrum {
        values: jacobi_eigenvalues(a, m.rows(), tol),
        tol,
    })
}

/// Cyclic Jacobi sweeps over the upper triangle in row order. The
/// off-diagonal mass bounds the eigenvalue error, so iteration stops once it
/// falls well below `tol`.
fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize, tol: f64) -> Vec<f64> {
    let idx = |i: usize, j: usize| i * n + j;
    let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let floor = (tol * 1e-3).max(norm * 4.0 * f64::EPSILON);
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += 2.0 * a[idx(i, j)] * a[idx(i, j)];
            }
        }
        if off.sqrt() <= floor {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[idx(k, p)] = new_kp;
                    a[idx(p, k)] = new_kp;
                    a[idx(k, q)] = new_kq;
                    a[idx(q, k)] = new_kq;
                }
                a[idx(p, p)] = app - t * apq;
                a[idx(q, q)] = aqq + t * apq;
                a[idx(p, q)] = 0.0;
                a[idx(q, p)] = 0.0;
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    values
}

/// Fraction-free (Bareiss) elimination. Returns the rank, and for a square
/// matrix the determinant.
fn bareiss(m: &IntMatrix) -> (usize, Option<BigInt>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut negate = false;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            a.swap(pivot, rank);
            negate = !negate;
        }
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = (&a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    let det = (rows == cols).then(|| {
        if rank < rows {
            BigInt::zero()
        } else if rows == 0 {
            BigInt::one()
        } else if negate {
            -prev.clone()
        } else {
            prev.clone()
        }
    });
    (rank, det)
}

/// Exact rank over the rationals.
pub fn rank_rational(m: &IntMatrix) -> usize {
    bareiss(m).0
}

/// Exact determinant of a square matrix.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    Ok(bareiss(m).1.expect("square"))
}

/// Rank of the matrix reduced mod 2.
pub fn rank_gf2(m: &IntMatrix) -> usize {
    let mut rows: Vec<Bits> = (0..m.rows())
        .map(|i| {
            Bits::from_indices(
                m.cols(),
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x.rem_euclid(2) == 1)
                    .map(|(j, _)| j),
            )
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(p, rank);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        rank += 1;
    }
    rank
}

/// Balance read off the spectrum: `A(Σ)` and `A(|Σ|)` have the same
/// eigenvalues exactly when `Σ` is balanced.
pub fn acharya_balance(g: &SignedGraph, tol: f64) -> Result<bool> {
    let signed = eig_sym(&adjacency(g), tol)?;
    let unsigned = eig_sym(&underlying_adjacency(g), tol)?;
    Ok(signed.agrees_with(&unsigned, tol))
}

/// The net degree, when `j` is an eigenvector of both `A(|Σ|)` and `A(Σ)`.
pub fn regular_by_eigenvector(g: &SignedGraph, tol: f64) -> Result<Option<i64>> {
    check_tol(tol)?;
    let apply = |m: &IntMatrix| -> Vec<f64> {
        (0..m.rows())
            .map(|i| m.row(i).iter().map(|&x| x as f64).sum())
            .collect()
    };
    let constant = |v: &[f64]| v.iter().all(|x| (x - v[0]).abs() <= tol);
    let signed = apply(&adjacency(g));
    let unsigned = apply(&underlying_adjacency(g));
    if signed.is_empty() {
        return Ok(None);
    }
    Ok((constant(&signed) && constant(&unsigned)).then(|| signed[0].round() as i64))
}

/// Eigenvalue facts for a signed graph with `k`-regular underlying graph.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularBoundReport {
    pub k: usize,
    pub largest: f64,
    pub multiplicity_of_k: usize,
    pub balanced_components: usize,
}

impl RegularBoundReport {
    pub fn bounded(&self, tol: f64) -> bool {
        self.largest <= self.k as f64 + tol
    }

    pub fn multiplicity_matches(&self) -> bool {
        self.multiplicity_of_k == self.balanced_components
    }
}

/// With `|Σ|` `k`-regular, every eigenvalue is at most `k` and `k` occurs
/// once per balanced component.
pub fn check_regular_bound(g: &SignedGraph, tol: f64) -> Result<RegularBoundReport> {
    let d = degrees(g);
    let k = d.first().map_or(0, |x| x.underlying);
    if d.iter().any(|x| x.underlying != k) {
        return Err(Error::NotRegular);
    }
    let spectrum = eig_sym(&adjacency(g), tol)?;
    Ok(RegularBoundReport {
        k,
        largest: spectrum.largest().unwrap_or(0.0),
        multiplicity_of_k: spectrum.multiplicity(k as f64, tol),
        balanced_components: balanced_component_count(g).0,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct InterlacingReport {
    /// `None` for the empty subgraph.
    pub sub_largest: Option<f64>,
    pub largest: f64,
    pub holds: bool,
}

/// `λ¹` of an induced subgraph never exceeds `λ¹` of the whole graph.
pub fn check_interlacing_adj(
    g: &SignedGraph,
    sub: &[Vertex],
    tol: f64,
) -> Result<InterlacingReport> {
    let h = g.induced(sub)?;
    let largest = eig_sym(&adjacency(g), tol)?.largest().unwrap_or(0.0);
    let sub_largest = eig_sym(&adjacency(&h), tol)?.largest();
    Ok(InterlacingReport {
        sub_largest,
        largest,
        holds: sub_largest.map_or(true, |s| s <= largest + tol),
    })
}

/// Largest Kirchhoff eigenvalue; 0 for the empty graph.
pub fn kirchhoff_largest(g: &SignedGraph, tol: f64) -> Result<f64> {
    Ok(eig_sym(&kirchhoff(g), tol)?.largest().unwrap_or(0.0))
}

/// Bounds on the largest Kirchhoff eigenvalue `λ¹K`.
///
/// 1. `λ¹K(Γ, σ) ≤ λ¹K(-Γ)`, tight exactly for antibalanced `σ` (connected
///    `Γ`);
/// 2. `λ¹K(Σ) ≤ 2(n - 1)`, tight exactly when `Σ` switches to `-Kn`;
/// 3. `λ¹K(Σ⁺) + λ¹K(Σ⁻) ≥ λ¹K(Σ) ≥ max(λ¹K(Σ⁺), λ¹K(Σ⁻))`;
/// 4. `λ¹K(Σ) ≥ 1 + max degree`, reported as a flag only.
#[derive(Clone, Debug, PartialEq)]
pub struct KirchhoffBoundsReport {
    pub largest: f64,
    pub connected: bool,
    pub negated_largest: f64,
    pub bound1: bool,
    pub bound1_tight: bool,
    pub antibalanced: bool,
    pub ceiling: f64,
    pub bound2: bool,
    pub bound2_tight: bool,
    pub switches_to_negative_complete: bool,
    pub positive_largest: f64,
    pub negative_largest: f64,
    pub bound3: bool,
    pub max_degree: usize,
    pub bound4: bool,
}

impl KirchhoffBoundsReport {
    /// Tightness of bound 1 matches antibalance (checked for connected
    /// graphs only).
    pub fn bound1_equality_consistent(&self) -> bool {
        !self.connected || self.bound1_tight == self.antibalanced
    }

    pub fn bound2_equality_consistent(&self) -> bool {
        self.bound2_tight == self.switches_to_negative_complete
    }

    /// Every asserted bound and equality case; bound 4 is not included.
    pub fn holds(&self) -> bool {
        self.bound1
            && self.bound2
            && self.bound3
            && self.bound1_equality_consistent()
            && self.bound2_equality_consistent()
    }
}

pub fn check_kirchhoff_bounds(g: &SignedGraph, tol: f64) -> Result<KirchhoffBoundsReport> {
    if g.has_parallel_edges() {
        return Err(Error::NotSimple);
    }
    let n = g.n();
    let largest = kirchhoff_largest(g, tol)?;
    let all_negative = g.with_signs(&vec![Sign::Minus; g.m()])?;
    let negated_largest = kirchhoff_largest(&all_negative, tol)?;
    let antibalanced = is_antibalanced(g).balanced;

    let ceiling = 2.0 * n.saturating_sub(1) as f64;
    let complete = g.m() == n * n.saturating_sub(1) / 2;
    let switches_to_negative_complete =
        complete && switching_equivalent(g, &all_negative)?.is_some();

    let positive_largest = kirchhoff_largest(&g.part(Sign::Plus), tol)?;
    let negative_largest = kirchhoff_largest(&g.part(Sign::Minus), tol)?;
    let max_degree = degrees(g).iter().map(|d| d.underlying).max().unwrap_or(0);

    Ok(KirchhoffBoundsReport {
        largest,
        connected: g.is_connected(),
        negated_largest,
        bound1: largest <= negated_largest + tol,
        bound1_tight: (largest - negated_largest).abs() <= tol,
        antibalanced,
        ceiling,
        bound2: largest <= ceiling + tol,
        bound2_tight: (largest - ceiling).abs() <= tol,
        switches_to_negative_complete,
        positive_largest,
        negative_largest,
        bound3: positive_largest + negative_largest + tol >= largest
            && largest + tol >= positive_largest.max(negative_largest),
        max_degree,
        bound4: largest + tol >= 1.0 + max_degree as f64,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeInterlacingReport {
    pub full: Spectrum,
    pub deleted: Spectrum,
    /// First index `i` (from 0) where the chain breaks.
    pub violation: Option<usize>,
}

impl EdgeInterlacingReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// `λⁱK(Σ) ≥ λⁱK(Σ \ e) ≥ λⁱ⁺¹K(Σ)` for every `i`.
pub fn check_kirchhoff_edge_interlacing(
    g: &SignedGraph,
    e: EdgeId,
    tol: f64,
) -> Result<EdgeInterlacingReport> {
    let h = g.delete_edge(e)?;
    let full = eig_sym(&kirchhoff(g), tol)?;
    let deleted = eig_sym(&kirchhoff(&h), tol)?;
    let n = full.len();
    let violation = (0..n).find(|&i| {
        let upper = full.values[i] + tol >= deleted.values[i];
        let lower = i + 1 == n || deleted.values[i] + tol >= full.values[i + 1];
        !(upper && lower)
    });
    Ok(EdgeInterlacingReport {
        full,
        deleted,
        violation,
    })
}

/// Eigenvalues of `K` within `tol` of zero.
pub fn kirchhoff_nullity(g: &SignedGraph, tol: f64) -> Result<usize> {
    Ok(eig_sym(&kirchhoff(g), tol)?.multiplicity(0.0, tol))
}
