//! Exact integer matrices of a signed graph.
//!
//! Nothing in this module touches floating point. Rows are indexed by vertex
//! (`v` at row `v - 1`) and incidence columns by edge id (`e` at column
//! `e - 1`).

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::graph::{Graph, Orientation, Sign, SignedGraph, Vertex};

/// A dense row-major matrix of `i64`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// `J`, the all-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![1; rows * cols],
        }
    }

    /// The all-ones column vector `j`.
    pub fn ones_vector(n: usize) -> IntMatrix {
        IntMatrix::ones(n, 1)
    }

    pub fn diagonal(entries: &[i64]) -> IntMatrix {
        let mut m = IntMatrix::zeros(entries.len(), entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    /// `Diag(θ)` for a sign vector.
    pub fn sign_diagonal(signs: &[Sign]) -> IntMatrix {
        IntMatrix::diagonal(&signs.iter().map(|s| s.value()).collect::<Vec<_>>())
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Entrywise absolute value.
    pub fn abs(&self) -> IntMatrix {
        self.map(i64::abs)
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> IntMatrix {
        self.map(|x| c * x)
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// `self^power` for a square matrix; `power = 0` gives `I`.
    pub fn pow(&self, power: u32) -> IntMatrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut out = IntMatrix::identity(self.rows);
        for _ in 0..power {
            out = &out * self;
        }
        out
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("dimension mismatch in product")
    }
}

fn zip_with(a: &IntMatrix, b: &IntMatrix, f: impl Fn(i64, i64) -> i64) -> IntMatrix {
    assert!(
        a.rows == b.rows && a.cols == b.cols,
        "dimension mismatch: {}x{} and {}x{}",
        a.rows,
        a.cols,
        b.rows,
        b.cols
    );
    IntMatrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(&x, &y)| f(x, y)).collect(),
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        self.map(|x| -x)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `A(Σ)`: entry `(i, j)` is the sum of the signs of all `v_i v_j` edges, so
/// a positive and a negative edge on the same pair cancel.
pub fn adjacency(g: &SignedGraph) -> IntMatrix {
    let mut a = IntMatrix::zeros(g.n(), g.n());
    for e in g.edges() {
        a[(e.u - 1, e.v - 1)] += e.sign.value();
        a[(e.v - 1, e.u - 1)] += e.sign.value();
    }
    a
}

/// `A(|Σ|)`: entry `(i, j)` counts the `v_i v_j` edges.
pub fn underlying_adjacency(g: &SignedGraph) -> IntMatrix {
    let mut a = IntMatrix::zeros(g.n(), g.n());
    for e in g.edges() {
        a[(e.u - 1, e.v - 1)] += 1;
        a[(e.v - 1, e.u - 1)] += 1;
    }
    a
}

/// Adjacency matrix of an unsigned simple graph.
pub fn graph_adjacency(gamma: &Graph) -> IntMatrix {
    let mut a = IntMatrix::zeros(gamma.n(), gamma.n());
    for &(u, v) in gamma.edges() {
        a[(u - 1, v - 1)] = 1;
        a[(v - 1, u - 1)] = 1;
    }
    a
}

/// `Ā = J - I - A(|Σ|)`, the adjacency matrix of the complement of the
/// underlying graph.
pub fn complement_adjacency(g: &SignedGraph) -> IntMatrix {
    let n = g.n();
    let abs = underlying_adjacency(g).map(|x| x.min(1));
    &(&IntMatrix::ones(n, n) - &IntMatrix::identity(n)) - &abs
}

/// The Seidel matrix: 0 on the diagonal, `-1` for edges, `+1` for non-edges.
pub fn seidel(gamma: &Graph) -> IntMatrix {
    let n = gamma.n();
    let a = graph_adjacency(gamma);
    &(&(&IntMatrix::ones(n, n) - &IntMatrix::identity(n)) - &a) - &a
}

/// The incidence matrix `Η(Σ, η)`: column `e` holds `η(u, e)` in row `u` and
/// `η(v, e)` in row `v`.
pub fn incidence(g: &SignedGraph, o: &Orientation) -> Result<IntMatrix> {
    o.check(g)?;
    let mut h = IntMatrix::zeros(g.n(), g.m());
    for (e, &(eu, ev)) in g.edges().iter().zip(o.pairs()) {
        h[(e.u - 1, e.id - 1)] = eu.value();
        h[(e.v - 1, e.id - 1)] = ev.value();
    }
    Ok(h)
}

/// `D(|Σ|)`, the diagonal matrix of underlying degrees.
pub fn degree_matrix(g: &SignedGraph) -> IntMatrix {
    IntMatrix::diagonal(
        &degrees(g)
            .iter()
            .map(|d| d.underlying as i64)
            .collect::<Vec<_>>(),
    )
}

/// The Kirchhoff matrix `K(Σ) = D(|Σ|) - A(Σ)`.
pub fn kirchhoff(g: &SignedGraph) -> IntMatrix {
    &degree_matrix(g) - &adjacency(g)
}

/// Degrees of one vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Degree {
    pub underlying: usize,
    pub positive: usize,
    pub negative: usize,
    /// `positive - negative`.
    pub net: i64,
}

/// Per-vertex degrees; parallel edges count separately.
pub fn degrees(g: &SignedGraph) -> Vec<Degree> {
    let mut d = vec![Degree::default(); g.n()];
    for e in g.edges() {
        for x in [e.u, e.v] {
            let entry = &mut d[x - 1];
            entry.underlying += 1;
            match e.sign {
                Sign::Plus => entry.positive += 1,
                Sign::Minus => entry.negative += 1,
            }
            entry.net += e.sign.value();
        }
    }
    d
}

/// `(k⁺, k⁻)` when both `Σ⁺` and `Σ⁻` are regular.
pub fn is_regular(g: &SignedGraph) -> Option<(usize, usize)> {
    let d = degrees(g);
    let first = d.first().map_or((0, 0), |x| (x.positive, x.negative));
    d.iter()
        .all(|x| (x.positive, x.negative) == first)
        .then_some(first)
}

/// Symbols of the four-valued relation matrix.
///
/// Read each symbol as the set of signs it allows: `O = {}`, `P = {+}`,
/// `N = {-}`, `A = {+, -}`. Addition is union and multiplication is the
/// elementwise product of sign sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArSymbol {
    O,
    P,
    N,
    A,
}

impl ArSymbol {
    fn bits(self) -> u8 {
        match self {
            ArSymbol::O => 0b00,
            ArSymbol::P => 0b01,
            ArSymbol::N => 0b10,
            ArSymbol::A => 0b11,
        }
    }

    fn from_bits(bits: u8) -> ArSymbol {
        match bits & 0b11 {
            0b00 => ArSymbol::O,
            0b01 => ArSymbol::P,
            0b10 => ArSymbol::N,
            _ => ArSymbol::A,
        }
    }

    pub fn allows(self, sign: Sign) -> bool {
        match sign {
            Sign::Plus => self.bits() & 0b01 != 0,
            Sign::Minus => self.bits() & 0b10 != 0,
        }
    }
}

impl Add for ArSymbol {
    type Output = ArSymbol;

    fn add(self, rhs: ArSymbol) -> ArSymbol {
        ArSymbol::from_bits(self.bits() | rhs.bits())
    }
}

impl Mul for ArSymbol {
    type Output = ArSymbol;

    fn mul(self, rhs: ArSymbol) -> ArSymbol {
        let (a, b) = (self.bits(), rhs.bits());
        let mut out = 0;
        if a & 1 != 0 && b & 1 != 0 || a & 2 != 0 && b & 2 != 0 {
            out |= 0b01;
        }
        if a & 1 != 0 && b & 2 != 0 || a & 2 != 0 && b & 1 != 0 {
            out |= 0b10;
        }
        ArSymbol::from_bits(out)
    }
}

impl fmt::Display for ArSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArSymbol::O => "o",
            ArSymbol::P => "p",
            ArSymbol::N => "n",
            ArSymbol::A => "a",
        })
    }
}

/// Square matrix over [`ArSymbol`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArMatrix {
    n: usize,
    data: Vec<ArSymbol>,
}

impl ArMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> ArSymbol {
        self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, s: ArSymbol) {
        self.data[i * self.n + j] = s;
    }

    /// `R - pI`: the diagonal reset to `o`.
    pub fn off_diagonal(&self) -> ArMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.set(i, i, ArSymbol::O);
        }
        m
    }

    pub fn product(&self, rhs: &ArMatrix) -> ArMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = ArMatrix {
            n,
            data: vec![ArSymbol::O; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                let s = (0..n).fold(ArSymbol::O, |acc, k| acc + self.get(i, k) * rhs.get(k, j));
                out.set(i, j, s);
            }
        }
        out
    }

    /// `self^power` for `power >= 1`.
    pub fn pow(&self, power: u32) -> ArMatrix {
        assert!(power >= 1, "power must be at least 1");
        let mut out = self.clone();
        for _ in 1..power {
            out = out.product(self);
        }
        out
    }
}

impl fmt::Display for ArMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// The four-symbol relation matrix `R`, with `p` on the diagonal.
pub fn ar_matrix(g: &SignedGraph) -> ArMatrix {
    let n = g.n();
    let mut m = ArMatrix {
        n,
        data: vec![ArSymbol::O; n * n],
    };
    for i in 0..n {
        m.set(i, i, ArSymbol::P);
    }
    for e in g.edges() {
        let s = match e.sign {
            Sign::Plus => ArSymbol::P,
            Sign::Minus => ArSymbol::N,
        };
        let cur = m.get(e.u - 1, e.v - 1);
        m.set(e.u - 1, e.v - 1, cur + s);
        m.set(e.v - 1, e.u - 1, cur + s);
    }
    m
}

/// Is there a walk of length `l` and sign `s` from `i` to `j`? Read off
/// `(R - pI)^l`.
pub fn ar_walk_exists(g: &SignedGraph, i: Vertex, j: Vertex, l: u32, s: Sign) -> Result<bool> {
    for v in [i, j] {
        if v == 0 || v > g.n() {
            return Err(Error::UnknownVertex { vertex: v, n: g.n() });
        }
    }
    if l == 0 {
        return Err(Error::ZeroLength);
    }
    let power = ar_matrix(g).off_diagonal().pow(l);
    Ok(power.get(i - 1, j - 1).allows(s))
}
