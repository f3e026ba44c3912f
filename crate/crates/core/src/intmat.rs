//! Exact integer matrix algebra: unimodular column reduction, kernels in
//! Hermite normal form, Smith invariants, determinants and signatures.
//!
//! Everything runs on [`BigInt`]; nothing here touches floating point.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = v.clone().into();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<BigInt>], nrows: usize) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), nrows);
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Entries as `i64`; panics on overflow.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        self.to_rows()
            .into_iter()
            .map(|r| r.iter().map(|v| i64::try_from(v).expect("entry fits i64")).collect())
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        s += &self[(i, j)] * x;
                    }
                }
                s
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * q;
            self[(i, dst)] -= v;
        }
    }

    /// row[dst] += q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * q;
            self[(dst, j)] += v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    pub fn rank(&self) -> usize {
        column_reduce(self).rank
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `a * u = h` with `u` unimodular and the trailing `ncols - rank` columns of
/// `h` zero. `u_inv` is the exact inverse of `u`.
#[derive(Clone, Debug)]
pub struct ColumnReduction {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub rank: usize,
}

impl ColumnReduction {
    /// Columns of `u` spanning the integer kernel of `a`.
    pub fn kernel_columns(&self) -> Vec<Vec<BigInt>> {
        (self.rank..self.u.ncols()).map(|j| self.u.column(j)).collect()
    }
}

pub fn column_reduce(a: &IntMatrix) -> ColumnReduction {
    let n = a.ncols();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut u_inv = IntMatrix::identity(n);
    let mut p = 0;
    for r in 0..a.nrows() {
        if p == n {
            break;
        }
        loop {
            // smallest nonzero |h[r][j]| for j >= p
            let best = (p..n)
                .filter(|&j| !h[(r, j)].is_zero())
                .min_by(|&x, &y| h[(r, x)].abs().cmp(&h[(r, y)].abs()));
            let Some(j) = best else { break };
            h.swap_cols(p, j);
            u.swap_cols(p, j);
            u_inv.swap_rows(p, j);
            let mut done = true;
            for k in p + 1..n {
                if h[(r, k)].is_zero() {
                    continue;
                }
                let q = h[(r, k)].div_floor(&h[(r, p)]);
                h.col_axpy(k, p, &q);
                u.col_axpy(k, p, &q);
                u_inv.row_axpy(p, k, &q);
                if !h[(r, k)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !h[(r, p)].is_zero() {
            if h[(r, p)].is_negative() {
                h.negate_col(p);
                u.negate_col(p);
                u_inv.negate_row(p);
            }
            p += 1;
        }
    }
    ColumnReduction { h, u, u_inv, rank: p }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: echelon,
/// positive pivots, entries above a pivot reduced into `[0, pivot)`, zero rows
/// dropped. Two generating sets of one lattice give the same output.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let n = rows[0].len();
    // HNF of the rows = transpose of the column reduction of the transpose
    let m = IntMatrix::from_columns(rows, n);
    let red = column_reduce(&m);
    let mut basis: Vec<Vec<BigInt>> = (0..red.rank).map(|j| red.h.column(j)).collect();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero column"))
        .collect();
    for k in 0..basis.len() {
        let pc = pivots[k];
        for i in 0..k {
            let q = basis[i][pc].div_floor(&basis[k][pc]);
            if !q.is_zero() {
                let sub: Vec<BigInt> = basis[k].iter().map(|x| x * &q).collect();
                for (a, b) in basis[i].iter_mut().zip(sub) {
                    *a -= b;
                }
            }
        }
    }
    basis
}

/// Integer kernel `{v : a v = 0}` as a Hermite-normal-form basis.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    hermite_normal_form(&column_reduce(a).kernel_columns())
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of the Smith normal form.
pub fn smith_invariants(a: &IntMatrix) -> Vec<BigInt> {
    let mut m = a.clone();
    let (r, c) = (m.nrows(), m.ncols());
    let mut out = Vec::new();
    let mut t = 0;
    while t < r.min(c) {
        let pos = (t..r)
            .flat_map(|i| (t..c).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[(i, j)].is_zero())
            .min_by(|&x, &y| m[x].abs().cmp(&m[y].abs()));
        let Some((pi, pj)) = pos else { break };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if !m[(i, t)].is_zero() {
                    let q = m[(i, t)].div_floor(&m[(t, t)]);
                    let q = -q;
                    m.row_axpy(i, t, &q);
                    if !m[(i, t)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !m[(t, j)].is_zero() {
                    let q = m[(t, j)].div_floor(&m[(t, t)]);
                    m.col_axpy(j, t, &q);
                    if !m[(t, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                // divisibility condition against the rest of the block
                let bad = (t + 1..r)
                    .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&m[(i, j)] % &m[(t, t)]).is_zero());
                match bad {
                    Some((i, _)) => {
                        let one = BigInt::one();
                        m.row_axpy(t, i, &one);
                    }
                    None => break,
                }
            } else {
                let pos = (t..r)
                    .flat_map(|i| (t..c).map(move |j| (i, j)))
                    .filter(|&(i, j)| (i == t || j == t) && !m[(i, j)].is_zero())
                    .min_by(|&x, &y| m[x].abs().cmp(&m[y].abs()))
                    .expect("pivot row/column nonzero");
                m.swap_rows(t, pos.0);
                m.swap_cols(t, pos.1);
            }
        }
        out.push(m[(t, t)].abs());
        t += 1;
    }
    out
}

/// Whether the rows span a saturated sublattice (extend to a basis).
pub fn is_primitive(rows: &[Vec<BigInt>]) -> bool {
    if rows.is_empty() {
        return true;
    }
    let m = IntMatrix::from_rows(rows);
    let inv = smith_invariants(&m);
    inv.len() == rows.len() && inv.iter().all(|d| d.is_one())
}

/// Solves `basis_cols * c = v` over the integers.
pub fn solve_in_span(basis_cols: &[Vec<BigInt>], v: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = v.len();
    let bt = IntMatrix::from_columns(basis_cols, n);
    // bt * u = h ; solve h y = v by forward substitution, then c = u y
    let red = column_reduce(&bt);
    let k = bt.ncols();
    let mut y = vec![BigInt::zero(); k];
    let mut residual = v.to_vec();
    let mut col = 0;
    for r in 0..n {
        if col >= red.rank {
            break;
        }
        if red.h[(r, col)].is_zero() {
            continue;
        }
        let piv = &red.h[(r, col)];
        let (q, rem) = residual[r].div_rem(piv);
        if !rem.is_zero() {
            return Err(Error::NotInSpan(format!("non-integral coefficient at row {r}")));
        }
        for i in 0..n {
            let d = &red.h[(i, col)] * &q;
            residual[i] -= d;
        }
        y[col] = q;
        col += 1;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return Err(Error::NotInSpan("nonzero residual".into()));
    }
    Ok(red.u.mul_vec(&y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.plus, self.minus, self.zero)
    }
}

/// Symmetric integer matrix (a Gram matrix).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerSymMatrix(IntMatrix);

impl IntegerSymMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::Precondition("Gram matrix must be square".into()));
        }
        for i in 0..m.nrows() {
            for j in 0..i {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::Precondition(format!("asymmetric at ({i},{j})")));
                }
            }
        }
        Ok(IntegerSymMatrix(m))
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows))
    }

    /// The Gram matrix `B^T G B` of the vectors given as columns of `basis`.
    pub fn congruent(&self, basis_cols: &[Vec<BigInt>]) -> IntegerSymMatrix {
        let b = IntMatrix::from_columns(basis_cols, self.dim());
        IntegerSymMatrix(b.transpose().mul(&self.0).mul(&b))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.0[(i, j)]
    }

    pub fn pairing(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        let mv = self.0.mul_vec(v);
        u.iter().zip(&mv).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self, v: &[BigInt]) -> BigInt {
        self.pairing(v, v)
    }

    pub fn is_even(&self) -> bool {
        (0..self.dim()).all(|i| self.get(i, i).is_even())
    }

    pub fn all_entries_even(&self) -> bool {
        self.0.data.iter().all(|v| v.is_even())
    }

    /// Scales the form by `m` (the lattice `L(m)`).
    pub fn scaled(&self, m: i64) -> IntegerSymMatrix {
        let mut out = self.0.clone();
        let f = BigInt::from(m);
        for v in out.data.iter_mut() {
            *v *= &f;
        }
        IntegerSymMatrix(out)
    }

    /// Exact division of every entry; fails if some entry is not divisible.
    pub fn divided(&self, m: i64) -> Result<IntegerSymMatrix> {
        let f = BigInt::from(m);
        let mut out = self.0.clone();
        for v in out.data.iter_mut() {
            let (q, r) = v.div_rem(&f);
            if !r.is_zero() {
                return Err(Error::Invariant(format!("entry {v} not divisible by {m}")));
            }
            *v = q;
        }
        Ok(IntegerSymMatrix(out))
    }

    pub fn direct_sum(&self, other: &IntegerSymMatrix) -> IntegerSymMatrix {
        let (a, b) = (self.dim(), other.dim());
        let mut m = IntMatrix::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..a {
                m[(i, j)] = self.get(i, j).clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                m[(a + i, a + j)] = other.get(i, j).clone();
            }
        }
        IntegerSymMatrix(m)
    }

    pub fn submatrix(&self, idx: &[usize]) -> IntegerSymMatrix {
        let mut m = IntMatrix::zeros(idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(a, b)] = self.get(i, j).clone();
            }
        }
        IntegerSymMatrix(m)
    }

    pub fn determinant(&self) -> BigInt {
        self.0.determinant()
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    /// Integer basis of the radical `{v : M v = 0}` in Hermite normal form.
    pub fn snf_kernel(&self) -> Vec<Vec<BigInt>> {
        integer_kernel(&self.0)
    }

    /// Determinant of a nondegenerate lattice.
    pub fn det_lattice(&self) -> Result<BigInt> {
        let d = self.determinant();
        if d.is_zero() {
            return Err(Error::Degenerate {
                rank: self.rank(),
                dim: self.dim(),
            });
        }
        Ok(d)
    }

    /// Inertia by exact rational symmetric elimination. A zero pivot with a
    /// nonzero off-diagonal entry `a_ij` is handled by the congruence
    /// `row_i += row_j, col_i += col_j`, which puts `2 a_ij` on the diagonal.
    pub fn exact_signature(&self) -> Signature {
        let n = self.dim();
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| BigRational::from_integer(self.get(i, j).clone())).collect())
            .collect();
        let mut active: Vec<usize> = (0..n).collect();
        let mut sig = Signature { plus: 0, minus: 0, zero: 0 };
        while !active.is_empty() {
            let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
            let p = match pivot {
                Some(p) => p,
                None => {
                    let pair = active.iter().flat_map(|&i| active.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !a[i][j].is_zero());
                    let Some((i, j)) = pair else {
                        sig.zero += active.len();
                        break;
                    };
                    for &k in &active {
                        let v = a[j][k].clone();
                        a[i][k] += v;
                    }
                    for &k in &active {
                        let v = a[k][j].clone();
                        a[k][i] += v;
                    }
                    i
                }
            };
            let d = a[p][p].clone();
            if d.is_positive() {
                sig.plus += 1;
            } else {
                sig.minus += 1;
            }
            active.retain(|&i| i != p);
            for &i in &active {
                if a[i][p].is_zero() {
                    continue;
                }
                let f = &a[i][p] / &d;
                for &j in &active {
                    if !a[p][j].is_zero() {
                        let v = &f * &a[p][j];
                        a[i][j] -= v;
                    }
                }
            }
        }
        sig
    }
}

impl fmt::Debug for IntegerSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Standard Gram matrices (negative-definite root lattice convention).
pub mod standard {
    use super::IntegerSymMatrix;

    pub fn hyperbolic_plane() -> IntegerSymMatrix {
        IntegerSymMatrix::from_rows(&[vec![0i64, 1], vec![1, 0]]).unwrap()
    }

    /// Negative Cartan matrix from an edge list on `n` vertices.
    fn negative_cartan(n: usize, edges: &[(usize, usize)]) -> IntegerSymMatrix {
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = -2;
        }
        for &(a, b) in edges {
            rows[a][b] = 1;
            rows[b][a] = 1;
        }
        IntegerSymMatrix::from_rows(&rows).unwrap()
    }

    pub fn a_n(n: usize) -> IntegerSymMatrix {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        negative_cartan(n, &edges)
    }

    pub fn d_n(n: usize) -> IntegerSymMatrix {
        assert!(n >= 4);
        let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
        edges.push((n - 3, n - 1));
        negative_cartan(n, &edges)
    }

    pub fn e8() -> IntegerSymMatrix {
        // chain 0-1-2-3-4-5-6 with 7 attached to 4
        let mut edges: Vec<_> = (1..7).map(|i| (i - 1, i)).collect();
        edges.push((4, 7));
        negative_cartan(8, &edges)
    }
}
