//! Sparse column-major matrices over a ring and exact elimination over a field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Ring};

/// Sparse vector: `(index, value)` pairs, sorted by index, no zero values.
pub type SparseVec<R> = Vec<(usize, R)>;

/// Dense scratch space for summing sparse vectors.
pub struct Accumulator<R> {
    slots: Vec<Option<R>>,
    touched: Vec<usize>,
}

impl<R: Ring> Accumulator<R> {
    pub fn new(dim: usize) -> Self {
        Accumulator { slots: vec![None; dim], touched: Vec::new() }
    }

    pub fn add(&mut self, i: usize, v: &R) {
        match &mut self.slots[i] {
            Some(x) => *x = x.add(v),
            slot @ None => {
                *slot = Some(v.clone());
                self.touched.push(i);
            }
        }
    }

    pub fn add_owned(&mut self, i: usize, v: R) {
        match &mut self.slots[i] {
            Some(x) => *x = x.add(&v),
            slot @ None => {
                *slot = Some(v);
                self.touched.push(i);
            }
        }
    }

    /// Drains into a sorted sparse vector, dropping cancelled entries.
    pub fn take(&mut self) -> SparseVec<R> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let v = self.slots[i].take().expect("touched slot");
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

/// Sorts, merges duplicate indices and drops zeros.
pub fn normalize_sparse<R: Ring>(mut v: Vec<(usize, R)>) -> SparseVec<R> {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec<R> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = y.add(&x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

pub fn sparse_add<R: Ring>(a: &[(usize, R)], b: &[(usize, R)]) -> SparseVec<R> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut p, mut q) = (0, 0);
    while p < a.len() || q < b.len() {
        if q == b.len() || (p < a.len() && a[p].0 < b[q].0) {
            out.push(a[p].clone());
            p += 1;
        } else if p == a.len() || b[q].0 < a[p].0 {
            out.push(b[q].clone());
            q += 1;
        } else {
            let s = a[p].1.add(&b[q].1);
            if !s.is_zero() {
                out.push((a[p].0, s));
            }
            p += 1;
            q += 1;
        }
    }
    out
}

pub fn sparse_scale<R: Ring>(a: &[(usize, R)], c: &R) -> SparseVec<R> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter()
        .filter_map(|(i, x)| {
            let y = x.mul(c);
            (!y.is_zero()).then_some((*i, y))
        })
        .collect()
}

/// Sparse matrix stored by columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R> {
    nrows: usize,
    cols: Vec<SparseVec<R>>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, R::one())
    }

    pub fn scalar(n: usize, c: R) -> Self {
        if c.is_zero() {
            return Self::zeros(n, n);
        }
        Matrix { nrows: n, cols: (0..n).map(|i| vec![(i, c.clone())]).collect() }
    }

    /// Builds from columns; entries are normalized.
    pub fn from_columns(nrows: usize, cols: Vec<Vec<(usize, R)>>) -> Self {
        Matrix { nrows, cols: cols.into_iter().map(normalize_sparse).collect() }
    }

    /// Builds from row-major dense data.
    pub fn from_dense(rows: &[Vec<R>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut cols = vec![Vec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    cols[j].push((i, x.clone()));
                }
            }
        }
        Matrix { nrows, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<R>> {
        let mut rows = vec![vec![R::zero(); self.ncols()]; self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                rows[*i][j] = x.clone();
            }
        }
        rows
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, R)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec<R>] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        match self.cols[j].binary_search_by_key(&i, |e| e.0) {
            Ok(p) => self.cols[j][p].1.clone(),
            Err(_) => R::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// First nonzero entry as `(row, col, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, R)> {
        self.cols
            .iter()
            .enumerate()
            .find_map(|(j, c)| c.first().map(|(i, x)| (*i, j, x.clone())))
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols()
            && self.cols.iter().enumerate().all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    pub fn apply(&self, v: &[(usize, R)]) -> SparseVec<R> {
        self.apply_with(&mut Accumulator::new(self.nrows), v)
    }

    /// `apply` reusing a scratch accumulator of size `nrows`.
    pub fn apply_with(&self, acc: &mut Accumulator<R>, v: &[(usize, R)]) -> SparseVec<R> {
        for (k, x) in v {
            for (i, a) in &self.cols[*k] {
                acc.add_owned(*i, a.mul(x));
            }
        }
        acc.take()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols(), rhs.nrows, "dimension mismatch in matrix product");
        let mut acc = Accumulator::new(self.nrows);
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                for (k, x) in col {
                    for (i, a) in &self.cols[*k] {
                        acc.add_owned(*i, a.mul(x));
                    }
                }
                acc.take()
            })
            .collect();
        Matrix { nrows: self.nrows, cols }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols()), (rhs.nrows, rhs.ncols()));
        let cols = self.cols.iter().zip(&rhs.cols).map(|(a, b)| sparse_add(a, b)).collect();
        Matrix { nrows: self.nrows, cols }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix { nrows: self.nrows, cols: self.cols.iter().map(|col| sparse_scale(col, c)).collect() }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .map(|col| {
                    col.iter()
                        .filter_map(|(i, x)| {
                            let y = f(x);
                            (!y.is_zero()).then_some((*i, y))
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Fallible entrywise map.
    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Matrix<S>> {
        let mut cols = Vec::with_capacity(self.ncols());
        for col in &self.cols {
            let mut out = Vec::with_capacity(col.len());
            for (i, x) in col {
                let y = f(x)?;
                if !y.is_zero() {
                    out.push((*i, y));
                }
            }
            cols.push(out);
        }
        Ok(Matrix { nrows: self.nrows, cols })
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                cols[*i].push((j, x.clone()));
            }
        }
        Matrix { nrows: self.ncols(), cols }
    }

    /// Rows as sparse vectors.
    pub fn rows(&self) -> Vec<SparseVec<R>> {
        self.transpose().cols
    }

    /// Iterates over nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, x)| (*i, j, x)))
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Row echelon data of a row-reduced matrix.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    /// Nonzero rows of the reduced row echelon form.
    pub rows: Vec<Vec<F>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<F: Field> Echelon<F> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis of the null space, one vector per free column, with a one in
    /// that column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![F::zero(); self.ncols];
                v[free] = F::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = row[free].neg();
                }
                v
            })
            .collect()
    }

    /// Coordinates of `v` in the row basis, or `None` if `v` is not in the
    /// row space.
    pub fn coordinates(&self, v: &[(usize, F)]) -> Option<Vec<F>> {
        let mut dense = vec![F::zero(); self.ncols];
        for (i, x) in v {
            dense[*i] = x.clone();
        }
        let coords: Vec<F> = self.pivots.iter().map(|&p| dense[p].clone()).collect();
        let mut rest = dense;
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rest.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r = r.sub(&c.mul(x));
                }
            }
        }
        rest.iter().all(F::is_zero).then_some(coords)
    }
}

/// Reduced row echelon form by Gauss-Jordan elimination.
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Echelon<F> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots, ncols }
}

/// Reduced row echelon form of a list of sparse rows.
pub fn rref_sparse<F: Field>(rows: &[SparseVec<F>], ncols: usize) -> Echelon<F> {
    let dense = rows
        .iter()
        .map(|row| {
            let mut v = vec![F::zero(); ncols];
            for (i, x) in row {
                v[*i] = x.clone();
            }
            v
        })
        .collect();
    rref(dense, ncols)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref_sparse(&m.rows(), m.ncols()).rank()
}

/// Basis of the column space of `m`, in reduced echelon form.
pub fn column_space<F: Field>(m: &Matrix<F>) -> Echelon<F> {
    rref_sparse(m.columns(), m.nrows())
}

/// Basis of the common kernel of matrices sharing a domain.
pub fn common_kernel<F: Field>(mats: &[&Matrix<F>]) -> Result<Vec<Vec<F>>> {
    let Some(first) = mats.first() else {
        return Err(Error::InvalidInput("empty operator list".into()));
    };
    let n = first.ncols();
    let mut rows = Vec::new();
    for m in mats {
        if m.ncols() != n {
            return Err(Error::InvalidInput("operators with different domains".into()));
        }
        rows.extend(m.rows().into_iter().filter(|r| !r.is_empty()));
    }
    Ok(rref_sparse(&rows, n).kernel())
}

/// A reduced echelon basis of a subspace of `F^n`, grown one vector at a time.
///
/// Every stored row has a one at its pivot and zeros at all other pivots.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F> {
    dim: usize,
    rows: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(dim: usize) -> Self {
        SparseEchelon { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows sorted by pivot.
    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the span.
    pub fn reduce(&self, v: &[(usize, F)]) -> SparseVec<F> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Ok(k) = v.binary_search_by_key(&p, |e| e.0) {
                let c = v[k].1.neg();
                v = sparse_add(&v, &sparse_scale(row, &c));
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, F)]) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.first().cloned() else {
            return false;
        };
        let r = sparse_scale(&r, &lead.inv().expect("nonzero pivot"));
        for row in &mut self.rows {
            if let Ok(k) = row.binary_search_by_key(&p, |e| e.0) {
                let c = row[k].1.neg();
                *row = sparse_add(row, &sparse_scale(&r, &c));
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }
}

impl<Fq: Field> SparseEchelon<Fq> {
    /// Coordinates in the row basis of a vector with entries in a ring `R`
    /// containing the scalars, or `None` if the vector is outside the span.
    pub fn coordinates<R: Ring>(&self, v: &[(usize, R)], embed: impl Fn(&Fq) -> R) -> Option<Vec<R>> {
        let get = |w: &[(usize, R)], i: usize| match w.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => w[k].1.clone(),
            Err(_) => R::zero(),
        };
        let coords: Vec<R> = self.pivots.iter().map(|&p| get(v, p)).collect();
        let mut rest = v.to_vec();
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            let scaled: SparseVec<R> = row.iter().map(|(i, x)| (*i, embed(x).mul(c).neg())).collect();
            rest = sparse_add(&rest, &scaled);
        }
        rest.is_empty().then_some(coords)
    }
}

/// Converts a dense vector to sparse form.
pub fn to_sparse<R: Ring>(v: &[R]) -> SparseVec<R> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        let rows: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        Matrix::from_dense(&rows)
    }

    #[test]
    fn product_and_transpose() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[1, 0]]));
        assert_eq!(a.transpose(), m(&[&[1, 0], &[2, 1]]));
        assert!(a.sub(&a).is_zero());
        assert!(b.mul(&b).is_identity());
    }

    #[test]
    fn kernel_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ker = common_kernel(&[&a]).unwrap();
        assert_eq!(ker.len(), 1);
        assert!(a.apply(&to_sparse(&ker[0])).is_empty());
        let id = Matrix::<Rational>::identity(3);
        assert!(common_kernel(&[&id]).unwrap().is_empty());
        assert_eq!(common_kernel(&[&Matrix::<Rational>::zeros(3, 3)]).unwrap().len(), 3);
    }

    #[test]
    fn coordinates_in_row_space() {
        let e = rref(vec![vec![Rational::from_int(1), Rational::from_int(1), Rational::ZERO]], 3);
        let two = Rational::from_int(2);
        assert_eq!(e.coordinates(&[(0, two.clone()), (1, two.clone())]), Some(vec![two.clone()]));
        assert_eq!(e.coordinates(&[(2, two)]), None);
    }
}
