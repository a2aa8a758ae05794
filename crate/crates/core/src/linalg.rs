//! Dense exact linear algebra: matrices, reduced row-echelon form, kernels,
//! linear solves, and subspaces held in canonical echelon form.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.cols.max(1);
        f.debug_list().entries(self.data.chunks(cols).take(self.rows)).finish()
    }
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to describe a matrix with no rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }

    /// Entries flattened row by row.
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        solve_linear(self, &Self::identity(self.rows)).ok().flatten()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + x.clone() * y.clone()
        }
    })
}

/// `y += s * x`
pub fn axpy<T: Field>(y: &mut [T], s: &T, x: &[T]) {
    if s.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = yi.clone() + s.clone() * xi.clone();
        }
    }
}

pub fn scaled<T: Field>(s: &T, x: &[T]) -> Vec<T> {
    x.iter().map(|v| s.clone() * v.clone()).collect()
}

pub fn is_zero_vec<T: Field>(v: &[T]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn unit_vector<T: Field>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

/// Linear combination `sum coeffs[i] * vectors[i]` in ambient dimension `n`.
pub fn combine<T: Field>(n: usize, coeffs: &[T], vectors: &[Vec<T>]) -> Vec<T> {
    let mut out = vec![T::zero(); n];
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

/// Reduced row-echelon form of the row space of `rows`, returned as the nonzero
/// rows together with their pivot columns.
pub fn rref_rows<T: Field>(cols: usize, mut rows: Vec<Vec<T>>) -> (Vec<Vec<T>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -row[c].clone();
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Reduced row-echelon form; zero rows are dropped.
pub fn rref<T: Field>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let (rows, pivots) = rref_rows(m.cols(), m.row_vecs());
    (
        Matrix::from_rows(m.cols(), rows).expect("rows keep their width"),
        pivots,
    )
}

/// Basis of `{x : a x = 0}`, one vector per free column.
pub fn kernel<T: Field>(a: &Matrix<T>) -> Vec<Vec<T>> {
    kernel_of_rows(a.cols(), a.row_vecs())
}

pub fn kernel_of_rows<T: Field>(cols: usize, rows: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let (r, pivots) = rref_rows(cols, rows);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Some `x` with `a x = b`, or `None` when the system is inconsistent.
pub fn solve_linear<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Option<Matrix<T>>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.rows(),
        });
    }
    let n = a.cols();
    let k = b.cols();
    let augmented: Vec<Vec<T>> = (0..a.rows())
        .map(|i| a.row(i).iter().chain(b.row(i)).cloned().collect())
        .collect();
    let (rows, pivots) = rref_rows(n + k, augmented);
    if pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(n, k);
    for (row, &p) in rows.iter().zip(&pivots) {
        for j in 0..k {
            x[(p, j)] = row[n + j].clone();
        }
    }
    Ok(Some(x))
}

/// Incrementally built semi-echelon basis. Each stored row has a unit pivot
/// and vanishes at the pivots of earlier rows, so sequential reduction is exact.
#[derive(Clone, Debug)]
pub struct EchelonBuilder<T> {
    n: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Field> EchelonBuilder<T> {
    pub fn new(n: usize) -> Self {
        EchelonBuilder {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn reduce(&self, v: &mut [T]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = -v[p].clone();
                axpy(v, &f, row);
            }
        }
    }

    /// Inserts `v`; returns the reduced, normalized row if `v` was new.
    pub fn insert(&mut self, mut v: Vec<T>) -> Option<&[T]> {
        debug_assert_eq!(v.len(), self.n);
        self.reduce(&mut v);
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        self.rows.push(v);
        self.pivots.push(p);
        self.rows.last().map(|r| r.as_slice())
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vec(&w)
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn into_subspace(self) -> Subspace<T> {
        Subspace::span(self.n, self.rows)
    }
}

/// A subspace of `F^n`, stored as its unique reduced row-echelon basis.
/// Equal subspaces compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: fmt::Debug> fmt::Debug for Subspace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?}", self.basis)
    }
}

/// The four subspace operations exposed as one entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceOp {
    Sum,
    Intersect,
    Contains,
    Equals,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubspaceOpResult<T> {
    Space(Subspace<T>),
    Bool(bool),
}

impl<T: Field> Subspace<T> {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient: n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient: n,
            basis: (0..n).map(|i| unit_vector(n, i)).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn span(n: usize, vectors: impl IntoIterator<Item = Vec<T>>) -> Self {
        let rows: Vec<Vec<T>> = vectors.into_iter().collect();
        debug_assert!(rows.iter().all(|r| r.len() == n));
        let (basis, pivots) = rref_rows(n, rows);
        Subspace {
            ambient: n,
            basis,
            pivots,
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        Self::span(n, indices.iter().map(|&i| unit_vector(n, i)))
    }

    pub fn from_i64(n: usize, vectors: &[&[i64]]) -> Self {
        Self::span(
            n,
            vectors
                .iter()
                .map(|v| v.iter().map(|&x| T::from_i64(x)).collect()),
        )
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// `v` minus its component along the basis; zero exactly when `v` lies in the
    /// subspace, and zero at every pivot otherwise.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = -w[p].clone();
                axpy(&mut w, &f, row);
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[T]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the echelon basis.
    pub fn from_coordinates(&self, coords: &[T]) -> Vec<T> {
        combine(self.ambient, coords, &self.basis)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            })
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        Self::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Zassenhaus intersection: eliminate `[u | u]` stacked over `[v | 0]`.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Self::zero(n);
        }
        if self.is_full() {
            return other.clone();
        }
        if other.is_full() {
            return self.clone();
        }
        let rows: Vec<Vec<T>> = self
            .basis
            .iter()
            .map(|u| u.iter().chain(u.iter()).cloned().collect())
            .chain(other.basis.iter().map(|v| {
                v.iter()
                    .cloned()
                    .chain(std::iter::repeat(T::zero()).take(n))
                    .collect()
            }))
            .collect();
        let (r, pivots) = rref_rows(2 * n, rows);
        Self::span(
            n,
            r.iter()
                .zip(&pivots)
                .filter(|(_, &p)| p >= n)
                .map(|(row, _)| row[n..].to_vec()),
        )
    }

    pub fn contains(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn op(&self, other: &Self, op: SubspaceOp) -> Result<SubspaceOpResult<T>> {
        self.check(other)?;
        Ok(match op {
            SubspaceOp::Sum => SubspaceOpResult::Space(self.sum(other)),
            SubspaceOp::Intersect => SubspaceOpResult::Space(self.intersect(other)),
            SubspaceOp::Contains => SubspaceOpResult::Bool(self.contains(other)),
            SubspaceOp::Equals => SubspaceOpResult::Bool(self == other),
        })
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, m: &Matrix<T>) -> Self {
        Self::span(m.rows(), self.basis.iter().map(|v| m.apply(v)))
    }

    /// Basis rows as literals, for reports.
    pub fn literals(&self) -> Vec<Vec<String>> {
        self.basis
            .iter()
            .map(|r| r.iter().map(|x| x.to_literal()).collect())
            .collect()
    }

    /// Orthogonal complement under the standard pairing.
    pub fn annihilator(&self) -> Self {
        Self::span(
            self.ambient,
            kernel_of_rows(self.ambient, self.basis.clone()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F2};

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn rref_of_permutation_is_identity() {
        let (r, p) = rref(&Matrix::<Rational>::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_drops_dependent_rows() {
        let (r, p) = rref(&Matrix::<Rational>::from_i64(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, Matrix::from_i64(&[&[1, 2]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_over_f2() {
        let (r, _) = rref(&Matrix::<F2>::from_i64(&[&[1, 1], &[1, 2]]));
        assert_eq!(r, Matrix::identity(2));
    }

    #[test]
    fn solve_identity_and_underdetermined() {
        let b = Matrix::<Rational>::from_i64(&[&[3], &[5]]);
        let x = solve_linear(&Matrix::identity(2), &b).unwrap().unwrap();
        assert_eq!(x, b);

        let a = Matrix::<Rational>::from_i64(&[&[1, 1]]);
        let b = Matrix::from_i64(&[&[3]]);
        let x = solve_linear(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn solve_inconsistent_and_shape_error() {
        let a = Matrix::<Rational>::from_i64(&[&[1], &[1]]);
        let b = Matrix::from_i64(&[&[1], &[2]]);
        assert_eq!(solve_linear(&a, &b).unwrap(), None);
        let b3 = Matrix::from_i64(&[&[1], &[2], &[3]]);
        assert!(solve_linear(&a, &b3).is_err());
    }

    #[test]
    fn subspace_sum_and_intersection() {
        let u = Subspace::<Rational>::from_i64(2, &[&[1, 0]]);
        let v = Subspace::from_i64(2, &[&[0, 1]]);
        assert!(u.sum(&v).is_full());
        assert!(u.intersect(&v).is_zero());
        assert_eq!(u.intersect(&u), u);
        assert_eq!(
            u.op(&u, SubspaceOp::Equals).unwrap(),
            SubspaceOpResult::Bool(true)
        );

        let w = Subspace::from_i64(2, &[&[1, 1]]);
        assert_eq!(w.sum(&v).dim(), 2);
        assert_eq!(w.intersect(&v).dim(), 0);
        assert!(u.op(&Subspace::zero(3), SubspaceOp::Sum).is_err());
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::<Rational>::from_i64(3, &[&[1, 2, 0], &[0, 1, 1]]);
        let v = vec![q(2), q(7), q(3)];
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.from_coordinates(&c), v);
        assert!(s.coordinates(&[q(0), q(0), q(1)]).is_none());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = Matrix::<Rational>::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(is_zero_vec(&a.apply(&v)));
        }
    }

    mod props {
        use super::*;
        use crate::field::F5;
        use proptest::prelude::*;

        fn mat(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
            prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
        }

        fn to_q(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
            m.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect()
        }

        proptest! {
            #[test]
            fn rref_is_invariant_under_row_operations(m in mat(3, 4), r in mat(3, 3)) {
                let m = Matrix::from_rows(4, to_q(&m)).unwrap();
                let r = Matrix::from_rows(3, to_q(&r)).unwrap();
                prop_assume!(r.rank() == 3);
                prop_assert_eq!(rref(&r.mul(&m)), rref(&m));
            }

            #[test]
            fn dimension_formula(a in mat(3, 5), b in mat(3, 5)) {
                let u = Subspace::span(5, to_q(&a));
                let v = Subspace::span(5, to_q(&b));
                let meet = u.intersect(&v);
                prop_assert_eq!(u.dim() + v.dim(), u.sum(&v).dim() + meet.dim());
                prop_assert!(u.contains(&meet) && v.contains(&meet));
            }

            #[test]
            fn solve_reports_none_iff_rank_grows(a in mat(3, 2), b in mat(3, 1)) {
                let a = Matrix::<F5>::from_rows(2, a.iter().map(|r| r.iter().map(|&x| F5::from_i64(x)).collect()).collect()).unwrap();
                let b = Matrix::<F5>::from_rows(1, b.iter().map(|r| r.iter().map(|&x| F5::from_i64(x)).collect()).collect()).unwrap();
                let aug = Matrix::from_rows(3, (0..3).map(|i| a.row(i).iter().chain(b.row(i)).cloned().collect()).collect()).unwrap();
                match solve_linear(&a, &b).unwrap() {
                    Some(x) => prop_assert_eq!(a.mul(&x), b),
                    None => prop_assert!(aug.rank() > a.rank()),
                }
            }
        }
    }
}
