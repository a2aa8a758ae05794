//! Lie algebras given by structure constants, and the constructions that act
//! on them: brackets of subspaces, the three descending series, centralisers,
//! generated subalgebras, quotients, restrictions and semidirect products.
//!
//! Subspaces of an algebra are plain [`Subspace`] values in the coordinates of
//! the algebra's standard basis `b_0, .., b_{n-1}`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{
    axpy, is_zero_vec, kernel_of_rows, unit_vector, EchelonBuilder, Matrix, Subspace,
};

/// A finite-dimensional Lie algebra with `[b_i, b_j] = sum_k c[i][j][k] b_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra<T> {
    dim: usize,
    /// `table[i * dim + j]` holds the coordinates of `[b_i, b_j]`.
    table: Vec<Vec<T>>,
}

impl<T: std::fmt::Debug + num_traits::Zero> std::fmt::Debug for LieAlgebra<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {}", self.dim)?;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = &self.table[i * self.dim + j];
                if v.iter().any(|x| !x.is_zero()) {
                    write!(f, "; [{i},{j}]={v:?}")?;
                }
            }
        }
        write!(f, ")")
    }
}

/// Which descending series to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    LowerNilpotent,
}

/// A descending chain of ideals starting at `L`, recorded up to the first
/// repeated term (which is not stored twice).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesChain<T> {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace<T>>,
}

impl<T: Field> SeriesChain<T> {
    /// The stable term the chain ends in.
    pub fn limit(&self) -> &Subspace<T> {
        self.terms.last().expect("a chain always contains L")
    }

    /// Whether the chain reaches the zero subspace.
    pub fn reaches_zero(&self) -> bool {
        self.limit().is_zero()
    }

    /// Term `i`, continuing with the limit past the recorded length.
    pub fn term(&self, i: usize) -> &Subspace<T> {
        self.terms.get(i).unwrap_or_else(|| self.limit())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }
}

/// Summary predicates of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Predicates {
    pub solvable: bool,
    pub nilpotent: bool,
    pub abelian: bool,
    pub completely_solvable: bool,
    /// Smallest `n` with `L^(n) = 0`; `None` when not solvable.
    pub derived_length: Option<usize>,
}

/// `L / K` on the complement spanned by the non-pivot coordinates of `K`.
#[derive(Debug, Clone)]
pub struct Quotient<T: Field> {
    pub algebra: LieAlgebra<T>,
    pub ideal: Subspace<T>,
    /// Coordinates of `L` forming the quotient basis.
    pub coset_coords: Vec<usize>,
}

impl<T: Field> Quotient<T> {
    pub fn project(&self, v: &[T]) -> Vec<T> {
        let r = self.ideal.reduce(v);
        self.coset_coords.iter().map(|&i| r[i].clone()).collect()
    }

    pub fn section(&self, u: &[T]) -> Vec<T> {
        let mut v = vec![T::zero(); self.ideal.ambient()];
        for (x, &i) in u.iter().zip(&self.coset_coords) {
            v[i] = x.clone();
        }
        v
    }

    pub fn project_space(&self, s: &Subspace<T>) -> Subspace<T> {
        Subspace::span(
            self.algebra.dim(),
            s.basis().iter().map(|v| self.project(v)),
        )
    }

    /// Full preimage in `L` of a subspace of the quotient.
    pub fn preimage(&self, s: &Subspace<T>) -> Subspace<T> {
        Subspace::span(
            self.ideal.ambient(),
            s.basis()
                .iter()
                .map(|u| self.section(u))
                .chain(self.ideal.basis().iter().cloned()),
        )
    }
}

/// A subalgebra re-expressed as an algebra in its own echelon basis.
#[derive(Debug, Clone)]
pub struct Restriction<T: Field> {
    pub algebra: LieAlgebra<T>,
    pub carrier: Subspace<T>,
}

impl<T: Field> Restriction<T> {
    pub fn embed(&self, coords: &[T]) -> Vec<T> {
        self.carrier.from_coordinates(coords)
    }

    pub fn embed_space(&self, s: &Subspace<T>) -> Subspace<T> {
        Subspace::span(
            self.carrier.ambient(),
            s.basis().iter().map(|c| self.embed(c)),
        )
    }

    /// Coordinates in the carrier basis of a subspace lying inside the carrier.
    pub fn pull_space(&self, s: &Subspace<T>) -> Subspace<T> {
        Subspace::span(
            self.algebra.dim(),
            s.basis().iter().map(|v| {
                self.carrier
                    .coordinates(v)
                    .expect("subspace lies inside the carrier")
            }),
        )
    }
}

/// A linear action of an algebra `B` on `F^m`, one matrix per basis element of `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation<T> {
    pub module_dim: usize,
    pub matrices: Vec<Matrix<T>>,
}

impl<T: Field> Representation<T> {
    pub fn new(module_dim: usize, matrices: Vec<Matrix<T>>) -> Result<Self> {
        for m in &matrices {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(Error::DimensionMismatch {
                    expected: module_dim,
                    found: m.rows().max(m.cols()),
                });
            }
        }
        Ok(Representation {
            module_dim,
            matrices,
        })
    }

    pub fn zero(b: &LieAlgebra<T>, module_dim: usize) -> Self {
        Representation {
            module_dim,
            matrices: vec![Matrix::zeros(module_dim, module_dim); b.dim()],
        }
    }

    /// The matrix of `x = sum x_i b_i`.
    pub fn of(&self, x: &[T]) -> Matrix<T> {
        let mut acc = Matrix::zeros(self.module_dim, self.module_dim);
        for (c, m) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    /// Checks `rho([x,y]) = [rho(x), rho(y)]` on basis pairs.
    pub fn validate(&self, b: &LieAlgebra<T>) -> Result<()> {
        if self.matrices.len() != b.dim() {
            return Err(Error::DimensionMismatch {
                expected: b.dim(),
                found: self.matrices.len(),
            });
        }
        for i in 0..b.dim() {
            for j in i + 1..b.dim() {
                let lhs = self.of(b.structure(i, j));
                let rhs = self.matrices[i].commutator(&self.matrices[j]);
                if lhs != rhs {
                    return Err(Error::NotRepresentation { i, j });
                }
            }
        }
        Ok(())
    }

    /// Kernel `{x : rho(x) = 0}` as a subspace of `B`.
    pub fn kernel(&self, b_dim: usize) -> Subspace<T> {
        let m2 = self.module_dim * self.module_dim;
        // Column i of the system is vec(rho(b_i)).
        let rows: Vec<Vec<T>> = (0..m2)
            .map(|e| {
                self.matrices
                    .iter()
                    .map(|m| m.as_slice()[e].clone())
                    .collect()
            })
            .collect();
        Subspace::span(b_dim, kernel_of_rows(b_dim, rows))
    }

    pub fn is_faithful(&self, b_dim: usize) -> bool {
        self.kernel(b_dim).is_zero()
    }
}

impl<T: Field> LieAlgebra<T> {
    /// The abelian algebra of dimension `n`.
    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            dim: n,
            table: vec![vec![T::zero(); n]; n * n],
        }
    }

    /// Builds an algebra from the full tensor `c[i][j][k]`, reporting every
    /// violated identity.
    pub fn validate(c: &[Vec<Vec<T>>]) -> std::result::Result<Self, Vec<Error>> {
        let n = c.len();
        if c.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(vec![Error::BadTensorShape { expected: n }]);
        }
        let mut errors = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let s = c[i][j][k].clone() + c[j][i][k].clone();
                    if !s.is_zero() {
                        errors.push(Error::Antisymmetry {
                            i,
                            j,
                            k,
                            residue: s.to_literal(),
                        });
                    }
                }
            }
        }
        if !errors.is_empty() {
            return Err(errors);
        }
        let l = LieAlgebra {
            dim: n,
            table: c.iter().flat_map(|r| r.iter().cloned()).collect(),
        };
        let jacobi = l.jacobi_violations();
        if jacobi.is_empty() {
            Ok(l)
        } else {
            Err(jacobi)
        }
    }

    /// Builds an algebra from brackets `[b_i, b_j]` with `i < j`; absent pairs are zero.
    pub fn from_brackets(n: usize, brackets: &[(usize, usize, Vec<(usize, T)>)]) -> Result<Self> {
        let mut table = vec![vec![T::zero(); n]; n * n];
        for (i, j, terms) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: i.max(j) + 1,
                });
            }
            if i >= j {
                return Err(Error::Antisymmetry {
                    i,
                    j,
                    k: 0,
                    residue: "bracket entries must have i < j".into(),
                });
            }
            for (k, v) in terms {
                if *k >= n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: k + 1,
                    });
                }
                table[i * n + j][*k] = table[i * n + j][*k].clone() + v.clone();
                table[j * n + i][*k] = table[j * n + i][*k].clone() - v.clone();
            }
        }
        let l = LieAlgebra { dim: n, table };
        match l.jacobi_violations().into_iter().next() {
            Some(e) => Err(e),
            None => Ok(l),
        }
    }

    /// Integer-literal convenience form of [`LieAlgebra::from_brackets`].
    pub fn from_int_brackets(n: usize, brackets: &[(usize, usize, &[(usize, i64)])]) -> Result<Self> {
        let b: Vec<_> = brackets
            .iter()
            .map(|(i, j, t)| (*i, *j, t.iter().map(|&(k, v)| (k, T::from_i64(v))).collect()))
            .collect();
        Self::from_brackets(n, &b)
    }

    fn jacobi_violations(&self) -> Vec<Error> {
        let n = self.dim;
        let mut errors = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let bi = unit_vector(n, i);
                    let bj = unit_vector(n, j);
                    let bl = unit_vector(n, l);
                    let mut s = self.bracket(&self.bracket(&bi, &bj), &bl);
                    let t = self.bracket(&self.bracket(&bj, &bl), &bi);
                    let u = self.bracket(&self.bracket(&bl, &bi), &bj);
                    axpy(&mut s, &T::one(), &t);
                    axpy(&mut s, &T::one(), &u);
                    if let Some(k) = s.iter().position(|x| !x.is_zero()) {
                        errors.push(Error::Jacobi {
                            i,
                            j,
                            l,
                            k,
                            residue: s[k].to_literal(),
                        });
                    }
                }
            }
        }
        errors
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[T] {
        &self.table[i * self.dim + j]
    }

    /// Nonzero brackets `[b_i, b_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, &[T])> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.structure(i, j);
                if !is_zero_vec(v) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// The full tensor `c[i][j][k]`.
    pub fn tensor(&self) -> Vec<Vec<Vec<T>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.structure(i, j).to_vec()).collect())
            .collect()
    }

    pub fn bracket(&self, x: &[T], y: &[T]) -> Vec<T> {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut out = vec![T::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                axpy(&mut out, &(xi.clone() * yj.clone()), self.structure(i, j));
            }
        }
        out
    }

    pub fn try_bracket(&self, x: &[T], y: &[T]) -> Result<Vec<T>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket(x, y))
    }

    pub fn full(&self) -> Subspace<T> {
        Subspace::full(self.dim)
    }

    pub fn zero_space(&self) -> Subspace<T> {
        Subspace::zero(self.dim)
    }

    /// `[U, V]`, the span of brackets of basis pairs.
    pub fn product_space(&self, u: &Subspace<T>, v: &Subspace<T>) -> Subspace<T> {
        let mut b = EchelonBuilder::new(self.dim);
        for x in u.basis() {
            for y in v.basis() {
                b.insert(self.bracket(x, y));
                if b.len() == self.dim {
                    return self.full();
                }
            }
        }
        b.into_subspace()
    }

    pub fn is_subalgebra(&self, s: &Subspace<T>) -> bool {
        let b = s.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains_vector(&self.bracket(&b[i], &b[j]))))
    }

    pub fn is_ideal(&self, s: &Subspace<T>) -> bool {
        s.basis().iter().all(|x| {
            (0..self.dim).all(|i| s.contains_vector(&self.bracket(&unit_vector(self.dim, i), x)))
        })
    }

    pub fn is_abelian_subspace(&self, s: &Subspace<T>) -> bool {
        self.product_space(s, s).is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| is_zero_vec(v))
    }

    /// `S, [S,S], [S,[S,S]], ...` up to its stable term.
    pub fn lower_central_of(&self, s: &Subspace<T>) -> Vec<Subspace<T>> {
        let mut terms = vec![s.clone()];
        loop {
            let next = self.product_space(s, terms.last().unwrap());
            if &next == terms.last().unwrap() {
                return terms;
            }
            terms.push(next);
        }
    }

    /// Whether the subalgebra `s` is nilpotent as an algebra in its own right.
    pub fn is_nilpotent_subalgebra(&self, s: &Subspace<T>) -> bool {
        self.lower_central_of(s).last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_subalgebra(&self.full())
    }

    /// Nilpotent residual of the subalgebra `s`: the stable term of its own
    /// lower central series.
    pub fn residual_of(&self, s: &Subspace<T>) -> Subspace<T> {
        self.lower_central_of(s).pop().unwrap()
    }

    /// Derived series of the subalgebra `s`.
    pub fn derived_of(&self, s: &Subspace<T>) -> Vec<Subspace<T>> {
        let mut terms = vec![s.clone()];
        loop {
            let last = terms.last().unwrap();
            let next = self.product_space(last, last);
            if &next == last {
                return terms;
            }
            terms.push(next);
        }
    }

    pub fn is_solvable_subalgebra(&self, s: &Subspace<T>) -> bool {
        self.derived_of(s).last().unwrap().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.is_solvable_subalgebra(&self.full())
    }

    pub fn derived_series(&self) -> SeriesChain<T> {
        SeriesChain {
            kind: SeriesKind::Derived,
            terms: self.derived_of(&self.full()),
        }
    }

    pub fn lower_central_series(&self) -> SeriesChain<T> {
        let full = self.full();
        let mut terms = vec![full.clone()];
        loop {
            let next = self.product_space(&full, terms.last().unwrap());
            if &next == terms.last().unwrap() {
                break;
            }
            terms.push(next);
        }
        SeriesChain {
            kind: SeriesKind::LowerCentral,
            terms,
        }
    }

    /// `L_0 = L`, `L_{i+1} = (L_i)^inf`. Requires solvability for termination at 0.
    pub fn lower_nilpotent_series(&self) -> Result<SeriesChain<T>> {
        if !self.is_solvable() {
            return Err(Error::NotSolvable);
        }
        let mut terms = vec![self.full()];
        while !terms.last().unwrap().is_zero() {
            let next = self.residual_of(terms.last().unwrap());
            terms.push(next);
        }
        Ok(SeriesChain {
            kind: SeriesKind::LowerNilpotent,
            terms,
        })
    }

    pub fn series(&self, kind: SeriesKind) -> Result<SeriesChain<T>> {
        match kind {
            SeriesKind::Derived => Ok(self.derived_series()),
            SeriesKind::LowerCentral => Ok(self.lower_central_series()),
            SeriesKind::LowerNilpotent => self.lower_nilpotent_series(),
        }
    }

    /// `Z_L(A/B) = {x : [x, A] ⊆ B}`.
    pub fn centralizer(&self, a: &Subspace<T>, b: &Subspace<T>) -> Subspace<T> {
        let n = self.dim;
        // For each basis vector a_i, the linear map x -> reduce_B([x, a_i]);
        // column j is the image of b_j.
        let mut rows: Vec<Vec<T>> = Vec::new();
        for ai in a.basis() {
            let cols: Vec<Vec<T>> = (0..n)
                .map(|j| b.reduce(&self.bracket(&unit_vector(n, j), ai)))
                .collect();
            for r in 0..n {
                let row: Vec<T> = cols.iter().map(|c| c[r].clone()).collect();
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
        Subspace::span(n, kernel_of_rows(n, rows))
    }

    pub fn try_centralizer(&self, a: &Subspace<T>, b: &Subspace<T>) -> Result<Subspace<T>> {
        for s in [a, b] {
            if s.ambient() != self.dim {
                return Err(Error::AmbientMismatch {
                    left: self.dim,
                    right: s.ambient(),
                });
            }
        }
        Ok(self.centralizer(a, b))
    }

    pub fn center(&self) -> Subspace<T> {
        self.centralizer(&self.full(), &self.zero_space())
    }

    /// Centre of the subalgebra `s`.
    pub fn center_of(&self, s: &Subspace<T>) -> Subspace<T> {
        s.intersect(&self.centralizer(s, &self.zero_space()))
    }

    pub fn normalizer(&self, s: &Subspace<T>) -> Subspace<T> {
        self.centralizer(s, s)
    }

    /// Smallest subalgebra containing the vectors.
    pub fn generated_subalgebra(&self, vectors: &[Vec<T>]) -> Subspace<T> {
        let mut s = Subspace::span(self.dim, vectors.iter().cloned());
        loop {
            let next = s.sum(&self.product_space(&s, &s));
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Smallest ideal containing the vectors.
    pub fn ideal_generated(&self, vectors: &[Vec<T>]) -> Subspace<T> {
        let n = self.dim;
        let mut b = EchelonBuilder::new(n);
        let mut queue: Vec<Vec<T>> = Vec::new();
        for v in vectors {
            if let Some(r) = b.insert(v.clone()) {
                queue.push(r.to_vec());
            }
        }
        while let Some(v) = queue.pop() {
            for i in 0..n {
                let w = self.bracket(&unit_vector(n, i), &v);
                if let Some(r) = b.insert(w) {
                    queue.push(r.to_vec());
                }
            }
        }
        b.into_subspace()
    }

    pub fn predicates(&self) -> Predicates {
        let derived = self.derived_series();
        let solvable = derived.reaches_zero();
        let l2 = derived.term(1).clone();
        Predicates {
            solvable,
            nilpotent: self.is_nilpotent(),
            abelian: self.is_abelian(),
            completely_solvable: self.is_nilpotent_subalgebra(&l2),
            derived_length: solvable.then(|| derived.terms.len() - 1),
        }
    }

    pub fn derived_length(&self) -> Option<usize> {
        let d = self.derived_series();
        d.reaches_zero().then(|| d.terms.len() - 1)
    }

    pub fn require_solvable(&self) -> Result<()> {
        if self.is_solvable() {
            Ok(())
        } else {
            Err(Error::NotSolvable)
        }
    }

    /// `L / K` on the non-pivot coordinates of `K`.
    pub fn quotient(&self, k: &Subspace<T>) -> Result<Quotient<T>> {
        if k.ambient() != self.dim {
            return Err(Error::AmbientMismatch {
                left: self.dim,
                right: k.ambient(),
            });
        }
        if !self.is_ideal(k) {
            return Err(Error::NotIdeal);
        }
        let coset_coords = k.non_pivots();
        let m = coset_coords.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &coset_coords {
            for &b in &coset_coords {
                let r = k.reduce(self.structure(a, b));
                table.push(coset_coords.iter().map(|&i| r[i].clone()).collect());
            }
        }
        Ok(Quotient {
            algebra: LieAlgebra { dim: m, table },
            ideal: k.clone(),
            coset_coords,
        })
    }

    /// The subalgebra `s` as an algebra in its echelon basis.
    pub fn restrict(&self, s: &Subspace<T>) -> Result<Restriction<T>> {
        if s.ambient() != self.dim {
            return Err(Error::AmbientMismatch {
                left: self.dim,
                right: s.ambient(),
            });
        }
        let m = s.dim();
        let mut table = Vec::with_capacity(m * m);
        for x in s.basis() {
            for y in s.basis() {
                let v = self.bracket(x, y);
                table.push(s.coordinates(&v).ok_or(Error::NotSubalgebra)?);
            }
        }
        Ok(Restriction {
            algebra: LieAlgebra { dim: m, table },
            carrier: s.clone(),
        })
    }

    /// Matrix of `y -> [x, y]`; column `j` is `[x, b_j]`.
    pub fn adjoint(&self, x: &[T]) -> Matrix<T> {
        let cols: Vec<Vec<T>> = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vector(self.dim, j)))
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// `ad b_i` for every basis element.
    pub fn adjoint_basis(&self) -> Vec<Matrix<T>> {
        (0..self.dim)
            .map(|i| self.adjoint(&unit_vector(self.dim, i)))
            .collect()
    }

    /// The same algebra in the basis given by the columns of the invertible `p`.
    pub fn change_basis(&self, p: &Matrix<T>) -> Result<Self> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Precondition("change of basis must be invertible".into()))?;
        let n = self.dim;
        let cols: Vec<Vec<T>> = (0..n).map(|j| p.column(j)).collect();
        let mut table = Vec::with_capacity(n * n);
        for a in &cols {
            for b in &cols {
                table.push(inv.apply(&self.bracket(a, b)));
            }
        }
        Ok(LieAlgebra { dim: n, table })
    }

    /// `A ⋊ B` with `A = F^m` abelian; basis `a_0..a_{m-1}, b_0..b_{k-1}`.
    pub fn semidirect_product(b: &LieAlgebra<T>, rho: &Representation<T>) -> Result<Self> {
        rho.validate(b)?;
        let m = rho.module_dim;
        let k = b.dim();
        let n = m + k;
        let mut table = vec![vec![T::zero(); n]; n * n];
        for i in 0..k {
            for j in 0..k {
                let v = b.structure(i, j);
                for (t, x) in v.iter().enumerate() {
                    table[(m + i) * n + m + j][m + t] = x.clone();
                }
            }
            for a in 0..m {
                for t in 0..m {
                    let x = rho.matrices[i][(t, a)].clone();
                    table[(m + i) * n + a][t] = x.clone();
                    table[a * n + m + i][t] = -x;
                }
            }
        }
        Ok(LieAlgebra { dim: n, table })
    }

    /// Algebra direct sum, basis of `self` first.
    pub fn direct_sum(&self, other: &LieAlgebra<T>) -> Self {
        let (p, q) = (self.dim, other.dim);
        let n = p + q;
        let mut table = vec![vec![T::zero(); n]; n * n];
        for i in 0..p {
            for j in 0..p {
                table[i * n + j][..p].clone_from_slice(self.structure(i, j));
            }
        }
        for i in 0..q {
            for j in 0..q {
                table[(p + i) * n + p + j][p..].clone_from_slice(other.structure(i, j));
            }
        }
        LieAlgebra { dim: n, table }
    }

    /// The action of `L` on an ideal `k` (in `k`'s echelon coordinates).
    pub fn action_on_ideal(&self, k: &Subspace<T>) -> Vec<Matrix<T>> {
        (0..self.dim)
            .map(|i| {
                let cols: Vec<Vec<T>> = k
                    .basis()
                    .iter()
                    .map(|v| {
                        k.coordinates(&self.bracket(&unit_vector(self.dim, i), v))
                            .expect("k is an ideal")
                    })
                    .collect();
                Matrix::from_columns(k.dim(), &cols)
            })
            .collect()
    }

    /// Reduces an integral algebra over the rationals to this field.
    pub fn map_field<U: Field>(&self, f: impl Fn(&T) -> Option<U>) -> Option<LieAlgebra<U>> {
        let table = self
            .table
            .iter()
            .map(|v| v.iter().map(&f).collect::<Option<Vec<U>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(LieAlgebra {
            dim: self.dim,
            table,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F5};

    type Q = Rational;

    fn ex43() -> LieAlgebra<Q> {
        LieAlgebra::from_int_brackets(
            4,
            &[(0, 1, &[(2, 1)]), (0, 2, &[(1, 1)]), (1, 2, &[(3, 1)])],
        )
        .unwrap()
    }

    fn ex47() -> LieAlgebra<Q> {
        // [x4,x1] = x1, [x4,x2] = x2, [x3,x1] = x2, stored with i < j.
        LieAlgebra::from_int_brackets(
            4,
            &[(0, 3, &[(0, -1)]), (1, 3, &[(1, -1)]), (0, 2, &[(1, -1)])],
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| Q::from_i64(x)).collect()
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace<Q> {
        Subspace::from_i64(n, vs)
    }

    #[test]
    fn validate_reports_antisymmetry() {
        let mut c = vec![vec![vec![Q::from_i64(0); 2]; 2]; 2];
        c[0][1][0] = Q::from_i64(1);
        c[1][0][0] = Q::from_i64(1);
        let errs = LieAlgebra::validate(&c).unwrap_err();
        assert!(matches!(errs[0], Error::Antisymmetry { i: 0, j: 1, .. }));
        assert!(LieAlgebra::validate(&vec![vec![vec![Q::from_i64(0); 3]; 3]; 3]).is_ok());
        assert!(LieAlgebra::validate(&ex43().tensor()).is_ok());
    }

    #[test]
    fn validate_reports_jacobi() {
        // [b0,b1]=b1, [b0,b2]=b2, [b1,b2]=b0 fails Jacobi.
        let r = LieAlgebra::<Q>::from_int_brackets(
            3,
            &[(0, 1, &[(1, 1)]), (0, 2, &[(2, 1)]), (1, 2, &[(0, 1)])],
        );
        assert!(matches!(r, Err(Error::Jacobi { .. })));
    }

    #[test]
    fn brackets_of_examples() {
        let l = ex47();
        assert_eq!(l.bracket(&v(&[0, 0, 0, 1]), &v(&[1, 0, 0, 0])), v(&[1, 0, 0, 0]));
        let x = v(&[1, 2, 3, 4]);
        assert_eq!(l.bracket(&x, &x), v(&[0, 0, 0, 0]));
        assert_eq!(ex43().bracket(&v(&[0, 1, 0, 0]), &v(&[0, 0, 1, 0])), v(&[0, 0, 0, 1]));
        assert!(l.try_bracket(&v(&[1]), &x).is_err());
    }

    #[test]
    fn derived_squares() {
        let l = ex47();
        assert_eq!(l.product_space(&l.full(), &l.full()), span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert!(l.product_space(&l.full(), &l.zero_space()).is_zero());
        let m = ex43();
        assert_eq!(
            m.product_space(&m.full(), &m.full()),
            span(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn series_of_examples() {
        let a = LieAlgebra::<Q>::abelian(2);
        assert_eq!(a.derived_series().dims(), vec![2, 0]);

        let m = ex43();
        let d = m.derived_series();
        assert_eq!(d.dims(), vec![4, 3, 1, 0]);
        assert_eq!(d.terms[2], span(4, &[&[0, 0, 0, 1]]));

        let l = ex47();
        let ln = l.lower_nilpotent_series().unwrap();
        assert_eq!(ln.terms.len(), 3);
        assert_eq!(ln.terms[1], span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert!(ln.terms[2].is_zero());
    }

    #[test]
    fn lower_nilpotent_rejects_non_solvable() {
        // sl2: [e,f]=h, [h,e]=2e, [h,f]=-2f with basis (h,e,f).
        let sl2 = LieAlgebra::<Q>::from_int_brackets(
            3,
            &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
        )
        .unwrap();
        assert_eq!(sl2.lower_nilpotent_series().unwrap_err(), Error::NotSolvable);
    }

    #[test]
    fn centres_and_centralisers() {
        assert!(LieAlgebra::<Q>::abelian(3).center().is_full());
        assert_eq!(ex43().center(), span(4, &[&[0, 0, 0, 1]]));
        // {x : [x,x1] = [x,x2] = 0} in Example 4.7: x1, x2, and no x3 or x4 part.
        let l = ex47();
        let l2 = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(l.centralizer(&l2, &l.zero_space()), l2);
    }

    #[test]
    fn generated_subalgebras() {
        let m = ex43();
        assert!(m.generated_subalgebra(&[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]).is_full());
        assert!(m.generated_subalgebra(&[]).is_zero());
        let basis: Vec<_> = (0..4).map(|i| unit_vector(4, i)).collect();
        assert!(m.generated_subalgebra(&basis).is_full());
    }

    #[test]
    fn predicates_of_examples() {
        let p = ex43().predicates();
        assert!(p.completely_solvable && p.solvable);
        assert_eq!(p.derived_length, Some(3));
        let p = ex47().predicates();
        assert!(p.completely_solvable);
        assert_eq!(p.derived_length, Some(2));
        let heis = LieAlgebra::<Q>::from_int_brackets(3, &[(0, 1, &[(2, 1)])]).unwrap();
        let p = heis.predicates();
        assert!(p.nilpotent && !p.abelian);
    }

    #[test]
    fn quotient_of_example_43_by_centre() {
        let m = ex43();
        let q = m.quotient(&span(4, &[&[0, 0, 0, 1]])).unwrap();
        let expected = LieAlgebra::<Q>::from_int_brackets(3, &[(0, 1, &[(2, 1)]), (0, 2, &[(1, 1)])]).unwrap();
        assert_eq!(q.algebra, expected);
        assert_eq!(m.quotient(&m.zero_space()).unwrap().algebra, m);
        assert_eq!(m.quotient(&m.full()).unwrap().algebra.dim(), 0);
        assert_eq!(m.quotient(&span(4, &[&[1, 0, 0, 0]])).unwrap_err(), Error::NotIdeal);
        let u = v(&[0, 3, 1, 0]);
        assert_eq!(q.project(&q.section(&q.project(&v(&[2, 0, 3, 1])))), q.project(&v(&[2, 0, 3, 1])));
        assert_eq!(q.project(&q.section(&u[..3])), u[..3].to_vec());
    }

    #[test]
    fn restriction_of_example_43_derived_algebra() {
        let m = ex43();
        let r = m.restrict(&span(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])).unwrap();
        let heis = LieAlgebra::<Q>::from_int_brackets(3, &[(0, 1, &[(2, 1)])]).unwrap();
        assert_eq!(r.algebra, heis);
        assert!(m.restrict(&span(4, &[&[1, 0, 0, 0]])).unwrap().algebra.is_abelian());
        assert_eq!(m.restrict(&span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])).unwrap_err(), Error::NotSubalgebra);
    }

    #[test]
    fn semidirect_products() {
        let b = LieAlgebra::<Q>::abelian(1);
        let rho = Representation::new(1, vec![Matrix::identity(1)]).unwrap();
        let l = LieAlgebra::semidirect_product(&b, &rho).unwrap();
        // basis (a, y): [y, a] = a
        assert_eq!(l.bracket(&v(&[0, 1]), &v(&[1, 0])), v(&[1, 0]));

        let zero = LieAlgebra::semidirect_product(&ex47(), &Representation::zero(&ex47(), 2)).unwrap();
        assert_eq!(zero.derived_series().dims(), vec![6, 2, 0]);

        let bad = Representation::new(1, vec![Matrix::identity(1); 4]).unwrap();
        assert!(matches!(
            LieAlgebra::semidirect_product(&ex47(), &bad),
            Err(Error::NotRepresentation { .. })
        ));
    }

    #[test]
    fn adjoint_of_x4() {
        let l = ex47();
        let ad = l.adjoint(&v(&[0, 0, 0, 1]));
        let expected = Matrix::<Q>::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert_eq!(ad, expected);
        assert!(ex43().adjoint(&v(&[0, 0, 0, 1])).is_zero());
    }

    #[test]
    fn change_of_basis_preserves_dims() {
        let l = ex47();
        let p = Matrix::<Q>::from_i64(&[&[1, 1, 0, 0], &[0, 1, 0, 2], &[0, 0, 1, 0], &[1, 0, 0, 1]]);
        let m = l.change_basis(&p).unwrap();
        assert_eq!(m.derived_series().dims(), l.derived_series().dims());
        assert_eq!(m.center().dim(), l.center().dim());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn jacobi_on_random_vectors(a in prop::collection::vec(-3i64..=3, 4),
                                        b in prop::collection::vec(-3i64..=3, 4),
                                        c in prop::collection::vec(-3i64..=3, 4)) {
                let l = ex43().map_field(|x| F5::from_rational(x)).unwrap();
                let f = |x: &Vec<i64>| x.iter().map(|&t| F5::from_i64(t)).collect::<Vec<_>>();
                let (x, y, z) = (f(&a), f(&b), f(&c));
                let mut s = l.bracket(&l.bracket(&x, &y), &z);
                axpy(&mut s, &F5::from_i64(1), &l.bracket(&l.bracket(&y, &z), &x));
                axpy(&mut s, &F5::from_i64(1), &l.bracket(&l.bracket(&z, &x), &y));
                prop_assert!(is_zero_vec(&s));
            }
        }
    }
}
