//! Modules over the associative algebra generated by a finite set of matrices.
//!
//! Submodules are the subspaces stable under every generator, so a Lie module
//! given by its basis action matrices is handled directly. Over finite fields
//! irreducibility is decided exactly: by scanning every projective point when
//! the module is small, and otherwise by Norton's test on singular elements of
//! the enveloping algebra. Over the rationals the socle comes from the trace
//! radical of the enveloping algebra.

use crate::enumerate::{line_count, Lines};
use crate::error::{Error, Result};
use crate::field::{to_rational, Field, Rational};
use crate::lie::LieAlgebra;
use crate::linalg::{axpy, kernel_of_rows, unit_vector, EchelonBuilder, Matrix, Subspace};
use crate::rng::XorShift64;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Search limits for the irreducibility machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleConfig {
    /// Modules with at most this many projective points are scanned exhaustively.
    pub line_budget: u128,
    /// Largest kernel (in projective points) Norton's test will scan.
    pub kernel_line_limit: u128,
    /// Number of enveloping-algebra elements tried before giving up.
    pub probe_bound: usize,
    pub seed: u64,
}

impl Default for ModuleConfig {
    fn default() -> Self {
        ModuleConfig {
            line_budget: 4096,
            kernel_line_limit: 1024,
            probe_bound: 400,
            seed: 0x5EED,
        }
    }
}

/// Result of looking for a proper nonzero submodule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Split<T> {
    Irreducible,
    Proper(Subspace<T>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Module<T> {
    dim: usize,
    gens: Vec<Matrix<T>>,
}

/// A simple module in the basis `e_i = w_i e_0` obtained by spinning one vector,
/// where each word `w_i` is a generator applied to an earlier word.
#[derive(Debug, Clone)]
pub struct PresentedSimple<T> {
    pub module: Module<T>,
    /// `(parent, generator)` for every basis vector after the first.
    pub words: Vec<Option<(usize, usize)>>,
}

/// The socle with one decomposition into simple submodules.
#[derive(Debug, Clone)]
pub struct SocleDecomposition<T> {
    pub socle: Subspace<T>,
    pub summands: Vec<Subspace<T>>,
    /// False when some summand could not be certified simple (rationals only).
    pub exact: bool,
}

impl<T: Field> Module<T> {
    pub fn new(dim: usize, gens: Vec<Matrix<T>>) -> Result<Self> {
        for g in &gens {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.rows().max(g.cols()),
                });
            }
        }
        Ok(Module { dim, gens })
    }

    /// `L` acting on itself.
    pub fn adjoint(l: &LieAlgebra<T>) -> Self {
        Module {
            dim: l.dim(),
            gens: l.adjoint_basis(),
        }
    }

    /// `L` acting on the ideal `k`, in `k`'s echelon coordinates.
    pub fn on_ideal(l: &LieAlgebra<T>, k: &Subspace<T>) -> Self {
        Module {
            dim: k.dim(),
            gens: l.action_on_ideal(k),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix<T>] {
        &self.gens
    }

    pub fn full(&self) -> Subspace<T> {
        Subspace::full(self.dim)
    }

    /// Smallest submodule containing the vectors.
    pub fn spin(&self, vectors: &[Vec<T>]) -> Subspace<T> {
        spin_with(&self.gens, self.dim, vectors, false)
    }

    /// Spinning under the transposed generators (the dual action up to sign).
    pub fn spin_transpose(&self, vectors: &[Vec<T>]) -> Subspace<T> {
        spin_with(&self.gens, self.dim, vectors, true)
    }

    pub fn is_submodule(&self, s: &Subspace<T>) -> bool {
        s.basis()
            .iter()
            .all(|v| self.gens.iter().all(|g| s.contains_vector(&g.apply(v))))
    }

    /// The submodule `s` in its echelon coordinates.
    pub fn restrict(&self, s: &Subspace<T>) -> Module<T> {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let cols: Vec<Vec<T>> = s
                    .basis()
                    .iter()
                    .map(|v| s.coordinates(&g.apply(v)).expect("s is a submodule"))
                    .collect();
                Matrix::from_columns(s.dim(), &cols)
            })
            .collect();
        Module { dim: s.dim(), gens }
    }

    /// `V / s` on the non-pivot coordinates of `s`.
    pub fn quotient(&self, s: &Subspace<T>) -> (Module<T>, Vec<usize>) {
        let coords = s.non_pivots();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let cols: Vec<Vec<T>> = coords
                    .iter()
                    .map(|&j| {
                        let r = s.reduce(&g.apply(&unit_vector(self.dim, j)));
                        coords.iter().map(|&i| r[i].clone()).collect()
                    })
                    .collect();
                Matrix::from_columns(coords.len(), &cols)
            })
            .collect();
        (
            Module {
                dim: coords.len(),
                gens,
            },
            coords,
        )
    }

    /// Basis vectors `w_i v` produced by spinning `v`, with their words.
    pub fn spin_words(&self, v: &[T]) -> (Vec<Vec<T>>, Vec<Option<(usize, usize)>>) {
        let mut b = EchelonBuilder::new(self.dim);
        let mut vecs = Vec::new();
        let mut words = Vec::new();
        if b.insert(v.to_vec()).is_none() {
            return (vecs, words);
        }
        vecs.push(v.to_vec());
        words.push(None);
        let mut i = 0;
        while i < vecs.len() {
            for (t, g) in self.gens.iter().enumerate() {
                let w = g.apply(&vecs[i]);
                if b.insert(w.clone()).is_some() {
                    vecs.push(w);
                    words.push(Some((i, t)));
                }
            }
            i += 1;
        }
        (vecs, words)
    }

    /// Looks for a proper nonzero submodule.
    pub fn split(&self, cfg: &ModuleConfig) -> Result<Split<T>> {
        if self.dim <= 1 {
            return Ok(Split::Irreducible);
        }
        if let Some(q) = T::order() {
            if line_count(self.dim, q) <= cfg.line_budget {
                for v in Lines::<T>::new(self.dim)? {
                    let s = self.spin(&[v]);
                    if s.dim() < self.dim {
                        return Ok(Split::Proper(s));
                    }
                }
                return Ok(Split::Irreducible);
            }
        }
        self.norton(cfg)
    }

    fn norton(&self, cfg: &ModuleConfig) -> Result<Split<T>> {
        let n = self.dim;
        let lambdas: Vec<T> = match T::elements() {
            Some(e) => e,
            None => [0, 1, -1, 2, -2].iter().map(|&x| T::from_i64(x)).collect(),
        };
        let mut probes = ProbeSequence::new(&self.gens, n, cfg.seed);
        for _ in 0..cfg.probe_bound {
            let a = probes.next_element();
            for lambda in &lambdas {
                let theta = a.sub(&Matrix::identity(n).scale(lambda));
                let ker = kernel_of_rows(n, theta.row_vecs());
                if ker.is_empty() {
                    continue;
                }
                let k = ker.len();
                let points: Vec<Vec<T>> = match T::order() {
                    Some(q) if line_count(k, q) <= cfg.kernel_line_limit => Lines::<T>::new(k)?
                        .map(|c| crate::linalg::combine(n, &c, &ker))
                        .collect(),
                    None if k == 1 => vec![ker[0].clone()],
                    _ => continue,
                };
                for v in points {
                    let s = self.spin(&[v]);
                    if s.dim() < n {
                        return Ok(Split::Proper(s));
                    }
                }
                let kt = kernel_of_rows(n, theta.transpose().row_vecs());
                let sd = self.spin_transpose(&kt[..1]);
                if sd.dim() < n {
                    return Ok(Split::Proper(sd.annihilator()));
                }
                return Ok(Split::Irreducible);
            }
        }
        Err(Error::ProbeExhausted {
            probes: cfg.probe_bound,
        })
    }

    pub fn is_irreducible(&self, cfg: &ModuleConfig) -> Result<bool> {
        Ok(self.dim > 0 && self.split(cfg)? == Split::Irreducible)
    }

    /// A minimal nonzero submodule.
    pub fn minimal_submodule(&self, cfg: &ModuleConfig) -> Result<Subspace<T>> {
        if self.dim == 0 {
            return Ok(Subspace::zero(0));
        }
        if let Some(q) = T::order() {
            if line_count(self.dim, q) <= cfg.line_budget {
                let mut best = self.full();
                for v in Lines::<T>::new(self.dim)? {
                    let s = self.spin(&[v]);
                    if s.dim() < best.dim() {
                        best = s;
                        if best.dim() == 1 {
                            break;
                        }
                    }
                }
                return Ok(best);
            }
        }
        match self.split(cfg)? {
            Split::Irreducible => Ok(self.full()),
            Split::Proper(s) => {
                let inner = self.restrict(&s).minimal_submodule(cfg)?;
                Ok(Subspace::span(
                    self.dim,
                    inner.basis().iter().map(|c| s.from_coordinates(c)),
                ))
            }
        }
    }

    /// A composition series `0 = V_0 < V_1 < ... < V_r = V` with its factors.
    pub fn composition_series(&self, cfg: &ModuleConfig) -> Result<(Vec<Subspace<T>>, Vec<Module<T>>)> {
        if self.dim == 0 {
            return Ok((vec![Subspace::zero(0)], Vec::new()));
        }
        match self.split(cfg)? {
            Split::Irreducible => Ok((vec![Subspace::zero(self.dim), self.full()], vec![self.clone()])),
            Split::Proper(s) => {
                let (lower, mut factors) = self.restrict(&s).composition_series(cfg)?;
                let (q, coords) = self.quotient(&s);
                let (upper, upper_factors) = q.composition_series(cfg)?;
                let mut chain: Vec<Subspace<T>> = lower
                    .iter()
                    .map(|t| Subspace::span(self.dim, t.basis().iter().map(|c| s.from_coordinates(c))))
                    .collect();
                for t in upper.iter().skip(1) {
                    let lifted = t.basis().iter().map(|u| {
                        let mut v = vec![T::zero(); self.dim];
                        for (x, &i) in u.iter().zip(&coords) {
                            v[i] = x.clone();
                        }
                        v
                    });
                    chain.push(Subspace::span(self.dim, lifted.chain(s.basis().iter().cloned())));
                }
                factors.extend(upper_factors);
                Ok((chain, factors))
            }
        }
    }

    /// Presents a simple module by spinning its first basis vector.
    pub fn present(&self) -> PresentedSimple<T> {
        let (vecs, words) = self.spin_words(&unit_vector(self.dim, 0));
        debug_assert_eq!(vecs.len(), self.dim, "presented module must be cyclic on e_0");
        let p = Matrix::from_columns(self.dim, &vecs);
        let pinv = p.inverse().expect("spin basis is a basis");
        let gens = self.gens.iter().map(|g| pinv.mul(&g.mul(&p))).collect();
        PresentedSimple {
            module: Module {
                dim: self.dim,
                gens,
            },
            words,
        }
    }

    /// Word matrices `w_i` acting on this module.
    fn word_matrices(&self, words: &[Option<(usize, usize)>]) -> Vec<Matrix<T>> {
        let mut out: Vec<Matrix<T>> = Vec::with_capacity(words.len());
        for w in words {
            let m = match w {
                None => Matrix::identity(self.dim),
                Some((parent, g)) => self.gens[*g].mul(&out[*parent]),
            };
            out.push(m);
        }
        out
    }

    /// Images of `e_0` under all module maps from the simple module `t`; a
    /// vector `v` qualifies exactly when `e_0 -> v` extends to a homomorphism.
    pub fn hom_images(&self, t: &PresentedSimple<T>) -> Vec<Vec<T>> {
        let w = self.word_matrices(&t.words);
        let k = t.module.dim;
        let mut rows = Vec::new();
        for (g_v, g_t) in self.gens.iter().zip(&t.module.gens) {
            for i in 0..k {
                let mut m = g_v.mul(&w[i]);
                for (j, wj) in w.iter().enumerate() {
                    let c = &g_t[(j, i)];
                    if !c.is_zero() {
                        m = m.sub(&wj.scale(c));
                    }
                }
                rows.extend(m.row_vecs().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
            }
        }
        kernel_of_rows(self.dim, rows)
    }

    /// The socle and a decomposition into simple submodules; exact over finite fields.
    pub fn socle_decomposition(&self, cfg: &ModuleConfig) -> Result<SocleDecomposition<T>> {
        if T::characteristic() == 0 {
            return Ok(self.socle_decomposition_char0());
        }
        let (_, factors) = self.composition_series(cfg)?;
        let mut types: Vec<PresentedSimple<T>> = Vec::new();
        for f in factors {
            let p = f.present();
            let seen = types
                .iter()
                .any(|t| t.module.dim == p.module.dim && !p.module.hom_images(t).is_empty());
            if !seen {
                types.push(p);
            }
        }
        let mut acc = Subspace::zero(self.dim);
        let mut summands = Vec::new();
        for t in &types {
            let w = self.word_matrices(&t.words);
            for h in self.hom_images(t) {
                let s = Subspace::span(self.dim, w.iter().map(|m| m.apply(&h)));
                if !acc.contains(&s) {
                    acc = acc.sum(&s);
                    summands.push(s);
                }
            }
        }
        Ok(SocleDecomposition {
            socle: acc,
            summands,
            exact: true,
        })
    }

    pub fn socle(&self, cfg: &ModuleConfig) -> Result<Subspace<T>> {
        if T::characteristic() == 0 {
            return Ok(self.socle_char0());
        }
        Ok(self.socle_decomposition(cfg)?.socle)
    }

    pub fn is_completely_reducible(&self, cfg: &ModuleConfig) -> Result<bool> {
        Ok(self.socle(cfg)?.is_full())
    }

    /// Basis of the unital associative algebra generated by the generators.
    pub fn enveloping_algebra(&self) -> Vec<Matrix<T>> {
        let n = self.dim;
        let mut b = EchelonBuilder::new(n * n);
        let mut queue = Vec::new();
        if let Some(r) = b.insert(Matrix::identity(n).as_slice().to_vec()) {
            queue.push(r.to_vec());
        }
        while let Some(v) = queue.pop() {
            let a = Matrix::from_flat(n, n, v);
            for g in &self.gens {
                if let Some(r) = b.insert(g.mul(&a).as_slice().to_vec()) {
                    queue.push(r.to_vec());
                }
            }
        }
        b.rows()
            .iter()
            .map(|r| Matrix::from_flat(n, n, r.clone()))
            .collect()
    }

    /// `{a in E : tr(ab) = 0 for all b in E}`; the Jacobson radical in characteristic 0.
    pub fn trace_radical(&self) -> Vec<Matrix<T>> {
        let e = self.enveloping_algebra();
        let gram: Vec<Vec<T>> = e
            .iter()
            .map(|a| e.iter().map(|b| a.mul(b).trace()).collect())
            .collect();
        kernel_of_rows(e.len(), gram)
            .into_iter()
            .map(|c| {
                let mut acc = Matrix::zeros(self.dim, self.dim);
                for (x, m) in c.iter().zip(&e) {
                    if !x.is_zero() {
                        acc = acc.add(&m.scale(x));
                    }
                }
                acc
            })
            .collect()
    }

    /// Vectors killed by the trace radical; the socle in characteristic 0.
    pub fn socle_char0(&self) -> Subspace<T> {
        let rows: Vec<Vec<T>> = self
            .trace_radical()
            .iter()
            .flat_map(|m| m.row_vecs())
            .collect();
        Subspace::span(self.dim, kernel_of_rows(self.dim, rows))
    }

    /// Dimension of `{x : xg = gx for every generator}`.
    pub fn commutant_dim(&self) -> usize {
        let n = self.dim;
        let mut rows = Vec::new();
        for g in &self.gens {
            // Row (i, j) of xg - gx as a linear form in the entries of x.
            for i in 0..n {
                for j in 0..n {
                    let mut r = vec![T::zero(); n * n];
                    for k in 0..n {
                        r[i * n + k] = r[i * n + k].clone() + g[(k, j)].clone();
                        r[k * n + j] = r[k * n + j].clone() - g[(i, k)].clone();
                    }
                    rows.push(r);
                }
            }
        }
        kernel_of_rows(n * n, rows).len()
    }

    fn socle_decomposition_char0(&self) -> SocleDecomposition<T> {
        let socle = self.socle_char0();
        let sub = self.restrict(&socle);
        let mut pieces = Vec::new();
        let exact = sub.split_semisimple_char0(&sub.full_basis(), &mut pieces);
        let summands = pieces
            .into_iter()
            .map(|p| Subspace::span(self.dim, p.basis().iter().map(|c| socle.from_coordinates(c))))
            .collect();
        SocleDecomposition {
            socle,
            summands,
            exact,
        }
    }

    fn full_basis(&self) -> Subspace<T> {
        self.full()
    }

    /// Splits a semisimple submodule `s` through rational eigenspaces of
    /// enveloping-algebra elements. Returns whether every leaf is certified simple.
    fn split_semisimple_char0(&self, s: &Subspace<T>, out: &mut Vec<Subspace<T>>) -> bool {
        if s.dim() <= 1 {
            if s.dim() == 1 {
                out.push(s.clone());
            }
            return true;
        }
        let m = self.restrict(s);
        if m.commutant_dim() == 1 {
            out.push(s.clone());
            return true;
        }
        let e = m.enveloping_algebra();
        for a in e.iter().chain(m.gens.iter()) {
            for lambda in rational_eigenvalues(a) {
                let theta = a.sub(&Matrix::identity(m.dim).scale(&lambda));
                let ker = Subspace::span(m.dim, kernel_of_rows(m.dim, theta.row_vecs()));
                if ker.dim() == 0 || ker.dim() == m.dim || !m.is_submodule(&ker) {
                    continue;
                }
                let im = m.full().image(&theta);
                if !m.is_submodule(&im) || !ker.intersect(&im).is_zero() {
                    continue;
                }
                let lift = |t: &Subspace<T>| {
                    Subspace::span(s.ambient(), t.basis().iter().map(|c| s.from_coordinates(c)))
                };
                let a_ok = self.split_semisimple_char0(&lift(&ker), out);
                let b_ok = self.split_semisimple_char0(&lift(&im), out);
                return a_ok && b_ok;
            }
        }
        out.push(s.clone());
        // A leaf is simple when some element has an irreducible characteristic
        // polynomial of full degree; below degree 4 that means no rational root.
        m.dim <= 3
            && e.iter().any(|a| rational_eigenvalues(a).is_empty() && minimal_degree(a) == m.dim)
    }
}

fn spin_with<T: Field>(gens: &[Matrix<T>], n: usize, vectors: &[Vec<T>], transpose: bool) -> Subspace<T> {
    let ts: Vec<Matrix<T>>;
    let gens = if transpose {
        ts = gens.iter().map(|g| g.transpose()).collect();
        &ts
    } else {
        gens
    };
    let mut b = EchelonBuilder::new(n);
    let mut queue: Vec<Vec<T>> = Vec::new();
    for v in vectors {
        if let Some(r) = b.insert(v.clone()) {
            queue.push(r.to_vec());
        }
    }
    while let Some(v) = queue.pop() {
        if b.len() == n {
            break;
        }
        for g in gens {
            if let Some(r) = b.insert(g.apply(&v)) {
                queue.push(r.to_vec());
            }
        }
    }
    b.into_subspace()
}

/// Deterministic stream of enveloping-algebra elements: generators, pairwise
/// sums and products, then seeded random combinations of short words.
struct ProbeSequence<'a, T> {
    gens: &'a [Matrix<T>],
    n: usize,
    fixed: Vec<Matrix<T>>,
    pos: usize,
    rng: XorShift64,
}

impl<'a, T: Field> ProbeSequence<'a, T> {
    fn new(gens: &'a [Matrix<T>], n: usize, seed: u64) -> Self {
        let mut fixed: Vec<Matrix<T>> = gens.to_vec();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                fixed.push(gens[i].add(&gens[j]));
            }
        }
        for a in gens {
            for b in gens {
                fixed.push(a.mul(b));
            }
        }
        ProbeSequence {
            gens,
            n,
            fixed,
            pos: 0,
            rng: XorShift64::new(seed),
        }
    }

    fn next_element(&mut self) -> Matrix<T> {
        if self.pos < self.fixed.len() {
            self.pos += 1;
            return self.fixed[self.pos - 1].clone();
        }
        let mut acc = Matrix::zeros(self.n, self.n);
        if self.gens.is_empty() {
            return acc;
        }
        let terms = 2 + self.rng.below(3) as usize;
        for _ in 0..terms {
            let len = 1 + self.rng.below(3) as usize;
            let mut w = Matrix::identity(self.n);
            for _ in 0..len {
                w = self.rng.pick(self.gens).mul(&w);
            }
            let c: T = self.rng.nonzero_scalar(2);
            acc = acc.add(&w.scale(&c));
        }
        acc
    }
}

/// Characteristic polynomial `det(xI - a)` by Faddeev-LeVerrier, lowest
/// coefficient first. Characteristic zero only.
pub fn charpoly_char0<T: Field>(a: &Matrix<T>) -> Vec<T> {
    assert_eq!(T::characteristic(), 0, "Faddeev-LeVerrier needs characteristic 0");
    let n = a.rows();
    let mut c = vec![T::zero(); n + 1];
    c[n] = T::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&Matrix::identity(n).scale(&c[n - k + 1]));
        let t = a.mul(&m).trace();
        c[n - k] = -(t / T::from_i64(k as i64));
    }
    c
}

fn minimal_degree<T: Field>(a: &Matrix<T>) -> usize {
    let n = a.rows();
    let mut b = EchelonBuilder::new(n * n);
    let mut p = Matrix::identity(n);
    let mut d = 0;
    while b.insert(p.as_slice().to_vec()).is_some() {
        d += 1;
        p = a.mul(&p);
    }
    d
}

/// Distinct rational roots of the characteristic polynomial, in increasing
/// order. Empty over finite fields or when the constant term is too large to
/// factor by trial division.
pub fn rational_eigenvalues<T: Field>(a: &Matrix<T>) -> Vec<T> {
    if T::characteristic() != 0 || a.rows() == 0 {
        return Vec::new();
    }
    let poly: Vec<Rational> = charpoly_char0(a).iter().map(to_rational).collect();
    let mut roots = Vec::new();
    // Strip the factor x^k.
    let shift = poly.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if shift > 0 {
        roots.push(Rational::zero());
    }
    let poly = &poly[shift..];
    let lcm = poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    let limit = BigInt::from(1_000_000u64);
    if ints.len() > 1 && a0 <= limit && an <= limit {
        let divisors = |x: &BigInt| -> Vec<i64> {
            let x = x.to_i64().unwrap_or(1).max(1);
            (1..=x).filter(|d| x % d == 0).collect()
        };
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1i64, -1] {
                    let r = Rational::new(BigInt::from(sign * p), BigInt::from(q));
                    let mut acc = Rational::zero();
                    for c in ints.iter().rev() {
                        acc = acc * &r + Rational::from_integer(c.clone());
                    }
                    if acc.is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
        .iter()
        .map(|r| T::from_rational(r).expect("characteristic 0"))
        .collect()
}

/// Whether `v` and `w` agree after scaling, used by tests.
#[allow(dead_code)]
fn proportional<T: Field>(v: &[T], w: &[T]) -> bool {
    let Some(i) = v.iter().position(|x| !x.is_zero()) else {
        return w.iter().all(|x| x.is_zero());
    };
    if w[i].is_zero() {
        return false;
    }
    let f = w[i].clone() / v[i].clone();
    let mut d = w.to_vec();
    axpy(&mut d, &-f, v);
    d.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{F3, F5};

    fn shift_and_degree<T: Field>() -> Module<T> {
        // [D, S] = S on F^3: D = diag(0,1,2), S cyclic shift.
        let d = Matrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let s = Matrix::from_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        Module::new(3, vec![d, s]).unwrap()
    }

    #[test]
    fn spin_of_eigenvector() {
        let m = shift_and_degree::<F3>();
        assert!(m.spin(&[unit_vector(3, 0)]).is_full());
        let d_only = Module::new(3, vec![m.gens()[0].clone()]).unwrap();
        assert_eq!(d_only.spin(&[unit_vector(3, 1)]).dim(), 1);
    }

    #[test]
    fn irreducible_over_f3() {
        let cfg = ModuleConfig::default();
        assert!(shift_and_degree::<F3>().is_irreducible(&cfg).unwrap());
        let zero = Module::<F3>::new(2, vec![Matrix::zeros(2, 2)]).unwrap();
        assert!(!zero.is_irreducible(&cfg).unwrap());
    }

    #[test]
    fn norton_agrees_with_scan() {
        let scan = ModuleConfig::default();
        let norton = ModuleConfig {
            line_budget: 0,
            ..ModuleConfig::default()
        };
        let m = shift_and_degree::<F5>();
        // Over F5 the shift has order 3 but D has eigenvalues 0,1,2 and [D,S]=S still holds.
        assert_eq!(m.is_irreducible(&scan).unwrap(), m.is_irreducible(&norton).unwrap());
        let upper = Module::<F5>::new(2, vec![Matrix::from_i64(&[&[1, 1], &[0, 1]])]).unwrap();
        assert!(!upper.is_irreducible(&norton).unwrap());
        match upper.split(&norton).unwrap() {
            Split::Proper(s) => assert_eq!(s, Subspace::from_i64(2, &[&[1, 0]])),
            Split::Irreducible => panic!("upper triangular action is reducible"),
        }
    }

    #[test]
    fn composition_series_of_triangular_action() {
        let cfg = ModuleConfig::default();
        let m = Module::<F3>::new(
            3,
            vec![Matrix::from_i64(&[&[1, 1, 0], &[0, 2, 1], &[0, 0, 1]])],
        )
        .unwrap();
        let (chain, factors) = m.composition_series(&cfg).unwrap();
        assert_eq!(chain.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(factors.len(), 3);
        for w in chain.windows(2) {
            assert!(w[1].contains(&w[0]));
            assert!(m.is_submodule(&w[1]));
        }
    }

    #[test]
    fn socle_of_uniserial_and_semisimple() {
        let cfg = ModuleConfig::default();
        let jordan = Module::<F5>::new(2, vec![Matrix::from_i64(&[&[0, 1], &[0, 0]])]).unwrap();
        assert_eq!(jordan.socle(&cfg).unwrap(), Subspace::from_i64(2, &[&[1, 0]]));
        let diag = Module::<F5>::new(2, vec![Matrix::from_i64(&[&[1, 0], &[0, 2]])]).unwrap();
        let d = diag.socle_decomposition(&cfg).unwrap();
        assert!(d.socle.is_full());
        assert_eq!(d.summands.len(), 2);
        let trivial = Module::<F5>::new(2, vec![Matrix::zeros(2, 2)]).unwrap();
        let t = trivial.socle_decomposition(&cfg).unwrap();
        assert_eq!(t.summands.len(), 2);
    }

    #[test]
    fn socle_over_rationals() {
        let jordan = Module::<Rational>::new(2, vec![Matrix::from_i64(&[&[3, 1], &[0, 3]])]).unwrap();
        assert_eq!(jordan.socle_char0(), Subspace::from_i64(2, &[&[1, 0]]));
        let diag = Module::<Rational>::new(2, vec![Matrix::from_i64(&[&[1, 0], &[0, 2]])]).unwrap();
        let d = diag.socle_decomposition(&ModuleConfig::default()).unwrap();
        assert!(d.exact);
        assert_eq!(d.summands.len(), 2);
        let rot = Module::<Rational>::new(2, vec![Matrix::from_i64(&[&[0, -1], &[1, 0]])]).unwrap();
        let r = rot.socle_decomposition(&ModuleConfig::default()).unwrap();
        assert!(r.exact);
        assert_eq!(r.summands.len(), 1);
    }

    #[test]
    fn charpoly_and_roots() {
        let a = Matrix::<Rational>::from_i64(&[&[2, 1], &[0, -3]]);
        let p = charpoly_char0(&a);
        assert_eq!(p, vec![Rational::from_i64(-6), Rational::from_i64(1), Rational::from_i64(1)]);
        assert_eq!(rational_eigenvalues(&a), vec![Rational::from_i64(-3), Rational::from_i64(2)]);
        let z = Matrix::<Rational>::zeros(2, 2);
        assert_eq!(rational_eigenvalues(&z), vec![Rational::from_i64(0)]);
    }

    #[test]
    fn hom_images_detect_isomorphism() {
        let a = Module::<F5>::new(1, vec![Matrix::from_i64(&[&[2]])]).unwrap();
        let b = Module::<F5>::new(1, vec![Matrix::from_i64(&[&[3]])]).unwrap();
        assert_eq!(a.hom_images(&a.present()).len(), 1);
        assert!(b.hom_images(&a.present()).is_empty());
        assert!(proportional(&[F5::new(1), F5::new(2)], &[F5::new(3), F5::new(1)]));
    }
}
