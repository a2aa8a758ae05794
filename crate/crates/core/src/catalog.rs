//! Worked examples, standard small algebras and a seeded generator of random
//! solvable algebras.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::{kernel_of_rows, Matrix, Subspace};
use crate::module::{Module, ModuleConfig};
use crate::rng::XorShift64;

/// `[e1,e2] = e3, [e1,e3] = e2, [e2,e3] = e4`.
pub fn ex4_3<T: Field>() -> LieAlgebra<T> {
    LieAlgebra::from_int_brackets(4, &[(0, 1, &[(2, 1)]), (0, 2, &[(1, 1)]), (1, 2, &[(3, 1)])])
        .expect("valid brackets")
}

/// `[x4,x1] = x1, [x4,x2] = x2, [x3,x1] = x2`.
pub fn ex4_7<T: Field>() -> LieAlgebra<T> {
    LieAlgebra::from_int_brackets(4, &[(0, 3, &[(0, -1)]), (1, 3, &[(1, -1)]), (0, 2, &[(1, -1)])])
        .expect("valid brackets")
}

/// A faithful completely reducible module for [`ex4_7`] in characteristic `p`.
///
/// The first `p^2` coordinates are the monomials `u^a w^b` (`a, b < p`, index
/// `a*p + b`) with `x1 = u S`, `x2 = S`, `x3 = d/du`, `x4 = w d/dw`, where `S`
/// is the cyclic shift `w^b -> w^(b+1 mod p)`; this module is irreducible. The
/// last coordinate is the 1-dim module with `x4 = 1` and the rest zero.
pub fn ex4_9_representation<T: Field>() -> Result<Representation<T>> {
    let p = T::order().ok_or(Error::RequiresPrimeField)? as usize;
    let n = p * p + 1;
    let idx = |a: usize, b: usize| a * p + b;
    let mut x = vec![Matrix::zeros(n, n); 4];
    for a in 0..p {
        for b in 0..p {
            let src = idx(a, b);
            let b1 = (b + 1) % p;
            if a + 1 < p {
                x[0][(idx(a + 1, b1), src)] = T::one();
            }
            x[1][(idx(a, b1), src)] = T::one();
            if a > 0 {
                x[2][(idx(a - 1, b), src)] = T::from_i64(a as i64);
            }
            x[3][(src, src)] = T::from_i64(b as i64);
        }
    }
    x[3][(n - 1, n - 1)] = T::one();
    Representation::new(n, x)
}

/// `X = B ∔ L` for `L` = [`ex4_7`] and `B` = [`ex4_9_representation`].
#[derive(Debug, Clone)]
pub struct SemidirectExample<T: Field> {
    pub algebra: LieAlgebra<T>,
    pub module: Subspace<T>,
    pub acting: Subspace<T>,
    pub representation: Representation<T>,
}

/// Builds the example and verifies that the module is faithful
/// (`Z_X(B) = B`) and completely reducible.
pub fn ex4_9<T: Field>(cfg: &ModuleConfig) -> Result<SemidirectExample<T>> {
    let l = ex4_7::<T>();
    let rho = ex4_9_representation::<T>()?;
    let x = LieAlgebra::semidirect_product(&l, &rho)?;
    let m = rho.module_dim;
    let n = x.dim();
    let module = Subspace::coordinate(n, &(0..m).collect::<Vec<_>>());
    let acting = Subspace::coordinate(n, &(m..n).collect::<Vec<_>>());
    if !rho.is_faithful(l.dim()) || x.centralizer(&module, &x.zero_space()) != module {
        return Err(Error::Postcondition("ex4_9 module is not faithful".into()));
    }
    if !Module::new(m, rho.matrices.clone())?.is_completely_reducible(cfg)? {
        return Err(Error::Postcondition("ex4_9 module is not completely reducible".into()));
    }
    Ok(SemidirectExample {
        algebra: x,
        module,
        acting,
        representation: rho,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleId {
    Ex4_3,
    Ex4_7,
    Ex4_9,
}

impl ExampleId {
    pub const ALL: [ExampleId; 3] = [ExampleId::Ex4_3, ExampleId::Ex4_7, ExampleId::Ex4_9];

    pub fn as_str(self) -> &'static str {
        match self {
            ExampleId::Ex4_3 => "ex4_3",
            ExampleId::Ex4_7 => "ex4_7",
            ExampleId::Ex4_9 => "ex4_9",
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|e| e.as_str() == s.trim())
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// The algebra of a worked example.
pub fn paper_example<T: Field>(id: ExampleId) -> Result<LieAlgebra<T>> {
    match id {
        ExampleId::Ex4_3 => Ok(ex4_3()),
        ExampleId::Ex4_7 => Ok(ex4_7()),
        ExampleId::Ex4_9 => Ok(ex4_9::<T>(&ModuleConfig::default())?.algebra),
    }
}

/// Small named algebras used as fixtures.
pub fn standard_algebras<T: Field>() -> Vec<(&'static str, LieAlgebra<T>)> {
    let b = |n: usize, br: &[(usize, usize, &[(usize, i64)])]| LieAlgebra::from_int_brackets(n, br).expect("valid brackets");
    vec![
        ("abelian_1", LieAlgebra::abelian(1)),
        ("abelian_3", LieAlgebra::abelian(3)),
        ("affine_line", b(2, &[(0, 1, &[(1, 1)])])),
        ("heisenberg", b(3, &[(0, 1, &[(2, 1)])])),
        ("upper_triangular_2", b(3, &[(0, 2, &[(2, 1)]), (1, 2, &[(2, -1)])])),
        ("euclidean_plane", b(3, &[(0, 2, &[(1, -1)]), (1, 2, &[(0, 1)])])),
        ("filiform_4", b(4, &[(0, 1, &[(2, 1)]), (0, 2, &[(3, 1)])])),
        ("affine_line_sum", b(4, &[(0, 1, &[(1, 1)]), (2, 3, &[(3, 1)])])),
        ("diagonal_plane", b(3, &[(0, 2, &[(0, 1)]), (1, 2, &[(1, 1)])])),
    ]
}

/// How [`random_solvable`] builds an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Recipe {
    /// Lie closure of random upper-triangular matrices.
    UpperTriangularRep,
    /// Repeated `A ⋊ B` with actions factoring through `B / B^2`.
    IteratedSemidirect,
    /// Repeated abelian extensions with random 2-cocycles.
    RandomTower,
}

impl Recipe {
    pub const ALL: [Recipe; 3] = [Recipe::UpperTriangularRep, Recipe::IteratedSemidirect, Recipe::RandomTower];

    pub fn as_str(self) -> &'static str {
        match self {
            Recipe::UpperTriangularRep => "upper_triangular_rep",
            Recipe::IteratedSemidirect => "iterated_semidirect",
            Recipe::RandomTower => "random_tower",
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Recipe::ALL
            .into_iter()
            .find(|r| r.as_str() == s.trim())
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorProfile {
    pub max_dim: usize,
    pub field: FieldSpec,
    pub seed: u64,
    pub recipe: Recipe,
    pub scramble: bool,
}

/// `count` profiles cycling through the recipes, with scrambling on every
/// other instance and seeds drawn from `seed`.
pub fn corpus_profiles(field: FieldSpec, max_dim: usize, count: usize, seed: u64) -> Vec<GeneratorProfile> {
    let mut rng = XorShift64::new(seed);
    (0..count)
        .map(|i| GeneratorProfile {
            max_dim,
            field,
            seed: rng.fork(),
            recipe: Recipe::ALL[i % 3],
            scramble: (i / 3) % 2 == 1,
        })
        .collect()
}

/// A random solvable algebra of dimension at most `profile.max_dim`.
///
/// The xorshift64* stream seeded through splitmix64 is the only source of
/// randomness, so a profile determines the algebra exactly.
pub fn random_solvable<T: Field>(profile: &GeneratorProfile) -> Result<LieAlgebra<T>> {
    if T::spec() != profile.field {
        return Err(Error::FieldMismatch {
            left: T::spec(),
            right: profile.field,
        });
    }
    let mut rng = XorShift64::new(profile.seed);
    if profile.max_dim <= 1 {
        return Ok(LieAlgebra::abelian(profile.max_dim));
    }
    let d = 2 + rng.below(profile.max_dim as u64 - 1) as usize;
    let l = match profile.recipe {
        Recipe::UpperTriangularRep => upper_triangular(&mut rng, d),
        Recipe::IteratedSemidirect => extensions(&mut rng, d, false),
        Recipe::RandomTower => extensions(&mut rng, d, true),
    };
    if profile.scramble {
        let p = random_invertible(&mut rng, l.dim());
        return l.change_basis(&p);
    }
    Ok(l)
}

fn random_matrix<T: Field>(rng: &mut XorShift64, n: usize, density: u64) -> Matrix<T> {
    let mut m = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            if rng.chance(density, 4) {
                m[(r, c)] = rng.scalar(2);
            }
        }
    }
    m
}

fn random_invertible<T: Field>(rng: &mut XorShift64, n: usize) -> Matrix<T> {
    loop {
        let m = random_matrix(rng, n, 3);
        if m.inverse().is_some() {
            return m;
        }
    }
}

fn flatten<T: Field>(m: &Matrix<T>) -> Vec<T> {
    m.as_slice().to_vec()
}

fn upper_triangular<T: Field>(rng: &mut XorShift64, d: usize) -> LieAlgebra<T> {
    let mut m = 2;
    while m * (m + 1) / 2 < d {
        m += 1;
    }
    if m < 4 && rng.chance(1, 3) {
        m += 1;
    }
    let mut span: Subspace<T> = Subspace::zero(m * m);
    for _ in 0..24 {
        if span.dim() == d {
            break;
        }
        let mut g = Matrix::zeros(m, m);
        for r in 0..m {
            for c in r..m {
                if rng.chance(1, 2) {
                    g[(r, c)] = rng.scalar(2);
                }
            }
        }
        let closed = matrix_closure(&span, &g, m);
        if closed.dim() <= d {
            span = closed;
        }
    }
    let basis: Vec<Matrix<T>> = span.basis().iter().map(|v| Matrix::from_flat(m, m, v.clone())).collect();
    let k = basis.len();
    let mut brackets = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let c = span
                .coordinates(&flatten(&basis[i].commutator(&basis[j])))
                .expect("closed under brackets");
            let terms: Vec<(usize, T)> = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            if !terms.is_empty() {
                brackets.push((i, j, terms));
            }
        }
    }
    LieAlgebra::from_brackets(k, &brackets).expect("matrix algebras satisfy Jacobi")
}

/// The smallest bracket-closed matrix space containing `span` and `g`.
fn matrix_closure<T: Field>(span: &Subspace<T>, g: &Matrix<T>, m: usize) -> Subspace<T> {
    let mut s = span.sum(&Subspace::span(m * m, [flatten(g)]));
    loop {
        let mats: Vec<Matrix<T>> = s.basis().iter().map(|v| Matrix::from_flat(m, m, v.clone())).collect();
        let mut next = s.clone();
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                next = next.sum(&Subspace::span(m * m, [flatten(&mats[i].commutator(&mats[j]))]));
            }
        }
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
}

/// A random module of `b` of dimension `m` on which `B^2` acts trivially.
fn abelian_action<T: Field>(rng: &mut XorShift64, b: &LieAlgebra<T>, m: usize) -> Representation<T> {
    if rng.chance(1, 6) {
        return Representation::zero(b, m);
    }
    let d1 = b.product_space(&b.full(), &b.full());
    let dual = d1.annihilator();
    let pick = |rng: &mut XorShift64| -> Vec<T> {
        let mut c = vec![T::zero(); b.dim()];
        for v in dual.basis() {
            let s: T = rng.scalar(2);
            for (ci, vi) in c.iter_mut().zip(v) {
                *ci = ci.clone() + s.clone() * vi.clone();
            }
        }
        c
    };
    let d = random_matrix::<T>(rng, m, 2);
    let d2 = d.mul(&d);
    let (c, e) = (pick(rng), pick(rng));
    let matrices = (0..b.dim())
        .map(|i| d.scale(&c[i]).add(&d2.scale(&e[i])))
        .collect();
    Representation::new(m, matrices).expect("square matrices")
}

/// A random element of `Z^2(B, A)` for the module `rho`, as `omega[i][j]`.
fn random_cocycle<T: Field>(rng: &mut XorShift64, b: &LieAlgebra<T>, rho: &Representation<T>) -> Vec<Vec<Vec<T>>> {
    let k = b.dim();
    let m = rho.module_dim;
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let unknowns = pairs.len() * m;
    let var = |a: usize, c: usize, s: usize| -> Option<(usize, bool)> {
        if a == c {
            return None;
        }
        let (lo, hi, sign) = if a < c { (a, c, true) } else { (c, a, false) };
        let p = pairs.iter().position(|&q| q == (lo, hi)).expect("pair");
        Some((p * m + s, sign))
    };
    let mut rows = Vec::new();
    for x in 0..k {
        for y in x + 1..k {
            for z in y + 1..k {
                for t in 0..m {
                    let mut row = vec![T::zero(); unknowns];
                    let mut add = |a: usize, c: usize, s: usize, coef: T| {
                        if let Some((u, sign)) = var(a, c, s) {
                            let v = if sign { coef } else { -coef };
                            row[u] = row[u].clone() + v;
                        }
                    };
                    for s in 0..m {
                        add(y, z, s, rho.matrices[x][(t, s)].clone());
                        add(x, z, s, -rho.matrices[y][(t, s)].clone());
                        add(x, y, s, rho.matrices[z][(t, s)].clone());
                    }
                    for (u, v, w, sign) in [(x, y, z, -1), (x, z, y, 1), (y, z, x, -1)] {
                        for (lidx, c) in b.structure(u, v).iter().enumerate() {
                            if !c.is_zero() {
                                add(lidx, w, t, T::from_i64(sign) * c.clone());
                            }
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    let solutions = kernel_of_rows(unknowns, rows);
    let mut flat = vec![T::zero(); unknowns];
    for s in &solutions {
        let c: T = rng.scalar(2);
        for (f, v) in flat.iter_mut().zip(s) {
            *f = f.clone() + c.clone() * v.clone();
        }
    }
    let mut omega = vec![vec![vec![T::zero(); m]; k]; k];
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for s in 0..m {
            let v = flat[p * m + s].clone();
            omega[i][j][s] = v.clone();
            omega[j][i][s] = -v;
        }
    }
    omega
}

/// Grows `B` by abelian ideals until it reaches dimension `d`.
fn extensions<T: Field>(rng: &mut XorShift64, d: usize, cocycles: bool) -> LieAlgebra<T> {
    let mut b = if d >= 3 && rng.chance(1, 2) {
        LieAlgebra::abelian(2)
    } else {
        LieAlgebra::abelian(1)
    };
    while b.dim() < d {
        let m = 1 + rng.below((d - b.dim()).min(2) as u64) as usize;
        let rho = abelian_action(rng, &b, m);
        b = if cocycles {
            let omega = random_cocycle(rng, &b, &rho);
            extension(&b, &rho, &omega)
        } else {
            LieAlgebra::semidirect_product(&b, &rho).expect("valid action")
        };
    }
    b
}

/// The extension of `B` by the module `rho` with cocycle `omega`; module basis first.
pub fn extension<T: Field>(b: &LieAlgebra<T>, rho: &Representation<T>, omega: &[Vec<Vec<T>>]) -> LieAlgebra<T> {
    let m = rho.module_dim;
    let k = b.dim();
    let n = m + k;
    let mut c = vec![vec![vec![T::zero(); n]; n]; n];
    for i in 0..k {
        for j in 0..k {
            for (t, x) in b.structure(i, j).iter().enumerate() {
                c[m + i][m + j][m + t] = x.clone();
            }
            for (s, x) in omega[i][j].iter().enumerate() {
                c[m + i][m + j][s] = x.clone();
            }
        }
        for a in 0..m {
            for t in 0..m {
                let x = rho.matrices[i][(t, a)].clone();
                c[m + i][a][t] = x.clone();
                c[a][m + i][t] = -x;
            }
        }
    }
    LieAlgebra::validate(&c).expect("cocycle extension satisfies Jacobi")
}

/// Every solvable algebra structure on `F^n` over a finite field, as raw tensors.
pub fn all_solvable_tensors<T: Field>(n: usize, budget: u128) -> Result<Vec<LieAlgebra<T>>> {
    let elems = T::elements().ok_or(Error::RequiresPrimeField)?;
    let q = elems.len() as u128;
    let slots = n * n.saturating_sub(1) / 2 * n;
    let total = (0..slots).try_fold(1u128, |acc, _| acc.checked_mul(q)).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded { required: total, budget });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut digits = vec![0usize; slots];
    loop {
        let brackets: Vec<(usize, usize, Vec<(usize, T)>)> = pairs
            .iter()
            .enumerate()
            .map(|(p, &(i, j))| (i, j, (0..n).map(|k| (k, elems[digits[p * n + k]].clone())).collect()))
            .collect();
        if let Ok(l) = LieAlgebra::from_brackets(n, &brackets) {
            if l.is_solvable() {
                out.push(l);
            }
        }
        let mut i = 0;
        loop {
            if i == slots {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < elems.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// A qA algebra `B` over a finite field with a faithful irreducible module,
/// chosen by `seed`.
///
/// Shapes: `F` acting by a matrix with irreducible minimal polynomial; `F^2`
/// acting by `1` and such a matrix; and the 2-dim algebra `[y, a] = a`
/// acting on `F^p` by `y = diag(0..p-1) + c` and `a` a weighted cycle. Every
/// representation is conjugated by a random invertible matrix.
pub fn construction_pair<T: Field>(seed: u64) -> Result<(LieAlgebra<T>, Representation<T>)> {
    let p = T::order().ok_or(Error::RequiresPrimeField)? as usize;
    let mut rng = XorShift64::new(seed);
    let cfg = ModuleConfig::default();
    let (b, matrices) = match rng.below(3) {
        0 => {
            let m = 1 + rng.below(3) as usize;
            (LieAlgebra::abelian(1), vec![irreducible_matrix(&mut rng, m, &cfg)?])
        }
        1 => {
            let m = 2 + rng.below(2) as usize;
            let x = irreducible_matrix(&mut rng, m, &cfg)?;
            (LieAlgebra::abelian(2), vec![Matrix::identity(m), x])
        }
        _ => {
            let b = LieAlgebra::from_int_brackets(2, &[(0, 1, &[(1, 1)])])?;
            let c: T = rng.scalar(2);
            let mut y = Matrix::zeros(p, p);
            let mut a = Matrix::zeros(p, p);
            for i in 0..p {
                y[(i, i)] = T::from_i64(i as i64) + c.clone();
                a[((i + 1) % p, i)] = rng.nonzero_scalar(2);
            }
            (b, vec![y, a])
        }
    };
    let m = matrices[0].rows();
    let q: Matrix<T> = random_invertible(&mut rng, m);
    let qi = q.inverse().expect("invertible");
    let conj = matrices.iter().map(|x| qi.mul(x).mul(&q)).collect();
    let rho = Representation::new(m, conj)?;
    rho.validate(&b)?;
    Ok((b, rho))
}

fn irreducible_matrix<T: Field>(rng: &mut XorShift64, m: usize, cfg: &ModuleConfig) -> Result<Matrix<T>> {
    loop {
        let x: Matrix<T> = random_matrix(rng, m, 3);
        if m == 1 && x[(0, 0)].is_zero() {
            continue;
        }
        if Module::new(m, vec![x.clone()])?.is_irreducible(cfg)? {
            return Ok(x);
        }
    }
}

/// Number of solvable tensors [`all_solvable_tensors`] would examine.
pub fn tensor_count<T: Field>(n: usize) -> Result<u128> {
    let slots = n * n.saturating_sub(1) / 2 * n;
    let q = T::order().ok_or(Error::RequiresPrimeField)? as u128;
    Ok((0..slots).fold(1u128, |acc, _| acc.saturating_mul(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F2, F3, F5};

    #[test]
    fn examples_have_expected_shape() {
        let l = ex4_3::<Rational>();
        assert_eq!(l.derived_length(), Some(3));
        let l = ex4_7::<Rational>();
        assert_eq!(l.derived_series().term(1), &Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
    }

    #[test]
    fn ex4_9_over_f5() {
        let x = ex4_9::<F5>(&ModuleConfig::default()).unwrap();
        assert_eq!(x.algebra.dim(), 30);
        assert_eq!(x.module.dim(), 26);
        assert!(ex4_9::<Rational>(&ModuleConfig::default()).is_err());
    }

    #[test]
    fn ex4_9_small_primes() {
        for l in [ex4_9::<F2>(&ModuleConfig::default()).unwrap().algebra.dim(), ex4_9::<F3>(&ModuleConfig::default()).unwrap().algebra.dim()] {
            assert!(l == 9 || l == 14);
        }
    }

    #[test]
    fn standard_algebras_are_solvable() {
        for (name, l) in standard_algebras::<Rational>() {
            assert!(l.is_solvable(), "{name}");
        }
    }

    #[test]
    fn generator_is_deterministic_and_solvable() {
        for field in [FieldSpec::Rationals] {
            for prof in corpus_profiles(field, 6, 30, 7) {
                let a = random_solvable::<Rational>(&prof).unwrap();
                let b = random_solvable::<Rational>(&prof).unwrap();
                assert_eq!(a.tensor(), b.tensor());
                assert!(a.is_solvable());
                assert!(a.dim() <= 6);
            }
        }
        for prof in corpus_profiles(FieldSpec::Prime(3), 5, 30, 9) {
            let a = random_solvable::<F3>(&prof).unwrap();
            assert!(a.is_solvable());
        }
    }

    #[test]
    fn triangular_rep_is_completely_solvable_in_char0() {
        for seed in 0..20 {
            let prof = GeneratorProfile {
                max_dim: 4,
                field: FieldSpec::Rationals,
                seed,
                recipe: Recipe::UpperTriangularRep,
                scramble: true,
            };
            assert!(random_solvable::<Rational>(&prof).unwrap().predicates().completely_solvable);
        }
    }

    #[test]
    fn small_profiles_are_abelian() {
        let prof = GeneratorProfile {
            max_dim: 1,
            field: FieldSpec::Prime(2),
            seed: 3,
            recipe: Recipe::RandomTower,
            scramble: false,
        };
        assert!(random_solvable::<F2>(&prof).unwrap().is_abelian());
        let b = LieAlgebra::<F2>::abelian(2);
        let x = LieAlgebra::semidirect_product(&b, &Representation::zero(&b, 2)).unwrap();
        assert!(x.is_abelian());
    }

    #[test]
    fn tensors_over_f2() {
        let all = all_solvable_tensors::<F2>(2, 1 << 20).unwrap();
        // abelian plus the three nonzero brackets [e1,e2] in span(e1,e2).
        assert_eq!(all.len(), 4);
        assert_eq!(tensor_count::<F2>(3).unwrap(), 512);
    }

    #[test]
    fn construction_pairs_are_faithful_irreducible() {
        for seed in 0..12 {
            let (b, rho) = construction_pair::<F3>(seed).unwrap();
            assert!(rho.is_faithful(b.dim()));
            let m = Module::new(rho.module_dim, rho.matrices.clone()).unwrap();
            assert!(m.is_irreducible(&ModuleConfig::default()).unwrap());
        }
    }
}
