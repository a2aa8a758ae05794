//! Exhaustive enumeration over finite fields: vectors, projective points,
//! and all subspaces of `F_p^n` in canonical echelon order, with the
//! Gaussian-binomial counts used for budgeting.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;

/// Default cap on the number of candidate subspaces an enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 20;

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
        den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

/// Number of subspaces of `F_q^n` of every dimension.
pub fn total_subspaces(n: usize, q: u64) -> u128 {
    (0..=n)
        .map(|k| gaussian_binomial(n, k, q))
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// Number of one-dimensional subspaces of `F_q^k`.
pub fn line_count(k: usize, q: u64) -> u128 {
    gaussian_binomial(k, 1, q)
}

fn field_elements<T: Field>() -> Result<Vec<T>> {
    T::elements().ok_or(Error::RequiresPrimeField)
}

/// Every vector of `F^k`, counting in base `p` with the first coordinate
/// varying fastest.
pub struct Vectors<T> {
    elems: Vec<T>,
    digits: Vec<usize>,
    done: bool,
}

impl<T: Field> Vectors<T> {
    pub fn new(k: usize) -> Result<Self> {
        Ok(Vectors {
            elems: field_elements()?,
            digits: vec![0; k],
            done: false,
        })
    }
}

fn bump(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

impl<T: Field> Iterator for Vectors<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.done {
            return None;
        }
        let v = self.digits.iter().map(|&d| self.elems[d].clone()).collect();
        if !bump(&mut self.digits, self.elems.len()) {
            self.done = true;
        }
        Some(v)
    }
}

/// Representatives of the projective points of `F^k`: vectors whose first
/// nonzero coordinate is one.
pub struct Lines<T> {
    k: usize,
    lead: usize,
    inner: Option<Vectors<T>>,
}

impl<T: Field> Lines<T> {
    pub fn new(k: usize) -> Result<Self> {
        field_elements::<T>()?;
        Ok(Lines {
            k,
            lead: 0,
            inner: if k == 0 { None } else { Some(Vectors::new(k - 1)?) },
        })
    }
}

impl<T: Field> Iterator for Lines<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        loop {
            let inner = self.inner.as_mut()?;
            if let Some(tail) = inner.next() {
                let mut v = vec![T::zero(); self.lead];
                v.push(T::one());
                v.extend(tail);
                return Some(v);
            }
            self.lead += 1;
            if self.lead >= self.k {
                self.inner = None;
                return None;
            }
            self.inner = Some(Vectors::new(self.k - 1 - self.lead).expect("finite field"));
        }
    }
}

/// All `k`-dimensional subspaces of `F^n`: pivot sets in lexicographic order,
/// then the free echelon entries counted in base `p`.
pub struct SubspacesOfDim<T> {
    n: usize,
    k: usize,
    elems: Vec<T>,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    digits: Vec<usize>,
}

impl<T: Field> SubspacesOfDim<T> {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let elems = field_elements()?;
        let mut s = SubspacesOfDim {
            n,
            k,
            elems,
            pivots: if k <= n { Some((0..k).collect()) } else { None },
            free: Vec::new(),
            digits: Vec::new(),
        };
        s.reset_free();
        Ok(s)
    }

    fn reset_free(&mut self) {
        self.free.clear();
        if let Some(piv) = &self.pivots {
            for (r, &p) in piv.iter().enumerate() {
                for c in p + 1..self.n {
                    if !piv.contains(&c) {
                        self.free.push((r, c));
                    }
                }
            }
        }
        self.digits = vec![0; self.free.len()];
    }

    fn advance_pivots(&mut self) {
        let Some(piv) = self.pivots.as_mut() else {
            return;
        };
        let (n, k) = (self.n, self.k);
        let mut i = k;
        while i > 0 {
            i -= 1;
            if piv[i] < n - k + i {
                piv[i] += 1;
                for j in i + 1..k {
                    piv[j] = piv[j - 1] + 1;
                }
                self.reset_free();
                return;
            }
        }
        self.pivots = None;
    }
}

impl<T: Field> Iterator for SubspacesOfDim<T> {
    type Item = Subspace<T>;

    fn next(&mut self) -> Option<Subspace<T>> {
        let piv = self.pivots.as_ref()?;
        let mut rows = vec![vec![T::zero(); self.n]; self.k];
        for (r, &p) in piv.iter().enumerate() {
            rows[r][p] = T::one();
        }
        for (&(r, c), &d) in self.free.iter().zip(&self.digits) {
            rows[r][c] = self.elems[d].clone();
        }
        let s = Subspace::span(self.n, rows);
        if !bump(&mut self.digits, self.elems.len()) {
            self.advance_pivots();
        }
        Some(s)
    }
}

/// All subspaces of `F^n`, by increasing dimension.
pub fn all_subspaces<T: Field>(n: usize) -> Result<impl Iterator<Item = Subspace<T>>> {
    let mut parts = Vec::with_capacity(n + 1);
    for k in 0..=n {
        parts.push(SubspacesOfDim::<T>::new(n, k)?);
    }
    Ok(parts.into_iter().flatten())
}

/// Which closure property an enumeration filters by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnumKind {
    Subspaces,
    Subalgebras,
    Ideals,
    NilpotentSubalgebras,
}

/// Fails with [`Error::BudgetExceeded`] when `F_p^n` has more subspaces than `budget`.
pub fn check_budget<T: Field>(n: usize, budget: u128) -> Result<u128> {
    let q = T::order().ok_or(Error::RequiresPrimeField)?;
    let required = total_subspaces(n, q);
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(required)
    }
}

/// Whether an exhaustive enumeration over `F^n` fits the budget.
pub fn within_budget<T: Field>(n: usize, budget: u128) -> bool {
    check_budget::<T>(n, budget).is_ok()
}

/// Every subspace of `l` with the requested closure property, in canonical order.
pub fn enumerate_fp<T: Field>(
    l: &LieAlgebra<T>,
    kind: EnumKind,
    budget: u128,
) -> Result<Vec<Subspace<T>>> {
    check_budget::<T>(l.dim(), budget)?;
    let keep = |s: &Subspace<T>| match kind {
        EnumKind::Subspaces => true,
        EnumKind::Subalgebras => l.is_subalgebra(s),
        EnumKind::Ideals => l.is_ideal(s),
        EnumKind::NilpotentSubalgebras => l.is_subalgebra(s) && l.is_nilpotent_subalgebra(s),
    };
    Ok(all_subspaces::<T>(l.dim())?.filter(keep).collect())
}

/// Nilradical by brute force: the sum of all nilpotent ideals.
pub fn nilradical_by_enumeration<T: Field>(l: &LieAlgebra<T>, budget: u128) -> Result<Subspace<T>> {
    let ideals = enumerate_fp(l, EnumKind::Ideals, budget)?;
    Ok(ideals
        .iter()
        .filter(|i| l.is_nilpotent_subalgebra(i))
        .fold(l.zero_space(), |acc, i| acc.sum(i)))
}

/// Complement subalgebras of the ideal `k`, by brute force.
pub fn complements_by_enumeration<T: Field>(
    l: &LieAlgebra<T>,
    k: &Subspace<T>,
    budget: u128,
) -> Result<Vec<Subspace<T>>> {
    check_budget::<T>(l.dim(), budget)?;
    let want = l.dim() - k.dim();
    Ok(SubspacesOfDim::<T>::new(l.dim(), want)?
        .filter(|s| s.intersect(k).is_zero() && l.is_subalgebra(s))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{F2, F3, F5};

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(total_subspaces(2, 2), 5);
        assert_eq!(total_subspaces(3, 2), 16);
        assert_eq!(gaussian_binomial(3, 4, 2), 0);
    }

    #[test]
    fn subspace_counts_match_formula() {
        for n in 0..=4 {
            for k in 0..=n {
                let c = SubspacesOfDim::<F2>::new(n, k).unwrap().count() as u128;
                assert_eq!(c, gaussian_binomial(n, k, 2), "n={n} k={k}");
            }
        }
        for k in 0..=3 {
            let c = SubspacesOfDim::<F3>::new(3, k).unwrap().count() as u128;
            assert_eq!(c, gaussian_binomial(3, k, 3));
        }
    }

    #[test]
    fn enumerated_subspaces_are_distinct() {
        let all: Vec<_> = all_subspaces::<F3>(3).unwrap().collect();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), set.len());
        assert_eq!(all.len() as u128, total_subspaces(3, 3));
    }

    #[test]
    fn lines_and_vectors() {
        assert_eq!(Lines::<F5>::new(3).unwrap().count(), 31);
        assert_eq!(Vectors::<F3>::new(3).unwrap().count(), 27);
        assert_eq!(Lines::<F2>::new(0).unwrap().count(), 0);
        assert!(Lines::<crate::Rational>::new(2).is_err());
    }

    #[test]
    fn abelian_subalgebras_are_all_subspaces() {
        let l = LieAlgebra::<F2>::abelian(3);
        assert_eq!(enumerate_fp(&l, EnumKind::Subalgebras, DEFAULT_BUDGET).unwrap().len(), 16);
        assert_eq!(enumerate_fp(&l, EnumKind::Subspaces, DEFAULT_BUDGET).unwrap().len(), 16);
    }

    #[test]
    fn budget_is_enforced() {
        let l = LieAlgebra::<F2>::abelian(3);
        assert_eq!(
            enumerate_fp(&l, EnumKind::Ideals, 10).unwrap_err(),
            Error::BudgetExceeded { required: 16, budget: 10 }
        );
    }
}
