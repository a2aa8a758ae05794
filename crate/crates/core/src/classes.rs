//! Deciders for the classes `S_n`, `S_∞`, qA, A-algebra and complemented.
//!
//! Over a prime field within the enumeration budget every answer is
//! certified. Elsewhere the deciders look for finite witnesses and fall back
//! to `Unknown`.

use crate::enumerate::{check_budget, complements_by_enumeration, enumerate_fp, within_budget, EnumKind};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::LieAlgebra;
use crate::linalg::{unit_vector, Subspace};
use crate::module::Module;
use crate::structure::{
    abelian_socle, cartan_subalgebra, find_complement, is_phi_free, nilradical, nilradical_mod,
    splits_over_abelian_ideal, Config, SplitOutcome,
};
use crate::verdict::{AbelianTower, Evidence, EvidenceKind, Status, Verdict};

fn enumerable<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> bool {
    T::order().is_some() && within_budget::<T>(l.dim(), cfg.budget)
}

/// Whether `L` splits over `L^(n)`.
///
/// A failure of `[L^(n), L^(n-1)] = L^(n)` refutes splitting outright; otherwise
/// a complement is searched for directly.
pub fn in_class_s<T: Field>(l: &LieAlgebra<T>, n: usize, cfg: &Config) -> Result<Verdict<T>> {
    l.require_solvable()?;
    let derived = l.derived_series();
    let term = derived.term(n).clone();
    if term.is_zero() {
        return Ok(Verdict::truth(
            Evidence::new(EvidenceKind::Complement)
                .with("ideal", term)
                .with("complement", l.full()),
            "zero derived term",
        ));
    }
    if n > 0 {
        let prev = derived.term(n - 1);
        let comm = l.product_space(&term, prev);
        if comm != term {
            return Ok(Verdict::refuted(
                Evidence::new(EvidenceKind::CommutatorDeficit)
                    .with("term", term)
                    .with("commutator", comm),
                "[L^(n), L^(n-1)] = L^(n) is necessary",
            ));
        }
    }
    match find_complement(l, &term, cfg)? {
        SplitOutcome::Split(b) => Ok(Verdict::truth(
            Evidence::new(EvidenceKind::Complement).with("ideal", term).with("complement", b),
            "cocycle",
        )),
        SplitOutcome::NoSplit => Ok(Verdict::refuted(
            Evidence::new(EvidenceKind::NoComplement).with("ideal", term),
            "cocycle",
        )),
        SplitOutcome::Unknown => {
            if enumerable(l, cfg) {
                let found = complements_by_enumeration(l, &term, cfg.budget)?;
                let count = check_budget::<T>(l.dim(), cfg.budget)?;
                Ok(match found.into_iter().next() {
                    Some(b) => Verdict::truth(
                        Evidence::new(EvidenceKind::Complement).with("ideal", term).with("complement", b),
                        "enumeration",
                    ),
                    None => Verdict::refuted(
                        Evidence::new(EvidenceKind::NoComplement).with("ideal", term),
                        "enumeration",
                    ),
                }
                .counted(count, cfg.budget))
            } else {
                Ok(Verdict::unknown("complement search inconclusive"))
            }
        }
    }
}

/// The first non-abelian factor `L_i / L_{i+1}` of the lower nilpotent series.
pub fn non_abelian_lower_nilpotent_factor<T: Field>(l: &LieAlgebra<T>) -> Result<Option<(Subspace<T>, Subspace<T>)>> {
    let ln = l.lower_nilpotent_series()?;
    for w in ln.terms.windows(2) {
        if !w[1].contains(&l.product_space(&w[0], &w[0])) {
            return Ok(Some((w[0].clone(), w[1].clone())));
        }
    }
    Ok(None)
}

/// Membership in `S_∞`, decided by whether every factor of the lower
/// nilpotent series is abelian; members carry an abelian tower.
pub fn in_class_s_infinity<T: Field>(l: &LieAlgebra<T>) -> Result<Verdict<T>> {
    l.require_solvable()?;
    match non_abelian_lower_nilpotent_factor(l)? {
        Some((upper, lower)) => Ok(Verdict::refuted(
            Evidence::new(EvidenceKind::NonAbelianFactor)
                .with("upper", upper)
                .with("lower", lower),
            "lower nilpotent series",
        )),
        None => {
            let tower = abelian_tower(l)?;
            Ok(Verdict::truth(
                Evidence::new(EvidenceKind::Tower).with_tower(tower),
                "lower nilpotent series",
            ))
        }
    }
}

/// `L = A_n ∔ ... ∔ A_0`, built by splitting off the last derived term
/// repeatedly.
pub fn abelian_tower<T: Field>(l: &LieAlgebra<T>) -> Result<AbelianTower<T>> {
    l.require_solvable()?;
    let mut layers = Vec::new();
    let mut current = l.full();
    while !current.is_zero() {
        let r = l.restrict(&current)?;
        let derived = r.algebra.derived_series();
        let last = derived.terms[derived.terms.len() - 2].clone();
        if last.is_full() {
            layers.push(current.clone());
            break;
        }
        let b = splits_over_abelian_ideal(&r.algebra, &last)?
            .ok_or_else(|| Error::Precondition("algebra does not split over a derived term".into()))?;
        layers.push(r.embed_space(&last));
        current = r.embed_space(&b);
    }
    layers.reverse();
    let tower = AbelianTower { layers };
    tower.verify(l).map_err(Error::Postcondition)?;
    Ok(tower)
}

fn push_unique<T: Field>(family: &mut Vec<Subspace<T>>, s: Subspace<T>) -> bool {
    if family.contains(&s) {
        false
    } else {
        family.push(s);
        true
    }
}

fn sort_family<T: Field>(family: &mut [Subspace<T>]) {
    family.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.literals().cmp(&b.literals())));
}

const FAMILY_CAP: usize = 96;

/// Named ideals: series terms, center, nilradical, socle and its summands,
/// and the ideals generated by basis vectors.
pub fn named_ideals<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<Vec<Subspace<T>>> {
    let mut family = vec![l.zero_space(), l.full()];
    for t in l.derived_series().terms {
        push_unique(&mut family, t);
    }
    for t in l.lower_central_series().terms {
        push_unique(&mut family, t);
    }
    for t in l.lower_nilpotent_series()?.terms {
        push_unique(&mut family, t);
    }
    push_unique(&mut family, l.center());
    push_unique(&mut family, nilradical(l, cfg)?);
    if let Ok(soc) = abelian_socle(l, cfg) {
        push_unique(&mut family, soc.socle);
        for m in soc.minimal_ideals {
            push_unique(&mut family, m);
        }
    }
    for i in 0..l.dim() {
        push_unique(&mut family, l.ideal_generated(&[unit_vector(l.dim(), i)]));
    }
    sort_family(&mut family);
    Ok(family)
}

/// One closure round: sums, intersections, products, quotient nilradicals and
/// quotient centers of the family.
fn close_once<T: Field>(l: &LieAlgebra<T>, family: &[Subspace<T>], cfg: &Config) -> Result<Vec<Subspace<T>>> {
    let mut out = family.to_vec();
    for (i, a) in family.iter().enumerate() {
        if out.len() >= FAMILY_CAP {
            break;
        }
        push_unique(&mut out, nilradical_mod(l, a, cfg)?);
        push_unique(&mut out, l.centralizer(&l.full(), a));
        for b in &family[i + 1..] {
            push_unique(&mut out, a.sum(b));
            push_unique(&mut out, a.intersect(b));
            push_unique(&mut out, l.product_space(a, b));
        }
    }
    out.truncate(FAMILY_CAP.max(family.len()));
    sort_family(&mut out);
    Ok(out)
}

/// Ideals to test a universal statement on: all of them when enumerable,
/// otherwise the named family closed `closure_depth` times. The flag says
/// whether the list is exhaustive.
pub fn test_ideals<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<(Vec<Subspace<T>>, bool)> {
    if enumerable(l, cfg) {
        return Ok((enumerate_fp(l, EnumKind::Ideals, cfg.budget)?, true));
    }
    let mut family = named_ideals(l, cfg)?;
    for _ in 0..cfg.closure_depth {
        let next = close_once(l, &family, cfg)?;
        if next.len() == family.len() {
            break;
        }
        family = next;
    }
    Ok((family, false))
}

/// `N_B` when `N(L/B)` is not abelian.
fn qa_violation<T: Field>(l: &LieAlgebra<T>, b: &Subspace<T>, cfg: &Config) -> Result<Option<Subspace<T>>> {
    let nb = nilradical_mod(l, b, cfg)?;
    Ok((!b.contains(&l.product_space(&nb, &nb))).then_some(nb))
}

fn qa_refuted<T: Field>(b: Subspace<T>, nb: Subspace<T>, method: &str) -> Verdict<T> {
    Verdict::refuted(
        Evidence::new(EvidenceKind::NonAbelianQuotientNilradical)
            .with("ideal", b)
            .with("preimage", nb),
        method,
    )
}

/// Whether `N(L/B)` is abelian for every ideal `B`.
pub fn is_qa<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<Verdict<T>> {
    l.require_solvable()?;
    if enumerable(l, cfg) {
        let ideals = enumerate_fp(l, EnumKind::Ideals, cfg.budget)?;
        let count = check_budget::<T>(l.dim(), cfg.budget)?;
        for b in ideals {
            if let Some(nb) = qa_violation(l, &b, cfg)? {
                return Ok(qa_refuted(b, nb, "enumeration").counted(count, cfg.budget));
            }
        }
        return Ok(Verdict::truth(Evidence::new(EvidenceKind::Exhaustive), "enumeration").counted(count, cfg.budget));
    }
    // Named ideals first, then closure rounds, stopping at the first violation.
    let mut family = named_ideals(l, cfg)?;
    let mut checked: Vec<Subspace<T>> = Vec::new();
    for round in 0..=cfg.closure_depth {
        if round > 0 {
            let next = close_once(l, &family, cfg)?;
            if next.len() == family.len() {
                break;
            }
            family = next;
        }
        for b in &family {
            if checked.contains(b) {
                continue;
            }
            if let Some(nb) = qa_violation(l, b, cfg)? {
                return Ok(qa_refuted(b.clone(), nb, "named-ideal closure").counted(checked.len() as u128 + 1, 0));
            }
            checked.push(b.clone());
        }
    }
    let tested = checked.len() as u128;
    if l.is_abelian() {
        return Ok(Verdict::truth(Evidence::new(EvidenceKind::Implied).with_note("abelian"), "abelian").counted(tested, 0));
    }
    if let Some(note) = qa_split_certificate(l, cfg)? {
        return Ok(Verdict::truth(Evidence::new(EvidenceKind::Implied).with_note(note), "certificate").counted(tested, 0));
    }
    if l.predicates().completely_solvable && is_a_algebra(l, cfg)?.is_true() {
        return Ok(Verdict::truth(
            Evidence::new(EvidenceKind::Implied).with_note("completely solvable A-algebra"),
            "certificate",
        )
        .counted(tested, 0));
    }
    Ok(Verdict::unknown("named-ideal closure found no violation").counted(tested, 0))
}

/// `N` abelian, `L = N ⋊ B` with `N` completely reducible and `B ∈ qA`.
fn qa_split_certificate<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<Option<String>> {
    let nil = nilradical(l, cfg)?;
    if !l.is_abelian_subspace(&nil) || nil.is_full() {
        return Ok(None);
    }
    let Some(b) = splits_over_abelian_ideal(l, &nil)? else {
        return Ok(None);
    };
    let module = Module::on_ideal(l, &nil);
    if !module.is_completely_reducible(&cfg.module)? {
        return Ok(None);
    }
    let r = l.restrict(&b)?;
    if is_qa(&r.algebra, cfg)?.is_true() {
        Ok(Some("abelian nilradical, completely reducible, split with qA complement".into()))
    } else {
        Ok(None)
    }
}

fn non_abelian_nilpotent<T: Field>(s: Subspace<T>, method: &str) -> Verdict<T> {
    Verdict::refuted(
        Evidence::new(EvidenceKind::NonAbelianNilpotentSubalgebra).with("subalgebra", s),
        method,
    )
}

/// Whether every nilpotent subalgebra is abelian.
pub fn is_a_algebra<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<Verdict<T>> {
    l.require_solvable()?;
    if enumerable(l, cfg) {
        let count = check_budget::<T>(l.dim(), cfg.budget)?;
        for s in enumerate_fp(l, EnumKind::NilpotentSubalgebras, cfg.budget)? {
            if !l.is_abelian_subspace(&s) {
                return Ok(non_abelian_nilpotent(s, "enumeration").counted(count, cfg.budget));
            }
        }
        return Ok(Verdict::truth(Evidence::new(EvidenceKind::Exhaustive), "enumeration").counted(count, cfg.budget));
    }
    let nil = nilradical(l, cfg)?;
    if !l.is_abelian_subspace(&nil) {
        return Ok(non_abelian_nilpotent(nil, "nilradical"));
    }
    if let Ok(c) = cartan_subalgebra(l, cfg) {
        if !l.is_abelian_subspace(&c) {
            return Ok(non_abelian_nilpotent(c, "Cartan subalgebra"));
        }
    }
    if l.is_abelian() {
        return Ok(Verdict::truth(Evidence::new(EvidenceKind::Implied).with_note("abelian"), "abelian"));
    }
    Ok(Verdict::unknown("probes found only abelian nilpotent subalgebras"))
}

/// Every subalgebra `S` has a subalgebra `T` with `S ∩ T = 0` and `<S, T> = L`.
pub fn is_complemented<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<Verdict<T>> {
    l.require_solvable()?;
    if enumerable(l, cfg) {
        let count = check_budget::<T>(l.dim(), cfg.budget)?;
        let subs = enumerate_fp(l, EnumKind::Subalgebras, cfg.budget)?;
        for s in &subs {
            let ok = subs.iter().any(|t| {
                s.dim() + t.dim() <= l.dim()
                    && s.intersect(t).is_zero()
                    && l.generated_subalgebra(&[s.basis(), t.basis()].concat()).is_full()
            });
            if !ok {
                return Ok(Verdict::refuted(
                    Evidence::new(EvidenceKind::UncomplementedSubalgebra).with("subalgebra", s.clone()),
                    "enumeration",
                )
                .counted(count, cfg.budget));
            }
        }
        return Ok(Verdict::truth(Evidence::new(EvidenceKind::Exhaustive), "enumeration").counted(count, cfg.budget));
    }
    let qa = is_qa(l, cfg)?;
    if qa.is_false() {
        let mut e = qa.evidence.expect("refutations carry witnesses");
        e.kind = EvidenceKind::Implied;
        e.note = Some("not qA, and complemented algebras are qA".into());
        return Ok(Verdict::refuted(e, "qA"));
    }
    let phi = is_phi_free(l, cfg)?;
    if phi.is_false() {
        let mut e = phi.evidence.expect("refutations carry witnesses");
        e.note = Some("not phi-free, and complemented algebras are phi-free".into());
        e.kind = EvidenceKind::Implied;
        return Ok(Verdict::refuted(e, "phi-free"));
    }
    if phi.is_true() && l.predicates().completely_solvable {
        return Ok(Verdict::truth(
            Evidence::new(EvidenceKind::Implied).with_note("completely solvable and phi-free"),
            "phi-free",
        ));
    }
    Ok(Verdict::unknown("no certificate applies"))
}

/// Re-checks a refutation's witness from scratch.
pub fn witness_revalidates<T: Field>(l: &LieAlgebra<T>, v: &Verdict<T>, cfg: &Config) -> Result<bool> {
    let Some(e) = &v.evidence else {
        return Ok(v.status == Status::Unknown);
    };
    let space = |name: &str| e.space(name).cloned();
    Ok(match e.kind {
        EvidenceKind::Complement => match (space("ideal"), space("complement")) {
            (Some(k), Some(b)) => l.is_subalgebra(&b) && b.intersect(&k).is_zero() && b.sum(&k).is_full(),
            _ => false,
        },
        EvidenceKind::Tower => e.tower.as_ref().is_some_and(|t| t.verify(l).is_ok()),
        EvidenceKind::NonAbelianFactor => match (space("upper"), space("lower")) {
            (Some(u), Some(w)) => l.residual_of(&u) == w && !w.contains(&l.product_space(&u, &u)),
            _ => false,
        },
        EvidenceKind::CommutatorDeficit => match (space("term"), space("commutator")) {
            (Some(t), Some(c)) => c != t && t.contains(&c),
            _ => false,
        },
        EvidenceKind::NonAbelianNilradical => {
            space("nilradical").is_some_and(|n| n == nilradical(l, cfg).unwrap_or_else(|_| l.zero_space()) && !l.is_abelian_subspace(&n))
        }
        EvidenceKind::NilradicalNotSocle => match (space("nilradical"), space("abelian_socle")) {
            (Some(n), Some(s)) => n != s && l.is_ideal(&n) && l.is_nilpotent_subalgebra(&n),
            _ => false,
        },
        EvidenceKind::FrattiniNonzero => space("frattini").is_some_and(|f| !f.is_zero() && l.is_ideal(&f)),
        EvidenceKind::NonAbelianQuotientNilradical => match (space("ideal"), space("preimage")) {
            (Some(b), Some(nb)) => {
                l.is_ideal(&b)
                    && nb.contains(&b)
                    && !b.contains(&l.product_space(&nb, &nb))
                    && l.quotient(&b).is_ok_and(|q| q.algebra.is_nilpotent_subalgebra(&q.project_space(&nb)))
            }
            _ => false,
        },
        EvidenceKind::NonAbelianNilpotentSubalgebra => space("subalgebra")
            .is_some_and(|s| l.is_subalgebra(&s) && l.is_nilpotent_subalgebra(&s) && !l.is_abelian_subspace(&s)),
        EvidenceKind::UncomplementedSubalgebra => match space("subalgebra") {
            Some(s) if enumerable(l, cfg) => {
                let subs = enumerate_fp(l, EnumKind::Subalgebras, cfg.budget)?;
                l.is_subalgebra(&s)
                    && !subs.iter().any(|t| {
                        s.intersect(t).is_zero() && l.generated_subalgebra(&[s.basis(), t.basis()].concat()).is_full()
                    })
            }
            _ => false,
        },
        EvidenceKind::NoComplement => match space("ideal") {
            Some(k) if enumerable(l, cfg) => complements_by_enumeration(l, &k, cfg.budget)?.is_empty(),
            Some(k) => matches!(find_complement(l, &k, cfg)?, SplitOutcome::NoSplit),
            None => false,
        },
        EvidenceKind::Exhaustive | EvidenceKind::Implied => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F2, F3, F5};

    fn ex43<T: Field>() -> LieAlgebra<T> {
        LieAlgebra::from_int_brackets(4, &[(0, 1, &[(2, 1)]), (0, 2, &[(1, 1)]), (1, 2, &[(3, 1)])]).unwrap()
    }

    fn ex47<T: Field>() -> LieAlgebra<T> {
        LieAlgebra::from_int_brackets(4, &[(0, 3, &[(0, -1)]), (1, 3, &[(1, -1)]), (0, 2, &[(1, -1)])]).unwrap()
    }

    fn two_dim<T: Field>() -> LieAlgebra<T> {
        LieAlgebra::from_int_brackets(2, &[(0, 1, &[(1, 1)])]).unwrap()
    }

    #[test]
    fn s_n_of_ex43() {
        let cfg = Config::default();
        let l = ex43::<Rational>();
        assert_eq!(in_class_s(&l, 2, &cfg).unwrap().status, Status::CertifiedFalse);
        assert_eq!(in_class_s(&l, 1, &cfg).unwrap().status, Status::CertifiedTrue);
        assert_eq!(in_class_s(&l, 3, &cfg).unwrap().status, Status::CertifiedTrue);
        assert_eq!(in_class_s_infinity(&l).unwrap().status, Status::CertifiedFalse);
        let l3 = ex43::<F3>();
        assert_eq!(in_class_s(&l3, 2, &cfg).unwrap().status, Status::CertifiedFalse);
    }

    #[test]
    fn tower_of_ex47() {
        let l = ex47::<Rational>();
        let v = in_class_s_infinity(&l).unwrap();
        assert!(v.is_true());
        let t = v.evidence.unwrap().tower.unwrap();
        assert_eq!(t.layers[1], Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert_eq!(t.layers[0].dim(), 2);
        let two = abelian_tower(&two_dim::<F3>()).unwrap();
        assert_eq!(two.layers, vec![Subspace::from_i64(2, &[&[1, 0]]), Subspace::from_i64(2, &[&[0, 1]])]);
        assert_eq!(abelian_tower(&LieAlgebra::<F2>::abelian(3)).unwrap().layers.len(), 1);
    }

    #[test]
    fn qa_of_examples() {
        let cfg = Config::default();
        let q = is_qa(&ex47::<Rational>(), &cfg).unwrap();
        assert!(q.is_false());
        assert!(q.evidence.as_ref().unwrap().space("ideal").unwrap().is_zero());
        let f = is_qa(&ex47::<F5>(), &cfg).unwrap();
        assert!(f.is_false());
        assert!(f.evidence.as_ref().unwrap().space("ideal").unwrap().is_zero());
        assert!(is_qa(&LieAlgebra::<Rational>::abelian(2), &cfg).unwrap().is_true());
        assert!(is_qa(&two_dim::<Rational>(), &cfg).unwrap().is_true());
        assert!(is_qa(&two_dim::<F3>(), &cfg).unwrap().is_true());
    }

    #[test]
    fn a_algebra_and_complemented() {
        let cfg = Config::default();
        let v = is_a_algebra(&ex47::<Rational>(), &cfg).unwrap();
        assert!(v.is_false());
        assert!(witness_revalidates(&ex47::<Rational>(), &v, &cfg).unwrap());
        assert!(is_a_algebra(&two_dim::<F3>(), &cfg).unwrap().is_true());
        assert!(is_complemented(&LieAlgebra::<F2>::abelian(2), &cfg).unwrap().is_true());
        let c = is_complemented(&ex47::<F5>(), &cfg).unwrap();
        assert!(c.is_false());
        assert!(witness_revalidates(&ex47::<F5>(), &c, &cfg).unwrap());
    }

    #[test]
    fn witnesses_revalidate() {
        let cfg = Config::default();
        let l = ex47::<F3>();
        for v in [is_qa(&l, &cfg).unwrap(), in_class_s_infinity(&l).unwrap(), is_phi_free(&l, &cfg).unwrap()] {
            assert!(witness_revalidates(&l, &v, &cfg).unwrap(), "{v:?}");
        }
    }
}
