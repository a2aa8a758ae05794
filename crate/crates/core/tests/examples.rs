use solvlie::catalog::{ex4_3, ex4_7, ex4_9};
use solvlie::classes::{in_class_s, in_class_s_infinity, is_qa};
use solvlie::structure::{abelian_socle, is_cartan, is_phi_free, maximal_subalgebras_and_frattini, nilradical};
use solvlie::theorems::decomposition_clauses;
use solvlie::{Config, EvidenceKind, Rational, Status, Subspace, F3, F5};

#[test]
fn ex4_3_claims() {
    let l = ex4_3::<Rational>();
    let cfg = Config::default();
    let d = l.derived_series();
    assert_eq!(d.term(1), &Subspace::from_i64(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]));
    assert!(l.is_nilpotent_subalgebra(d.term(1)));
    assert_eq!(d.term(2), &Subspace::from_i64(4, &[&[0, 0, 0, 1]]));
    assert_eq!(&l.center(), d.term(2));
    assert!(is_cartan(&l, &Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]])));
    assert_eq!(in_class_s(&l, 2, &cfg).unwrap().status, Status::CertifiedFalse);
    assert_eq!(in_class_s(&l, 1, &cfg).unwrap().status, Status::CertifiedTrue);
    assert!(l.predicates().completely_solvable);
}

#[test]
fn ex4_7_claims() {
    let l = ex4_7::<Rational>();
    let cfg = Config::default();
    let sq = Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    assert_eq!(l.derived_series().term(1), &sq);
    let ln = l.lower_nilpotent_series().unwrap();
    assert_eq!(ln.terms, vec![l.full(), sq.clone(), l.zero_space()]);
    assert_eq!(in_class_s_infinity(&l).unwrap().status, Status::CertifiedTrue);
    let n = nilradical(&l, &cfg).unwrap();
    assert_eq!(n, Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]));
    assert!(!l.is_abelian_subspace(&n));
    let qa = is_qa(&l, &cfg).unwrap();
    assert_eq!(qa.status, Status::CertifiedFalse);
    let ev = qa.evidence.unwrap();
    assert_eq!(ev.kind, EvidenceKind::NonAbelianQuotientNilradical);
    assert!(ev.space("ideal").unwrap().is_zero());
    assert_eq!(is_phi_free(&l, &cfg).unwrap().status, Status::CertifiedFalse);
    let phi3 = maximal_subalgebras_and_frattini(&ex4_7::<F3>(), 1 << 20).unwrap().frattini;
    assert_eq!(phi3, Subspace::from_i64(4, &[&[0, 1, 0, 0]]));
    let phi5 = maximal_subalgebras_and_frattini(&ex4_7::<F5>(), 1 << 20).unwrap().frattini;
    assert_eq!(phi5, Subspace::from_i64(4, &[&[0, 1, 0, 0]]));
}

#[test]
fn ex4_9_claims_over_f5() {
    let cfg = Config::default();
    let ex = ex4_9::<F5>(&cfg.module).unwrap();
    let x = &ex.algebra;
    let soc = abelian_socle(x, &cfg).unwrap();
    assert_eq!(soc.socle, ex.module);
    assert_eq!(nilradical(x, &cfg).unwrap(), ex.module);
    assert_eq!(is_phi_free(x, &cfg).unwrap().status, Status::CertifiedTrue);
    assert_eq!(in_class_s_infinity(x).unwrap().status, Status::CertifiedTrue);
    let tower = solvlie::classes::abelian_tower(x).unwrap();
    let c = decomposition_clauses(x, &tower, &x.zero_space(), &cfg).unwrap();
    assert!(c.nilradical_splits && c.centralizers_match);
    assert_eq!(is_qa(x, &cfg).unwrap().status, Status::CertifiedFalse);
}
