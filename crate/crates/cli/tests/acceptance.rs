//! The acceptance suite: one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use solvlie::campaign::{
    constructions, generate, nilradical_cross_check, s_infinity_equivalence, splitting_oracle, theorem_checks,
    CampaignResult,
};
use solvlie::catalog::{all_solvable_tensors, corpus_profiles, ex4_3, ex4_7, ex4_9};
use solvlie::classes::{abelian_tower, in_class_s, in_class_s_infinity, is_qa};
use solvlie::structure::{abelian_socle, is_cartan, is_phi_free, maximal_subalgebras_and_frattini, nilradical};
use solvlie::theorems::{decomposition_clauses, TheoremId};
use solvlie::{Config, FieldSpec, LieAlgebra, Rational, Status, Subspace, F2, F3, F5};

struct Outcome {
    pass: bool,
    detail: String,
}

fn claims(list: &[(&str, bool)], elapsed: Duration, limit: Duration) -> Outcome {
    let failed: Vec<&str> = list.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    let in_time = elapsed < limit;
    let mut detail = format!("{} claims, {:.2?} (limit {:?})", list.len(), elapsed, limit);
    if !failed.is_empty() {
        detail.push_str(&format!("; failed: {}", failed.join(", ")));
    }
    Outcome {
        pass: failed.is_empty() && in_time,
        detail,
    }
}

fn campaign(r: &CampaignResult, t: Instant) -> Outcome {
    let mut detail = format!(
        "{} instances, {} positive, {} findings, {} skipped, {:.2?}",
        r.instances,
        r.positives,
        r.findings.len(),
        r.skipped.len(),
        t.elapsed()
    );
    for f in r.findings.iter().take(5) {
        detail.push_str(&format!("\n    {} :: {}", f.instance, f.detail));
    }
    Outcome {
        pass: r.passed(),
        detail,
    }
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let cfg = Config::default();
    let l = ex4_3::<Rational>();
    let valid = LieAlgebra::validate(&l.tensor()).is_ok();
    let d = l.derived_series();
    let list = [
        ("validated", valid),
        ("L^2 = span(e2,e3,e4)", d.term(1) == &Subspace::from_i64(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])),
        ("L^2 nilpotent", l.is_nilpotent_subalgebra(d.term(1))),
        ("L^(2) = span(e4)", d.term(2) == &Subspace::from_i64(4, &[&[0, 0, 0, 1]])),
        ("Z(L) = L^(2)", &l.center() == d.term(2)),
        ("span(e1,e4) Cartan", is_cartan(&l, &Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]))),
        ("S_2 false", in_class_s(&l, 2, &cfg).unwrap().status == Status::CertifiedFalse),
        ("S_1 true", in_class_s(&l, 1, &cfg).unwrap().status == Status::CertifiedTrue),
        ("completely solvable", l.predicates().completely_solvable),
    ];
    claims(&list, t.elapsed(), Duration::from_secs(1))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let cfg = Config::default();
    let l = ex4_7::<Rational>();
    let sq = Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let ln = l.lower_nilpotent_series().unwrap();
    let n = nilradical(&l, &cfg).unwrap();
    let qa = is_qa(&l, &cfg).unwrap();
    let x2 = &[&[0i64, 1, 0, 0][..]];
    let phi3 = maximal_subalgebras_and_frattini(&ex4_7::<F3>(), cfg.budget).unwrap().frattini;
    let phi5 = maximal_subalgebras_and_frattini(&ex4_7::<F5>(), cfg.budget).unwrap().frattini;
    let list = [
        ("L^2 = span(x1,x2)", l.derived_series().term(1) == &sq),
        ("lower nilpotent series [L, L^2, 0]", ln.terms == vec![l.full(), sq.clone(), l.zero_space()]),
        ("S_inf true", in_class_s_infinity(&l).unwrap().status == Status::CertifiedTrue),
        ("N = span(x1,x2,x3)", n == Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])),
        ("N non-abelian", !l.is_abelian_subspace(&n)),
        ("qA false", qa.status == Status::CertifiedFalse),
        ("witness B = 0", qa.evidence.as_ref().and_then(|e| e.space("ideal")).is_some_and(|b| b.is_zero())),
        ("phi over F3", phi3 == Subspace::from_i64(4, x2)),
        ("phi over F5", phi5 == Subspace::from_i64(4, x2)),
        ("phi-free over Q false", is_phi_free(&l, &cfg).unwrap().status == Status::CertifiedFalse),
    ];
    claims(&list, t.elapsed(), Duration::from_secs(1))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let cfg = Config::default();
    let ex = ex4_9::<F5>(&cfg.module).unwrap();
    let x = &ex.algebra;
    let soc = abelian_socle(x, &cfg).unwrap();
    let tower = abelian_tower(x).unwrap();
    let k = decomposition_clauses(x, &tower, &x.zero_space(), &cfg).unwrap();
    let list = [
        ("Asoc X = B", soc.socle == ex.module),
        ("N(X) = B", nilradical(x, &cfg).unwrap() == ex.module),
        ("phi-free true", is_phi_free(x, &cfg).unwrap().status == Status::CertifiedTrue),
        ("S_inf true", in_class_s_infinity(x).unwrap().status == Status::CertifiedTrue),
        ("(ii) at K = 0", k.nilradical_splits),
        ("(iii) at K = 0", k.centralizers_match),
        ("qA false", is_qa(x, &cfg).unwrap().status == Status::CertifiedFalse),
    ];
    claims(&list, t.elapsed(), Duration::from_secs(10))
}

struct Corpora {
    q: Vec<(String, LieAlgebra<Rational>)>,
    f2: Vec<(String, LieAlgebra<F2>)>,
    f3: Vec<(String, LieAlgebra<F3>)>,
    f5: Vec<(String, LieAlgebra<F5>)>,
}

fn corpora() -> Corpora {
    Corpora {
        q: generate(&corpus_profiles(FieldSpec::Rationals, 6, 100, 401)).unwrap(),
        f2: generate(&corpus_profiles(FieldSpec::Prime(2), 6, 100, 402)).unwrap(),
        f3: generate(&corpus_profiles(FieldSpec::Prime(3), 6, 100, 403)).unwrap(),
        f5: generate(&corpus_profiles(FieldSpec::Prime(5), 6, 100, 405)).unwrap(),
    }
}

fn criterion_4(c: &Corpora) -> Outcome {
    let t = Instant::now();
    let mut r = s_infinity_equivalence(&c.q).unwrap();
    r.merge(s_infinity_equivalence(&c.f2).unwrap());
    r.merge(s_infinity_equivalence(&c.f3).unwrap());
    r.merge(s_infinity_equivalence(&c.f5).unwrap());
    let mut o = campaign(&r, t);
    o.pass &= r.instances >= 200;
    o
}

fn criterion_5(c: &Corpora) -> Outcome {
    let t = Instant::now();
    let cfg = Config::default();
    let ids = [TheoremId::T2_2];
    let mut r = theorem_checks(&c.q, &ids, &cfg).unwrap();
    r.merge(theorem_checks(&c.f2, &ids, &cfg).unwrap());
    r.merge(theorem_checks(&c.f3, &ids, &cfg).unwrap());
    r.merge(theorem_checks(&c.f5, &ids, &cfg).unwrap());
    campaign(&r, t)
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let cfg = Config::default();
    let mut corpus: Vec<(String, LieAlgebra<F2>)> = generate(&corpus_profiles(FieldSpec::Prime(2), 5, 120, 602)).unwrap();
    let tensors = all_solvable_tensors::<F2>(3, 1 << 12).unwrap();
    corpus.extend(tensors.into_iter().enumerate().map(|(i, l)| (format!("F2 tensor #{i} dim 3"), l)));
    campaign(&splitting_oracle(&corpus, &cfg).unwrap(), t)
}

fn criterion_7() -> Outcome {
    let t = Instant::now();
    let cfg = Config::default();
    let ids = [
        TheoremId::L3_1,
        TheoremId::L3_3,
        TheoremId::T4_6,
        TheoremId::L2_6,
        TheoremId::L3_4,
        TheoremId::T3_5,
        TheoremId::T4_2,
        TheoremId::T4_4,
        TheoremId::L4_1,
        TheoremId::T4_8,
        TheoremId::T5_1,
        TheoremId::T5_5,
    ];
    let f2: Vec<(String, LieAlgebra<F2>)> = generate(&corpus_profiles(FieldSpec::Prime(2), 4, 150, 702)).unwrap();
    let f3: Vec<(String, LieAlgebra<F3>)> = generate(&corpus_profiles(FieldSpec::Prime(3), 4, 150, 703)).unwrap();
    let mut r = theorem_checks(&f2, &ids, &cfg).unwrap();
    r.merge(theorem_checks(&f3, &ids, &cfg).unwrap());
    campaign(&r, t)
}

fn criterion_8() -> Outcome {
    let t = Instant::now();
    let seeds: Vec<u64> = (800..824).collect();
    let r = constructions::<F3>(&seeds, &Config::default()).unwrap();
    let mut o = campaign(&r, t);
    o.pass &= r.instances >= 20;
    o
}

fn criterion_9() -> Outcome {
    let t = Instant::now();
    let q: Vec<(String, LieAlgebra<Rational>)> = generate(&corpus_profiles(FieldSpec::Rationals, 4, 100, 901)).unwrap();
    let r = nilradical_cross_check(&q, &Config::default()).unwrap();
    let mut o = campaign(&r, t);
    o.pass &= r.instances >= 50;
    o
}

fn solvlie(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_solvlie"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_10() -> Outcome {
    let t = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let profile = dir.path().join("profile.json");
    std::fs::write(&profile, r#"{"field": {"p": 3}, "max_dim": 4, "seed": 1010}"#).unwrap();
    let profile = profile.to_str().unwrap();
    let examples = ["examples", "verify", "--json", "-"];
    let fuzz = ["fuzz", "--profile", profile, "--count", "60", "--theorems", "all", "--json", "-"];
    let (e1, a1) = solvlie(&examples);
    let (e2, a2) = solvlie(&examples);
    let (f1, b1) = solvlie(&fuzz);
    let (f2, b2) = solvlie(&fuzz);
    let same = a1 == a2 && b1 == b2;
    Outcome {
        pass: same && !a1.is_empty() && !b1.is_empty() && [e1, e2, f1, f2] == [0; 4],
        detail: format!(
            "examples verify {} bytes, fuzz {} bytes, identical: {same}, exit codes {:?}, {:.2?}",
            a1.len(),
            b1.len(),
            [e1, e2, f1, f2],
            t.elapsed()
        ),
    }
}

fn main() {
    let c = corpora();
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(&c),
        criterion_5(&c),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    for (i, o) in outcomes.iter().enumerate() {
        println!("criterion {}: {} {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    let failed: Vec<usize> = (1..=10).filter(|i| !outcomes[i - 1].pass).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
