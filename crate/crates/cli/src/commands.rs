//! Command implementations. Each returns the `results` section of the report,
//! human-readable lines, and whether a check failed.

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use solvlie::catalog::{corpus_profiles, ex4_3, ex4_7, ex4_9, random_solvable, Recipe};
use solvlie::classes::{abelian_tower, in_class_s, in_class_s_infinity, is_a_algebra, is_complemented, is_qa};
use solvlie::structure::{
    abelian_socle, cartan_subalgebra, fitting_decomposition, is_cartan, is_phi_free, is_supersolvable,
    maximal_subalgebras_and_frattini, nilradical,
};
use solvlie::campaign::profile_label;
use solvlie::theorems::{check_theorem, construct_qa_extension, decomposition_clauses, ReportStatus, TheoremId};
use solvlie::{Config, Error, Field, LieAlgebra, Rational, Status, Subspace, F3, F5};

use crate::document::{parse_json, AlgebraDocument, FieldDescriptor, RepresentationDocument};
use crate::report;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or a malformed or unsuitable input: exit 2.
    Input(Vec<String>),
    /// An enumeration or probe budget ran out: exit 3.
    Budget(String),
    /// An internal consistency check failed: exit 1.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Failure(_) => 1,
        }
    }

    pub fn messages(&self) -> Vec<String> {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Budget(m) | CliError::Failure(m) => vec![m.clone()],
        }
    }

    fn input(msg: impl Into<String>) -> Self {
        CliError::Input(vec![msg.into()])
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::ProbeExhausted { .. } => CliError::Budget(e.to_string()),
            Error::Postcondition(_) => CliError::Failure(e.to_string()),
            _ => CliError::Input(vec![e.to_string()]),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Default)]
pub struct Output {
    pub results: Value,
    pub text: Vec<String>,
    pub failed: bool,
}

/// Reads a file, appending its bytes to `inputs` for hashing.
pub fn read_text(path: &Path, inputs: &mut Vec<u8>) -> CliResult<String> {
    let bytes = fs::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    inputs.extend_from_slice(&bytes);
    String::from_utf8(bytes).map_err(|_| CliError::input(format!("{}: not UTF-8", path.display())))
}

pub fn load_algebra(path: &Path, inputs: &mut Vec<u8>) -> CliResult<AlgebraDocument> {
    let text = read_text(path, inputs)?;
    AlgebraDocument::parse(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn build<T: Field>(doc: &AlgebraDocument) -> CliResult<LieAlgebra<T>> {
    doc.build::<T>().map_err(CliError::Input)
}

fn solvable<T: Field>(doc: &AlgebraDocument) -> CliResult<LieAlgebra<T>> {
    let l = build::<T>(doc)?;
    if !l.is_solvable() {
        return Err(CliError::input("algebra is not solvable; this command requires a solvable algebra"));
    }
    Ok(l)
}

fn status_line<T: Field>(name: &str, v: &solvlie::Verdict<T>) -> String {
    match &v.evidence {
        Some(e) => format!("{name}: {} ({})", v.status.as_str(), e.kind.as_str()),
        None => format!("{name}: {} ({})", v.status.as_str(), v.summary.method),
    }
}

pub fn validate<T: Field>(doc: &AlgebraDocument) -> CliResult<Output> {
    let l = build::<T>(doc)?;
    let p = l.predicates();
    Ok(Output {
        text: vec![
            format!("valid Lie algebra of dimension {} over {}", l.dim(), T::spec()),
            format!("solvable: {}, nilpotent: {}, abelian: {}", p.solvable, p.nilpotent, p.abelian),
        ],
        results: json!({ "valid": true, "dim": l.dim(), "predicates": report::predicates(&p) }),
        failed: false,
    })
}

pub fn analyze<T: Field>(doc: &AlgebraDocument, cfg: &Config) -> CliResult<Output> {
    let l = solvable::<T>(doc)?;
    let d = l.derived_series();
    let lc = l.lower_central_series();
    let ln = l.lower_nilpotent_series()?;
    let center = l.center();
    let n = nilradical(&l, cfg)?;
    let c = cartan_subalgebra(&l, cfg)?;
    let fit = fitting_decomposition(&l, &c)?;
    let soc = abelian_socle(&l, cfg)?;
    let phi = is_phi_free(&l, cfg)?;
    let sup = match is_supersolvable(&l, cfg) {
        Ok(b) => Some(b),
        Err(Error::ProbeExhausted { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let text = vec![
        format!("derived series dims: {:?}", d.dims()),
        format!("lower central series dims: {:?}", lc.dims()),
        format!("lower nilpotent series dims: {:?}", ln.dims()),
        format!("center: dim {}", center.dim()),
        format!("nilradical: dim {}", n.dim()),
        format!("Cartan subalgebra: dim {}", c.dim()),
        format!("abelian socle: dim {}, monolithic: {}", soc.socle.dim(), soc.monolithic),
        status_line("phi-free", &phi),
    ];
    Ok(Output {
        results: json!({
            "predicates": report::predicates(&l.predicates()),
            "derived_series": report::series(&d),
            "lower_central_series": report::series(&lc),
            "lower_nilpotent_series": report::series(&ln),
            "center": report::subspace(&center),
            "nilradical": report::subspace(&n),
            "cartan": report::subspace(&c),
            "fitting": { "null": report::subspace(&fit.null), "one": report::subspace(&fit.one) },
            "abelian_socle": report::socle(&soc),
            "phi_free": report::verdict(&phi),
            "supersolvable": sup,
        }),
        text,
        failed: false,
    })
}

pub fn classify<T: Field>(doc: &AlgebraDocument, cfg: &Config) -> CliResult<Output> {
    let l = solvable::<T>(doc)?;
    let dl = l.derived_length().unwrap_or(0);
    let mut s_n = Vec::new();
    let mut text = Vec::new();
    for n in 1..=dl {
        let v = in_class_s(&l, n, cfg)?;
        text.push(status_line(&format!("S_{n}"), &v));
        s_n.push(json!({ "n": n, "verdict": report::verdict(&v) }));
    }
    let mut named = Map::new();
    for (name, v) in [
        ("s_infinity", in_class_s_infinity(&l)?),
        ("qa", is_qa(&l, cfg)?),
        ("a_algebra", is_a_algebra(&l, cfg)?),
        ("complemented", is_complemented(&l, cfg)?),
    ] {
        text.push(status_line(name, &v));
        named.insert(name.into(), report::verdict(&v));
    }
    named.insert("s_n".into(), Value::Array(s_n));
    named.insert("derived_length".into(), json!(dl));
    Ok(Output {
        results: Value::Object(named),
        text,
        failed: false,
    })
}

pub fn decompose<T: Field>(doc: &AlgebraDocument) -> CliResult<Output> {
    let l = solvable::<T>(doc)?;
    let v = in_class_s_infinity(&l)?;
    let (results, text) = match abelian_tower(&l) {
        Ok(t) => {
            t.verify(&l).map_err(|e| CliError::Failure(format!("tower fails verification: {e}")))?;
            let dims: Vec<usize> = t.layers.iter().map(|a| a.dim()).collect();
            (
                json!({ "exists": true, "tower": report::tower(&t), "verdict": report::verdict(&v) }),
                vec![format!("abelian tower A_0..A_n with dims {dims:?}")],
            )
        }
        Err(_) => (
            json!({ "exists": false, "verdict": report::verdict(&v) }),
            vec![status_line("no abelian tower; S_inf", &v)],
        ),
    };
    Ok(Output {
        results,
        text,
        failed: false,
    })
}

pub fn check<T: Field>(doc: &AlgebraDocument, ids: &[TheoremId], cfg: &Config) -> CliResult<Output> {
    let l = solvable::<T>(doc)?;
    let mut reports = Vec::new();
    let mut text = Vec::new();
    let mut failed = false;
    for &id in ids {
        let r = check_theorem(&l, id, cfg)?;
        failed |= r.status == ReportStatus::Failed;
        let v = report::theorem(&r);
        let reason = v["reason"].as_str().map(|s| format!(" ({s})")).unwrap_or_default();
        text.push(format!("{id}: {}{reason}", v["status"].as_str().unwrap_or_default()));
        reports.push(v);
    }
    Ok(Output {
        results: json!({ "theorems": reports }),
        text,
        failed,
    })
}

pub fn construct<T: Field>(b: &AlgebraDocument, rep: &RepresentationDocument, cfg: &Config) -> CliResult<Output> {
    let b = solvable::<T>(b)?;
    let rho = rep.build::<T>().map_err(CliError::Input)?;
    let (l, r) = construct_qa_extension(&b, &rho, cfg)?;
    let doc = AlgebraDocument::from_algebra(&l, Some("A ⋊ B".into()), Some("construct".into()));
    let v = report::theorem(&r);
    Ok(Output {
        text: vec![
            format!("A ⋊ B has dimension {}", l.dim()),
            format!("construction checks: {}", v["status"].as_str().unwrap_or_default()),
        ],
        results: json!({ "algebra": serde_json::to_value(&doc).expect("document"), "report": v }),
        failed: r.status == ReportStatus::Failed,
    })
}

pub fn frattini<T: Field>(doc: &AlgebraDocument, cfg: &Config) -> CliResult<Output> {
    if T::order().is_none() {
        return Err(CliError::input("frattini requires a prime field; pass --field fp:<p>"));
    }
    let l = build::<T>(doc)?;
    let f = maximal_subalgebras_and_frattini(&l, cfg.budget)?;
    Ok(Output {
        text: vec![
            format!("{} maximal subalgebras", f.maximal.len()),
            format!("Frattini subalgebra: dim {}", f.frattini.dim()),
        ],
        results: json!({
            "maximal_subalgebras": f.maximal.iter().map(report::subspace).collect::<Vec<_>>(),
            "frattini": report::subspace(&f.frattini),
            "candidates": u64::try_from(f.candidates).unwrap_or(u64::MAX),
        }),
        failed: false,
    })
}

struct Claims {
    list: Vec<Value>,
    failed: bool,
    text: Vec<String>,
}

impl Claims {
    fn add(&mut self, example: &str, claim: &str, expected: Value, observed: Value) {
        let ok = expected == observed;
        self.failed |= !ok;
        self.text.push(format!("{} {example}: {claim}", if ok { "ok  " } else { "FAIL" }));
        self.list.push(json!({
            "example": example,
            "claim": claim,
            "expected": expected,
            "observed": observed,
            "ok": ok,
        }));
    }
}

fn span<T: Field>(n: usize, rows: &[&[i64]]) -> Value {
    report::subspace(&Subspace::<T>::from_i64(n, rows))
}

fn status_of(s: Status) -> Value {
    json!(s.as_str())
}

/// Re-derives every claim made about the worked examples.
pub fn examples_verify(cfg: &Config) -> CliResult<Output> {
    let mut c = Claims {
        list: Vec::new(),
        failed: false,
        text: Vec::new(),
    };
    let l = ex4_3::<Rational>();
    let d = l.derived_series();
    let e = "ex4_3";
    c.add(e, "L^2 = span(e2,e3,e4)", span::<Rational>(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]), report::subspace(d.term(1)));
    c.add(e, "L^2 nilpotent", json!(true), json!(l.is_nilpotent_subalgebra(d.term(1))));
    c.add(e, "L^(2) = span(e4)", span::<Rational>(4, &[&[0, 0, 0, 1]]), report::subspace(d.term(2)));
    c.add(e, "Z(L) = L^(2)", report::subspace(d.term(2)), report::subspace(&l.center()));
    let cs = Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]);
    c.add(e, "span(e1,e4) is a Cartan subalgebra", json!(true), json!(is_cartan(&l, &cs)));
    c.add(e, "L in S_1", status_of(Status::CertifiedTrue), status_of(in_class_s(&l, 1, cfg)?.status));
    c.add(e, "L not in S_2", status_of(Status::CertifiedFalse), status_of(in_class_s(&l, 2, cfg)?.status));
    c.add(e, "completely solvable", json!(true), json!(l.predicates().completely_solvable));
    c.add(e, "derived length 3", json!(3), json!(l.derived_length()));

    let l = ex4_7::<Rational>();
    let e = "ex4_7";
    let sq = Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    c.add(e, "L^2 = span(x1,x2)", report::subspace(&sq), report::subspace(l.derived_series().term(1)));
    let ln = l.lower_nilpotent_series()?;
    c.add(
        e,
        "lower nilpotent series L > L^2 > 0",
        report::series(&solvlie::SeriesChain { kind: ln.kind, terms: vec![l.full(), sq.clone(), l.zero_space()] }),
        report::series(&ln),
    );
    c.add(e, "L in S_inf", status_of(Status::CertifiedTrue), status_of(in_class_s_infinity(&l)?.status));
    let n = nilradical(&l, cfg)?;
    c.add(e, "N = L^2 + F x3", span::<Rational>(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]), report::subspace(&n));
    c.add(e, "N non-abelian", json!(false), json!(l.is_abelian_subspace(&n)));
    let qa = is_qa(&l, cfg)?;
    c.add(e, "L not in qA", status_of(Status::CertifiedFalse), status_of(qa.status));
    let witness = qa.evidence.as_ref().and_then(|ev| ev.space("ideal")).map(|s| s.dim());
    c.add(e, "qA witness B = 0", json!(0), json!(witness));
    c.add(e, "not phi-free over Q", status_of(Status::CertifiedFalse), status_of(is_phi_free(&l, cfg)?.status));
    let phi3 = maximal_subalgebras_and_frattini(&ex4_7::<F3>(), cfg.budget)?.frattini;
    c.add(e, "phi(L) = span(x2) over F3", span::<F3>(4, &[&[0, 1, 0, 0]]), report::subspace(&phi3));
    let phi5 = maximal_subalgebras_and_frattini(&ex4_7::<F5>(), cfg.budget)?.frattini;
    c.add(e, "phi(L) = span(x2) over F5", span::<F5>(4, &[&[0, 1, 0, 0]]), report::subspace(&phi5));

    let e = "ex4_9";
    let ex = ex4_9::<F5>(&cfg.module)?;
    let x = &ex.algebra;
    c.add(e, "dim X = dim B + 4", json!(ex.module.dim() + 4), json!(x.dim()));
    let soc = abelian_socle(x, cfg)?;
    c.add(e, "Asoc X = B", report::subspace(&ex.module), report::subspace(&soc.socle));
    c.add(e, "N(X) = B", report::subspace(&ex.module), report::subspace(&nilradical(x, cfg)?));
    c.add(e, "X phi-free", status_of(Status::CertifiedTrue), status_of(is_phi_free(x, cfg)?.status));
    c.add(e, "X in S_inf", status_of(Status::CertifiedTrue), status_of(in_class_s_infinity(x)?.status));
    let tower = abelian_tower(x)?;
    let k = decomposition_clauses(x, &tower, &x.zero_space(), cfg)?;
    c.add(e, "ideal decomposition (ii) holds at K = 0", json!(true), json!(k.nilradical_splits));
    c.add(e, "ideal decomposition (iii) holds at K = 0", json!(true), json!(k.centralizers_match));
    c.add(e, "X not in qA", status_of(Status::CertifiedFalse), status_of(is_qa(x, cfg)?.status));

    Ok(Output {
        results: json!({ "claims": c.list }),
        text: c.text,
        failed: c.failed,
    })
}

/// The `--profile` file of `fuzz`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzProfile {
    pub field: FieldDescriptor,
    pub max_dim: usize,
    pub seed: u64,
    /// One recipe for every instance; all three in turn when absent.
    #[serde(default)]
    pub recipe: Option<String>,
    /// Scramble every instance, none, or every other group of three when absent.
    #[serde(default)]
    pub scramble: Option<bool>,
}

impl FuzzProfile {
    pub fn parse(text: &str) -> CliResult<Self> {
        parse_json(text, "fuzz profile").map_err(CliError::input)
    }
}

pub fn fuzz<T: Field>(p: &FuzzProfile, count: usize, ids: &[TheoremId], cfg: &Config) -> CliResult<Output> {
    let recipe: Option<Recipe> = p.recipe.as_deref().map(str::parse).transpose()?;
    let profiles: Vec<_> = corpus_profiles(T::spec(), p.max_dim, count, p.seed)
        .into_iter()
        .map(|mut g| {
            if let Some(r) = recipe {
                g.recipe = r;
            }
            if let Some(s) = p.scramble {
                g.scramble = s;
            }
            g
        })
        .collect();
    let runs: Vec<CliResult<(Value, Vec<ReportStatus>)>> = profiles
        .par_iter()
        .map(|g| {
            let l = random_solvable::<T>(g)?;
            let mut statuses = Vec::new();
            let mut per = Map::new();
            let mut failures = Vec::new();
            for &id in ids {
                let r = check_theorem(&l, id, cfg)?;
                statuses.push(r.status);
                per.insert(id.as_str().into(), json!(report::theorem(&r)["status"]));
                if r.status == ReportStatus::Failed {
                    failures.push(report::theorem(&r));
                }
            }
            let mut inst = Map::new();
            inst.insert("instance".into(), json!(profile_label(g)));
            inst.insert("dim".into(), json!(l.dim()));
            inst.insert("theorems".into(), Value::Object(per));
            if !failures.is_empty() {
                inst.insert("failures".into(), Value::Array(failures));
                let doc = AlgebraDocument::from_algebra(&l, Some(profile_label(g)), Some("fuzz".into()));
                inst.insert("algebra".into(), serde_json::to_value(&doc).expect("document"));
            }
            Ok((Value::Object(inst), statuses))
        })
        .collect();
    let mut counts = vec![[0usize; 4]; ids.len()];
    let mut instances = Vec::new();
    let mut failed = 0;
    for run in runs {
        let (v, statuses) = run?;
        if statuses.contains(&ReportStatus::Failed) {
            failed += 1;
        }
        for (c, s) in counts.iter_mut().zip(statuses) {
            c[match s {
                ReportStatus::Passed => 0,
                ReportStatus::Failed => 1,
                ReportStatus::Conditional => 2,
                ReportStatus::Vacuous => 3,
            }] += 1;
        }
        instances.push(v);
    }
    let mut summary = Map::new();
    let mut text = Vec::new();
    for (id, c) in ids.iter().zip(&counts) {
        text.push(format!("{id}: passed {} failed {} conditional {} skipped {}", c[0], c[1], c[2], c[3]));
        summary.insert(
            id.as_str().into(),
            json!({ "passed": c[0], "failed": c[1], "conditional": c[2], "skipped": c[3] }),
        );
    }
    text.push(format!("{count} instances, {failed} with a failed check"));
    Ok(Output {
        results: json!({ "count": count, "instances_failed": failed, "summary": summary, "instances": instances }),
        text,
        failed: failed > 0,
    })
}
