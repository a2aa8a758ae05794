//! JSON rendering of library results. Object keys are sorted, so equal
//! results always serialize to identical bytes.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use solvlie::structure::SocleReport;
use solvlie::theorems::{Hypothesis, ReportStatus, TheoremReport};
use solvlie::{AbelianTower, Field, Predicates, SeriesChain, Subspace, Verdict};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

pub fn subspace<T: Field>(s: &Subspace<T>) -> Value {
    json!({ "dim": s.dim(), "basis": s.literals() })
}

pub fn series<T: Field>(s: &SeriesChain<T>) -> Value {
    Value::Array(s.terms.iter().map(subspace).collect())
}

pub fn predicates(p: &Predicates) -> Value {
    json!({
        "solvable": p.solvable,
        "nilpotent": p.nilpotent,
        "abelian": p.abelian,
        "completely_solvable": p.completely_solvable,
        "derived_length": p.derived_length,
    })
}

pub fn tower<T: Field>(t: &AbelianTower<T>) -> Value {
    Value::Array(t.layers.iter().map(subspace).collect())
}

fn saturating_u64(x: u128) -> u64 {
    u64::try_from(x).unwrap_or(u64::MAX)
}

pub fn verdict<T: Field>(v: &Verdict<T>) -> Value {
    let mut m = Map::new();
    m.insert("status".into(), json!(v.status.as_str()));
    m.insert("method".into(), json!(v.summary.method));
    m.insert("candidates".into(), json!(saturating_u64(v.summary.candidates)));
    if let Some(e) = &v.evidence {
        let spaces: Map<String, Value> = e.spaces.iter().map(|(n, s)| (n.to_string(), subspace(s))).collect();
        let mut ev = Map::new();
        ev.insert("kind".into(), json!(e.kind.as_str()));
        ev.insert("spaces".into(), Value::Object(spaces));
        if let Some(note) = &e.note {
            ev.insert("note".into(), json!(note));
        }
        if let Some(t) = &e.tower {
            ev.insert("tower".into(), tower(t));
        }
        m.insert("evidence".into(), Value::Object(ev));
    }
    Value::Object(m)
}

pub fn socle<T: Field>(s: &SocleReport<T>) -> Value {
    json!({
        "socle": subspace(&s.socle),
        "minimal_ideals": s.minimal_ideals.iter().map(subspace).collect::<Vec<_>>(),
        "monolithic": s.monolithic,
        "monolith": s.monolith.as_ref().map(subspace),
        "exact": s.exact,
    })
}

/// A theorem report; vacuous reports are rendered as skipped with the reason.
pub fn theorem<T: Field>(r: &TheoremReport<T>) -> Value {
    let (status, reason) = match (&r.status, &r.hypothesis) {
        (ReportStatus::Vacuous, Hypothesis::NotMet(why)) => ("skipped", Some(why.clone())),
        (s, Hypothesis::Uncertain(why)) => (s.as_str(), Some(why.clone())),
        (s, _) => (s.as_str(), None),
    };
    let clauses: Vec<Value> = r
        .clauses
        .iter()
        .map(|c| {
            let w: Map<String, Value> = c.witness.iter().map(|(n, s)| (n.to_string(), subspace(s))).collect();
            json!({ "label": c.label, "value": c.value, "witness": w })
        })
        .collect();
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "status": c.status.as_str(), "detail": c.detail }))
        .collect();
    json!({
        "id": r.id.as_str(),
        "status": status,
        "reason": reason,
        "clauses": clauses,
        "checks": checks,
    })
}

/// Pretty-printed JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
