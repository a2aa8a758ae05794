//! Machine checks of the structure theorems on concrete algebras.
//!
//! Each check evaluates every clause of a statement exactly where possible and
//! then tests the implications or equivalences between them. Statements that
//! quantify over all ideals are exhaustive over a prime field within budget
//! and sampled on a closed family of named ideals otherwise; sampled checks
//! that find no violation are reported as conditional.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use crate::classes::{abelian_tower, in_class_s, in_class_s_infinity, is_a_algebra, is_complemented, is_qa, test_ideals};
use crate::enumerate::{complements_by_enumeration, enumerate_fp, within_budget, EnumKind};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::{LieAlgebra, Representation, SeriesChain};
use crate::linalg::{unit_vector, Matrix, Subspace};
use crate::module::{Module, Split};
use crate::structure::{
    abelian_socle, cartan_subalgebra, find_complement, fitting_decomposition, is_cartan, is_phi_free,
    is_supersolvable, nilradical, nilradical_mod, Config, SocleReport, SplitOutcome,
};
use crate::verdict::{AbelianTower, Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    L2_1,
    T2_2,
    L2_3,
    T2_4,
    C2_5,
    L2_6,
    L3_1,
    L3_2,
    L3_3,
    L3_4,
    T3_5,
    C3_6,
    L4_1,
    T4_2,
    T4_4,
    C4_5,
    T4_6,
    T4_8,
    T5_1,
    C5_2,
    C5_3,
    T5_4,
    T5_5,
}

impl TheoremId {
    pub const ALL: [TheoremId; 23] = [
        TheoremId::L2_1,
        TheoremId::T2_2,
        TheoremId::L2_3,
        TheoremId::T2_4,
        TheoremId::C2_5,
        TheoremId::L2_6,
        TheoremId::L3_1,
        TheoremId::L3_2,
        TheoremId::L3_3,
        TheoremId::L3_4,
        TheoremId::T3_5,
        TheoremId::C3_6,
        TheoremId::L4_1,
        TheoremId::T4_2,
        TheoremId::T4_4,
        TheoremId::C4_5,
        TheoremId::T4_6,
        TheoremId::T4_8,
        TheoremId::T5_1,
        TheoremId::C5_2,
        TheoremId::C5_3,
        TheoremId::T5_4,
        TheoremId::T5_5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::L2_1 => "L2.1",
            TheoremId::T2_2 => "T2.2",
            TheoremId::L2_3 => "L2.3",
            TheoremId::T2_4 => "T2.4",
            TheoremId::C2_5 => "C2.5",
            TheoremId::L2_6 => "L2.6",
            TheoremId::L3_1 => "L3.1",
            TheoremId::L3_2 => "L3.2",
            TheoremId::L3_3 => "L3.3",
            TheoremId::L3_4 => "L3.4",
            TheoremId::T3_5 => "T3.5",
            TheoremId::C3_6 => "C3.6",
            TheoremId::L4_1 => "L4.1",
            TheoremId::T4_2 => "T4.2",
            TheoremId::T4_4 => "T4.4",
            TheoremId::C4_5 => "C4.5",
            TheoremId::T4_6 => "T4.6",
            TheoremId::T4_8 => "T4.8",
            TheoremId::T5_1 => "T5.1",
            TheoremId::C5_2 => "C5.2",
            TheoremId::C5_3 => "C5.3",
            TheoremId::T5_4 => "T5.4",
            TheoremId::T5_5 => "T5.5",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::UnknownId(t.to_string()))
    }
}

/// Parses `all` or a comma-separated list of identifiers.
pub fn parse_theorem_list(s: &str) -> Result<Vec<TheoremId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids: Vec<TheoremId> = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Passed,
    Failed,
    Conditional,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Passed => "passed",
            CheckStatus::Failed => "failed",
            CheckStatus::Conditional => "conditional",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReportStatus {
    Passed,
    Failed,
    Conditional,
    /// Hypotheses do not hold; nothing to check.
    Vacuous,
}

impl ReportStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportStatus::Passed => "passed",
            ReportStatus::Failed => "failed",
            ReportStatus::Conditional => "conditional",
            ReportStatus::Vacuous => "vacuous",
        }
    }
}

/// The truth value of one clause, `None` when it could not be certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause<T> {
    pub label: String,
    pub value: Option<bool>,
    pub witness: Vec<(&'static str, Subspace<T>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    Met,
    NotMet(String),
    Uncertain(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport<T> {
    pub id: TheoremId,
    pub hypothesis: Hypothesis,
    pub clauses: Vec<Clause<T>>,
    pub checks: Vec<Check>,
    pub status: ReportStatus,
}

impl<T> TheoremReport<T> {
    pub fn failed(&self) -> bool {
        self.status == ReportStatus::Failed
    }
}

struct Builder<T> {
    id: TheoremId,
    hypothesis: Hypothesis,
    clauses: Vec<Clause<T>>,
    checks: Vec<Check>,
}

impl<T: Field> Builder<T> {
    fn new(id: TheoremId) -> Self {
        Builder {
            id,
            hypothesis: Hypothesis::Met,
            clauses: Vec::new(),
            checks: Vec::new(),
        }
    }

    /// Adds a hypothesis from a verdict; returns false when it fails.
    fn require(&mut self, what: &str, s: Status) -> bool {
        match s {
            Status::CertifiedTrue => true,
            Status::CertifiedFalse => {
                self.hypothesis = Hypothesis::NotMet(format!("{what} does not hold"));
                false
            }
            Status::Unknown => {
                if self.hypothesis == Hypothesis::Met {
                    self.hypothesis = Hypothesis::Uncertain(format!("{what} is not certified"));
                }
                true
            }
        }
    }

    fn require_bool(&mut self, what: &str, b: bool) -> bool {
        self.require(what, Status::from_bool(b))
    }

    fn clause(&mut self, label: impl Into<String>, value: Option<bool>, witness: Vec<(&'static str, Subspace<T>)>) -> Option<bool> {
        self.clauses.push(Clause {
            label: label.into(),
            value,
            witness,
        });
        value
    }

    fn check(&mut self, name: impl Into<String>, status: CheckStatus, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    fn finish(self) -> TheoremReport<T> {
        let status = match &self.hypothesis {
            Hypothesis::NotMet(_) => ReportStatus::Vacuous,
            h => {
                let failed = self.checks.iter().any(|c| c.status == CheckStatus::Failed);
                let conditional = self.checks.iter().any(|c| c.status == CheckStatus::Conditional);
                match (failed, h) {
                    (true, Hypothesis::Met) => ReportStatus::Failed,
                    (true, _) => ReportStatus::Conditional,
                    (false, Hypothesis::Uncertain(_)) => ReportStatus::Conditional,
                    (false, _) if conditional => ReportStatus::Conditional,
                    _ => ReportStatus::Passed,
                }
            }
        };
        TheoremReport {
            id: self.id,
            hypothesis: self.hypothesis,
            clauses: self.clauses,
            checks: self.checks,
            status,
        }
    }
}

fn implies(a: Option<bool>, b: Option<bool>) -> CheckStatus {
    match (a, b) {
        (Some(true), Some(false)) => CheckStatus::Failed,
        (Some(false), _) | (_, Some(true)) => CheckStatus::Passed,
        _ => CheckStatus::Conditional,
    }
}

fn agree(values: &[Option<bool>]) -> CheckStatus {
    let known: Vec<bool> = values.iter().flatten().copied().collect();
    if known.windows(2).any(|w| w[0] != w[1]) {
        CheckStatus::Failed
    } else if known.len() == values.len() {
        CheckStatus::Passed
    } else {
        CheckStatus::Conditional
    }
}

fn holds(v: Option<bool>) -> CheckStatus {
    match v {
        Some(true) => CheckStatus::Passed,
        Some(false) => CheckStatus::Failed,
        None => CheckStatus::Conditional,
    }
}

/// Three-valued conjunction.
fn all3(values: impl IntoIterator<Item = Option<bool>>) -> Option<bool> {
    let mut unknown = false;
    for v in values {
        match v {
            Some(false) => return Some(false),
            None => unknown = true,
            Some(true) => {}
        }
    }
    (!unknown).then_some(true)
}

/// Facts about one algebra, computed on first use.
struct Facts<'a, T: Field> {
    l: &'a LieAlgebra<T>,
    cfg: &'a Config,
    derived: SeriesChain<T>,
    nil: OnceCell<Subspace<T>>,
    qa: OnceCell<Verdict<T>>,
    s_inf: OnceCell<Verdict<T>>,
    phi: OnceCell<Verdict<T>>,
    a_alg: OnceCell<Verdict<T>>,
    complemented: OnceCell<Verdict<T>>,
    socle: OnceCell<SocleReport<T>>,
    ideals: OnceCell<(Vec<Subspace<T>>, bool)>,
}

macro_rules! cached {
    ($self:ident, $field:ident, $e:expr) => {{
        if let Some(v) = $self.$field.get() {
            return Ok(v);
        }
        let v = $e;
        Ok($self.$field.get_or_init(|| v))
    }};
}

impl<'a, T: Field> Facts<'a, T> {
    fn new(l: &'a LieAlgebra<T>, cfg: &'a Config) -> Self {
        Facts {
            l,
            cfg,
            derived: l.derived_series(),
            nil: OnceCell::new(),
            qa: OnceCell::new(),
            s_inf: OnceCell::new(),
            phi: OnceCell::new(),
            a_alg: OnceCell::new(),
            complemented: OnceCell::new(),
            socle: OnceCell::new(),
            ideals: OnceCell::new(),
        }
    }

    /// Derived length.
    fn dl(&self) -> usize {
        self.derived.terms.len() - 1
    }

    fn d(&self, i: usize) -> &Subspace<T> {
        self.derived.term(i)
    }

    fn nil(&self) -> Result<&Subspace<T>> {
        cached!(self, nil, nilradical(self.l, self.cfg)?)
    }

    fn qa(&self) -> Result<&Verdict<T>> {
        cached!(self, qa, is_qa(self.l, self.cfg)?)
    }

    fn s_inf(&self) -> Result<&Verdict<T>> {
        cached!(self, s_inf, in_class_s_infinity(self.l)?)
    }

    fn phi(&self) -> Result<&Verdict<T>> {
        cached!(self, phi, is_phi_free(self.l, self.cfg)?)
    }

    fn a_alg(&self) -> Result<&Verdict<T>> {
        cached!(self, a_alg, is_a_algebra(self.l, self.cfg)?)
    }

    fn complemented(&self) -> Result<&Verdict<T>> {
        cached!(self, complemented, is_complemented(self.l, self.cfg)?)
    }

    fn socle(&self) -> Result<&SocleReport<T>> {
        cached!(self, socle, abelian_socle(self.l, self.cfg)?)
    }

    fn ideals(&self) -> Result<&(Vec<Subspace<T>>, bool)> {
        cached!(self, ideals, test_ideals(self.l, self.cfg)?)
    }

    fn completely_solvable(&self) -> bool {
        self.l.predicates().completely_solvable
    }

    fn enumerable(&self) -> bool {
        T::order().is_some() && within_budget::<T>(self.l.dim(), self.cfg.budget)
    }

    /// Minimal ideals, with a flag saying whether the list is complete.
    fn minimal_ideals(&self) -> Result<(Vec<Subspace<T>>, bool)> {
        let (ideals, exhaustive) = self.ideals()?;
        if *exhaustive {
            let nonzero: Vec<&Subspace<T>> = ideals.iter().filter(|i| !i.is_zero()).collect();
            let minimal = nonzero
                .iter()
                .filter(|i| !nonzero.iter().any(|j| j.dim() < i.dim() && i.contains(j)))
                .map(|i| (*i).clone())
                .collect();
            return Ok((minimal, true));
        }
        let soc = self.socle()?;
        Ok((soc.minimal_ideals.clone(), soc.monolithic && soc.exact))
    }

    /// Whether `L` splits over the ideal `k`, decided directly.
    fn splits(&self, k: &Subspace<T>) -> Result<(Option<bool>, Option<Subspace<T>>)> {
        match find_complement(self.l, k, self.cfg)? {
            SplitOutcome::Split(b) => Ok((Some(true), Some(b))),
            SplitOutcome::NoSplit => Ok((Some(false), None)),
            SplitOutcome::Unknown if self.enumerable() => {
                let c = complements_by_enumeration(self.l, k, self.cfg.budget)?;
                Ok((Some(!c.is_empty()), c.into_iter().next()))
            }
            SplitOutcome::Unknown => Ok((None, None)),
        }
    }

    /// Complements of `k` to test a statement against: all of them when
    /// enumerable, otherwise one.
    fn complements(&self, k: &Subspace<T>) -> Result<(Vec<Subspace<T>>, bool)> {
        if self.enumerable() {
            return Ok((complements_by_enumeration(self.l, k, self.cfg.budget)?, true));
        }
        Ok(match self.splits(k)?.1 {
            Some(b) => (vec![b], false),
            None => (Vec::new(), false),
        })
    }
}

/// Whether the Cartan subalgebras of `upper / low` are exactly the complements
/// of `k / low`. Exhaustive when the quotient is enumerable, otherwise only
/// refutable.
pub fn cartans_are_complements<T: Field>(
    l: &LieAlgebra<T>,
    upper: &Subspace<T>,
    k: &Subspace<T>,
    low: &Subspace<T>,
    cfg: &Config,
) -> Result<(Option<bool>, Vec<(&'static str, Subspace<T>)>)> {
    let r = l.restrict(upper)?;
    let qt = r.algebra.quotient(&r.pull_space(low))?;
    let q = &qt.algebra;
    let kq = qt.project_space(&r.pull_space(k));
    let lift = |s: &Subspace<T>| r.embed_space(&qt.preimage(s));
    let is_comp = |s: &Subspace<T>| s.intersect(&kq).is_zero() && s.dim() + kq.dim() == q.dim();
    if T::order().is_some() && within_budget::<T>(q.dim(), cfg.budget) {
        for s in enumerate_fp(q, EnumKind::Subalgebras, cfg.budget)? {
            if is_cartan(q, &s) != is_comp(&s) {
                return Ok((Some(false), vec![("subalgebra_preimage", lift(&s))]));
            }
        }
        return Ok((Some(true), Vec::new()));
    }
    if let Ok(c) = cartan_subalgebra(q, cfg) {
        if !is_comp(&c) {
            return Ok((Some(false), vec![("cartan_preimage", lift(&c))]));
        }
    }
    if q.is_abelian_subspace(&kq) {
        if let Some(b) = crate::structure::splits_over_abelian_ideal(q, &kq)? {
            if !is_cartan(q, &b) {
                return Ok((Some(false), vec![("complement_preimage", lift(&b))]));
            }
        }
    }
    Ok((None, Vec::new()))
}

/// Clauses (i)-(iii) of the ideal-decomposition theorem for one ideal `K`
/// and tower, with (iii) read modulo `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionClauses {
    pub ideal_splits: bool,
    pub nilradical_splits: bool,
    pub centralizers_match: bool,
}

pub fn decomposition_clauses<T: Field>(
    l: &LieAlgebra<T>,
    tower: &AbelianTower<T>,
    k: &Subspace<T>,
    cfg: &Config,
) -> Result<DecompositionClauses> {
    let derived = l.derived_series();
    let nk = nilradical_mod(l, k, cfg)?;
    let top = tower.layers.last().cloned().unwrap_or_else(|| l.zero_space());
    let ideal_splits = tower.layers.iter().map(|a| k.intersect(a).dim()).sum::<usize>() == k.dim();
    let nilradical_splits =
        nk.contains(&top) && tower.layers.iter().map(|a| nk.intersect(a).dim()).sum::<usize>() == nk.dim();
    let mut centralizers_match = true;
    for (i, a) in tower.layers.iter().enumerate() {
        let di = derived.term(i);
        let lhs = di.intersect(&l.centralizer(&di.sum(k), k));
        if lhs.sum(k) != nk.intersect(a).sum(k) {
            centralizers_match = false;
        }
    }
    Ok(DecompositionClauses {
        ideal_splits,
        nilradical_splits,
        centralizers_match,
    })
}

/// Runs the machine check for one statement.
pub fn check_theorem<T: Field>(l: &LieAlgebra<T>, id: TheoremId, cfg: &Config) -> Result<TheoremReport<T>> {
    l.require_solvable()?;
    let f = Facts::new(l, cfg);
    let mut b = Builder::new(id);
    match id {
        TheoremId::T2_2 => t2_2(&f, &mut b)?,
        TheoremId::T2_4 => t2_4(&f, &mut b)?,
        TheoremId::C2_5 => c2_5(&f, &mut b)?,
        TheoremId::L2_6 => l2_6(&f, &mut b)?,
        TheoremId::L2_1 | TheoremId::L2_3 | TheoremId::L3_2 => homomorph(&f, &mut b, id)?,
        TheoremId::L3_1 => {
            let c = f.complemented()?.status;
            if b.require("complemented", c) {
                let q = f.qa()?.status.known();
                b.clause("qA", q, Vec::new());
                b.check("complemented => qA", holds(q), "");
            }
        }
        TheoremId::L3_3 => {
            if b.require("qA", f.qa()?.status) {
                let s = f.s_inf()?.status.known();
                b.clause("S_inf", s, Vec::new());
                b.check("qA => S_inf", holds(s), "");
            }
        }
        TheoremId::L3_4 => l3_4(&f, &mut b)?,
        TheoremId::T3_5 => t3_5(&f, &mut b)?,
        TheoremId::C3_6 => c3_6(&f, &mut b)?,
        TheoremId::L4_1 => l4_1(&f, &mut b)?,
        TheoremId::T4_2 => t4_2(&f, &mut b)?,
        TheoremId::T4_4 => t4_4(&f, &mut b)?,
        TheoremId::C4_5 => c4_5(&f, &mut b)?,
        TheoremId::T4_6 => {
            if b.require_bool("completely solvable", f.completely_solvable()) {
                let q = f.qa()?.status.known();
                let a = f.a_alg()?.status.known();
                b.clause("qA", q, Vec::new());
                b.clause("A-algebra", a, Vec::new());
                b.check("qA <=> A-algebra", agree(&[q, a]), "");
            }
        }
        TheoremId::T4_8 => t4_8(&f, &mut b)?,
        TheoremId::T5_1 => t5_1(&f, &mut b)?,
        TheoremId::C5_2 => c5_2(&f, &mut b)?,
        TheoremId::C5_3 => c5_3(&f, &mut b)?,
        TheoremId::T5_4 => {
            b.hypothesis = Hypothesis::NotMet("statement about constructions; checked by construct".into());
        }
        TheoremId::T5_5 => t5_5(&f, &mut b)?,
    }
    Ok(b.finish())
}

fn t2_2<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    let dl = f.dl();
    if dl < 2 {
        b.hypothesis = Hypothesis::NotMet("no nonzero L^(n) with n >= 1".into());
        return Ok(());
    }
    for n in 1..dl {
        let (dn, dp, dq) = (f.d(n).clone(), f.d(n - 1).clone(), f.d(n + 1).clone());
        let (split, _) = f.splits(&dn)?;
        let v1 = b.clause(format!("n={n} (i) L in S_n"), split, vec![("L^(n)", dn.clone())]);
        let comm = f.l.product_space(&dn, &dp);
        let v2 = b.clause(
            format!("n={n} (ii) [L^(n), L^(n-1)] = L^(n)"),
            Some(comm == dn),
            vec![("commutator", comm)],
        );
        let (v3, w) = cartans_are_complements(f.l, &dp, &dn, &dq, f.cfg)?;
        let v3 = b.clause(format!("n={n} (iii) Cartan subalgebras are the complements"), v3, w);
        b.check(format!("n={n} (i) => (ii)"), implies(v1, v2), "");
        b.check(format!("n={n} (ii) => (iii)"), implies(v2, v3), "");
        if dq.is_zero() {
            b.check(format!("n={n} (iii) => (i)"), implies(v3, v1), "L^(n+1) = 0");
            if v2 == Some(true) {
                let r = f.l.restrict(&dp)?;
                let c = r.embed_space(&cartan_subalgebra(&r.algebra, f.cfg)?);
                let fit = fitting_decomposition(f.l, &c)?;
                let ok = fit.one == dn
                    && f.l.is_subalgebra(&fit.null)
                    && fit.null.intersect(&dn).is_zero()
                    && fit.null.sum(&dn).is_full();
                b.clause(
                    format!("n={n} Fitting null component complements L^(n)"),
                    Some(ok),
                    vec![("cartan", c), ("null", fit.null), ("one", fit.one)],
                );
                b.check(format!("n={n} Fitting construction"), holds(Some(ok)), "");
            }
        }
    }
    Ok(())
}

/// The five clauses of the S_∞ characterization.
pub fn s_infinity_clauses<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<[Option<bool>; 5]> {
    let f = Facts::new(l, cfg);
    let mut b = Builder::new(TheoremId::T2_4);
    t2_4_values(&f, &mut b)
}

fn t2_4_values<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<[Option<bool>; 5]> {
    let l = f.l;
    let dl = f.dl();
    let mut splits = Vec::new();
    let mut comms = Vec::new();
    let mut cartans = Vec::new();
    for i in 1..dl {
        splits.push(f.splits(f.d(i))?.0);
        comms.push(Some(l.product_space(f.d(i), f.d(i - 1)) == *f.d(i)));
        cartans.push(cartans_are_complements(l, f.d(i - 1), f.d(i), f.d(i + 1), f.cfg)?.0);
    }
    let ln = l.lower_nilpotent_series()?;
    let v1 = b.clause("(i) L in S_inf", all3(splits), Vec::new());
    let v2 = b.clause("(ii) [L^(i), L^(i-1)] = L^(i) for all i", all3(comms), Vec::new());
    let v3 = b.clause("(iii) Cartan subalgebras are the complements", all3(cartans), Vec::new());
    let v4 = b.clause(
        "(iv) lower nilpotent series = derived series",
        Some(ln.terms == f.derived.terms),
        Vec::new(),
    );
    let v5 = b.clause(
        "(v) lower nilpotent factors abelian",
        Some(ln.terms.windows(2).all(|w| w[1].contains(&l.product_space(&w[0], &w[0])))),
        Vec::new(),
    );
    Ok([v1, v2, v3, v4, v5])
}

fn t2_4<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    let v = t2_4_values(f, b)?;
    b.check("(ii) <=> (iv) <=> (v)", agree(&[v[1], v[3], v[4]]), "");
    b.check("(i) <=> (ii) <=> (iii)", agree(&[v[0], v[1], v[2]]), "");
    if v[4] == Some(true) {
        match abelian_tower(f.l) {
            Ok(t) => {
                let ok = t.verify(f.l).is_ok();
                b.check("abelian tower", holds(Some(ok)), format!("{} layers", t.len()));
            }
            Err(e) => b.check("abelian tower", CheckStatus::Failed, e.to_string()),
        }
    }
    Ok(())
}

fn tower_of<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<Option<AbelianTower<T>>> {
    match abelian_tower(f.l) {
        Ok(t) => Ok(Some(t)),
        Err(Error::Precondition(msg)) => {
            b.check("abelian tower exists", CheckStatus::Failed, msg);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn c2_5<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require("S_inf", f.s_inf()?.status) {
        return Ok(());
    }
    let Some(t) = tower_of(f, b)? else {
        return Ok(());
    };
    let n = f.l.dim();
    let abelian = t.layers.iter().all(|a| f.l.is_subalgebra(a) && f.l.is_abelian_subspace(a));
    let direct = t.layers.iter().map(|a| a.dim()).sum::<usize>() == n && t.tail_sum(0, n).is_full();
    let v1 = b.clause("(i) L is a direct sum of abelian subalgebras", Some(abelian && direct), Vec::new());
    let series = (0..t.len()).all(|i| t.tail_sum(i, n) == *f.d(i));
    let v2 = b.clause("(ii) L^(i) = A_n + ... + A_i", Some(series), Vec::new());
    b.check("(i)", holds(v1), "");
    b.check("(ii)", holds(v2), "");
    Ok(())
}

fn l2_6<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require("S_inf", f.s_inf()?.status) {
        return Ok(());
    }
    for i in 0..f.dl() {
        let z = f.l.center_of(f.d(i)).intersect(f.d(i + 1));
        let v = b.clause(format!("i={i} Z(L^(i)) ∩ L^(i+1) = 0"), Some(z.is_zero()), vec![("intersection", z)]);
        b.check(format!("i={i}"), holds(v), "");
    }
    Ok(())
}

fn universal_status(violation: bool, exhaustive: bool) -> CheckStatus {
    if violation {
        CheckStatus::Failed
    } else if exhaustive {
        CheckStatus::Passed
    } else {
        CheckStatus::Conditional
    }
}

fn homomorph<T: Field>(f: &Facts<T>, b: &mut Builder<T>, id: TheoremId) -> Result<()> {
    let l = f.l;
    let (ideals, exhaustive) = f.ideals()?.clone();
    let classes: Vec<(String, Status)> = match id {
        TheoremId::L2_1 => (1..f.dl())
            .map(|n| Ok((format!("S_{n}"), in_class_s(l, n, f.cfg)?.status)))
            .collect::<Result<_>>()?,
        TheoremId::L2_3 => vec![("S_inf".to_string(), f.s_inf()?.status)],
        _ => vec![("qA".to_string(), f.qa()?.status)],
    };
    let members: Vec<&(String, Status)> = classes.iter().filter(|(_, s)| *s != Status::CertifiedFalse).collect();
    if members.is_empty() {
        b.hypothesis = Hypothesis::NotMet("L is in none of the classes".into());
        return Ok(());
    }
    for (name, status) in members {
        let mut violation = None;
        let mut unknown = *status == Status::Unknown;
        for k in &ideals {
            let q = l.quotient(k)?.algebra;
            let s = match id {
                TheoremId::L2_1 => {
                    let n: usize = name[2..].parse().expect("class name");
                    in_class_s(&q, n, f.cfg)?.status
                }
                TheoremId::L2_3 => in_class_s_infinity(&q)?.status,
                _ => is_qa(&q, f.cfg)?.status,
            };
            match s {
                Status::CertifiedFalse => {
                    violation = Some(k.clone());
                    break;
                }
                Status::Unknown => unknown = true,
                Status::CertifiedTrue => {}
            }
        }
        let failed = violation.is_some();
        b.clause(
            format!("quotients of L stay in {name}"),
            if failed { Some(false) } else if unknown || !exhaustive { None } else { Some(true) },
            violation.map(|k| vec![("ideal", k)]).unwrap_or_default(),
        );
        let st = if failed && *status == Status::CertifiedTrue {
            CheckStatus::Failed
        } else if failed || unknown {
            CheckStatus::Conditional
        } else {
            universal_status(false, exhaustive)
        };
        b.check(format!("{name} is a homomorph"), st, format!("{} ideals", ideals.len()));
    }
    Ok(())
}

fn l3_4<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require("qA", f.qa()?.status) {
        return Ok(());
    }
    if f.dl() == 0 {
        b.hypothesis = Hypothesis::NotMet("zero algebra".into());
        return Ok(());
    }
    let top = f.d(f.dl() - 1).clone();
    let (comps, all_comps) = f.complements(&top)?;
    if comps.is_empty() {
        b.clause("L = L^(n) ∔ C", Some(false), vec![("L^(n)", top)]);
        b.check("complement exists", CheckStatus::Failed, "qA algebras split over L^(n)");
        return Ok(());
    }
    let (ideals, exhaustive) = f.ideals()?;
    let mut violation = None;
    'outer: for c in &comps {
        for d in ideals {
            if top.intersect(d).dim() + c.intersect(d).dim() != d.dim() {
                violation = Some(vec![("complement", c.clone()), ("ideal", d.clone())]);
                break 'outer;
            }
        }
    }
    let failed = violation.is_some();
    b.clause("D = (B ∩ D) ∔ (C ∩ D)", Some(!failed).filter(|v| !*v || *exhaustive), violation.unwrap_or_default());
    b.check("every ideal decomposes", universal_status(failed, *exhaustive && all_comps), format!("{} complements", comps.len()));
    Ok(())
}

fn t3_5<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require("qA", f.qa()?.status) {
        return Ok(());
    }
    let Some(tower) = tower_of(f, b)? else {
        return Ok(());
    };
    let (ideals, exhaustive) = f.ideals()?;
    let mut bad: [Option<Subspace<T>>; 3] = [None, None, None];
    for k in ideals {
        let c = decomposition_clauses(f.l, &tower, k, f.cfg)?;
        for (slot, ok) in bad.iter_mut().zip([c.ideal_splits, c.nilradical_splits, c.centralizers_match]) {
            if !ok && slot.is_none() {
                *slot = Some(k.clone());
            }
        }
    }
    let labels = [
        "(i) K = ∔ (K ∩ A_i)",
        "(ii) N_K = A_n ∔ (N_K ∩ A_{n-1}) ∔ ...",
        "(iii) Z_{L^(i)}((L^(i)+K)/K) = N_K ∩ A_i mod K",
    ];
    for (label, slot) in labels.iter().zip(bad) {
        let failed = slot.is_some();
        b.clause(*label, if failed { Some(false) } else { exhaustive.then_some(true) }, slot.map(|k| vec![("ideal", k)]).unwrap_or_default());
        b.check(*label, universal_status(failed, *exhaustive), format!("{} ideals", ideals.len()));
    }
    let nil = f.nil()?.clone();
    let (minimal, complete) = f.minimal_ideals()?;
    let bad_min = minimal
        .iter()
        .find(|a| !tower.layers.iter().any(|ai| nil.intersect(ai).contains(a)))
        .cloned();
    let failed = bad_min.is_some();
    b.clause(
        "(iv) A ⊆ N ∩ A_i for some i",
        if failed { Some(false) } else { complete.then_some(true) },
        bad_min.map(|a| vec![("minimal_ideal", a)]).unwrap_or_default(),
    );
    b.check("(iv)", universal_status(failed, complete), format!("{} minimal ideals", minimal.len()));
    Ok(())
}

fn c3_6<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require("S_inf", f.s_inf()?.status) {
        return Ok(());
    }
    let Some(tower) = tower_of(f, b)? else {
        return Ok(());
    };
    let (ideals, exhaustive) = f.ideals()?;
    let mut violation = None;
    for k in ideals {
        let c = decomposition_clauses(f.l, &tower, k, f.cfg)?;
        if !(c.nilradical_splits && c.centralizers_match) {
            violation = Some(k.clone());
            break;
        }
    }
    let rhs = if violation.is_some() { Some(false) } else { exhaustive.then_some(true) };
    let qa = f.qa()?.status.known();
    b.clause("qA", qa, Vec::new());
    b.clause("(i) and (ii) for every ideal K", rhs, violation.map(|k| vec![("ideal", k)]).unwrap_or_default());
    b.check("qA <=> (i) and (ii)", agree(&[qa, rhs]), "");
    Ok(())
}

fn l4_1<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require_bool("completely solvable", f.completely_solvable()) {
        return Ok(());
    }
    if f.dl() <= 2 {
        b.hypothesis = Hypothesis::NotMet("L^(n) = 0 for every n >= 2".into());
        return Ok(());
    }
    for n in 2..f.dl() {
        let (split, comp) = f.splits(f.d(n))?;
        let v = b.clause(
            format!("n={n} L in S_n"),
            split,
            comp.map(|c| vec![("complement", c)]).unwrap_or_default(),
        );
        b.check(format!("n={n} S_n forces L^(n) = 0"), implies(v, Some(false)), "L^(n) is nonzero");
    }
    Ok(())
}

fn t4_2<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require_bool("completely solvable", f.completely_solvable()) {
        return Ok(());
    }
    let l = f.l;
    let dl = f.dl();
    let mut splits = Vec::new();
    for i in 1..dl {
        splits.push(f.splits(f.d(i))?.0);
    }
    let v1 = b.clause("(i) L in S_inf", all3(splits.iter().copied()), Vec::new());
    let s12 = all3([f.splits(f.d(1))?.0, f.splits(f.d(2))?.0]);
    let v1b = b.clause("(i') L in S_1 ∩ S_2", s12, Vec::new());
    let d2 = f.d(2).clone();
    let sq = f.d(1).clone();
    let metabelian = d2.is_zero();
    let v2 = b.clause(
        "(ii) L^(2) = 0 and [L, L^2] = L^2",
        Some(metabelian && l.product_space(&l.full(), &sq) == sq),
        vec![("L^(2)", d2.clone())],
    );
    let v3 = if metabelian {
        let (v, w) = cartans_are_complements(l, &l.full(), &sq, &l.zero_space(), f.cfg)?;
        b.clause("(iii) L^(2) = 0 and Cartan subalgebras are the complements of L^2", v, w)
    } else {
        b.clause("(iii) L^(2) = 0 and Cartan subalgebras are the complements of L^2", Some(false), vec![("L^(2)", d2)])
    };
    b.check("(i) <=> (ii) <=> (iii)", agree(&[v1, v2, v3]), "");
    b.check("S_1 ∩ S_2 = S_inf", agree(&[v1, v1b]), "");
    Ok(())
}

fn t4_4<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require_bool("completely solvable", f.completely_solvable()) || !b.require("qA", f.qa()?.status) {
        return Ok(());
    }
    let l = f.l;
    let sq = f.d(1).clone();
    let (comps, all_comps) = f.complements(&sq)?;
    if comps.is_empty() {
        b.clause("L = L^2 ∔ B", Some(false), vec![("L^2", sq)]);
        b.check("complement of L^2", CheckStatus::Failed, "qA algebras split over L^2");
        return Ok(());
    }
    let (ideals, exhaustive) = f.ideals()?;
    let mut bad: [Option<Vec<(&'static str, Subspace<T>)>>; 2] = [None, None];
    for c in &comps {
        for k in ideals {
            if bad[0].is_none() && sq.intersect(k).dim() + c.intersect(k).dim() != k.dim() {
                bad[0] = Some(vec![("complement", c.clone()), ("ideal", k.clone())]);
            }
            if bad[1].is_none() {
                let nk = nilradical_mod(l, k, f.cfg)?;
                let zb = c.intersect(&l.centralizer(&l.full(), k));
                if nk != sq.sum(&zb) {
                    bad[1] = Some(vec![("complement", c.clone()), ("ideal", k.clone()), ("preimage_nilradical", nk)]);
                }
            }
        }
    }
    let exh = *exhaustive && all_comps;
    for (label, slot) in ["(i) K = K ∩ L^2 ∔ K ∩ B", "(ii) N_K = L^2 ∔ Z_B(L/K)"].iter().zip(bad) {
        let failed = slot.is_some();
        b.clause(*label, if failed { Some(false) } else { exh.then_some(true) }, slot.unwrap_or_default());
        b.check(*label, universal_status(failed, exh), format!("{} ideals, {} complements", ideals.len(), comps.len()));
    }
    let (minimal, complete) = f.minimal_ideals()?;
    let center = l.center();
    let mut bad_min = None;
    for a in &minimal {
        let in_sq = sq.contains(a) && l.product_space(a, &l.full()) == *a;
        let central = comps.iter().any(|c| c.contains(a)) && center.contains(a) && a.dim() == 1;
        if !(in_sq || central) {
            bad_min = Some(a.clone());
            break;
        }
    }
    let failed = bad_min.is_some();
    b.clause(
        "(iii) A ⊆ L^2 with [A,L] = A, or A ⊆ B ∩ Z(L) with dim A = 1",
        if failed { Some(false) } else { complete.then_some(true) },
        bad_min.map(|a| vec![("minimal_ideal", a)]).unwrap_or_default(),
    );
    b.check("(iii)", universal_status(failed, complete), format!("{} minimal ideals", minimal.len()));
    Ok(())
}

fn c4_5<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require_bool("completely solvable", f.completely_solvable()) || !b.require("S_inf", f.s_inf()?.status) {
        return Ok(());
    }
    let l = f.l;
    let sq = f.d(1).clone();
    let (comps, _) = f.complements(&sq)?;
    let Some(c) = comps.into_iter().next() else {
        b.check("complement of L^2", CheckStatus::Failed, "S_inf algebras split over L^2");
        return Ok(());
    };
    let (ideals, exhaustive) = f.ideals()?;
    let mut violation = None;
    for k in ideals {
        let nk = nilradical_mod(l, k, f.cfg)?;
        let zb = c.intersect(&l.centralizer(&l.full(), k));
        if nk != sq.sum(&zb) {
            violation = Some(k.clone());
            break;
        }
    }
    let rhs = if violation.is_some() { Some(false) } else { exhaustive.then_some(true) };
    let qa = f.qa()?.status.known();
    b.clause("qA", qa, Vec::new());
    b.clause(
        "N_K = L^2 ∔ Z_B(L/K) for every ideal K",
        rhs,
        violation.map(|k| vec![("complement", c.clone()), ("ideal", k)]).unwrap_or_default(),
    );
    b.check("qA <=> N_K = L^2 ∔ Z_B(L/K)", agree(&[qa, rhs]), "");
    Ok(())
}

fn t4_8<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require_bool("completely solvable", f.completely_solvable()) {
        return Ok(());
    }
    let phi = f.phi()?.status.known();
    let qa = f.qa()?.status.known();
    let soc = f.socle()?.socle.clone();
    let sinf = f.s_inf()?.status.known();
    b.clause("phi-free", phi, Vec::new());
    b.clause("qA", qa, Vec::new());
    let rhs = all3([Some(soc.contains(f.d(1))), sinf]);
    b.clause("L^2 ⊆ Asoc L and L in S_inf", rhs, vec![("abelian_socle", soc)]);
    b.check("(i) phi-free => qA", implies(phi, qa), "");
    b.check("(ii) phi-free <=> L^2 ⊆ Asoc L and S_inf", agree(&[phi, rhs]), "");
    Ok(())
}

fn t5_1<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require("qA", f.qa()?.status) {
        return Ok(());
    }
    let soc = f.socle()?.clone();
    let mono = if soc.monolithic && soc.exact {
        Status::CertifiedTrue
    } else if soc.minimal_ideals.len() > 1 {
        Status::CertifiedFalse
    } else {
        Status::Unknown
    };
    if !b.require("monolithic", mono) {
        return Ok(());
    }
    let l = f.l;
    let w = soc.monolith.clone().expect("monolithic");
    let nil = f.nil()?.clone();
    let top = f.d(f.dl() - 1).clone();
    let v1 = b.clause("(i) W is abelian", Some(l.is_abelian_subspace(&w)), vec![("monolith", w.clone())]);
    // Fails for the 1-dim algebra, where W = Z(L) = L; read as requiring L non-abelian.
    let v2 = b.clause(
        "(ii) Z(L) = 0 and [L, W] = W",
        (!l.is_abelian()).then(|| l.center().is_zero() && l.product_space(&l.full(), &w) == w),
        vec![("center", l.center())],
    );
    let tower_top = abelian_tower(l).ok().and_then(|t| t.layers.last().cloned());
    let v3 = b.clause(
        "(iii) N = A_n = L^(n)",
        Some(nil == top && tower_top.as_ref() == Some(&top)),
        vec![("nilradical", nil.clone()), ("L^(n)", top)],
    );
    let zw = l.centralizer(&w, &l.zero_space());
    let v4 = b.clause("(iv) N = Z_L(W)", Some(nil == zw), vec![("centralizer", zw)]);
    let phi = f.phi()?.status.known();
    b.clause("phi-free", phi, Vec::new());
    let v5 = b.clause("W = N", Some(w == nil), Vec::new());
    for (label, v) in [("(i)", v1), ("(iii)", v3), ("(iv)", v4)] {
        b.check(label, holds(v), "");
    }
    if v2.is_some() {
        b.check("(ii)", holds(v2), "");
    }
    b.check("(v) phi-free <=> W = N", agree(&[phi, v5]), "");
    Ok(())
}

fn c5_2<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require("qA", f.qa()?.status) {
        return Ok(());
    }
    let soc = f.socle()?.clone();
    let mono = if soc.monolithic && soc.exact {
        Status::CertifiedTrue
    } else if soc.minimal_ideals.len() > 1 {
        Status::CertifiedFalse
    } else {
        Status::Unknown
    };
    if !b.require("monolithic", mono) {
        return Ok(());
    }
    let sup = match is_supersolvable(f.l, f.cfg) {
        Ok(s) => Status::from_bool(s),
        Err(Error::ProbeExhausted { .. }) => Status::Unknown,
        Err(e) => return Err(e),
    };
    if !b.require("supersolvable", sup) {
        return Ok(());
    }
    let l = f.l;
    let sq = f.d(1).clone();
    let codim = b.clause("L = L^2 ∔ Fx", Some(l.dim() == sq.dim() + 1), vec![("L^2", sq.clone())]);
    b.check("codim L^2 = 1", holds(codim), "");
    if codim == Some(true) {
        let j = sq.non_pivots()[0];
        let x = unit_vector(l.dim(), j);
        let action: Matrix<T> = l.action_on_ideal(&sq)[j].clone();
        let m = Module::new(sq.dim(), vec![action])?;
        let tri = match m.composition_series(&f.cfg.module) {
            Ok((_, factors)) => Some(factors.iter().all(|g| g.dim() == 1)),
            Err(Error::ProbeExhausted { .. }) => None,
            Err(e) => return Err(e),
        };
        b.clause("ad x on L^2 is triangulable", tri, vec![("x", Subspace::span(l.dim(), [x]))]);
        b.check("triangulable", holds(tri), "");
    }
    Ok(())
}

fn c5_3<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    if !b.require("qA", f.qa()?.status) || !b.require("phi-free", f.phi()?.status) {
        return Ok(());
    }
    let soc = f.socle()?.clone();
    let mono = if soc.monolithic && soc.exact {
        Status::CertifiedTrue
    } else if soc.minimal_ideals.len() > 1 {
        Status::CertifiedFalse
    } else {
        Status::Unknown
    };
    if !b.require("monolithic", mono) {
        return Ok(());
    }
    let l = f.l;
    let n = f.dl() - 1;
    let top = f.d(n).clone();
    let ab = b.clause("L^(n) is abelian", Some(l.is_abelian_subspace(&top)), vec![("L^(n)", top.clone())]);
    b.check("L^(n) abelian", holds(ab), "");
    let (split, comp) = f.splits(&top)?;
    b.clause("L = L^(n) ⋊ B", split, Vec::new());
    b.check("split", holds(split), "");
    if let Some(c) = comp {
        let r = l.restrict(&c)?;
        let qa = is_qa(&r.algebra, f.cfg)?.status.known();
        let dl = r.algebra.derived_length();
        b.clause("B in qA", qa, vec![("complement", c)]);
        b.check("B in qA", holds(qa), "");
        let idx = b.clause("B has index n", Some(dl == Some(n)), Vec::new());
        b.check("index", holds(idx), "");
    }
    Ok(())
}

fn t5_5<T: Field>(f: &Facts<T>, b: &mut Builder<T>) -> Result<()> {
    let l = f.l;
    let qa = f.qa()?.status.known();
    let phi = f.phi()?.status.known();
    let lhs = b.clause("(i) qA and phi-free", all3([qa, phi]), Vec::new());
    let nil = f.nil()?.clone();
    let mut parts = vec![Some(l.is_abelian_subspace(&nil))];
    let mut complement = None;
    if parts[0] == Some(true) {
        let (split, comp) = f.splits(&nil)?;
        parts.push(split);
        parts.push(Some(Module::on_ideal(l, &nil).is_completely_reducible(&f.cfg.module)?));
        if let Some(c) = &comp {
            parts.push(is_qa(&l.restrict(c)?.algebra, f.cfg)?.status.known());
        }
        complement = comp;
    }
    let rhs = b.clause(
        "(ii) N abelian, L = N ⋊ B, B in qA, N completely reducible",
        all3(parts),
        vec![("nilradical", nil.clone())],
    );
    b.check("(i) <=> (ii)", agree(&[lhs, rhs]), "");
    if let (Some(true), Some(c)) = (rhs, complement) {
        let module = Module::on_ideal(l, &nil);
        let d = module.socle_decomposition(&f.cfg.module)?;
        let bdl = l.restrict(&c)?.algebra.derived_length();
        let faithful = d.summands.iter().any(|s| {
            let a = Subspace::span(l.dim(), s.basis().iter().map(|v| nil.from_coordinates(v)));
            c.intersect(&l.centralizer(&a, &l.zero_space())).is_zero()
        });
        if faithful {
            let ok = l.derived_length().zip(bdl).map(|(a, b)| a == b + 1);
            b.clause("index of L is index of B plus one", ok, Vec::new());
            b.check("index", holds(ok), "faithful irreducible submodule present");
        }
    }
    Ok(())
}

/// Builds `A ⋊ B` from a qA algebra `B` and an irreducible module `A`, and
/// checks that the result is qA and, for faithful `A`, phi-free, monolithic
/// with monolith `A` and of derived length one more than `B`.
pub fn construct_qa_extension<T: Field>(
    b: &LieAlgebra<T>,
    rho: &Representation<T>,
    cfg: &Config,
) -> Result<(LieAlgebra<T>, TheoremReport<T>)> {
    rho.validate(b)?;
    b.require_solvable()?;
    let qa_b = is_qa(b, cfg)?;
    if qa_b.is_false() {
        return Err(Error::Precondition("B is not qA".into()));
    }
    let m = rho.module_dim;
    let module = Module::new(m, rho.matrices.clone())?;
    let mut irreducible_certified = true;
    if m == 0 {
        return Err(Error::Precondition("module must be nonzero".into()));
    }
    match module.split(&cfg.module) {
        Ok(Split::Proper(s)) => return Err(Error::Reducible { submodule_dim: s.dim() }),
        Ok(Split::Irreducible) => {}
        Err(Error::ProbeExhausted { .. }) => irreducible_certified = false,
        Err(e) => return Err(e),
    }
    let l = LieAlgebra::semidirect_product(b, rho)?;
    let a = Subspace::span(l.dim(), (0..m).map(|i| unit_vector(l.dim(), i)));
    let mut r = Builder::new(TheoremId::T5_4);
    r.require("B in qA", qa_b.status);
    r.require_bool("A irreducible", true);
    if !irreducible_certified {
        r.require("A irreducible", Status::Unknown);
    }
    let solvable = r.clause("L solvable", Some(l.is_solvable()), Vec::new());
    r.check("solvable", holds(solvable), "");
    let qa = is_qa(&l, cfg)?;
    let qa_v = r.clause("L in qA", qa.status.known(), qa.evidence.map(|e| e.spaces).unwrap_or_default());
    r.check("qA", holds(qa_v), qa.summary.method);
    if rho.is_faithful(b.dim()) {
        let soc = abelian_socle(&l, cfg)?;
        let mono = if soc.monolithic && soc.exact {
            Some(soc.monolith.as_ref() == Some(&a))
        } else if soc.minimal_ideals.len() > 1 {
            Some(false)
        } else {
            None
        };
        r.clause("monolithic with monolith A", mono, vec![("abelian_socle", soc.socle)]);
        r.check("monolith", holds(mono), "");
        let phi = is_phi_free(&l, cfg)?.status.known();
        r.clause("phi-free", phi, Vec::new());
        r.check("phi-free", holds(phi), "");
        let idx = l.derived_length().zip(b.derived_length()).map(|(x, y)| x == y + 1);
        r.clause("index of L is index of B plus one", idx, Vec::new());
        r.check("index", holds(idx), "");
    }
    Ok((l, r.finish()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F3, F5};

    fn ex43<T: Field>() -> LieAlgebra<T> {
        LieAlgebra::from_int_brackets(4, &[(0, 1, &[(2, 1)]), (0, 2, &[(1, 1)]), (1, 2, &[(3, 1)])]).unwrap()
    }

    fn ex47<T: Field>() -> LieAlgebra<T> {
        LieAlgebra::from_int_brackets(4, &[(0, 3, &[(0, -1)]), (1, 3, &[(1, -1)]), (0, 2, &[(1, -1)])]).unwrap()
    }

    #[test]
    fn ids_parse() {
        assert_eq!("t2.4".parse::<TheoremId>().unwrap(), TheoremId::T2_4);
        assert_eq!(parse_theorem_list("T2.2,L2.6").unwrap(), vec![TheoremId::T2_2, TheoremId::L2_6]);
        assert_eq!(parse_theorem_list("all").unwrap().len(), 23);
        assert!("T9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn t2_4_on_ex47() {
        let cfg = Config::default();
        let r = check_theorem(&ex47::<Rational>(), TheoremId::T2_4, &cfg).unwrap();
        assert_ne!(r.status, ReportStatus::Failed, "{r:?}");
        for c in &r.clauses {
            if c.label.starts_with("(ii)") || c.label.starts_with("(iv)") || c.label.starts_with("(v)") {
                assert_eq!(c.value, Some(true));
            }
        }
    }

    #[test]
    fn t4_2_on_ex43() {
        let cfg = Config::default();
        let r = check_theorem(&ex43::<Rational>(), TheoremId::T4_2, &cfg).unwrap();
        assert_ne!(r.status, ReportStatus::Failed, "{r:?}");
        let ii = r.clauses.iter().find(|c| c.label.starts_with("(ii)")).unwrap();
        assert_eq!(ii.value, Some(false));
        assert_eq!(ii.witness[0].1, Subspace::from_i64(4, &[&[0, 0, 0, 1]]));
    }

    #[test]
    fn every_theorem_on_small_examples() {
        let cfg = Config::default();
        for id in TheoremId::ALL {
            for l in [ex43::<F3>(), ex47::<F3>()] {
                let r = check_theorem(&l, id, &cfg).unwrap();
                assert!(!r.failed(), "{id} {r:?}");
            }
            let r = check_theorem(&ex47::<F5>(), id, &cfg).unwrap();
            assert!(!r.failed(), "{id} {r:?}");
            let r = check_theorem(&LieAlgebra::<F3>::abelian(2), id, &cfg).unwrap();
            assert!(!r.failed(), "{id} {r:?}");
        }
    }

    #[test]
    fn theorems_over_rationals() {
        let cfg = Config::default();
        for id in TheoremId::ALL {
            let r = check_theorem(&ex47::<Rational>(), id, &cfg).unwrap();
            assert!(!r.failed(), "{id} {r:?}");
        }
    }

    #[test]
    fn construction_smallest_case() {
        let cfg = Config::default();
        let b = LieAlgebra::<F3>::abelian(1);
        let rho = Representation::new(1, vec![Matrix::from_i64(&[&[1]])]).unwrap();
        let (l, r) = construct_qa_extension(&b, &rho, &cfg).unwrap();
        assert_eq!(l.dim(), 2);
        assert_eq!(r.status, ReportStatus::Passed, "{r:?}");
        let zero = Representation::new(2, vec![Matrix::zeros(2, 2)]).unwrap();
        assert!(matches!(construct_qa_extension(&b, &zero, &cfg), Err(Error::Reducible { .. })));
    }
}
