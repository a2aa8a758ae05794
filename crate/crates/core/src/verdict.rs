//! Three-valued class membership results and the certificates they carry.

use crate::field::Field;
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    CertifiedTrue,
    CertifiedFalse,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::CertifiedTrue => "CertifiedTrue",
            Status::CertifiedFalse => "CertifiedFalse",
            Status::Unknown => "Unknown",
        }
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Status::CertifiedTrue
        } else {
            Status::CertifiedFalse
        }
    }

    /// `Some(b)` when certified.
    pub fn known(self) -> Option<bool> {
        match self {
            Status::CertifiedTrue => Some(true),
            Status::CertifiedFalse => Some(false),
            Status::Unknown => None,
        }
    }
}

/// What a certificate or witness shows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvidenceKind {
    /// `complement` is a subalgebra with `L = ideal ∔ complement`.
    Complement,
    /// No subalgebra complements `ideal`.
    NoComplement,
    /// `[L^(n), L^(n-1)] = commutator` is properly inside `term`.
    CommutatorDeficit,
    /// `upper / lower` is a non-abelian factor of the lower nilpotent series.
    NonAbelianFactor,
    /// An abelian tower is attached.
    Tower,
    /// `nilradical` is not abelian.
    NonAbelianNilradical,
    /// `nilradical` differs from `abelian_socle`.
    NilradicalNotSocle,
    /// `frattini` is a nonzero Frattini ideal.
    FrattiniNonzero,
    /// `N(L / ideal)` pulls back to the non-abelian-mod-`ideal` subspace `preimage`.
    NonAbelianQuotientNilradical,
    /// `subalgebra` is nilpotent and not abelian.
    NonAbelianNilpotentSubalgebra,
    /// No subalgebra `T` has `subalgebra ∩ T = 0` and `<subalgebra, T> = L`.
    UncomplementedSubalgebra,
    /// Every candidate was examined.
    Exhaustive,
    /// Follows from other certified verdicts by a proved implication.
    Implied,
}

impl EvidenceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EvidenceKind::Complement => "complement",
            EvidenceKind::NoComplement => "no_complement",
            EvidenceKind::CommutatorDeficit => "commutator_deficit",
            EvidenceKind::NonAbelianFactor => "non_abelian_factor",
            EvidenceKind::Tower => "tower",
            EvidenceKind::NonAbelianNilradical => "non_abelian_nilradical",
            EvidenceKind::NilradicalNotSocle => "nilradical_not_socle",
            EvidenceKind::FrattiniNonzero => "frattini_nonzero",
            EvidenceKind::NonAbelianQuotientNilradical => "non_abelian_quotient_nilradical",
            EvidenceKind::NonAbelianNilpotentSubalgebra => "non_abelian_nilpotent_subalgebra",
            EvidenceKind::UncomplementedSubalgebra => "uncomplemented_subalgebra",
            EvidenceKind::Exhaustive => "exhaustive",
            EvidenceKind::Implied => "implied",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence<T> {
    pub kind: EvidenceKind,
    pub spaces: Vec<(&'static str, Subspace<T>)>,
    pub tower: Option<AbelianTower<T>>,
    pub note: Option<String>,
}

impl<T: Field> Evidence<T> {
    pub fn new(kind: EvidenceKind) -> Self {
        Evidence {
            kind,
            spaces: Vec::new(),
            tower: None,
            note: None,
        }
    }

    pub fn with(mut self, name: &'static str, s: Subspace<T>) -> Self {
        self.spaces.push((name, s));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_tower(mut self, t: AbelianTower<T>) -> Self {
        self.tower = Some(t);
        self
    }

    pub fn space(&self, name: &str) -> Option<&Subspace<T>> {
        self.spaces.iter().find(|(n, _)| *n == name).map(|(_, s)| s)
    }
}

/// How a verdict was reached.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchSummary {
    pub method: String,
    pub candidates: u128,
    pub budget: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<T> {
    pub status: Status,
    pub evidence: Option<Evidence<T>>,
    pub summary: SearchSummary,
}

impl<T: Field> Verdict<T> {
    pub fn certified(b: bool, evidence: Evidence<T>, method: impl Into<String>) -> Self {
        Verdict {
            status: Status::from_bool(b),
            evidence: Some(evidence),
            summary: SearchSummary {
                method: method.into(),
                ..SearchSummary::default()
            },
        }
    }

    pub fn truth(evidence: Evidence<T>, method: impl Into<String>) -> Self {
        Self::certified(true, evidence, method)
    }

    pub fn refuted(evidence: Evidence<T>, method: impl Into<String>) -> Self {
        Self::certified(false, evidence, method)
    }

    pub fn unknown(method: impl Into<String>) -> Self {
        Verdict {
            status: Status::Unknown,
            evidence: None,
            summary: SearchSummary {
                method: method.into(),
                ..SearchSummary::default()
            },
        }
    }

    pub fn counted(mut self, candidates: u128, budget: u128) -> Self {
        self.summary.candidates = candidates;
        self.summary.budget = budget;
        self
    }

    pub fn is_true(&self) -> bool {
        self.status == Status::CertifiedTrue
    }

    pub fn is_false(&self) -> bool {
        self.status == Status::CertifiedFalse
    }
}

/// `L = A_n ∔ ... ∔ A_0` with abelian subalgebras `A_i` and
/// `L^(i) = A_n ∔ ... ∔ A_i`. `layers[i]` is `A_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianTower<T> {
    pub layers: Vec<Subspace<T>>,
}

impl<T: Field> AbelianTower<T> {
    /// Number of layers, which is the derived length (0 for the zero algebra).
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// `A_n ∔ ... ∔ A_i`.
    pub fn tail_sum(&self, i: usize, ambient: usize) -> Subspace<T> {
        self.layers[i..]
            .iter()
            .fold(Subspace::zero(ambient), |acc, a| acc.sum(a))
    }

    /// Re-checks every defining property; returns the first violation.
    pub fn verify(&self, l: &LieAlgebra<T>) -> std::result::Result<(), String> {
        let n = l.dim();
        let derived = l.derived_series();
        let terms = &derived.terms;
        if !derived.reaches_zero() {
            return Err("algebra is not solvable".into());
        }
        let length = terms.len() - 1;
        if self.layers.len() != length {
            return Err(format!(
                "tower has {} layers but derived length is {length}",
                self.layers.len()
            ));
        }
        let mut total = 0;
        for (i, a) in self.layers.iter().enumerate() {
            if a.ambient() != n {
                return Err(format!("layer {i} has the wrong ambient dimension"));
            }
            if !l.is_subalgebra(a) || !l.is_abelian_subspace(a) {
                return Err(format!("layer {i} is not an abelian subalgebra"));
            }
            total += a.dim();
        }
        if total != n || !self.tail_sum(0, n).is_full() {
            return Err("layers do not form a direct sum equal to L".into());
        }
        for i in 0..length {
            let tail = self.tail_sum(i, n);
            let dims: usize = self.layers[i..].iter().map(|a| a.dim()).sum();
            if tail.dim() != dims || tail != terms[i] {
                return Err(format!("L^({i}) differs from A_n ∔ ... ∔ A_{i}"));
            }
        }
        Ok(())
    }
}
