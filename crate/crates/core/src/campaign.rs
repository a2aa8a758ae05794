//! Seeded property campaigns: each runs one family of checks over a corpus
//! and collects every discrepancy as a replayable finding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::catalog::{construction_pair, random_solvable, GeneratorProfile};
use crate::classes::abelian_tower;
use crate::enumerate::{complements_by_enumeration, enumerate_fp, nilradical_by_enumeration, EnumKind};
use crate::error::Result;
use crate::field::{to_rational, Field, Rational};
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::{Matrix, Subspace};
use crate::module::Module;
use crate::structure::{nilradical, splits_over_abelian_ideal, Config};
use crate::theorems::{check_theorem, construct_qa_extension, CheckStatus, ReportStatus, TheoremId};

/// One discrepancy, with enough context to replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub instance: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CampaignResult {
    pub instances: usize,
    /// Instances on which the property was non-vacuous.
    pub positives: usize,
    pub findings: Vec<Finding>,
    /// Instances excluded with a reason, e.g. inadmissible primes.
    pub skipped: Vec<Finding>,
}

impl CampaignResult {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn merge(&mut self, other: CampaignResult) {
        self.instances += other.instances;
        self.positives += other.positives;
        self.findings.extend(other.findings);
        self.skipped.extend(other.skipped);
    }

    fn find(&mut self, instance: &str, detail: impl Into<String>) {
        self.findings.push(Finding {
            instance: instance.to_string(),
            detail: detail.into(),
        });
    }
}

/// A name for a generated instance from which it can be rebuilt.
pub fn profile_label(p: &GeneratorProfile) -> String {
    format!(
        "{}:{}:dim<={}:seed={}:scramble={}",
        p.field, p.recipe, p.max_dim, p.seed, p.scramble
    )
}

pub fn generate<T: Field>(profiles: &[GeneratorProfile]) -> Result<Vec<(String, LieAlgebra<T>)>> {
    profiles
        .iter()
        .map(|p| Ok((profile_label(p), random_solvable::<T>(p)?)))
        .collect()
}

/// Clauses (ii), (iv) and (v) of the S_∞ characterization agree, and the
/// abelian tower exists and re-verifies on positive instances.
pub fn s_infinity_equivalence<T: Field>(corpus: &[(String, LieAlgebra<T>)]) -> Result<CampaignResult> {
    let mut out = CampaignResult::default();
    for (name, l) in corpus {
        out.instances += 1;
        let d = l.derived_series();
        let ii = (1..d.terms.len()).all(|i| l.product_space(d.term(i), d.term(i - 1)) == *d.term(i));
        let ln = l.lower_nilpotent_series()?;
        let iv = ln.terms == d.terms;
        let v = ln.terms.windows(2).all(|w| w[1].contains(&l.product_space(&w[0], &w[0])));
        if ii != iv || iv != v {
            out.find(name, format!("clauses disagree: (ii)={ii} (iv)={iv} (v)={v}"));
            continue;
        }
        if ii {
            out.positives += 1;
            match abelian_tower(l) {
                Ok(t) => {
                    if let Err(e) = t.verify(l) {
                        out.find(name, format!("tower fails verification: {e}"));
                    }
                }
                Err(e) => out.find(name, format!("no tower on a positive instance: {e}")),
            }
        }
    }
    Ok(out)
}

/// Runs the machine check of `ids` on every instance; failed checks are findings.
pub fn theorem_checks<T: Field>(
    corpus: &[(String, LieAlgebra<T>)],
    ids: &[TheoremId],
    cfg: &Config,
) -> Result<CampaignResult> {
    let mut out = CampaignResult::default();
    for (name, l) in corpus {
        out.instances += 1;
        let mut any = false;
        for &id in ids {
            let r = check_theorem(l, id, cfg)?;
            if r.status != ReportStatus::Vacuous {
                any = true;
            }
            if r.status == ReportStatus::Failed {
                let failed: Vec<String> = r
                    .checks
                    .iter()
                    .filter(|c| c.status == CheckStatus::Failed)
                    .map(|c| c.name.clone())
                    .collect();
                out.find(name, format!("{id}: {}", failed.join("; ")));
            }
        }
        if any {
            out.positives += 1;
        }
    }
    Ok(out)
}

/// Compares the cocycle splitting test with exhaustive complement search on
/// every abelian ideal.
pub fn splitting_oracle<T: Field>(corpus: &[(String, LieAlgebra<T>)], cfg: &Config) -> Result<CampaignResult> {
    let mut out = CampaignResult::default();
    for (name, l) in corpus {
        out.instances += 1;
        for k in enumerate_fp(l, EnumKind::Ideals, cfg.budget)? {
            if !l.is_abelian_subspace(&k) {
                continue;
            }
            out.positives += 1;
            let fast = splits_over_abelian_ideal(l, &k)?;
            let brute = complements_by_enumeration(l, &k, cfg.budget)?;
            match fast {
                Some(b) => {
                    if brute.is_empty() {
                        out.find(name, format!("cocycle complement but no complement exists for ideal of dim {}", k.dim()));
                    } else if !brute.contains(&b) {
                        out.find(name, "returned complement is not a complement");
                    }
                }
                None if !brute.is_empty() => {
                    out.find(name, format!("missed complement for ideal of dim {}", k.dim()));
                }
                None => {}
            }
        }
    }
    Ok(out)
}

/// Builds `A ⋊ B` for seeded pairs and requires every construction check to pass.
pub fn constructions<T: Field>(seeds: &[u64], cfg: &Config) -> Result<CampaignResult> {
    let mut out = CampaignResult::default();
    for &seed in seeds {
        let name = format!("{}:pair:seed={seed}", T::spec());
        out.instances += 1;
        let (b, rho) = construction_pair::<T>(seed)?;
        if !rho.is_faithful(b.dim()) || !Module::new(rho.module_dim, rho.matrices.clone())?.is_irreducible(&cfg.module)? {
            out.find(&name, "pair is not faithful irreducible");
            continue;
        }
        let (_, report) = construct_qa_extension(&b, &rho, cfg)?;
        out.positives += 1;
        if report.status != ReportStatus::Passed {
            let bad: Vec<String> = report
                .checks
                .iter()
                .filter(|c| c.status != CheckStatus::Passed)
                .map(|c| format!("{} {}", c.name, c.status.as_str()))
                .collect();
            out.find(&name, format!("{}: {}", report.status.as_str(), bad.join("; ")));
        }
    }
    Ok(out)
}

/// Rescales the basis so that every structure constant is an integer.
pub fn integral_form(l: &LieAlgebra<Rational>) -> Result<LieAlgebra<Rational>> {
    let mut den = BigInt::one();
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            for x in l.structure(i, j) {
                den = den.lcm(to_rational(x).denom());
            }
        }
    }
    let s = Rational::from_bigint(&den);
    l.change_basis(&Matrix::identity(l.dim()).scale(&s))
}

/// Reduction of a rational algebra modulo the characteristic of `U`.
pub fn reduce<U: Field>(l: &LieAlgebra<Rational>) -> Option<LieAlgebra<U>> {
    l.map_field(|x| U::from_rational(&to_rational(x)))
}

fn reduce_space<U: Field>(s: &Subspace<Rational>) -> Option<Subspace<U>> {
    let rows = s
        .basis()
        .iter()
        .map(|v| v.iter().map(|x| U::from_rational(&to_rational(x))).collect::<Option<Vec<U>>>())
        .collect::<Option<Vec<_>>>()?;
    Some(Subspace::span(s.ambient(), rows))
}

/// Checks the characteristic-zero nilradical of `l` against brute force modulo `U`.
///
/// The prime is inadmissible when it divides a denominator, when the
/// reduction changes the dimensions of the derived or lower central series,
/// of the associative algebra generated by `ad L` or the rank of its trace
/// form, or when the reduced nilradical loses dimension. Otherwise the
/// reduced trace radical is the Jacobson radical of the reduced algebra, and
/// the two nilradicals must agree.
pub fn nilradical_mod_p<U: Field>(
    name: &str,
    l: &LieAlgebra<Rational>,
    n: &Subspace<Rational>,
    cfg: &Config,
    out: &mut CampaignResult,
) -> Result<()> {
    let p = U::characteristic();
    let skip = |out: &mut CampaignResult, why: &str| {
        out.skipped.push(Finding {
            instance: name.to_string(),
            detail: format!("p={p} inadmissible: {why}"),
        })
    };
    let (Some(lp), Some(np)) = (reduce::<U>(l), reduce_space::<U>(n)) else {
        skip(out, "divides a denominator");
        return Ok(());
    };
    if lp.derived_series().dims() != l.derived_series().dims()
        || lp.lower_central_series().dims() != l.lower_central_series().dims()
    {
        skip(out, "series dimensions change");
        return Ok(());
    }
    let (aq, ap) = (Module::adjoint(l), Module::adjoint(&lp));
    let (eq, ep) = (aq.enveloping_algebra().len(), ap.enveloping_algebra().len());
    if eq != ep || eq - aq.trace_radical().len() != ep - ap.trace_radical().len() {
        skip(out, "enveloping algebra or its trace form degenerates");
        return Ok(());
    }
    if np.dim() != n.dim() {
        skip(out, "nilradical basis degenerates");
        return Ok(());
    }
    let brute = nilradical_by_enumeration(&lp, cfg.budget)?;
    if brute != np {
        out.find(name, format!("p={p}: reduced nilradical has dim {}, brute force {}", np.dim(), brute.dim()));
    }
    Ok(())
}

/// The characteristic-zero nilradical is a nilpotent ideal containing `L^2`
/// and agrees with brute force at the primes 5, 7 and 11.
pub fn nilradical_cross_check(corpus: &[(String, LieAlgebra<Rational>)], cfg: &Config) -> Result<CampaignResult> {
    use crate::field::{F11, F5, F7};
    let mut out = CampaignResult::default();
    for (name, l0) in corpus {
        out.instances += 1;
        let l = integral_form(l0)?;
        let n = nilradical(&l, cfg)?;
        let sq = l.product_space(&l.full(), &l.full());
        if !l.is_ideal(&n) || !l.is_nilpotent_subalgebra(&n) || !n.contains(&sq) {
            out.find(name, "nilradical postcondition fails");
            continue;
        }
        let before = out.skipped.len();
        nilradical_mod_p::<F5>(name, &l, &n, cfg, &mut out)?;
        nilradical_mod_p::<F7>(name, &l, &n, cfg, &mut out)?;
        nilradical_mod_p::<F11>(name, &l, &n, cfg, &mut out)?;
        if out.skipped.len() < before + 3 {
            out.positives += 1;
        }
    }
    Ok(out)
}

/// Pairs `(B, rho)` as used by [`constructions`], for reports.
pub fn construction_pairs<T: Field>(seeds: &[u64]) -> Result<Vec<(LieAlgebra<T>, Representation<T>)>> {
    seeds.iter().map(|&s| construction_pair::<T>(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{all_solvable_tensors, corpus_profiles};
    use crate::field::{FieldSpec, F2, F3};

    #[test]
    fn small_campaigns_pass() {
        let cfg = Config::default();
        let q = generate::<Rational>(&corpus_profiles(FieldSpec::Rationals, 5, 12, 1)).unwrap();
        assert!(s_infinity_equivalence(&q).unwrap().passed());
        let f2 = all_solvable_tensors::<F2>(3, 1 << 12).unwrap();
        let f2: Vec<(String, LieAlgebra<F2>)> = f2.into_iter().enumerate().map(|(i, l)| (i.to_string(), l)).collect();
        let r = splitting_oracle(&f2, &cfg).unwrap();
        assert!(r.passed(), "{:?}", r.findings);
        let r = constructions::<F3>(&[1, 2, 3], &cfg).unwrap();
        assert!(r.passed(), "{:?}", r.findings);
    }

    #[test]
    fn integral_form_clears_denominators() {
        let l = LieAlgebra::<Rational>::from_brackets(2, &[(0, 1, vec![(1, Rational::parse_literal("1/3").unwrap())])]).unwrap();
        let m = integral_form(&l).unwrap();
        assert_eq!(m.structure(0, 1)[1], Rational::from_i64(1));
    }
}
