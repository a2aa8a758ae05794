//! Cartan subalgebras, Fitting decompositions, nilradicals, socles, complements
//! and Frattini ideals.

use crate::enumerate::{enumerate_fp, within_budget, EnumKind, Vectors, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::LieAlgebra;
use crate::linalg::{combine, kernel_of_rows, solve_linear, unit_vector, Matrix, Subspace};
use crate::module::{Module, ModuleConfig};
use crate::rng::XorShift64;
use crate::verdict::{Evidence, EvidenceKind, Verdict};

/// Limits shared by the structural algorithms and the class deciders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest number of candidate subspaces an enumeration may visit.
    pub budget: u128,
    /// Number of pseudo-random probes tried after the fixed ones.
    pub probe_bound: usize,
    pub seed: u64,
    /// Rounds of the named-ideal closure used when ideals cannot be enumerated.
    pub closure_depth: usize,
    /// Over finite fields, scan every element when there are at most this many.
    pub element_scan_limit: u128,
    pub module: ModuleConfig,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            budget: DEFAULT_BUDGET,
            probe_bound: 64,
            seed: 0x5EED,
            closure_depth: 3,
            element_scan_limit: 1 << 16,
            module: ModuleConfig::default(),
        }
    }
}

/// Generalized null space of `ad z`.
pub fn engel_subalgebra<T: Field>(l: &LieAlgebra<T>, z: &[T]) -> Subspace<T> {
    let n = l.dim();
    let m = l.adjoint(z).pow(n);
    Subspace::span(n, kernel_of_rows(n, m.row_vecs()))
}

/// Nilpotent and self-normalizing.
pub fn is_cartan<T: Field>(l: &LieAlgebra<T>, s: &Subspace<T>) -> bool {
    l.is_subalgebra(s) && l.is_nilpotent_subalgebra(s) && &l.normalizer(s) == s
}

/// Deterministic probe elements of a subspace: basis vectors, sums of pairs,
/// then seeded small combinations.
fn probes<T: Field>(s: &Subspace<T>, cfg: &Config) -> Vec<Vec<T>> {
    let b = s.basis();
    let n = s.ambient();
    let mut out: Vec<Vec<T>> = b.to_vec();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            out.push(combine(n, &[T::one(), T::one()], &[b[i].clone(), b[j].clone()]));
        }
    }
    let mut rng = XorShift64::new(cfg.seed);
    for _ in 0..cfg.probe_bound {
        let coeffs: Vec<T> = (0..b.len()).map(|_| rng.scalar(3)).collect();
        out.push(combine(n, &coeffs, b));
    }
    out.retain(|v| v.iter().any(|x| !x.is_zero()));
    out
}

/// An Engel subalgebra strictly inside `e` (which is `L` or `L_0(ad x)`).
fn smaller_engel<T: Field>(
    l: &LieAlgebra<T>,
    e: &Subspace<T>,
    x: Option<&Vec<T>>,
    cfg: &Config,
) -> Result<(Vec<T>, Subspace<T>)> {
    let n = l.dim();
    let shrinks = |z: &[T]| {
        let f = engel_subalgebra(l, z);
        (f.dim() < e.dim() && e.contains(&f)).then_some(f)
    };
    let cs: Vec<T> = match T::order() {
        Some(p) => (1..p.min(n as u64 + 2)).map(|c| T::from_i64(c as i64)).collect(),
        None => (1..=n as i64 + 1).map(T::from_i64).collect(),
    };
    let candidates = probes(e, cfg);
    for y in &candidates {
        if let Some(f) = shrinks(y) {
            return Ok((y.clone(), f));
        }
        if let Some(x) = x {
            for c in &cs {
                let mut z = x.clone();
                for (zi, (yi, xi)) in z.iter_mut().zip(y.iter().zip(x)) {
                    *zi = xi.clone() + c.clone() * (yi.clone() - xi.clone());
                }
                if let Some(f) = shrinks(&z) {
                    return Ok((z, f));
                }
            }
        }
    }
    if let Some(q) = T::order() {
        let count = (q as u128).checked_pow(e.dim() as u32).unwrap_or(u128::MAX);
        if count <= cfg.element_scan_limit {
            for c in Vectors::<T>::new(e.dim())? {
                let z = combine(n, &c, e.basis());
                if let Some(f) = shrinks(&z) {
                    return Ok((z, f));
                }
            }
        }
    }
    Err(Error::ProbeExhausted {
        probes: candidates.len(),
    })
}

/// A Cartan subalgebra, found by descending through Engel subalgebras until
/// one is nilpotent.
pub fn cartan_subalgebra<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<Subspace<T>> {
    l.require_solvable()?;
    let mut e = l.full();
    let mut x: Option<Vec<T>> = None;
    loop {
        if l.is_nilpotent_subalgebra(&e) {
            if !is_cartan(l, &e) {
                return Err(Error::Postcondition("Cartan candidate is not self-normalizing".into()));
            }
            return Ok(e);
        }
        let (z, f) = smaller_engel(l, &e, x.as_ref(), cfg)?;
        x = Some(z);
        e = f;
    }
}

/// `L = L0 ∔ L1` relative to `ad C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingPair<T> {
    pub c: Subspace<T>,
    /// Common generalized null space of `ad c`, `c ∈ C`.
    pub null: Subspace<T>,
    /// The stable term of `L (ad C)^k`.
    pub one: Subspace<T>,
}

pub fn fitting_decomposition<T: Field>(l: &LieAlgebra<T>, c: &Subspace<T>) -> Result<FittingPair<T>> {
    if !l.is_subalgebra(c) {
        return Err(Error::NotSubalgebra);
    }
    if !l.is_nilpotent_subalgebra(c) {
        return Err(Error::NotNilpotent);
    }
    let n = l.dim();
    let ads: Vec<Matrix<T>> = c.basis().iter().map(|v| l.adjoint(v)).collect();
    let mut null = l.full();
    for a in &ads {
        let k = Subspace::span(n, kernel_of_rows(n, a.pow(n).row_vecs()));
        null = null.intersect(&k);
    }
    let mut one = l.full();
    loop {
        let next = ads
            .iter()
            .fold(Subspace::zero(n), |acc, a| acc.sum(&one.image(a)));
        if next == one {
            break;
        }
        one = next;
    }
    if null.dim() + one.dim() != n || !null.intersect(&one).is_zero() {
        return Err(Error::Postcondition("Fitting components do not form a direct sum".into()));
    }
    Ok(FittingPair {
        c: c.clone(),
        null,
        one,
    })
}

/// The largest nilpotent ideal.
///
/// In characteristic 0 this is `{x : ad x ∈ R}` with `R` the trace radical of
/// the associative algebra generated by `ad L`. Over a prime field it is the
/// intersection of the centralizers of the factors of a chief series.
pub fn nilradical<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<Subspace<T>> {
    l.require_solvable()?;
    let n = l.dim();
    let module = Module::adjoint(l);
    let nil = if T::characteristic() == 0 {
        let flat: Vec<Vec<T>> = module
            .trace_radical()
            .iter()
            .map(|m| m.as_slice().to_vec())
            .collect();
        let r = Subspace::span(n * n, flat);
        let cols: Vec<Vec<T>> = module.gens().iter().map(|a| r.reduce(a.as_slice())).collect();
        let rows = Matrix::from_columns(n * n, &cols).row_vecs();
        Subspace::span(n, kernel_of_rows(n, rows))
    } else {
        let (chain, _) = module.composition_series(&cfg.module)?;
        chain
            .windows(2)
            .fold(l.full(), |acc, w| acc.intersect(&l.centralizer(&w[1], &w[0])))
    };
    if !l.is_ideal(&nil) || !l.is_nilpotent_subalgebra(&nil) {
        return Err(Error::Postcondition("nilradical is not a nilpotent ideal".into()));
    }
    Ok(nil)
}

/// `N_K` with `N_K / K = N(L / K)`.
pub fn nilradical_mod<T: Field>(l: &LieAlgebra<T>, k: &Subspace<T>, cfg: &Config) -> Result<Subspace<T>> {
    let q = l.quotient(k)?;
    let n = nilradical(&q.algebra, cfg)?;
    Ok(q.preimage(&n))
}

/// Whether every chief factor is one-dimensional.
pub fn is_supersolvable<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<bool> {
    l.require_solvable()?;
    let (_, factors) = Module::adjoint(l).composition_series(&cfg.module)?;
    Ok(factors.iter().all(|f| f.dim() == 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleReport<T> {
    /// Sum of the minimal abelian ideals.
    pub socle: Subspace<T>,
    /// Minimal ideals whose direct sum is the socle.
    pub minimal_ideals: Vec<Subspace<T>>,
    pub monolithic: bool,
    pub monolith: Option<Subspace<T>>,
    /// False when some listed ideal could not be certified minimal.
    pub exact: bool,
}

/// The abelian socle: for solvable `L`, the socle of the adjoint module.
pub fn abelian_socle<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<SocleReport<T>> {
    l.require_solvable()?;
    let d = Module::adjoint(l).socle_decomposition(&cfg.module)?;
    for m in &d.summands {
        if !l.is_ideal(m) || !l.is_abelian_subspace(m) {
            return Err(Error::Postcondition("socle summand is not an abelian ideal".into()));
        }
    }
    let monolithic = d.summands.len() == 1;
    Ok(SocleReport {
        monolith: monolithic.then(|| d.summands[0].clone()),
        socle: d.socle,
        minimal_ideals: d.summands,
        monolithic,
        exact: d.exact,
    })
}

/// The linear system for complements of an abelian ideal `K`.
///
/// With `s` the coordinate section of `L/K` and `τ : L/K -> K` unknown,
/// `{s u + τ u}` is a subalgebra iff for all basis pairs
/// `g(u,v) + [s u, τ v] - [s v, τ u] - τ([u,v]) = 0`, where
/// `g(u,v) = [s u, s v] - s[u,v]`.
struct CocycleSystem<T: Field> {
    n: usize,
    sections: Vec<Vec<T>>,
    kbasis: Vec<Vec<T>>,
    a: Matrix<T>,
    rhs: Vec<T>,
}

impl<T: Field> CocycleSystem<T> {
    fn new(l: &LieAlgebra<T>, k: &Subspace<T>) -> Result<Self> {
        let q = l.quotient(k)?;
        let n = l.dim();
        let m = q.algebra.dim();
        let kd = k.dim();
        let kbasis = k.basis().to_vec();
        let sections: Vec<Vec<T>> = q.coset_coords.iter().map(|&c| unit_vector(n, c)).collect();
        let mut rows: Vec<Vec<T>> = Vec::new();
        let mut rhs: Vec<T> = Vec::new();
        let cols = m * kd;
        for a in 0..m {
            for b in a + 1..m {
                let uv = q.algebra.structure(a, b);
                let mut g = l.bracket(&sections[a], &sections[b]);
                let s_uv = q.section(uv);
                for (gi, si) in g.iter_mut().zip(&s_uv) {
                    *gi = gi.clone() - si.clone();
                }
                let mut block = vec![vec![T::zero(); cols]; n];
                for t in 0..kd {
                    let sa_k = l.bracket(&sections[a], &kbasis[t]);
                    let sb_k = l.bracket(&sections[b], &kbasis[t]);
                    for r in 0..n {
                        block[r][b * kd + t] = block[r][b * kd + t].clone() + sa_k[r].clone();
                        block[r][a * kd + t] = block[r][a * kd + t].clone() - sb_k[r].clone();
                        for (c, coef) in uv.iter().enumerate() {
                            if !coef.is_zero() {
                                block[r][c * kd + t] =
                                    block[r][c * kd + t].clone() - coef.clone() * kbasis[t][r].clone();
                            }
                        }
                    }
                }
                for (r, row) in block.into_iter().enumerate() {
                    rows.push(row);
                    rhs.push(-g[r].clone());
                }
            }
        }
        Ok(CocycleSystem {
            n,
            sections,
            kbasis,
            a: Matrix::from_rows(cols, rows)?,
            rhs,
        })
    }

    fn unknowns(&self) -> usize {
        self.sections.len() * self.kbasis.len()
    }

    fn particular(&self) -> Result<Option<Vec<T>>> {
        if self.a.rows() == 0 {
            return Ok(Some(vec![T::zero(); self.unknowns()]));
        }
        let b = Matrix::from_rows(1, self.rhs.iter().map(|x| vec![x.clone()]).collect())?;
        Ok(solve_linear(&self.a, &b)?.map(|x| x.column(0)))
    }

    fn homogeneous(&self) -> Vec<Vec<T>> {
        kernel_of_rows(self.unknowns(), self.a.row_vecs())
    }

    fn complement(&self, y: &[T]) -> Subspace<T> {
        let kd = self.kbasis.len();
        Subspace::span(
            self.n,
            self.sections.iter().enumerate().map(|(a, s)| {
                let coeffs = &y[a * kd..(a + 1) * kd];
                let mut v = combine(self.n, coeffs, &self.kbasis);
                for (vi, si) in v.iter_mut().zip(s) {
                    *vi = vi.clone() + si.clone();
                }
                v
            }),
        )
    }
}

fn is_complement<T: Field>(l: &LieAlgebra<T>, k: &Subspace<T>, b: &Subspace<T>) -> bool {
    l.is_subalgebra(b) && b.intersect(k).is_zero() && b.dim() + k.dim() == l.dim()
}

/// A subalgebra `B` with `L = K ∔ B` for the abelian ideal `K`, or `None`.
pub fn splits_over_abelian_ideal<T: Field>(l: &LieAlgebra<T>, k: &Subspace<T>) -> Result<Option<Subspace<T>>> {
    if k.ambient() != l.dim() {
        return Err(Error::AmbientMismatch {
            left: l.dim(),
            right: k.ambient(),
        });
    }
    if !l.is_ideal(k) {
        return Err(Error::NotIdeal);
    }
    if !l.is_abelian_subspace(k) {
        return Err(Error::NotAbelian);
    }
    let sys = CocycleSystem::new(l, k)?;
    match sys.particular()? {
        None => Ok(None),
        Some(y) => {
            let b = sys.complement(&y);
            if !is_complement(l, k, &b) {
                return Err(Error::Postcondition("cocycle solution is not a complement".into()));
            }
            Ok(Some(b))
        }
    }
}

/// Result of looking for a complement of an arbitrary ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitOutcome<T> {
    Split(Subspace<T>),
    NoSplit,
    Unknown,
}

/// A complement of the ideal `K`, reducing through `K' = [K, K]`: a complement
/// of `K` exists iff some complement `M/K'` of `K/K'` in `L/K'` splits over `K'`.
/// Over finite fields every `M` is tried within the budget; over the rationals
/// only a few are, and failure is `Unknown`.
pub fn find_complement<T: Field>(l: &LieAlgebra<T>, k: &Subspace<T>, cfg: &Config) -> Result<SplitOutcome<T>> {
    if !l.is_ideal(k) {
        return Err(Error::NotIdeal);
    }
    if k.is_zero() {
        return Ok(SplitOutcome::Split(l.full()));
    }
    if k.is_full() {
        return Ok(SplitOutcome::Split(l.zero_space()));
    }
    if l.is_abelian_subspace(k) {
        return Ok(match splits_over_abelian_ideal(l, k)? {
            Some(b) => SplitOutcome::Split(b),
            None => SplitOutcome::NoSplit,
        });
    }
    let kk = l.product_space(k, k);
    let q = l.quotient(&kk)?;
    let kq = q.project_space(k);
    let sys = CocycleSystem::new(&q.algebra, &kq)?;
    let Some(y0) = sys.particular()? else {
        return Ok(SplitOutcome::NoSplit);
    };
    let hom = sys.homogeneous();
    let total = T::order().and_then(|p| (p as u128).checked_pow(hom.len() as u32));
    let exhaustive = matches!(total, Some(c) if c <= cfg.budget);
    let mut candidates: Vec<Vec<T>> = Vec::new();
    if exhaustive {
        for c in Vectors::<T>::new(hom.len())? {
            let mut y = combine(y0.len(), &c, &hom);
            for (yi, y0i) in y.iter_mut().zip(&y0) {
                *yi = yi.clone() + y0i.clone();
            }
            candidates.push(y);
        }
    } else {
        candidates.push(y0.clone());
        for h in &hom {
            candidates.push(y0.iter().zip(h).map(|(a, b)| a.clone() + b.clone()).collect());
        }
    }
    let mut unknown = !exhaustive;
    for y in candidates {
        let m = q.preimage(&sys.complement(&y));
        let r = l.restrict(&m)?;
        let kk_in_m = r.pull_space(&kk);
        match find_complement(&r.algebra, &kk_in_m, cfg)? {
            SplitOutcome::Split(b) => {
                let b = r.embed_space(&b);
                if !is_complement(l, k, &b) {
                    return Err(Error::Postcondition("lifted complement is not a complement".into()));
                }
                return Ok(SplitOutcome::Split(b));
            }
            SplitOutcome::Unknown => unknown = true,
            SplitOutcome::NoSplit => {}
        }
    }
    Ok(if unknown {
        SplitOutcome::Unknown
    } else {
        SplitOutcome::NoSplit
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrattiniReport<T> {
    pub maximal: Vec<Subspace<T>>,
    pub frattini: Subspace<T>,
    /// Subspaces examined.
    pub candidates: u128,
}

/// Maximal subalgebras and their intersection, by enumerating every subalgebra.
pub fn maximal_subalgebras_and_frattini<T: Field>(l: &LieAlgebra<T>, budget: u128) -> Result<FrattiniReport<T>> {
    if T::characteristic() == 0 {
        return Err(Error::RequiresPrimeField);
    }
    let candidates = crate::enumerate::check_budget::<T>(l.dim(), budget)?;
    let mut proper: Vec<Subspace<T>> = enumerate_fp(l, EnumKind::Subalgebras, budget)?
        .into_iter()
        .filter(|s| !s.is_full())
        .collect();
    proper.sort_by_key(|s| std::cmp::Reverse(s.dim()));
    let mut maximal: Vec<Subspace<T>> = Vec::new();
    for s in proper {
        if !maximal.iter().any(|m| m.contains(&s)) {
            maximal.push(s);
        }
    }
    let frattini = maximal.iter().fold(l.full(), |acc, m| acc.intersect(m));
    if l.is_solvable() && !l.is_ideal(&frattini) {
        return Err(Error::Postcondition("Frattini subalgebra of a solvable algebra is not an ideal".into()));
    }
    Ok(FrattiniReport {
        maximal,
        frattini,
        candidates,
    })
}

/// Whether `φ(L) = 0`.
///
/// Splitting over the abelian socle proves it; a non-abelian nilradical or a
/// nilradical different from the abelian socle refutes it. Over a prime
/// field within budget the Frattini ideal is also enumerated, which decides
/// every case and must agree with any certificate.
pub fn is_phi_free<T: Field>(l: &LieAlgebra<T>, cfg: &Config) -> Result<Verdict<T>> {
    l.require_solvable()?;
    let nil = nilradical(l, cfg)?;
    let theory = if !l.is_abelian_subspace(&nil) {
        Verdict::refuted(
            Evidence::new(EvidenceKind::NonAbelianNilradical).with("nilradical", nil.clone()),
            "nilradical",
        )
    } else {
        let soc = abelian_socle(l, cfg)?;
        if soc.socle != nil {
            Verdict::refuted(
                Evidence::new(EvidenceKind::NilradicalNotSocle)
                    .with("nilradical", nil.clone())
                    .with("abelian_socle", soc.socle),
                "nilradical vs abelian socle",
            )
        } else {
            match splits_over_abelian_ideal(l, &soc.socle)? {
                Some(b) => Verdict::truth(
                    Evidence::new(EvidenceKind::Complement)
                        .with("ideal", soc.socle)
                        .with("complement", b),
                    "split over abelian socle",
                ),
                None => Verdict::unknown("no split over abelian socle"),
            }
        }
    };
    if T::characteristic() == 0 || !within_budget::<T>(l.dim(), cfg.budget) {
        return Ok(theory);
    }
    let fr = maximal_subalgebras_and_frattini(l, cfg.budget)?;
    let free = fr.frattini.is_zero();
    if let Some(b) = theory.status.known() {
        if b != free {
            return Err(Error::Postcondition(format!(
                "phi-free certificate ({}) disagrees with enumerated Frattini ideal of dimension {}",
                theory.summary.method,
                fr.frattini.dim()
            )));
        }
    }
    let verdict = if free {
        match theory.evidence {
            Some(e) if theory.status.known() == Some(true) => Verdict::truth(e, "split over abelian socle; enumeration"),
            _ => Verdict::truth(Evidence::new(EvidenceKind::Exhaustive), "enumeration"),
        }
    } else {
        Verdict::refuted(
            Evidence::new(EvidenceKind::FrattiniNonzero).with("frattini", fr.frattini),
            "enumeration",
        )
    };
    Ok(verdict.counted(fr.candidates, cfg.budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{complements_by_enumeration, nilradical_by_enumeration};
    use crate::field::{Rational, F2, F3, F5};
    use crate::verdict::Status;

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
    fn cartan_of_examples() {
        let cfg = Config::default();
        let l = ex43::<Rational>();
        assert!(is_cartan(&l, &Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]])));
        let c = cartan_subalgebra(&l, &cfg).unwrap();
        assert!(is_cartan(&l, &c));
        assert_eq!(c.dim(), 2);
        let t = two_dim::<F2>();
        assert_eq!(cartan_subalgebra(&t, &cfg).unwrap().dim(), 1);
        let h = LieAlgebra::<F3>::from_int_brackets(3, &[(0, 1, &[(2, 1)])]).unwrap();
        assert!(cartan_subalgebra(&h, &cfg).unwrap().is_full());
    }

    #[test]
    fn fitting_of_ex47() {
        let l = ex47::<Rational>();
        let c = Subspace::from_i64(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let f = fitting_decomposition(&l, &c).unwrap();
        assert_eq!(f.one, Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert_eq!(f.null, c);
        let t = two_dim::<Rational>();
        let f = fitting_decomposition(&t, &Subspace::from_i64(2, &[&[1, 0]])).unwrap();
        assert_eq!(f.one, Subspace::from_i64(2, &[&[0, 1]]));
    }

    #[test]
    fn nilradicals_agree_with_enumeration() {
        let cfg = Config::default();
        let n = Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(nilradical(&ex47::<Rational>(), &cfg).unwrap(), n);
        let l5 = ex47::<F5>();
        assert_eq!(
            nilradical(&l5, &cfg).unwrap(),
            Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])
        );
        assert_eq!(nilradical_by_enumeration(&l5, DEFAULT_BUDGET).unwrap(), nilradical(&l5, &cfg).unwrap());
        let l3 = ex43::<F3>();
        assert_eq!(nilradical_by_enumeration(&l3, DEFAULT_BUDGET).unwrap(), nilradical(&l3, &cfg).unwrap());
    }

    #[test]
    fn socle_of_ex47() {
        let cfg = Config::default();
        let r = abelian_socle(&ex47::<F5>(), &cfg).unwrap();
        assert_eq!(r.socle, Subspace::from_i64(4, &[&[0, 1, 0, 0]]));
        assert!(r.monolithic);
        let q = abelian_socle(&ex47::<Rational>(), &cfg).unwrap();
        assert_eq!(q.socle, Subspace::from_i64(4, &[&[0, 1, 0, 0]]));
        assert!(q.exact);
        let a = abelian_socle(&LieAlgebra::<F2>::abelian(3), &cfg).unwrap();
        assert!(a.socle.is_full());
        assert_eq!(a.minimal_ideals.len(), 3);
    }

    #[test]
    fn splitting_examples() {
        let l = ex43::<Rational>();
        let z = Subspace::from_i64(4, &[&[0, 0, 0, 1]]);
        assert_eq!(splits_over_abelian_ideal(&l, &z).unwrap(), None);
        let l2 = ex47::<Rational>();
        let b = splits_over_abelian_ideal(&l2, &Subspace::from_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]))
            .unwrap()
            .unwrap();
        assert!(l2.is_abelian_subspace(&b));
        assert_eq!(b.dim(), 2);
        let cfg = Config::default();
        let sq = l.product_space(&l.full(), &l.full());
        assert!(matches!(find_complement(&l, &sq, &cfg).unwrap(), SplitOutcome::Split(_)));
        assert_eq!(
            splits_over_abelian_ideal(&l, &l.full()).unwrap_err(),
            Error::NotAbelian
        );
    }

    #[test]
    fn splitting_matches_brute_force_over_f2() {
        let cfg = Config::default();
        let l = ex43::<F2>();
        for k in enumerate_fp(&l, EnumKind::Ideals, DEFAULT_BUDGET).unwrap() {
            let brute = !complements_by_enumeration(&l, &k, DEFAULT_BUDGET).unwrap().is_empty();
            let got = match find_complement(&l, &k, &cfg).unwrap() {
                SplitOutcome::Split(_) => true,
                SplitOutcome::NoSplit => false,
                SplitOutcome::Unknown => panic!("finite field search is exhaustive"),
            };
            assert_eq!(got, brute, "ideal {k:?}");
        }
    }

    #[test]
    fn frattini_examples() {
        let r = maximal_subalgebras_and_frattini(&ex47::<F5>(), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.frattini, Subspace::from_i64(4, &[&[0, 1, 0, 0]]));
        let a = maximal_subalgebras_and_frattini(&LieAlgebra::<F2>::abelian(2), DEFAULT_BUDGET).unwrap();
        assert!(a.frattini.is_zero());
        assert_eq!(a.maximal.len(), 3);
        let h = LieAlgebra::<F2>::from_int_brackets(3, &[(0, 1, &[(2, 1)])]).unwrap();
        let r = maximal_subalgebras_and_frattini(&h, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.frattini, Subspace::from_i64(3, &[&[0, 0, 1]]));
    }

    #[test]
    fn phi_free_verdicts() {
        let cfg = Config::default();
        assert_eq!(is_phi_free(&ex47::<Rational>(), &cfg).unwrap().status, Status::CertifiedFalse);
        assert_eq!(is_phi_free(&ex47::<F3>(), &cfg).unwrap().status, Status::CertifiedFalse);
        assert_eq!(is_phi_free(&two_dim::<Rational>(), &cfg).unwrap().status, Status::CertifiedTrue);
        assert_eq!(is_phi_free(&LieAlgebra::<F3>::abelian(2), &cfg).unwrap().status, Status::CertifiedTrue);
    }

    #[test]
    fn supersolvability() {
        let cfg = Config::default();
        assert!(is_supersolvable(&ex47::<F5>(), &cfg).unwrap());
        assert!(is_supersolvable(&ex43::<F3>(), &cfg).unwrap());
        let rot = LieAlgebra::<F3>::from_int_brackets(3, &[(0, 1, &[(2, 1)]), (0, 2, &[(1, -1)])]).unwrap();
        assert!(!is_supersolvable(&rot, &cfg).unwrap());
    }
}
