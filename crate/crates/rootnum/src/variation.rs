//! Sign variation: which bad place can drive it, the auxiliary prime q₀,
//! and the two sieve streams whose first elements form a certificate
//! (t₊, t₋) checked on the direct path.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intarith::{factorize, is_prime_u64, jacobi_i64, next_prime, unit_legendre, val};
use crate::polyring::{self, IntPoly};
use crate::sieves::{sieve_stream, ArithProgression, SievePrescription, SignConstraint, ValuationCap};
use crate::signformula::{periodicity_data, root_number_formula, PeriodicityData, RootNumberReport};
use crate::surface::{Kodaira, Place, Surface};

pub const DEFAULT_BOUND: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Applicable,
    Inapplicable,
    Isotrivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    MultiplicativePlace,
    NonInsipidAdditive,
    I0sOddDegree,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Assumption {
    Chowla,
    Squarefree,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Applicable => "applicable",
            Status::Inapplicable => "inapplicable",
            Status::Isotrivial => "isotrivial",
        })
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::MultiplicativePlace => "multiplicative-place",
            Branch::NonInsipidAdditive => "non-insipid-additive",
            Branch::I0sOddDegree => "I0*-odd-degree",
            Branch::None => "none",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Applicability {
    pub status: Status,
    pub branch: Branch,
    pub witness_place: Option<Place>,
    pub conditional_on: BTreeSet<Assumption>,
}

pub fn applicability(s: &Surface) -> Applicability {
    let none = |status| Applicability {
        status,
        branch: Branch::None,
        witness_place: None,
        conditional_on: BTreeSet::new(),
    };
    if s.is_isotrivial {
        return none(Status::Isotrivial);
    }
    // finite places are already in canonical order, lowest degree first
    let pick = |pred: &dyn Fn(&Place) -> bool| s.finite_places().find(|p| pred(p)).cloned();
    let (branch, witness) = if let Some(p) = pick(&|p| p.multiplicative) {
        (Branch::MultiplicativePlace, p)
    } else if let Some(p) = pick(&|p| p.kodaira.is_additive() && !p.insipid) {
        (Branch::NonInsipidAdditive, p)
    } else if let Some(p) = pick(&|p| p.kodaira == Kodaira::I0s && p.poly().unwrap().deg() % 2 == 1) {
        (Branch::I0sOddDegree, p)
    } else {
        return none(Status::Inapplicable);
    };
    let mut conditional_on = BTreeSet::new();
    if s.m.deg() > 1 {
        conditional_on.insert(Assumption::Chowla);
    }
    if s.finite_places().any(|p| !p.insipid && p.poly().unwrap().deg() > 3) {
        conditional_on.insert(Assumption::Squarefree);
    }
    Applicability {
        status: Status::Applicable,
        branch,
        witness_place: Some(witness),
        conditional_on,
    }
}

/// First (p₀, n), n = 1, 2, … and then p₀ ascending, with p₀² ∥ Q(n),
/// p₀ ∉ excluded and p₀⁻² P(n) Q(n) ≡ 1 mod p₀.
pub fn manduchi_search(p: &IntPoly, q: &IntPoly, excluded: &BTreeSet<u64>, bound: u64) -> Result<(u64, BigInt)> {
    if q.deg() == 0 {
        return Err(Error::Domain("Q must be nonconstant".into()));
    }
    if polyring::resultant(p, q)?.is_zero() {
        return Err(Error::Domain(format!("Res({p}, {q}) = 0")));
    }
    if polyring::discriminant(q)?.is_zero() {
        return Err(Error::Domain(format!("{q} has a repeated factor")));
    }
    for n in 1..=bound {
        let n = BigInt::from(n);
        let qn = q.eval_int(&n);
        if qn.is_zero() {
            continue;
        }
        for (r, e) in factorize(&qn)?.factors {
            let Some(r64) = r.to_u64() else { continue };
            if e != 2 || excluded.contains(&r64) {
                continue;
            }
            let rest = (&qn / (&r * &r)) * p.eval_int(&n);
            if rest.mod_floor(&r).is_one() {
                return Ok((r64, n));
            }
        }
    }
    Err(Error::Exhausted(format!(
        "no Manduchi pair for P = {p}, Q = {q} with n ≤ {bound}"
    )))
}

/// A simple root of P modulo q exists, so q² ∥ P(n) is reachable.
fn has_simple_root(p: &IntPoly, q: u64) -> bool {
    let d = p.derivative();
    (0..q).any(|r| {
        let r = BigInt::from(r);
        (p.eval_int(&r) % q).is_zero() && !(d.eval_int(&r) % q).is_zero()
    })
}

/// Smallest q₀ ∉ excluded making h_P flip: (−3/q) = −1 for II/IV types,
/// (−1/q) = −1 for III types (with a simple root of P mod q), and for
/// I_m, I_m* the first prime of a direct (q, n) search with q² ∥ P(n) and
/// −c6(n) a square unit mod q. `None` for insipid places.
pub fn select_q0(s: &Surface, place: &Place, excluded: &BTreeSet<u64>) -> Option<u64> {
    q0_witness(s, place, excluded, DEFAULT_BOUND).ok().map(|(q, _)| q)
}

/// q₀ together with a residue n mod q₀³ with ν_q₀(P(n)) = 2 and q₀ prime
/// to every other bad place value at n (and to c6(n) for I_m types).
pub fn q0_witness(s: &Surface, place: &Place, excluded: &BTreeSet<u64>, bound: u64) -> Result<(u64, BigInt)> {
    use Kodaira::*;
    if place.insipid {
        return Err(Error::Domain(format!("{} is insipid", place.label())));
    }
    let poly = place.poly().ok_or_else(|| Error::Domain("place at infinity".into()))?;
    let symbol: Option<i64> = match place.kodaira {
        II | IIs | IV | IVs => Some(-3),
        III | IIIs => Some(-1),
        I(m) | Is(m) if m >= 1 => None,
        k => return Err(Error::Domain(format!("no q₀ for type {k}"))),
    };
    let others: Vec<&IntPoly> = s
        .finite_places()
        .filter_map(|p| p.poly())
        .filter(|p| *p != poly)
        .collect();
    let mut q = 1u64;
    loop {
        q = next_prime(q);
        if q > bound {
            return Err(Error::Exhausted(format!("no q₀ ≤ {bound} for {}", place.label())));
        }
        if excluded.contains(&q) {
            continue;
        }
        if let Some(a) = symbol {
            if jacobi_i64(a, q) != -1 || !has_simple_root(poly, q) {
                continue;
            }
        }
        let q3 = q * q * q;
        let qb = BigInt::from(q);
        for n in 0..q3 {
            let n = BigInt::from(n);
            let v = poly.eval_int(&n);
            if val(&v, q) != Some(2) {
                continue;
            }
            if others.iter().any(|o| (o.eval_int(&n) % q).is_zero()) {
                continue;
            }
            if symbol.is_none() {
                let c6 = s.c6.eval_int(&n);
                if (&c6 % q).is_zero() || unit_legendre(&-c6, &qb) != 1 {
                    continue;
                }
            }
            return Ok((q, n));
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LogEntry {
    pub stage: String,
    pub prescription: SievePrescription,
    #[serde(serialize_with = "ser_display")]
    pub element: BigInt,
    pub scanned: u64,
}

fn ser_display<T: fmt::Display, S: serde::Serializer>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Debug)]
pub struct VariationCertificate {
    pub t_plus: BigInt,
    pub t_minus: BigInt,
    pub report_plus: RootNumberReport,
    pub report_minus: RootNumberReport,
    pub q0: Option<u64>,
    pub branch: Branch,
    pub witness: IntPoly,
    pub n: BigInt,
    pub construction_log: Vec<LogEntry>,
}

fn primes_of(n: &BigInt) -> Result<Vec<u64>> {
    Ok(factorize(n)?
        .primes()
        .map(|p| p.to_u64().expect("small prime"))
        .collect())
}

struct Plan<'a> {
    s: &'a Surface,
    pd: PeriodicityData,
    f: IntPoly,
    g: IntPoly,
    n_primes: Vec<u64>,
}

impl Plan<'_> {
    /// Admissibility: ν_p(P(t)) < β_p for every finite place and p | δ.
    fn place_caps(&self) -> Vec<ValuationCap> {
        let mut caps = Vec::new();
        for pl in self.s.finite_places() {
            for (&p, &b) in &self.pd.beta {
                caps.push(ValuationCap {
                    poly: pl.poly().unwrap().clone(),
                    p,
                    below: b,
                });
            }
        }
        caps
    }

    /// Admissibility plus ν_p(f), ν_p(g) below ν_p(N), so that the class
    /// mod N fixes the N-part.
    fn caps(&self) -> Vec<ValuationCap> {
        let mut caps = self.place_caps();
        for &p in &self.n_primes {
            let below = val(&self.pd.n, p).unwrap();
            for poly in [&self.f, &self.g] {
                if poly.deg() > 0 {
                    caps.push(ValuationCap {
                        poly: poly.clone(),
                        p,
                        below,
                    });
                }
            }
        }
        caps
    }

    fn signs(&self, flip: Option<&IntPoly>) -> Vec<SignConstraint> {
        let mut out: Vec<SignConstraint> = self
            .pd
            .r_factors
            .iter()
            .map(|r| SignConstraint {
                poly: r.clone(),
                sign: 1,
            })
            .collect();
        for c in &self.pd.control {
            let sign = if Some(c) == flip { -1 } else { 1 };
            out.push(SignConstraint { poly: c.clone(), sign });
        }
        out
    }

    /// Stream through the class of `t` mod N with the S-part of f, g
    /// frozen at their values at `t`.
    fn companion(&self, t: &BigInt, signs: Vec<SignConstraint>, lambda: Option<i8>) -> Result<SievePrescription> {
        let (ft, gt) = (self.f.eval_int(t), self.g.eval_int(t));
        Ok(SievePrescription {
            progression: ArithProgression::new(t.clone(), self.pd.n.clone())?,
            primes: self.n_primes.clone(),
            f_exponents: self.n_primes.iter().map(|&p| val(&ft, p).unwrap()).collect(),
            g_exponents: self.n_primes.iter().map(|&p| val(&gt, p).unwrap()).collect(),
            sign_constraints: signs,
            liouville_target: lambda,
            f: self.f.clone(),
            g: self.g.clone(),
            caps: self.place_caps(),
            free_primes: vec![],
        })
    }
}

fn run(stage: &str, pr: SievePrescription, bound: u64, log: &mut Vec<LogEntry>) -> Result<BigInt> {
    let mut st = sieve_stream(&pr, bound)?;
    let t = st.next_checked()?;
    log.push(LogEntry {
        stage: stage.into(),
        prescription: pr,
        element: t.clone(),
        scanned: st.scanned,
    });
    Ok(t)
}

fn liouville_of(f: &IntPoly, t: &BigInt) -> Result<i8> {
    let v = f.eval_int(t);
    Ok(if factorize(&v)?.big_omega() % 2 == 0 { 1 } else { -1 })
}

/// Two integers with direct-path root numbers +1 and −1, built from the
/// applicable branch: the q₀ stream 𝓕₂ first, then 𝓕₁ in the same class
/// mod N; for an odd-degree I0* witness, 𝓕₁ first and 𝓕₂ on the other side
/// of its real root.
pub fn variation_pair_search(s: &Surface, bound: u64) -> Result<VariationCertificate> {
    let app = applicability(s);
    if app.status != Status::Applicable {
        return Err(Error::Inapplicable(format!(
            "{}: no multiplicative, non-insipid additive or odd-degree I0* place",
            app.status
        )));
    }
    let witness = app.witness_place.expect("applicable");
    let po = witness.poly().unwrap().clone();
    let pd = periodicity_data(s)?;
    let n_primes = primes_of(&pd.n)?;
    let f = if app.branch == Branch::MultiplicativePlace {
        s.m.clone()
    } else {
        IntPoly::one()
    };
    let plan = Plan {
        s,
        pd,
        f,
        g: s.b.clone(),
        n_primes,
    };
    let lambda_ok = plan.f.deg() > 0;
    let mut log = Vec::new();
    let mut q0 = None;

    let (t1, t2) = match app.branch {
        Branch::I0sOddDegree => {
            let mut pr = SievePrescription::squarefree(plan.g.clone(), ArithProgression::integers());
            pr.f = plan.f.clone();
            pr.sign_constraints = plan.signs(None);
            pr.caps = plan.caps();
            pr.free_primes = plan.n_primes.clone();
            let t1 = run("F1", pr, bound, &mut log)?;
            let pr2 = plan.companion(&t1, plan.signs(Some(&po)), None)?;
            let t2 = run("F2", pr2, bound, &mut log)?;
            (t1, t2)
        }
        _ => {
            let mut excluded: BTreeSet<u64> = plan.n_primes.iter().copied().collect();
            excluded.extend(s.delta_primes());
            let (q, m0) = q0_witness(s, &witness, &excluded, bound)?;
            q0 = Some(q);
            let q3 = BigInt::from(q).pow(3);
            let mut pr = SievePrescription::squarefree(plan.g.clone(), ArithProgression::new(m0.clone(), q3)?);
            pr.f = plan.f.clone();
            pr.primes = vec![q];
            pr.f_exponents = vec![val(&plan.f.eval_int(&m0), q).unwrap_or(0)];
            pr.g_exponents = vec![2];
            pr.sign_constraints = plan.signs(None);
            pr.caps = plan.caps();
            pr.free_primes = plan.n_primes.clone();
            let t2 = run("F2", pr, bound, &mut log)?;
            let lam = if lambda_ok {
                Some(liouville_of(&plan.f, &t2)?)
            } else {
                None
            };
            let pr1 = plan.companion(&t2, plan.signs(None), lam)?;
            let t1 = run("F1", pr1, bound, &mut log)?;
            (t1, t2)
        }
    };

    let r1 = root_number_formula(s, &t1)?;
    let r2 = root_number_formula(s, &t2)?;
    for r in [&r1, &r2] {
        if !r.agree {
            return Err(Error::SignPredictionFailed(format!(
                "t = {}: formula {} but direct {}",
                r.t, r.w_formula, r.w_direct
            )));
        }
    }
    if r1.w_direct == r2.w_direct {
        return Err(Error::NoVariation(format!(
            "t1 = {t1}, t2 = {t2} both have W = {}",
            r1.w_direct
        )));
    }
    let (rp, rm) = if r1.w_direct == 1 { (r1, r2) } else { (r2, r1) };
    Ok(VariationCertificate {
        t_plus: rp.t.clone(),
        t_minus: rm.t.clone(),
        report_plus: rp,
        report_minus: rm,
        q0,
        branch: app.branch,
        witness: po,
        n: plan.pd.n.clone(),
        construction_log: log,
    })
}

impl VariationCertificate {
    /// Re-derive both signs on the direct path and re-check every logged
    /// element against its prescription.
    pub fn verify(&self, s: &Surface) -> Result<bool> {
        let wp = crate::localdata::fiber_root_number(s, &self.t_plus)?;
        let wm = crate::localdata::fiber_root_number(s, &self.t_minus)?;
        let mut ok = wp == 1 && wm == -1;
        for e in &self.construction_log {
            ok &= e.prescription.check(&e.element)?;
        }
        if let Some(q) = self.q0 {
            ok &= is_prime_u64(q);
        }
        Ok(ok)
    }
}

impl fmt::Display for VariationCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "branch      {} (witness {})", self.branch, self.witness)?;
        writeln!(f, "N           {}", self.n)?;
        match self.q0 {
            Some(q) => writeln!(f, "q0          {q}")?,
            None => writeln!(f, "q0          none")?,
        }
        writeln!(f, "t_plus      {}  W = {}", self.t_plus, self.report_plus.w_direct)?;
        writeln!(f, "t_minus     {}  W = {}", self.t_minus, self.report_minus.w_direct)?;
        for e in &self.construction_log {
            let pr = &e.prescription;
            writeln!(
                f,
                "{}: t ≡ {} mod {}, S = {:?}, first element {} after {} candidates",
                e.stage, pr.progression.a, pr.progression.n, pr.primes, e.element, e.scanned
            )?;
        }
        Ok(())
    }
}

/// Pair check for the q₀ = 1 variant: two further elements of 𝓕₁ share
/// the sign of its first element.
pub fn same_class_elements(cert: &VariationCertificate, count: usize, bound: u64) -> Result<Vec<BigInt>> {
    let entry = cert
        .construction_log
        .iter()
        .find(|e| e.stage == "F1")
        .ok_or_else(|| Error::Domain("no F1 stage".into()))?;
    let st = sieve_stream(&entry.prescription, bound)?;
    Ok(st.take(count + 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_family, parse_params};

    fn fam(name: &str, params: &[&str]) -> Surface {
        catalog_family(name, &parse_params(params).unwrap())
            .unwrap()
            .surface()
            .unwrap()
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    #[test]
    fn manduchi_example() {
        let ex: BTreeSet<u64> = [2, 3].into();
        assert_eq!(
            manduchi_search(&p(&[1]), &p(&[1, 0, 1]), &ex, 1000).unwrap(),
            (5, BigInt::from(32))
        );
        assert!(manduchi_search(&p(&[1]), &p(&[3]), &ex, 10).is_err());
        assert!(manduchi_search(&p(&[1, 0, 1]), &p(&[1, 0, 1]), &ex, 10).is_err());
    }

    #[test]
    fn applicability_cases() {
        let w = applicability(&fam("washington", &[]));
        assert_eq!((w.status, w.branch), (Status::Inapplicable, Branch::None));
        let g = applicability(&fam("G", &["w=1"]));
        assert_eq!(g.branch, Branch::NonInsipidAdditive);
        assert_eq!(g.witness_place.unwrap().poly(), Some(&p(&[0, 1])));
        assert!(g.conditional_on.is_empty());
        let l = applicability(&fam("legendre", &[]));
        assert_eq!(l.branch, Branch::MultiplicativePlace);
        assert!(l.conditional_on.contains(&Assumption::Chowla));
        let t = applicability(&fam("washington_twist", &[]));
        assert_eq!(t.branch, Branch::I0sOddDegree);
    }

    #[test]
    fn q0_choices() {
        let g = fam("G", &["w=1"]);
        let ex: BTreeSet<u64> = [2, 3].into();
        let t = g.finite_places().find(|pl| pl.kodaira == Kodaira::III).unwrap();
        assert_eq!(select_q0(&g, t, &ex), Some(7));
        let ii = g.finite_places().find(|pl| pl.kodaira == Kodaira::II).unwrap();
        let ex5: BTreeSet<u64> = [2, 3, 5].into();
        assert_eq!(select_q0(&g, ii, &ex5), Some(11));
        let w = fam("washington", &[]);
        assert_eq!(select_q0(&w, &w.places[0], &ex), None);
    }

    #[test]
    fn g1_certificate() {
        let s = fam("G", &["w=1"]);
        let c = variation_pair_search(&s, DEFAULT_BOUND).unwrap();
        assert!(c.verify(&s).unwrap());
        assert!(c.t_plus.magnitude() <= &num_bigint::BigUint::from(DEFAULT_BOUND));
        assert!(c.t_minus.magnitude() <= &num_bigint::BigUint::from(DEFAULT_BOUND));
    }

    #[test]
    fn washington_inapplicable() {
        let s = fam("washington", &[]);
        assert!(matches!(variation_pair_search(&s, 1000), Err(Error::Inapplicable(_))));
    }
}
