//! Fixed divisors, truncated Euler-product densities, squarefree and
//! Liouville censuses over arithmetic progressions, and prescription
//! streams: residue-class scans whose every output is re-checked by
//! factorization.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intarith::{factorize, primes_up_to, Factorization};
use crate::polyring::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArithProgression {
    #[serde(serialize_with = "ser_display")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub n: BigInt,
}

fn ser_display<T: fmt::Display, S: serde::Serializer>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl ArithProgression {
    pub fn new(a: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if !n.is_positive() {
            return Err(Error::Domain(format!("progression modulus {n} must be positive")));
        }
        Ok(ArithProgression {
            a: a.into().mod_floor(&n),
            n,
        })
    }

    pub fn integers() -> Self {
        ArithProgression {
            a: BigInt::zero(),
            n: BigInt::one(),
        }
    }

    pub fn contains(&self, t: &BigInt) -> bool {
        (t - &self.a).mod_floor(&self.n).is_zero()
    }

    /// Members in [−x, x], ascending.
    fn window(&self, x: i64) -> Vec<i64> {
        let n = self.n.to_i64().expect("modulus fits i64");
        let a = self.a.to_i64().expect("residue fits i64");
        let start = -x + (a + x).rem_euclid(n);
        (0..).map(|k| start + k * n).take_while(|&t| t <= x).collect()
    }
}

impl fmt::Display for ArithProgression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.a, self.n)
    }
}

/// (δ_f, d_f): gcd of the values of f, and the smallest d with δ_f/d
/// squarefree.
pub fn fixed_divisor(f: &IntPoly) -> Result<(BigInt, BigInt)> {
    if f.is_zero() {
        return Err(Error::Domain("fixed divisor of the zero polynomial".into()));
    }
    if !f.is_integral() {
        return Err(Error::Domain(format!("{f} has non-integer coefficients")));
    }
    let mut g = BigInt::zero();
    for t in 0..=f.deg() as i64 {
        g = g.gcd(&f.eval_i64(t));
    }
    let mut d = BigInt::one();
    for (p, e) in factorize(&g)?.factors {
        d *= num_traits::pow(p, e as usize - 1);
    }
    Ok((g, d))
}

fn is_squarefree_poly(f: &IntPoly) -> bool {
    f.deg() == 0 || f.gcd(&f.derivative()).deg() == 0
}

/// Integer coefficients for fast evaluation; falls back to exact
/// evaluation when i128 overflows.
#[derive(Clone, Debug)]
struct Evaluator {
    small: Option<Vec<i128>>,
    poly: IntPoly,
}

impl Evaluator {
    fn new(f: &IntPoly) -> Self {
        let small = f.int_coeffs().iter().map(|c| c.to_i128()).collect();
        Evaluator { small, poly: f.clone() }
    }

    fn eval(&self, t: i64) -> BigInt {
        if let Some(c) = &self.small {
            let t = t as i128;
            let mut acc: Option<i128> = Some(0);
            for &a in c.iter().rev() {
                acc = acc.and_then(|x| x.checked_mul(t)).and_then(|x| x.checked_add(a));
            }
            if let Some(v) = acc {
                return BigInt::from(v);
            }
        }
        self.poly.eval_i64(t)
    }
}

fn eval_mod(c: &[u128], t: u128, m: u128) -> u128 {
    c.iter().rev().fold(0, |acc, &a| (acc * t + a) % m)
}

/// Number of residues t mod p^k with f(t) ≡ 0 mod p^k, by lifting the
/// solutions mod p^j one digit at a time.
pub fn root_count_mod_prime_power(f: &IntPoly, p: u64, k: u32) -> u64 {
    let top = (p as u128).checked_pow(k).filter(|m| *m < (1u128 << 62));
    match top {
        Some(top) => {
            let c: Vec<u128> = f
                .int_coeffs()
                .iter()
                .map(|a| a.mod_floor(&BigInt::from(top)).to_u128().unwrap())
                .collect();
            let p = p as u128;
            let mut level: Vec<u128> = (0..p).filter(|&r| eval_mod(&c, r, p) == 0).collect();
            let mut pj = p;
            for _ in 1..k {
                let next = pj * p;
                let mut out = Vec::new();
                for &r in &level {
                    for s in 0..p {
                        let t = r + s * pj;
                        if eval_mod(&c, t, next) == 0 {
                            out.push(t);
                        }
                    }
                }
                level = out;
                pj = next;
            }
            level.len() as u64
        }
        None => {
            let pb = BigInt::from(p);
            let mut level: Vec<BigInt> = (0..p)
                .map(BigInt::from)
                .filter(|r| (f.eval_int(r) % &pb).is_zero())
                .collect();
            let mut pj = pb.clone();
            for _ in 1..k {
                let next = &pj * &pb;
                let mut out = Vec::new();
                for r in &level {
                    for s in 0..p {
                        let t = r + &pj * s;
                        if (f.eval_int(&t) % &next).is_zero() {
                            out.push(t);
                        }
                    }
                }
                level = out;
                pj = next;
            }
            level.len() as u64
        }
    }
}

fn compose_progression(f: &IntPoly, prog: &ArithProgression) -> IntPoly {
    let lin = IntPoly::from_bigints(&[prog.a.clone(), prog.n.clone()]);
    f.compose(&lin)
}

/// Truncated C_{f,𝒜} = (1/N) ∏_{p ∤ N, p ≤ cutoff} (1 − t_f(p)/p^{2+ν_p}).
pub fn density_constant(f: &IntPoly, prog: &ArithProgression, prime_cutoff: u64) -> Result<BigRational> {
    if f.is_zero() || !is_squarefree_poly(f) {
        return Err(Error::Domain(format!("{f} is not squarefree")));
    }
    let (_, d) = fixed_divisor(&compose_progression(f, prog))?;
    let primes: Vec<u64> = primes_up_to(prime_cutoff)
        .into_iter()
        .filter(|&p| !(&prog.n % p).is_zero())
        .collect();
    let factors: Vec<(BigInt, BigInt)> = primes
        .par_iter()
        .map(|&p| {
            let nu = crate::intarith::val(&d, p).unwrap_or(0);
            let k = 2 + nu;
            let pk = num_traits::pow(BigInt::from(p), k as usize);
            let t = root_count_mod_prime_power(f, p, k);
            (&pk - t, pk)
        })
        .collect();
    let mut num = BigInt::one();
    let mut den = prog.n.clone();
    for (a, b) in factors {
        num *= a;
        den *= b;
    }
    Ok(BigRational::new(num, den))
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // scale to keep both parts in range
    let shift = r.denom().bits().saturating_sub(60) as i64;
    let n = (r.numer() >> shift.max(0) as usize).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift.max(0) as usize).to_f64().unwrap_or(f64::NAN);
    n / d
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Census {
    pub x: i64,
    /// t in the window satisfying the predicate
    pub count: u64,
    /// t in 𝒜 ∩ [−X, X]
    pub members: u64,
    /// t skipped because a polynomial vanished there
    pub zeros: u64,
    /// count / #[−X, X]; comparable to C_{f,𝒜}, which carries the 1/N
    pub density: f64,
    pub constant: Option<f64>,
}

impl Census {
    pub fn difference(&self) -> Option<f64> {
        self.constant.map(|c| (self.density - c).abs())
    }
}

const CHUNK: usize = 4096;

fn window_len(x: i64) -> f64 {
    (2 * x + 1) as f64
}

/// n / d is squarefree; `n` given factored.
fn quotient_squarefree(f: &Factorization, d: &BigInt) -> bool {
    f.factors.iter().all(|(p, e)| {
        let dv = crate::intarith::val(d, p.to_u64().unwrap_or(u64::MAX)).unwrap_or(0);
        e.saturating_sub(dv) <= 1
    })
}

/// Sqf_𝒜(X): t ∈ 𝒜, |t| ≤ X with f(t)/d_f squarefree.
pub fn squarefree_census(f: &IntPoly, prog: &ArithProgression, x: i64) -> Result<Census> {
    let (_, d) = fixed_divisor(&compose_progression(f, prog))?;
    let ev = Evaluator::new(f);
    let ts = prog.window(x);
    let (count, zeros) = ts
        .par_chunks(CHUNK)
        .map(|chunk| -> Result<(u64, u64)> {
            let (mut c, mut z) = (0, 0);
            for &t in chunk {
                let v = ev.eval(t);
                if v.is_zero() {
                    z += 1;
                    continue;
                }
                if quotient_squarefree(&factorize(&v)?, &d) {
                    c += 1;
                }
            }
            Ok((c, z))
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
    Ok(Census {
        x,
        count,
        members: ts.len() as u64,
        zeros,
        density: count as f64 / window_len(x),
        constant: None,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiouvilleCensus {
    pub x: i64,
    pub sum: i64,
    pub zeros: u64,
    pub ratio: f64,
}

/// ∑_{t ∈ 𝒜(X)} λ(f(t)), skipping zeros of f.
pub fn liouville_census(f: &IntPoly, prog: &ArithProgression, x: i64) -> Result<LiouvilleCensus> {
    if f.is_zero() {
        return Err(Error::Domain("Liouville census of the zero polynomial".into()));
    }
    let ev = Evaluator::new(f);
    let ts = prog.window(x);
    let (sum, zeros) = ts
        .par_chunks(CHUNK)
        .map(|chunk| -> Result<(i64, u64)> {
            let (mut s, mut z) = (0i64, 0u64);
            for &t in chunk {
                let v = ev.eval(t);
                if v.is_zero() {
                    z += 1;
                    continue;
                }
                s += if factorize(&v)?.big_omega() % 2 == 0 { 1 } else { -1 };
            }
            Ok((s, z))
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
    Ok(LiouvilleCensus {
        x,
        sum,
        zeros,
        ratio: sum as f64 / x as f64,
    })
}

fn merge(a: &Factorization, b: &Factorization) -> Vec<(BigInt, u32)> {
    let mut out = a.factors.clone();
    for (p, e) in &b.factors {
        match out.iter_mut().find(|(q, _)| q == p) {
            Some((_, x)) => *x += e,
            None => out.push((p.clone(), *e)),
        }
    }
    out
}

/// T(X): t ∈ 𝒜(X) with f(t)g(t)/d_{fg} free of p² for p ∤ N, λ(f(t)) = ε
/// and h_i(t) > 0 for every h_i. The constant reported is C_{fg,𝒜}/2
/// (halved again per sign constraint).
pub fn combined_census(
    f: &IntPoly,
    g: &IntPoly,
    positive: &[IntPoly],
    prog: &ArithProgression,
    epsilon: i8,
    x: i64,
    prime_cutoff: u64,
) -> Result<Census> {
    let fg = f * g;
    let (_, d) = fixed_divisor(&compose_progression(&fg, prog))?;
    let (ef, eg) = (Evaluator::new(f), Evaluator::new(g));
    let hs: Vec<Evaluator> = positive.iter().map(Evaluator::new).collect();
    let ts = prog.window(x);
    let (count, zeros) = ts
        .par_chunks(CHUNK)
        .map(|chunk| -> Result<(u64, u64)> {
            let (mut c, mut z) = (0, 0);
            for &t in chunk {
                let (vf, vg) = (ef.eval(t), eg.eval(t));
                if vf.is_zero() || vg.is_zero() {
                    z += 1;
                    continue;
                }
                if !hs.iter().all(|h| h.eval(t).is_positive()) {
                    continue;
                }
                let (ff, fg_) = (factorize(&vf)?, factorize(&vg)?);
                let lam = if ff.big_omega() % 2 == 0 { 1 } else { -1 };
                if lam != epsilon {
                    continue;
                }
                let ok = merge(&ff, &fg_).iter().all(|(p, e)| {
                    if (&prog.n % p).is_zero() {
                        return true;
                    }
                    let dv = crate::intarith::val(&d, p.to_u64().unwrap_or(u64::MAX)).unwrap_or(0);
                    e.saturating_sub(dv) <= 1
                });
                if ok {
                    c += 1;
                }
            }
            Ok((c, z))
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
    let c = rational_to_f64(&density_constant(&fg, prog, prime_cutoff)?);
    let scale = 2f64.powi(1 + positive.len() as i32);
    Ok(Census {
        x,
        count,
        members: ts.len() as u64,
        zeros,
        density: count as f64 / window_len(x),
        constant: Some(c / scale),
    })
}

/// ν_p(poly(t)) < below.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationCap {
    #[serde(serialize_with = "ser_display")]
    pub poly: IntPoly,
    pub p: u64,
    pub below: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignConstraint {
    #[serde(serialize_with = "ser_display")]
    pub poly: IntPoly,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SievePrescription {
    pub progression: ArithProgression,
    /// S
    pub primes: Vec<u64>,
    /// exact ν_p(f(t)), ν_p(g(t)) for p ∈ S
    pub f_exponents: Vec<u32>,
    pub g_exponents: Vec<u32>,
    pub sign_constraints: Vec<SignConstraint>,
    pub liouville_target: Option<i8>,
    #[serde(serialize_with = "ser_display")]
    pub f: IntPoly,
    #[serde(serialize_with = "ser_display")]
    pub g: IntPoly,
    pub caps: Vec<ValuationCap>,
    /// Primes exempt from the squarefree condition; only `caps` bound them.
    pub free_primes: Vec<u64>,
}

impl SievePrescription {
    /// Squarefree sieve on g alone (f = 1).
    pub fn squarefree(g: IntPoly, progression: ArithProgression) -> Self {
        SievePrescription {
            progression,
            primes: vec![],
            f_exponents: vec![],
            g_exponents: vec![],
            sign_constraints: vec![],
            liouville_target: None,
            f: IntPoly::one(),
            g,
            caps: vec![],
            free_primes: vec![],
        }
    }

    fn s_part_ok(&self, fact: &Factorization, exps: &[u32]) -> bool {
        for (p, e) in &fact.factors {
            match self.primes.iter().position(|q| p == &BigInt::from(*q)) {
                Some(i) => {
                    if *e != exps[i] {
                        return false;
                    }
                }
                None if *e > 1 && !self.free_primes.iter().any(|q| p == &BigInt::from(*q)) => return false,
                None => {}
            }
        }
        // S-primes absent from the factorization must have exponent 0
        self.primes
            .iter()
            .zip(exps)
            .all(|(q, e)| *e == 0 || fact.valuation(&BigInt::from(*q)) == *e)
    }

    /// Every predicate of the prescription, checked by factorization.
    pub fn check(&self, t: &BigInt) -> Result<bool> {
        if !self.progression.contains(t) {
            return Ok(false);
        }
        for c in &self.sign_constraints {
            let v = c.poly.eval_int(t);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != c.sign {
                return Ok(false);
            }
        }
        for cap in &self.caps {
            let v = cap.poly.eval_int(t);
            if crate::intarith::val(&v, cap.p).map_or(true, |e| e >= cap.below) {
                return Ok(false);
            }
        }
        let (vf, vg) = (self.f.eval_int(t), self.g.eval_int(t));
        if vf.is_zero() || vg.is_zero() {
            return Ok(false);
        }
        let (ff, fg) = (factorize(&vf)?, factorize(&vg)?);
        if !self.s_part_ok(&ff, &self.f_exponents) || !self.s_part_ok(&fg, &self.g_exponents) {
            return Ok(false);
        }
        if let Some(target) = self.liouville_target {
            let lam = if ff.big_omega() % 2 == 0 { 1 } else { -1 };
            if lam != target {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The seed conditions on the residue a: exact S-valuations (below the
    /// power of p in N), and f(a)g(a) ≢ 0 mod p² for the other p² | N.
    pub fn validate_seed(&self) -> Result<()> {
        let a = &self.progression.a;
        let n = &self.progression.n;
        let (fa, ga) = (self.f.eval_int(a), self.g.eval_int(a));
        let fail = |msg: String| Err(Error::SeedNotFound(format!("{}: {msg}", self.progression)));
        if self.primes.len() != self.f_exponents.len() || self.primes.len() != self.g_exponents.len() {
            return fail("exponent lists do not match S".into());
        }
        for (i, &p) in self.primes.iter().enumerate() {
            let np = crate::intarith::val(n, p).unwrap_or(0);
            for (v, want) in [(&fa, self.f_exponents[i]), (&ga, self.g_exponents[i])] {
                let have = crate::intarith::val(v, p);
                // the class fixes ν_p only when ν_p < ν_p(N)
                if want >= np || have != Some(want) {
                    return fail(format!("ν_{p} = {have:?}, prescribed {want}"));
                }
            }
        }
        let prod = &fa * &ga;
        if !n.is_one() {
            for q in factorize(n)?.primes() {
                let q64 = q.to_u64().expect("small modulus prime");
                if self.primes.contains(&q64)
                    || self.free_primes.contains(&q64)
                    || crate::intarith::val(n, q64).unwrap_or(0) < 2
                {
                    continue;
                }
                if (&prod % (q * q)).is_zero() {
                    return fail(format!("{q}² divides f(a)g(a)"));
                }
            }
        }
        Ok(())
    }
}

/// Scan of the progression in order of increasing |t| (ties to the
/// positive side), emitting the members that pass `check`.
pub struct SieveStream {
    prescription: SievePrescription,
    up: BigInt,
    down: BigInt,
    bound: BigInt,
    pub scanned: u64,
}

pub fn sieve_stream(prescription: &SievePrescription, search_bound: u64) -> Result<SieveStream> {
    prescription.validate_seed()?;
    let a0 = prescription.progression.a.clone();
    let down = &a0 - &prescription.progression.n;
    Ok(SieveStream {
        prescription: prescription.clone(),
        up: a0,
        down,
        bound: BigInt::from(search_bound),
        scanned: 0,
    })
}

impl SieveStream {
    fn next_candidate(&mut self) -> Option<BigInt> {
        let up_ok = self.up <= self.bound;
        let down_ok = -&self.down <= self.bound;
        let take_up = match (up_ok, down_ok) {
            (false, false) => return None,
            (true, false) => true,
            (false, true) => false,
            (true, true) => self.up <= -&self.down,
        };
        let n = &self.prescription.progression.n;
        if take_up {
            let t = self.up.clone();
            self.up += n;
            Some(t)
        } else {
            let t = self.down.clone();
            self.down -= n;
            Some(t)
        }
    }

    /// Next element, or `Exhausted` once the bound is passed.
    pub fn next_checked(&mut self) -> Result<BigInt> {
        while let Some(t) = self.next_candidate() {
            self.scanned += 1;
            if self.prescription.check(&t)? {
                return Ok(t);
            }
        }
        Err(Error::Exhausted(format!(
            "no element of {} below {} after {} candidates",
            self.prescription.progression, self.bound, self.scanned
        )))
    }
}

impl Iterator for SieveStream {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        self.next_checked().ok()
    }
}
