//! The decomposition of W(E_t) into λ(M(t)), the local root numbers at the
//! primes of δ, and the place-wise corrections g_P, h_P; periodicity data
//! (N, R) for the non-corrective part φ.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intarith::{self, factorize, jacobi, liouville, modified_jacobi_fact, unit_legendre};
use crate::localdata::{global_root_number_direct, instantiate_fiber, FiberCurve};
use crate::polyring::{self, IntPoly};
use crate::surface::{Kodaira, Place, Surface};

/// The archimedean local root number.
pub const ARCHIMEDEAN_SIGN: i8 = -1;

/// Sign convention for the δ-part of the multiplicative g_P.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MultSignVariant {
    /// ∏_{p|δ} (−1)^{ν_p(P(t))}
    #[default]
    Nu,
    /// (−1)^{ω(P(t)_(δ))}, number of distinct δ-primes dividing P(t)
    Omega,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceFactors {
    pub poly: IntPoly,
    pub kodaira: Kodaira,
    pub h: i8,
    pub g: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootNumberReport {
    pub t: BigInt,
    pub lambda_m: i8,
    pub delta_prime_part: BTreeMap<u64, i8>,
    pub per_place: Vec<PlaceFactors>,
    pub phi: i8,
    pub w_formula: i8,
    pub w_direct: i8,
    pub agree: bool,
}

fn place_value(place: &Place, t: &BigInt) -> Result<BigInt> {
    let p = place.poly().ok_or_else(|| Error::Domain("place at infinity".into()))?;
    let v = p.eval_int(t);
    if v.is_zero() {
        return Err(Error::Domain(format!("{p} vanishes at t = {t}")));
    }
    Ok(v)
}

fn delta_sign(delta: &BigInt, f: &intarith::Factorization, variant: MultSignVariant) -> i8 {
    let in_delta = f.factors.iter().filter(|(p, _)| (delta % p).is_zero());
    let e: u32 = match variant {
        MultSignVariant::Nu => in_delta.map(|(_, e)| e).sum(),
        MultSignVariant::Omega => in_delta.count() as u32,
    };
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn g_factor(s: &Surface, place: &Place, t: &BigInt) -> Result<i8> {
    g_factor_with(s, place, t, MultSignVariant::Nu)
}

pub fn g_factor_with(s: &Surface, place: &Place, t: &BigInt, variant: MultSignVariant) -> Result<i8> {
    let v = place_value(place, t)?;
    let f = factorize(&v)?;
    if place.multiplicative {
        let a = -s.c6.eval_int(t);
        let sign = delta_sign(&s.delta, &f, variant);
        if a.is_zero() {
            // every p ∤ δ dividing P(t) would divide c6(t), impossible at a
            // multiplicative place; the symbol is an empty product
            let odd_outside = f.factors.iter().any(|(p, e)| e % 2 == 1 && !(&s.delta % p).is_zero());
            if odd_outside {
                return Err(Error::Domain(format!("c6({t}) = 0 at a multiplicative place")));
            }
            return Ok(sign);
        }
        Ok(modified_jacobi_fact(&a, &f, &s.delta)? * sign)
    } else {
        let eps = place.epsilon.expect("additive place");
        modified_jacobi_fact(&BigInt::from(eps), &f, &s.delta)
    }
}

pub fn h_factor(s: &Surface, place: &Place, t: &BigInt) -> Result<i8> {
    let v = place_value(place, t)?;
    if matches!(place.kodaira, Kodaira::I0 | Kodaira::I0s) {
        return Ok(1);
    }
    let f = factorize(&v)?;
    let mut h = 1i8;
    let minus3 = BigInt::from(-3);
    let minus1 = BigInt::from(-1);
    for (p, nu) in &f.factors {
        if *nu < 2 || (&s.delta % p).is_zero() {
            continue;
        }
        use Kodaira::*;
        h *= match place.kodaira {
            II | IIs if matches!(nu % 6, 2 | 4) => jacobi(&minus3, p)?,
            III | IIIs if nu % 4 == 2 => jacobi(&minus1, p)?,
            IV | IVs if matches!(nu % 6, 2..=4) => jacobi(&minus3, p)?,
            I(_) | Is(_) if nu % 2 == 0 => {
                let c6 = s.c6.eval_int(t);
                if c6.is_zero() {
                    return Err(Error::Domain(format!("c6({t}) = 0")));
                }
                -unit_legendre(&-c6, p)
            }
            _ => 1,
        };
    }
    Ok(h)
}

/// W_p of the fiber for every p | δ (+1 at primes of good reduction).
fn delta_part(s: &Surface, fiber: &FiberCurve) -> BTreeMap<u64, i8> {
    s.delta_primes()
        .into_iter()
        .map(|p| {
            let w = fiber.local(&BigInt::from(p)).map_or(1, |d| d.w);
            (p, w)
        })
        .collect()
}

pub fn phi(s: &Surface, t: &BigInt) -> Result<i8> {
    let fiber = instantiate_fiber(s, t)?;
    phi_from(s, &fiber, t)
}

fn phi_from(s: &Surface, fiber: &FiberCurve, t: &BigInt) -> Result<i8> {
    let mut r: i8 = delta_part(s, fiber).values().product();
    for place in s.phi_places() {
        r *= g_factor(s, place, t)?;
    }
    Ok(r)
}

pub fn root_number_formula(s: &Surface, t: &BigInt) -> Result<RootNumberReport> {
    root_number_formula_with(s, t, MultSignVariant::Nu)
}

pub fn root_number_formula_with(s: &Surface, t: &BigInt, variant: MultSignVariant) -> Result<RootNumberReport> {
    let fiber = instantiate_fiber(s, t)?;
    let m = s.m.eval_int(t);
    if m.is_zero() {
        return Err(Error::ZeroAtMultiplicativePlace(t.to_string()));
    }
    let lambda_m = liouville(&m)?;
    let delta_prime_part = delta_part(s, &fiber);
    let mut w = ARCHIMEDEAN_SIGN * lambda_m * delta_prime_part.values().product::<i8>();
    let mut per_place = Vec::new();
    let mut phi: i8 = delta_prime_part.values().product();
    for place in s.finite_places() {
        let g = g_factor_with(s, place, t, variant)?;
        let h = h_factor(s, place, t)?;
        w *= g * h;
        if place.kodaira != Kodaira::I0s {
            phi *= g;
        }
        per_place.push(PlaceFactors {
            poly: place.poly().expect("finite").clone(),
            kodaira: place.kodaira,
            h,
            g,
        });
    }
    let w_direct = global_root_number_direct(&fiber);
    Ok(RootNumberReport {
        t: t.clone(),
        lambda_m,
        delta_prime_part,
        per_place,
        phi,
        w_formula: w,
        w_direct,
        agree: w == w_direct,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityData {
    pub n: BigInt,
    /// Polynomials whose signs, together with t mod N, determine φ.
    pub r_factors: Vec<IntPoly>,
    pub alpha: BTreeMap<u64, u32>,
    /// Admissibility depth: t is admissible at p when v_p(P(t)) < β_p for
    /// every finite bad place P.
    pub beta: BTreeMap<u64, u32>,
    /// N_P of each multiplicative place.
    pub n_mult: Vec<(IntPoly, BigInt)>,
    /// I0* place polynomials: their g_P is not part of φ, but the sign of
    /// P(t) changes it.
    pub control: Vec<IntPoly>,
}

pub const ALPHA_K_MAX: u32 = 8;
pub const ALPHA_WINDOW: i64 = 500;

fn pow_u64(p: u64, k: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), k as usize)
}

/// Whether P(t) ≢ 0 mod p^β_p for all finite bad places and all p | δ.
pub fn admissible(s: &Surface, beta: &BTreeMap<u64, u32>, t: &BigInt) -> bool {
    s.finite_places().all(|pl| {
        let v = pl.poly().expect("finite").eval_int(t);
        beta.iter().all(|(&p, &k)| !(&v % pow_u64(p, k)).is_zero())
    })
}

fn sign_poly_factors(s: &Surface, place: &Place) -> Result<Vec<IntPoly>> {
    let p = place.poly().expect("finite");
    let minus_c6 = -&s.c6;
    if p.deg() == 1 {
        // −c6(t) ≡ −c6(r) mod P(t); only a negative residue class (up to
        // squares and δ-primes) makes the symbol see the sign of P(t)
        let r = -p.coeff(0) / p.coeff(1);
        let c = minus_c6.eval_rat(&r);
        let c = c.numer() * c.denom();
        if c.is_zero() {
            return Ok(vec![]);
        }
        return Ok(if c.is_negative() { vec![p.clone()] } else { vec![] });
    }
    let mut out = Vec::new();
    let (mut f, mut g) = (minus_c6, p.clone());
    let mut chain = vec![f.clone(), g.clone()];
    loop {
        if f.deg() > g.deg() {
            std::mem::swap(&mut f, &mut g);
        }
        if f.deg() == 0 || f.is_zero() {
            break;
        }
        let shift = IntPoly::t().pow((g.deg() - f.deg()) as u32);
        let next = &g.scale(&f.lc()) - &(&shift * &f).scale(&g.lc());
        if next.is_zero() {
            break;
        }
        chain.push(next.clone());
        g = next;
    }
    for q in chain {
        if q.deg() == 0 {
            continue;
        }
        for (h, _) in polyring::factor_irreducible(&q)? {
            out.push(h.sign_normalized());
        }
    }
    Ok(out)
}

pub fn periodicity_data(s: &Surface) -> Result<PeriodicityData> {
    let primes = s.delta_primes();
    // W_p over the window, computed once per fiber
    let mut samples: Vec<(BigInt, BTreeMap<u64, i8>)> = Vec::new();
    for t in -ALPHA_WINDOW..=ALPHA_WINDOW {
        let t = BigInt::from(t);
        match instantiate_fiber(s, &t) {
            Ok(f) => samples.push((t, delta_part(s, &f))),
            Err(Error::SingularFiber(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let mut alpha = BTreeMap::new();
    let mut beta = BTreeMap::new();
    for &p in &primes {
        let pb = BigInt::from(p);
        // deepest p-adic valuation of a place value at each sample
        let depth: Vec<u32> = samples
            .iter()
            .map(|(t, _)| {
                s.finite_places()
                    .map(|pl| {
                        let v = pl.poly().expect("finite").eval_int(t);
                        intarith::val(&v, p).unwrap_or(u32::MAX)
                    })
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let stable = |k: u32, b: u32| -> bool {
            let m = num_traits::pow(pb.clone(), k as usize);
            let mut seen: BTreeMap<BigInt, i8> = BTreeMap::new();
            for ((t, w), &d) in samples.iter().zip(&depth) {
                if d >= b {
                    continue;
                }
                let wp = w[&p];
                if *seen.entry(t.mod_floor(&m)).or_insert(wp) != wp {
                    return false;
                }
            }
            !seen.is_empty()
        };
        let found = (1..=ALPHA_K_MAX).find_map(|k| (1..=k).rev().find(|&b| stable(k, b)).map(|b| (k, b)));
        let (k, b) = found.ok_or(Error::PeriodicityUndetermined(p, ALPHA_K_MAX))?;
        alpha.insert(p, k);
        beta.insert(p, b);
    }

    let mut n = BigInt::from(24);
    for (&p, &k) in &alpha {
        n *= pow_u64(p, k);
    }
    let mut r_factors: Vec<IntPoly> = Vec::new();
    let mut n_mult = Vec::new();
    let mut control = Vec::new();
    for place in s.finite_places() {
        let poly = place.poly().expect("finite");
        if place.kodaira == Kodaira::I0s {
            control.push(poly.clone());
        } else if place.multiplicative {
            r_factors.extend(sign_poly_factors(s, place)?);
            let res = polyring::resultant(poly, &s.c6)?.to_integer();
            let mut np = BigInt::from(4);
            if !res.is_zero() {
                for q in factorize(&res)?.primes() {
                    if !(&s.delta % q).is_zero() {
                        np *= q;
                    }
                }
            }
            n *= &np;
            n_mult.push((poly.clone(), np));
        } else {
            // each additive character (ε/·) is odd
            r_factors.push(poly.clone());
        }
    }
    r_factors.sort_by(|a, b| a.canonical_cmp(b));
    r_factors.dedup();
    Ok(PeriodicityData {
        n,
        r_factors,
        alpha,
        beta,
        n_mult,
        control,
    })
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_negative() {
        -1
    } else if x.is_zero() {
        0
    } else {
        1
    }
}

impl PeriodicityData {
    pub fn r_signs(&self, t: &BigInt) -> Vec<i8> {
        self.r_factors.iter().map(|r| sign_of(&r.eval_int(t))).collect()
    }

    pub fn control_signs(&self, t: &BigInt) -> Vec<i8> {
        self.control.iter().map(|r| sign_of(&r.eval_int(t))).collect()
    }

    /// Admissible for the periodicity statement: P(t) ≢ 0 mod p^β_p for
    /// every bad place and p | δ, and no R factor vanishes.
    pub fn admissible(&self, s: &Surface, t: &BigInt) -> bool {
        admissible(s, &self.beta, t) && self.r_signs(t).iter().all(|&x| x != 0)
    }

    pub fn n_u64(&self) -> Option<u64> {
        self.n.to_u64()
    }
}

/// λ(M(t)), +1 when there is no multiplicative place.
pub fn lambda_m(s: &Surface, t: &BigInt) -> Result<i8> {
    let m = s.m.eval_int(t);
    if m.is_zero() {
        return Err(Error::ZeroAtMultiplicativePlace(t.to_string()));
    }
    if m.abs().is_one() {
        return Ok(1);
    }
    liouville(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_surface;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    fn washington() -> Surface {
        build_surface([p(&[]), p(&[0, 1]), p(&[]), p(&[-3, -1]), p(&[1])]).unwrap()
    }

    fn g1() -> Surface {
        build_surface([p(&[]), p(&[0, 3]), p(&[]), p(&[0, 3]), p(&[0, 0, 1])]).unwrap()
    }

    #[test]
    fn washington_formula() {
        let s = washington();
        for t in 0..=50 {
            let r = root_number_formula(&s, &BigInt::from(t)).unwrap();
            assert_eq!((r.w_formula, r.w_direct), (-1, -1), "t = {t}");
            assert_eq!(r.lambda_m, 1);
        }
    }

    #[test]
    fn g1_agrees() {
        let s = g1();
        for t in [2, -5, 17, 30] {
            let r = root_number_formula(&s, &BigInt::from(t)).unwrap();
            assert!(r.agree, "t = {t}: {r:?}");
        }
    }

    #[test]
    fn unit_place_value() {
        let s = g1();
        let place = s.finite_places().find(|pl| pl.poly() == Some(&p(&[-1, 1]))).unwrap();
        // P(2) = 1
        assert_eq!(g_factor(&s, place, &BigInt::from(2)).unwrap(), 1);
        assert_eq!(h_factor(&s, place, &BigInt::from(2)).unwrap(), 1);
        assert!(g_factor(&s, place, &BigInt::from(1)).is_err());
    }

    #[test]
    fn periodicity_basics() {
        let s = g1();
        let d = periodicity_data(&s).unwrap();
        assert!((&d.n % 24u32).is_zero());
        assert!(d.r_factors.iter().all(|r| r.lc().is_positive()));
        assert_eq!(d.r_factors, vec![p(&[0, 1]), p(&[-1, 1])]);
    }
}
