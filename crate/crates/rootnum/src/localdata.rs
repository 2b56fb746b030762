//! Integer fibers: global minimal models, Tate's algorithm at every bad
//! prime, local and global root numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intarith::{self, factorize, hilbert, jacobi, padic_split};
use crate::surface::{tame_kodaira, Kodaira, Surface};
use crate::tables23::{INF, ROWS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberLocalData {
    pub prime: BigInt,
    pub kodaira: Kodaira,
    /// `None` when the invariant is 0.
    pub v_c4: Option<u32>,
    pub v_c6: Option<u32>,
    pub v_disc: u32,
    /// Defined for I_m, m ≥ 1.
    pub split: Option<bool>,
    pub conductor_exponent: u32,
    pub w: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCurve {
    /// Parameter value, if the curve is a fiber of a surface.
    pub t: Option<BigInt>,
    /// a1, a2, a3, a4, a6 of the global minimal model.
    pub a: [BigInt; 5],
    pub c4: BigInt,
    pub c6: BigInt,
    pub disc: BigInt,
    pub bad_primes: Vec<FiberLocalData>,
}

impl FiberCurve {
    pub fn conductor(&self) -> BigInt {
        let mut n = BigInt::one();
        for d in &self.bad_primes {
            n *= num_traits::pow(d.prime.clone(), d.conductor_exponent as usize);
        }
        n
    }

    pub fn local(&self, p: &BigInt) -> Option<&FiberLocalData> {
        self.bad_primes.iter().find(|d| &d.prime == p)
    }
}

pub(crate) struct Invariants {
    pub b2: BigInt,
    pub b4: BigInt,
    pub b6: BigInt,
    pub b8: BigInt,
    pub c4: BigInt,
    pub c6: BigInt,
    pub disc: BigInt,
}

pub(crate) fn invariants(a: &[BigInt; 5]) -> Invariants {
    let [a1, a2, a3, a4, a6] = a;
    let b2 = a1 * a1 + 4 * a2;
    let b4 = 2 * a4 + a1 * a3;
    let b6 = a3 * a3 + 4 * a6;
    let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    let c4 = &b2 * &b2 - 24 * &b4;
    let b2c: BigInt = &b2 * &b2 * &b2;
    let c6 = -b2c + 36 * &b2 * &b4 - 216 * &b6;
    let b2b8: BigInt = &b2 * &b2 * &b8;
    let disc = -b2b8 - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6;
    Invariants {
        b2,
        b4,
        b6,
        b8,
        c4,
        c6,
        disc,
    }
}

/// Change of variables x = x' + r, y = y' + s x' + t.
fn rst(a: &[BigInt; 5], r: &BigInt, s: &BigInt, t: &BigInt) -> [BigInt; 5] {
    let [a1, a2, a3, a4, a6] = a;
    [
        a1 + 2 * s,
        a2 - s * a1 + 3 * r - s * s,
        a3 + r * a1 + 2 * t,
        a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
        a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1,
    ]
}

/// Integral model with the given c4, c6 (b2 reduced into (−6, 6]).
pub fn model_from_c4c6(c4: &BigInt, c6: &BigInt) -> Result<[BigInt; 5]> {
    let fail = || Error::Domain(format!("no integral model with c4 = {c4}, c6 = {c6}"));
    let exact = |n: BigInt, d: i64| -> Result<BigInt> {
        let (q, r) = n.div_rem(&BigInt::from(d));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(fail())
        }
    };
    let mut b2 = (-c6).mod_floor(&BigInt::from(12));
    if b2 > BigInt::from(6) {
        b2 -= 12;
    }
    let b4 = exact(&b2 * &b2 - c4, 24)?;
    let b2c: BigInt = &b2 * &b2 * &b2;
    let b6 = exact(-b2c + 36 * &b2 * &b4 - c6, 216)?;
    let a1 = b2.mod_floor(&BigInt::from(2));
    let a3 = b6.mod_floor(&BigInt::from(2));
    let a2 = exact(&b2 - &a1, 4)?;
    let a4 = exact(&b4 - &a1 * &a3, 2)?;
    let a6 = exact(&b6 - &a3, 4)?;
    let a = [a1, a2, a3, a4, a6];
    let inv = invariants(&a);
    if &inv.c4 != c4 || &inv.c6 != c6 {
        return Err(fail());
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateResult {
    pub kodaira: Kodaira,
    pub conductor_exponent: u32,
    pub split: Option<bool>,
    /// Number of times the model was divided by p (u = p^min_exp).
    pub min_exp: u32,
    pub model: [BigInt; 5],
}

struct Fp<'a> {
    p: &'a BigInt,
    small: u64,
}

impl Fp<'_> {
    fn md(&self, x: &BigInt) -> BigInt {
        x.mod_floor(self.p)
    }
    fn div(&self, x: &BigInt) -> bool {
        (x % self.p).is_zero()
    }
    fn val(&self, x: &BigInt) -> u32 {
        if x.is_zero() {
            return u32::MAX;
        }
        padic_split(x, self.p).expect("nonzero").0
    }
    fn inv(&self, x: &BigInt) -> BigInt {
        let e = self.md(x).extended_gcd(self.p);
        debug_assert!(e.gcd.is_one());
        e.x.mod_floor(self.p)
    }
    /// Whether a x² + b x + c has a root in F_p.
    fn quadroots(&self, a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
        let (a, b, c) = (self.md(a), self.md(b), self.md(c));
        if a.is_zero() {
            return !b.is_zero() || c.is_zero();
        }
        if self.small == 2 {
            return c.is_zero() || (a + b + c).is_even();
        }
        let d = self.md(&(&b * &b - 4 * a * c));
        d.is_zero() || jacobi(&d, self.p).expect("odd prime") == 1
    }
}

fn exact(x: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!((x % d).is_zero(), "{x} not divisible by {d}");
    x / d
}

/// Tate's algorithm at p on an integral model.
pub fn tate(model: &[BigInt; 5], p: &BigInt) -> TateResult {
    let small = p.to_u64().filter(|&q| q <= 3).unwrap_or(5);
    let f = Fp { p, small };
    let p2 = p * p;
    let p3 = &p2 * p;
    let p4 = &p2 * &p2;
    let zero = BigInt::zero();
    let half = if small == 2 {
        zero.clone()
    } else {
        f.inv(&BigInt::from(2))
    };
    let mut a = model.clone();
    let mut min_exp = 0;
    loop {
        let inv = invariants(&a);
        let vd = f.val(&inv.disc);
        let done = |kodaira, fe, split, a: [BigInt; 5]| TateResult {
            kodaira,
            conductor_exponent: fe,
            split,
            min_exp,
            model: a,
        };
        if vd == 0 {
            return done(Kodaira::I0, 0, None, a);
        }
        let [a1, a2, a3, a4, a6] = &a;
        let (r, t) = match small {
            2 => {
                if f.div(&inv.b2) {
                    let r = f.md(a4);
                    let t = f.md(&(((&r + a2) * &r + a4) * &r + a6));
                    (r, t)
                } else {
                    let i = f.inv(a1);
                    let r = &i * a3;
                    let t = &i * (a4 + &r * &r);
                    (r, t)
                }
            }
            3 => {
                let r = if f.div(&inv.b2) {
                    -&inv.b6
                } else {
                    -f.inv(&inv.b2) * &inv.b4
                };
                let t = a1 * &r + a3;
                (r, t)
            }
            _ => {
                let r = if f.div(&inv.c4) {
                    -f.inv(&BigInt::from(12)) * &inv.b2
                } else {
                    -f.inv(&(12 * &inv.c4)) * (&inv.c6 + &inv.b2 * &inv.c4)
                };
                let t = -&half * (a1 * &r + a3);
                (r, t)
            }
        };
        a = rst(&a, &f.md(&r), &zero, &f.md(&t));
        let inv = invariants(&a);
        if !f.div(&inv.c4) {
            let split = f.quadroots(&BigInt::one(), &a[0], &-&a[1]);
            return done(Kodaira::I(vd), 1, Some(split), a);
        }
        if f.val(&a[4]) < 2 {
            return done(Kodaira::II, vd, None, a);
        }
        if f.val(&inv.b8) < 3 {
            return done(Kodaira::III, vd - 1, None, a);
        }
        if f.val(&inv.b6) < 3 {
            return done(Kodaira::IV, vd - 2, None, a);
        }
        let (s, t) = match small {
            2 => (f.md(&a[1]), p * f.md(&exact(&a[4], &p2))),
            3 => (a[0].clone(), a[2].clone()),
            _ => (-&a[0] * &half, -&a[2] * &half),
        };
        a = rst(&a, &zero, &s, &t);
        let b = f.md(&exact(&a[1], p));
        let c = f.md(&exact(&a[3], &p2));
        let d = f.md(&exact(&a[4], &p3));
        let w = 27 * &d * &d - &b * &b * &c * &c + 4 * &b * &b * &b * &d - 18 * &b * &c * &d + 4 * &c * &c * &c;
        let x = 3 * &c - &b * &b;
        if !f.div(&w) {
            return done(Kodaira::I0s, vd - 4, None, a);
        }
        if !f.div(&x) {
            // double root
            let r = match small {
                2 => c.clone(),
                3 => &c * f.inv(&b),
                _ => (&b * &c - 9 * &d) * f.inv(&(2 * &x)),
            };
            a = rst(&a, &(p * f.md(&r)), &zero, &zero);
            let (mut ix, mut iy) = (3u32, 3u32);
            let (mut mx, mut my) = (p2.clone(), p2.clone());
            loop {
                let a3t = f.md(&exact(&a[2], &my));
                let a6t = f.md(&exact(&a[4], &(&mx * &my)));
                if !f.div(&(&a3t * &a3t + 4 * &a6t)) {
                    break;
                }
                let t = if small == 2 {
                    &my * &a6t
                } else {
                    &my * f.md(&(-&a3t * &half))
                };
                a = rst(&a, &zero, &zero, &t);
                my *= p;
                iy += 1;
                let a2t = f.md(&exact(&a[1], p));
                let a4t = f.md(&exact(&a[3], &(p * &mx)));
                let a6t = f.md(&exact(&a[4], &(&mx * &my)));
                if !f.div(&(&a4t * &a4t - 4 * &a6t * &a2t)) {
                    break;
                }
                let r = if small == 2 {
                    &mx * f.md(&(&a6t * f.inv(&a2t)))
                } else {
                    &mx * f.md(&(-&a4t * f.inv(&(2 * &a2t))))
                };
                a = rst(&a, &r, &zero, &zero);
                mx *= p;
                ix += 1;
            }
            return done(Kodaira::Is(ix + iy - 5), vd + 1 - ix - iy, None, a);
        }
        // triple root
        let r = match small {
            2 => b.clone(),
            3 => -&d,
            _ => -&b * f.inv(&BigInt::from(3)),
        };
        a = rst(&a, &(p * f.md(&r)), &zero, &zero);
        let a3t = f.md(&exact(&a[2], &p2));
        let a6t = f.md(&exact(&a[4], &p4));
        if !f.div(&(&a3t * &a3t + 4 * &a6t)) {
            return done(Kodaira::IVs, vd - 6, None, a);
        }
        let t = if small == 2 {
            -&p2 * &a6t
        } else {
            &p2 * f.md(&(-&a3t * &half))
        };
        a = rst(&a, &zero, &zero, &t);
        if f.val(&a[3]) < 4 {
            return done(Kodaira::IIIs, vd - 7, None, a);
        }
        if f.val(&a[4]) < 6 {
            return done(Kodaira::IIs, vd - 8, None, a);
        }
        let pw = [p.clone(), p2.clone(), p3.clone(), p4.clone(), &p3 * &p3];
        for (ai, d) in a.iter_mut().zip(&pw) {
            *ai = exact(ai, d);
        }
        min_exp += 1;
    }
}

fn val_opt(x: &BigInt, p: &BigInt) -> Option<u32> {
    if x.is_zero() {
        None
    } else {
        Some(padic_split(x, p).expect("nonzero").0)
    }
}

/// Residue of the p-adic unit part of x modulo p^k (0 for x = 0).
fn unit_residue(x: &BigInt, p: u64, k: u32) -> u32 {
    if x.is_zero() {
        return 0;
    }
    let (_, u) = padic_split(x, &BigInt::from(p)).expect("nonzero");
    u.mod_floor(&BigInt::from(p.pow(k))).to_u32().expect("small")
}

fn table_key(p: u64, c4: &BigInt, c6: &BigInt, disc: &BigInt) -> (u32, u32, u32) {
    let pb = BigInt::from(p);
    let v4 = val_opt(c4, &pb).unwrap_or(INF);
    let v6 = val_opt(c6, &pb).unwrap_or(INF);
    let vd = val_opt(disc, &pb).expect("Δ ≠ 0");
    (v4, v6, vd)
}

fn row_position(p: u64, c4: &BigInt, c6: &BigInt, disc: &BigInt) -> Option<usize> {
    let (v4, v6, vd) = table_key(p, c4, c6, disc);
    ROWS.iter()
        .position(|r| r.p == p && r.vd == vd && (r.v4.0..=r.v4.1).contains(&v4) && (r.v6.0..=r.v6.1).contains(&v6))
}

/// Row number, counted from 0 within the table for p ∈ {2, 3}, matching a
/// minimal model, if any.
pub fn table_row(p: u64, c4: &BigInt, c6: &BigInt, disc: &BigInt) -> Option<usize> {
    let i = row_position(p, c4, c6, disc)?;
    Some(ROWS[..i].iter().filter(|r| r.p == p).count())
}

/// W_p at p ∈ {2, 3} for additive, potentially good reduction, from the
/// declarative tables.
pub fn table_root_number(p: u64, c4: &BigInt, c6: &BigInt, disc: &BigInt) -> Result<i8> {
    let unclassified = Error::Unclassified {
        p,
        key: table_key(p, c4, c6, disc),
    };
    let row = &ROWS[row_position(p, c4, c6, disc).ok_or_else(|| unclassified.clone())?];
    let key = (unit_residue(c4, p, row.k4), unit_residue(c6, p, row.k6));
    row.classes
        .iter()
        .find(|&&(x, y, _)| (x, y) == key)
        .map(|&(_, _, w)| w)
        .ok_or(unclassified)
}

/// Local root number at p of the minimal model with invariants c4, c6, Δ.
pub fn root_number_at(
    p: &BigInt,
    kodaira: Kodaira,
    split: Option<bool>,
    c4: &BigInt,
    c6: &BigInt,
    disc: &BigInt,
) -> Result<i8> {
    match kodaira {
        Kodaira::I0 => return Ok(1),
        Kodaira::I(_) => return Ok(if split.expect("split flag") { -1 } else { 1 }),
        _ => {}
    }
    let v4 = val_opt(c4, p);
    let vd = val_opt(disc, p).expect("Δ ≠ 0");
    let small = p.to_u64().filter(|&q| q <= 3);
    if v4.is_some_and(|v| 3 * v < vd) {
        // potentially multiplicative: (−1, −c6)_p
        return Ok(match small {
            Some(q) => hilbert(&BigInt::from(-1), &-c6, q),
            None if val_opt(c6, p).expect("c6 ≠ 0") % 2 == 1 => jacobi(&BigInt::from(-1), p)?,
            None => 1,
        });
    }
    match small {
        Some(q) => table_root_number(q, c4, c6, disc),
        None => {
            let d = match 12 / vd.gcd(&12) {
                2 | 6 => -1,
                3 => -3,
                4 => -2,
                e => return Err(Error::Domain(format!("semistability defect e = {e}"))),
            };
            jacobi(&BigInt::from(d), p)
        }
    }
}

/// Local data at p of a minimal model. For p ≥ 5 the valuations decide the
/// type unless `full` asks for Tate's algorithm.
fn local_data(a: &[BigInt; 5], inv: &Invariants, p: &BigInt, full: bool) -> Result<FiberLocalData> {
    let v4 = val_opt(&inv.c4, p);
    let v6 = val_opt(&inv.c6, p);
    let vd = val_opt(&inv.disc, p).expect("Δ ≠ 0");
    let (kodaira, split, fe) = if full || p <= &BigInt::from(3) {
        let r = tate(a, p);
        if r.min_exp != 0 {
            return Err(Error::Domain(format!("model not minimal at {p}")));
        }
        (r.kodaira, r.split, r.conductor_exponent)
    } else {
        let k = tame_kodaira(v4, v6, vd)?;
        match k {
            Kodaira::I0 => (k, None, 0),
            Kodaira::I(_) => {
                let s = intarith::unit_legendre(&-&inv.c6, p) == 1;
                (k, Some(s), 1)
            }
            _ => (k, None, 2),
        }
    };
    let w = root_number_at(p, kodaira, split, &inv.c4, &inv.c6, &inv.disc)?;
    Ok(FiberLocalData {
        prime: p.clone(),
        kodaira,
        v_c4: v4,
        v_c6: v6,
        v_disc: vd,
        split,
        conductor_exponent: fe,
        w,
    })
}

/// Minimal model of an integral model whose discriminant has exactly the
/// given prime divisors, with local data at each bad prime.
fn minimal_fiber(t: Option<BigInt>, a: [BigInt; 5], primes: &[BigInt]) -> Result<FiberCurve> {
    let inv = invariants(&a);
    if inv.disc.is_zero() {
        return Err(Error::SingularFiber(
            t.map_or_else(|| format!("{a:?}"), |t| t.to_string()),
        ));
    }
    let five = BigInt::from(5);
    let mut u = BigInt::one();
    for p in primes {
        let k = if p >= &five {
            let q = |v: Option<u32>, d: u32| v.map_or(u32::MAX, |v| v / d);
            let vd = val_opt(&inv.disc, p).expect("Δ ≠ 0");
            q(val_opt(&inv.c4, p), 4).min(q(val_opt(&inv.c6, p), 6)).min(vd / 12)
        } else {
            tate(&a, p).min_exp
        };
        u *= num_traits::pow(p.clone(), k as usize);
    }
    let a = if u.is_one() {
        a
    } else {
        let u2 = &u * &u;
        let u4 = &u2 * &u2;
        model_from_c4c6(&exact(&inv.c4, &u4), &exact(&inv.c6, &(&u4 * &u2)))?
    };
    let inv = invariants(&a);
    let mut bad = Vec::new();
    for p in primes {
        if (&inv.disc % p).is_zero() {
            bad.push(local_data(&a, &inv, p, false)?);
        }
    }
    Ok(FiberCurve {
        t,
        a,
        c4: inv.c4,
        c6: inv.c6,
        disc: inv.disc,
        bad_primes: bad,
    })
}

/// Globally minimal curve from arbitrary integral a-invariants.
pub fn curve_from_ainvs(a: [BigInt; 5]) -> Result<FiberCurve> {
    let disc = invariants(&a).disc;
    if disc.is_zero() {
        return Err(Error::SingularFiber(format!("{a:?}")));
    }
    let primes: Vec<BigInt> = factorize(&disc)?.primes().cloned().collect();
    minimal_fiber(None, a, &primes)
}

/// The fiber at t, globally minimalized. Δ(t) is factored through the values
/// of the place polynomials.
pub fn instantiate_fiber(s: &Surface, t: &BigInt) -> Result<FiberCurve> {
    let a = s.a.clone().map(|ai| ai.eval_int(t));
    let mut primes: Vec<BigInt> = Vec::new();
    if !s.disc_content.is_one() {
        primes.extend(factorize(&s.disc_content)?.primes().cloned());
    }
    for place in s.finite_places() {
        let v = place.poly().expect("finite").eval_int(t);
        if v.is_zero() {
            return Err(Error::SingularFiber(t.to_string()));
        }
        primes.extend(factorize(&v)?.primes().cloned());
    }
    primes.sort();
    primes.dedup();
    minimal_fiber(Some(t.clone()), a, &primes)
}

/// Full Tate's algorithm on the curve's minimal model at any prime.
pub fn tate_local(curve: &FiberCurve, p: &BigInt) -> Result<FiberLocalData> {
    let inv = invariants(&curve.a);
    if !(&inv.disc % p).is_zero() {
        return Ok(FiberLocalData {
            prime: p.clone(),
            kodaira: Kodaira::I0,
            v_c4: val_opt(&inv.c4, p),
            v_c6: val_opt(&inv.c6, p),
            v_disc: 0,
            split: None,
            conductor_exponent: 0,
            w: 1,
        });
    }
    local_data(&curve.a, &inv, p, true)
}

pub fn local_root_number(data: &FiberLocalData, curve: &FiberCurve) -> Result<i8> {
    root_number_at(&data.prime, data.kodaira, data.split, &curve.c4, &curve.c6, &curve.disc)
}

/// −∏ W_p, the archimedean place contributing −1.
pub fn global_root_number_direct(curve: &FiberCurve) -> i8 {
    -curve.bad_primes.iter().map(|d| d.w).product::<i8>()
}

/// Direct root number of the fiber at t.
pub fn fiber_root_number(s: &Surface, t: &BigInt) -> Result<i8> {
    Ok(global_root_number_direct(&instantiate_fiber(s, t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::IntPoly;
    use crate::surface::build_surface;

    fn b(v: [i64; 5]) -> [BigInt; 5] {
        v.map(BigInt::from)
    }

    fn washington() -> Surface {
        let p = IntPoly::from_ints;
        build_surface([p(&[]), p(&[0, 1]), p(&[]), p(&[-3, -1]), p(&[1])]).unwrap()
    }

    #[test]
    fn washington_fiber_zero() {
        let c = instantiate_fiber(&washington(), &BigInt::zero()).unwrap();
        assert_eq!(c.a, b([0, 0, 0, -3, 1]));
        // Δ = 2^4 3^4, type II at both primes (frozen from an independent
        // computer-algebra run)
        assert_eq!(c.disc, BigInt::from(1296));
        let d = c.local(&BigInt::from(3)).unwrap();
        assert_eq!((d.v_c4, d.v_c6, d.v_disc), (Some(2), Some(3), 4));
        assert_eq!((d.kodaira, d.conductor_exponent), (Kodaira::II, 4));
        let d = c.local(&BigInt::from(2)).unwrap();
        assert_eq!((d.kodaira, d.conductor_exponent), (Kodaira::II, 4));
        assert_eq!(c.conductor(), BigInt::from(1296));
        assert_eq!(global_root_number_direct(&c), -1);
    }

    #[test]
    fn washington_signs() {
        let s = washington();
        for t in [5, -7, 1, 2, 100] {
            assert_eq!(fiber_root_number(&s, &BigInt::from(t)).unwrap(), -1, "t = {t}");
        }
    }

    #[test]
    fn scaled_model_minimalizes() {
        // y^2 = x^3 - x scaled by u = 6
        let a = b([0, 0, 0, -1, 0]);
        let u = 6i64;
        let scaled = b([0, 0, 0, -u.pow(4), 0]);
        let c1 = curve_from_ainvs(a).unwrap();
        let c2 = curve_from_ainvs(scaled).unwrap();
        assert_eq!(c1.a, c2.a);
        assert_eq!(c1.bad_primes, c2.bad_primes);
        assert_eq!(c1.conductor(), BigInt::from(32));
    }

    #[test]
    fn singular_fiber() {
        // Washington Δ vanishes nowhere on Z; y^2 = x^3 + T x^2 vanishes at every T,
        // so use y^2 = x^3 + T instead
        let p = IntPoly::from_ints;
        let s = build_surface([p(&[]), p(&[]), p(&[]), p(&[]), p(&[0, 1])]).unwrap();
        assert!(matches!(
            instantiate_fiber(&s, &BigInt::zero()),
            Err(Error::SingularFiber(_))
        ));
    }

    #[test]
    fn tate_known_types() {
        // 11a1: split I5 at 11
        let c = curve_from_ainvs(b([0, -1, 1, -10, -20])).unwrap();
        let d = c.local(&BigInt::from(11)).unwrap();
        assert_eq!((d.kodaira, d.split, d.w), (Kodaira::I(5), Some(true), -1));
        assert_eq!(global_root_number_direct(&c), 1);
        // 37a1: rank 1
        let c = curve_from_ainvs(b([0, 0, 1, -1, 0])).unwrap();
        assert_eq!(global_root_number_direct(&c), -1);
        // y^2 = x^3 - 2x: conductor 256, III at 2
        let c = curve_from_ainvs(b([0, 0, 0, -2, 0])).unwrap();
        assert_eq!(c.conductor(), BigInt::from(256));
    }

    #[test]
    fn fast_path_matches_tate() {
        let s = washington();
        for t in -30..30 {
            let c = instantiate_fiber(&s, &BigInt::from(t)).unwrap();
            for d in &c.bad_primes {
                assert_eq!(&tate_local(&c, &d.prime).unwrap(), d);
            }
        }
    }
}
