//! Exact integer arithmetic: factorization, p-adic splitting, quadratic
//! symbols, Liouville's function and squarefree decomposition.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 10_000;
const CACHE_CAP: usize = 1 << 16;
const CACHE_MIN_BITS: u64 = 40;

/// `value = sign * prod p^e`, primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            v *= num_traits::pow(p.clone(), *e as usize);
        }
        v
    }

    /// Ω(|n|), prime factors counted with multiplicity.
    pub fn big_omega(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn valuation(&self, p: &BigInt) -> u32 {
        self.factors.iter().find(|(q, _)| q == p).map(|(_, e)| *e).unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_LIMIT))
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut comp = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !comp[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                comp[j] = true;
                j += i;
            }
        }
    }
    out
}

fn cache() -> &'static Mutex<HashMap<BigInt, Factorization>> {
    static CACHE: OnceLock<Mutex<HashMap<BigInt, Factorization>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Snapshot of the memoized factorizations, for persisting between runs.
pub fn cache_entries() -> Vec<Factorization> {
    let c = cache().lock().unwrap();
    let mut v: Vec<_> = c.values().cloned().collect();
    v.sort_by(|a, b| a.value().cmp(&b.value()));
    v
}

/// Seed the cache; entries that do not reconstruct a consistent
/// factorization are ignored.
pub fn cache_insert(f: Factorization) {
    let ok = f.sign.abs() == 1
        && f.factors.windows(2).all(|w| w[0].0 < w[1].0)
        && f.factors.iter().all(|(p, e)| *e >= 1 && is_prime(p));
    if ok {
        let mut c = cache().lock().unwrap();
        if c.len() < CACHE_CAP {
            c.insert(f.value(), f);
        }
    }
}

pub fn factorize(n: &BigInt) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::Domain("factorize: n = 0".into()));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let m = n.magnitude();
    let big = m.bits() >= CACHE_MIN_BITS;
    if big {
        if let Some(f) = cache().lock().unwrap().get(n) {
            return Ok(f.clone());
        }
    }
    let mut primes: Vec<BigUint> = Vec::new();
    if let Some(x) = m.to_u64() {
        let mut v = Vec::new();
        factor_u64(x, &mut v);
        primes.extend(v.into_iter().map(BigUint::from));
    } else if m.bits() <= 126 {
        let mut v = Vec::new();
        factor_u128(m.to_u128().unwrap(), &mut v);
        primes.extend(v.into_iter().map(BigUint::from));
    } else {
        factor_biguint(m.clone(), &mut primes);
    }
    primes.sort();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        let p = BigInt::from_biguint(Sign::Plus, p);
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    let f = Factorization { sign, factors };
    if big {
        let mut c = cache().lock().unwrap();
        if c.len() < CACHE_CAP {
            c.insert(n.clone(), f.clone());
        }
    }
    Ok(f)
}

pub fn factorize_i64(n: i64) -> Result<Factorization> {
    factorize(&BigInt::from(n))
}

// ---------- u64 ----------

fn mulmod64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod64(r, a, m);
        }
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    r
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // deterministic for all 64-bit n
    'w: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod64(x, x, n);
            if x == n - 1 {
                continue 'w;
            }
        }
        return false;
    }
    true
}

fn brent64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| ((mulmod64(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let (mut y, mut r, mut q, m) = (2u64, 1u64, 1u64, 128u64);
        let (mut g, mut x, mut ys) = (1u64, 0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mulmod64(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn factor_u64(mut n: u64, out: &mut Vec<u64>) {
    for &p in small_primes() {
        if p * p > n {
            break;
        }
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
    }
    if n > 1 {
        split_u64(n, out);
    }
}

fn split_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = brent64(n);
    split_u64(d, out);
    split_u64(n / d, out);
}

// ---------- u128, Montgomery ----------

fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let (a1, a0) = (a >> 64, a & 0xffff_ffff_ffff_ffff);
    let (b1, b0) = (b >> 64, b & 0xffff_ffff_ffff_ffff);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & 0xffff_ffff_ffff_ffff) + (p10 & 0xffff_ffff_ffff_ffff);
    let lo = (p00 & 0xffff_ffff_ffff_ffff) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

struct Mont {
    n: u128,
    ninv: u128,
    r2: u128,
}

impl Mont {
    // n odd, n < 2^126
    fn new(n: u128) -> Self {
        let mut inv: u128 = 1;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        let ninv = inv.wrapping_neg();
        // r2 = 2^256 mod n by doubling
        let mut r = (u128::MAX % n + 1) % n;
        for _ in 0..128 {
            r = (r << 1) % n;
        }
        Mont { n, ninv, r2: r }
    }
    fn redc(&self, hi: u128, lo: u128) -> u128 {
        let m = lo.wrapping_mul(self.ninv);
        let (mh, ml) = mul_wide(m, self.n);
        let (_, carry) = lo.overflowing_add(ml);
        let t = hi + mh + carry as u128;
        if t >= self.n {
            t - self.n
        } else {
            t
        }
    }
    fn mul(&self, a: u128, b: u128) -> u128 {
        let (h, l) = mul_wide(a, b);
        self.redc(h, l)
    }
    fn to(&self, a: u128) -> u128 {
        self.mul(a % self.n, self.r2)
    }
    fn from(&self, a: u128) -> u128 {
        self.redc(0, a)
    }
    fn pow(&self, a: u128, mut e: u128) -> u128 {
        let mut r = self.to(1);
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }
}

fn is_prime_u128(n: u128) -> bool {
    if n <= u64::MAX as u128 {
        return is_prime_u64(n as u64);
    }
    if n % 2 == 0 {
        return false;
    }
    let mt = Mont::new(n);
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let one = mt.to(1);
    let mone = mt.to(n - 1);
    // the first 13 prime bases are deterministic below 3.3e24; the rest
    // give overwhelming confidence above that
    'w: for &a in &[
        2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ] {
        let mut x = mt.pow(mt.to(a), d);
        if x == one || x == mone {
            continue;
        }
        for _ in 1..s {
            x = mt.mul(x, x);
            if x == mone {
                continue 'w;
            }
        }
        return false;
    }
    true
}

fn gcd128(a: u128, b: u128) -> u128 {
    a.gcd(&b)
}

fn brent128(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let mt = Mont::new(n);
    let mut c = mt.to(1);
    loop {
        let f = |x: u128| {
            let y = mt.mul(x, x) + c;
            if y >= n {
                y - n
            } else {
                y
            }
        };
        let (mut y, mut r, mut q, m) = (mt.to(2), 1u64, mt.to(1), 256u64);
        let (mut g, mut x, mut ys) = (1u128, 0u128, 0u128);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mt.mul(q, x.abs_diff(y));
                }
                g = gcd128(mt.from(q), n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd128(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c = mt.to(mt.from(c) + 1);
    }
}

fn factor_u128(mut n: u128, out: &mut Vec<u128>) {
    for &p in small_primes() {
        let p = p as u128;
        if p * p > n {
            break;
        }
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
    }
    split_u128(n, out);
}

fn split_u128(n: u128, out: &mut Vec<u128>) {
    if n == 1 {
        return;
    }
    if n <= u64::MAX as u128 {
        let mut v = Vec::new();
        split_u64(n as u64, &mut v);
        out.extend(v.into_iter().map(|x| x as u128));
        return;
    }
    if is_prime_u128(n) {
        out.push(n);
        return;
    }
    if let Some((root, k)) = perfect_power(&BigUint::from(n)) {
        let root = root.to_u128().unwrap();
        for _ in 0..k {
            split_u128(root, out);
        }
        return;
    }
    let d = brent128(n);
    split_u128(d, out);
    split_u128(n / d, out);
}

// ---------- arbitrary size ----------

/// `n = root^k` with k ≥ 2 maximal over prime exponents tried; rho is
/// hopeless on prime powers.
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    for k in small_primes().iter().map(|&p| p as u32) {
        if k > bits {
            break;
        }
        let r = n.nth_root(k);
        if r.pow(k) == *n && r > BigUint::one() {
            return Some((r, k));
        }
    }
    None
}

fn is_prime_biguint(n: &BigUint) -> bool {
    if n.bits() <= 126 {
        return is_prime_u128(n.to_u128().unwrap());
    }
    if n.is_even() {
        return false;
    }
    for &p in &small_primes()[..100] {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'w: for &a in &small_primes()[..24] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'w;
            }
        }
        return false;
    }
    true
}

fn brent_big(n: &BigUint) -> BigUint {
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = BigUint::zero();
        let mut ys = BigUint::zero();
        let (mut r, m) = (1u64, 128u64);
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let d = if x > y { &x - &y } else { &y - &x };
                    q = (q * d) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let d = if x > ys { &x - &ys } else { &ys - &x };
                g = d.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

fn factor_biguint(mut n: BigUint, out: &mut Vec<BigUint>) {
    for &p in small_primes() {
        while (&n % p).is_zero() {
            out.push(BigUint::from(p));
            n /= p;
        }
    }
    split_big(n, out);
}

fn split_big(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if n.bits() <= 126 {
        let mut v = Vec::new();
        split_u128(n.to_u128().unwrap(), &mut v);
        out.extend(v.into_iter().map(BigUint::from));
        return;
    }
    if is_prime_biguint(&n) {
        out.push(n);
        return;
    }
    if let Some((root, k)) = perfect_power(&n) {
        for _ in 0..k {
            split_big(root.clone(), out);
        }
        return;
    }
    let d = brent_big(&n);
    let q = &n / &d;
    split_big(d, out);
    split_big(q, out);
}

pub fn is_prime(n: &BigInt) -> bool {
    !n.is_negative() && is_prime_biguint(n.magnitude())
}

pub fn next_prime(n: u64) -> u64 {
    let mut q = n + 1;
    while !is_prime_u64(q) {
        q += 1;
    }
    q
}

// ---------- valuations and symbols ----------

/// `n = p^v * unit` with `p ∤ unit`; the sign stays on the unit.
pub fn padic_split(n: &BigInt, p: &BigInt) -> Result<(u32, BigInt)> {
    if n.is_zero() {
        return Err(Error::Domain("padic_split: n = 0".into()));
    }
    if p < &BigInt::from(2) {
        return Err(Error::Domain(format!("padic_split: bad prime {p}")));
    }
    let mut v = 0;
    let mut u = n.clone();
    loop {
        let (q, r) = u.div_rem(p);
        if !r.is_zero() {
            break;
        }
        u = q;
        v += 1;
    }
    Ok((v, u))
}

/// Valuation that returns `None` for zero.
pub fn val(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        None
    } else {
        Some(padic_split(n, &BigInt::from(p)).unwrap().0)
    }
}

/// Classical Jacobi symbol (a/b), b odd positive.
pub fn jacobi(a: &BigInt, b: &BigInt) -> Result<i8> {
    if !b.is_positive() || b.is_even() {
        return Err(Error::Domain(format!("jacobi: modulus {b} must be odd positive")));
    }
    let mut a = a.mod_floor(b);
    let mut b = b.clone();
    let mut s = 1i8;
    let three = BigInt::from(3);
    let eight = BigInt::from(8);
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            a >>= tz;
            let r = (&b % &eight).to_u8().unwrap();
            if tz % 2 == 1 && (r == 3 || r == 5) {
                s = -s;
            }
        }
        if (&a % 4u8) == three && (&b % 4u8) == three {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
        a = a.mod_floor(&b);
    }
    Ok(if b.is_one() { s } else { 0 })
}

pub fn jacobi_i64(a: i64, b: u64) -> i8 {
    jacobi(&BigInt::from(a), &BigInt::from(b)).expect("odd modulus")
}

/// Legendre symbol of the prime-to-p part of `a`, as used for a_(p).
pub fn unit_legendre(a: &BigInt, p: &BigInt) -> i8 {
    let (_, u) = padic_split(a, p).expect("nonzero");
    jacobi(&u, p).expect("odd prime")
}

/// (a/b)_δ over an already factored b.
pub fn modified_jacobi_fact(a: &BigInt, b: &Factorization, delta: &BigInt) -> Result<i8> {
    if a.is_zero() {
        return Err(Error::Domain("modified_jacobi: a = 0".into()));
    }
    if delta.is_odd() {
        return Err(Error::Domain("modified_jacobi: δ must be even".into()));
    }
    let mut s = 1i8;
    for (p, e) in &b.factors {
        if (delta % p).is_zero() || e % 2 == 0 {
            continue;
        }
        s *= unit_legendre(a, p);
    }
    Ok(s)
}

pub fn modified_jacobi(a: &BigInt, b: &BigInt, delta: &BigInt) -> Result<i8> {
    if b.is_zero() {
        return Err(Error::Domain("modified_jacobi: b = 0".into()));
    }
    modified_jacobi_fact(a, &factorize(b)?, delta)
}

pub fn liouville(n: &BigInt) -> Result<i8> {
    let f = factorize(n)?;
    Ok(if f.big_omega() % 2 == 0 { 1 } else { -1 })
}

/// `n = c^2 * l` with `l` squarefree carrying the sign.
pub fn squarefree_decompose(n: &BigInt) -> Result<(BigInt, BigInt)> {
    let f = factorize(n)?;
    let mut c = BigInt::one();
    let mut l = BigInt::from(f.sign);
    for (p, e) in &f.factors {
        c *= num_traits::pow(p.clone(), (*e / 2) as usize);
        if e % 2 == 1 {
            l *= p;
        }
    }
    Ok((c, l))
}

/// Hilbert symbol (a, b)_p for p prime (p = 2 allowed), a, b nonzero.
pub fn hilbert(a: &BigInt, b: &BigInt, p: u64) -> i8 {
    let pb = BigInt::from(p);
    let (alpha, u) = padic_split(a, &pb).expect("nonzero");
    let (beta, v) = padic_split(b, &pb).expect("nonzero");
    if p == 2 {
        let m8 = |x: &BigInt| x.mod_floor(&BigInt::from(8)).to_u8().unwrap();
        let eps = |x: u8| ((x as i32 - 1) / 2 % 2) as u32;
        let omega = |x: u8| if x == 3 || x == 5 { 1u32 } else { 0 };
        let (u8_, v8) = (m8(&u), m8(&v));
        let e = eps(u8_) * eps(v8) + alpha * omega(v8) + beta * omega(u8_);
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let mut s: i8 = if (alpha * beta) % 2 == 1 && p % 4 == 3 { -1 } else { 1 };
        if beta % 2 == 1 {
            s *= jacobi(&u, &pb).unwrap();
        }
        if alpha % 2 == 1 {
            s *= jacobi(&v, &pb).unwrap();
        }
        s
    }
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorizations() {
        let f = factorize(&big(1)).unwrap();
        assert_eq!((f.sign, f.factors.len()), (1, 0));
        let f = factorize(&big(-12)).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.factors, vec![(big(2), 2), (big(3), 1)]);
        let p = big(1_000_000_007);
        assert_eq!(factorize(&p).unwrap().factors, vec![(p.clone(), 1)]);
        assert!(factorize(&big(0)).is_err());
    }

    #[test]
    fn large_semiprimes() {
        // 1e12+39 and 1e12+61 are prime; product sits in the u128 path
        let p = BigInt::from(1_000_000_000_039u64);
        let q = BigInt::from(1_000_000_000_061u64);
        let f = factorize(&(&p * &q)).unwrap();
        assert_eq!(f.factors, vec![(p.clone(), 1), (q.clone(), 1)]);
        // beyond 126 bits
        let r = BigInt::from(18_446_744_073_709_551_557u64);
        let n = &p * &q * &r * &r;
        let f = factorize(&n).unwrap();
        assert_eq!(f.value(), n);
        assert_eq!(f.factors.len(), 3);
    }

    #[test]
    fn padic_examples() {
        assert_eq!(padic_split(&big(50), &big(5)).unwrap(), (2, big(2)));
        assert_eq!(padic_split(&big(7), &big(5)).unwrap(), (0, big(7)));
        assert_eq!(padic_split(&big(-54), &big(3)).unwrap(), (3, big(-2)));
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(&big(-1), &big(7)).unwrap(), -1);
        assert_eq!(jacobi(&big(12345), &big(1)).unwrap(), 1);
        assert_eq!(jacobi(&big(5), &big(7)).unwrap(), -1);
        assert_eq!(jacobi(&big(6), &big(9)).unwrap(), 0);
        assert!(jacobi(&big(1), &big(8)).is_err());
    }

    #[test]
    fn modified_examples() {
        assert_eq!(modified_jacobi(&big(5), &big(7), &big(2)).unwrap(), -1);
        assert_eq!(modified_jacobi(&big(5), &big(-36), &big(6)).unwrap(), 1);
        // 3 | b and 3 | a: prime-to-3 part of a is used
        assert_eq!(modified_jacobi(&big(6), &big(3), &big(2)).unwrap(), jacobi_i64(2, 3));
    }

    #[test]
    fn liouville_and_squarefree() {
        assert_eq!(liouville(&big(1)).unwrap(), 1);
        assert_eq!(liouville(&big(8)).unwrap(), -1);
        assert_eq!(liouville(&big(12)).unwrap(), -1);
        assert_eq!(squarefree_decompose(&big(720)).unwrap(), (big(12), big(5)));
        assert_eq!(squarefree_decompose(&big(-27)).unwrap(), (big(3), big(-3)));
        assert_eq!(squarefree_decompose(&big(30)).unwrap(), (big(1), big(30)));
    }

    #[test]
    fn hilbert_symbols() {
        assert_eq!(hilbert(&big(-1), &big(-1), 2), -1);
        assert_eq!(hilbert(&big(-1), &big(3), 2), -1);
        assert_eq!(hilbert(&big(-1), &big(5), 2), 1);
        assert_eq!(hilbert(&big(-1), &big(3), 3), -1);
        assert_eq!(hilbert(&big(-1), &big(9), 3), 1);
        assert_eq!(hilbert(&big(2), &big(7), 7), 1);
        assert_eq!(hilbert(&big(3), &big(7), 7), -1);
    }
}
