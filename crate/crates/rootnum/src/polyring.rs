//! Univariate polynomials over Q with exact arithmetic, factorization into
//! primitive irreducibles over Z (Zassenhaus), resultants and discriminants.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::intarith::is_prime_u64;

/// Dense polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigRational>,
}

fn rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| rat(BigInt::from(x))).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        Self::new(c.iter().cloned().map(rat).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// The indeterminate T.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients; panics if some coefficient is not integral.
    pub fn int_coeffs(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral coefficient {c}");
                c.to_integer()
            })
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// self(q(T)).
    pub fn compose(&self, q: &IntPoly) -> Self {
        let mut r = Self::zero();
        for c in self.coeffs.iter().rev() {
            r = &(&r * q) + &Self::constant(c.clone());
        }
        r
    }

    pub fn eval_rat(&self, t: &BigRational) -> BigRational {
        let mut r = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            r = r * t + c;
        }
        r
    }

    pub fn evaluate(&self, t: &BigInt) -> BigRational {
        self.eval_rat(&rat(t.clone()))
    }

    /// Horner evaluation for integer-coefficient polynomials.
    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        let mut r = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            debug_assert!(c.is_integer());
            r = r * t + c.numer();
        }
        r
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval_int(&BigInt::from(t))
    }

    /// Quotient and remainder over Q.
    pub fn divrem(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if d.is_zero() {
            return Err(Error::Domain("division by zero polynomial".into()));
        }
        let dd = d.deg();
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = &r[i + j] - &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, d: &IntPoly) -> IntPoly {
        self.divrem(d).expect("nonzero divisor").1
    }

    pub fn divides(&self, f: &IntPoly) -> bool {
        !self.is_zero() && f.rem(self).is_zero()
    }

    pub fn monic(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(BigRational::one() / self.lc()))
    }

    /// Monic gcd over Q.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// P = content * primitive; primitive has integer coprime coefficients
    /// and positive leading coefficient.
    pub fn content_primitive(&self) -> Result<(BigRational, IntPoly)> {
        if self.is_zero() {
            return Err(Error::Domain("content of zero polynomial".into()));
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * rat(den.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = Self::from_bigints(&ints.iter().map(|c| c / &g).collect::<Vec<_>>());
        Ok((BigRational::new(g, den), prim))
    }

    pub fn primitive(&self) -> IntPoly {
        self.content_primitive().expect("nonzero").1
    }

    /// Leading coefficient sign made positive without changing content.
    pub fn sign_normalized(&self) -> IntPoly {
        if self.lc().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Valuation at an irreducible polynomial; `None` for the zero polynomial.
    pub fn valuation_at(&self, p: &IntPoly) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut f = self.clone();
        loop {
            let (q, r) = f.divrem(p).expect("nonzero");
            if !r.is_zero() {
                return Some(v);
            }
            f = q;
            v += 1;
        }
    }

    /// Canonical order: degree, then coefficients from the constant term
    /// compared by absolute value and then sign (negative first).
    pub fn canonical_cmp(&self, other: &IntPoly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                let o = a.abs().cmp(&b.abs()).then_with(|| a.signum().cmp(&b.signum()));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }

    /// Space-separated ascending coefficients.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = a.is_one();
            let cs = if a.is_integer() {
                a.to_string()
            } else {
                format!("({a})")
            };
            match i {
                0 => write!(f, "{cs}")?,
                1 if unit => write!(f, "T")?,
                1 => write!(f, "{cs}*T")?,
                _ if unit => write!(f, "T^{i}")?,
                _ => write!(f, "{cs}*T^{i}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, o: IntPoly) -> IntPoly {
                (&self).$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Classical resultant over Q.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigRational> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::Domain("resultant of zero polynomial".into()));
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut acc = BigRational::one();
    loop {
        let (m, n) = (a.deg(), b.deg());
        if n == 0 {
            return Ok(acc * num_traits::pow(b.lc(), m));
        }
        if m == 0 {
            return Ok(acc * num_traits::pow(a.lc(), n));
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Ok(BigRational::zero());
        }
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(b.lc(), m - r.deg());
        a = b;
        b = r;
    }
}

pub fn discriminant(p: &IntPoly) -> Result<BigRational> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::Domain("discriminant of a constant".into())),
    };
    let r = resultant(p, &p.derivative())? / p.lc();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

/// Irreducible primitive factors with multiplicities, in canonical order.
/// `P = content * prod f^m` with the content returned first.
pub fn factor_with_content(p: &IntPoly) -> Result<(BigRational, Vec<(IntPoly, u32)>)> {
    let (content, prim) = p.content_primitive()?;
    let mut out: Vec<(IntPoly, u32)> = Vec::new();
    for (g, m) in squarefree_parts(&prim) {
        for f in zassenhaus(&g) {
            out.push((f, m));
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    // sign bookkeeping: every factor has positive lc, so the product is
    // already positive-lc; content carries the sign of P
    Ok((content, out))
}

pub fn factor_irreducible(p: &IntPoly) -> Result<Vec<(IntPoly, u32)>> {
    Ok(factor_with_content(p)?.1)
}

/// Yun's algorithm on a primitive polynomial; returns primitive parts.
fn squarefree_parts(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let d = f.derivative();
    let mut a = f.gcd(&d);
    let mut b = f.divrem(&a).unwrap().0;
    let mut c = d.divrem(&a).unwrap().0;
    let mut dd = &c - &b.derivative();
    let mut i = 1;
    while b.deg() > 0 {
        a = b.gcd(&dd);
        if a.deg() > 0 {
            out.push((a.primitive(), i));
        }
        b = b.divrem(&a).unwrap().0;
        c = dd.divrem(&a).unwrap().0;
        dd = &c - &b.derivative();
        i += 1;
    }
    out
}

// ---------- arithmetic mod a small prime ----------

type Fp = Vec<u64>;

fn fp_trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_inv(a: u64, p: u64) -> u64 {
    let (mut r, mut e, mut b) = (1u64, p - 2, a % p);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    fp_trim(c)
}

fn fp_divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = b.len() - 1;
    let inv = fp_inv(*b.last().unwrap(), p);
    let mut r = a.clone();
    if r.len() <= db {
        return (vec![], fp_trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db] * inv % p;
        q[i] = c;
        if c != 0 {
            for (j, y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + p - c * y % p) % p;
            }
        }
    }
    r.truncate(db);
    (fp_trim(q), fp_trim(r))
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    let inv = fp_inv(*a.last().unwrap(), p);
    a.iter().map(|x| x * inv % p).collect()
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        fp_monic(&a, p)
    }
}

fn fp_powmod(base: &Fp, e: &BigUint, m: &Fp, p: u64) -> Fp {
    let mut r: Fp = vec![1];
    let b = fp_divrem(base, m, p).1;
    for i in (0..e.bits()).rev() {
        r = fp_divrem(&fp_mul(&r, &r, p), m, p).1;
        if e.bit(i) {
            r = fp_divrem(&fp_mul(&r, &b, p), m, p).1;
        }
    }
    r
}

fn fp_derivative(a: &Fp, p: u64) -> Fp {
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

/// Monic irreducible factors of a squarefree monic polynomial mod odd p.
fn fp_factor(f: &Fp, p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let mut i = 1usize;
    let pb = BigUint::from(p);
    while f.len() - 1 >= 2 * i {
        h = fp_powmod(&h, &pb, &f, p);
        let g = fp_gcd(&fp_sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            fp_edf(&g, i, p, rng, &mut out);
            f = fp_divrem(&f, &g, p).0;
            h = fp_divrem(&h, &f, p).1;
        }
        i += 1;
    }
    if f.len() > 1 {
        out.push(fp_monic(&f, p));
    }
    out
}

fn fp_edf(g: &Fp, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
    let n = g.len() - 1;
    if n == d {
        out.push(g.clone());
        return;
    }
    let e = (num_traits::pow(BigUint::from(p), d) - 1u32) / 2u32;
    loop {
        let a: Fp = fp_trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &e, g, p), &vec![1], p);
        let u = fp_gcd(&b, g, p);
        if u.len() > 1 && u.len() < g.len() {
            let v = fp_divrem(g, &u, p).0;
            fp_edf(&u, d, p, rng, out);
            fp_edf(&fp_monic(&v, p), d, p, rng, out);
            return;
        }
    }
}

// ---------- Hensel lifting over Z/m ----------

type Zp = Vec<BigInt>;

fn zm_trim(mut a: Zp) -> Zp {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn zm_red(a: &Zp, m: &BigInt) -> Zp {
    zm_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zm_add(a: &Zp, b: &Zp, m: &BigInt) -> Zp {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zm_red(
        &(0..n)
            .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
            .collect(),
        m,
    )
}

fn zm_sub(a: &Zp, b: &Zp, m: &BigInt) -> Zp {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zm_red(
        &(0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
        m,
    )
}

fn zm_mul(a: &Zp, b: &Zp, m: &BigInt) -> Zp {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    zm_red(&c, m)
}

/// Division by a monic polynomial modulo m.
fn zm_divrem_monic(a: &Zp, b: &Zp, m: &BigInt) -> (Zp, Zp) {
    let db = b.len() - 1;
    let mut r = a.clone();
    if r.len() <= db {
        return (vec![], zm_red(&r, m));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].mod_floor(m);
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                r[i + j] = (&r[i + j] - &c * y).mod_floor(m);
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    (zm_red(&q, m), zm_red(&r, m))
}

/// Extended Euclid mod p: s*g + t*h = 1.
fn fp_bezout(g: &Fp, h: &Fp, p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], vec![]);
    let (mut t0, mut t1): (Fp, Fp) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let inv = fp_inv(r0[0], p);
    (
        s0.iter().map(|x| x * inv % p).collect(),
        t0.iter().map(|x| x * inv % p).collect(),
    )
}

fn to_zp(a: &Fp) -> Zp {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

/// Lift f ≡ g*h (mod p), h monic, to modulus >= target. Returns (g, h) mod target.
fn hensel_pair(f: &Zp, g: &Fp, h: &Fp, p: u64, target: &BigInt) -> (Zp, Zp) {
    let (s, t) = fp_bezout(g, h, p);
    let (mut g, mut h, mut s, mut t) = (to_zp(g), to_zp(h), to_zp(&s), to_zp(&t));
    let mut m = BigInt::from(p);
    while &m < target {
        let m2 = &m * &m;
        let e = zm_sub(f, &zm_mul(&g, &h, &m2), &m2);
        let (q, r) = zm_divrem_monic(&zm_mul(&s, &e, &m2), &h, &m2);
        let g2 = zm_add(&zm_add(&g, &zm_mul(&t, &e, &m2), &m2), &zm_mul(&q, &g, &m2), &m2);
        let h2 = zm_add(&h, &r, &m2);
        let b = zm_sub(
            &zm_add(&zm_mul(&s, &g2, &m2), &zm_mul(&t, &h2, &m2), &m2),
            &vec![BigInt::one()],
            &m2,
        );
        let (c, d) = zm_divrem_monic(&zm_mul(&s, &b, &m2), &h2, &m2);
        s = zm_sub(&s, &d, &m2);
        t = zm_sub(&zm_sub(&t, &zm_mul(&t, &b, &m2), &m2), &zm_mul(&c, &g2, &m2), &m2);
        g = g2;
        h = h2;
        m = m2;
    }
    (zm_red(&g, target), zm_red(&h, target))
}

fn symmetric(a: &Zp, m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    a.iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect()
}

fn int_poly_divides_exact(d: &IntPoly, f: &IntPoly) -> Option<IntPoly> {
    let (q, r) = f.divrem(d).ok()?;
    (r.is_zero() && q.is_integral()).then_some(q)
}

/// Irreducible factors of a squarefree primitive integer polynomial.
fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    let fc = f.int_coeffs();
    let lc = fc.last().unwrap().clone();
    // pick a prime keeping the degree and squarefreeness
    let mut p = 3u64;
    let fp = loop {
        if is_prime_u64(p) && !(&lc % p).is_zero() {
            let fp: Fp = fp_trim(
                fc.iter()
                    .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap())
                    .collect(),
            );
            let g = fp_gcd(&fp, &fp_derivative(&fp, p), p);
            if g.len() == 1 {
                break fp;
            }
        }
        p += 2;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut locals = fp_factor(&fp_monic(&fp, p), p, &mut rng);
    if locals.len() == 1 {
        return vec![f.clone()];
    }
    locals.sort();
    // Mignotte-style bound on factor coefficients
    let norm: BigInt = fc.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = (BigInt::one() << (n + 1)) * norm * lc.abs() * 2;
    let mut target = BigInt::from(p);
    while target < bound {
        target *= p;
    }
    // lift one monic local factor at a time off the cofactor
    let mut lifted: Vec<Zp> = Vec::new();
    let mut rest: Zp = zm_red(&fc, &target);
    let lcp = (&lc).mod_floor(&BigInt::from(p)).to_u64().unwrap();
    for i in 0..locals.len() - 1 {
        let mut cof: Fp = vec![lcp];
        for u in &locals[i + 1..] {
            cof = fp_mul(&cof, u, p);
        }
        let (g, h) = hensel_pair(&rest, &cof, &locals[i], p, &target);
        lifted.push(h);
        rest = g;
    }
    let lcinv = {
        // rest ≡ lc * u_last; make it monic
        let m = &target;
        let inv = lc.modinv(m).expect("lc coprime to p");
        zm_red(&rest.iter().map(|c| c * &inv).collect(), m)
    };
    lifted.push(lcinv);

    // recombination
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut remaining: Vec<Zp> = lifted;
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut found = false;
        let idx: Vec<usize> = (0..remaining.len()).collect();
        for comb in combinations(&idx, s) {
            let glc = g.int_coeffs().last().unwrap().clone();
            let mut prod: Zp = vec![glc.clone()];
            for &i in &comb {
                prod = zm_mul(&prod, &remaining[i], &target);
            }
            let cand = IntPoly::from_bigints(&symmetric(&prod, &target)).primitive();
            if let Some(q) = int_poly_divides_exact(&cand, &g) {
                out.push(cand);
                g = q.primitive();
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !comb.contains(i))
                    .map(|(_, x)| x)
                    .collect();
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if g.deg() > 0 {
        out.push(g);
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// True iff P is irreducible over Q (P of positive degree).
pub fn is_irreducible(p: &IntPoly) -> bool {
    match factor_irreducible(p) {
        Ok(f) => f.len() == 1 && f[0].1 == 1 && p.deg() >= 1,
        Err(_) => false,
    }
}

/// Lagrange interpolation through (x_i, y_i).
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> IntPoly {
    let mut acc = IntPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut term = IntPoly::constant(yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                let lin = IntPoly::new(vec![-xj.clone(), BigRational::one()]);
                term = (&term * &lin).scale(&(BigRational::one() / (xi - xj)));
            }
        }
        acc = &acc + &term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn content_examples() {
        let (c, q) = p(&[2, 4, 6]).content_primitive().unwrap();
        assert_eq!((c, q), (r(2, 1), p(&[1, 2, 3])));
        let half = IntPoly::new(vec![r(-3, 1), r(3, 2)]);
        let (c, q) = half.content_primitive().unwrap();
        assert_eq!((c, q), (r(3, 2), p(&[-2, 1])));
        assert!(IntPoly::zero().content_primitive().is_err());
    }

    #[test]
    fn factor_examples() {
        let f = factor_irreducible(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(f, vec![(p(&[0, 1]), 1), (p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        let f = factor_irreducible(&p(&[9, 3, 1])).unwrap();
        assert_eq!(f, vec![(p(&[9, 3, 1]), 1)]);
        let sq = &p(&[1, 0, 1]) * &p(&[1, 0, 1]);
        assert_eq!(factor_irreducible(&sq).unwrap(), vec![(p(&[1, 0, 1]), 2)]);
        // x^4 + 1 is irreducible but splits mod every prime
        assert_eq!(factor_irreducible(&p(&[1, 0, 0, 0, 1])).unwrap().len(), 1);
        // (2x^2+3)(3x^3-x+5)(x-7)
        let g = &(&p(&[3, 0, 2]) * &p(&[5, -1, 0, 3])) * &p(&[-7, 1]);
        let f = factor_irreducible(&g).unwrap();
        assert_eq!(f, vec![(p(&[-7, 1]), 1), (p(&[3, 0, 2]), 1), (p(&[5, -1, 0, 3]), 1)]);
    }

    #[test]
    fn resultant_examples() {
        let q = p(&[5, 0, 3, 1]);
        assert_eq!(resultant(&p(&[-4, 1]), &q).unwrap(), q.evaluate(&4.into()));
        assert_eq!(resultant(&p(&[0, 1]), &p(&[-1, 1])).unwrap(), r(-1, 1));
        assert_eq!(resultant(&q, &q).unwrap(), r(0, 1));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p(&[9, 3, 1])).unwrap(), r(-27, 1));
        assert_eq!(discriminant(&p(&[-1, 0, 1])).unwrap(), r(4, 1));
        assert_eq!(discriminant(&p(&[1, -2, 1])).unwrap(), r(0, 1));
        // cubic x^3 + a x + b: -4a^3 - 27b^2
        assert_eq!(discriminant(&p(&[1, -1, 0, 1])).unwrap(), r(4 - 27, 1));
        assert!(discriminant(&p(&[3])).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let f = p(&[9, 3, 1]);
        assert_eq!(f.evaluate(&0.into()), r(9, 1));
        assert_eq!(f.evaluate(&(-3).into()), r(9, 1));
        assert_eq!(IntPoly::zero().evaluate(&5.into()), r(0, 1));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[9, 3, 1]).to_string(), "T^2 + 3*T + 9");
        assert_eq!(p(&[0, -1]).to_string(), "-T");
    }
}
