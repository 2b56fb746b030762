//! Elliptic surfaces over Q(T): invariants, bad places and their Kodaira
//! types, insipidity, and the integer δ.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::polyring::{self, IntPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kodaira {
    I0,
    /// I_m, m ≥ 1
    I(u32),
    II,
    III,
    IV,
    I0s,
    /// I_m*, m ≥ 1
    Is(u32),
    IVs,
    IIIs,
    IIs,
}

impl Kodaira {
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Kodaira::I(_))
    }

    pub fn is_additive(self) -> bool {
        !matches!(self, Kodaira::I0 | Kodaira::I(_))
    }

    /// ε ∈ {−1, −2, −3} for additive types.
    pub fn epsilon(self) -> Option<i8> {
        use Kodaira::*;
        match self {
            II | IIs | I0s | Is(_) => Some(-1),
            III | IIIs => Some(-2),
            IV | IVs => Some(-3),
            I0 | I(_) => None,
        }
    }

    /// Euler number of the singular fiber.
    pub fn euler(self) -> u32 {
        use Kodaira::*;
        match self {
            I0 => 0,
            I(n) => n,
            II => 2,
            III => 3,
            IV => 4,
            I0s => 6,
            Is(n) => n + 6,
            IVs => 8,
            IIIs => 9,
            IIs => 10,
        }
    }

    /// Root-of-unity order d with μ_d deciding insipidity (3 or 4).
    pub fn mu_order(self) -> Option<u32> {
        use Kodaira::*;
        match self {
            II | IIs | IV | IVs => Some(3),
            III | IIIs => Some(4),
            _ => None,
        }
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Kodaira::*;
        match self {
            I0 => write!(f, "I0"),
            I(n) => write!(f, "I{n}"),
            II => write!(f, "II"),
            III => write!(f, "III"),
            IV => write!(f, "IV"),
            I0s => write!(f, "I0*"),
            Is(n) => write!(f, "I{n}*"),
            IVs => write!(f, "IV*"),
            IIIs => write!(f, "III*"),
            IIs => write!(f, "II*"),
        }
    }
}

impl FromStr for Kodaira {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use Kodaira::*;
        let bad = || Error::Domain(format!("not a Kodaira symbol: {s}"));
        Ok(match s {
            "I0" => I0,
            "II" => II,
            "III" => III,
            "IV" => IV,
            "I0*" => I0s,
            "IV*" => IVs,
            "III*" => IIIs,
            "II*" => IIs,
            _ => {
                let body = s.strip_prefix('I').ok_or_else(bad)?;
                let (num, star) = match body.strip_suffix('*') {
                    Some(n) => (n, true),
                    None => (body, false),
                };
                let n: u32 = num.parse().map_err(|_| bad())?;
                if n == 0 {
                    return Err(bad());
                }
                if star {
                    Is(n)
                } else {
                    I(n)
                }
            }
        })
    }
}

/// Kodaira type in residue characteristic 0 from the valuations of c4, c6, Δ
/// (`None` = the invariant vanishes identically).
pub fn tame_kodaira(v4: Option<u32>, v6: Option<u32>, vd: u32) -> Result<Kodaira> {
    let (mut v4, mut v6, mut vd) = (v4, v6, vd);
    while v4.is_none_or(|v| v >= 4) && v6.is_none_or(|v| v >= 6) && vd >= 12 {
        v4 = v4.map(|v| v - 4);
        v6 = v6.map(|v| v - 6);
        vd -= 12;
    }
    if vd == 0 {
        return Ok(Kodaira::I0);
    }
    if v4 == Some(0) {
        return Ok(Kodaira::I(vd));
    }
    if vd == 6 {
        return Ok(Kodaira::I0s);
    }
    if let Some(a) = v4 {
        if 3 * a < vd {
            return Ok(Kodaira::Is(vd - 6));
        }
    }
    Ok(match vd {
        2 => Kodaira::II,
        3 => Kodaira::III,
        4 => Kodaira::IV,
        8 => Kodaira::IVs,
        9 => Kodaira::IIIs,
        10 => Kodaira::IIs,
        _ => return Err(Error::Domain(format!("inconsistent valuations ({v4:?}, {v6:?}, {vd})"))),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceKind {
    Finite(IntPoly),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Place {
    pub kind: PlaceKind,
    pub kodaira: Kodaira,
    pub epsilon: Option<i8>,
    pub insipid: bool,
    pub multiplicative: bool,
    /// Valuations of (c4, c6, Δ) before 12th-power reduction.
    pub valuations: (Option<u32>, Option<u32>, u32),
}

impl Place {
    pub fn poly(&self) -> Option<&IntPoly> {
        match &self.kind {
            PlaceKind::Finite(p) => Some(p),
            PlaceKind::Infinity => None,
        }
    }

    pub fn label(&self) -> String {
        match &self.kind {
            PlaceKind::Finite(p) => p.to_string(),
            PlaceKind::Infinity => "-deg".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Surface {
    /// a1, a2, a3, a4, a6
    pub a: [IntPoly; 5],
    pub c4: IntPoly,
    pub c6: IntPoly,
    pub disc: IntPoly,
    pub is_isotrivial: bool,
    /// Finite places in canonical order, then the place at infinity.
    pub places: Vec<Place>,
    pub delta: BigInt,
    pub m: IntPoly,
    pub b: IntPoly,
    /// Δ = disc_content · ∏ P^vP(Δ) over the finite places.
    pub disc_content: BigInt,
}

/// c4, c6 and Δ of a long Weierstrass model over Z[T].
pub(crate) fn poly_invariants(a: &[IntPoly; 5]) -> (IntPoly, IntPoly, IntPoly) {
    let k = |n: i64| IntPoly::from_ints(&[n]);
    let [a1, a2, a3, a4, a6] = a;
    let b2 = &(a1 * a1) + &(&k(4) * a2);
    let b4 = &(&k(2) * a4) + &(a1 * a3);
    let b6 = &(a3 * a3) + &(&k(4) * a6);
    let c4 = &(&b2 * &b2) - &(&k(24) * &b4);
    let c6 = &(&(&k(36) * &(&b2 * &b4)) - &(&(&b2 * &b2) * &b2)) - &(&k(216) * &b6);
    let disc = (&(&(&c4 * &c4) * &c4) - &(&c6 * &c6)).scale(&BigRational::new(BigInt::one(), BigInt::from(1728)));
    (c4, c6, disc)
}

fn numerator_content(p: &IntPoly) -> BigInt {
    if p.is_zero() {
        return BigInt::one();
    }
    let (c, _) = p.content_primitive().expect("nonzero");
    c.numer().abs()
}

/// True iff √−3 (d = 3) or √−1 (d = 4) lies in Q[T]/P(T).
pub fn mu_membership(p: &IntPoly, d: u32) -> Result<bool> {
    let k: i64 = match d {
        3 => 3,
        4 => 1,
        _ => return Err(Error::Domain(format!("mu_membership: d = {d}"))),
    };
    if !polyring::is_irreducible(p) {
        return Err(Error::Domain(format!("{p} is not irreducible")));
    }
    let n = p.deg();
    for s in 1i64.. {
        // g(y) = Res_T(P(T), (y - sT)^2 + k) has degree 2n in y
        let xs: Vec<BigRational> = (0..=(2 * n) as i64)
            .map(|y| BigRational::from_integer(y.into()))
            .collect();
        let mut ys = Vec::with_capacity(xs.len());
        for y in &xs {
            let y = y.to_integer();
            let yi: i64 = y.try_into().expect("small");
            let q = IntPoly::from_ints(&[yi * yi + k, -2 * s * yi, s * s]);
            ys.push(polyring::resultant(p, &q)?);
        }
        let g = polyring::interpolate(&xs, &ys);
        if g.gcd(&g.derivative()).deg() == 0 {
            return Ok(!polyring::is_irreducible(&g));
        }
    }
    unreachable!()
}

impl Surface {
    pub fn finite_places(&self) -> impl Iterator<Item = &Place> {
        self.places.iter().filter(|p| matches!(p.kind, PlaceKind::Finite(_)))
    }

    pub fn infinity(&self) -> &Place {
        self.places.last().expect("infinity place")
    }

    pub fn multiplicative_places(&self) -> impl Iterator<Item = &Place> {
        self.finite_places().filter(|p| p.multiplicative)
    }

    /// Finite bad places other than I0*: the places entering φ.
    pub fn phi_places(&self) -> impl Iterator<Item = &Place> {
        self.finite_places().filter(|p| p.kodaira != Kodaira::I0s)
    }

    /// Σ deg(P)·e(P) over all places; 12 for a rational elliptic surface.
    pub fn euler_sum(&self) -> u32 {
        self.places
            .iter()
            .map(|p| p.kodaira.euler() * p.poly().map_or(1, |f| f.deg() as u32))
            .sum()
    }

    pub fn delta_primes(&self) -> Vec<u64> {
        crate::intarith::factorize(&self.delta)
            .expect("δ is nonzero")
            .factors
            .iter()
            .map(|(p, _)| p.try_into().expect("δ primes are small"))
            .collect()
    }
}

/// Build a surface from a1, a2, a3, a4, a6 in Z[T].
pub fn build_surface(a: [IntPoly; 5]) -> Result<Surface> {
    if a.iter().any(|x| !x.is_integral()) {
        return Err(Error::Domain("coefficients must be integral".into()));
    }
    let (c4, c6, disc) = poly_invariants(&a);
    if disc.is_zero() {
        return Err(Error::Domain("discriminant vanishes identically".into()));
    }
    let is_isotrivial = if c4.is_zero() || c6.is_zero() {
        true
    } else {
        let c43 = &(&c4 * &c4) * &c4;
        (&c43.scale(&disc.lc()) - &disc.scale(&c43.lc())).is_zero()
    };

    let mut places = Vec::new();
    for (poly, _) in polyring::factor_irreducible(&disc)? {
        let poly = poly.sign_normalized();
        places.push(finite_place(&c4, &c6, &disc, poly)?);
    }
    places.push(infinity_place(&c4, &c6, &disc)?);

    let mut delta = BigInt::from(6) * numerator_content(&c4) * numerator_content(&c6) * numerator_content(&disc);
    let polys: Vec<&IntPoly> = places.iter().filter_map(|p| p.poly()).collect();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let r = polyring::resultant(polys[i], polys[j])?;
            delta *= r.to_integer().abs();
        }
    }

    let mut m = IntPoly::one();
    let mut b = IntPoly::one();
    for p in &places {
        if let Some(poly) = p.poly() {
            if p.multiplicative {
                m = &m * poly;
            }
            if !p.insipid {
                b = &b * poly;
            }
        }
    }
    let mut prod = IntPoly::one();
    for p in &places {
        if let Some(poly) = p.poly() {
            prod = &prod * &poly.pow(p.valuations.2);
        }
    }
    let disc_content = (disc.lc() / prod.lc()).to_integer();
    Ok(Surface {
        disc_content,
        a,
        c4,
        c6,
        disc,
        is_isotrivial,
        places,
        delta,
        m,
        b,
    })
}

/// Surface Y² = X³ − 27c4 X − 54c6 from given c4, c6.
pub fn from_c4c6(c4: &IntPoly, c6: &IntPoly) -> Result<Surface> {
    let k = |n: i64| IntPoly::from_ints(&[n]);
    build_surface([
        IntPoly::zero(),
        IntPoly::zero(),
        IntPoly::zero(),
        &k(-27) * c4,
        &k(-54) * c6,
    ])
}

fn finite_place(c4: &IntPoly, c6: &IntPoly, disc: &IntPoly, poly: IntPoly) -> Result<Place> {
    let vals = (
        c4.valuation_at(&poly),
        c6.valuation_at(&poly),
        disc.valuation_at(&poly).expect("Δ ≠ 0"),
    );
    let kodaira = tame_kodaira(vals.0, vals.1, vals.2)?;
    let insipid = match kodaira {
        Kodaira::I0s => true,
        k => match k.mu_order() {
            Some(d) => mu_membership(&poly, d)?,
            None => false,
        },
    };
    Ok(Place {
        kind: PlaceKind::Finite(poly),
        kodaira,
        epsilon: kodaira.epsilon(),
        insipid,
        multiplicative: kodaira.is_multiplicative(),
        valuations: vals,
    })
}

fn infinity_place(c4: &IntPoly, c6: &IntPoly, disc: &IntPoly) -> Result<Place> {
    let deg = |p: &IntPoly| p.degree().map(|d| d as u32);
    let (d4, d6, dd) = (deg(c4), deg(c6), deg(disc).expect("Δ ≠ 0"));
    let mut k = 0u32;
    while d4.is_some_and(|d| 4 * k < d) || d6.is_some_and(|d| 6 * k < d) || 12 * k < dd {
        k += 1;
    }
    let vals = (d4.map(|d| 4 * k - d), d6.map(|d| 6 * k - d), 12 * k - dd);
    let kodaira = tame_kodaira(vals.0, vals.1, vals.2)?;
    Ok(Place {
        kind: PlaceKind::Infinity,
        kodaira,
        epsilon: kodaira.epsilon(),
        // the residue field at infinity is Q
        insipid: kodaira == Kodaira::I0s,
        multiplicative: kodaira.is_multiplicative(),
        valuations: vals,
    })
}

/// Kodaira type of the surface at an irreducible P, with the valuations of
/// c4, c6, Δ at P. Primes of good reduction give I0.
pub fn kodaira_at_finite_place(s: &Surface, p: &IntPoly) -> Result<(Kodaira, Option<u32>, Option<u32>, u32)> {
    if p.deg() == 0 || !polyring::is_irreducible(p) {
        return Err(Error::Domain(format!("{p} is not an irreducible polynomial")));
    }
    let v4 = s.c4.valuation_at(p);
    let v6 = s.c6.valuation_at(p);
    let vd = s.disc.valuation_at(p).expect("Δ ≠ 0");
    Ok((tame_kodaira(v4, v6, vd)?, v4, v6, vd))
}

pub fn kodaira_at_infinity(s: &Surface) -> Kodaira {
    s.infinity().kodaira
}

pub fn surface_delta(s: &Surface) -> &BigInt {
    &s.delta
}

/// Integer fiber values of the place polynomials are coprime outside δ;
/// convenience for callers that only need δ as a divisor test.
pub fn divides_delta(s: &Surface, p: u64) -> bool {
    s.delta.is_multiple_of(&BigInt::from(p))
}
