//! Built-in families and the family file format.
//!
//! A family file is line oriented; `#` starts a comment:
//!
//! ```text
//! name G
//! param w 1
//! a1
//! a2 0 3
//! a3
//! a4 0 3
//! a6 0 0 1
//! ```
//!
//! Coefficient lines list ascending integer coefficients; an empty list is
//! the zero polynomial. Instead of a1..a6 a file may give `c4` and `c6`, in
//! which case the surface is y² = x³ − 27c4 x − 54c6. A twist w y² = … is
//! written out as y² = x³ + w a2 x² + w² a4 x + w³ a6.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::IntPoly;
use crate::surface::{build_surface, from_c4c6, Surface};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// a1, a2, a3, a4, a6
    Weierstrass([IntPoly; 5]),
    C4C6(IntPoly, IntPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub coeffs: Coefficients,
}

pub const CATALOG: &[&str] = &[
    "F",
    "G",
    "H",
    "I",
    "J",
    "L",
    "washington",
    "legendre",
    "washington_twist",
];

const A_KEYS: [&str; 5] = ["a1", "a2", "a3", "a4", "a6"];

impl FamilySpec {
    pub fn surface(&self) -> Result<Surface> {
        match &self.coeffs {
            Coefficients::Weierstrass(a) => build_surface(a.clone()),
            Coefficients::C4C6(c4, c6) => from_c4c6(c4, c6),
        }
    }

    /// Short label such as `G[w=1]`.
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            return self.name.clone();
        }
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}[{}]", self.name, ps.join(","))
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "name {}", self.name).unwrap();
        for (k, v) in &self.params {
            writeln!(out, "param {k} {v}").unwrap();
        }
        let mut line = |key: &str, p: &IntPoly| {
            let cs: Vec<String> = p.int_coeffs().iter().map(|c| c.to_string()).collect();
            if cs.is_empty() {
                writeln!(out, "{key}").unwrap();
            } else {
                writeln!(out, "{key} {}", cs.join(" ")).unwrap();
            }
        };
        match &self.coeffs {
            Coefficients::Weierstrass(a) => {
                for (k, p) in A_KEYS.iter().zip(a) {
                    line(k, p);
                }
            }
            Coefficients::C4C6(c4, c6) => {
                line("c4", c4);
                line("c6", c6);
            }
        }
        out
    }
}

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_ints(c)
}

fn param(params: &BTreeMap<String, i64>, key: &str, default: Option<i64>, nonzero: bool) -> Result<i64> {
    let v = match (params.get(key), default) {
        (Some(&v), _) => v,
        (None, Some(d)) => d,
        (None, None) => return Err(Error::Domain(format!("missing parameter {key}"))),
    };
    if nonzero && v == 0 {
        return Err(Error::Domain(format!("parameter {key} must be nonzero")));
    }
    Ok(v)
}

/// y² = x³ + w a2 x² + w² a4 x + w³ a6 from w y² = x³ + a2 x² + a4 x + a6.
fn twisted(w: i64, a2: IntPoly, a4: IntPoly, a6: IntPoly) -> [IntPoly; 5] {
    let k = |n: i64| p(&[n]);
    [
        IntPoly::zero(),
        &k(w) * &a2,
        IntPoly::zero(),
        &k(w * w) * &a4,
        &k(w * w * w) * &a6,
    ]
}

/// A catalog family with its parameters. `w` defaults to 1 and `v` to 0.
pub fn catalog_family(name: &str, params: &BTreeMap<String, i64>) -> Result<FamilySpec> {
    let allowed: &[&str] = match name {
        "F" => &["s"],
        "G" | "H" | "I" => &["w"],
        "J" => &["m", "w", "v"],
        "L" => &["w", "s", "v"],
        "washington" | "legendre" | "washington_twist" => &[],
        _ => return Err(Error::Domain(format!("unknown family {name}"))),
    };
    if let Some(k) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::Domain(format!("family {name} has no parameter {k}")));
    }
    let mut used = BTreeMap::new();
    let mut get = |key: &str, default: Option<i64>, nonzero: bool| -> Result<i64> {
        let v = param(params, key, default, nonzero)?;
        used.insert(key.to_string(), v);
        Ok(v)
    };
    let t = IntPoly::t();
    let a = match name {
        "F" => {
            let s = get("s", None, true)?;
            twisted(1, p(&[0, 3]), p(&[3 * s]), p(&[0, s]))
        }
        "G" => {
            let w = get("w", Some(1), true)?;
            twisted(w, p(&[0, 3]), p(&[0, 3]), p(&[0, 0, 1]))
        }
        "H" => {
            let w = get("w", Some(1), true)?;
            // a4 = −3(2t − 1): the sign that yields the listed bad places
            twisted(w, p(&[3, -7, 8]), p(&[3, -6]), p(&[1, 1]))
        }
        "I" => {
            let w = get("w", Some(1), true)?;
            twisted(w, p(&[0, -7, 1]), p(&[0, 36, -6]), p(&[0, -54, 10]))
        }
        "J" => {
            let m = get("m", None, true)?;
            let w = get("w", Some(1), true)?;
            let v = get("v", Some(0), false)?;
            twisted(w, p(&[3 * v, 0, 3]), p(&[0, -3 * m]), p(&[m * m]))
        }
        "L" => {
            let w = get("w", Some(1), true)?;
            let s = get("s", None, true)?;
            let v = get("v", Some(0), false)?;
            let q = p(&[v, 0, 1]);
            twisted(w, &p(&[3]) * &q, p(&[3 * s]), &p(&[s]) * &q)
        }
        "washington" => twisted(1, t.clone(), p(&[-3, -1]), p(&[1])),
        "legendre" => twisted(1, p(&[-1, -1]), t.clone(), IntPoly::zero()),
        "washington_twist" => {
            // quadratic twist of the Washington family by T + 1
            let d = p(&[1, 1]);
            let d2 = &d * &d;
            [
                IntPoly::zero(),
                &d * &t,
                IntPoly::zero(),
                &(-&d2) * &p(&[3, 1]),
                &d2 * &d,
            ]
        }
        _ => unreachable!(),
    };
    Ok(FamilySpec {
        name: name.to_string(),
        params: used,
        coeffs: Coefficients::Weierstrass(a),
    })
}

fn parse_coeffs(line_no: usize, rest: &[&str]) -> Result<IntPoly> {
    let mut cs = Vec::with_capacity(rest.len());
    for tok in rest {
        let c: BigInt = tok.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("not an integer: {tok}"),
        })?;
        cs.push(c);
    }
    Ok(IntPoly::from_bigints(&cs))
}

pub fn parse_family_file(text: &str) -> Result<FamilySpec> {
    let mut name = None;
    let mut params = BTreeMap::new();
    let mut polys: BTreeMap<String, IntPoly> = BTreeMap::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| Error::Parse { line: line_no, msg };
        match toks[0] {
            "name" => {
                if toks.len() != 2 {
                    return Err(err("expected `name <identifier>`".into()));
                }
                name = Some(toks[1].to_string());
            }
            "param" => {
                if toks.len() != 3 {
                    return Err(err("expected `param <key> <integer>`".into()));
                }
                let v: i64 = toks[2]
                    .parse()
                    .map_err(|_| err(format!("not an integer: {}", toks[2])))?;
                params.insert(toks[1].to_string(), v);
            }
            key @ ("a1" | "a2" | "a3" | "a4" | "a6" | "c4" | "c6") => {
                if polys.contains_key(key) {
                    return Err(err(format!("duplicate field {key}")));
                }
                polys.insert(key.to_string(), parse_coeffs(line_no, &toks[1..])?);
            }
            "a5" => return Err(err("a5 does not occur in a Weierstrass equation".into())),
            other => return Err(err(format!("unknown field {other}"))),
        }
    }
    let missing = |what: &str| Error::Parse {
        line: last_line,
        msg: format!("missing field {what}"),
    };
    let name = name.ok_or_else(|| missing("name"))?;
    let has_a = A_KEYS.iter().any(|k| polys.contains_key(*k));
    let has_c = polys.contains_key("c4") || polys.contains_key("c6");
    let coeffs = match (has_a, has_c) {
        (true, true) => {
            return Err(Error::Parse {
                line: last_line,
                msg: "give either a1..a6 or c4, c6".into(),
            })
        }
        (false, true) => Coefficients::C4C6(
            polys.remove("c4").ok_or_else(|| missing("c4"))?,
            polys.remove("c6").ok_or_else(|| missing("c6"))?,
        ),
        _ => {
            let mut a: [IntPoly; 5] = Default::default();
            for (slot, k) in a.iter_mut().zip(A_KEYS) {
                *slot = polys.remove(k).ok_or_else(|| missing(k))?;
            }
            Coefficients::Weierstrass(a)
        }
    };
    Ok(FamilySpec { name, params, coeffs })
}

/// Parse `k=v` parameter strings.
pub fn parse_params<S: AsRef<str>>(items: &[S]) -> Result<BTreeMap<String, i64>> {
    let mut out = BTreeMap::new();
    for it in items {
        let it = it.as_ref();
        let (k, v) = it
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("expected key=value, got {it}")))?;
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("not an integer: {v}")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

/// The families used by the acceptance checks, by short name.
pub fn standard_families() -> Vec<FamilySpec> {
    let pm = |kv: &[(&str, i64)]| -> BTreeMap<String, i64> { kv.iter().map(|(k, v)| (k.to_string(), *v)).collect() };
    [
        ("F", pm(&[("s", 2)])),
        ("G", pm(&[("w", 1)])),
        ("H", pm(&[("w", 1)])),
        ("I", pm(&[("w", 1)])),
        ("J", pm(&[("m", 1), ("w", 1)])),
        ("L", pm(&[("w", 1), ("s", 1), ("v", 1)])),
        ("washington", pm(&[])),
        ("legendre", pm(&[])),
    ]
    .into_iter()
    .map(|(n, ps)| catalog_family(n, &ps).expect("catalog"))
    .collect()
}

/// The generic j-invariant c4³/Δ as (numerator, denominator) polynomials.
pub fn j_invariant(s: &Surface) -> (IntPoly, IntPoly) {
    let num = &(&s.c4 * &s.c4) * &s.c4;
    let g = num.gcd(&s.disc);
    let (n, _) = num.divrem(&g).expect("nonzero");
    let (d, _) = s.disc.divrem(&g).expect("nonzero");
    let lc = d.lc();
    let one = num_rational::BigRational::one();
    (n.scale(&(&one / &lc)), d.scale(&(&one / &lc)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn none() -> BTreeMap<String, i64> {
        BTreeMap::new()
    }

    #[test]
    fn g_matches_equation() {
        let spec = catalog_family("G", &parse_params(&["w=1"]).unwrap()).unwrap();
        assert_eq!(
            spec.coeffs,
            Coefficients::Weierstrass([p(&[]), p(&[0, 3]), p(&[]), p(&[0, 3]), p(&[0, 0, 1])])
        );
    }

    #[test]
    fn washington_matches_equation() {
        let spec = catalog_family("washington", &none()).unwrap();
        assert_eq!(
            spec.coeffs,
            Coefficients::Weierstrass([p(&[]), p(&[0, 1]), p(&[]), p(&[-3, -1]), p(&[1])])
        );
    }

    #[test]
    fn zero_parameter_rejected() {
        assert!(catalog_family("F", &parse_params(&["s=0"]).unwrap()).is_err());
        assert!(catalog_family("G", &parse_params(&["w=0"]).unwrap()).is_err());
        assert!(catalog_family("F", &none()).is_err());
        assert!(catalog_family("Q", &none()).is_err());
        assert!(catalog_family("G", &parse_params(&["s=1"]).unwrap()).is_err());
    }

    #[test]
    fn roundtrip_all() {
        for spec in standard_families() {
            let text = spec.serialize();
            assert_eq!(parse_family_file(&text).unwrap(), spec, "{text}");
        }
        let spec = catalog_family("washington_twist", &none()).unwrap();
        assert_eq!(parse_family_file(&spec.serialize()).unwrap(), spec);
    }

    #[test]
    fn a5_rejected() {
        let text = "name X\na1\na2\na3\na4\na5 1\na6 1\n";
        match parse_family_file(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trailing_zeros_normalized() {
        let text = "name X\na1\na2 0 1 0 0\na3\na4 -3 -1\na6 1 0\n";
        let spec = parse_family_file(text).unwrap();
        let w = catalog_family("washington", &none()).unwrap();
        assert_eq!(spec.coeffs, w.coeffs);
    }

    #[test]
    fn missing_field() {
        assert!(matches!(
            parse_family_file("name X\na1\na2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_family_file("name X\na1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn twist_keeps_j() {
        let g1 = catalog_family("G", &parse_params(&["w=1"]).unwrap()).unwrap();
        let g5 = catalog_family("G", &parse_params(&["w=-5"]).unwrap()).unwrap();
        assert_eq!(j_invariant(&g1.surface().unwrap()), j_invariant(&g5.surface().unwrap()));
    }

    #[test]
    fn c4c6_input() {
        let text = "name X\nc4 0 1\nc6 1\n";
        let spec = parse_family_file(text).unwrap();
        assert!(spec.surface().is_ok());
        assert_eq!(parse_family_file(&spec.serialize()).unwrap(), spec);
    }
}
