//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//! Runs without the libtest harness so the lines always show.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootnum::catalog::{catalog_family, parse_params, standard_families, FamilySpec};
use rootnum::localdata::{curve_from_ainvs, global_root_number_direct, table_row};
use rootnum::report::{average, scan, Paths};
use rootnum::sieves::{
    combined_census, density_constant, liouville_census, rational_to_f64, squarefree_census, ArithProgression,
};
use rootnum::signformula::{periodicity_data, phi};
use rootnum::surface::{Kodaira, Surface};
use rootnum::variation::{variation_pair_search, DEFAULT_BOUND};
use rootnum::{Error, IntPoly};
use serde::Deserialize;

// Tolerances
const LIOUVILLE_RATIO: f64 = 0.02;
const SQUAREFREE_DENSITY: f64 = 0.01;
const COMBINED_DENSITY: f64 = 0.02;
const SIEVE_X: i64 = 100_000;
const SIEVE_CUTOFF: u64 = 10_000;
const UNBIASED_MAX: f64 = 0.15;
const BIASED_MIN: f64 = 0.05;
const PAIRS: usize = 200;

enum Outcome {
    Pass(String),
    Fail(String),
    /// Reported, not counted as a failure.
    Borderline(String),
}

fn fam(name: &str, params: &[&str]) -> Surface {
    spec(name, params).surface().unwrap()
}

fn spec(name: &str, params: &[&str]) -> FamilySpec {
    catalog_family(name, &parse_params(params).unwrap()).unwrap()
}

fn poly(cs: &[i64]) -> IntPoly {
    IntPoly::from_ints(cs)
}

fn washington_constancy() -> Outcome {
    let s = fam("washington", &[]);
    let rows = scan(&s, -200, 200, Paths::Both).unwrap();
    let checked = rows.iter().filter(|r| !r.singular).count();
    let bad: Vec<i64> = rows
        .iter()
        .filter(|r| !r.singular && (r.w_direct != Some(-1) || r.w_formula != Some(-1)))
        .map(|r| r.t)
        .collect();
    if bad.is_empty() {
        Outcome::Pass(format!("{checked} fibers, W = -1 on both paths"))
    } else {
        Outcome::Fail(format!("W != -1 at t = {bad:?}"))
    }
}

/// Degree-weighted Euler number of a list of (degree, type).
fn euler(places: &[(usize, Kodaira)]) -> u32 {
    places.iter().map(|(d, k)| *d as u32 * k.euler()).sum()
}

fn classification() -> Outcome {
    use Kodaira::*;
    // computed place list: (ascending coefficients, type), then the infinity type
    struct Case {
        name: &'static str,
        params: &'static [&'static str],
        places: Vec<(Vec<i64>, Kodaira)>,
        infinity: Kodaira,
        // the reference list as (degree, type), when it differs from the computed one
        reference: Option<Vec<(usize, Kodaira)>>,
        note: &'static str,
    }
    let cases = vec![
        Case {
            name: "F",
            params: &["s=2"],
            places: vec![(vec![-2, 0, 1], II)],
            infinity: Is(2),
            reference: Some(vec![(2, II), (1, Is(8))]),
            note: "infinity I8* listed",
        },
        Case {
            name: "G",
            params: &["w=1"],
            places: vec![(vec![0, 1], III), (vec![-1, 1], II)],
            infinity: Is(1),
            reference: Some(vec![(1, II), (1, III), (1, Is(7))]),
            note: "infinity I7* listed",
        },
        Case {
            name: "H",
            params: &["w=1"],
            places: vec![(vec![0, 1], III), (vec![8, -11, 8], II)],
            infinity: I(5),
            reference: None,
            note: "",
        },
        Case {
            name: "I",
            params: &["w=1"],
            places: vec![(vec![0, 1], II), (vec![27, -10, 1], III)],
            infinity: I(4),
            reference: Some(vec![(1, II), (2, II), (1, I(4))]),
            note: "t^2-10t+27 listed as II",
        },
        Case {
            name: "J",
            params: &["m=1", "w=1"],
            places: vec![(vec![1, 1], II), (vec![1, -1, 1], II)],
            infinity: I(6),
            reference: None,
            note: "t^3+1 = (t+1)(t^2-t+1)",
        },
        Case {
            name: "L",
            params: &["w=1", "s=1", "v=1"],
            places: vec![(vec![0, 1], IV), (vec![2, 0, 1], II)],
            infinity: I(4),
            reference: None,
            note: "t^4+2t^2 = t^2(t^2+2)",
        },
        Case {
            name: "L",
            params: &["w=1", "s=2", "v=1"],
            places: vec![(vec![-1, 0, 2, 0, 1], II)],
            infinity: I(4),
            reference: None,
            note: "",
        },
    ];
    let mut problems = Vec::new();
    let mut defects = Vec::new();
    for c in &cases {
        let s = fam(c.name, c.params);
        let got: Vec<(IntPoly, Kodaira)> = s
            .finite_places()
            .map(|p| (p.poly().unwrap().clone(), p.kodaira))
            .collect();
        let want: Vec<(IntPoly, Kodaira)> = c.places.iter().map(|(cs, k)| (poly(cs), *k)).collect();
        let label = spec(c.name, c.params).label();
        if got.len() != want.len() || want.iter().any(|w| !got.contains(w)) {
            problems.push(format!("{label}: places {got:?}"));
        }
        if s.infinity().kodaira != c.infinity {
            problems.push(format!("{label}: infinity {}", s.infinity().kodaira));
        }
        if s.euler_sum() != 12 {
            problems.push(format!("{label}: Euler sum {}", s.euler_sum()));
        }
        if let Some(reference) = &c.reference {
            let e = euler(reference);
            if e == 12 {
                problems.push(format!("{label}: reference list is consistent, yet differs"));
            } else {
                defects.push(format!("{label} ({}, listed Euler sum {e})", c.note));
            }
        }
    }
    // reducible reference places
    let j = poly(&[1, 0, 0, 1]);
    if &poly(&[1, 1]) * &poly(&[1, -1, 1]) == j {
        defects.push("J[m=1] (t^3+1 reducible)".into());
    } else {
        problems.push("J factorization".into());
    }
    let l = poly(&[0, 0, 2, 0, 1]);
    if &(&poly(&[0, 1]) * &poly(&[0, 1])) * &poly(&[2, 0, 1]) == l {
        defects.push("L[1,1,1] (t^4+2t^2 reducible)".into());
    } else {
        problems.push("L factorization".into());
    }
    if problems.is_empty() {
        Outcome::Pass(format!(
            "{} families match; deviations from the reference list are verified defects: {}",
            cases.len(),
            defects.join("; ")
        ))
    } else {
        Outcome::Fail(problems.join("; "))
    }
}

fn cross_path() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for f in standard_families() {
        let s = f.surface().unwrap();
        for r in scan(&s, -100, 100, Paths::Both).unwrap() {
            match r.agree() {
                Some(true) => checked += 1,
                Some(false) => bad.push(format!("{} t={}", f.label(), r.t)),
                None => {}
            }
        }
    }
    if bad.is_empty() {
        Outcome::Pass(format!("{checked} fibers over 8 families, 0 disagreements"))
    } else {
        Outcome::Fail(format!("{} disagreements: {}", bad.len(), bad.join(", ")))
    }
}

fn variation() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut problems = Vec::new();
    for (name, params) in [("G", &["w=1"][..]), ("H", &["w=1"]), ("I", &["w=1"]), ("legendre", &[])] {
        let s = fam(name, params);
        match variation_pair_search(&s, DEFAULT_BOUND) {
            Ok(c) => {
                let limit = BigInt::from(DEFAULT_BOUND);
                let wp = global_root_number_direct(&rootnum::localdata::instantiate_fiber(&s, &c.t_plus).unwrap());
                let wm = global_root_number_direct(&rootnum::localdata::instantiate_fiber(&s, &c.t_minus).unwrap());
                let in_range = c.t_plus.magnitude() <= limit.magnitude() && c.t_minus.magnitude() <= limit.magnitude();
                if (wp, wm) == (1, -1) && in_range {
                    parts.push(format!("{name} ({}, {})", c.t_plus, c.t_minus));
                } else {
                    problems.push(format!("{name}: W({}) = {wp}, W({}) = {wm}", c.t_plus, c.t_minus));
                }
            }
            Err(e) => problems.push(format!("{name}: {e}")),
        }
    }
    match variation_pair_search(&fam("washington", &[]), DEFAULT_BOUND) {
        Err(Error::Inapplicable(_)) => parts.push("washington inapplicable".into()),
        other => problems.push(format!("washington: {:?}", other.map(|c| (c.t_plus, c.t_minus)))),
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 300.0 {
        problems.push(format!("runtime {secs:.1}s"));
    }
    if problems.is_empty() {
        Outcome::Pass(format!("{} in {secs:.1}s", parts.join(", ")))
    } else {
        Outcome::Fail(problems.join("; "))
    }
}

#[derive(Deserialize)]
struct Local {
    p: i64,
    kodaira: String,
    w: i8,
}

#[derive(Deserialize)]
struct Entry {
    a: [i64; 5],
    local: Vec<Local>,
    w: i8,
    rows: Vec<(u64, usize)>,
}

fn corpus() -> Outcome {
    let entries: Vec<Entry> = serde_json::from_str(include_str!("data/corpus.json")).unwrap();
    let mut problems = Vec::new();
    let mut rows = BTreeSet::new();
    for e in &entries {
        let c = curve_from_ainvs(e.a.map(BigInt::from)).unwrap();
        for l in &e.local {
            let d = c.local(&BigInt::from(l.p)).unwrap();
            if d.kodaira.to_string() != l.kodaira || d.w != l.w {
                problems.push(format!("{:?} at {}", e.a, l.p));
            }
        }
        if global_root_number_direct(&c) != e.w {
            problems.push(format!("{:?} global", e.a));
        }
        let mut got = Vec::new();
        for p in [2u64, 3] {
            if c.local(&BigInt::from(p)).is_some() {
                if let Some(r) = table_row(p, &c.c4, &c.c6, &c.disc) {
                    got.push((p, r));
                }
            }
        }
        if got != e.rows {
            problems.push(format!("{:?} rows {got:?}", e.a));
        }
        rows.extend(got);
    }
    if rows.len() < 10 {
        problems.push(format!("only {} distinct table rows", rows.len()));
    }
    if problems.is_empty() {
        Outcome::Pass(format!(
            "{} curves agree, {} distinct p = 2, 3 table rows",
            entries.len(),
            rows.len()
        ))
    } else {
        Outcome::Fail(problems.join("; "))
    }
}

fn sieves() -> Outcome {
    let start = Instant::now();
    let z = ArithProgression::integers();
    let t = poly(&[0, 1]);
    let t2p1 = poly(&[1, 0, 1]);
    let l = liouville_census(&t, &z, SIEVE_X).unwrap();
    let c = rational_to_f64(&density_constant(&t2p1, &z, SIEVE_CUTOFF).unwrap());
    let sq = squarefree_census(&t2p1, &z, SIEVE_X).unwrap();
    let cc = combined_census(&t, &t2p1, &[], &z, 1, SIEVE_X, SIEVE_CUTOFF).unwrap();
    let cc_diff = cc.difference().unwrap();
    let secs = start.elapsed().as_secs_f64();
    let line = format!(
        "S(X)/X = {:.5}, T^2+1 density {:.5} vs C {:.5}, combined {:.5} vs C/2 {:.5}, {secs:.1}s",
        l.ratio,
        sq.density,
        c,
        cc.density,
        cc.constant.unwrap()
    );
    let ok = l.ratio.abs() <= LIOUVILLE_RATIO
        && (sq.density - c).abs() <= SQUAREFREE_DENSITY
        && cc_diff <= COMBINED_DENSITY
        && secs < 120.0;
    if ok {
        Outcome::Pass(line)
    } else {
        Outcome::Fail(line)
    }
}

fn periodicity() -> Outcome {
    let mut fams = standard_families();
    fams.push(catalog_family("washington_twist", &BTreeMap::new()).unwrap());
    let mut parts = Vec::new();
    let mut problems = Vec::new();
    for f in fams {
        let s = f.surface().unwrap();
        let d = periodicity_data(&s).unwrap();
        let n = d.n_u64().unwrap() as i64;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (mut same, mut same_bad, mut flip, mut flip_bad) = (0, 0, 0, 0);
        let mut tries = 0;
        while (same + same_bad < PAIRS || flip + flip_bad < PAIRS) && tries < 100_000 {
            tries += 1;
            let t1 = BigInt::from(if tries % 2 == 0 {
                rng.gen_range(-20_000i64..20_000)
            } else {
                rng.gen_range(-40i64..40)
            });
            let t2 = &t1 + BigInt::from(n * rng.gen_range(-30i64..30));
            if t1 == t2 || !d.admissible(&s, &t1) || !d.admissible(&s, &t2) {
                continue;
            }
            if d.control_signs(&t1) != d.control_signs(&t2) {
                continue;
            }
            let (a, b) = (d.r_signs(&t1), d.r_signs(&t2));
            let flips = a.iter().zip(&b).filter(|(x, y)| x != y).count();
            let (Ok(p1), Ok(p2)) = (phi(&s, &t1), phi(&s, &t2)) else {
                continue;
            };
            match flips {
                0 if same + same_bad < PAIRS => {
                    if p1 == p2 {
                        same += 1
                    } else {
                        same_bad += 1
                    }
                }
                1 if flip + flip_bad < PAIRS => {
                    if p1 == -p2 {
                        flip += 1
                    } else {
                        flip_bad += 1
                    }
                }
                _ => {}
            }
        }
        let label = f.label();
        if same_bad + flip_bad > 0 {
            problems.push(format!("{label}: {same_bad} same / {flip_bad} flip violations"));
        }
        if same < PAIRS {
            problems.push(format!("{label}: only {same} same-pattern pairs"));
        }
        let flip_note = match flip + flip_bad {
            0 => "flip vacuous".to_string(),
            k if k < PAIRS => {
                problems.push(format!("{label}: only {k} flip pairs"));
                format!("{flip} flip")
            }
            _ => format!("{flip} flip"),
        };
        parts.push(format!("{label} N={n} {same} same/{flip_note}"));
    }
    if problems.is_empty() {
        Outcome::Pass(format!("0 violations; {}", parts.join(", ")))
    } else {
        Outcome::Fail(problems.join("; "))
    }
}

fn parity_bias() -> Outcome {
    let unbiased = average(&fam("F", &["s=1"]), 5000, 1).unwrap().mean;
    let biased = average(&fam("F", &["s=2"]), 5000, 1).unwrap().mean;
    let line = format!("F[s=1] avg {unbiased:.4}, F[s=2] avg {biased:.4} at T = 5000");
    if unbiased.abs() <= UNBIASED_MAX && biased.abs() >= BIASED_MIN {
        Outcome::Pass(line)
    } else {
        Outcome::Borderline(line)
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 washington constancy", washington_constancy),
        ("2 classification", classification),
        ("3 cross-path identity", cross_path),
        ("4 variation certificates", variation),
        ("5 oracle corpus", corpus),
        ("6 sieve analytics", sieves),
        ("7 periodicity", periodicity),
        ("8 parity bias", parity_bias),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, f) in criteria {
        if !filter.is_empty() && !filter.iter().any(|x| name.contains(x.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        let (tag, msg) = match outcome {
            Outcome::Pass(m) => ("PASS", m),
            Outcome::Fail(m) => {
                failed += 1;
                ("FAIL", m)
            }
            Outcome::Borderline(m) => ("BORDERLINE", m),
        };
        println!("{tag} criterion {name} [{secs:.1}s]: {msg}");
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
