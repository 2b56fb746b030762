//! Range scans, truncated averages and the CSV / JSON writers. Output is
//! byte-identical for identical inputs: rows are sorted by t before
//! emission, whatever the worker count.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::localdata::{fiber_root_number, global_root_number_direct, instantiate_fiber};
use crate::sieves::{Census, LiouvilleCensus};
use crate::signformula::{root_number_formula, RootNumberReport};
use crate::surface::Surface;
use crate::variation::VariationCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Paths {
    Direct,
    Formula,
    #[default]
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub t: i64,
    pub singular: bool,
    pub w_direct: Option<i8>,
    pub w_formula: Option<i8>,
    pub lambda_m: Option<i8>,
    pub phi: Option<i8>,
}

impl ScanRow {
    /// `None` unless both paths ran.
    pub fn agree(&self) -> Option<bool> {
        Some(self.w_direct? == self.w_formula?)
    }

    fn from_report(r: &RootNumberReport, t: i64) -> Self {
        ScanRow {
            t,
            singular: false,
            w_direct: Some(r.w_direct),
            w_formula: Some(r.w_formula),
            lambda_m: Some(r.lambda_m),
            phi: Some(r.phi),
        }
    }
}

fn eval_row(s: &Surface, t: i64, paths: Paths) -> Result<ScanRow> {
    let tb = BigInt::from(t);
    let singular = ScanRow {
        t,
        singular: true,
        w_direct: None,
        w_formula: None,
        lambda_m: None,
        phi: None,
    };
    let is_singular = |e: &Error| matches!(e, Error::SingularFiber(_) | Error::ZeroAtMultiplicativePlace(_));
    match paths {
        Paths::Direct => match instantiate_fiber(s, &tb) {
            Ok(f) => Ok(ScanRow {
                singular: false,
                w_direct: Some(global_root_number_direct(&f)),
                ..singular
            }),
            Err(e) if is_singular(&e) => Ok(singular),
            Err(e) => Err(e),
        },
        Paths::Formula | Paths::Both => match root_number_formula(s, &tb) {
            Ok(r) => {
                let mut row = ScanRow::from_report(&r, t);
                if paths == Paths::Formula {
                    row.w_direct = None;
                }
                Ok(row)
            }
            Err(e) if is_singular(&e) => Ok(singular),
            Err(e) => Err(e),
        },
    }
}

/// Root numbers for t in [lo, hi], sorted by t.
pub fn scan(s: &Surface, lo: i64, hi: i64, paths: Paths) -> Result<Vec<ScanRow>> {
    if lo > hi {
        return Err(Error::Domain(format!("empty range {lo}..{hi}")));
    }
    let mut rows: Vec<ScanRow> = (lo..=hi)
        .into_par_iter()
        .map(|t| eval_row(s, t, paths))
        .collect::<Result<_>>()?;
    rows.sort_by_key(|r| r.t);
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Average {
    pub bound: i64,
    pub sum: i64,
    pub count: u64,
    pub skipped: u64,
    pub mean: f64,
    /// (T', mean over |t| ≤ T')
    pub partial: Vec<(i64, f64)>,
}

/// (1/#) ∑_{|t| ≤ T} W(𝓔_t) on the direct path, singular fibers skipped.
pub fn average(s: &Surface, bound: i64, checkpoints: usize) -> Result<Average> {
    if bound < 0 {
        return Err(Error::Domain("negative bound".into()));
    }
    let ws: Vec<Option<i8>> = (-bound..=bound)
        .into_par_iter()
        .map(|t| match fiber_root_number(s, &BigInt::from(t)) {
            Ok(w) => Ok(Some(w)),
            Err(Error::SingularFiber(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    let w_at = |t: i64| ws[(t + bound) as usize];
    let mut partial = Vec::new();
    let steps = checkpoints.max(1) as i64;
    let (mut sum, mut count) = (0i64, 0u64);
    let mut next = 1;
    let acc = |t: i64, sum: &mut i64, count: &mut u64| {
        if let Some(w) = w_at(t) {
            *sum += w as i64;
            *count += 1;
        }
    };
    acc(0, &mut sum, &mut count);
    for t in 1..=bound {
        acc(t, &mut sum, &mut count);
        acc(-t, &mut sum, &mut count);
        if next <= steps && t == bound * next / steps {
            partial.push((t, if count > 0 { sum as f64 / count as f64 } else { 0.0 }));
            next += 1;
        }
    }
    let total = (2 * bound + 1) as u64;
    Ok(Average {
        bound,
        sum,
        count,
        skipped: total - count,
        mean: if count > 0 { sum as f64 / count as f64 } else { 0.0 },
        partial,
    })
}

fn opt(x: Option<i8>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub const SCAN_HEADER: &str = "t,W_direct,W_formula,lambda_M,phi,agree";

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(SCAN_HEADER);
    out.push('\n');
    for r in rows {
        if r.singular {
            writeln!(out, "{},singular,singular,,,", r.t).unwrap();
            continue;
        }
        let agree = r.agree().map(|a| a.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.t,
            opt(r.w_direct),
            opt(r.w_formula),
            opt(r.lambda_m),
            opt(r.phi),
            agree
        )
        .unwrap();
    }
    out
}

fn row_json(r: &ScanRow) -> Value {
    json!({
        "t": r.t,
        "singular": r.singular,
        "W_direct": r.w_direct,
        "W_formula": r.w_formula,
        "lambda_M": r.lambda_m,
        "phi": r.phi,
        "agree": r.agree(),
    })
}

fn report_json(r: &RootNumberReport) -> Value {
    json!({
        "t": r.t.to_string(),
        "W_direct": r.w_direct,
        "W_formula": r.w_formula,
        "lambda_M": r.lambda_m,
        "phi": r.phi,
        "agree": r.agree,
        "delta_prime_part": r.delta_prime_part.iter().map(|(p, w)| (p.to_string(), json!(w))).collect::<serde_json::Map<_, _>>(),
        "per_place": r.per_place.iter().map(|pf| json!({
            "place": pf.poly.to_string(),
            "kodaira": pf.kodaira.to_string(),
            "h": pf.h,
            "g": pf.g,
        })).collect::<Vec<_>>(),
    })
}

pub fn certificate_value(c: &VariationCertificate) -> Value {
    json!({
        "t_plus": c.t_plus.to_string(),
        "t_minus": c.t_minus.to_string(),
        "q0": c.q0,
        "branch": c.branch.to_string(),
        "witness": c.witness.to_string(),
        "N": c.n.to_string(),
        "reports": [report_json(&c.report_plus), report_json(&c.report_minus)],
        "construction_log": serde_json::to_value(&c.construction_log).expect("serializable"),
    })
}

pub const CENSUS_HEADER: &str = "X,count,density,constant,|difference|";

pub fn census_csv(rows: &[Census]) -> String {
    let mut out = String::from(CENSUS_HEADER);
    out.push('\n');
    for c in rows {
        let cst = c.constant.map(|v| format!("{v:.6}")).unwrap_or_default();
        let diff = c.difference().map(|v| format!("{v:.6}")).unwrap_or_default();
        writeln!(out, "{},{},{:.6},{},{}", c.x, c.count, c.density, cst, diff).unwrap();
    }
    out
}

pub const CHOWLA_HEADER: &str = "X,sum,ratio,zeros";

pub fn chowla_csv(rows: &[LiouvilleCensus]) -> String {
    let mut out = String::from(CHOWLA_HEADER);
    out.push('\n');
    for c in rows {
        writeln!(out, "{},{},{:.6},{}", c.x, c.sum, c.ratio, c.zeros).unwrap();
    }
    out
}

pub enum Report<'a> {
    Scan(&'a [ScanRow]),
    Certificate(&'a VariationCertificate),
    Census(&'a [Census]),
    Chowla(&'a [LiouvilleCensus]),
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn write_report(report: &Report<'_>, format: Format) -> Vec<u8> {
    let text = match (report, format) {
        (Report::Scan(rows), Format::Csv) => scan_csv(rows),
        (Report::Scan(rows), Format::Json) => pretty(&Value::Array(rows.iter().map(row_json).collect())),
        (Report::Certificate(c), Format::Csv) => {
            let rows: Vec<ScanRow> = [&c.report_plus, &c.report_minus]
                .iter()
                .map(|r| ScanRow::from_report(r, r.t.to_string().parse().unwrap_or(i64::MIN)))
                .collect();
            scan_csv(&rows)
        }
        (Report::Certificate(c), Format::Json) => pretty(&certificate_value(c)),
        (Report::Census(rows), Format::Csv) => census_csv(rows),
        (Report::Census(rows), Format::Json) => pretty(&serde_json::to_value(rows).expect("serializable")),
        (Report::Chowla(rows), Format::Csv) => chowla_csv(rows),
        (Report::Chowla(rows), Format::Json) => pretty(&serde_json::to_value(rows).expect("serializable")),
    };
    text.into_bytes()
}
