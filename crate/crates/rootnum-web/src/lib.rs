//! wasm-bindgen front end for the demo page in `www/`.

use rootnum::catalog::{catalog_family, parse_family_file, parse_params, FamilySpec};
use rootnum::report::{self, Format, Paths, Report};
use rootnum::surface::mu_membership;
use rootnum::variation::{applicability, variation_pair_search};
use serde_json::json;
use wasm_bindgen::prelude::*;

const MAX_SCAN: i64 = 2000;
const MAX_BOUND: u64 = 1_000_000;

/// `family` is a catalog name, or a full specification when it contains a newline.
pub fn load(family: &str, params: &str) -> Result<FamilySpec, String> {
    if family.contains('\n') {
        return parse_family_file(family).map_err(|e| e.to_string());
    }
    let words: Vec<&str> = params.split([' ', ',']).filter(|w| !w.is_empty()).collect();
    let params = parse_params(&words).map_err(|e| e.to_string())?;
    catalog_family(family.trim(), &params).map_err(|e| e.to_string())
}

pub fn classify_json(family: &str, params: &str) -> Result<String, String> {
    let spec = load(family, params)?;
    let s = spec.surface().map_err(|e| e.to_string())?;
    let mut places = Vec::new();
    for p in &s.places {
        let mu = match (p.poly(), p.kodaira.mu_order()) {
            (Some(poly), Some(d)) => Some(mu_membership(poly, d).map_err(|e| e.to_string())?),
            _ => None,
        };
        places.push(json!({
            "place": p.label(),
            "kodaira": p.kodaira.to_string(),
            "epsilon": p.epsilon,
            "insipid": p.insipid,
            "mu": mu,
        }));
    }
    let app = applicability(&s);
    Ok(json!({
        "family": spec.label(),
        "delta": s.delta.to_string(),
        "euler": s.euler_sum(),
        "places": places,
        "variation": app.status.to_string(),
        "branch": app.branch.to_string(),
    })
    .to_string())
}

pub fn scan_csv(family: &str, params: &str, lo: i64, hi: i64) -> Result<String, String> {
    if hi < lo || hi - lo > MAX_SCAN {
        return Err(format!("range must be nonempty and span at most {MAX_SCAN}"));
    }
    let s = load(family, params)?.surface().map_err(|e| e.to_string())?;
    let rows = report::scan(&s, lo, hi, Paths::Both).map_err(|e| e.to_string())?;
    Ok(String::from_utf8(report::write_report(&Report::Scan(&rows), Format::Csv)).expect("utf8"))
}

pub fn vary_json(family: &str, params: &str, bound: u64) -> Result<String, String> {
    let s = load(family, params)?.surface().map_err(|e| e.to_string())?;
    let cert = variation_pair_search(&s, bound.min(MAX_BOUND)).map_err(|e| e.to_string())?;
    let ok = cert.verify(&s).map_err(|e| e.to_string())?;
    let mut v = report::certificate_value(&cert);
    v["verified"] = json!(ok);
    v["t_plus_W"] = json!(cert.report_plus.w_direct);
    v["t_minus_W"] = json!(cert.report_minus.w_direct);
    Ok(v.to_string())
}

#[wasm_bindgen]
pub fn classify(family: &str, params: &str) -> Result<String, JsError> {
    classify_json(family, params).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = rootNumbers)]
pub fn root_numbers(family: &str, params: &str, lo: i32, hi: i32) -> Result<String, JsError> {
    scan_csv(family, params, lo as i64, hi as i64).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn vary(family: &str, params: &str, bound: u32) -> Result<String, JsError> {
    vary_json(family, params, bound as u64).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_washington() {
        let v: serde_json::Value = serde_json::from_str(&classify_json("washington", "").unwrap()).unwrap();
        assert_eq!(v["places"][0]["kodaira"], "II");
        assert_eq!(v["places"][0]["mu"], true);
        assert_eq!(v["variation"], "inapplicable");
    }

    #[test]
    fn scan_small_range() {
        let csv = scan_csv("legendre", "", -3, 3).unwrap();
        assert_eq!(csv.lines().count(), 8);
        assert!(scan_csv("legendre", "", 0, 5000).is_err());
    }

    #[test]
    fn vary_g() {
        let v: serde_json::Value = serde_json::from_str(&vary_json("G", "w=1", 100_000).unwrap()).unwrap();
        assert_eq!(v["verified"], true);
        assert_eq!((v["t_plus_W"].as_i64(), v["t_minus_W"].as_i64()), (Some(1), Some(-1)));
    }

    #[test]
    fn spec_text_accepted() {
        let spec = load("H", "w=3").unwrap().serialize();
        assert_eq!(load(&spec, "").unwrap().serialize(), spec);
    }
}
