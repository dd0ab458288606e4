//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON document. The plain functions are usable from
//! native Rust; the `wasm_bindgen` wrappers turn their errors into JS strings.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use wreathmac::cherednik::{c_delta, c_l_from, d_delta, graded_character_l, kostka_matrix};
use wreathmac::combinatorics::{multipartitions_of, Multipartition};
use wreathmac::render::{matrix_to_json, MatrixKind};
use wreathmac::wreath::{fake_degree_wreath, wreath_char_table, KostkaRoute};

/// Keeps a single request within a couple of seconds in the browser.
pub const MAX_IRREDUCIBLES: usize = 60;

fn check_size(ell: usize, n: usize) -> Result<(), String> {
    if ell == 0 {
        return Err("l must be at least 1".into());
    }
    let count = multipartitions_of(ell, n).len();
    if count > MAX_IRREDUCIBLES {
        return Err(format!("l={ell}, n={n} has {count} irreducibles; the demo allows at most {MAX_IRREDUCIBLES}"));
    }
    Ok(())
}

fn parsed(src: String) -> Value {
    serde_json::from_str(&src).expect("rendered JSON parses")
}

pub fn kostka_table(ell: usize, n: usize) -> Result<String, String> {
    check_size(ell, n)?;
    let m = kostka_matrix(ell, n, KostkaRoute::Plethystic, false).map_err(|e| e.to_string())?;
    Ok(matrix_to_json(&m, MatrixKind::Kostka))
}

/// `C_Delta`, `D_Delta`, `C_L` and whether `C_Delta = D_Delta C_L`.
pub fn decomposition(ell: usize, n: usize) -> Result<String, String> {
    check_size(ell, n)?;
    let cd = c_delta(ell, n).map_err(|e| e.to_string())?;
    let cl = c_l_from(&cd).map_err(|e| e.to_string())?;
    let dd = d_delta(ell, n);
    let holds = dd.mul(&cl).map_err(|e| e.to_string())? == cd;
    let doc = json!({
        "matrices": [
            parsed(matrix_to_json(&cd, MatrixKind::CDelta)),
            parsed(matrix_to_json(&dd, MatrixKind::DDelta)),
            parsed(matrix_to_json(&cl, MatrixKind::CL)),
        ],
        "factorization_holds": holds,
    });
    Ok(doc.to_string())
}

/// Graded multiplicities of every irreducible in the simple module `L(label)`.
pub fn graded_character(label: &str) -> Result<String, String> {
    let lambda: Multipartition = label.parse().map_err(|e: wreathmac::Error| e.to_string())?;
    check_size(lambda.ell(), lambda.size())?;
    let g = graded_character_l(&lambda).map_err(|e| e.to_string())?;
    let table = wreath_char_table(lambda.ell(), lambda.size());
    let rows = g
        .multiplicities
        .iter()
        .map(|(mu, k)| {
            let dim = table.dimension(mu).map_err(|e| e.to_string())?;
            Ok(json!({ "irreducible": mu.to_string(), "dimension": dim, "multiplicity": k.to_string() }))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let doc = json!({
        "label": lambda.to_string(),
        "fake_degree": fake_degree_wreath(&lambda).to_string(),
        "total_dimension": g.total_dimension().map_err(|e| e.to_string())?,
        "multiplicities": rows,
    });
    Ok(doc.to_string())
}

#[wasm_bindgen(js_name = kostkaTable)]
pub fn kostka_table_js(ell: usize, n: usize) -> Result<String, JsValue> {
    kostka_table(ell, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = decomposition)]
pub fn decomposition_js(ell: usize, n: usize) -> Result<String, JsValue> {
    decomposition(ell, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = gradedCharacter)]
pub fn graded_character_js(label: &str) -> Result<String, JsValue> {
    graded_character(label).map_err(|e| JsValue::from_str(&e))
}
