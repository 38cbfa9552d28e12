//! Browser bindings for a small demo page: normal forms, products of basis
//! elements at a chosen `ν`, and Gram positivity.
//!
//! The `*_text` functions hold the logic and are plain Rust; the exported
//! wrappers only convert errors for JavaScript.

use dcoset::presented::{basis_enumerate, parse_word, structure_table, Normalizer};
use dcoset::rational::{format_q, parse_q};
use dcoset::verify::gram_positivity;
use dcoset::Limits;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// The demo stays small enough for a single-threaded page.
const DEMO_MAX_ALPHA: usize = 3;

fn demo_limits() -> Limits {
    Limits {
        max_table_alpha: DEMO_MAX_ALPHA,
        ..Limits::default()
    }
}

fn to_js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

pub fn basis_text(alpha: usize) -> Result<String, String> {
    let basis = basis_enumerate(alpha, &demo_limits()).map_err(|e| e.to_string())?;
    let names: Vec<String> = basis.iter().map(|m| m.to_string()).collect();
    Ok(json!(names).to_string())
}

pub fn normalize_text(alpha: usize, word: &str) -> Result<String, String> {
    demo_limits().check_table_alpha(alpha).map_err(|e| e.to_string())?;
    let tokens = parse_word(word, alpha).map_err(|e| e.to_string())?;
    let x = Normalizer::new(alpha).normalize(&tokens).map_err(|e| e.to_string())?;
    Ok(x.to_string())
}

/// `e_p · e_q` (1-based) both as polynomials and at `ν = nu`.
pub fn product_text(alpha: usize, p: usize, q: usize, nu: &str) -> Result<String, String> {
    let table = structure_table(alpha, &demo_limits()).map_err(|e| e.to_string())?;
    let nu = parse_q(nu).map_err(|e| e.to_string())?;
    let dim = table.dim();
    if !(1..=dim).contains(&p) || !(1..=dim).contains(&q) {
        return Err(format!("basis indices run from 1 to {dim}"));
    }
    let terms: Vec<_> = table
        .entry(p - 1, q - 1)
        .iter()
        .map(|(r, c)| {
            json!({
                "r": r + 1,
                "basis": table.basis()[*r].to_string(),
                "poly": c.to_string(),
                "value": format_q(&c.eval(&nu)),
            })
        })
        .collect();
    Ok(json!({
        "left": table.basis()[p - 1].to_string(),
        "right": table.basis()[q - 1].to_string(),
        "product": table.product(p - 1, q - 1).to_string(),
        "terms": terms,
    })
    .to_string())
}

pub fn gram_text(alpha: usize, nu: &str) -> Result<String, String> {
    let table = structure_table(alpha, &demo_limits()).map_err(|e| e.to_string())?;
    let nu = parse_q(nu).map_err(|e| e.to_string())?;
    let (g, verdict) = gram_positivity(&table, &nu).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<String>> = g.iter().map(|r| r.iter().map(format_q).collect()).collect();
    Ok(json!({
        "matrix": rows,
        "pivots": verdict.pivots.iter().map(format_q).collect::<Vec<_>>(),
        "positive_definite": verdict.positive_definite,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn basis(alpha: usize) -> Result<String, JsValue> {
    to_js(basis_text(alpha))
}

#[wasm_bindgen]
pub fn normalize_word(alpha: usize, word: &str) -> Result<String, JsValue> {
    to_js(normalize_text(alpha, word))
}

#[wasm_bindgen]
pub fn product(alpha: usize, p: usize, q: usize, nu: &str) -> Result<String, JsValue> {
    to_js(product_text(alpha, p, q, nu))
}

#[wasm_bindgen]
pub fn gram(alpha: usize, nu: &str) -> Result<String, JsValue> {
    to_js(gram_text(alpha, nu))
}
