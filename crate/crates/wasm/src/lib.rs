//! wasm-bindgen exports for the static page in `www/`. Each export returns a
//! JSON string; errors come back as a thrown string with a caret line.

use num_bigint::BigInt;
use serde_json::{json, Value};
use surdcf::approx::to_decimal;
use surdcf::cf::{
    discriminant_poly_in_cn, evaluate_general, evaluate_zero_periodic, expand, theorem1_report, ConvergentTable,
    DEFAULT_MAX_STEPS,
};
use surdcf::notation::{parse_cf, parse_quad, render_cf, render_quad};
use surdcf::number::QuadIrr;
use wasm_bindgen::prelude::*;

const DECIMAL_DIGITS: u32 = 24;
const MAX_CN: u32 = 200;

fn value_json(x: &QuadIrr) -> Value {
    json!({
        "text": render_quad(x),
        "rational_part": x.rat().to_string(),
        "radicand": x.radicand().to_string(),
        "decimal": to_decimal(x, DECIMAL_DIGITS),
    })
}

/// Value, `2a` and (for `[0; (..)]`) ε of a periodic expansion.
pub fn evaluate_json(text: &str) -> Result<Value, String> {
    let cf = parse_cf(text).map_err(|e| e.annotate(text))?;
    if cf.repeating.is_empty() {
        return Err("error: expansion has no repeating block".into());
    }
    let x = evaluate_general(&cf).map_err(|e| format!("error: {e}"))?;
    let digits: Vec<BigInt> = cf.initial.iter().chain(&cf.repeating).cloned().collect();
    let table = ConvergentTable::build(&digits).map_err(|e| format!("error: {e}"))?;
    let convergents: Vec<Value> = (0..=table.last() as isize)
        .map(|k| json!({ "k": k, "p": table.p(k).to_string(), "q": table.q(k).to_string() }))
        .collect();
    let epsilon = if cf.is_zero_periodic() {
        theorem1_report(&cf.repeating).ok().map(|t| t.epsilon.to_string())
    } else {
        None
    };
    Ok(json!({
        "expansion": render_cf(&cf),
        "value": value_json(&x),
        "two_a": (x.rat() * &2.into()).to_string(),
        "epsilon": epsilon,
        "convergents": convergents,
    }))
}

/// Continued fraction of a surd such as `sqrt(39/44)` or `(1 + sqrt(5))/2`.
pub fn expand_json(text: &str) -> Result<Value, String> {
    let x = parse_quad(text).map_err(|e| e.annotate(text))?;
    let cf = expand(&x, DEFAULT_MAX_STEPS).map_err(|e| format!("error: {e}"))?;
    Ok(json!({
        "value": value_json(&x),
        "expansion": render_cf(&cf),
        "preperiod": cf.initial.len(),
        "period": cf.repeating.len(),
    }))
}

fn parse_prefix(text: &str) -> Result<Vec<BigInt>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<BigInt>() {
            Ok(d) if d >= BigInt::from(1) => Ok(d),
            _ => Err(format!("error: digit {s:?} is not a positive integer")),
        })
        .collect()
}

/// Blocks `prefix, c_n` for `c_n = 1..=max_cn`: ε stays put while `2a`
/// and the discriminant move with `c_n`.
pub fn explore_cn_json(prefix: &str, max_cn: u32) -> Result<Value, String> {
    let prefix = parse_prefix(prefix)?;
    let max_cn = max_cn.clamp(1, MAX_CN);
    let poly = discriminant_poly_in_cn(&prefix).map_err(|e| format!("error: {e}"))?;
    let mut rows = Vec::new();
    for cn in 1..=max_cn {
        let cn = BigInt::from(cn);
        let mut block = prefix.clone();
        block.push(cn.clone());
        let t = theorem1_report(&block).map_err(|e| format!("error: {e}"))?;
        let x = evaluate_zero_periodic(&block).map_err(|e| format!("error: {e}"))?;
        rows.push(json!({
            "cn": cn.to_string(),
            "two_a": t.two_a.to_string(),
            "epsilon": t.epsilon.to_string(),
            "discriminant": poly.at(&cn).to_string(),
            "value": render_quad(&x),
        }));
    }
    Ok(json!({
        "polynomial": { "a": poly.a.to_string(), "b": poly.b.to_string(), "c": poly.c.to_string() },
        "denominator": poly.denominator.to_string(),
        "rows": rows,
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn evaluate(text: &str) -> Result<String, JsValue> {
    to_js(evaluate_json(text))
}

#[wasm_bindgen(js_name = expandSurd)]
pub fn expand_surd(text: &str) -> Result<String, JsValue> {
    to_js(expand_json(text))
}

#[wasm_bindgen(js_name = exploreCn)]
pub fn explore_cn(prefix: &str, max_cn: u32) -> Result<String, JsValue> {
    to_js(explore_cn_json(prefix, max_cn))
}
