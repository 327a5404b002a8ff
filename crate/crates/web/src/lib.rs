//! WebAssembly entry points for the browser demo in `www/`.
//!
//! Every function returns a JSON string. Failures come back as
//! `{"error": "..."}` rather than as exceptions, so the same functions can
//! be exercised by native tests.

use dpb_core::families::{self, Family};
use dpb_core::identities::{self, Identity, IdentityParams, LambdaMode};
use dpb_core::parser;
use dpb_core::{LambdaPoly, DEFAULT_PRECISION};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest table length or series order the page will compute.
pub const MAX_ORDER: usize = DEFAULT_PRECISION;

#[derive(Serialize)]
struct Row {
    n: usize,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    sequence: Option<String>,
}

fn respond(result: Result<serde_json::Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn lambda_mode(s: &str) -> Result<LambdaMode, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(LambdaMode::Symbolic);
    }
    s.parse().map_err(|e: dpb_core::Error| e.to_string())
}

fn render(v: &LambdaPoly, mode: &LambdaMode) -> String {
    match mode {
        LambdaMode::Symbolic => v.to_string(),
        LambdaMode::At(x) => v.eval(x).to_string(),
    }
}

fn check_order(n: usize) -> Result<(), String> {
    if n > MAX_ORDER {
        return Err(format!("at most {MAX_ORDER} terms in the browser, got {n}"));
    }
    Ok(())
}

/// The first `n` values of a family, e.g. `table("dpb", 2, 1, 8, "symbolic")`.
#[wasm_bindgen]
pub fn table(family: &str, k: i32, r: u32, n: usize, lambda: &str) -> String {
    respond((|| {
        check_order(n)?;
        let family: Family = family.parse().map_err(|e: dpb_core::Error| e.to_string())?;
        let mode = lambda_mode(lambda)?;
        let table = families::table(family, k, r, n).map_err(|e| e.to_string())?;
        let rows: Vec<Row> = table
            .entries
            .iter()
            .enumerate()
            .map(|(n, v)| Row {
                n,
                value: render(v, &mode),
                sequence: None,
            })
            .collect();
        Ok(json!({ "family": family.id(), "k": k, "r": r, "lambda": mode, "rows": rows }))
    })())
}

/// Coefficients `[tⁿ]` and `n!·[tⁿ]` of a series expression.
#[wasm_bindgen]
pub fn evaluate(expr: &str, order: usize, lambda: &str) -> String {
    respond((|| {
        check_order(order)?;
        let mode = lambda_mode(lambda)?;
        let series = parser::eval_str(expr, order).map_err(|e| {
            let span = e.span().map(|s| json!([s.start, s.end]));
            json!({ "message": e.to_string(), "span": span }).to_string()
        })?;
        let rows: Vec<Row> = series
            .coeffs()
            .iter()
            .zip(series.egf_values())
            .enumerate()
            .map(|(n, (c, v))| Row {
                n,
                value: render(c, &mode),
                sequence: Some(render(&v, &mode)),
            })
            .collect();
        Ok(json!({ "expr": expr, "lambda": mode, "rows": rows }))
    })())
}

/// Runs a catalog identity, `all`, or an equation `lhs == rhs`.
#[wasm_bindgen]
pub fn verify(target: &str, k: i32, r: u32, n: usize, order: usize, seed: u64) -> String {
    respond((|| {
        if target.contains("==") {
            check_order(order)?;
            let report = identities::check_equation(target, order, &LambdaMode::Symbolic)
                .map_err(|e| e.to_string())?;
            return serde_json::to_value([report]).map_err(|e| e.to_string());
        }
        // keep the page responsive: fewer random samples than the CLI
        let params = IdentityParams::new(k, r, n)
            .with_seed(seed)
            .with_samples(10, 8);
        let ids: Vec<Identity> = if target == "all" {
            Identity::ALL.to_vec()
        } else {
            vec![target.parse().map_err(|e: dpb_core::Error| e.to_string())?]
        };
        let tables = identities::Tables::for_params(&params).map_err(|e| e.to_string())?;
        let reports = ids
            .into_iter()
            .map(|id| identities::verify_with_tables(id, &params, &tables))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        serde_json::to_value(reports).map_err(|e| e.to_string())
    })())
}

/// Identifiers accepted by [`table`] and [`verify`].
#[wasm_bindgen]
pub fn catalog() -> String {
    let families: Vec<&str> = Family::ALL.iter().map(|f| f.id()).collect();
    let identities: Vec<&str> = Identity::ALL.iter().map(|i| i.id()).collect();
    json!({ "families": families, "identities": identities }).to_string()
}
