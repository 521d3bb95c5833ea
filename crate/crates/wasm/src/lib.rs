//! Browser bindings: three JSON-returning calls behind `www/index.html`.
//!
//! The plain functions are ordinary Rust so they can be tested natively; the
//! `#[wasm_bindgen]` wrappers only convert errors into JS exceptions.

use ggl_core::identities::{holds_exhaustively, IdentityId};
use ggl_core::structure::structure_report;
use ggl_core::{Budget, Carrier, Groupoid, GroupoidSpec, Shape};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest table the page will draw.
const MAX_TABLE: usize = 64;
/// Largest modulus for the (t, u) identity map.
const MAX_GRID: u64 = 24;

fn build(carrier: &str, shape: &str, pair: &str) -> Result<Groupoid, String> {
    let c: Carrier = carrier.parse().map_err(|e| format!("{e}"))?;
    let s: Shape = shape.parse().map_err(|e| format!("{e}"))?;
    let (t, u) = pair.split_once(',').ok_or("pair must look like T,U")?;
    let t = c.parse_param(t.trim()).map_err(|e| e.to_string())?;
    let u = c.parse_param(u.trim()).map_err(|e| e.to_string())?;
    let spec = GroupoidSpec::new(c, s, t, u).map_err(|e| e.to_string())?;
    Groupoid::build(spec).map_err(|e| e.to_string())
}

/// `{labels, table}` for the heatmap.
pub fn cayley_json(carrier: &str, shape: &str, pair: &str) -> Result<String, String> {
    let g = build(carrier, shape, pair)?;
    let t = g.cayley_table(MAX_TABLE).map_err(|e| e.to_string())?;
    Ok(t.to_json())
}

/// Which (t, u) over a modular or pure-neutrosophic carrier satisfy an
/// identity: `{n, identity, cells}` with `cells[t][u]` true/false/null (for
/// the excluded pair (0, 0)).
pub fn identity_map_json(carrier: &str, identity: &str) -> Result<String, String> {
    let c: Carrier = carrier.parse().map_err(|e| format!("{e}"))?;
    let n = c.modulus().ok_or("the map needs a finite carrier")?;
    if n > MAX_GRID || c.size() != Some(n) {
        return Err(format!("the map supports zn:N and zni:N with N <= {MAX_GRID}"));
    }
    let id: IdentityId = identity.parse().map_err(|e| format!("{e}"))?;
    let mut cells = Vec::new();
    for t in 0..n {
        let mut row = Vec::new();
        for u in 0..n {
            if t == 0 && u == 0 {
                row.push(serde_json::Value::Null);
                continue;
            }
            let g = build(carrier, "scalar", &format!("{t},{u}"))?;
            row.push(holds_exhaustively(&g, id).into());
        }
        cells.push(row);
    }
    Ok(json!({ "n": n, "identity": id, "cells": cells }).to_string())
}

/// Structure report for a scalar groupoid.
pub fn structure_json(carrier: &str, pair: &str) -> Result<String, String> {
    let g = build(carrier, "scalar", pair)?;
    let r = structure_report(&g, 16, &Budget::default()).map_err(|e| e.to_string())?;
    serde_json::to_string(&r).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn cayley(carrier: &str, shape: &str, pair: &str) -> Result<String, JsError> {
    cayley_json(carrier, shape, pair).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = identityMap)]
pub fn identity_map(carrier: &str, identity: &str) -> Result<String, JsError> {
    identity_map_json(carrier, identity).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn structure(carrier: &str, pair: &str) -> Result<String, JsError> {
    structure_json(carrier, pair).map_err(|e| JsError::new(&e))
}
