//! WebAssembly bindings for the browser demo. Every export returns a JSON
//! string; failures come back as `{"error": "..."}` rather than exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use higgsrel::classes::{abcu_table, ideal_generators};
use higgsrel::exact::parse_poly;
use higgsrel::localize::is_equivariant_relation;
use higgsrel::verify::dim_report;

/// Keeps the page responsive: the oracle-free operations below stay cheap
/// within these bounds.
const MAX_GENUS: usize = 6;
const MAX_TWIST: usize = 8;
const MAX_DEGREE: usize = 30;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn bounds(g: usize, n: usize) -> Result<(), String> {
    if !(2..=MAX_GENUS).contains(&g) {
        return Err(format!("genus must be between 2 and {MAX_GENUS}"));
    }
    if n > MAX_TWIST {
        return Err(format!("n must be at most {MAX_TWIST}"));
    }
    Ok(())
}

/// The three dimension counts for every `(g, n)` in the given inclusive ranges.
#[wasm_bindgen]
pub fn dimension_table(g_lo: usize, g_hi: usize, n_lo: usize, n_hi: usize) -> String {
    if g_lo > g_hi || n_lo > n_hi {
        return error("empty range");
    }
    let mut rows = Vec::new();
    for g in g_lo..=g_hi {
        for n in n_lo..=n_hi {
            if let Err(e) = bounds(g, n) {
                return error(e);
            }
            match dim_report(g, n) {
                Ok(r) => rows.push(serde_json::to_value(r).expect("reports serialize")),
                Err(e) => return error(e),
            }
        }
    }
    json!({ "rows": rows }).to_string()
}

/// Generators of `I^g_n` through a total degree, as polynomial text.
#[wasm_bindgen]
pub fn generators(g: usize, n: usize, max_degree: usize) -> String {
    if let Err(e) = bounds(g, n) {
        return error(e);
    }
    if max_degree > MAX_DEGREE {
        return error(format!("max degree must be at most {MAX_DEGREE}"));
    }
    let gens = ideal_generators(g, n, max_degree);
    let mut rows: Vec<Value> = gens
        .rhos
        .iter()
        .map(|(i, p)| {
            json!({
                "label": format!("rho^{}_{{{},{},{}}}", i.c, i.r, i.s, i.t),
                "degree": i.total_degree(),
                "poly": p.to_string(),
            })
        })
        .collect();
    if let Some(p) = &gens.gamma {
        rows.push(json!({
            "label": format!("gamma^{}", g + 1),
            "degree": 3 * (g + 1),
            "poly": p.to_string(),
        }));
    }
    json!({ "g": g, "n": n, "max_degree": max_degree, "generators": rows }).to_string()
}

/// Localization verdict for a polynomial in `a, b, g3, u` on `M^g_n`.
#[wasm_bindgen]
pub fn check_relation(g: usize, n: usize, poly: &str) -> String {
    if let Err(e) = bounds(g, n) {
        return error(e);
    }
    let p = match parse_poly(poly, &abcu_table()) {
        Ok(p) => p,
        Err(e) => return error(e),
    };
    if p.max_degree().unwrap_or(0) > 2 * MAX_DEGREE as u32 {
        return error(format!("total degree must be at most {MAX_DEGREE}"));
    }
    match is_equivariant_relation(g, n, &p) {
        Ok(r) => serde_json::to_string(&r).expect("reports serialize"),
        Err(e) => error(e),
    }
}
