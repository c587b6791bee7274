//! Number formatting and the JSON shape of a resource profile.

use qrel_core::Profile64;
use serde_json::{json, Value};

/// Shortest decimal that parses back to the same `f64`.
pub fn num(x: f64) -> String {
    format!("{x}")
}

pub fn profile_json(p: &Profile64) -> Value {
    json!({
        "concurrence": p.concurrence,
        "d2": p.d2,
        "m": p.m,
        "n": p.n,
        "purity": p.purity,
    })
}
