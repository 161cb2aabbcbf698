//! Golden documents: the explicit low-spin matrices in JSON, byte-stable.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::expmap::{l_matrix, r_matrix_rep, t_matrix_closed};
use crate::matrix::{Matrix, PolyMatrix};
use crate::ncrewrite::{half_string, poly_to_json, Presentation};
use crate::qalg_u::{Label, Norm, Sign, UAlgebra};
use crate::qgroup_a::AAlgebra;
use crate::qscalar::{RadScalar, Ring, ScalarCtx};

/// Rows of polynomial JSON.
pub fn poly_matrix_to_json<S: Ring + Serialize, T: Ring>(m: &PolyMatrix<S>, pres: &Presentation<T>) -> Result<Value> {
    let rows = m
        .to_rows()
        .iter()
        .map(|row| row.iter().map(|e| poly_to_json(e, pres)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Value::from(rows))
}

/// Rows of scalar JSON.
pub fn scalar_matrix_to_json<S: Ring + Serialize>(m: &Matrix<S>) -> Result<Value> {
    Ok(serde_json::to_value(m.to_rows())?)
}

fn entry(kind: &str, params: Value, rows: Value) -> Value {
    json!({ "kind": kind, "params": params, "rows": rows })
}

/// All recorded matrices, keyed by name, in symmetric normalization.
pub fn golden_document() -> Result<Value> {
    let ctx = ScalarCtx::<RadScalar>::exact();
    let a = AAlgebra::new(ctx.clone())?;
    let u = UAlgebra::new(ctx.clone())?;
    let mut doc = Map::new();
    for (name, l) in [("T(1/2;1/2)", Label { j2: 1, z2: 1 }), ("T(1;1/2)", Label { j2: 2, z2: 1 })] {
        let t = t_matrix_closed(l, Norm::Symmetric, &ctx)?;
        let params = json!({ "j": half_string(l.j2 as i32), "z": half_string(l.z2) });
        doc.insert(name.into(), entry("T", params, poly_matrix_to_json(&t.entries, &a.pres)?));
    }
    for (name, sign, j2) in
        [("L+(1/2)", Sign::Plus, 1), ("L-(1/2)", Sign::Minus, 1), ("L+(1)", Sign::Plus, 2), ("L-(1)", Sign::Minus, 2)]
    {
        let l = l_matrix(&u, &a, sign, j2, Norm::Symmetric)?;
        let params = json!({ "sign": sign.to_string(), "j": half_string(j2 as i32) });
        doc.insert(name.into(), entry("L", params, poly_matrix_to_json(&l.entries, &u.pres)?));
    }
    let half = Label { j2: 1, z2: 1 };
    let r = r_matrix_rep(half, half, Norm::Symmetric, &ctx)?;
    let params = json!({ "j1": "1/2", "z1": "1/2", "j2": "1/2", "z2": "1/2" });
    doc.insert("R(1/2,1/2)".into(), entry("R", params, scalar_matrix_to_json(&r)?));
    Ok(Value::Object(doc))
}

/// The golden document as written to disk: pretty-printed with a trailing newline.
pub fn golden_text() -> Result<String> {
    let mut s = serde_json::to_string_pretty(&golden_document()?)?;
    s.push('\n');
    Ok(s)
}

/// Differences between a recorded golden file and the current output; empty when byte-identical.
pub fn golden_diff(recorded: &str) -> Result<Vec<String>> {
    let current = golden_text()?;
    if recorded == current {
        return Ok(Vec::new());
    }
    let old: Value = serde_json::from_str(recorded).map_err(|e| Error::Json(format!("recorded golden file: {e}")))?;
    let new: Value = serde_json::from_str(&current)?;
    let (Some(old), Some(new)) = (old.as_object(), new.as_object()) else {
        return Ok(vec!["recorded golden file is not a JSON object".into()]);
    };
    let mut out = Vec::new();
    for (name, v) in new {
        match old.get(name) {
            None => out.push(format!("{name}: missing from the recorded file")),
            Some(o) => diff_entry(name, o, v, &mut out),
        }
    }
    for name in old.keys().filter(|k| !new.contains_key(*k)) {
        out.push(format!("{name}: not produced any more"));
    }
    if out.is_empty() {
        out.push("contents agree but the byte layout differs".into());
    }
    Ok(out)
}

fn diff_entry(name: &str, old: &Value, new: &Value, out: &mut Vec<String>) {
    if old == new {
        return;
    }
    for key in ["kind", "params"] {
        if old.get(key) != new.get(key) {
            out.push(format!("{name}: {key} differs"));
        }
    }
    let rows = |v: &Value| v.get("rows").and_then(Value::as_array).cloned().unwrap_or_default();
    let (ro, rn) = (rows(old), rows(new));
    if ro.len() != rn.len() {
        out.push(format!("{name}: {} rows recorded, {} expected", ro.len(), rn.len()));
        return;
    }
    for (i, (a, b)) in ro.iter().zip(&rn).enumerate() {
        let (a, b) = (a.as_array().cloned().unwrap_or_default(), b.as_array().cloned().unwrap_or_default());
        if a.len() != b.len() {
            out.push(format!("{name}: row {i} has {} entries recorded, {} expected", a.len(), b.len()));
            continue;
        }
        for (k, (x, y)) in a.iter().zip(&b).enumerate() {
            if x != y {
                out.push(format!("{name}[{i}][{k}]: recorded {x}, expected {y}"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_and_self_consistent() {
        let a = golden_text().unwrap();
        assert_eq!(a, golden_text().unwrap());
        assert!(golden_diff(&a).unwrap().is_empty());
        let doc = golden_document().unwrap();
        assert_eq!(doc.as_object().unwrap().len(), 7);
        assert_eq!(doc["T(1/2;1/2)"]["rows"][0][1][0]["word"], json!([["b", 1]]));
    }

    #[test]
    fn tampering_is_located() {
        let text = golden_text().unwrap();
        let mut doc: Value = serde_json::from_str(&text).unwrap();
        doc["L+(1)"]["rows"][1][0] = json!([]);
        let diff = golden_diff(&serde_json::to_string_pretty(&doc).unwrap()).unwrap();
        assert_eq!(diff.len(), 1, "{diff:?}");
        assert!(diff[0].starts_with("L+(1)[1][0]"));
        let reformatted = serde_json::to_string(&serde_json::from_str::<Value>(&text).unwrap()).unwrap();
        assert_eq!(golden_diff(&reformatted).unwrap(), ["contents agree but the byte layout differs"]);
    }
}
