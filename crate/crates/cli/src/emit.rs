use qexpmap::golden::{poly_matrix_to_json, scalar_matrix_to_json};
use qexpmap::matrix::{factor_scaling, Matrix, PolyMatrix};
use qexpmap::ncrewrite::render::{self, RenderScalar, Style};
use qexpmap::ncrewrite::{half_string, poly_to_json, GenKind, NCPoly, Presentation, Sector, Word};
use qexpmap::qscalar::Ring;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Format;
use crate::Failure;

fn style(f: Format) -> Style {
    if f == Format::Latex {
        Style::Latex
    } else {
        Style::Text
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

/// Drops floating-point rounding leftovers; exact coefficients are never negligible.
pub fn chop<S: Ring>(x: &NCPoly<S>) -> NCPoly<S> {
    let scale = x.magnitude().max(1.0);
    let mut out = NCPoly::zero();
    for (w, c) in x.terms().filter(|(_, c)| !c.negligible(scale)) {
        out.add_term(w.clone(), c.clone());
    }
    out
}

pub fn poly<S: RenderScalar + Serialize, T: Ring>(
    x: &NCPoly<S>,
    pres: &Presentation<T>,
    f: Format,
) -> Result<String, Failure> {
    let x = &chop(x);
    Ok(match f {
        Format::Json => pretty(&poly_to_json(x, pres)?),
        _ => render::poly(x, pres, style(f)),
    })
}

/// A matrix of algebra elements; text and LaTeX pull out a common scaling power.
pub fn poly_matrix<S: RenderScalar + Serialize, T: Ring>(
    m: &PolyMatrix<S>,
    pres: &Presentation<T>,
    kind: &str,
    params: Value,
    f: Format,
) -> Result<String, Failure> {
    let m = &m.map(chop);
    if f == Format::Json {
        return Ok(pretty(&json!({ "kind": kind, "params": params, "rows": poly_matrix_to_json(m, pres)? })));
    }
    let (e, body) = factor_scaling(m, pres);
    let rows: Vec<Vec<String>> =
        body.to_rows().iter().map(|r| r.iter().map(|x| render::poly(x, pres, style(f))).collect()).collect();
    let prefactor = (e != 0).then(|| {
        let g = (0..pres.leg_size()).find(|&g| pres.kind(g) == GenKind::Scaling).expect("a scaling generator");
        let name = render::word(&Word::gen(g, 2), pres, style(f));
        match f {
            Format::Latex => format!("{name}^{{{}}}", half_string(e)),
            _ => format!("{name}^{}", half_string(e)),
        }
    });
    Ok(match f {
        Format::Latex => render::latex_matrix(&rows, prefactor.as_deref()),
        _ => match prefactor {
            Some(p) => format!("{p} *\n{}", render::text_matrix(&rows)),
            None => render::text_matrix(&rows),
        },
    })
}

pub fn scalar_matrix<S: RenderScalar + Serialize>(
    m: &Matrix<S>,
    sector: Sector,
    f: Format,
) -> Result<Vec<Vec<String>>, Failure> {
    Ok(m.to_rows().iter().map(|r| r.iter().map(|x| render::scalar(x, sector, style(f))).collect()).collect())
}

/// Several named scalar matrices (one for `rmatrix`, four for `rep`).
pub fn scalar_matrices<S: RenderScalar + Serialize>(
    named: &[(&str, &Matrix<S>)],
    sector: Sector,
    head: Value,
    f: Format,
) -> Result<String, Failure> {
    if f == Format::Json {
        let mut doc = head;
        for (name, m) in named {
            doc[*name] = scalar_matrix_to_json(m)?;
        }
        return Ok(pretty(&doc));
    }
    let mut out = Vec::new();
    for (name, m) in named {
        let rows = scalar_matrix(m, sector, f)?;
        out.push(match f {
            Format::Latex => render::latex_matrix(&rows, Some(&format!("{name} ="))),
            _ if named.len() == 1 => render::text_matrix(&rows),
            _ => format!("{name} =\n{}", render::text_matrix(&rows)),
        });
    }
    Ok(out.join("\n\n"))
}
