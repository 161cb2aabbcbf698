//! Text and LaTeX rendering of scalars, polynomials and matrices.
//!
//! Text output is accepted by the parser (except for radicals, written
//! `sqrt([n]*...)`). Terms sharing a nontrivial denominator are collected over
//! one fraction bar.

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::poly::NCPoly;
use super::presentation::{GenKind, Presentation, Sector};
use super::word::Word;
use crate::qscalar::{FracScalar, HalfLaurent, RadScalar, Ring};

/// An optional shared radical with its (word, signed coefficient pieces) entries.
type Group = (Option<String>, Vec<(String, Vec<(bool, String)>)>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

/// One summand of a coefficient: an optional denominator and signed numerator monomials.
pub struct Piece {
    pub den: Option<String>,
    pub terms: Vec<(bool, String)>,
}

pub trait RenderScalar: Ring {
    fn pieces(&self, sector: Sector, style: Style) -> Vec<Piece>;
}

impl RenderScalar for FracScalar {
    fn pieces(&self, sector: Sector, style: Style) -> Vec<Piece> {
        vec![frac_piece(self, sector, style, None)]
    }
}

impl RenderScalar for RadScalar {
    fn pieces(&self, sector: Sector, style: Style) -> Vec<Piece> {
        self.terms()
            .iter()
            .map(|(c, r)| {
                let root = if r.is_empty() {
                    None
                } else {
                    Some(match style {
                        Style::Text => {
                            let inner: Vec<String> = r.iter().map(|n| format!("[{n}]")).collect();
                            format!("sqrt({})", inner.join("*"))
                        }
                        Style::Latex => r.iter().map(|n| format!("[{n}]^{{\\frac{{1}}{{2}}}}")).collect(),
                    })
                };
                frac_piece(c, sector, style, root.as_deref())
            })
            .collect()
    }
}

impl RenderScalar for f64 {
    fn pieces(&self, _sector: Sector, _style: Style) -> Vec<Piece> {
        let body = if self.abs() == 1.0 { String::new() } else { format!("{}", self.abs()) };
        vec![Piece { den: None, terms: vec![(*self < 0.0, body)] }]
    }
}

fn frac_piece(c: &FracScalar, sector: Sector, style: Style, root: Option<&str>) -> Piece {
    let den = (!c.den().is_one()).then(|| {
        let d = laurent(c.den(), sector, style);
        match style {
            Style::Text if c.den().len() > 1 || d.contains('*') => format!("({d})"),
            _ => d,
        }
    });
    if let (Some(root), true) = (root, c.num().len() > 1) {
        let terms = laurent_terms(c.num(), sector, style);
        let lead = terms[0].0;
        let inner = signed_sum(&if lead { flip(&terms) } else { terms }, style);
        let body = join(&[format!("({inner})"), root.to_string()], style);
        return Piece { den, terms: vec![(lead, body)] };
    }
    let terms = c
        .num()
        .terms()
        .rev()
        .map(|(&e, k)| {
            let mut m = match style {
                Style::Latex => root
                    .map(str::to_string)
                    .into_iter()
                    .chain([monomial(&k.abs(), e, sector, style)])
                    .collect::<Vec<_>>(),
                Style::Text => {
                    [monomial(&k.abs(), e, sector, style)].into_iter().chain(root.map(str::to_string)).collect()
                }
            };
            m.retain(|s| !s.is_empty());
            (k.is_negative(), join(&m, style))
        })
        .collect();
    Piece { den, terms }
}

fn join(parts: &[String], style: Style) -> String {
    let parts: Vec<&str> = parts.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
    match style {
        Style::Text => parts.join("*"),
        Style::Latex => {
            let mut out = String::new();
            for p in parts {
                if ends_with_control_word(&out) && p.starts_with(|c: char| c.is_ascii_alphabetic()) {
                    out.push(' ');
                }
                out.push_str(p);
            }
            out
        }
    }
}

fn ends_with_control_word(s: &str) -> bool {
    let tail = s.trim_end_matches(|c: char| c.is_ascii_alphabetic());
    tail.len() < s.len() && tail.ends_with('\\')
}

/// Exponent given in halves.
fn half(e: i32, style: Style) -> String {
    match style {
        Style::Text if e % 2 == 0 => format!("{}", e / 2),
        Style::Text => format!("{e}/2"),
        Style::Latex if e % 2 == 0 => format!("{}", e / 2),
        Style::Latex if e < 0 => format!("-\\frac{{{}}}{{2}}", -e),
        Style::Latex => format!("\\frac{{{e}}}{{2}}"),
    }
}

fn power(base: &str, e: i32, style: Style) -> String {
    match (e, style) {
        (0, _) => String::new(),
        (2, _) => base.to_string(),
        (_, Style::Text) => format!("{base}^{}", half(e, style)),
        (_, Style::Latex) => {
            let h = half(e, style);
            if h.len() == 1 {
                format!("{base}^{h}")
            } else {
                format!("{base}^{{{h}}}")
            }
        }
    }
}

fn rational(k: &BigRational, style: Style) -> String {
    if k.is_one() {
        String::new()
    } else if k.is_integer() {
        k.to_integer().to_string()
    } else {
        match style {
            Style::Text => format!("{}/{}", k.numer(), k.denom()),
            Style::Latex => format!("\\frac{{{}}}{{{}}}", k.numer(), k.denom()),
        }
    }
}

/// `k·Q^{u/2}λ^{v/2}` for `k > 0`, without sign; empty for 1.
fn monomial(k: &BigRational, (u, v): (i32, i32), sector: Sector, style: Style) -> String {
    let mut parts = vec![rational(k, style)];
    match (sector, style) {
        (Sector::OneParam, _) if v == 0 => parts.push(power("q", u, style)),
        (Sector::TwoParam, Style::Text) if (u + v) % 4 == 0 && (u - v) % 4 == 0 => {
            parts.push(power("p", (u + v) / 2, style));
            parts.push(power("q", (u - v) / 2, style));
        }
        (_, Style::Text) => {
            parts.push(power("Q", u, style));
            parts.push(power("lambda", v, style));
        }
        (_, Style::Latex) => {
            parts.push(power("Q", u, style));
            parts.push(power("\\lambda", v, style));
        }
    }
    join(&parts, style)
}

fn signed_sum(terms: &[(bool, String)], style: Style) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.iter().enumerate() {
        let body = if body.is_empty() { "1" } else { body.as_str() };
        match (i, neg, style) {
            (0, true, _) => out.push('-'),
            (0, false, _) => {}
            (_, true, Style::Text) => out.push_str(" - "),
            (_, false, Style::Text) => out.push_str(" + "),
            (_, true, Style::Latex) => out.push('-'),
            (_, false, Style::Latex) => out.push('+'),
        }
        out.push_str(body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// A Laurent polynomial, highest `Q` power first.
pub fn laurent(x: &HalfLaurent, sector: Sector, style: Style) -> String {
    signed_sum(&laurent_terms(x, sector, style), style)
}

fn laurent_terms(x: &HalfLaurent, sector: Sector, style: Style) -> Vec<(bool, String)> {
    x.terms().rev().map(|(&e, k)| (k.is_negative(), monomial(&k.abs(), e, sector, style))).collect()
}

fn flip(terms: &[(bool, String)]) -> Vec<(bool, String)> {
    terms.iter().map(|(n, b)| (!n, b.clone())).collect()
}

fn fraction(num: &str, den: &str, style: Style) -> String {
    match style {
        Style::Text => format!("{num}/{den}"),
        Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
    }
}

/// Renders a word with the generator names of `pres`.
pub fn word<T: Ring>(w: &Word, pres: &Presentation<T>, style: Style) -> String {
    let parts: Vec<String> = w
        .runs()
        .iter()
        .map(|&(g, e)| {
            let gen = &pres.generators()[g];
            let doubled = if gen.kind == GenKind::Scaling { e } else { 2 * e };
            match style {
                Style::Text => power(&gen.name, doubled, style),
                Style::Latex => latex_gen(&gen.name, doubled),
            }
        })
        .collect();
    join(&parts, style)
}

fn latex_gen(name: &str, doubled: i32) -> String {
    let (base, leg) = match name.split_once('_') {
        Some((b, l)) => (b, Some(l)),
        None => (name, None),
    };
    let s = match base {
        "k" => match doubled {
            2 => "q^{J_0}".to_string(),
            -2 => "q^{-J_0}".to_string(),
            _ => format!("q^{{{}J_0}}", half(doubled, Style::Latex)),
        },
        "D" => power("{\\cal D}", doubled, Style::Latex),
        "e" => power("J_+", doubled, Style::Latex),
        "f" => power("J_-", doubled, Style::Latex),
        _ => power(base, doubled, Style::Latex),
    };
    match leg {
        Some(l) => format!("({s})_{{{l}}}"),
        None => s,
    }
}

/// Renders a polynomial in the presentation's generator names.
pub fn poly<S: RenderScalar, T: Ring>(x: &NCPoly<S>, pres: &Presentation<T>, style: Style) -> String {
    let sector = pres.sector();
    // Groups keyed by denominator, the trivial denominator first.
    let mut groups: Vec<Group> = vec![(None, Vec::new())];
    for (w, c) in x.terms() {
        let wt = word(w, pres, style);
        for piece in c.pieces(sector, style) {
            let slot = match groups.iter().position(|(d, _)| *d == piece.den) {
                Some(i) => i,
                None => {
                    groups.push((piece.den.clone(), Vec::new()));
                    groups.len() - 1
                }
            };
            let list = &mut groups[slot].1;
            match list.iter_mut().find(|(ww, _)| *ww == wt) {
                Some((_, t)) => t.extend(piece.terms),
                None => list.push((wt.clone(), piece.terms)),
            }
        }
    }
    let mut out: Vec<(bool, String)> = Vec::new();
    for (den, list) in groups {
        match den {
            None => {
                for (wt, nums) in list {
                    if let [(neg, m)] = nums.as_slice() {
                        out.push((*neg, join(&[m.clone(), wt], style)));
                    } else {
                        let lead = nums[0].0;
                        let inner = signed_sum(&if lead { flip(&nums) } else { nums }, style);
                        out.push((lead, join(&[format!("({inner})"), wt], style)));
                    }
                }
            }
            Some(d) => {
                let flat: Vec<(bool, String)> = list
                    .into_iter()
                    .flat_map(|(wt, nums)| nums.into_iter().map(move |(n, m)| (n, join(&[m, wt.clone()], style))))
                    .collect();
                if flat.is_empty() {
                    continue;
                }
                let lead = flat[0].0;
                let inner_terms = if lead { flip(&flat) } else { flat };
                let num = if inner_terms.len() == 1 {
                    let b = &inner_terms[0].1;
                    if b.is_empty() {
                        "1".to_string()
                    } else {
                        b.clone()
                    }
                } else if style == Style::Text {
                    format!("({})", signed_sum(&inner_terms, style))
                } else {
                    signed_sum(&inner_terms, style)
                };
                out.push((lead, fraction(&num, &d, style)));
            }
        }
    }
    signed_sum(&out, style)
}

/// Renders a scalar on its own.
pub fn scalar<S: RenderScalar>(c: &S, sector: Sector, style: Style) -> String {
    let pres = crate::ncrewrite::presentation::PresentationBuilder::<FracScalar>::new("scalars", sector)
        .build()
        .expect("empty presentation");
    poly(&NCPoly::constant(c.clone()), &pres, style)
}

/// Text matrix: one row per line.
pub fn text_matrix(rows: &[Vec<String>]) -> String {
    let lines: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", lines.join(",\n "))
}

/// LaTeX `array` environment, optionally with a prefactor.
pub fn latex_matrix(rows: &[Vec<String>], prefactor: Option<&str>) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let body: Vec<String> = rows.iter().map(|r| r.join(" & ")).collect();
    format!(
        "{}\\left( \\begin{{array}}{{{}}}\n{}\n\\end{{array}} \\right)",
        prefactor.map(|p| format!("{p} ")).unwrap_or_default(),
        "c".repeat(cols),
        body.join(" \\\\\n")
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_text() {
        let x = &HalfLaurent::q() - &HalfLaurent::p().inv_monomial().unwrap();
        assert_eq!(laurent(&x, Sector::TwoParam, Style::Text), "q - p^-1");
        let y = HalfLaurent::unit(-1, -2);
        assert_eq!(laurent(&y, Sector::TwoParam, Style::Text), "Q^-1/2*lambda^-1");
        assert_eq!(laurent(&y, Sector::TwoParam, Style::Latex), "Q^{-\\frac{1}{2}}\\lambda^{-1}");
        let z = &HalfLaurent::unit(4, 0) - &HalfLaurent::one();
        assert_eq!(laurent(&z, Sector::OneParam, Style::Text), "q^2 - 1");
    }
}
