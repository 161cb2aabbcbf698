//! JSON encoding of normal-form polynomials.
//!
//! A plain polynomial is an array of `{"dpow", "word", "coeff"}` where `dpow`
//! is the exponent of the scaling generator as a reduced rational string and
//! `word` lists the other runs as `[name, exponent]`. Elements of a tensor
//! power use `{"legs": [{"dpow", "word"}, ...], "coeff"}`.

use num_rational::Ratio;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::poly::NCPoly;
use super::presentation::{GenKind, Presentation};
use super::tensor::split_word;
use super::word::Word;
use crate::error::{Error, Result};
use crate::qscalar::Ring;

#[derive(Serialize, Deserialize)]
struct LegJson {
    dpow: String,
    word: Vec<(String, i32)>,
}

#[derive(Serialize, Deserialize)]
struct TermJson<S> {
    dpow: String,
    word: Vec<(String, i32)>,
    coeff: S,
}

#[derive(Serialize, Deserialize)]
struct TensorTermJson<S> {
    legs: Vec<LegJson>,
    coeff: S,
}

/// Formats a count of halves as a reduced rational, e.g. `-1/2`.
pub fn half_string(e: i32) -> String {
    Ratio::new(e, 2).to_string()
}

/// Parses a rational string into a count of halves.
pub fn parse_half(s: &str) -> Result<i32> {
    let r: Ratio<i32> = s.trim().parse().map_err(|_| Error::Json(format!("`{s}` is not a rational number")))?;
    let doubled = r * 2;
    if !doubled.is_integer() {
        return Err(Error::Json(format!("`{s}` is not a multiple of 1/2")));
    }
    Ok(doubled.to_integer())
}

fn leg_to_json<T: Ring>(w: &Word, pres: &Presentation<T>, offset: usize) -> LegJson {
    let mut dpow = 0;
    let mut word = Vec::new();
    for &(g, e) in w.runs() {
        let gen = &pres.generators()[g + offset];
        if gen.kind == GenKind::Scaling {
            dpow += e;
        } else {
            word.push((base_name(&gen.name, pres.legs()).to_string(), e));
        }
    }
    LegJson { dpow: half_string(dpow), word }
}

fn base_name(name: &str, legs: usize) -> &str {
    if legs > 1 {
        name.rsplit_once('_').map_or(name, |(b, _)| b)
    } else {
        name
    }
}

fn leg_from_json<T: Ring>(leg: &LegJson, pres: &Presentation<T>, offset: usize) -> Result<Vec<(usize, i32)>> {
    let size = pres.leg_size();
    let lookup = |name: &str| -> Result<usize> {
        (0..size)
            .find(|&g| base_name(&pres.generators()[g + offset].name, pres.legs()) == name)
            .ok_or_else(|| Error::Json(format!("unknown generator `{name}`")))
    };
    let mut runs = Vec::new();
    let dpow = parse_half(&leg.dpow)?;
    if dpow != 0 {
        let g = (0..size)
            .find(|&g| pres.kind(g + offset) == GenKind::Scaling)
            .ok_or_else(|| Error::Json("dpow given but the algebra has no scaling generator".into()))?;
        runs.push((g, dpow));
    }
    for (name, e) in &leg.word {
        runs.push((lookup(name)?, *e));
    }
    runs.sort_by_key(|&(g, _)| g);
    Ok(runs.into_iter().map(|(g, e)| (g + offset, e)).collect())
}

/// Encodes a normal-form polynomial.
pub fn poly_to_json<S: Ring + Serialize, T: Ring>(x: &NCPoly<S>, pres: &Presentation<T>) -> Result<Value> {
    let legs = pres.legs();
    if legs == 1 {
        let terms: Vec<TermJson<&S>> = x
            .terms()
            .map(|(w, c)| {
                let l = leg_to_json(w, pres, 0);
                TermJson { dpow: l.dpow, word: l.word, coeff: c }
            })
            .collect();
        return Ok(serde_json::to_value(terms)?);
    }
    let size = pres.leg_size();
    let mut terms = Vec::new();
    for (w, c) in x.terms() {
        let parts = split_word(w, size, legs)?;
        let legs_json = parts.iter().enumerate().map(|(l, p)| leg_to_json(p, pres, l * size));
        terms.push(TensorTermJson { legs: legs_json.collect(), coeff: c });
    }
    Ok(serde_json::to_value(terms)?)
}

/// Decodes a polynomial written by [`poly_to_json`].
pub fn poly_from_json<S: Ring + DeserializeOwned, T: Ring>(v: &Value, pres: &Presentation<T>) -> Result<NCPoly<S>> {
    let mut out = NCPoly::zero();
    if pres.legs() == 1 {
        let terms: Vec<TermJson<S>> = serde_json::from_value(v.clone())?;
        for t in terms {
            let leg = LegJson { dpow: t.dpow, word: t.word };
            out.add_term(Word::from_runs(leg_from_json(&leg, pres, 0)?), t.coeff);
        }
    } else {
        let terms: Vec<TensorTermJson<S>> = serde_json::from_value(v.clone())?;
        let size = pres.leg_size();
        for t in terms {
            if t.legs.len() != pres.legs() {
                return Err(Error::Json(format!("expected {} legs, found {}", pres.legs(), t.legs.len())));
            }
            let mut runs = Vec::new();
            for (l, leg) in t.legs.iter().enumerate() {
                runs.extend(leg_from_json(leg, pres, l * size)?);
            }
            out.add_term(Word::from_runs(runs), t.coeff);
        }
    }
    Ok(out)
}
