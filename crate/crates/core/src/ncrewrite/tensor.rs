//! Tensor powers of a presentation.
//!
//! Leg `l` (0-based) of the `n`-fold power holds a copy of every generator at
//! index `l·G + g`, named `g_{l+1}`. Rules apply leg-wise and generators of
//! different legs commute, so a normal-form word splits into one normal word
//! per leg.

use super::poly::NCPoly;
use super::presentation::{ExplicitRule, Generator, PairRule, Presentation};
use super::word::Word;
use crate::error::{Error, Result};
use crate::qscalar::Ring;

pub fn tensor_power<S: Ring>(pres: &Presentation<S>, n: usize) -> Presentation<S> {
    assert!(n >= 1, "tensor power needs at least one leg");
    let g = pres.generators().len();
    let total = g * n;
    let mut gens = Vec::with_capacity(total);
    for leg in 0..n {
        for gen in pres.generators() {
            gens.push(Generator { name: format!("{}_{}", gen.name, leg + 1), kind: gen.kind });
        }
    }
    let (base_rules, guard) = pres.raw_parts();
    let mut rules: Vec<Option<PairRule<S>>> = vec![None; total * total];
    for y in 0..total {
        for x in 0..y {
            let (ly, gy) = (y / g, y % g);
            let (lx, gx) = (x / g, x % g);
            let rule = if ly != lx {
                PairRule::Scalar(S::one(), S::one())
            } else {
                match base_rules[gy * g + gx].clone().expect("complete base presentation") {
                    PairRule::Scalar(k, ki) => PairRule::Scalar(k, ki),
                    PairRule::Explicit(list) => PairRule::Explicit(
                        list.into_iter()
                            .map(|r| ExplicitRule {
                                signs: r.signs,
                                kappa: r.kappa,
                                correction: embed(&r.correction, g, ly),
                            })
                            .collect(),
                    ),
                }
            };
            rules[y * total + x] = Some(rule);
        }
    }
    let name = if n == 2 { format!("{}⊗{}", pres.name(), pres.name()) } else { format!("{}^⊗{n}", pres.name()) };
    Presentation::from_parts(name, gens, pres.sector(), rules, n * pres.legs(), guard)
}

pub fn tensor_square<S: Ring>(pres: &Presentation<S>) -> Presentation<S> {
    tensor_power(pres, 2)
}

/// Moves a polynomial of the base presentation (with `g` generators) into leg `leg`.
pub fn embed<S: Ring>(x: &NCPoly<S>, g: usize, leg: usize) -> NCPoly<S> {
    x.map_words(|w| embed_word(w, g, leg))
}

pub fn embed_word(w: &Word, g: usize, leg: usize) -> Word {
    Word::from_runs(w.runs().iter().map(|&(h, e)| (h + leg * g, e)))
}

/// `x_1 ⊗ x_2 ⊗ …` as a (normal, if the factors are) word of the tensor power.
pub fn tensor_word(legs: &[Word], g: usize) -> Word {
    let mut runs = Vec::new();
    for (l, w) in legs.iter().enumerate() {
        runs.extend(w.runs().iter().map(|&(h, e)| (h + l * g, e)));
    }
    Word::from_runs(runs)
}

/// `x_1 ⊗ … ⊗ x_n` for polynomials of the base presentation.
pub fn tensor_product<S: Ring>(factors: &[&NCPoly<S>], g: usize) -> NCPoly<S> {
    let mut acc = NCPoly::one();
    for (l, f) in factors.iter().enumerate() {
        acc = acc.concat(&embed(f, g, l));
    }
    acc
}

/// Splits a normal tensor word into its legs.
pub fn split_word(w: &Word, g: usize, legs: usize) -> Result<Vec<Word>> {
    let mut parts = vec![Vec::new(); legs];
    let mut last_leg = 0;
    for &(h, e) in w.runs() {
        let l = h / g;
        if l >= legs || l < last_leg {
            return Err(Error::Internal(format!("word {w:?} is not a normal tensor word")));
        }
        last_leg = l;
        parts[l].push((h % g, e));
    }
    Ok(parts.into_iter().map(Word::from_runs).collect())
}
