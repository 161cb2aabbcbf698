//! Exhaustive local-confluence check on letter words.
//!
//! Every word up to a given length is reduced along every available redex; all
//! one-step reducts must reach the same normal form. Normal forms are memoized,
//! so each reachable word is checked once, including the longer words produced
//! by correction terms.

use std::collections::HashMap;

use serde::Serialize;

use super::poly::NCPoly;
use super::presentation::{GenKind, Presentation};
use super::word::{Letter, Word};
use crate::error::Result;
use crate::qscalar::Ring;

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub presentation: String,
    pub max_len: usize,
    pub words_checked: usize,
    pub reachable_words: usize,
    /// Words whose reducts disagree, rendered as letter sequences.
    pub counterexamples: Vec<String>,
}

impl ConfluenceReport {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// The alphabet: one letter per ordinary generator, two per invertible or scaling one.
pub fn alphabet<S: Ring>(pres: &Presentation<S>) -> Vec<Letter> {
    let mut out = Vec::new();
    for (g, gen) in pres.generators().iter().enumerate() {
        out.push((g, 1));
        if gen.kind != GenKind::Ordinary {
            out.push((g, -1));
        }
    }
    out
}

struct Checker<'a, S> {
    pres: &'a Presentation<S>,
    memo: HashMap<Vec<Letter>, NCPoly<S>>,
    bad: Vec<Vec<Letter>>,
}

impl<S: Ring> Checker<'_, S> {
    fn nf(&mut self, w: &[Letter]) -> Result<NCPoly<S>> {
        if let Some(x) = self.memo.get(w) {
            return Ok(x.clone());
        }
        let reducts = self.pres.letter_reducts(w)?;
        let result = if reducts.is_empty() {
            NCPoly::word(Word::from_letters(w))
        } else {
            let mut results = Vec::with_capacity(reducts.len());
            for r in &reducts {
                let mut acc = NCPoly::zero();
                for (nw, c) in r {
                    acc = &acc + &self.nf(nw)?.scale(c);
                }
                results.push(acc);
            }
            let scale = results.iter().map(NCPoly::magnitude).fold(1.0, f64::max);
            if results[1..].iter().any(|x| !(x - &results[0]).negligible(scale)) {
                self.bad.push(w.to_vec());
            }
            results.swap_remove(0)
        };
        self.memo.insert(w.to_vec(), result.clone());
        Ok(result)
    }
}

pub fn confluence_check<S: Ring>(pres: &Presentation<S>, max_len: usize) -> Result<ConfluenceReport> {
    let letters = alphabet(pres);
    let mut checker = Checker { pres, memo: HashMap::new(), bad: Vec::new() };
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut checked = 0;
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(words.len() * letters.len());
        for w in &words {
            for &l in &letters {
                let mut v = w.clone();
                v.push(l);
                checker.nf(&v)?;
                checked += 1;
                next.push(v);
            }
        }
        words = next;
    }
    let render = |w: &Vec<Letter>| -> String {
        w.iter()
            .map(|&(g, s)| {
                let name = &pres.generators()[g].name;
                match (pres.kind(g), s) {
                    (GenKind::Scaling, 1) => format!("{name}^1/2"),
                    (GenKind::Scaling, _) => format!("{name}^-1/2"),
                    (_, 1) => name.clone(),
                    _ => format!("{name}^-1"),
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    };
    let mut bad = checker.bad.clone();
    bad.sort();
    bad.dedup();
    Ok(ConfluenceReport {
        presentation: pres.name().to_string(),
        max_len,
        words_checked: checked,
        reachable_words: checker.memo.len(),
        counterexamples: bad.iter().map(render).collect(),
    })
}
