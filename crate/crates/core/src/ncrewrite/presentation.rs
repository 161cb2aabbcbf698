use std::collections::HashMap;

use super::poly::NCPoly;
use super::word::{push_run, Letter, Run, Word};
use crate::error::{Error, Result};
use crate::qscalar::Ring;

/// A polynomial over raw letter sequences, before any word normalization.
pub(crate) type LetterPoly<S> = Vec<(Vec<Letter>, S)>;

/// Default bound on the number of intermediate terms in one normal ordering.
pub const DEFAULT_GUARD: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Ordinary,
    /// An ordinary generator that also has an inverse; runs may have negative exponents.
    Invertible,
    /// A generator with exponents in `½ℤ` that commutes with every other
    /// generator up to a scalar.
    Scaling,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub kind: GenKind,
}

/// Which parameters the coefficients may involve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sector {
    /// Independent `p, q` (equivalently `Q, λ`).
    TwoParam,
    /// `p = q`, so `λ = 1` and `Q = q`.
    OneParam,
}

#[derive(Clone, Debug)]
pub(crate) enum PairRule<S> {
    /// `y^m x^n = κ^{mn} x^n y^m`; stores `κ` and `κ^{-1}`.
    Scalar(S, S),
    /// Letter rules `y^{sy} x^{sx} → κ x^{sx} y^{sy} + C`, keyed by the signs.
    Explicit(Vec<ExplicitRule<S>>),
}

#[derive(Clone, Debug)]
pub(crate) struct ExplicitRule<S> {
    pub signs: (i8, i8),
    pub kappa: S,
    pub correction: NCPoly<S>,
}

/// An algebra given by ordered generators and a rewrite rule for every
/// out-of-order adjacent pair.
#[derive(Clone, Debug)]
pub struct Presentation<S> {
    name: String,
    gens: Vec<Generator>,
    sector: Sector,
    rules: Vec<Option<PairRule<S>>>,
    legs: usize,
    guard: usize,
}

impl<S: Ring> Presentation<S> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    pub fn with_guard(mut self, guard: usize) -> Self {
        self.guard = guard;
        self
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// Index of a generator known to exist.
    pub fn idx(&self, name: &str) -> usize {
        self.index(name).unwrap_or_else(|| panic!("presentation `{}` has no generator `{name}`", self.name))
    }

    pub fn kind(&self, g: usize) -> GenKind {
        self.gens[g].kind
    }

    /// Number of tensor legs (1 for a plain presentation).
    pub fn legs(&self) -> usize {
        self.legs
    }

    /// Number of generators per leg.
    pub fn leg_size(&self) -> usize {
        self.gens.len() / self.legs
    }

    pub(crate) fn rule(&self, y: usize, x: usize) -> Option<&PairRule<S>> {
        self.rules[y * self.gens.len() + x].as_ref()
    }

    pub(crate) fn raw_parts(&self) -> (&[Option<PairRule<S>>], usize) {
        (&self.rules, self.guard)
    }

    pub(crate) fn from_parts(
        name: String,
        gens: Vec<Generator>,
        sector: Sector,
        rules: Vec<Option<PairRule<S>>>,
        legs: usize,
        guard: usize,
    ) -> Self {
        Self { name, gens, sector, rules, legs, guard }
    }

    fn missing(&self, y: usize, x: usize) -> Error {
        Error::MissingRule {
            presentation: self.name.clone(),
            left: self.gens[y].name.clone(),
            right: self.gens[x].name.clone(),
        }
    }

    /// Maps every coefficient into another ring.
    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Presentation<T>> {
        let mut rules = Vec::with_capacity(self.rules.len());
        for r in &self.rules {
            rules.push(match r {
                None => None,
                Some(PairRule::Scalar(k, ki)) => Some(PairRule::Scalar(f(k)?, f(ki)?)),
                Some(PairRule::Explicit(list)) => {
                    let mut out = Vec::with_capacity(list.len());
                    for e in list {
                        out.push(ExplicitRule {
                            signs: e.signs,
                            kappa: f(&e.kappa)?,
                            correction: e.correction.map(&f)?,
                        });
                    }
                    Some(PairRule::Explicit(out))
                }
            });
        }
        Ok(Presentation {
            name: self.name.clone(),
            gens: self.gens.clone(),
            sector: self.sector,
            rules,
            legs: self.legs,
            guard: self.guard,
        })
    }

    /// Rewrites `x` to normal form (runs in generator order), collecting like terms.
    pub fn normal_order(&self, x: &NCPoly<S>) -> Result<NCPoly<S>> {
        let mut out = NCPoly::zero();
        let mut pending = NCPoly::zero();
        for (w, c) in x.terms() {
            if w.is_ordered() {
                out.add_term(w.clone(), c.clone());
            } else {
                pending.add_term(w.clone(), c.clone());
            }
        }
        let mut generated = 0usize;
        while let Some((w, c)) = pending.pop_first() {
            let i = w.first_disorder().expect("pending words are out of order");
            for (nw, nc) in self.rewrite_at(&w, i, &c)? {
                generated += 1;
                if generated > self.guard {
                    return Err(Error::GuardExceeded { bound: self.guard });
                }
                if nw.is_ordered() {
                    out.add_term(nw, nc);
                } else {
                    pending.add_term(nw, nc);
                }
            }
        }
        Ok(out)
    }

    /// One rewrite of the run boundary `i`, `i + 1` of `w`.
    fn rewrite_at(&self, w: &Word, i: usize, c: &S) -> Result<Vec<(Word, S)>> {
        let runs = w.runs();
        let (y, m) = runs[i];
        let (x, n) = runs[i + 1];
        let build = |middle: &[Run]| -> Word {
            let mut out: Vec<Run> = runs[..i].to_vec();
            for &(g, e) in middle.iter().chain(&runs[i + 2..]) {
                push_run(&mut out, g, e);
            }
            Word::from_runs(out)
        };
        match self.rule(y, x).ok_or_else(|| self.missing(y, x))? {
            PairRule::Scalar(k, ki) => {
                let factor = signed_pow(k, ki, m as i64 * n as i64);
                Ok(vec![(build(&[(x, n), (y, m)]), c.mul(&factor))])
            }
            PairRule::Explicit(list) => {
                let sy = m.signum() as i8;
                let sx = n.signum() as i8;
                let rule = list.iter().find(|r| r.signs == (sy, sx)).ok_or_else(|| self.missing(y, x))?;
                let (sy, sx) = (sy as i32, sx as i32);
                let mut out = Vec::with_capacity(1 + rule.correction.len());
                out.push((build(&[(y, m - sy), (x, sx), (y, sy), (x, n - sx)]), c.mul(&rule.kappa)));
                for (cw, cc) in rule.correction.terms() {
                    let mut middle = vec![(y, m - sy)];
                    middle.extend_from_slice(cw.runs());
                    middle.push((x, n - sx));
                    out.push((build(&middle), c.mul(cc)));
                }
                Ok(out)
            }
        }
    }

    pub fn mul(&self, x: &NCPoly<S>, y: &NCPoly<S>) -> Result<NCPoly<S>> {
        self.normal_order(&x.concat(y))
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a NCPoly<S>>) -> Result<NCPoly<S>> {
        let mut acc = NCPoly::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, x: &NCPoly<S>, n: u32) -> Result<NCPoly<S>> {
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `x y - y x` in normal form.
    pub fn commutator(&self, x: &NCPoly<S>, y: &NCPoly<S>) -> Result<NCPoly<S>> {
        Ok(&self.mul(x, y)? - &self.mul(y, x)?)
    }

    /// All single-letter rewrites of a letter word, grouped by redex position.
    /// A redex is an adjacent out-of-order pair or a letter next to its inverse.
    pub(crate) fn letter_reducts(&self, w: &[Letter]) -> Result<Vec<LetterPoly<S>>> {
        let mut out = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            if let Some(r) = self.letter_rewrite(w, i)? {
                out.push(r);
            }
        }
        Ok(out)
    }

    pub(crate) fn letter_rewrite(&self, w: &[Letter], i: usize) -> Result<Option<LetterPoly<S>>> {
        let (y, sy) = w[i];
        let (x, sx) = w[i + 1];
        let splice = |middle: &[Letter]| -> Vec<Letter> {
            let mut v = w[..i].to_vec();
            v.extend_from_slice(middle);
            v.extend_from_slice(&w[i + 2..]);
            v
        };
        if y == x {
            if sy == -sx {
                return Ok(Some(vec![(splice(&[]), S::one())]));
            }
            return Ok(None);
        }
        if y < x {
            return Ok(None);
        }
        match self.rule(y, x).ok_or_else(|| self.missing(y, x))? {
            PairRule::Scalar(k, ki) => {
                let f = if sy * sx > 0 { k.clone() } else { ki.clone() };
                Ok(Some(vec![(splice(&[(x, sx), (y, sy)]), f)]))
            }
            PairRule::Explicit(list) => {
                let rule = list.iter().find(|r| r.signs == (sy, sx)).ok_or_else(|| self.missing(y, x))?;
                let mut out = vec![(splice(&[(x, sx), (y, sy)]), rule.kappa.clone())];
                for (cw, cc) in rule.correction.terms() {
                    out.push((splice(&cw.letters()), cc.clone()));
                }
                Ok(Some(out))
            }
        }
    }

    /// Normal form computed letter by letter, always rewriting the leftmost
    /// redex. Independent of [`Presentation::normal_order`]; used as an oracle.
    pub fn letter_normal_form(&self, x: &NCPoly<S>) -> Result<NCPoly<S>> {
        let mut out = NCPoly::zero();
        let mut stack: Vec<(Vec<Letter>, S)> = x.terms().map(|(w, c)| (w.letters(), c.clone())).collect();
        let mut generated = 0usize;
        while let Some((w, c)) = stack.pop() {
            let mut done = true;
            for i in 0..w.len().saturating_sub(1) {
                if let Some(r) = self.letter_rewrite(&w, i)? {
                    generated += r.len();
                    if generated > self.guard {
                        return Err(Error::GuardExceeded { bound: self.guard });
                    }
                    stack.extend(r.into_iter().map(|(nw, f)| (nw, c.mul(&f))));
                    done = false;
                    break;
                }
            }
            if done {
                out.add_term(Word::from_letters(&w), c);
            }
        }
        Ok(out)
    }
}

fn signed_pow<S: Ring>(k: &S, ki: &S, e: i64) -> S {
    let base = if e >= 0 { k } else { ki };
    base.pow(e.abs()).expect("nonnegative power")
}

/// Assembles a [`Presentation`] and checks that every pair of generators has a rule.
pub struct PresentationBuilder<S> {
    name: String,
    sector: Sector,
    gens: Vec<Generator>,
    scalar: HashMap<(usize, usize), S>,
    explicit: HashMap<(usize, usize), Vec<ExplicitRule<S>>>,
    scaling: HashMap<(usize, usize), S>,
}

impl<S: Ring> PresentationBuilder<S> {
    pub fn new(name: impl Into<String>, sector: Sector) -> Self {
        Self {
            name: name.into(),
            sector,
            gens: Vec::new(),
            scalar: HashMap::new(),
            explicit: HashMap::new(),
            scaling: HashMap::new(),
        }
    }

    /// Appends a generator; the order of calls is the normal-form order.
    pub fn generator(&mut self, name: impl Into<String>, kind: GenKind) -> usize {
        self.gens.push(Generator { name: name.into(), kind });
        self.gens.len() - 1
    }

    /// `y x = κ x y`.
    pub fn commute(&mut self, y: usize, x: usize, kappa: S) -> Result<&mut Self> {
        if y == x {
            return Err(Error::domain("commutation rule needs two distinct generators"));
        }
        if y > x {
            self.scalar.insert((y, x), kappa);
        } else {
            let inv = kappa.inv().ok_or_else(|| Error::domain("commutation factor must be invertible"))?;
            self.scalar.insert((x, y), inv);
        }
        Ok(self)
    }

    /// `y^{sy} x^{sx} → κ x^{sx} y^{sy} + correction`, for `y` after `x` in the order.
    pub fn rule(&mut self, y: usize, sy: i8, x: usize, sx: i8, kappa: S, correction: NCPoly<S>) -> Result<&mut Self> {
        if y <= x {
            return Err(Error::domain("explicit rules rewrite an out-of-order pair"));
        }
        for (g, s) in [(y, sy), (x, sx)] {
            let ok = match self.gens[g].kind {
                GenKind::Ordinary => s == 1,
                GenKind::Invertible => s == 1 || s == -1,
                GenKind::Scaling => false,
            };
            if !ok {
                return Err(Error::domain(format!("explicit rule letter {}^{s} is not allowed", self.gens[g].name)));
            }
        }
        self.explicit.entry((y, x)).or_default().push(ExplicitRule { signs: (sy, sx), kappa, correction });
        Ok(self)
    }

    /// `G^{1/2} x = ν x G^{1/2}` for a scaling generator `G`.
    pub fn scaling(&mut self, g: usize, x: usize, nu: S) -> Result<&mut Self> {
        if self.gens[g].kind != GenKind::Scaling || self.gens[x].kind == GenKind::Scaling {
            return Err(Error::domain("scaling factor needs a scaling and a non-scaling generator"));
        }
        self.scaling.insert((g, x), nu);
        Ok(self)
    }

    pub fn build(self) -> Result<Presentation<S>> {
        let n = self.gens.len();
        let mut rules: Vec<Option<PairRule<S>>> = vec![None; n * n];
        let missing = |y: usize, x: usize| Error::MissingRule {
            presentation: self.name.clone(),
            left: self.gens[y].name.clone(),
            right: self.gens[x].name.clone(),
        };
        let inv = |k: &S| k.inv().ok_or_else(|| Error::domain("rule factor must be invertible"));
        for y in 0..n {
            for x in 0..y {
                let ky = self.gens[y].kind;
                let kx = self.gens[x].kind;
                let rule = match (ky, kx) {
                    (GenKind::Scaling, GenKind::Scaling) => PairRule::Scalar(S::one(), S::one()),
                    (GenKind::Scaling, _) => {
                        let nu = self.scaling.get(&(y, x)).ok_or_else(|| missing(y, x))?;
                        PairRule::Scalar(nu.clone(), inv(nu)?)
                    }
                    (_, GenKind::Scaling) => {
                        let nu = self.scaling.get(&(x, y)).ok_or_else(|| missing(y, x))?;
                        PairRule::Scalar(inv(nu)?, nu.clone())
                    }
                    _ => {
                        if let Some(k) = self.scalar.get(&(y, x)) {
                            PairRule::Scalar(k.clone(), inv(k)?)
                        } else if let Some(list) = self.explicit.get(&(y, x)) {
                            let sy: &[i8] = if ky == GenKind::Invertible { &[1, -1] } else { &[1] };
                            let sx: &[i8] = if kx == GenKind::Invertible { &[1, -1] } else { &[1] };
                            for &a in sy {
                                for &b in sx {
                                    if !list.iter().any(|r| r.signs == (a, b)) {
                                        return Err(missing(y, x));
                                    }
                                }
                            }
                            PairRule::Explicit(list.clone())
                        } else {
                            return Err(missing(y, x));
                        }
                    }
                };
                rules[y * n + x] = Some(rule);
            }
        }
        Ok(Presentation { name: self.name, gens: self.gens, sector: self.sector, rules, legs: 1, guard: DEFAULT_GUARD })
    }
}
