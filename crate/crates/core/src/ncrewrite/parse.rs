//! Expression parser.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor (('*'|'/') factor)*
//! factor   := atom ('^' rational)?
//! atom     := identifier | integer | '(' expr ')'
//! rational := ['-'] integer ['/' integer]
//! ```
//!
//! Identifiers are generator names or the parameters `Q`, `lambda`, `p`, `q`.
//! Division is by scalars only. Error offsets are 1-based character positions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::NCPoly;
use super::presentation::{GenKind, Presentation, Sector};
use crate::error::{Error, Result};
use crate::qscalar::{FracScalar, HalfLaurent, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(text: &str) -> Result<Lexer> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(s.parse().expect("digits")), pos));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Sym(c), pos));
            i += 1;
        } else {
            return Err(parse_err(pos, format!("unexpected character `{c}`")));
        }
    }
    toks.push((Tok::End, chars.len() + 1));
    Ok(Lexer { toks })
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

struct Parser<'a, S> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    pres: &'a Presentation<S>,
}

/// Parses `text` into an unnormalized polynomial over the generators of `pres`.
pub fn parse<S: Ring>(text: &str, pres: &Presentation<S>) -> Result<NCPoly<FracScalar>> {
    let lexer = lex(text)?;
    let mut p = Parser { toks: lexer.toks, pos: 0, pres };
    let out = p.expr()?;
    match p.peek() {
        (Tok::End, _) => Ok(out),
        (t, off) => Err(parse_err(*off, format!("unexpected {}", describe(t)))),
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Int(n) => format!("number `{n}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

impl<S: Ring> Parser<'_, S> {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().0 == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<NCPoly<FracScalar>> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly<FracScalar>> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.concat(&self.factor()?);
            } else if self.peek().0 == Tok::Sym('/') {
                let (_, off) = self.bump();
                let rhs = self.factor()?;
                let inv = rhs
                    .as_scalar()
                    .and_then(|c| c.inv())
                    .ok_or_else(|| parse_err(off, "division is only by nonzero scalars"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<NCPoly<FracScalar>> {
        let base = self.atom()?;
        if self.peek().0 != Tok::Sym('^') {
            return Ok(base);
        }
        let (_, off) = self.bump();
        let r = self.rational()?;
        power(&base, &r, self.pres).map_err(|m| parse_err(off, m))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let neg = self.eat('-');
        let num = match self.bump() {
            (Tok::Int(n), _) => n,
            (t, off) => return Err(parse_err(off, format!("expected exponent, found {}", describe(&t)))),
        };
        let mut r = BigRational::from_integer(num);
        if self.peek().0 == Tok::Sym('/') && matches!(self.peek_at(1), Tok::Int(_)) {
            self.bump();
            let (t, off) = self.bump();
            let Tok::Int(den) = t else { unreachable!() };
            if den.is_zero() {
                return Err(parse_err(off, "zero denominator in exponent"));
            }
            r /= BigRational::from_integer(den);
        }
        Ok(if neg { -r } else { r })
    }

    fn atom(&mut self) -> Result<NCPoly<FracScalar>> {
        match self.bump() {
            (Tok::Int(n), _) => Ok(NCPoly::constant(FracScalar::rational(BigRational::from_integer(n)))),
            (Tok::Sym('('), _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::Sym(')'), _) => Ok(inner),
                    (t, off) => Err(parse_err(off, format!("expected `)`, found {}", describe(&t)))),
                }
            }
            (Tok::Ident(name), off) => {
                self.ident(&name).ok_or_else(|| parse_err(off, format!("unknown identifier `{name}`")))
            }
            (t, off) => Err(parse_err(off, format!("unexpected {}", describe(&t)))),
        }
    }

    fn ident(&self, name: &str) -> Option<NCPoly<FracScalar>> {
        if let Some(g) = self.pres.index(name) {
            let e = if self.pres.kind(g) == GenKind::Scaling { 2 } else { 1 };
            return Some(NCPoly::gen(g, e));
        }
        let one_param = self.pres.sector() == Sector::OneParam;
        let s = match name {
            "Q" => HalfLaurent::big_q(),
            "lambda" if one_param => HalfLaurent::one(),
            "lambda" => HalfLaurent::lambda(),
            "p" | "q" if one_param => HalfLaurent::big_q(),
            "p" => HalfLaurent::p(),
            "q" => HalfLaurent::q(),
            _ => return None,
        };
        Some(NCPoly::constant(FracScalar::from_laurent(s)))
    }
}

fn power<S: Ring>(
    base: &NCPoly<FracScalar>,
    r: &BigRational,
    pres: &Presentation<S>,
) -> Result<NCPoly<FracScalar>, String> {
    let integral = r.is_integer();
    if integral && !r.is_negative() {
        let n = r.to_integer().to_u32().ok_or("exponent too large")?;
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = acc.concat(base);
        }
        return Ok(acc);
    }
    if let Some(c) = base.as_scalar() {
        if integral {
            let n = r.to_integer().to_i64().ok_or("exponent too large")?;
            return c.pow(n).map(NCPoly::constant).ok_or_else(|| "negative power of zero".to_string());
        }
        let mono = c.as_laurent().and_then(|l| l.as_monomial().map(|(e, k)| (e, k.clone())));
        if let Some(((u, v), k)) = mono {
            if k.is_one() {
                let scale = |x: i32| -> Option<i32> {
                    let y = r * BigRational::from_integer(x.into());
                    if y.is_integer() {
                        y.to_integer().to_i32()
                    } else {
                        None
                    }
                };
                if let (Some(u), Some(v)) = (scale(u), scale(v)) {
                    return Ok(NCPoly::constant(FracScalar::unit(u, v)));
                }
            }
        }
        return Err("fractional power of a scalar must give half-integer powers of Q and lambda".into());
    }
    let mut terms = base.terms();
    if let (Some((w, c)), None) = (terms.next(), terms.next()) {
        if let ([(g, e)], true) = (w.runs(), c.is_one()) {
            let (g, e) = (*g, *e);
            let name = &pres.generators()[g].name;
            let scaled = r * BigRational::from_integer(e.into());
            return match pres.kind(g) {
                GenKind::Scaling if scaled.is_integer() => {
                    let e = scaled.to_integer().to_i32().ok_or("exponent too large")?;
                    Ok(NCPoly::gen(g, e))
                }
                GenKind::Scaling => Err(format!("power of `{name}` must be a multiple of 1/2")),
                GenKind::Invertible if integral => {
                    let e = scaled.to_integer().to_i32().ok_or("exponent too large")?;
                    Ok(NCPoly::gen(g, e))
                }
                GenKind::Invertible | GenKind::Ordinary if !integral => {
                    Err(format!("fractional power on non-scaling generator `{name}`"))
                }
                _ => Err(format!("negative power of non-invertible generator `{name}`")),
            };
        }
    }
    Err("only scalars and single generators can be raised to negative or fractional powers".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncrewrite::presentation::PresentationBuilder;
    use crate::ncrewrite::word::Word;

    fn pres() -> Presentation<FracScalar> {
        let mut b = PresentationBuilder::new("test", Sector::TwoParam);
        let d = b.generator("D", GenKind::Scaling);
        let a = b.generator("a", GenKind::Invertible);
        let x = b.generator("x", GenKind::Ordinary);
        b.scaling(d, a, FracScalar::one()).unwrap();
        b.scaling(d, x, FracScalar::unit(0, -1)).unwrap();
        b.commute(x, a, FracScalar::from_laurent(HalfLaurent::q())).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn words_and_powers() {
        let p = pres();
        let e = parse("a^-2*x*D^1/2", &p).unwrap();
        assert_eq!(e, NCPoly::word(Word::from_runs([(1, -2), (2, 1), (0, 1)])));
        let s = parse("q^1/2", &p).unwrap();
        assert_eq!(s, NCPoly::constant(FracScalar::unit(1, -1)));
        let m = parse("-x + 2*x/4", &p).unwrap();
        assert_eq!(m, NCPoly::monomial(Word::gen(2, 1), FracScalar::rational(BigRational::new((-1).into(), 2.into()))));
    }

    #[test]
    fn errors_carry_offsets() {
        let p = pres();
        let offset = |s: &str| match parse(s, &p) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(offset("a^^2"), 3);
        assert_eq!(offset("a*y"), 3);
        assert_eq!(offset("x^1/2"), 2);
        assert_eq!(offset("x^-1"), 2);
        assert_eq!(offset("(a"), 3);
        assert_eq!(offset("a/x"), 2);
    }
}
