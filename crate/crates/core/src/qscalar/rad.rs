//! Radical extension by square roots of products of q-integers.
//!
//! A term `(c, {n1, …, nk})` is `c · sqrt([n1]_Q ⋯ [nk]_Q)`. Radicands are kept
//! square-free as multisets: a repeated index `n, n` leaves the root as the
//! factor `[n]_Q`. Square roots of distinct square-free index sets are linearly
//! independent over the fraction field (each `[n]` carries a cyclotomic factor
//! that occurs in no `[m]` with `m < n`), so comparing terms decides equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::frac::FracScalar;
use super::laurent::qint;
use super::numeric::NumericParams;
use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq)]
pub struct RadScalar {
    /// Sorted by radicand; radicands strictly increasing with entries ≥ 2.
    terms: Vec<(FracScalar, Vec<u32>)>,
}

impl RadScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_frac(FracScalar::one())
    }

    pub fn from_frac(c: FracScalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(c, Vec::new())] }
        }
    }

    /// `c · sqrt([n1]⋯[nk])`, normalized. Indices must be nonnegative.
    pub fn new(c: FracScalar, radicand: &[i64]) -> Result<Self> {
        let mut rad = Vec::with_capacity(radicand.len());
        for &n in radicand {
            if n < 0 {
                return Err(Error::domain(format!("radicand index {n} is negative")));
            }
            if n == 0 {
                return Ok(Self::zero());
            }
            if n > 1 {
                rad.push(n as u32);
            }
        }
        let mut out = Self::zero();
        out.push_term(c, rad);
        Ok(out)
    }

    /// `sqrt([n1]⋯[nk])`.
    pub fn sqrt_qints(radicand: &[i64]) -> Result<Self> {
        Self::new(FracScalar::one(), radicand)
    }

    pub fn terms(&self) -> &[(FracScalar, Vec<u32>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value, if it contains no radical.
    pub fn as_frac(&self) -> Option<FracScalar> {
        match self.terms.as_slice() {
            [] => Some(FracScalar::zero()),
            [(c, r)] if r.is_empty() => Some(c.clone()),
            _ => None,
        }
    }

    /// Pair extraction: sorts the multiset and replaces each pair `n, n` by
    /// the coefficient factor `[n]`.
    fn extract_pairs(mut c: FracScalar, mut rad: Vec<u32>) -> (FracScalar, Vec<u32>) {
        rad.sort_unstable();
        let mut out = Vec::with_capacity(rad.len());
        let mut i = 0;
        while i < rad.len() {
            if i + 1 < rad.len() && rad[i] == rad[i + 1] {
                c = &c * &FracScalar::from_laurent(qint(rad[i] as i64));
                i += 2;
            } else {
                out.push(rad[i]);
                i += 1;
            }
        }
        (c, out)
    }

    fn push_term(&mut self, c: FracScalar, rad: Vec<u32>) {
        if c.is_zero() {
            return;
        }
        let (c, rad) = Self::extract_pairs(c, rad);
        match self.terms.binary_search_by(|(_, r)| r.cmp(&rad)) {
            Ok(i) => {
                let sum = &self.terms[i].0 + &c;
                if sum.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].0 = sum;
                }
            }
            Err(i) => self.terms.insert(i, (c, rad)),
        }
    }

    /// Re-normalizes an arbitrary term list; idempotent on normalized input.
    pub fn rad_normalize(terms: Vec<(FracScalar, Vec<u32>)>) -> Self {
        let mut out = Self::zero();
        for (c, r) in terms {
            out.push_term(c, r.into_iter().filter(|&n| n != 1).collect());
        }
        out
    }

    pub fn scale(&self, c: &FracScalar) -> Self {
        Self::rad_normalize(self.terms.iter().map(|(a, r)| (a * c, r.clone())).collect())
    }

    /// Inverse of a single-term value: `1/(c sqrt(X)) = sqrt(X) / (c X)`.
    pub fn inv(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(c, r)] => {
                let x = r.iter().fold(FracScalar::one(), |acc, &n| &acc * &FracScalar::from_laurent(qint(n as i64)));
                let denom = c * &x;
                let mut out = Self::zero();
                out.push_term(denom.inv()?, r.clone());
                Some(out)
            }
            _ => None,
        }
    }

    pub fn specialize_lambda_one(&self) -> Result<Self> {
        let mut out = Self::zero();
        for (c, r) in &self.terms {
            out.push_term(c.specialize_lambda_one()?, r.clone());
        }
        Ok(out)
    }

    pub fn eval(&self, params: &NumericParams) -> Result<f64> {
        let mut acc = 0.0;
        for (c, r) in &self.terms {
            let mut radicand = 1.0;
            for &n in r {
                radicand *= qint(n as i64).eval(params);
            }
            if radicand < 0.0 {
                return Err(Error::Eval(format!("negative radicand {radicand}")));
            }
            acc += c.eval(params)? * radicand.sqrt();
        }
        Ok(acc)
    }
}

impl From<FracScalar> for RadScalar {
    fn from(c: FracScalar) -> Self {
        Self::from_frac(c)
    }
}

impl fmt::Debug for RadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, r)| if r.is_empty() { format!("{c:?}") } else { format!("{c:?}*sqrt{r:?}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &RadScalar {
    type Output = RadScalar;
    fn add(self, rhs: &RadScalar) -> RadScalar {
        let mut out = self.clone();
        for (c, r) in &rhs.terms {
            out.push_term(c.clone(), r.clone());
        }
        out
    }
}

impl Neg for &RadScalar {
    type Output = RadScalar;
    fn neg(self) -> RadScalar {
        RadScalar { terms: self.terms.iter().map(|(c, r)| (-c, r.clone())).collect() }
    }
}

impl Neg for RadScalar {
    type Output = RadScalar;
    fn neg(self) -> RadScalar {
        -&self
    }
}

impl Sub for &RadScalar {
    type Output = RadScalar;
    fn sub(self, rhs: &RadScalar) -> RadScalar {
        self + &(-rhs)
    }
}

impl Mul for &RadScalar {
    type Output = RadScalar;
    fn mul(self, rhs: &RadScalar) -> RadScalar {
        let mut out = RadScalar::zero();
        for (c1, r1) in &self.terms {
            for (c2, r2) in &rhs.terms {
                let mut r = r1.clone();
                r.extend_from_slice(r2);
                out.push_term(c1 * c2, r);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RadScalar {
            type Output = RadScalar;
            fn $m(self, rhs: RadScalar) -> RadScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[derive(Serialize, Deserialize)]
struct RadTermJson {
    coeff: FracScalar,
    rad: Vec<u32>,
}

impl Serialize for RadScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw: Vec<RadTermJson> =
            self.terms.iter().map(|(c, r)| RadTermJson { coeff: c.clone(), rad: r.clone() }).collect();
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RadScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<RadTermJson>::deserialize(d)?;
        Ok(Self::rad_normalize(raw.into_iter().map(|t| (t.coeff, t.rad)).collect()))
    }
}
