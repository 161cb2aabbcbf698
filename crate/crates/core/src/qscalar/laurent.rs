//! Laurent polynomials in `Q^{1/2}` and `λ^{1/2}` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::numeric::NumericParams;
use crate::error::{Error, Result};

/// Exponent pair `(u, v)` standing for `Q^{u/2} λ^{v/2}`.
pub type HalfExp = (i32, i32);

/// Which variable a q-integer is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QVar {
    /// `Q = sqrt(pq)`.
    Q,
    /// `q = Q λ^{-1}`.
    SmallQ,
    /// An arbitrary monomial `t = Q^{u/2} λ^{v/2}`.
    Monomial(HalfExp),
}

impl QVar {
    fn base(self) -> HalfExp {
        match self {
            QVar::Q => (2, 0),
            QVar::SmallQ => (2, -2),
            QVar::Monomial(e) => e,
        }
    }
}

/// A finite sum of terms `c · Q^{u/2} λ^{v/2}`; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    terms: BTreeMap<HalfExp, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(c: BigRational, e: HalfExp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `Q^{u/2} λ^{v/2}` with coefficient one.
    pub fn unit(u: i32, v: i32) -> Self {
        Self::monomial(BigRational::one(), (u, v))
    }

    /// `Q`.
    pub fn big_q() -> Self {
        Self::unit(2, 0)
    }

    /// `λ`.
    pub fn lambda() -> Self {
        Self::unit(0, 2)
    }

    /// `p = Q λ`.
    pub fn p() -> Self {
        Self::unit(2, 2)
    }

    /// `q = Q λ^{-1}`.
    pub fn q() -> Self {
        Self::unit(2, -2)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (HalfExp, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, e: HalfExp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&HalfExp, &BigRational)> {
        self.terms.iter()
    }

    /// The single term, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(HalfExp, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// The constant value, if no term carries a `Q` or `λ` power.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Leading term in the lexicographic order (`Q`-exponent first).
    pub fn leading(&self) -> Option<(HalfExp, &BigRational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Multiplication by the unit `Q^{du/2} λ^{dv/2}`.
    pub fn shift(&self, du: i32, dv: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&(u, v), c)| ((u + du, v + dv), c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse, defined only for monomials (the units of the ring).
    pub fn inv_monomial(&self) -> Option<Self> {
        let ((u, v), c) = self.as_monomial()?;
        Some(Self::monomial(c.recip(), (-u, -v)))
    }

    /// Substitutes `λ = 1`.
    pub fn specialize_lambda_one(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(u, _), c)| ((u, 0), c.clone())))
    }

    pub fn has_lambda(&self) -> bool {
        self.terms.keys().any(|&(_, v)| v != 0)
    }

    /// Exponent bounds `(umin, umax, vmin, vmax)`; `None` for zero.
    pub fn exponent_bounds(&self) -> Option<(i32, i32, i32, i32)> {
        let mut it = self.terms.keys();
        let &(u0, v0) = it.next()?;
        let mut b = (u0, u0, v0, v0);
        for &(u, v) in it {
            b.0 = b.0.min(u);
            b.1 = b.1.max(u);
            b.2 = b.2.min(v);
            b.3 = b.3.max(v);
        }
        Some(b)
    }

    /// Returns `(p, (du, dv))` with `self = p · Q^{du/2} λ^{dv/2}` and `p` a
    /// polynomial whose minimum exponent in each variable is zero.
    fn to_polynomial(&self) -> (Self, HalfExp) {
        match self.exponent_bounds() {
            None => (Self::zero(), (0, 0)),
            Some((umin, _, vmin, _)) => (self.shift(-umin, -vmin), (umin, vmin)),
        }
    }

    /// Exact quotient `self / d` in the Laurent ring, if it exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = d.inv_monomial() {
            return Some(self * &inv);
        }
        let (mut rem, rs) = self.to_polynomial();
        let (dp, ds) = d.to_polynomial();
        let ((dlu, dlv), dlc) = dp.leading().map(|(e, c)| (e, c.clone()))?;
        let mut quot = Self::zero();
        while let Some(((ru, rv), rc)) = rem.leading().map(|(e, c)| (e, c.clone())) {
            if ru < dlu || rv < dlv {
                return None;
            }
            let t = Self::monomial(rc / &dlc, (ru - dlu, rv - dlv));
            rem = &rem - &(&t * &dp);
            quot = &quot + &t;
        }
        Some(quot.shift(rs.0 - ds.0, rs.1 - ds.1))
    }

    /// Numeric value at the given parameters.
    pub fn eval(&self, params: &NumericParams) -> f64 {
        self.terms
            .iter()
            .map(|(&(u, v), c)| {
                let cf = c.to_f64().unwrap_or(f64::NAN);
                cf * params.half_power(u, v)
            })
            .sum()
    }
}

/// Univariate GCD over the rationals for two polynomials free of `λ`, both
/// given with nonnegative `Q`-exponents. Returns a monic gcd.
pub(crate) fn univariate_gcd(a: &HalfLaurent, b: &HalfLaurent) -> Option<HalfLaurent> {
    if a.has_lambda() || b.has_lambda() {
        return None;
    }
    let to_vec = |p: &HalfLaurent| -> Vec<BigRational> {
        let deg = p.terms.keys().map(|&(u, _)| u).max().unwrap_or(0);
        let mut v = vec![BigRational::zero(); deg as usize + 1];
        for (&(u, _), c) in &p.terms {
            v[u as usize] = c.clone();
        }
        v
    };
    let (pa, _) = a.to_polynomial();
    let (pb, _) = b.to_polynomial();
    let mut x = to_vec(&pa);
    let mut y = to_vec(&pb);
    let trim = |v: &mut Vec<BigRational>| {
        while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
    };
    trim(&mut x);
    trim(&mut y);
    let is_zero = |v: &Vec<BigRational>| v.iter().all(|c| c.is_zero());
    while !is_zero(&y) {
        // x mod y
        let mut r = x.clone();
        let dy = y.len() - 1;
        let lc = y[dy].clone();
        while r.len() > dy && !is_zero(&r) {
            let dr = r.len() - 1;
            let f = &r[dr] / &lc;
            for i in 0..=dy {
                let t = &f * &y[i];
                r[dr - dy + i] -= t;
            }
            r.pop();
            trim(&mut r);
        }
        trim(&mut r);
        x = y;
        y = r;
    }
    let lc = x.last()?.clone();
    if lc.is_zero() {
        return None;
    }
    Some(HalfLaurent::from_terms(x.into_iter().enumerate().map(|(i, c)| ((i as i32, 0), c / &lc))))
}

/// `[n]_t = (t^n − t^{-n}) / (t − t^{-1})` as a Laurent polynomial.
pub fn qint_in(n: i64, var: QVar) -> HalfLaurent {
    let (bu, bv) = var.base();
    let m = n.unsigned_abs() as i64;
    let mut out = HalfLaurent::zero();
    for i in 0..m {
        let k = (m - 1 - 2 * i) as i32;
        out.add_term((k * bu, k * bv), BigRational::one());
    }
    if n < 0 {
        -out
    } else {
        out
    }
}

/// `[n]_Q`.
pub fn qint(n: i64) -> HalfLaurent {
    qint_in(n, QVar::Q)
}

/// `[n]_Q! = [n][n−1]…[1]`, with `[0]! = 1`.
pub fn qfact(n: i64) -> Result<HalfLaurent> {
    if n < 0 {
        return Err(Error::domain(format!("q-factorial of negative integer {n}")));
    }
    Ok((1..=n).fold(HalfLaurent::one(), |acc, k| &acc * &qint(k)))
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(mut self) -> HalfLaurent {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -self.clone()
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (&(u1, v1), c1) in &self.terms {
            for (&(u2, v2), c2) in &rhs.terms {
                out.add_term((u1 + u2, v1 + v2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for HalfLaurent {
            type Output = HalfLaurent;
            fn $m(self, rhs: HalfLaurent) -> HalfLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().rev().map(|(&(u, v), c)| format!("({c})Q^({u}/2)L^({v}/2)")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    num: i64,
    den: i64,
    qhalf: i32,
    lhalf: i32,
}

impl Serialize for HalfLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let mut out = Vec::with_capacity(self.terms.len());
        for (&(u, v), c) in &self.terms {
            let num = c.numer().to_i64().ok_or_else(|| S::Error::custom("coefficient numerator exceeds i64"))?;
            let den = c.denom().to_i64().ok_or_else(|| S::Error::custom("coefficient denominator exceeds i64"))?;
            out.push(TermJson { num, den, qhalf: u, lhalf: v });
        }
        out.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HalfLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<TermJson>::deserialize(d)?;
        let mut out = HalfLaurent::zero();
        for t in raw {
            if t.den == 0 {
                return Err(D::Error::custom("zero denominator"));
            }
            let c = BigRational::new(BigInt::from(t.num), BigInt::from(t.den));
            out.add_term((t.qhalf, t.lhalf), c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_product(factors: &[HalfLaurent]) -> HalfLaurent {
        // Expand term by term with an explicit accumulator map.
        let mut acc: BTreeMap<HalfExp, BigRational> = BTreeMap::new();
        acc.insert((0, 0), BigRational::one());
        for f in factors {
            let mut next: BTreeMap<HalfExp, BigRational> = BTreeMap::new();
            for (&(u1, v1), c1) in &acc {
                for (&(u2, v2), c2) in f.terms() {
                    *next.entry((u1 + u2, v1 + v2)).or_insert_with(BigRational::zero) += c1 * c2;
                }
            }
            acc = next;
        }
        HalfLaurent::from_terms(acc)
    }

    #[test]
    fn qint_small_values() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(2), &HalfLaurent::big_q() + &HalfLaurent::unit(-2, 0));
        assert_eq!(qint(-2), -qint(2));
    }

    #[test]
    fn qfact_three_expands() {
        // (Q^2 + 1 + Q^-2)(Q + Q^-1) = Q^3 + 2Q + 2Q^-1 + Q^-3
        let expected =
            HalfLaurent::from_terms([((6, 0), rat(1)), ((2, 0), rat(2)), ((-2, 0), rat(2)), ((-6, 0), rat(1))]);
        assert_eq!(qfact(3).unwrap(), expected);
        assert_eq!(brute_product(&[qint(1), qint(2), qint(3)]), expected);
        assert_eq!(qfact(0).unwrap(), HalfLaurent::one());
        assert!(qfact(-1).is_err());
    }

    #[test]
    fn qint_addition_law() {
        for m in -10i64..=10 {
            for n in -10i64..=10 {
                let lhs = qint(m + n);
                let rhs = &(&qint(m) * &HalfLaurent::unit(2 * n as i32, 0))
                    + &(&qint(n) * &HalfLaurent::unit(-2 * m as i32, 0));
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn exact_division() {
        let a = qint(6);
        let b = qint(3);
        let quotient = a.div_exact(&b).unwrap();
        assert_eq!(&quotient * &b, a);
        assert!(qint(3).div_exact(&qint(2)).is_none());
        let shifted = (&qint(4) * &HalfLaurent::unit(-3, 5)).div_exact(&qint(2)).unwrap();
        assert_eq!(&shifted * &qint(2), &qint(4) * &HalfLaurent::unit(-3, 5));
    }

    #[test]
    fn gcd_of_q_integers() {
        // gcd([4], [6]) = [2] up to a unit
        let g = univariate_gcd(&qint(4), &qint(6)).unwrap();
        assert!(qint(4).div_exact(&g).is_some());
        assert!(qint(6).div_exact(&g).is_some());
        assert!(g.div_exact(&qint(2)).is_some());
    }

    #[test]
    fn json_layout() {
        let p = &HalfLaurent::q() - &HalfLaurent::unit(-2, -2).scale(&rat(3));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[{"num":-3,"den":1,"qhalf":-2,"lhalf":-2},{"num":1,"den":1,"qhalf":2,"lhalf":-2}]"#);
        let back: HalfLaurent = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
