//! Fractions of [`HalfLaurent`] polynomials.
//!
//! There is no canonical form in general. Denominators are shifted by a unit so
//! their exponent range is centred and their leading coefficient is one, exact
//! quotients are cancelled, and for `λ`-free data a univariate GCD is divided
//! out. Equality is decided by cross-multiplication.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::laurent::{univariate_gcd, HalfLaurent};
use super::numeric::NumericParams;
use crate::error::{Error, Result};

#[derive(Clone, Serialize, Deserialize)]
pub struct FracScalar {
    num: HalfLaurent,
    den: HalfLaurent,
}

impl FracScalar {
    pub fn zero() -> Self {
        Self::from_laurent(HalfLaurent::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(HalfLaurent::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::from_laurent(HalfLaurent::integer(n))
    }

    pub fn rational(r: BigRational) -> Self {
        Self::from_laurent(HalfLaurent::constant(r))
    }

    pub fn unit(u: i32, v: i32) -> Self {
        Self::from_laurent(HalfLaurent::unit(u, v))
    }

    pub fn from_laurent(num: HalfLaurent) -> Self {
        Self { num, den: HalfLaurent::one() }
    }

    pub fn new(num: HalfLaurent, den: HalfLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("fraction with zero denominator"));
        }
        let mut out = Self { num, den };
        out.normalize();
        Ok(out)
    }

    pub fn num(&self) -> &HalfLaurent {
        &self.num
    }

    pub fn den(&self) -> &HalfLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The polynomial value, when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&HalfLaurent> {
        self.den.is_one().then_some(&self.num)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = HalfLaurent::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        self.center_den();
        if self.den.is_one() {
            return;
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            self.num = q;
            self.den = HalfLaurent::one();
            return;
        }
        if let Some(g) = univariate_gcd(&self.num, &self.den) {
            if g.len() > 1 {
                if let (Some(n), Some(d)) = (self.num.div_exact(&g), self.den.div_exact(&g)) {
                    self.num = n;
                    self.den = d;
                    self.center_den();
                }
            }
        }
    }

    /// Shifts num and den by the same unit so the den's exponent range is
    /// centred on zero, then makes its leading coefficient one.
    fn center_den(&mut self) {
        let Some((umin, umax, vmin, vmax)) = self.den.exponent_bounds() else {
            return;
        };
        let su = (umin + umax).div_euclid(2);
        let sv = (vmin + vmax).div_euclid(2);
        if su != 0 || sv != 0 {
            self.den = self.den.shift(-su, -sv);
            self.num = self.num.shift(-su, -sv);
        }
        let lc = self.den.leading().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::one);
        if !lc.is_one() {
            let inv = lc.recip();
            self.den = self.den.scale(&inv);
            self.num = self.num.scale(&inv);
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut out = Self { num: self.den.clone(), den: self.num.clone() };
        out.normalize();
        Some(out)
    }

    pub fn pow(&self, n: i64) -> Option<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let e = n.unsigned_abs() as u32;
        Some(Self { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn specialize_lambda_one(&self) -> Result<Self> {
        Self::new(self.num.specialize_lambda_one(), self.den.specialize_lambda_one())
    }

    pub fn eval(&self, params: &NumericParams) -> Result<f64> {
        let d = self.den.eval(params);
        if d.abs() < 1e-300 || !d.is_finite() {
            return Err(Error::Eval(format!("denominator {:?} vanishes", self.den)));
        }
        Ok(self.num.eval(params) / d)
    }
}

impl From<HalfLaurent> for FracScalar {
    fn from(p: HalfLaurent) -> Self {
        Self::from_laurent(p)
    }
}

impl PartialEq for FracScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            self.num == other.num
        } else {
            &self.num * &other.den == &other.num * &self.den
        }
    }
}

impl Eq for FracScalar {}

impl fmt::Debug for FracScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

impl Add for &FracScalar {
    type Output = FracScalar;
    fn add(self, rhs: &FracScalar) -> FracScalar {
        if self.den == rhs.den {
            let mut out = FracScalar { num: &self.num + &rhs.num, den: self.den.clone() };
            out.normalize();
            return out;
        }
        if self.den.is_one() {
            let mut out = FracScalar { num: &(&self.num * &rhs.den) + &rhs.num, den: rhs.den.clone() };
            out.normalize();
            return out;
        }
        if rhs.den.is_one() {
            let mut out = FracScalar { num: &self.num + &(&rhs.num * &self.den), den: self.den.clone() };
            out.normalize();
            return out;
        }
        // One denominator may divide the other.
        if let Some(k) = rhs.den.div_exact(&self.den) {
            let mut out = FracScalar { num: &(&self.num * &k) + &rhs.num, den: rhs.den.clone() };
            out.normalize();
            return out;
        }
        if let Some(k) = self.den.div_exact(&rhs.den) {
            let mut out = FracScalar { num: &self.num + &(&rhs.num * &k), den: self.den.clone() };
            out.normalize();
            return out;
        }
        let mut out = FracScalar { num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den), den: &self.den * &rhs.den };
        out.normalize();
        out
    }
}

impl Neg for &FracScalar {
    type Output = FracScalar;
    fn neg(self) -> FracScalar {
        FracScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for FracScalar {
    type Output = FracScalar;
    fn neg(self) -> FracScalar {
        -&self
    }
}

impl Sub for &FracScalar {
    type Output = FracScalar;
    fn sub(self, rhs: &FracScalar) -> FracScalar {
        self + &(-rhs)
    }
}

impl Mul for &FracScalar {
    type Output = FracScalar;
    fn mul(self, rhs: &FracScalar) -> FracScalar {
        if self.den.is_one() && rhs.den.is_one() {
            return FracScalar::from_laurent(&self.num * &rhs.num);
        }
        let mut out = FracScalar { num: &self.num * &rhs.num, den: &self.den * &rhs.den };
        out.normalize();
        out
    }
}

impl Div for &FracScalar {
    type Output = FracScalar;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &FracScalar) -> FracScalar {
        self * &rhs.inv().expect("division by zero FracScalar")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FracScalar {
            type Output = FracScalar;
            fn $m(self, rhs: FracScalar) -> FracScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::laurent::{qint, rat};
    use rand::{Rng, SeedableRng};

    fn random_laurent<R: Rng>(rng: &mut R) -> HalfLaurent {
        let n = rng.gen_range(1..4);
        HalfLaurent::from_terms(
            (0..n).map(|_| ((rng.gen_range(-4..5), rng.gen_range(-2..3)), rat(rng.gen_range(-3..4)))),
        )
    }

    fn random_frac<R: Rng>(rng: &mut R) -> FracScalar {
        loop {
            let d = random_laurent(rng);
            if !d.is_zero() {
                return FracScalar::new(random_laurent(rng), d).unwrap();
            }
        }
    }

    #[test]
    fn u_sector_denominator_is_centred() {
        let q = HalfLaurent::big_q();
        let f = FracScalar::new(HalfLaurent::one(), &q - &HalfLaurent::unit(-2, 0)).unwrap();
        assert_eq!(f.den(), &(&q - &HalfLaurent::unit(-2, 0)));
        // (Q^2 - 1) is the same denominator up to a unit
        let g = FracScalar::new(HalfLaurent::unit(2, 0), &HalfLaurent::unit(4, 0) - &HalfLaurent::unit(0, 0)).unwrap();
        assert_eq!(f.den(), g.den());
        assert_eq!(f, g);
    }

    #[test]
    fn cancellation_of_exact_quotients() {
        let f = FracScalar::new(qint(6), qint(3)).unwrap();
        assert!(f.den().is_one());
        let g = FracScalar::new(qint(4), qint(6)).unwrap();
        // gcd [2] cancelled
        assert_eq!(g.den().len(), qint(3).len());
    }

    #[test]
    fn equality_is_an_equivalence() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let a = random_frac(&mut rng);
            let k = random_frac(&mut rng);
            if k.is_zero() {
                continue;
            }
            // b and c are different representatives of a
            let b = FracScalar { num: &a.num * &k.num, den: &a.den * &k.num };
            let c = FracScalar { num: &a.num * &k.den, den: &a.den * &k.den };
            assert_eq!(a, a);
            assert_eq!(a == b, b == a);
            assert!(a == b && b == c && a == c);
        }
    }

    #[test]
    fn field_axioms_on_samples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..40 {
            let a = random_frac(&mut rng);
            let b = random_frac(&mut rng);
            let c = random_frac(&mut rng);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
