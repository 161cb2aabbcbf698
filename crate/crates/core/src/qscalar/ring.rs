//! The coefficient abstraction shared by the rewriting engine and matrices.
//!
//! Every exact computation is done over [`FracScalar`] or [`RadScalar`]; the
//! numeric re-checks run the same code over `f64`. A [`ScalarCtx`] carries the
//! map from exact data into the working ring.

use std::fmt::Debug;
use std::sync::Arc;

use num_rational::BigRational;

use super::frac::FracScalar;
use super::laurent::{qint, HalfLaurent};
use super::numeric::NumericParams;
use super::rad::RadScalar;
use crate::error::{Error, Result};

/// Relative tolerance for numeric comparisons.
pub const NUMERIC_RTOL: f64 = 1e-10;

pub trait Ring: Clone + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    /// Whether `self` is zero up to `scale` (exact rings ignore `scale`).
    fn negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    /// Size used to scale numeric tolerances; exact rings report 0.
    fn magnitude(&self) -> f64 {
        0.0
    }

    const EXACT: bool;

    fn pow(&self, n: i64) -> Option<Self> {
        let mut base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Some(acc)
    }
}

impl Ring for FracScalar {
    const EXACT: bool = true;
    fn zero() -> Self {
        FracScalar::zero()
    }
    fn one() -> Self {
        FracScalar::one()
    }
    fn is_zero(&self) -> bool {
        FracScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        FracScalar::inv(self)
    }
}

impl Ring for RadScalar {
    const EXACT: bool = true;
    fn zero() -> Self {
        RadScalar::zero()
    }
    fn one() -> Self {
        RadScalar::one()
    }
    fn is_zero(&self) -> bool {
        RadScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        RadScalar::inv(self)
    }
}

impl Ring for f64 {
    const EXACT: bool = false;
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| self.recip())
    }
    fn negligible(&self, scale: f64) -> bool {
        self.abs() <= NUMERIC_RTOL * scale.max(f64::MIN_POSITIVE)
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

type LiftFn<S> = dyn Fn(&FracScalar) -> Result<S> + Send + Sync;
type RadFn<S> = dyn Fn(&RadScalar) -> Result<S> + Send + Sync;
type SpecFn<S> = dyn Fn(&S) -> Result<S> + Send + Sync;

/// Maps exact scalars into a working ring `S`.
#[derive(Clone)]
pub struct ScalarCtx<S> {
    lift: Arc<LiftFn<S>>,
    rad: Arc<RadFn<S>>,
    one_param: Arc<SpecFn<S>>,
    params: Option<NumericParams>,
}

impl<S: Ring> ScalarCtx<S> {
    pub fn lift(&self, x: &FracScalar) -> Result<S> {
        (self.lift)(x)
    }

    pub fn lift_laurent(&self, x: &HalfLaurent) -> Result<S> {
        self.lift(&FracScalar::from_laurent(x.clone()))
    }

    pub fn lift_rad(&self, x: &RadScalar) -> Result<S> {
        (self.rad)(x)
    }

    /// Specializes a value to the `p = q` sector (substituting `λ = 1`).
    pub fn one_param(&self, x: &S) -> Result<S> {
        (self.one_param)(x)
    }

    /// `Q^{u/2} λ^{v/2}`.
    pub fn unit(&self, u: i32, v: i32) -> Result<S> {
        self.lift_laurent(&HalfLaurent::unit(u, v))
    }

    pub fn integer(&self, n: i64) -> Result<S> {
        self.lift(&FracScalar::integer(n))
    }

    pub fn rational(&self, r: &BigRational) -> Result<S> {
        self.lift(&FracScalar::rational(r.clone()))
    }

    pub fn qint(&self, n: i64) -> Result<S> {
        self.lift_laurent(&qint(n))
    }

    /// Numeric parameters, for numeric contexts.
    pub fn params(&self) -> Option<&NumericParams> {
        self.params.as_ref()
    }
}

impl ScalarCtx<FracScalar> {
    pub fn exact() -> Self {
        Self {
            lift: Arc::new(|x| Ok(x.clone())),
            rad: Arc::new(|r| {
                r.as_frac()
                    .ok_or_else(|| Error::domain(format!("radical {r:?} needs the symmetric (radical) scalar type")))
            }),
            one_param: Arc::new(|x| x.specialize_lambda_one()),
            params: None,
        }
    }
}

impl ScalarCtx<RadScalar> {
    pub fn exact() -> Self {
        Self {
            lift: Arc::new(|x| Ok(RadScalar::from_frac(x.clone()))),
            rad: Arc::new(|r| Ok(r.clone())),
            one_param: Arc::new(|x| x.specialize_lambda_one()),
            params: None,
        }
    }
}

impl ScalarCtx<f64> {
    /// Evaluation at numeric parameters. In the `p = q` sector `one_param` is the identity.
    pub fn numeric(params: NumericParams) -> Self {
        let one_param_ok = (params.lambda - 1.0).abs() < 1e-14;
        Self {
            lift: Arc::new(move |x| x.eval(&params)),
            rad: Arc::new(move |r| r.eval(&params)),
            one_param: Arc::new(move |x| {
                if one_param_ok {
                    Ok(*x)
                } else {
                    Err(Error::Eval("one-parameter sector needs numeric p = q".into()))
                }
            }),
            params: Some(params),
        }
    }
}

/// Scale for comparing two collections of numeric values.
pub fn max_magnitude<'a, S: Ring + 'a>(values: impl IntoIterator<Item = &'a S>) -> f64 {
    values.into_iter().map(|v| v.magnitude()).fold(1.0, f64::max)
}
