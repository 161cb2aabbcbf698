use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Distance from the non-generic locus `Q = 1` below which parameters are rejected.
pub const GENERICITY_EPS: f64 = 1e-9;

/// Numeric values of `p, q` together with the derived `Q = sqrt(pq)`, `λ = sqrt(p/q)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NumericParams {
    pub p: f64,
    pub q: f64,
    #[serde(rename = "Q")]
    pub big_q: f64,
    pub lambda: f64,
}

impl NumericParams {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !(p.is_finite() && q.is_finite()) || p <= 0.0 || q <= 0.0 {
            return Err(Error::Eval(format!("parameters must be positive, got p={p}, q={q}")));
        }
        let big_q = (p * q).sqrt();
        let lambda = (p / q).sqrt();
        // [n]_Q has the factor Q - Q^{-1} in every denominator that appears.
        if (big_q - big_q.recip()).abs() < GENERICITY_EPS {
            return Err(Error::Eval(format!("non-generic parameters: Q = {big_q} makes Q - Q^-1 vanish")));
        }
        Ok(Self { p, q, big_q, lambda })
    }

    pub fn from_rationals(p: &BigRational, q: &BigRational) -> Result<Self> {
        let pf = p.to_f64().ok_or_else(|| Error::Eval("p out of range".into()))?;
        let qf = q.to_f64().ok_or_else(|| Error::Eval("q out of range".into()))?;
        Self::new(pf, qf)
    }

    /// The `p = q` sector, where `Q = q` and `λ = 1`.
    pub fn one_param(q: f64) -> Result<Self> {
        Self::new(q, q)
    }

    /// `Q^{u/2} λ^{v/2}`.
    pub fn half_power(&self, u: i32, v: i32) -> f64 {
        self.big_q.powf(u as f64 / 2.0) * self.lambda.powf(v as f64 / 2.0)
    }

    /// A random generic point with `p, q ∈ [0.3, 3]`, away from `Q = 1`.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        loop {
            let p: f64 = rng.gen_range(0.3..3.0);
            let q: f64 = rng.gen_range(0.3..3.0);
            let big_q: f64 = (p * q).sqrt();
            if (big_q - 1.0).abs() > 0.05 {
                if let Ok(params) = Self::new(p, q) {
                    return params;
                }
            }
        }
    }

    /// A random generic point in the `p = q` sector.
    pub fn random_one_param<R: Rng>(rng: &mut R) -> Self {
        loop {
            let q: f64 = rng.gen_range(0.3..3.0);
            if (q - 1.0).abs() > 0.05 {
                if let Ok(params) = Self::one_param(q) {
                    return params;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::laurent::{qint, HalfLaurent};

    #[test]
    fn derived_values() {
        let params = NumericParams::new(9.0 / 4.0, 1.0 / 4.0).unwrap();
        assert!((params.big_q - 0.75).abs() < 1e-15);
        assert!((params.lambda - 3.0).abs() < 1e-15);
        assert!((HalfLaurent::big_q().eval(&params) - 0.75).abs() < 1e-15);
        // [2] = 3/4 + 4/3 = 25/12
        assert!((qint(2).eval(&params) - 25.0 / 12.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_generic() {
        assert!(NumericParams::new(2.0, 0.5).is_err());
        assert!(NumericParams::new(-1.0, 2.0).is_err());
        assert!(NumericParams::new(0.0, 2.0).is_err());
    }

    #[test]
    fn qint_matches_closed_form() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let params = NumericParams::random(&mut rng);
            let t = params.big_q;
            for n in -20i64..=20 {
                let expected = (t.powi(n as i32) - t.powi(-n as i32)) / (t - t.recip());
                let got = qint(n).eval(&params);
                let scale = expected.abs().max(1.0);
                assert!((got - expected).abs() <= 1e-12 * scale, "n={n} {got} vs {expected}");
            }
        }
    }
}
