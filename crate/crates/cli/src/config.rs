use clap::ValueEnum;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use qexpmap::ncrewrite::parse_half;
use qexpmap::qalg_u::Label;
use qexpmap::qscalar::NumericParams;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// Parameters: formal, or numeric values given as exact rationals.
#[derive(Clone, Debug)]
pub enum Params {
    Symbolic,
    Numeric(NumericParams),
}

#[derive(Clone, Debug)]
pub struct Config {
    pub params: Params,
    pub format: Format,
    pub guard: usize,
}

impl Config {
    pub fn new(p: Option<&str>, q: Option<&str>, format: Format, guard: Option<usize>) -> Result<Self, Failure> {
        let params = match (p, q) {
            (None, None) => Params::Symbolic,
            (None, Some(q)) => Params::Numeric(NumericParams::one_param(rational(q)?)?),
            (Some(_), None) => return Err(Failure::Usage("--p needs --q".into())),
            (Some(p), Some(q)) => Params::Numeric(NumericParams::new(rational(p)?, rational(q)?)?),
        };
        Ok(Self { params, format, guard: guard.unwrap_or(qexpmap::ncrewrite::DEFAULT_GUARD) })
    }

    pub fn one_param(&self) -> bool {
        match &self.params {
            Params::Symbolic => true,
            Params::Numeric(p) => (p.lambda - 1.0).abs() < 1e-14,
        }
    }
}

/// A rational `r/s` (or integer) as a float.
pub fn rational(s: &str) -> Result<f64, Failure> {
    let r: BigRational = s.trim().parse().map_err(|_| Failure::Usage(format!("`{s}` is not a rational number r/s")))?;
    r.to_f64().filter(|v| v.is_finite()).ok_or_else(|| Failure::Usage(format!("`{s}` is out of range")))
}

/// A spin label from `--j` and `--z` (`z` defaults to `j`).
pub fn label(j: &str, z: Option<&str>) -> Result<Label, Failure> {
    let j2 = parse_half(j)?;
    let z2 = match z {
        Some(z) => parse_half(z)?,
        None => j2,
    };
    Ok(Label::new(j2 as i64, z2 as i64)?)
}
