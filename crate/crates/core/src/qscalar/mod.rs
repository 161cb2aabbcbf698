//! Exact coefficient arithmetic: q-integers and factorials, Laurent polynomials
//! in `Q^{1/2}` and `λ^{1/2}`, their fractions, q-integer radicals, and
//! numeric evaluation.

mod frac;
mod laurent;
mod numeric;
mod rad;
mod ring;

pub use frac::FracScalar;
pub use laurent::{qfact, qint, qint_in, HalfExp, HalfLaurent, QVar};
pub use numeric::{NumericParams, GENERICITY_EPS};
pub use rad::RadScalar;
pub use ring::{max_magnitude, Ring, ScalarCtx, NUMERIC_RTOL};
