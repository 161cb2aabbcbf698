use crate::error::{Error, Result};
use crate::matrix::{poly_add, poly_identity, poly_mul, Matrix, PolyMatrix};
use crate::ncrewrite::{NCPoly, Presentation};
use crate::qscalar::{Ring, ScalarCtx};

/// The base `t²` of a q-exponential.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QBase {
    /// `t = Q`
    Q2,
    /// `t = Q^{-1}`
    QInv2,
}

/// `t^{-n(n-1)/2} / [n]_t!`; note `[n]_{Q^{-1}} = [n]_Q`.
pub fn qexp_coeff<S: Ring>(base: QBase, n: usize, ctx: &ScalarCtx<S>) -> Result<S> {
    let e = (n * n.saturating_sub(1)) as i32;
    let u = match base {
        QBase::Q2 => -e,
        QBase::QInv2 => e,
    };
    let mut fact = S::one();
    for i in 2..=n {
        fact = fact.mul(&ctx.qint(i as i64)?);
    }
    let inv = fact.inv().ok_or_else(|| Error::domain("q-factorial vanishes at these parameters"))?;
    Ok(ctx.unit(u, 0)?.mul(&inv))
}

fn series<M: Clone>(
    x: &M,
    dim: usize,
    bound: Option<usize>,
    one: M,
    mul: impl Fn(&M, &M) -> Result<M>,
    scale_add: impl Fn(&M, &M, usize) -> Result<M>,
    is_zero: impl Fn(&M) -> bool,
) -> Result<M> {
    let limit = bound.unwrap_or(dim);
    let mut acc = one;
    let mut power = x.clone();
    for n in 1..=limit {
        if is_zero(&power) {
            return Ok(acc);
        }
        acc = scale_add(&acc, &power, n)?;
        power = mul(&power, x)?;
    }
    if bound.is_none() && !is_zero(&power) {
        return Err(Error::domain("q-exponential of a non-nilpotent matrix needs an explicit bound"));
    }
    Ok(acc)
}

/// `ℰ_{t²}(x) = Σ_n t^{-n(n-1)/2}/[n]_t! xⁿ` for a scalar matrix.
///
/// Without `bound` the matrix must be nilpotent; the sum then stops at the
/// first vanishing power.
pub fn qexp<S: Ring>(base: QBase, x: &Matrix<S>, bound: Option<usize>, ctx: &ScalarCtx<S>) -> Result<Matrix<S>> {
    series(
        x,
        x.rows(),
        bound,
        Matrix::identity(x.rows()),
        |a, b| Ok(a.mul(b)),
        |acc, p, n| Ok(acc.add(&p.scale(&qexp_coeff(base, n, ctx)?))),
        |m| m.entries().all(|(_, _, v)| v.is_zero()),
    )
}

/// [`qexp`] for a matrix with algebra entries, multiplying in `pres`.
pub fn qexp_poly<S: Ring>(
    base: QBase,
    x: &PolyMatrix<S>,
    pres: &Presentation<S>,
    bound: Option<usize>,
    ctx: &ScalarCtx<S>,
) -> Result<PolyMatrix<S>> {
    series(
        x,
        x.rows(),
        bound,
        poly_identity(x.rows()),
        |a, b| poly_mul(pres, a, b),
        |acc, p, n| {
            let c = qexp_coeff(base, n, ctx)?;
            Ok(poly_add(acc, &p.map(|e| e.scale(&c))))
        },
        |m| m.entries().all(|(_, _, v)| v.is_zero()),
    )
}

/// The matrix `X ⊗ u` with entries `X_{ik}·u`.
pub fn scalar_times_element<S: Ring>(x: &Matrix<S>, u: &NCPoly<S>) -> PolyMatrix<S> {
    x.map(|c| if c.is_zero() { NCPoly::zero() } else { u.scale(c) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::{FracScalar, HalfLaurent};

    #[test]
    fn trivial_cases() {
        let ctx = ScalarCtx::<FracScalar>::exact();
        let zero = Matrix::<FracScalar>::zero(3, 3);
        assert_eq!(qexp(QBase::Q2, &zero, None, &ctx).unwrap(), Matrix::identity(3));
        let mut x = Matrix::zero(2, 2);
        x.set(0, 1, FracScalar::integer(5));
        let expect = Matrix::identity(2).add(&x);
        assert_eq!(qexp(QBase::Q2, &x, None, &ctx).unwrap(), expect);
        assert_eq!(qexp(QBase::QInv2, &x, None, &ctx).unwrap(), expect);
    }

    #[test]
    fn second_coefficient() {
        let ctx = ScalarCtx::<FracScalar>::exact();
        let two = &HalfLaurent::big_q() + &HalfLaurent::unit(-2, 0);
        let want = FracScalar::new(HalfLaurent::unit(-2, 0), two.clone()).unwrap();
        assert_eq!(qexp_coeff(QBase::Q2, 2, &ctx).unwrap(), want);
        let want = FracScalar::new(HalfLaurent::big_q(), two).unwrap();
        assert_eq!(qexp_coeff(QBase::QInv2, 2, &ctx).unwrap(), want);
    }

    #[test]
    fn non_nilpotent_needs_bound() {
        let ctx = ScalarCtx::<FracScalar>::exact();
        let x = Matrix::<FracScalar>::identity(2);
        assert!(qexp(QBase::Q2, &x, None, &ctx).is_err());
        let y = qexp(QBase::Q2, &x, Some(1), &ctx).unwrap();
        assert_eq!(y, Matrix::identity(2).scale(&FracScalar::integer(2)));
    }
}
