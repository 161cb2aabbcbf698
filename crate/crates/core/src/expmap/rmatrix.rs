use crate::error::Result;
use crate::matrix::Matrix;
use crate::ncrewrite::render::RenderScalar;
use crate::ncrewrite::{half_string, Sector};
use crate::qalg_u::{gamma_rep, record_matrix, Label, Norm, Rep};
use crate::qscalar::{Ring, ScalarCtx};
use crate::report::Report;

/// `R^{(j1;z1)⊗(j2;z2)}`, rows and columns indexed by `(i1, i2) ↦ i1·n2 + i2`.
///
/// `Q^{-2 J0⊗J0} λ^{2(Z⊗J0 - J0⊗Z)} Σ_n (1-Q²)^n/[n]! Q^{-n(n-1)/2} (Q^{-J0}λ^Z J+ ⊗ Q^{J0}λ^Z J-)^n`,
/// truncated at `n = 2 min(j1, j2)`.
pub fn r_matrix_rep<S: Ring>(l1: Label, l2: Label, norm: Norm, ctx: &ScalarCtx<S>) -> Result<Matrix<S>> {
    let r1 = gamma_rep(l1, norm, ctx)?;
    let r2 = gamma_rep(l2, norm, ctx)?;
    r_matrix_from_reps(&r1, &r2, ctx)
}

pub fn r_matrix_from_reps<S: Ring>(r1: &Rep<S>, r2: &Rep<S>, ctx: &ScalarCtx<S>) -> Result<Matrix<S>> {
    let (l1, l2) = (r1.label, r2.label);
    let x1 = r1.weight_diag(ctx, |m| (-m, l1.z2))?.mul(&r1.jplus);
    let x2 = r2.weight_diag(ctx, |m| (m, l2.z2))?.mul(&r2.jminus);
    let x = x1.kron(&x2);
    let bound = l1.j2.min(l2.j2) as usize;
    let one_minus = S::one().sub(&ctx.unit(4, 0)?);
    let mut sum = Matrix::identity(x.rows());
    let mut power = Matrix::identity(x.rows());
    let mut fact = S::one();
    for n in 1..=bound {
        power = power.mul(&x);
        fact = fact.mul(&ctx.qint(n as i64)?);
        let c = one_minus
            .pow(n as i64)
            .expect("nonnegative power")
            .mul(&ctx.unit(-((n * (n - 1)) as i32), 0)?)
            .mul(&fact.inv().ok_or_else(|| crate::Error::domain("vanishing q-factorial"))?);
        sum = sum.add(&power.scale(&c));
    }
    let n2 = l2.dim();
    let pref = Matrix::diag(
        (0..l1.dim() * n2)
            .map(|idx| {
                let (m1, m2) = (l1.m2(idx / n2), l2.m2(idx % n2));
                ctx.unit(-m1 * m2, l1.z2 * m2 - m1 * l2.z2)
            })
            .collect::<Result<_>>()?,
    );
    Ok(pref.mul(&sum))
}

/// The 4×4 matrix `Q^{1/2}(Q^{-1}, λ^{-1}, Q^{-1}-Q, λ, Q^{-1})` of the defining relations.
pub fn defining_r<S: Ring>(ctx: &ScalarCtx<S>) -> Result<Matrix<S>> {
    let mut r = Matrix::zero(4, 4);
    let qi = ctx.unit(-2, 0)?;
    r.set(0, 0, qi.clone());
    r.set(1, 1, ctx.unit(0, -2)?);
    r.set(1, 2, qi.sub(&ctx.unit(2, 0)?));
    r.set(2, 2, ctx.unit(0, 2)?);
    r.set(3, 3, qi);
    Ok(r.scale(&ctx.unit(1, 0)?))
}

fn r_report(check: &str, l1: Label, l2: Label, norm: Norm) -> Report {
    Report::new(check)
        .param("j1", half_string(l1.j2 as i32))
        .param("z1", half_string(l1.z2))
        .param("j2", half_string(l2.j2 as i32))
        .param("z2", half_string(l2.z2))
        .param("norm", norm)
}

/// `R^{(1/2)⊗(1/2)}` from the series against the defining 4×4 matrix.
pub fn r_defining_check<S: RenderScalar>(ctx: &ScalarCtx<S>) -> Result<Report> {
    let half = Label { j2: 1, z2: 1 };
    let mut r = r_report("r-defining", half, half, Norm::Symmetric);
    let series = r_matrix_rep(half, half, Norm::Symmetric, ctx)?;
    let ok = record_matrix(&mut r, "series R = defining R", &series, &defining_r(ctx)?, Sector::TwoParam);
    if ok {
        r.note("equal including the overall Q^1/2; no scalar discrepancy");
    }
    Ok(r)
}

/// Weight conservation and `Δ'(g) R = R Δ(g)` for `g ∈ {J+, J-, J0, Z}`.
pub fn quasitriangularity_check<S: RenderScalar>(
    l1: Label,
    l2: Label,
    norm: Norm,
    ctx: &ScalarCtx<S>,
) -> Result<Report> {
    let mut r = r_report("quasitriangular", l1, l2, norm);
    let r1 = gamma_rep(l1, norm, ctx)?;
    let r2 = gamma_rep(l2, norm, ctx)?;
    let rm = r_matrix_from_reps(&r1, &r2, ctx)?;
    let n2 = l2.dim();
    let weight = |idx: usize| l1.m2(idx / n2) + l2.m2(idx % n2);
    let violations: Vec<String> = rm
        .entries()
        .filter(|&(i, k, v)| weight(i) != weight(k) && !v.is_zero())
        .map(|(i, k, _)| format!("({i},{k})"))
        .collect();
    r.record("weight conservation", violations.is_empty(), || violations.join(", "));
    let (i1, i2) = (Matrix::identity(l1.dim()), Matrix::identity(l2.dim()));
    // Q^{±J0} λ^{±Z} factors
    let qj = |rep: &Rep<S>, s: i32, t: i32| rep.weight_diag(ctx, |m| (s * m, t * rep.label.z2));
    for (name, sign) in [("J+", 1), ("J-", -1)] {
        let (g1, g2) = if sign == 1 { (&r1.jplus, &r2.jplus) } else { (&r1.jminus, &r2.jminus) };
        let delta = g1.kron(&qj(&r2, -1, sign)?).add(&qj(&r1, 1, -sign)?.kron(g2));
        let delta_op = qj(&r1, -1, sign)?.kron(g2).add(&g1.kron(&qj(&r2, 1, -sign)?));
        record_matrix(
            &mut r,
            &format!("Delta'({name}) R = R Delta({name})"),
            &delta_op.mul(&rm),
            &rm.mul(&delta),
            Sector::TwoParam,
        );
    }
    for (name, g1, g2) in [("J0", &r1.j0, &r2.j0), ("Z", &r1.z, &r2.z)] {
        let delta = g1.kron(&i2).add(&i1.kron(g2));
        // Δ' = Δ for primitive elements
        record_matrix(
            &mut r,
            &format!("Delta'({name}) R = R Delta({name})"),
            &delta.mul(&rm),
            &rm.mul(&delta),
            Sector::TwoParam,
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::{FracScalar, HalfLaurent};

    #[test]
    fn top_diagonal_entry() {
        let ctx = ScalarCtx::<FracScalar>::exact();
        let half = Label { j2: 1, z2: 1 };
        let r = r_matrix_rep(half, half, Norm::Rational, &ctx).unwrap();
        assert_eq!(r.get(0, 0), &FracScalar::unit(-1, 0));
        assert_eq!(r, defining_r(&ctx).unwrap());
        assert_eq!(r.get(1, 2), &(&FracScalar::unit(-1, 0) - &FracScalar::from_laurent(HalfLaurent::unit(3, 0))));
    }

    #[test]
    fn intertwines() {
        let ctx = ScalarCtx::<FracScalar>::exact();
        for (a, b) in [((1, 1), (1, 1)), ((1, 1), (2, 0)), ((2, 1), (3, -1))] {
            let r =
                quasitriangularity_check(Label { j2: a.0, z2: a.1 }, Label { j2: b.0, z2: b.1 }, Norm::Rational, &ctx)
                    .unwrap();
            assert!(r.pass, "{r:#?}");
        }
    }
}
