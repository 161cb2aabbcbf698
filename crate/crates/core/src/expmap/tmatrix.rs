use crate::error::{Error, Result};
use crate::matrix::{poly_mul, Matrix, PolyMatrix};
use crate::ncrewrite::render::RenderScalar;
use crate::ncrewrite::{half_string, tensor_product, NCPoly, Word};
use crate::qalg_u::{gamma_rep, Label, Norm};
use crate::qgroup_a::{AAlgebra, A, B, C, D, DD, NGENS};
use crate::qscalar::{RadScalar, Ring, ScalarCtx};
use crate::report::Report;

use super::qexp::{qexp_poly, scalar_times_element, QBase};

/// The representation matrix `T^{(j;z)}` with entries in the function algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct TMatrix<S> {
    pub label: Label,
    pub norm: Norm,
    pub entries: PolyMatrix<S>,
}

fn qfact_ctx<S: Ring>(n: i32, ctx: &ScalarCtx<S>) -> Result<S> {
    let mut acc = S::one();
    for i in 2..=n {
        acc = acc.mul(&ctx.qint(i as i64)?);
    }
    Ok(acc)
}

fn inv<S: Ring>(x: &S) -> Result<S> {
    x.inv().ok_or_else(|| Error::domain("division by a vanishing q-factorial"))
}

/// `T^{(j;z)}` from the closed formula.
pub fn t_matrix_closed<S: Ring>(label: Label, norm: Norm, ctx: &ScalarCtx<S>) -> Result<TMatrix<S>> {
    let n = label.dim();
    let j = label.j2 as i32;
    let z = label.z2;
    let entries = Matrix::try_from_fn(n, n, |i, kk| -> Result<NCPoly<S>> {
        let (m, k) = (label.m2(i), label.m2(kk));
        let pref = match norm {
            Norm::Symmetric => {
                let mut rad = Vec::new();
                for top in [(j + m) / 2, (j - m) / 2, (j + k) / 2, (j - k) / 2] {
                    rad.extend(2..=top as i64);
                }
                ctx.lift_rad(&RadScalar::sqrt_qints(&rad)?)?
            }
            Norm::Rational => qfact_ctx((j + m) / 2, ctx)?.mul(&qfact_ctx((j - m) / 2, ctx)?),
        };
        let u0 = -((m - k) / 2) * ((2 * j - m + k) / 2);
        let v0 = -((m - k) / 2) * ((2 * j - 2 * z - m - k) / 2);
        let pref = pref.mul(&ctx.unit(u0, v0)?);
        let lo = 0.max((k - m) / 2);
        let hi = ((j + k) / 2).min((j - m) / 2);
        let mut out = NCPoly::zero();
        for s in lo..=hi {
            let ea = (j + k) / 2 - s;
            let eb = (m - k) / 2 + s;
            let ed = (j - m) / 2 - s;
            let mut c = ctx.unit(-s * (2 * j - m + k - 2 * s), -s * (m - k + 2 * s))?;
            for f in [ea, eb, s, ed] {
                c = c.mul(&inv(&qfact_ctx(f, ctx)?)?);
            }
            let w = Word::from_runs([(D, z - j), (A, ea), (B, eb), (C, s), (DD, ed)]);
            out.add_term(w, c.mul(&pref));
        }
        Ok(out)
    })?;
    Ok(TMatrix { label, norm, entries })
}

/// `T^{(j;z)}` as the product `ℰ_{Q^{-2}}(γ⊗Ĵ_-) · diag(𝒟^{z-j} a^{m+j} w^{j-m}) · ℰ_{Q²}(β⊗Ĵ_+)`.
///
/// The middle factor is `a^{m+z} w^{z-m}` rewritten with `𝒟 = a w` (`a` and
/// `w` commute), so no inverse of `a` or `w` is needed.
pub fn t_matrix_factorized<S: Ring>(alg: &AAlgebra<S>, label: Label, norm: Norm) -> Result<TMatrix<S>> {
    let ctx = &alg.ctx;
    let n = label.dim();
    let rep = gamma_rep(label, norm, ctx)?;
    let hat = rep.hatted(ctx)?;
    let left = qexp_poly(QBase::QInv2, &scalar_times_element(&hat.jminus, &alg.gamma()?), &alg.pres, None, ctx)?;
    let right = qexp_poly(QBase::Q2, &scalar_times_element(&hat.jplus, &alg.beta()?), &alg.pres, None, ctx)?;
    let w = alg.w()?;
    let j = label.j2 as i32;
    let dz = alg.dpow(label.z2 - j);
    let middle = Matrix::try_from_fn(n, n, |i, k| -> Result<NCPoly<S>> {
        if i != k {
            return Ok(NCPoly::zero());
        }
        let m = label.m2(i);
        let ap = alg.pres.pow(&alg.gen(A), ((m + j) / 2) as u32)?;
        let wp = alg.pres.pow(&w, ((j - m) / 2) as u32)?;
        alg.product(&[&dz, &ap, &wp])
    })?;
    let entries = poly_mul(&alg.pres, &poly_mul(&alg.pres, &left, &middle)?, &right)?;
    let pmag = |m: &PolyMatrix<S>| m.entries().map(|(_, _, e)| e.magnitude()).fold(1.0, f64::max);
    // In floating point the a^-1 terms cancel only up to rounding.
    let scale = pmag(&left) * pmag(&middle) * pmag(&right);
    let entries = entries.try_map(|e| -> Result<NCPoly<S>> {
        let mut out = NCPoly::zero();
        for (w, c) in e.terms() {
            if w.exponent_of(A) >= 0 {
                out.add_term(w.clone(), c.clone());
            } else if !c.negligible(scale) {
                return Err(Error::Internal("a^-1 survives in the factorized T-matrix".into()));
            }
        }
        Ok(out)
    })?;
    Ok(TMatrix { label, norm, entries })
}

impl<S: RenderScalar> TMatrix<S> {
    /// Entrywise comparison with another matrix of the same shape.
    pub fn compare(&self, other: &PolyMatrix<S>, check: &str, alg: &AAlgebra<S>) -> Report {
        let mut r = Report::new(check)
            .param("j", half_string(self.label.j2 as i32))
            .param("z", half_string(self.label.z2))
            .param("norm", self.norm);
        for (i, k, e) in self.entries.entries() {
            r.identity(format!("T[{i}][{k}]"), e, other.get(i, k), &alg.pres);
        }
        r
    }
}

/// `t_matrix_closed = t_matrix_factorized`, plus the scaling
/// `T^{(j;z)}_{mk} = 𝒟^{z-j} λ^{(z-j)(m-k)} T^{(j;j)}_{mk}` between closed forms.
pub fn closed_vs_factorized_check<S: RenderScalar>(alg: &AAlgebra<S>, label: Label, norm: Norm) -> Result<Report> {
    let closed = t_matrix_closed(label, norm, &alg.ctx)?;
    let fact = t_matrix_factorized(alg, label, norm)?;
    let mut r = closed.compare(&fact.entries, "closed-vs-factorized", alg);
    let top = t_matrix_closed(Label { j2: label.j2, z2: label.j2 as i32 }, norm, &alg.ctx)?;
    let shift = label.z2 - label.j2 as i32;
    for (i, k, e) in top.entries.entries() {
        let c = alg.ctx.unit(0, shift * (label.m2(i) - label.m2(k)) / 2)?;
        let moved = alg.mul(&alg.dpow(shift), &e.scale(&c))?;
        r.identity(format!("z-scaling T[{i}][{k}]"), closed.entries.get(i, k), &moved, &alg.pres);
    }
    Ok(r)
}

/// `Δ(T_{kl}) = Σ_i T_{ki} ⊗ T_{il}`.
pub fn comodule_check<S: RenderScalar>(alg: &AAlgebra<S>, t: &TMatrix<S>) -> Result<Report> {
    let mut r = Report::new("comodule")
        .param("j", half_string(t.label.j2 as i32))
        .param("z", half_string(t.label.z2))
        .param("norm", t.norm);
    let n = t.label.dim();
    for k in 0..n {
        for l in 0..n {
            let lhs = alg.coproduct(t.entries.get(k, l))?;
            let mut rhs = NCPoly::zero();
            for i in 0..n {
                rhs = &rhs + &tensor_product(&[t.entries.get(k, i), t.entries.get(i, l)], NGENS);
            }
            let rhs = alg.tensor2.normal_order(&rhs)?;
            r.identity(format!("Delta T[{k}][{l}]"), &lhs, &rhs, &alg.tensor2);
        }
    }
    Ok(r)
}

/// `ε(T) = 1`, every entry of degree `2j` in `a, b, c, d` with `D`-power `z - j`,
/// and weight balance: `T_{mk}` has `(#b - #c) = m - k`.
pub fn t_structure_check<S: RenderScalar>(alg: &AAlgebra<S>, t: &TMatrix<S>) -> Result<Report> {
    let mut r = Report::new("t-structure")
        .param("j", half_string(t.label.j2 as i32))
        .param("z", half_string(t.label.z2))
        .param("norm", t.norm);
    let sector = alg.pres.sector();
    let j = t.label.j2 as i32;
    for (i, k, e) in t.entries.entries() {
        let want = if i == k { S::one() } else { S::zero() };
        r.scalar_identity(format!("eps T[{i}][{k}]"), &alg.counit(e), &want, sector);
        let bad: Vec<String> = e
            .terms()
            .filter(|(w, _)| {
                let deg = w.degree_in(|g| g != D) as i32;
                let bal = w.exponent_of(B) - w.exponent_of(C);
                deg != j || w.exponent_of(D) != t.label.z2 - j || 2 * bal != t.label.m2(i) - t.label.m2(k)
            })
            .map(|(w, _)| crate::ncrewrite::render::word(w, &alg.pres, crate::ncrewrite::Style::Text))
            .collect();
        r.record(format!("degree and weight T[{i}][{k}]"), bad.is_empty(), || bad.join(", "));
    }
    Ok(r)
}
