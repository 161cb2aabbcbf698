//! The quantum matrix algebra `A_{p,q}(GL(2))`.
//!
//! Generators in normal-form order: the scaling generator `D` (the quantum
//! determinant with exponents in `½ℤ`), the invertible `a`, then `b`, `c`, `d`.

use crate::error::{Error, Result};
use crate::ncrewrite::render::RenderScalar;
use crate::ncrewrite::{
    apply_hom, parse, split_word, tensor_power, tensor_product, tensor_square, GenKind, NCPoly, Presentation,
    PresentationBuilder, Sector, Word,
};
use crate::qscalar::{FracScalar, HalfLaurent, Ring, ScalarCtx};
use crate::report::Report;

pub const D: usize = 0;
pub const A: usize = 1;
pub const B: usize = 2;
pub const C: usize = 3;
pub const DD: usize = 4;
/// Number of generators.
pub const NGENS: usize = 5;

fn lau(x: HalfLaurent) -> FracScalar {
    FracScalar::from_laurent(x)
}

/// The exact presentation.
pub fn apq_presentation() -> Presentation<FracScalar> {
    let q = HalfLaurent::q();
    let p = HalfLaurent::p();
    let pinv = p.inv_monomial().expect("monomial");
    let qinv = q.inv_monomial().expect("monomial");
    let build = || -> Result<Presentation<FracScalar>> {
        let mut bld = PresentationBuilder::new("A", Sector::TwoParam);
        let dg = bld.generator("D", GenKind::Scaling);
        let a = bld.generator("a", GenKind::Invertible);
        let b = bld.generator("b", GenKind::Ordinary);
        let c = bld.generator("c", GenKind::Ordinary);
        let d = bld.generator("d", GenKind::Ordinary);
        debug_assert_eq!((dg, a, b, c, d), (D, A, B, C, DD));
        bld.commute(b, a, lau(qinv.clone()))?;
        bld.commute(c, a, lau(pinv.clone()))?;
        bld.commute(c, b, lau(&q * &pinv))?;
        bld.commute(d, b, lau(pinv.clone()))?;
        bld.commute(d, c, lau(qinv.clone()))?;
        // d a = a d - (q - p^{-1}) b c
        let k = &q - &pinv;
        let bc = Word::from_runs([(b, 1), (c, 1)]);
        bld.rule(d, 1, a, 1, FracScalar::one(), NCPoly::monomial(bc, lau(-&k)))?;
        // d a^{-1} = a^{-1} d + (q - p^{-1}) p q a^{-2} b c
        let a2bc = Word::from_runs([(a, -2), (b, 1), (c, 1)]);
        bld.rule(d, 1, a, -1, FracScalar::one(), NCPoly::monomial(a2bc, lau(&(&k * &p) * &q)))?;
        bld.scaling(dg, a, FracScalar::one())?;
        bld.scaling(dg, b, lau(HalfLaurent::unit(0, -2)))?;
        bld.scaling(dg, c, lau(HalfLaurent::unit(0, 2)))?;
        bld.scaling(dg, d, FracScalar::one())?;
        bld.build()
    };
    build().expect("the A presentation is complete")
}

/// The algebra over a working ring, with its tensor square and cube.
#[derive(Clone)]
pub struct AAlgebra<S> {
    pub pres: Presentation<S>,
    pub tensor2: Presentation<S>,
    pub tensor3: Presentation<S>,
    pub ctx: ScalarCtx<S>,
}

impl<S: Ring> AAlgebra<S> {
    pub fn new(ctx: ScalarCtx<S>) -> Result<Self> {
        let pres = apq_presentation().map(|c| ctx.lift(c))?;
        Ok(Self { tensor2: tensor_square(&pres), tensor3: tensor_power(&pres, 3), pres, ctx })
    }

    pub fn with_guard(mut self, guard: usize) -> Self {
        self.pres = self.pres.with_guard(guard);
        self.tensor2 = self.tensor2.with_guard(guard);
        self.tensor3 = self.tensor3.with_guard(guard);
        self
    }

    pub fn gen(&self, g: usize) -> NCPoly<S> {
        let e = if g == D { 2 } else { 1 };
        NCPoly::gen(g, e)
    }

    /// `D^{e/2}`.
    pub fn dpow(&self, e: i32) -> NCPoly<S> {
        NCPoly::gen(D, e)
    }

    pub fn a_inv(&self) -> NCPoly<S> {
        NCPoly::gen(A, -1)
    }

    pub fn scalar(&self, x: HalfLaurent) -> Result<S> {
        self.ctx.lift_laurent(&x)
    }

    /// Parses and normal-orders an expression.
    pub fn parse(&self, text: &str) -> Result<NCPoly<S>> {
        let raw = parse(text, &self.pres)?.map(|c| self.ctx.lift(c))?;
        self.pres.normal_order(&raw)
    }

    pub fn mul(&self, x: &NCPoly<S>, y: &NCPoly<S>) -> Result<NCPoly<S>> {
        self.pres.mul(x, y)
    }

    pub fn product(&self, xs: &[&NCPoly<S>]) -> Result<NCPoly<S>> {
        self.pres.product(xs.iter().copied())
    }

    /// `𝒟 = ad - q bc`.
    pub fn qdet(&self) -> Result<NCPoly<S>> {
        let ad = self.mul(&self.gen(A), &self.gen(DD))?;
        let bc = self.mul(&self.gen(B), &self.gen(C))?;
        Ok(&ad - &bc.scale(&self.scalar(HalfLaurent::q())?))
    }

    /// `β = a^{-1} b`.
    pub fn beta(&self) -> Result<NCPoly<S>> {
        self.mul(&self.a_inv(), &self.gen(B))
    }

    /// `γ = c a^{-1}`.
    pub fn gamma(&self) -> Result<NCPoly<S>> {
        self.mul(&self.gen(C), &self.a_inv())
    }

    /// `w = d - c a^{-1} b`, the exponential of the `δ` coordinate.
    pub fn w(&self) -> Result<NCPoly<S>> {
        let cab = self.product(&[&self.gen(C), &self.a_inv(), &self.gen(B)])?;
        Ok(&self.gen(DD) - &cab)
    }

    fn generator_coproduct(&self, g: usize) -> NCPoly<S> {
        let t = |x: usize, y: usize| tensor_product(&[&self.gen(x), &self.gen(y)], NGENS);
        match g {
            A => &t(A, A) + &t(B, C),
            B => &t(A, B) + &t(B, DD),
            C => &t(C, A) + &t(DD, C),
            DD => &t(C, B) + &t(DD, DD),
            _ => unreachable!("scaling generator handled by the caller"),
        }
    }

    /// `Δ`, an algebra map into the tensor square. Undefined on `a^{-1}`.
    pub fn coproduct(&self, x: &NCPoly<S>) -> Result<NCPoly<S>> {
        apply_hom(
            x,
            &self.tensor2,
            |c| Ok(c.clone()),
            |g, e| {
                if g == D {
                    return Ok(NCPoly::word(Word::from_runs([(D, e), (D + NGENS, e)])));
                }
                if e < 0 {
                    return Err(Error::domain("coproduct undefined on localized generator a^-1"));
                }
                self.tensor2.pow(&self.generator_coproduct(g), e as u32)
            },
        )
    }

    /// `(Δ ⊗ id)` or `(id ⊗ Δ)` applied to an element of the tensor square.
    pub fn coproduct_on_leg(&self, x: &NCPoly<S>, leg: usize) -> Result<NCPoly<S>> {
        apply_hom(
            x,
            &self.tensor3,
            |c| Ok(c.clone()),
            |h, e| {
                let (l, g) = (h / NGENS, h % NGENS);
                let shift = |p: &NCPoly<S>, by: usize| {
                    p.map_words(|w| Word::from_runs(w.runs().iter().map(|&(k, e)| (k + by * NGENS, e))))
                };
                if l == leg {
                    let img = self.coproduct(&NCPoly::gen(g, e))?;
                    Ok(shift(&img, leg))
                } else {
                    let target = if l < leg { l } else { l + 1 };
                    Ok(NCPoly::gen(g + target * NGENS, e))
                }
            },
        )
    }

    /// `ε`: `a, d, D^s, a^{-1} ↦ 1`, `b, c ↦ 0`.
    pub fn counit(&self, x: &NCPoly<S>) -> S {
        let mut acc = S::zero();
        for (w, c) in x.terms() {
            if counit_word(w) {
                acc = acc.add(c);
            }
        }
        acc
    }

    /// `(ε ⊗ id)` (`leg = 0`) or `(id ⊗ ε)` (`leg = 1`) on the tensor square.
    pub fn counit_on_leg(&self, x: &NCPoly<S>, leg: usize) -> Result<NCPoly<S>> {
        let mut out = NCPoly::zero();
        for (w, c) in x.terms() {
            let legs = split_word(w, NGENS, 2)?;
            if counit_word(&legs[leg]) {
                out.add_term(legs[1 - leg].clone(), c.clone());
            }
        }
        Ok(out)
    }
}

fn counit_word(w: &Word) -> bool {
    w.runs().iter().all(|&(g, _)| g != B && g != C)
}

impl<S: RenderScalar> AAlgebra<S> {
    fn generators(&self) -> [(usize, &'static str); 5] {
        [(D, "D"), (A, "a"), (B, "b"), (C, "c"), (DD, "d")]
    }

    /// The defining relations, the determinant relations, and the coproduct and counit axioms.
    pub fn relations_check(&self) -> Result<Report> {
        let mut r = Report::new("relations");
        let e = |s: &str| self.parse(s);
        for (label, lhs, rhs) in [
            ("ab = q ba", "a*b", "q*b*a"),
            ("cd = q dc", "c*d", "q*d*c"),
            ("ac = p ca", "a*c", "p*c*a"),
            ("bd = p db", "b*d", "p*d*b"),
            ("bc = (p/q) cb", "b*c", "p/q*c*b"),
            ("ad - da = (q - p^-1) bc", "a*d - d*a", "(q - p^-1)*b*c"),
            ("D a = a D", "D*a", "a*D"),
            ("D b = lambda^-2 b D", "D*b", "lambda^-2*b*D"),
            ("D c = lambda^2 c D", "D*c", "lambda^2*c*D"),
            ("D d = d D", "D*d", "d*D"),
            ("a a^-1 = a^-1 a = 1", "a*a^-1 + a^-1*a", "2"),
        ] {
            r.identity(label, &e(lhs)?, &e(rhs)?, &self.pres);
        }
        let qd = self.qdet_report()?;
        r.pass &= qd.pass;
        r.residuals.extend(qd.residuals);
        for (g, name) in self.generators() {
            let x = self.gen(g);
            let dx = self.coproduct(&x)?;
            let left = self.counit_on_leg(&dx, 0)?;
            let right = self.counit_on_leg(&dx, 1)?;
            r.identity(format!("(eps x id) Delta({name}) = {name}"), &left, &x, &self.pres);
            r.identity(format!("(id x eps) Delta({name}) = {name}"), &right, &x, &self.pres);
            let l = self.coproduct_on_leg(&dx, 0)?;
            let rr = self.coproduct_on_leg(&dx, 1)?;
            r.identity(format!("coassociativity on {name}"), &l, &rr, &self.tensor3);
        }
        for (g, gn) in self.generators() {
            for (h, hn) in self.generators() {
                let xy = self.mul(&self.gen(g), &self.gen(h))?;
                let lhs = self.coproduct(&xy)?;
                let rhs = self.tensor2.mul(&self.coproduct(&self.gen(g))?, &self.coproduct(&self.gen(h))?)?;
                r.identity(format!("Delta({gn}{hn}) = Delta({gn}) Delta({hn})"), &lhs, &rhs, &self.tensor2);
            }
        }
        Ok(r)
    }

    /// Quantum determinant: the two forms agree, it is group-like, and it
    /// commutes with the generators up to `λ` factors.
    pub fn qdet_report(&self) -> Result<Report> {
        let mut r = Report::new("qdet");
        let dq = self.qdet()?;
        let dp = self.parse("a*d - p*c*b")?;
        r.identity("ad - q bc = ad - p cb", &dq, &dp, &self.pres);
        let delta = self.coproduct(&dq)?;
        let dd = self.tensor2.normal_order(&tensor_product(&[&dq, &dq], NGENS))?;
        r.identity("Delta(qdet) = qdet (x) qdet", &delta, &dd, &self.tensor2);
        for (g, name, lhalf) in [(A, "a", 0), (B, "b", -4), (C, "c", 4), (DD, "d", 0)] {
            let x = self.gen(g);
            let lhs = self.mul(&dq, &x)?;
            let rhs = self.mul(&x, &dq)?.scale(&self.scalar(HalfLaurent::unit(0, lhalf))?);
            r.identity(format!("qdet {name} = lambda^{} {name} qdet", lhalf / 2), &lhs, &rhs, &self.pres);
        }
        r.scalar_identity("eps(qdet) = 1", &self.counit(&dq), &S::one(), Sector::TwoParam);
        Ok(r)
    }

    /// The six exponentiated Lie relations of `α = ln a, β, γ, δ = -ln w`.
    pub fn exponential_coords_check(&self) -> Result<Report> {
        let mut r = Report::new("lie-coords");
        let a = self.gen(A);
        let beta = self.beta()?;
        let gamma = self.gamma()?;
        let w = self.w()?;
        let q = self.scalar(HalfLaurent::q())?;
        let p = self.scalar(HalfLaurent::p())?;
        let pinv = p.inv().expect("p is invertible");
        let qinv = q.inv().expect("q is invertible");
        let items: [(&str, &NCPoly<S>, &NCPoly<S>, S); 6] = [
            ("a beta = q beta a", &a, &beta, q),
            ("a gamma = p gamma a", &a, &gamma, p),
            ("w beta = p^-1 beta w", &w, &beta, pinv),
            ("w gamma = q^-1 gamma w", &w, &gamma, qinv),
            ("a w = w a", &a, &w, S::one()),
            ("beta gamma = gamma beta", &beta, &gamma, S::one()),
        ];
        for (label, x, y, k) in items {
            let lhs = self.mul(x, y)?;
            let rhs = self.mul(y, x)?.scale(&k);
            r.identity(label, &lhs, &rhs, &self.pres);
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncrewrite::render::{self, Style};

    fn alg() -> AAlgebra<FracScalar> {
        AAlgebra::new(ScalarCtx::<FracScalar>::exact()).unwrap()
    }

    #[test]
    fn normal_order_examples() {
        let a = alg();
        let show = |s: &str| render::poly(&a.parse(s).unwrap(), &a.pres, Style::Text);
        assert_eq!(show("d*a"), "a*d - (q - p^-1)*b*c");
        assert_eq!(show("b*a"), "q^-1*a*b");
        assert_eq!(show("a*a^-1"), "1");
        assert_eq!(show("c*b"), "p^-1*q*b*c");
        assert_eq!(show("b*D"), "p*q^-1*D*b");
        assert_eq!(show("c*D^1/2"), "lambda^-1*D^1/2*c");
        assert_eq!(show("D*b - lambda^-2*b*D"), "0");
        assert_eq!(show("a*d - q*b*c - (a*d - p*c*b)"), "0");
    }

    #[test]
    fn coproduct_examples() {
        let a = alg();
        let da = a.coproduct(&a.gen(A)).unwrap();
        let expected = a
            .tensor2
            .normal_order(
                &(&tensor_product(&[&a.gen(A), &a.gen(A)], NGENS) + &tensor_product(&[&a.gen(B), &a.gen(C)], NGENS)),
            )
            .unwrap();
        assert_eq!(da, expected);
        assert_eq!(a.coproduct(&NCPoly::one()).unwrap(), NCPoly::one());
        assert!(a.coproduct(&a.a_inv()).is_err());
        assert!(a.counit(&a.gen(B)).is_zero());
    }

    #[test]
    fn checks_pass() {
        let a = alg();
        for rep in [a.relations_check().unwrap(), a.exponential_coords_check().unwrap()] {
            assert!(rep.pass, "{rep:#?}");
        }
    }
}
