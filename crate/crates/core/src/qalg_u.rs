//! The dual algebra: spin-`j` representation matrices of `U_{p,q}(gl(2))`,
//! the symbolic `U_q(sl(2))` engine for `p = q`, its coproduct, and the
//! homomorphisms `π^±` from the function algebra.
//!
//! The symbolic engine has generators `f = J_-`, `k^s = q^{s J_0}` (scaling,
//! `s ∈ ½ℤ`) and `e = J_+`, in that normal-form order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ncrewrite::render::RenderScalar;
use crate::ncrewrite::{
    apply_hom, parse, power_image, tensor_power, tensor_product, tensor_square, GenKind, NCPoly, Presentation,
    PresentationBuilder, Sector, Word,
};
use crate::qgroup_a::{self, AAlgebra};
use crate::qscalar::{FracScalar, HalfLaurent, RadScalar, Ring, ScalarCtx};
use crate::report::Report;

pub const F: usize = 0;
pub const K: usize = 1;
pub const E: usize = 2;
pub const NGENS: usize = 3;

/// Basis normalization of the spin-`j` representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    /// Entries `([j±m][j+1∓m])^{1/2}`.
    Symmetric,
    /// Conjugated by `S_m = ([j+m]![j-m]!)^{1/2}`: `(J_+)_{m,m-1} = [j+m]`, `(J_-)_{m,m+1} = [j-m]`.
    Rational,
}

impl std::fmt::Display for Norm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Norm::Symmetric => "symmetric",
            Norm::Rational => "rational",
        })
    }
}

impl std::str::FromStr for Norm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" => Ok(Norm::Symmetric),
            "rational" => Ok(Norm::Rational),
            _ => Err(Error::domain(format!("unknown normalization `{s}`"))),
        }
    }
}

/// Spin and `Z`-eigenvalue, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Label {
    pub j2: u32,
    pub z2: i32,
}

impl Label {
    pub fn new(j2: i64, z2: i64) -> Result<Self> {
        if j2 < 0 {
            return Err(Error::domain(format!("spin {} is negative", crate::ncrewrite::half_string(j2 as i32))));
        }
        if j2 > 40 || z2.abs() > 400 {
            return Err(Error::domain("spin or z out of the supported range"));
        }
        Ok(Self { j2: j2 as u32, z2: z2 as i32 })
    }

    pub fn dim(&self) -> usize {
        self.j2 as usize + 1
    }

    /// Doubled weight `2m` of basis index `i`.
    pub fn m2(&self, i: usize) -> i32 {
        self.j2 as i32 - 2 * i as i32
    }
}

fn half(n: i32) -> i64 {
    debug_assert!(n % 2 == 0, "expected an even doubled value");
    (n / 2) as i64
}

#[derive(Clone, Debug)]
pub struct Rep<S> {
    pub label: Label,
    pub norm: Norm,
    pub jplus: Matrix<S>,
    pub jminus: Matrix<S>,
    pub j0: Matrix<S>,
    pub z: Matrix<S>,
}

/// The `(2j+1)`-dimensional representation `Γ^{(j;z)}`.
pub fn gamma_rep<S: Ring>(label: Label, norm: Norm, ctx: &ScalarCtx<S>) -> Result<Rep<S>> {
    let n = label.dim();
    let j2 = label.j2 as i32;
    let entry = |a: i32, b: i32| -> Result<S> {
        // a = 2(j ± m), b = 2(j + 1 ∓ m)
        match norm {
            Norm::Symmetric => ctx.lift_rad(&RadScalar::sqrt_qints(&[half(a), half(b)])?),
            Norm::Rational => ctx.qint(half(a)),
        }
    };
    let mut jplus = Matrix::zero(n, n);
    let mut jminus = Matrix::zero(n, n);
    for i in 0..n {
        let m2 = label.m2(i);
        if i + 1 < n {
            jplus.set(i, i + 1, entry(j2 + m2, j2 + 2 - m2)?);
        }
        if i > 0 {
            jminus.set(i, i - 1, entry(j2 - m2, j2 + 2 + m2)?);
        }
    }
    let half_frac = |x: i32| FracScalar::rational(num_rational::BigRational::new(x.into(), 2.into()));
    let j0 = Matrix::diag((0..n).map(|i| ctx.lift(&half_frac(label.m2(i)))).collect::<Result<_>>()?);
    let z = Matrix::identity(n).scale(&ctx.lift(&half_frac(label.z2))?);
    Ok(Rep { label, norm, jplus, jminus, j0, z })
}

/// Images of the hatted generators.
#[derive(Clone, Debug)]
pub struct Hatted<S> {
    pub jplus: Matrix<S>,
    pub jminus: Matrix<S>,
    pub j0_plus_z: Matrix<S>,
    pub j0_minus_z: Matrix<S>,
}

impl<S: Ring> Rep<S> {
    pub fn dim(&self) -> usize {
        self.label.dim()
    }

    /// `Ĵ_+ = J_+ Q^{-(J_0+1/2)} λ^{Z-1/2}`, `Ĵ_- = Q^{J_0+1/2} λ^{Z-1/2} J_-`.
    pub fn hatted(&self, ctx: &ScalarCtx<S>) -> Result<Hatted<S>> {
        let n = self.dim();
        let l = self.label;
        let lam = l.z2 - 1;
        let right = Matrix::diag((0..n).map(|i| ctx.unit(-(l.m2(i) + 1), lam)).collect::<Result<_>>()?);
        let left = Matrix::diag((0..n).map(|i| ctx.unit(l.m2(i) + 1, lam)).collect::<Result<_>>()?);
        Ok(Hatted {
            jplus: self.jplus.mul(&right),
            jminus: left.mul(&self.jminus),
            j0_plus_z: self.j0.add(&self.z),
            j0_minus_z: self.j0.sub(&self.z),
        })
    }

    /// `Q^{c·J_0} λ^{d·Z}` as a diagonal matrix, exponents given doubled per unit weight.
    pub fn weight_diag(&self, ctx: &ScalarCtx<S>, f: impl Fn(i32) -> (i32, i32)) -> Result<Matrix<S>> {
        Ok(Matrix::diag(
            (0..self.dim())
                .map(|i| {
                    let (u, v) = f(self.label.m2(i));
                    ctx.unit(u, v)
                })
                .collect::<Result<_>>()?,
        ))
    }
}

impl<S: RenderScalar> Rep<S> {
    /// `[J_0, J_±] = ±J_±`, `[J_+, J_-] = [2J_0]_Q`, `Z` central.
    pub fn relations_check(&self, ctx: &ScalarCtx<S>, sector: Sector) -> Result<Report> {
        let l = self.label;
        let mut r = Report::new("rep-relations")
            .param("j", crate::ncrewrite::half_string(l.j2 as i32))
            .param("z", crate::ncrewrite::half_string(l.z2))
            .param("norm", self.norm);
        let comm = |x: &Matrix<S>, y: &Matrix<S>| x.mul(y).sub(&y.mul(x));
        let q2j0 = Matrix::diag((0..self.dim()).map(|i| ctx.qint(l.m2(i) as i64)).collect::<Result<_>>()?);
        let items = [
            ("[J0, J+] = J+", comm(&self.j0, &self.jplus), self.jplus.clone()),
            ("[J0, J-] = -J-", comm(&self.j0, &self.jminus), self.jminus.scale(&S::one().neg())),
            ("[J+, J-] = [2 J0]", comm(&self.jplus, &self.jminus), q2j0),
            ("[Z, J+] = 0", comm(&self.z, &self.jplus), Matrix::zero(self.dim(), self.dim())),
            ("[Z, J-] = 0", comm(&self.z, &self.jminus), Matrix::zero(self.dim(), self.dim())),
        ];
        for (label, lhs, rhs) in items {
            record_matrix(&mut r, label, &lhs, &rhs, sector);
        }
        Ok(r)
    }
}

/// Records entrywise equality of two scalar matrices.
pub fn record_matrix<S: RenderScalar>(
    r: &mut Report,
    label: &str,
    lhs: &Matrix<S>,
    rhs: &Matrix<S>,
    sector: Sector,
) -> bool {
    let scale = lhs.magnitude().max(rhs.magnitude()).max(1.0);
    let diff = lhs.sub(rhs);
    let zero = diff.negligible(scale);
    r.record(label, zero, || {
        diff.entries()
            .filter(|(_, _, x)| !x.negligible(scale))
            .map(|(i, j, x)| {
                format!("({i},{j}): {}", crate::ncrewrite::render::scalar(x, sector, crate::ncrewrite::Style::Text))
            })
            .collect::<Vec<_>>()
            .join("; ")
    });
    zero
}

/// Checks `S · J^{sym} · S^{-1} = J^{rat}` with `S_m = ([j+m]![j-m]!)^{1/2}`.
pub fn similarity_check<S: RenderScalar>(label: Label, ctx: &ScalarCtx<S>) -> Result<Report> {
    let sym = gamma_rep(label, Norm::Symmetric, ctx)?;
    let rat = gamma_rep(label, Norm::Rational, ctx)?;
    let n = label.dim();
    let j2 = label.j2 as i32;
    let s_entry = |i: usize, inverse: bool| -> Result<S> {
        let m2 = label.m2(i);
        let mut rad = Vec::new();
        for top in [half(j2 + m2), half(j2 - m2)] {
            rad.extend(2..=top);
        }
        let x = RadScalar::sqrt_qints(&rad)?;
        let x = if inverse { x.inv().ok_or_else(|| Error::Internal("radical inverse".into()))? } else { x };
        ctx.lift_rad(&x)
    };
    let s = Matrix::diag((0..n).map(|i| s_entry(i, false)).collect::<Result<_>>()?);
    let sinv = Matrix::diag((0..n).map(|i| s_entry(i, true)).collect::<Result<_>>()?);
    let mut r = Report::new("similarity").param("j", crate::ncrewrite::half_string(label.j2 as i32));
    record_matrix(&mut r, "S J+ S^-1 = J+ (rational)", &s.mul(&sym.jplus).mul(&sinv), &rat.jplus, Sector::TwoParam);
    record_matrix(&mut r, "S J- S^-1 = J- (rational)", &s.mul(&sym.jminus).mul(&sinv), &rat.jminus, Sector::TwoParam);
    Ok(r)
}

/// The exact `U_q(sl(2))` presentation.
pub fn u_presentation() -> Presentation<FracScalar> {
    let build = || -> Result<Presentation<FracScalar>> {
        let mut bld = PresentationBuilder::new("U", Sector::OneParam);
        let f = bld.generator("f", GenKind::Ordinary);
        let k = bld.generator("k", GenKind::Scaling);
        let e = bld.generator("e", GenKind::Ordinary);
        debug_assert_eq!((f, k, e), (F, K, E));
        // e f = f e + (k^2 - k^-2)/(q - q^-1)
        let den = &HalfLaurent::big_q() - &HalfLaurent::unit(-2, 0);
        let c = FracScalar::new(HalfLaurent::one(), den)?;
        let corr = NCPoly::from_terms([(Word::gen(k, 4), c.clone()), (Word::gen(k, -4), -&c)]);
        bld.rule(e, 1, f, 1, FracScalar::one(), corr)?;
        bld.scaling(k, e, FracScalar::unit(1, 0))?;
        bld.scaling(k, f, FracScalar::unit(-1, 0))?;
        bld.build()
    };
    build().expect("the U presentation is complete")
}

#[derive(Clone)]
pub struct UAlgebra<S> {
    pub pres: Presentation<S>,
    pub tensor2: Presentation<S>,
    pub tensor3: Presentation<S>,
    pub ctx: ScalarCtx<S>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::domain(format!("sign must be + or -, got `{s}`"))),
        }
    }
}

impl<S: Ring> UAlgebra<S> {
    /// The algebra over a context whose scalars can be specialized to `p = q`.
    pub fn new(ctx: ScalarCtx<S>) -> Result<Self> {
        let pres = u_presentation().map(|c| ctx.lift(c))?;
        Ok(Self { tensor2: tensor_square(&pres), tensor3: tensor_power(&pres, 3), pres, ctx })
    }

    pub fn with_guard(mut self, guard: usize) -> Self {
        self.pres = self.pres.with_guard(guard);
        self.tensor2 = self.tensor2.with_guard(guard);
        self.tensor3 = self.tensor3.with_guard(guard);
        self
    }

    pub fn e(&self) -> NCPoly<S> {
        NCPoly::gen(E, 1)
    }

    pub fn f(&self) -> NCPoly<S> {
        NCPoly::gen(F, 1)
    }

    /// `k^{s}` with `s` given doubled.
    pub fn k(&self, s2: i32) -> NCPoly<S> {
        NCPoly::gen(K, s2)
    }

    /// `q^{u/2}`.
    pub fn qpow(&self, u: i32) -> Result<S> {
        self.ctx.unit(u, 0)
    }

    pub fn parse(&self, text: &str) -> Result<NCPoly<S>> {
        let raw = parse(text, &self.pres)?.map(|c| self.ctx.lift(c))?;
        self.pres.normal_order(&raw)
    }

    pub fn mul(&self, x: &NCPoly<S>, y: &NCPoly<S>) -> Result<NCPoly<S>> {
        self.pres.mul(x, y)
    }

    fn generator_coproduct(&self, g: usize) -> NCPoly<S> {
        let t = |x: &NCPoly<S>, y: &NCPoly<S>| tensor_product(&[x, y], NGENS);
        let x = NCPoly::gen(g, 1);
        &t(&x, &self.k(-2)) + &t(&self.k(2), &x)
    }

    /// `Δ(e) = e⊗k^{-1} + k⊗e`, `Δ(f) = f⊗k^{-1} + k⊗f`, `Δ(k^s) = k^s⊗k^s`.
    pub fn coproduct(&self, x: &NCPoly<S>) -> Result<NCPoly<S>> {
        apply_hom(
            x,
            &self.tensor2,
            |c| Ok(c.clone()),
            |g, e| {
                if g == K {
                    return Ok(NCPoly::word(Word::from_runs([(K, e), (K + NGENS, e)])));
                }
                self.tensor2.pow(&self.generator_coproduct(g), e as u32)
            },
        )
    }

    pub fn coproduct_on_leg(&self, x: &NCPoly<S>, leg: usize) -> Result<NCPoly<S>> {
        apply_hom(
            x,
            &self.tensor3,
            |c| Ok(c.clone()),
            |h, e| {
                let (l, g) = (h / NGENS, h % NGENS);
                if l == leg {
                    let img = self.coproduct(&NCPoly::gen(g, e))?;
                    Ok(img.map_words(|w| Word::from_runs(w.runs().iter().map(|&(k, e)| (k + leg * NGENS, e)))))
                } else {
                    let target = if l < leg { l } else { l + 1 };
                    Ok(NCPoly::gen(g + target * NGENS, e))
                }
            },
        )
    }

    /// Images of `a, a^{-1}, b, c, d` under `π^±`.
    pub fn pi_images(&self, sign: Sign) -> Result<[NCPoly<S>; 5]> {
        let zero = NCPoly::zero();
        // q^{-1/2}(q - q^{-1}) and q^{1/2}(q^{-1} - q)
        let cm = self.qpow(1)?.sub(&self.qpow(-3)?);
        let cp = self.qpow(-1)?.sub(&self.qpow(3)?);
        Ok(match sign {
            Sign::Minus => [self.k(2), self.k(-2), zero, self.e().scale(&cm), self.k(-2)],
            Sign::Plus => [self.k(-2), self.k(2), self.f().scale(&cp), zero, self.k(2)],
        })
    }

    /// `π^±` applied to an element of the function algebra; `D^s ↦ 1` and
    /// coefficients are specialized to `p = q`.
    pub fn pi(&self, sign: Sign, x: &NCPoly<S>) -> Result<NCPoly<S>> {
        let [a, ainv, b, c, d] = self.pi_images(sign)?;
        apply_hom(
            x,
            &self.pres,
            |s| self.ctx.one_param(s),
            |g, e| match g {
                qgroup_a::D => Ok(NCPoly::one()),
                qgroup_a::A => power_image(&self.pres, e, &a, Some(&ainv)),
                qgroup_a::B => power_image(&self.pres, e, &b, None),
                qgroup_a::C => power_image(&self.pres, e, &c, None),
                qgroup_a::DD => power_image(&self.pres, e, &d, None),
                _ => unreachable!(),
            },
        )
    }
}

/// Evaluates a `U` element in a representation: `f ↦ J_-`, `e ↦ J_+`, `k^s ↦ diag(q^{s m})`.
pub fn u_rep_apply<S: Ring>(rep: &Rep<S>, x: &NCPoly<S>, ctx: &ScalarCtx<S>) -> Result<Matrix<S>> {
    let n = rep.dim();
    let mut out = Matrix::zero(n, n);
    for (w, c) in x.terms() {
        let mut acc = Matrix::identity(n).scale(c);
        for &(g, e) in w.runs() {
            let m = match g {
                F => rep.jminus.pow(e as u32),
                E => rep.jplus.pow(e as u32),
                K => Matrix::diag(
                    (0..n)
                        .map(|i| {
                            let u = e * rep.label.m2(i);
                            if u % 2 != 0 {
                                return Err(Error::domain("k-power is not defined in this representation"));
                            }
                            ctx.unit(u / 2, 0)
                        })
                        .collect::<Result<_>>()?,
                ),
                _ => return Err(Error::domain("element is not in the U presentation")),
            };
            acc = acc.mul(&m);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

impl<S: RenderScalar> UAlgebra<S> {
    /// Defining relations, coproduct homomorphism and coassociativity.
    pub fn relations_check(&self) -> Result<Report> {
        let mut r = Report::new("relations-U");
        let p = |s: &str| self.parse(s);
        for (label, lhs, rhs) in [
            ("e f - f e = (k^2 - k^-2)/(q - q^-1)", "e*f - f*e", "(k^2 - k^-2)/(q - q^-1)"),
            ("k e = q e k", "k*e", "q*e*k"),
            ("k f = q^-1 f k", "k*f", "q^-1*f*k"),
            ("k^1/2 k^-1/2 = 1", "k^1/2*k^-1/2", "1"),
        ] {
            r.identity(label, &p(lhs)?, &p(rhs)?, &self.pres);
        }
        let gens = [(F, 2, "f"), (K, 2, "k"), (E, 2, "e")];
        for &(g, _, name) in &gens {
            let x = NCPoly::gen(g, if g == K { 2 } else { 1 });
            let dx = self.coproduct(&x)?;
            let l = self.coproduct_on_leg(&dx, 0)?;
            let rr = self.coproduct_on_leg(&dx, 1)?;
            r.identity(format!("coassociativity on {name}"), &l, &rr, &self.tensor3);
        }
        for &(g, _, gn) in &gens {
            for &(h, _, hn) in &gens {
                let x = NCPoly::gen(g, if g == K { 2 } else { 1 });
                let y = NCPoly::gen(h, if h == K { 2 } else { 1 });
                let lhs = self.coproduct(&x.concat(&y))?;
                let rhs = self.tensor2.mul(&self.coproduct(&x)?, &self.coproduct(&y)?)?;
                r.identity(format!("Delta({gn}{hn}) = Delta({gn}) Delta({hn})"), &lhs, &rhs, &self.tensor2);
            }
        }
        let comm = self.parse("e*f - f*e")?;
        let dcomm = self.coproduct(&comm)?;
        let de = self.coproduct(&self.e())?;
        let df = self.coproduct(&self.f())?;
        let rhs = &self.tensor2.mul(&de, &df)? - &self.tensor2.mul(&df, &de)?;
        r.identity("Delta(ef - fe) = [Delta e, Delta f]", &dcomm, &rhs, &self.tensor2);
        Ok(r)
    }

    /// `π^±` respects the relations of the function algebra at `p = q`, and `π^±(𝒟) = 1`.
    pub fn pi_homomorphism_check(&self, a: &AAlgebra<S>, sign: Sign) -> Result<Report> {
        let mut r = Report::new("pi-homomorphism").param("sign", sign);
        for (label, lhs, rhs) in [
            ("ab = q ba", "a*b", "q*b*a"),
            ("cd = q dc", "c*d", "q*d*c"),
            ("ac = p ca", "a*c", "p*c*a"),
            ("bd = p db", "b*d", "p*d*b"),
            ("bc = (p/q) cb", "b*c", "p/q*c*b"),
            ("ad - da = (q - p^-1) bc", "a*d - d*a", "(q - p^-1)*b*c"),
            ("a a^-1 = 1", "a*a^-1", "1"),
            ("ad - q bc = 1", "a*d - q*b*c", "1"),
            ("ad - p cb = 1", "a*d - p*c*b", "1"),
        ] {
            let raw = |s: &str| -> Result<NCPoly<S>> { parse(s, &a.pres)?.map(|c| a.ctx.lift(c)) };
            let lhs = self.pi(sign, &raw(lhs)?)?;
            let rhs = self.pi(sign, &raw(rhs)?)?;
            r.identity(label, &lhs, &rhs, &self.pres);
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncrewrite::render::{self, Style};
    use crate::qscalar::qint;

    fn exact_u() -> UAlgebra<FracScalar> {
        UAlgebra::new(ScalarCtx::<FracScalar>::exact()).unwrap()
    }

    #[test]
    fn u_normal_order_examples() {
        let u = exact_u();
        let show = |s: &str| render::poly(&u.parse(s).unwrap(), &u.pres, Style::Text);
        assert_eq!(show("e*f"), "f*e + (k^2 - k^-2)/(q - q^-1)");
        assert_eq!(show("e*k"), "q^-1*k*e");
        assert_eq!(show("e*k^-1/2"), "q^1/2*k^-1/2*e");
    }

    #[test]
    fn rep_examples() {
        let ctx = ScalarCtx::<RadScalar>::exact();
        let half = gamma_rep(Label::new(1, 1).unwrap(), Norm::Symmetric, &ctx).unwrap();
        assert!(half.jplus.get(0, 1) == &RadScalar::one());
        let one = gamma_rep(Label::new(2, 0).unwrap(), Norm::Symmetric, &ctx).unwrap();
        assert_eq!(one.jplus.get(0, 1), &RadScalar::sqrt_qints(&[1, 2]).unwrap());
        let hat = half.hatted(&ctx).unwrap();
        assert_eq!(hat.jplus, half.jplus);
        assert_eq!(hat.jminus.get(1, 0), &RadScalar::one());
    }

    #[test]
    fn rep_relations_both_norms() {
        let ctx = ScalarCtx::<RadScalar>::exact();
        for j2 in 0..=4 {
            for norm in [Norm::Symmetric, Norm::Rational] {
                let rep = gamma_rep(Label::new(j2, 1).unwrap(), norm, &ctx).unwrap();
                let r = rep.relations_check(&ctx, Sector::TwoParam).unwrap();
                assert!(r.pass, "{r:#?}");
            }
        }
        for j2 in 0..=3 {
            assert!(similarity_check(Label::new(j2, 0).unwrap(), &ctx).unwrap().pass);
        }
    }

    #[test]
    fn u_rep_apply_examples() {
        let ctx = ScalarCtx::<FracScalar>::exact();
        let u = exact_u();
        let rep = gamma_rep(Label::new(1, 0).unwrap(), Norm::Rational, &ctx).unwrap();
        let e = u_rep_apply(&rep, &u.e(), &ctx).unwrap();
        assert_eq!(e, rep.jplus);
        let k = u_rep_apply(&rep, &u.k(2), &ctx).unwrap();
        assert_eq!(k, Matrix::diag(vec![FracScalar::unit(1, 0), FracScalar::unit(-1, 0)]));
        let rep1 = gamma_rep(Label::new(2, 0).unwrap(), Norm::Rational, &ctx).unwrap();
        let comm = u_rep_apply(&rep1, &u.parse("e*f - f*e").unwrap(), &ctx).unwrap();
        let expected = Matrix::diag(vec![
            FracScalar::from_laurent(qint(2)),
            FracScalar::zero(),
            FracScalar::from_laurent(qint(-2)),
        ]);
        assert_eq!(comm, expected);
    }

    #[test]
    fn u_checks_pass() {
        let u = exact_u();
        assert!(u.relations_check().unwrap().pass);
        let a = AAlgebra::new(ScalarCtx::<FracScalar>::exact()).unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            let r = u.pi_homomorphism_check(&a, sign).unwrap();
            assert!(r.pass, "{r:#?}");
        }
        assert!(u.pi(Sign::Plus, &a.gen(qgroup_a::C)).unwrap().is_zero());
    }
}
