//! Verification suites: named groups of checks, run exactly or at numeric
//! parameter points, merged into one deterministically ordered list.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expmap::{
    closed_vs_factorized_check, comodule_check, compare_l, delta_l_check, l_matrix, pi_t_vs_r_check,
    quasitriangularity_check, r_defining_check, rll_check, t_matrix_closed, t_structure_check, tprime_r_check,
};
use crate::ncrewrite::render::RenderScalar;
use crate::ncrewrite::{confluence_check, DEFAULT_GUARD};
use crate::qalg_u::{gamma_rep, similarity_check, u_presentation, Label, Norm, Sign, UAlgebra};
use crate::qgroup_a::{apq_presentation, AAlgebra};
use crate::qscalar::{FracScalar, NumericParams, RadScalar, ScalarCtx};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Relations,
    Qdet,
    LieCoords,
    Confluence,
    ClosedVsFactorized,
    Comodule,
    RepRelations,
    PiHomomorphism,
    Rll,
    DeltaL,
    PiTVsR,
    TprimeR,
    Quasitriangular,
    Printed,
    Specialize,
    All,
}

impl Suite {
    pub const NAMES: [(&'static str, Suite); 16] = [
        ("relations", Suite::Relations),
        ("qdet", Suite::Qdet),
        ("lie-coords", Suite::LieCoords),
        ("confluence", Suite::Confluence),
        ("closed-vs-factorized", Suite::ClosedVsFactorized),
        ("comodule", Suite::Comodule),
        ("rep-relations", Suite::RepRelations),
        ("pi-homomorphism", Suite::PiHomomorphism),
        ("rll", Suite::Rll),
        ("delta-l", Suite::DeltaL),
        ("pi-t-vs-r", Suite::PiTVsR),
        ("tprime-r", Suite::TprimeR),
        ("quasitriangular", Suite::Quasitriangular),
        ("printed", Suite::Printed),
        ("specialize", Suite::Specialize),
        ("all", Suite::All),
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES.iter().find(|(_, s)| *s == self).map(|(n, _)| *n).unwrap()
    }

    /// Suites whose checks are exact identities, re-run numerically by `specialize`.
    pub fn identity_suites() -> Vec<Suite> {
        Self::NAMES
            .iter()
            .map(|&(_, s)| s)
            .filter(|s| !matches!(s, Suite::Confluence | Suite::Specialize | Suite::All))
            .collect()
    }

    fn needs_p_eq_q(self) -> bool {
        matches!(self, Suite::PiHomomorphism | Suite::Rll | Suite::DeltaL | Suite::PiTVsR | Suite::TprimeR)
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::NAMES
            .iter()
            .find(|(n, _)| *n == s)
            .map(|&(_, v)| v)
            .ok_or_else(|| Error::domain(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest spin, doubled.
    pub max_j2: u32,
    /// Restrict spin-dependent suites to one `(j; z)`.
    pub label: Option<Label>,
    /// Word length for confluence; `None` uses 4 for the function algebra and 3 for `U`.
    pub max_len: Option<usize>,
    /// Normalization for checks that depend on it; `None` means rational.
    pub norm: Option<Norm>,
    pub guard: usize,
    pub seed: u64,
    pub points: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_j2: 3, label: None, max_len: None, norm: None, guard: DEFAULT_GUARD, seed: 0x5eed, points: 5 }
    }
}

impl VerifyOptions {
    /// `(j; z)` with `j ≤ max_j`, `z ∈ {j, j - 1/2, j - 1}`.
    fn t_labels(&self) -> Vec<Label> {
        if let Some(l) = self.label {
            return vec![l];
        }
        (1..=self.max_j2).flat_map(|j2| (0..3).map(move |d| Label { j2, z2: j2 as i32 - d })).collect()
    }

    /// Spins used by the `U`-side matrix checks (`1/2` and `1`).
    fn l_spins(&self) -> Vec<u32> {
        match self.label {
            Some(l) => vec![l.j2],
            None => (1..=self.max_j2.min(2)).collect(),
        }
    }

    fn norm(&self) -> Norm {
        self.norm.unwrap_or(Norm::Rational)
    }
}

/// The objects a suite needs, over one scalar ring.
struct Kernel<S> {
    a: AAlgebra<S>,
    u: Option<UAlgebra<S>>,
}

impl<S: RenderScalar> Kernel<S> {
    fn new(ctx: ScalarCtx<S>, guard: usize) -> Result<Self> {
        let u =
            if ctx.one_param(&S::one()).is_ok() { Some(UAlgebra::new(ctx.clone())?.with_guard(guard)) } else { None };
        Ok(Self { a: AAlgebra::new(ctx)?.with_guard(guard), u })
    }

    fn u(&self) -> Result<&UAlgebra<S>> {
        self.u.as_ref().ok_or_else(|| Error::domain("this check needs p = q"))
    }
}

const SIGN_PAIRS: [(Sign, Sign); 3] = [(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus), (Sign::Plus, Sign::Minus)];

/// Runs one identity suite over the ring of `ctx`, for each normalization in `norms`.
fn run_in<S: RenderScalar>(suite: Suite, opts: &VerifyOptions, k: &Kernel<S>, norms: &[Norm]) -> Result<Vec<Report>> {
    let a = &k.a;
    let ctx = &a.ctx;
    let mut out = Vec::new();
    match suite {
        Suite::Relations => {
            out.push(a.relations_check()?);
            if let Some(u) = &k.u {
                out.push(u.relations_check()?);
            }
        }
        Suite::Qdet => out.push(a.qdet_report()?),
        Suite::LieCoords => out.push(a.exponential_coords_check()?),
        Suite::ClosedVsFactorized => {
            for &norm in norms {
                for l in opts.t_labels() {
                    out.push(closed_vs_factorized_check(a, l, norm)?);
                }
            }
        }
        Suite::Comodule => {
            for &norm in norms {
                for l in opts.t_labels() {
                    let t = t_matrix_closed(l, norm, ctx)?;
                    out.push(comodule_check(a, &t)?);
                    out.push(t_structure_check(a, &t)?);
                }
            }
        }
        Suite::RepRelations => {
            for &norm in norms {
                let labels: Vec<Label> = match opts.label {
                    Some(l) => vec![l],
                    None => (0..=4).map(|j2| Label { j2, z2: j2 as i32 }).collect(),
                };
                for l in &labels {
                    let rep = gamma_rep(*l, norm, ctx)?;
                    out.push(rep.relations_check(ctx, a.pres.sector())?);
                }
            }
            let max = opts.label.map_or(3, |l| l.j2);
            for j2 in 0..=max {
                out.push(similarity_check(Label { j2, z2: 0 }, ctx)?);
            }
        }
        Suite::PiHomomorphism => {
            let u = k.u()?;
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(u.pi_homomorphism_check(a, sign)?);
            }
        }
        Suite::Rll => {
            let u = k.u()?;
            for &norm in norms {
                for j2 in opts.l_spins() {
                    for (s2, s1) in SIGN_PAIRS {
                        out.push(rll_check(u, a, s2, s1, j2, norm)?);
                    }
                }
            }
        }
        Suite::DeltaL => {
            let u = k.u()?;
            for &norm in norms {
                for j2 in opts.l_spins() {
                    for sign in [Sign::Plus, Sign::Minus] {
                        let l = l_matrix(u, a, sign, j2, norm)?;
                        out.push(delta_l_check(u, &l)?);
                        out.push(l.structure_check());
                    }
                }
            }
        }
        Suite::PiTVsR => {
            let u = k.u()?;
            for &norm in norms {
                for j2 in opts.l_spins() {
                    out.push(pi_t_vs_r_check(u, a, j2, norm)?);
                }
            }
        }
        Suite::TprimeR => {
            let u = k.u()?;
            for &norm in norms {
                for j2 in opts.l_spins() {
                    for sign in [Sign::Plus, Sign::Minus] {
                        out.push(tprime_r_check(u, a, sign, 1, j2, norm)?);
                    }
                }
            }
        }
        Suite::Quasitriangular => {
            out.push(r_defining_check(ctx)?);
            let half = Label { j2: 1, z2: 1 };
            let pairs = match opts.label {
                Some(l) => vec![(half, l)],
                None => vec![(half, half), (half, Label { j2: 2, z2: 0 }), (half, Label { j2: 2, z2: 1 })],
            };
            for &norm in norms {
                for &(l1, l2) in &pairs {
                    out.push(quasitriangularity_check(l1, l2, norm, ctx)?);
                }
            }
        }
        Suite::Printed => out.extend(printed_checks(k)?),
        Suite::Confluence | Suite::Specialize | Suite::All => {
            return Err(Error::Internal(format!("suite {} is not an identity suite", suite.name())));
        }
    }
    Ok(out)
}

type Printed = &'static [&'static [(&'static str, &'static [i64])]];

const L_PLUS_HALF: Printed = &[&[("k^-1", &[]), ("0", &[])], &[("q^1/2*(q^-1 - q)*e", &[]), ("k", &[])]];
const L_MINUS_HALF: Printed = &[&[("k", &[]), ("q^-1/2*(q - q^-1)*f", &[])], &[("0", &[]), ("k^-1", &[])]];
const L_PLUS_ONE: Printed = &[
    &[("k^-2", &[]), ("0", &[]), ("0", &[])],
    &[("(1 - q^2)*k^-1*e", &[2]), ("1", &[]), ("0", &[])],
    &[("q^-1*(1 - q^2)^2*e^2", &[]), ("q^-1*(1 - q^2)*k*e", &[2]), ("k^2", &[])],
];
const L_MINUS_ONE: Printed = &[
    &[("k^2", &[]), ("q*(1 - q^-2)*k*f", &[2]), ("q*(1 - q^-2)^2*f^2", &[])],
    &[("0", &[]), ("1", &[]), ("(1 - q^-2)*k^-1*f", &[2])],
    &[("0", &[]), ("0", &[]), ("k^-2", &[])],
];

/// The explicit spin-1/2 and spin-1 matrices, compared entrywise in symmetric normalization.
fn printed_checks<S: RenderScalar>(k: &Kernel<S>) -> Result<Vec<Report>> {
    let a = &k.a;
    let ctx = &a.ctx;
    let mut out = Vec::new();
    let defining = t_matrix_closed(Label { j2: 1, z2: 1 }, Norm::Symmetric, ctx)?;
    let want = crate::matrix::Matrix::try_from_fn(2, 2, |i, j| a.parse(["a", "b", "c", "d"][2 * i + j]))?;
    out.push(defining.compare(&want, "printed-t", a));
    let t1 = t_matrix_closed(Label { j2: 2, z2: 1 }, Norm::Symmetric, ctx)?;
    let r2 = ctx.lift_rad(&RadScalar::sqrt_qints(&[2])?)?;
    let printed: [[(&str, bool); 3]; 3] = [
        [("a^2", false), ("Q^-1/2*a*b", true), ("lambda^-1*b^2", false)],
        [("Q^-1/2*a*c", true), ("a*d + Q^-1*lambda^-1*b*c", false), ("Q^-1/2*lambda^-1*b*d", true)],
        [("lambda*c^2", false), ("Q^-1/2*lambda*c*d", true), ("d^2", false)],
    ];
    let want = crate::matrix::Matrix::try_from_fn(3, 3, |i, j| {
        let (text, root) = printed[i][j];
        let x = a.parse(&format!("D^-1/2*({text})"))?;
        Ok::<_, Error>(if root { x.scale(&r2) } else { x })
    })?;
    out.push(t1.compare(&want, "printed-t", a));
    if let Some(u) = &k.u {
        let specs = [
            (Sign::Plus, 1, L_PLUS_HALF),
            (Sign::Minus, 1, L_MINUS_HALF),
            (Sign::Plus, 2, L_PLUS_ONE),
            (Sign::Minus, 2, L_MINUS_ONE),
        ];
        for (sign, j2, rows) in specs {
            let l = l_matrix(u, a, sign, j2, Norm::Symmetric)?;
            out.push(compare_l(u, &l, rows, "printed-l")?);
        }
    }
    Ok(out)
}

fn exact_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Report>> {
    match suite {
        Suite::Confluence => {
            let (la, lu) = opts.max_len.map_or((4, 3), |n| (n, n));
            let a = apq_presentation().with_guard(opts.guard);
            let u = u_presentation().with_guard(opts.guard);
            let mut ra = report_from_confluence(confluence_check(&a, la)?);
            ra.check = "confluence".into();
            let mut ru = report_from_confluence(confluence_check(&u, lu)?);
            ru.check = "confluence".into();
            Ok(vec![ra, ru])
        }
        Suite::Specialize => specialize(opts),
        Suite::All => Err(Error::Internal("`all` is expanded by the caller".into())),
        Suite::RepRelations => {
            // Symmetric entries are radicals.
            let k = Kernel::new(ScalarCtx::<RadScalar>::exact(), opts.guard)?;
            let norms = match opts.norm {
                Some(n) => vec![n],
                None => vec![Norm::Symmetric, Norm::Rational],
            };
            run_in(suite, opts, &k, &norms)
        }
        Suite::Printed => {
            let k = Kernel::new(ScalarCtx::<RadScalar>::exact(), opts.guard)?;
            run_in(suite, opts, &k, &[Norm::Symmetric])
        }
        _ if opts.norm == Some(Norm::Symmetric) => {
            let k = Kernel::new(ScalarCtx::<RadScalar>::exact(), opts.guard)?;
            run_in(suite, opts, &k, &[Norm::Symmetric])
        }
        _ => {
            let k = Kernel::new(ScalarCtx::<FracScalar>::exact(), opts.guard)?;
            run_in(suite, opts, &k, &[opts.norm()])
        }
    }
}

fn report_from_confluence(c: crate::ncrewrite::ConfluenceReport) -> Report {
    let mut r = Report::new("confluence").param("algebra", &c.presentation).param("max-len", c.max_len);
    r.note(format!("{} words checked, {} reachable words", c.words_checked, c.reachable_words));
    let n = c.counterexamples.len();
    r.record("no diamond counterexample", n == 0, || format!("{n} counterexamples, first: {}", c.counterexamples[0]));
    r
}

/// Random generic parameter points: `count` two-parameter points, then `count` with `p = q`.
pub fn sample_points(seed: u64, count: usize) -> Vec<NumericParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<NumericParams> = (0..count).map(|_| NumericParams::random(&mut rng)).collect();
    out.extend((0..count).map(|_| NumericParams::random_one_param(&mut rng)));
    out
}

/// Re-runs every identity suite in floating point at random parameter points.
fn specialize(opts: &VerifyOptions) -> Result<Vec<Report>> {
    let points = sample_points(opts.seed, opts.points);
    let reports: Vec<Result<Report>> = points
        .par_iter()
        .enumerate()
        .map(|(idx, params)| {
            let k = Kernel::new(ScalarCtx::<f64>::numeric(*params), opts.guard)?;
            let mut r = Report::new("specialize")
                .param("point", format!("{idx:02}"))
                .param("p", format!("{:.6}", params.p))
                .param("q", format!("{:.6}", params.q));
            let norms = [Norm::Rational, Norm::Symmetric];
            for suite in Suite::identity_suites() {
                if suite.needs_p_eq_q() && k.u.is_none() {
                    continue;
                }
                for sub in run_in(suite, opts, &k, &norms)? {
                    let label = format!("{} {}", sub.check, params_string(&sub));
                    let first = sub.residuals.iter().find(|x| !x.zero).map(|x| format!("{}: {}", x.label, x.residual));
                    r.record(label, sub.pass, || first.unwrap_or_default());
                }
            }
            Ok(r)
        })
        .collect();
    reports.into_iter().collect()
}

fn params_string(r: &Report) -> String {
    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

/// Runs a suite (or all of them) and returns the reports sorted by check name and parameters.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Report>> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::NAMES.iter().map(|&(_, s)| s).filter(|&s| s != Suite::All).collect(),
        s => vec![s],
    };
    let results: Vec<Result<Vec<Report>>> = suites.par_iter().map(|&s| exact_suite(s, opts)).collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    out.sort_by_key(Report::sort_key);
    Ok(out)
}

/// Human-readable one-line summary of a report.
pub fn summary_line(r: &Report) -> String {
    let params = params_string(r);
    let status = if r.pass { "pass" } else { "FAIL" };
    format!(
        "{status} {}{}{} ({}/{} identities)",
        r.check,
        if params.is_empty() { "" } else { " " },
        params,
        r.residuals.len() - r.failures(),
        r.residuals.len()
    )
}
