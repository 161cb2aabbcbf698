use qexpmap::expmap::*;
use qexpmap::ncrewrite::render::{self, Style};
use qexpmap::ncrewrite::NCPoly;
use qexpmap::qalg_u::{Label, Norm, Sign, UAlgebra};
use qexpmap::qgroup_a::AAlgebra;
use qexpmap::qscalar::{FracScalar, RadScalar, ScalarCtx};

fn exact_a() -> AAlgebra<FracScalar> {
    AAlgebra::new(ScalarCtx::<FracScalar>::exact()).unwrap()
}

fn rad_a() -> AAlgebra<RadScalar> {
    AAlgebra::new(ScalarCtx::<RadScalar>::exact()).unwrap()
}

fn label(j2: i64, z2: i64) -> Label {
    Label::new(j2, z2).unwrap()
}

fn show<S: qexpmap::ncrewrite::render::RenderScalar>(x: &NCPoly<S>, a: &AAlgebra<S>) -> String {
    render::poly(x, &a.pres, Style::Text)
}

#[test]
fn defining_t_matrix() {
    let a = exact_a();
    for norm in [Norm::Symmetric, Norm::Rational] {
        let closed = t_matrix_closed(label(1, 1), norm, &a.ctx).unwrap();
        let fact = t_matrix_factorized(&a, label(1, 1), norm).unwrap();
        for (t, name) in [(&closed, "closed"), (&fact, "factorized")] {
            let got: Vec<String> = t.entries.entries().map(|(_, _, e)| show(e, &a)).collect();
            assert_eq!(got, ["a", "b", "c", "d"], "{name}");
        }
    }
}

#[test]
fn spin_one_matches_printed_matrix() {
    let a = rad_a();
    let t = t_matrix_closed(label(2, 1), Norm::Symmetric, &a.ctx).unwrap();
    let r2 = RadScalar::sqrt_qints(&[2]).unwrap();
    let printed: [[(&str, bool); 3]; 3] = [
        [("a^2", false), ("Q^-1/2*a*b", true), ("lambda^-1*b^2", false)],
        [("Q^-1/2*a*c", true), ("a*d + Q^-1*lambda^-1*b*c", false), ("Q^-1/2*lambda^-1*b*d", true)],
        [("lambda*c^2", false), ("Q^-1/2*lambda*c*d", true), ("d^2", false)],
    ];
    for (i, row) in printed.iter().enumerate() {
        for (k, (text, root)) in row.iter().enumerate() {
            let mut want = a.parse(&format!("D^-1/2*({text})")).unwrap();
            if *root {
                want = want.scale(&r2);
            }
            assert_eq!(t.entries.get(i, k), &want, "entry ({i},{k})");
        }
    }
}

#[test]
fn top_left_entry_is_a_power() {
    let a = exact_a();
    for (j2, z2) in [(2, 0), (3, 1), (4, 2), (3, 5)] {
        let t = t_matrix_closed(label(j2, z2), Norm::Rational, &a.ctx).unwrap();
        let want =
            a.mul(&a.dpow((z2 - j2) as i32), &a.pres.pow(&a.gen(qexpmap::qgroup_a::A), j2 as u32).unwrap()).unwrap();
        assert_eq!(t.entries.get(0, 0), &want);
    }
}

#[test]
fn closed_equals_factorized() {
    let a = exact_a();
    for j2 in 1..=3i64 {
        for dz in [0, 1, 2] {
            let r = closed_vs_factorized_check(&a, label(j2, j2 - dz), Norm::Rational).unwrap();
            assert!(r.pass, "{r:#?}");
        }
    }
}

#[test]
fn comodule_and_structure() {
    let a = exact_a();
    for (j2, z2) in [(1, 1), (2, 1), (3, 3)] {
        let t = t_matrix_closed(label(j2, z2), Norm::Rational, &a.ctx).unwrap();
        let r = comodule_check(&a, &t).unwrap();
        assert!(r.pass, "{r:#?}");
        assert_eq!(r.residuals.len(), ((j2 + 1) * (j2 + 1)) as usize);
        assert!(t_structure_check(&a, &t).unwrap().pass);
    }
}

#[test]
fn r_matrix_matches_defining_r() {
    let r = r_defining_check(&ScalarCtx::<FracScalar>::exact()).unwrap();
    assert!(r.pass, "{r:#?}");
}

fn u_rad() -> (UAlgebra<RadScalar>, AAlgebra<RadScalar>) {
    let ctx = ScalarCtx::<RadScalar>::exact();
    (UAlgebra::new(ctx.clone()).unwrap(), AAlgebra::new(ctx).unwrap())
}

#[test]
fn l_matrices_match_printed() {
    let (u, a) = u_rad();
    let none: &[i64] = &[];
    let two: &[i64] = &[2];
    let plus = l_matrix(&u, &a, Sign::Plus, 1, Norm::Symmetric).unwrap();
    let r = compare_l(&u, &plus, &[&[("k^-1", none), ("0", none)], &[("q^1/2*(q^-1 - q)*e", none), ("k", none)]], "l")
        .unwrap();
    assert!(r.pass, "{r:#?}");
    let minus = l_matrix(&u, &a, Sign::Minus, 1, Norm::Symmetric).unwrap();
    let r =
        compare_l(&u, &minus, &[&[("k", none), ("q^-1/2*(q - q^-1)*f", none)], &[("0", none), ("k^-1", none)]], "l")
            .unwrap();
    assert!(r.pass, "{r:#?}");
    let plus1 = l_matrix(&u, &a, Sign::Plus, 2, Norm::Symmetric).unwrap();
    let r = compare_l(
        &u,
        &plus1,
        &[
            &[("k^-2", none), ("0", none), ("0", none)],
            &[("(1 - q^2)*k^-1*e", two), ("1", none), ("0", none)],
            &[("q^-1*(1 - q^2)^2*e^2", none), ("q^-1*(1 - q^2)*k*e", two), ("k^2", none)],
        ],
        "l",
    )
    .unwrap();
    assert!(r.pass, "{r:#?}");
    let minus1 = l_matrix(&u, &a, Sign::Minus, 2, Norm::Symmetric).unwrap();
    let r = compare_l(
        &u,
        &minus1,
        &[
            &[("k^2", none), ("q*(1 - q^-2)*k*f", two), ("q*(1 - q^-2)^2*f^2", none)],
            &[("0", none), ("1", none), ("(1 - q^-2)*k^-1*f", two)],
            &[("0", none), ("0", none), ("k^-2", none)],
        ],
        "l",
    )
    .unwrap();
    assert!(r.pass, "{r:#?}");
}

#[test]
fn u_side_identities() {
    let ctx = ScalarCtx::<FracScalar>::exact();
    let u = UAlgebra::new(ctx.clone()).unwrap();
    let a = AAlgebra::new(ctx).unwrap();
    for j2 in [1, 2] {
        for (s2, s1) in [(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus), (Sign::Plus, Sign::Minus)] {
            let r = rll_check(&u, &a, s2, s1, j2, Norm::Rational).unwrap();
            assert!(r.pass, "{r:#?}");
        }
        for sign in [Sign::Plus, Sign::Minus] {
            let l = l_matrix(&u, &a, sign, j2, Norm::Rational).unwrap();
            assert!(l.structure_check().pass);
            let r = delta_l_check(&u, &l).unwrap();
            assert!(r.pass, "{r:#?}");
        }
        let r = pi_t_vs_r_check(&u, &a, j2, Norm::Rational).unwrap();
        println!("{r:#?}");
        assert!(r.pass, "{r:#?}");
    }
    for (j1, j2) in [(1, 1), (1, 2)] {
        for sign in [Sign::Plus, Sign::Minus] {
            let r = tprime_r_check(&u, &a, sign, j1, j2, Norm::Rational).unwrap();
            println!("{r:#?}");
            assert!(r.pass, "{r:#?}");
        }
    }
}
