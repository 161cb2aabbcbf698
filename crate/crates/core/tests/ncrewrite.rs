use proptest::prelude::*;
use proptest::strategy::ValueTree;
use qexpmap::ncrewrite::render::{self, Style};
use qexpmap::ncrewrite::{
    alphabet, confluence_check, parse, poly_from_json, poly_to_json, tensor_product, tensor_square, Letter, NCPoly,
    Presentation, Word,
};
use qexpmap::qalg_u::u_presentation;
use qexpmap::qgroup_a::{apq_presentation, NGENS};
use qexpmap::qscalar::{FracScalar, NumericParams};

fn word_poly(letters: &[Letter]) -> NCPoly<FracScalar> {
    letters.iter().fold(NCPoly::one(), |acc, &(g, e)| acc.concat(&NCPoly::gen(g, e as i32)))
}

fn letters(pres: &Presentation<FracScalar>, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    let alpha = alphabet(pres);
    prop::collection::vec(prop::sample::select(alpha), 0..=max_len)
}

/// Up to three words with small integer coefficients.
fn small_poly(pres: &Presentation<FracScalar>, max_len: usize) -> impl Strategy<Value = NCPoly<FracScalar>> {
    prop::collection::vec((letters(pres, max_len), -3i64..=3), 1..=3).prop_map(|ts| {
        let mut out = NCPoly::zero();
        for (w, c) in ts {
            out = &out + &word_poly(&w).scale(&FracScalar::integer(c));
        }
        out
    })
}

fn both() -> [Presentation<FracScalar>; 2] {
    [apq_presentation(), u_presentation()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn normal_order_is_idempotent(ws in letters(&apq_presentation(), 6), us in letters(&u_presentation(), 6)) {
        for (pres, w) in both().iter().zip([ws, us]) {
            let once = pres.normal_order(&word_poly(&w)).unwrap();
            prop_assert!(once.is_normal());
            prop_assert_eq!(pres.normal_order(&once).unwrap(), once);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_order_is_associative(
        x in letters(&apq_presentation(), 3),
        y in letters(&apq_presentation(), 3),
        z in letters(&apq_presentation(), 3),
    ) {
        let pres = apq_presentation();
        let (x, y, z) = (word_poly(&x), word_poly(&y), word_poly(&z));
        let left = pres.mul(&pres.mul(&x, &y).unwrap(), &z).unwrap();
        let right = pres.mul(&x, &pres.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn u_normal_order_is_associative(
        x in letters(&u_presentation(), 3),
        y in letters(&u_presentation(), 3),
        z in letters(&u_presentation(), 3),
    ) {
        let pres = u_presentation();
        let (x, y, z) = (word_poly(&x), word_poly(&y), word_poly(&z));
        let left = pres.mul(&pres.mul(&x, &y).unwrap(), &z).unwrap();
        let right = pres.mul(&x, &pres.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn json_round_trip(x in small_poly(&apq_presentation(), 5), y in small_poly(&u_presentation(), 5)) {
        let a = apq_presentation();
        let nx = a.normal_order(&x).unwrap();
        prop_assert_eq!(poly_from_json::<FracScalar, _>(&poly_to_json(&nx, &a).unwrap(), &a).unwrap(), nx.clone());
        let u = u_presentation();
        let ny = u.normal_order(&y).unwrap();
        prop_assert_eq!(poly_from_json::<FracScalar, _>(&poly_to_json(&ny, &u).unwrap(), &u).unwrap(), ny.clone());
        let t = tensor_square(&a);
        let nt = tensor_product(&[&nx, &nx], NGENS);
        prop_assert_eq!(poly_from_json::<FracScalar, _>(&poly_to_json(&nt, &t).unwrap(), &t).unwrap(), nt);
    }

    #[test]
    fn text_round_trip(x in small_poly(&apq_presentation(), 4), y in small_poly(&u_presentation(), 4)) {
        for (pres, p) in both().iter().zip([x, y]) {
            let n = pres.normal_order(&p).unwrap();
            let text = render::poly(&n, pres, Style::Text);
            let back = pres.normal_order(&parse(&text, pres).unwrap()).unwrap();
            prop_assert_eq!(back, n, "{}", text);
        }
    }
}

/// The exact normal form evaluated at numbers against the letter-by-letter
/// rewrite run directly in floating point.
#[test]
fn numeric_consistency() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let params = [NumericParams::new(0.7, 1.9).unwrap(), NumericParams::new(2.3, 0.45).unwrap()];
    let one = NumericParams::one_param(1.37).unwrap();
    let mut checked = 0;
    for (pres, points) in [(apq_presentation(), &params[..]), (u_presentation(), std::slice::from_ref(&one))] {
        let strat = (small_poly(&pres, 3), small_poly(&pres, 3));
        for _ in 0..25 {
            let (x, y) = strat.new_tree(&mut runner).unwrap().current();
            let exact = pres.normal_order(&x.concat(&y)).unwrap();
            for p in points {
                let fpres = pres.map(|c| c.eval(p)).unwrap();
                let fx = x.concat(&y).map(|c| c.eval(p)).unwrap();
                let oracle = fpres.letter_normal_form(&fx).unwrap();
                let got = exact.map(|c| c.eval(p)).unwrap();
                let scale = got.magnitude().max(oracle.magnitude()).max(1.0);
                assert!((&got - &oracle).negligible(scale), "{x:?} {y:?} at {p:?}");
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 50);
}

#[test]
fn rules_are_sound() {
    let a = apq_presentation();
    for rel in [
        "a*b - q*b*a",
        "c*d - q*d*c",
        "a*c - p*c*a",
        "b*d - p*d*b",
        "b*c - p*q^-1*c*b",
        "a*d - d*a - (q - p^-1)*b*c",
        "D*a - a*D",
        "D*b - lambda^-2*b*D",
        "D*c - lambda^2*c*D",
        "D*d - d*D",
        "a*a^-1 - 1",
        "a^-1*a - 1",
        "D^1/2*D^-1/2 - 1",
        "a^-1*b - q^-1*b*a^-1",
        "a^-1*c - p^-1*c*a^-1",
        "a^-1*d*a - d + (q - p^-1)*a^-1*b*c",
    ] {
        let n = a.normal_order(&parse(rel, &a).unwrap()).unwrap();
        assert!(n.is_zero(), "{rel}: {}", render::poly(&n, &a, Style::Text));
    }
    let u = u_presentation();
    for rel in [
        "e*f - f*e - (k^2 - k^-2)/(q - q^-1)",
        "k*e - q*e*k",
        "k*f - q^-1*f*k",
        "k^1/2*e - q^1/2*e*k^1/2",
        "k^1/2*k^-1/2 - 1",
    ] {
        let n = u.normal_order(&parse(rel, &u).unwrap()).unwrap();
        assert!(n.is_zero(), "{rel}: {}", render::poly(&n, &u, Style::Text));
    }
}

#[test]
fn confluent_on_short_words() {
    for (pres, len) in [(apq_presentation(), 3), (u_presentation(), 3), (apq_presentation(), 4)] {
        let r = confluence_check(&pres, len).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(r.words_checked > 0);
    }
}

#[test]
fn tensor_legs_commute() {
    let a = apq_presentation();
    let t = tensor_square(&a);
    let x = a.normal_order(&parse("d*a + b", &a).unwrap()).unwrap();
    let y = a.normal_order(&parse("c^2*D^-1/2", &a).unwrap()).unwrap();
    let one = NCPoly::one();
    let x1 = tensor_product(&[&x, &one], NGENS);
    let y2 = tensor_product(&[&one, &y], NGENS);
    let xy = tensor_product(&[&x, &y], NGENS);
    assert_eq!(t.mul(&x1, &y2).unwrap(), xy);
    assert_eq!(t.mul(&y2, &x1).unwrap(), xy);
    let xx = tensor_product(&[&x, &x], NGENS);
    let sq = a.mul(&x, &x).unwrap();
    assert_eq!(t.mul(&xx, &xx).unwrap(), tensor_product(&[&sq, &sq], NGENS));
    assert_eq!(Word::from_runs([(1, 2), (1, -2)]), Word::empty());
}
