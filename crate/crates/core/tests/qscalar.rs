use proptest::prelude::*;
use qexpmap::qscalar::{qint, FracScalar, HalfLaurent, NumericParams, RadScalar, Ring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn close(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * a.abs().max(b.abs()).max(1.0)
}

fn points(n: usize) -> Vec<NumericParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    (0..n).map(|_| NumericParams::random(&mut rng)).collect()
}

#[test]
fn qint_matches_its_closed_form() {
    for p in points(50) {
        let big_q = (p.p * p.q).sqrt();
        for n in -20i64..=20 {
            let want = (big_q.powi(n as i32) - big_q.powi(-n as i32)) / (big_q - 1.0 / big_q);
            assert!(close(qint(n).eval(&p), want, 1e-12), "n = {n} at {p:?}");
        }
    }
}

#[test]
fn qint_addition_law() {
    for m in -10i64..=10 {
        for n in -10i64..=10 {
            let rhs =
                &(&qint(m) * &HalfLaurent::unit(2 * n as i32, 0)) + &(&qint(n) * &HalfLaurent::unit(-2 * m as i32, 0));
            assert_eq!(qint(m + n), rhs, "m = {m}, n = {n}");
        }
    }
}

#[test]
fn evaluation_examples() {
    let p = NumericParams::new(9.0 / 4.0, 1.0 / 4.0).unwrap();
    assert!(close(p.big_q, 0.75, 1e-15));
    assert!(close(qint(2).eval(&p), 25.0 / 12.0, 1e-14));
    let doubled = RadScalar::sqrt_qints(&[2, 2]).unwrap();
    assert!(close(doubled.eval(&p).unwrap(), 25.0 / 12.0, 1e-14));
    assert_eq!(doubled, RadScalar::from_frac(FracScalar::from_laurent(qint(2))));
}

fn laurent() -> impl Strategy<Value = HalfLaurent> {
    prop::collection::vec(((-4i32..=4, -4i32..=4), -5i64..=5), 1..=3).prop_map(|ts| {
        HalfLaurent::from_terms(ts.into_iter().map(|(e, c)| (e, num_rational::BigRational::from_integer(c.into()))))
    })
}

fn nonzero_laurent() -> impl Strategy<Value = HalfLaurent> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

fn frac() -> impl Strategy<Value = FracScalar> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| FracScalar::new(n, d).unwrap())
}

fn radicand() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..=5, 0..=3)
}

fn rad() -> impl Strategy<Value = RadScalar> {
    prop::collection::vec((frac(), radicand()), 1..=2)
        .prop_map(|ts| ts.into_iter().fold(RadScalar::zero(), |acc, (c, r)| acc.add(&RadScalar::new(c, &r).unwrap())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn frac_equality_is_an_equivalence(x in frac(), s in nonzero_laurent(), t in nonzero_laurent()) {
        let y = FracScalar::new(x.num() * &s, x.den() * &s).unwrap();
        let z = FracScalar::new(y.num() * &t, y.den() * &t).unwrap();
        prop_assert_eq!(&x, &x);
        prop_assert_eq!(&x, &y);
        prop_assert_eq!(&y, &x);
        prop_assert_eq!(&y, &z);
        prop_assert_eq!(&x, &z);
    }

    #[test]
    fn frac_field_axioms(x in frac(), y in frac(), z in frac()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
        if let Some(inv) = x.inv() {
            prop_assert_eq!(x.mul(&inv), FracScalar::one());
        } else {
            prop_assert!(x.is_zero());
        }
    }

    #[test]
    fn rad_arithmetic_matches_evaluation(x in rad(), y in rad()) {
        for p in points(10) {
            let (Ok(ex), Ok(ey)) = (x.eval(&p), y.eval(&p)) else { continue };
            prop_assert!(close(x.mul(&y).eval(&p).unwrap(), ex * ey, 1e-10));
            prop_assert!(close(x.add(&y).eval(&p).unwrap(), ex + ey, 1e-10));
        }
    }

    #[test]
    fn rad_normalize_is_idempotent_and_sound(c in frac(), r in radicand()) {
        let x = RadScalar::new(c.clone(), &r).unwrap();
        let again = RadScalar::rad_normalize(x.terms().to_vec());
        prop_assert_eq!(&again, &x);
        for p in points(10) {
            let Ok(ec) = c.eval(&p) else { continue };
            let want = r.iter().map(|&n| qint(n).eval(&p).sqrt()).product::<f64>() * ec;
            prop_assert!(close(x.eval(&p).unwrap(), want, 1e-12));
        }
    }

    #[test]
    fn equal_radicands_multiply_to_a_rational(c in frac(), d in frac(), r in radicand()) {
        let x = RadScalar::new(c, &r).unwrap();
        let y = RadScalar::new(d, &r).unwrap();
        prop_assert!(x.mul(&y).as_frac().is_some());
    }
}
