use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rootnum::catalog::{catalog_family, parse_family_file};
use rootnum::intarith::{factorize, is_prime, jacobi, liouville};
use rootnum::localdata::fiber_root_number;
use rootnum::polyring::{factor_irreducible, resultant};
use rootnum::sieves::{density_constant, sieve_stream, ArithProgression, SievePrescription};
use rootnum::signformula::{h_factor, root_number_formula};
use rootnum::{Error, IntPoly};

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 1..5)
        .prop_map(|cs| IntPoly::from_ints(&cs))
        .prop_filter("nonconstant", |p| !p.is_constant())
}

fn family() -> impl Strategy<Value = (&'static str, BTreeMap<String, i64>)> {
    let nz = || (-4i64..=4).prop_filter("nonzero", |x| *x != 0);
    prop_oneof![
        nz().prop_map(|s| ("F", vec![("s", s)])),
        nz().prop_map(|w| ("G", vec![("w", w)])),
        nz().prop_map(|w| ("H", vec![("w", w)])),
        nz().prop_map(|w| ("I", vec![("w", w)])),
        (nz(), nz()).prop_map(|(m, w)| ("J", vec![("m", m), ("w", w)])),
        (nz(), nz(), -3i64..=3).prop_map(|(w, s, v)| ("L", vec![("w", w), ("s", s), ("v", v)])),
        Just(("washington", vec![])),
        Just(("legendre", vec![])),
    ]
    .prop_map(|(n, kv)| (n, kv.into_iter().map(|(k, v)| (k.to_string(), v)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorization_multiplies_back(n in 1i64..10_000_000_000) {
        let n = BigInt::from(n);
        let f = factorize(&n).unwrap();
        prop_assert_eq!(f.value(), n);
        prop_assert!(f.factors.iter().all(|(p, _)| is_prime(p)));
    }

    #[test]
    fn liouville_multiplicative(a in 1i64..1_000_000, b in 1i64..1_000_000) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(liouville(&(&a * &b)).unwrap(), liouville(&a).unwrap() * liouville(&b).unwrap());
    }

    #[test]
    fn jacobi_multiplicative_in_top(a in -10_000i64..10_000, b in -10_000i64..10_000, n in 0i64..5000) {
        let n = BigInt::from(2 * n + 1);
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(jacobi(&(&a * &b), &n).unwrap(), jacobi(&a, &n).unwrap() * jacobi(&b, &n).unwrap());
    }

    #[test]
    fn jacobi_at_prime_is_euler_criterion(a in 1u64..10_000, i in 0usize..8) {
        let p = [3u64, 5, 7, 11, 13, 101, 997, 7919][i];
        let e = BigInt::from(a).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
        let want = if e.is_zero() { 0 } else if e.is_one() { 1 } else { -1 };
        prop_assert_eq!(jacobi(&BigInt::from(a), &BigInt::from(p)).unwrap(), want);
    }

    #[test]
    fn divrem_identity(f in small_poly(), g in small_poly()) {
        let (q, r) = f.divrem(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.is_zero() || r.deg() < g.deg());
    }

    #[test]
    fn resultant_antisymmetry(f in small_poly(), g in small_poly()) {
        let a = resultant(&f, &g).unwrap();
        let b = resultant(&g, &f).unwrap();
        let sign = if (f.deg() * g.deg()) % 2 == 0 { a.clone() } else { -a.clone() };
        prop_assert_eq!(sign, b);
        prop_assert_eq!(a.is_zero(), !f.gcd(&g).is_constant());
    }

    #[test]
    fn factors_multiply_to_primitive_part(f in small_poly()) {
        let parts = factor_irreducible(&f).unwrap();
        let mut prod = IntPoly::one();
        for (p, e) in &parts {
            prod = &prod * &p.pow(*e);
        }
        let (pf, pp) = (f.primitive(), prod.primitive());
        prop_assert!(pf == pp || pf == -&pp, "{} vs {}", f, prod);
    }

    #[test]
    fn catalog_roundtrip((name, params) in family()) {
        let spec = catalog_family(name, &params).unwrap();
        let text = spec.serialize();
        prop_assert_eq!(parse_family_file(&text).unwrap().serialize(), text);
    }

    #[test]
    fn density_constant_decreases_with_cutoff(f in small_poly(), a in 0i64..6, n in 1i64..7) {
        let prog = ArithProgression::new(a, n).unwrap();
        let lo = density_constant(&f, &prog, 50).unwrap();
        let hi = density_constant(&f, &prog, 200).unwrap();
        prop_assert!(hi <= lo);
        prop_assert!(!hi.is_negative());
    }

    #[test]
    fn stream_elements_pass_check(g in small_poly(), a in 0i64..12, n in 1i64..13) {
        let prog = ArithProgression::new(a, n).unwrap();
        let presc = SievePrescription::squarefree(g.clone(), prog.clone());
        let Ok(stream) = sieve_stream(&presc, 5000) else { return Ok(()) };
        for t in stream.take(10) {
            prop_assert!(prog.contains(&t));
            prop_assert!(presc.check(&t).unwrap());
            let v = g.eval_int(&t);
            prop_assert!(!v.is_zero() && factorize(&v).unwrap().is_squarefree());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn formula_matches_direct((name, params) in family(), t in -100_000i64..100_000) {
        let s = catalog_family(name, &params).unwrap().surface().unwrap();
        let t = BigInt::from(t);
        match root_number_formula(&s, &t) {
            Ok(r) => {
                prop_assert!(r.agree, "{} {} at {}", name, r.w_formula, t);
                prop_assert_eq!(r.w_direct, fiber_root_number(&s, &t).unwrap());
            }
            Err(Error::SingularFiber(_) | Error::ZeroAtMultiplicativePlace(_)) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn insipid_places_have_trivial_h((name, params) in family(), t in -100_000i64..100_000) {
        let s = catalog_family(name, &params).unwrap().surface().unwrap();
        let t = BigInt::from(t);
        for p in s.finite_places().filter(|p| p.insipid) {
            if p.poly().unwrap().eval_int(&t).is_zero() {
                continue;
            }
            prop_assert_eq!(h_factor(&s, p, &t).unwrap(), 1);
        }
    }
}

#[test]
fn washington_has_an_insipid_place() {
    let s = catalog_family("washington", &BTreeMap::new())
        .unwrap()
        .surface()
        .unwrap();
    assert!(s.finite_places().any(|p| p.insipid));
}
