//! Property tests for the exact algebra kernels.

use knotfermion::algebra::{lagrange_revert, qf, zeta_series, Field, LaurentPoly, RationalFunction, Ring, Series, Var, Q};
use proptest::prelude::*;

fn small_q() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| qf(n, d))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, small_q()), 0..5).prop_map(|ts| LaurentPoly::from_terms(Var::AHat, ts))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

/// Power series with constant term `c0` and random higher terms, known to x^cap.
fn unit_series(cap: i64) -> impl Strategy<Value = Series<Q>> {
    (small_q().prop_filter("unit", |c| *c != qf(0, 1)), prop::collection::vec(small_q(), (cap - 1) as usize))
        .prop_map(move |(c0, rest)| {
            Series::from_terms(0, cap, std::iter::once((0, c0)).chain(rest.into_iter().enumerate().map(|(i, c)| (i as i64 + 1, c))))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.radd(&b), b.radd(&a));
        prop_assert_eq!(a.rmul(&b), b.rmul(&a));
        prop_assert_eq!(a.rmul(&b).rmul(&c), a.rmul(&b.rmul(&c)));
        prop_assert_eq!(a.rmul(&b.radd(&c)), a.rmul(&b).radd(&a.rmul(&c)));
        prop_assert!(a.rsub(&a).is_zero());
        prop_assert_eq!(a.rmul(&LaurentPoly::one()), a.clone());
    }

    #[test]
    fn laurent_exact_division(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!(a.rmul(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn ratfun_field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(a.radd(&b).radd(&c), a.radd(&b.radd(&c)));
        prop_assert_eq!(a.rmul(&b.radd(&c)), a.rmul(&b).radd(&a.rmul(&c)));
        if !a.is_zero() {
            prop_assert!(a.rmul(&a.inv().unwrap()).is_one());
            prop_assert_eq!(b.rdiv(&a).unwrap().rmul(&a), b);
        }
    }

    #[test]
    fn ratfun_eval_is_homomorphism(a in ratfun(), b in ratfun(), x in small_q().prop_filter("nonzero", |x| *x != qf(0, 1))) {
        if let (Some(va), Some(vb)) = (a.eval(&x), b.eval(&x)) {
            if let Some(v) = a.rmul(&b).eval(&x) {
                prop_assert_eq!(v, va.clone() * vb.clone());
            }
            if let Some(v) = a.radd(&b).eval(&x) {
                prop_assert_eq!(v, va + vb);
            }
        }
    }

    #[test]
    fn series_inverse_round_trip(s in unit_series(8)) {
        let prod = s.mul(&s.inverse().unwrap());
        prop_assert_eq!(prod, Series::one().truncate(8));
    }

    #[test]
    fn exp_log_round_trip(s in unit_series(7)) {
        let t = s.sub(&Series::constant(s.coeff(0))).truncate(7);
        prop_assert_eq!(t.exp().unwrap().sub(&Series::one()).log1p().unwrap(), t);
    }

    #[test]
    fn reversion_round_trip(s in unit_series(7)) {
        let f = s.shift(1);
        let r = lagrange_revert(&f, 6).unwrap();
        prop_assert_eq!(f.compose(&r).unwrap().truncate(7), Series::monomial(1, qf(1, 1)).truncate(7));
        prop_assert_eq!(r.compose(&f).unwrap().truncate(7), Series::monomial(1, qf(1, 1)).truncate(7));
    }

    #[test]
    fn zeta_is_odd(c in small_q()) {
        let z: Series<Q> = zeta_series(&c, 0, 12);
        let zm: Series<Q> = zeta_series(&(-c.clone()), 0, 12);
        prop_assert_eq!(zm, z.neg());
        for (e, v) in z.terms() {
            prop_assert!(e % 2 == 1 || *v == qf(0, 1));
        }
    }
}
