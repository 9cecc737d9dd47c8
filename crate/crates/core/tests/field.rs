use gca_core::vector::combine;
use gca_core::{binom, BigRational, Field, GaussianRational, Monomial, Vector};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn gauss() -> impl Strategy<Value = GaussianRational> {
    (rat(), rat()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

proptest! {
    #[test]
    fn field_axioms(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() - &a, GaussianRational::from(0));
        if a != GaussianRational::from(0) {
            prop_assert_eq!(a.clone() * &a.checked_inv().unwrap(), GaussianRational::from(1));
        } else {
            prop_assert!(a.checked_inv().is_none());
        }
    }

    #[test]
    fn literal_round_trip(a in gauss()) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<GaussianRational>().unwrap(), a);
    }

    #[test]
    fn integer_powers(a in gauss(), k in 0i64..6) {
        let mut want = GaussianRational::from(1);
        for _ in 0..k {
            want = want * &a;
        }
        prop_assert_eq!(a.pow_i(k).unwrap(), want.clone());
        if a != GaussianRational::from(0) {
            prop_assert_eq!(a.pow_i(-k).unwrap() * &want, GaussianRational::from(1));
        }
    }

    #[test]
    fn combine_ignores_order(cs in proptest::collection::vec((-5i64..5, 0u32..3, 0u32..3), 1..6)) {
        let items: Vec<(GaussianRational, Vector)> = cs
            .iter()
            .map(|&(c, a, b)| (GaussianRational::from(c), Vector::monomial(Monomial::new(&[a, b]).unwrap())))
            .collect();
        let fwd = combine(items.iter().map(|(c, v)| (c, v))).unwrap();
        let rev = combine(items.iter().rev().map(|(c, v)| (c, v))).unwrap();
        prop_assert_eq!(fwd, rev);
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[test]
fn binomials_against_factorials() {
    for n in 0..=12u32 {
        let mut row_sum = BigRational::from_integer(0.into());
        for k in 0..=n {
            let want = factorial(n) / (factorial(k) * factorial(n - k));
            let got: BigRational = binom(n, k);
            assert_eq!(got, BigRational::from_integer(want));
            row_sum += got;
            if n > 0 && k > 0 {
                let pascal: BigRational = binom::<BigRational>(n - 1, k - 1) + binom::<BigRational>(n - 1, k);
                assert_eq!(binom::<BigRational>(n, k), pascal);
            }
        }
        assert_eq!(row_sum, BigRational::from_integer(BigInt::from(2).pow(n)));
        assert_eq!(binom::<BigRational>(n, n + 1), BigRational::from_integer(0.into()));
    }
}
