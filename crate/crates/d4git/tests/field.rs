use d4git::field::{Field, Scalar};
use d4git::sc;
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=7, -20i64..=20, 1i64..=7).prop_map(|(a, b, c, d)| {
        &Scalar::from_ratio(a, b) + &(&Scalar::from_ratio(c, d) * &Scalar::i())
    })
}

/// `Q(i)(√2)(√3)`, together with `√2` and `√3`.
fn tower() -> (Field, Scalar, Scalar) {
    let (f, s3) = Field::standard().adjoin_sqrt(&Scalar::from_i64(3)).unwrap();
    (f, Scalar::sqrt2(), s3)
}

fn tower_elem() -> impl Strategy<Value = Scalar> {
    (gauss(), gauss(), gauss(), gauss()).prop_map(|(a, b, c, d)| {
        let (_, s2, s3) = tower();
        let s6 = &s2 * &s3;
        &(&(&a + &(&b * &s2)) + &(&c * &s3)) + &(&d * &s6)
    })
}

#[test]
fn small_identities() {
    let one_i = &Scalar::one() + &Scalar::i();
    assert_eq!(one_i.square(), sc("2*i"));
    assert_eq!(Scalar::sqrt2().square(), Scalar::from_i64(2));
    let s2 = Scalar::sqrt2();
    assert_eq!((&Scalar::one() + &s2).inv(), &s2 - &Scalar::one());
    assert_eq!(sc("1/2-3/4*i").to_string(), "1/2-3/4*i");
    assert_eq!(Scalar::i().pow(4), Scalar::one());
    assert_eq!(Scalar::i().pow(-1), -&Scalar::i());
}

#[test]
fn sqrt_of_squares_and_non_squares() {
    assert_eq!(sc("-4").sqrt().map(|s| s.square()), Some(sc("-4")));
    assert_eq!(sc("2*i").sqrt().map(|s| s.square()), Some(sc("2*i")));
    assert!(sc("2").sqrt().is_none());
    let (f, s) = Field::gaussian().adjoin_sqrt(&sc("3")).unwrap();
    assert_eq!(f.depth(), 1);
    assert_eq!(s.square(), sc("3"));
    // already a square: no extension
    let (f, s) = Field::gaussian().adjoin_sqrt(&sc("9/4")).unwrap();
    assert_eq!(f.depth(), 0);
    assert_eq!(s.square(), sc("9/4"));
    assert!(Field::gaussian().adjoin_sqrt(&Scalar::zero()).is_err());
}

#[test]
fn reduce_drops_unused_generators() {
    let (_, s2, s3) = tower();
    let x = &(&s3 * &s3) + &(&s2 * &s2);
    assert_eq!(x.reduce().field().depth(), 0);
    assert_eq!(x, Scalar::from_i64(5));
    assert_eq!(x.to_string(), "5");
}

proptest! {
    #[test]
    fn gaussian_field_axioms(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv(), Scalar::one());
        }
    }

    #[test]
    fn tower_field_axioms(a in tower_elem(), b in tower_elem(), c in tower_elem()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a / &a, Scalar::one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
    }

    #[test]
    fn square_roots_square_back(a in tower_elem()) {
        let sq = a.square();
        let r = sq.sqrt().expect("a square has a root in the same field");
        prop_assert_eq!(r.square(), sq);
        prop_assert!(r == a || r == -&a);
    }

    #[test]
    fn display_parse_roundtrip(a in gauss()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn json_roundtrip_in_tower(a in tower_elem()) {
        let (f, _, _) = tower();
        let v = a.to_json_in(&f);
        prop_assert_eq!(Scalar::from_json_in(&v, &f).unwrap(), a);
    }
}
