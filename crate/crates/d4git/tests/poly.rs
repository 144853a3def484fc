use d4git::poly::Poly;
use d4git::ring::Ring;
use d4git::Scalar;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
        let v = Poly::ring(&["a", "b"]);
        terms.into_iter().fold(Poly::zero(), |acc, (c, i, j)| {
            acc.add(&v[0].pow(i).mul(&v[1].pow(j)).scale(&Scalar::from_i64(c)))
        })
    })
}

proptest! {
    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn division_identity(p in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        let (q, r) = p.divide_by(&d).unwrap();
        prop_assert_eq!(q.mul(&d).add(&r), p);
    }

    #[test]
    fn multiples_reduce_to_zero(p in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        let (_, r) = p.mul(&d).divide_by(&d).unwrap();
        prop_assert!(r.is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), a in -3i64..=3, b in -3i64..=3) {
        let pt = [Scalar::from_i64(a), Scalar::from_i64(b)];
        prop_assert_eq!(p.mul(&q).eval(&pt), &p.eval(&pt) * &q.eval(&pt));
    }
}

#[test]
fn substitution_and_printing() {
    let v = Poly::ring(&["a2", "p2", "a3", "p3"]);
    let n = Poly::one().add(&v[0].mul(&v[1].pow(2))).add(&v[2].mul(&v[3].pow(2)));
    assert_eq!(n.to_string(), "1 + a2*p2^2 + a3*p3^2");
    let s = n.substitute(&[("a3", Poly::constant(Scalar::from_i64(-1)))]).unwrap();
    assert_eq!(s.eval(&[Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::one()]), Scalar::one());
    assert!(n.divide_by(&Poly::zero()).is_err());
}
