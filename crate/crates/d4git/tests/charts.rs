use d4git::charts::{
    chart_closure_check, from_quiver_chart, hat_collapse_check, normalize, quiver_side_hat, to_quiver_chart,
};
use d4git::git::act;
use d4git::orbit::base_point;
use d4git::sample::Sampler;
use d4git::{Error, Scalar};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chart_roundtrips(seed in any::<u64>(), i in 0usize..3) {
        let mut s = Sampler::new(seed);
        let c = s.chart_point(i);
        let hat = to_quiver_chart(&c).unwrap();
        prop_assert!(hat.violations().is_empty());
        let back = from_quiver_chart(&hat).unwrap();
        prop_assert_eq!(&back.point, &c.point);
        prop_assert_eq!(to_quiver_chart(&back).unwrap(), hat);
    }

    #[test]
    fn normalize_recovers_invariants(seed in any::<u64>(), i in 0usize..3) {
        let mut s = Sampler::new(seed);
        let c = s.chart_point(i);
        let h = s.group_element();
        let moved = act(&h, &c.point);
        let n = normalize(&moved, i).unwrap();
        prop_assert!(n.violations().is_empty());
        prop_assert_eq!(act(&n.normalizer, &moved), n.point.clone());
        prop_assert_eq!(n.torus_invariants(), c.torus_invariants());
        prop_assert_eq!(quiver_side_hat(&moved, i).unwrap(), to_quiver_chart(&n).unwrap());
    }
}

#[test]
fn closure_check_report() {
    let r = chart_closure_check().unwrap();
    assert_eq!(r.divisor, "1 + a2*p2^2 + a3*p3^2");
    assert_eq!(r.total, 24);
    assert_eq!(r.passed, 24);
    assert!(r.components.iter().all(|c| c.remainder == "0"));
}

#[test]
fn hat_side_collapses() {
    assert!(hat_collapse_check().unwrap().ok());
}

#[test]
fn base_point_charts() {
    // with x = (1, i) the base point lies in chart 1 only
    let p = base_point().with_x([Scalar::one(), Scalar::i()]);
    let c = normalize(&p, 0).unwrap();
    assert!(c.violations().is_empty());
    assert_eq!(c.point.alpha[0], Scalar::one());
    assert!(matches!(normalize(&p, 1), Err(Error::NotInChart { index: 2, .. })));
    // x = 0 spans nothing
    assert!(normalize(&base_point(), 0).is_err());
}
