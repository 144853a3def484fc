use d4git::linalg::Mat2;
use d4git::tannakian::s3::{s3_act, s3_base_point, s3_residual, s3_stabilizer, S3Point};
use d4git::tannakian::toric::{
    an_minimal_chambers, an_minimal_presentation, an_quotient_fan, an_redundant_presentation,
    brute_force_semistable, integer_kernel, wall_check,
};
use d4git::Error;
use proptest::prelude::*;

#[test]
fn resolution_fans() {
    for n in 2..=6usize {
        let fan = an_quotient_fan(n, &vec![1; n - 1]).unwrap();
        assert_eq!(fan.interior_rays().len(), n - 1, "n = {n}");
        assert_eq!(fan.cones.len(), n);
        assert!(fan.cones.iter().all(|c| c.multiplicity == 1));
        assert_eq!(fan.used_rays(), (0..=n as i64).map(|a| (a, 1)).collect::<Vec<_>>());
    }
}

#[test]
fn orbifold_fans() {
    for n in 2..=6usize {
        let fan = an_quotient_fan(n, &vec![-1; n - 1]).unwrap();
        assert_eq!(fan.cones.len(), 1);
        assert_eq!(fan.cones[0].multiplicity, n as u64);
        assert!(fan.interior_rays().is_empty());
    }
}

#[test]
fn walls_and_bad_characters() {
    assert!(matches!(an_quotient_fan(3, &[0, 0]), Err(Error::Wall(_))));
    assert!(an_quotient_fan(3, &[1]).is_err());
    assert!(wall_check(&an_minimal_presentation(3, 0)).is_err());
    assert!(wall_check(&an_minimal_presentation(3, 1)).is_ok());
}

#[test]
fn minimal_presentation_chambers() {
    for n in 2..=5 {
        let ch = an_minimal_chambers(n).unwrap();
        assert_eq!(ch.len(), 2);
        assert_eq!(ch.iter().filter(|c| c.orbifold).count(), 1);
    }
}

#[test]
fn kernel_of_the_cartan_weights() {
    let p = an_redundant_presentation(4, vec![1, 1, 1]).unwrap();
    let k = integer_kernel(&p.weights);
    assert_eq!(k.len(), 2);
    for v in &k {
        for r in 0..3 {
            let s: i64 = p.weights.iter().zip(v).map(|(w, c)| w[r] * c).sum();
            assert_eq!(s, 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cone_test_agrees_with_one_parameter_search(
        n in 2usize..=4,
        mask in prop::collection::vec(any::<bool>(), 5),
        chi in prop::collection::vec(-2i64..=2, 3),
    ) {
        let chi: Vec<i64> = chi[..n - 1].to_vec();
        let p = an_redundant_presentation(n, chi).unwrap();
        let support: Vec<bool> = mask[..p.dim()].to_vec();
        prop_assert_eq!(p.semistable_support(&support), brute_force_semistable(&p, &support, 3));
    }
}

#[test]
fn s3_base_point_and_stabilizer() {
    let p = s3_base_point();
    assert!(s3_residual(&p).is_zero());
    let g = s3_stabilizer(&p).unwrap();
    assert_eq!(g.order(), 6);
    assert_eq!(g.iso_type(), "S3");
}

#[test]
fn s3_conjugated_stabilizer() {
    let p = s3_base_point();
    let g = Mat2::from_i64([[2, 1], [-3, 5]]);
    let q = s3_act(&g, &p);
    assert!(s3_residual(&q).is_zero());
    let st = s3_stabilizer(&q).unwrap();
    assert_eq!(st.order(), 6);
    let gi = g.inverse().unwrap();
    for e in &s3_stabilizer(&p).unwrap().elements {
        assert!(st.contains(&g.mul(e).mul(&gi)));
    }
}

#[test]
fn s3_degenerate_input() {
    let p = S3Point::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 0]]);
    assert!(matches!(s3_stabilizer(&p), Err(Error::ContractViolation(_))));
}
