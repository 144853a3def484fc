use d4git::equations::{minus_theta_semi_invariant, on_z, residuals};
use d4git::git::{act, table_rows, weights_by_action, Character, Cocharacter, GroupElement};
use d4git::linalg::Mat2;
use d4git::orbit::base_point;
use d4git::sample::Sampler;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_is_a_left_action(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let p = s.h_point();
        let (h1, h2) = (s.group_element(), s.group_element());
        prop_assert_eq!(act(&h1.mul(&h2), &p), act(&h1, &act(&h2, &p)));
        prop_assert_eq!(act(&GroupElement::identity(), &p), p.clone());
        prop_assert_eq!(act(&h1.inverse(), &act(&h1, &p)), p);
    }

    #[test]
    fn z_is_invariant(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let h = s.group_element();
        let p = s.orbit_point();
        prop_assert!(residuals(&act(&h, &p)).is_zero());
        let q = s.h_point();
        prop_assert_eq!(on_z(&act(&h, &q)), on_z(&q));
    }

    #[test]
    fn semi_invariant_has_weight_minus_theta(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let p = s.h_point();
        let h = s.group_element();
        prop_assert_eq!(
            minus_theta_semi_invariant(&act(&h, &p)),
            &h.character_value(&Character::MINUS_THETA) * &minus_theta_semi_invariant(&p)
        );
    }

    #[test]
    fn closed_form_weights(a in prop::array::uniform3(-4i64..=4), w in prop::array::uniform2(-4i64..=4)) {
        let l = Cocharacter::new(a, w);
        prop_assert_eq!(l.weights(), weights_by_action(&l, &Mat2::identity()));
    }
}

#[test]
fn reference_rows() {
    let rows = table_rows();
    let w = |k: usize| weights_by_action(&rows[k].1, &Mat2::identity());
    assert_eq!(w(0)[..13], [-2, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0]);
    assert_eq!(w(3)[..13], [1, 1, 1, -2, 0, -1, -2, 0, -1, -2, 0, -1, -2]);
    assert_eq!(w(6)[..13], [0, 0, 0, -1, 1, -1, -3, 1, -1, -3, 1, -1, -3]);
}

#[test]
fn reference_table_differs_in_one_entry() {
    let diff = d4git::git::table_mismatches(&d4git::git::weight_table(true));
    assert_eq!(diff.len(), 1);
    assert_eq!((diff[0].row, diff[0].column, diff[0].computed, diff[0].reference), ("mu+lambda1", "beta", -1, 0));
}

#[test]
fn base_point_facts() {
    let b = base_point();
    assert!(residuals(&b).is_zero());
    let det = b.b_matrix().det();
    assert_eq!(det, &(&(&b.beta.pow(3) * &b.alpha[0]) * &b.alpha[1]) * &b.alpha[2]);
}
