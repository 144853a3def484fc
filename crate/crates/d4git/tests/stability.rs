use d4git::git::{pair, Character, PointHV};
use d4git::orbit::base_point;
use d4git::quiver::{build_rep, king_stable, preprojective_residual};
use d4git::sample::{Sampler, UnstableFamily};
use d4git::stability::{semistable_minus_theta, semistable_theta, unstable_subset_certificates, StabilityVerdict};
use d4git::{Error, Scalar};
use proptest::prelude::*;

fn assert_certified(p: &PointHV, v: &StabilityVerdict, chi: &Character) {
    if let StabilityVerdict::Unstable(c) = v {
        assert!(c.verify(p, chi), "certificate {} fails", c.family);
        assert!(pair(chi, &c.cocharacter) > 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn theta_matches_king_on_samples(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let i = s.index(3);
        for p in [s.orbit_point(), s.chart_sample(i)] {
            let v = semistable_theta(&p).unwrap();
            let rep = build_rep(&p);
            prop_assert!(preprojective_residual(&rep).is_zero());
            prop_assert_eq!(v.is_stable(), king_stable(&rep));
            assert_certified(&p, &v, &Character::THETA);
        }
    }

    #[test]
    fn engineered_points_are_unstable(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        for f in UnstableFamily::all() {
            let p = s.unstable_point(f);
            let v = semistable_theta(&p).unwrap();
            prop_assert!(!v.is_stable(), "{}", f.name());
            prop_assert!(!king_stable(&build_rep(&p)), "{}", f.name());
            assert_certified(&p, &v, &Character::THETA);
        }
    }

    #[test]
    fn minus_theta_on_orbit_samples(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let p = s.orbit_point();
        prop_assert!(semistable_minus_theta(&p).unwrap().is_stable());
    }
}

#[test]
fn alpha_zero_is_minus_theta_unstable() {
    let mut s = Sampler::new(11);
    let p = s.unstable_point(UnstableFamily::TwoAlphaOneP(0));
    let v = semistable_minus_theta(&p).unwrap();
    match &v {
        StabilityVerdict::Unstable(c) => {
            assert_eq!(c.cocharacter.w, [0, 0]);
            assert_eq!(c.cocharacter.a.iter().filter(|&&a| a != 0).count(), 1);
        }
        _ => panic!("expected unstable"),
    }
    assert_certified(&p, &v, &Character::MINUS_THETA);
}

#[test]
fn beta_zero_is_minus_theta_unstable() {
    let mut s = Sampler::new(12);
    for i in 0..3 {
        let p = s.unstable_point(UnstableFamily::BetaAndB(i));
        if p.alpha.iter().any(Scalar::is_zero) {
            continue;
        }
        let v = semistable_minus_theta(&p).unwrap();
        assert!(!v.is_stable());
        assert_certified(&p, &v, &Character::MINUS_THETA);
    }
}

#[test]
fn base_point_verdicts() {
    let b = base_point();
    assert!(semistable_minus_theta(&b).unwrap().is_stable());
    // x = 0 is theta-unstable with the scalar subgroup
    assert!(!semistable_theta(&b).unwrap().is_stable());
    let with_x = b.with_x([Scalar::one(), Scalar::i()]);
    assert!(semistable_theta(&with_x).unwrap().is_stable());
}

#[test]
fn off_z_is_rejected() {
    let p = PointHV::from_i64([1, 1, 1], 1, [[0, 1, 0], [1, 0, 1], [1, 0, -1]], [1, 0]);
    assert!(matches!(semistable_theta(&p), Err(Error::ContractViolation(_))));
    assert!(matches!(semistable_minus_theta(&p), Err(Error::ContractViolation(_))));
}

#[test]
fn family_certificates() {
    let certs = unstable_subset_certificates();
    assert_eq!(certs.len(), 11);
    for (name, c, positive) in &certs {
        assert!(pair(&Character::THETA, c) > 0, "{name}");
        assert!(!positive.is_empty(), "{name}");
    }
}
