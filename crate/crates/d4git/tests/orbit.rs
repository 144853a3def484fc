use d4git::equations::in_zo;
use d4git::git::act;
use d4git::orbit::{base_point, connect, quaternion_matrices, stabilizer, Constraints, FiniteSubgroup};
use d4git::sample::Sampler;
use d4git::Error;

#[test]
fn base_stabilizer_is_quaternion() {
    let g = stabilizer(&base_point(), Constraints::Full).unwrap();
    assert_eq!(g.order(), 8);
    assert_eq!(g.count_of_order(2), 1);
    assert!(!g.is_abelian());
    assert_eq!(g.iso_type(), "Q8");
    let s = g.summary();
    assert_eq!(s.table.len(), 8);
    assert!(s.table.iter().all(|row| {
        let mut r = row.clone();
        r.sort();
        r == (0..8).collect::<Vec<_>>()
    }));
}

#[test]
fn relaxed_stabilizer_has_order_16() {
    let g = stabilizer(&base_point(), Constraints::Relaxed).unwrap();
    assert_eq!(g.order(), 16);
}

#[test]
fn quaternion_matrices_generate_q8() {
    let g = FiniteSubgroup::generate(&quaternion_matrices(), 64).unwrap();
    assert_eq!(g.order(), 8);
    assert!(g.is_quaternion());
}

#[test]
fn stabilizers_along_the_orbit() {
    let mut s = Sampler::new(5);
    for _ in 0..3 {
        let h = s.group_element();
        let p = act(&h, &base_point());
        assert!(in_zo(&p).unwrap());
        let g = stabilizer(&p, Constraints::Full).unwrap();
        assert_eq!(g.iso_type(), "Q8");
        let c = connect(&base_point(), &p).unwrap();
        assert!(act(&c.element, &base_point()).same_h(&p));
    }
}

#[test]
fn connect_independent_samples() {
    let mut s = Sampler::new(9);
    for _ in 0..3 {
        let (p, q) = (s.orbit_point(), s.orbit_point());
        let c = connect(&p, &q).unwrap();
        let moved = act(&c.element, &p);
        assert!(moved.same_h(&q));
        if c.x_matched {
            assert_eq!(moved.x, q.x);
        }
    }
}

#[test]
fn stabilizer_needs_zo() {
    let mut p = base_point();
    p.beta = d4git::Scalar::zero();
    assert!(matches!(stabilizer(&p, Constraints::Full), Err(Error::ContractViolation(_))));
}
