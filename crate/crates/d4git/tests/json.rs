use d4git::json::{group_element_from_json, group_element_to_json, parse_point, point_from_json, point_to_json};
use d4git::sample::Sampler;
use d4git::Error;
use proptest::prelude::*;

#[test]
fn malformed_points() {
    for bad in [
        "not json",
        r#"{"alpha":[1,2],"beta":1,"B":[[0,0,0],[0,0,0],[0,0,0]],"x":[0,0]}"#,
        r#"{"alpha":[1,2,3],"B":[[0,0,0],[0,0,0],[0,0,0]],"x":[0,0]}"#,
        r#"{"alpha":[1,2,3],"beta":"1/0","B":[[0,0,0],[0,0,0],[0,0,0]],"x":[0,0]}"#,
        r#"{"alpha":[1,2,3],"beta":"x","B":[[0,0,0],[0,0,0],[0,0,0]],"x":[0,0]}"#,
        r#"{"alpha":[1,2,3],"beta":1,"B":[[0,0,0],[0,0,0]],"x":[0,0]}"#,
    ] {
        assert!(matches!(parse_point(bad), Err(Error::Parse(_))), "{bad}");
    }
}

#[test]
fn singular_group_element_rejected() {
    let v = serde_json::json!({"t": [1, 1, 1], "g": [[1, 2], [2, 4]]});
    assert!(matches!(group_element_from_json(&v), Err(Error::Parse(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sampled_roundtrips(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let p = s.orbit_point();
        prop_assert_eq!(point_from_json(&point_to_json(&p)).unwrap(), p);
        let h = s.group_element();
        prop_assert_eq!(group_element_from_json(&group_element_to_json(&h)).unwrap(), h);
    }
}
