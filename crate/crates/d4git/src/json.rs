//! JSON for points and group elements.
//!
//! ```json
//! {"alpha": ["1","-2","i"], "beta": "1/2",
//!  "B": [["0","1","0"], ["1","0","1"], ["1","0","-1"]],
//!  "x": ["1","0"],
//!  "field": ["2"]}
//! ```
//!
//! `field` is optional (default `Q(i)`) and lists the radicands of the tower;
//! scalars in a tower of depth `n` are nested `[low, high]` pairs, see
//! [`crate::field`]. Plain numbers are accepted wherever a base-field string
//! is.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::field::{field_from_json, field_to_json, Field, Scalar};
use crate::git::{GroupElement, PointHV};
use crate::linalg::{join_fields, Mat2};

fn field_of(v: &Value) -> Result<Field> {
    match v.get("field") {
        None | Some(Value::Null) => Ok(Field::gaussian()),
        Some(f) => field_from_json(f),
    }
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing key {key:?}")))
}

fn scalars<const N: usize>(v: &Value, f: &Field, what: &str) -> Result<[Scalar; N]> {
    let a = v
        .as_array()
        .filter(|a| a.len() == N)
        .ok_or_else(|| Error::Parse(format!("{what} must be a list of {N} scalars")))?;
    let out: Vec<Scalar> = a.iter().map(|x| Scalar::from_json_in(x, f)).collect::<Result<_>>()?;
    Ok(out.try_into().unwrap())
}

fn with_field(mut m: Map<String, Value>, f: &Field) -> Value {
    if f.depth() > 0 {
        m.insert("field".into(), field_to_json(f));
    }
    Value::Object(m)
}

pub fn point_from_json(v: &Value) -> Result<PointHV> {
    let f = field_of(v)?;
    let alpha = scalars::<3>(get(v, "alpha")?, &f, "alpha")?;
    let beta = Scalar::from_json_in(get(v, "beta")?, &f)?;
    let rows = get(v, "B")?
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or_else(|| Error::Parse("B must be a list of three rows".into()))?;
    let b = [
        scalars::<3>(&rows[0], &f, "B row")?,
        scalars::<3>(&rows[1], &f, "B row")?,
        scalars::<3>(&rows[2], &f, "B row")?,
    ];
    let x = scalars::<2>(get(v, "x")?, &f, "x")?;
    Ok(PointHV { alpha, beta, b, x })
}

pub fn point_to_json(p: &PointHV) -> Value {
    let f = p.field();
    let s = |x: &Scalar| x.to_json_in(&f);
    let mut m = Map::new();
    m.insert("alpha".into(), Value::Array(p.alpha.iter().map(s).collect()));
    m.insert("beta".into(), s(&p.beta));
    m.insert(
        "B".into(),
        Value::Array(p.b.iter().map(|r| Value::Array(r.iter().map(s).collect())).collect()),
    );
    m.insert("x".into(), Value::Array(p.x.iter().map(s).collect()));
    with_field(m, &f)
}

pub fn parse_point(text: &str) -> Result<PointHV> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    point_from_json(&v)
}

pub fn group_element_from_json(v: &Value) -> Result<GroupElement> {
    let f = field_of(v)?;
    let t = scalars::<3>(get(v, "t")?, &f, "t")?;
    let rows = get(v, "g")?
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Parse("g must be a 2×2 matrix".into()))?;
    let [a, b] = scalars::<2>(&rows[0], &f, "g row")?;
    let [c, d] = scalars::<2>(&rows[1], &f, "g row")?;
    GroupElement::new(t, Mat2::new(a, b, c, d))
        .ok_or_else(|| Error::Parse("group element must have t_i != 0 and det g != 0".into()))
}

pub fn group_element_to_json(h: &GroupElement) -> Value {
    let f = h.field();
    let s = |x: &Scalar| x.to_json_in(&f);
    let mut m = Map::new();
    m.insert("t".into(), Value::Array(h.t.iter().map(s).collect()));
    m.insert(
        "g".into(),
        json!([[s(&h.g.0[0][0]), s(&h.g.0[0][1])], [s(&h.g.0[1][0]), s(&h.g.0[1][1])]]),
    );
    with_field(m, &f)
}

pub fn mat2_to_json(g: &Mat2) -> Value {
    let f = join_fields(g.0.iter().flatten());
    let s = |x: &Scalar| x.to_json_in(&f);
    json!([[s(&g.0[0][0]), s(&g.0[0][1])], [s(&g.0[1][0]), s(&g.0[1][1])]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::base_point;

    #[test]
    fn point_roundtrip() {
        let p = base_point().with_x([Scalar::i(), Scalar::sqrt2()]);
        let v = point_to_json(&p);
        assert_eq!(v["field"], json!(["2"]));
        assert_eq!(point_from_json(&v).unwrap(), p);
    }

    #[test]
    fn plain_point() {
        let p = parse_point(r#"{"alpha":[1,2,"i"],"beta":"1/2","B":[[0,1,0],[1,0,1],[1,0,-1]],"x":[1,0]}"#)
            .unwrap();
        assert_eq!(p.alpha[2], Scalar::i());
        assert_eq!(p.beta, Scalar::from_ratio(1, 2));
    }

    #[test]
    fn group_roundtrip() {
        let h = GroupElement::new(
            [Scalar::one(), Scalar::i(), Scalar::from_i64(-1)],
            Mat2::new(Scalar::one(), Scalar::sqrt2(), Scalar::zero(), Scalar::one()),
        )
        .unwrap();
        assert_eq!(group_element_from_json(&group_element_to_json(&h)).unwrap(), h);
    }
}
