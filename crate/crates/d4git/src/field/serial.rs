//! JSON encoding of scalars and towers.
//!
//! A base-field scalar is the string `"a/b+c/d*i"`. A scalar of a depth-`n`
//! tower is a two-element array `[low, high]` meaning `low + high·sₙ`, where
//! both halves are encoded at depth `n−1`. A tower is the list of its
//! radicands `[d₁, d₂, …]`, each encoded in the field below it.

use serde_json::Value;

use super::{Field, GaussRat, Scalar};
use crate::error::{Error, Result};

impl Scalar {
    /// Encode at the depth of `field` (which must contain the scalar).
    pub fn to_json_in(&self, field: &Field) -> Value {
        let x = self.reduce().lift(field);
        fn rec(c: &[GaussRat]) -> Value {
            if c.len() == 1 {
                return Value::String(c[0].to_string());
            }
            let h = c.len() / 2;
            Value::Array(vec![rec(&c[..h]), rec(&c[h..])])
        }
        rec(&x.c)
    }

    pub fn to_json(&self) -> Value {
        self.to_json_in(&self.field.clone())
    }

    pub fn from_json_in(v: &Value, field: &Field) -> Result<Scalar> {
        fn rec(v: &Value, depth: usize, out: &mut Vec<GaussRat>) -> Result<()> {
            match (depth, v) {
                (0, Value::String(s)) => {
                    out.push(s.parse().map_err(Error::Parse)?);
                    Ok(())
                }
                (0, Value::Number(n)) => {
                    out.push(n.to_string().parse().map_err(Error::Parse)?);
                    Ok(())
                }
                (d, Value::Array(a)) if d > 0 && a.len() == 2 => {
                    rec(&a[0], d - 1, out)?;
                    rec(&a[1], d - 1, out)
                }
                // a plain base-field value is accepted at any depth
                (d, Value::String(_) | Value::Number(_)) => {
                    rec(v, 0, out)?;
                    out.resize(out.len() + (1 << d) - 1, GaussRat::zero());
                    Ok(())
                }
                _ => Err(Error::Parse(format!("malformed scalar {v}"))),
            }
        }
        let mut c = Vec::new();
        rec(v, field.depth(), &mut c)?;
        Ok(Scalar::new(field.clone(), c))
    }
}

pub fn field_to_json(f: &Field) -> Value {
    let mut gens = Vec::new();
    let mut cur = Some(f);
    let mut chain = Vec::new();
    while let Some(g) = cur {
        chain.push(g);
        cur = g.parent();
    }
    chain.reverse();
    for g in chain.iter().skip(1) {
        let parent = g.parent().unwrap();
        gens.push(g.top_radicand().unwrap().to_json_in(parent));
    }
    Value::Array(gens)
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("field must be a list of radicands".into()))?;
    let mut f = Field::gaussian();
    for d in arr {
        let d = Scalar::from_json_in(d, &f)?;
        let (g, _) = f.adjoin_sqrt(&d)?;
        if g.depth() != f.depth() + 1 {
            return Err(Error::Parse(format!("radicand {d} is already a square")));
        }
        f = g;
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_json_roundtrip() {
        let (f, s) = Field::standard().adjoin_sqrt(&Scalar::from_i64(3)).unwrap();
        let x = &(&s * &Scalar::from_ratio(1, 2)) + &Scalar::sqrt2() + Scalar::i();
        let v = x.to_json();
        assert_eq!(v.to_string(), r#"[["i","1"],["1/2","0"]]"#);
        assert_eq!(Scalar::from_json_in(&v, &f).unwrap(), x);
        let fj = field_to_json(&f);
        assert_eq!(fj.to_string(), r#"["2",["3","0"]]"#);
        assert_eq!(field_from_json(&fj).unwrap(), f);
    }
}
