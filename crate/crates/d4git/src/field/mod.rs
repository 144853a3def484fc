//! Exact scalars: Gaussian rationals and towers of quadratic extensions
//! `Q(i)(√d₁)(√d₂)…`.
//!
//! An element of a level-`n` tower is stored as `2ⁿ` Gaussian-rational
//! coefficients, laid out recursively: the first half is the component in the
//! parent field, the second half the coefficient of the top generator. Each
//! generator is a non-square in its parent, so this representation is unique
//! and zero testing is just "all coefficients vanish".
//!
//! Operations between scalars of different fields are allowed when one field
//! is a prefix of the other; the shallower operand is embedded. Anything else
//! is a programming error and panics.

mod gauss;
mod serial;

pub use gauss::{rat_sqrt, GaussRat};
pub use serial::{field_from_json, field_to_json};

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;

use crate::error::{Error, Result};

/// Default cap on tower depth.
pub const MAX_DEPTH: usize = 4;

#[derive(Clone)]
pub struct Field(Option<Arc<Level>>);

struct Level {
    parent: Field,
    d: Scalar,
    depth: usize,
}

impl Field {
    /// The Gaussian rationals.
    pub fn gaussian() -> Field {
        Field(None)
    }

    /// `Q(i)(√2)`, the field in which the quaternion base point and the
    /// √2-normalised coordinates on Sym²V live.
    pub fn standard() -> Field {
        static STD: OnceLock<Field> = OnceLock::new();
        STD.get_or_init(|| Field::gaussian().extend_unchecked(Scalar::from_i64(2)))
            .clone()
    }

    pub fn depth(&self) -> usize {
        self.0.as_ref().map_or(0, |l| l.depth)
    }

    pub fn parent(&self) -> Option<&Field> {
        self.0.as_ref().map(|l| &l.parent)
    }

    /// The square of the top generator (in the parent field).
    pub fn top_radicand(&self) -> Option<&Scalar> {
        self.0.as_ref().map(|l| &l.d)
    }

    /// Radicands from the bottom of the tower up.
    pub fn generators(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        let mut f = self;
        while let Some(l) = &f.0 {
            out.push(l.d.clone());
            f = &l.parent;
        }
        out.reverse();
        out
    }

    /// The top generator `s` with `s² = d`, as an element of this field.
    pub fn generator(&self) -> Option<Scalar> {
        let n = self.size();
        self.0.as_ref()?;
        let mut c = vec![GaussRat::zero(); n];
        c[n / 2] = GaussRat::one();
        Some(Scalar {
            field: self.clone(),
            c,
        })
    }

    fn size(&self) -> usize {
        1 << self.depth()
    }

    fn ancestor(&self, depth: usize) -> &Field {
        let mut f = self;
        while f.depth() > depth {
            f = f.parent().unwrap();
        }
        f
    }

    pub fn is_prefix_of(&self, other: &Field) -> bool {
        self.depth() <= other.depth() && *other.ancestor(self.depth()) == *self
    }

    /// The larger of two comparable fields.
    pub fn join(&self, other: &Field) -> Option<Field> {
        if self.is_prefix_of(other) {
            Some(other.clone())
        } else if other.is_prefix_of(self) {
            Some(self.clone())
        } else {
            None
        }
    }

    fn extend_unchecked(&self, d: Scalar) -> Field {
        Field(Some(Arc::new(Level {
            parent: self.clone(),
            d: d.lift(self),
            depth: self.depth() + 1,
        })))
    }

    /// Adjoin a square root of `d`, with the default depth cap.
    pub fn adjoin_sqrt(&self, d: &Scalar) -> Result<(Field, Scalar)> {
        self.adjoin_sqrt_capped(d, MAX_DEPTH)
    }

    /// Returns a field containing `self` and an element `s` with `s² = d`.
    /// If `d` is already a square no extension happens.
    pub fn adjoin_sqrt_capped(&self, d: &Scalar, max_depth: usize) -> Result<(Field, Scalar)> {
        let d = d.lift(self);
        if d.is_zero() {
            return Err(Error::DegenerateExtension);
        }
        if let Some(s) = d.sqrt() {
            return Ok((self.clone(), s));
        }
        if self.depth() >= max_depth {
            return Err(Error::ExtensionLimit(max_depth));
        }
        let f = self.extend_unchecked(d);
        let s = f.generator().unwrap();
        Ok((f, s))
    }

    /// Square root of `x`, extending the field if needed.
    pub fn sqrt_or_adjoin(&self, x: &Scalar) -> Result<(Field, Scalar)> {
        let f = self.join(x.field()).expect("incompatible fields");
        if x.is_zero() {
            let z = Scalar::zero().lift(&f);
            return Ok((f, z));
        }
        f.adjoin_sqrt(x)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        match (&self.0, &other.0) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                Arc::ptr_eq(a, b) || (a.depth == b.depth && a.parent == b.parent && a.d.c == b.d.c)
            }
            _ => false,
        }
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(i)")?;
        for g in self.generators() {
            write!(f, "(√{g})")?;
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An exact element of `Q(i)` or of a quadratic tower over it.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    c: Vec<GaussRat>,
}

// ---- coefficient-level arithmetic -------------------------------------

fn add_c(x: &[GaussRat], y: &[GaussRat]) -> Vec<GaussRat> {
    x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
}

fn sub_c(x: &[GaussRat], y: &[GaussRat]) -> Vec<GaussRat> {
    x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
}

fn mul_c(f: &Field, x: &[GaussRat], y: &[GaussRat]) -> Vec<GaussRat> {
    match &f.0 {
        None => vec![x[0].mul(&y[0])],
        Some(l) => {
            let h = x.len() / 2;
            let (a, b) = x.split_at(h);
            let (c, d) = y.split_at(h);
            let p = &l.parent;
            let ac = mul_c(p, a, c);
            let bd = mul_c(p, b, d);
            let mut lo = add_c(&ac, &mul_c(p, &bd, &l.d.c));
            let hi = add_c(&mul_c(p, a, d), &mul_c(p, b, c));
            lo.extend(hi);
            lo
        }
    }
}

fn inv_c(f: &Field, x: &[GaussRat]) -> Option<Vec<GaussRat>> {
    match &f.0 {
        None => Some(vec![x[0].inv()?]),
        Some(l) => {
            // (a + bs)⁻¹ = (a − bs) / (a² − d b²)
            let h = x.len() / 2;
            let (a, b) = x.split_at(h);
            let p = &l.parent;
            let bb = mul_c(p, b, b);
            let norm = sub_c(&mul_c(p, a, a), &mul_c(p, &bb, &l.d.c));
            let ni = inv_c(p, &norm)?;
            let mut lo = mul_c(p, a, &ni);
            let hi: Vec<GaussRat> = mul_c(p, b, &ni).iter().map(|z| z.neg()).collect();
            lo.extend(hi);
            Some(lo)
        }
    }
}

impl Scalar {
    pub fn new(field: Field, c: Vec<GaussRat>) -> Scalar {
        assert_eq!(c.len(), field.size(), "coefficient count does not match tower depth");
        Scalar { field, c }
    }

    pub fn from_gauss(z: GaussRat) -> Scalar {
        Scalar {
            field: Field::gaussian(),
            c: vec![z],
        }
    }

    pub fn zero() -> Scalar {
        Scalar::from_gauss(GaussRat::zero())
    }

    pub fn one() -> Scalar {
        Scalar::from_gauss(GaussRat::one())
    }

    pub fn i() -> Scalar {
        Scalar::from_gauss(GaussRat::i())
    }

    pub fn from_i64(n: i64) -> Scalar {
        Scalar::from_gauss(GaussRat::from_i64(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Scalar {
        Scalar::from_gauss(GaussRat::from_ratio(n, d))
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::from_gauss(GaussRat::new(r, BigRational::from_integer(0.into())))
    }

    /// `re + im·i`.
    pub fn gauss(re: i64, im: i64) -> Scalar {
        Scalar::from_gauss(GaussRat::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        ))
    }

    /// `√2` in the standard field.
    pub fn sqrt2() -> Scalar {
        Field::standard().generator().unwrap()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(GaussRat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(GaussRat::is_zero)
    }

    /// The value as a Gaussian rational, if it lies in the base field.
    pub fn as_gauss(&self) -> Option<&GaussRat> {
        if self.c[1..].iter().all(GaussRat::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// True for a rational number (no imaginary or radical part).
    pub fn is_rational(&self) -> bool {
        self.as_gauss().is_some_and(|z| z.im == BigRational::from_integer(0.into()))
    }

    /// True for a negative rational number.
    pub fn is_negative_rational(&self) -> bool {
        self.is_rational() && self.c[0].re < BigRational::from_integer(0.into())
    }

    /// Embed into a field having ours as a prefix.
    pub fn lift(&self, target: &Field) -> Scalar {
        if self.field == *target {
            return self.clone();
        }
        assert!(
            self.field.is_prefix_of(target),
            "cannot embed {:?} into {:?}",
            self.field,
            target
        );
        let mut c = self.c.clone();
        c.resize(target.size(), GaussRat::zero());
        Scalar {
            field: target.clone(),
            c,
        }
    }

    /// Push the value down to the shallowest tower level that contains it.
    pub fn reduce(&self) -> Scalar {
        let mut f = self.field.clone();
        let mut n = self.c.len();
        while f.depth() > 0 && self.c[n / 2..n].iter().all(GaussRat::is_zero) {
            n /= 2;
            f = f.parent().unwrap().clone();
        }
        Scalar {
            field: f,
            c: self.c[..n].to_vec(),
        }
    }

    fn pair(&self, o: &Scalar) -> (Field, Scalar, Scalar) {
        if self.field == o.field {
            return (self.field.clone(), self.clone(), o.clone());
        }
        let f = self
            .field
            .join(&o.field)
            .unwrap_or_else(|| panic!("incompatible fields {:?} and {:?}", self.field, o.field));
        (f.clone(), self.lift(&f), o.lift(&f))
    }

    pub fn try_inv(&self) -> Result<Scalar> {
        let c = inv_c(&self.field, &self.c).ok_or(Error::DivisionByZero)?;
        Ok(Scalar {
            field: self.field.clone(),
            c,
        })
    }

    pub fn inv(&self) -> Scalar {
        self.try_inv().expect("inverse of zero")
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    pub fn pow(&self, k: i64) -> Scalar {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = Scalar::one().lift(&self.field);
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Conjugation of the top generator, `a + bs ↦ a − bs`.
    fn top_conj(&self) -> Scalar {
        let h = self.c.len() / 2;
        let mut c = self.c.clone();
        for z in &mut c[h..] {
            *z = z.neg();
        }
        Scalar {
            field: self.field.clone(),
            c,
        }
    }

    /// A square root inside the scalar's own field, found by norm descent.
    pub fn sqrt(&self) -> Option<Scalar> {
        let l = match &self.field.0 {
            None => return self.c[0].sqrt().map(Scalar::from_gauss),
            Some(l) => l,
        };
        let f = &self.field;
        let h = self.c.len() / 2;
        let p = &l.parent;
        let a = Scalar::new(p.clone(), self.c[..h].to_vec());
        let b = Scalar::new(p.clone(), self.c[h..].to_vec());
        let s = f.generator().unwrap();
        if b.is_zero() {
            if let Some(u) = a.sqrt() {
                return Some(u.lift(f));
            }
            // a = d v²  ⇒  √a = v s
            let v = (&a / &l.d).sqrt()?;
            return Some(&v.lift(f) * &s);
        }
        // (u + v s)² = a + b s  ⇒  N(a + bs) = (u² − d v²)²
        let norm = (self * &self.top_conj()).reduce().lift(p);
        let n = norm.sqrt()?;
        let half = Scalar::from_ratio(1, 2);
        for n in [n.clone(), -&n] {
            let u2 = &(&a + &n) * &half;
            if let Some(u) = u2.sqrt() {
                if u.is_zero() {
                    continue;
                }
                let v = &b / &(&u * &Scalar::from_i64(2));
                let root = &u.lift(f) + &(&v.lift(f) * &s);
                if root.square() == *self {
                    return Some(root);
                }
            }
        }
        None
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        if self.field == o.field {
            return self.c == o.c;
        }
        match self.field.join(&o.field) {
            Some(f) => self.lift(&f).c == o.lift(&f).c,
            None => {
                let (a, b) = (self.reduce(), o.reduce());
                a.field == b.field && a.c == b.c
            }
        }
    }
}

impl Eq for Scalar {}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    /// Base-field values print as `a/b+c/d*i`; tower values print as the
    /// nested coefficient pair `[low, high]` against the top generator. The
    /// value is reduced first, so a tower element that happens to be rational
    /// prints as one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rec(c: &[GaussRat], f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if c.len() == 1 {
                return write!(f, "{}", c[0]);
            }
            let h = c.len() / 2;
            write!(f, "[")?;
            rec(&c[..h], f)?;
            write!(f, ", ")?;
            rec(&c[h..], f)?;
            write!(f, "]")
        }
        rec(&self.reduce().c, f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                let (f, a, b) = self.pair(o);
                let c = $body(&f, &a.c, &b.c);
                Scalar { field: f, c }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, |_f: &Field, x: &[GaussRat], y: &[GaussRat]| add_c(x, y));
binop!(Sub, sub, |_f: &Field, x: &[GaussRat], y: &[GaussRat]| sub_c(x, y));
binop!(Mul, mul, |f: &Field, x: &[GaussRat], y: &[GaussRat]| mul_c(f, x, y));
binop!(Div, div, |f: &Field, x: &[GaussRat], y: &[GaussRat]| mul_c(
    f,
    x,
    &inv_c(f, y).expect("division by zero")
));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            c: self.c.iter().map(GaussRat::neg).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }
}

impl std::str::FromStr for Scalar {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse::<GaussRat>().map(Scalar::from_gauss)
    }
}

/// Shorthand for tests and constructors: `sc("1/2-i")`.
pub fn sc(s: &str) -> Scalar {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjoin_examples() {
        let q = Field::gaussian();
        let (f, s) = q.adjoin_sqrt(&Scalar::from_i64(2)).unwrap();
        assert_eq!(f.depth(), 1);
        assert!((&s.square() - &Scalar::from_i64(2)).is_zero());

        let (f, s) = q.adjoin_sqrt(&Scalar::from_i64(-1)).unwrap();
        assert_eq!(f.depth(), 0);
        assert_eq!(s.square(), Scalar::from_i64(-1));
        assert!(s == Scalar::i() || s == -Scalar::i());

        let (f, s) = q.adjoin_sqrt(&Scalar::from_ratio(9, 4)).unwrap();
        assert_eq!(f.depth(), 0);
        assert_eq!(s, Scalar::from_ratio(3, 2));

        assert_eq!(q.adjoin_sqrt(&Scalar::zero()).unwrap_err(), Error::DegenerateExtension);
    }

    #[test]
    fn standard_field_contains_eighth_roots() {
        // √i = (1+i)/√2 lives in Q(i)(√2)
        let i = Scalar::i().lift(&Field::standard());
        let r = i.sqrt().expect("√i");
        assert_eq!(r.square(), Scalar::i());
        assert!(Scalar::from_i64(3).lift(&Field::standard()).sqrt().is_none());
        assert_eq!(Scalar::from_i64(-2).lift(&Field::standard()).sqrt().unwrap().square(), Scalar::from_i64(-2));
    }

    #[test]
    fn depth_cap() {
        let mut f = Field::gaussian();
        for p in [2, 3, 5, 7] {
            f = f.adjoin_sqrt(&Scalar::from_i64(p)).unwrap().0;
        }
        assert_eq!(f.depth(), 4);
        assert_eq!(f.adjoin_sqrt(&Scalar::from_i64(11)).unwrap_err(), Error::ExtensionLimit(4));
        // √6 is already there
        assert_eq!(f.adjoin_sqrt(&Scalar::from_i64(6)).unwrap().0.depth(), 4);
    }

    #[test]
    fn tower_inverse() {
        let (f, s) = Field::standard().adjoin_sqrt(&Scalar::from_i64(3)).unwrap();
        let x = &(&Scalar::sqrt2().lift(&f) + &s) + &Scalar::i();
        assert!((&x * &x.inv()).is_one());
        assert!(x.square().sqrt().is_some());
    }
}
