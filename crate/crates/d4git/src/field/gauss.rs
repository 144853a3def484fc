//! Gaussian rationals Q(i), the bottom of every tower.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_i64(1)
    }

    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        GaussRat::new(BigRational::new(n.into(), d.into()), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> Self {
        GaussRat::new(-&self.re, -&self.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }

    /// |z|², a non-negative rational.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussRat::new(&self.re / &n, -&self.im / &n))
    }

    /// A square root inside Q(i), if one exists. The root returned has
    /// non-negative real part (and non-negative imaginary part when the real
    /// part vanishes), so the choice is deterministic.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        let n = rat_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        let u2 = (&self.re + &n) / &two;
        let u = rat_sqrt(&u2)?;
        let root = if u.is_zero() {
            // z is a negative rational
            GaussRat::new(BigRational::zero(), rat_sqrt(&(-&self.re))?)
        } else {
            let v = &self.im / (&two * &u);
            GaussRat::new(u, v)
        };
        if root.mul(&root) == *self {
            Some(root)
        } else {
            None
        }
    }
}

/// Square root of a non-negative rational, if rational.
pub fn rat_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(BigRational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &s * &s == *n {
        Some(s)
    } else {
        None
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRat {
    /// Canonical text: `a/b+c/d*i`, dropping a zero part, `i` for a unit
    /// imaginary coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let im_abs = self.im.abs();
        let im_txt = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", fmt_rat(&im_abs))
        };
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im_txt}")
            } else {
                write!(f, "{im_txt}")
            }
        } else {
            write!(f, "{}{}{}", fmt_rat(&self.re), sign, im_txt)
        }
    }
}

fn parse_rat(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("malformed rational '{s}'");
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.strip_prefix('+').unwrap_or(n).parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(format!("zero denominator in '{s}'"));
    }
    Ok(BigRational::new(n, d))
}

fn parse_imag(s: &str) -> Result<BigRational, String> {
    // s ends in 'i'
    let body = s[..s.len() - 1].trim_end();
    let body = body.strip_suffix('*').unwrap_or(body).trim();
    match body {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        b => parse_rat(b),
    }
}

impl std::str::FromStr for GaussRat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err("empty scalar".into());
        }
        if !t.ends_with('i') {
            return Ok(GaussRat::new(parse_rat(&t)?, BigRational::zero()));
        }
        // split at the last sign that is not the leading character
        let split = t
            .char_indices()
            .rev()
            .find(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k);
        match split {
            Some(k) => Ok(GaussRat::new(parse_rat(&t[..k])?, parse_imag(&t[k..])?)),
            None => Ok(GaussRat::new(BigRational::zero(), parse_imag(&t)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        for s in ["0", "3", "-7/2", "i", "-i", "1/2*i", "3-2*i", "-1/3+5/7*i", "2+i"] {
            let z: GaussRat = s.parse().unwrap();
            assert_eq!(z.to_string(), s);
        }
        let z: GaussRat = "4/2 + 0*i".parse().unwrap();
        assert_eq!(z.to_string(), "2");
    }

    #[test]
    fn sqrt_in_gaussian_rationals() {
        let z: GaussRat = "2*i".parse().unwrap();
        let r = z.sqrt().unwrap();
        assert_eq!(r.to_string(), "1+i");
        assert!(GaussRat::from_i64(2).sqrt().is_none());
        assert_eq!(GaussRat::from_i64(-4).sqrt().unwrap().to_string(), "2*i");
        assert_eq!(GaussRat::from_ratio(9, 4).sqrt().unwrap().to_string(), "3/2");
        let z: GaussRat = "-5+12*i".parse().unwrap();
        assert_eq!(z.sqrt().unwrap().to_string(), "2+3*i");
    }
}
