//! Sparse multivariate polynomials with [`Scalar`] coefficients.
//!
//! Every polynomial carries its ordered variable list. Monomials are compared
//! in graded lexicographic order, where among equal total degrees the *last*
//! declared variable is most significant. With the chart variables declared as
//! `a2 < a3 < b < p2 < p3 < …` the leading monomial of `1 + a2*p2^2 + a3*p3^2`
//! is `a3*p3^2`.
//!
//! Only single-divisor division is provided; after the chart substitutions the
//! relevant ideal is principal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Mono) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.iter().rev().cmp(o.0.iter().rev()))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Mono) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone)]
pub struct Poly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Mono, Scalar>,
}

impl Poly {
    fn empty(vars: Arc<Vec<String>>) -> Poly {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// A variable ring: returns the generators in declaration order.
    pub fn ring(names: &[&str]) -> Vec<Poly> {
        let vars = Arc::new(names.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        (0..names.len())
            .map(|k| {
                let mut e = vec![0; names.len()];
                e[k] = 1;
                let mut p = Poly::empty(vars.clone());
                p.terms.insert(Mono(e), Scalar::one());
                p
            })
            .collect()
    }

    /// A constant with no variables; combines with any polynomial.
    pub fn constant(c: Scalar) -> Poly {
        let mut p = Poly::empty(Arc::new(Vec::new()));
        if !c.is_zero() {
            p.terms.insert(Mono(Vec::new()), c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Mono, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Re-express over a variable list extending ours (only constants move).
    fn over(&self, vars: &Arc<Vec<String>>) -> Poly {
        if Arc::ptr_eq(&self.vars, vars) || *self.vars == **vars {
            return Poly {
                vars: vars.clone(),
                terms: self.terms.clone(),
            };
        }
        assert!(self.vars.is_empty(), "polynomials over different variable lists");
        let mut p = Poly::empty(vars.clone());
        if let Some(c) = self.terms.get(&Mono(Vec::new())) {
            p.terms.insert(Mono(vec![0; vars.len()]), c.clone());
        }
        p
    }

    fn common(&self, o: &Poly) -> (Poly, Poly) {
        let vars = if self.vars.len() >= o.vars.len() {
            self.vars.clone()
        } else {
            o.vars.clone()
        };
        (self.over(&vars), o.over(&vars))
    }

    fn add_term(&mut self, m: Mono, c: Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut p = Poly::empty(self.vars.clone());
        if s.is_zero() {
            return p;
        }
        for (m, c) in &self.terms {
            p.terms.insert(m.clone(), c * s);
        }
        p
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(Scalar::one()), |acc, _| acc.mul(self))
    }

    fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Simultaneous substitution `var ↦ poly`.
    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Result<Poly> {
        let mut idx = Vec::new();
        for (name, _) in bindings {
            idx.push(self.index_of(name)?);
        }
        let mut out = Poly::empty(self.vars.clone());
        for (m, c) in &self.terms {
            let mut rest = m.0.clone();
            let mut t = Poly::constant(c.clone()).over(&self.vars);
            for ((_, img), &k) in bindings.iter().zip(&idx) {
                let e = m.0[k];
                rest[k] = 0;
                if e > 0 {
                    t = t.mul(&img.pow(e));
                }
            }
            let mut mono = Poly::empty(self.vars.clone());
            mono.terms.insert(Mono(rest), Scalar::one());
            out = out.add(&t.mul(&mono));
        }
        Ok(out)
    }

    /// Division by a single polynomial: `self = q·n + r` with no monomial of
    /// `r` divisible by the leading monomial of `n`.
    pub fn divide_by(&self, n: &Poly) -> Result<(Poly, Poly)> {
        let (mut p, n) = self.common(n);
        let (lm, lc) = match n.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let lc_inv = lc.inv();
        let mut q = Poly::empty(p.vars.clone());
        let mut r = Poly::empty(p.vars.clone());
        while let Some((m, c)) = p.leading() {
            let (m, c) = (m.clone(), c.clone());
            if lm.divides(&m) {
                let qm = m.div(&lm);
                let qc = &c * &lc_inv;
                let mut t = Poly::empty(p.vars.clone());
                t.terms.insert(qm.clone(), qc.clone());
                p = p.sub(&t.mul(&n));
                q.add_term(qm, qc);
            } else {
                p.terms.remove(&m);
                r.add_term(m, c);
            }
        }
        Ok((q, r))
    }

    /// Evaluate at a point given in variable order. Variable-free constants
    /// evaluate to themselves at any point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert!(self.vars.is_empty() || point.len() == self.vars.len());
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                t = &t * &x.pow(e as i64);
            }
            acc = &acc + &t;
        }
        acc
    }
}

/// Equality of values: a variable-free constant equals the same constant over
/// any variable list.
impl PartialEq for Poly {
    fn eq(&self, o: &Poly) -> bool {
        if *self.vars == *o.vars {
            return self.terms == o.terms;
        }
        if !self.vars.is_empty() && !o.vars.is_empty() {
            return false;
        }
        let (a, b) = self.common(o);
        a.terms == b.terms
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::constant(Scalar::zero())
    }
    fn one() -> Self {
        Poly::constant(Scalar::one())
    }
    fn from_scalar(s: &Scalar) -> Self {
        Poly::constant(s.clone())
    }
    fn add(&self, o: &Self) -> Self {
        let (mut a, b) = self.common(o);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let (a, b) = self.common(o);
        let mut p = Poly::empty(a.vars.clone());
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                p.add_term(m1.mul(m2), c1 * c2);
            }
        }
        p
    }
    fn neg(&self) -> Self {
        self.scale(&Scalar::from_i64(-1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    /// Terms in increasing monomial order, e.g. `1 + a2*p2^2 + a3*p3^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = m
                .0
                .iter()
                .zip(self.vars.iter())
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            let mono = mono.join("*");
            // pull a sign out of real coefficients
            let (sign, mag) = if c.is_negative_rational() { ("-", -c) } else { ("+", c.clone()) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff = if mag.is_rational() { mag.to_string() } else { format!("({mag})") };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing() {
        let v = Poly::ring(&["a2", "a3", "p2", "p3"]);
        let one = Poly::one();
        let n = one.add(&v[0].mul(&v[2].pow(2))).add(&v[1].mul(&v[3].pow(2)));
        assert_eq!(n.to_string(), "1 + a2*p2^2 + a3*p3^2");
        let m = v[0].scale(&Scalar::from_ratio(-1, 2)).add(&v[1].scale(&Scalar::gauss(1, 1)));
        assert_eq!(m.to_string(), "-1/2*a2 + (1+i)*a3");
    }

    #[test]
    fn substitution_examples() {
        let v = Poly::ring(&["x", "y"]);
        let s = v[0].pow(2).substitute(&[("x", v[1].add(&Poly::one()))]).unwrap();
        assert_eq!(s.to_string(), "1 + 2*y + y^2");
        assert!(matches!(v[0].substitute(&[("z", Poly::one())]), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn division_by_zero() {
        let v = Poly::ring(&["x"]);
        assert_eq!(v[0].divide_by(&Poly::zero()).unwrap_err(), Error::DivisionByZero);
    }
}
