//! The handful of ring operations that the residual formulas need, so the same
//! code evaluates equations at a point and symbolically over [`Poly`].
//!
//! [`Poly`]: crate::poly::Poly

use crate::field::Scalar;

pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_scalar(s: &Scalar) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn from_i64(n: i64) -> Self {
        Self::from_scalar(&Scalar::from_i64(n))
    }

    fn scale(&self, s: &Scalar) -> Self {
        self.mul(&Self::from_scalar(s))
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

/// `Σ aₖ bₖ` over a ring.
pub fn dot<R: Ring>(a: &[R], b: &[R]) -> R {
    a.iter().zip(b).fold(R::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

pub fn cross<R: Ring>(u: &[R; 3], v: &[R; 3]) -> [R; 3] {
    [
        u[1].mul(&v[2]).sub(&u[2].mul(&v[1])),
        u[2].mul(&v[0]).sub(&u[0].mul(&v[2])),
        u[0].mul(&v[1]).sub(&u[1].mul(&v[0])),
    ]
}
