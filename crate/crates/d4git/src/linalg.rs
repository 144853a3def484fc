//! Small dense vectors and matrices over [`Scalar`].
//!
//! Coordinates on Sym²V are taken in the ordered basis
//! `(e₁², √2·e₁e₂, e₂²)`. In this basis the determinant pairing `J` on
//! Sym²V (the one with `J(v², w²) = det(v, w)²`) is the antidiagonal matrix
//! `[[0,0,1],[0,−1,0],[1,0,0]]`, which is its own inverse and has
//! determinant 1. A quadratic form with coordinates `(p, q, r)` is
//! `p a² + √2 q ab + r b²`.

use std::fmt;

use crate::field::{Field, Scalar};

pub type Vec2 = [Scalar; 2];
pub type Vec3 = [Scalar; 3];

pub fn zero2() -> Vec2 {
    [Scalar::zero(), Scalar::zero()]
}

pub fn vec2(a: i64, b: i64) -> Vec2 {
    [Scalar::from_i64(a), Scalar::from_i64(b)]
}

pub fn dot3(u: &Vec3, v: &Vec3) -> Scalar {
    &(&(&u[0] * &v[0]) + &(&u[1] * &v[1])) + &(&u[2] * &v[2])
}

pub fn cross3(u: &Vec3, v: &Vec3) -> Vec3 {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

pub fn scale3(s: &Scalar, v: &Vec3) -> Vec3 {
    [s * &v[0], s * &v[1], s * &v[2]]
}

pub fn is_zero2(v: &Vec2) -> bool {
    v[0].is_zero() && v[1].is_zero()
}

pub fn is_zero3(v: &Vec3) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `det[u | v]` for column vectors.
pub fn det2_cols(u: &Vec2, v: &Vec2) -> Scalar {
    &(&u[0] * &v[1]) - &(&u[1] * &v[0])
}

#[derive(Clone, PartialEq, Eq)]
pub struct Mat2(pub [[Scalar; 2]; 2]);

#[derive(Clone, PartialEq, Eq)]
pub struct Mat3(pub [[Scalar; 3]; 3]);

impl Mat2 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Mat2 {
        Mat2([[a, b], [c, d]])
    }

    pub fn from_i64(m: [[i64; 2]; 2]) -> Mat2 {
        Mat2(m.map(|r| r.map(Scalar::from_i64)))
    }

    pub fn identity() -> Mat2 {
        Mat2::from_i64([[1, 0], [0, 1]])
    }

    pub fn diag(a: Scalar, d: Scalar) -> Mat2 {
        Mat2::new(a, Scalar::zero(), Scalar::zero(), d)
    }

    pub fn scalar(s: &Scalar) -> Mat2 {
        Mat2::diag(s.clone(), s.clone())
    }

    /// Matrix with the given columns.
    pub fn from_cols(u: &Vec2, v: &Vec2) -> Mat2 {
        Mat2::new(u[0].clone(), v[0].clone(), u[1].clone(), v[1].clone())
    }

    pub fn col(&self, j: usize) -> Vec2 {
        [self.0[0][j].clone(), self.0[1][j].clone()]
    }

    pub fn det(&self) -> Scalar {
        let m = &self.0;
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
    }

    pub fn trace(&self) -> Scalar {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn adj(&self) -> Mat2 {
        let m = &self.0;
        Mat2::new(m[1][1].clone(), -&m[0][1], -&m[1][0], m[0][0].clone())
    }

    pub fn inverse(&self) -> Option<Mat2> {
        let d = self.det().try_inv().ok()?;
        Some(self.adj().scale(&d))
    }

    pub fn scale(&self, s: &Scalar) -> Mat2 {
        Mat2(self.0.clone().map(|r| r.map(|x| s * &x)))
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        let m = &self.0;
        [
            &(&m[0][0] * &v[0]) + &(&m[0][1] * &v[1]),
            &(&m[1][0] * &v[0]) + &(&m[1][1] * &v[1]),
        ]
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &self.0[i][j] + &o.0[i][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &self.0[i][j] - &o.0[i][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.sub(&Mat2::identity()).is_zero()
    }

    pub fn transpose(&self) -> Mat2 {
        let m = &self.0;
        Mat2::new(m[0][0].clone(), m[1][0].clone(), m[0][1].clone(), m[1][1].clone())
    }

    /// Column vector times row vector.
    pub fn outer(col: &Vec2, row: &Vec2) -> Mat2 {
        Mat2([
            [&col[0] * &row[0], &col[0] * &row[1]],
            [&col[1] * &row[0], &col[1] * &row[1]],
        ])
    }

    /// Smallest field containing every entry.
    pub fn field(&self) -> Field {
        join_fields(self.0.iter().flatten())
    }
}

pub fn join_fields<'a>(xs: impl IntoIterator<Item = &'a Scalar>) -> Field {
    xs.into_iter().fold(Field::gaussian(), |f, x| {
        f.join(x.reduce().field()).expect("entries from incompatible fields")
    })
}

impl Mat3 {
    pub fn from_i64(m: [[i64; 3]; 3]) -> Mat3 {
        Mat3(m.map(|r| r.map(Scalar::from_i64)))
    }

    pub fn identity() -> Mat3 {
        Mat3::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn zero() -> Mat3 {
        Mat3::from_i64([[0; 3]; 3])
    }

    pub fn diag(d: &Vec3) -> Mat3 {
        let mut m = Mat3::zero();
        for k in 0..3 {
            m.0[k][k] = d[k].clone();
        }
        m
    }

    pub fn from_rows(rows: &[Vec3; 3]) -> Mat3 {
        Mat3(rows.clone())
    }

    pub fn row(&self, i: usize) -> Vec3 {
        self.0[i].clone()
    }

    pub fn col(&self, j: usize) -> Vec3 {
        [self.0[0][j].clone(), self.0[1][j].clone(), self.0[2][j].clone()]
    }

    pub fn det(&self) -> Scalar {
        dot3(&self.row(0), &cross3(&self.row(1), &self.row(2)))
    }

    /// Adjugate (transposed cofactor matrix).
    pub fn adj(&self) -> Mat3 {
        let r = [self.row(0), self.row(1), self.row(2)];
        // cofactor rows are cross products of the other two rows
        let c0 = cross3(&r[1], &r[2]);
        let c1 = cross3(&r[2], &r[0]);
        let c2 = cross3(&r[0], &r[1]);
        Mat3::from_rows(&[c0, c1, c2]).transpose()
    }

    pub fn inverse(&self) -> Option<Mat3> {
        let d = self.det().try_inv().ok()?;
        Some(self.adj().scale(&d))
    }

    pub fn transpose(&self) -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i].clone();
            }
        }
        m
    }

    pub fn scale(&self, s: &Scalar) -> Mat3 {
        Mat3(self.0.clone().map(|r| r.map(|x| s * &x)))
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = dot3(&self.row(i), &o.col(j));
            }
        }
        m
    }

    pub fn add(&self, o: &Mat3) -> Mat3 {
        let mut m = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = &self.0[i][j] + &o.0[i][j];
            }
        }
        m
    }

    pub fn sub(&self, o: &Mat3) -> Mat3 {
        self.add(&o.scale(&Scalar::from_i64(-1)))
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &Vec3) -> Vec3 {
        [
            dot3(v, &self.col(0)),
            dot3(v, &self.col(1)),
            dot3(v, &self.col(2)),
        ]
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        [dot3(&self.row(0), v), dot3(&self.row(1), v), dot3(&self.row(2), v)]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Scalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| i == j || self.0[i][j].is_zero()))
    }

    pub fn field(&self) -> Field {
        join_fields(self.0.iter().flatten())
    }
}

/// The Gram matrix of the determinant pairing on Sym²V.
pub fn j_matrix() -> Mat3 {
    Mat3::from_i64([[0, 0, 1], [0, -1, 0], [1, 0, 0]])
}

/// The action of `g` on Sym²V in the basis `(e₁², √2·e₁e₂, e₂²)`.
///
/// Columns are the images of the basis vectors: for `g = [[a,b],[c,d]]`,
/// `e₁² ↦ (a², √2ac, c²)`, `√2e₁e₂ ↦ (√2ab, ad+bc, √2cd)`,
/// `e₂² ↦ (b², √2bd, d²)`.
pub fn mat2_sym_square(g: &Mat2) -> Mat3 {
    let [[a, b], [c, d]] = &g.0;
    let s = Scalar::sqrt2();
    Mat3([
        [a * a, &s * &(a * b), b * b],
        [&s * &(a * c), &(a * d) + &(b * c), &s * &(b * d)],
        [c * c, &s * &(c * d), d * d],
    ])
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1])
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}, {}, {}]", r[0], r[1], r[2])?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_square_of_diagonal_torus() {
        let t = Scalar::from_i64(5);
        let m = mat2_sym_square(&Mat2::diag(Scalar::one(), t.clone()));
        assert_eq!(m, Mat3::diag(&[Scalar::one(), t.clone(), t.square()]));
        assert_eq!(mat2_sym_square(&Mat2::identity()), Mat3::identity());
    }

    #[test]
    fn sym_square_scales_j_by_det_squared() {
        let g = Mat2::from_i64([[2, -1], [3, 4]]);
        let m = mat2_sym_square(&g);
        let lhs = m.transpose().mul(&j_matrix()).mul(&m);
        assert_eq!(lhs, j_matrix().scale(&g.det().square()));
    }

    #[test]
    fn adjugate_identity() {
        let m = Mat3::from_i64([[1, 2, 0], [-1, 3, 5], [2, 2, 7]]);
        assert_eq!(m.adj().mul(&m), Mat3::identity().scale(&m.det()));
        let g = Mat2::from_i64([[1, 2], [3, 4]]);
        assert_eq!(g.adj().mul(&g), Mat2::scalar(&g.det()));
    }
}
