//! Points of `H × V`, the group `G = (C*)³ × GL₂`, its action, characters,
//! cocharacters and weights.
//!
//! All line bundles are trivialised once. With `d = det g` the action is
//!
//! ```text
//! αᵢ ↦ d · tᵢ⁻² · αᵢ
//! β  ↦ t₁t₂t₃ · d⁻² · β
//! Bᵢ ↦ tᵢ · Bᵢ · Sym²(g)⁻¹        (Bᵢ a row vector on Sym²V)
//! x  ↦ g · x
//! ```
//!
//! These formulas are pinned down by the reference weight table of the torus
//! `λ₁, λ₂, λ₃, μ` ([`REFERENCE_TABLE`]); [`weight_table`] recomputes that
//! table by actually acting.

use serde::{Deserialize, Serialize};

use crate::field::{Field, Scalar};
use crate::linalg::{join_fields, mat2_sym_square, Mat2, Vec2, Vec3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointHV {
    pub alpha: [Scalar; 3],
    pub beta: Scalar,
    /// Rows `(pᵢ, qᵢ, rᵢ)`: `Bᵢ(v) = pᵢ a² + √2 qᵢ ab + rᵢ b²` for `v = (a, b)`.
    pub b: [Vec3; 3],
    pub x: Vec2,
}

impl PointHV {
    pub fn zero() -> PointHV {
        let z = Scalar::zero;
        PointHV {
            alpha: [z(), z(), z()],
            beta: z(),
            b: [[z(), z(), z()], [z(), z(), z()], [z(), z(), z()]],
            x: [z(), z()],
        }
    }

    pub fn from_i64(alpha: [i64; 3], beta: i64, b: [[i64; 3]; 3], x: [i64; 2]) -> PointHV {
        PointHV {
            alpha: alpha.map(Scalar::from_i64),
            beta: Scalar::from_i64(beta),
            b: b.map(|r| r.map(Scalar::from_i64)),
            x: x.map(Scalar::from_i64),
        }
    }

    pub fn with_x(&self, x: Vec2) -> PointHV {
        PointHV { x, ..self.clone() }
    }

    /// `ω = α₁α₂α₃β²`.
    pub fn omega(&self) -> Scalar {
        &(&(&self.alpha[0] * &self.alpha[1]) * &self.alpha[2]) * &self.beta.square()
    }

    pub fn b_matrix(&self) -> crate::linalg::Mat3 {
        crate::linalg::Mat3::from_rows(&self.b)
    }

    /// All 15 coordinates in the order α₁ α₂ α₃ β p₁ q₁ r₁ p₂ q₂ r₂ p₃ q₃ r₃ x₁ x₂.
    pub fn coords(&self) -> Vec<Scalar> {
        let mut v: Vec<Scalar> = self.alpha.to_vec();
        v.push(self.beta.clone());
        for r in &self.b {
            v.extend(r.iter().cloned());
        }
        v.extend(self.x.iter().cloned());
        v
    }

    pub fn from_coords(c: &[Scalar]) -> PointHV {
        assert_eq!(c.len(), 15);
        let r = |k: usize| [c[k].clone(), c[k + 1].clone(), c[k + 2].clone()];
        PointHV {
            alpha: [c[0].clone(), c[1].clone(), c[2].clone()],
            beta: c[3].clone(),
            b: [r(4), r(7), r(10)],
            x: [c[13].clone(), c[14].clone()],
        }
    }

    pub fn field(&self) -> Field {
        join_fields(self.coords().iter())
    }

    /// Lift every coordinate to `f`.
    pub fn lift(&self, f: &Field) -> PointHV {
        PointHV::from_coords(&self.coords().iter().map(|c| c.lift(f)).collect::<Vec<_>>())
    }

    /// The `H`-component only (x ignored) agrees.
    pub fn same_h(&self, o: &PointHV) -> bool {
        self.alpha == o.alpha && self.beta == o.beta && self.b == o.b
    }
}

pub const COORD_NAMES: [&str; 15] = [
    "alpha1", "alpha2", "alpha3", "beta", "p1", "q1", "r1", "p2", "q2", "r2", "p3", "q3", "r3", "x1",
    "x2",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub t: [Scalar; 3],
    pub g: Mat2,
}

impl GroupElement {
    pub fn identity() -> GroupElement {
        GroupElement {
            t: [Scalar::one(), Scalar::one(), Scalar::one()],
            g: Mat2::identity(),
        }
    }

    /// Checks the invariants `tᵢ ≠ 0`, `det g ≠ 0`.
    pub fn new(t: [Scalar; 3], g: Mat2) -> Option<GroupElement> {
        if t.iter().any(Scalar::is_zero) || g.det().is_zero() {
            return None;
        }
        Some(GroupElement { t, g })
    }

    pub fn gl(g: Mat2) -> GroupElement {
        GroupElement {
            t: [Scalar::one(), Scalar::one(), Scalar::one()],
            g,
        }
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        GroupElement {
            t: [&self.t[0] * &o.t[0], &self.t[1] * &o.t[1], &self.t[2] * &o.t[2]],
            g: self.g.mul(&o.g),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            t: [self.t[0].inv(), self.t[1].inv(), self.t[2].inv()],
            g: self.g.inverse().expect("group element with singular g"),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.t.iter().all(Scalar::is_one) && self.g.is_identity()
    }

    pub fn field(&self) -> Field {
        join_fields(self.t.iter().chain(self.g.0.iter().flatten()))
    }

    /// The value of a character on this element:
    /// `t₁^θ₁ t₂^θ₂ t₃^θ₃ det(g)^θ₄`.
    pub fn character_value(&self, chi: &Character) -> Scalar {
        let [a, b, c, d] = chi.0;
        &(&(&self.t[0].pow(a) * &self.t[1].pow(b)) * &self.t[2].pow(c)) * &self.g.det().pow(d)
    }
}

pub fn act(h: &GroupElement, p: &PointHV) -> PointHV {
    let d = h.g.det();
    let m_inv = mat2_sym_square(&h.g)
        .inverse()
        .expect("Sym² of an invertible matrix is invertible");
    let alpha = [0, 1, 2].map(|i| &(&d * &h.t[i].square().inv()) * &p.alpha[i]);
    let t123 = &(&h.t[0] * &h.t[1]) * &h.t[2];
    let beta = &(&t123 * &d.square().inv()) * &p.beta;
    let b = [0, 1, 2].map(|i| {
        let row = m_inv.left_apply(&p.b[i]);
        row.map(|c| &h.t[i] * &c)
    });
    PointHV {
        alpha,
        beta,
        b,
        x: h.g.apply(&p.x),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Character(pub [i64; 4]);

impl Character {
    pub const THETA: Character = Character([1, 1, 1, 1]);
    pub const MINUS_THETA: Character = Character([-1, -1, -1, -1]);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cocharacter {
    pub a: [i64; 3],
    pub w: [i64; 2],
}

impl Cocharacter {
    pub const fn new(a: [i64; 3], w: [i64; 2]) -> Cocharacter {
        Cocharacter { a, w }
    }

    pub const fn lambda(i: usize) -> Cocharacter {
        let mut a = [0; 3];
        a[i] = 1;
        Cocharacter { a, w: [0, 0] }
    }

    pub const MU: Cocharacter = Cocharacter::new([0, 0, 0], [0, 1]);

    pub fn add(&self, o: &Cocharacter) -> Cocharacter {
        Cocharacter {
            a: [self.a[0] + o.a[0], self.a[1] + o.a[1], self.a[2] + o.a[2]],
            w: [self.w[0] + o.w[0], self.w[1] + o.w[1]],
        }
    }

    pub fn neg(&self) -> Cocharacter {
        Cocharacter {
            a: self.a.map(|v| -v),
            w: self.w.map(|v| -v),
        }
    }

    pub fn times(&self, k: i64) -> Cocharacter {
        Cocharacter {
            a: self.a.map(|v| k * v),
            w: self.w.map(|v| k * v),
        }
    }

    /// The group element `λ(s)` in the basis given by the columns of `basis`.
    pub fn at(&self, s: &Scalar, basis: &Mat2) -> GroupElement {
        let diag = Mat2::diag(s.pow(self.w[0]), s.pow(self.w[1]));
        let inv = basis.inverse().expect("singular basis");
        GroupElement {
            t: self.a.map(|k| s.pow(k)),
            g: basis.mul(&diag).mul(&inv),
        }
    }

    /// Weights of the 15 coordinates (read in the adapted basis), from the
    /// closed-form expressions. Compare [`weights_by_action`].
    pub fn weights(&self) -> [i64; 15] {
        let [a1, a2, a3] = self.a;
        let [w1, w2] = self.w;
        let dw = w1 + w2;
        let mut out = [0; 15];
        for (i, ai) in [a1, a2, a3].into_iter().enumerate() {
            out[i] = dw - 2 * ai;
            out[4 + 3 * i] = ai - 2 * w1;
            out[5 + 3 * i] = ai - w1 - w2;
            out[6 + 3 * i] = ai - 2 * w2;
        }
        out[3] = a1 + a2 + a3 - 2 * dw;
        out[13] = w1;
        out[14] = w2;
        out
    }
}

impl std::fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{}; {},{})", self.a[0], self.a[1], self.a[2], self.w[0], self.w[1])
    }
}

pub fn pair(chi: &Character, lambda: &Cocharacter) -> i64 {
    let t = chi.0;
    t[0] * lambda.a[0] + t[1] * lambda.a[1] + t[2] * lambda.a[2] + t[3] * (lambda.w[0] + lambda.w[1])
}

/// Weights of all coordinates under `λ`, measured by acting with `λ(2)` on
/// the point with every coordinate equal to 1 and reading off the powers of 2.
/// `basis` is the basis of V in which `λ` is diagonal; coordinates are read
/// after moving back to that basis.
pub fn weights_by_action(lambda: &Cocharacter, basis: &Mat2) -> [i64; 15] {
    let ones = PointHV::from_i64([1; 3], 1, [[1; 3]; 3], [1, 1]);
    let to_basis = GroupElement::gl(basis.clone());
    let start = act(&to_basis, &ones);
    let moved = act(&lambda.at(&Scalar::from_i64(2), basis), &start);
    let back = act(&to_basis.inverse(), &moved);
    let mut out = [0; 15];
    for (k, c) in back.coords().iter().enumerate() {
        out[k] = log2_exact(c).expect("weight is not a power of two");
    }
    out
}

fn log2_exact(c: &Scalar) -> Option<i64> {
    (-64..=64).find(|&w| *c == Scalar::from_i64(2).pow(w))
}

/// Rows of the reference weight table, in order.
pub fn table_rows() -> [(&'static str, Cocharacter); 7] {
    let l = Cocharacter::lambda;
    let mu = Cocharacter::MU;
    [
        ("lambda1", l(0)),
        ("lambda2", l(1)),
        ("lambda3", l(2)),
        ("mu", mu),
        ("mu+lambda1", mu.add(&l(0))),
        ("mu+lambda1+lambda2", mu.add(&l(0)).add(&l(1))),
        ("2mu+sum(lambda)", mu.times(2).add(&l(0)).add(&l(1)).add(&l(2))),
    ]
}

/// The 13 coordinate weights `(α₁, α₂, α₃, β, B₁, B₂, B₃)` of each reference row,
/// computed by acting. With `basis_adapted = false` the torus is conjugated
/// into the basis `(e₁ + e₂, e₂)` and measured there.
pub fn weight_table(basis_adapted: bool) -> Vec<(&'static str, [i64; 13])> {
    let basis = if basis_adapted {
        Mat2::identity()
    } else {
        Mat2::from_i64([[1, 0], [1, 1]])
    };
    table_rows()
        .iter()
        .map(|(name, l)| {
            let w = weights_by_action(l, &basis);
            let mut row = [0; 13];
            row.copy_from_slice(&w[..13]);
            (*name, row)
        })
        .collect()
}

/// The reference weight table. Its β entry in row `μ+λ₁` reads `0`; the
/// weights are additive in the cocharacter, so acting gives `−2 + 1 = −1`
/// there. That entry is the only disagreement, see [`table_mismatches`].
pub const REFERENCE_TABLE: [[i64; 13]; 7] = [
    [-2, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, -2, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1],
    [1, 1, 1, -2, 0, -1, -2, 0, -1, -2, 0, -1, -2],
    [-1, 1, 1, 0, 1, 0, -1, 0, -1, -2, 0, -1, -2],
    [-1, -1, 1, 0, 1, 0, -1, 1, 0, -1, 0, -1, -2],
    [0, 0, 0, -1, 1, -1, -3, 1, -1, -3, 1, -1, -3],
];

/// Column labels of the weight table.
pub const TABLE_COLUMNS: [&str; 13] = [
    "alpha1", "alpha2", "alpha3", "beta", "p1", "q1", "r1", "p2", "q2", "r2", "p3", "q3", "r3",
];

/// A disagreement between a computed weight table and [`REFERENCE_TABLE`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMismatch {
    pub row: &'static str,
    pub column: &'static str,
    pub computed: i64,
    pub reference: i64,
}

pub fn table_mismatches(computed: &[(&'static str, [i64; 13])]) -> Vec<TableMismatch> {
    let mut out = Vec::new();
    for ((name, row), reference) in computed.iter().zip(REFERENCE_TABLE) {
        for c in 0..13 {
            if row[c] != reference[c] {
                out.push(TableMismatch {
                    row: name,
                    column: TABLE_COLUMNS[c],
                    computed: row[c],
                    reference: reference[c],
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_one_by_action() {
        let misprint = vec![TableMismatch {
            row: "mu+lambda1",
            column: "beta",
            computed: -1,
            reference: 0,
        }];
        for adapted in [true, false] {
            assert_eq!(table_mismatches(&weight_table(adapted)), misprint);
        }
    }

    #[test]
    fn derived_rows_are_sums() {
        let t = weight_table(true);
        for c in 0..13 {
            assert_eq!(t[4].1[c], t[3].1[c] + t[0].1[c]);
            assert_eq!(t[5].1[c], t[3].1[c] + t[0].1[c] + t[1].1[c]);
            assert_eq!(t[6].1[c], 2 * t[3].1[c] + t[0].1[c] + t[1].1[c] + t[2].1[c]);
        }
    }

    #[test]
    fn closed_form_weights_match_action() {
        for (_, l) in table_rows() {
            assert_eq!(l.weights(), weights_by_action(&l, &Mat2::identity()));
        }
        let odd = Cocharacter::new([2, -1, 3], [-2, 1]);
        assert_eq!(odd.weights(), weights_by_action(&odd, &Mat2::identity()));
    }

    #[test]
    fn pairings() {
        assert_eq!(pair(&Character::THETA, &Cocharacter::lambda(0)), 1);
        assert_eq!(pair(&Character::THETA, &Cocharacter::MU), 1);
        assert_eq!(pair(&Character::MINUS_THETA, &Cocharacter::lambda(0)), -1);
    }
}
