//! The framed affine-D4 quiver: a framing vertex `C`, a central vertex `V`
//! and three legs `Lᵢ`, with maps
//!
//! ```text
//! E₀: C → V,  D₀: V → C,  Dᵢ: V → Lᵢ,  Eᵢ: Lᵢ → V.
//! ```
//!
//! A point of `H × V` gives `E₀ = x`, `Dᵢ = Bᵢ(x, −)` (half-polarised),
//! `Eᵢ = αᵢ·(Dᵢ)^∨` through `(a, b)^∨ ↦ (−b, a)`, and
//! `D₀ = (ω/2)·det(x, −)`. With these choices the central relation
//! `Σ EᵢDᵢ − E₀D₀` is, up to the rotation `Ω = [[0,1],[−1,0]]`, the E1
//! residual contracted with `x²`.

use crate::equations::residuals;
use crate::field::Scalar;
use crate::git::PointHV;
use crate::linalg::{det2_cols, is_zero2, Mat2, Vec2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    pub e0: Vec2,
    /// Covector, `D₀(v) = d0[0] v₁ + d0[1] v₂`.
    pub d0: Vec2,
    pub d: [Vec2; 3],
    pub e: [Vec2; 3],
}

/// `(a, b)^∨ ↦ (−b, a)`.
pub fn dual_to_vector(c: &Vec2) -> Vec2 {
    [-&c[1], c[0].clone()]
}

/// `Bᵢ(x, −)` as a covector, for `B = (p, q, r)` meaning `p a² + √2 q ab + r b²`.
pub fn contract(b: &[Scalar; 3], x: &Vec2) -> Vec2 {
    let h = Scalar::sqrt2().inv();
    [
        &(&b[0] * &x[0]) + &(&(&b[1] * &h) * &x[1]),
        &(&(&b[1] * &h) * &x[0]) + &(&b[2] * &x[1]),
    ]
}

pub fn build_rep(p: &PointHV) -> QuiverRep {
    let d: [Vec2; 3] = [0, 1, 2].map(|i| contract(&p.b[i], &p.x));
    let e = [0, 1, 2].map(|i| dual_to_vector(&d[i]).map(|c| &p.alpha[i] * &c));
    let half_omega = &p.omega() * &Scalar::from_ratio(1, 2);
    QuiverRep {
        e0: p.x.clone(),
        d0: [-&(&half_omega * &p.x[1]), &half_omega * &p.x[0]],
        d,
        e,
    }
}

fn pairing(cov: &Vec2, v: &Vec2) -> Scalar {
    &(&cov[0] * &v[0]) + &(&cov[1] * &v[1])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreprojectiveResidual {
    /// `DᵢEᵢ`.
    pub legs: [Scalar; 3],
    /// `Σ EᵢDᵢ − E₀D₀`.
    pub center: Mat2,
}

impl PreprojectiveResidual {
    pub fn is_zero(&self) -> bool {
        self.legs.iter().all(Scalar::is_zero) && self.center.is_zero()
    }
}

pub fn preprojective_residual(r: &QuiverRep) -> PreprojectiveResidual {
    let legs = [0, 1, 2].map(|i| pairing(&r.d[i], &r.e[i]));
    let mut center = Mat2::outer(&r.e0, &r.d0).scale(&Scalar::from_i64(-1));
    for i in 0..3 {
        center = center.add(&Mat2::outer(&r.e[i], &r.d[i]));
    }
    PreprojectiveResidual { legs, center }
}

/// The E1 residual evaluated on `x·v` for `v = e₁, e₂`: the 2×2 matrix
/// `G_ab = E1(x·e_a, x·e_b)`, where `x·v` is the symmetric product in Sym²V.
pub fn e1_contracted(p: &PointHV) -> Mat2 {
    let h = Scalar::sqrt2().inv();
    let x = &p.x;
    let z = Scalar::zero();
    let s = [
        [x[0].clone(), &x[1] * &h, z.clone()],
        [z, &x[0] * &h, x[1].clone()],
    ];
    let e1 = residuals(p).e1_full();
    let form = |u: &[Scalar; 3], v: &[Scalar; 3]| {
        let mut acc = Scalar::zero();
        for j in 0..3 {
            for k in 0..3 {
                acc = &acc + &(&(&u[j] * &e1[j][k]) * &v[k]);
            }
        }
        acc
    };
    Mat2::new(form(&s[0], &s[0]), form(&s[0], &s[1]), form(&s[1], &s[0]), form(&s[1], &s[1]))
}

/// `Ω = [[0,1],[−1,0]]`; the identity `Ω·(central residual) = e1_contracted`
/// holds on all of `H × V`.
pub fn omega_rotation() -> Mat2 {
    Mat2::from_i64([[0, 1], [-1, 0]])
}

/// King stability for the framing character: generated from vertex 0, i.e.
/// every `Dᵢ ≠ 0` and `V = span(E₀, im Eᵢ)` for some `i`.
pub fn king_stable(r: &QuiverRep) -> bool {
    r.d.iter().all(|d| !is_zero2(d)) && r.e.iter().any(|e| !det2_cols(&r.e0, e).is_zero())
}

/// Act on a representation by `g ∈ GL(V)` and `s ∈ (C*)³` on the legs.
pub fn transport(r: &QuiverRep, g: &Mat2, s: &[Scalar; 3]) -> QuiverRep {
    let gi = g.inverse().expect("singular g");
    let cov = |c: &Vec2| gi.transpose().apply(c);
    QuiverRep {
        e0: g.apply(&r.e0),
        d0: cov(&r.d0),
        d: [0, 1, 2].map(|i| cov(&r.d[i]).map(|c| &s[i] * &c)),
        e: [0, 1, 2].map(|i| g.apply(&r.e[i]).map(|c| &c * &s[i].inv())),
    }
}

/// Normalize a representation at leg `i` to `E₀ = (1,0)`, `Dᵢ = (1,0)`,
/// `Eᵢ = (0,1)` using `GL(V) × GL(Lᵢ)` (the other legs untouched). Needs
/// `E₀, Eᵢ` to span `V` and `DᵢE₀ ≠ 0`.
pub fn normalize_rep(r: &QuiverRep, i: usize) -> Option<(QuiverRep, Mat2, Scalar)> {
    let p = Mat2::from_cols(&r.e0, &r.e[i]);
    let g0 = p.inverse()?;
    let a = pairing(&r.d[i], &r.e0);
    if a.is_zero() {
        return None;
    }
    let g = Mat2::diag(Scalar::one(), a.inv()).mul(&g0);
    let mut s = [Scalar::one(), Scalar::one(), Scalar::one()];
    s[i] = a.inv();
    Some((transport(r, &g, &s), g, s[i].clone()))
}
