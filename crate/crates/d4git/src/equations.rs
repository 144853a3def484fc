//! The defining equations of `Z ⊂ H`:
//!
//! ```text
//! (E1)  B^∨ A B   = ω J          on Sym²V
//! (E2)  B J⁻¹ B^∨ A = ω I        on ⊕ Lᵢ
//! (E3)  ∧²B       = β A B J⁻¹
//! ```
//!
//! with `A = diag(α₁, α₂, α₃)` and `ω = α₁α₂α₃β²`. In the Sym²V basis of
//! [`crate::linalg`], `J = J⁻¹ = K = [[0,0,1],[0,−1,0],[1,0,0]]`, so the
//! pairing on quadratic forms is `⟨u, v⟩ = p_u r_v + r_u p_v − q_u q_v`, and
//! the three components of `∧²B` are the cross products `B₂×B₃`, `B₃×B₁`,
//! `B₁×B₂`.
//!
//! The formulas are written once over [`Ring`] so that the chart closure check
//! can run them on polynomials.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::git::{act, GroupElement, PointHV};
use crate::linalg::{j_matrix, Mat3};
use crate::ring::{cross, dot, Ring};

/// `K(p, q, r) = (r, −q, p)`.
pub fn k_apply<R: Ring>(u: &[R; 3]) -> [R; 3] {
    [u[2].clone(), u[1].neg(), u[0].clone()]
}

/// `⟨u, v⟩ = p_u r_v + r_u p_v − q_u q_v`.
pub fn j_pairing<R: Ring>(u: &[R; 3], v: &[R; 3]) -> R {
    dot(u, &k_apply(v))
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquationResidual<R> {
    /// Upper triangle of `BᵀAB − ωK`, order (11, 12, 13, 22, 23, 33).
    pub e1: [R; 6],
    /// `α_j⟨Bᵢ, B_j⟩ − ω δᵢⱼ`, row-major.
    pub e2: [R; 9],
    /// `B₂×B₃ − βα₁K B₁`, `B₃×B₁ − βα₂K B₂`, `B₁×B₂ − βα₃K B₃`, concatenated.
    pub e3: [R; 9],
}

pub const E1_INDEX: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

impl<R: Ring> EquationResidual<R> {
    pub fn all(&self) -> Vec<R> {
        self.e1.iter().chain(&self.e2).chain(&self.e3).cloned().collect()
    }

    /// Component labels, in the order of [`EquationResidual::all`].
    pub fn labels() -> Vec<String> {
        let mut v: Vec<String> = E1_INDEX.iter().map(|(i, j)| format!("E1[{}{}]", i + 1, j + 1)).collect();
        for i in 0..3 {
            for j in 0..3 {
                v.push(format!("E2[{}{}]", i + 1, j + 1));
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                v.push(format!("E3[{}{}]", i + 1, j + 1));
            }
        }
        v
    }

    pub fn e1_zero(&self) -> bool {
        self.e1.iter().all(R::is_zero)
    }

    pub fn e2_zero(&self) -> bool {
        self.e2.iter().all(R::is_zero)
    }

    pub fn e3_zero(&self) -> bool {
        self.e3.iter().all(R::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.e1_zero() && self.e2_zero() && self.e3_zero()
    }

    /// The full symmetric E1 residual as a 3×3 array.
    pub fn e1_full(&self) -> [[R; 3]; 3] {
        let e = &self.e1;
        [
            [e[0].clone(), e[1].clone(), e[2].clone()],
            [e[1].clone(), e[3].clone(), e[4].clone()],
            [e[2].clone(), e[4].clone(), e[5].clone()],
        ]
    }
}

pub fn omega_of<R: Ring>(alpha: &[R; 3], beta: &R) -> R {
    alpha[0].mul(&alpha[1]).mul(&alpha[2]).mul(&beta.mul(beta))
}

/// Residuals of E1–E3 over any ring.
pub fn residuals_of<R: Ring>(alpha: &[R; 3], beta: &R, b: &[[R; 3]; 3]) -> EquationResidual<R> {
    let omega = omega_of(alpha, beta);
    let kmat = [[0, 0, 1], [0, -1, 0], [1, 0, 0]];
    let e1 = E1_INDEX.map(|(j, k)| {
        let mut s = R::zero();
        for i in 0..3 {
            s = s.add(&alpha[i].mul(&b[i][j]).mul(&b[i][k]));
        }
        s.sub(&omega.mul(&R::from_i64(kmat[j][k])))
    });
    let mut e2: [R; 9] = std::array::from_fn(|_| R::zero());
    for i in 0..3 {
        for j in 0..3 {
            let mut v = alpha[j].mul(&j_pairing(&b[i], &b[j]));
            if i == j {
                v = v.sub(&omega);
            }
            e2[3 * i + j] = v;
        }
    }
    let mut e3: [R; 9] = std::array::from_fn(|_| R::zero());
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let w = cross(&b[j], &b[k]);
        let rhs = k_apply(&b[i]);
        let ba = beta.mul(&alpha[i]);
        for c in 0..3 {
            e3[3 * i + c] = w[c].sub(&ba.mul(&rhs[c]));
        }
    }
    EquationResidual { e1, e2, e3 }
}

pub fn residuals(p: &PointHV) -> EquationResidual<Scalar> {
    residuals_of(&p.alpha, &p.beta, &p.b)
}

/// Membership in `Z × V`.
pub fn on_z(p: &PointHV) -> bool {
    residuals(p).is_zero()
}

fn require_z(p: &PointHV) -> Result<()> {
    if on_z(p) {
        Ok(())
    } else {
        Err(Error::ContractViolation("point does not satisfy E1–E3".into()))
    }
}

/// `Z° = Z ∩ {α₁α₂α₃β ≠ 0}`. On `Z°` the identity `det B = β³α₁α₂α₃` is
/// checked as well; a failure there is reported as an error.
pub fn in_zo(p: &PointHV) -> Result<bool> {
    require_z(p)?;
    let prod = &(&(&p.alpha[0] * &p.alpha[1]) * &p.alpha[2]) * &p.beta;
    if prod.is_zero() {
        return Ok(false);
    }
    let det = p.b_matrix().det();
    if det.is_zero() || det != &p.beta.square() * &prod {
        return Err(Error::ContractViolation(format!(
            "det B = {det} differs from β³α₁α₂α₃ at a Z° point"
        )));
    }
    Ok(true)
}

/// `α₁²α₂²α₃²β²·det B`, a semi-invariant of weight `−ϑ`.
pub fn minus_theta_semi_invariant(p: &PointHV) -> Scalar {
    let a = &(&p.alpha[0] * &p.alpha[1]) * &p.alpha[2];
    &(&a * &p.beta).square() * &p.b_matrix().det()
}

/// `f_{ij} = ⟨Bᵢ, B_j⟩`.
pub fn f_ij(p: &PointHV, i: usize, j: usize) -> Scalar {
    j_pairing(&p.b[i], &p.b[j])
}

/// The matrix `K` (= `J` = `J⁻¹` in our basis).
pub fn k_matrix() -> Mat3 {
    j_matrix()
}

fn rank_one(alpha: [Scalar; 3], l: [Scalar; 3], m: [Scalar; 3]) -> PointHV {
    PointHV {
        alpha,
        beta: Scalar::zero(),
        b: l.map(|li| m.clone().map(|mk| &li * &mk)),
        x: [Scalar::one(), Scalar::zero()],
    }
}

/// `β = 0`, `α = (1,1,1)`, `B = ℓ⊗m` with `ℓ = (1, i, 0)` isotropic for `A`
/// and `m = (0,1,0)` (the form `√2·ab`) not isotropic for `J`:
/// E1 and E3 hold, E2 fails.
pub fn witness_e1_not_e2() -> PointHV {
    let one = Scalar::one();
    rank_one(
        [one.clone(), one.clone(), one.clone()],
        [one.clone(), Scalar::i(), Scalar::zero()],
        [Scalar::zero(), one, Scalar::zero()],
    )
}

/// `β = 0`, `α = (1,1,1)`, `B = ℓ⊗m` with `m = (1,0,0)` (the form `a²`)
/// isotropic for `J` and `ℓ = (1,1,1)` not isotropic for `A`:
/// E2 and E3 hold, E1 fails.
pub fn witness_e2_not_e1() -> PointHV {
    let one = Scalar::one();
    rank_one(
        [one.clone(), one.clone(), one.clone()],
        [one.clone(), one.clone(), one.clone()],
        [one, Scalar::zero(), Scalar::zero()],
    )
}

/// A monomial `∏ f_{ij}^{e_{ij}} ∏ αᵢ^{cᵢ}` transforming by `(−ϑ)^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSemiInvariant {
    /// Exponents of `f₁₁, f₁₂, f₁₃, f₂₂, f₂₃, f₃₃`.
    pub f_exp: [u32; 6],
    pub alpha_exp: [u32; 3],
    pub k: u32,
}

const F_PAIRS: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

impl FSemiInvariant {
    pub fn eval(&self, p: &PointHV) -> Scalar {
        let mut v = Scalar::one();
        for (e, &(i, j)) in self.f_exp.iter().zip(&F_PAIRS) {
            v = &v * &f_ij(p, i, j).pow(*e as i64);
        }
        for (c, a) in self.alpha_exp.iter().zip(&p.alpha) {
            v = &v * &a.pow(*c as i64);
        }
        v
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for (e, &(i, j)) in self.f_exp.iter().zip(&F_PAIRS) {
            if *e > 0 {
                parts.push(format!("f{}{}^{}", i + 1, j + 1, e));
            }
        }
        for (i, c) in self.alpha_exp.iter().enumerate() {
            if *c > 0 {
                parts.push(format!("a{}^{}", i + 1, c));
            }
        }
        parts.join("*")
    }
}

/// Search the `f`/`α` monomials of weight `(−ϑ)^k`, `k ≤ k_max`, for one that
/// does not vanish at `p`.
///
/// Under `(t, g)`, `f_{ij}` scales by `tᵢt_j·det(g)⁻²` and `αᵢ` by
/// `det(g)·tᵢ⁻²`, so for `f`-degree `e` the `t`-weights force
/// `cᵢ = (k + degᵢ f)/2` and the `det` weight forces `e = 5k/2`.
pub fn find_f_semi_invariant(p: &PointHV, k_max: u32) -> Option<FSemiInvariant> {
    for k in (2..=k_max).step_by(2) {
        let e = 5 * k / 2;
        let mut found = None;
        compositions(e, 6, &mut |f_exp: &[u32]| {
            if found.is_some() {
                return;
            }
            let mut deg = [0u32; 3];
            for (ex, &(i, j)) in f_exp.iter().zip(&F_PAIRS) {
                deg[i] += ex;
                deg[j] += ex;
            }
            if deg.iter().any(|d| (k + d) % 2 != 0) {
                return;
            }
            let cand = FSemiInvariant {
                f_exp: f_exp.try_into().unwrap(),
                alpha_exp: deg.map(|d| (k + d) / 2),
                k,
            };
            if !cand.eval(p).is_zero() {
                found = Some(cand);
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

fn compositions(total: u32, parts: usize, f: &mut dyn FnMut(&[u32])) {
    fn rec(left: u32, slot: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if slot == 1 {
            cur.push(left);
            f(cur);
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(left - v, slot - 1, cur, f);
            cur.pop();
        }
    }
    rec(total, parts, &mut Vec::new(), f)
}

/// The one-parameter family `g = diag(u, 1/u)`, `t = 1`, which fixes the
/// E1∧¬E2 witness: checked at several `u`.
pub fn witness_has_infinite_stabilizer(p: &PointHV) -> bool {
    (2..6).all(|u| {
        let u = Scalar::from_i64(u);
        let h = GroupElement::gl(crate::linalg::Mat2::diag(u.clone(), u.inv()));
        act(&h, p).same_h(p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let r1 = Scalar::from_i64(7);
        let u = [Scalar::one(), Scalar::zero(), r1.clone()];
        assert_eq!(j_pairing(&u, &u), Scalar::from_i64(14));
        let v = [Scalar::from_i64(2), Scalar::from_i64(3), Scalar::from_i64(5)];
        assert_eq!(j_pairing(&u, &v), &Scalar::from_i64(5) + &(&r1 * &Scalar::from_i64(2)));
        assert_eq!(j_pairing(&u, &v), j_pairing(&v, &u));
    }

    #[test]
    fn zero_point_is_on_z() {
        assert!(residuals(&PointHV::zero()).is_zero());
        assert!(!in_zo(&PointHV::zero()).unwrap());
    }

    #[test]
    fn witnesses() {
        let w = residuals(&witness_e1_not_e2());
        assert!(w.e1_zero() && w.e3_zero() && !w.e2_zero());
        let w = residuals(&witness_e2_not_e1());
        assert!(w.e2_zero() && w.e3_zero() && !w.e1_zero());
        for p in [witness_e1_not_e2(), witness_e2_not_e1()] {
            let m = p.b_matrix();
            assert!(m.det().is_zero() && m.adj().is_zero() && !m.is_zero());
        }
    }

    #[test]
    fn f_semi_invariant_at_witness() {
        let p = witness_e1_not_e2();
        let s = find_f_semi_invariant(&p, 4).unwrap();
        assert!(!s.eval(&p).is_zero());
        assert!(witness_has_infinite_stabilizer(&p));
    }
}
