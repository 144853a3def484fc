//! The charts `Uᵢ` of the `ϑ`-quotient and their quiver-side counterparts.
//!
//! A `ϑ`-stable point whose spanning condition holds at leg `i` is moved by
//! `GL(Lᵢ) × GL(V)` to `x = (1,0)`, `αᵢ = 1`, `Bᵢ = (1, 0, r)`. Writing
//! `(j, k) = (i+1, i+2)` cyclically, the equations then reduce to
//!
//! ```text
//! 2r = ω = β²α_jα_k,   r_j = −r p_j,   r_k = −r p_k,
//! q_j = β α_k p_k,     q_k = −β α_j p_j,
//! 1 + α_j p_j² + α_k p_k² = 0.
//! ```
//!
//! The normalisation is rational: with `P = [x | Eᵢ]`, acting by `P⁻¹` makes
//! `qᵢ = 0` and `αᵢpᵢ = 1`, and then `g = diag(1, αᵢ)`, `tᵢ = αᵢ` finish the
//! job. No square roots are needed, so the field never grows here.
//!
//! Quiver side ("hat" coordinates): `E₀ = (1,0)`, `Dᵢ = (1,0)`, `Eᵢ = (0,1)`,
//! `D_j = (p̂_j, q̂_j)`, `E_j = α̂_j(−q̂_j, p̂_j)`, `D₀ = (0, ω̂)`. The
//! dictionary is `α̂ = α`, `p̂ = p`, `q̂ = q/√2`, `β̂ = β/√2`, `ω̂ = ω/2`.

use serde::Serialize;

use crate::equations::{on_z, residuals_of, EquationResidual};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::git::{act, GroupElement, PointHV};
use crate::linalg::{Mat2, Vec2};
use crate::poly::Poly;
use crate::quiver::{build_rep, normalize_rep, QuiverRep};
use crate::ring::Ring;

pub fn legs(i: usize) -> (usize, usize) {
    ((i + 1) % 3, (i + 2) % 3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartPoint {
    /// 0-based chart index.
    pub index: usize,
    /// The normalised point.
    pub point: PointHV,
    /// `act(normalizer, original) = point`.
    pub normalizer: GroupElement,
}

fn not_in_chart(index: usize, reason: &str) -> Error {
    Error::NotInChart {
        index: index + 1,
        reason: reason.into(),
    }
}

pub fn normalize(p: &PointHV, i: usize) -> Result<ChartPoint> {
    if !on_z(p) {
        return Err(Error::ContractViolation("normalize needs a point of Z × V".into()));
    }
    if p.alpha[i].is_zero() {
        return Err(not_in_chart(i, "alpha_i = 0"));
    }
    let rep = build_rep(p);
    let frame = Mat2::from_cols(&p.x, &rep.e[i]);
    let g1 = frame
        .inverse()
        .ok_or_else(|| not_in_chart(i, "x and the image of E_i do not span V"))?;
    let h1 = GroupElement::gl(g1);
    let mid = act(&h1, p);
    let a = mid.alpha[i].clone();
    let mut t = [Scalar::one(), Scalar::one(), Scalar::one()];
    t[i] = a.clone();
    let h2 = GroupElement {
        t,
        g: Mat2::diag(Scalar::one(), a),
    };
    let normalizer = h2.mul(&h1);
    let point = act(&normalizer, p);
    let c = ChartPoint {
        index: i,
        point,
        normalizer,
    };
    let bad = c.violations();
    if bad.is_empty() {
        Ok(c)
    } else {
        Err(not_in_chart(i, &format!("chart relations fail: {}", bad.join(", "))))
    }
}

impl ChartPoint {
    pub fn r(&self) -> &Scalar {
        &self.point.b[self.index][2]
    }

    /// Names of violated chart relations (empty when all hold).
    pub fn violations(&self) -> Vec<String> {
        let i = self.index;
        let (j, k) = legs(i);
        let p = &self.point;
        let one = Scalar::one();
        let zero = Scalar::zero();
        let r = self.r();
        let (pj, qj, rj) = (&p.b[j][0], &p.b[j][1], &p.b[j][2]);
        let (pk, qk, rk) = (&p.b[k][0], &p.b[k][1], &p.b[k][2]);
        let mut bad = Vec::new();
        let mut check = |ok: bool, name: &str| {
            if !ok {
                bad.push(name.to_string());
            }
        };
        check(p.x == [one.clone(), zero.clone()], "x = (1,0)");
        check(p.alpha[i] == one, "alpha_i = 1");
        check(p.b[i][0] == one && p.b[i][1].is_zero(), "B_i = (1,0,r)");
        let two_r = r * &Scalar::from_i64(2);
        check(two_r == p.omega(), "2r = omega");
        check(two_r == &p.beta.square() * &(&p.alpha[j] * &p.alpha[k]), "omega = beta^2 a_j a_k");
        check(*rj == -(r * pj), "r_j = -r p_j");
        check(*rk == -(r * pk), "r_k = -r p_k");
        check(*qj == &(&p.beta * &p.alpha[k]) * pk, "q_j = beta a_k p_k");
        check(*qk == -(&(&p.beta * &p.alpha[j]) * pj), "q_k = -beta a_j p_j");
        let n = &(&one + &(&p.alpha[j] * &pj.square())) + &(&p.alpha[k] * &pk.square());
        check(n.is_zero(), "1 + a_j p_j^2 + a_k p_k^2 = 0");
        check(!(pj.is_zero() && qj.is_zero()), "(p_j,q_j) != 0");
        check(!(pk.is_zero() && qk.is_zero()), "(p_k,q_k) != 0");
        bad
    }

    /// Functions invariant under the residual `GL(L_j) × GL(L_k)`:
    /// `α_jp_j², α_jp_jq_j, α_jq_j², α_jp_jr_j` (same for `k`), `r`, and
    /// `βα_jα_kp_jp_k`.
    pub fn torus_invariants(&self) -> Vec<Scalar> {
        let (j, k) = legs(self.index);
        let p = &self.point;
        let mut out = Vec::new();
        for l in [j, k] {
            let a = &p.alpha[l];
            let [pl, ql, rl] = &p.b[l];
            out.push(&(a * pl) * pl);
            out.push(&(a * pl) * ql);
            out.push(&(a * ql) * ql);
            out.push(&(a * pl) * rl);
        }
        out.push(self.r().clone());
        out.push(&(&(&p.beta * &p.alpha[j]) * &p.alpha[k]) * &(&p.b[j][0] * &p.b[k][0]));
        out
    }
}

/// Chart coordinates on the quiver side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatPoint {
    pub index: usize,
    /// `(α̂_j, α̂_k)`.
    pub alpha: [Scalar; 2],
    pub p: [Scalar; 2],
    pub q: [Scalar; 2],
    pub beta: Scalar,
    pub omega: Scalar,
}

impl HatPoint {
    /// Left-hand sides of the three central-vertex equations:
    /// `1 + Σα̂p̂²`, `Σα̂p̂q̂`, `Σα̂q̂² + ω̂`.
    pub fn central_equations(&self) -> [Scalar; 3] {
        let t = |f: &dyn Fn(usize) -> Scalar| &f(0) + &f(1);
        [
            &Scalar::one() + &t(&|l| &self.alpha[l] * &self.p[l].square()),
            t(&|l| &(&self.alpha[l] * &self.p[l]) * &self.q[l]),
            &t(&|l| &self.alpha[l] * &self.q[l].square()) + &self.omega,
        ]
    }

    pub fn violations(&self) -> Vec<String> {
        let mut bad: Vec<String> = self
            .central_equations()
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, _)| format!("central equation {}", k + 1))
            .collect();
        let [aj, ak] = &self.alpha;
        if self.q[0] != &(&self.beta * ak) * &self.p[1] || self.q[1] != -(&(&self.beta * aj) * &self.p[0]) {
            bad.push("q-hat formula".into());
        }
        if self.omega != &(&self.beta.square() * aj) * ak {
            bad.push("omega-hat = beta-hat^2 a_j a_k".into());
        }
        bad
    }

    /// The normalised representation these coordinates describe.
    pub fn rep(&self) -> QuiverRep {
        let (j, k) = legs(self.index);
        let z = Scalar::zero;
        let o = Scalar::one;
        let mut d: [Vec2; 3] = [[z(), z()], [z(), z()], [z(), z()]];
        let mut e = d.clone();
        d[self.index] = [o(), z()];
        e[self.index] = [z(), o()];
        for (slot, l) in [(0, j), (1, k)] {
            d[l] = [self.p[slot].clone(), self.q[slot].clone()];
            e[l] = [-&(&self.alpha[slot] * &self.q[slot]), &self.alpha[slot] * &self.p[slot]];
        }
        QuiverRep {
            e0: [o(), z()],
            d0: [z(), self.omega.clone()],
            d,
            e,
        }
    }
}

pub fn to_quiver_chart(c: &ChartPoint) -> Result<HatPoint> {
    let bad = c.violations();
    if !bad.is_empty() {
        return Err(not_in_chart(c.index, &bad.join(", ")));
    }
    let (j, k) = legs(c.index);
    let p = &c.point;
    let h = Scalar::sqrt2().inv();
    Ok(HatPoint {
        index: c.index,
        alpha: [p.alpha[j].clone(), p.alpha[k].clone()],
        p: [p.b[j][0].clone(), p.b[k][0].clone()],
        q: [&p.b[j][1] * &h, &p.b[k][1] * &h],
        beta: &p.beta * &h,
        omega: c.r().clone(),
    })
}

/// Inverse of [`to_quiver_chart`]; the normalizer of the result is the identity.
pub fn from_quiver_chart(hat: &HatPoint) -> Result<ChartPoint> {
    let bad = hat.violations();
    if !bad.is_empty() {
        return Err(not_in_chart(hat.index, &bad.join(", ")));
    }
    let i = hat.index;
    let (j, k) = legs(i);
    let s2 = Scalar::sqrt2();
    let r = hat.omega.clone();
    let mut point = PointHV::zero();
    point.x = [Scalar::one(), Scalar::zero()];
    point.alpha[i] = Scalar::one();
    point.beta = &hat.beta * &s2;
    point.b[i] = [Scalar::one(), Scalar::zero(), r.clone()];
    for (slot, l) in [(0, j), (1, k)] {
        point.alpha[l] = hat.alpha[slot].clone();
        point.b[l] = [hat.p[slot].clone(), &hat.q[slot] * &s2, -(&r * &hat.p[slot])];
    }
    let c = ChartPoint {
        index: i,
        point,
        normalizer: GroupElement::identity(),
    };
    let bad = c.violations();
    if bad.is_empty() {
        Ok(c)
    } else {
        Err(not_in_chart(i, &bad.join(", ")))
    }
}

/// Normalise `build_rep(p)` on the quiver side and read off hat coordinates.
pub fn quiver_side_hat(p: &PointHV, i: usize) -> Result<HatPoint> {
    let (rep, _, _) = normalize_rep(&build_rep(p), i)
        .ok_or_else(|| not_in_chart(i, "representation not normalisable at this leg"))?;
    let (j, k) = legs(i);
    let mut alpha = [Scalar::zero(), Scalar::zero()];
    for (slot, l) in [(0, j), (1, k)] {
        let [pp, qq] = &rep.d[l];
        alpha[slot] = if !pp.is_zero() {
            &rep.e[l][1] / pp
        } else if !qq.is_zero() {
            -(&rep.e[l][0] / qq)
        } else {
            return Err(not_in_chart(i, "D_j = 0"));
        };
    }
    let pvals = [rep.d[j][0].clone(), rep.d[k][0].clone()];
    let qvals = [rep.d[j][1].clone(), rep.d[k][1].clone()];
    // β̂ from q̂_j = β̂ α̂_k p̂_k or q̂_k = −β̂ α̂_j p̂_j
    let den_k = &alpha[1] * &pvals[1];
    let beta = if !den_k.is_zero() {
        &qvals[0] / &den_k
    } else {
        -(&qvals[1] / &(&alpha[0] * &pvals[0]))
    };
    Ok(HatPoint {
        index: i,
        alpha,
        p: pvals,
        q: qvals,
        beta,
        omega: rep.d0[1].clone(),
    })
}

// ---- symbolic closure -----------------------------------------------------

pub const CHART_VARS: [&str; 10] = ["a2", "a3", "b", "p2", "p3", "q2", "q3", "r1", "r2", "r3"];

#[derive(Clone, Debug, Serialize)]
pub struct ClosureComponent {
    pub component: String,
    pub after_substitution: String,
    pub quotient: String,
    pub remainder: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub divisor: String,
    pub components: Vec<ClosureComponent>,
    pub passed: usize,
    pub total: usize,
}

impl ClosureReport {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

/// The generic chart-1 point as polynomials, and the divisor `N`.
pub fn chart_polys() -> (EquationResidual<Poly>, Vec<(&'static str, Poly)>, Poly) {
    let v = Poly::ring(&CHART_VARS);
    let [a2, a3, b, p2, p3, q2, q3, r1, r2, r3] = <[Poly; 10]>::try_from(v).unwrap();
    let one = Poly::one();
    let zero = Poly::zero();
    let res = residuals_of(
        &[one.clone(), a2.clone(), a3.clone()],
        &b,
        &[
            [one.clone(), zero, r1],
            [p2.clone(), q2, r2],
            [p3.clone(), q3, r3],
        ],
    );
    let half = Scalar::from_ratio(1, 2);
    let r1v = b.mul(&b).mul(&a2).mul(&a3).scale(&half);
    let bindings = vec![
        ("r2", r1v.mul(&p2).neg()),
        ("r3", r1v.mul(&p3).neg()),
        ("q2", b.mul(&a3).mul(&p3)),
        ("q3", b.mul(&a2).mul(&p2).neg()),
        ("r1", r1v),
    ];
    let n = one.add(&a2.mul(&p2).mul(&p2)).add(&a3.mul(&p3).mul(&p3));
    (res, bindings, n)
}

/// Substitute the chart relations into all 24 residual components and reduce
/// each modulo `N = 1 + α₂p₂² + α₃p₃²`.
pub fn chart_closure_check() -> Result<ClosureReport> {
    let (res, bindings, n) = chart_polys();
    let labels = EquationResidual::<Poly>::labels();
    let mut components = Vec::new();
    for (label, comp) in labels.into_iter().zip(res.all()) {
        let s = comp.substitute(&bindings)?;
        let (q, r) = s.divide_by(&n)?;
        components.push(ClosureComponent {
            component: label,
            after_substitution: s.to_string(),
            quotient: q.to_string(),
            remainder: r.to_string(),
            ok: r.is_zero(),
        });
    }
    let passed = components.iter().filter(|c| c.ok).count();
    Ok(ClosureReport {
        divisor: n.to_string(),
        total: components.len(),
        passed,
        components,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HatCollapse {
    /// `(α̂₃p̂₃, −α̂₂p̂₂)` spans the solutions of the middle equation.
    pub kernel_vector_ok: bool,
    /// The middle equation vanishes identically after `q̂ = β̂(α̂₃p̂₃, −α̂₂p̂₂)`.
    pub middle_equation_ok: bool,
    /// The last equation becomes `ω̂ − β̂²α̂₂α̂₃` modulo `N̂`.
    pub omega_relation_ok: bool,
    pub omega_relation_remainder: String,
}

impl HatCollapse {
    pub fn ok(&self) -> bool {
        self.kernel_vector_ok && self.middle_equation_ok && self.omega_relation_ok
    }
}

/// The three central-vertex equations of the hat chart collapse to the
/// `q̂`-formula and `ω̂ = β̂²α̂₂α̂₃`.
pub fn hat_collapse_check() -> Result<HatCollapse> {
    let v = Poly::ring(&["ha2", "ha3", "hb", "hp2", "hp3", "hq2", "hq3", "hw"]);
    let [a2, a3, b, p2, p3, q2, q3, w] = <[Poly; 8]>::try_from(v).unwrap();
    let one = Poly::one();
    let n = one.add(&a2.mul(&p2).mul(&p2)).add(&a3.mul(&p3).mul(&p3));
    let middle = a2.mul(&p2).mul(&q2).add(&a3.mul(&p3).mul(&q3));
    let last = a2.mul(&q2).mul(&q2).add(&a3.mul(&q3).mul(&q3)).add(&w);
    let kx = a3.mul(&p3);
    let ky = a2.mul(&p2).neg();
    let kernel_vector_ok = a2.mul(&p2).mul(&kx).add(&a3.mul(&p3).mul(&ky)).is_zero();
    let bind = vec![("hq2", b.mul(&kx)), ("hq3", b.mul(&ky))];
    let middle_equation_ok = middle.substitute(&bind)?.is_zero();
    let target = w.sub(&b.mul(&b).mul(&a2).mul(&a3));
    let (_, rem) = last.substitute(&bind)?.sub(&target).divide_by(&n)?;
    Ok(HatCollapse {
        kernel_vector_ok,
        middle_equation_ok,
        omega_relation_ok: rem.is_zero(),
        omega_relation_remainder: rem.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_passes() {
        let r = chart_closure_check().unwrap();
        assert_eq!(r.total, 24);
        assert!(r.ok(), "{:#?}", r.components.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        assert_eq!(r.divisor, "1 + a2*p2^2 + a3*p3^2");
    }

    #[test]
    fn hat_collapse() {
        assert!(hat_collapse_check().unwrap().ok());
    }

    #[test]
    fn e1_11_component_vanishes_without_division() {
        // B₁J⁻¹B₁ − ω is E2[11] with α₁ = 1
        let r = chart_closure_check().unwrap();
        let c = r.components.iter().find(|c| c.component == "E2[11]").unwrap();
        assert_eq!(c.after_substitution, "0");
    }
}
