//! Semistability for the characters `±ϑ` on `Z × V`.
//!
//! The oracles are the closed-form criteria:
//!
//! * `−ϑ`: stable exactly on `Z° × V`, witnessed by the semi-invariant
//!   `α₁²α₂²α₃²β²·det B`.
//! * `ϑ`: after moving `x` to `(1, 0)`, stable iff every `(pᵢ, qᵢ) ≠ 0` and
//!   `αᵢpᵢ ≠ 0` for some `i`.
//!
//! Unstable verdicts always carry a one-parameter subgroup whose
//! positive-weight coordinates vanish at the point (read in the basis stored
//! with the certificate) and which pairs positively with the character.

use serde::Serialize;

use crate::equations::{minus_theta_semi_invariant, on_z};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::git::{act, pair, Character, Cocharacter, GroupElement, PointHV};
use crate::linalg::{is_zero2, Mat2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// Columns form the basis of `V` in which the cocharacter is diagonal.
    pub basis: Mat2,
    pub cocharacter: Cocharacter,
    /// Which unstable family the certificate comes from.
    pub family: String,
}

impl Certificate {
    /// Re-check: positive-weight coordinates vanish and the pairing is positive.
    pub fn verify(&self, p: &PointHV, chi: &Character) -> bool {
        if pair(chi, &self.cocharacter) <= 0 {
            return false;
        }
        let inv = match self.basis.inverse() {
            Some(m) => m,
            None => return false,
        };
        let q = act(&GroupElement::gl(inv), p);
        let w = self.cocharacter.weights();
        q.coords().iter().zip(w).all(|(c, w)| w <= 0 || c.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StableWitness {
    /// A semi-invariant of the character's weight, nonzero at the point.
    SemiInvariant(Scalar),
    /// The spanning condition holds: all `Bᵢˣ ≠ 0` and `αᵢpᵢ ≠ 0` at this (0-based) index.
    SpanningIndex(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabilityVerdict {
    Stable(StableWitness),
    Unstable(Certificate),
}

impl StabilityVerdict {
    pub fn is_stable(&self) -> bool {
        matches!(self, StabilityVerdict::Stable(_))
    }

    pub fn summary(&self) -> VerdictSummary {
        match self {
            StabilityVerdict::Stable(StableWitness::SemiInvariant(v)) => VerdictSummary {
                status: "stable",
                witness: format!("semi-invariant a1^2 a2^2 a3^2 b^2 det B = {v}"),
            },
            StabilityVerdict::Stable(StableWitness::SpanningIndex(i)) => VerdictSummary {
                status: "stable",
                witness: format!("x and the image of E{} span V, all B_i^x nonzero", i + 1),
            },
            StabilityVerdict::Unstable(c) => VerdictSummary {
                status: "unstable",
                witness: format!(
                    "cocharacter {} in basis {:?} ({})",
                    c.cocharacter, c.basis, c.family
                ),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictSummary {
    pub status: &'static str,
    pub witness: String,
}

fn require_z(p: &PointHV) -> Result<()> {
    if on_z(p) {
        Ok(())
    } else {
        Err(Error::ContractViolation("stability oracles are defined on Z × V only".into()))
    }
}

/// A basis `(x, y)` of `V` with `x` first.
pub fn adapted_basis(x: &[Scalar; 2]) -> Mat2 {
    let y = if x[0].is_zero() {
        [Scalar::one(), Scalar::zero()]
    } else {
        [Scalar::zero(), Scalar::one()]
    };
    Mat2::from_cols(x, &y)
}

/// The point in coordinates adapted to `basis`.
pub fn in_basis(p: &PointHV, basis: &Mat2) -> PointHV {
    act(&GroupElement::gl(basis.inverse().expect("singular basis")), p)
}

/// The reference-table candidates together with their images under permuting legs,
/// plus the scalar subgroup that kills `x = 0`.
pub fn theta_candidates() -> Vec<(String, Cocharacter)> {
    let l = Cocharacter::lambda;
    let mu = Cocharacter::MU;
    let mut out = vec![("{x=0}".to_string(), Cocharacter::new([1, 1, 1], [1, 1]))];
    for i in 0..3 {
        out.push((format!("{{beta=0, B{}=0}}", i + 1), l(i)));
    }
    out.push(("{alpha1=alpha2=alpha3=0}".into(), mu));
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        out.push((
            format!("{{alpha{}=alpha{}=0, p{}=0}}", j + 1, k + 1, i + 1),
            mu.add(&l(i)),
        ));
    }
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        out.push((
            format!("{{alpha{}=0, p{}=p{}=0}}", k + 1, i.min(j) + 1, i.max(j) + 1),
            mu.add(&l(i)).add(&l(j)),
        ));
    }
    out.push(("{p1=p2=p3=0}".into(), mu.times(2).add(&l(0)).add(&l(1)).add(&l(2))));
    out
}

/// Unstable families of the `ϑ` analysis with their certificates, each
/// checked against the closed-form weights: every positive-weight coordinate
/// lies in the family's vanishing set. Only the `H` coordinates are listed:
/// the families live in the basis with `x = (1, 0)`, where `x₂` vanishes.
pub fn unstable_subset_certificates() -> Vec<(String, Cocharacter, Vec<&'static str>)> {
    theta_candidates()
        .into_iter()
        .filter(|(name, _)| name != "{x=0}")
        .map(|(name, c)| {
            let positive: Vec<&'static str> = c
                .weights()
                .iter()
                .zip(crate::git::COORD_NAMES)
                .take(13)
                .filter(|(w, _)| **w > 0)
                .map(|(_, n)| n)
                .collect();
            (name, c, positive)
        })
        .collect()
}

/// The spanning condition in adapted coordinates: `(pᵢ, qᵢ) ≠ 0` for all `i`, and
/// the first `i` with `αᵢpᵢ ≠ 0`.
fn spanning_index(q: &PointHV) -> Option<usize> {
    if q.b.iter().any(|r| r[0].is_zero() && r[1].is_zero()) {
        return None;
    }
    (0..3).find(|&i| !(&q.alpha[i] * &q.b[i][0]).is_zero())
}

pub fn semistable_theta(p: &PointHV) -> Result<StabilityVerdict> {
    require_z(p)?;
    let chi = Character::THETA;
    if is_zero2(&p.x) {
        let cert = Certificate {
            basis: Mat2::identity(),
            cocharacter: Cocharacter::new([1, 1, 1], [1, 1]),
            family: "{x=0}".into(),
        };
        debug_assert!(cert.verify(p, &chi));
        return Ok(StabilityVerdict::Unstable(cert));
    }
    let basis = adapted_basis(&p.x);
    let q = in_basis(p, &basis);
    if let Some(i) = spanning_index(&q) {
        return Ok(StabilityVerdict::Stable(StableWitness::SpanningIndex(i)));
    }
    for (family, c) in theta_candidates() {
        let cert = Certificate {
            basis: basis.clone(),
            cocharacter: c,
            family,
        };
        if cert.verify(p, &chi) {
            return Ok(StabilityVerdict::Unstable(cert));
        }
    }
    Err(Error::NoCertificate)
}

pub fn semistable_minus_theta(p: &PointHV) -> Result<StabilityVerdict> {
    require_z(p)?;
    let chi = Character::MINUS_THETA;
    let s = minus_theta_semi_invariant(p);
    if !s.is_zero() {
        return Ok(StabilityVerdict::Stable(StableWitness::SemiInvariant(s)));
    }
    // some αᵢ = 0: GL(Lᵢ) acting inversely
    if let Some(i) = (0..3).find(|&i| p.alpha[i].is_zero()) {
        let cert = Certificate {
            basis: Mat2::identity(),
            cocharacter: Cocharacter::lambda(i).neg(),
            family: format!("{{alpha{}=0}}", i + 1),
        };
        return if cert.verify(p, &chi) {
            Ok(StabilityVerdict::Unstable(cert))
        } else {
            Err(Error::NoCertificate)
        };
    }
    if p.beta.is_zero() {
        // B = ℓ⊗m with m a degenerate form; μ⁻¹ in a basis (u, w) with w in
        // the kernel of m scales β, q, r up and fixes everything else.
        let m = p
            .b
            .iter()
            .find(|r| r.iter().any(|c| !c.is_zero()))
            .cloned();
        let w = match &m {
            Some(m) if !m[0].is_zero() => [-&(&m[1] * &Scalar::sqrt2().inv()), m[0].clone()],
            _ => [Scalar::one(), Scalar::zero()],
        };
        let u = if w[1].is_zero() {
            [Scalar::zero(), Scalar::one()]
        } else {
            [Scalar::one(), Scalar::zero()]
        };
        let cert = Certificate {
            basis: Mat2::from_cols(&u, &w),
            cocharacter: Cocharacter::MU.neg(),
            family: "{beta=0}".into(),
        };
        return if cert.verify(p, &chi) {
            Ok(StabilityVerdict::Unstable(cert))
        } else {
            Err(Error::NoCertificate)
        };
    }
    // α₁α₂α₃β ≠ 0 on Z forces det B ≠ 0, so this is unreachable on Z.
    Err(Error::ContractViolation("Z point with α₁α₂α₃β ≠ 0 but det B = 0".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificates_cover_their_families() {
        let certs = unstable_subset_certificates();
        let find = |n: &str| certs.iter().find(|(name, _, _)| name == n).unwrap().2.clone();
        assert_eq!(find("{alpha1=alpha2=alpha3=0}"), vec!["alpha1", "alpha2", "alpha3"]);
        assert_eq!(find("{p1=p2=p3=0}"), vec!["p1", "p2", "p3"]);
        assert_eq!(find("{alpha2=alpha3=0, p1=0}"), vec!["alpha2", "alpha3", "p1"]);
        assert_eq!(find("{beta=0, B1=0}"), vec!["beta", "p1", "q1", "r1"]);
        assert_eq!(find("{alpha3=0, p1=p2=0}"), vec!["alpha3", "p1", "p2"]);
    }

    #[test]
    fn x_zero_is_unstable() {
        let v = semistable_theta(&PointHV::zero()).unwrap();
        match v {
            StabilityVerdict::Unstable(c) => assert_eq!(pair(&Character::THETA, &c.cocharacter), 5),
            _ => panic!(),
        }
    }

    #[test]
    fn off_z_is_rejected() {
        let p = PointHV::from_i64([1, 1, 1], 1, [[1, 0, 0]; 3], [1, 0]);
        assert!(matches!(semistable_theta(&p), Err(Error::ContractViolation(_))));
        assert!(matches!(semistable_minus_theta(&p), Err(Error::ContractViolation(_))));
    }
}
