//! Seeded sampling of exact test points.
//!
//! Scalars are drawn from a small-height distribution over `Q(i)`: real and
//! imaginary parts are `n/d` with `n ∈ [−3, 3]`, `d ∈ {1, 2, 3}`, and the
//! imaginary part is zero half of the time. Points of `Z°` are orbit samples
//! `act(h, b★)`; chart points are built from free chart coordinates; unstable
//! points are built inside each of the unstable families and then moved by a
//! random group element. Everything flows from one `ChaCha8` seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::charts::{legs, ChartPoint};
use crate::field::Scalar;
use crate::git::{act, GroupElement, PointHV};
use crate::linalg::{Mat2, Vec2, Vec3};
use crate::orbit::base_point;

pub struct Sampler {
    rng: ChaCha8Rng,
}

/// Unstable families for `ϑ` (indices 0-based), each realised inside `Z × V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnstableFamily {
    XZero,
    /// `β = 0`, `Bᵢ = 0`.
    BetaAndB(usize),
    /// `α₁ = α₂ = α₃ = 0`.
    AllAlpha,
    /// `α_j = α_k = 0`, `pᵢ = 0` with `(j, k)` the other legs.
    TwoAlphaOneP(usize),
    /// `α_k = 0`, `pᵢ = p_j = 0` with `i, j` the other legs.
    OneAlphaTwoP(usize),
    /// `p₁ = p₂ = p₃ = 0`.
    AllP,
}

impl UnstableFamily {
    pub fn all() -> Vec<UnstableFamily> {
        let mut v = vec![UnstableFamily::XZero, UnstableFamily::AllAlpha, UnstableFamily::AllP];
        for i in 0..3 {
            v.push(UnstableFamily::BetaAndB(i));
            v.push(UnstableFamily::TwoAlphaOneP(i));
            v.push(UnstableFamily::OneAlphaTwoP(i));
        }
        v
    }

    pub fn name(&self) -> String {
        match self {
            UnstableFamily::XZero => "x=0".into(),
            UnstableFamily::BetaAndB(i) => format!("beta=0,B{}=0", i + 1),
            UnstableFamily::AllAlpha => "alpha=0".into(),
            UnstableFamily::TwoAlphaOneP(i) => {
                let (j, k) = legs(*i);
                format!("alpha{}=alpha{}=0,p{}=0", j + 1, k + 1, i + 1)
            }
            UnstableFamily::OneAlphaTwoP(k) => {
                let (i, j) = legs(*k);
                format!("alpha{}=0,p{}=p{}=0", k + 1, i.min(j) + 1, i.max(j) + 1)
            }
            UnstableFamily::AllP => "p=0".into(),
        }
    }
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Scalar {
        let n = self.rng.gen_range(-3..=3);
        let d = self.rng.gen_range(1..=3);
        Scalar::from_ratio(n, d)
    }

    pub fn gauss(&mut self) -> Scalar {
        let re = self.rational();
        if self.rng.gen_bool(0.5) {
            re
        } else {
            &re + &(&self.rational() * &Scalar::i())
        }
    }

    pub fn nonzero(&mut self) -> Scalar {
        loop {
            let s = self.gauss();
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn vector(&mut self) -> Vec2 {
        [self.gauss(), self.gauss()]
    }

    pub fn nonzero_vector(&mut self) -> Vec2 {
        loop {
            let v = self.vector();
            if !(v[0].is_zero() && v[1].is_zero()) {
                return v;
            }
        }
    }

    pub fn matrix(&mut self) -> Mat2 {
        loop {
            let g = Mat2::new(self.gauss(), self.gauss(), self.gauss(), self.gauss());
            if !g.det().is_zero() {
                return g;
            }
        }
    }

    pub fn group_element(&mut self) -> GroupElement {
        let t = [self.nonzero(), self.nonzero(), self.nonzero()];
        GroupElement { t, g: self.matrix() }
    }

    /// `act(h, b★)` with an independent random `x` (zero with small probability).
    pub fn orbit_point(&mut self) -> PointHV {
        let h = self.group_element();
        let x = self.vector();
        act(&h, &base_point()).with_x(x)
    }

    /// A point of `H × V` with every coordinate random; generically off `Z`.
    pub fn h_point(&mut self) -> PointHV {
        let mut row = || -> Vec3 { [self.gauss(), self.gauss(), self.gauss()] };
        let b = [row(), row(), row()];
        PointHV {
            alpha: [self.gauss(), self.gauss(), self.gauss()],
            beta: self.gauss(),
            b,
            x: self.vector(),
        }
    }

    /// A normalised chart point at leg `i`: `α_j`, `p_j`, `β` free, `p_k ≠ 0`
    /// free, `α_k` solved from `1 + α_jp_j² + α_kp_k² = 0`, everything else
    /// from the chart relations. Retries until the nondegeneracy conditions hold.
    pub fn chart_point(&mut self, i: usize) -> ChartPoint {
        let (j, k) = legs(i);
        loop {
            let aj = self.gauss();
            let pj = self.gauss();
            let pk = self.nonzero();
            let beta = self.gauss();
            let ak = -(&(&Scalar::one() + &(&aj * &pj.square())) / &pk.square());
            let mut p = PointHV::zero();
            p.x = [Scalar::one(), Scalar::zero()];
            p.alpha[i] = Scalar::one();
            p.alpha[j] = aj.clone();
            p.alpha[k] = ak.clone();
            p.beta = beta.clone();
            let r = &(&(&beta.square() * &aj) * &ak) * &Scalar::from_ratio(1, 2);
            p.b[i] = [Scalar::one(), Scalar::zero(), r.clone()];
            p.b[j] = [pj.clone(), &(&beta * &ak) * &pk, -(&r * &pj)];
            p.b[k] = [pk.clone(), -(&(&beta * &aj) * &pj), -(&r * &pk)];
            let c = ChartPoint {
                index: i,
                point: p,
                normalizer: GroupElement::identity(),
            };
            if c.violations().is_empty() {
                return c;
            }
        }
    }

    /// A chart point moved by a random group element: a `ϑ`-stable point of
    /// `Z × V` in chart `i`.
    pub fn chart_sample(&mut self, i: usize) -> PointHV {
        let c = self.chart_point(i);
        let h = self.group_element();
        act(&h, &c.point)
    }

    fn rank_one_b(&mut self, l: [Scalar; 3], m: Vec3) -> [Vec3; 3] {
        l.map(|li| m.clone().map(|mk| &li * &mk))
    }

    /// A point of `Z × V` in `family`, in general position within it.
    pub fn unstable_point(&mut self, family: UnstableFamily) -> PointHV {
        let z = Scalar::zero;
        let mut p = PointHV::zero();
        p.x = [Scalar::one(), z()];
        match family {
            UnstableFamily::XZero => {
                return self.orbit_point().with_x([z(), z()]);
            }
            UnstableFamily::AllAlpha => {
                // ω = 0, E1/E2 vanish; E3 forces rank B ≤ 1
                p.beta = self.gauss();
                let l = [self.gauss(), self.gauss(), self.gauss()];
                let m = [self.gauss(), self.gauss(), self.gauss()];
                p.b = self.rank_one_b(l, m);
            }
            UnstableFamily::BetaAndB(i) => {
                // B = ℓ⊗m, ℓᵢ = 0, m = (1, 0, 0) isotropic, Σ α ℓ² = 0
                let (j, k) = legs(i);
                let mut l = [z(), z(), z()];
                l[j] = self.nonzero();
                l[k] = self.nonzero();
                p.alpha[i] = self.gauss();
                p.alpha[j] = self.gauss();
                p.alpha[k] = -(&(&p.alpha[j] * &l[j].square()) / &l[k].square());
                let m = [self.nonzero(), z(), z()];
                p.b = self.rank_one_b(l, m);
            }
            UnstableFamily::TwoAlphaOneP(i) => {
                // Bᵢ = 0, B_j ∥ B_k
                let (j, k) = legs(i);
                p.alpha[i] = self.nonzero();
                p.beta = self.gauss();
                let mut l = [z(), z(), z()];
                l[j] = self.gauss();
                l[k] = self.gauss();
                let m = [self.gauss(), self.gauss(), self.gauss()];
                p.b = self.rank_one_b(l, m);
            }
            UnstableFamily::OneAlphaTwoP(k) => {
                // Bᵢ = B_j = 0, α_k = 0, B_k arbitrary
                let (i, j) = legs(k);
                p.alpha[i] = self.gauss();
                p.alpha[j] = self.gauss();
                p.beta = self.gauss();
                p.b[k] = [self.gauss(), self.gauss(), self.gauss()];
            }
            UnstableFamily::AllP => {
                // β = 0, Bᵢ = (0, 0, rᵢ) with Σ αᵢ rᵢ² = 0
                let r = [self.gauss(), self.gauss(), self.nonzero()];
                p.alpha[0] = self.gauss();
                p.alpha[1] = self.gauss();
                p.alpha[2] = -(&(&(&p.alpha[0] * &r[0].square()) + &(&p.alpha[1] * &r[1].square()))
                    / &r[2].square());
                for i in 0..3 {
                    p.b[i] = [z(), z(), r[i].clone()];
                }
            }
        }
        let h = self.group_element();
        act(&h, &p)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::residuals;

    #[test]
    fn samples_lie_on_z() {
        let mut s = Sampler::new(7);
        for _ in 0..5 {
            assert!(residuals(&s.orbit_point()).is_zero());
        }
        for i in 0..3 {
            assert!(residuals(&s.chart_sample(i)).is_zero());
        }
        for f in UnstableFamily::all() {
            assert!(residuals(&s.unstable_point(f)).is_zero(), "{}", f.name());
        }
    }

    #[test]
    fn deterministic() {
        let a: Vec<String> = (0..3).map(|_| format!("{:?}", Sampler::new(3).orbit_point())).collect();
        assert!(a.iter().all(|x| *x == a[0]));
    }
}
