//! The base point of `Z°` coming from the quaternion group, its isotropy
//! group, and transport between points of `Z°`.
//!
//! At a point of `Z°` the three `Bᵢ` form a basis of `Sym²V^∨`, so a group
//! element `(t, g)` fixing `B` satisfies `Sym²(g) = B⁻¹·diag(t)·B`: `Sym²g` is
//! diagonal in the `B`-basis and everything reduces to a handful of sign
//! choices and one square root per entry.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::equations::in_zo;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::git::{act, GroupElement, PointHV};
use crate::linalg::{mat2_sym_square, Mat2, Mat3};

/// `b★`: `V` the 2-dimensional irrep of `Q`, `Bᵢ` the projections of
/// `Sym²V` onto the three nontrivial characters (eigenvectors `e₁e₂`,
/// `e₁² + e₂²`, `e₁² − e₂²`), with `α = (−2, 1, −1)`, `β = 1` solving the
/// equations. `x = 0`.
pub fn base_point() -> PointHV {
    PointHV::from_i64([-2, 1, -1], 1, [[0, 1, 0], [1, 0, 1], [1, 0, -1]], [0, 0])
}

/// `i ↦ diag(i, −i)`, `j ↦ [[0, 1], [−1, 0]]`.
pub fn quaternion_matrices() -> [Mat2; 2] {
    let z = Scalar::zero;
    [
        Mat2::diag(Scalar::i(), -Scalar::i()),
        Mat2::new(z(), Scalar::one(), -Scalar::one(), z()),
    ]
}

// ---- abstract finite groups ------------------------------------------------

/// What [`FiniteSubgroup`] needs from its elements.
pub trait GroupLike: Clone + PartialEq + std::fmt::Debug {
    fn op(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
    fn is_id(&self) -> bool;
}

impl GroupLike for GroupElement {
    fn op(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn is_id(&self) -> bool {
        self.is_identity()
    }
}

impl GroupLike for Mat2 {
    fn op(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn inv(&self) -> Self {
        self.inverse().expect("singular matrix in a group")
    }
    fn is_id(&self) -> bool {
        self.is_identity()
    }
}

#[derive(Clone, Debug)]
pub struct FiniteSubgroup<E: GroupLike = GroupElement> {
    pub elements: Vec<E>,
    /// `table[a][b]` is the index of `elements[a] · elements[b]`.
    pub table: Vec<Vec<usize>>,
    pub orders: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub abelian: bool,
    pub order_profile: BTreeMap<usize, usize>,
    pub iso_type: String,
    pub table: Vec<Vec<usize>>,
}

impl<E: GroupLike> FiniteSubgroup<E> {
    /// Close `gens` under multiplication; fails past `cap` elements.
    pub fn generate(gens: &[E], cap: usize) -> Result<Self> {
        let id = gens
            .first()
            .map(|g| g.op(&g.inv()))
            .ok_or_else(|| Error::ContractViolation("no generators".into()))?;
        let mut elements = vec![id];
        let mut frontier = elements.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for g in gens {
                    let c = a.op(g);
                    if !elements.contains(&c) {
                        if elements.len() >= cap {
                            return Err(Error::Unsupported(format!("group exceeds {cap} elements")));
                        }
                        elements.push(c.clone());
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        Self::from_elements(elements)
    }

    /// Build the multiplication table, verifying identity, closure and inverses.
    pub fn from_elements(elements: Vec<E>) -> Result<Self> {
        let n = elements.len();
        let find = |x: &E| elements.iter().position(|y| y == x);
        if !elements.iter().any(E::is_id) {
            return Err(Error::ContractViolation("identity missing".into()));
        }
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[a][b] = find(&elements[a].op(&elements[b]))
                    .ok_or_else(|| Error::ContractViolation("not closed under products".into()))?;
            }
            find(&elements[a].inv()).ok_or_else(|| Error::ContractViolation("not closed under inverses".into()))?;
        }
        let e = elements.iter().position(E::is_id).unwrap();
        let orders = (0..n)
            .map(|a| {
                let mut k = 1;
                let mut x = a;
                while x != e {
                    x = table[x][a];
                    k += 1;
                }
                k
            })
            .collect();
        Ok(FiniteSubgroup {
            elements,
            table,
            orders,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Element order ↦ number of elements of that order.
    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &o in &self.orders {
            *m.entry(o).or_insert(0) += 1;
        }
        m
    }

    pub fn count_of_order(&self, k: usize) -> usize {
        self.orders.iter().filter(|&&o| o == k).count()
    }

    /// Isomorphism type for groups of order at most 8; larger groups get a
    /// description from their order profile.
    pub fn iso_type(&self) -> String {
        let n = self.order();
        let ab = self.is_abelian();
        let max = self.orders.iter().copied().max().unwrap_or(1);
        let s = match n {
            1 => "trivial",
            2 | 3 | 5 | 7 => return format!("Z{n}"),
            4 if max == 4 => "Z4",
            4 => "Z2xZ2",
            6 if ab => "Z6",
            6 => "S3",
            8 if ab && max == 8 => "Z8",
            8 if ab && max == 4 => "Z4xZ2",
            8 if ab => "Z2xZ2xZ2",
            8 if self.count_of_order(2) == 1 => "Q8",
            8 => "D4",
            _ => {
                return format!(
                    "order {n}, {}, element orders {:?}",
                    if ab { "abelian" } else { "non-abelian" },
                    self.order_profile()
                )
            }
        };
        s.to_string()
    }

    pub fn is_quaternion(&self) -> bool {
        self.order() == 8 && !self.is_abelian() && self.count_of_order(2) == 1
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            order: self.order(),
            abelian: self.is_abelian(),
            order_profile: self.order_profile(),
            iso_type: self.iso_type(),
            table: self.table.clone(),
        }
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.contains(e)
    }
}

// ---- stabilizers -----------------------------------------------------------

/// Which coordinates a stabilizer element has to fix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraints {
    /// `α`, `β` and `B`.
    Full,
    /// `B`, and `α` up to one common sign; `β` is free.
    Relaxed,
}

fn running_sqrt(tower: &mut Field, x: &Scalar) -> Result<Scalar> {
    let (f, s) = tower.sqrt_or_adjoin(x)?;
    *tower = f;
    Ok(s)
}

/// A `g` with `Sym²(g) = m`, if any (the other one is `−g`).
pub fn sym2_root(m: &Mat3, tower: &mut Field) -> Result<Option<Mat2>> {
    let e = |i: usize, j: usize| m.0[i][j].clone();
    let s2 = Scalar::sqrt2();
    let z = Scalar::zero();
    let g = if !e(0, 0).is_zero() {
        let a = running_sqrt(tower, &e(0, 0))?;
        let c = &e(1, 0) / &(&s2 * &a);
        let b = &e(0, 1) / &(&s2 * &a);
        let d = &(&e(1, 1) - &(&b * &c)) / &a;
        Mat2::new(a, b, c, d)
    } else if !e(0, 2).is_zero() {
        let b = running_sqrt(tower, &e(0, 2))?;
        let c = &e(1, 1) / &b;
        let d = &e(1, 2) / &(&s2 * &b);
        Mat2::new(z, b, c, d)
    } else {
        return Ok(None);
    };
    Ok((mat2_sym_square(&g) == *m).then_some(g))
}

/// `(t, g)` with `t` chosen so that `Bᵢ` is fixed, if `g` fixes every `B`-line.
pub fn lift_to_stabilizer(p: &PointHV, g: &Mat2) -> Option<GroupElement> {
    let m_inv = mat2_sym_square(g).inverse()?;
    let mut t = Vec::new();
    for i in 0..3 {
        let img = m_inv.left_apply(&p.b[i]);
        let k = (0..3).find(|&k| !img[k].is_zero())?;
        t.push(&p.b[i][k] / &img[k]);
    }
    let h = GroupElement::new([t[0].clone(), t[1].clone(), t[2].clone()], g.clone())?;
    (act(&h, p).same_h(p)).then_some(h)
}

fn require_zo(p: &PointHV) -> Result<()> {
    if !in_zo(p)? {
        return Err(Error::ContractViolation("point is not in Z°".into()));
    }
    Ok(())
}

fn sign_triples(product: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in [1, -1] {
        for b in [1, -1] {
            for c in [1, -1] {
                if a * b * c == product {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// The stabilizer of the `H`-part of a point of `Z°`.
///
/// Fixing `B` gives `Sym²g = B⁻¹TB`; comparing eigenvalues (`{tᵢ} = {λ², λμ,
/// μ²}` with `λμ = d`) against `tᵢ² = σd` forces `d = σ` and `tᵢ = ±1` with
/// `t₁t₂t₃ = σ`. Under [`Constraints::Full`] `σ = 1`.
pub fn stabilizer(p: &PointHV, constraints: Constraints) -> Result<FiniteSubgroup> {
    require_zo(p)?;
    let bm = p.b_matrix();
    let bi = bm
        .inverse()
        .ok_or_else(|| Error::DegeneratePoint("B-lines are not distinct".into()))?;
    let sigmas: &[i64] = match constraints {
        Constraints::Full => &[1],
        Constraints::Relaxed => &[1, -1],
    };
    let mut tower = p.field();
    let mut elements: Vec<GroupElement> = Vec::new();
    for &sigma in sigmas {
        for signs in sign_triples(sigma) {
            let t = signs.map(Scalar::from_i64);
            let m = bi.mul(&Mat3::diag(&t)).mul(&bm);
            let Some(g) = sym2_root(&m, &mut tower)? else { continue };
            for g in [g.clone(), g.scale(&Scalar::from_i64(-1))] {
                if g.det() != Scalar::from_i64(sigma) {
                    continue;
                }
                let h = GroupElement { t: t.clone(), g };
                let q = act(&h, p);
                let ok = q.b == p.b
                    && (0..3).all(|i| q.alpha[i] == &Scalar::from_i64(sigma) * &p.alpha[i])
                    && (constraints == Constraints::Relaxed || q.beta == p.beta);
                if ok && !elements.contains(&h) {
                    elements.push(h);
                }
            }
        }
    }
    FiniteSubgroup::from_elements(elements)
}

// ---- transport -------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Connection {
    /// `act(element, p)` has the `H`-part of `q`.
    pub element: GroupElement,
    /// Whether `element` also carries `x` of `p` to `x` of `q`.
    pub x_matched: bool,
}

/// Find `h` with `act(h, p) = q` on `H` (both in `Z°`), preferring one that
/// also matches `x`.
///
/// The equations `αᵢ(q) = d tᵢ⁻² αᵢ(p)` and `β(q) = t₁t₂t₃ d⁻² β(p)` force
/// `d = β(p)²Πα(p) / (β(q)²Πα(q))`; then `tᵢ = ±√(d αᵢ(p)/αᵢ(q))` (one sign
/// fixed by `β`), `Sym²g = B(q)⁻¹ T B(p)`, and the remaining freedom is the
/// stabilizer of `q`. Square roots are taken in a running tower, so the only
/// failure mode is [`Error::ExtensionLimit`].
pub fn connect(p: &PointHV, q: &PointHV) -> Result<Connection> {
    require_zo(p)?;
    require_zo(q)?;
    let prod = |x: &PointHV| &(&(&x.alpha[0] * &x.alpha[1]) * &x.alpha[2]) * &x.beta.square();
    let d = &prod(p) / &prod(q);
    let t123 = &(&d.square() * &q.beta) / &p.beta;
    let mut tower = p
        .field()
        .join(&q.field())
        .ok_or_else(|| Error::Unsupported("points live in unrelated towers".into()))?;
    let roots = (0..3)
        .map(|i| running_sqrt(&mut tower, &(&(&d * &p.alpha[i]) / &q.alpha[i])))
        .collect::<Result<Vec<_>>>()?;
    let bq_inv = q
        .b_matrix()
        .inverse()
        .ok_or_else(|| Error::DegeneratePoint("B-lines are not distinct".into()))?;
    let bp = p.b_matrix();
    let mut h0 = None;
    'search: for s1 in [1, -1] {
        for s2 in [1, -1] {
            let t1 = &roots[0] * &Scalar::from_i64(s1);
            let t2 = &roots[1] * &Scalar::from_i64(s2);
            let t3 = &t123 / &(&t1 * &t2);
            if t3.square() != roots[2].square() {
                continue;
            }
            let t = [t1, t2, t3];
            let m = bq_inv.mul(&Mat3::diag(&t)).mul(&bp);
            if let Some(g) = sym2_root(&m, &mut tower)? {
                for g in [g.clone(), g.scale(&Scalar::from_i64(-1))] {
                    if g.det() != d {
                        continue;
                    }
                    let h = GroupElement { t: t.clone(), g };
                    if act(&h, p).same_h(q) {
                        h0 = Some(h);
                        break 'search;
                    }
                }
            }
        }
    }
    let h0 = h0.ok_or_else(|| Error::ContractViolation("no transporter found between Z° points".into()))?;
    let stab = stabilizer(q, Constraints::Full)?;
    for s in &stab.elements {
        let h = s.mul(&h0);
        if h.g.apply(&p.x) == q.x {
            return Ok(Connection {
                element: h,
                x_matched: true,
            });
        }
    }
    Ok(Connection {
        element: h0,
        x_matched: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::residuals;

    #[test]
    fn base_point_is_in_zo() {
        let b = base_point();
        assert!(residuals(&b).is_zero());
        assert!(in_zo(&b).unwrap());
        assert_eq!(b.b_matrix().det(), Scalar::from_i64(2));
    }

    #[test]
    fn stabilizer_is_q8() {
        let s = stabilizer(&base_point(), Constraints::Full).unwrap();
        assert_eq!(s.order(), 8);
        assert!(s.is_quaternion());
        assert_eq!(s.iso_type(), "Q8");
        let r = stabilizer(&base_point(), Constraints::Relaxed).unwrap();
        assert_eq!(r.order(), 16);
    }

    #[test]
    fn quaternion_matrices_lift() {
        let b = base_point();
        let s = stabilizer(&b, Constraints::Full).unwrap();
        for g in quaternion_matrices() {
            let h = lift_to_stabilizer(&b, &g).unwrap();
            assert!(s.contains(&h));
        }
    }

    #[test]
    fn connect_to_self_lands_in_stabilizer() {
        let b = base_point();
        let c = connect(&b, &b).unwrap();
        assert!(stabilizer(&b, Constraints::Full).unwrap().contains(&c.element));
        assert!(c.x_matched);
    }
}
