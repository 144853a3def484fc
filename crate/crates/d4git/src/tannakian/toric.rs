//! Torus GIT on affine space, for the cyclic group `C_n`.
//!
//! Two presentations of `Rep C_n` are implemented:
//!
//! * minimal: one `C*` acting on `C³` with weights `(−n, 1, n−1)`;
//! * redundant: `(C*)^{n−1}` acting on `C^{n+1}` with coordinates
//!   `B₁ … B_{n−1}, x, y`. The weight matrix used is
//!
//!   ```text
//!   B_j ↦ −2e_j + e_{j−1} + e_{j+1}    (e₀ = e_n = 0)
//!   x   ↦ e₁
//!   y   ↦ e_{n−1}
//!   ```
//!
//!   i.e. the columns are minus the Cartan matrix of `A_{n−1}` followed by
//!   the two framing weights. Its kernel is spanned by the rays `(i, 1)`,
//!   `i = 0..n`, which is the Cox description of the minimal resolution. The
//!   literal chain `U₁⊗U_i ≅ U_{i+1}` is available as
//!   [`an_chain_presentation`]; it is related by a change of torus basis
//!   followed by dualising some of the `U_i`.
//!
//! Semistability is cone membership: `x` is `χ`-semistable iff `χ` lies in
//! the rational cone spanned by the weights of the nonzero coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricGITProblem {
    /// One weight vector in `Z^k` per coordinate of `C^N`.
    pub weights: Vec<Vec<i64>>,
    pub chi: Vec<i64>,
    /// Coordinate names, for reports.
    pub names: Vec<String>,
}

impl ToricGITProblem {
    pub fn new(weights: Vec<Vec<i64>>, chi: Vec<i64>) -> Result<Self> {
        let k = chi.len();
        if weights.iter().any(|w| w.len() != k) {
            return Err(Error::ContractViolation("weights and character differ in rank".into()));
        }
        if k > weights.len() {
            return Err(Error::ContractViolation("torus rank exceeds the number of coordinates".into()));
        }
        let names = (1..=weights.len()).map(|j| format!("z{j}")).collect();
        Ok(ToricGITProblem { weights, chi, names })
    }

    pub fn rank(&self) -> usize {
        self.chi.len()
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn with_chi(&self, chi: Vec<i64>) -> Result<Self> {
        let mut p = ToricGITProblem::new(self.weights.clone(), chi)?;
        p.names = self.names.clone();
        Ok(p)
    }

    fn chosen(&self, support: &[bool]) -> Vec<&Vec<i64>> {
        self.weights.iter().zip(support).filter(|(_, s)| **s).map(|(w, _)| w).collect()
    }

    /// Semistability of any point whose nonzero coordinates are `support`.
    pub fn semistable_support(&self, support: &[bool]) -> bool {
        in_cone(&self.chi, &self.chosen(support))
    }
}

/// The `C*` problem with weights `(−n, 1, n−1)`.
pub fn an_minimal_presentation(n: i64, chi: i64) -> ToricGITProblem {
    let mut p = ToricGITProblem::new(vec![vec![-n], vec![1], vec![n - 1]], vec![chi]).unwrap();
    p.names = vec!["B".into(), "x".into(), "y".into()];
    p
}

fn unit(k: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; k];
    if j >= 1 && j <= k {
        v[j - 1] = 1;
    }
    v
}

/// The redundant presentation with the Cartan weight matrix (see module docs).
pub fn an_redundant_presentation(n: usize, chi: Vec<i64>) -> Result<ToricGITProblem> {
    if n < 2 {
        return Err(Error::ContractViolation("n must be at least 2".into()));
    }
    let k = n - 1;
    let mut weights = Vec::new();
    let mut names = Vec::new();
    for j in 1..=k {
        let w: Vec<i64> = (0..k)
            .map(|r| unit(k, j)[r] * -2 + unit(k, j - 1)[r] + unit(k, j + 1)[r])
            .collect();
        weights.push(w);
        names.push(format!("B{j}"));
    }
    weights.push(unit(k, 1));
    weights.push(unit(k, k));
    names.push("x".into());
    names.push("y".into());
    let mut p = ToricGITProblem::new(weights, chi)?;
    p.names = names;
    Ok(p)
}

/// `B_i ∈ Hom(U₁⊗U_i, U_{i+1})` with `U_n = C`, `x ∈ U₁`, `y ∈ U_{n−1}`, read
/// literally: weight of `B_i` is `e_{i+1} − e₁ − e_i`.
pub fn an_chain_presentation(n: usize, chi: Vec<i64>) -> Result<ToricGITProblem> {
    if n < 2 {
        return Err(Error::ContractViolation("n must be at least 2".into()));
    }
    let k = n - 1;
    let mut weights = Vec::new();
    let mut names = Vec::new();
    for i in 1..=k {
        let w: Vec<i64> = (0..k)
            .map(|r| unit(k, i + 1)[r] - unit(k, 1)[r] - unit(k, i)[r])
            .collect();
        weights.push(w);
        names.push(format!("B{i}"));
    }
    weights.push(unit(k, 1));
    weights.push(unit(k, k));
    names.push("x".into());
    names.push("y".into());
    let mut p = ToricGITProblem::new(weights, chi)?;
    p.names = names;
    Ok(p)
}

pub fn an_semistable(problem: &ToricGITProblem, point: &[Scalar]) -> bool {
    let support: Vec<bool> = point.iter().map(|c| !c.is_zero()).collect();
    problem.semistable_support(&support)
}

/// Hilbert–Mumford by brute force over cocharacters in `[−r, r]^k`: unstable
/// iff some `λ` has `⟨w_j, λ⟩ ≥ 0` on the support and `⟨χ, λ⟩ < 0`.
pub fn brute_force_semistable(problem: &ToricGITProblem, support: &[bool], r: i64) -> bool {
    let k = problem.rank();
    let chosen = problem.chosen(support);
    let mut lam = vec![-r; k];
    loop {
        let dot = |w: &Vec<i64>| w.iter().zip(&lam).map(|(a, b)| a * b).sum::<i64>();
        if chosen.iter().all(|w| dot(w) >= 0) && dot(&problem.chi) < 0 {
            return false;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == k {
                return true;
            }
            if lam[i] < r {
                lam[i] += 1;
                break;
            }
            lam[i] = -r;
            i += 1;
        }
    }
}

// ---- exact linear algebra over Q --------------------------------------------

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Row-reduce; returns the rank.
fn rank_of(vectors: &[&Vec<i64>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let k = vectors[0].len();
    // columns are the vectors: a k × m matrix
    let mut a: Vec<Vec<BigRational>> = (0..k).map(|r| vectors.iter().map(|v| q(v[r])).collect()).collect();
    row_reduce(&mut a)
}

fn row_reduce(a: &mut [Vec<BigRational>]) -> usize {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = &f * &a[r][j];
                    a[i][j] = &a[i][j] - d;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Unique solution of `Σ c_j v_j = rhs` when the `v_j` are independent.
fn solve(vectors: &[&Vec<i64>], rhs: &[i64]) -> Option<Vec<BigRational>> {
    let m = vectors.len();
    let k = rhs.len();
    let mut a: Vec<Vec<BigRational>> = (0..k)
        .map(|r| {
            let mut row: Vec<BigRational> = vectors.iter().map(|v| q(v[r])).collect();
            row.push(q(rhs[r]));
            row
        })
        .collect();
    let mut coef = a.iter().map(|r| r[..m].to_vec()).collect::<Vec<_>>();
    if row_reduce(&mut coef) != m {
        return None;
    }
    let rank_aug = row_reduce(&mut a);
    if rank_aug != m {
        return None;
    }
    // after reduction the first m rows hold the identity on the pivots
    Some((0..m).map(|i| a[i][m].clone()).collect())
}

fn subsets(n: usize, max: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|s| s.count_ones() as usize <= max)
        .map(|s| (0..n).filter(|j| s & (1 << j) != 0).collect())
        .collect()
}

/// `χ ∈ cone(gens)`, by Carathéodory: some independent subset carries `χ`
/// with nonnegative coefficients.
pub fn in_cone(chi: &[i64], gens: &[&Vec<i64>]) -> bool {
    if chi.iter().all(|&c| c == 0) {
        return true;
    }
    subsets(gens.len(), chi.len()).into_iter().any(|s| {
        let vs: Vec<&Vec<i64>> = s.iter().map(|&j| gens[j]).collect();
        !vs.is_empty() && solve(&vs, chi).is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    })
}

/// `Err(Wall)` if `χ` lies in the span of a rank-`(k−1)` set of weights.
pub fn wall_check(p: &ToricGITProblem) -> Result<()> {
    let k = p.rank();
    let all: Vec<&Vec<i64>> = p.weights.iter().collect();
    let chi = &p.chi;
    for s in subsets(all.len(), all.len()) {
        let vs: Vec<&Vec<i64>> = s.iter().map(|&j| all[j]).collect();
        let r = rank_of(&vs);
        if r + 1 != k {
            continue;
        }
        let mut with = vs.clone();
        with.push(chi);
        if rank_of(&with) == r {
            let names: Vec<&str> = s.iter().map(|&j| p.names[j].as_str()).collect();
            return Err(Error::Wall(format!(
                "character {:?} lies in the span of the weights of {{{}}}",
                chi,
                names.join(", ")
            )));
        }
    }
    Ok(())
}

// ---- integer kernel and the fan ---------------------------------------------

/// A basis of `{c ∈ Z^N : Σ c_j w_j = 0}` via unimodular column operations.
pub fn integer_kernel(weights: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = weights.len();
    let k = if n == 0 { 0 } else { weights[0].len() };
    let mut a: Vec<Vec<i128>> = (0..k).map(|r| weights.iter().map(|w| w[r] as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect();
    let col_swap = |m: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in m.iter_mut() {
            row.swap(x, y);
        }
    };
    let col_axpy = |m: &mut Vec<Vec<i128>>, dst: usize, src: usize, f: i128| {
        for row in m.iter_mut() {
            row[dst] -= f * row[src];
        }
    };
    let mut piv = 0;
    for r in 0..k {
        loop {
            let nz: Vec<usize> = (piv..n).filter(|&c| a[r][c] != 0).collect();
            let Some(&best) = nz.iter().min_by_key(|&&c| a[r][c].abs()) else { break };
            col_swap(&mut a, best, piv);
            col_swap(&mut u, best, piv);
            let mut done = true;
            for c in piv + 1..n {
                if a[r][c] != 0 {
                    let f = Integer::div_floor(&a[r][c], &a[r][piv]);
                    col_axpy(&mut a, c, piv, f);
                    col_axpy(&mut u, c, piv, f);
                    done &= a[r][c] == 0;
                }
            }
            if done {
                piv += 1;
                break;
            }
        }
    }
    (piv..n).map(|c| (0..n).map(|i| u[i][c] as i64).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanCone {
    /// Coordinates whose rays span the cone (the ones that vanish).
    pub coords: Vec<String>,
    pub rays: Vec<(i64, i64)>,
    /// `|det|` of the two rays, i.e. the order of the stabilizer at the
    /// torus-fixed point.
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricFan {
    pub chi: Vec<i64>,
    /// One ray per coordinate.
    pub rays: Vec<(i64, i64)>,
    /// Whether rays were put in the form `(a, 1)` with `min a = 0`.
    pub normalized: bool,
    pub cones: Vec<FanCone>,
}

impl ToricFan {
    /// Distinct rays of the maximal cones, sorted.
    pub fn used_rays(&self) -> Vec<(i64, i64)> {
        let mut r: Vec<(i64, i64)> = self.cones.iter().flat_map(|c| c.rays.iter().copied()).collect();
        r.sort();
        r.dedup();
        r
    }

    /// Rays strictly inside the support of the fan.
    pub fn interior_rays(&self) -> Vec<(i64, i64)> {
        let r = self.used_rays();
        if !self.normalized || r.len() <= 2 {
            return Vec::new();
        }
        r[1..r.len() - 1].to_vec()
    }
}

fn det2(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn int_det(m: &[&Vec<i64>]) -> i64 {
    let k = m.len();
    let mut a: Vec<Vec<BigRational>> = (0..k).map(|r| m.iter().map(|v| q(v[r])).collect()).collect();
    let mut det = q(1);
    for c in 0..k {
        let Some(p) = (c..k).find(|&i| !a[i][c].is_zero()) else { return 0 };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        for i in c + 1..k {
            let f = &a[i][c] / &a[c][c];
            for j in c..k {
                let d = &f * &a[c][j];
                a[i][j] = &a[i][j] - d;
            }
        }
    }
    det.to_integer().try_into().expect("determinant fits in i64")
}

/// Bring rays to the form `(a, 1)` if a primitive functional takes value 1
/// on all of them.
fn normalize_rays(rays: &[(i64, i64)]) -> Option<Vec<(i64, i64)>> {
    let (i, j) = (0..rays.len())
        .flat_map(|i| (i + 1..rays.len()).map(move |j| (i, j)))
        .find(|&(i, j)| det2(rays[i], rays[j]) != 0)?;
    let (a, b) = (rays[i], rays[j]);
    let d = det2(a, b);
    // f·a = 1, f·b = 1  ⇒  f = (b.1 − a.1, a.0 − b.0) / d
    let (f1, f2) = (b.1 - a.1, a.0 - b.0);
    if f1 % d != 0 || f2 % d != 0 {
        return None;
    }
    let (f1, f2) = (f1 / d, f2 / d);
    if rays.iter().any(|r| f1 * r.0 + f2 * r.1 != 1) {
        return None;
    }
    let e = f1.extended_gcd(&f2);
    if e.gcd.abs() != 1 {
        return None;
    }
    // g = (y, −x) with x f1 + y f2 = 1 has det[g; f] = 1
    let (g1, g2) = (e.y * e.gcd, -e.x * e.gcd);
    let mut out: Vec<(i64, i64)> = rays.iter().map(|r| (g1 * r.0 + g2 * r.1, 1)).collect();
    let m = out.iter().map(|r| r.0).min().unwrap();
    for r in out.iter_mut() {
        r.0 -= m;
    }
    Some(out)
}

/// The fan of the GIT quotient of a 2-dimensional toric problem.
pub fn quotient_fan(p: &ToricGITProblem) -> Result<ToricFan> {
    wall_check(p)?;
    let ker = integer_kernel(&p.weights);
    if ker.len() != 2 {
        return Err(Error::Unsupported(format!("quotient has dimension {}, expected 2", ker.len())));
    }
    let raw: Vec<(i64, i64)> = (0..p.dim()).map(|j| (ker[0][j], ker[1][j])).collect();
    let (rays, normalized) = match normalize_rays(&raw) {
        Some(r) => (r, true),
        None => (raw, false),
    };
    let n = p.dim();
    let mut cones = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let m = det2(rays[a], rays[b]);
            if m == 0 {
                continue;
            }
            let support: Vec<bool> = (0..n).map(|j| j != a && j != b).collect();
            if !p.semistable_support(&support) {
                continue;
            }
            let comp: Vec<&Vec<i64>> = p.chosen(&support);
            debug_assert_eq!(int_det(&comp).unsigned_abs(), m.unsigned_abs());
            cones.push(FanCone {
                coords: vec![p.names[a].clone(), p.names[b].clone()],
                rays: vec![rays[a], rays[b]],
                multiplicity: m.unsigned_abs(),
            });
        }
    }
    cones.sort_by(|x, y| x.rays.cmp(&y.rays));
    Ok(ToricFan {
        chi: p.chi.clone(),
        rays,
        normalized,
        cones,
    })
}

/// Order of the stabilizer of a maximal cone computed from the weights: `|det|`
/// of the weights of the coordinates that stay nonzero.
pub fn complement_multiplicity(p: &ToricGITProblem, vanishing: &[usize]) -> u64 {
    let support: Vec<bool> = (0..p.dim()).map(|j| !vanishing.contains(&j)).collect();
    int_det(&p.chosen(&support)).unsigned_abs()
}

/// The quotient fan of the redundant presentation of `C_n`.
pub fn an_quotient_fan(n: usize, chi: &[i64]) -> Result<ToricFan> {
    if chi.len() != n.saturating_sub(1) {
        return Err(Error::ContractViolation(format!(
            "character needs {} entries for n = {n}",
            n.saturating_sub(1)
        )));
    }
    quotient_fan(&an_redundant_presentation(n, chi.to_vec())?)
}

#[derive(Clone, Debug, Serialize)]
pub struct Chamber {
    pub representative: i64,
    pub fan: ToricFan,
    pub orbifold: bool,
}

/// The two chambers `χ < 0`, `χ > 0` of the minimal presentation (the only
/// wall is `χ = 0`), flagging the one whose quotient is the orbifold `[V/C_n]`:
/// a single cone of multiplicity `n`.
pub fn an_minimal_chambers(n: i64) -> Result<Vec<Chamber>> {
    let p = an_minimal_presentation(n, 0);
    if wall_check(&p).is_ok() {
        return Err(Error::ContractViolation("χ = 0 should be a wall".into()));
    }
    [-1, 1]
        .into_iter()
        .map(|c| {
            let fan = quotient_fan(&p.with_chi(vec![c])?)?;
            let orbifold = fan.cones.len() == 1 && fan.cones[0].multiplicity == n as u64;
            Ok(Chamber {
                representative: c,
                fan,
                orbifold,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_examples() {
        let p = an_minimal_presentation(3, -1);
        assert!(p.semistable_support(&[true, false, false]));
        assert!(!p.semistable_support(&[false, true, true]));
        assert!(!p.semistable_support(&[false, false, false]));
    }

    #[test]
    fn a1_fan() {
        let f = an_quotient_fan(2, &[1]).unwrap();
        assert_eq!(f.used_rays(), vec![(0, 1), (1, 1), (2, 1)]);
        assert_eq!(f.interior_rays(), vec![(1, 1)]);
        let o = an_quotient_fan(2, &[-1]).unwrap();
        assert_eq!(o.cones.len(), 1);
        assert_eq!(o.cones[0].multiplicity, 2);
    }

    #[test]
    fn kernel_is_saturated_basis() {
        let p = an_redundant_presentation(4, vec![1, 1, 1]).unwrap();
        let ker = integer_kernel(&p.weights);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for r in 0..3 {
                assert_eq!(p.weights.iter().zip(v).map(|(w, c)| w[r] * c).sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn zero_character_is_a_wall() {
        assert!(matches!(wall_check(&an_minimal_presentation(2, 0)), Err(Error::Wall(_))));
    }

    #[test]
    fn two_chambers_one_orbifold() {
        let ch = an_minimal_chambers(4).unwrap();
        assert_eq!(ch.len(), 2);
        assert_eq!(ch.iter().filter(|c| c.orbifold).count(), 1);
    }
}
