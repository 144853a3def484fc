//! The `S₃` presentation: `B: Sym²U → U ⊕ C` subject to
//! `B^∨ ∘ (b, 1) ∘ B = (det B) J`, where `b` is the bilinear form on `U`
//! given by the `C`-component of `B`.
//!
//! `B` is stored as a 3×3 matrix: columns are the symmetric-product basis
//! `(e₁², e₁e₂, e₂²)` of `Sym²U`, rows are `(U₁, U₂, C)`. In this basis `b` has
//! Gram matrix `[[c₀, c₁], [c₁, c₂]]` for `C`-row `(c₀, c₁, c₂)`, and `J` is
//! `[[0,0,1],[0,−½,0],[1,0,0]]`, which satisfies `Sym²(g)ᵀ J Sym²(g) = det(g)² J`.
//! `GL(U)` acts by `B ↦ (g ⊕ 1) · B · Sym²(g)⁻¹`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::field::{Field, GaussRat, Scalar};
use crate::linalg::{Mat2, Mat3};
use crate::orbit::FiniteSubgroup;
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S3Point {
    pub b: Mat3,
}

impl S3Point {
    pub fn from_i64(m: [[i64; 3]; 3]) -> S3Point {
        S3Point { b: Mat3::from_i64(m) }
    }

    /// Gram matrix of `b(u, v) = B_C(u·v)`.
    pub fn form(&self) -> Mat2 {
        let c = &self.b.0[2];
        Mat2::new(c[0].clone(), c[1].clone(), c[1].clone(), c[2].clone())
    }
}

pub fn j_nat() -> Mat3 {
    let h = Scalar::from_ratio(-1, 2);
    let z = Scalar::zero;
    Mat3::from_rows(&[
        [z(), z(), Scalar::one()],
        [z(), h, z()],
        [Scalar::one(), z(), z()],
    ])
}

/// `Sym²(g)` in the basis `(e₁², e₁e₂, e₂²)`.
pub fn sym2_nat(g: &Mat2) -> Mat3 {
    let [[a, b], [c, d]] = &g.0;
    let two = Scalar::from_i64(2);
    Mat3::from_rows(&[
        [a * a, a * b, b * b],
        [&two * &(a * c), &(a * d) + &(b * c), &two * &(b * d)],
        [c * c, c * d, d * d],
    ])
}

fn block(form: &Mat2) -> Mat3 {
    let z = Scalar::zero;
    let f = &form.0;
    Mat3::from_rows(&[
        [f[0][0].clone(), f[0][1].clone(), z()],
        [f[1][0].clone(), f[1][1].clone(), z()],
        [z(), z(), Scalar::one()],
    ])
}

/// `Bᵀ·diag(b, 1)·B − det(B)·J`.
pub fn s3_residual(p: &S3Point) -> Mat3 {
    let lhs = p.b.transpose().mul(&block(&p.form())).mul(&p.b);
    lhs.sub(&j_nat().scale(&p.b.det()))
}

pub fn s3_act(g: &Mat2, p: &S3Point) -> S3Point {
    let z = Scalar::zero;
    let gu = &g.0;
    let ext = Mat3::from_rows(&[
        [gu[0][0].clone(), gu[0][1].clone(), z()],
        [gu[1][0].clone(), gu[1][1].clone(), z()],
        [z(), z(), Scalar::one()],
    ]);
    let inv = sym2_nat(g).inverse().expect("Sym² of an invertible matrix");
    S3Point {
        b: ext.mul(&p.b).mul(&inv),
    }
}

/// `U` = sum-zero vectors in `Q³` with basis `u₁ = e₁ − e₂`, `u₂ = e₂ − e₃`;
/// `B_U(u·v)` = projection of the coordinatewise product to `U`, and
/// `B_C(u·v) = c⟨u, v⟩` with `c` the unique nonzero constant for which the
/// relation holds (it comes out as `−1/6`).
pub fn s3_base_point() -> S3Point {
    let u = [[1i64, -1, 0], [0, 1, -1]];
    let pairs = [(0, 0), (0, 1), (1, 1)];
    let third = Scalar::from_ratio(1, 3);
    let mut bu: Vec<[Scalar; 2]> = Vec::new();
    let mut iota = Vec::new();
    for &(a, b) in &pairs {
        let prod: Vec<Scalar> = (0..3).map(|k| Scalar::from_i64(u[a][k] * u[b][k])).collect();
        let mean = &(&(&prod[0] + &prod[1]) + &prod[2]) * &third;
        let w: Vec<Scalar> = prod.iter().map(|x| x - &mean).collect();
        // w = s u₁ + t u₂ = (s, t − s, −t)
        bu.push([w[0].clone(), -&w[2]]);
        iota.push(Scalar::from_i64((0..3).map(|k| u[a][k] * u[b][k]).sum()));
    }
    let with_c = |c: &Scalar| S3Point {
        b: Mat3::from_rows(&[
            [bu[0][0].clone(), bu[1][0].clone(), bu[2][0].clone()],
            [bu[0][1].clone(), bu[1][1].clone(), bu[2][1].clone()],
            [c * &iota[0], c * &iota[1], c * &iota[2]],
        ]),
    };
    // residual(c) = c·(X − D·J) + c²·Y; solve from the (0,0) entry, where J vanishes
    let r1 = s3_residual(&with_c(&Scalar::one())).0[0][0].clone();
    let r2 = s3_residual(&with_c(&Scalar::from_i64(2))).0[0][0].clone();
    // r(c) = c x + c² y:  r1 = x + y, r2 = 2x + 4y
    let y = &(&r2 - &(&r1 * &Scalar::from_i64(2))) * &Scalar::from_ratio(1, 2);
    let x = &r1 - &y;
    let c = -(&x / &y);
    with_c(&c)
}

// ---- Gaussian rational roots -------------------------------------------------
//
// A root `z` of `k₀zⁿ + … + kₙ` with Gaussian-integer coefficients satisfies
// `k₀z ∈ Z[i]` (rational root theorem over the UFD `Z[i]`). So it is enough to
// know `z` to within `1/(2|k₀|)` in each component: approximate roots come from
// a Durand–Kerner pass, are polished by Newton steps in exact arithmetic on a
// dyadic grid, and the rounded candidates `round(k₀z)/k₀` are then checked by
// exact evaluation. Only exactly verified roots are returned.

type C64 = (f64, f64);

fn cmul(a: C64, b: C64) -> C64 {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: C64, b: C64) -> C64 {
    let n = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
}

/// Approximate roots of a monic polynomial (highest degree first, leading 1
/// omitted).
fn durand_kerner(monic: &[C64]) -> Vec<C64> {
    let n = monic.len();
    let eval = |z: C64| monic.iter().fold((1.0, 0.0), |acc, c| {
        let m = cmul(acc, z);
        (m.0 + c.0, m.1 + c.1)
    });
    let radius = 1.0 + monic.iter().map(|c| c.0.hypot(c.1)).fold(0.0, f64::max);
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let t = 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            (radius * t.cos(), radius * t.sin())
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let mut den = (1.0, 0.0);
            for (l, w) in z.iter().enumerate() {
                if l != k {
                    den = cmul(den, (z[k].0 - w.0, z[k].1 - w.1));
                }
            }
            if den == (0.0, 0.0) {
                den = (1e-12, 0.0);
            }
            let step = cdiv(eval(z[k]), den);
            z[k] = (z[k].0 - step.0, z[k].1 - step.1);
            moved = moved.max(step.0.hypot(step.1) / (1.0 + z[k].0.hypot(z[k].1)));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn bits(n: &BigInt) -> u64 {
    n.bits()
}

fn round_to(x: &BigRational, den: &BigInt) -> BigRational {
    let d = BigRational::from_integer(den.clone());
    (x * &d).round() / d
}

fn round_gauss(z: &Scalar, den: &BigInt) -> Scalar {
    let g = z.as_gauss().expect("Q(i) value");
    Scalar::from_gauss(GaussRat::new(round_to(&g.re, den), round_to(&g.im, den)))
}

fn to_c64(z: &GaussRat) -> C64 {
    (z.re.to_f64().unwrap_or(0.0), z.im.to_f64().unwrap_or(0.0))
}

fn from_c64(z: C64) -> Scalar {
    let r = |x: f64| BigRational::from_float(x).unwrap_or_else(|| BigRational::from_integer(BigInt::from(0)));
    Scalar::from_gauss(GaussRat::new(r(z.0), r(z.1)))
}

/// Distinct roots in `Q(i)` of `Σ cs[k] z^(deg−k)` (highest degree first).
pub fn gaussian_roots(cs: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut g: Vec<GaussRat> = Vec::new();
    for c in cs {
        g.push(
            c.reduce()
                .as_gauss()
                .cloned()
                .ok_or_else(|| Error::Unsupported("coefficients outside Q(i)".into()))?,
        );
    }
    while g.first().is_some_and(GaussRat::is_zero) {
        g.remove(0);
    }
    let mut roots = Vec::new();
    while g.len() > 1 && g.last().unwrap().is_zero() {
        g.pop();
        if roots.is_empty() {
            roots.push(Scalar::zero());
        }
    }
    if g.len() <= 1 {
        return Ok(roots);
    }
    let poly: Vec<Scalar> = g.iter().cloned().map(Scalar::from_gauss).collect();
    let deg = poly.len() - 1;
    let eval = |z: &Scalar| poly.iter().fold(Scalar::zero(), |acc, c| &(&acc * z) + c);
    let deriv: Vec<Scalar> = poly[..deg]
        .iter()
        .enumerate()
        .map(|(k, c)| c * &Scalar::from_i64((deg - k) as i64))
        .collect();
    let eval_d = |z: &Scalar| deriv.iter().fold(Scalar::zero(), |acc, c| &(&acc * z) + c);

    // clear denominators: k₀ as a Gaussian integer bounds the root denominators
    let l = g
        .iter()
        .flat_map(|z| [z.re.denom(), z.im.denom()])
        .fold(BigInt::one(), |acc, d| acc.lcm(d));
    let lq = BigRational::from_integer(l);
    let k0 = GaussRat::new(&g[0].re * &lq, &g[0].im * &lq);
    let k0s = Scalar::from_gauss(k0.clone());
    let norm = (&k0.re * &k0.re + &k0.im * &k0.im).to_integer();
    let want = bits(&norm) + 8;
    let grid = BigInt::one() << (want as usize + 4);

    let lead = to_c64(&g[0]);
    let monic: Vec<C64> = g[1..].iter().map(|c| cdiv(to_c64(c), lead)).collect();
    for guess in durand_kerner(&monic) {
        if !(guess.0.is_finite() && guess.1.is_finite()) {
            continue;
        }
        let mut z = round_gauss(&from_c64(guess), &grid);
        // Newton on the grid until it settles
        for _ in 0..64 {
            let d = eval_d(&z);
            if d.is_zero() {
                break;
            }
            let next = round_gauss(&(&z - &(&eval(&z) / &d)), &grid);
            if next == z {
                break;
            }
            z = next;
        }
        let cand = &round_gauss(&(&k0s * &z), &BigInt::one()) / &k0s;
        if !roots.contains(&cand) && eval(&cand).is_zero() {
            roots.push(cand);
        }
    }
    Ok(roots)
}

/// Coefficients `(k₀, k₁, k₂, k₃)` of the invariant cubic
/// `κ(u) = b(u, B_U(u·u)) = Σ k_a u₁^(3−a) u₂^a`.
pub fn invariant_cubic(p: &S3Point) -> [Scalar; 4] {
    let v = Poly::ring(&["u1", "u2"]);
    let (u1, u2) = (v[0].clone(), v[1].clone());
    let sq = [u1.mul(&u1), u1.mul(&u2).scale(&Scalar::from_i64(2)), u2.mul(&u2)];
    let w: Vec<Poly> = (0..2)
        .map(|r| (0..3).fold(Poly::zero(), |acc, c| acc.add(&sq[c].scale(&p.b.0[r][c]))))
        .collect();
    let f = p.form();
    let u = [u1, u2];
    let mut kappa = Poly::zero();
    for a in 0..2 {
        for b in 0..2 {
            kappa = kappa.add(&u[a].mul(&w[b]).scale(&f.0[a][b]));
        }
    }
    let mut out = [Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero()];
    for (m, c) in kappa.terms() {
        let e2 = m.0.get(1).copied().unwrap_or(0) as usize;
        out[e2] = c.clone();
    }
    out
}

fn root_lines(k: &[Scalar; 4]) -> Result<Vec<[Scalar; 2]>> {
    let mut lines = Vec::new();
    // κ(z, 1) = k₀z³ + k₁z² + k₂z + k₃; the line (1, 0) is a root iff k₀ = 0
    if k[0].is_zero() {
        lines.push([Scalar::one(), Scalar::zero()]);
    }
    for z in gaussian_roots(k)? {
        lines.push([z, Scalar::one()]);
    }
    Ok(lines)
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// The stabilizer of `p` in `GL(U)`.
///
/// It preserves the cubic `κ` and hence permutes its three root lines; each
/// permutation pins `g` down up to a scalar `μ`, and preserving `b` fixes
/// `μ²`. Root lines are searched over `Q(i)`, so points whose cubic does not
/// split there are reported as unsupported.
pub fn s3_stabilizer(p: &S3Point) -> Result<FiniteSubgroup<Mat2>> {
    if p.b.det().is_zero() {
        return Err(Error::ContractViolation("det B = 0".into()));
    }
    let form = p.form();
    if form.det().is_zero() {
        return Err(Error::ContractViolation("b is degenerate".into()));
    }
    if !s3_residual(p).is_zero() {
        return Err(Error::ContractViolation("relation does not hold".into()));
    }
    let lines = root_lines(&invariant_cubic(p))?;
    if lines.len() != 3 {
        return Err(Error::Unsupported(format!(
            "invariant cubic has {} root lines over Q(i)",
            lines.len()
        )));
    }
    let coords_in = |r0: &[Scalar; 2], r1: &[Scalar; 2], v: &[Scalar; 2]| -> [Scalar; 2] {
        Mat2::from_cols(r0, r1).inverse().expect("distinct lines").apply(v)
    };
    let [a, b] = coords_in(&lines[0], &lines[1], &lines[2]);
    let src = Mat2::from_cols(&lines[0], &lines[1]).inverse().unwrap();
    let mut tower: Field = p.b.field();
    let mut elements = Vec::new();
    for s in PERMS {
        let [a2, b2] = coords_in(&lines[s[0]], &lines[s[1]], &lines[s[2]]);
        let l0 = &a2 / &a;
        let l1 = &b2 / &b;
        let img0 = lines[s[0]].clone().map(|c| &c * &l0);
        let img1 = lines[s[1]].clone().map(|c| &c * &l1);
        let g0 = Mat2::from_cols(&img0, &img1).mul(&src);
        let pulled = g0.transpose().mul(&form).mul(&g0);
        let (i, j) = if !form.0[0][0].is_zero() { (0, 0) } else { (0, 1) };
        let mu2 = &form.0[i][j] / &pulled.0[i][j];
        if pulled.scale(&mu2) != form {
            continue;
        }
        let (f, mu) = tower.sqrt_or_adjoin(&mu2)?;
        tower = f;
        for m in [mu.clone(), -&mu] {
            let g = g0.scale(&m);
            if s3_act(&g, p) == *p && !elements.contains(&g) {
                elements.push(g);
            }
        }
    }
    FiniteSubgroup::from_elements(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_point_relation_and_constant() {
        let p = s3_base_point();
        assert!(s3_residual(&p).is_zero());
        assert_eq!(p.b.0[2][0], Scalar::from_ratio(-1, 3));
    }

    #[test]
    fn j_is_det_squared_invariant() {
        let g = Mat2::from_i64([[2, 1], [3, -1]]);
        let s = sym2_nat(&g);
        let d2 = g.det().square();
        assert_eq!(s.transpose().mul(&j_nat()).mul(&s), j_nat().scale(&d2));
    }

    #[test]
    fn base_stabilizer_is_s3() {
        let s = s3_stabilizer(&s3_base_point()).unwrap();
        assert_eq!(s.order(), 6);
        assert_eq!(s.iso_type(), "S3");
    }

    #[test]
    fn gaussian_roots_of_split_cubic() {
        // (z − i)(z − 1/2)(z + 2) = z³ + (3/2 − i) z² + (−1 − 3/2 i) z + i
        let cs = [Scalar::one(), crate::sc("3/2-i"), crate::sc("-1-3/2*i"), Scalar::i()];
        let r = gaussian_roots(&cs).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.contains(&Scalar::i()));
        assert!(r.contains(&Scalar::from_ratio(1, 2)));
    }

    fn expand(roots: &[Scalar]) -> Vec<Scalar> {
        let mut cs = vec![Scalar::one()];
        for r in roots {
            let mut next = cs.clone();
            next.push(Scalar::zero());
            for (k, c) in cs.iter().enumerate() {
                next[k + 1] = &next[k + 1] - &(c * r);
            }
            cs = next;
        }
        cs
    }

    #[test]
    fn gaussian_roots_with_large_heights() {
        let roots = [
            crate::sc("123456789/1024 + 987654321/77*i"),
            crate::sc("-31415926535/2718281828"),
            crate::sc("17/3*i"),
        ];
        let cs: Vec<Scalar> = expand(&roots).iter().map(|c| c * &crate::sc("5-7*i")).collect();
        let r = gaussian_roots(&cs).unwrap();
        assert_eq!(r.len(), 3);
        for z in &roots {
            assert!(r.contains(z));
        }
    }

    #[test]
    fn gaussian_roots_skip_irrational_and_repeat() {
        // (z² − 2)(z − 3): only 3 is in Q(i)
        let cs = [Scalar::one(), Scalar::from_i64(-3), Scalar::from_i64(-2), Scalar::from_i64(6)];
        assert_eq!(gaussian_roots(&cs).unwrap(), vec![Scalar::from_i64(3)]);
        // (z − i)²(z + 1)
        let cs = expand(&[Scalar::i(), Scalar::i(), Scalar::from_i64(-1)]);
        let r = gaussian_roots(&cs).unwrap();
        assert_eq!(r.len(), 2);
    }
}
