//! Splitting fields of rational cubics and certified root location inside
//! the resulting towers.
//!
//! The tower shapes produced here are ℚ, ℚ(θ) for a quadratic θ, ℚ(λ) for
//! a cubic with square discriminant, and ℚ(λ)(μ) of degree 6 otherwise.
//! For pure cubics x³ − β the quadratic level is always taken to be a
//! primitive third root of unity ε with ε² + ε + 1 = 0, so the roots read
//! λ, λε, λε².
//!
//! Root location in a tower avoids factoring over number fields: roots of
//! a rational polynomial inside the cubic level are found by Trager's norm
//! trick (a degree ≤ 9 rational factorization plus a gcd over the level),
//! and square roots in quadratic extensions reduce to square roots one
//! level down.

use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use super::factor::{factor_upoly, multipoly_to_upoly, FactorError};

use super::numfield::{NfElem, NumberField, NumberFieldError};
use super::poly::MultiPoly;
use super::rational::{rat_sqrt_exact, Rat};
use super::upoly::UPoly;

#[derive(Debug, Error)]
pub enum SplitError {
    #[error("polynomial is not a cubic (degree {0})")]
    NotCubic(usize),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("factorization failed: {0}")]
    Factor(#[from] FactorError),
    #[error("tower construction failed: {0}")]
    Tower(#[from] NumberFieldError),
}

/// Splitting tower of a squarefree rational cubic together with its three
/// roots, each verified by exact substitution.
pub fn splitting_field(
    cubic: &MultiPoly,
) -> Result<(Arc<NumberField>, Vec<NfElem>), SplitError> {
    let used: Vec<&String> = cubic
        .vars()
        .names()
        .iter()
        .filter(|n| cubic.uses_var(n))
        .collect();
    if used.len() != 1 {
        return Err(SplitError::NotUnivariate);
    }
    let up = multipoly_to_upoly(cubic, used[0]);
    splitting_field_upoly(&up, super::numfield::TOWER_DEGREE_CAP)
}

pub fn splitting_field_upoly(
    cubic: &UPoly<Rat>,
    cap: usize,
) -> Result<(Arc<NumberField>, Vec<NfElem>), SplitError> {
    if cubic.is_zero() || cubic.deg() != 3 {
        return Err(SplitError::NotCubic(cubic.degree().unwrap_or(0)));
    }
    if !cubic.is_squarefree() {
        return Err(SplitError::NotSquarefree);
    }
    let monic = cubic.monic();
    let factors = factor_upoly(&monic)?;
    let degrees: Vec<usize> = factors.iter().map(|(f, _)| f.deg()).collect();

    let (field, roots) = match degrees.as_slice() {
        [1, 1, 1] => {
            let field = NumberField::rationals();
            let roots = factors
                .iter()
                .map(|(f, _)| NfElem::from_rat(&field, -f.coeff(0).cloned().unwrap_or_default()))
                .collect();
            (field, roots)
        }
        [1, 2] | [2, 1] => {
            let lin = factors.iter().find(|(f, _)| f.deg() == 1).unwrap().0.clone();
            let quad = factors.iter().find(|(f, _)| f.deg() == 2).unwrap().0.clone();
            let rational_root = -lin.coeff(0).cloned().unwrap_or_default();
            if is_pure_cubic(&monic) {
                // x³ − b³ = (x − b)(x² + bx + b²); adjoin ε instead of a
                // root of the quadratic so the roots read b, bε, bε².
                let field = NumberField::rationals().extend_rational(
                    "eps",
                    &UPoly::from_i64(&[1, 1, 1]),
                    cap,
                )?;
                let eps = NfElem::generator(&field, 0);
                let b = NfElem::from_rat(&field, rational_root);
                let roots = vec![b.clone(), b.mul(&eps), b.mul(&eps.pow(2))];
                (field, roots)
            } else {
                let field = NumberField::rationals().extend_rational("theta", &quad, cap)?;
                let theta = NfElem::generator(&field, 0);
                let p = quad.coeff(1).cloned().unwrap_or_default();
                let other = NfElem::from_rat(&field, -p).sub(&theta);
                let roots = vec![
                    NfElem::from_rat(&field, rational_root),
                    theta,
                    other,
                ];
                (field, roots)
            }
        }
        [3] => {
            let c = factors[0].0.clone();
            let field = NumberField::rationals().extend_rational("lam", &c, cap)?;
            let lam = NfElem::generator(&field, 0);
            if is_pure_cubic(&c) {
                let field = field.extend_rational("eps", &UPoly::from_i64(&[1, 1, 1]), cap)?;
                let lam = NfElem::generator(&field, 0);
                let eps = NfElem::generator(&field, 1);
                let roots = vec![lam.clone(), lam.mul(&eps), lam.mul(&eps.pow(2))];
                (field, roots)
            } else {
                // c = (x − λ)·q with q = x² + px + r over ℚ(λ), and
                // disc(q) = disc(c)/c'(λ)². The Galois trichotomy is decided
                // by whether disc(c) is a rational square.
                let disc = c.discriminant();
                let (p, r) = synthetic_quadratic(&c, &lam);
                match rat_sqrt_exact(&disc) {
                    Some(u) => {
                        // Degree-3 tower: both remaining roots are rational
                        // expressions in λ.
                        let cp = derivative_at(&c, &lam);
                        let sqrt_disc_q = NfElem::from_rat(&field, u).mul(&cp.inv());
                        let half = NfElem::from_rat(&field, Rat::new(1.into(), 2.into()));
                        let r1 = p.neg().add(&sqrt_disc_q).mul(&half);
                        let r2 = p.neg().sub(&sqrt_disc_q).mul(&half);
                        (field, vec![lam, r1, r2])
                    }
                    None => {
                        // disc(c) is not a rational square, hence not a
                        // square in the degree-3 level either (a rational
                        // with a square root in an odd-degree field has a
                        // rational square root), so q is irreducible over
                        // ℚ(λ) and the tower has degree 6.
                        let coeffs = vec![r.rep().clone(), p.rep().clone()];
                        let field6 = field.extend_with_coeffs("mu", coeffs, cap)?;
                        let lam6 = NfElem::generator(&field6, 0);
                        let mu = NfElem::generator(&field6, 1);
                        let p6 = p.embed(&field6);
                        let third = p6.neg().sub(&mu);
                        (field6, vec![lam6, mu, third])
                    }
                }
            }
        }
        _ => unreachable!("cubic factor degrees"),
    };

    for r in &roots {
        let val = eval_upoly_nf(&monic, r);
        assert!(val.is_zero(), "splitting-field root fails to verify");
    }
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            assert!(roots[i] != roots[j], "splitting-field roots collide");
        }
    }
    Ok((field, roots))
}

fn is_pure_cubic(c: &UPoly<Rat>) -> bool {
    c.deg() == 3
        && c.coeff(1).map(|x| x.is_zero()).unwrap_or(true)
        && c.coeff(2).map(|x| x.is_zero()).unwrap_or(true)
}

/// Coefficients (p, r) of the quadratic cofactor x² + p x + r of a monic
/// cubic after dividing out a known root.
fn synthetic_quadratic(c: &UPoly<Rat>, root: &NfElem) -> (NfElem, NfElem) {
    let field = root.field();
    let a2 = NfElem::from_rat(field, c.coeff(2).cloned().unwrap_or_default());
    let a1 = NfElem::from_rat(field, c.coeff(1).cloned().unwrap_or_default());
    // x³ + a2x² + a1x + a0 = (x − y)(x² + (a2+y)x + (a1 + a2 y + y²))
    let p = a2.add(root);
    let r = a1.add(&a2.mul(root)).add(&root.mul(root));
    (p, r)
}

fn derivative_at(c: &UPoly<Rat>, x: &NfElem) -> NfElem {
    let d = c.derivative();
    eval_upoly_nf(&d, x)
}

pub fn eval_upoly_nf(p: &UPoly<Rat>, x: &NfElem) -> NfElem {
    let field = x.field();
    let mut acc = NfElem::zero(field);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&NfElem::from_rat(field, c.clone()));
    }
    acc
}

pub fn upoly_rat_to_nf(p: &UPoly<Rat>, field: &Arc<NumberField>) -> UPoly<NfElem> {
    p.map(|c| NfElem::from_rat(field, c.clone()))
}

/// Square root of an element lying below any top quadratic level of the
/// tower. Positive answers are verified by squaring; `None` is certified
/// by the norm computation (Trager) at the cubic level and the rational
/// square test at the bottom.
pub fn sqrt_in_tower(x: &NfElem) -> Option<NfElem> {
    let field = x.field().clone();
    let shape: Vec<usize> = field.levels().iter().map(|l| l.degree()).collect();
    let result = match shape.as_slice() {
        [] => x.to_rat().and_then(|q| rat_sqrt_exact(&q)).map(|r| NfElem::from_rat(&field, r)),
        [3] => {
            // z² = x over the cubic level, via the norm method.
            let h = UPoly::new(vec![x.neg(), NfElem::zero(&field), NfElem::one(&field)]);
            roots_in_cubic_level(&h).into_iter().next()
        }
        [_, 2] | [2] => {
            let parent = field.parent();
            let lowered = x.project_to(&parent)?;
            // Level data: μ² + pμ + r.
            let top = field.levels().last().unwrap();
            let p_low = NfElem::from_rep(&parent, top.min_poly[1].clone());
            let r_low = NfElem::from_rep(&parent, top.min_poly[0].clone());
            // Branch 1: a square root already below.
            if let Some(s) = sqrt_in_tower(&lowered) {
                return Some(verify_sqrt(&s.embed(&field), x));
            }
            // Branch 2: z = α + βμ with 2α = βp, so z² = β²(p²/4 − r) = x.
            let quarter = NfElem::from_rat(&parent, Rat::new(1.into(), 4.into()));
            let denom = p_low.mul(&p_low).mul(&quarter).sub(&r_low);
            if denom.is_zero() {
                return None;
            }
            let beta_sq = lowered.mul(&denom.inv());
            let beta = sqrt_in_tower(&beta_sq)?;
            let half = NfElem::from_rat(&parent, Rat::new(1.into(), 2.into()));
            let alpha = beta.mul(&p_low).mul(&half);
            let mu = NfElem::generator(&field, field.num_levels() - 1);
            let z = alpha.embed(&field).add(&beta.embed(&field).mul(&mu));
            Some(verify_sqrt(&z, x))
        }
        other => panic!("unsupported tower shape {other:?} for square roots"),
    };
    result.map(|z| verify_sqrt(&z, x))
}

fn verify_sqrt(z: &NfElem, x: &NfElem) -> NfElem {
    assert!(z.mul(z) == *x, "square-root witness fails to verify");
    z.clone()
}

/// Roots, inside the degree-3 level ℚ(λ), of a squarefree polynomial with
/// coefficients in that level (degree ≤ 3 in practice). Uses Trager's norm
/// method: N_u(x) = Norm(h(x − uλ)) is computed as a 3×3 determinant over
/// ℚ[x], factored over ℚ, and degree-3 rational factors are matched back
/// through a gcd over ℚ(λ).
pub fn roots_in_cubic_level(h: &UPoly<NfElem>) -> Vec<NfElem> {
    let field = h.leading().field().clone();
    let shape: Vec<usize> = field.levels().iter().map(|l| l.degree()).collect();
    assert_eq!(shape, vec![3], "roots_in_cubic_level needs a pure cubic level");
    if h.deg() == 1 {
        let root = h.coeff(0).unwrap().neg().mul(&h.leading().inv());
        return vec![root];
    }
    let lam = NfElem::generator(&field, 0);
    for u in 0..32u32 {
        let shift = NfElem::from_rat(&field, Rat::from_integer(u.into())).neg().mul(&lam);
        let hs = h.compose_linear(&NfElem::one(&field), &shift);
        let n = norm_poly_cubic(&hs);
        if n.is_zero() || !n.is_squarefree() {
            continue;
        }
        let Ok(factors) = factor_upoly(&n) else {
            continue;
        };
        let mut roots = Vec::new();
        for (p, _) in factors {
            if p.deg() != 3 {
                continue;
            }
            let p_nf = upoly_rat_to_nf(&p, &field);
            let u_lam = NfElem::from_rat(&field, Rat::from_integer(u.into())).mul(&lam);
            let p_shift = p_nf.compose_linear(&NfElem::one(&field), &u_lam);
            let g = h.gcd(&p_shift);
            if g.degree() == Some(1) {
                let root = g.coeff(0).unwrap().neg().mul(&g.leading().inv());
                let check = h.eval(&root);
                assert!(check.is_zero(), "Trager root fails to verify");
                roots.push(root);
            }
        }
        return roots;
    }
    panic!("no squarefree norm found in 32 shifts (input not squarefree?)");
}

/// Norm from ℚ(λ)[x] to ℚ[x]: det of the regular representation, a 3×3
/// matrix of rational polynomials (direct Leibniz expansion).
fn norm_poly_cubic(h: &UPoly<NfElem>) -> UPoly<Rat> {
    let field = h.leading().field().clone();
    let min_poly = &field.levels()[0].min_poly;
    let c0 = rep_to_rat(&min_poly[0]);
    let c1 = rep_to_rat(&min_poly[1]);
    let c2 = rep_to_rat(&min_poly[2]);
    // Companion matrix of x³ + c2x² + c1x + c0.
    let z = Rat::zero();
    let companion = [
        [z.clone(), z.clone(), -c0.clone()],
        [Rat::one(), z.clone(), -c1.clone()],
        [z.clone(), Rat::one(), -c2.clone()],
    ];
    // Regular representation of each coefficient a(λ): a(Λ).
    let mut mat: Vec<Vec<UPoly<Rat>>> = vec![vec![UPoly::zero(); 3]; 3];
    for (k, coeff) in h.coeffs().iter().enumerate() {
        let a = nf_coeff_vector(coeff);
        // a(Λ) = a0·I + a1·Λ + a2·Λ².
        let lam1 = &companion;
        let lam2 = mat3_mul(lam1, lam1);
        for i in 0..3 {
            for j in 0..3 {
                let mut entry = Rat::zero();
                if i == j {
                    entry += &a[0];
                }
                entry += &a[1] * &lam1[i][j];
                entry += &a[2] * &lam2[i][j];
                if !entry.is_zero() {
                    let mono = monomial_rat(k, entry);
                    mat[i][j] = mat[i][j].add(&mono);
                }
            }
        }
    }
    det3_upoly(&mat)
}

fn monomial_rat(k: usize, c: Rat) -> UPoly<Rat> {
    let mut v = vec![Rat::zero(); k + 1];
    v[k] = c;
    UPoly::new(v)
}

fn rep_to_rat(rep: &super::numfield::Rep) -> Rat {
    match rep {
        super::numfield::Rep::Rat(q) => q.clone(),
        _ => panic!("expected a rational coefficient"),
    }
}

fn nf_coeff_vector(x: &NfElem) -> [Rat; 3] {
    let v = x.rational_coords();
    assert_eq!(v.len(), 3);
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

fn mat3_mul(a: &[[Rat; 3]; 3], b: &[[Rat; 3]; 3]) -> [[Rat; 3]; 3] {
    let mut out: [[Rat; 3]; 3] =
        std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
    for i in 0..3 {
        for j in 0..3 {
            let mut s = Rat::zero();
            for k in 0..3 {
                s += &a[i][k] * &b[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

fn det3_upoly(m: &[Vec<UPoly<Rat>>]) -> UPoly<Rat> {
    let a = |i: usize, j: usize| &m[i][j];
    let t1 = a(0, 0).mul(&a(1, 1).mul(a(2, 2)).sub(&a(1, 2).mul(a(2, 1))));
    let t2 = a(0, 1).mul(&a(1, 0).mul(a(2, 2)).sub(&a(1, 2).mul(a(2, 0))));
    let t3 = a(0, 2).mul(&a(1, 0).mul(a(2, 1)).sub(&a(1, 1).mul(a(2, 0))));
    t1.sub(&t2).add(&t3)
}

/// All roots of a squarefree rational polynomial of degree ≤ 3 that lie in
/// the tower `field` (our towers are Galois over ℚ, so an irreducible
/// cubic factor either splits completely or contributes no root at all).
pub fn roots_in_tower(g: &UPoly<Rat>, field: &Arc<NumberField>) -> Vec<NfElem> {
    assert!(!g.is_zero() && g.is_squarefree());
    let total = field.degree();
    let mut out = Vec::new();
    let factors = factor_upoly(&g.monic()).expect("degree within cap");
    for (f, _) in factors {
        match f.deg() {
            0 => {}
            1 => out.push(NfElem::from_rat(field, -f.coeff(0).cloned().unwrap_or_default())),
            2 => {
                if total % 2 != 0 {
                    continue;
                }
                let p = f.coeff(1).cloned().unwrap_or_default();
                let r = f.coeff(0).cloned().unwrap_or_default();
                let disc = NfElem::from_rat(field, &p * &p - Rat::from_integer(4.into()) * r);
                if let Some(s) = sqrt_in_tower(&disc) {
                    let half = NfElem::from_rat(field, Rat::new(1.into(), 2.into()));
                    let mp = NfElem::from_rat(field, -p);
                    out.push(mp.add(&s).mul(&half));
                    out.push(mp.sub(&s).mul(&half));
                }
            }
            3 => {
                if total % 3 != 0 {
                    continue;
                }
                // Our towers carry the cubic at level 0.
                let Some(cubic_field) = field.truncated_cubic_level() else {
                    continue;
                };
                let h = upoly_rat_to_nf(&f, &cubic_field);
                let partial = roots_in_cubic_level(&h);
                let Some(y0) = partial.first() else {
                    continue;
                };
                let y0_top = y0.embed(field);
                out.push(y0_top.clone());
                // Remaining quadratic cofactor over the tower.
                let f_nf = upoly_rat_to_nf(&f, field);
                let lin = UPoly::new(vec![y0_top.neg(), NfElem::one(field)]);
                let (quot, rem) = f_nf.divrem(&lin);
                assert!(rem.is_zero());
                let p = quot.coeff(1).unwrap().clone();
                let r = quot.coeff(0).unwrap().clone();
                let four = NfElem::from_rat(field, Rat::from_integer(4.into()));
                let disc = p.mul(&p).sub(&four.mul(&r));
                if let Some(s) = sqrt_in_tower(&disc) {
                    let half = NfElem::from_rat(field, Rat::new(1.into(), 2.into()));
                    out.push(p.neg().add(&s).mul(&half));
                    out.push(p.neg().sub(&s).mul(&half));
                }
            }
            _ => unreachable!("degree ≤ 3"),
        }
    }
    for r in &out {
        assert!(eval_upoly_nf(&g.monic(), r).is_zero());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn split_rational_cubic() {
        let (field, roots) = splitting_field_upoly(&UPoly::from_i64(&[0, -1, 0, 1]), 36).unwrap();
        assert_eq!(field.degree(), 1);
        let mut vals: Vec<Rat> = roots.iter().map(|r| r.to_rat().unwrap()).collect();
        vals.sort();
        assert_eq!(vals, vec![rat(-1), rat(0), rat(1)]);
    }

    #[test]
    fn split_pure_cubic_degree_six() {
        let (field, roots) = splitting_field_upoly(&UPoly::from_i64(&[-2, 0, 0, 1]), 36).unwrap();
        assert_eq!(field.degree(), 6);
        assert_eq!(field.levels()[0].name, "lam");
        assert_eq!(field.levels()[1].name, "eps");
        for r in &roots {
            assert_eq!(r.pow(3), NfElem::from_rat(&field, rat(2)));
        }
    }

    #[test]
    fn split_cyclic_cubic_degree_three() {
        // x³ − 3x + 1 has discriminant 81, a square: Galois group A₃.
        let (field, roots) = splitting_field_upoly(&UPoly::from_i64(&[1, -3, 0, 1]), 36).unwrap();
        assert_eq!(field.degree(), 3);
        assert_eq!(roots.len(), 3);
    }

    #[test]
    fn split_cube_case() {
        let (field, roots) = splitting_field_upoly(&UPoly::from_i64(&[-8, 0, 0, 1]), 36).unwrap();
        assert_eq!(field.degree(), 2);
        assert!(roots.iter().any(|r| r.to_rat() == Some(rat(2))));
    }

    #[test]
    fn non_squarefree_rejected() {
        let err = splitting_field_upoly(&UPoly::from_i64(&[0, 0, 1, 1]), 36);
        assert!(matches!(err, Err(SplitError::NotSquarefree)));
    }

    #[test]
    fn sqrt_in_towers() {
        // √(-3) lives in ℚ(ε): (2ε+1)² = -3.
        let field = NumberField::rationals()
            .extend_rational("eps", &UPoly::from_i64(&[1, 1, 1]), 36)
            .unwrap();
        let m3 = NfElem::from_rat(&field, rat(-3));
        let s = sqrt_in_tower(&m3).unwrap();
        assert_eq!(s.mul(&s), m3);
        assert!(sqrt_in_tower(&NfElem::from_rat(&field, rat(2))).is_none());
    }

    #[test]
    fn trager_roots_in_cubic_field() {
        // x³ − 4 has the root λ² ∈ ℚ(λ), λ³ = 2.
        let field = NumberField::rationals()
            .extend_rational("lam", &UPoly::from_i64(&[-2, 0, 0, 1]), 36)
            .unwrap();
        let h = upoly_rat_to_nf(&UPoly::from_i64(&[-4, 0, 0, 1]), &field);
        let roots = roots_in_cubic_level(&h);
        assert_eq!(roots.len(), 1);
        let lam = NfElem::generator(&field, 0);
        assert_eq!(roots[0], lam.mul(&lam));
        // x³ − 3 has no root in ℚ(∛2).
        let h3 = upoly_rat_to_nf(&UPoly::from_i64(&[-3, 0, 0, 1]), &field);
        assert!(roots_in_cubic_level(&h3).is_empty());
    }

    #[test]
    fn roots_in_degree_six_tower() {
        let (field, _) = splitting_field_upoly(&UPoly::from_i64(&[-2, 0, 0, 1]), 36).unwrap();
        // x³ − 4 splits there with roots λ²ε^m.
        let roots = roots_in_tower(&UPoly::from_i64(&[-4, 0, 0, 1]), &field);
        assert_eq!(roots.len(), 3);
        // x³ − 3 does not split.
        let none = roots_in_tower(&UPoly::from_i64(&[-3, 0, 0, 1]), &field);
        assert!(none.is_empty());
    }
}
