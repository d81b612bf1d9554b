//! Univariate factorization over ℚ (degree ≤ 12): squarefree decomposition,
//! factorization modulo a small prime of good reduction, Hensel lifting to
//! a Mignotte-sized modulus, and factor recombination. Returned factors are
//! monic and certified by exact re-multiplication.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::modp::{self, Fp, PolyP};
use super::poly::MultiPoly;
use super::rational::{balanced_mod, small_primes, Rat};
use super::upoly::UPoly;

pub const FACTOR_DEGREE_CAP: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("polynomial is zero")]
    Zero,
    #[error("polynomial is not univariate (uses {0} variables)")]
    NotUnivariate(usize),
    #[error("degree {0} exceeds the factorization cap {FACTOR_DEGREE_CAP}")]
    DegreeAboveCap(usize),
}

/// Factors a univariate `MultiPoly` over ℚ into monic irreducible factors
/// with multiplicities. The product of the factors times the leading
/// coefficient reproduces the input exactly.
pub fn factor_rational(p: &MultiPoly) -> Result<Vec<(MultiPoly, usize)>, FactorError> {
    if p.is_zero() {
        return Err(FactorError::Zero);
    }
    let used: Vec<String> = p
        .vars()
        .names()
        .iter()
        .filter(|n| p.uses_var(n))
        .cloned()
        .collect();
    if used.len() > 1 {
        return Err(FactorError::NotUnivariate(used.len()));
    }
    if used.is_empty() {
        return Ok(vec![]); // nonzero constant
    }
    let name = &used[0];
    let up = multipoly_to_upoly(p, name);
    let factors = factor_upoly(&up)?;
    Ok(factors
        .into_iter()
        .map(|(f, m)| (upoly_to_multipoly(&f, p.vars(), name), m))
        .collect())
}

pub fn multipoly_to_upoly(p: &MultiPoly, var: &str) -> UPoly<Rat> {
    let i = p.vars().index_of(var).expect("unknown variable");
    let deg = p.total_degree() as usize;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (e, c) in p.terms() {
        coeffs[e[i] as usize] += c.clone();
    }
    UPoly::new(coeffs)
}

pub fn upoly_to_multipoly(
    f: &UPoly<Rat>,
    vars: &crate::algebra::poly::Vars,
    var: &str,
) -> MultiPoly {
    let i = vars.index_of(var).expect("unknown variable");
    let terms = f.coeffs().iter().enumerate().filter_map(|(k, c)| {
        if c.is_zero() {
            return None;
        }
        let mut e = vec![0u16; vars.len()];
        e[i] = k as u16;
        Some((e, c.clone()))
    });
    MultiPoly::from_terms(vars, terms)
}

/// Factorization of a nonzero `UPoly<Rat>` into monic irreducibles with
/// multiplicity.
pub fn factor_upoly(f: &UPoly<Rat>) -> Result<Vec<(UPoly<Rat>, usize)>, FactorError> {
    if f.is_zero() {
        return Err(FactorError::Zero);
    }
    let n = f.deg();
    if n > FACTOR_DEGREE_CAP {
        return Err(FactorError::DegreeAboveCap(n));
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let monic = f.monic();
    let mut out: Vec<(UPoly<Rat>, usize)> = Vec::new();
    for (sf, mult) in yun_squarefree(&monic) {
        for irr in factor_squarefree_monic_rat(&sf) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|a, b| {
        (a.0.deg(), format_key(&a.0)).cmp(&(b.0.deg(), format_key(&b.0)))
    });
    debug_assert!({
        let mut prod = UPoly::constant(f.leading().clone());
        for (g, m) in &out {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        prod == *f
    });
    Ok(out)
}

fn format_key(f: &UPoly<Rat>) -> String {
    f.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Yun's squarefree decomposition of a monic polynomial over ℚ:
/// returns pairs (monic squarefree factor, multiplicity).
pub fn yun_squarefree(f: &UPoly<Rat>) -> Vec<(UPoly<Rat>, usize)> {
    assert!(!f.is_zero());
    if f.deg() == 0 {
        return vec![];
    }
    let df = f.derivative();
    let g = f.gcd(&df);
    if g.deg() == 0 {
        return vec![(f.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut c = f.divrem(&g).0;
    let mut d = df.divrem(&g).0.sub(&c.derivative());
    let mut i = 1usize;
    while c.deg() > 0 {
        let a = c.gcd(&d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        c = c.divrem(&a).0;
        d = d.divrem(&a).0.sub(&c.derivative());
        i += 1;
    }
    out
}

/// Factors a monic squarefree rational polynomial into monic irreducibles.
fn factor_squarefree_monic_rat(f: &UPoly<Rat>) -> Vec<UPoly<Rat>> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    // Scale x -> x/c to obtain a monic *integer* polynomial with the same
    // factorization shape: H(x) = c^(n-1) * (c*f)(x/c) for c the lcm of
    // the coefficient denominators.
    let mut c = BigInt::one();
    for coeff in f.coeffs() {
        c = c.lcm(coeff.denom());
    }
    let h: Vec<BigInt> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            // a_k * c^(n-k): integral because c kills every denominator.
            let scaled = a * Rat::from_integer(c.pow((n - k) as u32));
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    let int_factors = factor_monic_int_squarefree(&h);
    let c_rat = Rat::from_integer(c.clone());
    int_factors
        .into_iter()
        .map(|g| {
            // Map back: G(c*x) / c^(deg G), monic over Q.
            let gd = g.len() - 1;
            let coeffs: Vec<Rat> = g
                .iter()
                .enumerate()
                .map(|(k, a)| {
                    Rat::from_integer(a.clone())
                        * num_traits::pow::pow(c_rat.clone(), k)
                        / Rat::from_integer(c.pow(gd as u32))
                })
                .collect();
            UPoly::new(coeffs)
        })
        .collect()
}

/// Zassenhaus factorization of a monic squarefree integer polynomial.
/// Coefficient vectors hold the x^i coefficient at index i; the leading
/// coefficient is 1.
fn factor_monic_int_squarefree(h: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = h.len() - 1;
    if n <= 1 {
        return vec![h.to_vec()];
    }
    // Prime of good reduction: monic stays monic, image squarefree.
    let (fp, hp) = small_primes()
        .find_map(|p| {
            let fp = Fp::new(p);
            let hp: PolyP = h
                .iter()
                .map(|a| a.mod_floor(&BigInt::from(p)).to_u64_digits().1.first().copied().unwrap_or(0))
                .collect();
            let hp = modp::trim(hp);
            if modp::deg(&hp) != Some(n) {
                return None;
            }
            let dh = modp::derivative(&fp, &hp);
            if modp::deg(&modp::gcd(&fp, &hp, &dh)) == Some(0) {
                Some((fp, hp))
            } else {
                None
            }
        })
        .expect("no prime of good reduction in the fixed list");

    let modular = modp::factor_squarefree_monic(&fp, &hp);
    if modular.len() == 1 {
        return vec![h.to_vec()];
    }

    // Mignotte-style bound on factor coefficients: 2^n * ||h||_2.
    let norm_sq: BigInt = h.iter().map(|a| a * a).sum();
    let bound = (BigInt::one() << n) * (norm_sq.sqrt() + BigInt::one());
    let p_big = BigInt::from(fp.p);
    let mut modulus = p_big.clone();
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &p_big;
        k += 1;
    }
    let lifted = hensel_lift_tree(&fp, h, &modular, k);

    recombine(h, &lifted, &modulus)
}

/// Lifts the modular factorization of `h` from p to p^k (binary tree of
/// two-factor quadratic Hensel steps).
fn hensel_lift_tree(fp: &Fp, h: &[BigInt], factors: &[PolyP], k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        // h itself reduced mod p^k.
        let q = BigInt::from(fp.p).pow(k);
        return vec![h.iter().map(|a| a.mod_floor(&q)).collect()];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut g = vec![1u64];
    for f in left {
        g = modp::mul(fp, &g, f);
    }
    let mut hh = vec![1u64];
    for f in right {
        hh = modp::mul(fp, &hh, f);
    }
    let (gcd, s, t) = modp::xgcd(fp, &g, &hh);
    assert_eq!(gcd, vec![1u64], "modular factors are not coprime");
    let (g_lift, h_lift) = hensel_lift_pair(fp, h, &g, &hh, &s, &t, k);
    let mut out = hensel_lift_tree_sub(fp, &g_lift, left, k);
    out.extend(hensel_lift_tree_sub(fp, &h_lift, right, k));
    out
}

fn hensel_lift_tree_sub(fp: &Fp, h: &[BigInt], factors: &[PolyP], k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![h.to_vec()];
    }
    hensel_lift_tree(fp, h, factors, k)
}

/// Quadratic two-factor Hensel lifting: from f ≡ g·h (mod p) with
/// s·g + t·h ≡ 1 (mod p), produces g*, h* with f ≡ g*·h* (mod p^k),
/// g* ≡ g, h* ≡ h (mod p). All polynomials monic.
fn hensel_lift_pair(
    fp: &Fp,
    f: &[BigInt],
    g: &PolyP,
    h: &PolyP,
    s: &PolyP,
    t: &PolyP,
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let to_big = |v: &PolyP| -> Vec<BigInt> { v.iter().map(|&x| BigInt::from(x)).collect() };
    let mut q = BigInt::from(fp.p);
    let target = q.pow(k);
    let mut gg = to_big(g);
    let mut hh = to_big(h);
    let mut ss = to_big(s);
    let mut tt = to_big(t);
    let f: Vec<BigInt> = f.to_vec();
    while q < target {
        let q2 = (&q * &q).min(target.clone());
        // e = f - g*h mod q2
        let e = zsub(&f, &zmul(&gg, &hh), &q2);
        // (qq, r) = divrem(s*e, h): h monic so division over Z/q2 works.
        let (qq, r) = zdivrem_monic(&zmul(&ss, &e), &hh, &q2);
        let g_new = znorm(&zadd(&zadd(&gg, &zmul(&tt, &e), &q2), &zmul(&qq, &gg), &q2), &q2);
        let h_new = znorm(&zadd(&hh, &r, &q2), &q2);
        // Bezout update: b = s*g_new + t*h_new - 1 mod q2
        let mut b = zadd(&zmul(&ss, &g_new), &zmul(&tt, &h_new), &q2);
        if b.is_empty() {
            b = vec![BigInt::from(-1)];
        } else {
            b[0] -= 1;
        }
        let b = znorm(&b, &q2);
        let (c, d) = zdivrem_monic(&zmul(&ss, &b), &h_new, &q2);
        let s_new = znorm(&zsub(&ss, &d, &q2), &q2);
        let t_new = znorm(&zsub(&zsub(&tt, &zmul(&tt, &b), &q2), &zmul(&c, &g_new), &q2), &q2);
        gg = g_new;
        hh = h_new;
        ss = s_new;
        tt = t_new;
        q = q2;
    }
    (gg, hh)
}

fn znorm(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|x| x.mod_floor(m)).collect();
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zadd(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        let mut v = BigInt::zero();
        if let Some(x) = a.get(i) {
            v += x;
        }
        if let Some(y) = b.get(i) {
            v += y;
        }
        out[i] = v.mod_floor(m);
    }
    znorm(&out, m)
}

fn zsub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        let mut v = BigInt::zero();
        if let Some(x) = a.get(i) {
            v += x;
        }
        if let Some(y) = b.get(i) {
            v -= y;
        }
        out[i] = v.mod_floor(m);
    }
    znorm(&out, m)
}

/// Division with remainder by a monic polynomial over ℤ/m.
fn zdivrem_monic(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let a = znorm(a, m);
    let d = znorm(d, m);
    assert!(d.last().is_some_and(|x| x.is_one()), "divisor must be monic");
    if a.len() < d.len() {
        return (vec![], a);
    }
    let mut rem = a.clone();
    let dd = d.len() - 1;
    let qd = a.len() - d.len();
    let mut qv = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].mod_floor(m);
        if !c.is_zero() {
            qv[k] = c.clone();
            for (i, dc) in d.iter().enumerate() {
                rem[k + i] = (&rem[k + i] - &c * dc).mod_floor(m);
            }
        }
    }
    (znorm(&qv, m), znorm(&rem, m))
}

/// Tries subsets of the lifted modular factors against h (balanced
/// coefficients, exact division over ℤ).
fn recombine(h: &[BigInt], lifted: &[Vec<BigInt>], modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut rest: Vec<BigInt> = h.to_vec();
    let mut pool: Vec<Vec<BigInt>> = lifted.to_vec();
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= pool.len() {
        let mut found = true;
        while found && 2 * size <= pool.len() {
            found = false;
            for combo in subsets(pool.len(), size) {
                let mut cand = vec![BigInt::one()];
                for &i in &combo {
                    cand = zmul(&cand, &pool[i]);
                }
                let cand: Vec<BigInt> =
                    znorm(&cand, modulus).iter().map(|c| balanced_mod(c, modulus)).collect();
                if let Some(quot) = exact_div_int(&rest, &cand) {
                    out.push(cand);
                    rest = quot;
                    for &i in combo.iter().rev() {
                        pool.remove(i);
                    }
                    found = true;
                    break;
                }
            }
        }
        size += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out.sort();
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Exact division of monic integer polynomials; None if not divisible.
fn exact_div_int(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    if d.len() > a.len() || d.is_empty() || !d.last().unwrap().is_one() {
        return None;
    }
    let mut rem = a.to_vec();
    let dd = d.len() - 1;
    let qd = a.len() - d.len();
    let mut q = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            q[k] = c.clone();
            for (i, dc) in d.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
        }
    }
    if rem.iter().all(|x| x.is_zero()) {
        Some(q)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Vars;

    fn fr(coeffs: &[i64]) -> Vec<(UPoly<Rat>, usize)> {
        factor_upoly(&UPoly::from_i64(coeffs)).unwrap()
    }

    #[test]
    fn cubic_with_rational_roots() {
        // x^3 - x = x (x-1) (x+1)
        let fs = fr(&[0, -1, 0, 1]);
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(|(_, m)| *m == 1));
        let roots: Vec<String> = fs.iter().map(|(f, _)| format!("{:?}", f.coeffs())).collect();
        assert_eq!(roots.len(), 3);
    }

    #[test]
    fn irreducible_cubic() {
        // x^3 - 2 has no rational root, hence is irreducible.
        let fs = fr(&[-2, 0, 0, 1]);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0, UPoly::from_i64(&[-2, 0, 0, 1]));
    }

    #[test]
    fn cyclotomic_split() {
        // x^3 - 1 = (x-1)(x^2+x+1)
        let fs = fr(&[-1, 0, 0, 1]);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().any(|(f, _)| *f == UPoly::from_i64(&[-1, 1])));
        assert!(fs.iter().any(|(f, _)| *f == UPoly::from_i64(&[1, 1, 1])));
    }

    #[test]
    fn multiplicities_and_leading_coefficient() {
        // 3 (x-1)^2 (x^2+1)
        let f = UPoly::from_i64(&[-1, 1])
            .mul(&UPoly::from_i64(&[-1, 1]))
            .mul(&UPoly::from_i64(&[1, 0, 1]))
            .scale(&Rat::from_integer(3.into()));
        let fs = factor_upoly(&f).unwrap();
        assert_eq!(fs.len(), 2);
        let mut prod = UPoly::constant(f.leading().clone());
        for (g, m) in &fs {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn degree_twelve_and_cap() {
        // (x^2+1)(x^2-2)(x^2-3)(x^2+x+1)(x^4+x+1): degree 12 mix.
        let f = UPoly::from_i64(&[1, 0, 1])
            .mul(&UPoly::from_i64(&[-2, 0, 1]))
            .mul(&UPoly::from_i64(&[-3, 0, 1]))
            .mul(&UPoly::from_i64(&[1, 1, 1]))
            .mul(&UPoly::from_i64(&[1, 1, 0, 0, 1]));
        assert_eq!(f.deg(), 12);
        let fs = factor_upoly(&f).unwrap();
        assert_eq!(fs.len(), 5);
        let too_big = f.mul(&UPoly::from_i64(&[0, 1]));
        assert_eq!(
            factor_upoly(&too_big),
            Err(FactorError::DegreeAboveCap(13))
        );
    }

    #[test]
    fn degree9_norm_shape() {
        // Norm-like product (x^3-2)(x^3 - 3x - 3)(x^3 + 3x^2 + 3x - 1) stays exact.
        let a = UPoly::from_i64(&[-2, 0, 0, 1]);
        let b = UPoly::from_i64(&[-3, -3, 0, 1]);
        let c = UPoly::from_i64(&[-1, 3, 3, 1]);
        let f = a.mul(&b).mul(&c);
        let fs = factor_upoly(&f).unwrap();
        let mut prod = UPoly::constant(Rat::from_integer(1.into()));
        for (g, m) in &fs {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod, f);
        assert_eq!(fs.iter().map(|(f, _)| f.deg()).sum::<usize>(), 9);
    }

    #[test]
    fn multipoly_front_end() {
        let vars = Vars::new(["x", "y"]);
        let p = MultiPoly::parse(&vars, "x^3 - x").unwrap();
        let fs = factor_rational(&p).unwrap();
        assert_eq!(fs.len(), 3);
        let two_vars = MultiPoly::parse(&vars, "x*y").unwrap();
        assert_eq!(factor_rational(&two_vars), Err(FactorError::NotUnivariate(2)));
    }
}
