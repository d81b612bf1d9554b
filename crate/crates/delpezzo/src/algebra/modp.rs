//! Polynomial arithmetic over small prime fields F_p, as needed by the
//! modular step of rational factorization (distinct-degree plus
//! Cantor–Zassenhaus equal-degree splitting).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 31));
        Fp { p }
    }
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverting zero mod p");
        self.pow(a, self.p - 2)
    }
}

/// Dense polynomial over F_p; index i holds the x^i coefficient, trailing
/// zeros trimmed.
pub type PolyP = Vec<u64>;

pub fn trim(mut v: PolyP) -> PolyP {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn deg(v: &PolyP) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub fn add(f: &Fp, a: &PolyP, b: &PolyP) -> PolyP {
    let n = a.len().max(b.len());
    let mut out = vec![0; n];
    for i in 0..n {
        out[i] = f.add(
            a.get(i).copied().unwrap_or(0),
            b.get(i).copied().unwrap_or(0),
        );
    }
    trim(out)
}

pub fn sub(f: &Fp, a: &PolyP, b: &PolyP) -> PolyP {
    let n = a.len().max(b.len());
    let mut out = vec![0; n];
    for i in 0..n {
        out[i] = f.sub(
            a.get(i).copied().unwrap_or(0),
            b.get(i).copied().unwrap_or(0),
        );
    }
    trim(out)
}

pub fn mul(f: &Fp, a: &PolyP, b: &PolyP) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

pub fn scale(f: &Fp, a: &PolyP, k: u64) -> PolyP {
    trim(a.iter().map(|&c| f.mul(c, k)).collect())
}

pub fn divrem(f: &Fp, a: &PolyP, d: &PolyP) -> (PolyP, PolyP) {
    assert!(!d.is_empty());
    if a.len() < d.len() {
        return (vec![], a.clone());
    }
    let lc_inv = f.inv(*d.last().unwrap());
    let mut rem = a.clone();
    let dd = d.len() - 1;
    let qd = a.len() - d.len();
    let mut q = vec![0u64; qd + 1];
    for k in (0..=qd).rev() {
        let c = f.mul(rem[k + dd], lc_inv);
        if c != 0 {
            q[k] = c;
            for (i, &dc) in d.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, dc));
            }
        }
    }
    (trim(q), trim(rem))
}

pub fn monic(f: &Fp, a: &PolyP) -> PolyP {
    if a.is_empty() {
        return vec![];
    }
    scale(f, a, f.inv(*a.last().unwrap()))
}

pub fn gcd(f: &Fp, a: &PolyP, b: &PolyP) -> PolyP {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Extended gcd: returns (g, s, t) with s·a + t·b = g, g monic.
pub fn xgcd(f: &Fp, a: &PolyP, b: &PolyP) -> (PolyP, PolyP, PolyP) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_empty() {
        return (r0, s0, t0);
    }
    let lc_inv = f.inv(*r0.last().unwrap());
    (
        scale(f, &r0, lc_inv),
        scale(f, &s0, lc_inv),
        scale(f, &t0, lc_inv),
    )
}

pub fn pow_mod(f: &Fp, base: &PolyP, mut e: u64, m: &PolyP) -> PolyP {
    let mut b = divrem(f, base, m).1;
    let mut r = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            r = divrem(f, &mul(f, &r, &b), m).1;
        }
        b = divrem(f, &mul(f, &b, &b), m).1;
        e >>= 1;
    }
    r
}

pub fn derivative(f: &Fp, a: &PolyP) -> PolyP {
    if a.len() <= 1 {
        return vec![];
    }
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, (i as u64) % f.p))
            .collect(),
    )
}

/// Complete factorization of a squarefree monic polynomial over F_p into
/// monic irreducibles (distinct-degree then equal-degree splitting).
pub fn factor_squarefree_monic(fp: &Fp, poly: &PolyP) -> Vec<PolyP> {
    assert!(deg(poly).is_some());
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15);
    let mut rest = monic(fp, poly);
    // Distinct-degree pass: h = x^(p^d) - x accumulates factors of degree d.
    let mut h = vec![0u64, 1]; // x
    let mut d = 0usize;
    while deg(&rest).map(|n| n >= 1).unwrap_or(false) {
        d += 1;
        if 2 * d > deg(&rest).unwrap() {
            out.push(rest.clone());
            break;
        }
        h = pow_mod(fp, &h, fp.p, &rest);
        let hx = sub(fp, &h, &vec![0u64, 1]);
        let g = gcd(fp, &hx, &rest);
        if deg(&g).map(|n| n >= 1).unwrap_or(false) {
            split_equal_degree(fp, &g, d, &mut out, &mut rng);
            rest = divrem(fp, &rest, &g).0;
            h = divrem(fp, &h, &rest).1;
        }
    }
    out.sort();
    out
}

fn split_equal_degree(
    fp: &Fp,
    poly: &PolyP,
    d: usize,
    out: &mut Vec<PolyP>,
    rng: &mut ChaCha8Rng,
) {
    let n = deg(poly).unwrap();
    if n == d {
        out.push(monic(fp, poly));
        return;
    }
    // p is odd here; use the classical (p^d - 1)/2 power trick.
    let e = (fp.p.pow(d as u32) - 1) / 2;
    loop {
        let r: PolyP = trim((0..n).map(|_| rng.gen_range(0..fp.p)).collect());
        if deg(&r).map(|k| k < 1).unwrap_or(true) {
            continue;
        }
        let g1 = gcd(fp, &r, poly);
        if deg(&g1).map(|k| k >= 1).unwrap_or(false) && deg(&g1).unwrap() < n {
            split_equal_degree(fp, &g1, d, out, rng);
            split_equal_degree(fp, &divrem(fp, poly, &g1).0, d, out, rng);
            return;
        }
        let t = pow_mod(fp, &r, e, poly);
        let t1 = sub(fp, &t, &vec![1u64]);
        let g = gcd(fp, &t1, poly);
        if let Some(k) = deg(&g) {
            if k >= 1 && k < n {
                split_equal_degree(fp, &g, d, out, rng);
                split_equal_degree(fp, &divrem(fp, poly, &g).0, d, out, rng);
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_mod_p() {
        let fp = Fp::new(7);
        // x^3 - x = x(x-1)(x+1) mod 7
        let poly = vec![0, 6, 0, 1];
        let fs = factor_squarefree_monic(&fp, &poly);
        assert_eq!(fs.len(), 3);
        let mut prod = vec![1u64];
        for f in &fs {
            prod = mul(&fp, &prod, f);
        }
        assert_eq!(prod, monic(&fp, &poly));
    }

    #[test]
    fn irreducible_stays_whole() {
        let fp = Fp::new(5);
        // x^2 + 2 is irreducible mod 5 (squares are 0,1,4).
        let poly = vec![2, 0, 1];
        let fs = factor_squarefree_monic(&fp, &poly);
        assert_eq!(fs, vec![poly]);
    }

    #[test]
    fn xgcd_identity() {
        let fp = Fp::new(13);
        let a = vec![1, 2, 1]; // (x+1)^2
        let b = vec![2, 1]; // x+2
        let (g, s, t) = xgcd(&fp, &a, &b);
        assert_eq!(g, vec![1]);
        let lhs = add(&fp, &mul(&fp, &s, &a), &mul(&fp, &t, &b));
        assert_eq!(lhs, vec![1]);
    }
}
