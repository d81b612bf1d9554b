//! Dense univariate polynomials over an exact field, generic enough to be
//! used over ℚ and over number-field towers (Euclidean gcd, evaluation,
//! linear substitution).

use num_traits::Zero;

use super::linalg::{det, FieldElem};
use super::rational::Rat;

#[derive(Clone, PartialEq)]
pub struct UPoly<F: FieldElem> {
    /// Coefficient of x^i at index i; the last entry is nonzero.
    coeffs: Vec<F>,
}

impl<F: FieldElem> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> &F {
        self.coeffs.last().expect("zero polynomial")
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = o.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let proto = self.coeffs[0].zero_like();
        let mut out = vec![proto; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    pub fn monic(&self) -> Self {
        assert!(!self.is_zero());
        self.scale(&self.leading().inv())
    }

    /// Euclidean division; the divisor's leading coefficient is inverted.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.deg() < d.deg() {
            return (Self::zero(), self.clone());
        }
        let lc_inv = d.leading().inv();
        let mut rem = self.coeffs.clone();
        let dd = d.deg();
        let qd = self.deg() - dd;
        let mut q = vec![self.coeffs[0].zero_like(); qd + 1];
        for k in (0..=qd).rev() {
            let c = rem[k + dd].mul(&lc_inv);
            if !c.is_zero() {
                q[k] = c.clone();
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&c.mul(dc));
                }
            }
        }
        (Self::new(q), Self::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let out: Vec<F> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                // c * i via repeated addition: keeps the trait minimal.
                let mut acc = c.zero_like();
                for _ in 0..i {
                    acc = acc.add(c);
                }
                acc
            })
            .collect();
        Self::new(out)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = match self.coeffs.last() {
            None => return x.zero_like(),
            Some(c) => c.clone(),
        };
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// p(a·x + b).
    pub fn compose_linear(&self, a: &F, b: &F) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Maps coefficients into another field.
    pub fn map<G: FieldElem>(&self, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl UPoly<Rat> {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        assert!(!self.is_zero());
        if self.deg() == 0 {
            return true;
        }
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Resultant via the Sylvester determinant (degrees here stay ≤ 12).
    pub fn resultant(&self, o: &Self) -> Rat {
        if self.is_zero() || o.is_zero() {
            return Rat::zero();
        }
        let (n, m) = (self.deg(), o.deg());
        if n == 0 {
            return num_traits::pow::pow(self.coeffs[0].clone(), m);
        }
        if m == 0 {
            return num_traits::pow::pow(o.coeffs[0].clone(), n);
        }
        let size = n + m;
        let mut s = vec![vec![Rat::zero(); size]; size];
        for row in 0..m {
            for (i, c) in self.coeffs.iter().rev().enumerate() {
                s[row][row + i] = c.clone();
            }
        }
        for row in 0..n {
            for (i, c) in o.coeffs.iter().rev().enumerate() {
                s[m + row][row + i] = c.clone();
            }
        }
        det(&s)
    }

    /// Discriminant: (−1)^{n(n−1)/2} res(f, f′) / lc(f).
    pub fn discriminant(&self) -> Rat {
        let n = self.deg();
        let r = self.resultant(&self.derivative());
        let sign = if (n * (n - 1) / 2) % 2 == 0 {
            Rat::from_integer(1.into())
        } else {
            Rat::from_integer((-1).into())
        };
        sign * r / self.leading().clone()
    }
}

impl<F: FieldElem + std::fmt::Debug> std::fmt::Debug for UPoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UPoly{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_gcd() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let f = UPoly::from_i64(&[-6, 11, -6, 1]);
        let d = UPoly::from_i64(&[-1, 1]);
        let (q, r) = f.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UPoly::from_i64(&[6, -5, 1]));
        let g = UPoly::from_i64(&[-2, 1]); // x-2
        let h = f.gcd(&g.mul(&UPoly::from_i64(&[7, 7]))); // gcd with 7(x+1)(x-2)
        assert_eq!(h, g);
    }

    #[test]
    fn eval_compose() {
        let f = UPoly::from_i64(&[1, 0, 1]); // x^2+1
        assert_eq!(f.eval(&Rat::from_integer(3.into())), Rat::from_integer(10.into()));
        let g = f.compose_linear(&Rat::from_integer(2.into()), &Rat::from_integer((-1).into()));
        // (2x-1)^2 + 1 = 4x^2 -4x + 2
        assert_eq!(g, UPoly::from_i64(&[2, -4, 4]));
    }

    #[test]
    fn discriminants() {
        // disc(x^3 - 2) = -108
        let f = UPoly::from_i64(&[-2, 0, 0, 1]);
        assert_eq!(f.discriminant(), Rat::from_integer((-108).into()));
        // disc(x^3 - 3x + 1) = 81
        let g = UPoly::from_i64(&[1, -3, 0, 1]);
        assert_eq!(g.discriminant(), Rat::from_integer(81.into()));
        // disc(x^2+x+1) = -3
        let h = UPoly::from_i64(&[1, 1, 1]);
        assert_eq!(h.discriminant(), Rat::from_integer((-3).into()));
    }

    #[test]
    fn squarefree_detection() {
        assert!(UPoly::from_i64(&[-2, 0, 0, 1]).is_squarefree());
        assert!(!UPoly::from_i64(&[1, 2, 1]).is_squarefree());
    }
}
