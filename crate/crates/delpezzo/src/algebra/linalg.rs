//! Exact linear algebra over ℚ and over number-field towers.
//!
//! Everything is dense; the matrices in this crate are small (at most a
//! few hundred rows for the Macaulay-style membership systems).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rat;

/// Element of a field with exact arithmetic. Implemented by `Rat` and by
/// tower elements; zero/one need a prototype because tower elements carry
/// their field.
pub trait FieldElem: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self {
        self.zero_like().sub(self)
    }
    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
}

impl FieldElem for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "division by zero");
        self.recip()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Rank by ordinary Gaussian elimination with pivot normalization.
pub fn rank_gauss<F: FieldElem>(mat: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = mat.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].inv();
        for c in col..cols {
            m[rank][c] = m[rank][c].mul(&inv);
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    let t = f.mul(&m[rank][c]);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank by fraction-free (Bareiss) elimination. Divisions are by previous
/// pivots and are exact; no pivot normalization is performed.
pub fn rank_bareiss<F: FieldElem>(mat: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = mat.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev: Option<F> = None;
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let mut t = pivot.mul(&m[r][c]).sub(&m[r][col].mul(&m[rank][c]));
                if let Some(d) = &prev {
                    t = t.div(d);
                }
                m[r][c] = t;
            }
            m[r][col] = m[r][col].zero_like();
        }
        prev = Some(pivot);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Fraction-free rank of a rational matrix after clearing denominators to
/// integers (the cross-check route for `rank_at`).
pub fn rank_cleared_int(mat: &[Vec<Rat>]) -> usize {
    let cleared: Vec<Vec<BigInt>> = mat
        .iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for x in row {
                lcm = num_integer::lcm(lcm, x.denom().clone());
            }
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    // Bareiss over the integers with exact division.
    let mut m = cleared;
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let t = &pivot * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&t % &prev).is_zero());
                m[r][c] = t / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !Zero::is_zero(&m[i][col])) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].clone().recip();
        for c in col..cols {
            let v = &m[r][c] * &inv;
            m[r][c] = v;
        }
        for i in 0..rows {
            if i != r && !Zero::is_zero(&m[i][col]) {
                let f = m[i][col].clone();
                for c in col..cols {
                    let v = &m[i][c] - &f * &m[r][c];
                    m[i][c] = v;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    m.truncate(r);
    pivots
}

/// Basis of the right kernel of `mat`, in reduced echelon form.
pub fn kernel_basis(mat: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if mat.is_empty() {
        return vec![];
    }
    let cols = mat[0].len();
    let mut m: Vec<Vec<Rat>> = mat.to_vec();
    let pivots = rref(&mut m);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// One solution of `mat·x = rhs`, if the system is consistent.
pub fn solve(mat: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(mat.len(), rhs.len());
    if mat.is_empty() {
        return Some(vec![]);
    }
    let cols = mat[0].len();
    let mut aug: Vec<Vec<Rat>> = mat
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None; // pivot in the rhs column: inconsistent
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    Some(x)
}

/// Coefficients expressing `target` in the span of `basis`, if any.
pub fn express_in_span(basis: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    if basis.is_empty() {
        return if target.iter().all(|x| Zero::is_zero(x)) {
            Some(vec![])
        } else {
            None
        };
    }
    let n = target.len();
    let mat: Vec<Vec<Rat>> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    solve(&mat, target)
}

/// Row span of a matrix as a canonical (rref) basis.
pub fn row_space(mat: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut m = mat.to_vec();
    rref(&mut m);
    m
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let k = b.len();
    let m = if k > 0 { b[0].len() } else { 0 };
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        assert_eq!(a[i].len(), k);
        for j in 0..m {
            let mut s = Rat::zero();
            for l in 0..k {
                s += &a[i][l] * &b[l][j];
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn mat_transpose(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if a.is_empty() {
        return vec![];
    }
    let (n, m) = (a.len(), a[0].len());
    (0..m)
        .map(|j| (0..n).map(|i| a[i][j].clone()).collect())
        .collect()
}

pub fn identity(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

/// Determinant of a small rational matrix (Gaussian elimination).
pub fn det(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    let mut m = a.to_vec();
    let mut d = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !Zero::is_zero(&m[r][col])) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(col, p);
            d = -d;
        }
        d *= &m[col][col];
        let inv = m[col][col].clone().recip();
        for r in col + 1..n {
            if !Zero::is_zero(&m[r][col]) {
                let f = &m[r][col] * &inv;
                for c in col..n {
                    let v = &m[r][c] - &f * &m[col][c];
                    m[r][c] = v;
                }
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn ranks_agree() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank_gauss(&a), 2);
        assert_eq!(rank_bareiss(&a), 2);
        assert_eq!(rank_cleared_int(&a), 2);
        let z = m(&[&[0, 0], &[0, 0]]);
        assert_eq!(rank_gauss(&z), 0);
        assert_eq!(rank_bareiss(&z), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let a = vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), rat(1)],
            vec![rat(0), ratio(5, 7)],
        ];
        assert_eq!(rank_gauss(&a), 2);
        assert_eq!(rank_cleared_int(&a), 2);
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[&[1, 2, 3], &[0, 1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        for row in &a {
            let dot: Rat = row.iter().zip(&k[0]).map(|(x, y)| x * y).sum();
            assert!(Zero::is_zero(&dot));
        }
        let x = solve(&a, &[rat(6), rat(2)]).unwrap();
        let r0: Rat = a[0].iter().zip(&x).map(|(c, v)| c * v).sum();
        let r1: Rat = a[1].iter().zip(&x).map(|(c, v)| c * v).sum();
        assert_eq!(r0, rat(6));
        assert_eq!(r1, rat(2));
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn span_membership() {
        let basis = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let c = express_in_span(&basis, &[rat(2), rat(3), rat(5)]).unwrap();
        assert_eq!(c, vec![rat(2), rat(3)]);
        assert!(express_in_span(&basis, &[rat(0), rat(0), rat(1)]).is_none());
    }

    #[test]
    fn determinant() {
        let a = m(&[&[2, 0], &[1, 3]]);
        assert_eq!(det(&a), rat(6));
        let b = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(det(&b), rat(0));
    }
}
