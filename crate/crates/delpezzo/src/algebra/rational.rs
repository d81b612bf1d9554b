//! Arbitrary-precision rational numbers and small integer utilities.
//!
//! `Rat` is `num_rational::BigRational`: always stored reduced with a
//! positive denominator, which is exactly the invariant the rest of the
//! crate relies on for canonical equality.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a rational literal: an optional sign, an integer, and an
/// optional `/denominator` part.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid integer `{num}`"))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| format!("invalid integer `{d}`"))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rat::new(n, d))
}

/// Exact integer square root test: returns `r` with `r*r == n` when `n`
/// is a perfect square.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational square root, when one exists.
pub fn rat_sqrt_exact(q: &Rat) -> Option<Rat> {
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(Rat::new(n, d))
}

/// Exact integer cube root test (works for negative inputs).
pub fn int_cbrt_exact(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    if &r * &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational cube root, when one exists.
pub fn rat_cbrt_exact(q: &Rat) -> Option<Rat> {
    let n = int_cbrt_exact(q.numer())?;
    let d = int_cbrt_exact(q.denom())?;
    Some(Rat::new(n, d))
}

/// Squarefree part of a nonzero rational, as a signed squarefree integer:
/// the unique squarefree `m` with `q = m * (square of a rational)`.
///
/// Uses trial division up to 10^6 followed by a perfect-square test on the
/// remaining cofactor. This is provably correct for inputs whose
/// numerator·denominator is below 10^18 in absolute value; larger inputs
/// are rejected rather than answered heuristically.
pub fn squarefree_class(q: &Rat) -> Result<BigInt, String> {
    if q.is_zero() {
        return Err("squarefree class of zero is undefined".into());
    }
    // p/q and p*q differ by the square q^2.
    let mut n = q.numer() * q.denom();
    let sign = if n.is_negative() {
        BigInt::from(-1)
    } else {
        BigInt::one()
    };
    n = n.abs();
    let bound = BigInt::from(10u64).pow(18);
    if n > bound {
        return Err("squarefree-class input exceeds the 10^18 certified range".into());
    }
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    let million = BigInt::from(1_000_000u64);
    while &p * &p <= n && p <= million {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            free *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    // Whatever survives has no prime factor <= 10^6, hence (being < 10^18)
    // is 1, a prime, a product of two distinct large primes, or a large
    // prime square. Only the square case contributes nothing.
    if !n.is_one() {
        match int_sqrt_exact(&n) {
            Some(_) => {}
            None => free *= &n,
        }
    }
    Ok(sign * free)
}

/// Deterministic list of small primes used when a prime of good reduction
/// is needed.
pub fn small_primes() -> impl Iterator<Item = u64> {
    const P: [u64; 40] = [
        3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
        97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
    ];
    P.into_iter()
}

/// Balanced representative of `n` modulo `m` in `(-m/2, m/2]`.
pub fn balanced_mod(n: &BigInt, m: &BigInt) -> BigInt {
    let mut r = n.mod_floor(m);
    if &r * 2 > *m {
        r -= m;
    }
    r
}

pub fn bigint_sign(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        assert_eq!(parse_rat("-3/7").unwrap(), ratio(-3, 7));
        assert_eq!(parse_rat("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rat(" 5 ").unwrap(), rat(5));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn sqrt_cbrt() {
        assert_eq!(rat_sqrt_exact(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rat_sqrt_exact(&rat(2)), None);
        assert_eq!(rat_cbrt_exact(&rat(-8)), Some(rat(-2)));
        assert_eq!(rat_cbrt_exact(&ratio(27, 64)), Some(ratio(3, 4)));
        assert_eq!(rat_cbrt_exact(&rat(2)), None);
    }

    #[test]
    fn squarefree_classes() {
        assert_eq!(squarefree_class(&rat(-108)).unwrap(), BigInt::from(-3));
        assert_eq!(squarefree_class(&rat(-432)).unwrap(), BigInt::from(-3));
        assert_eq!(squarefree_class(&rat(81)).unwrap(), BigInt::one());
        assert_eq!(squarefree_class(&ratio(2, 3)).unwrap(), BigInt::from(6));
    }

    #[test]
    fn balanced_representatives() {
        let m = BigInt::from(7);
        assert_eq!(balanced_mod(&BigInt::from(5), &m), BigInt::from(-2));
        assert_eq!(balanced_mod(&BigInt::from(3), &m), BigInt::from(3));
        assert_eq!(balanced_mod(&BigInt::from(-6), &m), BigInt::from(1));
    }
}
