//! Number-field towers over ℚ and exact arithmetic in them.
//!
//! A tower is an ordered list of levels, each given by a generator name
//! and a monic minimal polynomial with coefficients in the previous level.
//! Elements are nested coefficient vectors over ℚ, always stored at full
//! length, which makes equality structural. Towers stay small here: the
//! splitting field of a cubic (degree ≤ 6) and composites up to the
//! configured cap of 36.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use super::factor::{factor_upoly, FactorError};
use super::linalg::{rank_bareiss, FieldElem};
use super::poly::MultiPoly;
use super::rational::Rat;
use super::upoly::UPoly;

pub const TOWER_DEGREE_CAP: usize = 36;

#[derive(Debug, Error)]
pub enum NumberFieldError {
    #[error("tower degree {0} exceeds the cap {1}")]
    DegreeCap(usize, usize),
    #[error("minimal polynomial is not irreducible over ℚ")]
    Reducible,
    #[error("irreducibility over the tower is not certified: {0}")]
    Uncertified(String),
    #[error("factorization failed: {0}")]
    Factor(#[from] FactorError),
    #[error("{0}")]
    Other(String),
}

/// Element representation: a rational at level 0, otherwise a fixed-length
/// coefficient vector over the previous level.
#[derive(Clone, PartialEq, Eq)]
pub enum Rep {
    Rat(Rat),
    Ext(Vec<Rep>),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Level {
    pub name: String,
    /// Coefficients c_0 .. c_{d-1} of the monic minimal polynomial
    /// x^d + c_{d-1} x^{d-1} + … + c_0 over the previous level.
    pub min_poly: Vec<Rep>,
}

impl Level {
    pub fn degree(&self) -> usize {
        self.min_poly.len()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct NumberField {
    levels: Vec<Level>,
}

impl NumberField {
    /// The trivial tower ℚ.
    pub fn rationals() -> Arc<NumberField> {
        Arc::new(NumberField { levels: vec![] })
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn degree(&self) -> usize {
        self.levels.iter().map(|l| l.degree()).product()
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    /// Extends the tower by a generator with a *rational* minimal
    /// polynomial. Irreducibility over ℚ is certified by factorization;
    /// irreducibility over the tower itself follows from coprimality of
    /// the new degree with the current tower degree and is rejected
    /// otherwise.
    pub fn extend_rational(
        self: &Arc<Self>,
        name: &str,
        min_poly: &UPoly<Rat>,
        cap: usize,
    ) -> Result<Arc<NumberField>, NumberFieldError> {
        let d = min_poly.deg();
        assert!(d >= 1);
        let monic = min_poly.monic();
        let factors = factor_upoly(&monic)?;
        if !(factors.len() == 1 && factors[0].1 == 1 && factors[0].0.deg() == d) {
            return Err(NumberFieldError::Reducible);
        }
        let total = self.degree();
        if num_integer::gcd(d, total) != 1 {
            return Err(NumberFieldError::Uncertified(format!(
                "degree {d} not coprime to tower degree {total}"
            )));
        }
        if total * d > cap {
            return Err(NumberFieldError::DegreeCap(total * d, cap));
        }
        let coeffs: Vec<Rep> = (0..d)
            .map(|i| {
                self.promote_rat(
                    min_poly.coeff(i).cloned().unwrap_or_else(Rat::zero)
                        / min_poly.leading().clone(),
                    self.levels.len(),
                )
            })
            .collect();
        let mut levels = self.levels.clone();
        levels.push(Level {
            name: name.to_string(),
            min_poly: coeffs,
        });
        Ok(Arc::new(NumberField { levels }))
    }

    /// Extends the tower by a generator whose monic minimal polynomial has
    /// coefficients in the current top level. The caller supplies the
    /// irreducibility argument; this constructor only validates shapes.
    /// Used by the splitting-field construction, which certifies the
    /// quadratic case through the discriminant square test.
    pub(crate) fn extend_with_coeffs(
        self: &Arc<Self>,
        name: &str,
        coeffs: Vec<Rep>,
        cap: usize,
    ) -> Result<Arc<NumberField>, NumberFieldError> {
        let d = coeffs.len();
        let total = self.degree() * d;
        if total > cap {
            return Err(NumberFieldError::DegreeCap(total, cap));
        }
        for c in &coeffs {
            self.check_shape(c, self.levels.len());
        }
        let mut levels = self.levels.clone();
        levels.push(Level {
            name: name.to_string(),
            min_poly: coeffs,
        });
        Ok(Arc::new(NumberField { levels }))
    }

    /// The tower with the top level removed.
    pub fn parent(&self) -> Arc<NumberField> {
        assert!(!self.levels.is_empty());
        Arc::new(NumberField {
            levels: self.levels[..self.levels.len() - 1].to_vec(),
        })
    }

    /// True when `self` is an initial segment of `other`'s levels.
    pub fn is_subtower_of(&self, other: &NumberField) -> bool {
        self.levels.len() <= other.levels.len()
            && self.levels == other.levels[..self.levels.len()]
    }

    /// The degree-3 first level as a standalone tower, when present.
    pub fn truncated_cubic_level(&self) -> Option<Arc<NumberField>> {
        if !self.levels.is_empty() && self.levels[0].degree() == 3 {
            Some(Arc::new(NumberField {
                levels: vec![self.levels[0].clone()],
            }))
        } else {
            None
        }
    }

    fn check_shape(&self, rep: &Rep, level: usize) {
        match rep {
            Rep::Rat(_) => assert_eq!(level, 0, "malformed element"),
            Rep::Ext(v) => {
                assert!(level >= 1, "malformed element");
                assert_eq!(v.len(), self.levels[level - 1].degree(), "malformed element");
                for c in v {
                    self.check_shape(c, level - 1);
                }
            }
        }
    }

    fn zero_rep(&self, level: usize) -> Rep {
        if level == 0 {
            Rep::Rat(Rat::zero())
        } else {
            let d = self.levels[level - 1].degree();
            Rep::Ext((0..d).map(|_| self.zero_rep(level - 1)).collect())
        }
    }

    fn promote_rat(&self, q: Rat, level: usize) -> Rep {
        if level == 0 {
            Rep::Rat(q)
        } else {
            let d = self.levels[level - 1].degree();
            let mut v = Vec::with_capacity(d);
            v.push(self.promote_rat(q, level - 1));
            for _ in 1..d {
                v.push(self.zero_rep(level - 1));
            }
            Rep::Ext(v)
        }
    }

    /// Embeds an element from a lower level into `level` (constant term).
    fn promote(&self, rep: Rep, from: usize, to: usize) -> Rep {
        let mut r = rep;
        for lvl in from..to {
            let d = self.levels[lvl].degree();
            let mut v = Vec::with_capacity(d);
            v.push(r);
            for _ in 1..d {
                v.push(self.zero_rep(lvl));
            }
            r = Rep::Ext(v);
        }
        r
    }

    fn add(&self, level: usize, a: &Rep, b: &Rep) -> Rep {
        match (a, b) {
            (Rep::Rat(x), Rep::Rat(y)) => Rep::Rat(x + y),
            (Rep::Ext(x), Rep::Ext(y)) => {
                assert_eq!(x.len(), y.len());
                Rep::Ext(
                    x.iter()
                        .zip(y)
                        .map(|(u, v)| self.add(level - 1, u, v))
                        .collect(),
                )
            }
            _ => panic!("level mismatch"),
        }
    }

    fn neg(&self, level: usize, a: &Rep) -> Rep {
        match a {
            Rep::Rat(x) => Rep::Rat(-x.clone()),
            Rep::Ext(x) => Rep::Ext(x.iter().map(|u| self.neg(level - 1, u)).collect()),
        }
    }

    fn sub(&self, level: usize, a: &Rep, b: &Rep) -> Rep {
        self.add(level, a, &self.neg(level, b))
    }

    fn is_zero_rep(&self, a: &Rep) -> bool {
        match a {
            Rep::Rat(x) => num_traits::Zero::is_zero(x),
            Rep::Ext(v) => v.iter().all(|u| self.is_zero_rep(u)),
        }
    }

    fn mul(&self, level: usize, a: &Rep, b: &Rep) -> Rep {
        match (a, b) {
            (Rep::Rat(x), Rep::Rat(y)) => Rep::Rat(x * y),
            (Rep::Ext(x), Rep::Ext(y)) => {
                let d = x.len();
                let min_poly = &self.levels[level - 1].min_poly;
                // Convolution, then reduction modulo the monic minimal
                // polynomial x^d + Σ c_i x^i.
                let mut prod: Vec<Rep> = (0..2 * d - 1).map(|_| self.zero_rep(level - 1)).collect();
                for (i, u) in x.iter().enumerate() {
                    if self.is_zero_rep(u) {
                        continue;
                    }
                    for (j, v) in y.iter().enumerate() {
                        let t = self.mul(level - 1, u, v);
                        prod[i + j] = self.add(level - 1, &prod[i + j], &t);
                    }
                }
                for k in (d..2 * d - 1).rev() {
                    if self.is_zero_rep(&prod[k]) {
                        continue;
                    }
                    let c = prod[k].clone();
                    prod[k] = self.zero_rep(level - 1);
                    for (i, m) in min_poly.iter().enumerate() {
                        let t = self.mul(level - 1, &c, m);
                        prod[k - d + i] = self.sub(level - 1, &prod[k - d + i], &t);
                    }
                }
                prod.truncate(d);
                Rep::Ext(prod)
            }
            _ => panic!("level mismatch"),
        }
    }

    fn inv(&self, level: usize, a: &Rep) -> Rep {
        assert!(!self.is_zero_rep(a), "inverting zero in a number field");
        match a {
            Rep::Rat(x) => Rep::Rat(x.recip()),
            Rep::Ext(coeffs) => {
                // Extended Euclid between a(x) and the minimal polynomial
                // over the previous level.
                let d = coeffs.len();
                let mut m: Vec<Rep> = self.levels[level - 1].min_poly.clone();
                m.push(self.promote_rat(Rat::one(), level - 1));
                let a_poly: Vec<Rep> = coeffs.clone();
                let (g, s, _) = self.poly_xgcd(level - 1, &a_poly, &m);
                assert_eq!(
                    g.len(),
                    1,
                    "minimal polynomial is not irreducible over its level"
                );
                let ginv = self.inv(level - 1, &g[0]);
                let mut out: Vec<Rep> = s
                    .iter()
                    .map(|c| self.mul(level - 1, c, &ginv))
                    .collect();
                // s has degree < d = deg(m); pad.
                while out.len() < d {
                    out.push(self.zero_rep(level - 1));
                }
                Rep::Ext(out)
            }
        }
    }

    // Polynomial helpers with coefficients at `level` (trailing zeros trimmed).

    fn poly_trim(&self, mut v: Vec<Rep>) -> Vec<Rep> {
        while v.last().is_some_and(|c| self.is_zero_rep(c)) {
            v.pop();
        }
        v
    }

    fn poly_divrem(&self, level: usize, a: &[Rep], d: &[Rep]) -> (Vec<Rep>, Vec<Rep>) {
        let a = self.poly_trim(a.to_vec());
        let d = self.poly_trim(d.to_vec());
        assert!(!d.is_empty());
        if a.len() < d.len() {
            return (vec![], a);
        }
        let lc_inv = self.inv(level, d.last().unwrap());
        let dd = d.len() - 1;
        let qd = a.len() - d.len();
        let mut rem = a;
        let mut q: Vec<Rep> = (0..=qd).map(|_| self.zero_rep(level)).collect();
        for k in (0..=qd).rev() {
            let c = self.mul(level, &rem[k + dd], &lc_inv);
            if !self.is_zero_rep(&c) {
                for (i, dc) in d.iter().enumerate() {
                    let t = self.mul(level, &c, dc);
                    rem[k + i] = self.sub(level, &rem[k + i], &t);
                }
                q[k] = c;
            }
        }
        (self.poly_trim(q), self.poly_trim(rem))
    }

    fn poly_mul(&self, level: usize, a: &[Rep], b: &[Rep]) -> Vec<Rep> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out: Vec<Rep> = (0..a.len() + b.len() - 1)
            .map(|_| self.zero_rep(level))
            .collect();
        for (i, u) in a.iter().enumerate() {
            for (j, v) in b.iter().enumerate() {
                let t = self.mul(level, u, v);
                out[i + j] = self.add(level, &out[i + j], &t);
            }
        }
        self.poly_trim(out)
    }

    fn poly_sub(&self, level: usize, a: &[Rep], b: &[Rep]) -> Vec<Rep> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_else(|| self.zero_rep(level));
            let y = b.get(i).cloned().unwrap_or_else(|| self.zero_rep(level));
            out.push(self.sub(level, &x, &y));
        }
        self.poly_trim(out)
    }

    /// Extended gcd of polynomials with coefficients at `level`:
    /// returns (g, s, t) with s·a + t·b = g.
    fn poly_xgcd(&self, level: usize, a: &[Rep], b: &[Rep]) -> (Vec<Rep>, Vec<Rep>, Vec<Rep>) {
        let mut r0 = self.poly_trim(a.to_vec());
        let mut r1 = self.poly_trim(b.to_vec());
        let mut s0 = vec![self.promote_rat(Rat::one(), level)];
        let mut s1: Vec<Rep> = vec![];
        let mut t0: Vec<Rep> = vec![];
        let mut t1 = vec![self.promote_rat(Rat::one(), level)];
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(level, &r0, &r1);
            let s = self.poly_sub(level, &s0, &self.poly_mul(level, &q, &s1));
            let t = self.poly_sub(level, &t0, &self.poly_mul(level, &q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        (r0, s0, t0)
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q")?;
        for l in &self.levels {
            write!(f, "({})", l.name)?;
        }
        write!(f, " [degree {}]", self.degree())
    }
}

/// An element of a number-field tower, always held at the top level.
#[derive(Clone)]
pub struct NfElem {
    field: Arc<NumberField>,
    rep: Rep,
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        assert!(self.field == other.field, "field mismatch");
        self.rep == other.rep
    }
}

impl NfElem {
    /// Wraps a raw representation after checking its shape against the field.
    pub(crate) fn from_rep(field: &Arc<NumberField>, rep: Rep) -> Self {
        field.check_shape(&rep, field.num_levels());
        NfElem {
            field: field.clone(),
            rep,
        }
    }

    pub fn from_rat(field: &Arc<NumberField>, q: Rat) -> Self {
        NfElem {
            field: field.clone(),
            rep: field.promote_rat(q, field.num_levels()),
        }
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        Self::from_rat(field, Rat::zero())
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_rat(field, Rat::one())
    }

    /// The generator of level `i` (0-based), embedded at the top.
    pub fn generator(field: &Arc<NumberField>, i: usize) -> Self {
        let d = field.levels[i].degree();
        let mut v: Vec<Rep> = (0..d).map(|_| field.zero_rep(i)).collect();
        v[1] = field.promote_rat(Rat::one(), i);
        let rep = field.promote(Rep::Ext(v), i + 1, field.num_levels());
        NfElem {
            field: field.clone(),
            rep,
        }
    }

    /// Builds an element from its coefficient vector over the top level's
    /// generator (each coefficient an element of the previous levels).
    pub fn from_top_coeffs(field: &Arc<NumberField>, coeffs: Vec<NfElem>) -> Self {
        let top = field.num_levels();
        assert!(top >= 1);
        let d = field.levels[top - 1].degree();
        assert!(coeffs.len() <= d);
        let mut v: Vec<Rep> = Vec::with_capacity(d);
        for c in &coeffs {
            // The coefficients must not involve the top generator.
            let lowered = match &c.rep {
                Rep::Ext(w) => {
                    for extra in &w[1..] {
                        assert!(
                            c.field.is_zero_rep(extra),
                            "coefficient involves the top generator"
                        );
                    }
                    w[0].clone()
                }
                Rep::Rat(q) => Rep::Rat(q.clone()),
            };
            v.push(lowered);
        }
        while v.len() < d {
            v.push(field.zero_rep(top - 1));
        }
        NfElem {
            field: field.clone(),
            rep: Rep::Ext(v),
        }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    /// Embeds the element into a tower extending its own.
    pub fn embed(&self, target: &Arc<NumberField>) -> NfElem {
        assert!(
            self.field.is_subtower_of(target),
            "not a subtower: {:?} into {:?}",
            self.field,
            target
        );
        NfElem {
            field: target.clone(),
            rep: target
                .promote(self.rep.clone(), self.field.num_levels(), target.num_levels()),
        }
    }

    /// Coefficient vector over the top generator, as elements of the
    /// parent tower.
    pub fn top_coeffs(&self) -> Vec<NfElem> {
        let parent = self.field.parent();
        match &self.rep {
            Rep::Ext(v) => v
                .iter()
                .map(|c| NfElem {
                    field: parent.clone(),
                    rep: c.clone(),
                })
                .collect(),
            Rep::Rat(_) => panic!("top_coeffs on a rational-level element"),
        }
    }

    /// Projects into a subtower when all higher components vanish.
    pub fn project_to(&self, target: &Arc<NumberField>) -> Option<NfElem> {
        assert!(target.is_subtower_of(&self.field));
        fn go(rep: &Rep, from: usize, to: usize, field: &NumberField) -> Option<Rep> {
            if from == to {
                return Some(rep.clone());
            }
            match rep {
                Rep::Ext(v) => {
                    for extra in &v[1..] {
                        if !field.is_zero_rep(extra) {
                            return None;
                        }
                    }
                    go(&v[0], from - 1, to, field)
                }
                Rep::Rat(_) => unreachable!(),
            }
        }
        let rep = go(
            &self.rep,
            self.field.num_levels(),
            target.num_levels(),
            &self.field,
        )?;
        Some(NfElem {
            field: target.clone(),
            rep,
        })
    }

    /// Rational value, when the element lies in ℚ.
    pub fn to_rat(&self) -> Option<Rat> {
        fn go(field: &NumberField, rep: &Rep) -> Option<Rat> {
            match rep {
                Rep::Rat(q) => Some(q.clone()),
                Rep::Ext(v) => {
                    for extra in &v[1..] {
                        if !field.is_zero_rep(extra) {
                            return None;
                        }
                    }
                    go(field, &v[0])
                }
            }
        }
        go(&self.field, &self.rep)
    }

    pub fn is_rational(&self) -> bool {
        self.to_rat().is_some()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one(&self.field);
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    pub fn add(&self, o: &Self) -> Self {
        assert!(self.field == o.field, "field mismatch");
        NfElem {
            field: self.field.clone(),
            rep: self.field.add(self.field.num_levels(), &self.rep, &o.rep),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert!(self.field == o.field, "field mismatch");
        NfElem {
            field: self.field.clone(),
            rep: self.field.sub(self.field.num_levels(), &self.rep, &o.rep),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert!(self.field == o.field, "field mismatch");
        NfElem {
            field: self.field.clone(),
            rep: self.field.mul(self.field.num_levels(), &self.rep, &o.rep),
        }
    }

    pub fn neg(&self) -> Self {
        NfElem {
            field: self.field.clone(),
            rep: self.field.neg(self.field.num_levels(), &self.rep),
        }
    }

    pub fn inv(&self) -> Self {
        NfElem {
            field: self.field.clone(),
            rep: self.field.inv(self.field.num_levels(), &self.rep),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero_rep(&self.rep)
    }

    /// Coordinates over ℚ in the multiplicative basis of the tower
    /// (lexicographic in the level exponents), used for serialization.
    pub fn rational_coords(&self) -> Vec<Rat> {
        fn collect(field: &NumberField, rep: &Rep, out: &mut Vec<Rat>) {
            match rep {
                Rep::Rat(q) => out.push(q.clone()),
                Rep::Ext(v) => {
                    for c in v {
                        collect(field, c, out);
                    }
                }
            }
        }
        let mut out = Vec::new();
        collect(&self.field, &self.rep, &mut out);
        out
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(
            field: &NumberField,
            rep: &Rep,
            level: usize,
            f: &mut fmt::Formatter<'_>,
        ) -> fmt::Result {
            match rep {
                Rep::Rat(q) => write!(f, "{q}"),
                Rep::Ext(v) => {
                    write!(f, "[")?;
                    for (i, c) in v.iter().enumerate() {
                        if i > 0 {
                            write!(f, " + ")?;
                        }
                        go(field, c, level - 1, f)?;
                        if i >= 1 {
                            write!(f, "*{}", field.levels[level - 1].name)?;
                            if i > 1 {
                                write!(f, "^{i}")?;
                            }
                        }
                    }
                    write!(f, "]")
                }
            }
        }
        go(&self.field, &self.rep, self.field.num_levels(), f)
    }
}

impl FieldElem for NfElem {
    fn zero_like(&self) -> Self {
        NfElem::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        NfElem::one(&self.field)
    }
    fn add(&self, o: &Self) -> Self {
        NfElem::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        NfElem::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        NfElem::mul(self, o)
    }
    fn inv(&self) -> Self {
        NfElem::inv(self)
    }
    fn is_zero(&self) -> bool {
        NfElem::is_zero(self)
    }
    fn neg(&self) -> Self {
        NfElem::neg(self)
    }
}

/// A projective point with coordinates in a number-field tower, stored with
/// the first nonzero coordinate normalized to 1.
#[derive(Clone)]
pub struct AlgebraicPoint {
    pub field: Arc<NumberField>,
    pub coords: Vec<NfElem>,
}

impl AlgebraicPoint {
    pub fn new(field: &Arc<NumberField>, coords: Vec<NfElem>) -> Result<Self, NumberFieldError> {
        let first = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| NumberFieldError::Other("all projective coordinates are zero".into()))?;
        let inv = coords[first].inv();
        let coords = coords.iter().map(|c| c.mul(&inv)).collect();
        Ok(AlgebraicPoint {
            field: field.clone(),
            coords,
        })
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().all(|c| c.is_rational())
    }
}

impl fmt::Debug for AlgebraicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, "]")
    }
}

/// Evaluates a polynomial at tower elements given by variable name.
pub fn eval_nf(
    p: &MultiPoly,
    values: &BTreeMap<String, NfElem>,
    field: &Arc<NumberField>,
) -> Result<NfElem, String> {
    let mut vals: Vec<NfElem> = Vec::with_capacity(p.vars().len());
    for name in p.vars().names() {
        match values.get(name) {
            Some(v) => vals.push(v.clone()),
            None => {
                if p.uses_var(name) {
                    return Err(format!("unbound variable `{name}`"));
                }
                vals.push(NfElem::zero(field));
            }
        }
    }
    let mut acc = NfElem::zero(field);
    for (e, c) in p.terms() {
        let mut t = NfElem::from_rat(field, c.clone());
        for (i, &exp) in e.iter().enumerate() {
            for _ in 0..exp {
                t = t.mul(&vals[i]);
            }
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

/// Exact rank of a polynomial matrix evaluated at an algebraic point,
/// computed by fraction-free elimination over the point's field. The
/// binding lists coordinate names in the order of the point's coordinates.
pub fn rank_at(
    m: &[Vec<MultiPoly>],
    point: &AlgebraicPoint,
    binding: &[String],
) -> Result<usize, String> {
    assert_eq!(binding.len(), point.coords.len(), "binding arity mismatch");
    let mut values = BTreeMap::new();
    for (name, v) in binding.iter().zip(&point.coords) {
        values.insert(name.clone(), v.clone());
    }
    let mut rows = Vec::with_capacity(m.len());
    for row in m {
        let mut r = Vec::with_capacity(row.len());
        for entry in row {
            r.push(eval_nf(entry, &values, &point.field)?);
        }
        rows.push(r);
    }
    Ok(rank_bareiss(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn cbrt2_field() -> Arc<NumberField> {
        NumberField::rationals()
            .extend_rational("l", &UPoly::from_i64(&[-2, 0, 0, 1]), TOWER_DEGREE_CAP)
            .unwrap()
    }

    #[test]
    fn cube_root_arithmetic() {
        let f = cbrt2_field();
        let l = NfElem::generator(&f, 0);
        assert_eq!(l.pow(3), NfElem::from_rat(&f, rat(2)));
        let inv = l.inv();
        assert_eq!(l.mul(&inv), NfElem::one(&f));
        // 1/λ = λ²/2
        assert_eq!(inv, l.pow(2).mul(&NfElem::from_rat(&f, Rat::new(1.into(), 2.into()))));
    }

    #[test]
    fn two_level_tower() {
        let f = cbrt2_field();
        // ε with ε² + ε + 1 = 0 on top: degree 2 is coprime to 3.
        let f2 = f
            .extend_rational("e", &UPoly::from_i64(&[1, 1, 1]), TOWER_DEGREE_CAP)
            .unwrap();
        assert_eq!(f2.degree(), 6);
        let e = NfElem::generator(&f2, 1);
        let l = NfElem::generator(&f2, 0);
        // ε³ = 1 and (λε)³ = 2.
        assert_eq!(e.pow(3), NfElem::one(&f2));
        assert_eq!(l.mul(&e).pow(3), NfElem::from_rat(&f2, rat(2)));
        let le = l.mul(&e);
        assert_eq!(le.mul(&le.inv()), NfElem::one(&f2));
        assert!(!le.is_rational());
        assert!(le.pow(3).is_rational());
    }

    #[test]
    fn reducibility_rejected() {
        let q = NumberField::rationals();
        let err = q.extend_rational("a", &UPoly::from_i64(&[-1, 0, 1]), TOWER_DEGREE_CAP);
        assert!(matches!(err, Err(NumberFieldError::Reducible)));
    }

    #[test]
    fn degree_cap_respected() {
        let q = NumberField::rationals();
        let err = q.extend_rational("a", &UPoly::from_i64(&[-2, 0, 0, 1]), 2);
        assert!(matches!(err, Err(NumberFieldError::DegreeCap(3, 2))));
    }

    #[test]
    fn projective_normalization() {
        let f = cbrt2_field();
        let l = NfElem::generator(&f, 0);
        let p = AlgebraicPoint::new(&f, vec![NfElem::zero(&f), l.clone(), l.mul(&l)]).unwrap();
        assert_eq!(p.coords[1], NfElem::one(&f));
        assert!(AlgebraicPoint::new(&f, vec![NfElem::zero(&f)]).is_err());
    }

    #[test]
    fn zero_matrix_rank() {
        use crate::algebra::poly::Vars;
        let vars = Vars::new(["x"]);
        let z = MultiPoly::zero(&vars);
        let f = NumberField::rationals();
        let p = AlgebraicPoint::new(&f, vec![NfElem::one(&f)]).unwrap();
        assert_eq!(rank_at(&[vec![z]], &p, &["x".into()]).unwrap(), 0);
    }
}
