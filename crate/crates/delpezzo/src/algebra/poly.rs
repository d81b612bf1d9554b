//! Sparse multivariate polynomials over exact rationals.
//!
//! A [`MultiPoly`] carries an ordered variable set ([`Vars`]) and a finite
//! map from exponent vectors to nonzero rational coefficients. All modules
//! share fixed, explicitly ordered variable sets so polynomial equality is
//! bit-exact across module boundaries. Display and golden-file comparison
//! use graded reverse lexicographic term order on the declared variable
//! order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::rational::{parse_rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` is not covered by the substitution or the target variable set")]
    MissingVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Other(String),
}

/// An ordered, shared set of variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<I: IntoIterator<Item = S>, S: Into<String>>(names: I) -> Self {
        let v: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for n in &v {
            assert!(seen.insert(n.clone()), "duplicate variable `{n}`");
        }
        Vars(Arc::new(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// New variable set with `extra` appended.
    pub fn extend<I: IntoIterator<Item = S>, S: Into<String>>(&self, extra: I) -> Vars {
        let mut v = self.0.as_ref().clone();
        v.extend(extra.into_iter().map(Into::into));
        Vars::new(v)
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vars[{}]", self.0.join(","))
    }
}

/// Sparse multivariate polynomial over ℚ.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Vec<u16>, Rat>,
}

fn grevlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // Reverse-lex tie break: the last variable where the exponents
            // differ decides, smaller exponent there wins.
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rat::one())
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self, PolyError> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0u16; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(e, Rat::one());
        Ok(p)
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u16>, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent arity mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Total degree counting only the listed variables.
    pub fn degree_in(&self, names: &[String]) -> u32 {
        let idx: Vec<usize> = names.iter().filter_map(|n| self.vars.index_of(n)).collect();
        self.terms
            .keys()
            .map(|e| idx.iter().map(|&i| e[i] as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// True when every term has the same total degree `d` in the listed variables.
    pub fn is_homogeneous_in(&self, names: &[String], d: u32) -> bool {
        let idx: Vec<usize> = names.iter().filter_map(|n| self.vars.index_of(n)).collect();
        self.terms
            .keys()
            .all(|e| idx.iter().map(|&i| e[i] as u32).sum::<u32>() == d)
    }

    pub fn uses_var(&self, name: &str) -> bool {
        match self.vars.index_of(name) {
            None => false,
            Some(i) => self.terms.keys().any(|e| e[i] > 0),
        }
    }

    fn add_term(&mut self, e: Vec<u16>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "variable sets differ: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = -c.clone();
        }
        r
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = c.clone() * k;
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut r = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u16> = ea
                    .iter()
                    .zip(eb)
                    .map(|(&x, &y)| {
                        x.checked_add(y).expect("exponent overflow")
                    })
                    .collect();
                r.add_term(e, ca * cb);
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one(&self.vars);
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    pub fn partial_derivative(&self, name: &str) -> Result<Self, PolyError> {
        let i = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            r.add_term(e2, c * Rat::from_integer(e[i].into()));
        }
        Ok(r)
    }

    /// Simultaneous substitution. Variables present in `assignment` are
    /// replaced by their images (polynomials over `target`); variables not
    /// in the assignment pass through and must exist in `target`.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<String, MultiPoly>,
        target: &Vars,
    ) -> Result<Self, PolyError> {
        for img in assignment.values() {
            assert!(
                img.vars == *target,
                "substitution image not over the target variable set"
            );
        }
        // Image of each source variable, as a polynomial over `target`.
        let mut images: Vec<MultiPoly> = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            if let Some(img) = assignment.get(name) {
                images.push(img.clone());
            } else if self.uses_var(name) {
                images.push(
                    MultiPoly::var(target, name)
                        .map_err(|_| PolyError::MissingVariable(name.clone()))?,
                );
            } else {
                images.push(MultiPoly::zero(target));
            }
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&images[i].pow(exp as u32));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable actually used.
    pub fn project_vars(&self, target: &Vars) -> Result<Self, PolyError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|e| e[i] > 0) {
                        return Err(PolyError::MissingVariable(name.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0u16; target.len()];
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    e2[map[i].unwrap()] = exp;
                }
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Full evaluation at rational values given by name.
    pub fn eval_rat(&self, values: &BTreeMap<String, Rat>) -> Result<Rat, PolyError> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            match values.get(name) {
                Some(v) => vals.push(v.clone()),
                None => {
                    if self.terms.keys().any(|e| e[i] > 0) {
                        return Err(PolyError::MissingVariable(name.clone()));
                    }
                    vals.push(Rat::zero());
                }
            }
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t *= &vals[i];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Coefficient of the given monomial in the listed variables, collected
    /// as a polynomial in the remaining variables (over the same `Vars`).
    pub fn coefficient_of(&self, names: &[String], exps: &[u16]) -> Self {
        assert_eq!(names.len(), exps.len());
        let idx: Vec<usize> = names
            .iter()
            .map(|n| self.vars.index_of(n).expect("unknown variable"))
            .collect();
        let mut out = Self::zero(&self.vars);
        'terms: for (e, c) in &self.terms {
            for (k, &i) in idx.iter().enumerate() {
                if e[i] != exps[k] {
                    continue 'terms;
                }
            }
            let mut e2 = e.clone();
            for &i in &idx {
                e2[i] = 0;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Splits the polynomial by its monomials in the listed variables:
    /// returns pairs (exponents in `names`, cofactor polynomial in the
    /// remaining variables).
    pub fn split_by(&self, names: &[String]) -> Vec<(Vec<u16>, MultiPoly)> {
        let idx: Vec<usize> = names
            .iter()
            .map(|n| self.vars.index_of(n).expect("unknown variable"))
            .collect();
        let mut groups: BTreeMap<Vec<u16>, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<u16> = idx.iter().map(|&i| e[i]).collect();
            let mut e2 = e.clone();
            for &i in &idx {
                e2[i] = 0;
            }
            groups
                .entry(key)
                .or_insert_with(|| Self::zero(&self.vars))
                .add_term(e2, c.clone());
        }
        groups.into_iter().collect()
    }

    /// The coefficient map restricted to terms of the exact monomial `e`.
    pub fn coeff(&self, e: &[u16]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    /// Returns `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Terms in descending graded reverse lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(Vec<u16>, Rat)> {
        let mut v: Vec<(Vec<u16>, Rat)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
        v
    }

    /// Parses the ASCII interchange syntax over the given variable set.
    pub fn parse(vars: &Vars, input: &str) -> Result<Self, PolyError> {
        Parser {
            vars,
            bytes: input.as_bytes(),
            pos: 0,
        }
        .parse_all()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&x| x == 0);
            if is_const {
                write!(f, "{mag}")?;
            } else {
                let mut wrote = false;
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                for (i, &exp) in e.iter().enumerate() {
                    if exp == 0 {
                        continue;
                    }
                    if wrote {
                        write!(f, "*")?;
                    }
                    write!(f, "{}", self.vars.names()[i])?;
                    if exp > 1 {
                        write!(f, "^{exp}")?;
                    }
                    wrote = true;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Entry (i,j) of the Jacobian is ∂system_i/∂vars_j.
pub fn jacobian(system: &[MultiPoly], vars: &[String]) -> Vec<Vec<MultiPoly>> {
    assert!(!vars.is_empty(), "empty variable list");
    system
        .iter()
        .map(|p| {
            vars.iter()
                .map(|v| p.partial_derivative(v).expect("unknown variable"))
                .collect()
        })
        .collect()
}

struct Parser<'a> {
    vars: &'a Vars,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<MultiPoly, PolyError> {
        let p = self.parse_expr()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return self.err("trailing input");
        }
        Ok(p)
    }

    fn parse_expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                acc = self.parse_term()?.neg();
            }
            Some(b'+') => {
                self.pos += 1;
                acc = self.parse_term()?;
            }
            _ => acc = self.parse_term()?,
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.parse_factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.parse_factor()?);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.parse_base()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected exponent");
            }
            let e: u32 = std::str::from_utf8(&self.bytes[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| PolyError::Parse {
                    pos: start,
                    msg: "exponent too large".into(),
                })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn parse_base(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let mut lit = std::str::from_utf8(&self.bytes[start..self.pos])
                    .unwrap()
                    .to_string();
                self.skip_ws();
                if self.bytes.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let dstart = self.pos;
                    while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    if dstart == self.pos {
                        return self.err("expected denominator");
                    }
                    lit.push('/');
                    lit.push_str(std::str::from_utf8(&self.bytes[dstart..self.pos]).unwrap());
                }
                let c = parse_rat(&lit).map_err(|m| PolyError::Parse {
                    pos: start,
                    msg: m,
                })?;
                Ok(MultiPoly::constant(self.vars, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                MultiPoly::var(self.vars, name).map_err(|_| PolyError::Parse {
                    pos: start,
                    msg: format!("unknown variable `{name}`"),
                })
            }
            _ => self.err("expected a factor"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, ratio};

    fn wvars() -> Vars {
        Vars::new(["w12", "w13", "t13"])
    }

    #[test]
    fn parse_display_roundtrip() {
        let vars = wvars();
        let p = MultiPoly::parse(&vars, "w12*w13 - 3/7*t13^2 + 2").unwrap();
        assert_eq!(p.to_string(), "w12*w13 - 3/7*t13^2 + 2");
        let q = MultiPoly::parse(&vars, &p.to_string()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_errors_with_position() {
        let vars = wvars();
        match MultiPoly::parse(&vars, "w12 + zz") {
            Err(PolyError::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn substitution_matches_toric_formula() {
        // w13 -> w13 + t13*w12, checked against direct expansion.
        let vars = wvars();
        let image = MultiPoly::parse(&vars, "w13 + t13*w12").unwrap();
        let mut assign = BTreeMap::new();
        assign.insert("w13".to_string(), image);
        let p = MultiPoly::parse(&vars, "w13").unwrap();
        let got = p.substitute(&assign, &vars).unwrap();
        assert_eq!(got, MultiPoly::parse(&vars, "w13 + t13*w12").unwrap());

        let sq = MultiPoly::parse(&vars, "w13^2").unwrap();
        let got = sq.substitute(&assign, &vars).unwrap();
        let want = MultiPoly::parse(&vars, "w13^2 + 2*t13*w12*w13 + t13^2*w12^2").unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn identity_substitution_is_identity() {
        let vars = wvars();
        let p = MultiPoly::parse(&vars, "w12*w13 - t13").unwrap();
        let got = p.substitute(&BTreeMap::new(), &vars).unwrap();
        assert_eq!(got, p);
    }

    #[test]
    fn derivative_product_rule_case() {
        let vars = Vars::new(["w12", "w34"]);
        let p = MultiPoly::parse(&vars, "w12*w34").unwrap();
        let j = jacobian(&[p], &["w12".into(), "w34".into()]);
        assert_eq!(j[0][0], MultiPoly::parse(&vars, "w34").unwrap());
        assert_eq!(j[0][1], MultiPoly::parse(&vars, "w12").unwrap());
    }

    #[test]
    fn derivative_power() {
        let vars = wvars();
        let p = MultiPoly::parse(&vars, "w13^2").unwrap();
        assert_eq!(
            p.partial_derivative("w13").unwrap(),
            MultiPoly::parse(&vars, "2*w13").unwrap()
        );
    }

    #[test]
    fn grevlex_display_order() {
        let vars = Vars::new(["x", "y", "z"]);
        // x*z and y^2 have the same degree; grevlex puts y^2 first
        // (smaller exponent in the last variable wins).
        let p = MultiPoly::parse(&vars, "x*z + y^2 + x").unwrap();
        assert_eq!(p.to_string(), "y^2 + x*z + x");
    }

    #[test]
    fn eval_and_coefficient_extraction() {
        let vars = wvars();
        let p = MultiPoly::parse(&vars, "w12*w13 + t13*w13 - 5").unwrap();
        let mut vals = BTreeMap::new();
        vals.insert("w12".to_string(), rat(2));
        vals.insert("w13".to_string(), ratio(1, 2));
        vals.insert("t13".to_string(), rat(4));
        assert_eq!(p.eval_rat(&vals).unwrap(), rat(1) + rat(2) - rat(5));

        let c = p.coefficient_of(&["w12".into(), "w13".into()], &[0, 1]);
        assert_eq!(c, MultiPoly::parse(&vars, "t13").unwrap());
    }
}
