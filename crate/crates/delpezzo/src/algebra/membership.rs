//! Ideal membership certificates by exact linear algebra on monomial
//! coordinates (a bounded-degree Macaulay-style solve), plus the
//! generator-span multiplier solve used by the invariance checks.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::linalg;
use super::poly::MultiPoly;
use super::rational::Rat;

/// Result of a membership query. `NotFound` means no certificate exists
/// within the multiplier-degree cap; it is never a proof of non-membership
/// for the full ideal.
#[derive(Clone, Debug)]
pub enum Membership {
    Certificate(Vec<MultiPoly>),
    NotFound,
}

impl Membership {
    pub fn is_found(&self) -> bool {
        matches!(self, Membership::Certificate(_))
    }
}

/// Searches for multipliers h_i of total degree ≤ `cap` with
/// f = Σ h_i·g_i, and verifies any hit by exact re-expansion.
///
/// When f and all generators are homogeneous, the multiplier for g_i is
/// restricted to the homogeneous degree deg f − deg g_i (lossless: the
/// degree-matching component of any solution is again a solution).
pub fn membership_certificate(
    f: &MultiPoly,
    generators: &[MultiPoly],
    cap: u32,
) -> Membership {
    assert!(!generators.is_empty(), "no generators");
    for g in generators {
        assert!(g.vars() == f.vars(), "variable sets differ");
    }
    if f.is_zero() {
        return Membership::Certificate(
            generators.iter().map(|_| MultiPoly::zero(f.vars())).collect(),
        );
    }

    let vars = f.vars();
    let n = vars.len();
    let all_names: Vec<String> = vars.names().to_vec();
    let homogeneous = {
        let fd = f.total_degree();
        f.is_homogeneous_in(&all_names, fd)
            && generators
                .iter()
                .all(|g| !g.is_zero() && g.is_homogeneous_in(&all_names, g.total_degree()))
    };

    // Candidate multiplier monomials per generator.
    let mut columns: Vec<(usize, Vec<u16>)> = Vec::new();
    for (j, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let degs: Vec<u32> = if homogeneous {
            let fd = f.total_degree();
            let gd = g.total_degree();
            if fd < gd || fd - gd > cap {
                continue;
            }
            vec![fd - gd]
        } else {
            (0..=cap).collect()
        };
        for d in degs {
            for m in monomials_of_degree(n, d) {
                columns.push((j, m));
            }
        }
    }
    if columns.is_empty() {
        return Membership::NotFound;
    }

    // Equation index: every monomial appearing in any product or in f.
    let mut eq_index: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
    let mut col_vectors: Vec<Vec<(usize, Rat)>> = Vec::with_capacity(columns.len());
    for (j, m) in &columns {
        let mut entries = Vec::new();
        for (e, c) in generators[*j].terms() {
            let prod: Vec<u16> = e.iter().zip(m).map(|(&a, &b)| a + b).collect();
            let next = eq_index.len();
            let idx = *eq_index.entry(prod).or_insert(next);
            entries.push((idx, c.clone()));
        }
        col_vectors.push(entries);
    }
    for (e, _) in f.terms() {
        let next = eq_index.len();
        eq_index.entry(e.clone()).or_insert(next);
    }

    let rows = eq_index.len();
    let mut mat = vec![vec![Rat::zero(); columns.len()]; rows];
    for (col, entries) in col_vectors.iter().enumerate() {
        for (row, c) in entries {
            mat[*row] = {
                let mut r = std::mem::take(&mut mat[*row]);
                r[col] += c.clone();
                r
            };
        }
    }
    let mut rhs = vec![Rat::zero(); rows];
    for (e, c) in f.terms() {
        rhs[eq_index[e]] = c.clone();
    }

    let Some(solution) = linalg::solve(&mat, &rhs) else {
        return Membership::NotFound;
    };

    let mut multipliers: Vec<MultiPoly> =
        generators.iter().map(|_| MultiPoly::zero(vars)).collect();
    for ((j, m), coeff) in columns.iter().zip(&solution) {
        if !coeff.is_zero() {
            let term = MultiPoly::from_terms(vars, [(m.clone(), coeff.clone())]);
            multipliers[*j] = multipliers[*j].add(&term);
        }
    }
    // Certificate is only returned verified.
    let mut recon = MultiPoly::zero(vars);
    for (h, g) in multipliers.iter().zip(generators) {
        recon = recon.add(&h.mul(g));
    }
    assert!(recon == *f, "membership certificate failed re-expansion");
    Membership::Certificate(multipliers)
}

/// All exponent vectors of total degree exactly `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn go(i: usize, rem: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == cur.len() {
            cur[i] = rem as u16;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for take in 0..=rem {
            cur[i] = take as u16;
            go(i + 1, rem - take, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    go(0, d, &mut cur, &mut out);
    out
}

/// Attempts the "matrix form" of invariance: multipliers that are
/// polynomial in the non-`w` variables only, found through pivot
/// monomials. A pivot for generator i is a monomial in the `w_names`
/// variables whose coefficient in g_i is a nonzero rational constant and
/// which occurs in no other generator; matching coefficients on the pivot
/// then forces the multiplier row.
///
/// Returns the forced multipliers and the residual
/// `target − Σ mult_j · g_j` (zero residual = verified certificate).
pub fn matrix_form_multipliers(
    target: &MultiPoly,
    generators: &[MultiPoly],
    w_names: &[String],
) -> Option<(Vec<MultiPoly>, MultiPoly)> {
    let splits: Vec<Vec<(Vec<u16>, MultiPoly)>> =
        generators.iter().map(|g| g.split_by(w_names)).collect();
    let mut pivots: Vec<(Vec<u16>, Rat)> = Vec::new();
    for (i, split) in splits.iter().enumerate() {
        let mut found = None;
        'cand: for (wexp, coeff) in split {
            let Some(c) = coeff.as_constant() else {
                continue;
            };
            if c.is_zero() {
                continue;
            }
            for (k, other) in splits.iter().enumerate() {
                if k != i && other.iter().any(|(we, _)| we == wexp) {
                    continue 'cand;
                }
            }
            found = Some((wexp.clone(), c));
            break;
        }
        pivots.push(found?);
    }
    let mut multipliers = Vec::with_capacity(generators.len());
    let mut residual = target.clone();
    for (j, (wexp, pivot_coeff)) in pivots.iter().enumerate() {
        let coeff = target.coefficient_of(w_names, wexp);
        let mult = coeff.scale(&pivot_coeff.clone().recip());
        residual = residual.sub(&mult.mul(&generators[j]));
        multipliers.push(mult);
    }
    Some((multipliers, residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Vars;

    fn pluecker() -> (Vars, Vec<MultiPoly>) {
        let vars = Vars::new([
            "w12", "w13", "w14", "w15", "w23", "w24", "w25", "w34", "w35", "w45",
        ]);
        let gens = [
            "w12*w34 - w13*w24 + w14*w23",
            "w12*w35 - w13*w25 + w15*w23",
            "w12*w45 - w14*w25 + w15*w24",
            "w13*w45 - w14*w35 + w15*w34",
            "w23*w45 - w24*w35 + w25*w34",
        ]
        .iter()
        .map(|s| MultiPoly::parse(&vars, s).unwrap())
        .collect();
        (vars, gens)
    }

    #[test]
    fn zero_has_trivial_certificate() {
        let (vars, gens) = pluecker();
        match membership_certificate(&MultiPoly::zero(&vars), &gens, 2) {
            Membership::Certificate(hs) => assert!(hs.iter().all(|h| h.is_zero())),
            _ => panic!(),
        }
    }

    #[test]
    fn scalar_multiple_of_generator() {
        let (_vars, gens) = pluecker();
        let f = gens[0].scale(&crate::algebra::rational::ratio(5, 3));
        match membership_certificate(&f, &gens, 1) {
            Membership::Certificate(hs) => {
                assert_eq!(hs[0].as_constant(), Some(crate::algebra::rational::ratio(5, 3)));
                assert!(hs[1..].iter().all(|h| h.is_zero()));
            }
            _ => panic!("expected certificate"),
        }
    }

    #[test]
    fn negative_control_outside_degree_two_slice() {
        let (vars, gens) = pluecker();
        let f = MultiPoly::parse(&vars, "w12*w24").unwrap();
        assert!(!membership_certificate(&f, &gens, 2).is_found());
    }

    #[test]
    fn degree_one_multiplier() {
        let (vars, gens) = pluecker();
        // w13 * (first quadric) is in the ideal with a linear multiplier.
        let f = MultiPoly::parse(&vars, "w13").unwrap().mul(&gens[0]);
        match membership_certificate(&f, &gens, 1) {
            Membership::Certificate(hs) => {
                let recon: MultiPoly = hs
                    .iter()
                    .zip(&gens)
                    .fold(MultiPoly::zero(&vars), |acc, (h, g)| acc.add(&h.mul(g)));
                assert_eq!(recon, f);
            }
            _ => panic!("expected certificate"),
        }
    }

    #[test]
    fn pivot_multiplier_form() {
        let (vars, gens) = pluecker();
        let w: Vec<String> = vars.names().to_vec();
        // 2*g0 - 7*g3 decomposes through pivots with zero residual.
        let target = gens[0]
            .scale(&crate::algebra::rational::rat(2))
            .add(&gens[3].scale(&crate::algebra::rational::rat(-7)));
        let (mults, residual) = matrix_form_multipliers(&target, &gens, &w).unwrap();
        assert!(residual.is_zero());
        assert_eq!(mults[0].as_constant(), Some(crate::algebra::rational::rat(2)));
        assert_eq!(mults[3].as_constant(), Some(crate::algebra::rational::rat(-7)));
    }
}
