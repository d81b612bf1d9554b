//! The quintic del Pezzo sections of G(2,5): the hyperplane section Z⟨s⟩,
//! the codimension-2 section W_L and the trinodal threefold X₃(β), each
//! with its explicit equation system, plus exact smooth/singular point
//! analysis through Jacobian ranks.
//!
//! Coordinate elimination always solves a hyperplane relation for the
//! lexicographically-last coordinate whose coefficient is a nonzero
//! rational, matching the classical coordinate sets (w24 for the standard
//! s; w24 then w25 for the standard pencil; w24, w25, w23 for X₃(β)).

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::numfield::{rank_at, AlgebraicPoint, NfElem, NumberField};
use crate::algebra::poly::{jacobian, MultiPoly, PolyError, Vars};
use crate::algebra::rational::{rat, Rat};
use crate::algebra::splitting::{splitting_field_upoly, SplitError};
use crate::algebra::upoly::UPoly;
use crate::grassmannian::{
    pluecker_ideal, pluecker_point, skew_rank_kernel, standard_s, standard_s_prime, wedge,
    SkewForm, Subspace, W_NAMES,
};

#[derive(Debug, Error)]
pub enum SectionError {
    #[error("skew form must have rank 4, got {0}")]
    BadRank(usize),
    #[error("pencil is degenerate or dependent")]
    BadPencil,
    #[error("beta must be nonzero")]
    ZeroBeta,
    #[error("no eliminable coordinate with rational coefficient in `{0}`")]
    NotEliminable(String),
    #[error("polynomial error: {0}")]
    Poly(#[from] PolyError),
    #[error("splitting error: {0}")]
    Split(#[from] SplitError),
    #[error("{0}")]
    Other(String),
}

/// A projective variety given by explicit homogeneous generators, possibly
/// with symbolic parameters (β) in the coefficients.
#[derive(Clone)]
pub struct Variety {
    pub name: String,
    pub coords: Vec<String>,
    pub params: Vec<String>,
    pub vars: Vars,
    pub generators: Vec<MultiPoly>,
    pub expected_dim: usize,
}

impl Variety {
    pub fn new(
        name: &str,
        coords: Vec<String>,
        params: Vec<String>,
        generators: Vec<MultiPoly>,
        expected_dim: usize,
    ) -> Self {
        let mut names = params.clone();
        names.extend(coords.iter().cloned());
        let vars = Vars::new(names);
        for g in &generators {
            assert!(g.vars() == &vars, "generator over the wrong variable set");
            let d = g.degree_in(&coords);
            assert!(
                g.is_homogeneous_in(&coords, d),
                "generator not homogeneous in the coordinates: {g}"
            );
        }
        Variety {
            name: name.to_string(),
            coords,
            params,
            vars,
            generators,
            expected_dim,
        }
    }

    /// Ambient projective dimension.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.expected_dim
    }

    /// Substitutes rational values for the parameters.
    pub fn at_params(&self, values: &BTreeMap<String, Rat>) -> Variety {
        if self.params.is_empty() {
            return self.clone();
        }
        let target = Vars::new(self.coords.clone());
        let assignment: BTreeMap<String, MultiPoly> = values
            .iter()
            .map(|(k, v)| (k.clone(), MultiPoly::constant(&target, v.clone())))
            .collect();
        let generators = self
            .generators
            .iter()
            .map(|g| {
                g.substitute(&assignment, &target)
                    .expect("parameter substitution")
            })
            .collect();
        Variety::new(
            &self.name,
            self.coords.clone(),
            vec![],
            generators,
            self.expected_dim,
        )
    }

    /// Evaluates every generator at a rational point (coordinates given in
    /// declared order); parameters must have been substituted already.
    pub fn contains_rat(&self, point: &[Rat]) -> bool {
        assert!(self.params.is_empty(), "substitute parameters first");
        assert_eq!(point.len(), self.coords.len());
        let mut values = BTreeMap::new();
        for (n, v) in self.coords.iter().zip(point) {
            values.insert(n.clone(), v.clone());
        }
        self.generators
            .iter()
            .all(|g| g.eval_rat(&values).map(|v| v.is_zero()).unwrap_or(false))
    }

    /// Jacobian with respect to the coordinates only.
    pub fn jacobian(&self) -> Vec<Vec<MultiPoly>> {
        jacobian(&self.generators, &self.coords)
    }

    /// Jacobian rank at a rational point.
    pub fn rank_at_rat(&self, point: &[Rat]) -> usize {
        assert!(self.params.is_empty(), "substitute parameters first");
        let field = NumberField::rationals();
        let coords: Vec<NfElem> = point
            .iter()
            .map(|q| NfElem::from_rat(&field, q.clone()))
            .collect();
        let p = AlgebraicPoint::new(&field, coords).expect("nonzero point");
        rank_at(&self.jacobian(), &p, &self.coords).expect("bound variables")
    }

    /// The coordinate point with the named coordinate set to 1.
    pub fn unit_point(&self, coord: &str) -> Vec<Rat> {
        self.coords
            .iter()
            .map(|c| if c == coord { Rat::one() } else { Rat::zero() })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
pub struct VarietyDoc {
    pub name: String,
    pub coordinates: Vec<String>,
    #[serde(default)]
    pub parameters: Vec<String>,
    pub expected_dim: usize,
    pub generators: Vec<String>,
}

impl Variety {
    pub fn to_doc(&self) -> VarietyDoc {
        VarietyDoc {
            name: self.name.clone(),
            coordinates: self.coords.clone(),
            parameters: self.params.clone(),
            expected_dim: self.expected_dim,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn from_doc(doc: &VarietyDoc) -> Result<Variety, PolyError> {
        let mut names = doc.parameters.clone();
        names.extend(doc.coordinates.iter().cloned());
        let vars = Vars::new(names);
        let generators = doc
            .generators
            .iter()
            .map(|s| MultiPoly::parse(&vars, s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Variety::new(
            &doc.name,
            doc.coordinates.clone(),
            doc.parameters.clone(),
            generators,
            doc.expected_dim,
        ))
    }
}

/// A linear section of G(2,5) together with the coordinate eliminations
/// used to present it in its smaller ambient space.
pub struct LinearSection {
    pub variety: Variety,
    /// Image of each eliminated ambient Plücker coordinate in the
    /// section's variables.
    pub elimination: BTreeMap<String, MultiPoly>,
}

/// G(2,5) ⊂ ℙ⁹ with the five Plücker quadrics.
pub fn make_grassmannian() -> Variety {
    let sys = pluecker_ideal();
    Variety::new(
        "G",
        W_NAMES.iter().map(|s| s.to_string()).collect(),
        vec![],
        sys.generators,
        6,
    )
}

/// Intersects the Plücker quadrics with linear forms, eliminating one
/// coordinate per form (the lexicographically-last one with a nonzero
/// rational coefficient).
fn eliminate_linear_sections(
    name: &str,
    forms: &[MultiPoly],
    params: Vec<String>,
    expected_dim: usize,
) -> Result<LinearSection, SectionError> {
    let mut param_names = params.clone();
    param_names.extend(W_NAMES.iter().map(|s| s.to_string()));
    let full_vars = Vars::new(param_names);

    let mut remaining: Vec<String> = W_NAMES.iter().map(|s| s.to_string()).collect();
    let mut pending: Vec<MultiPoly> = forms
        .iter()
        .map(|f| f.project_vars(&full_vars))
        .collect::<Result<Vec<_>, _>>()?;
    let mut elim: BTreeMap<String, MultiPoly> = BTreeMap::new();

    while let Some(form) = pop_first_nonzero(&mut pending) {
        // Pick the last remaining coordinate with a rational coefficient.
        let mut chosen: Option<(String, Rat)> = None;
        for cname in remaining.iter().rev() {
            let coeff = form.coefficient_of(std::slice::from_ref(cname), &[1]);
            if let Some(c) = coeff.as_constant() {
                if !c.is_zero() {
                    chosen = Some((cname.clone(), c));
                    break;
                }
            }
        }
        let Some((cname, c)) = chosen else {
            return Err(SectionError::NotEliminable(form.to_string()));
        };
        // form = c·w + rest  ⇒  w = −rest/c.
        let w = MultiPoly::var(&full_vars, &cname)?;
        let rest = form.sub(&w.scale(&c));
        let image = rest.scale(&(-c.recip()));
        let mut sub = BTreeMap::new();
        sub.insert(cname.clone(), image.clone());
        for v in elim.values_mut() {
            *v = v.substitute(&sub, &full_vars)?;
        }
        for f in pending.iter_mut() {
            *f = f.substitute(&sub, &full_vars)?;
        }
        elim.insert(cname.clone(), image);
        remaining.retain(|n| n != &cname);
    }

    // Re-express everything over the reduced variable set.
    let mut reduced_names = params.clone();
    reduced_names.extend(remaining.iter().cloned());
    let reduced_vars = Vars::new(reduced_names);
    let substitution: BTreeMap<String, MultiPoly> = elim
        .iter()
        .map(|(k, v)| Ok((k.clone(), v.project_vars(&reduced_vars)?)))
        .collect::<Result<_, PolyError>>()?;
    // Substitution targeted at the reduced variables, for the quadrics.
    let full_to_reduced: BTreeMap<String, MultiPoly> = {
        let mut m = substitution.clone();
        for n in &remaining {
            m.insert(n.clone(), MultiPoly::var(&reduced_vars, n)?);
        }
        m
    };

    let sys = pluecker_ideal();
    let generators = sys
        .generators
        .iter()
        .map(|g| {
            g.project_vars(&full_vars)?
                .substitute(&full_to_reduced, &reduced_vars)
        })
        .collect::<Result<Vec<_>, _>>()?;
    for g in &generators {
        assert!(!g.is_zero(), "section generator collapsed to zero");
    }

    let variety = Variety::new(name, remaining, params, generators, expected_dim);
    Ok(LinearSection {
        variety,
        elimination: substitution,
    })
}

fn pop_first_nonzero(pending: &mut Vec<MultiPoly>) -> Option<MultiPoly> {
    while !pending.is_empty() {
        let f = pending.remove(0);
        if !f.is_zero() {
            return Some(f);
        }
    }
    None
}

/// The hyperplane section Z⟨s⟩ for a rank-4 form s. For the standard s the
/// system lives in ℙ⁸ with w24 eliminated.
pub fn make_z(s: &SkewForm) -> Result<LinearSection, SectionError> {
    let (rank, _) = skew_rank_kernel(s);
    if rank != 4 {
        return Err(SectionError::BadRank(rank));
    }
    make_z_unchecked(s)
}

/// Same elimination as `make_z` without the rank gate (used to build
/// deliberately singular sections).
pub fn make_z_unchecked(s: &SkewForm) -> Result<LinearSection, SectionError> {
    let vars = crate::grassmannian::w_vars();
    let form = s.hyperplane(&vars);
    eliminate_linear_sections("Z", &[form], vec![], 5)
}

/// The codimension-2 section W_L for an everywhere-rank-4 pencil.
pub fn make_w(s: &SkewForm, s_prime: &SkewForm) -> Result<LinearSection, SectionError> {
    if !crate::grassmannian::pencil_all_rank4(s, s_prime).map_err(|_| SectionError::BadPencil)? {
        return Err(SectionError::BadPencil);
    }
    let vars = crate::grassmannian::w_vars();
    let forms = [s.hyperplane(&vars), s_prime.hyperplane(&vars)];
    eliminate_linear_sections("W", &forms, vec![], 4)
}

/// X₃(β) with symbolic β: the trinodal quintic del Pezzo threefold in ℙ⁶,
/// cut out of G by w13 − w24, β·w14 − w25 and β·w15 + w23.
pub fn make_x3_symbolic() -> LinearSection {
    let mut names = vec!["beta".to_string()];
    names.extend(W_NAMES.iter().map(|s| s.to_string()));
    let vars = Vars::new(names);
    let forms = [
        MultiPoly::parse(&vars, "w13 - w24").unwrap(),
        MultiPoly::parse(&vars, "beta*w14 - w25").unwrap(),
        MultiPoly::parse(&vars, "beta*w15 + w23").unwrap(),
    ];
    let mut section = eliminate_linear_sections("X3", &forms, vec!["beta".to_string()], 3)
        .expect("fixed forms");
    section.variety.name = "X3(beta)".into();
    section
}

/// X₃(β) at a nonzero rational β.
pub fn make_x3(beta: &Rat) -> Result<LinearSection, SectionError> {
    if beta.is_zero() {
        return Err(SectionError::ZeroBeta);
    }
    let symbolic = make_x3_symbolic();
    let mut values = BTreeMap::new();
    values.insert("beta".to_string(), beta.clone());
    let variety = symbolic.variety.at_params(&values);
    let target = Vars::new(variety.coords.clone());
    let assignment: BTreeMap<String, MultiPoly> = values
        .iter()
        .map(|(k, v)| (k.clone(), MultiPoly::constant(&target, v.clone())))
        .collect();
    let elimination = symbolic
        .elimination
        .iter()
        .map(|(k, v)| Ok((k.clone(), v.substitute(&assignment, &target)?)))
        .collect::<Result<_, PolyError>>()?;
    Ok(LinearSection {
        variety: Variety {
            name: format!("X3({beta})"),
            ..variety
        },
        elimination,
    })
}

/// The three singular-locus equations of X₃(β) on Ξ, with symbolic β:
/// βw34w45 − w35², w34w35 − βw45², w35w45 − w34².
pub fn x3_singular_locus_symbolic() -> Vec<MultiPoly> {
    let vars = Vars::new(["beta", "w34", "w35", "w45"]);
    [
        "beta*w34*w45 - w35^2",
        "w34*w35 - beta*w45^2",
        "w35*w45 - w34^2",
    ]
    .iter()
    .map(|s| MultiPoly::parse(&vars, s).unwrap())
    .collect()
}

#[derive(Debug, Serialize)]
pub struct SingularPointRecord {
    pub point: String,
    pub rational: bool,
    pub jacobian_rank: usize,
    pub satisfies_locus_equations: bool,
}

#[derive(Debug, Serialize)]
pub struct SingularLocusReport {
    pub beta: String,
    pub tower_degree: usize,
    pub beta_is_cube: bool,
    pub points: Vec<SingularPointRecord>,
    pub rational_singular_points: usize,
    pub control_point_rank: usize,
    pub expected_codim: usize,
    pub pass: bool,
}

/// Certifies the singular scheme of X₃(β): builds the splitting tower of
/// x³ − β, checks that the three points (w34,w35,w45) = (r, r², 1) satisfy
/// the singular-locus equations and have Jacobian rank < 3, and that the
/// control point w12 = 1 is a smooth point of the expected codimension.
pub fn verify_singular_scheme_x3(beta: &Rat) -> Result<SingularLocusReport, SectionError> {
    if beta.is_zero() {
        return Err(SectionError::ZeroBeta);
    }
    let cubic = UPoly::new(vec![-beta.clone(), Rat::zero(), Rat::zero(), Rat::one()]);
    let (field, roots) =
        splitting_field_upoly(&cubic, crate::algebra::numfield::TOWER_DEGREE_CAP)?;

    let section = make_x3(beta)?;
    let x3 = &section.variety;
    let jac = x3.jacobian();
    let codim = x3.codim();

    let locus = {
        let vars = Vars::new(["w34", "w35", "w45"]);
        let assignment: BTreeMap<String, MultiPoly> = [(
            "beta".to_string(),
            MultiPoly::constant(&vars, beta.clone()),
        )]
        .into_iter()
        .collect();
        x3_singular_locus_symbolic()
            .iter()
            .map(|g| g.substitute(&assignment, &vars).unwrap())
            .collect::<Vec<_>>()
    };

    let mut points = Vec::new();
    let mut rational_count = 0usize;
    for r in &roots {
        let coords = vec![
            NfElem::zero(&field),
            NfElem::zero(&field),
            NfElem::zero(&field),
            NfElem::zero(&field),
            r.clone(),
            r.mul(r),
            NfElem::one(&field),
        ];
        let point = AlgebraicPoint::new(&field, coords).expect("nonzero");
        let rank = rank_at(&jac, &point, &x3.coords).map_err(SectionError::Other)?;
        let mut vals = BTreeMap::new();
        vals.insert("w34".to_string(), r.clone());
        vals.insert("w35".to_string(), r.mul(r));
        vals.insert("w45".to_string(), NfElem::one(&field));
        let on_locus = locus.iter().all(|g| {
            crate::algebra::numfield::eval_nf(g, &vals, &field)
                .map(|v| v.is_zero())
                .unwrap_or(false)
        });
        let rational = point.is_rational();
        if rational {
            rational_count += 1;
        }
        points.push(SingularPointRecord {
            point: format!("{point:?}"),
            rational,
            jacobian_rank: rank,
            satisfies_locus_equations: on_locus,
        });
    }

    let control = x3.unit_point("w12");
    let control_rank = x3.rank_at_rat(&control);
    let beta_is_cube = crate::algebra::rational::rat_cbrt_exact(beta).is_some();
    let expected_rational = if beta_is_cube { 1 } else { 0 };

    let pass = points
        .iter()
        .all(|p| p.jacobian_rank < codim && p.satisfies_locus_equations)
        && control_rank == codim
        && points.len() == 3
        && rational_count == expected_rational;

    Ok(SingularLocusReport {
        beta: beta.to_string(),
        tower_degree: field.degree(),
        beta_is_cube,
        points,
        rational_singular_points: rational_count,
        control_point_rank: control_rank,
        expected_codim: codim,
        pass,
    })
}

/// Which family `smoothness_crosscheck` samples.
pub enum SectionKind {
    Z(SkewForm),
    W(SkewForm, SkewForm),
}

#[derive(Debug, Serialize)]
pub struct SmoothnessReport {
    pub section: String,
    pub samples: usize,
    pub expected_rank: usize,
    pub sample_ranks_ok: bool,
    /// For a deliberately degenerate rank-2 form: the exhibited singular
    /// point and its deficient rank.
    pub degenerate_witness: Option<(String, usize)>,
    pub pass: bool,
}

/// Samples points of the section through the affine wedge chart
/// ⟨e1 + a·e3 + b·e4 + c·e5, e2 + d·e3 + f·e4 + g·e5⟩ (small integer
/// parameters from a fixed deterministic sequence, filtered by isotropy)
/// and checks the Jacobian rank equals the codimension at every sample.
pub fn smoothness_crosscheck(
    kind: &SectionKind,
    samples: usize,
) -> Result<SmoothnessReport, SectionError> {
    let (section, forms) = match kind {
        SectionKind::Z(s) => (make_z(s)?, vec![s.clone()]),
        SectionKind::W(s, sp) => (make_w(s, sp)?, vec![s.clone(), sp.clone()]),
    };
    let variety = &section.variety;
    let expected_rank = variety.codim();
    let jac = variety.jacobian();
    let field = NumberField::rationals();

    let mut taken = 0usize;
    let mut all_ok = true;
    'outer: for radius in 1i64..=3 {
        for tuple in small_tuples(radius) {
            let (a, b, c, d, f, g) = tuple;
            let u = vec![rat(1), rat(0), rat(a), rat(b), rat(c)];
            let v = vec![rat(0), rat(1), rat(d), rat(f), rat(g)];
            if !forms.iter().all(|s| s.pair(&u, &v).is_zero()) {
                continue;
            }
            let w = wedge(&u, &v);
            let point: Vec<NfElem> = variety
                .coords
                .iter()
                .map(|name| {
                    let k = W_NAMES.iter().position(|n| n == name).unwrap();
                    NfElem::from_rat(&field, w[k].clone())
                })
                .collect();
            let p = AlgebraicPoint::new(&field, point).expect("w12 = 1 chart");
            let rank = rank_at(&jac, &p, &variety.coords).map_err(SectionError::Other)?;
            if rank != expected_rank {
                all_ok = false;
            }
            taken += 1;
            if taken >= samples {
                break 'outer;
            }
        }
    }

    Ok(SmoothnessReport {
        section: variety.name.clone(),
        samples: taken,
        expected_rank,
        sample_ranks_ok: all_ok && taken == samples,
        degenerate_witness: None,
        pass: all_ok && taken == samples,
    })
}

/// The degenerate control: for s = e1∨∧e2∨ (rank 2) the section is
/// singular at the image of ⟨e3,e4⟩; returns the witness rank (< codim).
pub fn degenerate_section_witness() -> Result<SmoothnessReport, SectionError> {
    let s = SkewForm::basis_wedge(1, 2);
    let section = make_z_unchecked(&s)?;
    let variety = &section.variety;
    let expected_rank = variety.codim();
    let e34 = Subspace::from_ints(&[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]]);
    let w = pluecker_point(&e34).map_err(|e| SectionError::Other(e.to_string()))?;
    let point: Vec<Rat> = variety
        .coords
        .iter()
        .map(|name| {
            let k = W_NAMES.iter().position(|n| n == name).unwrap();
            w[k].clone()
        })
        .collect();
    let rank = variety.rank_at_rat(&point);
    let pass = rank < expected_rank;
    Ok(SmoothnessReport {
        section: "Z for the rank-2 form e1^e2".into(),
        samples: 1,
        expected_rank,
        sample_ranks_ok: false,
        degenerate_witness: Some((format!("{point:?}"), rank)),
        pass,
    })
}

fn small_tuples(radius: i64) -> impl Iterator<Item = (i64, i64, i64, i64, i64, i64)> {
    let r = radius;
    let range = move || -r..=r;
    range().flat_map(move |a| {
        range().flat_map(move |b| {
            range().flat_map(move |c| {
                range().flat_map(move |d| {
                    range().flat_map(move |f| range().map(move |g| (a, b, c, d, f, g)))
                })
            })
        })
    })
}

/// Convenience: the standard sections used throughout.
pub fn standard_z() -> LinearSection {
    make_z(&standard_s()).expect("standard s has rank 4")
}

pub fn standard_w() -> LinearSection {
    make_w(&standard_s(), &standard_s_prime()).expect("standard pencil is rank 4")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    #[test]
    fn grassmannian_shape() {
        let g = make_grassmannian();
        assert_eq!(g.generators.len(), 5);
        assert_eq!(g.ambient_dim(), 9);
        assert!(g.contains_rat(&g.unit_point("w12")));
        // w12 = w34 = 1 point is off G.
        let mut p = g.unit_point("w12");
        p[7] = rat(1);
        assert!(!g.contains_rat(&p));
    }

    #[test]
    fn z_standard_matches_golden_system() {
        let z = standard_z();
        assert_eq!(
            z.variety.coords,
            vec!["w12", "w13", "w14", "w15", "w23", "w25", "w34", "w35", "w45"]
        );
        let want = [
            "w12*w34 - w13^2 + w14*w23",
            "w12*w35 - w13*w25 + w15*w23",
            "w12*w45 - w14*w25 + w13*w15",
            "w13*w45 - w14*w35 + w15*w34",
            "w23*w45 - w13*w35 + w25*w34",
        ];
        for w in &want {
            let p = MultiPoly::parse(&z.variety.vars, w).unwrap();
            assert!(z.variety.generators.contains(&p), "missing generator {w}");
        }
        assert!(z.variety.contains_rat(&z.variety.unit_point("w12")));
        assert_eq!(z.elimination.len(), 1);
        assert_eq!(z.elimination["w24"].to_string(), "w13");
    }

    #[test]
    fn w_standard_matches_golden_system() {
        let w = standard_w();
        assert_eq!(
            w.variety.coords,
            vec!["w12", "w13", "w14", "w15", "w23", "w34", "w35", "w45"]
        );
        let want = [
            "w12*w34 - w13^2 + w14*w23",
            "w12*w35 - w13*w14 + w15*w23",
            "w12*w45 - w14^2 + w13*w15",
            "w13*w45 - w14*w35 + w15*w34",
            "w23*w45 - w13*w35 + w14*w34",
        ];
        for s in &want {
            let p = MultiPoly::parse(&w.variety.vars, s).unwrap();
            assert!(w.variety.generators.contains(&p), "missing generator {s}");
        }
        assert_eq!(w.elimination["w24"].to_string(), "w13");
        assert_eq!(w.elimination["w25"].to_string(), "w14");
    }

    #[test]
    fn x3_symbolic_matches_golden_system() {
        let x3 = make_x3_symbolic();
        assert_eq!(
            x3.variety.coords,
            vec!["w12", "w13", "w14", "w15", "w34", "w35", "w45"]
        );
        let want = [
            "w12*w34 - w13^2 - beta*w14*w15",
            "w12*w35 - beta*w13*w14 - beta*w15^2",
            "w12*w45 - beta*w14^2 + w13*w15",
            "w13*w45 - w14*w35 + w15*w34",
            "-beta*w15*w45 - w13*w35 + beta*w14*w34",
        ];
        for s in &want {
            let p = MultiPoly::parse(&x3.variety.vars, s).unwrap();
            assert!(x3.variety.generators.contains(&p), "missing generator {s}");
        }
    }

    #[test]
    fn x3_contains_plane_and_base_point() {
        let x3 = make_x3(&rat(1)).unwrap();
        assert!(x3.variety.contains_rat(&x3.variety.unit_point("w12")));
        // Ξ: only w34, w35, w45 survive — checked symbolically.
        let vars = Vars::new(["w34", "w35", "w45"]);
        let mut assignment = BTreeMap::new();
        for dead in ["w12", "w13", "w14", "w15"] {
            assignment.insert(dead.to_string(), MultiPoly::zero(&vars));
        }
        for g in &x3.variety.generators {
            let restricted = g.substitute(&assignment, &vars).unwrap();
            assert!(restricted.is_zero());
        }
    }

    #[test]
    fn base_point_ranks_equal_codim() {
        let g = make_grassmannian();
        assert_eq!(g.rank_at_rat(&g.unit_point("w12")), 3);
        let z = standard_z().variety;
        assert_eq!(z.rank_at_rat(&z.unit_point("w12")), 3);
        assert_eq!(z.codim(), 3);
        let w = standard_w().variety;
        assert_eq!(w.rank_at_rat(&w.unit_point("w12")), 3);
        let x = make_x3(&ratio(7, 5)).unwrap().variety;
        assert_eq!(x.rank_at_rat(&x.unit_point("w12")), 3);
    }

    #[test]
    fn singular_scheme_beta_one() {
        let report = verify_singular_scheme_x3(&rat(1)).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.tower_degree, 2);
        assert_eq!(report.rational_singular_points, 1);
        assert_eq!(report.control_point_rank, 3);
        for p in &report.points {
            assert!(p.jacobian_rank < 3);
            assert!(p.satisfies_locus_equations);
        }
    }

    #[test]
    fn singular_scheme_beta_two() {
        let report = verify_singular_scheme_x3(&rat(2)).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.tower_degree, 6);
        assert_eq!(report.rational_singular_points, 0);
    }

    #[test]
    fn smoothness_samples() {
        let z = smoothness_crosscheck(&SectionKind::Z(standard_s()), 25).unwrap();
        assert!(z.pass, "{z:?}");
        assert_eq!(z.expected_rank, 3);
        let w =
            smoothness_crosscheck(&SectionKind::W(standard_s(), standard_s_prime()), 25).unwrap();
        assert!(w.pass, "{w:?}");
        let bad = degenerate_section_witness().unwrap();
        assert!(bad.pass, "{bad:?}");
        assert!(bad.degenerate_witness.unwrap().1 < 3);
    }

    #[test]
    fn nonstandard_rank4_form_section() {
        // s = e1∨∧e2∨ + e3∨∧e4∨: rank 4, kernel ⟨e5⟩, eliminating w34.
        let s = SkewForm::basis_wedge(1, 2).add(&SkewForm::basis_wedge(3, 4));
        let section = make_z(&s).unwrap();
        assert!(!section.variety.coords.contains(&"w34".to_string()));
        assert_eq!(section.elimination["w34"].to_string(), "-w12");
        // Sampled smooth points still show rank = codimension.
        let report = smoothness_crosscheck(&SectionKind::Z(s), 10).unwrap();
        assert!(report.pass, "{report:?}");
        // Rank-2 input is rejected by the gate.
        assert!(matches!(
            make_z(&SkewForm::basis_wedge(1, 2)),
            Err(SectionError::BadRank(2))
        ));
    }

    #[test]
    fn zero_beta_rejected() {
        assert!(matches!(make_x3(&rat(0)), Err(SectionError::ZeroBeta)));
        assert!(matches!(
            verify_singular_scheme_x3(&rat(0)),
            Err(SectionError::ZeroBeta)
        ));
    }
}
