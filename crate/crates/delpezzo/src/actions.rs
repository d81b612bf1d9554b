//! The unipotent representations ρ₆, ρ₅, ρ₄, ρ̄₅ and their induced
//! coordinate actions, the trinodal and ℙ² actions, and the verification
//! suite: additivity, faithfulness, invariance, fixed loci, orbit ranks,
//! the symplectic identity and block stabilizers.
//!
//! Variance convention, pinned by the explicit toric and trinodal
//! coordinate formulas: a representation matrix R acting on V∨ induces on
//! the coordinate functions w_ab the substitution
//! w_ab ↦ Σ_{i<j} (R_ia·R_jb − R_ja·R_ib)·w_ij, the second compound of the
//! transpose. On the σ₂,₂-projection coordinates this reproduces
//! w_ij ↦ w_ij + t_ij·w12 exactly.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::linalg::{express_in_span, rank_gauss, row_space};
use crate::algebra::membership::{matrix_form_multipliers, membership_certificate, Membership};
use crate::algebra::poly::{MultiPoly, PolyError, Vars};
use crate::algebra::rational::{rat, Rat};
use crate::sections::{LinearSection, Variety};

#[derive(Debug, Error)]
pub enum ActionError {
    #[error("coordinate mismatch between action and variety")]
    CoordinateMismatch,
    #[error("point does not lie on the variety")]
    PointOffVariety,
    #[error("dehomogenization coordinate vanishes at the point")]
    DehomVanishes,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("action does not descend to the section: coordinate `{0}`")]
    NotCompatible(String),
    #[error("polynomial error: {0}")]
    Poly(#[from] PolyError),
    #[error("{0}")]
    Other(String),
}

/// A witness for a failed polynomial identity.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub coordinate: String,
    pub residual: String,
}

/// A representation of a vector group by unipotent matrices, entries of
/// degree ≤ 1 in the parameters and the identity at parameter zero.
#[derive(Clone)]
pub struct UnipotentRep {
    pub name: String,
    pub params: Vec<String>,
    pub vars: Vars,
    pub matrix: Vec<Vec<MultiPoly>>,
}

impl UnipotentRep {
    pub fn new(name: &str, params: Vec<String>, rows: Vec<Vec<&str>>) -> Self {
        let vars = Vars::new(params.clone());
        let matrix: Vec<Vec<MultiPoly>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| MultiPoly::parse(&vars, s).expect("fixed entry"))
                    .collect()
            })
            .collect();
        let rep = UnipotentRep {
            name: name.to_string(),
            params,
            vars,
            matrix,
        };
        rep.validate();
        rep
    }

    fn validate(&self) {
        let n = self.matrix.len();
        let zero: BTreeMap<String, Rat> =
            self.params.iter().map(|p| (p.clone(), Rat::zero())).collect();
        for (i, row) in self.matrix.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix not square");
            for (j, e) in row.iter().enumerate() {
                assert!(
                    e.total_degree() <= 1,
                    "entry ({i},{j}) has degree > 1 in the parameters"
                );
                let v = e.eval_rat(&zero).expect("closed entry");
                let want = if i == j { Rat::one() } else { Rat::zero() };
                assert_eq!(v, want, "matrix at zero parameters is not the identity");
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }
}

/// ρ₆: the 6-parameter representation whose second exterior power induces
/// the toric structure downstream of the σ₂,₂-projection.
pub fn rho6() -> UnipotentRep {
    UnipotentRep::new(
        "rho6",
        ["t13", "t23", "t14", "t24", "t15", "t25"]
            .map(String::from)
            .to_vec(),
        vec![
            vec!["1", "0", "-t23", "-t24", "-t25"],
            vec!["0", "1", "t13", "t14", "t15"],
            vec!["0", "0", "1", "0", "0"],
            vec!["0", "0", "0", "1", "0"],
            vec!["0", "0", "0", "0", "1"],
        ],
    )
}

/// ρ₅: ρ₆ with the symplectic constraint t24 = t13; preserves Z⟨s⟩.
pub fn rho5() -> UnipotentRep {
    UnipotentRep::new(
        "rho5",
        ["t13", "t23", "t14", "t15", "t25"].map(String::from).to_vec(),
        vec![
            vec!["1", "0", "-t23", "-t13", "-t25"],
            vec!["0", "1", "t13", "t14", "t15"],
            vec!["0", "0", "1", "0", "0"],
            vec!["0", "0", "0", "1", "0"],
            vec!["0", "0", "0", "0", "1"],
        ],
    )
}

/// ρ₄: ρ₆ with t24 = t13 and t25 = t14; preserves W_L.
pub fn rho4() -> UnipotentRep {
    UnipotentRep::new(
        "rho4",
        ["t13", "t23", "t14", "t15"].map(String::from).to_vec(),
        vec![
            vec!["1", "0", "-t23", "-t13", "-t14"],
            vec!["0", "1", "t13", "t14", "t15"],
            vec!["0", "0", "1", "0", "0"],
            vec!["0", "0", "0", "1", "0"],
            vec!["0", "0", "0", "0", "1"],
        ],
    )
}

/// ρ̄₅: the induced 4×4 representation on V/⟨e5⟩, landing in Sp₄.
pub fn rho_bar5() -> UnipotentRep {
    UnipotentRep::new(
        "rho_bar5",
        ["t13", "t23", "t14"].map(String::from).to_vec(),
        vec![
            vec!["1", "0", "-t23", "-t13"],
            vec!["0", "1", "t13", "t14"],
            vec!["0", "0", "1", "0"],
            vec!["0", "0", "0", "1"],
        ],
    )
}

/// A per-coordinate polynomial substitution: each image is homogeneous of
/// degree 1 in the coordinates, the identity at parameter zero. `scalars`
/// holds symbolic coefficient parameters (β).
#[derive(Clone)]
pub struct CoordAction {
    pub name: String,
    pub scalars: Vec<String>,
    pub params: Vec<String>,
    pub coords: Vec<String>,
    pub vars: Vars,
    pub images: Vec<MultiPoly>,
}

impl CoordAction {
    pub fn new(
        name: &str,
        scalars: Vec<String>,
        params: Vec<String>,
        coords: Vec<String>,
        images: Vec<MultiPoly>,
    ) -> Self {
        let mut names = scalars.clone();
        names.extend(params.iter().cloned());
        names.extend(coords.iter().cloned());
        let vars = Vars::new(names);
        assert_eq!(images.len(), coords.len());
        let zero_params: BTreeMap<String, MultiPoly> = params
            .iter()
            .map(|p| (p.clone(), MultiPoly::zero(&vars)))
            .collect();
        for (c, img) in coords.iter().zip(&images) {
            assert!(img.vars() == &vars, "image over the wrong variable set");
            assert!(
                img.is_homogeneous_in(&coords, 1),
                "image of {c} is not linear in the coordinates"
            );
            let at_zero = img.substitute(&zero_params, &vars).expect("zero substitution");
            assert!(
                at_zero == MultiPoly::var(&vars, c).unwrap(),
                "action is not the identity at zero parameters (coordinate {c})"
            );
        }
        CoordAction {
            name: name.to_string(),
            scalars,
            params,
            coords,
            vars,
            images,
        }
    }

    pub fn from_strings(
        name: &str,
        scalars: &[&str],
        params: &[&str],
        coords: &[&str],
        images: &[&str],
    ) -> Self {
        let scalars: Vec<String> = scalars.iter().map(|s| s.to_string()).collect();
        let params: Vec<String> = params.iter().map(|s| s.to_string()).collect();
        let coords: Vec<String> = coords.iter().map(|s| s.to_string()).collect();
        let mut names = scalars.clone();
        names.extend(params.iter().cloned());
        names.extend(coords.iter().cloned());
        let vars = Vars::new(names);
        let images = images
            .iter()
            .map(|s| MultiPoly::parse(&vars, s).expect("fixed image"))
            .collect();
        Self::new(name, scalars, params, coords, images)
    }

    pub fn image_of(&self, coord: &str) -> &MultiPoly {
        let i = self
            .coords
            .iter()
            .position(|c| c == coord)
            .expect("unknown coordinate");
        &self.images[i]
    }

    /// Substitutes rational values for the scalar parameters (β).
    pub fn at_scalars(&self, values: &BTreeMap<String, Rat>) -> CoordAction {
        if self.scalars.is_empty() {
            return self.clone();
        }
        let mut names = self.params.clone();
        names.extend(self.coords.iter().cloned());
        let target = Vars::new(names);
        let assignment: BTreeMap<String, MultiPoly> = values
            .iter()
            .map(|(k, v)| (k.clone(), MultiPoly::constant(&target, v.clone())))
            .collect();
        let images = self
            .images
            .iter()
            .map(|img| img.substitute(&assignment, &target).expect("scalar substitution"))
            .collect();
        CoordAction::new(
            &self.name,
            vec![],
            self.params.clone(),
            self.coords.clone(),
            images,
        )
    }

    /// Sets the listed parameters to zero and drops them from the
    /// parameter list (the subgroup where those coordinates of the vector
    /// group vanish).
    pub fn with_params_zeroed(&self, dead: &[&str]) -> CoordAction {
        let params: Vec<String> = self
            .params
            .iter()
            .filter(|p| !dead.contains(&p.as_str()))
            .cloned()
            .collect();
        let mut names = self.scalars.clone();
        names.extend(params.iter().cloned());
        names.extend(self.coords.iter().cloned());
        let target = Vars::new(names);
        let assignment: BTreeMap<String, MultiPoly> = dead
            .iter()
            .map(|p| (p.to_string(), MultiPoly::zero(&target)))
            .collect();
        let images = self
            .images
            .iter()
            .map(|img| img.substitute(&assignment, &target).expect("zeroing"))
            .collect();
        CoordAction::new(
            &format!("{}|0", self.name),
            self.scalars.clone(),
            params,
            self.coords.clone(),
            images,
        )
    }

    /// Coefficient matrix over the coordinates: images[i] = Σ_k M[i][k]·coord_k
    /// with entries in the scalar+parameter ring.
    fn coefficient_matrix(&self, param_vars: &Vars) -> Vec<Vec<MultiPoly>> {
        self.images
            .iter()
            .map(|img| {
                self.coords
                    .iter()
                    .map(|c| {
                        let mut exps = vec![0u16; self.coords.len()];
                        exps[self.coords.iter().position(|x| x == c).unwrap()] = 1;
                        img.coefficient_of(&self.coords, &exps)
                            .project_vars(param_vars)
                            .expect("coefficient in parameters")
                    })
                    .collect()
            })
            .collect()
    }
}

/// The induced action on the C(n,2) Plücker-style coordinates of a 5×5
/// (or 4×4) representation: the second compound of the transpose.
pub fn induce_on_coordinates(rep: &UnipotentRep) -> CoordAction {
    let n = rep.dim();
    assert!(n == 5 || n == 4, "induce expects a 5×5 or 4×4 representation");
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let coords: Vec<String> = pairs.iter().map(|(i, j)| format!("w{i}{j}")).collect();
    let mut names = rep.params.clone();
    names.extend(coords.iter().cloned());
    let vars = Vars::new(names);
    let entry = |i: usize, j: usize| -> MultiPoly {
        rep.matrix[i - 1][j - 1].project_vars(&vars).expect("entry")
    };
    let images: Vec<MultiPoly> = pairs
        .iter()
        .map(|&(a, b)| {
            let mut acc = MultiPoly::zero(&vars);
            for (k, &(i, j)) in pairs.iter().enumerate() {
                // minor of the transpose on rows (a,b), columns (i,j)
                let m = entry(i, a)
                    .mul(&entry(j, b))
                    .sub(&entry(j, a).mul(&entry(i, b)));
                if !m.is_zero() {
                    let w = MultiPoly::var(&vars, &coords[k]).unwrap();
                    acc = acc.add(&m.mul(&w));
                }
            }
            acc
        })
        .collect();
    CoordAction::new(
        &format!("induce({})", rep.name),
        vec![],
        rep.params.clone(),
        coords,
        images,
    )
}

/// Restricts an ambient coordinate action to a linear section: eliminated
/// coordinates are substituted away, and the action is required to commute
/// with the elimination (it maps the section to itself coordinate-wise).
pub fn restrict_action(
    action: &CoordAction,
    section: &LinearSection,
    name: &str,
) -> Result<CoordAction, ActionError> {
    let variety = &section.variety;
    // Scalars: the union of the variety's parameters and the action's.
    let mut scalars = variety.params.clone();
    for s in &action.scalars {
        if !scalars.contains(s) {
            scalars.push(s.clone());
        }
    }
    // Full ambient variable set (all action coordinates), then the reduced
    // one (section coordinates only).
    let mut full_names = scalars.clone();
    full_names.extend(action.params.iter().cloned());
    full_names.extend(action.coords.iter().cloned());
    let full_vars = Vars::new(full_names);
    let mut sec_names = scalars.clone();
    sec_names.extend(action.params.iter().cloned());
    sec_names.extend(variety.coords.iter().cloned());
    let sec_vars = Vars::new(sec_names);

    // Elimination as a substitution on the full ambient set.
    let elim_full: BTreeMap<String, MultiPoly> = section
        .elimination
        .iter()
        .map(|(k, v)| Ok((k.clone(), v.project_vars(&full_vars)?)))
        .collect::<Result<_, PolyError>>()?;

    let restrict = |img: &MultiPoly| -> Result<MultiPoly, ActionError> {
        let r = img
            .project_vars(&full_vars)?
            .substitute(&elim_full, &full_vars)?;
        Ok(r.project_vars(&sec_vars)?)
    };

    // Compatibility: the image of each eliminated coordinate must equal
    // the elimination expression applied to the images.
    let img_assignment: BTreeMap<String, MultiPoly> = variety
        .coords
        .iter()
        .map(|c| Ok((c.clone(), restrict(action.image_of(c))?)))
        .collect::<Result<_, ActionError>>()?;
    for dead in section.elimination.keys() {
        let lhs = restrict(action.image_of(dead))?;
        let expr = section.elimination[dead].project_vars(&sec_vars)?;
        let rhs = expr.substitute(&img_assignment, &sec_vars)?;
        if lhs != rhs {
            return Err(ActionError::NotCompatible(dead.clone()));
        }
    }

    let images = variety
        .coords
        .iter()
        .map(|c| restrict(action.image_of(c)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CoordAction::new(
        name,
        scalars,
        action.params.clone(),
        variety.coords.clone(),
        images,
    ))
}

/// The vector group structure on X₃(β) with symbolic β: derived from ρ₆
/// through the parameter constraints t24 = t13, t25 = β·t14, t23 = −β·t15
/// and the coordinate elimination of X₃(β), then golden-matched against
/// the explicit 7-line formula.
pub fn trinodal_action_symbolic() -> CoordAction {
    let amb = induce_on_coordinates(&rho6());
    // Constrain the parameters inside a β-aware variable set.
    let mut names = vec!["beta".to_string()];
    names.extend(["t13", "t14", "t15"].map(String::from));
    names.extend(amb.coords.iter().cloned());
    let vars = Vars::new(names);
    let constraint: BTreeMap<String, MultiPoly> = [
        ("t24", "t13"),
        ("t25", "beta*t14"),
        ("t23", "-beta*t15"),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), MultiPoly::parse(&vars, v).unwrap()))
    .collect();
    let images = amb
        .images
        .iter()
        .map(|img| img.substitute(&constraint, &vars).expect("constraint"))
        .collect();
    let constrained = CoordAction::new(
        "trinodal-ambient",
        vec!["beta".to_string()],
        ["t13", "t14", "t15"].map(String::from).to_vec(),
        amb.coords.clone(),
        images,
    );
    let section = crate::sections::make_x3_symbolic();
    let derived = restrict_action(&constrained, &section, "trinodal")
        .expect("trinodal action descends to X3(beta)");

    // Golden anchor: the explicit closed form.
    let golden = CoordAction::from_strings(
        "trinodal",
        &["beta"],
        &["t13", "t14", "t15"],
        &["w12", "w13", "w14", "w15", "w34", "w35", "w45"],
        &[
            "w12",
            "w13 + t13*w12",
            "w14 + t14*w12",
            "w15 + t15*w12",
            "w34 + 2*t13*w13 + beta*(t15*w14 + t14*w15) + (t13^2 + beta*t14*t15)*w12",
            "w35 + beta*(t14*w13 + t13*w14 + 2*t15*w15) + beta*(t13*t14 + t15^2)*w12",
            "w45 + (2*beta*t14*w14 - t15*w13 - t13*w15) + (beta*t14^2 - t15*t13)*w12",
        ],
    );
    for (a, b) in derived.images.iter().zip(&golden.images) {
        assert!(a == b, "derived trinodal action deviates from the golden formula");
    }
    derived
}

/// X₃(β)-action at a rational β ≠ 0.
pub fn trinodal_action(beta: &Rat) -> Result<CoordAction, ActionError> {
    if beta.is_zero() {
        return Err(ActionError::Other("beta must be nonzero".into()));
    }
    let symbolic = trinodal_action_symbolic();
    let mut values = BTreeMap::new();
    values.insert("beta".to_string(), beta.clone());
    Ok(symbolic.at_scalars(&values))
}

/// The "toric" 𝔾ₐ²-structure on ℙ²: (u0,u1,u2) ↦ (u0+t0·u2, u1+t1·u2, u2).
pub fn p2_toric() -> CoordAction {
    CoordAction::from_strings(
        "p2_toric",
        &[],
        &["t0", "t1"],
        &["u0", "u1", "u2"],
        &["u0 + t0*u2", "u1 + t1*u2", "u2"],
    )
}

/// The "non-toric" 𝔾ₐ²-structure on ℙ²:
/// (u0,u1,u2) ↦ (u0 + t1·u1 + (t1²/2 + t0)·u2, u1 + t1·u2, u2).
pub fn p2_nontoric() -> CoordAction {
    CoordAction::from_strings(
        "p2_nontoric",
        &[],
        &["t0", "t1"],
        &["u0", "u1", "u2"],
        &["u0 + t1*u1 + (1/2*t1^2 + t0)*u2", "u1 + t1*u2", "u2"],
    )
}

/// The toric 𝔾ₐ⁶-structure on ℙ⁶ downstream of the σ₂,₂-projection.
pub fn p6_toric() -> CoordAction {
    CoordAction::from_strings(
        "p6_toric",
        &[],
        &["t13", "t23", "t14", "t24", "t15", "t25"],
        &["w12", "w13", "w14", "w15", "w23", "w24", "w25"],
        &[
            "w12",
            "w13 + t13*w12",
            "w14 + t14*w12",
            "w15 + t15*w12",
            "w23 + t23*w12",
            "w24 + t24*w12",
            "w25 + t25*w12",
        ],
    )
}

/// The toric 𝔾ₐ³-structure on ℙ³ downstream of the trinodal projection.
pub fn p3_toric() -> CoordAction {
    CoordAction::from_strings(
        "p3_toric",
        &[],
        &["t13", "t14", "t15"],
        &["w12", "w13", "w14", "w15"],
        &[
            "w12",
            "w13 + t13*w12",
            "w14 + t14*w12",
            "w15 + t15*w12",
        ],
    )
}

/// Deliberately broken action: the toric ℙ⁶ structure with a t² term on
/// w13 (violates additivity).
pub fn broken_additivity_action() -> CoordAction {
    CoordAction::from_strings(
        "broken_t_squared",
        &[],
        &["t13", "t23", "t14", "t24", "t15", "t25"],
        &["w12", "w13", "w14", "w15", "w23", "w24", "w25"],
        &[
            "w12",
            "w13 + t13^2*w12",
            "w14 + t14*w12",
            "w15 + t15*w12",
            "w23 + t23*w12",
            "w24 + t24*w12",
            "w25 + t25*w12",
        ],
    )
}

/// Deliberately broken action on G: the single translation
/// w13 ↦ w13 + t·w12 with every other coordinate fixed (not an ideal
/// symmetry of the Plücker quadrics).
pub fn single_translation_action() -> CoordAction {
    let coords = crate::grassmannian::W_NAMES;
    let images: Vec<String> = coords
        .iter()
        .map(|c| {
            if *c == "w13" {
                "w13 + t*w12".to_string()
            } else {
                c.to_string()
            }
        })
        .collect();
    let image_refs: Vec<&str> = images.iter().map(|s| s.as_str()).collect();
    CoordAction::from_strings("single_translation", &[], &["t"], &coords, &image_refs)
}

// ---------------------------------------------------------------------
// Verification suite
// ---------------------------------------------------------------------

/// Additivity of a coordinate action: compose(a(t), a(t′)) = a(t + t′) as
/// exact polynomial identities in duplicated parameters.
pub fn check_additive(action: &CoordAction) -> Result<(), Witness> {
    let mut pv_names = action.scalars.clone();
    pv_names.extend(action.params.iter().cloned());
    let param_vars = Vars::new(pv_names);
    let m = action.coefficient_matrix(&param_vars);
    check_matrix_additive(&m, &action.scalars, &action.params, &action.coords)
}

/// Additivity of a matrix representation.
pub fn check_additive_rep(rep: &UnipotentRep) -> Result<(), Witness> {
    let labels: Vec<String> = (0..rep.dim())
        .flat_map(|i| (0..rep.dim()).map(move |j| format!("entry({},{})", i + 1, j + 1)))
        .collect();
    let rows: Vec<Vec<MultiPoly>> = rep.matrix.clone();
    check_matrix_additive_entries(&rows, &[], &rep.params, &labels)
}

fn check_matrix_additive(
    m: &[Vec<MultiPoly>],
    scalars: &[String],
    params: &[String],
    coords: &[String],
) -> Result<(), Witness> {
    let n = m.len();
    let primed: Vec<String> = params.iter().map(|p| format!("{p}_b")).collect();
    let mut names = scalars.to_vec();
    names.extend(params.iter().cloned());
    names.extend(primed.iter().cloned());
    let vars2 = Vars::new(names);

    let lift =
        |p: &MultiPoly| -> MultiPoly { p.project_vars(&vars2).expect("lift to doubled params") };
    let rename: BTreeMap<String, MultiPoly> = params
        .iter()
        .zip(&primed)
        .map(|(p, pb)| (p.clone(), MultiPoly::var(&vars2, pb).unwrap()))
        .collect();
    let sum: BTreeMap<String, MultiPoly> = params
        .iter()
        .zip(&primed)
        .map(|(p, pb)| {
            let s = MultiPoly::var(&vars2, p)
                .unwrap()
                .add(&MultiPoly::var(&vars2, pb).unwrap());
            (p.clone(), s)
        })
        .collect();

    for i in 0..n {
        for k in 0..n {
            // (M(t)·M(t'))[i][k] vs M(t+t')[i][k]
            let mut prod = MultiPoly::zero(&vars2);
            for j in 0..n {
                let a = lift(&m[i][j]);
                let b = lift(&m[j][k]).substitute(&rename, &vars2).unwrap();
                prod = prod.add(&a.mul(&b));
            }
            let want = lift(&m[i][k]).substitute(&sum, &vars2).unwrap();
            let diff = prod.sub(&want);
            if !diff.is_zero() {
                return Err(Witness {
                    coordinate: coords[i].clone(),
                    residual: diff.to_string(),
                });
            }
        }
    }
    Ok(())
}

fn check_matrix_additive_entries(
    m: &[Vec<MultiPoly>],
    scalars: &[String],
    params: &[String],
    labels: &[String],
) -> Result<(), Witness> {
    // Same computation, but witnesses are labeled by entry.
    let n = m.len();
    let primed: Vec<String> = params.iter().map(|p| format!("{p}_b")).collect();
    let mut names = scalars.to_vec();
    names.extend(params.iter().cloned());
    names.extend(primed.iter().cloned());
    let vars2 = Vars::new(names);
    let lift = |p: &MultiPoly| -> MultiPoly { p.project_vars(&vars2).expect("lift") };
    let rename: BTreeMap<String, MultiPoly> = params
        .iter()
        .zip(&primed)
        .map(|(p, pb)| (p.clone(), MultiPoly::var(&vars2, pb).unwrap()))
        .collect();
    let sum: BTreeMap<String, MultiPoly> = params
        .iter()
        .zip(&primed)
        .map(|(p, pb)| {
            let s = MultiPoly::var(&vars2, p)
                .unwrap()
                .add(&MultiPoly::var(&vars2, pb).unwrap());
            (p.clone(), s)
        })
        .collect();
    for i in 0..n {
        for k in 0..n {
            let mut prod = MultiPoly::zero(&vars2);
            for j in 0..n {
                let a = lift(&m[i][j]);
                let b = lift(&m[j][k]).substitute(&rename, &vars2).unwrap();
                prod = prod.add(&a.mul(&b));
            }
            let want = lift(&m[i][k]).substitute(&sum, &vars2).unwrap();
            let diff = prod.sub(&want);
            if !diff.is_zero() {
                return Err(Witness {
                    coordinate: labels[i * n + k].clone(),
                    residual: diff.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Faithfulness: the differential of the parameter-to-matrix map at 0 has
/// trivial kernel, i.e. the coefficient matrix of parameter occurrences
/// has rank equal to the parameter count.
pub fn check_faithful(rep: &UnipotentRep) -> bool {
    let n = rep.dim();
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let row: Vec<Rat> = rep
                .params
                .iter()
                .map(|p| {
                    let idx = rep.vars.index_of(p).unwrap();
                    let mut e = vec![0u16; rep.vars.len()];
                    e[idx] = 1;
                    rep.matrix[i][j].coeff(&e)
                })
                .collect();
            rows.push(row);
        }
    }
    rank_gauss(&rows) == rep.params.len()
}

/// One generator's invariance certificate: multipliers with
/// g_i(a(t,w)) = Σ_j M_ij·g_j(w), found by the matrix form first and the
/// bounded-degree membership fallback second.
#[derive(Debug, Serialize)]
pub struct InvarianceReport {
    pub action: String,
    pub variety: String,
    pub ok: bool,
    /// Multiplier matrix (rows per generator) when every generator
    /// certifies.
    pub multipliers: Option<Vec<Vec<String>>>,
    pub failure: Option<Witness>,
}

pub fn check_invariance(
    action: &CoordAction,
    variety: &Variety,
    cap: u32,
) -> Result<InvarianceReport, ActionError> {
    if action.coords != variety.coords {
        return Err(ActionError::CoordinateMismatch);
    }
    // Combined variable set: variety parameters ∪ action scalars ∪ action
    // parameters ∪ coordinates.
    let mut names: Vec<String> = Vec::new();
    for p in variety.params.iter().chain(&action.scalars) {
        if !names.contains(p) {
            names.push(p.clone());
        }
    }
    names.extend(action.params.iter().cloned());
    names.extend(variety.coords.iter().cloned());
    let vars = Vars::new(names);

    let gens: Vec<MultiPoly> = variety
        .generators
        .iter()
        .map(|g| g.project_vars(&vars))
        .collect::<Result<_, _>>()?;
    let images: BTreeMap<String, MultiPoly> = variety
        .coords
        .iter()
        .map(|c| Ok((c.clone(), action.image_of(c).project_vars(&vars)?)))
        .collect::<Result<_, PolyError>>()?;

    let mut rows: Vec<Vec<String>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let moved = g.substitute(&images, &vars)?;
        let attempt = matrix_form_multipliers(&moved, &gens, &variety.coords);
        match attempt {
            Some((mults, residual)) if residual.is_zero() => {
                rows.push(mults.iter().map(|m| m.to_string()).collect());
            }
            other => {
                // Fall back to a bounded-degree membership certificate.
                let residual = match &other {
                    Some((_, r)) => r.clone(),
                    None => moved.clone(),
                };
                match membership_certificate(&moved, &gens, cap) {
                    Membership::Certificate(hs) => {
                        rows.push(hs.iter().map(|m| m.to_string()).collect());
                    }
                    Membership::NotFound => {
                        return Ok(InvarianceReport {
                            action: action.name.clone(),
                            variety: variety.name.clone(),
                            ok: false,
                            multipliers: None,
                            failure: Some(Witness {
                                coordinate: format!("generator {}", i + 1),
                                residual: residual.to_string(),
                            }),
                        });
                    }
                }
            }
        }
    }
    Ok(InvarianceReport {
        action: action.name.clone(),
        variety: variety.name.clone(),
        ok: true,
        multipliers: Some(rows),
        failure: None,
    })
}

/// True iff the coordinate subspace cut by the vanishing coordinates is
/// fixed pointwise: every image restricts to its own coordinate.
pub fn fixed_pointwise(action: &CoordAction, vanishing: &[String]) -> bool {
    let sub: BTreeMap<String, MultiPoly> = vanishing
        .iter()
        .map(|c| (c.clone(), MultiPoly::zero(&action.vars)))
        .collect();
    action.coords.iter().zip(&action.images).all(|(c, img)| {
        let restricted = img.substitute(&sub, &action.vars).expect("restriction");
        let want = if vanishing.contains(c) {
            MultiPoly::zero(&action.vars)
        } else {
            MultiPoly::var(&action.vars, c).unwrap()
        };
        restricted == want
    })
}

/// Rank of the differential at t = 0 of the orbit map through `point`,
/// dehomogenized against the named coordinate. Rank = dim X = parameter
/// count certifies a dense open orbit.
pub fn orbit_rank_at(
    action: &CoordAction,
    variety: &Variety,
    point: &[Rat],
    dehom: &str,
) -> Result<usize, ActionError> {
    assert!(
        action.scalars.is_empty() && variety.params.is_empty(),
        "substitute scalar parameters first"
    );
    if action.coords != variety.coords {
        return Err(ActionError::CoordinateMismatch);
    }
    if !variety.contains_rat(point) {
        return Err(ActionError::PointOffVariety);
    }
    let base_idx = variety
        .coords
        .iter()
        .position(|c| c == dehom)
        .ok_or(ActionError::CoordinateMismatch)?;
    if point[base_idx].is_zero() {
        return Err(ActionError::DehomVanishes);
    }

    // q_c(t) = image_c(t, point), a polynomial in the parameters.
    let pvars = Vars::new(action.params.clone());
    let coord_values: BTreeMap<String, MultiPoly> = variety
        .coords
        .iter()
        .zip(point)
        .map(|(c, v)| (c.clone(), MultiPoly::constant(&pvars, v.clone())))
        .collect();
    let q: Vec<MultiPoly> = action
        .images
        .iter()
        .map(|img| {
            img.project_vars(&action.vars)
                .unwrap()
                .substitute(&coord_values, &pvars)
                .expect("evaluate at point")
        })
        .collect();

    let zero: BTreeMap<String, Rat> = action
        .params
        .iter()
        .map(|p| (p.clone(), Rat::zero()))
        .collect();
    let q0: Vec<Rat> = q.iter().map(|f| f.eval_rat(&zero).unwrap()).collect();
    let base0 = q0[base_idx].clone();

    // d/dt_k of q_c/q_base at t = 0, by the quotient rule.
    let mut jac: Vec<Vec<Rat>> = Vec::with_capacity(q.len());
    for (c, qc) in q.iter().enumerate() {
        let mut row = Vec::with_capacity(action.params.len());
        for p in &action.params {
            let dqc = qc.partial_derivative(p).unwrap().eval_rat(&zero).unwrap();
            let dqb = q[base_idx]
                .partial_derivative(p)
                .unwrap()
                .eval_rat(&zero)
                .unwrap();
            row.push((dqc * &base0 - &q0[c] * dqb) / (&base0 * &base0));
        }
        jac.push(row);
    }
    Ok(rank_gauss(&jac))
}

/// The symplectic identity AᵀJA = J for a 4×4 representation, with J the
/// matrix of s̄ = ē1∨∧ē3∨ − ē2∨∧ē4∨ (or any given 4×4 skew matrix).
pub fn check_symplectic(rep: &UnipotentRep, j: &[Vec<Rat>]) -> bool {
    let n = rep.dim();
    assert_eq!(n, 4);
    assert_eq!(j.len(), 4);
    let vars = &rep.vars;
    let jp: Vec<Vec<MultiPoly>> = j
        .iter()
        .map(|row| row.iter().map(|c| MultiPoly::constant(vars, c.clone())).collect())
        .collect();
    // AᵀJA
    let mut aj = vec![vec![MultiPoly::zero(vars); n]; n];
    for i in 0..n {
        for k in 0..n {
            let mut s = MultiPoly::zero(vars);
            for l in 0..n {
                // (Aᵀ)[i][l] = A[l][i]
                s = s.add(&rep.matrix[l][i].mul(&jp[l][k]));
            }
            aj[i][k] = s;
        }
    }
    for i in 0..n {
        for k in 0..n {
            let mut s = MultiPoly::zero(vars);
            for l in 0..n {
                s = s.add(&aj[i][l].mul(&rep.matrix[l][k]));
            }
            if s != jp[i][k] {
                return false;
            }
        }
    }
    true
}

/// The matrix of the standard symplectic form s̄ on V/⟨e5⟩.
pub fn standard_sbar_matrix() -> Vec<Vec<Rat>> {
    let mut j = vec![vec![Rat::zero(); 4]; 4];
    j[0][2] = Rat::one();
    j[2][0] = -Rat::one();
    j[1][3] = -Rat::one();
    j[3][1] = Rat::one();
    j
}

/// Which distinguished structure `verify_block_stabilizer` checks.
pub enum StabilizerStructure {
    /// Z⟨s⟩ with its solid: the hyperplane form and the solid equations.
    ZWithSolid,
    /// W_L with its plane: the two pencil forms and the plane equations.
    WWithPlane,
}

/// Checks that an invertible 5×5 matrix, acting through the induced
/// coordinate substitution, maps the section's defining forms into their
/// own span and preserves the distinguished Schubert subvariety's linear
/// equations.
pub fn verify_block_stabilizer(
    g: &[Vec<Rat>],
    structure: &StabilizerStructure,
) -> Result<bool, ActionError> {
    if crate::algebra::linalg::det(g).is_zero() {
        return Err(ActionError::SingularMatrix);
    }
    let vars = crate::grassmannian::w_vars();
    let coords: Vec<String> = crate::grassmannian::W_NAMES.iter().map(|s| s.to_string()).collect();
    let pairs = crate::grassmannian::W_PAIRS;
    // Rational coordinate substitution images (second compound of gᵀ).
    let images: BTreeMap<String, MultiPoly> = pairs
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| {
            let mut img = MultiPoly::zero(&vars);
            for (l, &(i, j)) in pairs.iter().enumerate() {
                let c = &g[i - 1][a - 1] * &g[j - 1][b - 1] - &g[j - 1][a - 1] * &g[i - 1][b - 1];
                if !c.is_zero() {
                    img = img.add(&MultiPoly::var(&vars, &coords[l]).unwrap().scale(&c));
                }
            }
            (coords[k].clone(), img)
        })
        .collect();

    let quadrics = crate::grassmannian::pluecker_ideal().generators;
    let moved_ok = quadrics.iter().all(|q| {
        let moved = q.substitute(&images, &vars).expect("substitution");
        match matrix_form_multipliers(&moved, &quadrics, &coords) {
            Some((_, residual)) => residual.is_zero(),
            None => false,
        }
    });
    if !moved_ok {
        return Ok(false);
    }

    let span_preserved = |forms: &[MultiPoly]| -> bool {
        let basis: Vec<Vec<Rat>> = forms.iter().map(|f| linear_coeffs(f, &coords)).collect();
        let basis = row_space(&basis);
        forms.iter().all(|f| {
            let moved = f.substitute(&images, &vars).expect("substitution");
            let v = linear_coeffs(&moved, &coords);
            express_in_span(&basis, &v).is_some()
        })
    };

    match structure {
        StabilizerStructure::ZWithSolid => {
            let s = crate::grassmannian::standard_s();
            let hyper = [s.hyperplane(&vars)];
            let solid = crate::grassmannian::schubert_equations(
                &crate::grassmannian::SchubertCell::Solid(
                    crate::grassmannian::Subspace::coordinate(&[5]),
                ),
            )
            .expect("standard solid");
            Ok(span_preserved(&hyper) && span_preserved(&solid))
        }
        StabilizerStructure::WWithPlane => {
            let s = crate::grassmannian::standard_s();
            let sp = crate::grassmannian::standard_s_prime();
            let forms = [s.hyperplane(&vars), sp.hyperplane(&vars)];
            let plane = crate::grassmannian::schubert_equations(
                &crate::grassmannian::SchubertCell::Plane22(
                    crate::grassmannian::Subspace::coordinate(&[3, 4, 5]),
                ),
            )
            .expect("standard plane");
            Ok(span_preserved(&forms) && span_preserved(&plane))
        }
    }
}

fn linear_coeffs(f: &MultiPoly, coords: &[String]) -> Vec<Rat> {
    coords
        .iter()
        .map(|c| {
            let mut e = vec![0u16; coords.len()];
            e[coords.iter().position(|x| x == c).unwrap()] = 1;
            f.coefficient_of(coords, &e)
                .as_constant()
                .expect("linear form")
        })
        .collect()
}

/// Embeds a 4×4 symplectic block as M(A₄, 1, 0) in GL₅.
pub fn block_embed(a4: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut m = vec![vec![Rat::zero(); 5]; 5];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = a4[i][j].clone();
        }
    }
    m[4][4] = Rat::one();
    m
}

/// Deterministic integral symplectic samples: products of ρ̄₅ at small
/// integer parameters and the standard symplectic involution J. Every
/// sample is re-verified against AᵀJA = J before use.
pub fn sample_symplectic_matrices(count: usize, seed: u64) -> Vec<Vec<Vec<Rat>>> {
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let j = standard_sbar_matrix();
    let rep = rho_bar5();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut m = crate::algebra::linalg::identity(4);
        let factors = rng.gen_range(1..=3);
        for _ in 0..factors {
            let vals: BTreeMap<String, Rat> = rep
                .params
                .iter()
                .map(|p| (p.clone(), rat(rng.gen_range(-2i64..=2))))
                .collect();
            let a: Vec<Vec<Rat>> = rep
                .matrix
                .iter()
                .map(|row| row.iter().map(|e| e.eval_rat(&vals).unwrap()).collect())
                .collect();
            m = crate::algebra::linalg::mat_mul(&m, &a);
            if rng.gen_bool(0.5) {
                m = crate::algebra::linalg::mat_mul(&m, &j);
            }
        }
        // aᵀ J a = J, re-verified exactly.
        let at: Vec<Vec<Rat>> = crate::algebra::linalg::mat_transpose(&m);
        let prod = crate::algebra::linalg::mat_mul(
            &crate::algebra::linalg::mat_mul(&at, &j),
            &m,
        );
        assert_eq!(prod, j, "sampled matrix is not symplectic");
        out.push(m);
    }
    out
}

/// The quotient-consistency identity: induce(ρ₅) at t15 = t25 = 0,
/// projected to the six quadric-level coordinates, equals induce(ρ̄₅).
pub fn quotient_consistency() -> bool {
    let five = induce_on_coordinates(&rho5());
    let bar = induce_on_coordinates(&rho_bar5());
    let kept = ["w12", "w13", "w14", "w23", "w24", "w34"];
    let zero_sub: BTreeMap<String, MultiPoly> = ["t15", "t25"]
        .iter()
        .map(|p| (p.to_string(), MultiPoly::zero(&five.vars)))
        .collect();
    kept.iter().all(|c| {
        let restricted = five
            .image_of(c)
            .substitute(&zero_sub, &five.vars)
            .expect("restriction");
        let projected = match restricted.project_vars(&bar.vars) {
            Ok(p) => p,
            Err(_) => return false,
        };
        projected == *bar.image_of(c)
    })
}

/// Projection compatibility: the images of the coordinates retained by a
/// projection involve only those coordinates.
pub fn projection_compatible(action: &CoordAction, kept: &[&str]) -> bool {
    kept.iter().all(|c| {
        let img = action.image_of(c);
        action
            .coords
            .iter()
            .filter(|other| !kept.contains(&other.as_str()))
            .all(|other| !img.uses_var(other))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sections::{make_grassmannian, make_x3_symbolic, standard_w, standard_z};

    #[test]
    fn representation_shapes() {
        let r6 = rho6();
        assert_eq!(r6.dim(), 5);
        // rho5 entry (1,4) is −t13: the symplectic constraint.
        let r5 = rho5();
        assert_eq!(
            r5.matrix[0][3],
            MultiPoly::parse(&r5.vars, "-t13").unwrap()
        );
        // rho_bar5 columns 3 and 4 carry (−t23, t13) and (−t13, t14).
        let rb = rho_bar5();
        assert_eq!(rb.matrix[0][3], MultiPoly::parse(&rb.vars, "-t13").unwrap());
        assert_eq!(rb.matrix[1][2], MultiPoly::parse(&rb.vars, "t13").unwrap());
    }

    #[test]
    fn induced_action_is_toric_on_projection_coordinates() {
        let a = induce_on_coordinates(&rho6());
        assert_eq!(a.image_of("w12"), &MultiPoly::parse(&a.vars, "w12").unwrap());
        assert_eq!(
            a.image_of("w13"),
            &MultiPoly::parse(&a.vars, "w13 + t13*w12").unwrap()
        );
        assert_eq!(
            a.image_of("w25"),
            &MultiPoly::parse(&a.vars, "w25 + t25*w12").unwrap()
        );
        // The σ₂,₂-projection is equivariant: the seven retained images
        // only involve the seven retained coordinates.
        assert!(projection_compatible(
            &a,
            &["w12", "w13", "w14", "w15", "w23", "w24", "w25"]
        ));
    }

    #[test]
    fn rho5_projection_compatibility() {
        let a = induce_on_coordinates(&rho5());
        assert!(projection_compatible(
            &a,
            &["w12", "w13", "w14", "w23", "w24", "w34"]
        ));
    }

    #[test]
    fn additivity_of_paper_actions() {
        for rep in [rho6(), rho5(), rho4(), rho_bar5()] {
            assert!(check_additive_rep(&rep).is_ok(), "{} not additive", rep.name);
            let induced = induce_on_coordinates(&rep);
            assert!(check_additive(&induced).is_ok());
        }
        assert!(check_additive(&trinodal_action_symbolic()).is_ok());
        assert!(check_additive(&p2_toric()).is_ok());
        assert!(check_additive(&p2_nontoric()).is_ok());
    }

    #[test]
    fn broken_action_fails_additivity() {
        let w = check_additive(&broken_additivity_action()).unwrap_err();
        assert_eq!(w.coordinate, "w13");
        assert!(w.residual.contains("t13"), "residual = {}", w.residual);
    }

    #[test]
    fn faithfulness_ranks() {
        assert!(check_faithful(&rho6()));
        assert!(check_faithful(&rho5()));
        assert!(check_faithful(&rho4()));
        assert!(check_faithful(&rho_bar5()));
        // Collapsed parameters: both live in entry (1,3).
        let bad = UnipotentRep::new(
            "collapsed",
            vec!["t13".into(), "t23".into()],
            vec![
                vec!["1", "0", "t13 + t23", "0", "0"],
                vec!["0", "1", "0", "0", "0"],
                vec!["0", "0", "1", "0", "0"],
                vec!["0", "0", "0", "1", "0"],
                vec!["0", "0", "0", "0", "1"],
            ],
        );
        assert!(!check_faithful(&bad));
    }

    #[test]
    fn invariance_of_pluecker_ideal() {
        let g = make_grassmannian();
        let a = induce_on_coordinates(&rho6());
        let report = check_invariance(&a, &g, 4).unwrap();
        assert!(report.ok, "{:?}", report.failure);
    }

    #[test]
    fn invariance_of_sections() {
        let z = standard_z();
        let az = restrict_action(&induce_on_coordinates(&rho5()), &z, "rho5|Z").unwrap();
        assert!(check_invariance(&az, &z.variety, 4).unwrap().ok);

        let w = standard_w();
        let aw = restrict_action(&induce_on_coordinates(&rho4()), &w, "rho4|W").unwrap();
        assert!(check_invariance(&aw, &w.variety, 4).unwrap().ok);

        let x3 = make_x3_symbolic();
        let at = trinodal_action_symbolic();
        assert!(check_invariance(&at, &x3.variety, 4).unwrap().ok);
    }

    #[test]
    fn single_translation_fails_invariance() {
        let g = make_grassmannian();
        let a = single_translation_action();
        let report = check_invariance(&a, &g, 2).unwrap();
        assert!(!report.ok);
        let witness = report.failure.unwrap();
        // Residual −t·w12·w24 on the first Plücker quadric.
        assert_eq!(witness.coordinate, "generator 1");
        assert_eq!(witness.residual, "-t*w12*w24");
    }

    #[test]
    fn fixed_loci() {
        let at = trinodal_action_symbolic();
        assert!(fixed_pointwise(
            &at,
            &["w12".into(), "w13".into(), "w14".into(), "w15".into()]
        ));
        assert!(fixed_pointwise(&p2_toric(), &["u2".into()]));
        assert!(!fixed_pointwise(&p2_nontoric(), &["u2".into()]));
        assert!(fixed_pointwise(&p2_nontoric(), &["u1".into(), "u2".into()]));
    }

    #[test]
    fn open_orbit_ranks() {
        let g = make_grassmannian();
        let a6 = induce_on_coordinates(&rho6());
        assert_eq!(
            orbit_rank_at(&a6, &g, &g.unit_point("w12"), "w12").unwrap(),
            6
        );

        let x3 = crate::sections::make_x3(&rat(2)).unwrap();
        let at = trinodal_action(&rat(2)).unwrap();
        assert_eq!(
            orbit_rank_at(&at, &x3.variety, &x3.variety.unit_point("w12"), "w12").unwrap(),
            3
        );
        // A point of Ξ is fixed: rank 0 (dehomogenize against w34 there).
        let mut xi = vec![Rat::zero(); 7];
        xi[4] = Rat::one(); // w34
        xi[5] = Rat::one(); // w35
        xi[6] = Rat::one(); // w45
        assert!(x3.variety.contains_rat(&xi));
        assert_eq!(orbit_rank_at(&at, &x3.variety, &xi, "w34").unwrap(), 0);
        assert!(matches!(
            orbit_rank_at(&at, &x3.variety, &xi, "w12"),
            Err(ActionError::DehomVanishes)
        ));
    }

    #[test]
    fn symplectic_identity() {
        let j = standard_sbar_matrix();
        assert!(check_symplectic(&rho_bar5(), &j));
        // Identity matrix is symplectic.
        let id = UnipotentRep::new(
            "id4",
            vec!["t".into()],
            vec![
                vec!["1", "0", "0", "0"],
                vec!["0", "1", "0", "0"],
                vec!["0", "0", "1", "0"],
                vec!["0", "0", "0", "1"],
            ],
        );
        assert!(check_symplectic(&id, &j));
        // Sign flip on the (1,4) entry breaks it.
        let flipped = UnipotentRep::new(
            "rho_bar5_flipped",
            ["t13", "t23", "t14"].map(String::from).to_vec(),
            vec![
                vec!["1", "0", "-t23", "t13"],
                vec!["0", "1", "t13", "t14"],
                vec!["0", "0", "1", "0"],
                vec!["0", "0", "0", "1"],
            ],
        );
        assert!(!check_symplectic(&flipped, &j));
    }

    #[test]
    fn quotient_matches_symplectic_action() {
        assert!(quotient_consistency());
    }

    #[test]
    fn block_stabilizers() {
        for a4 in sample_symplectic_matrices(5, 0) {
            let g = block_embed(&a4);
            assert!(verify_block_stabilizer(&g, &StabilizerStructure::ZWithSolid).unwrap());
        }
        let id = crate::algebra::linalg::identity(5);
        assert!(verify_block_stabilizer(&id, &StabilizerStructure::ZWithSolid).unwrap());
        assert!(verify_block_stabilizer(&id, &StabilizerStructure::WWithPlane).unwrap());
        // Swapping e1 and e5 moves the solid.
        let mut swap = crate::algebra::linalg::identity(5);
        swap[0][0] = Rat::zero();
        swap[4][4] = Rat::zero();
        swap[0][4] = Rat::one();
        swap[4][0] = Rat::one();
        assert!(!verify_block_stabilizer(&swap, &StabilizerStructure::ZWithSolid).unwrap());
    }
}
