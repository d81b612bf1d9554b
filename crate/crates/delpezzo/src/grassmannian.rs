//! The Grassmannian G(2,5) in Plücker coordinates: skew forms, Schubert
//! subvarieties and the rank criteria governing smoothness of linear
//! sections.
//!
//! Conventions are fixed once for the whole crate: V has basis e1..e5, the
//! ten Plücker coordinates are named w12..w45 in the order
//! (w12,w13,w14,w15,w23,w24,w25,w34,w35,w45), points of the embedding are
//! wedges u∧v of vectors of V (minor vectors), and coordinate functions
//! transform contragrediently.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::linalg::{kernel_basis, rank_gauss, rref};
use crate::algebra::poly::{MultiPoly, Vars};
use crate::algebra::rational::Rat;
use crate::algebra::upoly::UPoly;

#[derive(Debug, Error)]
pub enum GrassError {
    #[error("expected a subspace of dimension {expected}, got {got}")]
    BadDimension { expected: usize, got: usize },
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("flag violation: V1 is not contained in V4")]
    FlagViolation,
    #[error("skew forms are linearly dependent")]
    DependentForms,
    #[error("pencil contains a member of rank < 4")]
    DegeneratePencil,
    #[error("{0}")]
    Other(String),
}

/// The ten coordinate names in the fixed order.
pub const W_NAMES: [&str; 10] = [
    "w12", "w13", "w14", "w15", "w23", "w24", "w25", "w34", "w35", "w45",
];

/// Index pairs (i,j), 1-based, matching `W_NAMES`.
pub const W_PAIRS: [(usize, usize); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];

pub fn w_vars() -> Vars {
    Vars::new(W_NAMES)
}

/// A skew-symmetric 5×5 rational matrix (a 2-form on V).
#[derive(Clone, PartialEq, Debug)]
pub struct SkewForm {
    entries: Vec<Vec<Rat>>,
}

impl SkewForm {
    pub fn zero() -> Self {
        SkewForm {
            entries: vec![vec![Rat::zero(); 5]; 5],
        }
    }

    /// e_i∨ ∧ e_j∨ for 1-based i < j.
    pub fn basis_wedge(i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j && j <= 5);
        let mut s = Self::zero();
        s.entries[i - 1][j - 1] = Rat::one();
        s.entries[j - 1][i - 1] = -Rat::one();
        s
    }

    /// Builds a form from its ten upper-triangle entries in `W_PAIRS` order.
    pub fn from_upper(upper: &[Rat]) -> Self {
        assert_eq!(upper.len(), 10);
        let mut s = Self::zero();
        for (k, (i, j)) in W_PAIRS.iter().enumerate() {
            s.entries[i - 1][j - 1] = upper[k].clone();
            s.entries[j - 1][i - 1] = -upper[k].clone();
        }
        s
    }

    pub fn upper(&self) -> Vec<Rat> {
        W_PAIRS
            .iter()
            .map(|(i, j)| self.entries[i - 1][j - 1].clone())
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = Self::zero();
        for i in 0..5 {
            for j in 0..5 {
                s.entries[i][j] = &self.entries[i][j] + &o.entries[i][j];
            }
        }
        s
    }

    pub fn scale(&self, k: &Rat) -> Self {
        let mut s = self.clone();
        for row in &mut s.entries {
            for x in row {
                *x = x.clone() * k;
            }
        }
        s
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i][j]
    }

    pub fn matrix(&self) -> &Vec<Vec<Rat>> {
        &self.entries
    }

    /// s(u, v) = uᵀ M v.
    pub fn pair(&self, u: &[Rat], v: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..5 {
            for j in 0..5 {
                acc += &u[i] * &self.entries[i][j] * &v[j];
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    /// The hyperplane Σ s_ij·w_ij = 0 cut out by the form, as a linear
    /// polynomial in the w-coordinates.
    pub fn hyperplane(&self, vars: &Vars) -> MultiPoly {
        let mut acc = MultiPoly::zero(vars);
        for (k, (i, j)) in W_PAIRS.iter().enumerate() {
            let c = self.entries[i - 1][j - 1].clone();
            if !c.is_zero() {
                let v = MultiPoly::var(vars, W_NAMES[k]).unwrap();
                acc = acc.add(&v.scale(&c));
            }
        }
        acc
    }

    /// The five principal 4×4 Pfaffians (delete index k = 5,4,3,2,1): in
    /// the generic coordinates these are exactly the five Plücker quadrics.
    pub fn sub_pfaffians(&self) -> [Rat; 5] {
        let x = |i: usize, j: usize| self.entries[i - 1][j - 1].clone();
        [
            x(1, 2) * x(3, 4) - x(1, 3) * x(2, 4) + x(1, 4) * x(2, 3),
            x(1, 2) * x(3, 5) - x(1, 3) * x(2, 5) + x(1, 5) * x(2, 3),
            x(1, 2) * x(4, 5) - x(1, 4) * x(2, 5) + x(1, 5) * x(2, 4),
            x(1, 3) * x(4, 5) - x(1, 4) * x(3, 5) + x(1, 5) * x(3, 4),
            x(2, 3) * x(4, 5) - x(2, 4) * x(3, 5) + x(2, 5) * x(3, 4),
        ]
    }
}

/// The standard form s = e1∨∧e3∨ − e2∨∧e4∨ (kernel ⟨e5⟩).
pub fn standard_s() -> SkewForm {
    SkewForm::basis_wedge(1, 3).add(&SkewForm::basis_wedge(2, 4).scale(&-Rat::one()))
}

/// The companion form s' = e1∨∧e4∨ − e2∨∧e5∨ of the standard pencil.
pub fn standard_s_prime() -> SkewForm {
    SkewForm::basis_wedge(1, 4).add(&SkewForm::basis_wedge(2, 5).scale(&-Rat::one()))
}

/// A linear subspace of V = ℚ⁵, held in reduced echelon form.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace {
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn new(vectors: Vec<Vec<Rat>>) -> Result<Self, GrassError> {
        let count = vectors.len();
        for v in &vectors {
            if v.len() != 5 {
                return Err(GrassError::Other("ambient dimension must be 5".into()));
            }
        }
        let mut m = vectors;
        rref(&mut m);
        if m.len() != count {
            return Err(GrassError::DependentBasis);
        }
        Ok(Subspace { basis: m })
    }

    pub fn from_ints(vectors: &[&[i64]]) -> Self {
        Self::new(
            vectors
                .iter()
                .map(|v| v.iter().map(|&x| Rat::from_integer(x.into())).collect())
                .collect(),
        )
        .expect("independent integer vectors")
    }

    /// The span of e_i for the given 1-based indices.
    pub fn coordinate(indices: &[usize]) -> Self {
        let vecs: Vec<Vec<Rat>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rat::zero(); 5];
                v[i - 1] = Rat::one();
                v
            })
            .collect();
        Self::new(vecs).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        let mut m = self.basis.clone();
        m.push(v.to_vec());
        rank_gauss(&m) == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Span of the union.
    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut m = self.basis.clone();
        m.extend(other.basis.iter().cloned());
        rref(&mut m);
        Subspace { basis: m }
    }
}

/// The ten 2×2 minors of (u,v) in `W_PAIRS` order.
pub fn wedge(u: &[Rat], v: &[Rat]) -> Vec<Rat> {
    W_PAIRS
        .iter()
        .map(|(i, j)| &u[i - 1] * &v[j - 1] - &u[j - 1] * &v[i - 1])
        .collect()
}

/// Symbolic wedge: same minors with polynomial entries.
pub fn wedge_poly(u: &[MultiPoly], v: &[MultiPoly]) -> Vec<MultiPoly> {
    W_PAIRS
        .iter()
        .map(|(i, j)| u[i - 1].mul(&v[j - 1]).sub(&u[j - 1].mul(&v[i - 1])))
        .collect()
}

/// The five Plücker quadrics defining G(2,5) ⊂ ℙ⁹, in the fixed order.
pub struct PlueckerSystem {
    pub vars: Vars,
    pub generators: Vec<MultiPoly>,
}

pub fn pluecker_ideal() -> PlueckerSystem {
    let vars = w_vars();
    let generators = [
        "w12*w34 - w13*w24 + w14*w23",
        "w12*w35 - w13*w25 + w15*w23",
        "w12*w45 - w14*w25 + w15*w24",
        "w13*w45 - w14*w35 + w15*w34",
        "w23*w45 - w24*w35 + w25*w34",
    ]
    .iter()
    .map(|s| MultiPoly::parse(&vars, s).expect("fixed quadric"))
    .collect();
    PlueckerSystem { vars, generators }
}

/// Plücker coordinates of a 2-dimensional subspace: the minors of its
/// basis matrix. The result satisfies all five quadrics.
pub fn pluecker_point(e: &Subspace) -> Result<Vec<Rat>, GrassError> {
    if e.dim() != 2 {
        return Err(GrassError::BadDimension {
            expected: 2,
            got: e.dim(),
        });
    }
    Ok(wedge(&e.basis()[0], &e.basis()[1]))
}

/// Rank (one of 0, 2, 4) and kernel of a skew form.
pub fn skew_rank_kernel(s: &SkewForm) -> (usize, Subspace) {
    let rank = rank_gauss(s.matrix());
    debug_assert!(rank % 2 == 0);
    let kernel = kernel_basis(s.matrix());
    let mut m = kernel;
    rref(&mut m);
    (rank, Subspace { basis: m })
}

/// True iff every nonzero member λs + μs' of the pencil has rank 4,
/// decided through the five sub-Pfaffians as binary quadratic forms in
/// (λ, μ): the pencil is everywhere-rank-4 iff the forms share no
/// projective root, i.e. no common root at (1:0) and a constant gcd of the
/// dehomogenizations.
pub fn pencil_all_rank4(s: &SkewForm, s_prime: &SkewForm) -> Result<bool, GrassError> {
    let rows = vec![s.upper(), s_prime.upper()];
    if rank_gauss(&rows) != 2 {
        return Err(GrassError::DependentForms);
    }

    let a = s.sub_pfaffians();
    let c = s_prime.sub_pfaffians();
    let mixed = s.add(s_prime).sub_pfaffians();
    // Polarization: pf(λs+μs') = a λ² + b λμ + c μ² with b = pf(s+s') − a − c.
    let mut forms: Vec<UPoly<Rat>> = Vec::with_capacity(5);
    let mut all_zero = true;
    let mut coeff2_all_zero = true;
    for k in 0..5 {
        let b = &mixed[k] - &a[k] - &c[k];
        let form = UPoly::new(vec![c[k].clone(), b, a[k].clone()]);
        if !form.is_zero() {
            all_zero = false;
        }
        if !a[k].is_zero() {
            coeff2_all_zero = false;
        }
        forms.push(form);
    }
    if all_zero {
        // the whole pencil sits in the rank ≤ 2 locus
        return Ok(false);
    }
    if coeff2_all_zero {
        // common root at (λ:μ) = (1:0): the member s has rank ≤ 2
        return Ok(false);
    }
    let mut g = UPoly::<Rat>::zero();
    for f in &forms {
        g = g.gcd(f);
    }
    Ok(g.degree() == Some(0))
}

/// Kinds of linear Schubert subvarieties of G(2,5).
pub enum SchubertCell {
    /// σ₃,₀(V1): lines through the point of V1 (a solid, dimension 3).
    Solid(Subspace),
    /// σ₂,₂(V3): lines inside the plane of V3 (dimension 2).
    Plane22(Subspace),
    /// σ₃,₁(V1 ⊂ V4): lines through V1 inside V4 (dimension 2).
    Plane31(Subspace, Subspace),
}

/// Linear forms in the w-coordinates cutting the Schubert subvariety
/// inside ℙ⁹, with the expected projective dimension (3, 2, 2) verified.
pub fn schubert_equations(cell: &SchubertCell) -> Result<Vec<MultiPoly>, GrassError> {
    let (span, expected_dim) = match cell {
        SchubertCell::Solid(v1) => {
            if v1.dim() != 1 {
                return Err(GrassError::BadDimension {
                    expected: 1,
                    got: v1.dim(),
                });
            }
            let u = &v1.basis()[0];
            let vecs: Vec<Vec<Rat>> = (0..5)
                .map(|k| {
                    let mut e = vec![Rat::zero(); 5];
                    e[k] = Rat::one();
                    wedge(u, &e)
                })
                .collect();
            (vecs, 3usize)
        }
        SchubertCell::Plane22(v3) => {
            if v3.dim() != 3 {
                return Err(GrassError::BadDimension {
                    expected: 3,
                    got: v3.dim(),
                });
            }
            let b = v3.basis();
            let vecs = vec![
                wedge(&b[0], &b[1]),
                wedge(&b[0], &b[2]),
                wedge(&b[1], &b[2]),
            ];
            (vecs, 2usize)
        }
        SchubertCell::Plane31(v1, v4) => {
            if v1.dim() != 1 {
                return Err(GrassError::BadDimension {
                    expected: 1,
                    got: v1.dim(),
                });
            }
            if v4.dim() != 4 {
                return Err(GrassError::BadDimension {
                    expected: 4,
                    got: v4.dim(),
                });
            }
            if !v4.contains_subspace(v1) {
                return Err(GrassError::FlagViolation);
            }
            let u = &v1.basis()[0];
            let vecs: Vec<Vec<Rat>> = v4.basis().iter().map(|b| wedge(u, b)).collect();
            (vecs, 2usize)
        }
    };
    let span_rank = rank_gauss(&span);
    if span_rank != expected_dim + 1 {
        return Err(GrassError::Other(format!(
            "Schubert span has rank {span_rank}, expected {}",
            expected_dim + 1
        )));
    }
    let forms = kernel_basis(&span);
    let vars = w_vars();
    Ok(forms
        .into_iter()
        .map(|coeffs| {
            let terms = coeffs.iter().enumerate().filter_map(|(k, c)| {
                if c.is_zero() {
                    return None;
                }
                let mut e = vec![0u16; 10];
                e[k] = 1;
                Some((e, c.clone()))
            });
            MultiPoly::from_terms(&vars, terms)
        })
        .collect())
}

/// A plane σ₂,₂(V3) lies in the hyperplane section of a rank-4 form s iff
/// s restricts to zero on V3 × V3.
pub fn plane22_in_section(v3: &Subspace, s: &SkewForm) -> Result<bool, GrassError> {
    if v3.dim() != 3 {
        return Err(GrassError::BadDimension {
            expected: 3,
            got: v3.dim(),
        });
    }
    let b = v3.basis();
    for i in 0..3 {
        for j in i + 1..3 {
            if !s.pair(&b[i], &b[j]).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The distinguished plane of an everywhere-rank-4 pencil: the span of the
/// kernels at (1:0), (0:1) and (1:1), verified 3-dimensional.
pub fn distinguished_plane(s: &SkewForm, s_prime: &SkewForm) -> Result<Subspace, GrassError> {
    if !pencil_all_rank4(s, s_prime)? {
        return Err(GrassError::DegeneratePencil);
    }
    let members = [s.clone(), s_prime.clone(), s.add(s_prime)];
    let mut span: Option<Subspace> = None;
    for m in &members {
        let (rank, ker) = skew_rank_kernel(m);
        if rank != 4 {
            return Err(GrassError::DegeneratePencil);
        }
        span = Some(match span {
            None => ker,
            Some(s) => s.join(&ker),
        });
    }
    let span = span.unwrap();
    if span.dim() != 3 {
        return Err(GrassError::Other(format!(
            "kernel span has dimension {}, expected 3",
            span.dim()
        )));
    }
    Ok(span)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use std::collections::BTreeMap;

    fn eval_at(p: &MultiPoly, coords: &[Rat]) -> Rat {
        let mut m = BTreeMap::new();
        for (name, c) in W_NAMES.iter().zip(coords) {
            m.insert(name.to_string(), c.clone());
        }
        p.eval_rat(&m).unwrap()
    }

    #[test]
    fn quadrics_at_coordinate_points() {
        let sys = pluecker_ideal();
        assert_eq!(sys.generators.len(), 5);
        // w12 = 1, rest 0: all five vanish.
        let mut coords = vec![rat(0); 10];
        coords[0] = rat(1);
        for g in &sys.generators {
            assert!(eval_at(g, &coords).is_zero());
        }
        // w12 = w34 = 1: only the first quadric sees w12w34.
        coords[7] = rat(1);
        let vals: Vec<Rat> = sys.generators.iter().map(|g| eval_at(g, &coords)).collect();
        assert_eq!(vals[0], rat(1));
        assert!(vals[1..].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn pluecker_points_satisfy_quadrics() {
        let sys = pluecker_ideal();
        let e = Subspace::from_ints(&[&[1, 0, 1, 0, 0], &[0, 1, 0, 1, 0]]);
        let p = pluecker_point(&e).unwrap();
        // ⟨e1+e3, e2+e4⟩: w12 = 1, w14 = 1, w23 = −1, w34 = 1.
        assert_eq!(p[0], rat(1));
        assert_eq!(p[2], rat(1));
        assert_eq!(p[4], rat(-1));
        assert_eq!(p[7], rat(1));
        for g in &sys.generators {
            assert!(eval_at(g, &p).is_zero());
        }
        let e34 = Subspace::from_ints(&[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]]);
        let p34 = pluecker_point(&e34).unwrap();
        assert_eq!(p34[7], rat(1));
        assert_eq!(p34.iter().filter(|c| !c.is_zero()).count(), 1);
    }

    #[test]
    fn standard_form_rank_and_kernel() {
        let (rank, ker) = skew_rank_kernel(&standard_s());
        assert_eq!(rank, 4);
        assert_eq!(ker.dim(), 1);
        assert!(ker.contains_vector(&[rat(0), rat(0), rat(0), rat(0), rat(1)]));

        let (r0, k0) = skew_rank_kernel(&SkewForm::zero());
        assert_eq!(r0, 0);
        assert_eq!(k0.dim(), 5);

        let (r2, k2) = skew_rank_kernel(&SkewForm::basis_wedge(1, 2));
        assert_eq!(r2, 2);
        assert_eq!(k2.dim(), 3);
        assert!(k2.contains_vector(&[rat(0), rat(0), rat(1), rat(0), rat(0)]));
    }

    #[test]
    fn pencil_rank_checks() {
        assert!(pencil_all_rank4(&standard_s(), &standard_s_prime()).unwrap());
        assert!(
            !pencil_all_rank4(&SkewForm::basis_wedge(1, 2), &SkewForm::basis_wedge(1, 3)).unwrap()
        );
        // Rank-2 member at (0:1).
        assert!(!pencil_all_rank4(&standard_s(), &SkewForm::basis_wedge(1, 2)).unwrap());
        assert!(matches!(
            pencil_all_rank4(&standard_s(), &standard_s().scale(&rat(3))),
            Err(GrassError::DependentForms)
        ));
    }

    #[test]
    fn schubert_solid_and_planes() {
        let solid = schubert_equations(&SchubertCell::Solid(Subspace::coordinate(&[5]))).unwrap();
        let got: Vec<String> = solid.iter().map(|f| f.to_string()).collect();
        let want: Vec<&str> = vec!["w12", "w13", "w14", "w23", "w24", "w34"];
        assert_eq!(got, want);

        let plane =
            schubert_equations(&SchubertCell::Plane22(Subspace::coordinate(&[3, 4, 5]))).unwrap();
        let got: Vec<String> = plane.iter().map(|f| f.to_string()).collect();
        assert_eq!(got, vec!["w12", "w13", "w14", "w15", "w23", "w24", "w25"]);

        let p31 = schubert_equations(&SchubertCell::Plane31(
            Subspace::coordinate(&[5]),
            Subspace::coordinate(&[2, 3, 4, 5]),
        ))
        .unwrap();
        let got: Vec<String> = p31.iter().map(|f| f.to_string()).collect();
        assert_eq!(got, vec!["w12", "w13", "w14", "w15", "w23", "w24", "w34"]);

        assert!(matches!(
            schubert_equations(&SchubertCell::Plane31(
                Subspace::coordinate(&[1]),
                Subspace::coordinate(&[2, 3, 4, 5]),
            )),
            Err(GrassError::FlagViolation)
        ));
    }

    #[test]
    fn schubert_equations_for_non_coordinate_subspaces() {
        // Solid through the line ⟨e1 + e2⟩: six linear forms vanishing on
        // every wedge (e1+e2) ∧ v.
        let v1 = Subspace::from_ints(&[&[1, 1, 0, 0, 0]]);
        let eqs = schubert_equations(&SchubertCell::Solid(v1)).unwrap();
        assert_eq!(eqs.len(), 6);
        let u: Vec<Rat> = vec![rat(1), rat(1), rat(0), rat(0), rat(0)];
        for v in [
            vec![rat(0), rat(3), rat(-1), rat(2), rat(5)],
            vec![rat(7), rat(0), rat(2), rat(0), rat(-4)],
        ] {
            let w = wedge(&u, &v);
            let mut values = BTreeMap::new();
            for (name, c) in W_NAMES.iter().zip(&w) {
                values.insert(name.to_string(), c.clone());
            }
            for eq in &eqs {
                assert!(eq.eval_rat(&values).unwrap().is_zero());
            }
        }

        // A slanted plane V3: wedges of pairs inside it satisfy the cut.
        let v3 = Subspace::from_ints(&[&[1, 0, 1, 0, 0], &[0, 1, 0, 1, 0], &[0, 0, 0, 0, 1]]);
        let eqs = schubert_equations(&SchubertCell::Plane22(v3.clone())).unwrap();
        assert_eq!(eqs.len(), 7);
        let b = v3.basis();
        let w = wedge(&b[0], &b[2]);
        let mut values = BTreeMap::new();
        for (name, c) in W_NAMES.iter().zip(&w) {
            values.insert(name.to_string(), c.clone());
        }
        for eq in &eqs {
            assert!(eq.eval_rat(&values).unwrap().is_zero());
        }
    }

    #[test]
    fn isotropy_of_planes() {
        let v3 = Subspace::coordinate(&[3, 4, 5]);
        assert!(plane22_in_section(&v3, &standard_s()).unwrap());
        let v125 = Subspace::coordinate(&[1, 2, 5]);
        let s = SkewForm::basis_wedge(1, 2).add(&SkewForm::basis_wedge(3, 4));
        assert!(!plane22_in_section(&v125, &s).unwrap());
        let v135 = Subspace::coordinate(&[1, 3, 5]);
        assert!(!plane22_in_section(&v135, &standard_s()).unwrap());
    }

    #[test]
    fn distinguished_plane_of_standard_pencil() {
        let plane = distinguished_plane(&standard_s(), &standard_s_prime()).unwrap();
        assert_eq!(plane, Subspace::coordinate(&[3, 4, 5]));
        // Kernels of the three sample members.
        let (_, k1) = skew_rank_kernel(&standard_s());
        assert!(k1.contains_vector(&[rat(0), rat(0), rat(0), rat(0), rat(1)]));
        let (_, k2) = skew_rank_kernel(&standard_s_prime());
        assert!(k2.contains_vector(&[rat(0), rat(0), rat(1), rat(0), rat(0)]));
        let (_, k3) = skew_rank_kernel(&standard_s().add(&standard_s_prime()));
        assert!(k3.contains_vector(&[rat(0), rat(0), rat(1), rat(-1), rat(1)]));
        // Degenerate pencil is rejected.
        assert!(matches!(
            distinguished_plane(&standard_s(), &SkewForm::basis_wedge(1, 2)),
            Err(GrassError::DegeneratePencil)
        ));
    }
}
