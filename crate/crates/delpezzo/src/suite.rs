//! The named check registry behind the scenario runner: every invariant
//! the crate certifies is exposed as a check with a stable id, the module
//! and operation it belongs to, and the anchor text it verifies. The
//! built-in "paper-suite" scenario runs all of them.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::actions;
use crate::algebra::factor::factor_upoly;
use crate::algebra::linalg::{rank_cleared_int, rank_gauss};
use crate::algebra::membership::{membership_certificate, Membership};
use crate::algebra::poly::{MultiPoly, Vars};
use crate::algebra::rational::{rat, Rat};
use crate::algebra::splitting::splitting_field_upoly;
use crate::algebra::upoly::UPoly;
use crate::classifier;
use crate::grassmannian;
use crate::projections;
use crate::report::{CheckRecord, Report, Status};
use crate::sections;

/// Runtime knobs shared by all checks. Defaults follow the documented
/// caps: membership multiplier degree 4, tower degree 36.
#[derive(Clone, Debug)]
pub struct CheckCtx {
    pub seed: u64,
    pub membership_cap: u32,
    pub tower_cap: usize,
    pub samples: usize,
}

impl Default for CheckCtx {
    fn default() -> Self {
        CheckCtx {
            seed: 0,
            membership_cap: 4,
            tower_cap: 36,
            samples: 25,
        }
    }
}

pub struct Check {
    pub id: &'static str,
    pub module: &'static str,
    pub operation: &'static str,
    pub anchor: &'static str,
    pub run: fn(&CheckCtx) -> (Status, Value),
}

fn pass(detail: Value) -> (Status, Value) {
    (Status::Pass, detail)
}

fn verdict(ok: bool, detail: Value) -> (Status, Value) {
    (if ok { Status::Pass } else { Status::Fail }, detail)
}

/// Golden documents shipped with the crate.
pub mod golden {
    pub const GRASSMANNIAN: &str = include_str!("../golden/grassmannian.json");
    pub const Z_STANDARD: &str = include_str!("../golden/z_standard.json");
    pub const W_STANDARD: &str = include_str!("../golden/w_standard.json");
    pub const X3_BETA: &str = include_str!("../golden/x3_beta.json");
    pub const S_G: &str = include_str!("../golden/s_g.json");
    pub const S_Z: &str = include_str!("../golden/s_z.json");
    pub const S_W: &str = include_str!("../golden/s_w.json");
    pub const X3_SINGULAR_LOCUS: &str = include_str!("../golden/x3_singular_locus.json");
    pub const S_X3_BETA: &str = include_str!("../golden/s_x3_beta.json");
}

fn golden_variety(doc: &str) -> sections::Variety {
    let parsed: sections::VarietyDoc = serde_json::from_str(doc).expect("golden JSON");
    sections::Variety::from_doc(&parsed).expect("golden system parses")
}

/// Term-for-term equality of generator lists after canonical ordering.
fn same_system(a: &sections::Variety, b: &sections::Variety) -> bool {
    a.coords == b.coords
        && a.params == b.params
        && a.generators.len() == b.generators.len()
        && a.generators
            .iter()
            .zip(&b.generators)
            .all(|(x, y)| x == y)
}

// ---------------------------------------------------------------------
// exact_algebra checks
// ---------------------------------------------------------------------

fn random_poly(rng: &mut ChaCha8Rng, vars: &Vars, max_deg: u32, terms: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(vars);
    for _ in 0..terms {
        let mut e = vec![0u16; vars.len()];
        let mut budget = max_deg;
        for slot in e.iter_mut() {
            let take = rng.gen_range(0..=budget.min(2));
            *slot = take as u16;
            budget -= take;
        }
        let c = rat(rng.gen_range(-9i64..=9));
        if !c.is_zero() {
            p = p.add(&MultiPoly::from_terms(vars, [(e, c)]));
        }
    }
    p
}

fn check_ring_axioms(ctx: &CheckCtx) -> (Status, Value) {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let vars = Vars::new(["x1", "x2", "x3", "x4", "x5"]);
    let mut cases = 0;
    for _ in 0..20 {
        let p = random_poly(&mut rng, &vars, 3, 4);
        let q = random_poly(&mut rng, &vars, 3, 4);
        let r = random_poly(&mut rng, &vars, 3, 4);
        let assoc = p.add(&q).add(&r) == p.add(&q.add(&r));
        let distrib = p.mul(&q.add(&r)) == p.mul(&q).add(&p.mul(&r));
        let comm = p.mul(&q) == q.mul(&p);
        if !(assoc && distrib && comm) {
            return verdict(false, json!({"case": cases}));
        }
        cases += 1;
    }
    pass(json!({"sampled_triples": cases}))
}

fn check_substitute_homomorphism(ctx: &CheckCtx) -> (Status, Value) {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x5eed);
    let vars = Vars::new(["x1", "x2", "x3"]);
    for _ in 0..15 {
        let p = random_poly(&mut rng, &vars, 2, 3);
        let q = random_poly(&mut rng, &vars, 2, 3);
        let image = random_poly(&mut rng, &vars, 2, 3);
        let mut assign = BTreeMap::new();
        assign.insert("x1".to_string(), image);
        let lhs = p.mul(&q).substitute(&assign, &vars).unwrap();
        let rhs = p
            .substitute(&assign, &vars)
            .unwrap()
            .mul(&q.substitute(&assign, &vars).unwrap());
        if lhs != rhs {
            return verdict(false, json!({"p": p.to_string(), "q": q.to_string()}));
        }
    }
    pass(json!({"sampled_pairs": 15}))
}

fn check_membership_examples(ctx: &CheckCtx) -> (Status, Value) {
    let sys = grassmannian::pluecker_ideal();
    // Zero target: all-zero multipliers.
    let z = membership_certificate(&MultiPoly::zero(&sys.vars), &sys.generators, ctx.membership_cap);
    let zero_ok = matches!(&z, Membership::Certificate(hs) if hs.iter().all(|h| h.is_zero()));
    // t-scaled generator with the scalar in the coefficient.
    let scaled = sys.generators[0].scale(&crate::algebra::rational::ratio(7, 2));
    let scaled_ok = membership_certificate(&scaled, &sys.generators, 1).is_found();
    // Linear multiplier example.
    let f = MultiPoly::var(&sys.vars, "w13").unwrap().mul(&sys.generators[0]);
    let linear_ok = membership_certificate(&f, &sys.generators, 1).is_found();
    verdict(
        zero_ok && scaled_ok && linear_ok,
        json!({"zero": zero_ok, "scaled": scaled_ok, "linear": linear_ok}),
    )
}

fn check_membership_negative(_ctx: &CheckCtx) -> (Status, Value) {
    let sys = grassmannian::pluecker_ideal();
    let f = MultiPoly::parse(&sys.vars, "w12*w24").unwrap();
    let not_found = !membership_certificate(&f, &sys.generators, 2).is_found();
    verdict(
        not_found,
        json!({"target": "w12*w24", "cap": 2, "not_found": not_found}),
    )
}

fn check_rank_crosscheck(ctx: &CheckCtx) -> (Status, Value) {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0xabcd);
    for _ in 0..25 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let m: Vec<Vec<Rat>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        crate::algebra::rational::ratio(
                            rng.gen_range(-6i64..=6),
                            rng.gen_range(1i64..=4),
                        )
                    })
                    .collect()
            })
            .collect();
        if rank_gauss(&m) != rank_cleared_int(&m) {
            return verdict(false, json!({"matrix": format!("{m:?}")}));
        }
    }
    pass(json!({"sampled_matrices": 25}))
}

fn check_factor_remultiplies(_ctx: &CheckCtx) -> (Status, Value) {
    let cases: Vec<UPoly<Rat>> = vec![
        UPoly::from_i64(&[0, -1, 0, 1]),
        UPoly::from_i64(&[-2, 0, 0, 1]),
        UPoly::from_i64(&[-1, 0, 0, 1]),
        UPoly::from_i64(&[6, -5, 1]).mul(&UPoly::from_i64(&[1, 2, 1])),
        UPoly::from_i64(&[1, 0, 1]).mul(&UPoly::from_i64(&[-2, 0, 1])).mul(&UPoly::from_i64(&[1, 1, 1])),
    ];
    for f in &cases {
        let factors = match factor_upoly(f) {
            Ok(fs) => fs,
            Err(e) => return verdict(false, json!({"error": e.to_string()})),
        };
        let mut prod = UPoly::constant(f.leading().clone());
        for (g, m) in &factors {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
            // Necessary-condition spot check: degree ≥ 2 factors have no
            // rational root.
            if g.deg() >= 2 {
                let rationals = factor_upoly(g).unwrap();
                if rationals.iter().any(|(h, _)| h.deg() == 1) {
                    return verdict(false, json!({"reducible_factor": format!("{g:?}")}));
                }
            }
        }
        if prod != *f {
            return verdict(false, json!({"case": format!("{f:?}")}));
        }
    }
    pass(json!({"cases": cases.len()}))
}

fn check_splitting_examples(ctx: &CheckCtx) -> (Status, Value) {
    let cases: [(&[i64], usize); 3] = [
        (&[0, -1, 0, 1], 1),  // x³ − x: rational
        (&[-2, 0, 0, 1], 6),  // x³ − 2: full S₃
        (&[1, -3, 0, 1], 3),  // x³ − 3x + 1: cyclic (square discriminant 81)
    ];
    let mut degrees = Vec::new();
    for (coeffs, want) in cases {
        let cubic = UPoly::from_i64(coeffs);
        let (field, roots) = match splitting_field_upoly(&cubic, ctx.tower_cap) {
            Ok(x) => x,
            Err(e) => return verdict(false, json!({"error": e.to_string()})),
        };
        if field.degree() != want || roots.len() != 3 {
            return verdict(
                false,
                json!({"cubic": format!("{coeffs:?}"), "degree": field.degree()}),
            );
        }
        degrees.push(field.degree());
    }
    pass(json!({"tower_degrees": degrees}))
}

// ---------------------------------------------------------------------
// grassmannian checks
// ---------------------------------------------------------------------

fn check_pluecker_points(ctx: &CheckCtx) -> (Status, Value) {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x9155);
    let sys = grassmannian::pluecker_ideal();
    let mut tested = 0;
    while tested < 100 {
        let rows: Vec<Vec<Rat>> = (0..2)
            .map(|_| (0..5).map(|_| rat(rng.gen_range(-5i64..=5))).collect())
            .collect();
        let Ok(e) = grassmannian::Subspace::new(rows) else {
            continue;
        };
        if e.dim() != 2 {
            continue;
        }
        let p = grassmannian::pluecker_point(&e).unwrap();
        let mut values = BTreeMap::new();
        for (name, v) in grassmannian::W_NAMES.iter().zip(&p) {
            values.insert(name.to_string(), v.clone());
        }
        for g in &sys.generators {
            if !g.eval_rat(&values).unwrap().is_zero() {
                return verdict(false, json!({"subspace": format!("{e:?}")}));
            }
        }
        tested += 1;
    }
    pass(json!({"points": tested}))
}

fn check_skew_rank_kernel(ctx: &CheckCtx) -> (Status, Value) {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x5ce4);
    for _ in 0..40 {
        let upper: Vec<Rat> = (0..10).map(|_| rat(rng.gen_range(-3i64..=3))).collect();
        let s = grassmannian::SkewForm::from_upper(&upper);
        let (rank, kernel) = grassmannian::skew_rank_kernel(&s);
        if rank % 2 != 0 || rank + kernel.dim() != 5 {
            return verdict(false, json!({"rank": rank, "kernel": kernel.dim()}));
        }
        for v in kernel.basis() {
            // s·v = 0 exactly.
            for row in s.matrix() {
                let dot: Rat = row.iter().zip(v).map(|(a, b)| a * b).sum();
                if !dot.is_zero() {
                    return verdict(false, json!({"witness": format!("{v:?}")}));
                }
            }
        }
    }
    pass(json!({"sampled_forms": 40}))
}

fn check_pencil_members(_ctx: &CheckCtx) -> (Status, Value) {
    let s = grassmannian::standard_s();
    let sp = grassmannian::standard_s_prime();
    match grassmannian::pencil_all_rank4(&s, &sp) {
        Ok(true) => {}
        other => return verdict(false, json!({"pencil_all_rank4": format!("{other:?}")})),
    }
    // 20 sampled members all have rank 4.
    for k in 0..20i64 {
        let lam = rat(k % 7 - 3);
        let mu = rat((k * 5 + 1) % 9 - 4);
        if lam.is_zero() && mu.is_zero() {
            continue;
        }
        let member = s.scale(&lam).add(&sp.scale(&mu));
        if member.is_zero() {
            continue;
        }
        let (rank, _) = grassmannian::skew_rank_kernel(&member);
        if rank != 4 {
            return verdict(false, json!({"lambda": lam.to_string(), "mu": mu.to_string(), "rank": rank}));
        }
    }
    pass(json!({"sampled_members": 20}))
}

fn check_schubert_symbolic_family(_ctx: &CheckCtx) -> (Status, Value) {
    // E = ⟨b1 + a·b3, b2 + c·b3⟩ ⊂ V3 for the standard V3 = ⟨e3,e4,e5⟩:
    // the plane22 equations vanish identically in (a, c).
    let v3 = grassmannian::Subspace::coordinate(&[3, 4, 5]);
    let eqs = grassmannian::schubert_equations(&grassmannian::SchubertCell::Plane22(v3.clone()))
        .unwrap();
    let params = Vars::new(["a", "c"]);
    let pa = MultiPoly::var(&params, "a").unwrap();
    let pc = MultiPoly::var(&params, "c").unwrap();
    let b = v3.basis();
    let lift = |v: &[Rat]| -> Vec<MultiPoly> {
        v.iter().map(|x| MultiPoly::constant(&params, x.clone())).collect()
    };
    let (b1, b2, b3) = (lift(&b[0]), lift(&b[1]), lift(&b[2]));
    let u: Vec<MultiPoly> = b1.iter().zip(&b3).map(|(x, y)| x.add(&y.mul(&pa))).collect();
    let v: Vec<MultiPoly> = b2.iter().zip(&b3).map(|(x, y)| x.add(&y.mul(&pc))).collect();
    let w = grassmannian::wedge_poly(&u, &v);
    let assignment: BTreeMap<String, MultiPoly> = grassmannian::W_NAMES
        .iter()
        .zip(&w)
        .map(|(n, p)| (n.to_string(), p.clone()))
        .collect();
    for eq in &eqs {
        let val = eq.substitute(&assignment, &params).unwrap();
        if !val.is_zero() {
            return verdict(false, json!({"equation": eq.to_string()}));
        }
    }
    pass(json!({"equations": eqs.len()}))
}

fn check_distinguished_plane(_ctx: &CheckCtx) -> (Status, Value) {
    let s = grassmannian::standard_s();
    let sp = grassmannian::standard_s_prime();
    let plane = match grassmannian::distinguished_plane(&s, &sp) {
        Ok(p) => p,
        Err(e) => return verdict(false, json!({"error": e.to_string()})),
    };
    if plane != grassmannian::Subspace::coordinate(&[3, 4, 5]) {
        return verdict(false, json!({"plane": format!("{plane:?}")}));
    }
    // Kernels of 10 further pencil members stay inside the plane.
    for k in 1..=10i64 {
        let member = s.scale(&rat(k)).add(&sp.scale(&rat(k * k % 7 + 1)));
        let (rank, ker) = grassmannian::skew_rank_kernel(&member);
        if rank != 4 || !plane.contains_subspace(&ker) {
            return verdict(false, json!({"member": k, "rank": rank}));
        }
    }
    pass(json!({"extra_members": 10}))
}

// ---------------------------------------------------------------------
// sections checks
// ---------------------------------------------------------------------

fn check_golden_sections(_ctx: &CheckCtx) -> (Status, Value) {
    let pairs = [
        ("G", sections::make_grassmannian(), golden::GRASSMANNIAN),
        ("Z", sections::standard_z().variety, golden::Z_STANDARD),
        ("W", sections::standard_w().variety, golden::W_STANDARD),
        ("X3(beta)", sections::make_x3_symbolic().variety, golden::X3_BETA),
    ];
    let mut results = BTreeMap::new();
    let mut ok = true;
    for (name, constructed, doc) in pairs {
        let golden = golden_variety(doc);
        let same = same_system(&constructed, &golden);
        results.insert(name.to_string(), same);
        ok &= same;
    }
    verdict(ok, json!(results))
}

fn check_golden_images(_ctx: &CheckCtx) -> (Status, Value) {
    let plane = projections::project_from_plane();
    let trinodal = projections::trinodal_projection_symbolic();
    let locus_vars = Vars::new(["beta", "w34", "w35", "w45"]);
    let locus_golden = golden_variety(golden::X3_SINGULAR_LOCUS);
    let locus_ok = sections::x3_singular_locus_symbolic()
        .iter()
        .zip(&locus_golden.generators)
        .all(|(a, b)| {
            a.project_vars(&locus_vars).unwrap() == b.project_vars(&locus_vars).unwrap()
        });
    let pairs = [
        ("S_G", &plane.s_g, golden::S_G),
        ("S_Z", &plane.s_z, golden::S_Z),
        ("S_W", &plane.s_w, golden::S_W),
        ("S_X3", &trinodal.s, golden::S_X3_BETA),
    ];
    let mut results = BTreeMap::new();
    let mut ok = locus_ok;
    results.insert("Sing(X3(beta))".to_string(), locus_ok);
    for (name, constructed, doc) in pairs {
        let golden = golden_variety(doc);
        let same = same_system(constructed, &golden);
        results.insert(name.to_string(), same);
        ok &= same;
    }
    verdict(ok, json!(results))
}

fn check_dimension_witness(ctx: &CheckCtx) -> (Status, Value) {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0xd1);
    let mut details = BTreeMap::new();
    let g = sections::make_grassmannian();
    let ok_g = g.rank_at_rat(&g.unit_point("w12")) == g.codim();
    details.insert("G".to_string(), json!(ok_g));
    let z = sections::standard_z().variety;
    let ok_z = z.rank_at_rat(&z.unit_point("w12")) == z.codim();
    details.insert("Z".to_string(), json!(ok_z));
    let w = sections::standard_w().variety;
    let ok_w = w.rank_at_rat(&w.unit_point("w12")) == w.codim();
    details.insert("W".to_string(), json!(ok_w));
    let mut ok_x = true;
    let mut betas = Vec::new();
    for _ in 0..5 {
        let beta = crate::algebra::rational::ratio(
            rng.gen_range(1i64..=9) * if rng.gen_bool(0.5) { 1 } else { -1 },
            rng.gen_range(1i64..=4),
        );
        let x = sections::make_x3(&beta).unwrap().variety;
        ok_x &= x.rank_at_rat(&x.unit_point("w12")) == x.codim();
        betas.push(beta.to_string());
    }
    details.insert("X3(sampled betas)".to_string(), json!(betas));
    verdict(ok_g && ok_z && ok_w && ok_x, json!(details))
}

fn check_xi_containment(_ctx: &CheckCtx) -> (Status, Value) {
    // The σ₂,₂-plane substitution annihilates W and X₃(β) generators
    // identically in (w34, w35, w45, β).
    let residual_vars = Vars::new(["beta", "w34", "w35", "w45"]);
    let kill = ["w12", "w13", "w14", "w15", "w23"];
    let mut ok = true;
    for variety in [
        sections::standard_w().variety,
        sections::make_x3_symbolic().variety,
    ] {
        let assignment: BTreeMap<String, MultiPoly> = kill
            .iter()
            .filter(|c| variety.coords.contains(&c.to_string()))
            .map(|c| (c.to_string(), MultiPoly::zero(&residual_vars)))
            .collect();
        for g in &variety.generators {
            ok &= g.substitute(&assignment, &residual_vars).unwrap().is_zero();
        }
    }
    verdict(ok, json!({"identically_zero": ok}))
}

fn check_cube_beta_rational_node(_ctx: &CheckCtx) -> (Status, Value) {
    // β = b³: the point (w34,w35,w45) = (b, b², 1) is a ℚ-rational
    // singular point.
    let mut ok = true;
    let mut details = Vec::new();
    for b in [rat(2), rat(-1), crate::algebra::rational::ratio(1, 2)] {
        let beta = &b * &b * &b;
        let x3 = sections::make_x3(&beta).unwrap().variety;
        let point = vec![
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            b.clone(),
            &b * &b,
            Rat::one(),
        ];
        let on = x3.contains_rat(&point);
        let rank = x3.rank_at_rat(&point);
        ok &= on && rank < x3.codim();
        details.push(json!({"b": b.to_string(), "on_variety": on, "rank": rank}));
    }
    verdict(ok, json!(details))
}

fn check_smoothness_crosscheck(ctx: &CheckCtx) -> (Status, Value) {
    let z = sections::smoothness_crosscheck(
        &sections::SectionKind::Z(grassmannian::standard_s()),
        ctx.samples,
    );
    let w = sections::smoothness_crosscheck(
        &sections::SectionKind::W(grassmannian::standard_s(), grassmannian::standard_s_prime()),
        ctx.samples,
    );
    let degenerate = sections::degenerate_section_witness();
    match (z, w, degenerate) {
        (Ok(z), Ok(w), Ok(d)) => verdict(
            z.pass && w.pass && d.pass,
            json!({
                "z": z.pass,
                "w": w.pass,
                "degenerate_rank": d.degenerate_witness.map(|x| x.1),
            }),
        ),
        other => verdict(false, json!({"error": format!("{other:?}")})),
    }
}

fn check_singular_scheme_suite(_ctx: &CheckCtx) -> (Status, Value) {
    let mut ok = true;
    let mut rows = Vec::new();
    for beta in [rat(1), rat(2), rat(3), rat(8), rat(-1)] {
        match sections::verify_singular_scheme_x3(&beta) {
            Ok(report) => {
                ok &= report.pass;
                rows.push(json!({
                    "beta": report.beta,
                    "tower_degree": report.tower_degree,
                    "rational_singular_points": report.rational_singular_points,
                    "beta_is_cube": report.beta_is_cube,
                    "control_rank": report.control_point_rank,
                    "pass": report.pass,
                }));
            }
            Err(e) => {
                ok = false;
                rows.push(json!({"beta": beta.to_string(), "error": e.to_string()}));
            }
        }
    }
    verdict(ok, json!(rows))
}

// ---------------------------------------------------------------------
// actions checks
// ---------------------------------------------------------------------

fn check_additivity_all(_ctx: &CheckCtx) -> (Status, Value) {
    let mut results = BTreeMap::new();
    let mut ok = true;
    for rep in [
        actions::rho6(),
        actions::rho5(),
        actions::rho4(),
        actions::rho_bar5(),
    ] {
        let good = actions::check_additive_rep(&rep).is_ok()
            && actions::check_additive(&actions::induce_on_coordinates(&rep)).is_ok();
        results.insert(rep.name.clone(), good);
        ok &= good;
    }
    for action in [
        actions::trinodal_action_symbolic(),
        actions::p2_toric(),
        actions::p2_nontoric(),
    ] {
        let good = actions::check_additive(&action).is_ok();
        results.insert(action.name.clone(), good);
        ok &= good;
    }
    verdict(ok, json!(results))
}

fn check_additivity_negative(_ctx: &CheckCtx) -> (Status, Value) {
    match actions::check_additive(&actions::broken_additivity_action()) {
        Err(w) => verdict(
            w.coordinate == "w13" && !w.residual.is_empty(),
            json!({"coordinate": w.coordinate, "residual": w.residual}),
        ),
        Ok(()) => verdict(false, json!({"error": "broken action passed additivity"})),
    }
}

fn check_faithfulness(_ctx: &CheckCtx) -> (Status, Value) {
    let mut results = BTreeMap::new();
    let mut ok = true;
    for rep in [
        actions::rho6(),
        actions::rho5(),
        actions::rho4(),
        actions::rho_bar5(),
    ] {
        let good = actions::check_faithful(&rep);
        results.insert(rep.name.clone(), good);
        ok &= good;
    }
    let collapsed = actions::UnipotentRep::new(
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
    let control = !actions::check_faithful(&collapsed);
    results.insert("collapsed_control_rejected".into(), control);
    ok &= control;
    verdict(ok, json!(results))
}

fn check_invariance_all(ctx: &CheckCtx) -> (Status, Value) {
    let mut results = BTreeMap::new();
    let mut ok = true;

    let g = sections::make_grassmannian();
    let r = actions::check_invariance(
        &actions::induce_on_coordinates(&actions::rho6()),
        &g,
        ctx.membership_cap,
    );
    let good = matches!(&r, Ok(rep) if rep.ok);
    results.insert("rho6_on_G".to_string(), good);
    ok &= good;

    let z = sections::standard_z();
    let az = actions::restrict_action(&actions::induce_on_coordinates(&actions::rho5()), &z, "rho5|Z");
    let good = matches!(
        az.and_then(|a| actions::check_invariance(&a, &z.variety, ctx.membership_cap)),
        Ok(rep) if rep.ok
    );
    results.insert("rho5_on_Z".to_string(), good);
    ok &= good;

    let w = sections::standard_w();
    let aw = actions::restrict_action(&actions::induce_on_coordinates(&actions::rho4()), &w, "rho4|W");
    let good = matches!(
        aw.and_then(|a| actions::check_invariance(&a, &w.variety, ctx.membership_cap)),
        Ok(rep) if rep.ok
    );
    results.insert("rho4_on_W".to_string(), good);
    ok &= good;

    let x3 = sections::make_x3_symbolic();
    let good = matches!(
        actions::check_invariance(&actions::trinodal_action_symbolic(), &x3.variety, ctx.membership_cap),
        Ok(rep) if rep.ok
    );
    results.insert("trinodal_on_X3_symbolic_beta".to_string(), good);
    ok &= good;

    verdict(ok, json!(results))
}

fn check_invariance_negative(_ctx: &CheckCtx) -> (Status, Value) {
    let g = sections::make_grassmannian();
    match actions::check_invariance(&actions::single_translation_action(), &g, 2) {
        Ok(report) if !report.ok => {
            let witness = report.failure.unwrap();
            verdict(
                witness.residual == "-t*w12*w24",
                json!({"coordinate": witness.coordinate, "residual": witness.residual}),
            )
        }
        other => verdict(false, json!({"unexpected": format!("{other:?}")})),
    }
}

fn check_fixed_loci(_ctx: &CheckCtx) -> (Status, Value) {
    let trinodal = actions::trinodal_action_symbolic();
    let xi: Vec<String> = ["w12", "w13", "w14", "w15"].map(String::from).to_vec();
    let a = actions::fixed_pointwise(&trinodal, &xi);
    let b = actions::fixed_pointwise(&actions::p2_toric(), &["u2".into()]);
    let c = !actions::fixed_pointwise(&actions::p2_nontoric(), &["u2".into()]);
    let d = actions::fixed_pointwise(&actions::p2_nontoric(), &["u1".into(), "u2".into()]);
    verdict(
        a && b && c && d,
        json!({
            "trinodal_fixes_Xi": a,
            "p2_toric_fixes_u2_line": b,
            "p2_nontoric_moves_u2_line": c,
            "p2_nontoric_fixes_u1_u2_locus": d,
        }),
    )
}

fn check_open_orbit_ranks(ctx: &CheckCtx) -> (Status, Value) {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x0b17);
    let mut results = BTreeMap::new();
    let mut ok = true;

    let g = sections::make_grassmannian();
    let r6 = actions::orbit_rank_at(
        &actions::induce_on_coordinates(&actions::rho6()),
        &g,
        &g.unit_point("w12"),
        "w12",
    );
    results.insert("G".to_string(), json!(r6.as_ref().ok()));
    ok &= matches!(r6, Ok(6));

    let z = sections::standard_z();
    let az = actions::restrict_action(&actions::induce_on_coordinates(&actions::rho5()), &z, "rho5|Z")
        .unwrap();
    let r5 = actions::orbit_rank_at(&az, &z.variety, &z.variety.unit_point("w12"), "w12");
    results.insert("Z".to_string(), json!(r5.as_ref().ok()));
    ok &= matches!(r5, Ok(5));

    let w = sections::standard_w();
    let aw = actions::restrict_action(&actions::induce_on_coordinates(&actions::rho4()), &w, "rho4|W")
        .unwrap();
    let r4 = actions::orbit_rank_at(&aw, &w.variety, &w.variety.unit_point("w12"), "w12");
    results.insert("W".to_string(), json!(r4.as_ref().ok()));
    ok &= matches!(r4, Ok(4));

    let mut x3_ranks = Vec::new();
    for _ in 0..5 {
        let beta = rat(rng.gen_range(1i64..=20) * if rng.gen_bool(0.5) { 1 } else { -1 });
        let x3 = sections::make_x3(&beta).unwrap();
        let at = actions::trinodal_action(&beta).unwrap();
        let r3 = actions::orbit_rank_at(&at, &x3.variety, &x3.variety.unit_point("w12"), "w12");
        ok &= matches!(r3, Ok(3));
        x3_ranks.push(json!({"beta": beta.to_string(), "rank": r3.as_ref().ok()}));
    }
    results.insert("X3(sampled betas)".to_string(), json!(x3_ranks));

    // ℙ² actions on their own ambient plane (every point is on it). The
    // projection-distinguished coordinate there is u2: both explicit
    // formulas fix u2 and translate against it.
    let p2 = sections::Variety::new(
        "P2",
        ["u0", "u1", "u2"].map(String::from).to_vec(),
        vec![],
        vec![],
        2,
    );
    let pt = p2.unit_point("u2");
    let rt = actions::orbit_rank_at(&actions::p2_toric(), &p2, &pt, "u2");
    results.insert("P2_toric".to_string(), json!(rt.as_ref().ok()));
    ok &= matches!(rt, Ok(2));
    let rn = actions::orbit_rank_at(&actions::p2_nontoric(), &p2, &pt, "u2");
    results.insert("P2_nontoric".to_string(), json!(rn.as_ref().ok()));
    ok &= matches!(rn, Ok(2));

    // Fixed Ξ point has orbit rank 0.
    let x3 = sections::make_x3(&rat(2)).unwrap();
    let at = actions::trinodal_action(&rat(2)).unwrap();
    let mut xi = vec![Rat::zero(); 7];
    xi[4] = Rat::one();
    xi[5] = Rat::one();
    xi[6] = Rat::one();
    let r0 = actions::orbit_rank_at(&at, &x3.variety, &xi, "w34");
    results.insert("Xi_point".to_string(), json!(r0.as_ref().ok()));
    ok &= matches!(r0, Ok(0));

    verdict(ok, json!(results))
}

fn check_symplectic(_ctx: &CheckCtx) -> (Status, Value) {
    let j = actions::standard_sbar_matrix();
    let good = actions::check_symplectic(&actions::rho_bar5(), &j);
    let flipped = actions::UnipotentRep::new(
        "rho_bar5_flipped",
        ["t13", "t23", "t14"].map(String::from).to_vec(),
        vec![
            vec!["1", "0", "-t23", "t13"],
            vec!["0", "1", "t13", "t14"],
            vec!["0", "0", "1", "0"],
            vec!["0", "0", "0", "1"],
        ],
    );
    let control = !actions::check_symplectic(&flipped, &j);
    verdict(
        good && control,
        json!({"rho_bar5": good, "sign_flip_rejected": control}),
    )
}

fn check_quotient_consistency(_ctx: &CheckCtx) -> (Status, Value) {
    let ok = actions::quotient_consistency();
    verdict(ok, json!({"exact_equality": ok}))
}

fn check_projection_compatibility(_ctx: &CheckCtx) -> (Status, Value) {
    let a6 = actions::induce_on_coordinates(&actions::rho6());
    let p22 = actions::projection_compatible(
        &a6,
        &["w12", "w13", "w14", "w15", "w23", "w24", "w25"],
    );
    let a5 = actions::induce_on_coordinates(&actions::rho5());
    let p30 = actions::projection_compatible(&a5, &["w12", "w13", "w14", "w23", "w24", "w34"]);
    verdict(p22 && p30, json!({"sigma22": p22, "sigma30": p30}))
}

fn check_block_stabilizer(ctx: &CheckCtx) -> (Status, Value) {
    let mut ok = true;
    for a4 in actions::sample_symplectic_matrices(5, ctx.seed) {
        let g = actions::block_embed(&a4);
        ok &= matches!(
            actions::verify_block_stabilizer(&g, &actions::StabilizerStructure::ZWithSolid),
            Ok(true)
        );
    }
    let id = crate::algebra::linalg::identity(5);
    ok &= matches!(
        actions::verify_block_stabilizer(&id, &actions::StabilizerStructure::WWithPlane),
        Ok(true)
    );
    let mut swap = crate::algebra::linalg::identity(5);
    swap[0][0] = Rat::zero();
    swap[4][4] = Rat::zero();
    swap[0][4] = Rat::one();
    swap[4][0] = Rat::one();
    let moved_solid = matches!(
        actions::verify_block_stabilizer(&swap, &actions::StabilizerStructure::ZWithSolid),
        Ok(false)
    );
    ok &= moved_solid;
    verdict(ok, json!({"swap_control_rejected": moved_solid}))
}

// ---------------------------------------------------------------------
// projections checks
// ---------------------------------------------------------------------

fn check_solid_projection(_ctx: &CheckCtx) -> (Status, Value) {
    match projections::verify_solid_projection() {
        Ok(reports) => {
            let ok = reports
                .iter()
                .all(|r| r.symbolic_containment && r.fiber_collapses);
            verdict(ok, serde_json::to_value(&reports).unwrap_or(Value::Null))
        }
        Err(e) => verdict(false, json!({"error": e.to_string()})),
    }
}

fn check_plane_images(_ctx: &CheckCtx) -> (Status, Value) {
    let reports = projections::verify_plane_images();
    let ok = reports.iter().all(|r| r.pass);
    verdict(ok, serde_json::to_value(&reports).unwrap_or(Value::Null))
}

fn check_quadric_dimensions(_ctx: &CheckCtx) -> (Status, Value) {
    let dims: Vec<usize> = projections::link_level_subschemes()
        .iter()
        .map(|s| projections::quadric_system_through(s).0)
        .collect();
    verdict(dims == vec![10, 9, 8, 7], json!({"dimensions": dims}))
}

fn check_inverse_certificates(_ctx: &CheckCtx) -> (Status, Value) {
    let levels = projections::link_level_subschemes();
    let mut rows = Vec::new();
    let mut ok = true;

    let x3 = sections::make_x3_symbolic().variety;
    let tp = projections::trinodal_projection_symbolic();
    match projections::verify_inverse(&x3, &tp.map, &tp.s) {
        Ok(cert) => {
            ok &= cert.pass;
            rows.push(json!({"level": "X3", "lambda": cert.lambda, "pass": cert.pass}));
        }
        Err(e) => {
            ok = false;
            rows.push(json!({"level": "X3", "error": e.to_string()}));
        }
    }

    let specs: [(&str, sections::Variety, Vec<&str>, usize); 3] = [
        (
            "W",
            sections::standard_w().variety,
            vec!["w12", "w13", "w14", "w15", "w23"],
            2,
        ),
        (
            "Z",
            sections::standard_z().variety,
            vec!["w12", "w13", "w14", "w15", "w23", "w25"],
            1,
        ),
        (
            "G",
            sections::make_grassmannian(),
            vec!["w12", "w13", "w14", "w15", "w23", "w24", "w25"],
            0,
        ),
    ];
    for (name, variety, kept, level_idx) in specs {
        let pi = projections::RationalMap::coordinate_projection(
            &format!("pi_plane|{name}"),
            &variety,
            &kept,
        );
        match projections::verify_inverse(&variety, &pi, &levels[level_idx]) {
            Ok(cert) => {
                ok &= cert.pass;
                rows.push(json!({"level": name, "lambda": cert.lambda, "pass": cert.pass}));
            }
            Err(e) => {
                ok = false;
                rows.push(json!({"level": name, "error": e.to_string()}));
            }
        }
    }
    verdict(ok, json!(rows))
}

fn check_equivariance_pairs(_ctx: &CheckCtx) -> (Status, Value) {
    let mut results = BTreeMap::new();
    let mut ok = true;

    let g = sections::make_grassmannian();
    let pi_plane = projections::RationalMap::coordinate_projection(
        "pi_plane",
        &g,
        &["w12", "w13", "w14", "w15", "w23", "w24", "w25"],
    );
    let r = projections::check_equivariance(
        &pi_plane,
        &actions::induce_on_coordinates(&actions::rho6()),
        &actions::p6_toric(),
    );
    results.insert("sigma22_rho6_toric".to_string(), r.is_ok());
    ok &= r.is_ok();

    let pi_solid = projections::RationalMap::coordinate_projection(
        "pi_solid",
        &g,
        &["w12", "w13", "w14", "w23", "w24", "w34"],
    );
    let r = projections::check_equivariance(
        &pi_solid,
        &actions::induce_on_coordinates(&actions::rho5()).with_params_zeroed(&["t15", "t25"]),
        &actions::induce_on_coordinates(&actions::rho_bar5()),
    );
    results.insert("sigma30_rho5_rhobar5".to_string(), r.is_ok());
    ok &= r.is_ok();

    let x3 = sections::make_x3_symbolic().variety;
    let pi3 = projections::RationalMap::coordinate_projection(
        "pi_trinodal",
        &x3,
        &["w12", "w13", "w14", "w15"],
    );
    let r = projections::check_equivariance(
        &pi3,
        &actions::trinodal_action_symbolic(),
        &actions::p3_toric(),
    );
    results.insert("trinodal_toric".to_string(), r.is_ok());
    ok &= r.is_ok();

    verdict(ok, json!(results))
}

fn check_trinodal_points(_ctx: &CheckCtx) -> (Status, Value) {
    let mut ok = true;
    let mut rows = Vec::new();
    for beta in [rat(1), rat(2), rat(3), rat(8), rat(-1)] {
        match projections::verify_trinodal_points(&beta) {
            Ok(r) => {
                ok &= r.pass;
                rows.push(json!({
                    "beta": r.beta,
                    "tower_degree": r.tower_degree,
                    "points": r.points_found,
                    "pass": r.pass,
                }));
            }
            Err(e) => {
                ok = false;
                rows.push(json!({"beta": beta.to_string(), "error": e.to_string()}));
            }
        }
    }
    verdict(ok, json!(rows))
}

// ---------------------------------------------------------------------
// classifier checks
// ---------------------------------------------------------------------

fn check_classify_2_4(_ctx: &CheckCtx) -> (Status, Value) {
    match classifier::classify_x3(&rat(2), &rat(4)) {
        Ok(classifier::Equivalence::Isomorphic(cert)) => {
            let f = classifier::cubic_from_beta(&rat(2)).unwrap();
            let g = classifier::cubic_from_beta(&rat(4)).unwrap();
            let verified = cert.verify(&f, &g);
            verdict(verified, json!({"matrix": cert.matrix, "scale": cert.scale}))
        }
        other => verdict(false, json!({"unexpected": format!("{other:?}")})),
    }
}

fn check_classify_2_3(_ctx: &CheckCtx) -> (Status, Value) {
    match classifier::classify_x3(&rat(2), &rat(3)) {
        Ok(classifier::Equivalence::Inequivalent(reason)) => {
            pass(serde_json::to_value(&reason).unwrap_or(Value::Null))
        }
        other => verdict(false, json!({"unexpected": format!("{other:?}")})),
    }
}

fn check_classifier_relations(_ctx: &CheckCtx) -> (Status, Value) {
    let corpus = classifier::corpus();
    let mut ok = true;
    // Reflexivity.
    for f in &corpus {
        match classifier::pgl2_equivalent(f, f) {
            Ok(classifier::Equivalence::Isomorphic(cert)) => ok &= cert.verify(f, f),
            _ => ok = false,
        }
    }
    // Symmetry and compositional transitivity on certified pairs.
    let mut certs: BTreeMap<(usize, usize), classifier::MoebiusCert> = BTreeMap::new();
    for i in 0..corpus.len() {
        for j in 0..corpus.len() {
            if i == j {
                continue;
            }
            if let Ok(classifier::Equivalence::Isomorphic(c)) =
                classifier::pgl2_equivalent(&corpus[i], &corpus[j])
            {
                ok &= c.verify(&corpus[i], &corpus[j]);
                certs.insert((i, j), c);
            }
        }
    }
    let mut symmetric = true;
    for (i, j) in certs.keys() {
        symmetric &= certs.contains_key(&(*j, *i));
    }
    ok &= symmetric;
    let mut transitive_composites = 0usize;
    for ((i, j), c1) in &certs {
        for ((j2, k), c2) in &certs {
            if j == j2 && i != k {
                let composed = c1.compose(c2);
                ok &= composed.verify(&corpus[*i], &corpus[*k]);
                transitive_composites += 1;
            }
        }
    }
    verdict(
        ok,
        json!({
            "corpus": corpus.len(),
            "certified_pairs": certs.len(),
            "symmetric": symmetric,
            "composites_verified": transitive_composites,
        }),
    )
}

fn check_twist_invariance(ctx: &CheckCtx) -> (Status, Value) {
    let corpus = classifier::corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x7715);
    let mut ok = true;
    let mut twists = 0usize;
    while twists < 20 {
        let m = [
            [rat(rng.gen_range(-3i64..=3)), rat(rng.gen_range(-3i64..=3))],
            [rat(rng.gen_range(-3i64..=3)), rat(rng.gen_range(-3i64..=3))],
        ];
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.is_zero() {
            continue;
        }
        twists += 1;
        for f in &corpus {
            let twisted = classifier::BinaryCubic::new(f.substitute_matrix(&m)).unwrap();
            match classifier::pgl2_equivalent(f, &twisted) {
                Ok(classifier::Equivalence::Isomorphic(cert)) => {
                    ok &= cert.verify(f, &twisted);
                }
                _ => ok = false,
            }
        }
    }
    verdict(ok, json!({"twists": twists, "corpus": corpus.len()}))
}

fn check_invariant_soundness(_ctx: &CheckCtx) -> (Status, Value) {
    let corpus = classifier::corpus();
    let mut ok = true;
    let mut certified = 0usize;
    for i in 0..corpus.len() {
        for j in (i + 1)..corpus.len() {
            if let Ok(classifier::Equivalence::Isomorphic(_)) =
                classifier::pgl2_equivalent(&corpus[i], &corpus[j])
            {
                certified += 1;
                let a = classifier::invariants(&corpus[i]).unwrap();
                let b = classifier::invariants(&corpus[j]).unwrap();
                ok &= a.splitting_type == b.splitting_type
                    && a.discriminant_class == b.discriminant_class;
            }
        }
    }
    verdict(ok, json!({"certified_pairs": certified}))
}

fn check_oracle_crosscheck(_ctx: &CheckCtx) -> (Status, Value) {
    let corpus = classifier::corpus();
    let mut ok = true;
    let mut witnesses = 0usize;
    for i in 0..corpus.len() {
        for j in (i + 1)..corpus.len() {
            if let Some(cert) = classifier::brute_force_equivalent(&corpus[i], &corpus[j], 5) {
                witnesses += 1;
                ok &= cert.verify(&corpus[i], &corpus[j]);
                // The decision procedure must agree with every witness the
                // search finds.
                ok &= matches!(
                    classifier::pgl2_equivalent(&corpus[i], &corpus[j]),
                    Ok(classifier::Equivalence::Isomorphic(_))
                );
            }
        }
    }
    verdict(ok, json!({"oracle_witnesses": witnesses}))
}

// ---------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------

pub fn all_checks() -> Vec<Check> {
    vec![
        Check {
            id: "exact_algebra/ring_axioms",
            module: "exact_algebra",
            operation: "MultiPoly arithmetic",
            anchor: "field k of characteristic zero",
            run: check_ring_axioms,
        },
        Check {
            id: "exact_algebra/substitute_homomorphism",
            module: "exact_algebra",
            operation: "poly_substitute",
            anchor: "w_{ij} |-> w_{ij} + t_{ij} w_{12}",
            run: check_substitute_homomorphism,
        },
        Check {
            id: "exact_algebra/membership_examples",
            module: "exact_algebra",
            operation: "membership_certificate",
            anchor: "preserves the variety (as ideal membership)",
            run: check_membership_examples,
        },
        Check {
            id: "exact_algebra/membership_negative_control",
            module: "exact_algebra",
            operation: "membership_certificate",
            anchor: "degree-2 slice of the Pluecker ideal",
            run: check_membership_negative,
        },
        Check {
            id: "exact_algebra/rank_fraction_free_crosscheck",
            module: "exact_algebra",
            operation: "rank_at",
            anchor: "exact rank over the point's number field",
            run: check_rank_crosscheck,
        },
        Check {
            id: "exact_algebra/factor_remultiplies",
            module: "exact_algebra",
            operation: "factor_rational",
            anchor: "squarefree decomposition, Hensel lifting, recombination",
            run: check_factor_remultiplies,
        },
        Check {
            id: "exact_algebra/splitting_examples",
            module: "exact_algebra",
            operation: "splitting_field",
            anchor: "a third root of beta and a primitive third root of unity",
            run: check_splitting_examples,
        },
        Check {
            id: "grassmannian/pluecker_points_on_quadrics",
            module: "grassmannian",
            operation: "pluecker_point",
            anchor: "endowed with the Pluecker coordinates",
            run: check_pluecker_points,
        },
        Check {
            id: "grassmannian/skew_rank_kernel",
            module: "grassmannian",
            operation: "skew_rank_kernel",
            anchor: "Z is smooth if and only if s~ has rank 4",
            run: check_skew_rank_kernel,
        },
        Check {
            id: "grassmannian/pencil_rank4_members",
            module: "grassmannian",
            operation: "pencil_all_rank4",
            anchor: "whose non-zero elements all have rank 4",
            run: check_pencil_members,
        },
        Check {
            id: "grassmannian/schubert_plane22_symbolic_family",
            module: "grassmannian",
            operation: "schubert_equations",
            anchor: "given respectively as the intersections",
            run: check_schubert_symbolic_family,
        },
        Check {
            id: "grassmannian/distinguished_plane_kernels",
            module: "grassmannian",
            operation: "distinguished_plane",
            anchor: "the linear span of the kernels of the linear maps s~",
            run: check_distinguished_plane,
        },
        Check {
            id: "sections/golden_equations",
            module: "sections",
            operation: "make_grassmannian/make_Z/make_W/make_X3",
            anchor: "defined by the equations",
            run: check_golden_sections,
        },
        Check {
            id: "sections/golden_images_and_singular_locus",
            module: "sections",
            operation: "image systems and Sing(X3(beta))",
            anchor: "Its singular locus Sing(X_3(beta)) is the closed sub-scheme",
            run: check_golden_images,
        },
        Check {
            id: "sections/dimension_witness",
            module: "sections",
            operation: "rank_at",
            anchor: "smooth at E if and only if (Jacobian rank = codimension)",
            run: check_dimension_witness,
        },
        Check {
            id: "sections/xi_containment",
            module: "sections",
            operation: "make_W/make_X3",
            anchor: "is a trinodal quintic del Pezzo threefold containing Xi",
            run: check_xi_containment,
        },
        Check {
            id: "sections/cube_beta_rational_node",
            module: "sections",
            operation: "verify_singular_scheme_X3",
            anchor: "according to whether beta is cube in k*",
            run: check_cube_beta_rational_node,
        },
        Check {
            id: "sections/smoothness_crosscheck",
            module: "sections",
            operation: "smoothness_crosscheck",
            anchor: "smooth if and only if the line",
            run: check_smoothness_crosscheck,
        },
        Check {
            id: "sections/singular_scheme_suite",
            module: "sections",
            operation: "verify_singular_scheme_X3",
            anchor: "[lambda eps^m : (lambda eps^m)^2 : 1]",
            run: check_singular_scheme_suite,
        },
        Check {
            id: "actions/additivity_all",
            module: "actions",
            operation: "check_additive",
            anchor: "abelian unipotent algebraic k-group",
            run: check_additivity_all,
        },
        Check {
            id: "actions/additivity_negative_control",
            module: "actions",
            operation: "check_additive",
            anchor: "t^2 terms violate additivity",
            run: check_additivity_negative,
        },
        Check {
            id: "actions/faithfulness",
            module: "actions",
            operation: "check_faithful",
            anchor: "faithful actions with a dense orbit",
            run: check_faithfulness,
        },
        Check {
            id: "actions/invariance_all",
            module: "actions",
            operation: "check_invariance",
            anchor: "admits a vector group structure",
            run: check_invariance_all,
        },
        Check {
            id: "actions/invariance_negative_control",
            module: "actions",
            operation: "check_invariance",
            anchor: "residual -t w12 w24 outside the degree-2 slice",
            run: check_invariance_negative,
        },
        Check {
            id: "actions/fixed_loci",
            module: "actions",
            operation: "fixed_pointwise",
            anchor: "and whose restriction to Xi is trivial",
            run: check_fixed_loci,
        },
        Check {
            id: "actions/open_orbit_ranks",
            module: "actions",
            operation: "orbit_rank_at",
            anchor: "a Zariski dense open orbit U_X",
            run: check_open_orbit_ranks,
        },
        Check {
            id: "actions/symplectic_identity",
            module: "actions",
            operation: "check_symplectic",
            anchor: "rho_bar5 : ... -> Sp4(Vbar, sbar)",
            run: check_symplectic,
        },
        Check {
            id: "actions/quotient_consistency",
            module: "actions",
            operation: "induce_on_coordinates",
            anchor: "the induced action of the vector group",
            run: check_quotient_consistency,
        },
        Check {
            id: "actions/projection_compatibility",
            module: "actions",
            operation: "induce_on_coordinates",
            anchor: "this action lifts through the birational projection",
            run: check_projection_compatibility,
        },
        Check {
            id: "actions/block_stabilizer",
            module: "actions",
            operation: "verify_block_stabilizer",
            anchor: "consisting of block-matrices of the form",
            run: check_block_stabilizer,
        },
        Check {
            id: "projections/solid_images_symbolic",
            module: "projections",
            operation: "project_from_solid",
            anchor: "is the smooth quadric fourfold",
            run: check_solid_projection,
        },
        Check {
            id: "projections/plane_images_double_entry",
            module: "projections",
            operation: "project_from_plane",
            anchor: "the smooth threefold S_G, the smooth rational cubic",
            run: check_plane_images,
        },
        Check {
            id: "projections/quadric_system_dimensions",
            module: "projections",
            operation: "quadric_system_through",
            anchor: "complete linear system of quadrics containing S",
            run: check_quadric_dimensions,
        },
        Check {
            id: "projections/inverse_certificates",
            module: "projections",
            operation: "verify_inverse",
            anchor: "The birational inverse Phi_i of pi_Xi,i",
            run: check_inverse_certificates,
        },
        Check {
            id: "projections/equivariance_pairs",
            module: "projections",
            operation: "check_equivariance",
            anchor: "is then U-equivariant",
            run: check_equivariance_pairs,
        },
        Check {
            id: "projections/trinodal_length3_points",
            module: "projections",
            operation: "trinodal_projection",
            anchor: "blow-up of a smooth 0-dimensional sub-scheme of length 3",
            run: check_trinodal_points,
        },
        Check {
            id: "classifier/classify_beta_2_4",
            module: "classifier",
            operation: "classify_X3",
            anchor: "in one-to-one correspondence with PGL2(k)-orbits",
            run: check_classify_2_4,
        },
        Check {
            id: "classifier/classify_beta_2_3",
            module: "classifier",
            operation: "classify_X3",
            anchor: "in one-to-one correspondence with PGL2(k)-orbits",
            run: check_classify_2_3,
        },
        Check {
            id: "classifier/reflexive_symmetric_transitive",
            module: "classifier",
            operation: "pgl2_equivalent",
            anchor: "PGL2(k)-orbits of smooth 0-dimensional sub-schemes",
            run: check_classifier_relations,
        },
        Check {
            id: "classifier/twist_invariance",
            module: "classifier",
            operation: "pgl2_equivalent",
            anchor: "PGL2(k)-orbits of smooth 0-dimensional sub-schemes",
            run: check_twist_invariance,
        },
        Check {
            id: "classifier/invariant_soundness",
            module: "classifier",
            operation: "invariants",
            anchor: "according to whether beta is cube in k*",
            run: check_invariant_soundness,
        },
        Check {
            id: "classifier/oracle_crosscheck",
            module: "classifier",
            operation: "pgl2_equivalent",
            anchor: "the search can only confirm, never refute",
            run: check_oracle_crosscheck,
        },
    ]
}

/// Runs the named checks (all of them for an empty filter) and assembles a
/// deterministic report.
pub fn run_suite(scenario_name: &str, ctx: &CheckCtx, filter: Option<&str>) -> Report {
    let mut records = Vec::new();
    for check in all_checks() {
        if let Some(f) = filter {
            if f != "all" && !check.id.starts_with(f) {
                continue;
            }
        }
        let start = std::time::Instant::now();
        let (status, detail) = (check.run)(ctx);
        records.push(CheckRecord {
            check: check.id.to_string(),
            module: check.module.to_string(),
            anchor: check.anchor.to_string(),
            status,
            detail,
            wall_ms: start.elapsed().as_millis(),
        });
    }
    Report::new(scenario_name, records)
}

/// The id → (module, operation) mapping emitted by `--list-checks`.
pub fn check_table() -> Vec<(String, String, String)> {
    all_checks()
        .iter()
        .map(|c| {
            (
                c.id.to_string(),
                c.module.to_string(),
                c.operation.to_string(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_unique_and_mapped() {
        let checks = all_checks();
        let mut ids: Vec<&str> = checks.iter().map(|c| c.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n, "duplicate check ids");
        for c in &checks {
            assert!(c.id.starts_with(c.module), "id {} not scoped by module", c.id);
            assert!(!c.operation.is_empty());
            assert!(!c.anchor.is_empty());
        }
    }

    #[test]
    fn algebra_checks_pass() {
        let ctx = CheckCtx::default();
        let report = run_suite("algebra", &ctx, Some("exact_algebra"));
        assert_eq!(report.overall(), Status::Pass, "{:?}", report.to_json(false));
    }

    #[test]
    fn deterministic_repeat_run() {
        let ctx = CheckCtx::default();
        let a = run_suite("t", &ctx, Some("grassmannian"))
            .to_json(false)
            .to_string();
        let b = run_suite("t", &ctx, Some("grassmannian"))
            .to_json(false)
            .to_string();
        assert_eq!(a, b);
    }
}
