//! Property tests for the exact-arithmetic foundation: ring axioms,
//! substitution as a ring homomorphism, parser round trips, wedge points
//! landing on the Plücker quadrics, factorization re-multiplication and
//! membership re-expansion.

use std::collections::BTreeMap;

use delpezzo::algebra::factor::factor_upoly;
use delpezzo::algebra::membership::{membership_certificate, Membership};
use delpezzo::algebra::rational::Rat;
use delpezzo::algebra::upoly::UPoly;
use delpezzo::grassmannian::{pluecker_ideal, wedge, W_NAMES};
use delpezzo::{MultiPoly, Vars};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn poly(vars: &Vars) -> impl Strategy<Value = MultiPoly> {
    let vars = vars.clone();
    let n = vars.len();
    prop::collection::vec((prop::collection::vec(0u16..=2, n), small_rat()), 0..5).prop_map(
        move |terms| {
            let mut p = MultiPoly::zero(&vars);
            for (e, c) in terms {
                if !c.is_zero() {
                    p = p.add(&MultiPoly::from_terms(&vars, [(e, c)]));
                }
            }
            p
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((p, q, r) in {
        let vars = Vars::new(["x1", "x2", "x3", "x4", "x5"]);
        (poly(&vars), poly(&vars), poly(&vars))
    }) {
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    #[test]
    fn substitution_is_ring_homomorphism((p, q, img) in {
        let vars = Vars::new(["x1", "x2", "x3"]);
        (poly(&vars), poly(&vars), poly(&vars))
    }) {
        let vars = Vars::new(["x1", "x2", "x3"]);
        let mut assign = BTreeMap::new();
        assign.insert("x2".to_string(), img);
        let lhs = p.mul(&q).substitute(&assign, &vars).unwrap();
        let rhs = p.substitute(&assign, &vars).unwrap()
            .mul(&q.substitute(&assign, &vars).unwrap());
        prop_assert_eq!(lhs, rhs);
        let sum = p.add(&q).substitute(&assign, &vars).unwrap();
        let sum2 = p.substitute(&assign, &vars).unwrap()
            .add(&q.substitute(&assign, &vars).unwrap());
        prop_assert_eq!(sum, sum2);
    }

    #[test]
    fn parse_display_roundtrip(p in {
        let vars = Vars::new(["w12", "w13", "t13", "beta"]);
        poly(&vars)
    }) {
        let vars = Vars::new(["w12", "w13", "t13", "beta"]);
        let text = p.to_string();
        let back = MultiPoly::parse(&vars, &text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn wedge_points_satisfy_pluecker_quadrics(
        u in prop::collection::vec(-7i64..=7, 5),
        v in prop::collection::vec(-7i64..=7, 5),
    ) {
        let sys = pluecker_ideal();
        let ur: Vec<Rat> = u.iter().map(|&x| Rat::from_integer(x.into())).collect();
        let vr: Vec<Rat> = v.iter().map(|&x| Rat::from_integer(x.into())).collect();
        let w = wedge(&ur, &vr);
        let mut values = BTreeMap::new();
        for (name, val) in W_NAMES.iter().zip(&w) {
            values.insert(name.to_string(), val.clone());
        }
        for g in &sys.generators {
            prop_assert!(g.eval_rat(&values).unwrap().is_zero());
        }
    }

    #[test]
    fn factorization_remultiplies(coeffs in prop::collection::vec(-6i64..=6, 2..=7)) {
        let f = UPoly::from_i64(&coeffs);
        prop_assume!(!f.is_zero() && f.deg() >= 1);
        let factors = factor_upoly(&f).unwrap();
        let mut prod = UPoly::constant(f.leading().clone());
        for (g, m) in &factors {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn membership_finds_constructed_combinations(
        h in prop::collection::vec((small_rat(), 0usize..10), 1..=3)
    ) {
        // f = Σ c·w_k·g_j is in the ideal with degree-1 multipliers.
        let sys = pluecker_ideal();
        let mut f = MultiPoly::zero(&sys.vars);
        for (i, (c, k)) in h.iter().enumerate() {
            let gen = &sys.generators[i % 5];
            let w = MultiPoly::var(&sys.vars, W_NAMES[*k]).unwrap();
            f = f.add(&gen.mul(&w).scale(c));
        }
        match membership_certificate(&f, &sys.generators, 1) {
            Membership::Certificate(hs) => {
                let mut recon = MultiPoly::zero(&sys.vars);
                for (m, g) in hs.iter().zip(&sys.generators) {
                    recon = recon.add(&m.mul(g));
                }
                prop_assert_eq!(recon, f);
            }
            Membership::NotFound => prop_assert!(false, "constructed combination not found"),
        }
    }
}
