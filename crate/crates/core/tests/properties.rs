use std::collections::BTreeMap;

use ncphase::catalog::{build, AlgebraDescriptor, AlgebraName, Charges, KinematicalParams};
use ncphase::coadjoint::{kirillov_matrix, poisson_bracket, DualPoint};
use ncphase::config::{Command, RunConfig};
use ncphase::linalg::{parse_rational, rat, Matrix, Rational};
use ncphase::orbits::{OrbitFixture, OrbitParams};
use ncphase::report::{num, Format};
use ncphase::static_group::{
    compose, realize, static_invariants, StaticConstants, StaticGroupElement, StaticOrbitState,
};
use proptest::prelude::*;

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    ((1i64..=9), any::<bool>(), (1i64..=6)).prop_map(|(n, neg, d)| rat(if neg { -n } else { n }, d))
}

fn descriptor() -> impl Strategy<Value = AlgebraDescriptor> {
    let all: Vec<AlgebraDescriptor> = AlgebraName::ALL
        .into_iter()
        .flat_map(|name| AlgebraDescriptor::admissible_variants(name).into_iter().map(move |variant| AlgebraDescriptor { name, variant }))
        .collect();
    proptest::sample::select(all)
}

fn element() -> impl Strategy<Value = StaticGroupElement> {
    (proptest::array::uniform16(-1.0f64..1.0)).prop_map(|c| StaticGroupElement {
        theta: 3.0 * c[0],
        v: [c[1], c[2]],
        x: [c[3], c[4]],
        t: c[5],
        eta: [c[6], c[7]],
        l: [c[8], c[9]],
        xi: c[10],
        phi: c[11],
        b: c[12],
        a: c[13],
    })
}

fn state() -> impl Strategy<Value = StaticOrbitState> {
    (0.5f64..2.0, 1.0f64..3.0, -0.5f64..0.5, 1.0f64..3.0, proptest::array::uniform10(-1.0f64..1.0)).prop_map(
        |(m, mu, b, k, c)| StaticOrbitState {
            j: c[0],
            energy: c[1],
            p: [c[2], c[3]],
            k: [c[4], c[5]],
            q: [c[6], c[7]],
            u: [c[8], c[9]],
            constants: StaticConstants::new(m, mu, b, k).unwrap(),
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kirillov_is_antisymmetric(d in descriptor(), w in nonzero_rational(), k in nonzero_rational(), seed in proptest::collection::vec(-5i64..5, 20)) {
        let alg = build(&d, &KinematicalParams::from_curvatures(w, k).unwrap()).unwrap();
        let coords: Vec<Rational> = (0..alg.dim()).map(|i| rat(seed[i % seed.len()] + i as i64 % 3, 1 + (i as i64 % 4))).collect();
        let km = kirillov_matrix(&alg, &DualPoint::from_coords(&alg, coords).unwrap()).unwrap();
        prop_assert!(km.entries.is_antisymmetric());
    }

    #[test]
    fn catalog_satisfies_jacobi(d in descriptor(), w in nonzero_rational(), k in nonzero_rational(), s in nonzero_rational(), v in nonzero_rational()) {
        let charges = Charges { mass: s.clone(), spin: v.clone(), vector: s, secondary: v };
        let alg = build(&d, &KinematicalParams::from_curvatures(w, k).unwrap().with_charges(charges)).unwrap();
        prop_assert!(alg.check_jacobi().is_empty());
    }

    #[test]
    fn orbit_theta_inverts_omega_exactly(f in proptest::sample::select(OrbitFixture::ALL.to_vec()),
                                         w in nonzero_rational(), k in nonzero_rational(), m in nonzero_rational(), h in nonzero_rational()) {
        let p = OrbitParams::new(KinematicalParams::from_curvatures(w, k).unwrap(), m, h);
        // degenerate charts are rejected, never regularized
        if let Ok(s) = f.structure(&p) {
            prop_assert_eq!(s.omega.matmul(&s.theta).unwrap(), Matrix::identity(s.omega.rows()));
            prop_assert!(s.brackets.is_antisymmetric());
        }
    }

    #[test]
    fn poisson_bracket_is_antisymmetric(a in proptest::collection::vec(-3.0f64..3.0, 4), b in proptest::collection::vec(-3.0f64..3.0, 4)) {
        let p = OrbitParams::new(KinematicalParams::from_curvatures(rat(1, 1), rat(1, 1)).unwrap(), rat(2, 1), rat(1, 1));
        let s = OrbitFixture::NewtonHookePlus.structure(&p).unwrap().to_f64();
        let ab = poisson_bracket(&s, &a, &b).unwrap();
        let ba = poisson_bracket(&s, &b, &a).unwrap();
        prop_assert!((ab + ba).abs() < 1e-12);
    }

    #[test]
    fn group_is_associative(a in element(), b in element(), c in element()) {
        let lhs = compose(&compose(&a, &b), &c);
        let rhs = compose(&a, &compose(&b, &c));
        prop_assert!(lhs.distance(&rhs) < 1e-10);
    }

    #[test]
    fn group_inverse(a in element()) {
        prop_assert!(compose(&a, &a.inverse()).distance(&StaticGroupElement::identity()) < 1e-12);
    }

    #[test]
    fn realize_is_an_action(a in element(), b in element(), s in state()) {
        let lhs = realize(&compose(&a, &b), &s).unwrap();
        let rhs = realize(&a, &realize(&b, &s).unwrap()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-9);
    }

    #[test]
    fn invariants_are_preserved(a in element(), s in state(), nu in -1.0f64..1.0) {
        let (s0, u0) = static_invariants(&s, nu);
        let (s1, u1) = static_invariants(&realize(&a, &s).unwrap(), nu);
        prop_assert!((s0 - s1).abs() < 1e-9 && (u0 - u1).abs() < 1e-9);
    }

    #[test]
    fn rationals_parse_exactly(n in -10_000i64..10_000, d in 1i64..1000, frac in 0u32..10_000) {
        prop_assert_eq!(parse_rational(&format!("{n}/{d}")).unwrap(), rat(n, d));
        let text = format!("{}.{frac:04}", n.abs());
        prop_assert_eq!(parse_rational(&text).unwrap(), rat(n.abs() * 10_000 + frac as i64, 10_000));
    }

    #[test]
    fn numbers_round_trip(x in proptest::num::f64::NORMAL) {
        prop_assert_eq!(num(x).parse::<f64>().unwrap(), x);
    }

    #[test]
    fn config_round_trips(cmd in proptest::sample::select(vec![Command::List, Command::Verify, Command::Orbit, Command::Classify, Command::Simulate, Command::Realize]),
                          m in 1i64..50, h in 1i64..9, t_end in 0.1f64..100.0, dt in 1e-4f64..0.1, seed in any::<u64>(),
                          samples in 1usize..500, g in proptest::option::of(-2.0f64..2.0), steps in proptest::option::of(0usize..1000),
                          json in any::<bool>()) {
        let mut c = RunConfig {
            command: Some(cmd),
            algebra: Some("NH+".into()),
            params: BTreeMap::from([("m".to_string(), format!("{m}/{h}")), ("h".to_string(), h.to_string())]),
            samples,
            seed,
            format: if json { Format::JsonLines } else { Format::Csv },
            ..RunConfig::default()
        };
        c.sim.t_end = t_end;
        c.sim.dt = dt;
        c.sim.g_field = g;
        c.realize.steps = steps;
        c.realize.element = Some(StaticGroupElement { t: dt, theta: g.unwrap_or(0.0), ..Default::default() });
        let back: RunConfig = c.to_toml().unwrap().parse().unwrap();
        prop_assert_eq!(back, c);
    }
}
