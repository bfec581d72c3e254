//! Acceptance suite: one test per criterion, each ending with a PASS
//! line and a hard bound on its runtime where one is specified.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use cotlar::a2tilde::A2TildeSubgroup;
use cotlar::algebra::{cotlar_defect, cotlar_residual, sample_exact_element, ExactElement};
use cotlar::building::{
    building_symbol, check_axioms, finer_model, transitivity_table_check, verify_building_cotlar,
    DeltaTable,
};
use cotlar::coxeter::{systems, CoxeterSystem};
use cotlar::geometry::{classify, nested_condition, root_relation_check};
use cotlar::gp::products;
use cotlar::group::{commuting_generators, parabolic_subgroup, trivial_subgroup};
use cotlar::scalar::{exact, Scalar};
use cotlar::symbol::mw_symbol;
use cotlar::verify::verify_cotlar;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pass(criterion: &str, detail: String, started: Instant) {
    println!(
        "[{criterion}] PASS ({} ms) {detail}",
        started.elapsed().as_millis()
    );
}

#[test]
fn criterion_01_nested_condition_table() {
    let started = Instant::now();
    let pgl = systems::pgl2z();
    let a2t = systems::a2_tilde();
    let right_angled: Vec<CoxeterSystem> = vec![
        systems::d_infinity(),
        systems::cycle_right_angled(4),
        systems::cycle_right_angled(5),
        systems::cycle_right_angled(6),
        products::z2_times_z2().type_system().clone(),
    ];

    let mut timed_calls = 0u32;
    let mut check = |system: &CoxeterSystem, s: usize, expected: bool| {
        let t = Instant::now();
        let got = nested_condition(system, s);
        let elapsed = t.elapsed();
        assert!(
            elapsed < Duration::from_millis(1),
            "nested_condition took {elapsed:?}"
        );
        assert_eq!(got, expected);
        timed_calls += 1;
    };

    check(&pgl, 0, true); // s
    check(&pgl, 1, false); // t
    check(&pgl, 2, false); // u
    for s in 0..3 {
        check(&a2t, s, false);
    }
    for system in &right_angled {
        for s in 0..system.rank() {
            check(system, s, true);
        }
    }
    pass(
        "criterion 1",
        format!("{timed_calls} nested-condition calls, each under 1 ms"),
        started,
    );
}

#[test]
fn criterion_02_theorem_a_brute_force() {
    let started = Instant::now();
    let cases: Vec<(&str, CoxeterSystem, usize, usize)> = vec![
        ("D-infinity", systems::d_infinity(), 0, 6),
        ("pentagon", systems::cycle_right_angled(5), 0, 6),
        ("pgl2z", systems::pgl2z(), 0, 5),
    ];
    for (name, system, s, radius) in cases {
        let case_start = Instant::now();
        let symbol = mw_symbol(&system, s);
        let g0 = parabolic_subgroup(&system, commuting_generators(&system, s));
        let report = verify_cotlar(&system, &symbol, &g0, radius).unwrap();
        assert!(
            report.violations.is_empty(),
            "{name}: violations {:?}",
            report.violations.len()
        );
        assert!(
            report.invariance_violations.is_empty(),
            "{name}: invariance violations"
        );
        let elapsed = case_start.elapsed();
        assert!(elapsed < Duration::from_secs(30), "{name} took {elapsed:?}");
        println!(
            "  {name}: radius {radius}, ball {}, {} pairs, clean, {} ms",
            report.ball_size,
            report.pairs_checked,
            elapsed.as_millis()
        );
    }
    pass("criterion 2", "wall symbols satisfy the pairwise identity relative to the commuting parabolic".into(), started);
}

#[test]
fn criterion_03_affine_triangle_refutation() {
    let started = Instant::now();
    let a2t = systems::a2_tilde();
    let symbol = mw_symbol(&a2t, 0);
    let g0 = trivial_subgroup(a2t.identity());
    let report = verify_cotlar(&a2t, &symbol, &g0, 4).unwrap();
    assert!(
        !report.violations.is_empty(),
        "expected at least one violating pair at radius 4"
    );

    // the four elements outside the maximal nested subset: all six root
    // relations must be refuted with explicit corner witnesses. u and t
    // already refute within ball(4); the corner of tu in g.H- cap H-
    // first appears at radius 5, so the joint scan runs there.
    let u = a2t.generator(2).unwrap();
    assert!(root_relation_check(&a2t, 0, &u, 4).unwrap().is_refuted());
    for word in ["u", "t", "tu", "sut"] {
        let g = a2t.reduce(&a2t.parse_word(word).unwrap()).unwrap();
        let check = root_relation_check(&a2t, 0, &g, 5).unwrap();
        let witnesses = check
            .refutation
            .as_ref()
            .unwrap_or_else(|| panic!("{word}: expected all six relations refuted"));
        assert!(check.consistent.is_empty());
        // witnesses must be genuine chambers of the scanned ball
        for w in [
            &witnesses.pos_pos,
            &witnesses.pos_neg,
            &witnesses.neg_pos,
            &witnesses.neg_neg,
        ] {
            assert!(w.length() <= 5);
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10));
    pass(
        "criterion 3",
        format!(
            "{} violating pairs at radius 4; u, t, tu, sut all refute the six relations",
            report.violations.len()
        ),
        started,
    );
}

#[test]
fn criterion_04_six_class_oracle_equivalence() {
    let started = Instant::now();
    for (name, system) in [
        ("D-infinity", systems::d_infinity()),
        ("pentagon", systems::cycle_right_angled(5)),
    ] {
        let ball = system.ball(6).unwrap();
        for g in &ball {
            let class = classify(&system, 0, g).unwrap();
            let report = root_relation_check(&system, 0, g, 6).unwrap();
            assert!(
                report.admits(class),
                "{name}: ball scan refutes {class:?} for {}",
                system.format_element(g)
            );
            assert!(!report.is_refuted());
            if g.length() < 6 {
                assert_eq!(
                    report.uniquely_certified(),
                    Some(class),
                    "{name}: ambiguous evidence for interior element {}",
                    system.format_element(g)
                );
            }
        }
        println!("  {name}: {} elements cross-checked at radius 6", ball.len());
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(
        "criterion 4",
        "classification agrees with the chamber-scan oracle".into(),
        started,
    );
}

#[test]
fn criterion_05_translation_subgroup() {
    let started = Instant::now();
    let sub = A2TildeSubgroup::new(systems::a2_tilde().with_max_word_len(48)).unwrap();
    let sys = sub.system();

    // the two translations commute
    let ab = sys.multiply(sub.alpha(), sub.beta()).unwrap();
    let ba = sys.multiply(sub.beta(), sub.alpha()).unwrap();
    assert_eq!(ab, ba);

    // exactly six cosets, covering ball(6) with unique factorization
    assert_eq!(sub.coset_reps().len(), 6);
    for g in sys.ball(6).unwrap() {
        let mut hits = 0;
        for rep in sub.coset_reps() {
            let h = sys.multiply(&sys.invert(rep), &g).unwrap();
            if sub.membership(&h).unwrap().is_some() {
                hits += 1;
            }
        }
        assert_eq!(hits, 1, "{} must factor uniquely", sys.format_element(&g));
    }

    // the subgroup symbol is constant on the diagonal and on each side of
    // it over the 7x7 grid, with the orientation derived from alpha
    let symbol = sub.lattice_symbol();
    let orientation = sub.derived_orientation().unwrap();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            let v = symbol.evaluate(&(a, b)).unwrap();
            if a == b {
                assert_eq!(v, exact(1));
            } else if a > b {
                assert_eq!(v, orientation);
            } else {
                assert_eq!(v, exact(0) - orientation.clone());
            }
        }
    }

    // pairwise identity relative to the diagonal subgroup on the grid
    let report = verify_cotlar(
        &sub.lattice_group(),
        &symbol,
        &sub.diagonal_predicate(),
        3,
    )
    .unwrap();
    assert!(report.holds(), "violations: {}", report.violations.len());

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(
        "criterion 5",
        "six cosets, diagonal-invariant half-plane symbol, clean grid scan".into(),
        started,
    );
}

#[test]
fn criterion_06_building_axioms() {
    let started = Instant::now();
    // pairs at radius 4, triples at radius 3, on every model
    let d = systems::d_infinity();
    for radius in [3, 4] {
        let report = check_axioms(&d, radius).unwrap();
        assert!(report.passed(), "thin: {report:?}");
    }
    for (name, gp) in [
        ("Z2*Z3", products::z2_star_z3()),
        ("path", products::path_z2_z2_z3()),
        ("Z2xZ2", products::z2_times_z2()),
    ] {
        for radius in [3, 4] {
            let report = check_axioms(&gp, radius).unwrap();
            assert!(report.passed(), "{name}: {report:?}");
        }
    }
    // negative control: a corrupted distance table must fail B2 with a
    // witness
    let mut table = DeltaTable::materialize(&d, 3).unwrap();
    table.corrupt_entry(1, 2, d.reduce(&[0, 1, 0]).unwrap());
    let corrupted = table.check().unwrap();
    assert!(!corrupted.b2_failures.is_empty());

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(
        "criterion 6",
        "B1-B3 and the inverse law hold; corruption is caught with a witness".into(),
        started,
    );
}

#[test]
fn criterion_07_building_cotlar_and_symbol_coincidence() {
    let started = Instant::now();
    let fp = products::z2_star_z3();
    for u in [0, 1] {
        let report = verify_building_cotlar(&fp, u, 4).unwrap();
        assert!(report.holds(), "Z2*Z3 vertex {u}: {}", report.violations.len());
    }
    let path = products::path_z2_z2_z3();
    let report = verify_building_cotlar(&path, 0, 3).unwrap();
    assert!(report.holds());

    // the descent-computed symbol coincides with the independent
    // shuffle-search symbol on every ball element
    for (name, gp, radius) in [
        ("Z2*Z3", &fp, 4usize),
        ("path", &path, 3),
        ("Z2xZ2", &products::z2_times_z2(), 3),
    ] {
        for u in 0..gp.vertex_count() {
            let m = building_symbol(gp, u).unwrap();
            for g in gp.gp_ball(radius).unwrap() {
                let expected = exact(common::shuffle_front_symbol(gp, u, &g));
                assert_eq!(
                    m.evaluate(&g).unwrap(),
                    expected,
                    "{name}, vertex {u}, element {}",
                    gp.format_element(&g)
                );
            }
        }
    }

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(
        "criterion 7",
        "building scans clean; descent symbol equals the shuffle-search symbol".into(),
        started,
    );
}

#[test]
fn criterion_08_transitivity_composition() {
    let started = Instant::now();
    let fp = products::z2_star_z3();
    for u in [0, 1] {
        let report = transitivity_table_check(&fp, u, 3).unwrap();
        assert!(report.passed(), "Z2*Z3 vertex {u}: {:?}", report.failures);
        assert!(report.hypothesis_hits > 0);
    }
    let d = systems::d_infinity();
    for u in [0, 1] {
        let report = transitivity_table_check(&d, u, 3).unwrap();
        assert!(report.passed(), "thin vertex {u}: {:?}", report.failures);
        assert!(report.hypothesis_hits > 0);
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    pass(
        "criterion 8",
        "all composition rules hold on every chamber triple of ball(3)".into(),
        started,
    );
}

#[test]
fn criterion_09_finer_model() {
    let started = Instant::now();
    let fp = products::z3_star_z2();
    let model = finer_model(&fp, 0, vec![exact(1), exact(-1), exact(-1)], 4).unwrap();
    assert!(model.constraint_satisfied(), "{:?}", model.audit.violations);
    let report = verify_cotlar(&fp, model.symbol(), model.subgroup(), 4).unwrap();
    assert!(report.holds(), "{} violations", report.violations.len());

    // the two-valued specialization reproduces the building symbol
    let d = products::z2_star_z2();
    let two = finer_model(&d, 0, vec![exact(1), exact(-1)], 3).unwrap();
    let m = building_symbol(&d, 0).unwrap();
    for g in d.gp_ball(5).unwrap() {
        assert_eq!(
            two.symbol().evaluate(&g).unwrap(),
            m.evaluate(&g).unwrap(),
            "mismatch at {}",
            d.format_element(&g)
        );
    }
    pass(
        "criterion 9",
        "orbit audit clean, scan clean, two-valued case collapses to the wall symbol".into(),
        started,
    );
}

#[test]
fn criterion_10_operator_cotlar() {
    let started = Instant::now();
    // 100 seeded test functions on ball(3) of the infinite dihedral group
    let d = systems::d_infinity();
    let symbol = mw_symbol(&d, 0);
    let g0 = trivial_subgroup(d.identity());
    let ball = d.ball(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut nonzero_samples = 0u32;
    for _ in 0..100 {
        let f = sample_exact_element(&mut rng, &ball);
        if !f.is_zero() {
            nonzero_samples += 1;
        }
        let report = cotlar_residual(&d, &symbol, &g0, &f, "exact").unwrap();
        assert!(report.exact_zero, "residual must vanish exactly");
    }
    assert!(nonzero_samples > 80);

    // the affine counterexample produces a nonzero defect, built from a
    // violating pair found by the symbol-level scan
    let a2t = systems::a2_tilde().with_max_word_len(24);
    let m = mw_symbol(&a2t, 0);
    let g0_a = trivial_subgroup(a2t.identity());
    let scan = verify_cotlar(&a2t, &m, &g0_a, 4).unwrap();
    let v = scan.violations.first().expect("violating pair exists");
    let shifted = a2t.multiply(&a2t.invert(&v.g), &v.h).unwrap();
    let f = ExactElement::from_terms([(v.h.clone(), exact(1)), (shifted, exact(1))]);
    let report = cotlar_residual(&a2t, &m, &g0_a, &f, "exact").unwrap();
    assert!(!report.exact_zero);
    let defect = cotlar_defect(&a2t, &m, &g0_a, &f).unwrap();
    assert!(!defect.coefficient(&v.g).is_zero());

    // || delta_e + delta_s ||_4 = 8^(1/4) as an exact trace identity
    let z2 = CoxeterSystem::new(
        vec!["s".into()],
        vec![vec![cotlar::CoxeterOrder::Finite(1)]],
    )
    .unwrap();
    let f = ExactElement::from_terms([
        (z2.identity(), exact(1)),
        (z2.generator(0).unwrap(), exact(1)),
    ]);
    assert_eq!(f.trace_power(&z2, 2).unwrap(), exact(8));
    assert!((f.lp_norm_even(&z2, 2).unwrap() - 8f64.powf(0.25)).abs() < 1e-12);

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    pass(
        "criterion 10",
        format!("{nonzero_samples} nontrivial samples with exactly zero residual; counterexample detected"),
        started,
    );
}

#[test]
fn ball_counts_pin_the_scales() {
    // scale sanity for the suite: these sizes bound every scan above
    let a2t = systems::a2_tilde();
    assert_eq!(a2t.ball(2).unwrap().len(), 10);
    let d = systems::d_infinity();
    assert_eq!(d.ball(6).unwrap().len(), 13);
    let t_s: BTreeSet<usize> = commuting_generators(&systems::pgl2z(), 0);
    assert_eq!(t_s, BTreeSet::from([2]));
}
