//! Acceptance suite: every exit criterion runs as its own test and prints
//! one pass/fail line (visible with `cargo test -- --nocapture`).

use std::collections::BTreeMap;
use std::sync::OnceLock;
use superz_core::builders::{
    build_d21, build_f4_from_tables, build_g2_abstract, build_g3_from_tables, build_sl2,
    build_so7, clifford_oracle, spin_action_table, F4Tables, G3Tables,
};
use superz_core::centralizer::{centralizer, centre_of};
use superz_core::orbits::{catalog, resolve_span, so7_catalog};
use superz_core::report::{analyze_all, AlgebraContext, CaseReport};
use superz_core::roots::{label_diagram, mu, per_orbit_systems, root_system};
use superz_core::scalar::{int, rat, Scalar};
use superz_core::AlgebraId;

fn ctx(alg: AlgebraId) -> &'static AlgebraContext {
    static D21: OnceLock<AlgebraContext> = OnceLock::new();
    static G3: OnceLock<AlgebraContext> = OnceLock::new();
    static F4: OnceLock<AlgebraContext> = OnceLock::new();
    let cell = match alg {
        AlgebraId::D21 => &D21,
        AlgebraId::G3 => &G3,
        AlgebraId::F4 => &F4,
    };
    cell.get_or_init(|| AlgebraContext::new(alg, None).expect("context builds"))
}

fn reports(alg: AlgebraId) -> &'static Vec<CaseReport> {
    static D21: OnceLock<Vec<CaseReport>> = OnceLock::new();
    static G3: OnceLock<Vec<CaseReport>> = OnceLock::new();
    static F4: OnceLock<Vec<CaseReport>> = OnceLock::new();
    let cell = match alg {
        AlgebraId::D21 => &D21,
        AlgebraId::G3 => &G3,
        AlgebraId::F4 => &F4,
    };
    cell.get_or_init(|| analyze_all(ctx(alg), false).expect("analysis completes"))
}

fn check_passed(r: &CaseReport, name: &str) -> bool {
    r.checks.iter().any(|c| c.name == name && c.passed)
}

fn verdict(criterion: &str, pass: bool, note: &str) {
    println!(
        "criterion {criterion}: {} - {note}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {note}");
}

#[test]
fn criterion_01_axiom_suite() {
    let mut all = true;
    let mut failing = Vec::new();
    let mut run = |name: &str, g: &superz_core::superalg::SuperAlgebra| {
        let ok = g.verify_axioms().passed();
        if !ok {
            failing.push(name.to_string());
        }
        all &= ok;
    };
    run("sl(2)", &build_sl2());
    run("so(7)", &build_so7().unwrap());
    run("G2", &build_g2_abstract().unwrap());
    run("D(2,1;a) symbolic", &build_d21(&Scalar::alpha()).unwrap());
    for a in [int(2), int(-3), rat(1, 2)] {
        run("D(2,1;a) sample", &build_d21(&Scalar::Rat(a)).unwrap());
    }
    run("G(3)", &ctx(AlgebraId::G3).g);
    run("F(4)", &ctx(AlgebraId::F4).g);
    verdict(
        "1 (axiom suite)",
        all,
        &format!("graded axioms over all basis triples; failures: {failing:?}"),
    );
}

#[test]
fn criterion_02_spin_oracle() {
    let oracle = clifford_oracle();
    let table = spin_action_table().unwrap();
    verdict(
        "2 (spin representation oracle)",
        oracle == table,
        "Clifford-derived action equals the transcribed 21 x 8 table exactly",
    );
}

#[test]
fn criterion_03_so7_centralizer_dims() {
    let so7 = build_so7().unwrap();
    let expected = [3usize, 5, 7, 9, 11, 13, 21];
    let cases = so7_catalog().unwrap();
    let mut dims = Vec::new();
    let mut golden = true;
    for case in &cases {
        let ge = centralizer(&so7, &case.e(&so7));
        dims.push(ge.dim());
        match &case.expected.ge_basis {
            Some(basis) => golden &= resolve_span(&so7, basis) == ge,
            None => golden &= ge.dim() == so7.dim(),
        }
    }
    verdict(
        "3 (so(7) centralizer dimensions)",
        dims == expected && golden,
        &format!("dims {dims:?}, bases match the transcribed table"),
    );
}

#[test]
fn criterion_04_d21_golden_table() {
    let rs = reports(AlgebraId::D21);
    let dims: Vec<(usize, usize)> = rs.iter().map(|r| (r.dim_ge, r.dim_z)).collect();
    // The z-column of the source table for the regular case lists <e>,
    // which is the invariant centre: the raw centre also contains the odd
    // top vector v(1,1,1) (the catalog and the analysis carry the
    // 2-dimensional centre; the -1 of an SL2 factor cuts it back to <e>).
    let expected = [(17, 0), (11, 1), (9, 1), (6, 2)];
    let dims_ok = dims == expected;
    let fixed_ok = rs.iter().map(|r| r.dim_fixed_z).collect::<Vec<_>>() == vec![0, 1, 1, 1];
    let spans_ok = rs
        .iter()
        .all(|r| check_passed(r, "z_matches_table") && check_passed(r, "fixed_z_matches_table"));
    let ge_ok = rs.iter().all(|r| check_passed(r, "ge_matches_table"));
    verdict(
        "4 (D(2,1;a) golden table)",
        dims_ok && fixed_ok && spans_ok && ge_ok,
        &format!(
            "(dim g^e, dim z) = {dims:?}; table spans match; invariant-centre dims (0,1,1,1); \
             the regular case's raw centre is <e, v(1,1,1)> and its table span <e> is the \
             invariant centre"
        ),
    );
}

#[test]
fn criterion_05_g3_golden_table() {
    let rs = reports(AlgebraId::G3);
    let all_ok = rs.iter().all(|r| {
        check_passed(r, "ge_matches_table")
            && check_passed(r, "z_matches_table")
            && check_passed(r, "fixed_z_matches_table")
    });
    let ex2 = rs.iter().find(|r| r.case == "E+x2").unwrap();
    let x1x2 = rs.iter().find(|r| r.case == "E+(x1+x2)").unwrap();
    verdict(
        "5 (G(3) golden table)",
        all_ok && ex2.dim_ge == 16 && x1x2.dim_z == 3,
        &format!(
            "all 10 cases reproduce g^e and z as subspaces; dim g^{{E+x2}} = {}, \
             z(g^{{E+(x1+x2)}}) = <{}>",
            ex2.dim_ge,
            x1x2.z_basis.join(", ")
        ),
    );
}

#[test]
fn criterion_06_f4_golden_table() {
    let rs = reports(AlgebraId::F4);
    let all_ok = rs.iter().all(|r| {
        check_passed(r, "ge_matches_table")
            && check_passed(r, "z_matches_table")
            && check_passed(r, "fixed_z_matches_table")
            && check_passed(r, "graded_dims")
    });
    let e7 = rs.iter().find(|r| r.case == "e(7)").unwrap();
    let grading_ok = e7.graded_dims == BTreeMap::from([(0, 5), (2, 1), (6, 3), (10, 1)]);
    verdict(
        "6 (F(4) golden table)",
        all_ok && e7.dim_z == 2 && grading_ok,
        &format!(
            "all 14 cases; z(g^{{e(7)}}) = <{}> with grading dims {:?}",
            e7.z_basis.join(", "),
            e7.graded_dims
        ),
    );
}

#[test]
fn criterion_07_labelled_diagrams() {
    let mut all_ok = true;
    let mut count = 0;
    for alg in [AlgebraId::D21, AlgebraId::G3, AlgebraId::F4] {
        for r in reports(alg) {
            all_ok &= check_passed(r, "diagrams_match_table");
            all_ok &= check_passed(r, "labels_in_range");
            count += r.diagrams.len();
        }
    }
    // the worked per-orbit systems give the same labels directly
    let gctx = ctx(AlgebraId::G3);
    let case = superz_core::orbits::catalog_case(AlgebraId::G3, "E+x2").unwrap();
    let h = case.h(&gctx.g);
    for (case_name, sys) in per_orbit_systems(AlgebraId::G3) {
        assert_eq!(case_name, "E+x2");
        let d = label_diagram(&gctx.g, &gctx.sys, &sys.roots, &h).unwrap();
        all_ok &= d.integer_labels().unwrap() == vec![0, 0, 1];
    }
    let fctx = ctx(AlgebraId::F4);
    let case = superz_core::orbits::catalog_case(AlgebraId::F4, "e(7)").unwrap();
    let h = case.h(&fctx.g);
    for (case_name, sys) in per_orbit_systems(AlgebraId::F4) {
        assert_eq!(case_name, "e(7)");
        let d = label_diagram(&fctx.g, &fctx.sys, &sys.roots, &h).unwrap();
        all_ok &= d.integer_labels().unwrap() == vec![0, 0, 2, 2];
    }
    verdict(
        "7 (labelled diagrams)",
        all_ok,
        &format!("{count} diagrams over 28 cases match the tables; labels all lie in {{0,1,2}}"),
    );
}

#[test]
fn criterion_08_mu_spot_checks() {
    let alpha = Scalar::alpha();
    let dsys = root_system(AlgebraId::D21, &alpha);
    let dmin = dsys.min_nonzero_norm();
    let pi1 = &per_orbit_systems(AlgebraId::D21)[0].1.roots;
    let d_ok = mu(&dsys, &pi1[1], &pi1[2], &dmin).unwrap() == Scalar::alpha();

    let gsys = root_system(AlgebraId::G3, &alpha);
    let gmin = gsys.min_nonzero_norm();
    let pi2 = &per_orbit_systems(AlgebraId::G3)[1].1.roots;
    let g_ok = mu(&gsys, &pi2[0], &pi2[1], &gmin).unwrap() == Scalar::one()
        && mu(&gsys, &pi2[1], &pi2[2], &gmin).unwrap() == Scalar::from_int(3);

    let fsys = root_system(AlgebraId::F4, &alpha);
    let fmin = fsys.min_nonzero_norm();
    let fpi1 = &per_orbit_systems(AlgebraId::F4)[0].1.roots;
    let f_vals: Vec<Scalar> = [(0, 1), (0, 2), (1, 2), (2, 3)]
        .iter()
        .map(|&(i, j)| mu(&fsys, &fpi1[i], &fpi1[j], &fmin).unwrap())
        .collect();
    let f_ok = f_vals
        == vec![
            Scalar::from_int(3),
            Scalar::from_int(2),
            Scalar::one(),
            Scalar::from_int(2),
        ];
    verdict(
        "8 (mu spot checks)",
        d_ok && g_ok && f_ok,
        "D(2,1;a) Pi1 mu23 = alpha symbolically; G(3) E+x2 Pi2 (1,3); F(4) e(7) Pi1 (3,2,1,2)",
    );
}

#[test]
fn criterion_09_theorem_1() {
    let expected_applicable: BTreeMap<AlgebraId, Vec<&str>> = BTreeMap::from([
        (AlgebraId::D21, vec!["0", "E1+E2"]),
        (AlgebraId::G3, vec!["0", "x1+x2", "x2+x5"]),
        (
            AlgebraId::F4,
            vec!["0", "E+e(5,1^2)", "E+e(3,1^4)", "e(7)", "e(3^2,1)"],
        ),
    ]);
    let mut all_ok = true;
    let mut seen = Vec::new();
    for alg in [AlgebraId::D21, AlgebraId::G3, AlgebraId::F4] {
        let mut applicable = Vec::new();
        for r in reports(alg) {
            for t in &r.theorems {
                if t.theorem == "theorem1" && t.applicable {
                    applicable.push(r.case.clone());
                    all_ok &= t.passed;
                }
            }
        }
        let mut expect: Vec<String> = expected_applicable[&alg]
            .iter()
            .map(|s| s.to_string())
            .collect();
        expect.sort();
        let mut got = applicable.clone();
        got.sort();
        all_ok &= got == expect;
        seen.push(format!("{}: {applicable:?}", alg.name()));
    }
    verdict(
        "9 (theorem 1)",
        all_ok,
        &format!(
            "dim fixed-z = n2 = dim z(g^h) on exactly the n1 = 0 cases; {}",
            seen.join("; ")
        ),
    );
}

#[test]
fn criterion_10_theorem_2() {
    let mut all_ok = true;
    let mut count = 0;
    for alg in [AlgebraId::D21, AlgebraId::G3, AlgebraId::F4] {
        for r in reports(alg) {
            for t in &r.theorems {
                if t.theorem == "theorem2" {
                    count += 1;
                    all_ok &= t.passed;
                }
            }
        }
    }
    // e(3^2,1): 18 - 17 = 1 spot value
    let e321 = reports(AlgebraId::F4)
        .iter()
        .find(|r| r.case == "e(3^2,1)")
        .unwrap();
    let spot = e321
        .theorems
        .iter()
        .filter(|t| t.theorem == "theorem2")
        .all(|t| {
            t.details
                .iter()
                .any(|(k, v)| k == "dim_g0e0" && v == "17")
        })
        && e321.dim_ge == 18;
    verdict(
        "10 (theorem 2)",
        all_ok && spot,
        &format!(
            "both identities hold for every bundled e0 across {count} labelled diagrams; \
             e(3^2,1) gives 18 - 17 = 1"
        ),
    );
}

#[test]
fn criterion_11_theorem_3() {
    let mut all_ok = true;
    let mut exceptions = Vec::new();
    let mut count = 0;
    for alg in [AlgebraId::D21, AlgebraId::G3, AlgebraId::F4] {
        let cases = catalog(alg).unwrap();
        for (r, case) in reports(alg).iter().zip(&cases) {
            for t in &r.theorems {
                if t.theorem == "theorem3" {
                    count += 1;
                    all_ok &= t.passed;
                }
            }
            if case.expected.epsilon != 0 {
                exceptions.push(format!("{} {}", alg.name(), case.name));
            }
        }
    }
    let expected_exceptions = vec!["D(2,1;a) E1+E2+E3".to_string(), "F(4) E+e(7)".to_string()];
    all_ok &= exceptions == expected_exceptions;
    verdict(
        "11 (theorem 3)",
        all_ok && count == 28,
        &format!(
            "ceiling formula holds for all {count} cases; epsilon = -1 exactly for {exceptions:?}"
        ),
    );
}

#[test]
fn criterion_12_mutation_sensitivity() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let mut trials = 0;
    let mut caught = 0;

    // single-cell sign flips in p7
    let base_g3 = G3Tables::load().unwrap();
    let g3_keys: Vec<(i32, i32)> = {
        let mut ks: Vec<_> = base_g3
            .p7
            .iter()
            .filter(|(_, v)| v.iter().any(|c| !c.is_zero()))
            .map(|(&k, _)| k)
            .collect();
        ks.sort();
        ks
    };
    for &key in g3_keys.choose_multiple(&mut rng, 6) {
        let mut tables = base_g3.clone();
        let cell = tables.p7.get_mut(&key).unwrap();
        for c in cell.iter_mut() {
            *c = -&*c;
        }
        let g = build_g3_from_tables(&tables).unwrap();
        trials += 1;
        if !g.verify_axioms().passed() {
            caught += 1;
        }
    }

    // single-cell sign flips in p8
    let base_f4 = F4Tables::load().unwrap();
    let f4_keys: Vec<(usize, usize)> = {
        let mut ks: Vec<_> = base_f4
            .p8
            .iter()
            .filter(|(_, v)| v.iter().any(|c| !c.is_zero()))
            .map(|(&k, _)| k)
            .collect();
        ks.sort();
        ks
    };
    for &key in f4_keys.choose_multiple(&mut rng, 6) {
        let mut tables = base_f4.clone();
        let cell = tables.p8.get_mut(&key).unwrap();
        for c in cell.iter_mut() {
            *c = -&*c;
        }
        let g = build_f4_from_tables(&tables).unwrap();
        trials += 1;
        if !g.verify_axioms().passed() {
            caught += 1;
        }
    }

    // antisymmetric pair flips are caught by the Jacobi identity
    for &(a, b) in [(3i32, -1i32), (0, -2)].iter() {
        let mut tables = base_g3.clone();
        for key in [(a, b), (b, a)] {
            let cell = tables.p7.get_mut(&key).unwrap();
            for c in cell.iter_mut() {
                *c = -&*c;
            }
        }
        let g = build_g3_from_tables(&tables).unwrap();
        trials += 1;
        if !g.verify_axioms().passed() {
            caught += 1;
        }
    }

    verdict(
        "12 (mutation sensitivity)",
        trials >= 10 && caught == trials,
        &format!("{caught}/{trials} random sign mutations break the axiom suite"),
    );
}

#[test]
fn criterion_13_osp_recognition() {
    let d21 = reports(AlgebraId::D21)
        .iter()
        .find(|r| r.case == "E1+E2")
        .unwrap();
    let g3 = reports(AlgebraId::G3)
        .iter()
        .find(|r| r.case == "E+x2")
        .unwrap();
    let f4 = reports(AlgebraId::F4)
        .iter()
        .find(|r| r.case == "e(7)")
        .unwrap();
    let recognized = [d21, g3, f4].iter().all(|r| {
        check_passed(r, "osp12_recognized") && check_passed(r, "osp12_assignment")
    });
    let modules_ok = g3
        .osp_modules
        .iter()
        .any(|(j, ws)| *j == 1 && ws == &vec![3])
        && g3
            .osp_modules
            .iter()
            .any(|(j, ws)| *j == 2 && ws == &vec![0, 1]);
    verdict(
        "13 (osp(1|2) recognition)",
        recognized && modules_ok,
        "generator assignments match the worked examples; g^{E+x2}(1), (2) decompose as {3}, {0,1}",
    );
}

#[test]
fn centre_membership_examples() {
    // e = E1+E2 lies in z(g^e) in D(2,1;a)
    let ctx = ctx(AlgebraId::D21);
    let e = ctx
        .g
        .combo(&[(Scalar::one(), "E1"), (Scalar::one(), "E2")]);
    let z = centre_of(&ctx.g, &centralizer(&ctx.g, &e)).unwrap();
    assert!(z.contains(&e.coords));
}
