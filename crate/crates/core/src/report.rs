//! The per-orbit analysis pipeline and its machine/human-readable
//! outputs. Every comparison against the bundled expected values is
//! recorded as a named check, so the CLI exit status and the golden
//! tests share one source of truth.

use crate::actions::ActionKind;
use crate::centralizer::{
    centralizer, centre_of, decompose_osp_module, fixed_points, grade, proportional,
    recognize_osp12, GroupElementAction,
};
use crate::error::Error;
use crate::linalg::SubspaceBasis;
use crate::orbits::{catalog, resolve_span, triple, OrbitCase};
use crate::roots::{
    adapted_diagrams, label_diagram, match_figure, root_system, simple_systems, verify_root_datum,
    RootSystem, WeightVector,
};
use crate::scalar::{fmt_rational, Rational, Scalar};
use crate::superalg::SuperAlgebra;
use crate::theorems::{count_labels, verify_theorem1, verify_theorem2, verify_theorem3, TheoremEntry};
use crate::AlgebraId;
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeMap;

pub const JSON_SCHEMA_VERSION: u32 = 1;

/// Everything needed to analyze cases of one algebra.
pub struct AlgebraContext {
    pub id: AlgebraId,
    pub alpha: Scalar,
    pub g: SuperAlgebra,
    pub sys: RootSystem,
    actions: BTreeMap<&'static str, GroupElementAction>,
}

impl AlgebraContext {
    /// `alpha` only affects D(2,1;alpha); None means the symbolic
    /// indeterminate.
    pub fn new(id: AlgebraId, alpha: Option<Rational>) -> Result<Self, Error> {
        let alpha = match alpha {
            Some(r) => Scalar::Rat(r),
            None => Scalar::alpha(),
        };
        let g = match id {
            AlgebraId::D21 => crate::builders::build_d21(&alpha)?,
            AlgebraId::G3 => crate::builders::build_g3()?,
            AlgebraId::F4 => crate::builders::build_f4()?,
        };
        let sys = root_system(id, &alpha);
        let mut actions = BTreeMap::new();
        actions.insert("grading", GroupElementAction::grading(&g));
        if id == AlgebraId::F4 {
            actions.insert("so7_flip", ActionKind::So7Flip.build(&g)?);
        }
        Ok(AlgebraContext {
            id,
            alpha,
            g,
            sys,
            actions,
        })
    }

    fn action(&self, kind: ActionKind) -> &GroupElementAction {
        match kind {
            ActionKind::Grading => &self.actions["grading"],
            ActionKind::So7Flip => &self.actions["so7_flip"],
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DiagramInfo {
    pub figure: String,
    /// Labels in the figure's node order.
    pub labels: Vec<i64>,
    /// Labels in the order of `system` (the adapted simple roots).
    pub system_labels: Vec<i64>,
    pub system: Vec<WeightVector>,
    pub text: String,
}

#[derive(Debug, Clone)]
pub struct CaseReport {
    pub algebra: String,
    pub case: String,
    pub dim_ge: usize,
    pub dim_z: usize,
    pub dim_fixed_z: usize,
    pub z_basis: Vec<String>,
    pub fixed_z_basis: Vec<String>,
    pub graded_dims: BTreeMap<i64, usize>,
    pub diagrams: Vec<DiagramInfo>,
    pub osp_modules: Vec<(i64, Vec<i64>)>,
    pub theorems: Vec<TheoremEntry>,
    pub checks: Vec<Check>,
}

impl CaseReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.theorems.iter().all(|t| t.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "algebra": self.algebra,
            "case": self.case,
            "dim_ge": self.dim_ge,
            "dim_z": self.dim_z,
            "dim_fixed_z": self.dim_fixed_z,
            "z_basis": self.z_basis,
            "fixed_z_basis": self.fixed_z_basis,
            "graded_dims": self.graded_dims.iter()
                .map(|(j, d)| json!([j, d])).collect::<Vec<_>>(),
            "diagrams": self.diagrams.iter().map(|d| json!({
                "figure": d.figure,
                "labels": d.labels,
                "simple_system": d.system.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "rendered": d.text,
            })).collect::<Vec<_>>(),
            "osp_modules": self.osp_modules.iter()
                .map(|(j, ws)| json!([j, ws])).collect::<Vec<_>>(),
            "theorems": self.theorems.iter().map(|t| json!({
                "theorem": t.theorem,
                "applicable": t.applicable,
                "passed": t.passed,
                "details": t.details,
            })).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name, "passed": c.passed, "detail": c.detail,
            })).collect::<Vec<_>>(),
            "all_passed": self.all_passed(),
        })
    }
}

fn describe_basis(g: &SuperAlgebra, s: &SubspaceBasis) -> Vec<String> {
    s.vectors()
        .iter()
        .map(|v| g.describe(&g.element(v.clone())))
        .collect()
}

/// Full pipeline for one orbit case.
pub fn analyze_case(ctx: &AlgebraContext, case: &OrbitCase) -> Result<CaseReport, Error> {
    let g = &ctx.g;
    let mut checks = Vec::new();

    // sl(2)-triple relations are asserted by construction
    let t = triple(g, case)?;
    let e = &t.e;
    let h = &t.h;

    // centralizer and golden comparison
    let ge = centralizer(g, e);
    checks.push(Check::new(
        "dim_ge",
        ge.dim() == case.expected.dim_ge,
        format!("computed {} expected {}", ge.dim(), case.expected.dim_ge),
    ));
    checks.push(Check::new(
        "ge_contains_e",
        ge.contains(&e.coords),
        "e lies in its own centralizer",
    ));
    checks.push(Check::new(
        "ge_bracket_closed",
        g.is_bracket_closed(&ge),
        "g^e closed under the bracket",
    ));
    if let Some(basis) = &case.expected.ge_basis {
        let expected = resolve_span(g, basis);
        checks.push(Check::new(
            "ge_matches_table",
            expected == ge,
            format!("expected span of {} vectors", basis.len()),
        ));
    } else {
        checks.push(Check::new(
            "ge_matches_table",
            ge.dim() == g.dim(),
            "g^0 is the whole algebra",
        ));
    }

    // centre
    let z = centre_of(g, &ge)?;
    let expected_z = resolve_span(g, &case.expected.z_basis);
    checks.push(Check::new(
        "z_matches_table",
        z == expected_z,
        format!("computed dim {} expected dim {}", z.dim(), expected_z.dim()),
    ));

    // fixed points under the bundled component actions
    let actions: Vec<GroupElementAction> = case
        .expected
        .actions
        .iter()
        .map(|&k| ctx.action(k).clone())
        .collect();
    let mut fixed = fixed_points(g, &z, &actions)?;
    if case.expected.centre_sign {
        // the representative is not rational; the reduction on the centre
        // is bundled data, cross-checked here and certified by the
        // g2_flip_oracle test
        let bundled = resolve_span(
            g,
            case.expected
                .fixed_z_basis
                .as_ref()
                .expect("centre_sign cases bundle fixed_z"),
        );
        checks.push(Check::new(
            "centre_sign_span",
            z.contains_subspace(&bundled)
                && bundled.contains(&e.coords)
                && bundled.dim() + 1 == z.dim(),
            "bundled invariant span sits inside z with codimension 1",
        ));
        fixed = fixed.intersect(&bundled)?;
    }
    let expected_fixed = match &case.expected.fixed_z_basis {
        Some(b) => resolve_span(g, b),
        None => expected_z.clone(),
    };
    checks.push(Check::new(
        "fixed_z_matches_table",
        fixed == expected_fixed,
        format!(
            "computed dim {} expected dim {}",
            fixed.dim(),
            expected_fixed.dim()
        ),
    ));

    // grading of g^e
    let graded = grade(g, &ge, h)?;
    let graded_dims = graded.dims();
    if !case.expected.graded.is_empty() {
        let expected: BTreeMap<i64, usize> = case
            .expected
            .graded
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&j, &d)| (j, d))
            .collect();
        checks.push(Check::new(
            "graded_dims",
            graded_dims == expected,
            format!("computed {graded_dims:?} expected {expected:?}"),
        ));
    }
    checks.push(Check::new(
        "grading_nonnegative",
        graded_dims.keys().all(|&j| j >= 0),
        "g^e is concentrated in nonnegative degrees",
    ));

    // labelled Dynkin diagrams adapted to h
    let found = adapted_diagrams(g, &ctx.sys, h)?;
    let mut diagrams = Vec::new();
    let mut computed_pairs = Vec::new();
    let mut label_sums = Vec::new();
    for (pi, d) in &found {
        let (figure, labels) = match_figure(&ctx.sys, g, d)?;
        let system_labels = d
            .integer_labels()
            .ok_or_else(|| Error::BadLadder("non-integer labels".into()))?;
        label_sums.push(labels.iter().sum::<i64>());
        computed_pairs.push((figure.clone(), labels.clone()));
        diagrams.push(DiagramInfo {
            figure,
            labels,
            system_labels,
            system: pi.clone(),
            text: d.render_text(),
        });
    }
    let mut expected_pairs = case.expected.diagrams.clone();
    let mut sorted_computed = computed_pairs.clone();
    expected_pairs.sort();
    sorted_computed.sort();
    checks.push(Check::new(
        "diagrams_match_table",
        sorted_computed == expected_pairs,
        format!("computed {sorted_computed:?} expected {expected_pairs:?}"),
    ));
    let labels_in_range = diagrams
        .iter()
        .all(|d| d.labels.iter().all(|&l| (0..=2).contains(&l)));
    checks.push(Check::new(
        "labels_in_range",
        labels_in_range,
        "every label lies in {0,1,2}",
    ));

    // osp(1|2) recognition and module decompositions
    let mut osp_modules = Vec::new();
    if case.expected.recognize {
        let zero_piece = graded.piece(0);
        let assignment = recognize_osp12(g, &zero_piece)?;
        checks.push(Check::new(
            "osp12_recognized",
            assignment.is_some(),
            "g^e(0) carries the osp(1|2) bracket pattern",
        ));
        if let Some(asn) = assignment {
            if let Some(expected) = &case.expected.osp_assignment {
                let got = [
                    &asn.u_minus2,
                    &asn.u_minus1,
                    &asn.u_zero,
                    &asn.u_plus1,
                    &asn.u_plus2,
                ];
                let ok = expected.iter().zip(got).all(|(terms, el)| {
                    let want = crate::orbits::resolve(g, terms);
                    proportional(&el.coords, &want.coords).is_some()
                });
                checks.push(Check::new(
                    "osp12_assignment",
                    ok,
                    "generators proportional to the bundled assignment",
                ));
            }
            for (piece, expected_weights) in &case.expected.osp {
                let part = graded.piece(*piece);
                let mut ws = decompose_osp_module(g, &part, &asn.u_zero)?;
                ws.sort_unstable();
                let mut expect = expected_weights.clone();
                expect.sort_unstable();
                checks.push(Check::new(
                    format!("osp_modules_{piece}"),
                    ws == expect,
                    format!("computed {ws:?} expected {expect:?}"),
                ));
                osp_modules.push((*piece, ws));
            }
        }
    }

    // theorems
    let counts = count_labels(&diagrams[0].labels)?;
    let mut theorems = Vec::new();
    theorems.push(verify_theorem1(g, case, h, &counts, fixed.dim())?);
    for d in &diagrams {
        theorems.push(verify_theorem2(
            g,
            &ctx.sys,
            case,
            &d.figure,
            &d.system,
            &d.system_labels,
            ge.dim(),
            fixed.dim(),
        )?);
    }
    theorems.push(verify_theorem3(case, &label_sums, fixed.dim()));

    Ok(CaseReport {
        algebra: ctx.id.name().into(),
        case: case.name.clone(),
        dim_ge: ge.dim(),
        dim_z: z.dim(),
        dim_fixed_z: fixed.dim(),
        z_basis: describe_basis(g, &z),
        fixed_z_basis: describe_basis(g, &fixed),
        graded_dims,
        diagrams,
        osp_modules,
        theorems,
        checks,
    })
}

/// Analyze every cataloged case; parallel unless `serial`. Output order
/// is the catalog order either way.
pub fn analyze_all(ctx: &AlgebraContext, serial: bool) -> Result<Vec<CaseReport>, Error> {
    let cases = catalog(ctx.id)?;
    if serial {
        cases.iter().map(|c| analyze_case(ctx, c)).collect()
    } else {
        cases
            .par_iter()
            .map(|c| analyze_case(ctx, c))
            .collect::<Result<Vec<_>, _>>()
    }
}

/// Structural verification: axioms, root data, the Clifford/spin-table
/// cross-check and pairing-table antisymmetry, plus the sl(2) relations
/// of every cataloged triple.
pub fn verify_algebra(ctx: &AlgebraContext) -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();
    let report = ctx.g.verify_axioms();
    checks.push(Check::new(
        "axioms",
        report.passed(),
        format!("{} violations", report.violations.len()),
    ));
    checks.push(Check::new(
        "root_datum",
        verify_root_datum(&ctx.g, &ctx.sys).is_ok(),
        "root vectors are simultaneous Cartan eigenvectors; simple systems generate",
    ));
    match ctx.id {
        AlgebraId::G3 => {
            let tables = crate::builders::G3Tables::load()?;
            let bad = tables.check_p7_antisymmetry();
            checks.push(Check::new(
                "p7_antisymmetry",
                bad.is_empty(),
                format!("offending cells: {bad:?}"),
            ));
        }
        AlgebraId::F4 => {
            let tables = crate::builders::F4Tables::load()?;
            let bad = tables.check_p8_antisymmetry();
            checks.push(Check::new(
                "p8_antisymmetry",
                bad.is_empty(),
                format!("offending cells: {bad:?}"),
            ));
            let oracle = crate::builders::clifford_oracle();
            let table = crate::builders::spin_action_table()?;
            checks.push(Check::new(
                "spin_table_equals_clifford_oracle",
                oracle == table,
                "all 21 x 8 entries agree",
            ));
        }
        AlgebraId::D21 => {}
    }
    for case in catalog(ctx.id)? {
        let ok = triple(&ctx.g, &case).is_ok();
        checks.push(Check::new(
            format!("sl2_triple_{}", case.name),
            ok,
            "[h,e] = 2e, [h,f] = -2f, [e,f] = h",
        ));
    }
    Ok(checks)
}

pub fn reports_to_json(ctx: &AlgebraContext, reports: &[CaseReport]) -> serde_json::Value {
    json!({
        "schema_version": JSON_SCHEMA_VERSION,
        "algebra": ctx.id.name(),
        "alpha": match &ctx.alpha {
            Scalar::Rat(r) => json!(fmt_rational(r)),
            _ => json!("symbolic"),
        },
        "cases": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    })
}

/// Markdown table structurally mirroring the result tables.
pub fn reports_to_markdown(ctx: &AlgebraContext, reports: &[CaseReport]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# {} orbit cases\n\n| e | dim g^e | z(g^e) | dim (z)^Ge | labelled diagrams |\n|---|---|---|---|---|\n",
        ctx.id.name()
    ));
    for r in reports {
        let z = if r.z_basis.is_empty() {
            "0".to_string()
        } else {
            r.z_basis.join(", ")
        };
        let diags = r
            .diagrams
            .iter()
            .map(|d| {
                format!(
                    "{}: {}",
                    d.figure,
                    d.labels
                        .iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect::<Vec<_>>()
            .join("; ");
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            r.case, r.dim_ge, z, r.dim_fixed_z, diags
        ));
    }
    out.push_str("\n## Theorem outcomes\n\n");
    for r in reports {
        for t in &r.theorems {
            if !t.applicable {
                continue;
            }
            out.push_str(&format!(
                "- {} {}: {} ({})\n",
                r.case,
                t.theorem,
                if t.passed { "pass" } else { "FAIL" },
                t.details
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
    }
    out
}

/// The bundled simple systems with their computed labels for one h --
/// exposes the label computation for every bundled system directly.
pub fn bundled_system_labels(
    ctx: &AlgebraContext,
    case: &OrbitCase,
) -> Result<Vec<(String, Vec<Scalar>)>, Error> {
    let h = case.h(&ctx.g);
    let mut out = Vec::new();
    for sys in simple_systems(ctx.id) {
        match label_diagram(&ctx.g, &ctx.sys, &sys.roots, &h) {
            Ok(d) => out.push((sys.name, d.labels())),
            Err(Error::NotEigenvector(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
