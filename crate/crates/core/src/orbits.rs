//! The bundled catalog of nilpotent orbit representatives: each case
//! carries e, its sl(2)-partner h (f is derived, not transcribed) and
//! the expected values for the golden tests.

use crate::actions::ActionKind;
use crate::data::{parse_sections, parse_terms, Section};
use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::{Rational, Scalar};
use crate::superalg::{Element, SuperAlgebra};
use crate::AlgebraId;
use std::collections::BTreeMap;

pub type Terms = Vec<(Rational, String)>;

#[derive(Debug, Clone)]
pub struct SL2Triple {
    pub e: Element,
    pub h: Element,
    pub f: Element,
}

#[derive(Debug, Clone)]
pub enum E0Spec {
    /// No 2-labels: g0 = g and e0 = e.
    Same,
    /// The 2-free core is an all-zero diagram.
    Zero,
    /// A frozen witness inside g0, found by a one-time offline search.
    Witness(Terms),
}

#[derive(Debug, Clone)]
pub struct OrbitExpected {
    pub dim_ge: usize,
    /// None means the whole algebra.
    pub ge_basis: Option<Vec<Terms>>,
    pub z_basis: Vec<Terms>,
    /// None means fixed-z equals z.
    pub fixed_z_basis: Option<Vec<Terms>>,
    pub diagrams: Vec<(String, Vec<i64>)>,
    pub graded: BTreeMap<i64, usize>,
    /// osp(1|2) module decompositions: piece -> highest weights (2m+1 dims).
    pub osp: Vec<(i64, Vec<i64>)>,
    pub recognize: bool,
    pub osp_assignment: Option<Vec<Terms>>,
    pub epsilon: i64,
    pub e0: E0Spec,
    /// (dim g0^e0, dim z(g0^e0), dim fixed z0) when stated.
    pub e0_dims: Option<(usize, usize, usize)>,
    pub actions: Vec<ActionKind>,
    /// The component group acts on the centre by the sign character on
    /// the non-e direction; its representative is not rational, so the
    /// reduction is bundled (see the g2_flip_oracle test).
    pub centre_sign: bool,
}

#[derive(Debug, Clone)]
pub struct OrbitCase {
    pub algebra: String,
    pub name: String,
    pub e_terms: Terms,
    pub h_terms: Terms,
    pub expected: OrbitExpected,
}

impl OrbitCase {
    pub fn e(&self, g: &SuperAlgebra) -> Element {
        resolve(g, &self.e_terms)
    }

    pub fn h(&self, g: &SuperAlgebra) -> Element {
        resolve(g, &self.h_terms)
    }
}

pub fn resolve(g: &SuperAlgebra, terms: &Terms) -> Element {
    let combo: Vec<(Scalar, &str)> = terms
        .iter()
        .map(|(c, n)| (Scalar::Rat(c.clone()), n.as_str()))
        .collect();
    g.combo(&combo)
}

pub fn resolve_span(g: &SuperAlgebra, elements: &[Terms]) -> crate::linalg::SubspaceBasis {
    crate::linalg::SubspaceBasis::from_vectors(
        g.dim(),
        elements.iter().map(|t| resolve(g, t).coords).collect(),
    )
}

fn parse_elements(value: &str, file: &str) -> Result<Vec<Terms>, Error> {
    if value.trim() == "0" {
        return Ok(vec![]);
    }
    value
        .split('|')
        .map(|part| parse_terms(part, file))
        .collect()
}

fn parse_case(section: &Section) -> Result<OrbitCase, Error> {
    const FILE: &str = "orbits.catalog";
    let err = |detail: String| Error::Table {
        file: FILE.into(),
        detail,
    };
    let algebra = section.header[1].clone();
    let name = section.header[2].clone();
    let field = |key: &str| {
        section
            .get(key)
            .ok_or_else(|| err(format!("case {name}: missing {key}")))
    };
    let e_terms = parse_terms(field("e")?, FILE)?;
    let h_terms = parse_terms(field("h")?, FILE)?;
    let dim_ge: usize = field("dim_ge")?
        .parse()
        .map_err(|_| err(format!("case {name}: bad dim_ge")))?;
    let ge_basis = match field("ge")? {
        "ALL" => None,
        other => Some(parse_elements(other, FILE)?),
    };
    let z_basis = match section.get("z") {
        Some(v) => parse_elements(v, FILE)?,
        None => vec![],
    };
    let fixed_z_basis = section
        .get("fixed_z")
        .map(|v| parse_elements(v, FILE))
        .transpose()?;
    let mut diagrams = Vec::new();
    if let Some(v) = section.get("diagrams") {
        for part in v.split('|') {
            let (fig, labels) = part
                .split_once('=')
                .ok_or_else(|| err(format!("case {name}: bad diagram entry {part:?}")))?;
            let labels: Vec<i64> = labels
                .split(',')
                .map(|l| l.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| err(format!("case {name}: bad labels in {part:?}")))?;
            diagrams.push((fig.trim().to_string(), labels));
        }
    }
    let mut graded = BTreeMap::new();
    if let Some(v) = section.get("graded") {
        for tok in v.split_whitespace() {
            let (j, d) = tok
                .split_once(':')
                .ok_or_else(|| err(format!("case {name}: bad graded token {tok:?}")))?;
            graded.insert(
                j.parse::<i64>()
                    .map_err(|_| err(format!("case {name}: bad eigenvalue {j:?}")))?,
                d.parse::<usize>()
                    .map_err(|_| err(format!("case {name}: bad dimension {d:?}")))?,
            );
        }
    }
    let mut osp = Vec::new();
    if let Some(v) = section.get("osp") {
        for part in v.split('|') {
            let (piece, weights) = part
                .trim()
                .split_once(':')
                .ok_or_else(|| err(format!("case {name}: bad osp entry {part:?}")))?;
            let ws: Vec<i64> = weights
                .split(',')
                .map(|w| w.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| err(format!("case {name}: bad osp weights {part:?}")))?;
            osp.push((
                piece
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("case {name}: bad osp piece {part:?}")))?,
                ws,
            ));
        }
    }
    let recognize = section.get("recognize") == Some("true");
    let osp_assignment = match section.get("osp_assignment") {
        Some(v) => {
            let els = parse_elements(v, FILE)?;
            if els.len() != 5 {
                return Err(err(format!(
                    "case {name}: osp_assignment needs 5 elements"
                )));
            }
            Some(els)
        }
        None => None,
    };
    let epsilon: i64 = section
        .get("epsilon")
        .unwrap_or("0")
        .parse()
        .map_err(|_| err(format!("case {name}: bad epsilon")))?;
    let e0 = match section.get("e0") {
        None | Some("same") => E0Spec::Same,
        Some("zero") => E0Spec::Zero,
        Some(expr) => E0Spec::Witness(parse_terms(expr, FILE)?),
    };
    let e0_dims = match (
        section.get("e0_dim"),
        section.get("e0_z_dim"),
        section.get("e0_fixed_dim"),
    ) {
        (Some(a), Some(b), Some(c)) => Some((
            a.parse().map_err(|_| err("bad e0_dim".into()))?,
            b.parse().map_err(|_| err("bad e0_z_dim".into()))?,
            c.parse().map_err(|_| err("bad e0_fixed_dim".into()))?,
        )),
        (None, None, None) => None,
        _ => return Err(err(format!("case {name}: incomplete e0 dims"))),
    };
    let mut actions = Vec::new();
    let mut centre_sign = false;
    if let Some(v) = section.get("actions") {
        for tok in v.split_whitespace() {
            if tok == "g2_sign" {
                centre_sign = true;
            } else {
                actions.push(ActionKind::parse(tok)?);
            }
        }
    }
    Ok(OrbitCase {
        algebra,
        name,
        e_terms,
        h_terms,
        expected: OrbitExpected {
            dim_ge,
            ge_basis,
            z_basis,
            fixed_z_basis,
            diagrams,
            graded,
            osp,
            recognize,
            osp_assignment,
            epsilon,
            e0,
            e0_dims,
            actions,
            centre_sign,
        },
    })
}

fn load_all() -> Result<Vec<OrbitCase>, Error> {
    let text = include_str!("../data/orbits.catalog");
    let sections = parse_sections(text, "orbits.catalog")?;
    sections
        .iter()
        .map(|s| {
            if s.header.len() != 3 || s.header[0] != "case" {
                return Err(Error::Table {
                    file: "orbits.catalog".into(),
                    detail: format!("bad section header {:?}", s.header),
                });
            }
            parse_case(s)
        })
        .collect()
}

/// Orbit cases for one of the three superalgebras, in catalog order.
pub fn catalog(alg: AlgebraId) -> Result<Vec<OrbitCase>, Error> {
    let key = match alg {
        AlgebraId::D21 => "d21",
        AlgebraId::G3 => "g3",
        AlgebraId::F4 => "f4",
    };
    let cases: Vec<OrbitCase> = load_all()?
        .into_iter()
        .filter(|c| c.algebra == key)
        .collect();
    if cases.is_empty() {
        return Err(Error::UnknownAlgebra(key.into()));
    }
    Ok(cases)
}

pub fn catalog_case(alg: AlgebraId, name: &str) -> Result<OrbitCase, Error> {
    catalog(alg)?
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCase {
            algebra: alg.name().into(),
            case: name.into(),
        })
}

/// The plain so(7) orbit cases (used for the centralizer-dimension table).
pub fn so7_catalog() -> Result<Vec<OrbitCase>, Error> {
    Ok(load_all()?
        .into_iter()
        .filter(|c| c.algebra == "so7")
        .collect())
}

/// Solve for f with [h,f] = -2f and [e,f] = h inside the (-2)-eigenspace
/// of ad h. Any solution is accepted; downstream quantities depend only
/// on e and h.
pub fn derive_f(g: &SuperAlgebra, e: &Element, h: &Element) -> Result<Element, Error> {
    let ad_h = g.ad_matrix(h);
    let vminus2 = SuperAlgebra::eigenspace(&ad_h, &Scalar::from_int(-2));
    let m = vminus2.dim();
    let mut sys = Matrix::zero(g.dim(), m);
    for (col, w) in vminus2.vectors().iter().enumerate() {
        let br = g.bracket(e, &g.element(w.to_vec()))?;
        sys.set_column(col, &br.coords);
    }
    let coeffs = sys
        .solve(&h.coords)
        .ok_or_else(|| Error::NoTriple(format!("no f for e = {}", g.describe(e))))?;
    let mut f = g.zero();
    for (c, w) in coeffs.iter().zip(vminus2.vectors()) {
        if !c.is_zero() {
            for (k, x) in w.iter().enumerate() {
                f.coords[k] = &f.coords[k] + &(c * x);
            }
        }
    }
    Ok(f)
}

/// Assert the three sl(2) relations for a cataloged case and return the
/// completed triple.
pub fn triple(g: &SuperAlgebra, case: &OrbitCase) -> Result<SL2Triple, Error> {
    let e = case.e(g);
    let h = case.h(g);
    let two_e: Vec<Scalar> = e.coords.iter().map(|c| c * &Scalar::from_int(2)).collect();
    if g.bracket(&h, &e)?.coords != two_e {
        return Err(Error::NoTriple(format!("case {}: [h,e] != 2e", case.name)));
    }
    let f = derive_f(g, &e, &h)?;
    let minus_two_f: Vec<Scalar> = f
        .coords
        .iter()
        .map(|c| c * &Scalar::from_int(-2))
        .collect();
    if g.bracket(&h, &f)?.coords != minus_two_f {
        return Err(Error::NoTriple(format!("case {}: [h,f] != -2f", case.name)));
    }
    if g.bracket(&e, &f)? != h {
        return Err(Error::NoTriple(format!("case {}: [e,f] != h", case.name)));
    }
    Ok(SL2Triple { e, h, f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_d21, build_f4, build_g3, build_so7};

    #[test]
    fn catalog_sizes() {
        assert_eq!(catalog(AlgebraId::D21).unwrap().len(), 4);
        assert_eq!(catalog(AlgebraId::G3).unwrap().len(), 10);
        assert_eq!(catalog(AlgebraId::F4).unwrap().len(), 14);
        assert_eq!(so7_catalog().unwrap().len(), 7);
        assert!(catalog_case(AlgebraId::G3, "nope").is_err());
    }

    #[test]
    fn sl2_in_sl2() {
        let g = crate::builders::build_sl2();
        let f = derive_f(&g, &g.basis_element("E"), &g.basis_element("H")).unwrap();
        assert_eq!(f, g.basis_element("F"));
        let z = derive_f(&g, &g.zero(), &g.zero()).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn d21_triples_and_derived_f() {
        let g = build_d21(&Scalar::alpha()).unwrap();
        for case in catalog(AlgebraId::D21).unwrap() {
            let t = triple(&g, &case).unwrap();
            if case.name == "E1+E2" {
                let expect = g.combo(&[(Scalar::one(), "F1"), (Scalar::one(), "F2")]);
                assert_eq!(t.f, expect);
            }
        }
    }

    #[test]
    fn g3_and_f4_triples() {
        let g3 = build_g3().unwrap();
        for case in catalog(AlgebraId::G3).unwrap() {
            triple(&g3, &case).unwrap();
        }
        let f4 = build_f4().unwrap();
        for case in catalog(AlgebraId::F4).unwrap() {
            triple(&f4, &case).unwrap();
        }
        let so7 = build_so7().unwrap();
        for case in so7_catalog().unwrap() {
            triple(&so7, &case).unwrap();
        }
    }

    #[test]
    fn e_lies_in_plus_two_eigenspace() {
        let g = build_g3().unwrap();
        for case in catalog(AlgebraId::G3).unwrap() {
            let (e, h) = (case.e(&g), case.h(&g));
            if e.is_zero() {
                continue;
            }
            let es = SuperAlgebra::eigenspace(&g.ad_matrix(&h), &Scalar::from_int(2));
            assert!(es.contains(&e.coords), "case {}", case.name);
        }
    }
}
