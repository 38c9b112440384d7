//! Centralizers g^e, centres z(g^e), ad h gradings, sl(2) and osp(1|2)
//! module decompositions, and fixed points under explicit component-group
//! elements.

use crate::error::Error;
use crate::linalg::{add_vec, scale_vec, Matrix, SubspaceBasis};
use crate::scalar::{Rational, Scalar};
use crate::superalg::{Element, Parity, SuperAlgebra};
use num_traits::Signed;
use std::collections::BTreeMap;

/// g^e = ker(ad e). Splits as even + odd automatically since e is even.
pub fn centralizer(g: &SuperAlgebra, e: &Element) -> SubspaceBasis {
    g.ad_matrix(e).kernel()
}

/// z(s) = {x in s : [x, b] = 0 for every basis vector b of s}.
/// Requires s to be bracket-closed.
pub fn centre_of(g: &SuperAlgebra, s: &SubspaceBasis) -> Result<SubspaceBasis, Error> {
    if !g.is_bracket_closed(s) {
        return Err(Error::NotBracketClosed);
    }
    let m = s.dim();
    if m == 0 {
        return Ok(SubspaceBasis::zero(g.dim()));
    }
    // stack the maps c -> [sum_i c_i s_i, b_j] over all basis vectors b_j
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let basis: Vec<Element> = s.vectors().iter().map(|v| g.element(v.clone())).collect();
    for b in &basis {
        let mut block = vec![vec![Scalar::zero(); m]; g.dim()];
        for (i, si) in basis.iter().enumerate() {
            let br = g.bracket(si, b)?;
            for (k, c) in br.coords.into_iter().enumerate() {
                block[k][i] = c;
            }
        }
        rows.extend(block);
    }
    let stacked = Matrix::from_rows(rows);
    let ker = stacked.kernel();
    let vectors: Vec<Vec<Scalar>> = ker
        .vectors()
        .iter()
        .map(|coeffs| {
            let mut v = vec![Scalar::zero(); g.dim()];
            for (c, si) in coeffs.iter().zip(s.vectors()) {
                if !c.is_zero() {
                    v = add_vec(&v, &scale_vec(c, si));
                }
            }
            v
        })
        .collect();
    Ok(SubspaceBasis::from_vectors(g.dim(), vectors))
}

/// An eigenvalue-indexed decomposition of a subspace under ad h.
#[derive(Debug, Clone)]
pub struct GradedSubspace {
    pub base: SubspaceBasis,
    pub pieces: BTreeMap<i64, SubspaceBasis>,
}

impl GradedSubspace {
    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.pieces
            .iter()
            .filter(|(_, s)| s.dim() > 0)
            .map(|(&j, s)| (j, s.dim()))
            .collect()
    }

    pub fn piece(&self, j: i64) -> SubspaceBasis {
        self.pieces
            .get(&j)
            .cloned()
            .unwrap_or_else(|| SubspaceBasis::zero(self.base.ambient_dim()))
    }
}

/// Integer eigenvalue candidates of ad h: the diagonal of the matrix plus
/// a fallback scan over [-20, 20].
fn eigenvalue_candidates(ad_h: &Matrix) -> Vec<i64> {
    let mut cands: Vec<i64> = Vec::new();
    for i in 0..ad_h.rows() {
        if let Some(r) = ad_h[(i, i)].as_rational() {
            if r.is_integer() {
                if let Ok(v) = i64::try_from(r.numer()) {
                    if !cands.contains(&v) {
                        cands.push(v);
                    }
                }
            }
        }
    }
    for v in -20..=20 {
        if !cands.contains(&v) {
            cands.push(v);
        }
    }
    cands
}

/// Decompose s into ad h eigenspace pieces. Errors when ad h does not
/// preserve s or when integer eigenvalues do not exhaust it.
pub fn grade(g: &SuperAlgebra, s: &SubspaceBasis, h: &Element) -> Result<GradedSubspace, Error> {
    let ad_h = g.ad_matrix(h);
    for v in s.vectors() {
        if !s.contains(&ad_h.mul_vec(v)) {
            return Err(Error::NotInvariant);
        }
    }
    let mut pieces = BTreeMap::new();
    let mut total = 0;
    for lambda in eigenvalue_candidates(&ad_h) {
        if total == s.dim() {
            break;
        }
        let es = SuperAlgebra::eigenspace(&ad_h, &Scalar::from_int(lambda));
        if es.dim() == 0 {
            continue;
        }
        let piece = s.intersect(&es)?;
        if piece.dim() > 0 {
            total += piece.dim();
            pieces.insert(lambda, piece);
        }
    }
    if total != s.dim() {
        return Err(Error::BadLadder(format!(
            "graded pieces cover {total} of {} dimensions",
            s.dim()
        )));
    }
    Ok(GradedSubspace {
        base: s.clone(),
        pieces,
    })
}

fn multiplicity_profile(
    g: &SuperAlgebra,
    s: &SubspaceBasis,
    h: &Element,
) -> Result<BTreeMap<i64, usize>, Error> {
    let graded = grade(g, s, h)?;
    Ok(graded.pieces.iter().map(|(&j, p)| (j, p.dim())).collect())
}

/// Highest weights {d_i} of the sl(2)-module s, by peeling eigenvalue
/// multiplicities of ad h: a module with highest weight d contributes the
/// ladder d, d-2, ..., -d.
pub fn decompose_sl2_module(
    g: &SuperAlgebra,
    s: &SubspaceBasis,
    h: &Element,
) -> Result<Vec<i64>, Error> {
    peel(multiplicity_profile(g, s, h)?, 2, s.dim())
}

/// Highest u0-eigenvalues of the osp(1|2)-module s. A reported module
/// with highest weight m contributes the full ladder m, m-1, ..., -m
/// (dimension 2m+1, the integer labelling of the result tables).
pub fn decompose_osp_module(
    g: &SuperAlgebra,
    s: &SubspaceBasis,
    u0: &Element,
) -> Result<Vec<i64>, Error> {
    peel(multiplicity_profile(g, s, u0)?, 1, s.dim())
}

fn peel(profile: BTreeMap<i64, usize>, step: i64, total_dim: usize) -> Result<Vec<i64>, Error> {
    let mult = |t: i64| profile.get(&t).copied().unwrap_or(0);
    for (&t, &m) in &profile {
        if mult(-t) != m {
            return Err(Error::BadLadder(format!(
                "asymmetric multiplicities at {t}: {m} vs {}",
                mult(-t)
            )));
        }
    }
    let mut out = Vec::new();
    let mut accounted = 0usize;
    let top = profile.keys().map(|&t| t.abs()).max().unwrap_or(0);
    for d in (0..=top).rev() {
        let c = mult(d) as i64 - mult(d + step) as i64;
        if c < 0 {
            return Err(Error::BadLadder(format!(
                "negative module count at weight {d}"
            )));
        }
        let piece_dim = if step == 2 { d + 1 } else { 2 * d + 1 };
        for _ in 0..c {
            out.push(d);
            accounted += usize::try_from(piece_dim).unwrap();
        }
    }
    out.sort_unstable();
    if accounted != total_dim {
        return Err(Error::BadLadder(format!(
            "modules account for {accounted} of {total_dim} dimensions"
        )));
    }
    Ok(out)
}

/// Generators u_{-2}, u_{-1}, u_0, u_1, u_2 witnessing an osp(1|2)
/// structure on a 5-dimensional subalgebra.
#[derive(Debug, Clone)]
pub struct Osp12Assignment {
    pub u_minus2: Element,
    pub u_minus1: Element,
    pub u_zero: Element,
    pub u_plus1: Element,
    pub u_plus2: Element,
}

/// v = c w for a nonzero scalar c?
pub fn proportional(v: &[Scalar], w: &[Scalar]) -> Option<Scalar> {
    let pivot = w.iter().position(|x| !x.is_zero())?;
    if v[pivot].is_zero() {
        return None;
    }
    let c = v[pivot].field_div(&w[pivot]).ok()?;
    let ok = v.iter().zip(w).all(|(a, b)| *a == &c * b);
    ok.then_some(c)
}

/// Search for a basis matching the simple osp(1|2) bracket pattern:
/// [u0, u_i] = a_i u_i, [u1, u1] = a u2, [u-1, u-1] = b u-2,
/// [u2, u-2] = c u0 with a_i, a, b, c all nonzero. Returns None when the
/// pattern cannot be realized. u0 is normalized so that [u0, u1] = u1.
pub fn recognize_osp12(
    g: &SuperAlgebra,
    s: &SubspaceBasis,
) -> Result<Option<Osp12Assignment>, Error> {
    if s.dim() != 5 {
        return Ok(None);
    }
    let even = s.intersect(&g.parity_block(Parity::Even))?;
    let odd = s.intersect(&g.parity_block(Parity::Odd))?;
    if even.dim() != 3 || odd.dim() != 2 {
        return Ok(None);
    }
    let b0 = g.element(odd.vectors()[0].clone());
    let b1 = g.element(odd.vectors()[1].clone());
    let sum = g.element(add_vec(&b0.coords, &b1.coords));
    let diff = g.element(
        b0.coords
            .iter()
            .zip(&b1.coords)
            .map(|(x, y)| x - y)
            .collect(),
    );
    let candidates: Vec<(Element, Element)> = vec![
        (b0.clone(), b1.clone()),
        (b1, b0),
        (sum.clone(), diff.clone()),
        (diff, sum),
    ];
    for (w1, w2) in candidates {
        let u2 = g.bracket(&w1, &w1)?;
        let um2 = g.bracket(&w2, &w2)?;
        if u2.is_zero() || um2.is_zero() {
            continue;
        }
        let u0 = g.bracket(&u2, &um2)?;
        if u0.is_zero() {
            continue;
        }
        let a1 = match proportional(&g.bracket(&u0, &w1)?.coords, &w1.coords) {
            Some(c) if !c.is_zero() => c,
            _ => continue,
        };
        let others = [
            (g.bracket(&u0, &w2)?, &w2),
            (g.bracket(&u0, &u2)?, &u2),
            (g.bracket(&u0, &um2)?, &um2),
        ];
        if others.iter().any(|(br, v)| {
            proportional(&br.coords, &v.coords)
                .filter(|c| !c.is_zero())
                .is_none()
        }) {
            continue;
        }
        let span = SubspaceBasis::from_vectors(
            g.dim(),
            vec![
                um2.coords.clone(),
                w2.coords.clone(),
                u0.coords.clone(),
                w1.coords.clone(),
                u2.coords.clone(),
            ],
        );
        if span.dim() != 5 || !s.contains_subspace(&span) {
            continue;
        }
        let inv = a1.inverse()?;
        let u0 = g.element(scale_vec(&inv, &u0.coords));
        return Ok(Some(Osp12Assignment {
            u_minus2: um2,
            u_minus1: w2,
            u_zero: u0,
            u_plus1: w1,
            u_plus2: u2,
        }));
    }
    Ok(None)
}

/// An algebra automorphism given by blocks on the even and odd
/// coordinates; asserted to respect the bracket on construction.
#[derive(Debug, Clone)]
pub struct GroupElementAction {
    pub name: String,
    matrix: Matrix,
}

impl GroupElementAction {
    pub fn from_blocks(
        name: impl Into<String>,
        g: &SuperAlgebra,
        even: &Matrix,
        odd: &Matrix,
    ) -> Result<Self, Error> {
        let (ne, no) = (g.even_dim(), g.odd_dim());
        assert_eq!((even.rows(), even.cols()), (ne, ne));
        assert_eq!((odd.rows(), odd.cols()), (no, no));
        let mut m = Matrix::zero(g.dim(), g.dim());
        for i in 0..ne {
            for j in 0..ne {
                m[(i, j)] = even[(i, j)].clone();
            }
        }
        for i in 0..no {
            for j in 0..no {
                m[(ne + i, ne + j)] = odd[(i, j)].clone();
            }
        }
        let action = GroupElementAction {
            name: name.into(),
            matrix: m,
        };
        action.assert_automorphism(g)?;
        Ok(action)
    }

    /// The grading automorphism: +1 on the even part, -1 on the odd part
    /// (the action of -1 in an SL2 factor).
    pub fn grading(g: &SuperAlgebra) -> Self {
        let mut m = Matrix::identity(g.dim());
        for i in g.even_dim()..g.dim() {
            m[(i, i)] = Scalar::from_int(-1);
        }
        GroupElementAction {
            name: "grading".into(),
            matrix: m,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Vec<Scalar> {
        self.matrix.mul_vec(&x.coords)
    }

    /// A [x, y] = [A x, A y] on all basis pairs.
    pub fn assert_automorphism(&self, g: &SuperAlgebra) -> Result<(), Error> {
        let n = g.dim();
        let images: Vec<Element> = (0..n)
            .map(|i| g.element(self.apply(&g.basis_element(&g.labels()[i].name))))
            .collect();
        for i in 0..n {
            let bi = g.basis_element(&g.labels()[i].name);
            for j in 0..n {
                let bj = g.basis_element(&g.labels()[j].name);
                let lhs = self.matrix.mul_vec(&g.bracket(&bi, &bj)?.coords);
                let rhs = g.bracket(&images[i], &images[j])?.coords;
                if lhs != rhs {
                    return Err(Error::Construction {
                        algebra: g.name().into(),
                        detail: format!(
                            "{} is not an automorphism at pair ({}, {})",
                            self.name,
                            g.labels()[i].name,
                            g.labels()[j].name
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn fixes(&self, x: &Element) -> bool {
        self.apply(x) == x.coords
    }
}

/// Intersection of s with the fixed spaces of all actions. Each action
/// must map s into itself.
pub fn fixed_points(
    g: &SuperAlgebra,
    s: &SubspaceBasis,
    actions: &[GroupElementAction],
) -> Result<SubspaceBasis, Error> {
    let mut acc = s.clone();
    for a in actions {
        for v in s.vectors() {
            if !s.contains(&a.matrix.mul_vec(v)) {
                return Err(Error::NotPreserved);
            }
        }
        let fixed = a.matrix.sub(&Matrix::identity(g.dim())).kernel();
        acc = acc.intersect(&fixed)?;
    }
    Ok(acc)
}

/// Integer value of a rational scalar (used for catalog eigenvalues).
pub fn as_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.numer()).ok()
    } else {
        None
    }
}

pub fn is_positive_rational(r: &Rational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_d21, build_sl2};

    #[test]
    fn centralizer_of_zero_is_everything() {
        let g = build_sl2();
        let c = centralizer(&g, &g.zero());
        assert_eq!(c.dim(), 3);
    }

    #[test]
    fn sl2_centralizer_of_e() {
        let g = build_sl2();
        let c = centralizer(&g, &g.basis_element("E"));
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&g.basis_element("E").coords));
    }

    #[test]
    fn centre_of_abelian_is_itself() {
        let g = build_d21(&Scalar::alpha()).unwrap();
        let s = SubspaceBasis::from_vectors(
            g.dim(),
            vec![g.basis_element("E1").coords, g.basis_element("E2").coords],
        );
        let z = centre_of(&g, &s).unwrap();
        assert_eq!(z, s);
    }

    #[test]
    fn centre_requires_closure() {
        let g = build_sl2();
        let s = SubspaceBasis::from_vectors(
            g.dim(),
            vec![g.basis_element("E").coords, g.basis_element("F").coords],
        );
        assert!(matches!(centre_of(&g, &s), Err(Error::NotBracketClosed)));
    }

    #[test]
    fn grade_sl2_adjoint() {
        let g = build_sl2();
        let all = SubspaceBasis::full(3);
        let graded = grade(&g, &all, &g.basis_element("H")).unwrap();
        assert_eq!(graded.dims(), BTreeMap::from([(-2, 1), (0, 1), (2, 1)]));
        let d = decompose_sl2_module(&g, &all, &g.basis_element("H")).unwrap();
        assert_eq!(d, vec![2]);
    }

    #[test]
    fn grade_zero_h_single_piece() {
        let g = build_sl2();
        let all = SubspaceBasis::full(3);
        let graded = grade(&g, &all, &g.zero()).unwrap();
        assert_eq!(graded.dims(), BTreeMap::from([(0, 3)]));
    }

    #[test]
    fn empty_osp_module() {
        let g = build_sl2();
        let empty = SubspaceBasis::zero(3);
        let d = decompose_osp_module(&g, &empty, &g.basis_element("H")).unwrap();
        assert!(d.is_empty());
    }

    #[test]
    fn g3_odd_part_under_sl2_factor_is_seven_doublets() {
        let g = crate::builders::build_g3().unwrap();
        let odd = g.parity_block(crate::superalg::Parity::Odd);
        let d = decompose_sl2_module(&g, &odd, &g.basis_element("H")).unwrap();
        assert_eq!(d, vec![1; 7]);
    }

    #[test]
    fn fixed_points_of_empty_action_list() {
        let g = build_sl2();
        let s = SubspaceBasis::full(3);
        assert_eq!(fixed_points(&g, &s, &[]).unwrap(), s);
    }

    #[test]
    fn grading_action_is_an_automorphism() {
        let g = build_d21(&Scalar::alpha()).unwrap();
        let a = GroupElementAction::grading(&g);
        a.assert_automorphism(&g).unwrap();
        let fixed = fixed_points(&g, &SubspaceBasis::full(g.dim()), &[a]).unwrap();
        assert_eq!(fixed.dim(), g.even_dim());
    }

    #[test]
    fn recognize_osp12_on_d21_centralizer_zero_piece() {
        // g^{E1+E2}(0) in D(2,1;a) is osp(1|2) with the assignment
        // (F3, v(1,-1,-1)-v(-1,1,-1), H3, v(1,-1,1)-v(-1,1,1), E3)
        let a = Scalar::alpha();
        let g = build_d21(&a).unwrap();
        let e = g.combo(&[(Scalar::one(), "E1"), (Scalar::one(), "E2")]);
        let h = g.combo(&[(Scalar::one(), "H1"), (Scalar::one(), "H2")]);
        let ge = centralizer(&g, &e);
        assert_eq!(ge.dim(), 9);
        let graded = grade(&g, &ge, &h).unwrap();
        let zero_piece = graded.piece(0);
        assert_eq!(zero_piece.dim(), 5);
        let asn = recognize_osp12(&g, &zero_piece).unwrap().expect("osp(1|2)");
        assert_eq!(asn.u_zero, g.basis_element("H3"));
        let e3 = g.basis_element("E3");
        assert!(proportional(&asn.u_plus2.coords, &e3.coords).is_some());
        let f3 = g.basis_element("F3");
        assert!(proportional(&asn.u_minus2.coords, &f3.coords).is_some());
        let u1_expect = g.combo(&[
            (Scalar::one(), "v(1,-1,1)"),
            (-Scalar::one(), "v(-1,1,1)"),
        ]);
        assert!(proportional(&asn.u_plus1.coords, &u1_expect.coords).is_some());
        // e = E1+E2 lies in z(g^e)
        let z = centre_of(&g, &ge).unwrap();
        assert!(z.contains(&e.coords));
        assert_eq!(z.dim(), 1);
    }

    #[test]
    fn osp_recognition_rejects_abelian_odd_part() {
        // sl(2) + 2-dim odd with zero odd brackets: condition (2) fails
        use crate::superalg::{AlgebraBuilder, Parity};
        let mut b = AlgebraBuilder::new(
            "fake",
            vec![
                ("E".into(), Parity::Even),
                ("H".into(), Parity::Even),
                ("F".into(), Parity::Even),
                ("w1".into(), Parity::Odd),
                ("w2".into(), Parity::Odd),
            ],
        );
        let two = Scalar::from_int(2);
        b.set_terms("H", "E", &[(two.clone(), "E")]);
        b.set_terms("E", "H", &[(-&two, "E")]);
        b.set_terms("H", "F", &[(-&two, "F")]);
        b.set_terms("F", "H", &[(two, "F")]);
        b.set_terms("E", "F", &[(Scalar::one(), "H")]);
        b.set_terms("F", "E", &[(-Scalar::one(), "H")]);
        b.set_terms("H", "w1", &[(Scalar::one(), "w1")]);
        b.set_terms("w1", "H", &[(-Scalar::one(), "w1")]);
        b.set_terms("H", "w2", &[(-Scalar::one(), "w2")]);
        b.set_terms("w2", "H", &[(Scalar::one(), "w2")]);
        let g = b.finish();
        let s = SubspaceBasis::full(5);
        assert!(recognize_osp12(&g, &s).unwrap().is_none());
    }
}
