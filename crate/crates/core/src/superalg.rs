//! Structure-constant model of a finite-dimensional Lie superalgebra:
//! parity-graded basis, super bracket, ad operators and verification of
//! the graded axioms. The bracket table is stored densely for every
//! ordered pair; graded antisymmetry is stored redundantly and then
//! checked, which catches transcription errors in the source tables.

use crate::error::Error;
use crate::linalg::{is_zero_vec, Matrix, SubspaceBasis};
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn product(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisLabel {
    pub name: String,
    pub parity: Parity,
}

/// An element given by coordinates in the basis of its parent algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub algebra: String,
    pub coords: Vec<Scalar>,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }
}

/// A violated axiom, reported with basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    ParityHomogeneity { i: usize, j: usize },
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
}

#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Finite-dimensional Lie superalgebra with a fixed ordered basis,
/// even block first. Immutable after construction.
#[derive(Debug, Clone)]
pub struct SuperAlgebra {
    name: String,
    labels: Vec<BasisLabel>,
    even_dim: usize,
    /// structure[i][j] = coordinates of [b_i, b_j]
    structure: Vec<Vec<Vec<Scalar>>>,
    index: HashMap<String, usize>,
}

impl SuperAlgebra {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<BasisLabel>,
        structure: Vec<Vec<Vec<Scalar>>>,
    ) -> Self {
        let name = name.into();
        let dim = labels.len();
        assert_eq!(structure.len(), dim);
        for row in &structure {
            assert_eq!(row.len(), dim);
            for v in row {
                assert_eq!(v.len(), dim);
            }
        }
        let even_dim = labels
            .iter()
            .take_while(|l| l.parity == Parity::Even)
            .count();
        assert!(
            labels[even_dim..].iter().all(|l| l.parity == Parity::Odd),
            "basis must list the even block first"
        );
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            assert!(
                index.insert(l.name.clone(), i).is_none(),
                "duplicate basis name {}",
                l.name
            );
        }
        SuperAlgebra {
            name,
            labels,
            even_dim,
            structure,
            index,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn parity_of_index(&self, i: usize) -> Parity {
        self.labels[i].parity
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn zero(&self) -> Element {
        Element {
            algebra: self.name.clone(),
            coords: vec![Scalar::zero(); self.dim()],
        }
    }

    pub fn basis_element(&self, name: &str) -> Element {
        let i = self
            .index_of(name)
            .unwrap_or_else(|| panic!("no basis element {name} in {}", self.name));
        let mut e = self.zero();
        e.coords[i] = Scalar::one();
        e
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Element {
        assert_eq!(coords.len(), self.dim());
        Element {
            algebra: self.name.clone(),
            coords,
        }
    }

    /// Linear combination of named basis elements.
    pub fn combo(&self, terms: &[(Scalar, &str)]) -> Element {
        let mut e = self.zero();
        for (c, name) in terms {
            let i = self
                .index_of(name)
                .unwrap_or_else(|| panic!("no basis element {name} in {}", self.name));
            e.coords[i] = &e.coords[i] + c;
        }
        e
    }

    fn check_same(&self, x: &Element) -> Result<(), Error> {
        if x.algebra != self.name || x.coords.len() != self.dim() {
            return Err(Error::AlgebraMismatch(
                self.name.clone(),
                x.algebra.clone(),
            ));
        }
        Ok(())
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element, Error> {
        self.check_same(x)?;
        self.check_same(y)?;
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y.coords[j].is_zero() {
                    continue;
                }
                let c = &x.coords[i] * &y.coords[j];
                for (k, s) in self.structure[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[k] = &out[k] + &c * s;
                    }
                }
            }
        }
        Ok(self.element(out))
    }

    fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.structure[i][j]
    }

    /// Matrix of ad x: column j holds the coordinates of [x, b_j].
    pub fn ad_matrix(&self, x: &Element) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        for j in 0..n {
            let mut col = vec![Scalar::zero(); n];
            for i in 0..n {
                if x.coords[i].is_zero() {
                    continue;
                }
                for (k, s) in self.structure[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        col[k] = &col[k] + &x.coords[i] * s;
                    }
                }
            }
            m.set_column(j, &col);
        }
        m
    }

    /// Parity block (even or odd span) of the coordinate space.
    pub fn parity_block(&self, p: Parity) -> SubspaceBasis {
        let range = match p {
            Parity::Even => 0..self.even_dim,
            Parity::Odd => self.even_dim..self.dim(),
        };
        SubspaceBasis::from_vectors(
            self.dim(),
            range
                .map(|i| {
                    let mut v = vec![Scalar::zero(); self.dim()];
                    v[i] = Scalar::one();
                    v
                })
                .collect(),
        )
    }

    fn parity_span_violated(&self, i: usize, j: usize) -> bool {
        let expect = self.labels[i].parity.product(self.labels[j].parity);
        self.structure[i][j].iter().enumerate().any(|(k, s)| {
            !s.is_zero() && self.labels[k].parity != expect
        })
    }

    /// Check parity homogeneity, graded antisymmetry and the graded Jacobi
    /// identity on every basis triple. Violations are data, not errors.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let mut report = AxiomReport::default();
        for i in 0..n {
            for j in 0..n {
                if self.parity_span_violated(i, j) {
                    report.violations.push(AxiomViolation::ParityHomogeneity { i, j });
                }
                // [b_i, b_j] = -(-1)^{|i||j|} [b_j, b_i]
                let sign_flip =
                    self.labels[i].parity.is_odd() && self.labels[j].parity.is_odd();
                let ok = self.structure[i][j]
                    .iter()
                    .zip(&self.structure[j][i])
                    .all(|(a, b)| if sign_flip { a == b } else { *a == -b.clone() });
                if !ok {
                    report.violations.push(AxiomViolation::Antisymmetry { i, j });
                }
            }
        }
        for i in 0..n {
            let bi = self.basis_element(&self.labels[i].name);
            for j in 0..n {
                let bj = self.basis_element(&self.labels[j].name);
                let bij = self.element(self.structure[i][j].clone());
                let sign = self.labels[i].parity.is_odd() && self.labels[j].parity.is_odd();
                for k in 0..n {
                    let bk = self.basis_element(&self.labels[k].name);
                    // [b_i,[b_j,b_k]] = [[b_i,b_j],b_k] + (-1)^{|i||j|}[b_j,[b_i,b_k]]
                    let bjk = self.element(self.structure[j][k].clone());
                    let lhs = self.bracket(&bi, &bjk).unwrap();
                    let t1 = self.bracket(&bij, &bk).unwrap();
                    let bik = self.element(self.structure[i][k].clone());
                    let t2 = self.bracket(&bj, &bik).unwrap();
                    let rhs: Vec<Scalar> = t1
                        .coords
                        .iter()
                        .zip(&t2.coords)
                        .map(|(a, b)| if sign { a - b } else { a + b })
                        .collect();
                    if lhs.coords != rhs {
                        report.violations.push(AxiomViolation::Jacobi { i, j, k });
                    }
                }
            }
        }
        report
    }

    /// kernel(m - lambda I) for a square matrix on this algebra's coordinates.
    pub fn eigenspace(m: &Matrix, lambda: &Scalar) -> SubspaceBasis {
        assert_eq!(m.rows(), m.cols(), "eigenspace needs a square matrix");
        let shifted = m.sub(&Matrix::identity(m.rows()).scale(lambda));
        shifted.kernel()
    }

    /// Smallest bracket-closed subspace containing the generators, by
    /// iterating span-and-bracket to a fixed point. Terminates in at most
    /// ambient-dimension iterations.
    pub fn subalgebra_closure(&self, generators: &[Element]) -> Result<SubspaceBasis, Error> {
        for g in generators {
            self.check_same(g)?;
        }
        let mut span = SubspaceBasis::from_vectors(
            self.dim(),
            generators.iter().map(|g| g.coords.clone()).collect(),
        );
        for _ in 0..=self.dim() {
            let mut new_vectors: Vec<Vec<Scalar>> = Vec::new();
            for (a, x) in span.vectors().iter().enumerate() {
                for y in span.vectors().iter().skip(a) {
                    let b = self
                        .bracket(&self.element(x.clone()), &self.element(y.clone()))
                        .unwrap();
                    if !span.contains(&b.coords) {
                        new_vectors.push(b.coords);
                    }
                }
            }
            if new_vectors.is_empty() {
                return Ok(span);
            }
            let mut vs = span.vectors().to_vec();
            vs.extend(new_vectors);
            span = SubspaceBasis::from_vectors(self.dim(), vs);
        }
        Ok(span)
    }

    /// True when brackets of basis vectors of `s` stay inside `s`.
    pub fn is_bracket_closed(&self, s: &SubspaceBasis) -> bool {
        for x in s.vectors() {
            for y in s.vectors() {
                let b = self
                    .bracket(&self.element(x.to_vec()), &self.element(y.to_vec()))
                    .unwrap();
                if !s.contains(&b.coords) {
                    return false;
                }
            }
        }
        true
    }

    /// Pretty-print an element as a combination of named basis vectors.
    pub fn describe(&self, x: &Element) -> String {
        let mut parts = Vec::new();
        for (i, c) in x.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = &self.labels[i].name;
            if c.is_one() {
                parts.push(name.clone());
            } else if (-c).is_one() {
                parts.push(format!("-{name}"));
            } else {
                parts.push(format!("({})*{}", c, name));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }

    /// Deterministic JSON document: labels, parities and the nonzero
    /// structure constants, for golden-file diffing.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let labels: Vec<_> = self
            .labels
            .iter()
            .map(|l| json!({"name": l.name, "parity": l.parity.to_string()}))
            .collect();
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let entries: Vec<_> = self.bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(k, s)| json!([self.labels[k].name, s.to_string()]))
                    .collect();
                if !entries.is_empty() {
                    brackets.push(json!({
                        "lhs": self.labels[i].name,
                        "rhs": self.labels[j].name,
                        "value": entries,
                    }));
                }
            }
        }
        json!({
            "name": self.name,
            "dim": self.dim(),
            "even_dim": self.even_dim,
            "labels": labels,
            "brackets": brackets,
        })
    }
}

/// Helper for building structure tables: accumulate coordinates of
/// [b_i, b_j] one named pair at a time, then finish into a SuperAlgebra.
pub struct AlgebraBuilder {
    name: String,
    labels: Vec<BasisLabel>,
    index: HashMap<String, usize>,
    structure: Vec<Vec<Vec<Scalar>>>,
}

impl AlgebraBuilder {
    pub fn new(name: impl Into<String>, labels: Vec<(String, Parity)>) -> Self {
        let labels: Vec<BasisLabel> = labels
            .into_iter()
            .map(|(name, parity)| BasisLabel { name, parity })
            .collect();
        let dim = labels.len();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            assert!(index.insert(l.name.clone(), i).is_none(), "duplicate {}", l.name);
        }
        AlgebraBuilder {
            name: name.into(),
            labels,
            index,
            structure: vec![vec![vec![Scalar::zero(); dim]; dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn idx(&self, name: &str) -> usize {
        *self
            .index
            .get(name)
            .unwrap_or_else(|| panic!("unknown basis element {name}"))
    }

    /// Set [lhs, rhs] = value (coordinates).
    pub fn set(&mut self, lhs: &str, rhs: &str, value: Vec<Scalar>) {
        let (i, j) = (self.idx(lhs), self.idx(rhs));
        self.structure[i][j] = value;
    }

    pub fn set_terms(&mut self, lhs: &str, rhs: &str, terms: &[(Scalar, &str)]) {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (c, name) in terms {
            let k = self.idx(name);
            v[k] = &v[k] + c;
        }
        self.set(lhs, rhs, v);
    }

    pub fn set_indexed(&mut self, i: usize, j: usize, value: Vec<Scalar>) {
        self.structure[i][j] = value;
    }

    pub fn finish(self) -> SuperAlgebra {
        SuperAlgebra::new(
            self.name,
            self.labels,
            self.structure,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::build_sl2;
    use crate::scalar::int;

    #[test]
    fn sl2_brackets_and_axioms() {
        let g = build_sl2();
        assert_eq!(g.dim(), 3);
        let (e, h, f) = (
            g.basis_element("E"),
            g.basis_element("H"),
            g.basis_element("F"),
        );
        let he = g.bracket(&h, &e).unwrap();
        assert_eq!(g.describe(&he), "(2)*E");
        let ef = g.bracket(&e, &f).unwrap();
        assert_eq!(ef, h);
        assert!(g.verify_axioms().passed());
    }

    #[test]
    fn even_self_bracket_vanishes() {
        let g = build_sl2();
        let x = g.combo(&[(Scalar::from_int(2), "E"), (Scalar::from_int(-5), "F")]);
        assert!(g.bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn ad_h_eigenvalues_on_sl2() {
        let g = build_sl2();
        let ad_h = g.ad_matrix(&g.basis_element("H"));
        for (name, ev) in [("E", 2i64), ("H", 0), ("F", -2)] {
            let b = g.basis_element(name);
            let im = ad_h.mul_vec(&b.coords);
            let expect: Vec<Scalar> = b
                .coords
                .iter()
                .map(|c| c * &Scalar::from_int(ev))
                .collect();
            assert_eq!(im, expect);
        }
        // eigenspace(ad H, 2) = <E>
        let es = SuperAlgebra::eigenspace(&ad_h, &Scalar::from_int(2));
        assert_eq!(es.dim(), 1);
        assert!(es.contains(&g.basis_element("E").coords));
        // sum over eigenvalues of dims = dim g
        let total: usize = [-2i64, 0, 2]
            .iter()
            .map(|&l| SuperAlgebra::eigenspace(&ad_h, &Scalar::from_int(l)).dim())
            .sum();
        assert_eq!(total, g.dim());
    }

    #[test]
    fn ad_zero_is_zero() {
        let g = build_sl2();
        assert!(g.ad_matrix(&g.zero()).is_zero());
    }

    #[test]
    fn closure_of_e_f_is_whole_sl2() {
        let g = build_sl2();
        let gens = vec![g.basis_element("E"), g.basis_element("F")];
        let span = g.subalgebra_closure(&gens).unwrap();
        assert_eq!(span.dim(), 3);
        assert!(g.is_bracket_closed(&span));
        let empty = g.subalgebra_closure(&[]).unwrap();
        assert_eq!(empty.dim(), 0);
    }

    #[test]
    fn algebra_mismatch_is_an_error() {
        let g = build_sl2();
        let mut y = g.basis_element("E");
        y.algebra = "other".to_string();
        assert!(g.bracket(&g.basis_element("E"), &y).is_err());
    }

    #[test]
    fn json_is_deterministic() {
        let a = build_sl2().to_json().to_string();
        let b = build_sl2().to_json().to_string();
        assert_eq!(a, b);
        assert!(a.contains("\"lhs\":\"H\""));
        let _ = int(0);
    }

    mod props {
        use super::*;
        use crate::builders::build_d21;
        use proptest::prelude::*;

        fn homogeneous_element(
            g: &SuperAlgebra,
            parity: Parity,
            coeffs: &[i64],
        ) -> Element {
            let mut e = g.zero();
            let range: Vec<usize> = match parity {
                Parity::Even => (0..g.even_dim()).collect(),
                Parity::Odd => (g.even_dim()..g.dim()).collect(),
            };
            for (k, &i) in range.iter().enumerate() {
                e.coords[i] = Scalar::from_int(coeffs[k % coeffs.len()]);
            }
            e
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn ad_is_a_representation(
                ce in proptest::collection::vec(-2i64..3, 4),
                co in proptest::collection::vec(-2i64..3, 4),
                px in prop::bool::ANY,
                py in prop::bool::ANY,
            ) {
                // ad([x,y]) = ad(x) ad(y) - (-1)^{|x||y|} ad(y) ad(x)
                let g = build_d21(&Scalar::from_int(2)).unwrap();
                let parity = |b: bool| if b { Parity::Odd } else { Parity::Even };
                let x = homogeneous_element(&g, parity(px), &ce);
                let y = homogeneous_element(&g, parity(py), &co);
                let lhs = g.ad_matrix(&g.bracket(&x, &y).unwrap());
                let (ax, ay) = (g.ad_matrix(&x), g.ad_matrix(&y));
                let sign = if px && py { 1 } else { -1 };
                let rhs = ax.mul(&ay).sub(&ay.mul(&ax).scale(&Scalar::from_int(-sign)));
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn bracket_parity(
                ce in proptest::collection::vec(-2i64..3, 4),
                co in proptest::collection::vec(-2i64..3, 4),
            ) {
                // [even, odd] is odd, [odd, odd] is even
                let g = build_d21(&Scalar::from_int(-3)).unwrap();
                let x = homogeneous_element(&g, Parity::Even, &ce);
                let y = homogeneous_element(&g, Parity::Odd, &co);
                let eo = g.bracket(&x, &y).unwrap();
                prop_assert!(eo.coords[..g.even_dim()].iter().all(|c| c.is_zero()));
                let oo = g.bracket(&y, &y).unwrap();
                prop_assert!(oo.coords[g.even_dim()..].iter().all(|c| c.is_zero()));
            }
        }
    }
}
