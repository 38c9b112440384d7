//! G(3): even part sl(2) + G2, odd part V2 (x) V7, odd-odd bracket
//!   [v_i (x) e_j, v_k (x) e_l] = psi2(v_i,v_k) p7(e_j,e_l)
//!                              + psi7(e_j,e_l) p2(v_i,v_k)
//! with p2(v1,v-1) = -4H, p2(v1,v1) = 8E, p2(v-1,v-1) = -8F.

use super::g2::{build_g2, G2_NAMES};
use crate::data::{parse_pair_table, parse_scalar_table, PairEntry};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::superalg::{AlgebraBuilder, Parity, SuperAlgebra};
use std::collections::HashMap;

/// V7 basis order used throughout the G(3) tables.
pub const V7_ORDER: [i32; 7] = [3, 2, 1, 0, -1, -2, -3];

pub fn g3_odd_names() -> Vec<String> {
    let mut names = Vec::new();
    for i in [1, -1] {
        for j in V7_ORDER {
            names.push(format!("v({i},{j})"));
        }
    }
    names
}

/// Loaded pairing data for the odd-odd bracket.
#[derive(Debug, Clone)]
pub struct G3Tables {
    /// p7[(j, l)] = coordinates in the G2 basis order (G2_NAMES)
    pub p7: HashMap<(i32, i32), Vec<Scalar>>,
    /// psi7[(j, l)] scalar
    pub psi7: HashMap<(i32, i32), Scalar>,
}

fn v7_key(name: &str) -> Result<i32, Error> {
    name.strip_prefix('e')
        .and_then(|s| s.parse::<i32>().ok())
        .filter(|k| V7_ORDER.contains(k))
        .ok_or_else(|| Error::Table {
            file: "p7/psi7".into(),
            detail: format!("unknown V7 element {name}"),
        })
}

impl G3Tables {
    pub fn load() -> Result<Self, Error> {
        Self::from_entries(
            parse_pair_table(include_str!("../../data/p7.table"), "p7.table")?,
            parse_scalar_table(include_str!("../../data/psi7.table"), "psi7.table")?,
        )
    }

    pub fn from_entries(
        p7_entries: Vec<PairEntry>,
        psi7_entries: Vec<(String, String, crate::scalar::Rational)>,
    ) -> Result<Self, Error> {
        let mut p7 = HashMap::new();
        for e in p7_entries {
            let (j, l) = (v7_key(&e.row)?, v7_key(&e.col)?);
            let mut coords = vec![Scalar::zero(); G2_NAMES.len()];
            for (c, name) in e.value {
                let k = G2_NAMES
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| Error::Table {
                        file: "p7.table".into(),
                        detail: format!("unknown G2 element {name}"),
                    })?;
                coords[k] = &coords[k] + &Scalar::Rat(c);
            }
            p7.insert((j, l), coords);
        }
        let mut psi7 = HashMap::new();
        for (row, col, val) in psi7_entries {
            let (j, l) = (v7_key(&row)?, v7_key(&col)?);
            psi7.insert((j, l), Scalar::Rat(val));
        }
        Ok(G3Tables { p7, psi7 })
    }

    pub fn p7_at(&self, j: i32, l: i32) -> Vec<Scalar> {
        self.p7
            .get(&(j, l))
            .cloned()
            .unwrap_or_else(|| vec![Scalar::zero(); G2_NAMES.len()])
    }

    pub fn psi7_at(&self, j: i32, l: i32) -> Scalar {
        self.psi7.get(&(j, l)).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The transcribed antisymmetric half must match the transcribed
    /// other half; any offending cell is reported, not fixed.
    pub fn check_p7_antisymmetry(&self) -> Vec<(i32, i32)> {
        let mut bad = Vec::new();
        for &j in &V7_ORDER {
            for &l in &V7_ORDER {
                let a = self.p7_at(j, l);
                let b = self.p7_at(l, j);
                if a.iter().zip(&b).any(|(x, y)| *x != -y.clone()) {
                    bad.push((j, l));
                }
            }
        }
        bad
    }
}

/// Scalar coefficient table for psi2 (skew) on V2.
fn psi2(a: i32, b: i32) -> i64 {
    match (a, b) {
        (1, -1) => 1,
        (-1, 1) => -1,
        _ => 0,
    }
}

/// p2 coordinates (E, H, F) with the G(3) scaling: 8E, -4H, -8F.
fn p2(a: i32, b: i32) -> [i64; 3] {
    match (a, b) {
        (1, 1) => [8, 0, 0],
        (1, -1) | (-1, 1) => [0, -4, 0],
        (-1, -1) => [0, 0, -8],
        _ => unreachable!(),
    }
}

pub fn build_g3() -> Result<SuperAlgebra, Error> {
    build_g3_from_tables(&G3Tables::load()?)
}

pub fn build_g3_from_tables(tables: &G3Tables) -> Result<SuperAlgebra, Error> {
    let g2 = build_g2();
    let g2_abs = g2.to_abstract()?;

    let mut labels: Vec<(String, Parity)> = ["E", "H", "F"]
        .iter()
        .map(|n| (n.to_string(), Parity::Even))
        .collect();
    labels.extend(G2_NAMES.iter().map(|n| (n.to_string(), Parity::Even)));
    labels.extend(g3_odd_names().into_iter().map(|n| (n, Parity::Odd)));

    let mut b = AlgebraBuilder::new("G(3)", labels);
    let dim = b.dim();

    // sl(2) block
    let sl2 = super::build_sl2();
    for x in ["E", "H", "F"] {
        for y in ["E", "H", "F"] {
            let br = sl2
                .bracket(&sl2.basis_element(x), &sl2.basis_element(y))
                .unwrap();
            let terms: Vec<(Scalar, &str)> = br
                .coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.clone(), ["E", "H", "F"][k]))
                .collect();
            b.set_terms(x, y, &terms);
        }
    }

    // G2 block from the matrix model
    for (i, xi) in G2_NAMES.iter().enumerate() {
        for (j, xj) in G2_NAMES.iter().enumerate() {
            let br = g2_abs
                .bracket(&g2_abs.basis_element(xi), &g2_abs.basis_element(xj))
                .unwrap();
            let terms: Vec<(Scalar, &str)> = br
                .coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.clone(), G2_NAMES[k]))
                .collect();
            let _ = (i, j);
            b.set_terms(xi, xj, &terms);
        }
    }

    // even-odd: sl(2) on the V2 slot, G2 matrices on the V7 slot
    let v7_pos = |k: i32| V7_ORDER.iter().position(|&x| x == k).unwrap();
    for &i in &[1i32, -1] {
        for &j in &V7_ORDER {
            let vname = format!("v({i},{j})");
            // sl(2): E v-1 = v1, H v_i = i v_i, F v1 = v-1
            let sl2_images: [(usize, Option<(i32, i64)>); 3] = [
                (0, if i == -1 { Some((1, 1)) } else { None }),
                (1, Some((i, i as i64))),
                (2, if i == 1 { Some((-1, 1)) } else { None }),
            ];
            for (gi, img) in sl2_images {
                let gname = ["E", "H", "F"][gi];
                if let Some((ni, coef)) = img {
                    if coef != 0 {
                        let target = format!("v({ni},{j})");
                        let c = Scalar::from_int(coef);
                        b.set_terms(gname, &vname, &[(c.clone(), target.as_str())]);
                        b.set_terms(&vname, gname, &[(-c, target.as_str())]);
                    }
                }
            }
            // G2 slot: y . (v_i (x) e_j) = v_i (x) (y e_j)
            for (gi, gname) in G2_NAMES.iter().enumerate() {
                let m = &g2.mats[gi];
                let mut terms: Vec<(Scalar, String)> = Vec::new();
                for &t in &V7_ORDER {
                    let c = &m[(v7_pos(t), v7_pos(j))];
                    if !c.is_zero() {
                        terms.push((c.clone(), format!("v({i},{t})")));
                    }
                }
                if !terms.is_empty() {
                    let refs: Vec<(Scalar, &str)> =
                        terms.iter().map(|(c, n)| (c.clone(), n.as_str())).collect();
                    b.set_terms(gname, &vname, &refs);
                    let negs: Vec<(Scalar, &str)> =
                        terms.iter().map(|(c, n)| (-c, n.as_str())).collect();
                    b.set_terms(&vname, gname, &negs);
                }
            }
        }
    }

    // odd-odd
    for &i in &[1i32, -1] {
        for &j in &V7_ORDER {
            for &k in &[1i32, -1] {
                for &l in &V7_ORDER {
                    let mut coords = vec![Scalar::zero(); dim];
                    let s2 = psi2(i, k);
                    if s2 != 0 {
                        let p7v = tables.p7_at(j, l);
                        for (gi, c) in p7v.iter().enumerate() {
                            if !c.is_zero() {
                                let idx = b.idx(G2_NAMES[gi]);
                                coords[idx] = &coords[idx] + &(c * &Scalar::from_int(s2));
                            }
                        }
                    }
                    let s7 = tables.psi7_at(j, l);
                    if !s7.is_zero() {
                        for (gi, amount) in p2(i, k).iter().enumerate() {
                            if *amount != 0 {
                                let idx = b.idx(["E", "H", "F"][gi]);
                                coords[idx] =
                                    &coords[idx] + &(&s7 * &Scalar::from_int(*amount));
                            }
                        }
                    }
                    b.set(&format!("v({i},{j})"), &format!("v({k},{l})"), coords);
                }
            }
        }
    }

    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn dimension() {
        let g = build_g3().unwrap();
        assert_eq!(g.dim(), 31);
        assert_eq!(g.even_dim(), 17);
    }

    #[test]
    fn p7_spot_value() {
        let t = G3Tables::load().unwrap();
        // p7(e-2, e3) = 4 x1
        let v = t.p7_at(-2, 3);
        let x1 = G2_NAMES.iter().position(|n| *n == "x1").unwrap();
        assert_eq!(v[x1], Scalar::from_int(4));
        assert!(v
            .iter()
            .enumerate()
            .all(|(i, c)| i == x1 || c.is_zero()));
        assert!(t.check_p7_antisymmetry().is_empty());
    }

    #[test]
    fn psi7_support() {
        let t = G3Tables::load().unwrap();
        for &j in &V7_ORDER {
            for &l in &V7_ORDER {
                let val = t.psi7_at(j, l);
                if l == -j && j != 0 {
                    assert_eq!(val, Scalar::from_int(2));
                } else if j == 0 && l == 0 {
                    assert_eq!(val, Scalar::one());
                } else {
                    assert!(val.is_zero(), "psi7({j},{l}) should vanish");
                }
            }
        }
    }

    #[test]
    fn axioms_pass() {
        // This is the consistency oracle pinning the y3..y6 convention.
        let g = build_g3().unwrap();
        let report = g.verify_axioms();
        assert!(
            report.passed(),
            "G(3) axioms failed: {:?}",
            &report.violations[..report.violations.len().min(5)]
        );
    }

    #[test]
    fn ad_h_eigenvalue_on_x3() {
        // h = H + h2 has eigenvalue 1 on x3
        let g = build_g3().unwrap();
        let h = g.combo(&[(Scalar::one(), "H"), (Scalar::one(), "h2")]);
        let br = g.bracket(&h, &g.basis_element("x3")).unwrap();
        assert_eq!(br, g.basis_element("x3"));
    }
}
