//! F(4): even part sl(2) + so(7), odd part V2 (x) V8, odd-odd bracket
//!   [x2 (x) x8, y2 (x) y8] = psi2(x2,y2) p8(x8,y8) + psi8(x8,y8) p2(x2,y2)
//! with p2(v1,v-1) = -3H, p2(v1,v1) = 6E, p2(v-1,v-1) = -6F.
//!
//! The canonical odd basis uses the v_sigma aliases of the spin monomials:
//! v--- = s, v+-- = -e1s, v-+- = e2s, v--+ = -e3s, v++- = e1e2s,
//! v+-+ = e1e3s, v-++ = e2e3s, v+++ = e1e2e3s.

use super::clifford::{spin_action_table, SpinTable};
use super::so7::{build_so7, so7_names};
use crate::data::{parse_pair_table, parse_scalar_table, PairEntry};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::superalg::{AlgebraBuilder, Parity, SuperAlgebra};
use std::collections::HashMap;

/// The v_sigma basis order, matching the p8 table layout.
pub const SIGMA_ORDER: [&str; 8] = [
    "v---", "v+--", "v-+-", "v--+", "v++-", "v+-+", "v-++", "v+++",
];

/// sign and monomial index (in spin-table order s, e1s, ..., e123s)
/// realizing each v_sigma.
pub const SIGMA_SIGNS: [(i64, usize); 8] = [
    (1, 0),  // v--- = s
    (-1, 1), // v+-- = -e1s
    (1, 2),  // v-+- = e2s
    (-1, 3), // v--+ = -e3s
    (1, 4),  // v++- = e1e2s
    (1, 5),  // v+-+ = e1e3s
    (1, 6),  // v-++ = e2e3s
    (1, 7),  // v+++ = e1e2e3s
];

pub fn f4_odd_names() -> Vec<String> {
    let mut names = Vec::new();
    for i in [1, -1] {
        for s in SIGMA_ORDER {
            names.push(format!("v({i},{})", &s[1..]));
        }
    }
    names
}

pub fn f4_odd_name(i: i32, sigma: usize) -> String {
    format!("v({i},{})", &SIGMA_ORDER[sigma][1..])
}

#[derive(Debug, Clone)]
pub struct F4Tables {
    /// p8[(a, b)] = coordinates in the so(7) basis order
    pub p8: HashMap<(usize, usize), Vec<Scalar>>,
    /// psi8[(a, b)] scalar, indices in SIGMA_ORDER
    pub psi8: HashMap<(usize, usize), Scalar>,
}

fn sigma_key(name: &str) -> Result<usize, Error> {
    SIGMA_ORDER
        .iter()
        .position(|s| *s == name)
        .ok_or_else(|| Error::Table {
            file: "p8/psi8".into(),
            detail: format!("unknown V8 element {name}"),
        })
}

impl F4Tables {
    pub fn load() -> Result<Self, Error> {
        Self::from_entries(
            parse_pair_table(include_str!("../../data/p8.table"), "p8.table")?,
            parse_scalar_table(include_str!("../../data/psi8.table"), "psi8.table")?,
        )
    }

    pub fn from_entries(
        p8_entries: Vec<PairEntry>,
        psi8_entries: Vec<(String, String, crate::scalar::Rational)>,
    ) -> Result<Self, Error> {
        let names = so7_names();
        let mut p8 = HashMap::new();
        for e in p8_entries {
            let (a, b) = (sigma_key(&e.row)?, sigma_key(&e.col)?);
            let mut coords = vec![Scalar::zero(); names.len()];
            for (c, name) in e.value {
                let k = names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| Error::Table {
                        file: "p8.table".into(),
                        detail: format!("unknown so(7) element {name}"),
                    })?;
                coords[k] = &coords[k] + &Scalar::Rat(c);
            }
            p8.insert((a, b), coords);
        }
        let mut psi8 = HashMap::new();
        for (row, col, val) in psi8_entries {
            psi8.insert((sigma_key(&row)?, sigma_key(&col)?), Scalar::Rat(val));
        }
        Ok(F4Tables { p8, psi8 })
    }

    pub fn p8_at(&self, a: usize, b: usize) -> Vec<Scalar> {
        self.p8
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(|| vec![Scalar::zero(); 21])
    }

    pub fn psi8_at(&self, a: usize, b: usize) -> Scalar {
        self.psi8.get(&(a, b)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn check_p8_antisymmetry(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for a in 0..8 {
            for b in 0..8 {
                let x = self.p8_at(a, b);
                let y = self.p8_at(b, a);
                if x.iter().zip(&y).any(|(u, v)| *u != -v.clone()) {
                    bad.push((a, b));
                }
            }
        }
        bad
    }
}

fn psi2(a: i32, b: i32) -> i64 {
    match (a, b) {
        (1, -1) => 1,
        (-1, 1) => -1,
        _ => 0,
    }
}

/// p2 coordinates (E, H, F). The base scaling is 6E, -3H, -6F; the extra
/// factor -1/4 is forced by the graded Jacobi identity on purely odd
/// triples given the p8 table values (e.g. (v(1,---), v(1,---), v(-1,+++))
/// fails at scale 1 and passes at -1/4).
fn p2(a: i32, b: i32) -> [(i64, i64); 3] {
    match (a, b) {
        (1, 1) => [(-3, 2), (0, 1), (0, 1)],
        (1, -1) | (-1, 1) => [(0, 1), (3, 4), (0, 1)],
        (-1, -1) => [(0, 1), (0, 1), (3, 2)],
        _ => unreachable!(),
    }
}

/// Spin action matrices rewritten in the v_sigma basis:
/// coords_sigma[t] = s_sigma * s_t * coords_monomial[t].
pub fn sigma_spin_table(spin: &SpinTable) -> SpinTable {
    spin.iter()
        .map(|m| {
            let mut out = crate::linalg::Matrix::zero(8, 8);
            for (col, &(s_col, mono_col)) in SIGMA_SIGNS.iter().enumerate() {
                for (row, &(s_row, mono_row)) in SIGMA_SIGNS.iter().enumerate() {
                    let c = &m[(mono_row, mono_col)];
                    if !c.is_zero() {
                        out[(row, col)] = c * &Scalar::from_int(s_col * s_row);
                    }
                }
            }
            out
        })
        .collect()
}

pub fn build_f4() -> Result<SuperAlgebra, Error> {
    build_f4_from_tables(&F4Tables::load()?)
}

pub fn build_f4_from_tables(tables: &F4Tables) -> Result<SuperAlgebra, Error> {
    let so7 = build_so7()?;
    let so7_basis = so7_names();
    let spin = sigma_spin_table(&spin_action_table()?);

    let mut labels: Vec<(String, Parity)> = ["E", "H", "F"]
        .iter()
        .map(|n| (n.to_string(), Parity::Even))
        .collect();
    labels.extend(so7_basis.iter().map(|n| (n.clone(), Parity::Even)));
    labels.extend(f4_odd_names().into_iter().map(|n| (n, Parity::Odd)));

    let mut b = AlgebraBuilder::new("F(4)", labels);
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

    // so(7) block
    for xi in &so7_basis {
        for xj in &so7_basis {
            let br = so7
                .bracket(&so7.basis_element(xi), &so7.basis_element(xj))
                .unwrap();
            let terms: Vec<(Scalar, &str)> = br
                .coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.clone(), so7_basis[k].as_str()))
                .collect();
            b.set_terms(xi, xj, &terms);
        }
    }

    // even-odd: sl(2) on the V2 slot, spin action on the V8 slot
    for &i in &[1i32, -1] {
        for sig in 0..8 {
            let vname = f4_odd_name(i, sig);
            let sl2_images: [(usize, Option<(i32, i64)>); 3] = [
                (0, if i == -1 { Some((1, 1)) } else { None }),
                (1, Some((i, i as i64))),
                (2, if i == 1 { Some((-1, 1)) } else { None }),
            ];
            for (gi, img) in sl2_images {
                if let Some((ni, coef)) = img {
                    if coef != 0 {
                        let target = f4_odd_name(ni, sig);
                        let c = Scalar::from_int(coef);
                        b.set_terms(["E", "H", "F"][gi], &vname, &[(c.clone(), target.as_str())]);
                        b.set_terms(&vname, ["E", "H", "F"][gi], &[(-c, target.as_str())]);
                    }
                }
            }
            for (ri, rname) in so7_basis.iter().enumerate() {
                let m = &spin[ri];
                let mut terms: Vec<(Scalar, String)> = Vec::new();
                for t in 0..8 {
                    let c = &m[(t, sig)];
                    if !c.is_zero() {
                        terms.push((c.clone(), f4_odd_name(i, t)));
                    }
                }
                if !terms.is_empty() {
                    let refs: Vec<(Scalar, &str)> =
                        terms.iter().map(|(c, n)| (c.clone(), n.as_str())).collect();
                    b.set_terms(rname, &vname, &refs);
                    let negs: Vec<(Scalar, &str)> =
                        terms.iter().map(|(c, n)| (-c, n.as_str())).collect();
                    b.set_terms(&vname, rname, &negs);
                }
            }
        }
    }

    // odd-odd
    for &i in &[1i32, -1] {
        for a in 0..8 {
            for &k in &[1i32, -1] {
                for bb in 0..8 {
                    let mut coords = vec![Scalar::zero(); dim];
                    let s2 = psi2(i, k);
                    if s2 != 0 {
                        for (ri, c) in tables.p8_at(a, bb).iter().enumerate() {
                            if !c.is_zero() {
                                let idx = b.idx(&so7_basis[ri]);
                                coords[idx] = &coords[idx] + &(c * &Scalar::from_int(s2));
                            }
                        }
                    }
                    let s8 = tables.psi8_at(a, bb);
                    if !s8.is_zero() {
                        for (gi, (num, den)) in p2(i, k).iter().enumerate() {
                            if *num != 0 {
                                let idx = b.idx(["E", "H", "F"][gi]);
                                coords[idx] =
                                    &coords[idx] + &(&s8 * &Scalar::from_rat(*num, *den));
                            }
                        }
                    }
                    b.set(&f4_odd_name(i, a), &f4_odd_name(k, bb), coords);
                }
            }
        }
    }

    Ok(b.finish())
}
