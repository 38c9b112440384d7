//! D(2,1;alpha) = Gamma(1+alpha, -1, -alpha): even part three copies of
//! sl(2), odd part V1 (x) V2 (x) V3, with the odd-odd bracket
//!   [v (x) v (x) v, u (x) u (x) u] = sum_i sigma_i (prod_{j != i}
//!   psi_j(v_j, u_j)) p_i(v_i, u_i)
//! where psi(v1, v-1) = 1, p(v1,v1) = 2E, p(v1,v-1) = -H, p(v-1,v-1) = -2F.

use crate::error::Error;
use crate::scalar::Scalar;
use crate::superalg::{AlgebraBuilder, Parity, SuperAlgebra};

const SIGNS: [i32; 2] = [1, -1];

pub fn d21_odd_name(i: i32, j: i32, k: i32) -> String {
    format!("v({i},{j},{k})")
}

fn psi(a: i32, b: i32) -> i64 {
    match (a, b) {
        (1, -1) => 1,
        (-1, 1) => -1,
        _ => 0,
    }
}

/// p(v_a, v_b) as coordinates (cE, cH, cF) in one sl(2) slot.
fn p2(a: i32, b: i32) -> [i64; 3] {
    match (a, b) {
        (1, 1) => [2, 0, 0],
        (1, -1) | (-1, 1) => [0, -1, 0],
        (-1, -1) => [0, 0, -2],
        _ => unreachable!(),
    }
}

/// sl(2) action on V: E v_-1 = v_1, H v_i = i v_i, F v_1 = v_-1.
/// Returns the image sign index and coefficient of generator `gen` in
/// {E, H, F} applied to v_s, or None when it acts as zero.
fn slot_action(gen: usize, s: i32) -> Option<(i32, i64)> {
    match (gen, s) {
        (0, -1) => Some((1, 1)),  // E
        (1, s) => Some((s, s as i64)),  // H
        (2, 1) => Some((-1, 1)), // F
        _ => None,
    }
}

pub fn build_d21(alpha: &Scalar) -> Result<SuperAlgebra, Error> {
    let sigma = [
        Scalar::one() + alpha.clone(),
        -Scalar::one(),
        -alpha.clone(),
    ];
    if sigma.iter().any(|s| s.is_zero()) {
        return Err(Error::NonSimpleParameter(alpha.to_string()));
    }

    let mut labels: Vec<(String, Parity)> = Vec::new();
    for slot in 1..=3 {
        for g in ["E", "H", "F"] {
            labels.push((format!("{g}{slot}"), Parity::Even));
        }
    }
    let mut odd: Vec<(i32, i32, i32)> = Vec::new();
    for &i in &SIGNS {
        for &j in &SIGNS {
            for &k in &SIGNS {
                odd.push((i, j, k));
                labels.push((d21_odd_name(i, j, k), Parity::Odd));
            }
        }
    }

    let name = match alpha.as_rational() {
        Some(r) => format!("D(2,1;{})", crate::scalar::fmt_rational(&r)),
        None => "D(2,1;a)".to_string(),
    };
    let mut b = AlgebraBuilder::new(name, labels);

    // even-even: three commuting copies of sl(2)
    let sl2 = super::build_sl2();
    for slot in 1..=3 {
        for (gi, gn) in ["E", "H", "F"].iter().enumerate() {
            for (hi, hn) in ["E", "H", "F"].iter().enumerate() {
                let br = sl2
                    .bracket(
                        &sl2.basis_element(["E", "H", "F"][gi]),
                        &sl2.basis_element(["E", "H", "F"][hi]),
                    )
                    .unwrap();
                let terms: Vec<(Scalar, String)> = br
                    .coords
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (c.clone(), format!("{}{slot}", ["E", "H", "F"][k])))
                    .collect();
                let term_refs: Vec<(Scalar, &str)> =
                    terms.iter().map(|(c, n)| (c.clone(), n.as_str())).collect();
                b.set_terms(&format!("{gn}{slot}"), &format!("{hn}{slot}"), &term_refs);
            }
        }
    }

    // even-odd and odd-even: slotwise action
    for slot in 0..3usize {
        for (gi, gn) in ["E", "H", "F"].iter().enumerate() {
            let even_name = format!("{gn}{}", slot + 1);
            for &(i, j, k) in &odd {
                let signs = [i, j, k];
                if let Some((new_sign, coef)) = slot_action(gi, signs[slot]) {
                    if coef == 0 {
                        continue;
                    }
                    let mut ns = signs;
                    ns[slot] = new_sign;
                    let target = d21_odd_name(ns[0], ns[1], ns[2]);
                    let c = Scalar::from_int(coef);
                    let vname = d21_odd_name(i, j, k);
                    b.set_terms(&even_name, &vname, &[(c.clone(), target.as_str())]);
                    b.set_terms(&vname, &even_name, &[(-c, target.as_str())]);
                }
            }
        }
    }

    // odd-odd: the three-term sigma formula
    for &(i1, j1, k1) in &odd {
        for &(i2, j2, k2) in &odd {
            let v = [i1, j1, k1];
            let u = [i2, j2, k2];
            let mut terms: Vec<(Scalar, String)> = Vec::new();
            for slot in 0..3usize {
                let others: Vec<usize> = (0..3).filter(|&s| s != slot).collect();
                let psi_prod: i64 =
                    psi(v[others[0]], u[others[0]]) * psi(v[others[1]], u[others[1]]);
                if psi_prod == 0 {
                    continue;
                }
                let coef = &sigma[slot] * &Scalar::from_int(psi_prod);
                for (gen, amount) in p2(v[slot], u[slot]).iter().enumerate() {
                    if *amount != 0 {
                        terms.push((
                            &coef * &Scalar::from_int(*amount),
                            format!("{}{}", ["E", "H", "F"][gen], slot + 1),
                        ));
                    }
                }
            }
            let term_refs: Vec<(Scalar, &str)> =
                terms.iter().map(|(c, n)| (c.clone(), n.as_str())).collect();
            b.set_terms(
                &d21_odd_name(i1, j1, k1),
                &d21_odd_name(i2, j2, k2),
                &term_refs,
            );
        }
    }

    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn dimension_and_simplicity_guard() {
        let g = build_d21(&Scalar::alpha()).unwrap();
        assert_eq!(g.dim(), 17);
        assert_eq!(g.even_dim(), 9);
        assert!(build_d21(&Scalar::zero()).is_err());
        assert!(build_d21(&Scalar::from_int(-1)).is_err());
    }

    #[test]
    fn e1_raises_first_slot() {
        let g = build_d21(&Scalar::alpha()).unwrap();
        let br = g
            .bracket(&g.basis_element("E1"), &g.basis_element("v(-1,1,1)"))
            .unwrap();
        assert_eq!(br, g.basis_element("v(1,1,1)"));
    }

    #[test]
    fn top_bottom_odd_bracket() {
        // [v_{1,1,1}, v_{-1,-1,-1}] = -(1+a) H1 + H2 + a H3
        let a = Scalar::alpha();
        let g = build_d21(&a).unwrap();
        let br = g
            .bracket(
                &g.basis_element("v(1,1,1)"),
                &g.basis_element("v(-1,-1,-1)"),
            )
            .unwrap();
        let expect = g.combo(&[
            (-(Scalar::one() + a.clone()), "H1"),
            (Scalar::one(), "H2"),
            (a, "H3"),
        ]);
        assert_eq!(br, expect);
    }

    #[test]
    fn axioms_pass_symbolically_and_at_samples() {
        assert!(build_d21(&Scalar::alpha()).unwrap().verify_axioms().passed());
        for alpha in [int(2), int(-3), rat(1, 2)] {
            let g = build_d21(&Scalar::Rat(alpha)).unwrap();
            assert!(g.verify_axioms().passed());
        }
    }

    #[test]
    fn alpha_and_its_inverse_give_matching_shapes() {
        let a = build_d21(&Scalar::from_int(2)).unwrap();
        let b = build_d21(&Scalar::from_rat(1, 2)).unwrap();
        assert_eq!(a.dim(), b.dim());
        assert_eq!(a.even_dim(), b.even_dim());
    }
}
