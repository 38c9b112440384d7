//! The 128-dimensional Clifford algebra C(V, beta) as a normal-ordered
//! monomial rewriting system, the left module S with e_{-i} s = 0 and
//! e_0 s = s, and the 8x8 spin-action matrices derived from it. This is
//! an independent oracle for the transcribed spin-action table.

use super::so7::{so7_name, so7_pairs};
use crate::data::parse_pair_table;
use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::{int, Rational};
use crate::scalar::Scalar;
use std::collections::HashMap;

/// Generator order for normal-ordered monomials: e1 e2 e3 e0 e-3 e-2 e-1.
const GEN_ORDER: [i32; 7] = [1, 2, 3, 0, -3, -2, -1];

fn gen_pos(k: i32) -> usize {
    GEN_ORDER.iter().position(|&g| g == k).unwrap()
}

fn beta(a: i32, b: i32) -> Rational {
    if a == 0 && b == 0 {
        int(2)
    } else if a != 0 && a == -b {
        int(1)
    } else {
        int(0)
    }
}

/// A Clifford element: normal monomials (bitmask over GEN_ORDER) with
/// rational coefficients.
type Cliff = HashMap<u8, Rational>;

fn add_term(c: &mut Cliff, mask: u8, coef: Rational) {
    use num_traits::Zero;
    if coef.is_zero() {
        return;
    }
    let e = c.entry(mask).or_insert_with(|| int(0));
    *e += coef;
    if e.is_zero() {
        c.remove(&mask);
    }
}

/// Multiply the single generator at position `g` into a normal monomial.
fn mul_gen(g: usize, mask: u8) -> Vec<(Rational, u8)> {
    let Some(first) = (0..7).find(|i| mask & (1 << i) != 0) else {
        return vec![(int(1), 1 << g)];
    };
    match g.cmp(&first) {
        std::cmp::Ordering::Less => vec![(int(1), mask | (1 << g))],
        std::cmp::Ordering::Equal => {
            // e_g e_g = beta(g, g) / 2
            let b = beta(GEN_ORDER[g], GEN_ORDER[g]) / int(2);
            if b == int(0) {
                vec![]
            } else {
                vec![(b, mask & !(1 << first))]
            }
        }
        std::cmp::Ordering::Greater => {
            // e_g e_first = -e_first e_g + beta(g, first)
            let rest = mask & !(1 << first);
            let mut out = Vec::new();
            for (c, m) in mul_gen(g, rest) {
                out.push((-c, m | (1 << first)));
            }
            let b = beta(GEN_ORDER[g], GEN_ORDER[first]);
            if b != int(0) {
                out.push((b, rest));
            }
            out
        }
    }
}

fn mul_mono_into(coef: &Rational, a: u8, b: u8, out: &mut Cliff) {
    // fold the generators of a, rightmost first, onto b
    let mut acc: Cliff = HashMap::new();
    acc.insert(b, coef.clone());
    for g in (0..7).rev() {
        if a & (1 << g) == 0 {
            continue;
        }
        let mut next: Cliff = HashMap::new();
        for (mask, c) in &acc {
            for (c2, m2) in mul_gen(g, *mask) {
                add_term(&mut next, m2, c * &c2);
            }
        }
        acc = next;
    }
    for (m, c) in acc {
        add_term(out, m, c);
    }
}

fn cliff_mul(a: &Cliff, b: &Cliff) -> Cliff {
    let mut out = HashMap::new();
    for (&ma, ca) in a {
        for (&mb, cb) in b {
            mul_mono_into(&(ca * cb), ma, mb, &mut out);
        }
    }
    out
}

/// phi(R_{u,w}) = e_u e_w - beta(u,w)/2 inside C(V, beta).
fn phi(u: i32, w: i32) -> Cliff {
    let mut uw: Cliff = HashMap::new();
    for (coef, m) in mul_gen(gen_pos(u), 1 << gen_pos(w)) {
        add_term(&mut uw, m, coef);
    }
    add_term(&mut uw, 0, -(beta(u, w) / int(2)));
    uw
}

/// V8 monomials in the order s, e1s, e2s, e3s, e12s, e13s, e23s, e123s,
/// encoded as bitmasks over the positive generators e1, e2, e3.
pub const V8_MASKS: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

pub const V8_NAMES: [&str; 8] = ["s", "e1s", "e2s", "e3s", "e12s", "e13s", "e23s", "e123s"];

fn v8_index(mask: u8) -> Option<usize> {
    V8_MASKS.iter().position(|&m| m == mask)
}

/// Reduce a Clifford element applied to s: negative generators kill s,
/// e0 acts as the identity on s.
fn act_on_s(c: &Cliff) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); 8];
    for (&mask, coef) in c {
        // bits 4..6 are e-3, e-2, e-1; bit 3 is e0
        if mask & 0b1110000 != 0 {
            continue;
        }
        let pos = mask & 0b0000111;
        let idx = v8_index(pos).expect("positive monomial");
        v[idx] = &v[idx] + &Scalar::Rat(coef.clone());
    }
    v
}

/// 21 spin-action matrices keyed in the so(7) basis order; column j is
/// the image of the j-th V8 basis vector.
pub type SpinTable = Vec<Matrix>;

/// Derive the spin action from the Clifford module alone.
pub fn clifford_oracle() -> SpinTable {
    so7_pairs()
        .into_iter()
        .map(|(u, w)| {
            let op = phi(u, w);
            let mut m = Matrix::zero(8, 8);
            for (j, &wmask) in V8_MASKS.iter().enumerate() {
                let mut arg: Cliff = HashMap::new();
                arg.insert(wmask, int(1));
                let img = cliff_mul(&op, &arg);
                m.set_column(j, &act_on_s(&img));
            }
            m
        })
        .collect()
}

/// The transcribed table from the data file, in the same layout.
pub fn spin_action_table() -> Result<SpinTable, Error> {
    let text = include_str!("../../data/spin_action.table");
    let entries = parse_pair_table(text, "spin_action.table")?;
    let mut mats = vec![Matrix::zero(8, 8); 21];
    let names: Vec<String> = so7_pairs().iter().map(|&(u, w)| so7_name(u, w)).collect();
    for e in entries {
        let r = names
            .iter()
            .position(|n| *n == e.row)
            .ok_or_else(|| Error::Table {
                file: "spin_action.table".into(),
                detail: format!("unknown so(7) element {}", e.row),
            })?;
        let col = V8_NAMES
            .iter()
            .position(|n| *n == e.col)
            .ok_or_else(|| Error::Table {
                file: "spin_action.table".into(),
                detail: format!("unknown V8 element {}", e.col),
            })?;
        for (coef, name) in e.value {
            let k = V8_NAMES
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| Error::Table {
                    file: "spin_action.table".into(),
                    detail: format!("unknown V8 element {name}"),
                })?;
            mats[r][(k, col)] = &mats[r][(k, col)] + &Scalar::Rat(coef);
        }
    }
    Ok(mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::build_so7;

    #[test]
    fn clifford_relations() {
        let mono = |k: i32| -> Cliff {
            let mut c = HashMap::new();
            c.insert(1 << gen_pos(k), int(1));
            c
        };
        // e1 e-1 is already normal ordered, so e1 e-1 s = e1 (e-1 s) = 0
        let v = act_on_s(&cliff_mul(&mono(1), &mono(-1)));
        assert!(v.iter().all(|x| x.is_zero()));
        // e-1 e1 rewrites to 1 - e1 e-1, so e-1 e1 s = s
        let v = act_on_s(&cliff_mul(&mono(-1), &mono(1)));
        assert_eq!(v[0], Scalar::one());
        assert!(v[1..].iter().all(|x| x.is_zero()));
        // e0^2 = 1 and e1^2 = 0
        let sq = cliff_mul(&mono(0), &mono(0));
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.get(&0), Some(&int(1)));
        assert!(cliff_mul(&mono(1), &mono(1)).is_empty());
    }

    #[test]
    fn phi_r1m1_acts_as_minus_half_on_s() {
        let table = clifford_oracle();
        // R(1,-1) is the first basis element; column of s
        let m = &table[0];
        assert_eq!(m[(0, 0)], Scalar::from_rat(-1, 2));
    }

    #[test]
    fn oracle_matches_transcribed_table() {
        let oracle = clifford_oracle();
        let table = spin_action_table().unwrap();
        for (i, (a, b)) in oracle.iter().zip(&table).enumerate() {
            assert_eq!(a, b, "spin action mismatch for {}", so7_names_at(i));
        }
    }

    fn so7_names_at(i: usize) -> String {
        let (u, w) = so7_pairs()[i];
        so7_name(u, w)
    }

    #[test]
    fn spin_action_is_a_representation() {
        // action([R, R']) = action(R) action(R') - action(R') action(R)
        let so7 = build_so7().unwrap();
        let table = clifford_oracle();
        for i in 0..21 {
            let bi = so7.basis_element(&so7.labels()[i].name);
            for j in 0..21 {
                let bj = so7.basis_element(&so7.labels()[j].name);
                let br = so7.bracket(&bi, &bj).unwrap();
                let mut expect = Matrix::zero(8, 8);
                for (k, c) in br.coords.iter().enumerate() {
                    if !c.is_zero() {
                        expect = expect.sub(&table[k].scale(&-c.clone()));
                    }
                }
                let direct = table[i].mul(&table[j]).sub(&table[j].mul(&table[i]));
                assert_eq!(direct, expect, "representation fails on ({i},{j})");
            }
        }
    }
}
