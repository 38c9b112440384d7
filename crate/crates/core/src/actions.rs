//! Explicit component-group coset representatives, bundled per orbit
//! case: the grading automorphism (-1 in an SL2 factor) and the
//! orthogonal flip acting on so(7) by conjugation and on the spin module
//! through its lift.
//!
//! The analogous flip for the subregular G2 orbit has no rational matrix
//! (its entries generate a cubic field), so that component action is
//! bundled on the centre instead; the g2_flip_oracle integration test
//! verifies the underlying group element exactly over Q[a]/(a^3 - 6).

use crate::builders::{sigma_spin_table, spin_action_table, MatrixLieAlgebra};
use crate::centralizer::GroupElementAction;
use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::{Rational, Scalar};
use crate::superalg::SuperAlgebra;
use num_traits::Signed;

/// Action kinds the orbit catalog can reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionKind {
    /// +1 on the even part, -1 on the odd part.
    Grading,
    /// The orthogonal flip on so(7): fixes e_(3^2,1) and negates R(1,2),
    /// acting on the odd part via the spin lift.
    So7Flip,
}

impl ActionKind {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "grading" => Ok(ActionKind::Grading),
            "so7_flip" => Ok(ActionKind::So7Flip),
            other => Err(Error::Table {
                file: "orbits".into(),
                detail: format!("unknown action {other}"),
            }),
        }
    }

    pub fn build(&self, g: &SuperAlgebra) -> Result<GroupElementAction, Error> {
        match self {
            ActionKind::Grading => Ok(GroupElementAction::grading(g)),
            ActionKind::So7Flip => so7_flip(g),
        }
    }
}

/// Conjugation on a matrix Lie algebra, re-expressed in its basis:
/// column i of the result holds the coordinates of gamma m_i gamma^{-1}.
fn conjugation_block(model: &MatrixLieAlgebra, gamma: &Matrix) -> Result<Matrix, Error> {
    let inv = gamma.inverse().ok_or_else(|| Error::Construction {
        algebra: model.name.clone(),
        detail: "flip matrix is singular".into(),
    })?;
    let mut block = Matrix::zero(model.dim(), model.dim());
    for (i, m) in model.mats.iter().enumerate() {
        let conj = gamma.mul(m).mul(&inv);
        let coords = model.in_span(&conj).ok_or_else(|| Error::Construction {
            algebra: model.name.clone(),
            detail: "conjugation leaves the span".into(),
        })?;
        block.set_column(i, &coords);
    }
    Ok(block)
}

/// The 7x7 orthogonal flip on the so(7) module basis
/// (e1, e2, e3, e0, e-3, e-2, e-1): swaps e1/e2 and e-1/e-2, swaps
/// e3/e-3 and negates e0.
fn so7_flip_v7() -> Matrix {
    let mut m = Matrix::zero(7, 7);
    let one = Scalar::one();
    // columns: index of image
    let images = [(0usize, 1usize), (1, 0), (2, 4), (4, 2), (5, 6), (6, 5)];
    for (from, to) in images {
        m[(to, from)] = one.clone();
    }
    m[(3, 3)] = Scalar::from_int(-1);
    m
}

/// Solve for the spin lift: an 8x8 S with S rho(R) = rho(g R g^-1) S for
/// all R, normalized so it preserves the psi8 form. Both signs of S give
/// the same fixed subspaces on even centres; the positive-pivot one is
/// returned.
fn spin_lift(conj: &Matrix) -> Result<Matrix, Error> {
    let spin = sigma_spin_table(&spin_action_table()?);
    // unknowns s_{ij}, equations: sum_k s_ik rho_kj - rho'_ik s_kj = 0
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (r_idx, rho) in spin.iter().enumerate() {
        // rho' = image of R under conjugation, in coordinates
        let mut rho_conj = Matrix::zero(8, 8);
        for k in 0..21 {
            let c = &conj[(k, r_idx)];
            if !c.is_zero() {
                rho_conj = rho_conj.add(&spin[k].scale(c));
            }
        }
        for i in 0..8 {
            for j in 0..8 {
                let mut row = vec![Scalar::zero(); 64];
                for k in 0..8 {
                    // + s_ik rho_kj
                    row[i * 8 + k] = &row[i * 8 + k] + &rho[(k, j)];
                    // - rho'_ik s_kj
                    row[k * 8 + j] = &row[k * 8 + j] - &rho_conj[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    let ker = Matrix::from_rows(rows).kernel();
    if ker.dim() != 1 {
        return Err(Error::Construction {
            algebra: "F(4)".into(),
            detail: format!("spin lift space has dimension {}", ker.dim()),
        });
    }
    let mut s = Matrix::zero(8, 8);
    for i in 0..8 {
        for j in 0..8 {
            s[(i, j)] = ker.vectors()[0][i * 8 + j].clone();
        }
    }
    // normalize: S^t G S = c G with G the psi8 Gram (antidiagonal ones)
    let mut gram = Matrix::zero(8, 8);
    for i in 0..8 {
        gram[(i, 7 - i)] = Scalar::one();
    }
    let sgs = s.transpose().mul(&gram).mul(&s);
    let c = sgs[(0, 7)].clone();
    let c_rat = c.as_rational().ok_or_else(|| Error::Construction {
        algebra: "F(4)".into(),
        detail: "spin lift norm is not rational".into(),
    })?;
    if !c_rat.is_positive() {
        return Err(Error::Construction {
            algebra: "F(4)".into(),
            detail: "spin lift norm is not positive".into(),
        });
    }
    let scale = sqrt_rational(&c_rat).ok_or_else(|| Error::Construction {
        algebra: "F(4)".into(),
        detail: "spin lift norm is not a square".into(),
    })?;
    let s = s.scale(&Scalar::Rat(crate::scalar::int(1) / scale));
    // sanity: now S^t G S = G exactly
    if s.transpose().mul(&gram).mul(&s) != gram {
        return Err(Error::Construction {
            algebra: "F(4)".into(),
            detail: "spin lift does not preserve psi8".into(),
        });
    }
    Ok(s)
}

fn sqrt_rational(r: &Rational) -> Option<Rational> {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

fn so7_flip(f4: &SuperAlgebra) -> Result<GroupElementAction, Error> {
    let gamma = so7_flip_v7();
    let so7 = crate::builders::build_so7_matrices();
    let conj = conjugation_block(&so7, &gamma)?;
    let ne = f4.even_dim();
    let mut even = Matrix::identity(ne);
    for i in 0..21 {
        for j in 0..21 {
            even[(3 + i, 3 + j)] = conj[(i, j)].clone();
        }
    }
    let lift = spin_lift(&conj)?;
    let no = f4.odd_dim();
    let mut odd = Matrix::zero(no, no);
    for copy in 0..2 {
        for a in 0..8 {
            for b in 0..8 {
                odd[(copy * 8 + a, copy * 8 + b)] = lift[(a, b)].clone();
            }
        }
    }
    GroupElementAction::from_blocks("so7_flip", f4, &even, &odd)
}
