//! so(7) = so(V, beta) with V ordered (e1, e2, e3, e0, e-3, e-2, e-1),
//! beta(e_i, e_-j) = delta_ij, beta(e0, e0) = 2, W and W* isotropic.
//! Basis: the 21 operators R_{u,w}(v) = beta(w,v) u - beta(u,v) w.

use super::MatrixLieAlgebra;
use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::superalg::SuperAlgebra;

pub const V7_DIM: usize = 7;

/// Position of e_k in the ordered basis (e1, e2, e3, e0, e-3, e-2, e-1).
pub fn v7_index(k: i32) -> usize {
    match k {
        1 => 0,
        2 => 1,
        3 => 2,
        0 => 3,
        -3 => 4,
        -2 => 5,
        -1 => 6,
        _ => panic!("no basis vector e{k}"),
    }
}

fn beta(a: i32, b: i32) -> Scalar {
    if a == 0 && b == 0 {
        Scalar::from_int(2)
    } else if a != 0 && a == -b {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// The ordered (u, w) index pairs naming the basis R_{e_u, e_w}.
pub fn so7_pairs() -> Vec<(i32, i32)> {
    let mut pairs = vec![(1, -1), (2, -2), (3, -3)];
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                pairs.push((i, -j));
            }
        }
    }
    pairs.extend([(1, 2), (1, 3), (2, 3)]);
    pairs.extend([(-2, -1), (-3, -1), (-3, -2)]);
    pairs.extend([(1, 0), (2, 0), (3, 0)]);
    pairs.extend([(-1, 0), (-2, 0), (-3, 0)]);
    pairs
}

pub fn so7_name(u: i32, w: i32) -> String {
    format!("R({u},{w})")
}

pub fn so7_names() -> Vec<String> {
    so7_pairs().iter().map(|&(u, w)| so7_name(u, w)).collect()
}

fn r_matrix(u: i32, w: i32) -> Matrix {
    let mut m = Matrix::zero(V7_DIM, V7_DIM);
    for k in [1, 2, 3, 0, -3, -2, -1] {
        let col = v7_index(k);
        // R_{u,w}(e_k) = beta(w, e_k) u - beta(u, e_k) w
        let cu = beta(w, k);
        if !cu.is_zero() {
            m[(v7_index(u), col)] = &m[(v7_index(u), col)] + &cu;
        }
        let cw = beta(u, k);
        if !cw.is_zero() {
            m[(v7_index(w), col)] = &m[(v7_index(w), col)] - &cw;
        }
    }
    m
}

pub fn build_so7_matrices() -> MatrixLieAlgebra {
    MatrixLieAlgebra::new(
        "so(7)",
        V7_DIM,
        so7_pairs()
            .into_iter()
            .map(|(u, w)| (so7_name(u, w), r_matrix(u, w)))
            .collect(),
    )
}

/// 21-dimensional even algebra with brackets from matrix commutators
/// re-expressed in the R basis.
pub fn build_so7() -> Result<SuperAlgebra, Error> {
    build_so7_matrices().to_abstract()
}

#[cfg(test)]
pub fn beta_gram() -> Matrix {
    let mut g = Matrix::zero(V7_DIM, V7_DIM);
    for a in [1, 2, 3, 0, -3, -2, -1] {
        for b in [1, 2, 3, 0, -3, -2, -1] {
            g[(v7_index(a), v7_index(b))] = beta(a, b);
        }
    }
    g
}
