//! The G2 matrix model inside gl(V7), V7 ordered (e3, e2, e1, e0, e-1, e-2, e-3).
//!
//! The generators x1, x2, y1, y2, h1, h2 are explicit 7x7 matrices; the
//! remaining positive root vectors are generated by x3 = [x1,x2],
//! x4 = [x1,x3], x5 = [x1,x4], x6 = [x5,x2], and the negative ones
//! mirror-wise from y1, y2. The mirror convention is validated by the
//! graded Jacobi identity of the assembled G(3) (see the g3 tests): the
//! straight mirror signs pass, so they are frozen here.

use super::{int_matrix, MatrixLieAlgebra};
use crate::error::Error;
use crate::superalg::SuperAlgebra;

pub const G2_NAMES: [&str; 14] = [
    "h1", "h2", "x1", "x2", "x3", "x4", "x5", "x6", "y1", "y2", "y3", "y4", "y5", "y6",
];

pub fn build_g2() -> MatrixLieAlgebra {
    let x1 = int_matrix(&[
        &[0, -1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, -2, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, 0, 0, 0],
    ]);
    let x2 = int_matrix(&[
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, -1, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
    ]);
    let y1 = int_matrix(&[
        &[0, 0, 0, 0, 0, 0, 0],
        &[-1, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 2, 0, 0, 0, 0],
        &[0, 0, 0, -1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1, 0],
    ]);
    let y2 = int_matrix(&[
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, -1, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
    ]);
    let h1 = int_matrix(&[
        &[1, 0, 0, 0, 0, 0, 0],
        &[0, -1, 0, 0, 0, 0, 0],
        &[0, 0, 2, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, -2, 0, 0],
        &[0, 0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0, 0, -1],
    ]);
    let h2 = int_matrix(&[
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0],
        &[0, 0, -1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 0, -1, 0],
        &[0, 0, 0, 0, 0, 0, 0],
    ]);

    let comm = MatrixLieAlgebra::commutator;
    let x3 = comm(&x1, &x2);
    let x4 = comm(&x1, &x3);
    let x5 = comm(&x1, &x4);
    let x6 = comm(&x5, &x2);
    let y3 = comm(&y1, &y2);
    let y4 = comm(&y1, &y3);
    let y5 = comm(&y1, &y4);
    let y6 = comm(&y5, &y2);

    let mats = [
        h1, h2, x1, x2, x3, x4, x5, x6, y1, y2, y3, y4, y5, y6,
    ];
    MatrixLieAlgebra::new(
        "G2",
        7,
        G2_NAMES
            .iter()
            .map(|n| n.to_string())
            .zip(mats)
            .collect(),
    )
}

/// Structure-constant model of G2 derived from the matrix realization.
pub fn build_g2_abstract() -> Result<SuperAlgebra, Error> {
    build_g2().to_abstract()
}
