//! Constructions of the concrete algebras: sl(2), so(7), the G2 matrix
//! model, the Clifford/spin machinery and the three exceptional
//! superalgebras. The pairing tables live in plain-text data files under
//! `data/` so they can be diffed against their sources.

mod clifford;
mod d21;
mod f4;
mod g2;
mod g3;
mod so7;

pub use clifford::{clifford_oracle, spin_action_table, SpinTable};
pub use d21::build_d21;
pub use f4::{build_f4, build_f4_from_tables, f4_odd_names, F4Tables};
pub use g2::{build_g2, build_g2_abstract, G2_NAMES};
pub use g3::{build_g3, build_g3_from_tables, g3_odd_names, G3Tables};
pub use so7::{build_so7, build_so7_matrices, so7_names, V7_DIM};
pub use f4::sigma_spin_table;

use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::superalg::{AlgebraBuilder, Parity, SuperAlgebra};

/// sl(2) = <E, H, F> with [H,E] = 2E, [H,F] = -2F, [E,F] = H.
pub fn build_sl2() -> SuperAlgebra {
    let mut b = AlgebraBuilder::new(
        "sl(2)",
        ["E", "H", "F"]
            .iter()
            .map(|n| (n.to_string(), Parity::Even))
            .collect(),
    );
    let two = Scalar::from_int(2);
    b.set_terms("H", "E", &[(two.clone(), "E")]);
    b.set_terms("E", "H", &[(-&two, "E")]);
    b.set_terms("H", "F", &[(-&two, "F")]);
    b.set_terms("F", "H", &[(two.clone(), "F")]);
    b.set_terms("E", "F", &[(Scalar::one(), "H")]);
    b.set_terms("F", "E", &[(-Scalar::one(), "H")]);
    b.finish()
}

/// A Lie algebra realized by named n x n matrices, closed under the
/// commutator within the span of its basis.
#[derive(Debug, Clone)]
pub struct MatrixLieAlgebra {
    pub name: String,
    pub ambient: usize,
    pub names: Vec<String>,
    pub mats: Vec<Matrix>,
}

impl MatrixLieAlgebra {
    pub fn new(name: impl Into<String>, ambient: usize, basis: Vec<(String, Matrix)>) -> Self {
        let (names, mats): (Vec<_>, Vec<_>) = basis.into_iter().unzip();
        for m in &mats {
            assert_eq!((m.rows(), m.cols()), (ambient, ambient));
        }
        MatrixLieAlgebra {
            name: name.into(),
            ambient,
            names,
            mats,
        }
    }

    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    pub fn matrix_of(&self, name: &str) -> &Matrix {
        let i = self
            .names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("no matrix named {name}"));
        &self.mats[i]
    }

    pub fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
        a.mul(b).sub(&b.mul(a))
    }

    /// Express a matrix in the span of the basis; None when outside.
    pub fn in_span(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        let n2 = self.ambient * self.ambient;
        let mut sys = Matrix::zero(n2, self.dim());
        for (col, b) in self.mats.iter().enumerate() {
            for i in 0..self.ambient {
                for j in 0..self.ambient {
                    sys[(i * self.ambient + j, col)] = b[(i, j)].clone();
                }
            }
        }
        let mut rhs = vec![Scalar::zero(); n2];
        for i in 0..self.ambient {
            for j in 0..self.ambient {
                rhs[i * self.ambient + j] = m[(i, j)].clone();
            }
        }
        sys.solve(&rhs)
    }

    /// Abstract structure-constant model; every commutator must stay in
    /// the span, otherwise the transcription is broken and this errors.
    pub fn to_abstract(&self) -> Result<SuperAlgebra, Error> {
        let mut b = AlgebraBuilder::new(
            self.name.clone(),
            self.names
                .iter()
                .map(|n| (n.clone(), Parity::Even))
                .collect(),
        );
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let c = Self::commutator(&self.mats[i], &self.mats[j]);
                let coords = self.in_span(&c).ok_or_else(|| Error::Construction {
                    algebra: self.name.clone(),
                    detail: format!(
                        "[{}, {}] escapes the span of the basis",
                        self.names[i], self.names[j]
                    ),
                })?;
                b.set_indexed(i, j, coords);
            }
        }
        Ok(b.finish())
    }
}

/// Dense matrix from integer rows.
pub fn int_matrix(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect(),
    )
}
