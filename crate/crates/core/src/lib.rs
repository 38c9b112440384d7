//! Exact-arithmetic kernel for the exceptional Lie superalgebras
//! D(2,1;α), G(3) and F(4).
//!
//! The crate builds the three algebras from explicit structure data,
//! computes centralizers `g^e` and centres of centralizers `z(g^e)` of
//! nilpotent even elements, produces labelled Dynkin diagrams, and
//! mechanically checks the dimension identities relating them.
//!
//! All arithmetic is exact: rational numbers with arbitrary-precision
//! integers, or rational functions in the parameter α for D(2,1;α).

pub mod actions;
pub mod builders;
pub mod centralizer;
pub mod data;
pub mod error;
pub mod linalg;
pub mod orbits;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod superalg;
pub mod theorems;

pub use error::Error;
pub use scalar::{Poly, RatFunc, Rational, Scalar};

/// The three algebras the crate knows how to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    D21,
    G3,
    F4,
}

impl AlgebraId {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "d21" | "d(2,1)" | "d(2,1;a)" | "d(2,1;alpha)" => Ok(AlgebraId::D21),
            "g3" | "g(3)" => Ok(AlgebraId::G3),
            "f4" | "f(4)" => Ok(AlgebraId::F4),
            other => Err(Error::UnknownAlgebra(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AlgebraId::D21 => "D(2,1;a)",
            AlgebraId::G3 => "G(3)",
            AlgebraId::F4 => "F(4)",
        }
    }

    /// Rank of the root system (number of simple roots).
    pub fn rank(&self) -> usize {
        match self {
            AlgebraId::D21 | AlgebraId::G3 => 3,
            AlgebraId::F4 => 4,
        }
    }
}

impl std::fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
