//! Exact module categories of representation-finite bound quiver algebras.
//!
//! Everything is generic over the scalar type; the concrete prime fields used
//! by the command-line tool are aliased below.

pub mod algebra;
pub mod ar;
pub mod cache;
pub mod catalog;
pub mod error;
pub mod field;
pub mod ice;
pub mod lattice;
pub mod linalg;
pub mod module;
pub mod set;
pub mod subcat;
pub mod tilting;
pub mod verify;

pub use algebra::{parse_algebra, Algebra, QuiverSpec};
pub use error::{Error, Result};
pub use field::{Field, FiniteField, Fp};
pub use linalg::Matrix;
pub use module::{hom_basis, Limits, Module, Morphism};

pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
pub type Gf5 = Fp<5>;
pub type Gf7 = Fp<7>;
pub type Gf11 = Fp<11>;
pub type Gf13 = Fp<13>;
