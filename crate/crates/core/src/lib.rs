pub mod campaign;
pub mod catalog;
pub mod classes;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod lie;
pub mod linalg;
pub mod module;
pub mod rng;
pub mod structure;
pub mod theorems;
pub mod verdict;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Fp, Rational, F11, F13, F2, F3, F5, F7};
pub use lie::{LieAlgebra, Predicates, Quotient, Representation, Restriction, SeriesChain, SeriesKind};
pub use linalg::{Matrix, Subspace};
pub use structure::Config;
pub use verdict::{AbelianTower, Evidence, EvidenceKind, Status, Verdict};
