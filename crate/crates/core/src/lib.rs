//! Exact E8 ⊃ A8 machinery: Weyl-orbit decompositions, orbit characters,
//! Casimir-eigenvalue polynomials and weight multiplicities.

pub mod error;
pub mod lattice;
pub mod linalg;
pub mod rat;

pub use error::{Error, Result};
pub use lattice::{DominantA8, DominantE8, MuVector};
pub use rat::Rat;
pub mod appendix1;
pub mod perm;
pub mod weyl;
pub mod poly;
pub mod symfunc;
pub mod omega_tables;
pub mod orbitchar;
pub mod registry;
pub mod repsys;
pub mod casimir;
pub mod kfamily;
pub mod random;
pub mod solver;
