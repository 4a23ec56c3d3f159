//! Cocharacter sequences of the Grassmann algebra `E`, its even part `E0`,
//! the block-triangular algebra `G = (E E; 0 E0)`, `UT2(F)` and `UT2(E)`.
//!
//! Everything is computed in a degree-truncated ring of Schur functions with
//! integer coefficients ([`schur_ring`]), whose products come from an
//! enumerative Littlewood–Richardson engine ([`tableaux`]) that is itself
//! checked against a semistandard-tableau monomial oracle. [`cocharacters`]
//! builds the Hilbert series of the five algebras, [`graded`] restricts
//! cocharacters to Young subgroups.

pub mod cocharacters;
pub mod error;
pub mod graded;
pub mod partitions;
pub mod schur_ring;
pub mod tableaux;

pub use cocharacters::closed_forms::{verify_formula, ClosedForm, Finding, FormulaId, Status};
pub use cocharacters::{cocharacter, codimension, proper_cocharacter, AlgebraId};
pub use error::{Error, Result};
pub use graded::{
    cocharacter_restriction, graded_cocharacter_ut2e, graded_dimension, restrict,
    verify_restriction_table, BiCharacter, GradedCocharacter, RestrictionFinding,
};
pub use partitions::{generate_partitions, Partition};
pub use schur_ring::{geometric_factor, s1_minus_1, CharacterDecomposition, SchurSeries};
pub use tableaux::{
    expand_product, lr_coefficient, oracle_product_check, schur_monomials, LrCache,
};
