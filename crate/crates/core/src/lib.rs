//! Exact computation of Kazhdan–Lusztig cells for Iwahori–Hecke algebras of
//! finite Coxeter groups with positive (possibly unequal) parameters, and of
//! generalised tau-invariants built from admissible pairs.

pub mod cells;
pub mod coxeter;
pub mod hecke;
pub mod laurent;
pub mod tau;

pub use coxeter::{CoxeterError, CoxeterMatrix, CoxeterSystem, Element, GenSet, Parabolic, Side};
pub use laurent::LaurentPoly;
pub use hecke::{HeckeError, KlTable, WeightFunction};
pub use cells::{CellModule, CellPartition, CellSide};
pub use tau::{AdmissiblePair, LambdaConvention, TauError, TauPartition};
