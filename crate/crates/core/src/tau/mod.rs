//! Strings, the star and tilde operations, admissible pairs and the
//! generalised tau-invariants built from them.

mod admissible;
mod conjecture;
mod refine;
mod strings;

use thiserror::Error;

pub use admissible::{AdmissibilityReport, AdmissiblePair, CellVerdict, PairKind};
pub use conjecture::{
    conjecture_check, conjecture_check_with, standard_pairs, verify_all, ConjectureReport, Verdict, Witness, WitnessKind,
};
pub use refine::{tau_delta_partition, vogan_tau_partition, LambdaConvention, PairSummary, TauPartition, TauVariant};
pub use strings::{in_d_r, star, string_decomposition, string_of, t_operator, tilde, CosetStrings};

/// Generator indices are 0-based in fields and 1-based in messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TauError {
    #[error("element is not in D_R(s,t)")]
    NotInDomain,
    #[error("s{} and s{} do not generate a dihedral subgroup with st != ts", .s + 1, .t + 1)]
    NotAPair { s: usize, t: usize },
    #[error("order m = {m} of st, expected {expected}")]
    WrongOrder { expected: &'static str, m: usize },
    #[error("weights of s{} and s{} do not fit this construction", .s + 1, .t + 1)]
    WrongWeights { s: usize, t: usize },
    #[error("the Vogan variant requires equal parameters")]
    UnequalWeights,
    #[error("pair (s{}, s{}) has not been verified admissible", .s + 1, .t + 1)]
    UnverifiedPair { s: usize, t: usize },
    #[error("pair (s{}, s{}) is not admissible: {reason}", .s + 1, .t + 1)]
    NotAdmissible { s: usize, t: usize, reason: String },
    #[error("invalid delta: {0}")]
    InvalidDelta(String),
}
