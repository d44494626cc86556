//! Irreducible decomposition, exponents, freeness certificates and
//! logarithmic derivations.

mod decompose;
mod derivation;
mod freeness;

pub use decompose::{irreducible_components, is_irreducible, IrreducibleDecomposition};
pub use derivation::{
    annihilator_presentation, check_logarithmic, family_basis, plane_basis, saito_check, tilde, Derivation,
    NonLogarithmic, SaitoOutcome, TildeOperator,
};
pub use freeness::{
    exponents, freeness, Certificate, ExponentMultiset, FreenessVerdict, InductiveNode, InductiveStep,
    NonIntegralRoots, Outcome, SaitoWitness, DEFAULT_DEPTH_LIMIT,
};
