//! Permanent indices: exhaustive search with witnesses, Lemma 3.1
//! certificates, and reduction traces.

mod certificate;
mod certify;
mod lemma31;
mod reduce;
mod search;

pub use certificate::{bigint, bigint_opt, Certificate, MatrixKind, Method, Outcome, Selection, Witness};
pub use certify::certify_pindA;
pub use lemma31::{
    certify_base, proof_orientation, verify_lemma31, InnerWitness, Lemma31Data, ProofOrientation, VertexCheck,
};
pub use reduce::{delete_vertices, next_reduction, reduce_for_pindB, replay_trace, rule_applies, ReductionStep, Rule};
pub use search::{find_nonzero_selection, permanent_with_multiplicities, pind_exhaustive, PindResult, PindWitness};
