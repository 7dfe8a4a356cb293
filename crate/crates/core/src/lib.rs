//! Exact certificates for total weight choosability of graphs.
//!
//! The crate follows the paper's §1–§4 pipeline:
//!
//! - [`graph`]: graphs, orientations, named families, the tree / unicyclic /
//!   bicyclic decomposition and the `L`, `R`, `Q` operations.
//! - [`matrix`]: the edge-row matrices `A_G`, `B_G`, `A_(η)` and Theorem 4.2's `B''`.
//! - [`permanent`]: Ryser permanent, naive oracle, parity and the Sachs formula.
//! - [`matching`]: perfect matchings of line graphs, Dong's tree formula and
//!   the Lemma 2.6 split recursion.
//! - [`pind`]: permanent indices with witnesses, the Lemma 3.1 verifier and
//!   the reduction engine for `pind(B_G) <= 2`.
//! - [`choosability`]: the §2 criteria, family classifiers and exact weighting search.
//! - [`cli`]: the `twc` command-line front end.
//!
//! Exponential searches are bounded by [`caps::SizeCaps`].

pub mod caps;
pub mod choosability;
pub mod cli;
pub mod graph;
pub mod matching;
pub mod matrix;
pub mod permanent;
pub mod pind;

use thiserror::Error;

pub use graph::{Graph, GraphError, OrientedGraph};
pub use matrix::{IndexFunction, Label, LabeledIntMatrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("{what}: size {size} exceeds cap {cap} (raise it with TWC_SIZE_CAP)")]
    SizeCap { what: &'static str, size: u128, cap: u128 },
    #[error("{what}: search budget exhausted ({progress}); raise it with TWC_SIZE_CAP")]
    Budget { what: &'static str, progress: String },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeCap { what, size: size as u128, cap: cap as u128 })
    } else {
        Ok(())
    }
}
