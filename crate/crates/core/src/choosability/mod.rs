//! §2 choosability criteria, the `U`/`B` family classifiers, concrete-list
//! weighting search and the Theorem 4.3 clique extension.

mod criteria;
mod family;
mod weighting;

pub use criteria::{check_12_certificate, check_13_certificate, check_22_certificate, CLAIM_12};
pub use family::{classify_family, CaseReport, FamilyTag, FamilyVerdict, Parity};
pub use weighting::{
    clique_extension_graph, extend_weighting_clique, find_proper_weighting, find_proper_weighting_with_stats,
    parse_rational, proof_lists, rational_serde, ExtensionRoute, Extension, SearchStats, TotalListAssignment,
    TotalWeighting,
};
