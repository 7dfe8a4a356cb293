//! The §2 criteria for `(1,2)`-choosability and the `check` front ends for
//! `(2,2)` (`pind(A_G) = 1`) and `(1,3)` (`pind(B_G) <= 2`).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::caps::SizeCaps;
use crate::graph::{classify, CyclicKind, Graph, OrientedGraph};
use crate::matching::count_pm_line_graph;
use crate::matrix::{build_a, build_b};
use crate::permanent::permanent;
use crate::pind::{
    certify_pindA, pind_exhaustive, reduce_for_pindB, Certificate, MatrixKind, Method, Outcome, Selection, Witness,
};
use crate::{Error, Result};

pub const CLAIM_12: &str = "(1,2)-choosable";

/// Lemma 2.1 then Theorem 2.2: `per(B_G) != 0` certifies directly; otherwise an
/// odd `M(L(G))` certifies through `per(B_G) ≡ M(L(G)) (mod 2)`.
///
/// When `m` exceeds the permanent cap the parity route is tried first and
/// alone. A zero permanent makes the parity route unable to certify (the
/// congruence forces `M(L(G))` even), so that path ends inconclusive.
pub fn check_12_certificate(g: &Graph, d: &OrientedGraph) -> Result<Certificate> {
    if d.graph() != g {
        return Err(Error::Argument("orientation is not of the given graph".into()));
    }
    if g.m() == 0 {
        return Err(Error::Argument("check_12_certificate needs at least one edge".into()));
    }
    let caps = SizeCaps::global();
    let mut notes = Vec::new();
    let mut per_value = None;
    if g.m() <= caps.permanent {
        let b = build_b(d)?;
        let per = permanent(&b)?;
        if !per.is_zero() {
            return Ok(Certificate {
                claim: CLAIM_12.into(),
                method: Method::Permanent,
                outcome: Outcome::Certified,
                witness: Witness::Selection(Selection {
                    matrix_kind: MatrixKind::B,
                    orientation: d.clone(),
                    multiplicities: vec![1; g.m()],
                    bound: 1,
                }),
                trace: Vec::new(),
                permanent_value: Some(per),
                notes: vec!["Lemma 2.1: per(B_G) != 0".into()],
            });
        }
        notes.push("per(B_G) = 0, so M(L(G)) is even by per(B_G) ≡ M(L(G)) (mod 2)".into());
        per_value = Some(BigInt::zero());
    } else {
        notes.push(format!("m = {} exceeds the permanent cap {}; parity route only", g.m(), caps.permanent));
    }
    let count = match count_pm_line_graph(g) {
        Ok(c) => c,
        Err(e @ Error::SizeCap { .. }) if per_value.is_none() => return Err(e),
        Err(e @ Error::SizeCap { .. }) => {
            notes.push(format!("M(L(G)) not computed: {e}"));
            return Ok(inconclusive(CLAIM_12, Method::Parity, per_value, notes));
        }
        Err(e) => return Err(e),
    };
    if count % 2 == 1 {
        return Ok(Certificate {
            claim: CLAIM_12.into(),
            method: Method::Parity,
            outcome: Outcome::Certified,
            witness: Witness::Matchings { graph: g.clone(), count },
            trace: Vec::new(),
            permanent_value: per_value,
            notes: vec!["Theorem 2.2: M(L(G)) odd and per(B_G) ≡ M(L(G)) (mod 2)".into()],
        });
    }
    notes.push(format!("M(L(G)) = {count} is even; neither criterion applies"));
    Ok(inconclusive(CLAIM_12, Method::Parity, per_value, notes))
}

fn inconclusive(claim: &str, method: Method, per: Option<BigInt>, notes: Vec<String>) -> Certificate {
    Certificate {
        claim: claim.into(),
        method,
        outcome: Outcome::Inconclusive,
        witness: Witness::None,
        trace: Vec::new(),
        permanent_value: per,
        notes,
    }
}

/// `pind(A_G) = 1`, hence `(2,2)`-choosable: [`certify_pindA`] for
/// `m <= n + 1`, exhaustive search on `A_G` otherwise.
pub fn check_22_certificate(g: &Graph) -> Result<Certificate> {
    let mut cert = match certify_pindA(g) {
        Err(Error::Unsupported(_)) => {
            let d = OrientedGraph::as_listed(g);
            let r = pind_exhaustive(&build_a(&d), 1)?;
            match r.witness {
                Some(w) => Certificate {
                    claim: "pind(A_G)=1".into(),
                    method: Method::Exhaustive,
                    outcome: Outcome::Certified,
                    witness: Witness::Selection(Selection {
                        matrix_kind: MatrixKind::A,
                        orientation: d,
                        multiplicities: w.multiplicities,
                        bound: 1,
                    }),
                    trace: Vec::new(),
                    permanent_value: Some(w.permanent),
                    notes: vec![format!("{} vectors checked", r.vectors_checked)],
                },
                None => Certificate {
                    claim: "pind(A_G)=1".into(),
                    method: Method::Exhaustive,
                    outcome: Outcome::Refuted,
                    witness: Witness::None,
                    trace: Vec::new(),
                    permanent_value: None,
                    notes: vec![format!("all {} selections have zero permanent", r.vectors_checked)],
                },
            }
        }
        other => other?,
    };
    if cert.is_certified() {
        cert.notes.push("pind(A_G) = 1 implies (2,2)-choosable (§1)".into());
    }
    Ok(cert)
}

/// `pind(B_G) <= 2`, hence `(1,3)`-choosable, via [`reduce_for_pindB`].
pub fn check_13_certificate(g: &Graph) -> Result<Certificate> {
    let mut cert = reduce_for_pindB(g)?;
    if cert.is_certified() {
        cert.notes.push("pind(B_G) <= 2 implies (1,3)-choosable (§1)".into());
    }
    if !matches!(classify(g)?.kind, CyclicKind::Tree | CyclicKind::Unicyclic) && !cert.is_certified() {
        cert.notes.push("the paper's reduction results cover unicyclic and bicyclic bases".into());
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;

    fn check12(spec: &str) -> Certificate {
        let g = family(spec).unwrap();
        check_12_certificate(&g, &OrientedGraph::as_listed(&g)).unwrap()
    }

    #[test]
    fn spec_examples() {
        let c = check12("path:3");
        assert!(c.is_certified());
        assert_eq!(c.method, Method::Permanent);
        assert_eq!(c.permanent_value, Some(BigInt::from(-1)));
        c.verify().unwrap();

        let c = check12("cycle:3");
        assert_eq!(c.outcome, Outcome::Inconclusive);

        let c = check12("path:5");
        assert!(c.is_certified());
        c.verify().unwrap();
    }

    #[test]
    fn mismatched_orientation_rejected() {
        let g = family("path:3").unwrap();
        let d = OrientedGraph::as_listed(&family("path:4").unwrap());
        assert!(check_12_certificate(&g, &d).is_err());
    }

    #[test]
    fn pind_checks() {
        let c = check_22_certificate(&family("b1:3,3").unwrap()).unwrap();
        assert!(c.is_certified());
        c.verify().unwrap();
        let c = check_22_certificate(&family("complete:4").unwrap()).unwrap();
        assert_ne!(c.outcome, Outcome::Inconclusive);
        c.verify().unwrap();
        let c = check_13_certificate(&family("b2:3,3,2").unwrap()).unwrap();
        assert!(c.is_certified());
        c.verify().unwrap();
    }
}
