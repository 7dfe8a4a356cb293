//! `certify_pindA`: leaf stripping (Lemma 3.2) plus the Lemma 3.1 proof
//! orientation of the base (Theorems 3.10 / 3.12).

use crate::graph::{classify, CyclicKind, Graph, OrientedGraph};
use crate::matrix::build_a;
use crate::{Error, Result};

use super::certificate::{Certificate, MatrixKind, Method, Outcome, Selection, Witness};
use super::lemma31::certify_base;
use super::reduce::{push_step, Rule};
use super::search::pind_exhaustive;

/// Certificate for `pind(A_G) = 1` on a connected graph with `m <= n + 1`.
///
/// Hanging trees are stripped leaf by leaf (Lemma 3.2); a cyclic base is then
/// certified by its proof orientation via [`verify_lemma31`](super::verify_lemma31),
/// and a tree (stripped down to `K2`) by exhaustive search on `A_{K2}`.
#[allow(non_snake_case)]
pub fn certify_pindA(g: &Graph) -> Result<Certificate> {
    g.require_connected()?;
    if g.m() == 0 {
        return Err(Error::Argument("certify_pindA needs at least one edge".into()));
    }
    let c = classify(g)?;
    if c.kind == CyclicKind::Other {
        return Err(Error::Unsupported(format!("certify_pindA handles m <= n + 1; got n = {}, m = {}", g.n(), g.m())));
    }
    let mut trace = Vec::new();
    let mut cur = g.clone();
    let mut labels: Vec<usize> = g.vertices().collect();
    let is_base = |orig: usize| c.kind == CyclicKind::Tree || c.base_vertices.contains(&orig);
    loop {
        // Strip the largest-id leaf that is not a base vertex; a tree keeps K2.
        let leaf = (1..=cur.n()).rev().find(|&v| {
            cur.degree(v) == 1 && if c.kind == CyclicKind::Tree { cur.n() > 2 } else { !is_base(labels[v - 1]) }
        });
        let Some(v) = leaf else { break };
        push_step(&mut trace, &mut cur, &mut labels, Rule::Leaf, vec![v]);
    }
    let mut cert = if c.kind == CyclicKind::Tree {
        let d = OrientedGraph::as_listed(&cur);
        let r = pind_exhaustive(&build_a(&d), 1)?;
        let w = r.witness.ok_or_else(|| Error::Verification("A_{K2} has no nonzero column".into()))?;
        Certificate {
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
            notes: vec!["tree stripped to K2 (Lemma 3.2); A_{K2} checked exhaustively".into()],
        }
    } else {
        certify_base(&cur).map_err(|e| Error::Verification(format!("internal: proof orientation failed: {e}")))?
    };
    cert.claim = "pind(A_G)=1".into();
    if !trace.is_empty() && cert.method == Method::Lemma31 {
        cert.notes.push(format!("{} hanging-tree vertices stripped (Lemma 3.2)", trace.len()));
    }
    cert.trace = trace;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, family};

    #[test]
    fn examples() {
        for spec in ["cycle:5", "b2:3,3,2", "b1:3,4", "b3:1,1,1", "path:4", "star:3", "path:2"] {
            let cert = certify_pindA(&family(spec).unwrap()).unwrap();
            assert!(cert.is_certified(), "{spec}");
            cert.verify().unwrap();
        }
    }

    #[test]
    fn c6_with_hanging_p3() {
        let mut edges: Vec<(usize, usize)> = (1..=6).map(|i| (i, i % 6 + 1)).collect();
        edges.extend([(1, 7), (7, 8)]);
        let g = build_graph(8, &edges).unwrap();
        let cert = certify_pindA(&g).unwrap();
        assert_eq!(cert.trace.len(), 2);
        assert_eq!(cert.method, Method::Lemma31);
        cert.verify().unwrap();
        let r = pind_exhaustive(&build_a(&OrientedGraph::as_listed(&g)), 1).unwrap();
        assert_eq!(r.achieved, Some(1));
    }

    #[test]
    fn unsupported() {
        assert!(matches!(certify_pindA(&family("complete:4").unwrap()), Err(Error::Unsupported(_))));
    }
}
