//! Lemma 3.1 orientation certificates and the proof orientations of
//! Theorems 3.10 / 3.12.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::graph::{classify, CyclicKind, Graph, OrientedGraph};
use crate::matrix::{build_a, IndexFunction};
use crate::{Error, Result};

use super::certificate::{bigint, Certificate, Method, Outcome, Witness};
use super::search::find_nonzero_selection;

/// Degrees and margin at one vertex: `margin = η(v) + 2d⁻_{D'}(v) − d⁻_D(v)`,
/// which must be at least `d⁺_{D'}(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCheck {
    pub vertex: usize,
    pub eta: u32,
    pub in_d: usize,
    pub in_dprime: usize,
    pub out_dprime: usize,
    pub margin: i64,
    pub in_x: bool,
}

/// The non-singularity witness for `η'` on `G[X]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerWitness {
    /// `G[X]`, relabelled `1..=|X|` in ascending order of `X`.
    pub subgraph: Graph,
    /// `η'` in `A_{G[X]}` column order.
    pub eta_prime: Vec<u32>,
    /// `η'' <= η'`, valid, with nonzero permanent.
    pub eta_second: Vec<u32>,
    #[serde(with = "bigint")]
    pub permanent: BigInt,
}

/// Everything [`verify_lemma31`] checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma31Data {
    pub graph: Graph,
    pub x: Vec<usize>,
    /// Orientation of `G − E[X]`.
    pub orientation: OrientedGraph,
    /// Edge indices (into the orientation's graph) forming `D'`.
    pub dprime: Vec<usize>,
    pub eta: IndexFunction,
    pub checks: Vec<VertexCheck>,
    pub inner: InnerWitness,
}

fn reject(msg: String) -> Error {
    Error::Verification(format!("Lemma 3.1 rejected: {msg}"))
}

/// Checks the hypotheses of Lemma 3.1: (a) `D` is acyclic, (b) every vertex
/// of `X` is a sink, (c) `η(v) + 2d⁻_{D'}(v) − d⁻_D(v) ≥ d⁺_{D'}(v)` for all
/// `v`, and (d) `η'` is non-singular on `G[X]` (exhaustive search). On success
/// `η` is non-singular for `G`; with `η ≡ 1` that is `pind(A_G) = 1`.
pub fn verify_lemma31(
    g: &Graph,
    x: &BTreeSet<usize>,
    d: &OrientedGraph,
    dprime: &[usize],
    eta: &IndexFunction,
) -> Result<Certificate> {
    eta.matches(g)?;
    if let Some(e) = eta.edge.iter().position(|&v| v != 1) {
        return Err(Error::Argument(format!("Lemma 3.1 needs η(e) = 1 on every edge; η(e{e}) = {}", eta.edge[e])));
    }
    for &v in x {
        g.check_vertex(v)?;
    }
    let inside: Vec<usize> =
        (0..g.m()).filter(|&i| x.contains(&g.edges()[i].0) && x.contains(&g.edges()[i].1)).collect();
    let g_minus = g.remove_edges(&inside);
    if d.graph() != &g_minus {
        return Err(reject("D is not an orientation of G − E[X] (edge lists differ)".into()));
    }
    let mut dp_set = BTreeSet::new();
    for &e in dprime {
        if e >= g_minus.m() || !dp_set.insert(e) {
            return Err(reject(format!("D' edge index {e} is out of range or repeated")));
        }
    }
    let sub = d.sub(dprime)?;

    // (a)
    if !d.is_acyclic() {
        return Err(reject("(a) D has a directed cycle".into()));
    }
    // (b)
    for &v in x {
        let out = d.out_degree(v);
        if out != 0 {
            return Err(reject(format!("(b) vertex {v} ∈ X is not a sink of D (out-degree {out})")));
        }
    }
    // (c)
    let mut checks = Vec::with_capacity(g.n());
    for v in g.vertices() {
        let c = VertexCheck {
            vertex: v,
            eta: eta.vertex[v - 1],
            in_d: d.in_degree(v),
            in_dprime: sub.in_degree(v),
            out_dprime: sub.out_degree(v),
            margin: eta.vertex[v - 1] as i64 + 2 * sub.in_degree(v) as i64 - d.in_degree(v) as i64,
            in_x: x.contains(&v),
        };
        if c.margin < c.out_dprime as i64 {
            return Err(reject(format!(
                "(c) at vertex {v}: η(v) + 2d⁻_D'(v) − d⁻_D(v) = {} + {} − {} = {} < d⁺_D'(v) = {}",
                c.eta,
                2 * c.in_dprime,
                c.in_d,
                c.margin,
                c.out_dprime
            )));
        }
        checks.push(c);
    }
    // (d)
    let xs: Vec<usize> = x.iter().copied().collect();
    let (gx, _) = g.induced_subgraph(&xs);
    let mut eta_prime: Vec<u32> = xs.iter().map(|&v| checks[v - 1].margin as u32).collect();
    eta_prime.extend(std::iter::repeat_n(1, gx.m()));
    let ax = build_a(&OrientedGraph::as_listed(&gx));
    let Some(w) = find_nonzero_selection(&ax, &eta_prime)? else {
        return Err(reject(format!("(d) η' = {eta_prime:?} is singular on G[X]")));
    };

    let all_ones = eta.vertex.iter().all(|&v| v == 1);
    let claim = if all_ones { "pind(A_G)=1".to_string() } else { "η non-singular for G".to_string() };
    let permanent = w.permanent.clone();
    let data = Lemma31Data {
        graph: g.clone(),
        x: xs,
        orientation: d.clone(),
        dprime: dp_set.into_iter().collect(),
        eta: eta.clone(),
        checks,
        inner: InnerWitness { subgraph: gx, eta_prime, eta_second: w.multiplicities, permanent: w.permanent },
    };
    Ok(Certificate {
        claim,
        method: Method::Lemma31,
        outcome: Outcome::Certified,
        witness: Witness::Lemma31(Box::new(data)),
        trace: Vec::new(),
        permanent_value: Some(permanent),
        notes: Vec::new(),
    })
}

/// `X`, `D` and `D'` as constructed in the proofs of Theorems 3.10 / 3.12.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofOrientation {
    pub x: Vec<usize>,
    pub orientation: OrientedGraph,
    pub dprime: Vec<usize>,
    /// Which proof case was used.
    pub case: String,
}

/// Builds the proof orientation for a bare cycle or bicyclic base
/// (`C_l`, `B1`, `B2`, `B3` without hanging trees):
///
/// - `C_l = c1..cl`: `c_i → c_{i+1}` and `c1 → cl`; `D' = {c1 cl}`, `X = {cl}`.
/// - `B1`: on each cycle `u, a1, …, a_{p−1}`: `a1 → u` (in `D'`) and
///   `a1 → a2 → … → a_{p−1} → u`; `X = {u}`.
/// - `B2`: as `B1` on `C_p` (towards `u`) and `C_q` (towards `v'`), the path
///   oriented `v' → … → u`; `D' = {a1 u, b1 v'}`, `X = {u}`.
/// - `B3`: the `P_p` vertex next to `v'` sends `D'` arc to `v'` and a chain to
///   `u`; the `P_q` vertex next to `u` sends a `D'` arc to `u` and a chain to
///   `v'`; `P_r` runs `u → y` (in `D'`) then on to `v'`. `X = {v'}`, the
///   sink (see the decisions ledger: the paper's `X = {u}` is not a sink).
pub fn proof_orientation(base: &Graph) -> Result<ProofOrientation> {
    let c = classify(base)?;
    if !c.hanging_trees.is_empty() {
        return Err(Error::Argument("proof orientations are defined on bare bases; strip hanging trees first".into()));
    }
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut dp_arcs: Vec<(usize, usize)> = Vec::new();
    // A closed part [hub, a1, ..., ak] oriented towards hub with a1 -> hub in D'.
    let towards_hub = |cycle: &[usize], arcs: &mut Vec<(usize, usize)>, dp: &mut Vec<(usize, usize)>| {
        let hub = cycle[0];
        dp.push((cycle[1], hub));
        arcs.push((cycle[1], hub));
        for w in cycle[1..].windows(2) {
            arcs.push((w[0], w[1]));
        }
        arcs.push((*cycle.last().unwrap(), hub));
    };
    let (x, case) = match c.kind {
        CyclicKind::Unicyclic => {
            let cyc = &c.part("C_l").unwrap().vertices;
            for w in cyc.windows(2) {
                arcs.push((w[0], w[1]));
            }
            let (c1, cl) = (cyc[0], *cyc.last().unwrap());
            arcs.push((c1, cl));
            dp_arcs.push((c1, cl));
            (cl, "Theorem 3.10: C_l")
        }
        CyclicKind::BicyclicB1 => {
            towards_hub(&c.part("C_p").unwrap().vertices, &mut arcs, &mut dp_arcs);
            towards_hub(&c.part("C_q").unwrap().vertices, &mut arcs, &mut dp_arcs);
            (c.hubs[0], "Theorem 3.12: B1(p,q)")
        }
        CyclicKind::BicyclicB2 => {
            towards_hub(&c.part("C_p").unwrap().vertices, &mut arcs, &mut dp_arcs);
            towards_hub(&c.part("C_q").unwrap().vertices, &mut arcs, &mut dp_arcs);
            let path = &c.part("P_r").unwrap().vertices;
            for w in path.windows(2) {
                arcs.push((w[1], w[0]));
            }
            (c.hubs[0], "Theorem 3.12: B2(p,q,r)")
        }
        CyclicKind::BicyclicB3 => {
            let (u, v) = (c.hubs[0], c.hubs[1]);
            let p1 = &c.part("P_p").unwrap().vertices;
            let p2 = &c.part("P_q").unwrap().vertices;
            let p3 = &c.part("P_r").unwrap().vertices;
            // P_p: source next to v'; D' arc to v', chain back to u.
            let s1 = p1[p1.len() - 2];
            arcs.push((s1, v));
            dp_arcs.push((s1, v));
            for w in p1[..p1.len() - 1].windows(2) {
                arcs.push((w[1], w[0]));
            }
            // P_q: source next to u; D' arc to u, chain on to v'.
            let s2 = p2[1];
            arcs.push((s2, u));
            dp_arcs.push((s2, u));
            for w in p2[1..].windows(2) {
                arcs.push((w[0], w[1]));
            }
            // P_r: u -> y in D', then on to v'.
            arcs.push((u, p3[1]));
            dp_arcs.push((u, p3[1]));
            for w in p3[1..].windows(2) {
                arcs.push((w[0], w[1]));
            }
            (v, "Theorem 3.12: B3(p,q,r), X = {v'}")
        }
        other => return Err(Error::Unsupported(format!("no proof orientation for kind {other:?}"))),
    };
    let orientation = OrientedGraph::from_arcs(base, &arcs)?;
    let dprime = dp_arcs.iter().map(|&(a, b)| base.edge_index(a, b).unwrap()).collect();
    Ok(ProofOrientation { x: vec![x], orientation, dprime, case: case.to_string() })
}

/// Runs [`verify_lemma31`] on the proof orientation of a bare base with `η ≡ 1`.
pub fn certify_base(base: &Graph) -> Result<Certificate> {
    let po = proof_orientation(base)?;
    let x: BTreeSet<usize> = po.x.iter().copied().collect();
    let mut cert = verify_lemma31(base, &x, &po.orientation, &po.dprime, &IndexFunction::ones(base))?;
    cert.notes.push(po.case);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;

    fn c4_setup(with_dprime: bool) -> Result<Certificate> {
        let c4 = family("cycle:4").unwrap();
        let d = OrientedGraph::from_arcs(&c4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let dp = if with_dprime { vec![c4.edge_index(1, 4).unwrap()] } else { vec![] };
        verify_lemma31(&c4, &BTreeSet::from([4]), &d, &dp, &IndexFunction::ones(&c4))
    }

    #[test]
    fn c4_accepted_with_paper_margins() {
        let cert = c4_setup(true).unwrap();
        assert_eq!(cert.claim, "pind(A_G)=1");
        let Witness::Lemma31(data) = &cert.witness else { panic!() };
        let margins: Vec<i64> = data.checks.iter().map(|c| c.margin).collect();
        let needs: Vec<usize> = data.checks.iter().map(|c| c.out_dprime).collect();
        assert_eq!(margins, vec![1, 0, 0, 1]);
        assert_eq!(needs, vec![1, 0, 0, 0]);
        cert.verify().unwrap();
    }

    #[test]
    fn c4_without_dprime_rejected_at_v4() {
        let err = c4_setup(false).unwrap_err().to_string();
        assert!(err.contains("at vertex 4"), "{err}");
    }

    #[test]
    fn non_sink_rejected() {
        let c4 = family("cycle:4").unwrap();
        let d = OrientedGraph::from_arcs(&c4, &[(1, 2), (2, 3), (4, 3), (1, 4)]).unwrap();
        let err = verify_lemma31(&c4, &BTreeSet::from([4]), &d, &[3], &IndexFunction::ones(&c4)).unwrap_err();
        assert!(err.to_string().contains("(b)"));
        let cyc = OrientedGraph::from_arcs(&c4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let err = verify_lemma31(&c4, &BTreeSet::new(), &cyc, &[], &IndexFunction::ones(&c4)).unwrap_err();
        assert!(err.to_string().contains("(a)"));
    }

    #[test]
    fn b1_paper_degrees() {
        let g = family("b1:3,3").unwrap();
        let cert = certify_base(&g).unwrap();
        let Witness::Lemma31(data) = &cert.witness else { panic!() };
        let u = data.x[0];
        let cu = data.checks[u - 1];
        assert_eq!((cu.in_dprime, cu.in_d, cu.out_dprime, cu.margin), (2, 4, 0, 1));
        assert_eq!(data.dprime.len(), 2);
    }

    #[test]
    fn b2_and_b3_paper_degrees() {
        let g = family("b2:3,3,2").unwrap();
        let cert = certify_base(&g).unwrap();
        let Witness::Lemma31(data) = &cert.witness else { panic!() };
        let u = data.x[0];
        assert_eq!(data.checks[u - 1].margin, 0, "Theorem 3.12 B2 Case 1: margin 0 at u");

        let g = family("b3:1,1,2").unwrap();
        let cert = certify_base(&g).unwrap();
        let Witness::Lemma31(data) = &cert.witness else { panic!() };
        let v = data.x[0];
        let cv = data.checks[v - 1];
        assert_eq!((cv.in_dprime, cv.in_d, cv.out_dprime, cv.margin), (1, 3, 0, 0));
        let u = 1;
        let cu = data.checks[u - 1];
        assert_eq!((cu.in_dprime, cu.in_d, cu.out_dprime, cu.margin), (1, 2, 1, 1));
    }

    #[test]
    fn cycles_3_to_8() {
        for l in 3..=8 {
            let g = family(&format!("cycle:{l}")).unwrap();
            certify_base(&g).unwrap().verify().unwrap();
        }
    }
}
