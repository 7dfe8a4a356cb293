//! Permanent indices: exhaustive search, Lemma 3.1 certificates for pind(A_G) = 1
//! and the reduction engine for pind(B_G) <= 2.
//!
//! Run with `cargo run --example pind_search`.

use twc::graph::{build_graph, family, OrientedGraph};
use twc::matrix::build_b;
use twc::pind::{certify_pindA, pind_exhaustive, reduce_for_pindB};

fn main() -> twc::Result<()> {
    for spec in ["b1:3,3", "b2:3,3,2", "b3:1,1,1"] {
        let r = pind_exhaustive(&build_b(&OrientedGraph::as_listed(&family(spec)?))?, 2)?;
        println!("{spec}: pind(B_G) = {:?} after {} vectors", r.achieved, r.vectors_checked);
    }

    // A cycle with a hanging path: leaves are stripped, then the base gets its proof orientation.
    let g = build_graph(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (6, 7)])?;
    let cert = certify_pindA(&g)?;
    cert.verify()?;
    println!("{}: {:?} by {:?}, {} trace steps", cert.claim, cert.outcome, cert.method, cert.trace.len());

    let cert = reduce_for_pindB(&family("cycle:8")?)?;
    cert.verify()?;
    println!("C8: {} {:?}; trace:", cert.claim, cert.outcome);
    for step in &cert.trace {
        println!("  {} removes {:?}", step.rule, step.removed_original);
    }
    println!("certificate JSON is {} bytes", cert.to_json().len());
    Ok(())
}
