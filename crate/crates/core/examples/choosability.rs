//! The (1,2) criteria, the family classifier, and concrete-list weighting search
//! with the Theorem 4.3 clique extension.
//!
//! Run with `cargo run --example choosability`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twc::choosability::{
    check_12_certificate, classify_family, extend_weighting_clique, find_proper_weighting, proof_lists,
    TotalListAssignment,
};
use twc::graph::{build_graph, family, glue_clique, OrientedGraph};

fn main() -> twc::Result<()> {
    for spec in ["path:3", "path:5", "cycle:3", "b1:3,3"] {
        let g = family(spec)?;
        let c = check_12_certificate(&g, &OrientedGraph::as_listed(&g))?;
        println!("{spec}: {} {:?} via {:?}", c.claim, c.outcome, c.method);
    }

    // C4 with 2-edge trees at v1 and v2: the paper's U2 example.
    let u = build_graph(8, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (2, 7), (7, 8)])?;
    let v = classify_family(&u)?;
    println!("family {:?}, claimed {:?}, observed M(L) = {:?}", v.family, v.claimed_parity, v.observed_matchings);

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let g = family("b1:3,3")?;
    let l = TotalListAssignment::random(&g, 2, 2, &mut rng)?;
    let w = find_proper_weighting(&g, &l)?.expect("(2,2) lists on b1:3,3");
    println!("b1:3,3 sums under random (2,2) lists: {:?}", w.sums(&g).iter().map(|s| s.to_string()).collect::<Vec<_>>());

    // Theorem 4.3: P3 + K2 at v2 is G''; extend to P3 + K3 at v2.
    let gpp = glue_clique(&family("path:3")?, 2, 2)?;
    let gp = glue_clique(&family("path:3")?, 2, 3)?;
    let l = TotalListAssignment::random(&gp, 2, 2, &mut rng)?;
    let w = find_proper_weighting(&gpp, &proof_lists(&gpp, 2, 3, &l, &[0, 0])?)?.expect("G'' weighting");
    let ext = extend_weighting_clique(&gpp, &w, 2, 3, &l)?;
    println!("clique extension via {:?}: proper = {}", ext.route, ext.weighting.is_some_and(|f| f.proper(&gp)));
    Ok(())
}
