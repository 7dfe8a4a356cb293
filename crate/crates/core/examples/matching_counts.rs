//! Perfect matchings of line graphs: Dong's tree formula (Lemma 2.3), the split
//! recursion (Lemma 2.6) and the parity bridge per(B_G) ≡ M(L(G)) (mod 2).
//!
//! Run with `cargo run --example matching_counts`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twc::graph::generate::random_labeled_tree;
use twc::graph::{family, OrientedGraph};
use twc::matching::{count_pm_line_graph, dong_tree_formula, split_recursion};
use twc::matrix::build_b;
use twc::permanent::permanent;

fn main() -> twc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..3 {
        let t = random_labeled_tree(9, &mut rng);
        println!("tree {:?}: Dong = {}, brute force = {}", t.edges(), dong_tree_formula(&t)?, count_pm_line_graph(&t)?);
    }

    let g = family("b1:3,3")?;
    for e in 0..g.m() {
        let r = split_recursion(&g, e)?;
        println!("split at {}-{}: {} = {} + {} ({})", r.u, r.v, r.lhs, r.rhs_u, r.rhs_v, r.holds());
    }

    for spec in ["path:5", "star:4", "cycle:4", "b2:3,3,2"] {
        let g = family(spec)?;
        let per = permanent(&build_b(&OrientedGraph::as_listed(&g))?)?;
        println!("{spec}: per(B_G) = {per}, M(L(G)) = {}", count_pm_line_graph(&g)?);
    }
    Ok(())
}
