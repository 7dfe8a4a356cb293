//! Named families, the cyclic decomposition and the L / R / Q operations.
//!
//! Run with `cargo run --example graph_core`.

use twc::graph::io::format_edge_list;
use twc::graph::{classify, family, graph_operation, GraphOp};

fn main() -> twc::Result<()> {
    for spec in ["path:4", "cycle:6", "b1:3,3", "b2:3,3,2", "b3:1,1,2"] {
        let g = family(spec)?;
        let c = classify(&g)?;
        println!("{spec:>9}: n = {}, m = {}, {:?} with hubs {:?}", g.n(), g.m(), c.kind, c.hubs);
        for part in &c.parts {
            println!("{:>13} {} = {:?}", "", part.name, part.vertices);
        }
    }

    let t = family("star:3")?;
    for op in [GraphOp::L, GraphOp::R, GraphOp::Q] {
        let h = graph_operation(&t, op)?;
        println!("{op:?}(K_1,3): n = {}, m = {}", h.n(), h.m());
    }
    print!("b1:3,3 as an edge list:\n{}", format_edge_list(&family("b1:3,3")?));
    Ok(())
}
