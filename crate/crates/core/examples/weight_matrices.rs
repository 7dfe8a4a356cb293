//! The paper's A_G / B_G matrices, the Remark fixtures and Theorem 4.2's block.
//!
//! Run with `cargo run --example weight_matrices`.

use twc::graph::{family, OrientedGraph};
use twc::matrix::{build_a, build_b, clique_block_extend, fixture};
use twc::permanent::permanent;
use twc::pind::pind_exhaustive;

fn main() -> twc::Result<()> {
    let g = family("path:3")?;
    let d = OrientedGraph::as_listed(&g);
    print!("A_G for P3 (edges oriented as listed):\n{}", build_a(&d).to_text());
    print!("B_G:\n{}", build_b(&d)?.to_text());

    for name in ["b1-3-3-remark", "b1-3-3-remark-selection"] {
        let m = fixture(name).expect("shipped fixture");
        println!("per({name}) = {}", permanent(&m)?);
    }

    // Theorem 4.2: extend a nonzero m x m selection of A_G by a glued triangle.
    let g = family("cycle:4")?;
    let d = OrientedGraph::as_listed(&g);
    let a = build_a(&d);
    let w = pind_exhaustive(&a, 1)?.witness.expect("pind(A_C4) = 1");
    let bp = a.with_multiplicities(&w.multiplicities);
    let bpp = clique_block_extend(&bp, &g, 1)?;
    print!("B'' for C4 + K3 at v1:\n{}", bpp.to_text());
    println!("per(B') = {}, per(B'') = {} (= per(B') * per(C), per(C) = -4)", permanent(&bp)?, permanent(&bpp)?);
    Ok(())
}
