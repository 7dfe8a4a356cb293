//! Ryser vs the naive expansion, parity via GF(2), and the Sachs formula.
//!
//! Run with `cargo run --example permanent_kernel`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twc::graph::family;
use twc::permanent::{adjacency_matrix, permanent, permanent_mod2, permanent_naive, sachs_permanent};
use twc::LabeledIntMatrix;

fn main() -> twc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let rows: Vec<Vec<i64>> = (0..6).map(|_| (0..6).map(|_| rng.random_range(-3..=3)).collect()).collect();
    let m = LabeledIntMatrix::from_rows(rows)?;
    println!("random 6x6: ryser = {}, naive = {}, mod 2 = {}", permanent(&m)?, permanent_naive(&m)?, permanent_mod2(&m)?);

    let ones = LabeledIntMatrix::from_rows(vec![vec![1; 12]; 12])?;
    println!("per(J_12) = {} (= 12!)", permanent(&ones)?);

    for spec in ["cycle:6", "complete:5", "b2:3,3,2"] {
        let g = family(spec)?;
        println!(
            "{spec}: Sachs count = {}, per(adjacency) = {}",
            sachs_permanent(&g)?,
            permanent(&adjacency_matrix(&g))?
        );
    }
    Ok(())
}
