//! Shared generators for the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twc::graph::generate::{random_connected_graph, random_orientation};
use twc::{Graph, LabeledIntMatrix, OrientedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected graph on `2..=n_max` vertices with at most `m_max` edges.
pub fn connected_graph(n_max: usize, m_max: usize) -> impl Strategy<Value = Graph> {
    (2..=n_max, any::<u64>()).prop_flat_map(move |(n, seed)| {
        let hi = (n * (n - 1) / 2).min(m_max.max(n - 1));
        (n - 1..=hi).prop_map(move |m| random_connected_graph(n, m, &mut rng(seed)))
    })
}

/// A connected graph together with a random orientation of it.
pub fn oriented_graph(n_max: usize, m_max: usize) -> impl Strategy<Value = OrientedGraph> {
    (connected_graph(n_max, m_max), any::<u64>()).prop_map(|(g, seed)| random_orientation(&g, &mut rng(seed)))
}

/// A square integer matrix with side `1..=side_max` and entries in `-lim..=lim`.
pub fn square_matrix(side_max: usize, lim: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=side_max).prop_flat_map(move |n| proptest::collection::vec(proptest::collection::vec(-lim..=lim, n), n))
}

pub fn matrix(rows: Vec<Vec<i64>>) -> LabeledIntMatrix {
    LabeledIntMatrix::from_rows(rows).expect("square rows")
}
