//! Property-based checks of the spec's module invariants.

mod common;

use std::collections::BTreeSet;

use common::{connected_graph, matrix, oriented_graph, rng, square_matrix};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use twc::choosability::{
    check_12_certificate, find_proper_weighting_with_stats, TotalListAssignment,
};
use twc::graph::generate::random_orientation;
use twc::graph::{build_graph, classify, edge_split, line_graph, CyclicKind, Graph, OrientedGraph};
use twc::matching::count_pm_line_graph;
use twc::matrix::{assemble, build_a, build_b, clique_block_extend, THEOREM_42_C};
use twc::permanent::{permanent, permanent_mod2, permanent_naive, ryser};
use twc::pind::{pind_exhaustive, Certificate};
use twc::IndexFunction;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // ---- permanent_kernel ----

    #[test]
    fn permanent_invariant_under_row_and_column_permutations(rows in square_matrix(7, 4), seed in any::<u64>()) {
        let n = rows.len();
        let mut r = rng(seed);
        let mut rp: Vec<usize> = (0..n).collect();
        let mut cp: Vec<usize> = (0..n).collect();
        rp.shuffle(&mut r);
        cp.shuffle(&mut r);
        let permuted: Vec<Vec<i64>> = rp.iter().map(|&i| cp.iter().map(|&j| rows[i][j]).collect()).collect();
        prop_assert_eq!(ryser(&rows), ryser(&permuted));
    }

    #[test]
    fn permanent_multilinear_in_rows(rows in square_matrix(6, 4), extra in proptest::collection::vec(-4i64..=4, 6), r in 0usize..6) {
        let n = rows.len();
        let r = r % n;
        let b: Vec<i64> = extra[..n].to_vec();
        let mut mb = rows.clone();
        mb[r] = b.clone();
        let mut sum = rows.clone();
        sum[r] = rows[r].iter().zip(&b).map(|(x, y)| x + y).collect();
        prop_assert_eq!(ryser(&sum), ryser(&rows) + ryser(&mb));
    }

    #[test]
    fn ryser_matches_naive_and_parity(rows in square_matrix(7, 5)) {
        let m = matrix(rows);
        let per = permanent(&m).unwrap();
        prop_assert_eq!(&per, &permanent_naive(&m).unwrap());
        let two = BigInt::from(2);
        let expected = ((&per % &two) + &two) % &two;
        prop_assert_eq!(BigInt::from(permanent_mod2(&m).unwrap()), expected);
    }

    // ---- graph_core ----

    #[test]
    fn line_graph_degree_law(g in connected_graph(10, 20)) {
        let l = line_graph(&g).unwrap();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert_eq!(l.degree(e + 1), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn edge_split_preserves_edge_count(g in connected_graph(9, 16), pick in any::<prop::sample::Index>(), side in any::<bool>()) {
        let e = pick.index(g.m());
        let (u, v) = g.edges()[e];
        let h = edge_split(&g, e, if side { u } else { v }).unwrap();
        prop_assert_eq!(h.m(), g.m());
        prop_assert_eq!(h.n(), g.n() + 1);
    }

    #[test]
    fn orientation_degree_sums(d in oriented_graph(9, 16)) {
        let g = d.graph();
        let ins: usize = g.vertices().map(|v| d.in_degree(v)).sum();
        let outs: usize = g.vertices().map(|v| d.out_degree(v)).sum();
        prop_assert_eq!((ins, outs), (g.m(), g.m()));
        if d.is_acyclic() {
            prop_assert!(!d.sinks().is_empty());
        }
    }

    #[test]
    fn acyclic_orientations_have_a_sink(g in connected_graph(9, 16), seed in any::<u64>()) {
        // Orient every edge towards the later vertex of a random order.
        let mut order: Vec<usize> = g.vertices().collect();
        order.shuffle(&mut rng(seed));
        let pos: Vec<usize> = {
            let mut p = vec![0; g.n() + 1];
            for (i, &v) in order.iter().enumerate() { p[v] = i; }
            p
        };
        let heads = g.edges().iter().map(|&(u, v)| if pos[u] > pos[v] { u } else { v }).collect();
        let d = OrientedGraph::new(g.clone(), heads).unwrap();
        prop_assert!(d.is_acyclic());
        prop_assert!(!d.sinks().is_empty());
    }

    #[test]
    fn classify_kind_law_and_partition(g in connected_graph(9, 10)) {
        let c = classify(&g).unwrap();
        let expected = match g.m() as i64 - g.n() as i64 {
            -1 => Some(CyclicKind::Tree),
            0 => Some(CyclicKind::Unicyclic),
            1 => None,
            _ => Some(CyclicKind::Other),
        };
        match expected {
            Some(k) => prop_assert_eq!(c.kind, k),
            None => prop_assert!(c.kind.is_bicyclic()),
        }
        if c.kind != CyclicKind::Tree && c.kind != CyclicKind::Other {
            // Base + hanging trees partition the edges and the vertices.
            let mut edges: Vec<usize> = c.base_edges.clone();
            let mut verts: Vec<usize> = c.base_vertices.clone();
            for t in &c.hanging_trees {
                edges.extend(&t.edges);
                verts.extend(&t.vertices);
            }
            edges.sort_unstable();
            verts.sort_unstable();
            prop_assert_eq!(edges, (0..g.m()).collect::<Vec<_>>());
            prop_assert_eq!(verts, g.vertices().collect::<Vec<_>>());
            // Reassembled from the recorded pieces: same edge set, same degrees.
            let rebuilt = build_graph(g.n(), &c.base_edges.iter()
                .chain(c.hanging_trees.iter().flat_map(|t| &t.edges))
                .map(|&e| g.edges()[e]).collect::<Vec<_>>()).unwrap();
            prop_assert_eq!(rebuilt.edge_set(), g.edge_set());
            prop_assert_eq!(rebuilt.degrees(), g.degrees());
        }
    }

    // ---- weight_matrices ----

    #[test]
    fn flipping_an_edge_negates_its_row(d in oriented_graph(8, 14), pick in any::<prop::sample::Index>()) {
        let e = pick.index(d.graph().m());
        let mut flipped = d.clone();
        flipped.flip(e);
        let (a, af) = (build_a(&d), build_a(&flipped));
        for i in 0..a.nrows() {
            let want: Vec<i64> = if i == e { a.row(i).iter().map(|x| -x).collect() } else { a.row(i).to_vec() };
            prop_assert_eq!(af.row(i), &want[..]);
        }
        let (b, bf) = (build_b(&d).unwrap(), build_b(&flipped).unwrap());
        for i in 0..b.nrows() {
            let want: Vec<i64> = if i == e { b.row(i).iter().map(|x| -x).collect() } else { b.row(i).to_vec() };
            prop_assert_eq!(bf.row(i), &want[..]);
        }
    }

    #[test]
    fn a_and_b_structure(d in oriented_graph(8, 14)) {
        let g = d.graph();
        let a = build_a(&d);
        let b = build_b(&d).unwrap();
        let n = g.n();
        for i in 0..a.nrows() {
            prop_assert_eq!(a.row(i)[..n].iter().sum::<i64>(), 0);
            prop_assert_eq!(&a.row(i)[n..], b.row(i));
        }
        prop_assert_eq!(&b.col_labels()[..], &a.col_labels()[n..]);
        prop_assert_eq!(assemble(&a, &IndexFunction::edges_once(g)).unwrap(), b);
    }

    #[test]
    fn clique_block_is_triangular(d in oriented_graph(6, 8), attach in any::<prop::sample::Index>()) {
        let g = d.graph();
        let a = build_a(&d);
        // B' = first m columns that keep the matrix square (any square selection works).
        let bp = a.select_columns(&(0..g.m()).collect::<Vec<_>>());
        let v = attach.index(g.n()) + 1;
        let bpp = clique_block_extend(&bp, g, v).unwrap();
        let m = g.m();
        for i in 0..m {
            prop_assert!(bpp.row(i)[m..].iter().all(|&x| x == 0));
        }
        for i in 0..3 {
            prop_assert_eq!(&bpp.row(m + i)[m..], &THEOREM_42_C[i][..]);
        }
        prop_assert_eq!(permanent(&bpp).unwrap(), permanent(&bp).unwrap() * BigInt::from(-4));
    }

    // ---- matching_counts ----

    #[test]
    fn line_graph_matchings_relabeling_invariant(g in connected_graph(8, 10), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (1..=g.n()).collect();
        perm.shuffle(&mut rng(seed));
        let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[v - 1], perm[u - 1])).collect();
        edges.shuffle(&mut rng(seed ^ 1));
        let h = build_graph(g.n(), &edges).unwrap();
        prop_assert_eq!(count_pm_line_graph(&g).unwrap(), count_pm_line_graph(&h).unwrap());
    }

    #[test]
    fn parity_bridge(d in oriented_graph(8, 9)) {
        let b = build_b(&d).unwrap();
        let ml = count_pm_line_graph(d.graph()).unwrap();
        prop_assert_eq!(permanent_mod2(&b).unwrap() as u128, ml % 2);
    }

    // ---- pind_search ----

    #[test]
    fn pind_orientation_invariant(g in connected_graph(6, 6), s1 in any::<u64>(), s2 in any::<u64>()) {
        let d1 = random_orientation(&g, &mut rng(s1));
        let d2 = random_orientation(&g, &mut rng(s2));
        let r1 = pind_exhaustive(&build_b(&d1).unwrap(), 2).unwrap();
        let r2 = pind_exhaustive(&build_b(&d2).unwrap(), 2).unwrap();
        prop_assert_eq!(r1.achieved, r2.achieved);
        let a1 = pind_exhaustive(&build_a(&d1), 1).unwrap();
        let a2 = pind_exhaustive(&build_a(&d2), 1).unwrap();
        prop_assert_eq!(a1.achieved, a2.achieved);
    }

    #[test]
    fn certificates_reverify_and_round_trip(d in oriented_graph(7, 9)) {
        let cert = check_12_certificate(d.graph(), &d).unwrap();
        cert.verify().unwrap();
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        prop_assert_eq!(&back, &cert);
        back.verify().unwrap();
    }

    // ---- choosability_checkers ----

    #[test]
    fn weighting_search_is_sound_and_exhaustive(g in connected_graph(5, 6), k in 1usize..=2, kp in 1usize..=2, seed in any::<u64>()) {
        let l = TotalListAssignment::random(&g, k, kp, &mut rng(seed)).unwrap();
        let (w, stats) = find_proper_weighting_with_stats(&g, &l).unwrap();
        match w {
            Some(w) => prop_assert!(w.proper(&g) && w.conforms(&l)),
            None => prop_assert!(stats.exhausted(), "{stats:?}"),
        }
    }
}

/// `none` is returned only after the full product space is covered: a K4
/// with one shared vertex list and one shared edge weight has no proper weighting.
#[test]
fn counting_probe_covers_the_product_space() {
    let k4 = twc::graph::family("complete:4").unwrap();
    let l = TotalListAssignment::uniform(&k4, &[0, 1], &[3]).unwrap();
    let (w, stats) = find_proper_weighting_with_stats(&k4, &l).unwrap();
    assert!(w.is_none());
    assert_eq!(stats.product_size, 16);
    assert_eq!(stats.leaves + stats.pruned_leaves, 16);
}

/// Every A_G row has exactly one +1 and one -1 among the vertex columns.
#[test]
fn a_rows_have_one_head_and_one_tail() {
    let g: Graph = twc::graph::family("b2:3,3,2").unwrap();
    let a = build_a(&OrientedGraph::as_listed(&g));
    for i in 0..a.nrows() {
        let entries: BTreeSet<i64> = a.row(i)[..g.n()].iter().copied().filter(|&x| x != 0).collect();
        assert_eq!(entries, BTreeSet::from([-1, 1]));
    }
}
