//! Generators for test corpora: labelled trees, connected graphs up to
//! isomorphism, random graphs and the hanging-tree families.

use std::collections::HashMap;

use petgraph::graph::UnGraph;
use rand::seq::IndexedRandom;
use rand::Rng;

use super::{Graph, OrientedGraph};

/// Tree on `1..=seq.len()+2` with the given Prüfer sequence (entries 1-based).
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n + 1];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (1..=n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_parts(n, edges)
}

/// Every labelled tree on `n >= 2` vertices (`n^(n-2)` of them).
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 2, "labelled trees need n >= 2");
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut() {
            *slot = code % n + 1;
            code /= n;
        }
        tree_from_prufer(&seq)
    })
}

pub fn random_labeled_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    match n {
        0 | 1 => Graph::from_parts(n, Vec::new()),
        2 => Graph::from_parts(2, vec![(1, 2)]),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(1..=n)).collect();
            tree_from_prufer(&seq)
        }
    }
}

/// Random connected graph with `n` vertices and `m >= n-1` edges: a random tree
/// plus uniformly chosen extra edges.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let max = n * (n - 1) / 2;
    assert!(m + 1 >= n && m <= max, "no connected simple graph with n={n}, m={m}");
    let mut g = random_labeled_tree(n, rng);
    let mut missing: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    for _ in g.m()..m {
        let i = rng.random_range(0..missing.len());
        let (u, v) = missing.swap_remove(i);
        g.push_edge(u, v);
    }
    g
}

/// A uniformly random orientation.
pub fn random_orientation<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> OrientedGraph {
    let heads = g.edges().iter().map(|&(u, v)| if rng.random_bool(0.5) { u } else { v }).collect();
    OrientedGraph::new(g.clone(), heads).expect("heads are endpoints")
}

/// Attaches a random tree with `edges` edges to `at`, identifying one of the
/// tree's leaves with `at`. New vertices are appended.
pub fn attach_tree<R: Rng + ?Sized>(g: &mut Graph, at: usize, edges: usize, rng: &mut R) {
    assert!(edges >= 1);
    let t = random_labeled_tree(edges + 1, rng);
    let deg = t.degrees();
    let leaves: Vec<usize> = (1..=t.n()).filter(|&v| deg[v - 1] == 1).collect();
    let leaf = *leaves.choose(rng).unwrap();
    let base = g.n();
    let mut map = vec![0usize; t.n() + 1];
    let mut next = base;
    for v in 1..=t.n() {
        if v == leaf {
            map[v] = at;
        } else {
            next += 1;
            map[v] = next;
        }
    }
    g.n = next;
    for &(a, b) in t.edges() {
        g.push_edge(map[a], map[b]);
    }
}

fn invariant_key(g: &Graph) -> (usize, usize, Vec<(usize, Vec<usize>)>) {
    let deg = g.degrees();
    let adj = g.adjacency();
    let mut profile: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|i| {
            let mut nd: Vec<usize> = adj[i].iter().map(|&w| deg[w - 1]).collect();
            nd.sort_unstable();
            (deg[i], nd)
        })
        .collect();
    profile.sort();
    (g.n(), g.m(), profile)
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let edges: Vec<(u32, u32)> = g.edges().iter().map(|&(a, b)| (a as u32 - 1, b as u32 - 1)).collect();
    let mut pg = UnGraph::<(), ()>::with_capacity(g.n(), g.m());
    for _ in 0..g.n() {
        pg.add_node(());
    }
    for (a, b) in edges {
        pg.add_edge(a.into(), b.into(), ());
    }
    pg
}

/// Keeps one representative per isomorphism class, in first-seen order.
pub struct IsoDedup {
    buckets: HashMap<(usize, usize, Vec<(usize, Vec<usize>)>), Vec<UnGraph<(), ()>>>,
    kept: Vec<Graph>,
}

impl IsoDedup {
    pub fn new() -> Self {
        IsoDedup { buckets: HashMap::new(), kept: Vec::new() }
    }

    /// Returns `true` when `g` was new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let pg = to_petgraph(&g);
        let bucket = self.buckets.entry(invariant_key(&g)).or_default();
        if bucket.iter().any(|h| petgraph::algo::is_isomorphic(h, &pg)) {
            return false;
        }
        bucket.push(pg);
        self.kept.push(g);
        true
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.kept
    }
}

impl Default for IsoDedup {
    fn default() -> Self {
        Self::new()
    }
}

/// Connected graphs with `1..=m_max` edges, one per isomorphism class;
/// entry `m - 1` holds the graphs with `m` edges.
pub fn connected_graphs_by_size(m_max: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    let mut current = vec![Graph::from_parts(2, vec![(1, 2)])];
    for m in 1..=m_max {
        if m > 1 {
            let mut dedup = IsoDedup::new();
            for g in &current {
                let n = g.n();
                for u in 1..=n {
                    for v in u + 1..=n {
                        if !g.has_edge(u, v) {
                            let mut h = g.clone();
                            h.push_edge(u, v);
                            dedup.insert(h);
                        }
                    }
                    let mut h = g.clone();
                    h.push_vertex(&[u]);
                    dedup.insert(h);
                }
            }
            current = dedup.into_graphs();
        }
        levels.push(current.clone());
    }
    levels
}

/// Connected graphs on `1..=n_max` vertices, one per isomorphism class;
/// entry `n - 1` holds the graphs of order `n`.
pub fn connected_graphs_by_order(n_max: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    let mut current = vec![Graph::from_parts(1, Vec::new())];
    for n in 1..=n_max {
        if n > 1 {
            let mut dedup = IsoDedup::new();
            for g in &current {
                let old = g.n();
                for mask in 1u32..(1 << old) {
                    let nbrs: Vec<usize> = (1..=old).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
                    let mut h = g.clone();
                    h.push_vertex(&nbrs);
                    dedup.insert(h);
                }
            }
            current = dedup.into_graphs();
        }
        levels.push(current.clone());
    }
    levels
}

/// Which unicyclic parity family to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnicyclicClass {
    /// Number of even hanging trees is odd.
    U1,
    /// Number of even hanging trees is even.
    U2,
}

/// A random unicyclic graph of even order with at most `max_m` edges whose
/// hanging trees have either an even number (>= 2) or an odd number (>= 3) of
/// edges, with the parity of the even-tree count fixed by `class`.
pub fn random_unicyclic_instance<R: Rng + ?Sized>(
    class: UnicyclicClass,
    max_m: usize,
    rng: &mut R,
) -> Graph {
    assert!(max_m >= 6, "need room for a cycle and one hanging tree");
    loop {
        let l = rng.random_range(3..=max_m.min(8) - 2);
        let mut budget = max_m - l;
        let mut sizes: Vec<(usize, usize)> = Vec::new();
        let trees = rng.random_range(0..=3);
        for _ in 0..trees {
            let choices: Vec<usize> = (2..=budget).collect();
            let Some(&e) = choices.choose(rng) else { break };
            budget -= e;
            sizes.push((rng.random_range(1..=l), e));
        }
        let even = sizes.iter().filter(|&&(_, e)| e % 2 == 0).count();
        let n = l + sizes.iter().map(|&(_, e)| e).sum::<usize>();
        let wanted = match class {
            UnicyclicClass::U1 => 1,
            UnicyclicClass::U2 => 0,
        };
        if even % 2 != wanted || n % 2 != 0 || sizes.iter().any(|&(_, e)| e == 1) {
            continue;
        }
        let mut g = super::Family::Cycle(l).build().unwrap();
        for (at, e) in sizes {
            attach_tree(&mut g, at, e, rng);
        }
        return g;
    }
}
