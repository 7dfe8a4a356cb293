//! Tree / unicyclic / bicyclic recognition and hanging-tree decomposition.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CyclicKind {
    Tree,
    Unicyclic,
    BicyclicB1,
    BicyclicB2,
    BicyclicB3,
    Other,
}

impl CyclicKind {
    pub fn is_bicyclic(self) -> bool {
        matches!(self, CyclicKind::BicyclicB1 | CyclicKind::BicyclicB2 | CyclicKind::BicyclicB3)
    }
}

/// One named piece of the base subgraph.
///
/// Cycles (`C_l`, `C_p`, `C_q`) list their vertices in walk order starting at
/// the hub they contain; paths (`P_r` in `B2`, `P_p`/`P_q`/`P_r` in `B3`) run
/// from `u` to `v'` inclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasePart {
    pub name: String,
    pub vertices: Vec<usize>,
    pub closed: bool,
}

/// A tree attached to the base at `root` through the single edge `root - first`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HangingTree {
    pub root: usize,
    pub first: usize,
    /// Tree vertices other than `root`, ascending.
    pub vertices: Vec<usize>,
    /// Edge indices of the tree, including `root - first`.
    pub edges: Vec<usize>,
}

impl HangingTree {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicClassification {
    pub kind: CyclicKind,
    pub n: usize,
    pub m: usize,
    /// `[l]`, `[p, q]` or `[p, q, r]` for the base, empty otherwise.
    pub parameters: Vec<usize>,
    /// `u` for `B1`; `u, v'` for `B2`/`B3`; empty otherwise.
    pub hubs: Vec<usize>,
    pub parts: Vec<BasePart>,
    pub base_vertices: Vec<usize>,
    pub base_edges: Vec<usize>,
    pub hanging_trees: Vec<HangingTree>,
    /// Per base vertex: hanging trees with an even number of edges.
    pub k0: BTreeMap<usize, usize>,
    /// Per base vertex: hanging trees with an odd number of edges.
    pub k1: BTreeMap<usize, usize>,
    /// Sum of `k0` over all base vertices.
    pub s: usize,
}

impl CyclicClassification {
    pub fn part(&self, name: &str) -> Option<&BasePart> {
        self.parts.iter().find(|p| p.name == name)
    }

    /// Sum of `k0` over the vertices of the named part.
    pub fn s_over(&self, name: &str) -> usize {
        self.part(name)
            .map(|p| p.vertices.iter().map(|v| self.k0.get(v).copied().unwrap_or(0)).sum())
            .unwrap_or(0)
    }

    /// Sum of `k0` over a set of vertices.
    pub fn s_over_vertices<'a>(&self, vs: impl IntoIterator<Item = &'a usize>) -> usize {
        let set: BTreeSet<usize> = vs.into_iter().copied().collect();
        set.iter().map(|v| self.k0.get(v).copied().unwrap_or(0)).sum()
    }

    pub fn trees_at(&self, v: usize) -> impl Iterator<Item = &HangingTree> {
        self.hanging_trees.iter().filter(move |t| t.root == v)
    }

    fn empty(kind: CyclicKind, g: &Graph) -> Self {
        CyclicClassification {
            kind,
            n: g.n(),
            m: g.m(),
            parameters: Vec::new(),
            hubs: Vec::new(),
            parts: Vec::new(),
            base_vertices: Vec::new(),
            base_edges: Vec::new(),
            hanging_trees: Vec::new(),
            k0: BTreeMap::new(),
            k1: BTreeMap::new(),
            s: 0,
        }
    }
}

/// Classifies a connected graph by cyclomatic number and decomposes it into a
/// base subgraph plus hanging trees.
pub fn classify(g: &Graph) -> Result<CyclicClassification> {
    g.require_connected()?;
    let (n, m) = (g.n(), g.m());
    if m + 1 == n {
        return Ok(CyclicClassification::empty(CyclicKind::Tree, g));
    }
    if m > n + 1 {
        return Ok(CyclicClassification::empty(CyclicKind::Other, g));
    }

    let adj = g.adjacency();
    let core = two_core(g, &adj);
    let core_adj: Vec<Vec<usize>> = (1..=n)
        .map(|v| {
            if core.contains(&v) {
                adj[v - 1].iter().copied().filter(|w| core.contains(w)).collect()
            } else {
                Vec::new()
            }
        })
        .collect();

    let (kind, parameters, hubs, parts) = if m == n {
        let start = *core.iter().next().expect("unicyclic graph has a cycle");
        let cycle = walk_cycle(&core_adj, start, core_adj[start - 1][0]);
        let part = BasePart { name: "C_l".into(), vertices: cycle.clone(), closed: true };
        (CyclicKind::Unicyclic, vec![cycle.len()], Vec::new(), vec![part])
    } else {
        bicyclic_base(&core_adj, &core)
    };

    let mut base_vertices: Vec<usize> = Vec::new();
    for part in &parts {
        for &v in &part.vertices {
            if !base_vertices.contains(&v) {
                base_vertices.push(v);
            }
        }
    }
    let base_edges: Vec<usize> = (0..m)
        .filter(|&i| {
            let (a, b) = g.edges()[i];
            core.contains(&a) && core.contains(&b)
        })
        .collect();

    let mut hanging_trees = Vec::new();
    let mut k0 = BTreeMap::new();
    let mut k1 = BTreeMap::new();
    let mut sorted_base = base_vertices.clone();
    sorted_base.sort_unstable();
    for &root in &sorted_base {
        k0.insert(root, 0);
        k1.insert(root, 0);
        for &first in &adj[root - 1] {
            if core.contains(&first) {
                continue;
            }
            let tree = collect_tree(g, &adj, root, first);
            if tree.edge_count() % 2 == 0 {
                *k0.get_mut(&root).unwrap() += 1;
            } else {
                *k1.get_mut(&root).unwrap() += 1;
            }
            hanging_trees.push(tree);
        }
    }
    let s = k0.values().sum();

    Ok(CyclicClassification {
        kind,
        n,
        m,
        parameters,
        hubs,
        parts,
        base_vertices,
        base_edges,
        hanging_trees,
        k0,
        k1,
        s,
    })
}

fn two_core(g: &Graph, adj: &[Vec<usize>]) -> BTreeSet<usize> {
    let mut deg = g.degrees();
    let mut alive = vec![true; g.n()];
    let mut stack: Vec<usize> = (1..=g.n()).filter(|&v| deg[v - 1] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v - 1] {
            continue;
        }
        alive[v - 1] = false;
        for &w in &adj[v - 1] {
            if alive[w - 1] {
                deg[w - 1] -= 1;
                if deg[w - 1] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    (1..=g.n()).filter(|&v| alive[v - 1]).collect()
}

/// Walks from `start` through `next` until a vertex of core degree != 2 (or
/// `start` again) is reached. Returns the visited sequence including both ends.
fn walk(core_adj: &[Vec<usize>], start: usize, next: usize) -> Vec<usize> {
    let mut seq = vec![start, next];
    let (mut prev, mut cur) = (start, next);
    while cur != start && core_adj[cur - 1].len() == 2 {
        let nxt = if core_adj[cur - 1][0] == prev { core_adj[cur - 1][1] } else { core_adj[cur - 1][0] };
        seq.push(nxt);
        prev = cur;
        cur = nxt;
    }
    seq
}

/// The cycle through `start` leaving via `next`, without the repeated start vertex.
fn walk_cycle(core_adj: &[Vec<usize>], start: usize, next: usize) -> Vec<usize> {
    let mut seq = walk(core_adj, start, next);
    debug_assert_eq!(seq.last(), Some(&start));
    seq.pop();
    seq
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

type BaseShape = (CyclicKind, Vec<usize>, Vec<usize>, Vec<BasePart>);

fn bicyclic_base(core_adj: &[Vec<usize>], core: &BTreeSet<usize>) -> BaseShape {
    let hubs: Vec<usize> = core.iter().copied().filter(|&v| core_adj[v - 1].len() >= 3).collect();
    let cycle = |name: &str, vertices: Vec<usize>| BasePart { name: name.into(), vertices, closed: true };
    let path = |name: &str, vertices: Vec<usize>| BasePart { name: name.into(), vertices, closed: false };

    if hubs.len() == 1 {
        let u = hubs[0];
        // the smaller neighbour of each pair starts its cycle
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for &w in &core_adj[u - 1] {
            let c = walk_cycle(core_adj, u, w);
            if !cycles.iter().any(|o| sorted(o) == sorted(&c)) {
                cycles.push(c);
            }
        }
        cycles.sort_by_key(|c| sorted(c));
        let (cp, cq) = (cycles[0].clone(), cycles[1].clone());
        let params = vec![cp.len(), cq.len()];
        return (CyclicKind::BicyclicB1, params, vec![u], vec![cycle("C_p", cp), cycle("C_q", cq)]);
    }

    let (a, b) = (hubs[0], hubs[1]);
    let walks_a: Vec<Vec<usize>> = core_adj[a - 1].iter().map(|&w| walk(core_adj, a, w)).collect();
    if walks_a.iter().all(|w| *w.last().unwrap() == b) {
        let mut paths = walks_a;
        paths.sort_by_key(|p| sorted(&p[1..p.len() - 1]));
        let params = paths.iter().map(|p| p.len() - 2).collect();
        let parts = ["P_p", "P_q", "P_r"]
            .iter()
            .zip(paths)
            .map(|(name, p)| path(name, p))
            .collect();
        return (CyclicKind::BicyclicB3, params, vec![a, b], parts);
    }

    let loop_at = |h: usize| -> Vec<usize> {
        core_adj[h - 1]
            .iter()
            .map(|&w| walk(core_adj, h, w))
            .find(|w| *w.last().unwrap() == h)
            .map(|mut w| {
                w.pop();
                w
            })
            .expect("dumbbell hub lies on a cycle")
    };
    let (ca, cb) = (loop_at(a), loop_at(b));
    let (u, v, cp, cq) = if sorted(&ca) <= sorted(&cb) { (a, b, ca, cb) } else { (b, a, cb, ca) };
    let connector = core_adj[u - 1]
        .iter()
        .map(|&w| walk(core_adj, u, w))
        .find(|w| *w.last().unwrap() == v)
        .expect("dumbbell hubs are joined by a path");
    let params = vec![cp.len(), cq.len(), connector.len()];
    (
        CyclicKind::BicyclicB2,
        params,
        vec![u, v],
        vec![cycle("C_p", cp), path("P_r", connector), cycle("C_q", cq)],
    )
}

fn collect_tree(g: &Graph, adj: &[Vec<usize>], root: usize, first: usize) -> HangingTree {
    let mut vertices = vec![first];
    let mut stack = vec![(first, root)];
    let mut edges = vec![g.edge_index(root, first).unwrap()];
    while let Some((v, parent)) = stack.pop() {
        for &w in &adj[v - 1] {
            if w != parent {
                vertices.push(w);
                edges.push(g.edge_index(v, w).unwrap());
                stack.push((w, v));
            }
        }
    }
    vertices.sort_unstable();
    edges.sort_unstable();
    HangingTree { root, first, vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, family, GraphError};

    #[test]
    fn cycle_with_hanging_path() {
        // C6 on 1..6, a 2-edge path 1-7-8 hanging at v1
        let mut edges: Vec<(usize, usize)> = (1..6).map(|i| (i, i + 1)).collect();
        edges.push((6, 1));
        edges.extend([(1, 7), (7, 8)]);
        let g = build_graph(8, &edges).unwrap();
        let c = classify(&g).unwrap();
        assert_eq!(c.kind, CyclicKind::Unicyclic);
        assert_eq!(c.parameters, vec![6]);
        assert_eq!(c.k0[&1], 1);
        assert_eq!(c.k1[&1], 0);
        assert_eq!(c.s, 1);
        assert_eq!(c.hanging_trees.len(), 1);
        assert_eq!(c.hanging_trees[0].edge_count(), 2);
        assert_eq!(c.part("C_l").unwrap().vertices, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn bare_bases() {
        let c = classify(&family("b1:3,3").unwrap()).unwrap();
        assert_eq!(c.kind, CyclicKind::BicyclicB1);
        assert_eq!(c.hubs, vec![1]);
        assert!(c.k0.values().all(|&k| k == 0) && c.k1.values().all(|&k| k == 0));
        assert_eq!(c.parameters, vec![3, 3]);

        let c = classify(&family("b2:3,4,3").unwrap()).unwrap();
        assert_eq!(c.kind, CyclicKind::BicyclicB2);
        assert_eq!(c.parameters, vec![3, 4, 3]);
        assert_eq!(c.hubs, vec![1, 5]);
        assert_eq!(c.part("P_r").unwrap().vertices, vec![1, 4, 5]);

        let c = classify(&family("b3:1,2,3").unwrap()).unwrap();
        assert_eq!(c.kind, CyclicKind::BicyclicB3);
        assert_eq!(c.parameters, vec![1, 2, 3]);
        assert_eq!(c.hubs, vec![1, 3]);

        let c = classify(&family("b3:1,1,1").unwrap()).unwrap();
        assert_eq!(c.kind, CyclicKind::BicyclicB3);
    }

    #[test]
    fn trees_and_others() {
        assert_eq!(classify(&family("path:7").unwrap()).unwrap().kind, CyclicKind::Tree);
        let k4 = family("complete:4").unwrap();
        let c = classify(&k4).unwrap();
        assert_eq!(c.kind, CyclicKind::Other);
        assert!(c.parts.is_empty() && c.hanging_trees.is_empty());
        let disc = build_graph(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(classify(&disc), Err(GraphError::Disconnected));
    }

    #[test]
    fn decomposition_partitions_edges() {
        // B1(3,4) with a 3-edge tree at u and a 2-edge tree at vertex 5
        let mut g = family("b1:3,4").unwrap();
        let a = g.push_vertex(&[1]);
        let b = g.push_vertex(&[a]);
        g.push_vertex(&[b]);
        let c = g.push_vertex(&[5]);
        g.push_vertex(&[c]);
        let cl = classify(&g).unwrap();
        assert_eq!(cl.kind, CyclicKind::BicyclicB1);
        assert_eq!(cl.k1[&1], 1);
        assert_eq!(cl.k0[&5], 1);
        let mut all: Vec<usize> = cl.base_edges.clone();
        for t in &cl.hanging_trees {
            all.extend(&t.edges);
        }
        all.sort_unstable();
        assert_eq!(all, (0..g.m()).collect::<Vec<_>>());
    }
}
