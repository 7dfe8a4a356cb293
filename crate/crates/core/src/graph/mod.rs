//! Simple undirected graphs with 1-based vertex ids and index-addressed edges.
//!
//! Edges keep the order in which they were supplied; every matrix, trace and
//! certificate in this crate refers to edges by that index.

mod classify;
mod family;
pub mod generate;
pub mod io;
mod orient;

pub use classify::{classify, BasePart, CyclicClassification, CyclicKind, HangingTree};
pub use family::{family, Family};
pub use orient::{orient, OrientedGraph, SubDigraph};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("loop at vertex {vertex} (edge {edge})")]
    Loop { edge: usize, vertex: usize },
    #[error("duplicate edge {{{u},{v}}} at index {edge}")]
    Duplicate { edge: usize, u: usize, v: usize },
    #[error("edge {edge} endpoint {vertex} outside 1..={n}")]
    OutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("edge index {0} out of range")]
    NoSuchEdge(usize),
    #[error("vertex {vertex} is not an endpoint of edge {edge}")]
    NotEndpoint { edge: usize, vertex: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("illegal family parameters: {0}")]
    FamilyRange(String),
    #[error("unknown family descriptor `{0}`")]
    UnknownFamily(String),
    #[error("orientation has {got} heads but the graph has {expected} edges")]
    HeadCount { expected: usize, got: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

/// A validated simple graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n, edges: g.edges }
    }
}

/// Validates `edges` against `n` and returns the graph. Edge order is preserved.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges.to_vec())
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Self::validate_edges(n, &edges)?;
        Ok(Graph { n, edges })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new() }
    }

    fn validate_edges(n: usize, edges: &[(usize, usize)]) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::OutOfRange { edge: i, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { edge: i, vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::Duplicate { edge: i, u, v });
            }
        }
        Ok(())
    }

    // Used by operations whose output is valid by construction (possibly n = 0).
    pub(crate) fn from_parts(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        debug_assert!(Self::validate_edges(n, &edges).is_ok());
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<(usize, usize)> {
        self.edges.get(index).copied().ok_or(GraphError::NoSuchEdge(index))
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(GraphError::NoSuchVertex(v))
        } else {
            Ok(())
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Degrees indexed by `v - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg
    }

    /// Sorted neighbour lists indexed by `v - 1`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Indices of edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.m())
            .filter(|&i| {
                let (a, b) = self.edges[i];
                a == v || b == v
            })
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    /// Whether edges `i` and `j` share an endpoint.
    pub fn edges_adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.edges[i];
        let (c, d) = self.edges[j];
        a == c || a == d || b == c || b == d
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start - 1] {
                continue;
            }
            seen[start - 1] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v - 1] {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component index per vertex (`v - 1`) and the number of edges in each component.
    pub(crate) fn component_edge_counts(&self) -> (Vec<usize>, Vec<usize>) {
        let comps = self.components();
        let mut which = vec![0; self.n];
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                which[v - 1] = c;
            }
        }
        let mut counts = vec![0; comps.len()];
        for &(u, _) in &self.edges {
            counts[which[u - 1]] += 1;
        }
        (which, counts)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n
    }

    /// Removes `v` and its edges; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let relabel = |w: usize| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Ok(Graph::from_parts(self.n - 1, edges))
    }

    /// Same vertex set, without the edges whose indices are listed.
    pub fn remove_edges(&self, indices: &[usize]) -> Graph {
        let drop: BTreeSet<usize> = indices.iter().copied().collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, &e)| e)
            .collect();
        Graph::from_parts(self.n, edges)
    }

    /// Subgraph induced by `vertices`, relabelled `1..=k` in the given order.
    /// The returned label vector maps new id `i + 1` to original id `labels[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![0usize; self.n + 1];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != 0 && index[b] != 0)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        (Graph::from_parts(vertices.len(), edges), vertices.to_vec())
    }

    /// Drops isolated vertices, relabelling the rest in ascending order.
    pub fn compact(&self) -> (Graph, Vec<usize>) {
        let deg = self.degrees();
        let keep: Vec<usize> = (1..=self.n).filter(|&v| deg[v - 1] > 0).collect();
        let mut index = vec![0usize; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i + 1;
        }
        let edges = self.edges.iter().map(|&(a, b)| (index[a], index[b])).collect();
        (Graph::from_parts(keep.len(), edges), keep)
    }

    /// Edge set as normalized `(min, max)` pairs.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
    }

    /// Appends a new vertex adjacent to each of `neighbors`; returns the new id.
    pub(crate) fn push_vertex(&mut self, neighbors: &[usize]) -> usize {
        self.n += 1;
        let w = self.n;
        for &u in neighbors {
            self.edges.push((u, w));
        }
        w
    }

    pub(crate) fn push_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.edges.push((u, v));
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}, m={}; ", self.n, self.m())?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}

/// The line graph: vertex `i + 1` stands for edge `i` of `g`.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    if g.m() == 0 {
        return Err(GraphError::NoEdges);
    }
    let m = g.m();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if g.edges_adjacent(i, j) {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Ok(Graph::from_parts(m, edges))
}

/// `G(u,w)`: delete edge `e`, add a new vertex `w = n + 1` and the edge `{end, w}`.
/// The new edge takes index `e`, so all other edge indices are unchanged.
pub fn edge_split(g: &Graph, e: usize, end: usize) -> Result<Graph> {
    let (a, b) = g.edge(e)?;
    if end != a && end != b {
        return Err(GraphError::NotEndpoint { edge: e, vertex: end });
    }
    let w = g.n + 1;
    let mut edges = g.edges.clone();
    edges[e] = (end, w);
    Ok(Graph::from_parts(w, edges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphOp {
    /// Line graph.
    L,
    /// One new vertex per edge, joined to both endpoints.
    R,
    /// Subdivide every edge, then join subdivision vertices of adjacent edges.
    Q,
}

impl std::str::FromStr for GraphOp {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(GraphOp::L),
            "R" | "r" => Ok(GraphOp::R),
            "Q" | "q" => Ok(GraphOp::Q),
            other => Err(GraphError::UnknownFamily(other.to_string())),
        }
    }
}

pub fn graph_operation(g: &Graph, op: GraphOp) -> Result<Graph> {
    if g.m() == 0 {
        return Err(GraphError::NoEdges);
    }
    g.require_connected()?;
    match op {
        GraphOp::L => line_graph(g),
        GraphOp::R => {
            let mut out = g.clone();
            for &(u, v) in g.edges() {
                out.push_vertex(&[u, v]);
            }
            Ok(out)
        }
        GraphOp::Q => {
            let n = g.n();
            let m = g.m();
            let mut edges = Vec::with_capacity(2 * m);
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                edges.push((u, n + 1 + i));
                edges.push((n + 1 + i, v));
            }
            for i in 0..m {
                for j in i + 1..m {
                    if g.edges_adjacent(i, j) {
                        edges.push((n + 1 + i, n + 1 + j));
                    }
                }
            }
            Ok(Graph::from_parts(n + m, edges))
        }
    }
}

/// Glues a copy of `K_k` onto `g` by identifying one clique vertex with `attach`.
/// The other `k - 1` clique vertices get ids `n+1..=n+k-1`.
pub fn glue_clique(g: &Graph, attach: usize, k: usize) -> Result<Graph> {
    g.check_vertex(attach)?;
    let mut out = g.clone();
    let mut clique = vec![attach];
    for _ in 1..k {
        let w = out.push_vertex(&clique);
        clique.push(w);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        build_graph(n, e).unwrap()
    }

    #[test]
    fn build_validates() {
        assert_eq!(g(2, &[(1, 2)]).m(), 1);
        assert_eq!(g(3, &[(1, 2), (2, 3), (1, 3)]).m(), 3);
        let err = build_graph(3, &[(1, 1)]).unwrap_err();
        assert_eq!(err.to_string(), "loop at vertex 1 (edge 0)");
        assert!(matches!(
            build_graph(3, &[(1, 2), (2, 1)]),
            Err(GraphError::Duplicate { edge: 1, .. })
        ));
        assert!(matches!(
            build_graph(3, &[(1, 4)]),
            Err(GraphError::OutOfRange { vertex: 4, .. })
        ));
        assert!(matches!(build_graph(0, &[]), Err(GraphError::NoVertices)));
    }

    #[test]
    fn line_graph_examples() {
        let p3 = g(3, &[(1, 2), (2, 3)]);
        assert_eq!(line_graph(&p3).unwrap().edge_set(), g(2, &[(1, 2)]).edge_set());
        let k3 = g(3, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(line_graph(&k3).unwrap().m(), 3);
        let star = Family::Star(4).build().unwrap();
        let l = line_graph(&star).unwrap();
        assert_eq!((l.n(), l.m()), (4, 6));
        let c5 = Family::Cycle(5).build().unwrap();
        let lc5 = line_graph(&c5).unwrap();
        assert!(lc5.degrees().iter().all(|&d| d == 2) && lc5.is_connected());
        assert!(line_graph(&Graph::empty(2)).is_err());
    }

    #[test]
    fn edge_split_examples() {
        let c4 = Family::Cycle(4).build().unwrap();
        let s = edge_split(&c4, 0, 1).unwrap();
        assert_eq!((s.n(), s.m()), (5, 4));
        assert!(s.is_tree());
        let mut deg = s.degrees();
        deg.sort();
        assert_eq!(deg, vec![1, 1, 2, 2, 2]);

        let k2 = g(2, &[(1, 2)]);
        let s = edge_split(&k2, 0, 1).unwrap();
        assert_eq!(s.edges(), &[(1, 3)]);
        assert_eq!(s.degree(2), 0);

        let k3 = g(3, &[(1, 2), (2, 3), (1, 3)]);
        let s = edge_split(&k3, 0, 2).unwrap();
        assert!(s.is_tree());
        assert_eq!(s.n(), 4);
        assert_eq!(s.degrees().iter().filter(|&&d| d == 1).count(), 2);

        assert!(matches!(edge_split(&k3, 0, 3), Err(GraphError::NotEndpoint { .. })));
    }

    #[test]
    fn operations() {
        let k2 = g(2, &[(1, 2)]);
        let r = graph_operation(&k2, GraphOp::R).unwrap();
        assert_eq!(r.edge_set(), g(3, &[(1, 2), (1, 3), (2, 3)]).edge_set());

        let p3 = g(3, &[(1, 2), (2, 3)]);
        let q = graph_operation(&p3, GraphOp::Q).unwrap();
        assert_eq!((q.n(), q.m()), (5, 5));
        assert!(q.has_edge(4, 5));

        assert!(graph_operation(&Graph::empty(3), GraphOp::L).is_err());
        let disc = g(4, &[(1, 2), (3, 4)]);
        assert_eq!(graph_operation(&disc, GraphOp::R), Err(GraphError::Disconnected));
    }

    #[test]
    fn remove_and_compact() {
        let p3 = g(3, &[(1, 2), (2, 3)]);
        let h = p3.remove_vertex(2).unwrap();
        assert_eq!((h.n(), h.m()), (2, 0));
        let (c, labels) = g(5, &[(2, 4)]).compact();
        assert_eq!(c.edges(), &[(1, 2)]);
        assert_eq!(labels, vec![2, 4]);
    }

    #[test]
    fn clique_glue() {
        let k2 = g(2, &[(1, 2)]);
        let h = glue_clique(&k2, 2, 3).unwrap();
        assert_eq!((h.n(), h.m()), (4, 4));
        assert!(h.has_edge(2, 3) && h.has_edge(2, 4) && h.has_edge(3, 4));
    }

    #[test]
    fn serde_validates() {
        let k3: Graph = serde_json::from_str(r#"{"n":3,"edges":[[1,2],[2,3],[1,3]]}"#).unwrap();
        assert_eq!(k3.m(), 3);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }
}
