use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Result};

/// A graph with every edge directed `tail -> head`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedGraph {
    graph: Graph,
    heads: Vec<usize>,
}

impl OrientedGraph {
    /// `heads[i]` must be an endpoint of edge `i`.
    pub fn new(graph: Graph, heads: Vec<usize>) -> Result<OrientedGraph> {
        if heads.len() != graph.m() {
            return Err(GraphError::HeadCount { expected: graph.m(), got: heads.len() });
        }
        for (i, &h) in heads.iter().enumerate() {
            let (a, b) = graph.edges()[i];
            if h != a && h != b {
                return Err(GraphError::NotEndpoint { edge: i, vertex: h });
            }
        }
        Ok(OrientedGraph { graph, heads })
    }

    /// Each edge `(u, v)` directed `u -> v`, as listed.
    pub fn as_listed(graph: &Graph) -> OrientedGraph {
        let heads = graph.edges().iter().map(|&(_, v)| v).collect();
        OrientedGraph { graph: graph.clone(), heads }
    }

    /// Builds the orientation from `(tail, head)` arcs given in any order.
    pub fn from_arcs(graph: &Graph, arcs: &[(usize, usize)]) -> Result<OrientedGraph> {
        let mut heads = vec![0usize; graph.m()];
        for (line, &(t, h)) in arcs.iter().enumerate() {
            let i = graph.edge_index(t, h).ok_or_else(|| GraphError::Parse {
                line: line + 1,
                message: format!("arc {t}->{h} matches no edge"),
            })?;
            if heads[i] != 0 {
                return Err(GraphError::Parse {
                    line: line + 1,
                    message: format!("edge {{{t},{h}}} oriented twice"),
                });
            }
            heads[i] = h;
        }
        if let Some(i) = heads.iter().position(|&h| h == 0) {
            let (a, b) = graph.edges()[i];
            return Err(GraphError::Parse {
                line: arcs.len(),
                message: format!("edge {{{a},{b}}} has no orientation"),
            });
        }
        Ok(OrientedGraph { graph: graph.clone(), heads })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    pub fn head(&self, edge: usize) -> usize {
        self.heads[edge]
    }

    pub fn tail(&self, edge: usize) -> usize {
        let (a, b) = self.graph.edges()[edge];
        if self.heads[edge] == a {
            b
        } else {
            a
        }
    }

    /// Arcs `(tail, head)` in edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.graph.m()).map(|i| (self.tail(i), self.head(i))).collect()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.heads.iter().filter(|&&h| h == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        (0..self.graph.m()).filter(|&i| self.tail(i) == v).count()
    }

    /// Reverses edge `edge`.
    pub fn flip(&mut self, edge: usize) {
        self.heads[edge] = self.tail(edge);
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.graph.n();
        let mut indeg = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (t, h) in self.arcs() {
            indeg[h - 1] += 1;
            out[t - 1].push(h);
        }
        let mut queue: VecDeque<usize> = (1..=n).filter(|&v| indeg[v - 1] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop_front() {
            removed += 1;
            for &w in &out[v - 1] {
                indeg[w - 1] -= 1;
                if indeg[w - 1] == 0 {
                    queue.push_back(w);
                }
            }
        }
        removed == n
    }

    /// Vertices of out-degree zero (isolated vertices included).
    pub fn sinks(&self) -> BTreeSet<usize> {
        let mut has_out = vec![false; self.graph.n()];
        for (t, _) in self.arcs() {
            has_out[t - 1] = true;
        }
        (1..=self.graph.n()).filter(|&v| !has_out[v - 1]).collect()
    }

    /// The sub-digraph formed by the listed edges.
    pub fn sub(&self, edges: &[usize]) -> Result<SubDigraph<'_>> {
        for &e in edges {
            if e >= self.graph.m() {
                return Err(GraphError::NoSuchEdge(e));
            }
        }
        Ok(SubDigraph { parent: self, edges: edges.iter().copied().collect() })
    }
}

/// An edge subset of an [`OrientedGraph`], inheriting its directions.
#[derive(Debug, Clone)]
pub struct SubDigraph<'a> {
    parent: &'a OrientedGraph,
    edges: BTreeSet<usize>,
}

impl SubDigraph<'_> {
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().copied()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&e| self.parent.head(e) == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&e| self.parent.tail(e) == v).count()
    }
}

/// Validates `heads` against `g`.
pub fn orient(g: &Graph, heads: &[usize]) -> Result<OrientedGraph> {
    OrientedGraph::new(g.clone(), heads.to_vec())
}
