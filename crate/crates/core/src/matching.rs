//! Perfect-matching counts `M(G)` and `M(L(G))`, Dong's tree formula
//! (Lemma 2.3), the paper's double factorial (Lemma 2.4) and the Lemma 2.6
//! split recursion.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::caps::SizeCaps;
use crate::graph::{edge_split, line_graph, Graph, GraphError};
use crate::{check_cap, Error, Result};

fn overflow(what: &str) -> Error {
    Error::Unsupported(format!("{what} exceeds the u128 range"))
}

/// `M(G)`: backtracking on the lowest unsaturated vertex, memoized on the
/// unsaturated-vertex bitmask. Returns 0 for odd order.
pub fn count_perfect_matchings(g: &Graph) -> Result<u128> {
    let n = g.n();
    if n % 2 == 1 {
        return Ok(0);
    }
    check_cap("perfect matchings: vertices", n, SizeCaps::global().matching.min(64))?;
    let adj: Vec<u64> = (1..=n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << (w - 1))).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    pm_rec(&adj, full, &mut memo).ok_or_else(|| overflow("perfect matching count"))
}

fn pm_rec(adj: &[u64], free: u64, memo: &mut HashMap<u64, u128>) -> Option<u128> {
    if free == 0 {
        return Some(1);
    }
    if let Some(&x) = memo.get(&free) {
        return Some(x);
    }
    let v = free.trailing_zeros() as usize;
    let mut nb = adj[v] & free;
    let mut total: u128 = 0;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        total = total.checked_add(pm_rec(adj, free & !(1 << v) & !(1 << w), memo)?)?;
    }
    memo.insert(free, total);
    Some(total)
}

/// `M(L(G))`. Odd `m` gives 0 without building the line graph.
pub fn count_pm_line_graph(g: &Graph) -> Result<u128> {
    if g.m() == 0 {
        return Err(GraphError::NoEdges.into());
    }
    if g.m() % 2 == 1 {
        return Ok(0);
    }
    count_perfect_matchings(&line_graph(g)?)
}

/// `p(G)`: components with an even number of edges (isolated vertices count).
pub fn even_component_count(g: &Graph) -> usize {
    let (_, counts) = g.component_edge_counts();
    counts.iter().filter(|&&c| c % 2 == 0).count()
}

/// The paper's `(2k)!! = (2k)! / (k! 2^k) = 1·3·…·(2k−1)`, with `0!! = 1`.
pub fn double_factorial_even(p: u64) -> Result<u128> {
    if p % 2 == 1 {
        return Err(Error::Argument(format!("double_factorial_even needs an even argument, got {p}")));
    }
    (1..p).step_by(2).try_fold(1u128, |acc, x| acc.checked_mul(x as u128)).ok_or_else(|| overflow("(p)!!"))
}

/// Lemma 2.3: `M(L(T)) = Π_v p(T − v)!!` for a tree `T` of odd order > 1.
pub fn dong_tree_formula(t: &Graph) -> Result<u128> {
    if !t.is_tree() {
        return Err(Error::Argument("dong_tree_formula needs a tree".into()));
    }
    if t.n() < 3 || t.n() % 2 == 0 {
        return Err(Error::Argument(format!("dong_tree_formula needs odd order > 1, got n = {}", t.n())));
    }
    let mut product: u128 = 1;
    for v in t.vertices() {
        let p = even_component_count(&t.remove_vertex(v)?);
        debug_assert!(p % 2 == 0, "p(T - v) is even for odd-order trees");
        product = product.checked_mul(double_factorial_even(p as u64)?).ok_or_else(|| overflow("Dong product"))?;
    }
    Ok(product)
}

/// The three counts of Lemma 2.6 for one edge `e = uv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitRecord {
    pub edge: usize,
    pub u: usize,
    pub v: usize,
    /// `M(L(G))`
    pub lhs: u128,
    /// `M(L(G(u, w)))`
    pub rhs_u: u128,
    /// `M(L(G(v, w)))`
    pub rhs_v: u128,
}

impl SplitRecord {
    /// Whether `lhs = rhs_u + rhs_v`.
    pub fn holds(&self) -> bool {
        self.rhs_u.checked_add(self.rhs_v) == Some(self.lhs)
    }
}

pub fn split_recursion(g: &Graph, e: usize) -> Result<SplitRecord> {
    let (u, v) = g.edge(e)?;
    Ok(SplitRecord {
        edge: e,
        u,
        v,
        lhs: count_pm_line_graph(g)?,
        rhs_u: count_pm_line_graph(&edge_split(g, e, u)?)?,
        rhs_v: count_pm_line_graph(&edge_split(g, e, v)?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, Family};

    fn fam(s: &str) -> Graph {
        crate::graph::family(s).unwrap()
    }

    #[test]
    fn matchings() {
        assert_eq!(count_perfect_matchings(&fam("complete:4")).unwrap(), 3);
        assert_eq!(count_perfect_matchings(&fam("cycle:4")).unwrap(), 2);
        assert_eq!(count_perfect_matchings(&fam("path:3")).unwrap(), 0);
        assert_eq!(count_perfect_matchings(&fam("complete:6")).unwrap(), 15);
    }

    #[test]
    fn line_graph_matchings() {
        assert_eq!(count_pm_line_graph(&fam("path:5")).unwrap(), 1);
        assert_eq!(count_pm_line_graph(&fam("star:4")).unwrap(), 3);
        assert_eq!(count_pm_line_graph(&fam("cycle:5")).unwrap(), 0);
        assert!(count_pm_line_graph(&Graph::empty(3)).is_err());
    }

    #[test]
    fn even_components() {
        let p3_minus_middle = fam("path:3").remove_vertex(2).unwrap();
        assert_eq!(even_component_count(&p3_minus_middle), 2);
        assert_eq!(even_component_count(&fam("path:2")), 0);
        assert_eq!(even_component_count(&Graph::empty(3)), 3);
    }

    #[test]
    fn double_factorial() {
        assert_eq!(double_factorial_even(0).unwrap(), 1);
        assert_eq!(double_factorial_even(2).unwrap(), 1);
        assert_eq!(double_factorial_even(4).unwrap(), 3);
        assert_eq!(double_factorial_even(8).unwrap(), 105);
        assert!(double_factorial_even(3).is_err());
    }

    #[test]
    fn dong() {
        assert_eq!(dong_tree_formula(&fam("path:5")).unwrap(), 1);
        assert_eq!(dong_tree_formula(&fam("star:4")).unwrap(), 3);
        assert_eq!(dong_tree_formula(&fam("path:3")).unwrap(), 1);
        assert!(dong_tree_formula(&fam("path:4")).is_err());
        assert!(dong_tree_formula(&fam("cycle:5")).is_err());
    }

    #[test]
    fn split_examples() {
        let c4 = Family::Cycle(4).build().unwrap();
        for e in 0..4 {
            let r = split_recursion(&c4, e).unwrap();
            assert_eq!((r.lhs, r.rhs_u, r.rhs_v), (2, 1, 1));
        }
        let r = split_recursion(&fam("cycle:3"), 0).unwrap();
        assert_eq!((r.lhs, r.rhs_u, r.rhs_v), (0, 0, 0));
        // K4 minus edge {3,4}: vertices 1, 2 have degree 3
        let g = build_graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let r = split_recursion(&g, 0).unwrap();
        assert!(r.holds());
        assert!(split_recursion(&g, 9).is_err());
    }
}
