use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Result};

/// Named graph families with canonical labelling.
///
/// Base vertices are numbered first in traversal order:
///
/// * `B1(p,q)`: `C_p = 1,2,..,p` and `C_q = 1,p+1,..,p+q-1`, sharing `u = 1`.
/// * `B2(p,q,r)`: `C_p = 1..=p` through `u = 1`, then the path `u, p+1, .., v'`
///   of order `r`, then `C_q` through `v' = p+r-1`.
/// * `B3(p,q,r)`: hubs `u = 1` and `v' = p+2`; the paths carry `p`, `q` and `r`
///   internal vertices: `u, 2..=p+1, v'`, then `v', p+3..=p+q+2, u` (so the first
///   two paths close a cycle), then `u, p+q+3..=p+q+r+2, v'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,k}` with centre 1.
    Star(usize),
    B1(usize, usize),
    B2(usize, usize, usize),
    B3(usize, usize, usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        self.check()?;
        let g = match *self {
            Family::Path(k) => Graph::from_parts(k, (1..k).map(|i| (i, i + 1)).collect()),
            Family::Cycle(k) => Graph::from_parts(k, cycle_edges(&(1..=k).collect::<Vec<_>>())),
            Family::Complete(k) => {
                let mut edges = Vec::new();
                for i in 1..=k {
                    for j in i + 1..=k {
                        edges.push((i, j));
                    }
                }
                Graph::from_parts(k, edges)
            }
            Family::Star(k) => Graph::from_parts(k + 1, (2..=k + 1).map(|i| (1, i)).collect()),
            Family::B1(p, q) => {
                let cp: Vec<usize> = (1..=p).collect();
                let cq: Vec<usize> = std::iter::once(1).chain(p + 1..p + q).collect();
                let mut edges = cycle_edges(&cp);
                edges.extend(cycle_edges(&cq));
                Graph::from_parts(p + q - 1, edges)
            }
            Family::B2(p, q, r) => {
                let cp: Vec<usize> = (1..=p).collect();
                let v = p + r - 1;
                let path: Vec<usize> = std::iter::once(1).chain(p + 1..=v).collect();
                let cq: Vec<usize> = std::iter::once(v).chain(v + 1..v + q).collect();
                let mut edges = cycle_edges(&cp);
                edges.extend(path_edges(&path));
                edges.extend(cycle_edges(&cq));
                Graph::from_parts(p + q + r - 2, edges)
            }
            Family::B3(p, q, r) => {
                let u = 1;
                let v = p + 2;
                let first: Vec<usize> = std::iter::once(u).chain(2..=p + 1).chain([v]).collect();
                let second: Vec<usize> =
                    std::iter::once(v).chain(p + 3..=p + q + 2).chain([u]).collect();
                let third: Vec<usize> =
                    std::iter::once(u).chain(p + q + 3..=p + q + r + 2).chain([v]).collect();
                let mut edges = path_edges(&first);
                edges.extend(path_edges(&second));
                edges.extend(path_edges(&third));
                Graph::from_parts(p + q + r + 2, edges)
            }
        };
        Ok(g)
    }

    fn check(&self) -> Result<()> {
        let bad = |why: &str| Err(GraphError::FamilyRange(format!("{self}: {why}")));
        match *self {
            Family::Path(k) if k < 1 => bad("paths need k >= 1"),
            Family::Cycle(k) if k < 3 => bad("cycles need k >= 3"),
            Family::Complete(k) if k < 1 => bad("complete graphs need k >= 1"),
            Family::Star(k) if k < 1 => bad("stars need k >= 1"),
            Family::B1(p, q) if p < 3 || q < 3 => bad("B1 needs p, q >= 3"),
            Family::B2(p, q, r) if p < 3 || q < 3 || r < 2 => bad("B2 needs p, q >= 3 and r >= 2"),
            Family::B3(p, q, r) if p < 1 || q < 1 || r < 1 => bad("B3 needs p, q, r >= 1"),
            _ => Ok(()),
        }
    }
}

fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = path_edges(cycle);
    edges.push((cycle[cycle.len() - 1], cycle[0]));
    edges
}

fn path_edges(path: &[usize]) -> Vec<(usize, usize)> {
    path.windows(2).map(|w| (w[0], w[1])).collect()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(k) => write!(f, "path:{k}"),
            Family::Cycle(k) => write!(f, "cycle:{k}"),
            Family::Complete(k) => write!(f, "complete:{k}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::B1(p, q) => write!(f, "b1:{p},{q}"),
            Family::B2(p, q, r) => write!(f, "b2:{p},{q},{r}"),
            Family::B3(p, q, r) => write!(f, "b3:{p},{q},{r}"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || GraphError::UnknownFamily(s.to_string());
        let (name, params) = s.trim().split_once(':').ok_or_else(unknown)?;
        let nums = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| unknown())?;
        let fam = match (name.to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("path", &[k]) => Family::Path(k),
            ("cycle", &[k]) => Family::Cycle(k),
            ("complete", &[k]) => Family::Complete(k),
            ("star", &[k]) => Family::Star(k),
            ("b1", &[p, q]) => Family::B1(p, q),
            ("b2", &[p, q, r]) => Family::B2(p, q, r),
            ("b3", &[p, q, r]) => Family::B3(p, q, r),
            _ => return Err(unknown()),
        };
        fam.check()?;
        Ok(fam)
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Family {
    type Error = GraphError;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Parses a descriptor such as `b2:3,3,2` and builds the graph.
pub fn family(spec: &str) -> Result<Graph> {
    spec.parse::<Family>()?.build()
}
