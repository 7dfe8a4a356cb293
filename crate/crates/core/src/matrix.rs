//! The paper's edge-row matrices: `A_G`, `B_G`, the index-function assembly
//! `A_(η)`, and the Theorem 4.2 block extension `B''`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, OrientedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("row {row} has {got} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, got: usize },
    #[error("{what} labels: {got} given for {expected} {what}s")]
    LabelCount { what: &'static str, expected: usize, got: usize },
    #[error("duplicate column label {0}")]
    DuplicateColumn(String),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("index function not valid: values sum to {total}, expected {expected}")]
    InvalidIndex { total: u64, expected: usize },
    #[error("index function has {got} {what} values, graph has {expected}")]
    IndexShape { what: &'static str, expected: usize, got: usize },
    #[error("column {0} is not a vertex or edge column of A_G")]
    NotAColumn(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T, E = MatrixError> = std::result::Result<T, E>;

/// Row/column label. Edges are addressed by their 0-based index in the
/// graph's edge list and print as `e<index>`; vertices print as `v<id>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Label {
    Vertex(usize),
    Edge(usize),
    /// The `copy`-th repetition (1-based) of a column in an assembled matrix.
    Copy { of: Box<Label>, copy: usize },
    /// A column built from other columns, or a label from a text dump.
    Named(String),
}

impl Label {
    /// The underlying label with any copy marker removed.
    pub fn base(&self) -> &Label {
        match self {
            Label::Copy { of, .. } => of.base(),
            other => other,
        }
    }

    fn parse(s: &str) -> Label {
        if let Some((of, copy)) = s.rsplit_once('#') {
            if let Ok(copy) = copy.parse() {
                return Label::Copy { of: Box::new(Label::parse(of)), copy };
            }
        }
        let numeric = |rest: &str| rest.parse::<usize>().ok();
        if let Some(v) = s.strip_prefix('v').and_then(numeric) {
            return Label::Vertex(v);
        }
        if let Some(e) = s.strip_prefix('e').and_then(numeric) {
            return Label::Edge(e);
        }
        Label::Named(s.to_string())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Vertex(v) => write!(f, "v{v}"),
            Label::Edge(e) => write!(f, "e{e}"),
            Label::Copy { of, copy } => write!(f, "{of}#{copy}"),
            Label::Named(s) => f.write_str(s),
        }
    }
}

/// Dense exact-integer matrix with labelled rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledIntMatrix {
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
    /// Row-major entries.
    entries: Vec<i64>,
}

impl LabeledIntMatrix {
    pub fn new(row_labels: Vec<Label>, col_labels: Vec<Label>, rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.len() != row_labels.len() {
            return Err(MatrixError::LabelCount { what: "row", expected: rows.len(), got: row_labels.len() });
        }
        let cols = col_labels.len();
        let mut seen = HashSet::new();
        for l in &col_labels {
            if !seen.insert(l) {
                return Err(MatrixError::DuplicateColumn(l.to_string()));
            }
        }
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(MatrixError::Ragged { row: i, expected: cols, got: r.len() });
            }
            entries.extend(r);
        }
        Ok(LabeledIntMatrix { row_labels, col_labels, entries })
    }

    /// Unlabelled rows; rows get `r1..`, columns `c1..`.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let rl = (1..=rows.len()).map(|i| Label::Named(format!("r{i}"))).collect();
        let cl = (1..=cols).map(|j| Label::Named(format!("c{j}"))).collect();
        Self::new(rl, cl, rows)
    }

    pub fn nrows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.nrows())
        } else {
            Err(MatrixError::NotSquare { rows: self.nrows(), cols: self.ncols() })
        }
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.col_labels
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.ncols() + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        let c = self.ncols();
        &self.entries[i * c..(i + 1) * c]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.nrows()).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.nrows()).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_index(&self, label: &Label) -> Option<usize> {
        self.col_labels.iter().position(|l| l == label)
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        (0..self.nrows()).all(|i| self.get(i, j) == 0)
    }

    /// Matrix whose columns are `self`'s columns at `cols`, in that order;
    /// repeated columns get copy markers so labels stay unique.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut seen = vec![0usize; self.ncols()];
        for &j in cols {
            seen[j] += 1;
        }
        let mut copy = vec![0usize; self.ncols()];
        let col_labels = cols
            .iter()
            .map(|&j| {
                copy[j] += 1;
                if seen[j] > 1 {
                    Label::Copy { of: Box::new(self.col_labels[j].clone()), copy: copy[j] }
                } else {
                    self.col_labels[j].clone()
                }
            })
            .collect();
        let entries = (0..self.nrows()).flat_map(|i| cols.iter().map(move |&j| self.get(i, j))).collect();
        LabeledIntMatrix { row_labels: self.row_labels.clone(), col_labels, entries }
    }

    /// Column `j` repeated `mult[j]` times, columns in order.
    pub fn with_multiplicities(&self, mult: &[u32]) -> Self {
        let cols: Vec<usize> = mult.iter().enumerate().flat_map(|(j, &k)| std::iter::repeat_n(j, k as usize)).collect();
        self.select_columns(&cols)
    }

    pub fn negate_row(&mut self, i: usize) {
        let c = self.ncols();
        for x in &mut self.entries[i * c..(i + 1) * c] {
            *x = -*x;
        }
    }

    /// Text dump: a `# rows: ... | cols: ...` header then one line per row.
    pub fn to_text(&self) -> String {
        let join = |ls: &[Label]| ls.iter().map(Label::to_string).collect::<Vec<_>>().join(" ");
        let mut out = format!("# rows: {} | cols: {}\n", join(&self.row_labels), join(&self.col_labels));
        for i in 0..self.nrows() {
            let line: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output, or bare integer rows.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut labels: Option<(usize, Vec<Label>, Vec<Label>)> = None;
        let mut rows = Vec::new();
        let mut first_row_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if let Some(h) = line.strip_prefix("# rows:") {
                let (r, c) = h.split_once("| cols:").ok_or(MatrixError::Parse {
                    line: i + 1,
                    message: "header must read `# rows: ... | cols: ...`".into(),
                })?;
                let parse = |s: &str| s.split_whitespace().map(Label::parse).collect();
                labels = Some((i + 1, parse(r), parse(c)));
                continue;
            }
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>().map_err(|_| MatrixError::Parse {
                        line: i + 1,
                        message: format!("expected an integer entry, found `{t}`"),
                    })
                })
                .collect::<Result<Vec<i64>>>()?;
            if let Some(first) = rows.first().map(Vec::len) {
                if row.len() != first {
                    return Err(MatrixError::Parse {
                        line: i + 1,
                        message: format!("expected {first} entries, found {}", row.len()),
                    });
                }
            } else {
                first_row_line = i + 1;
            }
            rows.push(row);
        }
        match labels {
            None => Self::from_rows(rows),
            Some((line, rl, cl)) => {
                let cols = rows.first().map_or(cl.len(), Vec::len);
                if rl.len() != rows.len() || cl.len() != cols {
                    return Err(MatrixError::Parse {
                        line,
                        message: format!(
                            "header names {}x{} labels but data starting at line {first_row_line} is {}x{cols}",
                            rl.len(),
                            cl.len(),
                            rows.len()
                        ),
                    });
                }
                Self::new(rl, cl, rows).map_err(|e| MatrixError::Parse { line, message: e.to_string() })
            }
        }
    }
}

impl fmt::Display for LabeledIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Multiplicity per vertex and per edge (η in the paper).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexFunction {
    /// `vertex[v - 1]` is η(v).
    pub vertex: Vec<u32>,
    /// `edge[i]` is η(e_i).
    pub edge: Vec<u32>,
}

impl IndexFunction {
    pub fn zeros(g: &Graph) -> Self {
        IndexFunction { vertex: vec![0; g.n()], edge: vec![0; g.m()] }
    }

    /// η ≡ 1 on edges and 0 on vertices: assembles to `B_G`.
    pub fn edges_once(g: &Graph) -> Self {
        IndexFunction { vertex: vec![0; g.n()], edge: vec![1; g.m()] }
    }

    /// η ≡ 1 on every vertex and edge.
    pub fn ones(g: &Graph) -> Self {
        IndexFunction { vertex: vec![1; g.n()], edge: vec![1; g.m()] }
    }

    /// From multiplicities in `A_G` column order (vertices, then edges).
    pub fn from_columns(g: &Graph, mult: &[u32]) -> Result<Self> {
        if mult.len() != g.n() + g.m() {
            return Err(MatrixError::IndexShape { what: "column", expected: g.n() + g.m(), got: mult.len() });
        }
        Ok(IndexFunction { vertex: mult[..g.n()].to_vec(), edge: mult[g.n()..].to_vec() })
    }

    /// Multiplicities in `A_G` column order.
    pub fn columns(&self) -> Vec<u32> {
        self.vertex.iter().chain(&self.edge).copied().collect()
    }

    pub fn total(&self) -> u64 {
        self.vertex.iter().chain(&self.edge).map(|&x| x as u64).sum()
    }

    pub fn matches(&self, g: &Graph) -> Result<()> {
        if self.vertex.len() != g.n() {
            return Err(MatrixError::IndexShape { what: "vertex", expected: g.n(), got: self.vertex.len() });
        }
        if self.edge.len() != g.m() {
            return Err(MatrixError::IndexShape { what: "edge", expected: g.m(), got: self.edge.len() });
        }
        Ok(())
    }

    /// Valid means the values sum to `|E(G)|`.
    pub fn valid(&self) -> bool {
        self.total() == self.edge.len() as u64
    }

    pub fn get(&self, label: &Label) -> Option<u32> {
        match label {
            Label::Vertex(v) => self.vertex.get(v.checked_sub(1)?).copied(),
            Label::Edge(e) => self.edge.get(*e).copied(),
            _ => None,
        }
    }

    /// `self <= other` pointwise.
    pub fn le(&self, other: &IndexFunction) -> bool {
        self.vertex.len() == other.vertex.len()
            && self.edge.len() == other.edge.len()
            && self.vertex.iter().zip(&other.vertex).all(|(a, b)| a <= b)
            && self.edge.iter().zip(&other.edge).all(|(a, b)| a <= b)
    }
}

fn a_entry(d: &OrientedGraph, row: usize, col: &Label) -> i64 {
    let (tail, head) = (d.tail(row), d.head(row));
    match *col {
        Label::Vertex(v) if v == head => 1,
        Label::Vertex(v) if v == tail => -1,
        Label::Edge(f) if f != row => {
            let (a, b) = d.graph().edges()[f];
            if a == head || b == head {
                1
            } else if a == tail || b == tail {
                -1
            } else {
                0
            }
        }
        _ => 0,
    }
}

fn a_columns(g: &Graph) -> Vec<Label> {
    (1..=g.n()).map(Label::Vertex).chain((0..g.m()).map(Label::Edge)).collect()
}

fn build_on(d: &OrientedGraph, cols: Vec<Label>) -> LabeledIntMatrix {
    let m = d.graph().m();
    let entries = (0..m).flat_map(|i| cols.iter().map(move |c| a_entry(d, i, c))).collect::<Vec<_>>();
    LabeledIntMatrix { row_labels: (0..m).map(Label::Edge).collect(), col_labels: cols, entries }
}

/// `A_G`: `m x (n + m)`, vertex columns ascending then edge columns in edge order.
pub fn build_a(d: &OrientedGraph) -> LabeledIntMatrix {
    build_on(d, a_columns(d.graph()))
}

/// `B_G`: the edge columns of `A_G`.
pub fn build_b(d: &OrientedGraph) -> Result<LabeledIntMatrix> {
    let m = d.graph().m();
    if m == 0 {
        return Err(GraphError::NoEdges.into());
    }
    Ok(build_on(d, (0..m).map(Label::Edge).collect()))
}

/// `A_(η)`: column `A(z)` repeated `η(z)` times, in `A`'s column order.
pub fn assemble(a: &LabeledIntMatrix, eta: &IndexFunction) -> Result<LabeledIntMatrix> {
    let mult = a
        .col_labels()
        .iter()
        .map(|l| eta.get(l.base()).ok_or_else(|| MatrixError::NotAColumn(l.to_string())))
        .collect::<Result<Vec<u32>>>()?;
    let total: u64 = mult.iter().map(|&k| k as u64).sum();
    if total != a.nrows() as u64 || !eta.valid() {
        return Err(MatrixError::InvalidIndex { total: eta.total(), expected: a.nrows() });
    }
    Ok(a.with_multiplicities(&mult))
}

/// Orientation of `G' = G + K_3` glued at `attach` used by Theorem 4.2:
/// `G'` is [`glue_clique`](crate::graph::glue_clique)`(g, attach, 3)` with
/// `v1 = attach`, `v2 = n+1`, `v3 = n+2`, and each new edge `e_ij` (`j < i`)
/// directed `v_i -> v_j`.
pub fn clique_extension_orientation(d: &OrientedGraph, attach: usize) -> Result<OrientedGraph> {
    let g2 = crate::graph::glue_clique(d.graph(), attach, 3)?;
    let n = d.graph().n();
    let mut heads = d.heads().to_vec();
    for &(a, b) in &g2.edges()[d.graph().m()..] {
        let head = if a == attach || b == attach { attach } else { a.min(b) };
        debug_assert!(head == attach || head == n + 1);
        heads.push(head);
    }
    Ok(OrientedGraph::new(g2, heads)?)
}

/// Theorem 4.2's `B''`: `B'` (an `m x m` column selection of `A_G`) extended
/// by the rows `e32, e31, e21` and the columns `A_{v2}, A_{v3}, A_{e31} - A_{e21}`
/// of `A_{G'}`, `G'` as in [`clique_extension_orientation`]. The top-right
/// block is zero and the lower-right block is Theorem 4.2's `C`.
pub fn clique_block_extend(bp: &LabeledIntMatrix, g: &Graph, attach: usize) -> Result<LabeledIntMatrix> {
    g.check_vertex(attach)?;
    let m = g.m();
    if bp.nrows() != m || bp.ncols() != m {
        return Err(MatrixError::Dimension(format!(
            "B' is {}x{}, graph has {m} edges",
            bp.nrows(),
            bp.ncols()
        )));
    }
    if let Some(bad) = bp.row_labels().iter().enumerate().find(|(i, l)| **l != Label::Edge(*i)) {
        return Err(MatrixError::Dimension(format!("B' row {} is labelled {}, expected e{}", bad.0, bad.1, bad.0)));
    }
    // Any orientation of G works for the new rows: their entries in old
    // columns only depend on the new edges' directions.
    let d = OrientedGraph::as_listed(g);
    let d2 = clique_extension_orientation(&d, attach)?;
    let (n, e21, e31, e32) = (g.n(), m, m + 1, m + 2);
    let a2 = |row: usize, col: &Label| -> Result<i64> {
        match col.base() {
            l @ (Label::Vertex(_) | Label::Edge(_)) => Ok(a_entry(&d2, row, l)),
            other => Err(MatrixError::NotAColumn(other.to_string())),
        }
    };
    let new_rows = [e32, e31, e21];
    let mut rows = bp.rows();
    for r in rows.iter_mut() {
        r.extend([0, 0, 0]);
    }
    for &r in &new_rows {
        let mut row = bp.col_labels().iter().map(|l| a2(r, l)).collect::<Result<Vec<i64>>>()?;
        row.push(a_entry(&d2, r, &Label::Vertex(n + 1)));
        row.push(a_entry(&d2, r, &Label::Vertex(n + 2)));
        row.push(a_entry(&d2, r, &Label::Edge(e31)) - a_entry(&d2, r, &Label::Edge(e21)));
        rows.push(row);
    }
    let mut row_labels = bp.row_labels().to_vec();
    row_labels.extend(new_rows.iter().map(|&e| Label::Edge(e)));
    let mut col_labels = bp.col_labels().to_vec();
    col_labels.push(Label::Vertex(n + 1));
    col_labels.push(Label::Vertex(n + 2));
    col_labels.push(Label::Named(format!("e{e31}-e{e21}")));
    LabeledIntMatrix::new(row_labels, col_labels, rows)
}

/// Theorem 4.2's matrix `C`.
pub const THEOREM_42_C: [[i64; 3]; 3] = [[1, -1, -2], [0, -1, -1], [-1, 0, 1]];

/// The matrix the Remark after Theorem 3.13 displays as `B_{B1(3,3)}`, verbatim.
pub const REMARK_B1_3_3: [[i64; 6]; 6] = [
    [0, 1, -1, 0, 0, 0],
    [-1, 0, 1, 1, 1, 0],
    [1, -1, 0, -1, -1, 0],
    [0, -1, -1, 0, -1, 1],
    [0, 1, 1, 1, 0, -1],
    [0, 0, 0, -1, 1, 0],
];

/// The column selection `B` displayed next to it in the same Remark, verbatim.
pub const REMARK_B1_3_3_SELECTION: [[i64; 6]; 6] = [
    [0, 0, 1, 1, 0, 0],
    [-1, -1, 0, 0, 1, 1],
    [1, 1, -1, -1, -1, -1],
    [0, 0, -1, -1, 0, 0],
    [0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, -1, -1],
];

/// Names accepted by [`fixture`].
pub const FIXTURES: &[&str] = &["b1-3-3-remark", "b1-3-3-remark-selection", "theorem-4-2-c"];

/// Built-in matrices from the paper.
pub fn fixture(name: &str) -> Option<LabeledIntMatrix> {
    let rows: Vec<Vec<i64>> = match name {
        "b1-3-3-remark" => REMARK_B1_3_3.iter().map(|r| r.to_vec()).collect(),
        "b1-3-3-remark-selection" => REMARK_B1_3_3_SELECTION.iter().map(|r| r.to_vec()).collect(),
        "theorem-4-2-c" => THEOREM_42_C.iter().map(|r| r.to_vec()).collect(),
        _ => return None,
    };
    Some(LabeledIntMatrix::from_rows(rows).expect("fixtures are rectangular"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, glue_clique, Family};

    fn p3() -> OrientedGraph {
        OrientedGraph::as_listed(&build_graph(3, &[(1, 2), (2, 3)]).unwrap())
    }

    #[test]
    fn a_of_k2() {
        let d = OrientedGraph::as_listed(&build_graph(2, &[(1, 2)]).unwrap());
        let a = build_a(&d);
        assert_eq!(a.rows(), vec![vec![-1, 1, 0]]);
        assert_eq!(a.col_labels(), &[Label::Vertex(1), Label::Vertex(2), Label::Edge(0)]);
        assert_eq!(build_b(&d).unwrap().rows(), vec![vec![0]]);
    }

    #[test]
    fn a_and_b_of_p3() {
        let a = build_a(&p3());
        assert_eq!(a.get(0, 4), 1, "row e0 has +1 in column e1");
        assert_eq!(build_b(&p3()).unwrap().rows(), vec![vec![0, 1], vec![-1, 0]]);
    }

    #[test]
    fn isolated_vertex_column_is_zero() {
        let d = OrientedGraph::as_listed(&build_graph(3, &[(1, 2)]).unwrap());
        let a = build_a(&d);
        assert!(a.is_zero_column(2));
        assert!(build_b(&OrientedGraph::as_listed(&Graph::empty(2))).is_err());
    }

    #[test]
    fn assemble_examples() {
        let d = p3();
        let a = build_a(&d);
        let b = assemble(&a, &IndexFunction::edges_once(d.graph())).unwrap();
        assert_eq!(b.rows(), build_b(&d).unwrap().rows());
        let mut eta = IndexFunction::zeros(d.graph());
        eta.vertex[1] = 2;
        let m = assemble(&a, &eta).unwrap();
        assert_eq!(m.column(0), a.column(1));
        assert_eq!(m.column(1), a.column(1));
        eta.vertex[1] = 1;
        assert!(matches!(assemble(&a, &eta), Err(MatrixError::InvalidIndex { .. })));
    }

    #[test]
    fn c_block() {
        let g = build_graph(2, &[(1, 2)]).unwrap();
        let bp = LabeledIntMatrix::new(vec![Label::Edge(0)], vec![Label::Vertex(2)], vec![vec![1]]).unwrap();
        let bpp = clique_block_extend(&bp, &g, 1).unwrap();
        assert_eq!(bpp.nrows(), 4);
        for i in 0..3 {
            assert_eq!(&bpp.row(i + 1)[1..], &THEOREM_42_C[i]);
        }
        assert_eq!(&bpp.row(0)[1..], &[0, 0, 0]);
    }

    #[test]
    fn extension_matches_a_of_glued_graph() {
        let g = Family::Cycle(4).build().unwrap();
        let d = OrientedGraph::as_listed(&g);
        let a = build_a(&d);
        let bp = a.select_columns(&[0, 0, 5, 6]);
        let bpp = clique_block_extend(&bp, &g, 2).unwrap();
        let d2 = clique_extension_orientation(&d, 2).unwrap();
        assert_eq!(d2.graph(), &glue_clique(&g, 2, 3).unwrap());
        let a2 = build_a(&d2);
        // first m + 2 columns are genuine columns of A_{G'} (rows reordered)
        for (j, l) in bpp.col_labels().iter().take(6).enumerate() {
            let jj = a2.col_index(l.base()).unwrap();
            for (i, r) in bpp.row_labels().iter().enumerate() {
                let Label::Edge(r) = r else { unreachable!() };
                assert_eq!(bpp.get(i, j), a2.get(*r, jj));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let a = build_a(&p3());
        let back = LabeledIntMatrix::parse_text(&a.to_text()).unwrap();
        assert_eq!(back, a);
        let sel = a.select_columns(&[1, 1, 3]);
        assert_eq!(LabeledIntMatrix::parse_text(&sel.to_text()).unwrap(), sel);
        let bare = LabeledIntMatrix::parse_text("1 2\n3 4\n").unwrap();
        assert_eq!(bare.rows(), vec![vec![1, 2], vec![3, 4]]);
        let err = LabeledIntMatrix::parse_text("1 2\n3 x\n").unwrap_err();
        assert!(matches!(err, MatrixError::Parse { line: 2, .. }));
        assert!(LabeledIntMatrix::parse_text("1 2\n3\n").is_err());
    }

    #[test]
    fn flipping_an_edge_negates_its_row() {
        let g = Family::B1(3, 3).build().unwrap();
        let d = OrientedGraph::as_listed(&g);
        let mut d2 = d.clone();
        d2.flip(2);
        let (a, mut a2) = (build_a(&d), build_a(&d2));
        a2.negate_row(2);
        assert_eq!(a, a2);
    }

    #[test]
    fn fixtures_exist() {
        for name in FIXTURES {
            assert!(fixture(name).unwrap().is_square());
        }
        assert!(fixture("nope").is_none());
    }
}
