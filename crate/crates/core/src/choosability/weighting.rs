//! Concrete-list total weightings: list assignments, the exhaustive proper
//! weighting search, the Theorem 4.3 clique extension and the list file format.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::caps::SizeCaps;
use crate::graph::Graph;
use crate::{Error, Result};

/// Exact rationals as `"p/q"` (or `"p"`) strings.
pub mod rational_serde {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|r| r.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| super::parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }

    pub mod nested {
        use num_rational::BigRational;
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(v: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(|l| l.iter().map(|r| r.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigRational>>, D::Error> {
            Vec::<Vec<String>>::deserialize(d)?
                .iter()
                .map(|l| {
                    l.iter().map(|s| super::super::parse_rational(s).map_err(serde::de::Error::custom)).collect()
                })
                .collect()
        }
    }
}

/// Parses an exact rational: an integer, a decimal (`-1.25`) or `p/q`.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("expected an integer, decimal or p/q rational, got `{s}`");
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part = if int.is_empty() || int == "-" || int == "+" { BigInt::zero() } else {
            BigInt::from_str(int).map_err(|_| bad())?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = BigInt::from_str(frac).map_err(|_| bad())?;
        let mag = int_part.abs() * &scale + frac_part;
        return Ok(BigRational::new(if negative { -mag } else { mag }, scale));
    }
    BigInt::from_str(s).map(BigRational::from_integer).map_err(|_| bad())
}

/// `L`: a list of distinct exact rationals per vertex (size `k`) and per edge (size `k'`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalListAssignment {
    #[serde(with = "rational_serde::nested")]
    vertex: Vec<Vec<BigRational>>,
    #[serde(with = "rational_serde::nested")]
    edge: Vec<Vec<BigRational>>,
}

impl TotalListAssignment {
    /// Validates shape against `g`, uniform sizes per role and distinctness.
    pub fn new(g: &Graph, vertex: Vec<Vec<BigRational>>, edge: Vec<Vec<BigRational>>) -> Result<Self> {
        if vertex.len() != g.n() || edge.len() != g.m() {
            return Err(Error::Argument(format!(
                "list assignment covers {} vertices and {} edges; graph has {} and {}",
                vertex.len(),
                edge.len(),
                g.n(),
                g.m()
            )));
        }
        let check_role = |lists: &[Vec<BigRational>], role: &str, label: &dyn Fn(usize) -> String| -> Result<()> {
            let Some(first) = lists.first() else { return Ok(()) };
            for (i, l) in lists.iter().enumerate() {
                if l.is_empty() {
                    return Err(Error::Argument(format!("{role} list of {} is empty", label(i))));
                }
                if l.len() != first.len() {
                    return Err(Error::Argument(format!(
                        "{role} lists must all have size {}; {} has {}",
                        first.len(),
                        label(i),
                        l.len()
                    )));
                }
                if l.iter().collect::<BTreeSet<_>>().len() != l.len() {
                    return Err(Error::Argument(format!("{role} list of {} repeats a value", label(i))));
                }
            }
            Ok(())
        };
        check_role(&vertex, "vertex", &|i| format!("v{}", i + 1))?;
        check_role(&edge, "edge", &|i| {
            let (u, v) = g.edges()[i];
            format!("edge {u}-{v}")
        })?;
        Ok(TotalListAssignment { vertex, edge })
    }

    /// Integer lists, for tests and examples.
    pub fn from_integers(g: &Graph, vertex: &[Vec<i64>], edge: &[Vec<i64>]) -> Result<Self> {
        let conv = |ls: &[Vec<i64>]| -> Vec<Vec<BigRational>> {
            ls.iter().map(|l| l.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
        };
        Self::new(g, conv(vertex), conv(edge))
    }

    /// The same integer lists on every vertex and every edge.
    pub fn uniform(g: &Graph, vertex: &[i64], edge: &[i64]) -> Result<Self> {
        Self::from_integers(g, &vec![vertex.to_vec(); g.n()], &vec![edge.to_vec(); g.m()])
    }

    /// Seeded random `(k, k')` lists of distinct integers from `[−10, 10]`.
    pub fn random<R: Rng + ?Sized>(g: &Graph, k: usize, k_prime: usize, rng: &mut R) -> Result<Self> {
        if k == 0 || k_prime == 0 || k > 21 || k_prime > 21 {
            return Err(Error::Argument(format!("list sizes must be in 1..=21, got ({k}, {k_prime})")));
        }
        let mut draw = |size: usize| -> Vec<BigRational> {
            sample(rng, 21, size).into_iter().map(|i| BigRational::from_integer(BigInt::from(i as i64 - 10))).collect()
        };
        let vertex = (0..g.n()).map(|_| draw(k)).collect();
        let edge = (0..g.m()).map(|_| draw(k_prime)).collect();
        Self::new(g, vertex, edge)
    }

    /// `k`, or 0 for a graph without vertices.
    pub fn k(&self) -> usize {
        self.vertex.first().map_or(0, Vec::len)
    }

    /// `k'`, or 0 for a graph without edges.
    pub fn k_prime(&self) -> usize {
        self.edge.first().map_or(0, Vec::len)
    }

    pub fn vertex_list(&self, v: usize) -> &[BigRational] {
        &self.vertex[v - 1]
    }

    pub fn edge_list(&self, e: usize) -> &[BigRational] {
        &self.edge[e]
    }

    /// `Π |L(z)|` over all vertices and edges, saturating.
    pub fn product_size(&self) -> u128 {
        self.vertex.iter().chain(&self.edge).fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128))
    }

    /// Parses the list file format: `V <id> w...` and `E <u> <v> w...` lines,
    /// `#` comments; every vertex and edge of `g` must appear exactly once.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut vertex: Vec<Option<Vec<BigRational>>> = vec![None; g.n()];
        let mut edge: Vec<Option<Vec<BigRational>>> = vec![None; g.m()];
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| Error::Argument(format!("line {}: {msg}", no + 1));
            let toks: Vec<&str> = line.split_whitespace().collect();
            let int = |s: &str| s.parse::<usize>().map_err(|_| at(format!("expected a vertex id, got `{s}`")));
            let weights = |ws: &[&str]| -> Result<Vec<BigRational>> {
                if ws.is_empty() {
                    return Err(at("expected at least one weight".into()));
                }
                ws.iter().map(|w| parse_rational(w).map_err(&at)).collect()
            };
            match toks[0] {
                "V" | "v" => {
                    let v = int(toks.get(1).ok_or_else(|| at("expected `V <id> w...`".into()))?)?;
                    if v == 0 || v > g.n() {
                        return Err(at(format!("vertex {v} out of range 1..={}", g.n())));
                    }
                    if vertex[v - 1].replace(weights(&toks[2..])?).is_some() {
                        return Err(at(format!("vertex {v} listed twice")));
                    }
                }
                "E" | "e" => {
                    if toks.len() < 3 {
                        return Err(at("expected `E <u> <v> w...`".into()));
                    }
                    let (u, v) = (int(toks[1])?, int(toks[2])?);
                    let e = g.edge_index(u, v).ok_or_else(|| at(format!("{u}-{v} is not an edge of the graph")))?;
                    if edge[e].replace(weights(&toks[3..])?).is_some() {
                        return Err(at(format!("edge {u}-{v} listed twice")));
                    }
                }
                other => return Err(at(format!("expected a `V` or `E` line, got `{other}`"))),
            }
        }
        let vertex = vertex
            .into_iter()
            .enumerate()
            .map(|(i, l)| l.ok_or_else(|| Error::Argument(format!("no list for vertex {}", i + 1))))
            .collect::<Result<_>>()?;
        let edge = edge
            .into_iter()
            .enumerate()
            .map(|(i, l)| {
                let (u, v) = g.edges()[i];
                l.ok_or_else(|| Error::Argument(format!("no list for edge {u}-{v}")))
            })
            .collect::<Result<_>>()?;
        Self::new(g, vertex, edge)
    }

    /// The list file text that [`parse`](Self::parse) reads back.
    pub fn to_text(&self, g: &Graph) -> String {
        let join = |l: &[BigRational]| l.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        for (i, l) in self.vertex.iter().enumerate() {
            out.push_str(&format!("V {} {}\n", i + 1, join(l)));
        }
        for (e, l) in self.edge.iter().enumerate() {
            let (u, v) = g.edges()[e];
            out.push_str(&format!("E {u} {v} {}\n", join(l)));
        }
        out
    }
}

/// `f`: one exact rational per vertex and per edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalWeighting {
    #[serde(with = "rational_serde")]
    pub vertex: Vec<BigRational>,
    #[serde(with = "rational_serde")]
    pub edge: Vec<BigRational>,
}

impl TotalWeighting {
    /// `s(v) = f(v) + Σ_{e ∋ v} f(e)`, indexed by `v − 1`.
    pub fn sums(&self, g: &Graph) -> Vec<BigRational> {
        let mut s = self.vertex.clone();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            s[u - 1] += &self.edge[e];
            s[v - 1] += &self.edge[e];
        }
        s
    }

    /// Edges `uv` with `s(u) = s(v)`.
    pub fn conflicts(&self, g: &Graph) -> Vec<usize> {
        let s = self.sums(g);
        g.edges().iter().enumerate().filter(|(_, &(u, v))| s[u - 1] == s[v - 1]).map(|(e, _)| e).collect()
    }

    /// Whether adjacent vertices get distinct sums.
    pub fn proper(&self, g: &Graph) -> bool {
        self.vertex.len() == g.n() && self.edge.len() == g.m() && self.conflicts(g).is_empty()
    }

    /// Whether every weight is taken from its list.
    pub fn conforms(&self, l: &TotalListAssignment) -> bool {
        self.vertex.len() == l.vertex.len()
            && self.edge.len() == l.edge.len()
            && self.vertex.iter().zip(&l.vertex).all(|(w, list)| list.contains(w))
            && self.edge.iter().zip(&l.edge).all(|(w, list)| list.contains(w))
    }
}

/// Counting probe of one search: when no weighting exists,
/// `leaves + pruned_leaves == product_size`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub product_size: u128,
    /// Partial assignments visited.
    pub nodes: u64,
    /// Complete assignments reached.
    pub leaves: u128,
    /// Complete assignments skipped inside pruned subtrees.
    pub pruned_leaves: u128,
}

impl SearchStats {
    pub fn exhausted(&self) -> bool {
        self.leaves + self.pruned_leaves == self.product_size
    }
}

/// A proper `L`-total weighting of `g`, or `None` when none exists for this `L`.
pub fn find_proper_weighting(g: &Graph, l: &TotalListAssignment) -> Result<Option<TotalWeighting>> {
    find_proper_weighting_with_stats(g, l).map(|(w, _)| w)
}

/// [`find_proper_weighting`] plus the counting probe.
///
/// Edge weights are fixed outermost, vertex weights innermost (singleton vertex
/// lists are fixed up front). A vertex's sum is final once its last incident
/// edge and its own weight are set; the branch is pruned as soon as two
/// adjacent final sums collide. Weights are scaled to a common denominator and
/// compared as `i128`.
pub fn find_proper_weighting_with_stats(
    g: &Graph,
    l: &TotalListAssignment,
) -> Result<(Option<TotalWeighting>, SearchStats)> {
    if l.vertex.len() != g.n() || l.edge.len() != g.m() {
        return Err(Error::Argument("list assignment does not match the graph".into()));
    }
    let product = l.product_size();
    let cap = SizeCaps::global().weighting_product as u128;
    if product > cap {
        return Err(Error::SizeCap { what: "weighting search product", size: product, cap });
    }
    let scaled = Scaled::new(g, l)?;
    let mut search = WeightSearch::new(g, &scaled);
    search.stats.product_size = product;
    let found = search.run();
    debug_assert!(found.is_some() || search.stats.exhausted());
    let w = found.map(|choice| scaled.weighting(l, &choice));
    if let Some(w) = &w {
        debug_assert!(w.proper(g) && w.conforms(l));
    }
    Ok((w, search.stats))
}

/// Lists as `i128` numerators over one common denominator.
struct Scaled {
    vertex: Vec<Vec<i128>>,
    edge: Vec<Vec<i128>>,
}

impl Scaled {
    fn new(g: &Graph, l: &TotalListAssignment) -> Result<Scaled> {
        let all = l.vertex.iter().chain(&l.edge).flatten();
        let denom = all.clone().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let max_deg = g.degrees().into_iter().max().unwrap_or(0) as i128;
        let limit = i128::MAX / (max_deg + 1);
        let conv = |r: &BigRational| -> Result<i128> {
            (r.numer() * (&denom / r.denom()))
                .to_i128()
                .filter(|x| x.abs() <= limit)
                .ok_or_else(|| Error::Unsupported("weights too large for the scaled i128 search".into()))
        };
        let conv_all = |ls: &[Vec<BigRational>]| -> Result<Vec<Vec<i128>>> {
            ls.iter().map(|list| list.iter().map(conv).collect()).collect()
        };
        Ok(Scaled { vertex: conv_all(&l.vertex)?, edge: conv_all(&l.edge)? })
    }

    /// Maps per-element choice indices back to the original rationals.
    fn weighting(&self, l: &TotalListAssignment, choice: &Choice) -> TotalWeighting {
        TotalWeighting {
            vertex: choice.vertex.iter().enumerate().map(|(i, &c)| l.vertex[i][c].clone()).collect(),
            edge: choice.edge.iter().enumerate().map(|(e, &c)| l.edge[e][c].clone()).collect(),
        }
    }
}

struct Choice {
    vertex: Vec<usize>,
    edge: Vec<usize>,
}

#[derive(Clone, Copy)]
enum Element {
    Edge(usize),
    Vertex(usize),
}

struct WeightSearch<'a> {
    lists: &'a Scaled,
    edges: &'a [(usize, usize)],
    adj: Vec<Vec<usize>>,
    order: Vec<Element>,
    /// Vertices (0-based) whose sum becomes final at each step.
    finals: Vec<Vec<usize>>,
    /// Step at which each vertex's sum is final (`None`: before any step).
    final_at: Vec<Option<usize>>,
    /// Leaves below one node at each depth: `Π` sizes of later steps.
    below: Vec<u128>,
    sums: Vec<i128>,
    choice: Choice,
    stats: SearchStats,
}

impl<'a> WeightSearch<'a> {
    fn new(g: &'a Graph, lists: &'a Scaled) -> Self {
        let n = g.n();
        let mut order: Vec<Element> = (0..g.m()).map(Element::Edge).collect();
        let mut sums = vec![0i128; n];
        let mut choice = Choice { vertex: vec![0; n], edge: vec![0; g.m()] };
        let mut own_step = vec![None; n];
        for v in 0..n {
            if lists.vertex[v].len() == 1 {
                sums[v] = lists.vertex[v][0];
                choice.vertex[v] = 0;
            } else {
                own_step[v] = Some(order.len());
                order.push(Element::Vertex(v));
            }
        }
        let mut final_at = own_step;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            for x in [u - 1, v - 1] {
                final_at[x] = final_at[x].max(Some(e));
            }
        }
        let mut finals = vec![Vec::new(); order.len()];
        for (v, step) in final_at.iter().enumerate() {
            if let Some(s) = step {
                finals[*s].push(v);
            }
        }
        let sizes: Vec<u128> = order
            .iter()
            .map(|el| match *el {
                Element::Edge(e) => lists.edge[e].len() as u128,
                Element::Vertex(v) => lists.vertex[v].len() as u128,
            })
            .collect();
        let mut below = vec![1u128; order.len() + 1];
        for i in (0..order.len()).rev() {
            below[i] = below[i + 1].saturating_mul(sizes[i]);
        }
        let adj = g.adjacency().into_iter().map(|ns| ns.into_iter().map(|w| w - 1).collect()).collect();
        WeightSearch {
            lists,
            edges: g.edges(),
            adj,
            order,
            finals,
            final_at,
            below,
            sums,
            choice,
            stats: SearchStats::default(),
        }
    }

    fn run(&mut self) -> Option<Choice> {
        if self.dfs(0) {
            Some(std::mem::replace(&mut self.choice, Choice { vertex: Vec::new(), edge: Vec::new() }))
        } else {
            None
        }
    }

    fn collides(&self, step: usize) -> bool {
        self.finals[step].iter().any(|&v| {
            self.adj[v].iter().any(|&w| self.final_at[w].is_none_or(|s| s <= step) && self.sums[w] == self.sums[v])
        })
    }

    fn dfs(&mut self, step: usize) -> bool {
        self.stats.nodes += 1;
        if step == self.order.len() {
            self.stats.leaves += 1;
            return true;
        }
        match self.order[step] {
            Element::Edge(e) => {
                let (u, v) = (self.edges[e].0 - 1, self.edges[e].1 - 1);
                for (i, &x) in self.lists.edge[e].iter().enumerate() {
                    self.sums[u] += x;
                    self.sums[v] += x;
                    self.choice.edge[e] = i;
                    let ok = if self.collides(step) {
                        self.stats.pruned_leaves += self.below[step + 1];
                        false
                    } else {
                        self.dfs(step + 1)
                    };
                    if ok {
                        return true;
                    }
                    self.sums[u] -= x;
                    self.sums[v] -= x;
                }
            }
            Element::Vertex(v) => {
                for (i, &x) in self.lists.vertex[v].iter().enumerate() {
                    self.sums[v] += x;
                    self.choice.vertex[v] = i;
                    let ok = if self.collides(step) {
                        self.stats.pruned_leaves += self.below[step + 1];
                        false
                    } else {
                        self.dfs(step + 1)
                    };
                    if ok {
                        return true;
                    }
                    self.sums[v] -= x;
                }
            }
        }
        false
    }
}

/// How [`extend_weighting_clique`] produced its result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionRoute {
    /// Theorem 4.3's construction: shifted clique-vertex weights, choice at `v_k`.
    Proof,
    /// Search over all list choices of the clique's elements, rest of `w` kept.
    LocalSearch,
    /// [`find_proper_weighting`] on the whole extended graph.
    GlobalFallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub weighting: Option<TotalWeighting>,
    pub route: ExtensionRoute,
}

/// The clique of `G''` (attach vertex first) and the extended graph `G'`.
fn clique_shape(gpp: &Graph, attach: usize, k: usize) -> Result<(Vec<usize>, Graph)> {
    gpp.check_vertex(attach)?;
    if k < 2 {
        return Err(Error::Argument(format!("clique order k must be at least 2, got {k}")));
    }
    if gpp.n() < attach.max(k - 1) || (k > 2 && gpp.n() + 3 < attach + k) {
        return Err(Error::Argument("G'' is too small to carry the glued clique".into()));
    }
    let clique: Vec<usize> = std::iter::once(attach).chain(gpp.n() + 3 - k..=gpp.n()).collect();
    let distinct: BTreeSet<_> = clique.iter().collect();
    let is_clique = distinct.len() == clique.len()
        && clique.iter().enumerate().all(|(i, &a)| clique[i + 1..].iter().all(|&b| gpp.has_edge(a, b)));
    if !is_clique {
        return Err(Error::Argument(format!(
            "G'' does not end in a K_{} glued at v{attach} (expected clique {:?})",
            k - 1,
            clique
        )));
    }
    let mut gp = gpp.clone();
    gp.push_vertex(&clique);
    Ok((clique, gp))
}

/// The extended graph `G'`: `G''` plus `v_k` joined to the clique at `attach`.
pub fn clique_extension_graph(gpp: &Graph, attach: usize, k: usize) -> Result<Graph> {
    clique_shape(gpp, attach, k).map(|(_, gp)| gp)
}

/// Lists for `G''` that make Theorem 4.3's construction apply: `L` restricted
/// to `G''`, with each clique vertex's list shifted up by the weight chosen
/// (index `edge_choice[i]`) on its new edge `v_i v_k`.
pub fn proof_lists(
    gpp: &Graph,
    attach: usize,
    k: usize,
    l: &TotalListAssignment,
    edge_choice: &[usize],
) -> Result<TotalListAssignment> {
    let (clique, gp) = clique_shape(gpp, attach, k)?;
    check_lists(&gp, l)?;
    if edge_choice.len() != clique.len() || edge_choice.iter().any(|&c| c >= l.k_prime()) {
        return Err(Error::Argument("one in-range choice per new edge required".into()));
    }
    let mut vertex = l.vertex[..gpp.n()].to_vec();
    for (i, &vi) in clique.iter().enumerate() {
        let w = &l.edge[gpp.m() + i][edge_choice[i]];
        vertex[vi - 1] = vertex[vi - 1].iter().map(|x| x + w).collect();
    }
    TotalListAssignment::new(gpp, vertex, l.edge[..gpp.m()].to_vec())
}

fn check_lists(gp: &Graph, l: &TotalListAssignment) -> Result<()> {
    if l.vertex.len() != gp.n() || l.edge.len() != gp.m() {
        return Err(Error::Argument(format!(
            "lists cover {} vertices and {} edges; the extended graph has {} and {}",
            l.vertex.len(),
            l.edge.len(),
            gp.n(),
            gp.m()
        )));
    }
    Ok(())
}

/// Theorem 4.3: extends a proper weighting `w` of `G''` (`G` with `K_{k−1}`
/// glued at `attach`, clique vertices `attach, n''−k+3, …, n''`) to
/// `G' = G''` plus `v_k` joined to that clique, with weights from `L` (given
/// for `G'`).
///
/// The proof's construction is tried first: pick `w_i ∈ L(v_i v_k)`, set
/// `f(v_i) = w(v_i) − w_i` when that lies in `L(v_i)` (keeping `s(v_i)`), then
/// choose `f(v_k)` avoiding every `s(v_i)`. Otherwise all list choices on the
/// clique's vertices and new edges are searched with the rest of `w` kept, and
/// finally the whole graph is searched (logged).
pub fn extend_weighting_clique(
    gpp: &Graph,
    w: &TotalWeighting,
    attach: usize,
    k: usize,
    l: &TotalListAssignment,
) -> Result<Extension> {
    let (clique, gp) = clique_shape(gpp, attach, k)?;
    check_lists(&gp, l)?;
    if !w.proper(gpp) {
        return Err(Error::Argument("w is not a proper weighting of G''".into()));
    }
    let vk = gp.n();
    let new_edges: Vec<usize> = (gpp.m()..gp.m()).collect();
    let base = TotalWeighting {
        vertex: w.vertex.iter().cloned().chain([BigRational::zero()]).collect(),
        edge: w.edge.iter().cloned().chain(new_edges.iter().map(|&e| l.edge[e][0].clone())).collect(),
    };

    // The proof's construction.
    let old_sums = w.sums(gpp);
    let radix: Vec<usize> = new_edges.iter().map(|&e| l.edge[e].len()).collect();
    for pick in mixed_radix(&radix) {
        let mut f = base.clone();
        let mut shifted = true;
        for (i, &vi) in clique.iter().enumerate() {
            let wi = &l.edge[new_edges[i]][pick[i]];
            let fv = &w.vertex[vi - 1] - wi;
            if !l.vertex[vi - 1].contains(&fv) {
                shifted = false;
                break;
            }
            f.vertex[vi - 1] = fv;
            f.edge[new_edges[i]] = wi.clone();
        }
        if !shifted {
            continue;
        }
        let into_vk: BigRational = new_edges.iter().map(|&e| &f.edge[e]).sum();
        let taken: BTreeSet<&BigRational> = clique.iter().map(|&v| &old_sums[v - 1]).collect();
        if let Some(x) = l.vertex[vk - 1].iter().find(|x| !taken.contains(&(*x + &into_vk))) {
            f.vertex[vk - 1] = x.clone();
            debug_assert!(f.proper(&gp));
            return Ok(Extension { weighting: Some(f), route: ExtensionRoute::Proof });
        }
    }

    // Local search over the clique's lists.
    let mut local_radix: Vec<usize> = clique.iter().chain([&vk]).map(|&v| l.vertex[v - 1].len()).collect();
    local_radix.extend(&radix);
    let local_size = local_radix.iter().fold(1u128, |a, &r| a.saturating_mul(r as u128));
    let cap = SizeCaps::global().weighting_product as u128;
    if local_size <= cap {
        let verts: Vec<usize> = clique.iter().copied().chain([vk]).collect();
        for pick in mixed_radix(&local_radix) {
            let mut f = base.clone();
            for (i, &v) in verts.iter().enumerate() {
                f.vertex[v - 1] = l.vertex[v - 1][pick[i]].clone();
            }
            for (i, &e) in new_edges.iter().enumerate() {
                f.edge[e] = l.edge[e][pick[verts.len() + i]].clone();
            }
            if f.proper(&gp) {
                return Ok(Extension { weighting: Some(f), route: ExtensionRoute::LocalSearch });
            }
        }
    }

    log::info!("clique extension at v{attach} (k = {k}) found no local weighting; searching the whole graph");
    Ok(Extension { weighting: find_proper_weighting(&gp, l)?, route: ExtensionRoute::GlobalFallback })
}

/// All vectors `x` with `0 <= x[i] < radix[i]`, first coordinate fastest.
fn mixed_radix(radix: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let mut next = (!radix.contains(&0)).then(|| vec![0usize; radix.len()]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        for i in 0..radix.len() {
            succ[i] += 1;
            if succ[i] < radix[i] {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, family, glue_clique};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(q("3"), BigRational::from_integer(3.into()));
        assert_eq!(q("-1.25"), BigRational::new((-5).into(), 4.into()));
        assert_eq!(q(".5"), BigRational::new(1.into(), 2.into()));
        assert_eq!(q("-0.5"), BigRational::new((-1).into(), 2.into()));
        assert_eq!(q("6/4"), BigRational::new(3.into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn validation() {
        let k2 = family("path:2").unwrap();
        assert!(TotalListAssignment::from_integers(&k2, &[vec![0, 0], vec![1, 2]], &[vec![1, 2]]).is_err());
        assert!(TotalListAssignment::from_integers(&k2, &[vec![0], vec![1, 2]], &[vec![1]]).is_err());
        assert!(TotalListAssignment::from_integers(&k2, &[vec![0]], &[vec![1]]).is_err());
        let l = TotalListAssignment::from_integers(&k2, &[vec![0, 1], vec![1, 2]], &[vec![1, 2, 3]]).unwrap();
        assert_eq!((l.k(), l.k_prime(), l.product_size()), (2, 3, 12));
    }

    #[test]
    fn spec_examples() {
        let k2 = family("path:2").unwrap();
        let l = TotalListAssignment::from_integers(&k2, &[vec![0], vec![1]], &[vec![1, 2, 3]]).unwrap();
        let w = find_proper_weighting(&k2, &l).unwrap().unwrap();
        assert_eq!(w.sums(&k2), vec![q("1"), q("2")]);

        let l = TotalListAssignment::from_integers(&k2, &[vec![0], vec![0]], &[vec![5]]).unwrap();
        let (w, stats) = find_proper_weighting_with_stats(&k2, &l).unwrap();
        assert!(w.is_none());
        assert!(stats.exhausted());

        let c3 = family("cycle:3").unwrap();
        let l = TotalListAssignment::uniform(&c3, &[0, 1], &[0, 1]).unwrap();
        let w = find_proper_weighting(&c3, &l).unwrap().unwrap();
        assert!(w.proper(&c3) && w.conforms(&l));
    }

    #[test]
    fn counting_probe_on_infeasible_lists() {
        // K3 with singleton vertex lists and one shared edge weight: every sum equal.
        let k3 = family("complete:3").unwrap();
        let l = TotalListAssignment::uniform(&k3, &[0], &[7]).unwrap();
        let (w, s) = find_proper_weighting_with_stats(&k3, &l).unwrap();
        assert!(w.is_none() && s.exhausted());
        // K4 with (1,1)-lists all equal has no proper weighting either.
        let k4 = family("complete:4").unwrap();
        let l = TotalListAssignment::uniform(&k4, &[0, 1], &[2]).unwrap();
        let (w, s) = find_proper_weighting_with_stats(&k4, &l).unwrap();
        assert!(w.is_none());
        assert_eq!(s.product_size, 16);
        assert!(s.exhausted());
    }

    #[test]
    fn brute_force_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in ["cycle:4", "complete:4", "b1:3,3", "star:4"] {
            let g = family(spec).unwrap();
            for _ in 0..20 {
                let l = TotalListAssignment::random(&g, 1, 2, &mut rng).unwrap();
                let found = find_proper_weighting(&g, &l).unwrap();
                let brute = mixed_radix(&vec![2; g.m()]).any(|pick| {
                    let w = TotalWeighting {
                        vertex: (1..=g.n()).map(|v| l.vertex_list(v)[0].clone()).collect(),
                        edge: pick.iter().enumerate().map(|(e, &c)| l.edge_list(e)[c].clone()).collect(),
                    };
                    w.proper(&g)
                });
                assert_eq!(found.is_some(), brute, "{spec}");
            }
        }
    }

    #[test]
    fn list_file_round_trip() {
        let g = family("path:3").unwrap();
        let text = "# lists\nV 1 0 1/2\nV 2 1 2\nV 3 -0.25 3\nE 2 1 1 2\nE 2 3 4 5\n";
        let l = TotalListAssignment::parse(&g, text).unwrap();
        assert_eq!(l.vertex_list(3)[0], q("-1/4"));
        assert_eq!(TotalListAssignment::parse(&g, &l.to_text(&g)).unwrap(), l);
        let err = TotalListAssignment::parse(&g, "V 1 0 1\nX 2\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        assert!(TotalListAssignment::parse(&g, "V 1 0 1\n").is_err());
        assert!(TotalListAssignment::parse(&g, "E 1 3 0 1\n").is_err());
    }

    #[test]
    fn serde_round_trip() {
        let g = family("path:2").unwrap();
        let l = TotalListAssignment::from_integers(&g, &[vec![0, 1], vec![2, 3]], &[vec![4, 5]]).unwrap();
        let back: TotalListAssignment = serde_json::from_str(&serde_json::to_string(&l).unwrap()).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn extension_k2_on_k2() {
        let k2 = family("path:2").unwrap();
        let gp = clique_extension_graph(&k2, 2, 2).unwrap();
        assert_eq!(gp, glue_clique(&k2, 2, 2).unwrap());
        let l = TotalListAssignment::from_integers(&gp, &[vec![0, 1], vec![0, 1], vec![0, 1]], &[vec![1, 2], vec![1, 2]])
            .unwrap();
        let lpp = proof_lists(&k2, 2, 2, &l, &[0]).unwrap();
        let w = find_proper_weighting(&k2, &lpp).unwrap().unwrap();
        let ext = extend_weighting_clique(&k2, &w, 2, 2, &l).unwrap();
        assert_eq!(ext.route, ExtensionRoute::Proof);
        let f = ext.weighting.unwrap();
        assert!(f.proper(&gp) && f.conforms(&l));
    }

    #[test]
    fn extension_k3_on_p3() {
        let p3 = family("path:3").unwrap();
        let gpp = glue_clique(&p3, 2, 2).unwrap();
        let gp = clique_extension_graph(&gpp, 2, 3).unwrap();
        assert_eq!(gp, glue_clique(&p3, 2, 3).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut by_proof = 0;
        for _ in 0..20 {
            let l = TotalListAssignment::random(&gp, 2, 2, &mut rng).unwrap();
            let lpp = proof_lists(&gpp, 2, 3, &l, &[1, 0]).unwrap();
            let w = find_proper_weighting(&gpp, &lpp).unwrap().unwrap();
            let ext = extend_weighting_clique(&gpp, &w, 2, 3, &l).unwrap();
            by_proof += (ext.route == ExtensionRoute::Proof) as usize;
            let f = ext.weighting.unwrap();
            assert!(f.proper(&gp) && f.conforms(&l));
            // An unrelated weighting of G'' still extends, through the local search.
            let w2 = find_proper_weighting(&gpp, &TotalListAssignment::random(&gpp, 2, 2, &mut rng).unwrap())
                .unwrap()
                .unwrap();
            let ext = extend_weighting_clique(&gpp, &w2, 2, 3, &l).unwrap();
            let f = ext.weighting.unwrap();
            assert!(f.proper(&gp));
        }
        assert!(by_proof > 10, "proof construction used {by_proof}/20 times");
    }

    #[test]
    fn extension_rejects_wrong_shape() {
        let p4 = family("path:4").unwrap();
        let w = TotalWeighting { vertex: vec![q("0"); 4], edge: vec![q("1"), q("2"), q("4")] };
        let l = TotalListAssignment::random(&build_graph(5, &[(1, 2), (2, 3), (3, 4), (2, 5), (4, 5), (3, 5)]).unwrap(), 2, 2, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        // v3, v4 adjacent but v2 is not a clique member with them.
        assert!(extend_weighting_clique(&p4, &w, 2, 4, &l).is_err());
        assert!(extend_weighting_clique(&p4, &w, 2, 1, &l).is_err());
    }
}
