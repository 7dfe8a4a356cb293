//! The `twc` command line: argument parsing, graph/matrix loading and JSON reports.
//!
//! [`run`] never prints; it returns the exit status and a [`Report`] whose
//! `text` field is the human rendering and whose JSON form is canonical
//! (fixed struct field order, sorted map keys), so `--json` output parses and
//! re-serializes to the same bytes.

use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::choosability::{
    check_12_certificate, check_13_certificate, check_22_certificate, classify_family, find_proper_weighting_with_stats,
    TotalListAssignment,
};
use crate::graph::generate::random_orientation;
use crate::graph::io::{format_edge_list, format_orientation, parse_edge_list, parse_orientation};
use crate::graph::{classify, family, CyclicKind, Graph, OrientedGraph};
use crate::matching::{count_perfect_matchings, count_pm_line_graph, dong_tree_formula, split_recursion};
use crate::matrix::{build_a, build_b, fixture, FIXTURES};
use crate::permanent::permanent;
use crate::pind::bigint_opt::to_repr;
use crate::pind::{
    certify_pindA, pind_exhaustive, reduce_for_pindB, Certificate, MatrixKind, Method, Outcome, Selection, Witness,
};
use crate::{Error, LabeledIntMatrix, Result};

#[derive(Debug, Parser)]
#[command(name = "twc", version, about = "Exact certificates for total weight choosability of graphs")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized choices (`--orient random`, `weighting --random`).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PindMethod {
    Exhaustive,
    Certify,
    Reduce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Criterion {
    #[value(name = "12")]
    C12,
    #[value(name = "22")]
    C22,
    #[value(name = "13")]
    C13,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print A_G or B_G.
    Matrix {
        #[arg(value_enum, ignore_case = true)]
        which: Which,
        /// Edge-list file or family spec (e.g. `b1:3,3`).
        graph: String,
        /// Orientation file (`tail head` per line) or `random`; default: edges as listed.
        #[arg(long)]
        orient: Option<String>,
    },
    /// Permanent of a matrix file, a named fixture, or B_G of a graph.
    Permanent {
        /// Matrix file, edge-list file or family spec.
        target: Option<String>,
        #[arg(long, conflicts_with = "target")]
        fixture: Option<String>,
        #[arg(long)]
        orient: Option<String>,
    },
    /// Perfect matchings of G, L(G), and Dong's tree formula.
    Matchings {
        graph: String,
        /// Count perfect matchings of the line graph.
        #[arg(long)]
        line_graph: bool,
        /// Also evaluate Dong's formula (trees of odd order).
        #[arg(long)]
        dong: bool,
    },
    /// Lemma 2.6: M(L(G)) = M(L(G(u,w))) + M(L(G(v,w))).
    Split {
        graph: String,
        /// The edge `u,v`.
        #[arg(long)]
        edge: String,
    },
    /// Permanent index of A_G or B_G.
    Pind {
        #[arg(value_enum, ignore_case = true)]
        which: Which,
        graph: String,
        #[arg(long, default_value_t = 2)]
        max: u32,
        #[arg(long, value_enum, default_value_t = PindMethod::Exhaustive)]
        method: PindMethod,
        #[arg(long)]
        orient: Option<String>,
    },
    /// Tree / unicyclic / bicyclic decomposition and the U/B family verdict.
    Classify { graph: String },
    /// (1,2) via Lemma 2.1 / Theorem 2.2, (2,2) via pind(A_G)=1, (1,3) via pind(B_G)<=2.
    Check {
        #[arg(value_enum)]
        criterion: Criterion,
        graph: String,
        #[arg(long)]
        orient: Option<String>,
    },
    /// Proper total weighting for concrete lists.
    Weighting {
        graph: String,
        /// List file (`V <id> w...`, `E <u> <v> w...`).
        #[arg(long, required_unless_present = "random")]
        lists: Option<String>,
        /// Random `k,k'` lists of distinct integers in [-10, 10] (uses --seed).
        #[arg(long, conflicts_with = "lists")]
        random: Option<String>,
    },
    /// Build a named family graph and print its edge list.
    Family { spec: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Answered,
    Certified,
    Inconclusive,
    Refuted,
    Error,
}

impl Status {
    /// 0 = certified/answered (a refutation is an answer), 2 = inconclusive, 1 = error.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Answered | Status::Certified | Status::Refuted => 0,
            Status::Inconclusive => 2,
            Status::Error => 1,
        }
    }

    fn of(outcome: Outcome) -> Status {
        match outcome {
            Outcome::Certified => Status::Certified,
            Outcome::Inconclusive => Status::Inconclusive,
            Outcome::Refuted => Status::Refuted,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub source: String,
    pub n: usize,
    pub m: usize,
    /// `None` for disconnected graphs.
    pub kind: Option<CyclicKind>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// The arguments after the program name.
    pub command: Vec<String>,
    pub input: Option<InputSummary>,
    pub status: Status,
    pub result: Value,
    pub elapsed_ms: u64,
    /// Human rendering (not part of the JSON form).
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Argument(format!("report JSON: {e}")))
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// What the binary prints.
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            self.to_json()
        } else {
            self.text.clone()
        }
    }
}

struct Output {
    status: Status,
    input: Option<InputSummary>,
    result: Value,
    text: String,
}

/// Parses `argv` (without the program name) and runs one subcommand.
/// Returns the exit status, the report and whether `--json` was requested.
pub fn run<I, T>(argv: I) -> (i32, Report, bool)
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let wants_json = args.iter().any(|a| a == "--json");
    let start = Instant::now();
    let finish = |out: Output| Report {
        command: args.clone(),
        input: out.input,
        status: out.status,
        result: out.result,
        elapsed_ms: start.elapsed().as_millis() as u64,
        text: out.text,
    };
    let cli = match Cli::try_parse_from(std::iter::once("twc".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            let status = if informational { Status::Answered } else { Status::Error };
            let key = if informational { "help" } else { "error" };
            let report = finish(Output { status, input: None, result: json!({ key: text.trim_end() }), text });
            return (report.exit_code(), report, wants_json);
        }
    };
    let out = dispatch(&cli).unwrap_or_else(|e| Output {
        status: Status::Error,
        input: None,
        result: json!({ "error": e.to_string() }),
        text: format!("error: {e}\n"),
    });
    let report = finish(out);
    (report.exit_code(), report, cli.json)
}

/// Runs, prints the report, and returns the exit code (for the `twc` binary).
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let (code, report, as_json) = run(argv);
    let out = report.render(as_json);
    if report.status == Status::Error && !as_json {
        eprint!("{out}");
    } else {
        print!("{out}");
        if !out.ends_with('\n') {
            println!();
        }
    }
    code
}

/// Reads a graph from an edge-list file, or builds it from a family spec.
pub fn load_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Argument(format!("{arg}: {e}")))?;
        return parse_edge_list(&text).map_err(|e| Error::Argument(format!("{arg}: {e}")));
    }
    family(arg).map_err(|e| Error::Argument(format!("`{arg}` is neither a readable file nor a family spec ({e})")))
}

fn load_orientation(g: &Graph, arg: Option<&str>, seed: u64) -> Result<OrientedGraph> {
    match arg {
        None => Ok(OrientedGraph::as_listed(g)),
        Some("random") => Ok(random_orientation(g, &mut ChaCha8Rng::seed_from_u64(seed))),
        Some(file) => {
            let text = std::fs::read_to_string(file).map_err(|e| Error::Argument(format!("{file}: {e}")))?;
            parse_orientation(g, &text).map_err(|e| Error::Argument(format!("{file}: {e}")))
        }
    }
}

fn summary(source: &str, g: &Graph) -> InputSummary {
    InputSummary { source: source.into(), n: g.n(), m: g.m(), kind: classify(g).ok().map(|c| c.kind) }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Unsupported(format!("JSON encoding: {e}")))
}

fn count_value(x: u128) -> Value {
    u64::try_from(x).map(Value::from).unwrap_or_else(|_| Value::from(x.to_string()))
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let seed = cli.seed;
    match &cli.command {
        Command::Matrix { which, graph, orient } => {
            let g = load_graph(graph)?;
            let d = load_orientation(&g, orient.as_deref(), seed)?;
            let m = match which {
                Which::A => build_a(&d),
                Which::B => build_b(&d)?,
            };
            Ok(Output {
                status: Status::Answered,
                input: Some(summary(graph, &g)),
                result: json!({ "matrix": to_value(&m)?, "orientation": d.arcs() }),
                text: m.to_text(),
            })
        }
        Command::Permanent { target, fixture: fx, orient } => {
            let (m, input, source) = match (fx, target) {
                (Some(name), _) => {
                    let m = fixture(name).ok_or_else(|| {
                        Error::Argument(format!("unknown fixture `{name}`; known: {}", FIXTURES.join(", ")))
                    })?;
                    (m, None, format!("fixture {name}"))
                }
                (None, Some(t)) => match matrix_file(t) {
                    Some(m) => (m?, None, format!("matrix file {t}")),
                    None => {
                        let g = load_graph(t)?;
                        let d = load_orientation(&g, orient.as_deref(), seed)?;
                        (build_b(&d)?, Some(summary(t, &g)), "B_G".to_string())
                    }
                },
                (None, None) => return Err(Error::Argument("permanent needs a target or --fixture".into())),
            };
            let per = permanent(&m)?;
            Ok(Output {
                status: Status::Answered,
                input,
                result: json!({ "source": source, "side": m.nrows(), "permanent": to_repr(&per) }),
                text: format!("per = {per}  ({source}, {}x{})\n", m.nrows(), m.ncols()),
            })
        }
        Command::Matchings { graph, line_graph, dong } => {
            let g = load_graph(graph)?;
            let (what, count) = if *line_graph {
                ("M(L(G))", count_pm_line_graph(&g)?)
            } else {
                ("M(G)", count_perfect_matchings(&g)?)
            };
            let mut result = json!({ "counted": what, "count": count_value(count) });
            let mut text = format!("{what} = {count}\n");
            if *dong {
                let formula = dong_tree_formula(&g)?;
                let brute = count_pm_line_graph(&g)?;
                result["dong"] = count_value(formula);
                result["line_graph_brute_force"] = count_value(brute);
                result["dong_agrees"] = Value::from(formula == brute);
                text.push_str(&format!("Dong formula = {formula}, brute-force M(L(T)) = {brute}\n"));
            }
            Ok(Output { status: Status::Answered, input: Some(summary(graph, &g)), result, text })
        }
        Command::Split { graph, edge } => {
            let g = load_graph(graph)?;
            let (u, v) = edge
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
                .ok_or_else(|| Error::Argument(format!("--edge expects `u,v`, got `{edge}`")))?;
            let e = g.edge_index(u, v).ok_or_else(|| Error::Argument(format!("{u}-{v} is not an edge")))?;
            let r = split_recursion(&g, e)?;
            Ok(Output {
                status: Status::Answered,
                input: Some(summary(graph, &g)),
                result: json!({
                    "edge": [r.u, r.v],
                    "lhs": count_value(r.lhs),
                    "rhs_u": count_value(r.rhs_u),
                    "rhs_v": count_value(r.rhs_v),
                    "holds": r.holds(),
                }),
                text: format!(
                    "M(L(G)) = {} ; M(L(G({},w))) + M(L(G({},w))) = {} + {} ; {}\n",
                    r.lhs,
                    r.u,
                    r.v,
                    r.rhs_u,
                    r.rhs_v,
                    if r.holds() { "holds" } else { "FAILS" }
                ),
            })
        }
        Command::Pind { which, graph, max, method, orient } => {
            let g = load_graph(graph)?;
            let d = load_orientation(&g, orient.as_deref(), seed)?;
            let cert = pind_command(&g, d, *which, *max, *method)?;
            certificate_output(Some(summary(graph, &g)), cert)
        }
        Command::Classify { graph } => {
            let g = load_graph(graph)?;
            let c = classify(&g)?;
            let mut result = json!({ "classification": to_value(&c)? });
            let mut text = format!("{:?}: n = {}, m = {}, parameters {:?}, s = {}\n", c.kind, c.n, c.m, c.parameters, c.s);
            if matches!(c.kind, CyclicKind::Unicyclic) || c.kind.is_bicyclic() {
                let v = classify_family(&g)?;
                text.push_str(&match v.family {
                    Some(f) => format!("family {f}: claimed M(L) {}", v.claimed_parity.expect("tagged")),
                    None => format!("outside defined families: {}", v.violations.join("; ")),
                });
                if let Some(p) = v.observed_parity {
                    text.push_str(&format!(", observed M(L) = {} ({p})", v.observed_matchings.unwrap_or(0)));
                }
                text.push('\n');
                for note in &v.notes {
                    text.push_str(&format!("note: {note}\n"));
                }
                result["family"] = to_value(&v)?;
            }
            Ok(Output { status: Status::Answered, input: Some(summary(graph, &g)), result, text })
        }
        Command::Check { criterion, graph, orient } => {
            let g = load_graph(graph)?;
            let cert = match criterion {
                Criterion::C12 => check_12_certificate(&g, &load_orientation(&g, orient.as_deref(), seed)?)?,
                Criterion::C22 => check_22_certificate(&g)?,
                Criterion::C13 => check_13_certificate(&g)?,
            };
            certificate_output(Some(summary(graph, &g)), cert)
        }
        Command::Weighting { graph, lists, random } => {
            let g = load_graph(graph)?;
            let l = match (lists, random) {
                (Some(file), _) => {
                    let text = std::fs::read_to_string(file).map_err(|e| Error::Argument(format!("{file}: {e}")))?;
                    TotalListAssignment::parse(&g, &text).map_err(|e| Error::Argument(format!("{file}: {e}")))?
                }
                (None, Some(spec)) => {
                    let (k, kp) = spec
                        .split_once(',')
                        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                        .ok_or_else(|| Error::Argument(format!("--random expects `k,k'`, got `{spec}`")))?;
                    TotalListAssignment::random(&g, k, kp, &mut ChaCha8Rng::seed_from_u64(seed))?
                }
                (None, None) => return Err(Error::Argument("weighting needs --lists or --random".into())),
            };
            let (w, stats) = find_proper_weighting_with_stats(&g, &l)?;
            let text = match &w {
                Some(w) => {
                    let sums: Vec<String> = w.sums(&g).iter().map(|s| s.to_string()).collect();
                    format!(
                        "proper weighting found\nvertex weights: {}\nedge weights: {}\nsums: {}\n",
                        join(&w.vertex),
                        join(&w.edge),
                        sums.join(" ")
                    )
                }
                None => format!("no proper weighting exists for these lists ({} assignments exhausted)\n", stats.product_size),
            };
            let sums = w.as_ref().map(|w| w.sums(&g).iter().map(|s| s.to_string()).collect::<Vec<_>>());
            Ok(Output {
                status: Status::Answered,
                input: Some(summary(graph, &g)),
                result: json!({
                    "lists": to_value(&l)?,
                    "weighting": to_value(&w)?,
                    "sums": sums,
                    "stats": to_value(&stats)?,
                }),
                text,
            })
        }
        Command::Family { spec } => {
            let g = family(spec)?;
            let c = classify(&g)?;
            Ok(Output {
                status: Status::Answered,
                input: Some(summary(spec, &g)),
                result: json!({ "edge_list": format_edge_list(&g), "classification": to_value(&c)? }),
                text: format_edge_list(&g),
            })
        }
    }
}

fn join(xs: &[num_rational::BigRational]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// `Some` when `path` is a file holding a labelled matrix (`# rows:` header).
fn matrix_file(path: &str) -> Option<Result<LabeledIntMatrix>> {
    let text = std::fs::read_to_string(path).ok()?;
    if !text.trim_start().starts_with("# rows") {
        return None;
    }
    Some(LabeledIntMatrix::parse_text(&text).map_err(|e| Error::Argument(format!("{path}: {e}"))))
}

fn pind_command(g: &Graph, d: OrientedGraph, which: Which, max: u32, method: PindMethod) -> Result<Certificate> {
    let kind = if which == Which::A { MatrixKind::A } else { MatrixKind::B };
    let name = if which == Which::A { "A_G" } else { "B_G" };
    match method {
        PindMethod::Exhaustive => {
            let m = if which == Which::A { build_a(&d) } else { build_b(&d)? };
            let r = pind_exhaustive(&m, max)?;
            let notes = vec![format!("{} multiplicity vectors checked", r.vectors_checked)];
            let claim = format!("pind({name})≤{max}");
            Ok(match r.witness {
                Some(w) => Certificate {
                    claim: match r.achieved {
                        Some(k) => format!("pind({name})={k}"),
                        None => claim,
                    },
                    method: Method::Exhaustive,
                    outcome: Outcome::Certified,
                    witness: Witness::Selection(Selection {
                        matrix_kind: kind,
                        orientation: d,
                        multiplicities: w.multiplicities,
                        bound: r.achieved.unwrap_or(max),
                    }),
                    trace: Vec::new(),
                    permanent_value: Some(w.permanent),
                    notes,
                },
                None => Certificate {
                    claim,
                    method: Method::Exhaustive,
                    outcome: Outcome::Refuted,
                    witness: Witness::None,
                    trace: Vec::new(),
                    permanent_value: None,
                    notes,
                },
            })
        }
        PindMethod::Certify => {
            if which != Which::A || max < 1 {
                return Err(Error::Argument("--method certify proves pind(A_G)=1: use `pind A ... --max 1` or more".into()));
            }
            certify_pindA(g)
        }
        PindMethod::Reduce => {
            if which != Which::B || max < 2 {
                return Err(Error::Argument("--method reduce proves pind(B_G)<=2: use `pind B ... --max 2` or more".into()));
            }
            reduce_for_pindB(g)
        }
    }
}

fn certificate_output(input: Option<InputSummary>, cert: Certificate) -> Result<Output> {
    let verified = match cert.verify() {
        Ok(()) => true,
        Err(e) => return Err(Error::Verification(format!("certificate failed re-verification: {e}"))),
    };
    let mut text = format!("{}: {:?} by {:?}\n", cert.claim, cert.outcome, cert.method);
    if let Some(p) = &cert.permanent_value {
        text.push_str(&format!("permanent = {p}\n"));
    }
    match &cert.witness {
        Witness::Selection(s) => {
            text.push_str(&format!("orientation (tail head):\n{}", format_orientation(&s.orientation)));
            let m = s.matrix()?;
            let used: Vec<String> = m
                .col_labels()
                .iter()
                .zip(&s.multiplicities)
                .filter(|(_, &k)| k > 0)
                .map(|(l, k)| format!("{l}x{k}"))
                .collect();
            text.push_str(&format!("columns: {}\n", used.join(" ")));
        }
        Witness::Lemma31(data) => {
            text.push_str(&format!("Lemma 3.1 with X = {:?}\n", data.x));
            text.push_str(&format!("orientation D (tail head):\n{}", format_orientation(&data.orientation)));
        }
        Witness::Matchings { count, .. } => text.push_str(&format!("M(L(G)) = {count}\n")),
        Witness::Columns { .. } | Witness::None => {}
    }
    if !cert.trace.is_empty() {
        let steps: Vec<String> = cert.trace.iter().map(|s| format!("{} {:?}", s.rule, s.removed_original)).collect();
        text.push_str(&format!("reduction trace: {}\n", steps.join(", ")));
    }
    for note in &cert.notes {
        text.push_str(&format!("note: {note}\n"));
    }
    Ok(Output {
        status: Status::of(cert.outcome),
        input,
        result: json!({ "certificate": to_value(&cert)?, "verified": verified }),
        text,
    })
}
