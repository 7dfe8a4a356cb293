//! Structured verdicts emitted by every checker, with an independent
//! re-verification pass.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, OrientedGraph};
use crate::matrix::{build_a, build_b, LabeledIntMatrix};
use crate::permanent::ryser;
use crate::{Error, Result};

use super::lemma31::{verify_lemma31, Lemma31Data};
use super::reduce::{replay_trace, ReductionStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Exhaustive multiplicity search with a nonzero permanent witness.
    Exhaustive,
    /// Lemma 3.1 orientation certificate.
    Lemma31,
    /// Reduction trace (Lemmas 3.4–3.7) ending in an exhaustive base check.
    Reduction,
    /// `per(B_G) ≡ M(L(G)) (mod 2)` with `M(L(G))` odd.
    Parity,
    /// `per(B_G) ≠ 0` computed directly.
    Permanent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Certified,
    /// The method could not decide; explicitly not a refutation.
    Inconclusive,
    /// An exhaustive search on the input itself showed the claim false.
    Refuted,
}

/// Which edge-row matrix a selection was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixKind {
    A,
    B,
}

/// A column selection of `A_G` or `B_G` with a nonzero permanent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selection {
    pub matrix_kind: MatrixKind,
    /// Orientation the matrix was built from.
    pub orientation: OrientedGraph,
    /// Multiplicity of each column, in the matrix's column order.
    pub multiplicities: Vec<u32>,
    /// Largest multiplicity allowed by the claim.
    pub bound: u32,
}

impl Selection {
    pub fn matrix(&self) -> Result<LabeledIntMatrix> {
        Ok(match self.matrix_kind {
            MatrixKind::A => build_a(&self.orientation),
            MatrixKind::B => build_b(&self.orientation)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    None,
    /// Columns of a bare matrix (no graph behind it).
    Columns {
        matrix: LabeledIntMatrix,
        multiplicities: Vec<u32>,
        bound: u32,
    },
    Selection(Selection),
    Lemma31(Box<Lemma31Data>),
    /// `M(L(G))` for the parity route.
    Matchings { graph: Graph, count: u128 },
}

/// `{claim, method, outcome, witness, trace, permanent_value, notes}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub method: Method,
    pub outcome: Outcome,
    pub witness: Witness,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<ReductionStep>,
    #[serde(with = "bigint_opt", default, skip_serializing_if = "Option::is_none")]
    pub permanent_value: Option<BigInt>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.outcome == Outcome::Certified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Argument(format!("certificate JSON: {e}")))
    }

    /// Independently re-checks a certified claim from its witness. Inconclusive
    /// and refuted certificates carry nothing to check and pass trivially.
    pub fn verify(&self) -> Result<()> {
        if !self.is_certified() {
            return Ok(());
        }
        let fail = |msg: String| Err(Error::Verification(format!("{}: {msg}", self.claim)));
        match &self.witness {
            Witness::None => fail("certified claim without a witness".into()),
            Witness::Columns { matrix, multiplicities, bound } => {
                self.check_selection(matrix, multiplicities, *bound)
            }
            Witness::Selection(sel) => {
                self.check_trace(sel)?;
                self.check_selection(&sel.matrix()?, &sel.multiplicities, sel.bound)
            }
            Witness::Lemma31(data) => {
                let again = verify_lemma31(
                    &data.graph,
                    &data.x.iter().copied().collect::<BTreeSet<_>>(),
                    &data.orientation,
                    &data.dprime,
                    &data.eta,
                )?;
                let Witness::Lemma31(d2) = &again.witness else { unreachable!() };
                if d2.checks != data.checks || d2.inner != data.inner {
                    return fail("recorded vertex checks or G[X] witness differ from recomputed ones".into());
                }
                if !self.trace.is_empty() {
                    let base = replay_trace(&self.original_graph()?, &self.trace)?;
                    if base.0 != data.graph {
                        return fail("trace does not end at the certified base graph".into());
                    }
                }
                Ok(())
            }
            Witness::Matchings { graph, count } => {
                let again = crate::matching::count_pm_line_graph(graph)?;
                if again != *count || count % 2 == 0 {
                    return fail(format!("M(L(G)) recomputes to {again}, recorded {count}"));
                }
                Ok(())
            }
        }
    }

    fn original_graph(&self) -> Result<Graph> {
        self.trace
            .first()
            .map(|s| s.before.clone())
            .ok_or_else(|| Error::Verification("empty trace".into()))
    }

    fn check_trace(&self, sel: &Selection) -> Result<()> {
        if self.trace.is_empty() {
            return Ok(());
        }
        let (base, _) = replay_trace(&self.original_graph()?, &self.trace)?;
        if &base != sel.orientation.graph() {
            return Err(Error::Verification(format!("{}: trace does not end at the witness graph", self.claim)));
        }
        Ok(())
    }

    fn check_selection(&self, matrix: &LabeledIntMatrix, mult: &[u32], bound: u32) -> Result<()> {
        let fail = |msg: String| Err(Error::Verification(format!("{}: {msg}", self.claim)));
        if mult.len() != matrix.ncols() {
            return fail(format!("{} multiplicities for {} columns", mult.len(), matrix.ncols()));
        }
        if let Some(j) = mult.iter().position(|&k| k > bound) {
            return fail(format!("column {} used {} times, bound {bound}", matrix.col_labels()[j], mult[j]));
        }
        let total: u64 = mult.iter().map(|&k| k as u64).sum();
        if total != matrix.nrows() as u64 {
            return fail(format!("multiplicities sum to {total}, matrix has {} rows", matrix.nrows()));
        }
        let per = ryser(&matrix.with_multiplicities(mult).rows());
        if per.is_zero() {
            return fail("witness permanent is zero".into());
        }
        if let Some(p) = &self.permanent_value {
            if *p != per {
                return fail(format!("recorded permanent {p}, recomputed {per}"));
            }
        }
        Ok(())
    }
}

/// Big integers as JSON numbers when they fit `i64`, strings otherwise.
pub mod bigint_opt {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Big(String),
    }

    pub fn to_repr(v: &BigInt) -> serde_json::Value {
        match v.to_i64() {
            Some(x) => serde_json::Value::from(x),
            None => serde_json::Value::from(v.to_string()),
        }
    }

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            None => s.serialize_none(),
            Some(v) => match v.to_i64() {
                Some(x) => Repr::Small(x).serialize(s),
                None => Repr::Big(v.to_string()).serialize(s),
            },
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        match Option::<Repr>::deserialize(d)? {
            None => Ok(None),
            Some(Repr::Small(x)) => Ok(Some(BigInt::from(x))),
            Some(Repr::Big(s)) => s.parse().map(Some).map_err(serde::de::Error::custom),
        }
    }
}

/// Same as [`bigint_opt`] for a required value.
pub mod bigint {
    use num_bigint::BigInt;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        super::bigint_opt::serialize(&Some(v.clone()), s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        super::bigint_opt::deserialize(d)?.ok_or_else(|| serde::de::Error::custom("missing integer"))
    }
}
