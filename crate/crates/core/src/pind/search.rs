//! Exhaustive permanent-index search over column multiplicity vectors.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::caps::SizeCaps;
use crate::matrix::LabeledIntMatrix;
use crate::permanent::ryser;
use crate::{check_cap, Error, Result};

use super::certificate::bigint;

/// A multiplicity vector with its (nonzero) permanent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PindWitness {
    /// Uses of each column, in the matrix's column order.
    pub multiplicities: Vec<u32>,
    #[serde(with = "bigint")]
    pub permanent: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PindResult {
    /// The `k_max` searched up to.
    pub bound_checked: u32,
    /// Least `k <= k_max` with a nonzero permanent, `None` for "exceeds k_max".
    pub achieved: Option<u32>,
    pub witness: Option<PindWitness>,
    /// Multiplicity vectors whose permanent was evaluated.
    pub vectors_checked: u64,
}

impl PindResult {
    pub fn at_most(&self, k: u32) -> bool {
        self.achieved.is_some_and(|a| a <= k)
    }
}

/// Permanent of `A` with column `j` repeated `mult[j]` times, by Ryser's
/// formula grouped over repeated columns:
/// `Σ_t (−1)^{m − Σt} Π_j C(mult_j, t_j) Π_i Σ_j t_j a_ij`.
pub fn permanent_with_multiplicities(cols: &[Vec<i64>], mult: &[u32]) -> BigInt {
    let used: Vec<usize> = (0..mult.len()).filter(|&j| mult[j] > 0).collect();
    let m = cols.first().map_or(0, Vec::len);
    grouped_ryser_i128(cols, mult, &used, m).map(BigInt::from).unwrap_or_else(|| {
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|i| used.iter().flat_map(|&j| std::iter::repeat_n(cols[j][i], mult[j] as usize)).collect())
            .collect();
        ryser(&rows)
    })
}

fn binom(n: u32, k: u32) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn grouped_ryser_i128(cols: &[Vec<i64>], mult: &[u32], used: &[usize], m: usize) -> Option<i128> {
    if m == 0 {
        return Some(1);
    }
    let mut t = vec![0u32; used.len()];
    let mut sums = vec![0i128; m];
    let mut acc: i128 = 0;
    loop {
        let total_t: u32 = t.iter().sum();
        if total_t > 0 {
            let mut prod: i128 = 1;
            for &s in &sums {
                prod = prod.checked_mul(s)?;
                if prod == 0 {
                    break;
                }
            }
            if prod != 0 {
                for (k, &j) in used.iter().enumerate() {
                    prod = prod.checked_mul(binom(mult[j], t[k]))?;
                }
                if (m as u32 - total_t) % 2 == 1 {
                    acc = acc.checked_sub(prod)?;
                } else {
                    acc = acc.checked_add(prod)?;
                }
            }
        }
        // mixed-radix increment
        let mut k = 0;
        loop {
            if k == used.len() {
                return Some(acc);
            }
            let col = &cols[used[k]];
            if t[k] < mult[used[k]] {
                t[k] += 1;
                for i in 0..m {
                    sums[i] = sums[i].checked_add(col[i] as i128)?;
                }
                break;
            }
            for i in 0..m {
                sums[i] = sums[i].checked_sub(col[i] as i128 * t[k] as i128)?;
            }
            t[k] = 0;
            k += 1;
        }
    }
}

/// Depth-first enumeration of multiplicity vectors with `mult[j] <= caps[j]`
/// and `Σ mult = rows`, larger multiplicities first at each column (so the
/// search visits vectors in descending lexicographic order). Returns the first
/// vector with a nonzero permanent.
pub(crate) struct BoundedSearch<'a> {
    cols: Vec<Vec<i64>>,
    caps: &'a [u32],
    /// Only evaluate vectors using some column exactly this often.
    require_max: Option<u32>,
    suffix_cap: Vec<u64>,
    pub checked: u64,
    budget: u64,
}

impl<'a> BoundedSearch<'a> {
    pub fn new(a: &LabeledIntMatrix, caps: &'a [u32], require_max: Option<u32>, budget: u64) -> Self {
        let cols: Vec<Vec<i64>> = (0..a.ncols()).map(|j| a.column(j)).collect();
        let mut suffix_cap = vec![0u64; caps.len() + 1];
        for j in (0..caps.len()).rev() {
            suffix_cap[j] = suffix_cap[j + 1] + caps[j] as u64;
        }
        BoundedSearch { cols, caps, require_max, suffix_cap, checked: 0, budget }
    }

    pub fn run(&mut self, rows: usize) -> Result<Option<PindWitness>, u64> {
        let mut mult = vec![0u32; self.caps.len()];
        self.dfs(0, rows as u64, &mut mult)
    }

    fn dfs(&mut self, j: usize, remaining: u64, mult: &mut Vec<u32>) -> Result<Option<PindWitness>, u64> {
        if remaining == 0 {
            if let Some(k) = self.require_max {
                if !mult.contains(&k) {
                    return Ok(None);
                }
            }
            if self.checked >= self.budget {
                return Err(self.checked);
            }
            self.checked += 1;
            let per = permanent_with_multiplicities(&self.cols, mult);
            return Ok((!per.is_zero()).then(|| PindWitness { multiplicities: mult.clone(), permanent: per }));
        }
        if j == self.caps.len() || self.suffix_cap[j] < remaining {
            return Ok(None);
        }
        let top = (self.caps[j] as u64).min(remaining) as u32;
        for k in (0..=top).rev() {
            mult[j] = k;
            if let Some(w) = self.dfs(j + 1, remaining - k as u64, mult)? {
                return Ok(Some(w));
            }
        }
        mult[j] = 0;
        Ok(None)
    }
}

/// `pind(M)` up to `k_max`: least `k` such that some square matrix formed
/// from `M`'s columns, each used at most `k` times, has nonzero permanent.
/// All-zero columns are never used.
pub fn pind_exhaustive(m: &LabeledIntMatrix, k_max: u32) -> Result<PindResult> {
    let caps = SizeCaps::global();
    let rows = m.nrows();
    if rows == 0 {
        return Err(Error::Argument("pind of a matrix with no rows".into()));
    }
    if k_max == 0 {
        return Err(Error::Argument("k_max must be positive".into()));
    }
    check_cap("pind_exhaustive rows", rows, caps.pind_rows)?;
    let mut checked = 0u64;
    for k in 1..=k_max {
        let col_caps: Vec<u32> = (0..m.ncols()).map(|j| if m.is_zero_column(j) { 0 } else { k }).collect();
        let mut search = BoundedSearch::new(m, &col_caps, (k > 1).then_some(k), caps.pind_vectors - checked);
        let found = search.run(rows).map_err(|n| Error::Budget {
            what: "pind_exhaustive",
            progress: format!("levels k < {k} exhausted without witness; {} vectors checked at k = {k}", n),
        })?;
        checked += search.checked;
        if let Some(w) = found {
            return Ok(PindResult { bound_checked: k_max, achieved: Some(k), witness: Some(w), vectors_checked: checked });
        }
    }
    Ok(PindResult { bound_checked: k_max, achieved: None, witness: None, vectors_checked: checked })
}

/// Some `η'' <= caps` (column-wise, `Σ η'' = rows`) with nonzero permanent.
pub fn find_nonzero_selection(m: &LabeledIntMatrix, caps: &[u32]) -> Result<Option<PindWitness>> {
    if m.nrows() == 0 {
        return Ok(Some(PindWitness { multiplicities: vec![0; m.ncols()], permanent: BigInt::from(1) }));
    }
    check_cap("selection search rows", m.nrows(), SizeCaps::global().pind_rows)?;
    let caps: Vec<u32> = caps.iter().enumerate().map(|(j, &c)| if m.is_zero_column(j) { 0 } else { c }).collect();
    let mut search = BoundedSearch::new(m, &caps, None, SizeCaps::global().pind_vectors);
    search.run(m.nrows()).map_err(|n| Error::Budget {
        what: "selection search",
        progress: format!("{n} vectors checked"),
    })
}
