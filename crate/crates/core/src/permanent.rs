//! Exact permanents: Ryser's formula with Gray-code updates (fast path), the
//! naive permutation expansion (oracle), parity over GF(2), and the Sachs
//! subgraph expansion of `per(A(G))`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::caps::SizeCaps;
use crate::graph::Graph;
use crate::matrix::{Label, LabeledIntMatrix};
use crate::{check_cap, Result};

/// Largest side accepted by [`permanent_naive`].
pub const NAIVE_MAX_SIDE: usize = 10;

/// Sides from which Ryser's sum is split into parallel chunks.
const PARALLEL_FROM: usize = 16;

/// Exact permanent via Ryser's formula. Checked `i128` arithmetic with a
/// per-chunk fallback to arbitrary precision; never wraps.
pub fn permanent(m: &LabeledIntMatrix) -> Result<BigInt> {
    let n = m.require_square()?;
    check_cap("permanent side", n, SizeCaps::global().permanent)?;
    Ok(ryser(&m.rows()))
}

/// Ryser on raw rows (square, any size the caller accepts).
pub fn ryser(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    // Columns as row-vectors for cheap column-sum updates.
    let cols: Vec<Vec<i64>> = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    let total: u64 = 1 << n;
    let chunk_bits = if n >= PARALLEL_FROM { n - 6 } else { n };
    let chunk: u64 = 1 << chunk_bits;
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let sum: BigInt = if starts.len() > 1 {
        let parts: Vec<BigInt> = starts.par_iter().map(|&s| ryser_chunk(&cols, s, s + chunk)).collect();
        parts.into_iter().sum()
    } else {
        ryser_chunk(&cols, 0, total)
    };
    if n % 2 == 1 {
        -sum
    } else {
        sum
    }
}

fn gray(k: u64) -> u64 {
    k ^ (k >> 1)
}

/// `Σ (-1)^{|S|} Π_i rowsum_i(S)` over the Gray-code subsets with index in
/// `[lo, hi)`. Falls back to big integers if any `i128` step overflows.
fn ryser_chunk(cols: &[Vec<i64>], lo: u64, hi: u64) -> BigInt {
    ryser_chunk_i128(cols, lo, hi).map(BigInt::from).unwrap_or_else(|| ryser_chunk_big(cols, lo, hi))
}

fn subset_sums(cols: &[Vec<i64>], set: u64) -> Vec<i128> {
    let n = cols.len();
    let mut sums = vec![0i128; n];
    for (j, col) in cols.iter().enumerate() {
        if set >> j & 1 == 1 {
            for i in 0..n {
                sums[i] += col[i] as i128;
            }
        }
    }
    sums
}

fn ryser_chunk_i128(cols: &[Vec<i64>], lo: u64, hi: u64) -> Option<i128> {
    let n = cols.len();
    let mut set = gray(lo);
    let mut sums = subset_sums(cols, set);
    let mut acc: i128 = 0;
    let mut k = lo;
    loop {
        if set != 0 {
            let mut prod: i128 = 1;
            for &s in &sums {
                prod = prod.checked_mul(s)?;
                if prod == 0 {
                    break;
                }
            }
            if set.count_ones() % 2 == 1 {
                acc = acc.checked_sub(prod)?;
            } else {
                acc = acc.checked_add(prod)?;
            }
        }
        k += 1;
        if k >= hi {
            break;
        }
        let j = k.trailing_zeros() as usize;
        set ^= 1 << j;
        let col = &cols[j];
        if set >> j & 1 == 1 {
            for i in 0..n {
                sums[i] = sums[i].checked_add(col[i] as i128)?;
            }
        } else {
            for i in 0..n {
                sums[i] = sums[i].checked_sub(col[i] as i128)?;
            }
        }
    }
    Some(acc)
}

fn ryser_chunk_big(cols: &[Vec<i64>], lo: u64, hi: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for k in lo..hi {
        let set = gray(k);
        if set == 0 {
            continue;
        }
        let sums = subset_sums(cols, set);
        let prod: BigInt = sums.iter().map(|&s| BigInt::from(s)).product();
        if set.count_ones() % 2 == 1 {
            acc -= prod;
        } else {
            acc += prod;
        }
    }
    acc
}

/// Oracle: `Σ_σ Π_i a_{iσ(i)}` over all permutations, in big integers.
/// Limited to side [`NAIVE_MAX_SIDE`].
pub fn permanent_naive(m: &LabeledIntMatrix) -> Result<BigInt> {
    let n = m.require_square()?;
    check_cap("naive permanent side", n, NAIVE_MAX_SIDE)?;
    let rows = m.rows();
    fn expand(rows: &[Vec<i64>], i: usize, used: &mut Vec<bool>, prefix: &BigInt) -> BigInt {
        if i == rows.len() {
            return prefix.clone();
        }
        let mut total = BigInt::zero();
        for j in 0..rows.len() {
            if !used[j] && rows[i][j] != 0 {
                used[j] = true;
                total += expand(rows, i + 1, used, &(prefix * rows[i][j]));
                used[j] = false;
            }
        }
        total
    }
    Ok(expand(&rows, 0, &mut vec![false; n], &BigInt::one()))
}

/// Parity of the permanent, computed as the rank of the matrix over GF(2)
/// (permanent and determinant agree mod 2).
pub fn permanent_mod2(m: &LabeledIntMatrix) -> Result<u8> {
    let n = m.require_square()?;
    let words = n.div_ceil(64).max(1);
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut bits = vec![0u64; words];
            for (j, &x) in m.row(i).iter().enumerate() {
                if x & 1 != 0 {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .collect();
    for col in 0..n {
        let (w, b) = (col / 64, col % 64);
        let Some(p) = (col..n).find(|&r| rows[r][w] >> b & 1 == 1) else {
            return Ok(0);
        };
        rows.swap(col, p);
        let pivot = rows[col].clone();
        for r in rows.iter_mut().skip(col + 1) {
            if r[w] >> b & 1 == 1 {
                for (x, y) in r.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
    }
    Ok(1)
}

/// 0/1 adjacency matrix with vertex labels.
pub fn adjacency_matrix(g: &Graph) -> LabeledIntMatrix {
    let labels: Vec<Label> = g.vertices().map(Label::Vertex).collect();
    let mut rows = vec![vec![0i64; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        rows[u - 1][v - 1] = 1;
        rows[v - 1][u - 1] = 1;
    }
    LabeledIntMatrix::new(labels.clone(), labels, rows).expect("square by construction")
}

/// `per(A(G)) = Σ_H 2^{k(H)}` over spanning Sachs subgraphs `H` (components
/// are single edges or cycles), `k(H)` the number of cycles.
pub fn sachs_permanent(g: &Graph) -> Result<BigUint> {
    let n = g.n();
    check_cap("sachs_permanent vertices", n, SizeCaps::global().sachs)?;
    let adj: Vec<u64> = (1..=n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << (w - 1))).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    Ok(sachs_rec(&adj, full, 0, &mut memo))
}

fn sachs_rec(adj: &[u64], full: u64, covered: u64, memo: &mut HashMap<u64, BigUint>) -> BigUint {
    if covered == full {
        return BigUint::one();
    }
    if let Some(x) = memo.get(&covered) {
        return x.clone();
    }
    let free = full & !covered;
    let v = free.trailing_zeros() as usize;
    let mut total = BigUint::zero();
    // `v` as a single-edge component.
    let mut nb = adj[v] & free;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        total += sachs_rec(adj, full, covered | 1 << v | 1 << w, memo);
    }
    // `v` on a cycle of free vertices; `v` is the least free vertex, and each
    // cycle is counted once by requiring second vertex < last vertex.
    let mut cycles: Vec<u64> = Vec::new();
    let mut path = vec![v];
    collect_cycles(adj, free, v, 1u64 << v, &mut path, &mut cycles);
    for set in cycles {
        total += sachs_rec(adj, full, covered | set, memo) * 2u32;
    }
    memo.insert(covered, total.clone());
    total
}

fn collect_cycles(adj: &[u64], free: u64, start: usize, used: u64, path: &mut Vec<usize>, out: &mut Vec<u64>) {
    let last = *path.last().unwrap();
    let mut nb = adj[last] & free & !used;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        path.push(w);
        let set = used | 1 << w;
        if path.len() >= 3 && adj[w] >> start & 1 == 1 && path[1] < w {
            out.push(set);
        }
        collect_cycles(adj, free, start, set, path, out);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, Family};
    use crate::matrix::{fixture, THEOREM_42_C};

    fn mat(rows: &[&[i64]]) -> LabeledIntMatrix {
        LabeledIntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(permanent(&mat(&[&[5]])).unwrap(), BigInt::from(5));
        let id: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| (i == j) as i64).collect()).collect();
        assert_eq!(permanent(&LabeledIntMatrix::from_rows(id).unwrap()).unwrap(), BigInt::one());
        let c = LabeledIntMatrix::from_rows(THEOREM_42_C.iter().map(|r| r.to_vec()).collect()).unwrap();
        assert_eq!(permanent(&c).unwrap(), BigInt::from(-4));
        assert_eq!(permanent_naive(&c).unwrap(), BigInt::from(-4));
        assert_eq!(permanent(&mat(&[&[0, 1], &[-1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(permanent(&LabeledIntMatrix::from_rows(vec![]).unwrap()).unwrap(), BigInt::one());
        assert!(permanent(&mat(&[&[1, 2]])).is_err());
    }

    #[test]
    fn remark_fixtures() {
        // The matrix displayed as B_{B1(3,3)} has permanent 0; the displayed
        // selection B has permanent -8 (see the decisions ledger).
        let b = fixture("b1-3-3-remark").unwrap();
        assert_eq!(permanent(&b).unwrap(), permanent_naive(&b).unwrap());
        assert_eq!(permanent(&b).unwrap(), BigInt::zero());
        let s = fixture("b1-3-3-remark-selection").unwrap();
        assert_eq!(permanent(&s).unwrap(), BigInt::from(-8));
        assert_eq!(permanent_mod2(&s).unwrap(), 0);
    }

    #[test]
    fn no_wrapping() {
        let big = i64::MAX / 2;
        let rows: Vec<Vec<i64>> = (0..5).map(|_| vec![big; 5]).collect();
        let m = LabeledIntMatrix::from_rows(rows).unwrap();
        let expected = BigInt::from(120) * BigInt::from(big).pow(5);
        assert_eq!(permanent(&m).unwrap(), expected);
        assert_eq!(permanent_naive(&m).unwrap(), expected);
    }

    #[test]
    fn parallel_path_matches_formula() {
        // all-ones 16x16: per = 16!
        let m = LabeledIntMatrix::from_rows(vec![vec![1; 16]; 16]).unwrap();
        let fact: BigInt = (1..=16u32).map(BigInt::from).product();
        assert_eq!(permanent(&m).unwrap(), fact);
    }

    #[test]
    fn parity() {
        assert_eq!(permanent_mod2(&mat(&[&[0, 1], &[-1, 0]])).unwrap(), 1);
        assert_eq!(permanent_mod2(&mat(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]])).unwrap(), 0);
        assert_eq!(permanent_mod2(&mat(&[&[1, 1], &[1, 1]])).unwrap(), 0);
    }

    #[test]
    fn sachs_examples() {
        let c3 = Family::Cycle(3).build().unwrap();
        assert_eq!(sachs_permanent(&c3).unwrap(), BigUint::from(2u32));
        assert_eq!(sachs_permanent(&build_graph(2, &[(1, 2)]).unwrap()).unwrap(), BigUint::one());
        assert_eq!(sachs_permanent(&Family::Path(3).build().unwrap()).unwrap(), BigUint::zero());
        // C4: two matchings + the 4-cycle counted twice = 4 = per(A(C4))
        let c4 = Family::Cycle(4).build().unwrap();
        assert_eq!(sachs_permanent(&c4).unwrap(), BigUint::from(4u32));
        let k4 = Family::Complete(4).build().unwrap();
        let p = permanent(&adjacency_matrix(&k4)).unwrap();
        assert_eq!(BigInt::from(sachs_permanent(&k4).unwrap()), p);
    }
}
