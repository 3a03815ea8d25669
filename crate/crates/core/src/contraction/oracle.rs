//! Exact minimum congestion by dynamic programming over vertex subsets.
//!
//! `best(S)` is the least possible maximum cut over the nodes strictly below
//! a subtree whose leaf set is `S`, plus the cuts of its two children:
//!
//! ```text
//! best({v}) = 0
//! best(S)   = min over S = A ⊔ B of max(cut A, cut B, best A, best B)
//! ```
//!
//! and `cng(G) = best(V)`. Subsets are bitmasks; each mask enumerates the
//! proper submasks containing its lowest vertex, `3^n / 2` steps in total.

use alloc::vec;
use alloc::vec::Vec;

use super::{ContractionTree, TreeShape};
use crate::{Error, Graph, Result};

pub const ORACLE_DEFAULT_LIMIT: usize = 14;
/// Largest limit accepted at all (table size `2^n`).
pub const ORACLE_HARD_CAP: usize = 20;

struct Table {
    best: Vec<f64>,
    choice: Vec<u32>,
}

fn solve(g: &Graph, limit: usize) -> Result<Table> {
    let n = g.n();
    let limit = limit.min(ORACLE_HARD_CAP);
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    let size = 1usize << n;
    let mut adj = vec![vec![0.0; n]; n];
    for (u, v, w) in g.edges() {
        adj[u][v] = w;
        adj[v][u] = w;
    }

    let mut cut = vec![0.0; size];
    for mask in 1..size {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let mut into_rest = 0.0;
        let mut bits = rest;
        while bits != 0 {
            into_rest += adj[v][bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        cut[mask] = cut[rest] + g.degrees()[v] - 2.0 * into_rest;
    }

    let mut best = vec![0.0; size];
    let mut choice = vec![0u32; size];
    for mask in 1..size {
        if mask & (mask - 1) == 0 {
            continue;
        }
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut value = f64::INFINITY;
        let mut pick = 0;
        // submasks s of rest, excluding rest itself
        let mut s = (rest - 1) & rest;
        loop {
            let a = low | s;
            let b = mask ^ a;
            let v = cut[a].max(cut[b]).max(best[a]).max(best[b]);
            if v < value {
                value = v;
                pick = a;
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
        best[mask] = value;
        choice[mask] = pick as u32;
    }
    Ok(Table { best, choice })
}

/// Exact `cng(G)`; refuses graphs with more than `limit` vertices.
pub fn oracle_min_congestion(g: &Graph, limit: usize) -> Result<f64> {
    let table = solve(g, limit)?;
    Ok(table.best[(1usize << g.n()) - 1])
}

/// An optimal tree together with its congestion.
pub fn oracle_optimal_tree(g: &Graph, limit: usize) -> Result<(f64, ContractionTree)> {
    let table = solve(g, limit)?;
    let full = (1usize << g.n()) - 1;
    let shape = rebuild(&table, full);
    Ok((
        table.best[full],
        ContractionTree::from_shape(g.n(), &shape)?,
    ))
}

fn rebuild(table: &Table, mask: usize) -> TreeShape {
    if mask & (mask - 1) == 0 {
        return TreeShape::Leaf(mask.trailing_zeros() as usize);
    }
    let a = table.choice[mask] as usize;
    TreeShape::join(rebuild(table, a), rebuild(table, mask ^ a))
}
