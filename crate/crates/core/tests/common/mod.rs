#![allow(dead_code)]

use congestion_core::contraction::TreeShape;
use congestion_core::Graph;
use nalgebra::DMatrix;
use proptest::prelude::*;

/// Ascending eigenvalues and matching eigenvectors from nalgebra.
pub fn eig_oracle(rows: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let e = m.symmetric_eigen();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| e.eigenvalues[a].total_cmp(&e.eigenvalues[b]));
    let vals = idx.iter().map(|&i| e.eigenvalues[i]).collect();
    let vecs = idx
        .iter()
        .map(|&i| e.eigenvectors.column(i).iter().copied().collect())
        .collect();
    (vals, vecs)
}

pub fn laplacian_rows(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut l = vec![vec![0.0; n]; n];
    for (u, v, w) in g.edges() {
        l[u][v] -= w;
        l[v][u] -= w;
        l[u][u] += w;
        l[v][v] += w;
    }
    l
}

pub fn normalized_rows(g: &Graph) -> Vec<Vec<f64>> {
    let l = laplacian_rows(g);
    let n = g.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| l[i][j] / (l[i][i] * l[j][j]).sqrt())
                .collect()
        })
        .collect()
}

/// Cut weight of a vertex set given as a membership mask.
pub fn cut_of(g: &Graph, inside: &[bool]) -> f64 {
    g.edges()
        .filter(|(u, v, _)| inside[*u] != inside[*v])
        .map(|(_, _, w)| w)
        .sum()
}

/// Every rooted binary tree with leaf set `leaves` (children unordered).
pub fn all_trees(leaves: &[usize]) -> Vec<TreeShape> {
    if leaves.len() == 1 {
        return vec![TreeShape::Leaf(leaves[0])];
    }
    let rest = &leaves[1..];
    let mut out = Vec::new();
    // left part holds leaves[0] plus a proper subset of the rest
    for mask in 0..(1u32 << rest.len()) - 1 {
        let mut left = vec![leaves[0]];
        let mut right = Vec::new();
        for (i, &v) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        for a in all_trees(&left) {
            for b in all_trees(&right) {
                out.push(TreeShape::join(a.clone(), b));
            }
        }
    }
    out
}

/// Congestion of a nested tree, computed without the library's tree type.
pub fn shape_congestion(g: &Graph, shape: &TreeShape, is_root: bool) -> f64 {
    let mut inside = vec![false; g.n()];
    for v in shape.leaves() {
        inside[v] = true;
    }
    let own = if is_root { 0.0 } else { cut_of(g, &inside) };
    match shape {
        TreeShape::Leaf(_) => own,
        TreeShape::Join(a, b) => own
            .max(shape_congestion(g, a, false))
            .max(shape_congestion(g, b, false)),
    }
}

/// Random weighted graph on `min_n..=max_n` vertices; edges kept with probability
/// `density`, weights in `{1, 2, 3}` or continuous.
pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            proptest::collection::vec((any::<bool>(), 0.25f64..3.0), pairs),
        )
            .prop_map(|(n, picks)| {
                let mut g = Graph::new(n).unwrap();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        let (keep, w) = picks[k];
                        k += 1;
                        if keep {
                            g.add_edge(u, v, w).unwrap();
                        }
                    }
                }
                g
            })
    })
}

/// `arb_graph` conditioned on connectivity by adding a path through all
/// vertices in index order.
pub fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(min_n, max_n).prop_map(|mut g| {
        for v in 1..g.n() {
            g.add_edge(v - 1, v, 1.0).unwrap();
        }
        g
    })
}
