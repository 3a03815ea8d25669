//! Tree constructions: hierarchical spectral clustering, spectral cut plus
//! equipartitioning, and plain recursive equipartitioning.

use alloc::vec::Vec;

use super::{ContractionTree, TreeShape};
use crate::clustering::{fiedler_order, spectral_clustering, sweep_cut_2way, sweep_prefix};
use crate::{Error, Graph, Result};

fn need_two(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        Err(Error::TooFewVertices {
            needed: 2,
            got: g.n(),
        })
    } else {
        Ok(())
    }
}

/// Recursively splits `subset` with `split` until singletons remain.
fn grow<F>(subset: Vec<usize>, split: &mut F) -> Result<TreeShape>
where
    F: FnMut(&[usize]) -> Result<(Vec<usize>, Vec<usize>)>,
{
    if subset.len() == 1 {
        return Ok(TreeShape::Leaf(subset[0]));
    }
    let (a, b) = split(&subset)?;
    debug_assert!(!a.is_empty() && !b.is_empty());
    Ok(TreeShape::join(grow(a, split)?, grow(b, split)?))
}

/// Splits off the smallest connected component (lowest vertex on ties).
/// `comps` are components of the subgraph, in local indices.
fn split_component(subset: &[usize], comps: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
    // components come ordered by smallest member, so min_by_key keeps the first
    let smallest = comps
        .iter()
        .min_by_key(|c| c.len())
        .expect("at least one component");
    let mut inside = alloc::vec![false; subset.len()];
    for &i in smallest {
        inside[i] = true;
    }
    partition_local(subset, &inside)
}

fn partition_local(subset: &[usize], inside: &[bool]) -> (Vec<usize>, Vec<usize>) {
    let a: Vec<usize> = subset
        .iter()
        .zip(inside)
        .filter(|(_, &b)| b)
        .map(|(&v, _)| v)
        .collect();
    let b: Vec<usize> = subset
        .iter()
        .zip(inside)
        .filter(|(_, &b)| !b)
        .map(|(&v, _)| v)
        .collect();
    // part holding the smallest vertex goes left
    if a.first() <= b.first() {
        (a, b)
    } else {
        (b, a)
    }
}

/// Two-way split of `subset` by the sweep cut of its induced subgraph, or by
/// splitting off a component when the subgraph is disconnected.
fn sweep_split(g: &Graph, subset: &[usize], normalized: bool) -> Result<(Vec<usize>, Vec<usize>)> {
    if subset.len() == 2 {
        return Ok((alloc::vec![subset[0]], alloc::vec![subset[1]]));
    }
    let sub = g.induced_subgraph(subset)?;
    let comps = sub.components();
    if comps.len() > 1 {
        return Ok(split_component(subset, &comps));
    }
    let cut = sweep_cut_2way(&sub, normalized)?;
    Ok(partition_local(subset, &cut.side))
}

/// Hierarchical spectral clustering.
///
/// The root is split three ways by spectral clustering (`k = 3`); the two
/// clusters whose union has the smallest cut are joined under an extra node
/// so the tree stays binary. Every remaining block of two or more vertices
/// is split by the sweep cut of its induced subgraph. Disconnected pieces,
/// including a disconnected input, are split one component at a time.
pub fn hsc(g: &Graph, seed: u64, normalized: bool) -> Result<ContractionTree> {
    need_two(g)?;
    let n = g.n();
    let all: Vec<usize> = (0..n).collect();
    let mut split = |s: &[usize]| sweep_split(g, s, normalized);
    let comps = g.components();
    let shape = if n == 2 || comps.len() > 1 {
        grow(all, &mut split)?
    } else {
        let clusters = spectral_clustering(g, 3, seed, normalized)?.clusters();
        let (i, j, k) = pick_pair(g, &clusters);
        let pair = TreeShape::join(
            grow(clusters[i].clone(), &mut split)?,
            grow(clusters[j].clone(), &mut split)?,
        );
        TreeShape::join(pair, grow(clusters[k].clone(), &mut split)?)
    };
    ContractionTree::from_shape(n, &shape)
}

type Triple = (usize, usize, usize);

/// Pair of clusters whose union has the smallest cut; ties go to the
/// lexicographically smaller sorted union.
fn pick_pair(g: &Graph, clusters: &[Vec<usize>]) -> (usize, usize, usize) {
    let mut best: Option<(f64, Vec<usize>, Triple)> = None;
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let mut union = clusters[i].clone();
        union.extend_from_slice(&clusters[j]);
        union.sort_unstable();
        let w = g.cut_weight(&union);
        let better = match &best {
            None => true,
            Some((bw, bu, _)) => w < *bw || (w == *bw && union < *bu),
        };
        if better {
            best = Some((w, union, (i, j, k)));
        }
    }
    best.expect("three candidate pairs").2
}

/// Halves `order` recursively, the first half
/// taking the extra vertex on odd sizes.
fn halve(order: &[usize]) -> TreeShape {
    if order.len() == 1 {
        return TreeShape::Leaf(order[0]);
    }
    let mid = order.len().div_ceil(2);
    TreeShape::join(halve(&order[..mid]), halve(&order[mid..]))
}

/// Spectral cut followed by equipartitioning.
///
/// Vertices are ordered by Fiedler value; the root splits at the sweep cut,
/// so both sides are contiguous blocks of that order, and every block below
/// is halved at its midpoint.
pub fn hybrid_sc_equipartition(g: &Graph, normalized: bool) -> Result<ContractionTree> {
    need_two(g)?;
    let order = fiedler_order(g, normalized)?;
    let cut = sweep_prefix(g, &order, normalized)?;
    let s = cut.side.iter().filter(|&&b| b).count();
    let shape = TreeShape::join(halve(&order[..s]), halve(&order[s..]));
    ContractionTree::from_shape(g.n(), &shape)
}

/// Index-order equipartition into thirds `S1, S2, S3` of sizes `⌈n/3⌉`,
/// `⌈(n − |S1|)/2⌉` and the rest, arranged as `(S1, (S2, S3))`, each block
/// then halved recursively. For `n = 2` the root is the single split.
pub fn recursive_equipartition(g: &Graph) -> Result<ContractionTree> {
    need_two(g)?;
    let n = g.n();
    let order: Vec<usize> = (0..n).collect();
    let n1 = n.div_ceil(3);
    let n2 = (n - n1).div_ceil(2);
    let shape = if n1 + n2 == n {
        TreeShape::join(halve(&order[..n1]), halve(&order[n1..]))
    } else {
        TreeShape::join(
            halve(&order[..n1]),
            TreeShape::join(halve(&order[n1..n1 + n2]), halve(&order[n1 + n2..])),
        )
    };
    ContractionTree::from_shape(n, &shape)
}

/// Balance `min(|A|, |B|)/n` of the root split.
pub fn root_balance(t: &ContractionTree) -> f64 {
    let root = &t.nodes[t.root];
    match root.children.as_slice() {
        [a, b] => {
            let (a, b) = (t.nodes[*a].subset.len(), t.nodes[*b].subset.len());
            a.min(b) as f64 / (a + b) as f64
        }
        _ => 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contraction::{congestion, validate_tree};
    use crate::generators::{fig1_example, hypercube, path};
    use alloc::string::ToString;

    #[test]
    fn k2_trees() {
        let g = path(2).unwrap();
        for t in [
            hsc(&g, 0, false).unwrap(),
            hybrid_sc_equipartition(&g, false).unwrap(),
            recursive_equipartition(&g).unwrap(),
        ] {
            assert_eq!(t.nodes.len(), 3);
            assert_eq!(congestion(&g, &t).unwrap().congestion, 1.0);
        }
    }

    #[test]
    fn q4_hsc() {
        let g = hypercube(4).unwrap();
        let t = hsc(&g, 0, false).unwrap();
        assert!(validate_tree(&g, &t).is_empty());
        assert_eq!(congestion(&g, &t).unwrap().congestion, 8.0);
    }

    #[test]
    fn p4_hybrid_splits_middle() {
        let g = path(4).unwrap();
        let t = hybrid_sc_equipartition(&g, false).unwrap();
        let root = &t.nodes[t.root];
        let left = &t.nodes[root.children[0]].subset;
        assert!(left == &[0, 1] || left == &[2, 3]);
        assert_eq!(congestion(&g, &t).unwrap().congestion, 2.0);
    }

    #[test]
    fn equipartition_thirds() {
        let g = path(6).unwrap();
        let t = recursive_equipartition(&g).unwrap();
        assert_eq!(t.to_string(), "((0 1) ((2 3) (4 5)))");
        let t7 = recursive_equipartition(&path(7).unwrap()).unwrap();
        assert_eq!(t7.to_string(), "(((0 1) 2) ((3 4) (5 6)))");
        assert!(recursive_equipartition(&Graph::new(1).unwrap()).is_err());
    }

    #[test]
    fn hsc_disconnected_input() {
        let g = Graph::from_unit_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let t = hsc(&g, 1, false).unwrap();
        assert!(validate_tree(&g, &t).is_empty());
        assert_eq!(congestion(&g, &t).unwrap().congestion, 2.0);
        assert_eq!(hybrid_sc_equipartition(&g, false), Err(Error::Disconnected));
    }

    #[test]
    fn fig1_builders_valid() {
        let (g, _) = fig1_example();
        for normalized in [false, true] {
            for t in [
                hsc(&g, 3, normalized).unwrap(),
                hybrid_sc_equipartition(&g, normalized).unwrap(),
            ] {
                assert!(validate_tree(&g, &t).is_empty());
            }
        }
    }
}
