//! Contraction trees and their congestion.
//!
//! A contraction tree is a rooted binary tree whose leaves are the vertices
//! of the graph. Every node stands for the subset of leaves below it, i.e.
//! an intermediate tensor whose rank is the weight of the cut that subset
//! induces. The congestion of a tree is the largest such cut; the root cut
//! is empty and contributes 0.

mod builders;
mod oracle;

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Graph, Result};

pub use builders::{hsc, hybrid_sc_equipartition, recursive_equipartition, root_balance};
pub use oracle::{
    oracle_min_congestion, oracle_optimal_tree, ORACLE_DEFAULT_LIMIT, ORACLE_HARD_CAP,
};

/// Nested form of a binary tree over vertex leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeShape {
    Leaf(usize),
    Join(Box<TreeShape>, Box<TreeShape>),
}

impl TreeShape {
    pub fn join(left: TreeShape, right: TreeShape) -> TreeShape {
        TreeShape::Join(Box::new(left), Box::new(right))
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(s) = stack.pop() {
            match s {
                TreeShape::Leaf(v) => out.push(*v),
                TreeShape::Join(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
            }
        }
        out
    }
}

/// `(0 1)`-style nesting, leaves as bare indices.
impl fmt::Display for TreeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeShape::Leaf(v) => write!(f, "{v}"),
            TreeShape::Join(a, b) => write!(f, "({a} {b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    /// Vertices below this node, ascending.
    pub subset: Vec<usize>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// Rooted binary tree with leaves in bijection with `V(G)`.
///
/// Trees built through [`ContractionTree::from_shape`] number their nodes in
/// pre-order, so a node always has a smaller id than its descendants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionTree {
    pub nodes: Vec<TreeNode>,
    pub root: usize,
    /// `leaf_map[v]` is the leaf node holding vertex `v`.
    pub leaf_map: Vec<usize>,
}

impl ContractionTree {
    /// Builds a tree on `n` vertices from its nested form, checking that the
    /// leaves are exactly `0..n`, each once.
    pub fn from_shape(n: usize, shape: &TreeShape) -> Result<Self> {
        let mut seen = vec![false; n];
        for v in shape.leaves() {
            if v >= n {
                return Err(Error::TreeMismatch("leaf index out of range"));
            }
            if core::mem::replace(&mut seen[v], true) {
                return Err(Error::TreeMismatch("vertex appears on two leaves"));
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::TreeMismatch("vertex missing from tree"));
        }
        let mut nodes = Vec::with_capacity(2 * n - 1);
        let mut leaf_map = vec![0; n];
        push_shape(shape, None, &mut nodes, &mut leaf_map);
        Ok(ContractionTree {
            nodes,
            root: 0,
            leaf_map,
        })
    }

    /// Assembles a tree from raw nodes without any checking; see
    /// [`validate_tree`]. `leaf_map` is filled from singleton leaves.
    pub fn from_parts(nodes: Vec<TreeNode>, root: usize) -> Self {
        let n = nodes
            .iter()
            .flat_map(|x| x.subset.iter().copied())
            .max()
            .map_or(0, |m| m + 1);
        let mut leaf_map = vec![usize::MAX; n];
        for (id, node) in nodes.iter().enumerate() {
            if node.children.is_empty() && node.subset.len() == 1 {
                leaf_map[node.subset[0]] = id;
            }
        }
        ContractionTree {
            nodes,
            root,
            leaf_map,
        }
    }

    pub fn num_leaves(&self) -> usize {
        self.leaf_map.len()
    }

    /// Nested form; assumes a valid tree.
    pub fn shape(&self) -> TreeShape {
        self.shape_at(self.root)
    }

    fn shape_at(&self, id: usize) -> TreeShape {
        let node = &self.nodes[id];
        match node.children.as_slice() {
            [a, b] => TreeShape::join(self.shape_at(*a), self.shape_at(*b)),
            _ => TreeShape::Leaf(node.subset[0]),
        }
    }
}

impl fmt::Display for ContractionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape())
    }
}

fn push_shape(
    shape: &TreeShape,
    parent: Option<usize>,
    nodes: &mut Vec<TreeNode>,
    leaf_map: &mut [usize],
) -> usize {
    let id = nodes.len();
    nodes.push(TreeNode {
        subset: Vec::new(),
        parent,
        children: Vec::new(),
    });
    match shape {
        TreeShape::Leaf(v) => {
            leaf_map[*v] = id;
            nodes[id].subset.push(*v);
        }
        TreeShape::Join(a, b) => {
            let l = push_shape(a, Some(id), nodes, leaf_map);
            let r = push_shape(b, Some(id), nodes, leaf_map);
            let mut subset = nodes[l].subset.clone();
            subset.extend_from_slice(&nodes[r].subset);
            subset.sort_unstable();
            nodes[id].subset = subset;
            nodes[id].children = vec![l, r];
        }
    }
    id
}

/// A broken [`ContractionTree`] invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    RootOutOfRange,
    RootHasParent,
    /// Root subset is not exactly `V(G)`.
    RootNotFull,
    /// Internal node without exactly two children.
    Arity {
        node: usize,
        children: usize,
    },
    /// Children subsets do not partition the parent subset.
    NotPartition {
        node: usize,
    },
    ParentLink {
        node: usize,
    },
    ChildOutOfRange {
        node: usize,
    },
    LeafNotSingleton {
        node: usize,
    },
    Unreachable {
        node: usize,
    },
    /// A vertex with no leaf.
    MissingLeaf {
        vertex: usize,
    },
    DuplicateLeaf {
        vertex: usize,
    },
    VertexOutOfRange {
        node: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RootOutOfRange => write!(f, "root id out of range"),
            Violation::RootHasParent => write!(f, "root has a parent"),
            Violation::RootNotFull => write!(f, "root subset is not the full vertex set"),
            Violation::Arity { node, children } => {
                write!(f, "node {node} has {children} children, expected 2")
            }
            Violation::NotPartition { node } => {
                write!(f, "children of node {node} do not partition it")
            }
            Violation::ParentLink { node } => {
                write!(f, "node {node} has an inconsistent parent link")
            }
            Violation::ChildOutOfRange { node } => write!(f, "node {node} names a missing child"),
            Violation::LeafNotSingleton { node } => write!(f, "leaf {node} is not a singleton"),
            Violation::Unreachable { node } => {
                write!(f, "node {node} is not reachable from the root")
            }
            Violation::MissingLeaf { vertex } => write!(f, "vertex {vertex} has no leaf"),
            Violation::DuplicateLeaf { vertex } => write!(f, "vertex {vertex} has several leaves"),
            Violation::VertexOutOfRange { node } => {
                write!(f, "node {node} holds an out-of-range vertex")
            }
        }
    }
}

/// Every broken invariant of `t` as a tree for `g`; empty when valid.
pub fn validate_tree(g: &Graph, t: &ContractionTree) -> Vec<Violation> {
    let n = g.n();
    let mut out = Vec::new();
    if t.root >= t.nodes.len() {
        out.push(Violation::RootOutOfRange);
        return out;
    }
    if t.nodes[t.root].parent.is_some() {
        out.push(Violation::RootHasParent);
    }
    let full: Vec<usize> = (0..n).collect();
    if t.nodes[t.root].subset != full {
        out.push(Violation::RootNotFull);
    }

    let mut reached = vec![false; t.nodes.len()];
    let mut stack = vec![t.root];
    while let Some(id) = stack.pop() {
        if core::mem::replace(&mut reached[id], true) {
            continue;
        }
        stack.extend(
            t.nodes[id]
                .children
                .iter()
                .copied()
                .filter(|&c| c < t.nodes.len()),
        );
    }

    let mut leaf_count = vec![0usize; n];
    for (id, node) in t.nodes.iter().enumerate() {
        if node.subset.iter().any(|&v| v >= n) {
            out.push(Violation::VertexOutOfRange { node: id });
            continue;
        }
        if node.children.is_empty() {
            if node.subset.len() == 1 {
                if reached[id] {
                    leaf_count[node.subset[0]] += 1;
                }
            } else {
                out.push(Violation::LeafNotSingleton { node: id });
            }
            continue;
        }
        if node.children.len() != 2 {
            out.push(Violation::Arity {
                node: id,
                children: node.children.len(),
            });
        }
        if node.children.iter().any(|&c| c >= t.nodes.len()) {
            out.push(Violation::ChildOutOfRange { node: id });
            continue;
        }
        for &c in &node.children {
            if t.nodes[c].parent != Some(id) {
                out.push(Violation::ParentLink { node: c });
            }
        }
        let mut union: Vec<usize> = node
            .children
            .iter()
            .flat_map(|&c| t.nodes[c].subset.iter().copied())
            .collect();
        union.sort_unstable();
        let mut own = node.subset.clone();
        own.sort_unstable();
        if union != own {
            out.push(Violation::NotPartition { node: id });
        }
    }
    for (vertex, &c) in leaf_count.iter().enumerate() {
        match c {
            0 => out.push(Violation::MissingLeaf { vertex }),
            1 => {}
            _ => out.push(Violation::DuplicateLeaf { vertex }),
        }
    }

    out.extend(
        reached
            .iter()
            .enumerate()
            .filter(|(_, &r)| !r)
            .map(|(node, _)| Violation::Unreachable { node }),
    );
    out
}

/// Congestion certificate of one tree.
#[derive(Debug, Clone, PartialEq)]
pub struct CongestionCert {
    /// Maximum over non-root nodes of the node's cut weight.
    pub congestion: f64,
    /// Smallest node id attaining the maximum (the root for one-vertex graphs).
    pub argmax_node: usize,
    /// Cut weight of every node; the root entry is 0.
    pub per_node_cut: Vec<f64>,
}

/// Evaluates the congestion of `t` on `g`.
pub fn congestion(g: &Graph, t: &ContractionTree) -> Result<CongestionCert> {
    if !validate_tree(g, t).is_empty() {
        return Err(Error::TreeMismatch(
            "tree is not a valid contraction tree for this graph",
        ));
    }
    let per_node_cut: Vec<f64> = t
        .nodes
        .iter()
        .enumerate()
        .map(|(id, node)| {
            if id == t.root {
                0.0
            } else {
                g.cut_weight(&node.subset)
            }
        })
        .collect();
    let mut argmax_node = t.root;
    let mut best = 0.0;
    for (id, &c) in per_node_cut.iter().enumerate() {
        if id != t.root && (c > best || argmax_node == t.root) {
            best = c;
            argmax_node = id;
        }
    }
    Ok(CongestionCert {
        congestion: best,
        argmax_node,
        per_node_cut,
    })
}
