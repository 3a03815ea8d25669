//! Weighted undirected multigraphs.
//!
//! Parallel edges are folded into a single weighted edge on insertion, so a
//! bundle of `c` edges of weight `w` is stored as one edge of weight `c·w`.
//! Everything the congestion bounds look at (degrees, cuts, volumes,
//! Laplacians) only depends on these summed weights.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::SymMatrix;
use crate::{Error, Result};

/// Weighted undirected graph without self-loops on vertices `0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    /// Keyed by `(min, max)` endpoint.
    edges: BTreeMap<(usize, usize), f64>,
    degrees: Vec<f64>,
    name: Option<String>,
}

impl Graph {
    /// Edgeless graph on `n ≥ 1` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Graph {
            n,
            edges: BTreeMap::new(),
            degrees: vec![0.0; n],
            name: None,
        })
    }

    /// Builds a graph from `(u, v, w)` triples; repeated pairs are summed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    /// Unit-weight convenience wrapper around [`Graph::from_edges`].
    pub fn from_unit_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(n, edges.into_iter().map(|(u, v)| (u, v, 1.0)))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Adds weight `w` to the edge `{u, v}`.
    pub fn add_edge(&mut self, u: usize, v: usize, w: f64) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        if !(w.is_finite() && w > 0.0) {
            return Err(Error::InvalidWeight { u, v, weight: w });
        }
        let key = if u < v { (u, v) } else { (v, u) };
        *self.edges.entry(key).or_insert(0.0) += w;
        self.degrees[u] += w;
        self.degrees[v] += w;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct adjacent pairs.
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Sum of all edge weights (`m` for unit-weight graphs; `Vol(V) = 2m`).
    pub fn total_weight(&self) -> f64 {
        self.edges.values().sum()
    }

    /// Edges as `(u, v, w)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.edges.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    /// Weight of `{u, v}`, zero when absent.
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.get(&key).copied().unwrap_or(0.0)
    }

    pub fn degree(&self, v: usize) -> Result<f64> {
        self.check_vertex(v)?;
        Ok(self.degrees[v])
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    /// Maximum weighted degree `Δ(G)`.
    pub fn max_degree(&self) -> f64 {
        self.degrees.iter().copied().fold(0.0, f64::max)
    }

    pub fn min_degree(&self) -> f64 {
        self.degrees.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// `Some(d)` when every vertex has weighted degree exactly `d`.
    pub fn regular_degree(&self) -> Option<f64> {
        let d = self.degrees[0];
        self.degrees.iter().all(|&x| x == d).then_some(d)
    }

    /// Neighbor lists with weights, sorted by neighbor index.
    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (u, v, w) in self.edges() {
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        for row in &mut adj {
            row.sort_by_key(|&(v, _)| v);
        }
        adj
    }

    /// Membership mask for a vertex list. Panics on out-of-range vertices.
    pub fn mask(&self, set: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for &v in set {
            mask[v] = true;
        }
        mask
    }

    /// Total weight of edges with exactly one endpoint in `set`.
    pub fn cut_weight(&self, set: &[usize]) -> f64 {
        self.cut_weight_mask(&self.mask(set))
    }

    pub fn cut_weight_mask(&self, mask: &[bool]) -> f64 {
        debug_assert_eq!(mask.len(), self.n);
        self.edges()
            .filter(|&(u, v, _)| mask[u] != mask[v])
            .map(|(_, _, w)| w)
            .sum()
    }

    /// `Vol(S)`: sum of degrees over `set`.
    pub fn volume(&self, set: &[usize]) -> f64 {
        set.iter().map(|&v| self.degrees[v]).sum()
    }

    /// `L = D − A`.
    pub fn laplacian(&self) -> SymMatrix {
        let mut l = SymMatrix::zeros(self.n);
        for (v, &d) in self.degrees.iter().enumerate() {
            l.set(v, v, d);
        }
        for (u, v, w) in self.edges() {
            l.set(u, v, -w);
        }
        l
    }

    /// `I − D^{-1/2} A D^{-1/2}`; undefined when a vertex is isolated.
    pub fn normalized_laplacian(&self) -> Result<SymMatrix> {
        if let Some(vertex) = self.degrees.iter().position(|&d| d <= 0.0) {
            return Err(Error::IsolatedVertex { vertex });
        }
        let mut l = SymMatrix::zeros(self.n);
        for v in 0..self.n {
            l.set(v, v, 1.0);
        }
        for (u, v, w) in self.edges() {
            l.set(u, v, -w / libm::sqrt(self.degrees[u] * self.degrees[v]));
        }
        Ok(l)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(v, _) in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            local[v] = i;
        }
        let mut sub = Graph::new(vertices.len())?;
        for (u, v, w) in self.edges() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                sub.add_edge(local[u], local[v], w)?;
            }
        }
        Ok(sub)
    }

    /// Cartesian product `self □ other`; vertex `(u, v)` is `u·|V(other)| + v`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let n2 = other.n;
        let mut g = Graph::new(self.n * n2).expect("both factors are nonempty");
        for u in 0..self.n {
            for (a, b, w) in other.edges() {
                g.add_edge(u * n2 + a, u * n2 + b, w)
                    .expect("valid product edge");
            }
        }
        for (a, b, w) in self.edges() {
            for v in 0..n2 {
                g.add_edge(a * n2 + v, b * n2 + v, w)
                    .expect("valid product edge");
            }
        }
        g
    }
}
