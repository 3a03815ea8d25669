//! Seeded graph generators for the experiment families.
//!
//! Every random generator draws from a [`ChaCha8Rng`] seeded with
//! `seed_from_u64(seed)`, so output is a pure function of `(params, seed)`.
//! The algorithm identifier [`RNG_ALGORITHM`] is written next to experiment
//! output so runs can be replayed.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::contraction::{ContractionTree, TreeShape};
use crate::{Error, Graph, Result};

pub const RNG_ALGORITHM: &str = "chacha8-rand_chacha0.9";

/// Configuration-model attempts before giving up.
pub const RRG_MAX_RETRIES: usize = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Q_d` on `{0,1}^d`; vertex index is the binary encoding, bit `i` is
/// coordinate `i`.
pub fn hypercube(d: u32) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "hypercube dimension must be at least 1",
        ));
    }
    if d > 20 {
        return Err(Error::InvalidParameter("hypercube dimension above 20"));
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|v| {
        (0..d)
            .map(move |i| (v, v ^ (1 << i)))
            .filter(|&(a, b)| a < b)
    });
    Ok(Graph::from_unit_edges(n, edges)?.with_name(format!("Q{d}")))
}

/// Path `P_k` on `k ≥ 1` vertices.
pub fn path(k: usize) -> Result<Graph> {
    Ok(Graph::from_unit_edges(k, (1..k).map(|i| (i - 1, i)))?.with_name(format!("P{k}")))
}

/// Cycle `C_k`. For `k = 2` the two parallel edges fold into one edge of
/// weight 2, which keeps the cycle spectrum `4 sin²(qπ/k)`.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter("cycle needs at least 2 vertices"));
    }
    let edges = (0..k).map(|i| (i, (i + 1) % k));
    Ok(Graph::from_unit_edges(k, edges)?.with_name(format!("C{k}")))
}

/// Complete graph `K_k`.
pub fn complete(k: usize) -> Result<Graph> {
    let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
    Ok(Graph::from_unit_edges(k, edges)?.with_name(format!("K{k}")))
}

/// Two cliques `K_a` and `K_b` joined by one edge between vertex `a − 1`
/// and vertex `a`.
pub fn barbell(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("barbell cliques must be nonempty"));
    }
    let left = (0..a).flat_map(|u| (u + 1..a).map(move |v| (u, v)));
    let right = (a..a + b).flat_map(move |u| (u + 1..a + b).map(move |v| (u, v)));
    let edges = left.chain(right).chain(core::iter::once((a - 1, a)));
    Ok(Graph::from_unit_edges(a + b, edges)?.with_name(format!("barbell{a}-{b}")))
}

/// `P_m □ P_n`, or `C_m □ C_n` when `periodic`.
///
/// A periodic side of length 2 is the doubled edge `C_2` (weight 2).
pub fn grid(m: usize, n: usize, periodic: bool) -> Result<Graph> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter("grid sides must be at least 2"));
    }
    let g = if periodic {
        cycle(m)?.cartesian_product(&cycle(n)?)
    } else {
        path(m)?.cartesian_product(&path(n)?)
    };
    let tag = if periodic { "C" } else { "P" };
    Ok(g.with_name(format!("{tag}{m}x{tag}{n}")))
}

/// Uniform simple `d`-regular graph on `n` vertices by the configuration
/// model, rejecting every pairing with a loop or a repeated pair.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter(
            "random regular graph needs n, d >= 1",
        ));
    }
    if d >= n {
        return Err(Error::InvalidParameter("random regular graph needs d < n"));
    }
    if !(n * d).is_multiple_of(2) {
        return Err(Error::InvalidParameter(
            "random regular graph needs n*d even",
        ));
    }
    let mut rng = rng(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| core::iter::repeat_n(v, d)).collect();
    let mut seen = alloc::collections::BTreeSet::new();
    'attempt: for _ in 0..RRG_MAX_RETRIES {
        stubs.shuffle(&mut rng);
        seen.clear();
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
        }
        let g = Graph::from_unit_edges(n, seen.iter().copied())?;
        return Ok(g.with_name(format!("rrg{n}-{d}")));
    }
    Err(Error::RetriesExhausted {
        attempts: RRG_MAX_RETRIES,
    })
}

/// Erdős–Rényi `G(n, p)`: pairs visited in lexicographic order, each kept
/// with probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter("gnp needs n >= 2"));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter("gnp needs 0 < p < 1"));
    }
    let mut rng = rng(seed);
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v, 1.0)?;
            }
        }
    }
    Ok(g.with_name(format!("gnp{n}-{p}")))
}

/// How the initial and final state tensors of a circuit attach.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RqcTerminals {
    /// One degree-1 node per qubit on each side (`2q` terminals).
    PerQubit,
    /// One rank-`q` node per side.
    Single,
}

/// Number of gate nodes in an `rqc(q, depth, k)` circuit.
pub fn rqc_gate_count(q: usize, depth: usize, k: usize) -> usize {
    depth * (q / k)
}

/// Tensor-network graph of a random circuit of `k`-qubit gates.
///
/// Each of the `depth` layers shuffles the `q` wires and groups the first
/// `⌊q/k⌋·k` of them into gates; leftover wires idle through the layer.
/// Every wire runs input terminal → its gates in layer order → output
/// terminal, one unit edge per segment. Node order: input terminals, gates
/// (layer by layer), output terminals.
pub fn rqc(q: usize, depth: usize, k: usize, seed: u64, terminals: RqcTerminals) -> Result<Graph> {
    if k < 2 || k > q {
        return Err(Error::InvalidParameter("rqc needs 2 <= k <= q"));
    }
    if depth == 0 {
        return Err(Error::InvalidParameter("rqc needs depth >= 1"));
    }
    let per_layer = q / k;
    let gates = rqc_gate_count(q, depth, k);
    let side = match terminals {
        RqcTerminals::PerQubit => q,
        RqcTerminals::Single => 1,
    };
    let n = 2 * side + gates;
    let input = |w: usize| if side == 1 { 0 } else { w };
    let output = |w: usize| side + gates + if side == 1 { 0 } else { w };

    let mut rng = rng(seed);
    let mut g = Graph::new(n)?;
    let mut last: Vec<usize> = (0..q).map(input).collect();
    let mut wires: Vec<usize> = (0..q).collect();
    let mut next_gate = side;
    for _ in 0..depth {
        wires.shuffle(&mut rng);
        for chunk in wires.chunks_exact(k).take(per_layer) {
            let gate = next_gate;
            next_gate += 1;
            for &w in chunk {
                g.add_edge(last[w], gate, 1.0)?;
                last[w] = gate;
            }
        }
    }
    for (w, &from) in last.iter().enumerate() {
        g.add_edge(from, output(w), 1.0)?;
    }
    Ok(g.with_name(format!("rqc{q}-{depth}-{k}")))
}

/// Six-node example network and its contraction tree
/// `((0 1) ((2 3) (4 5)))`, whose congestion is 4.
pub fn fig1_example() -> (Graph, ContractionTree) {
    // drawing labels 1..6 shifted to 0..5
    let edges = [(0, 1), (1, 2), (2, 5), (5, 3), (3, 2), (2, 4), (4, 5)];
    let g = Graph::from_unit_edges(6, edges)
        .expect("static edge list")
        .with_name("fig1");
    let shape = TreeShape::join(
        TreeShape::join(TreeShape::Leaf(0), TreeShape::Leaf(1)),
        TreeShape::join(
            TreeShape::join(TreeShape::Leaf(2), TreeShape::Leaf(3)),
            TreeShape::join(TreeShape::Leaf(4), TreeShape::Leaf(5)),
        ),
    );
    let tree = ContractionTree::from_shape(6, &shape).expect("static tree");
    (g, tree)
}

/// One generator invocation.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Hypercube {
        d: u32,
    },
    Path {
        k: usize,
    },
    Cycle {
        k: usize,
    },
    Complete {
        k: usize,
    },
    Grid {
        m: usize,
        n: usize,
        periodic: bool,
    },
    RandomRegular {
        n: usize,
        d: usize,
    },
    Gnp {
        n: usize,
        p: f64,
    },
    Rqc {
        q: usize,
        depth: usize,
        k: usize,
        terminals: RqcTerminals,
    },
    Fig1,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        GenSpec { family, seed }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.generate_with_seed(self.seed)
    }

    fn generate_with_seed(&self, seed: u64) -> Result<Graph> {
        match self.family {
            Family::Hypercube { d } => hypercube(d),
            Family::Path { k } => path(k),
            Family::Cycle { k } => cycle(k),
            Family::Complete { k } => complete(k),
            Family::Grid { m, n, periodic } => grid(m, n, periodic),
            Family::RandomRegular { n, d } => random_regular(n, d, seed),
            Family::Gnp { n, p } => gnp(n, p, seed),
            Family::Rqc {
                q,
                depth,
                k,
                terminals,
            } => rqc(q, depth, k, seed, terminals),
            Family::Fig1 => Ok(fig1_example().0),
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(
            self.family,
            Family::RandomRegular { .. } | Family::Gnp { .. } | Family::Rqc { .. }
        )
    }

    /// Draws until the sample is connected. Attempt `a` uses seed
    /// `seed + a·0x9E3779B97F4A7C15` (wrapping), so attempt 0 is
    /// [`GenSpec::generate`]. Returns the graph and the attempt index.
    pub fn generate_connected(&self, max_attempts: usize) -> Result<(Graph, usize)> {
        for attempt in 0..max_attempts {
            let seed = self
                .seed
                .wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let g = self.generate_with_seed(seed)?;
            if g.is_connected() {
                return Ok((g, attempt));
            }
            if !self.is_random() {
                return Err(Error::Disconnected);
            }
        }
        Err(Error::RetriesExhausted {
            attempts: max_attempts,
        })
    }

    /// `key=value` pairs describing the family, for file headers.
    pub fn describe(&self) -> String {
        let body = match &self.family {
            Family::Hypercube { d } => format!("family=hypercube d={d}"),
            Family::Path { k } => format!("family=path k={k}"),
            Family::Cycle { k } => format!("family=cycle k={k}"),
            Family::Complete { k } => format!("family=complete k={k}"),
            Family::Grid { m, n, periodic } => {
                format!("family=grid m={m} n={n} periodic={periodic}")
            }
            Family::RandomRegular { n, d } => format!("family=rrg n={n} d={d}"),
            Family::Gnp { n, p } => format!("family=gnp n={n} p={p}"),
            Family::Rqc {
                q,
                depth,
                k,
                terminals,
            } => {
                let t = match terminals {
                    RqcTerminals::PerQubit => "per-qubit",
                    RqcTerminals::Single => "single",
                };
                format!("family=rqc q={q} depth={depth} k={k} terminals={t}")
            }
            Family::Fig1 => String::from("family=fig1"),
        };
        format!("{body} seed={} rng={RNG_ALGORITHM}", self.seed)
    }
}

/// Fixed-seed corpus of connected graphs on at most 12 vertices covering
/// every generator family, small enough for the exact oracle.
pub fn small_corpus() -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for d in 1..=3 {
        out.push(hypercube(d)?);
    }
    for k in 2..=12 {
        out.push(path(k)?);
        out.push(complete(k)?);
    }
    for k in 3..=12 {
        out.push(cycle(k)?);
    }
    for (m, n) in [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 3), (3, 4)] {
        out.push(grid(m, n, false)?);
        out.push(grid(m, n, true)?);
    }
    for (a, b) in [(3, 3), (3, 4), (4, 4), (4, 5), (5, 5), (4, 8)] {
        out.push(barbell(a, b)?);
    }
    let mut random = Vec::new();
    for seed in 0..6 {
        for n in (4..=12).step_by(2) {
            random.push(GenSpec::new(Family::RandomRegular { n, d: 3 }, seed));
        }
    }
    for seed in 0..3 {
        for n in 5..=12 {
            random.push(GenSpec::new(Family::RandomRegular { n, d: 4 }, seed));
        }
    }
    for seed in 0..5 {
        for n in 6..=12 {
            for p in [0.3, 0.5] {
                random.push(GenSpec::new(Family::Gnp { n, p }, seed));
            }
        }
    }
    for seed in 0..4 {
        for (q, depth) in [(2, 2), (3, 2), (3, 3), (4, 2)] {
            random.push(GenSpec::new(
                Family::Rqc {
                    q,
                    depth,
                    k: 2,
                    terminals: RqcTerminals::PerQubit,
                },
                seed,
            ));
        }
        for (q, depth) in [(4, 3), (5, 4)] {
            random.push(GenSpec::new(
                Family::Rqc {
                    q,
                    depth,
                    k: 2,
                    terminals: RqcTerminals::Single,
                },
                seed,
            ));
        }
    }
    for spec in random {
        out.push(spec.generate_connected(100)?.0);
    }
    out.push(fig1_example().0);
    Ok(out)
}
