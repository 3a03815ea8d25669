//! Spectral clustering, sweep cuts and cut statistics.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::generators::rng;
use crate::linalg::SIGN_TOL;
use crate::spectra::{fiedler_vector, low_eigenvectors};
use crate::{Error, Graph, Result};

/// Lloyd iterations before k-means stops regardless of convergence.
pub const KMEANS_MAX_ITER: usize = 100;

/// A vertex bipartition `(S, S̄)` with its cached statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct Cut {
    /// `side[v]` is true for `v ∈ S`.
    pub side: Vec<bool>,
    pub cut_weight: f64,
    /// `α_G(S) = e(S, S̄) / min(|S|, |S̄|)`.
    pub ratio: f64,
    /// `φ_G(S) = e(S, S̄) / min(Vol S, Vol S̄)`; infinite when one side has
    /// zero volume.
    pub conductance: f64,
    /// `min(|S|, |S̄|) / n`.
    pub balance: f64,
}

impl Cut {
    pub fn new(g: &Graph, side: Vec<bool>) -> Result<Self> {
        if side.len() != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                got: side.len(),
            });
        }
        let inside = side.iter().filter(|&&b| b).count();
        let outside = g.n() - inside;
        if inside == 0 || outside == 0 {
            return Err(Error::InvalidParameter("cut sides must both be nonempty"));
        }
        let cut_weight = g.cut_weight_mask(&side);
        let vol_in: f64 = (0..g.n())
            .filter(|&v| side[v])
            .map(|v| g.degrees()[v])
            .sum();
        let vol_out = g.volume_total() - vol_in;
        let small = inside.min(outside);
        Ok(Cut {
            cut_weight,
            ratio: cut_weight / small as f64,
            conductance: cut_weight / vol_in.min(vol_out),
            balance: small as f64 / g.n() as f64,
            side,
        })
    }

    pub fn from_set(g: &Graph, set: &[usize]) -> Result<Self> {
        Cut::new(g, g.mask(set))
    }

    /// Vertices of `S`, ascending.
    pub fn inside(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v]).collect()
    }

    pub fn outside(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| !self.side[v]).collect()
    }
}

impl Graph {
    /// `Vol(V) = 2m`.
    pub fn volume_total(&self) -> f64 {
        self.degrees().iter().sum()
    }
}

/// Assignment of vertices (or points) to `k` nonempty clusters.
///
/// Labels are renumbered by first appearance, so two partitions into the
/// same blocks compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub labels: Vec<usize>,
    pub k: usize,
}

impl Partition {
    pub fn from_labels(labels: Vec<usize>) -> Result<Self> {
        let mut map: Vec<Option<usize>> = Vec::new();
        let mut next = 0;
        let mut out = Vec::with_capacity(labels.len());
        for l in labels {
            if l >= map.len() {
                map.resize(l + 1, None);
            }
            let c = *map[l].get_or_insert_with(|| {
                next += 1;
                next - 1
            });
            out.push(c);
        }
        if out.is_empty() {
            return Err(Error::InvalidParameter("partition of nothing"));
        }
        Ok(Partition {
            labels: out,
            k: next,
        })
    }

    /// Members of every cluster, ascending within each.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &l) in self.labels.iter().enumerate() {
            out[l].push(v);
        }
        out
    }
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Lloyd's k-means with k-means++ seeding.
///
/// The first center is drawn uniformly, later ones with probability
/// proportional to squared distance (falling back to the farthest point when
/// every remaining distance is zero). Ties in assignment go to the lowest
/// cluster index. An emptied cluster takes the point farthest from its own
/// centroid among clusters with more than one member.
pub fn kmeans(points: &[Vec<f64>], k: usize, seed: u64) -> Result<Partition> {
    let n = points.len();
    if k == 0 || n < k {
        return Err(Error::InvalidClusterCount { k, n });
    }
    let dim = points[0].len();
    if let Some(bad) = points.iter().find(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: bad.len(),
        });
    }
    let mut rng = rng(seed);

    let mut centers: Vec<Vec<f64>> = Vec::with_capacity(k);
    centers.push(points[rng.random_range(0..n)].clone());
    let mut nearest: Vec<f64> = points.iter().map(|p| dist2(p, &centers[0])).collect();
    while centers.len() < k {
        let total: f64 = nearest.iter().sum();
        let pick = if total > 0.0 {
            let mut target = rng.random::<f64>() * total;
            let mut idx = n - 1;
            for (i, &w) in nearest.iter().enumerate() {
                if w > 0.0 && target < w {
                    idx = i;
                    break;
                }
                target -= w;
            }
            if nearest[idx] == 0.0 {
                argmax(&nearest)
            } else {
                idx
            }
        } else {
            argmax(&nearest)
        };
        centers.push(points[pick].clone());
        for (i, p) in points.iter().enumerate() {
            nearest[i] = nearest[i].min(dist2(p, &centers[centers.len() - 1]));
        }
    }

    let mut labels = vec![usize::MAX; n];
    for _ in 0..KMEANS_MAX_ITER {
        let mut changed = false;
        for (i, p) in points.iter().enumerate() {
            let mut best = 0;
            let mut best_d = f64::INFINITY;
            for (c, center) in centers.iter().enumerate() {
                let d = dist2(p, center);
                if d < best_d {
                    best_d = d;
                    best = c;
                }
            }
            if labels[i] != best {
                labels[i] = best;
                changed = true;
            }
        }
        changed |= repair_empty(points, &mut labels, &centers, k);
        recompute_centers(points, &labels, &mut centers);
        if !changed {
            break;
        }
    }
    Partition::from_labels(labels)
}

fn argmax(xs: &[f64]) -> usize {
    let mut best = 0;
    for (i, &x) in xs.iter().enumerate() {
        if x > xs[best] {
            best = i;
        }
    }
    best
}

fn recompute_centers(points: &[Vec<f64>], labels: &[usize], centers: &mut [Vec<f64>]) {
    let dim = points[0].len();
    let mut counts = vec![0usize; centers.len()];
    let mut sums = vec![vec![0.0; dim]; centers.len()];
    for (p, &l) in points.iter().zip(labels) {
        counts[l] += 1;
        for (s, x) in sums[l].iter_mut().zip(p) {
            *s += x;
        }
    }
    for (c, (sum, count)) in sums.into_iter().zip(counts).enumerate() {
        if count > 0 {
            centers[c] = sum.into_iter().map(|s| s / count as f64).collect();
        }
    }
}

fn repair_empty(points: &[Vec<f64>], labels: &mut [usize], centers: &[Vec<f64>], k: usize) -> bool {
    let mut repaired = false;
    loop {
        let mut counts = vec![0usize; k];
        for &l in labels.iter() {
            counts[l] += 1;
        }
        let Some(empty) = counts.iter().position(|&c| c == 0) else {
            return repaired;
        };
        let mut donor = None;
        let mut far = -1.0;
        for (i, p) in points.iter().enumerate() {
            if counts[labels[i]] > 1 {
                let d = dist2(p, &centers[labels[i]]);
                if d > far {
                    far = d;
                    donor = Some(i);
                }
            }
        }
        // n >= k guarantees a cluster with two members exists
        labels[donor.expect("some cluster has two members")] = empty;
        repaired = true;
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            got: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Spectral clustering into `k` parts: vertex `i` is embedded as
/// `(x^(2)_i, …, x^(k)_i)` from the eigenvectors of the `k − 1` smallest
/// nonzero eigenvalues, then clustered by [`kmeans`].
pub fn spectral_clustering(g: &Graph, k: usize, seed: u64, normalized: bool) -> Result<Partition> {
    if k < 2 || k > g.n() {
        return Err(Error::InvalidClusterCount { k, n: g.n() });
    }
    require_connected(g)?;
    let vectors = low_eigenvectors(g, k - 1, normalized)?;
    let points: Vec<Vec<f64>> = (0..g.n())
        .map(|i| vectors.iter().map(|v| v[i]).collect())
        .collect();
    kmeans(&points, k, seed)
}

/// Vertices sorted by Fiedler value, ties by index.
///
/// With `normalized` the key is `y_i / √deg(i)` for the `μ2` eigenvector
/// `y`, the ordering under which the conductance sweep bound holds.
pub fn fiedler_order(g: &Graph, normalized: bool) -> Result<Vec<usize>> {
    require_connected(g)?;
    let keys: Vec<f64> = if normalized {
        let y = fiedler_vector(g, true)?;
        y.iter()
            .zip(g.degrees())
            .map(|(y, d)| y / libm::sqrt(*d))
            .collect()
    } else {
        fiedler_vector(g, false)?
    };
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| keys[a].total_cmp(&keys[b]).then(a.cmp(&b)));
    Ok(order)
}

/// Best prefix cut of the Fiedler ordering: minimum cut-ratio, or minimum
/// conductance when `normalized`. Earliest prefix wins ties.
pub fn sweep_cut_2way(g: &Graph, normalized: bool) -> Result<Cut> {
    let order = fiedler_order(g, normalized)?;
    sweep_prefix(g, &order, normalized)
}

/// Sweep over the prefixes of an arbitrary vertex ordering.
pub fn sweep_prefix(g: &Graph, order: &[usize], normalized: bool) -> Result<Cut> {
    let n = g.n();
    let adj = g.adjacency();
    let total_vol = g.volume_total();
    let mut inside = vec![false; n];
    let (mut cut, mut vol) = (0.0, 0.0);
    let mut best = (f64::INFINITY, 0usize);
    for (i, &v) in order.iter().enumerate().take(n - 1) {
        let to_inside: f64 = adj[v]
            .iter()
            .filter(|(u, _)| inside[*u])
            .map(|(_, w)| w)
            .sum();
        cut += g.degrees()[v] - 2.0 * to_inside;
        vol += g.degrees()[v];
        inside[v] = true;
        let size = i + 1;
        let objective = if normalized {
            cut / vol.min(total_vol - vol)
        } else {
            cut / size.min(n - size) as f64
        };
        if best.1 == 0 || objective < best.0 - 1e-12 * best.0.abs().max(1.0) {
            best = (objective, size);
        }
    }
    let mut side = vec![false; n];
    for &v in &order[..best.1] {
        side[v] = true;
    }
    Cut::new(g, side)
}

/// Sign partition `(S⁺, S⁻)` of the Fiedler vector. Entries within `1e-9`
/// of zero go, in index order, to whichever side is currently smaller
/// (`S⁺` on a tie).
pub fn sign_partition(g: &Graph, normalized: bool) -> Result<(Vec<usize>, Vec<usize>)> {
    require_connected(g)?;
    let x = fiedler_vector(g, normalized)?;
    let mut plus: Vec<usize> = (0..g.n()).filter(|&i| x[i] > SIGN_TOL).collect();
    let mut minus: Vec<usize> = (0..g.n()).filter(|&i| x[i] < -SIGN_TOL).collect();
    for i in (0..g.n()).filter(|&i| x[i].abs() <= SIGN_TOL) {
        if plus.len() <= minus.len() {
            plus.push(i);
        } else {
            minus.push(i);
        }
    }
    plus.sort_unstable();
    minus.sort_unstable();
    Ok((plus, minus))
}

/// `ε(G)`: balance of the Fiedler sign partition (`ε′(G)` with `normalized`).
pub fn balance_epsilon(g: &Graph, normalized: bool) -> Result<f64> {
    let (plus, minus) = sign_partition(g, normalized)?;
    Ok(plus.len().min(minus.len()) as f64 / g.n() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{barbell, cycle, grid, hypercube, path};

    fn pts(xs: &[f64]) -> Vec<Vec<f64>> {
        xs.iter().map(|&x| vec![x]).collect()
    }

    #[test]
    fn kmeans_two_points() {
        let p = kmeans(&pts(&[0.0, 10.0]), 2, 0).unwrap();
        assert_eq!(p.labels, [0, 1]);
    }

    #[test]
    fn kmeans_one_cluster() {
        let p = kmeans(&pts(&[0.0, 3.0, 7.0]), 1, 9).unwrap();
        assert_eq!(p.labels, [0, 0, 0]);
    }

    #[test]
    fn kmeans_errors() {
        assert!(matches!(
            kmeans(&pts(&[1.0]), 2, 0),
            Err(Error::InvalidClusterCount { .. })
        ));
        assert!(matches!(
            kmeans(&pts(&[1.0]), 0, 0),
            Err(Error::InvalidClusterCount { .. })
        ));
    }

    #[test]
    fn kmeans_duplicate_points_stay_nonempty() {
        let p = kmeans(&pts(&[1.0, 1.0, 1.0, 1.0]), 3, 4).unwrap();
        assert_eq!(p.k, 3);
        assert!(p.clusters().iter().all(|c| !c.is_empty()));
    }

    #[test]
    fn kmeans_deterministic() {
        let data = pts(&[0.1, 0.5, 0.2, 3.0, 3.3, 7.0, 6.5, 0.0]);
        assert_eq!(kmeans(&data, 3, 11).unwrap(), kmeans(&data, 3, 11).unwrap());
    }

    #[test]
    fn partition_renumbers() {
        let p = Partition::from_labels(vec![4, 4, 1, 7, 1]).unwrap();
        assert_eq!(p.labels, [0, 0, 1, 2, 1]);
        assert_eq!(p.k, 3);
    }

    #[test]
    fn cut_statistics() {
        let g = path(4).unwrap();
        let c = Cut::from_set(&g, &[0]).unwrap();
        assert_eq!((c.cut_weight, c.ratio, c.balance), (1.0, 1.0, 0.25));
        assert_eq!(c.conductance, 1.0);
        assert!(Cut::from_set(&g, &[]).is_err());
        assert!(Cut::from_set(&g, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn sweep_on_paths_and_cycles() {
        let c = sweep_cut_2way(&path(6).unwrap(), false).unwrap();
        assert_eq!(c.cut_weight, 1.0);
        assert!((c.ratio - 1.0 / 3.0).abs() < 1e-12);
        let c8 = sweep_cut_2way(&cycle(8).unwrap(), false).unwrap();
        assert_eq!((c8.cut_weight, c8.balance), (2.0, 0.5));
        let k2 = sweep_cut_2way(&path(2).unwrap(), false).unwrap();
        assert_eq!(k2.cut_weight, 1.0);
    }

    #[test]
    fn spectral_clustering_c4_balanced() {
        let g = cycle(4).unwrap();
        let p = spectral_clustering(&g, 2, 0, false).unwrap();
        let c = Cut::new(&g, p.labels.iter().map(|&l| l == 0).collect()).unwrap();
        assert_eq!((c.cut_weight, c.balance), (2.0, 0.5));
    }

    #[test]
    fn spectral_clustering_q3_coordinate() {
        let g = hypercube(3).unwrap();
        let p = spectral_clustering(&g, 2, 0, false).unwrap();
        let c = Cut::new(&g, p.labels.iter().map(|&l| l == 0).collect()).unwrap();
        assert_eq!((c.cut_weight, c.balance), (4.0, 0.5));
    }

    #[test]
    fn spectral_clustering_singletons() {
        let g = path(5).unwrap();
        let p = spectral_clustering(&g, 5, 3, false).unwrap();
        assert_eq!(p.k, 5);
        assert!(matches!(
            spectral_clustering(&g, 6, 0, false),
            Err(Error::InvalidClusterCount { .. })
        ));
        assert!(matches!(
            spectral_clustering(&g, 1, 0, false),
            Err(Error::InvalidClusterCount { .. })
        ));
        let split = Graph::from_unit_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            spectral_clustering(&split, 2, 0, false),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn epsilon_values() {
        for d in 2..=5 {
            assert_eq!(balance_epsilon(&hypercube(d).unwrap(), false).unwrap(), 0.5);
        }
        assert_eq!(
            balance_epsilon(&grid(4, 6, false).unwrap(), false).unwrap(),
            0.5
        );
        assert_eq!(
            balance_epsilon(&grid(3, 4, false).unwrap(), false).unwrap(),
            0.5
        );
        let bb = barbell(4, 8).unwrap();
        assert!((balance_epsilon(&bb, false).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert!((balance_epsilon(&bb, true).unwrap() - 1.0 / 3.0).abs() < 1e-12);
    }
}
