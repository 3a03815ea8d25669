//! Named Laplacian spectral quantities of a graph.
//!
//! `λ_i` are the eigenvalues of `L = D − A`, `μ_i` those of the normalized
//! Laplacian `I − D^{-1/2} A D^{-1/2}`, both ascending and 1-based in the
//! usual notation (`λ1 = 0`).

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{self, SpectrumResult};
use crate::{Error, Graph, Result};

/// Full decomposition of `L_G`.
pub fn laplacian_spectrum(g: &Graph) -> Result<SpectrumResult> {
    let mut s = linalg::eigen_sym(&g.laplacian())?;
    clamp_psd(&mut s);
    Ok(s)
}

/// Full decomposition of the normalized Laplacian.
pub fn normalized_spectrum(g: &Graph) -> Result<SpectrumResult> {
    let mut s = linalg::eigen_sym(&g.normalized_laplacian()?)?;
    clamp_psd(&mut s);
    Ok(s)
}

// Both Laplacians are PSD; rounding can leave -1e-16 at the bottom.
fn clamp_psd(s: &mut SpectrumResult) {
    for x in &mut s.eigenvalues {
        if *x < 0.0 {
            *x = 0.0;
        }
    }
}

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

/// Algebraic connectivity `λ2(G)`; zero exactly when `g` is disconnected
/// (up to rounding).
pub fn lambda2(g: &Graph) -> Result<f64> {
    need_two(g)?;
    Ok(laplacian_spectrum(g)?.eigenvalues[1])
}

/// Largest Laplacian eigenvalue `λn(G)`.
pub fn lambda_n(g: &Graph) -> Result<f64> {
    need_two(g)?;
    Ok(*laplacian_spectrum(g)?.eigenvalues.last().unwrap())
}

/// `μ2(G)` of the normalized Laplacian.
pub fn mu2(g: &Graph) -> Result<f64> {
    need_two(g)?;
    Ok(normalized_spectrum(g)?.eigenvalues[1])
}

/// `μn(G)`; at most 2, with equality for bipartite graphs.
pub fn mu_n(g: &Graph) -> Result<f64> {
    need_two(g)?;
    Ok(*normalized_spectrum(g)?.eigenvalues.last().unwrap())
}

/// Unit eigenvector of `λ2` (or of `μ2` when `normalized`), with its first
/// entry above `1e-9` in magnitude made positive.
pub fn fiedler_vector(g: &Graph, normalized: bool) -> Result<Vec<f64>> {
    need_two(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(low_eigenvectors(g, 1, normalized)?.swap_remove(0))
}

/// Eigenvalues closer than this (relative to `max(1, λmax)`) are treated as
/// one repeated eigenvalue.
pub const DEGENERACY_TOL: f64 = 1e-8;

/// Eigenvectors for `λ2 … λ(count+1)` (or the `μ` analogues), one `Vec`
/// per eigenvalue.
///
/// If the last requested eigenvalue is repeated beyond the cut-off, the
/// spanned subspace depends on the solver's arbitrary basis. The vectors
/// taken from that eigenspace are then the flattest ones: the unit vector
/// of least fourth moment, then the least one orthogonal to it, and so on.
/// On hypercubes and lattices these are the coordinate functions.
pub fn low_eigenvectors(g: &Graph, count: usize, normalized: bool) -> Result<Vec<Vec<f64>>> {
    if count + 1 > g.n() {
        return Err(Error::TooFewVertices {
            needed: count + 1,
            got: g.n(),
        });
    }
    let s = if normalized {
        normalized_spectrum(g)?
    } else {
        laplacian_spectrum(g)?
    };
    let ev = &s.eigenvalues;
    let tol = DEGENERACY_TOL * ev.last().copied().unwrap_or(0.0).max(1.0);
    let last = count;
    let mut lo = last;
    while lo > 1 && ev[last] - ev[lo - 1] <= tol {
        lo -= 1;
    }
    let mut hi = last;
    while hi + 1 < ev.len() && ev[hi + 1] - ev[last] <= tol {
        hi += 1;
    }
    let mut out: Vec<Vec<f64>> = (1..lo).map(|j| s.vector(j)).collect();
    if hi == last {
        out.extend((lo..=last).map(|j| s.vector(j)));
    } else {
        let space: Vec<Vec<f64>> = (lo..=hi).map(|j| s.vector(j)).collect();
        out.extend(flattest(space, last - lo + 1));
    }
    Ok(out)
}

fn combine(basis: &[Vec<f64>], c: &[f64]) -> Vec<f64> {
    let mut x = vec![0.0; basis[0].len()];
    for (b, &cj) in basis.iter().zip(c) {
        for (xi, bi) in x.iter_mut().zip(b) {
            *xi += cj * bi;
        }
    }
    x
}

// `t` successive least-fourth-moment unit vectors of span(basis), each
// orthogonal to the earlier ones.
fn flattest(mut basis: Vec<Vec<f64>>, t: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(t);
    for _ in 0..t {
        let r = basis.len();
        let c = least_fourth_moment(&basis);
        let mut x = combine(&basis, &c);
        linalg::canonicalize_sign(&mut x);
        out.push(x);
        // Householder reflection sending c to ±e0; its other columns span c⊥.
        let mut v = c.clone();
        v[0] += if c[0] >= 0.0 { 1.0 } else { -1.0 };
        let vv: f64 = v.iter().map(|a| a * a).sum();
        basis = (1..r)
            .map(|j| {
                let col: Vec<f64> = (0..r)
                    .map(|i| f64::from(u8::from(i == j)) - 2.0 * v[i] * v[j] / vv)
                    .collect();
                combine(&basis, &col)
            })
            .collect();
    }
    out
}

fn fourth_moment(basis: &[Vec<f64>], c: &[f64]) -> f64 {
    combine(basis, c).iter().map(|x| x * x * x * x).sum()
}

fn normalize(c: &mut [f64]) {
    let norm = libm::sqrt(c.iter().map(|a| a * a).sum::<f64>());
    for a in c.iter_mut() {
        *a /= norm;
    }
}

fn least_fourth_moment(basis: &[Vec<f64>]) -> Vec<f64> {
    let r = basis.len();
    if r == 1 {
        return vec![1.0];
    }
    let mut starts: Vec<Vec<f64>> = (0..r)
        .map(|j| (0..r).map(|i| f64::from(u8::from(i == j))).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_F1A7);
    for _ in 0..2 * r + 4 {
        let mut c: Vec<f64> = (0..r).map(|_| rng.random_range(-1.0..1.0)).collect();
        normalize(&mut c);
        starts.push(c);
    }
    let mut best: Option<(f64, Vec<f64>)> = None;
    for c in starts {
        let c = descend(basis, c);
        let f = fourth_moment(basis, &c);
        if best
            .as_ref()
            .is_none_or(|(bf, _)| f < bf - 1e-12 * bf.abs())
        {
            best = Some((f, c));
        }
    }
    best.unwrap().1
}

// Fixed-point iteration for a stationary point of the fourth moment on the
// unit sphere (the kurtosis iteration used in independent component
// analysis). The basis is orthonormal, so the update is
// `c ← n·Σ_i b_i x_i³ − 3c`, renormalized.
fn descend(basis: &[Vec<f64>], mut c: Vec<f64>) -> Vec<f64> {
    let n = basis[0].len() as f64;
    for _ in 0..500 {
        let x = combine(basis, &c);
        let mut next: Vec<f64> = basis
            .iter()
            .zip(&c)
            .map(|(b, ci)| {
                n * b
                    .iter()
                    .zip(&x)
                    .map(|(bi, xi)| bi * xi * xi * xi)
                    .sum::<f64>()
                    - 3.0 * ci
            })
            .collect();
        let norm = libm::sqrt(next.iter().map(|a| a * a).sum::<f64>());
        if norm.is_nan() || norm <= 1e-300 {
            return c;
        }
        normalize(&mut next);
        let dot: f64 = next.iter().zip(&c).map(|(a, b)| a * b).sum();
        if dot < 0.0 {
            next.iter_mut().for_each(|a| *a = -*a);
        }
        c = next;
        if dot.abs() > 1.0 - 1e-15 {
            break;
        }
    }
    c
}
