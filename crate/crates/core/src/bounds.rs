//! Closed-form congestion bounds.
//!
//! With `n` vertices, total edge weight `m`, maximum degree `Δ`, Laplacian
//! eigenvalues `λ2 ≤ … ≤ λn` and normalized eigenvalues `μ2 ≤ … ≤ μn`:
//!
//! | bound | value |
//! |---|---|
//! | lower, any tree | `2λ2·n/9` |
//! | upper, any tree | `λn·n/4` |
//! | upper, recursive equipartition | `2λn·n/9` |
//! | upper, spectral cut + equipartition | `n·max{ε√((2Δ−λ2)λ2), (1−ε²+1/n)λn/4}` |
//!
//! The normalized versions replace `n` by `2m`, `λ` by `μ`, `Δ` by 1 and
//! `ε` by `ε′`.

use core::f64::consts::PI;

use crate::clustering::balance_epsilon;
use crate::contraction::{
    congestion, hsc, hybrid_sc_equipartition, recursive_equipartition, root_balance,
};
use crate::spectra::{laplacian_spectrum, normalized_spectrum};
use crate::{Error, Graph, Result};

/// Graph statistics every bound is a function of.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralSummary {
    pub n: usize,
    /// Total edge weight.
    pub m: f64,
    pub max_degree: f64,
    pub lambda2: f64,
    pub lambda_n: f64,
    /// `None` when some vertex is isolated.
    pub mu2: Option<f64>,
    pub mu_n: Option<f64>,
}

impl SpectralSummary {
    pub fn of(g: &Graph) -> Result<Self> {
        if g.n() < 2 {
            return Err(Error::TooFewVertices {
                needed: 2,
                got: g.n(),
            });
        }
        let lap = laplacian_spectrum(g)?;
        let (mu2, mu_n) = if g.min_degree() > 0.0 {
            let s = normalized_spectrum(g)?;
            (Some(s.eigenvalues[1]), s.eigenvalues.last().copied())
        } else {
            (None, None)
        };
        Ok(SpectralSummary {
            n: g.n(),
            m: g.total_weight(),
            max_degree: g.max_degree(),
            lambda2: lap.eigenvalues[1],
            lambda_n: *lap.eigenvalues.last().unwrap(),
            mu2,
            mu_n,
        })
    }

    fn nf(&self) -> f64 {
        self.n as f64
    }

    pub fn thm1_lower(&self) -> f64 {
        2.0 * self.lambda2 * self.nf() / 9.0
    }

    pub fn thm1_upper_trivial(&self) -> f64 {
        self.lambda_n * self.nf() / 4.0
    }

    pub fn thm1_upper_equi(&self) -> f64 {
        2.0 * self.lambda_n * self.nf() / 9.0
    }

    /// Upper bound for the spectral-cut-plus-equipartition tree whose root
    /// cut has balance `eps ∈ (0, 1/2]`.
    pub fn thm1_upper_hybrid(&self, eps: f64) -> Result<f64> {
        check_eps(eps)?;
        Ok(hybrid_expr(
            self.nf(),
            eps,
            2.0 * self.max_degree,
            self.lambda2,
            self.lambda_n,
        ))
    }

    /// `(lower, upper_trivial, upper_equi, upper_hybrid)` in terms of the
    /// normalized spectrum.
    pub fn thm2_bounds(&self, eps_prime: f64) -> Result<(f64, f64, f64, f64)> {
        check_eps(eps_prime)?;
        let (mu2, mu_n) = match (self.mu2, self.mu_n) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::InvalidParameter(
                    "normalized bounds need every degree > 0",
                ))
            }
        };
        let vol = 2.0 * self.m;
        Ok((
            2.0 * mu2 * vol / 9.0,
            mu_n * vol / 4.0,
            2.0 * mu_n * vol / 9.0,
            hybrid_expr(vol, eps_prime, 2.0, mu2, mu_n),
        ))
    }

    /// `(λ2·n/(Δ+λ2), λ2·n/8)`: the earlier lower bounds via treewidth of
    /// the line graph and via min-cut-ratio with Cheeger.
    pub fn prior_lower_bounds(&self) -> (f64, f64) {
        let denom = self.max_degree + self.lambda2;
        let gima = if denom > 0.0 {
            self.lambda2 * self.nf() / denom
        } else {
            0.0
        };
        (gima, self.lambda2 * self.nf() / 8.0)
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps <= 0.5 {
        Ok(())
    } else {
        Err(Error::InvalidParameter("balance must lie in (0, 1/2]"))
    }
}

/// `size·max{eps·√((two_delta − a)·a), (1 − eps² + 1/size)/4 · b}`.
fn hybrid_expr(size: f64, eps: f64, two_delta: f64, a: f64, b: f64) -> f64 {
    let cheeger = eps * libm::sqrt(((two_delta - a) * a).max(0.0));
    let equi = (1.0 - eps * eps + 1.0 / size) / 4.0 * b;
    size * cheeger.max(equi)
}

pub fn thm1_lower(g: &Graph) -> Result<f64> {
    Ok(SpectralSummary::of(g)?.thm1_lower())
}

pub fn thm1_upper_trivial(g: &Graph) -> Result<f64> {
    Ok(SpectralSummary::of(g)?.thm1_upper_trivial())
}

pub fn thm1_upper_equi(g: &Graph) -> Result<f64> {
    Ok(SpectralSummary::of(g)?.thm1_upper_equi())
}

pub fn thm1_upper_hybrid(g: &Graph, eps: f64) -> Result<f64> {
    SpectralSummary::of(g)?.thm1_upper_hybrid(eps)
}

pub fn thm2_bounds(g: &Graph, eps_prime: f64) -> Result<(f64, f64, f64, f64)> {
    if let Some(vertex) = g.degrees().iter().position(|&d| d <= 0.0) {
        return Err(Error::IsolatedVertex { vertex });
    }
    SpectralSummary::of(g)?.thm2_bounds(eps_prime)
}

pub fn prior_lower_bounds(g: &Graph) -> Result<(f64, f64)> {
    Ok(SpectralSummary::of(g)?.prior_lower_bounds())
}

/// Treewidth upper bound `n·min{2λn/9, max{ε√((2Δ−λ2)λ2), (1−ε²+1/n)λn/4}}`
/// with `ε = ε(G)`. Disconnected graphs have no Fiedler sign cut and get
/// `2λn·n/9`.
pub fn cor2_treewidth_upper(g: &Graph) -> Result<f64> {
    let s = SpectralSummary::of(g)?;
    let equi = s.thm1_upper_equi();
    if !g.is_connected() {
        return Ok(equi);
    }
    let eps = balance_epsilon(g, false)?;
    Ok(equi.min(s.thm1_upper_hybrid(eps)?))
}

/// Known bracket on the congestion of an `m × n` lattice, from the lattice
/// treewidth and maximum degree 4: `(min, 4·min + 4)`, or
/// `(2·min, 8·min + 4)` for the torus.
pub fn lattice_treewidth_bracket(m: usize, n: usize, periodic: bool) -> (usize, usize) {
    let k = m.min(n);
    if periodic {
        (2 * k, 8 * k + 4)
    } else {
        (k, 4 * k + 4)
    }
}

fn sin2(x: f64) -> f64 {
    let s = libm::sin(x);
    s * s
}

/// Largest Laplacian eigenvalue of the cycle `C_k`.
pub fn cycle_lambda_max(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        4.0
    } else {
        4.0 * sin2((k - 1) as f64 * PI / (2.0 * k as f64))
    }
}

/// Largest Laplacian eigenvalue of the path `P_k`.
pub fn path_lambda_max(k: usize) -> f64 {
    4.0 * sin2((k - 1) as f64 * PI / (2.0 * k as f64))
}

/// `(λ2, λ_mn)` of `P_m □ P_n` (or `C_m □ C_n`) in closed form.
///
/// Product spectra are pairwise sums of factor spectra, so `λ2` is the
/// smaller of the factors' `λ2` and the top eigenvalue is the sum of the
/// factors' top eigenvalues.
pub fn lattice_spectrum_closed_form(m: usize, n: usize, periodic: bool) -> Result<(f64, f64)> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter("lattice sides must be at least 2"));
    }
    let (mf, nf) = (m as f64, n as f64);
    Ok(if periodic {
        (
            4.0 * sin2(PI / mf).min(sin2(PI / nf)),
            cycle_lambda_max(m) + cycle_lambda_max(n),
        )
    } else {
        (
            4.0 * sin2(PI / (2.0 * mf)).min(sin2(PI / (2.0 * nf))),
            path_lambda_max(m) + path_lambda_max(n),
        )
    })
}

/// Congestion band for random `d`-regular graphs implied by the Friedman
/// eigenvalue band `d ± (2√(d−1) + ε)`; the lower end is clamped at 0.
pub fn rrg_band(n: usize, d: usize, epsilon: f64) -> Result<(f64, f64)> {
    if d < 3 {
        return Err(Error::InvalidParameter("rrg band needs d >= 3"));
    }
    if epsilon.is_nan() || epsilon < 0.0 {
        return Err(Error::InvalidParameter("rrg band needs epsilon >= 0"));
    }
    let (band_low, band_high) = friedman_band(d, epsilon);
    let scale = 2.0 * n as f64 / 9.0;
    Ok(((scale * band_low).max(0.0), scale * band_high))
}

/// Eigenvalue window `(d − 2√(d−1) − ε, d + 2√(d−1) + ε)` that `λ2 … λn` of
/// a random `d`-regular graph falls in with high probability.
pub fn friedman_band(d: usize, epsilon: f64) -> (f64, f64) {
    let d = d as f64;
    let r = 2.0 * libm::sqrt(d - 1.0);
    (d - r - epsilon, d + r + epsilon)
}

/// Every bound for one graph, plus the congestion of each constructed tree.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub n: usize,
    pub m: f64,
    pub max_degree: f64,
    pub lambda2: f64,
    pub lambda_n: f64,
    pub mu2: f64,
    pub mu_n: f64,
    /// Fiedler sign-cut balance `ε(G)`.
    pub eps: f64,
    /// Same for the normalized Laplacian, `ε′(G)`.
    pub eps_prime: f64,
    /// Root balance of the spectral-cut-plus-equipartition tree.
    pub hybrid_root_balance: f64,
    pub hybrid_root_balance_normalized: f64,
    pub lower_thm1: f64,
    pub upper_trivial: f64,
    pub upper_equi: f64,
    /// Evaluated at `hybrid_root_balance`.
    pub upper_hybrid: f64,
    pub lower_thm2: f64,
    pub upper_thm2_trivial: f64,
    pub upper_thm2_equi: f64,
    /// Evaluated at `hybrid_root_balance_normalized`.
    pub upper_thm2_hybrid: f64,
    pub lower_gima: f64,
    pub lower_markov_shi: f64,
    pub cor2_treewidth_upper: f64,
    pub cng_hsc: f64,
    pub cng_hybrid: f64,
    pub cng_equi: f64,
}

/// Computes a [`BoundsReport`] for a connected graph; `seed` drives the
/// k-means step of hierarchical spectral clustering.
pub fn bounds_report(g: &Graph, seed: u64) -> Result<BoundsReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let s = SpectralSummary::of(g)?;
    let eps = balance_epsilon(g, false)?;
    let eps_prime = balance_epsilon(g, true)?;
    let hybrid = hybrid_sc_equipartition(g, false)?;
    let hybrid_norm = hybrid_sc_equipartition(g, true)?;
    let hb = root_balance(&hybrid);
    let hbn = root_balance(&hybrid_norm);
    let (lower_thm2, upper_thm2_trivial, upper_thm2_equi, upper_thm2_hybrid) =
        s.thm2_bounds(hbn)?;
    let (lower_gima, lower_markov_shi) = s.prior_lower_bounds();
    let upper_equi = s.thm1_upper_equi();
    Ok(BoundsReport {
        n: s.n,
        m: s.m,
        max_degree: s.max_degree,
        lambda2: s.lambda2,
        lambda_n: s.lambda_n,
        mu2: s.mu2.unwrap_or(0.0),
        mu_n: s.mu_n.unwrap_or(0.0),
        eps,
        eps_prime,
        hybrid_root_balance: hb,
        hybrid_root_balance_normalized: hbn,
        lower_thm1: s.thm1_lower(),
        upper_trivial: s.thm1_upper_trivial(),
        upper_equi,
        upper_hybrid: s.thm1_upper_hybrid(hb)?,
        lower_thm2,
        upper_thm2_trivial,
        upper_thm2_equi,
        upper_thm2_hybrid,
        lower_gima,
        lower_markov_shi,
        cor2_treewidth_upper: upper_equi.min(s.thm1_upper_hybrid(eps)?),
        cng_hsc: congestion(g, &hsc(g, seed, false)?)?.congestion,
        cng_hybrid: congestion(g, &hybrid)?.congestion,
        cng_equi: congestion(g, &recursive_equipartition(g)?)?.congestion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, fig1_example, hypercube, path};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn thm1_values() {
        let q3 = hypercube(3).unwrap();
        assert!(close(thm1_lower(&q3).unwrap(), 32.0 / 9.0));
        assert!(close(thm1_upper_trivial(&q3).unwrap(), 12.0));
        assert!(close(thm1_upper_equi(&q3).unwrap(), 32.0 / 3.0));
        let c4 = cycle(4).unwrap();
        assert!(close(thm1_lower(&c4).unwrap(), 16.0 / 9.0));
        assert!(close(thm1_upper_trivial(&c4).unwrap(), 4.0));
        assert!(close(thm1_upper_equi(&c4).unwrap(), 32.0 / 9.0));
        let k2 = path(2).unwrap();
        assert!(close(thm1_upper_trivial(&k2).unwrap(), 1.0));
        assert!(close(thm1_upper_equi(&k2).unwrap(), 8.0 / 9.0));
        let split = Graph::from_unit_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(close(thm1_lower(&split).unwrap(), 0.0));
    }

    #[test]
    fn hybrid_values() {
        let k2 = path(2).unwrap();
        assert!(close(thm1_upper_hybrid(&k2, 0.5).unwrap(), 1.25));
        assert!(thm1_upper_hybrid(&k2, 0.0).is_err());
        assert!(thm1_upper_hybrid(&k2, 0.6).is_err());
        for d in 2..=6u32 {
            let q = hypercube(d).unwrap();
            let df = d as f64;
            let pow = (1u64 << d) as f64;
            let want = pow * libm::sqrt(df - 1.0).max((3.0 / 8.0 + 1.0 / (2.0 * pow)) * df);
            assert!(close(thm1_upper_hybrid(&q, 0.5).unwrap(), want));
        }
        let split = Graph::from_unit_edges(4, [(0, 1), (2, 3)]).unwrap();
        let s = SpectralSummary::of(&split).unwrap();
        let eps = 0.25;
        assert!(close(
            s.thm1_upper_hybrid(eps).unwrap(),
            (1.0 - eps * eps + 0.25) / 4.0 * s.lambda_n * 4.0
        ));
    }

    #[test]
    fn thm2_k2_and_regular() {
        let k2 = path(2).unwrap();
        assert!(close(thm2_bounds(&k2, 0.5).unwrap().0, 8.0 / 9.0));
        let q3 = hypercube(3).unwrap();
        let s = SpectralSummary::of(&q3).unwrap();
        let (l, t, e, h) = s.thm2_bounds(0.5).unwrap();
        assert!(close(l, s.thm1_lower()));
        assert!(close(t, s.thm1_upper_trivial()));
        assert!(close(e, s.thm1_upper_equi()));
        assert!(close(h, s.thm1_upper_hybrid(0.5).unwrap()));
        let iso = Graph::from_unit_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            thm2_bounds(&iso, 0.5),
            Err(Error::IsolatedVertex { .. })
        ));
    }

    #[test]
    fn prior_bounds() {
        let (gima, ms) = prior_lower_bounds(&hypercube(3).unwrap()).unwrap();
        assert!(close(gima, 3.2) && close(ms, 2.0));
        let (gima, ms) = prior_lower_bounds(&path(2).unwrap()).unwrap();
        assert!(close(gima, 4.0 / 3.0) && close(ms, 0.5));
        let split = Graph::from_unit_edges(4, [(0, 1), (2, 3)]).unwrap();
        let (gima, ms) = prior_lower_bounds(&split).unwrap();
        assert!(close(gima, 0.0) && close(ms, 0.0));
    }

    #[test]
    fn treewidth_upper() {
        let q3 = cor2_treewidth_upper(&hypercube(3).unwrap()).unwrap();
        // min{32/3, 8·max{√2, (3/8 + 1/16)·3}}
        let want = (32.0f64 / 3.0).min(8.0 * libm::sqrt(2.0).max((3.0 / 8.0 + 1.0 / 16.0) * 3.0));
        assert!(close(q3, want));
        assert!(cor2_treewidth_upper(&path(5).unwrap()).unwrap() >= 1.0);
        assert!(close(
            cor2_treewidth_upper(&path(2).unwrap()).unwrap(),
            8.0 / 9.0
        ));
    }

    #[test]
    fn lattice_literals() {
        assert_eq!(lattice_treewidth_bracket(5, 20, false), (5, 24));
        assert_eq!(lattice_treewidth_bracket(5, 20, true), (10, 44));
        assert_eq!(lattice_treewidth_bracket(2, 2, false), (2, 12));
        let (a, b) = lattice_spectrum_closed_form(2, 2, false).unwrap();
        assert!(close(a, 2.0) && close(b, 4.0));
        let (c, d) = lattice_spectrum_closed_form(4, 4, true).unwrap();
        assert!(close(c, 2.0) && close(d, 8.0));
        assert!(close(cycle_lambda_max(4), 4.0));
        assert!(lattice_spectrum_closed_form(1, 3, false).is_err());
    }

    #[test]
    fn rrg_band_values() {
        let (lo, hi) = rrg_band(24, 3, 0.0).unwrap();
        let r = 2.0 * 2f64.sqrt();
        assert!(close(lo, 48.0 * (3.0 - r) / 9.0));
        assert!(close(hi, 48.0 * (3.0 + r) / 9.0));
        assert!((lo - 0.915).abs() < 1e-3 && (hi - 31.08).abs() < 1e-2);
        assert_eq!(rrg_band(24, 3, 5.0).unwrap().0, 0.0);
        let (lo, hi) = rrg_band(10, 4, 0.0).unwrap();
        assert!(close((lo + hi) / 2.0, 2.0 * 10.0 * 4.0 / 9.0));
        assert!(rrg_band(10, 2, 0.0).is_err());
        assert!(rrg_band(10, 3, -1.0).is_err());
    }

    #[test]
    fn report_fig1_and_q4() {
        let (g, t) = fig1_example();
        let r = bounds_report(&g, 0).unwrap();
        let fig_cng = crate::contraction::congestion(&g, &t).unwrap().congestion;
        assert!(r.lower_thm1 <= fig_cng);
        assert!(close(r.lower_thm1, 16.0 / 9.0 * r.lower_markov_shi));
        let q4 = bounds_report(&hypercube(4).unwrap(), 0).unwrap();
        assert!(close(q4.lower_thm1, 64.0 / 9.0));
        assert_eq!(q4.cng_hsc, 8.0);
        assert!(q4.lower_thm1 <= q4.cng_hsc && q4.cng_hsc <= q4.upper_equi);
        let k2 = bounds_report(&path(2).unwrap(), 0).unwrap();
        assert_eq!(
            (k2.n, k2.cng_hsc, k2.cng_hybrid, k2.cng_equi),
            (2, 1.0, 1.0, 1.0)
        );
        assert!(bounds_report(&Graph::from_unit_edges(4, [(0, 1), (2, 3)]).unwrap(), 0).is_err());
    }
}
