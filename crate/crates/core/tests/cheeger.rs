mod common;

use common::{arb_connected, cut_of};
use congestion_core::clustering::{sweep_cut_2way, Cut};
use congestion_core::generators::{rng, small_corpus};
use congestion_core::spectra::{laplacian_spectrum, normalized_spectrum};
use congestion_core::Graph;
use proptest::prelude::*;
use rand::Rng;

const SLACK: f64 = 1e-9;

fn sandwich(g: &Graph, inside: &[bool]) -> Result<(), String> {
    let n = g.n() as f64;
    let lap = laplacian_spectrum(g).unwrap().eigenvalues;
    let nor = normalized_spectrum(g).unwrap().eigenvalues;
    let size = inside.iter().filter(|b| **b).count() as f64;
    let e = cut_of(g, inside);
    let density = e / (size * (n - size));
    if density < lap[1] / n - SLACK || density > lap[lap.len() - 1] / n + SLACK {
        return Err(format!(
            "count sandwich {density} vs [{}, {}]",
            lap[1] / n,
            lap[lap.len() - 1] / n
        ));
    }
    let vol: f64 = (0..g.n())
        .filter(|&v| inside[v])
        .map(|v| g.degrees()[v])
        .sum();
    let total = 2.0 * g.total_weight();
    let vdensity = e / (vol * (total - vol));
    if vdensity < nor[1] / total - SLACK || vdensity > nor[nor.len() - 1] / total + SLACK {
        return Err(format!("volume sandwich {vdensity}"));
    }
    Ok(())
}

fn sweep_bounds(g: &Graph) -> Result<(), String> {
    let lap = laplacian_spectrum(g).unwrap().eigenvalues;
    let nor = normalized_spectrum(g).unwrap().eigenvalues;
    let (l2, m2) = (lap[1], nor[1]);
    let delta = g.max_degree();
    let c: Cut = sweep_cut_2way(g, false).unwrap();
    let bound = ((2.0 * delta - l2) * l2).max(0.0).sqrt();
    let mut errs = Vec::new();
    if c.ratio > bound + SLACK {
        errs.push(format!("ratio {} > {bound}", c.ratio));
    }
    let c = sweep_cut_2way(g, true).unwrap();
    let bound = ((2.0 - m2) * m2).max(0.0).sqrt();
    if c.conductance > bound + SLACK {
        errs.push(format!("conductance {} > {bound}", c.conductance));
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs.join("; "))
    }
}

#[test]
fn corpus_random_cuts() {
    let mut r = rng(7);
    for g in small_corpus().unwrap() {
        for _ in 0..300 {
            let inside: Vec<bool> = loop {
                let s: Vec<bool> = (0..g.n()).map(|_| r.random::<bool>()).collect();
                if s.iter().any(|b| *b) && !s.iter().all(|b| *b) {
                    break s;
                }
            };
            if let Err(e) = sandwich(&g, &inside) {
                panic!("{:?}: {e}", g.name());
            }
        }
    }
}

// The sweep bounds are theorems for every graph except K_2 and K_3.
fn is_small_clique(g: &Graph) -> bool {
    g.n() <= 3 && g.num_edges() == g.n() * (g.n() - 1) / 2
}

#[test]
fn corpus_sweep_cuts() {
    for g in small_corpus()
        .unwrap()
        .into_iter()
        .filter(|g| !is_small_clique(g))
    {
        if let Err(e) = sweep_bounds(&g) {
            panic!("{:?}: {e}", g.name());
        }
    }
}

#[test]
fn sweep_bounds_fail_on_k2_and_k3() {
    use congestion_core::generators::complete;
    for k in [2, 3] {
        let g = complete(k).unwrap();
        assert!(is_small_clique(&g));
        let c = sweep_cut_2way(&g, false).unwrap();
        assert_eq!(c.ratio, (k - 1) as f64);
        assert!(sweep_bounds(&g).is_err());
    }
}

#[test]
fn sweep_cut_examples() {
    use congestion_core::generators::{cycle, path};
    let c = sweep_cut_2way(&path(6).unwrap(), false).unwrap();
    assert_eq!((c.cut_weight, c.ratio), (1.0, 1.0 / 3.0));
    let c = sweep_cut_2way(&cycle(8).unwrap(), false).unwrap();
    assert_eq!((c.cut_weight, c.balance), (2.0, 0.5));
    let c = sweep_cut_2way(&path(2).unwrap(), true).unwrap();
    assert_eq!(c.cut_weight, 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn random_graph_cuts(g in arb_connected(2, 11), bits in proptest::collection::vec(any::<bool>(), 11)) {
        let inside: Vec<bool> = bits[..g.n()].to_vec();
        prop_assume!(inside.iter().any(|b| *b) && !inside.iter().all(|b| *b));
        prop_assert!(sandwich(&g, &inside).is_ok(), "{:?}", sandwich(&g, &inside));
    }

    #[test]
    fn random_graph_sweeps(g in arb_connected(4, 11)) {
        prop_assert!(sweep_bounds(&g).is_ok(), "{:?}", sweep_bounds(&g));
    }
}
