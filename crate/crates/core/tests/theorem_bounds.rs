mod common;

use common::{arb_connected, cut_of};
use congestion_core::bounds::{prior_lower_bounds, thm2_bounds, SpectralSummary};
use congestion_core::contraction::{
    congestion, hsc, hybrid_sc_equipartition, oracle_min_congestion, oracle_optimal_tree,
    recursive_equipartition, root_balance, ContractionTree,
};
use congestion_core::generators::{complete, small_corpus};
use congestion_core::Graph;
use proptest::prelude::*;

const TOL: f64 = 1e-6;

fn node_sets(t: &ContractionTree) -> Vec<Vec<usize>> {
    t.nodes.iter().map(|node| node.subset.clone()).collect()
}

fn mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

fn check_graph(g: &Graph) -> Result<(), String> {
    let s = SpectralSummary::of(g).map_err(|e| e.to_string())?;
    let n = g.n();
    let nf = n as f64;
    let lower = s.thm1_lower();
    let (oracle, opt) = oracle_optimal_tree(g, 14).map_err(|e| e.to_string())?;
    let trees = [
        ("oracle", opt),
        ("hsc", hsc(g, 0, false).unwrap()),
        ("hsc-normalized", hsc(g, 0, true).unwrap()),
        ("hybrid", hybrid_sc_equipartition(g, false).unwrap()),
        ("equi", recursive_equipartition(g).unwrap()),
    ];
    let (lower2, trivial2, _, _) = thm2_bounds(g, 0.5).unwrap();
    for (name, t) in &trees {
        let cert = congestion(g, t).unwrap();
        if cert.congestion < lower - TOL || cert.congestion < lower2 - TOL {
            return Err(format!(
                "{name}: {} below lower bound {lower}",
                cert.congestion
            ));
        }
        if cert.congestion < oracle - 1e-9 {
            return Err(format!("{name}: {} beats oracle {oracle}", cert.congestion));
        }
        for (id, set) in node_sets(t).iter().enumerate() {
            let fresh = if id == t.root {
                0.0
            } else {
                cut_of(g, &mask(n, set))
            };
            if fresh != cert.per_node_cut[id] {
                return Err(format!(
                    "{name}: node {id} cut {} vs {fresh}",
                    cert.per_node_cut[id]
                ));
            }
            if fresh > s.thm1_upper_trivial() + TOL || fresh > trivial2 + TOL {
                return Err(format!(
                    "{name}: node {id} cut {fresh} above trivial upper bound"
                ));
            }
        }
    }
    let hybrid = &trees[3].1;
    let bound = s.thm1_upper_hybrid(root_balance(hybrid)).unwrap();
    let c = congestion(g, hybrid).unwrap().congestion;
    if c > bound + TOL {
        return Err(format!("hybrid {c} above {bound}"));
    }
    let equi = &trees[4].1;
    for set in node_sets(equi) {
        if set.len() == n {
            continue;
        }
        let k = set.len() as f64;
        if cut_of(g, &mask(n, &set)) > s.lambda_n * k * (nf - k) / nf + TOL {
            return Err(format!("equi node {set:?} above λn|S||S̄|/n"));
        }
    }
    if n.is_multiple_of(3) && congestion(g, equi).unwrap().congestion > s.thm1_upper_equi() + TOL {
        return Err("equi above 2λn·n/9 with 3 | n".into());
    }
    Ok(())
}

#[test]
fn corpus_satisfies_theorem_bounds() {
    let corpus = small_corpus().unwrap();
    assert!(corpus.len() >= 200);
    for g in &corpus {
        if let Err(e) = check_graph(g) {
            panic!("{:?}: {e}", g.name());
        }
    }
}

#[test]
fn complete_graphs_break_the_thirds_bound() {
    let k4 = complete(4).unwrap();
    let s = SpectralSummary::of(&k4).unwrap();
    assert_eq!(oracle_min_congestion(&k4, 14).unwrap(), 4.0);
    assert!(4.0 > s.thm1_upper_equi());
    for k in [3, 6, 9, 12] {
        let g = complete(k).unwrap();
        let s = SpectralSummary::of(&g).unwrap();
        let c = congestion(&g, &recursive_equipartition(&g).unwrap())
            .unwrap()
            .congestion;
        assert!((c - s.thm1_upper_equi()).abs() < 1e-9, "K{k}");
    }
}

#[test]
fn prior_bounds_relation() {
    for g in small_corpus().unwrap() {
        let s = SpectralSummary::of(&g).unwrap();
        let (gima, markov_shi) = prior_lower_bounds(&g).unwrap();
        assert!((s.thm1_lower() - 16.0 / 9.0 * markov_shi).abs() < 1e-12);
        let stronger = s.thm1_lower() >= gima - 1e-12;
        let predicted = s.max_degree + s.lambda2 >= 4.5 - 1e-9;
        assert_eq!(stronger, predicted, "{:?}", g.name());
    }
}

#[test]
fn regular_graphs_translate() {
    for g in small_corpus().unwrap() {
        let Some(d) = g.regular_degree() else {
            continue;
        };
        let s = SpectralSummary::of(&g).unwrap();
        let eps = 0.5;
        let (l, t, e, h) = s.thm2_bounds(eps).unwrap();
        assert!((l - s.thm1_lower()).abs() < 1e-9);
        assert!((t - s.thm1_upper_trivial()).abs() < 1e-9);
        assert!((e - s.thm1_upper_equi()).abs() < 1e-9);
        let h1 = s.thm1_upper_hybrid(eps).unwrap();
        let nf = g.n() as f64;
        let cheeger = nf * eps * ((2.0 * d - s.lambda2) * s.lambda2).sqrt();
        let equi_term = nf * (1.0 - eps * eps + 1.0 / nf) / 4.0 * s.lambda_n;
        if cheeger >= equi_term {
            assert!((h - h1).abs() < 1e-9);
        } else {
            let want = cheeger.max(nf * (1.0 - eps * eps + 1.0 / (nf * d)) / 4.0 * s.lambda_n);
            assert!((h - want).abs() < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_weighted_graphs(g in arb_connected(2, 10)) {
        let r = check_graph(&g);
        prop_assert!(r.is_ok(), "{:?}", r);
    }
}
