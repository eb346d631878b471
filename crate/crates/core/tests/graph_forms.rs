//! Decorated graph states: conversion from tableaus and the rewrite rules,
//! checked on state vectors.

use proptest::prelude::*;
use zxcanon::local_clifford::{self, LocalClifford};
use zxcanon::oracle::{graph_state_vector, states_equal_up_to_phase, tableau_projector, DenseMatrix};
use zxcanon::random::{random_graph_form, random_tableau, rng};
use zxcanon::{groups_equal, GraphForm, StabilizerTableau};

fn fixed_by(t: &StabilizerTableau, psi: Vec<num_complex::Complex64>) -> bool {
    let v = DenseMatrix::from_columns(psi.len(), vec![psi]);
    tableau_projector(t).unwrap().matmul(&v).approx_eq(&v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn from_tableau_reproduces_the_state(n in 1usize..=6, seed in any::<u64>()) {
        let t = random_tableau(&mut rng(seed), n, n);
        let g = GraphForm::from_tableau(&t).unwrap();
        prop_assert!(g.satisfies_hadamard_rule());
        prop_assert!(g.locals().iter().all(|l| l.is_legal()));
        prop_assert!(groups_equal(&g.stabilizers(), &t).unwrap());
        prop_assert!(fixed_by(&t, graph_state_vector(&g).unwrap()));
    }

    #[test]
    fn local_complement_preserves_the_state(
        m in 1usize..=6, seed in any::<u64>(), v in 0usize..6,
    ) {
        let mut g = random_graph_form(&mut rng(seed), m, 0.5);
        let before = graph_state_vector(&g).unwrap();
        g.local_complement(v % m);
        prop_assert!(states_equal_up_to_phase(&before, &graph_state_vector(&g).unwrap()));
        g.normalize_all().unwrap();
        prop_assert!(g.locals().iter().all(|l| l.is_legal()));
        prop_assert!(states_equal_up_to_phase(&before, &graph_state_vector(&g).unwrap()));
    }

    #[test]
    fn pivot_preserves_the_state(m in 2usize..=6, seed in any::<u64>()) {
        let mut g = random_graph_form(&mut rng(seed), m, 0.6);
        let edge = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).find(|&(u, v)| g.has_edge(u, v));
        if let Some((u, v)) = edge {
            let before = graph_state_vector(&g).unwrap();
            let (nu, nv) = (g.neighbors(u), g.neighbors(v));
            g.pivot_phi(u, v).unwrap();
            let swapped = |x: &[usize], a, b| -> Vec<usize> {
                let mut s: Vec<usize> = x.iter().map(|&w| if w == a { b } else { w }).collect();
                s.sort_unstable();
                s
            };
            prop_assert_eq!(g.neighbors(u), swapped(&nv, u, v));
            prop_assert_eq!(g.neighbors(v), swapped(&nu, v, u));
            prop_assert!(states_equal_up_to_phase(&before, &graph_state_vector(&g).unwrap()));
        }
    }

    #[test]
    fn enforcing_the_hadamard_rule_preserves_the_state(m in 2usize..=6, seed in any::<u64>()) {
        let mut g = random_graph_form(&mut rng(seed), m, 0.5);
        let before = graph_state_vector(&g).unwrap();
        g.enforce_hadamard_rule().unwrap();
        prop_assert!(g.satisfies_hadamard_rule());
        prop_assert!(states_equal_up_to_phase(&before, &graph_state_vector(&g).unwrap()));
        let again = g.clone();
        g.enforce_hadamard_rule().unwrap();
        prop_assert_eq!(format!("{g:?}"), format!("{again:?}"));
    }
}

#[test]
fn pivot_needs_an_edge() {
    let mut g = GraphForm::new(3);
    g.set_edge(0, 1, true);
    assert!(g.pivot_phi(0, 2).is_err());
    assert!(g.pivot_phi(0, 1).is_ok());
}

#[test]
fn six_legal_decorations() {
    let legal: Vec<LocalClifford> = local_clifford::all().into_iter().filter(|l| l.is_legal()).collect();
    assert_eq!(local_clifford::all().len(), 24);
    assert_eq!(legal.len(), 6);
    for l in legal {
        let (had, phase) = l.to_zx().unwrap();
        assert_eq!(LocalClifford::from_zx(had, phase), l);
    }
}

#[test]
fn ghz_and_bell_forms() {
    let ghz = StabilizerTableau::from_strs(&["XXX", "ZZI", "IZZ"]).unwrap();
    let g = GraphForm::from_tableau(&ghz).unwrap();
    assert_eq!(g.num_edges(), 2);
    assert_eq!(g.locals().iter().filter(|&&l| l == LocalClifford::H).count(), 2);
    assert!(g.satisfies_hadamard_rule());

    let bell = StabilizerTableau::from_strs(&["XX", "ZZ"]).unwrap();
    let g = GraphForm::from_tableau(&bell).unwrap();
    assert_eq!(g.num_edges(), 1);
    let mut locals = g.locals().to_vec();
    locals.sort_by_key(|l| l.to_zx());
    assert_eq!(locals, [LocalClifford::I, LocalClifford::H]);
}
