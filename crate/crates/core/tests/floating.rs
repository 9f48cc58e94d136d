mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use rerail_core::chain::{decompose_rerailing, residual_tracking_single, rlta_for_chain, Rlta};
use rerail_core::examples::{nested_floating_chain, position_parity_cobuchi};
use rerail_core::floating::{
    floating_member, max_accepting_sccs, minimize_floating, product_floating, residualize, safe_subset,
    union_floating, FloatingAutomaton, FloatingChain, SafeRelation,
};
use rerail_core::graph::tarjan;
use rerail_core::lasso::canonical_lassos;
use rerail_core::membership::member_cobuchi;
use rerail_core::{Alphabet, Error, LassoWord};

use common::{brute_floating, random_dpw, random_floating, random_rlta, rng};

fn random_pair(seed: u64) -> (FloatingAutomaton, FloatingAutomaton) {
    random_pair_of_size(seed, 5)
}

fn random_pair_of_size(seed: u64, n: usize) -> (FloatingAutomaton, FloatingAutomaton) {
    let mut r = rng(seed);
    let t = Arc::new(random_rlta(&mut r, 2, 2));
    (random_floating(&mut r, t.clone(), n, 0.8), random_floating(&mut r, t, n, 0.8))
}

#[test]
fn membership_matches_simulation() {
    let mut r = rng(30);
    for _ in 0..300 {
        let t = Arc::new(random_rlta(&mut r, 3, 2));
        let f = random_floating(&mut r, t, 5, 0.7);
        for w in canonical_lassos(2, 2, 3) {
            assert_eq!(floating_member(&f, &w).unwrap(), brute_floating(&f, &w));
        }
    }
}

#[test]
fn nested_levels() {
    let c = nested_floating_chain();
    let sigma = c.rlta().alphabet().clone();
    let w = |s: &str| LassoWord::parse(s, &sigma).unwrap();
    let l = |i| c.level(i).unwrap();
    assert!(floating_member(l(1), &w(";a.b.c")).unwrap());
    assert!(!floating_member(l(1), &w(";a.d")).unwrap());
    assert!(floating_member(l(2), &w("d.d;a.b")).unwrap());
    assert!(!floating_member(l(2), &w(";a.b.c")).unwrap());
    assert!(floating_member(l(2), &w(";c.d")).unwrap());
    assert!(!floating_member(l(2), &w(";a.d")).unwrap());
    assert!(floating_member(l(3), &w("a.b;d")).unwrap());
    assert!(!floating_member(l(3), &w(";c.d")).unwrap());
    assert!(FloatingAutomaton::empty(c.rlta().clone()).state_count() == 0);
    assert!(!floating_member(&FloatingAutomaton::empty(c.rlta().clone()), &w(";a")).unwrap());
}

#[test]
fn transitions_must_follow_the_tracker() {
    let t = Arc::new(Rlta::new(Alphabet::letters(2), 2, 0, vec![1, 1, 0, 0]).unwrap());
    assert_eq!(
        FloatingAutomaton::new(t.clone(), vec![0, 0], [(0, 0, 1)]).err(),
        Some(Error::LabelMismatch { state: 0, symbol: 0 })
    );
    assert!(FloatingAutomaton::new(t, vec![0, 1], [(0, 0, 1), (1, 1, 0)]).is_ok());
}

#[test]
fn residualizing_with_the_own_tracker_keeps_the_level_language() {
    let mut r = rng(31);
    for _ in 0..40 {
        let a = random_dpw(&mut r, 4, 2, 4);
        for level in decompose_rerailing(&a).unwrap().levels() {
            let t = Arc::new(residual_tracking_single(level).unwrap().rlta);
            let f = residualize(level, t).unwrap();
            for w in canonical_lassos(a.alphabet().len(), 3, 3) {
                assert_eq!(floating_member(&f, &w).unwrap(), member_cobuchi(level, &w).unwrap());
            }
        }
    }
}

#[test]
fn residualizing_with_the_chain_tracker_keeps_the_chain_language() {
    let mut r = rng(32);
    for _ in 0..40 {
        let a = random_dpw(&mut r, 4, 2, 4);
        let c = decompose_rerailing(&a).unwrap();
        let t = Arc::new(rlta_for_chain(&c).unwrap());
        let levels = c.levels().iter().map(|l| residualize(l, t.clone()).unwrap()).collect();
        let fc = FloatingChain::new(t, levels).unwrap();
        // colors may move between levels of the same parity
        for w in canonical_lassos(a.alphabet().len(), 3, 3) {
            assert_eq!(fc.color(&w).unwrap() % 2, c.color(&w).unwrap() % 2);
        }
    }
}

#[test]
fn residualizing_needs_cobuchi_colors() {
    let a = rerail_core::examples::nested_rerailing();
    let t = Arc::new(Rlta::trivial(a.alphabet().clone()));
    assert!(residualize(&a, t).is_err());
}

fn position_parity_floating() -> FloatingAutomaton {
    let a = position_parity_cobuchi();
    let t = Arc::new(Rlta::trivial(a.alphabet().clone()));
    let ts = a.transitions().iter().filter(|t| t.color == 2).map(|t| (t.source, t.symbol, t.target));
    FloatingAutomaton::new(t, vec![0; 5], ts).unwrap()
}

#[test]
fn safe_languages_of_the_position_parity_automaton() {
    let f = position_parity_floating();
    assert!(safe_subset(&f, 4, &f, 2).unwrap());
    assert!(!safe_subset(&f, 2, &f, 4).unwrap());
    assert!(!safe_subset(&f, 0, &f, 3).unwrap());
    assert!(!safe_subset(&f, 3, &f, 0).unwrap());
    assert!(safe_subset(&f, 0, &f, 1).unwrap() && safe_subset(&f, 1, &f, 0).unwrap());
    assert_eq!(safe_subset(&f, 5, &f, 0), Err(Error::StateOutOfRange(5)));
}

/// `Safe(q) ⊆ Safe(p)` by checking every word up to length `len`.
fn safe_by_words(f: &FloatingAutomaton, q: usize, g: &FloatingAutomaton, p: usize, len: usize) -> bool {
    let k = f.alphabet().len();
    (0..=len).flat_map(|l| rerail_core::lasso::words(k, l)).all(|w| {
        let run = |a: &FloatingAutomaton, s: usize| w.iter().try_fold(s, |s, &x| a.successor(s, x));
        run(f, q).is_none() || run(g, p).is_some()
    })
}

#[test]
fn safe_relation_matches_word_enumeration() {
    for seed in 0..100 {
        let (f, g) = random_pair_of_size(seed, 3);
        let rel = SafeRelation::between(&f, &g).unwrap();
        let len = f.state_count() * g.state_count() + 1;
        for q in 0..f.state_count() {
            for p in 0..g.state_count() {
                assert_eq!(rel.includes(q, p), safe_by_words(&f, q, &g, p, len));
            }
        }
    }
}

fn same_language(f: &FloatingAutomaton, g: &FloatingAutomaton) -> bool {
    canonical_lassos(f.alphabet().len(), 3, 3).all(|w| floating_member(f, &w).unwrap() == floating_member(g, &w).unwrap())
}

fn normalized(m: &FloatingAutomaton) -> bool {
    let adj: Vec<Vec<usize>> = (0..m.state_count())
        .map(|q| (0..m.alphabet().len()).filter_map(|x| m.successor(q, x)).collect())
        .collect();
    let comps = tarjan(&adj);
    let mut id = vec![0; m.state_count()];
    for (i, c) in comps.iter().enumerate() {
        for &q in c {
            id[q] = i;
        }
    }
    let on_cycle = |q: usize| comps[id[q]].len() > 1 || adj[q].contains(&q);
    let no_crossing = m.transitions().all(|(q, _, t)| id[q] == id[t]);
    let safe = SafeRelation::between(m, m).unwrap();
    let alike = |q: usize, p: usize| m.label(q) == m.label(p) && m.mark(q) == m.mark(p);
    let no_duplicates = (0..m.state_count())
        .all(|q| (0..m.state_count()).all(|p| p == q || !alike(q, p) || !(safe.includes(q, p) && safe.includes(p, q))));
    no_crossing && no_duplicates && (0..m.state_count()).all(on_cycle)
}

#[test]
fn minimization_on_random_automata() {
    for seed in 0..300 {
        let (f, _) = random_pair(seed);
        let m = minimize_floating(&f);
        assert!(m.state_count() <= f.state_count());
        assert!(same_language(&f, &m), "seed {seed}");
        assert_eq!(minimize_floating(&m), m, "seed {seed}");
        assert!(normalized(&m), "seed {seed}");
    }
}

#[test]
fn minimizing_the_nested_levels_changes_nothing() {
    for level in nested_floating_chain().levels() {
        assert_eq!(&minimize_floating(level), level);
    }
}

#[test]
fn max_accepting_sccs_of_the_nested_levels() {
    let c = nested_floating_chain();
    let sccs: Vec<Vec<Vec<usize>>> = c.levels().iter().map(max_accepting_sccs).collect();
    assert_eq!(sccs, vec![vec![vec![0], vec![1]], vec![vec![0, 1], vec![2]], vec![vec![0], vec![1]]]);
}

#[test]
fn operations_need_a_shared_tracker() {
    let a = FloatingAutomaton::empty(Arc::new(Rlta::trivial(Alphabet::letters(2))));
    let b = FloatingAutomaton::empty(Arc::new(Rlta::trivial(Alphabet::letters(3))));
    assert!(product_floating(&a, &b).is_err());
    assert!(union_floating(&a, &b).is_err());
}

#[test]
fn product_names_and_marks() {
    let c = nested_floating_chain();
    let top = FloatingAutomaton::from_rlta(c.rlta().clone());
    let p = product_floating(&top, c.level(2).unwrap()).unwrap();
    assert_eq!(p.state_count(), 3);
    assert_eq!(p.marking(), Some(&[0, 0, 0][..]));
    let names: BTreeSet<&str> = p.names().iter().map(String::as_str).collect();
    assert!(names.iter().all(|n| n.ends_with('3') || n.ends_with('4') || n.ends_with('5')));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_intersection(seed in any::<u64>()) {
        let (f, g) = random_pair(seed);
        let p = product_floating(&f, &g).unwrap();
        for w in canonical_lassos(2, 3, 3) {
            let both = floating_member(&f, &w).unwrap() && floating_member(&g, &w).unwrap();
            prop_assert_eq!(floating_member(&p, &w).unwrap(), both);
        }
    }

    #[test]
    fn union_is_union(seed in any::<u64>()) {
        let (f, g) = random_pair(seed);
        let u = union_floating(&f, &g).unwrap();
        prop_assert_eq!(u.state_count(), f.state_count() + g.state_count());
        for w in canonical_lassos(2, 3, 3) {
            let either = floating_member(&f, &w).unwrap() || floating_member(&g, &w).unwrap();
            prop_assert_eq!(floating_member(&u, &w).unwrap(), either);
        }
    }

    #[test]
    fn minimization_keeps_the_language(seed in any::<u64>()) {
        let (f, g) = random_pair(seed);
        let u = union_floating(&f, &g).unwrap();
        let m = minimize_floating(&u);
        prop_assert!(same_language(&u, &m));
        prop_assert!(m.state_count() <= u.state_count());
    }
}
