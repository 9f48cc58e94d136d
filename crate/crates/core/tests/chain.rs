mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;
use rerail_core::chain::{
    build_rlta_chain, compute_rij, decompose_rerailing, inclusion_hd_cobuchi, residual_tracking_single,
    rlta_for_chain, Chain, InclusionGame, ResidualTracker,
};
use rerail_core::equireach::equireach_relation;
use rerail_core::equivalence::bounded_equivalence;
use rerail_core::examples::{
    nested_floating_chain, nested_rerailing, nested_rerailing_published, position_parity_cobuchi, twin_cobuchi_chain,
};
use rerail_core::lasso::{canonical_lassos, words};
use rerail_core::membership::{member_cobuchi, member_parity_det, Interpreted};
use rerail_core::{Alphabet, AutomatonStructure, Error, LassoWord, OmegaAcceptor, Semantics, Transition};

use common::{random_dpw, random_lasso, random_nondet, rng};

fn loops(colors: &[u32]) -> AutomatonStructure {
    let ts: Vec<_> = colors.iter().enumerate().map(|(x, &c)| Transition::new(0, x, 0, c)).collect();
    AutomatonStructure::new(Alphabet::letters(colors.len()), 1, 0, ts).unwrap()
}

fn word(a: &Alphabet, s: &str) -> LassoWord {
    LassoWord::parse(s, a).unwrap()
}

#[test]
fn decomposing_constant_automata() {
    let c = decompose_rerailing(&loops(&[2, 2])).unwrap();
    assert_eq!(c.len(), 2);
    for w in canonical_lassos(2, 2, 2) {
        assert_eq!(c.color(&w).unwrap(), 2);
    }
    let c = decompose_rerailing(&loops(&[1])).unwrap();
    assert_eq!(c.len(), 1);
    assert!(c.level(1).unwrap().transitions().iter().all(|t| t.color == 2));
    assert_eq!(c.color(&word(c.alphabet(), ";a")).unwrap(), 1);
}

#[test]
fn decomposition_keeps_the_language_of_random_dpws() {
    let mut r = rng(20);
    for _ in 0..60 {
        let a = random_dpw(&mut r, 5, 2, 4);
        let c = decompose_rerailing(&a).unwrap();
        assert_eq!(c.len() as u32, a.max_color());
        assert_eq!(bounded_equivalence(&Interpreted::new(&a, Semantics::Rerailing), &c, 4, 4).unwrap(), None);
    }
}

#[test]
fn decomposition_keeps_the_language_of_the_nested_automata() {
    for a in [nested_rerailing(), nested_rerailing_published()] {
        let c = decompose_rerailing(&a).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(bounded_equivalence(&Interpreted::new(&a, Semantics::Rerailing), &c, 4, 4).unwrap(), None);
    }
}

#[test]
fn decomposition_rejects_bad_inputs() {
    let partial = AutomatonStructure::new(Alphabet::letters(2), 1, 0, [Transition::new(0, 0, 0, 1)]).unwrap();
    assert!(matches!(decompose_rerailing(&partial), Err(Error::Incomplete { .. })));
    let unreachable =
        AutomatonStructure::new(Alphabet::letters(1), 2, 0, [Transition::new(0, 0, 0, 1), Transition::new(1, 0, 0, 1)])
            .unwrap();
    assert_eq!(decompose_rerailing(&unreachable).err(), Some(Error::Unreachable(vec![1])));
}

/// Pairs of states reached together by some word of length at most `n²`.
fn equireach_by_words(a: &AutomatonStructure) -> BTreeSet<(usize, usize)> {
    let n = a.state_count();
    let mut out = BTreeSet::new();
    let mut frontier: BTreeSet<BTreeSet<usize>> = [BTreeSet::from([a.initial()])].into();
    let mut seen = frontier.clone();
    for _ in 0..=n * n {
        for set in &frontier {
            for &p in set {
                for &q in set {
                    out.insert((p, q));
                }
            }
        }
        let mut next = BTreeSet::new();
        for set in &frontier {
            for x in a.alphabet().symbols() {
                let succ: BTreeSet<usize> = set.iter().flat_map(|&q| a.successors(q, x).iter().map(|e| e.0)).collect();
                if seen.insert(succ.clone()) {
                    next.insert(succ);
                }
            }
        }
        frontier = next;
    }
    out
}

#[test]
fn equireach_matches_word_enumeration() {
    let mut r = rng(21);
    let mut checked = 0;
    while checked < 80 {
        let a = random_nondet(&mut r, 4, 2, &[1, 2], 2);
        if a.ensure_reachable().is_err() {
            continue;
        }
        let rel = equireach_relation(&a).unwrap();
        assert_eq!(rel.pairs().collect::<BTreeSet<_>>(), equireach_by_words(&a));
        checked += 1;
    }
}

#[test]
fn equireach_of_deterministic_automata_is_the_identity() {
    let mut r = rng(22);
    for _ in 0..20 {
        let a = random_dpw(&mut r, 5, 2, 3);
        let rel = equireach_relation(&a).unwrap();
        assert!(rel.pairs().all(|(p, q)| p == q));
    }
}

#[test]
fn equireach_relates_the_two_d_successors() {
    let a = nested_rerailing_published();
    let rel = equireach_relation(&a).unwrap();
    let (p, q) = (a.state_by_name("2,5,6").unwrap(), a.state_by_name("2,5,7").unwrap());
    assert!(rel.related(p, q) && rel.related(q, p));
}

#[test]
fn chain_colors_of_the_nested_chain() {
    let c = nested_floating_chain();
    let sigma = c.rlta().alphabet().clone();
    assert_eq!(c.color(&word(&sigma, ";a.d")).unwrap(), 0);
    assert!(c.accepts(&word(&sigma, ";a.d")).unwrap());
    // c forever: every level has a c-loop
    assert_eq!(c.color(&word(&sigma, ";c")).unwrap(), 3);
    assert_eq!(c.color(&word(&sigma, ";a")).unwrap(), 2);
    assert_eq!(c.color(&word(&sigma, ";d")).unwrap(), 3);
    assert_eq!(c.color(&word(&sigma, ";b")).unwrap(), 2);
    assert_eq!(c.color(&word(&sigma, ";a.b.c")).unwrap(), 1);
}

#[test]
fn empty_chain_is_universal() {
    let c = Chain::new(Alphabet::letters(3), Vec::new()).unwrap();
    for w in canonical_lassos(3, 1, 2) {
        assert_eq!(c.color(&w).unwrap(), 0);
    }
}

#[test]
fn inclusion_on_the_position_parity_automaton() {
    let a = position_parity_cobuchi();
    let g = InclusionGame::new(&a, &a).unwrap();
    for q in 0..5 {
        assert!(g.includes(q, q));
    }
    assert!(g.includes(0, 2) && g.includes(2, 0));
    assert!(!(g.includes(0, 1) && g.includes(1, 0)));
    // a lasso separates q0 from q1
    let (a0, a1) = (a.with_initial(0).unwrap(), a.with_initial(1).unwrap());
    let cex = bounded_equivalence(&Interpreted::new(&a0, Semantics::CoBuchi), &Interpreted::new(&a1, Semantics::CoBuchi), 4, 4)
        .unwrap();
    assert!(cex.is_some());

    let classes: BTreeSet<BTreeSet<usize>> =
        (0..5).map(|q| (0..5).filter(|&p| g.includes(q, p) && g.includes(p, q)).collect()).collect();
    assert_eq!(classes, [BTreeSet::from([0, 2, 4]), BTreeSet::from([1, 3])].into());
}

fn random_levels(r: &mut rand_chacha::ChaCha8Rng) -> Vec<AutomatonStructure> {
    let a = random_dpw(r, 4, 2, 4);
    if a.alphabet().len() != 2 {
        return Vec::new();
    }
    decompose_rerailing(&a).unwrap().levels().to_vec()
}

#[test]
fn inclusion_answers_agree_with_lasso_evidence() {
    let mut r = rng(23);
    let mut pool: Vec<AutomatonStructure> = Vec::new();
    while pool.len() < 40 {
        pool.extend(random_levels(&mut r));
    }
    let lassos: Vec<LassoWord> = canonical_lassos(2, 4, 4).collect();
    let mut checked = 0;
    let mut positive = 0;
    while checked < 150 {
        let a = &pool[r.gen_range(0..pool.len())];
        let b = &pool[r.gen_range(0..pool.len())];
        let (q, p) = (r.gen_range(0..a.state_count()), r.gen_range(0..b.state_count()));
        let (aq, bp) = (a.with_initial(q).unwrap(), b.with_initial(p).unwrap());
        let included = inclusion_hd_cobuchi(a, q, b, p).unwrap();
        let witness = lassos.iter().find(|w| member_cobuchi(&aq, w).unwrap() && !member_cobuchi(&bp, w).unwrap());
        if included {
            positive += 1;
            assert!(witness.is_none(), "inclusion claimed but {:?} separates", witness);
        }
        checked += 1;
    }
    assert!(positive > 10);
}

#[test]
fn inclusion_is_transitive_on_samples() {
    let mut r = rng(24);
    let mut pool: Vec<AutomatonStructure> = Vec::new();
    while pool.len() < 12 {
        pool.extend(random_levels(&mut r));
    }
    for _ in 0..300 {
        let picks: Vec<(usize, usize)> = (0..3)
            .map(|_| {
                let i = r.gen_range(0..pool.len());
                (i, r.gen_range(0..pool[i].state_count()))
            })
            .collect();
        let incl = |x: (usize, usize), y: (usize, usize)| inclusion_hd_cobuchi(&pool[x.0], x.1, &pool[y.0], y.1).unwrap();
        if incl(picks[0], picks[1]) && incl(picks[1], picks[2]) {
            assert!(incl(picks[0], picks[2]));
        }
    }
}

#[test]
fn residual_trackers() {
    let single = residual_tracking_single(&loops(&[2, 1])).unwrap();
    assert_eq!(single.rlta.state_count(), 1);

    let fig = residual_tracking_single(&position_parity_cobuchi()).unwrap();
    assert_eq!(fig.rlta.state_count(), 2);
    let m = &fig.state_map;
    assert!(m[0] == m[2] && m[2] == m[4] && m[1] == m[3] && m[0] != m[1]);

    let level = decompose_rerailing(&nested_rerailing_published()).unwrap().levels()[0].clone();
    assert_eq!(residual_tracking_single(&level).unwrap().rlta.state_count(), 1);

    for level in twin_cobuchi_chain().levels() {
        assert_eq!(residual_tracking_single(level).unwrap().rlta.state_count(), 3);
    }
}

#[test]
fn language_nondeterminism_is_an_error() {
    // from 0, `a` leads to an accepting and a rejecting sink
    let a = AutomatonStructure::new(
        Alphabet::letters(1),
        3,
        0,
        [Transition::new(0, 0, 1, 2), Transition::new(0, 0, 2, 2), Transition::new(1, 0, 1, 2), Transition::new(2, 0, 2, 1)],
    )
    .unwrap();
    assert!(matches!(residual_tracking_single(&a), Err(Error::NotLanguageDeterministic { .. })));
}

fn trackers(c: &Chain) -> Vec<ResidualTracker> {
    c.levels().iter().map(|l| residual_tracking_single(l).unwrap()).collect()
}

#[test]
fn rij_of_one_level_chains() {
    let universal = Chain::new(Alphabet::letters(2), vec![loops(&[2, 2])]).unwrap();
    assert!(compute_rij(&universal, &trackers(&universal), 0, 0).unwrap().tuples.is_empty());

    let empty = Chain::new(Alphabet::letters(2), vec![loops(&[1, 1])]).unwrap();
    let r = compute_rij(&empty, &trackers(&empty), 0, 0).unwrap();
    assert_eq!(r.tuples, BTreeSet::from([[0, 0, 0, 0]]));

    assert!(matches!(
        compute_rij(&empty, &trackers(&empty), 2, 0),
        Err(Error::LevelOutOfRange { index: 2, .. })
    ));
}

#[test]
fn rij_relations_are_closed_under_predecessors() {
    let mut r = rng(25);
    for _ in 0..15 {
        let a = random_dpw(&mut r, 4, 2, 3);
        let c = decompose_rerailing(&a).unwrap();
        let t = trackers(&c);
        let n = c.len();
        let tracker_of = |level: usize| if level == 0 || level > n { None } else { Some(&t[level - 1].rlta) };
        let size = |level: usize| tracker_of(level).map_or(1, |r| r.state_count());
        let step = |level: usize, s: usize, x: usize| tracker_of(level).map_or(0, |r| r.successor(s, x));
        for i in 0..=n {
            for j in 0..=n {
                let rel = compute_rij(&c, &t, i, j).unwrap();
                let lv = [i, i + 1, j, j + 1];
                for s0 in 0..size(lv[0]) {
                    for s1 in 0..size(lv[1]) {
                        for s2 in 0..size(lv[2]) {
                            for s3 in 0..size(lv[3]) {
                                let tuple = [s0, s1, s2, s3];
                                if rel.contains(tuple) {
                                    continue;
                                }
                                for x in 0..c.alphabet().len() {
                                    let next = [0, 1, 2, 3].map(|k| step(lv[k], tuple[k], x));
                                    assert!(!rel.contains(next), "closure misses {tuple:?}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn twin_chain_collapses_to_one_residual() {
    let c = twin_cobuchi_chain();
    let t = trackers(&c);
    assert_eq!(build_rlta_chain(&c, &t).unwrap().state_count(), 1);
}

/// Residual classes of the reachable states of a deterministic automaton,
/// distinguished by lassos within the bounds.
fn distinguishable_residuals(a: &AutomatonStructure, stem: usize, cycle: usize) -> usize {
    let lassos: Vec<LassoWord> = canonical_lassos(a.alphabet().len(), stem, cycle).collect();
    let profiles: BTreeSet<Vec<bool>> = (0..a.state_count())
        .map(|q| {
            let aq = a.with_initial(q).unwrap();
            lassos.iter().map(|w| member_parity_det(&aq, w).unwrap()).collect()
        })
        .collect();
    profiles.len()
}

#[test]
fn chain_trackers_count_the_residuals_of_random_dpws() {
    let mut r = rng(26);
    for _ in 0..40 {
        let a = random_dpw(&mut r, 4, 2, 4);
        let c = decompose_rerailing(&a).unwrap();
        let rlta = rlta_for_chain(&c).unwrap();
        assert_eq!(rlta.state_count(), distinguishable_residuals(&a, 4, 4));
    }
}

#[test]
fn prefixes_with_the_same_tracker_state_have_the_same_futures() {
    let mut r = rng(27);
    for _ in 0..20 {
        let a = random_dpw(&mut r, 4, 2, 4);
        let k = a.alphabet().len();
        let c = decompose_rerailing(&a).unwrap();
        let rlta = rlta_for_chain(&c).unwrap();
        let prefixes: Vec<Vec<usize>> = (0..=3).flat_map(|len| words(k, len)).collect();
        for _ in 0..20 {
            let u = &prefixes[r.gen_range(0..prefixes.len())];
            let v = &prefixes[r.gen_range(0..prefixes.len())];
            if rlta.run(rlta.initial(), u) != rlta.run(rlta.initial(), v) {
                continue;
            }
            for _ in 0..10 {
                let w = random_lasso(&mut r, k, 2, 3);
                let extend = |p: &Vec<usize>| {
                    let mut stem = p.clone();
                    stem.extend_from_slice(w.stem());
                    LassoWord::new(stem, w.cycle().to_vec()).unwrap()
                };
                assert_eq!(c.accepts(&extend(u)).unwrap(), c.accepts(&extend(v)).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn decomposed_chains_have_falling_languages(seed in any::<u64>()) {
        let a = random_dpw(&mut rng(seed), 4, 2, 4);
        let c = decompose_rerailing(&a).unwrap();
        for w in canonical_lassos(a.alphabet().len(), 2, 3) {
            let member: Vec<bool> = c.levels().iter().map(|l| member_cobuchi(l, &w).unwrap()).collect();
            prop_assert!(member.windows(2).all(|p| p[0] || !p[1]));
        }
    }

    #[test]
    fn mutual_inclusion_is_an_equivalence(seed in any::<u64>()) {
        let levels = random_levels(&mut rng(seed));
        for l in &levels {
            let g = InclusionGame::new(l, l).unwrap();
            let n = l.state_count();
            for p in 0..n {
                prop_assert!(g.includes(p, p));
                for q in 0..n {
                    for s in 0..n {
                        if g.includes(p, q) && g.includes(q, s) {
                            prop_assert!(g.includes(p, s));
                        }
                    }
                }
            }
        }
    }
}
