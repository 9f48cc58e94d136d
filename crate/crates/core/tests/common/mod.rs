#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rerail_core::game::{ParityGame, Player};
use rerail_core::{Alphabet, AutomatonStructure, Color, LassoWord, Transition};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Complete deterministic parity automaton restricted to its reachable part.
pub fn random_dpw(rng: &mut ChaCha8Rng, max_states: usize, max_symbols: usize, max_color: Color) -> AutomatonStructure {
    let n = rng.gen_range(1..=max_states);
    let k = rng.gen_range(1..=max_symbols);
    let mut ts = Vec::new();
    for q in 0..n {
        for x in 0..k {
            ts.push(Transition::new(q, x, rng.gen_range(0..n), rng.gen_range(0..=max_color)));
        }
    }
    AutomatonStructure::new(Alphabet::letters(k), n, 0, ts).unwrap().trim()
}

/// Complete automaton with one to `max_succ` successors per state and symbol.
pub fn random_nondet(
    rng: &mut ChaCha8Rng,
    n: usize,
    k: usize,
    colors: &[Color],
    max_succ: usize,
) -> AutomatonStructure {
    let mut ts = Vec::new();
    for q in 0..n {
        for x in 0..k {
            for _ in 0..rng.gen_range(1..=max_succ) {
                ts.push(Transition::new(q, x, rng.gen_range(0..n), colors[rng.gen_range(0..colors.len())]));
            }
        }
    }
    // repeated triples must agree on the color
    let mut seen = std::collections::BTreeMap::new();
    ts.retain(|t| *seen.entry((t.source, t.symbol, t.target)).or_insert(t.color) == t.color);
    AutomatonStructure::new(Alphabet::letters(k), n, 0, ts).unwrap()
}

pub fn random_lasso(rng: &mut ChaCha8Rng, k: usize, max_stem: usize, max_cycle: usize) -> LassoWord {
    let stem = (0..rng.gen_range(0..=max_stem)).map(|_| rng.gen_range(0..k)).collect();
    let cycle = (0..rng.gen_range(1..=max_cycle)).map(|_| rng.gen_range(0..k)).collect();
    LassoWord::new(stem, cycle).unwrap()
}

/// Dominating colors of all runs, by enumerating the simple paths of the
/// unrolled lasso from the initial configuration and recording the minimum
/// color of every closed cycle.
pub fn brute_colors(a: &AutomatonStructure, w: &LassoWord) -> BTreeSet<Color> {
    let len = w.stem().len() + w.cycle().len();
    let letter = |p: usize| if p < w.stem().len() { w.stem()[p] } else { w.cycle()[p - w.stem().len()] };
    let next = |p: usize| if p + 1 < len { p + 1 } else { w.stem().len() };
    let mut out = BTreeSet::new();
    // path of (state, position) with the colors of the edges taken
    let mut path: Vec<(usize, usize)> = vec![(a.initial(), 0)];
    let mut colors: Vec<Color> = Vec::new();
    fn go(
        a: &AutomatonStructure,
        letter: &dyn Fn(usize) -> usize,
        next: &dyn Fn(usize) -> usize,
        path: &mut Vec<(usize, usize)>,
        colors: &mut Vec<Color>,
        out: &mut BTreeSet<Color>,
    ) {
        let (q, p) = *path.last().unwrap();
        for &(t, c) in a.successors(q, letter(p)) {
            let node = (t, next(p));
            if let Some(i) = path.iter().position(|&v| v == node) {
                let min = colors[i..].iter().copied().chain([c]).min().unwrap();
                out.insert(min);
            } else {
                path.push(node);
                colors.push(c);
                go(a, letter, next, path, colors, out);
                path.pop();
                colors.pop();
            }
        }
    }
    go(a, &letter, &next, &mut path, &mut colors, &mut out);
    out
}

/// Winner of every vertex by trying all memoryless strategies of player 0;
/// player 1 wins against a strategy iff the induced graph has a reachable
/// simple cycle with odd minimum color.
pub fn brute_winners(g: &ParityGame) -> Vec<Player> {
    let n = g.vertex_count();
    let choices: Vec<Vec<usize>> = (0..n)
        .map(|v| if g.owner(v) == Player::Even { g.successors(v).to_vec() } else { vec![usize::MAX] })
        .collect();
    let mut wins = vec![false; n];
    let mut pick = vec![0usize; n];
    loop {
        let succ = |v: usize| -> Vec<usize> {
            if g.owner(v) == Player::Even {
                vec![choices[v][pick[v]]]
            } else {
                g.successors(v).to_vec()
            }
        };
        for (v, w) in wins.iter_mut().enumerate() {
            if !*w && !odd_cycle_reachable(g, &succ, v) {
                *w = true;
            }
        }
        // next strategy
        let mut i = 0;
        while i < n {
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    wins.into_iter().map(|w| if w { Player::Even } else { Player::Odd }).collect()
}

fn odd_cycle_reachable(g: &ParityGame, succ: &dyn Fn(usize) -> Vec<usize>, start: usize) -> bool {
    fn go(g: &ParityGame, succ: &dyn Fn(usize) -> Vec<usize>, path: &mut Vec<usize>) -> bool {
        let v = *path.last().unwrap();
        for t in succ(v) {
            if let Some(i) = path.iter().position(|&u| u == t) {
                if path[i..].iter().map(|&u| g.color(u)).min().unwrap() % 2 == 1 {
                    return true;
                }
            } else {
                path.push(t);
                if go(g, succ, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    go(g, succ, &mut vec![start])
}

/// Random total arena.
pub fn random_arena(rng: &mut ChaCha8Rng, max_vertices: usize, colors: Color) -> ParityGame {
    let n = rng.gen_range(1..=max_vertices);
    let mut g = ParityGame::new();
    for _ in 0..n {
        let owner = if rng.gen_bool(0.5) { Player::Even } else { Player::Odd };
        g.add_vertex(owner, rng.gen_range(0..colors));
    }
    for v in 0..n {
        for _ in 0..rng.gen_range(1..=3) {
            g.add_edge(v, rng.gen_range(0..n));
        }
    }
    g
}

/// Random tracker with up to `max_states` states over `k` symbols.
pub fn random_rlta(rng: &mut ChaCha8Rng, max_states: usize, k: usize) -> rerail_core::chain::Rlta {
    let m = rng.gen_range(1..=max_states);
    let delta = (0..m * k).map(|_| rng.gen_range(0..m)).collect();
    rerail_core::chain::Rlta::new(Alphabet::letters(k), m, 0, delta).unwrap()
}

/// Random floating automaton over `rlta`; every transition consistent with
/// the labels is present with probability `density`.
pub fn random_floating(
    rng: &mut ChaCha8Rng,
    rlta: std::sync::Arc<rerail_core::chain::Rlta>,
    max_states: usize,
    density: f64,
) -> rerail_core::floating::FloatingAutomaton {
    let n = rng.gen_range(0..=max_states);
    let m = rlta.state_count();
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
    let mut ts = Vec::new();
    for q in 0..n {
        for x in 0..rlta.alphabet().len() {
            let want = rlta.successor(labels[q], x);
            let fits: Vec<usize> = (0..n).filter(|&t| labels[t] == want).collect();
            if !fits.is_empty() && rng.gen_bool(density) {
                ts.push((q, x, fits[rng.gen_range(0..fits.len())]));
            }
        }
    }
    rerail_core::floating::FloatingAutomaton::new(rlta, labels, ts).unwrap()
}

/// Floating membership by direct simulation: some state labelled with the
/// tracker state at some lasso position has a run that never gets stuck.
pub fn brute_floating(f: &rerail_core::floating::FloatingAutomaton, w: &LassoWord) -> bool {
    let r = f.rlta();
    let horizon = w.stem().len() + w.cycle().len() * (r.state_count() + 1);
    let steps = (f.state_count() + 1) * w.cycle().len() + w.stem().len() + 1;
    let mut s = r.initial();
    for start in 0..horizon {
        for q in (0..f.state_count()).filter(|&q| f.label(q) == s) {
            let mut cur = Some(q);
            for k in start..start + steps {
                cur = cur.and_then(|c| f.successor(c, w.nth(k)));
            }
            if cur.is_some() {
                return true;
            }
        }
        s = r.successor(s, w.nth(start));
    }
    false
}

/// Realizability by the classical splitting game of a deterministic
/// specification: state vertices, then a vertex per first move, then one
/// vertex per transition carrying its color. With `system_first` the system
/// picks the output before the environment picks the input.
pub fn reference_realizable(spec: &AutomatonStructure, system_first: bool) -> bool {
    let io = rerail_core::synthesis::IoSplit::from_alphabet(spec.alphabet()).unwrap();
    let (ni, no) = (io.inputs().len(), io.outputs().len());
    let n = spec.state_count();
    let top = spec.max_color();
    let (first_owner, first_count, second_count) =
        if system_first { (Player::Even, no, ni) } else { (Player::Odd, ni, no) };
    let mut g = ParityGame::new();
    for _ in 0..n {
        g.add_vertex(first_owner, top);
    }
    for q in 0..n {
        for a in 0..first_count {
            let v = g.add_vertex(first_owner.opponent(), top);
            g.add_edge(q, v);
            for b in 0..second_count {
                let (i, o) = if system_first { (b, a) } else { (a, b) };
                let x = io.symbol(i, o);
                let &[(t, c)] = spec.successors(q, x) else { panic!("not deterministic") };
                let e = g.add_vertex(Player::Odd, c);
                g.add_edge(v, e);
                g.add_edge(e, t);
            }
        }
    }
    rerail_core::game::solve(&g).unwrap().winner(spec.initial()) == Player::Even
}
