use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::tracking::{ResidualTracker, Rlta};
use super::Chain;
use crate::game::{solve, ParityGame, Player};
use crate::{Alphabet, AutomatonStructure, Error, Result, State, Transition};

/// Tuples `(sⁱ, sⁱ⁺¹, sʲ, sʲ⁺¹)` of tracker states for which some word is
/// accepted from `sⁱ` and `sʲ` but rejected from `sⁱ⁺¹` and `sʲ⁺¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RijRelation {
    pub i: usize,
    pub j: usize,
    pub tuples: BTreeSet<[State; 4]>,
}

impl RijRelation {
    pub fn contains(&self, t: [State; 4]) -> bool {
        self.tuples.contains(&t)
    }
}

/// Levels `0..=n+1` of a chain: level 0 accepts everything, level `n+1`
/// accepts nothing, both with a one-state tracker.
pub(crate) struct Stack {
    pub levels: Vec<AutomatonStructure>,
    pub trackers: Vec<ResidualTracker>,
}

impl Stack {
    pub fn new(chain: &Chain, trackers: &[ResidualTracker]) -> Result<Self> {
        if trackers.len() != chain.len() {
            return Err(Error::Invalid(alloc::format!(
                "{} trackers for {} levels",
                trackers.len(),
                chain.len()
            )));
        }
        for (level, t) in chain.levels().iter().zip(trackers) {
            if t.state_map.len() != level.state_count() || *t.rlta.alphabet() != *chain.alphabet() {
                return Err(Error::TrackerMismatch);
            }
        }
        let constant = |color| single_state(chain.alphabet(), color);
        let trivial = ResidualTracker { rlta: Rlta::trivial(chain.alphabet().clone()), state_map: vec![0] };
        let mut levels = vec![constant(2)];
        levels.extend(chain.levels().iter().cloned());
        levels.push(constant(1));
        let mut all = vec![trivial.clone()];
        all.extend(trackers.iter().cloned());
        all.push(trivial);
        Ok(Stack { levels, trackers: all })
    }
}

fn single_state(alphabet: &Alphabet, color: u32) -> AutomatonStructure {
    AutomatonStructure::new(alphabet.clone(), 1, 0, alphabet.symbols().map(|x| Transition::new(0, x, 0, color)))
        .expect("one-state automaton")
}

/// Computes `Rⁱʲ` for `0 <= i, j <= n`, where level 0 is universal and level
/// `n+1` is empty.
///
/// Player 0 picks a letter and accepting successors for levels `i` and `j`;
/// player 1 resolves levels `i+1` and `j+1`. A counter `z` advances from 0 to
/// 1 on a rejecting step of level `i+1`, from 1 to 2 on a rejecting step of
/// level `j+1`, and is reset after reaching 2. Player 0 wins iff `z = 2`
/// recurs. Winning tuples are mapped to tracker states and closed under
/// predecessors.
pub fn compute_rij(chain: &Chain, trackers: &[ResidualTracker], i: usize, j: usize) -> Result<RijRelation> {
    let stack = Stack::new(chain, trackers)?;
    rij_on_stack(&stack, i, j)
}

pub(crate) fn rij_on_stack(stack: &Stack, i: usize, j: usize) -> Result<RijRelation> {
    let n = stack.levels.len() - 2;
    for idx in [i, j] {
        if idx > n {
            return Err(Error::LevelOutOfRange { index: idx, levels: n });
        }
    }
    let lv = [&stack.levels[i], &stack.levels[i + 1], &stack.levels[j], &stack.levels[j + 1]];
    let dims = lv.map(|a| a.state_count());
    let tuples = dims.iter().product::<usize>();
    let k = lv[0].alphabet().len();
    let enc = |t: [State; 4]| ((t[0] * dims[1] + t[1]) * dims[2] + t[2]) * dims[3] + t[3];
    let dec = |mut c: usize| {
        let mut t = [0; 4];
        for d in (0..4).rev() {
            t[d] = c % dims[d];
            c /= dims[d];
        }
        t
    };
    let v0 = |t: usize, z: usize| t * 3 + z;
    let v1 = |t: usize, z: usize, x: usize| 3 * tuples + (t * 2 + z) * k + x;

    let mut g = ParityGame::new();
    for _ in 0..tuples {
        g.add_vertex(Player::Even, 1);
        g.add_vertex(Player::Even, 1);
        g.add_vertex(Player::Even, 0);
    }
    for _ in 0..tuples * 2 * k {
        g.add_vertex(Player::Odd, 1);
    }
    let lose0 = g.add_vertex(Player::Even, 1);
    g.add_edge(lose0, lose0);
    let win0 = g.add_vertex(Player::Odd, 0);
    g.add_edge(win0, win0);

    for c in 0..tuples {
        let [qi, qi1, qj, qj1] = dec(c);
        for z in 0..3 {
            let z1 = if z == 2 { 0 } else { z };
            let from = v0(c, z);
            for x in 0..k {
                for &(ti, ci) in lv[0].successors(qi, x) {
                    if ci != 2 {
                        continue;
                    }
                    for &(tj, cj) in lv[2].successors(qj, x) {
                        if cj == 2 {
                            g.add_edge(from, v1(enc([ti, qi1, tj, qj1]), z1, x));
                        }
                    }
                }
            }
            if g.successors(from).is_empty() {
                g.add_edge(from, lose0);
            }
        }
        for z in 0..2 {
            for x in 0..k {
                let from = v1(c, z, x);
                for &(ti1, ci1) in lv[1].successors(qi1, x) {
                    for &(tj1, cj1) in lv[3].successors(qj1, x) {
                        let z2 = match z {
                            0 if ci1 == 1 => 1,
                            0 => 0,
                            _ if cj1 == 1 => 2,
                            _ => 1,
                        };
                        g.add_edge(from, v0(enc([qi, ti1, qj, tj1]), z2));
                    }
                }
                if g.successors(from).is_empty() {
                    g.add_edge(from, win0);
                }
            }
        }
    }
    let sol = solve(&g)?;

    let tr = [&stack.trackers[i], &stack.trackers[i + 1], &stack.trackers[j], &stack.trackers[j + 1]];
    let rdims = tr.map(|t| t.rlta.state_count());
    let rtotal = rdims.iter().product::<usize>();
    let renc = |t: [State; 4]| ((t[0] * rdims[1] + t[1]) * rdims[2] + t[2]) * rdims[3] + t[3];
    let rdec = |mut c: usize| {
        let mut t = [0; 4];
        for d in (0..4).rev() {
            t[d] = c % rdims[d];
            c /= rdims[d];
        }
        t
    };
    let mut member = vec![false; rtotal];
    for c in 0..tuples {
        if (0..3).any(|z| sol.winner(v0(c, z)) == Player::Even) {
            let q = dec(c);
            let s = [0, 1, 2, 3].map(|d| tr[d].state_map[q[d]]);
            member[renc(s)] = true;
        }
    }
    loop {
        let mut changed = false;
        for c in 0..rtotal {
            if member[c] {
                continue;
            }
            let s = rdec(c);
            if (0..k).any(|x| member[renc([0, 1, 2, 3].map(|d| tr[d].rlta.successor(s[d], x)))]) {
                member[c] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let tuples = (0..rtotal).filter(|&c| member[c]).map(rdec).collect();
    Ok(RijRelation { i, j, tuples })
}
