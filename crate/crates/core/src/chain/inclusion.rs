use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::game::{solve, ParityGame, Player};
use crate::{AutomatonStructure, Error, Result, State};

/// Letter game deciding `L(A_q) ⊆ L(B_p)` for co-Büchi automata `A`, `B`
/// (colors 1 and 2) for all state pairs at once. Exact when `B` is
/// history-deterministic; a positive answer is always sound.
///
/// Spoiler (player 1) owns pair vertices and picks a letter and an
/// `A`-transition, Duplicator (player 0) answers with a `B`-transition. The
/// step then passes a vertex of color 0 if `A` was rejecting, 1 if only `B`
/// was rejecting and 2 otherwise.
pub struct InclusionGame {
    nb: usize,
    won: Vec<bool>,
}

impl InclusionGame {
    pub fn new(a: &AutomatonStructure, b: &AutomatonStructure) -> Result<Self> {
        if a.alphabet() != b.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        a.ensure_colors(&[1, 2], "co-Büchi colors 1 and 2")?;
        b.ensure_colors(&[1, 2], "co-Büchi colors 1 and 2")?;
        let (na, nb) = (a.state_count(), b.state_count());
        let mut g = ParityGame::new();
        for _ in 0..na * nb {
            g.add_vertex(Player::Odd, 2);
        }
        let spoiler_stuck = g.add_vertex(Player::Odd, 0);
        g.add_edge(spoiler_stuck, spoiler_stuck);
        let duplicator_stuck = g.add_vertex(Player::Even, 1);
        g.add_edge(duplicator_stuck, duplicator_stuck);

        let mut answer: BTreeMap<(State, State, usize, bool), usize> = BTreeMap::new();
        let mut step: BTreeMap<(State, State, u32), usize> = BTreeMap::new();
        for qa in 0..na {
            for qb in 0..nb {
                let v = qa * nb + qb;
                for x in a.alphabet().symbols() {
                    for &(ta, ca) in a.successors(qa, x) {
                        let rejecting = ca == 1;
                        let key = (ta, qb, x, rejecting);
                        let d = match answer.get(&key) {
                            Some(&d) => d,
                            None => {
                                let d = g.add_vertex(Player::Even, 2);
                                answer.insert(key, d);
                                for &(tb, cb) in b.successors(qb, x) {
                                    let color = if rejecting { 0 } else if cb == 1 { 1 } else { 2 };
                                    let s = *step.entry((ta, tb, color)).or_insert_with(|| {
                                        let s = g.add_vertex(Player::Even, color);
                                        g.add_edge(s, ta * nb + tb);
                                        s
                                    });
                                    g.add_edge(d, s);
                                }
                                if b.successors(qb, x).is_empty() {
                                    g.add_edge(d, duplicator_stuck);
                                }
                                d
                            }
                        };
                        g.add_edge(v, d);
                    }
                }
                if g.successors(v).is_empty() {
                    g.add_edge(v, spoiler_stuck);
                }
            }
        }
        let sol = solve(&g)?;
        let won = (0..na * nb).map(|v| sol.winner(v) == Player::Even).collect();
        Ok(InclusionGame { nb, won })
    }

    /// Whether `L(A_q) ⊆ L(B_p)`.
    pub fn includes(&self, q: State, p: State) -> bool {
        self.won[q * self.nb + p]
    }
}

/// Single query form of [`InclusionGame`].
pub fn inclusion_hd_cobuchi(a: &AutomatonStructure, q: State, b: &AutomatonStructure, p: State) -> Result<bool> {
    if q >= a.state_count() {
        return Err(Error::StateOutOfRange(q));
    }
    if p >= b.state_count() {
        return Err(Error::StateOutOfRange(p));
    }
    Ok(InclusionGame::new(a, b)?.includes(q, p))
}
