//! Pairs of states reachable by a common word.

use alloc::vec;
use alloc::vec::Vec;

use crate::{AutomatonStructure, Result, State};

/// Symmetric, reflexive-on-reachable relation `C`: `(p, q)` is related iff some
/// finite word leads from the initial state to both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquiReach {
    n: usize,
    related: Vec<bool>,
}

impl EquiReach {
    pub fn related(&self, p: State, q: State) -> bool {
        self.related[p * self.n + q]
    }

    /// States related to `q`, ascending.
    pub fn class_of(&self, q: State) -> impl Iterator<Item = State> + '_ {
        (0..self.n).filter(move |&p| self.related(q, p))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (State, State)> + '_ {
        (0..self.n).flat_map(move |p| (0..self.n).map(move |q| (p, q))).filter(|&(p, q)| self.related(p, q))
    }
}

/// Computes the relation by search over the self-product. All states must be
/// reachable.
pub fn equireach_relation(a: &AutomatonStructure) -> Result<EquiReach> {
    a.ensure_reachable()?;
    let n = a.state_count();
    let mut related = vec![false; n * n];
    let q0 = a.initial();
    related[q0 * n + q0] = true;
    let mut stack = vec![(q0, q0)];
    while let Some((p, q)) = stack.pop() {
        for x in a.alphabet().symbols() {
            for &(p2, _) in a.successors(p, x) {
                for &(q2, _) in a.successors(q, x) {
                    if !related[p2 * n + q2] {
                        related[p2 * n + q2] = true;
                        stack.push((p2, q2));
                    }
                }
            }
        }
    }
    Ok(EquiReach { n, related })
}
