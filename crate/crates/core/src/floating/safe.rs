use alloc::vec;
use alloc::vec::Vec;

use super::FloatingAutomaton;
use crate::{Error, Result, State};

/// Inclusion of safe languages between all states of two floating automata
/// over the same alphabet. `Safe(q)` is the set of finite words with a run
/// from `q`.
pub struct SafeRelation {
    n2: usize,
    included: Vec<bool>,
}

impl SafeRelation {
    pub fn between(f1: &FloatingAutomaton, f2: &FloatingAutomaton) -> Result<Self> {
        if f1.alphabet() != f2.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        let (n1, n2, k) = (f1.state_count(), f2.state_count(), f1.alphabet().len());
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n1 * n2];
        let mut bad = vec![false; n1 * n2];
        let mut queue = Vec::new();
        for a in 0..n1 {
            for b in 0..n2 {
                for x in 0..k {
                    let Some(a2) = f1.successor(a, x) else { continue };
                    match f2.successor(b, x) {
                        Some(b2) => rev[a2 * n2 + b2].push(a * n2 + b),
                        None => {
                            if !bad[a * n2 + b] {
                                bad[a * n2 + b] = true;
                                queue.push(a * n2 + b);
                            }
                        }
                    }
                }
            }
        }
        while let Some(v) = queue.pop() {
            for &u in &rev[v] {
                if !bad[u] {
                    bad[u] = true;
                    queue.push(u);
                }
            }
        }
        Ok(SafeRelation { n2, included: bad.into_iter().map(|b| !b).collect() })
    }

    /// `Safe(a) ⊆ Safe(b)` for `a` in the first and `b` in the second automaton.
    pub fn includes(&self, a: State, b: State) -> bool {
        self.included[a * self.n2 + b]
    }
}

/// Whether `Safe(F1_q) ⊆ Safe(F2_p)`.
pub fn safe_subset(f1: &FloatingAutomaton, q: State, f2: &FloatingAutomaton, p: State) -> Result<bool> {
    if q >= f1.state_count() {
        return Err(Error::StateOutOfRange(q));
    }
    if p >= f2.state_count() {
        return Err(Error::StateOutOfRange(p));
    }
    Ok(SafeRelation::between(f1, f2)?.includes(q, p))
}
