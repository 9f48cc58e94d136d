use alloc::string::String;
use alloc::vec::Vec;

use super::rij::{rij_on_stack, RijRelation, Stack};
use super::tracking::{residual_tracking_single, ResidualTracker, Rlta};
use super::Chain;
use crate::Result;

/// Residual tracker of the language of a chain, built from per-level trackers.
///
/// States are tuples of level tracker states, explored breadth first. A
/// successor tuple is identified with the first existing tuple that no
/// relation `Rⁱʲ` with `i` and `j` of different parity separates from it.
pub fn build_rlta_chain(chain: &Chain, trackers: &[ResidualTracker]) -> Result<Rlta> {
    let stack = Stack::new(chain, trackers)?;
    let n = chain.len();
    let mut rel: Vec<RijRelation> = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            if i % 2 != j % 2 {
                rel.push(rij_on_stack(&stack, i, j)?);
            }
        }
    }
    let separated = |a: &[usize], b: &[usize]| {
        rel.iter().any(|r| r.contains([a[r.i], a[r.i + 1], b[r.j], b[r.j + 1]]))
    };

    let k = chain.alphabet().len();
    let initial: Vec<usize> = stack.trackers.iter().map(|t| t.rlta.initial()).collect();
    let mut states = alloc::vec![initial];
    let mut delta = Vec::new();
    let mut head = 0;
    while head < states.len() {
        for x in 0..k {
            let next: Vec<usize> = states[head]
                .iter()
                .zip(&stack.trackers)
                .map(|(&s, t)| t.rlta.successor(s, x))
                .collect();
            let target = match states.iter().position(|s| !separated(&next, s)) {
                Some(t) => t,
                None => {
                    states.push(next);
                    states.len() - 1
                }
            };
            delta.push(target);
        }
        head += 1;
    }
    let names: Vec<String> = (0..states.len()).map(|s| alloc::format!("r{s}")).collect();
    Rlta::new(chain.alphabet().clone(), states.len(), 0, delta)?.with_names(names)
}

/// Per-level trackers followed by [`build_rlta_chain`].
pub fn rlta_for_chain(chain: &Chain) -> Result<Rlta> {
    let trackers: Vec<ResidualTracker> = chain.levels().iter().map(residual_tracking_single).collect::<Result<_>>()?;
    build_rlta_chain(chain, &trackers)
}
