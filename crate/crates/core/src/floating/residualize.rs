use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::FloatingAutomaton;
use crate::chain::Rlta;
use crate::{AutomatonStructure, Error, Result, State};

/// Floating automaton made of the accepting transitions of a co-Büchi
/// automaton, labelled by a tracker.
///
/// States start as the pairs `(q, s)` reachable together from the initial
/// states (all transitions count for reachability). Accepting transitions are
/// followed by subset construction from each singleton, so a deterministic
/// accepting part yields singleton states only.
pub fn residualize(a: &AutomatonStructure, rlta: Arc<Rlta>) -> Result<FloatingAutomaton> {
    if a.alphabet() != rlta.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    a.ensure_colors(&[1, 2], "co-Büchi colors 1 and 2")?;
    let (n, m, k) = (a.state_count(), rlta.state_count(), a.alphabet().len());
    let mut joint = vec![false; n * m];
    let mut order: Vec<(State, State)> = Vec::new();
    let start = (a.initial(), rlta.initial());
    joint[start.0 * m + start.1] = true;
    let mut stack = vec![start];
    while let Some((q, s)) = stack.pop() {
        for x in 0..k {
            let s2 = rlta.successor(s, x);
            for &(q2, _) in a.successors(q, x) {
                if !joint[q2 * m + s2] {
                    joint[q2 * m + s2] = true;
                    stack.push((q2, s2));
                }
            }
        }
    }
    for q in 0..n {
        for s in 0..m {
            if joint[q * m + s] {
                order.push((q, s));
            }
        }
    }

    let mut index: BTreeMap<(Vec<State>, State), usize> = BTreeMap::new();
    let mut states: Vec<(Vec<State>, State)> = Vec::new();
    for &(q, s) in &order {
        let key = (vec![q], s);
        index.insert(key.clone(), states.len());
        states.push(key);
    }
    let mut delta: Vec<Option<State>> = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let (set, s) = states[head].clone();
        for x in 0..k {
            let mut next: Vec<State> = set
                .iter()
                .flat_map(|&q| a.successors(q, x).iter().filter(|t| t.1 == 2).map(|t| t.0))
                .collect();
            next.sort_unstable();
            next.dedup();
            if next.is_empty() {
                delta.push(None);
                continue;
            }
            let key = (next, rlta.successor(s, x));
            let t = match index.get(&key) {
                Some(&t) => t,
                None => {
                    index.insert(key.clone(), states.len());
                    states.push(key);
                    states.len() - 1
                }
            };
            delta.push(Some(t));
        }
        head += 1;
    }
    let single = rlta.state_count() == 1;
    let names = states
        .iter()
        .map(|(set, s)| {
            let base: String = if set.len() == 1 {
                String::from(a.name(set[0]))
            } else {
                let parts: Vec<&str> = set.iter().map(|&q| a.name(q)).collect();
                alloc::format!("{{{}}}", parts.join(","))
            };
            if single {
                base
            } else {
                alloc::format!("{base}@{}", rlta.name(*s))
            }
        })
        .collect();
    let labels = states.iter().map(|&(_, s)| s).collect();
    Ok(FloatingAutomaton::from_parts(rlta, delta, labels, None, names))
}
