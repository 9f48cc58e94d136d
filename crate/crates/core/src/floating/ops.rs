use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::FloatingAutomaton;
use crate::graph::{is_nontrivial, tarjan};
use crate::{Error, Result, State};

/// Joins composite state names with commas, skipping empty parts.
pub fn join_names(a: &str, b: &str) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => String::from(b),
        (_, true) => String::from(a),
        _ => alloc::format!("{a},{b}"),
    }
}

fn split_top(name: &str) -> Vec<&str> {
    let (mut parts, mut depth, mut start) = (Vec::new(), 0usize, 0);
    for (i, ch) in name.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&name[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&name[start..]);
    parts
}

/// Name of two merged states: `2,3` and `2,4` become `2,{3,4}`. Names that
/// differ elsewhere keep the first one.
pub fn merge_names(a: &str, b: &str) -> String {
    let (pa, pb) = (split_top(a), split_top(b));
    let last = pa.len() - 1;
    if a == b || pa.len() != pb.len() || pa[..last] != pb[..last] {
        return String::from(a);
    }
    let mut members: Vec<&str> = Vec::new();
    for part in [pa[last], pb[last]] {
        let inner = part.strip_prefix('{').and_then(|p| p.strip_suffix('}')).unwrap_or(part);
        members.extend(split_top(inner));
    }
    members.sort_unstable();
    members.dedup();
    let mut out: Vec<String> = pa[..last].iter().map(|s| String::from(*s)).collect();
    out.push(alloc::format!("{{{}}}", members.join(",")));
    out.join(",")
}

fn same_tracker(f1: &FloatingAutomaton, f2: &FloatingAutomaton) -> Result<()> {
    if f1.rlta() == f2.rlta() {
        Ok(())
    } else {
        Err(Error::TrackerMismatch)
    }
}

/// Product over label-equal state pairs, ordered lexicographically. States are
/// labelled and marked by their first component.
pub fn product_floating(f1: &FloatingAutomaton, f2: &FloatingAutomaton) -> Result<FloatingAutomaton> {
    same_tracker(f1, f2)?;
    let (n1, n2) = (f1.state_count(), f2.state_count());
    let mut index = vec![usize::MAX; n1 * n2];
    let mut pairs = Vec::new();
    for a in 0..n1 {
        for b in 0..n2 {
            if f1.label(a) == f2.label(b) {
                index[a * n2 + b] = pairs.len();
                pairs.push((a, b));
            }
        }
    }
    let k = f1.alphabet().len();
    let mut delta = vec![None; pairs.len() * k];
    for (p, &(a, b)) in pairs.iter().enumerate() {
        for x in 0..k {
            if let (Some(a2), Some(b2)) = (f1.successor(a, x), f2.successor(b, x)) {
                delta[p * k + x] = Some(index[a2 * n2 + b2]);
            }
        }
    }
    let labels = pairs.iter().map(|&(a, _)| f1.label(a)).collect();
    let marking = pairs.iter().map(|&(a, _)| a).collect();
    let names = pairs.iter().map(|&(a, b)| join_names(f1.name(a), f2.name(b))).collect();
    Ok(FloatingAutomaton::from_parts(f1.rlta().clone(), delta, labels, Some(marking), names))
}

/// Disjoint union; states of `f2` follow those of `f1`. Markings are kept
/// only if both operands are marked.
pub fn union_floating(f1: &FloatingAutomaton, f2: &FloatingAutomaton) -> Result<FloatingAutomaton> {
    same_tracker(f1, f2)?;
    let shift = f1.state_count();
    let mut delta: Vec<Option<State>> = f1.delta.clone();
    delta.extend(f2.delta.iter().map(|t| t.map(|t| t + shift)));
    let mut labels = f1.labels.clone();
    labels.extend_from_slice(&f2.labels);
    let marking = match (&f1.marking, &f2.marking) {
        (Some(m1), Some(m2)) => Some(m1.iter().chain(m2).copied().collect()),
        _ => None,
    };
    let mut names = f1.names.clone();
    names.extend_from_slice(&f2.names);
    Ok(FloatingAutomaton::from_parts(f1.rlta().clone(), delta, labels, marking, names))
}

/// Maximal SCCs containing at least one transition, ordered by smallest state.
pub fn max_accepting_sccs(f: &FloatingAutomaton) -> Vec<Vec<State>> {
    let adj = f.adjacency();
    let mut comps: Vec<Vec<State>> = tarjan(&adj).into_iter().filter(|c| is_nontrivial(&adj, c)).collect();
    comps.sort_by_key(|c| c[0]);
    comps
}

impl FloatingAutomaton {
    /// Sub-automaton on `keep` (ascending state order), dropping transitions
    /// that leave it.
    pub fn restrict(&self, keep: &[bool]) -> FloatingAutomaton {
        let k = self.alphabet().len();
        let mut index = vec![usize::MAX; self.state_count()];
        let mut order = Vec::new();
        for q in 0..self.state_count() {
            if keep[q] {
                index[q] = order.len();
                order.push(q);
            }
        }
        let delta = order
            .iter()
            .flat_map(|&q| (0..k).map(move |x| (q, x)))
            .map(|(q, x)| self.successor(q, x).filter(|&t| keep[t]).map(|t| index[t]))
            .collect();
        let labels = order.iter().map(|&q| self.labels[q]).collect();
        let marking = self.marking.as_ref().map(|m| order.iter().map(|&q| m[q]).collect());
        let names = order.iter().map(|&q| self.names[q].clone()).collect();
        FloatingAutomaton::from_parts(self.rlta.clone(), delta, labels, marking, names)
    }

    /// Sub-automaton on the given states.
    pub fn restrict_to(&self, states: &[State]) -> FloatingAutomaton {
        let mut keep = vec![false; self.state_count()];
        for &q in states {
            keep[q] = true;
        }
        self.restrict(&keep)
    }

    /// Drops transitions between different maximal SCCs.
    pub fn without_inter_scc_transitions(&self) -> FloatingAutomaton {
        let adj = self.adjacency();
        let comps = tarjan(&adj);
        let id = crate::graph::component_ids(&comps, adj.len());
        let k = self.alphabet().len();
        let mut out = self.clone();
        for q in 0..self.state_count() {
            for x in 0..k {
                if let Some(t) = self.successor(q, x) {
                    if id[t] != id[q] {
                        out.delta[q * k + x] = None;
                    }
                }
            }
        }
        out
    }

    /// Redirects transitions into `gone` to `keep` and removes `gone`.
    pub(crate) fn merge_into(&self, keep: State, gone: State) -> FloatingAutomaton {
        let mut g = self.clone();
        for t in g.delta.iter_mut().flatten() {
            if *t == gone {
                *t = keep;
            }
        }
        g.names[keep] = merge_names(&self.names[keep], &self.names[gone]);
        let mut alive = vec![true; self.state_count()];
        alive[gone] = false;
        g.restrict(&alive)
    }
}
