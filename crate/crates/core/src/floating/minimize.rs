use alloc::vec;

use super::{FloatingAutomaton, SafeRelation};
use crate::graph::{component_ids, is_nontrivial, tarjan};

/// Shrinks a floating automaton without changing its floating language.
///
/// Repeats until nothing changes: drop transitions between SCCs and states on
/// no cycle; drop a state whose safe language is strictly contained in that of
/// an equally labelled and marked state in another SCC; merge two equally
/// labelled and marked states with equal safe languages (the smaller index
/// survives with its own outgoing transitions).
pub fn minimize_floating(f: &FloatingAutomaton) -> FloatingAutomaton {
    let mut f = f.clone();
    'outer: loop {
        // with transitions between SCCs in place, p may run through q
        f = f.without_inter_scc_transitions();
        let adj = f.adjacency();
        let comps = tarjan(&adj);
        let mut on_cycle = vec![false; f.state_count()];
        for c in comps.iter().filter(|c| is_nontrivial(&adj, c)) {
            for &q in c {
                on_cycle[q] = true;
            }
        }
        if on_cycle.iter().any(|c| !c) {
            f = f.restrict(&on_cycle);
            continue;
        }
        let id = component_ids(&comps, adj.len());
        let safe = SafeRelation::between(&f, &f).expect("same alphabet");
        let n = f.state_count();
        let alike = |q: usize, p: usize| f.label(q) == f.label(p) && f.mark(q) == f.mark(p);
        for q in 0..n {
            for p in 0..n {
                if p != q && alike(q, p) && id[q] != id[p] && safe.includes(q, p) && !safe.includes(p, q) {
                    let mut keep = vec![true; n];
                    keep[q] = false;
                    f = f.restrict(&keep);
                    continue 'outer;
                }
            }
        }
        for q in 0..n {
            for p in q + 1..n {
                if alike(q, p) && safe.includes(q, p) && safe.includes(p, q) {
                    f = f.merge_into(q, p);
                    continue 'outer;
                }
            }
        }
        break;
    }
    f
}
