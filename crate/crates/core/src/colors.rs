//! Dominating colors achievable by runs of an automaton on a lasso word.
//!
//! Runs on `u·v^ω` are paths in the product of the automaton with the lasso
//! positions. The dominating color of a run is the least color it sees
//! infinitely often; the set of those colors is obtained by peeling SCCs by
//! their minimum color.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{component_ids, tarjan};
use crate::{AutomatonStructure, Color, LassoWord, State};

/// Product of an automaton with the positions of a lasso word.
/// Node `(q, p)` is numbered `q * positions + p`.
pub struct LassoProduct {
    positions: usize,
    edges: Vec<Vec<(usize, Color)>>,
    initial: usize,
}

impl LassoProduct {
    pub fn new(a: &AutomatonStructure, w: &LassoWord) -> Self {
        let positions = w.positions();
        let n = a.state_count() * positions;
        let mut edges = vec![Vec::new(); n];
        for q in 0..a.state_count() {
            for p in 0..positions {
                let p2 = w.next(p);
                edges[q * positions + p] = a
                    .successors(q, w.letter(p))
                    .iter()
                    .map(|&(t, c)| (t * positions + p2, c))
                    .collect();
            }
        }
        LassoProduct { positions, edges, initial: a.initial() * positions }
    }

    pub fn node_count(&self) -> usize {
        self.edges.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn node(&self, state: State, pos: usize) -> usize {
        state * self.positions + pos
    }

    pub fn state_of(&self, node: usize) -> State {
        node / self.positions
    }

    pub fn edges(&self) -> &[Vec<(usize, Color)>] {
        &self.edges
    }

    pub fn reachable(&self) -> Vec<bool> {
        crate::graph::reachable_from(&self.adjacency(), self.initial)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|es| es.iter().map(|&(t, _)| t).collect()).collect()
    }

    /// Achievable dominating colors from every node.
    pub fn achievable_per_node(&self) -> Vec<BTreeSet<Color>> {
        let adj = self.adjacency();
        let comps = tarjan(&adj);
        let id = component_ids(&comps, adj.len());
        let mut per_comp: Vec<BTreeSet<Color>> = Vec::with_capacity(comps.len());
        // sinks come first, so successor components are already done
        for (c, members) in comps.iter().enumerate() {
            let mut set = BTreeSet::new();
            let internal: Vec<(usize, usize, Color)> = members
                .iter()
                .flat_map(|&v| self.edges[v].iter().map(move |&(t, col)| (v, t, col)))
                .filter(|&(_, t, _)| id[t] == c)
                .collect();
            cycle_colors(&internal, &mut set);
            for &v in members {
                for &(t, _) in &self.edges[v] {
                    if id[t] != c {
                        let other = per_comp[id[t]].clone();
                        set.extend(other);
                    }
                }
            }
            per_comp.push(set);
        }
        id.iter().map(|&c| per_comp[c].clone()).collect()
    }

    /// Achievable dominating colors of runs from the initial node.
    pub fn achievable_from_initial(&self) -> BTreeSet<Color> {
        let seen = self.reachable();
        let internal: Vec<(usize, usize, Color)> = (0..self.edges.len())
            .filter(|&v| seen[v])
            .flat_map(|v| self.edges[v].iter().map(move |&(t, c)| (v, t, c)))
            .collect();
        let mut set = BTreeSet::new();
        cycle_colors(&internal, &mut set);
        set
    }
}

/// Minimum colors of all strongly connected edge sets inside `edges`.
pub fn cycle_colors(edges: &[(usize, usize, Color)], out: &mut BTreeSet<Color>) {
    if edges.is_empty() {
        return;
    }
    let mut nodes: Vec<usize> = edges.iter().flat_map(|&(s, t, _)| [s, t]).collect();
    nodes.sort_unstable();
    nodes.dedup();
    let local = |v: usize| nodes.binary_search(&v).expect("endpoint listed");
    let mut adj = vec![Vec::new(); nodes.len()];
    for &(s, t, _) in edges {
        adj[local(s)].push(local(t));
    }
    let comps = tarjan(&adj);
    let id = component_ids(&comps, nodes.len());
    let mut groups: Vec<Vec<(usize, usize, Color)>> = vec![Vec::new(); comps.len()];
    for &(s, t, c) in edges {
        let (ls, lt) = (local(s), local(t));
        if id[ls] == id[lt] {
            groups[id[ls]].push((s, t, c));
        }
    }
    for group in groups {
        let Some(min) = group.iter().map(|e| e.2).min() else {
            continue;
        };
        out.insert(min);
        let rest: Vec<_> = group.into_iter().filter(|e| e.2 > min).collect();
        cycle_colors(&rest, out);
    }
}
