//! Floating automata: partial deterministic automata whose states are labelled
//! with states of a residual tracker. A word is accepted if, from some
//! position on, it has an infinite run that starts in a state labelled with
//! the tracker state reached at that position.

mod minimize;
mod ops;
mod residualize;
mod safe;

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

pub use minimize::minimize_floating;
pub use ops::{join_names, max_accepting_sccs, merge_names, product_floating, union_floating};
pub use residualize::residualize;
pub use safe::{safe_subset, SafeRelation};

use crate::chain::Rlta;
use crate::{Alphabet, Color, Error, LassoWord, OmegaAcceptor, Result, State, Symbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloatingAutomaton {
    rlta: Arc<Rlta>,
    delta: Vec<Option<State>>,
    labels: Vec<State>,
    marking: Option<Vec<usize>>,
    names: Vec<String>,
}

impl FloatingAutomaton {
    /// `labels[q]` is the tracker state of `q`; each transition must follow
    /// the tracker and at most one target per (state, symbol) is allowed.
    pub fn new<I>(rlta: Arc<Rlta>, labels: Vec<State>, transitions: I) -> Result<Self>
    where
        I: IntoIterator<Item = (State, Symbol, State)>,
    {
        let n = labels.len();
        let k = rlta.alphabet().len();
        if let Some(&s) = labels.iter().find(|&&s| s >= rlta.state_count()) {
            return Err(Error::StateOutOfRange(s));
        }
        let mut delta = vec![None; n * k];
        for (q, x, t) in transitions {
            if q >= n {
                return Err(Error::StateOutOfRange(q));
            }
            if t >= n {
                return Err(Error::StateOutOfRange(t));
            }
            if x >= k {
                return Err(Error::SymbolOutOfRange(x));
            }
            if labels[t] != rlta.successor(labels[q], x) {
                return Err(Error::LabelMismatch { state: q, symbol: x });
            }
            match delta[q * k + x] {
                Some(old) if old != t => return Err(Error::NotDeterministic { state: q, symbol: x }),
                _ => delta[q * k + x] = Some(t),
            }
        }
        let names = (0..n).map(|q| q.to_string()).collect();
        Ok(FloatingAutomaton { rlta, delta, labels, marking: None, names })
    }

    /// No states at all; accepts nothing.
    pub fn empty(rlta: Arc<Rlta>) -> Self {
        FloatingAutomaton { rlta, delta: Vec::new(), labels: Vec::new(), marking: None, names: Vec::new() }
    }

    /// The tracker itself as a total floating automaton.
    pub fn from_rlta(rlta: Arc<Rlta>) -> Self {
        let n = rlta.state_count();
        let k = rlta.alphabet().len();
        let delta = (0..n * k).map(|c| Some(rlta.successor(c / k, c % k))).collect();
        let names = (0..n).map(|s| rlta.name(s).to_string()).collect();
        FloatingAutomaton { delta, labels: (0..n).collect(), marking: None, names, rlta }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.state_count() {
            return Err(Error::Invalid(alloc::format!("{} names for {} states", names.len(), self.state_count())));
        }
        self.names = names;
        Ok(self)
    }

    pub fn with_marking(mut self, marking: Option<Vec<usize>>) -> Result<Self> {
        if marking.as_ref().is_some_and(|m| m.len() != self.state_count()) {
            return Err(Error::Invalid("marking length differs from state count".into()));
        }
        self.marking = marking;
        Ok(self)
    }

    pub(crate) fn from_parts(
        rlta: Arc<Rlta>,
        delta: Vec<Option<State>>,
        labels: Vec<State>,
        marking: Option<Vec<usize>>,
        names: Vec<String>,
    ) -> Self {
        FloatingAutomaton { rlta, delta, labels, marking, names }
    }

    pub fn rlta(&self) -> &Arc<Rlta> {
        &self.rlta
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.rlta.alphabet()
    }

    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn successor(&self, q: State, x: Symbol) -> Option<State> {
        self.delta[q * self.rlta.alphabet().len() + x]
    }

    pub fn label(&self, q: State) -> State {
        self.labels[q]
    }

    pub fn labels(&self) -> &[State] {
        &self.labels
    }

    pub fn marking(&self) -> Option<&[usize]> {
        self.marking.as_deref()
    }

    pub fn mark(&self, q: State) -> Option<usize> {
        self.marking.as_ref().map(|m| m[q])
    }

    pub fn name(&self, q: State) -> &str {
        &self.names[q]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn transitions(&self) -> impl Iterator<Item = (State, Symbol, State)> + '_ {
        let k = self.rlta.alphabet().len();
        self.delta.iter().enumerate().filter_map(move |(c, t)| t.map(|t| (c / k, c % k, t)))
    }

    pub fn transition_count(&self) -> usize {
        self.delta.iter().filter(|t| t.is_some()).count()
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let k = self.rlta.alphabet().len();
        (0..self.state_count())
            .map(|q| {
                let mut v: Vec<usize> = self.delta[q * k..(q + 1) * k].iter().flatten().copied().collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect()
    }
}

/// Floating membership of a lasso word.
pub fn floating_member(f: &FloatingAutomaton, w: &LassoWord) -> Result<bool> {
    let k = f.alphabet().len();
    if let Some(&x) = w.stem().iter().chain(w.cycle()).find(|&&x| x >= k) {
        return Err(Error::SymbolOutOfRange(x));
    }
    let positions = w.positions();
    let r = f.rlta();
    // tracker states occurring at each lasso position
    let mut seen = vec![false; r.state_count() * positions];
    let (mut s, mut p) = (r.initial(), 0);
    while !seen[s * positions + p] {
        seen[s * positions + p] = true;
        s = r.successor(s, w.letter(p));
        p = w.next(p);
    }
    // 0 unknown, 1 on current walk, 2 infinite, 3 dies
    let n = f.state_count() * positions;
    let mut status = vec![0u8; n];
    let mut walk = Vec::new();
    for q in 0..f.state_count() {
        for p in 0..positions {
            if !seen[f.label(q) * positions + p] {
                continue;
            }
            let mut node = q * positions + p;
            let result = loop {
                match status[node] {
                    1 | 2 => break 2,
                    3 => break 3,
                    _ => {}
                }
                status[node] = 1;
                walk.push(node);
                let (state, pos) = (node / positions, node % positions);
                match f.successor(state, w.letter(pos)) {
                    Some(t) => node = t * positions + w.next(pos),
                    None => break 3,
                }
            };
            for v in walk.drain(..) {
                status[v] = result;
            }
            if result == 2 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

impl OmegaAcceptor for FloatingAutomaton {
    fn alphabet(&self) -> &Alphabet {
        self.rlta.alphabet()
    }

    fn accepts(&self, w: &LassoWord) -> Result<bool> {
        floating_member(self, w)
    }
}

/// Chain whose levels are floating automata over one shared tracker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloatingChain {
    rlta: Arc<Rlta>,
    levels: Vec<FloatingAutomaton>,
}

impl FloatingChain {
    pub fn new(rlta: Arc<Rlta>, levels: Vec<FloatingAutomaton>) -> Result<Self> {
        if levels.iter().any(|l| *l.rlta() != rlta) {
            return Err(Error::TrackerMismatch);
        }
        Ok(FloatingChain { rlta, levels })
    }

    pub fn rlta(&self) -> &Arc<Rlta> {
        &self.rlta
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Level `i`, counted from 1.
    pub fn level(&self, i: usize) -> Result<&FloatingAutomaton> {
        if i == 0 || i > self.levels.len() {
            return Err(Error::LevelOutOfRange { index: i, levels: self.levels.len() });
        }
        Ok(&self.levels[i - 1])
    }

    pub fn levels(&self) -> &[FloatingAutomaton] {
        &self.levels
    }

    pub fn color(&self, w: &LassoWord) -> Result<Color> {
        for (i, level) in self.levels.iter().enumerate().rev() {
            if floating_member(level, w)? {
                return Ok(i as Color + 1);
            }
        }
        Ok(0)
    }
}

impl OmegaAcceptor for FloatingChain {
    fn alphabet(&self) -> &Alphabet {
        self.rlta.alphabet()
    }

    fn accepts(&self, w: &LassoWord) -> Result<bool> {
        Ok(self.color(w)? % 2 == 0)
    }
}
