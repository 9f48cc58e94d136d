use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::inclusion::InclusionGame;
use crate::{Alphabet, AutomatonStructure, Error, Result, State, Symbol};

/// Residual language tracking automaton: a complete deterministic automaton
/// without acceptance whose states stand for residual languages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rlta {
    alphabet: Alphabet,
    delta: Vec<State>,
    initial: State,
    names: Vec<String>,
}

impl Rlta {
    /// `delta[s * |Σ| + x]` is the successor of `s` on `x`.
    pub fn new(alphabet: Alphabet, state_count: usize, initial: State, delta: Vec<State>) -> Result<Self> {
        if state_count == 0 {
            return Err(Error::NoStates);
        }
        if initial >= state_count {
            return Err(Error::StateOutOfRange(initial));
        }
        if delta.len() != state_count * alphabet.len() {
            return Err(Error::Invalid(alloc::format!(
                "tracker needs {} transitions, got {}",
                state_count * alphabet.len(),
                delta.len()
            )));
        }
        if let Some(&t) = delta.iter().find(|&&t| t >= state_count) {
            return Err(Error::StateOutOfRange(t));
        }
        let names = (0..state_count).map(|s| s.to_string()).collect();
        Ok(Rlta { alphabet, delta, initial, names })
    }

    /// One state looping on every symbol.
    pub fn trivial(alphabet: Alphabet) -> Self {
        let delta = vec![0; alphabet.len()];
        Rlta { alphabet, delta, initial: 0, names: vec!["0".to_string()] }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.state_count() {
            return Err(Error::Invalid(alloc::format!("{} names for {} states", names.len(), self.state_count())));
        }
        self.names = names;
        Ok(self)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len() / self.alphabet.len()
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn successor(&self, s: State, x: Symbol) -> State {
        self.delta[s * self.alphabet.len() + x]
    }

    pub fn name(&self, s: State) -> &str {
        &self.names[s]
    }

    /// State reached from `from` after reading `word`.
    pub fn run(&self, from: State, word: &[Symbol]) -> State {
        word.iter().fold(from, |s, &x| self.successor(s, x))
    }

    /// Same tracker with states renumbered in breadth-first order from the
    /// initial state; unreachable states are dropped.
    pub fn normalized(&self) -> Rlta {
        let k = self.alphabet.len();
        let mut index = vec![usize::MAX; self.state_count()];
        let mut order = vec![self.initial];
        index[self.initial] = 0;
        let mut head = 0;
        while head < order.len() {
            let s = order[head];
            head += 1;
            for x in 0..k {
                let t = self.successor(s, x);
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                }
            }
        }
        let delta = order.iter().flat_map(|&s| (0..k).map(move |x| (s, x))).map(|(s, x)| index[self.successor(s, x)]).collect();
        let names = order.iter().map(|&s| self.names[s].clone()).collect();
        Rlta { alphabet: self.alphabet.clone(), delta, initial: 0, names }
    }
}

/// An RLTA together with the residual class of every automaton state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualTracker {
    pub rlta: Rlta,
    pub state_map: Vec<State>,
}

/// Residual classes of a language-deterministic co-Büchi automaton, computed
/// from mutual inclusion of state languages.
pub fn residual_tracking_single(a: &AutomatonStructure) -> Result<ResidualTracker> {
    let incl = InclusionGame::new(a, a)?;
    let n = a.state_count();
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<State> = Vec::new();
    for q in 0..n {
        if let Some(c) = reps.iter().position(|&r| incl.includes(q, r) && incl.includes(r, q)) {
            class[q] = c;
        } else {
            class[q] = reps.len();
            reps.push(q);
        }
    }
    let k = a.alphabet().len();
    let mut delta = vec![usize::MAX; reps.len() * k];
    for q in 0..n {
        for x in 0..k {
            let succ = a.successors(q, x);
            if succ.is_empty() {
                return Err(Error::Incomplete { state: q, symbol: x });
            }
            for &(t, _) in succ {
                let slot = &mut delta[class[q] * k + x];
                if *slot == usize::MAX {
                    *slot = class[t];
                } else if *slot != class[t] {
                    return Err(Error::NotLanguageDeterministic { state: q, symbol: x });
                }
            }
        }
    }
    let names = reps.iter().map(|&r| a.name(r).to_string()).collect();
    let rlta = Rlta::new(a.alphabet().clone(), reps.len(), class[a.initial()], delta)?.with_names(names)?;
    Ok(ResidualTracker { rlta, state_map: class })
}
