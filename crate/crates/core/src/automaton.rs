//! Transition-colored automata over a finite alphabet.
//!
//! One structure serves every acceptance semantics; the semantics is chosen at
//! membership time (see [`crate::membership`]).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Alphabet, Color, Error, Result, State, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: State,
    pub symbol: Symbol,
    pub target: State,
    pub color: Color,
}

impl Transition {
    pub fn new(source: State, symbol: Symbol, target: State, color: Color) -> Self {
        Transition { source, symbol, target, color }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomatonStructure {
    alphabet: Alphabet,
    names: Vec<String>,
    initial: State,
    transitions: Vec<Transition>,
    // out[state][symbol] = sorted (target, color)
    out: Vec<Vec<Vec<(State, Color)>>>,
}

impl AutomatonStructure {
    /// Builds an automaton. Repeating a triple with the same color is harmless,
    /// repeating it with another color is an error.
    pub fn new<I>(alphabet: Alphabet, state_count: usize, initial: State, transitions: I) -> Result<Self>
    where
        I: IntoIterator<Item = Transition>,
    {
        if state_count == 0 {
            return Err(Error::NoStates);
        }
        if initial >= state_count {
            return Err(Error::StateOutOfRange(initial));
        }
        let mut colors: BTreeMap<(State, Symbol, State), Color> = BTreeMap::new();
        for t in transitions {
            if t.source >= state_count {
                return Err(Error::StateOutOfRange(t.source));
            }
            if t.target >= state_count {
                return Err(Error::StateOutOfRange(t.target));
            }
            if t.symbol >= alphabet.len() {
                return Err(Error::SymbolOutOfRange(t.symbol));
            }
            match colors.insert((t.source, t.symbol, t.target), t.color) {
                Some(c) if c != t.color => {
                    return Err(Error::ConflictingColor {
                        from: t.source,
                        symbol: t.symbol,
                        target: t.target,
                        first: c,
                        second: t.color,
                    })
                }
                _ => {}
            }
        }
        let mut out = vec![vec![Vec::new(); alphabet.len()]; state_count];
        let transitions: Vec<Transition> = colors
            .into_iter()
            .map(|((s, x, t), c)| {
                out[s][x].push((t, c));
                Transition::new(s, x, t, c)
            })
            .collect();
        let names = (0..state_count).map(|q| q.to_string()).collect();
        Ok(AutomatonStructure { alphabet, names, initial, transitions, out })
    }

    pub fn with_names<I, S>(mut self, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != self.state_count() {
            return Err(Error::Invalid(alloc::format!(
                "{} names for {} states",
                names.len(),
                self.state_count()
            )));
        }
        self.names = names;
        Ok(self)
    }

    /// Same automaton started in `state`.
    pub fn with_initial(&self, state: State) -> Result<Self> {
        if state >= self.state_count() {
            return Err(Error::StateOutOfRange(state));
        }
        let mut a = self.clone();
        a.initial = state;
        Ok(a)
    }

    pub fn set_name(&mut self, state: State, name: impl Into<String>) {
        self.names[state] = name.into();
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.out.len()
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn name(&self, state: State) -> &str {
        &self.names[state]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn state_by_name(&self, name: &str) -> Option<State> {
        self.names.iter().position(|n| n == name)
    }

    /// All transitions sorted by (source, symbol, target).
    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Successors of `state` on `symbol` with their colors, sorted by target.
    pub fn successors(&self, state: State, symbol: Symbol) -> &[(State, Color)] {
        &self.out[state][symbol]
    }

    pub fn color_of(&self, source: State, symbol: Symbol, target: State) -> Option<Color> {
        self.out[source][symbol]
            .iter()
            .find(|(t, _)| *t == target)
            .map(|&(_, c)| c)
    }

    pub fn max_color(&self) -> Color {
        self.transitions.iter().map(|t| t.color).max().unwrap_or(0)
    }

    /// (state, symbol) pairs without any transition.
    pub fn validate_complete(&self) -> Vec<(State, Symbol)> {
        let mut missing = Vec::new();
        for q in 0..self.state_count() {
            for x in self.alphabet.symbols() {
                if self.out[q][x].is_empty() {
                    missing.push((q, x));
                }
            }
        }
        missing
    }

    pub fn ensure_complete(&self) -> Result<()> {
        match self.validate_complete().first() {
            Some(&(state, symbol)) => Err(Error::Incomplete { state, symbol }),
            None => Ok(()),
        }
    }

    pub fn is_deterministic(&self) -> bool {
        self.out.iter().all(|row| row.iter().all(|s| s.len() <= 1))
    }

    pub fn ensure_deterministic(&self) -> Result<()> {
        for (state, row) in self.out.iter().enumerate() {
            if let Some(symbol) = row.iter().position(|s| s.len() > 1) {
                return Err(Error::NotDeterministic { state, symbol });
            }
        }
        Ok(())
    }

    /// (state, symbol) pairs whose outgoing transitions use more than one color.
    pub fn check_color_homogeneous(&self) -> Vec<(State, Symbol)> {
        let mut bad = Vec::new();
        for (q, row) in self.out.iter().enumerate() {
            for (x, succ) in row.iter().enumerate() {
                if succ.windows(2).any(|w| w[0].1 != w[1].1) {
                    bad.push((q, x));
                }
            }
        }
        bad
    }

    /// Checks that every color lies in `allowed`.
    pub fn ensure_colors(&self, allowed: &[Color], expected: &'static str) -> Result<()> {
        match self.transitions.iter().find(|t| !allowed.contains(&t.color)) {
            Some(t) => Err(Error::UnexpectedColor { color: t.color, expected }),
            None => Ok(()),
        }
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(q) = stack.pop() {
            for row in &self.out[q] {
                for &(t, _) in row {
                    if !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        seen
    }

    pub fn ensure_reachable(&self) -> Result<()> {
        let unreachable: Vec<State> = self
            .reachable()
            .iter()
            .enumerate()
            .filter(|(_, r)| !**r)
            .map(|(q, _)| q)
            .collect();
        if unreachable.is_empty() {
            Ok(())
        } else {
            Err(Error::Unreachable(unreachable))
        }
    }

    /// Restriction to the states reachable from the initial state, renumbered
    /// in ascending order.
    pub fn trim(&self) -> AutomatonStructure {
        let keep = self.reachable();
        let mut index = vec![usize::MAX; self.state_count()];
        let mut names = Vec::new();
        for q in 0..self.state_count() {
            if keep[q] {
                index[q] = names.len();
                names.push(self.names[q].clone());
            }
        }
        let transitions = self
            .transitions
            .iter()
            .filter(|t| keep[t.source])
            .map(|t| Transition::new(index[t.source], t.symbol, index[t.target], t.color));
        AutomatonStructure::new(self.alphabet.clone(), names.len(), index[self.initial], transitions)
            .and_then(|a| a.with_names(names))
            .expect("restriction of a valid automaton is valid")
    }

    /// Same transitions with every color replaced by `f(color)`.
    pub fn map_colors(&self, f: impl Fn(Color) -> Color) -> AutomatonStructure {
        let transitions = self
            .transitions
            .iter()
            .map(|t| Transition::new(t.source, t.symbol, t.target, f(t.color)));
        AutomatonStructure::new(self.alphabet.clone(), self.state_count(), self.initial, transitions)
            .and_then(|a| a.with_names(self.names.clone()))
            .expect("recoloring keeps the structure valid")
    }
}
