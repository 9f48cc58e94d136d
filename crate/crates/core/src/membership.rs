//! Lasso membership under the supported acceptance semantics.

use alloc::collections::BTreeSet;
use alloc::vec;

use crate::colors::LassoProduct;
use crate::{Alphabet, AutomatonStructure, Color, Error, LassoWord, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Semantics {
    /// Accept iff the largest dominating color over all runs is even.
    Rerailing,
    /// Nondeterministic parity: some run has an even dominating color.
    ParityExists,
    /// Deterministic parity: the unique run has an even dominating color.
    ParityDet,
    /// Co-Büchi with colors 1 (rejecting) and 2 (accepting).
    CoBuchi,
    /// Chain of co-Büchi automata.
    Chain,
    /// Floating automaton or floating chain.
    Floating,
}

impl Semantics {
    pub const ALL: [Semantics; 6] = [
        Semantics::Rerailing,
        Semantics::ParityExists,
        Semantics::ParityDet,
        Semantics::CoBuchi,
        Semantics::Chain,
        Semantics::Floating,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Rerailing => "rerailing",
            Semantics::ParityExists => "parity-exists",
            Semantics::ParityDet => "parity-det",
            Semantics::CoBuchi => "cobuchi",
            Semantics::Chain => "chain",
            Semantics::Floating => "floating",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }
}

/// Anything that decides membership of lasso words.
pub trait OmegaAcceptor {
    fn alphabet(&self) -> &Alphabet;
    fn accepts(&self, word: &LassoWord) -> Result<bool>;
}

/// An automaton read under one of the automaton semantics.
#[derive(Clone, Copy)]
pub struct Interpreted<'a> {
    pub automaton: &'a AutomatonStructure,
    pub semantics: Semantics,
}

impl<'a> Interpreted<'a> {
    pub fn new(automaton: &'a AutomatonStructure, semantics: Semantics) -> Self {
        Interpreted { automaton, semantics }
    }
}

impl OmegaAcceptor for Interpreted<'_> {
    fn alphabet(&self) -> &Alphabet {
        self.automaton.alphabet()
    }

    fn accepts(&self, word: &LassoWord) -> Result<bool> {
        let a = self.automaton;
        match self.semantics {
            Semantics::Rerailing => member_rerailing(a, word),
            Semantics::ParityExists => member_parity_exists(a, word),
            Semantics::ParityDet => member_parity_det(a, word),
            Semantics::CoBuchi => member_cobuchi(a, word),
            s => Err(Error::WrongSemantics(s.name())),
        }
    }
}

fn check_word(a: &AutomatonStructure, w: &LassoWord) -> Result<()> {
    let k = a.alphabet().len();
    match w.stem().iter().chain(w.cycle()).find(|&&x| x >= k) {
        Some(&x) => Err(Error::SymbolOutOfRange(x)),
        None => Ok(()),
    }
}

/// Dominating colors of all runs of `a` on `w`.
pub fn achievable_colors(a: &AutomatonStructure, w: &LassoWord) -> Result<BTreeSet<Color>> {
    check_word(a, w)?;
    Ok(LassoProduct::new(a, w).achievable_from_initial())
}

pub fn member_rerailing(a: &AutomatonStructure, w: &LassoWord) -> Result<bool> {
    a.ensure_complete()?;
    let colors = achievable_colors(a, w)?;
    Ok(colors.last().is_some_and(|c| c % 2 == 0))
}

pub fn member_parity_exists(a: &AutomatonStructure, w: &LassoWord) -> Result<bool> {
    Ok(achievable_colors(a, w)?.iter().any(|c| c % 2 == 0))
}

pub fn member_parity_det(a: &AutomatonStructure, w: &LassoWord) -> Result<bool> {
    a.ensure_deterministic()?;
    a.ensure_complete()?;
    check_word(a, w)?;
    let n = w.positions();
    let mut visit = vec![usize::MAX; a.state_count() * n];
    let mut colors = alloc::vec::Vec::new();
    let (mut q, mut p) = (a.initial(), 0);
    loop {
        let node = q * n + p;
        if visit[node] != usize::MAX {
            let min = colors[visit[node]..].iter().min().copied().expect("cycle has a transition");
            return Ok(min % 2 == 0);
        }
        visit[node] = colors.len();
        let (t, c) = a.successors(q, w.letter(p))[0];
        colors.push(c);
        q = t;
        p = w.next(p);
    }
}

pub fn member_cobuchi(a: &AutomatonStructure, w: &LassoWord) -> Result<bool> {
    a.ensure_colors(&[1, 2], "co-Büchi colors 1 and 2")?;
    Ok(achievable_colors(a, w)?.contains(&2))
}
