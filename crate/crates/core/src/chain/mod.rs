//! Chains of co-Büchi automata (COCOA) and their residual trackers.
//!
//! A chain `A¹ … Aⁿ` assigns a word the color 0 if `A¹` rejects it and
//! otherwise the largest `i` with `w ∈ L(Aⁱ)`; the word is accepted iff that
//! color is even.

mod inclusion;
mod rij;
mod rlta_chain;
mod tracking;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

pub use inclusion::{inclusion_hd_cobuchi, InclusionGame};
pub use rij::{compute_rij, RijRelation};
pub use rlta_chain::{build_rlta_chain, rlta_for_chain};
pub use tracking::{residual_tracking_single, ResidualTracker, Rlta};

use crate::equireach::equireach_relation;
use crate::membership::member_cobuchi;
use crate::{Alphabet, AutomatonStructure, Color, Error, LassoWord, OmegaAcceptor, Result, Transition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    alphabet: Alphabet,
    levels: Vec<AutomatonStructure>,
}

impl Chain {
    /// Levels must be complete co-Büchi automata (colors 1 and 2) over `alphabet`.
    pub fn new(alphabet: Alphabet, levels: Vec<AutomatonStructure>) -> Result<Self> {
        for level in &levels {
            if *level.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch);
            }
            level.ensure_colors(&[1, 2], "co-Büchi colors 1 and 2")?;
            level.ensure_complete()?;
        }
        Ok(Chain { alphabet, levels })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Number of levels `n`.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Level `i`, counted from 1.
    pub fn level(&self, i: usize) -> Result<&AutomatonStructure> {
        if i == 0 || i > self.levels.len() {
            return Err(Error::LevelOutOfRange { index: i, levels: self.levels.len() });
        }
        Ok(&self.levels[i - 1])
    }

    pub fn levels(&self) -> &[AutomatonStructure] {
        &self.levels
    }

    pub fn color(&self, w: &LassoWord) -> Result<Color> {
        for (i, level) in self.levels.iter().enumerate().rev() {
            if member_cobuchi(level, w)? {
                return Ok(i as Color + 1);
            }
        }
        Ok(0)
    }
}

impl OmegaAcceptor for Chain {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn accepts(&self, w: &LassoWord) -> Result<bool> {
        Ok(self.color(w)? % 2 == 0)
    }
}

/// Splits a complete rerailing automaton with maximal color `k` into a chain of
/// `k` co-Büchi automata over the same states.
///
/// Level `i` keeps every transition of color at least `i` as accepting. A
/// transition of smaller color into `q''` becomes a rejecting transition into
/// every state reachable together with `q''`. When both rules produce the
/// same triple the accepting copy is kept.
pub fn decompose_rerailing(r: &AutomatonStructure) -> Result<Chain> {
    r.ensure_complete()?;
    let c = equireach_relation(r)?;
    let mut levels = Vec::new();
    for i in 1..=r.max_color() {
        let mut colors: BTreeMap<(usize, usize, usize), Color> = BTreeMap::new();
        for t in r.transitions() {
            if t.color >= i {
                colors.insert((t.source, t.symbol, t.target), 2);
            } else {
                for q in c.class_of(t.target) {
                    colors.entry((t.source, t.symbol, q)).or_insert(1);
                }
            }
        }
        let level = AutomatonStructure::new(
            r.alphabet().clone(),
            r.state_count(),
            r.initial(),
            colors.into_iter().map(|((s, x, t), col)| Transition::new(s, x, t, col)),
        )?
        .with_names(r.names().iter().cloned())?;
        levels.push(level);
    }
    Chain::new(r.alphabet().clone(), levels)
}
