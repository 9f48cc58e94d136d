//! Realizability of specifications given as rerailing automata over
//! combined input/output symbols `in|out`.
//!
//! The system (player 0) picks an output, the environment (player 1) then
//! picks an input. The nondeterminism of the automaton is resolved at class
//! vertices: for an odd color the system picks the successor, for an even
//! color the environment does.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::game::{solve, ParityGame, Player};
use crate::{Alphabet, AutomatonStructure, Color, Error, Result, State, Symbol};

/// Split of an alphabet of `in|out` symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IoSplit {
    inputs: Vec<String>,
    outputs: Vec<String>,
    symbol: Vec<Symbol>,
}

impl IoSplit {
    /// Inputs and outputs in order of first appearance; every combination
    /// must occur exactly once.
    pub fn from_alphabet(alphabet: &Alphabet) -> Result<Self> {
        let mut inputs: Vec<String> = Vec::new();
        let mut outputs: Vec<String> = Vec::new();
        let mut pairs = Vec::new();
        for name in alphabet.names() {
            let (i, o) = name.split_once('|').ok_or_else(|| Error::BadIoSymbol(String::from(name)))?;
            let pos = |list: &mut Vec<String>, s: &str| match list.iter().position(|t| t == s) {
                Some(p) => p,
                None => {
                    list.push(String::from(s));
                    list.len() - 1
                }
            };
            pairs.push((pos(&mut inputs, i), pos(&mut outputs, o)));
        }
        let mut symbol = vec![usize::MAX; inputs.len() * outputs.len()];
        for (x, &(i, o)) in pairs.iter().enumerate() {
            symbol[i * outputs.len() + o] = x;
        }
        if let Some(missing) = symbol.iter().position(|&s| s == usize::MAX) {
            let (i, o) = (missing / outputs.len(), missing % outputs.len());
            return Err(Error::Invalid(alloc::format!("symbol `{}|{}` missing", inputs[i], outputs[o])));
        }
        Ok(IoSplit { inputs, outputs, symbol })
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    /// Combined symbol for input `i` and output `o`.
    pub fn symbol(&self, i: usize, o: usize) -> Symbol {
        self.symbol[i * self.outputs.len() + o]
    }
}

#[derive(Clone, Debug)]
pub struct RealizabilityGame {
    pub game: ParityGame,
    /// Vertex of the initial automaton state.
    pub initial: usize,
}

/// Builds the game. State vertices come first (vertex `q` is state `q`),
/// followed by the output-choice vertices `(q, y)`; class vertices
/// `(targets, color)` are created on first use. Non-class vertices carry the
/// largest color of the automaton.
pub fn realizability_game(r: &AutomatonStructure, io: &IoSplit) -> Result<RealizabilityGame> {
    r.ensure_complete()?;
    let n = r.state_count();
    let (ni, no) = (io.inputs.len(), io.outputs.len());
    let top = r.max_color();
    let mut g = ParityGame::new();
    for q in 0..n {
        g.add_labelled(Player::Even, top, String::from(r.name(q)));
    }
    for q in 0..n {
        for y in 0..no {
            g.add_labelled(Player::Odd, top, alloc::format!("{}/{}", r.name(q), io.outputs[y]));
            g.add_edge(q, n + q * no + y);
        }
    }
    let mut classes: BTreeMap<(Vec<State>, Color), usize> = BTreeMap::new();
    for q in 0..n {
        for y in 0..no {
            let from = n + q * no + y;
            for x in 0..ni {
                let mut by_color: BTreeMap<Color, Vec<State>> = BTreeMap::new();
                for &(t, c) in r.successors(q, io.symbol(x, y)) {
                    by_color.entry(c).or_default().push(t);
                }
                for (c, targets) in by_color {
                    let v = match classes.get(&(targets.clone(), c)) {
                        Some(&v) => v,
                        None => {
                            let names: Vec<&str> = targets.iter().map(|&t| r.name(t)).collect();
                            let owner = if c % 2 == 1 { Player::Even } else { Player::Odd };
                            let v = g.add_labelled(owner, c, alloc::format!("{{{}}}:{c}", names.join(",")));
                            for &t in &targets {
                                g.add_edge(v, t);
                            }
                            classes.insert((targets, c), v);
                            v
                        }
                    };
                    g.add_edge(from, v);
                }
            }
        }
    }
    Ok(RealizabilityGame { game: g, initial: r.initial() })
}

/// Whether the system wins from the initial state.
pub fn is_realizable(r: &AutomatonStructure) -> Result<bool> {
    let io = IoSplit::from_alphabet(r.alphabet())?;
    let rg = realizability_game(r, &io)?;
    Ok(solve(&rg.game)?.winner(rg.initial) == Player::Even)
}
