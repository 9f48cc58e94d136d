//! Rerailing automata and the constructions around them.
//!
//! Everything in this crate is allocation-only and runs without `std`: automaton
//! structures with transition colors, lasso-word membership under several
//! acceptance semantics, min-even parity games, chains of co-Büchi automata,
//! floating automata, minimal rerailing construction and realizability games.
//! File formats and the command line live in the `rerail` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alphabet;
pub mod automaton;
pub mod build;
pub mod chain;
pub mod colors;
pub mod equireach;
pub mod equivalence;
pub mod error;
pub mod examples;
pub mod floating;
pub mod game;
pub mod graph;
pub mod lasso;
pub mod membership;
pub mod synthesis;

pub use alphabet::Alphabet;
pub use automaton::{AutomatonStructure, Transition};
pub use error::Error;
pub use lasso::LassoWord;
pub use membership::{OmegaAcceptor, Semantics};

/// Index of a state.
pub type State = usize;
/// Index of a symbol in an [`Alphabet`].
pub type Symbol = usize;
/// Transition color. Lower colors are more important.
pub type Color = u32;

pub type Result<T> = core::result::Result<T, Error>;
