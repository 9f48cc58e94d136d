use alloc::string::String;
use alloc::vec::Vec;

use crate::{Color, State, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("symbol `{0}` occurs twice in the alphabet")]
    DuplicateSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol index {0} out of range")]
    SymbolOutOfRange(Symbol),
    #[error("state {0} out of range")]
    StateOutOfRange(State),
    #[error("automaton has no states")]
    NoStates,
    #[error("transition ({from}, {symbol}, {target}) carries two colors {first} and {second}")]
    ConflictingColor {
        from: State,
        symbol: Symbol,
        target: State,
        first: Color,
        second: Color,
    },
    #[error("no transition from state {state} on symbol {symbol}")]
    Incomplete { state: State, symbol: Symbol },
    #[error("state {state} has several successors on symbol {symbol}")]
    NotDeterministic { state: State, symbol: Symbol },
    #[error("color {color} not allowed here (expected {expected})")]
    UnexpectedColor { color: Color, expected: &'static str },
    #[error("operands use different alphabets")]
    AlphabetMismatch,
    #[error("floating automata are labelled by different trackers")]
    TrackerMismatch,
    #[error("not language-deterministic: successors of state {state} on symbol {symbol} have different languages")]
    NotLanguageDeterministic { state: State, symbol: Symbol },
    #[error("unreachable states {0:?}")]
    Unreachable(Vec<State>),
    #[error("lasso cycle is empty")]
    EmptyCycle,
    #[error("vertex {0} has no successor")]
    DeadEnd(usize),
    #[error("level {index} out of range (chain has {levels} levels)")]
    LevelOutOfRange { index: usize, levels: usize },
    #[error("semantics `{0}` does not apply to this model")]
    WrongSemantics(&'static str),
    #[error("label of state {state} does not follow the tracker on symbol {symbol}")]
    LabelMismatch { state: State, symbol: Symbol },
    #[error("symbol `{0}` is not of the form input|output")]
    BadIoSymbol(String),
    #[error("{0}")]
    Invalid(String),
}
