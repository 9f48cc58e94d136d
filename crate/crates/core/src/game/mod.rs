//! Two-player parity games with vertex colors. Player 0 wins a play iff the
//! least color occurring infinitely often is even.

mod zielonka;

use alloc::string::String;
use alloc::vec::Vec;

pub use zielonka::solve;

use crate::{Color, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Player {
    /// Player 0, wins on even colors.
    Even,
    /// Player 1, wins on odd colors.
    Odd,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    /// The player favoured by `color`.
    pub fn of_color(color: Color) -> Player {
        if color % 2 == 0 {
            Player::Even
        } else {
            Player::Odd
        }
    }

    pub fn index(self) -> usize {
        match self {
            Player::Even => 0,
            Player::Odd => 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParityGame {
    owner: Vec<Player>,
    color: Vec<Color>,
    succ: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl ParityGame {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, owner: Player, color: Color) -> usize {
        self.add_labelled(owner, color, String::new())
    }

    pub fn add_labelled(&mut self, owner: Player, color: Color, label: String) -> usize {
        self.owner.push(owner);
        self.color.push(color);
        self.succ.push(Vec::new());
        self.labels.push(label);
        self.owner.len() - 1
    }

    /// Adds an edge unless it already exists.
    pub fn add_edge(&mut self, from: usize, to: usize) {
        if !self.succ[from].contains(&to) {
            self.succ[from].push(to);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.owner.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn owner(&self, v: usize) -> Player {
        self.owner[v]
    }

    pub fn color(&self, v: usize) -> Color {
        self.color[v]
    }

    pub fn set_color(&mut self, v: usize, color: Color) {
        self.color[v] = color;
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn set_label(&mut self, v: usize, label: String) {
        self.labels[v] = label;
    }

    pub fn validate(&self) -> Result<()> {
        match self.succ.iter().position(Vec::is_empty) {
            Some(v) => Err(Error::DeadEnd(v)),
            None => Ok(()),
        }
    }
}

/// Winning regions of a solved game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    winner: Vec<Player>,
}

impl Solution {
    pub fn winner(&self, v: usize) -> Player {
        self.winner[v]
    }

    /// Vertices won by `player`, ascending.
    pub fn region(&self, player: Player) -> Vec<usize> {
        (0..self.winner.len()).filter(|&v| self.winner[v] == player).collect()
    }
}
