//! Ultimately periodic words `stem · cycle^ω`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Alphabet, Error, Result, Symbol};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LassoWord {
    stem: Vec<Symbol>,
    cycle: Vec<Symbol>,
}

impl LassoWord {
    pub fn new(stem: Vec<Symbol>, cycle: Vec<Symbol>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::EmptyCycle);
        }
        Ok(LassoWord { stem, cycle })
    }

    pub fn stem(&self) -> &[Symbol] {
        &self.stem
    }

    pub fn cycle(&self) -> &[Symbol] {
        &self.cycle
    }

    /// Number of distinct positions: stem plus one period.
    pub fn positions(&self) -> usize {
        self.stem.len() + self.cycle.len()
    }

    pub fn letter(&self, pos: usize) -> Symbol {
        if pos < self.stem.len() {
            self.stem[pos]
        } else {
            self.cycle[pos - self.stem.len()]
        }
    }

    /// Position after `pos`; the last cycle position wraps to the cycle start.
    pub fn next(&self, pos: usize) -> usize {
        if pos + 1 < self.positions() {
            pos + 1
        } else {
            self.stem.len()
        }
    }

    /// The `k`-th letter of the infinite word.
    pub fn nth(&self, k: usize) -> Symbol {
        if k < self.stem.len() {
            self.stem[k]
        } else {
            self.cycle[(k - self.stem.len()) % self.cycle.len()]
        }
    }

    /// Position in `0..positions()` that reads the `k`-th letter.
    pub fn position_of(&self, k: usize) -> usize {
        if k < self.stem.len() {
            k
        } else {
            self.stem.len() + (k - self.stem.len()) % self.cycle.len()
        }
    }

    /// Shortest representation of the same infinite word: primitive cycle and a
    /// stem that cannot be shortened by rotating the cycle.
    pub fn canonical(&self) -> LassoWord {
        let mut cycle = primitive_root(&self.cycle).to_vec();
        let mut stem = self.stem.clone();
        while let Some(&last) = stem.last() {
            if last != *cycle.last().expect("non-empty cycle") {
                break;
            }
            stem.pop();
            cycle.rotate_right(1);
        }
        LassoWord { stem, cycle }
    }

    pub fn is_canonical(&self) -> bool {
        primitive_root(&self.cycle).len() == self.cycle.len()
            && self.stem.last().is_none_or(|s| s != self.cycle.last().expect("non-empty cycle"))
    }

    /// Parses `stem;cycle` where both parts are `.`-separated symbol names.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let (stem, cycle) = text
            .split_once(';')
            .ok_or_else(|| Error::Invalid(alloc::format!("lasso `{text}` lacks `;`")))?;
        let part = |s: &str| -> Result<Vec<Symbol>> {
            s.split('.')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| alphabet.index_of(t))
                .collect()
        };
        LassoWord::new(part(stem)?, part(cycle)?)
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        let join = |w: &[Symbol]| -> String {
            let names: Vec<&str> = w.iter().map(|&x| alphabet.name(x)).collect();
            names.join(".")
        };
        alloc::format!("{};{}", join(&self.stem), join(&self.cycle))
    }
}

fn primitive_root(w: &[Symbol]) -> &[Symbol] {
    let n = w.len();
    for p in 1..n {
        if n % p == 0 && (p..n).all(|i| w[i] == w[i - p]) {
            return &w[..p];
        }
    }
    w
}

/// Canonical lassos with `|stem| <= max_stem` and `1 <= |cycle| <= max_cycle`,
/// ordered by stem length, cycle length, then lexicographically.
pub fn canonical_lassos(alphabet_len: usize, max_stem: usize, max_cycle: usize) -> impl Iterator<Item = LassoWord> {
    let mut shapes = Vec::new();
    for s in 0..=max_stem {
        for c in 1..=max_cycle {
            shapes.push((s, c));
        }
    }
    shapes.into_iter().flat_map(move |(s, c)| {
        words(alphabet_len, s).flat_map(move |stem| {
            words(alphabet_len, c).filter_map(move |cycle| {
                let w = LassoWord { stem: stem.clone(), cycle };
                w.is_canonical().then_some(w)
            })
        })
    })
}

/// All words of length `len` in lexicographic order.
pub fn words(alphabet_len: usize, len: usize) -> impl Iterator<Item = Vec<Symbol>> {
    let total = alphabet_len.checked_pow(len as u32).expect("word count overflow");
    (0..total).map(move |mut k| {
        let mut w = alloc::vec![0; len];
        for i in (0..len).rev() {
            w[i] = k % alphabet_len;
            k /= alphabet_len;
        }
        w
    })
}
