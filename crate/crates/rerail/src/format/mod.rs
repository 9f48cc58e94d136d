//! Text formats. Every file starts with a header line `<kind> <version>`:
//!
//! * `raf 1`: one colored automaton,
//! * `cocoa 1`: a chain of co-Büchi automata,
//! * `floating-chain 1`: a tracker and floating levels over it,
//! * `rlta 1`: a tracker on its own.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

mod cocoa;
mod floating;
mod raf;

use std::iter::Peekable;
use std::str::Lines as StrLines;

use rerail_core::chain::{Chain, Rlta};
use rerail_core::floating::FloatingChain;
use rerail_core::AutomatonStructure;

pub use cocoa::{parse_chain, write_chain};
pub use floating::{parse_floating_chain, parse_rlta, write_floating_chain, write_rlta};
pub use raf::{parse_automaton, write_automaton};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Model { line: usize, source: rerail_core::Error },
    #[error("missing header line")]
    MissingHeader,
    #[error("unknown file kind `{0}`")]
    UnknownKind(String),
}

pub type Result<T> = std::result::Result<T, FormatError>;

fn syntax<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(FormatError::Syntax { line, message: message.into() })
}

/// Any of the file kinds.
#[derive(Clone, Debug)]
pub enum Model {
    Automaton(AutomatonStructure),
    Chain(Chain),
    FloatingChain(FloatingChain),
    Rlta(Rlta),
}

impl Model {
    pub fn kind(&self) -> &'static str {
        match self {
            Model::Automaton(_) => "raf",
            Model::Chain(_) => "cocoa",
            Model::FloatingChain(_) => "floating-chain",
            Model::Rlta(_) => "rlta",
        }
    }
}

/// First word of the first significant line.
pub fn kind_of(text: &str) -> Option<&str> {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .and_then(|l| l.split_whitespace().next())
}

/// Parses a file of any kind, dispatching on the header.
pub fn parse_any(text: &str) -> Result<Model> {
    match kind_of(text) {
        None => Err(FormatError::MissingHeader),
        Some("raf") => parse_automaton(text).map(Model::Automaton),
        Some("cocoa") => parse_chain(text).map(Model::Chain),
        Some("floating-chain") => parse_floating_chain(text).map(Model::FloatingChain),
        Some("rlta") => parse_rlta(text).map(Model::Rlta),
        Some(other) => Err(FormatError::UnknownKind(other.to_string())),
    }
}

/// A significant line: number, trimmed text and its whitespace tokens.
struct Line<'a> {
    no: usize,
    text: &'a str,
    tokens: Vec<&'a str>,
}

impl Line<'_> {
    fn keyword(&self) -> &str {
        self.tokens[0]
    }

    fn expect_len(&self, n: usize) -> Result<()> {
        if self.tokens.len() != n {
            return syntax(self.no, format!("`{}` takes {} arguments", self.keyword(), n - 1));
        }
        Ok(())
    }

    fn number(&self, i: usize) -> Result<usize> {
        let tok = self.tokens.get(i).ok_or(FormatError::Syntax { line: self.no, message: "missing number".into() })?;
        tok.parse().or_else(|_| syntax(self.no, format!("`{tok}` is not a number")))
    }
}

struct Reader<'a> {
    lines: Peekable<std::iter::Enumerate<StrLines<'a>>>,
    last: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        Reader { lines: text.lines().enumerate().peekable(), last: 0 }
    }

    fn skip_blank(&mut self) {
        while let Some((_, l)) = self.lines.peek() {
            let t = l.trim();
            if t.is_empty() || t.starts_with('#') {
                self.lines.next();
            } else {
                break;
            }
        }
    }

    fn peek_keyword(&mut self) -> Option<&'a str> {
        self.skip_blank();
        self.lines.peek().and_then(|(_, l)| l.split_whitespace().next())
    }

    fn next(&mut self) -> Option<Line<'a>> {
        self.skip_blank();
        let (i, l) = self.lines.next()?;
        self.last = i + 1;
        let text = l.trim();
        Some(Line { no: i + 1, text, tokens: text.split_whitespace().collect() })
    }

    fn header(&mut self, kind: &str) -> Result<()> {
        let line = self.next().ok_or(FormatError::MissingHeader)?;
        if line.tokens != [kind, "1"] {
            return syntax(line.no, format!("expected header `{kind} 1`"));
        }
        Ok(())
    }

    fn expect(&mut self, keyword: &str) -> Result<Line<'a>> {
        match self.next() {
            Some(l) if l.keyword() == keyword => Ok(l),
            Some(l) => syntax(l.no, format!("expected `{keyword}`, found `{}`", l.keyword())),
            None => syntax(self.last + 1, format!("expected `{keyword}`, found end of file")),
        }
    }
}

/// Parses `name <k> "<display>"`.
fn parse_name(line: &Line<'_>, states: usize) -> Result<(usize, String)> {
    let k = line.number(1)?;
    if k >= states {
        return syntax(line.no, format!("state {k} out of range"));
    }
    let rest = line.text.splitn(3, char::is_whitespace).nth(2).unwrap_or("").trim();
    match rest.strip_prefix('"').and_then(|r| r.strip_suffix('"')) {
        Some(name) if !name.contains('"') => Ok((k, name.to_string())),
        _ => syntax(line.no, "name must be a double-quoted string"),
    }
}

/// `name` lines for names that differ from the state index.
fn name_lines<'a>(names: impl Iterator<Item = &'a str>) -> String {
    let mut out = String::new();
    for (k, name) in names.enumerate() {
        if name != k.to_string() {
            out.push_str(&format!("name {k} \"{name}\"\n"));
        }
    }
    out
}
