use rerail_core::chain::Chain;

use super::raf::{parse_body, write_body};
use super::{syntax, FormatError, Reader, Result};

/// Parses a `cocoa 1` file: `count <n>`, then `automaton <i>` for `i` in
/// `1..=n`, each followed by an automaton body with colors 1 and 2. An empty
/// chain gives its alphabet on an `alphabet` line after `count 0`.
pub fn parse_chain(text: &str) -> Result<Chain> {
    let mut r = Reader::new(text);
    r.header("cocoa")?;
    let cl = r.expect("count")?;
    cl.expect_len(2)?;
    let n = cl.number(1)?;
    let mut levels = Vec::with_capacity(n);
    let mut alphabet = None;
    if n == 0 {
        let al = r.expect("alphabet")?;
        let sigma = rerail_core::Alphabet::new(al.tokens[1..].iter().copied())
            .map_err(|e| FormatError::Model { line: al.no, source: e })?;
        alphabet = Some(sigma);
    }
    for i in 1..=n {
        let hl = r.expect("automaton")?;
        hl.expect_len(2)?;
        if hl.number(1)? != i {
            return syntax(hl.no, format!("expected automaton {i}"));
        }
        let a = parse_body(&mut r)?;
        match &alphabet {
            None => alphabet = Some(a.alphabet().clone()),
            Some(s) if s != a.alphabet() => return syntax(hl.no, "levels use different alphabets"),
            Some(_) => {}
        }
        a.ensure_colors(&[1, 2], "co-Büchi colors 1 and 2").map_err(|e| FormatError::Model { line: hl.no, source: e })?;
        levels.push(a);
    }
    if let Some(l) = r.next() {
        return syntax(l.no, format!("unexpected `{}`", l.keyword()));
    }
    let alphabet = alphabet.expect("set by the first level or the alphabet line");
    Chain::new(alphabet, levels).map_err(|e| FormatError::Model { line: cl.no, source: e })
}

pub fn write_chain(c: &Chain) -> String {
    let mut out = format!("cocoa 1\ncount {}\n", c.len());
    if c.is_empty() {
        out.push_str(&format!("alphabet {}\n", c.alphabet().names().collect::<Vec<_>>().join(" ")));
    }
    for (i, level) in c.levels().iter().enumerate() {
        out.push_str(&format!("automaton {}\n", i + 1));
        out.push_str(&write_body(level));
    }
    out
}
