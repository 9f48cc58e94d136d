use std::collections::BTreeMap;

use rerail_core::{Alphabet, AutomatonStructure, Color, State, Symbol, Transition};

use super::{name_lines, parse_name, syntax, FormatError, Line, Reader, Result};

/// Parses a `raf 1` file:
///
/// ```text
/// raf 1
/// alphabet a b
/// states 2
/// initial 0
/// name 0 "start"
/// trans 0 a 1 2
/// ```
pub fn parse_automaton(text: &str) -> Result<AutomatonStructure> {
    let mut r = Reader::new(text);
    r.header("raf")?;
    let a = parse_body(&mut r)?;
    if let Some(l) = r.next() {
        return syntax(l.no, format!("unexpected `{}`", l.keyword()));
    }
    Ok(a)
}

/// Header lines, names and colored transitions up to the next line that
/// does not belong to an automaton body.
pub(super) fn parse_body(r: &mut Reader<'_>) -> Result<AutomatonStructure> {
    let al = r.expect("alphabet")?;
    if al.tokens.len() < 2 {
        return syntax(al.no, "alphabet needs at least one symbol");
    }
    let alphabet =
        Alphabet::new(al.tokens[1..].iter().copied()).map_err(|e| FormatError::Model { line: al.no, source: e })?;
    let sl = r.expect("states")?;
    sl.expect_len(2)?;
    let states = sl.number(1)?;
    if states == 0 {
        return syntax(sl.no, "at least one state is needed");
    }
    let il = r.expect("initial")?;
    il.expect_len(2)?;
    let initial = il.number(1)?;
    if initial >= states {
        return syntax(il.no, format!("initial state {initial} out of range"));
    }
    let mut names: Vec<String> = (0..states).map(|q| q.to_string()).collect();
    let mut colors: BTreeMap<(State, Symbol, State), (Color, usize)> = BTreeMap::new();
    while let Some(kw) = r.peek_keyword() {
        match kw {
            "name" => {
                let l = r.next().expect("peeked");
                let (k, name) = parse_name(&l, states)?;
                names[k] = name;
            }
            "trans" => {
                let l = r.next().expect("peeked");
                let (s, x, t) = parse_edge(&l, &alphabet, states, 5)?;
                let c = l.number(4)? as Color;
                match colors.get(&(s, x, t)) {
                    Some(&(old, line)) if old != c => {
                        return syntax(l.no, format!("conflicting colors {old} (line {line}) and {c} for one transition"));
                    }
                    Some(_) => {}
                    None => {
                        colors.insert((s, x, t), (c, l.no));
                    }
                }
            }
            _ => break,
        }
    }
    let ts = colors.iter().map(|(&(s, x, t), &(c, _))| Transition::new(s, x, t, c));
    let a = AutomatonStructure::new(alphabet, states, initial, ts)
        .and_then(|a| a.with_names(names))
        .map_err(|e| FormatError::Model { line: sl.no, source: e })?;
    Ok(a)
}

/// `trans <src> <sym> <dst> ...` with `len` tokens in total.
pub(super) fn parse_edge(l: &Line<'_>, alphabet: &Alphabet, states: usize, len: usize) -> Result<(State, Symbol, State)> {
    l.expect_len(len)?;
    let s = l.number(1)?;
    let t = l.number(3)?;
    for q in [s, t] {
        if q >= states {
            return syntax(l.no, format!("state {q} out of range"));
        }
    }
    let x = alphabet.index_of(l.tokens[2]).map_err(|e| FormatError::Model { line: l.no, source: e })?;
    Ok((s, x, t))
}

/// Serializes with transitions sorted by (source, symbol, target).
pub fn write_automaton(a: &AutomatonStructure) -> String {
    format!("raf 1\n{}", write_body(a))
}

pub(super) fn write_body(a: &AutomatonStructure) -> String {
    let sigma = a.alphabet();
    let mut out = format!(
        "alphabet {}\nstates {}\ninitial {}\n",
        sigma.names().collect::<Vec<_>>().join(" "),
        a.state_count(),
        a.initial()
    );
    out.push_str(&name_lines(a.names().iter().map(String::as_str)));
    let mut ts = a.transitions().to_vec();
    ts.sort_by_key(|t| (t.source, t.symbol, t.target));
    for t in ts {
        out.push_str(&format!("trans {} {} {} {}\n", t.source, sigma.name(t.symbol), t.target, t.color));
    }
    out
}
