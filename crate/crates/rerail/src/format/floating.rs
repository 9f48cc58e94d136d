use std::sync::Arc;

use rerail_core::chain::Rlta;
use rerail_core::floating::{FloatingAutomaton, FloatingChain};
use rerail_core::{Alphabet, State};

use super::raf::parse_edge;
use super::{name_lines, parse_name, syntax, FormatError, Reader, Result};

/// Parses an `rlta 1` file: an uncolored total automaton body
/// (`alphabet`, `states`, `initial`, `name` and `trans <src> <sym> <dst>`).
pub fn parse_rlta(text: &str) -> Result<Rlta> {
    let mut r = Reader::new(text);
    r.header("rlta")?;
    let t = parse_rlta_body(&mut r)?;
    if let Some(l) = r.next() {
        return syntax(l.no, format!("unexpected `{}`", l.keyword()));
    }
    Ok(t)
}

fn parse_rlta_body(r: &mut Reader<'_>) -> Result<Rlta> {
    let al = r.expect("alphabet")?;
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
    let k = alphabet.len();
    let mut names: Vec<String> = (0..states).map(|q| q.to_string()).collect();
    let mut delta: Vec<Option<State>> = vec![None; states * k];
    while let Some(kw) = r.peek_keyword() {
        let l = match kw {
            "name" | "trans" => r.next().expect("peeked"),
            _ => break,
        };
        if kw == "name" {
            let (q, name) = parse_name(&l, states)?;
            names[q] = name;
            continue;
        }
        let (s, x, t) = parse_edge(&l, &alphabet, states, 4)?;
        match delta[s * k + x] {
            Some(old) if old != t => return syntax(l.no, "tracker must be deterministic"),
            _ => delta[s * k + x] = Some(t),
        }
    }
    if let Some(c) = delta.iter().position(Option::is_none) {
        return syntax(sl.no, format!("tracker has no transition from {} on `{}`", c / k, alphabet.name(c % k)));
    }
    let delta = delta.into_iter().map(|t| t.expect("checked")).collect();
    Rlta::new(alphabet, states, initial, delta)
        .and_then(|t| t.with_names(names))
        .map_err(|e| FormatError::Model { line: il.no, source: e })
}

fn write_rlta_body(t: &Rlta) -> String {
    let sigma = t.alphabet();
    let mut out = format!(
        "alphabet {}\nstates {}\ninitial {}\n",
        sigma.names().collect::<Vec<_>>().join(" "),
        t.state_count(),
        t.initial()
    );
    out.push_str(&name_lines((0..t.state_count()).map(|s| t.name(s))));
    for s in 0..t.state_count() {
        for x in 0..sigma.len() {
            out.push_str(&format!("trans {s} {} {}\n", sigma.name(x), t.successor(s, x)));
        }
    }
    out
}

pub fn write_rlta(t: &Rlta) -> String {
    format!("rlta 1\n{}", write_rlta_body(t))
}

/// Parses a `floating-chain 1` file: an `rlta` block, then `floating <i>`
/// blocks for `i = 1, 2, ...` with `states <n>`, `label <state> <tracker
/// state>` for every state, optional `name` lines and `trans <src> <sym>
/// <dst>` lines.
pub fn parse_floating_chain(text: &str) -> Result<FloatingChain> {
    let mut r = Reader::new(text);
    r.header("floating-chain")?;
    r.expect("rlta")?.expect_len(1)?;
    let rlta = Arc::new(parse_rlta_body(&mut r)?);
    let mut levels = Vec::new();
    while let Some(hl) = r.next() {
        if hl.keyword() != "floating" {
            return syntax(hl.no, format!("expected `floating`, found `{}`", hl.keyword()));
        }
        hl.expect_len(2)?;
        if hl.number(1)? != levels.len() + 1 {
            return syntax(hl.no, format!("expected floating {}", levels.len() + 1));
        }
        let sl = r.expect("states")?;
        sl.expect_len(2)?;
        let n = sl.number(1)?;
        let mut labels: Vec<Option<State>> = vec![None; n];
        let mut names: Vec<String> = (0..n).map(|q| q.to_string()).collect();
        let mut ts = Vec::new();
        while let Some(kw) = r.peek_keyword() {
            if !matches!(kw, "label" | "name" | "trans") {
                break;
            }
            let l = r.next().expect("peeked");
            match kw {
                "label" => {
                    l.expect_len(3)?;
                    let (q, s) = (l.number(1)?, l.number(2)?);
                    if q >= n {
                        return syntax(l.no, format!("state {q} out of range"));
                    }
                    if s >= rlta.state_count() {
                        return syntax(l.no, format!("tracker state {s} out of range"));
                    }
                    labels[q] = Some(s);
                }
                "name" => {
                    let (q, name) = parse_name(&l, n)?;
                    names[q] = name;
                }
                _ => ts.push((parse_edge(&l, rlta.alphabet(), n, 4)?, l.no)),
            }
        }
        if let Some(q) = labels.iter().position(Option::is_none) {
            return syntax(sl.no, format!("state {q} has no label"));
        }
        let labels: Vec<State> = labels.into_iter().map(|s| s.expect("checked")).collect();
        // check transitions one by one to report the offending line
        for &((s, x, t), line) in &ts {
            if labels[t] != rlta.successor(labels[s], x) {
                return Err(FormatError::Model {
                    line,
                    source: rerail_core::Error::LabelMismatch { state: s, symbol: x },
                });
            }
        }
        let f = FloatingAutomaton::new(rlta.clone(), labels, ts.iter().map(|&(e, _)| e))
            .and_then(|f| f.with_names(names))
            .map_err(|e| FormatError::Model { line: hl.no, source: e })?;
        levels.push(f);
    }
    FloatingChain::new(rlta, levels).map_err(|e| FormatError::Model { line: 1, source: e })
}

pub fn write_floating_chain(c: &FloatingChain) -> String {
    let mut out = format!("floating-chain 1\nrlta\n{}", write_rlta_body(c.rlta()));
    let sigma = c.rlta().alphabet();
    for (i, f) in c.levels().iter().enumerate() {
        out.push_str(&format!("floating {}\nstates {}\n", i + 1, f.state_count()));
        for q in 0..f.state_count() {
            out.push_str(&format!("label {q} {}\n", f.label(q)));
        }
        out.push_str(&name_lines(f.names().iter().map(String::as_str)));
        for (s, x, t) in f.transitions() {
            out.push_str(&format!("trans {s} {} {t}\n", sigma.name(x)));
        }
    }
    out
}
