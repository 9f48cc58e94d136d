//! Small hand-made automata used in tests, documentation and fixtures.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::chain::{Chain, Rlta};
use crate::floating::{FloatingAutomaton, FloatingChain};
use crate::{Alphabet, AutomatonStructure, Color, Transition};

fn named(a: AutomatonStructure, names: &[&str]) -> AutomatonStructure {
    a.with_names(names.iter().map(|s| String::from(*s))).expect("name count")
}

/// History-deterministic co-Büchi automaton over `{a, b, c}` whose states
/// split into even positions `{q0, q2, q4}` and odd positions `{q1, q3}`.
/// Color 2 is accepting, color 1 rejecting.
pub fn position_parity_cobuchi() -> AutomatonStructure {
    let sigma = Alphabet::letters(3);
    let (a, b, c) = (0, 1, 2);
    let acc = [(0, a, 1), (0, b, 1), (1, a, 0), (1, b, 0), (2, a, 3), (2, b, 3), (3, b, 2), (3, c, 2), (3, a, 4), (4, b, 3)];
    let rej = [
        (0, c, 1),
        (0, c, 3),
        (1, c, 2),
        (1, c, 0),
        (1, c, 4),
        (2, c, 1),
        (2, c, 3),
        (4, a, 1),
        (4, a, 3),
        (4, c, 1),
        (4, c, 3),
    ];
    let ts = acc
        .iter()
        .map(|&(s, x, t)| Transition::new(s, x, t, 2))
        .chain(rej.iter().map(|&(s, x, t)| Transition::new(s, x, t, 1)));
    named(AutomatonStructure::new(sigma, 5, 0, ts).expect("valid"), &["q0", "q1", "q2", "q3", "q4"])
}

/// Three floating levels over `{a, b, c, d}` with a one-state tracker:
/// level 1 loops on `{a,b,c}` or `{b,c,d}`; level 2 has a two-state cycle
/// (`3 -a,b-> 3`, `3 -c-> 4`, `4 -b,c-> 3`) and a `{c,d}` loop; level 3 loops
/// on `c` or on `d`.
pub fn nested_floating_chain() -> FloatingChain {
    let sigma = Alphabet::letters(4);
    let r = Arc::new(Rlta::trivial(sigma));
    let (a, b, c, d) = (0, 1, 2, 3);
    let level = |n: usize, ts: &[(usize, usize, usize)], names: &[&str]| {
        FloatingAutomaton::new(r.clone(), vec![0; n], ts.iter().copied())
            .and_then(|f| f.with_names(names.iter().map(|s| String::from(*s)).collect()))
            .expect("valid level")
    };
    let l1 = level(2, &[(0, a, 0), (0, b, 0), (0, c, 0), (1, b, 1), (1, c, 1), (1, d, 1)], &["1", "2"]);
    let l2 = level(
        3,
        &[(0, a, 0), (0, b, 0), (0, c, 1), (1, b, 0), (1, c, 0), (2, c, 2), (2, d, 2)],
        &["3", "4", "5"],
    );
    let l3 = level(2, &[(0, c, 0), (1, d, 1)], &["6", "7"]);
    FloatingChain::new(r, vec![l1, l2, l3]).expect("shared tracker")
}

/// Five-state automaton over `{a, b, c, d}` with colors 0 to 3 in the form
/// published for the language of [`nested_floating_chain`]. It differs from
/// [`nested_rerailing`] in four transitions and accepts `(abc)^ω`, which the
/// chain rejects.
pub fn nested_rerailing_published() -> AutomatonStructure {
    let sigma = Alphabet::letters(4);
    let (a, b, c, d) = (0, 1, 2, 3);
    let mut ts: Vec<Transition> = [
        (0, a, 0, 2),
        (0, b, 0, 2),
        (0, b, 1, 2),
        (0, c, 1, 3),
        (1, a, 0, 1),
        (1, a, 1, 1),
        (1, b, 0, 2),
        (1, c, 0, 3),
        (2, b, 2, 2),
        (2, c, 2, 3),
        (2, d, 3, 1),
        (2, d, 4, 1),
        (3, b, 3, 1),
        (3, b, 2, 1),
        (3, b, 4, 1),
        (3, c, 3, 3),
        (3, d, 3, 2),
        (3, d, 4, 2),
        (4, d, 4, 3),
        (4, b, 3, 1),
        (4, b, 2, 1),
        (4, c, 3, 2),
    ]
    .iter()
    .map(|&(s, x, t, col)| Transition::new(s, x, t, col))
    .collect();
    for (s, x) in [(0, d), (1, d), (2, a), (3, a), (4, a)] {
        ts.extend((0..5).map(|t| Transition::new(s, x, t, 0)));
    }
    named(
        AutomatonStructure::new(sigma, 5, 0, ts).expect("valid"),
        &["1,3,6", "1,4,6", "2,{3,4},6", "2,5,6", "2,5,7"],
    )
}

/// Five-state rerailing automaton over `{a, b, c, d}` with colors 0 to 3 for
/// the language of [`nested_floating_chain`], written out by hand.
pub fn nested_rerailing() -> AutomatonStructure {
    let sigma = Alphabet::letters(4);
    let (a, b, c, d) = (0, 1, 2, 3);
    let mut ts: Vec<Transition> = [
        (0, a, 0, 2),
        (0, b, 0, 2),
        (0, c, 1, 3),
        (1, a, 0, 1),
        (1, a, 1, 1),
        (1, b, 0, 2),
        (1, c, 0, 3),
        (2, b, 2, 2),
        (2, c, 2, 3),
        (3, c, 3, 3),
        (3, d, 3, 2),
        (3, d, 4, 2),
        (4, c, 3, 2),
        (4, c, 4, 2),
        (4, d, 4, 3),
    ]
    .iter()
    .map(|&(s, x, t, col)| Transition::new(s, x, t, col))
    .collect();
    for (s, x) in [(2, d), (3, b), (4, b)] {
        ts.extend((2..5).map(|t| Transition::new(s, x, t, 1)));
    }
    for (s, x) in [(0, d), (1, d), (2, a), (3, a), (4, a)] {
        ts.extend((0..5).map(|t| Transition::new(s, x, t, 0)));
    }
    named(
        AutomatonStructure::new(sigma, 5, 0, ts).expect("valid"),
        &["1,3,6", "1,4,6", "2,{3,4},6", "2,5,6", "2,5,7"],
    )
}

/// Two identical co-Büchi levels over `{a, b}`: after an initial `a` every
/// word is accepted, after an initial `b` every word is rejected. The chain
/// accepts every word.
pub fn twin_cobuchi_chain() -> Chain {
    let sigma = Alphabet::letters(2);
    let level = named(
        AutomatonStructure::new(
            sigma.clone(),
            3,
            0,
            [
                Transition::new(0, 0, 1, 1),
                Transition::new(0, 1, 2, 1),
                Transition::new(1, 0, 1, 2),
                Transition::new(1, 1, 1, 2),
                Transition::new(2, 0, 2, 1),
                Transition::new(2, 1, 2, 1),
            ],
        )
        .expect("valid"),
        &["q0", "q1", "q2"],
    );
    Chain::new(sigma, vec![level.clone(), level]).expect("valid chain")
}

/// Deterministic specification over inputs `{n, r}` and outputs `{w, g}`;
/// `step(q, r, g)` gives the successor and color.
fn io_spec(states: usize, step: impl Fn(usize, bool, bool) -> (usize, Color)) -> AutomatonStructure {
    let sigma = Alphabet::new(["n|w", "n|g", "r|w", "r|g"]).expect("distinct");
    let mut ts = Vec::new();
    for q in 0..states {
        for x in 0..4 {
            let (t, c) = step(q, x >= 2, x % 2 == 1);
            ts.push(Transition::new(q, x, t, c));
        }
    }
    AutomatonStructure::new(sigma, states, 0, ts).expect("valid")
}

/// A request-grant specification with its realizability when the system
/// chooses each output before seeing the input of the same step.
#[derive(Clone, Debug)]
pub struct IoExample {
    pub name: String,
    pub spec: AutomatonStructure,
    pub realizable: bool,
}

/// Hand-built deterministic request-grant specifications (inputs `n`, `r`;
/// outputs `w`, `g`). Colors follow the min-even convention.
pub fn request_grant_specs() -> Vec<IoExample> {
    let mut out = Vec::new();
    let mut push = |name: &str, spec: AutomatonStructure, realizable: bool| {
        out.push(IoExample { name: String::from(name), spec, realizable });
    };
    // state 1 is a rejecting sink
    let safety = |bad: fn(bool, bool) -> bool| {
        io_spec(2, move |q, r, g| if q == 1 || bad(r, g) { (1, 1) } else { (0, 0) })
    };
    push("always-grant", safety(|_, g| !g), true);
    push("never-grant", safety(|_, g| g), true);
    push("grant-iff-request", safety(|r, g| r != g), false);
    push("grant-only-on-request", safety(|r, g| g && !r), true);
    push("infinitely-many-grants", io_spec(1, |_, _, g| (0, if g { 0 } else { 1 })), true);
    push("finitely-many-grants", io_spec(1, |_, _, g| (0, if g { 1 } else { 2 })), true);
    push("infinitely-many-requests", io_spec(1, |_, r, _| (0, if r { 0 } else { 1 })), false);
    push("finitely-many-requests", io_spec(1, |_, r, _| (0, if r { 1 } else { 2 })), false);
    push("eventually-request", io_spec(2, |q, r, _| if q == 1 || r { (1, 0) } else { (0, 1) }), false);
    push("eventually-grant", io_spec(2, |q, _, g| if q == 1 || g { (1, 0) } else { (0, 1) }), true);
    push(
        "fair-requests-get-fair-grants",
        io_spec(1, |_, r, g| (0, if g { 0 } else if r { 1 } else { 2 })),
        true,
    );
    // 0: waiting for a request, 1: waiting for a grant
    push(
        "requests-and-grants-recur",
        io_spec(2, |q, r, g| match (q, r, g) {
            (0, true, true) | (1, _, true) => (0, 0),
            (0, true, false) => (1, 1),
            (q, _, _) => (q, 1),
        }),
        false,
    );
    // 0: nothing pending, 1: a request waits
    push(
        "every-request-granted",
        io_spec(2, |q, r, g| if g { (0, 0) } else if q == 1 || r { (1, 1) } else { (0, 0) }),
        true,
    );
    push(
        "every-request-granted-no-spurious-grant",
        io_spec(3, |q, r, g| match (q, r, g) {
            (2, _, _) | (_, false, true) => (2, 1),
            (_, true, true) => (0, 0),
            (0, false, false) => (0, 0),
            _ => (1, 1),
        }),
        false,
    );
    push(
        "every-request-granted-finitely-many-grants",
        io_spec(2, |q, r, g| match (q, r, g) {
            (_, _, true) => (0, 1),
            (0, false, false) => (0, 2),
            (0, true, false) => (1, 2),
            _ => (1, 1),
        }),
        false,
    );
    // 0: free, 1: granted in the previous step, 2: sink
    push(
        "grants-separated-and-recurring",
        io_spec(3, |q, _, g| match (q, g) {
            (2, _) | (1, true) => (2, 1),
            (_, true) => (1, 0),
            _ => (0, 1),
        }),
        true,
    );
    // bit 0: request in the previous step, bit 1: grant in the previous step; 4 is the sink
    push(
        "grant-after-request-then-pause",
        io_spec(5, |q, r, g| {
            if q == 4 || (q & 1 == 1 && !g) || (q & 2 == 2 && g) {
                (4, 1)
            } else {
                (usize::from(r) | (usize::from(g) << 1), 0)
            }
        }),
        false,
    );
    push(
        "grant-after-request",
        io_spec(3, |q, r, g| if q == 2 || (q == 1 && !g) { (2, 1) } else { (usize::from(r), 0) }),
        true,
    );
    for k in 1..=4 {
        // states: 0 nothing pending, a in 1..=k oldest request a steps old, k+1 sink
        let sink = k + 1;
        let spec = io_spec(k + 2, move |q, r, g| {
            if q == sink || (g && q == 0) || (!g && q == k) {
                return (sink, 1);
            }
            let next = if g || q == 0 { usize::from(r) } else { q + 1 };
            (next, 0)
        });
        push(&alloc::format!("grant-within-{k}-no-spurious-grant"), spec, true);
    }
    for d in 1..=3usize {
        // the last d inputs as bits, oldest highest; state 1 << d is the sink
        let sink = 1 << d;
        let spec = io_spec(sink + 1, move |q, r, g| {
            if q == sink || (q >> (d - 1)) & 1 != usize::from(g) {
                return (sink, 1);
            }
            (((q << 1) | usize::from(r)) & (sink - 1), 0)
        });
        push(&alloc::format!("echo-requests-after-{d}"), spec, true);
    }
    out
}
