//! The `rerail` command. Exit codes: 0 for success or a positive verdict, 2
//! for a negative verdict (rejection, counterexample, violation,
//! unrealizable), 1 for errors. Negative verdicts end with a witness line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use rerail_core::build::{build_minimal, minimize_rerailing, verify_rerailing_bounded, BuildOptions};
use rerail_core::chain::{decompose_rerailing, rlta_for_chain, Chain};
use rerail_core::equivalence::bounded_equivalence;
use rerail_core::floating::{residualize, FloatingChain};
use rerail_core::game::{solve, ParityGame, Player};
use rerail_core::lasso::canonical_lassos;
use rerail_core::membership::Interpreted;
use rerail_core::synthesis::{realizability_game, IoSplit};
use rerail_core::{AutomatonStructure, LassoWord, OmegaAcceptor, Semantics};

use crate::format::{self, Model};

#[derive(Parser, Debug)]
#[command(name = "rerail", version, about = "Rerailing automata toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide membership of a lasso word `stem;cycle`.
    Membership {
        #[arg(short = 'i', long)]
        input: PathBuf,
        /// Semantics; defaults to the natural one for the file kind.
        #[arg(long, value_parser = parse_semantics)]
        sem: Option<Semantics>,
        #[arg(long, allow_hyphen_values = true)]
        lasso: String,
    },
    /// Decompose a rerailing automaton into a chain of co-Büchi automata.
    Decompose {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Compute the residual tracker of a chain.
    Rlta {
        #[arg(long)]
        chain: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
        /// Also write the residualized levels as a floating chain.
        #[arg(long)]
        floating: Option<PathBuf>,
    },
    /// Build a minimal rerailing automaton from a floating chain (or a chain).
    BuildMin {
        #[arg(long)]
        chain: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
        #[arg(long)]
        optimized_jloop: bool,
    },
    /// Minimize a rerailing automaton.
    Minimize {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
        #[arg(long)]
        optimized_jloop: bool,
    },
    /// Compare two languages on all lassos within the bounds.
    Equiv {
        #[arg(short = 'a')]
        a: PathBuf,
        #[arg(short = 'b')]
        b: PathBuf,
        #[arg(long, value_parser = parse_semantics)]
        sem_a: Option<Semantics>,
        #[arg(long, value_parser = parse_semantics)]
        sem_b: Option<Semantics>,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Check the rerailing property on all lassos within the bounds.
    Verify {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Decide realizability of a specification over `in|out` symbols.
    Realizability {
        #[arg(short = 'i', long)]
        input: PathBuf,
        /// Expected input names, comma separated.
        #[arg(long, value_delimiter = ',')]
        inputs: Option<Vec<String>>,
        /// Expected output names, comma separated.
        #[arg(long, value_delimiter = ',')]
        outputs: Option<Vec<String>>,
        /// Write the game as a text table.
        #[arg(long)]
        dump_game: Option<PathBuf>,
    },
    /// Print size information about any model file.
    Stats {
        #[arg(short = 'i', long)]
        input: PathBuf,
        /// Print a Graphviz graph of an automaton instead.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct Bounds {
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    bound_stem: u64,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    bound_cycle: u64,
}

fn parse_semantics(s: &str) -> Result<Semantics, String> {
    Semantics::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Semantics::ALL.iter().map(|s| s.name()).collect();
        format!("unknown semantics `{s}` (one of {})", names.join(", "))
    })
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            let text = e.render().to_string();
            return if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                let _ = write!(out, "{text}");
                0
            } else {
                let _ = write!(err, "{text}");
                1
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(verdict) => verdict as i32,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(i32)]
enum Verdict {
    Positive = 0,
    Negative = 2,
}

fn read_model(path: &Path) -> anyhow::Result<Model> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    format::parse_any(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_automaton(path: &Path) -> anyhow::Result<AutomatonStructure> {
    match read_model(path)? {
        Model::Automaton(a) => Ok(a),
        m => bail!("{}: expected a raf file, found {}", path.display(), m.kind()),
    }
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// A model together with the semantics it is read under.
fn acceptor<'a>(model: &'a Model, sem: Option<Semantics>) -> anyhow::Result<Box<dyn OmegaAcceptor + 'a>> {
    Ok(match (model, sem) {
        (Model::Automaton(a), None) => Box::new(Interpreted::new(a, Semantics::Rerailing)),
        (Model::Automaton(_), Some(s @ (Semantics::Chain | Semantics::Floating))) => {
            bail!("semantics {} needs a {} file", s.name(), if s == Semantics::Chain { "cocoa" } else { "floating-chain" })
        }
        (Model::Automaton(a), Some(s)) => Box::new(Interpreted::new(a, s)),
        (Model::Chain(c), None | Some(Semantics::Chain)) => Box::new(c.clone()),
        (Model::FloatingChain(c), None | Some(Semantics::Floating)) => Box::new(c.clone()),
        (m, Some(s)) => bail!("a {} file cannot be read under {} semantics", m.kind(), s.name()),
        (Model::Rlta(_), None) => bail!("a tracker has no language"),
    })
}

fn floating_from_chain(chain: &Chain) -> anyhow::Result<FloatingChain> {
    let rlta = Arc::new(rlta_for_chain(chain)?);
    let levels = chain.levels().iter().map(|l| residualize(l, rlta.clone())).collect::<Result<Vec<_>, _>>()?;
    Ok(FloatingChain::new(rlta, levels)?)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<Verdict> {
    match command {
        Command::Membership { input, sem, lasso } => {
            let model = read_model(&input)?;
            let acc = acceptor(&model, sem)?;
            let w = LassoWord::parse(&lasso, acc.alphabet())?;
            if acc.accepts(&w)? {
                writeln!(out, "accept")?;
                Ok(Verdict::Positive)
            } else {
                writeln!(out, "reject")?;
                writeln!(out, "witness {}", w.display(acc.alphabet()))?;
                Ok(Verdict::Negative)
            }
        }
        Command::Decompose { input, output } => {
            let chain = decompose_rerailing(&read_automaton(&input)?)?;
            write_file(&output, &format::write_chain(&chain))?;
            writeln!(out, "levels: {}", chain.len())?;
            Ok(Verdict::Positive)
        }
        Command::Rlta { chain, output, floating } => {
            let c = match read_model(&chain)? {
                Model::Chain(c) => c,
                m => bail!("{}: expected a cocoa file, found {}", chain.display(), m.kind()),
            };
            let fc = floating_from_chain(&c)?;
            write_file(&output, &format::write_rlta(fc.rlta()))?;
            if let Some(path) = floating {
                write_file(&path, &format::write_floating_chain(&fc))?;
            }
            writeln!(out, "rlta states: {}", fc.rlta().state_count())?;
            Ok(Verdict::Positive)
        }
        Command::BuildMin { chain, output, optimized_jloop } => {
            let fc = match read_model(&chain)? {
                Model::FloatingChain(fc) => fc,
                Model::Chain(c) => floating_from_chain(&c)?,
                m => bail!("{}: expected a floating-chain or cocoa file, found {}", chain.display(), m.kind()),
            };
            let r = build_minimal(&fc, BuildOptions { optimized_jloop })?;
            write_file(&output, &format::write_automaton(&r))?;
            writeln!(out, "states: {}", r.state_count())?;
            Ok(Verdict::Positive)
        }
        Command::Minimize { input, output, optimized_jloop } => {
            let a = read_automaton(&input)?;
            let m = minimize_rerailing(&a, BuildOptions { optimized_jloop })?;
            write_file(&output, &format::write_automaton(&m))?;
            writeln!(out, "states: {} -> {}", a.state_count(), m.state_count())?;
            Ok(Verdict::Positive)
        }
        Command::Equiv { a, b, sem_a, sem_b, bounds } => {
            let (ma, mb) = (read_model(&a)?, read_model(&b)?);
            let (aa, ab) = (acceptor(&ma, sem_a)?, acceptor(&mb, sem_b)?);
            let (stem, cycle) = (bounds.bound_stem as usize, bounds.bound_cycle as usize);
            match bounded_equivalence(aa.as_ref(), ab.as_ref(), stem, cycle)? {
                None => {
                    writeln!(out, "equivalent (within bounds)")?;
                    Ok(Verdict::Positive)
                }
                Some(w) => {
                    let verdict = |x: bool| if x { "accepts" } else { "rejects" };
                    writeln!(out, "not equivalent: a {}, b {}", verdict(aa.accepts(&w)?), verdict(ab.accepts(&w)?))?;
                    writeln!(out, "witness {}", w.display(aa.alphabet()))?;
                    Ok(Verdict::Negative)
                }
            }
        }
        Command::Verify { input, bounds } => {
            let a = read_automaton(&input)?;
            let (stem, cycle) = (bounds.bound_stem as usize, bounds.bound_cycle as usize);
            let violations = verify_rerailing_bounded(&a, stem, cycle)?;
            let checked = canonical_lassos(a.alphabet().len(), stem, cycle).count();
            match violations.first() {
                None => {
                    writeln!(out, "pass: {checked} lassos")?;
                    Ok(Verdict::Positive)
                }
                Some(v) => {
                    writeln!(out, "fail: {} of {checked} lassos", violations.len())?;
                    writeln!(out, "first: {} at state {} position {}", v.kind.name(), a.name(v.state), v.position)?;
                    writeln!(out, "witness {}", v.lasso.display(a.alphabet()))?;
                    Ok(Verdict::Negative)
                }
            }
        }
        Command::Realizability { input, inputs, outputs, dump_game } => {
            let spec = read_automaton(&input)?;
            let io = IoSplit::from_alphabet(spec.alphabet())?;
            check_names("inputs", inputs.as_deref(), io.inputs())?;
            check_names("outputs", outputs.as_deref(), io.outputs())?;
            if !spec.check_color_homogeneous().is_empty() {
                writeln!(err, "warning: specification is not color-homogeneous")?;
            }
            let rg = realizability_game(&spec, &io)?;
            if let Some(path) = dump_game {
                write_file(&path, &game_table(&rg.game))?;
            }
            if solve(&rg.game)?.winner(rg.initial) == Player::Even {
                writeln!(out, "realizable")?;
                Ok(Verdict::Positive)
            } else {
                writeln!(out, "unrealizable")?;
                writeln!(out, "witness vertex {} {}", rg.initial, rg.game.label(rg.initial))?;
                Ok(Verdict::Negative)
            }
        }
        Command::Stats { input, dot } => {
            let model = read_model(&input)?;
            if dot {
                match &model {
                    Model::Automaton(a) => write!(out, "{}", dot_graph(a))?,
                    m => bail!("--dot needs a raf file, found {}", m.kind()),
                }
            } else {
                write!(out, "{}", stats(&model))?;
            }
            Ok(Verdict::Positive)
        }
    }
}

fn check_names(what: &str, given: Option<&[String]>, found: &[String]) -> anyhow::Result<()> {
    let Some(given) = given else { return Ok(()) };
    let mut a: Vec<&str> = given.iter().map(|s| s.trim()).collect();
    let mut b: Vec<&str> = found.iter().map(String::as_str).collect();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err(anyhow!("{what} {} do not match the alphabet ({})", given.join(","), found.join(",")));
    }
    Ok(())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn automaton_stats(a: &AutomatonStructure) -> String {
    format!(
        "states: {}\ntransitions: {}\nalphabet: {}\nmax color: {}\ncomplete: {}\ndeterministic: {}\ncolor-homogeneous: {}\n",
        a.state_count(),
        a.transitions().len(),
        a.alphabet().len(),
        a.max_color(),
        yes(a.validate_complete().is_empty()),
        yes(a.is_deterministic()),
        yes(a.check_color_homogeneous().is_empty()),
    )
}

fn stats(model: &Model) -> String {
    match model {
        Model::Automaton(a) => automaton_stats(a),
        Model::Chain(c) => {
            let mut s = format!("levels: {}\nalphabet: {}\n", c.len(), c.alphabet().len());
            for (i, l) in c.levels().iter().enumerate() {
                s.push_str(&format!("level {}: {} states, {} transitions\n", i + 1, l.state_count(), l.transitions().len()));
            }
            s
        }
        Model::FloatingChain(c) => {
            let mut s = format!("levels: {}\nrlta states: {}\n", c.len(), c.rlta().state_count());
            for (i, l) in c.levels().iter().enumerate() {
                s.push_str(&format!("level {}: {} states, {} transitions\n", i + 1, l.state_count(), l.transition_count()));
            }
            s
        }
        Model::Rlta(t) => format!("states: {}\nalphabet: {}\n", t.state_count(), t.alphabet().len()),
    }
}

fn dot_graph(a: &AutomatonStructure) -> String {
    let mut s = String::from("digraph rerail {\n  rankdir=LR;\n  init [shape=point];\n");
    for q in 0..a.state_count() {
        s.push_str(&format!("  q{q} [label=\"{}\"];\n", a.name(q).replace('"', "'")));
    }
    s.push_str(&format!("  init -> q{};\n", a.initial()));
    for t in a.transitions() {
        s.push_str(&format!("  q{} -> q{} [label=\"{}:{}\"];\n", t.source, t.target, a.alphabet().name(t.symbol), t.color));
    }
    s.push_str("}\n");
    s
}

fn game_table(g: &ParityGame) -> String {
    let mut s = String::from("vertex\towner\tcolor\tsuccessors\tlabel\n");
    for v in 0..g.vertex_count() {
        let succ: Vec<String> = g.successors(v).iter().map(usize::to_string).collect();
        let owner = if g.owner(v) == Player::Even { 0 } else { 1 };
        s.push_str(&format!("{v}\t{owner}\t{}\t{}\t{}\n", g.color(v), succ.join(","), g.label(v)));
    }
    s
}
