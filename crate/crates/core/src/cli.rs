//! The `compdeck` command line.
//!
//! Exit codes: 0 success, 1 domain error (not a deck, failed sweep, unmet
//! precondition), 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::composition::Composition;
use crate::deck::Deck;
use crate::error::Error;
use crate::layered::{composition_to_layered, layered_to_composition, Permutation};
use crate::oracle::{self, composition_count};
use crate::reconstruct::{reconstruct, ReconstructionResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "compdeck",
    version,
    about = "Reconstruct integer compositions from their k-deletions"
)]
pub struct Cli {
    /// Print line-oriented key=value output.
    #[arg(long, global = true)]
    pub machine: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the k-deletions of a composition, one per line.
    Deck {
        #[arg(short = 'k')]
        k: usize,
        /// Composition as `p1,p2,...`, or `()` for the empty one.
        w: Composition,
    },
    /// Recover a composition from its k-deletions.
    Reconstruct {
        #[arg(short = 'k')]
        k: usize,
        /// Deck file; standard input when absent or `-`.
        #[arg(short = 'f', long = "file")]
        file: Option<PathBuf>,
    },
    /// Check reconstruction of every composition of n for n in a range.
    Verify {
        #[arg(short = 'k')]
        k: usize,
        #[arg(long = "from")]
        from: usize,
        #[arg(long = "to")]
        to: usize,
        /// Worker threads (defaults to all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Show (12)^k and (21)^k and their shared deck.
    Witness {
        #[arg(short = 'k')]
        k: usize,
    },
    /// Count the decks shared by several compositions of n.
    Census {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Print the statistics of a composition.
    Stats { w: Composition },
    /// Convert between compositions and layered permutations.
    Bridge { direction: Direction, value: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    ToPermutation,
    ToComposition,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::MixedSums { .. }
            | Error::EmptyDeck
            | Error::NotAPermutation(_) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> CmdResult {
    let machine = cli.machine;
    match &cli.command {
        Command::Deck { k, w } => cmd_deck(w, *k, machine, out),
        Command::Reconstruct { k, file } => cmd_reconstruct(file.as_ref(), *k, machine, stdin, out),
        Command::Verify { k, from, to, jobs } => cmd_verify(*k, *from, *to, *jobs, machine, out),
        Command::Witness { k } => cmd_witness(*k, machine, out),
        Command::Census { k, n } => cmd_census(*k, *n, machine, out),
        Command::Stats { w } => cmd_stats(w, machine, out),
        Command::Bridge { direction, value } => cmd_bridge(*direction, value, machine, out),
    }
}

fn cmd_deck(w: &Composition, k: usize, machine: bool, out: &mut dyn Write) -> CmdResult {
    let deck = w.k_deletions(k)?;
    if machine {
        writeln!(out, "k={k}")?;
        writeln!(out, "n={}", w.sum())?;
        writeln!(out, "size={}", deck.len())?;
        for c in &deck {
            writeln!(out, "element={c}")?;
        }
    } else {
        write!(out, "{deck}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_reconstruct(
    file: Option<&PathBuf>,
    k: usize,
    machine: bool,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> CmdResult {
    let text = match file {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("{}: {e}", path.display()),
        })?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    let deck = Deck::parse(&text)?;
    let result = reconstruct(&deck, k)?;
    if machine {
        writeln!(out, "k={k}")?;
        writeln!(out, "n={}", deck.target_sum() + k)?;
        match &result {
            ReconstructionResult::Unique(w) => {
                writeln!(out, "result=unique")?;
                writeln!(out, "composition={w}")?;
            }
            ReconstructionResult::Ambiguous(set) => {
                writeln!(out, "result=ambiguous")?;
                for w in set {
                    writeln!(out, "candidate={w}")?;
                }
            }
            ReconstructionResult::NotADeck(why) => {
                writeln!(out, "result=not-a-deck")?;
                writeln!(out, "reason={why}")?;
            }
        }
    } else {
        match &result {
            ReconstructionResult::Unique(w) => writeln!(out, "UNIQUE {w}")?,
            ReconstructionResult::Ambiguous(set) => {
                writeln!(out, "AMBIGUOUS")?;
                for w in set {
                    writeln!(out, "{w}")?;
                }
            }
            ReconstructionResult::NotADeck(why) => writeln!(out, "NOT A DECK {why}")?,
        }
    }
    Ok(match result {
        ReconstructionResult::NotADeck(_) => EXIT_DOMAIN,
        _ => EXIT_OK,
    })
}

fn cmd_verify(
    k: usize,
    from: usize,
    to: usize,
    jobs: Option<usize>,
    machine: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let report = match jobs {
        Some(j) => oracle::sweep_with_jobs(k, from, to, j)?,
        None => oracle::sweep(k, from, to)?,
    };
    if machine {
        write!(out, "{}", report.to_key_value(false))?;
    } else {
        write!(out, "{report}")?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    })
}

fn cmd_witness(k: usize, machine: bool, out: &mut dyn Write) -> CmdResult {
    let (up, down, deck) = oracle::tightness_witness(k);
    if machine {
        writeln!(out, "k={k}")?;
        writeln!(out, "first={up}")?;
        writeln!(out, "second={down}")?;
        writeln!(out, "size={}", deck.len())?;
        for c in &deck {
            writeln!(out, "element={c}")?;
        }
    } else {
        writeln!(out, "first: {up}")?;
        writeln!(out, "second: {down}")?;
        writeln!(out, "shared deck ({} elements):", deck.len())?;
        write!(out, "{deck}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_census(k: usize, n: usize, machine: bool, out: &mut dyn Write) -> CmdResult {
    let classes = oracle::collision_classes(k, n)?;
    let join = |class: &[Composition]| {
        class
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    if machine {
        writeln!(out, "k={k}")?;
        writeln!(out, "n={n}")?;
        writeln!(out, "compositions={}", composition_count(n))?;
        writeln!(out, "collision_classes={}", classes.len())?;
        for class in &classes {
            writeln!(out, "class={}", join(class))?;
        }
    } else {
        writeln!(out, "compositions: {}", composition_count(n))?;
        writeln!(out, "collision classes: {}", classes.len())?;
        for class in &classes {
            writeln!(out, "  {}", join(class))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_stats(w: &Composition, machine: bool, out: &mut dyn Write) -> CmdResult {
    let rows = [
        ("sum", w.sum()),
        ("length", w.len()),
        ("ex", w.exceedance()),
        ("ex2", w.second_exceedance()),
        ("ones", w.count_ones()),
    ];
    let sep = if machine { "=" } else { ": " };
    for (key, value) in rows {
        writeln!(out, "{key}{sep}{value}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_bridge(direction: Direction, value: &str, machine: bool, out: &mut dyn Write) -> CmdResult {
    match direction {
        Direction::ToPermutation => {
            let w: Composition = value.parse().map_err(Error::from)?;
            let p = composition_to_layered(&w);
            if machine {
                writeln!(out, "permutation={p}")?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
        Direction::ToComposition => {
            let p: Permutation = value.parse()?;
            let w = layered_to_composition(&p)?;
            if machine {
                writeln!(out, "composition={w}")?;
            } else {
                writeln!(out, "{w}")?;
            }
        }
    }
    Ok(EXIT_OK)
}
