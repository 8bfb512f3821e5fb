//! Command-line front end for `cyclewords`.
//!
//! Exit codes: 0 success, 2 usage or malformed input, 3 edge/component count
//! mismatch in a subgraph document, 4 closed-form and brute-force counts
//! disagree, 5 bijection verification failed.

mod document;
mod render;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cyclewords::{
    count_table, enumerate_subgraphs, enumerate_words, parse_word, subgraph_to_word,
    verify_bijection, word_to_subgraph, CountTable, CycleParams, CycleSubgraph, Error,
};
use rayon::prelude::*;

pub use document::{DocumentError, SubgraphDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_COUNT_MISMATCH: i32 = 4;
pub const EXIT_VERIFY_FAILED: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "cyclewords",
    version,
    about = "Words over R/U/D and subgraphs of the 2n-cycle"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Map a word to its subgraph.
    W2g {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Word to convert; read from stdin when absent.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Map a subgraph document back to its word.
    G2w {
        #[arg(long)]
        k: usize,
        /// Subgraph document path; read from stdin when absent.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// List every word or every subgraph for (n, k), one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Side::Words)]
        side: Side,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Print the closed-form class counts.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Also count subgraphs by exhaustive enumeration and compare.
        #[arg(long)]
        brute_force: bool,
    },
    /// Exhaustively check the bijection for all 1 <= k <= n <= max-n.
    Verify {
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
    Ascii,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Side {
    Words,
    Graphs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    /// One canonical subgraph document per line.
    Json,
    /// Arcs as `{P(i,j), ...}`.
    Text,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e)
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Malformed(m) => Failure::usage(format!("malformed document: {m}")),
            DocumentError::Mismatch(m) => Failure {
                code: EXIT_MISMATCH,
                message: m,
            },
        }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
                return EXIT_OK;
            }
            let _ = err.write_all(rendered.as_bytes());
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::W2g { n, k, word, format } => {
            let params = CycleParams::new(n, k)?;
            let text = match word {
                Some(w) => w,
                None => read_all(stdin)?,
            };
            let word = parse_word(strip_newline(&text), params)?;
            let g = word_to_subgraph(&word);
            write_graph(out, &g, format)?;
        }
        Command::G2w { k, input } => {
            let text = match input {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
                None => read_all(stdin)?,
            };
            let g = SubgraphDocument::parse(&text)?.to_subgraph(k)?;
            writeln!(out, "{}", subgraph_to_word(&g))?;
        }
        Command::Enumerate { n, k, side, format } => {
            let params = CycleParams::new(n, k)?;
            match side {
                Side::Words => {
                    for w in enumerate_words(params) {
                        writeln!(out, "{w}")?;
                    }
                }
                Side::Graphs => {
                    for g in enumerate_subgraphs(params) {
                        match format {
                            ListFormat::Json => {
                                writeln!(out, "{}", SubgraphDocument::from_subgraph(&g).to_json())?
                            }
                            ListFormat::Text => writeln!(out, "{g}")?,
                        }
                    }
                }
            }
        }
        Command::Count { n, k, brute_force } => {
            let params = CycleParams::new(n, k)?;
            let mut table = CountTable::closed_form(params);
            if brute_force {
                table.fill_brute_force();
            }
            write_table(out, &table)?;
            if brute_force {
                if let Err(e) = table.check() {
                    writeln!(out, "MISMATCH")?;
                    return Err(Failure {
                        code: EXIT_COUNT_MISMATCH,
                        message: e.to_string(),
                    });
                }
                writeln!(out, "MATCH")?;
            } else {
                // closed form alone still has internal consistency to check
                count_table(params, false)?;
            }
        }
        Command::Verify { max_n } => {
            let cells: Vec<CycleParams> = CycleParams::grid(max_n as usize).collect();
            let reports: Vec<_> = cells.par_iter().map(|&p| verify_bijection(p)).collect();
            let mut first_failure = None;
            for r in &reports {
                let verdict = if r.success() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{} {verdict} words={} subgraphs={}",
                    r.params, r.words_enumerated, r.subgraphs_enumerated
                )?;
                if !r.success() && first_failure.is_none() {
                    first_failure = Some(r);
                }
            }
            if let Some(r) = first_failure {
                return Err(Failure {
                    code: EXIT_VERIFY_FAILED,
                    message: format!(
                        "{}: {}",
                        r.params,
                        r.counterexamples
                            .first()
                            .map_or("no counterexample recorded", |s| s)
                    ),
                });
            }
        }
    }
    Ok(())
}

fn read_all(stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut s = String::new();
    stdin.read_to_string(&mut s)?;
    Ok(s)
}

fn strip_newline(s: &str) -> &str {
    s.strip_suffix('\n')
        .map_or(s, |s| s.strip_suffix('\r').unwrap_or(s))
}

fn write_graph(out: &mut dyn Write, g: &CycleSubgraph, format: GraphFormat) -> std::io::Result<()> {
    match format {
        GraphFormat::Json => writeln!(out, "{}", SubgraphDocument::from_subgraph(g).to_json()),
        GraphFormat::Dot => out.write_all(render::dot(g).as_bytes()),
        GraphFormat::Ascii => out.write_all(render::ascii(g).as_bytes()),
    }
}

fn write_table(out: &mut dyn Write, t: &CountTable) -> std::io::Result<()> {
    writeln!(
        out,
        "w_star={} w_zero={} total={}",
        t.w_star, t.w_zero, t.w_total
    )?;
    if let (Some(s), Some(z), Some(total)) = (&t.g_star, &t.g_zero, &t.g_total) {
        writeln!(out, "g_star={s} g_zero={z} total={total}")?;
    }
    Ok(())
}
