//! Subcommands of the `dowen` binary.
//!
//! Exit codes: 0 on success, 1 when `check` finds a violation, 2 on usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dowen_core::axioms::{parse_axiom_list, sweep, AxiomInstance, SweepConfig, Verdict, Witness};
use dowen_core::genfix::{fixture_by_name, random_game, GeneratorSpec, FIXTURE_NAMES};
use dowen_core::{dividends, format_scalar, support, value_by_name, DiversityGame};
use thiserror::Error;

use crate::document::{
    coalition_key, emit_game, emit_game_compact, emit_worths, parse_game, DocumentError,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Core(#[from] dowen_core::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "dowen",
    version,
    about = "Exact Owen and Diversity Owen values for TU-games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One `name  value` line per entry.
    Table,
    /// One `key=value` pair per line.
    Records,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summarize a game document: players, blocks, diversity and support.
    Info { file: PathBuf },
    /// Compute a value.
    Value {
        file: PathBuf,
        /// dowen, owen_raw, shapley_raw, shapley_restricted, eqdiv or blockdiv.
        #[arg(long, default_value = "dowen")]
        rule: String,
        /// Evaluate on the game with non-diverse worths zeroed.
        #[arg(long)]
        restricted: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print the nonzero Harsanyi dividends.
    Dividends {
        file: PathBuf,
        #[arg(long)]
        restricted: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Emit the document with every non-diverse worth set to 0.
    Restrict { file: PathBuf },
    /// Check axioms on random games, or around a given game.
    Check {
        file: Option<PathBuf>,
        #[arg(long, default_value = "dowen")]
        rule: String,
        /// Comma-separated axiom names, or `all`.
        #[arg(long, default_value = "all")]
        axioms: String,
        #[arg(long, default_value_t = 300)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 5)]
        range: i64,
    },
    /// Generate a random game document.
    Gen {
        /// Total player count; must match the block sizes when given.
        #[arg(long)]
        players: Option<usize>,
        /// Comma-separated block sizes, e.g. `2,2,1`.
        #[arg(long)]
        blocks: String,
        /// Comma-separated quotas, one per block.
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 5)]
        range: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only diverse coalitions receive dividends.
        #[arg(long)]
        diverse_only: bool,
    },
    /// Emit a built-in example game, or list them when no name is given.
    Fixtures { name: Option<String> },
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn load(path: &PathBuf) -> Result<DiversityGame, CliError> {
    Ok(parse_game(&read_input(path)?)?)
}

fn parse_sizes(flag: &str, text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            CliError::Usage(format!(
                "--{flag}: expected comma-separated integers, got `{text}`"
            ))
        })
}

fn print_entries<W: Write>(
    out: &mut W,
    entries: Vec<(String, String)>,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Table => {
            let width = entries
                .iter()
                .map(|(k, _)| k.chars().count())
                .max()
                .unwrap_or(0);
            for (k, v) in entries {
                writeln!(out, "{k:<width$}  {v}")?;
            }
        }
        Format::Records => {
            for (k, v) in entries {
                writeln!(out, "{k}={v}")?;
            }
        }
    }
    Ok(())
}

fn names_of(list: impl Iterator<Item = usize>, names: &[String]) -> String {
    list.map(|i| names[i].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

fn info<W: Write>(out: &mut W, g: &DiversityGame) -> io::Result<()> {
    let names = g.game().names();
    writeln!(out, "players    {}  ({})", g.n(), names.join(","))?;
    writeln!(out, "blocks     {}", g.structure().m())?;
    for (k, b) in g.structure().blocks().iter().enumerate() {
        writeln!(
            out,
            "block {k:<4} {{{}}}  d = {}",
            names_of(b.players().map(|p| p.index()), names),
            g.bounds().get(k)
        )?;
    }
    writeln!(out, "diverse    {}", g.diverse_coalitions().len())?;
    writeln!(
        out,
        "diverse N  {}",
        if g.is_diverse(g.game().grand_coalition()) {
            "yes"
        } else {
            "no"
        }
    )?;
    writeln!(
        out,
        "v = v^d    {}",
        if g.is_diverse_game() { "yes" } else { "no" }
    )?;
    let outs: Vec<usize> = g.out_players().into_iter().map(|p| p.index()).collect();
    writeln!(out, "out        {{{}}}", names_of(outs.into_iter(), names))?;
    let s = support(g);
    writeln!(out, "support    {}", s.len())?;
    writeln!(out, "universal  {{{}}}", coalition_key(names, s.universal))?;
    Ok(())
}

fn describe(instance: &AxiomInstance) -> String {
    let names = instance.game().game().names();
    match instance {
        AxiomInstance::FairnessWithinComponent { i, j, .. }
        | AxiomInstance::BalancedContributions { i, j, .. }
        | AxiomInstance::WeakBalancedContributions { i, j, .. } => {
            format!("players {} {}", names[i.index()], names[j.index()])
        }
        AxiomInstance::FairnessThroughDiversity { p, q, .. } => format!("blocks {p} {q}"),
        AxiomInstance::NullPlayerOut { player, .. }
        | AxiomInstance::NullPlayerDiverse { player, .. } => {
            format!("player {}", names[player.index()])
        }
        _ => String::new(),
    }
}

fn print_witness<W: Write>(out: &mut W, w: &Witness) -> io::Result<()> {
    let v = &w.violation;
    writeln!(out, "witness {}: {}", w.instance.axiom(), v.clause)?;
    writeln!(out, "  lhs     {}", format_scalar(&v.lhs))?;
    writeln!(out, "  rhs     {}", format_scalar(&v.rhs))?;
    let at = describe(&w.instance);
    if !at.is_empty() {
        writeln!(out, "  at      {at}")?;
    }
    writeln!(out, "  game    {}", emit_game_compact(w.instance.game()))?;
    if let Some(partner) = w.instance.partner() {
        writeln!(out, "  partner {}", emit_worths(partner))?;
    }
    Ok(())
}

/// Runs one command, writing to `out`, and returns the process exit code.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<i32, CliError> {
    let io_err = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    match cli.command {
        Command::Info { file } => {
            let g = load(&file)?;
            info(out, &g).map_err(io_err)?;
        }
        Command::Value {
            file,
            rule,
            restricted,
            format,
        } => {
            let f = value_by_name(&rule)?;
            let mut g = load(&file)?;
            if restricted {
                g = g.restricted();
            }
            let a = f.evaluate(&g);
            let mut entries: Vec<_> = a
                .iter()
                .map(|(k, x)| (k.to_string(), format_scalar(x)))
                .collect();
            if format == Format::Table {
                entries.push(("sum".into(), format_scalar(&a.total())));
            }
            print_entries(out, entries, format).map_err(io_err)?;
        }
        Command::Dividends {
            file,
            restricted,
            format,
        } => {
            let mut g = load(&file)?;
            if restricted {
                g = g.restricted();
            }
            let table = dividends(g.game());
            let entries = table
                .nonzero()
                .map(|(s, x)| (coalition_key(g.game().names(), s), format_scalar(x)))
                .collect();
            print_entries(out, entries, format).map_err(io_err)?;
            if restricted && format == Format::Table {
                let s = support(&g);
                writeln!(out, "support    {}", s.len()).map_err(io_err)?;
                writeln!(
                    out,
                    "universal  {{{}}}",
                    coalition_key(g.game().names(), s.universal)
                )
                .map_err(io_err)?;
            }
        }
        Command::Restrict { file } => {
            let g = load(&file)?;
            write!(out, "{}", emit_game(&g.restricted())).map_err(io_err)?;
        }
        Command::Check {
            file,
            rule,
            axioms,
            trials,
            seed,
            density,
            range,
        } => {
            let f = value_by_name(&rule)?;
            let axioms = parse_axiom_list(&axioms)?;
            let mut config = match file {
                Some(path) => SweepConfig::around(load(&path)?),
                None => SweepConfig::standard(),
            };
            config.density = density;
            config.range = range;
            let reports = sweep(&f, &config, &axioms, trials, seed)?;
            writeln!(out, "rule {}  trials {trials}  seed {seed}", f.name()).map_err(io_err)?;
            for r in &reports {
                writeln!(out, "{r}").map_err(io_err)?;
            }
            let mut code = 0;
            for r in &reports {
                if r.verdict() == Verdict::Fail {
                    code = 1;
                    if let Some(w) = &r.witness {
                        print_witness(out, w).map_err(io_err)?;
                    }
                }
            }
            return Ok(code);
        }
        Command::Gen {
            players,
            blocks,
            d,
            density,
            range,
            seed,
            diverse_only,
        } => {
            let sizes = parse_sizes("blocks", &blocks)?;
            let quotas = parse_sizes("d", &d)?;
            let mut spec = GeneratorSpec::new(sizes, quotas);
            if let Some(n) = players {
                if n != spec.n() {
                    return Err(CliError::Usage(format!(
                        "--players {n} does not match block sizes summing to {}",
                        spec.n()
                    )));
                }
            }
            spec.density = density;
            spec.range = range;
            spec.seed = seed;
            spec.diverse_only = diverse_only;
            write!(out, "{}", emit_game(&random_game(&spec)?)).map_err(io_err)?;
        }
        Command::Fixtures { name } => match name {
            Some(name) => write!(out, "{}", emit_game(&fixture_by_name(&name)?)).map_err(io_err)?,
            None => {
                for name in FIXTURE_NAMES {
                    writeln!(out, "{name}").map_err(io_err)?;
                }
            }
        },
    }
    Ok(0)
}
