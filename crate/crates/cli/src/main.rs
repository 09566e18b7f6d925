//! `hda`: parse documents, run operations on ipomsets, languages and HDA,
//! and print documents, text or DOT.

mod commands;
mod input;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use crate::commands::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    /// Check a document of any kind.
    Validate,
    /// Bounded language of an HDA, as generators.
    Language,
    /// Every member of a language (or of an HDA's language) up to a bound.
    Expand,
    /// Tensor product of HDA.
    Tensor,
    /// Disjoint union of HDA.
    Coproduct,
    /// Pushout of a span of HDA.
    Pushout,
    /// Truncated replication of an HDA.
    Replicate,
    /// Prefix of the replication chain of an HDA.
    Chain,
    /// Gluing composition of two ipomsets or two languages.
    Glue,
    /// Parallel composition of two ipomsets or two languages.
    Par,
    /// Bounded parallel closure of a language.
    Closure,
    /// Decide whether the first ipomset is subsumed by the second.
    Subsume,
    /// Interval representation of an ipomset, or a 2+2 witness.
    Interval,
    /// Graphviz rendering of an HDA.
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "hda", version, about = "Ipomsets, their languages and higher-dimensional automata")]
pub struct Cli {
    #[arg(value_enum)]
    verb: Verb,
    /// Input documents; `-` reads standard input.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Event bound for language extraction and expansion.
    #[arg(long)]
    max_events: Option<usize>,
    /// Power bound for replication, chains and closure.
    #[arg(long)]
    n: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(text) => match &cli.out {
            Some(path) => match fs::write(path, text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("hda: cannot write {}: {e}", path.display());
                    ExitCode::from(2)
                }
            },
            None => {
                print!("{text}");
                ExitCode::SUCCESS
            }
        },
        Err(CliError::Usage(msg)) => {
            eprintln!("hda: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(record)) => {
            print!("{}", hda_core::format::to_json(&record));
            ExitCode::from(1)
        }
    }
}
