//! `binoshift`: transforms, root shifts, tables and verification from the
//! command line.
//!
//! Exit status: 0 on success, 1 when a verification suite fails, 2 on usage
//! errors (bad literals, unknown families, prefixes that are too short).

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use binoshift::exactnum::Scalar;
use binoshift::families::{self, family_prefix};
use binoshift::recurrence::{shift_characteristic, CharPoly};
use binoshift::transform::{apply_transform, SequencePrefix};
use binoshift::verify::{self, Suite, VerifyConfig};
use binoshift::Domain;
use clap::{Parser, Subcommand, ValueEnum};

use crate::render::Rendered;

#[derive(Parser, Debug)]
#[command(name = "binoshift", version, about = "Exact binomial-convolution transforms T_r")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Oeis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Recurrences,
    Segments,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Semigroup,
    Rootshift,
    Identities,
    Models,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply T_r to a registered family or an inline prefix.
    Transform {
        #[arg(long, conflicts_with = "inline", required_unless_present = "inline")]
        family: Option<String>,
        /// Comma-separated integers or p/q rationals.
        #[arg(long, allow_hyphen_values = true)]
        inline: Option<String>,
        #[arg(short = 'r', long = "shift", visible_alias = "r", default_value = "1", allow_negative_numbers = true)]
        r: String,
        /// Largest output index (defaults to 9 for families, the last inline index otherwise).
        #[arg(short = 'n', long = "length")]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print P(X - r) for a monic P given by descending coefficients.
    ShiftPoly {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
        #[arg(short = 'r', long = "shift", visible_alias = "r", default_value = "1", allow_negative_numbers = true)]
        r: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Reproduce the transformed-recurrence table or the initial-segment table.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run seeded invariant suites; exit 1 on any failure.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        /// Index bound for the deterministic identity checks.
        #[arg(short = 'n', long = "length", default_value_t = 20)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// List registered families.
    Family {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(rendered) => {
            let mut out = io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = out.write_all(rendered.text.as_bytes());
            let _ = out.flush();
            ExitCode::from(rendered.status)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_shift(s: &str) -> Result<Scalar, String> {
    Scalar::parse_number(s).map_err(|e| format!("invalid shift `{s}`: {e}"))
}

/// Parses a comma-separated list; integers unless some entry is `p/q`.
fn parse_list(s: &str) -> Result<Vec<Scalar>, String> {
    let items: Vec<&str> = s.split(',').map(str::trim).collect();
    if items.iter().any(|i| i.is_empty()) {
        return Err(format!("empty entry in `{s}`"));
    }
    let domain = if items.iter().any(|i| i.contains('/')) {
        Domain::Rat
    } else {
        Domain::Int
    };
    items
        .iter()
        .map(|i| Scalar::parse(i, domain).map_err(|e| format!("invalid value `{i}`: {e}")))
        .collect()
}

/// Brings the prefix and `r` into a common domain (integer prefixes are
/// promoted to rationals for a rational `r`).
fn align(a: SequencePrefix, r: &Scalar) -> Result<SequencePrefix, String> {
    if a.domain() == Domain::Int && r.domain() == Domain::Rat {
        return a.promote(Domain::Rat).map_err(|e| e.to_string());
    }
    Ok(a)
}

fn run(command: Command) -> Result<Rendered, String> {
    match command {
        Command::Transform {
            family,
            inline,
            r,
            n,
            format,
        } => {
            let r = parse_shift(&r)?;
            let (label, a) = match (family, inline) {
                (Some(name), _) => {
                    let n_max = n.unwrap_or(9);
                    let a = family_prefix(&name, n_max).map_err(|e| e.to_string())?;
                    (name, a)
                }
                (None, Some(text)) => {
                    let a = SequencePrefix::new(parse_list(&text)?).map_err(|e| e.to_string())?;
                    ("inline".to_string(), a)
                }
                (None, None) => return Err("one of --family or --inline is required".into()),
            };
            let n_max = n.unwrap_or(a.max_index());
            let a = align(a, &r)?;
            let b = apply_transform(&a, &r, n_max).map_err(|e| e.to_string())?;
            render::transform(&label, &r, &b, format)
        }
        Command::ShiftPoly { coeffs, r, format } => {
            let r = parse_shift(&r)?;
            let mut poly = CharPoly::new(parse_list(&coeffs)?).map_err(|e| e.to_string())?;
            if poly.domain() == Domain::Int && r.domain() == Domain::Rat {
                poly = poly.promote(Domain::Rat).map_err(|e| e.to_string())?;
            }
            let shifted = shift_characteristic(&poly, &r).map_err(|e| e.to_string())?;
            render::shift_poly(&poly, &r, &shifted, format)
        }
        Command::Table { which, format } => match which {
            TableKind::Recurrences => render::recurrences(&families::table_recurrences(), format),
            TableKind::Segments => render::segments(&families::table_initial_segments(), format),
        },
        Command::Verify {
            suite,
            seed,
            cases,
            n,
            format,
        } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Semigroup => vec![Suite::Semigroup],
                SuiteArg::Rootshift => vec![Suite::Rootshift],
                SuiteArg::Identities => vec![Suite::Identities],
                SuiteArg::Models => vec![Suite::Models],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let cfg = VerifyConfig {
                seed,
                cases: cases as usize,
                n_max: n.max(1),
            };
            render::verify(&verify::run(&suites, &cfg), format)
        }
        Command::Family { format } => render::families(&families::registry(), format),
    }
}
