//! Command-line front end: tables of observables, the polynomials `P_π`,
//! the expansions `m^k_π`, and the verification suites, with a
//! file-backed result cache.
//!
//! Exit codes: 0 success, 1 verification failure or route disagreement,
//! 2 usage error, 3 internal invariant violation.

mod cache;
mod commands;
mod document;

use std::ffi::OsString;
use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};

pub use cache::{ResultCache, CACHE_ENV};
pub use commands::{Mutation, ObservablesKind, Profile};
pub use document::{Cell, Document, Format, Layout, Table, SCHEMA_VERSION};

use crate::combinatorics::Partition;
use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "boolean-kerov",
    version,
    about = "Exact observables on Young diagrams and the Boolean cumulant / character change of basis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Recompute instead of reading or writing the result cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Stamp the output with the current time.
    #[arg(long, global = true)]
    pub timestamp: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Profile, transition measure, moments or cumulants of one diagram.
    Observables {
        /// Partition, e.g. "(5,3,2,2,1)" or "5,3,2,2,1".
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, value_enum, default_value = "boolean")]
        kind: ObservablesKind,
        /// Highest order reported.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=64))]
        max_k: u32,
    },
    /// The polynomials P_π for 1 <= |π| <= N, computed by both routes.
    KerovBoolean {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=10))]
        max_pi_size: u32,
        #[arg(long, value_enum, hide = true)]
        mutation: Option<Mutation>,
    },
    /// The coefficients of B_k in normalized characters for 2 <= k <= K.
    ExpandBoolean {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=12))]
        max_k: u32,
        #[arg(long, value_enum, hide = true)]
        mutation: Option<Mutation>,
    },
    /// Runs every invariant suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        profile: Profile,
        #[arg(long, value_enum, hide = true)]
        mutation: Option<Mutation>,
    },
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let cache = if cli.no_cache {
        None
    } else {
        ResultCache::from_env()
    };
    execute(&cli, cache.as_ref(), out, err)
}

/// Runs a parsed command against an optional cache.
pub fn execute(
    cli: &Cli,
    cache: Option<&ResultCache>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let timestamp = cli.timestamp.then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });
    let doc = match compute(&cli.command, cache, err) {
        Ok(doc) => doc,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::InvalidInput(_) | Error::Parse { .. } => EXIT_USAGE,
                _ => EXIT_INTERNAL,
            };
        }
    };
    if out
        .write_all(doc.render(cli.format, timestamp).as_bytes())
        .is_err()
    {
        return EXIT_INTERNAL;
    }
    if let (Some(summary), true) = (&doc.summary, cli.format != Format::Text) {
        let _ = err.write_all(doc_summary_text(summary).as_bytes());
    }
    for f in &doc.failures {
        let _ = writeln!(err, "FAIL {f}");
    }
    if doc.failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn doc_summary_text(summary: &Table) -> String {
    let d = Document::new("summary", Default::default(), Layout::Grid, summary.clone());
    d.render(Format::Text, None)
}

fn compute(
    command: &Command,
    cache: Option<&ResultCache>,
    err: &mut dyn Write,
) -> crate::Result<Document> {
    let (mutation, cacheable) = match command {
        Command::Observables { .. } => (None, false),
        Command::KerovBoolean { mutation, .. }
        | Command::ExpandBoolean { mutation, .. }
        | Command::Verify { mutation, .. } => (*mutation, true),
    };
    let key = cache_key(command);
    let cache = cache.filter(|_| cacheable && mutation.is_none());
    if let (Some(c), Some((name, params))) = (cache, &key) {
        if let Some(doc) = c.load(name, params) {
            return Ok(doc);
        }
    }
    let doc = match command {
        Command::Observables {
            lambda,
            kind,
            max_k,
        } => commands::observables(lambda, *kind, *max_k as usize),
        Command::KerovBoolean {
            max_pi_size,
            mutation,
        } => commands::kerov_boolean(*max_pi_size, *mutation)?,
        Command::ExpandBoolean { max_k, mutation } => commands::expand_boolean(*max_k, *mutation)?,
        Command::Verify { profile, mutation } => commands::verify(*profile, *mutation)?,
    };
    if let Some(c) = cache {
        if let Err(e) = c.store(&doc) {
            let _ = writeln!(
                err,
                "warning: cache write to {} failed: {e}",
                c.root().display()
            );
        }
    }
    Ok(doc)
}

fn cache_key(
    command: &Command,
) -> Option<(&'static str, serde_json::Map<String, serde_json::Value>)> {
    use serde_json::json;
    let mut params = serde_json::Map::new();
    let name = match command {
        Command::Observables { .. } => return None,
        Command::KerovBoolean { max_pi_size, .. } => {
            params.insert("max-pi-size".into(), json!(max_pi_size));
            "kerov-boolean"
        }
        Command::ExpandBoolean { max_k, .. } => {
            params.insert("max-k".into(), json!(max_k));
            "expand-boolean"
        }
        Command::Verify { profile, .. } => {
            let name = clap::ValueEnum::to_possible_value(profile)?
                .get_name()
                .to_string();
            params.insert("profile".into(), json!(name));
            "verify"
        }
    };
    Some((name, params))
}
