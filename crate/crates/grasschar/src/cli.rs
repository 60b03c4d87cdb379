//! Argument definitions and command dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use grasschar_core::verifier::Status;

use crate::cache::{CacheMode, GbCache};
use crate::compute::{self, RingArgs};
use crate::error::CliError;
use crate::report::{self, Format, Summary};
use crate::runner;

#[derive(Debug, Parser)]
#[command(
    name = "grasschar",
    version,
    about = "Exact GF(2) computations in the cohomology of Grassmannians"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Groebner basis cache directory.
    #[arg(long, global = true, env = "GRASSCHAR_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Recompute every Groebner basis instead of reading the cache.
    #[arg(long, global = true, conflicts_with = "verify_cache")]
    pub no_cache: bool,
    /// Recompute every Groebner basis and byte-compare with the cache.
    #[arg(long, global = true)]
    pub verify_cache: bool,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
}

impl GlobalArgs {
    pub fn cache_dir(&self) -> PathBuf {
        self.cache_dir.clone().unwrap_or_else(default_cache_dir)
    }

    pub fn cache(&self) -> GbCache {
        let mode = if self.no_cache {
            CacheMode::Bypass
        } else if self.verify_cache {
            CacheMode::Verify
        } else {
            CacheMode::Use
        };
        GbCache::new(self.cache_dir(), mode)
    }
}

pub fn default_cache_dir() -> PathBuf {
    dirs::cache_dir()
        .map(|d| d.join("grasschar"))
        .unwrap_or_else(|| PathBuf::from(".grasschar-cache"))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a polynomial, Groebner basis, additive basis or dimension vector.
    Compute {
        #[command(subcommand)]
        object: ComputeObject,
    },
    /// Run catalog claims and report pass/fail per parameter set.
    Verify {
        /// Only run this claim.
        #[arg(long)]
        claim: Option<String>,
        /// A single `t` or an inclusive range `a..b`.
        #[arg(long, value_parser = parse_t_range, default_value = "3..5")]
        t: (u32, u32),
    },
    /// Manage the Groebner basis cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum ComputeObject {
    /// `g_r` in Z2[w2, w3].
    G {
        #[arg(long)]
        r: u32,
    },
    /// The dual Stiefel-Whitney class `w̄_r` over `w1..wk`.
    Wbar {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 3)]
        k: u32,
    },
    /// Reduced Groebner basis, one element per line in ascending leading monomial.
    Gb {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Standard monomials of one degree.
    Basis {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Dimensions of degrees `0..=up-to`.
    Hilbert {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        up_to: u32,
    },
    /// Betti numbers of the oriented Grassmannian from the Gysin sequence.
    Gysin {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        k: u32,
        #[arg(long)]
        up_to: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Delete every cached basis.
    Clear,
    /// Recompute every cached basis and byte-compare.
    Verify,
}

pub fn parse_t_range(s: &str) -> Result<(u32, u32), String> {
    let parse = |x: &str| {
        x.trim()
            .parse::<u32>()
            .map_err(|_| format!("invalid t `{x}`"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((parse(a)?, parse(b)?))
        }
        None => {
            let t = parse(s)?;
            Ok((t, t))
        }
    }
}

/// Execute `cli`, writing results to `out`. Returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = cli.global.format;
    let io = |e| CliError::io("<stdout>", e);
    match &cli.command {
        Command::Compute { object } => {
            let cache = cli.global.cache();
            let text = match object {
                ComputeObject::G { r } => compute::g(*r, format),
                ComputeObject::Wbar { r, k } => compute::wbar_cmd(*r, *k, format)?,
                ComputeObject::Gb { ring } => compute::gb(&ring.key()?, &cache, format)?,
                ComputeObject::Basis { ring, degree } => {
                    compute::basis(&ring.key()?, *degree, &cache, format)?
                }
                ComputeObject::Hilbert { ring, up_to } => {
                    compute::hilbert(&ring.key()?, *up_to, &cache, format)?
                }
                ComputeObject::Gysin { n, k, up_to } => {
                    compute::gysin(*n, *k, *up_to, &cache, format)?
                }
            };
            writeln!(out, "{text}").map_err(io)?;
            Ok(0)
        }
        Command::Verify { claim, t } => {
            let cache = cli.global.cache();
            let mut write_err = None;
            let reports = runner::run(t.0, t.1, claim.as_deref(), &cache, |r| {
                if write_err.is_none() {
                    if let Err(e) = writeln!(out, "{}", report::render(r, format)) {
                        write_err = Some(e);
                    }
                }
            })?;
            if let Some(e) = write_err {
                return Err(io(e));
            }
            let summary = Summary::of(&reports);
            if format == Format::Text {
                writeln!(out, "{summary}").map_err(io)?;
            }
            Ok(if reports.iter().any(|r| r.status == Status::Fail) {
                1
            } else {
                0
            })
        }
        Command::Cache { action } => {
            let cache = GbCache::new(cli.global.cache_dir(), CacheMode::Use);
            match action {
                CacheAction::Clear => {
                    let n = cache.clear()?;
                    writeln!(out, "removed {n} entries from {}", cache.dir().display())
                        .map_err(io)?;
                }
                CacheAction::Verify => {
                    let n = cache.verify_all()?;
                    writeln!(out, "{n} entries match recomputation").map_err(io)?;
                }
            }
            Ok(0)
        }
    }
}
