//! Command-line surface.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "taftcheck", version, about = "Exact verification of the Taft algebra identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites and write a report.
    Verify(VerifyArgs),
    /// Emit the (k, s) identity grid.
    Table(CommonArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Orders to check: `a`, `a..b` or `a..=b` (both ends inclusive), each at least 2.
    #[arg(long, value_name = "RANGE")]
    pub n: NRange,
    /// Canonical root `w = zeta` only, or every primitive `w = zeta^t`.
    #[arg(long, value_enum, default_value_t = RootPolicy::Canonical)]
    pub roots: RootPolicy,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
}

/// An inclusive range of orders `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub start: usize,
    pub end: usize,
}

impl NRange {
    pub fn new(start: usize, end: usize) -> Result<Self, String> {
        if start < 2 {
            return Err(format!("n must be at least 2, got {start}"));
        }
        if end < start {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(Self { start, end })
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.start..=self.end
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("not a non-negative integer: {t:?}"));
        match s.split_once("..") {
            None => {
                let a = num(s)?;
                Self::new(a, a)
            }
            Some((a, b)) => Self::new(num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        }
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Identities,
    Hopf,
    Comodule,
    Yd,
    Dual,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 5] = [Suite::Identities, Suite::Hopf, Suite::Comodule, Suite::Yd, Suite::Dual];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Hopf => "hopf",
            Suite::Comodule => "comodule",
            Suite::Yd => "yd",
            Suite::Dual => "dual",
            Suite::All => "all",
        }
    }

    /// The concrete suites this selection runs, in report order.
    pub fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::PARTS.to_vec(),
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RootPolicy {
    Canonical,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("2..6".parse::<NRange>().unwrap(), NRange { start: 2, end: 6 });
        assert_eq!("2..=6".parse::<NRange>().unwrap(), NRange { start: 2, end: 6 });
        assert_eq!("4".parse::<NRange>().unwrap(), NRange { start: 4, end: 4 });
        assert!("1".parse::<NRange>().is_err());
        assert!("1..3".parse::<NRange>().is_err());
        assert!("5..3".parse::<NRange>().is_err());
        assert!("x..3".parse::<NRange>().is_err());
    }
}
