//! Run configuration.
//!
//! A configuration file holds one `key = value` pair per line; blank lines
//! and lines starting with `#` are ignored. Recognized keys are `command`,
//! `group`, `parabolic`, `format`, `depth`, `precision`, `threads`, `out`,
//! `range`, `convention` and `point`, with the same value syntax as the
//! corresponding command-line flags:
//!
//! ```text
//! # reproduce the F4 tables
//! command = poles
//! group = F4
//! parabolic = all
//! format = latex
//! ```
//!
//! Flags given on the command line override values read from the file.

use std::path::PathBuf;
use std::str::FromStr;

use eisenpole_core::{parse_q, CartanType, Convention, Q};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Rootdata,
    Poles,
    Identities,
    Constants,
    Verify,
    Appendix,
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "rootdata" => Command::Rootdata,
            "poles" => Command::Poles,
            "identities" => Command::Identities,
            "constants" => Command::Constants,
            "verify" => Command::Verify,
            "appendix" => Command::Appendix,
            _ => return Err(CliError::Config(format!("unknown command `{}`", s))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Latex,
    Json,
    /// Graphviz export of identity chains.
    Dot,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "table" => Format::Table,
            "latex" => Format::Latex,
            "json" => Format::Json,
            "dot" => Format::Dot,
            _ => return Err(CliError::Config(format!("unknown format `{}`", s))),
        })
    }
}

/// One-based parabolic selection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parabolics {
    All,
    List(Vec<usize>),
}

impl Parabolics {
    /// Zero-based indices for a group of the given rank.
    pub fn indices(&self, rank: usize) -> Result<Vec<usize>, CliError> {
        match self {
            Parabolics::All => Ok((0..rank).collect()),
            Parabolics::List(v) => v
                .iter()
                .map(|&k| {
                    if k == 0 || k > rank {
                        Err(CliError::Config(format!("parabolic {} out of range 1..={}", k, rank)))
                    } else {
                        Ok(k - 1)
                    }
                })
                .collect(),
        }
    }
}

impl FromStr for Parabolics {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s == "all" {
            return Ok(Parabolics::All);
        }
        s.split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| CliError::Config(format!("bad parabolic `{}`", x))))
            .collect::<Result<Vec<_>, _>>()
            .map(Parabolics::List)
    }
}

fn parse_rational(s: &str) -> Result<Q, CliError> {
    parse_q(s.trim()).ok_or_else(|| CliError::Config(format!("bad rational `{}`", s)))
}

/// Parses `lo:hi` (or `lo,hi`) with rational endpoints.
pub fn parse_range(s: &str) -> Result<(Q, Q), CliError> {
    let (a, b) = s
        .split_once(':')
        .or_else(|| s.split_once(','))
        .ok_or_else(|| CliError::Config(format!("range `{}` must look like lo:hi", s)))?;
    let (lo, hi) = (parse_rational(a)?, parse_rational(b)?);
    if lo > hi {
        return Err(CliError::Config(format!("empty range `{}`", s)));
    }
    Ok((lo, hi))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub group: Option<String>,
    pub parabolics: Parabolics,
    pub format: Format,
    /// Number of Laurent terms beyond the pole part shown in proofs.
    pub depth: u32,
    /// Decimal digits of the numeric certificate backend.
    pub precision: u32,
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
    pub range: (Q, Q),
    pub convention: Convention,
    /// Expansion point of the `appendix` command.
    pub point: Option<Q>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            group: None,
            parabolics: Parabolics::All,
            format: Format::Table,
            depth: 3,
            precision: 50,
            threads: None,
            out: None,
            range: (Q::from_integer(0), Q::new(1, 2)),
            convention: Convention::MinusHalf,
            point: None,
        }
    }

    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let value = value.trim();
        let int = |v: &str| v.parse::<u32>().map_err(|_| CliError::Config(format!("`{}` expects an integer, got `{}`", key, v)));
        match key.trim() {
            "command" => self.command = value.parse()?,
            "group" => self.group = Some(value.to_string()),
            "parabolic" => self.parabolics = value.parse()?,
            "format" => self.format = value.parse()?,
            "depth" => self.depth = int(value)?,
            "precision" => self.precision = int(value)?,
            "threads" => self.threads = Some(int(value)? as usize),
            "out" => self.out = Some(PathBuf::from(value)),
            "range" => self.range = parse_range(value)?,
            "convention" => {
                self.convention = Convention::parse(value)
                    .ok_or_else(|| CliError::Config(format!("unknown convention `{}`", value)))?
            }
            "point" => self.point = Some(parse_rational(value)?),
            other => return Err(CliError::Config(format!("unknown configuration key `{}`", other))),
        }
        Ok(())
    }

    /// Applies every setting of a configuration file.
    pub fn apply_file(&mut self, text: &str) -> Result<(), CliError> {
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected `key = value`", n + 1)))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    /// The parsed group, checked against the supported ranks.
    pub fn cartan_type(&self) -> Result<CartanType, CliError> {
        let g = self.group.as_deref().ok_or_else(|| CliError::Config("no group given".into()))?;
        let t: CartanType = g.parse().map_err(|e: eisenpole_core::Error| CliError::Config(e.to_string()))?;
        if t.rank > 8 {
            return Err(CliError::Config(format!("rank {} exceeds 8", t.rank)));
        }
        Ok(t)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let t = self.cartan_type()?;
        self.parabolics.indices(t.rank)?;
        if self.precision < 30 {
            return Err(CliError::Config(format!("precision {} is below 30 digits", self.precision)));
        }
        if self.depth < 1 {
            return Err(CliError::Config("depth must be at least 1".into()));
        }
        if self.threads == Some(0) {
            return Err(CliError::Config("threads must be positive".into()));
        }
        if self.command == Command::Appendix {
            if self.point.is_none() {
                return Err(CliError::Config("appendix needs --point".into()));
            }
            if !matches!(&self.parabolics, Parabolics::List(v) if v.len() == 1) {
                return Err(CliError::Config("appendix needs exactly one --parabolic".into()));
            }
        }
        if self.format == Format::Dot && self.command != Command::Identities {
            return Err(CliError::Config("dot output is only available for identities".into()));
        }
        Ok(())
    }
}
