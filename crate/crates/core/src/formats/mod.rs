//! Text formats: APX and TGF for frameworks, a line-based syntax for
//! conditional knowledge bases, and DOT export.

mod apx;
mod dot;
mod kb;
mod tgf;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

pub use apx::{parse_apx, print_apx};
pub use dot::to_dot;
pub use kb::{parse_formula, parse_kb, print_kb};
pub use tgf::{parse_tgf, print_tgf};

use crate::af::ArgumentationFramework;
use crate::error::Result;
use crate::systemz::KnowledgeBase;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Apx,
    Tgf,
    Kb,
}

impl Format {
    /// Guesses the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        path.extension()?.to_str()?.parse().ok()
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "apx" => Ok(Format::Apx),
            "tgf" => Ok(Format::Tgf),
            "kb" => Ok(Format::Kb),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Apx => "apx",
            Format::Tgf => "tgf",
            Format::Kb => "kb",
        })
    }
}

/// Parses a framework in one of the two framework formats.
pub fn parse_af(text: &str, format: Format) -> Result<ArgumentationFramework> {
    match format {
        Format::Apx => parse_apx(text),
        Format::Tgf => parse_tgf(text),
        Format::Kb => Err(crate::Error::parse(1, 1, "expected a framework format (apx or tgf)")),
    }
}

pub fn print_af(af: &ArgumentationFramework, format: Format) -> String {
    match format {
        Format::Tgf => print_tgf(af),
        _ => print_apx(af),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Af(ArgumentationFramework),
    Kb(KnowledgeBase),
}

/// A parsed input together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub format: Format,
    pub payload: Payload,
    pub source: String,
}

impl Document {
    pub fn parse(text: &str, format: Format, source: impl Into<String>) -> Result<Self> {
        let payload = match format {
            Format::Kb => Payload::Kb(parse_kb(text)?),
            f => Payload::Af(parse_af(text, f)?),
        };
        Ok(Document {
            format,
            payload,
            source: source.into(),
        })
    }

    /// Prints the payload back in its own format.
    pub fn print(&self) -> String {
        match &self.payload {
            Payload::Af(af) => print_af(af, self.format),
            Payload::Kb(kb) => print_kb(kb),
        }
    }
}
