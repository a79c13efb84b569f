use std::fmt::Write;

use super::apx::{build, is_name_char};
use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};

/// Node ids one per line, a `#` line, then `A B` edge lines. Anything after
/// the id (node labels) or after the two endpoints (edge labels) is ignored.
pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework> {
    let mut args = Vec::new();
    let mut attacks = Vec::new();
    let mut in_edges = false;
    for (ln, line) in text.lines().enumerate() {
        let ln = ln + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "#" {
            if in_edges {
                return Err(Error::parse(ln, 1, "second `#` separator"));
            }
            in_edges = true;
            continue;
        }
        let col = line.len() - line.trim_start().len() + 1;
        let mut tokens = trimmed.split_whitespace();
        let first = tokens.next().expect("non-empty line").to_string();
        check_id(&first, ln, col)?;
        if !in_edges {
            args.push((first, (ln, col)));
        } else {
            let second = tokens
                .next()
                .ok_or_else(|| Error::parse(ln, col + first.len(), "edge needs two endpoints"))?;
            check_id(second, ln, col + first.len() + 1)?;
            attacks.push((first, second.to_string(), (ln, col)));
        }
    }
    build(args, attacks)
}

fn check_id(id: &str, line: usize, column: usize) -> Result<()> {
    if id.chars().all(is_name_char) {
        Ok(())
    } else {
        Err(Error::parse(line, column, format!("invalid identifier `{id}`")))
    }
}

pub fn print_tgf(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for a in af.arguments() {
        writeln!(out, "{a}").unwrap();
    }
    out.push_str("#\n");
    for (a, b) in af.attacks() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}
