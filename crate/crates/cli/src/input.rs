use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use strata_core::formats::{Document, Format, Payload};
use strata_core::{ArgumentationFramework, KnowledgeBase};

/// Guess for stdin or unknown extensions: APX statements, a TGF separator,
/// or conditionals.
fn sniff(text: &str) -> Format {
    let meaningful = text
        .lines()
        .map(|l| l.split('%').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if meaningful.starts_with("arg") || meaningful.starts_with("att") {
        Format::Apx
    } else if meaningful.starts_with('(') || meaningful.starts_with("atoms:") {
        Format::Kb
    } else {
        Format::Tgf
    }
}

pub fn load(path: &Path, format: Option<Format>) -> Result<Document> {
    let stdin = path.as_os_str() == "-";
    let text = if stdin {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let format = format
        .or_else(|| (!stdin).then(|| Format::from_path(path)).flatten())
        .unwrap_or_else(|| sniff(&text));
    let source = if stdin {
        "<stdin>".to_string()
    } else {
        path.display().to_string()
    };
    Document::parse(&text, format, source.clone()).with_context(|| format!("parsing {source} as {format}"))
}

pub fn framework(doc: Document) -> Result<ArgumentationFramework> {
    match doc.payload {
        Payload::Af(af) => Ok(af),
        Payload::Kb(_) => bail!("{} is a knowledge base; this command needs a framework (apx or tgf)", doc.source),
    }
}

pub fn knowledge_base(doc: Document) -> Result<KnowledgeBase> {
    match doc.payload {
        Payload::Kb(kb) => Ok(kb),
        Payload::Af(_) => bail!("{} is a framework; this command needs a knowledge base (kb)", doc.source),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sniffing() {
        assert_eq!(sniff("% c\narg(a)."), Format::Apx);
        assert_eq!(sniff("a\n#\n"), Format::Tgf);
        assert_eq!(sniff("(a | b)"), Format::Kb);
        assert_eq!(sniff("atoms: a\n"), Format::Kb);
    }
}
