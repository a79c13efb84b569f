use std::fmt::Write;

use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};

pub(crate) fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

struct Cursor<'a> {
    chars: Vec<(usize, usize, char)>,
    pos: usize,
    _text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let mut chars = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('%').next().unwrap_or("");
            for (col, c) in line.chars().enumerate() {
                chars.push((ln + 1, col + 1, c));
            }
            chars.push((ln + 1, line.chars().count() + 1, '\n'));
        }
        Cursor {
            chars,
            pos: 0,
            _text: text,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.2.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn loc(&self) -> (usize, usize) {
        self.chars
            .get(self.pos)
            .or(self.chars.last())
            .map_or((1, 1), |&(l, c, _)| (l, c))
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.loc();
        Error::parse(l, c, msg)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.chars.get(self.pos) {
            Some(&(_, _, c)) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(&(_, _, c)) => Err(self.err(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{want}`, found end of input"))),
        }
    }

    fn word(&mut self) -> Result<(String, (usize, usize))> {
        self.skip_ws();
        let loc = self.loc();
        let mut s = String::new();
        while let Some(&(_, _, c)) = self.chars.get(self.pos) {
            if !is_name_char(c) {
                break;
            }
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() {
            return Err(self.err("expected an identifier"));
        }
        Ok((s, loc))
    }
}

/// Parses `arg(NAME).` and `att(A,B).` statements; `%` starts a comment.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework> {
    let mut cur = Cursor::new(text);
    let mut args: Vec<(String, (usize, usize))> = Vec::new();
    let mut attacks: Vec<(String, String, (usize, usize))> = Vec::new();
    while !cur.at_end() {
        let (kw, loc) = cur.word()?;
        cur.expect('(')?;
        match kw.as_str() {
            "arg" => {
                let (name, _) = cur.word()?;
                args.push((name, loc));
            }
            "att" => {
                let (a, _) = cur.word()?;
                cur.expect(',')?;
                let (b, _) = cur.word()?;
                attacks.push((a, b, loc));
            }
            other => {
                return Err(Error::parse(loc.0, loc.1, format!("unknown statement `{other}`")));
            }
        }
        cur.expect(')')?;
        cur.expect('.')?;
    }
    build(args, attacks)
}

pub(crate) fn build(
    args: Vec<(String, (usize, usize))>,
    attacks: Vec<(String, String, (usize, usize))>,
) -> Result<ArgumentationFramework> {
    let mut sorted: Vec<&String> = args.iter().map(|(n, _)| n).collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateArgument(w[0].clone()));
    }
    for (a, b, (l, c)) in &attacks {
        for n in [a, b] {
            if sorted.binary_search(&n).is_err() {
                return Err(Error::parse(*l, *c, format!("attack references unknown argument `{n}`")));
            }
        }
    }
    ArgumentationFramework::new(
        args.into_iter().map(|(n, _)| n),
        attacks.into_iter().map(|(a, b, _)| (a, b)),
    )
}

pub fn print_apx(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for a in af.arguments() {
        writeln!(out, "arg({a}).").unwrap();
    }
    for (a, b) in af.attacks() {
        writeln!(out, "att({a},{b}).").unwrap();
    }
    out
}
