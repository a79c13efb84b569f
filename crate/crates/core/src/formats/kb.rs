use std::fmt::Write;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::propo::{Atom, Conditional, Formula, Signature};
use crate::systemz::KnowledgeBase;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Bar,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Top,
    Bottom,
    Atom(String),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Not => "`!`".into(),
            Tok::And => "`&&`".into(),
            Tok::Or => "`||`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Top => "`T`".into(),
            Tok::Bottom => "`F`".into(),
            Tok::Atom(a) => format!("atom `{a}`"),
        }
    }
}

/// Token with its 1-based column.
type Spanned = (Tok, usize);

fn tokenize(line: &str, ln: usize) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let rest = &chars[i..];
        let (tok, len) = match rest {
            [c, ..] if c.is_whitespace() => {
                i += 1;
                continue;
            }
            ['|', '|', ..] => (Tok::Or, 2),
            ['&', '&', ..] => (Tok::And, 2),
            ['-', '>', ..] => (Tok::Implies, 2),
            ['<', '-', '>', ..] => (Tok::Iff, 3),
            ['|', ..] => (Tok::Bar, 1),
            ['(', ..] => (Tok::LParen, 1),
            [')', ..] => (Tok::RParen, 1),
            ['!', ..] => (Tok::Not, 1),
            [c, ..] if c.is_ascii_alphanumeric() || *c == '_' => {
                let len = rest
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                    .count();
                let word: String = rest[..len].iter().collect();
                let tok = match word.as_str() {
                    "T" => Tok::Top,
                    "F" => Tok::Bottom,
                    w => Tok::Atom(
                        Atom::new(w)
                            .map_err(|_| Error::parse(ln, col, format!("invalid atom name `{w}`")))?
                            .name()
                            .to_string(),
                    ),
                };
                (tok, len)
            }
            [c, ..] => return Err(Error::parse(ln, col, format!("unexpected character `{c}`"))),
            [] => unreachable!(),
        };
        out.push((tok, col));
        i += len;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn unexpected(&self, wanted: &str) -> Error {
        let found = self
            .peek()
            .map_or_else(|| "end of formula".to_string(), Tok::describe);
        Error::parse(self.line, self.col(), format!("expected {wanted}, found {found}"))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut f = self.implies()?;
        while self.eat(&Tok::Iff) {
            f = f.iff(self.implies()?);
        }
        Ok(f)
    }

    fn implies(&mut self) -> Result<Formula> {
        let f = self.or()?;
        if self.eat(&Tok::Implies) {
            return Ok(f.implies(self.implies()?));
        }
        Ok(f)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut f = self.and()?;
        while self.eat(&Tok::Or) {
            f = f.or(self.and()?);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while self.eat(&Tok::And) {
            f = f.and(self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Not) {
            return Ok(self.unary()?.not());
        }
        let f = match self.peek() {
            Some(Tok::Top) => Formula::Top,
            Some(Tok::Bottom) => Formula::Bottom,
            Some(Tok::Atom(a)) => Formula::var(a),
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                return Ok(f);
            }
            _ => return Err(self.unexpected("a formula")),
        };
        self.pos += 1;
        Ok(f)
    }
}

fn formula_from(toks: &[Spanned], line: usize, end_col: usize) -> Result<Formula> {
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        end_col,
    };
    let f = p.iff()?;
    if p.pos < toks.len() {
        return Err(p.unexpected("an operator or the end of the formula"));
    }
    Ok(f)
}

/// Parses a single formula, e.g. `p && !f -> b`.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let toks = tokenize(text, 1)?;
    formula_from(&toks, 1, text.chars().count() + 1)
}

fn parse_conditional(line: &str, ln: usize) -> Result<Conditional> {
    let toks = tokenize(line, ln)?;
    let end_col = line.chars().count() + 1;
    let Some((Tok::LParen, _)) = toks.first() else {
        let col = toks.first().map_or(end_col, |t| t.1);
        return Err(Error::parse(ln, col, "a conditional starts with `(`"));
    };
    let mut depth = 0usize;
    let mut bars = Vec::new();
    let mut close = None;
    for (i, (t, col)) in toks.iter().enumerate() {
        match t {
            Tok::LParen => depth += 1,
            Tok::RParen => {
                depth -= 1;
                if depth == 0 {
                    close = Some(i);
                    break;
                }
            }
            Tok::Bar if depth == 1 => bars.push((i, *col)),
            Tok::Bar => return Err(Error::parse(ln, *col, "`|` inside a nested formula")),
            _ => {}
        }
    }
    let Some(close) = close else {
        return Err(Error::parse(ln, end_col, "unbalanced `(`"));
    };
    if let Some((_, col)) = toks.get(close + 1) {
        return Err(Error::parse(ln, *col, "trailing input after the conditional"));
    }
    let body_end = toks[close].1;
    match bars.as_slice() {
        [] => Ok(Conditional::fact(formula_from(&toks[1..close], ln, body_end)?)),
        [(bar, bar_col)] => Ok(Conditional::new(
            formula_from(&toks[1..*bar], ln, *bar_col)?,
            formula_from(&toks[bar + 1..close], ln, body_end)?,
        )),
        [_, (_, col), ..] => Err(Error::AmbiguousBar {
            line: ln,
            column: *col,
        }),
    }
}

const ATOMS_DIRECTIVE: &str = "atoms:";

/// One conditional per line, `%` comments. An optional `atoms: a b c` line
/// (before any conditional) fixes the signature and its order; without it
/// the signature is the sorted set of atoms used.
pub fn parse_kb(text: &str) -> Result<KnowledgeBase> {
    let mut declared: Option<Signature> = None;
    let mut conditionals: Vec<(Conditional, usize)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('%').next().unwrap_or("");
        let trimmed = line.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix(ATOMS_DIRECTIVE) {
            let col = line.len() - trimmed.len() + 1;
            if declared.is_some() || !conditionals.is_empty() {
                return Err(Error::parse(ln, col, "`atoms:` must come once, before any conditional"));
            }
            let atoms = rest
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(Atom::new)
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::parse(ln, col, e.to_string()))?;
            declared = Some(Signature::ordered(atoms).map_err(|e| Error::parse(ln, col, e.to_string()))?);
            continue;
        }
        let d = parse_conditional(line, ln)?;
        if let Some((_, first)) = conditionals.iter().find(|(c, _)| *c == d) {
            return Err(Error::parse(ln, 1, format!("duplicate conditional {d} (first on line {first})")));
        }
        if let Some(sig) = &declared {
            for f in [&d.claim, &d.premise] {
                sig.check(f).map_err(|e| Error::parse(ln, 1, e.to_string()))?;
            }
        }
        conditionals.push((d, ln));
    }
    let conditionals: Vec<Conditional> = conditionals.into_iter().map(|(d, _)| d).collect();
    match declared {
        Some(sig) => KnowledgeBase::new(Arc::new(sig), conditionals),
        None => KnowledgeBase::from_conditionals(conditionals),
    }
}

/// Always writes the `atoms:` line, so the signature survives a round trip.
pub fn print_kb(kb: &KnowledgeBase) -> String {
    let mut out = String::from(ATOMS_DIRECTIVE);
    for a in kb.signature().atoms() {
        write!(out, " {a}").unwrap();
    }
    out.push('\n');
    for d in kb.conditionals() {
        writeln!(out, "{d}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn precedence() {
        let (a, b, c) = (Formula::var("a"), Formula::var("b"), Formula::var("c"));
        assert_eq!(f("!a && b"), a.clone().not().and(b.clone()));
        assert_eq!(f("a || b && c"), a.clone().or(b.clone().and(c.clone())));
        assert_eq!(f("a -> b -> c"), a.clone().implies(b.clone().implies(c.clone())));
        assert_eq!(f("a <-> b -> c"), a.clone().iff(b.clone().implies(c.clone())));
        assert_eq!(f("a && b && c"), a.clone().and(b.clone()).and(c.clone()));
        assert_eq!(f("(a || b) && T"), a.or(b).and(Formula::Top));
        assert_eq!(f("!!F"), Formula::Bottom.not().not());
    }

    #[test]
    fn conditionals() {
        let kb = parse_kb("(b | p)\n(!f | p)\n(f | b)").unwrap();
        assert_eq!(kb.conditionals(), fixtures::penguin().conditionals());
        assert_eq!(
            kb.signature().atoms().iter().map(Atom::name).collect::<Vec<_>>(),
            ["b", "f", "p"]
        );

        let fact = parse_kb("(a)").unwrap();
        assert_eq!(fact.conditionals(), [Conditional::fact(Formula::var("a"))]);

        let or = parse_kb("(a || b | c)").unwrap();
        assert_eq!(
            or.conditionals(),
            [Conditional::new(Formula::var("a").or(Formula::var("b")), Formula::var("c"))]
        );
        let nested = parse_kb("((a | b))");
        assert!(matches!(nested, Err(Error::Parse { .. })));
    }

    #[test]
    fn declared_order() {
        let kb = parse_kb("% penguins\natoms: p, b f\n(b | p)\n(!f | p)\n(f | b)\n").unwrap();
        assert_eq!(kb, fixtures::penguin());
        assert_eq!(parse_kb(&print_kb(&kb)).unwrap(), kb);
        assert!(parse_kb("atoms: a\n(b)").is_err());
        assert!(parse_kb("(a)\natoms: a").is_err());
        assert!(parse_kb("atoms: a a").is_err());
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_kb("(a | b | c)"),
            Err(Error::AmbiguousBar { line: 1, column: 8 })
        );
        match parse_kb("(a)\n(a && | b)") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("{other:?}"),
        }
        assert!(parse_kb("a | b").is_err());
        assert!(parse_kb("(a | b").is_err());
        assert!(parse_kb("(a) (b)").is_err());
        assert!(parse_kb("(A)").is_err());
        assert!(parse_kb("(a)\n(a)").is_err());
        assert!(parse_kb("(a # b)").is_err());
    }
}
