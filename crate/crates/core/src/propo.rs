//! Propositional atoms, formulas, possible worlds and the three-way status
//! of a conditional in a world.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest signature for which [`worlds`] will enumerate interpretations.
pub const MAX_ATOMS: usize = 24;

/// A propositional atom. Names match `[a-z][a-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(String);

impl Atom {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_atom_name(&name) {
            Ok(Atom(name))
        } else {
            Err(Error::InvalidAtom(name))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_atom_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| matches!(c, 'a'..='z' | '0'..='9' | '_'))
}

/// Formulas of the propositional language. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Bottom,
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Atom reference; panics on an invalid name, so only use with literals.
    pub fn var(name: &str) -> Formula {
        Formula::Atom(Atom::new(name).expect("valid atom name"))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, rhs: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(rhs))
    }

    pub fn implies(self, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn iff(self, rhs: Formula) -> Formula {
        Formula::Iff(Box::new(self), Box::new(rhs))
    }

    /// Atoms occurring in the formula, in order of first occurrence.
    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a Atom>) {
        match self {
            Formula::Top | Formula::Bottom => {}
            Formula::Atom(a) => {
                if !out.contains(&a) {
                    out.push(a)
                }
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Binding strength used by the printer; higher binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(_) => 5,
            Formula::Top | Formula::Bottom | Formula::Atom(_) => 6,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, parent: u8, tight: bool) -> fmt::Result {
        let p = self.precedence();
        if p < parent || (p == parent && tight) {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

// `&&`, `||` and `<->` associate to the left, `->` to the right.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        let (l, r, op, right_assoc) = match self {
            Formula::Top => return f.write_str("T"),
            Formula::Bottom => return f.write_str("F"),
            Formula::Atom(a) => return f.write_str(a.name()),
            Formula::Not(g) => {
                f.write_str("!")?;
                return g.fmt_child(f, p, false);
            }
            Formula::And(l, r) => (l, r, "&&", false),
            Formula::Or(l, r) => (l, r, "||", false),
            Formula::Implies(l, r) => (l, r, "->", true),
            Formula::Iff(l, r) => (l, r, "<->", false),
        };
        l.fmt_child(f, p, right_assoc)?;
        write!(f, " {op} ")?;
        r.fmt_child(f, p, !right_assoc)
    }
}

/// An ordered set of atoms. The order fixes world enumeration and world
/// names; [`Signature::sorted`] gives the lexicographic default.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    atoms: Vec<Atom>,
}

impl Signature {
    pub fn sorted<I: IntoIterator<Item = Atom>>(atoms: I) -> Self {
        let mut atoms: Vec<Atom> = atoms.into_iter().collect();
        atoms.sort();
        atoms.dedup();
        Signature { atoms }
    }

    /// Keeps the given order; duplicates are an error.
    pub fn ordered<I: IntoIterator<Item = Atom>>(atoms: I) -> Result<Self> {
        let mut seen = Vec::new();
        for a in atoms {
            if seen.contains(&a) {
                return Err(Error::DuplicateAtom(a.0));
            }
            seen.push(a);
        }
        Ok(Signature { atoms: seen })
    }

    /// Convenience constructor from names in the given order.
    pub fn from_names(names: &[&str]) -> Result<Self> {
        Self::ordered(names.iter().map(|n| Atom::new(*n)).collect::<Result<Vec<_>>>()?)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn index_of(&self, atom: &Atom) -> Option<usize> {
        self.atoms.iter().position(|a| a == atom)
    }

    pub fn is_sorted(&self) -> bool {
        self.atoms.windows(2).all(|w| w[0] < w[1])
    }

    /// Number of worlds, or an error past [`MAX_ATOMS`].
    pub fn world_count(&self) -> Result<usize> {
        if self.atoms.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms {
                count: self.atoms.len(),
                limit: MAX_ATOMS,
            });
        }
        Ok(1usize << self.atoms.len())
    }

    /// Checks that every atom of `f` belongs to the signature.
    pub fn check(&self, f: &Formula) -> Result<()> {
        match f.atoms().into_iter().find(|a| self.index_of(a).is_none()) {
            Some(a) => Err(Error::UnknownAtom(a.name().to_string())),
            None => Ok(()),
        }
    }
}

/// A total truth assignment over a signature.
///
/// Worlds are identified by their position in enumeration order: index 0
/// makes every atom true, and the first atom of the signature is the most
/// significant, so `{p,b,f}` (in that order) yields `pbf, pb-f, p-bf, ...,
/// -p-b-f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct World {
    signature: Arc<Signature>,
    index: usize,
}

impl World {
    /// Builds the world in which exactly the listed atoms are true.
    pub fn from_true_atoms(signature: Arc<Signature>, true_atoms: &[&str]) -> Result<Self> {
        let n = signature.len();
        signature.world_count()?;
        let mut index = (1usize << n) - 1;
        for name in true_atoms {
            let atom = Atom::new(*name)?;
            let i = signature
                .index_of(&atom)
                .ok_or_else(|| Error::UnknownAtom(name.to_string()))?;
            index &= !(1 << (n - 1 - i));
        }
        Ok(World { signature, index })
    }

    /// Parses a world name such as `pb-f` against the signature order.
    pub fn from_name(signature: Arc<Signature>, name: &str) -> Result<Self> {
        let mut rest = name;
        let mut index = 0usize;
        let n = signature.len();
        signature.world_count()?;
        for (i, atom) in signature.atoms().iter().enumerate() {
            let negated = rest.starts_with('-');
            let tail = if negated { &rest[1..] } else { rest };
            rest = tail
                .strip_prefix(atom.name())
                .ok_or_else(|| Error::parse(1, name.len() - rest.len() + 1, format!("expected literal for `{atom}` in world `{name}`")))?;
            if negated {
                index |= 1 << (n - 1 - i);
            }
        }
        if !rest.is_empty() {
            return Err(Error::parse(1, name.len() - rest.len() + 1, format!("trailing input in world `{name}`")));
        }
        Ok(World { signature, index })
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.signature
    }

    /// Position in the enumeration order of [`worlds`].
    pub fn index(&self) -> usize {
        self.index
    }

    /// Truth value of the `i`-th atom of the signature.
    pub fn value(&self, i: usize) -> bool {
        let n = self.signature.len();
        (self.index >> (n - 1 - i)) & 1 == 0
    }

    pub fn value_of(&self, atom: &Atom) -> Result<bool> {
        self.signature
            .index_of(atom)
            .map(|i| self.value(i))
            .ok_or_else(|| Error::UnknownAtom(atom.name().to_string()))
    }

    /// Literal string in signature order, `-` marking a false atom.
    pub fn name(&self) -> String {
        let mut s = String::new();
        for (i, a) in self.signature.atoms().iter().enumerate() {
            if !self.value(i) {
                s.push('-');
            }
            s.push_str(a.name());
        }
        s
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// All `2^n` worlds of the signature in enumeration order.
pub fn worlds(signature: &Arc<Signature>) -> Result<Vec<World>> {
    let count = signature.world_count()?;
    Ok((0..count)
        .map(|index| World {
            signature: Arc::clone(signature),
            index,
        })
        .collect())
}

/// Truth-functional evaluation of `f` in `w`.
pub fn eval(w: &World, f: &Formula) -> Result<bool> {
    Ok(match f {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(a) => w.value_of(a)?,
        Formula::Not(g) => !eval(w, g)?,
        Formula::And(l, r) => {
            let (l, r) = (eval(w, l)?, eval(w, r)?);
            l && r
        }
        Formula::Or(l, r) => {
            let (l, r) = (eval(w, l)?, eval(w, r)?);
            l || r
        }
        Formula::Implies(l, r) => {
            let (l, r) = (eval(w, l)?, eval(w, r)?);
            !l || r
        }
        Formula::Iff(l, r) => eval(w, l)? == eval(w, r)?,
    })
}

/// A defeasible rule `(claim | premise)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Conditional {
    pub claim: Formula,
    pub premise: Formula,
}

impl Conditional {
    pub fn new(claim: Formula, premise: Formula) -> Self {
        Conditional { claim, premise }
    }

    /// `(claim)`, i.e. premise `T`.
    pub fn fact(claim: Formula) -> Self {
        Conditional {
            claim,
            premise: Formula::Top,
        }
    }
}

impl fmt::Display for Conditional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.premise == Formula::Top {
            write!(f, "({})", self.claim)
        } else {
            write!(f, "({} | {})", self.claim, self.premise)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Verifies,
    Falsifies,
    Neutral,
}

impl Status {
    /// A world satisfies a conditional iff it does not falsify it.
    pub fn satisfies(self) -> bool {
        self != Status::Falsifies
    }
}

pub fn conditional_status(w: &World, d: &Conditional) -> Result<Status> {
    let premise = eval(w, &d.premise)?;
    let claim = eval(w, &d.claim)?;
    Ok(match (premise, claim) {
        (false, _) => Status::Neutral,
        (true, true) => Status::Verifies,
        (true, false) => Status::Falsifies,
    })
}
