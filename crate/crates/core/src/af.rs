//! Abstract argumentation frameworks and classical labelings.
//!
//! Arguments are opaque string identifiers kept in lexicographic order;
//! internally every argument is addressed by its position in that order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArgumentationFramework {
    names: Vec<String>,
    attacks: BTreeSet<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
}

impl ArgumentationFramework {
    /// Builds a framework from argument names and named attack pairs.
    /// Repeated attacks collapse; repeated arguments are rejected.
    pub fn new<A, S, T>(arguments: A, attacks: T) -> Result<Self>
    where
        A: IntoIterator<Item = S>,
        S: Into<String>,
        T: IntoIterator<Item = (S, S)>,
    {
        let mut names: Vec<String> = arguments.into_iter().map(Into::into).collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArgument(w[0].clone()));
        }
        let lookup = |n: &str| {
            names
                .binary_search_by(|x| x.as_str().cmp(n))
                .map_err(|_| Error::UnknownArgument(n.to_string()))
        };
        let mut pairs = BTreeSet::new();
        for (a, b) in attacks {
            let (a, b): (String, String) = (a.into(), b.into());
            pairs.insert((lookup(&a)?, lookup(&b)?));
        }
        Ok(Self::from_parts(names, pairs))
    }

    pub fn empty() -> Self {
        Self::from_parts(Vec::new(), BTreeSet::new())
    }

    /// `names` must be sorted and unique, attack indices in range.
    pub(crate) fn from_parts(names: Vec<String>, attacks: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        let n = names.len();
        let mut attackers = vec![Vec::new(); n];
        let mut targets = vec![Vec::new(); n];
        for &(a, b) in &attacks {
            attackers[b].push(a);
            targets[a].push(b);
        }
        for v in attackers.iter_mut() {
            v.sort_unstable();
        }
        ArgumentationFramework {
            names,
            attacks,
            attackers,
            targets,
        }
    }

    /// Same arguments, different attack relation.
    pub fn with_attacks(&self, attacks: BTreeSet<(usize, usize)>) -> Self {
        Self::from_parts(self.names.clone(), attacks)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn arguments(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|x| x.as_str().cmp(name)).ok()
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownArgument(name.to_string()))
    }

    pub fn attack_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.attacks
    }

    /// Attacks as name pairs, ordered by (attacker, target).
    pub fn attacks(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.attacks
            .iter()
            .map(|&(a, b)| (self.names[a].as_str(), self.names[b].as_str()))
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn attacks_between(&self, a: usize, b: usize) -> bool {
        self.attacks.contains(&(a, b))
    }

    pub fn attackers_of(&self, i: usize) -> &[usize] {
        &self.attackers[i]
    }

    pub fn targets_of(&self, i: usize) -> &[usize] {
        &self.targets[i]
    }

    pub fn is_self_attacking(&self, i: usize) -> bool {
        self.attacks.contains(&(i, i))
    }

    /// Att(a): every argument attacking `a`.
    pub fn attackers(&self, a: &str) -> Result<Vec<&str>> {
        let i = self.require(a)?;
        Ok(self.attackers[i].iter().map(|&j| self.name(j)).collect())
    }

    /// Def(a): every argument attacking some attacker of `a`.
    pub fn defenders(&self, a: &str) -> Result<Vec<&str>> {
        let i = self.require(a)?;
        Ok(self
            .defender_indices(i)
            .into_iter()
            .map(|j| self.name(j))
            .collect())
    }

    pub(crate) fn defender_indices(&self, i: usize) -> BTreeSet<usize> {
        self.attackers[i]
            .iter()
            .flat_map(|&c| self.attackers[c].iter().copied())
            .collect()
    }

    /// Induced subframework on the named arguments.
    pub fn restrict<I, S>(&self, keep: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut idx = keep
            .into_iter()
            .map(|n| self.require(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        Ok(self.restrict_indices(&idx))
    }

    /// Induced subframework on `keep` (ascending). Argument `i` of the result
    /// is argument `keep[i]` of `self`.
    pub fn restrict_indices(&self, keep: &[usize]) -> Self {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut local = vec![usize::MAX; self.len()];
        for (li, &gi) in keep.iter().enumerate() {
            local[gi] = li;
        }
        let attacks = self
            .attacks
            .iter()
            .filter(|&&(a, b)| local[a] != usize::MAX && local[b] != usize::MAX)
            .map(|&(a, b)| (local[a], local[b]))
            .collect();
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        Self::from_parts(names, attacks)
    }
}

/// The three classical labels. Ordered `in < out < undec`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    In,
    Out,
    Undec,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::In => "in",
            Label::Out => "out",
            Label::Undec => "undec",
        })
    }
}

/// Total labeling, indexed like the framework's arguments.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling {
    labels: Vec<Label>,
}

impl Labeling {
    pub fn new(labels: Vec<Label>) -> Self {
        Labeling { labels }
    }

    pub fn all(n: usize, label: Label) -> Self {
        Labeling {
            labels: vec![label; n],
        }
    }

    /// Labeling with the named `in` and `out` arguments, all others undec.
    pub fn from_sets(af: &ArgumentationFramework, ins: &[&str], outs: &[&str]) -> Result<Self> {
        let mut labels = vec![Label::Undec; af.len()];
        for n in ins {
            labels[af.require(n)?] = Label::In;
        }
        for n in outs {
            labels[af.require(n)?] = Label::Out;
        }
        Ok(Labeling { labels })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, i: usize) -> Label {
        self.labels[i]
    }

    pub fn with(&self, label: Label) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&i| self.labels[i] == label)
            .collect()
    }

    pub fn in_set(&self) -> Vec<usize> {
        self.with(Label::In)
    }

    pub fn out_set(&self) -> Vec<usize> {
        self.with(Label::Out)
    }

    pub fn undec_set(&self) -> Vec<usize> {
        self.with(Label::Undec)
    }

    fn mask(&self, label: Label) -> Vec<bool> {
        self.labels.iter().map(|&l| l == label).collect()
    }

    fn check(&self, af: &ArgumentationFramework) -> Result<()> {
        if self.labels.len() != af.len() {
            return Err(Error::IncompatibleLabeling {
                expected: af.len(),
                found: self.labels.len(),
            });
        }
        Ok(())
    }

    /// `name:label` pairs separated by spaces.
    pub fn render(&self, af: &ArgumentationFramework) -> String {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{}:{}", af.name(i), l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    Complete,
    Grounded,
    Preferred,
    Stable,
    SemiStable,
}

impl Semantics {
    pub const ALL: [Semantics; 5] = [
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
        Semantics::Stable,
        Semantics::SemiStable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Complete => "complete",
            Semantics::Grounded => "grounded",
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
            Semantics::SemiStable => "semi_stable",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "complete" | "c" | "co" => Semantics::Complete,
            "grounded" | "gr" => Semantics::Grounded,
            "preferred" | "p" | "pr" => Semantics::Preferred,
            "stable" | "s" | "st" => Semantics::Stable,
            "semi_stable" | "semi-stable" | "semistable" | "ss" | "sst" => Semantics::SemiStable,
            other => return Err(format!("unknown semantics `{other}`")),
        })
    }
}

fn has_in_attacker(af: &ArgumentationFramework, l: &[Label], i: usize) -> bool {
    af.attackers_of(i).iter().any(|&b| l[b] == Label::In)
}

pub fn is_admissible(af: &ArgumentationFramework, lab: &Labeling) -> Result<bool> {
    lab.check(af)?;
    let l = lab.labels();
    Ok((0..af.len()).all(|i| match l[i] {
        Label::Out => has_in_attacker(af, l, i),
        Label::In => af.attackers_of(i).iter().all(|&b| l[b] == Label::Out),
        Label::Undec => true,
    }))
}

pub fn is_complete(af: &ArgumentationFramework, lab: &Labeling) -> Result<bool> {
    if !is_admissible(af, lab)? {
        return Ok(false);
    }
    let l = lab.labels();
    Ok((0..af.len()).filter(|&i| l[i] == Label::Undec).all(|i| {
        !has_in_attacker(af, l, i) && af.attackers_of(i).iter().any(|&b| l[b] != Label::Out)
    }))
}

/// The grounded labeling by fixpoint iteration: label `in` every argument
/// whose attackers are all `out`, then `out` every argument with an `in`
/// attacker, until nothing changes. What remains is `undec`.
pub fn grounded(af: &ArgumentationFramework) -> Labeling {
    let n = af.len();
    let mut labels: Vec<Option<Label>> = vec![None; n];
    loop {
        let mut changed = false;
        for i in 0..n {
            if labels[i].is_none()
                && af
                    .attackers_of(i)
                    .iter()
                    .all(|&b| labels[b] == Some(Label::Out))
            {
                labels[i] = Some(Label::In);
                changed = true;
            }
        }
        for i in 0..n {
            if labels[i].is_none()
                && af
                    .attackers_of(i)
                    .iter()
                    .any(|&b| labels[b] == Some(Label::In))
            {
                labels[i] = Some(Label::Out);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Labeling::new(labels.into_iter().map(|l| l.unwrap_or(Label::Undec)).collect())
}

/// Every complete labeling, in lexicographic order.
///
/// Backtracking over the arguments the grounded labeling leaves undecided
/// (every complete labeling extends the grounded one), pruning any partial
/// assignment that already violates a completeness condition locally.
pub fn complete_labelings(af: &ArgumentationFramework) -> Vec<Labeling> {
    let g = grounded(af);
    let mut state: Vec<Option<Label>> = g
        .labels()
        .iter()
        .map(|&l| (l != Label::Undec).then_some(l))
        .collect();
    let open: Vec<usize> = g.undec_set();
    let mut out = Vec::new();
    search(af, &open, 0, &mut state, &mut out);
    out.sort();
    debug_assert!(out.iter().all(|l| is_complete(af, l).unwrap_or(false)));
    out
}

fn search(
    af: &ArgumentationFramework,
    open: &[usize],
    depth: usize,
    state: &mut Vec<Option<Label>>,
    out: &mut Vec<Labeling>,
) {
    if depth == open.len() {
        let labels = state.iter().map(|l| l.expect("assigned")).collect();
        out.push(Labeling::new(labels));
        return;
    }
    let i = open[depth];
    for label in [Label::In, Label::Out, Label::Undec] {
        state[i] = Some(label);
        if locally_consistent(af, state, i)
            && af.targets_of(i).iter().all(|&j| locally_consistent(af, state, j))
        {
            search(af, open, depth + 1, state, out);
        }
    }
    state[i] = None;
}

/// Checks the completeness conditions of argument `j` against a partial
/// assignment, failing only when no extension of the assignment can repair
/// them.
fn locally_consistent(af: &ArgumentationFramework, state: &[Option<Label>], j: usize) -> bool {
    let att = af.attackers_of(j);
    let any = |l: Label| att.iter().any(|&b| state[b] == Some(l));
    let all_assigned = att.iter().all(|&b| state[b].is_some());
    match state[j] {
        None => true,
        Some(Label::In) => !any(Label::In) && !any(Label::Undec),
        Some(Label::Out) => {
            !att.is_empty() && (any(Label::In) || !all_assigned)
        }
        Some(Label::Undec) => {
            !att.is_empty()
                && !any(Label::In)
                && (!all_assigned || att.iter().any(|&b| state[b] != Some(Label::Out)))
        }
    }
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

/// Keeps the labelings whose `label`-set is ⊆-extremal (maximal when
/// `maximal`, else minimal).
fn extremal(labs: Vec<Labeling>, label: Label, maximal: bool) -> Vec<Labeling> {
    let masks: Vec<Vec<bool>> = labs.iter().map(|l| l.mask(label)).collect();
    labs.into_iter()
        .enumerate()
        .filter(|&(i, _)| {
            !masks.iter().enumerate().any(|(j, m)| {
                j != i
                    && m != &masks[i]
                    && if maximal {
                        subset(&masks[i], m)
                    } else {
                        subset(m, &masks[i])
                    }
            })
        })
        .map(|(_, l)| l)
        .collect()
}

/// All σ-labelings, deduplicated and in lexicographic order
/// (`in < out < undec`, arguments in name order).
pub fn labelings(af: &ArgumentationFramework, sem: Semantics) -> Vec<Labeling> {
    match sem {
        Semantics::Grounded => vec![grounded(af)],
        Semantics::Complete => complete_labelings(af),
        Semantics::Preferred => extremal(complete_labelings(af), Label::In, true),
        Semantics::SemiStable => extremal(complete_labelings(af), Label::Undec, false),
        Semantics::Stable => complete_labelings(af)
            .into_iter()
            .filter(|l| l.labels().iter().all(|&x| x != Label::Undec))
            .collect(),
    }
}

/// Whether some σ-labeling labels every argument in `targets` as `in`.
pub fn credulously_accepts(af: &ArgumentationFramework, sem: Semantics, targets: &[usize]) -> bool {
    match sem {
        Semantics::Grounded => {
            let g = grounded(af);
            targets.iter().all(|&i| g.get(i) == Label::In)
        }
        _ => labelings(af, sem)
            .iter()
            .any(|l| targets.iter().all(|&i| l.get(i) == Label::In)),
    }
}
