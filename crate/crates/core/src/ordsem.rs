//! Ordinal semantics: stratified labelings viewed as rankings of arguments,
//! and instance-level checkers for ranking postulates.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::af::{ArgumentationFramework, Semantics};
use crate::error::{Error, Result};
use crate::par;
use crate::stratified::{stratified_labelings_with_budget, Rank, StratifiedLabeling, DEFAULT_BUDGET};

/// Arguments are ranked by acceptability: lower is at least as acceptable.
pub type OrdinalRanking = StratifiedLabeling;

/// Components beyond this make the irrelevance check's union sweep too large.
pub const MAX_COMPONENTS: usize = 12;

/// Bijection between the argument sets of two frameworks, by name.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IsoMap {
    pub mapping: BTreeMap<String, String>,
}

impl IsoMap {
    pub fn identity(af: &ArgumentationFramework) -> Self {
        IsoMap {
            mapping: af.arguments().iter().map(|a| (a.clone(), a.clone())).collect(),
        }
    }

    pub fn get(&self, a: &str) -> Option<&str> {
        self.mapping.get(a).map(String::as_str)
    }
}

impl<S: Into<String>> FromIterator<(S, S)> for IsoMap {
    fn from_iter<I: IntoIterator<Item = (S, S)>>(iter: I) -> Self {
        IsoMap {
            mapping: iter.into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
        }
    }
}

/// True iff `m` is a bijection from `af1` onto `af2` preserving attacks in
/// both directions.
pub fn is_isomorphism(af1: &ArgumentationFramework, af2: &ArgumentationFramework, m: &IsoMap) -> bool {
    if af1.len() != af2.len() || m.mapping.len() != af1.len() {
        return false;
    }
    let mut image = vec![usize::MAX; af1.len()];
    let mut hit = vec![false; af2.len()];
    for (i, a) in af1.arguments().iter().enumerate() {
        let Some(j) = m.get(a).and_then(|b| af2.index_of(b)) else {
            return false;
        };
        if hit[j] {
            return false;
        }
        hit[j] = true;
        image[i] = j;
    }
    af1.attack_count() == af2.attack_count()
        && af1
            .attack_pairs()
            .iter()
            .all(|&(a, b)| af2.attacks_between(image[a], image[b]))
}

/// Maximal weakly connected subframeworks, ordered by their least argument.
pub fn wcom(af: &ArgumentationFramework) -> Vec<ArgumentationFramework> {
    component_indices(af)
        .iter()
        .map(|c| af.restrict_indices(c))
        .collect()
}

fn component_indices(af: &ArgumentationFramework) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::<usize>::new(af.len());
    for &(a, b) in af.attack_pairs() {
        uf.union(a, b);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..af.len() {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    /// Abstraction: isomorphic frameworks get correspondingly mapped rankings.
    Ab,
    /// Irrelevance: unions of components are ranked as in the whole framework.
    Ir,
    /// Void precedence: unattacked strictly before attacked.
    Vp,
    /// Weak void precedence: unattacked at least as good as anything.
    Wvp,
    /// Defense precedence.
    Dp,
    /// Quality precedence.
    Qp,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Ab,
        Property::Ir,
        Property::Vp,
        Property::Wvp,
        Property::Dp,
        Property::Qp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::Ab => "ab",
            Property::Ir => "ir",
            Property::Vp => "vp",
            Property::Wvp => "wvp",
            Property::Dp => "dp",
            Property::Qp => "qp",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim_end_matches('*').to_ascii_lowercase();
        Property::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    /// Arguments `(a, b)` for which the postulate demands `a` before `b`.
    Pair(String, String),
    /// A ranking with no counterpart on the other side of the comparison.
    Ranking {
        context: String,
        ranks: Vec<(String, Rank)>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair(a, b) => write!(f, "({a}, {b})"),
            Witness::Ranking { context, ranks } => {
                write!(f, "{context}:")?;
                for (a, r) in ranks {
                    write!(f, " {a}:{r}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl PropertyReport {
    fn from_witnesses(property: Property, witnesses: Vec<Witness>) -> Self {
        PropertyReport {
            property,
            holds: witnesses.is_empty(),
            witnesses,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Random isomorphic copies tried for `Ab`.
    pub trials: usize,
    pub seed: u64,
    /// Budget passed to stratified-labeling enumeration.
    pub budget: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            trials: 50,
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// O^σ_strat(af): the σ-stratified labelings.
pub fn ordinal_semantics(
    af: &ArgumentationFramework,
    sem: Semantics,
    budget: usize,
) -> Result<Vec<OrdinalRanking>> {
    stratified_labelings_with_budget(af, sem, budget)
}

/// Checks `property` for O^σ_strat on this one framework.
pub fn check_property(
    af: &ArgumentationFramework,
    sem: Semantics,
    property: Property,
    opts: &CheckOptions,
) -> Result<PropertyReport> {
    let witnesses = match property {
        Property::Ab => abstraction(af, sem, opts)?,
        Property::Ir => irrelevance(af, sem, opts.budget)?,
        _ => {
            let rankings = ordinal_semantics(af, sem, opts.budget)?;
            pairwise(af, &rankings, property)
        }
    };
    Ok(PropertyReport::from_witnesses(property, witnesses))
}

fn named(af: &ArgumentationFramework, ranks: &[Rank]) -> Vec<(String, Rank)> {
    ranks
        .iter()
        .enumerate()
        .map(|(i, &r)| (af.name(i).to_string(), r))
        .collect()
}

/// Random isomorphic copy of `af` over the same names: argument `i` is
/// mapped to argument `perm[i]`.
pub fn permuted_copy(af: &ArgumentationFramework, perm: &[usize]) -> (ArgumentationFramework, IsoMap) {
    let attacks = af
        .attack_pairs()
        .iter()
        .map(|&(a, b)| (perm[a], perm[b]))
        .collect();
    let map = (0..af.len())
        .map(|i| (af.name(i).to_string(), af.name(perm[i]).to_string()))
        .collect();
    (af.with_attacks(attacks), map)
}

fn abstraction(af: &ArgumentationFramework, sem: Semantics, opts: &CheckOptions) -> Result<Vec<Witness>> {
    let base = ordinal_semantics(af, sem, opts.budget)?;
    let per_trial = par::try_map_range(opts.trials, |t| -> Result<Vec<Witness>> {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(t as u64);
        let mut perm: Vec<usize> = (0..af.len()).collect();
        perm.shuffle(&mut rng);
        let (image, iso) = permuted_copy(af, &perm);
        debug_assert!(is_isomorphism(af, &image, &iso));

        let expected: BTreeSet<Vec<Rank>> = base
            .iter()
            .map(|s| {
                let mut moved = vec![Rank::Infinite; af.len()];
                for (i, &r) in s.ranks().iter().enumerate() {
                    moved[perm[i]] = r;
                }
                moved
            })
            .collect();
        let actual: BTreeSet<Vec<Rank>> = ordinal_semantics(&image, sem, opts.budget)?
            .into_iter()
            .map(|s| s.ranks().to_vec())
            .collect();
        let context = |side: &str| format!("trial {t} ({side})");
        Ok(expected
            .difference(&actual)
            .map(|r| Witness::Ranking {
                context: context("missing from image"),
                ranks: named(&image, r),
            })
            .chain(actual.difference(&expected).map(|r| Witness::Ranking {
                context: context("unexpected in image"),
                ranks: named(&image, r),
            }))
            .collect())
    })?;
    Ok(per_trial.into_iter().flatten().collect())
}

/// Replaces every rank by its position among the distinct ranks present;
/// two rankings agree on all `=`/`≤` comparisons iff these coincide.
fn order_type(ranks: &[Rank]) -> Vec<usize> {
    let distinct: BTreeSet<Rank> = ranks.iter().copied().collect();
    let pos: BTreeMap<Rank, usize> = distinct.into_iter().enumerate().map(|(i, r)| (r, i)).collect();
    ranks.iter().map(|r| pos[r]).collect()
}

fn irrelevance(af: &ArgumentationFramework, sem: Semantics, budget: usize) -> Result<Vec<Witness>> {
    let whole = ordinal_semantics(af, sem, budget)?;
    if whole.is_empty() {
        return Ok(Vec::new());
    }
    let comps = component_indices(af);
    if comps.len() > MAX_COMPONENTS {
        return Err(Error::Truncated {
            budget: MAX_COMPONENTS,
        });
    }
    let unions: Vec<Vec<usize>> = (1u32..(1 << comps.len()))
        .map(|mask| {
            let mut members: Vec<usize> = comps
                .iter()
                .enumerate()
                .filter(|(c, _)| mask & (1 << c) != 0)
                .flat_map(|(_, m)| m.iter().copied())
                .collect();
            members.sort_unstable();
            members
        })
        .collect();
    let per_union = par::try_map(&unions, |members| -> Result<Vec<Witness>> {
        let sub = af.restrict_indices(members);
        let restricted: HashSet<Vec<usize>> = whole
            .iter()
            .map(|s| order_type(&members.iter().map(|&a| s.get(a)).collect::<Vec<_>>()))
            .collect();
        let context = format!("union {{{}}}", sub.arguments().join(","));
        Ok(ordinal_semantics(&sub, sem, budget)?
            .into_iter()
            .filter(|local| !restricted.contains(&order_type(local.ranks())))
            .map(|local| Witness::Ranking {
                context: context.clone(),
                ranks: named(&sub, local.ranks()),
            })
            .collect())
    })?;
    Ok(per_union.into_iter().flatten().collect())
}

fn pairwise(af: &ArgumentationFramework, rankings: &[OrdinalRanking], property: Property) -> Vec<Witness> {
    let n = af.len();
    let unattacked: Vec<bool> = (0..n).map(|i| af.attackers_of(i).is_empty()).collect();
    let defended: Vec<bool> = (0..n).map(|i| !af.defender_indices(i).is_empty()).collect();
    let mut bad: BTreeSet<(usize, usize)> = BTreeSet::new();
    for s in rankings {
        let r = |i: usize| s.get(i);
        for a in 0..n {
            for b in 0..n {
                let violated = match property {
                    Property::Vp => unattacked[a] && !unattacked[b] && r(a) >= r(b),
                    Property::Wvp => unattacked[a] && r(a) > r(b),
                    Property::Dp => {
                        af.attackers_of(a).len() == af.attackers_of(b).len()
                            && !defended[a]
                            && defended[b]
                            && r(a) >= r(b)
                    }
                    Property::Qp => {
                        af.attackers_of(b).iter().any(|&c| {
                            af.attackers_of(a).iter().all(|&d| r(c) < r(d))
                        }) && r(a) >= r(b)
                    }
                    Property::Ab | Property::Ir => unreachable!("not a pairwise postulate"),
                };
                if violated {
                    bad.insert((a, b));
                }
            }
        }
    }
    bad.into_iter()
        .map(|(a, b)| Witness::Pair(af.name(a).to_string(), af.name(b).to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn check(af: &ArgumentationFramework, sem: Semantics, p: Property) -> PropertyReport {
        check_property(af, sem, p, &CheckOptions { trials: 10, ..Default::default() }).unwrap()
    }

    #[test]
    fn isomorphism_examples() {
        let af = fixtures::transitive_chain();
        assert!(is_isomorphism(&af, &af, &IsoMap::identity(&af)));

        let renamed = ArgumentationFramework::new(["x", "y", "z"], [("x", "y"), ("x", "z"), ("y", "z")]).unwrap();
        let m: IsoMap = [("A1", "x"), ("A2", "y"), ("A3", "z")].into_iter().collect();
        assert!(is_isomorphism(&af, &renamed, &m));
        let swapped: IsoMap = [("A1", "y"), ("A2", "x"), ("A3", "z")].into_iter().collect();
        assert!(!is_isomorphism(&af, &renamed, &swapped));

        let two = ArgumentationFramework::new(["x", "y", "z"], [("x", "y"), ("y", "z")]).unwrap();
        assert!(!is_isomorphism(&af, &two, &m));
        let not_bijective: IsoMap = [("A1", "x"), ("A2", "x"), ("A3", "z")].into_iter().collect();
        assert!(!is_isomorphism(&af, &renamed, &not_bijective));
    }

    #[test]
    fn components() {
        assert_eq!(wcom(&fixtures::linked_cycles()).len(), 1);
        assert!(wcom(&ArgumentationFramework::empty()).is_empty());

        let chain = fixtures::transitive_chain();
        let tri = fixtures::triangle();
        let mut args: Vec<String> = chain.arguments().iter().map(|a| format!("c{a}")).collect();
        args.extend(tri.arguments().iter().map(|a| format!("t{a}")));
        let attacks = chain
            .attacks()
            .map(|(a, b)| (format!("c{a}"), format!("c{b}")))
            .chain(tri.attacks().map(|(a, b)| (format!("t{a}"), format!("t{b}"))))
            .collect::<Vec<_>>();
        let union = ArgumentationFramework::new(args, attacks).unwrap();
        let comps = wcom(&union);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].arguments(), ["cA1", "cA2", "cA3"]);
    }

    #[test]
    fn void_precedence_fails() {
        let af = fixtures::reinstated();
        for sem in Semantics::ALL {
            let r = check(&af, sem, Property::Vp);
            assert!(!r.holds);
            assert!(r.witnesses.contains(&Witness::Pair("A".into(), "B".into())));
        }
    }

    #[test]
    fn quality_precedence_fails() {
        let r = check(&fixtures::defended_cycle(), Semantics::Grounded, Property::Qp);
        assert!(!r.holds);
        assert!(r.witnesses.contains(&Witness::Pair("A5".into(), "A2".into())));
    }

    #[test]
    fn structural_postulates_hold() {
        for af in [fixtures::linked_cycles(), fixtures::defended_cycle(), fixtures::triangle()] {
            for sem in Semantics::ALL {
                for p in [Property::Ab, Property::Ir, Property::Wvp] {
                    let r = check(&af, sem, p);
                    assert!(r.holds, "{p} {sem}: {:?}", r.witnesses);
                }
            }
        }
    }

    #[test]
    fn order_type_normalizes() {
        use Rank::{Finite as F, Infinite as I};
        assert_eq!(order_type(&[F(3), F(7), I, F(3)]), [0, 1, 2, 0]);
        assert_eq!(order_type(&[F(0), F(1), F(2), F(0)]), [0, 1, 2, 0]);
    }

    #[test]
    fn property_names() {
        assert_eq!("QP*".parse::<Property>().unwrap(), Property::Qp);
        assert!("ct".parse::<Property>().is_err());
    }
}
