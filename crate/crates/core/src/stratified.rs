//! σ-stratified labelings.
//!
//! A stratified labeling ranks every argument by how many rounds of
//! "accept the `in` set of a σ-labeling, then delete it" pass before the
//! argument is accepted. Arguments still present when the current σ-labeling
//! accepts nothing get rank ∞. Rank 0 means uncontroversially accepted.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;

use crate::af::{labelings, grounded, ArgumentationFramework, Labeling, Semantics};
use crate::error::{Error, Result};

/// Default cap on the number of stratified labelings kept while enumerating.
pub const DEFAULT_BUDGET: usize = 100_000;

/// A natural number or ∞; ∞ is greater than every finite rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    Finite(u32),
    Infinite,
}

impl Rank {
    pub const ZERO: Rank = Rank::Finite(0);

    /// `1 + self`, with `1 + ∞ = ∞`.
    pub fn succ(self) -> Rank {
        match self {
            Rank::Finite(k) => Rank::Finite(k + 1),
            Rank::Infinite => Rank::Infinite,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Rank::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Rank::Finite(k) => Some(k),
            Rank::Infinite => None,
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(k) => write!(f, "{k}"),
            Rank::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Rank {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" | "∞" => Ok(Rank::Infinite),
            _ => s.parse().map(Rank::Finite),
        }
    }
}

/// Total map from arguments (by index) to ranks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StratifiedLabeling {
    ranks: Vec<Rank>,
}

impl StratifiedLabeling {
    pub fn new(ranks: Vec<Rank>) -> Self {
        StratifiedLabeling { ranks }
    }

    /// Builds a labeling from `(name, rank)` pairs covering every argument.
    pub fn from_named(af: &ArgumentationFramework, ranks: &[(&str, Rank)]) -> Result<Self> {
        let mut out = vec![None; af.len()];
        for &(name, r) in ranks {
            out[af.require(name)?] = Some(r);
        }
        let found = out.iter().filter(|r| r.is_some()).count();
        if found != af.len() {
            return Err(Error::IncompatibleLabeling {
                expected: af.len(),
                found,
            });
        }
        Ok(StratifiedLabeling::new(out.into_iter().flatten().collect()))
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub fn get(&self, i: usize) -> Rank {
        self.ranks[i]
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// No argument has rank ∞.
    pub fn is_finite(&self) -> bool {
        self.ranks.iter().all(|r| r.is_finite())
    }

    /// Largest finite rank, if any argument has one.
    pub fn max_finite(&self) -> Option<u32> {
        self.ranks.iter().filter_map(|r| r.finite()).max()
    }

    /// `name:rank` pairs separated by spaces.
    pub fn render(&self, af: &ArgumentationFramework) -> String {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, r)| format!("{}:{}", af.name(i), r))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All σ-stratified labelings of `af` with the default budget.
pub fn stratified_labelings(
    af: &ArgumentationFramework,
    sem: Semantics,
) -> Result<Vec<StratifiedLabeling>> {
    stratified_labelings_with_budget(af, sem, DEFAULT_BUDGET)
}

/// All σ-stratified labelings, sorted by rank vector.
///
/// Fails with [`Error::Truncated`] once more than `budget` distinct rank
/// maps exist for `af` or any subframework reached by the recursion.
pub fn stratified_labelings_with_budget(
    af: &ArgumentationFramework,
    sem: Semantics,
    budget: usize,
) -> Result<Vec<StratifiedLabeling>> {
    let mut solver = Stratifier {
        af,
        sem,
        budget,
        memo: HashMap::new(),
    };
    let all: Vec<usize> = (0..af.len()).collect();
    let found = solver.solve(&all)?;
    Ok(found
        .iter()
        .map(|r| StratifiedLabeling::new(r.clone()))
        .collect())
}

type RankSet = Rc<Vec<Vec<Rank>>>;

struct Stratifier<'a> {
    af: &'a ArgumentationFramework,
    sem: Semantics,
    budget: usize,
    // Remaining argument set -> its stratified labelings (aligned with the set).
    memo: HashMap<Vec<usize>, RankSet>,
}

impl Stratifier<'_> {
    fn solve(&mut self, keep: &[usize]) -> Result<RankSet> {
        if keep.is_empty() {
            return Ok(Rc::new(vec![Vec::new()]));
        }
        if let Some(hit) = self.memo.get(keep) {
            return Ok(Rc::clone(hit));
        }
        let sub = self.af.restrict_indices(keep);
        let mut found: BTreeSet<Vec<Rank>> = BTreeSet::new();
        for lab in labelings(&sub, self.sem) {
            let accepted = lab.in_set();
            if accepted.is_empty() {
                found.insert(vec![Rank::Infinite; keep.len()]);
            } else {
                let rest_local: Vec<usize> = (0..keep.len())
                    .filter(|i| accepted.binary_search(i).is_err())
                    .collect();
                let rest: Vec<usize> = rest_local.iter().map(|&i| keep[i]).collect();
                for tail in self.solve(&rest)?.iter() {
                    let mut ranks = vec![Rank::ZERO; keep.len()];
                    for (pos, &li) in rest_local.iter().enumerate() {
                        ranks[li] = tail[pos].succ();
                    }
                    found.insert(ranks);
                }
            }
            if found.len() > self.budget {
                return Err(Error::Truncated {
                    budget: self.budget,
                });
            }
        }
        let found = Rc::new(found.into_iter().collect::<Vec<_>>());
        self.memo.insert(keep.to_vec(), Rc::clone(&found));
        Ok(found)
    }
}

/// The unique grounded-stratified labeling, by repeated grounded peeling.
pub fn grounded_stratified(af: &ArgumentationFramework) -> StratifiedLabeling {
    let mut ranks = vec![Rank::Infinite; af.len()];
    let mut keep: Vec<usize> = (0..af.len()).collect();
    let mut round = 0;
    while !keep.is_empty() {
        let sub = af.restrict_indices(&keep);
        let accepted = grounded(&sub).in_set();
        if accepted.is_empty() {
            break;
        }
        for &li in &accepted {
            ranks[keep[li]] = Rank::Finite(round);
        }
        keep = keep
            .iter()
            .enumerate()
            .filter(|(li, _)| accepted.binary_search(li).is_err())
            .map(|(_, &g)| g)
            .collect();
        round += 1;
    }
    StratifiedLabeling::new(ranks)
}

/// Nested-subset view of a stratified labeling.
///
/// `strata[i]` is `A_i = {a | S(a) ≥ i}` for `0 ≤ i ≤ k` (∞ counts as
/// greater than every `i`), `infinite` is `A_{-1} = S⁻¹(∞)`. `labelings[i]`
/// is a σ-labeling of the framework restricted to `A_i` whose `in` set is
/// `A_i \ A_{i+1}` (with `A_{k+1} = A_{-1}`), and `final_labeling` is a
/// σ-labeling of the restriction to `A_{-1}` accepting nothing. Argument
/// sets hold indices into the original framework; labelings are indexed
/// like the corresponding restriction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Characterization {
    pub strata: Vec<Vec<usize>>,
    pub infinite: Vec<usize>,
    pub labelings: Vec<Labeling>,
    pub final_labeling: Labeling,
}

impl Characterization {
    /// Index of the last finite stratum; -1 when every rank is ∞.
    pub fn k(&self) -> isize {
        self.strata.len() as isize - 1
    }

    /// Rebuilds the rank map: the largest `i` with `a ∈ A_i`, or ∞ on `A_{-1}`.
    pub fn reconstruct(&self, n: usize) -> StratifiedLabeling {
        let mut ranks = vec![Rank::Infinite; n];
        for (i, stratum) in self.strata.iter().enumerate() {
            for &a in stratum {
                ranks[a] = Rank::Finite(i as u32);
            }
        }
        for &a in &self.infinite {
            ranks[a] = Rank::Infinite;
        }
        StratifiedLabeling::new(ranks)
    }
}

/// Nested-subset characterization of `s`, with a witnessing σ-labeling for
/// every stratum. Fails if `s` is not a σ-stratified labeling of `af`.
pub fn characterize(
    af: &ArgumentationFramework,
    sem: Semantics,
    s: &StratifiedLabeling,
) -> Result<Characterization> {
    let not_stratified = |reason: String| Error::NotStratified {
        semantics: sem.to_string(),
        reason,
    };
    if s.len() != af.len() {
        return Err(Error::IncompatibleLabeling {
            expected: af.len(),
            found: s.len(),
        });
    }
    let used: BTreeSet<u32> = s.ranks().iter().filter_map(|r| r.finite()).collect();
    let k = used.iter().next_back().map_or(-1, |&m| m as i64);
    if used.len() as i64 != k + 1 {
        return Err(not_stratified("finite ranks are not contiguous from 0".into()));
    }

    let at_least = |i: u32| -> Vec<usize> {
        (0..af.len()).filter(|&a| s.get(a) >= Rank::Finite(i)).collect()
    };
    let infinite: Vec<usize> = (0..af.len()).filter(|&a| s.get(a) == Rank::Infinite).collect();
    let strata: Vec<Vec<usize>> = (0..=k).map(|i| at_least(i as u32)).collect();

    let mut witnesses = Vec::with_capacity(strata.len());
    for (i, stratum) in strata.iter().enumerate() {
        let sub = af.restrict_indices(stratum);
        // Local positions of the arguments ranked exactly i.
        let accepted: Vec<usize> = stratum
            .iter()
            .enumerate()
            .filter(|&(_, &a)| s.get(a) == Rank::Finite(i as u32))
            .map(|(li, _)| li)
            .collect();
        let witness = labelings(&sub, sem)
            .into_iter()
            .find(|l| l.in_set() == accepted)
            .ok_or_else(|| {
                not_stratified(format!("no {sem} labeling of stratum {i} accepts exactly its rank-{i} arguments"))
            })?;
        witnesses.push(witness);
    }
    let sub = af.restrict_indices(&infinite);
    let final_labeling = labelings(&sub, sem)
        .into_iter()
        .find(|l| l.in_set().is_empty())
        .ok_or_else(|| not_stratified(format!("no {sem} labeling of the ∞ stratum accepts nothing")))?;

    Ok(Characterization {
        strata,
        infinite,
        labelings: witnesses,
        final_labeling,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use Rank::{Finite as F, Infinite as Inf};

    fn ranks(af: &ArgumentationFramework, s: Semantics) -> Vec<Vec<Rank>> {
        stratified_labelings(af, s)
            .unwrap()
            .into_iter()
            .map(|l| l.ranks().to_vec())
            .collect()
    }

    #[test]
    fn rank_order_and_arithmetic() {
        assert!(Inf > F(u32::MAX));
        assert_eq!(Inf.succ(), Inf);
        assert_eq!(F(2).succ(), F(3));
        assert_eq!("inf".parse::<Rank>().unwrap(), Inf);
        assert_eq!(Inf.to_string(), "inf");
    }

    #[test]
    fn grounded_examples() {
        assert_eq!(ranks(&fixtures::linked_cycles(), Semantics::Grounded), [vec![Inf; 5]]);
        assert_eq!(
            grounded_stratified(&fixtures::transitive_chain()).ranks(),
            [F(0), F(1), F(2)]
        );
        assert_eq!(
            grounded_stratified(&fixtures::defended_cycle()).ranks(),
            [F(0), F(1), F(3), F(1), F(2)]
        );
        assert_eq!(
            grounded_stratified(&fixtures::self_attacking_chains()).ranks(),
            [F(2), F(1), Inf, Inf, F(1), F(0), F(1), F(0)]
        );
        let selfie = ArgumentationFramework::new(["a"], [("a", "a")]).unwrap();
        assert_eq!(ranks(&selfie, Semantics::Grounded), [vec![Inf]]);
    }

    #[test]
    fn stable_triangle_has_six() {
        // each peel removes one argument, so the ranks are a permutation of 0..3
        let got = ranks(&fixtures::triangle(), Semantics::Stable);
        let want: BTreeSet<Vec<Rank>> = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ]
        .iter()
        .map(|r| r.iter().map(|&x| F(x)).collect())
        .collect();
        assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), want);
    }

    #[test]
    fn stable_without_labeling_is_empty() {
        let selfie = ArgumentationFramework::new(["a"], [("a", "a")]).unwrap();
        assert!(ranks(&selfie, Semantics::Stable).is_empty());
        assert_eq!(ranks(&ArgumentationFramework::empty(), Semantics::Stable), [vec![]]);
    }

    #[test]
    fn budget_truncates() {
        let tri = fixtures::triangle();
        assert_eq!(
            stratified_labelings_with_budget(&tri, Semantics::Stable, 3),
            Err(Error::Truncated { budget: 3 })
        );
        assert_eq!(
            stratified_labelings_with_budget(&tri, Semantics::Stable, 6).unwrap().len(),
            6
        );
    }

    #[test]
    fn characterize_chain() {
        let af = fixtures::transitive_chain();
        let s = grounded_stratified(&af);
        let c = characterize(&af, Semantics::Grounded, &s).unwrap();
        assert_eq!(c.strata, [vec![0, 1, 2], vec![1, 2], vec![2]]);
        assert!(c.infinite.is_empty());
        assert_eq!(c.k(), 2);
        assert_eq!(c.reconstruct(af.len()), s);
    }

    #[test]
    fn characterize_all_infinite() {
        let af = fixtures::linked_cycles();
        let s = grounded_stratified(&af);
        let c = characterize(&af, Semantics::Grounded, &s).unwrap();
        assert_eq!(c.k(), -1);
        assert_eq!(c.infinite, [0, 1, 2, 3, 4]);
        assert_eq!(c.reconstruct(5), s);
    }

    #[test]
    fn characterize_rejects() {
        let af = fixtures::transitive_chain();
        let bad = StratifiedLabeling::new(vec![F(0), F(2), F(2)]);
        assert!(matches!(
            characterize(&af, Semantics::Grounded, &bad),
            Err(Error::NotStratified { .. })
        ));
        let wrong = StratifiedLabeling::new(vec![F(1), F(0), F(2)]);
        assert!(characterize(&af, Semantics::Grounded, &wrong).is_err());
        let inf = StratifiedLabeling::new(vec![F(0), Inf, Inf]);
        assert!(characterize(&af, Semantics::Grounded, &inf).is_err());
    }
}
