//! Enforcement cost: how many attack edits make a set of arguments
//! credulously accepted.
//!
//! Edits range over every ordered pair of existing arguments (self-loops
//! included): a pair is either added or removed. No arguments are ever
//! added.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::af::{credulously_accepts, ArgumentationFramework, Semantics};
use crate::error::{Error, Result};
use crate::par;
use crate::stratified::{stratified_labelings_with_budget, DEFAULT_BUDGET};

/// Candidate edit sets handed to the parallel scan at once.
const CHUNK: usize = 4096;

/// |→₁ Δ →₂| for two frameworks over the same arguments.
pub fn attack_distance(af1: &ArgumentationFramework, af2: &ArgumentationFramework) -> Result<usize> {
    if af1.arguments() != af2.arguments() {
        return Err(Error::ArgumentSetMismatch);
    }
    Ok(af1
        .attack_pairs()
        .symmetric_difference(af2.attack_pairs())
        .count())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edit {
    Add(String, String),
    Remove(String, String),
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edit::Add(a, b) => write!(f, "add {a} {b}"),
            Edit::Remove(a, b) => write!(f, "remove {a} {b}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Characteristic {
    Finite(usize),
    /// Never produced by the bounded search; kept for completeness.
    Infinite,
    /// No framework within `budget` edits works.
    UnknownBeyond(usize),
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Finite(k) => write!(f, "{k}"),
            Characteristic::Infinite => f.write_str("inf"),
            Characteristic::UnknownBeyond(b) => write!(f, ">{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnforcementResult {
    pub value: Characteristic,
    /// Present exactly when `value` is finite; its length equals the value.
    pub witness_edits: Option<Vec<Edit>>,
}

/// Applies named edits; adding a present or removing an absent attack is an error.
pub fn apply_edits(af: &ArgumentationFramework, edits: &[Edit]) -> Result<ArgumentationFramework> {
    let mut attacks = af.attack_pairs().clone();
    for e in edits {
        let (a, b, add) = match e {
            Edit::Add(a, b) => (a, b, true),
            Edit::Remove(a, b) => (a, b, false),
        };
        let pair = (af.require(a)?, af.require(b)?);
        let changed = if add {
            attacks.insert(pair)
        } else {
            attacks.remove(&pair)
        };
        if !changed {
            return Err(Error::InvalidEdit(e.to_string()));
        }
    }
    Ok(af.with_attacks(attacks))
}

/// N^AF_σ(C), searched breadth-first up to `budget` edits.
///
/// Edit sets of each size are tried in lexicographic order of the
/// (attacker, target) index pairs, so the witness is the least one of
/// minimal size.
pub fn characteristic<S: AsRef<str>>(
    af: &ArgumentationFramework,
    sem: Semantics,
    targets: &[S],
    budget: usize,
) -> Result<EnforcementResult> {
    let mut c = targets
        .iter()
        .map(|t| af.require(t.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    c.sort_unstable();
    c.dedup();
    Ok(characteristic_indices(af, sem, &c, budget))
}

pub(crate) fn characteristic_indices(
    af: &ArgumentationFramework,
    sem: Semantics,
    targets: &[usize],
    budget: usize,
) -> EnforcementResult {
    if credulously_accepts(af, sem, targets) {
        return EnforcementResult {
            value: Characteristic::Finite(0),
            witness_edits: Some(Vec::new()),
        };
    }
    let n = af.len();
    let pairs: Vec<(usize, usize)> = (0..n).cartesian_product(0..n).collect();
    let works = |combo: &Vec<usize>| {
        let mut attacks = af.attack_pairs().clone();
        for &p in combo {
            if !attacks.remove(&pairs[p]) {
                attacks.insert(pairs[p]);
            }
        }
        credulously_accepts(&af.with_attacks(attacks), sem, targets)
    };
    for k in 1..=budget.min(pairs.len()) {
        let mut combos = (0..pairs.len()).combinations(k);
        loop {
            let chunk: Vec<Vec<usize>> = combos.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            if let Some(found) = par::find_first(&chunk, works) {
                let edits = found
                    .iter()
                    .map(|&p| {
                        let (a, b) = pairs[p];
                        let (a_name, b_name) = (af.name(a).to_string(), af.name(b).to_string());
                        if af.attacks_between(a, b) {
                            Edit::Remove(a_name, b_name)
                        } else {
                            Edit::Add(a_name, b_name)
                        }
                    })
                    .collect();
                return EnforcementResult {
                    value: Characteristic::Finite(k),
                    witness_edits: Some(edits),
                };
            }
        }
    }
    EnforcementResult {
        value: Characteristic::UnknownBeyond(budget),
        witness_edits: None,
    }
}

/// Argument pairs `(a, b)` with `N({a}) < N({b})` although some σ-stratified
/// labeling ranks both finitely with `S(a) ≥ S(b)`.
///
/// An unresolved characteristic (beyond `budget`) orders above any resolved
/// one; two unresolved arguments cannot be ordered and make the scan fail
/// with [`Error::Truncated`].
pub fn conjecture_scan(
    af: &ArgumentationFramework,
    sem: Semantics,
    budget: usize,
) -> Result<Vec<(String, String)>> {
    let costs: Vec<Characteristic> = par::map_range(af.len(), |i| {
        characteristic_indices(af, sem, &[i], budget).value
    });
    let unresolved = costs
        .iter()
        .filter(|c| matches!(c, Characteristic::UnknownBeyond(_)))
        .count();
    if unresolved > 1 {
        return Err(Error::Truncated { budget });
    }
    let less = |a: Characteristic, b: Characteristic| match (a, b) {
        (Characteristic::Finite(x), Characteristic::Finite(y)) => x < y,
        (Characteristic::Finite(_), _) => true,
        _ => false,
    };
    let strat = stratified_labelings_with_budget(af, sem, DEFAULT_BUDGET)?;
    let mut found = BTreeSet::new();
    for a in 0..af.len() {
        for b in 0..af.len() {
            if !less(costs[a], costs[b]) {
                continue;
            }
            let refuted = strat.iter().any(|s| {
                let (ra, rb) = (s.get(a), s.get(b));
                ra.is_finite() && rb.is_finite() && ra >= rb
            });
            if refuted {
                found.insert((a, b));
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|(a, b)| (af.name(a).to_string(), af.name(b).to_string()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::grounded;
    use crate::fixtures;

    #[test]
    fn distance_examples() {
        let af = fixtures::self_attacking_chains();
        assert_eq!(attack_distance(&af, &af).unwrap(), 0);
        let one = apply_edits(&af, &[Edit::Remove("A2".into(), "A1".into())]).unwrap();
        assert_eq!(attack_distance(&af, &one).unwrap(), 1);
        let two = apply_edits(
            &af,
            &[
                Edit::Remove("A4".into(), "A2".into()),
                Edit::Remove("A3".into(), "A2".into()),
            ],
        )
        .unwrap();
        assert_eq!(attack_distance(&af, &two).unwrap(), 2);
        assert_eq!(
            attack_distance(&af, &fixtures::transitive_chain()),
            Err(Error::ArgumentSetMismatch)
        );
    }

    #[test]
    fn characteristic_examples() {
        let af = fixtures::self_attacking_chains();
        let r1 = characteristic(&af, Semantics::Grounded, &["A1"], 3).unwrap();
        assert_eq!(r1.value, Characteristic::Finite(1));
        assert_eq!(r1.witness_edits.unwrap(), [Edit::Remove("A2".into(), "A1".into())]);

        let r2 = characteristic(&af, Semantics::Grounded, &["A2"], 3).unwrap();
        assert_eq!(r2.value, Characteristic::Finite(2));
        let fixed = apply_edits(&af, &r2.witness_edits.unwrap()).unwrap();
        assert!(credulously_accepts(&fixed, Semantics::Grounded, &[1]));

        let g = grounded(&af);
        let accepted: Vec<&str> = g.in_set().into_iter().map(|i| af.name(i)).collect();
        let r0 = characteristic(&af, Semantics::Grounded, &accepted, 0).unwrap();
        assert_eq!(r0.value, Characteristic::Finite(0));
        assert_eq!(r0.witness_edits, Some(vec![]));

        assert_eq!(
            characteristic(&af, Semantics::Grounded, &["A2"], 1).unwrap().value,
            Characteristic::UnknownBeyond(1)
        );
        assert!(characteristic(&af, Semantics::Grounded, &["nope"], 1).is_err());
    }

    #[test]
    fn conjecture_examples() {
        let af = fixtures::self_attacking_chains();
        let pairs = conjecture_scan(&af, Semantics::Grounded, 3).unwrap();
        assert!(pairs.contains(&("A1".into(), "A2".into())));
        assert!(conjecture_scan(&fixtures::transitive_chain(), Semantics::Grounded, 3)
            .unwrap()
            .is_empty());
        assert!(conjecture_scan(&ArgumentationFramework::empty(), Semantics::Grounded, 3)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn unresolved_pairs_truncate() {
        // Both odd cycles need at least one edit; budget 0 resolves neither.
        let af = ArgumentationFramework::new(["a", "b"], [("a", "a"), ("b", "b")]).unwrap();
        assert_eq!(
            conjecture_scan(&af, Semantics::Grounded, 0),
            Err(Error::Truncated { budget: 0 })
        );
    }
}
