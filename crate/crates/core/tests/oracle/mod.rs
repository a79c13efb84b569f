//! Brute-force reference implementations, written directly from the
//! definitions and sharing nothing with the library beyond its types.
//!
//! Frameworks are `n` arguments named `A0..` with attacks as a bitmask:
//! bit `a * n + b` set means `a` attacks `b`. Argument sets are bitmasks.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use strata_core::{ArgumentationFramework, Label, Rank, Semantics};

pub fn attacks(n: usize, edges: u64, a: usize, b: usize) -> bool {
    edges >> (a * n + b) & 1 == 1
}

pub fn build(n: usize, edges: u64) -> ArgumentationFramework {
    let names: Vec<String> = (0..n).map(|i| format!("A{i}")).collect();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if attacks(n, edges, a, b) {
                pairs.push((names[a].clone(), names[b].clone()));
            }
        }
    }
    ArgumentationFramework::new(names, pairs).unwrap()
}

/// Labelings as `(in, out)` masks restricted to `within`; everything else in
/// `within` is undec. Arguments outside `within` do not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lab {
    pub ins: u32,
    pub outs: u32,
}

impl Lab {
    pub fn undec(self, within: u32) -> u32 {
        within & !self.ins & !self.outs
    }

    pub fn labels(self, n: usize) -> Vec<Label> {
        (0..n)
            .map(|i| {
                if self.ins >> i & 1 == 1 {
                    Label::In
                } else if self.outs >> i & 1 == 1 {
                    Label::Out
                } else {
                    Label::Undec
                }
            })
            .collect()
    }
}

/// Every complete labeling of the subframework on `within`, by trying all
/// 3^|within| assignments.
pub fn complete(n: usize, edges: u64, within: u32) -> Vec<Lab> {
    let members: Vec<usize> = (0..n).filter(|&i| within >> i & 1 == 1).collect();
    let total = 3usize.pow(members.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let (mut ins, mut outs, mut c) = (0u32, 0u32, code);
        for &m in &members {
            match c % 3 {
                0 => ins |= 1 << m,
                1 => outs |= 1 << m,
                _ => {}
            }
            c /= 3;
        }
        let label = |x: usize| {
            if ins >> x & 1 == 1 {
                0
            } else if outs >> x & 1 == 1 {
                1
            } else {
                2
            }
        };
        let ok = members.iter().all(|&a| {
            let att: Vec<usize> = members.iter().copied().filter(|&b| attacks(n, edges, b, a)).collect();
            match label(a) {
                0 => att.iter().all(|&b| label(b) == 1),
                1 => att.iter().any(|&b| label(b) == 0),
                _ => !att.iter().any(|&b| label(b) == 0) && att.iter().any(|&b| label(b) != 1),
            }
        });
        if ok {
            out.push(Lab { ins, outs });
        }
    }
    out
}

fn subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

/// σ-labelings of the subframework on `within`, straight from the
/// definitions over the complete ones.
pub fn sigma(n: usize, edges: u64, within: u32, sem: Semantics) -> Vec<Lab> {
    let all = complete(n, edges, within);
    let keep = |l: &Lab| match sem {
        Semantics::Complete => true,
        Semantics::Grounded => all.iter().all(|m| subset(l.ins, m.ins)),
        Semantics::Preferred => !all.iter().any(|m| m.ins != l.ins && subset(l.ins, m.ins)),
        Semantics::Stable => l.undec(within) == 0,
        Semantics::SemiStable => !all
            .iter()
            .any(|m| m.undec(within) != l.undec(within) && subset(m.undec(within), l.undec(within))),
    };
    let mut out: Vec<Lab> = all.iter().copied().filter(keep).collect();
    out.sort();
    out.dedup();
    out
}

pub fn sigma_labels(n: usize, edges: u64, sem: Semantics) -> BTreeSet<Vec<Label>> {
    let full = (1u32 << n) - 1;
    sigma(n, edges, full, sem).into_iter().map(|l| l.labels(n)).collect()
}

/// Checks a rank map against the recursive definition of a σ-stratified
/// labeling: some σ-labeling either accepts nothing (and then all ranks
/// are ∞) or accepts exactly the rank-`depth` arguments, and the rest is
/// stratified one level deeper.
pub struct Validator {
    n: usize,
    edges: u64,
    sem: Semantics,
    in_sets: HashMap<u32, Vec<u32>>,
}

impl Validator {
    pub fn new(n: usize, edges: u64, sem: Semantics) -> Self {
        Validator {
            n,
            edges,
            sem,
            in_sets: HashMap::new(),
        }
    }

    fn in_sets(&mut self, within: u32) -> &[u32] {
        let (n, edges, sem) = (self.n, self.edges, self.sem);
        self.in_sets
            .entry(within)
            .or_insert_with(|| sigma(n, edges, within, sem).into_iter().map(|l| l.ins).collect())
    }

    pub fn is_stratified(&mut self, ranks: &[Rank]) -> bool {
        let full = (1u32 << self.n) - 1;
        self.check(ranks, full, 0)
    }

    fn check(&mut self, ranks: &[Rank], within: u32, depth: u32) -> bool {
        let members: Vec<usize> = (0..self.n).filter(|&i| within >> i & 1 == 1).collect();
        let at_depth = members
            .iter()
            .filter(|&&a| ranks[a] == Rank::Finite(depth))
            .fold(0u32, |m, &a| m | 1 << a);
        if members.iter().any(|&a| ranks[a] < Rank::Finite(depth)) {
            return false;
        }
        let options = self.in_sets(within).to_vec();
        options.into_iter().any(|ins| {
            if ins == 0 {
                members.iter().all(|&a| ranks[a] == Rank::Infinite)
            } else {
                ins == at_depth && self.check(ranks, within & !ins, depth + 1)
            }
        })
    }
}

/// Every σ-stratified labeling, found by validating all (n+1)^n rank maps.
pub fn all_stratified(n: usize, edges: u64, sem: Semantics) -> BTreeSet<Vec<Rank>> {
    let mut v = Validator::new(n, edges, sem);
    let values: Vec<Rank> = (0..n as u32).map(Rank::Finite).chain([Rank::Infinite]).collect();
    let total = (n + 1).pow(n as u32);
    let mut out = BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let ranks: Vec<Rank> = (0..n)
            .map(|_| {
                let r = values[c % (n + 1)];
                c /= n + 1;
                r
            })
            .collect();
        if v.is_stratified(&ranks) {
            out.insert(ranks);
        }
    }
    out
}

/// For every framework over `n` arguments, the in-sets of its σ-labelings
/// as a bitset over in-masks (bit `m` set iff some σ-labeling has in-set
/// `m`). Only meant for `n ≤ 4`.
pub fn acceptance_table(n: usize, sem: Semantics) -> Vec<u64> {
    assert!(n <= 4);
    let full = (1u32 << n) - 1;
    (0..1u64 << (n * n))
        .map(|edges| {
            sigma(n, edges, full, sem)
                .into_iter()
                .fold(0u64, |acc, l| acc | 1 << l.ins)
        })
        .collect()
}

/// Least attack distance from `edges` to a framework that credulously
/// accepts every argument of `target`, by scanning the whole table.
pub fn exhaustive_characteristic(table: &[u64], edges: u64, target: u32) -> usize {
    table
        .iter()
        .enumerate()
        .filter(|(_, &ins)| (0..64).any(|m| ins >> m & 1 == 1 && target & !(m as u32) == 0))
        .map(|(other, _)| (other as u64 ^ edges).count_ones() as usize)
        .min()
        .expect("the attack-free framework accepts everything")
}

/// Deterministic pseudo-random frameworks for sweeps: `count` frameworks
/// with `1..=max_n` arguments and roughly `density` of all pairs attacking.
pub fn corpus(seed: u64, count: usize, max_n: usize, density: f64) -> Vec<(usize, u64)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let mut edges = 0u64;
            for bit in 0..n * n {
                if rng.random_bool(density) {
                    edges |= 1 << bit;
                }
            }
            (n, edges)
        })
        .collect()
}
