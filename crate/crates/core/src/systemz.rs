//! Conditional knowledge bases, System Z, and the argumentation framework
//! induced by the System Z plausibility order on worlds.

use std::sync::Arc;

use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};
use crate::par;
use crate::propo::{conditional_status, eval, worlds, Conditional, Formula, Signature, Status, World};
use crate::stratified::{grounded_stratified, Rank};

/// An ordered set of pairwise distinct conditionals over a signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnowledgeBase {
    signature: Arc<Signature>,
    conditionals: Vec<Conditional>,
}

impl KnowledgeBase {
    pub fn new(signature: Arc<Signature>, conditionals: Vec<Conditional>) -> Result<Self> {
        for (i, d) in conditionals.iter().enumerate() {
            signature.check(&d.claim)?;
            signature.check(&d.premise)?;
            if conditionals[..i].contains(d) {
                return Err(Error::DuplicateConditional(d.to_string()));
            }
        }
        signature.world_count()?;
        Ok(KnowledgeBase {
            signature,
            conditionals,
        })
    }

    /// Infers the signature (sorted) from the atoms used.
    pub fn from_conditionals(conditionals: Vec<Conditional>) -> Result<Self> {
        let atoms = conditionals
            .iter()
            .flat_map(|d| d.claim.atoms().into_iter().chain(d.premise.atoms()))
            .cloned()
            .collect::<Vec<_>>();
        Self::new(Arc::new(Signature::sorted(atoms)), conditionals)
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.signature
    }

    pub fn conditionals(&self) -> &[Conditional] {
        &self.conditionals
    }

    pub fn len(&self) -> usize {
        self.conditionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conditionals.is_empty()
    }

    pub fn worlds(&self) -> Vec<World> {
        worlds(&self.signature).expect("signature size checked on construction")
    }

    /// Status of every conditional in every world, `[world][conditional]`.
    fn status_table(&self) -> Result<Vec<Vec<Status>>> {
        let ws = self.worlds();
        par::try_map(&ws, |w| {
            self.conditionals
                .iter()
                .map(|d| conditional_status(w, d))
                .collect()
        })
    }
}

/// Conditionals of `kb` not falsified by `w`.
pub fn satisfied_set<'a>(kb: &'a KnowledgeBase, w: &World) -> Result<Vec<&'a Conditional>> {
    let mut out = Vec::new();
    for d in kb.conditionals() {
        if conditional_status(w, d)?.satisfies() {
            out.push(d);
        }
    }
    Ok(out)
}

/// First world (in enumeration order) that verifies `d` and satisfies all
/// of `kb`, if any.
pub fn tolerated(kb: &KnowledgeBase, d: &Conditional) -> Result<Option<World>> {
    kb.signature().check(&d.claim)?;
    kb.signature().check(&d.premise)?;
    for w in kb.worlds() {
        if conditional_status(&w, d)? == Status::Verifies
            && satisfied_set(kb, &w)?.len() == kb.len()
        {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Z-partition `Δ_0, …, Δ_n` as indices into the knowledge base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPartition {
    pub strata: Vec<Vec<usize>>,
}

impl ZPartition {
    /// `Z(δ)` for the conditional at `index`.
    pub fn z(&self, index: usize) -> Option<usize> {
        self.strata.iter().position(|s| s.contains(&index))
    }
}

pub fn z_partition(kb: &KnowledgeBase) -> Result<ZPartition> {
    let table = kb.status_table()?;
    z_partition_from(kb, &table)
}

fn z_partition_from(kb: &KnowledgeBase, table: &[Vec<Status>]) -> Result<ZPartition> {
    let mut remaining: Vec<usize> = (0..kb.len()).collect();
    let mut strata = Vec::new();
    while !remaining.is_empty() {
        // worlds satisfying every remaining conditional
        let fine: Vec<&Vec<Status>> = table
            .iter()
            .filter(|row| remaining.iter().all(|&j| row[j].satisfies()))
            .collect();
        let (tolerated, rest): (Vec<usize>, Vec<usize>) = remaining
            .iter()
            .partition(|&&j| fine.iter().any(|row| row[j] == Status::Verifies));
        if tolerated.is_empty() {
            return Err(Error::Inconsistent {
                remaining: rest.iter().map(|&j| kb.conditionals()[j].to_string()).collect(),
            });
        }
        strata.push(tolerated);
        remaining = rest;
    }
    Ok(ZPartition { strata })
}

/// A map from worlds to ranks with some world at rank 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankingFunction {
    signature: Arc<Signature>,
    ranks: Vec<Rank>,
}

impl RankingFunction {
    /// `ranks[i]` is the rank of the `i`-th world in enumeration order.
    pub fn new(signature: Arc<Signature>, ranks: Vec<Rank>) -> Result<Self> {
        let count = signature.world_count()?;
        if ranks.len() != count {
            return Err(Error::IncompatibleLabeling {
                expected: count,
                found: ranks.len(),
            });
        }
        if !ranks.contains(&Rank::ZERO) {
            return Err(Error::NoPlausibleWorld);
        }
        Ok(RankingFunction { signature, ranks })
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.signature
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub fn rank(&self, w: &World) -> Rank {
        self.ranks[w.index()]
    }

    /// κ(φ): minimum rank over the models of `f`, ∞ if it has none.
    pub fn rank_of_formula(&self, f: &Formula) -> Result<Rank> {
        self.signature.check(f)?;
        let mut best = Rank::Infinite;
        for w in worlds(&self.signature)? {
            if eval(&w, f)? {
                best = best.min(self.rank(&w));
            }
        }
        Ok(best)
    }

    /// κ ⊨ (φ|ψ) iff κ(φψ) < κ(¬φψ).
    pub fn accepts(&self, d: &Conditional) -> Result<bool> {
        let verify = d.claim.clone().and(d.premise.clone());
        let falsify = d.claim.clone().not().and(d.premise.clone());
        Ok(self.rank_of_formula(&verify)? < self.rank_of_formula(&falsify)?)
    }
}

/// Free-function form of [`RankingFunction::rank_of_formula`].
pub fn rank_of_formula(kappa: &RankingFunction, f: &Formula) -> Result<Rank> {
    kappa.rank_of_formula(f)
}

/// κ_Z: 0 for worlds satisfying the knowledge base, otherwise one more
/// than the highest Z-stratum among the falsified conditionals.
pub fn kappa_z(kb: &KnowledgeBase) -> Result<RankingFunction> {
    let table = kb.status_table()?;
    let partition = z_partition_from(kb, &table)?;
    let z: Vec<usize> = (0..kb.len())
        .map(|j| partition.z(j).expect("partition covers the knowledge base"))
        .collect();
    let ranks = table
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, s)| **s == Status::Falsifies)
                .map(|(j, _)| z[j] as u32 + 1)
                .max()
                .map_or(Rank::ZERO, Rank::Finite)
        })
        .collect();
    RankingFunction::new(Arc::clone(kb.signature()), ranks)
}

/// Framework whose arguments are the worlds (named as in [`World::name`])
/// and where `w1` attacks `w2` iff `κ_Z(w1) < κ_Z(w2)`.
pub fn induced_af(kb: &KnowledgeBase) -> Result<ArgumentationFramework> {
    let kappa = kappa_z(kb)?;
    Ok(framework_of(&kappa))
}

/// Strict-order framework of any ranking function.
pub fn framework_of(kappa: &RankingFunction) -> ArgumentationFramework {
    let ws = worlds(kappa.signature()).expect("ranking function over enumerable signature");
    let names: Vec<String> = ws.iter().map(World::name).collect();
    let mut attacks = Vec::new();
    for (i, a) in ws.iter().enumerate() {
        for (j, b) in ws.iter().enumerate() {
            if kappa.rank(a) < kappa.rank(b) {
                attacks.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    ArgumentationFramework::new(names, attacks).expect("world names are distinct")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeMismatch {
    pub world: String,
    pub kappa: Rank,
    pub stratified: Rank,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeReport {
    pub holds: bool,
    /// `(world, κ_Z, grounded-stratified rank)` for every world per row.
    pub rows: Vec<(String, Rank, Rank)>,
    pub mismatches: Vec<BridgeMismatch>,
}

/// Compares κ_Z with the grounded-stratified labeling of the induced
/// framework, world by world.
pub fn bridge_check(kb: &KnowledgeBase) -> Result<BridgeReport> {
    let kappa = kappa_z(kb)?;
    let af = framework_of(&kappa);
    let strat = grounded_stratified(&af);
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for w in kb.worlds() {
        let name = w.name();
        let arg = af.index_of(&name).expect("every world is an argument");
        let (k, s) = (kappa.rank(&w), strat.get(arg));
        if k != s {
            mismatches.push(BridgeMismatch {
                world: name.clone(),
                kappa: k,
                stratified: s,
            });
        }
        rows.push((name, k, s));
    }
    Ok(BridgeReport {
        holds: mismatches.is_empty(),
        rows,
        mismatches,
    })
}
