use std::fmt::Write;

use anyhow::{bail, Result};
use serde_json::{json, Map, Value};
use strata_core::enforce::{characteristic, conjecture_scan, Characteristic};
use strata_core::formats::{print_apx, print_tgf, to_dot};
use strata_core::ordsem::{check_property, CheckOptions, Witness};
use strata_core::stratified::stratified_labelings_with_budget;
use strata_core::systemz::{bridge_check, kappa_z, z_partition};
use strata_core::{labelings, ArgumentationFramework, Rank, StratifiedLabeling};

use crate::input::{framework, knowledge_base, load};
use crate::{Cli, Command, OutFormat};

pub struct Output {
    pub input: String,
    pub text: String,
    pub json: Value,
    /// False for a check that ran and failed.
    pub success: bool,
}

fn rank_json(r: Rank) -> Value {
    match r {
        Rank::Finite(k) => json!(k),
        Rank::Infinite => json!("inf"),
    }
}

fn ranks_json(af: &ArgumentationFramework, s: &StratifiedLabeling) -> Value {
    let map: Map<String, Value> = s
        .ranks()
        .iter()
        .enumerate()
        .map(|(i, &r)| (af.name(i).to_string(), rank_json(r)))
        .collect();
    Value::Object(map)
}

pub fn run(cli: &Cli) -> Result<Output> {
    let budget = cli.strat_budget;
    let file = match &cli.command {
        Command::Solve { file, .. }
        | Command::Stratify { file, .. }
        | Command::Zrank { file, .. }
        | Command::Induce { file, .. }
        | Command::Bridge { file }
        | Command::Check { file, .. }
        | Command::Enforce { file, .. }
        | Command::Dot { file, .. } => file,
    };
    let doc = load(file, cli.format)?;
    let input = doc.source.clone();
    let mut text = String::new();
    let mut success = true;

    let json = match &cli.command {
        Command::Solve { sem, .. } => {
            let af = framework(doc)?;
            let labs = labelings(&af, sem.sem);
            let mut rows = Vec::new();
            for l in &labs {
                writeln!(text, "{}", l.render(&af))?;
                let map: Map<String, Value> = l
                    .labels()
                    .iter()
                    .enumerate()
                    .map(|(i, x)| (af.name(i).to_string(), json!(x.to_string())))
                    .collect();
                rows.push(Value::Object(map));
            }
            json!({ "semantics": sem.sem.as_str(), "labelings": rows })
        }
        Command::Stratify { sem, .. } => {
            let af = framework(doc)?;
            let strat = stratified_labelings_with_budget(&af, sem.sem, budget)?;
            for s in &strat {
                writeln!(text, "{}", s.render(&af))?;
            }
            let rows: Vec<Value> = strat.iter().map(|s| ranks_json(&af, s)).collect();
            json!({ "semantics": sem.sem.as_str(), "labelings": rows })
        }
        Command::Zrank { partition, .. } => {
            let kb = knowledge_base(doc)?;
            if *partition {
                let z = z_partition(&kb)?;
                let mut strata = Vec::new();
                for (i, stratum) in z.strata.iter().enumerate() {
                    let ds: Vec<String> = stratum.iter().map(|&j| kb.conditionals()[j].to_string()).collect();
                    writeln!(text, "{i}: {}", ds.join(", "))?;
                    strata.push(json!(ds));
                }
                json!({ "partition": strata })
            } else {
                let kappa = kappa_z(&kb)?;
                let worlds = kb.worlds();
                let width = worlds.iter().map(|w| w.name().len()).max().unwrap_or(0);
                let mut rows = Vec::new();
                for w in &worlds {
                    let (name, r) = (w.name(), kappa.rank(w));
                    writeln!(text, "{name:<width$} {r}")?;
                    rows.push(json!({ "world": name, "rank": rank_json(r) }));
                }
                json!({ "worlds": rows })
            }
        }
        Command::Induce { out, .. } => {
            let kb = knowledge_base(doc)?;
            let kappa = kappa_z(&kb)?;
            let af = strata_core::systemz::framework_of(&kappa);
            text = match out {
                OutFormat::Apx => print_apx(&af),
                OutFormat::Tgf => print_tgf(&af),
                OutFormat::Dot => {
                    let ranks = af
                        .arguments()
                        .iter()
                        .map(|n| {
                            let w = strata_core::World::from_name(kb.signature().clone(), n)?;
                            Ok(kappa.rank(&w))
                        })
                        .collect::<strata_core::Result<Vec<_>>>()?;
                    to_dot(&af, Some(&StratifiedLabeling::new(ranks)))
                }
            };
            let attacks: Vec<Value> = af.attacks().map(|(a, b)| json!([a, b])).collect();
            json!({ "arguments": af.arguments(), "attacks": attacks })
        }
        Command::Bridge { .. } => {
            let kb = knowledge_base(doc)?;
            let report = bridge_check(&kb)?;
            let width = report.rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
            let mut rows = Vec::new();
            for (w, k, s) in &report.rows {
                let mark = if k == s { "" } else { "  mismatch" };
                writeln!(text, "{w:<width$} {k} {s}{mark}")?;
                rows.push(json!({ "world": w, "kappa": rank_json(*k), "stratified": rank_json(*s) }));
            }
            writeln!(text, "{}", if report.holds { "holds" } else { "fails" })?;
            success = report.holds;
            json!({ "holds": report.holds, "worlds": rows })
        }
        Command::Check {
            prop,
            sem,
            trials,
            seed,
            ..
        } => {
            let af = framework(doc)?;
            let opts = CheckOptions {
                trials: *trials,
                seed: *seed,
                budget,
            };
            let report = check_property(&af, sem.sem, *prop, &opts)?;
            writeln!(text, "{} {}", prop, if report.holds { "holds" } else { "fails" })?;
            let mut witnesses = Vec::new();
            for w in &report.witnesses {
                writeln!(text, "  {w}")?;
                witnesses.push(match w {
                    Witness::Pair(a, b) => json!({ "pair": [a, b] }),
                    Witness::Ranking { context, ranks } => {
                        let map: Map<String, Value> =
                            ranks.iter().map(|(a, r)| (a.clone(), rank_json(*r))).collect();
                        json!({ "context": context, "ranking": map })
                    }
                });
            }
            success = report.holds;
            json!({
                "property": prop.as_str(),
                "semantics": sem.sem.as_str(),
                "holds": report.holds,
                "witnesses": witnesses,
            })
        }
        Command::Enforce {
            sem,
            target,
            budget: edits,
            scan,
            ..
        } => {
            let af = framework(doc)?;
            if *scan {
                let pairs = conjecture_scan(&af, sem.sem, *edits)?;
                for (a, b) in &pairs {
                    writeln!(text, "{a} {b}")?;
                }
                json!({ "semantics": sem.sem.as_str(), "pairs": pairs })
            } else {
                if target.is_empty() {
                    bail!("--target needs at least one argument");
                }
                let r = characteristic(&af, sem.sem, target, *edits)?;
                writeln!(text, "{}", r.value)?;
                let edits_json: Vec<String> = r.witness_edits.iter().flatten().map(|e| e.to_string()).collect();
                for e in &edits_json {
                    writeln!(text, "{e}")?;
                }
                let value = match r.value {
                    Characteristic::Finite(k) => json!(k),
                    Characteristic::Infinite => json!("inf"),
                    Characteristic::UnknownBeyond(b) => json!({ "unknown_beyond": b }),
                };
                json!({
                    "semantics": sem.sem.as_str(),
                    "target": target,
                    "value": value,
                    "witness_edits": r.witness_edits.as_ref().map(|_| edits_json),
                })
            }
        }
        Command::Dot { sem, index, .. } => {
            let af = framework(doc)?;
            let strat = stratified_labelings_with_budget(&af, sem.sem, budget)?;
            let Some(s) = strat.get(*index) else {
                bail!(
                    "no {}-stratified labeling with index {index} ({} available)",
                    sem.sem,
                    strat.len()
                );
            };
            text = to_dot(&af, Some(s));
            json!({ "semantics": sem.sem.as_str(), "index": index, "dot": text })
        }
    };
    Ok(Output {
        input,
        text,
        json,
        success,
    })
}
