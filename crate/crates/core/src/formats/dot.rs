use std::fmt::Write;

use crate::af::ArgumentationFramework;
use crate::stratified::{Rank, StratifiedLabeling};

const PALETTE: [&str; 6] = ["#1a9850", "#91cf60", "#d9ef8b", "#fee08b", "#fc8d59", "#d73027"];
const INFINITE_COLOR: &str = "#bdbdbd";

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// DOT digraph with one node per argument and one edge per attack. With a
/// labeling, nodes carry their rank in the label and a fill color by rank.
pub fn to_dot(af: &ArgumentationFramework, ranks: Option<&StratifiedLabeling>) -> String {
    let mut out = String::from("digraph af {\n  node [style=filled, fillcolor=white];\n");
    for (i, name) in af.arguments().iter().enumerate() {
        match ranks.map(|r| r.get(i)) {
            None => writeln!(out, "  {};", quote(name)).unwrap(),
            Some(rank) => {
                let color = match rank {
                    Rank::Finite(k) => PALETTE[(k as usize).min(PALETTE.len() - 1)],
                    Rank::Infinite => INFINITE_COLOR,
                };
                writeln!(
                    out,
                    "  {} [label={}, stratum={}, fillcolor=\"{color}\"];",
                    quote(name),
                    quote(&format!("{name}\\n{rank}")),
                    quote(&rank.to_string()),
                )
                .unwrap();
            }
        }
    }
    for (a, b) in af.attacks() {
        writeln!(out, "  {} -> {};", quote(a), quote(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::stratified::grounded_stratified;

    #[test]
    fn one_node_and_edge_each() {
        let af = fixtures::defended_cycle();
        let s = grounded_stratified(&af);
        let dot = to_dot(&af, Some(&s));
        assert_eq!(dot.matches(" -> ").count(), af.attack_count());
        assert_eq!(dot.matches("stratum=").count(), af.len());
        assert!(dot.contains("\"A3\" [label=\"A3\\n3\", stratum=\"3\""));
        let plain = to_dot(&af, None);
        assert!(!plain.contains("stratum="));
    }
}
