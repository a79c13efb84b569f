//! Small reference inputs shared by tests, benches and the CLI test suite.

use std::sync::Arc;

use crate::af::ArgumentationFramework;
use crate::propo::{Conditional, Formula, Signature};
use crate::systemz::KnowledgeBase;

fn af(args: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
    ArgumentationFramework::new(args.iter().copied(), attacks.iter().copied())
        .expect("well-formed fixture")
}

/// Two mutual attacks joined through `A3`: `A1⇄A2→A3→A4⇄A5→A3`.
pub fn linked_cycles() -> ArgumentationFramework {
    af(
        &["A1", "A2", "A3", "A4", "A5"],
        &[
            ("A1", "A2"),
            ("A2", "A1"),
            ("A2", "A3"),
            ("A3", "A4"),
            ("A4", "A5"),
            ("A5", "A4"),
            ("A5", "A3"),
        ],
    )
}

/// Transitive chain `A1→A2→A3` plus `A1→A3`.
pub fn transitive_chain() -> ArgumentationFramework {
    af(
        &["A1", "A2", "A3"],
        &[("A1", "A2"), ("A1", "A3"), ("A2", "A3")],
    )
}

/// `A1→A2→A3⇄A4→A5→A3`.
pub fn defended_cycle() -> ArgumentationFramework {
    af(
        &["A1", "A2", "A3", "A4", "A5"],
        &[
            ("A1", "A2"),
            ("A2", "A3"),
            ("A3", "A4"),
            ("A4", "A3"),
            ("A4", "A5"),
            ("A5", "A3"),
        ],
    )
}

/// Three arguments attacking each other pairwise.
pub fn triangle() -> ArgumentationFramework {
    af(
        &["A1", "A2", "A3"],
        &[
            ("A1", "A2"),
            ("A1", "A3"),
            ("A2", "A1"),
            ("A2", "A3"),
            ("A3", "A1"),
            ("A3", "A2"),
        ],
    )
}

/// Two attack chains into `A2` whose last links `A3`, `A4` attack themselves.
pub fn self_attacking_chains() -> ArgumentationFramework {
    af(
        &["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8"],
        &[
            ("A8", "A7"),
            ("A7", "A4"),
            ("A6", "A5"),
            ("A5", "A3"),
            ("A3", "A2"),
            ("A4", "A2"),
            ("A2", "A1"),
            ("A4", "A4"),
            ("A3", "A3"),
        ],
    )
}

/// `A` unattacked, `A→C→B`: `B` is attacked yet ties with `A`.
pub fn reinstated() -> ArgumentationFramework {
    af(&["A", "B", "C"], &[("A", "C"), ("C", "B")])
}

/// Birds fly, penguins are birds, penguins do not fly; atoms ordered `p, b, f`.
pub fn penguin() -> KnowledgeBase {
    let (p, b, f) = (Formula::var("p"), Formula::var("b"), Formula::var("f"));
    let sig = Arc::new(Signature::from_names(&["p", "b", "f"]).expect("valid atoms"));
    KnowledgeBase::new(
        sig,
        vec![
            Conditional::new(b.clone(), p.clone()),
            Conditional::new(f.clone().not(), p),
            Conditional::new(f, b),
        ],
    )
    .expect("consistent signature")
}
