//! Small named frameworks used throughout the tests and documentation.
//!
//! `running()` is the five-argument framework with arguments `1..=5` whose
//! implicational system is `{1→3, 24→5, 34→1, 23→1}`, naive sets
//! `{13, 45, 25}` and irreducible self-defending sets
//! `{4, 45, 2, 25, 13, 124}`. Its attack relation is the unique one
//! consistent with those facts and with `2⁻ = {3, 4}`.
//!
//! Under that relation `{3,4,5}` is *not* self-defending: 5 attacks 3 and
//! 1 attacks 5, and nothing in `{3,4,5}` attacks 1.

use crate::framework::ArgumentationFramework;

pub fn running() -> ArgumentationFramework {
    ArgumentationFramework::from_labels(
        &["1", "2", "3", "4", "5"],
        &[
            ("2", "1"),
            ("4", "1"),
            ("1", "5"),
            ("5", "3"),
            ("2", "3"),
            ("3", "2"),
            ("2", "4"),
            ("4", "2"),
            ("3", "4"),
            ("4", "3"),
        ],
    )
    .expect("valid fixture")
}

/// The chain `1 → 2 → 3`; `{2}` is naive but not admissible.
pub fn chain() -> ArgumentationFramework {
    ArgumentationFramework::from_labels(&["1", "2", "3"], &[("1", "2"), ("2", "3")])
        .expect("valid fixture")
}

/// Admissible-closed framework with `ADM = {∅, 1, 3, 14}`.
pub fn closed_four() -> ArgumentationFramework {
    ArgumentationFramework::from_labels(
        &["1", "2", "3", "4"],
        &[("1", "3"), ("3", "1"), ("1", "2"), ("3", "2"), ("3", "4")],
    )
    .expect("valid fixture")
}

/// The odd cycle `a → b → c → a`.
pub fn three_cycle() -> ArgumentationFramework {
    ArgumentationFramework::from_labels(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
        .expect("valid fixture")
}

#[cfg(test)]
pub(crate) use strategies::*;
