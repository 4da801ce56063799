//! Deciding whether a framework is naive-bijective (`NAIV = PREF`).
//!
//! Three routes are offered. All of them first look at `∅^Σ`: an argument
//! forced into the closure of the empty set lies in no self-defending set,
//! so if it is not self-attacking some naive set containing it is not
//! admissible. Once `∅^Σ ⊆ S(AF)` holds, the framework fails to be
//! naive-bijective exactly when, for a one-directional attack `(y, x)`,
//! there is a conflict-free `S ⊆ Γ(y⁻) ∖ y⁻` with `S ∪ {x}` conflict-free
//! and `S ∩ Γ(z) ≠ ∅` for every non-self-attacking `z ∈ y⁻`. Self-attacking
//! attackers of `y` can never join a naive set, so they need no blocker.
//!
//! The streaming route enumerates naive sets and stops at the first one that
//! is not admissible.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::framework::ArgumentationFramework;
use crate::implication::build_sigma;
use crate::misenum::enum_naive;
use crate::set::ArgumentSet;

pub const DEFAULT_BOUND: usize = 6;

/// `∅^Σ ∖ S(AF)` when non-empty.
pub fn empty_closure_violation(f: &ArgumentationFramework) -> Option<ArgumentSet> {
    let forced = build_sigma(f).closure(&f.empty_set());
    let violation = forced.difference(&f.self_attacking());
    (!violation.is_empty()).then_some(violation)
}

/// Adds a self-attack to every argument of `∅^Σ` that lacks one, until
/// `∅^Σ ⊆ S(AF)`. Admissible sets and preferred extensions are unchanged.
pub fn normalize(f: &ArgumentationFramework) -> ArgumentationFramework {
    let mut current = f.clone();
    // Each round adds at least one loop, so this runs at most n times.
    while let Some(violation) = empty_closure_violation(&current) {
        current = current.with_added_attacks(violation.iter().map(|x| (x, x)));
    }
    current
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// All subsets of `Γ(y⁻) ∖ y⁻`.
    Exact,
    /// Subsets of size at most `|y⁻|`; refuses `|y⁻| > k`.
    Bounded(usize),
}

/// Searches for the set `S` of the characterization for the attack
/// `(y, x)`. Candidates are visited by size, then lexicographically, and the
/// first valid one is returned, so both modes report the same witness.
pub fn witness_search(
    f: &ArgumentationFramework,
    x: usize,
    y: usize,
    mode: SearchMode,
) -> Result<Option<ArgumentSet>> {
    if !f.attacks_pair(y, x) || f.attacks_pair(x, y) {
        return Err(Error::Precondition(format!(
            "({}, {}) must be a one-directional attack",
            f.label(y),
            f.label(x)
        )));
    }
    if let Some(v) = empty_closure_violation(f) {
        return Err(Error::Precondition(format!(
            "closure of the empty set contains non-self-attacking arguments {:?}; normalize first",
            f.labels_of(&v)
        )));
    }
    search_unchecked(f, x, y, mode)
}

fn search_unchecked(
    f: &ArgumentationFramework,
    x: usize,
    y: usize,
    mode: SearchMode,
) -> Result<Option<ArgumentSet>> {
    let y_attackers = f.attackers_of_argument(y);
    if let SearchMode::Bounded(k) = mode {
        if y_attackers.len() > k {
            return Err(Error::InDegreeTooLarge {
                in_degree: y_attackers.len(),
                k,
            });
        }
    }
    if f.attacks_pair(x, x) {
        return Ok(None);
    }
    let loops = f.self_attacking();
    let targets: Vec<ArgumentSet> = y_attackers
        .iter()
        .filter(|&z| !loops.contains(z))
        .map(|z| f.neighbours(z))
        .collect();
    // Arguments that can never sit in S next to x are dropped up front.
    let x_conflicts = f.neighbours(x);
    let pool: Vec<usize> = f
        .gamma(y_attackers)
        .difference(y_attackers)
        .iter()
        .filter(|&c| !loops.contains(c) && !x_conflicts.contains(c))
        .collect();
    let max_size = match mode {
        SearchMode::Exact => pool.len(),
        SearchMode::Bounded(_) => targets.len().min(pool.len()),
    };
    let valid = |s: &ArgumentSet| f.is_conflict_free(s) && targets.iter().all(|t| t.intersects(s));
    for size in 0..=max_size {
        let mut found = None;
        for_each_combination(pool.len(), size, |chosen| {
            let s = f.set_of(chosen.iter().map(|&i| pool[i]));
            if valid(&s) {
                found = Some(s);
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Calls `visit` with every `size`-subset of `0..n` in lexicographic order
/// until it returns `false`.
fn for_each_combination(n: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        // Advance the rightmost index that still has room.
        let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    CharacterizationExact,
    CharacterizationBounded { k: usize },
    StreamingOracle,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" | "characterization-exact" => Ok(Mode::CharacterizationExact),
            "bounded" | "characterization-bounded" => {
                Ok(Mode::CharacterizationBounded { k: DEFAULT_BOUND })
            }
            "streaming" | "streaming-oracle" => Ok(Mode::StreamingOracle),
            _ => Err(format!(
                "unknown mode `{s}` (expected exact, bounded or streaming)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    LemmaShortcut,
    Characterization,
    StreamingOracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::LemmaShortcut => "lemma-shortcut",
            Method::Characterization => "characterization",
            Method::StreamingOracle => "streaming-oracle",
        })
    }
}

/// Evidence that a framework is not naive-bijective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A naive set that is not admissible.
    NonAdmissibleNaive(ArgumentSet),
    /// `(x, y, S)` meeting the characterization, plus a naive set extending
    /// `S ∪ {x}` that is not admissible.
    Pair {
        x: usize,
        y: usize,
        set: ArgumentSet,
        extension: ArgumentSet,
    },
}

impl Witness {
    /// The non-admissible naive set carried by the witness.
    pub fn naive_set(&self) -> &ArgumentSet {
        match self {
            Witness::NonAdmissibleNaive(s) => s,
            Witness::Pair { extension, .. } => extension,
        }
    }

    /// Independent validation against the framework.
    pub fn check(&self, f: &ArgumentationFramework) -> bool {
        let naive = self.naive_set();
        let is_naive = f.is_conflict_free(naive)
            && (0..f.len()).all(|v| {
                naive.contains(v) || {
                    let mut bigger = naive.clone();
                    bigger.insert(v);
                    !f.is_conflict_free(&bigger)
                }
            });
        if !is_naive || f.is_admissible(naive) {
            return false;
        }
        match self {
            Witness::NonAdmissibleNaive(_) => true,
            Witness::Pair {
                x,
                y,
                set,
                extension,
            } => {
                let (x, y) = (*x, *y);
                let ym = f.attackers_of_argument(y);
                let mut with_x = set.clone();
                with_x.insert(x);
                let loops = f.self_attacking();
                f.attacks_pair(y, x)
                    && !f.attacks_pair(x, y)
                    && set.is_subset(&f.gamma(ym).difference(ym))
                    && f.is_conflict_free(&with_x)
                    && ym
                        .iter()
                        .filter(|&z| !loops.contains(z))
                        .all(|z| f.neighbours(z).intersects(set))
                    && with_x.is_subset(extension)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveBijectiveReport {
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub method: Method,
    /// `∅^Σ ∖ S(AF)`, when the lemma decided.
    pub empty_closure_violation: Option<ArgumentSet>,
}

/// Greedy extension of a conflict-free set to a naive set, scanning
/// arguments in index order.
pub fn complete_to_naive(f: &ArgumentationFramework, set: &ArgumentSet) -> ArgumentSet {
    let mut out = set.clone();
    for v in 0..f.len() {
        if out.contains(v) || f.attacks_pair(v, v) {
            continue;
        }
        if f.neighbours(v).is_disjoint(&out) {
            out.insert(v);
        }
    }
    out
}

pub fn is_naive_bijective(f: &ArgumentationFramework, mode: Mode) -> Result<NaiveBijectiveReport> {
    if let Mode::CharacterizationBounded { k } = mode {
        let in_degree = f.max_in_degree();
        if in_degree > k {
            return Err(Error::InDegreeTooLarge { in_degree, k });
        }
    }
    if let Some(violation) = empty_closure_violation(f) {
        let first = violation.first().expect("non-empty violation");
        let naive = complete_to_naive(f, &f.set_of([first]));
        return Ok(NaiveBijectiveReport {
            verdict: false,
            witness: Some(Witness::NonAdmissibleNaive(naive)),
            method: Method::LemmaShortcut,
            empty_closure_violation: Some(violation),
        });
    }
    let (witness, method) = match mode {
        Mode::StreamingOracle => (
            enum_naive(f)
                .find(|s| !f.is_admissible(s))
                .map(Witness::NonAdmissibleNaive),
            Method::StreamingOracle,
        ),
        Mode::CharacterizationExact => {
            (pair_search(f, SearchMode::Exact)?, Method::Characterization)
        }
        Mode::CharacterizationBounded { k } => (
            pair_search(f, SearchMode::Bounded(k))?,
            Method::Characterization,
        ),
    };
    Ok(NaiveBijectiveReport {
        verdict: witness.is_none(),
        witness,
        method,
        empty_closure_violation: None,
    })
}

/// First witness over one-directional attacks `(y, x)`, ordered by `x`
/// then `y`.
fn pair_search(f: &ArgumentationFramework, mode: SearchMode) -> Result<Option<Witness>> {
    for x in 0..f.len() {
        for y in f.attackers_of_argument(x) {
            if f.attacks_pair(x, y) {
                continue;
            }
            if let Some(set) = search_unchecked(f, x, y, mode)? {
                let mut seed = set.clone();
                seed.insert(x);
                let extension = complete_to_naive(f, &seed);
                return Ok(Some(Witness::Pair {
                    x,
                    y,
                    set,
                    extension,
                }));
            }
        }
    }
    Ok(None)
}
