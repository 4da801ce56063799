//! Irreducible self-defending sets and the meta-framework whose naive sets
//! correspond, by union, to the preferred extensions.
//!
//! Self-defending sets are closed under union, so every one of them is the
//! union of the irreducible sets below it. On the irreducibles, put a
//! (symmetric) attack between `S1` and `S2` whenever `S1 ∪ S2` is not
//! admissible, including `S1 = S2`. A naive set `I` of that meta-framework
//! maps to the preferred extension `⋃ I`, and this map is a bijection. The
//! meta-framework is listed with the polynomial-delay naive-set enumeration.
//!
//! The irreducibles themselves are found from an explicit listing of the
//! self-defending sets, which is exponential in general.

use std::collections::HashMap;

use crate::error::Result;
use crate::framework::ArgumentationFramework;
use crate::implication::self_defending_family;
use crate::misenum::{enum_naive, MisStats, NaiveIter};
use crate::oracle::{enum_family, OracleLimit, Semantics};
use crate::set::{ArgumentSet, SetFamily};

/// Largest self-defending subset of `within`.
///
/// Repeatedly drops members with an attacker the remaining set does not
/// counter-attack; no self-defending subset can keep such a member.
pub fn largest_self_defending_subset(
    f: &ArgumentationFramework,
    within: &ArgumentSet,
) -> ArgumentSet {
    let mut core = within.clone();
    loop {
        let defended = f.attacked_by(&core);
        let doomed: Vec<usize> = core
            .iter()
            .filter(|&x| !f.attackers_of_argument(x).is_subset(&defended))
            .collect();
        if doomed.is_empty() {
            return core;
        }
        for x in doomed {
            core.remove(x);
        }
    }
}

/// Whether a non-empty self-defending `set` differs from the union of the
/// self-defending sets strictly below it.
pub fn is_irreducible(f: &ArgumentationFramework, set: &ArgumentSet) -> bool {
    if set.is_empty() {
        return false;
    }
    // Every proper self-defending subset misses some x, hence sits inside
    // the largest self-defending subset of set ∖ {x}.
    let mut below = f.empty_set();
    for x in set {
        let mut without = set.clone();
        without.remove(x);
        below.union_with(&largest_self_defending_subset(f, &without));
    }
    below != *set
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleIndex {
    bound: usize,
    members: Vec<ArgumentSet>,
    position: HashMap<ArgumentSet, usize>,
}

impl IrreducibleIndex {
    /// Indexes `members` in canonical order.
    pub fn new(bound: usize, members: impl IntoIterator<Item = ArgumentSet>) -> Self {
        let family = SetFamily::from_sets(bound, members);
        let members = family.members().to_vec();
        let position = members
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Self {
            bound,
            members,
            position,
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn members(&self) -> &[ArgumentSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, set: &ArgumentSet) -> Option<usize> {
        self.position.get(set).copied()
    }

    pub fn as_family(&self) -> SetFamily {
        SetFamily::from_sets(self.bound, self.members.iter().cloned())
    }
}

/// The irreducible self-defending sets of `f`.
pub fn irreducibles(f: &ArgumentationFramework, limit: OracleLimit) -> Result<IrreducibleIndex> {
    limit.check(f)?;
    let sd = self_defending_family(f);
    Ok(IrreducibleIndex::new(
        f.len(),
        sd.iter().filter(|s| is_irreducible(f, s)).cloned(),
    ))
}

/// `IRR(S)`: the irreducibles contained in `set`.
pub fn irr_of(index: &IrreducibleIndex, set: &ArgumentSet) -> Vec<ArgumentSet> {
    index
        .members
        .iter()
        .filter(|m| m.is_subset(set))
        .cloned()
        .collect()
}

/// Framework on the irreducibles; argument `i` stands for `members[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetaFramework {
    pub framework: ArgumentationFramework,
    pub members: Vec<ArgumentSet>,
}

impl MetaFramework {
    /// `⋃ I` for a set `I` of meta-arguments.
    pub fn union_of(&self, meta: &ArgumentSet) -> ArgumentSet {
        let mut out = ArgumentSet::empty(self.members.first().map_or(0, ArgumentSet::bound));
        for i in meta {
            out.union_with(&self.members[i]);
        }
        out
    }
}

fn meta_labels(f: &ArgumentationFramework, members: &[ArgumentSet]) -> Vec<String> {
    let separator = if f.labels().iter().all(|l| l.chars().count() == 1) {
        ""
    } else {
        "_"
    };
    let mut labels: Vec<String> = members
        .iter()
        .map(|m| f.labels_of(m).join(separator))
        .collect();
    let mut counts: HashMap<String, usize> = HashMap::new();
    for l in &labels {
        *counts.entry(l.clone()).or_default() += 1;
    }
    for (i, l) in labels.iter_mut().enumerate() {
        if counts[l.as_str()] > 1 {
            l.push_str(&format!("#{i}"));
        }
    }
    labels
}

pub fn build_f_irr(f: &ArgumentationFramework, index: &IrreducibleIndex) -> MetaFramework {
    let members = index.members().to_vec();
    let mut attacks = Vec::new();
    for (i, a) in members.iter().enumerate() {
        for (j, b) in members.iter().enumerate().skip(i) {
            if !f.is_admissible(&a.union(b)) {
                attacks.push((i, j));
                attacks.push((j, i));
            }
        }
    }
    let framework = ArgumentationFramework::new(meta_labels(f, &members), attacks)
        .expect("meta labels are unique and attacks in range");
    MetaFramework { framework, members }
}

/// Stream of preferred extensions, one per naive set of the meta-framework.
pub struct PreferredIter {
    meta: MetaFramework,
    naive: NaiveIter,
    bound: usize,
}

impl PreferredIter {
    pub fn meta(&self) -> &MetaFramework {
        &self.meta
    }

    pub fn stats(&self) -> MisStats {
        self.naive.stats()
    }
}

impl Iterator for PreferredIter {
    type Item = ArgumentSet;

    fn next(&mut self) -> Option<ArgumentSet> {
        let chosen = self.naive.next()?;
        let mut out = ArgumentSet::empty(self.bound);
        for i in &chosen {
            out.union_with(&self.meta.members[i]);
        }
        Some(out)
    }
}

pub fn enum_preferred_via_irr(
    f: &ArgumentationFramework,
    index: &IrreducibleIndex,
) -> PreferredIter {
    let meta = build_f_irr(f, index);
    let naive = enum_naive(&meta.framework);
    PreferredIter {
        meta,
        naive,
        bound: f.len(),
    }
}

/// Inclusion-minimal non-empty admissible sets.
pub fn initial_admissible(f: &ArgumentationFramework, limit: OracleLimit) -> Result<SetFamily> {
    let adm = enum_family(f, Semantics::Admissible, limit)?;
    Ok(adm.filter(|s| !s.is_empty()).minimal_members())
}
