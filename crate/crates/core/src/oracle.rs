//! Exhaustive ground truth for the semantics families.
//!
//! Works on 64-bit masks built straight from the attack list and shares no
//! code with the set-level queries on [`ArgumentationFramework`], so it can
//! serve as an independent check on them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::framework::ArgumentationFramework;
use crate::set::{ArgumentSet, SetFamily};

pub const DEFAULT_LIMIT: usize = 24;
/// Masks are `u64`, and `2^63` subsets is already absurd.
pub const HARD_LIMIT: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    ConflictFree,
    Naive,
    SelfDefending,
    Admissible,
    Preferred,
}

impl Semantics {
    pub const ALL: [Semantics; 5] = [
        Semantics::ConflictFree,
        Semantics::Naive,
        Semantics::SelfDefending,
        Semantics::Admissible,
        Semantics::Preferred,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "cf",
            Semantics::Naive => "naive",
            Semantics::SelfDefending => "sd",
            Semantics::Admissible => "adm",
            Semantics::Preferred => "pref",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown semantics `{s}` (expected cf, naive, sd, adm or pref)"))
    }
}

/// Upper bound on the number of arguments exhaustive routines accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimit(pub usize);

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit(DEFAULT_LIMIT)
    }
}

impl OracleLimit {
    pub fn check(self, f: &ArgumentationFramework) -> Result<()> {
        let limit = self.0.min(HARD_LIMIT);
        if f.len() > limit {
            Err(Error::LimitExceeded {
                arguments: f.len(),
                limit,
            })
        } else {
            Ok(())
        }
    }
}

struct Masks {
    n: usize,
    out: Vec<u64>,
    inc: Vec<u64>,
    loops: u64,
}

impl Masks {
    fn new(f: &ArgumentationFramework) -> Self {
        let n = f.len();
        let mut out = vec![0u64; n];
        let mut inc = vec![0u64; n];
        let mut loops = 0;
        for (a, b) in f.attacks() {
            out[a] |= 1 << b;
            inc[b] |= 1 << a;
            if a == b {
                loops |= 1 << a;
            }
        }
        Self { n, out, inc, loops }
    }

    fn plus(&self, s: u64) -> u64 {
        bits(s).fold(0, |acc, x| acc | self.out[x])
    }

    fn minus(&self, s: u64) -> u64 {
        bits(s).fold(0, |acc, x| acc | self.inc[x])
    }

    fn conflict_free(&self, s: u64) -> bool {
        self.plus(s) & s == 0
    }

    fn self_defending(&self, s: u64) -> bool {
        self.minus(s) & !self.plus(s) == 0
    }

    fn all_subsets(&self) -> impl Iterator<Item = u64> {
        let end: u64 = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        0..=end
    }

    /// Conflict-free sets by depth-first extension; a set is only extended
    /// by arguments above its largest member.
    fn conflict_free_sets(&self) -> Vec<u64> {
        let mut found = Vec::new();
        let mut stack = vec![(0u64, 0usize)];
        while let Some((s, next)) = stack.pop() {
            found.push(s);
            for v in next..self.n {
                let bit = 1u64 << v;
                if self.loops & bit != 0 {
                    continue;
                }
                if self.out[v] & s == 0 && self.inc[v] & s == 0 {
                    stack.push((s | bit, v + 1));
                }
            }
        }
        found
    }
}

fn bits(mut s: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

fn family(n: usize, masks: impl IntoIterator<Item = u64>) -> SetFamily {
    SetFamily::from_sets(n, masks.into_iter().map(|m| ArgumentSet::from_mask(n, m)))
}

/// The exact family for `semantics`, by exhaustive search.
pub fn enum_family(
    f: &ArgumentationFramework,
    semantics: Semantics,
    limit: OracleLimit,
) -> Result<SetFamily> {
    limit.check(f)?;
    let m = Masks::new(f);
    let n = f.len();
    Ok(match semantics {
        Semantics::ConflictFree => family(n, m.conflict_free_sets()),
        Semantics::Naive => {
            // Conflict-freeness is hereditary, so a conflict-free set is
            // maximal iff no single argument can be added.
            let cf = m.conflict_free_sets();
            let naive = cf
                .into_iter()
                .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || !m.conflict_free(s | 1 << v)));
            family(n, naive)
        }
        Semantics::SelfDefending => family(n, m.all_subsets().filter(|&s| m.self_defending(s))),
        Semantics::Admissible => family(
            n,
            m.all_subsets()
                .filter(|&s| m.conflict_free(s) && m.self_defending(s)),
        ),
        Semantics::Preferred => enum_family(f, Semantics::Admissible, limit)?.maximal_members(),
    })
}

/// Inclusion-maximal members of `family`.
pub fn maximal_members(family: &SetFamily) -> SetFamily {
    family.maximal_members()
}

/// `NAIV(F) = PREF(F)`, decided exhaustively.
pub fn is_naive_bijective(f: &ArgumentationFramework, limit: OracleLimit) -> Result<bool> {
    Ok(enum_family(f, Semantics::Naive, limit)? == enum_family(f, Semantics::Preferred, limit)?)
}
