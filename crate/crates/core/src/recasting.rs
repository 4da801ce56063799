//! Admissible-closed frameworks and their recasting.
//!
//! When the admissible sets are closed under intersection, their union
//! closure `SD′` is closed under union and intersection, so it is the family
//! of closed subsets of `S* = ⋃ SD′` for a unit-premise system `Σ_d`. The
//! recast framework adds
//!
//! * `(x, x)` for every `x ∉ S*`;
//! * `(x, y)` and `(y, x)` for every `x → z ∈ Σ_d` and `y ∈ Γ(z)`, with `Γ`
//!   taken in the original framework,
//!
//! and its naive sets are exactly the preferred extensions of the input.
//!
//! `SD′` is built explicitly and can be exponential in the number of
//! arguments; whether the recast framework can be found in polynomial time
//! is not known.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::framework::ArgumentationFramework;
use crate::implication::{unit_system_for_family, ImplicationalSystem};
use crate::oracle::{enum_family, OracleLimit, Semantics};
use crate::set::{ArgumentSet, SetFamily};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleClosedReport {
    pub closed: bool,
    /// Two admissible sets whose intersection is not admissible.
    pub witness: Option<(ArgumentSet, ArgumentSet)>,
}

pub fn is_admissible_closed(
    f: &ArgumentationFramework,
    limit: OracleLimit,
) -> Result<AdmissibleClosedReport> {
    let adm = enum_family(f, Semantics::Admissible, limit)?;
    let witness = adm.intersection_violation();
    Ok(AdmissibleClosedReport {
        closed: witness.is_none(),
        witness,
    })
}

fn union_closure(family: &SetFamily) -> SetFamily {
    let mut seen: HashSet<ArgumentSet> = HashSet::new();
    seen.insert(ArgumentSet::empty(family.bound()));
    for member in family {
        let grown: Vec<ArgumentSet> = seen.iter().map(|s| s.union(member)).collect();
        seen.extend(grown);
    }
    SetFamily::from_sets(family.bound(), seen)
}

fn not_closed(witness: (ArgumentSet, ArgumentSet)) -> Error {
    Error::NotAdmissibleClosed {
        left: witness.0.to_vec(),
        right: witness.1.to_vec(),
    }
}

/// `SD′`: all unions of admissible sets.
pub fn sd_prime(f: &ArgumentationFramework, limit: OracleLimit) -> Result<SetFamily> {
    let adm = enum_family(f, Semantics::Admissible, limit)?;
    if let Some(w) = adm.intersection_violation() {
        return Err(not_closed(w));
    }
    Ok(union_closure(&adm))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecastOutput {
    pub recast: ArgumentationFramework,
    pub sd_prime: SetFamily,
    pub s_star: ArgumentSet,
    pub sigma_d: ImplicationalSystem,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RecastOptions {
    pub limit: OracleLimit,
    /// Skip the admissible-closed check; a non-closed input then surfaces
    /// as a closure error from the unit-system construction.
    pub unchecked: bool,
}

pub fn recast(f: &ArgumentationFramework) -> Result<RecastOutput> {
    recast_with(f, RecastOptions::default())
}

pub fn recast_with(f: &ArgumentationFramework, options: RecastOptions) -> Result<RecastOutput> {
    let adm = enum_family(f, Semantics::Admissible, options.limit)?;
    if !options.unchecked {
        if let Some(w) = adm.intersection_violation() {
            return Err(not_closed(w));
        }
    }
    let sd_prime = union_closure(&adm);
    let sigma_d = unit_system_for_family(&sd_prime, f.len())?;
    let s_star = sd_prime.union_all();

    let mut added = Vec::new();
    for x in s_star.complement().iter() {
        added.push((x, x));
    }
    for imp in sigma_d.implications() {
        let x = imp.premise.first().expect("unit premise");
        for y in &f.neighbours(imp.conclusion) {
            added.push((x, y));
            added.push((y, x));
        }
    }
    Ok(RecastOutput {
        recast: f.with_added_attacks(added),
        sd_prime,
        s_star,
        sigma_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::misenum::enum_naive;

    fn fam(f: &ArgumentationFramework, sets: &[&[&str]]) -> SetFamily {
        SetFamily::from_sets(f.len(), sets.iter().map(|s| f.set_of_labels(s)))
    }

    #[test]
    fn running_example_is_not_admissible_closed() {
        let f = fixtures::running();
        let r = is_admissible_closed(&f, OracleLimit::default()).unwrap();
        assert!(!r.closed);
        let (a, b) = r.witness.unwrap();
        let mut pair = [a, b];
        pair.sort();
        assert_eq!(
            pair,
            [f.set_of_labels(&["2", "5"]), f.set_of_labels(&["4", "5"])]
        );
        assert!(matches!(
            sd_prime(&f, OracleLimit::default()),
            Err(Error::NotAdmissibleClosed { .. })
        ));
        assert!(matches!(recast(&f), Err(Error::NotAdmissibleClosed { .. })));
    }

    #[test]
    fn admissible_closed_example() {
        let f = fixtures::closed_four();
        assert!(
            is_admissible_closed(&f, OracleLimit::default())
                .unwrap()
                .closed
        );
        let sd = sd_prime(&f, OracleLimit::default()).unwrap();
        assert_eq!(
            sd,
            fam(
                &f,
                &[
                    &[],
                    &["1"],
                    &["3"],
                    &["1", "3"],
                    &["1", "4"],
                    &["1", "3", "4"]
                ]
            )
        );

        let out = recast(&f).unwrap();
        assert_eq!(out.s_star, f.set_of_labels(&["1", "3", "4"]));
        assert_eq!(out.sigma_d.render(f.labels()), "4 -> 1\n");
        let extra: Vec<(&str, &str)> = out
            .recast
            .attacks()
            .filter(|&(a, b)| !f.attacks_pair(a, b))
            .map(|(a, b)| (f.label(a), f.label(b)))
            .collect();
        // (3,4) is already an attack of the input.
        assert_eq!(extra, [("2", "2"), ("2", "4"), ("4", "2"), ("4", "3")]);
        let naive = SetFamily::from_sets(4, enum_naive(&out.recast));
        assert_eq!(naive, fam(&f, &[&["1", "4"], &["3"]]));
        assert_eq!(
            naive,
            enum_family(&f, Semantics::Preferred, OracleLimit::default()).unwrap()
        );
    }

    #[test]
    fn trivial_admissible_families() {
        // Only ∅ admissible: every argument gets a loop.
        let f = ArgumentationFramework::with_size(2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(
            sd_prime(&f, OracleLimit::default()).unwrap(),
            fam(&f, &[&[]])
        );
        let out = recast(&f).unwrap();
        assert!(out.s_star.is_empty());
        assert_eq!(out.recast.self_attacking(), f.universe());
        assert_eq!(
            enum_naive(&out.recast).collect::<Vec<_>>(),
            vec![f.empty_set()]
        );

        // ADM = {∅, {0}}
        let f = ArgumentationFramework::with_size(2, [(0, 1), (1, 1)]).unwrap();
        assert_eq!(
            sd_prime(&f, OracleLimit::default()).unwrap(),
            fam(&f, &[&[], &["0"]])
        );
    }

    #[test]
    fn unchecked_recast_still_fails_on_non_closed_input() {
        let options = RecastOptions {
            unchecked: true,
            ..Default::default()
        };
        assert!(matches!(
            recast_with(&fixtures::running(), options),
            Err(Error::NotClosed {
                operation: "intersection",
                ..
            })
        ));
    }
}
