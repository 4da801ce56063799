//! Implicational systems over an argument universe.
//!
//! For a framework, the system `{y⁻ → z | (y,z) ∈ R, (z,y) ∉ R}` has as
//! closed sets exactly the complements of the self-defending sets. A family
//! closed under union and intersection is represented by a system whose
//! premises are single arguments.

use std::fmt;

use crate::error::{Error, Result};
use crate::framework::ArgumentationFramework;
use crate::set::{ArgumentSet, SetFamily};

/// `premise → conclusion`. An empty premise fires unconditionally.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Implication {
    pub premise: ArgumentSet,
    pub conclusion: usize,
}

impl Implication {
    pub fn new(premise: ArgumentSet, conclusion: usize) -> Self {
        assert!(conclusion < premise.bound(), "conclusion outside universe");
        Self {
            premise,
            conclusion,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationalSystem {
    bound: usize,
    implications: Vec<Implication>,
    // implications whose premise mentions each element
    watchers: Vec<Vec<usize>>,
}

impl ImplicationalSystem {
    /// Sorts and removes duplicates.
    pub fn new(bound: usize, implications: impl IntoIterator<Item = Implication>) -> Self {
        let mut implications: Vec<Implication> = implications.into_iter().collect();
        for imp in &implications {
            assert_eq!(
                imp.premise.bound(),
                bound,
                "implication from another universe"
            );
        }
        implications.sort();
        implications.dedup();
        let mut watchers = vec![Vec::new(); bound];
        for (k, imp) in implications.iter().enumerate() {
            for x in &imp.premise {
                watchers[x].push(k);
            }
        }
        Self {
            bound,
            implications,
            watchers,
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn implications(&self) -> &[Implication] {
        &self.implications
    }

    pub fn len(&self) -> usize {
        self.implications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implications.is_empty()
    }

    /// `S^Σ`, the least superset of `set` closed under every implication.
    ///
    /// Forward chaining with one unmet-premise counter per implication; each
    /// premise element is visited at most once per call.
    pub fn closure(&self, set: &ArgumentSet) -> ArgumentSet {
        assert_eq!(set.bound(), self.bound, "set bound does not match system");
        let mut closed = set.clone();
        let mut unmet: Vec<usize> = Vec::with_capacity(self.implications.len());
        let mut queue: Vec<usize> = Vec::new();
        for imp in &self.implications {
            let missing = imp.premise.difference(set).len();
            unmet.push(missing);
            if missing == 0 && closed.insert(imp.conclusion) {
                queue.push(imp.conclusion);
            }
        }
        while let Some(x) = queue.pop() {
            for &k in &self.watchers[x] {
                unmet[k] -= 1;
                if unmet[k] == 0 {
                    let c = self.implications[k].conclusion;
                    if closed.insert(c) {
                        queue.push(c);
                    }
                }
            }
        }
        closed
    }

    pub fn is_closed(&self, set: &ArgumentSet) -> bool {
        self.implications
            .iter()
            .all(|imp| !imp.premise.is_subset(set) || set.contains(imp.conclusion))
    }

    /// Every closed set, in lectic order (NextClosure). Each step costs at
    /// most `bound` closure computations.
    pub fn closed_sets(&self) -> ClosedSets<'_> {
        ClosedSets {
            system: self,
            current: Some(self.closure(&ArgumentSet::empty(self.bound))),
        }
    }

    /// One implication per line as `a,b -> c`, `{}` for an empty premise.
    pub fn render(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for imp in &self.implications {
            if imp.premise.is_empty() {
                out.push_str("{}");
            } else {
                let names: Vec<&str> = imp.premise.iter().map(|x| labels[x].as_str()).collect();
                out.push_str(&names.join(","));
            }
            out.push_str(" -> ");
            out.push_str(&labels[imp.conclusion]);
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ImplicationalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.bound).map(|i| i.to_string()).collect();
        f.write_str(&self.render(&labels))
    }
}

pub struct ClosedSets<'a> {
    system: &'a ImplicationalSystem,
    current: Option<ArgumentSet>,
}

impl Iterator for ClosedSets<'_> {
    type Item = ArgumentSet;

    fn next(&mut self) -> Option<ArgumentSet> {
        let out = self.current.take()?;
        let n = self.system.bound;
        let mut prefix = out.clone();
        for i in (0..n).rev() {
            // prefix = out ∩ {0..i}
            prefix.remove(i);
            if out.contains(i) {
                continue;
            }
            let mut seed = prefix.clone();
            seed.insert(i);
            let candidate = self.system.closure(&seed);
            let new_below = (0..i).any(|j| candidate.contains(j) && !prefix.contains(j));
            if !new_below {
                self.current = Some(candidate);
                break;
            }
        }
        Some(out)
    }
}

/// The implicational system of a framework: one rule `y⁻ → z` per
/// one-directional attack `(y, z)`.
pub fn build_sigma(f: &ArgumentationFramework) -> ImplicationalSystem {
    let rules = f
        .attacks()
        .filter(|&(y, z)| !f.attacks_pair(z, y))
        .map(|(y, z)| Implication::new(f.attackers_of_argument(y).clone(), z));
    ImplicationalSystem::new(f.len(), rules)
}

pub fn closure(sigma: &ImplicationalSystem, set: &ArgumentSet) -> ArgumentSet {
    sigma.closure(set)
}

/// Self-defending test through the implicational system: `S` is
/// self-defending iff its complement is `Σ`-closed.
pub fn is_sd_via_sigma(
    f: &ArgumentationFramework,
    sigma: &ImplicationalSystem,
    set: &ArgumentSet,
) -> Result<bool> {
    if sigma.bound() != f.len() || set.bound() != f.len() {
        return Err(Error::Precondition(format!(
            "bound mismatch: framework {}, system {}, set {}",
            f.len(),
            sigma.bound(),
            set.bound()
        )));
    }
    let complement = set.complement();
    Ok(sigma.closure(&complement) == complement)
}

/// All self-defending sets, as complements of the closed sets of the
/// framework's implicational system.
pub fn self_defending_family(f: &ArgumentationFramework) -> SetFamily {
    let sigma = build_sigma(f);
    SetFamily::from_sets(f.len(), sigma.closed_sets().map(|c| c.complement()))
}

/// Unit-premise system for a family closed under union and intersection.
///
/// Over `S*` (the largest member), `x → z` is emitted for every
/// `z ∈ D(x) ∖ {x}` where `D(x)` is the intersection of the members
/// containing `x`. The closed subsets of `S*` are then exactly the members
/// of the family.
pub fn unit_system_for_family(family: &SetFamily, bound: usize) -> Result<ImplicationalSystem> {
    assert_eq!(family.bound(), bound, "family bound mismatch");
    if !family.contains(&ArgumentSet::empty(bound)) {
        return Err(Error::MissingEmptySet);
    }
    if let Some((a, b)) = family.union_violation() {
        return Err(Error::NotClosed {
            operation: "union",
            left: a.to_vec(),
            right: b.to_vec(),
        });
    }
    if let Some((a, b)) = family.intersection_violation() {
        return Err(Error::NotClosed {
            operation: "intersection",
            left: a.to_vec(),
            right: b.to_vec(),
        });
    }
    let top = family.union_all();
    let mut rules = Vec::new();
    for x in &top {
        let mut down = top.clone();
        for member in family.iter().filter(|m| m.contains(x)) {
            down.intersect_with(member);
        }
        for z in down.iter().filter(|&z| z != x) {
            rules.push(Implication::new(ArgumentSet::singleton(bound, x), z));
        }
    }
    Ok(ImplicationalSystem::new(bound, rules))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::{enum_family, OracleLimit, Semantics};
    use proptest::prelude::*;

    fn rule(f: &ArgumentationFramework, premise: &[&str], conclusion: &str) -> Implication {
        Implication::new(f.set_of_labels(premise), f.index_of(conclusion).unwrap())
    }

    /// Fixpoint iteration straight from the definition.
    fn naive_closure(sigma: &ImplicationalSystem, set: &ArgumentSet) -> ArgumentSet {
        let mut s = set.clone();
        loop {
            let before = s.clone();
            for imp in sigma.implications() {
                if imp.premise.is_subset(&s) {
                    s.insert(imp.conclusion);
                }
            }
            if s == before {
                return s;
            }
        }
    }

    #[test]
    fn running_example_system() {
        let f = fixtures::running();
        let sigma = build_sigma(&f);
        let expected = ImplicationalSystem::new(
            5,
            [
                rule(&f, &["1"], "3"),
                rule(&f, &["2", "4"], "5"),
                rule(&f, &["3", "4"], "1"),
                rule(&f, &["2", "3"], "1"),
            ],
        );
        assert_eq!(sigma, expected);
        assert_eq!(
            sigma.render(f.labels()),
            "1 -> 3\n2,3 -> 1\n2,4 -> 5\n3,4 -> 1\n"
        );

        assert_eq!(
            sigma.closure(&f.set_of_labels(&["1"])),
            f.set_of_labels(&["1", "3"])
        );
        assert_eq!(
            naive_closure(&sigma, &f.set_of_labels(&["1"])),
            f.set_of_labels(&["1", "3"])
        );
        assert!(sigma.closure(&f.empty_set()).is_empty());
        // 124 is not closed: it contains the premise of 1 → 3.
        assert!(!sigma.is_closed(&f.set_of_labels(&["1", "2", "4"])));
    }

    #[test]
    fn chain_system_has_empty_premise() {
        let f = fixtures::chain();
        let sigma = build_sigma(&f);
        let expected = ImplicationalSystem::new(3, [rule(&f, &[], "2"), rule(&f, &["1"], "3")]);
        assert_eq!(sigma, expected);
        assert_eq!(sigma.closure(&f.empty_set()), f.set_of_labels(&["2"]));
        assert_eq!(sigma.render(f.labels()), "{} -> 2\n1 -> 3\n");
    }

    #[test]
    fn symmetric_framework_has_no_rules() {
        let f =
            ArgumentationFramework::with_size(3, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert!(build_sigma(&f).is_empty());
    }

    #[test]
    fn sd_via_sigma_examples() {
        let f = fixtures::running();
        let sigma = build_sigma(&f);
        assert!(is_sd_via_sigma(&f, &sigma, &f.set_of_labels(&["4", "5"])).unwrap());
        assert!(!is_sd_via_sigma(&f, &sigma, &f.set_of_labels(&["5"])).unwrap());
        assert!(is_sd_via_sigma(&f, &sigma, &f.empty_set()).unwrap());
        let other = fixtures::chain();
        assert!(is_sd_via_sigma(&other, &sigma, &other.empty_set()).is_err());
    }

    #[test]
    fn unit_system_examples() {
        let f = fixtures::closed_four();
        let sets: &[&[&str]] = &[
            &[],
            &["1"],
            &["3"],
            &["1", "4"],
            &["1", "3"],
            &["1", "3", "4"],
        ];
        let family = SetFamily::from_sets(4, sets.iter().map(|s| f.set_of_labels(s)));
        let sigma_d = unit_system_for_family(&family, 4).unwrap();
        assert_eq!(
            sigma_d,
            ImplicationalSystem::new(4, [rule(&f, &["4"], "1")])
        );
        let top = family.union_all();
        let closed = SetFamily::from_sets(
            4,
            (0u64..16)
                .map(|m| ArgumentSet::from_mask(4, m))
                .filter(|s| s.is_subset(&top) && sigma_d.is_closed(s)),
        );
        assert_eq!(closed, family);

        let two = SetFamily::from_sets(3, [ArgumentSet::empty(3), ArgumentSet::full(3)]);
        let sys = unit_system_for_family(&two, 3).unwrap();
        assert_eq!(sys.len(), 6);

        let all = SetFamily::from_sets(3, (0u64..8).map(|m| ArgumentSet::from_mask(3, m)));
        assert!(unit_system_for_family(&all, 3).unwrap().is_empty());
    }

    #[test]
    fn unit_system_rejects_unclosed_families() {
        let s = |xs: &[usize]| ArgumentSet::from_indices(3, xs.iter().copied());
        let fam = SetFamily::from_sets(3, [s(&[]), s(&[0]), s(&[1])]);
        assert!(matches!(
            unit_system_for_family(&fam, 3),
            Err(Error::NotClosed {
                operation: "union",
                ..
            })
        ));
        let fam = SetFamily::from_sets(3, [s(&[]), s(&[0, 1]), s(&[1, 2]), s(&[0, 1, 2])]);
        assert!(matches!(
            unit_system_for_family(&fam, 3),
            Err(Error::NotClosed {
                operation: "intersection",
                ..
            })
        ));
        let fam = SetFamily::from_sets(3, [s(&[0])]);
        assert_eq!(unit_system_for_family(&fam, 3), Err(Error::MissingEmptySet));
    }

    fn arb_system(n: usize) -> impl Strategy<Value = ImplicationalSystem> {
        proptest::collection::vec((any::<u8>(), 0..n), 0..8).prop_map(move |rules| {
            ImplicationalSystem::new(
                n,
                rules.into_iter().map(|(m, c)| {
                    Implication::new(ArgumentSet::from_mask(n, m as u64 & 0b1010_1101), c)
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn sigma_characterises_self_defending_sets(f in fixtures::arb_framework(9)) {
            let sigma = build_sigma(&f);
            for m in 0u64..1 << f.len() {
                let s = ArgumentSet::from_mask(f.len(), m);
                prop_assert_eq!(is_sd_via_sigma(&f, &sigma, &s).unwrap(), f.is_self_defending(&s));
            }
            let sd = enum_family(&f, Semantics::SelfDefending, OracleLimit::default()).unwrap();
            prop_assert_eq!(self_defending_family(&f), sd);
        }

        #[test]
        fn closure_is_a_closure_operator(sigma in arb_system(8), a in any::<u8>(), b in any::<u8>()) {
            let s = ArgumentSet::from_mask(8, a as u64);
            let t = s.union(&ArgumentSet::from_mask(8, b as u64));
            let cs = sigma.closure(&s);
            prop_assert_eq!(&cs, &naive_closure(&sigma, &s));
            prop_assert!(s.is_subset(&cs));
            prop_assert!(cs.is_subset(&sigma.closure(&t)));
            prop_assert_eq!(sigma.closure(&cs), cs.clone());
            prop_assert!(sigma.is_closed(&cs));
        }

        #[test]
        fn next_closure_lists_every_closed_set_once(sigma in arb_system(8)) {
            let listed: Vec<_> = sigma.closed_sets().collect();
            let fam = SetFamily::from_sets(8, listed.clone());
            prop_assert_eq!(fam.len(), listed.len());
            let brute = SetFamily::from_sets(
                8,
                (0u64..256).map(|m| ArgumentSet::from_mask(8, m)).filter(|s| sigma.is_closed(s)),
            );
            prop_assert_eq!(fam, brute);
        }

        #[test]
        fn unit_system_reproduces_family(
            top_mask in any::<u8>(),
            pairs in proptest::collection::vec((0usize..7, 0usize..7), 0..10),
        ) {
            // Subsets of a top set closed under unit rules form a family
            // closed under union and intersection.
            let n = 7;
            let top = ArgumentSet::from_mask(n, top_mask as u64);
            let generator = ImplicationalSystem::new(
                n,
                pairs.into_iter().map(|(x, z)| Implication::new(ArgumentSet::singleton(n, x), z)),
            );
            let closed_in_top = |sys: &ImplicationalSystem| {
                SetFamily::from_sets(
                    n,
                    (0u64..1 << n)
                        .map(|m| ArgumentSet::from_mask(n, m))
                        .filter(|s| s.is_subset(&top) && sys.is_closed(s)),
                )
            };
            let family = closed_in_top(&generator);
            let sys = unit_system_for_family(&family, n).unwrap();
            let family_top = family.union_all();
            for imp in sys.implications() {
                prop_assert_eq!(imp.premise.len(), 1);
                prop_assert!(imp.premise.is_subset(&family_top));
            }
            let rebuilt = SetFamily::from_sets(
                n,
                (0u64..1 << n)
                    .map(|m| ArgumentSet::from_mask(n, m))
                    .filter(|s| s.is_subset(&family_top) && sys.is_closed(s)),
            );
            prop_assert_eq!(rebuilt, family);
        }
    }
}
