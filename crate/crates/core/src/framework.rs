//! Argumentation frameworks: arguments interned to dense indices plus a
//! directed attack relation, with the attack-neighbourhood queries every
//! semantics is built from.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::misenum::UndirectedGraph;
use crate::set::ArgumentSet;

/// An argument: its dense index and external name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Argument<'a> {
    pub id: usize,
    pub label: &'a str,
}

/// `⟨A, R⟩` with `A = 0..n`.
///
/// Immutable once built. Per-argument attack rows are cached in both
/// directions so set-level queries are word-parallel unions.
#[derive(Clone, PartialEq, Eq)]
pub struct ArgumentationFramework {
    labels: Vec<String>,
    attacks: BTreeSet<(usize, usize)>,
    // outgoing[x] = {x}⁺, incoming[x] = {x}⁻
    outgoing: Vec<ArgumentSet>,
    incoming: Vec<ArgumentSet>,
}

impl ArgumentationFramework {
    /// Builds a framework from labels and index pairs. Duplicate pairs are
    /// merged.
    pub fn new<I>(labels: Vec<String>, attacks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut seen = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::Precondition(format!(
                    "argument {i} has an empty label"
                )));
            }
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::Precondition(format!("duplicate label `{l}`")));
            }
        }
        let mut set = BTreeSet::new();
        for (a, b) in attacks {
            if a >= n || b >= n {
                return Err(Error::Precondition(format!(
                    "attack ({a},{b}) outside the {n} arguments"
                )));
            }
            set.insert((a, b));
        }
        Ok(Self::from_parts(labels, set))
    }

    fn from_parts(labels: Vec<String>, attacks: BTreeSet<(usize, usize)>) -> Self {
        let n = labels.len();
        let mut outgoing = vec![ArgumentSet::empty(n); n];
        let mut incoming = vec![ArgumentSet::empty(n); n];
        for &(a, b) in &attacks {
            outgoing[a].insert(b);
            incoming[b].insert(a);
        }
        Self {
            labels,
            attacks,
            outgoing,
            incoming,
        }
    }

    /// Arguments labelled `0..n`.
    pub fn with_size<I>(n: usize, attacks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new((0..n).map(|i| i.to_string()).collect(), attacks)
    }

    /// Builds from label pairs; every label mentioned in `attacks` must
    /// appear in `arguments`.
    pub fn from_labels(arguments: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let labels: Vec<String> = arguments.iter().map(|s| s.to_string()).collect();
        let index: HashMap<&str, usize> =
            arguments.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Precondition(format!("undeclared argument `{name}`")))
        };
        let pairs = attacks
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels, pairs)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn argument(&self, index: usize) -> Argument<'_> {
        Argument {
            id: index,
            label: &self.labels[index],
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Attacks in lexicographic order.
    pub fn attacks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.attacks.iter().copied()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    #[inline]
    pub fn attacks_pair(&self, attacker: usize, target: usize) -> bool {
        self.outgoing[attacker].contains(target)
    }

    /// `{x}⁺`.
    pub fn targets_of(&self, x: usize) -> &ArgumentSet {
        &self.outgoing[x]
    }

    /// `{x}⁻`.
    pub fn attackers_of_argument(&self, x: usize) -> &ArgumentSet {
        &self.incoming[x]
    }

    pub fn empty_set(&self) -> ArgumentSet {
        ArgumentSet::empty(self.len())
    }

    pub fn universe(&self) -> ArgumentSet {
        ArgumentSet::full(self.len())
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, indices: I) -> ArgumentSet {
        ArgumentSet::from_indices(self.len(), indices)
    }

    /// Looks labels up; panics on an unknown label (fixture helper).
    pub fn set_of_labels(&self, labels: &[&str]) -> ArgumentSet {
        self.set_of(labels.iter().map(|l| {
            self.index_of(l)
                .unwrap_or_else(|| panic!("unknown argument `{l}`"))
        }))
    }

    pub fn labels_of(&self, set: &ArgumentSet) -> Vec<&str> {
        set.iter().map(|i| self.label(i)).collect()
    }

    fn check(&self, set: &ArgumentSet) {
        assert_eq!(
            set.bound(),
            self.len(),
            "set bound does not match framework"
        );
    }

    /// `S⁺`: arguments attacked by some member of `set`.
    pub fn attacked_by(&self, set: &ArgumentSet) -> ArgumentSet {
        self.check(set);
        let mut out = self.empty_set();
        for x in set {
            out.union_with(&self.outgoing[x]);
        }
        out
    }

    /// `S⁻`: arguments attacking some member of `set`.
    pub fn attackers_of(&self, set: &ArgumentSet) -> ArgumentSet {
        self.check(set);
        let mut out = self.empty_set();
        for x in set {
            out.union_with(&self.incoming[x]);
        }
        out
    }

    /// `Γ(S) = S⁺ ∪ S⁻`.
    pub fn gamma(&self, set: &ArgumentSet) -> ArgumentSet {
        let mut out = self.attacked_by(set);
        out.union_with(&self.attackers_of(set));
        out
    }

    /// `Γ({x})`.
    pub fn neighbours(&self, x: usize) -> ArgumentSet {
        self.outgoing[x].union(&self.incoming[x])
    }

    pub fn is_conflict_free(&self, set: &ArgumentSet) -> bool {
        self.check(set);
        set.iter().all(|x| self.outgoing[x].is_disjoint(set))
    }

    pub fn is_self_defending(&self, set: &ArgumentSet) -> bool {
        self.attackers_of(set).is_subset(&self.attacked_by(set))
    }

    pub fn is_admissible(&self, set: &ArgumentSet) -> bool {
        self.is_conflict_free(set) && self.is_self_defending(set)
    }

    /// `S(AF)`: the self-attacking arguments.
    pub fn self_attacking(&self) -> ArgumentSet {
        self.set_of((0..self.len()).filter(|&x| self.attacks_pair(x, x)))
    }

    pub fn max_in_degree(&self) -> usize {
        self.incoming
            .iter()
            .map(ArgumentSet::len)
            .max()
            .unwrap_or(0)
    }

    /// Same arguments, attack relation extended by `extra`.
    pub fn with_added_attacks<I>(&self, extra: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut attacks = self.attacks.clone();
        for (a, b) in extra {
            assert!(a < self.len() && b < self.len(), "attack outside framework");
            attacks.insert((a, b));
        }
        Self::from_parts(self.labels.clone(), attacks)
    }

    /// Undirected conflict graph on the non-self-attacking arguments.
    pub fn conflict_graph(&self) -> ConflictGraph {
        let loops = self.self_attacking();
        let arguments: Vec<usize> = (0..self.len()).filter(|&x| !loops.contains(x)).collect();
        let mut position = vec![usize::MAX; self.len()];
        for (v, &x) in arguments.iter().enumerate() {
            position[x] = v;
        }
        let mut graph = UndirectedGraph::new(arguments.len());
        for &(a, b) in &self.attacks {
            if a != b && position[a] != usize::MAX && position[b] != usize::MAX {
                graph.add_edge(position[a], position[b]);
            }
        }
        ConflictGraph {
            graph,
            arguments,
            bound: self.len(),
        }
    }
}

impl std::fmt::Debug for ArgumentationFramework {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let attacks: Vec<(&str, &str)> = self
            .attacks
            .iter()
            .map(|&(a, b)| (self.label(a), self.label(b)))
            .collect();
        f.debug_struct("ArgumentationFramework")
            .field("arguments", &self.labels)
            .field("attacks", &attacks)
            .finish()
    }
}

/// Conflict graph of a framework: vertex `v` stands for argument
/// `arguments[v]`; self-attackers are dropped.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    pub graph: UndirectedGraph,
    pub arguments: Vec<usize>,
    bound: usize,
}

impl ConflictGraph {
    /// Maps a vertex set back to an argument set of the source framework.
    pub fn to_arguments(&self, vertices: &ArgumentSet) -> ArgumentSet {
        ArgumentSet::from_indices(self.bound, vertices.iter().map(|v| self.arguments[v]))
    }

    /// Edges as argument pairs `(a, b)` with `a < b`, sorted.
    pub fn argument_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .graph
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.arguments[u], self.arguments[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges
    }
}
