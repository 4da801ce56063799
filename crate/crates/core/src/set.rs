//! Fixed-width bit-vector sets over a dense index universe.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

const WORD: usize = 64;

fn words_for(bound: usize) -> usize {
    bound.div_ceil(WORD)
}

/// A subset of `0..bound`.
///
/// Binary operations require both operands to share the same bound and panic
/// otherwise; mixing sets of different frameworks is a programming error.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgumentSet {
    bound: usize,
    words: Vec<u64>,
}

impl ArgumentSet {
    pub fn empty(bound: usize) -> Self {
        Self {
            bound,
            words: vec![0; words_for(bound)],
        }
    }

    pub fn full(bound: usize) -> Self {
        let mut set = Self::empty(bound);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    pub fn singleton(bound: usize, index: usize) -> Self {
        let mut set = Self::empty(bound);
        set.insert(index);
        set
    }

    /// Panics if an index is out of range.
    pub fn from_indices<I: IntoIterator<Item = usize>>(bound: usize, indices: I) -> Self {
        let mut set = Self::empty(bound);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Builds a set from the low `bound` bits of `mask`. Requires `bound <= 64`.
    pub fn from_mask(bound: usize, mask: u64) -> Self {
        assert!(bound <= WORD, "mask construction needs bound <= 64");
        let mut set = Self::empty(bound);
        if bound > 0 {
            set.words[0] = mask;
            set.trim();
        }
        set
    }

    /// The set as a 64-bit mask, when the bound allows it.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        let rem = self.bound % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn bound(&self) -> usize {
        self.bound
    }

    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        index < self.bound && self.words[index / WORD] >> (index % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, index: usize) -> bool {
        assert!(
            index < self.bound,
            "index {index} out of bound {}",
            self.bound
        );
        let w = &mut self.words[index / WORD];
        let bit = 1u64 << (index % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, index: usize) -> bool {
        if index >= self.bound {
            return false;
        }
        let w = &mut self.words[index / WORD];
        let bit = 1u64 << (index % WORD);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_bound(&self, other: &Self) {
        assert_eq!(
            self.bound, other.bound,
            "set operation between different universes"
        );
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_bound(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_bound(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_bound(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// Complement relative to `0..bound`.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_bound(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_bound(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn word_count(&self) -> usize {
        self.words.len()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_index * WORD + bit);
            }
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
    }
}

impl<'a> IntoIterator for &'a ArgumentSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Canonical order: lexicographic on the increasing member lists, so `{}` <
/// `{0}` < `{0,1}` < `{1}`.
impl Ord for ArgumentSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bound
            .cmp(&other.bound)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ArgumentSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgumentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ArgumentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for ArgumentSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A duplicate-free family of sets over one universe, kept in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    bound: usize,
    members: Vec<ArgumentSet>,
}

impl SetFamily {
    pub fn new(bound: usize) -> Self {
        Self {
            bound,
            members: Vec::new(),
        }
    }

    /// Sorts and deduplicates. Panics if a member has a different bound.
    pub fn from_sets<I: IntoIterator<Item = ArgumentSet>>(bound: usize, sets: I) -> Self {
        let mut members: Vec<ArgumentSet> = sets.into_iter().collect();
        for m in &members {
            assert_eq!(m.bound(), bound, "family member from another universe");
        }
        members.sort_unstable();
        members.dedup();
        Self { bound, members }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[ArgumentSet] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ArgumentSet> {
        self.members.iter()
    }

    pub fn contains(&self, set: &ArgumentSet) -> bool {
        self.members.binary_search(set).is_ok()
    }

    /// Inclusion-maximal members.
    pub fn maximal_members(&self) -> SetFamily {
        let mut by_size: Vec<&ArgumentSet> = self.members.iter().collect();
        by_size.sort_by_key(|s| std::cmp::Reverse(s.len()));
        let mut kept: Vec<ArgumentSet> = Vec::new();
        for s in by_size {
            if !kept.iter().any(|k| s.is_subset(k)) {
                kept.push(s.clone());
            }
        }
        SetFamily::from_sets(self.bound, kept)
    }

    /// Inclusion-minimal members.
    pub fn minimal_members(&self) -> SetFamily {
        let mut by_size: Vec<&ArgumentSet> = self.members.iter().collect();
        by_size.sort_by_key(|s| s.len());
        let mut kept: Vec<ArgumentSet> = Vec::new();
        for s in by_size {
            if !kept.iter().any(|k| k.is_subset(s)) {
                kept.push(s.clone());
            }
        }
        SetFamily::from_sets(self.bound, kept)
    }

    pub fn filter<P: FnMut(&ArgumentSet) -> bool>(&self, mut keep: P) -> SetFamily {
        SetFamily {
            bound: self.bound,
            members: self.members.iter().filter(|s| keep(s)).cloned().collect(),
        }
    }

    /// Union of all members, or the empty set for an empty family.
    pub fn union_all(&self) -> ArgumentSet {
        let mut acc = ArgumentSet::empty(self.bound);
        for m in &self.members {
            acc.union_with(m);
        }
        acc
    }

    /// First pair `(a, b)` whose union is not a member.
    pub fn union_violation(&self) -> Option<(ArgumentSet, ArgumentSet)> {
        self.pair_violation(ArgumentSet::union)
    }

    /// First pair `(a, b)` whose intersection is not a member.
    pub fn intersection_violation(&self) -> Option<(ArgumentSet, ArgumentSet)> {
        self.pair_violation(ArgumentSet::intersection)
    }

    fn pair_violation(
        &self,
        op: impl Fn(&ArgumentSet, &ArgumentSet) -> ArgumentSet,
    ) -> Option<(ArgumentSet, ArgumentSet)> {
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                if !self.contains(&op(a, b)) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a ArgumentSet;
    type IntoIter = std::slice::Iter<'a, ArgumentSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(bound: usize, xs: &[usize]) -> ArgumentSet {
        ArgumentSet::from_indices(bound, xs.iter().copied())
    }

    #[test]
    fn complement_stays_in_universe() {
        let s = set(70, &[0, 65]);
        let c = s.complement();
        assert_eq!(c.len(), 68);
        assert!(!c.contains(65));
        assert!(c.contains(69));
        assert!(!c.contains(70));
    }

    #[test]
    fn canonical_order_is_lexicographic_on_member_lists() {
        let fam = SetFamily::from_sets(
            3,
            vec![
                set(3, &[1]),
                set(3, &[0, 1]),
                set(3, &[]),
                set(3, &[0]),
                set(3, &[1]),
            ],
        );
        let lists: Vec<_> = fam.iter().map(|s| s.to_vec()).collect();
        assert_eq!(lists, vec![vec![], vec![0], vec![0, 1], vec![1]]);
    }

    #[test]
    fn maximal_members_examples() {
        let fam = SetFamily::from_sets(4, vec![set(4, &[]), set(4, &[1]), set(4, &[1, 3])]);
        assert_eq!(fam.maximal_members().members(), &[set(4, &[1, 3])]);
        assert!(SetFamily::new(4).maximal_members().is_empty());
    }

    #[test]
    #[should_panic(expected = "different universes")]
    fn mixed_bounds_panic() {
        let _ = set(3, &[0]).union(&set(4, &[0]));
    }

    proptest! {
        #[test]
        fn matches_u128_model(a in any::<u128>(), b in any::<u128>(), bound in 0usize..=128) {
            let mask = if bound == 128 { u128::MAX } else { (1u128 << bound) - 1 };
            let (a, b) = (a & mask, b & mask);
            let to_set = |m: u128| ArgumentSet::from_indices(bound, (0..bound).filter(|i| m >> i & 1 == 1));
            let (sa, sb) = (to_set(a), to_set(b));
            prop_assert_eq!(sa.union(&sb), to_set(a | b));
            prop_assert_eq!(sa.intersection(&sb), to_set(a & b));
            prop_assert_eq!(sa.difference(&sb), to_set(a & !b));
            prop_assert_eq!(sa.complement(), to_set(!a & mask));
            prop_assert_eq!(sa.is_subset(&sb), a & !b == 0);
            prop_assert_eq!(sa.len(), a.count_ones() as usize);
        }
    }
}
