//! Cycles and disjoint cycle decompositions.

use std::fmt;

use crate::error::{Error, Result};

use super::maps::Permutation;
use super::partitions::{Composition, IntegerPartition, SetPartition};

/// A cyclic orbit, stored by its cycle word starting at the minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Builds a cycle from any of its cycle words.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::invalid("cycle", "empty cycle"));
        }
        let mut sorted = word.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted[0] == 0 {
            return Err(Error::invalid("cycle", format!("{word:?} repeats a point")));
        }
        Ok(Self::from_word_unchecked(word))
    }

    pub(crate) fn from_word_unchecked(mut word: Vec<usize>) -> Self {
        let pos = word
            .iter()
            .enumerate()
            .min_by_key(|(_, &x)| x)
            .map(|(i, _)| i)
            .unwrap_or(0);
        word.rotate_left(pos);
        Cycle(word)
    }

    /// Canonical cycle word, minimum first.
    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// All cycle words, one per starting point.
    pub fn rotations(&self) -> Vec<Vec<usize>> {
        (0..self.0.len())
            .map(|k| {
                let mut w = self.0.clone();
                w.rotate_left(k);
                w
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> usize {
        self.0[0]
    }

    pub fn support(&self) -> Vec<usize> {
        let mut s = self.0.clone();
        s.sort_unstable();
        s
    }

    pub fn successor(&self, x: usize) -> Option<usize> {
        let i = self.0.iter().position(|&y| y == x)?;
        Some(self.0[(i + 1) % self.0.len()])
    }

    pub fn shifted(&self, by: usize) -> Cycle {
        Cycle(self.0.iter().map(|x| x + by).collect())
    }

    /// Relabels the points through `f`, which must be injective.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Cycle {
        Cycle::from_word_unchecked(self.0.iter().map(|&x| f(x)).collect())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&x| x >= 10) { " " } else { "" };
        let inner: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", inner.join(sep))
    }
}

/// A set of cycles with pairwise disjoint supports, kept sorted by minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycleSet(Vec<Cycle>);

impl CycleSet {
    pub fn new(mut cycles: Vec<Cycle>) -> Result<Self> {
        let mut pts: Vec<usize> = cycles.iter().flat_map(|c| c.0.iter().copied()).collect();
        pts.sort_unstable();
        if pts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("cycle set", "supports overlap"));
        }
        cycles.sort();
        Ok(CycleSet(cycles))
    }

    pub(crate) fn from_unsorted_unchecked(mut cycles: Vec<Cycle>) -> Self {
        cycles.sort();
        CycleSet(cycles)
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut word = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                word.push(x);
                x = p[x - 1];
            }
            cycles.push(Cycle(word));
        }
        CycleSet(cycles)
    }

    /// Recomposes the permutation; the supports must cover `[n]` exactly.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let n = self.size();
        let mut img = vec![0; n];
        for c in &self.0 {
            for (i, &x) in c.0.iter().enumerate() {
                if x == 0 || x > n || img[x - 1] != 0 {
                    return Err(Error::invalid(
                        "cycle set",
                        format!("{self} does not cover 1..={n}"),
                    ));
                }
                img[x - 1] = c.0[(i + 1) % c.0.len()];
            }
        }
        Permutation::new(img)
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of points.
    pub fn size(&self) -> usize {
        self.0.iter().map(|c| c.len()).sum()
    }

    pub fn shifted(&self, by: usize) -> CycleSet {
        CycleSet(self.0.iter().map(|c| c.shifted(by)).collect())
    }

    pub fn union(&self, other: &CycleSet) -> Result<CycleSet> {
        CycleSet::new(self.0.iter().chain(other.0.iter()).cloned().collect())
    }

    pub fn ordered_type(&self) -> Composition {
        Composition::from_parts_unchecked(self.0.iter().map(|c| c.len()).collect())
    }

    pub fn cycle_type(&self) -> IntegerPartition {
        IntegerPartition::from_parts_unchecked(self.0.iter().map(|c| c.len()).collect())
    }

    pub fn supports(&self) -> SetPartition {
        SetPartition::from_blocks_unchecked(self.0.iter().map(|c| c.support()).collect())
    }

    /// Renumbers the points of a subset of cycles order-preservingly onto
    /// `[k]` and returns the resulting permutation.
    pub fn standardized_sub(&self, chosen: &[usize]) -> Permutation {
        let mut pts: Vec<usize> = chosen
            .iter()
            .flat_map(|&i| self.0[i].0.iter().copied())
            .collect();
        pts.sort_unstable();
        let rank = |x: usize| pts.binary_search(&x).unwrap() + 1;
        let cycles: Vec<Cycle> = chosen.iter().map(|&i| self.0[i].relabel(rank)).collect();
        CycleSet::from_unsorted_unchecked(cycles)
            .to_permutation()
            .expect("standardized cycles cover [k]")
    }
}

impl fmt::Display for CycleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(p(&[3, 1, 5, 4, 2]).cycles().to_string(), "(1352)(4)");
        assert_eq!(p(&[2, 4, 3, 1]).cycles().to_string(), "(124)(3)");
        let id = Permutation::identity(4).cycles();
        assert_eq!(id.len(), 4);
        assert!(id.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn roundtrip_and_canonical_rotation() {
        let c = Cycle::new(vec![5, 2, 1]).unwrap();
        assert_eq!(c.word(), &[1, 5, 2]);
        assert_eq!(c.successor(2), Some(1));
        let gap = CycleSet::new(vec![Cycle::new(vec![3]).unwrap(), c.clone()]).unwrap();
        assert!(gap.to_permutation().is_err());
        let cs = CycleSet::new(vec![
            Cycle::new(vec![3]).unwrap(),
            Cycle::new(vec![4]).unwrap(),
            c,
        ])
        .unwrap();
        assert_eq!(cs.to_string(), "(152)(3)(4)");
        let s = cs.to_permutation().unwrap();
        assert_eq!(s.as_slice(), &[5, 1, 3, 4, 2]);
        assert_eq!(s.cycles(), cs);
    }

    #[test]
    fn overlapping_rejected() {
        let a = Cycle::new(vec![1, 2]).unwrap();
        let b = Cycle::new(vec![2, 3]).unwrap();
        assert!(CycleSet::new(vec![a, b]).is_err());
        assert!(Cycle::new(vec![1, 1]).is_err());
    }

    #[test]
    fn standardized_subsets() {
        // (1592)(36)(4)(78): the subset (1592)(4) gives (1452)(3)
        let cs = CycleSet::new(vec![
            Cycle::new(vec![1, 5, 9, 2]).unwrap(),
            Cycle::new(vec![3, 6]).unwrap(),
            Cycle::new(vec![4]).unwrap(),
            Cycle::new(vec![7, 8]).unwrap(),
        ])
        .unwrap();
        assert_eq!(cs.standardized_sub(&[0, 2]).cycles().to_string(), "(1452)(3)");
        assert_eq!(cs.standardized_sub(&[1, 3]).cycles().to_string(), "(12)(34)");
    }
}
