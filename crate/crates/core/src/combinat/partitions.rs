//! Compositions, integer partitions and set partitions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::Label;

fn fmt_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "({})", inner.join(","))
}

fn graded_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let sa: usize = a.iter().sum();
    let sb: usize = b.iter().sum();
    sa.cmp(&sb).then_with(|| a.cmp(b))
}

/// A sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("composition", "parts must be positive"));
        }
        Ok(Composition(parts))
    }

    pub fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        Composition(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Partial sums strictly inside `(0, n)`: the descent set.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    pub fn from_descent_set(n: usize, descents: &[usize]) -> Composition {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for &d in descents {
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Composition(parts)
    }

    /// Decreasing rearrangement.
    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::from_parts_unchecked(self.0.clone())
    }

    /// All compositions of `n`, lexicographic in their parts.
    pub fn all(n: usize) -> Vec<Composition> {
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if n == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=n {
                cur.push(p);
                rec(n - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        graded_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl Label for Composition {
    fn degree(&self) -> usize {
        self.size()
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct IntegerPartition(Vec<usize>);

impl IntegerPartition {
    /// Accepts parts in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition", "parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntegerPartition(parts))
    }

    /// Sorts the parts; they must be positive.
    pub fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition(parts)
    }

    pub fn empty() -> Self {
        IntegerPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part value to multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn union(&self, other: &IntegerPartition) -> IntegerPartition {
        IntegerPartition::from_parts_unchecked(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn conjugate(&self) -> IntegerPartition {
        let first = self.0.first().copied().unwrap_or(0);
        IntegerPartition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// Dominance order `self <= other`.
    pub fn dominated_by(&self, other: &IntegerPartition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<IntegerPartition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
            if n == 0 {
                out.push(IntegerPartition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for IntegerPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        graded_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for IntegerPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl Label for IntegerPartition {
    fn degree(&self) -> usize {
        self.size()
    }
}

/// A set partition of `[n]`. Blocks are increasing and sorted by their
/// minima, which is the lexicographic order on their increasing words.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct SetPartition(Vec<Vec<usize>>);

impl SetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::invalid("set partition", "empty block"));
            }
            for &x in b {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::invalid(
                        "set partition",
                        format!("blocks do not partition 1..={n}"),
                    ));
                }
                seen[x] = true;
            }
        }
        Ok(Self::from_blocks_unchecked(blocks))
    }

    /// Normalizes block order; blocks must partition `[n]`.
    pub fn from_blocks_unchecked(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        SetPartition(blocks)
    }

    /// From a word: positions carrying equal letters form a block.
    pub fn from_word_kernel(w: &[usize]) -> Self {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &x) in w.iter().enumerate() {
            groups.entry(x).or_default().push(i + 1);
        }
        Self::from_blocks_unchecked(groups.into_values().collect())
    }

    pub fn empty() -> Self {
        SetPartition(Vec::new())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn num_blocks(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|b| b.len()).sum()
    }

    /// Block sizes in canonical block order.
    pub fn ordered_type(&self) -> Composition {
        Composition(self.0.iter().map(|b| b.len()).collect())
    }

    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::from_parts_unchecked(self.0.iter().map(|b| b.len()).collect())
    }

    /// Restricted growth word: position `i` gets the index of its block.
    pub fn to_rgs(&self) -> Vec<usize> {
        let mut w = vec![0; self.size()];
        for (k, b) in self.0.iter().enumerate() {
            for &x in b {
                w[x - 1] = k + 1;
            }
        }
        w
    }

    pub fn shifted(&self, by: usize) -> SetPartition {
        SetPartition(
            self.0
                .iter()
                .map(|b| b.iter().map(|x| x + by).collect())
                .collect(),
        )
    }

    /// `π′ | π″` with `π″` shifted past `π′`.
    pub fn shifted_union(&self, other: &SetPartition) -> SetPartition {
        let n = self.size();
        let mut blocks = self.0.clone();
        blocks.extend(other.shifted(n).0);
        Self::from_blocks_unchecked(blocks)
    }

    /// Order-preserving renumbering of a union of blocks onto `[k]`.
    pub fn standardized_sub(&self, chosen: &[usize]) -> SetPartition {
        let mut pts: Vec<usize> = chosen.iter().flat_map(|&i| self.0[i].iter().copied()).collect();
        pts.sort_unstable();
        let rank = |x: usize| pts.binary_search(&x).unwrap() + 1;
        Self::from_blocks_unchecked(
            chosen
                .iter()
                .map(|&i| self.0[i].iter().map(|&x| rank(x)).collect())
                .collect(),
        )
    }

    /// All set partitions coarser than or equal to `self`.
    pub fn coarsenings(&self) -> Vec<SetPartition> {
        SetPartition::all(self.num_blocks())
            .into_iter()
            .map(|grouping| {
                Self::from_blocks_unchecked(
                    grouping
                        .0
                        .iter()
                        .map(|g| g.iter().flat_map(|&i| self.0[i - 1].iter().copied()).collect())
                        .collect(),
                )
            })
            .collect()
    }

    /// All set partitions of `[n]`, in lexicographic order of their
    /// restricted growth words.
    pub fn all(n: usize) -> Vec<SetPartition> {
        fn rec(i: usize, n: usize, max: usize, w: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
            if i == n {
                out.push(SetPartition::from_word_kernel(w));
                return;
            }
            for b in 1..=max + 1 {
                w.push(b);
                rec(i + 1, n, max.max(b), w, out);
                w.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, n, 0, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for SetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.to_rgs().cmp(&other.to_rgs()))
    }
}

impl PartialOrd for SetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .0
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

impl Label for SetPartition {
    fn degree(&self) -> usize {
        self.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let sp = SetPartition::new(vec![vec![3, 4], vec![5, 1], vec![2]]).unwrap();
        assert_eq!(sp.to_string(), "{1,5|2|3,4}");
        assert_eq!(sp.ordered_type().to_string(), "(2,1,2)");
        assert_eq!(
            IntegerPartition::new(vec![1, 3, 2, 3]).unwrap().to_string(),
            "(3,3,2,1)"
        );
        assert_eq!(SetPartition::empty().to_string(), "{}");
        assert!(SetPartition::new(vec![vec![1], vec![1]]).is_err());
    }

    #[test]
    fn counts() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(SetPartition::all(n).len(), b);
        }
        let p = [1, 1, 2, 3, 5, 7, 11, 15];
        for (n, &c) in p.iter().enumerate() {
            assert_eq!(IntegerPartition::all(n).len(), c);
        }
        assert_eq!(Composition::all(5).len(), 16);
    }

    #[test]
    fn descents_roundtrip() {
        for c in Composition::all(6) {
            assert_eq!(Composition::from_descent_set(6, &c.descent_set()), c);
        }
    }

    #[test]
    fn conjugate_and_dominance() {
        let l = IntegerPartition::new(vec![3, 1, 1]).unwrap();
        assert_eq!(l.conjugate().parts(), &[3, 1, 1]);
        let l = IntegerPartition::new(vec![4, 2]).unwrap();
        assert_eq!(l.conjugate().parts(), &[2, 2, 1, 1]);
        assert!(IntegerPartition::new(vec![2, 2]).unwrap().dominated_by(&IntegerPartition::new(vec![3, 1]).unwrap()));
    }

    #[test]
    fn coarsenings_of_three_singletons() {
        let sp = SetPartition::from_word_kernel(&[1, 2, 3]);
        assert_eq!(sp.coarsenings().len(), 5);
        let sp = SetPartition::from_word_kernel(&[1, 1, 2]);
        assert_eq!(sp.coarsenings().len(), 2);
    }
}
