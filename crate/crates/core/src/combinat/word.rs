//! Words over positive integers and the classical operations on them.

use std::fmt;

use crate::error::{Error, Result};

use super::maps::Permutation;
use super::partitions::Composition;

/// A finite word over the positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub(crate) Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::invalid("word", "letters must be positive"));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_letters(&self.0))
    }
}

/// Prints letters as a digit string when every letter is a single digit,
/// and comma-separated otherwise.
pub fn fmt_letters(letters: &[usize]) -> String {
    if letters.iter().all(|&l| l < 10) {
        letters.iter().map(|l| l.to_string()).collect()
    } else {
        letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Ranks of the letters of `w`, ties broken from left to right.
pub fn standardize_slice(w: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank + 1;
    }
    out
}

/// The unique permutation with the same relative order of letters as `w`.
pub fn standardize(w: &[usize]) -> Permutation {
    Permutation::from_vec_unchecked(standardize_slice(w))
}

/// Packs a word: letter values are replaced by their rank among the distinct
/// letters, giving an initial word.
pub fn pack(w: &[usize]) -> Vec<usize> {
    let mut vals: Vec<usize> = w.to_vec();
    vals.sort_unstable();
    vals.dedup();
    w.iter()
        .map(|x| vals.binary_search(x).expect("letter present") + 1)
        .collect()
}

/// Parkization of a word: while the word is not a parking function,
/// decrement every letter larger than the first unfilled spot.
pub fn parkize(w: &[usize]) -> Vec<usize> {
    let n = w.len();
    let mut cur = w.to_vec();
    loop {
        let mut counts = vec![0usize; n + 2];
        for &x in &cur {
            if x <= n {
                counts[x] += 1;
            }
        }
        let mut filled = 0;
        let mut spot = None;
        for i in 1..=n {
            filled += counts[i];
            if filled < i {
                spot = Some(i);
                break;
            }
        }
        match spot {
            None => return cur,
            Some(d) => {
                for x in cur.iter_mut() {
                    if *x > d {
                        *x -= 1;
                    }
                }
            }
        }
    }
}

/// All interleavings of `u` and `v` preserving the order within each word,
/// listed with multiplicity.
pub fn shuffle(u: &[usize], v: &[usize]) -> Vec<Vec<usize>> {
    let n = u.len() + v.len();
    let mut out = Vec::new();
    for mask in subsets_of_size(n, u.len()) {
        let mut w = Vec::with_capacity(n);
        let (mut i, mut j) = (0, 0);
        for pos in 0..n {
            if mask[pos] {
                w.push(u[i]);
                i += 1;
            } else {
                w.push(v[j]);
                j += 1;
            }
        }
        out.push(w);
    }
    out
}

/// Shuffle of `u` with `v` shifted by `|u|`.
pub fn shifted_shuffle(u: &[usize], v: &[usize]) -> Vec<Vec<usize>> {
    let shift = u.len();
    let v: Vec<usize> = v.iter().map(|x| x + shift).collect();
    shuffle(u, &v)
}

/// Boolean masks of length `n` with exactly `k` set positions, in
/// lexicographic order of the set positions.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<bool>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - k {
            cur[i] = true;
            rec(n, k - 1, i + 1, cur, out);
            cur[i] = false;
        }
    }
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur = vec![false; n];
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Number of strict inversions `i < j`, `w_i > w_j`.
pub fn inversions(w: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

/// Composition recording the descents `w_i > w_{i+1}` of `w`.
pub fn descent_composition(w: &[usize]) -> Composition {
    if w.is_empty() {
        return Composition::empty();
    }
    let mut parts = Vec::new();
    let mut run = 1;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    Composition::from_parts_unchecked(parts)
}

/// True when the nondecreasing rearrangement `u` satisfies `u_i <= i`.
pub fn is_parking(w: &[usize]) -> bool {
    let mut s = w.to_vec();
    s.sort_unstable();
    s.iter().enumerate().all(|(i, &x)| x >= 1 && x <= i + 1)
}

/// True when every letter `1..=max` occurs.
pub fn is_initial(w: &[usize]) -> bool {
    let m = w.iter().copied().max().unwrap_or(0);
    let mut seen = vec![false; m + 1];
    for &x in w {
        if x == 0 {
            return false;
        }
        seen[x] = true;
    }
    seen[1..].iter().all(|&b| b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standardization_examples() {
        // aababacacb with a<b<c
        let w = [1, 1, 2, 1, 2, 1, 3, 1, 3, 2];
        assert_eq!(standardize_slice(&w), vec![1, 2, 6, 3, 7, 4, 9, 5, 10, 8]);
        assert_eq!(standardize_slice(&[1, 2, 3]), vec![1, 2, 3]);
        assert_eq!(standardize_slice(&[3, 2, 1]), vec![3, 2, 1]);
        assert!(standardize_slice(&[]).is_empty());
    }

    #[test]
    fn shuffles() {
        let mut s = shuffle(&[1], &[2]);
        s.sort();
        assert_eq!(s, vec![vec![1, 2], vec![2, 1]]);
        let mut s = shifted_shuffle(&[2, 1], &[1]);
        s.sort();
        assert_eq!(s, vec![vec![2, 1, 3], vec![2, 3, 1], vec![3, 2, 1]]);
        assert_eq!(shuffle(&[1, 2], &[3, 4]).len(), 6);
        // multiplicities are kept
        assert_eq!(shuffle(&[1], &[1]), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn statistics() {
        assert_eq!(inversions(&[2, 4, 3, 1]), 4);
        assert_eq!(descent_composition(&[2, 1]).parts(), &[1, 1]);
        assert_eq!(descent_composition(&[1, 2]).parts(), &[2]);
        assert_eq!(descent_composition(&[1, 3, 2, 4]).parts(), &[2, 2]);
    }

    #[test]
    fn parking_and_initial() {
        assert!(is_parking(&[2, 1, 1]));
        assert!(!is_parking(&[2, 2]));
        assert!(is_initial(&[2, 1, 2]));
        assert!(!is_initial(&[1, 3]));
        assert_eq!(pack(&[5, 2, 5, 9]), vec![2, 1, 2, 3]);
        assert_eq!(parkize(&[3, 3]), vec![1, 1]);
        assert_eq!(parkize(&[1, 4, 4]), vec![1, 2, 2]);
        assert_eq!(parkize(&[2, 1, 1]), vec![2, 1, 1]);
    }
}
