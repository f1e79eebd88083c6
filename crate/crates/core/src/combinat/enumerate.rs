//! Exhaustive enumeration of the combinatorial families, in lexicographic
//! order of their word encodings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::maps::{Endofunction, ParkingFunction, Permutation};
use super::partitions::SetPartition;
use super::word::{is_initial, is_parking};

/// Resource guard for enumerations. Values come from configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    pub max_objects: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 8,
            max_objects: 20_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_degree(max_degree: usize) -> Self {
        Limits {
            max_degree,
            ..Limits::default()
        }
    }

    pub fn check(&self, what: &str, n: usize, count: u128) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::LimitExceeded {
                what: what.to_string(),
                requested: n,
                limit: self.max_degree,
            });
        }
        if count > self.max_objects {
            return Err(Error::LimitExceeded {
                what: format!("{what} (object count {count})"),
                requested: n,
                limit: self.max_degree,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Endofunctions,
    Permutations,
    Parking,
    NondecreasingParking,
    SetPartitions,
    InitialWords,
    Involutions,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Endofunctions,
        Kind::Permutations,
        Kind::Parking,
        Kind::NondecreasingParking,
        Kind::SetPartitions,
        Kind::InitialWords,
        Kind::Involutions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Endofunctions => "endofunctions",
            Kind::Permutations => "permutations",
            Kind::Parking => "parking",
            Kind::NondecreasingParking => "nondecreasing_parking",
            Kind::SetPartitions => "set_partitions",
            Kind::InitialWords => "initial_words",
            Kind::Involutions => "involutions",
        }
    }

    /// Upper bound on the size of the family, used by the guard.
    fn size_bound(self, n: usize) -> u128 {
        let n128 = n as u128;
        match self {
            Kind::Endofunctions | Kind::InitialWords => n128.pow(n as u32),
            Kind::Parking => (n128 + 1).pow(n.saturating_sub(1) as u32),
            _ => (1..=n128).product(),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::Unknown {
                kind: "family",
                name: s.to_string(),
            })
    }
}

/// All words of length `n` over `[k]`, lexicographically.
#[derive(Clone, Debug)]
pub struct Words {
    k: usize,
    cur: Option<Vec<usize>>,
}

impl Words {
    pub fn new(n: usize, k: usize) -> Self {
        let cur = if n > 0 && k == 0 { None } else { Some(vec![1; n]) };
        Words { k, cur }
    }
}

impl Iterator for Words {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.take()?;
        let mut nxt = out.clone();
        let mut i = nxt.len();
        while i > 0 {
            i -= 1;
            if nxt[i] < self.k {
                nxt[i] += 1;
                self.cur = Some(nxt);
                return Some(out);
            }
            nxt[i] = 1;
        }
        Some(out)
    }
}

/// Permutations of `[n]` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Permutations {
    cur: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            cur: Some((1..=n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.take()?;
        let mut p = out.clone();
        let n = p.len();
        if n >= 2 {
            let mut i = n - 1;
            while i > 0 && p[i - 1] >= p[i] {
                i -= 1;
            }
            if i > 0 {
                let mut j = n - 1;
                while p[j] <= p[i - 1] {
                    j -= 1;
                }
                p.swap(i - 1, j);
                p[i..].reverse();
                self.cur = Some(p);
            }
        }
        Some(out)
    }
}

pub fn endofunctions(n: usize) -> impl Iterator<Item = Endofunction> {
    Words::new(n, n).map(Endofunction::from_vec_unchecked)
}

pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    Permutations::new(n).map(Permutation::from_vec_unchecked)
}

pub fn involutions(n: usize) -> impl Iterator<Item = Permutation> {
    permutations(n).filter(|p| p.is_involution())
}

pub fn parking_functions(n: usize) -> impl Iterator<Item = ParkingFunction> {
    Words::new(n, n)
        .filter(|w| is_parking(w))
        .map(ParkingFunction::from_vec_unchecked)
}

/// Nondecreasing parking functions, generated directly.
pub fn nondecreasing_parking(n: usize) -> Vec<ParkingFunction> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<ParkingFunction>) {
        let i = cur.len();
        if i == n {
            out.push(ParkingFunction::from_vec_unchecked(cur.clone()));
            return;
        }
        let lo = cur.last().copied().unwrap_or(1);
        for x in lo..=i + 1 {
            cur.push(x);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Initial words of length `n`, ordered by maximal letter, then
/// lexicographically.
pub fn initial_words(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    for k in 1..=n {
        out.extend(Words::new(n, k).filter(|w| w.contains(&k) && is_initial(w)));
    }
    out
}

/// Guarded enumeration of any family as word encodings.
pub fn enumerate(kind: Kind, n: usize, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    limits.check(kind.name(), n, kind.size_bound(n))?;
    Ok(match kind {
        Kind::Endofunctions => endofunctions(n).map(|f| f.into_vec()).collect(),
        Kind::Permutations => Permutations::new(n).collect(),
        Kind::Parking => parking_functions(n).map(|p| p.into_vec()).collect(),
        Kind::NondecreasingParking => nondecreasing_parking(n)
            .into_iter()
            .map(|p| p.into_vec())
            .collect(),
        Kind::SetPartitions => SetPartition::all(n).iter().map(|p| p.to_rgs()).collect(),
        Kind::InitialWords => initial_words(n),
        Kind::Involutions => involutions(n).map(|p| p.into_vec()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(kind: Kind, n: usize) -> usize {
        enumerate(kind, n, &Limits::default()).unwrap().len()
    }

    #[test]
    fn family_counts() {
        for n in 0..=5usize {
            assert_eq!(count(Kind::Endofunctions, n), n.pow(n as u32));
            assert_eq!(count(Kind::Permutations, n), (1..=n).product::<usize>());
            assert_eq!(count(Kind::Parking, n), (n + 1).pow(n.saturating_sub(1) as u32));
        }
        let catalan = [1, 1, 2, 5, 14, 42];
        let bell = [1, 1, 2, 5, 15, 52];
        let fubini = [1, 1, 3, 13, 75, 541];
        let inv = [1, 1, 2, 4, 10, 26];
        for n in 0..=5 {
            assert_eq!(count(Kind::NondecreasingParking, n), catalan[n]);
            assert_eq!(count(Kind::SetPartitions, n), bell[n]);
            assert_eq!(count(Kind::InitialWords, n), fubini[n]);
            assert_eq!(count(Kind::Involutions, n), inv[n]);
        }
    }

    #[test]
    fn small_listings() {
        let e = enumerate(Kind::Endofunctions, 2, &Limits::default()).unwrap();
        assert_eq!(e, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(count(Kind::Parking, 3), 16);
        assert_eq!(count(Kind::NondecreasingParking, 3), 5);
        let iw = initial_words(2);
        assert_eq!(iw, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn guard_refuses() {
        let lim = Limits::with_max_degree(3);
        assert!(matches!(
            enumerate(Kind::Endofunctions, 4, &lim),
            Err(Error::LimitExceeded { .. })
        ));
        assert_eq!("set-partitions".parse::<Kind>().unwrap(), Kind::SetPartitions);
        assert!("trees".parse::<Kind>().is_err());
    }
}
