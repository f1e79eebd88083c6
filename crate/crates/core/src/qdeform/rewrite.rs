//! Oriented q-congruences on words. Every rule swaps an adjacent descent
//! `ca → ac` (`a < c`) and multiplies by `q`, so rewriting terminates
//! after at most `inv(w)` steps and the q-exponent of a normal form is the
//! drop in inversions.
//!
//! - `qS` (sylvester): `c a v b → q a c v b` with `a ≤ b < c`.
//! - `qH` (hypoplactic): `qS` together with `b v c a → q b v a c`,
//!   `a < b ≤ c`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::combinat::enumerate::{self, Words};
use crate::combinat::word::{fmt_letters, inversions};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum System {
    QH,
    QS,
}

impl System {
    pub fn name(self) -> &'static str {
        match self {
            System::QH => "qH",
            System::QS => "qS",
        }
    }
}

impl FromStr for System {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qH" | "qh" | "hypoplactic" => Ok(System::QH),
            "qS" | "qs" | "sylvester" => Ok(System::QS),
            _ => Err(Error::Parse(format!("unknown congruence `{s}`"))),
        }
    }
}

/// A normal form together with the power of `q` collected on the way:
/// `w ≡ q^exponent · rep`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QWordClass {
    pub rep: Vec<usize>,
    pub exponent: usize,
}

impl fmt::Display for QWordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            0 => write!(f, "{}", fmt_letters(&self.rep)),
            1 => write!(f, "q·{}", fmt_letters(&self.rep)),
            k => write!(f, "q^{k}·{}", fmt_letters(&self.rep)),
        }
    }
}

/// Positions `i` where some rule rewrites `w_i w_{i+1}`.
pub fn redexes(w: &[usize], sys: System) -> Vec<usize> {
    let n = w.len();
    (0..n.saturating_sub(1))
        .filter(|&i| {
            let (c, a) = (w[i], w[i + 1]);
            if a >= c {
                return false;
            }
            let sylvester = w[i + 2..].iter().any(|&b| a <= b && b < c);
            let hypo = sys == System::QH && w[..i].iter().any(|&b| a < b && b <= c);
            sylvester || hypo
        })
        .collect()
}

/// Rewrites the leftmost redex until none is left.
pub fn q_rewrite(w: &[usize], sys: System) -> QWordClass {
    let mut cur = w.to_vec();
    let mut exponent = 0;
    while let Some(&i) = redexes(&cur, sys).first() {
        cur.swap(i, i + 1);
        exponent += 1;
    }
    QWordClass { rep: cur, exponent }
}

/// Every normal form reachable from `w` through any order of rewrites.
pub fn all_normal_forms(w: &[usize], sys: System) -> BTreeSet<QWordClass> {
    fn rec(w: &[usize], sys: System, memo: &mut BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>>) -> BTreeSet<Vec<usize>> {
        if let Some(s) = memo.get(w) {
            return s.clone();
        }
        let rs = redexes(w, sys);
        let out = if rs.is_empty() {
            BTreeSet::from([w.to_vec()])
        } else {
            let mut acc = BTreeSet::new();
            for i in rs {
                let mut v = w.to_vec();
                v.swap(i, i + 1);
                acc.extend(rec(&v, sys, memo));
            }
            acc
        };
        memo.insert(w.to_vec(), out.clone());
        out
    }
    let inv = inversions(w);
    rec(w, sys, &mut BTreeMap::new())
        .into_iter()
        .map(|rep| {
            let exponent = inv - inversions(&rep);
            QWordClass { rep, exponent }
        })
        .collect()
}

/// Searches words of length at most `max_len` over `letters` letters for
/// one with two distinct normal forms.
pub fn confluence_counterexample(sys: System, max_len: usize, letters: usize) -> Option<Vec<usize>> {
    (0..=max_len)
        .flat_map(|n| Words::new(n, letters))
        .find(|w| all_normal_forms(w, sys).len() != 1)
}

/// Number of classes among permutations of `n`, forgetting q-powers.
pub fn class_census(sys: System, n: usize) -> usize {
    enumerate::permutations(n)
        .map(|s| q_rewrite(s.as_slice(), sys).rep)
        .collect::<BTreeSet<_>>()
        .len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(q_rewrite(&[2, 2, 2], System::QH), QWordClass { rep: vec![2, 2, 2], exponent: 0 });
        // b c a with a < b <= c
        assert_eq!(q_rewrite(&[2, 3, 1], System::QH), QWordClass { rep: vec![2, 1, 3], exponent: 1 });
        // 231 is a sylvester normal form: no b in [a, c) after "31"
        assert_eq!(q_rewrite(&[2, 3, 1], System::QS).exponent, 0);
        assert_eq!(q_rewrite(&[3, 1, 2], System::QS), QWordClass { rep: vec![1, 3, 2], exponent: 1 });
    }

    #[test]
    fn small_census() {
        assert_eq!((1..=4).map(|n| class_census(System::QS, n)).collect::<Vec<_>>(), vec![1, 2, 5, 14]);
        assert_eq!((1..=4).map(|n| class_census(System::QH, n)).collect::<Vec<_>>(), vec![1, 2, 4, 8]);
    }
}
