//! Endofunctions of `[n]` encoded as words `f(1) f(2) ... f(n)`, with the
//! bijective and parking special cases as separate label types.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::Label;

use super::cycles::CycleSet;
use super::partitions::{Composition, IntegerPartition, SetPartition};
use super::word::{fmt_letters, is_parking};

macro_rules! map_label {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
        pub struct $name(Vec<usize>);

        impl $name {
            pub fn from_vec_unchecked(v: Vec<usize>) -> Self {
                $name(v)
            }

            pub fn empty() -> Self {
                $name(Vec::new())
            }

            pub fn into_vec(self) -> Vec<usize> {
                self.0
            }

            pub fn as_slice(&self) -> &[usize] {
                &self.0
            }
        }

        impl Ord for $name {
            fn cmp(&self, other: &Self) -> Ordering {
                self.0
                    .len()
                    .cmp(&other.0.len())
                    .then_with(|| self.0.cmp(&other.0))
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl Deref for $name {
            type Target = [usize];
            fn deref(&self) -> &[usize] {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&fmt_letters(&self.0))
            }
        }

        impl Label for $name {
            fn degree(&self) -> usize {
                self.0.len()
            }
        }

        impl MapLabel for $name {
            fn from_map_unchecked(v: Vec<usize>) -> Self {
                $name(v)
            }
            fn map(&self) -> &[usize] {
                &self.0
            }
        }
    };
}

map_label!(
    /// A map `[n] -> [n]`.
    Endofunction
);
map_label!(
    /// A bijective endofunction.
    Permutation
);
map_label!(
    /// A word whose nondecreasing rearrangement `u` satisfies `u_i <= i`.
    /// Its letters lie in `[n]`, so it is also an endofunction.
    ParkingFunction
);

impl Endofunction {
    pub fn new(v: Vec<usize>) -> Result<Self> {
        let n = v.len();
        if v.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::invalid(
                "endofunction",
                format!("{} has a letter outside 1..={n}", fmt_letters(&v)),
            ));
        }
        Ok(Endofunction(v))
    }
}

impl Permutation {
    pub fn new(v: Vec<usize>) -> Result<Self> {
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &x in &v {
            if x == 0 || x > n || seen[x] {
                return Err(Error::invalid(
                    "permutation",
                    format!("{} is not a rearrangement of 1..={n}", fmt_letters(&v)),
                ));
            }
            seen[x] = true;
        }
        Ok(Permutation(v))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    pub fn cycles(&self) -> CycleSet {
        CycleSet::from_permutation(self)
    }

    pub fn from_cycles(cycles: &CycleSet) -> Result<Self> {
        cycles.to_permutation()
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    pub fn sign(&self) -> i64 {
        let n = self.0.len();
        if (n - self.num_cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Smallest `k >= 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(|c| c.len())
            .fold(1, num_integer::lcm)
    }

    pub fn is_involution(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &x)| self.0[x - 1] == i + 1)
    }

    pub fn is_derangement(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x != i + 1)
    }

    /// Ordered cycle type: cycle lengths with cycles sorted by their minima.
    pub fn ordered_cycle_type(&self) -> Composition {
        self.cycles().ordered_type()
    }

    pub fn cycle_type(&self) -> IntegerPartition {
        self.cycles().cycle_type()
    }

    /// Set partition of `[n]` into cycle supports.
    pub fn csupp(&self) -> SetPartition {
        self.cycles().supports()
    }

    pub fn as_endofunction(&self) -> Endofunction {
        Endofunction(self.0.clone())
    }
}

impl ParkingFunction {
    pub fn new(v: Vec<usize>) -> Result<Self> {
        if !is_parking(&v) {
            return Err(Error::invalid(
                "parking function",
                format!("{} is not a parking function", fmt_letters(&v)),
            ));
        }
        Ok(ParkingFunction(v))
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn as_endofunction(&self) -> Endofunction {
        Endofunction(self.0.clone())
    }
}

impl TryFrom<Endofunction> for Permutation {
    type Error = Error;
    fn try_from(f: Endofunction) -> Result<Self> {
        Permutation::new(f.0)
    }
}

impl TryFrom<Endofunction> for ParkingFunction {
    type Error = Error;
    fn try_from(f: Endofunction) -> Result<Self> {
        ParkingFunction::new(f.0)
    }
}

/// Shared structure of the three map label types.
pub trait MapLabel: Label {
    fn from_map_unchecked(v: Vec<usize>) -> Self;
    fn map(&self) -> &[usize];

    /// `f • g`: `g` placed after `f` with its letters shifted by `deg f`.
    fn shifted_concat(&self, other: &Self) -> Self {
        Self::from_map_unchecked(shifted_concat_maps(self.map(), other.map()))
    }

    /// Positions `k` in `0..=n` where the map splits as a shifted
    /// concatenation of a map of `[k]` and one of `[n-k]`.
    fn cut_points(&self) -> Vec<usize> {
        cut_points(self.map())
    }

    fn is_connected(&self) -> bool {
        !self.map().is_empty() && self.cut_points().len() == 2
    }

    /// Unique maximal factorization into connected maps.
    fn connected_factorization(&self) -> Vec<Self> {
        let h = self.map();
        let cuts = cut_points(h);
        cuts.windows(2)
            .map(|w| {
                let (a, b) = (w[0], w[1]);
                Self::from_map_unchecked(h[a..b].iter().map(|x| x - a).collect())
            })
            .collect()
    }

    /// Splits `h = f • g` at the cut `k`.
    fn split_at_cut(&self, k: usize) -> (Self, Self) {
        let h = self.map();
        (
            Self::from_map_unchecked(h[..k].to_vec()),
            Self::from_map_unchecked(h[k..].iter().map(|x| x - k).collect()),
        )
    }

    /// The map induced on a stable subset of positions, relabelled
    /// increasingly onto `[|subset|]`.
    fn restrict_std(&self, subset: &[usize]) -> Self {
        Self::from_map_unchecked(restrict_std(self.map(), subset))
    }
}

pub fn shifted_concat_maps(f: &[usize], g: &[usize]) -> Vec<usize> {
    let n = f.len();
    f.iter().copied().chain(g.iter().map(|x| x + n)).collect()
}

pub fn cut_points(h: &[usize]) -> Vec<usize> {
    let n = h.len();
    // prefix_max[k] = max of h[0..k]; suffix_min[k] = min of h[k..n]
    let mut prefix_max = vec![0; n + 1];
    for k in 0..n {
        prefix_max[k + 1] = prefix_max[k].max(h[k]);
    }
    let mut suffix_min = vec![usize::MAX; n + 1];
    for k in (0..n).rev() {
        suffix_min[k] = suffix_min[k + 1].min(h[k]);
    }
    (0..=n)
        .filter(|&k| prefix_max[k] <= k && suffix_min[k] > k)
        .collect()
}

pub fn restrict_std(h: &[usize], subset: &[usize]) -> Vec<usize> {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    let rank = |x: usize| sorted.binary_search(&x).expect("subset is stable") + 1;
    sorted.iter().map(|&i| rank(h[i - 1])).collect()
}

/// Weakly connected components of the functional graph `i -> h(i)`, each a
/// sorted list of points, ordered by their minima.
pub fn components(h: &[usize]) -> Vec<Vec<usize>> {
    let n = h.len();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nxt = p[y];
            p[y] = r;
            y = nxt;
        }
        r
    }
    for i in 1..=n {
        let a = find(&mut parent, i);
        let b = find(&mut parent, h[i - 1]);
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 1..=n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// `τ^{-1} ∘ F ∘ τ` for a permutation word `τ` and a map `F`.
pub fn conjugate(f: &[usize], tau: &[usize]) -> Vec<usize> {
    let n = f.len();
    let mut inv = vec![0; n + 1];
    for (i, &t) in tau.iter().enumerate() {
        inv[t] = i + 1;
    }
    (0..n).map(|i| inv[f[tau[i] - 1]]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[usize]) -> Endofunction {
        Endofunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn shifted_concat_examples() {
        assert_eq!(e(&[1, 2]).shifted_concat(&e(&[2, 1])), e(&[1, 2, 4, 3]));
        assert_eq!(
            e(&[4, 2, 3, 2, 2]).shifted_concat(&e(&[2, 2])),
            e(&[4, 2, 3, 2, 2, 7, 7])
        );
        assert_eq!(e(&[1]).shifted_concat(&e(&[3, 3, 1])), e(&[1, 4, 4, 2]));
    }

    #[test]
    fn factorization_examples() {
        let h = e(&[4, 2, 3, 2, 2, 7, 7]);
        assert_eq!(
            h.connected_factorization(),
            vec![e(&[4, 2, 3, 2, 2]), e(&[2, 2])]
        );
        let h = e(&[6, 2, 6, 1, 2, 4]);
        assert_eq!(h.connected_factorization(), vec![h.clone()]);
        assert!(h.is_connected());
        assert_eq!(
            e(&[1, 2, 4, 3]).connected_factorization(),
            vec![e(&[1]), e(&[1]), e(&[2, 1])]
        );
        assert!(Endofunction::empty().connected_factorization().is_empty());
    }

    #[test]
    fn permutation_basics() {
        let s = Permutation::new(vec![3, 1, 5, 4, 2]).unwrap();
        assert_eq!(s.inverse().compose(&s), Permutation::identity(5));
        assert_eq!(s.ordered_cycle_type().parts(), &[4, 1]);
        assert_eq!(s.csupp().to_string(), "{1,2,3,5|4}");
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![2, 1]).unwrap().is_involution());
        assert_eq!(Permutation::new(vec![2, 3, 1]).unwrap().order(), 3);
        assert_eq!(Permutation::new(vec![2, 1, 3]).unwrap().sign(), -1);
    }

    #[test]
    fn cycle_type_of_52341() {
        let s = Permutation::new(vec![5, 2, 3, 4, 1]).unwrap();
        assert_eq!(s.csupp().to_string(), "{1,5|2|3|4}");
        assert_eq!(s.ordered_cycle_type().parts(), &[2, 1, 1, 1]);
        assert_eq!(s.cycle_type().parts(), &[2, 1, 1, 1]);
    }

    #[test]
    fn conjugation_and_components() {
        // τ = 231 conjugating 133 gives 223
        assert_eq!(conjugate(&[1, 3, 3], &[2, 3, 1]), vec![2, 2, 3]);
        assert_eq!(components(&[2, 1, 4, 4]), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(restrict_std(&[1, 3, 3, 2], &[2, 3]), vec![2, 2]);
    }

    #[test]
    fn parking_validation() {
        assert!(ParkingFunction::new(vec![4, 1, 3, 1, 1, 6, 6]).is_ok());
        assert!(ParkingFunction::new(vec![2, 2]).is_err());
        assert!(Endofunction::new(vec![3, 1]).is_err());
    }
}
