//! Biword realization of `ΦSym` in noncommuting variables `a_{x a}`,
//! truncated to `x ∈ [N_x]` and `a ∈ [N_a]`. Products are concatenations,
//! and each biword is classified by its cycle decomposition, so this checks
//! [`product_phi`](super::product_phi) without cyclic shuffles.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::combinat::cycles::{Cycle, CycleSet};
use crate::combinat::enumerate::Words;
use crate::combinat::maps::Permutation;
use crate::combinat::word::standardize_slice;
use crate::error::{Error, Result};
use crate::linear::LinComb;

/// A biword: pairs `(x_i, a_i)`.
pub type Biword = Vec<(usize, usize)>;

/// `C(w)`: the cycle whose cycle word is the inverse of `std(w)`, with
/// relative positions mapped back through `positions`.
fn cycle_of(sub: &[usize], positions: &[usize]) -> Cycle {
    let std = standardize_slice(sub);
    let mut inv = vec![0; std.len()];
    for (i, &v) in std.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    Cycle::from_word_unchecked(inv.iter().map(|&r| positions[r - 1]).collect())
}

/// The unique `σ` whose `φ_σ` contains the biword.
pub fn classify(w: &[(usize, usize)]) -> Permutation {
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (pos, &(x, _)) in w.iter().enumerate() {
        groups.entry(x).or_default().push(pos + 1);
    }
    let cycles = groups
        .values()
        .map(|ps| {
            let sub: Vec<usize> = ps.iter().map(|&p| w[p - 1].1).collect();
            cycle_of(&sub, ps)
        })
        .collect();
    CycleSet::from_unsorted_unchecked(cycles)
        .to_permutation()
        .expect("groups partition the positions")
}

/// All biwords of `φ_σ` over the truncated alphabets.
pub fn realize(s: &Permutation, nx: usize, na: usize) -> Vec<Biword> {
    let n = s.len();
    let cs = s.cycles();
    let mut block = vec![0; n];
    for (i, c) in cs.iter().enumerate() {
        for &p in c.word() {
            block[p - 1] = i;
        }
    }
    let k = cs.len();
    let mut out = Vec::new();
    let seconds: Vec<Vec<usize>> = Words::new(n, na)
        .filter(|a| {
            let probe: Biword = (0..n).map(|i| (block[i], a[i])).collect();
            &classify(&probe) == s
        })
        .collect();
    fn injections(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in 1..=n {
            if !cur.contains(&a) {
                cur.push(a);
                injections(k, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut firsts = Vec::new();
    injections(k, nx, &mut Vec::new(), &mut firsts);
    for f in &firsts {
        for a in &seconds {
            out.push((0..n).map(|i| (f[block[i]], a[i])).collect());
        }
    }
    out
}

/// Multiplies the truncated realizations of `φ_σ` and `φ_τ` and reads the
/// result back. Fails if the product is not a 0/1 combination of whole
/// `φ` orbits, or if the alphabets are too small to separate them.
pub fn product_by_biwords(s: &Permutation, t: &Permutation, nx: usize, na: usize) -> Result<LinComb<Permutation>> {
    let needed = s.len() + t.len();
    if nx < needed || na < needed {
        return Err(Error::TruncationTooSmall {
            given: nx.min(na),
            needed,
        });
    }
    let us = realize(s, nx, na);
    let vs = realize(t, nx, na);
    let mut hits: BTreeMap<Permutation, usize> = BTreeMap::new();
    for u in &us {
        for v in &vs {
            let mut w = u.clone();
            w.extend_from_slice(v);
            *hits.entry(classify(&w)).or_default() += 1;
        }
    }
    let mut out = LinComb::zero();
    for (g, count) in hits {
        let full = realize(&g, nx, na).len();
        if count % full != 0 {
            return Err(Error::invalid("biword product", format!("partial orbit of {g}")));
        }
        out.add_term(g, BigInt::from(count / full));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::notation::parse_permutation;
    use crate::phisym::product_phi;

    #[test]
    fn classify_examples() {
        // x x y x x over a b c d e with std(abde)^{-1} a cycle word of (1342)
        let w: Biword = vec![(1, 1), (1, 3), (2, 1), (1, 4), (1, 2)];
        let s = classify(&w);
        assert_eq!(s.cycles().len(), 2);
        let p = |s: &str| parse_permutation(s).unwrap();
        assert_eq!(classify(&[(1, 5), (2, 5)]), p("12"));
        assert_eq!(classify(&[(1, 1), (1, 2)]), p("21"));
    }

    #[test]
    fn small_products_agree() {
        let p = |s: &str| parse_permutation(s).unwrap();
        for (a, b) in [("1", "1"), ("12", "1"), ("21", "1"), ("1", "21")] {
            assert_eq!(product_by_biwords(&p(a), &p(b), 3, 3).unwrap(), product_phi(&p(a), &p(b)));
        }
    }
}
