//! Realization on `N` q-commuting letters, `x_j x_i = q x_i x_j` for
//! `j > i`. Elements are polynomials in normally ordered monomials
//! `x_1^{e_1} ⋯ x_N^{e_N}`, so products only need to count the q-factors
//! produced by reordering.

use std::collections::BTreeMap;

use crate::combinat::enumerate::Words;
use crate::combinat::maps::Permutation;
use crate::combinat::partitions::Composition;
use crate::combinat::word::{inversions, standardize};
use crate::linear::LinComb;
use crate::ring::{QPoly, Ring};

/// Exponent vectors of normally ordered monomials with `ℤ[q]` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolyRing {
    n: usize,
    terms: BTreeMap<Vec<usize>, QPoly>,
}

impl QPolyRing {
    pub fn zero(n: usize) -> Self {
        QPolyRing { n, terms: BTreeMap::new() }
    }

    fn add(&mut self, e: Vec<usize>, c: QPoly) {
        let slot = self.terms.entry(e.clone()).or_insert_with(QPoly::zero);
        slot.add_assign_ref(&c);
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Reordering `u·v` costs one `q` for each pair `x_i` of `u`, `x_j` of
    /// `v` with `i > j`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QPolyRing::zero(self.n);
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                let mut k = 0;
                for i in 0..self.n {
                    for j in 0..i {
                        k += u[i] * v[j];
                    }
                }
                let e: Vec<usize> = u.iter().zip(v).map(|(a, b)| a + b).collect();
                out.add(e, c.mul_ref(d).mul_ref(&QPoly::q_pow(k)));
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `M_I(x_1, …, x_N)`.
pub fn realize_m(c: &Composition, n: usize) -> QPolyRing {
    let mut out = QPolyRing::zero(n);
    let k = c.len();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut e = vec![0; n];
        let idx = (0..n).filter(|i| mask >> i & 1 == 1);
        for (i, &part) in idx.zip(c.parts()) {
            e[i] = part;
        }
        out.add(e, QPoly::one());
    }
    out
}

pub fn realize_m_comb(x: &LinComb<Composition, QPoly>, n: usize) -> QPolyRing {
    let mut out = QPolyRing::zero(n);
    for (c, k) in x.iter() {
        for (e, d) in realize_m(c, n).terms {
            out.add(e, d.mul_ref(k));
        }
    }
    out
}

/// Image of `F_σ = Σ_{std(w) = σ^{-1}} w` under `a_i ↦ x_i`, computed word
/// by word: each word contributes `q^{inv(w)}` times its sorted monomial.
pub fn realize_f(s: &Permutation, n: usize) -> QPolyRing {
    let target = s.inverse();
    let mut out = QPolyRing::zero(n);
    for w in Words::new(s.len(), n) {
        if standardize(&w) != target {
            continue;
        }
        let mut e = vec![0; n];
        for &x in &w {
            e[x - 1] += 1;
        }
        out.add(e, QPoly::q_pow(inversions(&w)));
    }
    out
}

pub fn realize_f_comb(x: &LinComb<Permutation, QPoly>, n: usize) -> QPolyRing {
    let mut out = QPolyRing::zero(n);
    for (s, k) in x.iter() {
        for (e, d) in realize_f(s, n).terms {
            out.add(e, d.mul_ref(k));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::notation::parse_composition;

    #[test]
    fn q_commutation() {
        let x1 = realize_m(&parse_composition("1").unwrap(), 2);
        let sq = x1.mul(&x1);
        // (x1 + x2)^2 = x1^2 + (1+q) x1 x2 + x2^2
        assert_eq!(sq.terms[&vec![1, 1]], QPoly::one().add_ref(&QPoly::q()));
        assert_eq!(sq.len(), 3);
    }
}
