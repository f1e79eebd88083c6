//! Twisted q-deformations: `QSym_q`, `NCSF_q`, `FQSym_q`, the morphism
//! `φ : FQSym_q → QSym_q`, and the one-parameter family of ordinary
//! coproducts obtained by deforming only on connected permutations.
//!
//! Twisted algebras override [`HopfAlgebra::chi`] with
//! `χ(b, a′) = q^{deg b · deg a′}`, so the generic compatibility check
//! tests `Δ(xy) = Δ(x) ·_χ Δ(y)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::combinat::enumerate;
use crate::combinat::maps::Permutation;
use crate::combinat::partitions::Composition;
use crate::combinat::word::{descent_composition, inversions, shifted_shuffle, standardize};
use crate::hopf::HopfAlgebra;
use crate::linear::{chi_q, LinComb, Tensor2};
use crate::ring::{QPoly, Ring};

pub mod oracle;
pub mod rewrite;

type QComb<L> = LinComb<L, QPoly>;
type QTensor<L> = Tensor2<L, QPoly>;

fn perm(v: Vec<usize>) -> Permutation {
    Permutation::from_vec_unchecked(v)
}

fn comp(v: Vec<usize>) -> Composition {
    Composition::from_parts_unchecked(v)
}

/// `F_α F_β = Σ F_σ` over the shifted shuffle.
pub fn product_f(a: &Permutation, b: &Permutation) -> QComb<Permutation> {
    let mut out = LinComb::zero();
    for w in shifted_shuffle(a.as_slice(), b.as_slice()) {
        out.add_term(perm(w), QPoly::one());
    }
    out
}

/// Inversions of `σ` with the larger letter in the first `k` positions and
/// the smaller one after: `inv(σ) − inv(α) − inv(β)` for `σ = α·β`.
fn cross_inversions(s: &[usize], k: usize) -> usize {
    inversions(s) - inversions(&s[..k]) - inversions(&s[k..])
}

/// `Δ_q F_σ = Σ_{α·β=σ} q^{inv(α,β)} F_{Std α} ⊗ F_{Std β}`.
pub fn coproduct_q_f(s: &Permutation) -> QTensor<Permutation> {
    let v = s.as_slice();
    let mut out = Tensor2::zero();
    for k in 0..=v.len() {
        out.add_term(
            standardize(&v[..k]),
            standardize(&v[k..]),
            QPoly::q_pow(cross_inversions(v, k)),
        );
    }
    out
}

/// Free quasi-symmetric functions with the q-twisted coproduct.
#[derive(Clone, Copy, Debug, Default)]
pub struct FQSymQ;

impl HopfAlgebra for FQSymQ {
    type L = Permutation;
    type R = QPoly;
    fn id(&self) -> &'static str {
        "fqsym-q"
    }
    fn basis_name(&self) -> &'static str {
        "F"
    }
    fn basis(&self, n: usize) -> Vec<Permutation> {
        enumerate::permutations(n).collect()
    }
    fn unit(&self) -> Permutation {
        Permutation::empty()
    }
    fn product(&self, a: &Permutation, b: &Permutation) -> QComb<Permutation> {
        product_f(a, b)
    }
    fn coproduct(&self, a: &Permutation) -> QTensor<Permutation> {
        coproduct_q_f(a)
    }
    fn chi(&self, deg_b: usize, deg_a: usize) -> QPoly {
        chi_q(deg_b, deg_a)
    }
}

/// Product of `M_I M_J` on q-commuting letters: a quasi-shuffle in which
/// each part `j` of `J` placed strictly before a part `i` of `I` costs
/// `q^{ij}`.
pub fn product_q_m(a: &Composition, b: &Composition) -> QComb<Composition> {
    fn rec(a: &[usize], b: &[usize], cur: &mut Vec<usize>, weight: usize, out: &mut QComb<Composition>) {
        match (a.split_first(), b.split_first()) {
            (None, None) => out.add_term(comp(cur.clone()), QPoly::q_pow(weight)),
            (Some((&x, ra)), None) => {
                cur.push(x);
                rec(ra, b, cur, weight, out);
                cur.pop();
            }
            (None, Some((&y, rb))) => {
                cur.push(y);
                rec(a, rb, cur, weight, out);
                cur.pop();
            }
            (Some((&x, ra)), Some((&y, rb))) => {
                cur.push(x);
                rec(ra, b, cur, weight, out);
                cur.pop();
                // y jumps over every remaining part of a
                let over: usize = a.iter().sum();
                cur.push(y);
                rec(a, rb, cur, weight + y * over, out);
                cur.pop();
                cur.push(x + y);
                rec(ra, rb, cur, weight + y * ra.iter().sum::<usize>(), out);
                cur.pop();
            }
        }
    }
    let mut out = LinComb::zero();
    rec(a.parts(), b.parts(), &mut Vec::new(), 0, &mut out);
    out
}

/// Deconcatenation.
pub fn coproduct_q_m(c: &Composition) -> QTensor<Composition> {
    let p = c.parts();
    let mut out = Tensor2::zero();
    for k in 0..=p.len() {
        out.add_term(comp(p[..k].to_vec()), comp(p[k..].to_vec()), QPoly::one());
    }
    out
}

/// `Δ_q S_n = Σ_{i+j=n} q^{ij} S_i ⊗ S_j`.
pub fn coproduct_q_s(n: usize) -> QTensor<Composition> {
    let part = |i: usize| if i == 0 { Composition::empty() } else { comp(vec![i]) };
    let mut out = Tensor2::zero();
    for i in 0..=n {
        out.add_term(part(i), part(n - i), QPoly::q_pow(i * (n - i)));
    }
    out
}

fn product_s(a: &Composition, b: &Composition) -> QComb<Composition> {
    LinComb::basis(a.concat(b))
}

/// `Δ_q S^I`, the χ-twisted product of the `Δ_q S_{i_k}`.
pub fn coproduct_q_s_basis(c: &Composition) -> QTensor<Composition> {
    let mut acc = Tensor2::basis(Composition::empty(), Composition::empty());
    for &i in c.parts() {
        acc = acc.mul_twisted(&coproduct_q_s(i), product_s, chi_q);
    }
    acc
}

/// Quasi-symmetric functions on q-commuting letters, basis `M_I`.
#[derive(Clone, Copy, Debug, Default)]
pub struct QSymQ;

/// Its graded dual, basis `S^I`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NCSFQ;

impl HopfAlgebra for QSymQ {
    type L = Composition;
    type R = QPoly;
    fn id(&self) -> &'static str {
        "qsym-q"
    }
    fn basis_name(&self) -> &'static str {
        "M"
    }
    fn basis(&self, n: usize) -> Vec<Composition> {
        Composition::all(n)
    }
    fn unit(&self) -> Composition {
        Composition::empty()
    }
    fn product(&self, a: &Composition, b: &Composition) -> QComb<Composition> {
        product_q_m(a, b)
    }
    fn coproduct(&self, a: &Composition) -> QTensor<Composition> {
        coproduct_q_m(a)
    }
    fn chi(&self, deg_b: usize, deg_a: usize) -> QPoly {
        chi_q(deg_b, deg_a)
    }
}

impl HopfAlgebra for NCSFQ {
    type L = Composition;
    type R = QPoly;
    fn id(&self) -> &'static str {
        "ncsf-q"
    }
    fn basis_name(&self) -> &'static str {
        "S"
    }
    fn basis(&self, n: usize) -> Vec<Composition> {
        Composition::all(n)
    }
    fn unit(&self) -> Composition {
        Composition::empty()
    }
    fn product(&self, a: &Composition, b: &Composition) -> QComb<Composition> {
        product_s(a, b)
    }
    fn coproduct(&self, a: &Composition) -> QTensor<Composition> {
        coproduct_q_s_basis(a)
    }
    fn chi(&self, deg_b: usize, deg_a: usize) -> QPoly {
        chi_q(deg_b, deg_a)
    }
}

/// `Δ(xy) = Δ(x) ·_χ Δ(y)`.
pub fn twisted_morphism_check<H: HopfAlgebra>(alg: &H, x: &LinComb<H::L, H::R>, y: &LinComb<H::L, H::R>) -> bool {
    alg.comul(&alg.mul(x, y)) == alg.tensor_mul(&alg.comul(x), &alg.comul(y))
}

/// Runs [`twisted_morphism_check`] on all pairs of basis elements of total
/// degree at most `max_degree`, returning the first failing pair.
pub fn twisted_morphism_exhaustive<H: HopfAlgebra>(alg: &H, max_degree: usize) -> Option<(H::L, H::L)> {
    for n in 0..=max_degree {
        for m in 0..=max_degree - n {
            for a in alg.basis(n) {
                for b in alg.basis(m) {
                    let (x, y) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
                    if !twisted_morphism_check(alg, &x, &y) {
                        return Some((a, b));
                    }
                }
            }
        }
    }
    None
}

/// `⟨S^I, M_I⟩ = q^{Σ C(i_k, 2)}`. With this normalization the `S_n`
/// coproduct `Σ q^{ij} S_i ⊗ S_j` is dual to the q-quasi-shuffle; the plain
/// pairing `⟨S^I, M_J⟩ = δ_{IJ}` is not (`⟨M_1 M_1, S_2⟩ = 1` while
/// `⟨M_1 ⊗ M_1, Δ_q S_2⟩ = q`).
pub fn pairing_weight(c: &Composition) -> QPoly {
    QPoly::q_pow(c.parts().iter().map(|&i| i * i.saturating_sub(1) / 2).sum())
}

/// Checks `⟨M_I M_J, S^K⟩ = ⟨M_I ⊗ M_J, Δ_q S^K⟩` under the weighted
/// pairing, for `|K| ≤ max_degree`. Returns the first failing triple.
pub fn qsym_ncsf_duality(max_degree: usize) -> Option<(Composition, Composition, Composition)> {
    for n in 0..=max_degree {
        for k in Composition::all(n) {
            let dk = coproduct_q_s_basis(&k);
            for d in 0..=n {
                for a in Composition::all(d) {
                    for b in Composition::all(n - d) {
                        let lhs = product_q_m(&a, &b).coeff(&k).mul_ref(&pairing_weight(&k));
                        let rhs = dk.coeff(&a, &b).mul_ref(&pairing_weight(&a)).mul_ref(&pairing_weight(&b));
                        if lhs != rhs {
                            return Some((a, b, k));
                        }
                    }
                }
            }
        }
    }
    None
}

/// `F_I = Σ_{J ≼ I} M_J` over refinements `J` of `I`.
pub fn fundamental_to_m(c: &Composition) -> QComb<Composition> {
    let n = c.size();
    let fixed = c.descent_set();
    let free: Vec<usize> = (1..n).filter(|d| !fixed.contains(d)).collect();
    let mut out = LinComb::zero();
    for mask in 0u32..(1 << free.len()) {
        let mut ds: Vec<usize> = fixed.clone();
        ds.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &d)| d));
        ds.sort_unstable();
        out.add_term(Composition::from_descent_set(n, &ds), QPoly::one());
    }
    out
}

/// `φ(F_σ) = q^{ℓ(σ)} F_{c(σ)}`, in the fundamental basis.
pub fn phi_map(s: &Permutation) -> QComb<Composition> {
    LinComb::term(descent_composition(s.as_slice()), QPoly::q_pow(inversions(s.as_slice())))
}

/// `φ(F_σ)` in the monomial basis.
pub fn phi_map_m(s: &Permutation) -> QComb<Composition> {
    phi_map(s).apply(fundamental_to_m)
}

/// Checks `φ(F_σ F_τ) = φ(F_σ) φ(F_τ)` for total degree at most
/// `max_degree`, with the right side multiplied in `QSym_q`.
pub fn phi_morphism_check(max_degree: usize) -> Option<(Permutation, Permutation)> {
    for n in 0..=max_degree {
        for m in 0..=max_degree - n {
            for a in enumerate::permutations(n) {
                for b in enumerate::permutations(m) {
                    let lhs = product_f(&a, &b).apply(phi_map_m);
                    let rhs = phi_map_m(&a).mul_with(&phi_map_m(&b), product_q_m);
                    if lhs != rhs {
                        return Some((a, b));
                    }
                }
            }
        }
    }
    None
}

/// Same check for the coproducts: `(φ⊗φ) Δ_q F_σ = Δ_q φ(F_σ)`.
pub fn phi_comorphism_check(max_degree: usize) -> Option<Permutation> {
    for n in 0..=max_degree {
        for s in enumerate::permutations(n) {
            let lhs = coproduct_q_f(&s).apply_each(phi_map_m, phi_map_m);
            let rhs = phi_map_m(&s).apply_tensor(coproduct_q_m);
            if lhs != rhs {
                return Some(s);
            }
        }
    }
    None
}

/// A permutation is connected when no proper prefix is a permutation of
/// `1..k`.
pub fn is_connected(s: &Permutation) -> bool {
    let v = s.as_slice();
    let mut max = 0;
    for (i, &x) in v.iter().enumerate() {
        max = max.max(x);
        if max == i + 1 && i + 1 < v.len() {
            return false;
        }
    }
    true
}

/// The unique factorization `σ = σ_1 • ⋯ • σ_k` into connected
/// permutations under shifted concatenation.
pub fn connected_factors(s: &Permutation) -> Vec<Permutation> {
    let v = s.as_slice();
    let mut out = Vec::new();
    let (mut start, mut max) = (0, 0);
    for (i, &x) in v.iter().enumerate() {
        max = max.max(x);
        if max == i + 1 {
            out.push(perm(v[start..=i].iter().map(|y| y - start).collect()));
            start = i + 1;
        }
    }
    out
}

/// The coproduct obtained by keeping `Δ_q` on connected `F_σ` and
/// extending multiplicatively with the ordinary tensor product. With
/// `q = Some(v)` the parameter is specialized.
///
/// `P_σ = F_{σ_1} ⋯ F_{σ_k}` equals `F_σ` plus terms with fewer connected
/// factors, so `F_σ` is recovered by recursion on the number of factors.
pub fn restricted_coproduct(s: &Permutation, q: Option<i64>) -> QTensor<Permutation> {
    let mut memo = BTreeMap::new();
    restricted_rec(s, q, &mut memo)
}

fn restricted_rec(
    s: &Permutation,
    q: Option<i64>,
    memo: &mut BTreeMap<Permutation, QTensor<Permutation>>,
) -> QTensor<Permutation> {
    if let Some(t) = memo.get(s) {
        return t.clone();
    }
    let spec = |t: QTensor<Permutation>| match q {
        Some(v) => t.map_coeffs(|c| c.specialize(v)),
        None => t,
    };
    let factors = connected_factors(s);
    let out = if factors.len() <= 1 {
        spec(coproduct_q_f(s))
    } else {
        let mut expansion = LinComb::basis(Permutation::empty());
        let mut delta = Tensor2::basis(Permutation::empty(), Permutation::empty());
        for f in &factors {
            expansion = expansion.mul_with(&LinComb::basis(f.clone()), product_f);
            delta = delta.mul(&spec(coproduct_q_f(f)), product_f);
        }
        for (t, c) in expansion.iter() {
            if t != s {
                delta.add_scaled(&restricted_rec(t, q, memo), &c.neg_ref());
            }
        }
        delta
    };
    memo.insert(s.clone(), out.clone());
    out
}

/// `Δ₀`: [`restricted_coproduct`] at `q = 0`.
pub fn q0_coproduct(s: &Permutation) -> QTensor<Permutation> {
    restricted_coproduct(s, Some(0))
}

/// `FQSym` with the restricted coproduct, an ordinary bialgebra for each
/// value of the parameter.
#[derive(Clone, Copy, Debug, Default)]
pub struct FQSymRestricted {
    pub q: Option<i64>,
}

impl HopfAlgebra for FQSymRestricted {
    type L = Permutation;
    type R = QPoly;
    fn id(&self) -> &'static str {
        "fqsym-restricted"
    }
    fn basis_name(&self) -> &'static str {
        "F"
    }
    fn basis(&self, n: usize) -> Vec<Permutation> {
        enumerate::permutations(n).collect()
    }
    fn unit(&self) -> Permutation {
        Permutation::empty()
    }
    fn product(&self, a: &Permutation, b: &Permutation) -> QComb<Permutation> {
        product_f(a, b)
    }
    fn coproduct(&self, a: &Permutation) -> QTensor<Permutation> {
        restricted_coproduct(a, self.q)
    }
}

/// Swap-invariance of `Δ₀ F_σ` for all `σ` of degree at most `max_degree`.
pub fn cocommutativity_check(max_degree: usize) -> Option<Permutation> {
    (1..=max_degree)
        .flat_map(enumerate::permutations)
        .find(|s| {
            let d = q0_coproduct(s);
            d.swap() != d
        })
}

/// The ordinary coproduct of `FQSym`, for comparison with `Δ_q` at `q = 1`.
pub fn coproduct_f(s: &Permutation) -> Tensor2<Permutation, BigInt> {
    let v = s.as_slice();
    Tensor2::from_terms((0..=v.len()).map(|k| ((standardize(&v[..k]), standardize(&v[k..])), BigInt::from(1))))
}
