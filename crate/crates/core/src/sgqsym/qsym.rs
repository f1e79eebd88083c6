//! Quasi-symmetric and symmetric functions inside the permutation algebra:
//! `uq_I = Σ_{K(σ)=I} M_σ` and `ul_λ = Σ_{Z(σ)=λ} M_σ`, together with the
//! determinant, permanent and immanant identities for `j: Sym → SGQSym`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::combinat::enumerate;
use crate::combinat::maps::Permutation;
use crate::combinat::partitions::{Composition, IntegerPartition};
use crate::combinat::word::{shuffle, subsets_of_size};
use crate::eqsym::oracle::{realize_lincomb, OracleMonomial, OraclePoly};
use crate::eqsym::{self, MBasis};
use crate::hopf::{closure_check, Check, HopfAlgebra};
use crate::linear::{LinComb, Tensor2};
use crate::symfunc::{Basis, SymFunc};

/// `uq_{I′} uq_{I″}`: the shuffle of the parts, with multiplicity.
pub fn product_uq(a: &Composition, b: &Composition) -> LinComb<Composition> {
    LinComb::from_labels(shuffle(a.parts(), b.parts()).into_iter().map(Composition::from_parts_unchecked))
}

/// Deconcatenation.
pub fn coproduct_uq(c: &Composition) -> Tensor2<Composition> {
    let p = c.parts();
    let mut out = Tensor2::zero();
    for k in 0..=p.len() {
        out.add_term(
            Composition::from_parts_unchecked(p[..k].to_vec()),
            Composition::from_parts_unchecked(p[k..].to_vec()),
            BigInt::one(),
        );
    }
    out
}

/// `ul_λ ul_μ = ∏_i C(m_i(λ)+m_i(μ), m_i(λ)) ul_{λ∪μ}`.
pub fn product_ul(a: &IntegerPartition, b: &IntegerPartition) -> LinComb<IntegerPartition> {
    let ma = a.multiplicities();
    let mb = b.multiplicities();
    let mut c = BigInt::one();
    for (part, &k) in &ma {
        let l = mb.get(part).copied().unwrap_or(0);
        c *= binomial(BigInt::from(k + l), BigInt::from(k));
    }
    LinComb::term(a.union(b), c)
}

/// `Δ ul_λ = Σ ul_μ ⊗ ul_ν` over sub-multisets `μ ⊆ λ`, `ν = λ ∖ μ`.
pub fn coproduct_ul(l: &IntegerPartition) -> Tensor2<IntegerPartition> {
    let mult: Vec<(usize, usize)> = l.multiplicities().into_iter().collect();
    let mut out = Tensor2::zero();
    fn rec(
        i: usize,
        mult: &[(usize, usize)],
        left: &mut Vec<usize>,
        right: &mut Vec<usize>,
        out: &mut Tensor2<IntegerPartition>,
    ) {
        if i == mult.len() {
            out.add_term(
                IntegerPartition::from_parts_unchecked(left.clone()),
                IntegerPartition::from_parts_unchecked(right.clone()),
                BigInt::one(),
            );
            return;
        }
        let (part, m) = mult[i];
        for k in 0..=m {
            let (ll, rl) = (left.len(), right.len());
            left.extend(std::iter::repeat_n(part, k));
            right.extend(std::iter::repeat_n(part, m - k));
            rec(i + 1, mult, left, right, out);
            left.truncate(ll);
            right.truncate(rl);
        }
    }
    rec(0, &mult, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// `uq_I` in the `M_σ` basis.
pub fn uq_to_m(c: &Composition) -> LinComb<Permutation> {
    LinComb::from_labels(enumerate::permutations(c.size()).filter(|s| &s.ordered_cycle_type() == c))
}

/// `ul_λ` in the `M_σ` basis.
pub fn ul_to_m(l: &IntegerPartition) -> LinComb<Permutation> {
    LinComb::from_labels(enumerate::permutations(l.size()).filter(|s| &s.cycle_type() == l))
}

/// Image of `uq_I` in the `M_σ` basis, extended linearly.
pub fn embed_uq(x: &LinComb<Composition>) -> LinComb<Permutation> {
    x.apply(uq_to_m)
}

pub fn embed_ul(x: &LinComb<IntegerPartition>) -> LinComb<Permutation> {
    x.apply(ul_to_m)
}

/// `z_λ = ∏ i^{m_i} m_i!`.
pub fn z(l: &IntegerPartition) -> BigInt {
    let mut out = BigInt::one();
    for (part, m) in l.multiplicities() {
        for j in 1..=m {
            out *= part * j;
        }
    }
    out
}

/// `j(f)` for a symmetric function, through `p_λ ↦ z_λ ul_λ`.
pub fn j(f: &SymFunc) -> LinComb<Permutation> {
    let p = f.convert(Basis::P).expect("small degree");
    let mut out = LinComb::zero();
    for (l, c) in p.coeffs.iter() {
        let c = c * z(l);
        assert!(c.is_integer(), "j has integer coefficients");
        out.add_scaled(&ul_to_m(l), &c.to_integer());
    }
    out
}

/// `Σ_{|I|=n} Σ_{τ} w(τ) ∏_{k} x_{I_k, I_{τ(k)}}`, the sum of the weighted
/// diagonal minors of size `n` of a generic `N × N` matrix.
pub fn diagonal_minor_sum(n: usize, n_vars: usize, weight: impl Fn(&Permutation) -> BigInt) -> OraclePoly {
    let perms: Vec<(Permutation, BigInt)> = enumerate::permutations(n)
        .map(|t| {
            let w = weight(&t);
            (t, w)
        })
        .collect();
    let mut out = OraclePoly::new();
    for mask in subsets_of_size(n_vars, n) {
        let idx: Vec<usize> = (1..=n_vars).filter(|&i| mask[i - 1]).collect();
        for (t, w) in &perms {
            if *w == BigInt::from(0) {
                continue;
            }
            let mono: OracleMonomial = (0..n).map(|k| (idx[k], idx[t.as_slice()[k] - 1])).collect();
            *out.entry(mono).or_default() += w;
        }
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}

/// `tr(X^n)` in the truncated realization: closed walks of length `n`
/// whose vertices repeat vanish, since their monomials repeat a row.
pub fn trace_power(n: usize, n_vars: usize) -> OraclePoly {
    let mut out = OraclePoly::new();
    fn walks(n: usize, n_vars: usize, cur: &mut Vec<usize>, out: &mut OraclePoly) {
        if cur.len() == n {
            let mut mono: OracleMonomial = (0..n).map(|k| (cur[k], cur[(k + 1) % n])).collect();
            mono.sort_unstable();
            *out.entry(mono).or_default() += 1;
            return;
        }
        for i in 1..=n_vars {
            if !cur.contains(&i) {
                cur.push(i);
                walks(n, n_vars, cur, out);
                cur.pop();
            }
        }
    }
    walks(n, n_vars, &mut Vec::new(), &mut out);
    out
}

/// Number of `k`-subsets of `[n]` stable under `σ`, each weighted by the
/// sign of `σ` restricted to it when `signed`.
fn stable_subsets(s: &Permutation, k: usize, signed: bool) -> BigInt {
    let n = s.len();
    let mut total = BigInt::from(0);
    for mask in subsets_of_size(n, k) {
        let stable = (0..n).all(|i| !mask[i] || mask[s.as_slice()[i] - 1]);
        if !stable {
            continue;
        }
        let mut sign = 1i64;
        if signed {
            let pts: Vec<usize> = (1..=n).filter(|&i| mask[i - 1]).collect();
            let mut seen = vec![false; n + 1];
            for &p in &pts {
                if seen[p] {
                    continue;
                }
                let mut len = 0;
                let mut x = p;
                while !seen[x] {
                    seen[x] = true;
                    x = s.as_slice()[x - 1];
                    len += 1;
                }
                if len % 2 == 0 {
                    sign = -sign;
                }
            }
        }
        total += sign;
    }
    total
}

/// `χ^λ(σ)` by brute force over subsets of `[n]`, for hooks and two-row
/// shapes. Two-row shapes use permutation modules on `k`-subsets, hooks
/// the exterior powers of the permutation representation.
pub fn brute_character(l: &IntegerPartition, s: &Permutation) -> Option<BigInt> {
    let parts = l.parts();
    let n = l.size();
    if n != s.len() {
        return None;
    }
    if parts.len() <= 2 {
        let k = parts.get(1).copied().unwrap_or(0);
        let lower = if k == 0 { BigInt::from(0) } else { stable_subsets(s, k - 1, false) };
        return Some(stable_subsets(s, k, false) - lower);
    }
    if parts[1..].iter().all(|&p| p == 1) {
        let k = parts.len() - 1;
        let mut chi = BigInt::from(0);
        for j in 0..=k {
            let t = stable_subsets(s, j, true);
            if (k - j).is_multiple_of(2) {
                chi += t;
            } else {
                chi -= t;
            }
        }
        return Some(chi);
    }
    None
}

/// One named identity `j(f) = realization`, checked at `N` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub holds: bool,
}

/// Checks, for `1 <= n <= max_n` at `N = n_vars`:
/// `j(p_n) = tr(X^n)`, `j(e_n) =` sum of diagonal minors, `j(h_n) =` sum of
/// diagonal permanental minors, and `j(s_λ) =` sum of diagonal immanants for
/// every hook or two-row `λ ⊢ n`.
pub fn sym_embedding_identities(max_n: usize, n_vars: usize) -> Vec<Identity> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let p = SymFunc::elem(Basis::P, &[n]);
        out.push(Identity {
            name: format!("j(p_{n}) = tr(X^{n})"),
            holds: realize_lincomb(&j(&p), n_vars) == trace_power(n, n_vars),
        });
        out.push(Identity {
            name: format!("j(e_{n}) = sum of diagonal minors"),
            holds: realize_lincomb(&j(&SymFunc::e(n)), n_vars)
                == diagonal_minor_sum(n, n_vars, |t| BigInt::from(t.sign())),
        });
        out.push(Identity {
            name: format!("j(h_{n}) = sum of diagonal permanents"),
            holds: realize_lincomb(&j(&SymFunc::h(n)), n_vars) == diagonal_minor_sum(n, n_vars, |_| BigInt::one()),
        });
        for l in IntegerPartition::all(n) {
            let probe = Permutation::identity(n);
            if brute_character(&l, &probe).is_none() {
                continue;
            }
            let s = SymFunc::new(Basis::S, LinComb::basis(l.clone()));
            out.push(Identity {
                name: format!("j(s_{l}) = sum of diagonal immanants"),
                holds: realize_lincomb(&j(&s), n_vars)
                    == diagonal_minor_sum(n, n_vars, |t| brute_character(&l, t).expect("hook or two-row")),
            });
        }
    }
    out
}

/// `uq` basis of the image of QSym.
#[derive(Clone, Copy, Debug, Default)]
pub struct QSymEmbed;

/// `ul` basis of the image of Sym.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymEmbed;

impl HopfAlgebra for QSymEmbed {
    type L = Composition;
    type R = BigInt;
    fn id(&self) -> &'static str {
        "qsym-embed"
    }
    fn basis_name(&self) -> &'static str {
        "uq"
    }
    fn basis(&self, n: usize) -> Vec<Composition> {
        Composition::all(n)
    }
    fn unit(&self) -> Composition {
        Composition::empty()
    }
    fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
        product_uq(a, b)
    }
    fn coproduct(&self, a: &Composition) -> Tensor2<Composition> {
        coproduct_uq(a)
    }
}

impl HopfAlgebra for SymEmbed {
    type L = IntegerPartition;
    type R = BigInt;
    fn id(&self) -> &'static str {
        "sym-embed"
    }
    fn basis_name(&self) -> &'static str {
        "ul"
    }
    fn basis(&self, n: usize) -> Vec<IntegerPartition> {
        IntegerPartition::all(n)
    }
    fn unit(&self) -> IntegerPartition {
        IntegerPartition::empty()
    }
    fn product(&self, a: &IntegerPartition, b: &IntegerPartition) -> LinComb<IntegerPartition> {
        product_ul(a, b)
    }
    fn coproduct(&self, a: &IntegerPartition) -> Tensor2<IntegerPartition> {
        coproduct_ul(a)
    }
}

/// Closure of `SGQSym` on the span of involutions.
pub fn involution_closure(max_degree: usize) -> Check {
    closure_check(&MBasis::<Permutation>::new(), max_degree, |s: &Permutation| s.is_involution())
}

/// Exploratory closure runs with no claim attached: permutations of order
/// dividing 3, and derangements.
pub fn exploratory_closures(max_degree: usize) -> BTreeMap<&'static str, Check> {
    let alg = MBasis::<Permutation>::new();
    let mut out = BTreeMap::new();
    out.insert(
        "order divides 3",
        closure_check(&alg, max_degree, |s: &Permutation| 3 % s.order() == 0),
    );
    out.insert("derangements", closure_check(&alg, max_degree, |s: &Permutation| s.is_derangement()));
    out
}

/// `embed(x)·embed(y) = embed(x·y)` for one pair.
pub fn uq_embedding_commutes(a: &Composition, b: &Composition) -> bool {
    let lhs = uq_to_m(a).mul_with(&uq_to_m(b), eqsym::product_m);
    lhs == embed_uq(&product_uq(a, b))
}

pub fn ul_embedding_commutes(a: &IntegerPartition, b: &IntegerPartition) -> bool {
    let lhs = ul_to_m(a).mul_with(&ul_to_m(b), eqsym::product_m);
    lhs == embed_ul(&product_ul(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::notation::{parse_composition, parse_partition};
    use crate::symfunc::character;

    fn c(s: &str) -> Composition {
        parse_composition(s).unwrap()
    }

    fn l(s: &str) -> IntegerPartition {
        parse_partition(s).unwrap()
    }

    #[test]
    fn uq_example() {
        let x = product_uq(&c("(1,3,1)"), &c("(1,2)"));
        let expect = LinComb::from_terms(
            [
                ("(1,1,2,3,1)", 2),
                ("(1,1,3,1,2)", 2),
                ("(1,1,3,2,1)", 2),
                ("(1,2,1,3,1)", 1),
                ("(1,3,1,1,2)", 2),
                ("(1,3,1,2,1)", 1),
            ]
            .map(|(s, k)| (c(s), BigInt::from(k))),
        );
        assert_eq!(x, expect);
        assert_eq!(product_uq(&c("(2)"), &c("(1)")), LinComb::from_labels([c("(2,1)"), c("(1,2)")]));
    }

    #[test]
    fn ul_example() {
        let x = product_ul(&l("(3,3,2,1)"), &l("(3,1,1)"));
        assert_eq!(x, LinComb::term(l("(3,3,3,2,1,1,1)"), BigInt::from(9)));
        assert_eq!(product_ul(&l("(1)"), &l("(1)")), LinComb::term(l("(1,1)"), BigInt::from(2)));
    }

    #[test]
    fn embeddings_commute_small() {
        for n in 1..=2 {
            for m in 1..=2 {
                for a in Composition::all(n) {
                    for b in Composition::all(m) {
                        assert!(uq_embedding_commutes(&a, &b), "{a} {b}");
                    }
                }
                for a in IntegerPartition::all(n) {
                    for b in IntegerPartition::all(m) {
                        assert!(ul_embedding_commutes(&a, &b), "{a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn brute_characters_match_symfunc() {
        for n in 1..=4 {
            for lam in IntegerPartition::all(n) {
                for s in enumerate::permutations(n) {
                    let b = brute_character(&lam, &s).expect("n <= 4 shapes are hooks or two-row");
                    assert_eq!(b, character(&lam, &s.cycle_type()), "{lam} at {s}");
                }
            }
        }
    }

    #[test]
    fn trace_of_square() {
        let lhs = realize_lincomb(&j(&SymFunc::elem(Basis::P, &[2])), 3);
        assert_eq!(lhs, trace_power(2, 3));
        let direct = realize_lincomb(&ul_to_m(&l("(2)")).scale(&BigInt::from(2)), 3);
        assert_eq!(direct, trace_power(2, 3));
    }

    #[test]
    fn identities_degree_three() {
        for id in sym_embedding_identities(3, 4) {
            assert!(id.holds, "{}", id.name);
        }
    }

    #[test]
    fn involutions_close() {
        assert!(involution_closure(4).passed());
    }
}
