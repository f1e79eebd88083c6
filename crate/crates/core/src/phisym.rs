//! The cocommutative Hopf algebra `ΦSym` of permutations, described through
//! cycle decompositions: the product is a matching (Wick) product of cycle
//! sets, the coproduct unshuffles cycles.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::combinat::cycles::{Cycle, CycleSet};
use crate::combinat::enumerate;
use crate::combinat::maps::{MapLabel, Permutation};
use crate::combinat::partitions::IntegerPartition;
use crate::combinat::word::shuffle;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linear::{LinComb, Tensor2};
use crate::symfunc::{Basis as SymBasis, SymFunc};

pub mod oracle;

fn disjoint(a: &Cycle, b: &Cycle) -> bool {
    a.word().iter().all(|x| !b.word().contains(x))
}

/// `c′ ⋔ c″`: the cycles having a cycle word that is a shuffle of cycle
/// words of `c′` and `c″`. Every such cycle has exactly one cycle word
/// starting with `min c′`, so it is enough to shuffle the tail of the
/// canonical word of `c′` with each rotation of `c″`.
pub fn cyclic_shuffle(c1: &Cycle, c2: &Cycle) -> Result<BTreeSet<Cycle>> {
    if !disjoint(c1, c2) {
        return Err(Error::invalid("cycle pair", "supports overlap"));
    }
    let head = c1.word()[0];
    let tail = &c1.word()[1..];
    let mut out = BTreeSet::new();
    for rot in c2.rotations() {
        for w in shuffle(tail, &rot) {
            let mut word = vec![head];
            word.extend(w);
            out.insert(Cycle::from_word_unchecked(word));
        }
    }
    Ok(out)
}

/// Reference version: shuffle every cycle word of `c′` with every cycle
/// word of `c″` and close under rotation.
pub fn cyclic_shuffle_brute(c1: &Cycle, c2: &Cycle) -> BTreeSet<Cycle> {
    let mut out = BTreeSet::new();
    for u in c1.rotations() {
        for v in c2.rotations() {
            for w in shuffle(&u, &v) {
                out.insert(Cycle::new(w).expect("distinct letters"));
            }
        }
    }
    out
}

/// All partial matchings between `0..k1` and `0..k2`, as lists of pairs.
pub fn matchings(k1: usize, k2: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(i: usize, k1: usize, k2: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if i == k1 {
            out.push(cur.clone());
            return;
        }
        rec(i + 1, k1, k2, used, cur, out);
        for j in 0..k2 {
            if !used[j] {
                used[j] = true;
                cur.push((i, j));
                rec(i + 1, k1, k2, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(0, k1, k2, &mut vec![false; k2], &mut Vec::new(), &mut out);
    out
}

/// `C1 ⋔̃ C2` for cycle sets with disjoint supports: over all matchings,
/// every way of replacing each matched pair by an element of its cyclic
/// shuffle.
pub fn matching_product(c1: &CycleSet, c2: &CycleSet) -> Result<BTreeSet<CycleSet>> {
    for a in c1.iter() {
        for b in c2.iter() {
            if !disjoint(a, b) {
                return Err(Error::invalid("cycle sets", "supports overlap"));
            }
        }
    }
    let (l, r) = (c1.cycles(), c2.cycles());
    let mut out = BTreeSet::new();
    for m in matchings(l.len(), r.len()) {
        let mut fixed: Vec<Cycle> = Vec::new();
        let mut left_used = vec![false; l.len()];
        let mut right_used = vec![false; r.len()];
        let mut options: Vec<Vec<Cycle>> = Vec::new();
        for &(i, j) in &m {
            left_used[i] = true;
            right_used[j] = true;
            options.push(cyclic_shuffle(&l[i], &r[j])?.into_iter().collect());
        }
        fixed.extend(l.iter().zip(&left_used).filter(|(_, u)| !**u).map(|(c, _)| c.clone()));
        fixed.extend(r.iter().zip(&right_used).filter(|(_, u)| !**u).map(|(c, _)| c.clone()));
        // cartesian product of the shuffle options
        let mut partial: Vec<Vec<Cycle>> = vec![fixed];
        for opt in &options {
            let mut next = Vec::with_capacity(partial.len() * opt.len());
            for p in &partial {
                for c in opt {
                    let mut q = p.clone();
                    q.push(c.clone());
                    next.push(q);
                }
            }
            partial = next;
        }
        for p in partial {
            out.insert(CycleSet::from_unsorted_unchecked(p));
        }
    }
    Ok(out)
}

/// `φ_σ φ_τ`: cycle decompositions in `C(σ) ⋔̃ C(τ)[n]`, each once.
pub fn product_phi(s: &Permutation, t: &Permutation) -> LinComb<Permutation> {
    let c1 = s.cycles();
    let c2 = t.cycles().shifted(s.len());
    let sets = matching_product(&c1, &c2).expect("shifted supports are disjoint");
    LinComb::from_labels(sets.into_iter().map(|cs| cs.to_permutation().expect("covers [n+m]")))
}

/// Unshuffling of cycles: one term per subset of the cycles of `σ`.
pub fn coproduct_phi(s: &Permutation) -> Tensor2<Permutation> {
    let cs = s.cycles();
    let k = cs.len();
    let mut out = Tensor2::zero();
    for mask in 0u64..(1u64 << k) {
        let a: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let b: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 0).collect();
        out.add_term(cs.standardized_sub(&a), cs.standardized_sub(&b), BigInt::one());
    }
    out
}

/// The three bases of `ΦSym` handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PhiBasis {
    Phi,
    /// `S′_σ = φ_{σ_1} ⋯ φ_{σ_r}` over the connected factors of `σ`.
    SPrime,
    /// `S″_σ`: iterated matching product of the single cycles of `σ`.
    SSecond,
}

impl PhiBasis {
    pub fn name(self) -> &'static str {
        match self {
            PhiBasis::Phi => "phi",
            PhiBasis::SPrime => "Sp",
            PhiBasis::SSecond => "Ss",
        }
    }
}

/// `S′_σ` in the φ basis.
pub fn s_prime_to_phi(s: &Permutation) -> LinComb<Permutation> {
    let mut acc = LinComb::basis(Permutation::empty());
    for f in s.connected_factorization() {
        acc = acc.mul_with(&LinComb::basis(f), product_phi);
    }
    acc
}

/// `S″_σ` in the φ basis. The cycles of `σ` keep their own supports.
pub fn s_second_to_phi(s: &Permutation) -> LinComb<Permutation> {
    let mut sets: BTreeSet<CycleSet> = BTreeSet::new();
    sets.insert(CycleSet::from_unsorted_unchecked(Vec::new()));
    for c in s.cycles().iter() {
        let single = CycleSet::from_unsorted_unchecked(vec![c.clone()]);
        let mut next = BTreeSet::new();
        for cs in &sets {
            next.extend(matching_product(cs, &single).expect("cycles of one permutation"));
        }
        sets = next;
    }
    LinComb::from_labels(sets.into_iter().map(|cs| cs.to_permutation().expect("covers [n]")))
}

pub fn to_phi(basis: PhiBasis, s: &Permutation) -> LinComb<Permutation> {
    match basis {
        PhiBasis::Phi => LinComb::basis(s.clone()),
        PhiBasis::SPrime => s_prime_to_phi(s),
        PhiBasis::SSecond => s_second_to_phi(s),
    }
}

/// Rewrites an element of the φ basis in `basis`. Both `S′_σ` and `S″_σ`
/// equal `φ_σ` plus terms with fewer cycles, so peeling off the terms with
/// the most cycles first terminates.
pub fn from_phi(basis: PhiBasis, x: &LinComb<Permutation>) -> LinComb<Permutation> {
    if basis == PhiBasis::Phi {
        return x.clone();
    }
    let mut rest = x.clone();
    let mut out = LinComb::zero();
    while let Some(s) = rest.labels().max_by_key(|s| (s.num_cycles(), (*s).clone())).cloned() {
        let c = rest.coeff(&s);
        out.add_term(s.clone(), c.clone());
        let image = to_phi(basis, &s);
        debug_assert_eq!(image.coeff(&s), BigInt::one());
        rest.add_scaled(&image, &-c);
    }
    out
}

pub fn convert(from: PhiBasis, to: PhiBasis, x: &LinComb<Permutation>) -> LinComb<Permutation> {
    from_phi(to, &x.apply(|s| to_phi(from, s)))
}

/// `ΦSym` in one of its bases. Products and coproducts in `S′` and `S″`
/// are computed through φ.
#[derive(Clone, Copy, Debug)]
pub struct PhiSym {
    pub basis: PhiBasis,
}

impl PhiSym {
    pub fn new(basis: PhiBasis) -> Self {
        PhiSym { basis }
    }
}

impl Default for PhiSym {
    fn default() -> Self {
        PhiSym::new(PhiBasis::Phi)
    }
}

impl HopfAlgebra for PhiSym {
    type L = Permutation;
    type R = BigInt;
    fn id(&self) -> &'static str {
        "phisym"
    }
    fn basis_name(&self) -> &'static str {
        self.basis.name()
    }
    fn basis(&self, n: usize) -> Vec<Permutation> {
        enumerate::permutations(n).collect()
    }
    fn unit(&self) -> Permutation {
        Permutation::empty()
    }
    fn product(&self, a: &Permutation, b: &Permutation) -> LinComb<Permutation> {
        match self.basis {
            PhiBasis::Phi => product_phi(a, b),
            basis => {
                let x = to_phi(basis, a).mul_with(&to_phi(basis, b), product_phi);
                from_phi(basis, &x)
            }
        }
    }
    fn coproduct(&self, a: &Permutation) -> Tensor2<Permutation> {
        match self.basis {
            PhiBasis::Phi => coproduct_phi(a),
            basis => {
                let d = to_phi(basis, a).apply_tensor(coproduct_phi);
                let mut out = Tensor2::zero();
                // convert the left factor, then the right
                let mut by_right: std::collections::BTreeMap<Permutation, LinComb<Permutation>> = Default::default();
                for ((l, r), c) in d.iter() {
                    by_right.entry(r.clone()).or_default().add_term(l.clone(), c.clone());
                }
                let mut half = Tensor2::zero();
                for (r, left) in by_right {
                    for (l, c) in from_phi(basis, &left).iter() {
                        half.add_term(l.clone(), r.clone(), c.clone());
                    }
                }
                let mut by_left: std::collections::BTreeMap<Permutation, LinComb<Permutation>> = Default::default();
                for ((l, r), c) in half.iter() {
                    by_left.entry(l.clone()).or_default().add_term(r.clone(), c.clone());
                }
                for (l, right) in by_left {
                    for (r, c) in from_phi(basis, &right).iter() {
                        out.add_term(l.clone(), r.clone(), c.clone());
                    }
                }
                out
            }
        }
    }
}

/// Representative of a cycle type: cycles on consecutive intervals.
pub fn cycle_type_representative(l: &IntegerPartition) -> Permutation {
    let mut cycles = Vec::new();
    let mut start = 1;
    for &k in l.parts() {
        cycles.push(Cycle::from_word_unchecked((start..start + k).collect()));
        start += k;
    }
    CycleSet::from_unsorted_unchecked(cycles).to_permutation().expect("covers [n]")
}

/// `Y_λ Y_μ` computed on representatives.
pub fn product_y_with(s: &Permutation, t: &Permutation) -> LinComb<IntegerPartition> {
    product_phi(s, t).map_labels(|g| g.cycle_type())
}

pub fn product_y(a: &IntegerPartition, b: &IntegerPartition) -> LinComb<IntegerPartition> {
    product_y_with(&cycle_type_representative(a), &cycle_type_representative(b))
}

pub fn coproduct_y(a: &IntegerPartition) -> Tensor2<IntegerPartition> {
    coproduct_phi(&cycle_type_representative(a)).map_labels(|g| g.cycle_type())
}

/// `Y_λ ↦ (∏ m_i!)/(∏ (λ_j − 1)!) m_λ`.
pub fn y_to_sym(l: &IntegerPartition) -> SymFunc {
    let fact = |k: usize| -> BigInt { (1..=k).fold(BigInt::one(), |a, b| a * b) };
    let num: BigInt = l.multiplicities().values().map(|&m| fact(m)).product();
    let den: BigInt = l.parts().iter().map(|&p| fact(p - 1)).product();
    SymFunc::new(SymBasis::M, LinComb::term(l.clone(), BigRational::new(num, den)))
}

pub fn y_lincomb_to_sym(x: &LinComb<IntegerPartition>) -> SymFunc {
    let mut out = SymFunc::zero(SymBasis::M);
    for (l, c) in x.iter() {
        out = out
            .add(&y_to_sym(l).scale(&BigRational::from_integer(c.clone())))
            .expect("same basis");
    }
    out
}

/// `y_to_sym(Y_λ Y_μ) = y_to_sym(Y_λ) y_to_sym(Y_μ)` for all `λ, μ` of
/// positive size with `|λ| + |μ| <= max_degree`.
pub fn iso_check(max_degree: usize) -> bool {
    for n in 1..max_degree {
        for m in 1..=max_degree - n {
            for a in IntegerPartition::all(n) {
                for b in IntegerPartition::all(m) {
                    let lhs = y_lincomb_to_sym(&product_y(&a, &b));
                    let rhs = y_to_sym(&a).mul(&y_to_sym(&b)).expect("small degree");
                    if lhs.coeffs != rhs.to_m().expect("small degree").coeffs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The quotient `ΦSym/I ≅ Sym`, basis `Y_λ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct YQuotient;

impl HopfAlgebra for YQuotient {
    type L = IntegerPartition;
    type R = BigInt;
    fn id(&self) -> &'static str {
        "phisym-y"
    }
    fn basis_name(&self) -> &'static str {
        "Y"
    }
    fn basis(&self, n: usize) -> Vec<IntegerPartition> {
        IntegerPartition::all(n)
    }
    fn unit(&self) -> IntegerPartition {
        IntegerPartition::empty()
    }
    fn product(&self, a: &IntegerPartition, b: &IntegerPartition) -> LinComb<IntegerPartition> {
        product_y(a, b)
    }
    fn coproduct(&self, a: &IntegerPartition) -> Tensor2<IntegerPartition> {
        coproduct_y(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::notation::{parse_cycles, parse_partition, parse_permutation};

    fn p(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    fn cyc(s: &str) -> Cycle {
        parse_cycles(s).unwrap().cycles()[0].clone()
    }

    fn lc(s: &[&str]) -> LinComb<Permutation> {
        LinComb::from_labels(s.iter().map(|x| p(x)))
    }

    #[test]
    fn cyclic_shuffle_example() {
        let got = cyclic_shuffle(&cyc("(132)"), &cyc("(45)")).unwrap();
        let expect: BTreeSet<Cycle> = [
            "(13245)", "(13425)", "(13452)", "(14325)", "(14352)", "(14532)", "(13254)", "(13524)", "(13542)",
            "(15324)", "(15342)", "(15432)",
        ]
        .iter()
        .map(|s| cyc(s))
        .collect();
        assert_eq!(got, expect);
        assert_eq!(got, cyclic_shuffle_brute(&cyc("(132)"), &cyc("(45)")));
        assert_eq!(cyclic_shuffle(&cyc("(1)"), &cyc("(2)")).unwrap().len(), 1);
        assert_eq!(cyclic_shuffle(&cyc("(12)"), &cyc("(34)")).unwrap(), cyclic_shuffle_brute(&cyc("(12)"), &cyc("(34)")));
        assert!(cyclic_shuffle(&cyc("(12)"), &cyc("(23)")).is_err());
    }

    #[test]
    fn matching_example() {
        let c1 = parse_cycles("(1)(2)").unwrap();
        let c2 = parse_cycles("(3)(4)").unwrap();
        assert_eq!(matchings(2, 2).len(), 7);
        let got: Vec<String> = matching_product(&c1, &c2).unwrap().iter().map(|c| c.to_string()).collect();
        let mut expect = vec!["(1)(2)(3)(4)", "(1)(23)(4)", "(1)(24)(3)", "(13)(2)(4)", "(13)(24)", "(14)(2)(3)", "(14)(23)"];
        expect.sort();
        let mut got = got;
        got.sort();
        assert_eq!(got, expect);
        let empty = CycleSet::from_unsorted_unchecked(vec![]);
        assert_eq!(matching_product(&empty, &c2).unwrap().into_iter().collect::<Vec<_>>(), vec![c2]);
    }

    #[test]
    fn worked_products() {
        assert_eq!(product_phi(&p("12"), &p("21")), lc(&["1243", "1342", "1423", "3241", "4213"]));
        assert_eq!(
            product_phi(&p("12"), &p("12")),
            lc(&["1234", "1324", "1432", "3214", "3412", "4231", "4321"])
        );
        assert_eq!(product_phi(&p("1"), &p("4312")), lc(&["15423", "25413", "35421", "45123", "51423"]));
        assert_eq!(
            product_phi(&p("312"), &p("21")),
            lc(&[
                "31254", "31452", "31524", "34251", "34512", "35214", "35421", "41253", "41532", "45231", "51234",
                "51423", "54213"
            ])
        );
    }

    #[test]
    fn worked_coproducts() {
        let e = Permutation::empty();
        let t = |a: &str, b: &str, c: i64| {
            let a = if a.is_empty() { e.clone() } else { p(a) };
            let b = if b.is_empty() { e.clone() } else { p(b) };
            ((a, b), BigInt::from(c))
        };
        assert_eq!(
            coproduct_phi(&p("4231")),
            Tensor2::from_terms([
                t("4231", "", 1),
                t("321", "1", 2),
                t("21", "12", 1),
                t("12", "21", 1),
                t("1", "321", 2),
                t("", "4231", 1)
            ])
        );
        assert_eq!(coproduct_phi(&p("312")), Tensor2::from_terms([t("312", "", 1), t("", "312", 1)]));
        assert_eq!(coproduct_phi(&p("12")), Tensor2::from_terms([t("12", "", 1), t("1", "1", 2), t("", "12", 1)]));
    }

    #[test]
    fn s_second_example() {
        // The printed list has φ_4312 for the cycle (1423); the cyclic
        // shuffle of (124) and (3) yields (1243) = 2413 instead.
        assert_eq!(s_second_to_phi(&p("2431")), lc(&["2431", "2413", "2341", "3421"]));
        assert_eq!(s_prime_to_phi(&p("312")), lc(&["312"]));
    }

    #[test]
    fn round_trips() {
        for n in 1..=4 {
            for s in enumerate::permutations(n) {
                for b in [PhiBasis::SPrime, PhiBasis::SSecond] {
                    let x = LinComb::basis(s.clone());
                    assert_eq!(from_phi(b, &to_phi(b, &s)), x);
                    assert_eq!(convert(PhiBasis::Phi, b, &convert(b, PhiBasis::Phi, &x)), x);
                }
            }
        }
    }

    #[test]
    fn y_examples() {
        let l = |s: &str| parse_partition(s).unwrap();
        let y = |terms: &[(&str, i64)]| LinComb::from_terms(terms.iter().map(|(s, c)| (l(s), BigInt::from(*c))));
        assert_eq!(product_y(&l("(1,1)"), &l("(2)")), y(&[("(2,1,1)", 1), ("(3,1)", 4)]));
        assert_eq!(product_y(&l("(1,1)"), &l("(1,1)")), y(&[("(1,1,1,1)", 1), ("(2,2)", 2), ("(2,1,1)", 4)]));
        assert_eq!(product_y(&l("(1)"), &l("(4)")), y(&[("(4,1)", 1), ("(5)", 4)]));
        assert_eq!(product_y(&l("(3)"), &l("(2)")), y(&[("(3,2)", 1), ("(5)", 12)]));
        assert!(iso_check(4));
    }
}
