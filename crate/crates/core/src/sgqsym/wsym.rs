//! Set-partition algebras: the subalgebra `PiQSym` of sums `uπ_π`, its dual
//! `WSym` (bases `Mw` and `Pw`), the quotient `WSym → NCSF` by ordered
//! block type, and Bell polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::enumerate::Words;
use crate::combinat::maps::Permutation;
use crate::combinat::partitions::{Composition, IntegerPartition, SetPartition};
use crate::combinat::word::subsets_of_size;
use crate::combinat::enumerate;
use crate::hopf::HopfAlgebra;
use crate::linear::{LinComb, Tensor2};

fn one() -> BigInt {
    BigInt::one()
}

/// Transports the blocks of `p` onto the sorted point list `onto`.
fn transport(p: &SetPartition, onto: &[usize]) -> Vec<Vec<usize>> {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|&x| onto[x - 1]).collect())
        .collect()
}

/// `uπ_{π′} uπ_{π″}`: the coefficient of `uπ_π` counts the splittings of
/// the blocks of `π` into two families standardizing to `π′` and `π″`.
pub fn product_upi(p1: &SetPartition, p2: &SetPartition) -> LinComb<SetPartition> {
    let (n, m) = (p1.size(), p2.size());
    let mut out = LinComb::zero();
    for mask in subsets_of_size(n + m, n) {
        let a: Vec<usize> = (1..=n + m).filter(|&i| mask[i - 1]).collect();
        let b: Vec<usize> = (1..=n + m).filter(|&i| !mask[i - 1]).collect();
        let mut blocks = transport(p1, &a);
        blocks.extend(transport(p2, &b));
        out.add_term(SetPartition::from_blocks_unchecked(blocks), one());
    }
    out
}

/// Cut points `k` such that `[k]` is a union of blocks.
fn block_cuts(p: &SetPartition) -> Vec<usize> {
    let n = p.size();
    let mut reach = vec![0usize; n + 1];
    for b in p.blocks() {
        reach[b[0]] = *b.last().unwrap();
    }
    let mut cuts = vec![0];
    let mut far = 0;
    for i in 1..=n {
        far = far.max(reach[i]);
        if far == i {
            cuts.push(i);
        }
    }
    cuts
}

fn split_at(p: &SetPartition, k: usize) -> (SetPartition, SetPartition) {
    let (mut l, mut r) = (Vec::new(), Vec::new());
    for b in p.blocks() {
        if b[0] <= k {
            l.push(b.clone());
        } else {
            r.push(b.iter().map(|x| x - k).collect());
        }
    }
    (SetPartition::from_blocks_unchecked(l), SetPartition::from_blocks_unchecked(r))
}

/// `Δ uπ_π = Σ uπ_{π′} ⊗ uπ_{π″}` over cuts `π = π′ | π″` no block crosses.
pub fn coproduct_upi(p: &SetPartition) -> Tensor2<SetPartition> {
    let mut out = Tensor2::zero();
    for k in block_cuts(p) {
        let (l, r) = split_at(p, k);
        out.add_term(l, r, one());
    }
    out
}

/// Sum of `M_σ` over `csupp(σ) = π`.
pub fn upi_to_m(p: &SetPartition) -> LinComb<Permutation> {
    LinComb::from_labels(enumerate::permutations(p.size()).filter(|s| &s.csupp() == p))
}

/// `Mw_{π′} Mw_{π″}`: sum over partial matchings of blocks of `π′` with
/// blocks of the shifted `π″`, matched blocks being merged.
pub fn product_mw(p1: &SetPartition, p2: &SetPartition) -> LinComb<SetPartition> {
    let left: Vec<Vec<usize>> = p1.blocks().to_vec();
    let right: Vec<Vec<usize>> = p2.shifted(p1.size()).blocks().to_vec();
    let mut out = LinComb::zero();
    fn rec(
        i: usize,
        left: &[Vec<usize>],
        right: &[Vec<usize>],
        used: &mut Vec<bool>,
        acc: &mut Vec<Vec<usize>>,
        out: &mut LinComb<SetPartition>,
    ) {
        if i == left.len() {
            let mut blocks = acc.clone();
            for (j, b) in right.iter().enumerate() {
                if !used[j] {
                    blocks.push(b.clone());
                }
            }
            out.add_term(SetPartition::from_blocks_unchecked(blocks), one());
            return;
        }
        acc.push(left[i].clone());
        rec(i + 1, left, right, used, acc, out);
        acc.pop();
        for j in 0..right.len() {
            if !used[j] {
                used[j] = true;
                let mut merged = left[i].clone();
                merged.extend_from_slice(&right[j]);
                acc.push(merged);
                rec(i + 1, left, right, used, acc, out);
                acc.pop();
                used[j] = false;
            }
        }
    }
    let mut used = vec![false; right.len()];
    rec(0, &left, &right, &mut used, &mut Vec::new(), &mut out);
    out
}

/// Block unshuffle: `Δ Mw_π = Σ_S Mw_{std(π|S)} ⊗ Mw_{std(π|S^c)}` over
/// subsets `S` of blocks. The same rule holds for `Pw`.
pub fn coproduct_block_unshuffle(p: &SetPartition) -> Tensor2<SetPartition> {
    let k = p.num_blocks();
    let mut out = Tensor2::zero();
    for mask in 0u64..(1u64 << k) {
        let a: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let b: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 0).collect();
        out.add_term(p.standardized_sub(&a), p.standardized_sub(&b), one());
    }
    out
}

/// `Pw_{π′} Pw_{π″} = Pw_{π′|π″}`.
pub fn product_pw(p1: &SetPartition, p2: &SetPartition) -> LinComb<SetPartition> {
    LinComb::basis(p1.shifted_union(p2))
}

/// `Pw_π = Σ_{σ ≥ π} Mw_σ` over coarsenings.
pub fn pw_to_mw(p: &SetPartition) -> LinComb<SetPartition> {
    LinComb::from_labels(p.coarsenings())
}

/// Words over `[n_letters]` whose kernel is exactly `π`.
pub fn mw_words(p: &SetPartition, n_letters: usize) -> Vec<Vec<usize>> {
    let k = p.num_blocks();
    let rgs = p.to_rgs();
    let mut out = Vec::new();
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
    let mut colorings = Vec::new();
    injections(k, n_letters, &mut Vec::new(), &mut colorings);
    for c in colorings {
        out.push(rgs.iter().map(|&b| c[b - 1]).collect());
    }
    out
}

/// Word realization: multiplies `Mw_{π′}` and `Mw_{π″}` as sums of words
/// over `n_letters` letters and reads the orbit sums back. Returns `None`
/// if some orbit is hit non-uniformly, which would mean the product is not
/// a combination of orbit sums.
pub fn product_mw_by_words(p1: &SetPartition, p2: &SetPartition, n_letters: usize) -> Option<LinComb<SetPartition>> {
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let w2 = mw_words(p2, n_letters);
    for u in mw_words(p1, n_letters) {
        for v in &w2 {
            let mut w = u.clone();
            w.extend_from_slice(v);
            *counts.entry(w).or_default() += 1;
        }
    }
    let mut per_orbit: BTreeMap<SetPartition, (u64, usize)> = BTreeMap::new();
    for (w, c) in &counts {
        let e = per_orbit.entry(SetPartition::from_word_kernel(w)).or_insert((*c, 0));
        if e.0 != *c {
            return None;
        }
        e.1 += 1;
    }
    let mut out = LinComb::zero();
    for (p, (c, seen)) in per_orbit {
        if seen != mw_words(&p, n_letters).len() {
            return None;
        }
        out.add_term(p, BigInt::from(c));
    }
    Some(out)
}

/// `uπ` basis of the partition subalgebra of `SGQSym`.
#[derive(Clone, Copy, Debug, Default)]
pub struct PiQSym;

/// `WSym` in the orbit-sum basis `Mw`.
#[derive(Clone, Copy, Debug, Default)]
pub struct WSymMw;

/// `WSym` in the basis `Pw_π = Σ_{σ ≥ π} Mw_σ`, dual to `uπ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct WSymPw;

macro_rules! partition_algebra {
    ($t:ty, $id:expr, $name:expr, $prod:path, $coprod:path) => {
        impl HopfAlgebra for $t {
            type L = SetPartition;
            type R = BigInt;
            fn id(&self) -> &'static str {
                $id
            }
            fn basis_name(&self) -> &'static str {
                $name
            }
            fn basis(&self, n: usize) -> Vec<SetPartition> {
                SetPartition::all(n)
            }
            fn unit(&self) -> SetPartition {
                SetPartition::empty()
            }
            fn product(&self, a: &SetPartition, b: &SetPartition) -> LinComb<SetPartition> {
                $prod(a, b)
            }
            fn coproduct(&self, a: &SetPartition) -> Tensor2<SetPartition> {
                $coprod(a)
            }
        }
    };
}

partition_algebra!(PiQSym, "piqsym", "upi", product_upi, coproduct_upi);
partition_algebra!(WSymMw, "wsym", "Mw", product_mw, coproduct_block_unshuffle);
partition_algebra!(WSymPw, "wsym-p", "Pw", product_pw, coproduct_block_unshuffle);

/// The class of `Mw_π` in `WSym/𝔍 ≅ NCSF`.
pub fn quotient_class(p: &SetPartition) -> Composition {
    p.ordered_type()
}

/// Representative with consecutive interval blocks.
pub fn interval_partition(c: &Composition) -> SetPartition {
    let mut blocks = Vec::new();
    let mut start = 1;
    for &k in c.parts() {
        blocks.push((start..start + k).collect());
        start += k;
    }
    SetPartition::from_blocks_unchecked(blocks)
}

/// The quotient `WSym/𝔍` in the basis `V_I`, computed on interval
/// representatives.
#[derive(Clone, Copy, Debug, Default)]
pub struct VQuotient;

impl HopfAlgebra for VQuotient {
    type L = Composition;
    type R = BigInt;
    fn id(&self) -> &'static str {
        "ncsf-v"
    }
    fn basis_name(&self) -> &'static str {
        "V"
    }
    fn basis(&self, n: usize) -> Vec<Composition> {
        Composition::all(n)
    }
    fn unit(&self) -> Composition {
        Composition::empty()
    }
    fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
        product_mw(&interval_partition(a), &interval_partition(b)).map_labels(quotient_class)
    }
    fn coproduct(&self, a: &Composition) -> Tensor2<Composition> {
        coproduct_block_unshuffle(&interval_partition(a)).map_labels(quotient_class)
    }
}

/// Coefficients `c_λ` in `v_1^n = Σ c_λ v_λ`, computed by multiplying
/// `Mw_{{1}}` with itself in `WSym` and projecting to block shapes.
pub fn bell_coefficients(n: usize) -> BTreeMap<IntegerPartition, BigInt> {
    let single = SetPartition::from_word_kernel(&[1]);
    let mut power = LinComb::basis(SetPartition::empty());
    for _ in 0..n {
        power = power.mul_with(&LinComb::basis(single.clone()), product_mw);
    }
    power.map_labels(|p| p.shape()).into_terms()
}

/// `B_n = n! [t^n] exp(Σ_k x_k t^k / k!)`, as a map from `λ` (the monomial
/// `x_λ`) to its coefficient.
pub fn bell_from_exponential(n: usize) -> BTreeMap<IntegerPartition, BigRational> {
    type Poly = BTreeMap<IntegerPartition, BigRational>;
    let fact = |k: usize| -> BigInt { (1..=k).fold(BigInt::one(), |a, b| a * b) };
    // series[d] = polynomial coefficient of t^d
    let mut s: Vec<Poly> = vec![Poly::new(); n + 1];
    for k in 1..=n {
        s[k].insert(
            IntegerPartition::from_parts_unchecked(vec![k]),
            BigRational::new(BigInt::one(), fact(k)),
        );
    }
    let mul = |a: &Vec<Poly>, b: &Vec<Poly>| -> Vec<Poly> {
        let mut out = vec![Poly::new(); n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                for (la, ca) in &a[i] {
                    for (lb, cb) in &b[j] {
                        let e = out[i + j].entry(la.union(lb)).or_insert_with(BigRational::zero);
                        *e += ca * cb;
                    }
                }
            }
        }
        out
    };
    let mut total: Vec<Poly> = vec![Poly::new(); n + 1];
    total[0].insert(IntegerPartition::empty(), BigRational::one());
    let mut power = total.clone();
    for j in 1..=n {
        power = mul(&power, &s);
        let inv = BigRational::new(BigInt::one(), fact(j));
        for d in 0..=n {
            for (l, c) in &power[d] {
                *total[d].entry(l.clone()).or_insert_with(BigRational::zero) += c * &inv;
            }
        }
    }
    let nf = BigRational::from_integer(fact(n));
    let mut out: Poly = total[n].iter().map(|(l, c)| (l.clone(), c * &nf)).collect();
    out.retain(|_, c| !c.is_zero());
    out
}

/// `B_n` from the quotient agrees with the exponential formula.
pub fn bell_check(n: usize) -> bool {
    let from_wsym: BTreeMap<IntegerPartition, BigRational> = bell_coefficients(n)
        .into_iter()
        .map(|(l, c)| (l, BigRational::from_integer(c)))
        .collect();
    from_wsym == bell_from_exponential(n)
}

/// Commutative image of `Mw_π` in the m basis, computed from its words
/// over `size` letters: the coefficient of `m_λ` is the number of words
/// with content `λ` read as an exponent vector.
pub fn commutative_image(p: &SetPartition) -> LinComb<IntegerPartition> {
    let n = p.size();
    let lam = p.shape();
    let mut exps = lam.parts().to_vec();
    exps.resize(n, 0);
    let count = Words::new(n, n)
        .filter(|w| SetPartition::from_word_kernel(w) == *p)
        .filter(|w| {
            let mut c = vec![0; n];
            for &x in w {
                c[x - 1] += 1;
            }
            c == exps
        })
        .count();
    LinComb::term(lam, BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::notation::parse_set_partition;

    fn sp(s: &str) -> SetPartition {
        parse_set_partition(s).unwrap()
    }

    #[test]
    fn upi_example() {
        let x = product_upi(&sp("{1,2,4|3}"), &sp("{1}"));
        let expect = LinComb::from_terms([
            (sp("{1,2,4|3|5}"), BigInt::from(1)),
            (sp("{1,2,5|3|4}"), BigInt::from(2)),
            (sp("{1,3,5|2|4}"), BigInt::from(1)),
            (sp("{1|2,3,5|4}"), BigInt::from(1)),
        ]);
        assert_eq!(x, expect);
        let sq = product_upi(&sp("{1}"), &sp("{1}"));
        assert_eq!(sq, LinComb::term(sp("{1|2}"), BigInt::from(2)));
    }

    #[test]
    fn mw_words_and_matching_product() {
        let p = sp("{1,3,6|2|4,5}");
        let words = mw_words(&p, 3);
        assert_eq!(words[0], vec![1, 2, 1, 3, 3, 1]);
        assert_eq!(words.len(), 6);
        let x = product_mw(&sp("{1}"), &sp("{1}"));
        assert_eq!(x, LinComb::from_labels([sp("{1|2}"), sp("{1,2}")]));
        assert_eq!(product_mw_by_words(&sp("{1}"), &sp("{1}"), 2), Some(x));
    }

    #[test]
    fn bell_small() {
        let b3 = bell_coefficients(3);
        assert_eq!(b3[&IntegerPartition::from_parts_unchecked(vec![2, 1])], BigInt::from(3));
        for n in 1..=4 {
            assert!(bell_check(n));
        }
    }

    #[test]
    fn commutative_image_scaling() {
        let img = commutative_image(&sp("{1,2|3}"));
        assert_eq!(img, LinComb::term(IntegerPartition::from_parts_unchecked(vec![2, 1]), BigInt::from(1)));
        let img = commutative_image(&sp("{1|2|3}"));
        assert_eq!(img.total(), BigInt::from(6));
    }
}
