//! Classical symmetric functions in the bases m, e, h, p and s.
//!
//! Every basis is stored through its transition matrix into the monomial
//! basis, computed by direct counting; conversions out of m invert that
//! matrix exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::partitions::IntegerPartition;
use crate::error::{Error, Result};
use crate::linear::LinComb;

/// Largest degree handled by conversions.
pub const DEFAULT_MAX_DEGREE: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "symmetric function basis",
                name: s.to_string(),
            })
    }
}

pub type Coeffs = LinComb<IntegerPartition, BigRational>;

/// A symmetric function written in one of the classical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    pub basis: Basis,
    pub coeffs: Coeffs,
}

impl SymFunc {
    pub fn new(basis: Basis, coeffs: Coeffs) -> Self {
        SymFunc { basis, coeffs }
    }

    pub fn zero(basis: Basis) -> Self {
        SymFunc::new(basis, LinComb::zero())
    }

    pub fn elem(basis: Basis, parts: &[usize]) -> Self {
        SymFunc::new(
            basis,
            LinComb::basis(IntegerPartition::from_parts_unchecked(parts.to_vec())),
        )
    }

    pub fn e(k: usize) -> Self {
        SymFunc::elem(Basis::E, &if k == 0 { vec![] } else { vec![k] })
    }

    pub fn h(k: usize) -> Self {
        SymFunc::elem(Basis::H, &if k == 0 { vec![] } else { vec![k] })
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.labels().map(|l| l.size()).max().unwrap_or(0)
    }

    pub fn to_m(&self) -> Result<SymFunc> {
        self.convert(Basis::M)
    }

    pub fn convert(&self, target: Basis) -> Result<SymFunc> {
        self.convert_bounded(target, DEFAULT_MAX_DEGREE)
    }

    pub fn convert_bounded(&self, target: Basis, max_degree: usize) -> Result<SymFunc> {
        let d = self.max_degree();
        if d > max_degree {
            return Err(Error::LimitExceeded {
                what: "symmetric function degree".into(),
                requested: d,
                limit: max_degree,
            });
        }
        if target == self.basis {
            return Ok(self.clone());
        }
        let in_m = self.coeffs.apply(|l| to_m_row(self.basis, l));
        let out = if target == Basis::M {
            in_m
        } else {
            let mut out = LinComb::zero();
            let mut by_deg: BTreeMap<usize, Coeffs> = BTreeMap::new();
            for (l, c) in in_m.iter() {
                by_deg
                    .entry(l.size())
                    .or_default()
                    .add_term(l.clone(), c.clone());
            }
            for (n, part) in by_deg {
                out.add_assign(&from_m(target, n, &part));
            }
            out
        };
        Ok(SymFunc::new(target, out))
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        let o = other.convert(self.basis)?;
        Ok(SymFunc::new(self.basis, self.coeffs.add(&o.coeffs)))
    }

    pub fn scale(&self, k: &BigRational) -> SymFunc {
        SymFunc::new(self.basis, self.coeffs.scale(k))
    }

    /// Product, returned in the basis of `self`.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        let a = self.to_m()?;
        let b = other.to_m()?;
        let prod = a.coeffs.mul_with(&b.coeffs, |x, y| {
            m_product(x, y)
                .into_iter()
                .map(|(l, c)| (l, BigRational::from_integer(c)))
                .collect()
        });
        SymFunc::new(Basis::M, prod).convert(self.basis)
    }

    pub fn coeff(&self, parts: &[usize]) -> BigRational {
        self.coeffs
            .coeff(&IntegerPartition::from_parts_unchecked(parts.to_vec()))
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            let neg = c < &BigRational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if i > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let label = if l.is_empty() {
                "1".to_string()
            } else {
                format!("{}{}", self.basis, l)
            };
            if a.is_one() {
                out.push_str(&label);
            } else if l.is_empty() {
                out.push_str(&a.to_string());
            } else {
                out.push_str(&format!("{a}*{label}"));
            }
        }
        f.write_str(&out)
    }
}

/// Distinct rearrangements of `v`.
fn rearrangements(v: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation with repetitions
    loop {
        let n = sorted.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && sorted[i - 1] >= sorted[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while sorted[j] <= sorted[i - 1] {
            j -= 1;
        }
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// `m_μ m_ν` in the m basis: the coefficient of `m_λ` counts pairs of
/// exponent vectors, one a rearrangement of `μ` and one of `ν`, adding up
/// to the vector `λ`.
pub fn m_product(mu: &IntegerPartition, nu: &IntegerPartition) -> BTreeMap<IntegerPartition, BigInt> {
    let union = mu.union(nu);
    let n = mu.size() + nu.size();
    let mut out = BTreeMap::new();
    for lam in IntegerPartition::all(n) {
        if lam.len() > union.len() || lam.len() < mu.len().max(nu.len()) {
            continue;
        }
        let k = lam.len();
        let mut padded = mu.parts().to_vec();
        padded.resize(k, 0);
        let mut target_nu: Vec<usize> = nu.parts().to_vec();
        target_nu.resize(k, 0);
        target_nu.sort_unstable();
        let mut count = 0u64;
        for a in rearrangements(&padded) {
            if a.iter().zip(lam.parts()).any(|(x, y)| x > y) {
                continue;
            }
            let mut b: Vec<usize> = lam.parts().iter().zip(&a).map(|(y, x)| y - x).collect();
            b.sort_unstable();
            if b == target_nu {
                count += 1;
            }
        }
        if count > 0 {
            out.insert(lam, BigInt::from(count));
        }
    }
    out
}

/// Counts matrices with the given row and column sums and entries bounded
/// by `cap` (1 for e, unbounded for h).
fn count_matrices(rows: &[usize], cols: &[usize], cap: usize) -> BigInt {
    fn distribute(
        sum: usize,
        j: usize,
        cols: &mut Vec<usize>,
        cap: usize,
        rest: &[usize],
        memo: &mut BTreeMap<(Vec<usize>, usize), BigInt>,
    ) -> BigInt {
        if j == cols.len() {
            return if sum == 0 { rows_rec(rest, cols, cap, memo) } else { BigInt::zero() };
        }
        let mut total = BigInt::zero();
        let hi = sum.min(cols[j]).min(cap);
        for x in 0..=hi {
            cols[j] -= x;
            total += distribute(sum - x, j + 1, cols, cap, rest, memo);
            cols[j] += x;
        }
        total
    }
    fn rows_rec(
        rows: &[usize],
        cols: &mut Vec<usize>,
        cap: usize,
        memo: &mut BTreeMap<(Vec<usize>, usize), BigInt>,
    ) -> BigInt {
        if rows.is_empty() {
            return if cols.iter().all(|&c| c == 0) { BigInt::one() } else { BigInt::zero() };
        }
        let key = (cols.clone(), rows.len());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let v = distribute(rows[0], 0, cols, cap, &rows[1..], memo);
        memo.insert(key, v.clone());
        v
    }
    let mut memo = BTreeMap::new();
    rows_rec(rows, &mut cols.to_vec(), cap, &mut memo)
}

/// Functions from the parts of `lam` to the positions of `mu` whose fibres
/// sum to the parts of `mu`: the coefficient of `m_μ` in `p_λ`.
fn count_power_sum(lam: &[usize], mu: &[usize]) -> BigInt {
    fn rec(i: usize, lam: &[usize], rem: &mut Vec<usize>) -> BigInt {
        if i == lam.len() {
            return if rem.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
        }
        let mut t = BigInt::zero();
        for j in 0..rem.len() {
            if rem[j] >= lam[i] {
                rem[j] -= lam[i];
                t += rec(i + 1, lam, rem);
                rem[j] += lam[i];
            }
        }
        t
    }
    rec(0, lam, &mut mu.to_vec())
}

/// Kostka number: semistandard tableaux of shape `lam` and content `mu`,
/// counted by peeling horizontal strips.
pub fn kostka(lam: &IntegerPartition, mu: &[usize]) -> BigInt {
    fn rec(shape: Vec<usize>, content: &[usize], memo: &mut BTreeMap<(Vec<usize>, usize), BigInt>) -> BigInt {
        let total: usize = shape.iter().sum();
        if content.is_empty() {
            return if total == 0 { BigInt::one() } else { BigInt::zero() };
        }
        let key = (shape.clone(), content.len());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let k = *content.last().unwrap();
        let rest = &content[..content.len() - 1];
        let mut acc = BigInt::zero();
        // inner shapes ν with λ_{i+1} <= ν_i <= λ_i and |λ/ν| = k
        fn strips(shape: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == shape.len() {
                if left == 0 {
                    let mut v = cur.clone();
                    while v.last() == Some(&0) {
                        v.pop();
                    }
                    out.push(v);
                }
                return;
            }
            let lo = shape.get(i + 1).copied().unwrap_or(0);
            for nu in lo..=shape[i] {
                let take = shape[i] - nu;
                if take <= left {
                    cur.push(nu);
                    strips(shape, i + 1, left - take, cur, out);
                    cur.pop();
                }
            }
        }
        let mut inner = Vec::new();
        strips(&shape, 0, k, &mut Vec::new(), &mut inner);
        for nu in inner {
            acc += rec(nu, rest, memo);
        }
        memo.insert(key, acc.clone());
        acc
    }
    if lam.size() != mu.iter().sum::<usize>() {
        return BigInt::zero();
    }
    rec(lam.parts().to_vec(), mu, &mut BTreeMap::new())
}

/// Expansion of a single basis element in the m basis.
fn to_m_row(basis: Basis, lam: &IntegerPartition) -> Coeffs {
    let n = lam.size();
    let mut out = LinComb::zero();
    for mu in IntegerPartition::all(n) {
        let c = match basis {
            Basis::M => {
                if &mu == lam {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Basis::E => count_matrices(lam.parts(), mu.parts(), 1),
            Basis::H => count_matrices(lam.parts(), mu.parts(), usize::MAX),
            Basis::P => count_power_sum(lam.parts(), mu.parts()),
            Basis::S => kostka(lam, mu.parts()),
        };
        out.add_term(mu, BigRational::from_integer(c));
    }
    out
}

/// Solves `x · T = y` for a homogeneous degree-`n` element `y` given in
/// m, where row `λ` of `T` is the m-expansion of `b_λ`.
fn from_m(target: Basis, n: usize, y: &Coeffs) -> Coeffs {
    let parts = IntegerPartition::all(n);
    let k = parts.len();
    let index: BTreeMap<&IntegerPartition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    // augmented system Tᵀ x = y, rows indexed by μ
    let mut a = vec![vec![BigRational::zero(); k + 1]; k];
    for (i, lam) in parts.iter().enumerate() {
        for (mu, c) in to_m_row(target, lam).iter() {
            a[index[mu]][i] = c.clone();
        }
    }
    for (mu, c) in y.iter() {
        a[index[mu]][k] = c.clone();
    }
    for col in 0..k {
        let piv = (col..k).find(|&r| !a[r][col].is_zero()).expect("transition matrix is invertible");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..=k {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
    }
    LinComb::from_terms(parts.into_iter().enumerate().map(|(i, p)| (p, a[i][k].clone())))
}

/// `m_μ(1^n)`: the number of distinct monomials of shape `μ` in `n`
/// variables.
pub fn m_eval_at_n(mu: &IntegerPartition, n: usize) -> BigInt {
    let l = mu.len();
    if l > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..l {
        num *= n - i;
    }
    for m in mu.multiplicities().values() {
        for j in 1..=*m {
            num /= j;
        }
    }
    num
}

/// Number of fixed-point-free permutations of `[k]`.
pub fn derangements(k: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::zero());
    if k == 0 {
        return a;
    }
    for i in 2..=k {
        let c = (i - 1) * (&a + &b);
        a = b;
        b = c;
    }
    b
}

/// Character value `χ^λ(μ)`, read off `p_μ = Σ_λ χ^λ(μ) s_λ`.
pub fn character(lam: &IntegerPartition, mu: &IntegerPartition) -> BigInt {
    let s = SymFunc::new(Basis::P, LinComb::basis(mu.clone()))
        .convert(Basis::S)
        .expect("small degree");
    let c = s.coeffs.coeff(lam);
    assert!(c.is_integer());
    c.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn part(v: &[usize]) -> IntegerPartition {
        IntegerPartition::from_parts_unchecked(v.to_vec())
    }

    #[test]
    fn h2_in_m() {
        let m = SymFunc::h(2).to_m().unwrap();
        assert_eq!(m.to_string(), "m(1,1) + m(2)");
    }

    #[test]
    fn degree_one_bases_agree() {
        let m = SymFunc::elem(Basis::M, &[1]);
        for b in Basis::ALL {
            assert_eq!(SymFunc::elem(b, &[1]).to_m().unwrap(), m);
        }
    }

    #[test]
    fn pieri_hooks() {
        for n in 1..=6 {
            for k in 0..=n {
                let prod = SymFunc::e(k).mul(&SymFunc::h(n - k)).unwrap().convert(Basis::S).unwrap();
                let mut expect = LinComb::zero();
                if k < n {
                    let mut hook = vec![n - k];
                    hook.extend(std::iter::repeat_n(1, k));
                    expect.add_term(part(&hook), q(1));
                }
                if k >= 1 {
                    let mut hook = vec![n - k + 1];
                    hook.extend(std::iter::repeat_n(1, k - 1));
                    expect.add_term(part(&hook), q(1));
                }
                assert_eq!(prod.coeffs, expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn eval_and_derangements() {
        assert_eq!(m_eval_at_n(&part(&[1, 1]), 2), BigInt::from(1));
        assert_eq!(m_eval_at_n(&part(&[2]), 3), BigInt::from(3));
        let d: Vec<BigInt> = (0..6).map(derangements).collect();
        assert_eq!(d, [1, 0, 1, 2, 9, 44].map(BigInt::from));
    }

    #[test]
    fn characters_of_s3() {
        let sign = part(&[1, 1, 1]);
        assert_eq!(character(&sign, &part(&[2, 1])), BigInt::from(-1));
        assert_eq!(character(&part(&[2, 1]), &part(&[3])), BigInt::from(-1));
        assert_eq!(character(&part(&[2, 1]), &part(&[1, 1, 1])), BigInt::from(2));
    }

    #[test]
    fn m_products() {
        let p = m_product(&part(&[1]), &part(&[1]));
        assert_eq!(p[&part(&[2])], BigInt::from(1));
        assert_eq!(p[&part(&[1, 1])], BigInt::from(2));
    }
}
