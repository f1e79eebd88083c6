//! Exact coefficient rings: arbitrary-precision integers, rationals and
//! univariate integer polynomials in `q`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

/// A commutative ring with exact arithmetic.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Splits a coefficient into a sign and the printed magnitude used in
    /// front of a basis label: `""` for one, `"3*"`, `"q^2*"`, `"(q+1)*"`.
    fn term_prefix(&self) -> (bool, String);
}

impl Ring for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn term_prefix(&self) -> (bool, String) {
        let neg = self.is_negative();
        let abs = self.abs();
        if abs.is_one() {
            (neg, String::new())
        } else {
            (neg, format!("{abs}*"))
        }
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn term_prefix(&self) -> (bool, String) {
        let neg = self.is_negative();
        let abs = self.abs();
        if abs.is_one() {
            (neg, String::new())
        } else if abs.is_integer() {
            (neg, format!("{}*", abs.numer()))
        } else {
            (neg, format!("({}/{})*", abs.numer(), abs.denom()))
        }
    }
}

/// Polynomial in `q` with integer coefficients; `coeffs[k]` multiplies `q^k`.
/// Normal form carries no trailing zero coefficients, so zero is `[]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Single-term polynomial `c q^k`, if it is one.
    pub fn as_monomial(&self) -> Option<(BigInt, usize)> {
        let nz: Vec<usize> = (0..self.coeffs.len())
            .filter(|&k| !self.coeffs[k].is_zero())
            .collect();
        match nz.as_slice() {
            [k] => Some((self.coeffs[*k].clone(), *k)),
            _ => None,
        }
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// Specializes `q` to an integer value, keeping the result as a constant polynomial.
    pub fn specialize(&self, q: i64) -> QPoly {
        QPoly::from_coeffs(vec![self.eval(&BigInt::from(q))])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

fn fmt_q_term(c: &BigInt, k: usize) -> String {
    let abs = c.abs();
    let power = match k {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{k}"),
    };
    if k == 0 {
        abs.to_string()
    } else if abs.is_one() {
        power
    } else {
        format!("{abs}*{power}")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, "-")?,
                (false, false) => write!(f, "+")?,
            }
            write!(f, "{}", fmt_q_term(c, k))?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Parses the printed normal form, e.g. `3*q^2+1`, `-q+2`, `q^3`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' && i == 0 {
                neg = true;
            } else if ch == '+' && i == 0 {
            } else {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        let mut out = QPoly::zero();
        for (neg, t) in terms {
            let bad = || Error::Parse(format!("bad polynomial term `{t}`"));
            let (coef, power) = if let Some(idx) = t.find('q') {
                let c = &t[..idx];
                let c = c.strip_suffix('*').unwrap_or(c);
                let coef = if c.is_empty() {
                    BigInt::one()
                } else {
                    c.parse::<BigInt>().map_err(|_| bad())?
                };
                let rest = &t[idx + 1..];
                let power = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .ok_or_else(bad)?
                        .parse::<usize>()
                        .map_err(|_| bad())?
                };
                (coef, power)
            } else {
                (t.parse::<BigInt>().map_err(|_| bad())?, 0)
            };
            let coef = if neg { -coef } else { coef };
            out.add_assign_ref(&QPoly::monomial(coef, power));
        }
        Ok(out)
    }
}

impl Ring for QPoly {
    fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        QPoly {
            coeffs: vec![BigInt::one()],
        }
    }
    fn from_i64(v: i64) -> Self {
        QPoly::from_coeffs(vec![BigInt::from(v)])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k);
                let b = other.coeffs.get(k);
                match (a, b) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => BigInt::zero(),
                }
            })
            .collect();
        QPoly::from_coeffs(coeffs)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
    fn neg_ref(&self) -> Self {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn term_prefix(&self) -> (bool, String) {
        if let Some((c, k)) = self.as_monomial() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 && abs.is_one() {
                return (neg, String::new());
            }
            return (neg, format!("{}*", fmt_q_term(&abs, k)));
        }
        (false, format!("({self})*"))
    }
}

/// Converts a small exact integer to `i64`, for tests and printing.
pub fn to_i64(v: &BigInt) -> Option<i64> {
    v.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qpoly_normal_form_print_and_parse() {
        let p = QPoly::from_i64_coeffs(&[1, 0, 3, 0, 0]);
        assert_eq!(p.to_string(), "3*q^2+1");
        assert_eq!(p.degree(), Some(2));
        assert_eq!("3*q^2+1".parse::<QPoly>().unwrap(), p);
        assert_eq!("-q+2".parse::<QPoly>().unwrap(), QPoly::from_i64_coeffs(&[2, -1]));
        assert_eq!("q^3".parse::<QPoly>().unwrap(), QPoly::q_pow(3));
        assert_eq!(QPoly::zero().to_string(), "0");
        assert!("q^".parse::<QPoly>().is_err());
    }

    #[test]
    fn qpoly_arith() {
        let a = QPoly::from_i64_coeffs(&[1, 1]);
        let b = QPoly::from_i64_coeffs(&[1, -1]);
        assert_eq!(a.mul_ref(&b), QPoly::from_i64_coeffs(&[1, 0, -1]));
        assert!(a.add_ref(&a.neg_ref()).is_zero());
        assert_eq!(a.eval(&BigInt::from(2)), BigInt::from(3));
        assert_eq!(QPoly::q_pow(3).specialize(0), QPoly::zero());
        assert_eq!(QPoly::q_pow(0).specialize(0), QPoly::one());
    }

    #[test]
    fn prefixes() {
        assert_eq!(QPoly::q_pow(3).term_prefix(), (false, "q^3*".to_string()));
        assert_eq!(QPoly::one().term_prefix(), (false, String::new()));
        assert_eq!(
            QPoly::from_i64_coeffs(&[1, 1]).term_prefix(),
            (false, "(q+1)*".to_string())
        );
        assert_eq!(BigInt::from(-3).term_prefix(), (true, "3*".to_string()));
    }
}
