//! Counting series: connected endofunctions and the graded dimensions of
//! the free Lie algebra of primitives.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Power series truncated after degree `n`.
fn mul_series(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of a series with constant term one.
fn inverse_series(a: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut inv = vec![BigInt::zero(); n + 1];
    inv[0] = BigInt::one();
    for k in 1..=n {
        let mut s = BigInt::zero();
        for j in 1..=k.min(a.len() - 1) {
            s += &a[j] * &inv[k - j];
        }
        inv[k] = -s;
    }
    inv
}

/// `E(t) = Σ n^n t^n`, with `0^0 = 1`.
pub fn endofunction_series(n: usize) -> Vec<BigInt> {
    (0..=n).map(|k| BigInt::from(k).pow(k as u32)).collect()
}

/// Coefficients of `C(t) = 1 - 1/E(t)`; index `k` counts connected
/// endofunctions of size `k`.
pub fn connected_series(n: usize) -> Vec<BigInt> {
    let inv = inverse_series(&endofunction_series(n), n);
    let mut c: Vec<BigInt> = inv.into_iter().map(|x| -x).collect();
    c[0] += 1;
    c
}

pub fn connected_count(n: usize) -> BigInt {
    connected_series(n)[n].clone()
}

fn mobius(n: usize) -> i64 {
    let mut m = n;
    let mut res = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            res = -res;
        }
        p += 1;
    }
    if m > 1 {
        res = -res;
    }
    res
}

/// `ℓ_n` through `b_n = [t^n] t C'(t)/(1 - C(t)) = Σ_{d|n} d ℓ_d` and
/// Möbius inversion.
pub fn lie_dims_mobius(n: usize) -> Vec<BigInt> {
    let c = connected_series(n);
    let dc: Vec<BigInt> = (0..=n).map(|k| &c[k] * k).collect();
    let mut one_minus = c.iter().map(|x| -x).collect::<Vec<_>>();
    one_minus[0] += 1;
    let b = mul_series(&dc, &inverse_series(&one_minus, n), n);
    (0..=n)
        .map(|k| {
            if k == 0 {
                return BigInt::zero();
            }
            let mut s = BigInt::zero();
            for d in (1..=k).filter(|d| k % d == 0) {
                s += &b[d] * mobius(k / d);
            }
            s / k
        })
        .collect()
}

/// `ℓ_n` by peeling factors off `∏_k (1 - t^k)^{-ℓ_k} = E(t)`.
pub fn lie_dims(n: usize) -> Vec<BigInt> {
    let mut s = endofunction_series(n);
    let mut l = vec![BigInt::zero(); n + 1];
    for k in 1..=n {
        l[k] = s[k].clone();
        // multiply by (1 - t^k)^{ℓ_k} = Σ_j (-1)^j C(ℓ_k, j) t^{kj}
        let mut factor = vec![BigInt::zero(); n + 1];
        let mut binom = BigInt::one();
        for j in 0..=n / k {
            factor[j * k] = if j % 2 == 0 { binom.clone() } else { -binom.clone() };
            binom = binom * (&l[k] - j) / (j + 1);
        }
        s = mul_series(&s, &factor, n);
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn connected_prefix() {
        let c = connected_series(8);
        assert_eq!(c[1..], ints(&[1, 3, 20, 197, 2511, 38924, 708105, 14769175])[..]);
    }

    #[test]
    fn lie_prefix_two_routes() {
        let expect = ints(&[1, 3, 23, 223, 2800, 42576, 763220, 15734388]);
        assert_eq!(lie_dims_mobius(8)[1..], expect[..]);
        assert_eq!(lie_dims(8)[1..], expect[..]);
    }
}
