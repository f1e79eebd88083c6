//! Polynomial realization in commuting variables `x_ij` modulo
//! `x_ij x_ik = 0`, truncated to indices `<= N`.
//!
//! This recomputes products without any shuffle or conjugation, so it
//! serves as an independent check of [`product_m`](super::product_m).

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::combinat::maps::MapLabel;
use crate::combinat::word::subsets_of_size;
use crate::error::{Error, Result};
use crate::linear::LinComb;

/// A squarefree monomial `∏ x_{i j}`, stored as its sorted pairs. Rows are
/// distinct, so it is a partial map from rows to columns.
pub type OracleMonomial = Vec<(usize, usize)>;

pub type OraclePoly = BTreeMap<OracleMonomial, BigInt>;

/// `M_f` truncated to indices in `[N]`.
pub fn realize<T: MapLabel>(f: &T, n_vars: usize) -> OraclePoly {
    let f = f.map();
    let mut out = OraclePoly::new();
    for mask in subsets_of_size(n_vars, f.len()) {
        let idx: Vec<usize> = (1..=n_vars).filter(|&i| mask[i - 1]).collect();
        let mono: OracleMonomial = (0..f.len()).map(|k| (idx[k], idx[f[k] - 1])).collect();
        *out.entry(mono).or_default() += 1;
    }
    out
}

pub fn realize_lincomb<T: MapLabel>(x: &LinComb<T>, n_vars: usize) -> OraclePoly {
    let mut out = OraclePoly::new();
    for (f, c) in x.iter() {
        for (mono, d) in realize(f, n_vars) {
            *out.entry(mono).or_default() += c * d;
        }
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}

/// Product in `R/J`: monomials sharing a row vanish.
pub fn multiply(a: &OraclePoly, b: &OraclePoly) -> OraclePoly {
    let mut out = OraclePoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let rows_clash = ma.iter().any(|(r, _)| mb.iter().any(|(s, _)| r == s));
            if rows_clash {
                continue;
            }
            let mut m: OracleMonomial = ma.iter().chain(mb.iter()).copied().collect();
            m.sort_unstable();
            *out.entry(m).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}

/// Compares `realize(f)·realize(g)` with the realization of `rule(f, g)`.
///
/// Requires `N >= deg f + deg g`: below that, distinct basis elements of
/// the product degree may realize to the same truncated polynomial.
pub fn product_check<T: MapLabel>(
    f: &T,
    g: &T,
    n_vars: usize,
    rule: impl Fn(&T, &T) -> LinComb<T>,
) -> Result<bool> {
    let needed = f.degree() + g.degree();
    if n_vars < needed {
        return Err(Error::TruncationTooSmall {
            given: n_vars,
            needed,
        });
    }
    let lhs = multiply(&realize(f, n_vars), &realize(g, n_vars));
    let rhs = realize_lincomb(&rule(f, g), n_vars);
    Ok(lhs == rhs)
}

/// Reads an element back from its realization at `N = degree`, using the
/// leading monomial `x_{1 f(1)} ⋯ x_{n f(n)}` of each `M_f`.
pub fn read_back<T: MapLabel>(p: &OraclePoly, degree: usize) -> LinComb<T> {
    let full: Vec<usize> = (1..=degree).collect();
    LinComb::from_terms(p.iter().filter_map(|(mono, c)| {
        let rows: Vec<usize> = mono.iter().map(|(r, _)| *r).collect();
        (rows == full).then(|| (T::from_map_unchecked(mono.iter().map(|(_, c)| *c).collect()), c.clone()))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::maps::Endofunction;
    use crate::eqsym::product_m;

    fn e(v: &[usize]) -> Endofunction {
        Endofunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unit_and_small_checks() {
        let one = Endofunction::empty();
        assert!(product_check(&one, &e(&[2, 1]), 2, product_m).unwrap());
        assert!(product_check(&e(&[1]), &e(&[2, 2]), 5, product_m).unwrap());
        assert!(product_check(&e(&[1, 2]), &e(&[2, 1]), 6, product_m).unwrap());
        assert!(matches!(
            product_check(&e(&[1]), &e(&[2, 2]), 2, product_m),
            Err(Error::TruncationTooSmall { .. })
        ));
    }

    #[test]
    fn read_back_recovers_product() {
        let p = multiply(&realize(&e(&[1]), 3), &realize(&e(&[2, 2]), 3));
        let x: LinComb<Endofunction> = read_back(&p, 3);
        assert_eq!(x, product_m(&e(&[1]), &e(&[2, 2])));
    }
}
