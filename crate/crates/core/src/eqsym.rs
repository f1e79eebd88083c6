//! The commutative Hopf algebra of endofunctions, basis `M_f`, and its
//! graded dual, basis `S^f`.
//!
//! The rules are generic over [`MapFamily`], so the same code gives the
//! permutation and parking-function subalgebras.

use std::marker::PhantomData;

use num_bigint::BigInt;

use crate::combinat::enumerate;
use crate::combinat::maps::{components, conjugate, Endofunction, MapLabel, ParkingFunction, Permutation};
use crate::combinat::word::subsets_of_size;
use crate::hopf::HopfAlgebra;
use crate::linear::{LinComb, Tensor2};

pub mod oracle;
pub mod series;

/// A family of maps closed under the EQSym structure.
pub trait MapFamily: MapLabel {
    /// Algebra id of the `M` side.
    const M_ID: &'static str;
    /// Algebra id of the dual `S` side.
    const S_ID: &'static str;
    fn all(n: usize) -> Vec<Self>;
}

impl MapFamily for Endofunction {
    const M_ID: &'static str = "eqsym";
    const S_ID: &'static str = "esym";
    fn all(n: usize) -> Vec<Self> {
        enumerate::endofunctions(n).collect()
    }
}

impl MapFamily for Permutation {
    const M_ID: &'static str = "sgqsym";
    const S_ID: &'static str = "sgsym";
    fn all(n: usize) -> Vec<Self> {
        enumerate::permutations(n).collect()
    }
}

impl MapFamily for ParkingFunction {
    const M_ID: &'static str = "cpqsym";
    const S_ID: &'static str = "cpqsym-dual";
    fn all(n: usize) -> Vec<Self> {
        enumerate::parking_functions(n).collect()
    }
}

/// Shuffles of `(1..n)` and `(n+1..n+m)` as permutation words.
pub fn shuffle_perms(n: usize, m: usize) -> Vec<Vec<usize>> {
    subsets_of_size(n + m, n)
        .into_iter()
        .map(|mask| {
            let (mut a, mut b) = (0, n);
            mask.iter()
                .map(|&first| {
                    if first {
                        a += 1;
                        a
                    } else {
                        b += 1;
                        b
                    }
                })
                .collect()
        })
        .collect()
}

/// `M_f M_g = Σ_h C^h_{f,g} M_h` where `C^h_{f,g}` counts shuffles `τ`
/// with `h = τ^{-1} ∘ (f•g) ∘ τ`.
pub fn product_m<T: MapLabel>(f: &T, g: &T) -> LinComb<T> {
    let fg = f.shifted_concat(g);
    let one = BigInt::from(1);
    let mut out = LinComb::zero();
    for tau in shuffle_perms(f.degree(), g.degree()) {
        out.add_term(T::from_map_unchecked(conjugate(fg.map(), &tau)), one.clone());
    }
    out
}

/// `Δ M_h = Σ_{f•g = h} M_f ⊗ M_g`, one term per cut point.
pub fn coproduct_m<T: MapLabel>(h: &T) -> Tensor2<T> {
    let mut out = Tensor2::zero();
    for k in h.cut_points() {
        let (f, g) = h.split_at_cut(k);
        out.add_term(f, g, BigInt::from(1));
    }
    out
}

/// `S^f S^g = S^{f•g}`.
pub fn product_s<T: MapLabel>(f: &T, g: &T) -> LinComb<T> {
    LinComb::basis(f.shifted_concat(g))
}

/// `Δ S^h`, the transpose of the `M` product: one term for each union `A`
/// of weakly connected components of `h`, namely
/// `S^{std(h|A)} ⊗ S^{std(h|B)}` with `B` the complement.
pub fn coproduct_s<T: MapLabel>(h: &T) -> Tensor2<T> {
    let comps = components(h.map());
    let k = comps.len();
    let mut out = Tensor2::zero();
    for mask in 0u64..(1u64 << k) {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, c) in comps.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.extend_from_slice(c);
            } else {
                b.extend_from_slice(c);
            }
        }
        out.add_term(h.restrict_std(&a), h.restrict_std(&b), BigInt::from(1));
    }
    out
}

/// The `M` basis of the algebra of a map family.
#[derive(Clone, Copy, Debug, Default)]
pub struct MBasis<T>(PhantomData<T>);

/// The dual `S` basis.
#[derive(Clone, Copy, Debug, Default)]
pub struct SBasis<T>(PhantomData<T>);

impl<T> MBasis<T> {
    pub fn new() -> Self {
        MBasis(PhantomData)
    }
}

impl<T> SBasis<T> {
    pub fn new() -> Self {
        SBasis(PhantomData)
    }
}

pub type EQSym = MBasis<Endofunction>;
pub type ESym = SBasis<Endofunction>;

impl<T: MapFamily> HopfAlgebra for MBasis<T> {
    type L = T;
    type R = BigInt;
    fn id(&self) -> &'static str {
        T::M_ID
    }
    fn basis_name(&self) -> &'static str {
        "M"
    }
    fn basis(&self, n: usize) -> Vec<T> {
        T::all(n)
    }
    fn unit(&self) -> T {
        T::from_map_unchecked(Vec::new())
    }
    fn product(&self, a: &T, b: &T) -> LinComb<T> {
        product_m(a, b)
    }
    fn coproduct(&self, a: &T) -> Tensor2<T> {
        coproduct_m(a)
    }
}

impl<T: MapFamily> HopfAlgebra for SBasis<T> {
    type L = T;
    type R = BigInt;
    fn id(&self) -> &'static str {
        T::S_ID
    }
    fn basis_name(&self) -> &'static str {
        "S"
    }
    fn basis(&self, n: usize) -> Vec<T> {
        T::all(n)
    }
    fn unit(&self) -> T {
        T::from_map_unchecked(Vec::new())
    }
    fn product(&self, a: &T, b: &T) -> LinComb<T> {
        product_s(a, b)
    }
    fn coproduct(&self, a: &T) -> Tensor2<T> {
        coproduct_s(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::notation::parse_endofunction;

    fn e(s: &str) -> Endofunction {
        parse_endofunction(s).unwrap()
    }

    fn m(terms: &[(&str, i64)]) -> LinComb<Endofunction> {
        LinComb::from_terms(terms.iter().map(|(s, c)| (e(s), BigInt::from(*c))))
    }

    #[test]
    fn small_products() {
        assert_eq!(product_m(&e("1"), &e("22")), m(&[("133", 1), ("323", 1), ("223", 1)]));
        assert_eq!(
            product_m(&e("1"), &e("331")),
            m(&[("1442", 1), ("4241", 1), ("4431", 1), ("3314", 1)])
        );
        assert_eq!(
            product_m(&e("12"), &e("22")),
            m(&[("1244", 1), ("1434", 1), ("4234", 1), ("1334", 1), ("3234", 1), ("2234", 1)])
        );
    }

    #[test]
    fn unit_and_coproducts() {
        let one = Endofunction::empty();
        assert_eq!(product_m(&one, &e("21")), m(&[("21", 1)]));
        assert_eq!(coproduct_m(&one), Tensor2::basis(one.clone(), one.clone()));
        let d = coproduct_m(&e("4232277"));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&e("42322"), &e("22")), BigInt::from(1));
    }

    #[test]
    fn dual_side() {
        assert_eq!(product_s(&e("12"), &e("21")), m(&[("1243", 1)]));
        let d = coproduct_s(&e("133"));
        assert_eq!(d.coeff(&e("1"), &e("22")), BigInt::from(1));
        // connected but two components: 1 and 22 inside 133
        assert_eq!(d.len(), 4);
    }

    #[test]
    fn shuffle_count() {
        assert_eq!(shuffle_perms(2, 2).len(), 6);
        assert_eq!(shuffle_perms(0, 3), vec![vec![1, 2, 3]]);
    }
}
