use hopfcomb::combinat::enumerate::permutations;
use hopfcomb::combinat::maps::Permutation;
use hopfcomb::combinat::partitions::IntegerPartition;
use hopfcomb::eqsym::SBasis;
use hopfcomb::hopf::{hopf_check, HopfAlgebra};
use hopfcomb::linear::LinComb;
use hopfcomb::phisym::oracle::product_by_biwords;
use hopfcomb::phisym::{
    convert, coproduct_phi, iso_check, product_phi, product_y_with, PhiBasis, PhiSym, YQuotient,
};
use num_bigint::BigInt;

#[test]
fn coefficients_are_zero_or_one() {
    for n in 1..=5 {
        for m in 1..=6 - n {
            for a in permutations(n) {
                for b in permutations(m) {
                    assert!(product_phi(&a, &b).iter().all(|(_, c)| *c == BigInt::from(1)), "{a} {b}");
                }
            }
        }
    }
}

#[test]
fn biword_oracle() {
    for n in 1..=3 {
        for m in 1..=4 - n {
            for a in permutations(n) {
                for b in permutations(m) {
                    let k = n + m;
                    assert_eq!(product_by_biwords(&a, &b, k, k).unwrap(), product_phi(&a, &b), "{a} {b}");
                }
            }
        }
    }
}

#[test]
fn phi_axioms() {
    let r = hopf_check(&PhiSym::default(), 5);
    assert!(r.axioms_hold(), "{r}");
    assert!(r.cocommutative.passed());
    let y = hopf_check(&YQuotient, 6);
    assert!(y.axioms_hold() && y.commutative.passed() && y.cocommutative.passed());
}

#[test]
fn round_trips_degree_five() {
    for s in permutations(5) {
        let x = LinComb::basis(s);
        for b in [PhiBasis::SPrime, PhiBasis::SSecond] {
            assert_eq!(convert(b, PhiBasis::Phi, &convert(PhiBasis::Phi, b, &x)), x);
        }
    }
}

#[test]
fn s_prime_products_match_sgsym() {
    let sg = SBasis::<Permutation>::new();
    let alg = PhiSym::new(PhiBasis::SPrime);
    for n in 1..=3 {
        for m in 1..=4 - n {
            for s in permutations(n) {
                for t in permutations(m) {
                    assert_eq!(alg.product(&s, &t), sg.product(&s, &t));
                }
            }
        }
    }
}

/// The map S^σ ↦ S′_σ is multiplicative but not comultiplicative: φ_12 is
/// not S′_12, so Δ φ_4231 picks up a S′_21 ⊗ S′_21 term.
#[test]
fn s_prime_coproduct_differs_at_4231() {
    let sg = SBasis::<Permutation>::new();
    let alg = PhiSym::new(PhiBasis::SPrime);
    let s = hopfcomb::combinat::notation::parse_permutation("4231").unwrap();
    let t = hopfcomb::combinat::notation::parse_permutation("21").unwrap();
    let d = alg.coproduct(&s);
    assert_eq!(d.coeff(&t, &t), BigInt::from(-2));
    assert_eq!(sg.coproduct(&s).coeff(&t, &t), BigInt::from(0));
}

#[test]
fn s_second_matches_sgsym() {
    let sg = SBasis::<Permutation>::new();
    for b in [PhiBasis::SSecond] {
        let alg = PhiSym::new(b);
        for n in 1..=4 {
            for s in permutations(n) {
                assert_eq!(alg.coproduct(&s), sg.coproduct(&s), "{:?} Δ{s}", b);
            }
            for m in 1..=4 - n {
                for s in permutations(n) {
                    for t in permutations(m) {
                        assert_eq!(alg.product(&s, &t), sg.product(&s, &t), "{:?} {s}*{t}", b);
                    }
                }
            }
        }
    }
}

#[test]
fn y_representative_independence() {
    for n in 1..=4 {
        for m in 1..=5 - n {
            let mut seen = std::collections::BTreeMap::new();
            for a in permutations(n) {
                for b in permutations(m) {
                    let key: (IntegerPartition, IntegerPartition) = (a.cycle_type(), b.cycle_type());
                    let img = product_y_with(&a, &b);
                    assert_eq!(seen.entry(key).or_insert_with(|| img.clone()), &img);
                }
            }
        }
    }
    for n in 1..=5 {
        let mut seen = std::collections::BTreeMap::new();
        for a in permutations(n) {
            let img = coproduct_phi(&a).map_labels(|g| g.cycle_type());
            assert_eq!(seen.entry(a.cycle_type()).or_insert_with(|| img.clone()), &img);
        }
    }
}

#[test]
fn y_is_sym() {
    assert!(iso_check(6));
}
