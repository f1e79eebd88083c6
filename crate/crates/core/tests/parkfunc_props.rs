use hopfcomb::combinat::enumerate;
use hopfcomb::combinat::maps::ParkingFunction;
use hopfcomb::eqsym::{coproduct_m, product_m};
use hopfcomb::combinat::notation::parse_parking;
use hopfcomb::hopf::{duality_check, hopf_check, HopfAlgebra};
use hopfcomb::parkfunc::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn is_parking(p: &ParkingFunction) -> bool {
    let mut v = p.as_slice().to_vec();
    v.sort_unstable();
    v.iter().enumerate().all(|(i, &x)| x <= i + 1)
}

#[test]
fn parking_closed_under_eqsym() {
    for n in 0..=5 {
        for m in 0..=5 - n {
            for a in enumerate::parking_functions(n) {
                for b in enumerate::parking_functions(m) {
                    assert!(product_m(&a, &b).labels().all(is_parking), "{a}·{b}");
                }
            }
        }
        for a in enumerate::parking_functions(n) {
            assert!(coproduct_m(&a).iter().all(|((l, r), _)| is_parking(l) && is_parking(r)));
        }
    }
}

#[test]
fn cpqsym_and_ccqsym_axioms() {
    let cp = hopf_check(&CPQSym::new(), 4);
    assert!(cp.axioms_hold() && cp.commutative.passed());
    let cc = hopf_check(&CCQSym, 4);
    assert!(cc.axioms_hold() && cc.commutative.passed());
    assert!(hopf_check(&CCQSymDual, 4).axioms_hold());
    assert!(duality_check(&CCQSym, &CCQSymDual, 4).passed());
}

#[test]
fn ideal_and_coideal() {
    for n in 1..=4 {
        for a in enumerate::parking_functions(n).filter(|p| !is_nondecreasing(p)) {
            for m in 0..=4 - n {
                for b in enumerate::parking_functions(m) {
                    assert!(product_m(&a, &b).labels().all(|t| !is_nondecreasing(t)));
                    assert!(product_m(&b, &a).labels().all(|t| !is_nondecreasing(t)));
                }
            }
            assert!(coproduct_m(&a)
                .iter()
                .all(|((l, r), _)| !is_nondecreasing(l) || !is_nondecreasing(r)));
        }
    }
}

fn catalan(n: usize) -> BigInt {
    let mut c = BigInt::from(1);
    for k in 0..n {
        c = c * BigInt::from(2 * (2 * k + 1)) / BigInt::from(k + 2);
    }
    c
}

#[test]
fn catalan_dimensions_and_free_dual() {
    // indecomposable under shifted concatenation: no proper prefix of length k
    // followed by values all above k
    let irreducible = |p: &ParkingFunction| {
        let v = p.as_slice();
        (1..v.len()).all(|k| v[k] <= k)
    };
    let max = 6;
    let gens: Vec<usize> = (0..=max)
        .map(|n| if n == 0 { 0 } else { enumerate::nondecreasing_parking(n).iter().filter(|p| irreducible(p)).count() })
        .collect();
    // dimensions of the free algebra: 1/(1 - Σ g_n t^n)
    let mut free = vec![BigInt::from(0); max + 1];
    free[0] = BigInt::from(1);
    for n in 1..=max {
        for k in 1..=n {
            let add = &free[n - k] * BigInt::from(gens[k]);
            free[n] += add;
        }
    }
    for (n, dim) in free.iter().enumerate() {
        assert_eq!(BigInt::from(enumerate::nondecreasing_parking(n).len()), catalan(n));
        assert_eq!(dim, &catalan(n), "n = {n}");
    }
}

#[test]
fn rearrangement_sums_do_not_close() {
    assert!(rearrangement_sums_counterexample(4).is_some());
}

#[test]
fn unlabelled_counts() {
    let counts: Vec<usize> = (0..=6).map(unlabelled_count).collect();
    assert_eq!(counts, vec![1, 1, 3, 7, 19, 47, 130]);
    for n in 0..=5 {
        assert_eq!(endofunction_shape_count(n), counts[n]);
    }
    let sizes: Vec<usize> = shapes_of_parking(3).values().map(Vec::len).collect();
    assert_eq!((sizes.len(), sizes.iter().sum::<usize>()), (7, 16));
}

#[test]
fn unlabelled_count_seven() {
    assert_eq!(unlabelled_count(7), 343);
}

#[test]
fn parking_labellings_alone_do_not_close() {
    let (a, b) = parking_sums_counterexample(4).expect("a counterexample at size 4");
    assert_eq!(a.size() + b.size(), 4);
}

#[test]
fn unlabelled_is_polynomial() {
    let max = 6;
    let connected: Vec<usize> = (0..=max)
        .map(|n| shapes_of_parking(n).keys().filter(|g| g.is_connected()).count())
        .collect();
    let dims = polynomial_dimensions(&connected, max);
    for n in 0..=max {
        assert_eq!(dims[n], BigInt::from(unlabelled_count(n)));
    }
    // products are single disjoint unions
    for a in Unlabelled.basis(2) {
        for b in Unlabelled.basis(2) {
            let x = unlabelled_product(&a, &b).unwrap();
            assert_eq!(x.len(), 1);
            assert!(x.labels().all(|g| g == &a.union(&b)));
        }
    }
}

#[test]
fn unlabelled_and_forest_closure() {
    // the products panic unless every result regroups into whole classes
    assert!(hopf_check(&Unlabelled, 4).axioms_hold());
    assert!(hopf_check(&Forests, 4).axioms_hold());
    for n in 1..5 {
        for a in forest_basis(n) {
            for b in forest_basis(5 - n) {
                forest_product(&a, &b).unwrap();
            }
            for b in Unlabelled.basis(5 - n) {
                unlabelled_product(&shape(a.representative().as_slice()), &b).unwrap();
            }
        }
    }
    for g in Unlabelled.basis(5).iter().chain(forest_basis(5).iter()) {
        unlabelled_coproduct(g).unwrap();
    }
    for f in forest_basis(5) {
        forest_coproduct(&f).unwrap();
    }
    assert!(Forests.basis(4).iter().all(GraphShape::is_forest));
    // rooted forests on n nodes: 1, 1, 2, 4, 9, 20
    let counts: Vec<usize> = (0..=5).map(|n| forest_basis(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 9, 20]);
}

#[test]
fn single_node_forest_squared() {
    let dot = support_forest(&parse_parking("1").unwrap());
    let x = forest_product(&dot, &dot).unwrap();
    // the only nondecreasing term of M_1·M_1 is 12, reached twice
    assert_eq!(x.coeff(&dot.union(&dot)), BigInt::from(2));
    assert_eq!(x.len(), 1);
}

proptest! {
    #[test]
    fn certificate_is_invariant_under_relabelling(f in prop::collection::vec(1usize..=6, 6), perm in Just((1..=6).collect::<Vec<usize>>()).prop_shuffle()) {
        // g = perm ∘ f ∘ perm⁻¹
        let mut inv = [0; 6];
        for (i, &v) in perm.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        let g: Vec<usize> = (1..=6).map(|i| perm[f[inv[i - 1] - 1] - 1]).collect();
        prop_assert_eq!(shape(&f), shape(&g));
        let s = shape(&f);
        prop_assert_eq!(shape(s.representative().as_slice()), s.clone());
        prop_assert_eq!(s.to_string().parse::<GraphShape>().unwrap(), s);
    }
}
