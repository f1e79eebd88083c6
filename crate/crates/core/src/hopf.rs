//! Generic graded (twisted) bialgebra interface and exhaustive axiom checks.

use std::collections::BTreeMap;
use std::fmt;

use crate::linear::{Label, LinComb, Tensor2};
use crate::ring::Ring;

/// A graded connected bialgebra given by its structure constants on a basis.
pub trait HopfAlgebra {
    type L: Label;
    type R: Ring;

    /// Algebra id, e.g. `eqsym`.
    fn id(&self) -> &'static str;
    /// Basis name used when printing, e.g. `M`.
    fn basis_name(&self) -> &'static str;
    /// All basis labels of degree `n`.
    fn basis(&self, n: usize) -> Vec<Self::L>;
    /// The degree-zero label.
    fn unit(&self) -> Self::L;
    fn product(&self, a: &Self::L, b: &Self::L) -> LinComb<Self::L, Self::R>;
    fn coproduct(&self, a: &Self::L) -> Tensor2<Self::L, Self::R>;

    /// `χ(deg b, deg a′)` used to multiply tensors; one for untwisted
    /// bialgebras.
    fn chi(&self, _deg_b: usize, _deg_a: usize) -> Self::R {
        Self::R::one()
    }

    fn mul(&self, x: &LinComb<Self::L, Self::R>, y: &LinComb<Self::L, Self::R>) -> LinComb<Self::L, Self::R> {
        x.mul_with(y, |a, b| self.product(a, b))
    }

    fn comul(&self, x: &LinComb<Self::L, Self::R>) -> Tensor2<Self::L, Self::R> {
        x.apply_tensor(|a| self.coproduct(a))
    }

    fn tensor_mul(
        &self,
        x: &Tensor2<Self::L, Self::R>,
        y: &Tensor2<Self::L, Self::R>,
    ) -> Tensor2<Self::L, Self::R> {
        x.mul_twisted(y, |a, b| self.product(a, b), |d, e| self.chi(d, e))
    }

    fn show(&self, x: &LinComb<Self::L, Self::R>) -> String {
        x.display(self.basis_name())
    }

    fn show_tensor(&self, x: &Tensor2<Self::L, Self::R>) -> String {
        x.display(self.basis_name())
    }
}

/// Outcome of one axiom over all basis elements up to the degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl Check {
    pub fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: yes ({} cases)", self.name, self.cases),
            Some(c) => write!(f, "{}: no, counterexample {}", self.name, c),
        }
    }
}

/// Results of `hopf_check`. Axioms are expected to pass; commutativity and
/// cocommutativity are properties reported either way.
#[derive(Clone, Debug)]
pub struct HopfReport {
    pub algebra: String,
    pub max_degree: usize,
    pub unit: Check,
    pub counit: Check,
    pub associativity: Check,
    pub coassociativity: Check,
    pub compatibility: Check,
    pub commutative: Check,
    pub cocommutative: Check,
}

impl HopfReport {
    /// True when every axiom holds (properties are not axioms).
    pub fn axioms_hold(&self) -> bool {
        [
            &self.unit,
            &self.counit,
            &self.associativity,
            &self.coassociativity,
            &self.compatibility,
        ]
        .iter()
        .all(|c| c.passed())
    }

    pub fn checks(&self) -> [&Check; 7] {
        [
            &self.unit,
            &self.counit,
            &self.associativity,
            &self.coassociativity,
            &self.compatibility,
            &self.commutative,
            &self.cocommutative,
        ]
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {} up to degree {}", self.algebra, self.max_degree)?;
        for c in self.checks() {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

type Triple<L, R> = BTreeMap<(L, L, L), R>;

fn add_triple<L: Label, R: Ring>(m: &mut Triple<L, R>, k: (L, L, L), c: R) {
    let e = m.entry(k).or_insert_with(R::zero);
    e.add_assign_ref(&c);
}

fn clean<L: Label, R: Ring>(mut m: Triple<L, R>) -> Triple<L, R> {
    m.retain(|_, c| !c.is_zero());
    m
}

/// Basis labels of every degree in `1..=max`.
fn positive_basis<H: HopfAlgebra>(alg: &H, max: usize) -> Vec<Vec<H::L>> {
    (0..=max)
        .map(|d| if d == 0 { Vec::new() } else { alg.basis(d) })
        .collect()
}

/// Exhaustively checks the bialgebra axioms on basis elements.
///
/// Products are tested on pairs and triples of total degree at most
/// `max_degree`; coproduct axioms on every label of degree at most
/// `max_degree`.
pub fn hopf_check<H: HopfAlgebra>(alg: &H, max_degree: usize) -> HopfReport {
    let by_deg = positive_basis(alg, max_degree);
    let one = alg.unit();
    let mut unit = Check::new("unit");
    let mut counit = Check::new("counit");
    let mut assoc = Check::new("associativity");
    let mut coassoc = Check::new("coassociativity");
    let mut compat = Check::new("compatibility");
    let mut comm = Check::new("commutative");
    let mut cocomm = Check::new("cocommutative");

    let u1 = alg.product(&one, &one);
    unit.record(u1 == LinComb::basis(one.clone()), || "1*1 != 1".into());
    let d1 = alg.coproduct(&one);
    counit.record(d1 == Tensor2::basis(one.clone(), one.clone()), || {
        "Δ(1) != 1⊗1".into()
    });

    for d in 1..=max_degree {
        for a in &by_deg[d] {
            let x = LinComb::basis(a.clone());
            unit.record(
                alg.product(&one, a) == x && alg.product(a, &one) == x,
                || format!("1*{a}"),
            );
            let da = alg.coproduct(a);
            let left: LinComb<H::L, H::R> = LinComb::from_terms(
                da.iter()
                    .filter(|((l, _), _)| l.degree() == 0)
                    .map(|((_, r), c)| (r.clone(), c.clone())),
            );
            let right: LinComb<H::L, H::R> = LinComb::from_terms(
                da.iter()
                    .filter(|((_, r), _)| r.degree() == 0)
                    .map(|((l, _), c)| (l.clone(), c.clone())),
            );
            counit.record(left == x && right == x, || format!("counit on {a}"));
            cocomm.record(da.swap() == da, || format!("Δ({a}) not symmetric"));

            let mut lhs: Triple<H::L, H::R> = BTreeMap::new();
            let mut rhs: Triple<H::L, H::R> = BTreeMap::new();
            for ((l, r), c) in da.iter() {
                for ((ll, lr), c2) in alg.coproduct(l).iter() {
                    add_triple(&mut lhs, (ll.clone(), lr.clone(), r.clone()), c.mul_ref(c2));
                }
                for ((rl, rr), c2) in alg.coproduct(r).iter() {
                    add_triple(&mut rhs, (l.clone(), rl.clone(), rr.clone()), c.mul_ref(c2));
                }
            }
            coassoc.record(clean(lhs) == clean(rhs), || format!("on {a}"));
        }
    }

    for da in 1..max_degree {
        for db in 1..=max_degree - da {
            for a in &by_deg[da] {
                for b in &by_deg[db] {
                    let ab = alg.product(a, b);
                    if da <= db {
                        let ba = alg.product(b, a);
                        comm.record(ab == ba, || format!("{a}*{b} != {b}*{a}"));
                    }
                    let lhs = alg.comul(&ab);
                    let rhs = alg.tensor_mul(&alg.coproduct(a), &alg.coproduct(b));
                    compat.record(lhs == rhs, || format!("Δ({a}*{b})"));
                    for dc in 1..=max_degree.saturating_sub(da + db) {
                        for c in &by_deg[dc] {
                            let l = alg.mul(&ab, &LinComb::basis(c.clone()));
                            let r = alg.mul(&LinComb::basis(a.clone()), &alg.product(b, c));
                            assoc.record(l == r, || format!("({a}*{b})*{c}"));
                        }
                    }
                }
            }
        }
    }

    HopfReport {
        algebra: alg.id().to_string(),
        max_degree,
        unit,
        counit,
        associativity: assoc,
        coassociativity: coassoc,
        compatibility: compat,
        commutative: comm,
        cocommutative: cocomm,
    }
}

/// Checks that `dual` is the graded dual of `alg` in the sense that their
/// bases are dual: `⟨a·b, c⟩ = ⟨a⊗b, Δ*c⟩` and `⟨Δc, a⊗b⟩ = ⟨c, a*b⟩`
/// for all basis triples with `deg a + deg b = deg c <= max_degree`.
pub fn duality_check<H, D>(alg: &H, dual: &D, max_degree: usize) -> Check
where
    H: HopfAlgebra,
    D: HopfAlgebra<L = H::L, R = H::R>,
{
    let mut chk = Check::new("duality");
    for n in 1..=max_degree {
        let cs = alg.basis(n);
        let dcs: BTreeMap<H::L, Tensor2<H::L, H::R>> =
            cs.iter().map(|c| (c.clone(), dual.coproduct(c))).collect();
        let acs: BTreeMap<H::L, Tensor2<H::L, H::R>> =
            cs.iter().map(|c| (c.clone(), alg.coproduct(c))).collect();
        for da in 0..=n {
            let as_ = if da == 0 { vec![alg.unit()] } else { alg.basis(da) };
            let bs = if da == n { vec![alg.unit()] } else { alg.basis(n - da) };
            for a in &as_ {
                for b in &bs {
                    let ab = alg.product(a, b);
                    let dab = dual.product(a, b);
                    for c in &cs {
                        let l = ab.coeff(c);
                        let r = dcs[c].coeff(a, b);
                        chk.record(l == r, || format!("⟨{a}·{b}, {c}⟩: {l} vs {r}"));
                        let l2 = acs[c].coeff(a, b);
                        let r2 = dab.coeff(c);
                        chk.record(l2 == r2, || format!("⟨Δ{c}, {a}⊗{b}⟩: {l2} vs {r2}"));
                    }
                }
            }
        }
    }
    chk
}

/// Checks that products and coproducts of basis elements satisfying `pred`
/// expand only over labels satisfying `pred`.
pub fn closure_check<H: HopfAlgebra>(
    alg: &H,
    max_degree: usize,
    pred: impl Fn(&H::L) -> bool,
) -> Check {
    let mut chk = Check::new("closure");
    let by_deg: Vec<Vec<H::L>> = positive_basis(alg, max_degree)
        .into_iter()
        .map(|v| v.into_iter().filter(|l| pred(l)).collect())
        .collect();
    for d in 1..=max_degree {
        for a in &by_deg[d] {
            let ok = alg.coproduct(a).iter().all(|((l, r), _)| pred(l) && pred(r));
            chk.record(ok, || format!("Δ({a})"));
        }
    }
    for da in 1..max_degree {
        for db in 1..=max_degree - da {
            for a in &by_deg[da] {
                for b in &by_deg[db] {
                    let ok = alg.product(a, b).labels().all(&pred);
                    chk.record(ok, || format!("{a}*{b}"));
                }
            }
        }
    }
    chk
}
