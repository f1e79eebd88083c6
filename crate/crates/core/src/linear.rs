//! Finite linear combinations of basis labels and their tensor squares.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::ring::{QPoly, Ring};

/// A canonical basis label. `Ord` must be graded by `degree` first, so
/// printed expansions list low degrees first.
pub trait Label: Clone + Ord + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync {
    fn degree(&self) -> usize;
}

/// A finite formal sum `Σ c_b b` with no zero coefficient stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<B: Label, R: Ring = BigInt> {
    terms: BTreeMap<B, R>,
}

impl<B: Label, R: Ring> Default for LinComb<B, R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Label, R: Ring> LinComb<B, R> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, R::one())
    }

    pub fn term(b: B, c: R) -> Self {
        let mut x = Self::zero();
        x.add_term(b, c);
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (B, R)>) -> Self {
        let mut x = Self::zero();
        for (b, c) in terms {
            x.add_term(b, c);
        }
        x
    }

    /// Sum of the labels, each with coefficient one per occurrence.
    pub fn from_labels(labels: impl IntoIterator<Item = B>) -> Self {
        Self::from_terms(labels.into_iter().map(|b| (b, R::one())))
    }

    pub fn add_term(&mut self, b: B, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(v) => {
                v.add_assign_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone());
        }
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, other: &Self, k: &R) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.mul_ref(k));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut x = self.clone();
        x.add_assign(other);
        x
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut x = self.clone();
        x.add_scaled(other, &R::one().neg_ref());
        x
    }

    pub fn scale(&self, k: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, c)| (b.clone(), c.mul_ref(k))))
    }

    pub fn neg(&self) -> Self {
        self.scale(&R::one().neg_ref())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> R {
        self.terms.get(b).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &R)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<B, R> {
        self.terms
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> R {
        let mut s = R::zero();
        for c in self.terms.values() {
            s.add_assign_ref(c);
        }
        s
    }

    /// Degree of every term, if they all agree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|b| b.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Linear extension of a map on labels.
    pub fn apply<C: Label>(&self, f: impl Fn(&B) -> LinComb<C, R>) -> LinComb<C, R> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Linear extension of a map on labels into a tensor square.
    pub fn apply_tensor<C: Label>(&self, f: impl Fn(&B) -> Tensor2<C, R>) -> Tensor2<C, R> {
        let mut out = Tensor2::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Bilinear extension of a product rule on labels.
    pub fn mul_with(&self, other: &Self, rule: impl Fn(&B, &B) -> Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&rule(a, b), &ca.mul_ref(cb));
            }
        }
        out
    }

    /// Relabels terms; labels mapping together are summed.
    pub fn map_labels<C: Label>(&self, f: impl Fn(&B) -> C) -> LinComb<C, R> {
        LinComb::from_terms(self.terms.iter().map(|(b, c)| (f(b), c.clone())))
    }

    /// Keeps only the terms whose label satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&B) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> LinComb<B, S> {
        LinComb::from_terms(self.terms.iter().map(|(b, c)| (b.clone(), f(c))))
    }

    /// The pairing making the basis self-dual: `⟨b, b'⟩ = δ`.
    pub fn pair(&self, other: &Self) -> R {
        let mut s = R::zero();
        for (b, c) in &self.terms {
            if let Some(d) = other.terms.get(b) {
                s.add_assign_ref(&c.mul_ref(d));
            }
        }
        s
    }

    /// Prints as `M[133] + 2*M[223]`; degree-zero labels print as `1`.
    pub fn display(&self, basis: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let (neg, prefix) = c.term_prefix();
            push_sign(&mut out, i == 0, neg);
            out.push_str(&prefix_term(&prefix, &label_str(basis, b)));
        }
        out
    }

    /// JSON array of `{label, coeff}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(b, c)| json!({"label": b.to_string(), "coeff": c.to_string()}))
                .collect(),
        )
    }
}

fn push_sign(out: &mut String, first: bool, neg: bool) {
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
}

/// A coefficient prefix in front of the bare unit prints without `*`.
fn prefix_term(prefix: &str, label: &str) -> String {
    if label == "1" && !prefix.is_empty() {
        let p = prefix.trim_end_matches('*');
        p.trim_start_matches('(').trim_end_matches(')').to_string()
    } else {
        format!("{prefix}{label}")
    }
}

fn label_str<B: Label>(basis: &str, b: &B) -> String {
    if b.degree() == 0 {
        "1".to_string()
    } else {
        format!("{basis}[{b}]")
    }
}

impl<B: Label, R: Ring> FromIterator<(B, R)> for LinComb<B, R> {
    fn from_iter<T: IntoIterator<Item = (B, R)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

impl<B: Label, R: Ring> fmt::Display for LinComb<B, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("B"))
    }
}

/// Element of the tensor square, keyed by ordered label pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor2<B: Label, R: Ring = BigInt> {
    terms: BTreeMap<(B, B), R>,
}

impl<B: Label, R: Ring> Default for Tensor2<B, R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Label, R: Ring> Tensor2<B, R> {
    pub fn zero() -> Self {
        Tensor2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(a: B, b: B) -> Self {
        Self::term(a, b, R::one())
    }

    pub fn term(a: B, b: B, c: R) -> Self {
        let mut x = Self::zero();
        x.add_term(a, b, c);
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((B, B), R)>) -> Self {
        let mut x = Self::zero();
        for ((a, b), c) in terms {
            x.add_term(a, b, c);
        }
        x
    }

    pub fn add_term(&mut self, a: B, b: B, c: R) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        match self.terms.get_mut(&key) {
            Some(v) => {
                v.add_assign_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for ((a, b), c) in &other.terms {
            self.add_term(a.clone(), b.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, k: &R) {
        for ((a, b), c) in &other.terms {
            self.add_term(a.clone(), b.clone(), c.mul_ref(k));
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut x = self.clone();
        x.add_scaled(other, &R::one().neg_ref());
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &B, b: &B) -> R {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(B, B), &R)> {
        self.terms.iter()
    }

    /// `x ⊗ y` for two linear combinations.
    pub fn outer(x: &LinComb<B, R>, y: &LinComb<B, R>) -> Self {
        let mut out = Self::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_term(a.clone(), b.clone(), ca.mul_ref(cb));
            }
        }
        out
    }

    /// Exchanges the two factors.
    pub fn swap(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())),
        )
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Tensor2<B, S> {
        Tensor2::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    pub fn map_labels<C: Label>(&self, f: impl Fn(&B) -> C) -> Tensor2<C, R> {
        Tensor2::from_terms(
            self.terms
                .iter()
                .map(|((a, b), c)| ((f(a), f(b)), c.clone())),
        )
    }

    /// Applies linear maps on each factor.
    pub fn apply_each<C: Label>(
        &self,
        f: impl Fn(&B) -> LinComb<C, R>,
        g: impl Fn(&B) -> LinComb<C, R>,
    ) -> Tensor2<C, R> {
        let mut out = Tensor2::zero();
        for ((a, b), c) in &self.terms {
            out.add_scaled(&Tensor2::outer(&f(a), &g(b)), c);
        }
        out
    }

    /// Product `(a⊗b)(a′⊗b′) = χ(b,a′) (aa′ ⊗ bb′)`, where `chi` receives
    /// `(deg b, deg a′)`.
    pub fn mul_twisted(
        &self,
        other: &Self,
        mul: impl Fn(&B, &B) -> LinComb<B, R>,
        chi: impl Fn(usize, usize) -> R,
    ) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let k = c.mul_ref(c2).mul_ref(&chi(b.degree(), a2.degree()));
                if k.is_zero() {
                    continue;
                }
                out.add_scaled(&Tensor2::outer(&mul(a, a2), &mul(b, b2)), &k);
            }
        }
        out
    }

    /// Componentwise product, the case `χ ≡ 1`.
    pub fn mul(&self, other: &Self, mul: impl Fn(&B, &B) -> LinComb<B, R>) -> Self {
        self.mul_twisted(other, mul, |_, _| R::one())
    }

    /// `⟨a⊗b, a′⊗b′⟩ = ⟨a,a′⟩⟨b,b′⟩` with self-dual bases.
    pub fn pair(&self, other: &Self) -> R {
        let mut s = R::zero();
        for (k, c) in &self.terms {
            if let Some(d) = other.terms.get(k) {
                s.add_assign_ref(&c.mul_ref(d));
            }
        }
        s
    }

    pub fn display(&self, basis: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            let (neg, prefix) = c.term_prefix();
            push_sign(&mut out, i == 0, neg);
            out.push_str(&format!(
                "{prefix}{} ⊗ {}",
                label_str(basis, a),
                label_str(basis, b)
            ));
        }
        out
    }

    /// JSON array of `{left, right, coeff}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((a, b), c)| {
                    json!({"left": a.to_string(), "right": b.to_string(), "coeff": c.to_string()})
                })
                .collect(),
        )
    }
}

impl<B: Label, R: Ring> fmt::Display for Tensor2<B, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("B"))
    }
}

/// The bicharacter `χ(b,a′) = q^{deg b · deg a′}`.
pub fn chi_q(deg_b: usize, deg_a: usize) -> QPoly {
    QPoly::q_pow(deg_b * deg_a)
}

/// Integer coefficients viewed in `ℤ[q]`.
pub fn to_qpoly<B: Label>(x: &LinComb<B, BigInt>) -> LinComb<B, QPoly> {
    x.map_coeffs(|c| QPoly::constant(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::maps::Endofunction;

    fn e(v: &[usize]) -> Endofunction {
        Endofunction::new(v.to_vec()).unwrap()
    }

    fn concat(a: &Endofunction, b: &Endofunction) -> LinComb<Endofunction> {
        use crate::combinat::maps::MapLabel;
        LinComb::basis(a.shifted_concat(b))
    }

    #[test]
    fn zero_is_neutral_and_cancellation_drops_terms() {
        let x: LinComb<Endofunction> = LinComb::basis(e(&[1]));
        assert_eq!(LinComb::zero().add(&x), x);
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.sub(&x).len(), 0);
        assert_eq!(LinComb::<Endofunction>::zero().display("M"), "0");
    }

    #[test]
    fn bilinearity_and_printing() {
        let two = LinComb::term(e(&[1]), BigInt::from(2));
        let three = LinComb::term(e(&[1]), BigInt::from(3));
        let p = two.mul_with(&three, concat);
        assert_eq!(p, LinComb::term(e(&[1, 2]), BigInt::from(6)));
        assert_eq!(p.display("S"), "6*S[12]");
        let mut y = LinComb::basis(e(&[2, 1]));
        y.add_term(Endofunction::empty(), BigInt::from(-2));
        assert_eq!(y.display("S"), "-2 + S[21]");
        assert_eq!(
            y.to_json().to_string(),
            r#"[{"coeff":"-2","label":""},{"coeff":"1","label":"21"}]"#
        );
    }

    #[test]
    fn pairing_of_dual_bases() {
        let m12: LinComb<Endofunction> = LinComb::basis(e(&[1, 2]));
        assert_eq!(m12.pair(&LinComb::basis(e(&[1, 2]))), BigInt::from(1));
        assert_eq!(m12.pair(&LinComb::basis(e(&[2, 1]))), BigInt::from(0));
    }

    #[test]
    fn twisted_product_of_simple_tensors() {
        let one = Endofunction::empty();
        let f1 = e(&[1]);
        let x: Tensor2<Endofunction, QPoly> = Tensor2::basis(f1.clone(), f1.clone());
        let y: Tensor2<Endofunction, QPoly> = Tensor2::basis(f1.clone(), one.clone());
        let mul = |a: &Endofunction, b: &Endofunction| {
            use crate::combinat::maps::MapLabel;
            LinComb::basis(a.shifted_concat(b))
        };
        let t = x.mul_twisted(&y, mul, chi_q);
        assert_eq!(t, Tensor2::term(e(&[1, 2]), f1.clone(), QPoly::q()));
        assert_eq!(t.display("F"), "q*F[12] ⊗ F[1]");
        let u = x.mul(&y, mul);
        assert_eq!(u, Tensor2::basis(e(&[1, 2]), f1));
    }
}
