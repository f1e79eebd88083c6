//! Parking functions inside `EQSym`: the subalgebra `CPQSym`, its quotient
//! `CCQSym` by non-nondecreasing labels, the subalgebra of sums over
//! labellings of an unlabelled parking graph, and rooted forests.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinat::enumerate;
use crate::combinat::maps::{components, Endofunction, ParkingFunction};
use crate::eqsym::{coproduct_m, coproduct_s, product_m, product_s, MBasis, SBasis};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linear::{Label, LinComb, Tensor2};

pub type CPQSym = MBasis<ParkingFunction>;
pub type CPQSymDual = SBasis<ParkingFunction>;

/// The canonical shape of a functional graph: components sorted, each
/// written `<t_1 ⋯ t_k>` with `t_i` the rooted tree hanging at the `i`-th
/// cycle point (trees in AHU form `( children )`), rotated to the
/// lexicographically least reading.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphShape {
    size: usize,
    cert: String,
}

impl GraphShape {
    pub fn empty() -> Self {
        GraphShape {
            size: 0,
            cert: String::new(),
        }
    }

    pub fn certificate(&self) -> &str {
        &self.cert
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The component certificates.
    pub fn components(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut depth = 0;
        let mut cur = String::new();
        for ch in self.cert.chars() {
            cur.push(ch);
            match ch {
                '<' => depth += 1,
                '>' => {
                    depth -= 1;
                    if depth == 0 {
                        out.push(std::mem::take(&mut cur));
                    }
                }
                _ => {}
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True when every cycle is a loop, i.e. the graph is a rooted forest.
    pub fn is_forest(&self) -> bool {
        self.components().iter().all(|c| {
            let inner = &c[1..c.len() - 1];
            tree_count(inner) == 1
        })
    }

    /// Disjoint union.
    pub fn union(&self, other: &GraphShape) -> GraphShape {
        let mut comps = self.components();
        comps.extend(other.components());
        comps.sort();
        GraphShape {
            size: self.size + other.size,
            cert: comps.concat(),
        }
    }

    /// A map having this shape, built directly from the certificate.
    pub fn representative(&self) -> Endofunction {
        let mut f: Vec<usize> = Vec::new();
        let bytes: Vec<char> = self.cert.chars().collect();
        let mut i = 0;
        // returns the node id of the tree root starting at bytes[i] == '('
        fn tree(bytes: &[char], i: &mut usize, f: &mut Vec<usize>) -> usize {
            debug_assert_eq!(bytes[*i], '(');
            *i += 1;
            f.push(0);
            let me = f.len();
            while bytes[*i] == '(' {
                let c = tree(bytes, i, f);
                f[c - 1] = me;
            }
            *i += 1;
            me
        }
        while i < bytes.len() {
            i += 1; // '<'
            let mut roots = Vec::new();
            while bytes[i] == '(' {
                roots.push(tree(&bytes, &mut i, &mut f));
            }
            i += 1; // '>'
            for k in 0..roots.len() {
                f[roots[k] - 1] = roots[(k + 1) % roots.len()];
            }
        }
        Endofunction::from_vec_unchecked(f)
    }
}

fn tree_count(s: &str) -> usize {
    let mut depth = 0;
    let mut count = 0;
    for ch in s.chars() {
        match ch {
            '(' => {
                if depth == 0 {
                    count += 1;
                }
                depth += 1;
            }
            ')' => depth -= 1,
            _ => {}
        }
    }
    count
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cert.is_empty() {
            f.write_str("∅")
        } else {
            f.write_str(&self.cert)
        }
    }
}

impl Label for GraphShape {
    fn degree(&self) -> usize {
        self.size
    }
}

impl FromStr for GraphShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(GraphShape::empty());
        }
        let ok_chars = s.chars().all(|c| "<>()".contains(c));
        let mut depth_angle = 0i32;
        let mut depth_paren = 0i32;
        let mut well_formed = ok_chars;
        let mut prev = ' ';
        for ch in s.chars() {
            match ch {
                '<' => {
                    well_formed &= depth_angle == 0 && depth_paren == 0;
                    depth_angle += 1;
                }
                '>' => {
                    well_formed &= depth_angle == 1 && depth_paren == 0 && prev == ')';
                    depth_angle -= 1;
                }
                '(' => {
                    well_formed &= depth_angle == 1;
                    depth_paren += 1;
                }
                ')' => {
                    depth_paren -= 1;
                    well_formed &= depth_paren >= 0;
                }
                _ => {}
            }
            prev = ch;
        }
        well_formed &= depth_angle == 0 && depth_paren == 0;
        if !well_formed {
            return Err(Error::Parse(format!("bad graph certificate `{s}`")));
        }
        let raw = GraphShape {
            size: s.matches('(').count(),
            cert: s.to_string(),
        };
        Ok(shape(raw.representative().as_slice()))
    }
}

/// AHU string of the tree hanging at `v`, ignoring the cycle points.
fn tree_string(v: usize, children: &[Vec<usize>], on_cycle: &[bool]) -> String {
    let mut parts: Vec<String> = children[v]
        .iter()
        .filter(|&&c| !on_cycle[c])
        .map(|&c| tree_string(c, children, on_cycle))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

/// Canonical shape of the functional graph of `f`.
pub fn shape(f: &[usize]) -> GraphShape {
    let n = f.len();
    let mut children = vec![Vec::new(); n + 1];
    for i in 1..=n {
        children[f[i - 1]].push(i);
    }
    let mut on_cycle = vec![false; n + 1];
    for comp in components(f) {
        // walk from any point until a repeat; that point is on the cycle
        let mut x = comp[0];
        for _ in 0..comp.len() {
            x = f[x - 1];
        }
        let start = x;
        loop {
            on_cycle[x] = true;
            x = f[x - 1];
            if x == start {
                break;
            }
        }
    }
    let mut comps = Vec::new();
    for comp in components(f) {
        let start = *comp.iter().find(|&&v| on_cycle[v]).expect("every component has a cycle");
        let mut cyc = vec![start];
        let mut x = f[start - 1];
        while x != start {
            cyc.push(x);
            x = f[x - 1];
        }
        let trees: Vec<String> = cyc.iter().map(|&v| tree_string(v, &children, &on_cycle)).collect();
        let best = (0..trees.len())
            .map(|k| {
                let mut r = trees.clone();
                r.rotate_left(k);
                r.concat()
            })
            .min()
            .expect("nonempty cycle");
        comps.push(format!("<{best}>"));
    }
    comps.sort();
    GraphShape {
        size: n,
        cert: comps.concat(),
    }
}

/// Number of unlabelled parking graphs of size `n`, i.e. of shapes of
/// parking functions.
pub fn unlabelled_count(n: usize) -> usize {
    shapes_of_parking(n).len()
}

/// Parking functions of size `n` grouped by shape.
pub fn shapes_of_parking(n: usize) -> BTreeMap<GraphShape, Vec<ParkingFunction>> {
    let mut out: BTreeMap<GraphShape, Vec<ParkingFunction>> = BTreeMap::new();
    for p in enumerate::parking_functions(n) {
        out.entry(shape(p.as_slice())).or_default().push(p);
    }
    out
}

/// Number of distinct shapes among all endofunctions of size `n`.
pub fn endofunction_shape_count(n: usize) -> usize {
    let mut seen = std::collections::BTreeSet::new();
    for f in enumerate::endofunctions(n) {
        seen.insert(shape(f.as_slice()));
    }
    seen.len()
}

/// `Σ_{shape(p) = G} Mpa_p` over parking labellings only. These sums are
/// not closed under products: see [`parking_sums_counterexample`].
pub fn parking_labelling_sum(g: &GraphShape) -> LinComb<ParkingFunction> {
    LinComb::from_labels(
        enumerate::parking_functions(g.size()).filter(|p| &shape(p.as_slice()) == g),
    )
}

/// `U_G = Σ_{shape(f) = G} M_f` over all labellings by endofunctions.
pub fn unlabelled_sum(g: &GraphShape) -> LinComb<Endofunction> {
    LinComb::from_labels(enumerate::endofunctions(g.size()).filter(|f| &shape(f.as_slice()) == g))
}

/// Rewrites `x` as a combination of class sums, where the classes are the
/// fibers of `key` and `sizes` gives their cardinalities. Fails if `x` is
/// not such a combination.
pub fn regroup<T: Label, L: Label>(x: &LinComb<T>, key: impl Fn(&T) -> L, sizes: impl Fn(&L) -> usize) -> Result<LinComb<L>> {
    let mut by: BTreeMap<L, (BigInt, usize)> = BTreeMap::new();
    for (p, c) in x.iter() {
        let k = key(p);
        let e = by.entry(k.clone()).or_insert((c.clone(), 0));
        if &e.0 != c {
            return Err(Error::invalid("regrouping", format!("coefficients differ inside {k}")));
        }
        e.1 += 1;
    }
    let mut out = LinComb::zero();
    for (k, (c, seen)) in by {
        if seen != sizes(&k) {
            return Err(Error::invalid("regrouping", format!("incomplete class {k}")));
        }
        out.add_term(k, c);
    }
    Ok(out)
}

fn shape_class_size(g: &GraphShape) -> usize {
    unlabelled_sum(g).len()
}

/// Product of two unlabelled sums, regrouped.
pub fn unlabelled_product(a: &GraphShape, b: &GraphShape) -> Result<LinComb<GraphShape>> {
    let x = unlabelled_sum(a).mul_with(&unlabelled_sum(b), product_m);
    regroup(&x, |f| shape(f.as_slice()), shape_class_size)
}

/// Coproduct of an unlabelled sum, regrouped on both sides.
pub fn unlabelled_coproduct(a: &GraphShape) -> Result<Tensor2<GraphShape>> {
    let d = unlabelled_sum(a).apply_tensor(coproduct_m);
    regroup_tensor(&d, |f| shape(f.as_slice()), shape_class_size)
}

/// A pair of shapes whose parking-labelling sums multiply to something
/// that is not a combination of parking-labelling sums, up to total size
/// `max_size`.
pub fn parking_sums_counterexample(max_size: usize) -> Option<(GraphShape, GraphShape)> {
    let size = |g: &GraphShape| parking_labelling_sum(g).len();
    for n in 1..max_size {
        for m in 1..=max_size - n {
            for a in shapes_of_parking(n).into_keys() {
                for b in shapes_of_parking(m).into_keys() {
                    let x = parking_labelling_sum(&a).mul_with(&parking_labelling_sum(&b), product_m);
                    if regroup(&x, |p| shape(p.as_slice()), size).is_err() {
                        return Some((a, b));
                    }
                }
            }
        }
    }
    None
}

fn regroup_tensor<T: Label, L: Label>(
    d: &Tensor2<T>,
    key: impl Fn(&T) -> L + Copy,
    sizes: impl Fn(&L) -> usize + Copy,
) -> Result<Tensor2<L>> {
    let mut by_right: BTreeMap<T, LinComb<T>> = BTreeMap::new();
    for ((l, r), c) in d.iter() {
        by_right.entry(r.clone()).or_default().add_term(l.clone(), c.clone());
    }
    let mut half: BTreeMap<L, LinComb<T>> = BTreeMap::new();
    for (r, left) in by_right {
        for (kl, c) in regroup(&left, key, sizes)?.iter() {
            half.entry(kl.clone()).or_default().add_term(r.clone(), c.clone());
        }
    }
    let mut out = Tensor2::zero();
    for (kl, right) in half {
        for (kr, c) in regroup(&right, key, sizes)?.iter() {
            out.add_term(kl.clone(), kr.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Sums over labellings of unlabelled parking graphs, inside `EQSym`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Unlabelled;

impl HopfAlgebra for Unlabelled {
    type L = GraphShape;
    type R = BigInt;
    fn id(&self) -> &'static str {
        "unlabelled"
    }
    fn basis_name(&self) -> &'static str {
        "U"
    }
    fn basis(&self, n: usize) -> Vec<GraphShape> {
        shapes_of_parking(n).into_keys().collect()
    }
    fn unit(&self) -> GraphShape {
        GraphShape::empty()
    }
    fn product(&self, a: &GraphShape, b: &GraphShape) -> LinComb<GraphShape> {
        unlabelled_product(a, b).expect("closed under products")
    }
    fn coproduct(&self, a: &GraphShape) -> Tensor2<GraphShape> {
        unlabelled_coproduct(a).expect("closed under coproducts")
    }
}

/// Euler transform of the connected counts: the dimensions of a
/// polynomial algebra with `c_k` generators in degree `k`.
pub fn polynomial_dimensions(connected: &[usize], max: usize) -> Vec<BigInt> {
    let mut dims = vec![BigInt::zero(); max + 1];
    dims[0] = BigInt::from(1);
    for k in 1..=max {
        let c = connected.get(k).copied().unwrap_or(0);
        for _ in 0..c {
            // multiply by 1/(1 - t^k)
            for d in k..=max {
                let prev = dims[d - k].clone();
                dims[d] += prev;
            }
        }
    }
    dims
}

pub fn is_nondecreasing(p: &ParkingFunction) -> bool {
    p.as_slice().windows(2).all(|w| w[0] <= w[1])
}

/// Product in `CCQSym`: the `CPQSym` product with labels that are not
/// nondecreasing sent to zero.
pub fn ccqsym_product(a: &ParkingFunction, b: &ParkingFunction) -> LinComb<ParkingFunction> {
    product_m(a, b).filter(is_nondecreasing)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CCQSym;

/// The dual of `CCQSym`: the `S^π̃` with `π̃` nondecreasing, which span the
/// annihilator of the ideal.
#[derive(Clone, Copy, Debug, Default)]
pub struct CCQSymDual;

impl HopfAlgebra for CCQSym {
    type L = ParkingFunction;
    type R = BigInt;
    fn id(&self) -> &'static str {
        "ccqsym"
    }
    fn basis_name(&self) -> &'static str {
        "M"
    }
    fn basis(&self, n: usize) -> Vec<ParkingFunction> {
        enumerate::nondecreasing_parking(n)
    }
    fn unit(&self) -> ParkingFunction {
        ParkingFunction::empty()
    }
    fn product(&self, a: &ParkingFunction, b: &ParkingFunction) -> LinComb<ParkingFunction> {
        ccqsym_product(a, b)
    }
    fn coproduct(&self, a: &ParkingFunction) -> Tensor2<ParkingFunction> {
        coproduct_m(a)
    }
}

impl HopfAlgebra for CCQSymDual {
    type L = ParkingFunction;
    type R = BigInt;
    fn id(&self) -> &'static str {
        "ccqsym-dual"
    }
    fn basis_name(&self) -> &'static str {
        "S"
    }
    fn basis(&self, n: usize) -> Vec<ParkingFunction> {
        enumerate::nondecreasing_parking(n)
    }
    fn unit(&self) -> ParkingFunction {
        ParkingFunction::empty()
    }
    fn product(&self, a: &ParkingFunction, b: &ParkingFunction) -> LinComb<ParkingFunction> {
        product_s(a, b)
    }
    fn coproduct(&self, a: &ParkingFunction) -> Tensor2<ParkingFunction> {
        coproduct_s(a)
    }
}

/// The paper's candidate dual element `Σ S^p` over rearrangements `p` of
/// a nondecreasing `π̃`.
pub fn rearrangement_sum(p: &ParkingFunction) -> LinComb<ParkingFunction> {
    let mut sorted = p.as_slice().to_vec();
    sorted.sort_unstable();
    LinComb::from_labels(enumerate::parking_functions(p.len()).filter(|q| {
        let mut s = q.as_slice().to_vec();
        s.sort_unstable();
        s == sorted
    }))
}

/// Looks for products `M_[p] M_[q]` of rearrangement sums in `CPQSym`
/// that are not combinations of rearrangement sums, up to total degree
/// `max_degree`. Returns the first such pair.
pub fn rearrangement_sums_counterexample(max_degree: usize) -> Option<(ParkingFunction, ParkingFunction)> {
    let key = |p: &ParkingFunction| {
        let mut s = p.as_slice().to_vec();
        s.sort_unstable();
        ParkingFunction::from_vec_unchecked(s)
    };
    for n in 1..max_degree {
        for m in 1..=max_degree - n {
            for a in enumerate::nondecreasing_parking(n) {
                for b in enumerate::nondecreasing_parking(m) {
                    let x = rearrangement_sum(&a).mul_with(&rearrangement_sum(&b), product_m);
                    if regroup(&x, key, |k| rearrangement_sum(k).len()).is_err() {
                        return Some((a, b));
                    }
                }
            }
        }
    }
    None
}

/// Support forest of a nondecreasing parking function: edges `i → p(i)`,
/// roots at the loops.
pub fn support_forest(p: &ParkingFunction) -> GraphShape {
    shape(p.as_slice())
}

/// `M_F = Σ_{supp(π̃) = F} M_π̃` in `CCQSym`.
pub fn forest_sum(f: &GraphShape) -> LinComb<ParkingFunction> {
    LinComb::from_labels(
        enumerate::nondecreasing_parking(f.size())
            .into_iter()
            .filter(|p| &support_forest(p) == f),
    )
}

fn forest_class_size(f: &GraphShape) -> usize {
    forest_sum(f).len()
}

pub fn forest_basis(n: usize) -> Vec<GraphShape> {
    let mut v: Vec<GraphShape> = enumerate::nondecreasing_parking(n).iter().map(support_forest).collect();
    v.sort();
    v.dedup();
    v
}

pub fn forest_product(a: &GraphShape, b: &GraphShape) -> Result<LinComb<GraphShape>> {
    let x = forest_sum(a).mul_with(&forest_sum(b), ccqsym_product);
    regroup(&x, support_forest, forest_class_size)
}

pub fn forest_coproduct(a: &GraphShape) -> Result<Tensor2<GraphShape>> {
    let d = forest_sum(a).apply_tensor(coproduct_m);
    regroup_tensor(&d, support_forest, forest_class_size)
}

/// The Hopf algebra of rooted forests `M_F`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Forests;

impl HopfAlgebra for Forests {
    type L = GraphShape;
    type R = BigInt;
    fn id(&self) -> &'static str {
        "forest"
    }
    fn basis_name(&self) -> &'static str {
        "MF"
    }
    fn basis(&self, n: usize) -> Vec<GraphShape> {
        forest_basis(n)
    }
    fn unit(&self) -> GraphShape {
        GraphShape::empty()
    }
    fn product(&self, a: &GraphShape, b: &GraphShape) -> LinComb<GraphShape> {
        forest_product(a, b).expect("closed under products")
    }
    fn coproduct(&self, a: &GraphShape) -> Tensor2<GraphShape> {
        forest_coproduct(a).expect("closed under coproducts")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::notation::parse_parking;

    fn p(s: &str) -> ParkingFunction {
        parse_parking(s).unwrap()
    }

    fn lc(s: &[&str]) -> LinComb<ParkingFunction> {
        LinComb::from_labels(s.iter().map(|x| p(x)))
    }

    #[test]
    fn worked_products() {
        assert_eq!(product_m(&p("1"), &p("11")), lc(&["122", "121", "113"]));
        assert_eq!(product_m(&p("1"), &p("221")), lc(&["1332", "3231", "2231", "2214"]));
        assert_eq!(product_m(&p("12"), &p("21")), lc(&["1243", "1432", "4231", "1324", "3214", "2134"]));
    }

    #[test]
    fn worked_coproducts() {
        let e = ParkingFunction::empty();
        let d = coproduct_m(&p("525124"));
        assert_eq!(d, Tensor2::from_terms([((p("525124"), e.clone()), BigInt::from(1)), ((e.clone(), p("525124")), BigInt::from(1))]));
        let d = coproduct_m(&p("4131166"));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&p("41311"), &p("11")), BigInt::from(1));
    }

    #[test]
    fn shapes() {
        let counts: Vec<usize> = (0..=5).map(unlabelled_count).collect();
        assert_eq!(counts, vec![1, 1, 3, 7, 19, 47]);
        assert_eq!(shapes_of_parking(3).values().map(|v| v.len()).sum::<usize>(), 16);
        let g = shape(&[2, 1, 1]);
        assert_eq!(g.certificate(), "<(())()>");
        assert_eq!(g.to_string().parse::<GraphShape>().unwrap(), g);
        assert_eq!(shape(g.representative().as_slice()), g);
    }

    #[test]
    fn ccqsym_projection() {
        assert_eq!(ccqsym_product(&p("1"), &p("11")), lc(&["122", "113"]));
        let dims: Vec<usize> = (1..=4).map(|n| CCQSym.basis(n).len()).collect();
        assert_eq!(dims, vec![1, 2, 5, 14]);
    }

    #[test]
    fn forest_square() {
        let single = support_forest(&p("1"));
        let x = forest_product(&single, &single).unwrap();
        assert_eq!(x.coeff(&single.union(&single)), BigInt::from(2));
        assert_eq!(x.len(), 1);
        assert!(x.labels().all(|f| f.is_forest()));
    }
}
