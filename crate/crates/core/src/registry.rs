//! String-level access to every algebra, shared by the command line and the
//! browser demo.
//!
//! An element is a sum of terms `coef*label` or `coefB[label]`, where `B` is
//! the basis name, so printed output can be pasted back in. Terms are split
//! on `+` and `-` outside brackets; `q`-polynomial coefficients go in
//! parentheses, e.g. `(q+1)*F[21]`. The unit is written `1` only inside the
//! bracket form `B[]` or as `∅`.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::combinat::cycles::CycleSet;
use crate::combinat::enumerate::{self, Kind, Limits};
use crate::combinat::maps::{cut_points, shifted_concat_maps, Endofunction, ParkingFunction, Permutation};
use crate::combinat::notation::{
    letters_to_alpha, parse_composition, parse_cycles, parse_endofunction, parse_parking, parse_partition,
    parse_permutation, parse_set_partition, parse_word,
};
use crate::combinat::partitions::{IntegerPartition, SetPartition};
use crate::combinat::word::{fmt_letters, shifted_shuffle, standardize};
use crate::eqsym::oracle::product_check;
use crate::eqsym::{self, series, MBasis, SBasis};
use crate::error::{Error, Result};
use crate::hopf::{duality_check, hopf_check, Check, HopfAlgebra, HopfReport};
use crate::linear::{Label, LinComb, Tensor2};
use crate::parkfunc::{self, GraphShape};
use crate::phisym::{self, PhiBasis, PhiSym, YQuotient};
use crate::qdeform::{self, rewrite, FQSymQ, FQSymRestricted, QSymQ, NCSFQ};
use crate::ring::{QPoly, Ring};
use crate::sgqsym::{self, qsym, wsym};
use crate::stalactic;
use crate::symfunc::{self, SymFunc};

/// A result in both output formats.
#[derive(Clone, Debug, PartialEq)]
pub struct Rendered {
    pub text: String,
    pub json: Value,
}

impl Rendered {
    fn scalar(v: impl ToString) -> Self {
        let s = v.to_string();
        Rendered {
            json: Value::String(s.clone()),
            text: s,
        }
    }
}

/// Per-call settings: `q` specialization and the resource guard.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub q: Option<i64>,
    pub limits: Limits,
}

impl Options {
    fn guard(&self, what: &str, n: usize) -> Result<()> {
        if n > self.limits.max_degree {
            return Err(Error::LimitExceeded {
                what: what.to_string(),
                requested: n,
                limit: self.limits.max_degree,
            });
        }
        Ok(())
    }
}

/// Coefficient rings that can be read from text.
pub trait Coefficient: Ring {
    fn parse_coeff(s: &str) -> Result<Self>;
    /// Evaluates `q` when one is given; integers are unchanged.
    fn at(&self, _q: Option<i64>) -> Self {
        self.clone()
    }
}

impl Coefficient for BigInt {
    fn parse_coeff(s: &str) -> Result<Self> {
        BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad integer coefficient `{s}`")))
    }
}

impl Coefficient for QPoly {
    fn parse_coeff(s: &str) -> Result<Self> {
        QPoly::from_str(s.trim())
    }
    fn at(&self, q: Option<i64>) -> Self {
        match q {
            Some(v) => self.specialize(v),
            None => self.clone(),
        }
    }
}

/// Type-erased view of a [`HopfAlgebra`] with a label parser.
pub trait DynAlgebra {
    fn id(&self) -> &'static str;
    fn basis_name(&self) -> &'static str;
    /// Product of one or more elements, left to right.
    fn product(&self, args: &[&str], opts: &Options) -> Result<Rendered>;
    /// `Δ(x_1)·Δ(x_2)⋯` in the (twisted) tensor square; one argument gives
    /// the plain coproduct.
    fn coproduct(&self, args: &[&str], opts: &Options) -> Result<Rendered>;
    /// `⟨x, y⟩` with the basis dual to itself.
    fn pair(&self, x: &str, y: &str, opts: &Options) -> Result<Rendered>;
    /// Labels of degree `n`, as printed.
    fn basis(&self, n: usize, opts: &Options) -> Result<Vec<String>>;
    fn verify(&self, max_degree: usize) -> HopfReport;
}

struct Entry<H: HopfAlgebra> {
    alg: H,
    parse: fn(&str) -> Result<H::L>,
}

fn degree_of<L: Label, R: Ring>(x: &LinComb<L, R>) -> usize {
    x.labels().map(Label::degree).max().unwrap_or(0)
}

impl<H: HopfAlgebra> Entry<H>
where
    H::R: Coefficient,
{
    fn element(&self, s: &str) -> Result<LinComb<H::L, H::R>> {
        parse_element(s, self.alg.basis_name(), self.alg.unit(), self.parse)
    }
}

impl<H: HopfAlgebra> DynAlgebra for Entry<H>
where
    H::R: Coefficient,
{
    fn id(&self) -> &'static str {
        self.alg.id()
    }

    fn basis_name(&self) -> &'static str {
        self.alg.basis_name()
    }

    fn product(&self, args: &[&str], opts: &Options) -> Result<Rendered> {
        let xs: Vec<_> = args.iter().map(|a| self.element(a)).collect::<Result<_>>()?;
        opts.guard("product degree", xs.iter().map(degree_of).sum())?;
        let mut acc = LinComb::basis(self.alg.unit());
        for x in &xs {
            acc = self.alg.mul(&acc, x);
        }
        let acc = acc.map_coeffs(|c| c.at(opts.q));
        Ok(Rendered {
            text: self.alg.show(&acc),
            json: acc.to_json(),
        })
    }

    fn coproduct(&self, args: &[&str], opts: &Options) -> Result<Rendered> {
        let xs: Vec<_> = args.iter().map(|a| self.element(a)).collect::<Result<_>>()?;
        opts.guard("coproduct degree", xs.iter().map(degree_of).sum())?;
        let unit = self.alg.unit();
        let mut d = Tensor2::basis(unit.clone(), unit);
        for x in &xs {
            d = self.alg.tensor_mul(&d, &self.alg.comul(x));
        }
        let d = d.map_coeffs(|c| c.at(opts.q));
        Ok(Rendered {
            text: self.alg.show_tensor(&d),
            json: d.to_json(),
        })
    }

    fn pair(&self, x: &str, y: &str, opts: &Options) -> Result<Rendered> {
        let v = self.element(x)?.pair(&self.element(y)?).at(opts.q);
        Ok(Rendered::scalar(v))
    }

    fn basis(&self, n: usize, opts: &Options) -> Result<Vec<String>> {
        opts.guard("basis degree", n)?;
        Ok(self.alg.basis(n).iter().map(ToString::to_string).collect())
    }

    fn verify(&self, max_degree: usize) -> HopfReport {
        hopf_check(&self.alg, max_degree)
    }
}

/// Splits at top-level `sep` characters, keeping each separator with the
/// piece that follows it.
fn split_top(s: &str, is_sep: impl Fn(char) -> bool) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
        }
        if depth == 0 && is_sep(ch) && !cur.trim().is_empty() {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    Ok(out)
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') && split_top(t, |c| c == '(').map(|v| v.len()) == Ok(1) {
        &t[1..t.len() - 1]
    } else {
        t
    }
}

/// Reads a linear combination; see the module documentation for syntax.
pub fn parse_element<L: Label, R: Coefficient>(
    s: &str,
    basis: &str,
    unit: L,
    parse: fn(&str) -> Result<L>,
) -> Result<LinComb<L, R>> {
    let mut out = LinComb::zero();
    let terms = split_top(s, |c| c == '+' || c == '-')?;
    if terms.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    for raw in terms {
        let mut t = raw.trim();
        let neg = t.starts_with('-');
        t = t.trim_start_matches(['+', '-']).trim();
        let (mut coef, mut label) = match t.rfind('*') {
            Some(i) if split_top(t, |c| c == '*')?.len() > 1 => (Some(&t[..i]), t[i + 1..].trim()),
            _ => (None, t),
        };
        let mut bracketed = false;
        if label.ends_with(']') && !label.starts_with('[') {
            if let Some(i) = label.find('[') {
                let prefix = &label[..i];
                let head = prefix
                    .strip_suffix(basis)
                    .ok_or_else(|| Error::Parse(format!("term `{label}` is not in basis {basis}")))?;
                if !head.trim().is_empty() {
                    if coef.is_some() {
                        return Err(Error::Parse(format!("two coefficients in `{t}`")));
                    }
                    coef = Some(head);
                }
                label = &label[i + 1..label.len() - 1];
                bracketed = true;
            }
        }
        let c = match coef {
            Some(c) => R::parse_coeff(strip_parens(c))?,
            None => R::one(),
        };
        let c = if neg { c.neg_ref() } else { c };
        let l = if label == "∅" || (bracketed && label.is_empty()) {
            unit.clone()
        } else {
            parse(label)?
        };
        out.add_term(l, c);
    }
    Ok(out)
}

fn parse_shape(s: &str) -> Result<GraphShape> {
    if s.starts_with('<') {
        s.parse()
    } else {
        Ok(parkfunc::shape(parse_endofunction(s)?.as_slice()))
    }
}

fn parse_forest(s: &str) -> Result<GraphShape> {
    let g = if s.starts_with('<') {
        s.parse()?
    } else {
        parkfunc::support_forest(&parse_parking(s)?)
    };
    if !g.is_forest() {
        return Err(Error::invalid("forest", s));
    }
    Ok(g)
}

fn boxed<H>(alg: H, parse: fn(&str) -> Result<H::L>) -> Box<dyn DynAlgebra>
where
    H: HopfAlgebra + 'static,
    H::R: Coefficient,
{
    Box::new(Entry { alg, parse })
}

type Maker = fn(Option<i64>) -> Box<dyn DynAlgebra>;

/// `(algebra id, basis name, constructor)`; the first row of an algebra is
/// its default basis.
const TABLE: &[(&str, &str, Maker)] = &[
    ("eqsym", "M", |_| boxed(eqsym::EQSym::new(), parse_endofunction)),
    ("eqsym", "S", |_| boxed(eqsym::ESym::new(), parse_endofunction)),
    ("esym", "S", |_| boxed(eqsym::ESym::new(), parse_endofunction)),
    ("sgqsym", "M", |_| boxed(sgqsym::SGQSym::new(), parse_permutation)),
    ("sgqsym", "S", |_| boxed(sgqsym::SGSym::new(), parse_permutation)),
    ("sgqsym", "upi", |_| boxed(wsym::PiQSym, parse_set_partition)),
    ("sgqsym", "Mw", |_| boxed(wsym::WSymMw, parse_set_partition)),
    ("sgqsym", "Pw", |_| boxed(wsym::WSymPw, parse_set_partition)),
    ("sgqsym", "V", |_| boxed(wsym::VQuotient, parse_composition)),
    ("sgqsym", "uq", |_| boxed(qsym::QSymEmbed, parse_composition)),
    ("sgqsym", "ul", |_| boxed(qsym::SymEmbed, parse_partition)),
    ("sgsym", "S", |_| boxed(sgqsym::SGSym::new(), parse_permutation)),
    ("piqsym", "upi", |_| boxed(wsym::PiQSym, parse_set_partition)),
    ("wsym", "Mw", |_| boxed(wsym::WSymMw, parse_set_partition)),
    ("wsym", "Pw", |_| boxed(wsym::WSymPw, parse_set_partition)),
    ("wsym-p", "Pw", |_| boxed(wsym::WSymPw, parse_set_partition)),
    ("ncsf-v", "V", |_| boxed(wsym::VQuotient, parse_composition)),
    ("qsym-embed", "uq", |_| boxed(qsym::QSymEmbed, parse_composition)),
    ("sym-embed", "ul", |_| boxed(qsym::SymEmbed, parse_partition)),
    ("phisym", "phi", |_| boxed(PhiSym::new(PhiBasis::Phi), parse_permutation)),
    ("phisym", "Sp", |_| boxed(PhiSym::new(PhiBasis::SPrime), parse_permutation)),
    ("phisym", "Ss", |_| boxed(PhiSym::new(PhiBasis::SSecond), parse_permutation)),
    ("phisym", "Y", |_| boxed(YQuotient, parse_partition)),
    ("phisym-y", "Y", |_| boxed(YQuotient, parse_partition)),
    ("cpqsym", "M", |_| boxed(parkfunc::CPQSym::new(), parse_parking)),
    ("cpqsym", "Mpa", |_| boxed(parkfunc::CPQSym::new(), parse_parking)),
    ("cpqsym", "S", |_| boxed(parkfunc::CPQSymDual::new(), parse_parking)),
    ("cpqsym", "U", |_| boxed(parkfunc::Unlabelled, parse_shape)),
    ("cpqsym-dual", "S", |_| boxed(parkfunc::CPQSymDual::new(), parse_parking)),
    ("unlabelled", "U", |_| boxed(parkfunc::Unlabelled, parse_shape)),
    ("ccqsym", "M", |_| boxed(parkfunc::CCQSym, parse_parking)),
    ("ccqsym", "S", |_| boxed(parkfunc::CCQSymDual, parse_parking)),
    ("ccqsym", "MF", |_| boxed(parkfunc::Forests, parse_forest)),
    ("ccqsym-dual", "S", |_| boxed(parkfunc::CCQSymDual, parse_parking)),
    ("forest", "MF", |_| boxed(parkfunc::Forests, parse_forest)),
    ("fqsym-q", "F", |_| boxed(FQSymQ, parse_permutation)),
    ("fqsym-restricted", "F", |q| boxed(FQSymRestricted { q }, parse_permutation)),
    ("qsym-q", "M", |_| boxed(QSymQ, parse_composition)),
    ("ncsf-q", "S", |_| boxed(NCSFQ, parse_composition)),
];

/// Every registered `(algebra, basis)` pair, default basis first.
pub fn algebras() -> Vec<(&'static str, &'static str)> {
    TABLE.iter().map(|&(a, b, _)| (a, b)).collect()
}

/// Finds an algebra by id and optional basis name.
pub fn lookup(algebra: &str, basis: Option<&str>, q: Option<i64>) -> Result<Box<dyn DynAlgebra>> {
    let mut rows = TABLE.iter().filter(|r| r.0 == algebra).peekable();
    if rows.peek().is_none() {
        return Err(Error::Unknown {
            kind: "algebra",
            name: algebra.into(),
        });
    }
    let row = match basis {
        None => rows.next(),
        Some(b) => rows.find(|r| r.1 == b),
    };
    row.map(|r| (r.2)(q)).ok_or_else(|| Error::Unknown {
        kind: "basis",
        name: format!("{} of {algebra}", basis.unwrap_or_default()),
    })
}

fn render<L: Label, R: Ring>(x: &LinComb<L, R>, basis: &str) -> Rendered {
    Rendered {
        text: x.display(basis),
        json: x.to_json(),
    }
}

fn elem<L: Label>(s: &str, basis: &str, unit: L, parse: fn(&str) -> Result<L>) -> Result<LinComb<L>> {
    parse_element(s, basis, unit, parse)
}

/// Parses sums of products of classical symmetric functions such as
/// `e(2)h(2) - 2*s(3,1)`.
pub fn parse_sym(s: &str) -> Result<SymFunc> {
    let mut total: Option<SymFunc> = None;
    for raw in split_top(s, |c| c == '+' || c == '-')? {
        let mut t = raw.trim();
        let neg = t.starts_with('-');
        t = t.trim_start_matches(['+', '-']).trim();
        let digits = t.find(|c: char| !c.is_ascii_digit()).unwrap_or(t.len());
        let k: i64 = if digits == 0 {
            1
        } else {
            t[..digits].parse().map_err(|_| Error::Parse(format!("bad coefficient in `{t}`")))?
        };
        t = t[digits..].trim_start_matches('*').trim();
        let mut term: Option<SymFunc> = None;
        for factor in split_top(t, |c| c.is_ascii_alphabetic())? {
            let factor = factor.trim().trim_end_matches(['*', '·']).trim();
            let (b, parts) = factor.split_at(1);
            let basis = symfunc::Basis::from_str(b)?;
            let l = if parts.is_empty() {
                IntegerPartition::empty()
            } else {
                parse_partition(parts)?
            };
            let f = SymFunc::elem(basis, l.parts());
            term = Some(match term {
                None => f,
                Some(acc) => acc.mul(&f)?,
            });
        }
        let term = term.ok_or_else(|| Error::Parse(format!("empty term in `{s}`")))?;
        let k = num_rational::BigRational::from_integer(BigInt::from(if neg { -k } else { k }));
        let term = term.scale(&k);
        total = Some(match total {
            None => term,
            Some(acc) => acc.add(&term)?,
        });
    }
    total.ok_or_else(|| Error::Parse("empty symmetric function".into()))
}

fn sym_out(f: &SymFunc, to: &str, opts: &Options) -> Result<Rendered> {
    let target = symfunc::Basis::from_str(to)?;
    opts.guard("symmetric function degree", f.max_degree())?;
    let g = f.convert_bounded(target, opts.limits.max_degree)?;
    let json = Value::Array(
        g.coeffs
            .iter()
            .map(|(l, c)| json!({"label": l.to_string(), "coeff": c.to_string()}))
            .collect(),
    );
    Ok(Rendered {
        text: g.to_string(),
        json,
    })
}

fn phi_basis(name: &str) -> Option<PhiBasis> {
    [PhiBasis::Phi, PhiBasis::SPrime, PhiBasis::SSecond]
        .into_iter()
        .find(|b| b.name() == name)
}

fn unsupported(algebra: &str, from: &str, to: &str) -> Error {
    Error::Unknown {
        kind: "conversion",
        name: format!("{algebra}: {from} -> {to}"),
    }
}

/// Change of basis, embedding or quotient map.
pub fn convert(algebra: &str, from: &str, to: &str, input: &str, opts: &Options) -> Result<Rendered> {
    let unsupported = || unsupported(algebra, from, to);
    match algebra {
        "sym" => sym_out(&parse_sym(input)?, to, opts),
        "phisym" => {
            if from == "Y" {
                let x = elem(input, "Y", IntegerPartition::empty(), parse_partition)?;
                return sym_out(&phisym::y_lincomb_to_sym(&x), to, opts);
            }
            let (f, t) = phi_basis(from).zip(phi_basis(to)).ok_or_else(unsupported)?;
            let x = elem(input, from, Permutation::empty(), parse_permutation)?;
            opts.guard("degree", degree_of(&x))?;
            Ok(render(&phisym::convert(f, t, &x), to))
        }
        "sgqsym" | "qsym-embed" | "sym-embed" | "piqsym" | "wsym" | "wsym-p" => match (from, to) {
            ("uq", "M") => {
                let x = elem(input, "uq", Default::default(), parse_composition)?;
                opts.guard("degree", degree_of(&x))?;
                Ok(render(&qsym::embed_uq(&x), "M"))
            }
            ("ul", "M") => {
                let x = elem(input, "ul", IntegerPartition::empty(), parse_partition)?;
                opts.guard("degree", degree_of(&x))?;
                Ok(render(&qsym::embed_ul(&x), "M"))
            }
            ("upi", "M") => {
                let x = elem(input, "upi", SetPartition::empty(), parse_set_partition)?;
                opts.guard("degree", degree_of(&x))?;
                Ok(render(&x.apply(wsym::upi_to_m), "M"))
            }
            ("Pw", "Mw") => {
                let x = elem(input, "Pw", SetPartition::empty(), parse_set_partition)?;
                Ok(render(&x.apply(wsym::pw_to_mw), "Mw"))
            }
            ("Mw", "V") => {
                let x = elem(input, "Mw", SetPartition::empty(), parse_set_partition)?;
                Ok(render(&x.map_labels(wsym::quotient_class), "V"))
            }
            _ => Err(unsupported()),
        },
        "qsym-q" | "fqsym-q" => {
            let out = match (from, to) {
                ("F", "M") if algebra == "qsym-q" => {
                    let x: LinComb<_, QPoly> = parse_element(input, "F", Default::default(), parse_composition)?;
                    x.apply(qdeform::fundamental_to_m)
                }
                ("F", "QM") | ("F", "QF") if algebra == "fqsym-q" => {
                    let x: LinComb<_, QPoly> = parse_element(input, "F", Permutation::empty(), parse_permutation)?;
                    opts.guard("degree", degree_of(&x))?;
                    if to == "QM" {
                        x.apply(qdeform::phi_map_m)
                    } else {
                        x.apply(qdeform::phi_map)
                    }
                }
                _ => return Err(unsupported()),
            };
            let name = to.trim_start_matches('Q');
            Ok(render(&out.map_coeffs(|c| c.at(opts.q)), name))
        }
        "eqsym" | "cpqsym" | "unlabelled" => match (from, to) {
            ("M", "U") => {
                let x = elem(input, "M", Endofunction::empty(), parse_endofunction)?;
                opts.guard("degree", degree_of(&x))?;
                let sizes = |g: &GraphShape| parkfunc::unlabelled_sum(g).len();
                let y = parkfunc::regroup(&x, |f: &Endofunction| parkfunc::shape(f.as_slice()), sizes)?;
                Ok(render(&y, "U"))
            }
            ("U", "M") => {
                let x = elem(input, "U", GraphShape::empty(), parse_shape)?;
                opts.guard("degree", degree_of(&x))?;
                Ok(render(&x.apply(parkfunc::unlabelled_sum), "M"))
            }
            _ => Err(unsupported()),
        },
        "ccqsym" | "forest" => match (from, to) {
            ("M", "MF") => {
                let x = elem(input, "M", ParkingFunction::empty(), parse_parking)?;
                let sizes = |g: &GraphShape| parkfunc::forest_sum(g).len();
                let y = parkfunc::regroup(&x, parkfunc::support_forest, sizes)?;
                Ok(render(&y, "MF"))
            }
            ("MF", "M") => {
                let x = elem(input, "MF", GraphShape::empty(), parse_forest)?;
                Ok(render(&x.apply(parkfunc::forest_sum), "M"))
            }
            _ => Err(unsupported()),
        },
        _ => Err(Error::Unknown {
            kind: "algebra",
            name: algebra.into(),
        }),
    }
}

fn catalan(n: usize) -> BigInt {
    let mut c = BigInt::from(1);
    for k in 0..n {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}

/// Counting families accepted by [`count`].
pub const COUNT_FAMILIES: &[&str] = &[
    "parking-stalactic",
    "endofunctions-stalactic",
    "initial-words-stalactic",
    "connected-endofunctions",
    "free-lie",
    "c-coefficients",
    "unlabelled-parking",
    "rooted-forests",
    "q-sylvester",
    "q-hypoplactic",
    "connected-permutations",
    "catalan",
    "endofunctions",
    "permutations",
    "parking",
    "nondecreasing-parking",
    "set-partitions",
    "initial-words",
    "involutions",
];

/// Sequences whose natural index starts at zero.
fn starts_at_zero(family: &str) -> bool {
    matches!(family, "c-coefficients" | "unlabelled-parking" | "rooted-forests" | "catalan")
}

/// The `n`-th term of a counting family.
pub fn count_one(family: &str, n: usize, opts: &Options) -> Result<BigInt> {
    // plain family names enumerate objects; `*-stalactic` counts classes
    if let Ok(kind) = Kind::from_str(family) {
        return Ok(BigInt::from(enumerate::enumerate(kind, n, &opts.limits)?.len()));
    }
    if let Ok(f) = stalactic::Family::from_str(family) {
        return Ok(stalactic::class_count(f, n));
    }
    let enumerative = |n: usize| -> Result<()> { opts.guard(family, n) };
    Ok(match family {
        "connected-endofunctions" => series::connected_count(n),
        "free-lie" => series::lie_dims(n)[n].clone(),
        "c-coefficients" => {
            enumerative(n + 1)?;
            stalactic::c_coefficients(n + 1)?[n].clone()
        }
        "unlabelled-parking" => {
            enumerative(n)?;
            BigInt::from(parkfunc::unlabelled_count(n))
        }
        "rooted-forests" => {
            enumerative(n)?;
            BigInt::from(parkfunc::forest_basis(n).len())
        }
        "q-sylvester" | "q-hypoplactic" => {
            enumerative(n)?;
            let sys = if family == "q-sylvester" { rewrite::System::QS } else { rewrite::System::QH };
            BigInt::from(rewrite::class_census(sys, n))
        }
        "connected-permutations" => {
            enumerative(n)?;
            BigInt::from(enumerate::permutations(n).filter(qdeform::is_connected).count())
        }
        "catalan" => catalan(n),
        _ => {
            return Err(Error::Unknown {
                kind: "family",
                name: family.into(),
            })
        }
    })
}

/// One term, or the prefix up to `n` when `prefix` is set.
pub fn count(family: &str, n: usize, prefix: bool, opts: &Options) -> Result<Rendered> {
    if !prefix {
        return Ok(Rendered::scalar(count_one(family, n, opts)?));
    }
    let start = if starts_at_zero(family) { 0 } else { 1 };
    let values: Vec<BigInt> = (start..=n).map(|k| count_one(family, k, opts)).collect::<Result<_>>()?;
    Ok(Rendered {
        text: values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        json: Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect()),
    })
}

fn show_word(w: &[usize], alpha: bool) -> String {
    if alpha {
        letters_to_alpha(w).unwrap_or_else(|| fmt_letters(w))
    } else {
        fmt_letters(w)
    }
}

/// Stalactic insertion, or q-rewriting to a normal form under `system`.
pub fn insert(word: &str, system: Option<&str>) -> Result<Rendered> {
    let w = parse_word(word)?;
    let alpha = word.trim().chars().all(|c| c.is_ascii_lowercase());
    match system {
        None | Some("stalactic") => {
            let (p, q) = stalactic::insert(&w);
            let pw = show_word(&p.to_word(), alpha);
            let diagram = p.planar(|a| show_word(&[a], alpha));
            Ok(Rendered {
                text: format!("P = {pw}\nQ = {q}\n{diagram}"),
                json: json!({"P": pw, "Q": q.to_string(), "diagram": diagram}),
            })
        }
        Some(s) => {
            let sys = rewrite::System::from_str(s)?;
            let c = rewrite::q_rewrite(&w, sys);
            let rep = show_word(&c.rep, alpha);
            let text = match c.exponent {
                0 => rep.clone(),
                1 => format!("q·{rep}"),
                k => format!("q^{k}·{rep}"),
            };
            Ok(Rendered {
                text,
                json: json!({"normal_form": rep, "q_exponent": c.exponent}),
            })
        }
    }
}

pub fn triangle(name: &str, rows: usize, opts: &Options) -> Result<Rendered> {
    let t = stalactic::Triangle::from_str(name)?;
    opts.guard("triangle rows", rows)?;
    let table = stalactic::triangle(t, rows);
    let text = table
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n");
    let json = Value::Array(
        table
            .iter()
            .map(|r| Value::Array(r.iter().map(|v| Value::String(v.to_string())).collect()))
            .collect(),
    );
    Ok(Rendered { text, json })
}

/// What `verify` checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Bialgebra axioms and (co)commutativity.
    Axioms,
    /// Duality with the registered dual basis.
    Dual,
    /// Product rule against a polynomial or word realization. The
    /// truncation applies to the map-family realizations and defaults to the
    /// total degree.
    Oracle { truncation: Option<usize> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verification {
    pub ok: bool,
    pub out: Rendered,
}

fn check_json(c: &Check) -> Value {
    json!({"name": c.name, "passed": c.passed(), "cases": c.cases, "counterexample": c.counterexample})
}

fn from_check(algebra: &str, max_degree: usize, c: Check) -> Verification {
    Verification {
        ok: c.passed(),
        out: Rendered {
            text: format!("algebra {algebra} up to degree {max_degree}\n{c}"),
            json: json!({"algebra": algebra, "max_degree": max_degree, "checks": [check_json(&c)]}),
        },
    }
}

fn from_report(r: &HopfReport) -> Verification {
    Verification {
        ok: r.axioms_hold(),
        out: Rendered {
            text: r.to_string().trim_end().to_string(),
            json: json!({
                "algebra": r.algebra,
                "max_degree": r.max_degree,
                "checks": r.checks().iter().map(|c| check_json(c)).collect::<Vec<_>>(),
            }),
        },
    }
}

/// Runs `check` on every pair of basis labels of positive degree with total
/// degree at most `max`.
fn pairs<L: Label>(name: &'static str, basis: impl Fn(usize) -> Vec<L>, max: usize, check: impl Fn(&L, &L) -> Result<bool>) -> Result<Check> {
    let mut chk = Check::new(name);
    for n in 1..max {
        for m in 1..=max - n {
            for a in basis(n) {
                for b in basis(m) {
                    let ok = check(&a, &b)?;
                    chk.record(ok, || format!("{a}·{b}"));
                }
            }
        }
    }
    Ok(chk)
}

fn map_oracle<T: eqsym::MapFamily>(max: usize, truncation: Option<usize>) -> Result<Check> {
    pairs("oracle", T::all, max, |a: &T, b: &T| {
        let n = truncation.unwrap_or(a.degree() + b.degree());
        product_check(a, b, n, eqsym::product_m)
    })
}

fn oracle(algebra: &str, max: usize, truncation: Option<usize>) -> Result<Check> {
    match algebra {
        "eqsym" => map_oracle::<Endofunction>(max, truncation),
        "sgqsym" => map_oracle::<Permutation>(max, truncation),
        "cpqsym" => map_oracle::<ParkingFunction>(max, truncation),
        "phisym" => pairs("oracle", |n| enumerate::permutations(n).collect(), max, |a, b| {
            let k = a.len() + b.len();
            Ok(phisym::oracle::product_by_biwords(a, b, k, k)? == phisym::product_phi(a, b))
        }),
        "wsym" => pairs("oracle", SetPartition::all, max, |a, b| {
            let k = a.size() + b.size();
            Ok(wsym::product_mw_by_words(a, b, k).as_ref() == Some(&wsym::product_mw(a, b)))
        }),
        "qsym-q" => pairs("oracle", crate::combinat::Composition::all, max, |a, b| {
            use qdeform::oracle::{realize_m, realize_m_comb};
            let k = a.size() + b.size();
            Ok(realize_m(a, k).mul(&realize_m(b, k)) == realize_m_comb(&qdeform::product_q_m(a, b), k))
        }),
        "fqsym-q" => pairs("oracle", |n| enumerate::permutations(n).collect(), max, |a, b| {
            use qdeform::oracle::{realize_f, realize_f_comb};
            let k = a.len() + b.len();
            Ok(realize_f(a, k).mul(&realize_f(b, k)) == realize_f_comb(&qdeform::product_f(a, b), k))
        }),
        _ => Err(Error::Unknown {
            kind: "oracle for algebra",
            name: algebra.into(),
        }),
    }
}

fn duality(algebra: &str, max: usize) -> Result<Check> {
    Ok(match algebra {
        "eqsym" | "esym" => duality_check(&eqsym::EQSym::new(), &eqsym::ESym::new(), max),
        "sgqsym" | "sgsym" => duality_check(&MBasis::<Permutation>::new(), &SBasis::<Permutation>::new(), max),
        "cpqsym" | "cpqsym-dual" => duality_check(&parkfunc::CPQSym::new(), &parkfunc::CPQSymDual::new(), max),
        "ccqsym" | "ccqsym-dual" => duality_check(&parkfunc::CCQSym, &parkfunc::CCQSymDual, max),
        "piqsym" | "wsym-p" => duality_check(&wsym::PiQSym, &wsym::WSymPw, max),
        "qsym-q" | "ncsf-q" => {
            let mut chk = Check::new("duality (weighted pairing)");
            let bad = qdeform::qsym_ncsf_duality(max);
            chk.record(bad.is_none(), || format!("{bad:?}"));
            chk
        }
        _ => {
            return Err(Error::Unknown {
                kind: "dual pair for algebra",
                name: algebra.into(),
            })
        }
    })
}

pub fn verify(algebra: &str, basis: Option<&str>, max_degree: usize, mode: VerifyMode, opts: &Options) -> Result<Verification> {
    opts.guard("verification degree", max_degree)?;
    match mode {
        VerifyMode::Axioms => Ok(from_report(&lookup(algebra, basis, opts.q)?.verify(max_degree))),
        VerifyMode::Dual => Ok(from_check(algebra, max_degree, duality(algebra, max_degree)?)),
        VerifyMode::Oracle { truncation } => Ok(from_check(algebra, max_degree, oracle(algebra, max_degree, truncation)?)),
    }
}

/// Operations on the underlying combinatorial objects.
pub const COMBINAT_OPS: &[&str] = &[
    "std",
    "shifted-concat",
    "cut",
    "cycles",
    "csupp",
    "shifted-shuffle",
    "cstd",
    "cyclic-shuffle",
    "matchings",
    "matching-product",
    "mw-words",
    "closure",
];

fn want(args: &[&str], k: usize, op: &str) -> Result<()> {
    if args.len() != k {
        return Err(Error::Parse(format!("`{op}` takes {k} argument(s), got {}", args.len())));
    }
    Ok(())
}

fn list(items: Vec<String>) -> Rendered {
    Rendered {
        text: items.join(" "),
        json: Value::Array(items.into_iter().map(Value::String).collect()),
    }
}

fn single_cycle(s: &str) -> Result<crate::combinat::Cycle> {
    let cs = parse_cycles(s)?;
    match cs.cycles() {
        [c] => Ok(c.clone()),
        _ => Err(Error::Parse(format!("`{s}` is not a single cycle"))),
    }
}

pub fn combinat(op: &str, args: &[&str], opts: &Options) -> Result<Rendered> {
    match op {
        "std" => {
            want(args, 1, op)?;
            Ok(Rendered::scalar(standardize(&parse_word(args[0])?)))
        }
        "shifted-concat" => {
            want(args, 2, op)?;
            let (f, g) = (parse_endofunction(args[0])?, parse_endofunction(args[1])?);
            Ok(Rendered::scalar(fmt_letters(&shifted_concat_maps(&f, &g))))
        }
        "cut" => {
            want(args, 1, op)?;
            let h = parse_endofunction(args[0])?;
            let mut bounds = vec![0];
            bounds.extend(cut_points(&h).into_iter().filter(|&c| c > 0 && c < h.len()));
            bounds.push(h.len());
            let blocks = bounds
                .windows(2)
                .map(|w| fmt_letters(&h[w[0]..w[1]].iter().map(|x| x - w[0]).collect::<Vec<_>>()))
                .collect();
            Ok(list(blocks))
        }
        "cycles" => {
            want(args, 1, op)?;
            Ok(Rendered::scalar(parse_permutation(args[0])?.cycles()))
        }
        "csupp" => {
            want(args, 1, op)?;
            let s = parse_permutation(args[0])?;
            let (p, k) = (s.csupp(), s.cycle_type());
            Ok(Rendered {
                text: format!("{p} {k}"),
                json: json!({"csupp": p.to_string(), "type": k.to_string()}),
            })
        }
        "shifted-shuffle" => {
            want(args, 2, op)?;
            let (u, v) = (parse_word(args[0])?, parse_word(args[1])?);
            let words: BTreeSet<Vec<usize>> = shifted_shuffle(&u, &v).into_iter().collect();
            Ok(list(words.iter().map(|w| fmt_letters(w)).collect()))
        }
        "cstd" => {
            want(args, 1, op)?;
            let s = sgqsym::cstd(&sgqsym::parse_circular_words(args[0])?)?;
            let one_line: Vec<String> = s.iter().map(ToString::to_string).collect();
            Ok(Rendered {
                text: format!("({})", one_line.join(",")),
                json: json!({"permutation": one_line, "cycles": s.cycles().to_string()}),
            })
        }
        "cyclic-shuffle" => {
            want(args, 2, op)?;
            let set = phisym::cyclic_shuffle(&single_cycle(args[0])?, &single_cycle(args[1])?)?;
            Ok(list(set.iter().map(ToString::to_string).collect()))
        }
        "matchings" => {
            want(args, 2, op)?;
            let k: Vec<usize> = args
                .iter()
                .map(|a| a.parse().map_err(|_| Error::Parse(format!("bad size `{a}`"))))
                .collect::<Result<_>>()?;
            opts.guard("matching size", k[0] + k[1])?;
            let ms = phisym::matchings(k[0], k[1]);
            Ok(list(
                ms.iter()
                    .map(|m| format!("{{{}}}", m.iter().map(|(i, j)| format!("{i}-{j}")).collect::<Vec<_>>().join(",")))
                    .collect(),
            ))
        }
        "matching-product" => {
            want(args, 2, op)?;
            let (a, b): (CycleSet, CycleSet) = (parse_cycles(args[0])?, parse_cycles(args[1])?);
            let set = phisym::matching_product(&a, &b)?;
            Ok(list(set.iter().map(ToString::to_string).collect()))
        }
        "mw-words" => {
            want(args, 2, op)?;
            let p = parse_set_partition(args[0])?;
            let n: usize = args[1].parse().map_err(|_| Error::Parse(format!("bad letter count `{}`", args[1])))?;
            opts.guard("word length", p.size())?;
            let words = wsym::mw_words(&p, n);
            Ok(list(words.iter().map(|w| show_word(w, true)).collect()))
        }
        "closure" => {
            want(args, 2, op)?;
            if args[0] != "involutions" {
                return Err(Error::Unknown {
                    kind: "closure family",
                    name: args[0].into(),
                });
            }
            let d: usize = args[1].parse().map_err(|_| Error::Parse(format!("bad degree `{}`", args[1])))?;
            opts.guard("closure degree", d)?;
            let c = qsym::involution_closure(d);
            Ok(Rendered {
                text: c.to_string(),
                json: check_json(&c),
            })
        }
        _ => Err(Error::Unknown {
            kind: "combinat operation",
            name: op.into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> Options {
        Options::default()
    }

    #[test]
    fn element_syntax_round_trips() {
        let a = lookup("eqsym", Some("M"), None).unwrap();
        let r = a.product(&["1", "22"], &opts()).unwrap();
        let again = a.product(&[&r.text, "∅"], &opts()).unwrap();
        assert_eq!(r, again);
        let two = a.product(&["2*1 - M[1]"], &opts()).unwrap();
        assert_eq!(two.text, "M[1]");
        let three = a.product(&["3M[12]"], &opts()).unwrap();
        assert_eq!(three.text, "3*M[12]");
    }

    #[test]
    fn q_coefficients() {
        let a = lookup("fqsym-q", None, None).unwrap();
        let r = a.product(&["(q+1)*F[1]"], &opts()).unwrap();
        assert_eq!(r.text, "(q+1)*F[1]");
        let at = a.coproduct(&["F[21]"], &Options { q: Some(0), ..opts() }).unwrap();
        assert_eq!(at.json.as_array().unwrap().len(), 2);
    }

    #[test]
    fn unknown_ids() {
        assert!(matches!(lookup("nope", None, None), Err(Error::Unknown { .. })));
        assert!(matches!(lookup("eqsym", Some("Z"), None), Err(Error::Unknown { .. })));
        assert!(parse_element::<Permutation, BigInt>("M[12", "M", Permutation::empty(), parse_permutation).is_err());
    }

    #[test]
    fn guard_applies() {
        let a = lookup("sgqsym", None, None).unwrap();
        let tight = Options {
            limits: Limits::with_max_degree(3),
            ..opts()
        };
        assert!(matches!(a.product(&["12", "21"], &tight), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn sym_parsing() {
        let r = convert("sym", "", "s", "e(2)h(2)", &opts()).unwrap();
        assert_eq!(r.json.as_array().unwrap().len(), 2);
    }
}
