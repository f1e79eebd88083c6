//! The commutative Hopf algebra of permutations, basis `M_σ`, its dual
//! `S^σ`, and circular standardization.
//!
//! `M_σ` products are available through three independent routes, which
//! the tests compare against each other and against the polynomial oracle.

use num_bigint::BigInt;

use crate::combinat::cycles::{Cycle, CycleSet};
use crate::combinat::enumerate;
use crate::combinat::maps::Permutation;
use crate::combinat::word::{standardize_slice, subsets_of_size};
use crate::eqsym::{self, MBasis, SBasis};
use crate::error::{Error, Result};
use crate::linear::LinComb;

pub mod qsym;
pub mod wsym;

pub type SGQSym = MBasis<Permutation>;
pub type SGSym = SBasis<Permutation>;

/// Route 1: shuffle conjugation, shared with endofunctions.
pub fn product_shuffle(alpha: &Permutation, beta: &Permutation) -> LinComb<Permutation> {
    eqsym::product_m(alpha, beta)
}

/// Route 2: split `[n+m]` into `A ⊔ B` with `|A| = n`, transport the cycles
/// of `α` onto `A` and those of `β` onto `B` by increasing bijections.
pub fn product_split(alpha: &Permutation, beta: &Permutation) -> LinComb<Permutation> {
    let (n, m) = (alpha.len(), beta.len());
    let one = BigInt::from(1);
    let mut out = LinComb::zero();
    for mask in subsets_of_size(n + m, n) {
        let a: Vec<usize> = (1..=n + m).filter(|&i| mask[i - 1]).collect();
        let b: Vec<usize> = (1..=n + m).filter(|&i| !mask[i - 1]).collect();
        let mut cycles: Vec<Cycle> = alpha.cycles().iter().map(|c| c.relabel(|x| a[x - 1])).collect();
        cycles.extend(beta.cycles().iter().map(|c| c.relabel(|x| b[x - 1])));
        let gamma = CycleSet::new(cycles)
            .and_then(|cs| cs.to_permutation())
            .expect("A and B partition [n+m]");
        out.add_term(gamma, one.clone());
    }
    out
}

/// Route 3: `C^γ_{α,β}` counts complementary pairs of cycle subsets of `γ`
/// standardizing to `(α, β)`, scanned over all `γ ∈ S_{n+m}`.
pub fn product_dual_count(alpha: &Permutation, beta: &Permutation) -> LinComb<Permutation> {
    let (n, m) = (alpha.len(), beta.len());
    let mut out = LinComb::zero();
    for gamma in enumerate::permutations(n + m) {
        let cycles = gamma.cycles();
        let k = cycles.len();
        let mut count = 0u64;
        for mask in 0u64..(1u64 << k) {
            let chosen: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            let rest: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 0).collect();
            let size: usize = chosen.iter().map(|&i| cycles.cycles()[i].len()).sum();
            if size != n {
                continue;
            }
            if &cycles.standardized_sub(&chosen) == alpha && &cycles.standardized_sub(&rest) == beta {
                count += 1;
            }
        }
        out.add_term(gamma, BigInt::from(count));
    }
    out
}

/// The order used on circular words: lexicographic on minimal rotations.
fn minimal_rotation(w: &[usize]) -> Vec<usize> {
    (0..w.len())
        .map(|k| {
            let mut r = w.to_vec();
            r.rotate_left(k);
            r
        })
        .min()
        .unwrap_or_default()
}

/// Circular standardization of a commutative product of circular words.
pub fn cstd(words: &[Vec<usize>]) -> Result<Permutation> {
    if words.iter().any(|w| w.is_empty()) {
        return Err(Error::invalid("circular word", "empty circular word"));
    }
    let mut reps: Vec<Vec<usize>> = words.iter().map(|w| minimal_rotation(w)).collect();
    reps.sort();
    let flat: Vec<usize> = reps.iter().flatten().copied().collect();
    let std = standardize_slice(&flat);
    let mut cycles = Vec::new();
    let mut pos = 0;
    for r in &reps {
        cycles.push(Cycle::new(std[pos..pos + r.len()].to_vec())?);
        pos += r.len();
    }
    CycleSet::new(cycles)?.to_permutation()
}

/// Parses `(cba)(aba)(ac)(ba)` into circular words over `a..z`.
pub fn parse_circular_words(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    let mut out = Vec::new();
    for piece in s.split(')') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let body = piece
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("bad circular word list `{s}`")))?;
        out.push(crate::combinat::notation::parse_word(body)?);
    }
    Ok(out)
}
