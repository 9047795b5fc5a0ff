//! Shared oracles for the integration suites.
//!
//! These deliberately re-derive everything from first principles (basic
//! inequalities by template enumeration, polymatroid axioms by definition)
//! so the tests check the crate against independent formulations rather
//! than against itself.

#![allow(dead_code)]

use entropic::linform::LinForm;
use entropic::rational::Rat;
use entropic::varset::VarSet;

/// All basic inequalities over `n` variables: nonnegativity of every
/// entropy, conditional entropy, mutual information, and conditional mutual
/// information over disjoint subsets (γ possibly empty, `{α, β}` unordered).
/// Enumerated directly from the four templates; duplicates across templates
/// are kept.
pub fn basic_inequalities(n: u8) -> Vec<LinForm> {
    let mut out = Vec::new();
    // H(X_α) ≥ 0
    for alpha in VarSet::all_nonempty(n) {
        out.push(LinForm::entropy(n, alpha).unwrap());
    }
    // H(X_α | X_γ) ≥ 0
    for alpha in VarSet::all_nonempty(n) {
        let rest = VarSet::full(n).minus(alpha);
        for gamma in subsets(rest) {
            out.push(LinForm::cond_entropy(n, alpha, gamma).unwrap());
        }
    }
    // I(X_α; X_β) ≥ 0 and I(X_α; X_β | X_γ) ≥ 0, {α, β} unordered
    for alpha in VarSet::all_nonempty(n) {
        for beta in VarSet::all_nonempty(n) {
            if beta.mask() <= alpha.mask() || !alpha.is_disjoint(beta) {
                continue;
            }
            let rest = VarSet::full(n).minus(alpha).minus(beta);
            for gamma in subsets(rest) {
                out.push(LinForm::mutual(n, alpha, beta, gamma).unwrap());
            }
        }
    }
    out
}

/// All subsets of `within`, including the empty set.
pub fn subsets(within: VarSet) -> Vec<VarSet> {
    let mask = within.mask();
    (0..=mask)
        .filter(|sub| sub & mask == *sub)
        .map(|sub| VarSet::from_mask(sub).unwrap())
        .collect()
}

/// Exact evaluation helper treating the empty set as 0.
fn coord(h: &[Rat], alpha: VarSet) -> Rat {
    if alpha.is_empty() {
        Rat::default()
    } else {
        h[alpha.coord_index().unwrap()].clone()
    }
}

/// The polymatroid axioms with the `H(∅) = 0` extension: monotonicity on
/// every nested pair and submodularity on every pair of subsets.
pub fn is_polymatroid(n: u8, h: &[Rat]) -> bool {
    for delta in VarSet::all(n) {
        for sigma in VarSet::all(n) {
            if delta.is_subset_of(sigma) && coord(h, delta) > coord(h, sigma) {
                return false;
            }
            let lhs = coord(h, delta) + coord(h, sigma);
            let rhs = coord(h, delta.union(sigma)) + coord(h, delta.intersect(sigma));
            if lhs < rhs {
                return false;
            }
        }
    }
    true
}

/// Conjunction of every basic inequality, evaluated exactly.
pub fn satisfies_basic(n: u8, h: &[Rat]) -> bool {
    use num_traits::Signed;
    basic_inequalities(n)
        .iter()
        .all(|b| !b.evaluate_exact(h).unwrap().is_negative())
}

/// Exact rational vector from `f64` coordinates (each conversion is exact).
pub fn to_exact(h: &[f64]) -> Vec<Rat> {
    h.iter()
        .map(|&v| Rat::from_float(v).expect("finite coordinate"))
        .collect()
}
