//! Rows of the Shannon cone and its companions.
//!
//! `elemental(n)` emits the minimal elemental subset of the basic
//! inequalities, `H(X_i | X_rest) ≥ 0` for each `i` and
//! `I(X_i; X_j | X_K) ≥ 0` for each pair `i < j` and each `K` disjoint from
//! it, `n + C(n,2)·2^(n−2)` rows in total. Every basic inequality is a
//! nonnegative combination of these (the prover certifies that in tests), so
//! the full basic family would only bloat the LPs.
//!
//! Constraint builders cover the usual joint-distribution conditions
//! (functional dependence, conditional independence, Markov chains, mutual
//! independence), each a hyperplane `f = 0`.
//!
//! The non-Shannon database holds exactly ZY97 (constrained) and ZY98
//! (unconstrained), with all injective single-variable role assignments;
//! substituting joint variables into ZY98 roles is a possible extension, not
//! done here.

use std::fmt;

use crate::error::{ConeError, CoreError};
use crate::linform::LinForm;
use crate::rational::rat;
use crate::varset::{VarSet, MAX_VARS};

/// Where an inequality row came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowOrigin {
    /// `H(X_i | X_{[n]∖{i}}) ≥ 0`.
    CondEntropy { i: u8 },
    /// `I(X_i; X_j | X_K) ≥ 0`.
    CondMutual { i: u8, j: u8, cond: VarSet },
    /// A named non-Shannon inequality instantiated at `roles[k]` = the
    /// variable playing role `k+1`.
    NonShannon { name: &'static str, roles: Vec<u8> },
}

impl fmt::Display for RowOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowOrigin::CondEntropy { i } => write!(f, "elemental H({i}|rest)"),
            RowOrigin::CondMutual { i, j, cond } => {
                if cond.is_empty() {
                    write!(f, "elemental I({i};{j})")
                } else {
                    write!(f, "elemental I({i};{j}|{cond})")
                }
            }
            RowOrigin::NonShannon { name, roles } => {
                let rs: Vec<String> = roles.iter().map(|r| r.to_string()).collect();
                write!(f, "{name}({})", rs.join(","))
            }
        }
    }
}

/// One cone row, meaning `form ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IneqRow {
    pub form: LinForm,
    pub origin: RowOrigin,
}

impl fmt::Display for IneqRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  # {}", self.form, self.origin)
    }
}

/// Where a constraint row came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintOrigin {
    /// `H(X_i | X_α) = 0`: variable `i` is a function of `X_α`.
    Functional { i: u8, given: VarSet },
    /// `I(X_α; X_β | X_γ) = 0`.
    CondIndep {
        left: VarSet,
        right: VarSet,
        cond: VarSet,
    },
    /// One link of a Markov chain.
    MarkovLink { past: VarSet, future: VarSet, present: VarSet },
    /// `h_{all} = ∑ h_i`.
    MutualIndependence { vars: VarSet },
    /// A user-supplied equality statement, kept verbatim.
    Statement(String),
}

impl fmt::Display for ConstraintOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintOrigin::Functional { i, given } => write!(f, "H({i}|{given}) = 0"),
            ConstraintOrigin::CondIndep { left, right, cond } => {
                if cond.is_empty() {
                    write!(f, "I({left};{right}) = 0")
                } else {
                    write!(f, "I({left};{right}|{cond}) = 0")
                }
            }
            ConstraintOrigin::MarkovLink {
                past,
                future,
                present,
            } => write!(f, "I({past};{future}|{present}) = 0"),
            ConstraintOrigin::MutualIndependence { vars } => {
                write!(f, "independence of {vars}")
            }
            ConstraintOrigin::Statement(s) => f.write_str(s),
        }
    }
}

/// One constraint row, meaning `form = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintRow {
    pub form: LinForm,
    pub origin: ConstraintOrigin,
}

impl fmt::Display for ConstraintRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  # {}", self.form, self.origin)
    }
}

/// The elemental rows of Γ_n, in a fixed deterministic order: the `n`
/// conditional entropies first, then the conditional mutual informations by
/// `(i, j)` lexicographic and conditioning mask ascending.
pub fn elemental(n: u8) -> Result<Vec<IneqRow>, ConeError> {
    if !(1..=MAX_VARS).contains(&n) {
        return Err(ConeError::VarCountOutOfRange(n, 1));
    }
    let mut rows = Vec::new();
    let full = VarSet::full(n);
    for i in 1..=n {
        let me = VarSet::singleton(i)?;
        let rest = full.minus(me);
        rows.push(IneqRow {
            form: LinForm::cond_entropy(n, me, rest)?,
            origin: RowOrigin::CondEntropy { i },
        });
    }
    for i in 1..n {
        for j in (i + 1)..=n {
            let a = VarSet::singleton(i)?;
            let b = VarSet::singleton(j)?;
            let others = full.minus(a).minus(b);
            for cond in subsets_of(others) {
                rows.push(IneqRow {
                    form: LinForm::mutual(n, a, b, cond)?,
                    origin: RowOrigin::CondMutual { i, j, cond },
                });
            }
        }
    }
    Ok(rows)
}

/// All subsets of `within` (including empty), ascending by mask.
fn subsets_of(within: VarSet) -> Vec<VarSet> {
    let mask = within.mask();
    (0..=mask)
        .filter(|sub| sub & mask == *sub)
        .map(|sub| VarSet::from_mask(sub).expect("submask in range"))
        .collect()
}

/// `H(X_i | X_α) = 0`: `X_i` is a function of `X_α`.
pub fn constraint_functional(n: u8, i: u8, alpha: VarSet) -> Result<ConstraintRow, ConeError> {
    let me = VarSet::singleton(i)?;
    if !me.is_disjoint(alpha) {
        return Err(CoreError::DisjointnessViolated.into());
    }
    Ok(ConstraintRow {
        form: LinForm::cond_entropy(n, me, alpha)?,
        origin: ConstraintOrigin::Functional { i, given: alpha },
    })
}

/// `I(X_α; X_β | X_γ) = 0`.
pub fn constraint_ci(
    n: u8,
    alpha: VarSet,
    beta: VarSet,
    gamma: VarSet,
) -> Result<ConstraintRow, ConeError> {
    Ok(ConstraintRow {
        form: LinForm::mutual(n, alpha, beta, gamma)?,
        origin: ConstraintOrigin::CondIndep {
            left: alpha,
            right: beta,
            cond: gamma,
        },
    })
}

/// Markov chain over ordered disjoint groups: for `k = 3..=len`,
/// `I(groups[..k−2]; groups[k−1] | groups[k−2]) = 0`.
pub fn constraint_markov(n: u8, chain: &[VarSet]) -> Result<Vec<ConstraintRow>, ConeError> {
    if chain.len() < 3 {
        return Err(ConeError::ChainTooShort(chain.len()));
    }
    for (i, a) in chain.iter().enumerate() {
        if a.is_empty() {
            return Err(CoreError::EmptySet.into());
        }
        for b in &chain[i + 1..] {
            if !a.is_disjoint(*b) {
                return Err(CoreError::DisjointnessViolated.into());
            }
        }
    }
    let mut rows = Vec::new();
    for k in 2..chain.len() {
        let past = chain[..k - 1]
            .iter()
            .fold(VarSet::EMPTY, |acc, g| acc.union(*g));
        let present = chain[k - 1];
        let future = chain[k];
        rows.push(ConstraintRow {
            form: LinForm::mutual(n, past, future, present)?,
            origin: ConstraintOrigin::MarkovLink {
                past,
                future,
                present,
            },
        });
    }
    Ok(rows)
}

/// `h_{vars} − ∑_{i∈vars} h_i = 0`: the variables are mutually independent.
pub fn constraint_mutual_independence(n: u8, vars: &[u8]) -> Result<ConstraintRow, ConeError> {
    if vars.len() < 2 {
        return Err(ConeError::TooFewVariables);
    }
    let mut seen = VarSet::EMPTY;
    for &i in vars {
        let s = VarSet::singleton(i)?;
        if !seen.is_disjoint(s) {
            return Err(ConeError::DuplicateVariable);
        }
        seen = seen.union(s);
    }
    let mut form = LinForm::entropy(n, seen)?;
    for &i in vars {
        form = &form - &LinForm::entropy(n, VarSet::singleton(i)?)?;
    }
    Ok(ConstraintRow {
        form,
        origin: ConstraintOrigin::MutualIndependence { vars: seen },
    })
}

/// The ZY98 inequality `2I(X_3;X_4) ≤ I(X_1;X_2) + I(X_1;X_3,X_4) +
/// 3I(X_3;X_4|X_1) + I(X_3;X_4|X_2)` as a `rhs − lhs ≥ 0` form, with the
/// four roles played by `roles[0..4]`.
pub fn zy98_form(n: u8, roles: [u8; 4]) -> Result<LinForm, ConeError> {
    let [r1, r2, r3, r4] = roles;
    let v1 = VarSet::singleton(r1)?;
    let v2 = VarSet::singleton(r2)?;
    let v3 = VarSet::singleton(r3)?;
    let v4 = VarSet::singleton(r4)?;
    if v1.union(v2).union(v3).union(v4).len() != 4 {
        return Err(ConeError::DuplicateVariable);
    }
    let i12 = LinForm::mutual(n, v1, v2, VarSet::EMPTY)?;
    let i1_34 = LinForm::mutual(n, v1, v3.union(v4), VarSet::EMPTY)?;
    let i34 = LinForm::mutual(n, v3, v4, VarSet::EMPTY)?;
    let i34_1 = LinForm::mutual(n, v3, v4, v1)?;
    let i34_2 = LinForm::mutual(n, v3, v4, v2)?;
    Ok(LinForm::combine([
        (rat(1), &i12),
        (rat(1), &i1_34),
        (rat(3), &i34_1),
        (rat(1), &i34_2),
        (rat(-2), &i34),
    ])?)
}

/// All distinct ZY98 instances over `[n]`: one row per injective assignment
/// of the four roles, deduplicated by exact form equality (swapping roles 3
/// and 4 leaves the form unchanged, so there are `n(n−1)(n−2)(n−3)/2`).
pub fn zy98_rows(n: u8) -> Result<Vec<IneqRow>, ConeError> {
    if !(4..=MAX_VARS).contains(&n) {
        return Err(ConeError::VarCountOutOfRange(n, 4));
    }
    let mut rows: Vec<IneqRow> = Vec::new();
    for r1 in 1..=n {
        for r2 in 1..=n {
            for r3 in 1..=n {
                for r4 in 1..=n {
                    let roles = [r1, r2, r3, r4];
                    if roles.iter().collect::<std::collections::BTreeSet<_>>().len() != 4 {
                        continue;
                    }
                    let form = zy98_form(n, roles)?;
                    if rows.iter().any(|r| r.form == form) {
                        continue;
                    }
                    rows.push(IneqRow {
                        form,
                        origin: RowOrigin::NonShannon {
                            name: "zy98",
                            roles: roles.to_vec(),
                        },
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// The ZY97 constrained inequality over `n = 4`: under
/// `I(X_1;X_2) = I(X_1;X_2|X_3) = 0`, it asserts
/// `I(X_3;X_4) ≤ I(X_3;X_4|X_1) + I(X_3;X_4|X_2)`. Returns the two
/// constraint rows and the `rhs − lhs` objective.
pub fn zy97_problem() -> (Vec<ConstraintRow>, LinForm) {
    let n = 4;
    let v = |i: u8| VarSet::singleton(i).expect("index in range");
    let constraints = vec![
        constraint_ci(n, v(1), v(2), VarSet::EMPTY).expect("valid CI"),
        constraint_ci(n, v(1), v(2), v(3)).expect("valid CI"),
    ];
    let i34 = LinForm::mutual(n, v(3), v(4), VarSet::EMPTY).expect("valid MI");
    let i34_1 = LinForm::mutual(n, v(3), v(4), v(1)).expect("valid MI");
    let i34_2 = LinForm::mutual(n, v(3), v(4), v(2)).expect("valid MI");
    let objective = &(&i34_1 + &i34_2) - &i34;
    (constraints, objective)
}
