//! The inequality prover.
//!
//! `verify` decides whether `b·h ≥ 0` holds over the Shannon cone `Γ_n`
//! (optionally augmented with the ZY98 rows) intersected with constraint
//! hyperplanes `Q h = 0`. Over that cone the infimum of `b·h` is either `0`
//! or `−∞`, and the two cases correspond exactly to the two sides of the
//! membership problem
//!
//! ```text
//!     b = Σ λ_i·G_i + Σ μ_j·Q_j,   λ ≥ 0,
//! ```
//!
//! solved by an exact phase-1 simplex. A solution is returned as a
//! [`Certificate`] that third parties can re-check coefficient-wise; the
//! alternative is an exact [`Ray`] `r` inside the constrained cone with
//! `b·r < 0`, certifying that the basic inequalities do not imply the query.
//! A ray says nothing about validity proper (the entropic region is a
//! strict subset of the cone for `n ≥ 4`), so the companion `disprove`
//! searches for a concrete distribution witnessing invalidity, and `implies`
//! stacks the two into a three-valued conditional-independence test.

mod simplex;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::cone::{self, ConstraintRow, IneqRow, RowOrigin};
use crate::error::{ConeError, CoreError};
use crate::linform::LinForm;
use crate::models::pmf::JointPMF;
use crate::models::search::{search_counterexample, SearchOptions};
use crate::rational::Rat;
use crate::varset::VarSet;
use simplex::{cone_combination, ConeMembership};

/// Extra inequality families to adjoin to the Shannon cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Augment {
    #[default]
    None,
    Zy98,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub augment: Augment,
}

/// A cone query: objective, cone rows, constraint rows.
#[derive(Debug, Clone)]
pub struct Problem {
    pub objective: LinForm,
    pub cone_rows: Vec<IneqRow>,
    pub constraints: Vec<ConstraintRow>,
    pub options: VerifyOptions,
}

impl Problem {
    /// The standard setup: elemental rows of `Γ_n` for `n` taken from the
    /// objective, plus the ZY98 instances when augmentation is requested
    /// (they exist only for `n ≥ 4`).
    pub fn shannon(
        objective: LinForm,
        constraints: Vec<ConstraintRow>,
        options: VerifyOptions,
    ) -> Result<Problem, ConeError> {
        let n = objective.n();
        for c in &constraints {
            if c.form.n() != n {
                return Err(CoreError::ContextMismatch(n, c.form.n()).into());
            }
        }
        let mut cone_rows = if n >= 1 { cone::elemental(n)? } else { Vec::new() };
        if options.augment == Augment::Zy98 && n >= 4 {
            cone_rows.extend(cone::zy98_rows(n)?);
        }
        Ok(Problem {
            objective,
            cone_rows,
            constraints,
            options,
        })
    }

    /// A query over explicit cone rows.
    pub fn with_cone(
        objective: LinForm,
        cone_rows: Vec<IneqRow>,
        constraints: Vec<ConstraintRow>,
    ) -> Result<Problem, ConeError> {
        let n = objective.n();
        for r in &cone_rows {
            if r.form.n() != n {
                return Err(CoreError::ContextMismatch(n, r.form.n()).into());
            }
        }
        for c in &constraints {
            if c.form.n() != n {
                return Err(CoreError::ContextMismatch(n, c.form.n()).into());
            }
        }
        Ok(Problem {
            objective,
            cone_rows,
            constraints,
            options: VerifyOptions::default(),
        })
    }
}

/// Nonnegative multipliers over cone rows plus free multipliers over
/// constraint rows reconstructing the objective exactly. Sparse: only
/// nonzero entries are stored, ordered by row index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub lambda: Vec<(usize, Rat)>,
    pub mu: Vec<(usize, Rat)>,
}

impl Certificate {
    pub fn empty() -> Certificate {
        Certificate {
            lambda: Vec::new(),
            mu: Vec::new(),
        }
    }

    /// Stable text rendering: one `(row provenance, rational)` pair per
    /// line, cone multipliers first.
    pub fn render(&self, problem: &Problem) -> String {
        let mut out = String::new();
        for (i, v) in &self.lambda {
            out.push_str(&format!("lambda[{}] = {}\n", problem.cone_rows[*i].origin, v));
        }
        for (j, v) in &self.mu {
            out.push_str(&format!("mu[{}] = {}\n", problem.constraints[*j].origin, v));
        }
        if out.is_empty() {
            out.push_str("(empty combination: the objective is the zero form)\n");
        }
        out
    }

    pub fn to_json(&self, problem: &Problem) -> serde_json::Value {
        let lambda: Vec<serde_json::Value> = self
            .lambda
            .iter()
            .map(|(i, v)| {
                serde_json::json!({
                    "row": problem.cone_rows[*i].origin.to_string(),
                    "value": v.to_string(),
                })
            })
            .collect();
        let mu: Vec<serde_json::Value> = self
            .mu
            .iter()
            .map(|(j, v)| {
                serde_json::json!({
                    "row": problem.constraints[*j].origin.to_string(),
                    "value": v.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "lambda": lambda, "mu": mu })
    }
}

/// An exact point of the constrained cone on which the objective is
/// negative. Scaled to the primitive integer direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    n: u8,
    coords: Vec<Rat>,
}

impl Ray {
    pub fn n(&self) -> u8 {
        self.n
    }

    /// Coordinates in canonical subset order, length `2^n − 1`.
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn value_at(&self, alpha: VarSet) -> &Rat {
        &self.coords[alpha.coord_index().expect("nonempty subset")]
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (alpha, v) in VarSet::all_nonempty(self.n).zip(&self.coords) {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "h{}={}", alpha.label(), v)?;
        }
        Ok(())
    }
}

/// Prover outcome.
#[derive(Debug, Clone)]
pub enum Verdict {
    /// Nonnegative combination over the Shannon cone alone.
    Proved { certificate: Certificate },
    /// Combination that needs at least one augmented (non-Shannon) row.
    ProvedAugmented { certificate: Certificate },
    /// Exact ray in the constrained cone with `b·ray < 0`; the query is not
    /// implied by the cone (it may still be valid).
    NotImpliedByCone { ray: Ray },
    /// Concrete distribution with `b·h < 0`: the inequality is invalid.
    Disproved { witness: JointPMF, value: f64 },
    Unknown,
}

/// Decide `b ≥ 0` over the problem's cone and constraints.
pub fn verify(problem: &Problem) -> Result<Verdict, CoreError> {
    let target = problem.objective.dense();
    let cone_cols: Vec<Vec<Rat>> = problem.cone_rows.iter().map(|r| r.form.dense()).collect();
    let free_cols: Vec<Vec<Rat>> = problem.constraints.iter().map(|c| c.form.dense()).collect();

    match cone_combination(&target, &cone_cols, &free_cols) {
        ConeMembership::Combination { lambda, mu } => {
            let certificate = sparsify(lambda, mu);
            assert!(
                check_certificate(
                    &problem.objective,
                    &certificate,
                    &problem.cone_rows,
                    &problem.constraints
                ),
                "solver returned a certificate that fails its exact check"
            );
            let uses_augmented = certificate.lambda.iter().any(|(i, _)| {
                matches!(problem.cone_rows[*i].origin, RowOrigin::NonShannon { .. })
            });
            if !uses_augmented {
                return Ok(Verdict::Proved { certificate });
            }
            // An augmented row carries weight; report Proved anyway whenever
            // the elemental rows alone suffice, so augmentation never
            // downgrades a Shannon-type result.
            let elemental_only: Vec<&IneqRow> = problem
                .cone_rows
                .iter()
                .filter(|r| !matches!(r.origin, RowOrigin::NonShannon { .. }))
                .collect();
            let elem_cols: Vec<Vec<Rat>> =
                elemental_only.iter().map(|r| r.form.dense()).collect();
            match cone_combination(&target, &elem_cols, &free_cols) {
                ConeMembership::Combination { lambda, mu } => {
                    let certificate = sparsify(lambda, mu);
                    Ok(Verdict::Proved { certificate })
                }
                ConeMembership::Separated { .. } => {
                    Ok(Verdict::ProvedAugmented { certificate })
                }
            }
        }
        ConeMembership::Separated { witness } => {
            let ray = Ray {
                n: problem.objective.n(),
                coords: primitive_direction(witness),
            };
            // The separation is an internal invariant; fail loudly if the
            // solver ever hands back a bogus ray.
            for r in &problem.cone_rows {
                assert!(
                    !r.form.evaluate_exact(ray.coords())?.is_negative(),
                    "ray violates cone row {r}"
                );
            }
            for c in &problem.constraints {
                assert!(
                    c.form.evaluate_exact(ray.coords())?.is_zero(),
                    "ray violates constraint {c}"
                );
            }
            assert!(problem
                .objective
                .evaluate_exact(ray.coords())?
                .is_negative());
            Ok(Verdict::NotImpliedByCone { ray })
        }
    }
}

/// Exact check of the certificate invariant: `λ ≥ 0` and
/// `b = Σ λ_i·G_i + Σ μ_j·Q_j` coefficient-wise.
pub fn check_certificate(
    b: &LinForm,
    certificate: &Certificate,
    cone_rows: &[IneqRow],
    constraints: &[ConstraintRow],
) -> bool {
    if certificate.lambda.iter().any(|(_, v)| v.is_negative()) {
        return false;
    }
    let mut terms: Vec<(Rat, &LinForm)> = vec![(Rat::zero(), b)];
    for (i, v) in &certificate.lambda {
        match cone_rows.get(*i) {
            Some(row) => terms.push((v.clone(), &row.form)),
            None => return false,
        }
    }
    for (j, v) in &certificate.mu {
        match constraints.get(*j) {
            Some(row) => terms.push((v.clone(), &row.form)),
            None => return false,
        }
    }
    match LinForm::combine(terms) {
        Ok(sum) => &sum == b,
        Err(_) => false,
    }
}

fn sparsify(lambda: Vec<Rat>, mu: Vec<Rat>) -> Certificate {
    Certificate {
        lambda: lambda
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect(),
        mu: mu
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect(),
    }
}

/// Scale to the unique primitive integer vector in the same direction.
fn primitive_direction(coords: Vec<Rat>) -> Vec<Rat> {
    let mut lcm = BigInt::from(1);
    for c in &coords {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coords
        .iter()
        .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    if gcd.is_zero() {
        return coords;
    }
    ints.into_iter()
        .map(|v| Rat::from_integer(v / &gcd))
        .collect()
}

/// A conditional independency `X_left ⟂ X_right | X_cond`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CondIndep {
    left: VarSet,
    right: VarSet,
    cond: VarSet,
}

impl CondIndep {
    pub fn new(left: VarSet, right: VarSet, cond: VarSet) -> Result<CondIndep, CoreError> {
        if left.is_empty() || right.is_empty() {
            return Err(CoreError::EmptySet);
        }
        if !left.is_disjoint(right) || !left.is_disjoint(cond) || !right.is_disjoint(cond) {
            return Err(CoreError::DisjointnessViolated);
        }
        Ok(CondIndep { left, right, cond })
    }

    pub fn left(&self) -> VarSet {
        self.left
    }

    pub fn right(&self) -> VarSet {
        self.right
    }

    pub fn cond(&self) -> VarSet {
        self.cond
    }

    /// The mutual-information form whose vanishing expresses this CI.
    pub fn mutual_form(&self, n: u8) -> Result<LinForm, CoreError> {
        LinForm::mutual(n, self.left, self.right, self.cond)
    }

    pub fn constraint(&self, n: u8) -> Result<ConstraintRow, ConeError> {
        cone::constraint_ci(n, self.left, self.right, self.cond)
    }
}

impl fmt::Display for CondIndep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cond.is_empty() {
            write!(f, "{} _||_ {}", self.left, self.right)
        } else {
            write!(f, "{} _||_ {} | {}", self.left, self.right, self.cond)
        }
    }
}

#[derive(Debug, Clone)]
pub enum ImplicationVerdict {
    /// The premises force the conclusion for every distribution.
    Implied { certificate: Certificate },
    /// A distribution satisfying the premises violates the conclusion by
    /// `mutual_information` bits.
    NotImplied {
        witness: JointPMF,
        mutual_information: f64,
    },
    /// The Shannon-level test is sound but not complete; nothing found.
    Unknown,
}

#[derive(Debug, Clone, Default)]
pub struct ImpliesOptions {
    pub augment: Augment,
    pub search: SearchOptions,
}

/// Does the premise set force the conclusion CI?
///
/// Sound template: over the constrained cone `Γ_n ∩ {premises}` the
/// conclusion's mutual information is nonnegative, so the implication holds
/// whenever `−I(conclusion) ≥ 0` is provable there: the face of the cone
/// pinned by the premises lies inside the conclusion's hyperplane. On
/// failure a counterexample search looks for a distribution satisfying the
/// premises with `I(conclusion)` bounded away from zero; if neither side
/// resolves, the answer is `Unknown` (deciding CI implication in general
/// needs more than the cone's closure).
pub fn implies(
    n: u8,
    premises: &[CondIndep],
    conclusion: &CondIndep,
    opts: &ImpliesOptions,
) -> Result<ImplicationVerdict, ConeError> {
    let constraints: Vec<ConstraintRow> = premises
        .iter()
        .map(|ci| ci.constraint(n))
        .collect::<Result<_, _>>()?;
    let negated = -&conclusion.mutual_form(n)?;
    let problem = Problem::shannon(
        negated,
        constraints.clone(),
        VerifyOptions {
            augment: opts.augment,
        },
    )?;
    match verify(&problem)? {
        Verdict::Proved { certificate } | Verdict::ProvedAugmented { certificate } => {
            return Ok(ImplicationVerdict::Implied { certificate });
        }
        _ => {}
    }
    let objective = -&conclusion.mutual_form(n)?;
    if let Some((witness, value)) = search_counterexample(&objective, &constraints, &opts.search) {
        return Ok(ImplicationVerdict::NotImplied {
            witness,
            mutual_information: -value,
        });
    }
    Ok(ImplicationVerdict::Unknown)
}

/// Search for a distribution violating `b ≥ 0` under the constraints.
/// `Disproved` carries the witness; `Unknown` means the budget ran out.
pub fn disprove(b: &LinForm, constraints: &[ConstraintRow], opts: &SearchOptions) -> Verdict {
    match search_counterexample(b, constraints, opts) {
        Some((witness, value)) => Verdict::Disproved { witness, value },
        None => Verdict::Unknown,
    }
}
