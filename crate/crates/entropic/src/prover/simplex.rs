//! Exact cone-membership solver.
//!
//! Decides whether a target vector is a nonnegative combination of cone
//! columns plus an arbitrary combination of free columns,
//!
//! ```text
//!     target = Σ λ_i · cone_i + Σ μ_j · free_j,    λ ≥ 0,
//! ```
//!
//! by a phase-1 simplex over exact rationals: minimize the sum of artificial
//! variables with Bland's anti-cycling rule (lowest eligible index enters;
//! ties in the ratio test break toward the lowest basic index), so runs are
//! deterministic and cannot cycle. Free columns are split into ± parts.
//!
//! The two outcomes are dual to each other by Farkas' lemma and both come
//! with exact evidence: a combination `(λ, μ)`, or a separating vector `r`
//! with `⟨r, cone_i⟩ ≥ 0`, `⟨r, free_j⟩ = 0`, and `⟨r, target⟩ < 0`, read
//! off the final tableau as the simplex multipliers. The feasible set of the
//! phase-1 program is never empty and its objective is bounded below by
//! zero, so the solve always terminates with one of the two.

use num_traits::{One, Signed, Zero};

use crate::rational::Rat;

/// Outcome of the membership solve; exactly one side holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeMembership {
    /// `target = Σ λ_i cone_i + Σ μ_j free_j` with `λ ≥ 0`.
    Combination { lambda: Vec<Rat>, mu: Vec<Rat> },
    /// `r` certifying that no such combination exists.
    Separated { witness: Vec<Rat> },
}

/// Solve the membership problem. All columns and the target must share the
/// same dimension. Panics on dimension mismatch (callers validate).
pub fn cone_combination(
    target: &[Rat],
    cone_cols: &[Vec<Rat>],
    free_cols: &[Vec<Rat>],
) -> ConeMembership {
    let k = target.len();
    for c in cone_cols.iter().chain(free_cols) {
        assert_eq!(c.len(), k, "column dimension mismatch");
    }
    let m = cone_cols.len();
    let q = free_cols.len();
    let art_start = m + 2 * q;
    let ncols = art_start + k;

    // Row signs chosen so the artificial block starts as the identity with a
    // nonnegative right-hand side.
    let sigma: Vec<bool> = target.iter().map(|b| !b.is_negative()).collect();
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(k);
    let mut rhs: Vec<Rat> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = vec![Rat::zero(); ncols];
        for (j, col) in cone_cols.iter().enumerate() {
            row[j] = signed(&col[i], sigma[i]);
        }
        for (j, col) in free_cols.iter().enumerate() {
            row[m + j] = signed(&col[i], sigma[i]);
            row[m + q + j] = -row[m + j].clone();
        }
        row[art_start + i] = Rat::one();
        a.push(row);
        rhs.push(target[i].abs());
    }
    let mut basis: Vec<usize> = (0..k).map(|i| art_start + i).collect();

    // Reduced costs c_j − z_j for phase-1 costs (1 on artificials, 0 else):
    // structural columns start at −(column sum), artificials at 0.
    let mut cost = vec![Rat::zero(); ncols];
    for (j, c) in cost.iter_mut().enumerate().take(art_start) {
        let mut sum = Rat::zero();
        for row in &a {
            sum += &row[j];
        }
        *c = -sum;
    }

    let mut pivots = 0usize;
    loop {
        if objective(&basis, &rhs, art_start).is_zero() {
            break; // feasible
        }
        // Bland: lowest structural index with negative reduced cost.
        let entering = (0..art_start).find(|j| cost[*j].is_negative());
        let Some(e) = entering else {
            break; // optimal with positive objective: infeasible
        };
        // Ratio test; ties break toward the lowest basic variable index.
        let mut leave: Option<(usize, Rat)> = None;
        for r in 0..k {
            if a[r][e].is_positive() {
                let ratio = &rhs[r] / &a[r][e];
                match &leave {
                    None => leave = Some((r, ratio)),
                    Some((best_r, best)) => {
                        if ratio < *best || (ratio == *best && basis[r] < basis[*best_r]) {
                            leave = Some((r, ratio));
                        }
                    }
                }
            }
        }
        let (r, _) = leave.expect("phase-1 objective is bounded below by zero");

        // Pivot on (r, e).
        let piv = a[r][e].clone();
        for x in a[r].iter_mut() {
            *x /= &piv;
        }
        rhs[r] /= &piv;
        let pivot_row = a[r].clone();
        let pivot_rhs = rhs[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[e].is_zero() {
                let factor = row[e].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
                rhs[i] -= &factor * &pivot_rhs;
            }
        }
        if !cost[e].is_zero() {
            let factor = cost[e].clone();
            for (c, p) in cost.iter_mut().zip(&pivot_row) {
                *c -= &factor * p;
            }
        }
        basis[r] = e;

        pivots += 1;
        assert!(pivots < 1_000_000, "pivot budget exceeded; solver bug");
    }

    if objective(&basis, &rhs, art_start).is_zero() {
        let mut x = vec![Rat::zero(); art_start];
        for (r, &b) in basis.iter().enumerate() {
            if b < art_start {
                x[b] = rhs[r].clone();
            }
        }
        let lambda = x[..m].to_vec();
        let mu = (0..q).map(|j| &x[m + j] - &x[m + q + j]).collect();
        ConeMembership::Combination { lambda, mu }
    } else {
        // Simplex multipliers: y'_i = 1 − reduced cost of artificial i; undo
        // the row scaling and negate to point into the cone.
        let witness = (0..k)
            .map(|i| {
                let y = Rat::one() - &cost[art_start + i];
                if sigma[i] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        ConeMembership::Separated { witness }
    }
}

fn signed(v: &Rat, keep: bool) -> Rat {
    if keep {
        v.clone()
    } else {
        -v.clone()
    }
}

fn objective(basis: &[usize], rhs: &[Rat], art_start: usize) -> Rat {
    let mut sum = Rat::zero();
    for (r, &b) in basis.iter().enumerate() {
        if b >= art_start {
            sum += &rhs[r];
        }
    }
    sum
}
