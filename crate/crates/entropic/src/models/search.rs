//! Counterexample search over joint distributions.
//!
//! Looks for a pmf whose entropy vector drives a target form negative while
//! satisfying every constraint hyperplane, by multi-restart adaptive
//! coordinate descent on the probability simplex: per-atom up/down moves
//! with renormalization, a shrinking step, and a penalty on constraint
//! violation whose weight doubles whenever the candidate drifts off the
//! constraint surface. Half of the restarts start from random
//! functional distributions (each variable either uniform-independent or a
//! random function of its predecessors), cheap approximations of the
//! extreme points where entropy inequalities go tight; the other half
//! start from Dirichlet noise.
//!
//! Every candidate that survives local convergence is re-evaluated from
//! scratch with compensated summation before it may be accepted; the best
//! qualifying candidate over the whole budget is returned, so fixed seeds
//! give reproducible witnesses.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cone::ConstraintRow;
use crate::linform::LinForm;
use crate::models::pmf::{kahan_sum, random_pmf_with, JointPMF};

/// A candidate must push the objective below this many bits.
pub const OBJECTIVE_THRESHOLD: f64 = -1e-6;
/// ... while meeting every constraint within this tolerance (bits).
pub const CONSTRAINT_TOLERANCE: f64 = 1e-9;

/// Search budget and reproducibility knobs.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Alphabet sizes; `None` means binary for every variable.
    pub alphabets: Option<Vec<usize>>,
    /// Number of independent restarts.
    pub restarts: usize,
    /// Maximum coordinate-descent sweeps per restart.
    pub sweeps: usize,
    pub seed: u64,
    /// Worker threads sharing the restarts. The merge is deterministic
    /// regardless: best objective value, ties to the earliest restart.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            alphabets: None,
            restarts: 48,
            sweeps: 120,
            seed: 1,
            jobs: 1,
        }
    }
}

/// Find a pmf with `b·h(p) < OBJECTIVE_THRESHOLD` and `|q·h(p)|` within
/// tolerance for every constraint. Returns the best qualifying candidate
/// and its objective value, or `None` when the budget is exhausted.
pub fn search_counterexample(
    b: &LinForm,
    constraints: &[ConstraintRow],
    opts: &SearchOptions,
) -> Option<(JointPMF, f64)> {
    let n = b.n();
    if n == 0 {
        return None;
    }
    let alphabets = opts
        .alphabets
        .clone()
        .unwrap_or_else(|| vec![2; n as usize]);
    assert_eq!(
        alphabets.len(),
        n as usize,
        "one alphabet size per variable"
    );
    let q_forms: Vec<&LinForm> = constraints.iter().map(|c| &c.form).collect();

    let jobs = opts.jobs.max(1).min(opts.restarts.max(1));
    let mut candidates: Vec<(usize, JointPMF, f64)> = if jobs <= 1 {
        (0..opts.restarts)
            .filter_map(|r| restart_candidate(b, &q_forms, &alphabets, opts, r))
            .collect()
    } else {
        std::thread::scope(|scope| {
            let workers: Vec<_> = (0..jobs)
                .map(|w| {
                    let q_forms = &q_forms;
                    let alphabets = &alphabets;
                    scope.spawn(move || {
                        (w..opts.restarts)
                            .step_by(jobs)
                            .filter_map(|r| restart_candidate(b, q_forms, alphabets, opts, r))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            workers
                .into_iter()
                .flat_map(|h| h.join().expect("search worker"))
                .collect()
        })
    };
    candidates.sort_by(|a, b| {
        a.2.partial_cmp(&b.2)
            .expect("finite objective values")
            .then(a.0.cmp(&b.0))
    });
    candidates.into_iter().next().map(|(_, pmf, value)| (pmf, value))
}

/// One restart: descend, then re-evaluate the endpoint from scratch and
/// apply the acceptance thresholds.
fn restart_candidate(
    b: &LinForm,
    q_forms: &[&LinForm],
    alphabets: &[usize],
    opts: &SearchOptions,
    restart: usize,
) -> Option<(usize, JointPMF, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(
        opts.seed ^ (restart as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
    );
    let start = if restart.is_multiple_of(2) {
        functional_table(alphabets, &mut rng)
    } else {
        random_pmf_with(alphabets, &mut rng).probs().to_vec()
    };
    let table = descend(b, q_forms, alphabets, start, opts.sweeps, &mut rng);

    let total = kahan_sum(table.iter().copied());
    let normalized: Vec<f64> = table.iter().map(|p| p / total).collect();
    let pmf = JointPMF::new(alphabets.to_vec(), normalized).ok()?;
    let h = pmf.entropy_vector();
    let value = b.evaluate(h.as_slice()).expect("matching dimension");
    let worst_violation = q_forms
        .iter()
        .map(|q| q.evaluate(h.as_slice()).expect("matching dimension").abs())
        .fold(0.0f64, f64::max);
    if value < OBJECTIVE_THRESHOLD && worst_violation < CONSTRAINT_TOLERANCE {
        Some((restart, pmf, value))
    } else {
        None
    }
}

/// Penalized objective `b·h + w·∑|q_j·h|` for an unnormalized table.
fn penalized(b: &LinForm, q_forms: &[&LinForm], pmf: &JointPMF, weight: f64) -> f64 {
    let h = pmf.entropy_vector();
    let mut value = b.evaluate(h.as_slice()).expect("matching dimension");
    for q in q_forms {
        value += weight * q.evaluate(h.as_slice()).expect("matching dimension").abs();
    }
    value
}

fn descend<R: Rng>(
    b: &LinForm,
    q_forms: &[&LinForm],
    alphabets: &[usize],
    mut table: Vec<f64>,
    sweeps: usize,
    rng: &mut R,
) -> Vec<f64> {
    let atoms = table.len();
    let mut weight = 4.0f64;
    let mut step = 0.25f64;

    let eval = |table: &[f64], weight: f64| -> Option<f64> {
        let total = kahan_sum(table.iter().copied());
        if total <= 0.0 {
            return None;
        }
        let normalized: Vec<f64> = table.iter().map(|p| p / total).collect();
        let pmf = JointPMF::new(alphabets.to_vec(), normalized).ok()?;
        Some(penalized(b, q_forms, &pmf, weight))
    };

    let Some(mut current) = eval(&table, weight) else {
        return table;
    };

    for _ in 0..sweeps {
        let mut improved = false;
        for j in 0..atoms {
            let original = table[j];
            let candidates = [
                original + step,
                (original - step).max(0.0),
                original * (1.0 + step),
                original / (1.0 + step),
            ];
            for cand in candidates {
                if cand == original {
                    continue;
                }
                table[j] = cand;
                match eval(&table, weight) {
                    Some(v) if v < current - 1e-15 => {
                        current = v;
                        improved = true;
                        break;
                    }
                    _ => table[j] = original,
                }
            }
        }
        if !improved {
            step *= 0.5;
            if step < 1e-7 {
                break;
            }
            // occasional small kick to escape flat regions
            if rng.gen::<f64>() < 0.25 {
                let j = rng.gen_range(0..atoms);
                table[j] += step;
            }
        }
        // double the penalty while the candidate sits off the constraints
        let total = kahan_sum(table.iter().copied());
        if total > 0.0 {
            let normalized: Vec<f64> = table.iter().map(|p| p / total).collect();
            if let Ok(pmf) = JointPMF::new(alphabets.to_vec(), normalized) {
                let h = pmf.entropy_vector();
                let violated = q_forms.iter().any(|q| {
                    q.evaluate(h.as_slice()).expect("matching dimension").abs()
                        > CONSTRAINT_TOLERANCE
                });
                if violated && weight < 1e9 {
                    weight *= 2.0;
                    current = eval(&table, weight).unwrap_or(current);
                }
            }
        }
    }
    table
}

/// Uniform distribution over the graph of a random functional dependency
/// structure: each variable is either an independent uniform source or a
/// random function of the variables before it.
fn functional_table<R: Rng>(alphabets: &[usize], rng: &mut R) -> Vec<f64> {
    let n = alphabets.len();
    let size: usize = alphabets.iter().product();
    // role[i] = None → source; Some(map) → value determined by predecessors
    let mut maps: Vec<Option<Vec<usize>>> = Vec::with_capacity(n);
    let mut prefix = 1usize;
    for (i, &k) in alphabets.iter().enumerate() {
        let derived = i > 0 && rng.gen::<f64>() < 0.5;
        if derived {
            let map: Vec<usize> = (0..prefix).map(|_| rng.gen_range(0..k)).collect();
            maps.push(Some(map));
        } else {
            maps.push(None);
        }
        prefix *= k;
    }
    let mut table = vec![0.0f64; size];
    let mut weight_total = 0.0f64;
    for (index, slot) in table.iter_mut().enumerate() {
        // decode row-major coordinates
        let mut coords = vec![0usize; n];
        let mut rest = index;
        for v in (0..n).rev() {
            coords[v] = rest % alphabets[v];
            rest /= alphabets[v];
        }
        // an atom is in the support when every derived coordinate matches
        let mut ok = true;
        let mut prefix_key = 0usize;
        for (v, map) in maps.iter().enumerate() {
            if let Some(map) = map {
                if coords[v] != map[prefix_key] {
                    ok = false;
                    break;
                }
            }
            prefix_key = prefix_key * alphabets[v] + coords[v];
        }
        if ok {
            *slot = 1.0;
            weight_total += 1.0;
        }
    }
    if weight_total == 0.0 {
        return vec![1.0 / size as f64; size];
    }
    for p in &mut table {
        *p /= weight_total;
    }
    table
}
