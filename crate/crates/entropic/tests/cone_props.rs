//! Cone-level properties: the elemental reduction carries the full basic
//! family, and the basic family is exactly the polymatroid condition.

mod common;

use entropic::cone;
use entropic::models::random_pmf;
use entropic::prover::{verify, Problem, Verdict, VerifyOptions};
use entropic::rational::{frac, rat, Rat};
use entropic::varset::VarSet;

use common::{basic_inequalities, is_polymatroid, satisfies_basic, to_exact};

/// Every basic inequality up to n = 4 is a nonnegative combination of the
/// elemental rows, certified by the exact prover.
#[test]
fn elemental_rows_imply_every_basic_inequality() {
    for n in 1..=4u8 {
        for b in basic_inequalities(n) {
            let problem =
                Problem::shannon(b.clone(), vec![], VerifyOptions::default()).unwrap();
            match verify(&problem).unwrap() {
                Verdict::Proved { certificate } => {
                    assert!(entropic::prover::check_certificate(
                        &b,
                        &certificate,
                        &problem.cone_rows,
                        &problem.constraints
                    ));
                }
                other => panic!("basic inequality {b} not certified: {other:?}"),
            }
        }
    }
}

/// Conversely every elemental row is itself basic, so the two families cut
/// out the same cone.
#[test]
fn elemental_rows_are_basic_inequalities() {
    for n in 1..=4u8 {
        let basics = basic_inequalities(n);
        for row in cone::elemental(n).unwrap() {
            assert!(
                basics.contains(&row.form),
                "elemental row {row} missing from the basic enumeration"
            );
        }
    }
}

/// On 10^4 exact random vectors of H_3, "satisfies all basic inequalities"
/// and "is a polymatroid (monotone + submodular, H(∅) = 0)" agree with no
/// exceptions. Half the samples are integer-grid noise, half are perturbed
/// entropy vectors so both predicate outcomes occur.
#[test]
fn basic_inequalities_equal_polymatroid_axioms() {
    let n = 3u8;
    let dim = (1usize << n) - 1;
    let mut agree_true = 0usize;
    let mut agree_false = 0usize;

    let mut state = 0x2545F4914F6CDD1Du64;
    let mut next = move || {
        // xorshift64*; deterministic sample stream without pulling in rand
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        state.wrapping_mul(0x2545F4914F6CDD1D)
    };

    for trial in 0..10_000usize {
        let h: Vec<Rat> = if trial % 2 == 0 {
            (0..dim)
                .map(|_| {
                    let v = (next() % 2_000_001) as i64 - 1_000_000;
                    frac(v, 500_000)
                })
                .collect()
        } else {
            let pmf = random_pmf(&[2, 2, 2], next());
            let exact = to_exact(pmf.entropy_vector().as_slice());
            exact
                .into_iter()
                .map(|v| {
                    let noise = (next() % 2_001) as i64 - 1_000;
                    v + frac(noise, 1 << 14)
                })
                .collect()
        };
        let by_basic = satisfies_basic(n, &h);
        let by_polymatroid = is_polymatroid(n, &h);
        assert_eq!(by_basic, by_polymatroid, "disagreement on {h:?}");
        if by_basic {
            agree_true += 1;
        } else {
            agree_false += 1;
        }
    }
    // both branches must actually be exercised
    assert!(agree_true > 100, "only {agree_true} polymatroid samples");
    assert!(agree_false > 100, "only {agree_false} non-polymatroid samples");
}

/// Mutual independence as the single-row constraint is interchangeable with
/// the equivalent triangular CI system: each side's rows are certified as
/// combinations of the other side's rows paired with the cone.
#[test]
fn mutual_independence_row_is_equivalent_to_the_ci_system() {
    let n = 3u8;
    let v = |i: u8| VarSet::singleton(i).unwrap();
    let single = cone::constraint_mutual_independence(n, &[1, 2, 3]).unwrap();
    let system = vec![
        cone::constraint_ci(n, v(1), v(2), VarSet::EMPTY).unwrap(),
        cone::constraint_ci(n, v(2), v(3), v(1)).unwrap(),
        cone::constraint_ci(n, v(1), v(3), v(2)).unwrap(),
    ];

    // single row vanishes on the face cut by the system, and vice versa;
    // f = 0 on the face ⟺ both f and −f are provable there
    for target in [single.form.clone(), -&single.form] {
        let problem = Problem::shannon(target, system.clone(), VerifyOptions::default()).unwrap();
        assert!(
            matches!(verify(&problem).unwrap(), Verdict::Proved { .. }),
            "independence row not implied by the CI system"
        );
    }
    for row in &system {
        for target in [row.form.clone(), -&row.form] {
            let problem =
                Problem::shannon(target, vec![single.clone()], VerifyOptions::default()).unwrap();
            assert!(
                matches!(verify(&problem).unwrap(), Verdict::Proved { .. }),
                "CI row {row} not implied by the independence row"
            );
        }
    }
}

/// Proved certificates are sound against sampled members of the entropic
/// region: the certified forms stay nonnegative on 10^3 random entropy
/// vectors within 1e−9 bits.
#[test]
fn certified_inequalities_hold_on_random_entropy_vectors() {
    let n = 3u8;
    let certified: Vec<_> = basic_inequalities(n)
        .into_iter()
        .filter(|b| {
            let problem = Problem::shannon(b.clone(), vec![], VerifyOptions::default()).unwrap();
            matches!(verify(&problem).unwrap(), Verdict::Proved { .. })
        })
        .collect();
    assert!(!certified.is_empty());
    for seed in 0..1_000u64 {
        let pmf = random_pmf(&[2, 3, 2], seed);
        let h = pmf.entropy_vector();
        for b in &certified {
            let value = b.evaluate(h.as_slice()).unwrap();
            assert!(value >= -1e-9, "{b} = {value} on seed {seed}");
        }
    }
}

/// The ZY98 instance count follows the generate-and-dedupe oracle at n = 5:
/// 120 ordered assignments collapse pairwise under the role-3/4 symmetry.
#[test]
fn zy98_instances_collapse_exactly_two_to_one() {
    let rows = cone::zy98_rows(5).unwrap();
    assert_eq!(rows.len(), 60);
    let mut seen = std::collections::BTreeSet::new();
    for r1 in 1..=5u8 {
        for r2 in 1..=5u8 {
            for r3 in 1..=5u8 {
                for r4 in 1..=5u8 {
                    let roles = [r1, r2, r3, r4];
                    if roles.iter().collect::<std::collections::BTreeSet<_>>().len() == 4 {
                        seen.insert(cone::zy98_form(5, roles).unwrap().to_string());
                    }
                }
            }
        }
    }
    assert_eq!(seen.len(), 60);
}

/// Scaling a provable objective by a positive rational scales its
/// certificate; the prover stays exact throughout.
#[test]
fn certificates_scale_exactly() {
    let b = entropic::linform::LinForm::mutual(
        2,
        VarSet::singleton(1).unwrap(),
        VarSet::singleton(2).unwrap(),
        VarSet::EMPTY,
    )
    .unwrap();
    let scaled = b.scaled(&frac(7, 3));
    let problem = Problem::shannon(scaled, vec![], VerifyOptions::default()).unwrap();
    let Verdict::Proved { certificate } = verify(&problem).unwrap() else {
        panic!("expected Proved");
    };
    assert_eq!(certificate.lambda, vec![(2, frac(7, 3))]);
    assert_eq!(rat(7) / rat(3), frac(7, 3));
}
