//! Three classical achievable regions and their witnesses.
//!
//! Each family pairs a quantity tuple with the set of objects realizing it:
//!
//! - **AM-GM**: `(a, g)` is the (arithmetic, geometric) mean of some list of
//!   nonnegative numbers exactly when `g ≥ 0` and `a ≥ g`; the two-number
//!   list `x, y = a ± √(a² − g²)` realizes every such point.
//! - **Markov**: for fixed `c > 0`, `(p, m) = (Pr{T ≥ c}, E[T])` of some
//!   nonnegative random variable exactly when `0 ≤ p ≤ 1`, `m ≥ cp`, and
//!   the point is not on the excluded segment `{(0, m) : m ≥ c}`; with
//!   `p = 0`, all mass sits below `c`, forcing `m < c`. Witnesses are
//!   two-point distributions `Pr{T=0} = 1−p`, `Pr{T=m/p} = p` (a single
//!   point mass at `m` when `p = 0`).
//! - **Cauchy-Schwarz**: `(x, y, z) = (⟨u,u⟩, ⟨v,v⟩, ⟨u,v⟩)` for vectors in
//!   a real inner product space. For `dim ≥ 2` the region is exactly
//!   `x, y ≥ 0 ∧ z² ≤ xy`; in dimension 1 only the boundary `z² = xy`
//!   is reachable, and in dimension 0 only the origin.
//!
//! Membership tests are exact over the rationals. Witness components are
//! exact whenever the square roots involved are rational, and `f64`
//! otherwise; recomputing the defining quantities from a witness reproduces
//! the queried point within `1e-12` (exactly, in the all-rational case).
//!
//! Affine inequalities over a region are decided exactly against the
//! region's generator representation. Arbitrary nonlinear inequalities are
//! only falsified, by sampling achievable points.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::rational::{sqrt_exact, to_f64, Rat};

/// Round-trip tolerance for witnesses with irrational components.
pub const WITNESS_TOLERANCE: f64 = 1e-12;

/// A falsifier reports a violation only below this margin, so rounding noise
/// on tight boundary samples cannot masquerade as a counterexample.
pub const FALSIFIER_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegionError {
    #[error("the point is outside the region")]
    NotInRegion,

    #[error("the point is not achievable")]
    NotAchievable,

    #[error("invalid parameter: {0}")]
    BadParameter(&'static str),
}

/// An exact scalar when the arithmetic stays rational, `f64` past a square
/// root that does not.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rat),
    Approx(f64),
}

impl Scalar {
    pub fn as_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => to_f64(r),
            Scalar::Approx(v) => *v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a * b),
            _ => Scalar::Approx(self.as_f64() * other.as_f64()),
        }
    }

    fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a + b),
            _ => Scalar::Approx(self.as_f64() + other.as_f64()),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Exact(r) if r.is_integer() => match r.to_integer().to_i64() {
                Some(i) => serde_json::json!(i),
                None => serde_json::json!(to_f64(r)),
            },
            other => serde_json::json!(other.as_f64()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Approx(v) => write!(f, "{v}"),
        }
    }
}

/// Square root with the exact fast path.
fn sqrt_scalar(r: &Rat) -> Result<Scalar, RegionError> {
    if r.is_negative() {
        return Err(RegionError::BadParameter("negative radicand"));
    }
    Ok(match sqrt_exact(r) {
        Some(root) => Scalar::Exact(root),
        None => Scalar::Approx(to_f64(r).sqrt()),
    })
}

// ------------------------------------------------------------------ AM-GM --

/// A candidate (arithmetic mean, geometric mean) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmgmPoint {
    pub a: Rat,
    pub g: Rat,
}

/// `(a, g)` is realizable iff `g ≥ 0` and `a ≥ g`.
pub fn amgm_member(pt: &AmgmPoint) -> bool {
    !pt.g.is_negative() && pt.a >= pt.g
}

/// The two-number list realizing a member point: `x, y = a ± √(a² − g²)`
/// (the `+` branch goes to `x`, so `x ≥ y`). Both components are
/// nonnegative for every member point.
pub fn amgm_witness(pt: &AmgmPoint) -> Result<Witness, RegionError> {
    if !amgm_member(pt) {
        return Err(RegionError::NotInRegion);
    }
    let radicand = &pt.a * &pt.a - &pt.g * &pt.g;
    let root = sqrt_scalar(&radicand)?;
    let a = Scalar::Exact(pt.a.clone());
    let (x, y) = match &root {
        Scalar::Exact(s) => (
            Scalar::Exact(&pt.a + s),
            Scalar::Exact(&pt.a - s),
        ),
        Scalar::Approx(s) => (
            Scalar::Approx(a.as_f64() + s),
            Scalar::Approx(a.as_f64() - s),
        ),
    };
    Ok(Witness::Amgm { x, y })
}

/// Exact validity of `c_a·AM + c_g·GM + c_0 ≥ 0` over the whole region,
/// decided on its generators: apex `(0,0)` and recession rays `(1,1)`,
/// `(1,0)`.
pub fn amgm_linear_valid(c_a: &Rat, c_g: &Rat, c_0: &Rat) -> bool {
    !c_0.is_negative() && !(c_a + c_g).is_negative() && !c_a.is_negative()
}

/// Sample achievable AM-GM pairs hunting for `f(a, g) < 0`; `None` means no
/// violation found within the budget.
pub fn amgm_falsify<F: Fn(f64, f64) -> f64>(
    f: F,
    samples: usize,
    seed: u64,
) -> Option<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = rng.gen::<f64>() * 8.0;
        let y = rng.gen::<f64>() * 8.0;
        let a = (x + y) / 2.0;
        let g = (x * y).sqrt();
        if f(a, g) < -FALSIFIER_MARGIN {
            return Some((a, g));
        }
    }
    None
}

// ----------------------------------------------------------------- Markov --

/// A candidate `(Pr{T ≥ c}, E[T])` pair for the threshold `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovPoint {
    pub c: Rat,
    pub p: Rat,
    pub m: Rat,
}

/// Tri-state membership for the Markov region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkovMembership {
    Achievable,
    /// In the region cut out by Markov's inequality, but on the measure-zero
    /// segment `{(0, m) : m ≥ c}` that no random variable attains.
    ExcludedBoundary,
    Outside,
}

pub fn markov_member(pt: &MarkovPoint) -> Result<MarkovMembership, RegionError> {
    if !pt.c.is_positive() {
        return Err(RegionError::BadParameter("c must be positive"));
    }
    let one = Rat::from_integer(1.into());
    if pt.p.is_negative() || pt.p > one || pt.m < &pt.c * &pt.p {
        return Ok(MarkovMembership::Outside);
    }
    if pt.p.is_zero() && pt.m >= pt.c {
        return Ok(MarkovMembership::ExcludedBoundary);
    }
    Ok(MarkovMembership::Achievable)
}

/// The two-point (or point-mass) distribution realizing an achievable point.
/// Atoms are exact `(value, probability)` pairs with zero-probability atoms
/// dropped.
pub fn markov_witness(pt: &MarkovPoint) -> Result<Witness, RegionError> {
    match markov_member(pt)? {
        MarkovMembership::Achievable => {}
        _ => return Err(RegionError::NotAchievable),
    }
    let one = Rat::from_integer(1.into());
    let mut atoms: Vec<(Rat, Rat)> = Vec::new();
    if pt.p.is_zero() {
        atoms.push((pt.m.clone(), one));
    } else {
        let rest = &one - &pt.p;
        if !rest.is_zero() {
            atoms.push((Rat::zero(), rest));
        }
        atoms.push((&pt.m / &pt.p, pt.p.clone()));
    }
    Ok(Witness::Markov { atoms })
}

/// Outcome of the exact affine validity check over the Markov region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkovValidity {
    /// Nonnegative over the whole region `0 ≤ p ≤ 1, m ≥ cp`.
    pub valid: bool,
    /// Whether the failure is confined to the excluded segment
    /// `{(0, m) : m ≥ c}`. For affine functions this is always false: the
    /// excluded segment lies in the closure of the achievable part, so a
    /// continuous function nonnegative on every achievable point is
    /// nonnegative on the segment too.
    pub failure_only_on_excluded: bool,
}

/// Exact validity of `c_p·p + c_m·m + c_0 ≥ 0` over the region, decided on
/// its generators: vertices `(0,0)` and `(1,c)`, recession ray `(0,1)`.
/// Validity over the region implies validity over the achievable set.
pub fn markov_linear_valid(
    c_p: &Rat,
    c_m: &Rat,
    c_0: &Rat,
    c: &Rat,
) -> Result<MarkovValidity, RegionError> {
    if !c.is_positive() {
        return Err(RegionError::BadParameter("c must be positive"));
    }
    let at_origin = c_0.clone();
    let at_right_vertex = c_p + &(c_m * c) + c_0;
    let valid =
        !at_origin.is_negative() && !at_right_vertex.is_negative() && !c_m.is_negative();
    Ok(MarkovValidity {
        valid,
        failure_only_on_excluded: false,
    })
}

/// Sample achievable `(Pr{T ≥ c}, E[T])` pairs from random one- and
/// two-point distributions, hunting for `f(p, m) < 0`.
pub fn markov_falsify<F: Fn(f64, f64) -> f64>(
    f: F,
    c: f64,
    samples: usize,
    seed: u64,
) -> Option<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (p_hit, m) = if rng.gen::<bool>() {
            // point mass at v
            let v = rng.gen::<f64>() * 3.0 * c;
            (if v >= c { 1.0 } else { 0.0 }, v)
        } else {
            // {0 with 1−p, v with p}
            let p = rng.gen::<f64>();
            let v = rng.gen::<f64>() * 3.0 * c;
            (if v >= c { p } else { 0.0 }, p * v)
        };
        if f(p_hit, m) < -FALSIFIER_MARGIN {
            return Some((p_hit, m));
        }
    }
    None
}

// ---------------------------------------------------------- Cauchy-Schwarz --

/// A candidate `(⟨u,u⟩, ⟨v,v⟩, ⟨u,v⟩)` triple in a space of dimension `dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsPoint {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
    pub dim: u32,
}

/// Membership is dimension-dependent: `z² ≤ xy` for `dim ≥ 2`, the boundary
/// `z² = xy` for `dim = 1`, only the origin for `dim = 0`. Exact.
pub fn cs_member(pt: &CsPoint) -> bool {
    let zz = &pt.z * &pt.z;
    let xy = &pt.x * &pt.y;
    match pt.dim {
        0 => pt.x.is_zero() && pt.y.is_zero() && pt.z.is_zero(),
        1 => !pt.x.is_negative() && !pt.y.is_negative() && zz == xy,
        _ => !pt.x.is_negative() && !pt.y.is_negative() && zz <= xy,
    }
}

/// Vectors `u, v` of length `dim` realizing a member point:
/// `u = √x·e₁` and `v = (z/x)·u + √(y − z²/x)·e₂` in the generic case,
/// with the degenerate `x = 0` / `y = 0` cases using the zero vector and
/// the dimension-1 case a scalar multiple `v = ±√(y/x)·u`.
pub fn cs_witness(pt: &CsPoint) -> Result<Witness, RegionError> {
    if !cs_member(pt) {
        return Err(RegionError::NotAchievable);
    }
    let dim = pt.dim as usize;
    let zero = || Scalar::Exact(Rat::zero());
    let mut u: Vec<Scalar> = (0..dim).map(|_| zero()).collect();
    let mut v: Vec<Scalar> = (0..dim).map(|_| zero()).collect();
    if dim == 0 {
        // only the origin is a member; the empty vectors realize it
        return Ok(Witness::Cs { u, v });
    }
    if pt.x.is_zero() {
        // membership forces z = 0
        v[0] = sqrt_scalar(&pt.y)?;
        return Ok(Witness::Cs { u, v });
    }
    if pt.y.is_zero() {
        u[0] = sqrt_scalar(&pt.x)?;
        return Ok(Witness::Cs { u, v });
    }
    let root_x = sqrt_scalar(&pt.x)?;
    u[0] = root_x.clone();
    if dim == 1 {
        // z² = xy and x, y > 0: v = sign(z)·√y·e₁
        let root_y = sqrt_scalar(&pt.y)?;
        v[0] = if pt.z.is_negative() {
            root_y.mul(&Scalar::Exact(-Rat::from_integer(1.into())))
        } else {
            root_y
        };
        return Ok(Witness::Cs { u, v });
    }
    // dim ≥ 2: first coordinate z/√x, second √(y − z²/x)
    v[0] = match &root_x {
        Scalar::Exact(s) => Scalar::Exact(&pt.z / s),
        Scalar::Approx(s) => Scalar::Approx(to_f64(&pt.z) / s),
    };
    let radicand = &pt.y - &(&(&pt.z * &pt.z) / &pt.x);
    v[1] = sqrt_scalar(&radicand)?;
    Ok(Witness::Cs { u, v })
}

/// Sample achievable inner-product triples (Gram data of random plane
/// vectors, plus collinear pairs for the boundary), hunting for
/// `f(x, y, z) < 0`.
pub fn cs_falsify<F: Fn(f64, f64, f64) -> f64>(
    f: F,
    samples: usize,
    seed: u64,
) -> Option<(f64, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let u = [rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 4.0 - 2.0];
        let v = if rng.gen::<f64>() < 0.25 {
            let t = rng.gen::<f64>() * 4.0 - 2.0;
            [t * u[0], t * u[1]]
        } else {
            [rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 4.0 - 2.0]
        };
        let x = u[0] * u[0] + u[1] * u[1];
        let y = v[0] * v[0] + v[1] * v[1];
        let z = u[0] * v[0] + u[1] * v[1];
        if f(x, y, z) < -FALSIFIER_MARGIN {
            return Some((x, y, z));
        }
    }
    None
}

// ---------------------------------------------------------------- Witness --

/// Achievability witness for one of the three families.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// The list of two nonnegative numbers.
    Amgm { x: Scalar, y: Scalar },
    /// Atoms of the distribution as `(value, probability)` pairs.
    Markov { atoms: Vec<(Rat, Rat)> },
    /// The two coordinate vectors.
    Cs { u: Vec<Scalar>, v: Vec<Scalar> },
}

impl Witness {
    /// Recompute the quantities the witness is supposed to realize:
    /// `(AM, GM)`, `(Pr{T ≥ c}, E[T])` (needs `c`), or `(x, y, z)`.
    pub fn amgm_recompute(&self) -> Option<(Scalar, Scalar)> {
        let Witness::Amgm { x, y } = self else {
            return None;
        };
        let two = Scalar::Exact(Rat::from_integer(2.into()));
        let sum = x.add(y);
        let am = match (&sum, &two) {
            (Scalar::Exact(s), Scalar::Exact(t)) => Scalar::Exact(s / t),
            _ => Scalar::Approx(sum.as_f64() / 2.0),
        };
        let gm = match x.mul(y) {
            Scalar::Exact(p) => match sqrt_exact(&p) {
                Some(root) => Scalar::Exact(root),
                None => Scalar::Approx(to_f64(&p).sqrt()),
            },
            Scalar::Approx(p) => Scalar::Approx(p.sqrt()),
        };
        Some((am, gm))
    }

    pub fn markov_recompute(&self, c: &Rat) -> Option<(Rat, Rat)> {
        let Witness::Markov { atoms } = self else {
            return None;
        };
        let mut p_hit = Rat::zero();
        let mut mean = Rat::zero();
        for (value, prob) in atoms {
            if value >= c {
                p_hit += prob;
            }
            mean += value * prob;
        }
        Some((p_hit, mean))
    }

    pub fn cs_recompute(&self) -> Option<(Scalar, Scalar, Scalar)> {
        let Witness::Cs { u, v } = self else {
            return None;
        };
        Some((dot(u, u), dot(v, v), dot(u, v)))
    }

    /// Witness serialization: `{"x":…,"y":…}`, `{"atoms":[[v,p],…]}`, or
    /// `{"u":[…],"v":[…]}`; exact integers render as JSON integers.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Witness::Amgm { x, y } => serde_json::json!({
                "x": x.to_json(),
                "y": y.to_json(),
            }),
            Witness::Markov { atoms } => {
                let pairs: Vec<serde_json::Value> = atoms
                    .iter()
                    .map(|(v, p)| {
                        serde_json::json!([
                            Scalar::Exact(v.clone()).to_json(),
                            Scalar::Exact(p.clone()).to_json()
                        ])
                    })
                    .collect();
                serde_json::json!({ "atoms": pairs })
            }
            Witness::Cs { u, v } => {
                let us: Vec<serde_json::Value> = u.iter().map(Scalar::to_json).collect();
                let vs: Vec<serde_json::Value> = v.iter().map(Scalar::to_json).collect();
                serde_json::json!({ "u": us, "v": vs })
            }
        }
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::Exact(Rat::zero());
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&x.mul(y));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn amgm(a: i64, g: i64) -> AmgmPoint {
        AmgmPoint {
            a: rat(a),
            g: rat(g),
        }
    }

    #[test]
    fn amgm_membership() {
        assert!(amgm_member(&amgm(5, 4)));
        assert!(!amgm_member(&amgm(1, 2)));
        assert!(amgm_member(&amgm(0, 0)));
        assert!(!amgm_member(&AmgmPoint {
            a: rat(1),
            g: rat(-1)
        }));
    }

    #[test]
    fn amgm_witness_example() {
        let w = amgm_witness(&amgm(5, 4)).unwrap();
        let Witness::Amgm { x, y } = &w else {
            panic!()
        };
        assert_eq!(*x, Scalar::Exact(rat(8)));
        assert_eq!(*y, Scalar::Exact(rat(2)));
        let (am, gm) = w.amgm_recompute().unwrap();
        assert_eq!(am, Scalar::Exact(rat(5)));
        assert_eq!(gm, Scalar::Exact(rat(4)));

        let w = amgm_witness(&amgm(2, 2)).unwrap();
        let Witness::Amgm { x, y } = &w else {
            panic!()
        };
        assert_eq!(*x, Scalar::Exact(rat(2)));
        assert_eq!(*y, Scalar::Exact(rat(2)));

        assert_eq!(amgm_witness(&amgm(1, 2)), Err(RegionError::NotInRegion));
    }

    #[test]
    fn amgm_witness_irrational_path() {
        // a=2, g=1: x,y = 2 ± √3
        let w = amgm_witness(&amgm(2, 1)).unwrap();
        let Witness::Amgm { x, y } = &w else {
            panic!()
        };
        assert!(!x.is_exact() && !y.is_exact());
        let (am, gm) = w.amgm_recompute().unwrap();
        assert!((am.as_f64() - 2.0).abs() < WITNESS_TOLERANCE);
        assert!((gm.as_f64() - 1.0).abs() < WITNESS_TOLERANCE);
        assert!(y.as_f64() >= 0.0);
    }

    #[test]
    fn amgm_linear_validity() {
        // 2AM − GM ≥ 0
        assert!(amgm_linear_valid(&rat(2), &rat(-1), &rat(0)));
        // AM − GM ≥ 0
        assert!(amgm_linear_valid(&rat(1), &rat(-1), &rat(0)));
        // GM − AM ≥ 0 fails along the ray (1,0)
        assert!(!amgm_linear_valid(&rat(-1), &rat(1), &rat(0)));
        // constants must be nonnegative at the apex
        assert!(!amgm_linear_valid(&rat(1), &rat(0), &rat(-1)));
    }

    #[test]
    fn amgm_falsifier_finds_what_validity_rejects() {
        assert!(amgm_falsify(|a, g| a - g, 10_000, 3).is_none());
        let hit = amgm_falsify(|a, g| g - a, 10_000, 3);
        assert!(hit.is_some());
    }

    fn markov(c: (i64, i64), p: (i64, i64), m: (i64, i64)) -> MarkovPoint {
        MarkovPoint {
            c: frac(c.0, c.1),
            p: frac(p.0, p.1),
            m: frac(m.0, m.1),
        }
    }

    #[test]
    fn markov_membership_tristate() {
        let pt = markov((1, 1), (1, 2), (1, 1));
        assert_eq!(markov_member(&pt).unwrap(), MarkovMembership::Achievable);
        let pt = markov((1, 1), (0, 1), (3, 2));
        assert_eq!(
            markov_member(&pt).unwrap(),
            MarkovMembership::ExcludedBoundary
        );
        let pt = markov((1, 1), (2, 1), (1, 1));
        assert_eq!(markov_member(&pt).unwrap(), MarkovMembership::Outside);
        let pt = markov((1, 1), (1, 2), (1, 4));
        assert_eq!(markov_member(&pt).unwrap(), MarkovMembership::Outside);
        assert!(markov_member(&markov((0, 1), (1, 2), (1, 1))).is_err());
    }

    #[test]
    fn markov_witness_examples() {
        let w = markov_witness(&markov((1, 1), (1, 2), (1, 1))).unwrap();
        let Witness::Markov { atoms } = &w else {
            panic!()
        };
        assert_eq!(
            atoms,
            &vec![(rat(0), frac(1, 2)), (rat(2), frac(1, 2))]
        );
        let (p, m) = w.markov_recompute(&rat(1)).unwrap();
        assert_eq!(p, frac(1, 2));
        assert_eq!(m, rat(1));

        // point-mass case below the threshold
        let w = markov_witness(&markov((1, 1), (0, 1), (1, 2))).unwrap();
        let Witness::Markov { atoms } = &w else {
            panic!()
        };
        assert_eq!(atoms, &vec![(frac(1, 2), rat(1))]);

        assert_eq!(
            markov_witness(&markov((1, 1), (0, 1), (3, 2))),
            Err(RegionError::NotAchievable)
        );
    }

    #[test]
    fn markov_equality_case_puts_the_atom_at_c() {
        // m = cp with p > 0: the nonzero atom lands exactly on c
        let w = markov_witness(&markov((3, 2), (1, 3), (1, 2))).unwrap();
        let Witness::Markov { atoms } = &w else {
            panic!()
        };
        assert_eq!(atoms.last().unwrap().0, frac(3, 2));
    }

    #[test]
    fn markov_affine_validity() {
        let c = rat(1);
        // m − cp ≥ 0
        let v = markov_linear_valid(&-c.clone(), &rat(1), &rat(0), &c).unwrap();
        assert!(v.valid && !v.failure_only_on_excluded);
        // p ≥ 0 and 1 − p ≥ 0
        assert!(markov_linear_valid(&rat(1), &rat(0), &rat(0), &c).unwrap().valid);
        assert!(markov_linear_valid(&rat(-1), &rat(0), &rat(1), &c).unwrap().valid);
        // p − 1 ≥ 0 fails at the origin
        let v = markov_linear_valid(&rat(1), &rat(0), &rat(-1), &c).unwrap();
        assert!(!v.valid && !v.failure_only_on_excluded);
        // c − m fails on the excluded segment AND at achievable points
        let v = markov_linear_valid(&rat(0), &rat(-1), &c, &c).unwrap();
        assert!(!v.valid && !v.failure_only_on_excluded);
        assert!(markov_linear_valid(&rat(1), &rat(0), &rat(0), &rat(0)).is_err());
    }

    #[test]
    fn markov_falsifier_respects_validity() {
        assert!(markov_falsify(|p, m| m - p, 1.0, 10_000, 9).is_none()); // m ≥ cp, c = 1
        assert!(markov_falsify(|p, _| -p + 1.0, 1.0, 10_000, 9).is_none()); // p ≤ 1
        assert!(markov_falsify(|p, _| p - 1.0, 1.0, 10_000, 9).is_some()); // p ≥ 1 is false
    }

    fn cs(x: i64, y: i64, z: (i64, i64), dim: u32) -> CsPoint {
        CsPoint {
            x: rat(x),
            y: rat(y),
            z: frac(z.0, z.1),
            dim,
        }
    }

    #[test]
    fn cs_membership_depends_on_dimension() {
        assert!(cs_member(&cs(1, 1, (1, 2), 2)));
        assert!(!cs_member(&cs(1, 1, (1, 2), 1)));
        assert!(cs_member(&cs(1, 1, (1, 1), 1)));
        assert!(cs_member(&cs(0, 0, (0, 1), 0)));
        assert!(!cs_member(&cs(1, 1, (0, 1), 0)));
        assert!(!cs_member(&cs(-1, 1, (0, 1), 2)));
        assert!(!cs_member(&cs(1, 1, (2, 1), 2)));
        assert!(cs_member(&cs(1, 1, (-1, 1), 1)));
    }

    #[test]
    fn cs_witness_generic_case() {
        let w = cs_witness(&cs(1, 1, (1, 2), 2)).unwrap();
        let Witness::Cs { u, v } = &w else {
            panic!()
        };
        assert_eq!(u[0], Scalar::Exact(rat(1)));
        assert_eq!(u[1], Scalar::Exact(rat(0)));
        assert_eq!(v[0], Scalar::Exact(frac(1, 2)));
        assert!((v[1].as_f64() - 0.75f64.sqrt()).abs() < WITNESS_TOLERANCE);
        let (x, y, z) = w.cs_recompute().unwrap();
        assert!((x.as_f64() - 1.0).abs() < WITNESS_TOLERANCE);
        assert!((y.as_f64() - 1.0).abs() < WITNESS_TOLERANCE);
        assert!((z.as_f64() - 0.5).abs() < WITNESS_TOLERANCE);
    }

    #[test]
    fn cs_witness_boundary_and_degenerate_cases() {
        // dim 1 on the boundary
        let w = cs_witness(&cs(1, 1, (1, 1), 1)).unwrap();
        let Witness::Cs { u, v } = &w else {
            panic!()
        };
        assert_eq!(u, &vec![Scalar::Exact(rat(1))]);
        assert_eq!(v, &vec![Scalar::Exact(rat(1))]);

        // negative z in dimension 1
        let w = cs_witness(&cs(4, 1, (-2, 1), 1)).unwrap();
        let (x, y, z) = w.cs_recompute().unwrap();
        assert_eq!(x, Scalar::Exact(rat(4)));
        assert_eq!(y, Scalar::Exact(rat(1)));
        assert_eq!(z, Scalar::Exact(rat(-2)));

        // x = 0 forces u = 0
        let w = cs_witness(&cs(0, 4, (0, 1), 2)).unwrap();
        let Witness::Cs { u, v } = &w else {
            panic!()
        };
        assert_eq!(u, &vec![Scalar::Exact(rat(0)), Scalar::Exact(rat(0))]);
        assert_eq!(v, &vec![Scalar::Exact(rat(2)), Scalar::Exact(rat(0))]);

        // dim 0 origin: empty vectors
        let w = cs_witness(&cs(0, 0, (0, 1), 0)).unwrap();
        let Witness::Cs { u, v } = &w else {
            panic!()
        };
        assert!(u.is_empty() && v.is_empty());

        assert_eq!(
            cs_witness(&cs(1, 1, (1, 2), 1)),
            Err(RegionError::NotAchievable)
        );
    }

    #[test]
    fn cs_equality_forces_linear_dependence() {
        // z² = xy: the 2-d witness vectors must be collinear
        let w = cs_witness(&CsPoint {
            x: rat(4),
            y: rat(9),
            z: rat(-6),
            dim: 2,
        })
        .unwrap();
        let Witness::Cs { u, v } = &w else {
            panic!()
        };
        let cross = u[0].as_f64() * v[1].as_f64() - u[1].as_f64() * v[0].as_f64();
        assert!(cross.abs() < WITNESS_TOLERANCE);
    }

    #[test]
    fn cs_dim1_members_are_dim2_members() {
        let pts = [
            cs(1, 1, (1, 1), 1),
            cs(4, 9, (6, 1), 1),
            cs(0, 5, (0, 1), 1),
        ];
        for p in pts {
            assert!(cs_member(&p));
            let wider = CsPoint { dim: 2, ..p };
            assert!(cs_member(&wider));
        }
    }

    #[test]
    fn cs_falsifier_confirms_cauchy_schwarz() {
        assert!(cs_falsify(|x, y, z| x * y - z * z, 10_000, 21).is_none());
        assert!(cs_falsify(|x, _, _| x, 10_000, 21).is_none());
        // z ≥ 0 is not a valid inequality
        assert!(cs_falsify(|_, _, z| z, 10_000, 21).is_some());
    }

    #[test]
    fn witness_json_shapes() {
        let w = amgm_witness(&amgm(5, 4)).unwrap();
        assert_eq!(w.to_json().to_string(), r#"{"x":8,"y":2}"#);

        let w = markov_witness(&markov((1, 1), (1, 2), (1, 1))).unwrap();
        assert_eq!(w.to_json().to_string(), r#"{"atoms":[[0,0.5],[2,0.5]]}"#);

        let w = cs_witness(&cs(1, 4, (0, 1), 2)).unwrap();
        assert_eq!(w.to_json().to_string(), r#"{"u":[1,0],"v":[0,2]}"#);
    }
}
