//! Prover and toolkit for universally quantified inequalities built on
//! achievable regions.
//!
//! The centerpiece is a decision procedure for Shannon-type entropy
//! inequalities: a queried inequality `f(h) ≥ 0` holds over the polyhedral
//! cone cut out by the elemental basic inequalities (optionally intersected
//! with linear constraints `Q h = 0`) exactly when `f` is a nonnegative
//! combination of the cone rows. The prover decides this with an exact
//! rational simplex and returns either a checkable combination certificate or
//! an exact separating ray. Around it sit:
//!
//! - a parser for ITIP-style information-measure expressions,
//! - generators for the elemental cone, constraint templates, and the
//!   ZY97/ZY98 non-Shannon rows,
//! - concrete entropy vectors from joint distributions and from finite
//!   groups with designated subgroups, plus a counterexample search,
//! - translations of entropy inequalities into finite-group, principal-minor
//!   (Gaussian), and Kolmogorov-complexity forms,
//! - membership tests and explicit witnesses for three classical achievable
//!   regions: AM-GM pairs, Markov `(Pr{T ≥ c}, E[T])` pairs, and
//!   Cauchy-Schwarz inner-product triples.

pub mod classical;
pub mod cone;
pub mod error;
pub mod linform;
pub mod models;
pub mod parser;
pub mod prover;
pub mod rational;
pub mod translate;
pub mod varset;

pub use error::{ConeError, CoreError};
pub use linform::LinForm;
pub use rational::{frac, parse_rat, rat, Rat};
pub use varset::{VarSet, MAX_VARS};
