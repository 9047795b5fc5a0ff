//! Concrete inhabitants of the entropic region: entropy vectors of joint
//! distributions, group-characterizable vectors, and counterexample search.

pub mod group;
pub mod pmf;
pub mod search;

pub use group::{verify_group_multiplicative, GroupSpec, MAX_GROUP_ORDER};
pub use pmf::{random_pmf, EntropyVectorReal, JointPMF, ModelError, PMF_SUM_TOLERANCE};
pub use search::{search_counterexample, SearchOptions, CONSTRAINT_TOLERANCE, OBJECTIVE_THRESHOLD};
