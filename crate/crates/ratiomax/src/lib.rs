//! Multiple-ratio fractional 0-1 programs over subsets: certification
//! of submodularity and monotonicity, greedy and exact solvers, and
//! reductions from assortment optimization and p-choice facility
//! location.
//!
//! The objective is a sum of hyperbolic terms
//!
//! ```text
//! max_{S in F}  sum_k (sum_{i in S} a_ki) / (b_k0 + sum_{i in S} b_ki)
//! ```
//!
//! over a downward-closed family `F` (unconstrained, cardinality or
//! knapsack). Each term can be certified submodular, or monotone
//! nondecreasing and hence submodular, through exact polynomial tests
//! and exhaustive scans; certified instances carry approximation
//! guarantees for the greedy solver.
//!
//! # Example
//!
//! ```
//! use ratiomax::{
//!     brute_force_maximize, certify_instance, greedy_maximize, FeasibleRegion,
//!     MultiRatioInstance, Ratio, Verdict, DEFAULT_TOLERANCE,
//! };
//!
//! let ratio = Ratio::new(vec![3.0, 2.0, 1.0], 2.0, vec![1.0, 1.0, 1.0]).unwrap();
//! let inst = MultiRatioInstance::new(vec![ratio], FeasibleRegion::Unconstrained).unwrap();
//!
//! let cert = certify_instance(&inst, DEFAULT_TOLERANCE);
//! assert_eq!(cert.aggregate.verdict, Verdict::Submodular);
//!
//! let trace = greedy_maximize(&inst);
//! let exact = brute_force_maximize(&inst).unwrap();
//! assert_eq!(trace.recommended().1, exact.value);
//! ```

pub mod assortment;
pub mod certify;
pub mod error;
pub mod facility;
pub mod ratio;
pub mod region;
pub mod solve;
pub mod subset;

pub use assortment::{ConditionCheck, MmnlInstance, Segment};
pub use certify::{
    certify_instance, certify_ratio, check_homogeneous_obstruction, check_monotone_definition,
    check_monotone_sufficient, check_monotone_unconstrained, check_near_monotone_structure,
    check_ratio_submodular, check_submodular_definition, CertificationReport,
    InstanceCertification, Method, MonotonicityScan, Verdict, Witness, DEFAULT_TOLERANCE,
    SCAN_LIMIT,
};
pub use error::{Error, Result};
pub use facility::{PChoiceInstance, PChoiceSolution, DEFAULT_DELTA};
pub use ratio::{MultiRatioInstance, Ratio, RatioAccumulator};
pub use region::{FeasibleRegion, FeasibleSets, ENUMERATION_LIMIT};
pub use solve::{
    brute_force_maximize, greedy_maximize, guarantee_for, lazy_greedy_maximize, single_ratio_max,
    single_ratio_max_with_trace, GreedyStep, GreedyTrace, Guarantee, SolveResult,
};
pub use subset::{Subset, SubsetIter, MAX_GROUND_SET};
