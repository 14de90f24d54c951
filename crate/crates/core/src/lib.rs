//! Lower bounds for covering type and minimal triangulations from monomial
//! presentations of cohomology rings.
//!
//! A sequence of cohomology classes with nonzero product, each carrying a
//! category-weight estimate, yields the bound
//! `1 + W + Σ_{k=1..W} max{ |s'| : s' ⊆ s, w(s') ≤ k }` on the strict
//! covering type (any estimator) or the covering type (strict estimators),
//! and hence on the number of vertices of any triangulation.
//!
//! - [`algebra`]: truncated polynomial / exterior presentations over `F_p`.
//! - [`weights`]: weight assignments and weighted factor sequences.
//! - [`estimate`]: the estimate, its table and refinements.
//! - [`search`]: exhaustive maximization over monomial sequences.
//! - [`catalog`]: the space families with known closed forms.
//! - [`oracle`]: brute-force reference evaluation.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod estimate;
pub mod oracle;
pub mod search;
pub mod weights;

pub use algebra::{Generator, Monomial, MonomialAlgebra, Nilpotency};
pub use error::{Error, Result};
pub use estimate::{
    apply_refinements, cat_lower_bound, max_dim_subproduct, nonweighted_ct, wct, BoundTarget,
    Refinements, WctReport,
};
pub use search::{swct_lower, SearchBudget, SearchOutcome};
pub use weights::{FactorSpec, Justification, WeightAssignment, WeightedSequence};
