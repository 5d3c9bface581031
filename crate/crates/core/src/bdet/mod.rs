//! The bigrassmannian determinant
//! `bdet(A) = Σ_w (-1)^{ℓ(w)} q^{β(w)} ∏ a_{i,w(i)}` and the routes to it:
//! the signed sum itself, the classical determinant of the deformation
//! `(q^{(i-j)^2/2} a_ij)`, and weighted condensation over contiguous minors.
//! Also the permanent, and the `λ`- and `λq`-determinant recursions.

mod condense;
mod det;
mod lambda;
mod matrix;
mod random;

pub use condense::{
    bdet_condense, bdet_condense_with_stats, condensation_identity_check, CondensationReport,
    CondenseStats,
};
pub use det::{
    bdet_definition, bdet_definition_with_limit, bdet_via_deformation,
    bdet_via_deformation_with_limit, det_classic, det_classic_with_limit, det_laplace,
    little_invariance_check, permanent_q, permanent_q_with_limit, MAX_INVARIANCE_N, MAX_LEIBNIZ_N,
    MAX_PERMANENT_N,
};
pub use lambda::{lambda_det, lambda_q_det};
pub use matrix::{Deformation, PolyMatrix};
pub use random::{random_monomial_matrix, random_rational_matrix, seeded_rng, DEFAULT_SEED};
