//! Chain complexes of free graded F2[U]-modules.
//!
//! Everything downstream (involutive structures, surgery cones, hyperboxes)
//! is built from four primitives provided here:
//!
//! * [`ucomplex`]: complexes, graded module maps, linear homotopy search;
//! * [`reduce`]: cancellation down to a model with no exponent-0 arrows,
//!   with the full homotopy-equivalence package (pi, sigma, tau);
//! * [`homology`]: per-grading homology over F2[U], as both a truncated
//!   (finite coefficient) computation and an exact persistence sweep, plus
//!   correction-term searches on the involutive mapping cone;
//! * [`hinverse`]: homotopy inverses of chain homotopy equivalences.

pub mod hinverse;
pub mod homology;
pub mod reduce;
pub mod ucomplex;

pub use hinverse::{exact_inverse, homotopy_inverse};
pub use homology::{
    build_ci, class_death_time, d_invariant, d_invariant_exact, d_invariant_trunc, d_lower_upper,
    d_lower_upper_exact, d_lower_upper_trunc, default_delta, homology_report,
    homology_report_exact, homology_report_trunc, max_torsion_order_exact,
    max_torsion_order_trunc, Strata,
};
pub use reduce::{reduce, transport_homotopy_problem, Reduction};
pub use ucomplex::{
    diff_map, find_homotopy, find_homotopy_filtered, identity_map, legal_pairs, pair_name, tensor,
    tensor_with_index, GradedMap, UComplex,
};
