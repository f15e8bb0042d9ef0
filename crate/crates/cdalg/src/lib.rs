//! Exact and numeric computation in Cayley-Dickson algebras.
//!
//! The crate builds algebras of any doubling depth (quaternions, octonions,
//! sedenions, ...), with arbitrary-precision rational scalars by default and
//! `f64` scalars for numeric root finding. On top of the arithmetic sit
//! one-sided polynomials with a central indeterminate, companion-polynomial
//! root finding and factorization over the quaternions/octonions, and left
//! eigenvalue computation for 2x2 octonion matrices, all cross-checked
//! against real-representation linear algebra.

pub mod algebra;
pub mod eigen;
pub mod error;
pub mod identities;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod repro;
pub mod roots;
pub mod scalar;

pub use algebra::{sedenion_alpha_beta, solve_left, Algebra, Element};
pub use eigen::{
    assoc_eig2x2, eig_exists, eig_from_t, invert_h_matrix, lmr_member, shift_eigenpair,
    spectrum_from_lmr, spectrum_oracle, triangular_spectrum, verify_eigenpair, zero_in_spectrum,
    EigenPair, Matrix2,
};
pub use error::{CdError, Result};
pub use identities::identity_report;
pub use poly::{CdPoly, ScalarPoly};
pub use roots::{
    all_roots, classify_sphere, factorize, hull_distance, real_roots_complex, Factorization,
    SphereClass, SphereKind,
};
pub use scalar::{Scalar, ScalarMode};
