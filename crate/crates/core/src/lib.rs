//! Dense complex matrices, Moore-Penrose inverses, and verifiers for the
//! pseudoinverse laws obeyed by doubly commuting operator tuples.
//!
//! The crate is organized bottom-up:
//!
//! * [`matrix`] — row-major dense complex matrices with arithmetic, adjoint,
//!   Frobenius norm, and tolerance-aware structural predicates.
//! * [`svd`] — one-sided Jacobi singular value decomposition and numerical
//!   rank, the computational stand-in for "closed range".
//! * [`pinv`] — the Moore-Penrose inverse through SVD truncation, plus
//!   verifiers for the four Penrose equations and the involution identities
//!   `(A*)† = (A†)*` and `(A†)† = A`.
//! * [`commute`] — commutators, doubly-commuting predicates for pairs and
//!   tuples, and tuple transforms (permutation, adjoint, dagger marks).
//! * [`laws`] — the reverse-order law for products of doubly commuting
//!   tuples, the converse classification from pseudoinverse equalities of
//!   swapped products, and the power laws for commuting normal elements.
//! * [`gen`] — seeded, deterministic generators of structured instances
//!   (unitaries, fixed-rank matrices, tensor embeddings, commuting normals).
//!
//! Every value is immutable after construction and every operation is a pure
//! function of its inputs, so values can be shared or moved across threads
//! freely. There is no global state.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the `std` feature
//! (default) only adds `std::error::Error` impls and routes float math
//! through the platform intrinsics instead of `libm`.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod commute;
pub mod error;
pub mod gen;
pub mod laws;
pub mod matrix;
pub mod pinv;
pub mod report;
pub mod svd;

pub use num_complex::Complex64;

pub use commute::{
    commutator, dagger_tuple_equivalence, is_doubly_commuting_pair, is_doubly_commuting_tuple,
    resolve_tuple, Mark, TupleSpec,
};
pub use error::{Error, Result};
pub use laws::{
    classify_tuple, commuting_normals_power_law, normal_power_law, product_identity_family,
    reverse_order_law, transformed_power_law, PowerSpec,
};
pub use matrix::{ComplexMatrix, ToleranceConfig};
pub use pinv::{
    moore_penrose, pinv_adjoint_identity, pinv_involution_identity, verify_penrose, PenroseReport,
};
pub use report::{Check, ClassificationResult, DaggerEquivalence, TupleVerdict, VerdictReport};
pub use svd::{numerical_rank, svd, SvdFactors};
