//! Exact-arithmetic toolkit for pre-Lie algebras, s-matrices and phase spaces.
//!
//! Everything here computes over arbitrary-precision rationals; there is no
//! floating point anywhere. The crate is organised around the objects it
//! verifies:
//!
//! - [`exactla`] — rationals, dense matrices (rank / nullspace / solve),
//!   wedge-power index bookkeeping and polynomials in a formal parameter.
//! - [`prelie`] — pre-Lie and Lie algebras given by structure constants,
//!   their representations and the pre-Lie cohomology coboundary.
//! - [`rotabaxter`] — the graded Lie algebra controlling relative Rota-Baxter
//!   operators, operator verification and the associated coboundary.
//! - [`smatrix`] — the S-equation, s-matrix verification, induced products on
//!   the dual space, pseudo-Hessian forms and the graded bracket on
//!   `Λ^{k-1}g ⊗ g`.
//! - [`deformation`] — cohomology of s-matrices (full complex and the
//!   deformation subcomplex), weak homomorphisms, one-parameter infinitesimal
//!   deformations and Nijenhuis elements.
//! - [`phasespace`] — symplectic and para-Kähler Lie algebras, phase spaces on
//!   `g ⊕ g*` and their deformations.
//! - [`files`] — the JSON file formats used by the CLI and the Python
//!   bindings. Rationals are serialized as strings, never as floats.
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so sharing between threads is safe.

pub mod deformation;
pub mod exactla;
pub mod files;
pub mod fixtures;
pub mod phasespace;
pub mod prelie;
pub mod report;
pub mod rotabaxter;
pub mod smatrix;

pub use exactla::{Matrix, Rat};
pub use report::{Error, Failure, Report};
