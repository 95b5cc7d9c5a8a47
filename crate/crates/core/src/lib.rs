//! Computer algebra for generalized Clifford algebras `Cl^(1/m)_d`.
//!
//! The algebra is generated by `e_1, ..., e_d` subject to `e_j^m = e` and
//! `e_k e_l = ω e_l e_k` for `k < l`, with `ω = exp(2πi/m)`. Every operation
//! here (Hermitian conjugation, trace, determinant, characteristic polynomial,
//! adjugate, inverse, the unitary groups and their Lie algebras) is computed
//! intrinsically on coefficient vectors. The [`rep`] module builds explicit
//! shift/clock matrix representations that serve as an independent numerical
//! cross-check.

pub mod context;
mod dd;
pub mod element;
pub mod error;
pub mod expr;
pub mod groups;
pub mod matrix;
pub mod random;
pub mod rep;
pub mod spectral;
pub mod verify;

pub use context::{AlgebraContext, ExponentTuple, Limits, PhasedMonomial};
pub use element::AlgebraElement;
pub use error::{Error, Result};
pub use matrix::ComplexMatrix;
pub use num_complex::Complex64 as C64;
pub use rep::GeneratorSet;
pub use spectral::CharPolyResult;
