//! Arithmetic and closed-form determinant, trace and inverse for complex
//! Clifford algebras `Cl(p,q)`.
//!
//! Multivectors are stored densely: `2^n` complex coefficients indexed by a
//! blade bitmask (bit `a-1` set iff generator `e^a` occurs). The closed forms
//! in [`detinv`] cover `n <= 5`; every one of them can be checked against the
//! matrix side in [`repr`].

pub mod blade;
pub mod detinv;
mod error;
pub mod involutions;
pub mod json;
pub mod matrix;
pub mod multivector;
pub mod parser;
pub mod repr;
pub mod signature;
pub mod verify;

pub use blade::{blade_mul, BladeIndex};
pub use detinv::{
    default_invertibility_tol, det, det_parity_n4, det_via_matrix, inverse, is_invertible, trace,
    trace_via_matrix,
};
pub use error::{Error, Result};
pub use involutions::{
    clifford_conjugation, complex_conjugate, grade_flip, grade_involution, hermitian, nabla,
    plus_conj, pseudo_hermitian, reverse, triangle,
};
pub use matrix::ComplexMatrix;
pub use multivector::{random_multivector, Multivector, Profile};
pub use parser::{evaluate, parse, parse_and_evaluate, Expr, ParseError, ParseErrorKind};
pub use repr::{alternate_representation, build_generators, represent, Representation};
pub use signature::{Signature, MAX_DIM};

/// Complex coefficient type used throughout.
pub type Complex = num_complex::Complex64;
