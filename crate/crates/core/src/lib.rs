//! Exact special-function kernels and truncated two-mode Fock-space
//! constructions for the joint eigenstates of the number-difference operator
//! `Q = a†a − b†b` and the pair operator `K = ab − a†b†`.
//!
//! The crate is organised in three layers:
//!
//! * [`exact`]: rationals, Pochhammer symbols, terminating `₂F₁` sums,
//!   bivariate polynomials and the two-variable Hermite family `H_{m,n}`.
//! * [`fock`]: sparse ladder operators, the states `|q,α⟩`, `|ξ⟩`, `|q,k⟩`
//!   and their eigen-relation / differential-equation verifiers.
//! * [`moment`]: exact Gaussian-measure integrals over the complex plane,
//!   reduced to the monomial moments `∫ d²ξ/π e^{−|ξ|²} ξ^p ξ*^p' = δ p!`.
//!
//! Operators and state vectors are generic over a [`Scalar`]; the aliases
//! below name the instantiations used throughout.

pub mod error;
pub mod exact;
pub mod fock;
pub mod moment;
pub mod report;
pub mod scalar;
pub mod surd;

pub use error::{Error, Result};
pub use report::{Record, Report, Status};
pub use scalar::{ExactField, Scalar, ToComplex64};
pub use surd::Surd;

/// Exact arbitrary-precision fraction, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Gaussian rational `re + i·im`.
pub type ComplexRational = num_complex::Complex<Rational>;
/// Double-precision complex scalar.
pub type C64 = num_complex::Complex64;

/// Real element of `Q(√2, √3, …)`.
pub type RealSurd = Surd<Rational>;
/// Element of `Q(i)(√2, √3, …)`.
pub type ComplexSurd = Surd<ComplexRational>;

/// Polynomial in the slots `(ξ, ξ*)` with exact rational coefficients.
pub type RationalPoly = exact::BivariatePolynomial<Rational>;

pub type ExactOperator = fock::SparseOperator<RealSurd>;
pub type ComplexExactOperator = fock::SparseOperator<ComplexSurd>;
pub type FloatOperator = fock::SparseOperator<C64>;

pub type ExactState = fock::FockVector<RealSurd>;
pub type ComplexExactState = fock::FockVector<ComplexSurd>;
pub type FloatState = fock::FockVector<C64>;
