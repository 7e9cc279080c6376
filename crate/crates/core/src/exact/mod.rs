//! Exact-arithmetic kernel: rationals, Pochhammer symbols, terminating
//! hypergeometric sums and the two-variable Hermite polynomials.
//!
//! Slot convention: every [`BivariatePolynomial`] is stored in the fixed
//! order (first slot `ξ`, second slot `ξ*`). The Hermite polynomial
//! `H_{m,n}(ξ, ξ*)` is [`hermite2_poly`]`(m, n)`; the swapped-argument object
//! `H_{m,n}(ξ*, ξ)` that appears in the overlap `⟨ξ|q,k⟩` is
//! [`hermite2_swapped`]`(m, n)`, equal to `hermite2_poly(n, m)`.

pub mod generating;
pub mod hermite;
pub mod hyper;
pub mod poly;
pub mod rational;

pub use generating::generating_function_coeffs;
pub use hermite::{
    check_recurrences, hermite2_eval, hermite2_eval_float, hermite2_poly, hermite2_swapped,
    phase_factorization_check,
};
pub use hyper::{
    gauss_contiguous_residual, hyp2f1_coefficients, hyp2f1_terminating, pochhammer, qk_hyp,
    qk_hyp_values,
};
pub use poly::BivariatePolynomial;
pub use rational::{
    complex_fraction_string, factorial, fraction_string, parse_rational, plain_complex_string,
};
