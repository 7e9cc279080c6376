//! Pochhammer symbols and terminating Gauss hypergeometric sums.
//!
//! Only the terminating reading of `₂F₁(−n, β; γ; z)` is implemented: with a
//! nonnegative integer `n` the series is a degree-`n` polynomial in `z` and
//! is summed exactly for every `z`, including `z = 2` where the
//! non-terminating series would diverge.

use std::fmt::Display;

use num_traits::{FromPrimitive, Num, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::int_q;
use crate::Rational;

/// Rising factorial `α(α+1)···(α+n−1)`; the empty product for `n = 0` is 1.
pub fn pochhammer<T: Clone + Num + FromPrimitive>(alpha: &T, n: u32) -> T {
    (0..n).fold(T::one(), |acc, i| {
        acc * (alpha.clone() + T::from_u32(i).expect("index fits the scalar type"))
    })
}

/// Coefficients `c_j` of `₂F₁(−n, β; γ; z) = Σ_j c_j z^j`, `j = 0..=n`.
pub fn hyp2f1_coefficients<T>(n: u32, beta: &T, gamma: &T) -> Result<Vec<T>>
where
    T: Clone + Num + FromPrimitive + Display,
{
    let from = |i: u32| T::from_u32(i).expect("index fits the scalar type");
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut c = T::one();
    coeffs.push(c.clone());
    for j in 0..n {
        let denom = gamma.clone() + from(j);
        if denom.is_zero() {
            return Err(Error::Pole {
                gamma: gamma.to_string(),
                index: j + 1,
            });
        }
        // c_{j+1} = c_j · (j − n)(β + j) / ((γ + j)(j + 1))
        let minus_n_plus_j = from(j) - from(n);
        c = c * minus_n_plus_j * (beta.clone() + from(j)) / (denom * from(j + 1));
        coeffs.push(c.clone());
    }
    Ok(coeffs)
}

/// Exact finite sum `Σ_{j=0}^{n} (−n)_j (β)_j / (γ)_j · z^j / j!`.
///
/// Fails with [`Error::Pole`] when `γ ∈ {0, −1, …, −(n−1)}`.
pub fn hyp2f1_terminating<T>(n: u32, beta: &T, gamma: &T, z: &T) -> Result<T>
where
    T: Clone + Num + FromPrimitive + Display,
{
    let coeffs = hyp2f1_coefficients(n, beta, gamma)?;
    Ok(coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, c| acc * z.clone() + c.clone()))
}

/// `F(n) = ₂F₁(−n, k/2 + 1; q + 1; 2)`, the layer coefficient of `|q,k⟩`.
pub fn qk_hyp(n: u32, k: &Rational, q: u32) -> Rational {
    let beta = k / int_q(2) + int_q(1);
    let gamma = int_q(q as i64 + 1);
    hyp2f1_terminating(n, &beta, &gamma, &int_q(2)).expect("q + 1 > 0 has no poles")
}

/// `[F(0), F(1), …, F(n_max)]`, each summed directly.
pub fn qk_hyp_values(k: &Rational, q: u32, n_max: u32) -> Vec<Rational> {
    (0..=n_max).map(|n| qk_hyp(n, k, q)).collect()
}

/// `(q−k−1)·F(n) + n·F(n−1) − (q+n+1)·F(n+1)` with `F(−1)` read as 0.
///
/// This is the Gauss contiguous relation specialised to `β = k/2+1`,
/// `γ = q+1`, `z = 2`; it is exactly the per-layer condition for
/// `(ab − a†b†)|q,k⟩ = (q−k−1)|q,k⟩`.
pub fn gauss_contiguous_residual(n: u32, k: &Rational, q: i64) -> Result<Rational> {
    let beta = k / int_q(2) + int_q(1);
    let gamma = int_q(q + 1);
    let two = int_q(2);
    let f = |m: u32| hyp2f1_terminating(m, &beta, &gamma, &two);
    let eigen = int_q(q) - k - int_q(1);
    let lower = if n == 0 {
        Rational::zero()
    } else {
        int_q(n as i64) * f(n - 1)?
    };
    Ok(eigen * f(n)? + lower - int_q(q + n as i64 + 1) * f(n + 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&q(5, 2), 0), Rational::one());
        assert_eq!(pochhammer(&q(2, 1), 3), q(24, 1));
        assert_eq!(pochhammer(&q(1, 2), 2), q(3, 4));
        assert_eq!(pochhammer(&-q(3, 1), 4), Rational::zero());
        assert_eq!(pochhammer(&2.0f64, 3), 24.0);
    }

    #[test]
    fn hyp2f1_examples() {
        let any = q(7, 3);
        assert_eq!(
            hyp2f1_terminating(0, &any, &q(-4, 1), &q(9, 1)).unwrap(),
            Rational::one()
        );
        // n = 1: 1 − (k+2)/(q+1) = (q−k−1)/(q+1)
        for (k, qq) in [(q(1, 1), 2i64), (q(-1, 2), 0), (q(7, 3), 5), (q(0, 1), 3)] {
            let beta = &k / q(2, 1) + q(1, 1);
            let value = hyp2f1_terminating(1, &beta, &q(qq + 1, 1), &q(2, 1)).unwrap();
            assert_eq!(value, (q(qq, 1) - &k - q(1, 1)) / q(qq + 1, 1));
        }
        assert_eq!(
            hyp2f1_terminating(1, &q(3, 2), &q(3, 1), &q(2, 1)).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn pole_inside_the_truncated_sum() {
        let err = hyp2f1_terminating(3, &q(1, 1), &q(-1, 1), &q(2, 1)).unwrap_err();
        assert!(matches!(err, Error::Pole { index: 2, .. }));
        // γ = −3 only bites from (γ)_4 onward, outside an n = 3 sum
        assert!(hyp2f1_terminating(3, &q(1, 1), &q(-3, 1), &q(2, 1)).is_ok());
        assert!(gauss_contiguous_residual(2, &q(0, 1), -2).is_err());
    }

    #[test]
    fn coefficients_match_pochhammer_products() {
        let beta = q(5, 2);
        let gamma = q(4, 3);
        for n in 0..12u32 {
            let coeffs = hyp2f1_coefficients(n, &beta, &gamma).unwrap();
            for (j, c) in coeffs.iter().enumerate() {
                let j = j as u32;
                let expected = pochhammer(&-q(n as i64, 1), j) * pochhammer(&beta, j)
                    / (pochhammer(&gamma, j) * pochhammer(&q(1, 1), j));
                assert_eq!(*c, expected, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn float_and_rational_paths_agree() {
        let exact = hyp2f1_terminating(6, &q(3, 2), &q(4, 1), &q(2, 1)).unwrap();
        let float = hyp2f1_terminating(6, &1.5f64, &4.0, &2.0).unwrap();
        let e: f64 = num_traits::ToPrimitive::to_f64(&exact).unwrap();
        assert!((e - float).abs() < 1e-12);
    }

    #[test]
    fn contiguous_residual_examples() {
        for k in [q(-2, 1), q(-1, 2), q(0, 1), q(1, 1), q(7, 3)] {
            for qq in 0..=5 {
                assert!(gauss_contiguous_residual(0, &k, qq).unwrap().is_zero());
            }
        }
        assert!(gauss_contiguous_residual(5, &q(3, 1), 2).unwrap().is_zero());
    }

    #[test]
    fn qk_hyp_closed_forms() {
        // q = 0: F(1) = −(k+1)
        assert_eq!(qk_hyp(1, &q(5, 3), 0), -(q(5, 3) + q(1, 1)));
        assert_eq!(qk_hyp(1, &q(1, 1), 2), Rational::zero());
        assert_eq!(qk_hyp(0, &q(9, 7), 4), Rational::one());
        // β = 0 collapses the sum to 1
        assert!(qk_hyp_values(&q(-2, 1), 0, 10).iter().all(|f| f.is_one()));
    }
}
