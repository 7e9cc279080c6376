//! Constructors for `|q,α⟩`, `|ξ⟩` and `|q,k⟩`, and the overlap `⟨ξ|q,k⟩`.

use num_complex::Complex;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::hermite::{hermite2_eval, hermite2_eval_float, hermite2_swapped};
use crate::exact::hyper::qk_hyp_values;
use crate::exact::rational::{factorial_q, int_q};
use crate::fock::lattice::{FockIndex, FockVector};
use crate::scalar::Scalar;
use crate::{
    ComplexExactState, ComplexRational, ComplexSurd, ExactState, FloatState, Rational,
    RationalPoly, RealSurd, C64,
};

/// Labels of `|q,k⟩`: charge `q ≥ 0`, eigenvalue label `k`, truncation `N`.
///
/// Negative charges are the mode-exchanged states and are not built here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenstateParams {
    pub q: u32,
    pub k: Rational,
    pub truncation: u32,
}

impl EigenstateParams {
    pub fn new(q: u32, k: Rational, truncation: u32) -> Self {
        EigenstateParams { q, k, truncation }
    }

    /// Largest layer `n` with `n + q ≤ N`.
    pub fn n_max(&self) -> Result<u32> {
        self.truncation.checked_sub(self.q).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "truncation {} is below the charge {}",
                self.truncation, self.q
            ))
        })
    }

    /// `q − k − 1`, the eigenvalue of `ab − a†b†`.
    pub fn eigenvalue(&self) -> Rational {
        int_q(self.q as i64) - &self.k - int_q(1)
    }

    /// Canonical case label used in reports.
    pub fn label(&self) -> String {
        format!(
            "q={},k={},N={}",
            self.q,
            crate::exact::rational::fraction_string(&self.k),
            self.truncation
        )
    }

    /// `F(0..=n_max+extra)`.
    pub fn hyp_values(&self, extra: u32) -> Result<Vec<Rational>> {
        Ok(qk_hyp_values(&self.k, self.q, self.n_max()? + extra))
    }
}

fn generic_sqrt_factorial<T: Scalar>(n: u32) -> T {
    (2..=n as u64).fold(T::one(), |acc, i| acc * T::sqrt_of(i))
}

/// `Σ_n αⁿ/√((n+q)!·n!) |n+q, n⟩` for `n + q ≤ N`, with `C_q = 1`.
pub fn pair_coherent_state<T: Scalar>(q: u32, alpha: &T, truncation: u32) -> FockVector<T> {
    let mut v = FockVector::new(truncation);
    if q > truncation {
        return v;
    }
    let mut power = T::one();
    for n in 0..=(truncation - q) {
        // 1/√M = √M / M with M = (n+q)!·n!
        let radical = generic_sqrt_factorial::<T>(n + q) * generic_sqrt_factorial::<T>(n);
        let inv = T::from_rational(
            &(Rational::from_integer(1.into()) / (factorial_q(n + q) * factorial_q(n))),
        );
        v.set(FockIndex::new(n + q, n), power.clone() * radical * inv);
        power = power * alpha.clone();
    }
    v
}

/// `|ξ⟩` on the lattice: `e^{−|ξ|²/2} H_{l,j}(ξ, ξ*)/√(l!j!)` at `|l, j⟩`.
///
/// Amplitudes are generated by the normalised recurrence
/// `ψ_{l+1,j} = (ξ ψ_{l,j} − √j ψ_{l,j−1})/√(l+1)`, independent of the
/// direct Hermite sum used by [`overlap_qk`].
pub fn entangled_state_vector(xi: C64, truncation: u32) -> FloatState {
    let n = truncation as usize;
    let mut psi = vec![vec![C64::zero(); n + 1]; n + 1];
    let xi_bar = xi.conj();
    psi[0][0] = C64::new((-xi.norm_sqr() / 2.0).exp(), 0.0);
    for j in 1..=n {
        psi[0][j] = psi[0][j - 1] * xi_bar / (j as f64).sqrt();
    }
    for l in 0..n {
        for j in 0..=n {
            let lower = if j > 0 {
                psi[l][j - 1] * (j as f64).sqrt()
            } else {
                C64::zero()
            };
            psi[l + 1][j] = (psi[l][j] * xi - lower) / ((l + 1) as f64).sqrt();
        }
    }
    let mut v = FockVector::new(truncation);
    for (l, row) in psi.iter().enumerate() {
        for (j, amp) in row.iter().enumerate() {
            v.set(FockIndex::new(l as u32, j as u32), *amp);
        }
    }
    v
}

/// Exact `|ξ⟩` for Gaussian-rational `ξ`, without the common factor
/// `e^{−|ξ|²/2}`: amplitude `H_{l,j}(ξ, ξ*)/√(l!j!)` at `|l, j⟩`.
pub fn entangled_state_exact(xi: &ComplexRational, truncation: u32) -> ComplexExactState {
    let mut v = FockVector::new(truncation);
    for l in 0..=truncation {
        for j in 0..=truncation {
            let h = hermite2_eval(l, j, xi);
            if h.is_zero() {
                continue;
            }
            let inv = ComplexRational::new(
                Rational::from_integer(1.into()) / (factorial_q(l) * factorial_q(j)),
                Rational::zero(),
            );
            let radical =
                ComplexSurd::sqrt_factorial(l as u64) * ComplexSurd::sqrt_factorial(j as u64);
            v.set(FockIndex::new(l, j), radical.scale(&(h * inv)));
        }
    }
    v
}

/// `|q,k⟩ = Σ_n √((n+q)!/n!) F(n) |n+q, n⟩`, `n ≤ n_max`, with `𝔠(k) = 1`
/// and `F(n) = ₂F₁(−n, k/2+1; q+1; 2)`. Amplitudes are exact surds.
pub fn eigen_state_qk(params: &EigenstateParams) -> Result<ExactState> {
    let values = params.hyp_values(0)?;
    let mut v = FockVector::new(params.truncation);
    for (n, f) in values.iter().enumerate() {
        let n = n as u32;
        let amp = RealSurd::sqrt_falling((n + params.q) as u64, n as u64).scale(f);
        v.set(FockIndex::new(n + params.q, n), amp);
    }
    Ok(v)
}

/// `A_N = Σ_{n ≤ n_max} F(n)/n! · H_{n+q,n}(ξ*, ξ)` as an exact polynomial in
/// the slots `(ξ, ξ*)`; the overlap is `e^{−|ξ|²/2} A_N`.
pub fn overlap_polynomial(params: &EigenstateParams) -> Result<RationalPoly> {
    let values = params.hyp_values(0)?;
    Ok(values
        .iter()
        .enumerate()
        .fold(RationalPoly::zero(), |acc, (n, f)| {
            let n = n as u32;
            acc + hermite2_swapped(n + params.q, n).scale(&(f / factorial_q(n)))
        }))
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Truncated overlap `⟨ξ|q,k⟩ = e^{−|ξ|²/2} Σ_{n≤n_max} H_{n+q,n}(ξ*, ξ) F(n)/n!`
/// in double precision.
///
/// The untruncated series does not converge: the summands do not decay, so
/// the value depends on the truncation. It is consistent with
/// `⟨ξ|eigen_state_qk⟩` at the same truncation.
pub fn overlap_qk(xi: C64, params: &EigenstateParams) -> Result<C64> {
    let values = params.hyp_values(0)?;
    let gauss = (-xi.norm_sqr() / 2.0).exp();
    let mut sum = C64::zero();
    let mut inv_fact = 1.0f64;
    for (n, f) in values.iter().enumerate() {
        if n > 0 {
            inv_fact /= n as f64;
        }
        let n = n as u32;
        let h = hermite2_eval_float(n + params.q, n, xi.conj(), xi);
        sum += h * (to_f64(f) * inv_fact);
    }
    Ok(sum * gauss)
}

/// The exact truncation term of the radial equation: with `N = n_max`,
/// `(ξ∂_ξ + ξ*∂_{ξ*} + 1 − (q−k−1))⟨ξ|q,k⟩_N = e^{−|ξ|²/2} B_N(ξ)` where
/// `B_N = −[(q+N+1) F(N+1) H_{N+q,N} + F(N) H_{N+q+1,N+1}] / N!`
/// (Hermite arguments `(ξ*, ξ)`). Every lower layer cancels through the
/// contiguous relation, so only the top of the truncation survives.
pub fn overlap_boundary_term(xi: C64, params: &EigenstateParams) -> Result<C64> {
    let top = params.n_max()?;
    let values = params.hyp_values(1)?;
    let q = params.q;
    let inv_fact = 1.0 / (1..=top).map(|i| i as f64).product::<f64>();
    let h_top = hermite2_eval_float(top + q, top, xi.conj(), xi);
    let h_next = hermite2_eval_float(top + q + 1, top + 1, xi.conj(), xi);
    let b = -(h_top * ((q + top + 1) as f64 * to_f64(&values[top as usize + 1]))
        + h_next * to_f64(&values[top as usize]))
        * inv_fact;
    Ok(b * (-xi.norm_sqr() / 2.0).exp())
}

/// Exact polynomial form of `B_N` (see [`overlap_boundary_term`]).
pub fn overlap_boundary_polynomial(params: &EigenstateParams) -> Result<RationalPoly> {
    let top = params.n_max()?;
    let values = params.hyp_values(1)?;
    let q = params.q;
    let inv = Rational::from_integer(1.into()) / factorial_q(top);
    let lead = hermite2_swapped(top + q, top)
        .scale(&(int_q((q + top + 1) as i64) * &values[top as usize + 1]));
    let next = hermite2_swapped(top + q + 1, top + 1).scale(&values[top as usize]);
    Ok((lead + next).scale(&-inv))
}

/// Convenience: `ξ = r·e^{iφ}`.
pub fn polar(r: f64, phi: f64) -> C64 {
    Complex::from_polar(r, phi)
}
