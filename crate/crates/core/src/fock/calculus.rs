//! Finite-difference checks of the radial and phase differential equations
//! satisfied by `⟨ξ|q,k⟩`, plus the exact polynomial form of the radial one.
//!
//! The overlap series has non-decaying summands, so at any truncation the
//! radial equation carries a top-layer term `e^{−|ξ|²/2} B_N` (see
//! [`overlap_boundary_term`]). The finite-difference check compares against
//! `(q−k−1)·overlap + boundary`; both the raw mismatch and the boundary
//! magnitude are reported.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fock::operators::{build_ladder_ops, LadderOps};
use crate::fock::states::{
    entangled_state_vector, overlap_boundary_polynomial, overlap_boundary_term, overlap_polynomial,
    overlap_qk, polar, EigenstateParams,
};
use crate::report::{Record, Report, Status};
use crate::{RationalPoly, C64};

/// Rounding error of a central difference grows like `ε/h`; this is `ε`
/// times the worst cancellation seen in the overlap sums for `|ξ| ≤ 2`.
pub const ROUNDING: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdOptions {
    /// Step relative to the scale of the varied coordinate (`|ξ|` for the
    /// radial direction, one radian for the phase).
    pub step: f64,
    pub tolerance: f64,
    /// Halving the step may change the error by at most this factor.
    pub ratio_limit: f64,
    /// Relative errors below `max(noise_floor, ROUNDING / step)` are treated
    /// as rounding noise and carry no order information.
    pub noise_floor: f64,
}

impl Default for FdOptions {
    fn default() -> Self {
        FdOptions {
            step: 1e-4,
            tolerance: 1e-6,
            ratio_limit: 10.0,
            noise_floor: 1e-11,
        }
    }
}

/// Outcome of one finite-difference comparison at steps `h` and `h/2`.
///
/// With residuals `r(h)` and `r(h/2)` of a second-order scheme,
/// `r(h) − r(h/2) ≈ (3/4)·C·h²`, so `C·h² ≈ (4/3)·|r(h) − r(h/2)|`. The check
/// passes when `|r(h)| ≤ max(tolerance, C·h²)` (relative to the scale of the
/// compared quantities): the residual is either small or fully explained
/// by the discretisation error.
#[derive(Clone, Debug, PartialEq)]
pub struct FdCheck {
    pub identity: &'static str,
    pub step: f64,
    pub rel_err: f64,
    pub rel_err_half: f64,
    /// Richardson estimate of the relative discretisation error at `h`.
    pub discretisation: f64,
    /// `log2(rel_err / rel_err_half)`, when both are above the noise floor.
    pub observed_order: Option<f64>,
    pub passed: bool,
    pub detail: String,
}

/// Residuals at `h` and `h/2`, each relative to `scale`, and the relative
/// size of their difference.
struct Samples {
    rel: f64,
    rel_half: f64,
    rel_diff: f64,
}

impl FdCheck {
    fn build(
        identity: &'static str,
        step: f64,
        samples: Samples,
        opts: &FdOptions,
        detail: String,
    ) -> Result<Self> {
        let Samples {
            rel: rel_err,
            rel_half: rel_err_half,
            rel_diff,
        } = samples;
        let floor = opts.noise_floor.max(ROUNDING / opts.step);
        let above = |e: f64| e > floor;
        let observed_order = if above(rel_err) && above(rel_err_half) {
            let ratio = rel_err / rel_err_half;
            if ratio > opts.ratio_limit || ratio < 1.0 / opts.ratio_limit {
                return Err(Error::StepTooLarge { step, ratio });
            }
            Some(ratio.log2())
        } else {
            None
        };
        let discretisation = rel_diff * 4.0 / 3.0;
        Ok(FdCheck {
            identity,
            step,
            rel_err,
            rel_err_half,
            discretisation,
            observed_order,
            passed: rel_err.is_finite() && rel_err <= opts.tolerance.max(discretisation),
            detail,
        })
    }

    pub fn record(&self, suite: &str, case: &str) -> Record {
        let order = self
            .observed_order
            .map(|p| format!("{p:.3}"))
            .unwrap_or_else(|| "noise".to_string());
        Record::new(
            suite,
            case,
            Status::from_bool(self.passed),
            format!(
                "{:.6e} (h/2: {:.6e}, C*h^2: {:.6e}, order {order}{})",
                self.rel_err, self.rel_err_half, self.discretisation, self.detail
            ),
            self.identity,
        )
    }
}

fn max_norm(values: &[C64]) -> f64 {
    values.iter().map(|z| z.norm()).fold(0.0f64, f64::max)
}

fn relative(value: f64, scale: f64) -> f64 {
    if scale == 0.0 {
        value
    } else {
        value / scale
    }
}

/// `(r∂_r + 1)⟨ξ|q,k⟩ = (q−k−1)⟨ξ|q,k⟩ + boundary` along the ray through
/// `ξ`, with `r∂_r = ξ∂_ξ + ξ*∂_{ξ*}` taken by central differences.
pub fn check_radial_pde(xi: C64, params: &EigenstateParams, opts: &FdOptions) -> Result<FdCheck> {
    if xi.is_zero() {
        return Err(Error::InvalidParameter("radial check needs xi != 0".into()));
    }
    let r = xi.norm();
    let phi = xi.arg();
    let lambda = params.eigenvalue();
    let lambda = num_traits::ToPrimitive::to_f64(&lambda).unwrap_or(f64::NAN);
    let f0 = overlap_qk(xi, params)?;
    let boundary = overlap_boundary_term(xi, params)?;
    let rhs = f0 * lambda + boundary;
    // (corrected residual, uncorrected residual, lhs)
    let residual_at = |h: f64| -> Result<(C64, C64, C64)> {
        let fp = overlap_qk(polar(r + h, phi), params)?;
        let fm = overlap_qk(polar(r - h, phi), params)?;
        let lhs = (fp - fm) * (r / (2.0 * h)) + f0;
        Ok((lhs - rhs, lhs - f0 * lambda, lhs))
    };
    let h = opts.step * r;
    let (res, raw, lhs) = residual_at(h)?;
    let (res_half, _, lhs_half) = residual_at(h / 2.0)?;
    let scale = max_norm(&[lhs, lhs_half, rhs, f0]);
    let samples = Samples {
        rel: relative(res.norm(), scale),
        rel_half: relative(res_half.norm(), scale),
        rel_diff: relative((res - res_half).norm(), scale),
    };
    let raw = relative(raw.norm(), max_norm(&[lhs, f0]));
    FdCheck::build(
        "radial-euler-equation",
        h,
        samples,
        opts,
        format!(
            ", truncation term {:.3e}, uncorrected {raw:.3e}",
            boundary.norm()
        ),
    )
}

/// The phase equations.
///
/// * On states: `−i ∂_φ |ξ⟩ = Q|ξ⟩`, compared in the Euclidean norm.
/// * On overlaps: `i ∂_φ ⟨ξ|q,k⟩ = q ⟨ξ|q,k⟩`.
pub fn check_phase_derivative(
    xi: C64,
    params: &EigenstateParams,
    opts: &FdOptions,
) -> Result<[FdCheck; 2]> {
    if xi.is_zero() {
        return Err(Error::InvalidParameter("phase check needs xi != 0".into()));
    }
    let r = xi.norm();
    let phi = xi.arg();
    let n = params.truncation.max(1);
    let h = opts.step;
    let i = C64::new(0.0, 1.0);

    let ops: LadderOps<C64> = build_ladder_ops(n);
    let psi = entangled_state_vector(xi, n);
    let q_psi = ops.q.apply(&psi);
    let state_residual = |h: f64| {
        let plus = entangled_state_vector(polar(r, phi + h), n);
        let minus = entangled_state_vector(polar(r, phi - h), n);
        plus.sub(&minus).scale(&(-i / (2.0 * h))).sub(&q_psi)
    };
    let (res, res_half) = (state_residual(h), state_residual(h / 2.0));
    let scale = q_psi.norm();
    let state = FdCheck::build(
        "phase-derivative-state",
        h,
        Samples {
            rel: relative(res.norm(), scale),
            rel_half: relative(res_half.norm(), scale),
            rel_diff: relative(res.sub(&res_half).norm(), scale),
        },
        opts,
        String::new(),
    )?;

    let f0 = overlap_qk(xi, params)?;
    let q = params.q as f64;
    let overlap_residual = |h: f64| -> Result<(C64, C64)> {
        let fp = overlap_qk(polar(r, phi + h), params)?;
        let fm = overlap_qk(polar(r, phi - h), params)?;
        let g = (fp - fm) * (i / (2.0 * h));
        Ok((g - f0 * q, g))
    };
    let (res, g) = overlap_residual(h)?;
    let (res_half, g_half) = overlap_residual(h / 2.0)?;
    let scale = max_norm(&[g, g_half, f0]);
    let overlap = FdCheck::build(
        "phase-derivative-overlap",
        h,
        Samples {
            rel: relative(res.norm(), scale),
            rel_half: relative(res_half.norm(), scale),
            rel_diff: relative((res - res_half).norm(), scale),
        },
        opts,
        String::new(),
    )?;
    Ok([state, overlap])
}

/// Exact polynomial form of the truncated radial equation:
/// `(E + 1 − ξξ* − (q−k−1)) A_N = B_N` with `E` the Euler operator.
pub fn radial_equation_exact(params: &EigenstateParams) -> Result<Report> {
    let a = overlap_polynomial(params)?;
    let xi_xibar = &RationalPoly::first_var() * &RationalPoly::second_var();
    let lhs = a.euler() + a.clone() - &xi_xibar * &a - a.scale(&params.eigenvalue());
    let residual = lhs - overlap_boundary_polynomial(params)?;
    Ok(Report::from_iter([Record::new(
        "radial-exact",
        params.label(),
        Status::from_bool(residual.is_zero()),
        residual.render("xi", "xi*"),
        "radial-euler-equation",
    )]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn exact_radial_identity_with_truncation_term() {
        for qq in 0..4u32 {
            for k in [q(-2, 1), q(-1, 2), q(0, 1), q(1, 1), q(7, 3)] {
                let p = EigenstateParams::new(qq, k, qq + 7);
                assert!(radial_equation_exact(&p).unwrap().passed(), "{}", p.label());
            }
        }
    }

    #[test]
    fn radial_fd_zero_eigenvalue() {
        // q = 2, k = 1: eigenvalue 0
        let p = EigenstateParams::new(2, q(1, 1), 14);
        let c = check_radial_pde(polar(1.0, 0.4), &p, &FdOptions::default()).unwrap();
        assert!(c.passed, "{c:?}");
    }

    #[test]
    fn radial_fd_second_order() {
        let p = EigenstateParams::new(0, q(0, 1), 14);
        let c = check_radial_pde(C64::new(0.7, 0.0), &p, &FdOptions::default()).unwrap();
        assert!(c.passed, "{c:?}");
        // truncation-dominated regime
        let opts = FdOptions {
            step: 1e-2,
            tolerance: 1e-2,
            ..FdOptions::default()
        };
        let c = check_radial_pde(C64::new(0.7, 0.0), &p, &opts).unwrap();
        let order = c.observed_order.expect("above noise");
        assert!((order - 2.0).abs() < 0.05, "{order}");
    }

    #[test]
    fn phase_moves_rotate_the_overlap() {
        let p = EigenstateParams::new(1, q(1, 2), 14);
        let r = 0.9;
        let base = overlap_qk(polar(r, 0.0), &p).unwrap();
        for phi in [0.3, 1.1, 2.5, -0.7] {
            let moved = overlap_qk(polar(r, phi), &p).unwrap();
            assert!((moved.norm() - base.norm()).abs() < 1e-12 * base.norm());
            let expected = base * C64::from_polar(1.0, -phi);
            assert!((moved - expected).norm() < 1e-12 * base.norm());
        }
    }

    #[test]
    fn phase_fd_checks() {
        let opts = FdOptions::default();
        let p = EigenstateParams::new(1, q(0, 1), 14);
        let [state, overlap] =
            check_phase_derivative(polar(1.0, std::f64::consts::FRAC_PI_4), &p, &opts).unwrap();
        assert!(state.passed, "{state:?}");
        assert!(overlap.passed, "{overlap:?}");
        let p0 = EigenstateParams::new(0, q(1, 1), 14);
        let [_, flat] = check_phase_derivative(polar(1.2, 0.5), &p0, &opts).unwrap();
        assert!(flat.passed && flat.rel_err < 1e-9, "{flat:?}");
    }

    #[test]
    fn residual_beyond_discretisation_fails() {
        let opts = FdOptions::default();
        // a constant defect does not shrink with the step
        let defect = Samples {
            rel: 1e-3,
            rel_half: 1e-3,
            rel_diff: 1e-12,
        };
        let c = FdCheck::build("t", 1e-4, defect, &opts, String::new()).unwrap();
        assert!(!c.passed);
        // a pure second-order error of the same size is explained by C·h²
        let clean = Samples {
            rel: 4e-6,
            rel_half: 1e-6,
            rel_diff: 3e-6,
        };
        let c = FdCheck::build("t", 1e-4, clean, &opts, String::new()).unwrap();
        assert!(c.passed);
        assert!((c.observed_order.unwrap() - 2.0).abs() < 1e-12);
        // ratio far from 4 means h is not in the asymptotic regime
        let erratic = Samples {
            rel: 1e-3,
            rel_half: 1e-5,
            rel_diff: 1e-3,
        };
        assert!(matches!(
            FdCheck::build("t", 1e-4, erratic, &opts, String::new()),
            Err(Error::StepTooLarge { .. })
        ));
    }

    #[test]
    fn real_check_reports_discretisation() {
        let p = EigenstateParams::new(1, q(0, 1), 14);
        let c = check_radial_pde(polar(1.0, 0.2), &p, &FdOptions::default()).unwrap();
        assert!(c.passed);
        assert!(c.discretisation > 0.0 && c.discretisation < 1e-6);
    }

    #[test]
    fn origin_is_rejected() {
        let p = EigenstateParams::new(1, q(0, 1), 14);
        assert!(check_radial_pde(C64::zero(), &p, &FdOptions::default()).is_err());
        assert!(check_phase_derivative(C64::zero(), &p, &FdOptions::default()).is_err());
    }

    #[test]
    fn oversized_step_is_flagged() {
        let p = EigenstateParams::new(1, q(1, 2), 14);
        let opts = FdOptions {
            step: 0.9,
            ..FdOptions::default()
        };
        let res = check_radial_pde(polar(1.0, 0.2), &p, &opts);
        match res {
            Err(Error::StepTooLarge { .. }) => {}
            Ok(c) => assert!(!c.passed, "{c:?}"),
            Err(e) => panic!("{e}"),
        }
    }
}
