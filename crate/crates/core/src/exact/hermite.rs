//! Two-variable Hermite polynomials
//! `H_{m,n}(x, y) = Σ_l m!n! / (l!(m−l)!(n−l)!) · (−1)^l x^{m−l} y^{n−l}`
//! and the exact identities they satisfy.

use num_complex::Complex;
use num_traits::{Float, Zero};

use crate::exact::poly::BivariatePolynomial;
use crate::exact::rational::{factorial, int_q};
use crate::report::{Record, Report, Status};
use crate::{ComplexRational, Rational, RationalPoly};

/// `H_{m,n}` in the stored slot order `(ξ, ξ*)`.
pub fn hermite2_poly(m: u32, n: u32) -> RationalPoly {
    let fm = factorial(m);
    let fn_ = factorial(n);
    BivariatePolynomial::from_terms((0..=m.min(n)).map(|l| {
        let mag = &fm * &fn_ / (factorial(l) * factorial(m - l) * factorial(n - l));
        let c = if l % 2 == 0 { mag } else { -mag };
        ((m - l, n - l), Rational::from_integer(c))
    }))
}

/// `H_{m,n}` with a possibly negative index; negative indices give zero.
pub fn hermite2_poly_signed(m: i64, n: i64) -> RationalPoly {
    if m < 0 || n < 0 {
        BivariatePolynomial::zero()
    } else {
        hermite2_poly(m as u32, n as u32)
    }
}

/// The swapped-argument object `H_{m,n}(ξ*, ξ)` written in the stored slot
/// order `(ξ, ξ*)`. Equal to `hermite2_poly(n, m)`.
pub fn hermite2_swapped(m: u32, n: u32) -> RationalPoly {
    hermite2_poly(m, n).swap_slots()
}

fn swapped_signed(m: i64, n: i64) -> RationalPoly {
    hermite2_poly_signed(m, n).swap_slots()
}

/// Exact `H_{m,n}(z, z̄)`.
pub fn hermite2_eval(m: u32, n: u32, z: &ComplexRational) -> ComplexRational {
    hermite2_poly(m, n).eval_with(z, &z.conj(), |c| Complex::new(c.clone(), Rational::zero()))
}

/// `H_{m,n}(x, y)` in floating point. Coefficients are generated by the
/// ratio `c_{l+1}/c_l = −(m−l)(n−l)/(l+1)` so no big integers are formed.
pub fn hermite2_eval_float<T: Float>(m: u32, n: u32, x: Complex<T>, y: Complex<T>) -> Complex<T> {
    let lmax = m.min(n);
    let mut coeff = T::one();
    let mut sum = Complex::new(T::zero(), T::zero());
    for l in 0..=lmax {
        sum = sum + x.powu(m - l) * y.powu(n - l) * coeff;
        if l < lmax {
            let num = T::from((m - l) as f64 * (n - l) as f64).expect("finite");
            let den = T::from(l as f64 + 1.0).expect("finite");
            coeff = -coeff * num / den;
        }
    }
    sum
}

fn record_identity(report: &mut Report, case: &str, identity: &str, residual: RationalPoly) {
    report.push(Record::new(
        "hermite-recurrences",
        case,
        Status::from_bool(residual.is_zero()),
        residual.render("xi", "xi*"),
        identity,
    ));
}

/// Check the derivative rules, both three-term recurrences and the modulus
/// identity at `(m, n)` as exact polynomial identities.
///
/// The identities are stated for the swapped-argument family
/// `G_{m,n} = H_{m,n}(ξ*, ξ)` with `ξ` the first slot and `ξ*` the second:
///
/// * `∂_ξ G_{m,n} = n G_{m,n−1}`, `∂_{ξ*} G_{m,n} = m G_{m−1,n}`
/// * `G_{m+1,n} + n G_{m,n−1} = ξ* G_{m,n}`, `G_{m,n+1} + m G_{m−1,n} = ξ G_{m,n}`
/// * `|ξ|² G_{m,n} = ξ(G_{m+1,n} + n G_{m,n−1})
///                 = G_{m+1,n+1} + nm G_{m−1,n−1} + (m+n+1) G_{m,n}`
///
/// plus the slot symmetry `H_{m,n}(ξ, ξ*) = H_{n,m}(ξ*, ξ)`.
pub fn check_recurrences(m: u32, n: u32) -> Report {
    let (mi, ni) = (m as i64, n as i64);
    let g = |a: i64, b: i64| swapped_signed(a, b);
    let xi = RationalPoly::first_var();
    let xi_bar = RationalPoly::second_var();
    let mq = int_q(mi);
    let nq = int_q(ni);
    let case = format!("m={m},n={n}");
    let mut report = Report::new();

    let gmn = g(mi, ni);
    record_identity(
        &mut report,
        &case,
        "derivative-first-slot",
        gmn.partial_first() - g(mi, ni - 1).scale(&nq),
    );
    record_identity(
        &mut report,
        &case,
        "derivative-second-slot",
        gmn.partial_second() - g(mi - 1, ni).scale(&mq),
    );
    let raise_first = g(mi + 1, ni) + g(mi, ni - 1).scale(&nq);
    record_identity(
        &mut report,
        &case,
        "three-term-conjugate",
        &raise_first - &(&xi_bar * &gmn),
    );
    record_identity(
        &mut report,
        &case,
        "three-term-direct",
        g(mi, ni + 1) + g(mi - 1, ni).scale(&mq) - &xi * &gmn,
    );
    let modulus = &(&xi * &xi_bar) * &gmn;
    record_identity(
        &mut report,
        &case,
        "modulus-factored",
        &modulus - &(&xi * &raise_first),
    );
    record_identity(
        &mut report,
        &case,
        "modulus-expanded",
        &modulus
            - &(g(mi + 1, ni + 1)
                + g(mi - 1, ni - 1).scale(&(&nq * &mq))
                + gmn.scale(&int_q(mi + ni + 1))),
    );
    record_identity(
        &mut report,
        &case,
        "slot-symmetry",
        hermite2_poly(m, n).swap_slots() - hermite2_poly(n, m),
    );
    report
}

/// Check that `H_{n+q,n}(ξ*, ξ) = e^{−iqφ} H_{n+q,n}(|ξ|, |ξ|)`.
///
/// Structurally every monomial `ξ^a ξ*^b` of the swapped object must have
/// `b − a = q`; numerically, at the sample point `z ≠ 0`,
/// `G(z) = z̄^q · R(|z|²)` where `R(s) = Σ c_a s^a` collects the coefficients
/// of `ξ^a ξ*^{a+q}`. The latter is the phase statement with the irrational
/// `|z|^q` cancelled from both sides.
pub fn phase_factorization_check(n: u32, q: u32, z: &ComplexRational) -> Report {
    let case = format!(
        "n={n},q={q},z={}",
        crate::exact::rational::complex_fraction_string(z)
    );
    let g = hermite2_swapped(n + q, n);
    let mut report = Report::new();
    let offenders: Vec<String> = g
        .terms()
        .filter(|(&(a, b), _)| b as i64 - a as i64 != q as i64)
        .map(|(&(a, b), _)| format!("xi^{a}*xi*^{b}"))
        .collect();
    report.push(Record::new(
        "hermite-phase",
        case.clone(),
        Status::from_bool(offenders.is_empty()),
        if offenders.is_empty() {
            "0".to_string()
        } else {
            offenders.join(";")
        },
        "exponent-difference",
    ));

    if z.is_zero() {
        report.push(Record::new(
            "hermite-phase",
            case,
            Status::Fail,
            "sample point z = 0 carries no phase",
            "phase-factorization",
        ));
        return report;
    }
    let modulus_sq = z.norm_sqr();
    let radial = g.terms().fold(Rational::zero(), |acc, (&(a, _), c)| {
        acc + c * num_traits::pow(modulus_sq.clone(), a as usize)
    });
    let lhs = g.eval_with(z, &z.conj(), |c| Complex::new(c.clone(), Rational::zero()));
    let rhs = num_traits::pow(z.conj(), q as usize) * radial;
    let diff = lhs - rhs;
    report.push(Record::new(
        "hermite-phase",
        case,
        Status::from_bool(diff.is_zero()),
        crate::exact::rational::complex_fraction_string(&diff),
        "phase-factorization",
    ));
    report
}
