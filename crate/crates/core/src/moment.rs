//! Exact Gaussian-measure integrals over the complex plane.
//!
//! Every integral here has the form `∫ d²ξ/π e^{−|ξ|²} P(ξ, ξ*)·conj(Q(ξ, ξ*))`
//! and is reduced termwise to the monomial moments
//! `∫ d²ξ/π e^{−|ξ|²} ξ^p ξ*^p' = δ_{p,p'} p!`. No quadrature is involved.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::hermite::hermite2_poly;
use crate::exact::poly::BivariatePolynomial;
use crate::exact::rational::{factorial_q, fraction_string};
use crate::fock::lattice::FockIndex;
use crate::fock::states::{eigen_state_qk, overlap_polynomial, EigenstateParams};
use crate::report::{Record, Report, Status};
use crate::scalar::ExactField;
use crate::{Rational, RationalPoly, RealSurd};

/// `∫ d²ξ/π e^{−|ξ|²} ξ^p ξ*^{p*}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMoment {
    pub p: u32,
    pub pstar: u32,
    pub value: Rational,
}

impl MonomialMoment {
    pub fn new(p: u32, pstar: u32) -> Self {
        MonomialMoment {
            p,
            pstar,
            value: gaussian_moment(p, pstar),
        }
    }
}

/// `δ_{p,p*}·p!`: the phase integral kills `p ≠ p*`, the radial one gives `p!`.
pub fn gaussian_moment(p: u32, pstar: u32) -> Rational {
    if p == pstar {
        factorial_q(p)
    } else {
        Rational::zero()
    }
}

/// `∫ d²ξ/π e^{−|ξ|²} P·conj(Q)`, where `conj(Q)` conjugates the
/// coefficients and swaps the slots, so a term `ξ^a ξ*^b` of `P` pairs with
/// a term `ξ^c ξ*^d` of `Q` exactly when `a + d = b + c`.
pub fn integrate_polynomial<C: ExactField>(
    p: &BivariatePolynomial<C>,
    q: &BivariatePolynomial<C>,
) -> C {
    let mut total = C::zero();
    for (&(a, b), pc) in p.terms() {
        for (&(c, d), qc) in q.terms() {
            if a + d == b + c {
                let m = C::from_rational(&factorial_q(a + d));
                total = total + pc.clone() * qc.conj() * m;
            }
        }
    }
    total
}

/// `∫ H_{l,j}·conj(H_{m,n}) = δ_{l,m} δ_{j,n} m! n!`.
pub fn check_hermite_orthogonality(l: u32, j: u32, m: u32, n: u32) -> Report {
    let value = integrate_polynomial(&hermite2_poly(l, j), &hermite2_poly(m, n));
    let expected = if (l, j) == (m, n) {
        factorial_q(m) * factorial_q(n)
    } else {
        Rational::zero()
    };
    let status = Status::from_bool(value == expected);
    let residual = if status == Status::Pass {
        fraction_string(&value)
    } else {
        format!(
            "{} != {}",
            fraction_string(&value),
            fraction_string(&expected)
        )
    };
    Report::from_iter([Record::new(
        "hermite-orthogonality",
        format!("({l},{j})x({m},{n})"),
        status,
        residual,
        "hermite-orthogonality",
    )])
}

/// `√(l!·j!)` as an exact surd.
fn sqrt_factorial_pair(l: u32, j: u32) -> RealSurd {
    RealSurd::sqrt_factorial(l as u64) * RealSurd::sqrt_factorial(j as u64)
}

/// The matrix `∫ d²ξ/π ⟨m,n|ξ⟩⟨ξ|m',n'⟩` over all indices `≤ N`, compared
/// with the identity. One summary record plus one record per bad element.
pub fn check_completeness(truncation: u32) -> Report {
    let mut report = Report::new();
    let basis: Vec<FockIndex> = crate::fock::operators::lattice(truncation).collect();
    let hermites: Vec<RationalPoly> = basis.iter().map(|i| hermite2_poly(i.na, i.nb)).collect();
    let mut bad = 0usize;
    for (r, row) in basis.iter().enumerate() {
        for (c, col) in basis.iter().enumerate() {
            // ⟨m,n|ξ⟩ = e^{−|ξ|²/2} H_{m,n}(ξ,ξ*)/√(m!n!)
            let raw = integrate_polynomial(&hermites[r], &hermites[c]);
            let norm = sqrt_factorial_pair(row.na, row.nb) * sqrt_factorial_pair(col.na, col.nb);
            let inv = Rational::one()
                / (factorial_q(row.na)
                    * factorial_q(row.nb)
                    * factorial_q(col.na)
                    * factorial_q(col.nb));
            let element = norm.scale(&(raw * inv));
            let expected = if r == c {
                RealSurd::one()
            } else {
                RealSurd::zero()
            };
            if element != expected {
                bad += 1;
                report.push(Record::new(
                    "completeness",
                    format!("N={truncation},{row}x{col}"),
                    Status::Fail,
                    element.to_string(),
                    "entangled-state-completeness",
                ));
            }
        }
    }
    let size = basis.len();
    report.push(Record::new(
        "completeness",
        format!("N={truncation}"),
        Status::from_bool(bad == 0),
        format!("{bad} of {} elements differ from the identity", size * size),
        "entangled-state-completeness",
    ));
    report
}

/// Fock coefficients of `∫ d²ξ/π |ξ⟩⟨ξ|q,k⟩` by exact moments, compared with
/// [`eigen_state_qk`] on every lattice site `≤ N` (off the charge-`q` sector
/// both must vanish).
pub fn reconstruct_qk(params: &EigenstateParams) -> Result<Report> {
    let n_max = params.n_max()?;
    if params.truncation < params.q + 2 {
        return Err(Error::InvalidParameter(format!(
            "reconstruction needs N >= q + 2, got {}",
            params.label()
        )));
    }
    let direct = eigen_state_qk(params)?;
    // ⟨ξ|q,k⟩ = e^{−|ξ|²/2}·conj(Σ F(n)/n!·H_{n+q,n}(ξ,ξ*)) for real F
    let ket = overlap_polynomial(params)?.swap_slots();
    let mut report = Report::new();
    let mut off_sector_bad = Vec::new();
    for site in crate::fock::operators::lattice(params.truncation) {
        let raw = integrate_polynomial(&hermite2_poly(site.na, site.nb), &ket);
        let inv = Rational::one() / (factorial_q(site.na) * factorial_q(site.nb));
        let coefficient = sqrt_factorial_pair(site.na, site.nb).scale(&(raw * inv));
        let expected = direct.get(site);
        let in_sector = site.charge() == params.q as i64 && site.nb <= n_max;
        if in_sector {
            let ok = coefficient == expected;
            report.push(Record::new(
                "reconstruction",
                format!("{},layer={}", params.label(), site.nb),
                Status::from_bool(ok),
                if ok {
                    coefficient.to_string()
                } else {
                    format!("{coefficient} != {expected}")
                },
                "fock-reconstruction",
            ));
        } else if coefficient != expected {
            off_sector_bad.push(format!("{site}: {coefficient}"));
        }
    }
    report.push(Record::new(
        "reconstruction",
        format!("{},off-sector", params.label()),
        Status::from_bool(off_sector_bad.is_empty()),
        if off_sector_bad.is_empty() {
            "0".to_string()
        } else {
            off_sector_bad.join("; ")
        },
        "fock-reconstruction",
    ));
    Ok(report)
}

/// `⟨q,k|q,k⟩` at truncation `N` by the integral `∫ d²ξ/π |⟨ξ|q,k⟩|²`,
/// checked against `Σ_{n ≤ N−q} (n+q)!/n!·F(n)²`.
pub fn norm_integral(params: &EigenstateParams, truncation: u32) -> Result<Rational> {
    let params = EigenstateParams {
        truncation,
        ..params.clone()
    };
    let a = overlap_polynomial(&params)?;
    let integral = integrate_polynomial(&a, &a);
    let sum = params
        .hyp_values(0)?
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (n, f)| {
            let n = n as u32;
            acc + factorial_q(n + params.q) / factorial_q(n) * f * f
        });
    if integral != sum {
        return Err(Error::Mismatch(format!(
            "{}: integral {} != sum {}",
            params.label(),
            fraction_string(&integral),
            fraction_string(&sum)
        )));
    }
    Ok(integral)
}
