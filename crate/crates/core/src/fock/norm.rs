//! Growth of the truncated norm `Σ_{n≤N} (n+q)!/n! · F(n)²`.

use num_traits::Zero;

use crate::exact::hyper::qk_hyp_values;
use crate::exact::rational::{factorial_q, fraction_string};
use crate::fock::states::EigenstateParams;
use crate::report::{Record, Report, Status};
use crate::Rational;

/// Minimum size a window maximum must keep for the terms to count as not
/// tending to zero over the sampled range.
pub const DIVERGENCE_FLOOR: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct NormRow {
    pub n: u32,
    pub term: Rational,
    pub partial_sum: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormGrowth {
    /// One row per requested truncation.
    pub rows: Vec<NormRow>,
    /// Window `j` covers `n + 1 ∈ [2^j, 2^{j+1})`; only windows that fit
    /// inside the sampled range are listed.
    pub window_maxima: Vec<Rational>,
    pub window_sums: Vec<Rational>,
    pub report: Report,
}

/// Partial sums `S_N` for each `N` in `n_list` (increasing), with three
/// diagnostics: `S_N` nondecreasing, every dyadic window maximum above
/// [`DIVERGENCE_FLOOR`], and dyadic window maxima nondecreasing.
pub fn norm_growth_diagnostic(params: &EigenstateParams, n_list: &[u32]) -> NormGrowth {
    let case = format!("q={},k={}", params.q, fraction_string(&params.k));
    let mut report = Report::new();
    let increasing = n_list.windows(2).all(|w| w[0] < w[1]);
    let Some(&top) = n_list.last().filter(|_| increasing) else {
        report.push(Record::new(
            "norm-growth",
            case,
            Status::Fail,
            "truncation list must be nonempty and increasing",
            "partial-sums-nondecreasing",
        ));
        return NormGrowth {
            rows: vec![],
            window_maxima: vec![],
            window_sums: vec![],
            report,
        };
    };

    let q = params.q;
    let values = qk_hyp_values(&params.k, q, top);
    let terms: Vec<Rational> = values
        .iter()
        .enumerate()
        .map(|(n, f)| factorial_q(n as u32 + q) / factorial_q(n as u32) * f * f)
        .collect();
    let mut partial = Vec::with_capacity(terms.len());
    let mut running = Rational::zero();
    for t in &terms {
        running += t;
        partial.push(running.clone());
    }

    let rows: Vec<NormRow> = n_list
        .iter()
        .map(|&n| NormRow {
            n,
            term: terms[n as usize].clone(),
            partial_sum: partial[n as usize].clone(),
        })
        .collect();

    // every term is a square times a positive ratio, so this can only fail
    // on a broken implementation
    let monotone = partial.windows(2).all(|w| w[0] <= w[1])
        && rows
            .windows(2)
            .all(|w| w[0].partial_sum <= w[1].partial_sum);
    report.push(Record::new(
        "norm-growth",
        format!("{case},N<={top}"),
        Status::from_bool(monotone),
        fraction_string(&partial[top as usize]),
        "partial-sums-nondecreasing",
    ));

    let mut window_maxima = Vec::new();
    let mut window_sums = Vec::new();
    let mut j = 0u32;
    while (1u64 << (j + 1)) - 2 <= top as u64 {
        let lo = (1usize << j) - 1;
        let hi = (1usize << (j + 1)) - 1;
        let slice = &terms[lo..hi];
        window_maxima.push(slice.iter().max().cloned().unwrap_or_else(Rational::zero));
        window_sums.push(slice.iter().fold(Rational::zero(), |a, t| a + t));
        j += 1;
    }
    let as_f64 = |r: &Rational| num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN);
    let listing = |v: &[Rational]| {
        v.iter()
            .map(|x| format!("{:.4e}", as_f64(x)))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let floor_ok = window_maxima.iter().all(|m| as_f64(m) >= DIVERGENCE_FLOOR);
    report.push(Record::new(
        "norm-growth",
        format!("{case},N<={top}"),
        Status::from_bool(floor_ok),
        listing(&window_maxima),
        "window-maxima-above-floor",
    ));
    let drops: Vec<String> = window_maxima
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] < w[0])
        .map(|(i, _)| format!("{}->{}", i, i + 1))
        .collect();
    report.push(Record::new(
        "norm-growth",
        format!("{case},N<={top}"),
        Status::from_bool(drops.is_empty()),
        if drops.is_empty() {
            listing(&window_maxima)
        } else {
            format!(
                "{} (drops at windows {})",
                listing(&window_maxima),
                drops.join(",")
            )
        },
        "window-maxima-nondecreasing",
    ));

    NormGrowth {
        rows,
        window_maxima,
        window_sums,
        report,
    }
}
