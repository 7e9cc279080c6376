//! The suite registry. Each suite expands a [`Plan`] into independent jobs;
//! job order is the report order, so cases are generated in ascending
//! parameter order (`q`, then `k`, then any per-suite sample index).

use num_traits::Zero;
use qk_eigenlab_core::exact::{
    check_recurrences, fraction_string, gauss_contiguous_residual, generating_function_coeffs,
    hermite2_poly, phase_factorization_check,
};
use qk_eigenlab_core::fock::{
    check_operator_algebra, check_phase_derivative, check_radial_pde, check_xi_eigenrelations,
    check_xi_eigenrelations_exact, eigen_state_qk, entangled_state_vector, norm_growth_diagnostic,
    overlap_qk, polar, radial_equation_exact, verify_k_eigen, verify_pair_coherent, verify_q_eigen,
    EigenstateParams, FdOptions,
};
use qk_eigenlab_core::moment::{
    check_completeness, check_hermite_orthogonality, norm_integral, reconstruct_qk,
};
use qk_eigenlab_core::{ComplexRational, Rational, RealSurd, Record, Report, Status, C64};

use crate::config::Plan;

pub const SUITE_NAMES: &[&str] = &[
    "hermite",
    "contiguous",
    "operators",
    "pair-coherent",
    "q-eigen",
    "k-eigen",
    "xi-eigen",
    "overlap",
    "radial-pde",
    "phase-derivative",
    "orthogonality",
    "completeness",
    "reconstruction",
    "norm-integral",
    "norm-growth",
];

pub const HERMITE_RECURRENCE_MAX: u32 = 10;
pub const GENERATING_MAX: u32 = 6;
pub const CONTIGUOUS_MAX_N: u32 = 30;
pub const ORTHOGONALITY_MAX: u32 = 5;
pub const COMPLETENESS_MAX: u32 = 5;
pub const NORM_INTEGRAL_N: u32 = 30;
pub const NORM_GROWTH_N: u32 = 60;
/// Sample radii for the overlap and differential-equation suites.
pub const RADII: [f64; 3] = [0.5, 1.0, 1.5];
pub const PHASE: f64 = 0.3;
pub const OVERLAP_TOLERANCE: f64 = 1e-9;
pub const FLOAT_RELATION_TOLERANCE: f64 = 1e-10;

pub type Job = Box<dyn Fn() -> Report + Send + Sync>;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn crat(re: Rational, im: Rational) -> ComplexRational {
    ComplexRational::new(re, im)
}

fn grid(plan: &Plan) -> Vec<EigenstateParams> {
    plan.charges
        .iter()
        .flat_map(|&q| {
            plan.k_values
                .iter()
                .map(move |k| EigenstateParams::new(q, k.clone(), plan.truncation))
        })
        .collect()
}

fn error_record(suite: &str, case: String, identity: &str, err: impl std::fmt::Display) -> Report {
    Report::from_iter([Record::new(
        suite,
        case,
        Status::Fail,
        err.to_string(),
        identity,
    )])
}

fn per_params(
    plan: &Plan,
    f: impl Fn(&EigenstateParams) -> Report + Send + Sync + Clone + 'static,
) -> Vec<Job> {
    grid(plan)
        .into_iter()
        .map(|p| {
            let f = f.clone();
            Box::new(move || f(&p)) as Job
        })
        .collect()
}

pub fn jobs_for(suite: &str, plan: &Plan) -> Vec<Job> {
    match suite {
        "hermite" => hermite_jobs(plan),
        "contiguous" => per_params(plan, contiguous),
        "operators" => {
            let n = plan.truncation;
            vec![Box::new(move || check_operator_algebra::<RealSurd>(n))]
        }
        "pair-coherent" => pair_coherent_jobs(plan),
        "q-eigen" => per_params(plan, |p| match eigen_state_qk(p) {
            Ok(state) => {
                // the verifier sees only the vector; restore the k label
                let plain = format!("q={},N={}", p.q, p.truncation);
                let mut report = verify_q_eigen(&state, p.q as i64);
                for r in &mut report.records {
                    r.case = r.case.replacen(&plain, &p.label(), 1);
                }
                report
            }
            Err(e) => error_record("q-eigen", p.label(), "number-difference-eigenvalue", e),
        }),
        "k-eigen" => per_params(plan, |p| {
            verify_k_eigen(p).unwrap_or_else(|e| {
                error_record("k-eigen", p.label(), "pair-operator-eigenvalue", e)
            })
        }),
        "xi-eigen" => xi_jobs(plan),
        "overlap" => per_params(plan, two_path_overlap),
        "radial-pde" => {
            let opts = fd_options(plan);
            per_params(plan, move |p| radial(p, &opts))
        }
        "phase-derivative" => {
            let opts = fd_options(plan);
            per_params(plan, move |p| phase(p, &opts))
        }
        "orthogonality" => (0..=ORTHOGONALITY_MAX)
            .flat_map(|l| (0..=ORTHOGONALITY_MAX).map(move |j| (l, j)))
            .map(|(l, j)| Box::new(move || orthogonality_row(l, j)) as Job)
            .collect(),
        "completeness" => (1..=COMPLETENESS_MAX.min(plan.truncation))
            .map(|n| Box::new(move || check_completeness(n)) as Job)
            .collect(),
        "reconstruction" => per_params(plan, |p| {
            reconstruct_qk(p).unwrap_or_else(|e| {
                error_record("reconstruction", p.label(), "fock-reconstruction", e)
            })
        }),
        "norm-integral" => per_params(plan, norm_paths),
        "norm-growth" => per_params(plan, |p| {
            let list: Vec<u32> = (0..=NORM_GROWTH_N).collect();
            norm_growth_diagnostic(p, &list).report
        }),
        other => unreachable!("suite `{other}` passed validation but has no jobs"),
    }
}

fn fd_options(plan: &Plan) -> FdOptions {
    FdOptions {
        step: plan.fd_step,
        tolerance: plan.tolerance,
        ..FdOptions::default()
    }
}

fn hermite_jobs(_plan: &Plan) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for m in 0..=HERMITE_RECURRENCE_MAX {
        for n in 0..=HERMITE_RECURRENCE_MAX {
            jobs.push(Box::new(move || {
                check_recurrences(m, n).with_suite("hermite")
            }));
        }
    }
    jobs.push(Box::new(|| {
        let table = generating_function_coeffs(GENERATING_MAX, GENERATING_MAX);
        let mut report = Report::new();
        for m in 0..=GENERATING_MAX {
            for n in 0..=GENERATING_MAX {
                let diff = table[m as usize][n as usize].clone() - hermite2_poly(m, n);
                report.push(Record::new(
                    "hermite",
                    format!("m={m},n={n}"),
                    Status::from_bool(diff.is_zero()),
                    diff.render("x", "y"),
                    "generating-function",
                ));
            }
        }
        report
    }));
    let points = [crat(rat(3, 5), rat(4, 5)), crat(rat(1, 2), rat(-1, 3))];
    for q in 0..=4u32 {
        for n in 0..=GENERATING_MAX {
            let points = points.clone();
            jobs.push(Box::new(move || {
                points
                    .iter()
                    .map(|z| phase_factorization_check(n, q, z).with_suite("hermite"))
                    .collect()
            }));
        }
    }
    jobs
}

fn contiguous(p: &EigenstateParams) -> Report {
    let case = format!(
        "q={},k={},n<={CONTIGUOUS_MAX_N}",
        p.q,
        fraction_string(&p.k)
    );
    let mut bad = Vec::new();
    for n in 0..=CONTIGUOUS_MAX_N {
        match gauss_contiguous_residual(n, &p.k, p.q as i64) {
            Ok(r) if r.is_zero() => {}
            Ok(r) => bad.push(format!("n={n}: {}", fraction_string(&r))),
            Err(e) => bad.push(format!("n={n}: {e}")),
        }
    }
    Report::from_iter([Record::new(
        "contiguous",
        case,
        Status::from_bool(bad.is_empty()),
        if bad.is_empty() {
            "0".to_string()
        } else {
            bad.join("; ")
        },
        "contiguous-relation",
    )])
}

fn pair_coherent_jobs(plan: &Plan) -> Vec<Job> {
    let n = plan.truncation;
    let mut jobs: Vec<Job> = Vec::new();
    for &q in &plan.charges {
        for alpha in [rat(0, 1), rat(1, 2), rat(1, 1), rat(3, 2)] {
            jobs.push(Box::new(move || {
                verify_pair_coherent(q, &RealSurd::from_rational(&alpha), n, 0.0)
            }));
        }
        jobs.push(Box::new(move || {
            verify_pair_coherent(q, &C64::new(0.6, 0.8), n, FLOAT_RELATION_TOLERANCE)
        }));
    }
    jobs
}

fn xi_jobs(plan: &Plan) -> Vec<Job> {
    let n = plan.truncation;
    let mut jobs: Vec<Job> = Vec::new();
    let exact_points = [
        crat(rat(0, 1), rat(0, 1)),
        crat(rat(1, 2), rat(1, 3)),
        crat(rat(-3, 4), rat(1, 1)),
        crat(rat(3, 2), rat(-1, 2)),
    ];
    for z in exact_points {
        jobs.push(Box::new(move || check_xi_eigenrelations_exact(&z, n)));
    }
    for r in RADII {
        jobs.push(Box::new(move || {
            check_xi_eigenrelations(polar(r, PHASE), n, FLOAT_RELATION_TOLERANCE)
        }));
    }
    jobs
}

fn sample_case(p: &EigenstateParams, r: f64, phi: f64) -> String {
    format!("{},r={r},phi={phi}", p.label())
}

fn two_path_overlap(p: &EigenstateParams) -> Report {
    let ket = match eigen_state_qk(p) {
        Ok(s) => s.to_c64(),
        Err(e) => return error_record("overlap", p.label(), "overlap-two-path", e),
    };
    let mut report = Report::new();
    for r in RADII {
        for phi in [PHASE, 2.1] {
            let xi = polar(r, phi);
            let case = sample_case(p, r, phi);
            let record = match overlap_qk(xi, p) {
                Ok(direct) => {
                    let via = entangled_state_vector(xi, p.truncation).inner(&ket);
                    let scale = direct.norm().max(via.norm());
                    let rel = if scale == 0.0 {
                        0.0
                    } else {
                        (direct - via).norm() / scale
                    };
                    Record::new(
                        "overlap",
                        case,
                        Status::from_bool(rel <= OVERLAP_TOLERANCE),
                        format!("{rel:.6e}"),
                        "overlap-two-path",
                    )
                }
                Err(e) => Record::new(
                    "overlap",
                    case,
                    Status::Fail,
                    e.to_string(),
                    "overlap-two-path",
                ),
            };
            report.push(record);
        }
    }
    report
}

fn radial(p: &EigenstateParams, opts: &FdOptions) -> Report {
    let mut report = radial_equation_exact(p)
        .unwrap_or_else(|e| error_record("radial-pde", p.label(), "radial-euler-equation", e))
        .with_suite("radial-pde");
    for r in RADII {
        let case = sample_case(p, r, PHASE);
        report.push(match check_radial_pde(polar(r, PHASE), p, opts) {
            Ok(c) => c.record("radial-pde", &case),
            Err(e) => Record::new(
                "radial-pde",
                case,
                Status::Fail,
                e.to_string(),
                "radial-euler-equation",
            ),
        });
    }
    report
}

fn phase(p: &EigenstateParams, opts: &FdOptions) -> Report {
    let mut report = Report::new();
    for r in RADII {
        let case = sample_case(p, r, PHASE);
        match check_phase_derivative(polar(r, PHASE), p, opts) {
            Ok(checks) => {
                for c in checks {
                    report.push(c.record("phase-derivative", &case));
                }
            }
            Err(e) => report.push(Record::new(
                "phase-derivative",
                case,
                Status::Fail,
                e.to_string(),
                "phase-derivative",
            )),
        }
    }
    report
}

/// All `(m, n)` partners of one `(l, j)`: a single pass record, or every
/// failing element.
fn orthogonality_row(l: u32, j: u32) -> Report {
    let mut failures = Report::new();
    let mut diagonal = String::new();
    for m in 0..=ORTHOGONALITY_MAX {
        for n in 0..=ORTHOGONALITY_MAX {
            let r = check_hermite_orthogonality(l, j, m, n).with_suite("orthogonality");
            if (l, j) == (m, n) {
                diagonal = r.records[0].residual.clone();
            }
            failures.extend(Report::from_iter(r.failures().cloned()));
        }
    }
    if failures.records.is_empty() {
        let partners = (ORTHOGONALITY_MAX + 1).pow(2);
        Report::from_iter([Record::new(
            "orthogonality",
            format!("({l},{j})x(m,n<={ORTHOGONALITY_MAX})"),
            Status::Pass,
            format!("diagonal {diagonal}, {} off-diagonal zeros", partners - 1),
            "hermite-orthogonality",
        )])
    } else {
        failures
    }
}

fn norm_paths(p: &EigenstateParams) -> Report {
    let case = format!("q={},k={},N={NORM_INTEGRAL_N}", p.q, fraction_string(&p.k));
    let record = match norm_integral(p, NORM_INTEGRAL_N) {
        Ok(v) => Record::new(
            "norm-integral",
            case,
            Status::Pass,
            fraction_string(&v),
            "norm-integral",
        ),
        Err(e) => Record::new(
            "norm-integral",
            case,
            Status::Fail,
            e.to_string(),
            "norm-integral",
        ),
    };
    Report::from_iter([record])
}
