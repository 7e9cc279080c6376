//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero when any
//! criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::Zero;
use qk_eigenlab_core::exact::{
    check_recurrences, gauss_contiguous_residual, generating_function_coeffs, hermite2_poly,
};
use qk_eigenlab_core::fock::{
    check_phase_derivative, check_radial_pde, eigen_state_qk, norm_growth_diagnostic, polar,
    verify_k_eigen, verify_q_eigen, EigenstateParams, FdOptions,
};
use qk_eigenlab_core::moment::{
    check_completeness, check_hermite_orthogonality, norm_integral, reconstruct_qk,
};
use qk_eigenlab_core::{Rational, Status};

const FD_TOLERANCE: f64 = 1e-6;
const FD_RADII: [f64; 3] = [0.5, 1.0, 1.5];
/// Step for the order study: large enough that truncation error dominates
/// rounding by several decades.
const ORDER_STUDY_STEP: f64 = 1e-2;
const ORDER_WINDOW: (f64, f64) = (1.8, 2.2);

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn k_set() -> Vec<Rational> {
    vec![
        rat(-2, 1),
        rat(-1, 1),
        rat(-1, 2),
        rat(0, 1),
        rat(1, 2),
        rat(1, 1),
        rat(2, 1),
        rat(7, 3),
    ]
}

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(problems: Vec<String>, summary: String) -> Self {
        if problems.is_empty() {
            Outcome {
                ok: true,
                detail: summary,
            }
        } else {
            let shown: Vec<_> = problems.iter().take(6).cloned().collect();
            let more = problems.len().saturating_sub(shown.len());
            let tail = if more > 0 {
                format!(" (+{more} more)")
            } else {
                String::new()
            };
            Outcome {
                ok: false,
                detail: format!("{}{tail}", shown.join("; ")),
            }
        }
    }
}

fn hermite_consistency() -> Outcome {
    let mut problems = Vec::new();
    let table = generating_function_coeffs(6, 6);
    for m in 0..=6u32 {
        for n in 0..=6u32 {
            if table[m as usize][n as usize] != hermite2_poly(m, n) {
                problems.push(format!("generating ({m},{n})"));
            }
        }
    }
    let mut identities = 0;
    for m in 0..=10 {
        for n in 0..=10 {
            let r = check_recurrences(m, n);
            identities += r.records.len();
            problems.extend(r.failures().map(|f| format!("{} {}", f.case, f.identity)));
        }
    }
    Outcome::new(
        problems,
        format!("49 generating coefficients, {identities} recurrence identities exact"),
    )
}

fn contiguous() -> Outcome {
    let mut problems = Vec::new();
    let mut count = 0;
    for q in 0..=5i64 {
        for k in k_set() {
            for n in 0..=30 {
                count += 1;
                match gauss_contiguous_residual(n, &k, q) {
                    Ok(r) if r.is_zero() => {}
                    Ok(r) => problems.push(format!("q={q},k={k},n={n}: {r}")),
                    Err(e) => problems.push(format!("q={q},k={k},n={n}: {e}")),
                }
            }
        }
    }
    Outcome::new(problems, format!("{count} residuals exactly 0"))
}

fn orthogonality() -> Outcome {
    let mut problems = Vec::new();
    let mut count = 0;
    for l in 0..=5 {
        for j in 0..=5 {
            for m in 0..=5 {
                for n in 0..=5 {
                    count += 1;
                    let r = check_hermite_orthogonality(l, j, m, n);
                    problems.extend(r.failures().map(|f| format!("{}: {}", f.case, f.residual)));
                }
            }
        }
    }
    for n in 1..=5 {
        let r = check_completeness(n);
        problems.extend(r.failures().map(|f| format!("{}: {}", f.case, f.residual)));
    }
    Outcome::new(
        problems,
        format!("{count} quadruples exact, completeness identity for N=1..5"),
    )
}

fn main_theorem() -> Outcome {
    let mut problems = Vec::new();
    let mut boundary = 0;
    let mut cases = 0;
    for q in 0..=5u32 {
        for k in k_set() {
            cases += 1;
            let p = EigenstateParams::new(q, k, 20);
            match eigen_state_qk(&p) {
                Ok(state) => {
                    let r = verify_q_eigen(&state, q as i64);
                    problems.extend(
                        r.failures()
                            .map(|f| format!("Q {}: {}", f.case, f.residual)),
                    );
                }
                Err(e) => problems.push(format!("{}: {e}", p.label())),
            }
            match verify_k_eigen(&p) {
                Ok(r) => {
                    problems.extend(
                        r.failures()
                            .map(|f| format!("K {}: {}", f.case, f.residual)),
                    );
                    for rec in &r.records {
                        let layer: u32 = rec
                            .case
                            .rsplit('=')
                            .next()
                            .and_then(|s| s.parse().ok())
                            .unwrap_or(0);
                        let interior = layer < p.truncation - q;
                        if interior && rec.residual != "0" {
                            problems.push(format!("K interior {}: {}", rec.case, rec.residual));
                        }
                        if rec.status == Status::BoundaryExpected {
                            boundary += 1;
                        }
                    }
                }
                Err(e) => problems.push(format!("{}: {e}", p.label())),
            }
        }
    }
    Outcome::new(
        problems,
        format!("{cases} cases: Q residual 0, K interior 0, {boundary} boundary-layer residuals"),
    )
}

fn reconstruction() -> Outcome {
    let mut problems = Vec::new();
    let mut layers = 0;
    for q in 0..=3u32 {
        for k in k_set() {
            for n in (q + 2)..=10 {
                match reconstruct_qk(&EigenstateParams::new(q, k.clone(), n)) {
                    Ok(r) => {
                        layers += r.records.len();
                        problems
                            .extend(r.failures().map(|f| format!("{}: {}", f.case, f.residual)));
                    }
                    Err(e) => problems.push(e.to_string()),
                }
            }
        }
    }
    Outcome::new(problems, format!("{layers} layer records exact"))
}

fn differential_equations() -> Outcome {
    let mut problems = Vec::new();
    let mut checks = 0;
    let mut by_allowance = 0;
    let mut worst: f64 = 0.0;
    let mut orders: Vec<f64> = Vec::new();
    let tol_opts = FdOptions {
        tolerance: FD_TOLERANCE,
        ..FdOptions::default()
    };
    // the order study only measures convergence; its tolerance is not the
    // acceptance tolerance
    let order_opts = FdOptions {
        step: ORDER_STUDY_STEP,
        tolerance: f64::INFINITY,
        ..FdOptions::default()
    };
    for q in 0..=3u32 {
        for k in [rat(-1, 1), rat(0, 1), rat(1, 2), rat(1, 1), rat(2, 1)] {
            for n in [14u32, 18] {
                let p = EigenstateParams::new(q, k.clone(), n);
                for r in FD_RADII {
                    let xi = polar(r, 0.3);
                    let run = |opts: &FdOptions, problems: &mut Vec<String>| {
                        let mut out = Vec::new();
                        match check_radial_pde(xi, &p, opts) {
                            Ok(c) => out.push(c),
                            Err(e) => problems.push(format!("{} r={r}: {e}", p.label())),
                        }
                        match check_phase_derivative(xi, &p, opts) {
                            Ok(cs) => out.extend(cs),
                            Err(e) => problems.push(format!("{} r={r}: {e}", p.label())),
                        }
                        out
                    };
                    for c in run(&tol_opts, &mut problems) {
                        checks += 1;
                        worst = worst.max(c.rel_err);
                        if c.passed && c.rel_err > FD_TOLERANCE {
                            by_allowance += 1;
                        }
                        if !c.passed {
                            problems.push(format!(
                                "{} r={r} {}: {:.3e}",
                                p.label(),
                                c.identity,
                                c.rel_err
                            ));
                        }
                    }
                    for c in run(&order_opts, &mut problems) {
                        match c.observed_order {
                            Some(o) if (ORDER_WINDOW.0..=ORDER_WINDOW.1).contains(&o) => {
                                orders.push(o)
                            }
                            // q = 0 overlaps are phase independent, so the
                            // error is pure rounding and carries no order
                            None if c.identity == "phase-derivative-overlap" && q == 0 => {}
                            other => problems.push(format!(
                                "{} r={r} {}: order {other:?} at error {:.3e}",
                                p.label(),
                                c.identity,
                                c.rel_err
                            )),
                        }
                    }
                }
            }
        }
    }
    let (lo, hi) = orders
        .iter()
        .fold((f64::MAX, f64::MIN), |(a, b), &o| (a.min(o), b.max(o)));
    Outcome::new(
        problems,
        format!(
            "{checks} checks pass at h=1e-4 ({} within {FD_TOLERANCE:e}, {by_allowance} by the C*h^2 allowance, worst {worst:.3e}); {} orders at h=1e-2 in [{lo:.3}, {hi:.3}]",
            checks - by_allowance,
            orders.len()
        ),
    )
}

fn divergence() -> Outcome {
    let list: Vec<u32> = (0..=60).collect();
    let mut cases = 0;
    let mut by_identity: std::collections::BTreeMap<String, Vec<String>> = Default::default();
    let mut integral_problems = Vec::new();
    for q in 0..=5u32 {
        for k in k_set() {
            cases += 1;
            let p = EigenstateParams::new(q, k.clone(), 60);
            let g = norm_growth_diagnostic(&p, &list);
            for rec in &g.report.records {
                let entry = by_identity.entry(rec.identity.clone()).or_default();
                if rec.status == Status::Fail {
                    entry.push(format!("(q={q},k={k})"));
                }
            }
            for n in q..=30 {
                if let Err(e) = norm_integral(&p, n) {
                    integral_problems.push(e.to_string());
                }
            }
        }
    }
    let mut problems = Vec::new();
    let mut parts = Vec::new();
    for (identity, failing) in &by_identity {
        if failing.is_empty() {
            parts.push(format!("{identity}: {cases}/{cases}"));
        } else {
            let shown: Vec<_> = failing.iter().take(4).cloned().collect();
            problems.push(format!(
                "{identity}: fails for {}/{cases} cases, e.g. {}",
                failing.len(),
                shown.join(" ")
            ));
        }
    }
    if integral_problems.is_empty() {
        parts.push(format!("integral = sum: {cases}/{cases} for N <= 30"));
    } else {
        problems.push(format!("integral != sum: {}", integral_problems.join("; ")));
    }
    if !problems.is_empty() {
        problems.push(format!("holding: {}", parts.join(", ")));
    }
    Outcome::new(problems, parts.join(", "))
}

fn cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_qk-eigenlab");
    let config = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs/default.json");
    let dir = tempfile::tempdir().expect("temp dir");
    let mut problems = Vec::new();
    let mut outputs = Vec::new();
    for (i, threads) in ["1", "4"].iter().enumerate() {
        let out = dir.path().join(format!("report{i}.json"));
        let status = Command::new(bin)
            .arg("verify")
            .arg(&config)
            .arg("--output")
            .arg(&out)
            .env("QK_EIGENLAB_THREADS", threads)
            .output()
            .expect("run verify");
        let code = status.status.code();
        if code != Some(0) {
            let failing = String::from_utf8_lossy(&status.stderr).lines().count();
            problems.push(format!(
                "run {i} exited {code:?} with {failing} failing records"
            ));
        }
        outputs.push(std::fs::read(&out).unwrap_or_default());
    }
    if outputs[0].is_empty() || outputs[0] != outputs[1] {
        problems.push("reports differ between runs".into());
    } else if !problems.is_empty() {
        problems.push("reports byte-identical".into());
    }
    Outcome::new(problems, "exit 0 twice, reports byte-identical".into())
}

fn main() {
    type Criterion = (u32, &'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        (
            1,
            "hermite consistency",
            Duration::from_secs(5),
            hermite_consistency,
        ),
        (2, "contiguous relation", Duration::from_secs(5), contiguous),
        (
            3,
            "orthogonality and completeness",
            Duration::from_secs(30),
            orthogonality,
        ),
        (
            4,
            "Q and K eigen-relations at N=20",
            Duration::from_secs(10),
            main_theorem,
        ),
        (5, "reconstruction", Duration::MAX, reconstruction),
        (
            6,
            "radial and phase differential equations",
            Duration::MAX,
            differential_equations,
        ),
        (7, "norm divergence diagnostic", Duration::MAX, divergence),
        (8, "cli determinism", Duration::MAX, cli_determinism),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let ok = outcome.ok && in_time;
        if !ok {
            failed += 1;
        }
        let budget = if limit == Duration::MAX {
            String::new()
        } else {
            format!(" / limit {:.0?}", limit)
        };
        let late = if in_time { "" } else { " [over time limit]" };
        println!(
            "{} criterion {id} ({name}) [{:.2?}{budget}]{late}: {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed,
            outcome.detail
        );
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
