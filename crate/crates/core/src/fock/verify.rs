//! Eigen-relation verifiers with explicit truncation boundaries.

use num_traits::Zero;

use crate::error::Result;
use crate::exact::rational::{complex_fraction_string, int_q};
use crate::fock::lattice::{FockIndex, FockVector};
use crate::fock::operators::{build_ladder_ops, lattice, LadderOps};
use crate::fock::states::{
    eigen_state_qk, entangled_state_exact, entangled_state_vector, pair_coherent_state,
    EigenstateParams,
};
use crate::report::{Record, Report, Status};
use crate::scalar::Scalar;
use crate::{ComplexRational, ComplexSurd, RealSurd, C64};

fn residual_ok<T: Scalar>(r: &T, tol: f64, scale: f64) -> bool {
    r.is_zero() || r.magnitude() <= tol * scale
}

/// `(Q − q)|ψ⟩ = 0`. `Q` is diagonal, so the residual is exact for every
/// scalar type; any amplitude outside the charge-`q` sector is reported with
/// its index.
pub fn verify_q_eigen<T: Scalar>(state: &FockVector<T>, q: i64) -> Report {
    let case = format!("q={q},N={}", state.truncation());
    let residual = if state.truncation() == 0 {
        // no ladder operators on a one-point lattice; Q is the zero matrix
        state.clone().filter(|i| i.charge() != q)
    } else {
        let ops: LadderOps<T> = build_ladder_ops(state.truncation());
        ops.q
            .apply(state)
            .sub(&state.scale(&T::from_rational(&int_q(q))))
    };
    if residual.is_zero() {
        return Report::from_iter([Record::new(
            "q-eigen",
            case,
            Status::Pass,
            "0",
            "number-difference-eigenvalue",
        )]);
    }
    residual
        .iter()
        .map(|(idx, r)| {
            Record::new(
                "q-eigen",
                format!("{case},index={idx}"),
                Status::Fail,
                r.render(),
                "number-difference-eigenvalue",
            )
        })
        .collect()
}

/// `(ab − a†b† − (q−k−1))|q,k⟩`, evaluated exactly layer by layer.
///
/// The operators are built on `N + 1` so the creation part is not clipped.
/// Layers `n < n_max` must vanish (equivalent to the contiguous relation at
/// `n`); layers `n_max` and `n_max + 1` carry the truncation residual and are
/// reported as `boundary-expected` when nonzero.
pub fn verify_k_eigen(params: &EigenstateParams) -> Result<Report> {
    let n_max = params.n_max()?;
    let state = eigen_state_qk(params)?;
    let ops: LadderOps<RealSurd> = build_ladder_ops(params.truncation + 1);
    let lambda = RealSurd::from_rational(&params.eigenvalue());
    let residual = ops
        .k
        .apply(&state)
        .sub(&state.embed(params.truncation + 1).scale(&lambda));

    let q = params.q;
    let mut report = Report::new();
    for n in 0..=n_max + 1 {
        let idx = FockIndex::new(n + q, n);
        let r = residual.get(idx);
        let status = match (n < n_max, r.is_zero()) {
            (_, true) => Status::Pass,
            (true, false) => Status::Fail,
            (false, false) => Status::BoundaryExpected,
        };
        report.push(Record::new(
            "k-eigen",
            format!("{},layer={n}", params.label()),
            status,
            r.render(),
            "pair-operator-eigenvalue",
        ));
    }
    for (idx, r) in residual.iter() {
        if idx.charge() != q as i64 {
            report.push(Record::new(
                "k-eigen",
                format!("{},index={idx}", params.label()),
                Status::Fail,
                r.render(),
                "pair-operator-eigenvalue",
            ));
        }
    }
    Ok(report)
}

/// `ab|q,α⟩ = α|q,α⟩` on layers below the top; the top layer loses its
/// partner and is a boundary. `tol` is relative to `|α|·|c_n|` (pass 0 for
/// exact scalars).
pub fn verify_pair_coherent<T: Scalar>(q: u32, alpha: &T, truncation: u32, tol: f64) -> Report {
    let case = format!("q={q},alpha={},N={truncation}", alpha.render());
    if truncation < q + 1 || truncation == 0 {
        return Report::from_iter([Record::new(
            "pair-coherent",
            case,
            Status::Fail,
            "truncation leaves no interior layer",
            "pair-annihilation-eigenvalue",
        )]);
    }
    let state = pair_coherent_state(q, alpha, truncation);
    let ops: LadderOps<T> = build_ladder_ops(truncation);
    let pair = ops.a.compose(&ops.b);
    let residual = pair.apply(&state).sub(&state.scale(alpha));
    let n_max = truncation - q;
    let mut report = Report::new();
    for n in 0..=n_max {
        let idx = FockIndex::new(n + q, n);
        let r = residual.get(idx);
        let scale = alpha.magnitude() * state.get(idx).magnitude();
        let ok = residual_ok(&r, tol, scale);
        let status = match (n < n_max, ok) {
            (_, true) => Status::Pass,
            (true, false) => Status::Fail,
            (false, false) => Status::BoundaryExpected,
        };
        report.push(Record::new(
            "pair-coherent",
            format!("{case},layer={n}"),
            status,
            r.render(),
            "pair-annihilation-eigenvalue",
        ));
    }
    let q_report = verify_q_eigen(&state, q as i64).with_suite("pair-coherent");
    report.extend(q_report);
    report
}

struct RelationResidual<T> {
    name: &'static str,
    residual: FockVector<T>,
}

fn summarise_xi<T: Scalar>(
    case: &str,
    truncation: u32,
    relations: Vec<RelationResidual<T>>,
    tol: f64,
    scale: f64,
) -> Report {
    let interior = |i: &FockIndex| i.na < truncation && i.nb < truncation;
    let mut report = Report::new();
    for rel in relations {
        let worst_interior = rel
            .residual
            .iter()
            .filter(|(i, _)| interior(i))
            .map(|(_, r)| r.magnitude())
            .fold(0.0f64, f64::max);
        let bad: Vec<String> = rel
            .residual
            .iter()
            .filter(|(i, r)| interior(i) && !residual_ok(*r, tol, scale))
            .map(|(i, _)| i.to_string())
            .collect();
        let residual_text = if bad.is_empty() {
            if tol == 0.0 {
                "0".to_string()
            } else {
                format!("{worst_interior:.6e}")
            }
        } else {
            format!("{worst_interior:.6e} at {}", bad.join(" "))
        };
        report.push(Record::new(
            "xi-eigen",
            format!("{case},interior"),
            Status::from_bool(bad.is_empty()),
            residual_text,
            rel.name,
        ));
        let boundary: Vec<_> = rel.residual.iter().filter(|(i, _)| !interior(i)).collect();
        let worst_boundary = boundary
            .iter()
            .map(|(_, r)| r.magnitude())
            .fold(0.0f64, f64::max);
        report.push(Record::new(
            "xi-eigen",
            format!("{case},boundary"),
            if boundary.is_empty() {
                Status::Pass
            } else {
                Status::BoundaryExpected
            },
            format!(
                "{} nonzero components, max {worst_boundary:.6e}",
                boundary.len()
            ),
            rel.name,
        ));
    }
    report
}

/// `(a + b†)|ξ⟩ = ξ|ξ⟩` and `(a† + b)|ξ⟩ = ξ*|ξ⟩` with exact amplitudes.
/// Components with `l, j ≤ N−1` must vanish exactly; the outer shell is the
/// truncation boundary.
pub fn check_xi_eigenrelations_exact(xi: &ComplexRational, truncation: u32) -> Report {
    let case = format!("xi={},N={truncation}", complex_fraction_string(xi));
    let state = entangled_state_exact(xi, truncation);
    let ops: LadderOps<ComplexSurd> = build_ladder_ops(truncation.max(1));
    let xi_s = ComplexSurd::from_coeff(xi.clone());
    let xi_bar = ComplexSurd::from_coeff(xi.conj());
    let plus = ops.a.add(&ops.b_dag).apply(&state).sub(&state.scale(&xi_s));
    let minus = ops
        .a_dag
        .add(&ops.b)
        .apply(&state)
        .sub(&state.scale(&xi_bar));
    summarise_xi(
        &case,
        truncation,
        vec![
            RelationResidual {
                name: "a-plus-b-dagger",
                residual: plus,
            },
            RelationResidual {
                name: "a-dagger-plus-b",
                residual: minus,
            },
        ],
        0.0,
        0.0,
    )
}

/// Floating-point version of [`check_xi_eigenrelations_exact`]; interior
/// residuals must be below `tol` relative to the largest amplitude of
/// `|ξ|·|ψ|` and of the operator image.
pub fn check_xi_eigenrelations(xi: C64, truncation: u32, tol: f64) -> Report {
    let case = format!("xi={:.6e}{:+.6e}i,N={truncation}", xi.re, xi.im);
    let state = entangled_state_vector(xi, truncation);
    let ops: LadderOps<C64> = build_ladder_ops(truncation.max(1));
    let left = ops.a.add(&ops.b_dag).apply(&state);
    let right = ops.a_dag.add(&ops.b).apply(&state);
    let biggest = |v: &FockVector<C64>| v.iter().map(|(_, x)| x.norm()).fold(0.0f64, f64::max);
    let scale = biggest(&left)
        .max(biggest(&right))
        .max(xi.norm() * biggest(&state));
    let plus = left.sub(&state.scale(&xi));
    let minus = right.sub(&state.scale(&xi.conj()));
    summarise_xi(
        &case,
        truncation,
        vec![
            RelationResidual {
                name: "a-plus-b-dagger",
                residual: plus,
            },
            RelationResidual {
                name: "a-dagger-plus-b",
                residual: minus,
            },
        ],
        tol,
        scale,
    )
}

/// Adjointness of the ladder pairs, diagonal `Q`, and `[K, Q] = 0`.
pub fn check_operator_algebra<T: Scalar>(truncation: u32) -> Report {
    let ops: LadderOps<T> = build_ladder_ops(truncation);
    let case = format!("N={truncation}");
    let mut report = Report::new();
    let mut push = |identity: &str, ok: bool, detail: String| {
        report.push(Record::new(
            "operator-algebra",
            case.clone(),
            Status::from_bool(ok),
            detail,
            identity,
        ));
    };
    let adj_a = ops.a_dag.sub(&ops.a.adjoint());
    push(
        "a-adjoint",
        adj_a.is_zero(),
        format!("{} nonzero entries", adj_a.nnz()),
    );
    let adj_b = ops.b_dag.sub(&ops.b.adjoint());
    push(
        "b-adjoint",
        adj_b.is_zero(),
        format!("{} nonzero entries", adj_b.nnz()),
    );
    let off_diag = ops.q.entries().filter(|(r, c, _)| r != c).count();
    let wrong_diag = lattice(truncation)
        .filter(|&i| ops.q.get(i, i) != T::from_rational(&int_q(i.charge())))
        .count();
    push(
        "number-difference-diagonal",
        off_diag == 0 && wrong_diag == 0,
        format!("{off_diag} off-diagonal, {wrong_diag} wrong diagonal"),
    );
    let comm = ops.k.commutator(&ops.q);
    push(
        "charge-conservation",
        comm.is_zero(),
        format!("{} nonzero entries", comm.nnz()),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn q_eigen_examples() {
        let s = eigen_state_qk(&EigenstateParams::new(0, q(1, 1), 8)).unwrap();
        assert!(verify_q_eigen(&s, 0).passed());
        let s = eigen_state_qk(&EigenstateParams::new(3, q(2, 1), 10)).unwrap();
        assert!(verify_q_eigen(&s, 3).passed());
    }

    #[test]
    fn q_eigen_flags_contaminant() {
        let mut s = eigen_state_qk(&EigenstateParams::new(1, q(0, 1), 6)).unwrap();
        s.set(FockIndex::new(0, 1), RealSurd::from_rational(&q(1, 3)));
        let r = verify_q_eigen(&s, 1);
        assert!(!r.passed());
        let fails: Vec<_> = r.failures().collect();
        assert_eq!(fails.len(), 1);
        assert!(fails[0].case.ends_with("index=|0,1>"));
    }

    #[test]
    fn k_eigen_interior_exact_and_boundary_declared() {
        for (qq, k) in [(0u32, q(0, 1)), (2, q(1, 1)), (1, q(-1, 2)), (3, q(7, 3))] {
            let p = EigenstateParams::new(qq, k, 12);
            let r = verify_k_eigen(&p).unwrap();
            assert!(r.passed(), "{}", p.label());
            let n_max = 12 - qq;
            for rec in &r.records {
                let layer: u32 = rec.case.rsplit('=').next().unwrap().parse().unwrap();
                if layer < n_max {
                    assert_eq!(rec.residual, "0");
                }
            }
        }
    }

    #[test]
    fn k_eigen_degenerate_truncations() {
        let p = EigenstateParams::new(2, q(1, 2), 3);
        assert!(verify_k_eigen(&p).unwrap().passed());
        let p = EigenstateParams::new(2, q(1, 2), 2);
        let r = verify_k_eigen(&p).unwrap();
        assert!(r.passed());
        assert_eq!(r.count(Status::Pass) + r.count(Status::BoundaryExpected), 2);
        assert!(verify_k_eigen(&EigenstateParams::new(4, q(0, 1), 3)).is_err());
    }

    #[test]
    fn k_eigen_detects_a_wrong_eigenvalue() {
        // F(n) computed for k but checked against the eigenvalue of k + 1
        let p = EigenstateParams::new(1, q(1, 2), 8);
        let state = eigen_state_qk(&p).unwrap();
        let ops: LadderOps<RealSurd> = build_ladder_ops(9);
        let wrong = RealSurd::from_rational(&(p.eigenvalue() - q(1, 1)));
        let r = ops.k.apply(&state).sub(&state.embed(9).scale(&wrong));
        assert!(!r.get(FockIndex::new(1, 0)).is_zero());
    }

    #[test]
    fn pair_coherent_interior_exact() {
        let alpha = RealSurd::from_rational(&q(1, 1));
        let r = verify_pair_coherent(2, &alpha, 6, 0.0);
        assert!(r.passed());
        let boundary = r
            .records
            .iter()
            .filter(|x| x.status == Status::BoundaryExpected)
            .count();
        assert_eq!(boundary, 1);
        let alpha = ComplexSurd::from_coeff(ComplexRational::new(q(2, 3), q(-1, 2)));
        assert!(verify_pair_coherent(1, &alpha, 7, 0.0).passed());
        let r = verify_pair_coherent(0, &RealSurd::zero(), 3, 0.0);
        assert!(r.passed());
        assert_eq!(r.count(Status::BoundaryExpected), 0);
        assert!(verify_pair_coherent(1, &C64::new(0.3, 1.2), 9, 1e-13).passed());
    }

    #[test]
    fn xi_relations_exact() {
        let r = check_xi_eigenrelations_exact(&ComplexRational::new(q(3, 2), q(-1, 3)), 8);
        assert!(r.passed());
        assert_eq!(r.count(Status::BoundaryExpected), 2);
        assert!(check_xi_eigenrelations_exact(&ComplexRational::new(q(0, 1), q(0, 1)), 5).passed());
    }

    #[test]
    fn xi_relations_float() {
        assert!(check_xi_eigenrelations(C64::new(1.2, 0.7), 12, 1e-10).passed());
        assert!(check_xi_eigenrelations(C64::new(0.0, 0.0), 6, 1e-10).passed());
    }

    #[test]
    fn operator_algebra_exact_and_float() {
        for n in 1..=5 {
            assert!(check_operator_algebra::<RealSurd>(n).passed());
            assert!(check_operator_algebra::<C64>(n).passed());
            assert!(check_operator_algebra::<f32>(n).passed());
        }
    }
}
