//! Acceptance suite: every shipped guarantee, one test per criterion group,
//! printed as one pass/fail line per criterion. Tolerances are pinned here
//! and in the named checks; run with `--nocapture` to see every line.

use fueterkit::quaternion::Quaternion;
use fueterkit::symbolic::{laplacian_monomial, rat_int, LaplacianForm, QQbarPoly};
use fueterkit::verify::{self, Check};

const SEED: u64 = 0;

fn gate(label: &str, checks: &[Check]) {
    let mut failed = Vec::new();
    for c in checks {
        if !c.pass {
            failed.push(format!(
                "{} residual {:.3e} > tol {:.1e}",
                c.check, c.max_residual, c.tolerance
            ));
        }
    }
    if failed.is_empty() {
        let detail: Vec<String> = checks
            .iter()
            .map(|c| {
                format!(
                    "{} ({:.2e} <= {:.1e})",
                    c.check, c.max_residual, c.tolerance
                )
            })
            .collect();
        println!("criterion {label}: PASS [{}]", detail.join("; "));
    } else {
        println!("criterion {label}: FAIL [{}]", failed.join("; "));
        panic!("criterion {label} failed: {}", failed.join("; "));
    }
}

#[test]
fn criterion_1a_dbar_monomials_exact() {
    gate("1a", &[verify::check_dbar_monomial_closed_form(SEED)]);
}

#[test]
fn criterion_1b_appell_decomposition_exact() {
    gate("1b", &[verify::check_dbar_appell_decomposition(SEED)]);
}

#[test]
fn criterion_1c_laplacian_forms_exact() {
    // Worked instances frozen from direct expansion of the closed forms.
    assert_eq!(
        laplacian_monomial(2, LaplacianForm::Direct).unwrap(),
        QQbarPoly::constant(rat_int(-4))
    );
    let mut lap_q3 = QQbarPoly::monomial(1, 0, rat_int(-8));
    lap_q3.add_term(0, 1, rat_int(-4));
    assert_eq!(
        laplacian_monomial(3, LaplacianForm::Appell).unwrap(),
        lap_q3
    );
    gate("1c", &[verify::check_laplacian_two_routes(SEED)]);
}

#[test]
fn criterion_1d_monogenicity_and_order2_kernels_exact() {
    gate(
        "1d",
        &[
            verify::check_appell_monogenic(SEED),
            verify::check_dbar_in_kernel_of_d2(SEED),
        ],
    );
}

#[test]
fn criterion_2_kernel_identities() {
    gate(
        "2",
        &[
            verify::check_fl_commutation_identity(SEED),
            verify::check_p2_is_fd_dbar_of_cauchy_kernel(SEED),
            verify::check_p2_d2_residual(SEED),
        ],
    );
}

#[test]
fn criterion_3_series_agreement_and_decay() {
    gate(
        "3",
        &[
            verify::check_dbar_series_matches_p2(SEED),
            verify::check_series_tail_bound_and_decay(SEED),
        ],
    );
}

#[test]
fn criterion_4_contour_formulas() {
    gate(
        "4",
        &[
            verify::check_cauchy_reproduces_values(SEED),
            verify::check_fueter_integral_matches_laplacian(SEED),
            verify::check_polyanalytic_integral_matches_dbar(SEED),
            verify::check_contour_independence(SEED),
            verify::check_contour_node_doubling(SEED),
        ],
    );
}

#[test]
fn criterion_5_operator_calculi() {
    gate(
        "5",
        &[
            verify::check_spectrum_diagonal_lift(SEED),
            verify::check_monomial_consistency(SEED),
            verify::check_p2_resolvent_vs_series(SEED),
            verify::check_well_posedness(SEED),
        ],
    );
}

#[test]
fn criterion_6_pde_residuals() {
    gate(
        "6",
        &[
            verify::check_vekua_system(SEED),
            verify::check_monogenic_residuals(SEED),
        ],
    );
}

// Worked end-to-end values from the operation contracts, frozen against
// independent expansion by hand.
#[test]
fn worked_examples_stay_frozen() {
    use fueterkit::contour::{polyanalytic_integral_eval, SliceContour};
    use fueterkit::kernel::{kernel_eval, KernelKind};
    use fueterkit::quaternion::{E1, JE1, ONE};
    use fueterkit::slice_function::SliceFunction;

    // P2L(2, e1) = (16 + 8 e1)/25.
    let p2l = kernel_eval(KernelKind::P2L, Quaternion::from_real(2.0), E1).unwrap();
    assert!((p2l - Quaternion::new(0.64, 0.32, 0.0, 0.0)).norm() <= 1e-14);

    // The integral representation of the conjugate derivative of q^2 at
    // 1 + e1 is 6q + 2qbar = 8 + 4 e1.
    let contour = SliceContour::disk(JE1, 0.0, 3.0, 256).unwrap();
    let f = SliceFunction::from_name("pow2").unwrap();
    let v = polyanalytic_integral_eval(&f, ONE + E1, &contour).unwrap();
    assert!((v - Quaternion::new(8.0, 4.0, 0.0, 0.0)).norm() <= 1e-10);

    println!("worked examples: PASS");
}
