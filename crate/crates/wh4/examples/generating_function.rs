//! Checks the two-variable generating function for a column of the basis
//! and the differential relation tying the weight-0 column to weight 2.
//!
//! For each even weight k the sum Σ_m f_{k,m}(z) r^m collapses to a single
//! closed-form quotient of named forms; we verify the cross-multiplied
//! identity as a polynomial identity in r with q-series coefficients.
//! Separately, q d/dq applied to the first weight-0 basis element lands
//! exactly on the negative of the first weight-2 element of the g-family.

use wh4::identities::{check_derivative, check_genfn};

fn main() {
    for k in [-4, -2, 0, 2, 4, 6] {
        let report = check_genfn(k, 10, 10).unwrap();
        println!(
            "weight {k:>2}: {} ({} cells) -> {}",
            report.identity,
            report.cells_checked,
            if report.pass() { "PASS" } else { "FAIL" }
        );
    }

    let report = check_derivative(60).unwrap();
    println!(
        "\n{} ({} coefficients compared) -> {}",
        report.identity,
        report.cells_checked,
        if report.pass() { "PASS" } else { "FAIL" }
    );
}
