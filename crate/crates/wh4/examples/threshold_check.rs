//! Certifies the closing step of the zero-location argument for several
//! (weight, pole-order) pairs: once the pole order m reaches the
//! weight-dependent threshold, a certified product of a per-pole decay
//! factor, a per-weight growth ratio, and fixed contour bounds drops
//! below 2, forcing the expected number of zeros onto the contour.
//!
//! The expensive contour bounds are computed once and shared across pairs.

use wh4::certify::{certify_theorem1_with, core_bounds, pole_threshold};
use wh4::series::decimal_string;

fn main() {
    println!("thresholds (pole order at which the estimate applies):");
    for ell in -3..=3 {
        println!("  weight {:>2}: m >= {}", 2 * ell, pole_threshold(ell));
    }

    let bits = 160;
    let core = core_bounds(bits).unwrap();
    println!(
        "\nshared certified bounds: decay <= {}, ratios <= {} / {}, quotient total <= {}",
        decimal_string(&core.decay.hi_rational(), 4),
        decimal_string(&core.ratio_pos.hi_rational(), 4),
        decimal_string(&core.ratio_neg.hi_rational(), 4),
        decimal_string(&core.quotient_total.hi_rational(), 4),
    );

    println!();
    for (ell, m) in [(0, 16), (0, 20), (1, 20), (2, 24), (-1, 21)] {
        let report = certify_theorem1_with(&core, ell, m, bits);
        println!(
            "weight {:>2}, pole order {m:>2}: applicable={} certificates={} -> {}",
            2 * ell,
            report.applicable,
            report.reports.len(),
            if report.all_pass { "PASS" } else { "FAIL" }
        );
    }
}
