//! Samples a weight-0 basis element along the contour z = -1/4 + e^{iθ}/4
//! and counts certified sign changes of the weighted real value, which
//! lower-bounds the number of zeros of the element on the contour.
//!
//! The weighted value is provably real on the contour; each sample carries
//! an interval enclosure, and a sample only participates in the count when
//! the enclosure excludes zero.  The count is compared against the lower
//! bound ⌊(√2/2)m + k/4⌋ and against the cosine approximant that explains
//! why the sign changes occur.

use wh4::arc::{default_window, scan_arc};
use wh4::basis::Family;
use wh4::series::decimal_string;

fn main() {
    let (lo, hi) = default_window();
    let (report, samples) = scan_arc(Family::F, 0, 16, &lo, &hi, 400, 128).unwrap();

    println!(
        "f_{{0,16}} on θ ∈ [{}, {}], {} samples at {} bits ({} series terms):",
        decimal_string(&report.theta_lo, 5),
        decimal_string(&report.theta_hi, 5),
        report.samples,
        report.bits_used,
        report.terms_used,
    );
    println!(
        "  accepted {} / {}, sign changes {} >= bound {} -> {}",
        report.accepted,
        report.samples,
        report.sign_changes,
        report.theorem_bound,
        if report.satisfied { "PASS" } else { "FAIL" }
    );
    println!(
        "  max gap to cosine approximant: {}",
        decimal_string(&report.max_cosine_gap, 4)
    );

    println!("\n  θ        weighted value   cosine target");
    for sample in samples.iter().step_by(80) {
        println!(
            "  {:<8} {:>15} {:>15}",
            decimal_string(&sample.theta, 5),
            decimal_string(&sample.weighted_value.lo_rational(), 6),
            decimal_string(&sample.cosine_target.lo_rational(), 6),
        );
    }
}
