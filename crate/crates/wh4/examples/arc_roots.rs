//! Cross-checks the two independent zero-counting methods for a weight-0
//! basis element: the sign-change scan along the contour, and Sturm root
//! counting on the Faber polynomial mapped into the matching window of
//! hauptmodul values.
//!
//! Every contour zero of f_{0,m} corresponds to a real root of its Faber
//! polynomial under the hauptmodul; restricting the Sturm count to the
//! window swept by the scan must reproduce the scan's sign-change count.

use wh4::arc::{default_window, faber_roots_to_theta, psi_window_of_theta_window, scan_arc};
use wh4::basis::{make_with_faber, Family};
use wh4::series::decimal_string;

fn main() {
    let (theta_lo, theta_hi) = default_window();
    let bits = 128;

    let elem = make_with_faber(Family::F, 0, 16, 8).unwrap();
    let poly = elem.faber.as_ref().unwrap();

    let (psi_lo, psi_hi) = psi_window_of_theta_window(&theta_lo, &theta_hi, bits).unwrap();
    println!(
        "θ ∈ [{}, {}] maps to hauptmodul window [{}, {}]",
        decimal_string(&theta_lo, 5),
        decimal_string(&theta_hi, 5),
        decimal_string(&psi_lo, 6),
        decimal_string(&psi_hi, 6),
    );

    let sturm = poly.count_roots_open(&psi_lo, &psi_hi).unwrap();
    println!("Sturm count for {} in that window: {sturm}", elem.label());

    let roots = faber_roots_to_theta(poly, bits).unwrap();
    println!("all {} real roots, mapped back to contour angles:", roots.len());
    for (psi_value, theta_mid) in &roots {
        let inside = *theta_mid >= theta_lo && *theta_mid <= theta_hi;
        println!(
            "  hauptmodul {:<10} θ ≈ {:<9} {}",
            decimal_string(psi_value, 6),
            decimal_string(theta_mid, 5),
            if inside { "(in window)" } else { "" }
        );
    }

    let (report, _) = scan_arc(Family::F, 0, 16, &theta_lo, &theta_hi, 400, bits).unwrap();
    println!(
        "scan sign changes: {} -> {}",
        report.sign_changes,
        if report.sign_changes == sturm {
            "agrees with Sturm count"
        } else {
            "MISMATCH"
        }
    );
}
