//! Demonstrates the coefficient-reindexing operators U₂ (keep even
//! exponents, halve them) and V₂ (double exponents), and the parity
//! structure of the basis: every f_{k,m} is supported on exponents of
//! m's parity, so V₂U₂ returns either the element itself or zero.

use num_traits::Zero;
use wh4::basis::{make, Family};
use wh4::identities::check_parity;

fn main() {
    for m in [5, 6] {
        let elem = make(Family::F, 0, m, 20).unwrap();
        let exponents: Vec<i64> = elem
            .series
            .iter_terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, _)| e)
            .collect();
        println!("{} support: {:?}", elem.label(), exponents);
        let back = elem.series.u2().v2();
        let verdict = if back.agrees_with(&elem.series) {
            "V2 U2 f == f (even pole order)"
        } else if back.is_zero() {
            "V2 U2 f == 0 (odd pole order)"
        } else {
            "UNEXPECTED"
        };
        println!("  {verdict}");
    }

    let report = check_parity(0, 12).unwrap();
    println!(
        "\nsweep over {}: {} cells, {} counterexamples -> {}",
        report.ranges,
        report.cells_checked,
        report.counterexamples.len(),
        if report.pass() { "PASS" } else { "FAIL" }
    );
}
