//! Shows the duality between the coefficient grids of weights k and
//! 2-k: the n-th coefficient of f_{k,m} is the negative of the m-th
//! coefficient of g_{2-k,n}.  Prints a small grid side by side, then
//! runs the exhaustive sweep.

use wh4::basis::{cached, Family};
use wh4::identities::check_duality;

fn main() {
    let k = 6;
    let ell = k / 2;
    println!("a_{k}(m,n) from f_{{{k},m}} versus -b_{}(n,m) from g_{{{},n}}:", 2 - k, 2 - k);
    for m in -ell..=2 {
        let f = cached(Family::F, k, m, 12).unwrap();
        for n in (ell + 1)..=(ell + 3) {
            let g = cached(Family::G, 2 - k, n, 12).unwrap();
            let a = f.series.coeff(n);
            let b = g.series.coeff(m);
            println!(
                "  m={m:>2} n={n}:  a = {a:>10}   -b = {:>10}   {}",
                -b.clone(),
                if a == -b { "equal" } else { "MISMATCH" }
            );
        }
    }

    let report = check_duality(k, 10, 10).unwrap();
    println!(
        "\nsweep over {}: {} cells, {} counterexamples -> {}",
        report.ranges,
        report.cells_checked,
        report.counterexamples.len(),
        if report.pass() { "PASS" } else { "FAIL" }
    );
}
