//! Extracts the Faber polynomial behind several weight-0 basis elements
//! and counts its real roots in the interval (0, 16) with Sturm sequences.
//!
//! Each weight-0 element f_{0,m} is a monic integer polynomial in the
//! hauptmodul; its roots in (0, 16) are exactly the values the hauptmodul
//! takes at the element's zeros on the contour studied by `arc_scan`.

use wh4::basis::{make_with_faber, Family};
use wh4::series::rat_int;

fn main() {
    let lo = rat_int(0);
    let hi = rat_int(16);
    for m in [8, 12, 16] {
        let elem = make_with_faber(Family::F, 0, m, 8).unwrap();
        let poly = elem.faber.as_ref().expect("weight-0 elements carry a Faber polynomial");
        let degree = poly.degree().expect("nonzero");
        let roots = poly.count_roots_open(&lo, &hi).unwrap();
        println!("{}: degree {degree}, {roots} roots in (0, 16)", elem.label());
        if m == 8 {
            println!("  P(x) = {poly}");
            for (a, b) in poly.isolate_roots(&lo, &hi, &rat_int(1)).unwrap() {
                println!("  root in [{}, {}]", a, b);
            }
        }
    }
}
