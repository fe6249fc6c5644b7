//! Constructs representatives of the four canonical basis families and
//! shows the echelon structure: each element starts at q^{-m}, then a
//! forced gap of zero coefficients, then one free coefficient per
//! admissible pole order.

use wh4::basis::{make, Family};

fn main() {
    println!("f-family, weight 6 (holomorphic at the cusp 0):");
    for m in -3..=0 {
        let elem = make(Family::F, 6, m, 14).unwrap();
        println!("  {:<10} = {}", elem.label(), elem.series);
    }

    println!("\ng-family, weight -4 (vanishes at the cusps 0 and 1/2):");
    for m in 4..=7 {
        let elem = make(Family::G, -4, m, 6).unwrap();
        println!("  {:<10} = {}", elem.label(), elem.series);
    }

    println!("\nh- and i-family representatives, weight 2:");
    for family in [Family::H, Family::I] {
        for m in 0..=2 {
            let elem = make(family, 2, m, 8).unwrap();
            println!("  {:<10} = {}", elem.label(), elem.series);
        }
    }

    let elem = make(Family::F, 6, -1, 20).unwrap();
    println!(
        "\ngap structure of {}: forced zeros strictly between q^{} and q^{}",
        elem.label(),
        -elem.pole_order,
        elem.free_tail_start()
    );
}
