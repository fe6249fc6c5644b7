//! Exact verification of the structural identities tying the four basis
//! families together: coefficient duality, parity of exponent support, the
//! two-variable generating identity, product constant terms, and the
//! derivative relation between `f_{0,1}` and `g_{2,1}`.
//!
//! Every check here compares exact rationals, so a report either passes or
//! carries concrete counterexamples; there are no tolerances.

use crate::basis::{cached, BasisError, Family};
use crate::forms::g21;
use crate::series::{rational_string, QSeries, Rational};
use num_traits::Zero;

/// One failed cell: where it happened and the two exact values that were
/// supposed to agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity sweep.  `pass()` is true exactly when no
/// counterexamples were collected; sweeps never fail fast, so a failing
/// report lists every bad cell.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub identity: String,
    pub ranges: String,
    pub cells_checked: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    fn new(identity: impl Into<String>, ranges: String) -> Self {
        VerificationReport {
            identity: identity.into(),
            ranges,
            cells_checked: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, location: String, lhs: &Rational, rhs: &Rational) {
        self.cells_checked += 1;
        if lhs != rhs {
            self.counterexamples.push(Counterexample {
                location,
                lhs: rational_string(lhs),
                rhs: rational_string(rhs),
            });
        }
    }

    fn record_series(&mut self, location: &str, lhs: &QSeries, rhs: &QSeries) {
        let hi = lhs.prec().min(rhs.prec());
        let lo = lhs.lead().min(rhs.lead());
        for e in lo..hi {
            self.record(
                format!("{}, exponent {}", location, e),
                &lhs.coeff(e),
                &rhs.coeff(e),
            );
        }
    }

    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "identity": self.identity,
            "ranges": self.ranges,
            "cells_checked": self.cells_checked,
            "pass": self.pass(),
            "counterexamples": self.counterexamples.iter().map(|c| {
                serde_json::json!({
                    "location": c.location,
                    "lhs": c.lhs,
                    "rhs": c.rhs,
                })
            }).collect::<Vec<_>>(),
        })
    }
}

fn require_even(k: i64) -> Result<i64, BasisError> {
    if k.rem_euclid(2) != 0 {
        return Err(BasisError::OddWeight { weight: k });
    }
    Ok(k / 2)
}

/// Coefficient duality across the `f`/`g` pair: writing
/// `f_{k,m} = q^{−m} + Σ_{n≥ℓ+1} a_k(m,n) qⁿ` and
/// `g_{2−k,n} = q^{−n} + Σ_{j≥−ℓ} b_{2−k}(n,j) q^j`, checks
/// `a_k(m,n) = −b_{2−k}(n,m)` for every `−ℓ ≤ m ≤ max_m`,
/// `ℓ+1 ≤ n ≤ max_n`.
pub fn check_duality(k: i64, max_m: i64, max_n: i64) -> Result<VerificationReport, BasisError> {
    let ell = require_even(k)?;
    let m_lo = -ell;
    let n_lo = ell + 1;
    let mut report = VerificationReport::new(
        "duality",
        format!(
            "k={}, m in [{},{}], n in [{},{}]",
            k, m_lo, max_m, n_lo, max_n
        ),
    );
    let f_prec = max_n + 2;
    let g_prec = max_m + 2;
    for m in m_lo..=max_m {
        let f = cached(Family::F, k, m, f_prec)?;
        for n in n_lo..=max_n {
            let g = cached(Family::G, 2 - k, n, g_prec)?;
            let a = f.series.coeff(n);
            let minus_b = -g.series.coeff(m);
            report.record(format!("(m,n)=({},{})", m, n), &a, &minus_b);
        }
    }
    Ok(report)
}

/// The same duality for the `h`/`i` pair: coefficient `n` of `h_{k,m}`
/// equals minus coefficient `m` of `i_{2−k,n}`, for `−ℓ+1 ≤ m ≤ max_m`,
/// `ℓ ≤ n ≤ max_n`.
pub fn check_hi_duality(k: i64, max_m: i64, max_n: i64) -> Result<VerificationReport, BasisError> {
    let ell = require_even(k)?;
    let m_lo = -ell + 1;
    let n_lo = ell;
    let mut report = VerificationReport::new(
        "hi-duality",
        format!(
            "k={}, m in [{},{}], n in [{},{}]",
            k, m_lo, max_m, n_lo, max_n
        ),
    );
    let h_prec = max_n + 2;
    let i_prec = max_m + 2;
    for m in m_lo..=max_m {
        let h = cached(Family::H, k, m, h_prec)?;
        for n in n_lo..=max_n {
            let i = cached(Family::I, 2 - k, n, i_prec)?;
            let a = h.series.coeff(n);
            let minus_b = -i.series.coeff(m);
            report.record(format!("(m,n)=({},{})", m, n), &a, &minus_b);
        }
    }
    Ok(report)
}

/// Exponent-parity structure of the `f` family: the support of `f_{k,m}`
/// lies in a single parity class (that of `m`), equivalently `V₂U₂` kills
/// the element when `m` is odd and fixes it when `m` is even.
pub fn check_parity(k: i64, max_m: i64) -> Result<VerificationReport, BasisError> {
    let ell = require_even(k)?;
    let m_lo = -ell;
    let mut report = VerificationReport::new(
        "parity",
        format!("k={}, m in [{},{}]", k, m_lo, max_m),
    );
    for m in m_lo..=max_m {
        let f = cached(Family::F, k, m, max_m.max(ell) + 12)?;
        // support parity: every exponent with a nonzero coefficient has the
        // parity of m (equivalently of the pole exponent −m)
        for (e, c) in f.series.iter_terms() {
            report.cells_checked += 1;
            if !c.is_zero() && (e - m).rem_euclid(2) != 0 {
                report.counterexamples.push(Counterexample {
                    location: format!("{} support at exponent {}", f.label(), e),
                    lhs: rational_string(c),
                    rhs: "0".to_string(),
                });
            }
        }
        // operator form: V₂U₂ projects onto the even-exponent part
        let projected = f.series.u2().v2();
        let expected = if m.rem_euclid(2) == 1 {
            QSeries::zero(projected.prec())
        } else {
            f.series.clone()
        };
        report.record_series(&format!("V2U2 {}", f.label()), &projected, &expected);
    }
    Ok(report)
}

/// Constant term of the weight-2 product `f_{k,m} · g_{2−k,n}`: always
/// exactly zero, for all valid `m ≤ max_m`, `n ≤ max_n`.
pub fn check_product_constant(
    k: i64,
    max_m: i64,
    max_n: i64,
) -> Result<VerificationReport, BasisError> {
    let ell = require_even(k)?;
    let m_lo = -ell;
    let n_lo = ell + 1;
    let mut report = VerificationReport::new(
        "product-constant",
        format!(
            "k={}, m in [{},{}], n in [{},{}]",
            k, m_lo, max_m, n_lo, max_n
        ),
    );
    let f_prec = max_n + 2;
    let g_prec = max_m + 2;
    let zero = Rational::zero();
    for m in m_lo..=max_m {
        let f = cached(Family::F, k, m, f_prec)?;
        for n in n_lo..=max_n {
            let g = cached(Family::G, 2 - k, n, g_prec)?;
            let product = f.series.mul(&g.series);
            let constant = product.try_coeff(0).ok_or(
                BasisError::InsufficientPrecision {
                    needed: 1,
                    got: product.prec(),
                },
            )?;
            report.record(format!("(m,n)=({},{})", m, n), &constant, &zero);
        }
    }
    Ok(report)
}

/// The two-variable generating identity, cross-multiplied to avoid Laurent
/// division.  With `x` carrying the expansions and `y` the generating
/// powers:
///
/// `(f_{0,1}(y) − f_{0,1}(x)) · Σ_{m=−ℓ}^{M} f_{k,m}(x) yᵐ
///     = f_{k,−ℓ}(x) · g_{2−k,ℓ+1}(y)`
///
/// Truncating the sum at `y^M` only contaminates `y`-columns `M` and above
/// (the `y⁻¹` lead of `f_{0,1}(y)` reaches one column down), so columns
/// `−ℓ−1 ..= M−1` are compared exactly through `x`-exponent `q_order`.
///
/// The dual expansion of the same kernel gives the companion grid
/// `a_k(m,n) = −b_{2−k}(n,m)`, checked here for `ℓ+1 ≤ m ≤ M−1` and
/// `ℓ+1 ≤ n ≤ q_order` straight from the computed columns.
pub fn check_genfn(k: i64, r_order: i64, q_order: i64) -> Result<VerificationReport, BasisError> {
    let ell = require_even(k)?;
    let m_cap = r_order;
    if m_cap < ell + 2 {
        return Err(BasisError::InsufficientPrecision {
            needed: ell + 2,
            got: m_cap,
        });
    }
    let mut report = VerificationReport::new(
        "generating-function",
        format!(
            "k={}, y-columns in [{},{}], x-exponents up to {}",
            k,
            -ell - 1,
            m_cap - 1,
            q_order
        ),
    );

    // x-side expansions, deep enough that multiplying by a pole of order
    // m_cap still leaves everything known through q_order.
    let x_prec = q_order + m_cap + 2;
    let f01_x = cached(Family::F, 0, 1, x_prec)?.series;
    let mut f_x = Vec::new();
    for m in -ell..=m_cap {
        f_x.push(cached(Family::F, k, m, x_prec)?.series);
    }
    let f_at = |m: i64| -> &QSeries { &f_x[(m + ell) as usize] };

    // y-side coefficient streams.
    let f01_y = cached(Family::F, 0, 1, m_cap + ell + 2)?.series;
    let g_y = cached(Family::G, 2 - k, ell + 1, m_cap + 1)?.series;

    for j in (-ell - 1)..=(m_cap - 1) {
        // column j of (f01(y) − f01(x)) · Σ_m f_{k,m}(x) yᵐ
        let mut lhs = QSeries::zero(x_prec);
        for m in -ell..=m_cap {
            let c = f01_y.coeff(j - m); // y-coefficient of f_{0,1} at j−m
            if !c.is_zero() {
                lhs = lhs.add(&f_at(m).scale(&c));
            }
        }
        if j >= -ell {
            lhs = lhs.sub(&f01_x.mul(f_at(j)));
        }
        let rhs = f_at(-ell).scale(&g_y.coeff(j));
        // compare through x-exponent q_order
        let lo = lhs.lead().min(rhs.lead());
        let hi = (q_order + 1).min(lhs.prec()).min(rhs.prec());
        for n in lo..hi {
            report.record(
                format!("y-column {}, x-exponent {}", j, n),
                &lhs.coeff(n),
                &rhs.coeff(n),
            );
        }
    }

    // companion grid from the dual expansion of the kernel; the f-column
    // index additionally needs m ≥ −ℓ for the element to exist
    for m in (ell + 1).max(-ell)..=(m_cap - 1) {
        for n in (ell + 1)..=q_order {
            let g = cached(Family::G, 2 - k, n, m_cap + 1)?;
            let a = f_at(m).coeff(n);
            let minus_b = -g.series.coeff(m);
            report.record(format!("dual grid (m,n)=({},{})", m, n), &a, &minus_b);
        }
    }
    Ok(report)
}

/// The derivative relation: `q·d/dq f_{0,1} + g_{2,1} = 0` exactly, checked
/// through `terms` coefficients.
pub fn check_derivative(terms: i64) -> Result<VerificationReport, BasisError> {
    let mut report = VerificationReport::new(
        "derivative",
        format!("exponents in [-1,{})", terms),
    );
    let f01 = cached(Family::F, 0, 1, terms)?.series;
    report.record_series(
        "q d/dq f_{0,1} vs -g_{2,1}",
        &f01.q_derivative(),
        &g21(terms).neg(),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat_int;

    #[test]
    fn duality_anchor_cells() {
        let f6m1 = cached(Family::F, 6, -1, 8).unwrap();
        assert_eq!(f6m1.series.coeff(5), rat_int(198));
        let gm45 = cached(Family::G, -4, 5, 8).unwrap();
        assert_eq!(gm45.series.coeff(-1), rat_int(-198));

        let f60 = cached(Family::F, 6, 0, 8).unwrap();
        assert_eq!(f60.series.coeff(4), rat_int(-504));
        let gm44 = cached(Family::G, -4, 4, 8).unwrap();
        assert_eq!(gm44.series.coeff(0), rat_int(504));

        let f6m2 = cached(Family::F, 6, -2, 8).unwrap();
        assert_eq!(f6m2.series.coeff(4), rat_int(32));
        assert_eq!(gm44.series.coeff(-2), rat_int(-32));
    }

    #[test]
    fn duality_sweeps_pass() {
        for k in [-4i64, 0, 2, 6] {
            let report = check_duality(k, 12, 12).unwrap();
            assert!(report.pass(), "k={}: {:?}", k, report.counterexamples.first());
            assert!(report.cells_checked > 0);
        }
    }

    #[test]
    fn hi_duality_anchor_and_sweep() {
        let h01 = cached(Family::H, 0, 1, 6).unwrap();
        assert_eq!(h01.series.coeff(1), rat_int(20));
        let i21 = cached(Family::I, 2, 1, 6).unwrap();
        assert_eq!(i21.series.coeff(1), rat_int(-20));

        for k in [-2i64, 0, 4] {
            let report = check_hi_duality(k, 10, 10).unwrap();
            assert!(report.pass(), "k={}: {:?}", k, report.counterexamples.first());
        }
    }

    #[test]
    fn parity_of_weight6_family() {
        let report = check_parity(6, 10).unwrap();
        assert!(report.pass(), "{:?}", report.counterexamples.first());
        // spot anchors: odd support for m=−1, even support for m=−2 and 0
        let f = cached(Family::F, 6, -1, 12).unwrap();
        for e in [2i64, 4, 6, 8, 10] {
            assert!(f.series.coeff(e).is_zero());
        }
        let f = cached(Family::F, 6, 0, 12).unwrap();
        for e in [1i64, 3, 5, 7, 9, 11] {
            assert!(f.series.coeff(e).is_zero());
        }
    }

    #[test]
    fn parity_other_weights() {
        for k in [-4i64, 0, 2] {
            let report = check_parity(k, 9).unwrap();
            assert!(report.pass(), "k={}", k);
        }
    }

    #[test]
    fn product_constant_terms_vanish() {
        let report = check_product_constant(6, 8, 10).unwrap();
        assert!(report.pass(), "{:?}", report.counterexamples.first());
        // the specific products called out as anchors
        let f = cached(Family::F, 6, -3, 12).unwrap();
        let g = cached(Family::G, -4, 4, 12).unwrap();
        assert!(f.series.mul(&g.series).coeff(0).is_zero());
        let f = cached(Family::F, 6, 0, 12).unwrap();
        assert!(f.series.mul(&g.series).coeff(0).is_zero());
        // f_{0,0}·g_{2,1} = g_{2,1} has no constant term
        let g21_elem = cached(Family::G, 2, 1, 12).unwrap();
        assert!(g21_elem.series.coeff(0).is_zero());
    }

    #[test]
    fn generating_identity_weight0() {
        let report = check_genfn(0, 12, 12).unwrap();
        assert!(report.pass(), "{:?}", report.counterexamples.first());
        assert!(report.cells_checked > 100);
    }

    #[test]
    fn generating_identity_weight6_and_negative() {
        for k in [6i64, -4, 2] {
            let report = check_genfn(k, 10, 10).unwrap();
            assert!(report.pass(), "k={}: {:?}", k, report.counterexamples.first());
        }
    }

    #[test]
    fn generating_identity_rejects_small_window() {
        assert!(matches!(
            check_genfn(6, 4, 10),
            Err(BasisError::InsufficientPrecision { needed: 5, .. })
        ));
    }

    #[test]
    fn derivative_relation() {
        let report = check_derivative(30).unwrap();
        assert!(report.pass(), "{:?}", report.counterexamples.first());
    }

    #[test]
    fn report_semantics_and_json() {
        let mut report = VerificationReport::new("demo", "none".to_string());
        assert!(report.pass());
        report.record("cell".to_string(), &rat_int(1), &rat_int(2));
        assert!(!report.pass());
        let json = report.to_json();
        assert_eq!(json["pass"], serde_json::json!(false));
        assert_eq!(json["counterexamples"][0]["lhs"], serde_json::json!("1/1"));
        assert_eq!(json["identity"], serde_json::json!("demo"));
    }
}
