//! Certified complex evaluation of q-series inside the unit disk.
//!
//! Everything here is built on the interval layer: the nome is enclosed as
//! a [`ComplexInterval`], powers are accumulated by interval multiplication,
//! and coefficients enter as exact rationals, so each partial sum encloses
//! the corresponding exact truncated sum.
//!
//! Truncation of the *infinite* series is handled two ways:
//!
//! * [`eval_series_all_terms`] sums every known coefficient and leaves the
//!   tail to the caller (used where a certified tail bound is derived
//!   separately);
//! * [`eval_series_with_tail`] applies a documented **heuristic** stopping
//!   rule — once a run of three consecutive terms each contribute less than
//!   `2^{−bits/2}` of the running sum's magnitude (the run must include two
//!   nonzero coefficients, so a structural gap of a sparse series cannot
//!   trigger it), the tail is estimated as eight times the largest term
//!   magnitude in the run.  Coefficients of these forms grow
//!   subexponentially (like `e^{c√n}`) while `|q|^n` decays geometrically,
//!   so the extrapolation is sound in practice, but it is *not* a proof;
//!   callers needing certified tails must bound them independently.

use crate::interval::{
    cos_interval, exp_interval, pi_interval, sin_interval, ComplexInterval, Interval,
    IntervalError,
};
use crate::series::{QSeries, Rational};
use num_traits::Zero;
use std::fmt;

/// Errors from series evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// The heuristic stopping rule never fired before the known
    /// coefficients ran out: more terms (and usually more bits) are needed.
    TailNotConverged {
        /// First exponent past the known coefficient window.
        terms_exhausted_at: i64,
        /// Working precision that failed.
        bits: u32,
    },
    /// An interval operation failed (division through zero, etc.).
    Interval(IntervalError),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::TailNotConverged {
                terms_exhausted_at,
                bits,
            } => write!(
                f,
                "tail heuristic did not converge before exponent {} at {} bits",
                terms_exhausted_at, bits
            ),
            EvalError::Interval(e) => write!(f, "interval arithmetic failure: {}", e),
        }
    }
}

impl std::error::Error for EvalError {}

impl From<IntervalError> for EvalError {
    fn from(e: IntervalError) -> Self {
        EvalError::Interval(e)
    }
}

/// Enclosure of the nome on the arc `z = −1/4 + e^{iθ}/4`:
///
/// `q = e^{2πiz} = e^{−(π/2)sinθ} · e^{i(π/2)(cosθ − 1)}`,
///
/// so `|q| = e^{−(π/2)sinθ} < 1` for `θ ∈ (0, π)`.
pub fn q_on_arc(theta: &Interval, bits: u32) -> ComplexInterval {
    let work = bits + 16;
    let half_pi = pi_interval(work).mul_pow2(-1);
    let s = sin_interval(theta, work);
    let c = cos_interval(theta, work);
    let radius = exp_interval(&half_pi.mul(&s, work).neg(), work);
    let phase = half_pi.mul(&c.sub(&Interval::one(), work), work);
    ComplexInterval::new(
        radius.mul(&cos_interval(&phase, work), work),
        radius.mul(&sin_interval(&phase, work), work),
    )
}

/// Enclosure of the nome at the point `τ = u + iv` (upper half-plane,
/// `v > 0`): `q = e^{−2πv} · e^{2πiu}`.
pub fn q_at_point(u: &Rational, v: &Rational, bits: u32) -> ComplexInterval {
    let work = bits + 16;
    let two_pi = pi_interval(work).mul_pow2(1);
    let ui = Interval::from_rational(u, work);
    let vi = Interval::from_rational(v, work);
    let radius = exp_interval(&two_pi.mul(&vi, work).neg(), work);
    let angle = two_pi.mul(&ui, work);
    ComplexInterval::new(
        radius.mul(&cos_interval(&angle, work), work),
        radius.mul(&sin_interval(&angle, work), work),
    )
}

/// Initial power `q^{lead}` (reciprocal powers for a pole).
fn initial_power(q: &ComplexInterval, lead: i64, bits: u32) -> Result<ComplexInterval, EvalError> {
    if lead >= 0 {
        Ok(q.powi(lead as u32, bits))
    } else {
        Ok(q.recip(bits)?.powi((-lead) as u32, bits))
    }
}

/// Upper bound on `|z|` via the ℓ¹ norm of the rectangle (within √2 of the
/// true magnitude — only used for stopping decisions and error bars, where
/// overestimation is safe).
fn mag_upper(z: &ComplexInterval) -> crate::interval::Dy {
    z.re.mag().add(&z.im.mag())
}

/// Encloses the exact truncated sum `Σ_{n=lead}^{prec−1} a_n q^n`.
///
/// No tail reasoning at all: the result is a certified enclosure of the
/// *known-coefficient* partial sum only.
pub fn eval_series_all_terms(
    s: &QSeries,
    q: &ComplexInterval,
    bits: u32,
) -> Result<ComplexInterval, EvalError> {
    let work = bits + 16;
    let mut pow = initial_power(q, s.lead(), work)?;
    let mut sum = ComplexInterval::zero();
    for (_, c) in s.iter_terms() {
        if !c.is_zero() {
            sum = sum.add(&pow.scale(&Interval::from_rational(c, work), work), work);
        }
        pow = pow.mul(q, work);
    }
    Ok(sum)
}

/// A series value together with its heuristic tail estimate.
#[derive(Debug, Clone)]
pub struct SeriesValue {
    /// Enclosure of the partial sum actually accumulated.
    pub value: ComplexInterval,
    /// Heuristic bound on the omitted tail: eight times the largest term
    /// magnitude inside the stopping window.  Not certified.
    pub tail_magnitude: Rational,
    /// First exponent *not* included in `value`.
    pub stopped_at: i64,
}

/// Evaluates with the heuristic stopping rule (see module docs): stops once
/// a run of three consecutive terms — structural zeros included — each
/// contribute less than `2^{−bits/2}` of the running sum's magnitude.  To
/// avoid firing inside a long gap of a sparse series, the run must contain
/// at least two nonzero coefficients, unless the series has no nonzero
/// coefficients left at all.
pub fn eval_series_with_tail(
    s: &QSeries,
    q: &ComplexInterval,
    bits: u32,
) -> Result<SeriesValue, EvalError> {
    let work = bits + 16;
    let last_nonzero = s
        .iter_terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, _)| e)
        .last()
        .unwrap_or(s.lead());
    let mut pow = initial_power(q, s.lead(), work)?;
    let mut sum = ComplexInterval::zero();
    let mut run_len = 0u32;
    let mut run_genuine = 0u32;
    let mut run_max = crate::interval::Dy::zero();
    let rel = -((bits / 2) as i64);
    for (e, c) in s.iter_terms() {
        let term = pow.scale(&Interval::from_rational(c, work), work);
        if !c.is_zero() {
            sum = sum.add(&term, work);
        }
        let term_mag = mag_upper(&term);
        let threshold = mag_upper(&sum).mul_pow2(rel);
        if term_mag <= threshold && e > s.lead() {
            run_len += 1;
            if !c.is_zero() {
                run_genuine += 1;
            }
            if term_mag > run_max {
                run_max = term_mag;
            }
            if run_len >= 3 && (run_genuine >= 2 || e >= last_nonzero) {
                return Ok(SeriesValue {
                    value: sum,
                    tail_magnitude: run_max.mul_pow2(3).to_rational(),
                    stopped_at: e + 1,
                });
            }
        } else {
            run_len = 0;
            run_genuine = 0;
            run_max = crate::interval::Dy::zero();
        }
        pow = pow.mul(q, work);
    }
    Err(EvalError::TailNotConverged {
        terms_exhausted_at: s.prec(),
        bits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, rat_int, rational_from_decimal};
    use num_bigint::BigInt;
    use num_traits::{One, Signed};

    /// Exact complex rational arithmetic for cross-checking the interval
    /// evaluator on closed-form summable series.
    #[derive(Clone)]
    struct Cq {
        re: Rational,
        im: Rational,
    }

    impl Cq {
        fn mul(&self, o: &Cq) -> Cq {
            Cq {
                re: &self.re * &o.re - &self.im * &o.im,
                im: &self.re * &o.im + &self.im * &o.re,
            }
        }
        fn add(&self, o: &Cq) -> Cq {
            Cq {
                re: &self.re + &o.re,
                im: &self.im + &o.im,
            }
        }
    }

    fn contains_cq(z: &ComplexInterval, w: &Cq) -> bool {
        z.re.contains_rational(&w.re) && z.im.contains_rational(&w.im)
    }

    #[test]
    fn nome_on_arc_at_theta_half_pi() {
        // θ = π/2: q = e^{−π/2}·e^{−iπ/2} = −i·e^{−π/2}
        let theta = pi_interval(256).mul_pow2(-1);
        let q = q_on_arc(&theta, 256);
        assert!(q.re.contains_rational(&rat_int(0)));
        let minus_exp =
            rational_from_decimal("-0.20787957635076190854695561983497877003387784163177").unwrap();
        let tol = rational_from_decimal("1e-45").unwrap();
        assert!(q.im.lo_rational() >= &minus_exp - &tol);
        assert!(q.im.hi_rational() <= &minus_exp + &tol);
        // |q| strictly inside the unit disk
        assert!(q.abs(256).certified_lt(&rat(1, 2)));
    }

    #[test]
    fn nome_at_point_pure_imaginary_axis() {
        // τ = i/10: q = e^{−π/5}, real and positive
        let q = q_at_point(&rat_int(0), &rat(1, 10), 256);
        assert!(q.im.contains_rational(&rat_int(0)));
        let known =
            rational_from_decimal("0.53348809109110325117573130235792502909087850740304").unwrap();
        let tol = rational_from_decimal("1e-45").unwrap();
        assert!(q.re.lo_rational() >= &known - &tol);
        assert!(q.re.hi_rational() <= &known + &tol);
    }

    #[test]
    fn nome_at_point_half_period_is_negative() {
        // τ = 1/2 + i/10: q = −e^{−π/5}
        let q = q_at_point(&rat(1, 2), &rat(1, 10), 192);
        assert!(q.im.contains_rational(&rat_int(0)));
        assert!(q.re.is_strictly_negative());
    }

    #[test]
    fn geometric_series_matches_exact_rational_sum() {
        // Σ_{n=0}^{149} q^n with q = (1+i)/4, against exact complex
        // rational summation.
        let n_terms = 150i64;
        let ones: Vec<(i64, i64)> = (0..n_terms).map(|n| (n, 1)).collect();
        let s = QSeries::from_terms(&ones, n_terms);
        let q_exact = Cq {
            re: rat(1, 4),
            im: rat(1, 4),
        };
        let q_iv = ComplexInterval::new(
            Interval::from_rational(&rat(1, 4), 200),
            Interval::from_rational(&rat(1, 4), 200),
        );
        let value = eval_series_all_terms(&s, &q_iv, 200).unwrap();
        let mut exact = Cq {
            re: Rational::zero(),
            im: Rational::zero(),
        };
        let mut p = Cq {
            re: Rational::one(),
            im: Rational::zero(),
        };
        for _ in 0..n_terms {
            exact = exact.add(&p);
            p = p.mul(&q_exact);
        }
        assert!(contains_cq(&value, &exact));
        // the closed form 1/(1−q) = 6/5 + (2/5)i is within the omitted
        // tail of ~|q|^150
        let gap = rational_from_decimal("1e-30").unwrap();
        assert!((value.re.lo_rational() - rat(6, 5)).abs() < gap);
        assert!((value.im.lo_rational() - rat(2, 5)).abs() < gap);
    }

    #[test]
    fn laurent_pole_terms_evaluate_exactly() {
        // q^{-3} + q^{-2} at q = 1/2 is exactly 12
        let s = QSeries::from_terms(&[(-3, 1), (-2, 1)], 2);
        let q = ComplexInterval::from_re(Interval::from_rational(&rat(1, 2), 160));
        let v = eval_series_all_terms(&s, &q, 160).unwrap();
        assert!(v.re.contains_rational(&rat_int(12)));
        assert!(v.im.contains_rational(&rat_int(0)));
        let width_cap = Rational::new(BigInt::one(), BigInt::one() << 120);
        assert!(v.re.width() < width_cap);
    }

    #[test]
    fn tail_heuristic_stops_and_bounds_the_remainder() {
        // all-ones series at q = 1/8: true tail after stopping at N is
        // (1/8)^N/(1−1/8), and the heuristic claims 8×(last term)
        let ones: Vec<(i64, i64)> = (0..400).map(|n| (n, 1)).collect();
        let s = QSeries::from_terms(&ones, 400);
        let q = ComplexInterval::from_re(Interval::from_rational(&rat(1, 8), 128));
        let sv = eval_series_with_tail(&s, &q, 128).unwrap();
        assert!(sv.stopped_at < 400, "should stop early, not exhaust");
        // exact value of the full geometric series: 8/7
        let full = rat(8, 7);
        let err_hi = (sv.value.re.hi_rational() - &full).abs();
        let err_lo = (sv.value.re.lo_rational() - &full).abs();
        let worst = err_hi.max(err_lo);
        assert!(
            worst <= sv.tail_magnitude,
            "true remainder {} exceeds tail estimate {}",
            worst,
            sv.tail_magnitude
        );
    }

    #[test]
    fn constant_series_has_zero_tail() {
        let s = QSeries::one(16);
        let q = ComplexInterval::from_re(Interval::from_rational(&rat(1, 3), 128));
        let sv = eval_series_with_tail(&s, &q, 128).unwrap();
        assert!(sv.value.re.contains_rational(&rat_int(1)));
        assert!(sv.tail_magnitude.is_zero());
    }

    #[test]
    fn slow_decay_with_few_terms_reports_nonconvergence() {
        let ones: Vec<(i64, i64)> = (0..6).map(|n| (n, 1)).collect();
        let s = QSeries::from_terms(&ones, 6);
        let q = ComplexInterval::from_re(Interval::from_rational(&rat(9, 10), 128));
        match eval_series_with_tail(&s, &q, 128) {
            Err(EvalError::TailNotConverged {
                terms_exhausted_at, ..
            }) => assert_eq!(terms_exhausted_at, 6),
            other => panic!("expected TailNotConverged, got {:?}", other.map(|v| v.stopped_at)),
        }
    }

    #[test]
    fn hauptmodul_value_agrees_across_precisions() {
        // two-precision agreement: ψ at q(i/10) with 128 vs 320 bits
        let psi = crate::forms::hauptmodul(crate::forms::PsiVariant::Half, 120);
        let q_lo = q_at_point(&rat_int(0), &rat(1, 10), 128);
        let q_hi = q_at_point(&rat_int(0), &rat(1, 10), 320);
        let v_lo = eval_series_all_terms(&psi, &q_lo, 128).unwrap();
        let v_hi = eval_series_all_terms(&psi, &q_hi, 320).unwrap();
        // both enclose the same exact truncated sum → they must overlap,
        // and the high-precision run must be strictly tighter
        assert!(v_lo.re.lo_rational() <= v_hi.re.hi_rational());
        assert!(v_hi.re.lo_rational() <= v_lo.re.hi_rational());
        assert!(v_hi.re.width() < v_lo.re.width());
        assert!(v_hi.im.contains_rational(&rat_int(0)));
    }
}
