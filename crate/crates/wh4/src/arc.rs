//! Weighted evaluation on the lower boundary arc `z = −1/4 + e^{iθ}/4`,
//! including sign-change scans against the cosine approximation and the
//! mapping of Faber-polynomial roots back to arc positions through the
//! hauptmodul.
//!
//! For a basis element of weight `k` and pole order `m`, the quantity
//!
//! `e^{ikθ/2} · e^{−(πm/2)sinθ} · f(z(θ))`
//!
//! is real on the arc, and is approximated by `2cos(kθ/2 + πm/2 −
//! (πm/2)cosθ)`.  Counting its strict sign changes over `θ ∈ [π/4, 3π/4]`
//! lower-bounds the number of arc zeros; the guaranteed count is
//! `⌊(√2/2)m + k/4⌋`.
//!
//! A practical limitation worth knowing: the q-expansion of the hauptmodul
//! has a finite radius of convergence (about `|q| ≈ 0.577`, the nearest
//! singularity sitting on the negative real q-axis), so arc evaluation by
//! q-series is only trustworthy where `|q| = e^{−(π/2)sinθ}` stays well
//! inside that disk.  The scan window `[π/4, 3π/4]` has `|q| ≤ 0.33` and is
//! safe; root-to-θ mapping restricts itself to `|q| ≤ ~0.5` and reports
//! roots whose hauptmodul values fall outside the reachable range as
//! unmappable rather than returning unreliable numbers.

use crate::basis::{self, BasisElement, BasisError, Family};
use crate::eval::{self, EvalError};
use crate::forms::{hauptmodul, PsiVariant};
use crate::interval::{
    cos_interval, exp_interval, pi_interval, sin_interval, ComplexInterval, Interval,
};
use crate::poly::{PolyError, RationalPolynomial};
use crate::series::{decimal_string, rat, rat_int, QSeries, Rational};
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// Hard ceiling for the automatic precision-doubling ladder.
pub const MAX_BITS: u32 = 2048;

/// Errors from arc evaluation and scanning.
#[derive(Debug)]
pub enum ArcError {
    Basis(BasisError),
    Eval(EvalError),
    Poly(PolyError),
    /// The doubling ladder hit [`MAX_BITS`] without converging.
    PrecisionExceeded { bits_cap: u32 },
    /// The hauptmodul failed the empirical strict-decrease check between
    /// two consecutive probe points; root-to-θ bisection would be unsound.
    NonMonotonicPsi { theta: Rational },
    /// A sign could not be certified even at the ladder cap.
    SignUndecidable { theta: Rational },
    /// Windows must satisfy `0 < lo < hi < π` with at least two samples.
    BadWindow,
}

impl fmt::Display for ArcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcError::Basis(e) => write!(f, "basis construction failed: {}", e),
            ArcError::Eval(e) => write!(f, "evaluation failed: {}", e),
            ArcError::Poly(e) => write!(f, "polynomial operation failed: {}", e),
            ArcError::PrecisionExceeded { bits_cap } => {
                write!(f, "no convergence within the {}-bit precision cap", bits_cap)
            }
            ArcError::NonMonotonicPsi { theta } => write!(
                f,
                "hauptmodul not certifiably decreasing near theta = {}",
                decimal_string(theta, 12)
            ),
            ArcError::SignUndecidable { theta } => write!(
                f,
                "sign undecidable at theta = {} at maximum precision",
                decimal_string(theta, 12)
            ),
            ArcError::BadWindow => write!(f, "window must satisfy 0 < lo < hi < pi, samples >= 2"),
        }
    }
}

impl std::error::Error for ArcError {}

impl From<BasisError> for ArcError {
    fn from(e: BasisError) -> Self {
        ArcError::Basis(e)
    }
}

impl From<EvalError> for ArcError {
    fn from(e: EvalError) -> Self {
        ArcError::Eval(e)
    }
}

impl From<PolyError> for ArcError {
    fn from(e: PolyError) -> Self {
        ArcError::Poly(e)
    }
}

/// Guaranteed lower bound for the arc-zero count: `⌊(√2/2)m + k/4⌋`,
/// computed with exact integer arithmetic (no floating point in the
/// decision, since `√2` is irrational the comparisons are never ties).
pub fn theorem_zero_bound(k: i64, m: i64) -> i64 {
    // t ≤ (√2/2)m + k/4  ⇔  4t − k ≤ 2√2·m
    let holds = |t: i64| -> bool {
        let lhs = 4 * t - k;
        let rhs_sq = 8 * m * m;
        if m >= 0 {
            lhs <= 0 || lhs * lhs <= rhs_sq
        } else {
            lhs < 0 && lhs * lhs >= rhs_sq
        }
    };
    let mut t = ((m as f64) * std::f64::consts::FRAC_1_SQRT_2 + (k as f64) / 4.0).floor() as i64;
    while !holds(t) {
        t -= 1;
    }
    while holds(t + 1) {
        t += 1;
    }
    t
}

/// Default scan window: rational endpoints strictly inside `(π/4, 3π/4)`.
pub fn default_window() -> (Rational, Rational) {
    (rat(7854, 10_000), rat(23_561, 10_000))
}

/// One weighted evaluation at a sampled arc position.
#[derive(Debug, Clone)]
pub struct ArcSample {
    /// The sampled angle (exact).
    pub theta: Rational,
    /// Enclosure of the real part of the weighted evaluation.
    pub weighted_value: Interval,
    /// Upper bound on the absolute imaginary part (should be ≈ 0: the
    /// weighted value is real on the arc).
    pub imag_residual: Rational,
    /// Enclosure of `2cos(kθ/2 + πm/2 − (πm/2)cosθ)`.
    pub cosine_target: Interval,
    /// Heuristic truncation bound, scaled by the weight magnitude.
    pub tail_estimate: Rational,
}

impl ArcSample {
    /// Everything that can separate the stored enclosure from the true
    /// (real) weighted value.
    pub fn error_bar(&self) -> Rational {
        &self.imag_residual + &self.tail_estimate
    }

    /// Accepted for sign counting: certifiably away from zero beyond the
    /// combined error bar.  A sample exactly at zero is never accepted.
    pub fn accepted(&self) -> bool {
        self.weighted_value.mig().to_rational() > self.error_bar()
    }

    /// `+1`, `−1`, or `0` for unaccepted samples.
    pub fn sign(&self) -> i32 {
        if !self.accepted() {
            0
        } else if self.weighted_value.is_strictly_positive() {
            1
        } else {
            -1
        }
    }

    /// Upper bound on `|weighted_value − cosine_target|`.
    pub fn cosine_gap(&self) -> Rational {
        let diff = self.weighted_value.sub(&self.cosine_target, 128).abs();
        diff.hi_rational() + self.error_bar()
    }

    fn midpoint_rational(iv: &Interval) -> Rational {
        (iv.lo_rational() + iv.hi_rational()) / rat_int(2)
    }

    /// CSV row: `theta,weighted_value,imag_residual,cosine_target,tail_estimate`
    /// with 20 significant decimal digits per column.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            decimal_string(&self.theta, 20),
            decimal_string(&Self::midpoint_rational(&self.weighted_value), 20),
            decimal_string(&self.imag_residual, 20),
            decimal_string(&Self::midpoint_rational(&self.cosine_target), 20),
            decimal_string(&self.tail_estimate, 20),
        )
    }

    /// Header matching [`ArcSample::csv_row`].
    pub fn csv_header() -> &'static str {
        "theta,weighted_value,imag_residual,cosine_target,tail_estimate"
    }
}

/// Result of a sign-change scan over a θ window.
#[derive(Debug, Clone)]
pub struct ZeroCountReport {
    pub family: Family,
    pub weight: i64,
    pub pole_order: i64,
    pub theta_lo: Rational,
    pub theta_hi: Rational,
    pub samples: usize,
    /// Samples whose magnitude cleared the error bar.
    pub accepted: usize,
    pub sign_changes: usize,
    /// `⌊(√2/2)m + k/4⌋`.
    pub theorem_bound: i64,
    /// `sign_changes ≥ theorem_bound`.
    pub satisfied: bool,
    /// Max over accepted samples of the certified `|weighted − cosine|`.
    pub max_cosine_gap: Rational,
    /// Working precision that finally converged.
    pub bits_used: u32,
    /// Series coefficients used at that precision.
    pub terms_used: i64,
}

impl ZeroCountReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family.as_str(),
            "weight": self.weight,
            "pole_order": self.pole_order,
            "theta_lo": decimal_string(&self.theta_lo, 20),
            "theta_hi": decimal_string(&self.theta_hi, 20),
            "samples": self.samples,
            "accepted": self.accepted,
            "sign_changes": self.sign_changes,
            "theorem_bound": self.theorem_bound,
            "satisfied": self.satisfied,
            "max_cosine_gap": decimal_string(&self.max_cosine_gap, 20),
            "bits_used": self.bits_used,
            "terms_used": self.terms_used,
        })
    }
}

/// Nome enclosure on the arc plus the pieces the weight factor reuses.
struct ArcNome {
    q: ComplexInterval,
    /// `|q| = e^{−(π/2)sinθ}`.
    radius: Interval,
    cos_theta: Interval,
}

fn arc_nome(theta: &Interval, work: u32) -> ArcNome {
    let half_pi = pi_interval(work).mul_pow2(-1);
    let sin_t = sin_interval(theta, work);
    let cos_t = cos_interval(theta, work);
    let radius = exp_interval(&half_pi.mul(&sin_t, work).neg(), work);
    let phi = half_pi.mul(&cos_t.sub(&Interval::one(), work), work);
    let q = ComplexInterval::new(
        radius.mul(&cos_interval(&phi, work), work),
        radius.mul(&sin_interval(&phi, work), work),
    );
    ArcNome {
        q,
        radius,
        cos_theta: cos_t,
    }
}

/// Enclosure of the cosine approximation `2cos(kθ/2 + πm/2 − (πm/2)cosθ)`.
pub fn cosine_target(k: i64, m: i64, theta: &Interval, bits: u32) -> Interval {
    let work = bits + 16;
    let half_pi = pi_interval(work).mul_pow2(-1);
    let cos_t = cos_interval(theta, work);
    let alpha = theta.mul_int(k).mul_pow2(-1);
    let beta = alpha.add(
        &half_pi
            .mul_int(m)
            .mul(&Interval::one().sub(&cos_t, work), work),
        work,
    );
    cos_interval(&beta, work).mul_pow2(1)
}

/// Weighted evaluation at an interval θ (the engine behind [`eval_on_arc`]).
struct WeightedValue {
    weighted: ComplexInterval,
    cosine: Interval,
    tail: Rational,
}

fn weighted_on_arc(
    elem: &BasisElement,
    theta: &Interval,
    bits: u32,
) -> Result<WeightedValue, EvalError> {
    let work = bits + 16;
    let nome = arc_nome(theta, work);
    let sv = eval::eval_series_with_tail(&elem.series, &nome.q, bits)?;
    // weight magnitude e^{−(πm/2)sinθ} = radius^m
    let m = elem.pole_order;
    let wmag = if m >= 0 {
        nome.radius.powi(m as u32, work)
    } else {
        nome.radius.recip(work)?.powi((-m) as u32, work)
    };
    let alpha = theta.mul_int(elem.weight).mul_pow2(-1);
    let wphase = ComplexInterval::new(cos_interval(&alpha, work), sin_interval(&alpha, work));
    let weighted = sv.value.mul(&wphase, work).scale(&wmag, work);
    let tail = &sv.tail_magnitude * wmag.hi_rational();
    let half_pi = pi_interval(work).mul_pow2(-1);
    let beta = alpha.add(
        &half_pi
            .mul_int(m)
            .mul(&Interval::one().sub(&nome.cos_theta, work), work),
        work,
    );
    let cosine = cos_interval(&beta, work).mul_pow2(1);
    Ok(WeightedValue {
        weighted,
        cosine,
        tail,
    })
}

/// Weighted evaluation of a basis element at one rational arc position.
pub fn eval_on_arc(
    elem: &BasisElement,
    theta: &Rational,
    bits: u32,
) -> Result<ArcSample, ArcError> {
    let wv = weighted_on_arc(elem, &Interval::from_rational(theta, bits + 16), bits)?;
    Ok(ArcSample {
        theta: theta.clone(),
        weighted_value: wv.weighted.re,
        imag_residual: wv.weighted.im.mag().to_rational(),
        cosine_target: wv.cosine,
        tail_estimate: wv.tail,
    })
}

/// Initial coefficient-count estimate for the tail heuristic to fire at the
/// weakest point of the window (smallest `sinθ`).  Heuristic only; the
/// doubling ladder covers underestimates.
fn initial_terms(m: i64, bits: u32, theta_lo: &Rational, theta_hi: &Rational) -> i64 {
    let lo = theta_lo.to_f64().unwrap_or(0.8);
    let hi = theta_hi.to_f64().unwrap_or(2.4);
    let s = lo.sin().min(hi.sin()).max(0.05);
    let decay = std::f64::consts::FRAC_PI_2 * s;
    let growth = std::f64::consts::PI * ((m.max(1)) as f64).sqrt();
    let target = 0.3466 * f64::from(bits) + 24.0;
    let t = (growth + (growth * growth + 4.0 * decay * target).sqrt()) / (2.0 * decay);
    ((1.5 * t * t) as i64 + 48).max(64)
}

fn window_valid(theta_lo: &Rational, theta_hi: &Rational) -> bool {
    let pi_lo = pi_interval(64).lo_rational();
    theta_lo > &Rational::zero() && theta_lo < theta_hi && theta_hi < &pi_lo
}

/// Scans the window at uniformly spaced rational angles and counts strict
/// sign changes between consecutive accepted samples.  Retries with doubled
/// precision and doubled series length on tail-convergence failures, up to
/// [`MAX_BITS`].
pub fn scan_arc(
    family: Family,
    k: i64,
    m: i64,
    theta_lo: &Rational,
    theta_hi: &Rational,
    samples: usize,
    bits: u32,
) -> Result<(ZeroCountReport, Vec<ArcSample>), ArcError> {
    if samples < 2 || !window_valid(theta_lo, theta_hi) {
        return Err(ArcError::BadWindow);
    }
    let mut bits_now = bits.max(64);
    let mut terms = initial_terms(m, bits_now, theta_lo, theta_hi);
    loop {
        match scan_once(family, k, m, theta_lo, theta_hi, samples, bits_now, terms) {
            Ok(samples_vec) => {
                return Ok(assemble_report(
                    family,
                    k,
                    m,
                    theta_lo,
                    theta_hi,
                    bits_now,
                    terms,
                    samples_vec,
                ));
            }
            Err(ArcError::Eval(EvalError::TailNotConverged { .. })) => {
                if bits_now >= MAX_BITS {
                    return Err(ArcError::PrecisionExceeded { bits_cap: MAX_BITS });
                }
                bits_now = (bits_now * 2).min(MAX_BITS);
                terms *= 2;
            }
            Err(other) => return Err(other),
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn scan_once(
    family: Family,
    k: i64,
    m: i64,
    theta_lo: &Rational,
    theta_hi: &Rational,
    samples: usize,
    bits: u32,
    terms: i64,
) -> Result<Vec<ArcSample>, ArcError> {
    let elem = basis::cached(family, k, m, terms)?;
    let span = theta_hi - theta_lo;
    let mut out = Vec::with_capacity(samples);
    for i in 0..samples {
        let theta = theta_lo + &span * rat(i as i64, (samples - 1) as i64);
        out.push(eval_on_arc(&elem, &theta, bits)?);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn assemble_report(
    family: Family,
    k: i64,
    m: i64,
    theta_lo: &Rational,
    theta_hi: &Rational,
    bits_used: u32,
    terms_used: i64,
    samples_vec: Vec<ArcSample>,
) -> (ZeroCountReport, Vec<ArcSample>) {
    let mut sign_changes = 0usize;
    let mut accepted = 0usize;
    let mut last_sign = 0i32;
    let mut max_gap = Rational::zero();
    for s in &samples_vec {
        let sg = s.sign();
        if sg != 0 {
            accepted += 1;
            if last_sign != 0 && sg != last_sign {
                sign_changes += 1;
            }
            last_sign = sg;
            let gap = s.cosine_gap();
            if gap > max_gap {
                max_gap = gap;
            }
        }
    }
    let theorem_bound = theorem_zero_bound(k, m);
    let report = ZeroCountReport {
        family,
        weight: k,
        pole_order: m,
        theta_lo: theta_lo.clone(),
        theta_hi: theta_hi.clone(),
        samples: samples_vec.len(),
        accepted,
        sign_changes,
        theorem_bound,
        satisfied: sign_changes as i64 >= theorem_bound,
        max_cosine_gap: max_gap,
        bits_used,
        terms_used,
    };
    (report, samples_vec)
}

/// Rational bounds (certified modulo the tail heuristic) for the value of a
/// weight-0 real-on-the-arc series at a rational angle.
fn real_series_bounds(
    series: &QSeries,
    theta: &Rational,
    bits: u32,
) -> Result<(Rational, Rational), EvalError> {
    let work = bits + 16;
    let nome = arc_nome(&Interval::from_rational(theta, work), work);
    let sv = eval::eval_series_with_tail(series, &nome.q, bits)?;
    let lo = sv.value.re.lo_rational() - &sv.tail_magnitude;
    let hi = sv.value.re.hi_rational() + &sv.tail_magnitude;
    Ok((lo, hi))
}

/// θ range inside which the hauptmodul's q-series converges comfortably
/// (`|q| ≤ ~0.5`; see module docs).
fn psi_solving_window() -> (Rational, Rational) {
    (rat(467, 1000), rat(2674, 1000))
}

/// Coefficient count for the hauptmodul itself: its coefficients grow
/// geometrically (ratio √3 per power), so at the worst point of the solving
/// window (`|q| ≈ 0.493`) terms shrink by ≈ 0.854 per power and reaching a
/// `2^{−bits/2}` relative tail needs ≈ 2.2·bits terms.
fn psi_initial_terms(bits: u32) -> i64 {
    (22 * i64::from(bits)) / 10 + 64
}

/// A working precision level for hauptmodul evaluations: the series is
/// built once per level and shared by every evaluation at that level.
struct PsiLevel {
    bits: u32,
    series: QSeries,
}

impl PsiLevel {
    fn new(bits: u32) -> Self {
        let bits = bits.max(96);
        PsiLevel {
            bits,
            series: hauptmodul(PsiVariant::Half, psi_initial_terms(bits)),
        }
    }

    fn escalate(&mut self) -> Result<(), ArcError> {
        if self.bits >= MAX_BITS {
            return Err(ArcError::PrecisionExceeded { bits_cap: MAX_BITS });
        }
        self.bits = (self.bits * 2).min(MAX_BITS);
        self.series = hauptmodul(PsiVariant::Half, psi_initial_terms(self.bits));
        Ok(())
    }

    /// Certified rational bounds for ψ(θ), escalating until the tail rule
    /// fires.
    fn bounds(&mut self, theta: &Rational) -> Result<(Rational, Rational), ArcError> {
        loop {
            match real_series_bounds(&self.series, theta, self.bits) {
                Ok(b) => return Ok(b),
                Err(EvalError::TailNotConverged { .. }) => self.escalate()?,
                Err(e) => return Err(ArcError::Eval(e)),
            }
        }
    }
}

fn inside_psi_solving_window(theta: &Rational) -> bool {
    let (min, max) = psi_solving_window();
    theta >= &min && theta <= &max
}

/// Image of a θ window under the hauptmodul, as a rational interval
/// `(lo, hi)` slightly *inside* the true image (safe for open-interval
/// Sturm counts).  The hauptmodul decreases along the arc, so the window's
/// right end maps to the image's left end.  Both endpoints must lie inside
/// the q-series solving range (see module docs).
pub fn psi_window_of_theta_window(
    theta_lo: &Rational,
    theta_hi: &Rational,
    bits: u32,
) -> Result<(Rational, Rational), ArcError> {
    if !window_valid(theta_lo, theta_hi)
        || !inside_psi_solving_window(theta_lo)
        || !inside_psi_solving_window(theta_hi)
    {
        return Err(ArcError::BadWindow);
    }
    let mut level = PsiLevel::new(bits);
    let (_, right_hi) = level.bounds(theta_hi)?;
    let (left_lo, _) = level.bounds(theta_lo)?;
    Ok((right_hi, left_lo))
}

/// Maps each real root of `p` in `(0, 16)` to the angle where the
/// hauptmodul takes that value on the arc, by bisection against certified
/// hauptmodul bounds.  The hauptmodul's strict decrease over the solving
/// window is first verified empirically at probe resolution; roots whose
/// values fall outside the reachable range (too close to the cusp values 0
/// and 16 for the q-series; see module docs) are omitted.
pub fn faber_roots_to_theta(
    p: &RationalPolynomial,
    bits: u32,
) -> Result<Vec<(Rational, Rational)>, ArcError> {
    let (theta_min, theta_max) = psi_solving_window();
    let mut level = PsiLevel::new(bits);

    // empirical strict-decrease check at probe resolution
    let probes = 512usize;
    let span = &theta_max - &theta_min;
    let mut prev_lo: Option<Rational> = None;
    let mut image_hi = Rational::zero(); // ψ(theta_min) lower bound
    let mut image_lo = Rational::zero(); // ψ(theta_max) upper bound
    for i in 0..=probes {
        let theta = &theta_min + &span * rat(i as i64, probes as i64);
        let (lo, hi) = level.bounds(&theta)?;
        if let Some(prev) = &prev_lo {
            if &hi >= prev {
                return Err(ArcError::NonMonotonicPsi { theta });
            }
        }
        if i == 0 {
            image_hi = lo.clone();
        }
        if i == probes {
            image_lo = hi.clone();
        }
        prev_lo = Some(lo);
    }

    let width_limit = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 40));
    let brackets = p.isolate_roots(&rat_int(0), &rat_int(16), &width_limit)?;
    let tol = rat(1, 10_000_000);
    let mut out = Vec::new();
    for (a, b) in brackets {
        let x = (&a + &b) / rat_int(2);
        // only roots strictly inside the certified reachable value range
        if x <= image_lo || x >= image_hi {
            continue;
        }
        let theta = invert_psi(&x, &theta_min, &theta_max, &mut level, &tol)?;
        out.push((x, theta));
    }
    Ok(out)
}

/// Bisection solve of `ψ(θ) = x` on `[lo, hi]` (ψ strictly decreasing).
fn invert_psi(
    x: &Rational,
    lo: &Rational,
    hi: &Rational,
    level: &mut PsiLevel,
    tol: &Rational,
) -> Result<Rational, ArcError> {
    let mut lo_t = lo.clone();
    let mut hi_t = hi.clone();
    while &hi_t - &lo_t > *tol {
        let mid = (&lo_t + &hi_t) / rat_int(2);
        // certified comparison ψ(mid) vs x, escalating on ties
        loop {
            let (plo, phi) = level.bounds(&mid)?;
            if plo > *x {
                lo_t = mid; // ψ(mid) > x: root lies to the right
                break;
            } else if phi < *x {
                hi_t = mid;
                break;
            }
            level
                .escalate()
                .map_err(|_| ArcError::SignUndecidable { theta: mid.clone() })?;
        }
    }
    Ok((&lo_t + &hi_t) / rat_int(2))
}

/// Refines a sign change of the weighted value to within `tol`, given a
/// bracket whose endpoints have certified opposite signs.
pub fn refine_sign_change(
    elem: &BasisElement,
    theta_lo: &Rational,
    theta_hi: &Rational,
    bits: u32,
    tol: &Rational,
) -> Result<Rational, ArcError> {
    let sign_at = |theta: &Rational, elem: &BasisElement| -> Result<i32, ArcError> {
        Ok(eval_on_arc(elem, theta, bits)?.sign())
    };
    let mut lo = theta_lo.clone();
    let mut hi = theta_hi.clone();
    let mut elem_now = elem.clone();
    let lo_sign = sign_at(&lo, &elem_now)?;
    let hi_sign = sign_at(&hi, &elem_now)?;
    if lo_sign == 0 || hi_sign == 0 || lo_sign == hi_sign {
        return Err(ArcError::SignUndecidable {
            theta: if lo_sign == 0 { lo } else { hi },
        });
    }
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / rat_int(2);
        let mut s = sign_at(&mid, &elem_now)?;
        // the midpoint can sit below the error bar right at the zero;
        // rebuild once with doubled resources before nudging the bracket
        if s == 0 {
            let longer = basis::cached(
                elem_now.family,
                elem_now.weight,
                elem_now.pole_order,
                elem_now.series.prec() * 2,
            )?;
            elem_now = longer;
            s = sign_at(&mid, &elem_now)?;
        }
        if s == 0 {
            // genuinely too close to the zero: shrink from both sides
            let quarter = (&hi - &lo) / rat_int(4);
            let new_lo = &lo + &quarter;
            let new_hi = &hi - &quarter;
            let sl = sign_at(&new_lo, &elem_now)?;
            let sh = sign_at(&new_hi, &elem_now)?;
            if sl == lo_sign && sh == hi_sign && sl != 0 && sh != 0 {
                lo = new_lo;
                hi = new_hi;
                continue;
            }
            return Err(ArcError::SignUndecidable { theta: mid });
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((&lo + &hi) / rat_int(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::make_f;
    use crate::series::rational_from_decimal;
    use num_traits::Signed;

    #[test]
    fn zero_bound_matches_known_values() {
        let cases = [
            (0, 16, 11),
            (0, 20, 14),
            (2, 20, 14),
            (4, 24, 17),
            (-2, 21, 14),
            (0, 0, 0),
            (4, 0, 1),
            (-4, 0, -1),
            (0, 1, 0),
            (0, 2, 1),
            (6, 10, 8),
        ];
        for (k, m, want) in cases {
            assert_eq!(theorem_zero_bound(k, m), want, "k={} m={}", k, m);
        }
    }

    #[test]
    fn zero_bound_is_the_exact_floor() {
        // bound t satisfies t ≤ (√2/2)m + k/4 < t+1, checked in exact
        // arithmetic over a grid
        for k in (-20..=20).step_by(2) {
            for m in 0..=40 {
                let t = theorem_zero_bound(k, m);
                let lhs = 4 * t - k;
                let ok_t = lhs <= 0 || lhs * lhs <= 8 * m * m;
                let lhs1 = 4 * (t + 1) - k;
                let ok_t1 = lhs1 <= 0 || lhs1 * lhs1 <= 8 * m * m;
                assert!(ok_t && !ok_t1, "k={} m={} t={}", k, m, t);
            }
        }
    }

    #[test]
    fn cosine_target_trivial_values() {
        // θ → 0: phase → 0, target → 2 (any k, m)
        let tiny = Interval::from_rational(&rat(1, 1_000_000), 128);
        let t = cosine_target(6, 5, &tiny, 128);
        assert!((t.hi_rational() - rat_int(2)).abs() < rat(1, 1000));

        // k = 0, m = 2, θ = π/2: 2cos(π) = −2
        let half_pi = pi_interval(160).mul_pow2(-1);
        let t = cosine_target(0, 2, &half_pi, 160);
        assert!(t.contains_rational(&rat_int(-2)));

        // θ = π, m = 0: phase is kθ/2; k = 2 gives 2cos(π) = −2 and
        // k = 4 gives 2cos(2π) = +2
        let pi = pi_interval(160);
        assert!(cosine_target(2, 0, &pi, 160).contains_rational(&rat_int(-2)));
        assert!(cosine_target(4, 0, &pi, 160).contains_rational(&rat_int(2)));
    }

    #[test]
    fn constant_form_weighs_to_one() {
        let elem = make_f(0, 0, 32).unwrap();
        let s = eval_on_arc(&elem, &rat_int(1), 128).unwrap();
        assert!(s.weighted_value.contains_rational(&rat_int(1)));
        assert!(s.tail_estimate.is_zero());
        assert!(s.imag_residual < rational_from_decimal("1e-30").unwrap());
        assert_eq!(s.sign(), 1);
    }

    #[test]
    fn pole_only_form_vanishes_at_the_arc_midpoint() {
        // f_{0,1} = hauptmodul − 8 vanishes where θ = π/2; evaluated on an
        // enclosure of π/2 the weighted value must straddle zero (the
        // stopping rule needs extra terms exactly at a zero, hence the
        // generous series length)
        let elem = make_f(0, 1, 240).unwrap();
        let half_pi = pi_interval(192).mul_pow2(-1);
        let wv = weighted_on_arc(&elem, &half_pi, 160).unwrap();
        let lo = wv.weighted.re.lo_rational() - &wv.tail;
        let hi = wv.weighted.re.hi_rational() + &wv.tail;
        assert!(lo <= Rational::zero() && Rational::zero() <= hi);
        assert!(hi - lo < rational_from_decimal("1e-20").unwrap());
    }

    #[test]
    fn realness_on_the_arc() {
        // imag residual ≤ tail + 2^{−(bits−10)}·|weighted| across elements
        // and angles
        let bits = 128u32;
        let slack = Rational::new(1.into(), num_bigint::BigInt::from(1u128 << (bits - 10)));
        for (k, m) in [(0i64, 1i64), (2, 1), (6, -3), (4, 2), (-2, 3)] {
            let elem = make_f(k, m, 200).unwrap();
            for theta in [rat(7854, 10_000), rat(3, 2), rat(2, 1)] {
                let s = eval_on_arc(&elem, &theta, bits).unwrap();
                let mag = s.weighted_value.mag().to_rational();
                let allowance = &s.tail_estimate + &slack * &mag;
                assert!(
                    s.imag_residual <= allowance,
                    "{} at theta={}: residual {} > allowance {}",
                    elem.label(),
                    theta,
                    decimal_string(&s.imag_residual, 6),
                    decimal_string(&allowance, 6),
                );
            }
        }
    }

    #[test]
    fn cube_of_weight_two_form_matches_direct_oracle() {
        // f_{6,−3} is exactly the cube of the weight-2 form; evaluate both
        // ways (series of the cube vs cube of the series value) at two
        // precisions and demand overlapping enclosures
        let elem = make_f(6, -3, 220).unwrap();
        let theta = rat(157, 100);
        let s = eval_on_arc(&elem, &theta, 128).unwrap();

        let work = 512 + 16;
        let f2 = crate::forms::eisenstein_f(220);
        let nome = arc_nome(&Interval::from_rational(&theta, work), work);
        let f_val = eval::eval_series_all_terms(&f2, &nome.q, 512).unwrap();
        let cube = f_val.powi(3, work);
        // apply the same weight: k = 6, m = −3 → radius^{−3}, phase e^{3iθ}
        let wmag = nome.radius.recip(work).unwrap().powi(3, work);
        let alpha = Interval::from_rational(&theta, work).mul_int(6).mul_pow2(-1);
        let wphase = ComplexInterval::new(cos_interval(&alpha, work), sin_interval(&alpha, work));
        let oracle = cube.mul(&wphase, work).scale(&wmag, work);

        let lo = s.weighted_value.lo_rational() - s.error_bar();
        let hi = s.weighted_value.hi_rational() + s.error_bar();
        assert!(oracle.re.lo_rational() <= hi && lo <= oracle.re.hi_rational());
    }

    #[test]
    fn scan_counts_and_matches_sturm_on_a_small_case() {
        // pole order 3 is far below the guaranteed-approximation range, so
        // the count need not reach the bound here; the binding check is
        // agreement with the exact Sturm count over the hauptmodul image of
        // the window (the element is a polynomial in the hauptmodul, and
        // the weight factor never vanishes, so arc zeros correspond
        // exactly to polynomial roots in the image)
        let (lo, hi) = default_window();
        let (report, samples) =
            scan_arc(Family::F, 0, 3, &lo, &hi, 160, 128).expect("scan should converge");
        assert_eq!(report.samples, 160);
        assert!(report.accepted > 0);
        assert_eq!(report.theorem_bound, 2);

        let elem = crate::basis::make_with_faber(Family::F, 0, 3, 40).unwrap();
        let p = elem.faber.as_ref().unwrap();
        let (plo, phi) = psi_window_of_theta_window(&lo, &hi, 128).unwrap();
        let sturm = p.count_roots_open(&plo, &phi).unwrap();
        assert_eq!(report.sign_changes, sturm);

        // CSV shape
        let row = samples[0].csv_row();
        assert_eq!(row.split(',').count(), 5);
        assert!(row.starts_with("7.85"));
    }

    #[test]
    fn constant_form_scan_has_no_changes() {
        let (lo, hi) = default_window();
        let (report, _) = scan_arc(Family::F, 0, 0, &lo, &hi, 16, 96).unwrap();
        assert_eq!(report.sign_changes, 0);
        assert_eq!(report.theorem_bound, 0);
        assert!(report.satisfied);
    }

    #[test]
    fn bad_windows_are_rejected() {
        let (lo, hi) = default_window();
        assert!(matches!(
            scan_arc(Family::F, 0, 1, &hi, &lo, 16, 96),
            Err(ArcError::BadWindow)
        ));
        assert!(matches!(
            scan_arc(Family::F, 0, 1, &lo, &hi, 1, 96),
            Err(ArcError::BadWindow)
        ));
        assert!(matches!(
            scan_arc(Family::F, 0, 1, &rat(-1, 2), &hi, 16, 96),
            Err(ArcError::BadWindow)
        ));
        assert!(matches!(
            scan_arc(Family::F, 0, 1, &lo, &rat_int(4), 16, 96),
            Err(ArcError::BadWindow)
        ));
    }

    #[test]
    fn linear_faber_root_maps_to_the_arc_midpoint() {
        // x − 8 is the Faber polynomial of the pole-order-1 element; its
        // root 8 sits exactly at θ = π/2
        let p = RationalPolynomial::from_integers(&[-8, 1]);
        let mapped = faber_roots_to_theta(&p, 128).unwrap();
        assert_eq!(mapped.len(), 1);
        let (x, theta) = &mapped[0];
        let isolation = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 40));
        assert!((x - rat_int(8)).abs() <= isolation, "x = {}", x);
        let half_pi = rational_from_decimal("1.5707963267948966192").unwrap();
        assert!(
            (theta - &half_pi).abs() < rat(1, 1_000_000),
            "theta = {}",
            decimal_string(theta, 12)
        );
    }

    #[test]
    fn rootless_and_out_of_range_polynomials_map_to_nothing() {
        let no_real = RationalPolynomial::from_integers(&[1, 0, 1]); // x² + 1
        assert!(faber_roots_to_theta(&no_real, 96).unwrap().is_empty());
        let outside = RationalPolynomial::from_integers(&[-20, 1]); // x − 20
        assert!(faber_roots_to_theta(&outside, 96).unwrap().is_empty());
    }

    #[test]
    fn refined_sign_change_matches_mapped_faber_root() {
        // cross-oracle at pole order 3: refine one scan sign change and
        // compare with the hauptmodul-inverted Faber root
        let (lo, hi) = default_window();
        let (_, samples) = scan_arc(Family::F, 0, 3, &lo, &hi, 160, 128).unwrap();
        let mut bracket = None;
        let mut last: Option<&ArcSample> = None;
        for s in &samples {
            if s.sign() != 0 {
                if let Some(prev) = last {
                    if prev.sign() != s.sign() {
                        bracket = Some((prev.theta.clone(), s.theta.clone()));
                        break;
                    }
                }
                last = Some(s);
            }
        }
        let (blo, bhi) = bracket.expect("pole order 3 must change sign in the window");
        let elem = basis::cached(Family::F, 0, 3, 300).unwrap();
        let tol = rat(1, 10_000_000);
        let refined = refine_sign_change(&elem, &blo, &bhi, 128, &tol).unwrap();

        let with_faber = crate::basis::make_with_faber(Family::F, 0, 3, 40).unwrap();
        let mapped = faber_roots_to_theta(with_faber.faber.as_ref().unwrap(), 128).unwrap();
        let closest = mapped
            .iter()
            .map(|(_, t)| (t - &refined).abs())
            .min()
            .unwrap();
        assert!(
            closest < rat(1, 1_000_000),
            "nearest mapped root is {} away",
            decimal_string(&closest, 6)
        );
    }
}
