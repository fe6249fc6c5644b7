//! Dense univariate polynomials over the exact rationals, with Sturm-chain
//! root counting and bisection-based root isolation.
//!
//! Counting is exact: the Sturm chain is built with rational remainders and
//! evaluated at rational endpoints, so there is no floating error anywhere.
//! When an endpoint happens to be a root, the interval is shrunk inward by
//! `2⁻⁶⁴` and the endpoint root is reported separately — the shrink is far
//! below the root separation of every polynomial this crate produces.

use crate::series::{rat_int, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Errors from polynomial queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Root counting over an interval needs a nonzero polynomial.
    ZeroPolynomial,
    /// Raised when integer coefficients were required but a rational
    /// survived (used by the Faber extraction path).
    NonIntegralCoefficient,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "the zero polynomial has no root count"),
            PolyError::NonIntegralCoefficient => {
                write!(f, "expected integer coefficients, found a proper rational")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// Polynomial with exact rational coefficients, ascending powers, and no
/// trailing zeros (the zero polynomial stores an empty vector).
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn from_integers(ints: &[i64]) -> Self {
        Self::new(ints.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_int(i as i64 + 1))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coefficient(i) - other.coefficient(i));
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Remainder of Euclidean division by a nonzero divisor.
    pub fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "polynomial remainder needs a nonzero divisor");
        let mut r = self.coeffs.clone();
        let d = divisor.coeffs.len();
        let lead_inv = Rational::one() / divisor.coeffs[d - 1].clone();
        // Each pass eliminates the current top coefficient, so the vector
        // shrinks by one per iteration.
        while r.len() >= d {
            let top = r.last().unwrap().clone();
            if !top.is_zero() {
                let k = r.len() - d;
                let factor = top * &lead_inv;
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let v = c * &factor;
                    r[k + i] -= v;
                }
            }
            r.pop();
        }
        Self::new(r)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as big integers (ascending), or an error if any
    /// coefficient is a proper rational.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>, PolyError> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(PolyError::NonIntegralCoefficient)
                }
            })
            .collect()
    }

    /// The Sturm chain: `p₀ = p`, `p₁ = p'`, `p_{i+1} = −rem(p_{i−1}, p_i)`.
    fn sturm_chain(&self) -> Vec<RationalPolynomial> {
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let next = chain[n - 2].rem(&chain[n - 1]).neg();
            chain.push(next);
        }
        chain.pop();
        chain
    }

    fn sign_variations(chain: &[RationalPolynomial], x: &Rational) -> usize {
        let mut variations = 0;
        let mut last_sign = 0i8;
        for p in chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last_sign != 0 && s != last_sign {
                    variations += 1;
                }
                last_sign = s;
            }
        }
        variations
    }

    fn count_open_with_chain(&self, chain: &[RationalPolynomial], lo: &Rational, hi: &Rational) -> usize {
        if lo >= hi {
            return 0;
        }
        let nudge = Rational::new(BigInt::one(), BigInt::from(2u8).pow(64));
        let mut a = lo.clone();
        let mut b = hi.clone();
        if self.eval(&a).is_zero() {
            a += &nudge;
        }
        if self.eval(&b).is_zero() {
            b -= &nudge;
        }
        if a >= b {
            return 0;
        }
        let va = Self::sign_variations(chain, &a);
        let vb = Self::sign_variations(chain, &b);
        // V(a) − V(b) counts roots in (a, b]; after the nudge b is not a
        // root, so the half-open and open counts coincide.
        va.saturating_sub(vb)
    }

    /// Number of **distinct** real roots in the open interval `(lo, hi)`.
    ///
    /// Endpoints that happen to be roots are excluded by nudging inward by
    /// `2⁻⁶⁴` before taking Sturm variations; this assumes roots are
    /// separated by more than `2⁻⁶⁴`, which holds for every polynomial the
    /// crate generates.
    pub fn count_roots_open(&self, lo: &Rational, hi: &Rational) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let chain = self.sturm_chain();
        Ok(self.count_open_with_chain(&chain, lo, hi))
    }

    /// Number of distinct real roots in the closed interval `[lo, hi]`:
    /// the open count plus the endpoints that are roots.
    pub fn count_roots_closed(&self, lo: &Rational, hi: &Rational) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut count = self.count_roots_open(lo, hi)?;
        if self.eval(lo).is_zero() {
            count += 1;
        }
        if hi > lo && self.eval(hi).is_zero() {
            count += 1;
        }
        Ok(count)
    }

    /// Isolating intervals for the distinct real roots in `(lo, hi)`:
    /// disjoint open rational intervals, each containing exactly one root,
    /// ordered left to right.  Intervals are narrowed to width below
    /// `width_limit` by further bisection.
    pub fn isolate_roots(
        &self,
        lo: &Rational,
        hi: &Rational,
        width_limit: &Rational,
    ) -> Result<Vec<(Rational, Rational)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let chain = self.sturm_chain();
        let total = self.count_open_with_chain(&chain, lo, hi);
        let mut out = Vec::with_capacity(total);
        let mut stack = vec![(lo.clone(), hi.clone(), total)];
        while let Some((a, b, n)) = stack.pop() {
            if n == 0 {
                continue;
            }
            let width = &b - &a;
            if n == 1 && width < *width_limit {
                out.push((a, b));
                continue;
            }
            let mut mid = (&a + &b) / rat_int(2);
            // avoid splitting exactly on a root: shift the midpoint a touch
            if self.eval(&mid).is_zero() {
                mid = (&a + &mid) / rat_int(2);
            }
            let left = self.count_open_with_chain(&chain, &a, &mid);
            let mid_is_root = self.eval(&mid).is_zero() as usize;
            let right = n - left - mid_is_root;
            stack.push((mid.clone(), b, right));
            if mid_is_root == 1 {
                // a root exactly at the midpoint: emit a tiny interval
                let eps = width_limit / rat_int(4);
                out.push((&mid - &eps, &mid + &eps));
            }
            stack.push((a, mid, left));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        Ok(out)
    }

    /// Serialized coefficient list (ascending) as integer strings; requires
    /// integral coefficients.
    pub fn to_integer_json(&self) -> Result<serde_json::Value, PolyError> {
        let ints = self.integer_coeffs()?;
        Ok(serde_json::Value::Array(
            ints.iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        ))
    }
}

impl fmt::Display for RationalPolynomial {
    /// Descending powers in `x`, e.g. `x^2 - 24x + 80`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolynomial[{}]", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn eval_and_derivative() {
        let p = RationalPolynomial::from_integers(&[80, -24, 1]); // x^2 - 24x + 80
        assert_eq!(p.eval(&rat_int(4)), rat_int(0));
        assert_eq!(p.eval(&rat_int(20)), rat_int(0));
        assert_eq!(p.derivative(), RationalPolynomial::from_integers(&[-24, 2]));
    }

    #[test]
    fn remainder_of_division() {
        // (x^2 + 1) rem (x - 1) = 2
        let p = RationalPolynomial::from_integers(&[1, 0, 1]);
        let d = RationalPolynomial::from_integers(&[-1, 1]);
        assert_eq!(p.rem(&d), RationalPolynomial::from_integers(&[2]));
    }

    #[test]
    fn count_simple_roots() {
        // x - 8 has one root in (0, 16)
        let p = RationalPolynomial::from_integers(&[-8, 1]);
        assert_eq!(p.count_roots_open(&rat_int(0), &rat_int(16)).unwrap(), 1);
        // x^2 + 1 has none
        let q = RationalPolynomial::from_integers(&[1, 0, 1]);
        assert_eq!(q.count_roots_open(&rat_int(0), &rat_int(16)).unwrap(), 0);
    }

    #[test]
    fn endpoint_roots_are_excluded_from_open_count() {
        // x(x - 16)(x - 5)
        let p = RationalPolynomial::from_integers(&[0, 80, -21, 1]);
        assert_eq!(p.count_roots_open(&rat_int(0), &rat_int(16)).unwrap(), 1);
        assert_eq!(p.count_roots_closed(&rat_int(0), &rat_int(16)).unwrap(), 3);
    }

    #[test]
    fn repeated_roots_count_once() {
        // (x - 3)^2 (x - 7)
        let p = RationalPolynomial::from_integers(&[-63, 51, -13, 1]);
        assert_eq!(p.count_roots_open(&rat_int(0), &rat_int(16)).unwrap(), 2);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        let z = RationalPolynomial::zero();
        assert_eq!(
            z.count_roots_open(&rat_int(0), &rat_int(1)),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn isolation_separates_close_roots() {
        // roots at 1/3 and 2/5 (distance 1/15)
        let p = RationalPolynomial::new(vec![rat(2, 15), -rat(11, 15), rat_int(1)]);
        let limit = rat(1, 1_000_000);
        let iso = p.isolate_roots(&rat_int(0), &rat_int(1), &limit).unwrap();
        assert_eq!(iso.len(), 2);
        let third = rat(1, 3);
        let two_fifths = rat(2, 5);
        assert!(iso[0].0 < third && third < iso[0].1);
        assert!(iso[1].0 < two_fifths && two_fifths < iso[1].1);
        assert!(iso[0].1 <= iso[1].0);
    }

    #[test]
    fn display_descending() {
        let p = RationalPolynomial::from_integers(&[80, -24, 1]);
        assert_eq!(format!("{}", p), "x^2 - 24x + 80");
    }

    mod constructed_root_properties {
        use super::*;
        use proptest::prelude::*;

        /// Build ∏ (d·x − n) · ∏ (x² + bx + c) with b² − 4c < 0, so the
        /// real roots are exactly the chosen rationals n/d.
        fn poly_with_roots(
            roots: &[(i64, i64)],
            complex_pairs: &[(i64, i64)],
        ) -> RationalPolynomial {
            let mut p = RationalPolynomial::from_integers(&[1]);
            for &(n, d) in roots {
                p = p.mul(&RationalPolynomial::from_integers(&[-n, d]));
            }
            for &(b, c) in complex_pairs {
                if b * b - 4 * c < 0 {
                    p = p.mul(&RationalPolynomial::from_integers(&[c, b, 1]));
                }
            }
            p
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn sturm_count_matches_constructed_roots(
                numerators in proptest::collection::vec(-50i64..50, 0..6),
                dens in proptest::collection::vec(1i64..7, 6),
                quads in proptest::collection::vec((-4i64..4, 5i64..40), 0..3),
                lo_num in -60i64..0,
                hi_num in 1i64..60,
            ) {
                let roots: Vec<(i64, i64)> =
                    numerators.iter().zip(&dens).map(|(&n, &d)| (n, d)).collect();
                let p = poly_with_roots(&roots, &quads);
                let lo = rat(lo_num, 3);
                let hi = rat(hi_num, 3);
                let mut distinct: Vec<Rational> =
                    roots.iter().map(|&(n, d)| rat(n, d)).collect();
                distinct.sort();
                distinct.dedup();
                let expected_open = distinct
                    .iter()
                    .filter(|r| **r > lo && **r < hi)
                    .count();
                let expected_closed = distinct
                    .iter()
                    .filter(|r| **r >= lo && **r <= hi)
                    .count();
                prop_assert_eq!(p.count_roots_open(&lo, &hi).unwrap(), expected_open);
                prop_assert_eq!(p.count_roots_closed(&lo, &hi).unwrap(), expected_closed);
            }

            #[test]
            fn isolation_brackets_every_root(
                numerators in proptest::collection::vec(-30i64..30, 1..5),
                dens in proptest::collection::vec(1i64..5, 5),
            ) {
                let roots: Vec<(i64, i64)> =
                    numerators.iter().zip(&dens).map(|(&n, &d)| (n, d)).collect();
                let p = poly_with_roots(&roots, &[]);
                let mut distinct: Vec<Rational> =
                    roots.iter().map(|&(n, d)| rat(n, d)).collect();
                distinct.sort();
                distinct.dedup();
                let lo = rat_int(-40);
                let hi = rat_int(40);
                let limit = rat(1, 1 << 30);
                let iso = p.isolate_roots(&lo, &hi, &limit).unwrap();
                prop_assert_eq!(iso.len(), distinct.len());
                for (interval, root) in iso.iter().zip(&distinct) {
                    prop_assert!(interval.0 < *root && *root < interval.1);
                    prop_assert!(&interval.1 - &interval.0 < limit);
                }
            }
        }
    }
}
