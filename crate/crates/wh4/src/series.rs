//! Truncated Laurent series in the nome `q` with exact rational coefficients.
//!
//! A [`QSeries`] stores a dense window of coefficients together with two
//! exponent markers:
//!
//! * `lead` — the lowest exponent stored (may be negative for a pole),
//! * `prec` — the first *unknown* exponent.
//!
//! Everything below `lead` is known to be zero, everything in
//! `lead..prec` is stored exactly, and everything at `prec` or above is
//! unknown.  Asking for a coefficient at or beyond `prec` is a caller bug
//! and panics rather than silently returning zero; truncation is always
//! pessimistic, so a result's `prec` never promises more than the inputs
//! can support.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Convenience constructor for an integer-valued [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor for `num/den` (panics on zero denominator).
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Errors from series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Division (or inversion through a negative power) by the zero series.
    DivisionByZeroSeries,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::DivisionByZeroSeries => write!(f, "division by the zero series"),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Truncated Laurent series with exact rational coefficients.
///
/// Normal form: either `coeffs` is empty (the series is zero on all known
/// exponents, i.e. below `prec`) or the coefficient at `lead` is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    lead: i64,
    prec: i64,
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Builds a series from a coefficient window starting at `lead`;
    /// `prec` is derived as `lead + coeffs.len()`.  Leading zeros are
    /// stripped so the result is in normal form.
    pub fn new(lead: i64, coeffs: Vec<Rational>) -> Self {
        let prec = lead + coeffs.len() as i64;
        Self::make(lead, prec, coeffs)
    }

    /// Internal constructor enforcing the normal form.
    fn make(lead: i64, prec: i64, mut coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(prec - lead, coeffs.len() as i64);
        let leading_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros == coeffs.len() {
            return QSeries { lead: prec, prec, coeffs: Vec::new() };
        }
        if leading_zeros > 0 {
            coeffs.drain(..leading_zeros);
        }
        QSeries { lead: lead + leading_zeros as i64, prec, coeffs }
    }

    /// The series that is known to vanish at every exponent below `prec`.
    pub fn zero(prec: i64) -> Self {
        QSeries { lead: prec, prec, coeffs: Vec::new() }
    }

    /// The constant series `1` known through exponent `prec − 1`.
    pub fn one(prec: i64) -> Self {
        Self::constant(Rational::one(), prec)
    }

    /// A constant series known through exponent `prec − 1`.
    pub fn constant(c: Rational, prec: i64) -> Self {
        assert!(prec >= 1, "a constant needs prec >= 1 to be visible");
        let mut coeffs = vec![Rational::zero(); prec.max(1) as usize];
        coeffs[0] = c;
        Self::make(0, prec, coeffs)
    }

    /// `c · q^exp`, known through exponent `prec − 1`.
    pub fn monomial(c: Rational, exp: i64, prec: i64) -> Self {
        assert!(prec > exp, "monomial exponent must lie below prec");
        let mut coeffs = vec![Rational::zero(); (prec - exp) as usize];
        coeffs[0] = c;
        Self::make(exp, prec, coeffs)
    }

    /// Test helper: builds a series from `(exponent, integer coefficient)`
    /// pairs, known through `prec − 1`.
    pub fn from_terms(terms: &[(i64, i64)], prec: i64) -> Self {
        let lead = terms.iter().map(|&(e, _)| e).min().unwrap_or(prec);
        assert!(terms.iter().all(|&(e, _)| e < prec));
        let mut coeffs = vec![Rational::zero(); (prec - lead).max(0) as usize];
        for &(e, c) in terms {
            coeffs[(e - lead) as usize] += rat_int(c);
        }
        Self::make(lead, prec, coeffs)
    }

    /// Lowest stored exponent.  For the zero series this equals `prec`.
    pub fn lead(&self) -> i64 {
        self.lead
    }

    /// First unknown exponent.
    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at exponent `n`.
    ///
    /// Panics if `n >= prec`: that coefficient was never computed, and
    /// treating it as zero would silently corrupt downstream results.
    pub fn coeff(&self, n: i64) -> Rational {
        assert!(
            n < self.prec,
            "coefficient at exponent {} requested, but the series is only known below {}",
            n,
            self.prec
        );
        if n < self.lead {
            Rational::zero()
        } else {
            self.coeffs[(n - self.lead) as usize].clone()
        }
    }

    /// Coefficient at `n`, or `None` when `n` is at or beyond `prec`.
    pub fn try_coeff(&self, n: i64) -> Option<Rational> {
        if n < self.prec {
            Some(self.coeff(n))
        } else {
            None
        }
    }

    /// Iterator over the stored `(exponent, coefficient)` pairs.
    pub fn iter_terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.lead + i as i64, c))
    }

    /// Restricts the known range: keeps coefficients below `new_prec`.
    /// Panics if this would *extend* the known range.
    pub fn truncate(&self, new_prec: i64) -> Self {
        assert!(new_prec <= self.prec, "truncate cannot extend precision");
        if new_prec <= self.lead {
            return QSeries::zero(new_prec);
        }
        let keep = (new_prec - self.lead) as usize;
        Self::make(self.lead, new_prec, self.coeffs[..keep].to_vec())
    }

    /// Negation; precision is unchanged.
    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| -c.clone()).collect();
        QSeries { lead: self.lead, prec: self.prec, coeffs }
    }

    /// Multiplies every coefficient by the scalar `s`.
    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return QSeries::zero(self.prec);
        }
        let coeffs = self.coeffs.iter().map(|c| c * s).collect();
        QSeries { lead: self.lead, prec: self.prec, coeffs }
    }

    /// Sum; the result is known only where both inputs are known:
    /// `prec = min(a.prec, b.prec)`.
    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let lead = self.lead.min(other.lead).min(prec);
        let mut coeffs = vec![Rational::zero(); (prec - lead) as usize];
        for (src, out_lead) in [(self, lead), (other, lead)] {
            for (e, c) in src.iter_terms() {
                if e < prec {
                    coeffs[(e - out_lead) as usize] += c;
                }
            }
        }
        Self::make(lead, prec, coeffs)
    }

    /// Difference, with the same precision rule as [`QSeries::add`].
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product.  A factor only sees the other's known window, so
    /// `prec = min(a.prec + b.lead, b.prec + a.lead)`: multiplying by a
    /// pole (negative `lead`) erodes precision, multiplying by a zero of
    /// high order extends it.
    pub fn mul(&self, other: &Self) -> Self {
        let prec = (self.prec + other.lead).min(other.prec + self.lead);
        let lead = self.lead + other.lead;
        if self.is_zero() || other.is_zero() || lead >= prec {
            return QSeries::zero(prec);
        }
        let mut coeffs = vec![Rational::zero(); (prec - lead) as usize];
        for (ea, ca) in self.iter_terms() {
            if ca.is_zero() {
                continue;
            }
            for (eb, cb) in other.iter_terms() {
                let e = ea + eb;
                if e >= prec {
                    break;
                }
                coeffs[(e - lead) as usize] += ca * cb;
            }
        }
        Self::make(lead, prec, coeffs)
    }

    /// Quotient.  Requires a nonzero divisor (in normal form its leading
    /// coefficient is then invertible).  Writing `d = b.lead`, coefficient
    /// `n` of the quotient needs `a` known at `n + d` and `b` known through
    /// `n + d − a.lead + b.lead`, so
    /// `prec = min(a.prec − d, b.prec + a.lead − 2d)`.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        if other.is_zero() {
            return Err(SeriesError::DivisionByZeroSeries);
        }
        let d = other.lead;
        let prec = (self.prec - d).min(other.prec + self.lead - 2 * d);
        if self.is_zero() {
            return Ok(QSeries::zero(prec));
        }
        let lead = self.lead - d;
        if lead >= prec {
            return Ok(QSeries::zero(prec));
        }
        let inv_b0 = Rational::one() / other.coeff(d);
        let n_out = (prec - lead) as usize;
        let mut out = Vec::with_capacity(n_out);
        for i in 0..n_out {
            // a_{lead+i+d} = sum_{j<=i} out_j * b_{lead+i-j+d}
            let target = self.coeff(lead + i as i64 + d);
            let mut acc = target;
            for (j, qc) in out.iter().enumerate().take(i) {
                let bc = other.coeff(lead + (i - j) as i64 + d - lead);
                if !bc.is_zero() {
                    acc -= qc * &bc;
                }
            }
            // j == i term uses b at exponent d which is the pivot.
            out.push(acc * &inv_b0);
        }
        Ok(Self::make(lead, prec, out))
    }

    /// Integer power via repeated multiplication; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        if e == 0 {
            return Ok(QSeries::one(self.prec));
        }
        if e < 0 {
            let p = self.pow(-e)?;
            let one = QSeries::one(p.prec - p.lead);
            return one.div(&p);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// The operator `q·d/dq`: multiplies coefficient `n` by `n`.
    pub fn q_derivative(&self) -> Self {
        let coeffs = self
            .iter_terms()
            .map(|(e, c)| c * rat_int(e))
            .collect::<Vec<_>>();
        Self::make(self.lead, self.prec, coeffs)
    }

    /// `U₂`: keeps even exponents and halves them.  Exponent `n` of the
    /// result is known exactly when `2n` was, so `prec' = ceil(prec/2)`.
    pub fn u2(&self) -> Self {
        let prec = div_ceil(self.prec, 2);
        let lead = div_ceil(self.lead, 2).min(prec);
        let mut coeffs = vec![Rational::zero(); (prec - lead) as usize];
        for (e, c) in self.iter_terms() {
            if e.rem_euclid(2) == 0 && e / 2 < prec {
                coeffs[(e / 2 - lead) as usize] = c.clone();
            }
        }
        Self::make(lead, prec, coeffs)
    }

    /// `V₂`: doubles every exponent (`a(q) ↦ a(q²)`).  The highest known
    /// exponent `prec − 1` doubles, and the odd slot above it is known to
    /// be zero, so `prec' = 2·prec − 1`.
    pub fn v2(&self) -> Self {
        let prec = 2 * self.prec - 1;
        let lead = (2 * self.lead).min(prec);
        let mut coeffs = vec![Rational::zero(); (prec - lead) as usize];
        for (e, c) in self.iter_terms() {
            coeffs[(2 * e - lead) as usize] = c.clone();
        }
        Self::make(lead, prec, coeffs)
    }

    /// True when the two series agree at every exponent where both are
    /// known (exponents below `min(prec)`).
    pub fn agrees_with(&self, other: &Self) -> bool {
        let prec = self.prec.min(other.prec);
        let lo = self.lead.min(other.lead);
        (lo..prec).all(|n| self.coeff(n) == other.coeff(n))
    }

    /// Serializes as `{"lead":…,"prec":…,"coeffs":["num/den",…]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lead": self.lead,
            "prec": self.prec,
            "coeffs": self.coeffs.iter().map(rational_string).collect::<Vec<_>>(),
        })
    }
}

/// Renders a rational as `num/den` (always with the denominator, so the
/// format round-trips unambiguously).
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `10^k` as a rational (negative `k` allowed).
fn pow10_rat(k: i64) -> Rational {
    let p = num_traits::pow::Pow::pow(&BigInt::from(10), k.unsigned_abs());
    if k >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Renders a rational in scientific decimal notation with `sig` significant
/// digits, rounding half away from zero: `decimal_string(&rat(1,3), 5)` is
/// `"3.3333e-1"`.  Output is deterministic and fixed-width per `sig`.
pub fn decimal_string(r: &Rational, sig: u32) -> String {
    assert!(sig >= 1, "need at least one significant digit");
    if r.is_zero() {
        return "0e0".to_string();
    }
    let a = r.abs();
    // decimal exponent: the unique e with 10^e ≤ |r| < 10^{e+1}
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    while pow10_rat(e) > a {
        e -= 1;
    }
    while pow10_rat(e + 1) <= a {
        e += 1;
    }
    let scaled = &a * pow10_rat(sig as i64 - 1 - e);
    let mut mantissa = (scaled + Rational::new(BigInt::one(), BigInt::from(2))).floor();
    let cap = Rational::from_integer(num_traits::pow::Pow::pow(&BigInt::from(10), sig));
    if mantissa >= cap {
        // rounding carried into the next decade (e.g. 0.9999 → 1.000)
        mantissa = (mantissa / Rational::from_integer(BigInt::from(10))).floor();
        e += 1;
    }
    let digits = mantissa.to_integer().to_string();
    debug_assert_eq!(digits.len(), sig as usize);
    let sign = if r.is_negative() { "-" } else { "" };
    if sig == 1 {
        format!("{}{}e{}", sign, digits, e)
    } else {
        format!("{}{}.{}e{}", sign, &digits[..1], &digits[1..], e)
    }
}

/// Error from [`rational_from_decimal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecimalParseError(pub String);

impl fmt::Display for DecimalParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid decimal literal: {}", self.0)
    }
}

impl std::error::Error for DecimalParseError {}

/// Parses a decimal literal into an exact rational.
///
/// Accepts an optional sign, an integer part, an optional fractional part,
/// and an optional `e`/`E` exponent: `"-2.5e-3"` parses to `-1/400`.
pub fn rational_from_decimal(s: &str) -> Result<Rational, DecimalParseError> {
    let err = || DecimalParseError(s.to_string());
    let t = s.trim();
    let (mantissa, exp10) = match t.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = t[pos + 1..].parse().map_err(|_| err())?;
            (&t[..pos], e)
        }
        None => (t, 0),
    };
    let (negative, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(err());
    }
    let digits: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .map_err(|_| err())?;
    let signed = if negative { -digits } else { digits };
    let shift = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let scale = num_traits::pow::Pow::pow(&ten, shift.unsigned_abs());
    Ok(if shift >= 0 {
        Rational::from_integer(signed * scale)
    } else {
        Rational::new(signed, scale)
    })
}

fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    num_integer::Integer::div_ceil(&a, &b)
}

impl fmt::Display for QSeries {
    /// Human form, e.g. `q^-1 + 8 + 20q - 62q^3 + O(q^10)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.iter_terms() {
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
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{}", e)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.prec)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{}]", self)
    }
}
