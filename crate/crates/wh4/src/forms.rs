//! The fixed stable of level-4 forms everything else is built from.
//!
//! * `theta` — the Jacobi theta function `1 + 2q + 2q⁴ + 2q⁹ + …`,
//!   weight 1/2; only its fourth power is used directly.
//! * `eisenstein_f` — the weight-2 form `F = Σ_{n odd} σ(n) qⁿ`, which
//!   vanishes only at the cusp ∞.
//! * the hauptmodul `ψ = θ⁴/F` in three normalizations: `psi_half`
//!   (vanishes at the cusp 1/2), `psi_zero = ψ − 16` (vanishes at the
//!   cusp 0) and `psi_inf = ψ − 8` (zero constant term).
//! * `g21 = F·ψ_zero·ψ_half = θ⁴·ψ_zero`, the weight-2 generator dual to
//!   the constant function.
//!
//! Constructors take the first unknown exponent `prec` and return a series
//! whose precision is exactly that.  [`named_form`] additionally runs the
//! defining identity cross-checks and memoizes results.

use crate::series::{rat_int, QSeries, Rational};
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

/// Sum of divisors of `n` (`n >= 1`) by trial division.
pub fn sigma(n: u64) -> u64 {
    debug_assert!(n >= 1);
    let mut total = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            total += d;
            let other = n / d;
            if other != d {
                total += other;
            }
        }
        d += 1;
    }
    total
}

/// `θ(q) = 1 + 2 Σ_{n≥1} q^{n²}`, known below `prec`.
pub fn theta(prec: i64) -> QSeries {
    assert!(prec >= 1);
    let mut coeffs = vec![Rational::zero(); prec as usize];
    coeffs[0] = rat_int(1);
    let mut n = 1i64;
    while n * n < prec {
        coeffs[(n * n) as usize] = rat_int(2);
        n += 1;
    }
    QSeries::new(0, coeffs)
}

/// `θ⁴`, computed by squaring `θ` twice.
pub fn theta4(prec: i64) -> QSeries {
    let t = theta(prec);
    let t2 = t.mul(&t);
    t2.mul(&t2)
}

/// `E₂(q) = 1 − 24 Σ σ(n) qⁿ`, the quasimodular Eisenstein series.
pub fn eisenstein_e2(prec: i64) -> QSeries {
    assert!(prec >= 1);
    let mut coeffs = vec![Rational::zero(); prec as usize];
    coeffs[0] = rat_int(1);
    for n in 1..prec {
        coeffs[n as usize] = rat_int(-24) * rat_int(sigma(n as u64) as i64);
    }
    QSeries::new(0, coeffs)
}

/// `F = Σ_{n odd} σ(n) qⁿ = q + 4q³ + 6q⁵ + …`, weight 2, monic zero at ∞.
pub fn eisenstein_f(prec: i64) -> QSeries {
    assert!(prec >= 2);
    let mut coeffs = vec![Rational::zero(); prec as usize];
    let mut n = 1i64;
    while n < prec {
        coeffs[n as usize] = rat_int(sigma(n as u64) as i64);
        n += 2;
    }
    QSeries::new(0, coeffs)
}

/// Which normalization of the hauptmodul to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiVariant {
    /// `θ⁴/F = q⁻¹ + 8 + 20q − 62q³ + …`; vanishes at the cusp 1/2.
    Half,
    /// `ψ − 16`; vanishes at the cusp 0.
    Zero,
    /// `ψ − 8`; zero constant term, vanishes at the arc midpoint.
    Inf,
}

/// The hauptmodul `ψ` in the requested normalization, known below `prec`.
pub fn hauptmodul(variant: PsiVariant, prec: i64) -> QSeries {
    let num = theta4(prec + 2);
    let den = eisenstein_f(prec + 2);
    let psi = num.div(&den).expect("F is monic, division cannot fail");
    debug_assert_eq!(psi.prec(), prec);
    let shift = match variant {
        PsiVariant::Half => return psi,
        PsiVariant::Zero => rat_int(-16),
        PsiVariant::Inf => rat_int(-8),
    };
    psi.add(&QSeries::constant(shift, prec))
}

/// `g₂,₁ = θ⁴·ψ_zero = q⁻¹ − 20q + 186q³ − …`, known below `prec`.
pub fn g21(prec: i64) -> QSeries {
    let t4 = theta4(prec + 1);
    let pz = hauptmodul(PsiVariant::Zero, prec);
    t4.mul(&pz)
}

/// Names for the forms exposed through the API and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormName {
    Theta,
    Theta4,
    E2,
    F,
    PsiHalf,
    PsiZero,
    PsiInf,
    G21,
}

impl FormName {
    pub const ALL: [FormName; 8] = [
        FormName::Theta,
        FormName::Theta4,
        FormName::E2,
        FormName::F,
        FormName::PsiHalf,
        FormName::PsiZero,
        FormName::PsiInf,
        FormName::G21,
    ];

    /// Stable string form used by the CLI and JSON output.
    pub fn as_str(&self) -> &'static str {
        match self {
            FormName::Theta => "theta",
            FormName::Theta4 => "theta4",
            FormName::E2 => "E2",
            FormName::F => "F",
            FormName::PsiHalf => "psi_half",
            FormName::PsiZero => "psi_zero",
            FormName::PsiInf => "psi_inf",
            FormName::G21 => "g21",
        }
    }

    pub fn parse(s: &str) -> Option<FormName> {
        FormName::ALL.iter().copied().find(|n| n.as_str() == s)
    }

    /// Weight of the form (θ has weight 1/2 and is reported as the weight
    /// of its fourth power divided by four; every API consumer only needs
    /// the integer weights, so θ reports 0 here and carries a note).
    fn weight(&self) -> i64 {
        match self {
            FormName::Theta => 0,
            FormName::Theta4 => 2,
            FormName::E2 => 2,
            FormName::F => 2,
            FormName::PsiHalf | FormName::PsiZero | FormName::PsiInf => 0,
            FormName::G21 => 2,
        }
    }
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// A named form bundled with its weight and expansion.
#[derive(Debug, Clone)]
pub struct NamedForm {
    pub name: FormName,
    pub weight: i64,
    pub series: QSeries,
}

fn cache() -> &'static Mutex<HashMap<(FormName, i64), QSeries>> {
    static CACHE: OnceLock<Mutex<HashMap<(FormName, i64), QSeries>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds a named form at the requested precision, asserting the defining
/// identities (ψ·F = θ⁴, the constant-shift relations, and the two
/// independent constructions of `g₂,₁`).  Results are memoized per
/// `(name, prec)` behind a mutex.
pub fn named_form(name: FormName, prec: i64) -> NamedForm {
    if let Some(series) = cache().lock().unwrap().get(&(name, prec)) {
        return NamedForm { name, weight: name.weight(), series: series.clone() };
    }
    let series = match name {
        FormName::Theta => theta(prec),
        FormName::Theta4 => {
            let t4 = theta4(prec);
            let by_pow = theta(prec).pow(4).unwrap();
            assert!(t4.agrees_with(&by_pow), "theta4 must equal theta^4");
            t4
        }
        FormName::E2 => eisenstein_e2(prec),
        FormName::F => eisenstein_f(prec),
        FormName::PsiHalf | FormName::PsiZero | FormName::PsiInf => {
            let psi = hauptmodul(PsiVariant::Half, prec);
            let product = hauptmodul(PsiVariant::Half, prec + 2).mul(&eisenstein_f(prec + 2));
            assert!(
                product.agrees_with(&theta4(prec)),
                "psi_half * F must reproduce theta4"
            );
            match name {
                FormName::PsiHalf => psi,
                FormName::PsiZero => {
                    psi.add(&QSeries::constant(rat_int(-16), prec))
                }
                FormName::PsiInf => psi.add(&QSeries::constant(rat_int(-8), prec)),
                _ => unreachable!(),
            }
        }
        FormName::G21 => {
            let g = g21(prec);
            let via_derivative = hauptmodul(PsiVariant::Inf, prec).q_derivative().neg();
            assert!(
                g.agrees_with(&via_derivative),
                "g21 must equal -q d/dq of psi_inf"
            );
            g
        }
    };
    cache()
        .lock()
        .unwrap()
        .insert((name, prec), series.clone());
    NamedForm { name, weight: name.weight(), series }
}
