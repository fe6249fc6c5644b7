//! Canonical bases for the spaces of weakly holomorphic modular forms on
//! Γ₀(4), organized in four families indexed by weight and pole order.
//!
//! Each family member is the unique form `q^{−m} + …` whose expansion has a
//! prescribed gap of vanishing coefficients after the pole:
//!
//! | family | spanning set                  | gap (forced zeros) | free tail |
//! |--------|-------------------------------|--------------------|-----------|
//! | `f`    | `F^ℓ·ψ^j`                     | `−m+1 ..= ℓ`       | `ℓ+1 …`   |
//! | `g`    | `F^ℓ·ψ·ψ₀·ψ^j`                | `−m+1 ..= ℓ−2`     | `ℓ−1 …`   |
//! | `h`    | `F^ℓ·ψ₀·ψ^j`                  | `−m+1 ..= ℓ−1`     | `ℓ …`     |
//! | `i`    | `F^ℓ·ψ·ψ^j`                   | `−m+1 ..= ℓ−1`     | `ℓ …`     |
//!
//! with `ℓ = k/2`, `ψ = ψ_{1/2}` the hauptmodul and `ψ₀ = ψ − 16`.  The
//! spanning sets are triangular in the leading exponent (the `j`-th element
//! leads at the gap top minus `j`), so a single monic echelon-reduction pass
//! produces the member; every coefficient stays an exact integer.
//!
//! Members of the `f` and `g` families factor as the prefactor times an
//! integer polynomial in `ψ` (a generalized Faber polynomial); the zeros of
//! those polynomials in `[0, 16]` control where the form vanishes on the
//! lower boundary arc of the fundamental domain.

use crate::forms::{eisenstein_f, hauptmodul, PsiVariant};
use crate::poly::RationalPolynomial;
use crate::series::{QSeries, SeriesError};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// The four basis families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Holomorphic at the cusp 0, free tail starts at `q^{ℓ+1}`.
    F,
    /// Vanishes at the cusps 0 and 1/2, free tail starts at `q^{ℓ−1}`.
    G,
    /// Vanishes at the cusp 0, free tail starts at `q^ℓ`.
    H,
    /// Vanishes at the cusp 1/2, free tail starts at `q^ℓ`.
    I,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::F, Family::G, Family::H, Family::I];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::F => "f",
            Family::G => "g",
            Family::H => "h",
            Family::I => "i",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "f" | "F" => Some(Family::F),
            "g" | "G" => Some(Family::G),
            "h" | "H" => Some(Family::H),
            "i" | "I" => Some(Family::I),
            _ => None,
        }
    }

    /// Smallest admissible pole order for weight `2ℓ`.
    pub fn min_pole_order(&self, ell: i64) -> i64 {
        match self {
            Family::F => -ell,
            Family::G => -ell + 2,
            Family::H | Family::I => -ell + 1,
        }
    }

    /// Highest exponent forced to zero; the free tail starts right after.
    pub fn gap_top(&self, ell: i64) -> i64 {
        match self {
            Family::F => ell,
            Family::G => ell - 2,
            Family::H | Family::I => ell - 1,
        }
    }

    /// Degree of the Faber polynomial for pole order `m`, where defined.
    pub fn faber_degree(&self, ell: i64, m: i64) -> Option<i64> {
        match self {
            Family::F => Some(ell + m),
            Family::G => Some(ell + m - 2),
            Family::H | Family::I => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// Errors raised by basis construction and Faber extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisError {
    /// Weights must be even: `ℓ = k/2` drives every exponent bound.
    OddWeight { weight: i64 },
    /// The requested pole order lies below the family minimum.
    PoleOrderTooSmall {
        family: Family,
        weight: i64,
        pole_order: i64,
        min: i64,
    },
    /// The requested output precision cannot even cover the forced gap.
    InsufficientPrecision { needed: i64, got: i64 },
    /// Reduction finished but a forced-zero exponent is nonzero — this
    /// signals an internal inconsistency, never expected in practice.
    GapViolation { exponent: i64 },
    /// Faber polynomials exist only for the `f` and `g` families.
    FaberUndefinedForFamily { family: Family },
    /// A Faber coefficient came out as a proper fraction (upstream bug).
    NonIntegralFaber { power: i64 },
    /// The series remainder after peeling all powers was nonzero.
    FaberRemainder { lead: i64 },
    Series(SeriesError),
}

impl fmt::Display for BasisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisError::OddWeight { weight } => {
                write!(f, "weight {} is odd; only even weights are supported", weight)
            }
            BasisError::PoleOrderTooSmall {
                family,
                weight,
                pole_order,
                min,
            } => write!(
                f,
                "family {} at weight {} needs pole order ≥ {}, got {}",
                family, weight, min, pole_order
            ),
            BasisError::InsufficientPrecision { needed, got } => write!(
                f,
                "precision {} is too small; need at least {}",
                got, needed
            ),
            BasisError::GapViolation { exponent } => write!(
                f,
                "echelon reduction left a nonzero coefficient at forced-zero exponent {}",
                exponent
            ),
            BasisError::FaberUndefinedForFamily { family } => write!(
                f,
                "family {} has no Faber polynomial factorization",
                family
            ),
            BasisError::NonIntegralFaber { power } => write!(
                f,
                "Faber coefficient of x^{} is not an integer",
                power
            ),
            BasisError::FaberRemainder { lead } => write!(
                f,
                "nonzero remainder (lead exponent {}) after peeling all hauptmodul powers",
                lead
            ),
            BasisError::Series(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for BasisError {}

impl From<SeriesError> for BasisError {
    fn from(e: SeriesError) -> Self {
        BasisError::Series(e)
    }
}

/// One member of a basis family: the unique form `q^{−m} + (free tail)`
/// with the family's forced gap, together with its expansion.
#[derive(Debug, Clone)]
pub struct BasisElement {
    pub family: Family,
    /// Weight `k` (always even).
    pub weight: i64,
    /// `ℓ = k/2`.
    pub ell: i64,
    /// Pole order `m`: the expansion starts at `q^{−m}`.
    pub pole_order: i64,
    pub series: QSeries,
    /// Faber polynomial for the `f`/`g` families, when extracted.
    pub faber: Option<RationalPolynomial>,
}

impl BasisElement {
    /// Short label like `f_{6,-1}`.
    pub fn label(&self) -> String {
        format!("{}_{{{},{}}}", self.family, self.weight, self.pole_order)
    }

    /// First exponent whose coefficient is not forced to zero.
    pub fn free_tail_start(&self) -> i64 {
        self.family.gap_top(self.ell) + 1
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "family": self.family.as_str(),
            "weight": self.weight,
            "pole_order": self.pole_order,
            "series": self.series.to_json(),
        });
        if let Some(p) = &self.faber {
            if let Ok(arr) = p.to_integer_json() {
                obj["faber"] = arr;
            }
        }
        obj
    }
}

/// Precondition checks shared by the four builders; returns `ℓ`.
fn check_inputs(family: Family, k: i64, m: i64, prec: i64) -> Result<i64, BasisError> {
    if k.rem_euclid(2) != 0 {
        return Err(BasisError::OddWeight { weight: k });
    }
    let ell = k / 2;
    let min = family.min_pole_order(ell);
    if m < min {
        return Err(BasisError::PoleOrderTooSmall {
            family,
            weight: k,
            pole_order: m,
            min,
        });
    }
    let needed = family.gap_top(ell) + 2;
    if prec < needed {
        return Err(BasisError::InsufficientPrecision { needed, got: prec });
    }
    Ok(ell)
}

/// Echelon construction: start from the deepest spanning element
/// (lead `−m`) and clear every coefficient in the forced gap using the
/// spanning elements whose leads sit exactly at those exponents.
fn build(family: Family, k: i64, m: i64, prec: i64) -> Result<BasisElement, BasisError> {
    let ell = check_inputs(family, k, m, prec)?;
    let gap_top = family.gap_top(ell);
    // Raw working precision: generous enough that the finished series is
    // known at least through `prec` after all products shave terms off.
    let raw = prec.max(gap_top + 2) + m.max(0) + 8;

    let psi = hauptmodul(PsiVariant::Half, raw);
    let f_pow = eisenstein_f(raw).pow(ell)?;
    let prefactor = match family {
        Family::F => f_pow,
        Family::G => f_pow
            .mul(&psi)
            .mul(&hauptmodul(PsiVariant::Zero, raw)),
        Family::H => f_pow.mul(&hauptmodul(PsiVariant::Zero, raw)),
        Family::I => f_pow.mul(&psi),
    };
    debug_assert_eq!(prefactor.lead(), gap_top);

    // Spanning elements: prefactor · ψ^j leads at gap_top − j.
    let j_max = (gap_top + m) as usize;
    let mut elems = Vec::with_capacity(j_max + 1);
    elems.push(prefactor);
    for j in 1..=j_max {
        let next = elems[j - 1].mul(&psi);
        elems.push(next);
    }

    let mut target = elems[j_max].clone();
    debug_assert_eq!(target.lead(), -m);
    debug_assert!(target.coeff(-m).is_one());
    for e in (-m + 1)..=gap_top {
        let c = target.coeff(e);
        if !c.is_zero() {
            let j = (gap_top - e) as usize;
            target = target.sub(&elems[j].scale(&c));
        }
    }

    for e in (-m + 1)..=gap_top {
        if !target.coeff(e).is_zero() {
            return Err(BasisError::GapViolation { exponent: e });
        }
    }
    if target.prec() < prec {
        return Err(BasisError::InsufficientPrecision {
            needed: prec,
            got: target.prec(),
        });
    }

    Ok(BasisElement {
        family,
        weight: k,
        ell,
        pole_order: m,
        series: target.truncate(prec),
        faber: None,
    })
}

/// Family `f` member of weight `k` and pole order `m ≥ −ℓ`:
/// `q^{−m} + O(q^{ℓ+1})`, holomorphic at the cusp 0.
pub fn make_f(k: i64, m: i64, prec: i64) -> Result<BasisElement, BasisError> {
    build(Family::F, k, m, prec)
}

/// Family `g` member of weight `k` and pole order `m ≥ −ℓ+2`:
/// `q^{−m} + (tail from q^{ℓ−1})`, vanishing at the cusps 0 and 1/2.
pub fn make_g(k: i64, m: i64, prec: i64) -> Result<BasisElement, BasisError> {
    build(Family::G, k, m, prec)
}

/// Family `h` member of weight `k` and pole order `m ≥ −ℓ+1`:
/// `q^{−m} + O(q^ℓ)`, vanishing at the cusp 0.
pub fn make_h(k: i64, m: i64, prec: i64) -> Result<BasisElement, BasisError> {
    build(Family::H, k, m, prec)
}

/// Family `i` member of weight `k` and pole order `m ≥ −ℓ+1`:
/// `q^{−m} + O(q^ℓ)`, vanishing at the cusp 1/2.
pub fn make_i(k: i64, m: i64, prec: i64) -> Result<BasisElement, BasisError> {
    build(Family::I, k, m, prec)
}

/// Build any family member by name.
pub fn make(family: Family, k: i64, m: i64, prec: i64) -> Result<BasisElement, BasisError> {
    build(family, k, m, prec)
}

/// Memoized construction, for callers that request the same element many
/// times (identity sweeps, the CLI).  Keyed by the full request.
pub fn cached(family: Family, k: i64, m: i64, prec: i64) -> Result<BasisElement, BasisError> {
    static CACHE: OnceLock<Mutex<HashMap<(Family, i64, i64, i64), BasisElement>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&(family, k, m, prec)) {
        return Ok(found.clone());
    }
    let made = build(family, k, m, prec)?;
    cache
        .lock()
        .unwrap()
        .insert((family, k, m, prec), made.clone());
    Ok(made)
}

/// Factor an `f`- or `g`-family member as `prefactor · P(ψ)` and return the
/// integer polynomial `P`, validating that the factorization reproduces the
/// series exactly on its whole known range.
pub fn faber_extract(elem: &BasisElement) -> Result<RationalPolynomial, BasisError> {
    let deg = elem
        .family
        .faber_degree(elem.ell, elem.pole_order)
        .ok_or(BasisError::FaberUndefinedForFamily {
            family: elem.family,
        })?;
    debug_assert!(deg >= 0);

    // Divide off the prefactor at a raw precision comfortably beyond the
    // element's own, so the quotient is known on the element's full range.
    let raw = elem.series.prec() + elem.ell.abs() + elem.pole_order.abs() + 8;
    let f_pow = eisenstein_f(raw).pow(elem.ell)?;
    let prefactor = match elem.family {
        Family::F => f_pow,
        Family::G => f_pow
            .mul(&hauptmodul(PsiVariant::Half, raw))
            .mul(&hauptmodul(PsiVariant::Zero, raw)),
        Family::H | Family::I => unreachable!("faber_degree returned None"),
    };
    let mut s = elem.series.div(&prefactor)?;

    // Peel powers of ψ from the deepest exponent up: the coefficient at
    // exponent −t is the coefficient of x^t once higher powers are gone.
    let psi = hauptmodul(PsiVariant::Half, s.prec() + deg + 2);
    let mut powers = Vec::with_capacity(deg as usize + 1);
    powers.push(QSeries::one(psi.prec()));
    for t in 1..=deg as usize {
        let next = powers[t - 1].mul(&psi);
        powers.push(next);
    }
    let mut coeffs = vec![crate::series::rat_int(0); deg as usize + 1];
    for t in (0..=deg).rev() {
        let c = s.coeff(-t);
        if !c.is_zero() {
            s = s.sub(&powers[t as usize].scale(&c));
        }
        coeffs[t as usize] = c;
    }
    if !s.is_zero() {
        return Err(BasisError::FaberRemainder { lead: s.lead() });
    }
    for (t, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            return Err(BasisError::NonIntegralFaber { power: t as i64 });
        }
    }
    Ok(RationalPolynomial::new(coeffs))
}

/// Convenience: construct the element and attach its Faber polynomial.
pub fn make_with_faber(
    family: Family,
    k: i64,
    m: i64,
    prec: i64,
) -> Result<BasisElement, BasisError> {
    let mut elem = build(family, k, m, prec)?;
    elem.faber = Some(faber_extract(&elem)?);
    Ok(elem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, rat_int, QSeries};

    fn assert_terms(series: &QSeries, terms: &[(i64, i64)]) {
        let (last_exp, _) = *terms.last().unwrap();
        let known = QSeries::from_terms(terms, last_exp + 1);
        assert!(
            series.agrees_with(&known),
            "expected {} to start as {}",
            series,
            known
        );
    }

    #[test]
    fn weight6_f_family_expansions() {
        let f = make_f(6, -3, 16).unwrap();
        assert_terms(
            &f.series,
            &[(3, 1), (5, 12), (7, 66), (9, 232), (11, 627), (13, 1452)],
        );
        let f = make_f(6, -2, 16).unwrap();
        assert_terms(
            &f.series,
            &[
                (2, 1),
                (4, 32),
                (6, 244),
                (8, 1024),
                (10, 3126),
                (12, 7808),
                (14, 16808),
            ],
        );
        let f = make_f(6, -1, 16).unwrap();
        assert_terms(
            &f.series,
            &[(1, 1), (3, 0), (5, 198), (7, 704), (9, 2685), (11, 8064), (13, 17006)],
        );
        let f = make_f(6, 0, 16).unwrap();
        assert_terms(&f.series, &[(0, 1), (4, -504), (8, -16632), (12, -122976)]);
    }

    #[test]
    fn weight_minus4_g_family_expansions() {
        let g = make_g(-4, 4, 8).unwrap();
        assert_terms(
            &g.series,
            &[(-4, 1), (-2, -32), (0, 504), (2, -5248), (4, 40996), (6, -258624)],
        );
        let g = make_g(-4, 5, 8).unwrap();
        assert_terms(
            &g.series,
            &[(-5, 1), (-3, -12), (-1, -198), (1, 7032), (3, -102765), (5, 1017684)],
        );
        let g = make_g(-4, 6, 8).unwrap();
        assert_terms(
            &g.series,
            &[(-6, 1), (-4, 0), (-2, -244), (0, 0), (2, 88902), (4, -1835008), (6, 22573848)],
        );
        let g = make_g(-4, 7, 8).unwrap();
        assert_terms(
            &g.series,
            &[(-7, 1), (-3, -66), (-1, -704), (1, -37251), (3, 1947264), (5, -39839290)],
        );
    }

    #[test]
    fn minimal_pole_h_and_i_are_hauptmoduls() {
        let h = make_h(0, 1, 12).unwrap();
        assert!(h.series.agrees_with(&hauptmodul(PsiVariant::Zero, 12)));
        let i = make_i(0, 1, 12).unwrap();
        assert!(i.series.agrees_with(&hauptmodul(PsiVariant::Half, 12)));
    }

    #[test]
    fn h01_plus_eight_is_f01() {
        let h = make_h(0, 1, 12).unwrap();
        let f = make_f(0, 1, 12).unwrap();
        let shifted = h.series.add(&QSeries::constant(rat_int(8), 12));
        assert!(shifted.agrees_with(&f.series));
    }

    #[test]
    fn i21_matches_theta_cube_construction() {
        let i = make_i(2, 1, 12).unwrap();
        assert!(i.series.agrees_with(&crate::forms::g21(12)));
        let g = make_g(2, 1, 12).unwrap();
        assert!(g.series.agrees_with(&i.series));
    }

    #[test]
    fn first_f_element_is_f_power() {
        for ell in [-3i64, -1, 1, 2, 3, 5] {
            let k = 2 * ell;
            let elem = make_f(k, -ell, ell.max(1) + 8).unwrap();
            let f_pow = eisenstein_f(elem.series.prec() + ell.abs() + 2)
                .pow(ell)
                .unwrap();
            assert!(elem.series.agrees_with(&f_pow), "weight {}", k);
            assert_eq!(elem.series.lead(), ell);
        }
    }

    #[test]
    fn faber_of_f01_is_x_minus_8() {
        let p = faber_extract(&make_f(0, 1, 12).unwrap()).unwrap();
        assert_eq!(p, RationalPolynomial::from_integers(&[-8, 1]));
    }

    #[test]
    fn degree_zero_fabers_are_one() {
        let p = faber_extract(&make_f(6, -3, 12).unwrap()).unwrap();
        assert_eq!(p, RationalPolynomial::from_integers(&[1]));
        let q = faber_extract(&make_g(2, 1, 12).unwrap()).unwrap();
        assert_eq!(q, RationalPolynomial::from_integers(&[1]));
    }

    #[test]
    fn faber_is_undefined_for_h_and_i() {
        let h = make_h(0, 1, 8).unwrap();
        assert_eq!(
            faber_extract(&h),
            Err(BasisError::FaberUndefinedForFamily { family: Family::H })
        );
    }

    #[test]
    fn reconstruction_from_faber() {
        // f_{4,3}: prefactor F^2, P of degree 5.
        let elem = make_with_faber(Family::F, 4, 3, 20).unwrap();
        let p = elem.faber.as_ref().unwrap();
        assert_eq!(p.degree(), Some(5));
        let raw = 40;
        let psi = hauptmodul(PsiVariant::Half, raw);
        let mut rebuilt = QSeries::zero(raw);
        for (t, c) in p.coeffs().iter().enumerate() {
            rebuilt = rebuilt.add(&psi.pow(t as i64).unwrap().scale(c));
        }
        rebuilt = rebuilt.mul(&eisenstein_f(raw).pow(2).unwrap());
        assert!(rebuilt.agrees_with(&elem.series));
    }

    #[test]
    fn gap_invariants_hold_on_a_grid() {
        for k in [-12i64, -6, -4, -2, 0, 2, 4, 6, 12] {
            let ell = k / 2;
            for family in Family::ALL {
                let min_m = family.min_pole_order(ell);
                for m in [min_m, min_m + 1, min_m + 5, 12] {
                    if m < min_m {
                        continue;
                    }
                    let prec = family.gap_top(ell) + 6;
                    let elem = make(family, k, m, prec).unwrap();
                    assert_eq!(elem.series.lead(), -m, "{}", elem.label());
                    assert!(elem.series.coeff(-m).is_one(), "{}", elem.label());
                    for e in (-m + 1)..=family.gap_top(ell) {
                        assert!(
                            elem.series.coeff(e).is_zero(),
                            "{} has nonzero coefficient at {}",
                            elem.label(),
                            e
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn series_coefficients_are_integers() {
        for (family, k, m) in [
            (Family::F, -8, 9),
            (Family::G, 6, 1),
            (Family::H, 4, 2),
            (Family::I, -2, 7),
        ] {
            let elem = make(family, k, m, 15).unwrap();
            for (e, c) in elem.series.iter_terms() {
                assert!(c.is_integer(), "{} coefficient at {}", elem.label(), e);
            }
        }
    }

    #[test]
    fn constructions_at_different_precisions_agree() {
        for (family, k, m) in [
            (Family::F, 10, 4),
            (Family::G, -6, 8),
            (Family::H, 2, 3),
            (Family::I, 8, 2),
        ] {
            let small = make(family, k, m, 10).unwrap();
            let large = make(family, k, m, 25).unwrap();
            assert!(small.series.agrees_with(&large.series));
        }
    }

    #[test]
    fn faber_coefficients_are_integers_across_a_sweep() {
        for m in 1..=10 {
            let p = faber_extract(&make_f(0, m, 8).unwrap()).unwrap();
            assert_eq!(p.degree(), Some(m as usize));
            assert!(p.is_integral());
            // leading coefficient of the monic peel is 1
            assert!(p.coeffs().last().unwrap().is_one());
        }
        for m in 2..=8 {
            let q = faber_extract(&make_g(2, m, 8).unwrap()).unwrap();
            assert_eq!(q.degree(), Some(m as usize - 1));
            assert!(q.is_integral());
        }
    }

    #[test]
    fn error_paths() {
        assert!(matches!(
            make_f(3, 0, 10),
            Err(BasisError::OddWeight { weight: 3 })
        ));
        assert!(matches!(
            make_f(6, -4, 10),
            Err(BasisError::PoleOrderTooSmall { min: -3, .. })
        ));
        assert!(matches!(
            make_g(0, 1, 10),
            Err(BasisError::PoleOrderTooSmall { min: 2, .. })
        ));
        assert!(matches!(
            make_h(4, -2, 10),
            Err(BasisError::PoleOrderTooSmall { min: -1, .. })
        ));
        assert!(matches!(
            make_f(6, 0, 2),
            Err(BasisError::InsufficientPrecision { needed: 5, got: 2 })
        ));
    }

    #[test]
    fn cached_matches_fresh() {
        let a = cached(Family::F, 6, -1, 14).unwrap();
        let b = cached(Family::F, 6, -1, 14).unwrap();
        let c = make_f(6, -1, 14).unwrap();
        assert!(a.series.agrees_with(&b.series));
        assert!(a.series.agrees_with(&c.series));
        assert_eq!(a.series.prec(), c.series.prec());
    }

    #[test]
    fn g_family_min_pole_faber_has_rational_check() {
        // Exercise the full extraction path on an element with a deep pole:
        // g_{-4,7} → Q of degree ℓ+m−2 = 3.
        let elem = make_with_faber(Family::G, -4, 7, 10).unwrap();
        let q = elem.faber.as_ref().unwrap();
        assert_eq!(q.degree(), Some(3));
        assert!(q.is_integral());
        assert!(q.coeffs().last().unwrap().is_one());
    }

    #[test]
    fn weight_zero_identity_element() {
        let one = make_f(0, 0, 10).unwrap();
        assert!(one.series.agrees_with(&QSeries::one(10)));
        assert_eq!(faber_extract(&one).unwrap(), RationalPolynomial::from_integers(&[1]));
    }

    #[test]
    fn labels_render() {
        let elem = make_f(6, -1, 10).unwrap();
        assert_eq!(elem.label(), "f_{6,-1}");
        assert_eq!(elem.free_tail_start(), 4);
        let _ = rat(1, 2); // keep helper import exercised
    }
}
