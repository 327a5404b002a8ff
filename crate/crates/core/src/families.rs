//! Generating functions and number tables for the Bernoulli-type families.
//!
//! Every generating function is built at one extra coefficient internally
//! when it involves a `t`-cancelling quotient, so that the returned series
//! has exactly the requested precision.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{LambdaPoly, Rational, Ring};
use crate::poly::Polynomial;
use crate::series::TruncatedSeries;

pub type QSeries = TruncatedSeries<Rational>;
pub type LSeries = TruncatedSeries<LambdaPoly>;
pub type LPoly = Polynomial<LambdaPoly>;

/// The named sequence families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "bernoulli")]
    Bernoulli,
    #[serde(rename = "daehee")]
    Daehee,
    #[serde(rename = "carlitz")]
    Carlitz,
    #[serde(rename = "poly-bernoulli")]
    PolyBernoulli,
    #[serde(rename = "dpb")]
    Dpb,
    #[serde(rename = "dpb-higher")]
    DpbHigher,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Bernoulli,
        Family::Daehee,
        Family::Carlitz,
        Family::PolyBernoulli,
        Family::Dpb,
        Family::DpbHigher,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Daehee => "daehee",
            Family::Carlitz => "carlitz",
            Family::PolyBernoulli => "poly-bernoulli",
            Family::Dpb => "dpb",
            Family::DpbHigher => "dpb-higher",
        }
    }

    /// Whether `k` changes the family.
    pub fn uses_k(self) -> bool {
        matches!(
            self,
            Family::PolyBernoulli | Family::Dpb | Family::DpbHigher
        )
    }

    pub fn uses_r(self) -> bool {
        self == Family::DpbHigher
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

/// `n!·[tⁿ]` of a family's generating function, for `n = 0, 1, …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub family: Family,
    pub k: i32,
    pub r: u32,
    pub entries: Vec<LambdaPoly>,
}

impl SequenceTable {
    fn from_gf(family: Family, k: i32, r: u32, gf: &LSeries) -> Self {
        SequenceTable {
            family,
            k,
            r,
            entries: gf.egf_values(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&LambdaPoly> {
        self.entries.get(n)
    }

    /// Every value with `λ := v`.
    pub fn specialize(&self, v: &Rational) -> Vec<Rational> {
        self.entries.iter().map(|e| e.eval(v)).collect()
    }
}

fn lift(s: &QSeries) -> LSeries {
    s.promote()
}

/// `(1 + λt)^{c/λ}`, whose `tⁿ` coefficient is `c(c−λ)(c−2λ)⋯(c−(n−1)λ)/n!`.
pub fn elam(c: &Rational, precision: usize) -> LSeries {
    let c_poly = LambdaPoly::constant(c.clone());
    let mut term = LambdaPoly::one();
    TruncatedSeries::from_fn(precision, |n| {
        if n > 0 {
            let step = c_poly.sub(&LambdaPoly::monomial(Rational::from(n as i64 - 1), 1));
            term = term.mul(&step).scale(&Rational::new(1, n as i64));
        }
        term.clone()
    })
}

/// `e^t − 1` over ℚ.
fn exp_minus_one(precision: usize) -> QSeries {
    QSeries::exp_linear(&Rational::one(), precision).sub(&QSeries::one(precision))
}

/// `t / (e^t − 1)`, the Bernoulli generating function.
pub fn bernoulli_gf(precision: usize) -> QSeries {
    QSeries::t(precision + 1)
        .div(&exp_minus_one(precision + 1))
        .expect("e^t - 1 is t times a unit")
}

/// `(e^t − 1) / t`, the reciprocal of [`bernoulli_gf`].
pub fn exp_quotient_gf(precision: usize) -> QSeries {
    exp_minus_one(precision + 1)
        .div(&QSeries::t(precision + 1))
        .expect("t is a unit after cancelling t")
}

/// Classical Bernoulli numbers `B₀ … B_{N−1}` (`B₁ = −1/2`).
pub fn bernoulli(precision: usize) -> SequenceTable {
    SequenceTable::from_gf(Family::Bernoulli, 0, 1, &lift(&bernoulli_gf(precision)))
}

/// `log(1 + t) / t`.
pub fn daehee_gf(precision: usize) -> QSeries {
    let log1p = QSeries::from_fn(precision + 1, |n| match n {
        0 => Rational::zero(),
        _ => Rational::new(if n % 2 == 1 { 1 } else { -1 }, n as i64),
    });
    log1p.div(&QSeries::t(precision + 1)).expect("t cancels")
}

/// Daehee numbers of the first kind.
pub fn daehee(precision: usize) -> SequenceTable {
    SequenceTable::from_gf(Family::Daehee, 0, 1, &lift(&daehee_gf(precision)))
}

/// `t / ((1 + λt)^{1/λ} − 1)`.
pub fn carlitz_gf(precision: usize) -> LSeries {
    let n = precision + 1;
    let den = elam(&Rational::one(), n).sub(&LSeries::one(n));
    LSeries::t(n).div(&den).expect("elam(1) - 1 = t·(1 + …)")
}

/// Carlitz degenerate Bernoulli numbers `β_{n,λ}`.
pub fn carlitz_beta(precision: usize) -> SequenceTable {
    SequenceTable::from_gf(Family::Carlitz, 0, 1, &carlitz_gf(precision))
}

/// The degenerate falling factorial `x(x−λ)⋯(x−(m−1)λ)`.
pub fn degenerate_falling(m: usize) -> LPoly {
    (0..m).fold(LPoly::one(), |acc, j| {
        let factor = LPoly::from_coeffs(vec![
            LambdaPoly::monomial(Rational::from(-(j as i64)), 1),
            LambdaPoly::one(),
        ]);
        acc.mul(&factor)
    })
}

/// `β_{n,λ}(x) = Σₗ C(n,l) β_{l,λ} · x(x−λ)⋯(x−(n−l−1)λ)`, the finite
/// expansion of `t/((1+λt)^{1/λ}−1) · (1+λt)^{x/λ}`.
pub fn carlitz_beta_poly(n: usize, precision: usize) -> Result<LPoly> {
    check_index(n, precision)?;
    let numbers = carlitz_beta(n + 1);
    Ok((0..=n).fold(LPoly::zero(), |acc, l| {
        let term = degenerate_falling(n - l)
            .mul_scalar(&numbers.entries[l])
            .scale(&Rational::binomial(n, l));
        acc.add(&term)
    }))
}

/// `Li_k(x) = Σ_{n≥1} xⁿ / n^k`, truncated.
pub fn polylog_series(k: i32, precision: usize) -> QSeries {
    QSeries::from_fn(precision, |n| match n {
        0 => Rational::zero(),
        _ => Rational::from(n as i64).powi(-k),
    })
}

/// `Li_k(1 − e^{−t}) / (e^t − 1)`.
pub fn poly_bernoulli_gf(k: i32, precision: usize) -> QSeries {
    let n = precision + 1;
    let inner = QSeries::one(n).sub(&QSeries::exp_linear(&Rational::from(-1), n));
    polylog_series(k, n)
        .compose(&inner)
        .expect("1 - e^{-t} has zero constant term")
        .div(&exp_minus_one(n))
        .expect("numerator and denominator both vanish to first order")
}

/// Poly-Bernoulli numbers `B_n^{(k)}`.
pub fn poly_bernoulli(k: i32, precision: usize) -> SequenceTable {
    SequenceTable::from_gf(
        Family::PolyBernoulli,
        k,
        1,
        &lift(&poly_bernoulli_gf(k, precision)),
    )
}

/// `Li_k(1 − (1+λt)^{−1/λ})`, the numerator of the degenerate family.
pub fn dpb_numerator(k: i32, precision: usize) -> LSeries {
    let inner = LSeries::one(precision).sub(&elam(&Rational::from(-1), precision));
    lift(&polylog_series(k, precision))
        .compose(&inner)
        .expect("1 - elam(-1) has zero constant term")
}

/// `(1+λt)^{1/λ} − 1`.
pub fn dpb_denominator(precision: usize) -> LSeries {
    elam(&Rational::one(), precision).sub(&LSeries::one(precision))
}

/// `Li_k(1 − (1+λt)^{−1/λ}) / ((1+λt)^{1/λ} − 1)`.
pub fn dpb_gf(k: i32, precision: usize) -> LSeries {
    let n = precision + 1;
    dpb_numerator(k, n)
        .div(&dpb_denominator(n))
        .expect("numerator and denominator both vanish to first order")
}

/// Degenerate poly-Bernoulli numbers `β^{(k)}_{n,λ}`.
pub fn dpb_numbers(k: i32, precision: usize) -> SequenceTable {
    SequenceTable::from_gf(Family::Dpb, k, 1, &dpb_gf(k, precision))
}

/// `Σₗ C(n,l) a_l x^{n−l}`: the Appell polynomial attached to the numbers
/// `a_0, a_1, …` (needs `values.len() > n`).
pub fn appell_poly(values: &[LambdaPoly], n: usize) -> LPoly {
    let coeffs = (0..=n)
        .map(|deg| values[n - deg].scale(&Rational::binomial(n, deg)))
        .collect();
    LPoly::from_coeffs(coeffs)
}

fn check_index(n: usize, precision: usize) -> Result<()> {
    if n >= precision {
        Err(Error::PrecisionExceeded {
            needed: n,
            precision,
        })
    } else {
        Ok(())
    }
}

fn check_order(r: u32) -> Result<()> {
    if r == 0 {
        Err(Error::InvalidParameter("order r must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `β^{(k)}_{n,λ}(x)`.
pub fn dpb_poly(k: i32, n: usize, precision: usize) -> Result<LPoly> {
    check_index(n, precision)?;
    Ok(appell_poly(&dpb_numbers(k, n + 1).entries, n))
}

/// The `r`-th power of [`dpb_gf`].
pub fn dpb_higher_gf(k: i32, r: u32, precision: usize) -> Result<LSeries> {
    check_order(r)?;
    Ok(dpb_gf(k, precision).pow(r))
}

/// Order-`r` degenerate poly-Bernoulli numbers `β^{(k,r)}_{n,λ}`.
pub fn dpb_higher_numbers(k: i32, r: u32, precision: usize) -> Result<SequenceTable> {
    let gf = dpb_higher_gf(k, r, precision)?;
    Ok(SequenceTable::from_gf(Family::DpbHigher, k, r, &gf))
}

/// `β^{(k,r)}_{n,λ}(x)`, from the `e^{xt}` factor of the generating function.
pub fn dpb_higher_poly(k: i32, r: u32, n: usize, precision: usize) -> Result<LPoly> {
    check_index(n, precision)?;
    Ok(appell_poly(&dpb_higher_numbers(k, r, n + 1)?.entries, n))
}

/// Table of any family by identifier. `k` and `r` are ignored where the
/// family does not depend on them.
pub fn table(family: Family, k: i32, r: u32, precision: usize) -> Result<SequenceTable> {
    Ok(match family {
        Family::Bernoulli => bernoulli(precision),
        Family::Daehee => daehee(precision),
        Family::Carlitz => carlitz_beta(precision),
        Family::PolyBernoulli => poly_bernoulli(k, precision),
        Family::Dpb => dpb_numbers(k, precision),
        Family::DpbHigher => dpb_higher_numbers(k, r, precision)?,
    })
}

/// Polynomial `n` of a family that has one.
pub fn family_poly(family: Family, k: i32, r: u32, n: usize, precision: usize) -> Result<LPoly> {
    match family {
        Family::Carlitz => carlitz_beta_poly(n, precision),
        Family::Dpb => dpb_poly(k, n, precision),
        Family::DpbHigher => dpb_higher_poly(k, r, n, precision),
        Family::Bernoulli | Family::PolyBernoulli | Family::Daehee => {
            check_index(n, precision)?;
            let t = table(family, k, r, n + 1)?;
            Ok(appell_poly(&t.entries, n))
        }
    }
}
