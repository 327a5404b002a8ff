//! Series acting on polynomials: the umbral pairing `⟨f(t)|p(x)⟩`, the
//! operator action `f(t)p(x)`, and the Bernoulli functional that stands in
//! for the invariant integral on polynomials.

use crate::error::{Error, Result};
use crate::exact::{Rational, Ring};
use crate::families::bernoulli_gf;
use crate::poly::Polynomial;
use crate::series::{TruncatedSeries, DEFAULT_PRECISION};

/// A linear functional on polynomials, represented by its series.
#[derive(Debug, Clone, PartialEq)]
pub struct Functional<R> {
    series: TruncatedSeries<R>,
}

impl<R: Ring> Functional<R> {
    pub fn new(series: TruncatedSeries<R>) -> Self {
        Functional { series }
    }

    pub fn series(&self) -> &TruncatedSeries<R> {
        &self.series
    }

    pub fn apply(&self, p: &Polynomial<R>) -> Result<R> {
        pair(&self.series, p)
    }

    /// The functional with `⟨L|xⁿ⟩ = values[n]`.
    pub fn from_moments(values: &[R]) -> Self {
        Functional::new(TruncatedSeries::from_egf_values(values))
    }
}

fn check_degree<R: Ring>(f: &TruncatedSeries<R>, p: &Polynomial<R>) -> Result<()> {
    match p.degree() {
        Some(d) if d >= f.precision() => Err(Error::PrecisionExceeded {
            needed: d,
            precision: f.precision(),
        }),
        _ => Ok(()),
    }
}

/// `⟨f(t)|p(x)⟩ = Σₙ pₙ·n!·[tⁿ]f`.
pub fn pair<R: Ring>(f: &TruncatedSeries<R>, p: &Polynomial<R>) -> Result<R> {
    check_degree(f, p)?;
    let mut fact = Rational::one();
    let mut acc = R::zero();
    for (n, c) in p.coeffs().iter().enumerate() {
        if n > 1 {
            fact = &fact * Rational::from(n as i64);
        }
        if !c.is_zero() {
            acc.add_assign(&c.mul(f.coeff(n)).scale(&fact));
        }
    }
    Ok(acc)
}

/// `f(t)p(x) = Σₖ [tᵏ]f · p⁽ᵏ⁾(x)`.
pub fn op_apply<R: Ring>(f: &TruncatedSeries<R>, p: &Polynomial<R>) -> Result<Polynomial<R>> {
    check_degree(f, p)?;
    let Some(deg) = p.degree() else {
        return Ok(Polynomial::zero());
    };
    let mut out = Polynomial::zero();
    let mut deriv = p.clone();
    for k in 0..=deg {
        let c = f.coeff(k);
        if !c.is_zero() {
            out = out.add(&deriv.mul_scalar(c));
        }
        deriv = deriv.derivative();
    }
    Ok(out)
}

/// `p(x + y)`.
pub fn shift<R: Ring>(p: &Polynomial<R>, y: &R) -> Polynomial<R> {
    p.shift(y)
}

/// The `r`-fold invariant integral `∫⋯∫ p(x₁+⋯+x_r) dμ₀⋯dμ₀`, realised as
/// `⟨(t/(eᵗ−1))ʳ | p(x)⟩`. For `r = 1` and `p = xⁿ` this is `Bₙ`.
pub fn invariant_integral<R: Ring>(p: &Polynomial<R>, r: u32) -> Result<R> {
    if let Some(d) = p.degree() {
        if d >= DEFAULT_PRECISION {
            return Err(Error::PrecisionExceeded {
                needed: d,
                precision: DEFAULT_PRECISION,
            });
        }
    }
    let n = p.degree().map_or(1, |d| d + 1);
    let kernel = bernoulli_gf(n).pow(r).map(R::from_rational);
    pair(&kernel, p)
}

/// `(∫ p(x+1) dμ₀ − ∫ p(x) dμ₀, p′(0))`; the two always agree.
pub fn difference_property<R: Ring>(p: &Polynomial<R>) -> Result<(R, R)> {
    let lhs = invariant_integral(&p.shift(&R::one()), 1)?.sub(&invariant_integral(p, 1)?);
    Ok((lhs, p.derivative().coeff(0)))
}

/// Where a Sheffer check failed.
#[derive(Debug, Clone, PartialEq)]
pub enum ShefferFailure<R: Ring> {
    /// `⟨g fᵏ | sₙ⟩ ≠ n!δ_{n,k}`
    Orthogonality {
        n: usize,
        k: usize,
        got: R,
        expected: R,
    },
    /// `n!·[tⁿ] (1/g(f̄)) e^{x f̄} ≠ sₙ`
    Regeneration {
        n: usize,
        got: Polynomial<R>,
        expected: Polynomial<R>,
    },
}

/// Checks that `s[0..=nmax]` is the Sheffer sequence for `(g, f)`, both by
/// orthogonality and by regenerating it from `(1/g(f̄(t))) e^{x f̄(t)}`.
pub fn sheffer_check<R: Ring>(
    g: &TruncatedSeries<R>,
    f: &TruncatedSeries<R>,
    s: &[Polynomial<R>],
    nmax: usize,
) -> Result<Option<ShefferFailure<R>>> {
    let prec = g.precision().min(f.precision());
    if nmax >= prec || s.len() <= nmax {
        return Err(Error::PrecisionExceeded {
            needed: nmax,
            precision: prec.min(s.len()),
        });
    }
    if f.get(0).is_some_and(|c| !c.is_zero()) {
        return Err(Error::NotDelta(format!(
            "constant term {} is nonzero",
            f.coeff(0)
        )));
    }
    if f.get(1).and_then(R::unit_inverse).is_none() {
        return Err(Error::NotDelta("linear coefficient is not a unit".into()));
    }
    let g0 = g.coeff(0);
    if g0.unit_inverse().is_none() {
        return Err(Error::NotInvertible(g0.to_string()));
    }
    for (n, sn) in s.iter().enumerate().take(nmax + 1) {
        if sn.degree() != Some(n) {
            return Err(Error::InvalidParameter(format!(
                "s_{n} has degree {:?}, expected {n}",
                sn.degree()
            )));
        }
    }

    let f = f.truncate(nmax + 1);
    let g = g.truncate(nmax + 1);
    let mut f_pow = TruncatedSeries::one(nmax + 1);
    for k in 0..=nmax {
        let weight = g.mul(&f_pow);
        for (n, sn) in s.iter().enumerate().take(nmax + 1) {
            let got = pair(&weight, sn)?;
            let expected = if n == k {
                R::from_rational(&Rational::factorial(n))
            } else {
                R::zero()
            };
            if got != expected {
                return Ok(Some(ShefferFailure::Orthogonality {
                    n,
                    k,
                    got,
                    expected,
                }));
            }
        }
        f_pow = f_pow.mul(&f);
    }

    let fbar = f.revert()?;
    let prefactor = g.compose(&fbar)?.inverse()?;
    let x_fbar: TruncatedSeries<Polynomial<R>> = fbar.map(|c| Polynomial::monomial(c.clone(), 1));
    let gen = prefactor
        .map(|c| Polynomial::constant(c.clone()))
        .mul(&x_fbar.exp()?);
    for (n, value) in gen.egf_values().into_iter().enumerate() {
        if value != s[n] {
            return Ok(Some(ShefferFailure::Regeneration {
                n,
                got: value,
                expected: s[n].clone(),
            }));
        }
    }
    Ok(None)
}

/// `true` iff `s` is the Sheffer sequence for `(g, f)` up to `nmax`.
pub fn sheffer_verify<R: Ring>(
    g: &TruncatedSeries<R>,
    f: &TruncatedSeries<R>,
    s: &[Polynomial<R>],
    nmax: usize,
) -> Result<bool> {
    Ok(sheffer_check(g, f, s, nmax)?.is_none())
}
