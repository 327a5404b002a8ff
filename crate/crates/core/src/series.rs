//! Truncated formal power series in `t`.
//!
//! A [`TruncatedSeries`] stores exactly `precision` coefficients
//! `c_0 … c_{N-1}`; everything from `t^N` on is unknown. Binary operations
//! never invent coefficients: the result precision is the smaller operand
//! precision, and operations that consume a coefficient (the single
//! `t`-cancellation in [`TruncatedSeries::div`], differentiation) lose one.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{LambdaPoly, Rational, Ring};

/// Working precision used when the caller does not choose one.
pub const DEFAULT_PRECISION: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// A series whose precision is `coeffs.len()`.
    pub fn new(coeffs: Vec<R>) -> Self {
        TruncatedSeries { coeffs }
    }

    /// Builds `c_n = f(n)` for `n < precision`.
    pub fn from_fn(precision: usize, f: impl FnMut(usize) -> R) -> Self {
        Self::new((0..precision).map(f).collect())
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(vec![R::zero(); precision])
    }

    pub fn constant(c: R, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if precision > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(R::one(), precision)
    }

    /// `c·t^k`
    pub fn monomial(c: R, k: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if k < precision {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series variable `t`.
    pub fn t(precision: usize) -> Self {
        Self::monomial(R::one(), 1, precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `t^n`; `None` past the precision.
    pub fn get(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    /// Coefficient of `t^n`.
    ///
    /// Panics if `n >= precision`.
    pub fn coeff(&self, n: usize) -> &R {
        assert!(
            n < self.coeffs.len(),
            "coefficient t^{n} requested from a series of precision {}",
            self.coeffs.len()
        );
        &self.coeffs[n]
    }

    /// Drops coefficients beyond `precision` (never extends).
    pub fn truncate(&self, precision: usize) -> Self {
        Self::new(self.coeffs[..precision.min(self.coeffs.len())].to_vec())
    }

    /// Pads with zeros or truncates to exactly `precision` terms. Only
    /// sound when the caller knows the padded terms are irrelevant.
    pub(crate) fn resized(&self, precision: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(precision, R::zero());
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    fn constant_term(&self) -> R {
        self.coeffs.first().cloned().unwrap_or_else(R::zero)
    }

    /// The sequence `n!·c_n`, i.e. the values an exponential generating
    /// function encodes.
    pub fn egf_values(&self) -> Vec<R> {
        let mut fact = Rational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 1 {
                    fact = &fact * Rational::from(n as i64);
                }
                c.scale(&fact)
            })
            .collect()
    }

    /// Inverse of [`egf_values`](Self::egf_values): `c_n = a_n / n!`.
    pub fn from_egf_values(values: &[R]) -> Self {
        let mut fact = Rational::one();
        Self::new(
            values
                .iter()
                .enumerate()
                .map(|(n, a)| {
                    if n > 1 {
                        fact = &fact * Rational::from(n as i64);
                    }
                    a.scale(&fact.recip().expect("factorial is nonzero"))
                })
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries::new(self.coeffs.iter().map(f).collect())
    }

    /// Embeds the coefficients into a larger ring (e.g. ℚ → ℚ[λ]).
    pub fn promote<S: Ring>(&self) -> TruncatedSeries<S>
    where
        R: Into<S>,
    {
        self.map(|c| c.clone().into())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.precision().min(rhs.precision());
        Self::from_fn(n, |i| self.coeffs[i].add(&rhs.coeffs[i]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.precision().min(rhs.precision());
        Self::from_fn(n, |i| self.coeffs[i].sub(&rhs.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn mul_scalar(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Cauchy product truncated to the smaller precision.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.precision().min(rhs.precision());
        Self::new(mul_trunc(&self.coeffs, &rhs.coeffs, n))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.precision());
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents go through [`inverse`](Self::inverse).
    pub fn powi(&self, exp: i64) -> Result<Self> {
        let e = u32::try_from(exp.unsigned_abs())
            .map_err(|_| Error::InvalidParameter(format!("exponent {exp} too large")))?;
        let p = self.pow(e);
        if exp < 0 {
            p.inverse()
        } else {
            Ok(p)
        }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.unit_inverse().is_none() {
            return Err(Error::NotInvertible(c0.to_string()));
        }
        Self::one(self.precision()).div(self)
    }

    /// Quotient `f / g`.
    ///
    /// When both constant terms vanish, one common factor of `t` is
    /// cancelled first (so `t / (e^t - 1)` is well defined; the result then
    /// has one coefficient less). The divisor's constant term must then be
    /// a unit, or at least divide every partial remainder exactly in the
    /// coefficient ring (`log(1 + λt) / λ`).
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let (num, den) = if !self.coeffs.is_empty()
            && !rhs.coeffs.is_empty()
            && self.coeffs[0].is_zero()
            && rhs.coeffs[0].is_zero()
        {
            (&self.coeffs[1..], &rhs.coeffs[1..])
        } else {
            (&self.coeffs[..], &rhs.coeffs[..])
        };
        let n = num.len().min(den.len());
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let d0 = &den[0];
        let non_unit = || Error::NonUnitLeadingCoefficient(d0.to_string());
        if d0.is_zero() {
            return Err(non_unit());
        }
        let inv = d0.unit_inverse();
        let mut out: Vec<R> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = num[k].clone();
            for i in 1..=k {
                if !den[i].is_zero() {
                    acc.sub_assign(&den[i].mul(&out[k - i]));
                }
            }
            let q = match &inv {
                Some(inv) => acc.mul(inv),
                None => acc.exact_div(d0).ok_or_else(non_unit)?,
            };
            out.push(q);
        }
        Ok(Self::new(out))
    }

    /// `f(g(t))`; the inner series must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let c0 = inner.constant_term();
        if !c0.is_zero() {
            return Err(Error::NonzeroInnerConstant(c0.to_string()));
        }
        let n = self.precision().min(inner.precision());
        if n == 0 {
            return Ok(Self::zero(0));
        }
        // Horner. After step i the partial result is multiplied by `inner`
        // i more times, each raising the order by one, so only its first
        // n - i coefficients can still reach the output.
        let mut acc = vec![self.coeffs[n - 1].clone()];
        for i in (0..n - 1).rev() {
            let keep = n - i;
            let mut next = mul_trunc(&acc, &inner.coeffs, keep);
            next[0].add_assign(&self.coeffs[i]);
            acc = next;
        }
        acc.resize(n, R::zero());
        Ok(Self::new(acc))
    }

    /// Compositional inverse `f̄` with `f(f̄(t)) = f̄(f(t)) = t`, by Newton
    /// iteration `g ← g − (f∘g − t) / (f′∘g)`, which doubles the number of
    /// correct coefficients per step.
    pub fn revert(&self) -> Result<Self> {
        let n = self.precision();
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(Error::NotDelta(format!("constant term {c0} is nonzero")));
        }
        if n < 2 {
            return Ok(Self::zero(n));
        }
        let c1 = &self.coeffs[1];
        let c1_inv = c1
            .unit_inverse()
            .ok_or_else(|| Error::NotDelta(format!("linear coefficient {c1} is not a unit")))?;
        // The padded top coefficient of f' only feeds terms of degree >= n.
        let fprime = self.derivative().resized(n);
        let mut g = Self::monomial(c1_inv, 1, 2);
        let mut correct = 2;
        while correct < n {
            correct = (2 * correct).min(n);
            let g_ext = g.resized(correct);
            let err = self
                .truncate(correct)
                .compose(&g_ext)?
                .sub(&Self::t(correct));
            let slope = fprime.truncate(correct).compose(&g_ext)?;
            g = g_ext.sub(&err.div(&slope)?);
        }
        Ok(g)
    }

    /// Coefficient-shift derivative `d/dt`; precision drops by one.
    pub fn derivative(&self) -> Self {
        let n = self.precision().saturating_sub(1);
        Self::from_fn(n, |i| {
            self.coeffs[i + 1].scale(&Rational::from(i as i64 + 1))
        })
    }

    /// Antiderivative with zero constant term; precision grows by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.precision() + 1);
        coeffs.push(R::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1, i as i64 + 1)));
        }
        Self::new(coeffs)
    }

    /// `log f`, for `f` with constant term 1, as `∫ f′/f`.
    pub fn log(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0 != R::one() {
            return Err(Error::ConstantTermNotOne(c0.to_string()));
        }
        Ok(self.derivative().div(self)?.integral())
    }

    /// `exp f`, for `f` with zero constant term, from `h′ = f′h`.
    pub fn exp(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(Error::NonzeroConstantTerm(c0.to_string()));
        }
        let n = self.precision();
        let mut h: Vec<R> = Vec::with_capacity(n);
        for m in 0..n {
            if m == 0 {
                h.push(R::one());
                continue;
            }
            let mut acc = R::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc.add_assign(
                        &self.coeffs[k]
                            .scale(&Rational::from(k as i64))
                            .mul(&h[m - k]),
                    );
                }
            }
            h.push(acc.scale(&Rational::new(1, m as i64)));
        }
        Ok(Self::new(h))
    }
}

impl TruncatedSeries<Rational> {
    /// `e^{ct}`
    pub fn exp_linear(c: &Rational, precision: usize) -> Self {
        let mut term = Rational::one();
        Self::from_fn(precision, |n| {
            if n > 0 {
                term = &term * c / Rational::from(n as i64);
            }
            term.clone()
        })
    }
}

impl TruncatedSeries<LambdaPoly> {
    /// Substitutes `λ := v` in every coefficient.
    pub fn specialize(&self, v: &Rational) -> TruncatedSeries<Rational> {
        self.map(|c| c.eval(v))
    }
}

/// `log_series(f)`; see [`TruncatedSeries::log`].
pub fn log_series<R: Ring>(f: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    f.log()
}

/// `exp_series(f)`; see [`TruncatedSeries::exp`].
pub fn exp_series<R: Ring>(f: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    f.exp()
}

/// Coefficient-wise `λ := v`.
pub fn specialize(f: &TruncatedSeries<LambdaPoly>, v: &Rational) -> TruncatedSeries<Rational> {
    f.specialize(v)
}

/// First `n` coefficients of the product of two coefficient vectors.
fn mul_trunc<R: Ring>(a: &[R], b: &[R], n: usize) -> Vec<R> {
    R::convolve(a, b, n)
}

impl<R: Ring> Add for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::add(self, rhs)
    }
}

impl<R: Ring> Sub for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::sub(self, rhs)
    }
}

impl<R: Ring> Mul for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<R: Ring> Neg for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn neg(self) -> TruncatedSeries<R> {
        TruncatedSeries::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type QS = TruncatedSeries<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn qs(cs: &[(i64, i64)]) -> QS {
        QS::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn exp_t(n: usize) -> QS {
        QS::exp_linear(&q(1, 1), n)
    }

    /// Coefficients computed by a literal double loop, independent of `mul_trunc`.
    fn naive_product(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
        (0..n)
            .map(|k| (0..=k).fold(Rational::zero(), |acc, i| acc + &a[i] * &b[k - i]))
            .collect()
    }

    #[test]
    fn mul_examples() {
        let a = qs(&[(1, 1), (1, 1), (0, 1)]);
        let b = qs(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(a.mul(&b), qs(&[(1, 1), (0, 1), (-1, 1)]));
        assert_eq!(a.mul(&QS::one(3)), a);
        let e = exp_t(8);
        let em = QS::exp_linear(&q(-1, 1), 8);
        assert_eq!(
            naive_product(e.coeffs(), em.coeffs(), 8),
            QS::one(8).into_coeffs()
        );
        assert_eq!(e.mul(&em), QS::one(8));
    }

    #[test]
    fn mul_takes_min_precision() {
        assert_eq!(exp_t(5).mul(&exp_t(9)).precision(), 5);
        assert_eq!(exp_t(5).add(&exp_t(3)).precision(), 3);
    }

    #[test]
    fn div_examples() {
        let t = QS::t(6);
        assert_eq!(t.div(&t).unwrap(), QS::one(5));

        // log(1+t)/t: long division by hand gives 1 - t/2 + t²/3 - t³/4
        let log1p = qs(&[(0, 1), (1, 1), (-1, 2), (1, 3), (-1, 4), (1, 5)]);
        let daehee = log1p.div(&QS::t(6)).unwrap();
        assert_eq!(daehee.truncate(4), qs(&[(1, 1), (-1, 2), (1, 3), (-1, 4)]));

        let em1 = exp_t(6).sub(&QS::one(6));
        let bern = QS::t(6).div(&em1).unwrap();
        assert_eq!(bern.truncate(3), qs(&[(1, 1), (-1, 2), (1, 12)]));
    }

    #[test]
    fn div_rejects_non_units() {
        // t² / t² only cancels one factor of t
        let t2 = QS::monomial(q(1, 1), 2, 5);
        assert!(matches!(
            t2.div(&t2),
            Err(Error::NonUnitLeadingCoefficient(_))
        ));
        let lam = TruncatedSeries::constant(LambdaPoly::lambda(), 4);
        let one = TruncatedSeries::<LambdaPoly>::one(4);
        assert!(matches!(
            one.div(&lam),
            Err(Error::NonUnitLeadingCoefficient(_))
        ));
    }

    #[test]
    fn div_by_lambda_when_exact() {
        let lam = LambdaPoly::lambda();
        let f = TruncatedSeries::new(vec![lam.clone(), Ring::mul(&lam, &lam), LambdaPoly::zero()]);
        let g = TruncatedSeries::constant(lam.clone(), 3);
        assert_eq!(
            f.div(&g).unwrap(),
            TruncatedSeries::new(vec![LambdaPoly::one(), lam, LambdaPoly::zero()])
        );
    }

    #[test]
    fn compose_examples() {
        let e = exp_t(8);
        assert_eq!(e.compose(&QS::t(8)).unwrap(), e);
        let geom = QS::from_fn(4, |_| q(1, 1));
        assert_eq!(geom.compose(&QS::t(4)).unwrap(), geom);
        let log1p = QS::from_fn(8, |n| match n {
            0 => Rational::zero(),
            _ => q(if n % 2 == 1 { 1 } else { -1 }, n as i64),
        });
        let one_plus_t = qs(&[
            (1, 1),
            (1, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
        ]);
        assert_eq!(e.compose(&log1p).unwrap(), one_plus_t);
        assert!(matches!(e.compose(&e), Err(Error::NonzeroInnerConstant(_))));
    }

    #[test]
    fn revert_examples() {
        assert_eq!(QS::t(10).revert().unwrap(), QS::t(10));
        let em1 = exp_t(10).sub(&QS::one(10));
        let r = em1.revert().unwrap();
        let log1p = QS::from_fn(10, |n| match n {
            0 => Rational::zero(),
            _ => q(if n % 2 == 1 { 1 } else { -1 }, n as i64),
        });
        assert_eq!(r, log1p);
        assert_eq!(em1.compose(&r).unwrap(), QS::t(10));

        // t/(1-t) ↦ t/(1+t)
        let f = QS::from_fn(10, |n| if n == 0 { q(0, 1) } else { q(1, 1) });
        let g = QS::from_fn(10, |n| match n {
            0 => q(0, 1),
            _ => q(if n % 2 == 1 { 1 } else { -1 }, 1),
        });
        assert_eq!(f.revert().unwrap(), g);
        assert_eq!(g.compose(&f).unwrap(), QS::t(10));
    }

    #[test]
    fn revert_rejects_non_delta() {
        assert!(matches!(exp_t(5).revert(), Err(Error::NotDelta(_))));
        assert!(matches!(
            QS::monomial(q(1, 1), 2, 5).revert(),
            Err(Error::NotDelta(_))
        ));
    }

    #[test]
    fn log_exp_examples() {
        assert!(log_series(&QS::one(6)).unwrap().is_zero());
        let one_plus_t = qs(&[(1, 1), (1, 1), (0, 1), (0, 1), (0, 1)]);
        assert_eq!(
            log_series(&one_plus_t).unwrap(),
            qs(&[(0, 1), (1, 1), (-1, 2), (1, 3), (-1, 4)])
        );
        assert_eq!(exp_series(&QS::zero(5)).unwrap(), QS::one(5));
        assert_eq!(exp_series(&QS::t(7)).unwrap(), exp_t(7));
        let p = qs(&[
            (1, 1),
            (1, 1),
            (1, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
        ]);
        assert_eq!(exp_series(&log_series(&p).unwrap()).unwrap(), p);
        assert!(matches!(
            log_series(&QS::t(3)),
            Err(Error::ConstantTermNotOne(_))
        ));
        assert!(matches!(
            exp_series(&QS::one(3)),
            Err(Error::NonzeroConstantTerm(_))
        ));
    }

    #[test]
    fn log_of_one_plus_lambda_t() {
        let s = TruncatedSeries::new(vec![
            LambdaPoly::one(),
            LambdaPoly::lambda(),
            LambdaPoly::zero(),
            LambdaPoly::zero(),
        ]);
        let l = log_series(&s).unwrap();
        assert_eq!(l.coeff(3), &LambdaPoly::monomial(q(1, 3), 3));
    }

    #[test]
    fn specialize_examples() {
        let s = TruncatedSeries::new(vec![LambdaPoly::one(), LambdaPoly::lambda()]);
        assert_eq!(s.specialize(&q(1, 2)), qs(&[(1, 1), (1, 2)]));
        let c: TruncatedSeries<LambdaPoly> = exp_t(5).promote();
        assert_eq!(specialize(&c, &q(7, 3)), exp_t(5));
    }

    #[test]
    fn egf_round_trip() {
        let e = exp_t(6);
        assert!(e.egf_values().iter().all(Rational::is_one));
        assert_eq!(QS::from_egf_values(&e.egf_values()), e);
    }
}
