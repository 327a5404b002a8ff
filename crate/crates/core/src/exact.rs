//! Exact scalars: reduced rationals and the coefficient ring ℚ[λ].
//!
//! Every degenerate quantity in this crate lives in ℚ[λ]; the λ-free ones
//! live in ℚ and embed as degree-0 polynomials. Generic code is written
//! against [`Ring`], which both implement (and so does
//! [`Polynomial`](crate::poly::Polynomial) over either of them).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Coefficient ring used by series and polynomials.
///
/// Method names mirror the arithmetic operators; they take references so
/// that bignum-backed rings never move their operands.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The canonical image of a rational in this ring.
    fn from_rational(r: &Rational) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;
    /// `q` with `q * rhs == self`, if such a `q` exists.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn add_assign(&mut self, rhs: &Self) {
        *self = Ring::add(self, rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = Ring::sub(self, rhs);
    }

    /// `self += a * b`
    fn mul_acc(&mut self, a: &Self, b: &Self) {
        let prod = a.mul(b);
        self.add_assign(&prod);
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The first `n` terms of the Cauchy product of two coefficient lists.
    fn convolve(a: &[Self], b: &[Self], n: usize) -> Vec<Self> {
        let mut out = vec![Self::zero(); n];
        for (i, x) in a.iter().enumerate().take(n) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(n - i) {
                if !y.is_zero() {
                    out[i + j].mul_acc(x, y);
                }
            }
        }
        out
    }
}

/// An exact fraction, always stored reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Integer power; negative exponents invert (panics on `0^-n`).
    pub fn powi(&self, exp: i32) -> Self {
        Rational(num::pow::Pow::pow(&self.0, exp))
    }

    /// The value as an `i64`, if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn factorial(n: usize) -> Self {
        let mut acc = BigInt::one();
        for i in 2..=n {
            acc *= i;
        }
        Rational(BigRational::from_integer(acc))
    }

    pub fn binomial(n: usize, k: usize) -> Self {
        if k > n {
            return Self::zero();
        }
        let k = k.min(n - k);
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        Rational(BigRational::from_integer(acc))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `n`, `-n`, `p/q` and `-p/q` with no interior whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, d),
            None => (body, "1"),
        };
        if !digits(num) || !digits(den) {
            return Err(err());
        }
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = den.parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        let num = if neg { -num } else { num };
        Ok(Rational::from_bigints(num, den))
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.recip()
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.recip().map(|inv| self * inv)
    }
    fn add_assign(&mut self, rhs: &Self) {
        self.0 += &rhs.0;
    }
    fn sub_assign(&mut self, rhs: &Self) {
        self.0 -= &rhs.0;
    }
}

/// A polynomial in λ with rational coefficients, low degree first.
///
/// Canonical form: no trailing zero coefficients, so the zero polynomial is
/// the empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = LambdaPoly { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate λ itself.
    pub fn lambda() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c·λ^deg`
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of λ^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// The value as a rational, if the degree is ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.coeffs.len() <= 1).then(|| self.constant_term())
    }

    /// Horner evaluation at `λ = v`.
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// Polynomial long division; `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &LambdaPoly) -> Option<(LambdaPoly, LambdaPoly)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.coeffs[dd].recip()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((LambdaPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] * &lead_inv;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = &rem[i + j] - &q * d;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Some((LambdaPoly::from_coeffs(quot), LambdaPoly::from_coeffs(rem)))
    }
}

/// Value of `p` at `λ = v`.
pub fn lambda_eval(p: &LambdaPoly, v: &Rational) -> Rational {
    p.eval(v)
}

/// Whether `p` has degree ≤ 0, together with its constant term.
pub fn lambda_is_constant(p: &LambdaPoly) -> (bool, Rational) {
    (p.coeffs.len() <= 1, p.constant_term())
}

impl From<Rational> for LambdaPoly {
    fn from(c: Rational) -> Self {
        LambdaPoly::constant(c)
    }
}

impl From<i64> for LambdaPoly {
    fn from(n: i64) -> Self {
        LambdaPoly::constant(Rational::from(n))
    }
}

impl fmt::Display for LambdaPoly {
    /// Descending λ-degree, e.g. `-1/6*lambda^2 + 1/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str("lambda")?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for LambdaPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for LambdaPoly {
    /// Uses the expression parser, so any rendering it produced reads back.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn poly_add(a: &[Rational], b: &[Rational]) -> LambdaPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = &*o + s;
    }
    LambdaPoly::from_coeffs(out)
}

impl Ring for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly::zero()
    }
    fn one() -> Self {
        LambdaPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        poly_add(&self.coeffs, &rhs.coeffs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let (a, b) = (Cleared::of(self), Cleared::of(rhs));
        let mut acc = Vec::new();
        a.mul_acc_into(&b, &BigInt::one(), &mut acc);
        Cleared::finish(acc, &(&a.den * &b.den))
    }
    fn neg(&self) -> Self {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_rational(r: &Rational) -> Self {
        LambdaPoly::constant(r.clone())
    }
    fn scale(&self, r: &Rational) -> Self {
        LambdaPoly::from_coeffs(self.coeffs.iter().map(|c| c * r).collect())
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.as_constant()?.recip().map(LambdaPoly::constant)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs)?;
        r.is_zero().then_some(q)
    }

    // Sums of products are accumulated over a common denominator, so each
    // output coefficient is reduced once instead of after every addition.
    fn convolve(a: &[Self], b: &[Self], n: usize) -> Vec<Self> {
        let a: Vec<Cleared> = a.iter().take(n).map(Cleared::of).collect();
        let b: Vec<Cleared> = b.iter().take(n).map(Cleared::of).collect();
        (0..n)
            .map(|k| {
                let pairs: Vec<(&Cleared, &Cleared)> = (0..=k)
                    .filter_map(|i| Some((a.get(i)?, b.get(k - i)?)))
                    .filter(|(x, y)| !x.num.is_empty() && !y.num.is_empty())
                    .collect();
                let den = pairs.iter().fold(BigInt::one(), |l, (x, y)| {
                    num::Integer::lcm(&l, &(&x.den * &y.den))
                });
                let mut acc = Vec::new();
                for (x, y) in pairs {
                    x.mul_acc_into(y, &(&den / (&x.den * &y.den)), &mut acc);
                }
                Cleared::finish(acc, &den)
            })
            .collect()
    }
}

/// A λ-polynomial written as `num / den` with integer coefficients.
struct Cleared {
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cleared {
    fn of(p: &LambdaPoly) -> Self {
        let den = p
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| num::Integer::lcm(&l, c.denom()));
        let num = p
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Cleared { num, den }
    }

    /// `acc += scale · self.num · other.num`
    fn mul_acc_into(&self, other: &Cleared, scale: &BigInt, acc: &mut Vec<BigInt>) {
        let len = self.num.len() + other.num.len() - 1;
        if acc.len() < len {
            acc.resize(len, BigInt::zero());
        }
        let (short, long) = if self.num.len() <= other.num.len() {
            (&self.num, &other.num)
        } else {
            (&other.num, &self.num)
        };
        for (i, x) in short.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let x = if scale.is_one() { x.clone() } else { x * scale };
            for (j, y) in long.iter().enumerate() {
                acc[i + j] += &x * y;
            }
        }
    }

    fn finish(acc: Vec<BigInt>, den: &BigInt) -> LambdaPoly {
        LambdaPoly::from_coeffs(
            acc.into_iter()
                .map(|c| Rational::from_bigints(c, den.clone()))
                .collect(),
        )
    }
}

macro_rules! lambda_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&LambdaPoly> for &LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: &LambdaPoly) -> LambdaPoly {
                Ring::$method(self, rhs)
            }
        }
        impl $trait<LambdaPoly> for LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: LambdaPoly) -> LambdaPoly {
                Ring::$method(&self, &rhs)
            }
        }
    };
}

lambda_binop!(Add, add);
lambda_binop!(Sub, sub);
lambda_binop!(Mul, mul);

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        Ring::neg(&self)
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        Ring::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn lp(cs: &[(i64, i64)]) -> LambdaPoly {
        LambdaPoly::from_coeffs(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn rationals_reduce() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(q(4, 2).to_string(), "2");
    }

    #[test]
    fn rational_parse() {
        assert_eq!("-1/6".parse::<Rational>().unwrap(), q(-1, 6));
        assert_eq!("4/8".parse::<Rational>().unwrap(), q(1, 2));
        assert_eq!("17".parse::<Rational>().unwrap(), q(17, 1));
        for bad in ["", "1/0", "1/", "/2", "a", "1 /2", "--1", "1/-2"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(Rational::factorial(0), q(1, 1));
        assert_eq!(Rational::factorial(10), q(3_628_800, 1));
        assert_eq!(Rational::binomial(10, 3), q(120, 1));
        assert_eq!(Rational::binomial(3, 5), q(0, 1));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(lambda_eval(&LambdaPoly::lambda(), &q(0, 1)), q(0, 1));
        let p = lp(&[(1, 6), (0, 1), (-1, 6)]);
        assert_eq!(lambda_eval(&p, &q(0, 1)), q(1, 6));
        assert_eq!(lambda_eval(&p, &q(1, 1)), q(0, 1));
    }

    #[test]
    fn constant_examples() {
        assert_eq!(lambda_is_constant(&lp(&[(-3, 4)])), (true, q(-3, 4)));
        assert_eq!(lambda_is_constant(&LambdaPoly::lambda()), (false, q(0, 1)));
        assert_eq!(
            lambda_is_constant(&lp(&[(-1, 2), (1, 2)])),
            (false, q(-1, 2))
        );
        assert_eq!(lambda_is_constant(&LambdaPoly::zero()), (true, q(0, 1)));
    }

    #[test]
    fn rendering() {
        assert_eq!(
            lp(&[(1, 6), (0, 1), (-1, 6)]).to_string(),
            "-1/6*lambda^2 + 1/6"
        );
        assert_eq!(lp(&[(-1, 2), (1, 2)]).to_string(), "1/2*lambda - 1/2");
        assert_eq!(
            lp(&[(0, 1), (-1, 1), (0, 1), (1, 1)]).to_string(),
            "lambda^3 - lambda"
        );
        assert_eq!(LambdaPoly::zero().to_string(), "0");
        assert_eq!(lp(&[(-2, 1)]).to_string(), "-2");
    }

    #[test]
    fn canonical_form_trims() {
        let p = lp(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(LambdaPoly::from_coeffs(p.coeffs().to_vec()), p);
        let cancel = Ring::sub(&LambdaPoly::lambda(), &LambdaPoly::lambda());
        assert!(cancel.is_zero());
        assert_eq!(cancel.degree(), None);
    }

    #[test]
    fn exact_division() {
        // (λ² − 1) / (λ − 1) = λ + 1
        let num = lp(&[(-1, 1), (0, 1), (1, 1)]);
        let den = lp(&[(-1, 1), (1, 1)]);
        assert_eq!(num.exact_div(&den), Some(lp(&[(1, 1), (1, 1)])));
        assert_eq!(den.exact_div(&num), None);
        assert_eq!(num.exact_div(&LambdaPoly::zero()), None);
        assert_eq!(LambdaPoly::lambda().unit_inverse(), None);
        assert_eq!(lp(&[(2, 3)]).unit_inverse(), Some(lp(&[(3, 2)])));
    }
}
