//! Dense polynomials in `x` over a coefficient [`Ring`].

use std::fmt;

use crate::exact::{Rational, Ring};

/// A polynomial in `x`, low degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let mut p = Polynomial { coeffs };
        while p.coeffs.last().is_some_and(R::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·x^deg`
    pub fn monomial(c: R, deg: usize) -> Self {
        let mut coeffs = vec![R::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x^n`
    pub fn x_pow(n: usize) -> Self {
        Self::monomial(R::one(), n)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> Self {
        self.nth_derivative(1)
    }

    /// `d^k/dx^k`
    pub fn nth_derivative(&self, k: usize) -> Self {
        if k >= self.coeffs.len() {
            return Self::zero();
        }
        let coeffs = (k..self.coeffs.len())
            .map(|i| {
                // i!/(i-k)! = i(i-1)…(i-k+1)
                let falling = ((i - k + 1)..=i)
                    .fold(Rational::one(), |acc, v| acc * Rational::from(v as i64));
                self.coeffs[i].scale(&falling)
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `q(x) = p(x + y)`, by binomial re-expansion.
    pub fn shift(&self, y: &R) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![R::zero(); n];
        let y_pows: Vec<R> = std::iter::successors(Some(R::one()), |p| Some(p.mul(y)))
            .take(n)
            .collect();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let term = c.mul(&y_pows[i - j]).scale(&Rational::binomial(i, j));
                slot.add_assign(&term);
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    pub fn mul_scalar(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Ring for Polynomial<R> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }
    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].mul_acc(a, b);
            }
        }
        Self::from_coeffs(out)
    }
    fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(R::from_rational(r))
    }
    fn scale(&self, r: &Rational) -> Self {
        Polynomial::scale(self, r)
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.len() {
            1 => self.coeffs[0].unit_inverse().map(Self::constant),
            _ => None,
        }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let dd = rhs.degree()?;
        let lead = &rhs.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.is_zero().then(Self::zero);
        }
        let mut quot = vec![R::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd].exact_div(lead)?;
            for (j, d) in rhs.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&q.mul(d));
            }
            quot[i] = q;
        }
        rem.iter().all(R::is_zero).then(|| Self::from_coeffs(quot))
    }
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    /// Descending x-degree; compound coefficients are parenthesised,
    /// e.g. `x^2 + (lambda - 1)*x - 3/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let compound = s.len() > 1 && (s[1..].contains(" + ") || s[1..].contains(" - "));
            let (negative, mag) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ if compound => (false, format!("({s})")),
                _ => (false, s),
            };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if deg == 0 {
                f.write_str(&mag)?;
                continue;
            }
            if mag != "1" {
                write!(f, "{mag}*")?;
            }
            f.write_str("x")?;
            if deg > 1 {
                write!(f, "^{deg}")?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::LambdaPoly;

    fn qp(cs: &[i64]) -> Polynomial<Rational> {
        Polynomial::from_coeffs(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn shift_examples() {
        let p = qp(&[0, 0, 1]);
        assert_eq!(p.shift(&Rational::one()), qp(&[1, 2, 1]));
        assert_eq!(p.shift(&Rational::zero()), p);
        let p = qp(&[3, -1, 4, 2]);
        let (a, b) = (Rational::new(2, 3), Rational::from(-5));
        assert_eq!(p.shift(&a).shift(&b), p.shift(&(&a + &b)));
    }

    #[test]
    fn derivatives() {
        let p = qp(&[1, 1, 1, 1]);
        assert_eq!(p.derivative(), qp(&[1, 2, 3]));
        assert_eq!(p.nth_derivative(3), qp(&[6]));
        assert!(p.nth_derivative(4).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::<Rational>::x_pow(5).to_string(), "x^5");
        let p = Polynomial::from_coeffs(vec![Rational::new(-3, 4), Rational::one()]);
        assert_eq!(p.to_string(), "x - 3/4");
        let lam = Polynomial::from_coeffs(vec![
            LambdaPoly::from(-2),
            LambdaPoly::from_coeffs(vec![Rational::from(-1), Rational::one()]),
            LambdaPoly::one(),
        ]);
        assert_eq!(lam.to_string(), "x^2 + (lambda - 1)*x - 2");
        let neg_lead = Polynomial::from_coeffs(vec![Rational::zero(), Rational::from(-1)]);
        assert_eq!(neg_lead.to_string(), "-x");
    }

    #[test]
    fn exact_division_in_x() {
        let a = qp(&[-1, 0, 1]);
        let b = qp(&[1, 1]);
        assert_eq!(Ring::exact_div(&a, &b), Some(qp(&[-1, 1])));
        assert_eq!(Ring::exact_div(&b, &a), None);
    }

    #[test]
    fn high_derivatives_do_not_overflow() {
        let p = Polynomial::<Rational>::x_pow(31);
        assert_eq!(
            p.nth_derivative(31),
            Polynomial::constant(Rational::factorial(31))
        );
    }
}
