//! An executable catalog of identities for the degenerate poly-Bernoulli
//! family, each checked by exact comparison in ℚ[λ].
//!
//! Every entry computes its two sides along different routes: one side
//! normally reads a precomputed [`Tables`] entry, the other is rebuilt from
//! series products, operator actions or explicit binomial sums. Passing
//! deliberately corrupted tables to [`verify_with_tables`] must therefore
//! produce a failure with a witness.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{LambdaPoly, Rational, Ring};
use crate::families::{self, appell_poly, LPoly, LSeries, QSeries};
use crate::parser::{self, ExprError};
use crate::series::{TruncatedSeries, DEFAULT_PRECISION};
use crate::umbral::{invariant_integral, op_apply, pair, sheffer_check, ShefferFailure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Identity {
    /// β⁽¹⁾ₙ = Σ C(n,l) λ^{n−l} D_{n−l} β_{l,λ}
    Eq5,
    /// binomial form of β⁽ᵏ⁾ₙ(x) against the `e^{xt}` generating function
    Eq17,
    /// `((e^{yt}−1)/t) β⁽ᵏ⁾ₙ(x)` against the difference of `β⁽ᵏ⁾ₙ₊₁`
    Eq18,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    /// multinomial convolution for the order-r numbers
    Remark,
    Sheffer16,
    Sheffer23,
    /// `β⁽⁰⁾ₙ(x) = xⁿ`
    K0,
    /// λ = 0 recovers the poly-Bernoulli numbers
    Lambda0,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::Eq5,
        Identity::Eq17,
        Identity::Eq18,
        Identity::Thm1,
        Identity::Thm2,
        Identity::Thm3,
        Identity::Thm4,
        Identity::Remark,
        Identity::Sheffer16,
        Identity::Sheffer23,
        Identity::K0,
        Identity::Lambda0,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Identity::Eq5 => "eq5",
            Identity::Eq17 => "eq17",
            Identity::Eq18 => "eq18",
            Identity::Thm1 => "thm1",
            Identity::Thm2 => "thm2",
            Identity::Thm3 => "thm3",
            Identity::Thm4 => "thm4",
            Identity::Remark => "remark",
            Identity::Sheffer16 => "sheffer16",
            Identity::Sheffer23 => "sheffer23",
            Identity::K0 => "k0",
            Identity::Lambda0 => "lambda0",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Whether comparisons happen in ℚ[λ] or after substituting a value for λ.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum LambdaMode {
    #[default]
    Symbolic,
    At(Rational),
}

impl fmt::Display for LambdaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaMode::Symbolic => f.write_str("symbolic"),
            LambdaMode::At(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for LambdaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "symbolic" {
            return Ok(LambdaMode::Symbolic);
        }
        s.parse().map(LambdaMode::At).map_err(|_| {
            Error::InvalidParameter(format!("lambda must be `symbolic` or p/q, got `{s}`"))
        })
    }
}

impl From<LambdaMode> for String {
    fn from(m: LambdaMode) -> String {
        m.to_string()
    }
}

impl TryFrom<String> for LambdaMode {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Parameters of a catalog check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityParams {
    pub k: i32,
    pub r: u32,
    /// Largest index `n` checked.
    pub n_max: usize,
    /// Fixed sample points for the shift variable `y`; one extra random
    /// rational drawn from `seed` is always appended.
    pub ys: Vec<Rational>,
    pub lambda: LambdaMode,
    /// Number of random polynomials for the functional checks.
    pub samples: usize,
    /// Maximum degree of those polynomials.
    pub sample_degree: usize,
    pub seed: u64,
}

impl IdentityParams {
    pub fn new(k: i32, r: u32, n_max: usize) -> Self {
        IdentityParams {
            k,
            r,
            n_max,
            ys: vec![Rational::one(), Rational::from(-2), Rational::new(3, 5)],
            lambda: LambdaMode::Symbolic,
            samples: 50,
            sample_degree: 10,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_lambda(mut self, lambda: LambdaMode) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_samples(mut self, samples: usize, sample_degree: usize) -> Self {
        self.samples = samples;
        self.sample_degree = sample_degree;
        self
    }

    /// The fixed `ys` plus the seeded random one.
    pub fn sampled_ys(&self) -> Vec<Rational> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ 0x9e37_79b9_7f4a_7c15);
        let mut ys = self.ys.clone();
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        ys.push(Rational::new(
            sign * rng.gen_range(1..=20),
            rng.gen_range(1..=7),
        ));
        ys
    }

    /// Series and table length needed by the checks.
    pub fn working_len(&self) -> usize {
        self.n_max.max(self.sample_degree) + 2
    }

    fn validate(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        let len = self.working_len();
        if len > DEFAULT_PRECISION {
            return Err(Error::PrecisionExceeded {
                needed: len,
                precision: DEFAULT_PRECISION,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First index at which the two sides disagreed.
///
/// For checks over random polynomials `n` is the sample index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Parameters of an ad hoc `lhs == rhs` series equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationParams {
    pub order: usize,
    pub lambda: LambdaMode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportParams {
    Catalog(IdentityParams),
    Equation(EquationParams),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: ReportParams,
    pub status: Status,
    pub witness: Option<Witness>,
}

impl IdentityReport {
    fn new(id: String, params: ReportParams, witness: Option<Witness>) -> Self {
        IdentityReport {
            id,
            params,
            status: if witness.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Precomputed number tables an identity check reads from.
#[derive(Debug, Clone, PartialEq)]
pub struct Tables {
    pub k: i32,
    pub r: u32,
    /// `β⁽ᵏ⁾ₙ`
    pub dpb: Vec<LambdaPoly>,
    /// `β⁽ᵏ'ʳ⁾ₙ`
    pub dpb_higher: Vec<LambdaPoly>,
    /// `β⁽¹⁾ₙ`
    pub dpb_one: Vec<LambdaPoly>,
    /// `Dₙ`
    pub daehee: Vec<LambdaPoly>,
    /// `β_{n,λ}`
    pub carlitz: Vec<LambdaPoly>,
    /// `Bₙ`
    pub bernoulli: Vec<Rational>,
    /// `Bₙ⁽ᵏ⁾`
    pub poly_bernoulli: Vec<Rational>,
}

impl Tables {
    pub fn build(k: i32, r: u32, len: usize) -> Result<Self> {
        let to_q = |t: families::SequenceTable| {
            t.entries
                .iter()
                .map(LambdaPoly::constant_term)
                .collect::<Vec<_>>()
        };
        Ok(Tables {
            k,
            r,
            dpb: families::dpb_numbers(k, len).entries,
            dpb_higher: families::dpb_higher_numbers(k, r, len)?.entries,
            dpb_one: families::dpb_numbers(1, len).entries,
            daehee: families::daehee(len).entries,
            carlitz: families::carlitz_beta(len).entries,
            bernoulli: to_q(families::bernoulli(len)),
            poly_bernoulli: to_q(families::poly_bernoulli(k, len)),
        })
    }

    pub fn for_params(params: &IdentityParams) -> Result<Self> {
        params.validate()?;
        Self::build(params.k, params.r, params.working_len())
    }
}

trait Comparable: PartialEq + fmt::Display {
    fn at(&self, v: &Rational) -> Self;
}

impl Comparable for LambdaPoly {
    fn at(&self, v: &Rational) -> Self {
        LambdaPoly::constant(self.eval(v))
    }
}

impl Comparable for LPoly {
    fn at(&self, v: &Rational) -> Self {
        self.map(|c| LambdaPoly::constant(c.eval(v)))
    }
}

struct Check<'a> {
    params: &'a IdentityParams,
    tables: &'a Tables,
    len: usize,
}

type Outcome = Result<Option<Witness>>;

impl Check<'_> {
    fn compare<T: Comparable>(&self, n: usize, lhs: T, rhs: T) -> Option<Witness> {
        let (lhs, rhs) = match &self.params.lambda {
            LambdaMode::Symbolic => (lhs, rhs),
            LambdaMode::At(v) => (lhs.at(v), rhs.at(v)),
        };
        (lhs != rhs).then(|| Witness {
            n,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }

    fn n_range(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.params.n_max
    }

    fn random_polys(&self, salt: u64) -> Vec<LPoly> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.params.seed.wrapping_add(salt));
        (0..self.params.samples)
            .map(|_| {
                let deg = rng.gen_range(0..=self.params.sample_degree);
                let coeffs = (0..=deg)
                    .map(|_| {
                        let lam_deg = rng.gen_range(0..=2);
                        LambdaPoly::from_coeffs(
                            (0..=lam_deg)
                                .map(|_| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
                                .collect(),
                        )
                    })
                    .collect();
                LPoly::from_coeffs(coeffs)
            })
            .collect()
    }

    /// `G(t) = Li_k(1 − (1+λt)^{−1/λ}) / ((1+λt)^{1/λ} − 1)`
    fn gf(&self) -> LSeries {
        families::dpb_gf(self.params.k, self.len)
    }

    /// `A(t) = ((eᵗ − 1)/t) · G(t)`
    fn a_series(&self) -> LSeries {
        lift(&families::exp_quotient_gf(self.len)).mul(&self.gf())
    }

    fn bernoulli_series(&self) -> LSeries {
        lift(&families::bernoulli_gf(self.len))
    }

    fn poly(&self, table: &[LambdaPoly], n: usize) -> LPoly {
        appell_poly(table, n)
    }

    /// `∫ p(x + y) dμ₀(y)` by expanding in `y` and replacing `yʲ` with the
    /// tabulated `Bⱼ`.
    fn integrate_explicit(&self, p: &LPoly) -> LPoly {
        let bern = &self.tables.bernoulli;
        let deg = p.degree().map_or(0, |d| d + 1);
        let mut out = vec![LambdaPoly::zero(); deg];
        for (i, c) in p.coeffs().iter().enumerate() {
            for j in 0..=i {
                let w = &Rational::binomial(i, j) * &bern[j];
                out[i - j].add_assign(&c.scale(&w));
            }
        }
        LPoly::from_coeffs(out)
    }

    fn eq5(&self) -> Outcome {
        let t = self.tables;
        for n in self.n_range() {
            let rhs = (0..=n).fold(LambdaPoly::zero(), |acc, l| {
                let term = LambdaPoly::monomial(Rational::binomial(n, l), n - l)
                    .mul(&t.daehee[n - l])
                    .mul(&t.carlitz[l]);
                acc.add(&term)
            });
            if let Some(w) = self.compare(n, t.dpb_one[n].clone(), rhs) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn eq17(&self) -> Outcome {
        let gen = self
            .gf()
            .map(|c| LPoly::constant(c.clone()))
            .mul(&TruncatedSeries::from_fn(self.len, |n| {
                LPoly::monomial(
                    LambdaPoly::constant(Rational::factorial(n).recip().unwrap()),
                    n,
                )
            }));
        let series_side = gen.egf_values();
        for n in self.n_range() {
            let lhs = self.poly(&self.tables.dpb, n);
            if let Some(w) = self.compare(n, lhs, series_side[n].clone()) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn eq18(&self) -> Outcome {
        for y in self.params.sampled_ys() {
            let kernel = lift(
                &QSeries::exp_linear(&y, self.len + 1)
                    .sub(&QSeries::one(self.len + 1))
                    .div(&QSeries::t(self.len + 1))?,
            );
            let y_l = LambdaPoly::constant(y.clone());
            for n in self.n_range() {
                let p = self.poly(&self.tables.dpb, n);
                let next = self.poly(&self.tables.dpb, n + 1);
                let lhs = op_apply(&kernel, &p)?;
                let rhs = next
                    .shift(&y_l)
                    .sub(&next)
                    .scale(&Rational::new(1, n as i64 + 1));
                if let Some(w) = self.compare(n, lhs, rhs) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn thm1(&self) -> Outcome {
        let g = self.gf();
        let a = self.a_series();
        let ab = a.mul(&self.bernoulli_series());
        for n in self.n_range() {
            let lhs = pair(&ab, &LPoly::x_pow(n))?;
            if let Some(w) = self.compare(n, lhs, self.tables.dpb[n].clone()) {
                return Ok(Some(w));
            }
        }
        let undo = lift(&families::exp_quotient_gf(self.len));
        for (i, p) in self.random_polys(1).iter().enumerate() {
            let lhs = pair(&g, p)?;
            let rhs = invariant_integral(&op_apply(&a, p)?, 1)?;
            if let Some(w) = self.compare(i, lhs, rhs) {
                return Ok(Some(w));
            }
            let back = invariant_integral(&op_apply(&undo, p)?, 1)?;
            if let Some(w) = self.compare(i, back, p.coeff(0)) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    /// `A·∫p(x+y)dμ₀(y) = G·p`, for monomials and random polynomials, plus
    /// the shift rule `e^{yt}p(x) = p(x+y)` on the sampled `y`.
    fn thm2(&self) -> Outcome {
        let a = self.a_series();
        let g = self.gf();
        let monomials: Vec<LPoly> = self.n_range().map(LPoly::x_pow).collect();
        for (n, p) in monomials.iter().enumerate() {
            let lhs = op_apply(&a, &self.integrate_explicit(p))?;
            if let Some(w) = self.compare(n, lhs, op_apply(&g, p)?) {
                return Ok(Some(w));
            }
        }
        let samples = self.random_polys(2);
        for (i, p) in samples.iter().enumerate() {
            let lhs = op_apply(&a, &self.integrate_explicit(p))?;
            if let Some(w) = self.compare(i, lhs, op_apply(&g, p)?) {
                return Ok(Some(w));
            }
        }
        for y in self.params.sampled_ys() {
            let ey = lift(&QSeries::exp_linear(&y, self.len));
            let y_l = LambdaPoly::constant(y);
            for (i, p) in samples.iter().enumerate() {
                if let Some(w) = self.compare(i, op_apply(&ey, p)?, p.shift(&y_l)) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn thm3(&self) -> Outcome {
        let r = self.params.r;
        let a_r = self.a_series().pow(r);
        let g_r = families::dpb_higher_gf(self.params.k, r, self.len)?;
        let bern_r = self.bernoulli_series().pow(r);
        let mut polys: Vec<LPoly> = self.n_range().map(LPoly::x_pow).collect();
        polys.extend(self.random_polys(3));
        for (i, p) in polys.iter().enumerate() {
            let iterated = (0..r).fold(p.clone(), |acc, _| self.integrate_explicit(&acc));
            if let Some(w) = self.compare(i, op_apply(&bern_r, p)?, iterated.clone()) {
                return Ok(Some(w));
            }
            if let Some(w) = self.compare(i, op_apply(&a_r, &iterated)?, op_apply(&g_r, p)?) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn thm4(&self) -> Outcome {
        let r = self.params.r;
        let a_r = self.a_series().pow(r);
        let g_r = families::dpb_higher_gf(self.params.k, r, self.len)?;
        let kernel = a_r.mul(&self.bernoulli_series().pow(r));
        for n in self.n_range() {
            let lhs = pair(&kernel, &LPoly::x_pow(n))?;
            if let Some(w) = self.compare(n, lhs, self.tables.dpb_higher[n].clone()) {
                return Ok(Some(w));
            }
        }
        let undo_r = lift(&families::exp_quotient_gf(self.len)).pow(r);
        for (i, p) in self.random_polys(4).iter().enumerate() {
            let lhs = pair(&g_r, p)?;
            let rhs = invariant_integral(&op_apply(&a_r, p)?, r)?;
            if let Some(w) = self.compare(i, lhs, rhs) {
                return Ok(Some(w));
            }
            let back = invariant_integral(&op_apply(&undo_r, p)?, r)?;
            if let Some(w) = self.compare(i, back, p.coeff(0)) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn remark(&self) -> Outcome {
        let base = &self.tables.dpb;
        let r = self.params.r as usize;
        for n in self.n_range() {
            let mut parts = Vec::with_capacity(r);
            let rhs = multinomial_sum(n, r, base, &mut parts);
            if let Some(w) = self.compare(n, self.tables.dpb_higher[n].clone(), rhs) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn sheffer(&self, table: &[LambdaPoly], r: u32) -> Outcome {
        let n = self.len + 1;
        let g = families::dpb_denominator(n)
            .div(&families::dpb_numerator(self.params.k, n))?
            .pow(r);
        let f = LSeries::t(self.len);
        let s: Vec<LPoly> = self.n_range().map(|n| self.poly(table, n)).collect();
        let failure = sheffer_check(&g, &f, &s, self.params.n_max)?;
        Ok(failure.map(|fail| match fail {
            ShefferFailure::Orthogonality {
                n, got, expected, ..
            } => Witness {
                n,
                lhs: got.to_string(),
                rhs: expected.to_string(),
            },
            ShefferFailure::Regeneration { n, got, expected } => Witness {
                n,
                lhs: got.to_string(),
                rhs: expected.to_string(),
            },
        }))
    }

    fn k0(&self) -> Outcome {
        let table = if self.params.k == 0 {
            self.tables.dpb.clone()
        } else {
            families::dpb_numbers(0, self.len).entries
        };
        for n in self.n_range() {
            if let Some(w) = self.compare(n, self.poly(&table, n), LPoly::x_pow(n)) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn lambda0(&self) -> Outcome {
        for n in self.n_range() {
            let lhs = LambdaPoly::constant(self.tables.dpb[n].eval(&Rational::zero()));
            let rhs = LambdaPoly::constant(self.tables.poly_bernoulli[n].clone());
            if let Some(w) = self.compare(n, lhs, rhs) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }
}

fn lift(s: &QSeries) -> LSeries {
    s.promote()
}

/// `Σ_{n₁+⋯+n_r=n} n!/(n₁!⋯n_r!) · Π base[nᵢ]`, enumerating compositions.
fn multinomial_sum(n: usize, r: usize, base: &[LambdaPoly], parts: &mut Vec<usize>) -> LambdaPoly {
    if parts.len() + 1 == r {
        let last = n - parts.iter().sum::<usize>();
        parts.push(last);
        let coeff = parts.iter().fold(Rational::factorial(n), |acc, &p| {
            acc / Rational::factorial(p)
        });
        let prod = parts
            .iter()
            .fold(LambdaPoly::constant(coeff), |acc, &p| acc.mul(&base[p]));
        parts.pop();
        return prod;
    }
    let used: usize = parts.iter().sum();
    let mut acc = LambdaPoly::zero();
    for part in 0..=(n - used) {
        parts.push(part);
        acc = acc.add(&multinomial_sum(n, r, base, parts));
        parts.pop();
    }
    acc
}

/// Runs one catalog entry against freshly built tables.
pub fn verify(id: Identity, params: &IdentityParams) -> Result<IdentityReport> {
    let tables = Tables::for_params(params)?;
    verify_with_tables(id, params, &tables)
}

/// Runs a catalog entry by name.
pub fn verify_named(id: &str, params: &IdentityParams) -> Result<IdentityReport> {
    verify(id.parse()?, params)
}

/// Runs one catalog entry against the given (possibly altered) tables.
pub fn verify_with_tables(
    id: Identity,
    params: &IdentityParams,
    tables: &Tables,
) -> Result<IdentityReport> {
    params.validate()?;
    let len = params.working_len();
    if tables.dpb.len() < len || tables.dpb_higher.len() < len {
        return Err(Error::PrecisionExceeded {
            needed: len,
            precision: tables.dpb.len().min(tables.dpb_higher.len()),
        });
    }
    let check = Check {
        params,
        tables,
        len,
    };
    let witness = match id {
        Identity::Eq5 => check.eq5(),
        Identity::Eq17 => check.eq17(),
        Identity::Eq18 => check.eq18(),
        Identity::Thm1 => check.thm1(),
        Identity::Thm2 => check.thm2(),
        Identity::Thm3 => check.thm3(),
        Identity::Thm4 => check.thm4(),
        Identity::Remark => check.remark(),
        Identity::Sheffer16 => check.sheffer(&tables.dpb, 1),
        Identity::Sheffer23 => check.sheffer(&tables.dpb_higher, params.r),
        Identity::K0 => check.k0(),
        Identity::Lambda0 => check.lambda0(),
    }?;
    Ok(IdentityReport::new(
        id.id().to_string(),
        ReportParams::Catalog(params.clone()),
        witness,
    ))
}

/// Every catalog entry, in catalog order.
pub fn verify_all(params: &IdentityParams) -> Result<Vec<IdentityReport>> {
    let tables = Tables::for_params(params)?;
    Identity::ALL
        .iter()
        .map(|&id| verify_with_tables(id, params, &tables))
        .collect()
}

/// Checks a series equation `lhs == rhs` coefficient by coefficient up to
/// `order` terms.
pub fn check_equation(
    text: &str,
    order: usize,
    lambda: &LambdaMode,
) -> Result<IdentityReport, ExprError> {
    let (lhs, rhs) = parser::parse_equation(text)?;
    let l = parser::eval_expr(&lhs, order)?;
    let r = parser::eval_expr(&rhs, order)?;
    let witness = l
        .coeffs()
        .iter()
        .zip(r.coeffs())
        .enumerate()
        .find_map(|(n, (a, b))| {
            let (a, b) = match lambda {
                LambdaMode::Symbolic => (a.clone(), b.clone()),
                LambdaMode::At(v) => (a.at(v), b.at(v)),
            };
            (a != b).then(|| Witness {
                n,
                lhs: a.to_string(),
                rhs: b.to_string(),
            })
        });
    Ok(IdentityReport::new(
        text.to_string(),
        ReportParams::Equation(EquationParams {
            order,
            lambda: lambda.clone(),
        }),
        witness,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(k: i32, r: u32, n_max: usize) -> IdentityParams {
        IdentityParams::new(k, r, n_max).with_samples(8, 6)
    }

    #[test]
    fn every_entry_passes_small() {
        for report in verify_all(&quick(2, 2, 6)).unwrap() {
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn remark_example() {
        let report = verify(Identity::Remark, &IdentityParams::new(2, 2, 10)).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn k0_example() {
        assert!(verify(Identity::K0, &quick(1, 1, 20)).unwrap().passed());
    }

    #[test]
    fn eq18_example() {
        assert!(verify(Identity::Eq18, &quick(1, 1, 8)).unwrap().passed());
    }

    #[test]
    fn numeric_lambda_mode() {
        let p = quick(-1, 2, 5).with_lambda(LambdaMode::At(Rational::new(1, 3)));
        for report in verify_all(&p).unwrap() {
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn unknown_identity() {
        assert_eq!(
            verify_named("thm9", &quick(1, 1, 3)).unwrap_err(),
            Error::UnknownIdentity("thm9".into())
        );
    }

    #[test]
    fn out_of_range_params() {
        let p = IdentityParams::new(1, 1, 40);
        assert!(matches!(
            verify(Identity::Eq5, &p),
            Err(Error::PrecisionExceeded { .. })
        ));
        let p = IdentityParams::new(1, 0, 4);
        assert!(matches!(
            verify(Identity::Remark, &p),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn perturbed_table_is_caught() {
        let p = quick(2, 2, 6);
        let mut tables = Tables::for_params(&p).unwrap();
        tables.dpb_higher[4] = tables.dpb_higher[4].add(&LambdaPoly::one());
        let report = verify_with_tables(Identity::Remark, &p, &tables).unwrap();
        assert_eq!(report.status, Status::Fail);
        let w = report.witness.unwrap();
        assert_eq!(w.n, 4);
        let lhs: LambdaPoly = w.lhs.parse().unwrap();
        let rhs: LambdaPoly = w.rhs.parse().unwrap();
        assert_eq!(lhs.sub(&rhs), LambdaPoly::one());
    }

    #[test]
    fn multinomial_matches_repeated_binomial_convolution() {
        let base: Vec<LambdaPoly> = (0..7).map(|i| LambdaPoly::from(i as i64 + 1)).collect();
        // r = 2 is the binomial convolution
        for n in 0..7 {
            let direct = (0..=n).fold(LambdaPoly::zero(), |acc, i| {
                acc.add(&base[i].mul(&base[n - i]).scale(&Rational::binomial(n, i)))
            });
            assert_eq!(multinomial_sum(n, 2, &base, &mut Vec::new()), direct);
        }
    }

    #[test]
    fn equation_checks() {
        let ok = check_equation(
            "li(1, 1-elam(-1)) == log(1+lambda*t)/lambda",
            12,
            &LambdaMode::Symbolic,
        )
        .unwrap();
        assert!(ok.passed());
        let bad = check_equation("t == t + 1", 4, &LambdaMode::Symbolic).unwrap();
        assert_eq!(
            bad.witness,
            Some(Witness {
                n: 0,
                lhs: "0".into(),
                rhs: "1".into()
            })
        );
        assert!(check_equation("t = t", 4, &LambdaMode::Symbolic).is_err());
    }

    #[test]
    fn report_json_shape() {
        let report = check_equation("t == t + 1", 2, &LambdaMode::Symbolic).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["status"], "fail");
        assert_eq!(json["witness"]["n"], 0);
        assert_eq!(json["params"]["lambda"], "symbolic");
        let back: IdentityReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, report);

        let report = verify(Identity::K0, &quick(0, 1, 3)).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["witness"], serde_json::Value::Null);
        assert_eq!(json["params"]["ys"][2], "3/5");
        assert_eq!(
            serde_json::from_value::<IdentityReport>(json).unwrap(),
            report
        );
    }
}
