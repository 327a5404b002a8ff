//! Exact truncated power series over ℚ and ℚ[λ], umbral calculus on
//! polynomials, and the degenerate poly-Bernoulli families built on them.

pub mod error;
pub mod exact;
pub mod families;
pub mod identities;
pub mod parser;
pub mod poly;
pub mod series;
pub mod umbral;

pub use error::{Error, Result};
pub use exact::{LambdaPoly, Rational, Ring};
pub use poly::Polynomial;
pub use series::{TruncatedSeries, DEFAULT_PRECISION};
