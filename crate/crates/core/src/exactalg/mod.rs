//! Exact rational arithmetic and sparse multivariate polynomials.

mod matrix;
mod order;
mod poly;
mod text;

pub use matrix::{determinant, leading_row_minors, PolyMatrix};
pub use order::{compare_lex, VariableOrder};
pub use poly::{ExponentVector, SparsePolynomial};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    let s = s.trim();
    let err = |msg: &str| crate::Error::Parse { pos: 0, msg: format!("{msg}: {s:?}") };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}
