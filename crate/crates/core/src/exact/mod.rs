//! Exact scalars, integer and field linear algebra, and norm minimisation.

pub mod field;
pub mod int;
pub mod matrix;
pub mod normmin;
pub mod radius;
pub mod smith;

pub type Rational = num_rational::BigRational;

pub use field::{Field, FieldMatrix};
pub use int::Int;
pub use matrix::{int_matrix, IntMatrix, Matrix, RatMatrix};
pub use normmin::{interpolate, simplex_norm_min, Norm, NormMin};
pub use radius::{cmp_radius, cmp_radius_diff, ExactRadius, Gap};
pub use smith::{column_echelon, smith_normal_form, solve_integer, EchelonBasis, Smith};

use num_bigint::BigInt;

/// `p/q` as a rational; panics on `q = 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim().replace('\u{2212}', "-");
    let (num, den) = match s.as_str().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.as_str(), "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Lowest-terms `"p/q"`, or `"p"` for integers.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
