//! Exact scalars: Laurent polynomials in `q` with rational coefficients, their
//! fraction field, and exact linear algebra over it.

mod frac;
mod laurent;
mod poly;
pub mod solve;

pub use frac::RatScalar;
pub use laurent::LaurentScalar;
pub use solve::{
    kernel_basis, rank, rank_at, rs_solve, RatMatrix, RowEchelon, Solution, SolveMode, SparseRow,
};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary precision rational number.
pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `a` or `a/b` into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(a, b))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
