//! Exact rational scalars and the free supercommutative ∂-ring that every
//! other module builds on.
//!
//! Variables are stored in ∂-indexing (`∂^k x`); [`SubscriptVar`] gives the
//! alternative `x_m` indexing used when describing the current-algebra action.

mod monomial;
mod poly;
mod text;
mod var;

pub use monomial::SuperMonomial;
pub use poly::PolyExpr;
pub(crate) use text::{write_scalar_coeff, Cursor};
pub use var::{Chart, GenVar, SubscriptVar, Symbol};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational coefficient. `BigRational` keeps itself in lowest terms
/// with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `n! / (n-k)!`, zero when `k > n`.
pub fn falling(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    ((n - k + 1)..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    falling(n, k) / factorial(k)
}

pub fn inv_factorial(n: u32) -> Scalar {
    Scalar::new(BigInt::one(), factorial(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_odd(self.is_odd() != rhs.is_odd())
    }
}

/// Koszul sign `(-1)^{|a||b|}` as a scalar factor.
pub fn koszul(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}
