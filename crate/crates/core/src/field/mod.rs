//! Exact scalars: rationals, univariate polynomials, reduced rational
//! functions, and towers of rational-function fields.

mod poly;
mod ratfun;
mod rational;
mod roots;
mod tower;

use std::fmt;

pub use poly::Poly;
pub use ratfun::RatFun;
pub use rational::Rational;
pub use roots::{rational_roots, RootFactorization};
pub use tower::{Q1, Q2, Q3, Q4, Q5, Q6, TowerLevel};

pub(crate) use rational::big_gcd;

use crate::error::Result;

/// A commutative ring containing the rationals, with canonical elements.
///
/// Equality must decide equality of ring elements.
pub trait Ring: Clone + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }
    /// Multiplication by an element of the prime field.
    fn scale(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q))
    }
}

/// A commutative field with exact, canonical elements.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;
    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self> {
        Rational::inv(self)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Rational::neg(self)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn scale(&self, q: &Rational) -> Self {
        Rational::mul(self, q)
    }
}

/// `(-1)^k` as a field element.
pub fn sign<F: Ring>(odd: bool) -> F {
    if odd {
        F::one().neg()
    } else {
        F::one()
    }
}
