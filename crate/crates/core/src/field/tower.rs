//! Towers `Q(u_d)(u_{d-1})...(u_1)` of univariate fraction fields.
//!
//! Level `k` is `RatFun` over level `k-1`, so the outermost variable is the
//! variable of the outer `RatFun`. Variables are numbered from the top:
//! variable 0 is the outermost one.

use super::{Field, RatFun, Rational};
use crate::error::{Error, Result};

pub type Q1 = RatFun<Rational>;
pub type Q2 = RatFun<Q1>;
pub type Q3 = RatFun<Q2>;
pub type Q4 = RatFun<Q3>;
pub type Q5 = RatFun<Q4>;
pub type Q6 = RatFun<Q5>;

/// A field in the tower over the rationals.
pub trait TowerLevel: Field {
    /// Number of adjoined variables.
    const DEPTH: usize;

    /// The field obtained by substituting for the outermost variable.
    type Lower: TowerLevel;

    /// Substitutes a rational value for the outermost variable.
    fn substitute_outer(&self, value: &Rational) -> Result<Self::Lower>;

    /// Variable `k`, counted from the outermost.
    fn variable(k: usize) -> Result<Self>;

    /// Evaluates at a rational point, outermost variable first.
    fn evaluate(&self, point: &[Rational]) -> Result<Rational>;
}

impl TowerLevel for Rational {
    const DEPTH: usize = 0;
    type Lower = Rational;

    fn substitute_outer(&self, _: &Rational) -> Result<Rational> {
        Err(Error::InvalidInput("no variable left to substitute".into()))
    }

    fn variable(k: usize) -> Result<Self> {
        Err(Error::IndexOutOfRange(format!("variable {k} of a depth-0 tower")))
    }

    fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if !point.is_empty() {
            return Err(Error::InvalidInput("too many evaluation values".into()));
        }
        Ok(self.clone())
    }
}

impl<F: TowerLevel> TowerLevel for RatFun<F> {
    const DEPTH: usize = F::DEPTH + 1;
    type Lower = F;

    fn substitute_outer(&self, value: &Rational) -> Result<F> {
        self.substitute_top(&F::from_rational(value))
    }

    fn variable(k: usize) -> Result<Self> {
        if k == 0 {
            Ok(Self::x())
        } else {
            Ok(Self::constant(F::variable(k - 1)?))
        }
    }

    fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let (first, rest) = point
            .split_first()
            .ok_or_else(|| Error::InvalidInput("too few evaluation values".into()))?;
        self.substitute_outer(first)?.evaluate(rest)
    }
}

impl<F: Field> RatFun<F> {
    /// Substitutes a lower-level element for the outermost variable.
    ///
    /// The representation is already reduced, so a vanishing denominator is
    /// a genuine pole.
    pub fn substitute_top(&self, value: &F) -> Result<F> {
        self.eval(value)
    }

    /// Embeds an element of the level below.
    pub fn lift(c: F) -> Self {
        Self::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Poly, Ring};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn substitute_examples() {
        let u1 = Q2::variable(0).unwrap();
        let u2 = Q2::variable(1).unwrap();
        let diff = u1.sub(&u2);
        let f = diff.inv().unwrap();
        let g = f.substitute_top(&Q1::zero()).unwrap();
        assert_eq!(g, Q1::x().inv().unwrap().neg());

        let h = diff.div(&diff).unwrap();
        for c in -2..3 {
            assert_eq!(h.substitute_top(&Q1::from_int(c)).unwrap(), Q1::one());
        }
        // The diagonal u1 := u2 is a pole of 1/(u1-u2).
        assert!(matches!(f.substitute_top(&Q1::x()), Err(Error::EvaluationPole { .. })));
    }

    #[test]
    fn evaluate_points() {
        // (u1 + 2 u2) / (u1 - u3)
        let u = |k| Q3::variable(k).unwrap();
        let f = u(0).add(&u(1).scale(&q(2))).div(&u(0).sub(&u(2))).unwrap();
        assert_eq!(f.evaluate(&[q(1), q(2), q(3)]).unwrap(), Rational::new(-5, 2).unwrap());
        assert!(f.evaluate(&[q(1), q(2), q(1)]).is_err());
        assert_eq!(Q3::DEPTH, 3);
    }

    #[test]
    fn composite_substitution() {
        // 1/(u - v) with v in the inner level
        let base = Q1::inv_linear(Rational::ZERO);
        let uv = Q2::x().sub(&Q2::lift(Q1::x()));
        let f = base.eval_in(&uv, |c| Q2::from_rational(c)).unwrap();
        assert_eq!(f.mul(&uv), Q2::one());
        let p: Poly<Q1> = Poly::x();
        assert_eq!(p.degree(), Some(1));
    }
}
