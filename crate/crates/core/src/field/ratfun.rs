use std::fmt;

use super::{Field, Poly, Rational, Ring};
use crate::error::{Error, Result};

/// Reduced rational function `num / den` in one variable over `F`.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, and zero is `0/1`.
/// Any scalar factor lives in the numerator, so structural equality is
/// equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFun<F> {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::zero()));
        }
        if den.is_constant() {
            let c = den.coeff(0).inv()?;
            return Ok(Self::from_poly(num.scale(&c)));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let lead = den.leading().expect("nonzero").clone();
        if lead.is_one() {
            Ok(RatFun { num, den })
        } else {
            let li = lead.inv()?;
            Ok(RatFun { num: num.scale(&li), den: den.scale(&li) })
        }
    }

    pub fn from_poly(num: Poly<F>) -> Self {
        RatFun { num, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The variable of this level.
    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    /// `1 / (u - a)`.
    pub fn inv_linear(a: F) -> Self {
        RatFun { num: Poly::one(), den: Poly::linear(a) }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a constant of the coefficient field, if it is one.
    pub fn as_constant(&self) -> Option<F> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// `f(u + a)`.
    pub fn shift(&self, a: &F) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.shift(a));
        }
        // A translation keeps coprimality and monicity.
        RatFun { num: self.num.shift(a), den: self.den.shift(a) }
    }

    /// Substitutes an element of the coefficient field for the variable.
    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::EvaluationPole { point: x.to_string() });
        }
        self.num.eval(x).div(&d)
    }

    /// Substitutes an element of an extension field for the variable.
    pub fn eval_in<G: Field>(&self, x: &G, embed: impl Fn(&F) -> G) -> Result<G> {
        let d = self.den.eval_in(x, &embed);
        if d.is_zero() {
            return Err(Error::EvaluationPole { point: x.to_string() });
        }
        self.num.eval_in(x, &embed).div(&d)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<RatFun<G>> {
        RatFun::new(self.num.map(&f), self.den.map(&f))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = Ring::mul(&acc, self);
        }
        acc
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let rn = if negate { rhs.num.neg() } else { rhs.num.clone() };
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.add(&rn));
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return RatFun { num: rn, den: rhs.den.clone() };
        }
        if rhs.den.is_one() {
            return RatFun { num: self.num.add(&rn.mul(&self.den)), den: self.den.clone() };
        }
        if self.den.is_one() {
            return RatFun { num: self.num.mul(&rhs.den).add(&rn), den: rhs.den.clone() };
        }
        if self.den == rhs.den {
            return Self::new(self.num.add(&rn), self.den.clone()).expect("nonzero denominator");
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = self.num.mul(&rhs.den).add(&rn.mul(&self.den));
            // Coprime denominators: any common factor of num and the product is impossible.
            return Self::new_unchecked_monic(num, self.den.mul(&rhs.den));
        }
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = rhs.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&b).add(&rn.mul(&a));
        Self::new(num, a.mul(&rhs.den)).expect("nonzero denominator")
    }

    fn new_unchecked_monic(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self::from_poly(num);
        }
        RatFun { num, den }
    }
}

impl<F: Field> Field for RatFun<F> {
    fn inv(&self) -> Result<Self> {
        let lead = self.num.leading().ok_or(Error::DivisionByZero)?;
        let li = lead.inv()?;
        Ok(RatFun { num: self.den.scale(&li), den: self.num.scale(&li) })
    }
}

impl<F: Field> Ring for RatFun<F> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, false)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, true)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        if let Some(c) = self.as_constant() {
            return RatFun { num: rhs.num.scale(&c), den: rhs.den.clone() };
        }
        if let Some(c) = rhs.as_constant() {
            return RatFun { num: self.num.scale(&c), den: self.den.clone() };
        }
        // Cross-cancel so the product is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), rhs.den.div_exact(&g1).unwrap())
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        RatFun { num: n1.mul(&n2), den: d1.mul(&d2) }
    }

    fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(F::from_rational(q))
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        if q.is_one() {
            return self.clone();
        }
        let c = F::from_rational(q);
        RatFun { num: self.num.scale(&c), den: self.den.clone() }
    }
}

impl<F: Field> RatFun<F> {
    /// Formats with the given variable name.
    pub fn fmt_with(&self, var: &str) -> String {
        let n = self.num.fmt_with(var);
        if self.den.is_one() {
            return n;
        }
        let d = self.den.fmt_with(var);
        let wrap = |s: String, p: &Poly<F>| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }
}

impl<F: Field> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("u"))
    }
}

impl RatFun<Rational> {
    /// Builds a rational function from integer coefficient lists.
    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    /// Shift by a rational constant.
    pub fn shift_by(&self, a: &Rational) -> Self {
        self.shift(a)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RatFunRepr {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl serde::Serialize for RatFun<Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFunRepr { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for RatFun<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RatFunRepr::deserialize(d)?;
        RatFun::new(r.num, r.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFun<Rational> {
        RatFun::from_ints(n, d).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), rf(&[1, 1], &[1]));
        let z = rf(&[0], &[3, 1]);
        assert!(z.den().is_one() && z.num().is_zero());
        let f = rf(&[2, 2], &[0, 2]);
        assert_eq!(f.num(), &Poly::from_ints(&[1, 1]));
        assert_eq!(f.den(), &Poly::from_ints(&[0, 1]));
        // cross-multiplication against the input
        assert_eq!(f.num().mul(&Poly::from_ints(&[0, 2])), Poly::from_ints(&[2, 2]).mul(f.den()));
        assert_eq!(RatFun::from_ints(&[1], &[0]), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalize_is_idempotent() {
        let f = rf(&[6, -4, 2], &[-3, 3]);
        assert_eq!(RatFun::new(f.num().clone(), f.den().clone()).unwrap(), f);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(rf(&[1], &[0, 1]).shift(&q(1)), rf(&[1], &[1, 1]));
        assert_eq!(rf(&[1, 1], &[-1, 1]).shift(&q(-1)), rf(&[0, 1], &[-2, 1]));
        let f = rf(&[3, 0, 1], &[5, 2]);
        assert_eq!(f.shift(&q(7)).shift(&q(-7)), f);
    }

    #[test]
    fn arithmetic() {
        let a = rf(&[1], &[0, 1]);
        let b = rf(&[1], &[1, 1]);
        // 1/u - 1/(u+1) = 1/(u(u+1))
        assert_eq!(a.sub(&b), rf(&[1], &[0, 1, 1]));
        assert_eq!(a.mul(&a.inv().unwrap()), RatFun::one());
        assert_eq!(a.eval(&q(0)), Err(Error::EvaluationPole { point: "0".into() }));
        assert_eq!(b.eval(&q(1)).unwrap(), Rational::new(1, 2).unwrap());
    }

    #[test]
    fn serde_roundtrip() {
        let f = rf(&[2, 2], &[0, 2]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"num":["1","1"],"den":["0","1"]}"#);
        let g: RatFun<Rational> = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.to_string(), "(u + 1)/u");
    }
}
