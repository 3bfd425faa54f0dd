use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{big_gcd, Poly, Rational};

/// `p = remainder * prod (u - root)^mult`, with `remainder` free of rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootFactorization {
    /// Distinct roots in increasing order with multiplicities.
    pub roots: Vec<(Rational, usize)>,
    pub remainder: Poly<Rational>,
}

impl RootFactorization {
    /// Multiplies the factors back together.
    pub fn expand(&self) -> Poly<Rational> {
        let mut acc = self.remainder.clone();
        for (r, m) in &self.roots {
            acc = acc.mul(&Poly::linear(r.clone()).pow(*m as u32));
        }
        acc
    }
}

/// Primitive integer polynomial proportional to `p`.
fn integer_coeffs(p: &Poly<Rational>) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        let d = c.denom();
        l = &l / big_gcd(&l, &d) * d;
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| big_gcd(&g, c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            let other = &n / &k;
            if other != k {
                large.push(other);
            }
            small.push(k.clone());
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Finds all rational roots of `p` with multiplicity by the rational-root
/// theorem and trial division. The zero polynomial has no roots and is its
/// own remainder.
pub fn rational_roots(p: &Poly<Rational>) -> RootFactorization {
    let mut rest = p.clone();
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    if rest.is_zero() {
        return RootFactorization { roots, remainder: rest };
    }
    let mut zero_mult = 0;
    while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
        rest = Poly::from_coeffs(rest.coeffs()[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::ZERO, zero_mult));
    }
    if rest.degree().unwrap_or(0) > 0 {
        let ints = integer_coeffs(&rest);
        let nums = positive_divisors(&ints[0]);
        let dens = positive_divisors(ints.last().expect("nonzero"));
        let mut candidates = Vec::new();
        for a in &nums {
            for b in &dens {
                let r = Rational::from_bigints(a.clone(), b.clone()).expect("positive divisor");
                candidates.push(r.neg());
                candidates.push(r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for r in candidates {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let lin = Poly::linear(r.clone());
            let mut mult = 0;
            loop {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let (quot, rem) = rest.div_rem(&lin).expect("monic divisor");
                if !rem.is_zero() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    RootFactorization { roots, remainder: rest }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn examples() {
        let f = rational_roots(&Poly::from_ints(&[2, -3, 1]));
        assert_eq!(f.roots, vec![(q(1), 1), (q(2), 1)]);
        assert!(f.remainder.is_one());

        let g = Poly::from_ints(&[1, 0, 1]);
        let f = rational_roots(&g);
        assert!(f.roots.is_empty());
        assert_eq!(f.remainder, g);

        let cube = Poly::linear(q(5)).pow(3);
        let f = rational_roots(&cube);
        assert_eq!(f.roots, vec![(q(5), 3)]);
        assert!(f.remainder.is_one());
    }

    #[test]
    fn fractional_and_zero_roots() {
        // 6u^2 (2u - 1)(3u + 2)(u^2 + 2)
        let p = Poly::from_ints(&[0, 0, 6])
            .mul(&Poly::from_ints(&[-1, 2]))
            .mul(&Poly::from_ints(&[2, 3]))
            .mul(&Poly::from_ints(&[2, 0, 1]));
        let f = rational_roots(&p);
        let half = Rational::new(1, 2).unwrap();
        let mtwothirds = Rational::new(-2, 3).unwrap();
        assert_eq!(f.roots, vec![(mtwothirds, 1), (q(0), 2), (half, 1)]);
        assert_eq!(f.remainder, Poly::from_ints(&[72, 0, 36]));
        assert_eq!(f.expand(), p);
    }
}
