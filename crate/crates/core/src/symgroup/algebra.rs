use std::collections::BTreeMap;
use std::fmt;

use super::Perm;
use crate::field::{Rational, Ring};

/// An element of the group algebra of `S_d` with coefficients in `R`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgElem<R> {
    d: usize,
    terms: BTreeMap<Perm, R>,
}

impl<R: Ring> GroupAlgElem<R> {
    pub fn zero(d: usize) -> Self {
        GroupAlgElem { d, terms: BTreeMap::new() }
    }

    pub fn identity(d: usize) -> Self {
        Self::basis(Perm::identity(d))
    }

    pub fn basis(s: Perm) -> Self {
        Self::term(s, R::one())
    }

    pub fn term(s: Perm, c: R) -> Self {
        let mut e = Self::zero(s.degree());
        e.add_term(s, c);
        e
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<Perm, R> {
        &self.terms
    }

    pub fn coeff(&self, s: &Perm) -> R {
        self.terms.get(s).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, s: Perm, c: R) {
        assert_eq!(s.degree(), self.d, "permutation degree mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(s).or_insert_with(R::zero);
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.d, rhs.d, "degree mismatch in group algebra product");
        let mut acc: BTreeMap<Perm, R> = BTreeMap::new();
        for (s, a) in &self.terms {
            for (t, b) in &rhs.terms {
                let slot = acc.entry(s.compose(t)).or_insert_with(R::zero);
                *slot = slot.add(&a.mul(b));
            }
        }
        acc.retain(|_, v| !v.is_zero());
        GroupAlgElem { d: self.d, terms: acc }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> GroupAlgElem<S> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(s, c)| {
                let v = f(c);
                (!v.is_zero()).then(|| (s.clone(), v))
            })
            .collect();
        GroupAlgElem { d: self.d, terms }
    }

    /// Embeds `S_d` into `S_e` for `e >= d`.
    pub fn extend(&self, e: usize) -> Self {
        GroupAlgElem { d: e, terms: self.terms.iter().map(|(s, c)| (s.extend(e), c.clone())).collect() }
    }
}

impl<R: Ring> fmt::Display for GroupAlgElem<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c})*[{s}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl serde::Serialize for GroupAlgElem<Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<String, String> = self.terms.iter().map(|(p, c)| (p.to_string(), c.to_string())).collect();
        m.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_is_composition() {
        let t = GroupAlgElem::<Rational>::basis(Perm::transposition(2, 0, 1));
        let one = GroupAlgElem::identity(2);
        assert_eq!(t.mul(&t), one);
        let h = one.add(&t).scale(&Rational::new(1, 2).unwrap());
        assert_eq!(h.mul(&h), h);
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"{"1,2":"1/2","2,1":"1/2"}"#);
    }
}
