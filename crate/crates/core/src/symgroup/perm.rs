use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{0, ..., d-1}` in one-line notation: `s(k) = images[k]`.
///
/// Products compose right to left: `(s * t)(k) = s(t(k))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Perm(images))
    }

    /// The transposition of `a` and `b` (0-based).
    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..d).collect();
        v.swap(a, b);
        Perm(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, k: usize) -> usize {
        self.0[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn compose(&self, rhs: &Perm) -> Perm {
        Perm(rhs.0.iter().map(|&k| self.0[k]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (k, &s) in self.0.iter().enumerate() {
            v[s] = k;
        }
        Perm(v)
    }

    /// Pairs `k < l` with `s(k) > s(l)`.
    pub fn inversions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let d = self.0.len();
        (0..d).flat_map(move |k| (k + 1..d).filter(move |&l| self.0[k] > self.0[l]).map(move |l| (k, l)))
    }

    pub fn is_odd(&self) -> bool {
        self.inversions().count() % 2 == 1
    }

    /// Extends to a permutation of a larger set fixing the new points.
    pub fn extend(&self, d: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.0.len()..d);
        Perm(v)
    }

    /// All permutations of `d` points in lexicographic order.
    pub fn all(d: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..d).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }
}

impl fmt::Display for Perm {
    /// 1-based one-line notation, comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .ok()
                    .and_then(|v| v.checked_sub(1))
                    .ok_or_else(|| Error::InvalidInput(format!("bad permutation entry {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_inverse() {
        let s: Perm = "2,3,1".parse().unwrap();
        let t = Perm::transposition(3, 0, 1);
        assert_eq!(s.compose(&t).to_string(), "3,2,1");
        assert!(s.compose(&s.inverse()).is_identity());
        assert!(!s.is_odd());
        assert!(t.is_odd());
    }

    #[test]
    fn enumerates_all() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Perm::all(0).len(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!("1,1".parse::<Perm>().is_err());
        assert!("0,1".parse::<Perm>().is_err());
        assert!("1,x".parse::<Perm>().is_err());
    }
}
