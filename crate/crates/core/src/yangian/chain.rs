use std::collections::BTreeMap;

use super::YangianRep;
use crate::error::{Error, Result};
use crate::field::{Ring, Q1};
use crate::linalg::SparseVec;

/// An iterated coproduct `F_0 (x) F_1 (x) ... ` applied lazily, for tensor
/// products too large to materialize.
///
/// `t_ij(u)` acts as `sum t_{i a_1} (x) t_{a_1 a_2} (x) ... (x) t_{a_{r-1} j}`,
/// and the factor at site `s` picks up the Koszul sign of passing the
/// inputs at sites before `s`.
#[derive(Clone, Debug)]
pub struct TensorChain {
    factors: Vec<YangianRep>,
    strides: Vec<usize>,
}

impl TensorChain {
    pub fn new(factors: Vec<YangianRep>) -> Result<Self> {
        let first = factors.first().ok_or_else(|| Error::InvalidInput("empty tensor product".into()))?;
        if factors.iter().any(|f| f.aux() != first.aux()) {
            return Err(Error::InvalidInput("tensor factors over different algebras".into()));
        }
        let mut strides = vec![1; factors.len()];
        for s in (0..factors.len().saturating_sub(1)).rev() {
            strides[s] = strides[s + 1] * factors[s + 1].dim();
        }
        Ok(TensorChain { factors, strides })
    }

    pub fn factors(&self) -> &[YangianRep] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.strides[0] * self.factors[0].dim()
    }

    /// Flat index of a tuple of factor basis indices.
    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple.iter().zip(&self.strides).map(|(x, s)| x * s).sum()
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|s| {
                let x = idx / s;
                idx %= s;
                x
            })
            .collect()
    }

    /// Parity of a flat basis index.
    pub fn parity(&self, idx: usize) -> u8 {
        self.decode(idx).iter().zip(&self.factors).fold(0, |p, (x, f)| p ^ f.parities()[*x])
    }

    /// `t_ij(u) v`.
    pub fn apply(&self, i: usize, j: usize, v: &[(usize, Q1)]) -> SparseVec<Q1> {
        let n = self.factors[0].n();
        let aux = self.factors[0].aux();
        let last = self.factors.len() - 1;
        let mut out: BTreeMap<usize, Q1> = BTreeMap::new();
        for (idx, c) in v {
            let x = self.decode(*idx);
            // states: (current row index, partial output index) -> coefficient
            let mut states: BTreeMap<(usize, usize), Q1> = BTreeMap::new();
            states.insert((i, 0), c.clone());
            let mut prefix = 0u8;
            for (s, f) in self.factors.iter().enumerate() {
                let mut next: BTreeMap<(usize, usize), Q1> = BTreeMap::new();
                for ((a, partial), coef) in &states {
                    let targets: Vec<usize> = if s == last { vec![j] } else { (0..n).collect() };
                    for b in targets {
                        let col = f.t(*a, b).column(x[s]);
                        if col.is_empty() {
                            continue;
                        }
                        let odd = (aux.parity(*a) ^ aux.parity(b)) & prefix == 1;
                        for (y, g) in col {
                            let mut term = coef.mul(g);
                            if odd {
                                term = term.neg();
                            }
                            let key = (b, partial + y * self.strides[s]);
                            match next.get_mut(&key) {
                                Some(e) => *e = e.add(&term),
                                None => {
                                    next.insert(key, term);
                                }
                            }
                        }
                    }
                }
                next.retain(|_, e| !e.is_zero());
                states = next;
                prefix ^= f.parities()[x[s]];
            }
            for ((_, idx2), coef) in states {
                let e = out.entry(idx2).or_insert_with(Q1::zero);
                *e = e.add(&coef);
            }
        }
        out.into_iter().filter(|(_, e)| !e.is_zero()).collect()
    }

    /// The full representation on the tensor product.
    pub fn materialize(&self) -> Result<YangianRep> {
        let mut acc = self.factors[0].clone();
        for f in &self.factors[1..] {
            acc = acc.tensor(f)?;
        }
        Ok(acc)
    }
}
