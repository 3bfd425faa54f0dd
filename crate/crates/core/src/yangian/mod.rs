//! Representations of the Yangians: the family of operators `t_ij(u)` on a
//! graded module, R-matrices, and the exact identity checks.

pub mod gl;
pub mod osp;
mod chain;
mod rmatrix;
mod rtt;

pub use chain::TensorChain;
pub use rmatrix::{RKind, RMatrix};
pub use rtt::{rtt_check, rtt_residual_symbolic, RttReport};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{sign, Field, Poly, Rational, Ring, Q1};
use crate::linalg::{Accumulator, Matrix, SparseEchelon, SparseVec};
use crate::space::{kernel_over_field, SuperSpace};

/// The images `t_ij(u)` of the generating series on a graded module, as
/// matrices with entries rational in `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YangianRep {
    aux: SuperSpace,
    parities: Vec<u8>,
    t: Vec<Matrix<Q1>>,
}

impl YangianRep {
    /// `t` is indexed by `i * N + j`.
    pub fn new(aux: SuperSpace, parities: Vec<u8>, t: Vec<Matrix<Q1>>) -> Result<Self> {
        let n = aux.dim();
        let m = parities.len();
        if t.len() != n * n || t.iter().any(|x| x.nrows() != m || x.ncols() != m) {
            return Err(Error::InvalidInput("generator matrices do not match the module".into()));
        }
        Ok(YangianRep { aux, parities, t })
    }

    /// `t_ij(u) = delta_ij` on a module with the given parities.
    pub fn trivial(aux: SuperSpace, parities: Vec<u8>) -> Self {
        let n = aux.dim();
        let m = parities.len();
        let t = (0..n * n)
            .map(|k| if k / n == k % n { Matrix::identity(m) } else { Matrix::zeros(m, m) })
            .collect();
        YangianRep { aux, parities, t }
    }

    /// Reads `t_ij(u)` off an operator on `C^N (x) M` with the auxiliary
    /// factor first: `T(e_j (x) x) = sum_i e_i (x) t_ij(u) x`.
    pub fn from_aux_operator(aux: SuperSpace, parities: Vec<u8>, op: &Matrix<Q1>) -> Result<Self> {
        let n = aux.dim();
        let m = parities.len();
        if op.nrows() != n * m || op.ncols() != n * m {
            return Err(Error::InvalidInput("operator does not act on C^N (x) M".into()));
        }
        let mut cols: Vec<Vec<SparseVec<Q1>>> = vec![vec![Vec::new(); m]; n * n];
        for (col, entries) in op.columns().iter().enumerate() {
            let (j, x) = (col / m, col % m);
            for (row, f) in entries {
                let (i, y) = (row / m, row % m);
                cols[i * n + j][x].push((y, f.clone()));
            }
        }
        let t = cols.into_iter().map(|c| Matrix::from_columns(m, c)).collect();
        Ok(YangianRep { aux, parities, t })
    }

    /// Inverse of [`YangianRep::from_aux_operator`].
    pub fn to_aux_operator(&self) -> Matrix<Q1> {
        let n = self.n();
        let m = self.dim();
        let mut cols = vec![Vec::new(); n * m];
        for i in 0..n {
            for j in 0..n {
                for (x, col) in self.t(i, j).columns().iter().enumerate() {
                    for (y, f) in col {
                        cols[j * m + x].push((i * m + y, f.clone()));
                    }
                }
            }
        }
        for c in &mut cols {
            c.sort_by_key(|e| e.0);
        }
        Matrix::from_columns(n * m, cols)
    }

    pub fn aux(&self) -> &SuperSpace {
        &self.aux
    }

    /// Size of the generator matrix.
    pub fn n(&self) -> usize {
        self.aux.dim()
    }

    /// Dimension of the module.
    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    pub fn t(&self, i: usize, j: usize) -> &Matrix<Q1> {
        &self.t[i * self.n() + j]
    }

    pub fn generators(&self) -> &[Matrix<Q1>] {
        &self.t
    }

    /// The module twisted by `t_ij(u) -> t_ij(u + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        self.map_entries(|f| f.shift_by(a))
    }

    /// The module twisted by `t_ij(u) -> f(u) t_ij(u)`.
    pub fn scale_by(&self, f: &Q1) -> Self {
        self.map_entries(|g| g.mul(f))
    }

    fn map_entries(&self, f: impl Fn(&Q1) -> Q1) -> Self {
        YangianRep { aux: self.aux.clone(), parities: self.parities.clone(), t: self.t.iter().map(|m| m.map(&f)).collect() }
    }

    /// Coproduct `t_ij -> sum_k t_ik (x) t_kj` on `self (x) other`, where
    /// `t_kj` passes the first factor with the Koszul sign.
    pub fn tensor(&self, other: &YangianRep) -> Result<Self> {
        if self.aux != other.aux {
            return Err(Error::InvalidInput("tensor factors over different algebras".into()));
        }
        let n = self.n();
        let (m1, m2) = (self.dim(), other.dim());
        let parities: Vec<u8> =
            self.parities.iter().flat_map(|&p| other.parities.iter().map(move |&q| p ^ q)).collect();
        let mut t = Vec::with_capacity(n * n);
        let mut acc = Accumulator::new(m1 * m2);
        for i in 0..n {
            for j in 0..n {
                let mut cols = Vec::with_capacity(m1 * m2);
                for x in 0..m1 {
                    for y in 0..m2 {
                        for k in 0..n {
                            let a = self.t(i, k).column(x);
                            let b = other.t(k, j).column(y);
                            if a.is_empty() || b.is_empty() {
                                continue;
                            }
                            let odd = (self.aux.parity(k) ^ self.aux.parity(j)) & self.parities[x] == 1;
                            for (x2, f) in a {
                                let f = if odd { f.neg() } else { f.clone() };
                                for (y2, g) in b {
                                    acc.add_owned(x2 * m2 + y2, f.mul(g));
                                }
                            }
                        }
                        cols.push(acc.take());
                    }
                }
                t.push(Matrix::from_columns(m1 * m2, cols));
            }
        }
        Ok(YangianRep { aux: self.aux.clone(), parities, t })
    }

    /// Numeric matrices `t_ij(x)`.
    pub fn at(&self, x: &Rational) -> Result<Vec<Matrix<Rational>>> {
        self.t.iter().map(|m| m.try_map(|f| f.eval(x))).collect()
    }

    /// Lowest common denominator of all entries.
    pub fn denominator(&self) -> Poly<Rational> {
        let mut l = Poly::one();
        for m in &self.t {
            for (_, _, f) in m.entries() {
                if !f.den().is_one() {
                    let g = l.gcd(f.den());
                    l = l.mul(&f.den().div_exact(&g).expect("gcd divides"));
                }
            }
        }
        l
    }

    /// Whether every `t_ij(u)` tends to `delta_ij` as `u -> infinity`.
    pub fn is_normalized_at_infinity(&self) -> bool {
        let n = self.n();
        self.t.iter().enumerate().all(|(k, m)| {
            let diag = k / n == k % n;
            let limit_ok = m.entries().all(|(r, c, f)| {
                let (dn, dd) = (f.num().degree().unwrap_or(0), f.den().degree().unwrap_or(0));
                if dn > dd {
                    return false;
                }
                let lim = if dn == dd { f.num().leading().cloned().unwrap_or(Rational::ZERO) } else { Rational::ZERO };
                lim == if diag && r == c { Rational::ONE } else { Rational::ZERO }
            });
            // every diagonal entry of a diagonal block must be present
            limit_ok && (!diag || (0..m.ncols()).all(|c| !m.get(c, c).is_zero()))
        })
    }

    /// Applies `t_ij(u)` to a vector with entries rational in `u`.
    pub fn apply(&self, i: usize, j: usize, v: &[(usize, Q1)]) -> SparseVec<Q1> {
        self.t(i, j).apply(v)
    }

    /// The module structure on an invariant subspace, in the basis of the
    /// echelon rows. Fails if some `t_ij(u)` leaves the subspace.
    pub fn restrict(&self, sub: &SparseEchelon<Rational>) -> Result<Self> {
        if sub.dim() != self.dim() {
            return Err(Error::InvalidInput("subspace of a different module".into()));
        }
        let parities = sub
            .rows()
            .iter()
            .map(|r| {
                let p = self.parities[r[0].0];
                if r.iter().all(|(k, _)| self.parities[*k] == p) {
                    Ok(p)
                } else {
                    Err(Error::InvalidInput("subspace basis is not homogeneous".into()))
                }
            })
            .collect::<Result<Vec<u8>>>()?;
        let lifted: Vec<SparseVec<Q1>> =
            sub.rows().iter().map(|r| r.iter().map(|(k, c)| (*k, Q1::from_rational(c))).collect()).collect();
        let n = self.n();
        let mut t = Vec::with_capacity(n * n);
        let mut acc = Accumulator::new(self.dim());
        for i in 0..n {
            for j in 0..n {
                let mut cols = Vec::with_capacity(lifted.len());
                for (k, b) in lifted.iter().enumerate() {
                    let img = self.t(i, j).apply_with(&mut acc, b);
                    let coords = sub.coordinates(&img, Q1::from_rational).ok_or_else(|| {
                        Error::VerificationFailure(format!(
                            "t_{}{}(u) maps basis vector {k} outside the subspace",
                            self.aux.label(i),
                            self.aux.label(j)
                        ))
                    })?;
                    cols.push(coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
                }
                t.push(Matrix::from_columns(lifted.len(), cols));
            }
        }
        Ok(YangianRep { aux: self.aux.clone(), parities, t })
    }

    /// The module twisted by `t_ij(u) -> t_ji(-u) (-1)^{p(i)p(j)+p(i)}`.
    pub fn transpose_twist(&self) -> Self {
        let n = self.n();
        let mut t = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (pi, pj) = (self.aux.parity(i), self.aux.parity(j));
                let s: Q1 = sign((pi * pj + pi) % 2 == 1);
                t.push(self.t(j, i).map(|f| reflect(f).mul(&s)));
            }
        }
        YangianRep { aux: self.aux.clone(), parities: self.parities.clone(), t }
    }

    /// Highest vector and weight: the common kernel of `t_ij(u)`, `i < j`,
    /// must be one-dimensional.
    pub fn highest_weight(&self) -> Result<HighestWeight> {
        let n = self.n();
        let upper: Vec<&Matrix<Q1>> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.t(i, j)).collect();
        let kernel = if upper.is_empty() {
            identity_basis(self.dim())
        } else {
            kernel_over_field(&upper)?
        };
        if kernel.len() != 1 {
            return Err(Error::NonCyclic { dim: kernel.len() });
        }
        let xi = kernel.into_iter().next().expect("one vector");
        let weights = self.eigenvalues(&xi)?;
        Ok(HighestWeight { vector: xi, weights })
    }

    /// Eigenvalues of `t_ii(u)` on `xi`, verified exactly.
    pub fn eigenvalues(&self, xi: &[Rational]) -> Result<Vec<Q1>> {
        let v: SparseVec<Q1> =
            xi.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, Q1::from_rational(c))).collect();
        (0..self.n()).map(|i| eigenvalue(&self.t(i, i).apply(&v), &v, &self.aux, i)).collect()
    }
}

fn identity_basis(m: usize) -> Vec<Vec<Rational>> {
    (0..m)
        .map(|k| {
            let mut v = vec![Rational::ZERO; m];
            v[k] = Rational::ONE;
            v
        })
        .collect()
}

/// The scalar `c` with `image = c * v`, or a verification failure.
pub(crate) fn eigenvalue(image: &[(usize, Q1)], v: &[(usize, Q1)], aux: &SuperSpace, i: usize) -> Result<Q1> {
    let (p, lead) = v.first().ok_or_else(|| Error::InvalidInput("zero vector".into()))?;
    let at_p = image.iter().find(|(k, _)| k == p).map(|(_, c)| c.clone()).unwrap_or_else(Q1::zero);
    let c = at_p.div(lead)?;
    let expect: SparseVec<Q1> = v.iter().map(|(k, x)| (*k, x.mul(&c))).filter(|(_, x)| !x.is_zero()).collect();
    if expect.as_slice() != image {
        return Err(Error::VerificationFailure(format!(
            "vector is not an eigenvector of t_{0}{0}(u)",
            aux.label(i)
        )));
    }
    Ok(c)
}

/// `f(-u)`.
pub fn reflect(f: &Q1) -> Q1 {
    let flip = |p: &Poly<Rational>| {
        Poly::from_coeffs(
            p.coeffs().iter().enumerate().map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() }).collect(),
        )
    };
    Q1::new(flip(f.num()), flip(f.den())).expect("nonzero denominator")
}

/// A highest vector with the eigenvalues of `t_ii(u)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HighestWeight {
    pub vector: Vec<Rational>,
    pub weights: Vec<Q1>,
}

/// `1 + a u^{-1}`.
pub fn one_plus(a: i64) -> Q1 {
    Q1::from_ints(&[a, 1], &[0, 1]).expect("nonzero denominator")
}
