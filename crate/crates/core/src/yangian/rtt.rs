//! The RTT relation `R(u-v) T_1(u) T_2(v) = T_2(v) T_1(u) R(u-v)`.
//!
//! Blockwise, with `s(x, y, z) = (-1)^{(p(x)+p(y)) p(z)}`, the `((i,k),(j,l))`
//! blocks of the two sides are
//!
//! ```text
//! sum_ab R[(ik),(ab)] s(a,j,b) t_aj(u) t_bl(v)
//! sum_ab s(i,a,b) t_kb(v) t_ia(u) R[(ab),(jl)]
//! ```
//!
//! After multiplying by `D(u) D(v) (u-v)(u-v-kappa)`, where `D` is the common
//! denominator of the `t_ij`, every entry of the difference is a polynomial
//! of degree at most `B` in each of `u` and `v`. It vanishes identically iff
//! it vanishes on a grid of `(B+1) x (B+1)` points avoiding the zeros of the
//! multiplier, so the exact check runs over such a grid.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::{RMatrix, YangianRep};
use crate::error::{Error, Result};
use crate::field::{Rational, Ring, TowerLevel, Q1, Q2};
use crate::linalg::Matrix;
use crate::space::SuperSpace;

/// Outcome of the exact RTT check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RttReport {
    /// Degree bound of the cleared residual in each variable.
    pub degree_bound: usize,
    /// Number of `(u, v)` pairs checked.
    pub points: usize,
    pub holds: bool,
    /// First failing block and sample point, if any.
    pub witness: Option<String>,
}

/// Checks the RTT relation exactly.
pub fn rtt_check(rep: &YangianRep, r: &RMatrix) -> Result<RttReport> {
    if rep.aux() != r.space() {
        return Err(Error::InvalidInput("R-matrix and representation use different spaces".into()));
    }
    let den = rep.denominator();
    let excess = rep
        .generators()
        .iter()
        .flat_map(|m| m.entries().map(|(_, _, f)| f.num().degree().unwrap_or(0).saturating_sub(f.den().degree().unwrap_or(0))))
        .max()
        .unwrap_or(0);
    let bound = den.degree().unwrap_or(0) + excess + 2;
    let pick = |offset: Rational, step: i64| -> Vec<Rational> {
        (0..)
            .map(|k| offset.add(&Rational::from_int(step * k)))
            .filter(|x| !den.eval(x).is_zero())
            .take(bound + 1)
            .collect()
    };
    // u - v = k + l + 5/6 is never an integer, so it avoids 0 and kappa
    let us = pick(Rational::new(1, 2)?, 1);
    let vs = pick(Rational::new(-1, 3)?, -1);
    let tu = us.iter().map(|x| Blocks::at(rep, x)).collect::<Result<Vec<_>>>()?;
    let tv = vs.iter().map(|x| Blocks::at(rep, x)).collect::<Result<Vec<_>>>()?;
    let signs = SignTable::new(rep.aux());
    let mut points = 0;
    for (a, u) in us.iter().zip(&tu) {
        for (b, v) in vs.iter().zip(&tv) {
            let x = a.sub(b);
            let rx = Blocks::cleared(&r.at(&x)?);
            points += 1;
            let res = match (&u.ints, &v.ints, &rx.ints) {
                (Some(iu), Some(iv), Some(ir)) => {
                    compare_point(rep.n(), rep.dim(), iu, iv, ir, &signs)
                }
                _ => None,
            };
            let res = match res {
                Some(r) => r,
                None => compare_point(rep.n(), rep.dim(), &u.rats, &v.rats, &rx.rats, &signs)
                    .expect("rational arithmetic does not overflow"),
            };
            if let Some(w) = res {
                return Ok(RttReport {
                    degree_bound: bound,
                    points,
                    holds: false,
                    witness: Some(format!("{w} at u = {a}, v = {b}")),
                });
            }
        }
    }
    Ok(RttReport { degree_bound: bound, points, holds: true, witness: None })
}

/// Exact arithmetic usable by the point check. `i128` reports overflow.
trait Exact: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `self += a * b`.
    fn mul_add(&mut self, a: &Self, b: &Self) -> Option<()>;
    fn neg(&self) -> Self;
    fn mul(&self, b: &Self) -> Option<Self>;
}

impl Exact for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_add(&mut self, a: &Self, b: &Self) -> Option<()> {
        *self = self.checked_add(a.checked_mul(*b)?)?;
        Some(())
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, b: &Self) -> Option<Self> {
        self.checked_mul(*b)
    }
}

impl Exact for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn mul_add(&mut self, a: &Self, b: &Self) -> Option<()> {
        *self = Rational::add(self, &Rational::mul(a, b));
        Some(())
    }
    fn neg(&self) -> Self {
        Rational::neg(self)
    }
    fn mul(&self, b: &Self) -> Option<Self> {
        Some(Rational::mul(self, b))
    }
}

type Cols<T> = Vec<Vec<(u32, T)>>;

/// Numeric matrices as column lists, exactly and cleared to integers when
/// the common denominator fits.
struct Blocks {
    rats: Vec<Cols<Rational>>,
    ints: Option<Vec<Cols<i128>>>,
}

impl Blocks {
    fn at(rep: &YangianRep, x: &Rational) -> Result<Self> {
        Ok(Self::from_matrices(&rep.at(x)?))
    }

    fn cleared(m: &Matrix<Rational>) -> Self {
        Self::from_matrices(std::slice::from_ref(m))
    }

    fn from_matrices(ms: &[Matrix<Rational>]) -> Self {
        let rats: Vec<Cols<Rational>> = ms
            .iter()
            .map(|m| m.columns().iter().map(|c| c.iter().map(|(i, x)| (*i as u32, x.clone())).collect()).collect())
            .collect();
        let mut l = BigInt::one();
        for m in ms {
            for (_, _, x) in m.entries() {
                l = l.lcm(&x.denom());
            }
        }
        let ints = rats
            .iter()
            .map(|b| {
                b.iter()
                    .map(|c| {
                        c.iter()
                            .map(|(i, x)| (x.numer() * (&l / x.denom())).to_i128().map(|v| (*i, v)))
                            .collect::<Option<Vec<_>>>()
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>();
        Blocks { rats, ints }
    }
}

struct SignTable {
    parity: Vec<u8>,
}

impl SignTable {
    fn new(space: &SuperSpace) -> Self {
        SignTable { parity: (0..space.dim()).map(|i| space.parity(i)).collect() }
    }

    /// `s(x, y, z)` is odd.
    fn odd(&self, x: usize, y: usize, z: usize) -> bool {
        (self.parity[x] ^ self.parity[y]) & self.parity[z] == 1
    }
}

struct Acc<T> {
    slots: Vec<T>,
    touched: Vec<u32>,
    mark: Vec<bool>,
}

impl<T: Exact> Acc<T> {
    fn new(n: usize) -> Self {
        Acc { slots: vec![T::zero(); n], touched: Vec::new(), mark: vec![false; n] }
    }

    fn mul_add(&mut self, i: u32, a: &T, b: &T) -> Option<()> {
        let k = i as usize;
        if !self.mark[k] {
            self.mark[k] = true;
            self.touched.push(i);
        }
        self.slots[k].mul_add(a, b)
    }

    fn take(&mut self) -> Vec<(u32, T)> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let k = i as usize;
            self.mark[k] = false;
            let v = std::mem::replace(&mut self.slots[k], T::zero());
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

fn matvec<T: Exact>(acc: &mut Acc<T>, m: &Cols<T>, v: &[(u32, T)], c: &T) -> Option<()> {
    for (k, x) in v {
        let cx = x.mul(c)?;
        for (i, a) in &m[*k as usize] {
            acc.mul_add(*i, a, &cx)?;
        }
    }
    Some(())
}

/// Compares both sides at one point. `None` on overflow, `Some(None)` when
/// equal, `Some(Some(witness))` otherwise.
fn compare_point<T: Exact>(
    n: usize,
    m: usize,
    tu: &[Cols<T>],
    tv: &[Cols<T>],
    r: &[Cols<T>],
    signs: &SignTable,
) -> Option<Option<String>> {
    let r = &r[0];
    // rows of R for the left side
    let mut r_rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); n * n];
    for (col, entries) in r.iter().enumerate() {
        for (row, x) in entries {
            r_rows[*row as usize].push((col, x.clone()));
        }
    }
    let mut lhs_acc = Acc::new(m);
    let mut tmp_acc = Acc::new(m);
    let mut rhs_acc: Vec<Acc<T>> = (0..n * n).map(|_| Acc::new(m)).collect();
    for j in 0..n {
        for l in 0..n {
            let jl = j * n + l;
            for col in 0..m {
                // y[a][b] = t_aj(u) t_bl(v) e_col, filled on demand
                let w: Vec<&Vec<(u32, T)>> = (0..n).map(|b| &tv[b * n + l][col]).collect();
                let mut y: Vec<Option<Vec<(u32, T)>>> = vec![None; n * n];
                let mut lhs: Vec<Vec<(u32, T)>> = Vec::with_capacity(n * n);
                for row in &r_rows {
                    for &(ab, ref coef) in row {
                        let (a, b) = (ab / n, ab % n);
                        if y[ab].is_none() {
                            y[ab] = Some(apply_unit(&mut tmp_acc, &tu[a * n + j], w[b])?);
                        }
                        let c = if signs.odd(a, j, b) { coef.neg() } else { coef.clone() };
                        for (i, x) in y[ab].as_ref().expect("filled") {
                            lhs_acc.mul_add(*i, x, &c)?;
                        }
                    }
                    lhs.push(lhs_acc.take());
                }
                // right side: sum over the column (jl) of R
                for (ab, coef) in &r[jl] {
                    let ab = *ab as usize;
                    let (a, b) = (ab / n, ab % n);
                    for i in 0..n {
                        let z = &tu[i * n + a][col];
                        if z.is_empty() {
                            continue;
                        }
                        let c = if signs.odd(i, a, b) { coef.neg() } else { coef.clone() };
                        for k in 0..n {
                            matvec(&mut rhs_acc[i * n + k], &tv[k * n + b], z, &c)?;
                        }
                    }
                }
                for (ik, left) in lhs.into_iter().enumerate() {
                    let right = rhs_acc[ik].take();
                    if left != right {
                        let (i, k) = (ik / n, ik % n);
                        return Some(Some(format!(
                            "block ((i,k),(j,l)) = (({i},{k}),({j},{l})), column {col}"
                        )));
                    }
                }
            }
        }
    }
    Some(None)
}

/// `m * v` for an unscaled vector.
fn apply_unit<T: Exact>(acc: &mut Acc<T>, m: &Cols<T>, v: &[(u32, T)]) -> Option<Vec<(u32, T)>> {
    for (k, x) in v {
        for (i, a) in &m[*k as usize] {
            acc.mul_add(*i, a, x)?;
        }
    }
    Some(acc.take())
}

/// The full residual `R T_1 T_2 - T_2 T_1 R` on `C^N (x) C^N (x) M` over the
/// two-variable field. Only practical for small modules.
pub fn rtt_residual_symbolic(rep: &YangianRep, r: &RMatrix) -> Result<Matrix<Q2>> {
    let n = rep.n();
    let m = rep.dim();
    let space = rep.aux();
    let u = Q2::variable(0)?;
    let v = Q2::variable(1)?;
    let in_u = |f: &Q1| f.map(|c| Q1::from_rational(c)).expect("nonzero denominator");
    let in_v = |f: &Q1| Q2::constant(f.clone());
    let dim = n * n * m;
    let idx = |a: usize, b: usize, x: usize| (a * n + b) * m + x;
    let odd = |x: usize, y: usize, z: usize| (space.parity(x) ^ space.parity(y)) & space.parity(z) == 1;
    let mut t1 = vec![Vec::new(); dim];
    let mut t2 = vec![Vec::new(); dim];
    for i in 0..n {
        for j in 0..n {
            for (x, col) in rep.t(i, j).columns().iter().enumerate() {
                for (y, f) in col {
                    let fu = in_u(f);
                    let fv = in_v(f);
                    for b in 0..n {
                        let c = if odd(i, j, b) { fu.neg() } else { fu.clone() };
                        t1[idx(j, b, x)].push((idx(i, b, *y), c));
                        // T_2: e_b (x) e_j (x) x -> e_b (x) e_i (x) t_ij x
                        t2[idx(b, j, x)].push((idx(b, i, *y), fv.clone()));
                    }
                }
            }
        }
    }
    let sort = |mut cols: Vec<Vec<(usize, Q2)>>| {
        for c in &mut cols {
            c.sort_by_key(|e| e.0);
        }
        Matrix::from_columns(dim, cols)
    };
    let (t1, t2) = (sort(t1), sort(t2));
    let r2 = r.at(&u.sub(&v))?;
    let mut rc = vec![Vec::new(); dim];
    for (ab, col) in r2.columns().iter().enumerate() {
        for x in 0..m {
            rc[ab * m + x] = col.iter().map(|(ik, c)| (ik * m + x, c.clone())).collect();
        }
    }
    let rfull = Matrix::from_columns(dim, rc);
    Ok(rfull.mul(&t1).mul(&t2).sub(&t2.mul(&t1).mul(&rfull)))
}
