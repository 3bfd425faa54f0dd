//! Representations of `X(osp(2|2n))` and `X(osp(0|2n))`: the vector
//! representation, shifted tensor modules, the subspace `W`, the vectors
//! `xi_d`, the central series and the `V^+` reduction.

use serde::Serialize;

use super::{eigenvalue, RMatrix, TensorChain, YangianRep};
use crate::error::{Error, Result};
use crate::field::{sign, Field, Poly, Rational, Ring, Q1};
use crate::linalg::{Accumulator, Matrix, SparseEchelon, SparseVec};
use crate::space::{kernel_over_field, matrix_unit, SuperSpace};
use crate::symgroup::Perm;

/// `t_ij(u) -> delta_ij + u^{-1} e_ij (-1)^{p(i)} - (u + kappa)^{-1} e_{j'i'} (-1)^{p(i)p(j)} tau_i tau_j`.
///
/// For `osp(2|2n)` the pole is at `u = n`; for the odd subspace every index
/// is odd and the rule reads `delta_ij - u^{-1} e_ij + (u-n-1)^{-1} e_{j'i'} tau_i tau_j`.
pub fn vector_rep(space: &SuperSpace) -> Result<YangianRep> {
    let kappa = space.kappa()?;
    let n = space.dim();
    let inv_u = Q1::x().inv()?;
    let inv_uk = Q1::inv_linear(kappa.neg());
    let mut t = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let a = inv_u.mul(&sign::<Q1>(space.is_odd(i)));
            let s = Rational::from_int(space.tau(i) * space.tau(j));
            let b = inv_uk.mul(&sign::<Q1>(space.is_odd(i) && space.is_odd(j))).scale(&s).neg();
            let mut m = matrix_unit::<Q1>(space, i, j)
                .scale(&a)
                .add(&matrix_unit::<Q1>(space, space.prime(j), space.prime(i)).scale(&b));
            if i == j {
                m = m.add(&Matrix::identity(n));
            }
            t.push(m);
        }
    }
    let parities = (0..n).map(|i| space.parity(i)).collect();
    YangianRep::new(space.clone(), parities, t)
}

/// The vector representation at the given shifts, as a lazy tensor chain.
pub fn tensor_chain(space: &SuperSpace, shifts: &[Rational]) -> Result<TensorChain> {
    let v = vector_rep(space)?;
    TensorChain::new(shifts.iter().map(|a| v.shift(a)).collect())
}

/// `t_ij(u) -> sum t_{i a_1}(u + a_1) (x) ...` on `(C^{2|2n})^{(x) d}`.
pub fn tensor_module(space: &SuperSpace, shifts: &[Rational]) -> Result<YangianRep> {
    tensor_chain(space, shifts)?.materialize()
}

/// `T(u - kappa) T^t(u)` must be `c(u)` times the identity.
pub fn central_series(rep: &YangianRep) -> Result<Q1> {
    let space = rep.aux().clone();
    let kappa = space.kappa()?;
    let n = rep.n();
    let shifted = rep.shift(&kappa.neg());
    let mut c: Option<Q1> = None;
    for i in 0..n {
        for j in 0..n {
            let mut acc = Matrix::zeros(rep.dim(), rep.dim());
            for k in 0..n {
                let s = transpose_sign(&space, k, j);
                let prod = shifted.t(i, k).mul(rep.t(space.prime(j), space.prime(k)));
                acc = acc.add(&prod.scale(&s));
            }
            c = Some(scalar_block(&acc, i, j, c, &space)?);
        }
    }
    c.ok_or_else(|| Error::InvalidInput("empty generator matrix".into()))
}

/// `(-1)^{p(k)p(j)+p(j)} tau_k tau_j`, the sign in `(A^t)_kj = A_{j'k'} (...)`.
fn transpose_sign(space: &SuperSpace, k: usize, j: usize) -> Q1 {
    let (pk, pj) = (space.parity(k), space.parity(j));
    sign::<Q1>((pk * pj + pj) % 2 == 1).scale(&Rational::from_int(space.tau(k) * space.tau(j)))
}

fn scalar_block(m: &Matrix<Q1>, i: usize, j: usize, c: Option<Q1>, space: &SuperSpace) -> Result<Q1> {
    let witness = |what: String| Error::NotScalar {
        witness: format!("({},{}) {what}", space.label(i), space.label(j)),
    };
    if i != j {
        if let Some((r, s, x)) = m.first_nonzero() {
            return Err(witness(format!("off-diagonal block has entry {x} at ({r},{s})")));
        }
        return Ok(c.unwrap_or_else(Q1::zero));
    }
    let d = m.get(0, 0).clone();
    if *m != Matrix::scalar(m.nrows(), d.clone()) {
        return Err(witness("diagonal block is not scalar".into()));
    }
    match c {
        Some(c) if c != d => Err(witness(format!("value {d} differs from {c}"))),
        _ => Ok(d),
    }
}

/// `T(u - kappa) T^t(u) v` for a vector of a lazily represented module: the
/// value `c(u)` with all blocks equal to `c(u) v` on the diagonal and zero
/// off it.
pub fn central_series_on(chain: &TensorChain, v: &[(usize, Q1)]) -> Result<Q1> {
    let space = chain.factors()[0].aux().clone();
    let kappa = space.kappa()?;
    let shifted = TensorChain::new(chain.factors().iter().map(|f| f.shift(&kappa.neg())).collect())?;
    let n = space.dim();
    let mut c: Option<Q1> = None;
    // images t_{j'k'}(u) v, reused across i
    for j in 0..n {
        let inner: Vec<SparseVec<Q1>> = (0..n)
            .map(|k| {
                let s = transpose_sign(&space, k, j);
                chain.apply(space.prime(j), space.prime(k), v).into_iter().map(|(x, f)| (x, f.mul(&s))).collect()
            })
            .collect();
        for i in 0..n {
            let mut acc: std::collections::BTreeMap<usize, Q1> = std::collections::BTreeMap::new();
            for (k, w) in inner.iter().enumerate() {
                if w.is_empty() {
                    continue;
                }
                for (x, f) in shifted.apply(i, k, w) {
                    let e = acc.entry(x).or_insert_with(Q1::zero);
                    *e = e.add(&f);
                }
            }
            let img: SparseVec<Q1> = acc.into_iter().filter(|(_, f)| !f.is_zero()).collect();
            if i != j {
                if let Some((x, f)) = img.first() {
                    return Err(Error::NotScalar {
                        witness: format!("({},{}) entry {f} at basis index {x}", space.label(i), space.label(j)),
                    });
                }
                continue;
            }
            let value = eigenvalue(&img, v, &space, i).map_err(|_| Error::NotScalar {
                witness: format!("({0},{0}) does not act by a scalar on the vector", space.label(i)),
            })?;
            match &c {
                Some(c0) if *c0 != value => {
                    return Err(Error::NotScalar {
                        witness: format!("({0},{0}) value {value} differs from {c0}", space.label(i)),
                    })
                }
                _ => c = Some(value),
            }
        }
    }
    c.ok_or_else(|| Error::InvalidInput("empty generator matrix".into()))
}

/// `w_k = e_1 (x) e_k - e_k (x) e_1` in the tensor square, `k` a 0-based
/// index in `1..N-1` (labels `2..2'`).
pub fn w_vector(space: &SuperSpace, k: usize) -> SparseVec<Q1> {
    let mut v = vec![(space.encode(&[0, k]), Q1::one()), (space.encode(&[k, 0]), Q1::one().neg())];
    v.sort_by_key(|e| e.0);
    v
}

/// Verification report for the subspace `W`.
#[derive(Clone, Debug, Serialize)]
pub struct WReport {
    pub n: usize,
    pub action_formula: bool,
    pub t11_scalar: bool,
    pub annihilated: bool,
    pub isomorphic_to_vector_rep: bool,
    pub inside_vplus: bool,
}

impl WReport {
    pub fn holds(&self) -> bool {
        self.action_formula && self.t11_scalar && self.annihilated && self.isomorphic_to_vector_rep && self.inside_vplus
    }
}

/// Checks the properties of `W` inside the tensor square with shifts
/// `(-1, 0)`. The first failing property is reported as an error.
pub fn w_subspace(n: usize) -> Result<WReport> {
    let space = SuperSpace::osp(n);
    let big = space.dim();
    let sq = tensor_module(&space, &[Rational::from_int(-1), Rational::ZERO])?;
    let ws: Vec<SparseVec<Q1>> = (1..big - 1).map(|k| w_vector(&space, k)).collect();
    let w_of = |k: usize| &ws[k - 1];
    let combo = |terms: &[(usize, Q1)]| -> SparseVec<Q1> {
        let mut acc = Accumulator::new(space.tensor_dim(2));
        for (k, c) in terms {
            for (x, f) in w_of(*k) {
                acc.add_owned(*x, f.mul(c));
            }
        }
        acc.take()
    };
    let fail = |what: String| Error::VerificationFailure(what);
    let inv_u = Q1::x().inv()?;
    let inv_un1 = Q1::inv_linear(Rational::from_int(n as i64 + 1));
    // displayed action and the vector representation of the odd subspace
    let sub = SuperSpace::osp_sub(n);
    let vsub = vector_rep(&sub)?;
    for i in 1..big - 1 {
        for j in 1..big - 1 {
            for k in 1..big - 1 {
                let got = sq.apply(i, j, w_of(k));
                let mut terms = Vec::new();
                if i == j {
                    terms.push((k, Q1::one()));
                }
                if k == j {
                    terms.push((i, inv_u.neg()));
                }
                if k == space.prime(i) {
                    let s = Rational::from_int(space.tau(i) * space.tau(j));
                    terms.push((space.prime(j), inv_un1.scale(&s)));
                }
                if got != combo(&terms) {
                    return Err(fail(format!(
                        "t_{}{}(u) w_{} does not match the displayed formula",
                        space.label(i),
                        space.label(j),
                        space.label(k)
                    )));
                }
                let via_sub: Vec<(usize, Q1)> =
                    vsub.t(i - 1, j - 1).column(k - 1).iter().map(|(l, f)| (l + 1, f.clone())).collect();
                if got != combo(&via_sub) {
                    return Err(fail(format!(
                        "W and the odd vector representation differ at t_{}{}(u) on w_{}",
                        space.label(i),
                        space.label(j),
                        space.label(k)
                    )));
                }
            }
        }
    }
    let one_plus_inv = Q1::one().add(&inv_u);
    for k in 1..big - 1 {
        let got = sq.apply(0, 0, w_of(k));
        if got != combo(&[(k, one_plus_inv.clone())]) {
            return Err(fail(format!("t_11(u) is not 1 + u^-1 on w_{}", space.label(k))));
        }
        for j in 1..big {
            if !sq.apply(0, j, w_of(k)).is_empty() {
                return Err(fail(format!("t_1{}(u) w_{} is not zero", space.label(j), space.label(k))));
            }
        }
        for i in 0..big - 1 {
            if !sq.apply(i, big - 1, w_of(k)).is_empty() {
                return Err(fail(format!("t_{}1'(u) w_{} is not zero", space.label(i), space.label(k))));
            }
        }
    }
    let vplus = vplus_subspace(&sq)?;
    let inside = ws.iter().all(|w| {
        let r: SparseVec<Rational> = w.iter().map(|(x, f)| (*x, f.as_constant().expect("constant"))).collect();
        vplus.basis.contains(&r)
    });
    if !inside {
        return Err(fail("W is not contained in V+".into()));
    }
    Ok(WReport {
        n,
        action_formula: true,
        t11_scalar: true,
        annihilated: true,
        isomorphic_to_vector_rep: true,
        inside_vplus: true,
    })
}

/// `V^+` with the induced action of `X(osp(0|2n))`.
#[derive(Clone, Debug)]
pub struct VPlus {
    pub basis: SparseEchelon<Rational>,
    pub module: YangianRep,
}

/// `V^+ = {eta : t_1j(u) eta = 0 for j > 1, t_{i1'}(u) eta = 0 for i < 1'}`
/// and the operators `t_ij(u)`, `2 <= i, j <= 2'`, restricted to it.
pub fn vplus_subspace(rep: &YangianRep) -> Result<VPlus> {
    let space = rep.aux();
    let n = space.osp_rank()?;
    if space.is_odd(0) {
        return Err(space.wrong_kind("osp(2|2n)"));
    }
    let big = space.dim();
    let mut ops: Vec<&Matrix<Q1>> = (1..big).map(|j| rep.t(0, j)).collect();
    ops.extend((0..big - 1).map(|i| rep.t(i, big - 1)));
    let kernel = kernel_over_field(&ops)?;
    let mut basis = SparseEchelon::new(rep.dim());
    for p in [0u8, 1] {
        for v in &kernel {
            let part: SparseVec<Rational> = v
                .iter()
                .enumerate()
                .filter(|(x, c)| rep.parities()[*x] == p && !c.is_zero())
                .map(|(x, c)| (x, c.clone()))
                .collect();
            if !part.is_empty() {
                basis.insert(&part);
            }
        }
    }
    let sub = SuperSpace::osp_sub(n);
    let inner: Vec<Matrix<Q1>> =
        (1..big - 1).flat_map(|i| (1..big - 1).map(move |j| (i, j))).map(|(i, j)| rep.t(i, j).clone()).collect();
    let module = YangianRep::new(sub, rep.parities().to_vec(), inner)?.restrict(&basis)?;
    Ok(VPlus { basis, module })
}

/// Highest weight of an `X(osp(2|2n))`-module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OspHighestWeight {
    pub n: usize,
    /// `lambda_1(u), ..., lambda_{1'}(u)`.
    pub full: Vec<Q1>,
}

impl OspHighestWeight {
    /// `lambda_1(u), ..., lambda_{n+2}(u)`.
    pub fn reduced(&self) -> &[Q1] {
        &self.full[..self.n + 2]
    }

    /// `c(u) = lambda_1(u) lambda_{1'}(u + n)`.
    pub fn central_value(&self) -> Q1 {
        self.full[0].mul(&self.full[2 * self.n + 1].shift_by(&Rational::from_int(self.n as i64)))
    }
}

/// `lambda_i(u) lambda_{i'}(u+n-i+2) = lambda_{i+1}(u) lambda_{(i+1)'}(u+n-i+2)`
/// for `i = 1..n`; fails with the first violated index.
pub fn consistency_check(hw: &OspHighestWeight) -> Result<()> {
    let n = hw.n;
    let big = 2 * n + 2;
    if hw.full.len() != big {
        return Err(Error::InvalidInput(format!("expected {big} weight components")));
    }
    let l = &hw.full;
    for i in 1..=n {
        let s = Rational::from_int((n + 2 - i) as i64);
        let prime = |label: usize| big - label; // 0-based index of label'
        let lhs = l[i - 1].mul(&l[prime(i)].shift_by(&s));
        let rhs = l[i].mul(&l[prime(i + 1)].shift_by(&s));
        if lhs != rhs {
            return Err(Error::Inconsistent { index: i });
        }
    }
    Ok(())
}

/// Completes `lambda_1..lambda_{n+2}` to the full tuple by solving the
/// consistency conditions from `i = n` down to `i = 1`.
pub fn complete_weight(n: usize, reduced: &[Q1]) -> Result<OspHighestWeight> {
    if reduced.len() != n + 2 {
        return Err(Error::InvalidInput(format!("expected {} weight components", n + 2)));
    }
    let big = 2 * n + 2;
    let mut full = vec![Q1::zero(); big];
    full[..n + 2].clone_from_slice(reduced);
    for i in (1..=n).rev() {
        let s = Rational::from_int((n + 2 - i) as i64);
        // lambda_{i'}(v) = lambda_{i+1}(v-s) lambda_{(i+1)'}(v) / lambda_i(v-s)
        let num = full[i].shift_by(&s.neg()).mul(&full[big - i - 1]);
        full[big - i] = num.div(&full[i - 1].shift_by(&s.neg()))?;
    }
    Ok(OspHighestWeight { n, full })
}

/// Data of the module generated by `xi_d`.
#[derive(Clone, Debug, Serialize)]
pub struct XiModule {
    pub n: usize,
    pub d: usize,
    pub dim: usize,
    pub terms: usize,
    pub highest_weight: OspHighestWeight,
    pub central_series: Q1,
}

/// The chain `V_0 (x) V_{-1} (x) ... (x) V_{-d+1}` of shifted tensor squares
/// and the vector `xi_d = sum_{s} sgn(s) w_{s(2)} (x) ... (x) w_{s(d+1)}`.
pub fn xi_chain(n: usize, d: usize) -> Result<(TensorChain, SparseVec<Q1>)> {
    if d == 0 || d > n {
        return Err(Error::InvalidInput(format!("need 1 <= d <= n, got d = {d}, n = {n}")));
    }
    let space = SuperSpace::osp(n);
    let mut shifts = Vec::with_capacity(2 * d);
    for c in 0..d as i64 {
        shifts.push(Rational::from_int(-c - 1));
        shifts.push(Rational::from_int(-c));
    }
    let chain = tensor_chain(&space, &shifts)?;
    let mut acc: std::collections::BTreeMap<usize, Q1> = std::collections::BTreeMap::new();
    for s in Perm::all(d) {
        let sg = sign::<Q1>(s.is_odd());
        // w_{s(a)} in factor a, labels 2..d+1 are indices 1..d
        let mut partial: Vec<(Vec<usize>, Q1)> = vec![(Vec::new(), sg)];
        for a in 0..d {
            let k = s.image(a) + 1;
            let mut next = Vec::new();
            for (tuple, c) in &partial {
                for (x, f) in w_vector(&space, k) {
                    let mut t = tuple.clone();
                    t.extend(space.decode(2, x));
                    next.push((t, c.mul(&f)));
                }
            }
            partial = next;
        }
        for (tuple, c) in partial {
            let e = acc.entry(chain.encode(&tuple)).or_insert_with(Q1::zero);
            *e = e.add(&c);
        }
    }
    let xi = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    Ok((chain, xi))
}

/// The eigenvalues predicted for `xi_d`.
pub fn xi_expected(n: usize, d: usize) -> Vec<Option<Q1>> {
    let u = |a: i64| Poly::from_ints(&[a, 1]);
    let ratio = |a: i64, b: i64| Q1::new(u(a), u(b)).expect("nonzero");
    let mut out = vec![None; 2 * n + 2];
    out[0] = Some(ratio(1, -(d as i64) + 1));
    for x in out.iter_mut().take(d + 1).skip(1) {
        *x = Some(ratio(-(d as i64), -(d as i64) + 1));
    }
    for x in out.iter_mut().take(n + 2).skip(d + 1) {
        *x = Some(Q1::one());
    }
    if d == n {
        out[n + 1] = Some(ratio(-(n as i64), -(n as i64) - 1));
    }
    out
}

/// Verifies that `xi_d` is a highest vector with the predicted eigenvalues
/// and that the central series acts on it by `lambda_1(u) lambda_{1'}(u+n)`.
pub fn xi_module(n: usize, d: usize) -> Result<XiModule> {
    let (chain, xi) = xi_chain(n, d)?;
    let space = chain.factors()[0].aux().clone();
    let big = space.dim();
    for i in 0..big {
        for j in i + 1..big {
            if !chain.apply(i, j, &xi).is_empty() {
                return Err(Error::VerificationFailure(format!(
                    "t_{}{}(u) xi_{d} is not zero",
                    space.label(i),
                    space.label(j)
                )));
            }
        }
    }
    let full = (0..big).map(|i| eigenvalue(&chain.apply(i, i, &xi), &xi, &space, i)).collect::<Result<Vec<_>>>()?;
    for (i, (got, want)) in full.iter().zip(xi_expected(n, d)).enumerate() {
        if let Some(w) = want {
            if *got != w {
                return Err(Error::VerificationFailure(format!(
                    "t_{0}{0}(u) xi_{d} has eigenvalue {got}, expected {w}",
                    space.label(i)
                )));
            }
        }
    }
    let hw = OspHighestWeight { n, full };
    consistency_check(&hw)?;
    let c = central_series_on(&chain, &xi)?;
    if c != hw.central_value() {
        return Err(Error::VerificationFailure(format!(
            "c(u) = {c} differs from lambda_1(u) lambda_1'(u+n) = {}",
            hw.central_value()
        )));
    }
    Ok(XiModule { n, d, dim: chain.dim(), terms: xi.len(), highest_weight: hw, central_series: c })
}

/// The coefficient of `u^{-1}` in `f(u) = delta + a u^{-1} + ...`.
pub fn first_coefficient(f: &Q1) -> Result<Rational> {
    let (dn, dd) = (f.num().degree().unwrap_or(0), f.den().degree().unwrap_or(0));
    if f.is_zero() || dn + 1 < dd {
        return Ok(Rational::ZERO);
    }
    if dn > dd {
        return Err(Error::InvalidInput(format!("{f} is not bounded at infinity")));
    }
    if dn + 1 == dd {
        return Ok(f.num().coeff(dn));
    }
    // f = (p_k u^k + p_{k-1} u^{k-1} + ...) / (u^k + q_{k-1} u^{k-1} + ...)
    let lead = f.num().coeff(dd);
    let below = if dd == 0 { Rational::ZERO } else { f.num().coeff(dd - 1).sub(&lead.mul(&f.den().coeff(dd - 1))) };
    Ok(below)
}

/// Matrices of `t^{(1)}_ij` on a module.
pub fn first_coefficients(rep: &YangianRep) -> Result<Vec<Matrix<Rational>>> {
    rep.generators().iter().map(|m| m.try_map(first_coefficient)).collect()
}

/// Checks on the vector representation: `t^{(1)}_{1'1} = 0`, the relation
/// `t^{(1)}_ij + t^{(1)}_{j'i'} (-1)^{p(j)+p(i)p(j)} tau_i tau_j = 0` for
/// `i != j`, and that the images of `F_ij` satisfy the commutation relations
/// of the orthosymplectic Lie superalgebra.
pub fn check_embedding(n: usize) -> Result<()> {
    let space = SuperSpace::osp(n);
    let big = space.dim();
    let rep = vector_rep(&space)?;
    let t1 = first_coefficients(&rep)?;
    let at = |i: usize, j: usize| &t1[i * big + j];
    if !at(big - 1, 0).is_zero() {
        return Err(Error::VerificationFailure("t^(1)_{1'1} is not zero".into()));
    }
    let tsign = |i: usize, j: usize| {
        let (pi, pj) = (space.parity(i), space.parity(j));
        sign::<Rational>((pj + pi * pj) % 2 == 1).mul(&Rational::from_int(space.tau(i) * space.tau(j)))
    };
    for i in 0..big {
        for j in 0..big {
            if i != j && !at(i, j).add(&at(space.prime(j), space.prime(i)).scale(&tsign(i, j))).is_zero() {
                return Err(Error::VerificationFailure(format!(
                    "t^(1)_{}{} + t^(1)_{}'{}' term is not zero",
                    space.label(i),
                    space.label(j),
                    space.label(j),
                    space.label(i)
                )));
            }
        }
    }
    // images of F_ij and the natural matrices of F_ij
    let half = Rational::new(1, 2)?;
    let image = |i: usize, j: usize| {
        at(i, j)
            .sub(&at(space.prime(j), space.prime(i)).scale(&tsign(i, j)))
            .scale(&half.mul(&sign::<Rational>(space.is_odd(i))))
    };
    let natural = |i: usize, j: usize| {
        let (pi, pj) = (space.parity(i), space.parity(j));
        let s = sign::<Rational>((pi * pj + pi) % 2 == 1).mul(&Rational::from_int(space.tau(i) * space.tau(j)));
        matrix_unit::<Rational>(&space, i, j).sub(&matrix_unit(&space, space.prime(j), space.prime(i)).scale(&s))
    };
    let g: Vec<Matrix<Rational>> = (0..big * big).map(|k| image(k / big, k % big)).collect();
    let f: Vec<Matrix<Rational>> = (0..big * big).map(|k| natural(k / big, k % big)).collect();
    let par = |k: usize| space.parity(k / big) ^ space.parity(k % big);
    for a in 0..big * big {
        for b in 0..big * big {
            let s = sign::<Rational>(par(a) & par(b) == 1);
            let bracket = |m: &[Matrix<Rational>]| m[a].mul(&m[b]).sub(&m[b].mul(&m[a]).scale(&s));
            // [F_a, F_b] = X lies in osp, so X = (1/2) sum_pq X_pq F_pq
            let x = bracket(&f);
            let mut rhs = Matrix::zeros(big, big);
            for (p, q, c) in x.entries() {
                rhs = rhs.add(&g[p * big + q].scale(&c.mul(&half)));
            }
            if bracket(&g) != rhs {
                return Err(Error::VerificationFailure(format!(
                    "images of F violate the bracket at ({}, {})",
                    a, b
                )));
            }
        }
    }
    Ok(())
}

/// Sampled check of the expanded defining relations on a module, as an
/// identity over the two-variable field.
pub fn check_defining_relations(rep: &YangianRep, quadruples: &[(usize, usize, usize, usize)]) -> Result<()> {
    use crate::field::{TowerLevel, Q2};
    let space = rep.aux().clone();
    let big = space.dim();
    let kappa = Q2::from_rational(&space.kappa()?);
    let u = Q2::variable(0)?;
    let v = Q2::variable(1)?;
    let tu: Vec<Matrix<Q2>> =
        rep.generators().iter().map(|m| m.map(|f| f.map(|c| Q1::from_rational(c)).expect("valid"))).collect();
    let tv: Vec<Matrix<Q2>> = rep.generators().iter().map(|m| m.map(|f| Q2::constant(f.clone()))).collect();
    let p = |i: usize| space.parity(i) as u32;
    let sg = |e: u32| sign::<Q2>(e % 2 == 1);
    let tau = |i: usize| Q2::from_int(space.tau(i));
    let idx = |i: usize, j: usize| i * big + j;
    let a = u.sub(&v).inv()?;
    let b = u.sub(&v).sub(&kappa).inv()?;
    for &(i, j, k, l) in quadruples {
        let lhs = tu[idx(i, j)]
            .mul(&tv[idx(k, l)])
            .sub(&tv[idx(k, l)].mul(&tu[idx(i, j)]).scale(&sg((p(i) + p(j)) * (p(k) + p(l)))));
        let mut rhs = tu[idx(k, j)]
            .mul(&tv[idx(i, l)])
            .sub(&tv[idx(k, j)].mul(&tu[idx(i, l)]))
            .scale(&a.mul(&sg(p(i) * p(j) + p(i) * p(k) + p(j) * p(k))));
        let mut inner = Matrix::zeros(rep.dim(), rep.dim());
        if k == space.prime(i) {
            for q in 0..big {
                let s = sg(p(i) + p(i) * p(j) + p(j) * p(q)).mul(&tau(i)).mul(&tau(q));
                inner = inner.add(&tu[idx(q, j)].mul(&tv[idx(space.prime(q), l)]).scale(&s));
            }
        }
        if l == space.prime(j) {
            for q in 0..big {
                let s = sg(p(j) + p(q) + p(i) * p(k) + p(j) * p(k) + p(i) * p(q)).mul(&tau(j)).mul(&tau(q));
                inner = inner.sub(&tv[idx(k, space.prime(q))].mul(&tu[idx(i, q)]).scale(&s));
            }
        }
        rhs = rhs.sub(&inner.scale(&b));
        if lhs != rhs {
            return Err(Error::VerificationFailure(format!(
                "defining relation fails for (i,j,k,l) = ({},{},{},{})",
                space.label(i),
                space.label(j),
                space.label(k),
                space.label(l)
            )));
        }
    }
    Ok(())
}

/// The R-matrix of the space of a module.
pub fn r_matrix(space: &SuperSpace) -> Result<RMatrix> {
    RMatrix::osp(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yangian::rtt_check;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn vector_reps_satisfy_rtt() {
        for s in [SuperSpace::osp(1), SuperSpace::osp(2), SuperSpace::osp_sub(1), SuperSpace::osp_sub(2)] {
            let v = vector_rep(&s).unwrap();
            let r = RMatrix::osp(&s).unwrap();
            let rep = rtt_check(&v, &r).unwrap();
            assert!(rep.holds, "{:?}", rep.witness);
        }
    }

    #[test]
    fn perturbed_generator_breaks_rtt() {
        let s = SuperSpace::osp(1);
        let v = vector_rep(&s).unwrap();
        let mut gens = v.generators().to_vec();
        gens[1] = gens[1].scale(&Q1::from_int(2));
        let bad = YangianRep::new(s.clone(), v.parities().to_vec(), gens).unwrap();
        assert!(!rtt_check(&bad, &RMatrix::osp(&s).unwrap()).unwrap().holds);
    }

    #[test]
    fn ybe_osp2() {
        RMatrix::osp(&SuperSpace::osp(2)).unwrap().check_ybe().unwrap();
        RMatrix::osp(&SuperSpace::osp_sub(2)).unwrap().check_ybe().unwrap();
    }

    #[test]
    fn tensor_square_satisfies_rtt() {
        let s = SuperSpace::osp(1);
        let m = tensor_module(&s, &ints(&[-1, 0])).unwrap();
        assert!(rtt_check(&m, &RMatrix::osp(&s).unwrap()).unwrap().holds);
    }

    #[test]
    fn central_series_values() {
        let s = SuperSpace::osp(2);
        let v = vector_rep(&s).unwrap();
        let c = central_series(&v).unwrap();
        let hw = v.highest_weight().unwrap();
        let full = OspHighestWeight { n: 2, full: hw.weights.clone() };
        assert_eq!(c, full.central_value());
        consistency_check(&full).unwrap();
        assert_eq!(central_series(&YangianRep::trivial(s.clone(), vec![0])).unwrap(), Q1::one());
        let sq = tensor_chain(&s, &ints(&[-1, 0])).unwrap();
        let v0 = vec![(0usize, Q1::one())];
        let lazy = central_series_on(&sq, &v0).unwrap();
        assert_eq!(lazy, central_series(&sq.materialize().unwrap()).unwrap());
    }

    #[test]
    fn central_series_rejects_non_module() {
        let s = SuperSpace::osp(1);
        let v = vector_rep(&s).unwrap();
        let mut gens = v.generators().to_vec();
        gens[1] = gens[1].scale(&Q1::from_int(2));
        let bad = YangianRep::new(s, v.parities().to_vec(), gens).unwrap();
        assert!(matches!(central_series(&bad), Err(Error::NotScalar { .. })));
    }

    #[test]
    fn w_subspace_properties() {
        for n in 1..=3 {
            assert!(w_subspace(n).unwrap().holds());
        }
    }

    #[test]
    fn xi_highest_vectors() {
        for n in 1..=3 {
            for d in 1..=n {
                let m = xi_module(n, d).unwrap();
                assert_eq!(m.highest_weight.full.len(), 2 * n + 2);
            }
        }
    }

    #[test]
    fn weight_completion_roundtrip() {
        let m = xi_module(2, 2).unwrap();
        let done = complete_weight(2, m.highest_weight.reduced()).unwrap();
        assert_eq!(done, m.highest_weight);
        let mut broken = done.clone();
        broken.full[5] = broken.full[5].mul(&Q1::x());
        assert!(matches!(consistency_check(&broken), Err(Error::Inconsistent { index: 1 })));
    }

    #[test]
    fn vplus_of_tensor_square_satisfies_rtt() {
        let s = SuperSpace::osp(1);
        let sq = tensor_module(&s, &ints(&[-1, 0])).unwrap();
        let vp = vplus_subspace(&sq).unwrap();
        assert!(vp.basis.rank() > 0);
        let r = RMatrix::osp(vp.module.aux()).unwrap();
        assert!(rtt_check(&vp.module, &r).unwrap().holds);
    }

    #[test]
    fn embedding_and_first_coefficients() {
        for n in 1..=2 {
            check_embedding(n).unwrap();
        }
    }

    #[test]
    fn defining_relations_vector_rep() {
        let s = SuperSpace::osp(1);
        let v = vector_rep(&s).unwrap();
        let big = s.dim();
        let all: Vec<_> = (0..big)
            .flat_map(|i| (0..big).flat_map(move |j| (0..big).flat_map(move |k| (0..big).map(move |l| (i, j, k, l)))))
            .collect();
        check_defining_relations(&v, &all).unwrap();
        let mut gens = v.generators().to_vec();
        gens[big - 1] = gens[big - 1].scale(&Q1::from_int(-1));
        let bad = YangianRep::new(s, v.parities().to_vec(), gens).unwrap();
        assert!(check_defining_relations(&bad, &all).is_err());
    }

    #[test]
    fn first_coefficient_expansion() {
        let f = Q1::new(Poly::from_ints(&[3, 1]), Poly::from_ints(&[-2, 1])).unwrap();
        assert_eq!(first_coefficient(&f).unwrap(), Rational::from_int(5));
        assert_eq!(first_coefficient(&Q1::x().inv().unwrap()).unwrap(), Rational::from_int(1));
    }
}
