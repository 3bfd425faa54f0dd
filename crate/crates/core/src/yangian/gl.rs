//! Representations of `Y(gl(m|n))` on tensor powers of the vector
//! representation and on the polynomial modules `e_U (C^{m|n})^{(x) d}`.

use serde::Serialize;

use super::{one_plus, HighestWeight, RMatrix, YangianRep};
use crate::error::{Error, Result};
use crate::field::{sign, Field, Rational, Ring, Q1};
use crate::linalg::{Matrix, SparseEchelon};
use crate::space::{matrix_unit, operator_q_gl, permutation_p, single_site_operator, SpaceKind, SuperSpace};
use crate::symgroup::{act_on_tensor, antisymmetrizer, hook_data, murphy_idempotent, symmetrizer, GroupAlgElem, Partition, Tableau};

fn gl_dims(space: &SuperSpace) -> Result<(usize, usize)> {
    match space.kind() {
        SpaceKind::Gl { m, n } => Ok((m, n)),
        _ => Err(space.wrong_kind("general linear")),
    }
}

fn tensor_parities(space: &SuperSpace, d: usize) -> Vec<u8> {
    (0..space.tensor_dim(d)).map(|k| space.tuple_parity(&space.decode(d, k))).collect()
}

fn space_parities(space: &SuperSpace) -> Vec<u8> {
    (0..space.dim()).map(|i| space.parity(i)).collect()
}

/// `t_ij(u) -> delta_ij - u^{-1} e_ji (-1)^{p(i)p(j)}`, that is `T(u) -> R(u)`.
pub fn vector_rep_a(space: &SuperSpace) -> Result<YangianRep> {
    gl_dims(space)?;
    let n = space.dim();
    let inv_u = Q1::x().inv()?;
    let mut t = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let c = inv_u.mul(&sign::<Q1>(space.is_odd(i) && space.is_odd(j))).neg();
            let mut m = matrix_unit::<Q1>(space, j, i).scale(&c);
            if i == j {
                m = m.add(&Matrix::identity(n));
            }
            t.push(m);
        }
    }
    YangianRep::new(space.clone(), space_parities(space), t)
}

/// `t_ij(u) -> delta_ij + u^{-1} e_ij (-1)^{p(i)}`, that is `T(u) -> R'(-u)`.
pub fn vector_rep_b(space: &SuperSpace) -> Result<YangianRep> {
    gl_dims(space)?;
    let units: Vec<Matrix<Rational>> =
        (0..space.dim()).flat_map(|i| (0..space.dim()).map(move |j| (i, j))).map(|(i, j)| matrix_unit(space, i, j)).collect();
    evaluation_module(space, space_parities(space), &units)
}

/// Checks `[E_ij, E_kl] = delta_kj E_il - delta_il E_kj (-1)^{(p(i)+p(j))(p(k)+p(l))}`
/// with the super-commutator.
pub fn check_gl_relations(space: &SuperSpace, e: &[Matrix<Rational>]) -> Result<()> {
    let n = space.dim();
    if e.len() != n * n {
        return Err(Error::InvalidInput(format!("expected {} matrices, got {}", n * n, e.len())));
    }
    let p = |i: usize, j: usize| space.parity(i) ^ space.parity(j);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (a, b) = (&e[i * n + j], &e[k * n + l]);
                    let s = sign::<Rational>(p(i, j) & p(k, l) == 1);
                    let lhs = a.mul(b).sub(&b.mul(a).scale(&s));
                    let mut rhs = Matrix::zeros(a.nrows(), a.ncols());
                    if k == j {
                        rhs = rhs.add(&e[i * n + l]);
                    }
                    if i == l {
                        rhs = rhs.sub(&e[k * n + j].scale(&s));
                    }
                    if lhs != rhs {
                        return Err(Error::RelationViolation(format!(
                            "[E_{}{}, E_{}{}]",
                            space.label(i),
                            space.label(j),
                            space.label(k),
                            space.label(l)
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The evaluation module `t_ij(u) -> delta_ij + E_ij (-1)^{p(i)} u^{-1}`.
pub fn evaluation_module(space: &SuperSpace, parities: Vec<u8>, e: &[Matrix<Rational>]) -> Result<YangianRep> {
    gl_dims(space)?;
    check_gl_relations(space, e)?;
    let n = space.dim();
    let m = parities.len();
    let inv_u = Q1::x().inv()?;
    let mut t = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let c = inv_u.mul(&sign::<Q1>(space.is_odd(i)));
            let mut x = e[i * n + j].map(|q| Q1::from_rational(q).mul(&c));
            if i == j {
                x = x.add(&Matrix::identity(m));
            }
            t.push(x);
        }
    }
    YangianRep::new(space.clone(), parities, t)
}

/// `E_ij -> sum_a 1 (x) ... (x) e_ij (x) ... (x) 1` on the `d`-th tensor power.
pub fn glac(space: &SuperSpace, d: usize) -> Result<Vec<Matrix<Rational>>> {
    let n = space.dim();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let unit = matrix_unit::<Rational>(space, i, j);
            let mut acc = Matrix::zeros(space.tensor_dim(d), space.tensor_dim(d));
            for a in 0..d {
                acc = acc.add(&single_site_operator(space, d, a, &unit)?);
            }
            out.push(acc);
        }
    }
    Ok(out)
}

/// The product `prod_a R_{0 a}(...)` on `d + 1` sites, site 0 auxiliary.
fn aux_product(space: &SuperSpace, r: &RMatrix, args: &[(usize, Q1)]) -> Result<Matrix<Q1>> {
    let d = args.iter().map(|(a, _)| *a).max().unwrap_or(0);
    let mut acc = Matrix::identity(space.tensor_dim(d + 1));
    for (a, x) in args {
        acc = acc.mul(&r.at_sites(d + 1, 0, *a, x)?);
    }
    Ok(acc)
}

/// `T(u) -> R_01(u - c_1) ... R_0d(u - c_d)`.
pub fn tensor_action_r(space: &SuperSpace, contents: &[Rational]) -> Result<YangianRep> {
    let r = RMatrix::yang(space)?;
    let u = Q1::x();
    let args: Vec<(usize, Q1)> =
        contents.iter().enumerate().map(|(a, c)| (a + 1, u.sub(&Q1::from_rational(c)))).collect();
    let op = aux_product(space, &r, &args)?;
    YangianRep::from_aux_operator(space.clone(), tensor_parities(space, contents.len()), &op)
}

/// `T(u) -> R'_0d(-u - c_d) ... R'_01(-u - c_1)` with `R'(u) = 1 - Q/u`.
pub fn tensor_action_rprime(space: &SuperSpace, contents: &[Rational]) -> Result<YangianRep> {
    let r = RMatrix::yang_prime(space)?;
    let u = Q1::x();
    let args: Vec<(usize, Q1)> =
        contents.iter().enumerate().rev().map(|(a, c)| (a + 1, u.add(&Q1::from_rational(c)).neg())).collect();
    let op = aux_product(space, &r, &args)?;
    YangianRep::from_aux_operator(space.clone(), tensor_parities(space, contents.len()), &op)
}

/// `T(u) -> R'_01(-u - z_1) ... R'_0d(-u - z_d)`.
pub fn tensor_action_rprime_forward(space: &SuperSpace, z: &[Rational]) -> Result<YangianRep> {
    let r = RMatrix::yang_prime(space)?;
    let u = Q1::x();
    let args: Vec<(usize, Q1)> =
        z.iter().enumerate().map(|(a, c)| (a + 1, u.add(&Q1::from_rational(c)).neg())).collect();
    let op = aux_product(space, &r, &args)?;
    YangianRep::from_aux_operator(space.clone(), tensor_parities(space, z.len()), &op)
}

/// Iterated coproduct of shifted copies of a one-site representation:
/// factor `a` is twisted by `t(u) -> t(u + shifts[a])`.
pub fn coproduct_action(site: &YangianRep, shifts: &[Rational]) -> Result<YangianRep> {
    let (first, rest) =
        shifts.split_first().ok_or_else(|| Error::InvalidInput("need at least one tensor factor".into()))?;
    let mut acc = site.shift(first);
    for s in rest {
        acc = acc.tensor(&site.shift(s))?;
    }
    Ok(acc)
}

/// Which of the two tensor actions a polynomial module carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Variant {
    R,
    Rprime,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r" => Ok(Variant::R),
            "rprime" | "r'" => Ok(Variant::Rprime),
            _ => Err(Error::InvalidInput(format!("unknown variant {s:?}; expected r or rprime"))),
        }
    }
}

/// Basis of the image of an even operator, split by parity so that every
/// basis vector is homogeneous.
pub fn image_basis(op: &Matrix<Rational>, parities: &[u8]) -> SparseEchelon<Rational> {
    let mut ech = SparseEchelon::new(op.nrows());
    for p in [0u8, 1] {
        for (c, col) in op.columns().iter().enumerate() {
            if parities[c] == p && !col.is_empty() {
                ech.insert(col);
            }
        }
    }
    ech
}

/// `L_U = E_U (C^{m|n})^{(x) d}` with one of the two Yangian actions.
#[derive(Clone, Debug)]
pub struct PolynomialModule {
    pub tableau: Tableau,
    pub variant: Variant,
    pub e_u: Matrix<Rational>,
    pub image: SparseEchelon<Rational>,
    pub ambient: YangianRep,
    pub module: YangianRep,
}

impl PolynomialModule {
    pub fn dim(&self) -> usize {
        self.image.rank()
    }
}

fn contents_of(t: &Tableau) -> Vec<Rational> {
    t.contents().into_iter().map(Rational::from_int).collect()
}

/// Builds `L_U`, verifying exactly that it is invariant.
pub fn polynomial_module(space: &SuperSpace, tableau: &Tableau, variant: Variant) -> Result<PolynomialModule> {
    let (m, n) = gl_dims(space)?;
    hook_data(tableau.shape(), m, n)?;
    let d = tableau.size();
    let e_u = act_on_tensor(&murphy_idempotent(tableau), space);
    let parities = tensor_parities(space, d);
    let image = image_basis(&e_u, &parities);
    if image.rank() == 0 {
        return Err(Error::NotInHook {
            shape: tableau.shape().to_string(),
            m,
            n,
            reason: "the image of the idempotent is zero".into(),
        });
    }
    let contents = contents_of(tableau);
    let ambient = match variant {
        Variant::R => tensor_action_r(space, &contents)?,
        Variant::Rprime => tensor_action_rprime(space, &contents)?,
    };
    let module = ambient.restrict(&image)?;
    Ok(PolynomialModule { tableau: tableau.clone(), variant, e_u, image, ambient, module })
}

/// `pi^flat` for a hook shape.
pub fn pi_flat(lambda: &Partition, m: usize, n: usize) -> Result<Vec<Q1>> {
    let h = hook_data(lambda, m, n)?;
    let conj = lambda.conjugate();
    let mut w: Vec<Q1> = (0..m).rev().map(|i| one_plus(-(h.mu[i] as i64))).collect();
    w.extend((0..n).rev().map(|j| one_plus(conj.part(j) as i64)));
    Ok(w)
}

/// `pi^sharp` for a hook shape.
pub fn pi_sharp(lambda: &Partition, m: usize, n: usize) -> Result<Vec<Q1>> {
    let h = hook_data(lambda, m, n)?;
    let mut w: Vec<Q1> = (0..m).map(|i| one_plus(lambda.part(i) as i64)).collect();
    w.extend((0..n).map(|j| one_plus(-(h.nu[j] as i64))));
    Ok(w)
}

/// `E_U` placed on sites `1..d` of `d + 1` sites.
fn behind_aux(space: &SuperSpace, e: &Matrix<Rational>) -> Matrix<Q1> {
    let n = space.dim();
    let m = e.ncols();
    let mut cols = Vec::with_capacity(n * m);
    for a in 0..n {
        for col in e.columns() {
            cols.push(col.iter().map(|(i, x)| (a * m + i, Q1::from_rational(x))).collect());
        }
    }
    Matrix::from_columns(n * m, cols)
}

/// `R_01(u-c_1)...R_0d(u-c_d) E_U = E_U (1 - (P_01 + ... + P_0d)/u)`, exactly.
pub fn check_kfus(space: &SuperSpace, tableau: &Tableau) -> Result<bool> {
    let d = tableau.size();
    let e = behind_aux(space, &act_on_tensor(&murphy_idempotent(tableau), space));
    let lhs = tensor_action_r(space, &contents_of(tableau))?.to_aux_operator().mul(&e);
    let mut sum = Matrix::zeros(e.nrows(), e.ncols());
    for a in 1..=d {
        sum = sum.add(&permutation_p::<Q1>(space, d + 1, 0, a)?);
    }
    let inner = Matrix::identity(e.nrows()).sub(&sum.scale(&Q1::x().inv()?));
    Ok(lhs == e.mul(&inner))
}

/// `R'_0d(-u-c_d)...R'_01(-u-c_1) E_U = E_U (1 + (Q_01 + ... + Q_0d)/u)`, exactly.
pub fn check_kfustr(space: &SuperSpace, tableau: &Tableau) -> Result<bool> {
    let d = tableau.size();
    let e = behind_aux(space, &act_on_tensor(&murphy_idempotent(tableau), space));
    let lhs = tensor_action_rprime(space, &contents_of(tableau))?.to_aux_operator().mul(&e);
    let mut sum = Matrix::zeros(e.nrows(), e.ncols());
    for a in 1..=d {
        sum = sum.add(&operator_q_gl::<Q1>(space, d + 1, 0, a)?);
    }
    let inner = Matrix::identity(e.nrows()).add(&sum.scale(&Q1::x().inv()?));
    Ok(lhs == e.mul(&inner))
}

/// The symmetrizer (`antisym = false`) or anti-symmetrizer module with the
/// action `T(u) -> R'_01(-u - z_1) ... R'_0d(-u - z_d)`, where
/// `z_a = d - a` or `z_a = a - d` respectively.
pub fn symmetrizer_module(space: &SuperSpace, d: usize, antisym: bool) -> Result<(YangianRep, HighestWeight)> {
    gl_dims(space)?;
    let e: GroupAlgElem<Rational> = if antisym { antisymmetrizer(d) } else { symmetrizer(d) };
    let op = act_on_tensor(&e, space);
    let image = image_basis(&op, &tensor_parities(space, d));
    let z: Vec<Rational> = (1..=d as i64)
        .map(|a| Rational::from_int(if antisym { a - d as i64 } else { d as i64 - a }))
        .collect();
    let module = tensor_action_rprime_forward(space, &z)?.restrict(&image)?;
    let hw = module.highest_weight()?;
    Ok((module, hw))
}

/// Highest weights predicted for the symmetrizer and anti-symmetrizer modules.
pub fn symmetrizer_weight(m: usize, n: usize, d: usize, antisym: bool) -> Vec<Q1> {
    let total = m + n;
    let mut w = vec![Q1::one(); total];
    if !antisym {
        w[0] = one_plus(d as i64);
    } else if d <= m {
        for x in w.iter_mut().take(d) {
            *x = one_plus(1);
        }
    } else {
        for x in w.iter_mut().take(m) {
            *x = one_plus(1);
        }
        w[m] = one_plus(m as i64 - d as i64);
    }
    w
}

/// `xi_d = sum_s sgn(s) e_{s(1)} (x) ... (x) e_{s(d)}`.
pub fn xi_vector(space: &SuperSpace, d: usize) -> Result<Vec<(usize, Q1)>> {
    if d > space.dim() {
        return Err(Error::IndexOutOfRange(format!("xi_{d} needs {d} basis vectors")));
    }
    let mut v: Vec<(usize, Q1)> = crate::symgroup::Perm::all(d)
        .into_iter()
        .map(|s| {
            let idx = space.encode(s.images());
            (idx, sign::<Q1>(s.is_odd()))
        })
        .collect();
    v.sort_by_key(|e| e.0);
    Ok(v)
}

/// The module `t_ij(u) -> sum t_{i a_1}(u-d+1) (x) ... (x) t_{a_{d-1} j}(u)`
/// built from the second vector representation.
pub fn fundamental_tensor(space: &SuperSpace, d: usize) -> Result<YangianRep> {
    let shifts: Vec<Rational> = (1..=d as i64).map(|k| Rational::from_int(k - d as i64)).collect();
    coproduct_action(&vector_rep_b(space)?, &shifts)
}

/// Checks `t_ij(u) xi_d = 0` for `i < j` and the eigenvalues
/// `(u+1)/u` for `i <= d`, `1` otherwise. Returns the eigenvalues.
pub fn check_xi_gl(space: &SuperSpace, d: usize) -> Result<Vec<Q1>> {
    let rep = fundamental_tensor(space, d)?;
    let xi = xi_vector(space, d)?;
    let n = space.dim();
    for i in 0..n {
        for j in i + 1..n {
            if !rep.apply(i, j, &xi).is_empty() {
                return Err(Error::VerificationFailure(format!(
                    "t_{}{}(u) xi_{d} is not zero",
                    space.label(i),
                    space.label(j)
                )));
            }
        }
    }
    (0..n).map(|i| super::eigenvalue(&rep.apply(i, i, &xi), &xi, space, i)).collect()
}

/// `sum_{hook lambda |- d} f_lambda rank(E_U)` and the ranks off the hook.
pub fn schur_sergeev(space: &SuperSpace, d: usize) -> Result<SchurSergeev> {
    let (m, n) = gl_dims(space)?;
    let mut total = 0u64;
    let mut rows = Vec::new();
    for shape in Partition::all(d) {
        let u = Tableau::row_reading(&shape);
        let e = act_on_tensor(&murphy_idempotent(&u), space);
        let rank = image_basis(&e, &tensor_parities(space, d)).rank();
        let hook = shape.is_hook(m, n);
        if hook {
            total += shape.num_standard() * rank as u64;
        }
        rows.push(ShapeRank { shape, hook, rank });
    }
    Ok(SchurSergeev { total, expected: space.tensor_dim(d) as u64, shapes: rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeRank {
    pub shape: Partition,
    pub hook: bool,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurSergeev {
    pub total: u64,
    pub expected: u64,
    pub shapes: Vec<ShapeRank>,
}

impl SchurSergeev {
    /// The dimension law holds and every shape off the hook has rank zero.
    pub fn holds(&self) -> bool {
        self.total == self.expected && self.shapes.iter().all(|s| s.hook || s.rank == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yangian::{rtt_check, rtt_residual_symbolic};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn spaces() -> Vec<SuperSpace> {
        vec![SuperSpace::gl(1, 1), SuperSpace::gl(2, 1), SuperSpace::gl(1, 2)]
    }

    #[test]
    fn vector_reps_examples() {
        let s = SuperSpace::gl(1, 1);
        let a = vector_rep_a(&s).unwrap();
        let b = vector_rep_b(&s).unwrap();
        let e1 = vec![(0, Q1::one())];
        assert_eq!(a.apply(0, 0, &e1), vec![(0, one_plus(-1))]);
        assert_eq!(b.apply(0, 0, &e1), vec![(0, one_plus(1))]);
        // t_22 e_2 = (1 - u^{-1}(-1)) e_2 for the first form
        assert_eq!(a.apply(1, 1, &[(1, Q1::one())]), vec![(1, one_plus(1))]);
        assert!(a.is_normalized_at_infinity() && b.is_normalized_at_infinity());
    }

    #[test]
    fn vector_reps_satisfy_rtt() {
        for s in spaces() {
            let r = RMatrix::yang(&s).unwrap();
            for rep in [vector_rep_a(&s).unwrap(), vector_rep_b(&s).unwrap()] {
                let report = rtt_check(&rep, &r).unwrap();
                assert!(report.holds, "{s}: {:?}", report.witness);
                assert!(rtt_residual_symbolic(&rep, &r).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn rtt_detects_a_wrong_sign() {
        let s = SuperSpace::gl(1, 1);
        let rep = vector_rep_a(&s).unwrap();
        let mut t = rep.generators().to_vec();
        t[1] = t[1].neg();
        t[2] = t[2].neg();
        t[3] = t[3].scale(&Q1::from_int(2)).sub(&Matrix::identity(2));
        let bad = YangianRep::new(s.clone(), rep.parities().to_vec(), t).unwrap();
        let r = RMatrix::yang(&s).unwrap();
        assert!(!rtt_check(&bad, &r).unwrap().holds);
        assert!(!rtt_residual_symbolic(&bad, &r).unwrap().is_zero());
    }

    #[test]
    fn second_vector_rep_is_a_twist_of_the_first() {
        for s in spaces() {
            assert_eq!(vector_rep_a(&s).unwrap().transpose_twist(), vector_rep_b(&s).unwrap());
        }
    }

    #[test]
    fn evaluation_module_checks_relations() {
        let s = SuperSpace::gl(1, 1);
        let zero = vec![Matrix::<Rational>::zeros(2, 2); 4];
        let triv = evaluation_module(&s, vec![0, 1], &zero).unwrap();
        assert_eq!(triv, YangianRep::trivial(s.clone(), vec![0, 1]));
        let mut bad: Vec<Matrix<Rational>> = (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).map(|(i, j)| matrix_unit(&s, i, j)).collect();
        bad[1] = bad[1].scale(&q(2));
        assert!(matches!(evaluation_module(&s, vec![0, 1], &bad), Err(Error::RelationViolation(_))));
        // the d-fold action is a representation
        let e = glac(&s, 2).unwrap();
        let rep = evaluation_module(&s, tensor_parities(&s, 2), &e).unwrap();
        assert!(rtt_check(&rep, &RMatrix::yang(&s).unwrap()).unwrap().holds);
    }

    #[test]
    fn r_product_matches_coproduct() {
        for s in spaces() {
            for contents in [vec![q(0), q(1)], vec![q(0), q(-1), q(1)]] {
                let prod = tensor_action_r(&s, &contents).unwrap();
                let shifts: Vec<Rational> = contents.iter().map(|c| c.neg()).collect();
                let cop = coproduct_action(&vector_rep_a(&s).unwrap(), &shifts).unwrap();
                assert_eq!(prod, cop, "{s} {contents:?}");
            }
        }
    }

    #[test]
    fn rprime_product_is_the_twisted_r_product() {
        for s in spaces() {
            let contents = vec![q(0), q(1), q(-1)];
            let a = tensor_action_r(&s, &contents).unwrap().transpose_twist();
            let b = tensor_action_rprime(&s, &contents).unwrap();
            assert_eq!(a, b, "{s}");
        }
    }

    #[test]
    fn tensor_actions_satisfy_rtt() {
        let s = SuperSpace::gl(1, 1);
        let r = RMatrix::yang(&s).unwrap();
        let contents = vec![q(0), q(1)];
        for rep in [tensor_action_r(&s, &contents).unwrap(), tensor_action_rprime(&s, &contents).unwrap()] {
            assert!(rtt_check(&rep, &r).unwrap().holds);
            assert!(rtt_residual_symbolic(&rep, &r).unwrap().is_zero());
        }
    }

    #[test]
    fn key_relations_hold() {
        for s in spaces() {
            for shape in ["2,1", "3", "1,1,1"] {
                let shape: Partition = shape.parse().unwrap();
                for t in Tableau::standard(&shape) {
                    assert!(check_kfus(&s, &t).unwrap(), "{s} {t}");
                    assert!(check_kfustr(&s, &t).unwrap(), "{s} {t}");
                }
            }
        }
    }

    #[test]
    fn hook_weights_gl11() {
        let s = SuperSpace::gl(1, 1);
        let t: Tableau = "1,2;3".parse().unwrap();
        let shape = t.shape().clone();
        let flat = polynomial_module(&s, &t, Variant::R).unwrap().module.highest_weight().unwrap();
        assert_eq!(flat.weights, pi_flat(&shape, 1, 1).unwrap());
        let sharp = polynomial_module(&s, &t, Variant::Rprime).unwrap().module.highest_weight().unwrap();
        assert_eq!(sharp.weights, pi_sharp(&shape, 1, 1).unwrap());
        assert_eq!(sharp.weights, vec![one_plus(2), one_plus(-1)]);
        let bad: Tableau = "1,2;3,4".parse().unwrap();
        assert!(matches!(polynomial_module(&s, &bad, Variant::R), Err(Error::NotInHook { .. })));
    }

    #[test]
    fn symmetrizer_and_antisymmetrizer_weights() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let s = SuperSpace::gl(m, n);
            for d in 1..=3 {
                for antisym in [false, true] {
                    let (_, hw) = symmetrizer_module(&s, d, antisym).unwrap();
                    assert_eq!(hw.weights, symmetrizer_weight(m, n, d, antisym), "({m},{n}) d={d} {antisym}");
                }
            }
        }
    }

    #[test]
    fn xi_eigenvalues() {
        let s = SuperSpace::gl(2, 1);
        for d in 1..=2 {
            let w = check_xi_gl(&s, d).unwrap();
            let u1 = Q1::from_ints(&[1, 1], &[0, 1]).unwrap();
            for (i, x) in w.iter().enumerate() {
                assert_eq!(*x, if i < d { u1.clone() } else { Q1::one() });
            }
        }
    }

    #[test]
    fn dimension_law() {
        for s in spaces() {
            for d in 1..=3 {
                let r = schur_sergeev(&s, d).unwrap();
                assert!(r.holds(), "{s} d={d}: {r:?}");
            }
        }
    }
}
