//! Z2-graded index sets, graded tensor powers, and the operators `P`, `Q`
//! and the super-transposition.
//!
//! Indices are 0-based internally. For the orthosymplectic spaces the paper
//! labels run `1..=2n+2` (or `2..=2n+1` for the purely odd subspace), and
//! `label(i)` converts.

use std::fmt;

use serde::ser::SerializeStruct;

use crate::error::{Error, Result};
use crate::field::{sign, Q1, Rational, Ring};
use crate::linalg::{Matrix, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    /// `C^{m|n}`: the first `m` basis vectors even, the rest odd.
    Gl { m: usize, n: usize },
    /// `C^{2|2n}` with the orthosymplectic involution.
    Osp { n: usize },
    /// The odd subspace `C^{0|2n}` spanned by `e_2, ..., e_{2'}`.
    OspSub { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    kind: SpaceKind,
    odd: Vec<bool>,
}

impl SuperSpace {
    pub fn gl(m: usize, n: usize) -> Self {
        SuperSpace { kind: SpaceKind::Gl { m, n }, odd: (0..m + n).map(|i| i >= m).collect() }
    }

    pub fn osp(n: usize) -> Self {
        let dim = 2 * n + 2;
        SuperSpace { kind: SpaceKind::Osp { n }, odd: (0..dim).map(|i| i != 0 && i != dim - 1).collect() }
    }

    pub fn osp_sub(n: usize) -> Self {
        SuperSpace { kind: SpaceKind::OspSub { n }, odd: vec![true; 2 * n] }
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.odd.len()
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.odd[i]
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.odd[i] as u8
    }

    pub fn is_osp(&self) -> bool {
        !matches!(self.kind, SpaceKind::Gl { .. })
    }

    /// The rank parameter `n` of an orthosymplectic space.
    pub fn osp_rank(&self) -> Result<usize> {
        match self.kind {
            SpaceKind::Osp { n } | SpaceKind::OspSub { n } => Ok(n),
            SpaceKind::Gl { .. } => Err(self.wrong_kind("orthosymplectic")),
        }
    }

    pub(crate) fn wrong_kind(&self, expected: &'static str) -> Error {
        Error::WrongSpaceKind { expected, found: self.to_string() }
    }

    /// The involution `i -> i'`.
    pub fn prime(&self, i: usize) -> usize {
        debug_assert!(self.is_osp(), "prime on a gl space");
        self.dim() - 1 - i
    }

    /// `tau_i` as `+1` or `-1`.
    pub fn tau(&self, i: usize) -> i64 {
        match self.kind {
            SpaceKind::Osp { n } => {
                if i <= n || i == 2 * n + 1 {
                    1
                } else {
                    -1
                }
            }
            SpaceKind::OspSub { n } => {
                if i < n {
                    1
                } else {
                    -1
                }
            }
            SpaceKind::Gl { .. } => 1,
        }
    }

    /// The value of `kappa` in the R-matrix.
    pub fn kappa(&self) -> Result<Rational> {
        match self.kind {
            SpaceKind::Osp { n } => Ok(Rational::from_int(-(n as i64))),
            SpaceKind::OspSub { n } => Ok(Rational::from_int(-(n as i64) - 1)),
            SpaceKind::Gl { .. } => Err(self.wrong_kind("orthosymplectic")),
        }
    }

    /// Label used in the paper's notation.
    pub fn label(&self, i: usize) -> usize {
        match self.kind {
            SpaceKind::OspSub { .. } => i + 2,
            _ => i + 1,
        }
    }

    pub fn index_of_label(&self, label: usize) -> Result<usize> {
        let offset = if matches!(self.kind, SpaceKind::OspSub { .. }) { 2 } else { 1 };
        label
            .checked_sub(offset)
            .filter(|&i| i < self.dim())
            .ok_or_else(|| Error::IndexOutOfRange(format!("label {label} in {self}")))
    }

    /// Number of basis vectors of the `d`-th tensor power.
    pub fn tensor_dim(&self, d: usize) -> usize {
        self.dim().pow(d as u32)
    }

    /// Flat index of a basis tuple, lexicographic with site 0 most significant.
    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &i| acc * self.dim() + i)
    }

    pub fn decode(&self, d: usize, mut idx: usize) -> Vec<usize> {
        let n = self.dim();
        let mut t = vec![0; d];
        for slot in t.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        t
    }

    /// Total parity of a basis tuple.
    pub fn tuple_parity(&self, tuple: &[usize]) -> u8 {
        tuple.iter().fold(0, |p, &i| p ^ self.parity(i))
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SpaceKind::Gl { m, n } => write!(f, "gl({m}|{n})"),
            SpaceKind::Osp { n } => write!(f, "osp(2|{})", 2 * n),
            SpaceKind::OspSub { n } => write!(f, "osp(0|{})", 2 * n),
        }
    }
}

/// A pure tensor of matrix units `e_{i j}` placed at the given sites.
#[derive(Clone, Copy, Debug)]
pub struct Unit {
    pub site: usize,
    pub i: usize,
    pub j: usize,
}

/// Applies a pure tensor of matrix units (sites strictly increasing) to a
/// basis tuple. Returns the image tuple and whether the Koszul sign is odd,
/// or `None` if the image vanishes.
pub fn apply_units(space: &SuperSpace, units: &[Unit], x: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut y = x.to_vec();
    let mut odd = false;
    let mut prefix = 0u8;
    let mut next = 0;
    for (s, &xs) in x.iter().enumerate() {
        if let Some(u) = units.get(next).filter(|u| u.site == s) {
            if xs != u.j {
                return None;
            }
            let p = space.parity(u.i) ^ space.parity(u.j);
            odd ^= (p & prefix) == 1;
            y[s] = u.i;
            next += 1;
        }
        prefix ^= space.parity(xs);
    }
    Some((y, odd))
}

/// An operator on `V^{\otimes d}` with its space and degree attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator<R> {
    pub space: SuperSpace,
    pub d: usize,
    pub matrix: Matrix<R>,
}

impl<R: Ring> Operator<R> {
    pub fn new(space: SuperSpace, d: usize, matrix: Matrix<R>) -> Self {
        debug_assert_eq!(matrix.ncols(), space.tensor_dim(d));
        Operator { space, d, matrix }
    }
}

impl<R: Ring + serde::Serialize> serde::Serialize for Operator<R> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Operator", 3)?;
        st.serialize_field("space", &self.space.to_string())?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("rows", &self.matrix.to_dense())?;
        st.end()
    }
}

fn check_sites(d: usize, a: usize, b: usize) -> Result<()> {
    if a < b && b < d {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(format!("sites ({a}, {b}) for tensor degree {d}")))
    }
}

/// `sum c * e_{ij} (site a) (x) e_{kl} (site b)` from terms `(i, j, k, l, c)`.
pub fn two_site_operator<R: Ring>(
    space: &SuperSpace,
    d: usize,
    a: usize,
    b: usize,
    terms: &[(usize, usize, usize, usize, i64)],
) -> Result<Matrix<R>> {
    check_sites(d, a, b)?;
    let n = space.dim();
    let mut by_input: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); n * n];
    for &(i, j, k, l, c) in terms {
        if c != 0 {
            by_input[j * n + l].push((i, k, c));
        }
    }
    let cols = (0..space.tensor_dim(d))
        .map(|col| {
            let x = space.decode(d, col);
            let mut out = Vec::new();
            for &(i, k, c) in &by_input[x[a] * n + x[b]] {
                let units = [Unit { site: a, i, j: x[a] }, Unit { site: b, i: k, j: x[b] }];
                let (y, odd) = apply_units(space, &units, &x).expect("matching inputs");
                let c = if odd { -c } else { c };
                out.push((space.encode(&y), R::from_int(c)));
            }
            out
        })
        .collect();
    Ok(Matrix::from_columns(space.tensor_dim(d), cols))
}

/// Embeds a one-site operator (an `N x N` matrix) at site `a`.
pub fn single_site_operator<R: Ring>(space: &SuperSpace, d: usize, a: usize, m: &Matrix<R>) -> Result<Matrix<R>> {
    if a >= d {
        return Err(Error::IndexOutOfRange(format!("site {a} for tensor degree {d}")));
    }
    let cols = (0..space.tensor_dim(d))
        .map(|col| {
            let x = space.decode(d, col);
            m.column(x[a])
                .iter()
                .map(|(i, c)| {
                    let (y, odd) =
                        apply_units(space, &[Unit { site: a, i: *i, j: x[a] }], &x).expect("matching input");
                    (space.encode(&y), if odd { c.neg() } else { c.clone() })
                })
                .collect()
        })
        .collect();
    Ok(Matrix::from_columns(space.tensor_dim(d), cols))
}

/// The graded permutation `P_ab = sum e_ij (x) e_ji (-1)^{p(j)}` at sites `a < b`.
pub fn permutation_p<R: Ring>(space: &SuperSpace, d: usize, a: usize, b: usize) -> Result<Matrix<R>> {
    let n = space.dim();
    let mut terms = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            terms.push((i, j, j, i, if space.is_odd(j) { -1 } else { 1 }));
        }
    }
    two_site_operator(space, d, a, b, &terms)
}

/// `Q = sum e_ij (x) e_{i'j'} (-1)^{p(i)p(j)} tau_i tau_j` at sites `a < b`.
pub fn operator_q_osp<R: Ring>(space: &SuperSpace, d: usize, a: usize, b: usize) -> Result<Matrix<R>> {
    if !space.is_osp() {
        return Err(space.wrong_kind("orthosymplectic"));
    }
    let n = space.dim();
    let mut terms = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let s = if space.is_odd(i) && space.is_odd(j) { -1 } else { 1 };
            terms.push((i, j, space.prime(i), space.prime(j), s * space.tau(i) * space.tau(j)));
        }
    }
    two_site_operator(space, d, a, b, &terms)
}

/// `Q = sum e_ij (x) e_ij (-1)^{p(i)+p(j)+p(i)p(j)}` at sites `a < b`.
pub fn operator_q_gl<R: Ring>(space: &SuperSpace, d: usize, a: usize, b: usize) -> Result<Matrix<R>> {
    if space.is_osp() {
        return Err(space.wrong_kind("general linear"));
    }
    let n = space.dim();
    let mut terms = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (pi, pj) = (space.parity(i), space.parity(j));
            let odd = (pi + pj + pi * pj) % 2 == 1;
            terms.push((i, j, i, j, if odd { -1 } else { 1 }));
        }
    }
    two_site_operator(space, d, a, b, &terms)
}

/// The super-transposition `e_ij -> e_{j'i'} (-1)^{p(i)p(j)+p(i)} tau_i tau_j`
/// on one-site operators.
pub fn super_transpose<R: Ring>(space: &SuperSpace, m: &Matrix<R>) -> Result<Matrix<R>> {
    if !space.is_osp() {
        return Err(space.wrong_kind("orthosymplectic"));
    }
    let n = space.dim();
    if m.nrows() != n || m.ncols() != n {
        return Err(Error::InvalidInput("super-transposition needs a one-site operator".into()));
    }
    let mut cols: Vec<Vec<(usize, R)>> = vec![Vec::new(); n];
    for (i, j, x) in m.entries() {
        let (pi, pj) = (space.parity(i), space.parity(j));
        let odd = (pi * pj + pi) % 2 == 1;
        let s = sign::<R>(odd).scale(&Rational::from_int(space.tau(i) * space.tau(j)));
        cols[space.prime(i)].push((space.prime(j), x.mul(&s)));
    }
    Ok(Matrix::from_columns(n, cols))
}

/// One-site matrix unit `e_ij`.
pub fn matrix_unit<R: Ring>(space: &SuperSpace, i: usize, j: usize) -> Matrix<R> {
    let mut cols = vec![Vec::new(); space.dim()];
    cols[j].push((i, R::one()));
    Matrix::from_columns(space.dim(), cols)
}

/// Basis vector of a tensor power as a sparse vector.
pub fn basis_vector<R: Ring>(space: &SuperSpace, tuple: &[usize]) -> SparseVec<R> {
    vec![(space.encode(tuple), R::one())]
}

/// Common kernel of operators with entries rational in `u`, as vectors over
/// the rationals annihilated for every value of `u`.
///
/// Each row is scaled by the lcm of its denominators and every coefficient
/// of the resulting polynomial row becomes a linear equation.
pub fn kernel_over_field(ops: &[&Matrix<Q1>]) -> Result<Vec<Vec<Rational>>> {
    let Some(first) = ops.first() else {
        return Err(Error::InvalidInput("empty operator list".into()));
    };
    let ncols = first.ncols();
    let mut eqs: Vec<SparseVec<Rational>> = Vec::new();
    for op in ops {
        if op.ncols() != ncols {
            return Err(Error::InvalidInput("operators with different domains".into()));
        }
        for row in op.rows() {
            if row.is_empty() {
                continue;
            }
            let mut l = crate::field::Poly::<Rational>::one();
            for (_, f) in &row {
                let g = l.gcd(f.den());
                l = l.mul(&f.den().div_exact(&g)?);
            }
            let polys: Vec<(usize, crate::field::Poly<Rational>)> =
                row.iter().map(|(j, f)| (*j, f.num().mul(&l.div_exact(f.den()).expect("lcm")))).collect();
            let deg = polys.iter().filter_map(|(_, p)| p.degree()).max().unwrap_or(0);
            for k in 0..=deg {
                let eq: SparseVec<Rational> = polys
                    .iter()
                    .filter_map(|(j, p)| {
                        let c = p.coeff(k);
                        (!c.is_zero()).then_some((*j, c))
                    })
                    .collect();
                if !eq.is_empty() {
                    eqs.push(eq);
                }
            }
        }
    }
    Ok(crate::linalg::rref_sparse(&eqs, ncols).kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::to_sparse;

    type M = Matrix<Rational>;

    fn vec_of(space: &SuperSpace, t: &[usize]) -> SparseVec<Rational> {
        basis_vector(space, t)
    }

    #[test]
    fn gl11_permutation_examples() {
        let s = SuperSpace::gl(1, 1);
        let p: M = permutation_p(&s, 2, 0, 1).unwrap();
        assert_eq!(p.apply(&vec_of(&s, &[0, 1])), vec_of(&s, &[1, 0]));
        assert_eq!(p.apply(&vec_of(&s, &[1, 1])), vec![(3, Rational::from_int(-1))]);
        assert!(p.mul(&p).is_identity());
    }

    #[test]
    fn osp_permutation_even_case() {
        let s = SuperSpace::osp(1);
        let p: M = permutation_p(&s, 2, 0, 1).unwrap();
        assert_eq!(p.apply(&vec_of(&s, &[0, 0])), vec_of(&s, &[0, 0]));
    }

    #[test]
    fn q_osp_on_e1_e1prime() {
        // Expanding the sum: only j = 1' contributes, sending e_1 (x) e_1' to
        // sum_i tau_i tau_1' (-1)^{p(i) p(1')} e_i (x) e_i' with a Koszul sign.
        let s = SuperSpace::osp(1);
        let q: M = operator_q_osp(&s, 2, 0, 1).unwrap();
        let out = q.apply(&vec_of(&s, &[0, 3]));
        let expect: SparseVec<Rational> = (0..4)
            .map(|i| {
                let t = s.tau(i) * s.tau(3);
                (s.encode(&[i, s.prime(i)]), Rational::from_int(t))
            })
            .collect();
        assert_eq!(out, crate::linalg::normalize_sparse(expect));
        // Q^2 = (sdim) Q with sdim = 2 - 2n.
        assert_eq!(q.mul(&q), q.scale(&Rational::from_int(0)));
        let s2 = SuperSpace::osp(2);
        let q2: M = operator_q_osp(&s2, 2, 0, 1).unwrap();
        assert_eq!(q2.mul(&q2), q2.scale(&Rational::from_int(-2)));
    }

    #[test]
    fn sub_space_operators_match_modified_expressions() {
        let s = SuperSpace::osp_sub(2);
        let n = s.dim();
        let mut pt = Vec::new();
        let mut qt = Vec::new();
        for i in 0..n {
            for j in 0..n {
                pt.push((i, j, j, i, -1));
                qt.push((i, j, s.prime(i), s.prime(j), -s.tau(i) * s.tau(j)));
            }
        }
        let p: M = permutation_p(&s, 2, 0, 1).unwrap();
        let q: M = operator_q_osp(&s, 2, 0, 1).unwrap();
        assert_eq!(p, two_site_operator(&s, 2, 0, 1, &pt).unwrap());
        assert_eq!(q, two_site_operator(&s, 2, 0, 1, &qt).unwrap());
        assert_eq!(s.kappa().unwrap(), Rational::from_int(-3));
    }

    #[test]
    fn q_gl_and_p_relations() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let s = SuperSpace::gl(m, n);
            let p: M = permutation_p(&s, 2, 0, 1).unwrap();
            let q: M = operator_q_gl(&s, 2, 0, 1).unwrap();
            let sdim = Rational::from_int(m as i64 - n as i64);
            assert_eq!(q.mul(&q), q.scale(&sdim));
            let tr = (0..p.ncols()).fold(Rational::ZERO, |a, k| a.add(&p.get(k, k)));
            assert_eq!(tr, sdim);
        }
        assert!(operator_q_gl::<Rational>(&SuperSpace::osp(1), 2, 0, 1).is_err());
        assert!(operator_q_osp::<Rational>(&SuperSpace::gl(1, 1), 2, 0, 1).is_err());
    }

    #[test]
    fn symmetric_group_relations() {
        for s in [SuperSpace::gl(1, 1), SuperSpace::gl(2, 1), SuperSpace::osp(1)] {
            let d = if s.dim() > 3 { 3 } else { 4 };
            let p = |a, b| permutation_p::<Rational>(&s, d, a, b).unwrap();
            for a in 0..d {
                for b in a + 1..d {
                    assert!(p(a, b).mul(&p(a, b)).is_identity());
                }
            }
            for a in 0..d - 2 {
                let (x, y) = (p(a, a + 1), p(a + 1, a + 2));
                assert_eq!(x.mul(&y).mul(&x), y.mul(&x).mul(&y));
            }
            if d == 4 {
                assert_eq!(p(0, 1).mul(&p(2, 3)), p(2, 3).mul(&p(0, 1)));
            }
            // P_13 = P_12 P_23 P_12
            assert_eq!(p(0, 2), p(0, 1).mul(&p(1, 2)).mul(&p(0, 1)));
        }
    }

    #[test]
    fn super_transpose_properties() {
        let s = SuperSpace::osp(2);
        let e11: M = matrix_unit(&s, 0, 0);
        assert_eq!(super_transpose(&s, &e11).unwrap(), matrix_unit(&s, 5, 5));
        let id = M::identity(6);
        assert_eq!(super_transpose(&s, &id).unwrap(), id);
        for i in 0..6 {
            for j in 0..6 {
                let a: M = matrix_unit(&s, i, j);
                let t = super_transpose(&s, &a).unwrap();
                assert_eq!(super_transpose(&s, &t).unwrap(), a);
                for k in 0..6 {
                    for l in 0..6 {
                        let b: M = matrix_unit(&s, k, l);
                        let lhs = super_transpose(&s, &a.mul(&b)).unwrap();
                        let rhs = super_transpose(&s, &b).unwrap().mul(&t);
                        let graded = (s.parity(i) ^ s.parity(j)) & (s.parity(k) ^ s.parity(l)) == 1;
                        let rhs = if graded { rhs.neg() } else { rhs };
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_of_p_minus_one_is_symmetric_square() {
        let s = SuperSpace::gl(2, 0);
        let p: M = permutation_p(&s, 2, 0, 1).unwrap();
        let ker = crate::linalg::common_kernel(&[&p.sub(&M::identity(4))]).unwrap();
        assert_eq!(ker.len(), 3);
        for v in ker {
            assert_eq!(p.apply(&to_sparse(&v)), to_sparse(&v));
        }
    }

    #[test]
    fn kernel_of_rational_family() {
        // (1 + 1/u) e_11 + 1/(u-1) e_12 has no constant kernel vector
        let a = Q1::from_ints(&[1, 1], &[0, 1]).unwrap();
        let b = Q1::from_ints(&[1], &[-1, 1]).unwrap();
        let m = Matrix::from_dense(&[vec![a, b], vec![Q1::zero(), Q1::zero()]]);
        assert!(kernel_over_field(&[&m]).unwrap().is_empty());
        let z = Matrix::<Q1>::zeros(2, 2);
        assert_eq!(kernel_over_field(&[&z]).unwrap().len(), 2);
        let c = Q1::from_ints(&[1], &[0, 1]).unwrap();
        let m = Matrix::from_dense(&[vec![c.clone(), c.neg()], vec![Q1::zero(), Q1::zero()]]);
        let k = kernel_over_field(&[&m]).unwrap();
        assert_eq!(k, vec![vec![Rational::ONE, Rational::ONE]]);
    }

    #[test]
    fn labels_and_tau() {
        let s = SuperSpace::osp(2);
        assert_eq!((0..6).map(|i| s.tau(i)).collect::<Vec<_>>(), vec![1, 1, 1, -1, -1, 1]);
        assert_eq!(s.label(s.prime(0)), 6);
        for i in 0..6 {
            let expect = s.tau(i) * if s.is_odd(i) { -1 } else { 1 };
            assert_eq!(s.tau(s.prime(i)), expect);
        }
        let t = SuperSpace::osp_sub(2);
        assert_eq!(t.label(0), 2);
        assert_eq!((0..4).map(|i| t.tau(i)).collect::<Vec<_>>(), vec![1, 1, -1, -1]);
        assert_eq!(t.index_of_label(5).unwrap(), 3);
    }
}
