//! Symmetric group combinatorics, the group algebra, primitive idempotents,
//! and the graded action on tensor powers.

mod algebra;
mod idempotent;
mod perm;
mod tableau;

pub use algebra::GroupAlgElem;
pub use idempotent::{
    all_murphy, antisymmetrizer, fusion_bound_from_env, fusion_idempotent, fusion_idempotents, fusion_phi,
    jucys_murphy, murphy_idempotent, symmetrizer, FUSION_BOUND_ENV, FUSION_DEFAULT_BOUND, FUSION_HARD_MAX,
};
pub use perm::Perm;
pub use tableau::{hook_data, HookData, Partition, Tableau};

use crate::field::{Rational, Ring};
use crate::linalg::Matrix;
use crate::space::SuperSpace;

/// The graded action of a permutation on `V^{\otimes d}`: the factor in
/// position `k` moves to position `s(k)`, with the Koszul sign of every
/// pair of factors that cross.
pub fn permutation_operator<R: Ring>(space: &SuperSpace, s: &Perm) -> Matrix<R> {
    let d = s.degree();
    let inversions: Vec<(usize, usize)> = s.inversions().collect();
    let cols = (0..space.tensor_dim(d))
        .map(|col| {
            let x = space.decode(d, col);
            let mut y = vec![0; d];
            for (k, &xk) in x.iter().enumerate() {
                y[s.image(k)] = xk;
            }
            let odd = inversions.iter().filter(|&&(k, l)| space.is_odd(x[k]) && space.is_odd(x[l])).count() % 2 == 1;
            let c = if odd { R::one().neg() } else { R::one() };
            vec![(space.encode(&y), c)]
        })
        .collect();
    Matrix::from_columns(space.tensor_dim(d), cols)
}

/// Image of a group algebra element in `End(V^{\otimes d})`.
pub fn act_on_tensor(x: &GroupAlgElem<Rational>, space: &SuperSpace) -> Matrix<Rational> {
    let n = space.tensor_dim(x.degree());
    let mut acc = Matrix::zeros(n, n);
    for (s, c) in x.terms() {
        acc = acc.add(&permutation_operator::<Rational>(space, s).scale(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::space::permutation_p;

    #[test]
    fn transpositions_act_by_p() {
        for space in [SuperSpace::gl(1, 1), SuperSpace::gl(2, 1), SuperSpace::gl(1, 2)] {
            for a in 0..3 {
                for b in a + 1..3 {
                    let s = Perm::transposition(3, a, b);
                    let expect: Matrix<Rational> = permutation_p(&space, 3, a, b).unwrap();
                    assert_eq!(permutation_operator::<Rational>(&space, &s), expect);
                }
            }
        }
    }

    #[test]
    fn action_is_a_homomorphism() {
        let space = SuperSpace::gl(1, 2);
        let perms = Perm::all(3);
        for s in &perms {
            for t in &perms {
                let lhs = permutation_operator::<Rational>(&space, &s.compose(t));
                let rhs = permutation_operator::<Rational>(&space, s).mul(&permutation_operator(&space, t));
                assert_eq!(lhs, rhs);
            }
        }
        assert!(permutation_operator::<Rational>(&space, &Perm::identity(3)).is_identity());
    }

    #[test]
    fn antisymmetrizer_rank_is_binomial() {
        for m in 1..=4usize {
            for d in 1..=3usize {
                let a = act_on_tensor(&antisymmetrizer(d), &SuperSpace::gl(m, 0));
                let binom = (0..d).fold(1usize, |acc, k| acc * (m - k.min(m)) / (k + 1));
                let expect = if d > m { 0 } else { binom };
                assert_eq!(rank(&a), expect, "m={m} d={d}");
                assert_eq!(a.mul(&a), a);
            }
        }
    }
}
