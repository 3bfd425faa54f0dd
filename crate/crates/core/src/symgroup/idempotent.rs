use super::{GroupAlgElem, Partition, Perm, Tableau};
use crate::error::{Error, Result};
use crate::field::{Rational, Ring, TowerLevel, Q2, Q3, Q4, Q5, Q6};

/// Largest `d` for which the fusion procedure is ever attempted.
pub const FUSION_HARD_MAX: usize = 6;
/// Default cap on `d` for the fusion procedure.
pub const FUSION_DEFAULT_BOUND: usize = 4;
/// Environment variable overriding the default fusion cap.
pub const FUSION_BOUND_ENV: &str = "SUPERYANG_FUSION_BOUND";

/// The fusion cap from the environment, falling back to the default.
pub fn fusion_bound_from_env() -> Result<usize> {
    match std::env::var(FUSION_BOUND_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("{FUSION_BOUND_ENV}={v:?} is not a number"))),
        Err(_) => Ok(FUSION_DEFAULT_BOUND),
    }
}

/// Jucys-Murphy element `x_a = (1 a) + ... + (a-1 a)`, with `a` 1-based.
pub fn jucys_murphy<R: Ring>(a: usize, d: usize) -> Result<GroupAlgElem<R>> {
    if a == 0 || a > d {
        return Err(Error::IndexOutOfRange(format!("Jucys-Murphy index {a} for S_{d}")));
    }
    let mut x = GroupAlgElem::zero(d);
    for b in 0..a - 1 {
        x.add_term(Perm::transposition(d, b, a - 1), R::one());
    }
    Ok(x)
}

/// Primitive idempotent `e_U` by Murphy's recursion on the largest entry.
pub fn murphy_idempotent(u: &Tableau) -> GroupAlgElem<Rational> {
    let d = u.size();
    if d <= 1 {
        return GroupAlgElem::identity(d);
    }
    let v = u.remove_last();
    let mut e = murphy_idempotent(&v).extend(d);
    let c = u.content(d);
    let alpha = u.position(d);
    let xd = jucys_murphy::<Rational>(d, d).expect("valid index");
    let one = GroupAlgElem::<Rational>::identity(d);
    for (i, j) in v.shape().addable() {
        if (i, j) == alpha {
            continue;
        }
        let a = j as i64 - i as i64;
        let factor = xd
            .sub(&one.scale(&Rational::from_int(a)))
            .scale(&Rational::new(1, c - a).expect("distinct contents"));
        e = e.mul(&factor);
    }
    e
}

/// `(1/d!) sum s`.
pub fn symmetrizer(d: usize) -> GroupAlgElem<Rational> {
    averaged(d, false)
}

/// `(1/d!) sum sgn(s) s`.
pub fn antisymmetrizer(d: usize) -> GroupAlgElem<Rational> {
    averaged(d, true)
}

fn averaged(d: usize, signed: bool) -> GroupAlgElem<Rational> {
    let all = Perm::all(d);
    let w = Rational::new(1, all.len() as i64).expect("nonzero");
    let mut e = GroupAlgElem::zero(d);
    for s in all {
        let c = if signed && s.is_odd() { w.neg() } else { w.clone() };
        e.add_term(s, c);
    }
    e
}

/// `phi(u_1, ..., u_d) = prod_{a<b} (1 - (a b)/(u_a - u_b))`, pairs in
/// lexicographic order, with `u_1` the outermost tower variable.
pub fn fusion_phi<F: TowerLevel>(d: usize) -> Result<GroupAlgElem<F>> {
    if F::DEPTH != d {
        return Err(Error::InvalidInput(format!("tower depth {} for d = {d}", F::DEPTH)));
    }
    let vars: Vec<F> = (0..d).map(F::variable).collect::<Result<_>>()?;
    let mut phi = GroupAlgElem::<F>::identity(d);
    for a in 0..d {
        for b in a + 1..d {
            let w = vars[a].sub(&vars[b]).inv()?.neg();
            let mut factor = GroupAlgElem::identity(d);
            factor.add_term(Perm::transposition(d, a, b), w);
            phi = phi.mul(&factor);
        }
    }
    Ok(phi)
}

/// Consecutive evaluation of `phi` at `u_a = c_a`, starting at variable
/// `k`, given `acc` = the partially evaluated product of the factors whose
/// first index is below `k`.
///
/// The factors with first index above `k` do not involve `u_k` and are
/// invertible, so `u_k` may be substituted before they are multiplied in.
fn consecutive<F: TowerLevel>(
    acc: GroupAlgElem<F>,
    k: usize,
    point: &[Rational],
) -> Result<GroupAlgElem<Rational>> {
    let d = acc.degree();
    let mut out_terms = Vec::new();
    if F::DEPTH == 0 {
        for (s, c) in acc.terms() {
            out_terms.push((s.clone(), c.evaluate(&[])?));
        }
    } else {
        let vars: Vec<F> = (0..F::DEPTH).map(F::variable).collect::<Result<_>>()?;
        let mut acc = acc;
        for b in k + 1..d {
            let w = vars[0].sub(&vars[b - k]).inv()?.neg();
            let mut factor = GroupAlgElem::identity(d);
            factor.add_term(Perm::transposition(d, k, b), w);
            acc = acc.mul(&factor);
        }
        let mut lower = GroupAlgElem::<F::Lower>::zero(d);
        for (s, c) in acc.terms() {
            lower.add_term(s.clone(), c.substitute_outer(&point[k])?);
        }
        return consecutive(lower, k + 1, point);
    }
    let mut out = GroupAlgElem::zero(d);
    for (s, c) in out_terms {
        out.add_term(s, c);
    }
    Ok(out)
}

fn fusion_batch<F: TowerLevel>(d: usize, tableaux: &[Tableau]) -> Result<Vec<GroupAlgElem<Rational>>> {
    tableaux
        .iter()
        .map(|u| {
            let point: Vec<Rational> = u.contents().into_iter().map(Rational::from_int).collect();
            let e = consecutive(GroupAlgElem::<F>::identity(d), 0, &point)?;
            let h = Rational::from_int(u.shape().hook_length_product() as i64);
            Ok(e.scale(&h.inv()?))
        })
        .collect()
}

/// Idempotents of tableaux of one size by the fusion procedure: consecutive
/// evaluation of `phi` at `u_a = c_a`, divided by the hook length product.
///
pub fn fusion_idempotents(tableaux: &[Tableau], bound: usize) -> Result<Vec<GroupAlgElem<Rational>>> {
    let Some(first) = tableaux.first() else {
        return Ok(Vec::new());
    };
    let d = first.size();
    if tableaux.iter().any(|t| t.size() != d) {
        return Err(Error::InvalidInput("tableaux of different sizes".into()));
    }
    let cap = bound.min(FUSION_HARD_MAX);
    if d > cap {
        return Err(Error::BoundExceeded(format!(
            "fusion procedure for d = {d} exceeds the cap {cap} (hard maximum {FUSION_HARD_MAX})"
        )));
    }
    match d {
        0 | 1 => Ok(tableaux.iter().map(|_| GroupAlgElem::identity(d)).collect()),
        2 => fusion_batch::<Q2>(d, tableaux),
        3 => fusion_batch::<Q3>(d, tableaux),
        4 => fusion_batch::<Q4>(d, tableaux),
        5 => fusion_batch::<Q5>(d, tableaux),
        6 => fusion_batch::<Q6>(d, tableaux),
        _ => unreachable!("capped above"),
    }
}

pub fn fusion_idempotent(u: &Tableau, bound: usize) -> Result<GroupAlgElem<Rational>> {
    Ok(fusion_idempotents(std::slice::from_ref(u), bound)?.remove(0))
}

/// Idempotents of every standard tableau of every shape of size `d`.
pub fn all_murphy(d: usize) -> Vec<(Partition, Vec<(Tableau, GroupAlgElem<Rational>)>)> {
    Partition::all(d)
        .into_iter()
        .map(|shape| {
            let ts = Tableau::standard(&shape).into_iter().map(|t| {
                let e = murphy_idempotent(&t);
                (t, e)
            });
            (shape.clone(), ts.collect())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn half(sign: i64) -> GroupAlgElem<Rational> {
        let h = Rational::new(1, 2).unwrap();
        let mut e = GroupAlgElem::zero(2);
        e.add_term(Perm::identity(2), h.clone());
        e.add_term(Perm::transposition(2, 0, 1), h.mul(&Rational::from_int(sign)));
        e
    }

    #[test]
    fn jucys_murphy_examples() {
        assert!(jucys_murphy::<Rational>(1, 3).unwrap().is_zero());
        let x2 = jucys_murphy::<Rational>(2, 2).unwrap();
        assert_eq!(x2, GroupAlgElem::basis(Perm::transposition(2, 0, 1)));
        let x3 = jucys_murphy::<Rational>(3, 3).unwrap();
        assert_eq!(x3.terms().len(), 2);
        assert!(jucys_murphy::<Rational>(4, 3).is_err());
    }

    #[test]
    fn murphy_small_cases() {
        assert_eq!(murphy_idempotent(&t("1;2")), half(-1));
        assert_eq!(murphy_idempotent(&t("1,2")), half(1));
        assert_eq!(symmetrizer(2), half(1));
        assert_eq!(antisymmetrizer(2), half(-1));
        assert_eq!(symmetrizer(1), GroupAlgElem::identity(1));
        let a = murphy_idempotent(&t("1,2;3"));
        let b = murphy_idempotent(&t("1,3;2"));
        assert_eq!(a.mul(&a), a);
        assert_eq!(b.mul(&b), b);
        assert!(a.mul(&b).is_zero());
        assert!(b.mul(&a).is_zero());
    }

    #[test]
    fn idempotents_resolve_identity() {
        for d in 1..=4 {
            let mut sum = GroupAlgElem::zero(d);
            for (_, ts) in all_murphy(d) {
                for (_, e) in ts {
                    sum = sum.add(&e);
                }
            }
            assert_eq!(sum, GroupAlgElem::identity(d));
        }
    }

    #[test]
    fn averaging_property() {
        let h = symmetrizer(3);
        let a = antisymmetrizer(3);
        for s in Perm::all(3) {
            let g = GroupAlgElem::basis(s.clone());
            assert_eq!(g.mul(&h), h);
            let sg = if s.is_odd() { a.neg() } else { a.clone() };
            assert_eq!(g.mul(&a), sg);
        }
        assert_eq!(h.mul(&h), h);
        assert_eq!(a.mul(&a), a);
    }

    #[test]
    fn fusion_small_cases() {
        assert_eq!(fusion_idempotent(&t("1,2"), 4).unwrap(), half(1));
        assert_eq!(fusion_idempotent(&t("1;2"), 4).unwrap(), half(-1));
        let u = t("1,2;3");
        assert_eq!(u.contents(), vec![0, 1, -1]);
        assert_eq!(fusion_idempotent(&u, 4).unwrap(), murphy_idempotent(&u));
    }

    #[test]
    fn fusion_phi_at_first_substitution() {
        // phi for d = 2 at u1 = 0, u2 = 1 is 1 + (1 2)
        let phi = fusion_phi::<Q2>(2).unwrap();
        let pt = [Rational::ZERO, Rational::ONE];
        let vals: Vec<Rational> = phi.terms().values().map(|c| c.evaluate(&pt).unwrap()).collect();
        assert_eq!(vals, vec![Rational::ONE, Rational::ONE]);
    }

    #[test]
    fn factored_evaluation_matches_full_product() {
        let phi = fusion_phi::<Q3>(3).unwrap();
        for shape in Partition::all(3) {
            for u in Tableau::standard(&shape) {
                let point: Vec<Rational> = u.contents().into_iter().map(Rational::from_int).collect();
                let h = Rational::from_int(shape.hook_length_product() as i64).inv().unwrap();
                let mut full = GroupAlgElem::zero(3);
                for (s, c) in phi.terms() {
                    full.add_term(s.clone(), c.evaluate(&point).unwrap().mul(&h));
                }
                assert_eq!(fusion_idempotent(&u, 4).unwrap(), full, "{u}");
            }
        }
    }

    #[test]
    fn fusion_matches_murphy_up_to_four() {
        for d in 2..=4 {
            for (_, ts) in all_murphy(d) {
                let tabs: Vec<Tableau> = ts.iter().map(|(t, _)| t.clone()).collect();
                let fused = fusion_idempotents(&tabs, 4).unwrap();
                for ((t, e), f) in ts.iter().zip(&fused) {
                    assert_eq!(e, f, "{t}");
                }
            }
        }
    }

    #[test]
    fn fusion_respects_bound() {
        let u = Tableau::row_reading(&"5".parse().unwrap());
        assert!(matches!(fusion_idempotent(&u, 4), Err(Error::BoundExceeded(_))));
        let u = Tableau::row_reading(&"4,3".parse().unwrap());
        assert!(matches!(fusion_idempotent(&u, 10), Err(Error::BoundExceeded(_))));
    }
}
