use proptest::collection::vec;
use proptest::prelude::*;

use superyang::drinfeld::{self, DrinfeldTuple};
use superyang::field::{rational_roots, Field, Poly, Rational, Ring, Q1};
use superyang::space::SuperSpace;
use superyang::symgroup::Perm;
use superyang::yangian::{gl, osp, rtt_check, RMatrix};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn small_root() -> impl Strategy<Value = Rational> {
    (-6i64..=6, prop_oneof![Just(1i64), Just(2), Just(3)]).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    vec(rational(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

fn ratfun() -> impl Strategy<Value = Q1> {
    (poly(3), poly(2)).prop_filter_map("nonzero denominator", |(n, d)| Q1::new(n, d).ok())
}

fn monic_split(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    vec(small_root(), 0..=max_deg).prop_map(|r| Poly::from_roots(&r))
}

fn tuple(n: usize) -> impl Strategy<Value = DrinfeldTuple> {
    (monic_split(2), monic_split(2), vec(monic_split(2), n))
        .prop_map(|(a, b, p)| DrinfeldTuple::new(a, b, p).unwrap())
}

fn perm5() -> impl Strategy<Value = Vec<usize>> {
    Just((0..5).collect::<Vec<usize>>()).prop_shuffle()
}

fn sorted(mut roots: Vec<Rational>) -> Vec<Rational> {
    roots.sort();
    roots
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.sub(&a), Rational::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Rational::ONE);
        }
    }

    #[test]
    fn ratfun_field_axioms(f in ratfun(), g in ratfun(), h in ratfun()) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.add(&g).sub(&g), f.clone());
        if !f.is_zero() {
            prop_assert_eq!(f.mul(&f.inv().unwrap()), Q1::one());
        }
        // canonical form: monic denominator, no common factor
        prop_assert!(f.den().is_monic());
        prop_assert!(f.num().gcd(f.den()).degree().unwrap_or(0) == 0);
    }

    #[test]
    fn shift_is_an_additive_action_by_ring_maps(f in ratfun(), g in ratfun(), a in rational(), b in rational()) {
        prop_assert_eq!(f.shift_by(&a).shift_by(&b), f.shift_by(&a.add(&b)));
        prop_assert_eq!(f.mul(&g).shift_by(&a), f.shift_by(&a).mul(&g.shift_by(&a)));
        prop_assert_eq!(f.shift_by(&Rational::ZERO), f);
    }

    #[test]
    fn roots_reconstruct_split_polynomials(roots in vec(small_root(), 0..6), c in rational()) {
        prop_assume!(!c.is_zero());
        let p = Poly::from_roots(&roots).scale(&c);
        let fac = rational_roots(&p);
        let found: Vec<Rational> = fac.roots.iter().flat_map(|(r, m)| std::iter::repeat(r.clone()).take(*m)).collect();
        prop_assert_eq!(found, sorted(roots));
        prop_assert_eq!(fac.expand(), p);
    }

    #[test]
    fn gcd_matches_common_roots(a in vec(small_root(), 0..4), b in vec(small_root(), 0..4), common in vec(small_root(), 0..3)) {
        let pa = Poly::from_roots(&[a.clone(), common.clone()].concat());
        let pb = Poly::from_roots(&[b.clone(), common.clone()].concat());
        let g = pa.gcd(&pb).monic();
        prop_assert!(pa.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(pb.div_rem(&g).unwrap().1.is_zero());
        // the cofactors are coprime
        let (qa, qb) = (pa.div_exact(&g).unwrap(), pb.div_exact(&g).unwrap());
        prop_assert_eq!(qa.gcd(&qb).degree(), Some(0));
    }

    #[test]
    fn shift_solver_is_self_inverse(p in monic_split(4), step in prop_oneof![Just(1i64), Just(2)]) {
        let step = Rational::from_int(step);
        let ratio = drinfeld::shift_ratio(&p, &step).unwrap();
        prop_assert_eq!(drinfeld::solve_shift(&ratio, &step).unwrap(), p);
    }

    #[test]
    fn transition_is_associative_with_unit(a in tuple(2), b in tuple(2), c in tuple(2)) {
        let t = |x: &DrinfeldTuple, y: &DrinfeldTuple| drinfeld::tensor_transition(x, y).unwrap();
        prop_assert_eq!(t(&t(&a, &b), &c), t(&a, &t(&b, &c)));
        prop_assert_eq!(t(&a, &b), t(&b, &a));
        let reduced = t(&a, &DrinfeldTuple::trivial(2));
        prop_assert_eq!(t(&reduced, &DrinfeldTuple::trivial(2)), reduced);
    }

    #[test]
    fn transition_multiplies_weights(a in tuple(2), b in tuple(2)) {
        let w = |x: &DrinfeldTuple| drinfeld::weight_from_drinfeld(x).unwrap();
        let prod: Vec<Q1> = w(&a).iter().zip(w(&b)).map(|(x, y)| x.mul(&y)).collect();
        prop_assert_eq!(w(&drinfeld::tensor_transition(&a, &b).unwrap()), prod);
    }

    #[test]
    fn weight_roundtrip(t in tuple(3)) {
        let t = drinfeld::tensor_transition(&t, &DrinfeldTuple::trivial(3)).unwrap();
        let w = drinfeld::weight_from_drinfeld(&t).unwrap();
        prop_assert_eq!(drinfeld::drinfeld_from_weight(&w).unwrap(), t.clone());
        let a = Rational::new(1, 2).unwrap();
        let ws: Vec<Q1> = w.iter().map(|f| f.shift_by(&a)).collect();
        prop_assert_eq!(drinfeld::weight_from_drinfeld(&drinfeld::shift_tuple(&t, &a)).unwrap(), ws);
    }

    #[test]
    fn permutation_sign_is_a_homomorphism(a in perm5(), b in perm5()) {
        let (p, q) = (Perm::from_images(a).unwrap(), Perm::from_images(b).unwrap());
        prop_assert_eq!(p.compose(&q).is_odd(), p.is_odd() ^ q.is_odd());
        prop_assert!(p.compose(&p.inverse()).is_identity());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn shifted_tensor_products_satisfy_rtt(a in rational(), b in rational()) {
        let s = SuperSpace::gl(1, 1);
        let rep = gl::coproduct_action(&gl::vector_rep_a(&s).unwrap(), &[a.clone(), b.clone()]).unwrap();
        prop_assert!(rtt_check(&rep, &RMatrix::yang(&s).unwrap()).unwrap().holds);
        let o = SuperSpace::osp(1);
        let rep = osp::tensor_module(&o, &[a, b]).unwrap();
        prop_assert!(rtt_check(&rep, &RMatrix::osp(&o).unwrap()).unwrap().holds);
    }

    #[test]
    fn central_series_of_shifted_vector_rep(a in rational()) {
        let s = SuperSpace::osp(2);
        let v = osp::vector_rep(&s).unwrap();
        let c = osp::central_series(&v).unwrap();
        prop_assert_eq!(osp::central_series(&v.shift(&a)).unwrap(), c.shift_by(&a));
    }
}
