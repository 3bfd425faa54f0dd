//! Drinfeld polynomials of `X(osp(2|2n))`-modules: translation to and from
//! highest weights, the tensor product transition rule and the shift
//! automorphism.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{rational_roots, Field, Poly, Rational, Ring, Q1};

/// `(Qbar(u), Q(u), P_2(u), ..., P_{n+1}(u))`, all monic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TupleRepr")]
pub struct DrinfeldTuple {
    #[serde(rename = "Qbar")]
    qbar: Poly<Rational>,
    #[serde(rename = "Q")]
    q: Poly<Rational>,
    #[serde(rename = "P")]
    p: Vec<Poly<Rational>>,
}

#[derive(Deserialize)]
struct TupleRepr {
    #[serde(rename = "Qbar")]
    qbar: Poly<Rational>,
    #[serde(rename = "Q")]
    q: Poly<Rational>,
    #[serde(rename = "P")]
    p: Vec<Poly<Rational>>,
}

impl TryFrom<TupleRepr> for DrinfeldTuple {
    type Error = Error;

    fn try_from(r: TupleRepr) -> Result<Self> {
        DrinfeldTuple::new(r.qbar, r.q, r.p)
    }
}

impl DrinfeldTuple {
    pub fn new(qbar: Poly<Rational>, q: Poly<Rational>, p: Vec<Poly<Rational>>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidInput("a tuple needs P_2, ..., P_{n+1} with n >= 1".into()));
        }
        for (name, f) in [("Qbar", &qbar), ("Q", &q)].into_iter().chain(p.iter().map(|f| ("P", f))) {
            if !f.is_monic() {
                return Err(Error::InvalidInput(format!("{name} = {f} is not monic")));
            }
        }
        Ok(DrinfeldTuple { qbar, q, p })
    }

    /// The all-ones tuple.
    pub fn trivial(n: usize) -> Self {
        DrinfeldTuple { qbar: Poly::one(), q: Poly::one(), p: vec![Poly::one(); n] }
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    pub fn qbar(&self) -> &Poly<Rational> {
        &self.qbar
    }

    pub fn q(&self) -> &Poly<Rational> {
        &self.q
    }

    /// `P_i` for `i = 2..=n+1`.
    pub fn p(&self, i: usize) -> &Poly<Rational> {
        &self.p[i - 2]
    }

    pub fn ps(&self) -> &[Poly<Rational>] {
        &self.p
    }

    fn polys(&self) -> impl Iterator<Item = &Poly<Rational>> {
        [&self.qbar, &self.q].into_iter().chain(&self.p)
    }
}

impl fmt::Display for DrinfeldTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.polys().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `(u + alpha, u + beta, 1, ..., 1)`.
pub fn first_family(n: usize, alpha: &Rational, beta: &Rational) -> Result<DrinfeldTuple> {
    let lin = |a: &Rational| Poly::linear(a.neg());
    DrinfeldTuple::new(lin(alpha), lin(beta), vec![Poly::one(); n])
}

/// `(1, 1, ..., u + gamma, ..., 1)` with `u + gamma` in position `P_k`,
/// `2 <= k <= n+1`.
pub fn second_family(n: usize, k: usize, gamma: &Rational) -> Result<DrinfeldTuple> {
    if !(2..=n + 1).contains(&k) {
        return Err(Error::InvalidInput(format!("P_{k} is not a component for n = {n}")));
    }
    let mut p = vec![Poly::one(); n];
    p[k - 2] = Poly::linear(gamma.neg());
    DrinfeldTuple::new(Poly::one(), Poly::one(), p)
}

/// The tuple of the module generated by `xi_d`:
/// `(u+1, u-d, 1, ..., 1)` with `P_{d+1} = u-d` for `d < n`, and
/// `(u+1, u-n, 1, ..., 1, u-n-1)` for `d = n`.
pub fn xi_tuple(n: usize, d: usize) -> Result<DrinfeldTuple> {
    if d == 0 || d > n {
        return Err(Error::InvalidInput(format!("need 1 <= d <= n, got d = {d}, n = {n}")));
    }
    let lin = |a: i64| Poly::linear(Rational::from_int(a));
    let mut p = vec![Poly::one(); n];
    let d = d as i64;
    if d < n as i64 {
        p[d as usize - 1] = lin(d);
    } else {
        p[n - 1] = lin(d + 1);
    }
    DrinfeldTuple::new(lin(-1), lin(d), p)
}

/// Monic `P` with `P(u + step) / P(u) = ratio`.
///
/// Writing `ratio = A/B` in lowest terms, the multiplicity of a root `x` of
/// `P` is `sum_{k >= 0} (mult_B - mult_A)(x + k step)`; a negative value, or
/// a nonzero total within a class of roots modulo `step`, means there is no
/// solution. Solutions are unique when they exist.
pub fn solve_shift(ratio: &Q1, step: &Rational) -> Result<Poly<Rational>> {
    if step.is_zero() || step.is_negative() {
        return Err(Error::InvalidInput(format!("shift step must be positive, got {step}")));
    }
    let no = |why: &str| Error::NoSolution(format!("{ratio} is not of the form P(u+{step})/P(u): {why}"));
    if ratio.is_zero() {
        return Err(no("zero"));
    }
    let (a, b) = (ratio.num(), ratio.den());
    if a.degree() != b.degree() || !a.is_monic() {
        return Err(no("numerator and denominator are not monic of equal degree"));
    }
    let mut signed: BTreeMap<Rational, i64> = BTreeMap::new();
    for (f, sgn) in [(b, 1i64), (a, -1)] {
        let fac = rational_roots(f);
        if fac.remainder.degree().unwrap_or(0) > 0 {
            return Err(Error::IrrationalRoots { remainder: fac.remainder.to_string() });
        }
        for (r, m) in fac.roots {
            *signed.entry(r).or_insert(0) += sgn * m as i64;
        }
    }
    // classes of roots modulo `step`, each listed from the top
    let mut classes: BTreeMap<Rational, Vec<(Rational, i64)>> = BTreeMap::new();
    for (x, m) in signed {
        let rep = x.sub(&x.div(step)?.floor().mul(step));
        classes.entry(rep).or_default().push((x, m));
    }
    let mut roots: Vec<Rational> = Vec::new();
    for (_, mut pts) in classes {
        pts.sort_by(|x, y| y.0.cmp(&x.0));
        let mut running = 0i64;
        let mut iter = pts.iter().peekable();
        let mut x = pts[0].0.clone();
        let bottom = pts.last().map(|p| p.0.clone()).expect("nonempty class");
        while x >= bottom {
            if let Some((y, m)) = iter.peek() {
                if *y == x {
                    running += m;
                    iter.next();
                }
            }
            if running < 0 {
                return Err(no(&format!("negative multiplicity at {x}")));
            }
            roots.extend(std::iter::repeat(x.clone()).take(running as usize));
            if roots.len() > MAX_SOLUTION_DEGREE {
                return Err(Error::BoundExceeded(format!("solution degree above {MAX_SOLUTION_DEGREE}")));
            }
            x = x.sub(step);
        }
        if running != 0 {
            return Err(no("root strings do not close"));
        }
    }
    roots.sort();
    let p = Poly::from_roots(&roots);
    if shift_ratio(&p, step)? != *ratio {
        return Err(no("reconstruction mismatch"));
    }
    Ok(p)
}

const MAX_SOLUTION_DEGREE: usize = 10_000;

/// `P(u + step) / P(u)`.
pub fn shift_ratio(p: &Poly<Rational>, step: &Rational) -> Result<Q1> {
    Q1::new(p.shift(step), p.clone())
}

/// The ratio `f/g` as a pair of monic polynomials, or `None` if the leading
/// coefficients differ.
fn monic_ratio(r: &Q1) -> Option<(Poly<Rational>, Poly<Rational>)> {
    (r.num().is_monic() && r.den().is_monic()).then(|| (r.num().clone(), r.den().clone()))
}

/// The Drinfeld tuple of a highest weight `lambda_1(u), ..., lambda_{n+2}(u)`.
pub fn drinfeld_from_weight(reduced: &[Q1]) -> Result<DrinfeldTuple> {
    if reduced.len() < 3 {
        return Err(Error::InvalidInput(format!("expected n+2 >= 3 weight components, got {}", reduced.len())));
    }
    if let Some(i) = reduced.iter().position(|l| l.is_zero()) {
        return Err(Error::InvalidInput(format!("lambda_{} is zero", i + 1)));
    }
    let n = reduced.len() - 2;
    let ratio = |i: usize| reduced[i].div(&reduced[i - 1]);
    let (qbar, q) = monic_ratio(&reduced[0].div(&reduced[1])?).ok_or_else(|| {
        Error::NoSolution("lambda_1/lambda_2 is not a ratio of monic polynomials".into())
    })?;
    let mut p = Vec::with_capacity(n);
    for i in 2..=n + 1 {
        let step = Rational::from_int(if i == n + 1 { 2 } else { 1 });
        p.push(solve_shift(&ratio(i)?, &step)?);
    }
    DrinfeldTuple::new(qbar, q, p)
}

/// The representative highest weight with `lambda_2(u) = 1`; every other
/// weight with the same tuple differs from it by a common factor.
pub fn weight_from_drinfeld(t: &DrinfeldTuple) -> Result<Vec<Q1>> {
    let n = t.n();
    let mut w = Vec::with_capacity(n + 2);
    w.push(Q1::new(t.qbar.clone(), t.q.clone())?);
    w.push(Q1::one());
    for i in 2..=n + 1 {
        let step = Rational::from_int(if i == n + 1 { 2 } else { 1 });
        let next = w[i - 1].mul(&shift_ratio(t.p(i), &step)?);
        w.push(next);
    }
    Ok(w)
}

/// `(Qbar Qbar'/d, Q Q'/d, P_2 P_2', ..., P_{n+1} P_{n+1}')` with
/// `d = gcd(Qbar Qbar', Q Q')`.
pub fn tensor_transition(a: &DrinfeldTuple, b: &DrinfeldTuple) -> Result<DrinfeldTuple> {
    if a.n() != b.n() {
        return Err(Error::InvalidInput(format!("tuples for n = {} and n = {}", a.n(), b.n())));
    }
    let top = a.qbar.mul(&b.qbar);
    let bottom = a.q.mul(&b.q);
    let d = top.gcd(&bottom).monic();
    let p = a.p.iter().zip(&b.p).map(|(x, y)| x.mul(y)).collect();
    DrinfeldTuple::new(top.div_exact(&d)?, bottom.div_exact(&d)?, p)
}

/// Every component `P(u)` replaced by `P(u + a)`.
pub fn shift_tuple(t: &DrinfeldTuple, a: &Rational) -> DrinfeldTuple {
    DrinfeldTuple {
        qbar: t.qbar.shift(a),
        q: t.q.shift(a),
        p: t.p.iter().map(|f| f.shift(a)).collect(),
    }
}

/// Divides `Qbar` and `Q` by their gcd; the results must have equal degree.
pub fn y_classification_normalize(t: &DrinfeldTuple) -> Result<DrinfeldTuple> {
    let g = t.qbar.gcd(&t.q).monic();
    let (qbar, q) = (t.qbar.div_exact(&g)?, t.q.div_exact(&g)?);
    let (dq, dqq) = (qbar.degree().unwrap_or(0), q.degree().unwrap_or(0));
    if dq != dqq {
        return Err(Error::DegreeMismatch { qbar: dq, q: dqq });
    }
    DrinfeldTuple::new(qbar, q, t.p.clone())
}

/// Derives the second fundamental family from the tuples of the modules
/// generated by `xi_d`: the transition with `(u-d, u+1, 1, ...)` cancels
/// `Qbar` and `Q`, and the shift moves the root of `P_k` to `-gamma`.
pub fn second_family_via_xi(n: usize, k: usize, gamma: &Rational) -> Result<DrinfeldTuple> {
    if !(2..=n + 1).contains(&k) {
        return Err(Error::InvalidInput(format!("P_{k} is not a component for n = {n}")));
    }
    let d = if k == n + 1 { n } else { k - 1 };
    let xi = xi_tuple(n, d)?;
    let cancel = first_family(n, &Rational::from_int(-(d as i64)), &Rational::ONE)?;
    let bare = tensor_transition(&xi, &cancel)?;
    // the root of P_k is now `root`; move it to `-gamma`
    let root = if k == n + 1 { Rational::from_int(n as i64 + 1) } else { Rational::from_int(d as i64) };
    Ok(shift_tuple(&bare, &root.add(gamma)))
}

/// A fixed corpus of tuple pairs for the transition rule, with overlapping
/// and disjoint root sets, repeated roots and half-integer roots.
pub fn transition_corpus() -> Vec<(DrinfeldTuple, DrinfeldTuple)> {
    let r = |s: &str| s.parse::<Rational>().expect("literal");
    let poly = |roots: &[&str]| Poly::from_roots(&roots.iter().map(|x| r(x)).collect::<Vec<_>>());
    let t = |qbar: &[&str], q: &[&str], p: &[&[&str]]| {
        DrinfeldTuple::new(poly(qbar), poly(q), p.iter().map(|x| poly(x)).collect()).expect("monic")
    };
    vec![
        (t(&["-1"], &["0"], &[&[]]), t(&["0"], &["1"], &[&[]])),
        (t(&["-1"], &["0"], &[&[], &[]]), t(&["0"], &["1"], &[&["2"], &[]])),
        (t(&["-1"], &["1"], &[&["1"], &[]]), t(&["1"], &["-1"], &[&[], &["3"]])),
        (t(&["0", "-1"], &["0", "1"], &[&[]]), t(&[], &[], &[&["1"]])),
        (t(&["2"], &["-3"], &[&["1/2"], &[]]), t(&["-3"], &["2"], &[&["1/2"], &["-1"]])),
        (t(&["1/2"], &["-1/2"], &[&[], &[], &[]]), t(&["-1/2"], &["3/2"], &[&["0"], &[], &["1"]])),
        (t(&["0", "0"], &["1", "2"], &[&[]]), t(&["1"], &["0"], &[&["5"]])),
        (t(&["-2", "-1"], &["3", "4"], &[&[], &[]]), t(&["3", "5"], &["-2", "6"], &[&["0"], &["0"]])),
        (t(&["1"], &["2"], &[&["1", "1"]]), t(&["2"], &["1"], &[&["-1"]])),
        (t(&[], &[], &[&[], &[]]), t(&["-7"], &["7"], &[&["3"], &["4"]])),
        (t(&["-1"], &["2"], &[&["2"], &[]]), t(&[], &[], &[&[], &[]])),
        (t(&["5/3"], &["-5/3"], &[&[], &["2/3"]]), t(&["-5/3"], &["5/3"], &[&["2/3"], &[]])),
        (t(&["0", "1", "2"], &["3", "4", "5"], &[&[]]), t(&["3", "4"], &["0", "1"], &[&["9"]])),
        (t(&["1", "1"], &["-1", "-1"], &[&[], &[], &[]]), t(&["-1"], &["1"], &[&[], &["0"], &[]])),
        (t(&["-4"], &["-3"], &[&["-3"], &["-2"]]), t(&["-2"], &["-4"], &[&["-4"], &[]])),
        (t(&["10"], &["-10"], &[&[]]), t(&["-10"], &["10"], &[&[]])),
        (t(&["1/4", "3/4"], &["-1/4", "-3/4"], &[&["1/4"], &[]]), t(&["-1/4"], &["1/4"], &[&[], &["3/4"]])),
        (t(&["0"], &["3"], &[&["1"], &["2"], &["3"]]), t(&["3"], &["6"], &[&["4"], &["5"], &["6"]])),
        (t(&["2", "2"], &["0", "1"], &[&[]]), t(&["0", "0"], &["2", "3"], &[&["2", "2"]])),
        (t(&["-1/2"], &["1/2"], &[&[], &[]]), t(&["1/2", "-3/2"], &["-1/2", "5/2"], &[&["-1/2"], &["1/2"]])),
    ]
}
