//! The verification suite: every exact identity the crate checks, grouped by
//! acceptance criterion, with deterministic machine-readable output.

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::drinfeld::{self, DrinfeldTuple};
use crate::error::{Error, Result};
use crate::field::{rational_roots, Poly, Rational, Ring, Q1};
use crate::space::{SpaceKind, SuperSpace};
use crate::symgroup::{fusion_idempotents, murphy_idempotent, GroupAlgElem, Partition, Tableau};
use crate::yangian::gl::{self, Variant};
use crate::yangian::{osp, rtt_check, RMatrix, YangianRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(Error::InvalidInput(format!("unknown level {s:?}, expected quick or full"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub level: Level,
    pub fusion_bound: usize,
}

/// Outcome of one check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    fn new(criterion: u8, name: impl Into<String>, outcome: Result<(bool, Value)>) -> Self {
        let (passed, detail) = match outcome {
            Ok(x) => x,
            Err(e) => (false, json!({ "error": e.to_string() })),
        };
        Check { criterion, name: name.into(), passed, detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub level: Level,
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Titles of the criteria, in order.
pub const CRITERIA: [&str; 9] = [
    "Yang-Baxter equation",
    "RTT relation",
    "idempotents by fusion",
    "Schur-Sergeev dimension law",
    "highest weights of polynomial modules",
    "symmetrizer and xi_d weights",
    "the subspace W",
    "xi_d modules and Drinfeld tuples",
    "transition rule",
];

/// Runs one criterion (numbered from 1).
pub fn run_criterion(k: u8, cfg: &SuiteConfig) -> Vec<Check> {
    let full = cfg.level == Level::Full;
    match k {
        1 => ybe_checks(),
        2 => rtt_checks(full),
        3 => idempotent_checks(if full { 4 } else { 3 }, cfg.fusion_bound),
        4 => schur_sergeev_checks(if full { 4 } else { 3 }),
        5 => hook_weight_checks(if full { 4 } else { 3 }),
        6 => symmetrizer_checks(if full { 4 } else { 3 }),
        7 => w_checks(if full { 3 } else { 2 }),
        8 => xi_checks(if full { 3 } else { 2 }),
        9 => transition_checks(),
        _ => vec![Check::new(k, "unknown criterion", Err(Error::InvalidInput(format!("no criterion {k}"))))],
    }
}

/// Runs every criterion plus the supplementary checks; results are merged
/// in declaration order.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let groups: Vec<Vec<Check>> = (1..=CRITERIA.len() as u8 + 1)
        .into_par_iter()
        .map(|k| if k as usize <= CRITERIA.len() { run_criterion(k, cfg) } else { supplementary_checks() })
        .collect();
    let checks: Vec<Check> = groups.into_iter().flatten().collect();
    SuiteReport { level: cfg.level, passed: checks.iter().all(|c| c.passed), checks }
}

fn gl_spaces() -> Vec<SuperSpace> {
    vec![SuperSpace::gl(1, 1), SuperSpace::gl(2, 1), SuperSpace::gl(1, 2), SuperSpace::gl(2, 2)]
}

fn gl_dims(s: &SuperSpace) -> (usize, usize) {
    match s.kind() {
        SpaceKind::Gl { m, n } => (m, n),
        _ => unreachable!("general linear spaces only"),
    }
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from_int(x)).collect()
}

fn ybe_checks() -> Vec<Check> {
    let mut rs: Vec<(String, Result<RMatrix>)> =
        gl_spaces().into_iter().map(|s| (format!("Yang R-matrix on {s}"), RMatrix::yang(&s))).collect();
    for n in 1..=2 {
        let s = SuperSpace::osp(n);
        rs.push((format!("orthosymplectic R-matrix on {s}"), RMatrix::osp(&s)));
    }
    rs.into_iter()
        .map(|(name, r)| {
            Check::new(1, name, r.and_then(|r| {
                let res = r.ybe_residual()?;
                let zero = res.is_zero();
                Ok((zero, json!({ "kappa": r.kappa(), "nonzero_entries": res.entries().count() })))
            }))
        })
        .collect()
}

fn rtt_item(name: String, build: impl FnOnce() -> Result<(YangianRep, RMatrix)>) -> Check {
    Check::new(2, name, build().and_then(|(rep, r)| {
        let report = rtt_check(&rep, &r)?;
        Ok((report.holds, json!({ "dim": rep.dim(), "report": report })))
    }))
}

fn rtt_checks(full: bool) -> Vec<Check> {
    let dmax = if full { 3 } else { 2 };
    let contents = [Rational::ZERO, Rational::from_int(1), Rational::new(-3, 2).expect("literal")];
    let mut out = Vec::new();
    for s in gl_spaces() {
        let yang = || RMatrix::yang(&s);
        out.push(rtt_item(format!("first vector representation of Y({s})"), || Ok((gl::vector_rep_a(&s)?, yang()?))));
        out.push(rtt_item(format!("second vector representation of Y({s})"), || Ok((gl::vector_rep_b(&s)?, yang()?))));
        for d in 2..=dmax {
            let c = &contents[..d];
            out.push(rtt_item(format!("R-product action on {s}, d = {d}"), || {
                Ok((gl::tensor_action_r(&s, c)?, yang()?))
            }));
            out.push(rtt_item(format!("R'-product action on {s}, d = {d}"), || {
                Ok((gl::tensor_action_rprime(&s, c)?, yang()?))
            }));
        }
    }
    for n in 1..=2 {
        let s = SuperSpace::osp(n);
        let sub = SuperSpace::osp_sub(n);
        out.push(rtt_item(format!("vector representation of X({s})"), || {
            Ok((osp::vector_rep(&s)?, RMatrix::osp(&s)?))
        }));
        out.push(rtt_item(format!("vector representation of X({sub})"), || {
            Ok((osp::vector_rep(&sub)?, RMatrix::osp(&sub)?))
        }));
        for d in 2..=dmax {
            let shifts: Vec<Rational> = (0..d as i64).map(|k| Rational::from_int(-k)).collect();
            out.push(rtt_item(format!("tensor module of X({s}), shifts {shifts:?}"), || {
                Ok((osp::tensor_module(&s, &shifts)?, RMatrix::osp(&s)?))
            }));
        }
        out.push(rtt_item(format!("V+ of the tensor square of X({s}) as an X({sub})-module"), || {
            let sq = osp::tensor_module(&s, &ints(&[-1, 0]))?;
            Ok((osp::vplus_subspace(&sq)?.module, RMatrix::osp(&sub)?))
        }));
    }
    out
}

fn idempotent_checks(dmax: usize, bound: usize) -> Vec<Check> {
    (1..=dmax)
        .flat_map(|d| Partition::all(d).into_iter().map(move |shape| (d, shape)))
        .map(|(d, shape)| Check::new(3, format!("shape {shape} of {d}"), idempotents_of_shape(&shape, bound)))
        .collect()
}

fn idempotents_of_shape(shape: &Partition, bound: usize) -> Result<(bool, Value)> {
    let ts = Tableau::standard(shape);
    let murphy: Vec<GroupAlgElem<Rational>> = ts.iter().map(murphy_idempotent).collect();
    let fusion = fusion_idempotents(&ts, bound)?;
    let mut failures = Vec::new();
    for (a, ea) in murphy.iter().enumerate() {
        if ea.mul(ea) != *ea {
            failures.push(format!("{} is not idempotent", ts[a]));
        }
        if fusion[a] != *ea {
            failures.push(format!("fusion differs from Murphy for {}", ts[a]));
        }
        for (b, eb) in murphy.iter().enumerate() {
            if a != b && !ea.mul(eb).is_zero() {
                failures.push(format!("{} and {} are not orthogonal", ts[a], ts[b]));
            }
        }
    }
    Ok((failures.is_empty(), json!({ "tableaux": ts.len(), "failures": failures })))
}

fn schur_sergeev_checks(dmax: usize) -> Vec<Check> {
    let spaces = [SuperSpace::gl(1, 1), SuperSpace::gl(2, 1), SuperSpace::gl(1, 2)];
    spaces
        .iter()
        .flat_map(|s| (1..=dmax).map(move |d| (s, d)))
        .map(|(s, d)| {
            Check::new(4, format!("{s}, d = {d}"), gl::schur_sergeev(s, d).map(|r| (r.holds(), json!(r))))
        })
        .collect()
}

fn hook_weight_checks(dmax: usize) -> Vec<Check> {
    let spaces = [SuperSpace::gl(2, 1), SuperSpace::gl(1, 2), SuperSpace::gl(2, 2)];
    let mut out = Vec::new();
    for s in &spaces {
        let (m, n) = gl_dims(s);
        for d in 1..=dmax {
            for shape in Partition::all(d).into_iter().filter(|p| p.is_hook(m, n)) {
                let outcome = (|| {
                    let flat = gl::pi_flat(&shape, m, n)?;
                    let sharp = gl::pi_sharp(&shape, m, n)?;
                    let mut failures = Vec::new();
                    let ts = Tableau::standard(&shape);
                    for t in &ts {
                        for (variant, want) in [(Variant::R, &flat), (Variant::Rprime, &sharp)] {
                            let got = gl::polynomial_module(s, t, variant)?.module.highest_weight()?;
                            if got.weights != *want {
                                failures.push(format!("{t} under {variant:?}"));
                            }
                        }
                    }
                    Ok((failures.is_empty(), json!({ "tableaux": ts.len(), "pi_flat": flat, "pi_sharp": sharp, "failures": failures })))
                })();
                out.push(Check::new(5, format!("{s}, shape {shape}"), outcome));
            }
        }
    }
    out
}

fn symmetrizer_checks(dmax: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for s in gl_spaces() {
        let (m, n) = gl_dims(&s);
        for d in 1..=dmax {
            for antisym in [false, true] {
                let kind = if antisym { "anti-symmetrizer" } else { "symmetrizer" };
                let outcome = gl::symmetrizer_module(&s, d, antisym).map(|(_, hw)| {
                    let want = gl::symmetrizer_weight(m, n, d, antisym);
                    (hw.weights == want, json!({ "weight": hw.weights, "expected": want }))
                });
                out.push(Check::new(6, format!("{kind} module on {s}, d = {d}"), outcome));
            }
        }
    }
    // the eigenvalue formula is stated for d <= m
    for s in [SuperSpace::gl(2, 2), SuperSpace::gl(dmax, 1)] {
        let (m, _) = gl_dims(&s);
        for d in 1..=m {
            let outcome = gl::check_xi_gl(&s, d).map(|w| {
                let ratio = Q1::new(Poly::from_ints(&[1, 1]), Poly::x()).expect("nonzero");
                let want: Vec<Q1> = (0..s.dim()).map(|i| if i < d { ratio.clone() } else { Q1::one() }).collect();
                (w == want, json!({ "eigenvalues": w }))
            });
            out.push(Check::new(6, format!("xi_{d} in the fundamental tensor module on {s}"), outcome));
        }
    }
    out
}

fn w_checks(nmax: usize) -> Vec<Check> {
    (1..=nmax).map(|n| Check::new(7, format!("n = {n}"), osp::w_subspace(n).map(|r| (r.holds(), json!(r))))).collect()
}

fn xi_checks(nmax: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        let s = SuperSpace::osp(n);
        let outcome = (|| {
            let v = osp::vector_rep(&s)?;
            let c = osp::central_series(&v)?;
            let hw = osp::OspHighestWeight { n, full: v.highest_weight()?.weights };
            osp::consistency_check(&hw)?;
            Ok((c == hw.central_value(), json!({ "central_series": c, "highest_weight": hw.full })))
        })();
        out.push(Check::new(8, format!("central series of the vector representation, n = {n}"), outcome));
        for d in 1..=n {
            let outcome = (|| {
                let m = osp::xi_module(n, d)?;
                let tuple = drinfeld::drinfeld_from_weight(m.highest_weight.reduced())?;
                let want = drinfeld::xi_tuple(n, d)?;
                let completed = osp::complete_weight(n, m.highest_weight.reduced())?;
                let ok = tuple == want && completed == m.highest_weight;
                Ok((ok, json!({ "module": m, "drinfeld": tuple, "expected": want })))
            })();
            out.push(Check::new(8, format!("xi_{d}, n = {n}"), outcome));
        }
    }
    out
}

/// `gcd` from the root multisets, independent of the Euclidean algorithm.
fn gcd_by_roots(a: &Poly<Rational>, b: &Poly<Rational>) -> Result<Poly<Rational>> {
    let (fa, fb) = (rational_roots(a), rational_roots(b));
    if fa.remainder.degree().unwrap_or(0) > 0 || fb.remainder.degree().unwrap_or(0) > 0 {
        return Err(Error::IrrationalRoots { remainder: format!("{} / {}", fa.remainder, fb.remainder) });
    }
    let mut roots = Vec::new();
    for (r, ma) in &fa.roots {
        if let Some((_, mb)) = fb.roots.iter().find(|(x, _)| x == r) {
            roots.extend(std::iter::repeat(r.clone()).take(*ma.min(mb)));
        }
    }
    Ok(Poly::from_roots(&roots))
}

fn transition_oracle(a: &DrinfeldTuple, b: &DrinfeldTuple) -> Result<DrinfeldTuple> {
    let top = a.qbar().mul(b.qbar());
    let bottom = a.q().mul(b.q());
    let d = gcd_by_roots(&top, &bottom)?;
    let p = a.ps().iter().zip(b.ps()).map(|(x, y)| x.mul(y)).collect();
    DrinfeldTuple::new(top.div_exact(&d)?, bottom.div_exact(&d)?, p)
}

fn transition_checks() -> Vec<Check> {
    let corpus = drinfeld::transition_corpus();
    let mut out: Vec<Check> = corpus
        .iter()
        .enumerate()
        .map(|(k, (a, b))| {
            let outcome = (|| {
                let got = drinfeld::tensor_transition(a, b)?;
                let want = transition_oracle(a, b)?;
                // the all-ones tuple is a unit on tuples with coprime Qbar and Q
                let coprime = gcd_by_roots(a.qbar(), a.q())?.is_one();
                let unit = !coprime || drinfeld::tensor_transition(a, &DrinfeldTuple::trivial(a.n()))? == *a;
                Ok((got == want && unit, json!({ "left": a, "right": b, "result": got })))
            })();
            Check::new(9, format!("pair {}", k + 1), outcome)
        })
        .collect();
    let outcome = (|| {
        let mut triples = 0;
        for (a, _) in &corpus {
            for (b, c) in &corpus {
                if a.n() != b.n() || b.n() != c.n() {
                    continue;
                }
                let left = drinfeld::tensor_transition(&drinfeld::tensor_transition(a, b)?, c)?;
                let right = drinfeld::tensor_transition(a, &drinfeld::tensor_transition(b, c)?)?;
                if left != right {
                    return Ok((false, json!({ "counterexample": [a, b, c] })));
                }
                triples += 1;
            }
        }
        Ok((true, json!({ "triples": triples })))
    })();
    out.push(Check::new(9, "associativity on the corpus", outcome));
    out
}

/// Checks beyond the numbered criteria: sampled defining relations, the
/// embedding of the Lie superalgebra and the shift-equation solver.
pub fn supplementary_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=2 {
        let s = SuperSpace::osp(n);
        let outcome = (|| {
            let v = osp::vector_rep(&s)?;
            let big = s.dim();
            let mut quads = Vec::new();
            for i in 0..big {
                for j in 0..big {
                    quads.push((i, j, s.prime(i), (j + 1) % big));
                }
                quads.push((i, 0, i, s.prime(0)));
            }
            osp::check_defining_relations(&v, &quads)?;
            Ok((true, json!({ "quadruples": quads.len() })))
        })();
        out.push(Check::new(0, format!("defining relations on the vector representation, n = {n}"), outcome));
        out.push(Check::new(
            0,
            format!("first coefficients and the embedding, n = {n}"),
            osp::check_embedding(n).map(|_| (true, Value::Null)),
        ));
    }
    let outcome = (|| {
        let mut count = 0;
        for roots in [vec![], vec![0], vec![1, 1], vec![-2, 0, 3], vec![1, 2, 2, 3]] {
            let p = Poly::from_roots(&ints(&roots));
            for step in [1, 2] {
                let step = Rational::from_int(step);
                if drinfeld::solve_shift(&drinfeld::shift_ratio(&p, &step)?, &step)? != p {
                    return Ok((false, json!({ "failed": p.to_string() })));
                }
                count += 1;
            }
        }
        Ok((true, json!({ "cases": count })))
    })();
    out.push(Check::new(0, "shift-equation solver inverts P(u+s)/P(u)", outcome));
    out
}
