use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((0..cols).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Hook length of the box in row `i`, column `j` (0-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let conj = self.conjugate();
        (self.0[i] - j) + (conj.part(j) - i) - 1
    }

    pub fn hook_length_product(&self) -> u64 {
        let conj = self.conjugate();
        let mut h = 1u64;
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                h *= ((p - j) + (conj.part(j) - i) - 1) as u64;
            }
        }
        h
    }

    /// Number of standard tableaux, `d! / h(lambda)`.
    pub fn num_standard(&self) -> u64 {
        (1..=self.size() as u64).product::<u64>() / self.hook_length_product()
    }

    /// Boxes `(row, col)` that can be added to keep a partition.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let p = self.part(i);
            if i == 0 || self.part(i - 1) > p {
                out.push((i, p));
            }
        }
        out
    }

    /// All partitions of `d`, in decreasing lexicographic order.
    pub fn all(d: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, d, &mut Vec::new(), &mut out);
        out
    }

    /// Whether `lambda_{m+1} <= n`.
    pub fn is_hook(&self, m: usize, n: usize) -> bool {
        self.part(m) <= n
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A standard Young tableau with entries `1..=d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
    shape: Partition,
}

impl Tableau {
    /// Validates shape and standardness.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let d = shape.size();
        let mut seen = vec![false; d + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > d || std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidInput(format!("entries must be 1..={d} without repeats")));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                let left_ok = j == 0 || row[j - 1] < e;
                let up_ok = i == 0 || rows[i - 1][j] < e;
                if !left_ok || !up_ok {
                    return Err(Error::InvalidInput("tableau is not standard".into()));
                }
            }
        }
        Ok(Tableau { rows, shape })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Box `(row, col)` of entry `a` (1-based entry, 0-based box).
    pub fn position(&self, a: usize) -> (usize, usize) {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&e| e == a) {
                return (i, j);
            }
        }
        panic!("entry {a} not in tableau");
    }

    /// Content `col - row` of the box holding `a`.
    pub fn content(&self, a: usize) -> i64 {
        let (i, j) = self.position(a);
        j as i64 - i as i64
    }

    /// Contents `c_1, ..., c_d`.
    pub fn contents(&self) -> Vec<i64> {
        (1..=self.size()).map(|a| self.content(a)).collect()
    }

    /// The tableau with the largest entry removed.
    pub fn remove_last(&self) -> Tableau {
        let d = self.size();
        let mut rows = self.rows.clone();
        let (i, _) = self.position(d);
        rows[i].pop();
        if rows[i].is_empty() {
            rows.pop();
        }
        Tableau::new(rows).expect("removing the maximal entry keeps standardness")
    }

    /// Row reading tableau: entries fill rows left to right.
    pub fn row_reading(shape: &Partition) -> Tableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                let r: Vec<usize> = (next..next + p).collect();
                next += p;
                r
            })
            .collect();
        Tableau::new(rows).expect("row reading tableau is standard")
    }

    /// All standard tableaux of a shape, in a fixed order.
    pub fn standard(shape: &Partition) -> Vec<Tableau> {
        let d = shape.size();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
        fn rec(a: usize, d: usize, shape: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
            if a > d {
                out.push(Tableau { rows: rows.clone(), shape: shape.clone() });
                return;
            }
            for i in 0..rows.len() {
                let len = rows[i].len();
                let fits = len < shape.part(i) && (i == 0 || rows[i - 1].len() > len);
                if fits {
                    rows[i].push(a);
                    rec(a + 1, d, shape, rows, out);
                    rows[i].pop();
                }
            }
        }
        rec(1, d, shape, &mut rows, &mut out);
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Semicolon-separated rows of comma-separated entries, e.g. `1,3;2`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|r| {
                r.split(',')
                    .map(|e| e.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad entry {e:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// The hook data attached to a partition contained in the `(m, n)`-hook.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HookData {
    pub lambda: Partition,
    pub m: usize,
    pub n: usize,
    /// `mu_i = max(lambda_i - n, 0)` for `i = 1..m`.
    pub mu: Vec<usize>,
    /// `nu_j = max(lambda'_j - m, 0)` for `j = 1..n`.
    pub nu: Vec<usize>,
    pub lambda_sharp: Vec<usize>,
    pub lambda_flat: Vec<usize>,
}

pub fn hook_data(lambda: &Partition, m: usize, n: usize) -> Result<HookData> {
    if !lambda.is_hook(m, n) {
        return Err(Error::NotInHook {
            shape: lambda.to_string(),
            m,
            n,
            reason: format!("lambda_{} = {} > n = {n}", m + 1, lambda.part(m)),
        });
    }
    let conj = lambda.conjugate();
    let mu: Vec<usize> = (0..m).map(|i| lambda.part(i).saturating_sub(n)).collect();
    let nu: Vec<usize> = (0..n).map(|j| conj.part(j).saturating_sub(m)).collect();
    let lambda_sharp = (0..m).map(|i| lambda.part(i)).chain(nu.iter().copied()).collect();
    let lambda_flat = mu.iter().copied().chain((0..n).map(|j| conj.part(j))).collect();
    Ok(HookData { lambda: lambda.clone(), m, n, mu, nu, lambda_sharp, lambda_flat })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn standard_tableaux_counts() {
        assert_eq!(Tableau::standard(&p("2,1")).len(), 2);
        assert_eq!(Tableau::standard(&p("4")).len(), 1);
        assert_eq!(Tableau::standard(&p("1,1,1")).len(), 1);
        for d in 1..=6 {
            for shape in Partition::all(d) {
                assert_eq!(Tableau::standard(&shape).len() as u64, shape.num_standard());
            }
        }
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p("2").hook_length_product(), 2);
        assert_eq!(p("2,1").hook_length_product(), 3);
        // hooks of (3,2): 4,3,1 / 2,1
        assert_eq!(p("3,2").hook_length_product(), 24);
        assert_eq!(p("3,2").num_standard(), 5);
    }

    #[test]
    fn hook_data_examples() {
        let h = hook_data(&p("3,1"), 1, 2).unwrap();
        assert_eq!(h.mu, vec![1]);
        assert_eq!(h.nu, vec![1, 0]);
        assert_eq!(h.lambda_sharp, vec![3, 1, 0]);
        assert_eq!(h.lambda_flat, vec![1, 2, 1]);

        let h = hook_data(&p("1"), 2, 1).unwrap();
        assert_eq!(h.lambda_sharp, vec![1, 0, 0]);
        assert_eq!(h.lambda_flat, vec![0, 0, 1]);

        assert!(matches!(hook_data(&p("2,2"), 1, 1), Err(Error::NotInHook { .. })));
    }

    #[test]
    fn parsing_and_contents() {
        let t: Tableau = "1,3;2".parse().unwrap();
        assert_eq!(t.contents(), vec![0, -1, 1]);
        assert_eq!(t.remove_last().to_string(), "1;2");
        assert!("2,1".parse::<Tableau>().is_err());
        assert!("1,2;3,4,5".parse::<Tableau>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("2,1").addable(), vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(Partition::all(4).len(), 5);
    }
}
