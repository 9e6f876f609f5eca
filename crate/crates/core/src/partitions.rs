//! Partitions and Young-diagram combinatorics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ratfun::{rational, RatFun};

/// A weakly decreasing list of positive integers.
///
/// The `Ord` instance is graded reverse-lexicographic: smaller weight first,
/// and within one weight the lexicographically larger partition first. It
/// refines the reverse of dominance inside each weight, so iterating a sorted
/// collection visits `(n)` before `(1^n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<usize>);

/// A box `(row, col)` of a diagram, both 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContentKind {
    Plain,
    Primed,
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidInput(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts the caller knows to be valid.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let mut out = Vec::with_capacity(first);
        for j in 1..=first {
            out.push(self.0.iter().take_while(|&&p| p >= j).count());
        }
        Partition(out)
    }

    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        let (a, b) = (self.weight(), other.weight());
        if a != b {
            return Err(Error::WeightMismatch(a, b));
        }
        let (mut sa, mut sb) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            sa += self.part(i);
            sb += other.part(i);
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff the diagram of `self` is a subset of the diagram of `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn has_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// `λ_i − j`. Negative outside the diagram.
    pub fn arm(&self, c: Cell) -> i64 {
        self.part(c.row) as i64 - c.col as i64
    }

    /// `λ'_j − i`, computed without building the conjugate.
    pub fn leg(&self, c: Cell) -> i64 {
        let col_len = self.0.iter().take_while(|&&p| p >= c.col).count();
        col_len as i64 - c.row as i64
    }

    pub fn content(&self, c: Cell, kind: ContentKind) -> Result<RatFun> {
        match kind {
            ContentKind::Plain => Ok(plain_content(c)),
            ContentKind::Primed => {
                if !self.has_cell(c) {
                    return Err(Error::CellOutOfDiagram(c.row, c.col));
                }
                Ok(RatFun::linear(self.arm(c), self.leg(c)))
            }
        }
    }

    /// `H(λ, θ) = Π (c'_θ(□) + 1)`.
    pub fn hook_product_h(&self) -> RatFun {
        self.cells().map(|c| RatFun::linear(self.arm(c) + 1, self.leg(c))).product()
    }

    pub fn in_fat_hook(&self, n: usize, m: usize) -> bool {
        self.part(n + 1) <= m
    }

    fn check_hook(&self, n: usize, m: usize) -> Result<()> {
        if self.in_fat_hook(n, m) {
            Ok(())
        } else {
            Err(Error::NotInFatHook(self.to_string(), n, m))
        }
    }

    /// The tail `(λ_{n+1}, λ_{n+2}, …)`.
    pub fn tail(&self, n: usize) -> Partition {
        Partition(self.0.iter().skip(n).copied().collect())
    }

    /// Modified Frobenius coordinates `(p_1..p_n; q_1..q_m)`.
    pub fn frobenius_nm(&self, n: usize, m: usize) -> Result<(Vec<RatFun>, Vec<RatFun>)> {
        self.check_hook(n, m)?;
        let mu_c = self.tail(n).conjugate();
        let half = |k: i64| RatFun::from_rational(rational(k, 2));
        let theta = RatFun::theta();
        let theta_inv = RatFun::theta_inv();
        let (ni, mi) = (n as i64, m as i64);
        let p = (1..=n)
            .map(|i| {
                let c = RatFun::from_int(self.part(i) as i64) - half(mi);
                c + &theta * &half(ni + 1 - 2 * i as i64)
            })
            .collect();
        let q = (1..=m)
            .map(|j| {
                let c = RatFun::from_int(mu_c.part(j) as i64) + half(ni);
                c + &theta_inv * &half(mi + 1 - 2 * j as i64)
            })
            .collect();
        Ok((p, q))
    }

    /// Flat coordinates `a_i = λ_i`, `b_j = μ'_j` with `μ` the tail below row `n`.
    pub fn frobenius_flat(&self, n: usize, m: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        self.check_hook(n, m)?;
        let mu_c = self.tail(n).conjugate();
        Ok(((1..=n).map(|i| self.part(i)).collect(), (1..=m).map(|j| mu_c.part(j)).collect()))
    }

    /// Inclusion-maximal rectangles inside the diagram.
    pub fn maximal_rectangles(&self) -> Result<Vec<Partition>> {
        if self.is_empty() {
            return Err(Error::InvalidInput("maximal rectangles of the empty partition".into()));
        }
        Ok((1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Partition::rectangle(i, self.part(i)))
            .collect())
    }

    /// Partitions obtained by adding one box, with the row (1-based) of the new box.
    pub fn add_one_box(&self) -> Vec<(usize, Partition)> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            if i == 1 || self.part(i - 1) > self.part(i) {
                let mut p = self.0.clone();
                if i > p.len() {
                    p.push(1);
                } else {
                    p[i - 1] += 1;
                }
                out.push((i, Partition(p)));
            }
        }
        out
    }

    /// Partitions obtained by removing one box, with the row of the removed box.
    pub fn remove_one_box(&self) -> Vec<(usize, Partition)> {
        let mut out = Vec::new();
        for i in 1..=self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut p = self.0.clone();
                p[i - 1] -= 1;
                out.push((i, Partition::from_parts(&p)));
            }
        }
        out
    }

    /// If `other` is `self` plus one box, the row of that box.
    pub fn added_box_row(&self, other: &Partition) -> Option<usize> {
        if other.weight() != self.weight() + 1 || !self.contained_in(other) {
            return None;
        }
        (1..=other.len()).find(|&i| other.part(i) != self.part(i))
    }

    /// True iff `self/inner` has at most one box in each column.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        inner.contained_in(self) && (1..=self.len()).all(|i| inner.part(i) >= self.part(i + 1))
    }

    /// True iff `self/inner` has at most one box in each row.
    pub fn is_vertical_strip_over(&self, inner: &Partition) -> bool {
        inner.contained_in(self) && (1..=self.len()).all(|i| self.part(i) <= inner.part(i) + 1)
    }

    /// All `μ ⊂ self` with `self/μ` a horizontal strip.
    pub fn horizontal_strips_below(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = vec![0; self.len()];
        fn rec(lam: &Partition, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                out.push(Partition::from_parts(cur));
                return;
            }
            let lo = lam.part(i + 2);
            for v in (lo..=lam.part(i + 1)).rev() {
                cur[i] = v;
                rec(lam, i + 1, cur, out);
            }
        }
        rec(self, 0, &mut cur, &mut out);
        out
    }

    /// All `ν ⊃ self` such that `ν/self` is a vertical strip of `r` boxes.
    pub fn vertical_strips_above(&self, r: usize) -> Vec<Partition> {
        let rows = self.len() + r;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(rows);
        fn rec(lam: &Partition, rows: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            let i = cur.len() + 1;
            if i > rows {
                if left == 0 {
                    out.push(Partition::from_parts(cur));
                }
                return;
            }
            let base = lam.part(i);
            for add in [1usize, 0] {
                if add > left {
                    continue;
                }
                let v = base + add;
                if i > 1 && v > cur[i - 2] {
                    continue;
                }
                cur.push(v);
                rec(lam, rows, left - add, cur, out);
                cur.pop();
            }
        }
        rec(self, rows, r, &mut cur, &mut out);
        out.sort();
        out
    }
}

fn plain_content(c: Cell) -> RatFun {
    RatFun::linear(c.col as i64 - 1, 1 - c.row as i64)
}

/// Standalone form of [`Partition::contained_in`]: is `mu ⊆ lambda`?
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.contained_in(lambda)
}

/// Plain content `c_θ(□) = (j−1) − θ(i−1)`.
pub fn content_plain(c: Cell) -> RatFun {
    plain_content(c)
}

/// All partitions of exactly `n`, lexicographically decreasing.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts.
pub fn partitions_of_len(n: usize, max_len: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.len() <= max_len).collect()
}

/// All partitions of weight at most `max_weight` accepted by `pred`, in graded revlex order.
pub fn enumerate_partitions(max_weight: usize, pred: Option<&dyn Fn(&Partition) -> bool>) -> Vec<Partition> {
    (0..=max_weight)
        .flat_map(partitions_of)
        .filter(|p| pred.is_none_or(|f| f(p)))
        .collect()
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `2,1`, `[2,1]`, `(2,1)`, and the empty string or `[]` for ∅.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']).trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}
