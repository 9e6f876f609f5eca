//! Sparse multivariate polynomials with coefficients in Q(θ).

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ratfun::{int, BigRational, RatFun};

pub type Exponents = Vec<u32>;

/// A polynomial in an ordered list of named variables.
///
/// Terms are keyed by exponent vectors; the map order is lexicographic with
/// the first variable most significant, so the last entry is the leading term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, RatFun>,
}

pub fn named_vars(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `x1..xn, y1..ym`.
pub fn xy_vars(n: usize, m: usize) -> Vec<String> {
    let mut v = named_vars("x", n);
    v.extend(named_vars("y", m));
    v
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vec<String>, c: RatFun) -> Self {
        let n = vars.len();
        Self::monomial(vars, vec![0; n], c)
    }

    pub fn one(vars: Vec<String>) -> Self {
        Self::constant(vars, RatFun::one())
    }

    pub fn monomial(vars: Vec<String>, exps: Exponents, c: RatFun) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exps, c);
        p
    }

    /// The variable with index `k` (0-based).
    pub fn var(vars: Vec<String>, k: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[k] = 1;
        Self::monomial(vars, e, RatFun::one())
    }

    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Exponents, RatFun)>) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(Error::InvalidInput(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    p.vars.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &RatFun)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> RatFun {
        self.terms.get(exps).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn add_term(&mut self, exps: Exponents, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn same_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_vars(other);
        let (mut out, small) = if self.len() >= other.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (e, c) in &small.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.same_vars(other);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        self.map_coeffs(|a| a * c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_vars(other);
        let mut out = Self::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFun) -> RatFun) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    /// Specializes θ to a rational value in every coefficient.
    pub fn specialize(&self, t: &BigRational) -> Result<Self> {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), RatFun::from_rational(c.evaluate_at(t)?));
        }
        Ok(out)
    }

    /// Applies the substitution θ ↦ 1/θ to every coefficient.
    pub fn invert_parameter(&self) -> Self {
        self.map_coeffs(RatFun::invert_parameter)
    }

    pub fn partial(&self, k: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e[k] > 0 {
                let mut f = e.clone();
                f[k] -= 1;
                out.add_term(f, c.scale(&int(e[k] as i64)));
            }
        }
        out
    }

    /// `x_k ∂/∂x_k`.
    pub fn euler(&self, k: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e[k] > 0 {
                out.terms.insert(e.clone(), c.scale(&int(e[k] as i64)));
            }
        }
        out
    }

    /// `Σ_k x_k ∂/∂x_k` over the listed variables.
    pub fn euler_sum(&self, ks: &[usize]) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let d: u32 = ks.iter().map(|&k| e[k]).sum();
            if d > 0 {
                out.terms.insert(e.clone(), c.scale(&int(d as i64)));
            }
        }
        out
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.swap(i, j);
            out.terms.insert(f, c.clone());
        }
        out
    }

    /// Sets variable `k` to zero, keeping it in the variable list.
    pub fn set_zero(&self, k: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e[k] == 0 {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Sets variable `k` to zero and removes it from the variable list.
    pub fn drop_var(&self, k: usize) -> Self {
        let mut vars = self.vars.clone();
        vars.remove(k);
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            if e[k] == 0 {
                let mut f = e.clone();
                f.remove(k);
                out.terms.insert(f, c.clone());
            }
        }
        out
    }

    /// Substitutes `x_j := x_i`.
    pub fn identify(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f[i] += f[j];
            f[j] = 0;
            out.add_term(f, c.clone());
        }
        out
    }

    /// Substitutes `x_k := c · x_k`.
    pub fn scale_var(&self, k: usize, c: &RatFun) -> Self {
        let mut powers = vec![RatFun::one()];
        self.map_terms_with(|e, a| {
            while powers.len() <= e[k] as usize {
                let next = powers.last().unwrap() * c;
                powers.push(next);
            }
            a * &powers[e[k] as usize]
        })
    }

    fn map_terms_with(&self, mut f: impl FnMut(&Exponents, &RatFun) -> RatFun) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let v = f(e, c);
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    /// Exact quotient by `x_i − x_j`; a nonzero remainder is an error.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<Self> {
        let mut work: BTreeMap<(u32, Exponents), RatFun> =
            self.terms.iter().map(|(e, c)| ((e[i], e.clone()), c.clone())).collect();
        let mut q = Self::zero(self.vars.clone());
        while let Some(((a, e), c)) = work.pop_last() {
            if a == 0 {
                return Err(Error::InvariantViolation(format!(
                    "not divisible by {} - {}",
                    self.vars[i], self.vars[j]
                )));
            }
            let mut f = e;
            f[i] -= 1;
            q.add_term(f.clone(), c.clone());
            f[j] += 1;
            let key = (f[i], f);
            let s = work.get(&key).map(|v| v + &c).unwrap_or(c);
            if s.is_zero() {
                work.remove(&key);
            } else {
                work.insert(key, s);
            }
        }
        Ok(q)
    }

    /// `(f − σ_ij f) / (x_i − x_j)`, computed monomial by monomial.
    pub fn divided_difference(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let (a, b) = (e[i], e[j]);
            if a == b {
                continue;
            }
            let (lo, hi, c) = if a > b { (b, a, c.clone()) } else { (a, b, -c) };
            let d = hi - lo;
            for k in 0..d {
                let mut f = e.clone();
                f[i] = lo + k;
                f[j] = lo + d - 1 - k;
                out.add_term(f, c.clone());
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[RatFun]) -> RatFun {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        let mut powers: Vec<Vec<RatFun>> = vec![vec![RatFun::one()]; point.len()];
        let mut acc = RatFun::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &ek) in e.iter().enumerate() {
                if ek == 0 {
                    continue;
                }
                while powers[k].len() <= ek as usize {
                    let next = powers[k].last().unwrap() * &point[k];
                    powers[k].push(next);
                }
                t = &t * &powers[k][ek as usize];
                if t.is_zero() {
                    break;
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes `x_k := images[k]`; all images share one variable list.
    pub fn compose(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let target = images.first().map(|p| p.vars.clone()).unwrap_or_default();
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![Self::one(p.vars.clone())]).collect();
        let mut out = Self::zero(target.clone());
        for (e, c) in &self.terms {
            let mut t = Self::constant(target.clone(), c.clone());
            for (k, &ek) in e.iter().enumerate() {
                if ek == 0 {
                    continue;
                }
                while powers[k].len() <= ek as usize {
                    let next = powers[k].last().unwrap().mul(&images[k]);
                    powers[k].push(next);
                }
                t = t.mul(&powers[k][ek as usize]);
            }
            out.add_assign(&t);
        }
        out
    }

    /// Substitutes `x_k := x_k + shifts[k]`.
    pub fn shift(&self, shifts: &[RatFun]) -> Self {
        let images: Vec<_> = shifts
            .iter()
            .enumerate()
            .map(|(k, s)| Self::var(self.vars.clone(), k).add(&Self::constant(self.vars.clone(), s.clone())))
            .collect();
        self.compose(&images)
    }

    /// Same terms over a renamed variable list of equal length.
    pub fn rename(&self, vars: Vec<String>) -> Self {
        assert_eq!(vars.len(), self.vars.len(), "renaming must keep the variable count");
        MultiPoly { vars, terms: self.terms.clone() }
    }

    /// Re-expresses the polynomial over `target`, matching variables by name.
    pub fn embed(&self, target: &[String]) -> Result<Self> {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .ok_or_else(|| Error::InvalidInput(format!("variable {v} missing from target")))
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(target.to_vec());
        for (e, c) in &self.terms {
            let mut f = vec![0; target.len()];
            for (k, &ek) in e.iter().enumerate() {
                f[idx[k]] = ek;
            }
            out.terms.insert(f, c.clone());
        }
        Ok(out)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// The lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponents, &RatFun)> {
        self.terms.iter().next_back()
    }

    /// Invariance under all permutations of the listed variables.
    pub fn is_symmetric_in(&self, ks: &[usize]) -> bool {
        ks.windows(2).all(|w| self.swap_vars(w[0], w[1]) == *self)
    }

    fn fmt_monomial(&self, e: &[u32]) -> String {
        let mut parts = Vec::new();
        for (k, &ek) in e.iter().enumerate() {
            match ek {
                0 => {}
                1 => parts.push(self.vars[k].clone()),
                _ => parts.push(format!("{}^{ek}", self.vars[k])),
            }
        }
        parts.join("*")
    }
}

/// Splits a coefficient into a sign and a body suitable for `c*monomial`.
pub(crate) fn signed_coeff(c: &RatFun) -> (bool, String, bool) {
    let neg = c.num().leading().is_some_and(|l| l < &int(0));
    let a = if neg { -c } else { c.clone() };
    let unit = a.is_one();
    let s = a.to_string();
    let s = if s.contains(' ') || s.contains('/') { format!("({s})") } else { s };
    (neg, s, unit)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body, unit) = signed_coeff(c);
            let mono = self.fmt_monomial(e);
            let sep = match (k, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let term = match (mono.is_empty(), unit) {
                (true, _) => body,
                (false, true) => mono,
                (false, false) => format!("{body}*{mono}"),
            };
            write!(f, "{sep}{term}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exponents: Exponents,
    coeff: RatFun,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    variables: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            variables: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermRepr { exponents: e.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        MultiPoly::from_terms(r.variables, r.terms.into_iter().map(|t| (t.exponents, t.coeff)))
            .map_err(D::Error::custom)
    }
}
