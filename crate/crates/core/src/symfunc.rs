//! Degree-truncated symmetric functions in the monomial, power-sum,
//! elementary, complete and Jack bases.
//!
//! Conversions between the classical bases go through power sums. The
//! transition matrices are θ-free, computed once per weight and cached.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::multipoly::{named_vars, signed_coeff, MultiPoly};
use crate::partitions::{partitions_of, Partition};
use crate::ratfun::{int, BigRational, RatFun};

pub use crate::multipoly::Exponents;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    M,
    P,
    E,
    H,
    Jack,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::P => "p",
            Basis::E => "e",
            Basis::H => "h",
            Basis::Jack => "jack",
        }
    }

    fn display_symbol(self) -> &'static str {
        match self {
            Basis::Jack => "P",
            b => b.symbol(),
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::M),
            "p" => Ok(Basis::P),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "jack" | "P" => Ok(Basis::Jack),
            _ => Err(Error::Parse(format!("unknown basis `{s}`"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A symmetric function known exactly through weight `degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFn {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, RatFun>,
}

impl SymFn {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFn { basis, degree, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis, degree: usize) -> Self {
        Self::basis_element(basis, Partition::empty(), degree)
    }

    /// The single basis element indexed by `lambda`, truncated at `degree`.
    pub fn basis_element(basis: Basis, lambda: Partition, degree: usize) -> Self {
        let mut f = Self::zero(basis, degree);
        if lambda.weight() <= degree {
            f.terms.insert(lambda, RatFun::one());
        }
        f
    }

    /// A basis element truncated at its own weight.
    pub fn element(basis: Basis, lambda: &Partition) -> Self {
        Self::basis_element(basis, lambda.clone(), lambda.weight())
    }

    pub fn from_terms(
        basis: Basis,
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, RatFun)>,
    ) -> Result<Self> {
        let mut f = Self::zero(basis, degree);
        for (lam, c) in terms {
            if lam.weight() > degree {
                return Err(Error::InvalidInput(format!("{lam} exceeds truncation degree {degree}")));
            }
            f.add_term(lam, c);
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &RatFun)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFun {
        self.terms.get(lambda).cloned().unwrap_or_else(RatFun::zero)
    }

    /// Largest weight present.
    pub fn top_weight(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn add_term(&mut self, lambda: Partition, c: RatFun) {
        if c.is_zero() || lambda.weight() > self.degree {
            return;
        }
        let s = match self.terms.get(&lambda) {
            Some(a) => a + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&lambda);
        } else {
            self.terms.insert(lambda, s);
        }
    }

    pub fn truncate(&self, degree: usize) -> Self {
        SymFn {
            basis: self.basis,
            degree: degree.min(self.degree),
            terms: self.terms.iter().filter(|(l, _)| l.weight() <= degree).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Same coefficients, larger declared truncation degree. Only sound when
    /// the caller knows the higher weights vanish.
    pub fn with_degree(mut self, degree: usize) -> Self {
        self.terms.retain(|l, _| l.weight() <= degree);
        self.degree = degree;
        self
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::InvalidInput(format!(
                "mixing {} and {} bases; convert first",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let mut out = self.truncate(self.degree.min(other.degree));
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&RatFun::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        let mut out = Self::zero(self.basis, self.degree);
        if c.is_zero() {
            return out;
        }
        for (l, a) in &self.terms {
            out.terms.insert(l.clone(), a * c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Partition, &RatFun) -> RatFun) -> Self {
        let mut out = Self::zero(self.basis, self.degree);
        for (l, a) in &self.terms {
            out.add_term(l.clone(), f(l, a));
        }
        out
    }

    /// Specializes θ to a rational value in every coefficient.
    pub fn specialize(&self, t: &BigRational) -> Result<Self> {
        let mut out = Self::zero(self.basis, self.degree);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), RatFun::from_rational(c.evaluate_at(t)?));
        }
        Ok(out)
    }

    /// Re-expresses `self` in `target`; the Jack basis is handled in [`crate::cms`].
    pub fn convert(&self, target: Basis) -> Result<Self> {
        basis_convert(self, target)
    }
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.basis.display_symbol();
        for (k, (l, c)) in self.terms.iter().enumerate() {
            let (neg, body, unit) = signed_coeff(c);
            let sep = match (k, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let elem = if l.is_empty() { None } else { Some(format!("{sym}{l}")) };
            let term = match (elem, unit) {
                (None, _) => body,
                (Some(e), true) => e,
                (Some(e), false) => format!("{body}*{e}"),
            };
            write!(f, "{sep}{term}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: RatFun,
}

#[derive(Serialize, Deserialize)]
struct SymFnRepr {
    basis: String,
    degree: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for SymFn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFnRepr {
            basis: self.basis.symbol().to_string(),
            degree: self.degree,
            terms: self.terms.iter().map(|(l, c)| TermRepr { partition: l.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SymFnRepr::deserialize(d)?;
        let basis = Basis::from_str(&r.basis).map_err(D::Error::custom)?;
        SymFn::from_terms(basis, r.degree, r.terms.into_iter().map(|t| (t.partition, t.coeff)))
            .map_err(D::Error::custom)
    }
}

type QMatrix = Vec<Vec<BigRational>>;

fn invert(mut a: QMatrix) -> QMatrix {
    let n = a.len();
    let mut inv: QMatrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("transition matrix is invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    inv
}

/// `z_μ = Π_i i^{m_i} m_i!`.
pub fn z_mu(mu: &Partition) -> BigRational {
    let mut z = BigRational::one();
    let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (p, m) in counts {
        for k in 1..=m {
            z *= int(p as i64 * k);
        }
    }
    z
}

/// Union of the parts of two partitions; `p_μ p_ν = p_{μ∪ν}`.
pub fn union(a: &Partition, b: &Partition) -> Partition {
    let mut v: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_parts(&v)
}

/// Coefficient of `x^λ` in `p_μ`: ways to distribute the parts of μ into rows summing to λ.
fn p_in_m_entry(mu: &Partition, lambda: &Partition) -> i64 {
    fn rec(parts: &[usize], room: &mut [usize]) -> i64 {
        let Some((&first, rest)) = parts.split_first() else {
            return if room.iter().all(|&r| r == 0) { 1 } else { 0 };
        };
        let mut total = 0;
        for k in 0..room.len() {
            if room[k] >= first {
                room[k] -= first;
                total += rec(rest, room);
                room[k] += first;
            }
        }
        total
    }
    let mut room = lambda.parts().to_vec();
    rec(mu.parts(), &mut room)
}

fn elementary_row(r: usize, sign: bool) -> BTreeMap<Partition, BigRational> {
    partitions_of(r)
        .into_iter()
        .map(|mu| {
            let mut c = z_mu(&mu).recip();
            if sign && (r - mu.len()) % 2 == 1 {
                c = -c;
            }
            (mu, c)
        })
        .collect()
}

fn product_row(lambda: &Partition, sign: bool) -> BTreeMap<Partition, BigRational> {
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::from([(Partition::empty(), BigRational::one())]);
    for &r in lambda.parts() {
        let row = elementary_row(r, sign);
        let mut next = BTreeMap::new();
        for (a, ca) in &acc {
            for (b, cb) in &row {
                *next.entry(union(a, b)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        acc = next;
    }
    acc
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Direction {
    ToP,
    FromP,
}

fn raw_matrix(basis: Basis, n: usize, dir: Direction) -> QMatrix {
    let parts = partitions_of(n);
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let dense = |row: BTreeMap<Partition, BigRational>| {
        let mut v = vec![BigRational::zero(); parts.len()];
        for (p, c) in row {
            v[index[&p]] = c;
        }
        v
    };
    match (basis, dir) {
        (Basis::M, Direction::FromP) => parts
            .iter()
            .map(|mu| parts.iter().map(|lam| int(p_in_m_entry(mu, lam))).collect())
            .collect(),
        (Basis::M, Direction::ToP) => invert(raw_matrix(Basis::M, n, Direction::FromP)),
        (Basis::E, Direction::ToP) => parts.iter().map(|l| dense(product_row(l, true))).collect(),
        (Basis::H, Direction::ToP) => parts.iter().map(|l| dense(product_row(l, false))).collect(),
        (b, Direction::FromP) => invert(raw_matrix(b, n, Direction::ToP)),
        (Basis::P | Basis::Jack, _) => unreachable!("no θ-free transition matrix"),
    }
}

type MatrixCache = Mutex<HashMap<(Basis, usize, Direction), Arc<QMatrix>>>;

fn matrix(basis: Basis, n: usize, dir: Direction) -> Arc<QMatrix> {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&(basis, n, dir)) {
        return m.clone();
    }
    let m = Arc::new(raw_matrix(basis, n, dir));
    cache.lock().unwrap().insert((basis, n, dir), m.clone());
    m
}

/// Applies a per-weight transition to the coefficient vector of each weight.
fn transform(f: &SymFn, basis: Basis, dir: Direction, out_basis: Basis) -> SymFn {
    let mut by_weight: BTreeMap<usize, Vec<(&Partition, &RatFun)>> = BTreeMap::new();
    for (l, c) in f.terms() {
        by_weight.entry(l.weight()).or_default().push((l, c));
    }
    let mut out = SymFn::zero(out_basis, f.degree);
    for (n, terms) in by_weight {
        let parts = partitions_of(n);
        let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mat = matrix(basis, n, dir);
        let mut acc = vec![RatFun::zero(); parts.len()];
        for (l, c) in terms {
            for (j, t) in mat[index[l]].iter().enumerate() {
                if !t.is_zero() {
                    acc[j] += &c.scale(t);
                }
            }
        }
        for (p, c) in parts.into_iter().zip(acc) {
            out.add_term(p, c);
        }
    }
    out
}

fn to_p(f: &SymFn) -> Result<SymFn> {
    match f.basis {
        Basis::P => Ok(f.clone()),
        Basis::Jack => Err(Error::UnsupportedHere("jack")),
        b => Ok(transform(f, b, Direction::ToP, Basis::P)),
    }
}

fn from_p(f: &SymFn, target: Basis) -> Result<SymFn> {
    match target {
        Basis::P => Ok(f.clone()),
        Basis::Jack => Err(Error::UnsupportedHere("jack")),
        b => Ok(transform(f, b, Direction::FromP, b)),
    }
}

/// Re-expresses `f` in the `target` basis, routing through power sums.
pub fn basis_convert(f: &SymFn, target: Basis) -> Result<SymFn> {
    if f.basis == target {
        return Ok(f.clone());
    }
    from_p(&to_p(f)?, target)
}

fn multiply_p(a: &SymFn, b: &SymFn) -> SymFn {
    let degree = a.degree.min(b.degree);
    let mut out = SymFn::zero(Basis::P, degree);
    for (la, ca) in a.terms() {
        for (lb, cb) in b.terms() {
            if la.weight() + lb.weight() <= degree {
                out.add_term(union(la, lb), ca * cb);
            }
        }
    }
    out
}

/// Product truncated at the smaller degree, expressed in the basis of `f`.
pub fn multiply(f: &SymFn, g: &SymFn) -> Result<SymFn> {
    let prod = multiply_p(&to_p(f)?, &to_p(g)?);
    from_p(&prod, f.basis)
}

/// Applies `p_r ↦ scalar(r) · p_r`, extended multiplicatively; result in the basis of `f`.
pub fn diagonal_p_map(f: &SymFn, scalar: impl Fn(usize) -> RatFun) -> Result<SymFn> {
    let p = to_p(f)?;
    let mapped = p.map_coeffs(|l, c| l.parts().iter().fold(c.clone(), |acc, &r| &acc * &scalar(r)));
    from_p(&mapped, f.basis)
}

/// `p_r ↦ (−1)^{r−1} θ p_r`.
pub fn omega_theta(f: &SymFn) -> Result<SymFn> {
    diagonal_p_map(f, |r| {
        let t = RatFun::theta();
        if r % 2 == 0 {
            -t
        } else {
            t
        }
    })
}

/// `p_r ↦ −p_r / θ`.
pub fn sigma_theta(f: &SymFn) -> Result<SymFn> {
    diagonal_p_map(f, |_| -RatFun::theta_inv())
}

/// Exponent vectors of the distinct permutations of `λ` padded to `n` entries.
pub fn monomial_exponents(lambda: &Partition, n: usize) -> Vec<Exponents> {
    if lambda.len() > n {
        return Vec::new();
    }
    let mut base: Vec<u32> = lambda.parts().iter().map(|&p| p as u32).collect();
    base.resize(n, 0);
    base.sort_unstable();
    let mut out = vec![base.clone()];
    // next lexicographic permutation of a multiset
    loop {
        let Some(i) = (1..base.len()).rev().find(|&i| base[i - 1] < base[i]) else { break };
        let j = (i..base.len()).rev().find(|&j| base[j] > base[i - 1]).unwrap();
        base.swap(i - 1, j);
        base[i..].reverse();
        out.push(base.clone());
    }
    out
}

/// `m_λ(x_1..x_n)` over the given variables (the first `n` of them).
pub fn monomial_symmetric(lambda: &Partition, vars: &[String]) -> MultiPoly {
    let n = vars.len();
    MultiPoly::from_terms(vars.to_vec(), monomial_exponents(lambda, n).into_iter().map(|e| (e, RatFun::one())))
        .expect("exponent lengths match")
}

/// `p_r(x_1..x_n)`.
pub fn power_sum_poly(r: usize, vars: &[String]) -> MultiPoly {
    let n = vars.len();
    let terms = (0..n).map(|k| {
        let mut e = vec![0; n];
        e[k] = r as u32;
        (e, RatFun::one())
    });
    MultiPoly::from_terms(vars.to_vec(), terms).expect("exponent lengths match")
}

/// Image of `f` in `N` variables `x1..xN`.
pub fn expand_in_variables(f: &SymFn, n: usize) -> Result<MultiPoly> {
    expand_in_vars(f, &named_vars("x", n))
}

/// Image of `f` in the given variables.
pub fn expand_in_vars(f: &SymFn, vars: &[String]) -> Result<MultiPoly> {
    let m = basis_convert(f, Basis::M)?;
    let mut out = MultiPoly::zero(vars.to_vec());
    for (l, c) in m.terms() {
        if l.len() <= vars.len() {
            out.add_assign(&monomial_symmetric(l, vars).scale(c));
        }
    }
    Ok(out)
}

/// Reads a symmetric polynomial back into the m-basis via its
/// weakly-decreasing exponent vectors.
pub fn collect_m(poly: &MultiPoly, degree: usize) -> SymFn {
    let mut out = SymFn::zero(Basis::M, degree);
    for (e, c) in poly.terms() {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            let parts: Vec<usize> = e.iter().map(|&x| x as usize).collect();
            out.add_term(Partition::new(parts).expect("sorted exponents"), c.clone());
        }
    }
    out
}

/// Power-sum product `p_λ` as a concrete polynomial.
pub fn power_product_poly(lambda: &Partition, vars: &[String]) -> MultiPoly {
    lambda
        .parts()
        .iter()
        .fold(MultiPoly::one(vars.to_vec()), |acc, &r| acc.mul(&power_sum_poly(r, vars)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;
    use crate::ratfun::rational;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    fn el(b: Basis, v: &[usize]) -> SymFn {
        SymFn::element(b, &p(v))
    }

    fn x(n: usize, k: usize) -> MultiPoly {
        MultiPoly::var(named_vars("x", n), k)
    }

    #[test]
    fn convert_examples() {
        assert_eq!(basis_convert(&el(Basis::P, &[2]), Basis::M).unwrap(), el(Basis::M, &[2]));
        let e2 = basis_convert(&el(Basis::E, &[2]), Basis::P).unwrap();
        let half = RatFun::from_rational(rational(1, 2));
        let expect =
            SymFn::from_terms(Basis::P, 2, [(p(&[1, 1]), half.clone()), (p(&[2]), -half)]).unwrap();
        assert_eq!(e2, expect);
        for b in [Basis::M, Basis::P, Basis::E] {
            assert_eq!(basis_convert(&el(Basis::H, &[1]), b).unwrap(), el(b, &[1]));
        }
        assert_eq!(basis_convert(&el(Basis::Jack, &[1]), Basis::M), Err(Error::UnsupportedHere("jack")));
    }

    #[test]
    fn multiply_examples() {
        let p1 = el(Basis::P, &[1]).with_degree(2);
        assert_eq!(multiply(&p1, &p1).unwrap(), el(Basis::P, &[1, 1]));
        let m = multiply(&el(Basis::M, &[1]).with_degree(2), &el(Basis::M, &[1]).with_degree(2)).unwrap();
        let expect = SymFn::from_terms(Basis::M, 2, [(p(&[2]), RatFun::one()), (p(&[1, 1]), RatFun::from_int(2))]).unwrap();
        assert_eq!(m, expect);
        let f = SymFn::from_terms(Basis::E, 3, [(p(&[2, 1]), RatFun::theta())]).unwrap();
        assert_eq!(multiply(&f, &SymFn::one(Basis::E, 3)).unwrap(), f);
    }

    #[test]
    fn expand_examples() {
        let f = expand_in_variables(&el(Basis::M, &[2, 1]), 2).unwrap();
        assert_eq!(f, x(2, 0).pow(2).mul(&x(2, 1)).add(&x(2, 0).mul(&x(2, 1).pow(2))));
        assert_eq!(expand_in_variables(&el(Basis::P, &[2]), 1).unwrap(), x(1, 0).pow(2));
        assert!(expand_in_variables(&el(Basis::E, &[3]), 2).unwrap().is_zero());
    }

    #[test]
    fn automorphism_examples() {
        let t = RatFun::theta();
        assert_eq!(omega_theta(&el(Basis::P, &[1])).unwrap(), el(Basis::P, &[1]).scale(&t));
        assert_eq!(omega_theta(&el(Basis::P, &[2])).unwrap(), el(Basis::P, &[2]).scale(&-t.clone()));
        assert_eq!(omega_theta(&el(Basis::P, &[2, 1])).unwrap(), el(Basis::P, &[2, 1]).scale(&-(&t * &t)));
        let ti = RatFun::theta_inv();
        assert_eq!(sigma_theta(&el(Basis::P, &[1])).unwrap(), el(Basis::P, &[1]).scale(&-ti.clone()));
        assert_eq!(sigma_theta(&el(Basis::P, &[1, 1])).unwrap(), el(Basis::P, &[1, 1]).scale(&(&ti * &ti)));
        assert_eq!(sigma_theta(&SymFn::one(Basis::P, 3)).unwrap(), SymFn::one(Basis::P, 3));
        let twice = sigma_theta(&sigma_theta(&el(Basis::P, &[3])).unwrap()).unwrap();
        assert_eq!(twice, el(Basis::P, &[3]).scale(&(&ti * &ti)));
    }

    #[test]
    fn classical_involution_swaps_e_and_h() {
        let e2 = el(Basis::E, &[2]);
        let mapped = diagonal_p_map(&e2, |r| RatFun::from_int(if r % 2 == 0 { -1 } else { 1 })).unwrap();
        assert_eq!(basis_convert(&mapped, Basis::H).unwrap(), el(Basis::H, &[2]));
    }

    #[test]
    fn round_trips_to_six() {
        for lam in enumerate_partitions(6, None) {
            let f = SymFn::basis_element(Basis::M, lam.clone(), 6).scale(&RatFun::linear(1, 1));
            for b in [Basis::P, Basis::E, Basis::H] {
                let back = basis_convert(&basis_convert(&f, b).unwrap(), Basis::M).unwrap();
                assert_eq!(back, f, "{lam} via {b}");
            }
        }
    }

    #[test]
    fn collect_inverts_expand() {
        for lam in enumerate_partitions(5, None) {
            let f = SymFn::basis_element(Basis::H, lam.clone(), 5);
            let poly = expand_in_variables(&f, 5).unwrap();
            assert_eq!(collect_m(&poly, 5), basis_convert(&f, Basis::M).unwrap());
        }
    }

    #[test]
    fn stability() {
        for lam in enumerate_partitions(5, None) {
            let f = SymFn::element(Basis::E, &lam);
            for n in 1..=5 {
                let big = expand_in_variables(&f, n).unwrap().drop_var(n - 1);
                assert_eq!(big, expand_in_variables(&f, n - 1).unwrap());
            }
        }
    }

    #[test]
    fn json_schema() {
        let f = SymFn::from_terms(Basis::M, 6, [(p(&[2, 1]), RatFun::theta())]).unwrap();
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(js, r#"{"basis":"m","degree":6,"terms":[{"partition":[2,1],"coeff":{"num":["0","1"],"den":["1"]}}]}"#);
        assert_eq!(serde_json::from_str::<SymFn>(&js).unwrap(), f);
        assert!(serde_json::from_str::<SymFn>(r#"{"basis":"m","degree":1,"terms":[{"partition":[2],"coeff":{"num":["1"],"den":["1"]}}]}"#).is_err());
    }

    #[test]
    fn display() {
        let f = SymFn::from_terms(
            Basis::M,
            2,
            [(p(&[2]), RatFun::one()), (p(&[1, 1]), RatFun::new(crate::ratfun::ThetaPoly::from_ints(&[0, 2]), crate::ratfun::ThetaPoly::from_ints(&[1, 1])).unwrap())],
        )
        .unwrap();
        assert_eq!(f.to_string(), "m[2] + (2θ/(θ + 1))*m[1,1]");
    }

    fn small_sym() -> impl Strategy<Value = SymFn> {
        prop::collection::vec((0usize..12, -3i64..=3), 0..4).prop_map(|ts| {
            let all = enumerate_partitions(4, None);
            SymFn::from_terms(Basis::M, 5, ts.into_iter().map(|(i, c)| (all[i].clone(), RatFun::linear(c, 1)))).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn expansion_is_multiplicative(f in small_sym(), g in small_sym(), n in 1usize..=4) {
            let prod = multiply(&f, &g).unwrap();
            // keep only what survives the truncation on both sides
            let lhs = expand_in_variables(&prod, n).unwrap();
            let full = expand_in_variables(&f, n).unwrap().mul(&expand_in_variables(&g, n).unwrap());
            let mut rhs = MultiPoly::zero(named_vars("x", n));
            for d in 0..=5 {
                rhs.add_assign(&full.homogeneous_part(d));
            }
            prop_assert_eq!(lhs, rhs);
        }
    }
}
