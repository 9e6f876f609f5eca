//! The CMS operator, Jack polynomials, Cherednik–Dunkl operators and Pieri coefficients.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::multipoly::{named_vars, Exponents, MultiPoly};
use crate::partitions::{partitions_of, Partition};
use crate::ratfun::{BigRational, RatFun};
use crate::symfunc::{self, collect_m, monomial_symmetric, Basis, SymFn};
use crate::tableau::psi_vertical;

/// Polynomials in `z_1..z_N` acted on by coordinate permutations.
pub type NonSymPoly = MultiPoly;

/// The CMS operator in as many variables as `f` has, applied to a symmetric `f`.
pub fn cms_operator_poly(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.nvars();
    let vars = f.vars().to_vec();
    let theta = RatFun::theta();
    let mut out = MultiPoly::zero(vars.clone());
    let eulers: Vec<MultiPoly> = (0..n).map(|i| f.euler(i)).collect();
    for (i, e) in eulers.iter().enumerate() {
        out.add_assign(&e.euler(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            let g = eulers[i].sub(&eulers[j]);
            if g.is_zero() {
                continue;
            }
            let q = g.div_by_difference(i, j)?;
            let s = MultiPoly::var(vars.clone(), i).add(&MultiPoly::var(vars.clone(), j));
            out.add_assign(&s.mul(&q).scale(&theta));
        }
    }
    if n > 1 {
        let total = f.euler_sum(&(0..n).collect::<Vec<_>>());
        out.add_assign(&total.scale(&(&theta * &RatFun::from_int(1 - n as i64))));
    }
    Ok(out)
}

/// Matrix of the CMS operator on the monomial basis of one weight:
/// `L m_λ = Σ_μ c_{λμ} m_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularOperatorMatrix {
    pub weight: usize,
    /// Partitions of `weight` in graded revlex order.
    pub order: Vec<Partition>,
    entries: BTreeMap<(Partition, Partition), RatFun>,
}

impl TriangularOperatorMatrix {
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> RatFun {
        self.entries.get(&(lambda.clone(), mu.clone())).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Partition, Partition), &RatFun)> {
        self.entries.iter()
    }

    /// Every nonzero `c_{λμ}` has `μ ≤ λ` in dominance.
    pub fn is_triangular(&self) -> bool {
        self.entries.keys().all(|(l, m)| m.dominance_leq(l).unwrap_or(false))
    }
}

fn build_cms_matrix(n: usize) -> Result<TriangularOperatorMatrix> {
    let order = partitions_of(n);
    let vars = named_vars("x", n);
    let mut entries = BTreeMap::new();
    for lam in &order {
        let image = cms_operator_poly(&monomial_symmetric(lam, &vars))?;
        for (mu, c) in collect_m(&image, n).terms() {
            entries.insert((lam.clone(), mu.clone()), c.clone());
        }
    }
    Ok(TriangularOperatorMatrix { weight: n, order, entries })
}

/// The CMS matrix at weight `n`, computed in `n` variables and cached.
pub fn cms_matrix(n: usize) -> Result<Arc<TriangularOperatorMatrix>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TriangularOperatorMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return Ok(m.clone());
    }
    let m = Arc::new(build_cms_matrix(n)?);
    cache.lock().unwrap().insert(n, m.clone());
    Ok(m)
}

/// `L_θ f`, returned in the monomial basis.
pub fn apply_cms(f: &SymFn) -> Result<SymFn> {
    let m = convert(f, Basis::M)?;
    let mut out = SymFn::zero(Basis::M, m.degree());
    for (lam, c) in m.terms() {
        let mat = cms_matrix(lam.weight())?;
        for mu in &mat.order {
            let e = mat.entry(lam, mu);
            if !e.is_zero() {
                out.add_term(mu.clone(), &e * c);
            }
        }
    }
    Ok(out)
}

/// `c_{λλ} = 2n(λ') − 2θ n(λ) + |λ|`.
pub fn cms_eigenvalue(lambda: &Partition) -> RatFun {
    let a = 2 * lambda.conjugate().n_stat() + lambda.weight();
    RatFun::linear(a as i64, -2 * lambda.n_stat() as i64)
}

fn solve_jack(lambda: &Partition) -> Result<SymFn> {
    let n = lambda.weight();
    let mat = cms_matrix(n)?;
    let c_ll = cms_eigenvalue(lambda);
    let mut u: Vec<(Partition, RatFun)> = vec![(lambda.clone(), RatFun::one())];
    let start = mat.order.iter().position(|p| p == lambda).expect("λ is a partition of its weight");
    for mu in &mat.order[start + 1..] {
        if !mu.dominance_leq(lambda)? {
            continue;
        }
        let mut acc = RatFun::zero();
        for (nu, un) in &u {
            let c = mat.entry(nu, mu);
            if !c.is_zero() {
                acc += &(&c * un);
            }
        }
        if acc.is_zero() {
            continue;
        }
        let gap = &c_ll - &cms_eigenvalue(mu);
        let coeff = acc.checked_div(&gap).map_err(|_| Error::NonGenericTheta(format!("{lambda} vs {mu}")))?;
        u.push((mu.clone(), coeff));
    }
    SymFn::from_terms(Basis::M, n, u)
}

/// `P_λ(θ)` in the monomial basis, truncated at `|λ|`.
pub fn jack(lambda: &Partition) -> SymFn {
    static CACHE: OnceLock<Mutex<HashMap<Partition, SymFn>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(j) = cache.lock().unwrap().get(lambda) {
        return j.clone();
    }
    let j = solve_jack(lambda).expect("symbolic triangular solve never meets a zero pivot");
    cache.lock().unwrap().insert(lambda.clone(), j.clone());
    j
}

/// `P_λ` with θ specialized; coincident eigenvalues are reported as non-generic.
pub fn jack_at(lambda: &Partition, t: &BigRational) -> Result<SymFn> {
    let n = lambda.weight();
    let mat = cms_matrix(n)?;
    let spec = |r: &RatFun| r.evaluate_at(t).map_err(|_| Error::NonGenericTheta(t.to_string()));
    let c_ll = spec(&cms_eigenvalue(lambda))?;
    let mut u: Vec<(Partition, BigRational)> = vec![(lambda.clone(), BigRational::from_integer(1.into()))];
    let start = mat.order.iter().position(|p| p == lambda).expect("λ is a partition of its weight");
    for mu in &mat.order[start + 1..] {
        if !mu.dominance_leq(lambda)? {
            continue;
        }
        let mut acc = BigRational::from_integer(0.into());
        for (nu, un) in &u {
            acc += spec(&mat.entry(nu, mu))? * un;
        }
        let gap = &c_ll - spec(&cms_eigenvalue(mu))?;
        if gap == BigRational::from_integer(0.into()) {
            if acc == gap {
                continue;
            }
            return Err(Error::NonGenericTheta(format!("c_λλ = c_μμ for λ = {lambda}, μ = {mu} at θ = {t}")));
        }
        u.push((mu.clone(), acc / gap));
    }
    SymFn::from_terms(Basis::M, n, u.into_iter().map(|(p, c)| (p, RatFun::from_rational(c))))
}

/// Coefficients of `f` in the Jack basis, by peeling off dominance-maximal monomials.
pub fn to_jack(f: &SymFn) -> Result<SymFn> {
    if f.basis() == Basis::Jack {
        return Ok(f.clone());
    }
    let m = symfunc::basis_convert(f, Basis::M)?;
    let mut residual: BTreeMap<Partition, RatFun> = m.terms().map(|(l, c)| (l.clone(), c.clone())).collect();
    let mut out = SymFn::zero(Basis::Jack, f.degree());
    while let Some((lam, c)) = residual.pop_first() {
        for (mu, u) in jack(&lam).terms() {
            if *mu == lam {
                continue;
            }
            let v = residual.get(mu).cloned().unwrap_or_else(RatFun::zero) - &(u * &c);
            if v.is_zero() {
                residual.remove(mu);
            } else {
                residual.insert(mu.clone(), v);
            }
        }
        out.add_term(lam, c);
    }
    Ok(out)
}

/// `Σ c_λ P_λ` expanded in the monomial basis.
pub fn from_jack(f: &SymFn) -> Result<SymFn> {
    if f.basis() != Basis::Jack {
        return symfunc::basis_convert(f, Basis::M);
    }
    let mut out = SymFn::zero(Basis::M, f.degree());
    for (lam, c) in f.terms() {
        for (mu, u) in jack(lam).terms() {
            out.add_term(mu.clone(), u * c);
        }
    }
    Ok(out)
}

/// Basis conversion including the Jack basis.
pub fn convert(f: &SymFn, target: Basis) -> Result<SymFn> {
    match (f.basis(), target) {
        (a, b) if a == b => Ok(f.clone()),
        (_, Basis::Jack) => to_jack(f),
        (Basis::Jack, t) => symfunc::basis_convert(&from_jack(f)?, t),
        (_, t) => symfunc::basis_convert(f, t),
    }
}

/// Product in any basis, returned in the basis of `f`.
pub fn multiply(f: &SymFn, g: &SymFn) -> Result<SymFn> {
    let prod = symfunc::multiply(&convert(f, Basis::P)?, &convert(g, Basis::P)?)?;
    convert(&prod, f.basis())
}

/// `D_{i,N} f` with `N = f.nvars()` and 1-based `i`; zero for `i > N`.
pub fn dunkl_apply(i: usize, f: &NonSymPoly) -> NonSymPoly {
    assert!(i >= 1, "Dunkl operators are indexed from 1");
    let n = f.nvars();
    if i > n {
        return MultiPoly::zero(f.vars().to_vec());
    }
    let vars = f.vars().to_vec();
    let theta = RatFun::theta();
    let mut out = f.euler(i - 1);
    for j in 1..=n {
        if j == i {
            continue;
        }
        let dd = f.divided_difference(i - 1, j - 1);
        if dd.is_zero() {
            continue;
        }
        let x = MultiPoly::var(vars.clone(), i.max(j) - 1);
        out.add_assign(&x.mul(&dd).scale(&theta));
    }
    out
}

/// `f(D_{1,N}, …, D_{N,N}) g` for a shifted-symmetric `f` and symmetric `g`.
pub fn integral_from_shifted(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    let n = g.nvars();
    if f.nvars() != n {
        return Err(Error::InvalidInput(format!("operator in {} variables, argument in {n}", f.nvars())));
    }
    let mut memo: HashMap<Exponents, MultiPoly> = HashMap::new();
    memo.insert(vec![0; n], g.clone());
    fn power(alpha: &Exponents, memo: &mut HashMap<Exponents, MultiPoly>) -> MultiPoly {
        if let Some(p) = memo.get(alpha) {
            return p.clone();
        }
        let k = alpha.iter().position(|&a| a > 0).expect("zero exponent is seeded");
        let mut prev = alpha.clone();
        prev[k] -= 1;
        let base = power(&prev, memo);
        let out = dunkl_apply(k + 1, &base);
        memo.insert(alpha.clone(), out.clone());
        out
    }
    let mut out = MultiPoly::zero(g.vars().to_vec());
    for (alpha, c) in f.terms() {
        out.add_assign(&power(alpha, &mut memo).scale(c));
    }
    if !out.is_symmetric_in(&(0..n).collect::<Vec<_>>()) {
        return Err(Error::InvariantViolation("operator does not preserve symmetric polynomials".into()));
    }
    Ok(out)
}

/// `f(λ_1, …, λ_N)`.
pub fn harish_chandra_eval(f: &MultiPoly, lambda: &Partition) -> Result<RatFun> {
    let n = f.nvars();
    if lambda.len() > n {
        return Err(Error::TooFewVariables(lambda.len(), n));
    }
    let point: Vec<RatFun> = (1..=n).map(|i| RatFun::from_int(lambda.part(i) as i64)).collect();
    Ok(f.evaluate(&point))
}

/// Coefficient of `P_ν` in `P_λ P_(1)` where ν is λ plus a box in row j.
pub fn pieri_psi_box(lambda: &Partition, nu: &Partition) -> Result<RatFun> {
    let j = lambda
        .added_box_row(nu)
        .ok_or_else(|| Error::InvalidStep(nu.to_string(), lambda.to_string()))?;
    let mut acc = RatFun::one();
    for i in 1..j {
        let d = lambda.part(i) as i64 - lambda.part(j) as i64;
        let k = (j - i) as i64;
        let num = RatFun::linear(d, k - 1) * RatFun::linear(d - 1, k + 1);
        let den = RatFun::linear(d - 1, k) * RatFun::linear(d, k);
        acc = acc * num.checked_div(&den)?;
    }
    Ok(acc)
}

/// Jack-basis coefficients of `P_λ e_r`, from the vertical-strip formula,
/// cross-checked against direct multiplication.
pub fn pieri_expand_e(lambda: &Partition, r: usize, d: usize) -> Result<BTreeMap<Partition, RatFun>> {
    if r == 0 || lambda.weight() + r > d {
        return Err(Error::InvalidInput(format!("need r ≥ 1 and |λ| + r ≤ {d}")));
    }
    let theta = RatFun::theta();
    let formula: BTreeMap<Partition, RatFun> = lambda
        .vertical_strips_above(r)
        .into_iter()
        .map(|nu| {
            let c = psi_vertical(&nu, lambda, &theta);
            (nu, c)
        })
        .collect();
    let p = SymFn::basis_element(Basis::Jack, lambda.clone(), d);
    let e = SymFn::basis_element(Basis::E, Partition::from_parts(&[r]), d);
    let prod = multiply(&p, &e)?;
    let direct: BTreeMap<Partition, RatFun> = prod.terms().map(|(l, c)| (l.clone(), c.clone())).collect();
    if direct != formula {
        return Err(Error::InternalInconsistency(format!("Pieri coefficients for {lambda} · e_{r} disagree")));
    }
    Ok(formula)
}
