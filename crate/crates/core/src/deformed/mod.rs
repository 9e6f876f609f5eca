//! The deformed algebra `Λ_{n,m,θ}` of polynomials in `x_1..x_n, y_1..y_m`,
//! the homomorphisms from `Λ` into it, super-Jack and shifted super-Jack
//! polynomials.

pub mod bitableau;
pub mod operators;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_traits::One;

use crate::cms;
use crate::error::{Error, Result};
use crate::multipoly::{named_vars, xy_vars, Exponents, MultiPoly};
use crate::partitions::{enumerate_partitions, Partition};
use crate::ratfun::{rational, BigRational, RatFun};
use crate::shifted::bernoulli_polynomial;
use crate::symfunc::{z_mu, Basis, SymFn};
use crate::tableau::skew_jack_tableau_in;

pub use bitableau::{reverse_bitableaux, Bitableau, Symbol};
pub use operators::{deformed_cms_apply, eigenvalue_of, quantum_integral_apply};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformedPoly {
    pub n: usize,
    pub m: usize,
    pub poly: MultiPoly,
}

impl DeformedPoly {
    /// Wraps a polynomial over `x1..xn, y1..ym`.
    pub fn new(poly: MultiPoly, n: usize, m: usize) -> Self {
        debug_assert_eq!(poly.nvars(), n + m);
        DeformedPoly { n, m, poly }
    }

    pub fn zero(n: usize, m: usize) -> Self {
        Self::new(MultiPoly::zero(xy_vars(n, m)), n, m)
    }

    pub fn constant(c: RatFun, n: usize, m: usize) -> Self {
        Self::new(MultiPoly::constant(xy_vars(n, m), c), n, m)
    }

    pub fn x(&self, i: usize) -> MultiPoly {
        MultiPoly::var(self.poly.vars().to_vec(), i - 1)
    }

    pub fn y(&self, j: usize) -> MultiPoly {
        MultiPoly::var(self.poly.vars().to_vec(), self.n + j - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for DeformedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `p_r(x, y, θ) = Σ x_i^r − (1/θ) Σ y_j^r`.
pub fn deformed_newton(r: usize, n: usize, m: usize) -> DeformedPoly {
    let vars = xy_vars(n, m);
    let mut poly = MultiPoly::zero(vars.clone());
    for k in 0..n + m {
        let mut e = vec![0u32; n + m];
        e[k] = r as u32;
        let c = if k < n { RatFun::one() } else { -RatFun::theta_inv() };
        poly.add_term(e, c);
    }
    DeformedPoly::new(poly, n, m)
}

/// Membership in `Λ_{n,m,θ}`: bisymmetry plus `(∂_{x_1} + θ∂_{y_1}) f ≡ 0` on `x_1 = y_1`.
pub fn is_in_deformed_algebra(p: &MultiPoly, n: usize, m: usize) -> bool {
    if p.nvars() != n + m {
        return false;
    }
    let xs: Vec<usize> = (0..n).collect();
    let ys: Vec<usize> = (n..n + m).collect();
    if !p.is_symmetric_in(&xs) || !p.is_symmetric_in(&ys) {
        return false;
    }
    if n == 0 || m == 0 {
        return true;
    }
    let d = p.partial(0).add(&p.partial(n).scale(&RatFun::theta()));
    d.identify(0, n).is_zero()
}

fn newton_powers(n: usize, m: usize, max: usize) -> Vec<MultiPoly> {
    (0..=max).map(|r| deformed_newton(r, n, m).poly).collect()
}

/// The algebra map `Λ → Λ_{n,m,θ}` with `p_r ↦ p_r(x, y, θ)`.
pub fn phi(f: &SymFn, n: usize, m: usize) -> Result<DeformedPoly> {
    let p = cms::convert(f, Basis::P)?;
    let gens = newton_powers(n, m, f.degree());
    let vars = xy_vars(n, m);
    let mut cache: HashMap<Partition, MultiPoly> = HashMap::new();
    cache.insert(Partition::empty(), MultiPoly::one(vars.clone()));
    let mut out = MultiPoly::zero(vars);
    for (lam, c) in p.terms() {
        let img = power_image(lam, &gens, &mut cache);
        out.add_assign(&img.scale(c));
    }
    Ok(DeformedPoly::new(out, n, m))
}

fn power_image(lam: &Partition, gens: &[MultiPoly], cache: &mut HashMap<Partition, MultiPoly>) -> MultiPoly {
    if let Some(v) = cache.get(lam) {
        return v.clone();
    }
    let parts = lam.parts();
    let rest = Partition::from_parts(&parts[1..]);
    let v = power_image(&rest, gens, cache).mul(&gens[parts[0]]);
    cache.insert(lam.clone(), v.clone());
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuperJackMethod {
    SkewExpansion,
    Bitableau,
    ViaPhi,
}

impl FromStr for SuperJackMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "skew_expansion" | "skew-expansion" | "skew" => Ok(SuperJackMethod::SkewExpansion),
            "bitableau" => Ok(SuperJackMethod::Bitableau),
            "via_phi" | "via-phi" | "phi" => Ok(SuperJackMethod::ViaPhi),
            _ => Err(Error::Parse(format!("unknown method `{s}`"))),
        }
    }
}

fn skew_expansion(lambda: &Partition, n: usize, m: usize) -> Result<MultiPoly> {
    let target = xy_vars(n, m);
    let xv = named_vars("x", n);
    let yv = named_vars("y", m);
    let theta = RatFun::theta();
    let theta_inv = RatFun::theta_inv();
    let mut out = MultiPoly::zero(target.clone());
    let inside = |p: &Partition| p.contained_in(lambda) && p.part(1) <= m;
    for mu in enumerate_partitions(lambda.weight(), Some(&inside)) {
        let xs = skew_jack_tableau_in(lambda, &mu, &xv, &theta)?;
        if xs.is_zero() {
            continue;
        }
        let ys = skew_jack_tableau_in(&mu.conjugate(), &Partition::empty(), &yv, &theta_inv)?;
        let term = xs.embed(&target)?.mul(&ys.embed(&target)?);
        out.add_assign(&term.scale(&bitableau::marked_prefactor(&mu)));
    }
    Ok(out)
}

/// `SP_λ = φ(P_λ)`; zero exactly when λ leaves the fat `(n,m)`-hook.
pub fn super_jack(lambda: &Partition, n: usize, m: usize, method: SuperJackMethod) -> Result<DeformedPoly> {
    let poly = match method {
        SuperJackMethod::SkewExpansion => {
            static CACHE: OnceLock<Mutex<HashMap<(Partition, usize, usize), MultiPoly>>> = OnceLock::new();
            let cache = CACHE.get_or_init(Default::default);
            let key = (lambda.clone(), n, m);
            if let Some(p) = cache.lock().unwrap().get(&key) {
                return Ok(DeformedPoly::new(p.clone(), n, m));
            }
            let p = skew_expansion(lambda, n, m)?;
            cache.lock().unwrap().insert(key, p.clone());
            p
        }
        SuperJackMethod::Bitableau => {
            let vars = xy_vars(n, m);
            let mut out = MultiPoly::zero(vars.clone());
            for t in reverse_bitableaux(lambda, n, m)? {
                let mut e = vec![0u32; n + m];
                for s in t.entries().values() {
                    match *s {
                        Symbol::Unmarked(i) => e[i - 1] += 1,
                        Symbol::Marked(j) => e[n + j - 1] += 1,
                    }
                }
                out.add_term(e, t.weight());
            }
            out
        }
        SuperJackMethod::ViaPhi => phi(&cms::jack(lambda), n, m)?.poly,
    };
    Ok(DeformedPoly::new(poly, n, m))
}

/// True when `φ(P_λ) = 0`.
pub fn kernel_check(lambda: &Partition, n: usize, m: usize) -> Result<bool> {
    Ok(super_jack(lambda, n, m, SuperJackMethod::ViaPhi)?.is_zero())
}

/// Exponents `(λ_1..λ_n, <λ'_1−n>..<λ'_m−n>)` of the lex-leading monomial of `SP_λ`.
pub fn leading_exponents(lambda: &Partition, n: usize, m: usize) -> Exponents {
    let lc = lambda.conjugate();
    let mut e: Exponents = (1..=n).map(|i| lambda.part(i) as u32).collect();
    e.extend((1..=m).map(|j| lc.part(j).saturating_sub(n) as u32));
    e
}

/// Coefficients `c_λ` with `p = Σ c_λ SP_λ` over fat-hook λ of weight ≤ `d`.
pub fn super_jack_expand(p: &DeformedPoly, d: usize) -> Result<BTreeMap<Partition, RatFun>> {
    let (n, m) = (p.n, p.m);
    let basis: HashMap<Exponents, (Partition, MultiPoly)> = enumerate_partitions(d, Some(&|l| l.in_fat_hook(n, m)))
        .into_iter()
        .map(|l| {
            let sp = super_jack(&l, n, m, SuperJackMethod::SkewExpansion).map(|s| s.poly);
            sp.map(|s| (leading_exponents(&l, n, m), (l, s)))
        })
        .collect::<Result<_>>()?;
    let mut residual = p.poly.clone();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = residual.leading_term() {
        let (lam, sp) = basis.get(e).ok_or_else(|| Error::NotInAlgebra(residual.to_string()))?;
        let coeff = c.checked_div(&sp.coeff(e))?;
        residual = residual.sub(&sp.scale(&coeff));
        out.insert(lam.clone(), coeff);
    }
    Ok(out)
}

/// `ρ_i = θ(i−½) + ½(m−θn)`, `ρ_{n+j} = θ⁻¹(j−½) − ½(θ⁻¹m + n)`.
pub type RhoVector = Vec<RatFun>;

pub fn rho(n: usize, m: usize) -> RhoVector {
    let half = |k: i64| RatFun::from_rational(rational(k, 2));
    let theta = RatFun::theta();
    let theta_inv = RatFun::theta_inv();
    let (ni, mi) = (n as i64, m as i64);
    let mut out: RhoVector = (1..=n as i64)
        .map(|i| &(&theta * &half(2 * i - 1 - ni)) + &half(mi))
        .collect();
    out.extend((1..=m as i64).map(|j| &(&theta_inv * &half(2 * j - 1 - mi)) - &half(ni)));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftedConvention {
    Natural,
    Flat,
}

impl FromStr for ShiftedConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "natural" => Ok(ShiftedConvention::Natural),
            "flat" => Ok(ShiftedConvention::Flat),
            _ => Err(Error::Parse(format!("unknown convention `{s}`"))),
        }
    }
}

fn shifted_super_jack_flat(lambda: &Partition, n: usize, m: usize) -> Result<MultiPoly> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize, usize), MultiPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), n, m);
    if let Some(p) = cache.lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let vars = xy_vars(n, m);
    let theta = RatFun::theta();
    let minus_theta = -theta.clone();
    let mut out = MultiPoly::zero(vars.clone());
    for t in reverse_bitableaux(lambda, n, m)? {
        let mut term = MultiPoly::constant(vars.clone(), t.weight());
        for (cell, s) in t.entries() {
            let (k, scale) = match s {
                Symbol::Unmarked(i) => (i - 1, RatFun::one()),
                Symbol::Marked(j) => (n + j - 1, minus_theta.clone()),
            };
            let c = &RatFun::from_int(cell.col as i64 - 1) - &(&theta * &RatFun::from_int(cell.row as i64 - 1));
            let factor = MultiPoly::var(vars.clone(), k).scale(&scale).sub(&MultiPoly::constant(vars.clone(), c));
            term = term.mul(&factor);
        }
        out.add_assign(&term);
    }
    cache.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

/// Shifted super-Jack polynomial; the natural convention is the flat one shifted by ρ.
pub fn shifted_super_jack(lambda: &Partition, n: usize, m: usize, convention: ShiftedConvention) -> Result<MultiPoly> {
    if !lambda.in_fat_hook(n, m) {
        return Err(Error::NotInFatHook(lambda.to_string(), n, m));
    }
    let flat = shifted_super_jack_flat(lambda, n, m)?;
    Ok(match convention {
        ShiftedConvention::Flat => flat,
        ShiftedConvention::Natural => flat.shift(&rho(n, m)),
    })
}

/// Flat Frobenius coordinates of a fat-hook partition as a point.
pub fn flat_point(lambda: &Partition, n: usize, m: usize) -> Result<Vec<RatFun>> {
    let (a, b) = lambda.frobenius_flat(n, m)?;
    Ok(a.into_iter().chain(b).map(|v| RatFun::from_int(v as i64)).collect())
}

/// Modified Frobenius coordinates of a fat-hook partition as a point.
pub fn natural_point(lambda: &Partition, n: usize, m: usize) -> Result<Vec<RatFun>> {
    let (p, q) = lambda.frobenius_nm(n, m)?;
    Ok(p.into_iter().chain(q).collect())
}

fn bernoulli_at(coeffs: &[BigRational], x: &MultiPoly) -> MultiPoly {
    coeffs.iter().rev().fold(MultiPoly::zero(x.vars().to_vec()), |acc, c| {
        acc.mul(x).add(&MultiPoly::constant(x.vars().to_vec(), RatFun::from_rational(c.clone())))
    })
}

fn bernoulli_value(coeffs: &[BigRational], x: &RatFun) -> RatFun {
    coeffs
        .iter()
        .rev()
        .fold(RatFun::zero(), |acc, c| &(&acc * x) + &RatFun::from_rational(c.clone()))
}

/// Image of the shifted Bernoulli sum `b♮_k` in the variables `x, y`.
pub fn phi_natural_bernoulli(k: usize, n: usize, m: usize) -> MultiPoly {
    let vars = xy_vars(n, m);
    let b = bernoulli_polynomial(k);
    let half = |v: i64| RatFun::from_rational(rational(v, 2));
    let theta = RatFun::theta();
    let theta_inv = RatFun::theta_inv();
    let (ni, mi) = (n as i64, m as i64);
    let konst = |c: RatFun| MultiPoly::constant(vars.clone(), c);
    let mut out = MultiPoly::zero(vars.clone());
    // ½ + ½(m − θn)
    let x_shift = &half(1 + mi) - &(&theta * &half(ni));
    for i in 1..=n {
        let arg = MultiPoly::var(vars.clone(), i - 1).add(&konst(x_shift.clone()));
        let base = &half(1) + &(&theta * &half(1 - 2 * i as i64));
        out.add_assign(&bernoulli_at(&b, &arg).sub(&konst(bernoulli_value(&b, &base))));
    }
    // ½ − ½(θ⁻¹m − n)
    let y_shift = &half(1 + ni) - &(&theta_inv * &half(mi));
    let sign = (-theta).pow(k as i32 - 1).expect("θ is invertible");
    for j in 1..=m {
        let arg = MultiPoly::var(vars.clone(), n + j - 1).add(&konst(y_shift.clone()));
        let base = &half(1 + 2 * ni) + &(&theta_inv * &half(1 - 2 * j as i64));
        out.add_assign(&bernoulli_at(&b, &arg).sub(&konst(bernoulli_value(&b, &base))).scale(&sign));
    }
    out
}

/// `b♮_k(λ) = Σ_i [B_k(λ_i + ½ + θ(½−i)) − B_k(½ + θ(½−i))]`.
pub fn bernoulli_natural_eval(k: usize, lambda: &Partition) -> RatFun {
    let b = bernoulli_polynomial(k);
    let theta = RatFun::theta();
    (1..=lambda.len())
        .map(|i| {
            let base = &RatFun::from_rational(rational(1, 2)) + &(&theta * &RatFun::from_rational(rational(1 - 2 * i as i64, 2)));
            let v = &RatFun::from_int(lambda.part(i) as i64) + &base;
            &bernoulli_value(&b, &v) - &bernoulli_value(&b, &base)
        })
        .sum()
}

/// Degree-`d` coefficient of `Π_i (1 − z_i t)^{−θ}`: `Σ_{|λ|=d} θ^{l(λ)} p_λ / z_λ`.
pub fn pi_coefficient(d: usize) -> SymFn {
    let theta = RatFun::theta();
    let mut out = SymFn::zero(Basis::P, d);
    for lam in crate::partitions::partitions_of(d) {
        let c = theta.pow(lam.len() as i32).expect("θ is invertible");
        out.add_term(lam.clone(), c.scale(&(BigRational::one() / z_mu(&lam))));
    }
    out
}

/// Degree-`d` coefficient of `Π_i (1 − x_i t)^{−θ} Π_j (1 − y_j t)`.
pub fn deformed_pi_coefficient(d: usize, n: usize, m: usize) -> MultiPoly {
    let vars = xy_vars(n, m);
    // series[k] is the t^k coefficient of the product so far
    let mut series: Vec<MultiPoly> = (0..=d)
        .map(|k| if k == 0 { MultiPoly::one(vars.clone()) } else { MultiPoly::zero(vars.clone()) })
        .collect();
    let theta = RatFun::theta();
    // (θ)_k / k!
    let mut binom = vec![RatFun::one()];
    for k in 1..=d {
        let next = &(&binom[k - 1] * &(&theta + &RatFun::from_int(k as i64 - 1))) * &RatFun::from_rational(rational(1, k as i64));
        binom.push(next);
    }
    for v in 0..n + m {
        let x = MultiPoly::var(vars.clone(), v);
        let factor: Vec<MultiPoly> = if v < n {
            (0..=d).map(|k| x.pow(k as u32).scale(&binom[k])).collect()
        } else {
            let mut f = vec![MultiPoly::one(vars.clone()), x.neg()];
            f.resize(d + 1, MultiPoly::zero(vars.clone()));
            f.truncate(d + 1);
            f
        };
        let mut next = vec![MultiPoly::zero(vars.clone()); d + 1];
        for (a, sa) in series.iter().enumerate() {
            for (b, fb) in factor.iter().enumerate().take(d + 1 - a) {
                if !sa.is_zero() && !fb.is_zero() {
                    next[a + b].add_assign(&sa.mul(fb));
                }
            }
        }
        series = next;
    }
    series.swap_remove(d)
}

/// `R_{n,m} = Π_{i,j} (x_i − y_j)²`.
pub fn discriminant_r(n: usize, m: usize) -> DeformedPoly {
    let vars = xy_vars(n, m);
    let mut out = MultiPoly::one(vars.clone());
    for i in 0..n {
        for j in n..n + m {
            let d = MultiPoly::var(vars.clone(), i).sub(&MultiPoly::var(vars.clone(), j));
            out = out.mul(&d.mul(&d));
        }
    }
    DeformedPoly::new(out, n, m)
}

#[cfg(test)]
mod tests;
