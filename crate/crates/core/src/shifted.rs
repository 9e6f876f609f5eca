//! Shifted symmetric polynomials and shifted Jack polynomials.
//!
//! A polynomial in `z_1..z_N` is shifted-symmetric when it is symmetric in
//! the variables `z_i + θ(1−i)`.

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::multipoly::{named_vars, MultiPoly};
use crate::partitions::{partitions_of_len, Partition};
use crate::ratfun::{int, BigRational, RatFun};
use crate::tableau::{psi_horizontal, skew_shifted_jack_tableau};

/// Shifted-symmetric polynomials are plain [`MultiPoly`] values in `z1..zN`.
pub type ShiftedPoly = MultiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftedMethod {
    Branching,
    Vanishing,
    Tableau,
}

impl FromStr for ShiftedMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "branching" => Ok(ShiftedMethod::Branching),
            "vanishing" => Ok(ShiftedMethod::Vanishing),
            "tableau" => Ok(ShiftedMethod::Tableau),
            _ => Err(Error::Parse(format!("unknown method `{s}`"))),
        }
    }
}

pub fn z_vars(n: usize) -> Vec<String> {
    named_vars("z", n)
}

/// The shift `θ(1−i)` for 1-based `i`.
fn shift_of(i: usize, t: &RatFun) -> RatFun {
    t * &RatFun::from_int(1 - i as i64)
}

/// `c_t(□) = (j−1) − t(i−1)`.
fn content_at(row: usize, col: usize, t: &RatFun) -> RatFun {
    &RatFun::from_int(col as i64 - 1) - &(t * &RatFun::from_int(row as i64 - 1))
}

/// `Σ_i [u((z_i + θ(1−i))) − u(θ(1−i))]` for a univariate `u` with rational coefficients.
fn shifted_univariate_sum(coeffs: &[BigRational], n: usize) -> MultiPoly {
    let vars = z_vars(n);
    let theta = RatFun::theta();
    let mut out = MultiPoly::zero(vars.clone());
    for i in 1..=n {
        let w = MultiPoly::var(vars.clone(), i - 1).add(&MultiPoly::constant(vars.clone(), shift_of(i, &theta)));
        let s = MultiPoly::constant(vars.clone(), shift_of(i, &theta));
        let mut wp = MultiPoly::one(vars.clone());
        let mut sp = MultiPoly::one(vars.clone());
        for c in coeffs {
            if !c.is_zero() {
                let c = RatFun::from_rational(c.clone());
                out.add_assign(&wp.sub(&sp).scale(&c));
            }
            wp = wp.mul(&w);
            sp = sp.mul(&s);
        }
    }
    out
}

/// `p*_r = Σ_i [(z_i + θ(1−i))^r − (θ(1−i))^r]`.
pub fn shifted_power_sum(r: usize, n: usize) -> ShiftedPoly {
    let mut coeffs = vec![BigRational::zero(); r + 1];
    coeffs[r] = BigRational::one();
    shifted_univariate_sum(&coeffs, n)
}

/// Coefficients of the Bernoulli polynomial `B_k(x)`, lowest power first.
pub fn bernoulli_polynomial(k: usize) -> Vec<BigRational> {
    static NUMBERS: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    let numbers = NUMBERS.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut b = numbers.lock().unwrap();
    while b.len() <= k {
        // Σ_{j=0}^{n} C(n+1, j) B_j = 0
        let n = b.len();
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += bj * int(binomial(n + 1, j));
        }
        b.push(-acc / int(n as i64 + 1));
    }
    (0..=k).map(|p| &b[k - p] * int(binomial(k, p))).collect()
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `b_k = Σ_i [B_k(z_i + θ(1−i)) − B_k(θ(1−i))]`.
pub fn bernoulli_sum(k: usize, n: usize) -> ShiftedPoly {
    shifted_univariate_sum(&bernoulli_polynomial(k), n)
}

fn eval_univariate(coeffs: &[BigRational], x: &RatFun) -> RatFun {
    coeffs
        .iter()
        .rev()
        .fold(RatFun::zero(), |acc, c| &(&acc * x) + &RatFun::from_rational(c.clone()))
}

/// `b_k(λ; t)` evaluated directly on a partition at parameter `t`.
pub fn bernoulli_sum_eval(k: usize, lambda: &Partition, t: &RatFun) -> RatFun {
    let b = bernoulli_polynomial(k);
    (1..=lambda.len())
        .map(|i| {
            let s = shift_of(i, t);
            let v = &RatFun::from_int(lambda.part(i) as i64) + &s;
            &eval_univariate(&b, &v) - &eval_univariate(&b, &s)
        })
        .sum()
}

/// `f(μ_1, …, μ_N)`.
pub fn eval_at_partition(f: &ShiftedPoly, mu: &Partition) -> Result<RatFun> {
    let n = f.nvars();
    if mu.len() > n {
        return Err(Error::TooFewVariables(mu.len(), n));
    }
    let point: Vec<RatFun> = (1..=n).map(|i| RatFun::from_int(mu.part(i) as i64)).collect();
    Ok(f.evaluate(&point))
}

/// `f(λ')`.
pub fn conjugate_eval(f: &ShiftedPoly, lambda: &Partition) -> Result<RatFun> {
    eval_at_partition(f, &lambda.conjugate())
}

/// Invariance under exchanging `z_i + θ(1−i)` and `z_{i+1} − θi` for every adjacent pair.
pub fn is_shift_symmetric(f: &ShiftedPoly) -> bool {
    let n = f.nvars();
    let vars = f.vars().to_vec();
    let theta = RatFun::theta();
    (0..n.saturating_sub(1)).all(|i| {
        let mut images: Vec<MultiPoly> = (0..n).map(|k| MultiPoly::var(vars.clone(), k)).collect();
        images[i] = MultiPoly::var(vars.clone(), i + 1).sub(&MultiPoly::constant(vars.clone(), theta.clone()));
        images[i + 1] = MultiPoly::var(vars.clone(), i).add(&MultiPoly::constant(vars.clone(), theta.clone()));
        f.compose(&images) == *f
    })
}

fn branching(lambda: &Partition, n: usize) -> MultiPoly {
    let vars = z_vars(n);
    let theta = RatFun::theta();
    let mut memo: HashMap<(Partition, usize), MultiPoly> = HashMap::new();
    fn rec(
        lam: &Partition,
        k: usize,
        n: usize,
        vars: &[String],
        theta: &RatFun,
        memo: &mut HashMap<(Partition, usize), MultiPoly>,
    ) -> MultiPoly {
        if k > n {
            return if lam.is_empty() { MultiPoly::one(vars.to_vec()) } else { MultiPoly::zero(vars.to_vec()) };
        }
        if lam.len() > n + 1 - k {
            return MultiPoly::zero(vars.to_vec());
        }
        if let Some(p) = memo.get(&(lam.clone(), k)) {
            return p.clone();
        }
        let z = MultiPoly::var(vars.to_vec(), k - 1);
        let mut out = MultiPoly::zero(vars.to_vec());
        for mu in lam.horizontal_strips_below() {
            let rest = rec(&mu, k + 1, n, vars, theta, memo);
            if rest.is_zero() {
                continue;
            }
            let mut term = rest.scale(&psi_horizontal(lam, &mu, theta));
            for i in 1..=lam.len() {
                for j in mu.part(i) + 1..=lam.part(i) {
                    term = term.mul(&z.sub(&MultiPoly::constant(vars.to_vec(), content_at(i, j, theta))));
                }
            }
            out.add_assign(&term);
        }
        memo.insert((lam.clone(), k), out.clone());
        out
    }
    rec(lambda, 1, n, &vars, &theta, &mut memo)
}

/// `p*_ν = Π_i p*_{ν_i}` evaluated at a partition.
fn power_product_value(nu: &Partition, singles: &[RatFun]) -> RatFun {
    nu.parts().iter().map(|&r| singles[r].clone()).product()
}

fn shifted_power_value(r: usize, mu: &Partition, n: usize, t: &RatFun) -> RatFun {
    (1..=n)
        .map(|i| {
            let s = shift_of(i, t);
            let v = &RatFun::from_int(mu.part(i) as i64) + &s;
            &v.pow(r as i32).expect("nonnegative power") - &s.pow(r as i32).expect("nonnegative power")
        })
        .sum()
}

type VanishingCache = Mutex<HashMap<(usize, usize), HashMap<Partition, MultiPoly>>>;

/// Solves the interpolation problem for every λ of weight `d` with `l(λ) ≤ n` at once.
fn vanishing_all(d: usize, n: usize) -> Result<HashMap<Partition, MultiPoly>> {
    static CACHE: OnceLock<VanishingCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&(d, n)) {
        return Ok(m.clone());
    }
    let theta = RatFun::theta();
    let nodes: Vec<Partition> = (0..=d).flat_map(|w| partitions_of_len(w, n)).collect();
    // basis p*_ν with ν_1 ≤ n
    let basis: Vec<Partition> = nodes.iter().map(Partition::conjugate).collect();
    let rows: Vec<Vec<RatFun>> = nodes
        .iter()
        .map(|mu| {
            let singles: Vec<RatFun> = (0..=n).map(|r| shifted_power_value(r, mu, n, &theta)).collect();
            basis.iter().map(|nu| power_product_value(nu, &singles)).collect()
        })
        .collect();
    let targets: Vec<Partition> = partitions_of_len(d, n);
    let rhs: Vec<Vec<RatFun>> = nodes
        .iter()
        .map(|mu| targets.iter().map(|lam| if lam == mu { lam.hook_product_h() } else { RatFun::zero() }).collect())
        .collect();
    let sol = linalg::solve(rows, rhs)?;
    let vars = z_vars(n);
    let singles: Vec<MultiPoly> = (0..=n).map(|r| shifted_power_sum(r, n)).collect();
    let polys: Vec<MultiPoly> = basis
        .iter()
        .map(|nu| nu.parts().iter().fold(MultiPoly::one(vars.clone()), |acc, &r| acc.mul(&singles[r])))
        .collect();
    let mut out = HashMap::new();
    for (c, lam) in targets.iter().enumerate() {
        let mut f = MultiPoly::zero(vars.clone());
        for (k, poly) in polys.iter().enumerate() {
            if !sol[k][c].is_zero() {
                f.add_assign(&poly.scale(&sol[k][c]));
            }
        }
        out.insert(lam.clone(), f);
    }
    cache.lock().unwrap().insert((d, n), out.clone());
    Ok(out)
}

/// `P*_λ(z_1..z_N; θ)` by the chosen construction.
pub fn shifted_jack(lambda: &Partition, n: usize, method: ShiftedMethod) -> Result<ShiftedPoly> {
    if lambda.len() > n {
        return Err(Error::TooFewVariables(lambda.len(), n));
    }
    match method {
        ShiftedMethod::Branching => {
            static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), MultiPoly>>> = OnceLock::new();
            let cache = CACHE.get_or_init(Default::default);
            if let Some(p) = cache.lock().unwrap().get(&(lambda.clone(), n)) {
                return Ok(p.clone());
            }
            let p = branching(lambda, n);
            cache.lock().unwrap().insert((lambda.clone(), n), p.clone());
            Ok(p)
        }
        ShiftedMethod::Vanishing => Ok(vanishing_all(lambda.weight(), n)?.remove(lambda).expect("target is solved")),
        ShiftedMethod::Tableau => Ok(skew_shifted_jack_tableau(lambda, &Partition::empty(), n)?.rename(z_vars(n))),
    }
}

/// `P*_λ(point; t)` evaluated through the branching rule without building the polynomial.
pub fn shifted_jack_eval(lambda: &Partition, point: &[RatFun], t: &RatFun) -> RatFun {
    let n = point.len();
    let mut memo: HashMap<(Partition, usize), RatFun> = HashMap::new();
    fn rec(
        lam: &Partition,
        k: usize,
        point: &[RatFun],
        t: &RatFun,
        memo: &mut HashMap<(Partition, usize), RatFun>,
    ) -> RatFun {
        let n = point.len();
        if k > n {
            return if lam.is_empty() { RatFun::one() } else { RatFun::zero() };
        }
        if lam.len() > n + 1 - k {
            return RatFun::zero();
        }
        if let Some(v) = memo.get(&(lam.clone(), k)) {
            return v.clone();
        }
        let z = &point[k - 1];
        let mut out = RatFun::zero();
        for mu in lam.horizontal_strips_below() {
            let rest = rec(&mu, k + 1, point, t, memo);
            if rest.is_zero() {
                continue;
            }
            let mut term = &rest * &psi_horizontal(lam, &mu, t);
            for i in 1..=lam.len() {
                for j in mu.part(i) + 1..=lam.part(i) {
                    term = &term * &(z - &content_at(i, j, t));
                    if term.is_zero() {
                        break;
                    }
                }
            }
            out += &term;
        }
        memo.insert((lam.clone(), k), out.clone());
        out
    }
    if lambda.len() > n {
        return RatFun::zero();
    }
    rec(lambda, 1, point, t, &mut memo)
}

/// `P*_λ(μ; t)` with as many variables as the longer of λ and μ.
pub fn shifted_jack_at_partition(lambda: &Partition, mu: &Partition, t: &RatFun) -> RatFun {
    let n = lambda.len().max(mu.len());
    let point: Vec<RatFun> = (1..=n).map(|i| RatFun::from_int(mu.part(i) as i64)).collect();
    shifted_jack_eval(lambda, &point, t)
}

/// `P*_λ(μ'; θ) − H(λ,θ)/H(λ',1/θ) · P*_{λ'}(μ; 1/θ)`.
pub fn check_duality(lambda: &Partition, mu: &Partition) -> RatFun {
    let theta = RatFun::theta();
    let theta_inv = RatFun::theta_inv();
    let lc = lambda.conjugate();
    let lhs = shifted_jack_at_partition(lambda, &mu.conjugate(), &theta);
    let ratio = lambda
        .hook_product_h()
        .checked_div(&lc.hook_product_h().invert_parameter())
        .expect("H is a nonzero polynomial");
    let rhs = &ratio * &shifted_jack_at_partition(&lc, mu, &theta_inv);
    &lhs - &rhs
}
