//! The deformed CMS operator and the higher quantum integrals `ℒ_p`.
//!
//! Every operator below has coefficients with poles on `x_i = x_j` or
//! `x_i = y_j`; they are applied by exact division, which succeeds on the
//! deformed algebra.

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::ratfun::{rational, RatFun};

use super::{is_in_deformed_algebra, DeformedPoly};

fn require_member(f: &DeformedPoly) -> Result<()> {
    if is_in_deformed_algebra(&f.poly, f.n, f.m) {
        Ok(())
    } else {
        Err(Error::NotInAlgebra(f.poly.to_string()))
    }
}

/// `(v_i + v_j) · g / (v_i − v_j)` with exact division.
fn cross_term(g: &MultiPoly, i: usize, j: usize) -> Result<MultiPoly> {
    if g.is_zero() {
        return Ok(g.clone());
    }
    let vars = g.vars().to_vec();
    let s = MultiPoly::var(vars.clone(), i).add(&MultiPoly::var(vars, j));
    Ok(s.mul(&g.div_by_difference(i, j)?))
}

/// Applies the deformed CMS operator `ℒ_{n,m,θ}`.
pub fn deformed_cms_apply(f: &DeformedPoly) -> Result<DeformedPoly> {
    require_member(f)?;
    let (n, m) = (f.n, f.m);
    let theta = RatFun::theta();
    let p = &f.poly;
    let e: Vec<MultiPoly> = (0..n + m).map(|k| p.euler(k)).collect();
    let mut out = MultiPoly::zero(p.vars().to_vec());
    for i in 0..n {
        out.add_assign(&e[i].euler(i));
    }
    for j in n..n + m {
        out = out.sub(&e[j].euler(j).scale(&theta));
    }
    for i in 0..n {
        for j in i + 1..n {
            out.add_assign(&cross_term(&e[i].sub(&e[j]), i, j)?.scale(&theta));
        }
    }
    for i in n..n + m {
        for j in i + 1..n + m {
            out = out.sub(&cross_term(&e[i].sub(&e[j]), i, j)?);
        }
    }
    for i in 0..n {
        for j in n..n + m {
            out = out.sub(&cross_term(&e[i].add(&e[j].scale(&theta)), i, j)?);
        }
    }
    let c = &(&theta * &RatFun::from_int(n as i64 - 1)) - &RatFun::from_int(m as i64);
    let total = e.iter().fold(MultiPoly::zero(p.vars().to_vec()), |acc, g| acc.add(g));
    out = out.sub(&total.scale(&c));
    Ok(DeformedPoly::new(out, n, m))
}

fn minus_theta_pow(k: i32) -> RatFun {
    (-RatFun::theta()).pow(k).expect("θ is invertible")
}

/// `∂_i^{(p)} f` for every index `i`, x's first.
pub fn partial_family(p: usize, f: &DeformedPoly) -> Result<Vec<MultiPoly>> {
    assert!(p >= 1, "quantum integrals are indexed from 1");
    let (n, m) = (f.n, f.m);
    let parity = |i: usize| if i < n { 0 } else { 1 };
    let first = |g: &MultiPoly, i: usize| g.euler(i).scale(&minus_theta_pow(parity(i)));
    let mut g: Vec<MultiPoly> = (0..n + m).map(|i| first(&f.poly, i)).collect();
    let half = RatFun::from_rational(rational(1, 2));
    for _ in 1..p {
        let mut next = Vec::with_capacity(n + m);
        for i in 0..n + m {
            let mut acc = first(&g[i], i);
            for j in (0..n + m).filter(|&j| j != i) {
                let w = &half * &minus_theta_pow(1 - parity(j));
                acc = acc.sub(&cross_term(&g[i].sub(&g[j]), i, j)?.scale(&w));
            }
            next.push(acc);
        }
        g = next;
    }
    Ok(g)
}

/// `ℒ_p f = Σ_i (−θ)^{−p(i)} ∂_i^{(p)} f`.
pub fn quantum_integral_apply(p: usize, f: &DeformedPoly) -> Result<DeformedPoly> {
    require_member(f)?;
    let g = partial_family(p, f)?;
    let mut out = MultiPoly::zero(f.poly.vars().to_vec());
    for (i, gi) in g.iter().enumerate() {
        if i < f.n {
            out.add_assign(gi);
        } else {
            out.add_assign(&gi.scale(&minus_theta_pow(-1)));
        }
    }
    Ok(DeformedPoly::new(out, f.n, f.m))
}

/// The scalar `c` with `g = c·f`, if there is one.
pub fn eigenvalue_of(f: &MultiPoly, g: &MultiPoly) -> Option<RatFun> {
    let (e, c) = f.leading_term()?;
    let ratio = g.coeff(e).checked_div(c).ok()?;
    (f.scale(&ratio) == *g).then_some(ratio)
}
