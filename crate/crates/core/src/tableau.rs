//! Reverse tableaux and the branching coefficients attached to them.
//!
//! A reverse tableau of skew shape λ/μ with entries in `1..=n` is a filling
//! that weakly decreases along rows and strictly decreases down columns.
//! Equivalently it is a chain μ = λ⁽ⁿ⁺¹⁾ ⊆ λ⁽ⁿ⁾ ⊆ … ⊆ λ⁽¹⁾ = λ where
//! λ⁽ᵏ⁾ is μ together with the boxes holding entries ≥ k; each step is a
//! horizontal strip.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multipoly::{named_vars, MultiPoly};
use crate::partitions::{content_plain, Cell, Partition};
use crate::ratfun::RatFun;

/// `b_λ(s) = (a + t(l+1)) / (a + 1 + t·l)` with arm `a` and leg `l` of `s` in λ;
/// equal to 1 when `s ∉ λ`.
pub fn b_factor(lambda: &Partition, s: Cell, t: &RatFun) -> RatFun {
    if !lambda.has_cell(s) {
        return RatFun::one();
    }
    let a = RatFun::from_int(lambda.arm(s));
    let l = RatFun::from_int(lambda.leg(s));
    let num = &a + &(t * &(&l + &RatFun::one()));
    let den = &(&a + &RatFun::one()) + &(t * &l);
    num.checked_div(&den).expect("b-factor denominator is nonzero for generic parameter")
}

fn strip_rows_cols(outer: &Partition, inner: &Partition) -> (Vec<bool>, Vec<bool>) {
    let mut rows = vec![false; outer.len() + 1];
    let mut cols = vec![false; outer.part(1) + 1];
    for i in 1..=outer.len() {
        for j in inner.part(i) + 1..=outer.part(i) {
            rows[i] = true;
            cols[j] = true;
        }
    }
    (rows, cols)
}

/// Branching coefficient of the horizontal strip λ/μ at parameter `t`:
/// the product of `b_μ(s)/b_λ(s)` over boxes in rows meeting the strip but
/// in columns that do not.
pub fn psi_horizontal(lambda: &Partition, mu: &Partition, t: &RatFun) -> RatFun {
    let (rows, cols) = strip_rows_cols(lambda, mu);
    let mut acc = RatFun::one();
    for s in mu.cells() {
        if rows[s.row] && !cols.get(s.col).copied().unwrap_or(false) {
            acc = &acc * &b_factor(mu, s, t);
            acc = acc.checked_div(&b_factor(lambda, s, t)).expect("nonzero b-factor");
        }
    }
    acc
}

/// Coefficient of `P_ν` in `P_λ e_r` for the vertical strip ν/λ: the product of
/// `b_ν(s)/b_λ(s)` over boxes in columns meeting the strip but in rows that do not.
pub fn psi_vertical(nu: &Partition, lambda: &Partition, t: &RatFun) -> RatFun {
    let (rows, cols) = strip_rows_cols(nu, lambda);
    let mut acc = RatFun::one();
    for s in nu.cells() {
        if cols[s.col] && !rows[s.row] {
            acc = &acc * &b_factor(nu, s, t);
            acc = acc.checked_div(&b_factor(lambda, s, t)).expect("nonzero b-factor");
        }
    }
    acc
}

/// One filling of a skew diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReverseTableau {
    pub outer: Partition,
    pub inner: Partition,
    /// `chain[k-1]` is the shape formed by the inner shape and entries `≥ k`.
    pub chain: Vec<Partition>,
}

impl ReverseTableau {
    pub fn entries(&self) -> BTreeMap<Cell, usize> {
        let mut out = BTreeMap::new();
        let n = self.chain.len();
        for k in 1..=n {
            let upper = &self.chain[k - 1];
            let lower = if k < n { &self.chain[k] } else { &self.inner };
            for i in 1..=upper.len() {
                for j in lower.part(i) + 1..=upper.part(i) {
                    out.insert(Cell::new(i, j), k);
                }
            }
        }
        out
    }

    /// Boxes carrying entry `k` (1-based).
    pub fn strip(&self, k: usize) -> (&Partition, &Partition) {
        let lower = self.chain.get(k).unwrap_or(&self.inner);
        (&self.chain[k - 1], lower)
    }

    /// `φ_T(t)`, the product of the strip coefficients along the chain.
    pub fn weight(&self, t: &RatFun) -> RatFun {
        (1..=self.chain.len())
            .map(|k| {
                let (a, b) = self.strip(k);
                psi_horizontal(a, b, t)
            })
            .product()
    }

    /// Number of boxes holding each entry.
    pub fn content_vector(&self) -> Vec<u32> {
        (1..=self.chain.len())
            .map(|k| {
                let (a, b) = self.strip(k);
                (a.weight() - b.weight()) as u32
            })
            .collect()
    }
}

/// All reverse tableaux of shape `outer/inner` with entries in `1..=n`.
pub fn reverse_tableaux(outer: &Partition, inner: &Partition, n: usize) -> Result<Vec<ReverseTableau>> {
    if !inner.contained_in(outer) {
        return Err(Error::NotContained(inner.to_string(), outer.to_string()));
    }
    let mut out = Vec::new();
    let mut chain = vec![outer.clone()];
    fn rec(inner: &Partition, n: usize, chain: &mut Vec<Partition>, out: &mut Vec<ReverseTableau>) {
        let cur = chain.last().unwrap().clone();
        if chain.len() == n {
            if cur.is_horizontal_strip_over(inner) {
                out.push(ReverseTableau { outer: chain[0].clone(), inner: inner.clone(), chain: chain.clone() });
            }
            return;
        }
        for next in cur.horizontal_strips_below() {
            if inner.contained_in(&next) {
                chain.push(next);
                rec(inner, n, chain, out);
                chain.pop();
            }
        }
    }
    if n == 0 {
        if outer == inner {
            out.push(ReverseTableau { outer: outer.clone(), inner: inner.clone(), chain: Vec::new() });
        }
        return Ok(out);
    }
    rec(inner, n, &mut chain, &mut out);
    Ok(out)
}

/// `Σ_T φ_T(t) x^T` over reverse tableaux of shape `outer/inner` in the given variables.
pub fn skew_jack_tableau_in(outer: &Partition, inner: &Partition, vars: &[String], t: &RatFun) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(vars.to_vec());
    for tab in reverse_tableaux(outer, inner, vars.len())? {
        out.add_term(tab.content_vector(), tab.weight(t));
    }
    Ok(out)
}

/// Skew Jack polynomial `P_{λ/μ}(x_1..x_n; θ)` from the tableau sum.
pub fn skew_jack_tableau(lambda: &Partition, mu: &Partition, n: usize) -> Result<MultiPoly> {
    skew_jack_tableau_in(lambda, mu, &named_vars("x", n), &RatFun::theta())
}

/// Jack polynomial `P_λ(x_1..x_n; θ)` from the tableau sum.
pub fn jack_tableau(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    skew_jack_tableau(lambda, &Partition::empty(), n)
}

/// `Σ_T φ_T(θ) Π_{□∈λ/μ} (x_{T(□)} − c_θ(□))` over reverse tableaux.
pub fn skew_shifted_jack_tableau(lambda: &Partition, mu: &Partition, n: usize) -> Result<MultiPoly> {
    let vars = named_vars("x", n);
    let theta = RatFun::theta();
    let mut out = MultiPoly::zero(vars.clone());
    for tab in reverse_tableaux(lambda, mu, n)? {
        let mut term = MultiPoly::constant(vars.clone(), tab.weight(&theta));
        for (cell, k) in tab.entries() {
            let factor = MultiPoly::var(vars.clone(), k - 1).sub(&MultiPoly::constant(vars.clone(), content_plain(cell)));
            term = term.mul(&factor);
        }
        out.add_assign(&term);
    }
    Ok(out)
}
