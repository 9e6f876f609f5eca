//! Reverse bitableaux of type `(n, m)`.
//!
//! Symbols are ordered `1 < … < n < 1' < … < m'`. Unmarked symbols fill a skew
//! shape `λ/μ` as an ordinary reverse tableau; marked symbols fill `μ` so that
//! the transposed filling of `μ'` is a reverse tableau in `1..=m`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::partitions::{enumerate_partitions, Cell, Partition};
use crate::ratfun::RatFun;
use crate::tableau::{reverse_tableaux, ReverseTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Unmarked(usize),
    Marked(usize),
}

impl Symbol {
    /// Parity: 0 for unmarked, 1 for marked.
    pub fn parity(self) -> u32 {
        match self {
            Symbol::Unmarked(_) => 0,
            Symbol::Marked(_) => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bitableau {
    pub shape: Partition,
    /// The region `μ` holding marked symbols.
    pub marked_shape: Partition,
    /// `T₀` on `λ/μ`.
    pub unmarked: ReverseTableau,
    /// `T₁'` on `μ'`.
    pub marked_conjugate: ReverseTableau,
}

impl Bitableau {
    pub fn entries(&self) -> BTreeMap<Cell, Symbol> {
        let mut out: BTreeMap<Cell, Symbol> =
            self.unmarked.entries().into_iter().map(|(c, k)| (c, Symbol::Unmarked(k))).collect();
        for (c, k) in self.marked_conjugate.entries() {
            out.insert(Cell::new(c.col, c.row), Symbol::Marked(k));
        }
        out
    }

    /// `(−1)^{|μ|} φ_{T₁'}(1/θ) φ_{T₀}(θ) H(μ,θ) / (θ^{|μ|} H(μ',1/θ))`.
    pub fn weight(&self) -> RatFun {
        let mu = &self.marked_shape;
        let theta = RatFun::theta();
        let base = &self.unmarked.weight(&theta) * &self.marked_conjugate.weight(&RatFun::theta_inv());
        &base * &marked_prefactor(mu)
    }
}

/// `(−1)^{|μ|} H(μ,θ) / (θ^{|μ|} H(μ',1/θ))`.
pub fn marked_prefactor(mu: &Partition) -> RatFun {
    let k = mu.weight() as i32;
    let den = &RatFun::theta().pow(k).expect("θ is invertible") * &mu.conjugate().hook_product_h().invert_parameter();
    let v = mu.hook_product_h().checked_div(&den).expect("H is nonzero");
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

/// All reverse bitableaux of shape `λ` and type `(n, m)`.
pub fn reverse_bitableaux(lambda: &Partition, n: usize, m: usize) -> Result<Vec<Bitableau>> {
    let mut out = Vec::new();
    let inside = |p: &Partition| p.contained_in(lambda) && p.part(1) <= m;
    for mu in enumerate_partitions(lambda.weight(), Some(&inside)) {
        let lower = reverse_tableaux(lambda, &mu, n)?;
        if lower.is_empty() {
            continue;
        }
        let upper = reverse_tableaux(&mu.conjugate(), &Partition::empty(), m)?;
        for t0 in &lower {
            for t1 in &upper {
                out.push(Bitableau {
                    shape: lambda.clone(),
                    marked_shape: mu.clone(),
                    unmarked: t0.clone(),
                    marked_conjugate: t1.clone(),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    #[test]
    fn filling_rules() {
        for t in reverse_bitableaux(&p(&[3, 2, 1]), 2, 2).unwrap() {
            let e = t.entries();
            assert_eq!(e.len(), 6);
            for (c, &s) in &e {
                if let Some(&r) = e.get(&Cell::new(c.row, c.col + 1)) {
                    assert!(r <= s);
                    assert!(!(matches!(s, Symbol::Marked(_)) && r == s));
                }
                if let Some(&d) = e.get(&Cell::new(c.row + 1, c.col)) {
                    assert!(d <= s);
                    assert!(!(matches!(s, Symbol::Unmarked(_)) && d == s));
                }
            }
        }
    }

    #[test]
    fn single_box() {
        let ts = reverse_bitableaux(&p(&[1]), 2, 1).unwrap();
        assert_eq!(ts.len(), 3);
        let marked = ts.iter().find(|t| !t.marked_shape.is_empty()).unwrap();
        assert_eq!(marked.weight(), -RatFun::theta_inv());
        assert!(reverse_bitableaux(&p(&[2, 2]), 1, 1).unwrap().is_empty());
    }
}
