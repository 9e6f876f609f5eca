//! Filters on Young diagrams and the CMS-invariant ideals they index.
//!
//! An ideal is represented by its index set: `I_Ω = span{P_λ : λ ∈ Ω}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cms::{self, apply_cms, jack, pieri_expand_e};
use crate::error::Result;
use crate::partitions::{enumerate_partitions, Partition};
use crate::ratfun::RatFun;
use crate::symfunc::{Basis, SymFn};

/// A set of partitions with decidable membership.
pub trait IndexSet {
    fn contains(&self, lambda: &Partition) -> bool;
}

/// The inclusion-closed set of diagrams containing one of the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filter {
    generators: Vec<Partition>,
}

impl Filter {
    /// Normalizes to the antichain of minimal generators.
    pub fn new(generators: impl IntoIterator<Item = Partition>) -> Self {
        minimal_generators(generators)
    }

    pub fn empty() -> Self {
        Filter { generators: Vec::new() }
    }

    pub fn generators(&self) -> &[Partition] {
        &self.generators
    }

    pub fn is_antichain(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators.iter().enumerate().all(|(j, b)| i == j || !a.contained_in(b)))
    }
}

impl IndexSet for Filter {
    fn contains(&self, lambda: &Partition) -> bool {
        filter_contains(self, lambda)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ω{{")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// An arbitrary finite index set, not necessarily inclusion-closed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExplicitSet(pub BTreeSet<Partition>);

impl IndexSet for ExplicitSet {
    fn contains(&self, lambda: &Partition) -> bool {
        self.0.contains(lambda)
    }
}

pub fn filter_contains(omega: &Filter, lambda: &Partition) -> bool {
    omega.generators.iter().any(|g| g.contained_in(lambda))
}

/// The inclusion-minimal elements, sorted.
pub fn minimal_generators(set: impl IntoIterator<Item = Partition>) -> Filter {
    let all: BTreeSet<Partition> = set.into_iter().collect();
    let generators = all
        .iter()
        .filter(|a| !all.iter().any(|b| b != *a && b.contained_in(a)))
        .cloned()
        .collect();
    Filter { generators }
}

/// Jack-basis coefficients of `f`.
pub fn jack_expand(f: &SymFn) -> Result<BTreeMap<Partition, RatFun>> {
    Ok(cms::to_jack(f)?.terms().map(|(l, c)| (l.clone(), c.clone())).collect())
}

/// Keeps the Jack components indexed by `Ω`; the result is in the basis of `f`.
pub fn ideal_project(f: &SymFn, omega: &dyn IndexSet) -> Result<SymFn> {
    let kept = jack_expand(f)?.into_iter().filter(|(l, _)| omega.contains(l));
    let j = SymFn::from_terms(Basis::Jack, f.degree(), kept)?;
    cms::convert(&j, f.basis())
}

fn pieri_cached(lambda: &Partition, r: usize) -> Result<BTreeMap<Partition, RatFun>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), BTreeMap<Partition, RatFun>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), r);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = pieri_expand_e(lambda, r, lambda.weight() + r)?;
    cache.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

/// First witness that `span{P_λ : λ ∈ Ω, |λ| ≤ d}` is not closed under `e_r` products or the CMS operator.
pub fn closure_violation(omega: &dyn IndexSet, d: usize) -> Result<Option<String>> {
    let members: Vec<Partition> = enumerate_partitions(d, Some(&|l| omega.contains(l)));
    for lam in &members {
        for r in 1..=d - lam.weight() {
            for (nu, c) in pieri_cached(lam, r)? {
                if !c.is_zero() && !omega.contains(&nu) {
                    return Ok(Some(format!("P{lam} · e_{r} has a P{nu} component")));
                }
            }
        }
        let image = apply_cms(&jack(lam))?;
        for (nu, c) in jack_expand(&image)? {
            if !c.is_zero() && !omega.contains(&nu) {
                return Ok(Some(format!("CMS image of P{lam} has a P{nu} component")));
            }
        }
    }
    Ok(None)
}

/// True when the index set spans an ideal closed under the CMS operator up to degree `d`.
pub fn verify_ideal_closure(omega: &dyn IndexSet, d: usize) -> Result<bool> {
    Ok(closure_violation(omega, d)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::rational;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    fn filt(gs: &[&[usize]]) -> Filter {
        Filter::new(gs.iter().map(|g| p(g)))
    }

    #[test]
    fn membership_examples() {
        assert!(filter_contains(&filt(&[&[2]]), &p(&[3, 1])));
        assert!(!filter_contains(&filt(&[&[2]]), &p(&[1, 1, 1])));
        assert!(!filter_contains(&Filter::empty(), &p(&[2])));
    }

    #[test]
    fn generator_examples() {
        assert_eq!(filt(&[&[2], &[3, 1], &[1, 1]]).generators(), &[p(&[2]), p(&[1, 1])]);
        assert_eq!(filt(&[&[2, 2]]).generators(), &[p(&[2, 2])]);
        assert_eq!(minimal_generators(Vec::new()), Filter::empty());
    }

    #[test]
    fn expansion_examples() {
        let lam = p(&[2, 1]);
        let e = jack_expand(&jack(&lam)).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&lam], RatFun::one());
        let p1 = SymFn::element(Basis::P, &p(&[1]));
        let p1sq = cms::multiply(&p1.clone().with_degree(2), &p1.clone().with_degree(2)).unwrap();
        let e = jack_expand(&p1sq).unwrap();
        assert_eq!(e[&p(&[2])], RatFun::one());
        assert_eq!(e[&p(&[1, 1])], RatFun::from_int(2).checked_div(&RatFun::linear(1, 1)).unwrap());
        let m11 = SymFn::element(Basis::M, &p(&[1, 1]));
        assert_eq!(jack_expand(&m11).unwrap(), BTreeMap::from([(p(&[1, 1]), RatFun::one())]));
    }

    #[test]
    fn projection_examples() {
        let lam = p(&[2, 1]);
        let j = jack(&lam);
        assert_eq!(ideal_project(&j, &filt(&[&[2]])).unwrap(), j);
        assert!(ideal_project(&j, &filt(&[&[3]])).unwrap().is_zero());
        let p1 = SymFn::element(Basis::P, &p(&[1])).with_degree(2);
        let sq = cms::multiply(&p1, &p1).unwrap();
        let proj = ideal_project(&sq, &filt(&[&[2]])).unwrap();
        assert_eq!(cms::convert(&proj, Basis::M).unwrap(), jack(&p(&[2])));
        // idempotent
        assert_eq!(ideal_project(&proj, &filt(&[&[2]])).unwrap(), proj);
    }

    #[test]
    fn closure_examples() {
        assert!(verify_ideal_closure(&filt(&[&[1]]), 4).unwrap());
        assert!(verify_ideal_closure(&filt(&[&[2, 2]]), 6).unwrap());
        let broken = ExplicitSet([p(&[2]), p(&[3])].into_iter().collect());
        assert!(!verify_ideal_closure(&broken, 3).unwrap());
        assert!(closure_violation(&broken, 3).unwrap().unwrap().contains("[2,1]"));
    }

    #[test]
    fn two_generator_filters_are_closed() {
        let gens = enumerate_partitions(3, Some(&|l| !l.is_empty()));
        for a in &gens {
            for b in &gens {
                assert!(verify_ideal_closure(&Filter::new([a.clone(), b.clone()]), 5).unwrap(), "{a} {b}");
            }
        }
    }

    #[test]
    fn rectangle_intersection() {
        for lam in enumerate_partitions(6, Some(&|l| !l.is_empty())) {
            let rects = lam.maximal_rectangles().unwrap();
            for mu in enumerate_partitions(6, None) {
                let direct = filter_contains(&Filter::new([lam.clone()]), &mu);
                let via = rects.iter().all(|r| filter_contains(&Filter::new([r.clone()]), &mu));
                assert_eq!(direct, via, "{lam} {mu}");
            }
        }
    }

    fn partition_strategy() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0usize..4, 0..4).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn minimal_generators_form_an_antichain(set in proptest::collection::vec(partition_strategy(), 0..6)) {
            let f = minimal_generators(set.clone());
            prop_assert!(f.is_antichain());
            for s in &set {
                prop_assert!(filter_contains(&f, s));
            }
        }

        #[test]
        fn projection_is_linear(a in -3i64..4, b in -3i64..4) {
            let omega = filt(&[&[2]]);
            let f = SymFn::element(Basis::P, &p(&[2, 1]));
            let g = SymFn::element(Basis::E, &p(&[3]));
            let ca = RatFun::from_rational(rational(a, 1));
            let cb = RatFun::linear(b, 1);
            let comb = f.scale(&ca).add(&cms::convert(&g, Basis::P).unwrap().scale(&cb)).unwrap();
            let lhs = ideal_project(&comb, &omega).unwrap();
            let rhs = ideal_project(&f, &omega).unwrap().scale(&ca)
                .add(&cms::convert(&ideal_project(&g, &omega).unwrap(), Basis::P).unwrap().scale(&cb)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
