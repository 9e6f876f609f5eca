//! Exhaustive identity sweeps over small partitions, reported per property.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::cms::{apply_cms, cms_eigenvalue, jack, pieri_expand_e, pieri_psi_box};
use crate::deformed::{
    deformed_newton, eigenvalue_of, is_in_deformed_algebra, quantum_integral_apply, super_jack, SuperJackMethod,
};
use crate::error::{Error, Result};
use crate::ideals::{closure_violation, Filter};
use crate::partitions::{enumerate_partitions, Partition};
use crate::ratfun::RatFun;
use crate::shifted::check_duality;
use crate::symfunc::expand_in_variables;
use crate::tableau::{jack_tableau, psi_vertical};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub checked: usize,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} checked)", self.name, self.checked),
            Some(w) => write!(f, "FAIL {} ({} checked): {}", self.name, self.checked, w),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| !o.passed())
    }

    fn extend(&mut self, other: SuiteReport) {
        self.outcomes.extend(other.outcomes);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Eigen,
    Kernel,
    Duality,
    Tableau,
    Pieri,
    Integrals,
    Filters,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "eigen" => Suite::Eigen,
            "kernel" => Suite::Kernel,
            "duality" => Suite::Duality,
            "tableau" => Suite::Tableau,
            "pieri" => Suite::Pieri,
            "integrals" => Suite::Integrals,
            "filters" => Suite::Filters,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite `{s}`"))),
        })
    }
}

/// Bounds shared by all suites.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_weight: usize,
    pub n: usize,
    pub m: usize,
}

/// Runs `check` on every item in parallel; the reported counterexample is the first in item order.
pub fn run_check<T: Sync>(
    name: &str,
    items: &[T],
    check: impl Fn(&T) -> Result<Option<String>> + Sync,
) -> CheckOutcome {
    let results: Vec<Option<String>> = items
        .par_iter()
        .map(|it| check(it).unwrap_or_else(|e| Some(format!("error: {e}"))))
        .collect();
    CheckOutcome { name: name.to_string(), checked: items.len(), failure: results.into_iter().flatten().next() }
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Option<String> {
    bad.then(msg)
}

pub fn eigen(b: Bounds) -> SuiteReport {
    let parts = enumerate_partitions(b.max_weight, None);
    let relation = run_check("jack eigenrelation", &parts, |lam| {
        let j = jack(lam);
        let lhs = apply_cms(&j)?;
        Ok(fail_if(lhs != j.scale(&cms_eigenvalue(lam)), || format!("λ = {lam}")))
    });
    let formula = run_check("eigenvalue formula", &parts, |lam| {
        let w = lam.weight() as i64;
        let expected = RatFun::linear(2 * lam.conjugate().n_stat() as i64 + w, -2 * lam.n_stat() as i64);
        Ok(fail_if(cms_eigenvalue(lam) != expected, || format!("λ = {lam}")))
    });
    SuiteReport { outcomes: vec![relation, formula] }
}

pub fn tableau(b: Bounds) -> SuiteReport {
    let items: Vec<(Partition, usize)> = enumerate_partitions(b.max_weight, None)
        .into_iter()
        .flat_map(|l| (1..=b.n.max(1)).map(move |n| (l.clone(), n)))
        .collect();
    let o = run_check("tableau formula = triangular Jack", &items, |(lam, n)| {
        let lhs = jack_tableau(lam, *n)?;
        Ok(fail_if(lhs != expand_in_variables(&jack(lam), *n)?, || format!("λ = {lam}, N = {n}")))
    });
    SuiteReport { outcomes: vec![o] }
}

pub fn duality(b: Bounds) -> SuiteReport {
    let parts = enumerate_partitions(b.max_weight, None);
    let items: Vec<(Partition, Partition)> =
        parts.iter().flat_map(|l| parts.iter().map(move |m| (l.clone(), m.clone()))).collect();
    let o = run_check("shifted Jack duality", &items, |(lam, mu)| {
        Ok(fail_if(!check_duality(lam, mu).is_zero(), || format!("λ = {lam}, μ = {mu}")))
    });
    SuiteReport { outcomes: vec![o] }
}

pub fn kernel(b: Bounds) -> SuiteReport {
    let parts = enumerate_partitions(b.max_weight, None);
    let name = format!("kernel of φ at (n,m) = ({},{})", b.n, b.m);
    let o = run_check(&name, &parts, |lam| {
        let zero = super_jack(lam, b.n, b.m, SuperJackMethod::ViaPhi)?.is_zero();
        Ok(fail_if(zero == lam.in_fat_hook(b.n, b.m), || format!("λ = {lam}, image zero: {zero}")))
    });
    SuiteReport { outcomes: vec![o] }
}

pub fn pieri(b: Bounds) -> SuiteReport {
    let items: Vec<(Partition, usize)> = enumerate_partitions(b.max_weight.saturating_sub(1), None)
        .into_iter()
        .flat_map(|l| (1..=b.max_weight - l.weight()).map(move |r| (l.clone(), r)))
        .collect();
    let strips = run_check("vertical-strip Pieri = direct product", &items, |(lam, r)| {
        pieri_expand_e(lam, *r, lam.weight() + r).map(|_| None)
    });
    let parts = enumerate_partitions(b.max_weight, None);
    let boxes = run_check("one-box Pieri coefficients nonzero", &parts, |lam| {
        for (_, nu) in lam.add_one_box() {
            let psi = pieri_psi_box(lam, &nu)?;
            if psi.is_zero() || psi != psi_vertical(&nu, lam, &RatFun::theta()) {
                return Ok(Some(format!("λ = {lam}, ν = {nu}")));
            }
        }
        Ok(None)
    });
    SuiteReport { outcomes: vec![strips, boxes] }
}

pub fn integrals(b: Bounds) -> SuiteReport {
    let (n, m) = (b.n, b.m);
    let gens: Vec<(usize, usize)> = (1..=3).flat_map(|p| (1..=3).map(move |r| (p, r))).collect();
    let invariance = run_check("ℒ_p preserve the deformed algebra", &gens, |&(p, r)| {
        let img = quantum_integral_apply(p, &deformed_newton(r, n, m))?;
        Ok(fail_if(!is_in_deformed_algebra(&img.poly, n, m), || format!("ℒ_{p} p_{r}")))
    });
    let triples: Vec<(usize, usize, usize)> =
        (1..=3).flat_map(|p| (p + 1..=3).flat_map(move |q| (1..=3).map(move |r| (p, q, r)))).collect();
    let commute = run_check("ℒ_p commute", &triples, |&(p, q, r)| {
        let g = deformed_newton(r, n, m);
        let a = quantum_integral_apply(p, &quantum_integral_apply(q, &g)?)?;
        let c = quantum_integral_apply(q, &quantum_integral_apply(p, &g)?)?;
        Ok(fail_if(a != c, || format!("[ℒ_{p}, ℒ_{q}] p_{r}")))
    });
    let hook = enumerate_partitions(b.max_weight, Some(&|l| l.in_fat_hook(n, m)));
    let eigen = run_check("super-Jacks are eigenvectors of ℒ_p", &hook, |lam| {
        let sp = super_jack(lam, n, m, SuperJackMethod::SkewExpansion)?;
        for p in 1..=3 {
            let img = quantum_integral_apply(p, &sp)?;
            if !img.is_zero() && eigenvalue_of(&sp.poly, &img.poly).is_none() {
                return Ok(Some(format!("ℒ_{p} on SP{lam}")));
            }
        }
        Ok(None)
    });
    let shift = &(&RatFun::theta() * &RatFun::from_int(n as i64 - 1)) - &RatFun::from_int(m as i64);
    let second = run_check("ℒ₂ eigenvalue = c_λ + (θ(n−1)−m)|λ|", &hook, |lam| {
        let sp = super_jack(lam, n, m, SuperJackMethod::SkewExpansion)?;
        let img = quantum_integral_apply(2, &sp)?;
        let expected = &cms_eigenvalue(lam) + &(&shift * &RatFun::from_int(lam.weight() as i64));
        Ok(fail_if(img.poly != sp.poly.scale(&expected), || format!("λ = {lam}")))
    });
    SuiteReport { outcomes: vec![invariance, commute, eigen, second] }
}

pub fn filters(b: Bounds) -> SuiteReport {
    let gens = enumerate_partitions(b.max_weight.saturating_sub(1), None);
    let o = run_check("single-generator filters span CMS-invariant ideals", &gens, |g| {
        closure_violation(&Filter::new([g.clone()]), b.max_weight).map(|w| w.map(|w| format!("Ω{{{g}}}: {w}")))
    });
    SuiteReport { outcomes: vec![o] }
}

pub fn run(suite: Suite, b: Bounds) -> SuiteReport {
    match suite {
        Suite::Eigen => eigen(b),
        Suite::Kernel => kernel(b),
        Suite::Duality => duality(b),
        Suite::Tableau => tableau(b),
        Suite::Pieri => pieri(b),
        Suite::Integrals => integrals(b),
        Suite::Filters => filters(b),
        Suite::All => {
            let mut r = SuiteReport::default();
            for s in [
                Suite::Eigen,
                Suite::Tableau,
                Suite::Duality,
                Suite::Kernel,
                Suite::Pieri,
                Suite::Integrals,
                Suite::Filters,
            ] {
                r.extend(run(s, b));
            }
            r
        }
    }
}
