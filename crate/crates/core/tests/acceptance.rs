//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic in Q(θ).
//! Exits non-zero when any criterion fails or exceeds its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use jackalg::cms::{
    apply_cms, cms_eigenvalue, cms_operator_poly, dunkl_apply, integral_from_shifted, jack, pieri_psi_box,
};
use jackalg::deformed::{
    deformed_cms_apply, deformed_newton, deformed_pi_coefficient, eigenvalue_of, flat_point, is_in_deformed_algebra,
    kernel_check, phi, pi_coefficient, quantum_integral_apply, shifted_super_jack, super_jack, ShiftedConvention,
    SuperJackMethod,
};
use jackalg::ideals::{jack_expand, verify_ideal_closure, Filter};
use jackalg::multipoly::{named_vars, MultiPoly};
use jackalg::partitions::{enumerate_partitions, Partition};
use jackalg::ratfun::RatFun;
use jackalg::shifted::{
    bernoulli_sum_eval, check_duality, eval_at_partition, shifted_jack, shifted_jack_at_partition, shifted_power_sum,
    ShiftedMethod,
};
use jackalg::symfunc::{expand_in_variables, monomial_symmetric, Basis, SymFn};
use jackalg::tableau::jack_tableau;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T>(r: jackalg::error::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn parts(max: usize) -> Vec<Partition> {
    enumerate_partitions(max, None)
}

fn hook(max: usize, n: usize, m: usize) -> Vec<Partition> {
    enumerate_partitions(max, Some(&|l| l.in_fat_hook(n, m)))
}

fn jack_eigenrelation() -> Check {
    let ps = parts(6);
    ensure(ps.len() == 30, || format!("expected 30 partitions, got {}", ps.len()))?;
    for lam in &ps {
        let j = jack(lam);
        let ev = cms_eigenvalue(lam);
        ensure(e(apply_cms(&j))?.sub(&j.scale(&ev)).map_err(|x| x.to_string())?.is_zero(), || format!("λ = {lam}"))?;
        let w = lam.weight() as i64;
        let formula = RatFun::linear(2 * lam.conjugate().n_stat() as i64 + w, -2 * lam.n_stat() as i64);
        ensure(ev == formula, || format!("eigenvalue formula at λ = {lam}"))?;
    }
    Ok(format!("{} partitions", ps.len()))
}

fn tableau_equivalence() -> Check {
    let mut count = 0;
    for lam in parts(5) {
        for n in 1..=5 {
            let t = e(jack_tableau(&lam, n))?;
            ensure(t == e(expand_in_variables(&jack(&lam), n))?, || format!("λ = {lam}, N = {n}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (λ, N) pairs"))
}

fn shifted_characterization() -> Check {
    let n = 4;
    let theta = RatFun::theta();
    let small: Vec<Partition> = enumerate_partitions(5, Some(&|l| l.len() <= n));
    for lam in &small {
        let b = e(shifted_jack(lam, n, ShiftedMethod::Branching))?;
        for method in [ShiftedMethod::Vanishing, ShiftedMethod::Tableau] {
            ensure(b == e(shifted_jack(lam, n, method))?, || format!("{method:?} disagrees at λ = {lam}"))?;
        }
        for mu in small.iter().filter(|m| m.weight() <= lam.weight()) {
            let v = e(eval_at_partition(&b, mu))?;
            if mu == lam {
                ensure(v == lam.hook_product_h(), || format!("normalization at λ = {lam}"))?;
            } else {
                ensure(v.is_zero(), || format!("P*_{lam}({mu}) ≠ 0"))?;
            }
        }
    }
    let all = parts(6);
    let mut evp = 0;
    for lam in &all {
        for mu in all.iter().filter(|m| !lam.contained_in(m)) {
            ensure(shifted_jack_at_partition(lam, mu, &theta).is_zero(), || format!("extra vanishing P*_{lam}({mu})"))?;
            evp += 1;
        }
    }
    Ok(format!("{} shapes at N = 4, {evp} extra-vanishing pairs", small.len()))
}

fn duality() -> Check {
    let ps = parts(5);
    for lam in &ps {
        for mu in &ps {
            ensure(check_duality(lam, mu).is_zero(), || format!("λ = {lam}, μ = {mu}"))?;
        }
    }
    Ok(format!("{} pairs", ps.len() * ps.len()))
}

fn bernoulli_symmetry() -> Check {
    let theta = RatFun::theta();
    let inv = RatFun::theta_inv();
    let ps = parts(8);
    for k in 1..=5 {
        let sign = (-theta.clone()).pow(k as i32 - 1).map_err(|x| x.to_string())?;
        for lam in &ps {
            let lhs = bernoulli_sum_eval(k, &lam.conjugate(), &theta);
            ensure(lhs == &sign * &bernoulli_sum_eval(k, lam, &inv), || format!("k = {k}, λ = {lam}"))?;
        }
    }
    Ok(format!("k ≤ 5, {} partitions", ps.len()))
}

/// Sets the trailing variables to zero and drops them.
fn restrict(f: &MultiPoly, m: usize) -> MultiPoly {
    let mut g = f.clone();
    for k in (m..f.nvars()).rev() {
        g = g.set_zero(k).drop_var(k);
    }
    g
}

fn dunkl_operators() -> Check {
    let mut checked = 0;
    for n in 1..=3 {
        let vars = named_vars("x", n);
        let exps: Vec<Vec<u32>> = (0..5u32.pow(n as u32))
            .map(|code| (0..n).map(|k| (code / 5u32.pow(k as u32)) % 5).collect::<Vec<u32>>())
            .filter(|e| e.iter().sum::<u32>() <= 4)
            .collect();
        for ex in exps {
            let f = MultiPoly::monomial(vars.clone(), ex.clone(), RatFun::one());
            let images: Vec<MultiPoly> = (1..=n).map(|i| dunkl_apply(i, &f)).collect();
            for i in 1..=n {
                for j in i + 1..=n {
                    let a = dunkl_apply(i, &images[j - 1]);
                    ensure(a == dunkl_apply(j, &images[i - 1]), || format!("[D{i}, D{j}] on x^{ex:?}"))?;
                }
                for m in 1..n {
                    let lhs = restrict(&images[i - 1], m);
                    let rhs = dunkl_apply(i, &restrict(&f, m));
                    ensure(lhs == rhs, || format!("stability of D{i} from {n} to {m} on x^{ex:?}"))?;
                }
            }
            checked += 1;
        }
    }
    for n in [2, 3] {
        let vars = named_vars("x", n);
        let p2 = shifted_power_sum(2, n);
        for lam in enumerate_partitions(4, Some(&|l| l.len() <= n)) {
            let g = monomial_symmetric(&lam, &vars);
            let lhs = e(integral_from_shifted(&p2, &g))?;
            ensure(lhs == e(cms_operator_poly(&g))?, || format!("p*_2(D) ≠ CMS on m{lam}, N = {n}"))?;
        }
    }
    Ok(format!("{checked} monomials"))
}

fn intertwining() -> Check {
    let mut count = 0;
    for (n, m) in [(1, 1), (2, 1), (2, 2)] {
        for lam in parts(5) {
            let f = SymFn::element(Basis::P, &lam);
            let lhs = e(phi(&e(apply_cms(&f))?, n, m))?;
            let rhs = e(deformed_cms_apply(&e(phi(&f, n, m))?))?;
            ensure(lhs == rhs, || format!("p{lam} at (n,m) = ({n},{m})"))?;
            count += 1;
        }
    }
    Ok(format!("{count} power sums"))
}

fn kernel() -> Check {
    let mut count = 0;
    for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for lam in parts(8) {
            ensure(e(kernel_check(&lam, n, m))? == !lam.in_fat_hook(n, m), || format!("λ = {lam}, (n,m) = ({n},{m})"))?;
            count += 1;
        }
    }
    Ok(format!("{count} cases"))
}

fn bitableau_formula() -> Check {
    let mut count = 0;
    for n in 0..=2 {
        for m in 0..=2 {
            for lam in hook(4, n, m) {
                let a = e(super_jack(&lam, n, m, SuperJackMethod::Bitableau))?;
                ensure(a == e(super_jack(&lam, n, m, SuperJackMethod::ViaPhi))?, || format!("λ = {lam}, ({n},{m})"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} cases"))
}

fn shifted_super_jack_grid() -> Check {
    let mut grid = 0;
    for (n, m) in [(1, 1), (2, 1)] {
        let shapes = hook(4, n, m);
        for nu in &shapes {
            let sp = e(shifted_super_jack(nu, n, m, ShiftedConvention::Flat))?;
            for lam in shapes.iter().filter(|l| l.weight() <= nu.weight()) {
                let v = sp.evaluate(&e(flat_point(lam, n, m))?);
                let want = if lam == nu { nu.hook_product_h() } else { RatFun::zero() };
                ensure(v == want, || format!("SP*_{nu} at {lam}, ({n},{m})"))?;
                grid += 1;
            }
        }
    }
    // extra vanishing on 20 pairs spread over all non-containing pairs with |λ| > |ν|
    let (n, m) = (2, 1);
    let shapes = hook(5, n, m);
    let pairs: Vec<(&Partition, &Partition)> = shapes
        .iter()
        .flat_map(|nu| shapes.iter().map(move |l| (nu, l)))
        .filter(|(nu, l)| l.weight() > nu.weight() && !nu.contained_in(l))
        .collect();
    ensure(pairs.len() >= 20, || "fewer than 20 extra-vanishing pairs".into())?;
    let step = pairs.len() / 20;
    for (nu, lam) in pairs.iter().step_by(step).take(20) {
        let sp = e(shifted_super_jack(nu, n, m, ShiftedConvention::Flat))?;
        ensure(sp.evaluate(&e(flat_point(lam, n, m))?).is_zero(), || format!("extra vanishing SP*_{nu} at {lam}"))?;
    }
    Ok(format!("{grid} grid points, 20 extra-vanishing pairs"))
}

fn quantum_integrals() -> Check {
    let mut failures = Vec::new();
    let mut eig2 = 0;
    for (n, m) in [(1, 1), (2, 1)] {
        for r in 1..=3 {
            let g = deformed_newton(r, n, m);
            for p in 1..=3 {
                let img = e(quantum_integral_apply(p, &g))?;
                ensure(is_in_deformed_algebra(&img.poly, n, m), || format!("ℒ_{p} p_{r} left the algebra"))?;
                for q in p + 1..=3 {
                    let a = e(quantum_integral_apply(q, &img))?;
                    let b = e(quantum_integral_apply(p, &e(quantum_integral_apply(q, &g))?))?;
                    ensure(a == b, || format!("[ℒ_{p}, ℒ_{q}] p_{r} ≠ 0 at ({n},{m})"))?;
                }
            }
        }
        for lam in hook(3, n, m) {
            let sp = e(super_jack(&lam, n, m, SuperJackMethod::SkewExpansion))?;
            for p in 1..=3 {
                let img = e(quantum_integral_apply(p, &sp))?;
                let ev = eigenvalue_of(&sp.poly, &img.poly);
                ensure(ev.is_some() || lam.is_empty(), || format!("SP{lam} is not an eigenvector of ℒ_{p}"))?;
                if p == 2 {
                    let ev = ev.unwrap_or_else(RatFun::zero);
                    if ev != cms_eigenvalue(&lam) {
                        failures.push(format!("({n},{m}) λ = {lam}: ℒ₂ gives {ev}, cms_eigenvalue {}", cms_eigenvalue(&lam)));
                    } else {
                        eig2 += 1;
                    }
                }
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{eig2} ℒ₂ eigenvalues match"))
    } else {
        Err(format!(
            "invariance, commutativity and eigenvectors hold; ℒ₂ eigenvalue ≠ cms_eigenvalue in {} cases, first {}",
            failures.len(),
            failures[0]
        ))
    }
}

fn ideal_machinery() -> Check {
    let gens = parts(4);
    for g in &gens {
        let omega = Filter::new([g.clone()]);
        ensure(e(verify_ideal_closure(&omega, 7))?, || format!("closure fails for {omega}"))?;
    }
    let mut boxes = 0;
    for lam in parts(6) {
        for (_, nu) in lam.add_one_box() {
            ensure(!e(pieri_psi_box(&lam, &nu))?.is_zero(), || format!("ψ vanishes for {lam} → {nu}"))?;
            boxes += 1;
        }
    }
    let p1 = SymFn::basis_element(Basis::P, Partition::from_parts(&[1]), 2);
    let sq = e(jackalg::cms::multiply(&p1, &p1))?;
    let exp = e(jack_expand(&sq))?;
    let two = Partition::from_parts(&[2]);
    let one_one = Partition::from_parts(&[1, 1]);
    let want = RatFun::from_int(2).checked_div(&RatFun::linear(1, 1)).map_err(|x| x.to_string())?;
    ensure(exp.len() == 2 && exp[&two] == RatFun::one() && exp[&one_one] == want, || "p₁² expansion".into())?;
    Ok(format!("{} filters, {boxes} one-box coefficients", gens.len()))
}

fn generating_function() -> Check {
    let (n, m) = (2, 2);
    for d in 0..=5 {
        let lhs = e(phi(&pi_coefficient(d), n, m))?.poly;
        ensure(lhs == deformed_pi_coefficient(d, n, m), || format!("t-degree {d}"))?;
    }
    Ok("t-degree ≤ 5".into())
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, u64, fn() -> Check)> = vec![
        ("Jack eigenrelation", 60, jack_eigenrelation),
        ("tableau/triangular equivalence", 120, tableau_equivalence),
        ("shifted Jack characterization", 300, shifted_characterization),
        ("shifted Jack duality", 120, duality),
        ("Bernoulli symmetry", 30, bernoulli_symmetry),
        ("Dunkl operators", 60, dunkl_operators),
        ("CMS intertwining", 120, intertwining),
        ("kernel of φ", 300, kernel),
        ("bitableau formula", 300, bitableau_formula),
        ("shifted super-Jack interpolation", 300, shifted_super_jack_grid),
        ("quantum integrals", 300, quantum_integrals),
        ("ideal machinery", 120, ideal_machinery),
        ("generating function", 60, generating_function),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(budget);
        let line = match (&result, over) {
            (Ok(detail), false) => format!("PASS {:>2}. {name}: {detail} [{:.2}s]", k + 1, took.as_secs_f64()),
            (Ok(detail), true) => {
                format!("FAIL {:>2}. {name}: {detail} but took {:.2}s > {budget}s", k + 1, took.as_secs_f64())
            }
            (Err(why), _) => format!("FAIL {:>2}. {name}: {why} [{:.2}s]", k + 1, took.as_secs_f64()),
        };
        if result.is_err() || over {
            failed += 1;
        }
        println!("{line}");
    }
    println!("acceptance: {} passed, {failed} failed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
