use super::*;
use crate::cms::{apply_cms, cms_eigenvalue, jack};
use crate::shifted::shifted_jack_at_partition;
use num_traits::Zero;

fn p(v: &[usize]) -> Partition {
    Partition::from_parts(v)
}

fn frac(a: RatFun, b: RatFun) -> RatFun {
    a.checked_div(&b).unwrap()
}

/// `−xy/θ + (1+θ)y²/(2θ²)` over `x1, y1`.
fn sp11() -> MultiPoly {
    let vars = xy_vars(1, 1);
    let theta = RatFun::theta();
    let mut out = MultiPoly::zero(vars);
    out.add_term(vec![1, 1], -RatFun::theta_inv());
    out.add_term(vec![0, 2], frac(RatFun::linear(1, 1), &RatFun::from_int(2) * &(&theta * &theta)));
    out
}

#[test]
fn newton_examples() {
    let p1 = deformed_newton(1, 2, 1);
    assert_eq!(p1.to_string(), "x1 + x2 - (1/θ)*y1");
    assert_eq!(deformed_newton(0, 2, 3).poly, MultiPoly::constant(xy_vars(2, 3), RatFun::linear(2, 0) - &RatFun::theta_inv().scale(&rational(3, 1))));
    let p2 = deformed_newton(2, 1, 1);
    assert_eq!(p2.poly, p2.x(1).pow(2).sub(&p2.y(1).pow(2).scale(&RatFun::theta_inv())));
}

#[test]
fn membership() {
    let vars = xy_vars(1, 1);
    let x = MultiPoly::var(vars.clone(), 0);
    let y = MultiPoly::var(vars, 1);
    assert!(!is_in_deformed_algebra(&x.add(&y), 1, 1));
    assert!(is_in_deformed_algebra(&x.sub(&y.scale(&RatFun::theta_inv())), 1, 1));
    for r in 0..=5 {
        for (n, m) in [(1, 1), (2, 1), (2, 2)] {
            assert!(is_in_deformed_algebra(&deformed_newton(r, n, m).poly, n, m));
        }
    }
    assert!(is_in_deformed_algebra(&discriminant_r(2, 1).poly, 2, 1));
}

#[test]
fn phi_examples() {
    let e2 = SymFn::element(Basis::E, &p(&[2]));
    assert_eq!(phi(&e2, 1, 1).unwrap().poly, sp11());
    let p1 = SymFn::element(Basis::P, &p(&[1]));
    assert_eq!(phi(&p1, 1, 1).unwrap(), deformed_newton(1, 1, 1));
    assert_eq!(phi(&SymFn::one(Basis::M, 3), 2, 2).unwrap(), DeformedPoly::constant(RatFun::one(), 2, 2));
}

#[test]
fn super_jack_examples() {
    for method in [SuperJackMethod::SkewExpansion, SuperJackMethod::Bitableau, SuperJackMethod::ViaPhi] {
        assert_eq!(super_jack(&p(&[1]), 2, 1, method).unwrap(), deformed_newton(1, 2, 1));
        assert_eq!(super_jack(&p(&[1, 1]), 1, 1, method).unwrap().poly, sp11());
        assert!(super_jack(&p(&[2, 2]), 1, 1, method).unwrap().is_zero());
    }
    assert!(kernel_check(&p(&[2, 2]), 1, 1).unwrap());
    assert!(!kernel_check(&p(&[5]), 1, 1).unwrap());
    assert!(!kernel_check(&p(&[2, 2, 1]), 2, 1).unwrap());
}

#[test]
fn methods_agree() {
    for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for lam in enumerate_partitions(4, Some(&|l| l.in_fat_hook(n, m))) {
            let a = super_jack(&lam, n, m, SuperJackMethod::SkewExpansion).unwrap();
            assert_eq!(a, super_jack(&lam, n, m, SuperJackMethod::Bitableau).unwrap(), "{lam} {n} {m}");
            assert_eq!(a, super_jack(&lam, n, m, SuperJackMethod::ViaPhi).unwrap(), "{lam} {n} {m}");
        }
    }
}

#[test]
fn kernel_is_complement_of_hook() {
    for (n, m) in [(1, 1), (2, 1)] {
        for lam in enumerate_partitions(6, None) {
            assert_eq!(kernel_check(&lam, n, m).unwrap(), !lam.in_fat_hook(n, m), "{lam}");
        }
    }
}

#[test]
fn leading_term_shape() {
    for (n, m) in [(1, 1), (2, 1), (1, 2)] {
        for lam in enumerate_partitions(5, Some(&|l| l.in_fat_hook(n, m))) {
            let sp = super_jack(&lam, n, m, SuperJackMethod::SkewExpansion).unwrap();
            let (e, c) = sp.poly.leading_term().unwrap();
            assert_eq!(*e, leading_exponents(&lam, n, m), "{lam}");
            let sign_neg = lam.tail(n).weight() % 2 == 1;
            let at_one = c.evaluate_at(&BigRational::one()).unwrap();
            assert_eq!(at_one < BigRational::zero(), sign_neg, "{lam} {c}");
        }
    }
}

#[test]
fn intertwining() {
    for (n, m) in [(1, 1), (2, 1)] {
        for lam in enumerate_partitions(4, None) {
            let f = SymFn::element(Basis::P, &lam);
            let lhs = phi(&apply_cms(&f).unwrap(), n, m).unwrap();
            let rhs = deformed_cms_apply(&phi(&f, n, m).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{lam} ({n},{m})");
        }
    }
}

#[test]
fn deformed_cms_examples() {
    let sp1 = super_jack(&p(&[1]), 1, 1, SuperJackMethod::SkewExpansion).unwrap();
    assert_eq!(deformed_cms_apply(&sp1).unwrap(), sp1);
    let sp = DeformedPoly::new(sp11(), 1, 1);
    assert_eq!(deformed_cms_apply(&sp).unwrap().poly, sp11().scale(&RatFun::linear(2, -2)));
    assert!(deformed_cms_apply(&DeformedPoly::constant(RatFun::from_int(3), 2, 1)).unwrap().is_zero());
    let bad = DeformedPoly::new(MultiPoly::var(xy_vars(1, 1), 0), 1, 1);
    assert!(matches!(deformed_cms_apply(&bad), Err(Error::NotInAlgebra(_))));
}

#[test]
fn quantum_integrals() {
    let (n, m) = (2, 1);
    for r in 1..=3 {
        let g = deformed_newton(r, n, m);
        assert_eq!(quantum_integral_apply(1, &g).unwrap().poly, g.poly.scale(&RatFun::from_int(r as i64)));
        for q in 1..=3 {
            let img = quantum_integral_apply(q, &g).unwrap();
            assert!(is_in_deformed_algebra(&img.poly, n, m), "L_{q} p_{r}");
            for s in 1..q {
                let a = quantum_integral_apply(s, &img).unwrap();
                let b = quantum_integral_apply(q, &quantum_integral_apply(s, &g).unwrap()).unwrap();
                assert_eq!(a, b, "[L_{s}, L_{q}] p_{r}");
            }
        }
    }
    assert!(quantum_integral_apply(3, &DeformedPoly::constant(RatFun::one(), n, m)).unwrap().is_zero());
}

#[test]
fn second_integral_is_cms_plus_euler() {
    // ℒ₂ = ℒ_{n,m,θ} + (θ(n−1) − m)·ℒ₁ on the deformed algebra
    for (n, m) in [(1, 1), (2, 1), (1, 2)] {
        let shift = &(&RatFun::theta() * &RatFun::from_int(n as i64 - 1)) - &RatFun::from_int(m as i64);
        for lam in enumerate_partitions(3, Some(&|l| l.in_fat_hook(n, m))) {
            let sp = super_jack(&lam, n, m, SuperJackMethod::SkewExpansion).unwrap();
            let l2 = quantum_integral_apply(2, &sp).unwrap();
            let ev = eigenvalue_of(&sp.poly, &l2.poly).unwrap();
            let expected = &cms_eigenvalue(&lam) + &(&shift * &RatFun::from_int(lam.weight() as i64));
            assert_eq!(ev, expected, "{lam} ({n},{m})");
            for q in [1, 3] {
                let lq = quantum_integral_apply(q, &sp).unwrap();
                assert!(eigenvalue_of(&sp.poly, &lq.poly).is_some(), "L_{q} on SP{lam}");
            }
        }
    }
}

#[test]
fn expansion_in_super_jacks() {
    let (n, m) = (1, 1);
    let sp = super_jack(&p(&[2, 1]), n, m, SuperJackMethod::SkewExpansion).unwrap();
    let e = super_jack_expand(&sp, 3).unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e[&p(&[2, 1])], RatFun::one());
    let p1 = deformed_newton(1, n, m);
    let sq = DeformedPoly::new(p1.poly.mul(&p1.poly), n, m);
    let e = super_jack_expand(&sq, 2).unwrap();
    assert_eq!(e[&p(&[2])], RatFun::one());
    assert_eq!(e[&p(&[1, 1])], frac(RatFun::from_int(2), RatFun::linear(1, 1)));
    let r = discriminant_r(1, 1);
    let e = super_jack_expand(&r, 2).unwrap();
    assert!(e.keys().all(|l| l.contained_in(l) && Partition::rectangle(1, 1).contained_in(l)));
    let bad = DeformedPoly::new(MultiPoly::var(xy_vars(1, 1), 0), 1, 1);
    assert!(matches!(super_jack_expand(&bad, 1), Err(Error::NotInAlgebra(_))));
}

#[test]
fn r_times_x_support() {
    let r = discriminant_r(1, 1);
    let f = DeformedPoly::new(r.poly.mul(&r.x(1)), 1, 1);
    let e = super_jack_expand(&f, 3).unwrap();
    assert!(!e.is_empty());
    let rect = Partition::rectangle(1, 1);
    assert!(e.keys().all(|l| rect.contained_in(l)));
    // the support also contains the N×(M+1) rectangle inherited from R_{N,M+1}
    let wide = Partition::rectangle(1, 2);
    assert!(e.keys().all(|l| wide.contained_in(l)));
    assert_eq!(e.keys().cloned().collect::<Vec<_>>(), vec![p(&[3]), p(&[2, 1])]);
}

#[test]
fn r_support_contains_rectangle() {
    for (n, m) in [(1, 1), (1, 2), (2, 1)] {
        let r = discriminant_r(n, m);
        let e = super_jack_expand(&r, 2 * n * m).unwrap();
        let rect = Partition::rectangle(n, m);
        assert!(e.keys().all(|l| rect.contained_in(l)), "({n},{m})");
    }
}

#[test]
fn shifted_super_jack_single_box() {
    let s = shifted_super_jack(&p(&[1]), 2, 2, ShiftedConvention::Flat).unwrap();
    let vars = xy_vars(2, 2);
    let expect = (0..4).fold(MultiPoly::zero(vars.clone()), |acc, k| acc.add(&MultiPoly::var(vars.clone(), k)));
    assert_eq!(s, expect);
    assert!(matches!(
        shifted_super_jack(&p(&[2, 2]), 1, 1, ShiftedConvention::Flat),
        Err(Error::NotInFatHook(..))
    ));
}

#[test]
fn shifted_super_jack_interpolation() {
    for (n, m) in [(1, 1), (2, 1)] {
        let hook: Vec<Partition> = enumerate_partitions(4, Some(&|l| l.in_fat_hook(n, m)));
        for nu in &hook {
            let flat = shifted_super_jack(nu, n, m, ShiftedConvention::Flat).unwrap();
            let natural = shifted_super_jack(nu, n, m, ShiftedConvention::Natural).unwrap();
            for lam in &hook {
                let v = flat.evaluate(&flat_point(lam, n, m).unwrap());
                assert_eq!(v, natural.evaluate(&natural_point(lam, n, m).unwrap()));
                assert_eq!(v, shifted_jack_at_partition(nu, lam, &RatFun::theta()));
                if lam == nu {
                    assert_eq!(v, nu.hook_product_h());
                } else if lam.weight() <= nu.weight() || !nu.contained_in(lam) {
                    assert!(v.is_zero(), "{nu} at {lam}");
                }
            }
        }
    }
}

#[test]
fn shifted_super_jack_top_term() {
    let (n, m) = (2, 1);
    for lam in enumerate_partitions(3, Some(&|l| l.in_fat_hook(n, m))) {
        let s = shifted_super_jack(&lam, n, m, ShiftedConvention::Natural).unwrap();
        let sp = super_jack(&lam, n, m, SuperJackMethod::SkewExpansion).unwrap();
        let scaled = sp.poly.scale_var(n, &(-RatFun::theta()));
        assert_eq!(s.homogeneous_part(lam.weight() as u32), scaled, "{lam}");
    }
}

#[test]
fn natural_bernoulli_matches_frobenius_evaluation() {
    assert!(phi_natural_bernoulli(3, 0, 0).is_zero());
    for (n, m) in [(1, 1), (2, 1), (1, 2)] {
        for k in 1..=4 {
            let f = phi_natural_bernoulli(k, n, m);
            for lam in enumerate_partitions(5, Some(&|l| l.in_fat_hook(n, m))) {
                let v = f.evaluate(&natural_point(&lam, n, m).unwrap());
                assert_eq!(v, bernoulli_natural_eval(k, &lam), "k={k} {lam} ({n},{m})");
            }
        }
    }
}

#[test]
fn rho_matches_frobenius_shift() {
    let (n, m) = (2, 1);
    let r = rho(n, m);
    for lam in enumerate_partitions(4, Some(&|l| l.in_fat_hook(n, m))) {
        let nat = natural_point(&lam, n, m).unwrap();
        let flat = flat_point(&lam, n, m).unwrap();
        for k in 0..n + m {
            assert_eq!(&nat[k] + &r[k], flat[k]);
        }
    }
}

#[test]
fn generating_function() {
    for d in 0..=4 {
        for (n, m) in [(1, 1), (2, 1)] {
            assert_eq!(phi(&pi_coefficient(d), n, m).unwrap().poly, deformed_pi_coefficient(d, n, m), "d={d}");
        }
    }
}

#[test]
fn jack_images_are_in_algebra() {
    for lam in enumerate_partitions(3, None) {
        let sp = phi(&jack(&lam), 2, 1).unwrap();
        assert!(is_in_deformed_algebra(&sp.poly, 2, 1));
    }
}

