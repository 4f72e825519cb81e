mod common;

use common::*;
use frobkit::{
    frobenius_root, hom_set, solve_semilinear, trace, DegreeBound, Monomial, Polynomial, Ring,
    SemilinearProblem, Submodule,
};
use rand::Rng;

fn random_member_of(rng: &mut impl Rng, w: &Submodule, terms: usize) -> Vec<Polynomial> {
    let ring = w.ring();
    let mut v = vec![Polynomial::zero(ring); w.rank()];
    for g in w.generators() {
        let c = random_poly(rng, ring, 1, terms);
        for (vi, gi) in v.iter_mut().zip(g) {
            *vi = &*vi + &(&c * gi);
        }
    }
    v
}

#[test]
fn adjunction_law() {
    let mut rng = rng(21);
    let mut positives = 0;
    for case in 0..200 {
        let p = [2, 3][case % 2];
        let d = 1 + case % 2;
        let n = 1 + (case / 4) % 2;
        let e = 1 + (case / 2) % 2;
        let r = Ring::standard(p, d).unwrap();
        let ngens = rng.gen_range(1..=2);
        let target = random_submodule(&mut rng, &r, n, ngens, 2);
        let bracket = target.bracket_power(e as u32).unwrap();
        let w = if case % 3 == 0 {
            let gens = (0..2).map(|_| random_member_of(&mut rng, &bracket, 2)).collect();
            Submodule::new(&r, n, gens).unwrap()
        } else {
            random_submodule(&mut rng, &r, n, 2, 4)
        };
        let lhs = bracket.contains_submodule(&w).unwrap();
        let rhs = target.contains_submodule(&frobenius_root(&w, e as u32).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "case {case}");
        positives += lhs as usize;
    }
    assert!(positives >= 60);
}

#[test]
fn root_of_monomial_ideals() {
    // (x^a y^b)^[1/q] = (x^floor(a/q) y^floor(b/q))
    for p in [2u32, 3] {
        let r = Ring::standard(p, 2).unwrap();
        for e in 1..=2u32 {
            let q = p.pow(e);
            for a in 0..7u32 {
                for b in 0..7u32 {
                    let f = Polynomial::term(&r, 1, Monomial::new(&[a, b]));
                    let root = frobenius_root(&Submodule::ideal(&r, vec![f]).unwrap(), e).unwrap();
                    let g = Polynomial::term(&r, 1, Monomial::new(&[a / q, b / q]));
                    assert!(root.equals(&Submodule::ideal(&r, vec![g]).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn root_is_additive_and_inverts_bracket() {
    let mut rng = rng(22);
    for case in 0..60 {
        let p = [2, 3][case % 2];
        let r = Ring::standard(p, 2).unwrap();
        let n = 1 + case % 2;
        let e = 1 + (case / 2 % 2) as u32;
        let w1 = random_submodule(&mut rng, &r, n, 2, 3);
        let w2 = random_submodule(&mut rng, &r, n, 1, 3);
        let lhs = frobenius_root(&w1.sum(&w2).unwrap(), e).unwrap();
        let rhs = frobenius_root(&w1, e).unwrap().sum(&frobenius_root(&w2, e).unwrap()).unwrap();
        assert!(lhs.equals(&rhs).unwrap(), "case {case}");
        let back = frobenius_root(&w1.bracket_power(e).unwrap(), e).unwrap();
        assert!(back.equals(&w1).unwrap(), "case {case}");
        // iterating single roots agrees with the e-fold root
        let twice = frobenius_root(&frobenius_root(&w1, 1).unwrap(), 1).unwrap();
        assert!(twice.equals(&frobenius_root(&w1, 2).unwrap()).unwrap());
    }
}

#[test]
fn trace_laws() {
    let mut rng = rng(23);
    for case in 0..100 {
        let p = [2, 3, 5][case % 3];
        let r = Ring::standard(p, 1 + case % 2).unwrap();
        let f = random_poly(&mut rng, &r, 6, 4);
        let g = random_poly(&mut rng, &r, 3, 3);
        let gp = g.frobenius_power(1).unwrap();
        assert_eq!(trace(&(&gp * &f)), &g * &trace(&f), "case {case}");
        assert_eq!(trace(&(&f + &g)), &trace(&f) + &trace(&g));
    }
}

#[test]
fn trace_images_generate_the_root() {
    let mut rng = rng(24);
    for case in 0..40 {
        let p = [2, 3][case % 2];
        let r = Ring::standard(p, 2).unwrap();
        let f = random_nonzero_poly(&mut rng, &r, 5, 4);
        let mut images = Vec::new();
        for a in 0..p {
            for b in 0..p {
                images.push(trace(&f.mul_term(1, &Monomial::new(&[a, b]))));
            }
        }
        let from_trace = Submodule::ideal(&r, images).unwrap();
        let root = frobenius_root(&Submodule::ideal(&r, vec![f.clone()]).unwrap(), 1).unwrap();
        assert!(from_trace.equals(&root).unwrap(), "case {case}: {f}");
    }
}

#[test]
fn semilinear_solutions_are_few_and_exact() {
    let mut rng = rng(25);
    for case in 0..50 {
        let p = [2, 3][case % 2];
        let r = Ring::standard(p, 2).unwrap();
        let u = random_nonzero_poly(&mut rng, &r, 4, 3);
        let v = random_nonzero_poly(&mut rng, &r, 4, 3);
        let zero = Submodule::zero(&r, 1);
        let problem = SemilinearProblem::new(u.clone(), v.clone(), zero.clone(), zero, DegreeBound::Automatic).unwrap();
        let sol = solve_semilinear(&problem).unwrap();
        assert!(sol.cardinality() <= p as u128, "case {case}");
        for w in sol.elements() {
            assert!((&(&v * &w.pow(p as u64)) - &(&u * &w)).is_zero());
        }
    }
}

#[test]
fn semilinear_matches_exhaustive_search() {
    let mut rng = rng(26);
    let mut nontrivial = 0;
    for case in 0..30 {
        let p = [2, 3][case % 2];
        let r = Ring::standard(p, 2).unwrap();
        // u = v * c^(p-1) for some c makes w = c a solution
        let v = random_nonzero_poly(&mut rng, &r, 2, 2);
        let c = if case % 3 == 0 { random_poly(&mut rng, &r, 1, 2) } else { random_poly(&mut rng, &r, 2, 2) };
        let u = if case % 4 == 3 { random_nonzero_poly(&mut rng, &r, 3, 3) } else { &v * &c.pow(p as u64 - 1) };
        if u.is_zero() {
            continue;
        }
        let zero = Submodule::zero(&r, 1);
        let problem = SemilinearProblem::new(u.clone(), v.clone(), zero.clone(), zero, DegreeBound::Automatic).unwrap();
        let d = problem.resolved_degree_bound().unwrap();
        if d > 2 || (p == 3 && d > 1) {
            continue;
        }
        let found = solve_semilinear(&problem).unwrap().elements();
        let brute: Vec<Polynomial> = all_polys_up_to(&r, d as u32)
            .into_iter()
            .filter(|w| (&(&v * &w.pow(p as u64)) - &(&u * w)).is_zero())
            .collect();
        assert_eq!(found.len(), brute.len(), "case {case}");
        assert!(brute.iter().all(|w| found.contains(w)));
        nontrivial += (found.len() > 1) as usize;
    }
    assert!(nontrivial >= 5);
}

#[test]
fn example_hom_sets_are_scalars() {
    for p in [2u32, 3] {
        let r = Ring::standard(p, 1).unwrap();
        let x = Polynomial::var(&r, 0);
        let i = Submodule::ideal(&r, vec![x.clone()]).unwrap();
        let u = x.pow(p as u64);
        let h = hom_set(&i, &u, &i, &u, DegreeBound::Explicit(1)).unwrap();
        let expect: Vec<Polynomial> = (0..p as i64).map(|c| Polynomial::constant(&r, c)).collect();
        assert_eq!(h.cosets.len(), p as usize);
        assert!(expect.iter().all(|c| h.cosets.contains(c)));
    }
}
