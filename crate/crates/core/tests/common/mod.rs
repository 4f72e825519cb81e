//! Random instance generators and independent oracles shared by the
//! integration tests. Nothing here calls the Gröbner engine.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use frobkit::{Monomial, PolyMatrix, Polynomial, Ring, Submodule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_monomial(rng: &mut impl Rng, nvars: usize, max_deg: u32) -> Monomial {
    let total = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; nvars];
    for _ in 0..total {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(&exps)
}

pub fn random_poly(rng: &mut impl Rng, ring: &Arc<Ring>, max_deg: u32, max_terms: usize) -> Polynomial {
    let n = rng.gen_range(1..=max_terms);
    let p = ring.p() as i64;
    let mut f = Polynomial::zero(ring);
    for _ in 0..n {
        let m = random_monomial(rng, ring.nvars(), max_deg);
        f = &f + &Polynomial::term(ring, rng.gen_range(1..p), m);
    }
    f
}

pub fn random_nonzero_poly(rng: &mut impl Rng, ring: &Arc<Ring>, max_deg: u32, max_terms: usize) -> Polynomial {
    loop {
        let f = random_poly(rng, ring, max_deg, max_terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random homogeneous polynomial of the given degree.
pub fn random_homogeneous(rng: &mut impl Rng, ring: &Arc<Ring>, deg: u32, max_terms: usize) -> Polynomial {
    let mut f = Polynomial::zero(ring);
    let p = ring.p() as i64;
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mut exps = vec![0u32; ring.nvars()];
        for _ in 0..deg {
            exps[rng.gen_range(0..ring.nvars())] += 1;
        }
        f = &f + &Polynomial::term(ring, rng.gen_range(1..p), Monomial::new(&exps));
    }
    f
}

pub fn random_vector(rng: &mut impl Rng, ring: &Arc<Ring>, n: usize, max_deg: u32, max_terms: usize) -> Vec<Polynomial> {
    (0..n)
        .map(|_| {
            if rng.gen_bool(0.25) {
                Polynomial::zero(ring)
            } else {
                random_poly(rng, ring, max_deg, max_terms)
            }
        })
        .collect()
}

pub fn random_matrix(rng: &mut impl Rng, ring: &Arc<Ring>, rows: usize, cols: usize, max_deg: u32, max_terms: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(ring, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(0.75) {
                m.set(i, j, random_poly(rng, ring, max_deg, max_terms));
            }
        }
    }
    m
}

pub fn random_submodule(rng: &mut impl Rng, ring: &Arc<Ring>, n: usize, ngens: usize, max_deg: u32) -> Submodule {
    let gens = (0..ngens).map(|_| random_vector(rng, ring, n, max_deg, 3)).collect();
    Submodule::new(ring, n, gens).unwrap()
}

/// The submodule m^[s] R^n generated by x_i^s e_j.
pub fn box_generators(ring: &Arc<Ring>, n: usize, s: u32) -> Vec<Vec<Polynomial>> {
    let d = ring.nvars();
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..d {
            let mut v = vec![Polynomial::zero(ring); n];
            v[j] = Polynomial::term(ring, 1, Monomial::var(d, i, s));
            out.push(v);
        }
    }
    out
}

/// Rank of a dense matrix over F_p by plain Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let inv = |a: u64| (1..p).find(|b| a * b % p == 1).unwrap();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let k = inv(rows[rank][c] % p);
        for x in rows[rank].iter_mut() {
            *x = *x * k % p;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_multiple_of(p) {
                let f = rows[r][c] % p;
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=deg {
        for mut rest in monomials_of_degree(nvars - 1, deg - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Membership of f in the ideal of homogeneous generators, decided degree by
/// degree with Macaulay matrices: a homogeneous component of degree D lies in
/// the ideal iff it is in the span of the products m*g with deg(m*g) = D.
pub fn macaulay_member(f: &Polynomial, gens: &[Polynomial]) -> bool {
    let ring = f.ring().clone();
    let p = ring.p() as u64;
    let mut by_degree: BTreeMap<u64, Vec<(Vec<u32>, u32)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        by_degree.entry(m.degree()).or_default().push((m.exps().to_vec(), *c));
    }
    for (deg, comp) in by_degree {
        let mut rows: Vec<BTreeMap<Vec<u32>, u32>> = Vec::new();
        for g in gens {
            let Some(gd) = g.total_degree() else { continue };
            if gd > deg {
                continue;
            }
            for m in monomials_of_degree(ring.nvars(), (deg - gd) as u32) {
                let prod = g.mul_term(1, &Monomial::new(&m));
                rows.push(prod.terms().iter().map(|(k, c)| (k.exps().to_vec(), *c)).collect());
            }
        }
        let cols = monomials_of_degree(ring.nvars(), deg as u32);
        let dense = |r: &BTreeMap<Vec<u32>, u32>| cols.iter().map(|c| *r.get(c).unwrap_or(&0) as u64).collect::<Vec<_>>();
        let mut mat: Vec<Vec<u64>> = rows.iter().map(dense).collect();
        let base = rank_mod_p(mat.clone(), p);
        mat.push(dense(&comp.into_iter().collect()));
        if rank_mod_p(mat, p) != base {
            return false;
        }
    }
    true
}

/// All polynomials with every monomial of degree <= d, for tiny p, d, nvars.
pub fn all_polys_up_to(ring: &Arc<Ring>, d: u32) -> Vec<Polynomial> {
    let monos: Vec<Vec<u32>> = (0..=d).flat_map(|k| monomials_of_degree(ring.nvars(), k)).collect();
    let p = ring.p() as u64;
    let total = p.pow(monos.len() as u32);
    (0..total)
        .map(|mut n| {
            let mut f = Polynomial::zero(ring);
            for m in &monos {
                let c = (n % p) as i64;
                n /= p;
                if c != 0 {
                    f = &f + &Polynomial::term(ring, c, Monomial::new(m));
                }
            }
            f
        })
        .collect()
}

/// Remainder of multivariate division of f by the list g, using only the
/// ring order and polynomial arithmetic.
pub fn division_remainder(f: &Polynomial, g: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field();
    let mut rest = f.clone();
    let mut rem = Polynomial::zero(&ring);
    while let Some((m, c)) = rest.leading_term().cloned() {
        let divisor = g.iter().find_map(|gi| {
            let (lm, lc) = gi.leading_term()?;
            lm.divides(&m).then(|| (gi, lm.quotient_of(&m).unwrap(), *lc))
        });
        match divisor {
            Some((gi, q, lc)) => {
                let k = field.mul(c, field.inv(lc));
                rest = &rest - &gi.mul_term(k, &q);
            }
            None => {
                let t = Polynomial::term(&ring, c as i64, m);
                rem = &rem + &t;
                rest = &rest - &t;
            }
        }
    }
    rem
}

/// S-polynomial of two polynomials from their leading terms.
pub fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.ring().field();
    let (mf, cf) = f.leading_term().unwrap();
    let (mg, cg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_term(field.inv(*cf), &mf.quotient_of(&l).unwrap());
    let b = g.mul_term(field.inv(*cg), &mg.quotient_of(&l).unwrap());
    &a - &b
}

/// A random valid presentation over F_p[x] whose module fits in the window
/// s = 3: A carries the extra columns x^3 e_j.
pub fn random_presentation(rng: &mut impl Rng, p: u32) -> frobkit::ThetaPresentation {
    let r = Ring::standard(p, 1).unwrap();
    loop {
        let alpha = if rng.gen_bool(0.6) { 1 } else { 2 };
        let extra = rng.gen_range(0..=2);
        // columns without constant terms, so that M is rarely zero
        let mut cols: Vec<Vec<Polynomial>> = (0..extra)
            .map(|_| {
                let shift = Monomial::new(&[rng.gen_range(1..=2)]);
                random_vector(rng, &r, alpha, 2, 2).iter().map(|f| f.mul_term(1, &shift)).collect()
            })
            .collect();
        cols.extend(box_generators(&r, alpha, 3));
        let a = PolyMatrix::from_columns(&r, alpha, &cols).unwrap();
        for _ in 0..50 {
            let mut b = PolyMatrix::zeros(&r, alpha, alpha);
            if rng.gen_bool(0.5) {
                // a scalar x^t u with u a unit: valid once t is large enough, and
                // then usually not nilpotent
                let t = if rng.gen_bool(0.7) { (p - 1) * rng.gen_range(1..=3) } else { rng.gen_range(0..=3 * (p - 1)) };
                let u = &random_poly(rng, &r, 2, 2).mul_term(1, &Monomial::new(&[1])) + &Polynomial::one(&r);
                let f = u.mul_term(1, &Monomial::new(&[t]));
                for i in 0..alpha {
                    b.set(i, i, f.clone());
                }
                if let Ok(pres) = frobkit::ThetaPresentation::new(a.clone(), b) {
                    return pres;
                }
                continue;
            }
            for i in 0..alpha {
                for j in 0..alpha {
                    if rng.gen_bool(0.8) {
                        // x^t times a unit often keeps Theta from being nilpotent
                        let t = rng.gen_range(0..=3 * (p - 1));
                        let mut f = random_poly(rng, &r, 2, 2);
                        if rng.gen_bool(0.5) {
                            f = &f + &Polynomial::one(&r);
                        }
                        b.set(i, j, f.mul_term(1, &Monomial::new(&[t])));
                    }
                }
            }
            if let Ok(pres) = frobkit::ThetaPresentation::new(a.clone(), b) {
                return pres;
            }
        }
    }
}

/// A random (B, V) pair with V ⊇ m^[3] R^n; about a third of the V are made
/// compatible by taking closures.
pub fn random_compatibility_instance(rng: &mut impl Rng, case: usize) -> (frobkit::NearSplitting, Submodule) {
    let p = [2, 3][case % 2];
    let d = 1 + (case / 2) % 2;
    let n = 1 + (case / 4) % 2;
    let r = Ring::standard(p, d).unwrap();
    let b = if case.is_multiple_of(5) {
        // monomial diagonal splittings are compatible with many monomial submodules
        let mut b = PolyMatrix::zeros(&r, n, n);
        for i in 0..n {
            let m = random_monomial(rng, d, 3);
            b.set(i, i, Polynomial::term(&r, 1, m));
        }
        b
    } else {
        random_matrix(rng, &r, n, n, 3, 2)
    };
    let s = frobkit::NearSplitting::new(b).unwrap();
    let mut gens: Vec<Vec<Polynomial>> = (0..rng.gen_range(0..=2))
        .map(|_| {
            if case.is_multiple_of(5) {
                let mut v = vec![Polynomial::zero(&r); n];
                v[rng.gen_range(0..n)] = Polynomial::term(&r, 1, random_monomial(rng, d, 3));
                v
            } else {
                random_vector(rng, &r, n, 3, 2)
            }
        })
        .collect();
    gens.extend(box_generators(&r, n, 3));
    let mut v = Submodule::new(&r, n, gens).unwrap();
    if case % 3 == 1 {
        v = frobkit::splitcompat::compatible_closure(&s, &v, 50).unwrap();
    }
    (s, v)
}

/// A presentation of Ann_{E^a}(x) twisted by B = x^(p-1) U with U(0)
/// invertible; Theta has no nilpotents there.
pub fn random_reduced_presentation(rng: &mut impl Rng, p: u32) -> frobkit::ThetaPresentation {
    let r = Ring::standard(p, 1).unwrap();
    let x = Polynomial::var(&r, 0);
    let alpha = if rng.gen_bool(0.5) { 1 } else { 2 };
    loop {
        let mut a = PolyMatrix::zeros(&r, alpha, alpha);
        let mut b = PolyMatrix::zeros(&r, alpha, alpha);
        let mut constant = Vec::new();
        for i in 0..alpha {
            let mut row = Vec::new();
            for j in 0..alpha {
                let unit = &Polynomial::constant(&r, rng.gen_range(0..p as i64)) + &(&x * &random_poly(rng, &r, 1, 2));
                row.push(unit.coeff(&Monomial::one(1)) as u64);
                b.set(i, j, &x.pow(p as u64 - 1) * &unit);
            }
            constant.push(row);
            a.set(i, i, x.clone());
        }
        if rank_mod_p(constant, p as u64) < alpha {
            continue;
        }
        return frobkit::ThetaPresentation::new(a, b).expect("valid by construction");
    }
}
