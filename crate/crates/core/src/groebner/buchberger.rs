//! Buchberger's algorithm with the normal selection strategy and both of
//! Buchberger's pair criteria, producing reduced bases.

use std::cmp::Ordering;

use super::modpoly::{cmp_pos, ModPoly};
use crate::poly::{Monomial, Ring};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    comp: usize,
    lcm: Monomial,
}

/// Full reduction of `f` modulo `basis` (elements monic, nonzero).
pub(crate) fn normal_form(ring: &Ring, f: &ModPoly, basis: &[ModPoly]) -> ModPoly {
    let fld = ring.field();
    let mut rem = Vec::new();
    let mut cur = f.clone();
    let mut pos = 0;
    while pos < cur.terms.len() {
        let (comp, mon, c) = cur.terms[pos].clone();
        let divisor = basis.iter().find(|g| {
            let (gc, gm, _) = g.lead().expect("basis element is zero");
            *gc == comp && gm.divides(&mon)
        });
        match divisor {
            Some(g) => {
                let (_, gm, gcoef) = g.lead().unwrap();
                let q = gm.quotient_of(&mon).unwrap();
                let k = fld.mul(c, fld.inv(*gcoef));
                cur = cur.sub_scaled_from(pos, ring, k, &q, g);
                pos = 0;
            }
            None => {
                rem.push((comp, mon, c));
                pos += 1;
            }
        }
    }
    ModPoly { terms: rem }
}

pub(crate) fn s_polynomial(ring: &Ring, f: &ModPoly, g: &ModPoly) -> Option<ModPoly> {
    let (fc, fm, fcoef) = f.lead()?;
    let (gc, gm, gcoef) = g.lead()?;
    if fc != gc {
        return None;
    }
    let l = fm.lcm(gm);
    let fld = ring.field();
    let a = f.mul_term(ring, fld.inv(*fcoef), &fm.quotient_of(&l).unwrap());
    let b = g.mul_term(ring, fld.inv(*gcoef), &gm.quotient_of(&l).unwrap());
    Some(a.sub(ring, &b))
}

fn lead_of(g: &ModPoly) -> (usize, &Monomial) {
    let (c, m, _) = g.lead().unwrap();
    (*c, m)
}

/// Reduced Groebner basis (monic, sorted by decreasing leading term) of the
/// module generated by `gens`. `is_ideal` enables the coprime-leading-term criterion,
/// which is only valid in rank one.
pub(crate) fn reduced_basis(ring: &Ring, gens: &[ModPoly], is_ideal: bool) -> Vec<ModPoly> {
    let mut basis: Vec<ModPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let add = |basis: &mut Vec<ModPoly>, pairs: &mut Vec<Pair>, h: ModPoly| {
        let h = h.monic(ring);
        let (hc, hm) = lead_of(&h);
        let (hc, hm) = (hc, hm.clone());
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let (gc, gm) = lead_of(g);
            if gc == hc {
                pairs.push(Pair {
                    i,
                    j: k,
                    comp: hc,
                    lcm: gm.lcm(&hm),
                });
            }
        }
        basis.push(h);
    };

    for g in gens {
        let h = normal_form(ring, g, &basis);
        if !h.is_zero() {
            add(&mut basis, &mut pairs, h);
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first, ties broken by indices
        let idx = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                cmp_pos(ring, (pa.comp, &pa.lcm), (pb.comp, &pb.lcm))
                    .then((pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(idx);
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);

        if is_ideal && lead_of(fi).1.is_coprime(lead_of(fj).1) {
            continue;
        }
        if chain_criterion(&basis, &pairs, &pair) {
            continue;
        }
        let s = s_polynomial(ring, fi, fj).expect("pair with distinct components");
        let h = normal_form(ring, &s, &basis);
        if !h.is_zero() {
            add(&mut basis, &mut pairs, h);
        }
    }

    interreduce(ring, basis)
}

fn pending(pairs: &[Pair], a: usize, b: usize) -> bool {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    pairs.iter().any(|p| p.i == a && p.j == b)
}

fn chain_criterion(basis: &[ModPoly], pairs: &[Pair], pair: &Pair) -> bool {
    basis.iter().enumerate().any(|(k, g)| {
        if k == pair.i || k == pair.j {
            return false;
        }
        let (gc, gm) = lead_of(g);
        gc == pair.comp
            && gm.divides(&pair.lcm)
            && !pending(pairs, pair.i, k)
            && !pending(pairs, pair.j, k)
    })
}

fn interreduce(ring: &Ring, basis: Vec<ModPoly>) -> Vec<ModPoly> {
    // minimalize: drop elements whose leading term is divisible by another's
    let mut keep: Vec<ModPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let (gc, gm) = lead_of(g);
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            if i == j {
                return false;
            }
            let (hc, hm) = lead_of(h);
            hc == gc && hm.divides(gm) && (hm != gm || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<ModPoly> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = keep[i].terms[0].clone();
        let tail = ModPoly {
            terms: keep[i].terms[1..].to_vec(),
        };
        let mut red = normal_form(ring, &tail, &others);
        red.terms.insert(0, lead);
        out.push(red.monic(ring));
    }
    out.sort_by(|a, b| {
        let (ac, am) = lead_of(a);
        let (bc, bm) = lead_of(b);
        cmp_pos(ring, (bc, bm), (ac, am))
    });
    out
}

/// True when every S-polynomial of `basis` reduces to zero.
pub(crate) fn satisfies_buchberger_criterion(ring: &Ring, basis: &[ModPoly]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = s_polynomial(ring, &basis[i], &basis[j]) {
                if !normal_form(ring, &s, basis).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[allow(dead_code)]
pub(crate) fn compare_leads(ring: &Ring, a: &ModPoly, b: &ModPoly) -> Ordering {
    let (ac, am) = lead_of(a);
    let (bc, bm) = lead_of(b);
    cmp_pos(ring, (ac, am), (bc, bm))
}
