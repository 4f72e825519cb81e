//! Vectors in a free module R^n as a single sorted term list under a
//! position-over-term order: lower component index dominates, then the
//! ring's monomial order.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::{Monomial, Polynomial, Ring};

pub(crate) type ModTerm = (usize, Monomial, u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModPoly {
    pub(crate) terms: Vec<ModTerm>,
}

#[inline]
pub(crate) fn cmp_pos(ring: &Ring, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0)
        .then_with(|| ring.order().compare(a.1.exps(), b.1.exps()))
}

impl ModPoly {
    pub(crate) fn from_vector(v: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (i, f) in v.iter().enumerate() {
            for (m, c) in f.terms() {
                terms.push((i, m.clone(), *c));
            }
        }
        // Components are emitted in increasing index and each polynomial is already
        // sorted, so the list is in position-over-term order.
        ModPoly { terms }
    }

    pub(crate) fn to_vector(&self, ring: &Arc<Ring>, rank: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); rank];
        for (i, m, c) in &self.terms {
            parts[*i].push((m.clone(), *c));
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_sorted(ring, t))
            .collect()
    }

    #[inline]
    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub(crate) fn lead(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    pub(crate) fn monic(mut self, ring: &Ring) -> Self {
        if let Some(&(_, _, c)) = self.terms.first() {
            if c != 1 {
                let f = ring.field();
                let inv = f.inv(c);
                for t in &mut self.terms {
                    t.2 = f.mul(t.2, inv);
                }
            }
        }
        self
    }

    /// self - c * m * other, where the subtraction is applied to the tail
    /// starting at `from`.
    pub(crate) fn sub_scaled_from(
        &self,
        from: usize,
        ring: &Ring,
        c: u32,
        m: &Monomial,
        other: &ModPoly,
    ) -> ModPoly {
        let f = ring.field();
        let nc = f.neg(c);
        let a = &self.terms[from..];
        let mut out = Vec::with_capacity(a.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let mut scaled = |t: &ModTerm| (t.0, t.1.mul(m), f.mul(t.2, nc));
        while i < a.len() && j < other.terms.len() {
            let bt = &other.terms[j];
            let bm = bt.1.mul(m);
            match cmp_pos(ring, (a[i].0, &a[i].1), (bt.0, &bm)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bt.0, bm, f.mul(bt.2, nc)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.add(a[i].2, f.mul(bt.2, nc));
                    if v != 0 {
                        out.push((a[i].0, bm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(&mut scaled));
        ModPoly { terms: out }
    }

    pub(crate) fn mul_term(&self, ring: &Ring, c: u32, m: &Monomial) -> ModPoly {
        let f = ring.field();
        ModPoly {
            terms: self
                .terms
                .iter()
                .map(|(i, t, d)| (*i, t.mul(m), f.mul(*d, c)))
                .filter(|t| t.2 != 0)
                .collect(),
        }
    }

    pub(crate) fn sub(&self, ring: &Ring, other: &ModPoly) -> ModPoly {
        self.sub_scaled_from(0, ring, 1, &Monomial::one(ring.nvars()), other)
    }
}
