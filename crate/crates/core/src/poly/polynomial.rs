use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::Monomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// A sparse polynomial over F_p. Terms are kept sorted from largest to
/// smallest monomial under the ring's order and never carry a zero coefficient.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && *self.ring == *other.ring
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<Ring>, c: i64) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    /// The variable with index `i`.
    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index {i} out of range");
        Self::term(ring, 1, Monomial::var(ring.nvars(), i, 1))
    }

    pub fn term(ring: &Arc<Ring>, c: i64, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
        let c = ring.field().from_i64(c);
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from arbitrary (exponents, coefficient) pairs, combining duplicates.
    pub fn from_terms<'a>(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (&'a [u32], i64)>,
    ) -> Self {
        let f = ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), ring.nvars(), "monomial arity does not match ring");
            let c = f.from_i64(c);
            let slot = acc.entry(Monomial::new(e)).or_insert(0);
            *slot = f.add(*slot, c);
        }
        Self::from_map(ring, acc)
    }

    pub(crate) fn from_map(ring: &Arc<Ring>, acc: HashMap<Monomial, u32>) -> Self {
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(b.0.exps(), a.0.exps()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already sorted and nonzero.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1 == 1 && self.terms[0].0.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Coefficient of a given monomial.
    pub fn coeff(&self, m: &Monomial) -> u32 {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|(t, _)| order.compare(m.exps(), t.exps()))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let f = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: u32| if negate_other { f.neg(c) } else { c };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order.compare(ma.exps(), mb.exps()) {
                Ordering::Greater => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), sign(*cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(*ca, sign(*cb));
                    if c != 0 {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(*c))));
        Polynomial::from_sorted(&self.ring, out)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(*c, m);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(*c, m);
        }
        let f = self.ring.field();
        let mut acc: HashMap<Monomial, u32> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let slot = acc.entry(ma.mul(mb)).or_insert(0);
                *slot = f.add(*slot, f.mul(*ca, *cb));
            }
        }
        Polynomial::from_map(&self.ring, acc)
    }

    /// Multiply by the single term c*m. Monomial orders are multiplicative, so
    /// the term order is preserved.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| (t.mul(m), f.mul(*d, c)))
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn scale(&self, c: i64) -> Polynomial {
        let c = self.ring.field().from_i64(c);
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    /// Leading coefficient scaled to one (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field().inv(*c);
                self.scale(inv as i64)
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// f^(p^e). Over the prime field the coefficients are fixed by Frobenius, so
    /// this only scales every exponent vector by p^e.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        let q = (self.ring.p() as u64)
            .checked_pow(e)
            .ok_or(Error::Overflow(u64::MAX))?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.scaled(q)?, *c));
        }
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    /// The unique decomposition f = sum_a (g_a)^p x^a over a in [0,p)^d.
    /// Only nonzero components are returned; keys are the exponent vectors a.
    pub fn p_basis_decompose(&self) -> BTreeMap<Monomial, Polynomial> {
        let p = self.ring.p();
        let mut parts: BTreeMap<Monomial, Vec<(Monomial, u32)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = m.divmod(p);
            parts.entry(r).or_default().push((q, *c));
        }
        // Dividing exponents by p within a residue class preserves relative order.
        parts
            .into_iter()
            .map(|(a, terms)| (a, Polynomial::from_sorted(&self.ring, terms)))
            .collect()
    }

    /// Exact division by a monomial; fails if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            let q = m.quotient_of(t).ok_or_else(|| {
                Error::Arithmetic(format!("{} is not divisible by monomial {:?}", self, m))
            })?;
            terms.push((q, *c));
        }
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    /// Multivariate division by a single polynomial: returns (quotient, remainder).
    pub fn div_rem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.ring.check_same(&g.ring)?;
        let (lm, lc) = g
            .leading_term()
            .ok_or_else(|| Error::Arithmetic("division by zero polynomial".into()))?
            .clone();
        let f = self.ring.field();
        let lc_inv = f.inv(lc);
        let mut rem_terms: Vec<(Monomial, u32)> = Vec::new();
        let mut quo = Polynomial::zero(&self.ring);
        let mut cur = self.clone();
        while let Some((m, c)) = cur.terms.first().cloned() {
            match lm.quotient_of(&m) {
                Some(q) => {
                    let k = f.mul(c, lc_inv);
                    quo = quo.merge(&Polynomial::from_sorted(&self.ring, vec![(q.clone(), k)]), false);
                    cur = cur.merge(&g.mul_term(k, &q), true);
                }
                None => {
                    rem_terms.push((m, c));
                    cur.terms.remove(0);
                }
            }
        }
        Ok((quo, Polynomial::from_sorted(&self.ring, rem_terms)))
    }

    /// Exact quotient `self / g`; fails when g does not divide self.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Arithmetic(format!("{g} does not divide {self}")))
        }
    }

    /// The same polynomial viewed in `ring` (same variables, possibly another order).
    pub fn to_ring(&self, ring: &Arc<Ring>) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars());
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(b.0.exps(), a.0.exps()));
        Polynomial::from_sorted(ring, terms)
    }

    /// Embed into a ring with one extra leading variable, multiplying by t^e.
    pub(crate) fn lift_with_var(&self, ring: &Arc<Ring>, e: u32) -> Polynomial {
        let mut terms: Vec<_> = self.terms.iter().map(|(m, c)| (m.prepend(e), *c)).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(b.0.exps(), a.0.exps()));
        Polynomial::from_sorted(ring, terms)
    }

    /// Drop the leading variable; `None` if it occurs.
    pub(crate) fn drop_first_var(&self, ring: &Arc<Ring>) -> Option<Polynomial> {
        if self.terms.iter().any(|(m, _)| m.exps()[0] != 0) {
            return None;
        }
        let mut terms: Vec<_> = self.terms.iter().map(|(m, c)| (m.drop_first(), *c)).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(b.0.exps(), a.0.exps()));
        Some(Polynomial::from_sorted(ring, terms))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.var_names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", c, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::MonomialOrder;

    fn xy(p: u32) -> (Arc<Ring>, Polynomial, Polynomial) {
        let r = Ring::new(p, ["x", "y"], MonomialOrder::GrevLex).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        (r, x, y)
    }

    #[test]
    fn char_two_cancellation_and_freshman() {
        let (_, x, y) = xy(2);
        let s = &x + &y;
        assert!((&s + &s).is_zero());
        assert_eq!(&s * &s, &(&x * &x) + &(&y * &y));
    }

    #[test]
    fn monomial_division() {
        let r = Ring::standard(2, 1).unwrap();
        let x = Polynomial::var(&r, 0);
        let x3 = x.pow(3);
        assert_eq!(x3.div_monomial(&Monomial::new(&[2])).unwrap(), x);
        assert!(x.div_monomial(&Monomial::new(&[2])).is_err());
    }

    #[test]
    fn ring_mismatch_is_config_error() {
        let (_, x, _) = xy(2);
        let r3 = Ring::standard(3, 2).unwrap();
        let z = Polynomial::var(&r3, 0);
        assert!(matches!(x.checked_add(&z), Err(Error::Config(_))));
    }

    #[test]
    fn frobenius_power_examples() {
        let (r, x, y) = xy(2);
        let s = &x + &y;
        assert_eq!(s.frobenius_power(1).unwrap(), &(&x * &x) + &(&y * &y));
        assert_eq!(s.frobenius_power(0).unwrap(), s);
        let r3 = Ring::standard(3, 1).unwrap();
        let two_x = Polynomial::var(&r3, 0).scale(2);
        assert_eq!(two_x.frobenius_power(1).unwrap(), Polynomial::var(&r3, 0).pow(3).scale(2));
        let _ = r;
    }

    #[test]
    fn frobenius_overflow_is_reported() {
        let r = Ring::standard(97, 1).unwrap();
        let x = Polynomial::var(&r, 0);
        assert!(matches!(x.frobenius_power(5), Err(Error::Overflow(_))));
    }

    #[test]
    fn p_basis_examples() {
        let r = Ring::standard(2, 1).unwrap();
        let x = Polynomial::var(&r, 0);
        let f = &x.pow(3) + &x.pow(2);
        let parts = f.p_basis_decompose();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&Monomial::new(&[0])], x);
        assert_eq!(parts[&Monomial::new(&[1])], x);
        // recompose g0^2 + g1^2 x
        let back = &parts[&Monomial::new(&[0])].pow(2) + &(&parts[&Monomial::new(&[1])].pow(2) * &x);
        assert_eq!(back, f);

        let one = Polynomial::one(&r);
        let parts = one.p_basis_decompose();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&Monomial::new(&[0])], one);

        for p in [2u32, 3, 5, 7] {
            let r = Ring::standard(p, 1).unwrap();
            let x = Polynomial::var(&r, 0);
            let parts = x.pow(p as u64).p_basis_decompose();
            assert_eq!(parts.len(), 1);
            assert_eq!(parts[&Monomial::new(&[0])], x);
        }
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = xy(3);
        let f = &(&x + &y) * &(&x - &y);
        assert_eq!(f.exact_div(&(&x + &y)).unwrap(), &x - &y);
        assert!(x.exact_div(&y).is_err());
    }

    #[test]
    fn display_is_canonical() {
        let (_, x, y) = xy(3);
        let f = &(&x.pow(2) * &y) + &y.scale(2);
        assert_eq!(f.to_string(), "x^2*y + 2*y");
        assert_eq!(Polynomial::zero(x.ring()).to_string(), "0");
    }
}
