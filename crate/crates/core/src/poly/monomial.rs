use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest exponent a monomial may carry.
pub const MAX_EXPONENT: u64 = 1 << 31;

/// Exponent vector of a monomial x1^e1 ... xd^ed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn new(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = e;
        m
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product; panics if an exponent would leave the supported range.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| {
                    let s = a as u64 + b as u64;
                    assert!(s <= MAX_EXPONENT, "monomial exponent overflow ({s})");
                    s as u32
                })
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Every exponent multiplied by `k`.
    pub fn scaled(&self, k: u64) -> Result<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for &e in &self.0 {
            let v = (e as u64)
                .checked_mul(k)
                .ok_or(Error::Overflow(u64::MAX))?;
            if v > MAX_EXPONENT {
                return Err(Error::Overflow(v));
            }
            out.push(v as u32);
        }
        Ok(Monomial(out))
    }

    /// Split into (quotient, remainder) of every exponent by `q`.
    pub fn divmod(&self, q: u32) -> (Monomial, Monomial) {
        let quo = self.0.iter().map(|&e| e / q).collect();
        let rem = self.0.iter().map(|&e| e % q).collect();
        (Monomial(quo), Monomial(rem))
    }

    pub(crate) fn prepend(&self, e: u32) -> Monomial {
        let mut v = SmallVec::with_capacity(self.0.len() + 1);
        v.push(e);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    pub(crate) fn drop_first(&self) -> Monomial {
        Monomial(SmallVec::from_slice(&self.0[1..]))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
