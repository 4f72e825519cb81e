//! Arithmetic in the prime field F_p for the supported range 2 <= p <= 97.

use crate::error::{Error, Result};

pub const MAX_CHARACTERISTIC: u32 = 97;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_p with a precomputed inverse table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
    inverses: Vec<u32>,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Config(format!("{p} is not prime")));
        }
        if p > MAX_CHARACTERISTIC {
            return Err(Error::Config(format!(
                "characteristic {p} outside supported range 2..={MAX_CHARACTERISTIC}"
            )));
        }
        let mut inverses = vec![0; p as usize];
        for a in 1..p {
            inverses[a as usize] = pow_mod(a, p - 2, p);
        }
        Ok(PrimeField { p, inverses })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.inverses[a as usize]
    }

    /// Reduce an arbitrary integer into [0, p).
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        pow_mod(a, e, self.p)
    }
}

fn pow_mod(mut base: u32, e: impl Into<u64>, p: u32) -> u32 {
    let mut e: u64 = e.into();
    let mut acc = 1u32 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_out_of_range() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(101).is_err());
        assert!(PrimeField::new(97).is_ok());
    }

    #[test]
    fn inverses_and_fermat() {
        for p in [2u32, 3, 5, 7, 97] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a)), 1);
                assert_eq!(f.pow(a, p as u64), a);
            }
        }
    }

    #[test]
    fn signed_reduction() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.from_i64(-1), 4);
        assert_eq!(f.from_i64(12), 2);
        assert_eq!(f.sub(1, 3), 3);
    }
}
