//! Exact linear algebra over F_p: dense row reduction and an incremental
//! sparse echelon basis.

use std::collections::BTreeMap;

use crate::field::PrimeField;

/// Dense matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FpMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let k = self.get(i, c);
                if k == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(k, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of the right kernel {v : M v = 0}.
    pub fn kernel(&self, f: &PrimeField) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }
}

/// A subspace of F_p^(K), where coordinates are indexed by an ordered key,
/// kept as a fully reduced echelon basis keyed by pivot.
#[derive(Debug, Clone)]
pub struct EchelonSpace<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeMap<K, u32>>,
}

impl<K: Ord + Clone> Default for EchelonSpace<K> {
    fn default() -> Self {
        EchelonSpace {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> EchelonSpace<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &BTreeMap<K, u32>> {
        self.rows.values()
    }

    /// Reduce a vector against the basis; the result has no pivot coordinates.
    pub fn reduce(&self, f: &PrimeField, v: &BTreeMap<K, u32>) -> BTreeMap<K, u32> {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            if let Some(&c) = v.get(pivot) {
                axpy(f, &mut v, f.neg(c), row);
            }
        }
        v
    }

    pub fn contains(&self, f: &PrimeField, v: &BTreeMap<K, u32>) -> bool {
        self.reduce(f, v).is_empty()
    }

    /// Insert a vector; returns true if the dimension grew.
    pub fn insert(&mut self, f: &PrimeField, v: &BTreeMap<K, u32>) -> bool {
        let mut r = self.reduce(f, v);
        let Some((pivot, &c)) = r.iter().next() else {
            return false;
        };
        let pivot = pivot.clone();
        let inv = f.inv(c);
        for val in r.values_mut() {
            *val = f.mul(*val, inv);
        }
        for row in self.rows.values_mut() {
            if let Some(&k) = row.get(&pivot) {
                axpy(f, row, f.neg(k), &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn is_subspace_of(&self, f: &PrimeField, other: &EchelonSpace<K>) -> bool {
        self.rows.values().all(|row| other.contains(f, row))
    }

    pub fn same_as(&self, f: &PrimeField, other: &EchelonSpace<K>) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(f, other)
    }

    /// Canonical representation: the reduced echelon rows, ordered by pivot.
    pub fn canonical(&self) -> Vec<Vec<(K, u32)>> {
        self.rows
            .values()
            .map(|r| r.iter().map(|(k, v)| (k.clone(), *v)).collect())
            .collect()
    }
}

/// v += c * w, dropping zeros.
pub fn axpy<K: Ord + Clone>(f: &PrimeField, v: &mut BTreeMap<K, u32>, c: u32, w: &BTreeMap<K, u32>) {
    if c == 0 {
        return;
    }
    for (k, &x) in w {
        let slot = v.entry(k.clone()).or_insert(0);
        *slot = f.add(*slot, f.mul(c, x));
        if *slot == 0 {
            v.remove(k);
        }
    }
}
