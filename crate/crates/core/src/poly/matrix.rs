use std::fmt;
use std::sync::Arc;

use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Dense matrix of polynomials, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(ring);
        }
        m
    }

    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for e in row {
                ring.check_same(e.ring())?;
                entries.push(e);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(ring: &Arc<Ring>, rows: usize, columns: &[Vec<Polynomial>]) -> Result<Self> {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, e) in col.iter().enumerate() {
                ring.check_same(e.ring())?;
                m.entries[i * m.cols + j] = e.clone();
            }
        }
        Ok(m)
    }

    /// 1x1 matrix.
    pub fn scalar(f: &Polynomial) -> Self {
        PolyMatrix {
            ring: f.ring().clone(),
            rows: 1,
            cols: 1,
            entries: vec![f.clone()],
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.ring.check_same(&other.ring)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn mul_vector(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Polynomial::zero(&self.ring);
                for (k, vk) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !vk.is_zero() {
                        acc = &acc + &(a * vk);
                    }
                }
                acc
            })
            .collect())
    }

    /// Entrywise p^e-th power, written A^[p^e].
    pub fn bracket_power(&self, e: u32) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|f| f.frobenius_power(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Horizontal concatenation [self | other].
    pub fn hcat(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows {
            return Err(Error::Shape(format!(
                "cannot concatenate {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        PolyMatrix::from_columns(&self.ring, self.rows, &cols)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix{self}")
    }
}
