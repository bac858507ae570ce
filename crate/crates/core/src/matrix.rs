//! Dense square complex matrices: the oracle side of every closed form.

use std::ops::{Add, Mul};

use crate::{Complex, Error, Result};

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Row-major `dim × dim` complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = ONE;
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::MatrixDimension(row.len(), dim));
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { dim, entries })
    }

    pub fn from_entries(dim: usize, entries: Vec<Complex>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::MatrixDimension(entries.len(), dim * dim));
        }
        Ok(Self { dim, entries })
    }

    /// `[[a, 0], [0, b]]` from two blocks of the same order.
    pub fn block_diag(a: &Self, b: &Self) -> Self {
        assert_eq!(a.dim, b.dim);
        let h = a.dim;
        let mut m = Self::zeros(2 * h);
        for i in 0..h {
            for j in 0..h {
                m.set(i, j, a.get(i, j));
                m.set(h + i, h + j, b.get(i, j));
            }
        }
        m
    }

    /// `[[0, 1], [1, 0]]` with identity blocks of order `half`.
    pub fn swap_blocks(half: usize) -> Self {
        let mut m = Self::zeros(2 * half);
        for i in 0..half {
            m.set(i, half + i, ONE);
            m.set(half + i, i, ONE);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex) {
        self.entries[i * self.dim + j] = v;
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::MatrixDimension(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..d {
                    out.entries[i * d + j] += a * other.entries[k * d + j];
                }
            }
        }
        Ok(out)
    }

    pub fn mat_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, alpha: Complex) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|e| alpha * e).collect(),
        }
    }

    pub fn trace(&self) -> Complex {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn hermitian_transpose(&self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// LU factorisation with partial pivoting (largest modulus in the
    /// column). Returns the packed factors, the row permutation, its parity,
    /// and whether some pivot column was exactly zero.
    fn lu(&self) -> (Vec<Complex>, Vec<usize>, bool, bool) {
        let d = self.dim;
        let mut a = self.entries.clone();
        let mut perm: Vec<usize> = (0..d).collect();
        let mut odd = false;
        let mut singular = false;
        for col in 0..d {
            let pivot = (col..d)
                .max_by(|&x, &y| a[x * d + col].norm().total_cmp(&a[y * d + col].norm()))
                .unwrap_or(col);
            if a[pivot * d + col] == ZERO {
                singular = true;
                continue;
            }
            if pivot != col {
                for j in 0..d {
                    a.swap(pivot * d + j, col * d + j);
                }
                perm.swap(pivot, col);
                odd = !odd;
            }
            let p = a[col * d + col];
            for row in col + 1..d {
                let factor = a[row * d + col] / p;
                a[row * d + col] = factor;
                if factor == ZERO {
                    continue;
                }
                for j in col + 1..d {
                    let v = a[col * d + j];
                    a[row * d + j] -= factor * v;
                }
            }
        }
        (a, perm, odd, singular)
    }

    /// Determinant by LU with partial pivoting. Singular input gives zero.
    pub fn det(&self) -> Complex {
        let d = self.dim;
        let (a, _, odd, singular) = self.lu();
        if singular {
            return ZERO;
        }
        let prod: Complex = (0..d).map(|i| a[i * d + i]).product();
        if odd {
            -prod
        } else {
            prod
        }
    }

    /// Inverse via the LU factors; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.dim;
        let (a, perm, _, singular) = self.lu();
        if singular {
            return None;
        }
        let mut inv = Self::zeros(d);
        for col in 0..d {
            // solve L y = P e_col, then U x = y
            let mut x: Vec<Complex> = perm
                .iter()
                .map(|&r| if r == col { ONE } else { ZERO })
                .collect();
            for i in 0..d {
                for k in 0..i {
                    let l = a[i * d + k];
                    let xk = x[k];
                    x[i] -= l * xk;
                }
            }
            for i in (0..d).rev() {
                for k in i + 1..d {
                    let u = a[i * d + k];
                    let xk = x[k];
                    x[i] -= u * xk;
                }
                x[i] /= a[i * d + i];
            }
            for (row, v) in x.into_iter().enumerate() {
                inv.set(row, col, v);
            }
        }
        Some(inv)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Whether the off-diagonal half blocks vanish and the diagonal blocks
    /// relate as `bottom = sign · top`, up to `tol`.
    pub fn has_paired_blocks(&self, sign: f64, tol: f64) -> bool {
        let h = self.dim / 2;
        (0..h).all(|i| {
            (0..h).all(|j| {
                self.get(i, h + j).norm() <= tol
                    && self.get(h + i, j).norm() <= tol
                    && (self.get(h + i, h + j) - self.get(i, j) * sign).norm() <= tol
            })
        })
    }
}

impl<'a> Mul<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        self.mat_mul(rhs).expect("matrix product")
    }
}

impl<'a> Add<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        self.mat_add(rhs).expect("matrix sum")
    }
}
