//! Dense matrices over `Z/n`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::smith::{inverse_mod, smith_mod};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZModMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ZModMatrix {
    pub fn zero(modulus: u64, rows: usize, cols: usize) -> ZModMatrix {
        assert!(modulus >= 1);
        ZModMatrix { modulus, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(modulus: u64, n: usize) -> ZModMatrix {
        let mut m = ZModMatrix::zero(modulus, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from integer rows, reducing entries into `[0, n)`.
    pub fn from_rows(modulus: u64, rows: &[Vec<i64>]) -> Result<ZModMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let mut m = ZModMatrix::zero(modulus, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = x.rem_euclid(modulus as i64) as u64;
            }
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.modulus;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> ZModMatrix {
        let mut t = ZModMatrix::zero(self.modulus, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Checked product.
    pub fn try_mul(&self, rhs: &ZModMatrix) -> Result<ZModMatrix> {
        if self.cols != rhs.rows || self.modulus != rhs.modulus {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} mod {} times {}x{} mod {}",
                self.rows, self.cols, self.modulus, rhs.rows, rhs.cols, rhs.modulus
            )));
        }
        let n = self.modulus as u128;
        let mut out = ZModMatrix::zero(self.modulus, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u128;
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = ((out.data[idx] as u128 + a * rhs.get(k, j) as u128) % n) as u64;
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.rows);
        let n = self.modulus as u128;
        let mut out = vec![0u128; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] += xi as u128 * self.get(i, j) as u128;
            }
        }
        out.into_iter().map(|v| (v % n) as u64).collect()
    }

    /// Matrix times column vector.
    pub fn apply_col(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.cols);
        let n = self.modulus as u128;
        (0..self.rows)
            .map(|i| {
                let s: u128 = (0..self.cols).map(|j| self.get(i, j) as u128 * x[j] as u128).sum();
                (s % n) as u64
            })
            .collect()
    }

    /// Invertibility over `Z/n`, read off the Smith form.
    pub fn is_invertible(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        if self.rows == 0 || self.modulus == 1 {
            return true;
        }
        let s = smith_mod(self.to_rows(), self.modulus, false);
        s.diag.iter().all(|&d| d == 1)
    }

    /// Inverse via Gauss-Jordan elimination with unit pivots; requires the
    /// matrix to be invertible.
    pub fn inverse(&self) -> Result<ZModMatrix> {
        if !self.is_invertible() {
            return Err(Error::InvalidParameter("matrix is not invertible".into()));
        }
        let n = self.rows;
        let m = self.modulus;
        let mut a = self.to_rows();
        let mut inv = ZModMatrix::identity(m, n).to_rows();
        for c in 0..n {
            // A unit pivot exists in an invertible matrix over a local ring;
            // in general, combine rows until one appears.
            let mut pivot = (c..n).find(|&r| inverse_mod(a[r][c], m).is_some());
            if pivot.is_none() {
                for r in c + 1..n {
                    let combined = (a[c][c] + a[r][c]) % m;
                    if inverse_mod(combined, m).is_some() {
                        for j in 0..n {
                            a[c][j] = (a[c][j] + a[r][j]) % m;
                            inv[c][j] = (inv[c][j] + inv[r][j]) % m;
                        }
                        pivot = Some(c);
                        break;
                    }
                }
            }
            let p = pivot.ok_or_else(|| Error::Internal("no unit pivot".into()))?;
            a.swap(c, p);
            inv.swap(c, p);
            let u = inverse_mod(a[c][c], m).unwrap();
            for j in 0..n {
                a[c][j] = a[c][j] * u % m;
                inv[c][j] = inv[c][j] * u % m;
            }
            for r in 0..n {
                if r == c || a[r][c] == 0 {
                    continue;
                }
                let f = a[r][c];
                for j in 0..n {
                    a[r][j] = (a[r][j] + m * m - f * a[c][j] % m) % m;
                    inv[r][j] = (inv[r][j] + m * m - f * inv[c][j] % m) % m;
                }
            }
        }
        let rows: Vec<Vec<i64>> = inv.into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect();
        ZModMatrix::from_rows(m, &rows)
    }

    pub fn pow(&self, e: u64) -> ZModMatrix {
        let mut acc = ZModMatrix::identity(self.modulus, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Determinant for small square matrices (Laplace expansion).
    pub fn det(&self) -> u64 {
        assert!(self.is_square());
        fn rec(a: &[Vec<u64>], m: u64) -> u64 {
            let n = a.len();
            if n == 0 {
                return 1 % m;
            }
            if n == 1 {
                return a[0][0] % m;
            }
            let mut acc = 0u64;
            for j in 0..n {
                if a[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<u64>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect())
                    .collect();
                let term = a[0][j] * rec(&minor, m) % m;
                acc = if j % 2 == 0 { (acc + term) % m } else { (acc + m - term) % m };
            }
            acc
        }
        rec(&self.to_rows(), self.modulus)
    }
}

impl Mul for &ZModMatrix {
    type Output = ZModMatrix;
    fn mul(self, rhs: &ZModMatrix) -> ZModMatrix {
        self.try_mul(rhs).expect("incompatible matrices")
    }
}

impl fmt::Debug for ZModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (mod {})", self.to_rows(), self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let a = ZModMatrix::from_rows(8, &[vec![1, 2], vec![3, 5]]).unwrap();
        let b = a.inverse().unwrap();
        assert_eq!(&a * &b, ZModMatrix::identity(8, 2));
        let s = ZModMatrix::from_rows(4, &[vec![2, 0], vec![0, 1]]).unwrap();
        assert!(!s.is_invertible());
    }

    #[test]
    fn determinant() {
        let a = ZModMatrix::from_rows(3, &[vec![0, 2], vec![1, 0]]).unwrap();
        assert_eq!(a.det(), 1);
    }
}
