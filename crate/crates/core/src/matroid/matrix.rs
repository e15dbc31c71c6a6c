use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{parse_rational, rational_to_string};

/// A dense `rows x cols` matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Builds from integer rows; panics on ragged input.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RationalMatrix {
            rows: rows.len(),
            cols,
            entries: rows
                .iter()
                .flat_map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                })
                .collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<BigRational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigRational) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vec<BigRational> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.get(i, j).is_zero())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for (k, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                m.set(i, k, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                m.set(i, j, acc);
            }
        }
        Ok(m)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for j in col..self.cols {
                let x = m.get(row, j) * &inv;
                m.set(row, j, x);
            }
            for i in 0..self.rows {
                if i == row || m.get(i, col).is_zero() {
                    continue;
                }
                let f = m.get(i, col).clone();
                for j in col..self.cols {
                    let x = m.get(i, j) - &f * m.get(row, j);
                    m.set(i, j, x);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows form a basis of the right kernel; `(cols - rank) x cols`.
    pub fn kernel(&self) -> Self {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut k = Self::zeros(free.len(), self.cols);
        for (b, &f) in free.iter().enumerate() {
            k.set(b, f, BigRational::one());
            for (i, &p) in pivots.iter().enumerate() {
                k.set(b, p, -red.get(i, f).clone());
            }
        }
        k
    }

    /// The nonzero rows of the reduced row echelon form.
    pub fn row_space_basis(&self) -> Self {
        let (red, pivots) = self.rref();
        let mut m = Self::zeros(pivots.len(), self.cols);
        for i in 0..pivots.len() {
            for j in 0..self.cols {
                m.set(i, j, red.get(i, j).clone());
            }
        }
        m
    }

    pub fn determinant(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let mut m = self.clone();
        let mut det = BigRational::one();
        for col in 0..self.cols {
            let Some(p) = (col..self.rows).find(|&i| !m.get(i, col).is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for i in col + 1..self.rows {
                if m.get(i, col).is_zero() {
                    continue;
                }
                let f = m.get(i, col) / &pivot;
                for j in col..self.cols {
                    let x = m.get(i, j) - &f * m.get(col, j);
                    m.set(i, j, x);
                }
            }
        }
        Ok(det)
    }

    /// `self * diag(d)`.
    pub fn scale_columns(&self, d: &[BigRational]) -> Self {
        assert_eq!(d.len(), self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = m.get(i, j) * &d[j];
                m.set(i, j, x);
            }
        }
        m
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(rational_to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for RationalMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| self.row(i).iter().map(rational_to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = MatrixJson::deserialize(d)?;
        if j.entries.len() != j.rows || j.entries.iter().any(|r| r.len() != j.cols) {
            return Err(D::Error::custom("matrix dimensions do not match entries"));
        }
        let mut entries = Vec::with_capacity(j.rows * j.cols);
        for row in &j.entries {
            for s in row {
                entries.push(parse_rational(s).map_err(D::Error::custom)?);
            }
        }
        RationalMatrix::new(j.rows, j.cols, entries).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let v = RationalMatrix::from_i64(&[vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(v.rank(), 2);
        let k = v.kernel();
        assert_eq!((k.rows(), k.cols()), (1, 3));
        let prod = v.mul(&k.transpose()).unwrap();
        assert!(prod.entries.iter().all(|x| x.is_zero()));
        assert_eq!(RationalMatrix::identity(3).kernel().rows(), 0);
        assert_eq!(RationalMatrix::zeros(1, 2).kernel().rank(), 2);
    }

    #[test]
    fn determinants() {
        let m = RationalMatrix::from_i64(&[vec![2, 1], vec![1, 3]]);
        assert_eq!(
            m.determinant().unwrap(),
            BigRational::from_integer(BigInt::from(5))
        );
        let s = RationalMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert!(s.determinant().unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let js = r#"{"rows":2,"cols":4,"entries":[["1","0","1","1"],["0","1","1","-3/2"]]}"#;
        let m: RationalMatrix = serde_json::from_str(js).unwrap();
        assert_eq!(
            m.get(1, 3),
            &BigRational::new(BigInt::from(-3), BigInt::from(2))
        );
        let back = serde_json::to_string(&m).unwrap();
        assert_eq!(back, js);
        assert!(
            serde_json::from_str::<RationalMatrix>(r#"{"rows":1,"cols":2,"entries":[["1"]]}"#)
                .is_err()
        );
    }
}
