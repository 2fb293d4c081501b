//! Exact rational linear algebra: sparse null spaces, dense rank, and square
//! matrices. No pivot tolerances; every operation is exact.

use std::collections::BTreeMap;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// A sparse row as `column -> value`, without stored zeros.
pub type SparseRow = BTreeMap<usize, Rational>;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Incremental reduced row echelon form. Every stored row has a leading 1 at
/// its pivot and zeros at every other pivot column.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        RowEchelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns `true` if it was independent of those before it.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        let hits: Vec<usize> = row
            .keys()
            .copied()
            .filter(|c| self.pivots.contains_key(c))
            .collect();
        for col in hits {
            let Some(factor) = row.get(&col).cloned() else {
                continue;
            };
            axpy(&mut row, &-factor, &self.pivots[&col]);
        }
        let Some((&pivot, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        for other in self.pivots.values_mut() {
            if let Some(factor) = other.get(&pivot).cloned() {
                axpy(other, &-factor, &row);
            }
        }
        self.pivots.insert(pivot, row);
        true
    }

    /// Basis of `{x : Ax = 0}`, one vector per non-pivot column. The vector for
    /// free column `f` is 1 at `f` and 0 at every other free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.ncols];
                x[f] = Rational::one();
                for (&p, row) in &self.pivots {
                    if let Some(v) = row.get(&f) {
                        x[p] = -v.clone();
                    }
                }
                x
            })
            .collect()
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect()
    }
}

/// `row += factor * other`, dropping entries that cancel.
fn axpy(row: &mut SparseRow, factor: &Rational, other: &SparseRow) {
    for (&c, v) in other {
        let entry = row.entry(c).or_insert_with(Rational::zero);
        *entry += factor * v;
        if entry.is_zero() {
            row.remove(&c);
        }
    }
}

/// Rank of a dense matrix given as rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut ech = RowEchelon::new(ncols);
    for r in rows {
        let sparse = r
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        ech.insert(sparse);
    }
    ech.rank()
}

/// A dense square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    dim: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Rational::one();
        }
        m
    }

    /// Reshapes a vector of length `dim²`, row-major.
    pub fn from_flat(dim: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), dim * dim, "flat data must have dim² entries");
        Matrix { dim, data }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let data = rows.iter().flatten().map(|&v| int(v)).collect();
        Matrix::from_flat(dim, data)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.dim + c] = v;
    }

    pub fn flat(&self) -> &[Rational] {
        &self.data
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        let d = self.dim;
        assert_eq!(d, rhs.dim, "dimension mismatch");
        let mut out = Matrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * d + j] += a * b;
                    }
                }
            }
        }
        out
    }
}
