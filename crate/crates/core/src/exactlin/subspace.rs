use std::fmt;

use num_rational::BigRational;

use super::matrix::{rref_with_pivots, Matrix};
use crate::error::{Error, Result};
use crate::scalar::{is_zero_vec, Scalar};

/// A linear subspace of `S^ambient`, held as the rows of its reduced
/// row-echelon basis.
///
/// RREF is unique, so two subspaces are equal exactly when their basis rows
/// are identical; `PartialEq` is plain data comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S = BigRational> {
    ambient: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| crate::scalar::unit(ambient, i))
            .collect();
        Subspace {
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    /// Smallest subspace containing every vector.
    pub fn span<V: AsRef<[S]>>(vectors: &[V], ambient: usize) -> Result<Self> {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v.as_ref())?;
        }
        Ok(s)
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix<S>) -> Self {
        let (r, pivots) = rref_with_pivots(m);
        Subspace {
            ambient: m.cols(),
            rows: r.to_rows(),
            pivots,
        }
    }

    /// Span of coordinate vectors `e_i` for the given indices.
    pub fn coordinate(indices: impl IntoIterator<Item = usize>, ambient: usize) -> Result<Self> {
        let mut s = Self::zero(ambient);
        for i in indices {
            if i >= ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: i + 1,
                });
            }
            s.insert(&crate::scalar::unit(ambient, i))?;
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Basis rows in RREF order.
    pub fn basis(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn basis_matrix(&self) -> Matrix<S> {
        Matrix::from_rows(self.rows.clone(), self.ambient).expect("rows have ambient length")
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; `e_c` for these columns span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    fn check_len(&self, v: &[S]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after elimination against the basis; zero at every pivot column.
    pub fn reduce(&self, v: &[S]) -> Result<Vec<S>> {
        self.check_len(v)?;
        let mut r = v.to_vec();
        self.reduce_in_place(&mut r);
        Ok(r)
    }

    fn reduce_in_place(&self, r: &mut [S]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= c.clone() * y;
                }
            }
        }
    }

    pub fn contains(&self, v: &[S]) -> Result<bool> {
        Ok(is_zero_vec(&self.reduce(v)?))
    }

    pub fn contains_subspace(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        for row in &other.rows {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Adds `v` to the span, keeping the basis in RREF. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[S]) -> Result<bool> {
        self.check_len(v)?;
        let mut r = v.to_vec();
        self.reduce_in_place(&mut r);
        let Some(q) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = S::one() / &r[q];
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[q].is_zero() {
                continue;
            }
            let c = row[q].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= c.clone() * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, r);
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut s = self.clone();
        for row in &other.rows {
            s.insert(row)?;
        }
        Ok(s)
    }

    /// Exact intersection via the Zassenhaus construction.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for a in &self.rows {
            let mut r = a.clone();
            r.extend(a.iter().cloned());
            rows.push(r);
        }
        for b in &other.rows {
            let mut r = b.clone();
            r.resize(r.len() + n, S::zero());
            rows.push(r);
        }
        let m = Matrix::from_rows(rows, 2 * n)?;
        let (r, pivots) = rref_with_pivots(&m);
        let tail: Vec<Vec<S>> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| r.row(i)[n..].to_vec())
            .collect();
        Self::span(&tail, n)
    }

    /// Coefficients of `v` in this subspace's basis, or `None` when `v` lies outside.
    pub fn coordinates_of(&self, v: &[S]) -> Result<Option<Vec<S>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, m: &Matrix<S>) -> Result<Self> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: m.cols(),
            });
        }
        let imgs = self
            .rows
            .iter()
            .map(|r| m.mul_vec(r))
            .collect::<Result<Vec<_>>>()?;
        Self::span(&imgs, m.rows())
    }
}

impl<S: Scalar> fmt::Display for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            write!(f, "({})", cells.join(","))?;
        }
        write!(f, "}} in dim {}", self.ambient)
    }
}
