use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense per-point feature vectors, one row per point.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureMatrix<T> {
    rows: usize,
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> FeatureMatrix<T> {
    /// Rows must be nonempty, of equal length, and finite.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || dim == 0 {
            return Err(Error::InvalidInput(
                "feature matrix needs at least one row and one column".into(),
            ));
        }
        let mut data = Vec::with_capacity(rows.len() * dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "feature row {i} has {} values, expected {dim}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|x| !x.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "feature ({i}, {j}) is not finite"
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            rows: rows.len(),
            dim,
            data,
        })
    }

    /// One-dimensional features.
    pub fn from_column(values: &[T]) -> Result<Self> {
        Self::from_rows(values.iter().map(|&v| vec![v]).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    /// The sub-matrix of the given rows, in the given order.
    pub fn select(&self, points: &[usize]) -> Self {
        let mut data = Vec::with_capacity(points.len() * self.dim);
        for &p in points {
            data.extend_from_slice(self.row(p));
        }
        Self {
            rows: points.len(),
            dim: self.dim,
            data,
        }
    }
}
