//! Dense vectors and matrices over one scalar system.
//!
//! These are the standard semimodules `M^k`: all operations are entrywise
//! over the shared system, and constructors validate membership so the
//! arithmetic methods cannot meet foreign payloads.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::system::ScalarSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiVector {
    system: Arc<ScalarSystem>,
    entries: Vec<Scalar>,
}

impl SemiVector {
    pub fn new(system: Arc<ScalarSystem>, entries: Vec<Scalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        for e in &entries {
            if !system.contains(e) {
                return Err(Error::InvalidScalar);
            }
        }
        Ok(SemiVector { system, entries })
    }

    pub fn zero(system: Arc<ScalarSystem>, len: usize) -> Result<Self> {
        let zero = system.zero();
        SemiVector::new(system, alloc::vec![zero; len])
    }

    pub fn system(&self) -> &Arc<ScalarSystem> {
        &self.system
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn same_space(&self, other: &Self) -> bool {
        self.system == other.system && self.len() == other.len()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.system != other.system {
            return Err(Error::SystemMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.system.add(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(SemiVector {
            system: self.system.clone(),
            entries,
        })
    }

    pub fn scale(&self, coeff: &Scalar) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| self.system.mul(coeff, e))
            .collect::<Result<Vec<_>>>()?;
        Ok(SemiVector {
            system: self.system.clone(),
            entries,
        })
    }

    pub fn is_zero(&self) -> Result<bool> {
        for e in &self.entries {
            if !self.system.is_zero(e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiMatrix {
    system: Arc<ScalarSystem>,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl SemiMatrix {
    pub fn new(
        system: Arc<ScalarSystem>,
        rows: usize,
        cols: usize,
        entries: Vec<Scalar>,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        for e in &entries {
            if !system.contains(e) {
                return Err(Error::InvalidScalar);
            }
        }
        Ok(SemiMatrix {
            system,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(system: Arc<ScalarSystem>, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: rows.iter().map(|r| r.len()).find(|&l| l != c).unwrap_or(c),
            });
        }
        SemiMatrix::new(system, r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(vectors: &[SemiVector]) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        };
        for v in vectors {
            if !first.same_space(v) {
                return Err(if v.system() != first.system() {
                    Error::SystemMismatch
                } else {
                    Error::DimensionMismatch {
                        expected: first.len(),
                        found: v.len(),
                    }
                });
            }
        }
        let rows = first.len();
        let cols = vectors.len();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for v in vectors {
                entries.push(v.entry(i).clone());
            }
        }
        SemiMatrix::new(first.system().clone(), rows, cols, entries)
    }

    pub fn system(&self) -> &Arc<ScalarSystem> {
        &self.system
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> SemiVector {
        let entries = self.entries[i * self.cols..(i + 1) * self.cols].to_vec();
        SemiVector {
            system: self.system.clone(),
            entries,
        }
    }

    pub fn column(&self, j: usize) -> SemiVector {
        let entries = (0..self.rows).map(|i| self.entry(i, j).clone()).collect();
        SemiVector {
            system: self.system.clone(),
            entries,
        }
    }

    pub fn columns(&self) -> Vec<SemiVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).clone());
            }
        }
        SemiMatrix {
            system: self.system.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// A copy with rows `i` and `j` swapped.
    pub fn with_rows_swapped(&self, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        for c in 0..self.cols {
            out.entries.swap(i * self.cols + c, j * self.cols + c);
        }
        out
    }

    /// A copy with columns `i` and `j` swapped.
    pub fn with_columns_swapped(&self, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        for r in 0..self.rows {
            out.entries.swap(r * self.cols + i, r * self.cols + j);
        }
        out
    }

    /// A copy with row `i` replaced.
    pub fn with_row(&self, i: usize, row: &SemiVector) -> Result<Self> {
        if row.system() != &self.system {
            return Err(Error::SystemMismatch);
        }
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        let mut out = self.clone();
        for c in 0..self.cols {
            out.entries[i * self.cols + c] = row.entry(c).clone();
        }
        Ok(out)
    }
}

/// Weighted sum of vectors; the empty sum is the zero vector.
pub(crate) fn weighted_sum<'a, I>(
    system: &Arc<ScalarSystem>,
    len: usize,
    terms: I,
) -> Result<SemiVector>
where
    I: IntoIterator<Item = (&'a Scalar, &'a SemiVector)>,
{
    let mut acc = SemiVector::zero(system.clone(), len)?;
    for (coeff, v) in terms {
        acc = acc.add(&v.scale(coeff)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn bool_sys() -> Arc<ScalarSystem> {
        Arc::new(ScalarSystem::boolean())
    }

    fn bv(sys: &Arc<ScalarSystem>, bits: &[u8]) -> SemiVector {
        SemiVector::new(
            sys.clone(),
            bits.iter().map(|&b| Scalar::Bit(b != 0)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn vector_add_is_entrywise() {
        let sys = bool_sys();
        let a = bv(&sys, &[1, 0, 1]);
        let b = bv(&sys, &[0, 0, 1]);
        assert_eq!(a.add(&b).unwrap(), bv(&sys, &[1, 0, 1]));
    }

    #[test]
    fn membership_checked_at_construction() {
        let sys = bool_sys();
        assert_eq!(
            SemiVector::new(sys, vec![Scalar::nat(2)]),
            Err(Error::InvalidScalar)
        );
    }

    #[test]
    fn from_columns_round_trips() {
        let sys = bool_sys();
        let cols = vec![bv(&sys, &[1, 0]), bv(&sys, &[1, 1])];
        let m = SemiMatrix::from_columns(&cols).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 2);
        assert_eq!(m.column(0), cols[0]);
        assert_eq!(m.column(1), cols[1]);
        assert_eq!(m.entry(0, 1), &Scalar::Bit(true));
    }

    #[test]
    fn transpose_involution() {
        let sys = bool_sys();
        let m = SemiMatrix::from_rows(
            sys,
            vec![
                vec![Scalar::Bit(true), Scalar::Bit(false), Scalar::Bit(true)],
                vec![Scalar::Bit(false), Scalar::Bit(false), Scalar::Bit(true)],
            ],
        )
        .unwrap();
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().entry(2, 0), &Scalar::Bit(true));
    }

    #[test]
    fn empty_weighted_sum_is_zero() {
        let sys = bool_sys();
        let sum = weighted_sum(&sys, 3, core::iter::empty()).unwrap();
        assert!(sum.is_zero().unwrap());
    }
}
