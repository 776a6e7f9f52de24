//! Exact integer and rational elimination.
//!
//! Bareiss fraction-free elimination for integer determinants, a null-space
//! vector finder over the rationals (cleared to integers), and small helpers
//! for exact rational determinants and adjugates.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact determinant of a square integer matrix by fraction-free Bareiss
/// elimination: every intermediate entry stays integral.
pub fn int_determinant(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: matrix.first().map(|r| r.len()).unwrap_or(0),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for p in 0..n - 1 {
        if m[p][p].is_zero() {
            let Some(r) = (p + 1..n).find(|&r| !m[r][p].is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap(p, r);
            sign = -sign;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let num = &m[p][p] * &m[i][j] - &m[i][p] * &m[p][j];
                // Exact by the Sylvester identity.
                m[i][j] = num / &prev;
            }
            m[i][p] = BigInt::zero();
        }
        prev = m[p][p].clone();
    }
    Ok(sign * m[n - 1][n - 1].clone())
}

/// A nonzero integer vector `lambda` with `sum_j lambda[j] * cols[j] = 0`,
/// or `None` when the columns are linearly independent over the rationals.
///
/// Row echelon form is computed fraction-free; the free-column relation is
/// back-substituted over the rationals and cleared to integers.
pub fn int_nullspace_vector(cols: &[Vec<BigInt>]) -> Result<Option<Vec<BigInt>>> {
    let m = cols.len();
    if m == 0 {
        return Ok(None);
    }
    let k = cols[0].len();
    if cols.iter().any(|c| c.len() != k) {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: cols.iter().map(|c| c.len()).find(|&l| l != k).unwrap_or(k),
        });
    }

    // Work on the k x m matrix whose columns are the inputs.
    let mut a: Vec<Vec<BigInt>> = (0..k)
        .map(|i| (0..m).map(|j| cols[j][i].clone()).collect())
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    let mut prev = BigInt::one();
    for col in 0..m {
        if row >= k {
            break;
        }
        let Some(r) = (row..k).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, r);
        for i in row + 1..k {
            for j in col + 1..m {
                let num = &a[row][col] * &a[i][j] - &a[i][col] * &a[row][j];
                a[i][j] = num / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        pivot_cols.push(col);
        row += 1;
    }

    // First column that is not a pivot carries a dependency.
    let free = (0..m).find(|c| !pivot_cols.contains(c));
    let Some(free) = free else {
        return Ok(None);
    };

    // Solve U * x = 0 with x[free] = 1 and the later free columns at 0.
    let mut x: Vec<BigRational> = alloc::vec![BigRational::zero(); m];
    x[free] = BigRational::one();
    for (r, &pc) in pivot_cols.iter().enumerate().rev() {
        if pc > free {
            continue;
        }
        let mut acc = BigRational::zero();
        for j in pc + 1..m {
            if !x[j].is_zero() && !a[r][j].is_zero() {
                acc += BigRational::from_integer(a[r][j].clone()) * &x[j];
            }
        }
        x[pc] = -acc / BigRational::from_integer(a[r][pc].clone());
    }

    // Clear denominators.
    let lcm = x
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let lambda: Vec<BigInt> = x
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    debug_assert!(lambda.iter().any(|l| !l.is_zero()));
    Ok(Some(lambda))
}

/// Exact determinant of a square rational matrix by Gaussian elimination.
pub fn rational_determinant(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut m = matrix.to_vec();
    let mut det = BigRational::one();
    for p in 0..n {
        let Some(r) = (p..n).find(|&r| !m[r][p].is_zero()) else {
            return BigRational::zero();
        };
        if r != p {
            m.swap(p, r);
            det = -det;
        }
        det *= m[p][p].clone();
        let inv = m[p][p].clone();
        for i in p + 1..n {
            if m[i][p].is_zero() {
                continue;
            }
            let factor = &m[i][p] / &inv;
            for j in p..n {
                let sub = &factor * &m[p][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}

/// The adjugate of a square rational matrix: `adj[i][j]` is the cofactor of
/// entry `(j, i)`, so `A * adj(A) = det(A) * I`. When `det(A) = 0` the
/// nonzero columns of the adjugate are null vectors of `A`.
pub fn adjugate(matrix: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = matrix.len();
    let mut adj = alloc::vec![alloc::vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<BigRational>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| matrix[r][c].clone())
                        .collect()
                })
                .collect();
            let mut cof = rational_determinant(&minor);
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            adj[i][j] = cof;
        }
    }
    adj
}

/// Evaluates an integer-coefficient polynomial (coefficients in ascending
/// degree order) at a rational point.
pub fn eval_poly(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// Absolute value helper for rationals.
pub fn rational_abs(r: &BigRational) -> BigRational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(
            int_determinant(&int_matrix(&[&[1, 2], &[3, 4]])).unwrap(),
            BigInt::from(-2)
        );
        assert_eq!(
            int_determinant(&int_matrix(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]])).unwrap(),
            BigInt::from(24)
        );
        assert_eq!(
            int_determinant(&int_matrix(&[&[1, 1], &[1, 1]])).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn determinant_with_pivot_swap() {
        assert_eq!(
            int_determinant(&int_matrix(&[&[0, 1], &[1, 0]])).unwrap(),
            BigInt::from(-1)
        );
    }

    #[test]
    fn determinant_of_example_matrix_is_one() {
        let m = int_matrix(&[
            &[1, 0, 1, 0],
            &[0, 1, 1, 1],
            &[1, 0, 1, 1],
            &[0, 1, 0, 1],
        ]);
        assert_eq!(int_determinant(&m).unwrap(), BigInt::one());
    }

    #[test]
    fn nullspace_of_dependent_columns() {
        // col2 = col0 + col1
        let cols = alloc::vec![
            alloc::vec![BigInt::from(1), BigInt::from(0)],
            alloc::vec![BigInt::from(0), BigInt::from(1)],
            alloc::vec![BigInt::from(1), BigInt::from(1)],
        ];
        let lambda = int_nullspace_vector(&cols).unwrap().unwrap();
        // Verify sum lambda_j col_j = 0.
        for i in 0..2 {
            let s: BigInt = (0..3).map(|j| &lambda[j] * &cols[j][i]).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn nullspace_absent_for_independent_columns() {
        let cols = alloc::vec![
            alloc::vec![BigInt::from(1), BigInt::from(0)],
            alloc::vec![BigInt::from(1), BigInt::from(1)],
        ];
        assert_eq!(int_nullspace_vector(&cols).unwrap(), None);
    }

    #[test]
    fn adjugate_identity() {
        let m: Vec<Vec<BigRational>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let adj = adjugate(&m);
        assert_eq!(adj, m);
    }

    #[test]
    fn poly_eval() {
        // p(x) = 2 - 3x + x^2, p(5) = 12
        let coeffs = alloc::vec![BigInt::from(2), BigInt::from(-3), BigInt::from(1)];
        assert_eq!(
            eval_poly(&coeffs, &BigRational::from_integer(5.into())),
            BigRational::from_integer(12.into())
        );
    }
}
