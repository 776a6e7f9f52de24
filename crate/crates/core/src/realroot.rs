//! Constructive real witness for Boolean matrices with bideterminant
//! (1, 1) and nonzero integer determinant.
//!
//! Pick an odd permutation whose diagonal is all ones (after a column swap
//! that makes the integer determinant positive), replace those positions
//! by a variable `x`, and consider `p(x) = det R(x)`. Then `p(1) > 0`
//! while the leading term is `-x^n` with no other contribution above
//! degree `n - 2`, so `p` has a root beyond 1. Near that root the columns
//! of `R` are dependent over the reals; the sign split of an approximate
//! null vector, pushed through the characteristic Boolean morphism,
//! recovers a Boolean attachment of the original columns.
//!
//! Arithmetic is exact rational throughout: the root is bracketed by sign
//! bisection on the integer-coefficient polynomial.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::attach::{check_certificate, transfer_attachment, AttachmentCertificate, SemilinearMap};
use crate::bidet::bidet;
use crate::error::{Error, Result};
use crate::exact::{adjugate, eval_poly, int_determinant};
use crate::morphism::characteristic_bool_morphism;
use crate::perm::for_each_permutation;
use crate::scalar::Scalar;
use crate::semimodule::SemiMatrix;
use crate::system::ScalarSystem;

/// Bisection stops once `|p(a)|` drops below 10^-12; the acceptance
/// tolerance downstream is three orders looser.
const RESIDUAL_TOLERANCE_EXP: u32 = 12;
/// Relative cutoff separating "genuinely nonzero" null-vector entries from
/// bisection noise.
const SIGN_CUTOFF_EXP: u32 = 6;
const MAX_REFINEMENTS: usize = 8;
const MAX_BISECTIONS: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRootWitness {
    /// Column swap applied when the raw integer determinant was negative;
    /// everything below refers to the swapped matrix.
    pub swapped_columns: Option<(usize, usize)>,
    /// The odd unit-weight permutation whose diagonal carries `x`.
    pub odd_permutation: Vec<usize>,
    /// `R(a)` over the nonnegative rationals; its zero pattern equals the
    /// (normalized) input matrix.
    pub matrix: SemiMatrix,
    /// The approximate root `a > 1`.
    pub root: BigRational,
    /// Bracket with `p > 0` on the left and `p <= 0` on the right.
    pub bracket: (BigRational, BigRational),
    /// `p(root)`, exact.
    pub residual: BigRational,
    /// Sign-split attachment of the columns of `R(a)`, with positive
    /// rational coefficients. It is approximate over the rationals (`R(a)`
    /// is within `residual` of singular) but exact after transfer through
    /// the characteristic Boolean morphism, which is how it is verified.
    pub attachment: AttachmentCertificate,
}

fn pow10(exp: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u32).pow(exp))
}

/// The coefficients of `p(x) = det R(x)` (ascending degree), where `R(x)`
/// substitutes `x` at the positions `(i, sigma(i))`.
fn charlike_poly(bits: &[Vec<bool>], sigma: &[usize]) -> Vec<BigInt> {
    let n = bits.len();
    let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
    for_each_permutation(n, |tau, even| {
        let mut degree = 0usize;
        let mut zero = false;
        for (i, &j) in tau.iter().enumerate() {
            if j == sigma[i] {
                degree += 1;
            } else if !bits[i][j] {
                zero = true;
                break;
            }
        }
        if !zero {
            if even {
                coeffs[degree] += 1;
            } else {
                coeffs[degree] -= 1;
            }
        }
        ControlFlow::Continue(())
    });
    coeffs
}

/// Candidate sign split from one adjugate column: indices with entries
/// above the relative cutoff, keyed by sign, with their magnitudes as
/// nonnegative-rational coefficients.
fn sign_split(
    column: &[BigRational],
    cutoff: &BigRational,
) -> Option<(BTreeMap<usize, Scalar>, BTreeMap<usize, Scalar>)> {
    let max = column.iter().map(|v| v.abs()).max()?;
    if max.is_zero() {
        return None;
    }
    let floor = max * cutoff;
    let mut a = BTreeMap::new();
    let mut b = BTreeMap::new();
    for (i, v) in column.iter().enumerate() {
        if v.abs() <= floor {
            continue;
        }
        if v.is_positive() {
            a.insert(i, Scalar::Rat(v.clone()));
        } else {
            b.insert(i, Scalar::Rat(-v.clone()));
        }
    }
    if a.is_empty() || b.is_empty() {
        None
    } else {
        Some((a, b))
    }
}

pub fn real_root_witness(input: &SemiMatrix) -> Result<RealRootWitness> {
    if !input.system().is_boolean() {
        return Err(Error::NotBoolean);
    }
    let n = input.require_square()?;
    let bd = bidet(input)?;
    if bd.plus != Scalar::Bit(true) || bd.minus != Scalar::Bit(true) {
        return Err(Error::Hypothesis("bideterminant is not (1, 1)"));
    }

    let bits_of = |m: &SemiMatrix| -> Vec<Vec<bool>> {
        (0..n)
            .map(|i| (0..n).map(|j| m.entry(i, j) == &Scalar::Bit(true)).collect())
            .collect()
    };
    let int_matrix = |bits: &[Vec<bool>]| -> Vec<Vec<BigInt>> {
        bits.iter()
            .map(|row| {
                row.iter()
                    .map(|&b| if b { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect()
    };

    let det = int_determinant(&int_matrix(&bits_of(input)))?;
    if det.is_zero() {
        return Err(Error::Hypothesis("integer determinant is zero"));
    }

    // Normalize so det > 0; a column swap flips the sign and leaves the
    // bideterminant at (1, 1).
    let (normalized, swapped_columns) = if det.is_negative() {
        (input.with_columns_swapped(0, 1), Some((0usize, 1usize)))
    } else {
        (input.clone(), None)
    };
    let bits = bits_of(&normalized);

    // Lexicographically first odd permutation with an all-ones diagonal;
    // one exists because det- = 1.
    let mut sigma: Option<Vec<usize>> = None;
    for_each_permutation(n, |tau, even| {
        if !even && tau.iter().enumerate().all(|(i, &j)| bits[i][j]) {
            sigma = Some(tau.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let sigma = sigma.ok_or(Error::Internal("odd unit diagonal must exist when det- = 1"))?;

    let coeffs = charlike_poly(&bits, &sigma);
    debug_assert_eq!(coeffs[n], -BigInt::one());
    let p = |x: &BigRational| eval_poly(&coeffs, x);
    debug_assert!(p(&BigRational::one()).is_positive());

    // Bracket the sign change: p(1) > 0 and p -> -infinity.
    let mut lo = BigRational::one();
    let mut hi = BigRational::from_integer(2.into());
    loop {
        let v = p(&hi);
        if !v.is_positive() {
            break;
        }
        lo = hi.clone();
        hi *= BigRational::from_integer(2.into());
    }

    let qplus = Arc::new(ScalarSystem::nonneg_rationals());
    let phi = characteristic_bool_morphism(&qplus)?;
    let to_bool = SemilinearMap::new(phi, n);
    let bool_columns = normalized.columns();

    let mut tolerance = pow10(RESIDUAL_TOLERANCE_EXP);
    let mut cutoff = pow10(SIGN_CUTOFF_EXP);
    let mut steps = 0usize;

    for _ in 0..MAX_REFINEMENTS {
        // Bisect until the residual is inside the current tolerance.
        let mut root = hi.clone();
        let mut residual = p(&hi);
        if residual.abs() > tolerance {
            loop {
                steps += 1;
                if steps > MAX_BISECTIONS {
                    return Err(Error::Internal("bisection failed to converge"));
                }
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                let v = p(&mid);
                if v.abs() <= tolerance {
                    root = mid;
                    residual = v;
                    break;
                }
                if v.is_positive() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
        }

        // R(a): substitute the root at the sigma positions.
        let rational_matrix: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if sigma[i] == j {
                            root.clone()
                        } else if bits[i][j] {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();

        // Columns of the adjugate approximate null vectors of R(a); try
        // them by descending magnitude until one splits into a Boolean
        // attachment that verifies exactly.
        let adj = adjugate(&rational_matrix);
        let mut order: Vec<usize> = (0..n).collect();
        let col_max = |j: usize| -> BigRational {
            (0..n).map(|i| adj[i][j].abs()).max().unwrap_or_else(BigRational::zero)
        };
        order.sort_by(|&x, &y| col_max(y).cmp(&col_max(x)));
        for j in order {
            let column: Vec<BigRational> = (0..n).map(|i| adj[i][j].clone()).collect();
            let Some((a_side, b_side)) = sign_split(&column, &cutoff) else {
                continue;
            };
            let Ok(cert) = AttachmentCertificate::new(a_side, b_side) else {
                continue;
            };
            let bool_cert = transfer_attachment(&cert, &to_bool)?;
            if check_certificate(&bool_columns, &bool_cert)? {
                let entries: Vec<Scalar> = rational_matrix
                    .iter()
                    .flatten()
                    .map(|r| Scalar::Rat(r.clone()))
                    .collect();
                let matrix = SemiMatrix::new(qplus.clone(), n, n, entries)?;
                return Ok(RealRootWitness {
                    swapped_columns,
                    odd_permutation: sigma,
                    matrix,
                    root,
                    bracket: (lo, hi),
                    residual,
                    attachment: cert,
                });
            }
        }

        // Tighten and retry: the split stabilizes as the root improves.
        tolerance *= pow10(20);
        cutoff *= pow10(6);
    }
    Err(Error::Internal("sign split did not stabilize near the root"))
}
