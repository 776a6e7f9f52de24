//! The bideterminant and its attachment criteria.
//!
//! Over a semiring there is no subtraction, so the determinant splits into
//! the pair (det+, det-): the sums of permutation weights over the even
//! and odd permutations respectively. The pair detects linear attachment:
//! over the Booleans the columns attach iff det+ = det-, and over a dioid
//! with absorbing element iff det+ and det- are zero or nonzero together.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::morphism::characteristic_bool_morphism;
use crate::perm::for_each_permutation;
use crate::sample::SplitMix64;
use crate::scalar::{Extended, Scalar};
use crate::semimodule::{SemiMatrix, SemiVector};
use crate::system::ScalarSystem;

/// Size cap for full permutation expansion (10! diagonals).
pub const MAX_EXPANSION: usize = 10;
/// Size cap for materializing the full diagonal list.
pub const MAX_DIAGONAL_LIST: usize = 8;

/// The pair (det+, det-).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bideterminant {
    pub plus: Scalar,
    pub minus: Scalar,
}

/// One generalized diagonal: a permutation, its weight in the matrix, and
/// its parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalWeight {
    pub permutation: Vec<usize>,
    pub weight: Scalar,
    pub even: bool,
}

fn permutation_weight(a: &SemiMatrix, sigma: &[usize]) -> Result<Scalar> {
    let system = a.system();
    let mut w = system.one();
    for (i, &j) in sigma.iter().enumerate() {
        w = system.mul(&w, a.entry(i, j))?;
    }
    Ok(w)
}

/// Exact permutation expansion split by parity.
pub fn bidet(a: &SemiMatrix) -> Result<Bideterminant> {
    bidet_with_cap(a, MAX_EXPANSION)
}

/// [`bidet`] with an explicit size cap (never above the built-in limit).
pub fn bidet_with_cap(a: &SemiMatrix, cap: usize) -> Result<Bideterminant> {
    let n = a.require_square()?;
    let limit = cap.min(MAX_EXPANSION);
    if n > limit {
        return Err(Error::SizeCap {
            what: "permutation expansion",
            limit,
            found: n,
        });
    }
    let system = a.system();
    let mut plus = system.zero();
    let mut minus = system.zero();
    let mut failure = None;
    for_each_permutation(n, |sigma, even| {
        let step = (|| -> Result<()> {
            let w = permutation_weight(a, sigma)?;
            if even {
                plus = system.add(&plus, &w)?;
            } else {
                minus = system.add(&minus, &w)?;
            }
            Ok(())
        })();
        match step {
            Ok(()) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(Bideterminant { plus, minus })
}

/// All n! generalized diagonals with weights and parities, in lexicographic
/// permutation order.
pub fn diagonal_weights(a: &SemiMatrix) -> Result<Vec<DiagonalWeight>> {
    let n = a.require_square()?;
    if n > MAX_DIAGONAL_LIST {
        return Err(Error::SizeCap {
            what: "diagonal list",
            limit: MAX_DIAGONAL_LIST,
            found: n,
        });
    }
    let mut out = Vec::new();
    let mut failure = None;
    for_each_permutation(n, |sigma, even| match permutation_weight(a, sigma) {
        Ok(weight) => {
            out.push(DiagonalWeight {
                permutation: sigma.to_vec(),
                weight,
                even,
            });
            ControlFlow::Continue(())
        }
        Err(e) => {
            failure = Some(e);
            ControlFlow::Break(())
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(out)
}

/// Attachment criterion for Boolean matrices: the columns attach iff
/// det+ = det-.
pub fn bool_attached_by_bidet(a: &SemiMatrix) -> Result<bool> {
    if !a.system().is_boolean() {
        return Err(Error::NotBoolean);
    }
    let bd = bidet(a)?;
    Ok(bd.plus == bd.minus)
}

/// Attachment criterion over a dioid with a verified absorbing element:
/// the columns attach iff det+ and det- are both zero or both nonzero.
pub fn mcos_attached_by_bidet(a: &SemiMatrix) -> Result<bool> {
    let system = a.system();
    if !system.flags().mcos.is_true() {
        return Err(Error::NotMcos);
    }
    let bd = bidet(a)?;
    Ok(system.is_zero(&bd.plus)? == system.is_zero(&bd.minus)?)
}

/// Outcome of one property of the verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertySuiteReport {
    pub exhaustive: bool,
    pub checks: Vec<PropertyCheck>,
}

impl PropertySuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }
}

fn sample_scalar(system: &ScalarSystem, rng: &mut SplitMix64) -> Scalar {
    if let Some(k) = system.carrier_len() {
        let i = rng.below(k as u64) as usize;
        return system.elements().expect("finite carrier")[i].clone();
    }
    match system.name() {
        "nat" => Scalar::nat(rng.below(10)),
        "qplus" => Scalar::rat(rng.below(10) as i64, 1 + rng.below(4) as i64),
        "minplus" => {
            if rng.below(8) == 0 {
                Scalar::MinPlus(Extended::Infinity)
            } else {
                Scalar::min_plus(rng.below(9) as i64 - 4, 1)
            }
        }
        _ => system.one(),
    }
}

fn sample_matrix(system: &Arc<ScalarSystem>, n: usize, rng: &mut SplitMix64) -> SemiMatrix {
    let entries = (0..n * n).map(|_| sample_scalar(system, rng)).collect();
    SemiMatrix::new(system.clone(), n, n, entries).expect("sampled entries are members")
}

/// All matrices over a finite carrier, by odometer over the entry slots.
fn exhaustive_matrices(system: &Arc<ScalarSystem>, n: usize) -> Vec<SemiMatrix> {
    let elems = system.elements().expect("finite carrier");
    let k = elems.len();
    let slots = n * n;
    let mut out = Vec::new();
    let mut digits = alloc::vec![0usize; slots];
    loop {
        let entries: Vec<Scalar> = digits.iter().map(|&d| elems[d].clone()).collect();
        out.push(SemiMatrix::new(system.clone(), n, n, entries).expect("members"));
        let mut pos = slots;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] == k {
                digits[pos] = 0;
                continue;
            }
            break;
        }
    }
}

/// Verifies the elementary bideterminant properties on a system:
/// alternating row swaps, row scaling, row additivity, transpose
/// invariance, upper-triangular evaluation, and commutation with the
/// characteristic Boolean morphism (skipped with zero cases when the
/// morphism does not exist). Matrices are enumerated exhaustively when the
/// finite carrier allows, otherwise `samples` matrices are drawn from the
/// seeded generator.
pub fn bidet_property_suite(
    system: &Arc<ScalarSystem>,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<PropertySuiteReport> {
    if n == 0 || n > 4 {
        return Err(Error::SizeCap {
            what: "property suite size",
            limit: 4,
            found: n,
        });
    }
    let mut rng = SplitMix64::new(seed);
    let exhaustive = system
        .carrier_len()
        .and_then(|k| k.checked_pow((n * n) as u32))
        .is_some_and(|total| total <= 4096);
    let matrices: Vec<SemiMatrix> = if exhaustive {
        exhaustive_matrices(system, n)
    } else {
        (0..samples).map(|_| sample_matrix(system, n, &mut rng)).collect()
    };

    let mut alternating = PropertyCheck { name: "alternating", cases: 0, failures: 0 };
    let mut scaling = PropertyCheck { name: "row-scaling", cases: 0, failures: 0 };
    let mut additivity = PropertyCheck { name: "row-additivity", cases: 0, failures: 0 };
    let mut transpose = PropertyCheck { name: "transpose", cases: 0, failures: 0 };
    let mut triangular = PropertyCheck { name: "upper-triangular", cases: 0, failures: 0 };
    let mut morphism = PropertyCheck { name: "morphism", cases: 0, failures: 0 };

    let lambdas: Vec<Scalar> = match system.elements() {
        Some(els) => els,
        None => (0..3).map(|_| sample_scalar(system, &mut rng)).collect(),
    };
    // Row vectors for the additivity law.
    let small_vector_space = system
        .carrier_len()
        .and_then(|k| k.checked_pow(n as u32))
        .is_some_and(|total| total <= 64);

    for a in &matrices {
        let base = bidet(a)?;

        for i in 0..n {
            for j in i + 1..n {
                alternating.cases += 1;
                let swapped = bidet(&a.with_rows_swapped(i, j))?;
                if (swapped.plus, swapped.minus) != (base.minus.clone(), base.plus.clone()) {
                    alternating.failures += 1;
                }
            }
        }

        for i in 0..n {
            let row = a.row(i);
            for lambda in &lambdas {
                scaling.cases += 1;
                let scaled = bidet(&a.with_row(i, &row.scale(lambda)?)?)?;
                let expect_plus = system.mul(lambda, &base.plus)?;
                let expect_minus = system.mul(lambda, &base.minus)?;
                if (scaled.plus, scaled.minus) != (expect_plus, expect_minus) {
                    scaling.failures += 1;
                }
            }

            let extra_rows: Vec<SemiVector> = if small_vector_space {
                all_vectors(system, n)
            } else {
                alloc::vec![SemiVector::new(
                    system.clone(),
                    (0..n).map(|_| sample_scalar(system, &mut rng)).collect(),
                )
                .expect("members")]
            };
            for v in extra_rows {
                additivity.cases += 1;
                let replaced = bidet(&a.with_row(i, &v)?)?;
                let combined = bidet(&a.with_row(i, &row.add(&v)?)?)?;
                let expect_plus = system.add(&base.plus, &replaced.plus)?;
                let expect_minus = system.add(&base.minus, &replaced.minus)?;
                if (combined.plus, combined.minus) != (expect_plus, expect_minus) {
                    additivity.failures += 1;
                }
            }
        }

        transpose.cases += 1;
        if bidet(&a.transpose())? != base {
            transpose.failures += 1;
        }

        if let Ok(phi) = characteristic_bool_morphism(system) {
            morphism.cases += 1;
            let image = bidet(&phi.apply_matrix(a)?)?;
            if (image.plus, image.minus) != (phi.apply(&base.plus)?, phi.apply(&base.minus)?) {
                morphism.failures += 1;
            }
        }
    }

    // Upper-triangular matrices are generated separately.
    let triangular_count = if exhaustive { matrices.len() } else { samples };
    for _ in 0..triangular_count {
        triangular.cases += 1;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(if i > j {
                    system.zero()
                } else {
                    sample_scalar(system, &mut rng)
                });
            }
        }
        let t = SemiMatrix::new(system.clone(), n, n, entries).expect("members");
        let bd = bidet(&t)?;
        let mut diag = system.one();
        for i in 0..n {
            diag = system.mul(&diag, t.entry(i, i))?;
        }
        if (bd.plus, bd.minus) != (diag, system.zero()) {
            triangular.failures += 1;
        }
    }

    Ok(PropertySuiteReport {
        exhaustive,
        checks: alloc::vec![
            alternating,
            scaling,
            additivity,
            transpose,
            triangular,
            morphism,
        ],
    })
}

fn all_vectors(system: &Arc<ScalarSystem>, n: usize) -> Vec<SemiVector> {
    let elems = system.elements().expect("finite carrier");
    let k = elems.len();
    let mut out = Vec::new();
    let mut digits = alloc::vec![0usize; n];
    loop {
        let entries: Vec<Scalar> = digits.iter().map(|&d| elems[d].clone()).collect();
        out.push(SemiVector::new(system.clone(), entries).expect("members"));
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] == k {
                digits[pos] = 0;
                continue;
            }
            break;
        }
    }
}
