//! Linear attachment: detection, certificates, transport, and the
//! constructive lift of attached Boolean vectors to the naturals.
//!
//! A collection is *attached* when disjoint index sets `A`, `B` (not both
//! empty) and nonzero coefficients make the two weighted sums equal; the
//! empty sum is the zero vector. Detached is the negation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::int_nullspace_vector;
use crate::morphism::{characteristic_bool_morphism, SemiringMorphism};
use crate::scalar::Scalar;
use crate::semimodule::{weighted_sum, SemiVector};
use crate::system::ScalarSystem;

/// Vector-count cap for the sign-pattern search (3^k patterns).
pub const MAX_SIGN_VECTORS: usize = 20;
/// Vector-count cap for the full scalar-enumeration search.
pub const MAX_SCALAR_VECTORS: usize = 8;

/// Witness of linear attachment: disjoint index sets with nonzero
/// coefficients. Indices are 0-based positions into the vector list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachmentCertificate {
    a: BTreeMap<usize, Scalar>,
    b: BTreeMap<usize, Scalar>,
}

impl AttachmentCertificate {
    pub fn new(a: BTreeMap<usize, Scalar>, b: BTreeMap<usize, Scalar>) -> Result<Self> {
        if a.is_empty() && b.is_empty() {
            return Err(Error::InvalidCertificate("both index sets empty"));
        }
        if a.keys().any(|i| b.contains_key(i)) {
            return Err(Error::InvalidCertificate("index sets overlap"));
        }
        Ok(AttachmentCertificate { a, b })
    }

    /// Certificate with one shared coefficient on every index.
    pub fn uniform(
        a: impl IntoIterator<Item = usize>,
        b: impl IntoIterator<Item = usize>,
        coeff: &Scalar,
    ) -> Result<Self> {
        AttachmentCertificate::new(
            a.into_iter().map(|i| (i, coeff.clone())).collect(),
            b.into_iter().map(|i| (i, coeff.clone())).collect(),
        )
    }

    pub fn a(&self) -> &BTreeMap<usize, Scalar> {
        &self.a
    }

    pub fn b(&self) -> &BTreeMap<usize, Scalar> {
        &self.b
    }

    pub fn index_sets(&self) -> (BTreeSet<usize>, BTreeSet<usize>) {
        (
            self.a.keys().copied().collect(),
            self.b.keys().copied().collect(),
        )
    }
}

fn require_shared_space(vectors: &[SemiVector]) -> Result<()> {
    let Some(first) = vectors.first() else {
        return Ok(());
    };
    for v in vectors {
        if v.system() != first.system() {
            return Err(Error::SystemMismatch);
        }
        if v.len() != first.len() {
            return Err(Error::DimensionMismatch {
                expected: first.len(),
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// Verifies an attachment certificate against a vector list: true iff the
/// two weighted sums agree entrywise. Zero coefficients and out-of-range
/// indices are errors, not `false`.
pub fn check_certificate(vectors: &[SemiVector], cert: &AttachmentCertificate) -> Result<bool> {
    require_shared_space(vectors)?;
    let Some(first) = vectors.first() else {
        return Err(Error::InvalidCertificate("certificate over empty list"));
    };
    let system = first.system();
    for (i, coeff) in cert.a.iter().chain(cert.b.iter()) {
        if *i >= vectors.len() {
            return Err(Error::InvalidCertificate("index out of range"));
        }
        if system.is_zero(coeff)? {
            return Err(Error::InvalidCertificate("zero coefficient"));
        }
    }
    let sum_a = weighted_sum(
        system,
        first.len(),
        cert.a.iter().map(|(i, c)| (c, &vectors[*i])),
    )?;
    let sum_b = weighted_sum(
        system,
        first.len(),
        cert.b.iter().map(|(i, c)| (c, &vectors[*i])),
    )?;
    Ok(sum_a == sum_b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Unused,
    A,
    B,
}

/// Visits sign patterns over `{unused, A, B}^k` in lexicographic order
/// (unused < A < B, leftmost index most significant), restricted to the
/// canonical representatives whose first used index lies in `A`. The
/// all-unused pattern is skipped.
fn for_each_sign_pattern<F>(k: usize, mut f: F)
where
    F: FnMut(&[Side]) -> ControlFlow<()>,
{
    let mut digits = alloc::vec![Side::Unused; k];
    loop {
        // Odometer increment, last index fastest.
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            digits[pos] = match digits[pos] {
                Side::Unused => Side::A,
                Side::A => Side::B,
                Side::B => {
                    digits[pos] = Side::Unused;
                    continue;
                }
            };
            break;
        }
        let canonical = digits
            .iter()
            .find(|s| **s != Side::Unused)
            .map(|s| *s == Side::A)
            .unwrap_or(false);
        if canonical {
            if let ControlFlow::Break(()) = f(&digits) {
                return;
            }
        }
    }
}

/// Per-vector support bitmaps (one bit per entry, chunked into u64 words).
fn support_masks(vectors: &[SemiVector]) -> Result<Vec<Vec<u64>>> {
    let dim = vectors.first().map(|v| v.len()).unwrap_or(0);
    let chunks = dim.div_ceil(64);
    let mut out = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut mask = alloc::vec![0u64; chunks];
        for (i, e) in v.entries().iter().enumerate() {
            if !v.system().is_zero(e)? {
                mask[i / 64] |= 1 << (i % 64);
            }
        }
        out.push(mask);
    }
    Ok(out)
}

/// Sign-pattern search on support bitmaps. Over a dioid with absorbing
/// element `m`, scaling any nonzero entry by `m` yields exactly `m`, so the
/// all-`m` weighted sum is determined by the union of supports; equality
/// of the two unions decides the pattern.
fn mask_sign_search(masks: &[Vec<u64>]) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
    let k = masks.len();
    let chunks = masks.first().map(|m| m.len()).unwrap_or(0);
    let mut found = None;
    for_each_sign_pattern(k, |pattern| {
        let mut or_a = alloc::vec![0u64; chunks];
        let mut or_b = alloc::vec![0u64; chunks];
        for (i, side) in pattern.iter().enumerate() {
            let acc = match side {
                Side::Unused => continue,
                Side::A => &mut or_a,
                Side::B => &mut or_b,
            };
            for (chunk, m) in acc.iter_mut().zip(&masks[i]) {
                *chunk |= m;
            }
        }
        if or_a == or_b {
            let pick = |side: Side| -> BTreeSet<usize> {
                pattern
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| **s == side)
                    .map(|(i, _)| i)
                    .collect()
            };
            found = Some((pick(Side::A), pick(Side::B)));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// Full scalar enumeration: for each canonical sign pattern, tries every
/// assignment of nonzero coefficients (odometer over the carrier order,
/// last used index fastest).
fn full_scalar_search(vectors: &[SemiVector]) -> Result<Option<AttachmentCertificate>> {
    let system = vectors[0].system().clone();
    let dim = vectors[0].len();
    let nonzero = system.nonzero_elements().ok_or(Error::UnsupportedSystem(
        "full scalar search needs a finite carrier",
    ))?;
    let k = vectors.len();
    let mut found: Option<AttachmentCertificate> = None;
    let mut failure: Option<Error> = None;
    for_each_sign_pattern(k, |pattern| {
        let used: Vec<usize> = (0..k).filter(|&i| pattern[i] != Side::Unused).collect();
        let mut choice = alloc::vec![0usize; used.len()];
        loop {
            let attempt = || -> Result<Option<AttachmentCertificate>> {
                let mut a = BTreeMap::new();
                let mut b = BTreeMap::new();
                for (slot, &i) in used.iter().enumerate() {
                    let coeff = nonzero[choice[slot]].clone();
                    match pattern[i] {
                        Side::A => a.insert(i, coeff),
                        Side::B => b.insert(i, coeff),
                        Side::Unused => unreachable!(),
                    };
                }
                let sum_a = weighted_sum(&system, dim, a.iter().map(|(i, c)| (c, &vectors[*i])))?;
                let sum_b = weighted_sum(&system, dim, b.iter().map(|(i, c)| (c, &vectors[*i])))?;
                if sum_a == sum_b {
                    Ok(Some(AttachmentCertificate::new(a, b)?))
                } else {
                    Ok(None)
                }
            };
            match attempt() {
                Ok(Some(cert)) => {
                    found = Some(cert);
                    return ControlFlow::Break(());
                }
                Ok(None) => {}
                Err(e) => {
                    failure = Some(e);
                    return ControlFlow::Break(());
                }
            }
            // Advance the coefficient odometer.
            let mut pos = choice.len();
            loop {
                if pos == 0 {
                    return ControlFlow::Continue(());
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] == nonzero.len() {
                    choice[pos] = 0;
                    continue;
                }
                break;
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(found)
}

/// Exhaustive attachment search. The strategy depends on the system:
///
/// * Boolean or any dioid with a verified absorbing element `m`: sign
///   patterns with every coefficient equal to `m` (complete, because
///   multiplying a witness equation through by `m` turns every coefficient
///   into `m`); up to [`MAX_SIGN_VECTORS`] vectors.
/// * other finite systems: sign patterns with full coefficient
///   enumeration; up to [`MAX_SCALAR_VECTORS`] vectors.
///
/// Infinite systems without an absorbing element are not supported. The
/// empty list is detached. Returns the lexicographically first certificate.
pub fn attach_bruteforce(vectors: &[SemiVector]) -> Result<Option<AttachmentCertificate>> {
    attach_bruteforce_with_cap(vectors, MAX_SIGN_VECTORS)
}

/// [`attach_bruteforce`] with an explicit vector-count cap (never above
/// the built-in limits).
pub fn attach_bruteforce_with_cap(
    vectors: &[SemiVector],
    cap: usize,
) -> Result<Option<AttachmentCertificate>> {
    require_shared_space(vectors)?;
    if vectors.is_empty() {
        return Ok(None);
    }
    let system = vectors[0].system().clone();
    let absorbing = if system.flags().mcos.is_true() {
        system.absorbing().cloned()
    } else {
        None
    };

    if let Some(m) = absorbing {
        let limit = cap.min(MAX_SIGN_VECTORS);
        if vectors.len() > limit {
            return Err(Error::SizeCap {
                what: "sign-pattern attachment search",
                limit,
                found: vectors.len(),
            });
        }
        let masks = support_masks(vectors)?;
        let Some((a, b)) = mask_sign_search(&masks) else {
            return Ok(None);
        };
        let cert = AttachmentCertificate::uniform(a, b, &m)?;
        debug_assert_eq!(check_certificate(vectors, &cert), Ok(true));
        return Ok(Some(cert));
    }

    if !system.is_finite() {
        return Err(Error::UnsupportedSystem(
            "attachment search over an infinite system without absorbing element",
        ));
    }
    let limit = cap.min(MAX_SCALAR_VECTORS);
    if vectors.len() > limit {
        return Err(Error::SizeCap {
            what: "full scalar attachment search",
            limit,
            found: vectors.len(),
        });
    }
    let cert = full_scalar_search(vectors)?;
    if let Some(c) = &cert {
        debug_assert_eq!(check_certificate(vectors, c), Ok(true));
    }
    Ok(cert)
}

/// Attachment search by full coefficient enumeration regardless of any
/// absorbing element; finite carriers only. This is the slow reference
/// route used to cross-validate the `m`-coefficient shortcut.
pub fn attach_bruteforce_full(vectors: &[SemiVector]) -> Result<Option<AttachmentCertificate>> {
    require_shared_space(vectors)?;
    if vectors.is_empty() {
        return Ok(None);
    }
    if !vectors[0].system().is_finite() {
        return Err(Error::UnsupportedSystem(
            "full scalar search needs a finite carrier",
        ));
    }
    if vectors.len() > MAX_SCALAR_VECTORS {
        return Err(Error::SizeCap {
            what: "full scalar attachment search",
            limit: MAX_SCALAR_VECTORS,
            found: vectors.len(),
        });
    }
    full_scalar_search(vectors)
}

/// A map between standard semimodules that applies a semiring morphism
/// componentwise.
#[derive(Debug, Clone)]
pub struct SemilinearMap {
    morphism: SemiringMorphism,
    dim: usize,
}

impl SemilinearMap {
    pub fn new(morphism: SemiringMorphism, dim: usize) -> Self {
        SemilinearMap { morphism, dim }
    }

    pub fn morphism(&self) -> &SemiringMorphism {
        &self.morphism
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Componentwise image of a vector.
    pub fn apply(&self, v: &SemiVector) -> Result<SemiVector> {
        if v.system() != self.morphism.source() {
            return Err(Error::SystemMismatch);
        }
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let entries = v
            .entries()
            .iter()
            .map(|e| self.morphism.apply(e))
            .collect::<Result<Vec<_>>>()?;
        SemiVector::new(self.morphism.target().clone(), entries)
    }
}

/// Pushes a certificate through an entire morphism: coefficients map to
/// their (nonzero) images, index sets are unchanged. The result is valid
/// for the componentwise images of the original vectors.
pub fn transfer_attachment(
    cert: &AttachmentCertificate,
    map: &SemilinearMap,
) -> Result<AttachmentCertificate> {
    if !map.morphism().is_entire() {
        return Err(Error::NotEntire);
    }
    let push = |coeffs: &BTreeMap<usize, Scalar>| -> Result<BTreeMap<usize, Scalar>> {
        coeffs
            .iter()
            .map(|(i, c)| Ok((*i, map.morphism().apply(c)?)))
            .collect()
    };
    AttachmentCertificate::new(push(&cert.a)?, push(&cert.b)?)
}

/// Attachment over a dioid with absorbing element `m`, decided in the
/// Boolean image: map every vector through the characteristic Boolean
/// morphism, search there, and pull the index sets back with all
/// coefficients equal to `m`. Complete: any witness equation multiplied
/// through by `m` becomes the all-`m` witness for the same index sets.
pub fn attach_mcos(vectors: &[SemiVector]) -> Result<Option<AttachmentCertificate>> {
    require_shared_space(vectors)?;
    let Some(first) = vectors.first() else {
        return Ok(None);
    };
    let system = first.system().clone();
    if !system.flags().mcos.is_true() {
        return Err(Error::NotMcos);
    }
    let Some(m) = system.absorbing().cloned() else {
        return Err(Error::NotMcos);
    };
    let phi = characteristic_bool_morphism(&system)?;
    let map = SemilinearMap::new(phi, first.len());
    let images = vectors
        .iter()
        .map(|v| map.apply(v))
        .collect::<Result<Vec<_>>>()?;
    let Some(bool_cert) = attach_bruteforce(&images)? else {
        return Ok(None);
    };
    let (a, b) = bool_cert.index_sets();
    let cert = AttachmentCertificate::uniform(a, b, &m)?;
    debug_assert_eq!(check_certificate(vectors, &cert), Ok(true));
    Ok(Some(cert))
}

/// Attachment of Boolean vectors via real linear dependence: find an exact
/// rational null vector of the column matrix and split the indices by
/// coefficient sign. Absence of a real dependence does NOT imply
/// detachment; real independence with Boolean attachment is possible.
pub fn attach_via_real(vectors: &[SemiVector]) -> Result<Option<AttachmentCertificate>> {
    require_shared_space(vectors)?;
    let Some(first) = vectors.first() else {
        return Ok(None);
    };
    if !first.system().is_boolean() {
        return Err(Error::NotBoolean);
    }
    let one = Scalar::Bit(true);
    // A zero vector is attached on its own: 1 * 0 = (empty sum).
    for (i, v) in vectors.iter().enumerate() {
        if v.is_zero()? {
            return Ok(Some(AttachmentCertificate::uniform([i], [], &one)?));
        }
    }
    let cols: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            v.entries()
                .iter()
                .map(|e| match e.as_bit() {
                    Some(true) => BigInt::from(1),
                    _ => BigInt::zero(),
                })
                .collect()
        })
        .collect();
    let Some(mut lambda) = int_nullspace_vector(&cols)? else {
        return Ok(None);
    };
    // Orient so the first used index lands in A, matching the canonical
    // form of the sign-pattern search.
    if lambda
        .iter()
        .find(|l| !l.is_zero())
        .is_some_and(|l| l.sign() == Sign::Minus)
    {
        for l in &mut lambda {
            *l = -(core::mem::take(l));
        }
    }
    let a: BTreeSet<usize> = lambda
        .iter()
        .enumerate()
        .filter(|(_, l)| l.sign() == Sign::Plus)
        .map(|(i, _)| i)
        .collect();
    let b: BTreeSet<usize> = lambda
        .iter()
        .enumerate()
        .filter(|(_, l)| l.sign() == Sign::Minus)
        .map(|(i, _)| i)
        .collect();
    // With no zero vector in the list, a null vector of nonnegative
    // columns must carry both signs.
    debug_assert!(!a.is_empty() && !b.is_empty());
    let cert = AttachmentCertificate::uniform(a, b, &one)?;
    debug_assert_eq!(check_certificate(vectors, &cert), Ok(true));
    Ok(Some(cert))
}

/// Constructive preimage of an attached Boolean collection under the
/// characteristic Boolean morphism of the naturals: returns natural
/// vectors with the same zero pattern whose weighted sums agree exactly
/// in the naturals.
///
/// Per component: count the supporting vectors on each side; on the
/// deficient side, bump the entry of the smallest-index supporting vector
/// to `|difference| + 1`.
pub fn lift_to_nat(
    vectors: &[SemiVector],
    cert: &AttachmentCertificate,
) -> Result<Vec<SemiVector>> {
    require_shared_space(vectors)?;
    let Some(first) = vectors.first() else {
        return Err(Error::InvalidCertificate("certificate over empty list"));
    };
    if !first.system().is_boolean() {
        return Err(Error::NotBoolean);
    }
    if !check_certificate(vectors, cert)? {
        return Err(Error::InvalidCertificate("does not verify over the vectors"));
    }
    let dim = first.len();
    let bit = |v: &SemiVector, j: usize| v.entry(j) == &Scalar::Bit(true);

    let mut lifted: Vec<Vec<BigUint>> = vectors
        .iter()
        .map(|v| {
            v.entries()
                .iter()
                .map(|e| match e.as_bit() {
                    Some(true) => BigUint::from(1u32),
                    _ => BigUint::zero(),
                })
                .collect()
        })
        .collect();

    let (set_a, set_b) = cert.index_sets();
    for j in 0..dim {
        let alpha = set_a.iter().filter(|&&i| bit(&vectors[i], j)).count();
        let beta = set_b.iter().filter(|&&i| bit(&vectors[i], j)).count();
        if alpha == beta {
            continue;
        }
        let gamma = alpha.abs_diff(beta);
        let deficient = if alpha > beta { &set_b } else { &set_a };
        let target = deficient
            .iter()
            .copied()
            .find(|&i| bit(&vectors[i], j))
            .ok_or(Error::Internal(
                "matching supports are guaranteed by a verified certificate",
            ))?;
        lifted[target][j] = BigUint::from((gamma + 1) as u64);
    }

    let nat = Arc::new(ScalarSystem::naturals());
    lifted
        .into_iter()
        .map(|entries| {
            SemiVector::new(nat.clone(), entries.into_iter().map(Scalar::Nat).collect())
        })
        .collect()
}
