//! Set families over a ground set `{1..n}` and their union properties.
//!
//! *Distinct union*: any two distinct subfamilies have distinct unions.
//! *Disparate union*: any two disjoint subfamilies (not both empty) have
//! distinct unions. Disparate-union failure is exactly linear attachment
//! of the incidence columns over the Booleans, which connects the checkers
//! here to the attachment and bideterminant machinery.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::attach::AttachmentCertificate;
use crate::bidet::{bidet, bool_attached_by_bidet, Bideterminant};
use crate::error::{Error, Result};
use crate::evencycle::{decide_bidet_equal, Verdict};
use crate::scalar::Scalar;
use crate::semimodule::{SemiMatrix, SemiVector};
use crate::system::ScalarSystem;

/// Family-size cap for the subfamily-union sweeps (2^m subfamilies).
pub const MAX_FAMILY_SIZE: usize = 20;
/// Ground-set cap for the exhaustive family enumerations.
pub const MAX_ENUM_GROUND: usize = 4;
/// Ground sets are stored as bitmasks.
pub const MAX_GROUND: usize = 64;

/// An ordered list of subsets of `{1..n}`, stored as bitmasks (element
/// `e` is bit `e - 1`). Duplicate sets are rejected unless explicitly
/// admitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    sets: Vec<u64>,
}

impl SetFamily {
    pub fn new(n: usize, sets: Vec<u64>) -> Result<Self> {
        let family = SetFamily::new_with_duplicates(n, sets)?;
        let mut seen = BTreeSet::new();
        for &s in &family.sets {
            if !seen.insert(s) {
                return Err(Error::InvalidFamily("duplicate set"));
            }
        }
        Ok(family)
    }

    /// Like [`SetFamily::new`] but admits repeated sets (any repeated set
    /// makes the disparate-union property fail trivially).
    pub fn new_with_duplicates(n: usize, sets: Vec<u64>) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::InvalidFamily("ground-set size out of range"));
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if sets.iter().any(|&s| s & !full != 0) {
            return Err(Error::InvalidFamily("set element out of range"));
        }
        Ok(SetFamily { n, sets })
    }

    /// Builds a family from explicit 1-based element lists.
    pub fn from_elements(n: usize, sets: &[&[usize]]) -> Result<Self> {
        let masks = sets
            .iter()
            .map(|els| {
                let mut mask = 0u64;
                for &e in *els {
                    if e == 0 || e > n {
                        return Err(Error::InvalidFamily("set element out of range"));
                    }
                    mask |= 1 << (e - 1);
                }
                Ok(mask)
            })
            .collect::<Result<Vec<u64>>>()?;
        SetFamily::new(n, masks)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn set(&self, j: usize) -> u64 {
        self.sets[j]
    }

    /// 1-based elements of set `j`.
    pub fn elements_of(&self, j: usize) -> Vec<usize> {
        (1..=self.n).filter(|e| self.sets[j] & (1 << (e - 1)) != 0).collect()
    }
}

/// Two disjoint subfamilies with the same union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionWitness {
    pub a: BTreeSet<usize>,
    pub b: BTreeSet<usize>,
    pub union: u64,
}

/// The Boolean incidence matrix: column `j` is the incidence vector of
/// set `j`, rows are ground elements.
pub fn incidence_matrix(f: &SetFamily) -> Result<SemiMatrix> {
    if f.is_empty() {
        return Err(Error::InvalidFamily("incidence matrix of an empty family"));
    }
    let sys = Arc::new(ScalarSystem::boolean());
    let mut entries = Vec::with_capacity(f.n * f.len());
    for i in 0..f.n {
        for &s in &f.sets {
            entries.push(Scalar::Bit(s & (1 << i) != 0));
        }
    }
    SemiMatrix::new(sys, f.n, f.len(), entries)
}

fn indices_of_mask(mask: u64) -> BTreeSet<usize> {
    (0..64).filter(|b| mask & (1 << b) != 0).collect()
}

/// Searches for two *distinct* subfamilies with equal unions by tabulating
/// all 2^m subfamily unions in ascending mask order; returns the first
/// collision as (later subfamily, earlier subfamily). `None` means the
/// distinct-union property holds.
pub fn check_distinct_union(f: &SetFamily) -> Result<Option<(BTreeSet<usize>, BTreeSet<usize>)>> {
    check_distinct_union_with_cap(f, MAX_FAMILY_SIZE)
}

/// [`check_distinct_union`] with an explicit cap (never above the
/// built-in limit).
pub fn check_distinct_union_with_cap(
    f: &SetFamily,
    cap: usize,
) -> Result<Option<(BTreeSet<usize>, BTreeSet<usize>)>> {
    let m = f.len();
    let limit = cap.min(MAX_FAMILY_SIZE);
    if m > limit {
        return Err(Error::SizeCap {
            what: "subfamily union sweep",
            limit,
            found: m,
        });
    }
    let mut first_of: BTreeMap<u64, u64> = BTreeMap::new();
    let mut unions = alloc::vec![0u64; 1usize << m];
    first_of.insert(0, 0);
    for mask in 1..(1u64 << m) {
        let low = mask.trailing_zeros() as usize;
        let u = unions[(mask & (mask - 1)) as usize] | f.sets[low];
        unions[mask as usize] = u;
        if let Some(&earlier) = first_of.get(&u) {
            return Ok(Some((indices_of_mask(mask), indices_of_mask(earlier))));
        }
        first_of.insert(u, mask);
    }
    Ok(None)
}

/// Strategy for the disparate-union check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DisparateMethod {
    /// Attachment search on the incidence columns; any family size up to
    /// the cap.
    Brute,
    /// Bideterminant criterion; square families only.
    Bidet,
    /// Determinant shortcut plus even-cycle reduction; square families
    /// only.
    Fast,
}

fn witness_from_certificate(f: &SetFamily, cert: &AttachmentCertificate) -> Result<UnionWitness> {
    let (a, b) = cert.index_sets();
    let union_of = |ix: &BTreeSet<usize>| ix.iter().fold(0u64, |acc, &i| acc | f.sets[i]);
    let ua = union_of(&a);
    let ub = union_of(&b);
    if ua != ub {
        return Err(Error::Internal("certificate unions must agree"));
    }
    Ok(UnionWitness { a, b, union: ua })
}

/// Searches for two disjoint subfamilies (not both empty) with equal
/// unions. `None` means the disparate-union property HOLDS. Boolean vector
/// addition is set union, so the witness is exactly an attachment of the
/// incidence columns; `Bidet` and `Fast` decide by criterion first and
/// recover the witness by the brute search.
pub fn check_disparate_union(f: &SetFamily, method: DisparateMethod) -> Result<Option<UnionWitness>> {
    check_disparate_union_with_cap(f, method, MAX_FAMILY_SIZE)
}

/// [`check_disparate_union`] with an explicit cap (never above the
/// built-in limits).
pub fn check_disparate_union_with_cap(
    f: &SetFamily,
    method: DisparateMethod,
    cap: usize,
) -> Result<Option<UnionWitness>> {
    if f.is_empty() {
        return Ok(None);
    }
    let recover = |f: &SetFamily| -> Result<UnionWitness> {
        let columns = incidence_matrix(f)?.columns();
        let cert = attach_bruteforce_columns(&columns, cap)?
            .ok_or(Error::Internal("criterion promised an attachment"))?;
        witness_from_certificate(f, &cert)
    };
    match method {
        DisparateMethod::Brute => {
            let limit = cap.min(MAX_FAMILY_SIZE);
            if f.len() > limit {
                return Err(Error::SizeCap {
                    what: "disparate-union brute search",
                    limit,
                    found: f.len(),
                });
            }
            let columns = incidence_matrix(f)?.columns();
            match attach_bruteforce_columns(&columns, cap)? {
                Some(cert) => Ok(Some(witness_from_certificate(f, &cert)?)),
                None => Ok(None),
            }
        }
        DisparateMethod::Bidet => {
            let inc = square_incidence(f)?;
            if bool_attached_by_bidet(&inc)? {
                Ok(Some(recover(f)?))
            } else {
                Ok(None)
            }
        }
        DisparateMethod::Fast => {
            let inc = square_incidence(f)?;
            let trace = decide_bidet_equal(&inc)?;
            if trace.verdict == Verdict::Equal {
                Ok(Some(recover(f)?))
            } else {
                Ok(None)
            }
        }
    }
}

fn attach_bruteforce_columns(
    columns: &[SemiVector],
    cap: usize,
) -> Result<Option<AttachmentCertificate>> {
    crate::attach::attach_bruteforce_with_cap(columns, cap)
}

fn square_incidence(f: &SetFamily) -> Result<SemiMatrix> {
    if f.len() != f.ground_size() {
        return Err(Error::NotSquare {
            rows: f.ground_size(),
            cols: f.len(),
        });
    }
    incidence_matrix(f)
}

/// Verdict of the bideterminant criterion for a size-`n` family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyOutcome {
    pub bideterminant: Bideterminant,
    /// True iff the pair is (1, 0) or (0, 1): the family has the
    /// disparate-union property.
    pub holds: bool,
}

/// The disparate-union criterion for families of exactly `n` sets over
/// `[n]`: the property holds iff the Boolean bideterminant of the
/// incidence matrix is (1, 0) or (0, 1).
pub fn certify_maximal(f: &SetFamily) -> Result<CertifyOutcome> {
    let inc = square_incidence(f)?;
    let bd = bidet(&inc)?;
    let one = Scalar::Bit(true);
    let zero = Scalar::Bit(false);
    let holds = (bd.plus == one && bd.minus == zero) || (bd.plus == zero && bd.minus == one);
    Ok(CertifyOutcome {
        bideterminant: bd,
        holds,
    })
}

/// Visits all k-combinations of `0..universe` in ascending lexicographic
/// order.
fn for_each_combination<F>(universe: usize, k: usize, mut f: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k > universe {
        return;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        if let ControlFlow::Break(()) = f(&combo) {
            return;
        }
        // Advance: rightmost slot that can still move right.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if combo[i] != i + universe - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Enumerates every family of exactly `n` distinct nonempty subsets of
/// `[n]` that satisfies the bideterminant criterion, in canonical
/// (ascending bitmask) order. As a cross-check it also confirms that no
/// family of `n + 1` distinct subsets has the disparate-union property.
pub fn enumerate_disparate_maximal(n: usize) -> Result<Vec<SetFamily>> {
    if n == 0 || n > MAX_ENUM_GROUND {
        return Err(Error::SizeCap {
            what: "maximal-family enumeration",
            limit: MAX_ENUM_GROUND,
            found: n,
        });
    }
    let nonempty = (1usize << n) - 1;
    let mut out = Vec::new();
    let mut failure = None;
    for_each_combination(nonempty, n, |combo| {
        // Combination index i stands for the subset mask i + 1.
        let sets: Vec<u64> = combo.iter().map(|&i| (i + 1) as u64).collect();
        let step = (|| -> Result<()> {
            let family = SetFamily::new(n, sets)?;
            if certify_maximal(&family)?.holds {
                out.push(family);
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

    // No family one larger can hold the property; a violation here would
    // be a defect, not a result.
    let mut oversize_ok = true;
    let mut check_err = None;
    for_each_combination(1 << n, n + 1, |combo| {
        let sets: Vec<u64> = combo.iter().map(|&i| i as u64).collect();
        let step = (|| -> Result<bool> {
            let family = SetFamily::new(n, sets)?;
            Ok(check_disparate_union(&family, DisparateMethod::Brute)?.is_none())
        })();
        match step {
            Ok(holds) => {
                if holds {
                    oversize_ok = false;
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            }
            Err(e) => {
                check_err = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = check_err {
        return Err(e);
    }
    if !oversize_ok {
        return Err(Error::Internal("a family of n + 1 sets passed the check"));
    }
    Ok(out)
}

/// Exhaustively confirms that the family of singletons is the only family
/// of at least `n` distinct subsets of `[n]` with the distinct-union
/// property.
pub fn verify_unique_distinct_maximal(n: usize) -> Result<bool> {
    if n == 0 || n > MAX_ENUM_GROUND {
        return Err(Error::SizeCap {
            what: "distinct-union uniqueness sweep",
            limit: MAX_ENUM_GROUND,
            found: n,
        });
    }
    let universe = 1usize << n; // all subset masks of [n]
    let singletons: BTreeSet<u64> = (0..n).map(|i| 1u64 << i).collect();

    // Union values are masks over [n], so `universe` stamp slots suffice;
    // the union table is indexed by subfamily mask.
    let mut stamp = alloc::vec![0u32; universe];
    let mut unions = alloc::vec![0u64; 1 << universe];
    let mut generation = 0u32;
    let mut survivors: Vec<BTreeSet<u64>> = Vec::new();

    for fam in 1u32..(1u32 << universe) {
        if (fam.count_ones() as usize) < n {
            continue;
        }
        let sets: Vec<u64> = (0..universe)
            .filter(|b| fam & (1 << b) != 0)
            .map(|b| b as u64)
            .collect();
        let m = sets.len();
        generation += 1;
        stamp[0] = generation;
        let mut distinct = true;
        'masks: for mask in 1..(1u64 << m) {
            let low = mask.trailing_zeros() as usize;
            let u = unions[(mask & (mask - 1)) as usize] | sets[low];
            unions[mask as usize] = u;
            if stamp[u as usize] == generation {
                distinct = false;
                break 'masks;
            }
            stamp[u as usize] = generation;
        }
        if distinct {
            survivors.push(sets.into_iter().collect());
        }
    }
    Ok(survivors.len() == 1 && survivors[0] == singletons)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn singletons(n: usize) -> SetFamily {
        SetFamily::new(n, (0..n).map(|i| 1u64 << i).collect()).unwrap()
    }

    /// The family whose incidence matrix is the running example.
    fn example_family() -> SetFamily {
        SetFamily::from_elements(4, &[&[1, 3], &[2, 4], &[1, 2, 3], &[2, 3, 4]]).unwrap()
    }

    fn chain_family(n: usize) -> SetFamily {
        // {1}, {1,2}, ..., {1..n}
        SetFamily::new(n, (1..=n).map(|k| (1u64 << k) - 1).collect()).unwrap()
    }

    #[test]
    fn duplicates_rejected_by_default() {
        assert!(SetFamily::new(3, vec![0b1, 0b1]).is_err());
        assert!(SetFamily::new_with_duplicates(3, vec![0b1, 0b1]).is_ok());
    }

    #[test]
    fn incidence_of_singletons_is_identity() {
        let m = incidence_matrix(&singletons(3)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.entry(i, j), &Scalar::Bit(i == j));
            }
        }
    }

    #[test]
    fn incidence_columns_are_sets() {
        let f = SetFamily::from_elements(2, &[&[1], &[1, 2]]).unwrap();
        let m = incidence_matrix(&f).unwrap();
        assert_eq!(
            m.column(0).entries(),
            &[Scalar::Bit(true), Scalar::Bit(false)]
        );
        assert_eq!(
            m.column(1).entries(),
            &[Scalar::Bit(true), Scalar::Bit(true)]
        );
    }

    #[test]
    fn incidence_of_star_family_has_all_ones_first_row() {
        // {1}, {1,2}, {1,3}, {1,4}
        let f = SetFamily::from_elements(4, &[&[1], &[1, 2], &[1, 3], &[1, 4]]).unwrap();
        let m = incidence_matrix(&f).unwrap();
        assert!((0..4).all(|j| m.entry(0, j) == &Scalar::Bit(true)));
    }

    #[test]
    fn distinct_union_of_singletons_holds() {
        assert_eq!(check_distinct_union(&singletons(4)).unwrap(), None);
    }

    #[test]
    fn empty_set_breaks_distinct_union() {
        let f = SetFamily::new(2, vec![0b0, 0b1]).unwrap();
        let (later, earlier) = check_distinct_union(&f).unwrap().unwrap();
        assert_eq!(later, BTreeSet::from([0]));
        assert_eq!(earlier, BTreeSet::new());
    }

    #[test]
    fn chain_family_distinct_union_collision() {
        let f = chain_family(3);
        let (later, earlier) = check_distinct_union(&f).unwrap().unwrap();
        // {s0, s1} and {s1} share the union {1, 2}.
        assert_eq!(later, BTreeSet::from([0, 1]));
        assert_eq!(earlier, BTreeSet::from([1]));
    }

    #[test]
    fn disparate_union_of_chain_holds_by_all_methods() {
        let f = chain_family(4);
        for method in [
            DisparateMethod::Brute,
            DisparateMethod::Bidet,
            DisparateMethod::Fast,
        ] {
            assert_eq!(check_disparate_union(&f, method).unwrap(), None);
        }
    }

    #[test]
    fn oversize_family_always_has_witness() {
        let f = SetFamily::new(2, vec![0b01, 0b10, 0b11]).unwrap();
        let w = check_disparate_union(&f, DisparateMethod::Brute)
            .unwrap()
            .unwrap();
        assert!(!w.a.is_empty() || !w.b.is_empty());
        let union_a = w.a.iter().fold(0u64, |acc, &i| acc | f.set(i));
        let union_b = w.b.iter().fold(0u64, |acc, &i| acc | f.set(i));
        assert_eq!(union_a, union_b);
        assert_eq!(union_a, w.union);
    }

    #[test]
    fn example_family_witness() {
        let w = check_disparate_union(&example_family(), DisparateMethod::Brute)
            .unwrap()
            .unwrap();
        assert_eq!(w.a, BTreeSet::from([0, 1]));
        assert_eq!(w.b, BTreeSet::from([2, 3]));
        assert_eq!(w.union, 0b1111);
    }

    #[test]
    fn methods_require_square_families() {
        let f = SetFamily::new(3, vec![0b1, 0b10]).unwrap();
        assert!(matches!(
            check_disparate_union(&f, DisparateMethod::Bidet),
            Err(Error::NotSquare { .. })
        ));
        assert!(check_disparate_union(&f, DisparateMethod::Brute).is_ok());
    }

    #[test]
    fn empty_family_holds_vacuously() {
        let f = SetFamily::new(3, vec![]).unwrap();
        assert_eq!(
            check_disparate_union(&f, DisparateMethod::Brute).unwrap(),
            None
        );
        assert_eq!(check_distinct_union(&f).unwrap(), None);
    }

    #[test]
    fn certify_examples() {
        let s = certify_maximal(&singletons(3)).unwrap();
        assert!(s.holds);
        assert_eq!(s.bideterminant.plus, Scalar::Bit(true));
        assert_eq!(s.bideterminant.minus, Scalar::Bit(false));

        let e = certify_maximal(&example_family()).unwrap();
        assert!(!e.holds);
        assert_eq!(e.bideterminant.plus, Scalar::Bit(true));
        assert_eq!(e.bideterminant.minus, Scalar::Bit(true));

        let c = certify_maximal(&chain_family(4)).unwrap();
        assert!(c.holds);
    }

    #[test]
    fn enumerate_small_grounds() {
        let one = enumerate_disparate_maximal(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].sets(), &[1]);

        let two = enumerate_disparate_maximal(2).unwrap();
        assert_eq!(two.len(), 3);
    }

    #[test]
    fn unique_distinct_maximal_small() {
        assert!(verify_unique_distinct_maximal(1).unwrap());
        assert!(verify_unique_distinct_maximal(2).unwrap());
        assert!(verify_unique_distinct_maximal(3).unwrap());
    }

    #[test]
    fn combination_enumerator_counts() {
        let mut count = 0;
        for_each_combination(6, 3, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 20);
    }
}
