//! Constructions that turn a finite commutative monoid into a dioid.
//!
//! * [`power_dioid`]: all subsets under union and pointwise product.
//! * [`rooted_dioid`]: the identity-containing subsets plus the empty set.
//! * [`lagrassa_embed`]: the monoid with an adjoined absorbing element and
//!   an adjoined zero, where every sum of nonzero elements collapses to
//!   the absorbing element.
//!
//! All three set flags analytically (the additive monoid is idempotent in
//! the first two and trivially ordered-by-collapse in the third), and find
//! the absorbing and top elements by exhaustive scan over the constructed
//! tables, so the flags report what the tables actually satisfy.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monoid::MonoidTable;
use crate::system::{ElemRepr, FiniteSystem, ScalarSystem, SystemFlags, TriState, MAX_CARRIER};

fn subset_repr(mask: u32) -> ElemRepr {
    let bits: Vec<u16> = (0..32).filter(|b| mask & (1 << b) != 0).collect();
    ElemRepr::Subset(bits)
}

fn mcos_flags(fin: &FiniteSystem) -> SystemFlags {
    SystemFlags {
        commutative: TriState::True,
        dioid: TriState::True,
        mcos: TriState::from_bool(fin.find_absorbing().is_some()),
    }
}

/// Pointwise product of two subsets of the monoid.
fn mask_product(monoid: &MonoidTable, a: u32, b: u32) -> u32 {
    let mut out = 0u32;
    let mut x = a;
    while x != 0 {
        let i = x.trailing_zeros() as u16;
        x &= x - 1;
        let mut y = b;
        while y != 0 {
            let j = y.trailing_zeros() as u16;
            y &= y - 1;
            out |= 1 << monoid.apply(i, j);
        }
    }
    out
}

/// The power-dioid of a finite commutative monoid: carrier all subsets,
/// addition is union, multiplication is the pointwise product set, zero is
/// the empty set, one is the singleton of the identity.
pub fn power_dioid(monoid: &MonoidTable) -> Result<ScalarSystem> {
    let k = monoid.order();
    if k > 8 {
        return Err(Error::SizeCap {
            what: "power-dioid carrier",
            limit: MAX_CARRIER,
            found: 1usize << k,
        });
    }
    let size = 1usize << k;
    let mut elems = Vec::with_capacity(size);
    for mask in 0..size as u32 {
        elems.push(subset_repr(mask));
    }
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for a in 0..size as u32 {
        for b in 0..size as u32 {
            add.push((a | b) as u16);
            mul.push(mask_product(monoid, a, b) as u16);
        }
    }
    let fin = FiniteSystem::new(elems, add, mul, 0, 1)?;
    let flags = mcos_flags(&fin);
    Ok(ScalarSystem::from_finite(
        format!("power:{}", monoid.name()),
        fin,
        flags,
    ))
}

/// The rooted dioid of a finite commutative monoid: the subsets containing
/// the identity, plus the empty set, under the power-dioid operations. The
/// full monoid is both the top element and the absorbing element.
pub fn rooted_dioid(monoid: &MonoidTable) -> Result<ScalarSystem> {
    let k = monoid.order();
    if k > 9 {
        return Err(Error::SizeCap {
            what: "rooted-dioid carrier",
            limit: MAX_CARRIER,
            found: (1usize << (k - 1)) + 1,
        });
    }
    // Carrier masks in ascending order: the empty set, then every mask
    // containing bit 0 (the identity).
    let mut masks: Vec<u32> = Vec::new();
    masks.push(0);
    for mask in 0..(1u32 << k) {
        if mask & 1 != 0 {
            masks.push(mask);
        }
    }
    let size = masks.len();
    let mut id_of = alloc::vec![u16::MAX; 1 << k];
    for (i, &m) in masks.iter().enumerate() {
        id_of[m as usize] = i as u16;
    }
    let elems: Vec<ElemRepr> = masks.iter().map(|&m| subset_repr(m)).collect();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for &a in &masks {
        for &b in &masks {
            // Unions and products of rooted sets are rooted, so the
            // restriction is closed.
            add.push(id_of[(a | b) as usize]);
            mul.push(id_of[mask_product(monoid, a, b) as usize]);
        }
    }
    let one = id_of[1];
    let fin = FiniteSystem::new(elems, add, mul, 0, one)?;
    let flags = mcos_flags(&fin);
    Ok(ScalarSystem::from_finite(
        format!("rooted:{}", monoid.name()),
        fin,
        flags,
    ))
}

/// Embeds a commutative monoid in a dioid with a nonzero multiplicatively
/// absorbing element: adjoin an absorbing element `m` with `a + b = m` for
/// all nonzero `a`, `b`, then adjoin a fresh zero.
pub fn lagrassa_embed(monoid: &MonoidTable) -> Result<ScalarSystem> {
    let k = monoid.order();
    let size = k + 2;
    if size > MAX_CARRIER {
        return Err(Error::SizeCap {
            what: "absorbing-extension carrier",
            limit: MAX_CARRIER,
            found: size,
        });
    }
    // Element ids: 0 is the adjoined zero, 1..=k are the monoid elements
    // (id i+1 for monoid element i), k+1 is the absorbing element.
    let zero = 0u16;
    let m_id = (k + 1) as u16;
    let mut elems = Vec::with_capacity(size);
    elems.push(ElemRepr::ExtZero);
    for i in 0..k as u16 {
        elems.push(ElemRepr::ExtMonoid(i));
    }
    elems.push(ElemRepr::ExtAbsorbing);

    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for a in 0..size as u16 {
        for b in 0..size as u16 {
            add.push(if a == zero {
                b
            } else if b == zero {
                a
            } else {
                m_id
            });
            mul.push(if a == zero || b == zero {
                zero
            } else if a == m_id || b == m_id {
                m_id
            } else {
                monoid.apply(a - 1, b - 1) + 1
            });
        }
    }
    let fin = FiniteSystem::new(elems, add, mul, zero, 1)?;
    let flags = mcos_flags(&fin);
    Ok(ScalarSystem::from_finite(
        format!("lagrassa:{}", monoid.name()),
        fin,
        flags,
    ))
}
