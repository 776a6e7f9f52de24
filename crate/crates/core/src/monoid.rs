//! Descriptions of finite commutative monoids.
//!
//! A monoid is given by its multiplication table over elements `0..k`;
//! element `0` is the identity by convention.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidTable {
    name: String,
    order: usize,
    table: Vec<u16>,
}

impl MonoidTable {
    /// Validates associativity, commutativity, and that element 0 is the
    /// identity.
    pub fn new(name: &str, order: usize, table: Vec<u16>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidMonoid("empty monoid"));
        }
        if table.len() != order * order {
            return Err(Error::InvalidMonoid("table shape"));
        }
        if table.iter().any(|&e| (e as usize) >= order) {
            return Err(Error::InvalidMonoid("table entry out of range"));
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::InvalidMonoid("element 0 is not the identity"));
            }
        }
        for a in 0..order {
            for b in 0..order {
                if at(a, b) != at(b, a) {
                    return Err(Error::InvalidMonoid("operation is not commutative"));
                }
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::InvalidMonoid("operation is not associative"));
                    }
                }
            }
        }
        Ok(MonoidTable {
            name: name.to_string(),
            order,
            table,
        })
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        MonoidTable::new("trivial", 1, alloc::vec![0]).expect("trivial monoid is valid")
    }

    /// The cyclic group of order `k` written additively (`a ∘ b = a+b mod k`).
    pub fn cyclic(k: usize) -> Result<Self> {
        let mut table = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                table.push(((a + b) % k) as u16);
            }
        }
        MonoidTable::new(&alloc::format!("z{k}add"), k, table)
    }

    /// The multiplicative monoid on {1, 0}: element 0 is the unit 1,
    /// element 1 is the number 0, which absorbs.
    pub fn two_mult() -> Self {
        MonoidTable::new("z2mult", 2, alloc::vec![0, 1, 1, 1]).expect("valid table")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn apply(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize * self.order + b as usize]
    }

    /// The absorbing (top) element of the monoid, if one exists.
    pub fn top(&self) -> Option<u16> {
        (0..self.order as u16).find(|&t| (0..self.order as u16).all(|a| self.apply(t, a) == t))
    }
}
