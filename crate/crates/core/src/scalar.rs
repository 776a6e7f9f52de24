//! Scalar payloads.
//!
//! A [`Scalar`] is a bare carrier value; which operations apply to it is
//! decided by the [`ScalarSystem`](crate::system::ScalarSystem) it lives in.
//! Equality is structural and decidable for every variant.

use alloc::string::String;
use core::cmp::Ordering;

use num_bigint::BigUint;
use num_rational::BigRational;

/// Extended rational: a finite value or positive infinity. Infinity is the
/// additive identity (and multiplicative annihilator) of min-plus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Extended {
    Finite(BigRational),
    Infinity,
}

impl Extended {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinity)
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Extended::Finite(r) => Some(r),
            Extended::Infinity => None,
        }
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Extended {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Extended::Infinity, Extended::Infinity) => Ordering::Equal,
            (Extended::Infinity, Extended::Finite(_)) => Ordering::Greater,
            (Extended::Finite(_), Extended::Infinity) => Ordering::Less,
            (Extended::Finite(a), Extended::Finite(b)) => a.cmp(b),
        }
    }
}

/// A carrier value of some scalar system.
///
/// The variants cover the built-in carriers plus `Elem`, an index into the
/// explicit element list of a finite system.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    /// Boolean dioid element.
    Bit(bool),
    /// Arbitrary-precision natural number.
    Nat(BigUint),
    /// Nonnegative rational.
    Rat(BigRational),
    /// Min-plus element: an extended rational.
    MinPlus(Extended),
    /// Element of a finite system, by carrier index.
    Elem(u16),
}

impl Scalar {
    pub fn bit(b: bool) -> Self {
        Scalar::Bit(b)
    }

    pub fn nat(n: u64) -> Self {
        Scalar::Nat(BigUint::from(n))
    }

    pub fn rat(num: i64, den: i64) -> Self {
        Scalar::Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn min_plus(num: i64, den: i64) -> Self {
        Scalar::MinPlus(Extended::Finite(BigRational::new(num.into(), den.into())))
    }

    pub fn min_plus_infinity() -> Self {
        Scalar::MinPlus(Extended::Infinity)
    }

    pub fn elem(i: u16) -> Self {
        Scalar::Elem(i)
    }

    pub fn as_bit(&self) -> Option<bool> {
        match self {
            Scalar::Bit(b) => Some(*b),
            _ => None,
        }
    }

    pub fn as_nat(&self) -> Option<&BigUint> {
        match self {
            Scalar::Nat(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_elem(&self) -> Option<u16> {
        match self {
            Scalar::Elem(i) => Some(*i),
            _ => None,
        }
    }
}

/// Formats a rational without a denominator when it is integral.
pub(crate) fn format_rational(r: &BigRational) -> String {
    use alloc::format;
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` into a rational.
pub(crate) fn parse_rational(token: &str) -> Option<BigRational> {
    use num_bigint::BigInt;
    let mut parts = token.splitn(2, '/');
    let numer: BigInt = parts.next()?.parse().ok()?;
    match parts.next() {
        None => Some(BigRational::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d.parse().ok()?;
            if denom == BigInt::from(0) {
                None
            } else {
                Some(BigRational::new(numer, denom))
            }
        }
    }
}
