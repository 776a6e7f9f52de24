//! Exhaustive axiom verification for finite carriers.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::system::{ScalarSystem, SystemFlags, TriState};

/// Outcome of one exhaustive axiom sweep. Derived classifications
/// (`semiring_ok`, `is_dioid`, `is_mcos`) are accessors so they can never
/// drift from the recorded checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// Additive and multiplicative monoid laws (associativity,
    /// commutativity of addition, identities).
    pub monoid_laws: bool,
    /// Multiplication commutes.
    pub commutative: bool,
    /// Multiplication distributes over addition on both sides.
    pub distributivity: bool,
    /// `a · 0 = 0` for every `a`.
    pub zero_absorption: bool,
    /// The canonical preorder is antisymmetric.
    pub order_antisymmetric: bool,
    /// `a + b = 0` implies `a = b = 0`.
    pub zerosumfree: bool,
    /// No zero divisors.
    pub entire: bool,
    /// The nonzero multiplicatively absorbing element, if present.
    pub absorbing: Option<Scalar>,
    /// The additively absorbing element, if present.
    pub top: Option<Scalar>,
    /// Human-readable counterexamples for whatever failed.
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn semiring_ok(&self) -> bool {
        self.monoid_laws && self.distributivity && self.zero_absorption
    }

    pub fn is_dioid(&self) -> bool {
        self.semiring_ok() && self.order_antisymmetric
    }

    pub fn is_mcos(&self) -> bool {
        self.is_dioid() && self.commutative && self.absorbing.is_some()
    }

    /// `m`-absorption as a pass/fail group: a nonzero multiplicatively
    /// absorbing element exists.
    pub fn m_absorption(&self) -> bool {
        self.absorbing.is_some()
    }

    pub fn flags(&self) -> SystemFlags {
        SystemFlags {
            commutative: TriState::from_bool(self.commutative),
            dioid: TriState::from_bool(self.is_dioid()),
            mcos: TriState::from_bool(self.is_mcos()),
        }
    }
}

/// Exhaustively checks every axiom group over an explicit finite carrier.
/// Infinite systems are rejected; their flags are set analytically at
/// construction instead.
pub fn verify_axioms(sys: &ScalarSystem) -> Result<AxiomReport> {
    let elems = sys.elements().ok_or(Error::InfiniteCarrier)?;
    let k = elems.len();
    let zero = sys.zero();
    let one = sys.one();
    let mut failures = Vec::new();

    let lit = |a: &Scalar| sys.format_scalar(a);

    // Monoid laws.
    let mut monoid_laws = true;
    for a in &elems {
        if sys.add(a, &zero)? != *a {
            monoid_laws = false;
            failures.push(format!("{} + 0 != {}", lit(a), lit(a)));
        }
        if sys.mul(a, &one)? != *a || sys.mul(&one, a)? != *a {
            monoid_laws = false;
            failures.push(format!("1 · {} != {}", lit(a), lit(a)));
        }
    }
    'add_comm: for a in &elems {
        for b in &elems {
            if sys.add(a, b)? != sys.add(b, a)? {
                monoid_laws = false;
                failures.push(format!("{} + {} not commutative", lit(a), lit(b)));
                break 'add_comm;
            }
        }
    }
    'add_assoc: for a in &elems {
        for b in &elems {
            let ab = sys.add(a, b)?;
            for c in &elems {
                if sys.add(&ab, c)? != sys.add(a, &sys.add(b, c)?)? {
                    monoid_laws = false;
                    failures.push(format!(
                        "addition not associative at ({}, {}, {})",
                        lit(a),
                        lit(b),
                        lit(c)
                    ));
                    break 'add_assoc;
                }
            }
        }
    }
    'mul_assoc: for a in &elems {
        for b in &elems {
            let ab = sys.mul(a, b)?;
            for c in &elems {
                if sys.mul(&ab, c)? != sys.mul(a, &sys.mul(b, c)?)? {
                    monoid_laws = false;
                    failures.push(format!(
                        "multiplication not associative at ({}, {}, {})",
                        lit(a),
                        lit(b),
                        lit(c)
                    ));
                    break 'mul_assoc;
                }
            }
        }
    }

    let mut commutative = true;
    'mul_comm: for a in &elems {
        for b in &elems {
            if sys.mul(a, b)? != sys.mul(b, a)? {
                commutative = false;
                failures.push(format!("{} · {} not commutative", lit(a), lit(b)));
                break 'mul_comm;
            }
        }
    }

    let mut distributivity = true;
    'distrib: for a in &elems {
        for b in &elems {
            for c in &elems {
                let lhs = sys.mul(a, &sys.add(b, c)?)?;
                let rhs = sys.add(&sys.mul(a, b)?, &sys.mul(a, c)?)?;
                let lhs2 = sys.mul(&sys.add(a, b)?, c)?;
                let rhs2 = sys.add(&sys.mul(a, c)?, &sys.mul(b, c)?)?;
                if lhs != rhs || lhs2 != rhs2 {
                    distributivity = false;
                    failures.push(format!(
                        "distributivity fails at ({}, {}, {})",
                        lit(a),
                        lit(b),
                        lit(c)
                    ));
                    break 'distrib;
                }
            }
        }
    }

    let mut zero_absorption = true;
    for a in &elems {
        if sys.mul(a, &zero)? != zero || sys.mul(&zero, a)? != zero {
            zero_absorption = false;
            failures.push(format!("{} · 0 != 0", lit(a)));
        }
    }

    // Canonical preorder antisymmetry: a <= b and b <= a force a = b.
    let mut leq = alloc::vec![false; k * k];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            leq[i * k + j] = sys.canonical_leq(a, b)?;
        }
    }
    let mut order_antisymmetric = true;
    'antisym: for i in 0..k {
        for j in 0..k {
            if i != j && leq[i * k + j] && leq[j * k + i] {
                order_antisymmetric = false;
                failures.push(format!(
                    "canonical preorder not antisymmetric: {} <= {} <= {}",
                    lit(&elems[i]),
                    lit(&elems[j]),
                    lit(&elems[i])
                ));
                break 'antisym;
            }
        }
    }

    let zerosumfree = sys.is_zerosumfree();
    if !zerosumfree {
        failures.push("not zerosumfree".into());
    }
    let entire = sys.is_entire();
    if !entire {
        failures.push("has zero divisors".into());
    }

    // Nonzero multiplicatively absorbing element, by exhaustive scan.
    // Uniqueness is a theorem; the scan takes the first hit.
    let absorbing = elems.iter().find(|&x| {
        *x != zero
            && elems.iter().all(|a| {
                *a == zero || sys.mul(a, x).map(|p| p == *x).unwrap_or(false)
            })
    });

    // Additively absorbing element.
    let top = elems.iter().find(|&t| {
        elems
            .iter()
            .all(|a| sys.add(t, a).map(|s| s == *t).unwrap_or(false))
    });

    Ok(AxiomReport {
        monoid_laws,
        commutative,
        distributivity,
        zero_absorption,
        order_antisymmetric,
        zerosumfree,
        entire,
        absorbing: absorbing.cloned(),
        top: top.cloned(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{lagrassa_embed, power_dioid, rooted_dioid};
    use crate::monoid::MonoidTable;
    use alloc::vec::Vec;

    fn mod_ring(n: u16) -> ScalarSystem {
        let mut add = Vec::new();
        let mut mul = Vec::new();
        for a in 0..n {
            for b in 0..n {
                add.push((a + b) % n);
                mul.push((a * b) % n);
            }
        }
        ScalarSystem::from_tables(&alloc::format!("z{n}ring"), n as usize, add, mul, 0, 1)
            .unwrap()
    }

    #[test]
    fn boolean_all_pass() {
        let report = verify_axioms(&ScalarSystem::boolean()).unwrap();
        assert!(report.semiring_ok());
        assert!(report.is_dioid());
        assert!(report.is_mcos());
        assert_eq!(report.absorbing, Some(Scalar::Bit(true)));
        assert_eq!(report.top, Some(Scalar::Bit(true)));
    }

    #[test]
    fn mod6_ring_is_not_a_dioid() {
        // A group's canonical preorder is trivial, so antisymmetry fails.
        let sys = mod_ring(6);
        let report = verify_axioms(&sys).unwrap();
        assert!(report.semiring_ok());
        assert!(!report.order_antisymmetric);
        assert!(!report.is_dioid());
        assert!(!report.zerosumfree);
        assert!(!report.entire); // 2 · 3 = 0
        assert_eq!(report.flags().dioid, TriState::False);
    }

    #[test]
    fn power_dioid_passes_and_flags_match() {
        for sys in [
            power_dioid(&MonoidTable::trivial()).unwrap(),
            power_dioid(&MonoidTable::two_mult()).unwrap(),
            power_dioid(&MonoidTable::cyclic(3).unwrap()).unwrap(),
            rooted_dioid(&MonoidTable::two_mult()).unwrap(),
            lagrassa_embed(&MonoidTable::trivial()).unwrap(),
            lagrassa_embed(&MonoidTable::cyclic(2).unwrap()).unwrap(),
        ] {
            let report = verify_axioms(&sys).unwrap();
            assert!(report.semiring_ok(), "{}: {:?}", sys.name(), report.failures);
            assert!(report.is_dioid(), "{}: {:?}", sys.name(), report.failures);
            assert!(report.zerosumfree && report.entire, "{}", sys.name());
            // The analytically-set flags agree with the exhaustive run.
            assert_eq!(report.flags(), sys.flags(), "{}", sys.name());
            assert_eq!(report.absorbing.as_ref(), sys.absorbing(), "{}", sys.name());
            assert_eq!(report.top.as_ref(), sys.top(), "{}", sys.name());
        }
    }

    #[test]
    fn infinite_carrier_rejected() {
        assert_eq!(
            verify_axioms(&ScalarSystem::naturals()),
            Err(Error::InfiniteCarrier)
        );
    }

    #[test]
    fn apply_report_updates_flags() {
        let mut sys = mod_ring(2);
        // The mod-2 ring: 1 + 1 = 0, a group, so not a dioid.
        let report = verify_axioms(&sys).unwrap();
        sys.apply_report(&report);
        assert_eq!(sys.flags().dioid, TriState::False);
        assert_eq!(sys.flags().commutative, TriState::True);
    }
}
