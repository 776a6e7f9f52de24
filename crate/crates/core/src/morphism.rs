//! Semiring morphisms.

use alloc::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::semimodule::SemiMatrix;
use crate::system::ScalarSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
enum MorphismKind {
    Identity,
    /// Zero to zero, every nonzero element to one.
    CharBool,
}

/// A structure-preserving map between scalar systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiringMorphism {
    source: Arc<ScalarSystem>,
    target: Arc<ScalarSystem>,
    kind: MorphismKind,
    entire: bool,
}

impl SemiringMorphism {
    pub fn identity(system: Arc<ScalarSystem>) -> Self {
        SemiringMorphism {
            source: system.clone(),
            target: system,
            kind: MorphismKind::Identity,
            entire: true,
        }
    }

    pub fn source(&self) -> &Arc<ScalarSystem> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ScalarSystem> {
        &self.target
    }

    /// A morphism is entire when nonzero inputs map to nonzero outputs.
    pub fn is_entire(&self) -> bool {
        self.entire
    }

    pub fn apply(&self, a: &Scalar) -> Result<Scalar> {
        if !self.source.contains(a) {
            return Err(Error::InvalidScalar);
        }
        match self.kind {
            MorphismKind::Identity => Ok(a.clone()),
            MorphismKind::CharBool => Ok(Scalar::Bit(!self.source.is_zero(a)?)),
        }
    }

    /// Entrywise image of a matrix.
    pub fn apply_matrix(&self, m: &SemiMatrix) -> Result<SemiMatrix> {
        if m.system() != self.source() {
            return Err(Error::SystemMismatch);
        }
        let mut entries = alloc::vec::Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                entries.push(self.apply(m.entry(i, j))?);
            }
        }
        SemiMatrix::new(self.target.clone(), m.rows(), m.cols(), entries)
    }

    /// Exhaustively checks the morphism laws on a finite source carrier:
    /// preservation of zero, one, sums, and products, plus the entireness
    /// claim.
    pub fn verify_laws(&self) -> Result<bool> {
        let elems = self.source.elements().ok_or(Error::InfiniteCarrier)?;
        if self.apply(&self.source.zero())? != self.target.zero() {
            return Ok(false);
        }
        if self.apply(&self.source.one())? != self.target.one() {
            return Ok(false);
        }
        for a in &elems {
            if self.entire
                && !self.source.is_zero(a)?
                && self.target.is_zero(&self.apply(a)?)?
            {
                return Ok(false);
            }
            for b in &elems {
                let sum = self.apply(&self.source.add(a, b)?)?;
                if sum != self.target.add(&self.apply(a)?, &self.apply(b)?)? {
                    return Ok(false);
                }
                let prod = self.apply(&self.source.mul(a, b)?)?;
                if prod != self.target.mul(&self.apply(a)?, &self.apply(b)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The characteristic Boolean morphism of a system: zero to 0, everything
/// else to 1. It is a semiring morphism exactly when the system is
/// zerosumfree and entire, and it is always entire.
pub fn characteristic_bool_morphism(system: &Arc<ScalarSystem>) -> Result<SemiringMorphism> {
    let zerosumfree = system.is_zerosumfree();
    let entire = system.is_entire();
    if !zerosumfree || !entire {
        return Err(Error::CharBoolUnavailable { zerosumfree, entire });
    }
    Ok(SemiringMorphism {
        source: system.clone(),
        target: Arc::new(ScalarSystem::boolean()),
        kind: MorphismKind::CharBool,
        entire: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::power_dioid;
    use crate::monoid::MonoidTable;
    use alloc::vec::Vec;

    #[test]
    fn char_bool_on_naturals() {
        let nat = Arc::new(ScalarSystem::naturals());
        let phi = characteristic_bool_morphism(&nat).unwrap();
        assert_eq!(phi.apply(&Scalar::nat(7)).unwrap(), Scalar::Bit(true));
        assert_eq!(phi.apply(&Scalar::nat(0)).unwrap(), Scalar::Bit(false));
        assert!(phi.is_entire());
    }

    #[test]
    fn char_bool_on_power_dioid_laws() {
        let sys = Arc::new(power_dioid(&MonoidTable::two_mult()).unwrap());
        let phi = characteristic_bool_morphism(&sys).unwrap();
        assert_eq!(phi.apply(&sys.zero()).unwrap(), Scalar::Bit(false));
        assert!(phi.verify_laws().unwrap());
    }

    #[test]
    fn char_bool_rejects_ring() {
        // Mod-6 ring: 2 · 3 = 0 exhibits a zero divisor.
        let mut add = Vec::new();
        let mut mul = Vec::new();
        for a in 0..6u16 {
            for b in 0..6u16 {
                add.push((a + b) % 6);
                mul.push((a * b) % 6);
            }
        }
        let sys = Arc::new(ScalarSystem::from_tables("z6ring", 6, add, mul, 0, 1).unwrap());
        assert_eq!(
            characteristic_bool_morphism(&sys),
            Err(Error::CharBoolUnavailable {
                zerosumfree: false,
                entire: false
            })
        );
    }

    #[test]
    fn identity_morphism_round_trips() {
        let b = Arc::new(ScalarSystem::boolean());
        let id = SemiringMorphism::identity(b);
        assert_eq!(id.apply(&Scalar::Bit(true)).unwrap(), Scalar::Bit(true));
        assert!(id.verify_laws().unwrap());
    }
}
