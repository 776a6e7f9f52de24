//! Linear algebra over naturally-ordered semirings (dioids), with special
//! support for dioids that carry a nonzero multiplicatively absorbing
//! element. Provides:
//!
//! * runtime scalar systems (Boolean, naturals, min-plus, nonnegative
//!   rationals, and finite systems built from operation tables), together
//!   with exhaustive axiom verification and the canonical order;
//! * the power-dioid, rooted-dioid and absorbing-extension constructions
//!   that manufacture finite dioids from commutative monoids;
//! * vectors and matrices over any of these systems, linear attachment
//!   detection with explicit certificates, and the constructive lift of
//!   attached Boolean vectors to the naturals;
//! * the bideterminant, its attachment criteria, and the fast equality
//!   decision procedure that reduces to even-cycle detection in a digraph;
//! * set-family checkers for the distinct-union and disparate-union
//!   properties, with witness extraction and small-scale enumeration of
//!   maximal families.
//!
//! The crate is `no_std` (it requires `alloc`); all values are immutable
//! after construction and every operation is a pure function.

#![no_std]

extern crate alloc;

pub mod attach;
pub mod axioms;
pub mod bidet;
pub mod construct;
pub mod error;
pub mod evencycle;
pub mod exact;
pub mod monoid;
pub mod morphism;
pub mod perm;
pub mod realroot;
pub mod sample;
pub mod scalar;
pub mod semimodule;
pub mod setfamily;
pub mod system;

pub use attach::{
    attach_bruteforce, attach_bruteforce_full, attach_mcos, attach_via_real, check_certificate,
    lift_to_nat, transfer_attachment, AttachmentCertificate, SemilinearMap,
};
pub use axioms::{verify_axioms, AxiomReport};
pub use bidet::{
    bidet, bidet_property_suite, bool_attached_by_bidet, diagonal_weights, mcos_attached_by_bidet,
    Bideterminant, DiagonalWeight, PropertyCheck, PropertySuiteReport,
};
pub use construct::{lagrassa_embed, power_dioid, rooted_dioid};
pub use error::{Error, Result};
pub use evencycle::{
    build_reduction_digraph, complement_matrix, decide_bidet_equal, has_even_cycle,
    zero_weight_permutation, Branch, DecisionTrace, Digraph, Verdict,
};
pub use monoid::MonoidTable;
pub use morphism::{characteristic_bool_morphism, SemiringMorphism};
pub use realroot::{real_root_witness, RealRootWitness};
pub use scalar::{Extended, Scalar};
pub use semimodule::{SemiMatrix, SemiVector};
pub use setfamily::{
    certify_maximal, check_disparate_union, check_distinct_union, enumerate_disparate_maximal,
    incidence_matrix, verify_unique_distinct_maximal, CertifyOutcome, DisparateMethod, SetFamily,
    UnionWitness,
};
pub use system::{ScalarSystem, SystemFlags, TriState};
