//! Exact computations in the 2-category of G-symmetric projective bimodules
//! over a finite-dimensional basic algebra with a finite abelian group action.
//!
//! Everything here is pure algebra over a cyclotomic field, so the crate is
//! `no_std` and only needs `alloc`. Parsing, reports and the command line live
//! in the companion `gsym` crate.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod algebra;
pub mod bimod;
pub mod completion;
pub mod group;
pub mod mat;
pub mod rat;
pub mod scalars;
pub mod twocat;
pub mod xcat;

use alloc::string::String;
use core::fmt;

pub use rat::Rat;
pub use scalars::{make_field, root_of_unity, Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidConductor,
    RootNotInField { k: u32, m: u32 },
    NotFiniteDimensional,
    BadPresentation(String),
    NotSelfInjective,
    NotAutomorphism(String),
    NotAbelian,
    BlocksNotPreserved,
    IdempotentsNotInvariant,
    ActionNotFaithful,
    BadCharacter,
    IncoherentWitnesses,
    FieldNotSplitting,
    UnsupportedAlgebra(String),
    NoAdjunction,
    NotInner,
    NeedsLargerConductor,
    ShapeMismatch(String),
    IndexOutOfRange,
    Invalid(String),
    Internal(String),
}

impl Error {
    /// Stable kebab-case name, used in reports and exit messages.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidConductor => "invalid-conductor",
            Error::RootNotInField { .. } => "root-not-in-field",
            Error::NotFiniteDimensional => "not-finite-dimensional",
            Error::BadPresentation(_) => "bad-presentation",
            Error::NotSelfInjective => "not-self-injective",
            Error::NotAutomorphism(_) => "not-automorphism",
            Error::NotAbelian => "not-abelian",
            Error::BlocksNotPreserved => "blocks-not-preserved",
            Error::IdempotentsNotInvariant => "idempotents-not-invariant",
            Error::ActionNotFaithful => "action-not-faithful",
            Error::BadCharacter => "bad-character",
            Error::IncoherentWitnesses => "incoherent-witnesses",
            Error::FieldNotSplitting => "field-not-splitting",
            Error::UnsupportedAlgebra(_) => "unsupported-algebra",
            Error::NoAdjunction => "no-adjunction",
            Error::NotInner => "not-inner",
            Error::NeedsLargerConductor => "needs-larger-conductor",
            Error::ShapeMismatch(_) => "shape-mismatch",
            Error::IndexOutOfRange => "index-out-of-range",
            Error::Invalid(_) => "invalid",
            Error::Internal(_) => "internal-error",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RootNotInField { k, m } => {
                write!(f, "root-not-in-field: zeta_{} is not in Q(zeta_{})", k, m)
            }
            Error::BadPresentation(s)
            | Error::NotAutomorphism(s)
            | Error::UnsupportedAlgebra(s)
            | Error::ShapeMismatch(s)
            | Error::Invalid(s)
            | Error::Internal(s) => write!(f, "{}: {}", self.name(), s),
            Error::NeedsLargerConductor => {
                write!(f, "needs-larger-conductor: raise m in the [field] section")
            }
            _ => f.write_str(self.name()),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
