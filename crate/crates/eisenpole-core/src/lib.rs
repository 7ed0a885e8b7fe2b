//! Exact computation of poles of degenerate spherical Eisenstein series on
//! split simple groups of rank at most eight, and of the identities relating
//! leading terms of such series at different parabolics.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: weights
//! are rational vectors, Gindikin–Karpelevich factors are multisets of affine
//! zeta arguments, and Laurent coefficients live in a free polynomial ring over
//! formal zeta symbols. Numerical evaluation of those symbols is delegated to
//! a [`laurent::Certifier`] supplied by the caller.
//!
//! Module map:
//!
//! * [`rootdata`]: Cartan data, roots and coroots, Weyl words, coset trees.
//! * [`characters`]: the character families `χ_{P,s}`, modular characters,
//!   the `B` matrix and the `N_ε` counts.
//! * [`gkfactors`]: zeta-quotient products `C_w(χ_s)` and residue factors.
//! * [`laurent`]: truncated Laurent series over formal zeta symbols.
//! * [`poles`]: potential poles, equivalence classes, orders, `L²` verdicts
//!   and orbit labels.
//! * [`identities`]: admissible data and identity constants.

#![no_std]

extern crate alloc;

use alloc::string::String;
use core::fmt;

pub mod characters;
pub mod gkfactors;
pub mod identities;
pub mod laurent;
pub mod poles;
pub mod rootdata;

/// Exact rationals used for weights and affine parameters.
pub type Q = num_rational::Ratio<i64>;

/// Arbitrary-precision rationals used for symbolic coefficients.
pub type BigQ = num_rational::BigRational;

pub use characters::{AffLin, AffineWeight, BMatrix, Convention};
pub use gkfactors::{ResidueFactor, ZetaProduct};
pub use identities::{AdmissibleData, IdentityConstant};
pub use laurent::{Atom, LaurentPoly, SymPoly};
pub use poles::{EquivalenceClass, PoleReport};
pub use rootdata::{CartanType, RootDatum, WeylElement};

/// Errors raised by the core library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The requested Cartan type is not supported (unknown letter or rank).
    UnsupportedType(String),
    /// A parabolic index is out of range for the group.
    BadParabolic { rank: usize, index: usize },
    /// Two Laurent series were combined at different expansion points.
    MismatchedPoint,
    /// A zeta argument is constantly equal to a pole of the completed zeta.
    DegenerateArgument,
    /// A claimed reduced decomposition `w = w1 w2` is not length-additive.
    NotReduced,
    /// Every retained Laurent coefficient vanished.
    Inconclusive,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedType(s) => write!(f, "unsupported group type `{}`", s),
            Error::BadParabolic { rank, index } => {
                write!(f, "parabolic index {} out of range 1..={}", index, rank)
            }
            Error::MismatchedPoint => f.write_str("Laurent series expanded at different points"),
            Error::DegenerateArgument => f.write_str("zeta argument is constantly 0 or 1"),
            Error::NotReduced => f.write_str("decomposition is not length-additive"),
            Error::Inconclusive => f.write_str("all retained Laurent coefficients vanish"),
        }
    }
}

impl core::error::Error for Error {}

/// Parses `a/b` or an integer into a rational.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Q::new(n.trim().parse().ok()?, d))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

/// Formats a rational as `a/b`, or as an integer when the denominator is one.
pub fn fmt_q(q: &Q) -> String {
    if *q.denom() == 1 {
        alloc::format!("{}", q.numer())
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}
